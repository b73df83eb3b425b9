//! Graph automorphisms and group actions on vertices, edges, and cycles.
//!
//! The automorphism search is a backtracking assignment with candidate images
//! pruned by (degree, sorted distance profile); every element it returns is
//! re-verified to preserve all edges. Actions on cycle domains re-canonicalize
//! images, so "fixed" on those domains means setwise invariant.

use std::collections::HashMap;

use crate::graph::{Cycle, SimpleGraph, VertexId};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::rational::Rational;
use crate::{Error, Result};

/// True iff `p` is an adjacency-preserving bijection of `g`'s vertices.
pub fn is_graph_automorphism(g: &SimpleGraph, p: &Perm) -> bool {
    if p.degree() != g.vertex_count() {
        return false;
    }
    g.edges()
        .iter()
        .all(|&(a, b)| g.has_edge(p.apply(a), p.apply(b)))
}

/// The full automorphism group of `g`, found by exhaustive backtracking.
pub fn automorphism_group(g: &SimpleGraph) -> PermGroup {
    let n = g.vertex_count();
    let profiles: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut d: Vec<usize> = (0..n).map(|u| g.distance(v, u).expect("valid")).collect();
            d.sort_unstable();
            d
        })
        .collect();

    let mut images: Vec<u8> = vec![0; n];
    let mut used = vec![false; n];
    let mut found: Vec<Perm> = Vec::new();
    search(g, &profiles, 0, &mut images, &mut used, &mut found);

    for p in &found {
        assert!(
            is_graph_automorphism(g, p),
            "search produced a non-automorphism"
        );
    }
    found.sort_unstable();

    // Greedy generator extraction keeps the generator list reproducible.
    let mut gens: Vec<Perm> = Vec::new();
    let mut closed = vec![Perm::identity(n)];
    for p in &found {
        if closed.binary_search(p).is_ok() {
            continue;
        }
        gens.push(p.clone());
        closed = PermGroup::from_generators(n, gens.clone())
            .expect("same degree")
            .elements()
            .to_vec();
        if closed.len() == found.len() {
            break;
        }
    }
    PermGroup::from_closed_elements(n, gens, found)
}

fn search(
    g: &SimpleGraph,
    profiles: &[Vec<usize>],
    v: usize,
    images: &mut Vec<u8>,
    used: &mut Vec<bool>,
    found: &mut Vec<Perm>,
) {
    let n = g.vertex_count();
    if v == n {
        found.push(Perm::from_images(images.clone()).expect("bijection by construction"));
        return;
    }
    'candidates: for w in 0..n {
        if used[w] || profiles[v] != profiles[w] {
            continue;
        }
        for (prev, &prev_image) in images.iter().enumerate().take(v) {
            if g.has_edge(prev, v) != g.has_edge(prev_image as usize, w) {
                continue 'candidates;
            }
        }
        images[v] = w as u8;
        used[w] = true;
        search(g, profiles, v + 1, images, used, found);
        used[w] = false;
    }
}

/// Which set a group acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    Vertices,
    Edges,
    /// Canonical simple cycles of the given length.
    Cycles(usize),
}

/// A point of an action domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActionPoint {
    Vertex(VertexId),
    Edge(VertexId, VertexId),
    Cycle(Cycle),
}

/// An indexed action domain built from a graph.
#[derive(Debug, Clone)]
pub struct DomainPoints {
    kind: DomainKind,
    points: Vec<ActionPoint>,
    index: HashMap<ActionPoint, usize>,
}

impl DomainPoints {
    /// A domain with no points, for cycle lengths a graph cannot host.
    pub fn empty(kind: DomainKind) -> Self {
        DomainPoints {
            kind,
            points: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn build(g: &SimpleGraph, kind: DomainKind) -> Result<Self> {
        let points: Vec<ActionPoint> = match kind {
            DomainKind::Vertices => (0..g.vertex_count()).map(ActionPoint::Vertex).collect(),
            DomainKind::Edges => g
                .edges()
                .iter()
                .map(|&(a, b)| ActionPoint::Edge(a, b))
                .collect(),
            DomainKind::Cycles(k) => g
                .enumerate_cycles(k)?
                .into_iter()
                .map(ActionPoint::Cycle)
                .collect(),
        };
        let index = points
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Ok(DomainPoints {
            kind,
            points,
            index,
        })
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ActionPoint] {
        &self.points
    }

    /// Index of the image of point `idx` under `p`; cycle images are
    /// re-canonicalized before lookup.
    pub fn apply(&self, p: &Perm, idx: usize) -> Result<usize> {
        let image = match &self.points[idx] {
            ActionPoint::Vertex(v) => ActionPoint::Vertex(p.apply(*v)),
            ActionPoint::Edge(a, b) => {
                let (x, y) = (p.apply(*a), p.apply(*b));
                ActionPoint::Edge(x.min(y), x.max(y))
            }
            ActionPoint::Cycle(c) => ActionPoint::Cycle(c.map(|v| p.apply(v))),
        };
        self.index
            .get(&image)
            .copied()
            .ok_or_else(|| Error::NotAutomorphism("image left the action domain".into()))
    }
}

/// A group together with a domain it acts on.
#[derive(Debug)]
pub struct GroupAction<'g> {
    group: &'g PermGroup,
    domain: DomainPoints,
}

/// Builds the action of `group` on the chosen domain of `g`, after checking
/// that every generator is an automorphism of `g`.
pub fn induced_action<'g>(
    group: &'g PermGroup,
    g: &SimpleGraph,
    kind: DomainKind,
) -> Result<GroupAction<'g>> {
    if group.degree() != g.vertex_count() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: g.vertex_count(),
        });
    }
    for gen in group.generators() {
        if !is_graph_automorphism(g, gen) {
            return Err(Error::NotAutomorphism(
                "generator does not preserve the edge set".into(),
            ));
        }
    }
    Ok(GroupAction {
        group,
        domain: DomainPoints::build(g, kind)?,
    })
}

impl<'g> GroupAction<'g> {
    /// Assembles an action from parts; the caller vouches that the group
    /// maps the domain to itself.
    pub fn with_domain(group: &'g PermGroup, domain: DomainPoints) -> Self {
        GroupAction { group, domain }
    }

    pub fn group(&self) -> &PermGroup {
        self.group
    }

    pub fn domain(&self) -> &DomainPoints {
        &self.domain
    }

    /// Domain points fixed by `p` (setwise, on cycle and edge domains).
    /// `p` must belong to the acting group.
    pub fn fixed_points(&self, p: &Perm) -> Result<Vec<usize>> {
        if !self.group.contains(p) {
            return Err(Error::Input("element is not in the acting group".into()));
        }
        self.fixed_points_unchecked(p)
    }

    fn fixed_points_unchecked(&self, p: &Perm) -> Result<Vec<usize>> {
        let mut fixed = Vec::new();
        for idx in 0..self.domain.len() {
            if self.domain.apply(p, idx)? == idx {
                fixed.push(idx);
            }
        }
        Ok(fixed)
    }

    /// Orbits of the whole group, each sorted, ordered by least point.
    pub fn orbits(&self) -> Result<Vec<Vec<usize>>> {
        self.orbits_under(self.group.generators())
    }

    /// Orbits of the cyclic group generated by one permutation.
    pub fn orbits_of(&self, p: &Perm) -> Result<Vec<Vec<usize>>> {
        self.orbits_under(std::slice::from_ref(p))
    }

    fn orbits_under(&self, gens: &[Perm]) -> Result<Vec<Vec<usize>>> {
        let total = self.domain.len();
        let mut seen = vec![false; total];
        let mut orbits = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut cursor = 0;
            while cursor < orbit.len() {
                let x = orbit[cursor];
                cursor += 1;
                for g in gens {
                    let y = self.domain.apply(g, x)?;
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        Ok(orbits)
    }

    pub fn is_transitive(&self) -> Result<bool> {
        Ok(self.orbits()?.len() == 1)
    }

    /// Exact orbit count by averaging fixed points over the group.
    pub fn burnside_orbit_count(&self) -> Result<Rational> {
        let mut total: i64 = 0;
        for p in self.group.elements() {
            total += self.fixed_points_unchecked(p)?.len() as i64;
        }
        Ok(Rational::new(total, self.group.order() as i64))
    }
}

/// Burnside average with externally supplied fixed-point counts, for
/// hypothetical actions whose counts come from proved constraints rather
/// than a concrete domain. The override must cover every element.
pub fn burnside_with_override(
    group: &PermGroup,
    fix_count: impl Fn(&Perm) -> Option<i64>,
) -> Result<Rational> {
    let mut total: i64 = 0;
    for p in group.elements() {
        let count = fix_count(p)
            .ok_or_else(|| Error::IncompleteOverride(format!("order-{} element", p.order())))?;
        total += count;
    }
    Ok(Rational::new(total, group.order() as i64))
}

/// How a permutation moves an invariant cycle: as a rotation by `step`
/// positions (angle 2π·step/k on a k-cycle), a reflection, or the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationDescriptor {
    Identity,
    Rotation { step: usize },
    Reflection,
}

/// Classifies the action induced by `p` on the setwise-invariant cycle `c`.
pub fn cycle_action_descriptor(p: &Perm, c: &Cycle) -> Result<RotationDescriptor> {
    let verts = c.vertices();
    let k = verts.len();
    let position: HashMap<VertexId, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut image_pos = Vec::with_capacity(k);
    for &v in verts {
        let img = p.apply(v);
        let pos = position
            .get(&img)
            .ok_or_else(|| Error::NotInvariant(format!("vertex {v} maps off the cycle")))?;
        image_pos.push(*pos);
    }
    if image_pos.iter().enumerate().all(|(i, &ip)| ip == i) {
        return Ok(RotationDescriptor::Identity);
    }
    let step = image_pos[0];
    if (0..k).all(|i| image_pos[i] == (i + step) % k) {
        return Ok(RotationDescriptor::Rotation { step });
    }
    if (0..k).all(|i| image_pos[i] == (step + k - i) % k) {
        return Ok(RotationDescriptor::Reflection);
    }
    Err(Error::NotInvariant(
        "induced map on the cycle is not a polygon symmetry".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabelingMap;

    fn heawood() -> SimpleGraph {
        SimpleGraph::heawood_standard()
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(automorphism_group(&heawood()).order(), 336);
        assert_eq!(
            automorphism_group(&SimpleGraph::complete_graph(3).unwrap()).order(),
            6
        );
        assert_eq!(
            automorphism_group(&SimpleGraph::path_graph(3).unwrap()).order(),
            2
        );
    }

    #[test]
    fn every_automorphism_preserves_every_edge() {
        let g = heawood();
        let aut = automorphism_group(&g);
        for p in aut.elements() {
            for &(a, b) in g.edges() {
                assert!(g.has_edge(p.apply(a), p.apply(b)));
            }
        }
    }

    #[test]
    fn aut_spectrum_matches_pgl27() {
        let aut = automorphism_group(&heawood());
        let spectrum = aut.order_spectrum();
        let keys: Vec<u64> = spectrum.keys().copied().collect();
        assert_eq!(keys, vec![1, 2, 3, 4, 6, 7, 8]);
        assert_eq!(
            spectrum,
            std::collections::BTreeMap::from([
                (1, 1),
                (2, 49),
                (3, 56),
                (4, 42),
                (6, 56),
                (7, 48),
                (8, 84),
            ])
        );
    }

    #[test]
    fn domain_sizes() {
        let g = heawood();
        let aut = automorphism_group(&g);
        let on_cycles14 = induced_action(&aut, &g, DomainKind::Cycles(14)).unwrap();
        assert_eq!(on_cycles14.domain().len(), 24);
        let on_edges = induced_action(&aut, &g, DomainKind::Edges).unwrap();
        assert_eq!(on_edges.domain().len(), 21);
        let on_vertices = induced_action(&aut, &g, DomainKind::Vertices).unwrap();
        assert_eq!(on_vertices.domain().len(), 14);
    }

    #[test]
    fn non_automorphisms_are_rejected() {
        let g = heawood();
        let lab = LabelingMap::figure1(14);
        let bogus = Perm::parse("(1,2)", &lab).unwrap();
        let grp = PermGroup::generate(vec![bogus]).unwrap();
        assert!(matches!(
            induced_action(&grp, &g, DomainKind::Vertices),
            Err(Error::NotAutomorphism(_))
        ));
    }

    #[test]
    fn trivial_group_fixes_everything() {
        let g = heawood();
        let trivial = PermGroup::trivial(14);
        let action = induced_action(&trivial, &g, DomainKind::Cycles(12)).unwrap();
        let id = Perm::identity(14);
        assert_eq!(action.fixed_points(&id).unwrap().len(), 56);
        assert_eq!(action.orbits().unwrap().len(), 56);
        assert_eq!(action.burnside_orbit_count().unwrap(), Rational::from(56));
    }

    #[test]
    fn aut_is_transitive_on_vertices_and_cycles() {
        let g = heawood();
        let aut = automorphism_group(&g);
        for kind in [
            DomainKind::Vertices,
            DomainKind::Cycles(12),
            DomainKind::Cycles(14),
        ] {
            let action = induced_action(&aut, &g, kind).unwrap();
            assert!(action.is_transitive().unwrap());
            assert_eq!(action.burnside_orbit_count().unwrap(), Rational::from(1));
        }
    }

    #[test]
    fn a_z7_subgroup_is_not_vertex_transitive() {
        let g = heawood();
        let lab = LabelingMap::figure1(14);
        let r = Perm::parse("(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)", &lab).unwrap();
        let z7 = PermGroup::generate(vec![r.clone()]).unwrap();
        let action = induced_action(&z7, &g, DomainKind::Vertices).unwrap();
        assert!(!action.is_transitive().unwrap());
        assert_eq!(action.orbits().unwrap().len(), 2);

        // the same rotation splits the 21 edges into three orbits of 7
        let on_edges = induced_action(&z7, &g, DomainKind::Edges).unwrap();
        let orbits = on_edges.orbits_of(&r).unwrap();
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.len() == 7));
    }

    #[test]
    fn order_7_elements_fix_three_14_cycles_as_even_rotations() {
        let g = heawood();
        let aut = automorphism_group(&g);
        let action = induced_action(&aut, &g, DomainKind::Cycles(14)).unwrap();
        let sevens: Vec<&Perm> = aut.elements().iter().filter(|p| p.order() == 7).collect();
        assert_eq!(sevens.len(), 48);
        for p in sevens {
            let fixed = action.fixed_points(p).unwrap();
            assert_eq!(fixed.len(), 3);
            assert!(p.fixed_points().is_empty());
            for idx in fixed {
                let ActionPoint::Cycle(c) = &action.domain().points()[idx] else {
                    panic!("cycle domain")
                };
                match cycle_action_descriptor(p, c).unwrap() {
                    RotationDescriptor::Rotation { step } => assert_eq!(step % 2, 0),
                    other => panic!("expected rotation, got {other:?}"),
                }
            }
        }
    }

    #[test]
    fn order_3_elements_fix_two_vertices_and_rotate_two_12_cycles() {
        let g = heawood();
        let aut = automorphism_group(&g);
        let action = induced_action(&aut, &g, DomainKind::Cycles(12)).unwrap();
        let threes: Vec<&Perm> = aut.elements().iter().filter(|p| p.order() == 3).collect();
        assert_eq!(threes.len(), 56);
        for p in threes {
            let fixed_vertices = p.fixed_points();
            assert_eq!(fixed_vertices.len(), 2);
            assert_eq!(g.distance(fixed_vertices[0], fixed_vertices[1]).unwrap(), 3);
            let fixed_cycles = action.fixed_points(p).unwrap();
            assert_eq!(fixed_cycles.len(), 2);
            for idx in fixed_cycles {
                let ActionPoint::Cycle(c) = &action.domain().points()[idx] else {
                    panic!("cycle domain")
                };
                assert!(!c.contains(fixed_vertices[0]));
                assert!(!c.contains(fixed_vertices[1]));
                match cycle_action_descriptor(p, c).unwrap() {
                    RotationDescriptor::Rotation { step } => assert!(step == 4 || step == 8),
                    other => panic!("expected ±2π/3 rotation, got {other:?}"),
                }
            }
        }
    }

    #[test]
    fn burnside_override_reproduces_the_a4_obstruction() {
        let a4 = PermGroup::generate(vec![
            Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
        ])
        .unwrap();
        let value = burnside_with_override(&a4, |p| match p.order() {
            1 => Some(14),
            2 => Some(0),
            3 => Some(2),
            _ => None,
        })
        .unwrap();
        assert_eq!(value, Rational::new(30, 12));
        assert!(!value.is_integer());
    }

    #[test]
    fn incomplete_override_is_an_error() {
        let a4 = PermGroup::generate(vec![
            Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
        ])
        .unwrap();
        let result = burnside_with_override(&a4, |p| match p.order() {
            1 => Some(14),
            _ => None,
        });
        assert!(matches!(result, Err(Error::IncompleteOverride(_))));
    }

    #[test]
    fn descriptor_identifies_identity_and_rejects_non_invariant_cycles() {
        let g = heawood();
        let c = &g.enumerate_cycles(6).unwrap()[0];
        let id = Perm::identity(14);
        assert_eq!(
            cycle_action_descriptor(&id, c).unwrap(),
            RotationDescriptor::Identity
        );

        let lab = LabelingMap::figure1(14);
        let r = Perm::parse("(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)", &lab).unwrap();
        // a 6-cycle cannot be invariant under an order-7 automorphism
        assert!(cycle_action_descriptor(&r, c).is_err());
    }

    #[test]
    fn descriptor_reports_reflections() {
        let square = SimpleGraph::cycle_graph(4).unwrap();
        let c = &square.enumerate_cycles(4).unwrap()[0];
        let flip = Perm::from_images(vec![0, 3, 2, 1]).unwrap();
        assert_eq!(
            cycle_action_descriptor(&flip, c).unwrap(),
            RotationDescriptor::Reflection
        );
    }

    #[test]
    fn action_respects_composition_on_vertices() {
        let g = heawood();
        let aut = automorphism_group(&g);
        let action = induced_action(&aut, &g, DomainKind::Vertices).unwrap();
        let elements = aut.elements();
        // spot-check random-ish triples exhaustively over generators
        for p in aut.generators() {
            for q in elements.iter().step_by(17) {
                let pq = p.compose(q);
                for x in 0..action.domain().len() {
                    let via_q = action.domain().apply(q, x).unwrap();
                    let lhs = action.domain().apply(&pq, x).unwrap();
                    let rhs = action.domain().apply(p, via_q).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
