//! Finite permutation groups as explicitly closed element sets.
//!
//! Every group in scope has order at most a few hundred, so the engine is
//! exhaustive closure: no stabilizer chains, just breadth-first products.
//! Elements are kept sorted for deterministic downstream output.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use crate::perm::Perm;
use crate::{Error, Result};

/// A permutation group given by generators, with the full element set
/// computed on first use and cached.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: OnceLock<Vec<Perm>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
        }
    }
}

impl PermGroup {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: OnceLock::new(),
        }
    }

    /// Builds a group from generators sharing one ground set; an empty list
    /// yields the trivial group on `degree` points.
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        Ok(PermGroup {
            degree,
            generators,
            elements: OnceLock::new(),
        })
    }

    /// Builds a group from a nonempty generator list, taking the ground set
    /// from the first generator.
    pub fn generate(generators: Vec<Perm>) -> Result<Self> {
        let degree = generators
            .first()
            .ok_or_else(|| Error::Input("no generators; use from_generators with a degree".into()))?
            .degree();
        Self::from_generators(degree, generators)
    }

    /// Wraps an already-closed element set. The caller owns the closure
    /// invariant.
    pub(crate) fn from_closed_elements(
        degree: usize,
        generators: Vec<Perm>,
        mut elements: Vec<Perm>,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        debug_assert!(elements.iter().all(|p| p.degree() == degree));
        debug_assert!(elements.binary_search(&Perm::identity(degree)).is_ok());
        let group = PermGroup {
            degree,
            generators,
            elements: OnceLock::new(),
        };
        group.elements.set(elements).expect("fresh cell");
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// All elements, sorted, computed by closure under composition.
    pub fn elements(&self) -> &[Perm] {
        self.elements.get_or_init(|| {
            let mut seen: HashSet<Perm> = HashSet::new();
            let identity = Perm::identity(self.degree);
            seen.insert(identity.clone());
            let mut frontier = vec![identity];
            while let Some(p) = frontier.pop() {
                for g in &self.generators {
                    let q = p.compose(g);
                    if seen.insert(q.clone()) {
                        frontier.push(q);
                    }
                }
            }
            let mut elements: Vec<Perm> = seen.into_iter().collect();
            elements.sort_unstable();
            elements
        })
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.elements().binary_search(p).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        let elements = self.elements();
        elements
            .iter()
            .enumerate()
            .all(|(i, a)| elements[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Histogram of element orders.
    pub fn order_spectrum(&self) -> BTreeMap<u64, usize> {
        let mut spectrum = BTreeMap::new();
        for p in self.elements() {
            *spectrum.entry(p.order()).or_insert(0) += 1;
        }
        spectrum
    }

    /// Largest element order.
    pub fn exponent_max(&self) -> u64 {
        self.elements().iter().map(Perm::order).max().unwrap_or(1)
    }

    pub fn center_order(&self) -> usize {
        self.elements()
            .iter()
            .filter(|p| self.elements().iter().all(|q| p.commutes_with(q)))
            .count()
    }

    /// Order of the derived subgroup (closure of all commutators).
    pub fn derived_subgroup_order(&self) -> usize {
        let elements = self.elements();
        let mut commutators: Vec<Perm> = Vec::new();
        let mut seen = HashSet::new();
        for a in elements {
            let a_inv = a.inverse();
            for b in elements {
                let c = a_inv.compose(&b.inverse()).compose(a).compose(b);
                if seen.insert(c.clone()) {
                    commutators.push(c);
                }
            }
        }
        PermGroup::from_generators(self.degree, commutators)
            .expect("same degree")
            .order()
    }

    /// Conjugation orbits, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Perm>> {
        let elements = self.elements();
        let mut assigned = vec![false; elements.len()];
        let mut classes = Vec::new();
        for (i, rep) in elements.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            let mut class: Vec<usize> = Vec::new();
            for g in elements {
                let conj = g.inverse().compose(rep).compose(g);
                let idx = elements
                    .binary_search(&conj)
                    .expect("closure contains conjugates");
                if !assigned[idx] {
                    assigned[idx] = true;
                    class.push(idx);
                }
            }
            class.sort_unstable();
            classes.push(class.into_iter().map(|idx| elements[idx].clone()).collect());
        }
        classes
    }

    /// True iff every pair of odd-order elements commutes.
    pub fn odd_order_elements_commute(&self) -> bool {
        let odd: Vec<&Perm> = self
            .elements()
            .iter()
            .filter(|p| p.order() % 2 == 1)
            .collect();
        odd.iter()
            .enumerate()
            .all(|(i, a)| odd[i + 1..].iter().all(|b| a.commutes_with(b)))
    }
}

/// The dihedral group of order 2n. For n >= 3 this is the symmetry group of
/// the n-gon on n points; n = 1 and n = 2 get faithful models on 2 and 4
/// points since the polygon action degenerates there.
pub fn make_dihedral(n: usize) -> PermGroup {
    assert!(n >= 1, "dihedral parameter must be positive");
    match n {
        1 => PermGroup::generate(vec![Perm::from_cycles(2, &[vec![0, 1]]).unwrap()]).unwrap(),
        2 => PermGroup::generate(vec![
            Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(4, &[vec![2, 3]]).unwrap(),
        ])
        .unwrap(),
        _ => {
            let rotation: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
            let reflection: Vec<u8> = (0..n).map(|i| ((n - i) % n) as u8).collect();
            PermGroup::generate(vec![
                Perm::from_images(rotation).unwrap(),
                Perm::from_images(reflection).unwrap(),
            ])
            .unwrap()
        }
    }
}

/// D_m x D_m acting on the disjoint union of two m-gons (2m points), m odd.
pub fn make_dihedral_product(m: usize) -> Result<PermGroup> {
    if m.is_multiple_of(2) {
        return Err(Error::Input(format!(
            "dihedral product wants odd m, got {m}"
        )));
    }
    if m == 1 {
        // Two disjoint involutions: the Klein four-group.
        return PermGroup::generate(vec![
            Perm::from_cycles(4, &[vec![0, 1]])?,
            Perm::from_cycles(4, &[vec![2, 3]])?,
        ]);
    }
    let degree = 2 * m;
    let embed = |offset: usize, images: &[usize]| -> Result<Perm> {
        let mut table: Vec<u8> = (0..degree as u8).collect();
        for (i, &img) in images.iter().enumerate() {
            table[offset + i] = (offset + img) as u8;
        }
        Perm::from_images(table)
    };
    let rot: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let refl: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    PermGroup::generate(vec![
        embed(0, &rot)?,
        embed(0, &refl)?,
        embed(m, &rot)?,
        embed(m, &refl)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LabelingMap;

    #[test]
    fn empty_generator_list_gives_trivial_group() {
        let g = PermGroup::from_generators(14, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Perm::identity(14)));
    }

    #[test]
    fn single_rotation_generates_z7() {
        let lab = LabelingMap::figure1(14);
        let r = Perm::parse("(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)", &lab).unwrap();
        let g = PermGroup::generate(vec![r]).unwrap();
        assert_eq!(g.order(), 7);
        assert!(g.is_abelian());
        assert_eq!(g.order_spectrum(), BTreeMap::from([(1, 1), (7, 6)]));
    }

    #[test]
    fn rotation_and_turnover_generate_d7() {
        let lab = LabelingMap::figure1(14);
        let r = Perm::parse("(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)", &lab).unwrap();
        let s = Perm::parse("(1,14)(2,13)(3,12)(4,11)(5,10)(6,9)(7,8)", &lab).unwrap();
        let g = PermGroup::generate(vec![r, s]).unwrap();
        assert_eq!(g.order(), 14);
        assert!(!g.is_abelian());
        assert_eq!(g.center_order(), 1);
        assert_eq!(g.derived_subgroup_order(), 7);
    }

    #[test]
    fn mismatched_ground_sets_are_rejected() {
        let a = Perm::identity(3);
        let b = Perm::from_cycles(4, &[vec![0, 1]]).unwrap();
        assert!(matches!(
            PermGroup::from_generators(3, vec![a, b]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn closure_is_sound_on_a_small_group() {
        let g = make_dihedral(6);
        let elements = g.elements();
        for a in elements {
            assert!(g.contains(&a.inverse()));
            for b in elements {
                assert!(g.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn dihedral_orders() {
        assert_eq!(make_dihedral(1).order(), 2);
        assert_eq!(make_dihedral(2).order(), 4);
        assert_eq!(make_dihedral(7).order(), 14);
        assert_eq!(make_dihedral(14).order(), 28);
    }

    #[test]
    fn d14_contains_an_order_14_element() {
        let spectrum = make_dihedral(14).order_spectrum();
        assert!(spectrum.contains_key(&14));
    }

    #[test]
    fn dihedral_product_order_is_4m_squared() {
        assert_eq!(make_dihedral_product(7).unwrap().order(), 196);
        assert_eq!(make_dihedral_product(1).unwrap().order(), 4);
        assert!(make_dihedral_product(4).is_err());
    }

    #[test]
    fn odd_order_elements_commute_in_dihedral_products() {
        for m in [1usize, 3, 5, 7] {
            assert!(make_dihedral_product(m)
                .unwrap()
                .odd_order_elements_commute());
        }
    }

    #[test]
    fn odd_order_commuting_fails_for_frobenius_21() {
        // x -> x + 1 and x -> 2x on Z/7: the nonabelian group of order 21.
        let add = Perm::from_images((0..7).map(|x| (x + 1) % 7).collect()).unwrap();
        let mul = Perm::from_images((0..7).map(|x| (2 * x) % 7).collect()).unwrap();
        let g = PermGroup::generate(vec![add, mul]).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.odd_order_elements_commute());
    }

    #[test]
    fn abelian_groups_trivially_commute_on_odd_orders() {
        let lab = LabelingMap::figure1(14);
        let r = Perm::parse("(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)", &lab).unwrap();
        let g = PermGroup::generate(vec![r]).unwrap();
        assert!(g.odd_order_elements_commute());
    }

    #[test]
    fn conjugacy_classes_partition_the_group() {
        let g = make_dihedral(7);
        let classes = g.conjugacy_classes();
        // D7: identity, three rotation pairs, one class of 7 reflections
        assert_eq!(classes.len(), 5);
        let total: usize = classes.iter().map(Vec::len).sum();
        assert_eq!(total, 14);
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2, 2, 7]);
    }

    #[test]
    fn trivial_group_has_one_conjugacy_class() {
        let g = PermGroup::trivial(5);
        assert_eq!(g.conjugacy_classes().len(), 1);
    }
}
