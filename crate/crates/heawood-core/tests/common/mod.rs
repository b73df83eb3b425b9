#![allow(dead_code)] // each test binary uses its own slice of this module

//! Test-side oracles, kept independent of the library's enumeration and
//! recognition paths: an explicit-isomorphism search, catalog model groups,
//! and a brute-force subgroup enumerator over unions of cyclic subgroups.

use std::collections::HashMap;

use heawood_core::graph::SimpleGraph;
use heawood_core::group::{make_dihedral, PermGroup};
use heawood_core::iso::IsoType;
use heawood_core::perm::Perm;

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    SimpleGraph::new(10, &edges).expect("valid")
}

pub fn cyclic_model(n: usize) -> PermGroup {
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let rot = Perm::from_images((0..n).map(|i| ((i + 1) % n) as u8).collect()).expect("valid");
    PermGroup::generate(vec![rot]).expect("valid")
}

pub fn a4_model() -> PermGroup {
    PermGroup::generate(vec![
        Perm::from_cycles(4, &[vec![0, 1, 2]]).expect("valid"),
        Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).expect("valid"),
    ])
    .expect("valid")
}

pub fn s4_model() -> PermGroup {
    PermGroup::generate(vec![
        Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).expect("valid"),
        Perm::from_cycles(4, &[vec![0, 1]]).expect("valid"),
    ])
    .expect("valid")
}

/// Z7 ⋊ Z3 as affine maps x -> 2^k x + b on Z/7.
pub fn frob21_model() -> PermGroup {
    let add = Perm::from_images((0..7).map(|x| (x + 1) % 7).collect()).expect("valid");
    let mul = Perm::from_images((0..7).map(|x| (2 * x) % 7).collect()).expect("valid");
    PermGroup::generate(vec![add, mul]).expect("valid")
}

/// Z7 ⋊ Z6 as the full affine group of Z/7 (3 is a primitive root).
pub fn frob42_model() -> PermGroup {
    let add = Perm::from_images((0..7).map(|x| (x + 1) % 7).collect()).expect("valid");
    let mul = Perm::from_images((0..7).map(|x| (3 * x) % 7).collect()).expect("valid");
    PermGroup::generate(vec![add, mul]).expect("valid")
}

/// Every catalog model of the given order within the oracle's range,
/// including cyclic and dihedral shapes that the census never produces, so
/// a wrong label would be caught as an isomorphism mismatch.
pub fn catalog_models_of_order(order: usize) -> Vec<(IsoType, PermGroup)> {
    if order == 1 {
        return vec![(IsoType::Trivial, PermGroup::trivial(1))];
    }
    let mut models = vec![(IsoType::Cyclic(order as u32), cyclic_model(order))];
    if order.is_multiple_of(2) && order >= 4 {
        let n = order / 2;
        models.push((IsoType::Dihedral(n as u32), make_dihedral(n)));
    }
    if order == 12 {
        models.push((IsoType::A4, a4_model()));
    }
    if order == 24 {
        models.push((IsoType::S4, s4_model()));
    }
    if order == 21 {
        models.push((IsoType::Frob21, frob21_model()));
    }
    if order == 42 {
        models.push((IsoType::Frob42, frob42_model()));
    }
    models
}

fn greedy_generators(group: &PermGroup) -> Vec<Perm> {
    let degree = group.degree();
    let mut gens: Vec<Perm> = Vec::new();
    let mut closed = vec![Perm::identity(degree)];
    for p in group.elements() {
        if closed.binary_search(p).is_ok() {
            continue;
        }
        gens.push(p.clone());
        closed = PermGroup::from_generators(degree, gens.clone())
            .expect("same degree")
            .elements()
            .to_vec();
        if closed.len() == group.order() {
            break;
        }
    }
    gens
}

/// Exhaustive isomorphism test by generator-image search: every assignment
/// of order-matching images is extended along a fixed word derivation and
/// verified as a multiplication-preserving bijection.
pub fn are_isomorphic(a: &PermGroup, b: &PermGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    if a.order_spectrum() != b.order_spectrum() {
        return false;
    }
    if a.order() == 1 {
        return true;
    }

    let a_elems = a.elements();
    let index_a: HashMap<&Perm, usize> = a_elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let gens = greedy_generators(a);

    // Word derivation of every element of `a`: BFS by right multiplication.
    let identity_idx = index_a[&Perm::identity(a.degree())];
    let mut derivation: Vec<Option<(usize, usize)>> = vec![None; a_elems.len()];
    let mut order = vec![identity_idx];
    let mut seen = vec![false; a_elems.len()];
    seen[identity_idx] = true;
    let mut cursor = 0;
    while cursor < order.len() {
        let at = order[cursor];
        cursor += 1;
        for (gi, gen) in gens.iter().enumerate() {
            let next = a_elems[at].compose(gen);
            let ni = index_a[&next];
            if !seen[ni] {
                seen[ni] = true;
                derivation[ni] = Some((at, gi));
                order.push(ni);
            }
        }
    }
    if order.len() != a_elems.len() {
        panic!("generators do not generate the group");
    }

    let mut images: Vec<Perm> = Vec::new();
    assign(a, b, &gens, &index_a, &derivation, &order, &mut images)
}

fn assign(
    a: &PermGroup,
    b: &PermGroup,
    gens: &[Perm],
    index_a: &HashMap<&Perm, usize>,
    derivation: &[Option<(usize, usize)>],
    order: &[usize],
    images: &mut Vec<Perm>,
) -> bool {
    if images.len() == gens.len() {
        return extends_to_isomorphism(a, b, index_a, derivation, order, images);
    }
    let want = gens[images.len()].order();
    for candidate in b.elements() {
        if candidate.order() != want {
            continue;
        }
        images.push(candidate.clone());
        if assign(a, b, gens, index_a, derivation, order, images) {
            return true;
        }
        images.pop();
    }
    false
}

fn extends_to_isomorphism(
    a: &PermGroup,
    b: &PermGroup,
    index_a: &HashMap<&Perm, usize>,
    derivation: &[Option<(usize, usize)>],
    order: &[usize],
    gen_images: &[Perm],
) -> bool {
    let a_elems = a.elements();
    let n = a_elems.len();
    let mut phi: Vec<Option<Perm>> = vec![None; n];
    for &idx in order {
        phi[idx] = match derivation[idx] {
            None => Some(Perm::identity(b.degree())),
            Some((parent, gi)) => {
                let parent_img = phi[parent].as_ref().expect("BFS order");
                Some(parent_img.compose(&gen_images[gi]))
            }
        };
    }
    let phi: Vec<Perm> = phi.into_iter().map(|p| p.expect("all derived")).collect();

    // bijectivity
    let mut sorted = phi.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != n || !phi.iter().all(|p| b.contains(p)) {
        return false;
    }
    // multiplicativity over every pair
    for (x, px) in a_elems.iter().enumerate() {
        for (y, py) in a_elems.iter().enumerate() {
            let xy = index_a[&px.compose(py)];
            if phi[xy] != phi[x].compose(&phi[y]) {
                return false;
            }
        }
    }
    true
}

/// Independent subgroup enumeration for groups of order <= 24: every union
/// of cyclic subgroups that happens to be closed under composition, found by
/// scanning all unions. No closure generation is involved; closedness is
/// checked directly on the union.
pub fn subgroups_brute_force(group: &PermGroup) -> Vec<Vec<Perm>> {
    let elements = group.elements();
    let n = elements.len();
    assert!(n <= 24, "brute-force oracle is for groups of order <= 24");
    let index = |p: &Perm| elements.binary_search(p).expect("member");

    let mut table = vec![0u32; n * n];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            table[i * n + j] = index(&a.compose(b)) as u32;
        }
    }

    // distinct cyclic subgroups as bitmasks
    let mut cyclics: Vec<u32> = Vec::new();
    for e in 0..n {
        let mut mask = 0u32;
        let mut at = e;
        loop {
            mask |= 1 << at;
            at = table[at * n + e] as usize;
            if at == e {
                break;
            }
        }
        mask |= 1 << index(&Perm::identity(group.degree()));
        if !cyclics.contains(&mask) {
            cyclics.push(mask);
        }
    }

    let identity_mask = 1u32 << index(&Perm::identity(group.degree()));
    let is_closed = |mask: u32| -> bool {
        for a in 0..n {
            if mask >> a & 1 == 0 {
                continue;
            }
            for b in 0..n {
                if mask >> b & 1 == 0 {
                    continue;
                }
                if mask >> table[a * n + b] & 1 == 0 {
                    return false;
                }
            }
        }
        true
    };

    let mut seen = std::collections::HashSet::new();
    let mut found: Vec<u32> = Vec::new();
    for selection in 0u64..(1u64 << cyclics.len()) {
        let mut mask = identity_mask;
        for (i, cyc) in cyclics.iter().enumerate() {
            if selection >> i & 1 == 1 {
                mask |= cyc;
            }
        }
        if seen.insert(mask) && is_closed(mask) {
            found.push(mask);
        }
    }

    let mut out: Vec<Vec<Perm>> = found
        .into_iter()
        .map(|mask| {
            (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| elements[i].clone())
                .collect()
        })
        .collect();
    out.sort();
    out
}
