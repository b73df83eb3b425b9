//! Exhaustive subgroup enumeration for groups of order at most 400.
//!
//! The engine seeds with every cyclic subgroup and repeatedly extends each
//! known subgroup H by a generator g outside it, closing ⟨H, g⟩, until no new
//! subgroup appears. Every subgroup K is reached this way: either K is cyclic
//! or K = ⟨H, g⟩ for a maximal proper H < K and any g ∈ K \ H. Since
//! ⟨H, g⟩ = ⟨H, g'⟩ whenever ⟨g⟩ = ⟨g'⟩, it suffices to extend by one
//! representative element per cyclic subgroup.
//!
//! All arithmetic happens on element indices through a precomputed
//! multiplication table; subgroups are bitsets over the element list.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::group::PermGroup;
use crate::iso::{iso_type, IsoType};
use crate::perm::Perm;
use crate::{Error, Result};

/// Default cap on the order of groups the census will chew through.
pub const DEFAULT_SUBGROUP_BOUND: usize = 400;

/// One subgroup of a parent group: its closed element set (sorted), order,
/// and isomorphism-type label.
#[derive(Debug, Clone)]
pub struct SubgroupRecord {
    pub elements: Vec<Perm>,
    pub order: usize,
    pub iso_type: IsoType,
}

impl SubgroupRecord {
    /// The subgroup as a standalone group (elements pre-closed).
    pub fn as_group(&self, degree: usize) -> PermGroup {
        let generators = generating_set(&self.elements);
        PermGroup::from_closed_elements(degree, generators, self.elements.clone())
    }
}

/// Greedy small generating set for a closed element list.
fn generating_set(elements: &[Perm]) -> Vec<Perm> {
    let degree = elements.first().map_or(0, Perm::degree);
    let mut gens: Vec<Perm> = Vec::new();
    let mut closure = vec![Perm::identity(degree)];
    for p in elements {
        if closure.binary_search(p).is_ok() {
            continue;
        }
        gens.push(p.clone());
        let closed = PermGroup::from_generators(degree, gens.clone()).expect("same degree");
        closure = closed.elements().to_vec();
        if closure.len() == elements.len() {
            break;
        }
    }
    gens
}

/// Every subgroup of `group`, each exactly once, sorted by (order, element
/// set). Errors if the group order exceeds [`DEFAULT_SUBGROUP_BOUND`].
pub fn enumerate_subgroups(group: &PermGroup) -> Result<Vec<SubgroupRecord>> {
    enumerate_subgroups_bounded(group, DEFAULT_SUBGROUP_BOUND)
}

/// As [`enumerate_subgroups`] with an explicit order bound.
pub fn enumerate_subgroups_bounded(group: &PermGroup, bound: usize) -> Result<Vec<SubgroupRecord>> {
    let order = group.order();
    if order > bound {
        return Err(Error::OrderBound { order, bound });
    }
    let elements = group.elements();
    let n = elements.len();
    let words = n.div_ceil(64);

    let index_of = |p: &Perm| -> u16 { elements.binary_search(p).expect("closure member") as u16 };
    let identity_idx = index_of(&Perm::identity(group.degree()));

    // Multiplication table: table[a * n + b] = index of elements[a] ∘ elements[b].
    let mut table = vec![0u16; n * n];
    for (a, pa) in elements.iter().enumerate() {
        for (b, pb) in elements.iter().enumerate() {
            table[a * n + b] = index_of(&pa.compose(pb));
        }
    }
    let mul = |a: u16, b: u16| table[a as usize * n + b as usize];

    let set_bit = |bits: &mut [u64], i: u16| bits[i as usize / 64] |= 1 << (i % 64);
    let get_bit = |bits: &[u64], i: u16| bits[i as usize / 64] >> (i % 64) & 1 == 1;
    let contains_all =
        |outer: &[u64], inner: &[u64]| outer.iter().zip(inner).all(|(o, i)| o & i == *i);

    // Closure of a generator index set, as (bitset, element count).
    let close = |gens: &[u16]| -> (Vec<u64>, usize) {
        let mut bits = vec![0u64; words];
        set_bit(&mut bits, identity_idx);
        let mut members = vec![identity_idx];
        let mut cursor = 0;
        while cursor < members.len() {
            let x = members[cursor];
            cursor += 1;
            for &g in gens {
                let y = mul(x, g);
                if !get_bit(&bits, y) {
                    set_bit(&mut bits, y);
                    members.push(y);
                }
            }
        }
        let count = members.len();
        (bits, count)
    };

    // Cyclic subgroups, deduplicated, each with one generating element.
    let mut cyclic_reps: Vec<(Vec<u64>, u16)> = Vec::new();
    let mut known: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut subgroups: Vec<(Vec<u64>, usize, Vec<u16>)> = Vec::new();
    for e in 0..n as u16 {
        let (bits, count) = close(&[e]);
        match known.entry(bits.clone()) {
            Entry::Occupied(_) => {}
            Entry::Vacant(slot) => {
                slot.insert(subgroups.len());
                if e != identity_idx {
                    cyclic_reps.push((bits.clone(), e));
                }
                let gens = if e == identity_idx { vec![] } else { vec![e] };
                subgroups.push((bits, count, gens));
            }
        }
    }

    // Fixpoint: extend every known subgroup by every cyclic generator not
    // already inside it.
    let mut cursor = 0;
    while cursor < subgroups.len() {
        let (bits, count, gens) = subgroups[cursor].clone();
        cursor += 1;
        if count == n {
            continue;
        }
        for (cyc_bits, cyc_gen) in &cyclic_reps {
            if contains_all(&bits, cyc_bits) {
                continue;
            }
            let mut extended_gens = gens.clone();
            extended_gens.push(*cyc_gen);
            let (new_bits, new_count) = close(&extended_gens);
            if let Entry::Vacant(slot) = known.entry(new_bits.clone()) {
                slot.insert(subgroups.len());
                subgroups.push((new_bits, new_count, extended_gens));
            }
        }
    }

    let mut records: Vec<SubgroupRecord> = subgroups
        .into_iter()
        .map(|(bits, count, _)| {
            let members: Vec<Perm> = (0..n as u16)
                .filter(|&i| get_bit(&bits, i))
                .map(|i| elements[i as usize].clone())
                .collect();
            debug_assert_eq!(members.len(), count);
            let as_group = PermGroup::from_closed_elements(
                group.degree(),
                generating_set(&members),
                members.clone(),
            );
            SubgroupRecord {
                order: count,
                iso_type: iso_type(&as_group),
                elements: members,
            }
        })
        .collect();
    records.sort_by(|a, b| (a.order, &a.elements).cmp(&(b.order, &b.elements)));
    Ok(records)
}
