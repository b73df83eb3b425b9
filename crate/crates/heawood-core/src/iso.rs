//! Isomorphism-type recognition for the groups arising in the census.
//!
//! The label is decided by an invariant chain: order, abelian flag,
//! element-order multiset, derived-subgroup order, and center order. For the
//! orders that occur inside PGL(2,7) and the dihedral models these invariants
//! pin the type uniquely; anything outside the catalog is reported as
//! `Unrecognized`, never mislabeled.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::group::PermGroup;

/// Catalog of group types the recognizer can name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoType {
    Trivial,
    /// Cyclic group of order n (n >= 2).
    Cyclic(u32),
    /// Dihedral group of order 2n (n >= 2); D2 is the Klein four-group.
    Dihedral(u32),
    A4,
    S4,
    Psl27,
    Pgl27,
    /// The nonabelian semidirect product of order 21.
    Frob21,
    /// The Frobenius group of order 42 with trivial center.
    Frob42,
    Unrecognized,
}

impl IsoType {
    /// Sort key grouping cyclic types first, then dihedral, then the rest,
    /// matching the order the census list is conventionally written in.
    fn sort_key(&self) -> (u8, u32) {
        match *self {
            IsoType::Trivial => (0, 0),
            IsoType::Cyclic(n) => (1, n),
            IsoType::Dihedral(n) => (2, n),
            IsoType::A4 => (3, 0),
            IsoType::S4 => (4, 0),
            IsoType::Psl27 => (5, 0),
            IsoType::Pgl27 => (6, 0),
            IsoType::Frob21 => (7, 0),
            IsoType::Frob42 => (8, 0),
            IsoType::Unrecognized => (9, 0),
        }
    }

    /// Order of any group with this label, if the label determines it.
    pub fn group_order(&self) -> Option<usize> {
        match *self {
            IsoType::Trivial => Some(1),
            IsoType::Cyclic(n) => Some(n as usize),
            IsoType::Dihedral(n) => Some(2 * n as usize),
            IsoType::A4 => Some(12),
            IsoType::S4 => Some(24),
            IsoType::Psl27 => Some(168),
            IsoType::Pgl27 => Some(336),
            IsoType::Frob21 => Some(21),
            IsoType::Frob42 => Some(42),
            IsoType::Unrecognized => None,
        }
    }
}

impl PartialOrd for IsoType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IsoType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IsoType::Trivial => write!(f, "trivial"),
            IsoType::Cyclic(n) => write!(f, "Z{n}"),
            IsoType::Dihedral(n) => write!(f, "D{n}"),
            IsoType::A4 => write!(f, "A4"),
            IsoType::S4 => write!(f, "S4"),
            IsoType::Psl27 => write!(f, "PSL(2,7)"),
            IsoType::Pgl27 => write!(f, "PGL(2,7)"),
            IsoType::Frob21 => write!(f, "Z7⋊Z3"),
            IsoType::Frob42 => write!(f, "Z7⋊Z6"),
            IsoType::Unrecognized => write!(f, "unrecognized"),
        }
    }
}

impl Serialize for IsoType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Assigns the isomorphism-type label of a group.
pub fn iso_type(group: &PermGroup) -> IsoType {
    let order = group.order();
    if order == 1 {
        return IsoType::Trivial;
    }
    let spectrum = group.order_spectrum();
    let max_order = *spectrum.keys().last().expect("nonempty spectrum");

    if group.is_abelian() {
        if max_order as usize == order {
            return IsoType::Cyclic(order as u32);
        }
        if order == 4 {
            return IsoType::Dihedral(2); // Klein four-group
        }
        return IsoType::Unrecognized;
    }

    if let Some(n) = dihedral_parameter(group, &spectrum, max_order) {
        return IsoType::Dihedral(n);
    }

    match order {
        12 if spectrum == BTreeMap::from([(1, 1), (2, 3), (3, 8)]) => IsoType::A4,
        21 => IsoType::Frob21, // unique nonabelian group of order 21
        24 if group.center_order() == 1
            && spectrum == BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]) =>
        {
            IsoType::S4
        }
        42 if group.center_order() == 1
            && spectrum == BTreeMap::from([(1, 1), (2, 7), (3, 14), (6, 14), (7, 6)]) =>
        {
            IsoType::Frob42
        }
        // A perfect group of order 168 is simple, hence PSL(2,7).
        168 if group.derived_subgroup_order() == 168 => IsoType::Psl27,
        336 if group.center_order() == 1
            && group.derived_subgroup_order() == 168
            && spectrum
                == BTreeMap::from([
                    (1, 1),
                    (2, 49),
                    (3, 56),
                    (4, 42),
                    (6, 56),
                    (7, 48),
                    (8, 84),
                ]) =>
        {
            IsoType::Pgl27
        }
        _ => IsoType::Unrecognized,
    }
}

/// Returns n if the group is dihedral of order 2n (n >= 3).
///
/// For odd n the tested invariants force the dihedral structure: a cyclic
/// subgroup of index 2 plus n involutions inverting it. For even n the
/// combination (n+1 involutions, derived order n/2, center order 2, an
/// element of order n) distinguishes D_n from the other groups of these
/// orders in scope; the explicit-isomorphism oracle in the test suite pins
/// this down for every order the census produces.
fn dihedral_parameter(
    group: &PermGroup,
    spectrum: &BTreeMap<u64, usize>,
    max_order: u64,
) -> Option<u32> {
    let order = group.order();
    if !order.is_multiple_of(2) || order < 6 {
        return None;
    }
    let n = order / 2;
    if max_order != n as u64 {
        return None;
    }
    let involutions = spectrum.get(&2).copied().unwrap_or(0);
    let expected_involutions = if n % 2 == 1 { n } else { n + 1 };
    if involutions != expected_involutions {
        return None;
    }
    let expected_center = if n % 2 == 1 { 1 } else { 2 };
    if group.center_order() != expected_center {
        return None;
    }
    let expected_derived = if n % 2 == 1 { n } else { n / 2 };
    if group.derived_subgroup_order() != expected_derived {
        return None;
    }
    Some(n as u32)
}
