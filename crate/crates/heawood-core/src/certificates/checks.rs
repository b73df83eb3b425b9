//! The sixteen machine checks.
//!
//! Each check quantifies exhaustively over the relevant elements and records
//! structured evidence; a failure keeps the first concrete counterexamples in
//! the witness. Statements are fixed text so reports stay byte-stable.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Map, Value};

use super::{CachedDomain, CheckId, CheckResult, CheckStatus, Session};
use crate::graph::LabelingMap;
use crate::group::{make_dihedral, make_dihedral_product, PermGroup};
use crate::iso::{iso_type, IsoType};
use crate::perm::Perm;
use crate::rational::Rational;
use crate::subgroups::enumerate_subgroups;
use crate::symmetry::{
    burnside_with_override, cycle_action_descriptor, is_graph_automorphism, GroupAction,
    RotationDescriptor,
};

struct Evidence {
    map: Map<String, Value>,
    failures: Vec<String>,
}

impl Evidence {
    fn new() -> Self {
        Evidence {
            map: Map::new(),
            failures: Vec::new(),
        }
    }

    fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.map.insert(key.to_string(), value.into());
    }

    fn require(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 8 {
            self.failures.push(counterexample());
        } else if !ok {
            // keep the witness bounded; the count still reflects every failure
            self.failures.push(String::new());
        }
    }

    fn finish(mut self, id: CheckId, statement: &str) -> CheckResult {
        let status = if self.failures.is_empty() {
            CheckStatus::Verified
        } else {
            let shown: Vec<&String> = self.failures.iter().filter(|f| !f.is_empty()).collect();
            self.map.insert("counterexamples".into(), json!(shown));
            self.map
                .insert("failure_count".into(), json!(self.failures.len()));
            CheckStatus::Failed
        };
        CheckResult {
            id: id.to_string(),
            statement: statement.to_string(),
            status,
            witness: self.map,
        }
    }
}

pub(super) fn run(session: &Session, id: CheckId) -> CheckResult {
    match id {
        CheckId::K1 => k1(session),
        CheckId::K2 => k2(session),
        CheckId::K3 => k3(session),
        CheckId::K4 => k4(session),
        CheckId::K5 => k5(session),
        CheckId::K6 => k6(session),
        CheckId::K7 => k7(session),
        CheckId::K8 => k8(session),
        CheckId::K9 => k9(session),
        CheckId::K10 => k10(session),
        CheckId::K11 => k11(session),
        CheckId::K12 => k12(session),
        CheckId::K13 => k13(session),
        CheckId::K14 => k14(session),
        CheckId::K15 => k15(session),
        CheckId::K16 => k16(session),
    }
}

fn fig1(session: &Session) -> LabelingMap {
    LabelingMap::figure1(session.graph().vertex_count())
}

fn show(session: &Session, p: &Perm) -> String {
    p.format_cycles(&fig1(session))
}

fn elements_of_order(session: &Session, orders: &[u64]) -> Vec<Perm> {
    session
        .aut()
        .elements()
        .iter()
        .filter(|p| orders.contains(&p.order()))
        .cloned()
        .collect()
}

fn invariant_cycles(session: &Session, p: &Perm, which: CachedDomain) -> Vec<crate::graph::Cycle> {
    let domain = session.domain(which);
    let mut fixed = Vec::new();
    for idx in 0..domain.len() {
        if domain.apply(p, idx).map(|img| img == idx).unwrap_or(false) {
            if let crate::symmetry::ActionPoint::Cycle(c) = &domain.points()[idx] {
                fixed.push(c.clone());
            }
        }
    }
    fixed
}

fn setwise_fixed_edges(session: &Session, p: &Perm) -> Vec<(usize, usize)> {
    session
        .graph()
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| {
            let (x, y) = (p.apply(a), p.apply(b));
            (x.min(y), x.max(y)) == (a, b)
        })
        .collect()
}

fn k1(session: &Session) -> CheckResult {
    let statement = "Cycle censuses: the graph has 14 vertices, 21 edges, every degree 3, no \
                     cycles of length 3, 4, or 5, and exactly 28 six-cycles, 56 twelve-cycles, \
                     and 24 fourteen-cycles.";
    let mut ev = Evidence::new();
    let g = session.graph();
    ev.put("vertices", g.vertex_count());
    ev.put("edges", g.edge_count());
    ev.require(g.vertex_count() == 14, || {
        format!("vertex count {}", g.vertex_count())
    });
    ev.require(g.edge_count() == 21, || {
        format!("edge count {}", g.edge_count())
    });
    for v in 0..g.vertex_count() {
        ev.require(g.degree(v) == 3, || {
            format!("degree {} at vertex {}", g.degree(v), v + 1)
        });
    }
    for (k, expected) in [(3, 0usize), (4, 0), (5, 0), (6, 28), (12, 56), (14, 24)] {
        let count = session.cycles(k).len();
        ev.put(&format!("cycles_{k}"), count);
        ev.require(count == expected, || {
            format!("{count} cycles of length {k}, expected {expected}")
        });
    }
    ev.finish(CheckId::K1, statement)
}

fn k2(session: &Session) -> CheckResult {
    let statement = "Removing any set of fewer than 3 vertices leaves the graph connected \
                     (3-connectedness), checked over every such subset.";
    let mut ev = Evidence::new();
    let g = session.graph();
    let n = g.vertex_count();
    ev.put("subsets_checked", 1 + n + n * (n - 1) / 2);
    ev.require(g.vertex_connectivity_at_least(3), || {
        "a cut set of size < 3 exists".into()
    });
    ev.finish(CheckId::K2, statement)
}

fn k3(session: &Session) -> CheckResult {
    let statement = "The automorphism group has order 336 and nontrivial element orders exactly \
                     {2,3,4,6,7,8}; in particular no element has order 14 or 21.";
    let mut ev = Evidence::new();
    let aut = session.aut();
    let spectrum = aut.order_spectrum();
    ev.put("group_order", aut.order());
    ev.put(
        "order_spectrum",
        Value::Object(
            spectrum
                .iter()
                .map(|(order, count)| (order.to_string(), json!(count)))
                .collect(),
        ),
    );
    ev.require(aut.order() == 336, || {
        format!("group order {}", aut.order())
    });
    let keys: Vec<u64> = spectrum.keys().copied().collect();
    ev.require(keys == vec![1, 2, 3, 4, 6, 7, 8], || {
        format!("order key set {keys:?}")
    });
    for forbidden in [14u64, 21] {
        ev.require(!spectrum.contains_key(&forbidden), || {
            format!("element of order {forbidden} exists")
        });
    }
    ev.finish(CheckId::K3, statement)
}

fn k4(session: &Session) -> CheckResult {
    let statement = "The automorphism group acts transitively on the fourteen-cycles and on the \
                     twelve-cycles.";
    let mut ev = Evidence::new();
    let aut = session.aut();
    for (name, which) in [
        ("cycles_14", CachedDomain::Cycles14),
        ("cycles_12", CachedDomain::Cycles12),
    ] {
        let action = GroupAction::with_domain(aut, session.domain(which).clone());
        let orbit_count = action.orbits().map(|o| o.len()).unwrap_or(usize::MAX);
        ev.put(&format!("{name}_orbits"), orbit_count);
        ev.require(orbit_count == 1, || format!("{name}: {orbit_count} orbits"));
    }
    ev.finish(CheckId::K4, statement)
}

fn k5(session: &Session) -> CheckResult {
    let statement = "For every pair of vertices at distance 3, exactly two twelve-cycles avoid \
                     both vertices.";
    let mut ev = Evidence::new();
    let g = session.graph();
    let n = g.vertex_count();
    let mut pairs = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            if g.distance(u, v).expect("valid") != 3 {
                continue;
            }
            pairs += 1;
            let avoiding = g.cycles_avoiding(12, &[u, v]).map(|c| c.len()).unwrap_or(0);
            ev.require(avoiding == 2, || {
                format!("pair ({}, {}): {avoiding} avoiding 12-cycles", u + 1, v + 1)
            });
        }
    }
    ev.put("distance_3_pairs", pairs);
    ev.require(pairs > 0, || "no distance-3 pair exists".into());
    ev.finish(CheckId::K5, statement)
}

fn k6(session: &Session) -> CheckResult {
    let statement = "Order-7 automorphisms exist; each fixes no vertex, setwise fixes exactly \
                     three fourteen-cycles rotating each by an even step (angle 2πn/7), and \
                     splits the 21 edges into three orbits of seven.";
    let mut ev = Evidence::new();
    let sevens = elements_of_order(session, &[7]);
    ev.put("order_7_elements", sevens.len());
    ev.require(!sevens.is_empty(), || {
        "no order-7 automorphism exists".into()
    });
    let aut = session.aut();
    let edge_action = GroupAction::with_domain(aut, session.domain(CachedDomain::Edges).clone());
    let mut steps_seen: BTreeSet<usize> = BTreeSet::new();
    for p in &sevens {
        let name = || show(session, p);
        ev.require(p.fixed_points().is_empty(), || {
            format!("{} fixes vertices {:?}", name(), p.fixed_points())
        });
        let fixed = invariant_cycles(session, p, CachedDomain::Cycles14);
        ev.require(fixed.len() == 3, || {
            format!("{} fixes {} fourteen-cycles", name(), fixed.len())
        });
        for c in &fixed {
            match cycle_action_descriptor(p, c) {
                Ok(RotationDescriptor::Rotation { step }) => {
                    steps_seen.insert(step);
                    ev.require(step % 2 == 0 && step != 0, || {
                        format!(
                            "{} rotates an invariant 14-cycle by odd step {step}",
                            name()
                        )
                    });
                }
                other => ev.require(false, || {
                    format!("{}: non-rotation action {other:?}", name())
                }),
            }
        }
        match edge_action.orbits_of(p) {
            Ok(orbits) => {
                ev.require(
                    orbits.len() == 3 && orbits.iter().all(|o| o.len() == 7),
                    || {
                        let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
                        format!("{}: edge orbit sizes {sizes:?}", name())
                    },
                );
            }
            Err(e) => ev.require(false, || format!("{}: {e}", name())),
        }
    }
    ev.put("rotation_steps_seen", json!(steps_seen));
    ev.finish(CheckId::K6, statement)
}

fn k7(session: &Session) -> CheckResult {
    let statement = "Order-3 automorphisms exist; each fixes exactly two vertices at mutual \
                     distance 3 and setwise fixes exactly two twelve-cycles, each avoiding both \
                     fixed vertices and rotated by 4 or 8 positions (angle ±2π/3).";
    let mut ev = Evidence::new();
    let threes = elements_of_order(session, &[3]);
    ev.put("order_3_elements", threes.len());
    ev.require(!threes.is_empty(), || {
        "no order-3 automorphism exists".into()
    });
    let g = session.graph();
    let mut steps_seen: BTreeSet<usize> = BTreeSet::new();
    for p in &threes {
        let name = || show(session, p);
        let fixed_vertices = p.fixed_points();
        ev.require(fixed_vertices.len() == 2, || {
            format!("{} fixes {} vertices", name(), fixed_vertices.len())
        });
        if fixed_vertices.len() == 2 {
            let d = g
                .distance(fixed_vertices[0], fixed_vertices[1])
                .expect("valid");
            ev.require(d == 3, || {
                format!("{}: fixed vertices at distance {d}", name())
            });
        }
        let fixed_cycles = invariant_cycles(session, p, CachedDomain::Cycles12);
        ev.require(fixed_cycles.len() == 2, || {
            format!("{} fixes {} twelve-cycles", name(), fixed_cycles.len())
        });
        for c in &fixed_cycles {
            for &v in &fixed_vertices {
                ev.require(!c.contains(v), || {
                    format!(
                        "{}: fixed vertex {} lies on an invariant 12-cycle",
                        name(),
                        v + 1
                    )
                });
            }
            match cycle_action_descriptor(p, c) {
                Ok(RotationDescriptor::Rotation { step }) => {
                    steps_seen.insert(step);
                    ev.require(step == 4 || step == 8, || {
                        format!("{}: rotates an invariant 12-cycle by step {step}", name())
                    });
                }
                other => ev.require(false, || {
                    format!("{}: non-rotation action {other:?}", name())
                }),
            }
        }
    }
    ev.put("rotation_steps_seen", json!(steps_seen));
    ev.finish(CheckId::K7, statement)
}

fn k8(session: &Session) -> CheckResult {
    let statement = "Every involution that setwise fixes some twelve- or fourteen-cycle fixes no \
                     vertex.";
    let mut ev = Evidence::new();
    let involutions = elements_of_order(session, &[2]);
    ev.put("involutions", involutions.len());
    let mut with_invariant_cycle = 0usize;
    let mut profile: BTreeMap<String, usize> = BTreeMap::new();
    for p in &involutions {
        let fix12 = invariant_cycles(session, p, CachedDomain::Cycles12).len();
        let fix14 = invariant_cycles(session, p, CachedDomain::Cycles14).len();
        let fix_v = p.fixed_points().len();
        *profile
            .entry(format!(
                "cycles12={fix12} cycles14={fix14} vertices={fix_v}"
            ))
            .or_insert(0) += 1;
        if fix12 + fix14 == 0 {
            continue;
        }
        with_invariant_cycle += 1;
        ev.require(fix_v == 0, || {
            format!(
                "{} fixes vertices {:?} yet leaves a cycle invariant",
                show(session, p),
                p.fixed_points().iter().map(|v| v + 1).collect::<Vec<_>>()
            )
        });
    }
    ev.put("involutions_with_invariant_cycle", with_invariant_cycle);
    ev.put(
        "involution_profile",
        Value::Object(profile.into_iter().map(|(k, v)| (k, json!(v))).collect()),
    );
    ev.require(with_invariant_cycle > 0, || {
        "no involution leaves a 12- or 14-cycle invariant".into()
    });
    ev.finish(CheckId::K8, statement)
}

fn k9(session: &Session) -> CheckResult {
    let statement = "Every involution setwise fixes an odd number of edges, and the edge count \
                     21 is odd.";
    let mut ev = Evidence::new();
    let g = session.graph();
    ev.put("edge_count", g.edge_count());
    ev.require(g.edge_count() == 21, || {
        format!("edge count {}", g.edge_count())
    });
    ev.require(g.edge_count() % 2 == 1, || "edge count is even".into());
    let involutions = elements_of_order(session, &[2]);
    ev.put("involutions", involutions.len());
    ev.require(!involutions.is_empty(), || "no involution exists".into());
    let mut counts_seen: BTreeSet<usize> = BTreeSet::new();
    for p in &involutions {
        let fixed = setwise_fixed_edges(session, p).len();
        counts_seen.insert(fixed);
        ev.require(fixed % 2 == 1, || {
            format!("{} setwise fixes {fixed} edges", show(session, p))
        });
    }
    ev.put("fixed_edge_counts_seen", json!(counts_seen));
    ev.finish(CheckId::K9, statement)
}

fn k10(session: &Session) -> CheckResult {
    let statement = "No automorphism of order 4 or 8 setwise fixes any twelve- or \
                     fourteen-cycle.";
    let mut ev = Evidence::new();
    let elements = elements_of_order(session, &[4, 8]);
    ev.put("order_4_or_8_elements", elements.len());
    ev.require(!elements.is_empty(), || {
        "no order-4 or order-8 automorphism exists".into()
    });
    for p in &elements {
        for (label, which) in [
            ("12", CachedDomain::Cycles12),
            ("14", CachedDomain::Cycles14),
        ] {
            let fixed = invariant_cycles(session, p, which).len();
            ev.require(fixed == 0, || {
                format!(
                    "order-{} element {} fixes {fixed} {label}-cycles",
                    p.order(),
                    show(session, p)
                )
            });
        }
    }
    ev.finish(CheckId::K10, statement)
}

/// The published census of nontrivial proper subgroup types of PGL(2,7).
pub(super) fn expected_census_types() -> Vec<IsoType> {
    vec![
        IsoType::Cyclic(2),
        IsoType::Cyclic(3),
        IsoType::Cyclic(4),
        IsoType::Cyclic(6),
        IsoType::Cyclic(7),
        IsoType::Cyclic(8),
        IsoType::Dihedral(2),
        IsoType::Dihedral(3),
        IsoType::Dihedral(4),
        IsoType::Dihedral(6),
        IsoType::Dihedral(7),
        IsoType::Dihedral(8),
        IsoType::A4,
        IsoType::S4,
        IsoType::Psl27,
        IsoType::Frob21,
        IsoType::Frob42,
    ]
}

fn k11(session: &Session) -> CheckResult {
    let statement = "The isomorphism types of the nontrivial proper subgroups of the \
                     automorphism group are exactly Z2, Z3, Z4, Z6, Z7, Z8, D2, D3, D4, D6, D7, \
                     D8, A4, S4, PSL(2,7), Z7⋊Z3, and Z7⋊Z6.";
    let mut ev = Evidence::new();
    let census = match session.census() {
        Ok(census) => census,
        Err(e) => {
            ev.require(false, || format!("census unavailable: {e}"));
            return ev.finish(CheckId::K11, statement);
        }
    };
    let full_order = session.aut().order();
    ev.put("subgroups_total", census.len());
    let mut type_counts: BTreeMap<IsoType, usize> = BTreeMap::new();
    for record in census {
        if record.order == 1 || record.order == full_order {
            continue;
        }
        *type_counts.entry(record.iso_type).or_insert(0) += 1;
    }
    ev.put(
        "nontrivial_proper_types",
        Value::Object(
            type_counts
                .iter()
                .map(|(t, count)| (t.to_string(), json!(count)))
                .collect(),
        ),
    );
    let found: BTreeSet<IsoType> = type_counts.keys().copied().collect();
    let expected: BTreeSet<IsoType> = expected_census_types().into_iter().collect();
    for t in expected.difference(&found) {
        ev.require(false, || format!("expected subgroup type {t} is absent"));
    }
    for t in found.difference(&expected) {
        ev.require(false, || format!("unexpected subgroup type {t} is present"));
    }
    ev.finish(CheckId::K11, statement)
}

fn k12(session: &Session) -> CheckResult {
    let statement = "Under the verified fixed-point constraints (order-3 elements fix 2 \
                     vertices, realizable involutions fix 0, the identity fixes all 14), a \
                     hypothetical A4 symmetry group would average 30/12 vertex orbits, which is \
                     not an integer.";
    let mut ev = Evidence::new();
    let a4 = PermGroup::generate(vec![
        Perm::from_cycles(4, &[vec![0, 1, 2]]).expect("valid"),
        Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).expect("valid"),
    ])
    .expect("same degree");
    ev.require(a4.order() == 12, || {
        format!("A4 model has order {}", a4.order())
    });
    let spectrum = a4.order_spectrum();
    ev.require(spectrum == BTreeMap::from([(1, 1), (2, 3), (3, 8)]), || {
        format!("A4 model spectrum {spectrum:?}")
    });
    // counts cross-checked by K7 (order 3 -> 2) and K8 + A2/A3 (involutions -> 0)
    let vertex_count = session.graph().vertex_count() as i64;
    ev.require(vertex_count == 14, || {
        format!("vertex count {vertex_count}")
    });
    let fix_count = |p: &Perm| match p.order() {
        1 => Some(vertex_count),
        2 => Some(0),
        3 => Some(2),
        _ => None,
    };
    match burnside_with_override(&a4, fix_count) {
        Ok(value) => {
            let sum: i64 = a4.elements().iter().filter_map(fix_count).sum();
            ev.put("fixed_point_sum", sum);
            ev.put("group_order", 12);
            ev.put("orbit_average", value.to_string());
            ev.put("is_integer", value.is_integer());
            ev.require(value == Rational::new(30, 12), || {
                format!("orbit average {value}")
            });
            ev.require(!value.is_integer(), || "orbit average is an integer".into());
        }
        Err(e) => ev.require(false, || e.to_string()),
    }
    ev.finish(CheckId::K12, statement)
}

fn k13(session: &Session) -> CheckResult {
    let statement = "For every pair of distinct commuting involutions α, β some edge is setwise \
                     fixed by both, and each such common edge is pointwise fixed by one of α, β, \
                     or αβ.";
    let mut ev = Evidence::new();
    let involutions = elements_of_order(session, &[2]);
    let mut pairs = 0usize;
    for (i, alpha) in involutions.iter().enumerate() {
        for beta in &involutions[i + 1..] {
            if !alpha.commutes_with(beta) {
                continue;
            }
            pairs += 1;
            let common: Vec<(usize, usize)> = setwise_fixed_edges(session, alpha)
                .into_iter()
                .filter(|&(a, b)| {
                    let (x, y) = (beta.apply(a), beta.apply(b));
                    (x.min(y), x.max(y)) == (a, b)
                })
                .collect();
            let pair_name = || format!("({}, {})", show(session, alpha), show(session, beta));
            ev.require(!common.is_empty(), || {
                format!("{}: no common setwise-fixed edge", pair_name())
            });
            let product = alpha.compose(beta);
            for &(a, b) in &common {
                let pointwise = [alpha, beta, &product]
                    .iter()
                    .any(|p| p.apply(a) == a && p.apply(b) == b);
                ev.require(pointwise, || {
                    format!(
                        "{}: edge ({}, {}) pointwise fixed by none",
                        pair_name(),
                        a + 1,
                        b + 1
                    )
                });
            }
        }
    }
    ev.put("commuting_involution_pairs", pairs);
    ev.require(pairs > 0, || "no commuting involution pair exists".into());
    ev.finish(CheckId::K13, statement)
}

fn k14(session: &Session) -> CheckResult {
    let statement = "All odd-order elements of D_m × D_m commute for every odd m ≤ 15; the \
                     automorphism group has no element of order 21, and no order-3 element \
                     commutes with any order-7 element.";
    let mut ev = Evidence::new();
    let mut checked_m = Vec::new();
    for m in (1..=15usize).step_by(2) {
        checked_m.push(m);
        match make_dihedral_product(m) {
            Ok(product) => {
                ev.require(product.order() == 4 * m * m, || {
                    format!("D_{m} x D_{m} has order {}", product.order())
                });
                ev.require(product.odd_order_elements_commute(), || {
                    format!("odd-order elements of D_{m} x D_{m} do not all commute")
                });
            }
            Err(e) => ev.require(false, || format!("m={m}: {e}")),
        }
    }
    ev.put("dihedral_product_m", json!(checked_m));
    let spectrum = session.aut().order_spectrum();
    ev.require(!spectrum.contains_key(&21), || {
        "element of order 21 exists".into()
    });
    let threes = elements_of_order(session, &[3]);
    let sevens = elements_of_order(session, &[7]);
    ev.put("order_3_by_order_7_pairs", threes.len() * sevens.len());
    ev.require(!threes.is_empty() && !sevens.is_empty(), || {
        "missing order-3 or order-7 elements".into()
    });
    for a in &threes {
        for b in &sevens {
            ev.require(!a.commutes_with(b), || {
                format!("{} commutes with {}", show(session, a), show(session, b))
            });
        }
    }
    ev.finish(CheckId::K14, statement)
}

fn k15(session: &Session) -> CheckResult {
    let statement = "In the dihedral group of order 28, the only subgroups containing a fixed D7 \
                     are that D7 and the whole group, and the whole group has an element of \
                     order 14.";
    let _ = session;
    let mut ev = Evidence::new();
    let d14 = make_dihedral(14);
    ev.require(d14.order() == 28, || format!("model order {}", d14.order()));
    ev.require(d14.order_spectrum().contains_key(&14), || {
        "no element of order 14 in the model".into()
    });
    match enumerate_subgroups(&d14) {
        Ok(records) => {
            ev.put("subgroups_total", records.len());
            let d7s: Vec<_> = records
                .iter()
                .filter(|r| r.iso_type == IsoType::Dihedral(7))
                .collect();
            ev.put("d7_copies", d7s.len());
            ev.require(!d7s.is_empty(), || "no D7 subgroup in the model".into());
            for d7 in d7s {
                let containing: Vec<usize> = records
                    .iter()
                    .filter(|r| d7.elements.iter().all(|p| r.elements.contains(p)))
                    .map(|r| r.order)
                    .collect();
                ev.require(containing == vec![14, 28], || {
                    format!("subgroups containing a D7 have orders {containing:?}")
                });
            }
        }
        Err(e) => ev.require(false, || e.to_string()),
    }
    ev.finish(CheckId::K15, statement)
}

pub(super) const K16_REFLECTION: &str = "(1,14)(2,13)(3,12)(4,11)(5,10)(6,9)(7,8)";
pub(super) const K16_ROTATION_PRINTED: &str = "(1,3,5,7,9,11,13)(2,4,6,8,10,12)";
pub(super) const K16_ROTATION_CORRECTED: &str = "(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)";
pub(super) const K16_GLIDE: &str = "(v,w)(10,11,6,7,2,3)(1,4,9,12,5,8)";

/// The D7 generated by the two explicit circular-labeling automorphisms,
/// when both parse and preserve the graph.
pub(super) fn k16_d7_group(session: &Session) -> Option<PermGroup> {
    let labeling = fig1(session);
    let rotation = Perm::parse(K16_ROTATION_CORRECTED, &labeling).ok()?;
    let reflection = Perm::parse(K16_REFLECTION, &labeling).ok()?;
    let g = session.graph();
    if !is_graph_automorphism(g, &rotation) || !is_graph_automorphism(g, &reflection) {
        return None;
    }
    PermGroup::generate(vec![rotation, reflection]).ok()
}

fn k16(session: &Session) -> CheckResult {
    let statement = "The explicit permutations are automorphisms: the turnover \
                     (1,14)(2,13)(3,12)(4,11)(5,10)(6,9)(7,8) and the order-7 rotation \
                     (1,3,5,7,9,11,13)(2,4,6,8,10,12,14) generate a D7; the six-point rotation \
                     variant (1,3,5,7,9,11,13)(2,4,6,8,10,12) is rejected (order 42, not an \
                     automorphism); the glide permutation (v,w)(10,11,6,7,2,3)(1,4,9,12,5,8) is \
                     realized under some twelve-cycle relabeling.";
    let mut ev = Evidence::new();
    let g = session.graph();
    let labeling = fig1(session);

    match (
        Perm::parse(K16_REFLECTION, &labeling),
        Perm::parse(K16_ROTATION_CORRECTED, &labeling),
        Perm::parse(K16_ROTATION_PRINTED, &labeling),
    ) {
        (Ok(reflection), Ok(rotation), Ok(printed)) => {
            ev.require(reflection.order() == 2, || {
                format!("turnover has order {}", reflection.order())
            });
            ev.require(is_graph_automorphism(g, &reflection), || {
                "turnover is not an automorphism".into()
            });
            ev.require(rotation.order() == 7, || {
                format!("corrected rotation has order {}", rotation.order())
            });
            ev.require(is_graph_automorphism(g, &rotation), || {
                "corrected rotation is not an automorphism".into()
            });
            ev.put("printed_rotation_order", printed.order());
            ev.require(printed.order() == 42, || {
                format!("printed rotation has order {}", printed.order())
            });
            ev.require(!is_graph_automorphism(g, &printed), || {
                "printed rotation unexpectedly preserves the graph".into()
            });
            ev.put(
                "printed_rotation_note",
                "rejected: order 42 exceeds every automorphism order; the seventh even label \
                 completes the rotation",
            );
            match PermGroup::generate(vec![rotation, reflection]) {
                Ok(group) => {
                    ev.put("generated_group_order", group.order());
                    ev.require(group.order() == 14, || {
                        format!("generated group has order {}", group.order())
                    });
                    let label = iso_type(&group);
                    ev.put("generated_group_type", label.to_string());
                    ev.require(label == IsoType::Dihedral(7), || {
                        format!("generated group has type {label}")
                    });
                }
                Err(e) => ev.require(false, || e.to_string()),
            }
        }
        _ => ev.require(false, || {
            "explicit permutations do not parse on this graph".into()
        }),
    }

    // The glide is printed in the twelve-cycle labeling, which the source
    // figures do not pin down; search every labeling consistent with some
    // twelve-cycle for one that makes it an automorphism.
    let mut matching_labelings = 0usize;
    let mut glide_order_ok = true;
    for cycle in session.cycles(12) {
        let verts = cycle.vertices();
        for start in 0..12 {
            for forward in [true, false] {
                for swap_vw in [false, true] {
                    let mut labels = vec![String::new(); 14];
                    for i in 0..12 {
                        let idx = if forward {
                            (start + i) % 12
                        } else {
                            (start + 12 - i) % 12
                        };
                        labels[verts[idx]] = (i + 1).to_string();
                    }
                    let off: Vec<usize> = (0..14).filter(|&v| !cycle.contains(v)).collect();
                    if off.len() != 2 {
                        continue;
                    }
                    let (v_lab, w_lab) = if swap_vw { ("w", "v") } else { ("v", "w") };
                    labels[off[0]] = v_lab.into();
                    labels[off[1]] = w_lab.into();
                    let Ok(map) = LabelingMap::from_labels(labels) else {
                        continue;
                    };
                    let Ok(glide) = Perm::parse(K16_GLIDE, &map) else {
                        continue;
                    };
                    glide_order_ok &= glide.order() == 6;
                    if is_graph_automorphism(g, &glide) {
                        matching_labelings += 1;
                    }
                }
            }
        }
    }
    ev.put("glide_matching_labelings", matching_labelings);
    ev.require(glide_order_ok, || {
        "glide permutation does not have order 6".into()
    });
    ev.require(matching_labelings > 0, || {
        "no twelve-cycle labeling realizes the glide permutation".into()
    });
    ev.finish(CheckId::K16, statement)
}
