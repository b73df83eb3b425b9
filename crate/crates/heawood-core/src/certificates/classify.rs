//! Elimination replay: from the subgroup census to the final group list.
//!
//! Candidates are the subgroup types of the automorphism group plus the
//! trivial group. Each step removes (or finally retains) candidates, citing
//! the machine checks and axioms that justify it; a step whose citation is
//! failed or withheld leaves its candidates in place and is marked
//! incomplete, and no final list is emitted.

use std::collections::{BTreeMap, BTreeSet};

use super::checks::{expected_census_types, k16_d7_group};
use super::{axiom_a6_groups, CertifyOptions, CheckResult, DerivationStep, Session};
use crate::iso::{iso_type, IsoType};
use crate::subgroups::enumerate_subgroups;

fn labels(types: &BTreeSet<IsoType>) -> Vec<String> {
    types.iter().map(ToString::to_string).collect()
}

struct Replay {
    steps: Vec<DerivationStep>,
    candidates: BTreeSet<IsoType>,
    verified: BTreeMap<String, bool>,
    withheld: BTreeSet<String>,
    complete: bool,
}

impl Replay {
    fn citation_gaps(&self, justification: &[&str]) -> Vec<String> {
        let mut gaps = Vec::new();
        for &id in justification {
            if id.starts_with('K') {
                if !self.verified.get(id).copied().unwrap_or(false) {
                    gaps.push(format!("check {id} failed"));
                }
            } else if self.withheld.contains(id) {
                gaps.push(format!("axiom {id} missing"));
            }
        }
        gaps
    }

    fn eliminate(&mut self, groups: Vec<IsoType>, justification: &[&str], note: &str) {
        let present: BTreeSet<IsoType> = groups
            .into_iter()
            .filter(|t| self.candidates.contains(t))
            .collect();
        let gaps = self.citation_gaps(justification);
        let (status, note_text) = if gaps.is_empty() {
            for t in &present {
                self.candidates.remove(t);
            }
            ("applied".to_string(), note.to_string())
        } else {
            self.complete = false;
            (
                "incomplete".to_string(),
                format!("not eliminated ({})", gaps.join("; ")),
            )
        };
        self.steps.push(DerivationStep {
            action: "eliminate".into(),
            groups: labels(&present),
            justification: justification.iter().map(ToString::to_string).collect(),
            status,
            note: note_text,
            candidates_after: labels(&self.candidates),
        });
    }
}

/// Runs the replay. Returns the steps and, when every step applied cleanly,
/// the final group list.
pub(super) fn derive(
    session: &Session,
    checks: &[CheckResult],
    options: &CertifyOptions,
) -> (Vec<DerivationStep>, Option<Vec<IsoType>>) {
    let verified: BTreeMap<String, bool> = checks
        .iter()
        .map(|c| (c.id.clone(), c.verified()))
        .collect();
    let withheld: BTreeSet<String> = options
        .withheld_axioms
        .iter()
        .map(ToString::to_string)
        .collect();

    // Candidate pool: every subgroup type of the automorphism group, the
    // trivial group included.
    let census = match session.census() {
        Ok(census) => census,
        Err(e) => {
            let step = DerivationStep {
                action: "start".into(),
                groups: Vec::new(),
                justification: vec!["K11".into()],
                status: "incomplete".into(),
                note: format!("census unavailable: {e}"),
                candidates_after: Vec::new(),
            };
            return (vec![step], None);
        }
    };
    let candidates: BTreeSet<IsoType> = census.iter().map(|r| r.iso_type).collect();

    let mut replay = Replay {
        steps: Vec::new(),
        candidates,
        verified,
        withheld,
        complete: true,
    };

    let start_gaps = replay.citation_gaps(&["K11"]);
    let start_ok = start_gaps.is_empty();
    if !start_ok {
        replay.complete = false;
    }
    replay.steps.push(DerivationStep {
        action: "start".into(),
        groups: labels(&replay.candidates),
        justification: vec!["K11".into()],
        status: if start_ok { "applied" } else { "incomplete" }.into(),
        note: if start_ok {
            "candidates are the subgroup types of the automorphism group".into()
        } else {
            format!("candidate list unreliable ({})", start_gaps.join("; "))
        },
        candidates_after: labels(&replay.candidates),
    });
    if !start_ok {
        return (replay.steps, None);
    }

    // Types whose groups contain an element of order 4 or 8, read off the
    // census element data.
    let mut spectra_by_type: BTreeMap<IsoType, bool> = BTreeMap::new();
    for record in census {
        spectra_by_type.entry(record.iso_type).or_insert_with(|| {
            record.elements.iter().any(|p| {
                let o = p.order();
                o == 4 || o == 8
            })
        });
    }
    let with_4_or_8: Vec<IsoType> = spectra_by_type
        .iter()
        .filter_map(|(t, &has)| has.then_some(*t))
        .collect();
    replay.eliminate(
        with_4_or_8,
        &["K3", "K10", "K11", "A2", "A3"],
        "an order-4 or order-8 element would need an invariant 12- or 14-cycle, and none exists",
    );

    replay.eliminate(
        vec![IsoType::Dihedral(2), IsoType::Dihedral(6)],
        &["K8", "K9", "K13", "A2", "A3"],
        "commuting involutions would pointwise fix a common edge, but realizable involutions fix \
         no vertex",
    );

    replay.eliminate(
        vec![IsoType::A4],
        &["K7", "K8", "K12", "A2", "A3"],
        "the Burnside vertex-orbit average 30/12 is not an integer",
    );

    replay.eliminate(
        vec![IsoType::Frob21, IsoType::Frob42],
        &["K3", "K14", "A5"],
        "an order-21 subgroup fits no spherical isometry family: its order-3 and order-7 \
         elements never commute",
    );

    // Retention: the D7 construction plus its subgroups, and the directly
    // constructed Z3, Z6, D3.
    let retain_just: [&str; 4] = ["A4", "A6", "K15", "K16"];
    let retain_gaps = replay.citation_gaps(&retain_just);
    let mut retainable: BTreeSet<IsoType> = axiom_a6_groups().into_iter().collect();
    if let Some(d7) = k16_d7_group(session) {
        if let Ok(subs) = enumerate_subgroups(&d7) {
            for record in subs {
                retainable.insert(record.iso_type);
            }
        }
        debug_assert_eq!(iso_type(&d7), IsoType::Dihedral(7));
    }
    let retained: BTreeSet<IsoType> = retainable
        .iter()
        .filter(|t| replay.candidates.contains(t))
        .copied()
        .collect();
    let retain_ok = retain_gaps.is_empty();
    if !retain_ok {
        replay.complete = false;
    }
    replay.steps.push(DerivationStep {
        action: "retain".into(),
        groups: labels(&retained),
        justification: retain_just.iter().map(ToString::to_string).collect(),
        status: if retain_ok { "applied" } else { "incomplete" }.into(),
        note: if retain_ok {
            "realized by explicit embeddings and subgroup transfer".into()
        } else {
            format!("not retained ({})", retain_gaps.join("; "))
        },
        candidates_after: labels(&replay.candidates),
    });

    let final_groups = if replay.complete && retain_ok && replay.candidates == retained {
        Some(replay.candidates.iter().copied().collect())
    } else {
        None
    };
    (replay.steps, final_groups)
}

/// The candidate list right after the census plus trivial group, for tests
/// and sanity assertions: the full 19-type pool.
#[allow(dead_code)]
pub(super) fn full_candidate_pool() -> Vec<IsoType> {
    let mut pool = vec![IsoType::Trivial];
    pool.extend(expected_census_types());
    pool.push(IsoType::Pgl27);
    pool
}
