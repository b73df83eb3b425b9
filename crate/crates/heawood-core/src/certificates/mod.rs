//! Named machine-runnable checks, topological axiom records, and the
//! elimination replay that derives the final symmetry-group list.
//!
//! Everything combinatorial or group-theoretic is verified exhaustively by a
//! check K1..K16. Inputs of topological origin are never verified here; they
//! are recorded as explicit axioms A1..A6, and the derivation keeps the two
//! kinds of justification visibly separate.

mod checks;
mod classify;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::graph::{Cycle, SimpleGraph};
use crate::group::PermGroup;
use crate::iso::IsoType;
use crate::subgroups::{enumerate_subgroups, SubgroupRecord};
use crate::symmetry::{automorphism_group, DomainKind, DomainPoints};
use crate::{Error, Result};

/// Schema tag for the machine report format.
pub const SCHEMA_VERSION: &str = "1";

/// Stable identifiers of the machine checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
    K7,
    K8,
    K9,
    K10,
    K11,
    K12,
    K13,
    K14,
    K15,
    K16,
}

impl CheckId {
    pub const ALL: [CheckId; 16] = [
        CheckId::K1,
        CheckId::K2,
        CheckId::K3,
        CheckId::K4,
        CheckId::K5,
        CheckId::K6,
        CheckId::K7,
        CheckId::K8,
        CheckId::K9,
        CheckId::K10,
        CheckId::K11,
        CheckId::K12,
        CheckId::K13,
        CheckId::K14,
        CheckId::K15,
        CheckId::K16,
    ];
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K{}", *self as usize + 1)
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .iter()
            .find(|id| id.to_string() == s)
            .copied()
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Stable identifiers of the recorded topological axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

impl AxiomId {
    pub const ALL: [AxiomId; 6] = [
        AxiomId::A1,
        AxiomId::A2,
        AxiomId::A3,
        AxiomId::A4,
        AxiomId::A5,
        AxiomId::A6,
    ];
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", *self as usize + 1)
    }
}

impl FromStr for AxiomId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AxiomId::ALL
            .iter()
            .find(|id| id.to_string() == s)
            .copied()
            .ok_or_else(|| Error::Input(format!("unknown axiom id {s}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "VERIFIED")]
    Verified,
    #[serde(rename = "FAILED")]
    Failed,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Verified => write!(f, "VERIFIED"),
            CheckStatus::Failed => write!(f, "FAILED"),
        }
    }
}

/// Outcome of one check: its statement, status, and structured evidence.
/// Failed checks carry concrete counterexamples in the witness.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub statement: String,
    pub status: CheckStatus,
    pub witness: serde_json::Map<String, serde_json::Value>,
}

impl CheckResult {
    pub fn verified(&self) -> bool {
        self.status == CheckStatus::Verified
    }
}

/// A recorded topological input. Axioms are never marked verified; they are
/// assumptions the derivation cites explicitly.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomRecord {
    pub id: String,
    pub statement: String,
    pub source: String,
    pub withheld: bool,
}

/// One step of the elimination replay.
#[derive(Debug, Clone, Serialize)]
pub struct DerivationStep {
    pub action: String,
    pub groups: Vec<String>,
    pub justification: Vec<String>,
    pub status: String,
    pub note: String,
    pub candidates_after: Vec<String>,
}

/// The full certificate: checks, axioms, derivation, and (when sound) the
/// final group list.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub schema_version: String,
    pub graph_digest: String,
    pub checks: Vec<CheckResult>,
    pub axioms: Vec<AxiomRecord>,
    pub derivation: Vec<DerivationStep>,
    pub final_groups: Option<Vec<String>>,
}

impl CertificateReport {
    pub fn all_verified(&self) -> bool {
        self.checks.iter().all(CheckResult::verified)
    }

    /// Machine format: deterministic pretty JSON.
    pub fn to_machine_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable format.
    pub fn to_text_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "certificate report (schema {})\n",
            self.schema_version
        ));
        out.push_str(&format!("graph digest: {}\n\n", self.graph_digest));
        out.push_str("checks:\n");
        for check in &self.checks {
            out.push_str(&format!(
                "  {:<4} {:<9} {}\n",
                check.id,
                check.status.to_string(),
                check.statement
            ));
            for (key, value) in &check.witness {
                out.push_str(&format!("       {key}: {value}\n"));
            }
        }
        out.push_str("\naxioms (assumed, not machine-checked):\n");
        for axiom in &self.axioms {
            let tag = if axiom.withheld {
                "WITHHELD"
            } else {
                "ASSUMED"
            };
            out.push_str(&format!(
                "  {:<4} {:<9} {}\n",
                axiom.id, tag, axiom.statement
            ));
            out.push_str(&format!("       source: {}\n", axiom.source));
        }
        if !self.derivation.is_empty() {
            out.push_str("\nderivation:\n");
            for (i, step) in self.derivation.iter().enumerate() {
                out.push_str(&format!(
                    "  {}. {} {{{}}}  [{}]  ({})\n",
                    i + 1,
                    step.action,
                    step.groups.join(", "),
                    step.justification.join(", "),
                    step.status,
                ));
                if !step.note.is_empty() {
                    out.push_str(&format!("     note: {}\n", step.note));
                }
                out.push_str(&format!(
                    "     candidates: {{{}}}\n",
                    step.candidates_after.join(", ")
                ));
            }
        }
        match &self.final_groups {
            Some(groups) => out.push_str(&format!("\nfinal groups: {}\n", groups.join(", "))),
            None => out.push_str("\nfinal groups: (not emitted)\n"),
        }
        out
    }
}

/// Options for a certification run.
#[derive(Debug, Clone, Default)]
pub struct CertifyOptions {
    /// Axioms to withhold; derivation steps citing them become incomplete.
    pub withheld_axioms: BTreeSet<AxiomId>,
}

/// The statements and sources of the six axioms.
pub fn axiom_catalog() -> Vec<(AxiomId, &'static str, &'static str)> {
    vec![
        (
            AxiomId::A1,
            "No embedding of the Heawood graph in the 3-sphere admits an orientation-reversing \
             homeomorphism, so realizable and positively realizable symmetry groups coincide.",
            "intrinsic chirality (external topological input)",
        ),
        (
            AxiomId::A2,
            "Every realizable automorphism is induced, for some embedding, by an \
             orientation-preserving homeomorphism of the 3-sphere of finite order equal to the \
             automorphism's own order.",
            "finite-order realization and Smith fixed-point theory (external topological input)",
        ),
        (
            AxiomId::A3,
            "A realizable automorphism whose order is a power of 2 setwise fixes at least two \
             14-cycles or at least two 12-cycles.",
            "arf-invariant parity of the 12- and 14-cycle families (external knot-theoretic input)",
        ),
        (
            AxiomId::A4,
            "If an embedding realizes the group G as its symmetry group and some edge is \
             pointwise fixed by no nontrivial element of G, then every subgroup of G is \
             realizable.",
            "subgroup realization for 3-connected graphs (external topological input)",
        ),
        (
            AxiomId::A5,
            "A candidate symmetry group without involutions may be taken to act by \
             orientation-preserving isometries of the 3-sphere, and such a group is cyclic, \
             dihedral, a subgroup of D_m x D_m for some odd m, S4, A4, or A5.",
            "re-embedding, geometrization, and spherical isometry classification (external)",
        ),
        (
            AxiomId::A6,
            "Explicit knotted embeddings realize D7, D3, Z3, and Z6 as symmetry groups, and in \
             the D7 embedding no edge is pointwise fixed by a nontrivial symmetry.",
            "knotted-embedding constructions (external topological input)",
        ),
    ]
}

/// The groups the axiom constructions (A6) directly realize.
pub(crate) fn axiom_a6_groups() -> Vec<IsoType> {
    vec![
        IsoType::Cyclic(3),
        IsoType::Cyclic(6),
        IsoType::Dihedral(3),
        IsoType::Dihedral(7),
    ]
}

/// A verification session: one graph plus lazily computed shared artifacts
/// (automorphism group, cycle censuses, action domains, subgroup census).
pub struct Session {
    graph: SimpleGraph,
    aut: OnceLock<PermGroup>,
    census: OnceLock<std::result::Result<Vec<SubgroupRecord>, String>>,
    domains: [OnceLock<DomainPoints>; 5],
}

/// Index into the session's domain cache.
#[derive(Clone, Copy)]
pub(crate) enum CachedDomain {
    Vertices = 0,
    Edges = 1,
    Cycles6 = 2,
    Cycles12 = 3,
    Cycles14 = 4,
}

impl Session {
    pub fn new(graph: SimpleGraph) -> Self {
        Session {
            graph,
            aut: OnceLock::new(),
            census: OnceLock::new(),
            domains: Default::default(),
        }
    }

    /// A session on the built-in Heawood graph.
    pub fn heawood() -> Self {
        Self::new(SimpleGraph::heawood_standard())
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn aut(&self) -> &PermGroup {
        self.aut.get_or_init(|| automorphism_group(&self.graph))
    }

    /// Cycles of length k; an out-of-range k is reported as an empty census
    /// so checks can fail with counts instead of erroring out.
    pub fn cycles(&self, k: usize) -> Vec<Cycle> {
        if k < 3 || k > self.graph.vertex_count() {
            return Vec::new();
        }
        self.graph.enumerate_cycles(k).expect("k in range")
    }

    /// Cached action domain for the five standard domains (vertices, edges,
    /// 6-, 12-, and 14-cycles); other cycle lengths are not cached.
    pub fn domain_for(&self, kind: DomainKind) -> Option<&DomainPoints> {
        let which = match kind {
            DomainKind::Vertices => CachedDomain::Vertices,
            DomainKind::Edges => CachedDomain::Edges,
            DomainKind::Cycles(6) => CachedDomain::Cycles6,
            DomainKind::Cycles(12) => CachedDomain::Cycles12,
            DomainKind::Cycles(14) => CachedDomain::Cycles14,
            DomainKind::Cycles(_) => return None,
        };
        Some(self.domain(which))
    }

    pub(crate) fn domain(&self, which: CachedDomain) -> &DomainPoints {
        let kind = match which {
            CachedDomain::Vertices => DomainKind::Vertices,
            CachedDomain::Edges => DomainKind::Edges,
            CachedDomain::Cycles6 => DomainKind::Cycles(6),
            CachedDomain::Cycles12 => DomainKind::Cycles(12),
            CachedDomain::Cycles14 => DomainKind::Cycles(14),
        };
        self.domains[which as usize].get_or_init(|| {
            if let DomainKind::Cycles(k) = kind {
                if k > self.graph.vertex_count() {
                    // impossible cycle length: empty census, not an error
                    return DomainPoints::empty(kind);
                }
            }
            DomainPoints::build(&self.graph, kind).expect("domain in range")
        })
    }

    /// The subgroup census of the automorphism group, cached, with the
    /// resource-bound error preserved as text.
    pub fn census(&self) -> std::result::Result<&[SubgroupRecord], String> {
        self.census
            .get_or_init(|| enumerate_subgroups(self.aut()).map_err(|e| e.to_string()))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(String::clone)
    }

    /// Digest of the canonical edge list, used to pin reports to a graph.
    pub fn graph_digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.graph.to_edge_list_string().as_bytes());
        let digest = hasher.finalize();
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        format!("sha256:{hex}")
    }

    /// Runs a single check.
    pub fn run_check(&self, id: CheckId) -> CheckResult {
        checks::run(self, id)
    }

    /// Runs every check plus the derivation replay.
    pub fn run_all(&self, options: &CertifyOptions) -> CertificateReport {
        let checks: Vec<CheckResult> = CheckId::ALL.iter().map(|&id| self.run_check(id)).collect();
        let axioms: Vec<AxiomRecord> = axiom_catalog()
            .into_iter()
            .map(|(id, statement, source)| AxiomRecord {
                id: id.to_string(),
                statement: statement.to_string(),
                source: source.to_string(),
                withheld: options.withheld_axioms.contains(&id),
            })
            .collect();
        let (derivation, final_groups) = classify::derive(self, &checks, options);
        CertificateReport {
            schema_version: SCHEMA_VERSION.to_string(),
            graph_digest: self.graph_digest(),
            checks,
            axioms,
            derivation,
            final_groups: final_groups
                .map(|list| list.into_iter().map(|t| t.to_string()).collect()),
        }
    }

    /// Runs everything and insists on a sound final list.
    pub fn classify(&self, options: &CertifyOptions) -> Result<CertificateReport> {
        let report = self.run_all(options);
        if report.final_groups.is_none() {
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.verified())
                .map(|c| c.id.clone())
                .collect();
            let withheld: Vec<String> = report
                .axioms
                .iter()
                .filter(|a| a.withheld)
                .map(|a| a.id.clone())
                .collect();
            return Err(Error::Input(format!(
                "classification incomplete (failed checks: [{}], withheld axioms: [{}])",
                failed.join(", "),
                withheld.join(", ")
            )));
        }
        Ok(report)
    }
}
