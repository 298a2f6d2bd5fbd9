//! The per-algebra analysis record.
//!
//! Every subspace is written as its canonical basis, so a report can be
//! re-loaded and compared exactly. Each field is computed independently:
//! a failure (error or panic) in one is recorded under `errors` and leaves
//! that field `null`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

use lierad_core::frattini::{
    classify_subsimple, frattini_free_check, frattini_ideal, index_class, jacobson_ideal, jacobson_index,
    subdirect_components, subdirect_embedding, verify_subdirect, EstimateKind, FrattiniFreeCheck, IdealEstimate,
    IndexClassification, IndexEstimate, SubsimpleClass,
};
use lierad_core::radicals::{largest_semisimple_ideal, levi_radical, levi_subalgebra, nilradical, solvable_radical};
use lierad_core::{LieAlgebra, SeriesResult, Subspace};
use serde::{Deserialize, Serialize};

use crate::format::subspace_rows;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceRecord {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl From<&Subspace> for SubspaceRecord {
    fn from(s: &Subspace) -> Self {
        SubspaceRecord { dim: s.dim(), basis: subspace_rows(s) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationRecord {
    pub valid: bool,
    pub antisymmetry_failures: usize,
    pub jacobi_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub dims: Vec<usize>,
    pub stable_index: usize,
    pub terms: Vec<SubspaceRecord>,
}

impl From<&SeriesResult> for SeriesRecord {
    fn from(s: &SeriesResult) -> Self {
        SeriesRecord { dims: s.dims(), stable_index: s.stable_index, terms: s.terms.iter().map(Into::into).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRecord {
    pub kind: String,
    pub low: usize,
    pub high: usize,
}

impl From<&IndexEstimate> for IndexRecord {
    fn from(e: &IndexEstimate) -> Self {
        IndexRecord { kind: kind_name(e.kind), low: e.low, high: e.high }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrattiniRecord {
    pub kind: String,
    pub rule: String,
    pub lower: SubspaceRecord,
    pub upper: SubspaceRecord,
}

impl From<&IdealEstimate> for FrattiniRecord {
    fn from(e: &IdealEstimate) -> Self {
        FrattiniRecord {
            kind: kind_name(e.kind),
            rule: format!("{:?}", e.rule),
            lower: (&e.lower).into(),
            upper: (&e.upper).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub c: SubspaceRecord,
    pub s: SubspaceRecord,
    pub j: SubspaceRecord,
    pub j_summands: Vec<SubspaceRecord>,
    pub m: SubspaceRecord,
    pub nilradical: SubspaceRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrattiniFreeRecord {
    pub frattini_free: bool,
    pub failure: Option<String>,
    pub decomposition: Option<DecompositionRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsimpleRecord {
    pub tag: String,
    pub verified: bool,
}

impl From<&SubsimpleClass> for SubsimpleRecord {
    fn from(c: &SubsimpleClass) -> Self {
        SubsimpleRecord { tag: format!("{:?}", c.tag), verified: c.verified }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexClassRecord {
    pub class: String,
    pub frattini_index: IndexRecord,
    pub jacobson_index: usize,
    pub nilradical_index: usize,
    pub jacobson_ideal_index: usize,
}

impl From<&IndexClassification> for IndexClassRecord {
    fn from(c: &IndexClassification) -> Self {
        IndexClassRecord {
            class: format!("{:?}", c.class),
            frattini_index: (&c.frattini_index).into(),
            jacobson_index: c.jacobson_index,
            nilradical_index: c.nilradical_index,
            jacobson_ideal_index: c.jacobson_ideal_index,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub kernel: SubspaceRecord,
    pub quotient_dim: usize,
    pub class: SubsimpleRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdirectRecord {
    pub components: Vec<ComponentRecord>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub check: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub validation: ValidationRecord,
    pub center: Option<SubspaceRecord>,
    pub derived_series: Option<SeriesRecord>,
    pub lower_central_series: Option<SeriesRecord>,
    pub killing_rank: Option<usize>,
    pub solvable_radical: Option<SubspaceRecord>,
    pub nilradical: Option<SubspaceRecord>,
    pub levi: Option<SubspaceRecord>,
    pub levi_radical: Option<SubspaceRecord>,
    pub largest_semisimple_ideal: Option<SubspaceRecord>,
    pub jacobson_ideal: Option<SubspaceRecord>,
    pub jacobson_index: Option<usize>,
    pub frattini_ideal: Option<FrattiniRecord>,
    pub frattini_free: Option<FrattiniFreeRecord>,
    pub subsimple: Option<SubsimpleRecord>,
    pub index_class: Option<IndexClassRecord>,
    pub subdirect: Option<SubdirectRecord>,
    pub characteristic_audit: Vec<AuditEntry>,
    pub jacobson_chain_audit: Vec<AuditEntry>,
    pub errors: BTreeMap<String, String>,
}

fn kind_name(k: EstimateKind) -> String {
    format!("{k:?}")
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".to_string())
}

struct Collector {
    errors: BTreeMap<String, String>,
}

impl Collector {
    fn field<T>(&mut self, name: &str, f: impl FnOnce() -> Result<T, String>) -> Option<T> {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(Ok(v)) => Some(v),
            Ok(Err(e)) => {
                self.errors.insert(name.to_string(), e);
                None
            }
            Err(p) => {
                self.errors.insert(name.to_string(), panic_message(p));
                None
            }
        }
    }
}

fn sub(s: Subspace) -> Result<SubspaceRecord, String> {
    Ok((&s).into())
}

pub fn analyze(name: &str, l: &LieAlgebra) -> AnalysisReport {
    let mut c = Collector { errors: BTreeMap::new() };
    let v = l.validate();
    let validation = ValidationRecord {
        valid: v.is_valid(),
        antisymmetry_failures: v.antisymmetry.len(),
        jacobi_failures: v.jacobi.len(),
    };

    let center = c.field("center", || sub(l.center()));
    let derived_series = c.field("derived_series", || Ok((&l.derived_series()).into()));
    let lower_central_series = c.field("lower_central_series", || Ok((&l.lower_central_series()).into()));
    let killing_rank = c.field("killing_rank", || Ok(l.killing_rank()));
    let solvable_radical_r = c.field("solvable_radical", || sub(solvable_radical(l)));
    let nilradical_r = c.field("nilradical", || sub(nilradical(l)));
    let levi = c.field("levi", || sub(levi_subalgebra(l).levi));
    let levi_radical_r = c.field("levi_radical", || sub(levi_radical(l)));
    let largest_semisimple = c.field("largest_semisimple_ideal", || sub(largest_semisimple_ideal(l)));
    let jacobson = c.field("jacobson_ideal", || sub(jacobson_ideal(l)));
    let jacobson_index_r = c.field("jacobson_index", || Ok(jacobson_index(l)));
    let frattini = c.field("frattini_ideal", || Ok((&frattini_ideal(l)).into()));
    let frattini_free = c.field("frattini_free", || {
        Ok(match frattini_free_check(l) {
            FrattiniFreeCheck::Free(d) => FrattiniFreeRecord {
                frattini_free: true,
                failure: None,
                decomposition: Some(DecompositionRecord {
                    c: (&d.c).into(),
                    s: (&d.s).into(),
                    j: (&d.j).into(),
                    j_summands: d.j_summands.iter().map(Into::into).collect(),
                    m: (&d.m).into(),
                    nilradical: (&d.nilradical).into(),
                }),
            },
            FrattiniFreeCheck::NotFree(f) => {
                FrattiniFreeRecord { frattini_free: false, failure: Some(format!("{f:?}")), decomposition: None }
            }
        })
    });
    let subsimple =
        c.field("subsimple", || classify_subsimple(l, None).map(|k| (&k).into()).map_err(|e| e.to_string()));
    let index_class_r = c.field("index_class", || Ok((&index_class(l)).into()));
    let is_free = frattini_free.as_ref().is_some_and(|f| f.frattini_free);
    let subdirect = if is_free {
        c.field("subdirect", || {
            let comps = subdirect_components(l).map_err(|e| e.to_string())?;
            let quotients: Vec<LieAlgebra> = comps.iter().map(|k| k.data.quotient.clone()).collect();
            let verified = match subdirect_embedding(&comps) {
                Some(emb) => verify_subdirect(&quotients, &emb, l).map_err(|e| e.to_string())?,
                None => l.dim() == 0,
            };
            let components = comps
                .iter()
                .map(|k| ComponentRecord {
                    kernel: (&k.kernel).into(),
                    quotient_dim: k.data.quotient.dim(),
                    class: (&k.class).into(),
                })
                .collect();
            Ok(SubdirectRecord { components, verified })
        })
    } else {
        None
    };

    let characteristic_audit = characteristic_audit(&mut c, l);
    let jacobson_chain_audit = c.field("jacobson_chain_audit", || Ok(jacobson_chain_audit(l))).unwrap_or_default();

    AnalysisReport {
        schema: SCHEMA_VERSION,
        name: name.to_string(),
        dim: l.dim(),
        basis: l.labels().to_vec(),
        validation,
        center,
        derived_series,
        lower_central_series,
        killing_rank,
        solvable_radical: solvable_radical_r,
        nilradical: nilradical_r,
        levi,
        levi_radical: levi_radical_r,
        largest_semisimple_ideal: largest_semisimple,
        jacobson_ideal: jacobson,
        jacobson_index: jacobson_index_r,
        frattini_ideal: frattini,
        frattini_free,
        subsimple,
        index_class: index_class_r,
        subdirect,
        characteristic_audit,
        jacobson_chain_audit,
        errors: c.errors,
    }
}

type NamedIdeal = (&'static str, fn(&LieAlgebra) -> Option<Subspace>);

fn characteristic_audit(c: &mut Collector, l: &LieAlgebra) -> Vec<AuditEntry> {
    let named: [NamedIdeal; 6] = [
        ("center", |l| Some(l.center())),
        ("solvable_radical", |l| Some(solvable_radical(l))),
        ("nilradical", |l| Some(nilradical(l))),
        ("jacobson_ideal", |l| Some(jacobson_ideal(l))),
        ("levi_radical", |l| Some(levi_radical(l))),
        ("frattini_ideal", |l| frattini_ideal(l).value().cloned()),
    ];
    let mut out = Vec::new();
    for (what, get) in named {
        let key = format!("characteristic_audit.{what}");
        let entry = c.field(&key, || match get(l) {
            Some(i) => l.is_characteristic(&i).map(Some).map_err(|e| e.to_string()),
            None => Ok(None),
        });
        if let Some(Some(passed)) = entry {
            out.push(AuditEntry { check: what.to_string(), passed });
        }
    }
    out
}

/// `upper(φ) ⊆ K_L ⊆ N_L ⊆ rad L`, and `φ ⊆ K_L` when the Frattini ideal is exact.
fn jacobson_chain_audit(l: &LieAlgebra) -> Vec<AuditEntry> {
    let est = frattini_ideal(l);
    let k = jacobson_ideal(l);
    let n = nilradical(l);
    let r = solvable_radical(l);
    let mut out = vec![
        AuditEntry { check: "frattini_lower_in_upper".into(), passed: est.lower.is_subspace_of(&est.upper) },
        AuditEntry { check: "frattini_upper_in_jacobson".into(), passed: est.upper.is_subspace_of(&k) },
        AuditEntry { check: "jacobson_in_nilradical".into(), passed: k.is_subspace_of(&n) },
        AuditEntry { check: "nilradical_in_solvable_radical".into(), passed: n.is_subspace_of(&r) },
    ];
    if let Some(v) = est.value() {
        out.push(AuditEntry { check: "exact_frattini_in_jacobson".into(), passed: v.is_subspace_of(&k) });
    }
    out
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Whether every audit passed and no field failed.
    pub fn is_clean(&self) -> bool {
        self.errors.is_empty()
            && self.validation.valid
            && self.characteristic_audit.iter().all(|a| a.passed)
            && self.jacobson_chain_audit.iter().all(|a| a.passed)
            && self.subdirect.as_ref().is_none_or(|s| s.verified)
    }

    pub fn to_text(&self) -> String {
        let mut t = String::new();
        let dim = |s: &Option<SubspaceRecord>| s.as_ref().map_or("error".to_string(), |s| format!("dim {}", s.dim));
        let _ = writeln!(t, "{} (dim {}, basis {})", self.name, self.dim, self.basis.join(" "));
        let _ = writeln!(t, "  valid: {}", self.validation.valid);
        let _ = writeln!(t, "  center: {}", dim(&self.center));
        if let Some(s) = &self.derived_series {
            let _ = writeln!(t, "  derived series dims: {:?}", s.dims);
        }
        if let Some(s) = &self.lower_central_series {
            let _ = writeln!(t, "  lower central series dims: {:?}", s.dims);
        }
        if let Some(k) = self.killing_rank {
            let _ = writeln!(t, "  Killing rank: {k}");
        }
        let _ = writeln!(t, "  solvable radical: {}", dim(&self.solvable_radical));
        let _ = writeln!(t, "  nilradical: {}", dim(&self.nilradical));
        let _ = writeln!(t, "  Levi subalgebra: {}", dim(&self.levi));
        let _ = writeln!(t, "  Levi radical: {}", dim(&self.levi_radical));
        let _ = writeln!(t, "  largest semisimple ideal: {}", dim(&self.largest_semisimple_ideal));
        let _ = writeln!(t, "  Jacobson ideal: {}", dim(&self.jacobson_ideal));
        if let Some(f) = &self.frattini_ideal {
            let _ = writeln!(t, "  Frattini ideal: {} ({}), dims {}..{}", f.kind, f.rule, f.lower.dim, f.upper.dim);
        }
        if let Some(f) = &self.frattini_free {
            let why = f.failure.as_deref().map(|w| format!(" ({w})")).unwrap_or_default();
            let _ = writeln!(t, "  Frattini-free: {}{why}", f.frattini_free);
        }
        if let Some(s) = &self.subsimple {
            let note = if s.verified { "" } else { " (unverified)" };
            let _ = writeln!(t, "  subsimple class: {}{note}", s.tag);
        }
        if let Some(c) = &self.index_class {
            let _ = writeln!(
                t,
                "  index class: {} (Frattini index {}..{}, Jacobson index {}, nilradical index {})",
                c.class, c.frattini_index.low, c.frattini_index.high, c.jacobson_index, c.nilradical_index
            );
        }
        if let Some(s) = &self.subdirect {
            let _ = writeln!(t, "  subdirect components: {} (verified: {})", s.components.len(), s.verified);
        }
        for a in self.characteristic_audit.iter().chain(&self.jacobson_chain_audit) {
            let _ = writeln!(t, "  audit {}: {}", a.check, if a.passed { "ok" } else { "FAILED" });
        }
        for (k, e) in &self.errors {
            let _ = writeln!(t, "  error in {k}: {e}");
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lierad_core::corpus;

    #[test]
    fn heisenberg_report() {
        let r = analyze("heis3", &corpus::heis3());
        assert!(r.is_clean(), "{:?}", r.errors);
        let f = r.frattini_ideal.as_ref().unwrap();
        assert_eq!(f.kind, "Exact");
        assert_eq!(f.lower.basis, vec![vec!["0", "0", "1"]]);
        let c = r.index_class.as_ref().unwrap();
        assert_eq!((c.class.as_str(), c.frattini_index.low, c.jacobson_index), ("C2", 2, 2));
    }

    #[test]
    fn sl2_report() {
        let r = analyze("sl2", &corpus::sl2());
        assert!(r.is_clean());
        assert_eq!(r.solvable_radical.as_ref().unwrap().dim, 0);
        assert_eq!(r.nilradical.as_ref().unwrap().dim, 0);
        assert_eq!(r.subsimple.as_ref().unwrap().tag, "Simple");
        assert_eq!(r.index_class.as_ref().unwrap().class, "C1");
    }

    #[test]
    fn sl2_v2_report() {
        let r = analyze("sl2_v2", &corpus::sl2_v2());
        assert!(r.is_clean());
        assert_eq!(r.index_class.as_ref().unwrap().class, "C3");
        assert!(r.frattini_free.as_ref().unwrap().frattini_free);
        assert!(r.subdirect.as_ref().unwrap().verified);
    }

    #[test]
    fn report_is_deterministic_and_reloadable() {
        let l = corpus::parse("ut:3").unwrap();
        let a = analyze("ut:3", &l).to_json();
        let b = analyze("ut:3", &l).to_json();
        assert_eq!(a, b);
        let back: AnalysisReport = serde_json::from_str(&a).unwrap();
        assert_eq!(back.to_json(), a);
        assert_eq!(back.schema, 1);
    }
}
