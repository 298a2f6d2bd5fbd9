//! The acceptance corpus run behind `lierad suite`.

use std::panic::{catch_unwind, AssertUnwindSafe};

use lierad_core::chains::*;
use lierad_core::corpus;
use lierad_core::frattini::*;
use lierad_core::lie::{direct_product, semidirect_product};
use lierad_core::radicals::*;
use lierad_core::{q, LieAlgebra, Matrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_241_015;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub completion_bound: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: DEFAULT_SEED, completion_bound: DEFAULT_COMPLETION_BOUND }
    }
}

type Check = fn(&SuiteOptions) -> Result<String, String>;

const CRITERIA: [(u8, &str, Check); 12] = [
    (1, "Heisenberg fixture", heisenberg),
    (2, "triangular-in-sl2 fixture", triangular_in_sl2),
    (3, "upper-triangular Jacobson indices", upper_triangular),
    (4, "index inequality on the corpus", index_inequality),
    (5, "index class fixtures", class_fixtures),
    (6, "subsimple classifier", subsimple),
    (7, "Frattini-free structure", frattini_free_structure),
    (8, "radical identity suite", radical_identities),
    (9, "certificate suite", certificates),
    (10, "product laws", product_laws),
    (11, "chains suite", chains_suite),
    (12, "solvable and Jacobson-free structure", solvable_structure),
];

pub fn run(opts: &SuiteOptions) -> Vec<Outcome> {
    CRITERIA
        .iter()
        .map(|&(id, title, check)| {
            let (passed, detail) = match catch_unwind(AssertUnwindSafe(|| check(opts))) {
                Ok(Ok(d)) => (true, d),
                Ok(Err(e)) => (false, e),
                Err(_) => (false, "panicked".to_string()),
            };
            Outcome { id, title, passed, detail }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn alg(expr: &str) -> LieAlgebra {
    corpus::parse(expr).expect("corpus expression")
}

fn exact(l: &LieAlgebra) -> Option<Subspace> {
    frattini_ideal(l).value().cloned()
}

/// Corpus members that are not direct products.
fn base_corpus() -> Vec<(String, LieAlgebra)> {
    corpus::standard().into_iter().filter(|(n, _)| !n.contains('+')).collect()
}

fn heisenberg(_: &SuiteOptions) -> Result<String, String> {
    let l = corpus::heis3();
    let z = Subspace::coordinate(3, &[2]);
    ensure(exact(&l) == Some(z.clone()), || "Frattini ideal is not exactly span{z}".into())?;
    ensure(jacobson_ideal(&l) == z, || "Jacobson ideal is not span{z}".into())?;
    let c = index_class(&l);
    ensure(c.frattini_index == IndexEstimate::exact(2) && c.jacobson_index == 2, || format!("indices {c:?}"))?;
    ensure(c.class == IndexClass::C2, || format!("class {:?}", c.class))?;
    Ok("span{z}, indices (2,2), C2".into())
}

fn triangular_in_sl2(_: &SuiteOptions) -> Result<String, String> {
    let l = corpus::aff1();
    ensure(jacobson_ideal(&l) == Subspace::coordinate(2, &[1]), || "Jacobson ideal is not span{x}".into())?;
    ensure(exact(&l) == Some(l.zero()), || "Frattini ideal is not exactly zero".into())?;
    Ok("K = span{x}, Frattini ideal 0".into())
}

fn upper_triangular(_: &SuiteOptions) -> Result<String, String> {
    let ut2 = corpus::ut(2);
    ensure(jacobson_index(&ut2) == 2, || "jacobson_index(ut(2)) != 2".into())?;
    ensure(frattini_index(&ut2) == IndexEstimate::exact(1), || "frattini_index(ut(2)) is not exactly 1".into())?;
    ensure(jacobson_index(&corpus::ut(3)) == 3, || "jacobson_index(ut(3)) != 3".into())?;
    let mut found = Vec::new();
    for n in 4..=6 {
        let l = corpus::ut(n);
        let oracle = l.derived_series().solvability_index().ok_or("ut(n) not solvable")?;
        let r = jacobson_index(&l);
        ensure(r == oracle, || format!("ut({n}): jacobson index {r}, derived-series oracle {oracle}"))?;
        found.push(r);
    }
    Ok(format!("ut(2..3) = 2, 3; ut(4..6) = {found:?} (derived series)"))
}

fn index_inequality(_: &SuiteOptions) -> Result<String, String> {
    let corpus = corpus::standard();
    for (name, l) in &corpus {
        let c = index_class(l);
        let n = c.nilradical_index;
        ensure(
            n <= c.frattini_index.low
                && c.frattini_index.low <= c.frattini_index.high
                && c.frattini_index.high <= c.jacobson_index
                && c.jacobson_index == c.jacobson_ideal_index + 1
                && c.jacobson_index <= n + 1,
            || format!("{name}: {c:?}"),
        )?;
    }
    Ok(format!("{} algebras", corpus.len()))
}

fn class_fixtures(_: &SuiteOptions) -> Result<String, String> {
    for (name, want, rs, rj) in
        [("sl2", IndexClass::C1, 1, 1), ("heis3", IndexClass::C2, 2, 2), ("sl2_v2", IndexClass::C3, 1, 2)]
    {
        let c = index_class(&alg(name));
        ensure(c.class == want && c.frattini_index == IndexEstimate::exact(rs) && c.jacobson_index == rj, || {
            format!("{name}: {c:?}")
        })?;
    }
    Ok("sl2 C1(1,1), heis3 C2(2,2), sl2_v2 C3(1,2)".into())
}

fn subsimple(_: &SuiteOptions) -> Result<String, String> {
    use SubsimpleTag::*;
    let tag = |l: &LieAlgebra, w: Option<&Matrix>| classify_subsimple(l, w).map_err(|e| e.to_string());
    let cases: [(&str, Option<Matrix>, SubsimpleTag); 7] = [
        ("abelian:1", None, OneDim),
        ("sl2", None, Simple),
        ("sl2sl2", Some(Matrix::identity(3)), ClassI),
        ("aff1", None, ClassII),
        ("heis3", None, NotSubsimple),
        ("ut:3", None, NotSubsimple),
        ("abelian:2", None, NotSubsimple),
    ];
    for (name, w, want) in &cases {
        let l = alg(name);
        let got = tag(&l, w.as_ref())?;
        ensure(got.tag == *want && got.verified, || format!("{name}: {got:?}"))?;
    }
    for (name, l) in corpus::standard() {
        if tag(&l, None)?.is_subsimple() {
            ensure(exact(&l) == Some(l.zero()), || format!("{name}: subsimple with nonzero Frattini ideal"))?;
            ensure(l.dim() < 2 || l.center().is_zero(), || format!("{name}: subsimple with nonzero center"))?;
        }
    }
    Ok("all fixtures classified; positives centerless and Frattini-free".into())
}

/// Corpus names expected to be Frattini-free: the abelian, reductive and
/// reductive-by-completely-reducible-abelian pieces, and products of them.
pub fn expected_frattini_free(name: &str) -> bool {
    name.split('+').all(|part| {
        matches!(part, "sl2" | "sl2sl2" | "ut:2" | "sl2_v2" | "d1_v2" | "aff1")
            || ["abelian:", "sl2-irrep:", "diag:"].iter().any(|p| part.starts_with(p))
    })
}

fn frattini_free_structure(_: &SuiteOptions) -> Result<String, String> {
    let mut free = 0;
    for (name, l) in corpus::standard() {
        let is_free = is_frattini_free(&l);
        ensure(is_free == expected_frattini_free(&name), || format!("{name}: is_frattini_free = {is_free}"))?;
        if !is_free {
            continue;
        }
        free += 1;
        let d = frattini_free_decomposition(&l).map_err(|e| format!("{name}: {e}"))?;
        verify_decomposition(&l, &d).map_err(|e| format!("{name}: {e}"))?;
        let comps = subdirect_components(&l).map_err(|e| format!("{name}: {e}"))?;
        let quotients: Vec<LieAlgebra> = comps.iter().map(|c| c.data.quotient.clone()).collect();
        let emb = subdirect_embedding(&comps).ok_or_else(|| format!("{name}: no components"))?;
        ensure(verify_subdirect(&quotients, &emb, &l) == Ok(true), || format!("{name}: subdirect round trip failed"))?;
    }
    Ok(format!("{free} Frattini-free algebras, decompositions and subdirect embeddings verified"))
}

fn radical_identities(_: &SuiteOptions) -> Result<String, String> {
    let derived = by_name("derived").expect("registered");
    let lower = by_name("lower-central-stable").expect("registered");
    let corpus = corpus::standard();
    for (name, l) in &corpus {
        let lr = levi_radical(l);
        ensure(lr == l.stable_derived_term(), || format!("{name}: levi radical != stable derived term"))?;
        let sup = superposition_closure(&derived, l).map_err(|e| e.to_string())?.0;
        ensure(sup == lr, || format!("{name}: derived superposition fixpoint != levi radical"))?;
        let sup = superposition_closure(&lower, l).map_err(|e| e.to_string())?.0;
        ensure(sup == lr, || format!("{name}: lower-central superposition fixpoint != levi radical"))?;
        ensure(vasilescu_radical(l) == solvable_radical(l), || format!("{name}: vasilescu != rad"))?;
    }
    ensure(largest_semisimple_ideal(&corpus::sl2_v2()).is_zero(), || "sl2_v2 has a semisimple ideal".into())?;
    Ok(format!("{} algebras", corpus.len()))
}

fn block_diagonal(blocks: &[Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(Matrix::rows).sum();
    let mut m = Matrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m.set(off + i, off + j, b.get(i, j).clone());
            }
        }
        off += b.rows();
    }
    m
}

/// A random semidirect product of corpus pieces: `sl2` on a sum of
/// irreducibles or on `heis3`, `aff1` on a module, or a single derivation of
/// `heis3` or of an abelian algebra.
pub fn random_semidirect(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let piece = match rng.gen_range(0..5) {
        0 => {
            let parts: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..=2)).collect();
            let irreps: Vec<[Matrix; 3]> = parts.iter().map(|&n| corpus::sl2_irrep(n)).collect();
            let phi: Vec<Matrix> =
                (0..3).map(|k| block_diagonal(&irreps.iter().map(|r| r[k].clone()).collect::<Vec<_>>())).collect();
            let dim = phi[0].rows();
            semidirect_product(&corpus::sl2(), &LieAlgebra::abelian(dim), &phi)
        }
        1 => {
            let phi: Vec<Matrix> =
                corpus::sl2_natural().iter().map(|a| block_diagonal(&[a.clone(), Matrix::zeros(1, 1)])).collect();
            semidirect_product(&corpus::sl2(), &corpus::heis3(), &phi)
        }
        2 => {
            let k = rng.gen_range(1..=3);
            let mut d = vec![q(rng.gen_range(-1..=1))];
            for _ in 1..k {
                let prev = d.last().unwrap().clone();
                d.push(if rng.gen_bool(0.5) { prev - q(1) } else { q(rng.gen_range(-2..=2)) });
            }
            let mut n = Matrix::zeros(k, k);
            for i in 0..k - 1 {
                if &d[i] - &d[i + 1] == q(1) && rng.gen_bool(0.7) {
                    n.set(i, i + 1, q(1));
                }
            }
            semidirect_product(&corpus::aff1(), &LieAlgebra::abelian(k), &[Matrix::diagonal(&d), n])
        }
        3 => {
            let h = corpus::heis3();
            let d = h.derivations().iter().fold(Matrix::zeros(3, 3), |acc, b| &acc + &b.scale(&q(rng.gen_range(-2..=2))));
            semidirect_product(&LieAlgebra::abelian(1), &h, &[d])
        }
        _ => {
            let k = rng.gen_range(1..=3);
            let mut d = Matrix::zeros(k, k);
            for i in 0..k {
                for j in 0..k {
                    d.set(i, j, q(rng.gen_range(-2..=2)));
                }
            }
            semidirect_product(&LieAlgebra::abelian(1), &LieAlgebra::abelian(k), &[d])
        }
    };
    piece.expect("random action is a valid homomorphism into derivations")
}

fn certificates(opts: &SuiteOptions) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut algebras = corpus::standard();
    for k in 0..25 {
        algebras.push((format!("random#{k}"), random_semidirect(&mut rng)));
    }
    let registry = registry();
    for (name, l) in &algebras {
        let fail = |e: lierad_core::Error| format!("{name}: {e}");
        certify_solvable_radical(l, &solvable_radical(l)).map_err(fail)?;
        certify_nilradical(l, &nilradical(l)).map_err(fail)?;
        certify_levi(l, &levi_subalgebra(l)).map_err(fail)?;
        for p in &registry {
            let i = p.eval(l).map_err(fail)?;
            ensure(l.is_characteristic(&i).map_err(fail)?, || format!("{name}: {} is not characteristic", p.name()))?;
        }
    }
    Ok(format!("{} algebras ({} random, seed {})", algebras.len(), 25, opts.seed))
}

fn blockwise(a: &Subspace, b: &Subspace) -> Subspace {
    Subspace::direct_sum(&[a.clone(), b.clone()])
}

type IdealRule = (&'static str, fn(&LieAlgebra) -> Subspace);

fn product_laws(_: &SuiteOptions) -> Result<String, String> {
    let base = base_corpus();
    let rules: [IdealRule; 4] = [
        ("rad", solvable_radical),
        ("nilradical", nilradical),
        ("jacobson_ideal", jacobson_ideal),
        ("levi_radical", levi_radical),
    ];
    let mut pairs = 0;
    let mut exact_pairs = 0;
    for (i, (na, a)) in base.iter().enumerate() {
        for (nb, b) in &base[i..] {
            let p = direct_product(&[a.clone(), b.clone()]);
            for (what, r) in &rules {
                ensure(r(&p) == blockwise(&r(a), &r(b)), || format!("{na} + {nb}: {what} is not blockwise"))?;
            }
            if let (Some(fa), Some(fb)) = (exact(a), exact(b)) {
                let fp = frattini_ideal(&p);
                ensure(fp.value() == Some(&blockwise(&fa, &fb)), || format!("{na} + {nb}: Frattini ideal {fp:?}"))?;
                exact_pairs += 1;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs ({exact_pairs} with exact Frattini ideals)"))
}

/// Fixture families for the chain checks: completions of coordinate
/// configurations, flags, and the ideal lattices of small corpus algebras.
pub fn chain_fixtures(bound: usize) -> Result<Vec<SubspaceFamily>, String> {
    let fam = |n: usize, ms: &[&[usize]]| SubspaceFamily::new(n, ms.iter().map(|m| Subspace::coordinate(n, m)));
    let raw: Vec<SubspaceFamily> = vec![
        fam(3, &[&[0, 1], &[0, 2], &[1, 2]]),
        fam(3, &[&[0, 1], &[1, 2]]),
        fam(4, &[&[0], &[0, 1], &[0, 1, 2], &[0, 1, 2, 3]]),
        fam(2, &[&[0, 1], &[0], &[1]]),
        fam(2, &[&[0, 1]]),
        fam(4, &[&[0, 1], &[2, 3], &[1, 2]]),
        fam(5, &[&[0, 1, 2, 3], &[1, 2, 3, 4], &[0, 2, 4]]),
        fam(3, &[&[0], &[1], &[2]]),
        fam(4, &[&[0, 1, 2], &[1, 2, 3], &[0, 3]]),
    ]
    .into_iter()
    .collect::<Result<_, _>>()
    .map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for f in raw {
        out.push(p_completion(&f, bound).map_err(|e| e.to_string())?);
    }
    for name in ["heis3", "ut:3", "sl2_v2", "aff1"] {
        let l = alg(name);
        let ideals = [
            l.full(),
            l.zero(),
            l.center(),
            l.derived_algebra(),
            solvable_radical(&l),
            nilradical(&l),
            jacobson_ideal(&l),
            l.stable_lower_central_term(),
        ];
        let f = SubspaceFamily::new(l.dim(), ideals).map_err(|e| e.to_string())?;
        out.push(p_completion(&f, bound).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn chains_suite(opts: &SuiteOptions) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xc4a1);
    let random_subspace = |rng: &mut ChaCha8Rng, n: usize, max: usize| {
        let k = rng.gen_range(0..=max);
        Subspace::from_vectors(n, (0..k).map(|_| (0..n).map(|_| q(rng.gen_range(-3..=3))).collect()))
    };
    for _ in 0..200 {
        let y = random_subspace(&mut rng, 6, 6);
        let z = random_subspace(&mut rng, 6, 6);
        let (_, codim) = lierad_core::linalg::complement_codim(&z, &y).map_err(|e| e.to_string())?;
        ensure(codim == y.join(&z).dim() - y.dim(), || "dimension identity failed".into())?;
        ensure(z.dim() - codim == y.meet(&z).dim(), || "intersection dimension mismatch".into())?;
    }
    let fixtures = chain_fixtures(opts.completion_bound)?;
    for (k, g) in fixtures.iter().enumerate() {
        let again = p_completion(g, opts.completion_bound.max(g.len())).map_err(|e| e.to_string())?;
        ensure(&again == g, || format!("fixture {k}: completion not idempotent"))?;
        ensure(is_lower_finite_gap(g) == spanning_chain(g).is_some(), || format!("fixture {k}: equivalence fails"))?;
        let top = family_join(g);
        let a = maximal_lower_finite_gap_chain_with(g, &top, TieBreak::Forward).map_err(|e| e.to_string())?;
        let b = maximal_lower_finite_gap_chain_with(g, &top, TieBreak::Reverse).map_err(|e| e.to_string())?;
        let d = delta(g).map_err(|e| format!("fixture {k}: {e}"))?;
        ensure(a.last() == Some(&d) && b.last() == Some(&d), || format!("fixture {k}: chain bottoms differ"))?;
    }
    Ok(format!("200 random pairs in Q^6, {} fixture families", fixtures.len()))
}

fn solvable_structure(_: &SuiteOptions) -> Result<String, String> {
    let mut solvable_free = 0;
    let mut jacobson_free = 0;
    for (name, l) in corpus::standard() {
        if l.is_solvable() && is_frattini_free(&l) {
            let series = l.derived_series();
            ensure(series.terms.get(2).is_none_or(Subspace::is_zero), || format!("{name}: L_[2] != 0"))?;
            solvable_free += 1;
        }
        if let Some((levi, center)) = is_jacobson_free(&l) {
            ensure(
                levi.meet(&center).is_zero()
                    && levi.join(&center).is_full()
                    && l.bracket_spaces(&levi, &center).is_zero()
                    && (!l.is_solvable() || l.is_abelian()),
                || format!("{name}: not levi ⊕ center"),
            )?;
            jacobson_free += 1;
        }
    }
    Ok(format!("{solvable_free} solvable Frattini-free, {jacobson_free} Jacobson-free"))
}
