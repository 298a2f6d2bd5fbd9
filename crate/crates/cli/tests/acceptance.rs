//! Acceptance criteria, one line each. Values come from fixed fixtures or
//! from oracles written here against raw structure constants and explicit
//! matrices, not from the library routines under test.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use lierad::suite::{chain_fixtures, expected_frattini_free, random_semidirect};
use lierad_core::chains::*;
use lierad_core::corpus;
use lierad_core::frattini::*;
use lierad_core::lie::direct_product;
use lierad_core::radicals::*;
use lierad_core::{q, LieAlgebra, Matrix, Rational, Subspace};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_241_015;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- oracles -------------------------------------------------------------

/// `[u, v]` straight from the structure constants.
fn bracket(l: &LieAlgebra, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let n = l.dim();
    let mut out = vec![Rational::zero(); n];
    for (i, ui) in u.iter().enumerate().take(n) {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate().take(n) {
            if vj.is_zero() {
                continue;
            }
            for (k, c) in l.structure(i, j).iter().enumerate() {
                out[k] += ui * vj * c;
            }
        }
    }
    out
}

fn brackets_of(l: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut vs = Vec::new();
    for u in a.basis_vectors() {
        for v in b.basis_vectors() {
            vs.push(bracket(l, &u, &v));
        }
    }
    Subspace::from_vectors(l.dim(), vs)
}

/// Least `n` with `S_[n] = 0`, by repeated self-brackets.
fn solvability_oracle(l: &LieAlgebra, s: &Subspace) -> Option<usize> {
    let mut cur = s.clone();
    for n in 0..=l.dim() + 1 {
        if cur.is_zero() {
            return Some(n);
        }
        let next = brackets_of(l, &cur, &cur);
        if next == cur {
            return None;
        }
        cur = next;
    }
    None
}

/// Stable term of the derived series.
fn perfect_core(l: &LieAlgebra) -> Subspace {
    let mut cur = l.full();
    loop {
        let next = brackets_of(l, &cur, &cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn center_oracle(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| l.structure(i, j)[k].clone()).collect::<Vec<_>>());
        }
    }
    Matrix::from_rows(n, &rows).nullspace()
}

/// Matrix units `e_ij`, `i <= j`, of size `n`.
fn upper_units(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut m = Matrix::zeros(n, n);
            m.set(i, j, q(1));
            out.push(m);
        }
    }
    out
}

fn flatten(m: &Matrix) -> Vec<Rational> {
    m.as_slice().to_vec()
}

/// Derived length of `ut(n)` computed with explicit matrix commutators.
fn ut_derived_length(n: usize) -> usize {
    let mut cur: Vec<Matrix> = upper_units(n);
    let mut steps = 0;
    while !cur.is_empty() {
        let mut comms = Vec::new();
        for a in &cur {
            for b in &cur {
                comms.push(flatten(&(&(a * b) - &(b * a))));
            }
        }
        let span = Subspace::from_vectors(n * n, comms);
        cur = span.basis_vectors().into_iter().map(|v| Matrix::from_flat(n, &v)).collect();
        steps += 1;
    }
    steps
}

fn blockwise(a: &Subspace, b: &Subspace) -> Subspace {
    Subspace::direct_sum(&[a.clone(), b.clone()])
}

fn oracle_rank(rows: Vec<Vec<Rational>>, width: usize) -> usize {
    Matrix::from_rows(width, &rows).transpose().rank()
}

fn is_characteristic_oracle(l: &LieAlgebra, i: &Subspace) -> bool {
    l.derivations().iter().all(|d| i.basis_vectors().iter().all(|v| i.contains(&d.mul_vec(v))))
}

// ---- criteria ------------------------------------------------------------

fn c1() -> Outcome {
    let l = corpus::heis3();
    let z = Subspace::coordinate(3, &[2]);
    check(center_oracle(&l) == z, || "center is not span{z}".into())?;
    check(frattini_ideal(&l).value() == Some(&z), || "Frattini ideal is not exactly span{z}".into())?;
    check(jacobson_ideal(&l) == brackets_of(&l, &l.full(), &l.full()), || "K != [L, L]".into())?;
    check(jacobson_ideal(&l) == z, || "Jacobson ideal is not span{z}".into())?;
    let c = index_class(&l);
    let rj = solvability_oracle(&l, &z).unwrap() + 1;
    check(c.frattini_index == IndexEstimate::exact(2) && c.jacobson_index == 2 && rj == 2, || format!("{c:?}"))?;
    check(c.class == IndexClass::C2, || format!("{:?}", c.class))?;
    Ok("Frattini = Jacobson = span{z}, (2,2), C2".into())
}

fn c2() -> Outcome {
    let l = corpus::aff1();
    let x = Subspace::coordinate(2, &[1]);
    check(jacobson_ideal(&l) == x, || "Jacobson ideal is not span{x}".into())?;
    check(frattini_ideal(&l).value() == Some(&l.zero()), || "Frattini ideal is not exactly 0".into())?;
    Ok("K = span{x}, Frattini 0".into())
}

fn c3() -> Outcome {
    check(jacobson_index(&corpus::ut(2)) == 2, || "ut(2) Jacobson index".into())?;
    check(frattini_index(&corpus::ut(2)) == IndexEstimate::exact(1), || "ut(2) Frattini index".into())?;
    check(jacobson_index(&corpus::ut(3)) == 3, || "ut(3) Jacobson index".into())?;
    let mut seen = Vec::new();
    for n in 4..=6 {
        let oracle = ut_derived_length(n);
        let got = jacobson_index(&corpus::ut(n));
        check(got == oracle, || format!("ut({n}): {got} vs matrix oracle {oracle}"))?;
        seen.push(got);
    }
    Ok(format!("ut(2) = 2 (Frattini 1), ut(3) = 3, ut(4..6) = {seen:?}"))
}

fn c4() -> Outcome {
    let corpus = corpus::standard();
    for (name, l) in &corpus {
        let n_s = solvability_oracle(l, &nilradical(l)).ok_or("nilradical not solvable")?;
        let k_s = solvability_oracle(l, &jacobson_ideal(l)).ok_or("K not solvable")?;
        let est = frattini_index(l);
        let r_j = jacobson_index(l);
        check(n_s <= est.low && est.low <= est.high && est.high <= r_j && r_j == k_s + 1 && r_j <= n_s + 1, || {
            format!("{name}: N {n_s}, estimate {est:?}, J {r_j}, K {k_s}")
        })?;
    }
    check(corpus.len() >= 12, || "corpus too small".into())?;
    Ok(format!("{} algebras", corpus.len()))
}

fn c5() -> Outcome {
    for (name, l, want, rs, rj) in [
        ("sl2", corpus::sl2(), IndexClass::C1, 1, 1),
        ("heis3", corpus::heis3(), IndexClass::C2, 2, 2),
        ("sl2_v2", corpus::sl2_v2(), IndexClass::C3, 1, 2),
    ] {
        let c = index_class(&l);
        check(c.class == want && c.frattini_index.value() == Some(rs) && c.jacobson_index == rj, || {
            format!("{name}: {c:?}")
        })?;
    }
    Ok("C1(1,1), C2(2,2), C3(1,2)".into())
}

fn c6() -> Outcome {
    use SubsimpleTag::*;
    let id3 = Matrix::identity(3);
    let cases: Vec<(&str, LieAlgebra, Option<&Matrix>, SubsimpleTag)> = vec![
        ("Q^1", corpus::abelian(1), None, OneDim),
        ("sl2", corpus::sl2(), None, Simple),
        ("sl2sl2", corpus::sl2sl2(), Some(&id3), ClassI),
        ("aff1", corpus::aff1(), None, ClassII),
        ("heis3", corpus::heis3(), None, NotSubsimple),
        ("ut(3)", corpus::ut(3), None, NotSubsimple),
        ("abelian(2)", corpus::abelian(2), None, NotSubsimple),
    ];
    for (name, l, w, want) in &cases {
        let got = classify_subsimple(l, *w).map_err(|e| format!("{name}: {e}"))?;
        check(got.tag == *want && got.verified, || format!("{name}: {got:?}"))?;
        if got.is_subsimple() {
            check(frattini_ideal(l).value() == Some(&l.zero()), || format!("{name}: Frattini ideal"))?;
            check(l.dim() < 2 || center_oracle(l).is_zero(), || format!("{name}: center"))?;
        }
    }
    Ok("7 fixtures; positives have Frattini 0 and center 0".into())
}

fn c7() -> Outcome {
    let mut free = 0;
    for (name, l) in corpus::standard() {
        let got = is_frattini_free(&l);
        check(got == expected_frattini_free(&name), || format!("{name}: is_frattini_free = {got}"))?;
        if !got {
            continue;
        }
        free += 1;
        let d = frattini_free_decomposition(&l).map_err(|e| format!("{name}: {e}"))?;
        verify_decomposition(&l, &d).map_err(|e| format!("{name}: {e}"))?;
        check(
            d.c.join(&d.s).join(&d.j).is_full() && d.c.dim() + d.s.dim() + d.j.dim() == l.dim(),
            || format!("{name}: C + S + J is not a direct decomposition"),
        )?;
        let comps = subdirect_components(&l).map_err(|e| format!("{name}: {e}"))?;
        let kernels = comps.iter().fold(l.full(), |acc, c| acc.meet(&c.kernel));
        check(kernels.is_zero(), || format!("{name}: kernels meet nontrivially"))?;
        check(comps.iter().all(|c| c.class.is_subsimple()), || format!("{name}: non-subsimple component"))?;
        let quotients: Vec<LieAlgebra> = comps.iter().map(|c| c.data.quotient.clone()).collect();
        let emb = subdirect_embedding(&comps).ok_or("no components")?;
        check(verify_subdirect(&quotients, &emb, &l) == Ok(true), || format!("{name}: subdirect round trip"))?;
    }
    Ok(format!("{free} Frattini-free corpus algebras, all round trips verified"))
}

fn c8() -> Outcome {
    let derived = by_name("derived").unwrap();
    let lower = by_name("lower-central-stable").unwrap();
    for (name, l) in corpus::standard() {
        let core = perfect_core(&l);
        check(levi_radical(&l) == core, || format!("{name}: levi radical"))?;
        check(l.stable_derived_term() == core, || format!("{name}: stable derived term"))?;
        check(superposition_closure(&derived, &l).unwrap().0 == core, || format!("{name}: D fixpoint"))?;
        check(superposition_closure(&lower, &l).unwrap().0 == core, || format!("{name}: lower-central fixpoint"))?;
        check(vasilescu_radical(&l) == solvable_radical(&l), || format!("{name}: vasilescu"))?;
    }
    check(largest_semisimple_ideal(&corpus::sl2_v2()).is_zero(), || "sl2_v2 semisimple ideal".into())?;
    Ok("levi radical = stable derived term = both fixpoints; vasilescu = rad".into())
}

fn c9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut algebras = corpus::standard();
    for k in 0..25 {
        algebras.push((format!("random#{k}"), random_semidirect(&mut rng)));
    }
    for (name, l) in &algebras {
        let r = solvable_radical(l);
        check(solvability_oracle(l, &r).is_some() && l.is_ideal(&r), || format!("{name}: rad"))?;
        check(l.quotient(&r).unwrap().quotient.is_killing_nondegenerate() || r.is_full(), || {
            format!("{name}: L/rad not semisimple")
        })?;
        let n = nilradical(l);
        check(l.is_ideal(&n) && l.is_nilpotent_subspace(&n), || format!("{name}: nilradical not a nilpotent ideal"))?;
        check(brackets_of(l, &l.full(), &r).is_subspace_of(&n), || format!("{name}: [L, rad] not in nilradical"))?;
        let levi = levi_subalgebra(l).levi;
        check(l.is_subalgebra(&levi) && levi.meet(&r).is_zero() && levi.join(&r).is_full(), || {
            format!("{name}: Levi complement")
        })?;
        check(levi.is_zero() || l.subalgebra(&levi).unwrap().is_killing_nondegenerate(), || {
            format!("{name}: Levi not semisimple")
        })?;
        for p in registry() {
            let i = p.eval(l).map_err(|e| e.to_string())?;
            check(is_characteristic_oracle(l, &i), || format!("{name}: {} not characteristic", p.name()))?;
        }
    }
    Ok(format!("{} algebras (25 random, seed {SEED})", algebras.len()))
}

type IdealRule = (&'static str, fn(&LieAlgebra) -> Subspace);

fn c10() -> Outcome {
    let base: Vec<(String, LieAlgebra)> = corpus::standard().into_iter().filter(|(n, _)| !n.contains('+')).collect();
    let rules: [IdealRule; 4] =
        [("rad", solvable_radical), ("nilradical", nilradical), ("jacobson", jacobson_ideal), ("levi_radical", levi_radical)];
    let mut pairs = 0;
    for (i, (na, a)) in base.iter().enumerate() {
        for (nb, b) in &base[i..] {
            let p = direct_product(&[a.clone(), b.clone()]);
            for (what, r) in &rules {
                check(r(&p) == blockwise(&r(a), &r(b)), || format!("{na} + {nb}: {what}"))?;
            }
            if let (Some(fa), Some(fb)) = (frattini_ideal(a).value(), frattini_ideal(b).value()) {
                check(frattini_ideal(&p).value() == Some(&blockwise(fa, fb)), || format!("{na} + {nb}: Frattini"))?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn c11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut random_subspace = |max: usize| {
        let k = rng.gen_range(0..=max);
        Subspace::from_vectors(6, (0..k).map(|_| (0..6).map(|_| q(rng.gen_range(-3..=3))).collect()))
    };
    for _ in 0..200 {
        let (y, z) = (random_subspace(6), random_subspace(6));
        let sum_rank = oracle_rank(y.basis_vectors().into_iter().chain(z.basis_vectors()).collect(), 6);
        let meet = y.meet(&z);
        check(meet.basis_vectors().iter().all(|v| y.contains(v) && z.contains(v)), || "meet not inside".into())?;
        check(sum_rank - y.dim() == z.dim() - meet.dim(), || "dim((Y+Z)/Y) != dim(Z/(Y∩Z))".into())?;
    }
    let fixtures = chain_fixtures(DEFAULT_COMPLETION_BOUND)?;
    check(fixtures.len() >= 10, || "too few fixtures".into())?;
    for (k, g) in fixtures.iter().enumerate() {
        check(p_completion(g, 64).unwrap() == *g, || format!("fixture {k}: not idempotent"))?;
        let chain = spanning_chain(g);
        check(chain.is_some() == is_lower_finite_gap(g), || format!("fixture {k}: T2.2 equivalence"))?;
        let top = family_join(g);
        let bottoms: Vec<Subspace> = [TieBreak::Forward, TieBreak::Reverse]
            .iter()
            .map(|&t| maximal_lower_finite_gap_chain_with(g, &top, t).unwrap().pop().unwrap())
            .collect();
        check(bottoms[0] == bottoms[1] && bottoms[0] == delta(g).unwrap(), || format!("fixture {k}: delta"))?;
    }
    Ok(format!("200 pairs in Q^6, {} fixture families", fixtures.len()))
}

fn c12() -> Outcome {
    for (name, l) in corpus::standard() {
        if solvability_oracle(&l, &l.full()).is_some() && is_frattini_free(&l) {
            let d1 = brackets_of(&l, &l.full(), &l.full());
            check(brackets_of(&l, &d1, &d1).is_zero(), || format!("{name}: L_[2] != 0"))?;
        }
        if let Some((levi, center)) = is_jacobson_free(&l) {
            check(center == center_oracle(&l), || format!("{name}: center"))?;
            check(levi.meet(&center).is_zero() && levi.join(&center).is_full(), || format!("{name}: not a sum"))?;
            check(brackets_of(&l, &levi, &center).is_zero(), || format!("{name}: not direct"))?;
        }
    }
    Ok("solvable Frattini-free ⇒ L_[2] = 0; Jacobson-free ⇒ levi ⊕ center".into())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("Heisenberg fixture", c1),
        ("triangular-in-sl2 fixture", c2),
        ("upper-triangular Jacobson indices", c3),
        ("index inequality", c4),
        ("index class fixtures", c5),
        ("subsimple classifier", c6),
        ("Frattini-free structure", c7),
        ("radical identity suite", c8),
        ("certificate suite", c9),
        ("product laws", c10),
        ("chains suite", c11),
        ("solvable and Jacobson-free structure", c12),
    ];
    let mut failed = 0;
    let mut out = std::io::stdout().lock();
    for (k, (title, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d.as_str()),
            Err(e) => ("FAIL", e.as_str()),
        };
        if result.is_err() {
            failed += 1;
        }
        let _ = writeln!(out, "criterion {:>2} {tag}: {title}: {detail}", k + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        let _ = writeln!(out, "{failed} criteria failed");
        ExitCode::FAILURE
    }
}
