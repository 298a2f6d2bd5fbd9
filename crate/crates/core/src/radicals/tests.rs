use super::*;
use crate::corpus::{abelian, aff1, heis3, sl2, sl2_v2, sl2sl2, ut};
use crate::lie::direct_product;
use crate::{q, Rational};
use alloc::vec;

fn v(xs: &[i64]) -> alloc::vec::Vec<Rational> {
    xs.iter().map(|&x| q(x)).collect()
}

fn span(n: usize, vs: &[&[i64]]) -> Subspace {
    Subspace::from_vectors(n, vs.iter().map(|x| v(x)))
}

#[test]
fn solvable_radicals() {
    assert!(solvable_radical(&sl2()).is_zero());
    assert!(solvable_radical(&ut(3)).is_full());
    assert_eq!(solvable_radical(&sl2_v2()), Subspace::coordinate(5, &[3, 4]));
    for l in [sl2(), ut(3), sl2_v2(), heis3()] {
        certify_solvable_radical(&l, &solvable_radical(&l)).unwrap();
    }
}

#[test]
fn nilradicals() {
    assert!(nilradical(&heis3()).is_full());
    assert_eq!(nilradical(&ut(2)), span(3, &[&[0, 1, 0], &[1, 0, 1]]));
    assert_eq!(nilradical(&sl2_v2()), Subspace::coordinate(5, &[3, 4]));
    assert_eq!(nilradical(&aff1()), Subspace::coordinate(2, &[1]));
    for l in [ut(2), ut(3), sl2_v2(), heis3(), aff1()] {
        certify_nilradical(&l, &nilradical(&l)).unwrap();
    }
}

#[test]
fn levi_decompositions() {
    let d = levi_subalgebra(&sl2_v2());
    assert_eq!(d.levi, Subspace::coordinate(5, &[0, 1, 2]));
    assert_eq!(d.radical, Subspace::coordinate(5, &[3, 4]));
    assert!(levi_subalgebra(&ut(3)).levi.is_zero());
    assert!(levi_subalgebra(&sl2()).levi.is_full());
    for l in [sl2_v2(), ut(3), sl2(), direct_product(&[sl2(), heis3()])] {
        certify_levi(&l, &levi_subalgebra(&l)).unwrap();
    }
}

#[test]
fn semisimple_decompositions() {
    assert_eq!(decompose_semisimple(&sl2()).unwrap(), vec![Subspace::full(3)]);
    assert_eq!(
        decompose_semisimple(&sl2sl2()).unwrap(),
        vec![Subspace::coordinate(6, &[0, 1, 2]), Subspace::coordinate(6, &[3, 4, 5])]
    );
    assert!(decompose_semisimple(&abelian(0)).unwrap().is_empty());
    assert!(matches!(decompose_semisimple(&heis3()), Err(Error::DegenerateKillingForm)));
}

#[test]
fn semisimple_ideals() {
    assert!(largest_semisimple_ideal(&sl2_v2()).is_zero());
    assert_eq!(largest_semisimple_ideal(&direct_product(&[sl2(), heis3()])), Subspace::coordinate(6, &[0, 1, 2]));
    assert!(largest_semisimple_ideal(&sl2()).is_full());
}

#[test]
fn levi_radicals() {
    assert!(levi_radical(&ut(3)).is_zero());
    assert!(levi_radical(&sl2_v2()).is_full());
    assert_eq!(levi_radical(&direct_product(&[sl2(), abelian(2)])), Subspace::coordinate(5, &[0, 1, 2]));
    assert!(vasilescu_radical(&ut(2)).is_full());
}

#[test]
fn superposition() {
    let d = by_name("derived").unwrap();
    assert_eq!(superposition_closure(&d, &ut(3)).unwrap(), (Subspace::zero(6), 3));
    assert_eq!(superposition_closure(&d, &sl2()).unwrap(), (Subspace::full(3), 0));
    assert_eq!(superposition_closure(&d, &abelian(0)).unwrap(), (Subspace::zero(0), 0));
}

#[test]
fn convolutions() {
    let k = by_name("center").unwrap();
    assert!(convolution(&k, &k, &heis3()).unwrap().is_full());
    let all = Preradical::new("all", LieAlgebra::full);
    assert!(convolution(&k, &all, &aff1()).unwrap().is_full());
    assert!(convolution(&k, &k, &sl2()).unwrap().is_zero());

    assert_eq!(convolution_closure(&k, &heis3()).unwrap(), (Subspace::full(3), 2));
    assert_eq!(convolution_closure(&k, &aff1()).unwrap(), (Subspace::zero(2), 0));
    assert_eq!(convolution_closure(&k, &sl2()).unwrap(), (Subspace::zero(3), 0));
}

#[test]
fn absorbing() {
    let h = heis3();
    let z = Subspace::coordinate(3, &[2]);
    assert!(!is_absorbing(&by_name("center").unwrap(), &h, &z).unwrap());
    assert!(is_absorbing(&by_name("jacobson").unwrap(), &h, &z).unwrap());
    assert!(is_absorbing(&by_name("rad").unwrap(), &sl2(), &sl2().zero()).unwrap());
}

#[test]
fn contract_violations_are_errors() {
    let bad = Preradical::new("line", |l: &LieAlgebra| Subspace::coordinate(l.dim(), &[0]));
    assert!(matches!(bad.eval(&sl2()), Err(Error::PreradicalContract(_))));
    assert!(superposition_closure(&bad, &sl2()).is_err());
}
