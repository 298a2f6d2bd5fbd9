use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::corpus::{abelian, aff1, heis3, sl2, sl2_natural, sl2_v2, sl2sl2, ut};
use crate::{q, Rational};

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| q(x)).collect()
}

fn span(n: usize, vs: &[&[i64]]) -> Subspace {
    Subspace::from_vectors(n, vs.iter().map(|x| v(x)))
}

#[test]
fn validate_examples() {
    assert!(heis3().validate().is_valid());
    assert!(abelian(4).validate().is_valid());
    let mut c = zero_vector(8);
    // [a, b] = a and [b, a] = a
    c[2] = q(1);
    c[4] = q(1);
    let bad = LieAlgebra::raw(vec!["a".into(), "b".into()], c);
    assert_eq!(bad.validate().antisymmetry, vec![(0, 1)]);
}

#[test]
fn jacobi_failure_is_rejected() {
    // [a,b]=a, [a,c]=b, [b,c]=a violates Jacobi
    let r = LieAlgebra::from_int_brackets(&["a", "b", "c"], &[(0, 1, &[1, 0, 0]), (0, 2, &[0, 1, 0]), (1, 2, &[1, 0, 0])]);
    assert!(matches!(r, Err(Error::InvalidAlgebra(_))));
}

#[test]
fn brackets() {
    let h = heis3();
    assert_eq!(h.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])), v(&[0, 0, 1]));
    let u = v(&[3, -1, 2]);
    assert!(is_zero_vector(&h.bracket(&u, &u)));
    assert!(sl2().derived_algebra().is_full());
    assert!(h.checked_bracket(&v(&[1]), &u).is_err());
}

#[test]
fn closures() {
    let h = heis3();
    assert!(h.subalgebra_closure(&span(3, &[&[1, 0, 0], &[0, 1, 0]])).is_full());
    assert!(h.subalgebra_closure(&h.zero()).is_zero());
    assert_eq!(h.ideal_closure(&span(3, &[&[1, 0, 0]])), span(3, &[&[1, 0, 0], &[0, 0, 1]]));
}

#[test]
fn centers() {
    assert_eq!(heis3().center(), span(3, &[&[0, 0, 1]]));
    assert!(abelian(3).center().is_full());
    assert!(sl2().center().is_zero());
}

#[test]
fn series() {
    let d = heis3().derived_series();
    assert_eq!(d.dims(), vec![3, 1, 0]);
    assert_eq!(d.solvability_index(), Some(2));
    let s = sl2().derived_series();
    assert_eq!(s.dims(), vec![3]);
    assert_eq!(s.solvability_index(), None);
    assert_eq!(ut(3).solvability_index(), Some(3));
    assert!(heis3().stable_lower_central_term().is_zero());
    assert_eq!(ut(3).stable_lower_central_term(), crate::Subspace::coordinate(6, &[1, 2, 4]));
    assert!(sl2_v2().stable_derived_term().is_full());
}

#[test]
fn killing_forms() {
    let k = sl2().killing_form();
    assert_eq!(k.rank(), 3);
    assert_eq!(k.get(2, 2), &q(8));
    assert!(abelian(3).killing_form().is_zero());
    assert!(heis3().killing_form().is_zero());
}

#[test]
fn derivation_algebras() {
    let s = sl2();
    let der = s.derivation_algebra();
    assert_eq!(der.dim(), 3);
    assert_eq!(der, s.inner_derivations());
    assert!(abelian(3).derivation_algebra().is_full());
    assert_eq!(heis3().derivation_algebra().dim(), 6);
    for d in heis3().derivations() {
        assert!(heis3().is_derivation(&d));
    }
}

#[test]
fn characteristic_ideals() {
    let h = heis3();
    assert!(h.is_characteristic(&span(3, &[&[0, 0, 1]])).unwrap());
    assert!(!h.is_characteristic(&span(3, &[&[0, 1, 0], &[0, 0, 1]])).unwrap());
    assert!(h.is_characteristic(&h.full()).unwrap());
    assert!(matches!(h.is_characteristic(&span(3, &[&[1, 0, 0]])), Err(Error::NotAnIdeal)));
}

#[test]
fn subalgebras_and_ideals() {
    let h = heis3();
    assert!(h.is_ideal(&span(3, &[&[1, 0, 0], &[0, 0, 1]])));
    let s = sl2();
    let e = span(3, &[&[1, 0, 0]]);
    assert!(s.is_subalgebra(&e) && !s.is_ideal(&e));
    assert!(s.is_ideal(&s.zero()) && s.is_subalgebra(&s.zero()));
}

#[test]
fn quotients() {
    let h = heis3();
    let qd = h.quotient(&span(3, &[&[0, 0, 1]])).unwrap();
    assert_eq!(qd.quotient.dim(), 2);
    assert!(qd.quotient.is_abelian());
    assert_eq!(qd.kernel(), span(3, &[&[0, 0, 1]]));
    assert_eq!(&qd.projection * &qd.section, Matrix::identity(2));

    let same = h.quotient(&h.zero()).unwrap();
    assert_eq!(same.quotient.structure_tensor(), h.structure_tensor());

    let u = ut(2);
    let qd = u.quotient(&span(3, &[&[0, 1, 0], &[1, 0, 1]])).unwrap();
    assert_eq!(qd.quotient.dim(), 1);
    assert!(matches!(h.quotient(&span(3, &[&[1, 0, 0]])), Err(Error::NotAnIdeal)));
}

#[test]
fn quotient_projection_is_homomorphism() {
    let u = ut(3);
    let i = u.derived_algebra();
    let qd = u.quotient(&i).unwrap();
    for a in 0..6 {
        for b in 0..6 {
            let ea = unit_vector(6, a);
            let eb = unit_vector(6, b);
            let lhs = qd.project(&u.bracket(&ea, &eb));
            let rhs = qd.quotient.bracket(&qd.project(&ea), &qd.project(&eb));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn products() {
    let s = operator_semidirect(&sl2_natural()).unwrap();
    assert_eq!(s.dim(), 5);
    assert!(s.validate().is_valid());
    let d = sl2sl2();
    assert_eq!(d.dim(), 6);
    assert!(d.center().is_zero());
    let zero_action: Vec<Matrix> = (0..3).map(|_| Matrix::zeros(3, 3)).collect();
    let semi = semidirect_product(&sl2(), &heis3(), &zero_action).unwrap();
    assert_eq!(semi.structure_tensor(), direct_product(&[sl2(), heis3()]).structure_tensor());
    let bad = vec![Matrix::identity(3); 3];
    assert!(matches!(semidirect_product(&sl2(), &heis3(), &bad), Err(Error::InvalidAction(_))));
}

#[test]
fn subideal_series() {
    let h = heis3();
    let (series, depth) = h.ideal_closure_series(&span(3, &[&[1, 0, 0]])).unwrap();
    assert_eq!(depth, Some(2));
    assert_eq!(series.terms[1], span(3, &[&[1, 0, 0], &[0, 0, 1]]));
    let z = span(3, &[&[0, 0, 1]]);
    assert!(h.ideal_closure_series(&z).unwrap().1.unwrap() <= 1);
    let (_, depth) = sl2().ideal_closure_series(&span(3, &[&[1, 0, 0]])).unwrap();
    assert_eq!(depth, None);
    let _ = aff1();
}
