mod common;

use common::{random_graded_basis_change, rng};
use zinbiel_core::catalog::{get, instances};
use zinbiel_core::exactlin::{int, unit_vec, zero_vec, Subspace};
use zinbiel_core::superalgebra::{koszul, AlgebraError};
use zinbiel_core::{Parity, SuperAlgebra};

#[test]
fn multiply_reads_the_table() {
    let n31 = get("N3_1", &[]).unwrap();
    let e1 = n31.basis_element(0);
    assert_eq!(e1.multiply(&e1).unwrap().coeffs(), &unit_vec(3, 1)[..]);
    let z61 = get("Z6_1", &[]).unwrap();
    assert_eq!(z61.mul(&unit_vec(6, 1), &unit_vec(6, 3)), vec![int(0), int(0), int(0), int(0), int(0), int(-2)]);
}

#[test]
fn multiplying_by_zero_gives_zero() {
    for (_, a) in instances() {
        let n = a.dim();
        for i in 0..n {
            assert_eq!(a.mul(&unit_vec(n, i), &zero_vec(n)), zero_vec(n));
            assert_eq!(a.mul(&zero_vec(n), &unit_vec(n, i)), zero_vec(n));
        }
    }
}

#[test]
fn elements_from_different_algebras_do_not_multiply() {
    let a = get("N3_1", &[]).unwrap();
    let b = get("N3_2", &[]).unwrap();
    assert_eq!(a.basis_element(0).multiply(&b.basis_element(0)).unwrap_err(), AlgebraError::AlgebraMismatch);
}

#[test]
fn grading_violation_is_rejected() {
    let err = SuperAlgebra::from_entries(1, 1, &[(0, 0, 1, int(1))]).unwrap_err();
    assert_eq!(err, AlgebraError::GradingViolation { i: 0, j: 0, k: 1 });
}

#[test]
fn koszul_sign_table() {
    assert_eq!(koszul(Parity::Odd, Parity::Odd), int(-1));
    assert_eq!(koszul(Parity::Odd, Parity::Even), int(1));
    assert_eq!(koszul(Parity::Even, Parity::Even), int(1));
}

#[test]
fn subalgebra_generated_by_e1_in_n61() {
    let a = get("N6_1", &[]).unwrap();
    let s = a.generated_subalgebra(&[unit_vec(6, 0)]).unwrap();
    let expected = Subspace::span(6, [&unit_vec(6, 0), &unit_vec(6, 2)]).unwrap();
    assert_eq!(s, expected);
}

#[test]
fn subalgebra_generated_by_full_basis_is_everything() {
    for (_, a) in instances() {
        let n = a.dim();
        let gens: Vec<_> = (0..n).map(|i| unit_vec(n, i)).collect();
        assert_eq!(a.generated_subalgebra(&gens).unwrap().dim(), n);
    }
}

#[test]
fn subalgebra_closure_is_closed() {
    let a = get("Z8_1", &[]).unwrap();
    let s = a.generated_subalgebra(&[unit_vec(8, 1)]).unwrap();
    for x in s.basis() {
        for y in s.basis() {
            assert!(s.contains(&a.mul(x, y)).unwrap());
        }
    }
    assert!(a.restrict(&s).is_ok());
}

#[test]
fn opposite_of_commutative_algebra_is_itself() {
    let n32 = get("N3_2", &[]).unwrap();
    assert_eq!(n32.opposite(), n32);
    let n31 = get("N3_1", &[]).unwrap();
    assert_eq!(n31.opposite(), n31);
    let z61 = get("Z6_1", &[]).unwrap();
    assert_ne!(z61.opposite(), z61);
    assert_eq!(z61.opposite().opposite(), z61);
}

#[test]
fn basis_change_round_trip() {
    let mut g = rng(5);
    for name in ["Z6_1", "N5_1", "OneGen_1_1"] {
        let a = get(name, &[]).unwrap();
        let p = random_graded_basis_change(&mut g, &a);
        let b = a.change_basis(&p).unwrap();
        let back = b.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, a);
    }
}

#[test]
fn odd_square_lands_in_even_part() {
    let a = get("OneGen_1_1", &[]).unwrap();
    assert_eq!(a.n_even(), 1);
    assert_eq!(a.n_odd(), 1);
    let e2 = a.basis_element(1);
    let sq = e2.multiply(&e2).unwrap();
    assert_eq!(sq.parity(), Some(Parity::Even));
    assert_eq!(sq.coeffs(), &unit_vec(2, 0)[..]);
}
