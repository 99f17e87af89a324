mod common;

use zinbiel_core::catalog::{get, instances, instances_of, Family};
use zinbiel_core::exactlin::{int, is_zero_vec, unit_vec, Scalar, Subspace};
use zinbiel_core::identities::is_member;
use zinbiel_core::structure::{
    annihilator, cube_zero, cube_zero_witness, dim_bound, dim_bound_check, generator_count, is_two_step,
    left_normed_power_dims, nil_report, odd_generator_grading_check, power_dims_by_shapes, GradingOutcome, StepClass,
    StructureError,
};
use zinbiel_core::{Parity, SuperAlgebra, VarietyName};

/// All values of products of `t` basis vectors under every bracketing.
fn bracketings(a: &SuperAlgebra, t: usize, memo: &mut Vec<Vec<Vec<Scalar>>>) -> Vec<Vec<Scalar>> {
    while memo.len() < t {
        let k = memo.len() + 1;
        let level = if k == 1 {
            (0..a.dim()).map(|i| unit_vec(a.dim(), i)).collect()
        } else {
            let mut out: Vec<Vec<Scalar>> = Vec::new();
            for split in 1..k {
                for x in &memo[split - 1] {
                    for y in &memo[k - split - 1] {
                        let p = a.mul(x, y);
                        if !is_zero_vec(&p) && !out.contains(&p) {
                            out.push(p);
                        }
                    }
                }
            }
            out
        };
        memo.push(level);
    }
    memo[t - 1].clone()
}

/// Nil index by direct enumeration of bracketed basis products.
fn brute_nil_index(a: &SuperAlgebra) -> Option<usize> {
    let mut memo = Vec::new();
    (1..=a.dim() + 1).find(|&t| bracketings(a, t, &mut memo).iter().all(|v| is_zero_vec(v)))
}

#[test]
fn nil_report_examples() {
    let n51 = nil_report(&get("N5_1", &[]).unwrap());
    assert_eq!(n51.nil_index, Some(3));
    assert_eq!(n51.step_class, StepClass::TwoStep);
    let z81 = nil_report(&get("Z8_1", &[]).unwrap());
    assert_eq!(z81.nil_index, Some(4));
    assert_eq!(z81.step_class.label(), "3-step");
    let line = nil_report(&SuperAlgebra::zero(1, 0));
    assert_eq!(line.nil_index, Some(2));
    assert_eq!(line.step_class, StepClass::Abelian);
    assert_eq!(nil_report(&SuperAlgebra::zero(0, 0)).nil_index, Some(1));
}

#[test]
fn non_nilpotent_input_is_reported() {
    let idem = SuperAlgebra::from_entries(1, 0, &[(0, 0, 0, int(1))]).unwrap();
    let r = nil_report(&idem);
    assert_eq!(r.nil_index, None);
    assert_eq!(r.step_class, StepClass::Other);
    assert!(matches!(generator_count(&idem), Err(StructureError::NotNilpotent(_))));
}

#[test]
fn nil_index_matches_bracketing_enumeration() {
    for (name, a) in instances() {
        assert_eq!(nil_report(&a).nil_index, brute_nil_index(&a), "{name}");
    }
}

#[test]
fn power_dims_are_weakly_decreasing() {
    for (name, a) in instances() {
        let d = nil_report(&a).power_dims;
        assert!(d.windows(2).skip(1).all(|w| w[0] >= w[1]), "{name}: {d:?}");
    }
}

#[test]
fn power_dim_enumerations_agree_on_two_step_algebras() {
    for (name, a) in instances() {
        if is_two_step(&a) {
            let len = a.dim() + 1;
            assert_eq!(power_dims_by_shapes(&a, len), left_normed_power_dims(&a, len), "{name}");
        }
    }
}

#[test]
fn cube_zero_examples() {
    assert!(cube_zero(&get("Z7_1", &[]).unwrap()));
    let idem = SuperAlgebra::from_entries(1, 0, &[(0, 0, 0, int(1))]).unwrap();
    assert!(!cube_zero(&idem));
    assert!(cube_zero_witness(&idem).is_some());
    for (name, _, a) in instances_of(None) {
        if !name.starts_with("LatticeWitness") {
            assert!(cube_zero(&a), "{name}");
        }
    }
}

#[test]
fn annihilator_examples() {
    let n31 = get("N3_1", &[]).unwrap();
    let ann = annihilator(&n31);
    assert_eq!(ann.total, Subspace::span(3, [&unit_vec(3, 1), &unit_vec(3, 2)]).unwrap());
    assert_eq!(annihilator(&SuperAlgebra::zero(2, 1)).dim(), 3);
    let z61 = annihilator(&get("Z6_1", &[]).unwrap());
    assert!(z61.even.contains(&unit_vec(6, 5)).unwrap());
}

#[test]
fn annihilator_is_killed_by_every_basis_vector() {
    for (name, a) in instances() {
        let n = a.dim();
        let ann = annihilator(&a);
        for x in ann.total.basis() {
            for i in 0..n {
                assert!(is_zero_vec(&a.mul(x, &unit_vec(n, i))), "{name}");
                assert!(is_zero_vec(&a.mul(&unit_vec(n, i), x)), "{name}");
            }
        }
        assert_eq!(ann.even.dim() + ann.odd.dim(), ann.dim());
    }
}

#[test]
fn generator_count_and_bound_examples() {
    let n61 = get("N6_1", &[]).unwrap();
    assert_eq!(generator_count(&n61), Ok(2));
    assert_eq!(dim_bound(2), 34);
    assert_eq!(dim_bound_check(&n61), Ok(true));
    let one = get("OneGen_2_0", &[]).unwrap();
    assert_eq!(generator_count(&one), Ok(1));
    assert_eq!(dim_bound(1), 3);
    assert_eq!(dim_bound_check(&one), Ok(true));
    let z81 = get("Z8_1", &[]).unwrap();
    assert_eq!(generator_count(&z81), Ok(2));
    assert_eq!(dim_bound_check(&z81), Ok(true));
}

#[test]
fn bound_formula() {
    for d in 0..6usize {
        assert_eq!(dim_bound(d) + d, d * d + 2 * d * d * d + d * d * d * d);
    }
}

#[test]
fn symmetric_zinbiel_algebras_are_three_step() {
    for (name, a) in instances() {
        if is_member(&a, VarietyName::SymmetricZinbiel).unwrap() {
            assert!(matches!(nil_report(&a).nil_index, Some(t) if t <= 4), "{name}");
            assert!(cube_zero(&a), "{name}");
        }
    }
}

#[test]
fn odd_generators_regrade_n32() {
    match odd_generator_grading_check(&get("N3_2", &[]).unwrap()).unwrap() {
        GradingOutcome::Valid(b) => {
            assert_eq!((b.n_even(), b.n_odd()), (1, 2));
            assert_eq!(b.parity(1), Parity::Odd);
            assert!(is_member(&b, VarietyName::SymmetricZinbiel).unwrap());
        }
        other => panic!("expected a valid regrading, got {other:?}"),
    }
}

#[test]
fn odd_generators_exclude_three_step_algebras() {
    for (name, _, a) in instances_of(Some(Family::ThreeStep)) {
        assert!(!odd_generator_grading_check(&a).unwrap().is_valid(), "{name}");
    }
}

#[test]
fn odd_generators_on_zero_algebra() {
    assert!(odd_generator_grading_check(&SuperAlgebra::zero(2, 0)).unwrap().is_valid());
}
