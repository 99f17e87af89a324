mod common;

use zinbiel_core::catalog::{get, instances};
use zinbiel_core::exactlin::{int, Matrix};
use zinbiel_core::identities::is_member;
use zinbiel_core::representations::{
    adjoint_pair, coadjoint_is_representation, coadjoint_pair, is_left_representation, is_representation,
    is_right_representation, split_extension, split_extension_unchecked, RepresentationError, RepresentationPair, Side,
};
use zinbiel_core::structure::nil_report;
use zinbiel_core::{SuperAlgebra, VarietyName};

fn two_step(a: &SuperAlgebra) -> bool {
    matches!(nil_report(a).nil_index, Some(t) if t <= 3)
}

#[test]
fn adjoint_pairs_are_representations() {
    let n31 = get("N3_1", &[]).unwrap();
    assert_eq!(is_left_representation(&n31, &adjoint_pair(&n31)).unwrap(), None);
    let n43 = get("N4_3", &[]).unwrap();
    assert_eq!(is_right_representation(&n43, &adjoint_pair(&n43)).unwrap(), None);
    for (name, a) in instances() {
        if is_member(&a, VarietyName::SymmetricZinbiel).unwrap() {
            assert!(is_representation(&a, &adjoint_pair(&a)).unwrap(), "{name}");
        }
    }
}

#[test]
fn zero_maps_are_representations() {
    for (name, a) in instances() {
        if is_member(&a, VarietyName::SymmetricZinbiel).unwrap() {
            let z = RepresentationPair::zero(&a, 2, 1);
            assert_eq!(is_left_representation(&a, &z).unwrap(), None, "{name}");
            assert_eq!(is_right_representation(&a, &z).unwrap(), None, "{name}");
        }
    }
}

#[test]
fn coadjoint_examples() {
    let z61 = get("Z6_1", &[]).unwrap();
    assert!(is_left_representation(&z61, &coadjoint_pair(&z61)).unwrap().is_some());
    let z71 = get("Z7_1", &[]).unwrap();
    assert!(is_right_representation(&z71, &coadjoint_pair(&z71)).unwrap().is_some());
    assert!(coadjoint_is_representation(&get("N5_2", &[]).unwrap()));
    assert!(!coadjoint_is_representation(&get("Z8_1", &[]).unwrap()));
}

#[test]
fn coadjoint_criterion_on_catalog() {
    for (name, a) in instances() {
        if is_member(&a, VarietyName::SymmetricZinbiel).unwrap() {
            assert_eq!(coadjoint_is_representation(&a), two_step(&a), "{name}");
        }
    }
}

#[test]
fn representation_iff_split_extension_is_symmetric_zinbiel() {
    for (name, a) in instances() {
        if !is_member(&a, VarietyName::SymmetricZinbiel).unwrap() {
            continue;
        }
        for rp in [adjoint_pair(&a), coadjoint_pair(&a)] {
            let (ext, _) = split_extension_unchecked(&a, &rp).unwrap();
            assert_eq!(
                is_representation(&a, &rp).unwrap(),
                is_member(&ext, VarietyName::SymmetricZinbiel).unwrap(),
                "{name}"
            );
        }
    }
}

#[test]
fn adjoint_read_off() {
    let a = get("OneGen_2_0", &[]).unwrap();
    let rp = adjoint_pair(&a);
    let mut expected = Matrix::zeros(2, 2);
    expected.set(1, 0, int(1));
    assert_eq!(rp.l[0], expected);
    assert!(rp.l[1].is_zero());
}

#[test]
fn coadjoint_of_zero_algebra_is_zero() {
    let rp = coadjoint_pair(&SuperAlgebra::zero(2, 2));
    assert!(rp.l.iter().chain(&rp.r).all(Matrix::is_zero));
}

#[test]
fn split_extension_examples() {
    let n31 = get("N3_1", &[]).unwrap();
    let (line, perm) = split_extension(&n31, &RepresentationPair::zero(&n31, 1, 0), Side::Both).unwrap();
    assert_eq!(line.dim(), 4);
    assert_eq!(perm, vec![0, 1, 2, 3]);
    assert_eq!(line.mul(&[int(1), int(0), int(0), int(0)], &[int(1), int(0), int(0), int(0)])[1], int(1));
    assert!(is_member(&line, VarietyName::SymmetricZinbiel).unwrap());

    let (adj, _) = split_extension(&n31, &adjoint_pair(&n31), Side::Both).unwrap();
    assert_eq!(adj.dim(), 6);
    assert!(is_member(&adj, VarietyName::SymmetricZinbiel).unwrap());

    let z61 = get("Z6_1", &[]).unwrap();
    assert!(matches!(
        split_extension(&z61, &coadjoint_pair(&z61), Side::Both),
        Err(RepresentationError::Refused(_))
    ));
}

#[test]
fn split_extension_restricts_to_the_algebra() {
    for name in ["N5_1", "Z6_1", "OneGen_1_1"] {
        let a = get(name, &[]).unwrap();
        let n = a.dim();
        let (ext, perm) = split_extension_unchecked(&a, &adjoint_pair(&a)).unwrap();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(ext.structure_constant(perm[i], perm[j], perm[k]), a.structure_constant(i, j, k));
                }
            }
        }
        // Module vectors form an ideal with zero internal product.
        for u in n..2 * n {
            for v in n..2 * n {
                assert!(ext.basis_product(perm[u], perm[v]).is_empty());
            }
            for x in 0..n {
                assert!(ext.basis_product(perm[u], perm[x]).iter().all(|&(k, _)| perm[n..].contains(&k)));
                assert!(ext.basis_product(perm[x], perm[u]).iter().all(|&(k, _)| perm[n..].contains(&k)));
            }
        }
    }
}

#[test]
fn map_count_mismatch() {
    let a = get("N3_1", &[]).unwrap();
    let mut rp = adjoint_pair(&a);
    rp.l.pop();
    assert!(matches!(is_left_representation(&a, &rp), Err(RepresentationError::MapCount { .. })));
}
