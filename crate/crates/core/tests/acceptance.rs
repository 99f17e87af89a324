//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS|FAIL` line with its tolerance. All arithmetic is exact,
//! so every tolerance is zero.

mod common;

use std::time::{Duration, Instant};

use common::{brute_cocycle_dims, graded_corpus, random_graded_basis_change, rng};
use zinbiel_core::catalog::{get, instances, instances_of, reconstructions, Family};
use zinbiel_core::envelope::{envelope_agreement, DEFAULT_RANK};
use zinbiel_core::exactlin::{int, Matrix, Scalar, Subspace};
use zinbiel_core::extensions::{
    central_extension, cocycle_space, decompose_even, decompose_odd, form_checks, is_essential_cocycle,
    random_double_extensions,
};
use zinbiel_core::identities::{in_variety, is_member, lattice_report};
use zinbiel_core::representations::coadjoint_is_representation;
use zinbiel_core::structure::{cube_zero, dim_bound, dim_bound_check, generator_count, nil_report};
use zinbiel_core::{Parity, SuperAlgebra, VarietyName};

fn report(n: usize, ok: bool, detail: &str) {
    println!("criterion {n}: {} {detail} (tolerance: exact)", if ok { "PASS" } else { "FAIL" });
}

fn nil_index(a: &SuperAlgebra) -> Option<usize> {
    nil_report(a).nil_index
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

/// Symmetric Zinbiel algebras built by the extension machinery.
fn constructed_algebras() -> Vec<(String, SuperAlgebra)> {
    let mut out = Vec::new();
    for r in reconstructions() {
        let base = get(r.base, &[]).unwrap();
        out.push((format!("{}+cocycles", r.base), central_extension(&base, &r.cocycles).unwrap()));
    }
    for name in ["N3_1", "N4_3", "N5_1", "OneGen_1_1"] {
        let a = get(name, &[]).unwrap();
        for p in [Parity::Even, Parity::Odd] {
            let cs = cocycle_space(&a, VarietyName::SymmetricZinbiel, p).unwrap();
            for (i, z) in cs.z2_basis.iter().enumerate() {
                out.push((format!("{name}+z{i}/{p:?}"), central_extension(&a, &[(z.clone(), p)]).unwrap()));
            }
        }
    }
    for (i, g) in random_double_extensions(29, 40, 9).into_iter().enumerate() {
        out.push((format!("double-extension-{i}"), g.algebra));
    }
    out
}

#[test]
fn criterion_01_catalog_identity_sweep() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for f in [Family::TwoStep, Family::ThreeStep, Family::OneGenerated] {
        for (name, _, a) in instances_of(Some(f)) {
            count += 1;
            if !in_variety(&a, VarietyName::SymmetricZinbiel).unwrap().holds() {
                failures.push(name);
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(10);
    report(1, ok, &format!("{count} instances, failures {failures:?}, {:.2}s of 10s", elapsed.as_secs_f64()));
    assert!(ok);
}

#[test]
fn criterion_02_nilpotency() {
    let mut failures = Vec::new();
    for (name, e, a) in instances_of(None) {
        if !e.family.is_symmetric_zinbiel() {
            continue;
        }
        let t = nil_index(&a);
        let family_ok = match e.family {
            Family::TwoStep | Family::OneGenerated => matches!(t, Some(t) if t <= 3),
            _ => t == Some(4),
        };
        if !family_ok || !cube_zero(&a) {
            failures.push(name);
        }
    }
    let constructed = constructed_algebras();
    for (name, a) in &constructed {
        assert!(is_member(a, VarietyName::SymmetricZinbiel).unwrap(), "{name}");
        if !matches!(nil_index(a), Some(t) if t <= 4) || !cube_zero(a) {
            failures.push(name.clone());
        }
    }
    let ok = failures.is_empty();
    report(2, ok, &format!("catalog plus {} constructed algebras, failures {failures:?}", constructed.len()));
    assert!(ok);
}

#[test]
fn criterion_03_dimension_bound() {
    let mut failures = Vec::new();
    for (name, e, a) in instances_of(None) {
        let holds = match dim_bound_check(&a) {
            Ok(b) => b,
            Err(_) => !e.family.is_symmetric_zinbiel(),
        };
        if !holds {
            failures.push(name);
        }
    }
    let z81 = get("Z8_1", &[]).unwrap();
    let z81_ok = generator_count(&z81) == Ok(2) && dim_bound(2) == 34 && z81.dim() == 8;
    let ok = failures.is_empty() && z81_ok;
    report(3, ok, &format!("failures {failures:?}, Z8_1 dim {} <= {}", z81.dim(), dim_bound(2)));
    assert!(ok);
}

#[test]
fn criterion_04_coadjoint_criterion() {
    let mut mismatches = Vec::new();
    let mut count = 0;
    for (name, e, a) in instances_of(None) {
        if !e.family.is_symmetric_zinbiel() {
            continue;
        }
        count += 1;
        let two_step = matches!(nil_index(&a), Some(t) if t <= 3);
        if coadjoint_is_representation(&a) != two_step {
            mismatches.push(name);
        }
    }
    let ok = mismatches.is_empty() && count >= 25;
    report(4, ok, &format!("{count} instances, mismatches {mismatches:?}"));
    assert!(ok);
}

#[test]
fn criterion_05_central_extension_reconstruction() {
    let mut failures = Vec::new();
    let recs = reconstructions();
    for r in &recs {
        let base = get(r.base, &[]).unwrap();
        match central_extension(&base, &r.cocycles) {
            Ok(built) if built == get(r.target, &[]).unwrap() => {}
            _ => failures.push(format!("{} -> {}", r.base, r.target)),
        }
    }
    let targets: Vec<_> = recs.iter().map(|r| r.target).collect();
    let ok = failures.is_empty() && targets == ["Z6_1", "Z6_2_proof_variant", "Z7_1", "Z8_1"];
    report(5, ok, &format!("targets {targets:?}, failures {failures:?}"));
    assert!(ok);
}

#[test]
fn criterion_06_lattice_theorem() {
    let extra: Vec<(String, SuperAlgebra)> = random_double_extensions(31, 20, 8)
        .into_iter()
        .enumerate()
        .filter(|(_, g)| !g.algebra.is_graded())
        .map(|(i, g)| (format!("double-extension-{i}"), g.algebra))
        .collect();
    let lr = lattice_report(&extra).unwrap();
    let failed: Vec<String> = lr
        .failed_edges()
        .map(|c| {
            format!(
                "{} < {} via {} (in larger: {}, in smaller: {})",
                c.edge.smaller, c.edge.larger, c.edge.witness, c.in_larger, c.in_smaller
            )
        })
        .collect();
    let ok = lr.all_certified() && lr.characterization_holds() && lr.zero_algebra_everywhere;
    report(
        6,
        ok,
        &format!(
            "{} edges, uncertified {failed:?}, characterization on {} algebras holds: {}",
            lr.edges.len(),
            lr.characterization.len(),
            lr.characterization_holds()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_07_double_extension_round_trips() {
    let gens = random_double_extensions(7, 60, 10);
    let mut failures = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let (a, b) = (&g.algebra, &g.form);
        let props = form_checks(a, b).unwrap().all()
            && is_member(a, VarietyName::SymmetricZinbiel).unwrap()
            && matches!(nil_index(a), Some(t) if t <= 3);
        let dec = if g.parity == Parity::Even { decompose_even(a, b) } else { decompose_odd(a, b) };
        let round_trip = matches!(dec, Ok(d) if d.h == g.base && d.form_h == g.base_form && d.data == g.data);
        if !props || !round_trip {
            failures.push(i);
        }
    }
    let ok = failures.is_empty() && gens.len() >= 50;
    report(7, ok, &format!("{} generated, failures {failures:?}", gens.len()));
    assert!(ok);
}

#[test]
fn criterion_08_cocycle_solver_cross_validation() {
    let mut corpus: Vec<(String, SuperAlgebra)> = instances().into_iter().filter(|(_, a)| a.dim() <= 6).collect();
    corpus.extend(graded_corpus().into_iter().filter(|(_, a)| a.dim() <= 6));
    corpus.extend(
        random_double_extensions(41, 12, 6).into_iter().enumerate().map(|(i, g)| (format!("double-extension-{i}"), g.algebra)),
    );
    let mut g = rng(8);
    let mut failures = Vec::new();
    for (name, a) in &corpus {
        for p in [Parity::Even, Parity::Odd] {
            let cs = cocycle_space(a, VarietyName::SymmetricZinbiel, p).unwrap();
            let dims = (cs.z2_dim(), cs.b2_dim(), cs.h2_dim);
            if dims != brute_cocycle_dims(a, VarietyName::SymmetricZinbiel, p) {
                failures.push(format!("{name}/{p:?} oracle"));
            }
            for _ in 0..10 {
                let b = a.change_basis(&random_graded_basis_change(&mut g, a)).unwrap();
                let ct = cocycle_space(&b, VarietyName::SymmetricZinbiel, p).unwrap();
                if (ct.z2_dim(), ct.b2_dim(), ct.h2_dim) != dims {
                    failures.push(format!("{name}/{p:?} basis change"));
                    break;
                }
            }
        }
    }
    let ok = failures.is_empty();
    report(8, ok, &format!("{} algebras x 2 parities x 10 basis changes, failures {failures:?}", corpus.len()));
    assert!(ok);
}

#[test]
fn criterion_09_envelope_cross_check() {
    let corpus = graded_corpus();
    let mut disagreements = Vec::new();
    let mut checks = 0;
    for (name, a) in &corpus {
        for v in VarietyName::ALL.into_iter().filter(|v| !v.ungraded_only()) {
            checks += 1;
            let (direct, via) = envelope_agreement(a, v, DEFAULT_RANK).unwrap();
            if direct != via {
                disagreements.push(format!("{name} {v}"));
            }
        }
    }
    let ok = disagreements.is_empty();
    report(9, ok, &format!("{} graded algebras, {checks} verdicts, disagreements {disagreements:?}", corpus.len()));
    assert!(ok);
}

#[test]
fn criterion_10_out_of_scope_disclosure() {
    // Orbit-level uniqueness of extensions and exhaustiveness of the
    // classification are not reproduced. What is checked: the linear
    // cohomology dimensions, and that N5_2, N5_3, N5_4 admit no class whose
    // radical avoids the annihilator.
    let mut failures = Vec::new();
    let n51 = cocycle_space(&get("N5_1", &[]).unwrap(), VarietyName::SymmetricZinbiel, Parity::Even).unwrap();
    if n51.h2_dim != 2 {
        failures.push(format!("N5_1 h2 {}", n51.h2_dim));
    }
    for (name, params) in [("N5_2", vec![]), ("N5_3", vec![]), ("N5_4", vec![int(0)]), ("N5_4", vec![int(2)])] {
        let a = get(name, &params).unwrap();
        let n = a.dim();
        let cs = cocycle_space(&a, VarietyName::SymmetricZinbiel, Parity::Even).unwrap();
        let b2 = Subspace::span(n * n, cs.b2_basis.iter().map(flatten).collect::<Vec<_>>().iter()).unwrap();
        let essential = cs.z2_basis.iter().filter(|z| !b2.contains(&flatten(z)).unwrap()).any(|z| is_essential_cocycle(&a, z));
        if essential {
            failures.push(format!("{name} has an essential class"));
        }
    }
    let ok = failures.is_empty();
    report(
        10,
        ok,
        &format!("orbit-level and exhaustiveness claims not reproduced; substitutes checked, failures {failures:?}"),
    );
    assert!(ok);
}
