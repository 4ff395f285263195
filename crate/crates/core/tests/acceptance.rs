//! Acceptance suite. Each criterion prints one PASS or FAIL line; any
//! inexact match fails the run. Runs without the test harness so the lines
//! are always shown.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use num_rational::BigRational;

use hochschild_core::aq::{crosscheck_aq, tau_rank_bound, AqAlgebra};
use hochschild_core::decomposition::{decompose, DecomposeOptions};
use hochschild_core::hochschild::{
    chain_basis, check_mixed_complex, hc, hh, sc_hch, sc_hh, ScAlgebra,
};
use hochschild_core::linalg::Field;
use hochschild_core::quiver::{parse_algebra, MonomialAlgebra, Quiver};
use hochschild_core::resolution::{gldim_probe, DimProbe};
use hochschild_core::skoldberg::{
    classify_truncated, hh_graded_truncated, hh_p_basic_cycle, hh_total_truncated, q_bound,
    TruncatedPresentation,
};

const F2: Field = Field::Prime(2);

macro_rules! fixture {
    ($name:literal) => {
        include_str!(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../../algebras/",
            $name
        ))
    };
}

const FIXTURES: &[(&str, &str)] = &[
    ("cycle2_trunc2", fixture!("cycle2_trunc2.alg")),
    ("cycle3_trunc2", fixture!("cycle3_trunc2.alg")),
    ("disjoint_loops", fixture!("disjoint_loops.alg")),
    ("dual", fixture!("dual.alg")),
    ("dual_f2", fixture!("dual_f2.alg")),
    ("kronecker", fixture!("kronecker.alg")),
    ("kronecker_trunc2", fixture!("kronecker_trunc2.alg")),
    ("path12", fixture!("path12.alg")),
    ("path1234_trunc3", fixture!("path1234_trunc3.alg")),
    ("path123_trunc2", fixture!("path123_trunc2.alg")),
    ("cycle2_gldim2", fixture!("cycle2_gldim2.alg")),
    ("two_loops_rad2", fixture!("two_loops_rad2.alg")),
];

fn load(name: &str) -> MonomialAlgebra {
    let text = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .expect("known fixture")
        .1;
    parse_algebra(text).expect("fixture parses")
}

type Check = Result<(), String>;

static FAILURES: AtomicUsize = AtomicUsize::new(0);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    ensure(got == want, || {
        format!("{what}: got {got:?}, expected {want:?}")
    })
}

fn report(label: &str, start: Instant, body: impl FnOnce() -> Check) {
    let outcome = body();
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(()) => println!("PASS {label} ({secs:.2}s)"),
        Err(e) => {
            println!("FAIL {label}: {e}");
            FAILURES.fetch_add(1, Ordering::SeqCst);
        }
    }
}

fn criterion_1_aq_counterexample() {
    report("1 A_q counterexample, q = 2", Instant::now(), || {
        let start = Instant::now();
        let a = AqAlgebra::new(&BigRational::from_integer(2.into()), Field::Rational)
            .map_err(|e| e.to_string())?;
        let hh = a.hh(10).map_err(|e| e.to_string())?;
        eq("hh_0", hh[0], 3)?;
        ensure(hh.iter().all(|&d| d >= 2), || format!("hh below 2: {hh:?}"))?;
        for (k, r) in a.tau_ranks(12).into_iter().enumerate() {
            let n = k + 1;
            ensure(r <= tau_rank_bound(n), || {
                format!("rank tau^{n} = {r} > {}", tau_rank_bound(n))
            })?;
        }
        let hch = a.hch(6).map_err(|e| e.to_string())?;
        ensure(hch[2] > 0, || format!("hch^2 = 0 in {hch:?}"))?;
        eq("hch^3..6", &hch[3..], &[0, 0, 0, 0][..])?;
        let check = crosscheck_aq(&a, 4).map_err(|e| e.to_string())?;
        eq("hh routes", &check.resolution_hh, &check.bar_hh)?;
        eq("hch routes", &check.resolution_hch, &check.bar_hch)?;
        let secs = start.elapsed().as_secs();
        ensure(secs < 60, || format!("took {secs}s"))
    });
}

fn criterion_2_dual_numbers() {
    report("2 dual numbers, three routes", Instant::now(), || {
        for (field, want) in [
            (Field::Rational, vec![2, 1, 1, 1, 1, 1, 1, 1, 1]),
            (F2, vec![2; 9]),
        ] {
            let a = load("dual").with_field(field);
            let oracle = hh(&a, 8).map_err(|e| e.to_string())?.total;
            let closed_form: Vec<usize> =
                (0..=8).map(|p| hh_p_basic_cycle(1, 2, p, field)).collect();
            let t = TruncatedPresentation::from_algebra(&a).ok_or("dual is truncated")?;
            let summed = hh_total_truncated(&t, 8);
            eq(&format!("oracle over {field}"), &oracle, &want)?;
            eq(&format!("closed form over {field}"), &closed_form, &want)?;
            eq(&format!("graded sum over {field}"), &summed, &want)?;
        }
        Ok(())
    });
}

fn compare_graded(label: &str, t: &TruncatedPresentation, p_max: usize) -> Check {
    let a = t.algebra().map_err(|e| e.to_string())?;
    let oracle = hh(&a, p_max).map_err(|e| e.to_string())?;
    let formula = hh_graded_truncated(t, p_max);
    let q_max = q_bound(p_max, t.n()).max(oracle.graded.keys().copied().max().unwrap_or(0));
    for p in 0..=p_max {
        for q in 0..=q_max {
            let f = formula.get(&q).map_or(0, |v| v[p]);
            let o = oracle.get(p, q);
            ensure(f == o, || {
                format!("{label}: HH_{{{p},{q}}} formula {f} vs oracle {o}")
            })?;
        }
    }
    Ok(())
}

fn criterion_3_formula_vs_oracle() {
    report("3 closed formula vs graded oracle", Instant::now(), || {
        for field in [Field::Rational, F2] {
            for l in 1..=3 {
                for n in 2..=3 {
                    let t = TruncatedPresentation::new(Quiver::basic_cycle(l), n, field)
                        .map_err(|e| e.to_string())?;
                    compare_graded(&format!("basic cycle l={l} n={n} over {field}"), &t, 6)?;
                }
            }
            let two_loops =
                TruncatedPresentation::new(Quiver::from_indices(1, &[(0, 0), (0, 0)]), 2, field)
                    .map_err(|e| e.to_string())?;
            compare_graded(&format!("two loops over {field}"), &two_loops, 6)?;
            let acyclic = TruncatedPresentation::new(
                Quiver::from_indices(3, &[(0, 1), (1, 2), (0, 2)]),
                2,
                field,
            )
            .map_err(|e| e.to_string())?;
            compare_graded(&format!("acyclic over {field}"), &acyclic, 6)?;
        }
        Ok(())
    });
}

fn breakdown(a: &MonomialAlgebra, n: usize) -> Result<BTreeMap<String, usize>, String> {
    let d = decompose(a, n, &DecomposeOptions::default()).map_err(|e| e.to_string())?;
    Ok(d.orbits
        .iter()
        .filter(|o| o.hh[n] > 0)
        .map(|o| (o.word.clone(), o.hh[n]))
        .collect())
}

fn criterion_4_decomposition() {
    report("4 orbit decomposition", Instant::now(), || {
        let a = load("two_loops_rad2");
        let d = decompose(&a, 3, &DecomposeOptions::default()).map_err(|e| e.to_string())?;
        let oracle = hh(&a, 3).map_err(|e| e.to_string())?.total;
        let t = TruncatedPresentation::from_algebra(&a).ok_or("truncated")?;
        let formula = hh_total_truncated(&t, 3);
        for (route, v) in [
            ("decomposition", &d.hh),
            ("oracle", &oracle),
            ("formula", &formula),
        ] {
            eq(&format!("{route} hh_1"), v[1], 3)?;
            eq(&format!("{route} hh_2"), v[2], 5)?;
        }
        let ones = |words: &[&str]| {
            words
                .iter()
                .map(|w| (w.to_string(), 1))
                .collect::<BTreeMap<_, _>>()
        };
        eq(
            "orbits in degree 1",
            breakdown(&a, 1)?,
            ones(&["x", "y", "x y"]),
        )?;
        eq(
            "orbits in degree 2",
            breakdown(&a, 2)?,
            ones(&["x", "y", "x y", "x x y", "x y y"]),
        )?;

        let r = load("cycle2_gldim2");
        let dr = decompose(&r, 4, &DecomposeOptions::default()).map_err(|e| e.to_string())?;
        let or = hh(&r, 4).map_err(|e| e.to_string())?.total;
        eq(
            "cycle2_gldim2 decomposition",
            &dr.hh[1..],
            &[0, 0, 0, 0][..],
        )?;
        eq("cycle2_gldim2 oracle", &or[1..], &[0, 0, 0, 0][..])?;

        for (name, alg, dec) in [("two loops", &a, &d), ("cycle2_gldim2", &r, &dr)] {
            let direct = hc(alg, 3).map_err(|e| e.to_string())?.total;
            let via_orbits = dec.hc().ok_or("hc requested")?;
            eq(&format!("{name} hc"), &via_orbits[1..=3], &direct[1..=3])?;
        }
        Ok(())
    });
}

fn criterion_5_finite_gldim_vanishing() {
    report(
        "5 finite global dimension forces vanishing",
        Instant::now(),
        || {
            for name in ["path123_trunc2", "cycle2_gldim2"] {
                let a = load(name);
                eq(
                    &format!("{name} gl.dim"),
                    gldim_probe(&a, 10).gldim,
                    DimProbe::Exactly(2),
                )?;
                let v = hh(&a, 6).map_err(|e| e.to_string())?.total;
                eq(&format!("{name} hh_0"), v[0], a.quiver().vertex_count())?;
                eq(&format!("{name} hh_1..6"), &v[1..], &[0; 6][..])?;
            }
            Ok(())
        },
    );
}

fn criterion_6_classification() {
    report("6 truncated classification", Instant::now(), || {
        let cases = [
            ("path123_trunc2", true),
            ("path1234_trunc3", true),
            ("kronecker_trunc2", true),
            ("cycle2_trunc2", false),
            ("cycle3_trunc2", false),
            ("two_loops_rad2", false),
        ];
        for (name, acyclic) in cases {
            let a = load(name);
            let t = TruncatedPresentation::from_algebra(&a).ok_or("truncated fixture")?;
            let c = classify_truncated(&t);
            eq(&format!("{name} acyclic"), c.acyclic, acyclic)?;
            eq(&format!("{name} gl.dim finite"), c.gldim_finite, acyclic)?;
            eq(&format!("{name} hh.dim zero"), c.hhdim_zero, acyclic)?;
            let oracle = hh(&a, 4).map_err(|e| e.to_string())?.total;
            match (&c.witness, acyclic) {
                (None, true) => eq(&format!("{name} oracle hh_1..4"), &oracle[1..], &[0; 4][..])?,
                (Some(w), false) => {
                    // At least five members, and far enough to pass degree 12.
                    let mut count = 5;
                    while *w.progression.members(count).last().unwrap() < 12 {
                        count += 1;
                    }
                    let members = w.progression.members(count);
                    for p in members {
                        let h = hh_p_basic_cycle(w.l, w.n, p, a.field());
                        ensure(h >= 1, || format!("{name}: witness hh_{p} = 0"))?;
                    }
                    ensure(
                        oracle[1..].iter().any(|&d| d > 0) || w.progression.start > 4,
                        || format!("{name}: oracle sees no homology in degrees 1..4"),
                    )?;
                }
                (w, _) => {
                    return Err(format!(
                        "{name}: witness {w:?} inconsistent with acyclic = {acyclic}"
                    ))
                }
            }
        }
        Ok(())
    });
}

fn criterion_7_additivity_and_kunneth() {
    report(
        "7 disjoint union and tensor product",
        Instant::now(),
        || {
            let dual = ScAlgebra::from_monomial(&load("dual"));
            let sum = ScAlgebra::disjoint(&dual, &dual).map_err(|e| e.to_string())?;
            let single_hh = sc_hh(&dual, 3).map_err(|e| e.to_string())?;
            let single_hch = sc_hch(&dual, 3).map_err(|e| e.to_string())?;
            let double = |v: &[usize]| v.iter().map(|d| 2 * d).collect::<Vec<_>>();
            eq(
                "hh of dual ⊔ dual",
                sc_hh(&sum, 3).map_err(|e| e.to_string())?,
                double(&single_hh),
            )?;
            eq(
                "hch of dual ⊔ dual",
                sc_hch(&sum, 3).map_err(|e| e.to_string())?,
                double(&single_hch),
            )?;

            // The same union as a quiver algebra, through the mixed complex.
            let d = load("dual");
            let q = d.quiver().disjoint_union(d.quiver());
            let union =
                MonomialAlgebra::truncated(q, 2, Field::Rational).map_err(|e| e.to_string())?;
            eq(
                "hh of dual ⊔ dual, mixed complex",
                hh(&union, 3).map_err(|e| e.to_string())?.total,
                double(&hh(&d, 3).map_err(|e| e.to_string())?.total),
            )?;

            let tensor = ScAlgebra::tensor(&dual, &dual).map_err(|e| e.to_string())?;
            eq(
                "hh of dual ⊗ dual",
                sc_hh(&tensor, 2).map_err(|e| e.to_string())?,
                vec![4, 4, 5],
            )
        },
    );
}

/// `Σ (−1)ⁿ dim C_{n,q} = Σ (−1)ⁿ hh_{n,q}` on each finite weight block.
fn euler_by_weight(a: &MonomialAlgebra, q_max: usize) -> Check {
    let g = hh(a, q_max).map_err(|e| e.to_string())?;
    let sign = |n: usize| if n.is_multiple_of(2) { 1i64 } else { -1 };
    for q in 0..=q_max {
        let chains: i64 = (0..=q)
            .map(|n| sign(n) * chain_basis(a, n, Some(q)).len() as i64)
            .sum();
        let homology: i64 = (0..=q).map(|n| sign(n) * g.get(n, q) as i64).sum();
        ensure(chains == homology, || {
            format!("weight {q}: chains {chains} vs homology {homology}")
        })?;
    }
    Ok(())
}

fn criterion_8_mixed_complex_axioms() {
    report(
        "8 mixed complex axioms and Euler bookkeeping",
        Instant::now(),
        || {
            for (name, _) in FIXTURES {
                let a = load(name);
                check_mixed_complex(&a, 4).map_err(|e| format!("{name}: {e}"))?;
                euler_by_weight(&a, 4).map_err(|e| format!("{name}: {e}"))?;
                hc(&a, 4).map_err(|e| format!("{name}: {e}"))?;
            }
            Ok(())
        },
    );
}

fn main() {
    let start = Instant::now();
    let criteria: [fn(); 8] = [
        criterion_1_aq_counterexample,
        criterion_2_dual_numbers,
        criterion_3_formula_vs_oracle,
        criterion_4_decomposition,
        criterion_5_finite_gldim_vanishing,
        criterion_6_classification,
        criterion_7_additivity_and_kunneth,
        criterion_8_mixed_complex_axioms,
    ];
    for run in criteria {
        if std::panic::catch_unwind(run).is_err() {
            FAILURES.fetch_add(1, Ordering::SeqCst);
        }
    }
    let failed = FAILURES.load(Ordering::SeqCst);
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed.min(criteria.len()),
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
