//! One pass/fail line per acceptance criterion. Runs as a plain binary so
//! the lines always show in `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use stablemap_cohomology::blowup::{betti_blowdown, betti_blowup};
use stablemap_cohomology::groebner::QuotientDimension;
use stablemap_cohomology::kirwan::{quasimap_series, relations_d2, relations_d3};
use stablemap_cohomology::pipeline::bo::bo_equivalence;
use stablemap_cohomology::pipeline::degree2::{degree2_assembled, degree2_closed_form};
use stablemap_cohomology::pipeline::degree3::{
    degree3_assembled, degree3_closed_form, degree3_limit_series,
};
use stablemap_cohomology::pipeline::{
    degree2_betti, degree2_presentation, degree3_betti, degree3_infinite_presentation,
    degree3_p1_presentation,
};
use stablemap_cohomology::poly::MultiPoly;
use stablemap_cohomology::ring::GradedRing;
use stablemap_cohomology::series::{RationalSeries, TPoly};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn timed(limit: Duration, f: impl FnOnce() -> Result<(), String>) -> Outcome {
    let start = Instant::now();
    f()?;
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || {
        format!("took {elapsed:.2?}, limit {limit:?}")
    })?;
    Ok(format!("{elapsed:.2?}"))
}

fn degree2_betti_identity() -> Outcome {
    timed(Duration::from_secs(1), || {
        for n in 2..=8 {
            let assembled = degree2_assembled(n).map_err(|e| e.to_string())?;
            ensure(assembled == degree2_closed_form(n), || {
                format!("n={n}: {assembled}")
            })?;
        }
        let two = degree2_closed_form(2).expand_to(4);
        ensure(two == ints(&[1, 1, 1]), || {
            format!("n=2 expands to {two:?}")
        })
    })
}

fn degree2_ring() -> Outcome {
    let mut last = String::new();
    for n in 2..=4 {
        last = timed(Duration::from_secs(60), || {
            let gb = degree2_presentation(n)
                .map_err(|e| e.to_string())?
                .groebner_basis();
            let h = gb.hilbert_series();
            let betti = degree2_betti(n).map_err(|e| e.to_string())?;
            ensure(h == betti, || format!("n={n}: Hilbert series {h}"))?;
            ensure(gb.krull_dimension() == Some(0), || {
                format!("n={n}: not zero-dimensional")
            })?;
            let sum = betti.as_polynomial().expect("polynomial").coefficient_sum();
            let dim = gb.quotient_vector_dimension();
            let sum = u64::try_from(&sum).expect("small");
            ensure(dim == QuotientDimension::Finite(sum), || {
                format!("n={n}: {dim:?} vs {sum}")
            })
        })?;
    }
    Ok(format!("n=4 in {last}"))
}

fn localization_rings() -> Outcome {
    for n in 1..=3 {
        let h2 = relations_d2(n).groebner_basis().hilbert_series();
        ensure(h2 == quasimap_series(2, n), || format!("d=2 n={n}: {h2}"))?;
        let h3 = relations_d3(n).groebner_basis().hilbert_series();
        ensure(h3 == quasimap_series(3, n), || format!("d=3 n={n}: {h3}"))?;
    }
    Ok(String::new())
}

fn bo() -> Outcome {
    for n in 2..=4 {
        let r = bo_equivalence(n).map_err(|e| e.to_string())?;
        ensure(r.pass(), || r.to_text())?;
    }
    Ok(String::new())
}

fn degree3_betti_identity() -> Outcome {
    timed(Duration::from_secs(1), || {
        for n in 2..=8 {
            let assembled = degree3_assembled(n).map_err(|e| e.to_string())?;
            ensure(assembled == degree3_closed_form(n), || {
                format!("n={n}: {assembled}")
            })?;
        }
        let two = degree3_closed_form(2);
        ensure(two == quasimap_series(3, 2), || {
            format!("n=2: {two} is not the quasimap series")
        })?;
        let e = two.expand_to(8);
        ensure(e == ints(&[1, 1, 2, 1, 1]), || {
            format!("n=2 expands to {e:?}")
        })
    })
}

fn degree3_infinite() -> Outcome {
    let h = degree3_infinite_presentation().hilbert_series();
    let limit = degree3_limit_series();
    ensure(h == limit, || format!("Hilbert series {h}"))?;
    let ci = &RationalSeries::product_ratio(&[10, 10, 8], &[]).unwrap()
        * &RationalSeries::product_ratio(&[], &[2, 4, 6, 4, 2, 4]).unwrap();
    ensure(ci != h, || "complete-intersection formula matched".into())?;
    Ok(String::new())
}

fn degree3_p1() -> Outcome {
    let h = degree3_p1_presentation().hilbert_series();
    let betti = degree3_betti(2).map_err(|e| e.to_string())?;
    ensure(h == betti, || format!("Hilbert series {h}"))?;
    let ci = RationalSeries::product_ratio(&[6, 8], &[2, 4]).unwrap();
    ensure(h == ci, || {
        "complete-intersection formula did not match".into()
    })?;
    Ok(String::new())
}

fn arb_series() -> impl Strategy<Value = RationalSeries> {
    (
        prop::collection::vec(-5i64..6, 1..6),
        prop::collection::vec(1u32..5, 0..4),
    )
        .prop_map(|(num, den)| {
            let terms: Vec<(u32, i64)> = num
                .iter()
                .enumerate()
                .map(|(i, &c)| (2 * i as u32, c))
                .collect();
            let den: Vec<u32> = den.into_iter().map(|k| 2 * k).collect();
            RationalSeries::new(TPoly::from_terms(&terms).unwrap(), &den).unwrap()
        })
}

fn arb_poly(ring: GradedRing) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..4, 0u32..3, 0u32..3), -6i64..7), 0..6).prop_map(move |terms| {
        MultiPoly::from_terms(
            &ring,
            terms.into_iter().map(|((a, b, c), k)| {
                (
                    ring.monomial(&[a, b, c]).unwrap(),
                    stablemap_cohomology::poly::rat(k),
                )
            }),
        )
    })
}

fn properties() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 100,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(arb_series(), arb_series(), 1u32..=10), |(p, q, r)| {
            prop_assert_eq!(betti_blowdown(&betti_blowup(&p, &q, r), &q, r), p);
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    let ring = GradedRing::new(&[("x", 2), ("alpha", 2), ("y", 4)]).unwrap();
    let alpha = MultiPoly::var(&ring, "alpha").unwrap();
    runner
        .run(&arb_poly(ring.clone()), |f| {
            let (even, odd) = f.sym_pair("alpha").unwrap();
            prop_assert_eq!(&even + &(&alpha * &odd), f);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    runner
        .run(
            &(arb_poly(ring.clone()), arb_poly(ring.clone())),
            |(f, g)| {
                prop_assume!(!g.is_zero());
                prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), f);
                Ok(())
            },
        )
        .map_err(|e| e.to_string())?;

    for n in 2..=8 {
        for (d, p) in [(2, degree2_betti(n)), (3, degree3_betti(n))] {
            let p = p.map_err(|e| e.to_string())?;
            let c = p.structural_checks();
            ensure(
                c.is_polynomial && c.nonnegative && c.palindromic == Some(true),
                || format!("degree {d} n={n}: {c:?}"),
            )?;
        }
    }

    let texts = || {
        [
            degree2_presentation(4).unwrap().groebner_basis().to_text(),
            degree3_infinite_presentation().groebner_basis().to_text(),
            relations_d2(3).groebner_basis().to_text(),
        ]
    };
    ensure(texts() == texts(), || {
        "Gröbner text differs between runs".into()
    })?;
    Ok(String::new())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("degree-2 Betti identity, n = 2..8", degree2_betti_identity),
        ("degree-2 ring Hilbert series, n = 2..4", degree2_ring),
        (
            "localization rings, d = 2, 3 and n = 1..3",
            localization_rings,
        ),
        ("recursive generators equal the closed ideal, n = 2..4", bo),
        ("degree-3 Betti identity, n = 2..8", degree3_betti_identity),
        ("degree-3 ring at n = infinity", degree3_infinite),
        ("degree-3 ring at n = 2", degree3_p1),
        ("property suites", properties),
    ];
    let mut ok = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) if note.is_empty() => println!("criterion {}: PASS {name}", i + 1),
            Ok(note) => println!("criterion {}: PASS {name} ({note})", i + 1),
            Err(why) => {
                ok = false;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
