//! Acceptance criteria 1 to 11, each at its stated tolerance and time budget.
//! Every criterion prints one `PASS`/`FAIL` line (written straight to the
//! process stdout so it shows up without `--nocapture`); the test fails if
//! any criterion does.

use elliptika::eisenstein::{
    closed_form, funceq_residual, lambda_jl, lambda_jl_direct, listed_values, residue_at_one, special_value,
    SeriesIndex,
};
use elliptika::lfunc::{alt_hurwitz_zeta, hurwitz_zeta};
use elliptika::theta_jacobi::{fraktur_f, theta};
use elliptika::transforms::{contour_fourier, mellin_reflection_check, MellinKernel, PairId, TransformPair};
use elliptika::{complete_elliptic_e, complete_elliptic_k, params_from_k, params_from_tau, EllipticParams};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

const K: f64 = 0.6;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn taus() -> [Complex64; 2] {
    [c(0.0, 1.0), c(0.3, 1.2)]
}

/// Largest discrepancy, or the first error.
type Worst = Result<f64, String>;

fn worst<I: IntoIterator<Item = Worst>>(items: I) -> Worst {
    let mut w = 0.0_f64;
    for item in items {
        let d = item?;
        if d.is_nan() {
            return Err("NaN discrepancy".into());
        }
        w = w.max(d);
    }
    Ok(w)
}

struct Line {
    number: u8,
    pass: bool,
    text: String,
}

fn judge(number: u8, name: &str, measured: Worst, threshold: f64, elapsed: Duration, budget: Option<Duration>) -> Line {
    let in_time = budget.map_or(true, |b| elapsed <= b);
    let (pass, detail) = match measured {
        Ok(w) => (w < threshold && in_time, format!("worst {w:.3e} < {threshold:.0e}")),
        Err(e) => (false, format!("error: {e}")),
    };
    let budget = budget.map_or(String::new(), |b| format!(" (budget {} s)", b.as_secs()));
    let text = format!(
        "criterion {number:>2} {}: {name}: {detail}; {:.2} s{budget}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    Line { number, pass, text }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn params() -> EllipticParams {
    params_from_k(K).unwrap()
}

fn sweep(ids: &[PairId], ys: &[f64], tol: f64) -> Worst {
    let p = params();
    let jobs: Vec<(PairId, f64)> = ids.iter().flat_map(|&id| ys.iter().map(move |&y| (id, y))).collect();
    worst(jobs.par_iter().map(|&(id, y)| {
        let pair = TransformPair::new(id, &p).map_err(|e| e.to_string())?;
        let numeric = contour_fourier(&pair, y, tol).map_err(|e| format!("{id} at {y}: {e}"))?.value;
        let closed = pair.closed_form(y).map_err(|e| e.to_string())?;
        Ok((numeric - closed).norm())
    }).collect::<Vec<_>>())
}

fn criterion_1() -> Line {
    // the half-line warm-ups against tanh and sech written out here
    let (w, t) = timed(|| {
        let p = params();
        let ys = [0.25, 1.0, 3.0];
        let mut out = Vec::new();
        for (id, exact) in [
            (PairId::SineWarmUp, (|y: f64| 0.5 * PI * (0.5 * PI * y).tanh()) as fn(f64) -> f64),
            (PairId::CosineWarmUp, |y: f64| 0.5 * PI / (0.5 * PI * y).cosh()),
        ] {
            let pair = TransformPair::new(id, &p).unwrap();
            for &y in &ys {
                out.push(
                    contour_fourier(&pair, y, 1e-11)
                        .map(|r| (r.value - exact(y)).norm())
                        .map_err(|e| e.to_string()),
                );
            }
        }
        worst(out)
    });
    judge(1, "warm-up identities", w, 1e-10, t, Some(Duration::from_secs(1)))
}

fn criterion_2() -> Line {
    let (w, t) = timed(|| sweep(&PairId::numbered(), &[-1.3, 0.35, 2.0], 1e-9));
    judge(2, "all 25 pairs at k = 0.6", w, 1e-8, t, Some(Duration::from_secs(60)))
}

fn criterion_3() -> Line {
    let ids: Vec<PairId> = (19..=24).map(PairId::Numbered).collect();
    let (w, t) = timed(|| sweep(&ids, &[-0.05, 0.05], 1e-9));
    judge(3, "double-pole pairs near y = 0", w, 1e-7, t, None)
}

fn criterion_4() -> Line {
    // |observed/predicted - 1| for the defect ratio between |a| = 64 and 32
    let (w, t) = timed(|| {
        let dir = Complex64::from_polar(1.0, PI / 3.0);
        let mut out = Vec::new();
        for s in [c(2.5, 0.0), c(0.5, 1.0), c(3.0, -2.0), c(1.5, 4.0)] {
            let zeta_defect = |a: Complex64| -> Result<f64, String> {
                let z = hurwitz_zeta(s, a).map_err(|e| e.to_string())?.value;
                Ok((z - a.powc(1.0 - s) / (s - 1.0) - 0.5 * a.powc(-s)).norm())
            };
            let alt_defect = |a: Complex64| -> Result<f64, String> {
                let z = alt_hurwitz_zeta(s, a).map_err(|e| e.to_string())?.value;
                Ok((z - 0.5 * a.powc(-s) - s / 4.0 * a.powc(-s - 1.0)).norm())
            };
            out.push(zeta_defect(64.0 * dir).and_then(|far| {
                let ratio = far / zeta_defect(32.0 * dir)?;
                Ok((ratio / 2f64.powf(-s.re - 1.0) - 1.0).abs())
            }));
            out.push(alt_defect(64.0 * dir).and_then(|far| {
                let ratio = far / alt_defect(32.0 * dir)?;
                Ok((ratio / 2f64.powf(-s.re - 3.0) - 1.0).abs())
            }));
        }
        worst(out)
    });
    judge(4, "Hurwitz defect scaling", w, 0.2, t, None)
}

fn criterion_5() -> Line {
    let (w, t) = timed(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let ss: Vec<Complex64> = (0..6).map(|_| c(rng.gen_range(1.2..3.0), rng.gen_range(-2.0..2.0))).collect();
        let mut jobs = Vec::new();
        for tau in taus() {
            for idx in SeriesIndex::all() {
                for &s in &ss {
                    jobs.push((idx, s, tau));
                }
            }
        }
        worst(jobs.par_iter().map(|&(idx, s, tau)| {
            let rows = lambda_jl(idx, s, tau).map_err(|e| e.to_string())?.value;
            let direct = lambda_jl_direct(idx, s, tau, 600, 600).map_err(|e| e.to_string())?.value;
            Ok((rows - direct).norm())
        }).collect::<Vec<_>>())
    });
    judge(5, "row sums against the M = N = 600 double sum", w, 1e-7, t, Some(Duration::from_secs(120)))
}

fn criterion_6() -> Line {
    // discrepancies scaled by their own threshold, so the bar is 1
    let (w, t) = timed(|| {
        let p = params();
        worst(listed_values().par_iter().map(|&(idx, s)| {
            let cf = closed_form(idx, s, &p).ok_or("missing closed form")?;
            let n = if idx.frak_a() == 1 { (s - 1) / 2 } else { (s - 2) / 2 };
            let bar = if n == 0 { 1e-8 } else { 1e-6 };
            let series = lambda_jl(idx, c(s as f64, 0.0), p.tau).map_err(|e| e.to_string())?.value;
            let formula = special_value(idx, n, &p).map_err(|e| e.to_string())?.value;
            Ok((series - cf).norm().max((formula - cf).norm()) / bar)
        }).collect::<Vec<_>>())
    });
    let count = listed_values().len();
    judge(6, &format!("{count} closed forms at integers (scaled to their bar)"), w, 1.0, t, Some(Duration::from_secs(30)))
}

fn criterion_7() -> Line {
    let (w, t) = timed(|| {
        let mut jobs = Vec::new();
        for tau in taus() {
            for idx in SeriesIndex::all() {
                for s in [c(0.5, 0.0), c(0.5, 1.3), c(0.5, -1.3), c(-0.25, 0.0)] {
                    jobs.push((idx, s, tau));
                }
            }
        }
        worst(jobs.par_iter().map(|&(idx, s, tau)| {
            funceq_residual(idx, s, tau).map(|r| r.residual.norm()).map_err(|e| e.to_string())
        }).collect::<Vec<_>>())
    });
    judge(7, "ten functional equations", w, 1e-8, t, Some(Duration::from_secs(120)))
}

fn criterion_8() -> Line {
    let (w, t) = timed(|| {
        let p = params();
        let (k, kp, kk) = (p.k, p.kprime, p.big_k);
        let i = c(0.0, 1.0);
        let expected = [
            (SeriesIndex::new(3, 1).unwrap(), -2.0 * i * k * kk / PI),
            (SeriesIndex::new(2, 2).unwrap(), 2.0 * kk / PI),
            (SeriesIndex::new(3, 2).unwrap(), 2.0 * kp * kk / PI),
            (SeriesIndex::new(2, 3).unwrap(), 2.0 * k * kk / PI),
        ];
        worst(expected.iter().map(|&(idx, want)| {
            let r = residue_at_one(idx, p.tau).map_err(|e| e.to_string())?;
            Ok((r.numeric - want).norm())
        }))
    });
    judge(8, "residues at s = 1", w, 1e-6, t, None)
}

fn criterion_9() -> Line {
    let (w, t) = timed(|| {
        let p = params();
        let mut jobs = Vec::new();
        for n in [4, 13] {
            for z in [c(0.5, 0.0), c(0.6, 0.0), c(0.5, 0.5)] {
                jobs.push((PairId::Numbered(n), z));
            }
        }
        worst(jobs.par_iter().map(|&(id, z)| {
            let kernel = MellinKernel::new(id, &p).map_err(|e| e.to_string())?;
            mellin_reflection_check(&kernel, z).map(|r| r.residual).map_err(|e| e.to_string())
        }).collect::<Vec<_>>())
    });
    judge(9, "Mellin reflection for pairs 4 and 13", w, 1e-7, t, None)
}

fn criterion_10() -> Line {
    let (w, t) = timed(|| {
        let p = params();
        let i = c(0.0, 1.0);
        let period = p.big_k / p.big_kprime;
        let mut out = Vec::new();
        for x in [0.13, 0.37, -0.8, 1.9] {
            let x = c(x, 0.0);
            let f = |z: Complex64| fraktur_f(z, &p).map_err(|e| e.to_string());
            // both defects scaled to the 1e-11 bar
            out.push(f(x).and_then(|fx| Ok((f(x + period)? - fx).norm() / 1e-11)));
            out.push(f(x).and_then(|fx| Ok((f(x + i)? - fx + 2.0 * i).norm() / 1e-11)));
        }
        let kk = complete_elliptic_k(K).unwrap();
        let e = complete_elliptic_e(K).unwrap();
        let zero = c(0.0, 0.0);
        let ratio = theta(4, zero, p.tau, 2).unwrap() / theta(4, zero, p.tau, 0).unwrap();
        let expected = 4.0 * kk * (kk - e) / (PI * PI);
        out.push(Ok((ratio - expected).norm() / 1e-10));
        worst(out)
    });
    judge(10, "𝔣 periodicity and θ4''/θ4 (scaled to their bar)", w, 1.0, t, None)
}

fn criterion_11() -> Line {
    let (w, t) = timed(|| {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_elliptika"))
                .args(["certify", "--k", "0.6", "--tol", "1e-8", "--format", "csv", "--seed", "7"])
                .env_remove("ELLIPTIKA_THREADS")
                .output()
                .expect("binary runs")
        };
        let (a, b) = (run(), run());
        if !a.status.success() || !b.status.success() {
            return Err(format!("certify exited with {:?} and {:?}", a.status.code(), b.status.code()));
        }
        // 0 when identical, 1 otherwise
        Ok(if a.stdout == b.stdout && !a.stdout.is_empty() { 0.0 } else { 1.0 })
    });
    judge(11, "certify is byte-identical across runs", w, 0.5, t, None)
}

#[test]
fn acceptance_criteria() {
    let lines = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
    ];
    let mut stdout = std::io::stdout().lock();
    for line in &lines {
        writeln!(stdout, "{}", line.text).unwrap();
    }
    let failed: Vec<u8> = lines.iter().filter(|l| !l.pass).map(|l| l.number).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn complex_tau_subset_is_certified() {
    let out = Command::new(env!("CARGO_BIN_EXE_elliptika"))
        .args(["certify", "--tau", "0.3+1.2i", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let statuses: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(statuses.len(), 10);
    assert_eq!(statuses.iter().filter(|s| **s == "pass").count(), 4);
    assert!(statuses.iter().all(|s| *s != "fail"));
    // the modulus attached to τ is complex, which the catalog criteria cannot use
    assert!(params_from_tau(c(0.3, 1.2)).unwrap().real_modulus().is_none());
}
