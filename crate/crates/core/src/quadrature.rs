//! Quadrature rules and the finite-difference machinery used throughout.
//!
//! * Composite Gauss-Legendre panels for smooth (possibly oscillatory)
//!   integrands on finite intervals.
//! * Tanh-sinh on the unit interval for the algebraic endpoint singularities
//!   of Mellin integrands.
//! * Symmetric stencils on half-integer nodes `±(j+1/2)h` with Richardson
//!   extrapolation for derivatives and limits at a point that must never be
//!   sampled.

use crate::error::{Error, Result};
use crate::tolerance;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Nodes and weights of an `n`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// Computes the rule by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussRule { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// The 16-point rule used for oscillatory contour panels.
pub fn gauss16() -> &'static GaussRule {
    static RULE: OnceLock<GaussRule> = OnceLock::new();
    RULE.get_or_init(|| GaussRule::new(16))
}

/// The 20-point rule used for smooth integrals.
pub fn gauss20() -> &'static GaussRule {
    static RULE: OnceLock<GaussRule> = OnceLock::new();
    RULE.get_or_init(|| GaussRule::new(20))
}

/// Composite Gauss-Legendre over `[a, b]` split into `panels` equal pieces.
pub fn gauss_panels<F>(rule: &GaussRule, a: f64, b: f64, panels: usize, mut f: F) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let width = (b - a) / panels as f64;
    let half = 0.5 * width;
    let mut total = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * width;
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            acc += *w * f(mid + half * x)?;
        }
        total += acc * half;
    }
    Ok(total)
}

/// Gauss-Legendre with panel doubling until two successive estimates agree
/// to `tol`. Returns the finer estimate and the observed change.
pub fn gauss_adaptive<F>(a: f64, b: f64, min_width: f64, tol: f64, mut f: F) -> Result<(Complex64, f64)>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let rule = gauss20();
    let mut panels = (((b - a).abs() / min_width).ceil() as usize).max(1);
    let mut coarse = gauss_panels(rule, a, b, panels, &mut f)?;
    for _ in 0..8 {
        panels *= 2;
        let fine = gauss_panels(rule, a, b, panels, &mut f)?;
        let change = (fine - coarse).norm();
        if change <= tol {
            return Ok((fine, change));
        }
        coarse = fine;
    }
    Err(Error::NonConvergence(format!(
        "Gauss-Legendre panels on [{a}, {b}] did not settle to {tol:e}"
    )))
}

/// Tanh-sinh quadrature of `f` over `(0, 1)`.
///
/// The integrand is never evaluated at either endpoint, so algebraic
/// singularities there are fine.
pub fn tanh_sinh_unit<F>(tol: f64, mut f: F) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    const T_MAX: f64 = 5.0;
    let mut h = 0.25;
    let node = |t: f64| {
        let u = PI * t.sinh();
        let x = 1.0 / (1.0 + (-u).exp());
        let xc = 1.0 / (1.0 + u.exp());
        (x, PI * t.cosh() * x * xc)
    };
    let mut sum = Complex64::new(0.0, 0.0);
    let steps = (T_MAX / h) as i64;
    for k in -steps..=steps {
        let (x, w) = node(k as f64 * h);
        if x > 0.0 && x < 1.0 && w > 0.0 {
            sum += w * f(x)?;
        }
    }
    let mut estimate = sum * h;
    for _ in 0..8 {
        h *= 0.5;
        let steps = (T_MAX / h) as i64;
        let mut k = -steps + if steps % 2 == 0 { 1 } else { 0 };
        while k <= steps {
            let (x, w) = node(k as f64 * h);
            if x > 0.0 && x < 1.0 && w > 0.0 {
                sum += w * f(x)?;
            }
            k += 2;
        }
        let next = sum * h;
        let change = (next - estimate).norm();
        estimate = next;
        if change <= tol * estimate.norm().max(1e-3) {
            return Ok(estimate);
        }
    }
    Err(Error::NonConvergence("tanh-sinh refinement stalled".into()))
}

/// Estimate of the `order`-th derivative at 0 from samples at
/// `±(j + 1/2) h`, exact for polynomials of degree `order + 1`.
///
/// The even (odd) part of the sampled function is interpolated in `y^2` and
/// the leading divided difference gives the Taylor coefficient.
fn stencil_derivative<F>(f: &mut F, order: usize, h: f64) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let odd = order % 2 == 1;
    let m = order / 2;
    let mut u = Vec::with_capacity(m + 1);
    let mut v = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let y = (j as f64 + 0.5) * h;
        let plus = f(y)?;
        let minus = f(-y)?;
        let value = if odd {
            (plus - minus) * 0.5 / y
        } else {
            (plus + minus) * 0.5
        };
        u.push(y * y);
        v.push(value);
    }
    // leading divided difference = Taylor coefficient of y^order
    let mut coeff = Complex64::new(0.0, 0.0);
    for j in 0..=m {
        let mut denom = 1.0;
        for i in 0..=m {
            if i != j {
                denom *= u[j] - u[i];
            }
        }
        coeff += v[j] / denom;
    }
    let factorial: f64 = (1..=order).map(|x| x as f64).product();
    Ok(coeff * factorial)
}

/// Richardson-extrapolated derivative of `f` at 0 of the given order.
///
/// Uses step sizes `h, h/2, h/4, h/8`; never samples `y = 0`.
pub fn derivative_at_zero<F>(mut f: F, order: usize, h: f64) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    const LEVELS: usize = 4;
    let mut table: Vec<Vec<Complex64>> = Vec::with_capacity(LEVELS);
    for i in 0..LEVELS {
        let step = h / f64::powi(2.0, i as i32);
        let mut row = vec![stencil_derivative(&mut f, order, step)?];
        for r in 1..=i {
            let factor = f64::powi(4.0, r as i32) - 1.0;
            let prev = row[r - 1];
            let value = prev + (prev - table[i - 1][r - 1]) / factor;
            row.push(value);
        }
        table.push(row);
    }
    let best = table[LEVELS - 1][LEVELS - 1];
    let previous = table[LEVELS - 2][LEVELS - 2];
    let scale = best.norm().max(1.0);
    if (best - previous).norm() > tolerance::RICHARDSON_AGREEMENT * scale {
        return Err(Error::Instability(format!(
            "order-{order} derivative: levels {best} and {previous} disagree"
        )));
    }
    Ok(best)
}

/// Limit of `f(y)` as `y -> 0` for a function with a removable singularity
/// at the origin.
pub fn limit_at_zero<F>(f: F, h: f64) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    derivative_at_zero(f, 0, h)
}
