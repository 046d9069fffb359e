//! Prefix, smoothed and twisted ℓ-sums, the zero-side sums they close
//! against, the constants C_{𝔛,ξ} and integrals F_{𝔮,k}(X), residual
//! reports, and power-law exponent fitting.
//!
//! Phase convention: the twisted sums use e(−nξ/𝔮) throughout, the
//! normalization of the stationary-phase main term and of the smoothed
//! corollary. The companion plain phase e(−nξ) from the unsmoothed theorem
//! display only coincides when 𝔮 = 1, so twist reports carry both residual
//! series; pass/fail is judged on the conductor-scaled one.

use crate::arith::{self, EllSieve, SingularPolynomial};
use crate::bump::BumpFunction;
use crate::characters::{gauss_sum, induce, Character};
use crate::error::{Error, Result};
use crate::lfunc::m_factor;
use crate::util::{quad, KahanComplex};
use crate::zeros::ZeroList;
use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

const ZERO_C: Complex64 = Complex64::new(0.0, 0.0);

/// A reduced positive rational twist ξ = h/k, (h,k) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    h: u64,
    k: u64,
}

impl Rational {
    pub fn new(h: u64, k: u64) -> Result<Self> {
        if h == 0 || k == 0 {
            return Err(Error::Domain(format!("xi needs h, k > 0, got {h}/{k}")));
        }
        let g = h.gcd(&k);
        Ok(Self { h: h / g, k: k / g })
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn value(&self) -> f64 {
        self.h as f64 / self.k as f64
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.h, self.k)
    }
}

/// Twist phase normalization (see module docs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhaseConvention {
    /// e(−nξ/𝔮) — the adopted normalization
    ConductorScaled,
    /// e(−nξ) — the literal unsmoothed-theorem display
    Plain,
}

/// e(−n·h/m) with the integer phase reduced exactly mod m before any float
/// conversion, so twists stay accurate for n up to the sieve cap.
fn twist_unit(n: u64, h: u64, m: u64) -> Complex64 {
    let r = (n as u128 * h as u128 % m as u128) as u64;
    Complex64::from_polar(1.0, -TAU * r as f64 / m as f64)
}

fn phase_modulus(xi: Rational, conductor: u64, phase: PhaseConvention) -> u64 {
    match phase {
        PhaseConvention::ConductorScaled => xi.k * conductor,
        PhaseConvention::Plain => xi.k,
    }
}

/// Σ_{n≤X} ℓ(n)χ(n), compensated, fixed ascending order.
pub fn ell_char_sum(chi: &Character, x: f64, sieve: &EllSieve) -> Result<Complex64> {
    let n_max = x.floor() as u64;
    sieve.require(n_max)?;
    let table = chi.eval_table();
    let q = chi.modulus();
    let mut acc = KahanComplex::new();
    for n in 1..=n_max {
        let v = table[(n % q.max(1)) as usize];
        if v != ZERO_C {
            acc.add(sieve.get(n) * v);
        }
    }
    Ok(acc.value())
}

/// Σ_n ℓ(n)χ(n)𝓑(n/X), supported on n ∈ (aX, bX).
pub fn ell_char_sum_smoothed(
    chi: &Character,
    bump: &BumpFunction,
    x: f64,
    sieve: &EllSieve,
) -> Result<Complex64> {
    let (a, b) = bump.support();
    let lo = (a * x).floor() as u64 + 1;
    let hi = (b * x).ceil() as u64;
    sieve.require(hi)?;
    let table = chi.eval_table();
    let q = chi.modulus();
    let mut acc = KahanComplex::new();
    for n in lo..=hi {
        let v = table[(n % q.max(1)) as usize];
        if v != ZERO_C {
            let w = bump.eval(n as f64 / x);
            if w != 0.0 {
                acc.add(sieve.get(n) * w * v);
            }
        }
    }
    Ok(acc.value())
}

/// C_{𝔛,ξ} = 𝔛̄(h) 𝔛(k) μ(k) / φ(𝔮k) when (h, 𝔮k) = 1, else 0.
pub fn c_constant(prim: &Character, xi: Rational) -> Complex64 {
    let fq = prim.modulus();
    let qk = fq * xi.k;
    if xi.h.gcd(&qk) != 1 {
        return ZERO_C;
    }
    let mu = arith::mobius(xi.k);
    if mu == 0 {
        return ZERO_C;
    }
    prim.conj().eval(xi.h) * prim.eval(xi.k) * mu as f64 / arith::euler_phi(qk) as f64
}

/// F_{𝔮,k}(X) = ∫₀^∞ 𝓑(u/(𝔮X)) P′_{𝔮k}(u) du = 𝔮X ∫_a^b 𝓑(v) P′_{𝔮k}(𝔮Xv) dv.
pub fn f_integral(conductor: u64, k: u64, bump: &BumpFunction, x: f64) -> Result<f64> {
    let poly = SingularPolynomial::new(conductor * k);
    let scale = conductor as f64 * x;
    let (a, b) = bump.support();
    let tol = 1e-8 * x * x.ln().max(1.0).powi(2);
    let val = quad::integrate_auto(a, b, 64, tol / scale, |v| {
        Complex64::new(
            bump.eval(v) * poly.eval_prime(scale * v).expect("positive argument"),
            0.0,
        )
    });
    Ok(scale * val.re)
}

/// L′(ρ, 𝔛·χ_{0,q}) from L′(ρ,𝔛) at a zero of L(s,𝔛): the product rule
/// leaves only the Euler factors Π_{p|q, p∤𝔮}(1 − 𝔛(p)p^{−ρ}).
fn composite_lprime(lprime: Complex64, gamma: f64, prim: &Character, q: u64) -> Complex64 {
    let rho = Complex64::new(0.5, gamma);
    let mut w = lprime;
    for (p, _) in arith::factorize(q) {
        if prim.modulus() % p != 0 {
            w *= Complex64::new(1.0, 0.0) - prim.eval(p) * (-rho * (p as f64).ln()).exp();
        }
    }
    w
}

/// Σ₁(T) = Σ_{0<γ≤T} ξ^{−ρ} L′(ρ,χ) 𝓜_{𝔛̄}(1−ρ) over the zeros of L(s,𝔛).
pub fn sigma1(
    chi: &Character,
    prim: &Character,
    zeros: &ZeroList,
    xi: Rational,
    t: f64,
) -> Result<Complex64> {
    zeros.covers(t)?;
    let conj = prim.conj();
    let ln_xi = xi.value().ln();
    let mut acc = KahanComplex::new();
    for z in &zeros.zeros {
        if z.gamma > t {
            break;
        }
        let rho = Complex64::new(0.5, z.gamma);
        let weight = composite_lprime(z.lprime, z.gamma, prim, chi.modulus());
        let m = m_factor(Complex64::new(1.0, 0.0) - rho, &conj)?;
        acc.add((-rho * ln_xi).exp() * weight * m);
    }
    Ok(acc.value())
}

/// Σ₂(T) = (τ(𝔛̄)/𝔮) Σ_{n ≤ 𝔮T/(2πξ)} ℓ(n)χ(n)·twist.
pub fn sigma2(
    chi: &Character,
    prim: &Character,
    xi: Rational,
    t: f64,
    sieve: &EllSieve,
    phase: PhaseConvention,
) -> Result<Complex64> {
    let u = prim.modulus() as f64 * t / (TAU * xi.value());
    sigma3(chi, prim, xi, u, sieve, phase)
}

/// Σ₃(u) = Σ₂(2πξu/𝔮) = (τ(𝔛̄)/𝔮) Σ_{n≤u} ℓ(n)χ(n)·twist.
pub fn sigma3(
    chi: &Character,
    prim: &Character,
    xi: Rational,
    u: f64,
    sieve: &EllSieve,
    phase: PhaseConvention,
) -> Result<Complex64> {
    let n_max = u.floor() as u64;
    sieve.require(n_max)?;
    let fq = prim.modulus();
    let m = phase_modulus(xi, fq, phase);
    let table = chi.eval_table();
    let q = chi.modulus().max(1);
    let mut acc = KahanComplex::new();
    for n in 1..=n_max {
        let v = table[(n % q) as usize];
        if v != ZERO_C {
            let ell = sieve.get(n);
            if ell != 0.0 {
                acc.add(ell * v * twist_unit(n, xi.h, m));
            }
        }
    }
    Ok(gauss_sum(&prim.conj()).tau / fq as f64 * acc.value())
}

/// Σ₄(X) = Σ_ρ ξ^{−ρ} L′(ρ,χ) 𝓜_{𝔛̄}(1−ρ) 𝓑(γ/(2πξX)); zero coverage must
/// reach the top of the bump support, 2πξXb.
pub fn sigma4(
    chi: &Character,
    prim: &Character,
    zeros: &ZeroList,
    xi: Rational,
    bump: &BumpFunction,
    x: f64,
) -> Result<Complex64> {
    let (_, b) = bump.support();
    let needed = TAU * xi.value() * x * b;
    zeros.covers(needed)?;
    let conj = prim.conj();
    let ln_xi = xi.value().ln();
    let denom = TAU * xi.value() * x;
    let mut acc = KahanComplex::new();
    for z in &zeros.zeros {
        let w = bump.eval(z.gamma / denom);
        if w == 0.0 {
            continue;
        }
        let rho = Complex64::new(0.5, z.gamma);
        let weight = composite_lprime(z.lprime, z.gamma, prim, chi.modulus());
        let m = m_factor(Complex64::new(1.0, 0.0) - rho, &conj)?;
        acc.add((-rho * ln_xi).exp() * weight * m * w);
    }
    Ok(acc.value())
}

/// Σ₅(X) = (τ(𝔛̄)/𝔮) Σ_n ℓ(n)χ(n)·twist·𝓑(n/(𝔮X)).
pub fn sigma5(
    chi: &Character,
    prim: &Character,
    xi: Rational,
    bump: &BumpFunction,
    x: f64,
    sieve: &EllSieve,
    phase: PhaseConvention,
) -> Result<Complex64> {
    let fq = prim.modulus();
    let scale = fq as f64 * x;
    let (a, b) = bump.support();
    let lo = (a * scale).floor() as u64 + 1;
    let hi = (b * scale).ceil() as u64;
    sieve.require(hi)?;
    let m = phase_modulus(xi, fq, phase);
    let table = chi.eval_table();
    let q = chi.modulus().max(1);
    let mut acc = KahanComplex::new();
    for n in lo..=hi {
        let v = table[(n % q) as usize];
        if v != ZERO_C {
            let w = bump.eval(n as f64 / scale);
            if w != 0.0 {
                acc.add(sieve.get(n) * w * v * twist_unit(n, xi.h, m));
            }
        }
    }
    Ok(gauss_sum(&prim.conj()).tau / fq as f64 * acc.value())
}

/// Σ₅ recomputed through summation by parts, −∫𝓑′(v) Σ₃(𝔮Xv) dv, with the
/// integral taken exactly piecewise between the jumps of the step function
/// Σ₃ and Gauss–Legendre quadrature of 𝓑′ on each piece.
pub fn sigma5_by_parts(
    chi: &Character,
    prim: &Character,
    xi: Rational,
    bump: &BumpFunction,
    x: f64,
    sieve: &EllSieve,
    phase: PhaseConvention,
) -> Result<Complex64> {
    let fq = prim.modulus();
    let scale = fq as f64 * x;
    let (a, b) = bump.support();
    let hi = (b * scale).ceil() as u64;
    sieve.require(hi)?;
    let m = phase_modulus(xi, fq, phase);
    let table = chi.eval_table();
    let q = chi.modulus().max(1);

    // prefix value of Σ₃ (without the gauss prefactor) entering from the left
    let mut prefix = KahanComplex::new();
    let lo_n = (a * scale).floor() as u64;
    for n in 1..=lo_n {
        let v = table[(n % q) as usize];
        if v != ZERO_C {
            let ell = sieve.get(n);
            if ell != 0.0 {
                prefix.add(ell * v * twist_unit(n, xi.h, m));
            }
        }
    }

    let mut total = KahanComplex::new();
    let mut left = a;
    for n in lo_n + 1..=hi + 1 {
        let right = (n as f64 / scale).min(b);
        if right > left {
            let piece = quad::integrate(left, right, 8, |v| {
                Complex64::new(bump.eval_deriv(v), 0.0)
            });
            total.add(-prefix.value() * piece.re);
            left = right;
        }
        if left >= b {
            break;
        }
        let v = table[(n % q) as usize];
        if v != ZERO_C {
            let ell = sieve.get(n);
            if ell != 0.0 {
                prefix.add(ell * v * twist_unit(n, xi.h, m));
            }
        }
    }
    Ok(gauss_sum(&prim.conj()).tau / fq as f64 * total.value())
}

/// Least-squares exponent of residual ≈ c·X^α on the positive-residual
/// subset of the grid.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ExponentFit {
    pub alpha: f64,
    pub stderr: f64,
    pub used: usize,
    pub dropped: usize,
}

pub fn fit_exponent(points: &[(f64, f64)]) -> Result<ExponentFit> {
    let usable: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(x, r)| x > 0.0 && r > 0.0)
        .map(|&(x, r)| (x.ln(), r.ln()))
        .collect();
    let dropped = points.len() - usable.len();
    let n = usable.len();
    if n < 3 {
        return Err(Error::Fit(n));
    }
    let nf = n as f64;
    let mx = usable.iter().map(|p| p.0).sum::<f64>() / nf;
    let my = usable.iter().map(|p| p.1).sum::<f64>() / nf;
    let sxx: f64 = usable.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = usable.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let alpha = sxy / sxx;
    let resid: f64 = usable
        .iter()
        .map(|p| (p.1 - my - alpha * (p.0 - mx)).powi(2))
        .sum();
    let stderr = if n > 2 {
        (resid / (nf - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    Ok(ExponentFit {
        alpha,
        stderr,
        used: n,
        dropped,
    })
}

// ---- verification reports ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReportKind {
    #[serde(rename = "ultraclean_ii")]
    UltracleanII,
    #[serde(rename = "ultraclean_iii")]
    UltracleanIII,
    #[serde(rename = "twist_T")]
    TwistT,
    #[serde(rename = "twist_smoothed")]
    TwistSmoothed,
    #[serde(rename = "eureka")]
    Eureka,
    #[serde(rename = "meowing")]
    Meowing,
}

impl ReportKind {
    pub fn dir_name(&self) -> &'static str {
        match self {
            ReportKind::UltracleanII => "ultraclean_ii",
            ReportKind::UltracleanIII => "ultraclean_iii",
            ReportKind::TwistT => "twist_T",
            ReportKind::TwistSmoothed => "twist_smoothed",
            ReportKind::Eureka => "eureka",
            ReportKind::Meowing => "meowing",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "ultraclean_ii" => ReportKind::UltracleanII,
            "ultraclean_iii" => ReportKind::UltracleanIII,
            "twist_T" => ReportKind::TwistT,
            "twist_smoothed" => ReportKind::TwistSmoothed,
            "eureka" => ReportKind::Eureka,
            "meowing" => ReportKind::Meowing,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BumpParams {
    pub a: f64,
    pub b: f64,
    pub amplitude: f64,
}

impl From<&BumpFunction> for BumpParams {
    fn from(b: &BumpFunction) -> Self {
        let (a, bb) = b.support();
        Self {
            a,
            b: bb,
            amplitude: b.amplitude(),
        }
    }
}

/// Parameter record identifying one verification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportInputs {
    pub character: String,
    pub q: u64,
    pub index: u64,
    pub conductor: u64,
    pub xi_h: u64,
    pub xi_k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bump: Option<BumpParams>,
    pub grid: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeros_t_max: Option<f64>,
    pub phase: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: f64,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub residual: f64,
}

/// Residual series under the plain e(−nξ) phase, carried alongside the
/// adopted convention in twist reports.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AltPhaseSeries {
    pub phase: String,
    pub points: Vec<GridPoint>,
    pub fitted_exponent: f64,
    pub fit_stderr: f64,
}

/// One identity-check run over a grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: ReportKind,
    pub inputs: ReportInputs,
    pub points: Vec<GridPoint>,
    pub fitted_exponent: f64,
    pub fit_stderr: f64,
    pub fit_points_used: usize,
    pub fit_points_dropped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alt_phase: Option<AltPhaseSeries>,
}

fn grid_points(entries: &[(f64, Complex64, Complex64)]) -> Vec<GridPoint> {
    entries
        .iter()
        .map(|&(x, lhs, rhs)| GridPoint {
            x,
            lhs_re: lhs.re,
            lhs_im: lhs.im,
            rhs_re: rhs.re,
            rhs_im: rhs.im,
            residual: (lhs - rhs).norm(),
        })
        .collect()
}

fn assemble(
    kind: ReportKind,
    inputs: ReportInputs,
    entries: Vec<(f64, Complex64, Complex64)>,
    alt: Option<Vec<(f64, Complex64, Complex64)>>,
) -> Result<VerificationReport> {
    let points = grid_points(&entries);
    let fit = fit_exponent(
        &points
            .iter()
            .map(|p| (p.x, p.residual))
            .collect::<Vec<_>>(),
    )?;
    let alt_phase = match alt {
        None => None,
        Some(entries) => {
            let pts = grid_points(&entries);
            let f = fit_exponent(&pts.iter().map(|p| (p.x, p.residual)).collect::<Vec<_>>())?;
            Some(AltPhaseSeries {
                phase: "e(-n xi)".into(),
                points: pts,
                fitted_exponent: f.alpha,
                fit_stderr: f.stderr,
            })
        }
    };
    Ok(VerificationReport {
        kind,
        inputs,
        points,
        fitted_exponent: fit.alpha,
        fit_stderr: fit.stderr,
        fit_points_used: fit.used,
        fit_points_dropped: fit.dropped,
        alt_phase,
    })
}

fn base_inputs(chi: &Character, xi: Rational, grid: &[f64]) -> ReportInputs {
    ReportInputs {
        character: chi.id(),
        q: chi.modulus(),
        index: chi.index(),
        conductor: chi.conductor(),
        xi_h: xi.h,
        xi_k: xi.k,
        bump: None,
        grid: grid.to_vec(),
        zeros_t_max: None,
        phase: "e(-n xi / conductor)".into(),
    }
}

const XI_ONE: Rational = Rational { h: 1, k: 1 };

/// Prefix-sum criterion: Σ_{n≤X} ℓ(n)χ(n) vs δ_χ P_q(X) over a grid.
pub fn compare_ultraclean_ii(
    chi: &Character,
    grid: &[f64],
    sieve: &EllSieve,
) -> Result<VerificationReport> {
    let poly = SingularPolynomial::new(chi.modulus());
    let delta = if chi.is_principal() { 1.0 } else { 0.0 };
    let mut entries = Vec::with_capacity(grid.len());
    for &x in grid {
        let lhs = ell_char_sum(chi, x, sieve)?;
        let rhs = Complex64::new(delta * poly.eval(x)?, 0.0);
        entries.push((x, lhs, rhs));
    }
    assemble(
        ReportKind::UltracleanII,
        base_inputs(chi, XI_ONE, grid),
        entries,
        None,
    )
}

/// Smoothed criterion: Σ_n ℓ(n)χ(n)𝓑(n/X) vs δ_χ ∫𝓑(u/X)P′_q(u)du.
pub fn compare_ultraclean_iii(
    chi: &Character,
    bump: &BumpFunction,
    grid: &[f64],
    sieve: &EllSieve,
) -> Result<VerificationReport> {
    let delta = if chi.is_principal() { 1.0 } else { 0.0 };
    let mut entries = Vec::with_capacity(grid.len());
    for &x in grid {
        let lhs = ell_char_sum_smoothed(chi, bump, x, sieve)?;
        let rhs = if delta == 0.0 {
            ZERO_C
        } else {
            // same integral as F_{q,k} with 𝔮 → q, k → 1, scale X instead of 𝔮X
            let poly = SingularPolynomial::new(chi.modulus());
            let (a, b) = bump.support();
            let tol = 1e-8 * x * x.ln().max(1.0).powi(2);
            let val = quad::integrate_auto(a, b, 64, tol / x, |v| {
                Complex64::new(bump.eval(v) * poly.eval_prime(x * v).expect("positive"), 0.0)
            });
            Complex64::new(x * val.re, 0.0)
        };
        entries.push((x, lhs, rhs));
    }
    let mut inputs = base_inputs(chi, XI_ONE, grid);
    inputs.bump = Some(bump.into());
    assemble(ReportKind::UltracleanIII, inputs, entries, None)
}

/// Unsmoothed twist closure over a T grid: Σ₁(T) vs Σ₂(T), both phases.
pub fn twist_t_report(
    prim: &Character,
    xi: Rational,
    t_grid: &[f64],
    zeros: &ZeroList,
    sieve: &EllSieve,
) -> Result<VerificationReport> {
    let chi = induce(prim, prim.modulus() * xi.k)?;
    let mut entries = Vec::with_capacity(t_grid.len());
    let mut alt = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let lhs = sigma1(&chi, prim, zeros, xi, t)?;
        let rhs = sigma2(&chi, prim, xi, t, sieve, PhaseConvention::ConductorScaled)?;
        entries.push((t, lhs, rhs));
        let rhs_plain = sigma2(&chi, prim, xi, t, sieve, PhaseConvention::Plain)?;
        alt.push((t, lhs, rhs_plain));
    }
    let mut inputs = base_inputs(&chi, xi, t_grid);
    inputs.zeros_t_max = Some(zeros.t_max);
    assemble(ReportKind::TwistT, inputs, entries, Some(alt))
}

/// Smoothed twist closure over an X grid: Σ₄(X) vs Σ₅(X), both phases.
pub fn twist_smoothed_report(
    prim: &Character,
    xi: Rational,
    bump: &BumpFunction,
    x_grid: &[f64],
    zeros: &ZeroList,
    sieve: &EllSieve,
) -> Result<VerificationReport> {
    let chi = induce(prim, prim.modulus() * xi.k)?;
    let mut entries = Vec::with_capacity(x_grid.len());
    let mut alt = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let lhs = sigma4(&chi, prim, zeros, xi, bump, x)?;
        let rhs = sigma5(&chi, prim, xi, bump, x, sieve, PhaseConvention::ConductorScaled)?;
        entries.push((x, lhs, rhs));
        let rhs_plain = sigma5(&chi, prim, xi, bump, x, sieve, PhaseConvention::Plain)?;
        alt.push((x, lhs, rhs_plain));
    }
    let mut inputs = base_inputs(&chi, xi, x_grid);
    inputs.bump = Some(bump.into());
    inputs.zeros_t_max = Some(zeros.t_max);
    assemble(ReportKind::TwistSmoothed, inputs, entries, Some(alt))
}

/// Zero-side residual of the quantitative hypothesis: Σ₄(X) − C_{𝔛,ξ}F_{𝔮,k}(X).
pub fn eureka_residual(
    prim: &Character,
    xi: Rational,
    bump: &BumpFunction,
    x_grid: &[f64],
    zeros: &ZeroList,
) -> Result<VerificationReport> {
    let chi = induce(prim, prim.modulus() * xi.k)?;
    let c = c_constant(prim, xi);
    let mut entries = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let lhs = sigma4(&chi, prim, zeros, xi, bump, x)?;
        let rhs = c * f_integral(prim.modulus(), xi.k, bump, x)?;
        entries.push((x, lhs, rhs));
    }
    let mut inputs = base_inputs(&chi, xi, x_grid);
    inputs.bump = Some(bump.into());
    inputs.zeros_t_max = Some(zeros.t_max);
    assemble(ReportKind::Eureka, inputs, entries, None)
}

/// Arithmetic-side identity: Σ₅(X) vs C_{𝔛,ξ}F_{𝔮,k}(X); no zeros needed.
pub fn meowing_check(
    prim: &Character,
    xi: Rational,
    bump: &BumpFunction,
    x_grid: &[f64],
    sieve: &EllSieve,
) -> Result<VerificationReport> {
    let chi = induce(prim, prim.modulus() * xi.k)?;
    let c = c_constant(prim, xi);
    let mut entries = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let lhs = sigma5(&chi, prim, xi, bump, x, sieve, PhaseConvention::ConductorScaled)?;
        let rhs = c * f_integral(prim.modulus(), xi.k, bump, x)?;
        entries.push((x, lhs, rhs));
    }
    let mut inputs = base_inputs(&chi, xi, x_grid);
    inputs.bump = Some(bump.into());
    assemble(ReportKind::Meowing, inputs, entries, None)
}
