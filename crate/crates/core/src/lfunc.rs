//! Analytic evaluation in the critical strip: Hurwitz zeta by Euler–Maclaurin,
//! L(s,χ) with derivatives via Cauchy circles, D(s,χ) = L′(s,χ)²/L(s,χ), the
//! asymmetric functional-equation factor 𝓜_𝔛(s), its large-t main term, and
//! the singular part D_∞(s,χ_{0,q}) at s = 1.
//!
//! Note on a symbol clash upstream of this module: τ(t) = |t| + 10 (a height)
//! and τ(𝔛) (the Gauss sum) are different objects; here heights are plain `t`
//! and the Gauss sum lives in [`GaussData::tau`](crate::characters::GaussData).

use crate::arith::SingularPolynomial;
use crate::characters::{gauss_sum, Character};
use crate::error::{Error, Result};
use crate::util::gamma::{ln_gamma_sin_half, BERNOULLI_EVEN};
use crate::util::KahanComplex;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Precision and truncation controls for analytic evaluations.
#[derive(Debug, Clone, Copy)]
pub struct EvalParams {
    /// Euler–Maclaurin start index M (≥ 10); the effective M also grows with |Im s|
    pub em_shift: usize,
    /// number of Bernoulli correction terms (default 8)
    pub em_order: usize,
    /// Cauchy-circle radius for derivatives, in (0, 0.25]
    pub deriv_radius: f64,
    /// trapezoid nodes on the derivative circle
    pub deriv_nodes: usize,
    /// requested absolute accuracy
    pub target_abs_err: f64,
}

impl Default for EvalParams {
    fn default() -> Self {
        Self {
            em_shift: 15,
            em_order: 8,
            deriv_radius: 0.125,
            deriv_nodes: 64,
            target_abs_err: 1e-10,
        }
    }
}

impl EvalParams {
    pub fn with_deriv_radius(mut self, r: f64) -> Self {
        self.deriv_radius = r;
        self
    }
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Hurwitz zeta ζ(s, a) for a ∈ (0, 1], s ≠ 1, by Euler–Maclaurin:
/// Σ_{n<M}(n+a)^{-s} + (M+a)^{1-s}/(s-1) + ½(M+a)^{-s} + Bernoulli tail.
/// M scales with |Im s| so the remainder stays below ~1e-11 for |Im s| ≤ 300.
pub fn hurwitz_zeta(s: Complex64, a: f64, p: &EvalParams) -> Result<Complex64> {
    if !(0.0 < a && a <= 1.0) {
        return Err(Error::Domain(format!(
            "hurwitz_zeta needs a in (0,1], got {a}"
        )));
    }
    if s == ONE {
        return Err(Error::Pole(s));
    }
    Ok(hurwitz_zeta_minus_pole(s, a, p) + ONE / (s - ONE))
}

/// Entire regularization ζ(s,a) − 1/(s−1), stable arbitrarily close to s = 1.
/// The pole sits only in the Euler–Maclaurin closure term, where
/// ((M+a)^{1−s} − 1)/(s−1) is evaluated through (e^u − 1)/u.
pub fn hurwitz_zeta_minus_pole(s: Complex64, a: f64, p: &EvalParams) -> Complex64 {
    let m = p.em_shift.max(10) + (0.6 * s.im.abs()).ceil() as usize;
    let mut acc = KahanComplex::new();
    for n in 0..m {
        acc.add((-s * (n as f64 + a).ln()).exp());
    }
    let mut total = acc.value();
    let w = m as f64 + a;
    let lw = w.ln();
    // (w^{1-s} - 1)/(s-1) = -ln w · (e^u - 1)/u with u = (1-s) ln w
    total += -lw * expm1_over((ONE - s) * lw);
    let w_pow_ms = (-s * lw).exp();
    total += 0.5 * w_pow_ms;
    // Bernoulli corrections: B_{2k}/(2k)! (s)_{2k-1} (M+a)^{-s-2k+1}
    let k_max = p.em_order.clamp(1, BERNOULLI_EVEN.len());
    let mut poch = s; // (s)_{2k-1} at k = 1
    let mut w_fac = w_pow_ms / w; // (M+a)^{-s-1}
    let mut fact = 2.0; // (2k)!
    for k in 1..=k_max {
        total += BERNOULLI_EVEN[k - 1] / fact * poch * w_fac;
        let j = (2 * k) as f64;
        poch *= (s + (j - 1.0)) * (s + j);
        w_fac /= w * w;
        fact *= (j + 1.0) * (j + 2.0);
    }
    total
}

/// (e^u − 1)/u, series branch below |u| = 1e-3.
fn expm1_over(u: Complex64) -> Complex64 {
    if u.norm() < 1e-3 {
        ONE + u / 2.0 * (ONE + u / 3.0 * (ONE + u / 4.0))
    } else {
        (u.exp() - ONE) / u
    }
}

/// δ_χ c_q with c_q = φ(q)/q, the residue of L(s,χ) at s = 1.
fn principal_residue(chi: &Character) -> f64 {
    crate::arith::euler_phi(chi.modulus()) as f64 / chi.modulus() as f64
}

/// L(s,χ) = q^{-s} Σ_{a=1..q} χ(a) ζ(s, a/q). Pole error at s = 1 for principal χ.
pub fn dirichlet_l(s: Complex64, chi: &Character, p: &EvalParams) -> Result<Complex64> {
    if chi.is_principal() && s == ONE {
        return Err(Error::Pole(s));
    }
    let q = chi.modulus();
    if q == 1 {
        return hurwitz_zeta(s, 1.0, p);
    }
    // nonprincipal: the 1/(s−1) poles cancel across the character sum exactly
    // (Σ_a χ(a) = 0), so summing the regularized terms is valid on all of ℂ
    let regularized = !chi.is_principal();
    let mut acc = KahanComplex::new();
    for a in 1..=q {
        let v = chi.eval(a);
        if v != Complex64::new(0.0, 0.0) {
            let z = if regularized {
                hurwitz_zeta_minus_pole(s, a as f64 / q as f64, p)
            } else {
                hurwitz_zeta(s, a as f64 / q as f64, p)?
            };
            acc.add(v * z);
        }
    }
    Ok((-s * (q as f64).ln()).exp() * acc.value())
}

/// L̃(s,χ) = L(s,χ) − δ_χ c_q/(s−1); entire for every χ.
/// At the exact point s = 1 (principal χ) the limit c_q γ₀ + g_q′(1) is used.
pub fn dirichlet_l_tilde(s: Complex64, chi: &Character, p: &EvalParams) -> Result<Complex64> {
    if !chi.is_principal() {
        return dirichlet_l(s, chi, p);
    }
    if s == ONE {
        let (_, gp, _) = crate::arith::g_q_derivatives(chi.modulus());
        let g0 = crate::arith::stieltjes(0).expect("gamma_0");
        return Ok(Complex64::new(principal_residue(chi) * g0 + gp, 0.0));
    }
    Ok(dirichlet_l(s, chi, p)? - principal_residue(chi) / (s - ONE))
}

/// k-th derivative of L (k ∈ {1,2}) by trapezoid quadrature of the Cauchy
/// integral on a circle of radius `deriv_radius`. Principal characters are
/// differentiated through L̃ plus the exact pole-term derivative, never
/// through the pole itself.
pub fn l_derivative(
    s: Complex64,
    chi: &Character,
    order: u32,
    p: &EvalParams,
) -> Result<Complex64> {
    assert!(order == 1 || order == 2, "only first and second derivatives");
    let r = p.deriv_radius;
    if !(0.0 < r && r <= 0.25) {
        return Err(Error::Domain(format!("deriv_radius {r} outside (0, 0.25]")));
    }
    if chi.is_principal() {
        let dist = (s - ONE).norm();
        if dist <= r {
            return Err(Error::RadiusViolation { s, radius: r });
        }
    }
    let n = p.deriv_nodes.max(16);
    let mut acc = KahanComplex::new();
    for j in 0..n {
        let theta = 2.0 * PI * j as f64 / n as f64;
        let rot = Complex64::from_polar(1.0, theta);
        let z = s + r * rot;
        let fz = dirichlet_l_tilde(z, chi, p)?;
        acc.add(fz * Complex64::from_polar(1.0, -(order as f64) * theta));
    }
    let fact = if order == 1 { 1.0 } else { 2.0 };
    let mut d = acc.value() * fact / (n as f64 * r.powi(order as i32));
    if chi.is_principal() {
        let c = principal_residue(chi);
        let w = s - ONE;
        d += match order {
            1 => -c / (w * w),
            _ => 2.0 * c / (w * w * w),
        };
    }
    Ok(d)
}

/// D(s,χ) = L′(s,χ)²/L(s,χ). Near a zero of L the quotient is a simple pole
/// of residue L′(ρ,χ); a |L| below the floor 1e-9·|L′| is reported as an
/// error rather than returned as noise.
pub fn d_quotient(s: Complex64, chi: &Character, p: &EvalParams) -> Result<Complex64> {
    let l = dirichlet_l(s, chi, p)?;
    let lp = l_derivative(s, chi, 1, p)?;
    let floor = 1e-9 * lp.norm().max(1e-300);
    if l.norm() < floor {
        return Err(Error::NearZeroOfL {
            s,
            magnitude: l.norm(),
        });
    }
    Ok(lp * lp / l)
}

/// 𝓜_𝔛(s) = ε 2^s π^{s−1} 𝔮^{1/2−s} Γ(1−s) sin(π(s+κ)/2), assembled in log
/// space; the functional equation reads L(s,𝔛) = 𝓜_𝔛(s) L(1−s,𝔛̄).
pub fn m_factor(s: Complex64, prim: &Character) -> Result<Complex64> {
    if !prim.is_primitive() {
        return Err(Error::Domain(format!(
            "m_factor needs a primitive character, got {} with conductor {}",
            prim.id(),
            prim.conductor()
        )));
    }
    let q = prim.modulus() as f64;
    let g = gauss_sum(prim);
    let ln_part = s * 2.0f64.ln()
        + (s - ONE) * PI.ln()
        + (0.5 - s) * q.ln()
        + ln_gamma_sin_half(s, prim.parity())?;
    Ok(g.epsilon * ln_part.exp())
}

/// Main term of 𝓜_𝔛(1−c−it) for t ≥ 1:
/// τ(𝔛) 𝔮^{c−1} e^{−πi/4} exp(it log(𝔮t/2πe)) (t/2π)^{c−1/2}.
pub fn m_asymptotic_main(c: f64, t: f64, prim: &Character) -> Complex64 {
    let q = prim.modulus() as f64;
    let tau = gauss_sum(prim).tau;
    let phase = Complex64::from_polar(1.0, t * (q * t / (2.0 * PI * std::f64::consts::E)).ln());
    tau * q.powf(c - 1.0)
        * Complex64::from_polar(1.0, -PI / 4.0)
        * phase
        * (t / (2.0 * PI)).powf(c - 0.5)
}

/// |𝓜_𝔛(1−c−it)/main − 1|, the observed O(1/t) relative error.
pub fn m_asymptotic_rel_err(c: f64, t: f64, prim: &Character) -> Result<f64> {
    let m = m_factor(Complex64::new(1.0 - c, -t), prim)?;
    let main = m_asymptotic_main(c, t, prim);
    Ok((m / main - ONE).norm())
}

/// The explicit singular part of D(s,χ_{0,q}) at s = 1,
/// A/(s−1)³ + B/(s−1)² + C/(s−1), derived from the same polynomial
/// coefficients as P_q so the Mellin-pair identity
/// D_∞(s) = ∫_1^∞ u^{−s} P_q′(u) du holds by construction.
pub fn d_infinity(s: Complex64, q: u64) -> Result<Complex64> {
    if s == ONE {
        return Err(Error::Pole(s));
    }
    let (a, b, c) = d_infinity_coeffs(q);
    let w = s - ONE;
    Ok(a / (w * w * w) + b / (w * w) + c / w)
}

/// Laurent coefficients (A, B, C) of D_∞ at s = 1.
pub fn d_infinity_coeffs(q: u64) -> (f64, f64, f64) {
    let p = SingularPolynomial::new(q);
    (2.0 * p.c2, 2.0 * p.c2 + p.c1, p.c1 + p.c0)
}

/// Relative functional-equation residual |L(s,𝔛) − 𝓜_𝔛(s) L(1−s,𝔛̄)| / |L(s,𝔛)|.
pub fn functional_equation_residual(s: Complex64, prim: &Character, p: &EvalParams) -> Result<f64> {
    let lhs = dirichlet_l(s, prim, p)?;
    let rhs = m_factor(s, prim)? * dirichlet_l(ONE - s, &prim.conj(), p)?;
    Ok((lhs - rhs).norm() / lhs.norm())
}
