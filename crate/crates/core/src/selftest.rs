//! The property suite behind `lwb selftest`: character identities, the
//! functional equation, the residue bridge at s = 1, derivative consistency,
//! and numerical hygiene. Each check reports one pass/fail line; the CLI
//! exits nonzero when any fails.
//!
//! "Random" strip points are the fixed Kronecker sequence offset by the
//! recorded `selftest.seed`, so reruns are bit-reproducible from the config.

use crate::arith::{self, EllSieve, SingularPolynomial};
use crate::characters::{enumerate_characters, gauss_sum, induce, Character};
use crate::config::Config;
use crate::error::Result;
use crate::lfunc::{
    self, d_quotient, dirichlet_l, functional_equation_residual, l_derivative, EvalParams,
};
use crate::util::kronecker_point;
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// Contour reconstruction of Res_{s=1} D(s,χ_{0,q}) X^s/s on |s−1| = 0.3,
/// compared to P_q(X); returns the relative gap.
pub fn residue_bridge_gap(q: u64, x: f64, nodes: usize, p: &EvalParams) -> Result<f64> {
    let chi = if q == 1 {
        Character::trivial()
    } else {
        Character::principal(q)?
    };
    let r = 0.3;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..nodes {
        let theta = 2.0 * PI * j as f64 / nodes as f64;
        let rot = Complex64::from_polar(1.0, theta);
        let s = Complex64::new(1.0, 0.0) + r * rot;
        let d = d_quotient(s, &chi, p)?;
        acc += d * (s * x.ln()).exp() / s * rot;
    }
    let contour = (acc * r / nodes as f64).re;
    let want = SingularPolynomial::new(q).eval(x)?;
    Ok((contour - want).abs() / want.abs())
}

/// Max relative gap between Cauchy-circle L′ and a central finite difference
/// over `count` Kronecker points in the strip box σ ∈ [0.3, 0.85], t ∈ [2, 40].
pub fn derivative_consistency_gap(
    chi: &Character,
    count: usize,
    seed: u64,
    p: &EvalParams,
) -> Result<f64> {
    let mut worst = 0.0f64;
    let h = 1e-4;
    for k in 0..count {
        let (sigma, t) = kronecker_point(k as u64, seed, (0.3, 0.85), (2.0, 40.0));
        let s = Complex64::new(sigma, t);
        let cauchy = l_derivative(s, chi, 1, p)?;
        let fd = (dirichlet_l(s + h, chi, p)? - dirichlet_l(s - h, chi, p)?) / (2.0 * h);
        worst = worst.max((cauchy - fd).norm() / fd.norm().max(1e-12));
    }
    Ok(worst)
}

/// Max functional-equation residual across all primitive χ of modulus ≤ q_max
/// on the 9-point strip grid σ ∈ {0.2, 0.5, 0.8} × t ∈ {3, 10, 30}.
pub fn functional_equation_suite(q_max: u64, p: &EvalParams) -> Result<f64> {
    let mut worst = 0.0f64;
    for q in 1..=q_max {
        for chi in enumerate_characters(q)? {
            if !chi.is_primitive() {
                continue;
            }
            for sigma in [0.2, 0.5, 0.8] {
                for t in [3.0, 10.0, 30.0] {
                    let r = functional_equation_residual(Complex64::new(sigma, t), &chi, p)?;
                    worst = worst.max(r);
                }
            }
        }
    }
    Ok(worst)
}

/// Max orthogonality defect over all q ≤ q_max and unit pairs (a, b).
pub fn orthogonality_gap(q_max: u64) -> Result<f64> {
    use num_integer::Integer;
    let mut worst = 0.0f64;
    for q in 1..=q_max {
        let chars = enumerate_characters(q)?;
        let phi = chars.len() as f64;
        for a in 1..=q {
            if a.gcd(&q) != 1 {
                continue;
            }
            for b in 1..=q {
                if b.gcd(&q) != 1 {
                    continue;
                }
                let mut s = Complex64::new(0.0, 0.0);
                for chi in &chars {
                    s += chi.eval(a) * chi.eval(b).conj();
                }
                s /= phi;
                let want = if a % q == b % q { 1.0 } else { 0.0 };
                worst = worst.max((s - Complex64::new(want, 0.0)).norm());
            }
        }
    }
    Ok(worst)
}

/// Max Gauss-identity defect (|τ|²−q and ττ̄−χ(−1)q) over primitive χ, q ≤ q_max.
pub fn gauss_identity_gap(q_max: u64) -> Result<f64> {
    let mut worst = 0.0f64;
    for q in 1..=q_max {
        for chi in enumerate_characters(q)? {
            if !chi.is_primitive() {
                continue;
            }
            let g = gauss_sum(&chi);
            worst = worst.max((g.tau.norm_sqr() - q as f64).abs());
            let gbar = gauss_sum(&chi.conj());
            let rhs = chi.eval(q.max(2) - 1) * q as f64;
            worst = worst.max((g.tau * gbar.tau - rhs).norm());
        }
    }
    Ok(worst)
}

/// Runs the full property suite with thresholds pinned to the module
/// contracts. Returns one result per check.
pub fn run_selftest(cfg: &Config) -> Result<Vec<CheckResult>> {
    let p = cfg.eval_params()?;
    let seed = cfg.selftest_seed()?;
    let npoints = cfg.selftest_points()?;
    let mut out = Vec::new();

    let gap = orthogonality_gap(24)?;
    out.push(CheckResult::new(
        "orthogonality(q<=24)",
        gap <= 1e-12,
        format!("max defect {gap:.3e} (tol 1e-12)"),
    ));

    let gap = gauss_identity_gap(24)?;
    out.push(CheckResult::new(
        "gauss_identities(q<=24)",
        gap <= 1e-10,
        format!("max defect {gap:.3e} (tol 1e-10)"),
    ));

    let gap = functional_equation_suite(12, &p)?;
    out.push(CheckResult::new(
        "functional_equation(q<=12)",
        gap <= 1e-8,
        format!("max relative residual {gap:.3e} (tol 1e-8)"),
    ));

    let mut worst = 0.0f64;
    for q in [1u64, 3, 4] {
        for x in [10.0, 100.0] {
            worst = worst.max(residue_bridge_gap(q, x, 256, &p)?);
        }
    }
    out.push(CheckResult::new(
        "residue_bridge(q in {1,3,4})",
        worst <= 1e-5,
        format!("max relative gap {worst:.3e} (tol 1e-5)"),
    ));

    let mut worst = 0.0f64;
    let quad5 = enumerate_characters(5)?
        .into_iter()
        .find(|c| c.order() == 2)
        .expect("quadratic character mod 5");
    let complex5 = enumerate_characters(5)?
        .into_iter()
        .find(|c| c.order() == 4)
        .expect("order-4 character mod 5");
    for chi in [
        Character::trivial(),
        Character::from_index(4, 1)?,
        quad5.clone(),
        complex5,
        Character::principal(3)?,
    ] {
        worst = worst.max(derivative_consistency_gap(&chi, npoints, seed, &p)?);
    }
    out.push(CheckResult::new(
        "derivative_consistency",
        worst <= 1e-6,
        format!("max relative gap {worst:.3e} over {npoints} points/char (tol 1e-6)"),
    ));

    let sieve = EllSieve::new(10_000, cfg.sieve_cap()?)?;
    let mut worst = 0.0f64;
    for n in 1..=10_000u64 {
        worst = worst.max((sieve.get(n) - arith::ell(n)).abs());
    }
    out.push(CheckResult::new(
        "ell_sieve_vs_divisor_sum(n<=1e4)",
        worst <= 1e-12,
        format!("max gap {worst:.3e} (tol 1e-12)"),
    ));

    let s0 = (arith::stieltjes_em(0, 10_000, 6) - arith::stieltjes_em(0, 20_000, 6)).abs();
    let s1 = (arith::stieltjes_em(1, 10_000, 6) - arith::stieltjes_em(1, 20_000, 6)).abs();
    out.push(CheckResult::new(
        "stieltjes_stability",
        s0 <= 1e-12 && s1 <= 1e-12,
        format!("truncation deltas {s0:.3e}, {s1:.3e} (tol 1e-12)"),
    ));

    let bump = cfg.bump_or((0.5, 2.0))?;
    let mut worst = 0.0f64;
    for s in [Complex64::new(2.0, 0.0), Complex64::new(0.5, 12.0)] {
        let coarse = crate::util::quad::integrate(bump.support().0, bump.support().1, 64, |u| {
            bump.eval(u) * ((s - 1.0) * u.ln()).exp()
        });
        let fine = crate::util::quad::integrate(bump.support().0, bump.support().1, 128, |u| {
            bump.eval(u) * ((s - 1.0) * u.ln()).exp()
        });
        worst = worst.max((coarse - fine).norm());
    }
    out.push(CheckResult::new(
        "bump_mellin_node_doubling",
        worst <= 1e-12,
        format!("max delta {worst:.3e} (tol 1e-12)"),
    ));

    let mut p20 = p;
    p20.em_shift = 20;
    let mut p40 = p;
    p40.em_shift = 40;
    let s = Complex64::new(0.5, 14.0);
    let gap = (lfunc::hurwitz_zeta(s, 1.0, &p20)? - lfunc::hurwitz_zeta(s, 1.0, &p40)?).norm();
    out.push(CheckResult::new(
        "hurwitz_self_consistency",
        gap <= 1e-10,
        format!("em_shift 20 vs 40 delta {gap:.3e} (tol 1e-10)"),
    ));

    // conjugation symmetry and the Euler-factor identity for induced characters
    let mut worst = 0.0f64;
    let s = Complex64::new(0.7, 8.3);
    for chi in enumerate_characters(5)? {
        let a = dirichlet_l(s.conj(), &chi.conj(), &p)?;
        let b = dirichlet_l(s, &chi, &p)?.conj();
        worst = worst.max((a - b).norm());
    }
    out.push(CheckResult::new(
        "conjugation_symmetry",
        worst <= 1e-10,
        format!("max gap {worst:.3e} (tol 1e-10)"),
    ));

    let chi4 = Character::from_index(4, 1)?;
    let lifted = induce(&chi4, 12)?;
    let mut worst = 0.0f64;
    for (sigma, t) in [(0.4, 5.0), (0.8, 11.0)] {
        let s = Complex64::new(sigma, t);
        let lhs = dirichlet_l(s, &lifted, &p)?;
        let rhs = dirichlet_l(s, &chi4, &p)?
            * (Complex64::new(1.0, 0.0) - chi4.eval(3) * (-s * 3.0f64.ln()).exp());
        worst = worst.max((lhs - rhs).norm() / rhs.norm());
    }
    out.push(CheckResult::new(
        "euler_factor_identity",
        worst <= 1e-9,
        format!("max relative gap {worst:.3e} (tol 1e-9)"),
    ));

    let mut worst_ratio = 0.0f64;
    let mut worst_bound = 0.0f64;
    for chi in [Character::from_index(4, 1)?, quad5] {
        let mut prev = f64::INFINITY;
        for t in [20.0, 40.0, 80.0, 160.0] {
            let err = lfunc::m_asymptotic_rel_err(0.5, t, &chi)?;
            worst_bound = worst_bound.max(err * t / 3.0);
            if prev.is_finite() {
                worst_ratio = worst_ratio.max(err / prev);
            }
            prev = err;
        }
    }
    out.push(CheckResult::new(
        "m_asymptotic_decay",
        worst_bound <= 1.0 && worst_ratio <= 0.8,
        format!(
            "max err/(3/t) {worst_bound:.3} and halving ratio {worst_ratio:.3} (tols 1, 0.8)"
        ),
    ));

    Ok(out)
}
