//! Exact and near-exact arithmetic: Λ, ℓ = Λ∗log, μ, φ, the Euler-factor
//! product g_q and its derivatives at 1, Stieltjes constants γ₀/γ₁, and the
//! singular polynomial P_q(X) matching Res_{s=1} D(s,χ_{0,q}) X^s/s.

use crate::error::{Error, Result};
use crate::util::gamma::BERNOULLI_EVEN;
use crate::util::Kahan;
use once_cell::sync::Lazy;

/// Default cap for the ℓ sieve; overridable through config key `arith.max_sieve`.
pub const DEFAULT_SIEVE_CAP: u64 = 20_000_000;

/// Trial-division factorization, ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Von Mangoldt Λ(n): log p on prime powers, else 0.
pub fn mangoldt(n: u64) -> f64 {
    assert!(n >= 1);
    let f = factorize(n);
    if f.len() == 1 {
        (f[0].0 as f64).ln()
    } else {
        0.0
    }
}

/// ℓ(n) = (Λ∗log)(n) = Σ_{ab=n} Λ(a) log b, by the divisor sum.
/// Only prime-power divisors a contribute.
pub fn ell(n: u64) -> f64 {
    assert!(n >= 1);
    let mut acc = Kahan::new();
    for (p, e) in factorize(n) {
        let lp = (p as f64).ln();
        let mut a = 1u64;
        for _ in 0..e {
            a *= p;
            acc.add(lp * ((n / a) as f64).ln());
        }
    }
    acc.value()
}

/// Sieved table of ℓ(1..=n_max); `values()[n]` is ℓ(n), index 0 unused.
#[derive(Debug)]
pub struct EllSieve {
    values: Vec<f64>,
}

impl EllSieve {
    /// Builds the table by iterating prime powers a = p^j ≤ n_max and adding
    /// log p · log(n/a) to every multiple n of a.
    pub fn new(n_max: u64, cap: u64) -> Result<Self> {
        if n_max > cap {
            return Err(Error::SieveCapExceeded {
                request: n_max,
                cap,
            });
        }
        if n_max < 1 {
            return Err(Error::Domain("sieve needs n_max >= 1".into()));
        }
        let n = n_max as usize;
        let mut values = vec![0.0f64; n + 1];
        let mut is_comp = vec![false; n + 1];
        for p in 2..=n {
            if is_comp[p] {
                continue;
            }
            let mut m = p * p;
            while m <= n {
                is_comp[m] = true;
                m += p;
            }
            let lp = (p as f64).ln();
            let mut a = p;
            loop {
                let mut b = 1usize;
                let mut nn = a;
                while nn <= n {
                    values[nn] += lp * (b as f64).ln();
                    b += 1;
                    nn += a;
                }
                match a.checked_mul(p) {
                    Some(next) if next <= n => a = next,
                    _ => break,
                }
            }
        }
        Ok(Self { values })
    }

    pub fn with_default_cap(n_max: u64) -> Result<Self> {
        Self::new(n_max, DEFAULT_SIEVE_CAP)
    }

    #[inline]
    pub fn get(&self, n: u64) -> f64 {
        self.values[n as usize]
    }

    /// resource guard for sums that need ℓ up to n
    pub fn require(&self, n: u64) -> Result<()> {
        if n > self.len() {
            return Err(Error::SieveCapExceeded {
                request: n,
                cap: self.len(),
            });
        }
        Ok(())
    }

    pub fn len(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn is_empty(&self) -> bool {
        self.values.len() <= 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// (g_q(1), g_q'(1), g_q''(1)) for g_q(s) = Π_{p|q} (1 - p^{-s}).
///
/// Exact product-rule expansion: with u_p(s) = 1 - p^{-s},
/// u_p'(1) = log p / p and u_p''(1) = -(log p)^2 / p, so
/// g'/g = Σ u'/u and g''/g = (Σ u'/u)^2 + Σ (u''u - u'^2)/u^2.
pub fn g_q_derivatives(q: u64) -> (f64, f64, f64) {
    assert!(q >= 1);
    let mut g = 1.0;
    let mut sum_ratio = 0.0;
    let mut sum_second = 0.0;
    for (p, _) in factorize(q) {
        let pf = p as f64;
        let lp = pf.ln();
        let u = 1.0 - 1.0 / pf;
        let du = lp / pf;
        let ddu = -lp * lp / pf;
        g *= u;
        sum_ratio += du / u;
        sum_second += (ddu * u - du * du) / (u * u);
    }
    let gp = g * sum_ratio;
    let gpp = g * (sum_ratio * sum_ratio + sum_second);
    (g, gp, gpp)
}

/// γ_n for n ∈ {0, 1} by the defining limit
/// Σ_{k≤x} (log k)^n / k − (log x)^{n+1}/(n+1), accelerated with
/// Euler–Maclaurin corrections at the truncation point.
pub fn stieltjes(n: usize) -> Result<f64> {
    match n {
        0 => Ok(*GAMMA0),
        1 => Ok(*GAMMA1),
        _ => Err(Error::UnsupportedStieltjesIndex(n)),
    }
}

static GAMMA0: Lazy<f64> = Lazy::new(|| stieltjes_checked(0));
static GAMMA1: Lazy<f64> = Lazy::new(|| stieltjes_checked(1));

/// Computes γ_n at two truncation levels and asserts 12 stable digits, so a
/// regression in the accelerated limit cannot slip through silently.
fn stieltjes_checked(n: usize) -> f64 {
    let a = stieltjes_em(n, 10_000, 6);
    let b = stieltjes_em(n, 20_000, 6);
    assert!(
        (a - b).abs() < 1e-12,
        "Stieltjes γ_{n} unstable between truncation levels: {a} vs {b}"
    );
    b
}

/// Euler–Maclaurin-accelerated partial limit for γ_n, truncated at x = N with
/// `terms` Bernoulli corrections. For f(x) = (log x)^n / x,
/// f^(m)(x) = (-1)^m m! (log x - H_m)/x^{m+1} when n = 1,
/// and (-1)^m m!/x^{m+1} when n = 0.
pub fn stieltjes_em(n: usize, big_n: u64, terms: usize) -> f64 {
    assert!(n <= 1);
    let mut partial = Kahan::new();
    for k in 1..=big_n {
        let kf = k as f64;
        let f = if n == 0 { 1.0 / kf } else { kf.ln() / kf };
        partial.add(f);
    }
    let x = big_n as f64;
    let lx = x.ln();
    let mut val = partial.value() - lx.powi(n as i32 + 1) / (n as f64 + 1.0);
    val -= 0.5 * if n == 0 { 1.0 / x } else { lx / x };
    // minus Σ_j B_{2j}/(2j)! · f^{(2j-1)}(N); the odd derivative order makes
    // the sign of f^{(2j-1)} negative in both cases.
    let mut fact = 1.0; // (2j-1)!
    let mut harmonic = 1.0; // H_{2j-1}
    for j in 1..=terms {
        if j > 1 {
            fact *= ((2 * j - 2) * (2 * j - 1)) as f64;
            harmonic += 1.0 / (2 * j - 2) as f64 + 1.0 / (2 * j - 1) as f64;
        }
        let fderiv = if n == 0 {
            -fact / x.powi(2 * j as i32)
        } else {
            -fact * (lx - harmonic) / x.powi(2 * j as i32)
        };
        val -= BERNOULLI_EVEN[j - 1] / factorial(2 * j) * fderiv;
    }
    val
}

fn factorial(m: usize) -> f64 {
    (1..=m).map(|i| i as f64).product()
}

/// Singular polynomial P_q(X) = c2·X(log X)² + c1·X log X + c0·X with
/// coefficients chosen so that Res_{s=1} D(s,χ_{0,q}) X^s/s = P_q(X)
/// (see [`crate::lfunc::d_infinity`] for the matching Laurent part).
#[derive(Debug, Clone, Copy)]
pub struct SingularPolynomial {
    pub q: u64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl SingularPolynomial {
    pub fn new(q: u64) -> Self {
        let (g, gp, gpp) = g_q_derivatives(q);
        let g0 = *GAMMA0;
        let g1 = *GAMMA1;
        let c2 = 0.5 * g;
        let c1 = -(1.0 + g0) * g - gp;
        let c0 = (1.0 + g0 + g0 * g0 + 3.0 * g1) * g + (1.0 - g0) * gp - 1.5 * gpp + gp * gp / g;
        Self { q, c2, c1, c0 }
    }

    /// P_q(X) for X > 0.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if x <= 0.0 {
            return Err(Error::Domain(format!("P_q needs X > 0, got {x}")));
        }
        let l = x.ln();
        Ok(self.c2 * x * l * l + self.c1 * x * l + self.c0 * x)
    }

    /// P_q'(u) = c2((log u)² + 2 log u) + c1(log u + 1) + c0, for u > 0.
    pub fn eval_prime(&self, u: f64) -> Result<f64> {
        if u <= 0.0 {
            return Err(Error::Domain(format!("P_q' needs u > 0, got {u}")));
        }
        let l = u.ln();
        Ok(self.c2 * (l * l + 2.0 * l) + self.c1 * (l + 1.0) + self.c0)
    }
}

pub fn singular_polynomial(q: u64) -> SingularPolynomial {
    SingularPolynomial::new(q)
}

pub fn eval_p(q: u64, x: f64) -> Result<f64> {
    SingularPolynomial::new(q).eval(x)
}

pub fn eval_p_prime(q: u64, u: f64) -> Result<f64> {
    SingularPolynomial::new(q).eval_prime(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn mangoldt_basics() {
        assert_eq!(mangoldt(1), 0.0);
        assert!((mangoldt(8) - LN2).abs() < 1e-15);
        assert_eq!(mangoldt(12), 0.0);
    }

    #[test]
    fn ell_small_values() {
        let ln3 = 3.0f64.ln();
        assert_eq!(ell(1), 0.0);
        assert!((ell(4) - LN2 * LN2).abs() < 1e-14);
        assert!((ell(6) - 2.0 * LN2 * ln3).abs() < 1e-14);
        // primes: both divisor terms carry Λ(1) or log 1
        for p in [2u64, 3, 5, 7, 97] {
            assert_eq!(ell(p), 0.0, "ell({p})");
        }
    }

    #[test]
    fn ell_bound_and_equality_scan() {
        for n in 2..=5000u64 {
            let v = ell(n);
            let bound = (n as f64).ln().powi(2);
            assert!((0.0..=bound + 1e-12).contains(&v), "ell({n}) = {v}");
        }
        assert!(ell(4) < (4.0f64).ln().powi(2));
    }

    #[test]
    fn sieve_matches_divisor_sum_oracle() {
        let sieve = EllSieve::with_default_cap(10_000).unwrap();
        for n in 1..=10_000u64 {
            assert!(
                (sieve.get(n) - ell(n)).abs() < 1e-12,
                "sieve vs divisor sum at n = {n}: {} vs {}",
                sieve.get(n),
                ell(n)
            );
        }
    }

    #[test]
    fn sieve_first_values() {
        let sieve = EllSieve::with_default_cap(6).unwrap();
        let ln3 = 3.0f64.ln();
        let want = [0.0, 0.0, 0.0, 0.0, LN2 * LN2, 0.0, 2.0 * LN2 * ln3];
        for n in 1..=6 {
            assert!((sieve.get(n) - want[n as usize]).abs() < 1e-14);
        }
    }

    #[test]
    fn sieve_cap_is_enforced() {
        match EllSieve::new(100, 10) {
            Err(Error::SieveCapExceeded { request: 100, cap: 10 }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn mobius_phi_values() {
        assert_eq!((mobius(1), euler_phi(1)), (1, 1));
        assert_eq!((mobius(12), euler_phi(12)), (0, 4));
        assert_eq!((mobius(30), euler_phi(30)), (-1, 8));
        assert_eq!(mobius(4), 0);
        assert_eq!(euler_phi(9), 6);
    }

    #[test]
    fn g_q_closed_forms() {
        let (g, gp, gpp) = g_q_derivatives(1);
        assert_eq!((g, gp, gpp), (1.0, 0.0, 0.0));
        // q = 2: g(s) = 1 - 2^{-s}, g'(s) = 2^{-s} log 2, g''(s) = -2^{-s}(log 2)^2
        let (g, gp, gpp) = g_q_derivatives(2);
        assert!((g - 0.5).abs() < 1e-15);
        assert!((gp - LN2 / 2.0).abs() < 1e-15);
        assert!((gpp + LN2 * LN2 / 2.0).abs() < 1e-15);
    }

    /// central finite differences of the explicit product at s = 1
    fn g_q_fd(q: u64, h: f64) -> (f64, f64, f64) {
        let g = |s: f64| -> f64 {
            factorize(q)
                .iter()
                .map(|&(p, _)| 1.0 - (p as f64).powf(-s))
                .product()
        };
        (
            g(1.0),
            (g(1.0 + h) - g(1.0 - h)) / (2.0 * h),
            (g(1.0 + h) - 2.0 * g(1.0) + g(1.0 - h)) / (h * h),
        )
    }

    #[test]
    fn g_q_matches_finite_differences() {
        for q in 1..=60u64 {
            let (g, gp, gpp) = g_q_derivatives(q);
            let (fg, fgp, fgpp) = g_q_fd(q, 1e-4);
            assert!((g - fg).abs() <= 1e-12 * g.abs().max(1.0));
            assert!((gp - fgp).abs() <= 1e-6 * gp.abs().max(1.0), "q={q}");
            assert!((gpp - fgpp).abs() <= 1e-6 * gpp.abs().max(1.0), "q={q}");
        }
    }

    #[test]
    fn stieltjes_known_values() {
        // oracle: the crude defining limit at x = 10^6 with two EM corrections
        let oracle0 = stieltjes_em(0, 1_000_000, 2);
        let oracle1 = stieltjes_em(1, 1_000_000, 2);
        assert!((stieltjes(0).unwrap() - oracle0).abs() < 1e-12);
        assert!((stieltjes(1).unwrap() - oracle1).abs() < 1e-12);
        assert!((stieltjes(0).unwrap() - 0.577215664901533).abs() < 1e-12);
        assert!((stieltjes(1).unwrap() + 0.072815845483677).abs() < 1e-12);
        assert!(matches!(stieltjes(2), Err(Error::UnsupportedStieltjesIndex(2))));
    }

    #[test]
    fn stieltjes_uncorrected_truncation_error_is_leading_em_term() {
        // partial sum at x = 10^3 without corrections misses γ₀ by ≈ 1/(2·10^3)
        let crude: f64 = (1..=1000).map(|k| 1.0 / k as f64).sum::<f64>() - 1000.0f64.ln();
        let gap = crude - stieltjes(0).unwrap();
        assert!((gap - 1.0 / 2000.0).abs() < 1e-7, "gap = {gap}");
    }

    #[test]
    fn singular_polynomial_q1_constant_term() {
        // P_1(1) = c0 = 1 + γ₀ + γ₀² + 3γ₁ (no Euler factors at q = 1)
        let p = SingularPolynomial::new(1);
        let g0 = stieltjes(0).unwrap();
        let g1 = stieltjes(1).unwrap();
        let want = 1.0 + g0 + g0 * g0 + 3.0 * g1;
        assert!((p.eval(1.0).unwrap() - want).abs() < 1e-14);
        assert!((want - 1.6919460).abs() < 1e-6);
    }

    #[test]
    fn singular_polynomial_prime_matches_finite_difference() {
        let p = SingularPolynomial::new(4);
        let u = 50.0;
        let h = 1e-4;
        let fd = (p.eval(u + h).unwrap() - p.eval(u - h).unwrap()) / (2.0 * h);
        let an = p.eval_prime(u).unwrap();
        assert!((fd - an).abs() < 1e-6 * an.abs());
    }

    #[test]
    fn singular_polynomial_q4_leading_coefficient() {
        // radical of 4 is 2, so the cubic-term coefficient is g_4(1)/2 = 1/4
        let p = SingularPolynomial::new(4);
        assert!((p.c2 - 0.25).abs() < 1e-15);
    }

    #[test]
    fn singular_polynomial_domain_errors() {
        let p = SingularPolynomial::new(3);
        assert!(p.eval(0.0).is_err());
        assert!(p.eval_prime(-1.0).is_err());
    }
}
