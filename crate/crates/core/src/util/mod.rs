//! Numeric plumbing: compensated summation, deterministic parallel reduction,
//! and the fixed low-discrepancy point sequence used by the property suites.

pub mod gamma;
pub mod quad;

use num_complex::Complex64;
use rayon::prelude::*;

/// Neumaier-compensated accumulator. The compensation also covers the case
/// |x| > |sum|, which plain Kahan drops.
#[derive(Debug, Clone, Copy, Default)]
pub struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Componentwise compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanComplex {
    re: Kahan,
    im: Kahan,
}

impl KahanComplex {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Block size of the fixed-shape reduction tree. Changing it changes report
/// bits, so it is a constant, not a tunable.
pub const REDUCTION_BLOCK: u64 = 1 << 14;

/// Deterministic parallel sum of `f(n)` for `n` in `lo..=hi`.
///
/// The range is cut into fixed blocks of `REDUCTION_BLOCK`; each block is
/// summed sequentially in ascending order with compensation, block results are
/// collected in block order, and the final fold is a fixed pairwise tree.
/// The result is identical for every parallelism degree, including 1.
pub fn sum_range_complex<F>(lo: u64, hi: u64, f: F) -> Complex64
where
    F: Fn(u64) -> Complex64 + Sync,
{
    if lo > hi {
        return Complex64::new(0.0, 0.0);
    }
    let nblocks = (hi - lo) / REDUCTION_BLOCK + 1;
    let partials: Vec<Complex64> = (0..nblocks)
        .into_par_iter()
        .map(|b| {
            let start = lo + b * REDUCTION_BLOCK;
            let end = (start + REDUCTION_BLOCK - 1).min(hi);
            let mut acc = KahanComplex::new();
            for n in start..=end {
                acc.add(f(n));
            }
            acc.value()
        })
        .collect();
    pairwise_tree(&partials)
}

fn pairwise_tree(xs: &[Complex64]) -> Complex64 {
    match xs.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => xs[0],
        n => {
            let mid = n / 2;
            pairwise_tree(&xs[..mid]) + pairwise_tree(&xs[mid..])
        }
    }
}

/// k-th point of the 2-D Kronecker sequence with additive offset `seed`,
/// mapped into the box `[x0,x1] x [y0,y1]`.
///
/// Irrationals: golden ratio conjugate and sqrt(2)-1. The offset is the
/// recorded `selftest.seed`, so the "random strip points" of the property
/// suites are reproducible from the config alone.
pub fn kronecker_point(k: u64, seed: u64, x: (f64, f64), y: (f64, f64)) -> (f64, f64) {
    const A1: f64 = 0.618_033_988_749_894_9;
    const A2: f64 = 0.414_213_562_373_095_1;
    let t = (k + seed) as f64;
    let u = (t * A1).fract();
    let v = (t * A2).fract();
    (x.0 + u * (x.1 - x.0), y.0 + v * (y.1 - y.0))
}
