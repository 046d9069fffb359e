//! Dirichlet characters mod q with exact root-of-unity arithmetic.
//!
//! A character is an exponent vector over canonical generators of (ℤ/qℤ)*,
//! built by CRT over the prime-power factors of q. Values are exact rational
//! exponents of roots of unity (so multiplicativity, conjugation and
//! orthogonality carry no floating drift) and are converted to complex only
//! at evaluation boundaries.
//!
//! Generator conventions, fixed so that enumeration order is deterministic:
//! factors ascending by prime; odd p^e gets its smallest primitive root;
//! 2^2 gets 3; 2^e (e ≥ 3) gets the pair (2^e − 1, 3), i.e. (−1, 3).
//! Characters are enumerated lexicographically in the exponent vector
//! (first coordinate most significant); the principal character is index 0.

use crate::arith::{euler_phi, factorize};
use crate::error::{Error, Result};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

const NON_UNIT: u32 = u32::MAX;

/// One prime-power factor p^e of q with its generator data.
#[derive(Debug)]
struct Factor {
    pe: u64,
    /// generator residues mod pe; empty for 2^1, two entries for 2^e, e ≥ 3
    gens: Vec<u64>,
    /// matching generator orders
    orders: Vec<u64>,
    /// dlog[a][j] = exponent of generator j in a, for a coprime to pe
    dlog: Vec<[u32; 2]>,
}

/// Shared multiplicative structure of (ℤ/qℤ)*.
#[derive(Debug)]
pub struct CharGroup {
    q: u64,
    phi: u64,
    factors: Vec<Factor>,
    /// flattened generator orders across factors (the enumeration radix)
    orders: Vec<u64>,
    /// flattened generators as residues mod q (CRT-lifted, ≡ 1 in other factors)
    lifted_gens: Vec<u64>,
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// smallest primitive root of the cyclic group (ℤ/p^eℤ)*, odd p
fn primitive_root_odd(pe: u64, p: u64) -> u64 {
    let order = euler_phi(pe);
    let prime_divisors: Vec<u64> = factorize(order).into_iter().map(|(r, _)| r).collect();
    'next: for g in 2..pe {
        if g % p == 0 {
            continue;
        }
        for &r in &prime_divisors {
            if mod_pow(g, order / r, pe) == 1 {
                continue 'next;
            }
        }
        return g;
    }
    unreachable!("cyclic group without generator");
}

fn build_factor(p: u64, e: u32) -> Factor {
    let pe = p.pow(e);
    if p == 2 {
        match e {
            1 => Factor {
                pe,
                gens: vec![],
                orders: vec![],
                dlog: vec![[NON_UNIT; 2]; 2],
            },
            2 => {
                let mut dlog = vec![[NON_UNIT; 2]; 4];
                dlog[1] = [0, 0];
                dlog[3] = [1, 0];
                Factor {
                    pe,
                    gens: vec![3],
                    orders: vec![2],
                    dlog,
                }
            }
            _ => {
                let mut dlog = vec![[NON_UNIT; 2]; pe as usize];
                let half = pe / 4; // order of 3 mod 2^e
                for a in 0..2u64 {
                    for b in 0..half {
                        let mut v = mod_pow(3, b, pe);
                        if a == 1 {
                            v = (v as u128 * (pe - 1) as u128 % pe as u128) as u64;
                        }
                        dlog[v as usize] = [a as u32, b as u32];
                    }
                }
                Factor {
                    pe,
                    gens: vec![pe - 1, 3],
                    orders: vec![2, half],
                    dlog,
                }
            }
        }
    } else {
        let order = euler_phi(pe);
        let g = primitive_root_odd(pe, p);
        let mut dlog = vec![[NON_UNIT; 2]; pe as usize];
        let mut v = 1u64;
        for k in 0..order {
            dlog[v as usize] = [k as u32, 0];
            v = (v as u128 * g as u128 % pe as u128) as u64;
        }
        Factor {
            pe,
            gens: vec![g],
            orders: vec![order],
            dlog,
        }
    }
}

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// x mod mn with x ≡ a (mod m), x ≡ 1 (mod n), for coprime m, n.
fn crt_with_one(a: u64, m: u64, n: u64) -> u64 {
    if n == 1 {
        return a % m.max(1);
    }
    let (g, minv, _) = egcd(m as i64, n as i64);
    debug_assert_eq!(g, 1);
    let minv = minv.rem_euclid(n as i64) as u64;
    let t = (1 + n - a % n) % n;
    let t = (t as u128 * minv as u128 % n as u128) as u64;
    (a as u128 + m as u128 * t as u128) as u64
}

impl CharGroup {
    pub fn new(q: u64) -> Result<Arc<Self>> {
        if q == 0 {
            return Err(Error::InvalidModulus(0));
        }
        let factors: Vec<Factor> = factorize(q)
            .into_iter()
            .map(|(p, e)| build_factor(p, e))
            .collect();
        let mut orders = Vec::new();
        let mut lifted_gens = Vec::new();
        for f in &factors {
            let cofactor = q / f.pe;
            for (&g, &d) in f.gens.iter().zip(&f.orders) {
                orders.push(d);
                lifted_gens.push(crt_with_one(g, f.pe, cofactor));
            }
        }
        Ok(Arc::new(Self {
            q,
            phi: euler_phi(q),
            factors,
            orders,
            lifted_gens,
        }))
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn order(&self) -> u64 {
        self.phi
    }

    /// flattened discrete logs of n, or None when gcd(n, q) > 1
    fn dlogs(&self, n: u64) -> Option<Vec<u32>> {
        let mut out = Vec::with_capacity(self.orders.len());
        for f in &self.factors {
            let r = (n % f.pe) as usize;
            if f.orders.is_empty() {
                // 2^1: units are the odd residue
                if r % 2 == 0 {
                    return None;
                }
                continue;
            }
            let d = f.dlog[r];
            if d[0] == NON_UNIT {
                return None;
            }
            out.push(d[0]);
            if f.orders.len() == 2 {
                out.push(d[1]);
            }
        }
        Some(out)
    }
}

/// A Dirichlet character mod q.
#[derive(Clone)]
pub struct Character {
    group: Arc<CharGroup>,
    exponents: Vec<u64>,
    index: u64,
    conductor: u64,
    parity: u8,
    order: u64,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.exponents == other.exponents
    }
}
impl Eq for Character {}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Character(chi_{}.{}, conductor {}, kappa {})",
            self.modulus(),
            self.index,
            self.conductor,
            self.parity
        )
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi_{}.{}", self.modulus(), self.index)
    }
}

impl Character {
    fn from_exponents(group: Arc<CharGroup>, exponents: Vec<u64>) -> Self {
        debug_assert_eq!(exponents.len(), group.orders.len());
        let mut index = 0u64;
        for (k, d) in exponents.iter().zip(&group.orders) {
            index = index * d + k;
        }
        let mut ch = Self {
            group,
            exponents,
            index,
            conductor: 1,
            parity: 0,
            order: 1,
        };
        ch.order = ch
            .exponents
            .iter()
            .zip(&ch.group.orders)
            .map(|(&k, &d)| d / k.gcd(&d))
            .fold(1u64, |a, b| a.lcm(&b));
        ch.parity = match ch.value_exponent(ch.group.q.max(2) - 1) {
            Some(r) if r == Ratio::new(1, 2) => 1,
            _ => 0,
        };
        ch.conductor = ch.compute_conductor();
        ch
    }

    /// character of (q, index) in enumeration order
    pub fn from_index(q: u64, index: u64) -> Result<Self> {
        let group = CharGroup::new(q)?;
        if index >= group.phi {
            return Err(Error::Domain(format!(
                "character index {index} out of range for modulus {q} (phi = {})",
                group.phi
            )));
        }
        let mut idx = index;
        let mut exps = vec![0u64; group.orders.len()];
        for i in (0..group.orders.len()).rev() {
            exps[i] = idx % group.orders[i];
            idx /= group.orders[i];
        }
        Ok(Self::from_exponents(group, exps))
    }

    pub fn principal(q: u64) -> Result<Self> {
        Self::from_index(q, 0)
    }

    /// the trivial character mod 1
    pub fn trivial() -> Self {
        Self::principal(1).expect("modulus 1 is valid")
    }

    pub fn modulus(&self) -> u64 {
        self.group.q
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// κ ∈ {0, 1}: 0 iff χ(−1) = +1
    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.group.q
    }

    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    /// exact exponent r ∈ [0,1) with χ(n) = e(r), or None when gcd(n,q) > 1
    pub fn value_exponent(&self, n: u64) -> Option<Ratio<i64>> {
        if self.group.q == 1 {
            return Some(Ratio::new(0, 1));
        }
        let dl = self.group.dlogs(n % self.group.q)?;
        let mut acc = Ratio::new(0, 1);
        for ((&k, &d), &l) in self.exponents.iter().zip(&self.group.orders).zip(&dl) {
            if k != 0 && l != 0 {
                acc += Ratio::new((k * l as u64) as i64, d as i64);
            }
        }
        let f = acc.floor();
        Some(acc - f)
    }

    /// χ(n) as a complex number (exact units when the root of unity is in {±1, ±i})
    pub fn eval(&self, n: u64) -> Complex64 {
        match self.value_exponent(n) {
            None => Complex64::new(0.0, 0.0),
            Some(r) => unit_from_exponent(r),
        }
    }

    /// value table over residues 0..q, for bulk sums
    pub fn eval_table(&self) -> Vec<Complex64> {
        (0..self.group.q.max(1)).map(|a| self.eval(a)).collect()
    }

    pub fn conj(&self) -> Self {
        let exps = self
            .exponents
            .iter()
            .zip(&self.group.orders)
            .map(|(&k, &d)| if k == 0 { 0 } else { d - k })
            .collect();
        Self::from_exponents(self.group.clone(), exps)
    }

    /// smallest d | q such that χ is trivial on units ≡ 1 (mod d)
    fn compute_conductor(&self) -> u64 {
        let q = self.group.q;
        let mut divisors: Vec<u64> = (1..=q).filter(|d| q % d == 0).collect();
        divisors.sort_unstable();
        'next: for d in divisors {
            let mut n = 1 + d;
            while n < q {
                if n.gcd(&q) == 1 && self.value_exponent(n) != Some(Ratio::new(0, 1)) {
                    continue 'next;
                }
                n += d;
            }
            return d;
        }
        q
    }

    /// "chi_q.index" — the external addressing used by reports and caches
    pub fn id(&self) -> String {
        format!("chi_{}.{}", self.modulus(), self.index)
    }
}

/// e(r) with exact values for denominators 1, 2, 4.
fn unit_from_exponent(r: Ratio<i64>) -> Complex64 {
    let (num, den) = (*r.numer(), *r.denom());
    match (den, num.rem_euclid(den)) {
        (1, _) => Complex64::new(1.0, 0.0),
        (2, 1) => Complex64::new(-1.0, 0.0),
        (4, 1) => Complex64::new(0.0, 1.0),
        (4, 3) => Complex64::new(0.0, -1.0),
        _ => {
            let angle = TAU * (num as f64) / (den as f64);
            Complex64::new(angle.cos(), angle.sin())
        }
    }
}

/// all φ(q) characters mod q in deterministic enumeration order
pub fn enumerate_characters(q: u64) -> Result<Vec<Character>> {
    let group = CharGroup::new(q)?;
    Ok((0..group.phi)
        .map(|i| Character::from_index(q, i).expect("index in range"))
        .collect())
}

/// conductor 𝔮 and the primitive character mod 𝔮 inducing χ
pub fn conductor_and_primitive_part(chi: &Character) -> (u64, Character) {
    let q = chi.modulus();
    let f = chi.conductor();
    if f == q {
        return (f, chi.clone());
    }
    let group = CharGroup::new(f).expect("conductor is positive");
    let mut exps = Vec::with_capacity(group.orders.len());
    for (j, &h) in group.lifted_gens.iter().enumerate() {
        // lift h to a unit mod q in the same class mod f
        let mut n = h;
        while n.gcd(&q) != 1 {
            n += f;
        }
        let r = chi.value_exponent(n).expect("lift is a unit");
        let d = group.orders[j];
        let k = r * Ratio::new(d as i64, 1);
        debug_assert!(k.is_integer(), "character does not factor through conductor");
        exps.push(k.to_integer() as u64 % d);
    }
    let prim = Character::from_exponents(group, exps);
    debug_assert!(prim.is_primitive());
    (f, prim)
}

/// the character mod q induced from a primitive character mod 𝔮 | q
pub fn induce(prim: &Character, q: u64) -> Result<Character> {
    let f = prim.modulus();
    if q == 0 {
        return Err(Error::InvalidModulus(0));
    }
    if q % f != 0 {
        return Err(Error::InvalidInducing {
            conductor: f,
            modulus: q,
        });
    }
    if !prim.is_primitive() {
        return Err(Error::Domain(format!(
            "induce needs a primitive character, {} has conductor {}",
            prim.id(),
            prim.conductor()
        )));
    }
    let group = CharGroup::new(q)?;
    let mut exps = Vec::with_capacity(group.orders.len());
    for (j, &h) in group.lifted_gens.iter().enumerate() {
        let r = prim
            .value_exponent(h)
            .expect("unit mod q is unit mod conductor");
        let d = group.orders[j];
        let k = r * Ratio::new(d as i64, 1);
        debug_assert!(k.is_integer());
        exps.push(k.to_integer() as u64 % d);
    }
    let chi = Character::from_exponents(group, exps);
    debug_assert_eq!(chi.conductor(), f);
    Ok(chi)
}

/// Gauss sum data for a character.
#[derive(Debug, Clone, Copy)]
pub struct GaussData {
    /// τ(χ) = Σ_{a mod q} χ(a) e(a/q)
    pub tau: Complex64,
    /// ε = τ(χ) / (i^κ √q)
    pub epsilon: Complex64,
}

/// τ(χ) by the direct q-term sum over the character's own modulus.
pub fn gauss_sum(chi: &Character) -> GaussData {
    let q = chi.modulus();
    let mut tau = Complex64::new(0.0, 0.0);
    if q == 1 {
        tau = Complex64::new(1.0, 0.0);
    } else {
        for a in 1..q {
            let v = chi.eval(a);
            if v != Complex64::new(0.0, 0.0) {
                let angle = TAU * (a as f64) / (q as f64);
                tau += v * Complex64::new(angle.cos(), angle.sin());
            }
        }
    }
    let i_kappa = match chi.parity() {
        0 => Complex64::new(1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    let epsilon = tau / (i_kappa * (q as f64).sqrt());
    GaussData { tau, epsilon }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: all completely multiplicative q-periodic maps
    /// (ℤ/qℤ)* → roots of unity, found by assigning values to every unit and
    /// checking the homomorphism property on the full multiplication table.
    /// Only feasible for tiny q; used to pin enumerate_characters.
    fn homomorphism_count_oracle(q: u64) -> usize {
        let units: Vec<u64> = (1..=q).filter(|n| n.gcd(&q) == 1).collect();
        let m = units.len();
        let order = euler_phi(q);
        // candidate value for each unit: an exponent in 0..order of e(1/order)
        let mut count = 0usize;
        let mut assignment = vec![0u64; m];
        'outer: loop {
            // check multiplicativity
            let pos = |x: u64| units.iter().position(|&u| u % q == x % q).unwrap();
            let mut ok = true;
            'check: for i in 0..m {
                for j in 0..m {
                    let prod = units[i] * units[j] % q;
                    let want = (assignment[i] + assignment[j]) % order;
                    if assignment[pos(prod)] != want {
                        ok = false;
                        break 'check;
                    }
                }
            }
            if ok {
                count += 1;
            }
            // next assignment (base `order` counter); fix χ(1) = 1
            for d in (1..m).rev() {
                assignment[d] += 1;
                if assignment[d] < order {
                    continue 'outer;
                }
                assignment[d] = 0;
            }
            break;
        }
        count
    }

    #[test]
    fn enumerate_counts_match_homomorphism_oracle() {
        for q in [1u64, 2, 3, 4, 5, 6, 8] {
            let chars = enumerate_characters(q).unwrap();
            assert_eq!(chars.len() as u64, euler_phi(q), "q = {q}");
            if q <= 6 {
                assert_eq!(chars.len(), homomorphism_count_oracle(q), "oracle q = {q}");
            }
        }
    }

    #[test]
    fn modulus_zero_is_rejected() {
        assert!(matches!(
            enumerate_characters(0),
            Err(Error::InvalidModulus(0))
        ));
    }

    #[test]
    fn trivial_character_is_one_everywhere() {
        let one = Character::trivial();
        for n in 0..10 {
            assert_eq!(one.eval(n), Complex64::new(1.0, 0.0));
        }
        assert!(one.is_principal() && one.is_primitive());
        assert_eq!(one.parity(), 0);
    }

    #[test]
    fn q4_has_principal_and_chi_minus_4() {
        let chars = enumerate_characters(4).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_principal());
        let chi = &chars[1];
        assert_eq!(chi.eval(3), Complex64::new(-1.0, 0.0));
        assert_eq!(chi.eval(2), Complex64::new(0.0, 0.0));
        assert_eq!(chi.parity(), 1);
        assert_eq!(chi.conductor(), 4);
    }

    #[test]
    fn q5_has_an_order_four_character() {
        // (ℤ/5ℤ)* is cyclic generated by 2: some character sends 2 to ±i
        let chars = enumerate_characters(5).unwrap();
        assert_eq!(chars.len(), 4);
        let order4: Vec<_> = chars.iter().filter(|c| c.order() == 4).collect();
        assert_eq!(order4.len(), 2);
        for c in order4 {
            let v = c.eval(2);
            assert!(v.re.abs() < 1e-15 && (v.im.abs() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn enumeration_is_closed_under_conjugation_and_principal_first() {
        for q in 1..=24u64 {
            let chars = enumerate_characters(q).unwrap();
            assert!(chars[0].is_principal());
            for c in &chars {
                let cc = c.conj();
                assert!(chars.iter().any(|d| *d == cc), "conjugate missing, q={q}");
            }
        }
    }

    #[test]
    fn character_invariants_multiplicativity_periodicity() {
        for q in [7u64, 9, 12, 15, 16, 24] {
            for chi in enumerate_characters(q).unwrap() {
                for m in 1..=q {
                    assert_eq!(chi.value_exponent(m), chi.value_exponent(m + q));
                    for n in 1..=q {
                        let lhs = chi.eval(m * n);
                        let rhs = chi.eval(m) * chi.eval(n);
                        assert!((lhs - rhs).norm() < 1e-14, "q={q} m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonality_to_1e12() {
        for q in 1..=24u64 {
            let chars = enumerate_characters(q).unwrap();
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
                    assert!(
                        (s - Complex64::new(want, 0.0)).norm() < 1e-12,
                        "q={q} a={a} b={b} got {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn conductor_and_primitive_part_examples() {
        // principal mod 12 → (1, 𝟙)
        let p12 = Character::principal(12).unwrap();
        let (f, prim) = conductor_and_primitive_part(&p12);
        assert_eq!(f, 1);
        assert!(prim.is_principal() && prim.modulus() == 1);

        // χ₋₄ extended to modulus 12 → (4, χ₋₄)
        let chi4 = Character::from_index(4, 1).unwrap();
        let lifted = induce(&chi4, 12).unwrap();
        let (f, prim) = conductor_and_primitive_part(&lifted);
        assert_eq!(f, 4);
        assert_eq!(prim, chi4);
        // agreement on units mod 12
        for n in 1..=12u64 {
            if n.gcd(&12) == 1 {
                assert_eq!(lifted.value_exponent(n), chi4.value_exponent(n));
            }
        }

        // primitive quadratic mod 5 is its own primitive part
        let quad5 = enumerate_characters(5)
            .unwrap()
            .into_iter()
            .find(|c| c.order() == 2)
            .unwrap();
        let (f, prim) = conductor_and_primitive_part(&quad5);
        assert_eq!(f, 5);
        assert_eq!(prim, quad5);
    }

    #[test]
    fn induce_examples() {
        // induce(𝟙, 6) = principal mod 6
        let p6 = induce(&Character::trivial(), 6).unwrap();
        assert!(p6.is_principal() && p6.modulus() == 6);

        // induce(χ₋₄, 8): χ(5) = 1, χ(6) = 0
        let chi4 = Character::from_index(4, 1).unwrap();
        let chi8 = induce(&chi4, 8).unwrap();
        assert_eq!(chi8.eval(5), Complex64::new(1.0, 0.0));
        assert_eq!(chi8.eval(6), Complex64::new(0.0, 0.0));
        assert_eq!(chi8.conductor(), 4);

        // induce(χ₋₄, 4) = χ₋₄
        assert_eq!(induce(&chi4, 4).unwrap(), chi4);

        // 𝔮 ∤ q is rejected
        assert!(matches!(
            induce(&chi4, 6),
            Err(Error::InvalidInducing {
                conductor: 4,
                modulus: 6
            })
        ));
    }

    #[test]
    fn primitive_part_of_induce_is_identity() {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 12] {
            for prim in enumerate_characters(q).unwrap() {
                if !prim.is_primitive() {
                    continue;
                }
                for mult in [1u64, 2, 3] {
                    let chi = induce(&prim, q * mult).unwrap();
                    let (f, back) = conductor_and_primitive_part(&chi);
                    assert_eq!(f, q);
                    assert_eq!(back, prim);
                }
            }
        }
    }

    #[test]
    fn gauss_sum_examples() {
        // 𝟙 mod 1 → τ = 1
        let g = gauss_sum(&Character::trivial());
        assert_eq!(g.tau, Complex64::new(1.0, 0.0));

        // χ₋₄ → τ = 2i (4-term direct sum e(1/4) − e(3/4))
        let chi4 = Character::from_index(4, 1).unwrap();
        let g = gauss_sum(&chi4);
        assert!((g.tau - Complex64::new(0.0, 2.0)).norm() < 1e-14);
        assert!((g.epsilon - Complex64::new(1.0, 0.0)).norm() < 1e-14);

        // quadratic mod 5 → τ = √5, positive real
        let quad5 = enumerate_characters(5)
            .unwrap()
            .into_iter()
            .find(|c| c.order() == 2)
            .unwrap();
        let g = gauss_sum(&quad5);
        assert!((g.tau.re - 5.0f64.sqrt()).abs() < 1e-13 && g.tau.im.abs() < 1e-13);
    }

    #[test]
    fn gauss_identities_for_all_primitive_q_up_to_24() {
        for q in 1..=24u64 {
            for chi in enumerate_characters(q).unwrap() {
                if !chi.is_primitive() {
                    continue;
                }
                let g = gauss_sum(&chi);
                assert!(
                    (g.tau.norm_sqr() - q as f64).abs() < 1e-10,
                    "|tau|^2 != q for {chi}"
                );
                assert!((g.epsilon.norm() - 1.0).abs() < 1e-10);
                let gbar = gauss_sum(&chi.conj());
                let lhs = g.tau * gbar.tau;
                let rhs = chi.eval(q.max(2) - 1) * q as f64;
                assert!((lhs - rhs).norm() < 1e-10, "tau(χ)tau(χ̄) != χ(-1)q for {chi}");
            }
        }
    }

    #[test]
    fn parity_matches_minus_one_value() {
        for q in 2..=24u64 {
            for chi in enumerate_characters(q).unwrap() {
                let v = chi.eval(q - 1);
                let want = if chi.parity() == 0 { 1.0 } else { -1.0 };
                assert!((v - Complex64::new(want, 0.0)).norm() < 1e-14);
            }
        }
    }
}
