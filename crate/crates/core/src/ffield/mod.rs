//! Arithmetic in `F_p` and `F_{p^m}`, univariate polynomials over those
//! fields, and the factorization-shape primitives built on top of them.
//!
//! Elements are canonical coefficient vectors over `F_p` with respect to a
//! monic irreducible modulus. Prime fields use the same representation with
//! a single coefficient. Every value fits in 64 bits and all products are
//! formed in 128-bit intermediates.

mod factor;
mod poly;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub use factor::{
    cycle_type_of_profile, distinct_degree_parts, equal_degree_split, factor_shape,
    frobenius_power, is_irreducible, multiplicity_profile, roots, squarefree_decomposition,
};
pub use poly::UniPoly;

/// Largest extension degree an element can carry.
pub const MAX_EXT: usize = 10;

/// Cap on `q` for fields built through the public constructors.
pub const MAX_FIELD_SIZE: u64 = 1 << 40;

/// Cap on `q` for residue fields built from an explicit modulus.
const MAX_RESIDUE_FIELD_SIZE: u64 = 1 << 62;

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Single-word Barrett reduction for moduli below `2^32`.
///
/// Inputs to [`Barrett::reduce`] must be below `p^2`.
#[derive(Debug, Clone, Copy)]
pub struct Barrett {
    p: u64,
    m: u128,
}

impl Barrett {
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 32)).contains(&p), "Barrett modulus out of range");
        Barrett {
            p,
            m: (u128::from(u64::MAX) + 1) / p as u128,
        }
    }

    #[inline(always)]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.m) >> 64) as u64;
        let r = x - q * self.p;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }

    #[inline(always)]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    #[inline(always)]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

/// An element of `F_{p^m}`: `m` residues mod `p`, low degree first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    c: [u64; MAX_EXT],
    len: u8,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.c[..self.len as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&v| v == 0)
    }

    /// The constant coefficient; the whole value for prime fields.
    pub fn constant_term(&self) -> u64 {
        self.c[0]
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 1 {
            write!(f, "{}", self.c[0])
        } else {
            write!(f, "{:?}", self.coeffs())
        }
    }
}

/// A finite field `F_q`, `q = p^m`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    m: usize,
    /// Monic modulus of degree `m`, low to high, `m + 1` entries. Absent for prime fields
    /// unless built from a linear modulus.
    modulus: Option<Vec<u64>>,
    q: u64,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.modulus {
            None => write!(f, "F_{}", self.p),
            Some(m) => write!(f, "F_{}^{} mod {:?}", self.p, self.m, m),
        }
    }
}

fn checked_power(p: u64, m: usize, cap: u64) -> Option<u64> {
    let mut q: u64 = 1;
    for _ in 0..m {
        q = q.checked_mul(p)?;
        if q > cap {
            return None;
        }
    }
    Some(q)
}

/// Builds `F_p`.
pub fn make_prime_field(p: u64) -> Result<FieldCtx> {
    if p > MAX_FIELD_SIZE {
        return Err(Error::TooLarge(format!("p = {p} exceeds 2^40")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(FieldCtx {
        p,
        m: 1,
        modulus: None,
        q: p,
    })
}

/// Builds `F_{p^m}` with the first irreducible monic modulus met in a
/// pseudorandom order fixed by `(p, m, seed)`.
pub fn make_extension(p: u64, m: usize, seed: u64) -> Result<FieldCtx> {
    if !(1..=8).contains(&m) {
        return Err(Error::InvalidDegree(m));
    }
    let base = make_prime_field(p)?;
    if m == 1 {
        return Ok(base);
    }
    let q = checked_power(p, m, MAX_FIELD_SIZE)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{m} exceeds 2^40")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.rotate_left(17) ^ (m as u64).rotate_left(51));
    loop {
        let mut coeffs: Vec<u64> = (0..m).map(|_| rng.gen_range(0..p)).collect();
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        let cand = UniPoly::from_residues(&base, &coeffs);
        if is_irreducible(&base, &cand) {
            return Ok(FieldCtx {
                p,
                m,
                modulus: Some(coeffs),
                q,
            });
        }
    }
}

impl FieldCtx {
    /// `F_p[t]/(h)` for a monic irreducible `h` given by its residues, low to high.
    ///
    /// Used for residue fields at ramified places, so the size cap is `2^62`
    /// rather than the `2^40` applied to [`make_extension`].
    pub fn from_modulus(p: u64, modulus: &[u64]) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let k = modulus.len().checked_sub(1).filter(|&k| k >= 1).ok_or_else(|| {
            Error::InvalidInput("modulus must have degree at least 1".into())
        })?;
        if k > MAX_EXT {
            return Err(Error::InvalidDegree(k));
        }
        if modulus[k] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidInput("modulus must be monic with reduced residues".into()));
        }
        let q = checked_power(p, k, MAX_RESIDUE_FIELD_SIZE)
            .ok_or_else(|| Error::TooLarge(format!("{p}^{k} exceeds 2^62")))?;
        let base = FieldCtx {
            p,
            m: 1,
            modulus: None,
            q: p,
        };
        if k == 1 {
            // keep the modulus so `generator` returns its root
            return Ok(FieldCtx {
                modulus: Some(modulus.to_vec()),
                ..base
            });
        }
        if !is_irreducible(&base, &UniPoly::from_residues(&base, modulus)) {
            return Err(Error::NotIrreducible);
        }
        Ok(FieldCtx {
            p,
            m: k,
            modulus: Some(modulus.to_vec()),
            q,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    fn raw(&self, c: [u64; MAX_EXT]) -> FieldElem {
        FieldElem {
            c,
            len: self.m as u8,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.raw([0; MAX_EXT])
    }

    pub fn one(&self) -> FieldElem {
        self.from_u64(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_u64(&self, v: u64) -> FieldElem {
        let mut c = [0; MAX_EXT];
        c[0] = v % self.p;
        self.raw(c)
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        let r = v.rem_euclid(self.p.min(i64::MAX as u64) as i64) as u64;
        self.from_u64(r)
    }

    /// Element with the given coefficient vector (length `m`, entries below `p`).
    pub fn elem(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() != self.m || coeffs.iter().any(|&v| v >= self.p) {
            return Err(Error::InvalidInput(format!(
                "element needs {} residues below {}",
                self.m, self.p
            )));
        }
        let mut c = [0; MAX_EXT];
        c[..self.m].copy_from_slice(coeffs);
        Ok(self.raw(c))
    }

    /// The class of the modulus variable, a generator of `F_q` over `F_p`.
    pub fn generator(&self) -> FieldElem {
        if self.m == 1 {
            let h0 = self.modulus.as_ref().map_or(0, |m| m[0]);
            return self.from_u64((self.p - h0) % self.p);
        }
        let mut c = [0; MAX_EXT];
        c[1] = 1;
        self.raw(c)
    }

    /// Codec index `sum c_i p^i`.
    pub fn index_of(&self, a: &FieldElem) -> u64 {
        a.coeffs().iter().rev().fold(0u64, |acc, &v| acc * self.p + v)
    }

    pub fn from_index(&self, mut idx: u64) -> FieldElem {
        let mut c = [0; MAX_EXT];
        for slot in c.iter_mut().take(self.m) {
            *slot = idx % self.p;
            idx /= self.p;
        }
        self.raw(c)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(move |i| self.from_index(i))
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let mut c = [0; MAX_EXT];
        for (i, slot) in c.iter_mut().enumerate().take(self.m) {
            let s = a.c[i] + b.c[i];
            *slot = if s >= self.p { s - self.p } else { s };
        }
        self.raw(c)
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        let mut c = [0; MAX_EXT];
        for (i, slot) in c.iter_mut().enumerate().take(self.m) {
            *slot = if a.c[i] == 0 { 0 } else { self.p - a.c[i] };
        }
        self.raw(c)
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let p = self.p;
        let modulus = match &self.modulus {
            Some(modulus) if self.m > 1 => modulus,
            _ => {
                let mut c = [0; MAX_EXT];
                c[0] = mul_mod(a.c[0], b.c[0], p);
                return self.raw(c);
            }
        };
        let m = self.m;
        let mut prod = [0u64; 2 * MAX_EXT];
        for k in 0..(2 * m - 1) {
            let lo = k.saturating_sub(m - 1);
            let hi = k.min(m - 1);
            let mut acc: u128 = 0;
            for i in lo..=hi {
                acc += a.c[i] as u128 * b.c[k - i] as u128;
            }
            prod[k] = (acc % p as u128) as u64;
        }
        for i in (m..2 * m - 1).rev() {
            let lead = prod[i];
            if lead == 0 {
                continue;
            }
            let neg = p - lead;
            for j in 0..m {
                let t = prod[i - m + j] as u128 + neg as u128 * modulus[j] as u128;
                prod[i - m + j] = (t % p as u128) as u64;
            }
            prod[i] = 0;
        }
        let mut c = [0; MAX_EXT];
        c[..m].copy_from_slice(&prod[..m]);
        self.raw(c)
    }

    pub fn square(&self, a: &FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    pub fn scale(&self, a: &FieldElem, k: u64) -> FieldElem {
        self.mul(a, &self.from_u64(k))
    }

    pub fn pow(&self, a: &FieldElem, mut e: u128) -> FieldElem {
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.square(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u128 - 2))
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: &FieldElem) -> FieldElem {
        if self.m == 1 {
            *a
        } else {
            self.pow(a, self.p as u128)
        }
    }

    /// Absolute trace `F_q -> F_p`.
    pub fn trace(&self, a: &FieldElem) -> u64 {
        let mut acc = self.zero();
        let mut cur = *a;
        for _ in 0..self.m {
            acc = self.add(&acc, &cur);
            cur = self.frobenius(&cur);
        }
        acc.c[0]
    }

    /// Quadratic character: `0`, `1` or `-1`. Requires odd `q`.
    pub fn legendre(&self, a: &FieldElem) -> i32 {
        if a.is_zero() {
            return 0;
        }
        if self.p == 2 {
            return 1;
        }
        let r = self.pow(a, (self.q as u128 - 1) / 2);
        if r == self.one() {
            1
        } else {
            -1
        }
    }

    /// A square root by Tonelli–Shanks, `None` for non-squares. Odd `q` only.
    pub fn sqrt(&self, a: &FieldElem) -> Option<FieldElem> {
        if a.is_zero() {
            return Some(self.zero());
        }
        if self.p == 2 {
            // squaring is a bijection; the root is a^(q/2)
            return Some(self.pow(a, self.q as u128 / 2));
        }
        if self.legendre(a) != 1 {
            return None;
        }
        let q = self.q as u128;
        if q % 4 == 3 {
            return Some(self.pow(a, (q + 1) / 4));
        }
        let mut s = 0u32;
        let mut odd = q - 1;
        while odd.is_multiple_of(2) {
            odd /= 2;
            s += 1;
        }
        // first non-residue in codec order
        let z = (2..self.q)
            .map(|i| self.from_index(i))
            .find(|e| self.legendre(e) == -1)
            .expect("odd field has a non-residue");
        let mut m = s;
        let mut c = self.pow(&z, odd);
        let mut t = self.pow(a, odd);
        let mut r = self.pow(a, odd.div_ceil(2));
        let one = self.one();
        while t != one {
            let mut i = 0;
            let mut t2 = t;
            while t2 != one {
                t2 = self.square(&t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.square(&b);
            }
            m = i;
            c = self.square(&b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }

    /// Text form: a residue for prime fields, otherwise the codec index.
    pub fn render(&self, a: &FieldElem) -> String {
        self.index_of(a).to_string()
    }
}
