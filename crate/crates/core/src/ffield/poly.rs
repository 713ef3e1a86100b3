use std::fmt::Write as _;

use super::{FieldCtx, FieldElem};
use crate::error::{Error, Result};

/// Univariate polynomial over a [`FieldCtx`], coefficients low to high.
///
/// Always canonical: no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        UniPoly::constant(ctx.one())
    }

    pub fn constant(c: FieldElem) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn x(ctx: &FieldCtx) -> Self {
        UniPoly::new(vec![ctx.zero(), ctx.one()])
    }

    /// `x - c`.
    pub fn linear(ctx: &FieldCtx, c: &FieldElem) -> Self {
        UniPoly::new(vec![ctx.neg(c), ctx.one()])
    }

    /// From signed integers mapped into the prime subfield.
    pub fn from_ints(ctx: &FieldCtx, coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| ctx.from_i64(c)).collect())
    }

    /// From residues mod `p` (prime subfield).
    pub fn from_residues(ctx: &FieldCtx, coeffs: &[u64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| ctx.from_u64(c)).collect())
    }

    /// Parses the comma-separated low-to-high text form. Entries are signed
    /// integers reduced into the prime subfield.
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidInput(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::from_ints(ctx, &coeffs))
    }

    /// Comma-separated low-to-high text form; extension elements use their codec index.
    pub fn render(&self, ctx: &FieldCtx) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", ctx.index_of(c));
        }
        out
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, ctx: &FieldCtx, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or_else(|| ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self, ctx: &FieldCtx) -> bool {
        self.leading() == Some(&ctx.one())
    }

    pub fn monic(&self, ctx: &FieldCtx) -> Self {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => {
                let inv = ctx.inv(lc).expect("leading coefficient is nonzero");
                self.scale(ctx, &inv)
            }
        }
    }

    pub fn scale(&self, ctx: &FieldCtx, k: &FieldElem) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| ctx.mul(c, k)).collect())
    }

    pub fn add(&self, ctx: &FieldCtx, other: &UniPoly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| ctx.add(&self.coeff(ctx, i), &other.coeff(ctx, i)))
                .collect(),
        )
    }

    pub fn neg(&self, ctx: &FieldCtx) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| ctx.neg(c)).collect())
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &UniPoly) -> Self {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &UniPoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(&out[i + j], &ctx.mul(a, b));
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, ctx: &FieldCtx, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one(ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ctx, &base);
            }
            base = base.mul(ctx, &base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, ctx: &FieldCtx, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dlc = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dinv = ctx.inv(dlc)?;
        let dn = divisor.coeffs.len();
        if self.coeffs.len() < dn {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ctx.zero(); rem.len() - dn + 1];
        for i in (0..quot.len()).rev() {
            let c = ctx.mul(&rem[i + dn - 1], &dinv);
            if c.is_zero() {
                continue;
            }
            quot[i] = c;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = ctx.sub(&rem[i + j], &ctx.mul(&c, d));
            }
        }
        rem.truncate(dn - 1);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn rem(&self, ctx: &FieldCtx, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(ctx, divisor)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, ctx: &FieldCtx, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(ctx, divisor)?;
        if !r.is_zero() {
            return Err(Error::InternalInconsistency("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn mul_mod(&self, ctx: &FieldCtx, other: &UniPoly, modulus: &UniPoly) -> UniPoly {
        self.mul(ctx, other)
            .rem(ctx, modulus)
            .expect("modulus is nonzero")
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, ctx: &FieldCtx, mut e: u128, modulus: &UniPoly) -> UniPoly {
        let mut base = self.rem(ctx, modulus).expect("modulus is nonzero");
        let mut acc = UniPoly::one(ctx).rem(ctx, modulus).expect("modulus is nonzero");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(ctx, &base, modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(ctx, &base, modulus);
            }
        }
        acc
    }

    pub fn derivative(&self, ctx: &FieldCtx) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| ctx.scale(c, i as u64))
                .collect(),
        )
    }

    pub fn eval(&self, ctx: &FieldCtx, x: &FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(ctx.zero(), |acc, c| ctx.add(&ctx.mul(&acc, x), c))
    }

    /// Monic gcd. `gcd(0, 0)` is zero.
    pub fn gcd(&self, ctx: &FieldCtx, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(ctx, &b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic(ctx)
    }

    /// Coefficientwise image under the field embedding `embed`.
    pub fn map_coeffs(&self, embed: impl Fn(&FieldElem) -> FieldElem) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(embed).collect())
    }

    /// Resultant `Res(self, other)`.
    pub fn resultant(&self, ctx: &FieldCtx, other: &UniPoly) -> FieldElem {
        let (Some(_), Some(_)) = (self.degree(), other.degree()) else {
            return ctx.zero();
        };
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = ctx.one();
        loop {
            let da = a.degree().expect("nonzero");
            let db = b.degree().expect("nonzero");
            if db == 0 {
                return ctx.mul(&acc, &ctx.pow(&b.coeffs[0], da as u128));
            }
            let r = a.rem(ctx, &b).expect("b is nonzero");
            let Some(dr) = r.degree() else {
                return ctx.zero();
            };
            // Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
            if (da * db) % 2 == 1 {
                acc = ctx.neg(&acc);
            }
            acc = ctx.mul(&acc, &ctx.pow(b.leading().expect("nonzero"), (da - dr) as u128));
            a = b;
            b = r;
        }
    }

    /// Discriminant of a polynomial of degree `n >= 1`:
    /// `(-1)^(n(n-1)/2) Res(g, g') / lc(g)`.
    pub fn discriminant(&self, ctx: &FieldCtx) -> Result<FieldElem> {
        let n = self.degree().filter(|&n| n >= 1).ok_or(Error::ConstantPolynomial)?;
        let res = self.resultant(ctx, &self.derivative(ctx));
        let mut d = ctx.div(&res, self.leading().expect("nonzero"))?;
        if (n * (n - 1) / 2) % 2 == 1 {
            d = ctx.neg(&d);
        }
        Ok(d)
    }

    /// Lagrange interpolation through `(xs[i], ys[i])` with distinct `xs`.
    pub fn interpolate(ctx: &FieldCtx, xs: &[FieldElem], ys: &[FieldElem]) -> Result<UniPoly> {
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
            let mut basis = UniPoly::one(ctx);
            let mut denom = ctx.one();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    basis = basis.mul(ctx, &UniPoly::linear(ctx, xj));
                    denom = ctx.mul(&denom, &ctx.sub(xi, xj));
                }
            }
            let k = ctx.div(yi, &denom)?;
            acc = acc.add(ctx, &basis.scale(ctx, &k));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{make_extension, make_prime_field};

    #[test]
    fn gcd_examples() {
        let f = make_prime_field(5).unwrap();
        let a = UniPoly::from_ints(&f, &[-1, 0, 1]);
        let b = UniPoly::from_ints(&f, &[-1, 1]);
        assert_eq!(a.gcd(&f, &b), b);
        let c = UniPoly::from_ints(&f, &[3, 0, 2]);
        assert_eq!(c.gcd(&f, &UniPoly::zero()), c.monic(&f));
        let quartic = UniPoly::from_ints(&f, &[0, -1, 1, 0, 1]);
        assert_eq!(quartic.gcd(&f, &quartic.derivative(&f)), UniPoly::one(&f));
    }

    #[test]
    fn division_identity() {
        let f = make_extension(3, 2, 0).unwrap();
        let a = UniPoly::new((0..7).map(|i| f.from_index(i % 9)).collect());
        let b = UniPoly::new((2..5).map(|i| f.from_index(i)).collect());
        let (q, r) = a.div_rem(&f, &b).unwrap();
        assert!(r.degree() < b.degree());
        assert_eq!(q.mul(&f, &b).add(&f, &r), a);
    }

    #[test]
    fn quadratic_discriminant() {
        let f = make_prime_field(101).unwrap();
        for (b, c) in [(3i64, 7i64), (0, 1), (10, 25), (-4, 99)] {
            let g = UniPoly::from_ints(&f, &[c, b, 1]);
            assert_eq!(g.discriminant(&f).unwrap(), f.from_i64(b * b - 4 * c));
        }
    }

    #[test]
    fn cubic_discriminant() {
        // x^3 + a x + b has discriminant -4a^3 - 27b^2
        let f = make_prime_field(1009).unwrap();
        for (a, b) in [(1i64, 1i64), (-7, 3), (0, 5), (12, 0)] {
            let g = UniPoly::from_ints(&f, &[b, a, 0, 1]);
            assert_eq!(
                g.discriminant(&f).unwrap(),
                f.from_i64(-4 * a * a * a - 27 * b * b)
            );
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = make_prime_field(13).unwrap();
        let g = UniPoly::from_ints(&f, &[4, -2, 0, 7]);
        let xs: Vec<_> = (0..4).map(|i| f.from_u64(i)).collect();
        let ys: Vec<_> = xs.iter().map(|x| g.eval(&f, x)).collect();
        assert_eq!(UniPoly::interpolate(&f, &xs, &ys).unwrap(), g);
    }

    #[test]
    fn text_form() {
        let f = make_prime_field(5).unwrap();
        let g = UniPoly::parse(&f, "4,0,1").unwrap();
        assert_eq!(g, UniPoly::from_ints(&f, &[-1, 0, 1]));
        assert_eq!(g.render(&f), "4,0,1");
        assert!(UniPoly::parse(&f, "1,x").is_err());
    }
}
