//! Point counts on the fiber-product curves of `f = x^4 + ax^2 + bx`:
//!
//! ```text
//! T_2: (x^2 + y^2 + a)(x + y) = -b
//! T_3: T_2 and x^2 + y^2 + z^2 + xy + yz + zx = -a
//! T_4: T_3 and x + y + z + w = 0
//! ```
//!
//! Off the diagonals these are exactly the tuples of distinct points with a
//! common `f`-value.

use crate::error::{Error, Result};
use crate::ffield::{make_extension, make_prime_field, FieldCtx, FieldElem};

/// Field size cap for the linear-time kernels.
pub const MAX_CURVE_Q: u64 = 10_000_000;
/// Field size cap for the quadratic-time scan.
pub const MAX_SCAN_Q: u64 = 10_000;
pub const MAX_ZETA_P: u64 = 3000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveCounts {
    pub r: usize,
    pub q: u64,
    pub affine: u64,
    /// Affine points with two equal coordinates.
    pub diagonal: u64,
    /// Rational points at infinity of the projective closure.
    pub infinity: u64,
    /// Points at infinity over the algebraic closure.
    pub infinity_closure: u64,
}

impl CurveCounts {
    pub fn off_diagonal(&self) -> u64 {
        self.affine - self.diagonal
    }

    pub fn projective(&self) -> u64 {
        self.affine + self.infinity
    }

    /// `r q affine diagonal infinity`
    pub fn render(&self) -> String {
        format!("{} {} {} {} {}", self.r, self.q, self.affine, self.diagonal, self.infinity)
    }
}

fn minus_one_is_square(q: u64) -> bool {
    q % 4 == 1
}

fn check_curve_field(ctx: &FieldCtx, b: &FieldElem, cap: u64) -> Result<()> {
    if ctx.p() == 2 {
        return Err(Error::BadField(ctx.q()));
    }
    if ctx.q() > cap {
        return Err(Error::TooLarge(format!("q = {} exceeds {cap}", ctx.q())));
    }
    if b.is_zero() {
        return Err(Error::ZeroB);
    }
    Ok(())
}

/// Points of `T_2` grouped by `u = x + y`: on the curve `xy = v(u)` with
/// `2v = u^2 + a + b/u`, so `(x, y)` are the roots of `X^2 - uX + v`.
/// Calls `visit(x, y)` for every affine point.
fn for_each_t2_point(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem, mut visit: impl FnMut(FieldElem, FieldElem)) {
    let half = ctx.inv(&ctx.from_u64(2)).expect("odd characteristic");
    for u in ctx.elements().skip(1) {
        let v = t2_v(ctx, a, b, &u, &half);
        let disc = ctx.sub(&ctx.square(&u), &ctx.scale(&v, 4));
        let Some(s) = ctx.sqrt(&disc) else { continue };
        let x = ctx.mul(&ctx.add(&u, &s), &half);
        let y = ctx.sub(&u, &x);
        visit(x, y);
        if !s.is_zero() {
            visit(y, x);
        }
    }
}

fn t2_v(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem, u: &FieldElem, half: &FieldElem) -> FieldElem {
    let b_over_u = ctx.div(b, u).expect("u is nonzero");
    ctx.mul(&ctx.add(&ctx.add(&ctx.square(u), a), &b_over_u), half)
}

/// `T_2` by summing `1 + chi(u^2 - 4v(u))` over `u != 0`.
pub fn count_t2(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem) -> Result<CurveCounts> {
    check_curve_field(ctx, b, MAX_CURVE_Q)?;
    let half = ctx.inv(&ctx.from_u64(2))?;
    let (mut affine, mut diagonal) = (0u64, 0u64);
    for u in ctx.elements().skip(1) {
        let v = t2_v(ctx, a, b, &u, &half);
        let disc = ctx.sub(&ctx.square(&u), &ctx.scale(&v, 4));
        match ctx.legendre(&disc) {
            0 => {
                affine += 1;
                diagonal += 1;
            }
            1 => affine += 2,
            _ => {}
        }
    }
    Ok(t2_counts(ctx.q(), affine, diagonal))
}

fn t2_counts(q: u64, affine: u64, diagonal: u64) -> CurveCounts {
    CurveCounts {
        r: 2,
        q,
        affine,
        diagonal,
        infinity: if minus_one_is_square(q) { 3 } else { 1 },
        infinity_closure: 3,
    }
}

/// `T_2` by testing every pair `(x, y)`.
pub fn count_t2_scan(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem) -> Result<CurveCounts> {
    check_curve_field(ctx, b, MAX_SCAN_Q)?;
    let minus_b = ctx.neg(b);
    let elems: Vec<FieldElem> = ctx.elements().collect();
    let (mut affine, mut diagonal) = (0u64, 0u64);
    for x in &elems {
        for y in &elems {
            let lhs = ctx.mul(
                &ctx.add(&ctx.add(&ctx.square(x), &ctx.square(y)), a),
                &ctx.add(x, y),
            );
            if lhs == minus_b {
                affine += 1;
                if x == y {
                    diagonal += 1;
                }
            }
        }
    }
    Ok(t2_counts(ctx.q(), affine, diagonal))
}

/// Visits every affine point `(x, y, z)` of `T_3`.
fn for_each_t3_point(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem, mut visit: impl FnMut(FieldElem, FieldElem, FieldElem)) {
    let half = ctx.inv(&ctx.from_u64(2)).expect("odd characteristic");
    for_each_t2_point(ctx, a, b, |x, y| {
        // z^2 + uz + (x^2 + xy + y^2 + a) = 0
        let u = ctx.add(&x, &y);
        let c = ctx.add(&ctx.add(&ctx.add(&ctx.square(&x), &ctx.mul(&x, &y)), &ctx.square(&y)), a);
        let disc = ctx.sub(&ctx.square(&u), &ctx.scale(&c, 4));
        let Some(s) = ctx.sqrt(&disc) else { return };
        let z = ctx.mul(&ctx.sub(&s, &u), &half);
        visit(x, y, z);
        if !s.is_zero() {
            visit(x, y, ctx.sub(&ctx.neg(&u), &z));
        }
    });
}

fn tn_counts(r: usize, q: u64, affine: u64, diagonal: u64) -> CurveCounts {
    CurveCounts {
        r,
        q,
        affine,
        diagonal,
        infinity: if minus_one_is_square(q) { 6 } else { 0 },
        infinity_closure: 6,
    }
}

pub fn count_t3(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem) -> Result<CurveCounts> {
    check_curve_field(ctx, b, MAX_CURVE_Q)?;
    let (mut affine, mut diagonal) = (0u64, 0u64);
    for_each_t3_point(ctx, a, b, |x, y, z| {
        affine += 1;
        if x == y || y == z || x == z {
            diagonal += 1;
        }
    });
    Ok(tn_counts(3, ctx.q(), affine, diagonal))
}

pub fn count_t4(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem) -> Result<CurveCounts> {
    check_curve_field(ctx, b, MAX_CURVE_Q)?;
    let (mut affine, mut diagonal) = (0u64, 0u64);
    for_each_t3_point(ctx, a, b, |x, y, z| {
        let w = ctx.neg(&ctx.add(&ctx.add(&x, &y), &z));
        affine += 1;
        let pts = [x, y, z, w];
        let repeated = (0..4).any(|i| (i + 1..4).any(|j| pts[i] == pts[j]));
        if repeated {
            diagonal += 1;
        }
    });
    Ok(tn_counts(4, ctx.q(), affine, diagonal))
}

/// `P(u) = 1 + c_1 u + ... + c_{2g} u^{2g}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPolynomial {
    pub genus: usize,
    pub coeffs: Vec<i128>,
    pub q: u64,
}

impl LPolynomial {
    /// `q c_1 c_2 ..`
    pub fn render(&self) -> String {
        let mut parts = vec![self.q.to_string()];
        parts.extend(self.coeffs.iter().map(i128::to_string));
        parts.join(" ")
    }

    /// `#X(F_{q^n}) = q^n + 1 - U(P, n)`.
    pub fn predicted_count(&self, n: u32) -> i128 {
        (self.q as i128).pow(n) + 1 - u_of(self, n)
    }
}

/// Power sum `sum_i omega_i^n` of the inverse roots, by Newton's identities.
pub fn u_of(poly: &LPolynomial, n: u32) -> i128 {
    let n = n as usize;
    // P(u) = prod (1 - omega_i u), so c_k = (-1)^k e_k
    let e = |k: usize| -> i128 {
        let c = poly.coeffs.get(k - 1).copied().unwrap_or(0);
        if k.is_multiple_of(2) {
            c
        } else {
            -c
        }
    };
    let mut s = vec![0i128; n + 1];
    for m in 1..=n {
        let mut acc = if m % 2 == 1 { m as i128 * e(m) } else { -(m as i128) * e(m) };
        for k in 1..m {
            let term = e(k) * s[m - k];
            acc += if k % 2 == 1 { term } else { -term };
        }
        s[m] = acc;
    }
    s[n]
}

/// `27 b^2 + 8 a^3 = 0` (or `b = 0`) makes the plane cubic `T_2` singular.
pub fn t2_is_singular(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem) -> bool {
    let a3 = ctx.mul(&ctx.square(a), a);
    let s = ctx.add(&ctx.scale(&ctx.square(b), 27), &ctx.scale(&a3, 8));
    b.is_zero() || s.is_zero()
}

/// Projective count of `T_2` over `F_{p^n}`.
pub fn t2_projective_count(p: u64, n: usize, a: i64, b: i64, seed: u64) -> Result<u64> {
    let ctx = if n == 1 { make_prime_field(p)? } else { make_extension(p, n, seed)? };
    let (ea, eb) = (ctx.from_i64(a), ctx.from_i64(b));
    Ok(count_t2(&ctx, &ea, &eb)?.projective())
}

/// L-polynomial of the genus-1 curve `T_2` over `F_p` from counts over `F_p`, `F_{p^2}`.
pub fn t2_l_polynomial(p: u64, a: i64, b: i64) -> Result<LPolynomial> {
    let base = make_prime_field(p)?;
    if p < 5 {
        return Err(Error::BadField(p));
    }
    if p > MAX_ZETA_P {
        return Err(Error::TooLarge(format!("p = {p} exceeds {MAX_ZETA_P}")));
    }
    let (ea, eb) = (base.from_i64(a), base.from_i64(b));
    if eb.is_zero() {
        return Err(Error::ZeroB);
    }
    if t2_is_singular(&base, &ea, &eb) {
        return Err(Error::NotSmooth);
    }
    let q = p as i128;
    let n1 = t2_projective_count(p, 1, a, b, 0)? as i128;
    let n2 = t2_projective_count(p, 2, a, b, 0)? as i128;
    let c1 = n1 - q - 1;
    let twice_c2 = n2 - q * q - 1 + c1 * c1;
    if twice_c2 % 2 != 0 || twice_c2 / 2 != q || c1 * c1 > 4 * q {
        return Err(Error::HasseViolation(format!(
            "N_1 = {n1}, N_2 = {n2} give c_1 = {c1}, 2c_2 = {twice_c2}"
        )));
    }
    Ok(LPolynomial {
        genus: 1,
        coeffs: vec![c1, q],
        q: p,
    })
}
