use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, UniPoly};

/// `|sum_x psi(f(x))|` with `psi(y) = exp(2 pi i Tr(c y)/p)`, `c = psi_index`.
///
/// Polynomials whose degree is divisible by `p` are rejected: the Weil
/// estimate `(d-1) sqrt q` does not apply to them.
pub fn weil_character_sum(ctx: &FieldCtx, f: &UniPoly, psi_index: u64) -> Result<f64> {
    let p = ctx.p();
    if psi_index.is_multiple_of(p) {
        return Err(Error::DegenerateCharacter(psi_index));
    }
    let d = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if (d as u64).is_multiple_of(p) {
        return Err(Error::DegeneratePolynomial(format!("degree {d} is divisible by p = {p}")));
    }
    let roots: Vec<Complex64> = (0..p)
        .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / p as f64))
        .collect();
    let c = ctx.from_u64(psi_index);
    let terms: Vec<Complex64> = ctx
        .elements()
        .map(|x| roots[ctx.trace(&ctx.mul(&c, &f.eval(ctx, &x))) as usize])
        .collect();
    Ok(pairwise_sum(&terms).norm())
}

fn pairwise_sum(xs: &[Complex64]) -> Complex64 {
    if xs.len() <= 16 {
        return xs.iter().sum();
    }
    let (lo, hi) = xs.split_at(xs.len() / 2);
    pairwise_sum(lo) + pairwise_sum(hi)
}
