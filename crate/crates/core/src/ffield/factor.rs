use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FieldCtx, FieldElem, UniPoly};
use crate::error::{Error, Result};

/// `x^(q^k) mod g` by `k` successive `q`-th powerings.
pub fn frobenius_power(ctx: &FieldCtx, k: u32, g: &UniPoly) -> Result<UniPoly> {
    if g.degree().unwrap_or(0) < 1 || !g.is_monic(ctx) {
        return Err(Error::InvalidInput("modulus must be monic of degree >= 1".into()));
    }
    let mut h = UniPoly::x(ctx).rem(ctx, g)?;
    for _ in 0..k {
        h = h.pow_mod(ctx, ctx.q() as u128, g);
    }
    Ok(h)
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test over the field of `ctx`.
pub fn is_irreducible(ctx: &FieldCtx, g: &UniPoly) -> bool {
    let Some(n) = g.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let g = g.monic(ctx);
    let x = UniPoly::x(ctx);
    let mut powers = Vec::with_capacity(n + 1);
    let mut h = x.clone();
    powers.push(h.clone());
    for _ in 0..n {
        h = h.pow_mod(ctx, ctx.q() as u128, &g);
        powers.push(h.clone());
    }
    if powers[n] != x {
        return false;
    }
    prime_divisors(n).into_iter().all(|r| {
        let t = powers[n / r].sub(ctx, &x);
        t.gcd(ctx, &g).degree() == Some(0)
    })
}

fn require_squarefree(ctx: &FieldCtx, g: &UniPoly) -> Result<UniPoly> {
    match g.degree() {
        None => Err(Error::InvalidInput("zero polynomial".into())),
        Some(0) => Ok(g.monic(ctx)),
        Some(_) => {
            let d = g.derivative(ctx);
            if d.is_zero() || g.gcd(ctx, &d).degree() != Some(0) {
                Err(Error::NotSquarefree)
            } else {
                Ok(g.monic(ctx))
            }
        }
    }
}

/// Distinct-degree factorization of a squarefree polynomial: pairs
/// `(i, product of all irreducible factors of degree i)`.
pub fn distinct_degree_parts(ctx: &FieldCtx, g: &UniPoly) -> Result<Vec<(usize, UniPoly)>> {
    let mut rest = require_squarefree(ctx, g)?;
    let x = UniPoly::x(ctx);
    let mut parts = Vec::new();
    let mut h = x.clone();
    let mut i = 0;
    while let Some(n) = rest.degree() {
        if n < 2 * (i + 1) {
            if n > 0 {
                parts.push((n, rest));
            }
            break;
        }
        i += 1;
        h = h.pow_mod(ctx, ctx.q() as u128, &rest);
        let part = h.sub(ctx, &x).gcd(ctx, &rest);
        if part.degree().unwrap_or(0) > 0 {
            rest = rest.div_exact(ctx, &part)?;
            h = h.rem(ctx, &rest)?;
            parts.push((i, part));
        }
    }
    Ok(parts)
}

/// Factorization shape of a squarefree polynomial: `(degree, count)` pairs,
/// ascending by degree.
pub fn factor_shape(ctx: &FieldCtx, g: &UniPoly) -> Result<Vec<(usize, usize)>> {
    Ok(distinct_degree_parts(ctx, g)?
        .into_iter()
        .map(|(i, part)| (i, part.degree().expect("nonzero") / i))
        .collect())
}

/// Cantor–Zassenhaus splitting of a product of distinct monic irreducibles
/// of common degree `k`. Odd characteristic only.
pub fn equal_degree_split(ctx: &FieldCtx, g: &UniPoly, k: usize) -> Result<Vec<UniPoly>> {
    if ctx.p() == 2 {
        return Err(Error::Unsupported("equal-degree splitting in characteristic 2".into()));
    }
    let g = g.monic(ctx);
    let n = g.degree().ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    if k == 0 || n % k != 0 {
        return Err(Error::InvalidInput(format!("degree {n} is not a multiple of {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0fc2);
    let mut done = Vec::new();
    let mut todo = vec![g];
    while let Some(h) = todo.pop() {
        let n = h.degree().expect("nonzero");
        if n == k {
            done.push(h);
            continue;
        }
        loop {
            let a = UniPoly::new(
                (0..n)
                    .map(|_| ctx.from_index(rng.gen_range(0..ctx.q())))
                    .collect(),
            );
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            // a^(1 + q + ... + q^(k-1)) lands in F_q inside each factor field
            let mut norm = a.clone();
            let mut conj = a.clone();
            for _ in 1..k {
                conj = conj.pow_mod(ctx, ctx.q() as u128, &h);
                norm = norm.mul_mod(ctx, &conj, &h);
            }
            let c = norm
                .pow_mod(ctx, (ctx.q() as u128 - 1) / 2, &h)
                .sub(ctx, &UniPoly::one(ctx));
            let d = c.gcd(ctx, &h);
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < n {
                let other = h.div_exact(ctx, &d)?;
                todo.push(d);
                todo.push(other);
                break;
            }
        }
    }
    done.sort_by_key(|f| {
        f.coeffs()
            .iter()
            .map(|c| ctx.index_of(c))
            .collect::<Vec<_>>()
    });
    Ok(done)
}

/// Distinct roots in `F_q`, ascending in codec order.
pub fn roots(ctx: &FieldCtx, g: &UniPoly) -> Result<Vec<FieldElem>> {
    let n = g.degree().ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out: Vec<FieldElem> = if ctx.p() == 2 {
        if ctx.q() > 1 << 24 {
            return Err(Error::Unsupported("root finding over large binary fields".into()));
        }
        ctx.elements().filter(|x| g.eval(ctx, x).is_zero()).collect()
    } else {
        let g = g.monic(ctx);
        let x = UniPoly::x(ctx);
        let h = x.pow_mod(ctx, ctx.q() as u128, &g);
        let lin = h.sub(ctx, &x).gcd(ctx, &g);
        if lin.degree().unwrap_or(0) == 0 {
            return Ok(Vec::new());
        }
        equal_degree_split(ctx, &lin, 1)?
            .into_iter()
            .map(|l| ctx.neg(&l.coeffs()[0]))
            .collect()
    };
    out.sort_by_key(|e| ctx.index_of(e));
    Ok(out)
}

fn pth_root(ctx: &FieldCtx, g: &UniPoly) -> UniPoly {
    let p = ctx.p() as usize;
    let e = (ctx.q() / ctx.p()) as u128;
    UniPoly::new(
        g.coeffs()
            .iter()
            .step_by(p)
            .map(|c| ctx.pow(c, e))
            .collect(),
    )
}

/// Squarefree decomposition `monic(g) = prod u_i^i`: pairs `(i, u_i)` with
/// `u_i` monic, squarefree and nonconstant, ascending in `i`.
pub fn squarefree_decomposition(ctx: &FieldCtx, g: &UniPoly) -> Result<Vec<(usize, UniPoly)>> {
    if g.degree().unwrap_or(0) < 1 {
        return Err(Error::ConstantPolynomial);
    }
    let mut out = sqf_rec(ctx, &g.monic(ctx))?;
    out.sort_by_key(|(i, _)| *i);
    Ok(out)
}

fn sqf_rec(ctx: &FieldCtx, f: &UniPoly) -> Result<Vec<(usize, UniPoly)>> {
    let mut out = Vec::new();
    let mut c = f.gcd(ctx, &f.derivative(ctx));
    let mut w = f.div_exact(ctx, &c)?;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(ctx, &c);
        let z = w.div_exact(ctx, &y)?;
        if z.degree().unwrap_or(0) > 0 {
            out.push((i, z));
        }
        i += 1;
        w = y.clone();
        c = c.div_exact(ctx, &y)?;
    }
    if c.degree().unwrap_or(0) > 0 {
        // what is left is a p-th power
        let p = ctx.p() as usize;
        for (j, u) in sqf_rec(ctx, &pth_root(ctx, &c))? {
            out.push((j * p, u));
        }
    }
    Ok(out)
}

/// Multiplicity profile `{(i, deg u_i)}` of the squarefree decomposition.
pub fn multiplicity_profile(ctx: &FieldCtx, g: &UniPoly) -> Result<Vec<(usize, usize)>> {
    Ok(squarefree_decomposition(ctx, g)?
        .into_iter()
        .map(|(i, u)| (i, u.degree().expect("nonzero")))
        .collect())
}

/// Expands a multiplicity profile into a partition: `deg u_i` parts equal to `i`.
pub fn cycle_type_of_profile(profile: &[(usize, usize)]) -> Vec<usize> {
    let mut parts: Vec<usize> = profile
        .iter()
        .flat_map(|&(mult, count)| std::iter::repeat_n(mult, count))
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}
