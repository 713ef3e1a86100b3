//! Image statistics of a polynomial map `F_q -> F_q`.

mod census;
mod weil;

pub(crate) use census::quartic_census_from_values;
pub use census::{
    cycle_type_census, genericity_test, quartic_census, shape_of, shape_predictions, tolerance,
    CycleCensus, GenericityVerdict, Verdict,
};
pub use weil::weil_character_sum;

use std::collections::HashMap;

use crate::bounds::{rat, Rational};
use crate::error::{Error, Result};
use crate::ffield::{Barrett, FieldCtx, UniPoly};
use crate::symrep::factorial;

/// Largest field the spectrum accumulators accept.
pub const MAX_SPECTRUM_Q: u64 = 1 << 31;
pub const MAX_SPECTRUM_DEGREE: usize = 12;

/// `m[i-1]` = number of `y` with exactly `i` preimages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageSpectrum {
    pub q: u64,
    pub d: usize,
    pub m: Vec<u64>,
    pub n_f: u64,
}

impl PreimageSpectrum {
    /// Builds a spectrum from fiber multiplicities, checking that the
    /// fibers partition the domain.
    pub fn from_parts(q: u64, d: usize, m: Vec<u64>) -> Result<Self> {
        if m.len() != d {
            return Err(Error::InvalidInput(format!("spectrum needs {d} entries, got {}", m.len())));
        }
        let covered: u128 = m.iter().enumerate().map(|(i, &c)| (i as u128 + 1) * c as u128).sum();
        if covered != q as u128 {
            return Err(Error::InternalInconsistency(format!(
                "fibers cover {covered} points of a field of size {q}"
            )));
        }
        let n_f = m.iter().sum();
        Ok(PreimageSpectrum { q, d, m, n_f })
    }

    pub fn is_permutation(&self) -> bool {
        self.n_f == self.q
    }

    /// `q d m_1 .. m_d N_f`
    pub fn render(&self) -> String {
        let mut parts = vec![self.q.to_string(), self.d.to_string()];
        parts.extend(self.m.iter().map(u64::to_string));
        parts.push(self.n_f.to_string());
        parts.join(" ")
    }
}

/// Evaluates `f` at every point and buckets fiber sizes.
pub fn preimage_spectrum(ctx: &FieldCtx, f: &UniPoly) -> Result<PreimageSpectrum> {
    let d = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) if d > MAX_SPECTRUM_DEGREE => return Err(Error::InvalidDegree(d)),
        Some(d) => d,
    };
    let q = ctx.q();
    if q > MAX_SPECTRUM_Q {
        return Err(Error::TooLarge(format!("q = {q} exceeds the accumulator budget")));
    }
    let mut m = vec![0u64; d];
    if ctx.is_prime_field() {
        let fiber = value_counts(ctx.p(), &residues(f))?;
        for &c in &fiber {
            if c > 0 {
                m[c as usize - 1] += 1;
            }
        }
    } else {
        let mut fiber: HashMap<u64, u8> = HashMap::new();
        for x in ctx.elements() {
            *fiber.entry(ctx.index_of(&f.eval(ctx, &x))).or_default() += 1;
        }
        for &c in fiber.values() {
            m[c as usize - 1] += 1;
        }
    }
    PreimageSpectrum::from_parts(q, d, m)
}

pub(crate) fn residues(f: &UniPoly) -> Vec<u64> {
    f.coeffs().iter().map(|c| c.constant_term()).collect()
}

/// `counts[y]` = size of the fiber over `y`, for `f` with residue coefficients
/// (low to high) over `F_p`.
pub fn value_counts(p: u64, coeffs: &[u64]) -> Result<Vec<u8>> {
    if p > MAX_SPECTRUM_Q {
        return Err(Error::TooLarge(format!("p = {p} exceeds the accumulator budget")));
    }
    let br = Barrett::new(p);
    let mut counts = vec![0u8; p as usize];
    for x in 0..p {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = br.add(br.mul(acc, x), c);
        }
        counts[acc as usize] += 1;
    }
    Ok(counts)
}

/// `(n_2', .., n_d')` with `n_r' = sum_{j >= r} j!/(j-r)! m_j`: ordered
/// `r`-tuples of distinct points with a common value.
pub fn tuple_counts(s: &PreimageSpectrum) -> Vec<u128> {
    (2..=s.d)
        .map(|r| {
            (r..=s.d)
                .map(|j| falling(j, r) * s.m[j - 1] as u128)
                .sum()
        })
        .collect()
}

fn falling(j: usize, r: usize) -> u128 {
    ((j - r + 1)..=j).map(|k| k as u128).product()
}

/// `sum_{r>=2} (-1)^r n_r'/r! == q - N_f`, exactly.
pub fn bsd_identity_check(s: &PreimageSpectrum) -> bool {
    let lhs = tuple_counts(s)
        .into_iter()
        .zip(2..)
        .fold(rat(0, 1), |acc, (n, r)| {
            let term = Rational::new(n as i128, factorial(r) as i128);
            if r % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        });
    lhs == rat(s.q as i128 - s.n_f as i128, 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalBounds {
    /// `N_f <= q - (q-1)/d`; vacuous for permutations.
    pub wan_ok: bool,
    /// `N_f >= q/d`.
    pub trivial_ok: bool,
    pub is_permutation: bool,
}

pub fn classical_bounds(s: &PreimageSpectrum) -> ClassicalBounds {
    let (q, d, n) = (s.q as u128, s.d as u128, s.n_f as u128);
    let is_permutation = s.is_permutation();
    ClassicalBounds {
        wan_ok: is_permutation || d * n + (q - 1) <= d * q,
        trivial_ok: d * n >= q,
        is_permutation,
    }
}

/// `(N_f - 5q/8, (N_f - 5q/8)/sqrt q)` for a quartic.
pub fn normalized_deviation(s: &PreimageSpectrum) -> Result<(Rational, f64)> {
    if s.d != 4 {
        return Err(Error::UnsupportedDegree(s.d));
    }
    let exact = rat(8 * s.n_f as i128 - 5 * s.q as i128, 8);
    let d_f = (*exact.numer() as f64 / *exact.denom() as f64) / (s.q as f64).sqrt();
    Ok((exact, d_f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{make_extension, make_prime_field};
    use proptest::prelude::*;

    fn spectrum(p: u64, coeffs: &[i64]) -> PreimageSpectrum {
        let f = make_prime_field(p).unwrap();
        preimage_spectrum(&f, &UniPoly::from_ints(&f, coeffs)).unwrap()
    }

    /// Oracle: count fibers by comparing every pair of points.
    fn pairwise_spectrum(ctx: &FieldCtx, f: &UniPoly, d: usize) -> Vec<u64> {
        let values: Vec<u64> = ctx.elements().map(|x| ctx.index_of(&f.eval(ctx, &x))).collect();
        let mut m = vec![0u64; d];
        for y in 0..ctx.q() {
            let c = values.iter().filter(|&&v| v == y).count();
            if c > 0 {
                m[c - 1] += 1;
            }
        }
        m
    }

    #[test]
    fn spectrum_examples() {
        let s = spectrum(5, &[0, -1, 1, 0, 1]);
        assert_eq!(s.m, vec![3, 1, 0, 0]);
        assert_eq!(s.n_f, 4);
        assert_eq!(s.render(), "5 4 3 1 0 0 4");
        let s = spectrum(5, &[0, 0, 0, 1]);
        assert_eq!(s.m, vec![5, 0, 0]);
        assert!(s.is_permutation());
        let s = spectrum(7, &[0, 0, 1]);
        assert_eq!(s.m, vec![1, 3]);
        assert_eq!(s.n_f, 4);
    }

    #[test]
    fn spectrum_rejects_constants() {
        let f = make_prime_field(7).unwrap();
        assert_eq!(
            preimage_spectrum(&f, &UniPoly::from_ints(&f, &[3])),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn extension_spectrum_matches_pairwise_oracle() {
        let f25 = make_extension(5, 2, 0).unwrap();
        let g = UniPoly::from_ints(&f25, &[0, -1, 1, 0, 1]);
        let s = preimage_spectrum(&f25, &g).unwrap();
        assert_eq!(s.m, pairwise_spectrum(&f25, &g, 4));
        assert!(bsd_identity_check(&s));
        // x^2 on F_25: 12 nonzero squares, each with two roots
        let sq = preimage_spectrum(&f25, &UniPoly::from_ints(&f25, &[0, 0, 1])).unwrap();
        assert_eq!(sq.m, vec![1, 12]);
    }

    #[test]
    fn tuple_count_examples() {
        assert_eq!(tuple_counts(&spectrum(5, &[0, -1, 1, 0, 1])), vec![2, 0, 0]);
        assert_eq!(tuple_counts(&spectrum(7, &[0, 0, 1])), vec![6]);
        assert!(tuple_counts(&spectrum(5, &[0, 0, 0, 1])).iter().all(|&n| n == 0));
    }

    #[test]
    fn classical_examples() {
        let b = classical_bounds(&spectrum(5, &[0, -1, 1, 0, 1]));
        assert!(b.wan_ok && b.trivial_ok && !b.is_permutation);
        let b = classical_bounds(&spectrum(5, &[0, 0, 0, 1]));
        assert!(b.is_permutation && b.wan_ok);
        // Wan is tight for x^2 over F_7
        let s = spectrum(7, &[0, 0, 1]);
        assert!(classical_bounds(&s).wan_ok);
        let tighter = PreimageSpectrum::from_parts(7, 2, vec![3, 2]).unwrap();
        assert!(!classical_bounds(&tighter).wan_ok);
    }

    #[test]
    fn deviation_example() {
        let (exact, d_f) = normalized_deviation(&spectrum(5, &[0, -1, 1, 0, 1])).unwrap();
        assert_eq!(exact, rat(7, 8));
        assert!((d_f - 0.875 / 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(
            normalized_deviation(&spectrum(7, &[0, 0, 1])),
            Err(Error::UnsupportedDegree(2))
        );
    }

    #[test]
    fn bad_spectrum_rejected() {
        assert!(matches!(
            PreimageSpectrum::from_parts(7, 2, vec![3, 3]),
            Err(Error::InternalInconsistency(_))
        ));
    }

    const PRIMES: &[u64] = &[5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101];

    proptest! {
        #[test]
        fn spectrum_invariants(pi in 0..PRIMES.len(), coeffs in prop::collection::vec(-200i64..200, 2..=7)) {
            let p = PRIMES[pi];
            let f = make_prime_field(p).unwrap();
            let g = UniPoly::from_ints(&f, &coeffs);
            prop_assume!(g.degree().unwrap_or(0) >= 1);
            let d = g.degree().unwrap();
            let s = preimage_spectrum(&f, &g).unwrap();
            prop_assert_eq!(&s.m, &pairwise_spectrum(&f, &g, d));
            prop_assert!(bsd_identity_check(&s));
            for (r, n) in (2..).zip(tuple_counts(&s)) {
                prop_assert_eq!(n % factorial(r), 0);
            }
            let perm = s.m[0] == p && s.m[1..].iter().all(|&c| c == 0);
            prop_assert_eq!(s.is_permutation(), perm);
            let b = classical_bounds(&s);
            prop_assert!(b.wan_ok && b.trivial_ok);
        }
    }
}
