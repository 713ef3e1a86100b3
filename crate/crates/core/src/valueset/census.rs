use std::collections::BTreeMap;
use std::fmt;

use crate::artin::branch_discriminant;
use crate::error::{Error, Result};
use crate::ffield::{factor_shape, roots, FieldCtx, UniPoly};
use crate::symrep::{factorial, partitions, Partition};

use super::{residues, value_counts};

pub const MAX_CENSUS_Q: u64 = 1_000_000;
pub const MAX_CENSUS_DEGREE: usize = 8;

/// Factorization shapes of `f(x) - y` over all `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCensus {
    pub d: usize,
    pub q: u64,
    pub counts: BTreeMap<Partition, u64>,
    /// Values `y` where `f(x) - y` has a repeated root.
    pub special: u64,
}

impl CycleCensus {
    pub fn count(&self, shape: &Partition) -> u64 {
        self.counts.get(shape).copied().unwrap_or(0)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (shape, n) in self.counts.iter().rev() {
            out.push_str(&format!("{shape} {n}\n"));
        }
        out.push_str(&format!("special {}\n", self.special));
        out
    }
}

/// `(degree, count)` pairs to the partition of `d` they describe.
pub fn shape_of(shape: &[(usize, usize)]) -> Partition {
    Partition::from_unsorted(
        shape
            .iter()
            .flat_map(|&(deg, count)| std::iter::repeat_n(deg, count))
            .collect(),
    )
}

fn check_census_input(ctx: &FieldCtx, f: &UniPoly) -> Result<usize> {
    let d = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) if d > MAX_CENSUS_DEGREE => return Err(Error::UnsupportedDegree(d)),
        Some(d) => d,
    };
    if ctx.q() > MAX_CENSUS_Q {
        return Err(Error::TooLarge(format!("census over q = {} exceeds {MAX_CENSUS_Q}", ctx.q())));
    }
    Ok(d)
}

/// Shape of `f - y` for every `y`, by distinct-degree factorization.
pub fn cycle_type_census(ctx: &FieldCtx, f: &UniPoly) -> Result<CycleCensus> {
    let d = check_census_input(ctx, f)?;
    let df = f.derivative(ctx);
    let mut counts = BTreeMap::new();
    let mut special = 0;
    for y in ctx.elements() {
        let g = f.sub(ctx, &UniPoly::constant(y));
        if g.gcd(ctx, &df).degree() != Some(0) {
            special += 1;
            continue;
        }
        *counts.entry(shape_of(&factor_shape(ctx, &g)?)).or_insert(0) += 1;
    }
    Ok(CycleCensus {
        d,
        q: ctx.q(),
        counts,
        special,
    })
}

/// Census of a quartic over a prime field from its value table.
///
/// A squarefree quartic with 4, 2 or 1 roots has shape `(1,1,1,1)`, `(2,1,1)`
/// or `(3,1)`; with no roots it is `(2,2)` or `(4)` according to whether its
/// discriminant is a square.
pub fn quartic_census(ctx: &FieldCtx, f: &UniPoly) -> Result<CycleCensus> {
    if f.degree() != Some(4) {
        return Err(Error::UnsupportedDegree(f.degree().unwrap_or(0)));
    }
    if !ctx.is_prime_field() {
        return Err(Error::Unsupported("fast quartic census over extension fields".into()));
    }
    if ctx.p() < 5 {
        return Err(Error::WildRamification { p: ctx.p(), d: 4 });
    }
    let fiber = value_counts(ctx.p(), &residues(f))?;
    quartic_census_from_values(ctx, f, &fiber)
}

/// [`quartic_census`] given the fiber sizes `fiber[y]`.
pub(crate) fn quartic_census_from_values(ctx: &FieldCtx, f: &UniPoly, fiber: &[u8]) -> Result<CycleCensus> {
    let p = ctx.p();
    let disc = branch_discriminant(ctx, f)?;
    let disc_res = residues(&disc);
    let mut is_square = vec![false; p as usize];
    for x in 0..p {
        is_square[(x as u128 * x as u128 % p as u128) as usize] = true;
    }
    let mut is_special = vec![false; p as usize];
    for r in roots(ctx, &disc)? {
        is_special[r.constant_term() as usize] = true;
    }
    let mut tally = [0u64; 5];
    let mut special = 0u64;
    for y in 0..p {
        if is_special[y as usize] {
            special += 1;
            continue;
        }
        let slot = match fiber[y as usize] {
            4 => 0,
            2 => 1,
            1 => 2,
            0 if is_square[eval_mod(&disc_res, y, p) as usize] => 3,
            0 => 4,
            c => {
                return Err(Error::InternalInconsistency(format!(
                    "squarefree quartic with {c} roots"
                )))
            }
        };
        tally[slot] += 1;
    }
    let shapes = [vec![1, 1, 1, 1], vec![2, 1, 1], vec![3, 1], vec![2, 2], vec![4]];
    let counts = shapes
        .into_iter()
        .zip(tally)
        .filter(|&(_, n)| n > 0)
        .map(|(s, n)| (Partition::from_unsorted(s), n))
        .collect();
    Ok(CycleCensus {
        d: 4,
        q: p,
        counts,
        special,
    })
}

fn eval_mod(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs
        .iter()
        .rev()
        .fold(0u128, |acc, &c| (acc * x as u128 + c as u128) % p as u128) as u64
}

/// Chebotarev proportions for `S_d`: `|class| / d!` per cycle type.
pub fn shape_predictions(d: usize) -> Result<Vec<(Partition, f64)>> {
    if !(2..=MAX_CENSUS_DEGREE).contains(&d) {
        return Err(Error::UnsupportedDegree(d));
    }
    let order = factorial(d) as f64;
    Ok(partitions(d)?
        .into_iter()
        .map(|mu| {
            let share = mu.class_size() as f64 / order;
            (mu, share)
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    GenericConsistent,
    NonGeneric,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::GenericConsistent => "generic-consistent",
            Verdict::NonGeneric => "non-generic",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenericityVerdict {
    pub verdict: Verdict,
    /// `|observed - predicted|` per shape, observed among non-special values.
    pub deviations: Vec<(Partition, f64)>,
    pub tolerance: f64,
}

impl GenericityVerdict {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (shape, dev) in &self.deviations {
            out.push_str(&format!("{shape} deviation {dev:.6}\n"));
        }
        out.push_str(&format!("tolerance {:.6}\nverdict {}\n", self.tolerance, self.verdict));
        out
    }
}

/// `max(0.02, 5/sqrt q)`
pub fn tolerance(q: u64) -> f64 {
    (5.0 / (q as f64).sqrt()).max(0.02)
}

/// Compares shape frequencies with `S_d`: consistent if every deviation is
/// within `tau`, non-generic if any exceeds `3 tau`.
pub fn genericity_test(c: &CycleCensus, q: u64) -> Result<GenericityVerdict> {
    let predictions = shape_predictions(c.d)?;
    let tau = tolerance(q);
    let regular = q.saturating_sub(c.special);
    if regular == 0 {
        return Ok(GenericityVerdict {
            verdict: Verdict::Inconclusive,
            deviations: Vec::new(),
            tolerance: tau,
        });
    }
    let deviations: Vec<(Partition, f64)> = predictions
        .into_iter()
        .map(|(shape, share)| {
            let observed = c.count(&shape) as f64 / regular as f64;
            let dev = (observed - share).abs();
            (shape, dev)
        })
        .collect();
    let worst = deviations.iter().map(|(_, d)| *d).fold(0.0, f64::max);
    let verdict = if worst <= tau {
        Verdict::GenericConsistent
    } else if worst > 3.0 * tau {
        Verdict::NonGeneric
    } else {
        Verdict::Inconclusive
    };
    Ok(GenericityVerdict {
        verdict,
        deviations,
        tolerance: tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{make_extension, make_prime_field};
    use proptest::prelude::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn square_map_census() {
        let f = make_prime_field(7).unwrap();
        let c = cycle_type_census(&f, &UniPoly::from_ints(&f, &[0, 0, 1])).unwrap();
        assert_eq!(c.count(&part(&[1, 1])), 3);
        assert_eq!(c.count(&part(&[2])), 3);
        assert_eq!(c.special, 1);
    }

    #[test]
    fn cube_map_over_f5_is_not_s3() {
        // x^3 - y over F_5 always has exactly one root for y != 0
        let f = make_prime_field(5).unwrap();
        let c = cycle_type_census(&f, &UniPoly::from_ints(&f, &[0, 0, 0, 1])).unwrap();
        assert_eq!(c.special, 1);
        assert_eq!(c.count(&part(&[2, 1])), 4);
        assert_eq!(c.count(&part(&[1, 1, 1])), 0);
        assert_eq!(c.count(&part(&[3])), 0);
    }

    #[test]
    fn quartic_special_values() {
        let f = make_prime_field(1009).unwrap();
        let g = UniPoly::from_ints(&f, &[0, -1, 1, 0, 1]);
        let c = cycle_type_census(&f, &g).unwrap();
        let disc = branch_discriminant(&f, &g).unwrap();
        assert_eq!(c.special, roots(&f, &disc).unwrap().len() as u64);
        assert!(c.special <= 3);
        assert_eq!(c.counts.values().sum::<u64>() + c.special, 1009);
    }

    #[test]
    fn predictions_for_s4() {
        let pred = shape_predictions(4).unwrap();
        let share = |p: &[usize]| pred.iter().find(|(s, _)| s == &part(p)).unwrap().1;
        assert_eq!(share(&[1, 1, 1, 1]), 1.0 / 24.0);
        assert_eq!(share(&[2, 1, 1]), 6.0 / 24.0);
        assert_eq!(share(&[2, 2]), 3.0 / 24.0);
        assert_eq!(share(&[3, 1]), 8.0 / 24.0);
        assert_eq!(share(&[4]), 6.0 / 24.0);
        assert_eq!(shape_predictions(9), Err(Error::UnsupportedDegree(9)));
    }

    #[test]
    fn generic_quartic() {
        let f = make_prime_field(10007).unwrap();
        let g = UniPoly::from_ints(&f, &[0, -1, 1, 0, 1]);
        let c = quartic_census(&f, &g).unwrap();
        assert_eq!(c, cycle_type_census(&f, &g).unwrap());
        let v = genericity_test(&c, 10007).unwrap();
        assert_eq!(v.verdict, Verdict::GenericConsistent, "{}", v.render());
    }

    #[test]
    fn non_generic_quartics() {
        let f = make_prime_field(10007).unwrap();
        for coeffs in [[0, 0, 0, 0, 1], [0, 0, 1, 0, 1], [5, 0, -3, 0, 1]] {
            let g = UniPoly::from_ints(&f, &coeffs);
            let c = quartic_census(&f, &g).unwrap();
            let v = genericity_test(&c, 10007).unwrap();
            assert_eq!(v.verdict, Verdict::NonGeneric, "{coeffs:?}\n{}", v.render());
        }
    }

    #[test]
    fn census_over_extension() {
        let f = make_extension(5, 2, 0).unwrap();
        let c = cycle_type_census(&f, &UniPoly::from_ints(&f, &[0, 0, 1])).unwrap();
        assert_eq!(c.count(&part(&[1, 1])), 12);
        assert_eq!(c.count(&part(&[2])), 12);
        assert!(matches!(quartic_census(&f, &UniPoly::from_ints(&f, &[0, 0, 0, 0, 1])), Err(Error::Unsupported(_))));
    }

    #[test]
    fn census_limits() {
        let f = make_prime_field(1_000_003).unwrap();
        assert!(matches!(
            cycle_type_census(&f, &UniPoly::from_ints(&f, &[0, 0, 1])),
            Err(Error::TooLarge(_))
        ));
        let small = make_prime_field(11).unwrap();
        assert_eq!(
            cycle_type_census(&small, &UniPoly::from_ints(&small, &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1])),
            Err(Error::UnsupportedDegree(9))
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn fast_census_matches_factorization(
            pi in 0..6usize, c0 in 0i64..500, c1 in 0i64..500, c2 in 0i64..500, c3 in 0i64..500,
        ) {
            let p = [5u64, 7, 11, 13, 101, 211][pi];
            let f = make_prime_field(p).unwrap();
            let g = UniPoly::from_ints(&f, &[c0, c1, c2, c3, 1]);
            let fast = quartic_census(&f, &g).unwrap();
            let slow = cycle_type_census(&f, &g).unwrap();
            prop_assert_eq!(&fast, &slow);
            prop_assert_eq!(fast.counts.values().sum::<u64>() + fast.special, p);
            prop_assert!(fast.special <= 3);
        }
    }
}
