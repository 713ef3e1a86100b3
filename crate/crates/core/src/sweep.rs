//! The prime sweep: `N_f` for `x^4 + ax^2 + bx` over every `F_p` up to a bound.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;

use crate::artin::family_polynomial;
use crate::bounds::quartic_verdict;
use crate::error::{Error, Result};
use crate::ffield::make_prime_field;
use crate::valueset::{genericity_test, quartic_census_from_values, value_counts, Verdict};

pub const MAX_PMAX: u64 = 1_000_000;
pub const HISTOGRAM_BINS: usize = 40;
pub const HISTOGRAM_RANGE: f64 = 1.5;
pub const CSV_HEADER: &str = "p,q,a,b,N_f,d_f,bound_ok,generic,special";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenericFlag {
    Yes,
    No,
    Inconclusive,
}

impl From<Verdict> for GenericFlag {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::GenericConsistent => GenericFlag::Yes,
            Verdict::NonGeneric => GenericFlag::No,
            Verdict::Inconclusive => GenericFlag::Inconclusive,
        }
    }
}

impl fmt::Display for GenericFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenericFlag::Yes => "yes",
            GenericFlag::No => "no",
            GenericFlag::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub p: u64,
    pub q: u64,
    pub a: u64,
    pub b: u64,
    pub n_f: u64,
    pub d_f: f64,
    pub bound_ok: bool,
    pub generic: GenericFlag,
    pub special: u64,
}

impl SweepRecord {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{:.6},{},{},{}",
            self.p, self.q, self.a, self.b, self.n_f, self.d_f, self.bound_ok, self.generic, self.special
        )
    }
}

/// Primes up to `n` by the sieve of Eratosthenes.
pub fn sieve(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        for j in (i * i..=n).step_by(i) {
            composite[j] = true;
        }
    }
    out
}

/// One row of the sweep.
pub fn sweep_record(p: u64, a: i64, b: i64) -> Result<SweepRecord> {
    let ctx = make_prime_field(p)?;
    let (ea, eb) = (ctx.from_i64(a), ctx.from_i64(b));
    if eb.is_zero() {
        return Err(Error::ZeroB);
    }
    let f = family_polynomial(&ctx, 4, &ea, &eb)?;
    let fiber = value_counts(p, &[0, eb.constant_term(), ea.constant_term(), 0, 1])?;
    let n_f = fiber.iter().filter(|&&c| c > 0).count() as u64;
    let census = quartic_census_from_values(&ctx, &f, &fiber)?;
    let verdict = genericity_test(&census, p)?;
    Ok(SweepRecord {
        p,
        q: p,
        a: ea.constant_term(),
        b: eb.constant_term(),
        n_f,
        d_f: (n_f as f64 - 5.0 * p as f64 / 8.0) / (p as f64).sqrt(),
        bound_ok: quartic_verdict(p, n_f)?.pass,
        generic: verdict.verdict.into(),
        special: census.special,
    })
}

/// Primes in `[5, pmax]` at which the family is defined: `p` odd, not 3, and `b != 0 mod p`.
pub fn sweep_primes(b: i64, pmax: u64) -> Vec<u64> {
    sieve(pmax)
        .into_iter()
        .filter(|&p| p >= 5 && b.rem_euclid(p as i64) != 0)
        .collect()
}

/// Runs the sweep on `jobs` worker threads; rows come back in ascending `p`.
pub fn run_sweep(a: i64, b: i64, pmax: u64, jobs: usize) -> Result<Vec<SweepRecord>> {
    if pmax > MAX_PMAX {
        return Err(Error::TooLarge(format!("pmax = {pmax} exceeds {MAX_PMAX}")));
    }
    let primes = sweep_primes(b, pmax);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    pool.install(|| primes.par_iter().map(|&p| sweep_record(p, a, b)).collect())
}

pub fn write_csv<W: Write>(out: &mut W, rows: &[SweepRecord]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_line())?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub rows: usize,
    pub max_abs_d_f: f64,
    /// Rows with `generic = yes` that fail the quartic bound.
    pub generic_failures: usize,
    pub histogram: Vec<u64>,
    /// Rows with `|d_f|` beyond the histogram range.
    pub outside: u64,
}

pub fn summarize(rows: &[SweepRecord]) -> SweepSummary {
    let width = 2.0 * HISTOGRAM_RANGE / HISTOGRAM_BINS as f64;
    let mut histogram = vec![0u64; HISTOGRAM_BINS];
    let mut outside = 0;
    for row in rows {
        let pos = (row.d_f + HISTOGRAM_RANGE) / width;
        if pos < 0.0 || pos >= HISTOGRAM_BINS as f64 {
            outside += 1;
        } else {
            histogram[pos as usize] += 1;
        }
    }
    SweepSummary {
        rows: rows.len(),
        max_abs_d_f: rows.iter().map(|r| r.d_f.abs()).fold(0.0, f64::max),
        generic_failures: rows
            .iter()
            .filter(|r| r.generic == GenericFlag::Yes && !r.bound_ok)
            .count(),
        histogram,
        outside,
    }
}

impl SweepSummary {
    pub fn render(&self) -> String {
        let width = 2.0 * HISTOGRAM_RANGE / HISTOGRAM_BINS as f64;
        let peak = self.histogram.iter().copied().max().unwrap_or(0).max(1);
        let mut out = format!(
            "rows {}\nmax |d_f| {:.6}\ngeneric bound failures {}\n",
            self.rows, self.max_abs_d_f, self.generic_failures
        );
        for (i, &n) in self.histogram.iter().enumerate() {
            let lo = -HISTOGRAM_RANGE + i as f64 * width;
            let bar = "#".repeat((n * 50).div_ceil(peak) as usize);
            out.push_str(&format!("[{:+.3}, {:+.3}) {:>7} {}\n", lo, lo + width, n, bar));
        }
        out.push_str(&format!("outside range {}\n", self.outside));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::UniPoly;
    use crate::valueset::{preimage_spectrum, quartic_census};

    #[test]
    fn sieve_small() {
        assert_eq!(sieve(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(sieve(1).is_empty());
    }

    #[test]
    fn sweep_to_100_has_23_rows() {
        let rows = run_sweep(1, -1, 100, 2).unwrap();
        assert_eq!(rows.len(), 23);
        assert_eq!(rows[0].p, 5);
        assert_eq!(rows[22].p, 97);
        assert!(rows.windows(2).all(|w| w[0].p < w[1].p));
    }

    #[test]
    fn record_matches_independent_pipeline() {
        for p in [5u64, 101, 1009] {
            let r = sweep_record(p, 1, -1).unwrap();
            let ctx = make_prime_field(p).unwrap();
            let f = UniPoly::from_ints(&ctx, &[0, -1, 1, 0, 1]);
            let s = preimage_spectrum(&ctx, &f).unwrap();
            assert_eq!(r.n_f, s.n_f);
            assert_eq!(r.special, quartic_census(&ctx, &f).unwrap().special);
        }
        let r = sweep_record(5, 1, -1).unwrap();
        assert_eq!(r.csv_line(), "5,5,1,4,4,0.391312,true,yes,2");
    }

    #[test]
    fn zero_b_primes_skipped() {
        let primes = sweep_primes(35, 50);
        assert!(!primes.contains(&5) && !primes.contains(&7));
        assert!(primes.contains(&11));
        assert_eq!(sweep_record(7, 1, 14), Err(Error::ZeroB));
    }

    #[test]
    fn csv_is_independent_of_jobs() {
        let render = |jobs| {
            let mut buf = Vec::new();
            write_csv(&mut buf, &run_sweep(2, 3, 400, jobs).unwrap()).unwrap();
            buf
        };
        assert_eq!(render(1), render(3));
    }

    #[test]
    fn histogram_bins() {
        let rows = run_sweep(1, -1, 2000, 1).unwrap();
        let s = summarize(&rows);
        assert_eq!(s.histogram.iter().sum::<u64>() + s.outside, rows.len() as u64);
        assert_eq!(s.generic_failures, 0);
        assert!(s.render().lines().count() > HISTOGRAM_BINS);
    }
}
