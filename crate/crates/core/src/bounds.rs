//! Exact assembly of the bound constants: `mu_d`, the leading `sqrt(q)`
//! coefficient summed over irreducible representations, the additive error
//! constants, the quartic error ledger and the quartic pass/fail verdict.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::artin::LDegreeTable;
use crate::error::{Error, Result};
use crate::symrep::{factorial, Partition, ReprTable};

/// Reduced fraction with a positive denominator.
pub type Rational = num_rational::Ratio<i128>;

pub fn rat(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// `mu_d = sum_{r=1}^{d} (-1)^(r-1) / r!`.
pub fn mu(d: usize) -> Result<Rational> {
    if !(1..=12).contains(&d) {
        return Err(Error::UnsupportedDegree(d));
    }
    Ok((1..=d).fold(Rational::zero(), |acc, r| {
        let term = rat(1, factorial(r) as i128);
        if r % 2 == 1 {
            acc + term
        } else {
            acc - term
        }
    }))
}

/// `sum_{r=2}^{d} (-1)^r m_r / r!` for one representation, `mult[r - 2] = m_r`.
pub fn alternating_sum(mult: &[u64]) -> Rational {
    mult.iter().enumerate().fold(Rational::zero(), |acc, (i, &m)| {
        let r = i + 2;
        let term = rat(m as i128, factorial(r) as i128);
        if r % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoContribution {
    pub partition: Partition,
    pub dim: u64,
    pub alt_sum: Rational,
    pub l_degree: u64,
    pub contribution: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub d: usize,
    pub mu_d: Rational,
    /// Coefficient of `sqrt(q)`.
    pub leading: Rational,
    /// Additive constant: the quartic ledger for `d = 4`, otherwise
    /// `3/2 d (e^d - d - 1)` rounded up.
    pub additive: Rational,
    pub per_rho: Vec<RhoContribution>,
}

impl BoundReport {
    pub fn render(&self) -> String {
        let mut out = format!("{:<22} {:>5} {:>14} {:>6} {:>14}\n", "partition", "dim", "alt-sum", "deg L", "contribution");
        for c in &self.per_rho {
            out.push_str(&format!(
                "{:<22} {:>5} {:>14} {:>6} {:>14}\n",
                c.partition.to_string(),
                c.dim,
                c.alt_sum.to_string(),
                c.l_degree,
                c.contribution.to_string()
            ));
        }
        out.push_str(&format!("mu_{} = {}\n", self.d, self.mu_d));
        out.push_str(&format!("leading = {}, additive = {}\n", self.leading, self.additive));
        out
    }
}

/// Leading coefficient `sum_rho |alt_sum_rho| * deg L(rho)`, with the
/// per-representation breakdown.
pub fn theorem_constant(table: &ReprTable, degs: &LDegreeTable) -> Result<BoundReport> {
    if table.d != degs.d {
        return Err(Error::IndexMismatch(format!(
            "table for S_{} with degrees for S_{}",
            table.d, degs.d
        )));
    }
    if table.rows.len() != degs.degrees.len() {
        return Err(Error::IndexMismatch("partition sets differ".into()));
    }
    let mut per_rho = Vec::with_capacity(table.rows.len());
    let mut leading = Rational::zero();
    for row in &table.rows {
        let l_degree = degs.degree(&row.partition).ok_or_else(|| {
            Error::IndexMismatch(format!("no L-degree for {}", row.partition))
        })?;
        let alt_sum = alternating_sum(&row.mult);
        let contribution = alt_sum.abs() * Rational::from_integer(l_degree as i128);
        leading += contribution;
        per_rho.push(RhoContribution {
            partition: row.partition.clone(),
            dim: row.dim,
            alt_sum,
            l_degree,
            contribution,
        });
    }
    let additive = if table.d == 4 {
        quartic_ledger().total
    } else {
        let c = c_of_d(table.d, CVariant::Theorem)?;
        Rational::from_integer(c.ceil() as i128)
    };
    Ok(BoundReport {
        d: table.d,
        mu_d: mu(table.d)?,
        leading,
        additive,
        per_rho,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CVariant {
    /// `d/2 (e^d - d - 1)`: hyperplane intersections.
    Hyperplane,
    /// `d (e^d - d - 1)`: singularities and points at infinity.
    Singular,
    /// `3/2 d (e^d - d - 1)`: both combined.
    Theorem,
}

/// The coarse additive constants; `e^d` in double precision.
pub fn c_of_d(d: usize, variant: CVariant) -> Result<f64> {
    if d > 12 {
        return Err(Error::UnsupportedDegree(d));
    }
    let df = d as f64;
    let base = df * (df.exp() - df - 1.0);
    Ok(match variant {
        CVariant::Hyperplane => base / 2.0,
        CVariant::Singular => base,
        CVariant::Theorem => 1.5 * base,
    })
}

/// The two pieces of the quartic additive constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuarticLedger {
    /// Points at infinity: `3/2! - 6/3! + 6/4!`.
    pub infinity: Rational,
    /// Worst case of `|a1/2! - a2/3! + a3/4!|` over the diagonal point counts.
    pub hyperplane: Rational,
    pub total: Rational,
}

pub fn quartic_ledger() -> QuarticLedger {
    let f = |r: usize| Rational::from_integer(factorial(r) as i128);
    let int = |v: i128| Rational::from_integer(v);
    // 3 points at infinity on T_2 over the closure, 6 on T_3 and T_4
    let infinity = int(3) / f(2) - int(6) / f(3) + int(6) / f(4);
    // 0 <= a1 <= 3, 0 <= a2 <= 3 * 6, 0 <= a3 <= 6 * 6; the extremes are at corners
    let (a1, a2, a3) = (3, 18, 36);
    let mut hyperplane = Rational::zero();
    for (x, y, z) in [(0, 0, 0), (a1, 0, 0), (0, a2, 0), (0, 0, a3), (a1, 0, a3), (a1, a2, 0), (0, a2, a3), (a1, a2, a3)] {
        let v = (int(x) / f(2) - int(y) / f(3) + int(z) / f(4)).abs();
        if v > hyperplane {
            hyperplane = v;
        }
    }
    QuarticLedger {
        infinity,
        hyperplane,
        total: infinity + hyperplane,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuarticVerdict {
    pub pass: bool,
    /// `(sqrt(q)/2 + 15/4) - |n_f - 5q/8|`, for display only.
    pub margin: f64,
}

impl fmt::Display for QuarticVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (margin {:.6})",
            if self.pass { "pass" } else { "fail" },
            self.margin
        )
    }
}

fn is_power_of(mut q: u64, base: u64) -> bool {
    while q > 1 && q.is_multiple_of(base) {
        q /= base;
    }
    q == 1
}

/// Decides `|n_f - 5q/8| <= sqrt(q)/2 + 15/4` in exact integer arithmetic.
///
/// Scaled by 8 this is `|8 n_f - 5q| - 30 <= 4 sqrt(q)`; when the left side
/// is positive both sides are squared.
pub fn quartic_verdict(q: u64, n_f: u64) -> Result<QuarticVerdict> {
    if q < 5 || is_power_of(q, 2) || is_power_of(q, 3) {
        return Err(Error::BadField(q));
    }
    let lhs = (8 * n_f as i128 - 5 * q as i128).abs() - 30;
    let pass = lhs <= 0 || lhs * lhs <= 16 * q as i128;
    let margin = (q as f64).sqrt() / 2.0 + 3.75 - (n_f as f64 - 5.0 * q as f64 / 8.0).abs();
    Ok(QuarticVerdict { pass, margin })
}
