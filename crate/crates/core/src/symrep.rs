//! Partitions and the representation theory of `S_d` for `d <= 10`:
//! hook-length dimensions, Murnaghan–Nakayama characters, Kostka numbers
//! and the multiplicity of each irreducible in the permutation module on
//! ordered `r`-tuples of distinct letters.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 10;

/// A partition of `d`, parts weakly decreasing and positive.
///
/// Also used for cycle types of permutations and factorization shapes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of each part length, indexed by length.
    fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            mult[p] += 1;
        }
        mult
    }

    /// Size of the centralizer of a permutation with this cycle type.
    pub fn centralizer_order(&self) -> u128 {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &m)| (k as u128).pow(m as u32) * factorial(m))
            .product()
    }

    /// Number of permutations of `S_d` with this cycle type.
    pub fn class_size(&self) -> u128 {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Order of a permutation with this cycle type.
    pub fn order(&self) -> usize {
        self.0.iter().fold(1, |acc, &p| acc.lcm(&p))
    }

    /// Cycle type of `sigma^k`: an `l`-cycle splits into `gcd(l, k)` cycles of length `l / gcd(l, k)`.
    pub fn power(&self, k: usize) -> Partition {
        let mut parts = Vec::with_capacity(self.size());
        for &l in &self.0 {
            let g = l.gcd(&k);
            parts.extend(std::iter::repeat_n(l / g, g));
        }
        Partition::from_unsorted(parts)
    }

    /// `+1` for even permutations of this cycle type, `-1` for odd ones.
    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.0.iter().map(|&l| l - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn check_degree(d: usize, lo: usize) -> Result<()> {
    if d < lo || d > MAX_DEGREE {
        Err(Error::UnsupportedDegree(d))
    } else {
        Ok(())
    }
}

/// All partitions of `d` in reverse-lexicographic order, `(d)` first.
pub fn partitions(d: usize) -> Result<Vec<Partition>> {
    check_degree(d, 1)?;
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Dimension of the Specht module `S^mu`: `d! / prod(hook lengths)`.
pub fn hook_dimension(mu: &Partition) -> u64 {
    let conj = mu.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (factorial(mu.size()) / hooks) as u64
}

/// Number of semistandard tableaux of shape `mu` and content `weight`
/// (`weight[i]` copies of the letter `i + 1`).
///
/// Enumerated letter by letter: the cells holding letters `<= i` form a
/// subshape, and each letter adds a horizontal strip.
pub fn kostka(mu: &Partition, weight: &[usize]) -> u64 {
    if weight.iter().sum::<usize>() != mu.size() {
        return 0;
    }
    fn strips(shape: &[usize], outer: &[usize], letter: usize, weight: &[usize]) -> u64 {
        if letter == weight.len() {
            return u64::from(shape == outer);
        }
        let mut total = 0;
        let mut next = shape.to_vec();
        fill_row(shape, outer, 0, weight[letter], &mut next, &mut |s| {
            total += strips(s, outer, letter + 1, weight);
        });
        total
    }
    // place `left` cells of one letter as a horizontal strip, row by row
    fn fill_row(
        shape: &[usize],
        outer: &[usize],
        row: usize,
        left: usize,
        next: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if row == outer.len() {
            if left == 0 {
                visit(next);
            }
            return;
        }
        let cur = shape[row];
        // new cells in this row may not sit below an old cell of the row above
        let cap = if row == 0 { outer[0] } else { shape[row - 1].min(outer[row]) };
        let room = cap.saturating_sub(cur);
        for add in 0..=room.min(left) {
            next[row] = cur + add;
            fill_row(shape, outer, row + 1, left - add, next, visit);
        }
        next[row] = cur;
    }
    let outer = mu.parts();
    strips(&vec![0; outer.len()], outer, 0, weight)
}

/// Multiplicity of `S^mu` in the permutation module on ordered `r`-tuples of
/// distinct letters, i.e. the Kostka number for content `(d - r, 1^r)`.
pub fn kostka_hook(mu: &Partition, r: usize) -> u64 {
    let d = mu.size();
    if r > d {
        return 0;
    }
    let mut weight = Vec::with_capacity(r + 1);
    if d > r {
        weight.push(d - r);
    }
    weight.extend(std::iter::repeat_n(1, r));
    kostka(mu, &weight)
}

/// Character value `chi_mu(sigma)` for `sigma` of the given cycle type, by
/// the Murnaghan–Nakayama rule.
pub fn mn_character(mu: &Partition, cycle_type: &Partition) -> Result<i64> {
    if mu.size() != cycle_type.size() {
        return Err(Error::InvalidInput(format!(
            "{mu} and {cycle_type} are partitions of different integers"
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn_ordered(mu.parts(), cycle_type.parts(), &mut memo))
}

/// Removes border strips of lengths `lengths[0], lengths[1], ...` in that order.
fn mn_ordered(
    shape: &[usize],
    lengths: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    let Some((&k, rest)) = lengths.split_first() else {
        return i64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), lengths.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // beta-set: first-column hook lengths
    let n = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &l)| l + n - 1 - i).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&g| g > target && g < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &g)| g - (n - 1 - i))
            .filter(|&l| l > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_ordered(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// One irreducible representation of `S_d` and its data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReprRow {
    pub partition: Partition,
    pub dim: u64,
    /// `mult[r - 2]` is the multiplicity in the `r`-tuple module, `r = 2..=d`.
    pub mult: Vec<u64>,
    /// Character values over `ReprTable::classes`.
    pub character: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReprTable {
    pub d: usize,
    /// Conjugacy classes as cycle types, same order as the rows.
    pub classes: Vec<Partition>,
    pub rows: Vec<ReprRow>,
}

impl ReprTable {
    pub fn row(&self, mu: &Partition) -> Option<&ReprRow> {
        self.rows.iter().find(|r| &r.partition == mu)
    }

    /// Multiplicity of `mu` in the `r`-tuple module.
    pub fn multiplicity(&self, mu: &Partition, r: usize) -> Option<u64> {
        self.row(mu).and_then(|row| row.mult.get(r.checked_sub(2)?).copied())
    }

    pub fn render(&self) -> String {
        let mut out = format!("S_{} representations ({} classes)\n", self.d, self.classes.len());
        out.push_str(&format!("{:<22} {:>6}  {:<24} chi\n", "partition", "dim", "m_r (r=2..d)"));
        for row in &self.rows {
            let mult: Vec<String> = row.mult.iter().map(u64::to_string).collect();
            let chi: Vec<String> = row.character.iter().map(i64::to_string).collect();
            out.push_str(&format!(
                "{:<22} {:>6}  {:<24} {}\n",
                row.partition.to_string(),
                row.dim,
                mult.join(" "),
                chi.join(" ")
            ));
        }
        out.push_str("classes:");
        for c in &self.classes {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
        out
    }
}

/// Dimensions, multiplicities and characters of every irreducible of `S_d`.
pub fn repr_table(d: usize) -> Result<ReprTable> {
    check_degree(d, 2)?;
    let classes = partitions(d)?;
    let rows = classes
        .iter()
        .map(|mu| {
            Ok(ReprRow {
                partition: mu.clone(),
                dim: hook_dimension(mu),
                mult: (2..=d).map(|r| kostka_hook(mu, r)).collect(),
                character: classes
                    .iter()
                    .map(|c| mn_character(mu, c))
                    .collect::<Result<_>>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let table = ReprTable { d, classes, rows };
    verify(&table)?;
    Ok(table)
}

fn verify(t: &ReprTable) -> Result<()> {
    let fact = factorial(t.d);
    let bad = |msg: String| Err(Error::InternalInconsistency(msg));
    let sum_sq: u128 = t.rows.iter().map(|r| (r.dim as u128).pow(2)).sum();
    if sum_sq != fact {
        return bad(format!("sum of squared dimensions {sum_sq} != {fact}"));
    }
    for row in &t.rows {
        let dim = row.dim;
        let top_differs = row.mult[t.d - 2] != dim || (t.d > 2 && row.mult[t.d - 3] != dim);
        if top_differs {
            return bad(format!("{}: top multiplicities differ from dimension", row.partition));
        }
        if row.character[t.classes.len() - 1] != dim as i64 {
            return bad(format!("{}: character at identity != dimension", row.partition));
        }
    }
    for r in 2..=t.d {
        let total: u128 = t.rows.iter().map(|row| (row.mult[r - 2] * row.dim) as u128).sum();
        let expect = fact / factorial(t.d - r);
        if total != expect {
            return bad(format!("r = {r}: module dimension {total} != {expect}"));
        }
    }
    Ok(())
}
