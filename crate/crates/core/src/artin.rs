//! Ramification of `f(x) - t` over `F_q(t)` and the degrees of the tame
//! Artin L-functions of the geometric monodromy representations.
//!
//! For a representation `V` of `S_d`, tamely ramified everywhere over a
//! genus-0 base, the L-function is a polynomial of degree
//!
//! ```text
//! deg L(V) = -2 dim V + sum_P deg P * (dim V - dim V^{I_P})
//! ```
//!
//! where `P` runs over the ramified places including infinity. Inertia is
//! cyclic in the tame case, generated by an element whose cycle type is
//! read from the root multiplicities of `f(x) - t0` at a critical value
//! `t0` (and is a `d`-cycle at infinity).

use crate::error::{Error, Result};
use crate::ffield::{
    cycle_type_of_profile, distinct_degree_parts, equal_degree_split, multiplicity_profile,
    FieldCtx, FieldElem, UniPoly,
};
use crate::symrep::{hook_dimension, mn_character, partitions, repr_table, Partition};

/// A finite ramified place of `F_q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Place {
    /// Monic irreducible polynomial in `t` defining the place.
    pub polynomial: UniPoly,
    pub degree: usize,
    pub inertia: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationProfile {
    pub d: usize,
    pub finite_places: Vec<Place>,
    pub infinity: Partition,
    /// `disc_x(f(x) - t)` as a polynomial in `t`.
    pub disc: UniPoly,
    pub disc_degree: usize,
    /// Every finite branch point has inertia type `(2,1,...,1)`; equivalently
    /// the discriminant is squarefree.
    pub simple_branching: bool,
}

impl RamificationProfile {
    /// `sum_P deg P * sum_i (e_i - 1)` over all ramified places.
    pub fn total_different(&self) -> usize {
        let local = |inertia: &Partition| inertia.parts().iter().map(|e| e - 1).sum::<usize>();
        self.finite_places
            .iter()
            .map(|pl| pl.degree * local(&pl.inertia))
            .sum::<usize>()
            + local(&self.infinity)
    }

    pub fn render(&self, ctx: &FieldCtx) -> String {
        let mut out = format!(
            "disc_t = {} (degree {}), simple branching: {}\n",
            self.disc.render(ctx),
            self.disc_degree,
            if self.simple_branching { "yes" } else { "no" }
        );
        for pl in &self.finite_places {
            out.push_str(&format!(
                "place {} (degree {}): inertia {}\n",
                pl.polynomial.render(ctx),
                pl.degree,
                pl.inertia
            ));
        }
        out.push_str(&format!("place infinity: inertia {}\n", self.infinity));
        out
    }
}

/// `disc_x(f(x) - t)` as a polynomial in `t`, by interpolation through
/// `d` values of `t`. Needs `q >= d`.
pub fn branch_discriminant(ctx: &FieldCtx, f: &UniPoly) -> Result<UniPoly> {
    let d = f.degree().filter(|&d| d >= 1).ok_or(Error::ConstantPolynomial)?;
    if (ctx.q() as u128) < d as u128 {
        return Err(Error::BadField(ctx.q()));
    }
    let ts: Vec<FieldElem> = (0..d as u64).map(|i| ctx.from_index(i)).collect();
    let values = ts
        .iter()
        .map(|t| f.sub(ctx, &UniPoly::constant(*t)).discriminant(ctx))
        .collect::<Result<Vec<_>>>()?;
    UniPoly::interpolate(ctx, &ts, &values)
}

/// The family used for degree `d`: `x^2 + bx`, `x^3 + ax + b`, and
/// `x^d + ax^2 + bx` for `d >= 4` (the depressed quartic when `d = 4`).
pub fn family_polynomial(ctx: &FieldCtx, d: usize, a: &FieldElem, b: &FieldElem) -> Result<UniPoly> {
    let mut c = vec![ctx.zero(); d + 1];
    c[d] = ctx.one();
    match d {
        2 => c[1] = *b,
        3 => {
            c[1] = *a;
            c[0] = *b;
        }
        4..=10 => {
            c[2] = *a;
            c[1] = *b;
        }
        _ => return Err(Error::UnsupportedDegree(d)),
    }
    Ok(UniPoly::new(c))
}

/// Ramification data of `f(x) - t` for a monic `f` over a prime field with `p > deg f`.
pub fn ramification_profile_of(ctx: &FieldCtx, f: &UniPoly) -> Result<RamificationProfile> {
    let d = f.degree().filter(|&d| d >= 2).ok_or(Error::ConstantPolynomial)?;
    if ctx.p() <= d as u64 {
        return Err(Error::WildRamification { p: ctx.p(), d });
    }
    if !ctx.is_prime_field() {
        return Err(Error::Unsupported("ramification over non-prime fields".into()));
    }
    if !f.is_monic(ctx) {
        return Err(Error::InvalidInput("f must be monic".into()));
    }
    let disc = branch_discriminant(ctx, f)?;
    let disc_degree = disc
        .degree()
        .ok_or_else(|| Error::InternalInconsistency("vanishing discriminant".into()))?;
    let repeated = disc.gcd(ctx, &disc.derivative(ctx));
    let simple_branching = repeated.degree() == Some(0);
    let radical = disc.div_exact(ctx, &repeated)?;

    let mut finite_places = Vec::new();
    for (k, part) in distinct_degree_parts(ctx, &radical)? {
        for h in equal_degree_split(ctx, &part, k)? {
            let inertia = inertia_at(ctx, f, &h)?;
            finite_places.push(Place {
                polynomial: h,
                degree: k,
                inertia,
            });
        }
    }
    let prof = RamificationProfile {
        d,
        finite_places,
        infinity: Partition::new(vec![d])?,
        disc,
        disc_degree,
        simple_branching,
    };
    if prof.total_different() != 2 * d - 2 {
        return Err(Error::InternalInconsistency(format!(
            "Riemann-Hurwitz: total different {} != {}",
            prof.total_different(),
            2 * d - 2
        )));
    }
    Ok(prof)
}

/// Inertia cycle type at the place `h(t) = 0`: multiplicities of the roots
/// of `f(x) - t0` over the residue field `F_p[t]/(h)`, `t0` the class of `t`.
fn inertia_at(ctx: &FieldCtx, f: &UniPoly, h: &UniPoly) -> Result<Partition> {
    let residues: Vec<u64> = h.coeffs().iter().map(|c| c.constant_term()).collect();
    let residue = FieldCtx::from_modulus(ctx.p(), &residues)?;
    let t0 = residue.generator();
    let lifted = f.map_coeffs(|c| residue.from_u64(c.constant_term()));
    let g = lifted.sub(&residue, &UniPoly::constant(t0));
    let profile = multiplicity_profile(&residue, &g)?;
    Ok(Partition::from_unsorted(cycle_type_of_profile(&profile)))
}

/// Profile for the depressed quartic `x^4 + ax^2 + bx`.
pub fn ramification_profile(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem) -> Result<RamificationProfile> {
    if ctx.p() <= 3 {
        return Err(Error::WildRamification { p: ctx.p(), d: 4 });
    }
    if b.is_zero() {
        return Err(Error::ZeroB);
    }
    ramification_profile_of(ctx, &family_polynomial(ctx, 4, a, b)?)
}

/// `dim V_mu^I` for `I` cyclic, generated by a permutation of cycle type `sigma`.
pub fn fixed_dim(mu: &Partition, sigma: &Partition) -> Result<u64> {
    let order = sigma.order();
    let mut total = 0i64;
    for k in 0..order {
        total += mn_character(mu, &sigma.power(k))?;
    }
    if total < 0 || total % order as i64 != 0 {
        return Err(Error::InternalInconsistency(format!(
            "average of chi_{mu} over <{sigma}> is {total}/{order}"
        )));
    }
    Ok((total / order as i64) as u64)
}

/// Degree of `L(V_mu, s)` in `u = q^-s` for a tame profile.
///
/// The trivial representation gives the zeta function of the line, whose
/// numerator is 1; its degree is reported as 0.
pub fn tame_l_degree(mu: &Partition, prof: &RamificationProfile) -> Result<u64> {
    if mu.size() != prof.d {
        return Err(Error::IndexMismatch(format!("{mu} is not a partition of {}", prof.d)));
    }
    if mu.len() == 1 {
        return Ok(0);
    }
    let dim = hook_dimension(mu) as i64;
    let conductor = |inertia: &Partition| -> Result<i64> { Ok(dim - fixed_dim(mu, inertia)? as i64) };
    let mut deg = -2 * dim + conductor(&prof.infinity)?;
    for place in &prof.finite_places {
        deg += place.degree as i64 * conductor(&place.inertia)?;
    }
    if deg < 0 {
        return Err(Error::InternalInconsistency(format!("negative L-degree {deg} for {mu}")));
    }
    Ok(deg as u64)
}

/// L-degrees of every irreducible representation of `S_d`, in partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LDegreeTable {
    pub d: usize,
    pub degrees: Vec<(Partition, u64)>,
}

impl LDegreeTable {
    pub fn degree(&self, mu: &Partition) -> Option<u64> {
        self.degrees.iter().find(|(p, _)| p == mu).map(|(_, d)| *d)
    }

    pub fn render(&self) -> String {
        let mut out = format!("{:<22} {:>5} {:>6}\n", "partition", "dim", "deg L");
        for (mu, deg) in &self.degrees {
            out.push_str(&format!("{:<22} {:>5} {:>6}\n", mu.to_string(), hook_dimension(mu), deg));
        }
        out
    }
}

pub fn l_degree_table_of(prof: &RamificationProfile) -> Result<LDegreeTable> {
    let degrees = partitions(prof.d)?
        .into_iter()
        .map(|mu| {
            let deg = tame_l_degree(&mu, prof)?;
            Ok((mu, deg))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LDegreeTable { d: prof.d, degrees })
}

/// `sum_{rho != triv} m_{rho,r} deg L(rho)`: twice the genus of the
/// `r`-tuple curve.
pub fn weighted_degree_sum(degs: &LDegreeTable, r: usize) -> Result<u64> {
    let table = repr_table(degs.d)?;
    let mut total = 0;
    for (mu, deg) in &degs.degrees {
        let m = table
            .multiplicity(mu, r)
            .ok_or_else(|| Error::IndexMismatch(format!("no multiplicity for {mu}, r = {r}")))?;
        total += m * deg;
    }
    Ok(total)
}

/// L-degree table for the depressed quartic, checked against the genera of
/// the pair curve (genus 1) and the triple curve (genus 4).
pub fn l_degree_table(ctx: &FieldCtx, a: &FieldElem, b: &FieldElem) -> Result<LDegreeTable> {
    let prof = ramification_profile(ctx, a, b)?;
    let degs = l_degree_table_of(&prof)?;
    let pairs = weighted_degree_sum(&degs, 2)?;
    let triples = weighted_degree_sum(&degs, 3)?;
    if pairs != 2 || triples != 8 {
        return Err(Error::CrossCheckFailed(format!(
            "weighted degree sums {pairs} (expected 2) and {triples} (expected 8)"
        )));
    }
    Ok(degs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{make_prime_field, roots};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn quartic(ctx: &FieldCtx, a: i64, b: i64) -> (FieldElem, FieldElem) {
        (ctx.from_i64(a), ctx.from_i64(b))
    }

    /// Independent route: `disc(f - t)` evaluated directly at every `t`.
    #[test]
    fn discriminant_interpolation_matches_pointwise() {
        let f = make_prime_field(101).unwrap();
        let g = UniPoly::from_ints(&f, &[0, -1, 1, 0, 1]);
        let disc = branch_discriminant(&f, &g).unwrap();
        assert_eq!(disc.degree(), Some(3));
        for t in f.elements() {
            let direct = g.sub(&f, &UniPoly::constant(t)).discriminant(&f).unwrap();
            assert_eq!(disc.eval(&f, &t), direct);
        }
    }

    #[test]
    fn fixed_dimensions() {
        assert_eq!(fixed_dim(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(), 2);
        assert_eq!(fixed_dim(&p(&[1, 1, 1, 1]), &p(&[2, 1, 1])).unwrap(), 0);
        assert_eq!(fixed_dim(&p(&[1, 1, 1, 1]), &p(&[4])).unwrap(), 0);
        assert_eq!(fixed_dim(&p(&[2, 2]), &p(&[4])).unwrap(), 1);
        for d in 2..=7 {
            for mu in partitions(d).unwrap() {
                let id = Partition::new(vec![1; d]).unwrap();
                assert_eq!(fixed_dim(&mu, &id).unwrap(), hook_dimension(&mu));
                for sigma in partitions(d).unwrap() {
                    assert_eq!(fixed_dim(&p(&[d]), &sigma).unwrap(), 1);
                    assert!(fixed_dim(&mu, &sigma).unwrap() <= hook_dimension(&mu));
                }
            }
        }
    }

    #[test]
    fn singular_parameters_at_p5() {
        // 27 b^2 + 8 a^3 = 35 vanishes mod 5: two critical points merge
        let f = make_prime_field(5).unwrap();
        let (a, b) = quartic(&f, 1, -1);
        let prof = ramification_profile(&f, &a, &b).unwrap();
        assert!(!prof.simple_branching);
        assert_eq!(prof.total_different(), 6);
        assert!(prof.finite_places.iter().any(|pl| pl.inertia == p(&[3, 1])));
        assert!(matches!(l_degree_table(&f, &a, &b), Err(Error::CrossCheckFailed(_))));
    }

    #[test]
    fn quartic_profile_generic() {
        let f = make_prime_field(10007).unwrap();
        let (a, b) = quartic(&f, 1, -1);
        let prof = ramification_profile(&f, &a, &b).unwrap();
        assert!(prof.simple_branching);
        assert_eq!(prof.disc_degree, 3);
        assert_eq!(prof.finite_places.iter().map(|pl| pl.degree).sum::<usize>(), 3);
        for pl in &prof.finite_places {
            assert_eq!(pl.inertia, p(&[2, 1, 1]));
        }
        assert_eq!(prof.infinity, p(&[4]));
        assert_eq!(prof.total_different(), 6);
        let degs = l_degree_table(&f, &a, &b).unwrap();
        let got: Vec<u64> = degs.degrees.iter().map(|(_, d)| *d).collect();
        // (4),(3,1),(2,2),(2,1,1),(1^4)
        assert_eq!(got, vec![0, 0, 0, 2, 2]);
    }

    #[test]
    fn singular_locus_is_exactly_where_branching_degenerates() {
        // over F_101, 27 b^2 + 8 a^3 = 0 forces a triple point of f - t0
        let f = make_prime_field(101).unwrap();
        let mut found = 0;
        for a in 1..101i64 {
            for b in 1..101i64 {
                if (27 * b * b + 8 * a * a * a).rem_euclid(101) != 0 {
                    continue;
                }
                let (ea, eb) = quartic(&f, a, b);
                let prof = ramification_profile(&f, &ea, &eb).unwrap();
                assert!(!prof.simple_branching);
                assert!(prof.finite_places.iter().any(|pl| pl.inertia == p(&[3, 1])));
                found += 1;
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn zero_b_and_small_characteristic() {
        let f = make_prime_field(7).unwrap();
        let (a, _) = quartic(&f, 1, 0);
        assert_eq!(ramification_profile(&f, &a, &f.zero()), Err(Error::ZeroB));
        let f3 = make_prime_field(3).unwrap();
        assert!(matches!(
            ramification_profile(&f3, &f3.one(), &f3.one()),
            Err(Error::WildRamification { .. })
        ));
    }

    #[test]
    fn irreducible_discriminant_place() {
        // hunt for a parameter pair whose discriminant is irreducible over F_101:
        // one place of degree 3 with residue field F_101^3
        let f = make_prime_field(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut seen_cubic = false;
        for _ in 0..200 {
            let (a, b) = quartic(&f, rng.gen_range(0..101), rng.gen_range(1..101));
            let prof = ramification_profile(&f, &a, &b).unwrap();
            if prof.simple_branching && prof.finite_places.len() == 1 {
                assert_eq!(prof.finite_places[0].degree, 3);
                assert_eq!(prof.finite_places[0].inertia, p(&[2, 1, 1]));
                seen_cubic = true;
            }
        }
        assert!(seen_cubic);
    }

    #[test]
    fn sign_degree_is_two_across_generic_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut tested = 0;
        for &prime in &[7u64, 11, 13, 101, 1009] {
            let f = make_prime_field(prime).unwrap();
            for _ in 0..40 {
                let (a, b) = quartic(&f, rng.gen_range(0..prime as i64), rng.gen_range(1..prime as i64));
                let prof = ramification_profile(&f, &a, &b).unwrap();
                if !prof.simple_branching {
                    continue;
                }
                assert_eq!(tame_l_degree(&p(&[1, 1, 1, 1]), &prof).unwrap(), 2);
                assert_eq!(tame_l_degree(&p(&[3, 1]), &prof).unwrap(), 0);
                tested += 1;
            }
        }
        assert!(tested >= 100, "{tested}");
    }

    #[test]
    fn cubic_and_quadratic_families() {
        let f = make_prime_field(101).unwrap();
        let cubic = family_polynomial(&f, 3, &f.from_i64(2), &f.from_i64(5)).unwrap();
        let prof = ramification_profile_of(&f, &cubic).unwrap();
        assert!(prof.simple_branching);
        assert_eq!(prof.disc_degree, 2);
        let degs = l_degree_table_of(&prof).unwrap();
        assert!(degs.degrees.iter().all(|(_, d)| *d == 0));

        let quad = family_polynomial(&f, 2, &f.zero(), &f.from_i64(3)).unwrap();
        let prof = ramification_profile_of(&f, &quad).unwrap();
        assert_eq!(prof.disc_degree, 1);
        let degs = l_degree_table_of(&prof).unwrap();
        assert_eq!(degs.degree(&p(&[1, 1])), Some(0));
    }

    #[test]
    fn rational_places_are_critical_values() {
        let f = make_prime_field(1009).unwrap();
        let g = UniPoly::from_ints(&f, &[0, -1, 1, 0, 1]);
        let prof = ramification_profile_of(&f, &g).unwrap();
        let mut crit_values: Vec<u64> = roots(&f, &g.derivative(&f))
            .unwrap()
            .iter()
            .map(|c| f.index_of(&g.eval(&f, c)))
            .collect();
        crit_values.sort_unstable();
        let mut linear: Vec<u64> = prof
            .finite_places
            .iter()
            .filter(|pl| pl.degree == 1)
            .map(|pl| f.index_of(&f.neg(&pl.polynomial.coeffs()[0])))
            .collect();
        linear.sort_unstable();
        assert_eq!(crit_values, linear);
    }
}
