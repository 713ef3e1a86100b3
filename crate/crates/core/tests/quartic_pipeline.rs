//! End-to-end checks on the quartic family across modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use valueset_core::bounds::rat;
use valueset_core::curves::t2_is_singular;
use valueset_core::valueset::{bsd_identity_check, normalized_deviation};
use valueset_core::*;

fn quartic(ctx: &FieldCtx, a: i64, b: i64) -> UniPoly {
    UniPoly::from_ints(ctx, &[0, b, a, 0, 1])
}

#[test]
fn curves_recover_the_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..25 {
        let p = [11u64, 17, 43, 67, 97, 101][rng.gen_range(0..6)];
        let ctx = make_prime_field(p).unwrap();
        let (a, b) = (rng.gen_range(-50..50), rng.gen_range(1..p as i64));
        let s = preimage_spectrum(&ctx, &quartic(&ctx, a, b)).unwrap();
        let (ea, eb) = (ctx.from_i64(a), ctx.from_i64(b));
        let n2 = count_t2(&ctx, &ea, &eb).unwrap().off_diagonal() as u128;
        let n3 = count_t3(&ctx, &ea, &eb).unwrap().off_diagonal() as u128;
        let n4 = count_t4(&ctx, &ea, &eb).unwrap().off_diagonal() as u128;
        // m_2, m_3, m_4 solved back out of n_r'
        let m4 = n4 / 24;
        let m3 = (n3 - 24 * m4) / 6;
        let m2 = (n2 - 6 * m3 - 12 * m4) / 2;
        assert_eq!(tuple_counts(&s), vec![n2, n3, n4]);
        assert_eq!(&s.m[1..], &[m2 as u64, m3 as u64, m4 as u64]);
        assert!(bsd_identity_check(&s));
    }
}

#[test]
fn degree_table_feeds_the_half() {
    let ctx = make_prime_field(101).unwrap();
    let degs = l_degree_table(&ctx, &ctx.from_i64(3), &ctx.from_i64(7)).unwrap();
    let report = theorem_constant(&repr_table(4).unwrap(), &degs).unwrap();
    assert_eq!(report.leading, rat(1, 2));
    assert_eq!(report.additive, rat(15, 4));
    assert_eq!(mu(4).unwrap(), rat(5, 8));
}

#[test]
fn extension_field_quartic() {
    let ctx = make_extension(7, 2, 0).unwrap();
    let s = preimage_spectrum(&ctx, &quartic(&ctx, 1, -1)).unwrap();
    assert!(bsd_identity_check(&s));
    let (ea, eb) = (ctx.from_i64(1), ctx.from_i64(-1));
    assert_eq!(count_t2(&ctx, &ea, &eb).unwrap().off_diagonal() as u128, tuple_counts(&s)[0]);
    assert!(quartic_verdict(49, s.n_f).unwrap().pass);
}

#[test]
fn smooth_t2_gives_hasse_bounded_zeta() {
    for p in [13u64, 61, 257] {
        let ctx = make_prime_field(p).unwrap();
        for a in 0..6 {
            for b in 1..6 {
                if t2_is_singular(&ctx, &ctx.from_i64(a), &ctx.from_i64(b)) {
                    assert_eq!(t2_l_polynomial(p, a, b), Err(Error::NotSmooth));
                    continue;
                }
                let lp = t2_l_polynomial(p, a, b).unwrap();
                assert_eq!(lp.coeffs[1], p as i128);
                assert!(lp.coeffs[0] * lp.coeffs[0] <= 4 * p as i128);
            }
        }
    }
}

#[test]
fn deviation_is_small_for_moderate_primes() {
    for p in [1009u64, 4001, 10007] {
        let ctx = make_prime_field(p).unwrap();
        let s = preimage_spectrum(&ctx, &quartic(&ctx, 1, -1)).unwrap();
        let (_, d_f) = normalized_deviation(&s).unwrap();
        assert!(d_f.abs() <= 0.5 + 3.75 / (p as f64).sqrt());
    }
}
