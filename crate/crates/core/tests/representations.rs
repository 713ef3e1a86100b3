use proptest::prelude::*;
use valueset_core::symrep::{factorial, hook_dimension, kostka_hook, mn_character};
use valueset_core::*;

proptest! {
    #[test]
    fn permutation_module_dimensions(d in 2usize..=8, r_off in 0usize..8) {
        let r = 1 + r_off % d;
        let total: u128 = partitions(d)
            .unwrap()
            .iter()
            .map(|mu| kostka_hook(mu, r) as u128 * hook_dimension(mu) as u128)
            .sum();
        prop_assert_eq!(total, factorial(d) / factorial(d - r));
    }

    #[test]
    fn row_orthogonality(d in 2usize..=6, i in 0usize..20, j in 0usize..20) {
        let parts = partitions(d).unwrap();
        let (a, b) = (&parts[i % parts.len()], &parts[j % parts.len()]);
        let inner: i128 = parts
            .iter()
            .map(|c| {
                c.class_size() as i128
                    * mn_character(a, c).unwrap() as i128
                    * mn_character(b, c).unwrap() as i128
            })
            .sum();
        let expect = if a == b { factorial(d) as i128 } else { 0 };
        prop_assert_eq!(inner, expect);
    }
}

#[test]
fn tables_build_up_to_ten() {
    for d in 2..=10 {
        let t = repr_table(d).unwrap();
        let dims: u128 = t.rows.iter().map(|r| (r.dim as u128).pow(2)).sum();
        assert_eq!(dims, factorial(d));
    }
    assert_eq!(repr_table(11).map(|_| ()), Err(Error::UnsupportedDegree(11)));
}
