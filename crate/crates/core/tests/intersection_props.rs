use proptest::prelude::*;
use taut_core::intersection::{genus0_psi, psi_integral, Engine};
use taut_core::partitions::weak_compositions;
use taut_core::rational::{frac, int};
use taut_core::Rational;

/// Random weak composition of `total` into `n` parts via sorted cut points.
fn composition(total: u32, n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=total, n.saturating_sub(1)).prop_map(move |mut cuts| {
        cuts.sort_unstable();
        let mut parts = Vec::with_capacity(n);
        let mut prev = 0;
        for c in cuts {
            parts.push(c - prev);
            prev = c;
        }
        parts.push(total - prev);
        parts
    })
}

/// Stable `(g, n)` with `3g - 3 + n <= max_dim` and a degree-matched vector.
fn stable_point(max_dim: u32, min_n: usize) -> impl Strategy<Value = (u32, Vec<u32>)> {
    (0u32..=3, min_n..=13usize)
        .prop_filter("stable and small", move |&(g, n)| {
            2 * g as i64 - 2 + n as i64 > 0 && 3 * g as i64 - 3 + n as i64 <= max_dim as i64
        })
        .prop_flat_map(|(g, n)| (Just(g), composition(3 * g + n as u32 - 3, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dilaton_equation((g, a) in stable_point(9, 1)) {
        let n = a.len() as i64;
        let mut with_one = a.clone();
        with_one.push(1);
        let lhs = psi_integral(g, &with_one).unwrap();
        let rhs = int(2 * g as i64 - 2 + n) * psi_integral(g, &a).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_in_markings(
        (g, a, b) in stable_point(10, 1)
            .prop_flat_map(|(g, a)| (Just(g), Just(a.clone()), Just(a).prop_shuffle()))
    ) {
        prop_assert_eq!(psi_integral(g, &a).unwrap(), psi_integral(g, &b).unwrap());
    }
}

/// String equation on `M̄_{g,n+1}`: exponents on the first `n` points sum to
/// its dimension `3g - 2 + n`.
fn string_point() -> impl Strategy<Value = (u32, Vec<u32>)> {
    (0u32..=3, 1usize..=12)
        .prop_filter("(g, n) stable, (g, n + 1) small", |&(g, n)| {
            2 * g as i64 - 2 + n as i64 > 0 && 3 * g as i64 - 2 + n as i64 <= 10
        })
        .prop_flat_map(|(g, n)| (Just(g), composition(3 * g + n as u32 - 2, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn string_equation_on_added_point((g, a) in string_point()) {
        let mut with_zero = a.clone();
        with_zero.push(0);
        let lhs = psi_integral(g, &with_zero).unwrap();
        let mut rhs = Rational::from_integer(0.into());
        for j in 0..a.len() {
            if a[j] == 0 {
                continue;
            }
            let mut b = a.clone();
            b[j] -= 1;
            rhs += psi_integral(g, &b).unwrap();
        }
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn seeds() {
    assert_eq!(psi_integral(0, &[0, 0, 0]).unwrap(), int(1));
    assert_eq!(psi_integral(1, &[1]).unwrap(), frac(1, 24));
}

#[test]
fn genus_zero_closed_form_matches_recursion() {
    for n in 3..=8usize {
        for a in weak_compositions(n as u32 - 3, n) {
            assert_eq!(
                genus0_psi(&a).unwrap(),
                psi_integral(0, &a).unwrap(),
                "{a:?}"
            );
        }
    }
}

#[test]
fn memo_is_transparent() {
    let cached = Engine::new();
    let bare = Engine::without_cache();
    for (g, n) in [(2u32, 3usize), (3, 1), (1, 5)] {
        for a in weak_compositions(3 * g + n as u32 - 3, n) {
            assert_eq!(
                cached.psi_integral(g, &a).unwrap(),
                bare.psi_integral(g, &a).unwrap()
            );
        }
    }
}

#[test]
fn degree_mismatch_is_zero_and_unstable_is_error() {
    assert_eq!(psi_integral(2, &[1, 1]).unwrap(), int(0));
    assert!(psi_integral(0, &[0, 0]).is_err());
    assert!(psi_integral(1, &[]).is_err());
}
