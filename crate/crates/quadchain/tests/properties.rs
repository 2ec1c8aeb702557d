//! Randomized invariant checks over pools of real solution pairs.

use proptest::prelude::*;

use quadchain::json::ChainJson;
use quadchain::{
    divisors, factorize, is_prime, search_box, ChainWindow, FactorConfig, Int, SolutionPair,
    SystemLabel,
};

fn pair_pool() -> Vec<SolutionPair> {
    search_box(40, &SystemLabel::ALL, 1).pairs
}

#[test]
fn rotation_four_cycle_and_inverses() {
    for s in SystemLabel::ALL {
        assert_eq!(s.rotate_right().rotate_left(), s);
        assert_eq!(s.rotate_left().rotate_right(), s);
        assert_eq!(
            s.rotate_right().rotate_right().rotate_right().rotate_right(),
            s
        );
        assert_eq!(s.swapped().swapped(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extension_round_trips(idx in 0usize..1000, steps in 0usize..4) {
        let pool = pair_pool();
        let p = &pool[idx % pool.len()];
        let mut q = p.clone();
        for _ in 0..steps {
            q = q.extend_right();
        }
        for _ in 0..steps {
            q = q.extend_left();
        }
        prop_assert_eq!(&q, p);
    }

    #[test]
    fn generated_windows_survive_revalidation(idx in 0usize..1000, l in 0usize..4, r in 0usize..4) {
        let pool = pair_pool();
        let p = &pool[idx % pool.len()];
        let w = ChainWindow::generate(p, l, r);
        prop_assert_eq!(w.len(), 2 + l + r);
        let rebuilt = ChainWindow::new(w.terms().to_vec(), w.first_system());
        prop_assert!(rebuilt.is_ok());
    }

    #[test]
    fn reversal_is_a_valid_involution(idx in 0usize..1000, l in 0usize..4, r in 0usize..4) {
        let pool = pair_pool();
        let w = ChainWindow::generate(&pool[idx % pool.len()], l, r);
        let rev = w.reversed();
        prop_assert!(ChainWindow::new(rev.terms().to_vec(), rev.first_system()).is_ok());
        prop_assert_eq!(rev.reversed(), w);
    }

    #[test]
    fn json_round_trip(idx in 0usize..1000, l in 0usize..4, r in 0usize..4) {
        let pool = pair_pool();
        let w = ChainWindow::generate(&pool[idx % pool.len()], l, r);
        let text = serde_json::to_string(&ChainJson::from_window(&w)).unwrap();
        let parsed: ChainJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(parsed.to_window().unwrap(), w);
    }

    #[test]
    fn factorization_invariants(n in prop::num::i64::ANY.prop_filter("nonzero", |&n| n != 0)) {
        let n = Int::from(n % 1_000_000_007);
        prop_assume!(!num_traits::Zero::is_zero(&n));
        let f = factorize(&n, &FactorConfig::default()).unwrap();
        prop_assert_eq!(f.value(), n.clone());
        for (p, _) in &f.factors {
            prop_assert!(is_prime(p));
        }
        let ds = divisors(&f);
        prop_assert_eq!(ds.len() as u64, f.divisor_count());
        for d in &ds {
            prop_assert!(num_traits::Zero::is_zero(&(&n % d)));
        }
    }
}
