use partrel_core::arrows::{decide_classical, decide_hc, decide_wc, ramsey_number};
use partrel_core::coloring::pair_count;
use partrel_core::generators::random_coloring;
use partrel_core::{Coloring, RelationQuery};
use proptest::prelude::*;

/// Every raw 2-coloring of `[n]^2` has a monochromatic triangle.
fn all_have_mono_triangle(n: usize) -> bool {
    let pairs = pair_count(n);
    (0u32..1 << pairs).all(|code| {
        let lex: Vec<u8> = (0..pairs).map(|k| (code >> k & 1) as u8).collect();
        let c = Coloring::from_lex_colors(n, 2, &lex).unwrap();
        (0..n).any(|a| {
            (a + 1..n).any(|b| (b + 1..n).any(|g| c.color(a, b) == c.color(a, g) && c.color(a, b) == c.color(b, g)))
        })
    })
}

#[test]
fn classical_triangle_threshold_is_six() {
    assert!(!all_have_mono_triangle(5));
    assert!(all_have_mono_triangle(6));
    let out = ramsey_number(&RelationQuery::classical(3, 1), 2, 6, None).unwrap();
    assert_eq!(out.threshold, Some(6));
    assert_eq!(out.extremal.n(), 5);
    assert!(!decide_classical(&out.extremal, 3, 1).unwrap().holds());
}

#[test]
fn wc_threshold_below_classical() {
    let wc = ramsey_number(&RelationQuery::wc(3, 1), 2, 6, None).unwrap();
    let v = wc.threshold.unwrap();
    assert!((3..=6).contains(&v));
    assert_eq!(wc, ramsey_number(&RelationQuery::wc(3, 1), 2, 6, None).unwrap());
    assert!(!decide_wc(&wc.extremal, 3, 1).unwrap().holds());
    assert_eq!(wc.extremal.n(), v - 1);
}

fn permutation(seed: u64, lambda: u32) -> Vec<u32> {
    let mut p: Vec<u32> = (0..lambda).collect();
    let mut s = seed;
    for i in (1..p.len()).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        p.swap(i, (s >> 33) as usize % (i + 1));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn implication_chain(seed in any::<u64>(), n in 2usize..9, lambda in 1u32..5, m in 2usize..6, kappa in 1usize..3) {
        prop_assume!(m <= n);
        let c = random_coloring(n, lambda, seed).unwrap();
        let classical = decide_classical(&c, m, kappa).unwrap().holds();
        let hc = decide_hc(&c, m, kappa, m).unwrap().holds();
        let wc = decide_wc(&c, m, kappa).unwrap().holds();
        prop_assert!(!classical || hc);
        prop_assert!(!hc || wc);
    }

    #[test]
    fn verdicts_invariant_under_color_permutation(seed in any::<u64>(), n in 2usize..8, lambda in 1u32..5, m in 2usize..5, j in 1usize..5) {
        prop_assume!(m <= n && j <= m);
        let c = random_coloring(n, lambda, seed).unwrap();
        let p = c.permute_colors(&permutation(seed, lambda)).unwrap();
        prop_assert_eq!(decide_classical(&c, m, 1).unwrap().holds(), decide_classical(&p, m, 1).unwrap().holds());
        prop_assert_eq!(decide_hc(&c, m, 1, j).unwrap().holds(), decide_hc(&p, m, 1, j).unwrap().holds());
        prop_assert_eq!(decide_wc(&c, m, 2).unwrap().holds(), decide_wc(&p, m, 2).unwrap().holds());
    }

    #[test]
    fn budget_monotonicity(seed in any::<u64>(), n in 2usize..8, lambda in 1u32..5, m in 2usize..6) {
        prop_assume!(m <= n);
        let c = random_coloring(n, lambda, seed).unwrap();
        for kappa in 1..4 {
            if decide_wc(&c, m, kappa).unwrap().holds() {
                prop_assert!(decide_wc(&c, m, kappa + 1).unwrap().holds());
            }
            if decide_classical(&c, m, kappa).unwrap().holds() {
                prop_assert!(decide_classical(&c, m, kappa + 1).unwrap().holds());
            }
        }
        for j in 2..=m {
            if decide_hc(&c, m, 1, j).unwrap().holds() {
                prop_assert!(decide_hc(&c, m, 1, j - 1).unwrap().holds());
            }
        }
    }
}
