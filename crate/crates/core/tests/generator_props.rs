use partrel_core::generators::{aligned, delta_coloring, find_delta_subsystem};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn injection_bound_holds(c: &partrel_core::Coloring, x: &[usize]) -> bool {
    x.len() <= 1usize << c.colors_on(x).len()
}

#[test]
fn delta_injection_bound() {
    for ell in 1..=3 {
        let c = delta_coloring(ell).unwrap();
        let n = c.n();
        for mask in 1u32..1 << n {
            let x: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            assert!(injection_bound_holds(&c, &x), "{x:?}");
        }
    }
    let c = delta_coloring(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10_000 {
        let mask: u32 = rng.gen_range(1..1 << 16);
        let x: Vec<usize> = (0..16).filter(|&v| mask >> v & 1 == 1).collect();
        assert!(injection_bound_holds(&c, &x));
    }
}

/// Largest Δ-subsystem size by brute force over all subfamilies.
fn brute_delta_max(family: &[Vec<usize>]) -> usize {
    let k = family.len();
    let mut best = usize::from(k > 0);
    for mask in 1u32..1 << k {
        let members: Vec<&Vec<usize>> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| &family[i]).collect();
        if members.len() < 2 {
            continue;
        }
        let root: Vec<usize> = members[0].iter().copied().filter(|x| members[1].contains(x)).collect();
        let ok = members.iter().enumerate().all(|(i, a)| {
            members[i + 1..].iter().all(|b| {
                let common: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
                common == root
            })
        });
        if ok {
            best = best.max(members.len());
        }
    }
    best
}

#[test]
fn delta_subsystem_example_is_optimal() {
    let fam = vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3]];
    assert_eq!(brute_delta_max(&fam), 3);
}

fn family_strategy() -> impl Strategy<Value = Vec<Vec<usize>>> {
    (1usize..4, 2usize..9).prop_flat_map(|(size, count)| {
        prop::collection::vec(prop::sample::subsequence((0..7).collect::<Vec<usize>>(), size), count)
    })
}

proptest! {
    #[test]
    fn delta_subsystems_are_sound_and_complete(family in family_strategy(), t in 2usize..5) {
        let found = find_delta_subsystem(&family, t).unwrap();
        let best = brute_delta_max(&family);
        match found {
            Some(sys) => {
                prop_assert!(sys.members.len() >= t);
                let sets = sys.sets(&family);
                for (i, a) in sets.iter().enumerate() {
                    for b in &sets[i + 1..] {
                        let common: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
                        prop_assert_eq!(&common, &sys.root);
                    }
                }
            }
            None => prop_assert!(best < t),
        }
    }

    #[test]
    fn aligned_reflexive_symmetric_and_shift_invariant(
        u in prop::sample::subsequence((0..20).collect::<Vec<usize>>(), 0..8),
        v in prop::sample::subsequence((0..20).collect::<Vec<usize>>(), 0..8),
        shift in 0usize..10,
        scale in 1usize..4,
    ) {
        prop_assert!(aligned(&u, &u));
        prop_assert_eq!(aligned(&u, &v), aligned(&v, &u));
        let map = |s: &[usize]| s.iter().map(|x| x * scale + shift).collect::<Vec<_>>();
        prop_assert_eq!(aligned(&u, &v), aligned(&map(&u), &map(&v)));
    }
}
