use partrel_core::ordinals::ClubSystem;
use partrel_core::palette::ColorSet;
use partrel_core::wellconn::{is_wc_set, WcOrder};
use partrel_core::{CnfOrdinal, Palette};

#[test]
fn axioms_hold_exhaustively() {
    for d in 1..=3 {
        for coeff_max in 1..=4 {
            let report = ClubSystem::new(d).unwrap().check_axioms(coeff_max);
            assert!(report.passed(), "{report:?}");
            if d == 3 && coeff_max >= 2 {
                assert!(report.checks.iter().all(|&k| k > 0), "{report:?}");
            }
        }
    }
}

#[test]
fn derived_color_respects_index_floor() {
    let sys = ClubSystem::new(4).unwrap();
    let limits = sys.limits(2);
    for (b, beta) in limits.iter().enumerate() {
        let floor = sys.i_min(beta).unwrap();
        for alpha in &limits[..b] {
            let color = sys.derived_color(alpha, beta).unwrap();
            assert!(color >= floor && color < 4);
            assert!(sys.acc_member(alpha, beta, color).unwrap());
            assert!((floor..color).all(|i| !sys.acc_member(alpha, beta, i).unwrap()));
        }
    }
}

/// For every sampled universe, index `i` and palette of colors below `i`:
/// well-connected pairs are accumulation points of the upper club at `i`,
/// and every well-connected set sits inside the club of its top element.
#[test]
fn well_connected_pairs_accumulate() {
    let mut checked = 0u64;
    for seed in 0..100u64 {
        let d = 2 + (seed % 2) as u32;
        let sys = ClubSystem::new(d).unwrap();
        let size = 4 + (seed % 9) as usize;
        let coeff_max = 4;
        let universe = sys.sample_universe(coeff_max, size.min(sys.limits(coeff_max).len()), seed).unwrap();
        let c = sys.coloring(&universe).unwrap();
        for i in 0..d {
            for bits in 0..1u64 << i {
                let palette = ColorSet::from_bits(bits);
                let order = WcOrder::new(&c, palette);
                for (a, b) in order.pairs() {
                    checked += 1;
                    assert!(sys.acc_member(&universe[a], &universe[b], i).unwrap(), "seed {seed} i {i}");
                }
                let chain = order.longest_chain();
                if let Some((&top, rest)) = chain.split_last() {
                    assert!(is_wc_set(&c, &chain, &Palette::exact(palette)).unwrap().is_some());
                    if rest.is_empty() {
                        continue;
                    }
                    let club = sys.club_interval(&universe[top], i).unwrap();
                    assert!(rest.iter().all(|&v| club.contains(&universe[v])));
                    let otp = club.order_type().unwrap();
                    assert!(otp < CnfOrdinal::term(i + 1, 1));
                }
            }
        }
    }
    assert!(checked > 0);
}
