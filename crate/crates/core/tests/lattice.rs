use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;
use veerlat::section::{random_section, Section};
use veerlat::veering::{fixtures, MonodromySpec, VeeringComplex};

fn bundles() -> &'static [VeeringComplex] {
    static B: OnceLock<Vec<VeeringComplex>> = OnceLock::new();
    B.get_or_init(|| {
        let mut out: Vec<VeeringComplex> =
            ["RL", "RRL", "RRLL", "R^6L"].iter().map(|w| VeeringComplex::build(&MonodromySpec::word(w)).unwrap()).collect();
        out.push(VeeringComplex::build(&fixtures::swap_spec().unwrap()).unwrap());
        out
    })
}

fn triple(c: &VeeringComplex, seed: u64, starts: [i64; 3], moves: usize) -> [Section; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    starts.map(|s| random_section(c, &mut rng, s, moves))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn lattice_laws(b in 0usize..5, seed in any::<u64>(), starts in prop::array::uniform3(-12i64..12), moves in 0usize..12) {
        let c = &bundles()[b];
        let [x, y, z] = triple(c, seed, starts, moves);
        for t in [&x, &y, &z, &x.join(&y), &x.meet(&y)] {
            prop_assert!(t.check(c).is_ok(), "{} is not a section", t);
        }
        prop_assert_eq!(x.join(&y), y.join(&x));
        prop_assert_eq!(x.meet(&y), y.meet(&x));
        prop_assert_eq!(x.join(&y).join(&z), x.join(&y.join(&z)));
        prop_assert_eq!(x.meet(&y).meet(&z), x.meet(&y.meet(&z)));
        prop_assert_eq!(x.join(&x.meet(&y)), x.clone());
        prop_assert_eq!(x.meet(&x.join(&y)), x.clone());
        prop_assert_eq!(x.join(&x), x.clone());
        prop_assert_eq!(x.meet(&y.join(&z)), x.meet(&y).join(&x.meet(&z)));
        prop_assert!(x.meet(&y).leq(&x) && x.leq(&x.join(&y)));
        prop_assert_eq!(x.leq(&y) && y.leq(&x), x == y);
        prop_assert_eq!(x.leq(&y), x.join(&y) == y);
        prop_assert_eq!(x.region(&y), x.meet(&y).region(&x.join(&y)));
    }

    #[test]
    fn moves_are_inverse(b in 0usize..5, seed in any::<u64>(), start in -12i64..12, moves in 0usize..12) {
        let c = &bundles()[b];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_section(c, &mut rng, start, moves);
        for s in t.up_moves(c) {
            prop_assert_eq!(t.move_up(c, s).unwrap().move_down(c, s).unwrap(), t.clone());
        }
        for s in t.down_moves(c) {
            prop_assert_eq!(t.move_down(c, s).unwrap().move_up(c, s).unwrap(), t.clone());
        }
    }

    #[test]
    fn deck_shift_preserves_sections(b in 0usize..5, seed in any::<u64>(), start in -12i64..12, k in -3i64..3) {
        let c = &bundles()[b];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_section(c, &mut rng, start, 8);
        prop_assert!(t.apply_deck(c, k).check(c).is_ok());
        prop_assert_eq!(t.apply_deck(c, k).edges(c), t.edges(c).iter().map(|e| e - k * c.period()).collect());
    }
}

#[test]
fn base_layers_form_a_chain() {
    for c in bundles() {
        for k in -10..10 {
            assert!(Section::base(k).leq(&Section::base(k + 1)));
            assert!(Section::base(k).is_phi_section(c));
        }
    }
}
