use veerlat::section::{base_section, bottom_of, extend_to_section, monotone_path, random_disjoint_edges, top_of};
use veerlat::veering::{fixtures, validate_veering, Color, MonodromySpec, VeeringComplex};
use veerlat::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn words(max: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 2..=max {
        for bits in 0..(1u32 << n) {
            let w: String = (0..n).map(|i| if bits >> i & 1 == 1 { 'R' } else { 'L' }).collect();
            if w.contains('R') && w.contains('L') {
                out.push(w);
            }
        }
    }
    out
}

#[test]
fn every_short_word_builds() {
    for w in words(8) {
        let c = VeeringComplex::build(&MonodromySpec::word(&w)).unwrap();
        assert_eq!(c.tetrahedra_per_period(), w.len(), "{w}");
        assert!(validate_veering(&c).is_ok());
        c.check_structure().unwrap();
        for k in -3..3 {
            base_section(&c, k).unwrap().check(&c).unwrap();
        }
    }
}

#[test]
fn single_letters_are_rejected() {
    for w in ["R", "LLL", "R^9"] {
        assert!(matches!(VeeringComplex::build(&MonodromySpec::word(w)), Err(Error::NotPseudoAnosov(_))));
    }
}

#[test]
fn matrices_match_their_words() {
    let c = VeeringComplex::build(&MonodromySpec::Matrix([[2, 1], [1, 1]])).unwrap();
    assert_eq!(c.tetrahedra_per_period(), 2);
    let c = VeeringComplex::build(&MonodromySpec::Matrix([[5, 2], [2, 1]])).unwrap();
    assert_eq!(c.tetrahedra_per_period(), 4);
}

#[test]
fn both_colors_appear() {
    for w in ["RL", "RRL", "RRLL", "R^6L"] {
        let c = VeeringComplex::build(&MonodromySpec::word(w)).unwrap();
        let colors = c.colors().unwrap();
        assert!(colors.contains(&Color::Red) && colors.contains(&Color::Blue), "{w}");
    }
}

#[test]
fn unveerable_script_is_detected() {
    let spec = MonodromySpec::Script(fixtures::unveerable_script());
    assert!(matches!(VeeringComplex::build(&spec), Err(Error::Unveerable { .. })));
}

#[test]
fn families_have_tops_and_bottoms() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for w in ["RL", "RRL", "RRLL", "R^6L"] {
        let c = VeeringComplex::build(&MonodromySpec::word(w)).unwrap();
        for i in 0..40 {
            let e = random_disjoint_edges(&c, &mut rng, i % 9 - 4, 5);
            let t = extend_to_section(&c, &e).unwrap();
            let (lo, hi) = (bottom_of(&c, &e).unwrap(), top_of(&c, &e).unwrap());
            assert!(lo.leq(&t) && t.leq(&hi), "{w}: {lo} ≤ {t} ≤ {hi}");
            let path = monotone_path(&c, &lo, &hi, &e).unwrap();
            assert_eq!(path.len(), lo.region(&hi).len());
        }
    }
}
