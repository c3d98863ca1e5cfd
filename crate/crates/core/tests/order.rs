use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use veerlat::section::random_section;
use veerlat::veering::{edge_order_ids, fixtures, EdgeOrder, MonodromySpec, VeeringComplex};

fn bundles() -> Vec<VeeringComplex> {
    let mut out: Vec<VeeringComplex> =
        ["RL", "RRL", "RRLL", "R^6L"].iter().map(|w| VeeringComplex::build(&MonodromySpec::word(w)).unwrap()).collect();
    out.push(VeeringComplex::build(&fixtures::swap_spec().unwrap()).unwrap());
    out
}

#[test]
fn killed_edge_is_below_created_edge() {
    let c = VeeringComplex::build(&MonodromySpec::word("RL")).unwrap();
    let killed = c.tet(0).bottom;
    assert_eq!(edge_order_ids(&c, killed, 0).unwrap(), EdgeOrder::Less);
    assert_eq!(edge_order_ids(&c, 0, killed).unwrap(), EdgeOrder::Greater);
}

#[test]
fn flips_go_up() {
    for c in bundles() {
        for s in -2 * c.period()..2 * c.period() {
            assert_eq!(edge_order_ids(&c, c.tet(s).bottom, s).unwrap(), EdgeOrder::Less);
        }
    }
}

#[test]
fn strict_partial_order_on_crossing_triples() {
    for c in bundles() {
        let m = c.period();
        let window: Vec<i64> = (-2 * m..2 * m).collect();
        let order = |e, f| edge_order_ids(&c, e, f).unwrap();
        for &a in &window {
            for &b in &window {
                let ab = order(a, b);
                match ab {
                    EdgeOrder::Less => assert_eq!(order(b, a), EdgeOrder::Greater),
                    EdgeOrder::Greater => assert_eq!(order(b, a), EdgeOrder::Less),
                    _ => continue,
                }
                for &x in &window {
                    if ab == EdgeOrder::Less && order(b, x) == EdgeOrder::Less && order(a, x) != EdgeOrder::Incomparable {
                        assert_eq!(order(a, x), EdgeOrder::Less, "{a} < {b} < {x}");
                    }
                }
            }
        }
    }
}

#[test]
fn deck_equivariance() {
    for c in bundles() {
        let m = c.period();
        for e in -2 * m..2 * m {
            for f in -2 * m..2 * m {
                for k in [-2, 1, 3] {
                    assert_eq!(edge_order_ids(&c, e, f).unwrap(), edge_order_ids(&c, e - k * m, f - k * m).unwrap());
                }
                assert_eq!(c.color(e), c.color(e - m));
            }
        }
    }
}

#[test]
fn up_is_up_dual_characterization() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for c in bundles() {
        let m = c.period();
        for _ in 0..200 {
            let start = rng.gen_range(-2 * m..2 * m);
            let t = random_section(&c, &mut rng, start, 6);
            let edges = t.edges(&c);
            let f = rng.gen_range(t.floor() - 3 * m..t.floor() + 3 * m);
            if edges.contains(&f) {
                continue;
            }
            let crossing: Vec<i64> = edges.iter().copied().filter(|&e| c.crosses(e, f).unwrap()).collect();
            assert!(!crossing.is_empty());
            let below = t.contains(c.edge_death(f));
            let all_above_f = crossing.iter().all(|&e| edge_order_ids(&c, f, e).unwrap() == EdgeOrder::Less);
            let all_below_f = crossing.iter().all(|&e| edge_order_ids(&c, f, e).unwrap() == EdgeOrder::Greater);
            assert_eq!(below, all_above_f, "edge {f} against {t}");
            assert_eq!(!below, all_below_f, "edge {f} against {t}");
        }
    }
}
