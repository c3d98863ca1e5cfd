//! Annular distances against a Farey-fan oracle: in coordinates sending
//! the core to `∞`, the geodesic from `λ⁻` to `λ⁺` crosses one fan edge
//! `(∞, n)` per integer `n` between the two endpoints.

use veerlat::pocket::{lambda_distance, pivot_annuli, Subsurface, SubsurfaceSpec};
use veerlat::veering::{MonodromySpec, VeeringComplex};

fn direction(c: &VeeringComplex, s: i64) -> (f64, f64) {
    let v = c.vector(s).unwrap();
    (v.x as f64, v.y as f64)
}

fn bezout(a: i128, b: i128) -> (i128, i128) {
    if b == 0 {
        return (a.signum(), 0);
    }
    let (x, y) = bezout(b, a.rem_euclid(b));
    (y, x - a.div_euclid(b) * y)
}

/// Number of fan edges at the core `(x, y)` crossed from `λ⁻` to `λ⁺`.
fn fan(c: &VeeringComplex, x: i128, y: i128) -> i64 {
    // (u, v) with x·v − y·u = 1
    let (v, w) = bezout(x, y);
    let (u, v) = (-w, v);
    assert_eq!(x * v - y * u, 1);
    let coordinate = |(a, b): (f64, f64)| {
        let along = a * v as f64 - b * u as f64;
        let across = x as f64 * b - y as f64 * a;
        along / across
    };
    let m = c.period();
    let (t1, t2) = (coordinate(direction(c, 6 * m)), coordinate(direction(c, -6 * m)));
    (t1.max(t2).floor() - t1.min(t2).ceil()) as i64 + 1
}

fn words(max: usize) -> Vec<String> {
    (2..=max)
        .flat_map(|n| (0..1u32 << n).map(move |b| (0..n).map(|i| if b >> i & 1 == 1 { 'R' } else { 'L' }).collect::<String>()))
        .filter(|w| w.contains('R') && w.contains('L'))
        .collect()
}

#[test]
fn annular_distance_tracks_the_farey_fan() {
    let mut cases = words(7);
    cases.extend((2..=20).map(|a| format!("R^{a}L")));
    for w in cases {
        let c = VeeringComplex::build(&MonodromySpec::word(&w)).unwrap();
        for y in pivot_annuli(&c).unwrap() {
            let SubsurfaceSpec::Annulus { core } = &y else { unreachable!() };
            let d = lambda_distance(&c, &Subsurface::resolve(&c, &y).unwrap()).unwrap() as i64;
            let f = fan(&c, core.q(), core.p());
            assert!((f + 1..=f + 2).contains(&d), "{w}, core {core}: d {d}, fan {f}");
        }
    }
}

#[test]
fn run_annulus_grows_with_the_run() {
    for a in 2..=20 {
        let c = VeeringComplex::build(&MonodromySpec::word(&format!("R^{a}L"))).unwrap();
        let y = SubsurfaceSpec::annulus("0/1".parse().unwrap());
        assert_eq!(fan(&c, 1, 0), a as i64 + 1);
        assert_eq!(lambda_distance(&c, &Subsurface::resolve(&c, &y).unwrap()).unwrap(), a + 3);
    }
}
