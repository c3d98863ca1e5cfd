//! Seeded property suites over a built complex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use veerlat::fiber::{Carrier, GraphEdge, ProperGraph, Slope, VertexKind};
use veerlat::metrics::{bowditch_bound, chi_intersection_bound, diam_as, farey_distance, D};
use veerlat::pocket::{pivot_annuli, proj_section, theorem_checks, CheckOptions, Subsurface};
use veerlat::report::{sort_records, CheckRecord};
use veerlat::section::{
    bottom_of, contains_all, extend_to_section, monotone_path, random_disjoint_edges, random_section, top_of, Section,
};
use veerlat::veering::{edge_order_ids, EdgeOrder, VeeringComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Lattice,
    Order,
    Families,
    Projections,
    Pockets,
    Theorems,
    Bounds,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] =
        [Suite::Lattice, Suite::Order, Suite::Families, Suite::Projections, Suite::Pockets, Suite::Theorems, Suite::Bounds];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lattice => "lattice",
            Suite::Order => "order",
            Suite::Families => "families",
            Suite::Projections => "projections",
            Suite::Pockets => "pockets",
            Suite::Theorems => "theorems",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown suite {s:?}; expected one of lattice, order, families, projections, pockets, theorems, bounds, all"))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random samples per sampled check.
    pub samples: usize,
    pub research_mode: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, samples: 200, research_mode: false }
    }
}

/// A generator seeded by the global seed and the check name.
fn rng(seed: u64, name: &str) -> ChaCha8Rng {
    let h = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn count(r: CheckRecord, violations: usize) -> CheckRecord {
    r.eq(violations as i64, 0)
}

/// Runs the selected suites in parallel; records are sorted by check id.
pub fn run_suites(c: &VeeringComplex, suites: &[Suite], opts: SuiteOptions) -> Vec<CheckRecord> {
    let mut selected: BTreeSet<Suite> = BTreeSet::new();
    for &s in suites {
        if s == Suite::All {
            selected.extend(Suite::EACH);
        } else {
            selected.insert(s);
        }
    }
    let split = selected.contains(&Suite::Pockets) || selected.contains(&Suite::Theorems);
    let mut jobs: Vec<Suite> = selected.iter().copied().filter(|s| !matches!(s, Suite::Pockets | Suite::Theorems)).collect();
    if split {
        jobs.push(Suite::Theorems);
    }
    let mut out: Vec<CheckRecord> = jobs
        .par_iter()
        .flat_map(|&s| match s {
            Suite::Lattice => lattice(c, opts),
            Suite::Order => order(c, opts),
            Suite::Families => families(c, opts),
            Suite::Projections => projections(c, opts),
            Suite::Bounds => bounds(),
            _ => subsurface_checks(c, opts, selected.contains(&Suite::Pockets), selected.contains(&Suite::Theorems)),
        })
        .collect();
    sort_records(&mut out);
    out
}

fn starts(c: &VeeringComplex, rng: &mut ChaCha8Rng) -> i64 {
    let m = c.period();
    rng.gen_range(-2 * m..2 * m)
}

pub fn lattice(c: &VeeringComplex, opts: SuiteOptions) -> Vec<CheckRecord> {
    let mut rng = rng(opts.seed, "lattice");
    let laws: [(&str, &str); 9] = [
        ("sections-valid", "meets and joins of sections are sections"),
        ("commutative", "join and meet are commutative"),
        ("associative", "join and meet are associative"),
        ("absorption", "absorption laws"),
        ("idempotent", "join and meet are idempotent"),
        ("distributive", "meet distributes over join"),
        ("leq-antisymmetric", "≤ is antisymmetric"),
        ("leq-matches-join", "T₁ ≤ T₂ iff T₁ ∨ T₂ = T₂"),
        ("region-identity", "U(T₁,T₂) = U(T₁∧T₂, T₁∨T₂)"),
    ];
    let mut bad: BTreeMap<&str, usize> = laws.iter().map(|(k, _)| (*k, 0)).collect();
    for _ in 0..opts.samples {
        let mut t = || {
            let (s, k) = (starts(c, &mut rng), rng.gen_range(0..12));
            random_section(c, &mut rng, s, k)
        };
        let (x, y, z) = (t(), t(), t());
        let (j, m) = (x.join(&y), x.meet(&y));
        let mut fail = |k: &'static str, ok: bool| {
            if !ok {
                *bad.get_mut(k).unwrap() += 1;
            }
        };
        fail("sections-valid", [&x, &y, &z, &j, &m].iter().all(|t| t.check(c).is_ok()));
        fail("commutative", j == y.join(&x) && m == y.meet(&x));
        fail("associative", j.join(&z) == x.join(&y.join(&z)) && m.meet(&z) == x.meet(&y.meet(&z)));
        fail("absorption", x.join(&m) == x && x.meet(&j) == x);
        fail("idempotent", x.join(&x) == x && x.meet(&x) == x);
        fail("distributive", x.meet(&y.join(&z)) == m.join(&x.meet(&z)));
        fail("leq-antisymmetric", !(x.leq(&y) && y.leq(&x)) || x == y);
        fail("leq-matches-join", x.leq(&y) == (j == y));
        fail("region-identity", x.region(&y) == m.region(&j));
    }
    laws.iter()
        .map(|(k, anchor)| count(CheckRecord::new(format!("lattice/{k}"), *anchor).input("samples", opts.samples), bad[k]))
        .collect()
}

pub fn order(c: &VeeringComplex, opts: SuiteOptions) -> Vec<CheckRecord> {
    let m = c.period();
    let half = (2 * m).min(32);
    let window: Vec<i64> = (-half..half).collect();
    let ord = |a, b| edge_order_ids(c, a, b).ok();
    let mut anti = 0;
    let mut trans = 0;
    let mut triples = 0;
    for &a in &window {
        for &b in &window {
            let ab = ord(a, b);
            let ok = match ab {
                Some(EdgeOrder::Less) => ord(b, a) == Some(EdgeOrder::Greater),
                Some(EdgeOrder::Greater) => ord(b, a) == Some(EdgeOrder::Less),
                Some(EdgeOrder::Incomparable) => ord(b, a) == Some(EdgeOrder::Incomparable),
                Some(EdgeOrder::Equal) => a == b,
                None => false,
            };
            anti += usize::from(!ok);
            if ab != Some(EdgeOrder::Less) {
                continue;
            }
            for &x in &window {
                if ord(b, x) == Some(EdgeOrder::Less) && ord(a, x) != Some(EdgeOrder::Incomparable) {
                    triples += 1;
                    trans += usize::from(ord(a, x) != Some(EdgeOrder::Less));
                }
            }
        }
    }
    let mut monotone = 0;
    let mut equivariant = 0;
    for &s in &window {
        monotone += usize::from(ord(c.tet(s).bottom, s) != Some(EdgeOrder::Less));
        for &f in &window {
            equivariant += usize::from(ord(s, f) != ord(s - m, f - m) || c.color(s) != c.color(s - m));
        }
    }
    let mut rng = rng(opts.seed, "order");
    let mut disagree = 0;
    let mut tested = 0;
    while tested < opts.samples {
        let s = starts(c, &mut rng);
        let t = random_section(c, &mut rng, s, 6);
        let f = rng.gen_range(t.floor() - 3 * m..t.floor() + 3 * m);
        let edges = t.edges(c);
        if edges.contains(&f) {
            continue;
        }
        tested += 1;
        let crossing: Vec<i64> = edges.iter().copied().filter(|&e| c.crosses(e, f).unwrap_or(false)).collect();
        let below = t.contains(c.edge_death(f));
        let dual = !crossing.is_empty() && crossing.iter().all(|&e| ord(f, e) == Some(EdgeOrder::Less));
        let dual_above = !crossing.is_empty() && crossing.iter().all(|&e| ord(f, e) == Some(EdgeOrder::Greater));
        disagree += usize::from(below != dual || below == dual_above);
    }
    vec![
        count(
            CheckRecord::new("order/antisymmetric", "slope order is antisymmetric").input("window", format!("[{}, {})", -half, half)),
            anti,
        ),
        count(
            CheckRecord::new("order/transitive", "slope order is transitive on pairwise crossing triples")
                .input("window", format!("[{}, {})", -half, half))
                .input("triples", triples),
            trans,
        ),
        count(CheckRecord::new("order/flips-go-up", "bottom diagonal < top diagonal in every tetrahedron"), monotone),
        count(CheckRecord::new("order/deck-equivariant", "order and colors are Φ-invariant"), equivariant),
        count(
            CheckRecord::new("order/up-is-up", "f lies below T iff f < e for every edge e of T crossing f")
                .input("samples", opts.samples),
            disagree,
        ),
    ]
}

pub fn families(c: &VeeringComplex, opts: SuiteOptions) -> Vec<CheckRecord> {
    let mut rng = rng(opts.seed, "families");
    let n = (opts.samples / 2).max(100);
    let (mut empty, mut unique, mut bracket, mut path) = (0, 0, 0, 0);
    for _ in 0..n {
        let s = starts(c, &mut rng);
        let e = random_disjoint_edges(c, &mut rng, s, 5);
        let Ok(t) = extend_to_section(c, &e) else {
            empty += 1;
            continue;
        };
        empty += usize::from(!contains_all(c, &t, &e));
        let shifted: BTreeSet<i64> = e.iter().map(|x| x - c.period()).collect();
        match (bottom_of(c, &e), top_of(c, &e), top_of(c, &shifted)) {
            (Ok(lo), Ok(hi), Ok(hi2)) => {
                unique += usize::from(top_of(c, &e).ok().as_ref() != Some(&hi) || hi2 != hi.apply_deck(c, 1));
                bracket += usize::from(!(lo.leq(&t) && t.leq(&hi)));
                match monotone_path(c, &lo, &hi, &e) {
                    Ok(p) => path += usize::from(p.len() != lo.region(&hi).len()),
                    Err(_) => path += 1,
                }
            }
            _ => unique += 1,
        }
    }
    vec![
        count(CheckRecord::new("families/extend-nonempty", "T(E) is nonempty for disjoint E").input("samples", n), empty),
        count(
            CheckRecord::new("families/extremes-unique", "top and bottom of T(E) are unique and Φ-equivariant").input("samples", n),
            unique,
        ),
        count(CheckRecord::new("families/extremes-bracket", "T⁻ ≤ T ≤ T⁺ for T ∈ T(E)").input("samples", n), bracket),
        count(
            CheckRecord::new("families/monotone-path-length", "monotone paths in T(E) have |U(T⁻,T⁺)| moves").input("samples", n),
            path,
        ),
    ]
}

fn section_graphs(c: &VeeringComplex, t: &Section) -> Vec<ProperGraph> {
    let mut by_comp: BTreeMap<usize, Vec<GraphEdge>> = BTreeMap::new();
    for e in t.edges(c) {
        if let Ok(v) = c.vector(e) {
            by_comp.entry(c.component(e)).or_default().push(GraphEdge { ends: [0, 0], carrier: Carrier::Flat(v) });
        }
    }
    by_comp.into_values().filter_map(|edges| ProperGraph::new(-1, vec![VertexKind::Puncture], edges).ok()).collect()
}

pub fn projections(c: &VeeringComplex, opts: SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let ys = match pivot_annuli(c) {
        Ok(ys) => ys,
        Err(e) => return vec![CheckRecord::new("projections/pivots", "pivot annuli").skipped(e.to_string())],
    };
    let per = (opts.samples / ys.len().max(1)).max(20);
    let mut rng = rng(opts.seed, "projections");
    for (i, spec) in ys.iter().enumerate() {
        let r = CheckRecord::new(format!("projections/y{i:03}/annular-diameter"), "annular projections of τ-edge sets have diameter ≤ 3")
            .input("subsurface", spec)
            .input("sections", per);
        let y = match Subsurface::resolve(c, spec) {
            Ok(y) => y,
            Err(e) => {
                out.push(r.skipped(e.to_string()));
                continue;
            }
        };
        let (mut worst, mut empty, mut errors) = (0i64, 0, 0);
        for _ in 0..per {
            let s = starts(c, &mut rng);
            let t = random_section(c, &mut rng, s, 8);
            match proj_section(c, &y, &t).and_then(|p| Ok((p.is_empty(), p.diameter()?.value))) {
                Ok((true, _)) => empty += 1,
                Ok((false, d)) => worst = worst.max(d as i64),
                Err(_) => errors += 1,
            }
        }
        let r = r.input("empty_projections", empty).leq(worst, 3);
        out.push(if errors > 0 { r.status(veerlat::report::CheckStatus::Fail).slack(format!("{errors} projection errors")) } else { r });
    }
    let mut worst = 0i64;
    let mut errors = 0;
    for _ in 0..opts.samples {
        let s = starts(c, &mut rng);
        let t = random_section(c, &mut rng, s, 8);
        for g in section_graphs(c, &t) {
            match diam_as(&g) {
                Ok(b) => worst = worst.max(b.value as i64),
                Err(_) => errors += 1,
            }
        }
    }
    out.push(
        CheckRecord::new("projections/graph-diameter-bound", "diameter of A_S(G) ≤ D for section graphs")
            .input("sections", opts.samples)
            .input("errors", errors)
            .leq(worst + if errors > 0 { D + 1 } else { 0 }, D),
    );
    out
}

const POCKET_CHECKS: [&str; 5] = ["maximal-pocket-size", "retraction-", "stays-close", "isolated", "interior-identity"];

fn subsurface_checks(c: &VeeringComplex, opts: SuiteOptions, pockets: bool, theorems: bool) -> Vec<CheckRecord> {
    let ys = match pivot_annuli(c) {
        Ok(ys) => ys,
        Err(e) => return vec![CheckRecord::new("theorems/pivots", "pivot annuli").skipped(e.to_string())],
    };
    let copts = CheckOptions { seed: opts.seed, samples: 20, pairs: 50, research_mode: opts.research_mode };
    theorem_checks(c, &ys, copts)
        .into_iter()
        .filter_map(|mut r| {
            let name = r.check_id.split('/').nth(1).unwrap_or("");
            let is_pocket = POCKET_CHECKS.iter().any(|p| name.starts_with(p));
            let suite = if is_pocket { "pockets" } else { "theorems" };
            if (is_pocket && !pockets) || (!is_pocket && !theorems) {
                return None;
            }
            r.check_id = format!("{suite}/{}", r.check_id);
            Some(r)
        })
        .collect()
}

/// Hand-checked bound values: `(rule, i, ζ or χ, expected)`.
pub const BOUND_TABLE: [(&str, u64, i64, u64); 20] = [
    ("bowditch", 0, 3, 2),
    ("bowditch", 4, 4, 2),
    ("bowditch", 5, 4, 4),
    ("bowditch", 32, 4, 8),
    ("bowditch", 33, 4, 10),
    ("bowditch", 3, 3, 2),
    ("bowditch", 9, 3, 8),
    ("bowditch", 10, 3, 8),
    ("bowditch", 100, 10, 6),
    ("chi", 0, -1, 1),
    ("chi", 12, -1, 15),
    ("chi", 13, -1, 18),
    ("chi", 40, -1, 18),
    ("chi", 41, -1, 18),
    ("chi", 1024, -1, 22),
    ("chi", 20, -2, 15),
    ("chi", 21, -2, 18),
    ("chi", 72, -2, 18),
    ("chi", 73, -2, 18),
    ("chi", 1 << 20, -3, 42),
];

fn slopes(n: i128) -> Vec<Slope> {
    let mut out = Vec::new();
    for p in -n..=n {
        for q in 0..=n {
            if let Ok(s) = Slope::new(p, q) {
                if s.p() == p && s.q() == q {
                    out.push(s);
                }
            }
        }
    }
    out
}

pub fn bounds() -> Vec<CheckRecord> {
    let mut out: Vec<CheckRecord> = BOUND_TABLE
        .iter()
        .map(|&(rule, i, z, want)| {
            let got = match rule {
                "bowditch" => bowditch_bound(i, z as u64).map(|b| b.value as i64).unwrap_or(-1),
                _ => chi_intersection_bound(i, z).value as i64,
            };
            let param = if rule == "bowditch" { "zeta" } else { "chi" };
            CheckRecord::new(format!("bounds/{rule}-i{i}-{param}{z}"), format!("{rule} threshold arithmetic"))
                .input("i", i)
                .input(param, z)
                .eq(got, want as i64)
        })
        .collect();
    let all = slopes(20);
    let (worst_margin, violations, pairs) = all
        .par_iter()
        .map(|a| {
            let mut worst = i64::MIN;
            let mut bad = 0;
            let mut n = 0;
            for b in &all {
                let i = a.cross(b).unwrap_or(0) as u64;
                if i == 0 {
                    continue;
                }
                n += 1;
                let d = farey_distance(*a, *b).map(|d| d as i64).unwrap_or(i64::MAX);
                let bound = veerlat::metrics::bounds::ceil_two_log2(i) as i64 + 2;
                worst = worst.max(d - bound);
                bad += usize::from(d > bound);
            }
            (worst, bad, n)
        })
        .reduce(|| (i64::MIN, 0, 0), |x, y| (x.0.max(y.0), x.1 + y.1, x.2 + y.2));
    out.push(
        count(
            CheckRecord::new("bounds/farey-log-bound", "d(α,β) ≤ 2·log₂ i(α,β) + 2 on the Farey graph")
                .input("range", "|p|,|q| ≤ 20")
                .input("pairs", pairs)
                .input("worst_margin", worst_margin),
            violations,
        ),
    );
    let mut monotone = 0;
    for chi in [-1, -2, -3] {
        for i in 0..2000u64 {
            monotone += usize::from(chi_intersection_bound(i, chi).value > chi_intersection_bound(i + 1, chi).value);
        }
    }
    for zeta in 3..8 {
        for i in 0..2000u64 {
            let (a, b) = (bowditch_bound(i, zeta), bowditch_bound(i + 1, zeta));
            monotone += usize::from(matches!((a, b), (Ok(a), Ok(b)) if a.value > b.value));
        }
    }
    out.push(count(CheckRecord::new("bounds/monotone", "bound calculators are nondecreasing in i"), monotone));
    out
}
