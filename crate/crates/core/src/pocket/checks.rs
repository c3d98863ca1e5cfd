//! Instance checks of the projection, pocket and main-bound inequalities
//! on annuli of torus bundles.

use super::pockets::{
    first_translate_overlap, isolated_pocket, maximal_pocket, pocket_region, retract_both, IsolationOptions,
    Subsurface,
};
use super::projection::{d_y, d_y_point, lambda_distance, lambda_projection, proj_section, Projection};
use super::subsurface::SubsurfaceSpec;
use crate::error::Result;
use crate::metrics::{annular_diameter, CONSTANTS, D};
use crate::report::{sort_records, CheckRecord, CheckStatus};
use crate::section::{monotone_path, Section};
use crate::veering::VeeringComplex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub seed: u64,
    /// Random sections per sampled check.
    pub samples: usize,
    /// Pairs for the interior identity.
    pub pairs: usize,
    pub research_mode: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { seed: 0, samples: 20, pairs: 50, research_mode: false }
    }
}

const SLACK: &str = "annular diameter of a union; ±2 against min-distance conventions";

/// Runs every check on every subsurface, in parallel; records are sorted
/// by check id.
pub fn theorem_checks(c: &VeeringComplex, ys: &[SubsurfaceSpec], opts: CheckOptions) -> Vec<CheckRecord> {
    let mut out: Vec<CheckRecord> = ys
        .par_iter()
        .enumerate()
        .flat_map(|(i, y)| {
            let label = format!("{:03}", i);
            match subsurface_checks(c, y, &label, opts, i as u64) {
                Ok(v) => v,
                Err(e) => vec![CheckRecord::new(format!("y{label}/resolve"), "subsurface resolution")
                    .input("subsurface", y)
                    .status(CheckStatus::Fail)
                    .slack(e.to_string())],
            }
        })
        .collect();
    sort_records(&mut out);
    out
}

fn rec(label: &str, name: &str, anchor: &str, y: &SubsurfaceSpec) -> CheckRecord {
    CheckRecord::new(format!("y{label}/{name}"), anchor).input("subsurface", y)
}

fn subsurface_checks(c: &VeeringComplex, spec: &SubsurfaceSpec, label: &str, opts: CheckOptions, salt: u64) -> Result<Vec<CheckRecord>> {
    let y = Subsurface::resolve(c, spec)?;
    if y.annulus.is_none() || c.flat().is_none() {
        return nonannular_checks(c, &y, label);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut out = Vec::new();
    let m = c.period();
    let f = m;
    let chi_p = y.chi_prime(c)?;
    let dist = lambda_distance(c, &y)? as i64;
    let [lm, lp] = lambda_projection(c, &y)?;
    let compatible = dist >= 4;
    let r = |name: &str, anchor: &str| rec(label, name, anchor, spec).input("d_lambda", dist).input("compatible", compatible);

    out.push(
        r("main-bound", "main theorem: |χ′(Y)|·(d_Y(λ⁻,λ⁺) − 16D) ≤ 2D·|F|")
            .input("tetrahedra", f)
            .leq(chi_p * (dist - CONSTANTS.pocket_cut), CONSTANTS.progress_step * f)
            .slack(SLACK),
    );

    let bounds = y.bounds(c)?;
    let (bottom, top) = &bounds;
    let pb = proj_section(c, &y, bottom)?;
    let pt = proj_section(c, &y, top)?;
    let d_band = d_y(&pb, &pt)? as i64;
    let maximal = maximal_pocket(c, &y)?;
    out.push(
        r("maximal-pocket-size", "pocket size: |U_Y|/|χ′(Y)| ≥ d_Y(T⁻,T⁺)/2D")
            .input("bottom", bottom)
            .input("top", top)
            .input("d_band", d_band)
            .leq(chi_p * d_band, 2 * D * maximal.count() as i64)
            .slack(SLACK),
    );

    // sections above the top and below the bottom stay near λ±
    let mut worst_plus = 0;
    let mut worst_minus = 0;
    for _ in 0..opts.samples {
        let q = Section::base(top.floor() + rng.gen_range(0..=4 * m)).join(top);
        worst_plus = worst_plus.max(d_y_point(&proj_section(c, &y, &q)?, &lp)? as i64);
        let q = Section::base(bottom.floor() - rng.gen_range(0..=4 * m)).meet(bottom);
        worst_minus = worst_minus.max(d_y_point(&proj_section(c, &y, &q)?, &lm)? as i64);
    }
    out.push(
        r("top-near-lambda-plus", "top and bottom: d_Y(Q, λ⁺) ≤ D+1 for Q ≥ T⁺")
            .input("samples", opts.samples)
            .leq(worst_plus, CONSTANTS.top_bottom_slack)
            .slack(SLACK),
    );
    out.push(
        r("bottom-near-lambda-minus", "top and bottom: d_Y(Q, λ⁻) ≤ D+1 for Q ≤ T⁻")
            .input("samples", opts.samples)
            .leq(worst_minus, CONSTANTS.top_bottom_slack)
            .slack(SLACK),
    );

    // single moves inside T(∂_τY)
    let path = monotone_path(c, bottom, top, &y.boundary)?;
    let mut cur = bottom.clone();
    let mut prev = pb.clone();
    let mut worst_step = 0;
    for &s in &path {
        cur = cur.move_up(c, s)?;
        let p = proj_section(c, &y, &cur)?;
        worst_step = worst_step.max(d_y(&prev, &p)? as i64);
        prev = p;
    }
    out.push(
        r("slowed-progress", "slowed progress: d_Y(T₁,T₂) ≤ 2D across one move")
            .input("moves", path.len())
            .leq(worst_step, CONSTANTS.progress_step)
            .slack(SLACK),
    );

    // sampled sections around the band
    let lo = bottom.floor() - 2 * m;
    let hi = top.top_step() + 2 * m;
    let mut sample: Vec<Section> = vec![bottom.clone(), top.clone()];
    for _ in 0..opts.samples {
        sample.push(Section::base(rng.gen_range(lo..=hi)));
    }
    let mut worst_diam = 0;
    let mut worst_close = 0;
    let mut formula_mismatch = 0;
    let mut idempotence = 0;
    let mut empty = 0;
    for t in &sample {
        let p = proj_section(c, &y, t)?;
        if p.is_empty() {
            empty += 1;
            continue;
        }
        worst_diam = worst_diam.max(p.diameter()?.value as i64);
        let (a, b) = retract_both(&bounds, t);
        if a != b {
            formula_mismatch += 1;
        }
        if retract_both(&bounds, &a).0 != a {
            idempotence += 1;
        }
        worst_close = worst_close.max(d_y(&p, &proj_section(c, &y, &a)?)? as i64);
    }
    out.push(
        r("annular-diameter", "annular projections of τ-edge sets have diameter ≤ 3")
            .input("sections", sample.len())
            .leq(worst_diam, CONSTANTS.annular_proj_diam),
    );
    out.push(
        r("retraction-formulas", "fiberwise retraction: T⁺∧(T⁻∨T) = T⁻∨(T⁺∧T)")
            .input("sections", sample.len())
            .eq(formula_mismatch, 0),
    );
    out.push(r("retraction-idempotent", "fiberwise retraction is idempotent").eq(idempotence, 0));
    out.push(
        r("stays-close", "stays close: d_Y(T, T^Y) ≤ 4D")
            .input("sections", sample.len())
            .input("empty_projections", empty)
            .leq(worst_close, CONSTANTS.stays_close)
            .slack(SLACK),
    );

    // translates of the core approach λ⁻
    let a = y.annulus.as_ref().unwrap();
    let mut worst_translate = 0;
    for n in 1..=5 {
        let e = a.pivot - n * m;
        if let Ok(v) = c.vector(e) {
            if let Some(pos) = a.frame.position(v)? {
                worst_translate = worst_translate.max(annular_diameter([&pos, &lm]) as i64);
            }
        }
    }
    let t = r("core-translates-near-lambda-minus", "d_Y(φⁿ(∂Y), λ⁻) ≤ 4 for n ≥ 1 when d_Y(λ⁻,λ⁺) ≥ 20");
    out.push(if dist >= 20 { t.leq(worst_translate, 4) } else { t.values(worst_translate, 4).status(CheckStatus::Recorded) });

    // projection closeness against the neighbouring orbit's annulus
    let z_edge = a.pivot + 1;
    let z = super::subsurface::AnnulusData::new(c, z_edge)?;
    match z.frame.position(a.core)? {
        Some(pos) => {
            let tau = Projection::Annular(vec![pos.clone()]);
            let classical = Projection::Annular(vec![pos]);
            out.push(
                r("projection-closeness", "d_Z(π_Z^τ(∂_τY), π_Z(∂Y)) ≤ 7")
                    .input("z_core", c.vector(z_edge)?.slope()?)
                    .leq(d_y(&tau, &classical)? as i64, CONSTANTS.proj_close),
            );
        }
        None => out.push(r("projection-closeness", "d_Z(π_Z^τ(∂_τY), π_Z(∂Y)) ≤ 7").skipped("∂Y misses the core of Z")),
    }

    out.extend(isolated_checks(c, &y, spec, label, &maximal.region, dist, chi_p, opts, &mut rng));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn isolated_checks(
    c: &VeeringComplex,
    y: &Subsurface,
    spec: &SubsurfaceSpec,
    label: &str,
    maximal: &BTreeSet<i64>,
    dist: i64,
    chi_p: i64,
    opts: CheckOptions,
    rng: &mut ChaCha8Rng,
) -> Vec<CheckRecord> {
    let r = |name: &str, anchor: &str| rec(label, name, anchor, spec).input("d_lambda", dist);
    let v = match isolated_pocket(c, y, IsolationOptions { research_mode: opts.research_mode }) {
        Ok(v) => v,
        Err(e) => return vec![r("isolated", "isolated pocket construction").skipped(e.to_string())],
    };
    let m = c.period();
    let super::PocketKind::Isolated { overlap_index: n, ref t0, t0_distance } = v.pocket.kind else { unreachable!() };
    let mut out = Vec::new();
    let gate = if v.hypothesis_met { "met" } else { "research mode" };
    out.push(
        r("isolated-t0-band", "T₀ selection: 3D ≤ d_Y(T₀, λ⁺) ≤ 5D")
            .input("t0", t0)
            .input("hypothesis", gate)
            .holds((3 * D..=5 * D).contains(&(t0_distance as i64)))
            .values(t0_distance as i64, 5 * D),
    );
    out.push(
        r("isolated-certificate-top", "d_Y(T₀^Y, λ⁺) ≤ 9D").input("hypothesis", gate).leq(v.top_certificate as i64, 9 * D),
    );
    out.push(
        r("isolated-certificate-bottom", "d_Y(Φ^N(T₀)^Y, λ⁻) ≤ 7D")
            .input("hypothesis", gate)
            .leq(v.bottom_certificate as i64, 7 * D),
    );
    out.push(
        r("isolated-right-place", "right place: d_Y(Φ^N(T₀), λ⁻) ≤ 2D+11")
            .input("hypothesis", gate)
            .input("overlap_index", n)
            .leq(v.translate_to_lambda_minus as i64, CONSTANTS.right_place)
            .slack(SLACK),
    );
    out.push(
        r("isolated-pocket-size", "pocket size: |V|/|χ′(Y)| ≥ d_Y(Φ^N(T₀)^Y, T₀^Y)/2D")
            .input("hypothesis", gate)
            .input("tetrahedra", v.pocket.count())
            .leq(chi_p * v.span as i64, 2 * D * v.pocket.count() as i64)
            .slack(SLACK),
    );
    let horizon = n + 2 * m;
    let hit = first_translate_overlap(c, &v.pocket.region, horizon);
    out.push(
        r("isolated-embedding", "Φ^i(int V) ∩ int V = ∅ for 1 ≤ i ≤ N + 2·period")
            .input("horizon", horizon)
            .input("first_overlap", hit.map_or("none".to_string(), |i| i.to_string()))
            .holds(hit.is_none()),
    );

    // interior identity on sampled ordered pairs
    let bounds = (v.pocket.bottom.clone(), v.pocket.top.clone());
    let full_bounds = match y.bounds(c) {
        Ok(b) => b,
        Err(e) => return [out, vec![r("interior-identity", "interior identity").skipped(e.to_string())]].concat(),
    };
    let lo = bounds.0.floor() - m;
    let hi = bounds.1.top_step() + m;
    let mut mismatches = 0;
    for _ in 0..opts.pairs {
        let (a, b) = (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi));
        let (t1, t2) = (Section::base(a.min(b)), Section::base(a.max(b)));
        let (r1, _) = retract_both(&full_bounds, &t1);
        let (r2, _) = retract_both(&full_bounds, &t2);
        let hat = pocket_region(c, y, &r1, &r2).unwrap_or_default();
        let direct: BTreeSet<i64> = t1.difference_from(&t2).intersection(maximal).copied().collect();
        if hat != direct {
            mismatches += 1;
        }
    }
    out.push(
        r("interior-identity", "int(Û_Y(T₁,T₂)) = int(U(T₁,T₂)) ∩ int(U_Y)")
            .input("pairs", opts.pairs)
            .eq(mismatches, 0),
    );
    out
}

fn nonannular_checks(c: &VeeringComplex, y: &Subsurface, label: &str) -> Result<Vec<CheckRecord>> {
    let spec = &y.spec;
    let t = crate::section::extend_to_section(c, &y.boundary)?;
    let p = super::projection::proj_section(c, y, &t)?;
    let r = rec(label, "nonannular-diameter", "diameter of A_Y(G) ≤ D for proper graphs", spec);
    Ok(vec![match p.diameter() {
        Ok(b) => r.values(b.value as i64, D).slack(b.rule).status(CheckStatus::BoundOnly),
        Err(e) => r.skipped(e.to_string()),
    }])
}
