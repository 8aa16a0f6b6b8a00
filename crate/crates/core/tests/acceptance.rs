//! Acceptance gate: one pass/fail line per criterion, exit status 1 if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use realspherical::cli::analyze::Analysis;
use realspherical::cli::{catalog, hyperboloid_polar_demo};

const POLAR_SAMPLES: usize = 10_000;
const POLAR_RESIDUAL: f64 = 1e-9;
const INTERIOR_DISTANCE: f64 = 1e-6;
const EXTERIOR_DISTANCE: f64 = 1e-3;
const FUZZ_CASES: usize = 500;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("took {elapsed:.2?}, limit {limit:?}"),
    )
}

fn analyze_all() -> Vec<(&'static str, Analysis)> {
    catalog::list()
        .into_iter()
        .map(|n| (n, common::analyze_fixture(n, false)))
        .collect()
}

fn hyperboloid() -> Outcome {
    let start = Instant::now();
    let a = common::analyze_fixture("sl2_so11", false);
    let elapsed = start.elapsed();
    let rd = &a.space.rd;
    let two_alpha = rd
        .root(rd.simple_roots()[0])
        .covector
        .scale(&common::int(2));
    let on_a_z = rd
        .restrict(&two_alpha, &a.splitting.a_z)
        .ok_or("2α does not restrict")?;
    let c = &a.compression;
    ensure(
        a.splitting.q.marked_simple.is_empty() && a.splitting.q.q == a.space.p,
        "Q ≠ P",
    )?;
    ensure(a.splitting.rank == 1, "rank ≠ 1")?;
    ensure(
        c.monoid_generators == vec![on_a_z],
        "monoid generators ≠ {2α}",
    )?;
    ensure(
        c.cone.rays() == [common::v(&[-1])] && c.cone.lineality_basis().is_empty(),
        "cone is not the negative ray",
    )?;
    ensure(
        c.sharp && c.wavefront && c.edge.is_zero(),
        "not sharp, wavefront, edge 0",
    )?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!(
        "S = ∅, rank 1, ℳ = {{2α}} = {{{}}}, 𝔞_Z⁻ = ℝ≤0, {elapsed:.0?}",
        c.monoid_generators[0]
    ))
}

fn polar() -> Outcome {
    let start = Instant::now();
    let with = hyperboloid_polar_demo(POLAR_SAMPLES, 0, true);
    let without = hyperboloid_polar_demo(POLAR_SAMPLES, 0, false);
    let elapsed = start.elapsed();
    ensure(
        with.decomposed == POLAR_SAMPLES,
        format!("coverage with flip {}", with.coverage),
    )?;
    ensure(
        with.max_residual < POLAR_RESIDUAL,
        format!("residual {:e}", with.max_residual),
    )?;
    ensure(
        without.decomposed < POLAR_SAMPLES,
        "coverage without flip is 100%",
    )?;
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "F″ = {{1, w}}: 100% at residual {:.1e}; F″ = {{1}}: {:.2}%; {elapsed:.0?}",
        with.max_residual,
        100.0 * without.coverage
    ))
}

fn horospherical() -> Outcome {
    let a = common::analyze_fixture("sl2_n", true);
    let c = &a.compression;
    ensure(c.cone.is_full(), "cone is not all of 𝔞_Z")?;
    ensure(c.edge.is_full(), "edge ≠ 𝔞_Z")?;
    ensure(!c.sharp && !c.wavefront, "sharp or wavefront")?;
    ensure(!a.normalizer.a_tilde_h.is_zero(), "ã_h = 0")?;
    Ok(format!(
        "cone = edge = 𝔞_Z, not sharp, not wavefront, dim ã_h = {}",
        a.normalizer.a_tilde_h.dim()
    ))
}

fn symmetric_wavefront(all: &[(&str, Analysis)]) -> Outcome {
    let symmetric = ["sl2_so2", "sl2_so11", "sl3_so21", "sl2xsl2_diag"];
    for (name, a) in all.iter().filter(|(n, _)| symmetric.contains(n)) {
        ensure(a.compression.wavefront, format!("{name} is not wavefront"))?;
    }
    Ok(format!("{} symmetric fixtures wavefront", symmetric.len()))
}

fn oracle(all: &[(&str, Analysis)], elapsed: Duration) -> Outcome {
    for (name, a) in all {
        ensure(
            a.compression.cone == a.compression.oracle_cone,
            format!("{name}: monoid cone ≠ Plücker cone"),
        )?;
    }
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!(
        "{} fixtures agree, {elapsed:.0?} for every analysis",
        all.len()
    ))
}

fn degeneration(all: &[(&str, Analysis)]) -> Outcome {
    let mut worst_in: f64 = 0.0;
    let mut worst_out = f64::INFINITY;
    for (name, a) in all {
        let g = a
            .report
            .grasslimit
            .as_ref()
            .ok_or("numeric check skipped")?;
        ensure(
            g.samples == 5 && g.tmax == 50,
            format!("{name}: unexpected options"),
        )?;
        ensure(
            g.interior_max_late_distance < INTERIOR_DISTANCE,
            format!(
                "{name}: interior distance {:e}",
                g.interior_max_late_distance
            ),
        )?;
        worst_in = worst_in.max(g.interior_max_late_distance);
        match g.exterior_min_distance {
            Some(d) => {
                ensure(
                    g.exterior_verdicts.len() == 5,
                    format!("{name}: exterior samples"),
                )?;
                ensure(
                    d >= EXTERIOR_DISTANCE,
                    format!("{name}: exterior distance {d:e}"),
                )?;
                worst_out = worst_out.min(d);
            }
            None => ensure(g.exterior_vacuous, format!("{name}: no exterior samples"))?,
        }
    }
    Ok(format!(
        "interior ≤ {worst_in:.1e} for t ≥ 40, exterior ≥ {worst_out:.2e} on [20, 50] (sl2_n has no exterior)"
    ))
}

fn structural(all: &[(&str, Analysis)]) -> Outcome {
    for (name, a) in all {
        let (g, h, ss) = (&a.space.g, &a.space.h, &a.splitting);
        let q = &ss.q;
        let deco = h.dim() + ss.a_z.dim() + ss.m_z.dim() + q.u.dim() == g.dim()
            && h.sum(&ss.a_z)
                .and_then(|s| s.sum(&ss.m_z))
                .and_then(|s| s.sum(&q.u))
                .map_err(|e| e.to_string())?
                .is_full();
        ensure(deco, format!("{name}: 𝔥 ⊕ 𝔞_Z ⊕ 𝔪_Z ⊕ 𝔲 ≠ 𝔤"))?;
        let q_cap_h = q.q.intersect(h).map_err(|e| e.to_string())?;
        let sandwich = q_cap_h.contains(&q.l_n).map_err(|e| e.to_string())?
            && q.l.contains(&q_cap_h).map_err(|e| e.to_string())?;
        ensure(sandwich, format!("{name}: 𝔩_n ⊆ 𝔮 ∩ 𝔥 ⊆ 𝔩 fails"))?;
        ensure(
            a.space.adapted_subsets().map_err(|e| e.to_string())?.len() == 1,
            format!("{name}: adapted subset not unique"),
        )?;
        ensure(
            a.compression.h_lim.dim() == h.dim(),
            format!("{name}: dim 𝔥_lim ≠ dim 𝔥"),
        )?;
        ensure(
            a.compression.cone.contains(&a.compression.chamber_image),
            format!("{name}: chamber image ⊄ 𝔞_Z⁻"),
        )?;
    }
    Ok(format!(
        "decomposition, sandwich, uniqueness, dim 𝔥_lim, chamber image on {} fixtures",
        all.len()
    ))
}

fn cone_toolkit() -> Outcome {
    let start = Instant::now();
    let mut rng = common::rng(2024);
    for case in 0..FUZZ_CASES {
        let dim = 1 + case % 4;
        let gens = common::random_vectors(&mut rng, dim, 6, 3);
        let ineqs = common::random_vectors(&mut rng, dim, 6, 3);
        let extra = common::random_vectors(&mut rng, dim, 8, 4);
        common::dual_is_involution(dim, &gens)?;
        common::dd_agrees_with_fm(dim, &gens, &ineqs, &extra)?;
        common::edge_is_equality_kernel(dim, &ineqs)?;
        let a = common::random_vectors(&mut rng, dim, 5, 3);
        let b = common::random_vectors(&mut rng, dim, 5, 3);
        common::support_union_law(dim, &a, &b)?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "{FUZZ_CASES} cones and {FUZZ_CASES} covector set pairs in dim ≤ 4, {elapsed:.0?}"
    ))
}

fn main() -> ExitCode {
    let mut results: Vec<(usize, &str, Outcome)> = vec![
        (1, "hyperboloid structure", hyperboloid()),
        (2, "polar decomposition witness", polar()),
        (3, "horospherical contrast", horospherical()),
    ];
    let start = Instant::now();
    let all = analyze_all();
    let elapsed = start.elapsed();
    results.push((
        4,
        "symmetric spaces are wavefront",
        symmetric_wavefront(&all),
    ));
    results.push((5, "monoid cone = Plücker cone", oracle(&all, elapsed)));
    results.push((6, "Grassmannian degeneration", degeneration(&all)));
    results.push((7, "structural invariants", structural(&all)));
    results.push((8, "cone toolkit properties", cone_toolkit()));

    let mut failed = 0;
    for (n, title, r) in &results {
        match r {
            Ok(detail) => println!("criterion {n} PASS  {title}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} FAIL  {title}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
