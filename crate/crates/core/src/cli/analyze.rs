use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::compression::{a_z_coords, compression_cone, CompressionReport};
use crate::exactalg::{format_rational, Matrix, Rational, Subspace, Vector};
use crate::grasslimit::{default_schedule, verify_cone, Thresholds};
use crate::liecore::families::{
    cartan_coords, diagonal_subalgebra, involution_fixed_points, product, sl, so, sp,
};
use crate::liecore::{InvolutionKind, LieAlgebraRealization, LieError, NamedAlgebra, RootDatum};
use crate::spherical::{find_open_parabolic, NormalizerData, SphericalSpace, StructureSplitting};

use super::format::{AlgebraSpec, Family, InvolutionKindSpec, SpaceDescription, SubalgebraSpec};

/// An error tagged with the pipeline stage that raised it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{stage}: {message}")]
pub struct AnalyzeError {
    pub stage: &'static str,
    pub message: String,
    /// Input problems (as opposed to failed checks on valid input).
    pub input_error: bool,
}

fn input(stage: &'static str, e: impl ToString) -> AnalyzeError {
    AnalyzeError {
        stage,
        message: e.to_string(),
        input_error: true,
    }
}

fn internal(stage: &'static str, e: impl ToString) -> AnalyzeError {
    AnalyzeError {
        stage,
        message: e.to_string(),
        input_error: false,
    }
}

fn named(spec: &AlgebraSpec) -> Result<Option<NamedAlgebra>, LieError> {
    let Some(family) = spec.family else {
        return Ok(None);
    };
    let arg = |i: usize| {
        spec.params.get(i).copied().ok_or_else(|| {
            LieError::BadFamily(format!(
                "{family:?} expects more parameters than {:?}",
                spec.params
            ))
        })
    };
    let fam = match family {
        Family::Sl => sl(arg(0)?)?,
        Family::So => so(arg(0)?, arg(1)?)?,
        Family::Sp => sp(arg(0)?)?,
        Family::Product => {
            let factors = spec
                .factors
                .iter()
                .map(|f| {
                    named(f)?.ok_or_else(|| {
                        LieError::BadFamily("product factors must be families".into())
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            product(&factors)?
        }
    };
    Ok(Some(fam))
}

fn product_factors(spec: &AlgebraSpec) -> Result<Vec<NamedAlgebra>, LieError> {
    if spec.family != Some(Family::Product) {
        return Err(LieError::BadFamily(
            "\"diagonal\" needs a product algebra".into(),
        ));
    }
    spec.factors
        .iter()
        .map(|f| {
            named(f)?.ok_or_else(|| LieError::BadFamily("product factors must be families".into()))
        })
        .collect()
}

/// Finds a regular element `(1, m, m², …)` when no seed is given.
fn regular_datum(g: Arc<LieAlgebraRealization>, a: Subspace) -> Result<RootDatum, LieError> {
    let r = a.dim();
    let mut last = None;
    for m in 2..66i64 {
        let seed: Vector = (0..r)
            .map(|k| Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(m), k)))
            .collect();
        match RootDatum::new(g.clone(), a.clone(), &seed) {
            Err(LieError::SeedVanishes(s)) => last = Some(s),
            other => return other,
        }
    }
    Err(LieError::SeedVanishes(last.unwrap_or_default()))
}

/// Builds the root datum and `𝔥` from a description.
pub fn build_space(desc: &SpaceDescription) -> Result<(RootDatum, Subspace), AnalyzeError> {
    let stage = "build";
    let fam = named(&desc.algebra).map_err(|e| input(stage, e))?;
    let (g, default_cartan, default_seed) = match (&fam, &desc.algebra.basis) {
        (Some(f), None) => (
            Arc::new(f.realize().map_err(|e| input(stage, e))?),
            Some(f.cartan.clone()),
            Some(f.seed.clone()),
        ),
        (None, Some(basis)) => (
            Arc::new(
                LieAlgebraRealization::build(basis.iter().map(|m| m.0.clone()).collect())
                    .map_err(|e| input(stage, e))?,
            ),
            None,
            None,
        ),
        _ => {
            return Err(input(
                stage,
                "algebra needs exactly one of `family` or `basis`",
            ))
        }
    };
    let cartan: Vec<Matrix> = match (&desc.cartan, default_cartan) {
        (Some(c), _) => c.iter().map(|m| m.0.clone()).collect(),
        (None, Some(c)) => c,
        (None, None) => return Err(input(stage, "an explicit basis needs `cartan`")),
    };
    let a = g.span(&cartan_coords(&g, &cartan).map_err(|e| input(stage, e))?);
    let seed: Option<Vector> = match &desc.seed {
        Some(s) => Some(s.iter().map(|q| q.0.clone()).collect()),
        None if desc.cartan.is_none() => default_seed,
        None => None,
    };
    let rd = match seed {
        Some(s) => RootDatum::new(g.clone(), a, &s),
        None => regular_datum(g.clone(), a),
    }
    .map_err(|e| input("root datum", e))?;

    let h_vectors: Vec<Vector> = match &desc.subalgebra {
        SubalgebraSpec::Basis(b) => b
            .iter()
            .enumerate()
            .map(|(i, m)| {
                g.coords_of(&m.0)
                    .ok_or_else(|| input(stage, format!("subalgebra basis matrix {i} is not in 𝔤")))
            })
            .collect::<Result<_, _>>()?,
        SubalgebraSpec::Involution { matrix, kind } => {
            let kind = match kind {
                InvolutionKindSpec::Conjugation => InvolutionKind::Conjugation,
                InvolutionKindSpec::Form => InvolutionKind::Form,
            };
            involution_fixed_points(&g, &matrix.0, kind).map_err(|e| input(stage, e))?
        }
        SubalgebraSpec::Diagonal => {
            let factors = product_factors(&desc.algebra).map_err(|e| input(stage, e))?;
            diagonal_subalgebra(&factors)
                .map_err(|e| input(stage, e))?
                .iter()
                .map(|m| g.coords_of(m).expect("diagonal lies in the product"))
                .collect()
        }
    };
    let h = Subspace::span(g.dim(), &h_vectors).map_err(|e| input(stage, e))?;
    Ok((rd, h))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dimensions {
    pub g: usize,
    pub h: usize,
    pub a: usize,
    pub m: usize,
    pub p: usize,
    pub q: usize,
    pub l: usize,
    pub u: usize,
    pub l_n: usize,
    pub l_c: usize,
    pub z_l: usize,
    pub a_h: usize,
    pub a_z: usize,
    pub m_h: usize,
    pub m_z: usize,
    pub d_h: usize,
    pub h_lim: usize,
    pub n_g_h: usize,
    pub a_tilde_h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSummary {
    pub rays: Vec<Vec<String>>,
    pub lineality: Vec<Vec<String>>,
    pub inequalities: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericSummary {
    pub samples: usize,
    pub seed: u64,
    pub tmax: u32,
    pub interior_verdicts: Vec<String>,
    pub exterior_verdicts: Vec<String>,
    pub exterior_vacuous: bool,
    /// Largest interior distance on `t ≥ 40`.
    pub interior_max_late_distance: f64,
    /// Smallest exterior distance on `t ∈ [20, 50]`.
    pub exterior_min_distance: Option<f64>,
    pub passed: bool,
}

/// The structured analysis report. `timing_ms` is the only field that varies
/// between runs on identical input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub name: Option<String>,
    pub spherical: bool,
    /// Simple-reflection word from the input positive system to the chosen one.
    pub positive_system_word: Vec<usize>,
    pub positive_roots: Vec<Vec<String>>,
    pub simple_roots: Vec<Vec<String>>,
    pub adapted_subset: Vec<usize>,
    pub dims: Dimensions,
    pub rank: usize,
    pub a_z_basis: Vec<Vec<String>>,
    pub monoid_generators: Vec<Vec<String>>,
    pub cone: ConeSummary,
    pub oracle_cone: ConeSummary,
    pub edge_dim: usize,
    pub sharp: bool,
    pub wavefront: bool,
    pub oracle_agrees: bool,
    pub compact_quotient: bool,
    /// ã_h projected to 𝔞_Z lies in the edge.
    pub edge_contains_a_tilde_h: bool,
    /// The image of 𝔞⁻ lies in 𝔞_Z⁻.
    pub chamber_image_contained: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grasslimit: Option<NumericSummary>,
    pub timing_ms: u64,
}

impl AnalysisReport {
    /// A copy with `timing_ms` cleared, for reproducibility comparisons.
    pub fn without_timing(&self) -> Self {
        Self {
            timing_ms: 0,
            ..self.clone()
        }
    }
}

pub fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn cone_summary(c: &crate::polycone::Cone) -> ConeSummary {
    ConeSummary {
        rays: c.rays().iter().map(|r| strings(r)).collect(),
        lineality: c.lineality_basis().iter().map(|r| strings(r)).collect(),
        inequalities: c.inequalities().iter().map(|r| strings(r)).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyzeOptions {
    pub skip_numeric: bool,
    pub tmax: u32,
    pub samples: usize,
    pub seed: u64,
    pub thresholds: Thresholds,
}

impl AnalyzeOptions {
    pub fn from_description(desc: &SpaceDescription) -> Self {
        let o = &desc.options;
        let d = Thresholds::default();
        Self {
            skip_numeric: false,
            tmax: o.tmax.unwrap_or(50),
            samples: o.samples.unwrap_or(5),
            seed: o.seed.unwrap_or(0),
            thresholds: Thresholds {
                converged: o.converged_threshold.unwrap_or(d.converged),
                diverged: o.diverged_threshold.unwrap_or(d.diverged),
            },
        }
    }
}

/// Every intermediate result of an analysis.
pub struct Analysis {
    pub space: SphericalSpace,
    pub splitting: StructureSplitting,
    pub normalizer: NormalizerData,
    pub compression: CompressionReport,
    pub report: AnalysisReport,
}

pub fn analyze(desc: &SpaceDescription, opts: &AnalyzeOptions) -> Result<Analysis, AnalyzeError> {
    let start = Instant::now();
    let (rd0, h) = build_space(desc)?;
    let z = find_open_parabolic(h, &rd0).map_err(|e| internal("open parabolic", e))?;
    let ss = z
        .adapted_parabolic()
        .map_err(|e| internal("adapted parabolic", e))?;
    let nd = z.normalizer().map_err(|e| internal("normalizer", e))?;
    let comp = compression_cone(&z, &ss).map_err(|e| internal("compression cone", e))?;

    let grasslimit = if opts.skip_numeric {
        None
    } else {
        let times = default_schedule(opts.tmax);
        let s = verify_cone(
            &z,
            &ss,
            &comp,
            opts.samples,
            opts.seed,
            &times,
            opts.thresholds,
        )
        .map_err(|e| internal("grasslimit", e))?;
        let tmax = f64::from(opts.tmax);
        Some(NumericSummary {
            samples: opts.samples,
            seed: opts.seed,
            tmax: opts.tmax,
            interior_verdicts: s
                .interior
                .iter()
                .map(|t| t.verdict.as_str().into())
                .collect(),
            exterior_verdicts: s
                .exterior
                .iter()
                .map(|t| t.verdict.as_str().into())
                .collect(),
            exterior_vacuous: s.exterior_vacuous,
            interior_max_late_distance: s
                .interior
                .iter()
                .map(|t| t.max_distance_on(40f64.min(tmax), tmax))
                .fold(0.0, f64::max),
            exterior_min_distance: (!s.exterior.is_empty()).then(|| {
                s.exterior
                    .iter()
                    .map(|t| t.min_distance_on(20f64.min(tmax), tmax))
                    .fold(f64::INFINITY, f64::min)
            }),
            passed: s.passed(),
        })
    };

    let rd = &z.rd;
    let a_tilde_in_a_z: Vec<Vector> = nd
        .a_tilde_h
        .basis()
        .iter()
        .map(|x| a_z_coords(&z, &ss, x))
        .collect();
    let edge_contains_a_tilde_h = a_tilde_in_a_z.iter().all(|x| comp.edge.contains_vector(x));
    let dims = Dimensions {
        g: z.g.dim(),
        h: z.h.dim(),
        a: rd.rank(),
        m: rd.m_space().dim(),
        p: z.p.dim(),
        q: ss.q.q.dim(),
        l: ss.q.l.dim(),
        u: ss.q.u.dim(),
        l_n: ss.q.l_n.dim(),
        l_c: ss.q.l_c.dim(),
        z_l: ss.q.z_l.dim(),
        a_h: ss.a_h.dim(),
        a_z: ss.a_z.dim(),
        m_h: ss.m_h.dim(),
        m_z: ss.m_z_dim(),
        d_h: ss.d_h.dim(),
        h_lim: comp.h_lim.dim(),
        n_g_h: nd.n_g_h.dim(),
        a_tilde_h: nd.a_tilde_h.dim(),
    };
    let report = AnalysisReport {
        name: desc.name.clone(),
        spherical: true,
        positive_system_word: rd.word().to_vec(),
        positive_roots: rd
            .positive_roots()
            .map(|i| strings(&rd.root(i).covector.0))
            .collect(),
        simple_roots: rd
            .simple_roots()
            .iter()
            .map(|&i| strings(&rd.root(i).covector.0))
            .collect(),
        adapted_subset: ss.q.marked_simple.clone(),
        dims,
        rank: ss.rank,
        a_z_basis: ss.a_z.basis().iter().map(|b| strings(b)).collect(),
        monoid_generators: comp
            .monoid_generators
            .iter()
            .map(|c| strings(&c.0))
            .collect(),
        cone: cone_summary(&comp.cone),
        oracle_cone: cone_summary(&comp.oracle_cone),
        edge_dim: comp.edge.dim(),
        sharp: comp.sharp,
        wavefront: comp.wavefront,
        oracle_agrees: comp.oracle_agrees,
        compact_quotient: nd.compact_quotient,
        edge_contains_a_tilde_h,
        chamber_image_contained: comp.cone.contains(&comp.chamber_image),
        grasslimit,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    Ok(Analysis {
        space: z,
        splitting: ss,
        normalizer: nd,
        compression: comp,
        report,
    })
}

fn list(v: &[Vec<String>]) -> String {
    let inner: Vec<String> = v.iter().map(|x| format!("({})", x.join(", "))).collect();
    format!("[{}]", inner.join(", "))
}

/// Human-readable rendering of a report.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<26}{v}\n"));
    if let Some(n) = &r.name {
        line("space", n.clone());
    }
    line("spherical", r.spherical.to_string());
    line(
        "positive system word",
        format!("{:?}", r.positive_system_word),
    );
    line("positive roots", list(&r.positive_roots));
    line("simple roots", list(&r.simple_roots));
    line("adapted subset S", format!("{:?}", r.adapted_subset));
    let d = &r.dims;
    line(
        "dimensions",
        format!(
            "g={} h={} a={} m={} p={} q={} l={} u={} l_n={} l_c={} z(l)={}",
            d.g, d.h, d.a, d.m, d.p, d.q, d.l, d.u, d.l_n, d.l_c, d.z_l
        ),
    );
    line(
        "",
        format!(
            "a_h={} a_Z={} m_h={} m_Z={} d_H={} h_lim={} n(h)={} a~_h={}",
            d.a_h, d.a_z, d.m_h, d.m_z, d.d_h, d.h_lim, d.n_g_h, d.a_tilde_h
        ),
    );
    line("rank", r.rank.to_string());
    line("a_Z basis", list(&r.a_z_basis));
    line("monoid generators", list(&r.monoid_generators));
    line("cone rays", list(&r.cone.rays));
    line("cone lineality", list(&r.cone.lineality));
    line("cone inequalities", list(&r.cone.inequalities));
    line("edge dim", r.edge_dim.to_string());
    line("sharp", r.sharp.to_string());
    line("wavefront", r.wavefront.to_string());
    line("oracle agrees", r.oracle_agrees.to_string());
    line("compact N(H)/H", r.compact_quotient.to_string());
    line("edge contains a~_h", r.edge_contains_a_tilde_h.to_string());
    line(
        "chamber image in cone",
        r.chamber_image_contained.to_string(),
    );
    if let Some(g) = &r.grasslimit {
        line(
            "grassmannian limit",
            format!(
                "{} (interior {:?}, exterior {:?}{})",
                if g.passed { "pass" } else { "FAIL" },
                g.interior_verdicts,
                g.exterior_verdicts,
                if g.exterior_vacuous {
                    ", no exterior points"
                } else {
                    ""
                }
            ),
        );
    }
    line("time", format!("{} ms", r.timing_ms));
    out
}
