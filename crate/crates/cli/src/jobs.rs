//! Job specifications and the bound / certificate / verify pipelines.

use std::path::PathBuf;

use gtwidth::oracle::{self, psi, sampling};
use gtwidth::schema::{
    BoundReport, CertificateDto, EdgeCheckDto, PolytopeDto, PsiDto, SampleDto, SlabDto,
    VerifyReport, VertexCheckDto, WeightDto,
};
use gtwidth::{polytope, rational, Error, Family, GroupSpec, Weight};
use serde::{Deserialize, Serialize};

pub const OK: u8 = 0;
pub const CHECK_FAILED: u8 = 1;
pub const BAD_INPUT: u8 = 2;
pub const POINT_ORBIT: u8 = 3;
pub const INTERNAL: u8 = 4;

/// An entry of `λ`: an integer, or a string holding an integer or `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalInput {
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub samples: Option<usize>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
    pub psi: Option<usize>,
    pub psi_points: Option<usize>,
    pub emit_hrep: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub command: String,
    pub group: Family,
    pub n: usize,
    pub lambda: Vec<RationalInput>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Bound(BoundReport),
    Certificate(Box<CertificateDto>),
    Verify(Box<VerifyReport>),
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        match self {
            Report::Verify(v) if !v.pass => CHECK_FAILED,
            _ => OK,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn bad_input(message: String) -> Self {
        Failure {
            code: BAD_INPUT,
            message,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::PointOrbit => POINT_ORBIT,
            e if e.is_internal() => INTERNAL,
            Error::ConstantMismatch { .. } | Error::DomainViolation(_) | Error::UnknownBox(_) => {
                INTERNAL
            }
            _ => BAD_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn default_seed() -> u64 {
    std::env::var("GTWIDTH_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0)
}

impl Job {
    pub fn weight(&self) -> Result<Weight, Failure> {
        if self.lambda.len() != self.n {
            return Err(Failure::bad_input(format!(
                "λ has {} entries but n = {}",
                self.lambda.len(),
                self.n
            )));
        }
        let group = GroupSpec::new(self.group, self.n)?;
        let entries = self
            .lambda
            .iter()
            .map(|e| match e {
                RationalInput::Int(i) => Ok(rational::int(*i)),
                RationalInput::Text(s) => rational::parse(s).map_err(Failure::bad_input),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Weight::new(group, entries)?)
    }
}

pub fn run(job: &Job) -> Result<Report, Failure> {
    let w = job.weight()?;
    match job.command.as_str() {
        "bound" => Ok(Report::Bound(BoundReport::compute(&w)?)),
        "certificate" => certificate(&w, job.options.emit_hrep.as_ref()),
        "verify" => verify(&w, &job.options).map(|r| Report::Verify(Box::new(r))),
        other => Err(Failure::bad_input(format!(
            "unknown command `{other}` (expected bound, certificate or verify)"
        ))),
    }
}

fn certificate(w: &Weight, emit_hrep: Option<&PathBuf>) -> Result<Report, Failure> {
    let c = polytope::certificate(w)?;
    if let Some(path) = emit_hrep {
        let dto = PolytopeDto::from(&polytope::hrep(w)?);
        let json = serde_json::to_string_pretty(&dto).expect("polytope serializes");
        std::fs::write(path, json + "\n")
            .map_err(|e| Failure::bad_input(format!("{}: {e}", path.display())))?;
    }
    Ok(Report::Certificate(Box::new(CertificateDto::from(&c))))
}

fn verify(w: &Weight, o: &Options) -> Result<VerifyReport, Failure> {
    let p = polytope::hrep(w)?;
    let v = polytope::vertex_v(w)?;
    let edges = polytope::edges(w)?
        .iter()
        .map(|e| oracle::edge_check(&p, e, &v).map(|c| EdgeCheckDto::from(&c)))
        .collect::<Result<Vec<_>, _>>()?;
    let rank = oracle::active_rank(&p, &v)?;
    let vertex = VertexCheckDto {
        active_rank: rank,
        n_boxes: p.dim(),
        pass: p.contains(&v)? && rank == p.dim(),
    };
    let seed = o.seed.unwrap_or_else(default_seed);
    let tol = o.tol.unwrap_or(sampling::MEMBERSHIP_TOL);
    let samples = oracle::montecarlo_membership(w, o.samples.unwrap_or(1000), tol, seed)?;
    let slab = oracle::slab_check(&p)?.map(|s| SlabDto::from(&s));
    let psi = match o.psi {
        Some(n) => {
            let points = o.psi_points.unwrap_or(1000);
            let dev = oracle::psi_symplectic_check(n, points, seed)?;
            Some(PsiDto {
                n,
                points,
                max_deviation: dev,
                tolerance: psi::JACOBIAN_TOL,
                pass: dev < psi::JACOBIAN_TOL,
            })
        }
        None => None,
    };
    let pass = edges.iter().all(|e| e.pass)
        && vertex.pass
        && samples.pass
        && slab.as_ref().is_none_or(|s| s.pass)
        && psi.as_ref().is_none_or(|s| s.pass);
    Ok(VerifyReport {
        weight: WeightDto::from_weight(w),
        edges,
        vertex,
        membership: SampleDto::from(&samples),
        slab,
        psi,
        pass,
    })
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    error: &'a Failure,
}

/// Runs one batch line; returns the output line and its exit code.
pub fn run_line(line: &str) -> (String, u8) {
    let result = serde_json::from_str::<Job>(line)
        .map_err(|e| Failure::bad_input(format!("invalid job: {e}")))
        .and_then(|job| run(&job));
    match result {
        Ok(r) => (
            serde_json::to_string(&r).expect("reports serialize"),
            r.exit_code(),
        ),
        Err(f) => (
            serde_json::to_string(&ErrorLine { error: &f }).expect("errors serialize"),
            f.code,
        ),
    }
}
