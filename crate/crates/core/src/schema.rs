//! JSON report types. Rationals are strings (`"p/q"` or `"p"`), boxes are
//! `[j, k]` pairs, matrices are row-major.

use serde::{Deserialize, Serialize};

use crate::diagram::Cell;
use crate::error::{Error, Result};
use crate::lie::{self, Family, GroupSpec, Weight};
use crate::oracle::{EdgeCheck, SampleReport, SlabCheck};
use crate::polytope::{Certificate, Polytope};
use crate::rational::{self, Rational};

fn q(r: &Rational) -> String {
    rational::format(r)
}

fn qs(v: &[Rational]) -> Vec<String> {
    v.iter().map(q).collect()
}

fn cell(c: Cell) -> [i32; 2] {
    [c.j, c.k]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDto {
    pub group: Family,
    pub n: usize,
    pub lambda: Vec<String>,
}

impl WeightDto {
    pub fn from_weight(w: &Weight) -> Self {
        WeightDto {
            group: w.family(),
            n: w.n(),
            lambda: qs(w.entries()),
        }
    }

    pub fn to_weight(&self) -> Result<Weight> {
        let g = GroupSpec::new(self.group, self.n)?;
        let entries = self
            .lambda
            .iter()
            .map(|s| rational::parse(s).map_err(Error::InvalidWeight))
            .collect::<Result<Vec<_>>>()?;
        Weight::new(g, entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    #[serde(rename = "box")]
    pub cell: [i32; 2],
    pub coeff: String,
}

/// `Σ coeff · x_box ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityDto {
    pub terms: Vec<TermDto>,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDto {
    #[serde(flatten)]
    pub weight: WeightDto,
    /// Boxes in basis order.
    pub boxes: Vec<[i32; 2]>,
    /// Gelfand-Tsetlin function carried by each box.
    pub labels: Vec<String>,
    pub inequalities: Vec<InequalityDto>,
}

impl From<&Polytope> for PolytopeDto {
    fn from(p: &Polytope) -> Self {
        let d = p.diagram();
        PolytopeDto {
            weight: WeightDto::from_weight(d.weight()),
            boxes: d.boxes().iter().map(|&c| cell(c)).collect(),
            labels: d.gtable().iter().map(|(_, l)| l.to_string()).collect(),
            inequalities: p
                .inequalities()
                .iter()
                .map(|ineq| InequalityDto {
                    terms: ineq
                        .coeffs
                        .iter()
                        .map(|(c, a)| TermDto {
                            cell: cell(*c),
                            coeff: q(a),
                        })
                        .collect(),
                    rhs: q(&ineq.rhs),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDto {
    #[serde(rename = "box")]
    pub cell: [i32; 2],
    pub direction: Vec<i64>,
    pub length: String,
    pub interval: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    #[serde(flatten)]
    pub weight: WeightDto,
    pub r: String,
    pub r_prime: String,
    pub condition_star: bool,
    #[serde(rename = "N")]
    pub n_boxes: usize,
    pub boxes: Vec<[i32; 2]>,
    pub vertex: Vec<String>,
    pub w: Vec<Vec<i64>>,
    pub det: i64,
    pub edges: Vec<EdgeDto>,
    pub simplex_vertices: Vec<Vec<String>>,
    pub contained: bool,
}

impl From<&Certificate> for CertificateDto {
    fn from(c: &Certificate) -> Self {
        CertificateDto {
            weight: WeightDto::from_weight(&c.weight),
            r: q(&c.r),
            r_prime: q(&c.r_prime),
            condition_star: c.star,
            n_boxes: c.boxes.len(),
            boxes: c.boxes.iter().map(|&b| cell(b)).collect(),
            vertex: qs(&c.vertex),
            w: c.w.rows.clone(),
            det: c.w.det,
            edges: c
                .edges
                .iter()
                .map(|e| EdgeDto {
                    cell: cell(e.cell),
                    direction: e.direction.clone(),
                    length: q(&e.length),
                    interval: [q(&e.interval.0), q(&e.interval.1)],
                })
                .collect(),
            simplex_vertices: c.simplex_vertices.iter().map(|v| qs(v)).collect(),
            contained: c.contained,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    #[serde(flatten)]
    pub weight: WeightDto,
    pub r: String,
    pub r_prime: String,
    pub condition_star: bool,
    pub real_dim: usize,
    #[serde(rename = "N")]
    pub n_complex: usize,
    pub exact_width: Option<String>,
    pub indecomposable_upper_bound: Option<String>,
}

impl BoundReport {
    pub fn compute(w: &Weight) -> Result<Self> {
        let lb = lie::lower_bound(w)?;
        let dims = lie::orbit_dims(w);
        let exact_width = match w.family() {
            Family::UnitaryU => lie::exact_width(w)?.map(|x| q(&x)),
            _ => None,
        };
        let indecomposable_upper_bound = match lie::is_indecomposable(w) {
            Ok(i) => i.upper_bound.map(|x| q(&x)),
            Err(Error::NotRegular(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(BoundReport {
            weight: WeightDto::from_weight(w),
            r: q(&lb.r),
            r_prime: q(&lb.r_prime),
            condition_star: lb.star,
            real_dim: dims.real_dim,
            n_complex: dims.n_complex,
            exact_width,
            indecomposable_upper_bound,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCheckDto {
    #[serde(rename = "box")]
    pub cell: [i32; 2],
    pub endpoints_in_p: bool,
    pub active_rank: usize,
    pub face_interval: Option<[String; 2]>,
    pub hyperplane_interval: Option<[String; 2]>,
    pub pass: bool,
}

fn pair(p: &Option<(Rational, Rational)>) -> Option<[String; 2]> {
    p.as_ref().map(|(a, b)| [q(a), q(b)])
}

impl From<&EdgeCheck> for EdgeCheckDto {
    fn from(e: &EdgeCheck) -> Self {
        EdgeCheckDto {
            cell: cell(e.cell),
            endpoints_in_p: e.endpoints_in_p,
            active_rank: e.active_rank,
            face_interval: pair(&e.face_interval),
            hyperplane_interval: pair(&e.hyperplane_interval),
            pass: e.pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCheckDto {
    pub active_rank: usize,
    #[serde(rename = "N")]
    pub n_boxes: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleDto {
    pub samples: usize,
    pub max_violation: f64,
    pub seed: u64,
    pub tolerance: f64,
    pub pass: bool,
}

impl From<&SampleReport> for SampleDto {
    fn from(s: &SampleReport) -> Self {
        SampleDto {
            samples: s.samples,
            max_violation: s.max_violation,
            seed: s.seed,
            tolerance: s.tolerance,
            pass: s.pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlabDto {
    #[serde(rename = "box")]
    pub cell: [i32; 2],
    pub lp_max: Option<String>,
    pub lp_min: Option<String>,
    pub expected_max: String,
    pub pass: bool,
}

impl From<&SlabCheck> for SlabDto {
    fn from(s: &SlabCheck) -> Self {
        SlabDto {
            cell: cell(s.cell),
            lp_max: s.lp_max.as_ref().map(q),
            lp_min: s.lp_min.as_ref().map(q),
            expected_max: q(&s.expected_max),
            pass: s.pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PsiDto {
    #[serde(rename = "N")]
    pub n: usize,
    pub points: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(flatten)]
    pub weight: WeightDto,
    pub edges: Vec<EdgeCheckDto>,
    pub vertex: VertexCheckDto,
    pub membership: SampleDto,
    /// Present only when (*) fails.
    pub slab: Option<SlabDto>,
    pub psi: Option<PsiDto>,
    pub pass: bool,
}
