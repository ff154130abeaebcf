//! The Gelfand-Tsetlin polytope in box coordinates, its distinguished vertex
//! `V`, the edges leaving `V`, and the simplex certificate built from them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diagram::{self, Cell, Diagram, Term};
use crate::error::{Error, Result};
use crate::exact;
use crate::lie::{self, Family, Weight};
use crate::rational::Rational;

/// `coeffs · x ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearInequality {
    pub coeffs: BTreeMap<Cell, Rational>,
    pub rhs: Rational,
}

impl LinearInequality {
    pub fn slack(&self, diagram: &Diagram, x: &[Rational]) -> Rational {
        let lhs: Rational = self
            .coeffs
            .iter()
            .map(|(c, a)| a * &x[diagram.basis_index(*c).expect("coefficient on a box")])
            .sum();
        &self.rhs - lhs
    }

    /// Dense coefficient row in basis order.
    pub fn dense(&self, diagram: &Diagram) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); diagram.len()];
        for (c, a) in &self.coeffs {
            row[diagram.basis_index(*c).expect("coefficient on a box")] = a.clone();
        }
        row
    }
}

#[derive(Debug, Clone)]
pub struct Polytope {
    diagram: Diagram,
    inequalities: Vec<LinearInequality>,
}

/// Builds `Σ sign_i · term_i ≤ 0` with constants moved to the right.
fn relation(
    d: &Diagram,
    terms: &[(Cell, i64)],
) -> Result<Option<LinearInequality>> {
    let mut coeffs: BTreeMap<Cell, Rational> = BTreeMap::new();
    let mut rhs = Rational::zero();
    for &(c, sign) in terms {
        let s = crate::rational::int(sign);
        match d.term(c).expect("relation on a pattern position") {
            Term::Free(_) => {
                let e = coeffs.entry(c).or_insert_with(Rational::zero);
                *e += s;
            }
            Term::Fixed(v) => rhs -= s * v,
        }
    }
    coeffs.retain(|_, a| !a.is_zero());
    if coeffs.is_empty() {
        if rhs.is_negative() {
            return Err(Error::Internal(format!(
                "constant interlacing relation {terms:?} is violated"
            )));
        }
        return Ok(None);
    }
    Ok(Some(LinearInequality { coeffs, rhs }))
}

/// All interlacing inequalities over the boxes of the diagram, constants
/// substituted, signed functions expanded into two linear rows.
pub fn hrep(w: &Weight) -> Result<Polytope> {
    let d = diagram::build_diagram(w)?;
    let mut rows = Vec::new();
    let cells: Vec<Cell> = d.positions().map(|p| p.cell).collect();
    for c in cells {
        let Some(b) = d.relations(c) else { continue };
        // x ≤ top, and -x ≤ top when x is signed.
        let top = b.upper.cell;
        rows.push(relation(&d, &[(c, 1), (top, -1)])?);
        if b.signed {
            rows.push(relation(&d, &[(c, -1), (top, -1)])?);
        }
        // right ≤ x, and -right ≤ x when right is signed.
        if let Some(lower) = b.lower {
            let r = lower.cell;
            rows.push(relation(&d, &[(r, 1), (c, -1)])?);
            if lower.absolute {
                rows.push(relation(&d, &[(r, -1), (c, -1)])?);
            }
        }
    }
    Ok(Polytope {
        diagram: d,
        inequalities: rows.into_iter().flatten().collect(),
    })
}

impl Polytope {
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn inequalities(&self) -> &[LinearInequality] {
        &self.inequalities
    }

    pub fn dim(&self) -> usize {
        self.diagram.len()
    }

    /// Dense `(A, b)` with rows in inequality order.
    pub fn dense(&self) -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let a = self
            .inequalities
            .iter()
            .map(|q| q.dense(&self.diagram))
            .collect();
        let b = self.inequalities.iter().map(|q| q.rhs.clone()).collect();
        (a, b)
    }

    pub fn slacks(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.check_dim(x.len())?;
        Ok(self
            .inequalities
            .iter()
            .map(|q| q.slack(&self.diagram, x))
            .collect())
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        Ok(self.slacks(x)?.iter().all(|s| !s.is_negative()))
    }

    /// Indices of the inequalities tight at `x`.
    pub fn active_set(&self, x: &[Rational]) -> Result<Vec<usize>> {
        Ok(self
            .slacks(x)?
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_zero())
            .map(|(i, _)| i)
            .collect())
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got,
            });
        }
        Ok(())
    }
}

pub fn contains(p: &Polytope, x: &[Rational]) -> Result<bool> {
    p.contains(x)
}

fn vertex_of(d: &Diagram) -> Vec<Rational> {
    let w = d.weight();
    let n = w.n() as i32;
    d.boxes()
        .iter()
        .map(|c| match d.family() {
            Family::UnitaryU => w.lambda((n - c.k + 1) as usize).clone(),
            _ => w.lambda(c.j as usize).clone(),
        })
        .collect()
}

/// U(n): `V_{j,k} = λ_{n-k+1}`, the image of `diag(λ_n, …, λ_1)`.
/// SO: `V_{j,k} = λ_j`, the image of `λ` itself.
pub fn vertex_v(w: &Weight) -> Result<Vec<Rational>> {
    Ok(vertex_of(&diagram::build_diagram(w)?))
}

/// One edge of the polytope leaving `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeData {
    pub cell: Cell,
    /// Primitive integer direction `w_{s,l}` in basis order.
    pub direction: Vec<i64>,
    /// Lattice length.
    pub length: Rational,
    /// Boxes whose coordinate varies along the edge (includes `cell`).
    pub moved: Vec<Cell>,
    /// Range of the free coordinate `x_{s,l}` along the edge.
    pub interval: (Rational, Rational),
}

fn moved_boxes<F>(d: &Diagram, cell: Cell, candidates: F) -> Result<Vec<Cell>>
where
    F: Fn(Cell) -> bool,
{
    let moved: Vec<Cell> = d
        .positions()
        .map(|p| p.cell)
        .filter(|&c| candidates(c))
        .collect();
    if let Some(bad) = moved.iter().find(|&&c| !d.contains(c)) {
        return Err(Error::Internal(format!(
            "edge at {cell} moves {bad}, which is not a box"
        )));
    }
    Ok(moved)
}

fn unitary_edge(d: &Diagram, v: &[Rational], cell: Cell) -> Result<EdgeData> {
    let b = d.blocks();
    let n = d.n() as i32;
    let (s, l) = (cell.j, cell.k);
    let g = d.g_of(l as i64)?;
    if g < 2 {
        return Err(Error::Internal(format!("box {cell} lies in the first block")));
    }
    let lo = b.value(g).clone();
    let hi = b.value(g - 1).clone();
    let top_row = n - b.end(g - 1) as i32;
    let moved = moved_boxes(d, cell, |c| c.j <= s && l <= c.k && c.k <= top_row)?;
    let mut direction = vec![0i64; d.len()];
    for c in &moved {
        direction[d.basis_index(*c)?] = 1;
    }
    let start = v[d.basis_index(cell)?].clone();
    if start != lo {
        return Err(Error::Internal(format!("V at {cell} is not the lower end")));
    }
    Ok(EdgeData {
        cell,
        direction,
        length: &hi - &lo,
        moved,
        interval: (lo, hi),
    })
}

fn orthogonal_edge(d: &Diagram, v: &[Rational], cell: Cell) -> Result<EdgeData> {
    let b = d.blocks();
    let n = d.n() as i32;
    let (s, l) = (cell.j, cell.k);
    let g = d.g_of(s as i64)?;
    let end = b.end(g) as i32;
    let value = b.value(g).clone();
    // Rim offset: the rim of column j sits at k = j - n (+1 for SO(2n)).
    let shift = match d.family() {
        Family::OddOrthogonal => 0,
        _ => 1,
    };
    let rim = s - n + shift;
    let length = if l == rim {
        &value * crate::rational::int(2)
    } else if s < end && rim < l && l <= end - n + shift {
        value.clone()
    } else {
        if end == n {
            return Err(Error::Internal(format!(
                "box {cell} in the last block has no right neighbour block"
            )));
        }
        &value - b.value(g + 1).abs()
    };
    let moved = moved_boxes(d, cell, |c| c.k <= l && s <= c.j && c.j <= end)?;
    let mut direction = vec![0i64; d.len()];
    for c in &moved {
        direction[d.basis_index(*c)?] = -1;
    }
    let start = v[d.basis_index(cell)?].clone();
    if start != value {
        return Err(Error::Internal(format!("V at {cell} is not the upper end")));
    }
    Ok(EdgeData {
        cell,
        direction,
        interval: (&start - &length, start),
        length,
        moved,
    })
}

fn edges_of(d: &Diagram, v: &[Rational]) -> Result<Vec<EdgeData>> {
    d.boxes()
        .iter()
        .map(|&c| match d.family() {
            Family::UnitaryU => unitary_edge(d, v, c),
            _ => orthogonal_edge(d, v, c),
        })
        .collect()
}

/// The `N` edges `E_{s,l}` leaving `V`, one per box, in basis order.
pub fn edges(w: &Weight) -> Result<Vec<EdgeData>> {
    let d = diagram::build_diagram(w)?;
    let v = vertex_of(&d);
    edges_of(&d, &v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMatrix {
    /// Row-major; column `c` is the direction of the `c`-th edge.
    pub rows: Vec<Vec<i64>>,
    pub det: i64,
    pub lower_triangular: bool,
    /// The common diagonal entry (`1` for U(n), `-1` for SO), if uniform.
    pub diagonal: Option<i64>,
}

fn edge_matrix(edges: &[EdgeData]) -> Result<EdgeMatrix> {
    let n = edges.len();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| edges.iter().map(|e| e.direction[i]).collect())
        .collect();
    let lower_triangular = (0..n).all(|i| (i + 1..n).all(|c| rows[i][c] == 0));
    let diagonal = match rows.first() {
        Some(r) if (0..n).all(|i| rows[i][i] == r[0]) => Some(r[0]),
        _ => None,
    };
    let det = exact::determinant(&rows);
    if det != BigInt::one() && det != -BigInt::one() {
        return Err(Error::UnimodularityFailure(det.to_string()));
    }
    let det = if det.is_positive() { 1 } else { -1 };
    Ok(EdgeMatrix {
        rows,
        det,
        lower_triangular,
        diagonal,
    })
}

/// The matrix of primitive edge directions and its determinant (`±1`).
pub fn matrix_w(w: &Weight) -> Result<EdgeMatrix> {
    edge_matrix(&edges(w)?)
}

fn simplex_of(v: &[Rational], edges: &[EdgeData], r_prime: &Rational) -> Vec<Vec<Rational>> {
    let mut out = vec![v.to_vec()];
    for e in edges {
        out.push(
            v.iter()
                .zip(&e.direction)
                .map(|(x, &d)| x + r_prime * crate::rational::int(d))
                .collect(),
        );
    }
    out
}

/// `V` and `V + r'·w_{s,l}` for every box.
pub fn simplex_r(w: &Weight) -> Result<Vec<Vec<Rational>>> {
    let lb = lie::lower_bound(w)?;
    let d = diagram::build_diagram(w)?;
    let v = vertex_of(&d);
    Ok(simplex_of(&v, &edges_of(&d, &v)?, &lb.r_prime))
}

/// The witness behind "Gromov width ≥ r'": the simplex `R` spanned by `V`
/// and `V + r'·w_{s,l}` is a unimodular image of the standard simplex of
/// size `r'` and lies in the closed polytope.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub weight: Weight,
    pub r: Rational,
    pub r_prime: Rational,
    pub star: bool,
    pub boxes: Vec<Cell>,
    pub vertex: Vec<Rational>,
    pub w: EdgeMatrix,
    pub edges: Vec<EdgeData>,
    pub simplex_vertices: Vec<Vec<Rational>>,
    pub contained: bool,
}

pub fn certificate(w: &Weight) -> Result<Certificate> {
    let lb = lie::lower_bound(w)?;
    if !lb.r_prime.is_positive() {
        return Err(Error::Internal("r' must be positive".into()));
    }
    let p = hrep(w)?;
    certificate_for(&p, lb)
}

pub(crate) fn certificate_for(p: &Polytope, lb: lie::LowerBound) -> Result<Certificate> {
    let d = p.diagram();
    let v = vertex_of(d);
    let edges = edges_of(d, &v)?;
    let m = edge_matrix(&edges)?;
    let simplex = simplex_of(&v, &edges, &lb.r_prime);
    for (i, x) in simplex.iter().enumerate() {
        if !p.contains(x)? {
            return Err(Error::ContainmentFailure { index: i });
        }
    }
    Ok(Certificate {
        weight: d.weight().clone(),
        r: lb.r,
        r_prime: lb.r_prime,
        star: lb.star,
        boxes: d.boxes().to_vec(),
        vertex: v,
        w: m,
        edges,
        simplex_vertices: simplex,
        contained: true,
    })
}
