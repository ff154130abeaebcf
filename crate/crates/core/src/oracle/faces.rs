//! Exact face checks on the H-representation: edges leaving `V`, the vertex
//! property of `V`, and the coordinate slab that appears when (*) fails.

use num_traits::{One, Zero};

use crate::diagram::Cell;
use crate::error::{Error, Result};
use crate::exact;
use crate::lie::{self, Family};
use crate::oracle::lp::{LinearProgram, LpStatus};
use crate::polytope::{EdgeData, Polytope};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCheck {
    pub cell: Cell,
    pub endpoints_in_p: bool,
    /// Rank of the normals tight along the whole segment.
    pub active_rank: usize,
    /// Range of the free coordinate over the face cut out by those normals.
    pub face_interval: Option<(Rational, Rational)>,
    /// Range of the free coordinate over `P ∩ H`, where `H` ties the moved
    /// coordinates together and pins every other coordinate to `V`.
    pub hyperplane_interval: Option<(Rational, Rational)>,
    pub pass: bool,
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn range(lp: &LinearProgram, i: usize) -> Result<(Rational, Rational)> {
    try_range(lp, i)?.ok_or(Error::Infeasible)
}

/// `None` when the program is infeasible.
fn try_range(lp: &LinearProgram, i: usize) -> Result<Option<(Rational, Rational)>> {
    let c = unit(lp.n, i);
    let lo = lp.solve(&c, false)?;
    if lo.status == LpStatus::Infeasible {
        return Ok(None);
    }
    let hi = lp.solve(&c, true)?.optimum()?;
    Ok(Some((lo.optimum()?, hi)))
}

pub fn edge_check(p: &Polytope, e: &EdgeData, v: &[Rational]) -> Result<EdgeCheck> {
    let n = p.dim();
    if v.len() != n || e.direction.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: if v.len() != n { v.len() } else { e.direction.len() },
        });
    }
    let d = p.diagram();
    let i = d.basis_index(e.cell)?;
    let far: Vec<Rational> = v
        .iter()
        .zip(&e.direction)
        .map(|(x, &w)| x + &e.length * int(w))
        .collect();
    let endpoints_in_p = p.contains(v)? && p.contains(&far)?;

    let (a, b) = p.dense();
    let s0 = p.slacks(v)?;
    let s1 = p.slacks(&far)?;
    let mut face = LinearProgram::new(n);
    let mut normals = Vec::new();
    for (r, (row, rhs)) in a.into_iter().zip(b).enumerate() {
        if s0[r].is_zero() && s1[r].is_zero() {
            normals.push(row.clone());
            face.eq.push((row, rhs));
        } else {
            face.le.push((row, rhs));
        }
    }
    let active_rank = exact::rank(&normals);
    let face_interval = try_range(&face, i)?;

    let mut slice = LinearProgram::from_polytope(p);
    for (c, cell) in d.boxes().iter().enumerate() {
        if *cell == e.cell {
            continue;
        }
        let mut row = vec![Rational::zero(); n];
        row[c] = Rational::one();
        if e.moved.contains(cell) {
            row[i] = -Rational::one();
            slice.eq.push((row, Rational::zero()));
        } else {
            slice.eq.push((row, v[c].clone()));
        }
    }
    let hyperplane_interval = try_range(&slice, i)?;

    let expected = Some(e.interval.clone());
    let pass = endpoints_in_p
        && active_rank + 1 == n
        && face_interval == expected
        && hyperplane_interval == expected
        && &e.interval.1 - &e.interval.0 == e.length;
    Ok(EdgeCheck {
        cell: e.cell,
        endpoints_in_p,
        active_rank,
        face_interval,
        hyperplane_interval,
        pass,
    })
}

/// `true` iff the segment from `V` along `e` is an edge of `P` whose extent
/// matches `e` exactly.
pub fn verify_edge(p: &Polytope, e: &EdgeData, v: &[Rational]) -> Result<bool> {
    Ok(edge_check(p, e, v)?.pass)
}

/// Rank of the normals of the inequalities tight at `x`.
pub fn active_rank(p: &Polytope, x: &[Rational]) -> Result<usize> {
    let (a, _) = p.dense();
    let rows: Vec<Vec<Rational>> = p
        .active_set(x)?
        .into_iter()
        .map(|r| a[r].clone())
        .collect();
    Ok(exact::rank(&rows))
}

/// `x ∈ P` and the tight normals at `x` span the whole space.
pub fn is_vertex(p: &Polytope, x: &[Rational]) -> Result<bool> {
    Ok(p.contains(x)? && active_rank(p, x)? == p.dim())
}

/// LP extent of the coordinate expected to confine `P` to a slab of width
/// `|λ_n|` when (*) fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlabCheck {
    pub cell: Cell,
    pub lp_max: Option<Rational>,
    pub lp_min: Option<Rational>,
    pub expected_max: Rational,
    pub pass: bool,
}

/// The coordinate of the slab: `(n-1, 0)` for SO(2n+1), `(n-2, 0)` for SO(2n).
pub fn slab_cell(family: Family, n: usize) -> Result<Cell> {
    let n = n as i32;
    match family {
        Family::UnitaryU => Err(Error::WrongFamily(family)),
        Family::OddOrthogonal => Ok(Cell::new(n - 1, 0)),
        Family::EvenOrthogonal => Ok(Cell::new(n - 2, 0)),
    }
}

/// Runs the slab check when (*) fails; `None` when it holds.
///
/// The check can only pass when the slab coordinate is a box ranging over
/// `[0, |λ_n|]`. For SO(2n) with exactly two entries equal to `|λ_n|` this is
/// not the case: the coordinate ranges over `[0, λ_{n-2}]`, or is not in the
/// diagram at all when `n = 2`, and the check reports a failure.
pub fn slab_check(p: &Polytope) -> Result<Option<SlabCheck>> {
    let w = p.diagram().weight();
    if w.family() == Family::UnitaryU || lie::condition_star(w)? {
        return Ok(None);
    }
    let cell = slab_cell(w.family(), w.n())?;
    let expected_max = w.normalized()[w.n() - 1].clone();
    let Ok(i) = p.diagram().basis_index(cell) else {
        return Ok(Some(SlabCheck {
            cell,
            lp_max: None,
            lp_min: None,
            expected_max,
            pass: false,
        }));
    };
    let (lo, hi) = range(&LinearProgram::from_polytope(p), i)?;
    let pass = lo.is_zero() && hi == expected_max;
    Ok(Some(SlabCheck {
        cell,
        lp_max: Some(hi),
        lp_min: Some(lo),
        expected_max,
        pass,
    }))
}

fn so_dim(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Dimension of the stabilizer of `λ`, read off the block multiplicities:
/// a `U(k)` per nonzero block, and `SO(2k+1)` or `SO(2k)` for a zero block.
pub fn stabilizer_dim(w: &lie::Weight) -> usize {
    let b = lie::block_structure(w);
    let ks = b.multiplicities();
    let last_zero = b.value(b.num_blocks()).is_zero();
    ks.iter()
        .enumerate()
        .map(|(g, &k)| {
            let zero_block = last_zero && g + 1 == ks.len();
            match w.family() {
                Family::OddOrthogonal if zero_block => so_dim(2 * k + 1),
                Family::EvenOrthogonal if zero_block => so_dim(2 * k),
                _ => k * k,
            }
        })
        .sum()
}
