//! Ladder diagrams (U(n)) and so-diagrams (SO(2n+1), SO(2n)).
//!
//! Positions use Cartesian coordinates `(j, k)`: `j` is the column, `k` the
//! row. The diagonal squares sit on `j + k = n + 1` and carry the entries of
//! `λ`; every line `j + k = const` holds the Gelfand-Tsetlin functions of a
//! single level, and column `j` holds the functions with subscript `j`.
//!
//! * U(n): positions `j, k ≥ 1`, `j + k ≤ n + 1`; `(j, k)` carries
//!   `λ_j^{(j+k-1)}`.
//! * SO(2n+1): column `j` runs from the rim `k = j - n` up to the diagonal;
//!   `(j, k)` carries `λ_j^{(n+j+k)}`.
//! * SO(2n): column `j` runs from the rim `k = j - n + 1`; `(j, k)` carries
//!   `λ_j^{(n-1+j+k)}`.
//!
//! Each function is bounded above by its top neighbour `(j, k+1)` and below
//! by its right neighbour `(j+1, k)`. Rim functions are the last functions of
//! even levels; they are signed and enter every relation through `|·|`.
//! A position is a box of the diagram iff its function is not constant on the
//! orbit, which is decided by propagating those bounds from the diagonal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{self, BlockStructure, Family, Weight};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub j: i32,
    pub k: i32,
}

impl Cell {
    pub const fn new(j: i32, k: i32) -> Self {
        Cell { j, k }
    }

    pub fn top(self) -> Cell {
        Cell::new(self.j, self.k + 1)
    }

    pub fn right(self) -> Cell {
        Cell::new(self.j + 1, self.k)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.j, self.k)
    }
}

/// Which function `λ^{(superscript)}_{subscript}` a position carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GtLabel {
    pub superscript: usize,
    pub subscript: usize,
}

impl fmt::Display for GtLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ_{}^({})", self.subscript, self.superscript)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    /// A diagram box, by basis index.
    Free(usize),
    /// A function constant on the orbit (including the entries of `λ`).
    Fixed(Rational),
}

/// A neighbour entering an interlacing relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighbor {
    pub cell: Cell,
    pub term: Term,
    /// The neighbour is a signed function and enters as `|·|`.
    pub absolute: bool,
}

/// Interlacing neighbours of a box: `lower ≤ x ≤ upper` (with `|x| ≤ upper`
/// and no lower neighbour for signed rim boxes).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub upper: Neighbor,
    pub lower: Option<Neighbor>,
    pub signed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Position {
    pub cell: Cell,
    pub label: GtLabel,
    pub diagonal: bool,
    pub signed: bool,
    /// Forced range of the function over the orbit.
    pub lo: Rational,
    pub hi: Rational,
}

impl Position {
    pub fn is_constant(&self) -> bool {
        self.diagonal || self.lo == self.hi
    }
}

#[derive(Debug, Clone)]
pub struct Diagram {
    weight: Weight,
    blocks: BlockStructure,
    positions: BTreeMap<Cell, Position>,
    boxes: Vec<Cell>,
    index: HashMap<Cell, usize>,
}

fn column_range(family: Family, n: i32, j: i32) -> (i32, i32) {
    let top = n + 1 - j;
    let bottom = match family {
        Family::UnitaryU => 1,
        Family::OddOrthogonal => j - n,
        Family::EvenOrthogonal => j - n + 1,
    };
    (bottom, top)
}

fn level(family: Family, n: i32, c: Cell) -> usize {
    let l = match family {
        Family::UnitaryU => c.j + c.k - 1,
        Family::OddOrthogonal => n + c.j + c.k,
        Family::EvenOrthogonal => n - 1 + c.j + c.k,
    };
    l as usize
}

fn abs_lower(p: &Position) -> Rational {
    if !p.lo.is_positive() && !p.hi.is_negative() {
        Rational::zero()
    } else {
        p.lo.abs().min(p.hi.abs())
    }
}

pub fn build_diagram(w: &Weight) -> Result<Diagram> {
    lie::r_of(w)?;
    Ok(build_unchecked(w))
}

fn build_unchecked(w: &Weight) -> Diagram {
    let family = w.family();
    let n = w.n() as i32;

    let mut cells: Vec<Cell> = Vec::new();
    for j in 1..=n {
        let (bottom, top) = column_range(family, n, j);
        for k in bottom..=top {
            cells.push(Cell::new(j, k));
        }
    }
    // Top-down by level so that top and right neighbours are resolved first.
    cells.sort_by_key(|c| std::cmp::Reverse(c.j + c.k));

    let mut positions: BTreeMap<Cell, Position> = BTreeMap::new();
    for c in cells {
        let (bottom, _) = column_range(family, n, c.j);
        let signed = family.is_orthogonal() && c.k == bottom;
        let diagonal = c.j + c.k == n + 1;
        let label = GtLabel {
            superscript: level(family, n, c),
            subscript: c.j as usize,
        };
        let (lo, hi) = if diagonal {
            let v = w.lambda(c.j as usize).clone();
            (v.clone(), v)
        } else {
            let hi = positions[&c.top()].hi.clone();
            let lo = if signed {
                -hi.clone()
            } else {
                let right = &positions[&c.right()];
                if right.signed {
                    abs_lower(right)
                } else {
                    right.lo.clone()
                }
            };
            (lo, hi)
        };
        debug_assert!(lo <= hi, "empty range at {c}");
        positions.insert(
            c,
            Position {
                cell: c,
                label,
                diagonal,
                signed,
                lo,
                hi,
            },
        );
    }

    let mut boxes: Vec<Cell> = positions
        .values()
        .filter(|p| !p.is_constant())
        .map(|p| p.cell)
        .collect();
    match family {
        // (j,k) before (j',k') iff k' > k, or k = k' and j > j'.
        Family::UnitaryU => boxes.sort_by_key(|c| (c.k, std::cmp::Reverse(c.j))),
        // (j,k) before (j',k') iff j < j', or j = j' and k > k'.
        _ => boxes.sort_by_key(|c| (c.j, std::cmp::Reverse(c.k))),
    }
    let index = boxes.iter().enumerate().map(|(i, &c)| (c, i)).collect();

    Diagram {
        weight: w.clone(),
        blocks: lie::block_structure(w),
        positions,
        boxes,
        index,
    }
}

impl Diagram {
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn family(&self) -> Family {
        self.weight.family()
    }

    pub fn n(&self) -> usize {
        self.weight.n()
    }

    pub fn blocks(&self) -> &BlockStructure {
        &self.blocks
    }

    /// Boxes in basis order.
    pub fn boxes(&self) -> &[Cell] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.index.contains_key(&c)
    }

    pub fn basis_index(&self, c: Cell) -> Result<usize> {
        self.index.get(&c).copied().ok_or(Error::UnknownBox(c))
    }

    /// All positions of the pattern: boxes, constant functions and the
    /// diagonal squares.
    pub fn positions(&self) -> impl Iterator<Item = &Position> {
        self.positions.values()
    }

    pub fn position(&self, c: Cell) -> Option<&Position> {
        self.positions.get(&c)
    }

    pub fn label(&self, c: Cell) -> Result<GtLabel> {
        self.require(c).map(|p| p.label)
    }

    /// The `(box, label)` table, in basis order.
    pub fn gtable(&self) -> Vec<(Cell, GtLabel)> {
        self.boxes
            .iter()
            .map(|&c| (c, self.positions[&c].label))
            .collect()
    }

    fn require(&self, c: Cell) -> Result<&Position> {
        if !self.contains(c) {
            return Err(Error::UnknownBox(c));
        }
        Ok(&self.positions[&c])
    }

    /// `Free` for a box, `Fixed` for a constant function. `None` off-pattern.
    pub fn term(&self, c: Cell) -> Option<Term> {
        let p = self.positions.get(&c)?;
        Some(match self.index.get(&c) {
            Some(&i) => Term::Free(i),
            None => Term::Fixed(p.lo.clone()),
        })
    }

    fn neighbor(&self, c: Cell) -> Option<Neighbor> {
        let p = self.positions.get(&c)?;
        Some(Neighbor {
            cell: c,
            term: self.term(c)?,
            absolute: p.signed,
        })
    }

    /// Interlacing relations of a non-diagonal position (box or constant).
    pub fn relations(&self, c: Cell) -> Option<Bounds> {
        let p = self.positions.get(&c)?;
        if p.diagonal {
            return None;
        }
        let upper = self.neighbor(c.top()).expect("non-diagonal has a top");
        let lower = if p.signed {
            None
        } else {
            Some(self.neighbor(c.right()).expect("non-rim has a right"))
        };
        Some(Bounds {
            upper,
            lower,
            signed: p.signed,
        })
    }

    pub fn bounds(&self, c: Cell) -> Result<Bounds> {
        self.require(c)?;
        Ok(self.relations(c).expect("boxes are never diagonal"))
    }

    /// For U(n): the block `g(l)` whose diagonal square row `l` meets,
    /// `λ_{n-l+1} = λ_{n_{g(l)}}`. For SO: the block met by column `l`,
    /// `λ_l = λ_{n_{g(l)}}`.
    pub fn g_of(&self, l: i64) -> Result<usize> {
        let n = self.n() as i64;
        if l < 1 || l > n {
            return Err(Error::OutOfRange { index: l, max: n });
        }
        let coord = match self.family() {
            Family::UnitaryU => n - l + 1,
            _ => l,
        };
        Ok(self.blocks.block_of(coord as usize))
    }
}

impl fmt::Display for Diagram {
    /// ASCII grid: `#` diagonal square, `=` constant function, a number is
    /// the basis index of a box.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n() as i32;
        let kmin = self.positions.keys().map(|c| c.k).min().unwrap_or(1);
        let kmax = self.positions.keys().map(|c| c.k).max().unwrap_or(1);
        writeln!(f, "{}", self.weight)?;
        for k in (kmin..=kmax).rev() {
            write!(f, "{k:>3} |")?;
            for j in 1..=n {
                let c = Cell::new(j, k);
                let s = match (self.positions.get(&c), self.index.get(&c)) {
                    (None, _) => "    ".to_string(),
                    (Some(_), Some(i)) => format!("{i:>4}"),
                    (Some(p), None) if p.diagonal => "   #".to_string(),
                    (Some(_), None) => "   =".to_string(),
                };
                f.write_str(&s)?;
            }
            writeln!(f)?;
        }
        write!(f, "    +")?;
        for _ in 1..=n {
            f.write_str("----")?;
        }
        writeln!(f)?;
        write!(f, "     ")?;
        for j in 1..=n {
            write!(f, "{j:>4}")?;
        }
        writeln!(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::GroupSpec;

    fn u(e: &[i64]) -> Weight {
        Weight::from_ints(GroupSpec::unitary(e.len()), e).unwrap()
    }
    fn so_odd(e: &[i64]) -> Weight {
        Weight::from_ints(GroupSpec::odd_orthogonal(e.len()), e).unwrap()
    }
    fn so_even(e: &[i64]) -> Weight {
        Weight::from_ints(GroupSpec::even_orthogonal(e.len()), e).unwrap()
    }
    fn c(j: i32, k: i32) -> Cell {
        Cell::new(j, k)
    }

    #[test]
    fn unitary_boxes() {
        let d = build_diagram(&u(&[3, 3, 1])).unwrap();
        assert_eq!(d.boxes(), &[c(2, 1), c(1, 1)]);
        assert!(!d.contains(c(1, 2)));

        let d = build_diagram(&u(&[3, 1, 0])).unwrap();
        assert_eq!(d.boxes(), &[c(2, 1), c(1, 1), c(1, 2)]);
        assert_eq!(d.basis_index(c(1, 2)).unwrap(), 2);
        assert_eq!(d.basis_index(c(3, 3)), Err(Error::UnknownBox(c(3, 3))));
    }

    #[test]
    fn orthogonal_rank_one() {
        let d = build_diagram(&so_odd(&[5])).unwrap();
        assert_eq!(d.boxes(), &[c(1, 0)]);
        let b = d.bounds(c(1, 0)).unwrap();
        assert!(b.signed);
        assert!(b.lower.is_none());
        assert_eq!(b.upper.term, Term::Fixed(crate::rational::int(5)));
        assert_eq!(
            d.label(c(1, 0)).unwrap(),
            GtLabel {
                superscript: 2,
                subscript: 1
            }
        );
    }

    #[test]
    fn point_orbit_is_rejected() {
        assert_eq!(build_diagram(&u(&[4, 4])).unwrap_err(), Error::PointOrbit);
        assert_eq!(
            build_diagram(&so_even(&[4])).unwrap_err(),
            Error::PointOrbit
        );
    }

    #[test]
    fn regular_box_counts() {
        for n in 1..=5usize {
            let e: Vec<i64> = (1..=n as i64).rev().collect();
            let nn = n * (n - 1) / 2;
            if n > 1 {
                assert_eq!(build_diagram(&u(&e)).unwrap().len(), nn);
            }
            assert_eq!(build_diagram(&so_odd(&e)).unwrap().len(), n * n);
            if n > 1 {
                assert_eq!(build_diagram(&so_even(&e)).unwrap().len(), n * (n - 1));
            }
        }
    }

    #[test]
    fn zero_last_block_removes_its_columns() {
        // SO(7), (4, 0, 0): columns 2 and 3 carry only zeros.
        let d = build_diagram(&so_odd(&[4, 0, 0])).unwrap();
        assert!(d.boxes().iter().all(|b| b.j == 1));
        assert_eq!(d.len(), lie::orbit_dims(d.weight()).n_complex);
    }

    #[test]
    fn g_examples() {
        let d = build_diagram(&u(&[9, 9, 9, 7, 7, 4, 4, 1])).unwrap();
        let g: Vec<usize> = (1..=5).map(|l| d.g_of(l).unwrap()).collect();
        assert_eq!(g, vec![4, 3, 3, 2, 2]);
        assert!(matches!(d.g_of(0), Err(Error::OutOfRange { .. })));
        assert!(matches!(d.g_of(9), Err(Error::OutOfRange { .. })));

        let d = build_diagram(&u(&[3, 3, 1])).unwrap();
        assert_eq!(
            (1..=3).map(|l| d.g_of(l).unwrap()).collect::<Vec<_>>(),
            vec![2, 1, 1]
        );
        let d = build_diagram(&u(&[3, 1, 0])).unwrap();
        assert_eq!(
            (1..=3).map(|l| d.g_of(l).unwrap()).collect::<Vec<_>>(),
            vec![3, 2, 1]
        );
    }

    #[test]
    fn labels_are_unique_per_box() {
        let d = build_diagram(&so_even(&[5, 3, 2, -1])).unwrap();
        let mut labels: Vec<GtLabel> = d.gtable().into_iter().map(|(_, l)| l).collect();
        let before = labels.len();
        labels.sort_by_key(|l| (l.superscript, l.subscript));
        labels.dedup();
        assert_eq!(labels.len(), before);
    }

    #[test]
    fn renderer_marks_every_box() {
        let d = build_diagram(&so_odd(&[2, 1])).unwrap();
        let s = d.to_string();
        for i in 0..d.len() {
            assert!(s.contains(&format!("{i:>4}")), "{s}");
        }
        assert!(s.contains('#'));
    }
}
