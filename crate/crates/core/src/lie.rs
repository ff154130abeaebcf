//! Root-system data for U(n), SO(2n+1) and SO(2n): weights in the positive
//! Weyl chamber, their block structure, coroot pairings and the width bound
//! `r_G(λ)` derived from them.
//!
//! Block multiplicities are indexed so that `k_j` is the size of the `j`-th
//! block, i.e. `k_j = n_j - n_{j-1}` with `n_0 = 0` and `n_{m+1} = n`.
//!
//! For SO(2n) the last coordinate may be negative. The orbits through
//! `(λ_1, …, λ_{n-1}, λ_n)` and `(λ_1, …, λ_{n-1}, -λ_n)` are exchanged by
//! conjugation with `diag(1, …, 1, -1)`, a symplectomorphism, and the
//! Gelfand-Tsetlin polytope only sees `|λ_n|`. Every block-based quantity is
//! therefore computed from the sign-normalized entries
//! (see [`Weight::normalized`]).

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "u")]
    UnitaryU,
    #[serde(rename = "so-odd")]
    OddOrthogonal,
    #[serde(rename = "so-even")]
    EvenOrthogonal,
}

impl Family {
    pub fn is_orthogonal(self) -> bool {
        !matches!(self, Family::UnitaryU)
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::UnitaryU => "u",
            Family::OddOrthogonal => "so-odd",
            Family::EvenOrthogonal => "so-even",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" => Ok(Family::UnitaryU),
            "so-odd" => Ok(Family::OddOrthogonal),
            "so-even" => Ok(Family::EvenOrthogonal),
            other => Err(Error::InvalidWeight(format!(
                "unknown group `{other}` (expected u, so-odd or so-even)"
            ))),
        }
    }
}

/// `U(n)`, `SO(2n+1)` or `SO(2n)`; `n` is the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWeight("rank n must be at least 1".into()));
        }
        Ok(GroupSpec { family, n })
    }

    pub fn unitary(n: usize) -> Self {
        GroupSpec::new(Family::UnitaryU, n).expect("n >= 1")
    }

    pub fn odd_orthogonal(n: usize) -> Self {
        GroupSpec::new(Family::OddOrthogonal, n).expect("n >= 1")
    }

    pub fn even_orthogonal(n: usize) -> Self {
        GroupSpec::new(Family::EvenOrthogonal, n).expect("n >= 1")
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        match self.family {
            Family::UnitaryU => self.n,
            Family::OddOrthogonal => 2 * self.n + 1,
            Family::EvenOrthogonal => 2 * self.n,
        }
    }

    pub fn dim(&self) -> usize {
        let n = self.n;
        match self.family {
            Family::UnitaryU => n * n,
            Family::OddOrthogonal => n * (2 * n + 1),
            Family::EvenOrthogonal => n * (2 * n - 1),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::UnitaryU => write!(f, "U({})", self.n),
            _ => write!(f, "SO({})", self.matrix_size()),
        }
    }
}

/// A point of the positive Weyl chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    group: GroupSpec,
    entries: Vec<Rational>,
}

impl Weight {
    pub fn new(group: GroupSpec, entries: Vec<Rational>) -> Result<Self> {
        let n = group.n;
        if entries.len() != n {
            return Err(Error::InvalidWeight(format!(
                "{group} needs {n} entries, got {}",
                entries.len()
            )));
        }
        let last_signed = group.family == Family::EvenOrthogonal;
        for j in 1..n {
            let (a, b) = (&entries[j - 1], &entries[j]);
            let ok = if last_signed && j + 1 == n {
                *a >= b.abs()
            } else {
                a >= b
            };
            if !ok {
                let rel = if last_signed && j + 1 == n {
                    format!("λ_{j} ≥ |λ_{}|", j + 1)
                } else {
                    format!("λ_{j} ≥ λ_{}", j + 1)
                };
                return Err(Error::InvalidWeight(format!(
                    "chamber inequality {rel} violated (λ_{j} = {a}, λ_{} = {b})",
                    j + 1
                )));
            }
        }
        if group.family == Family::OddOrthogonal && entries[n - 1].is_negative() {
            return Err(Error::InvalidWeight(format!(
                "chamber inequality λ_{n} ≥ 0 violated (λ_{n} = {})",
                entries[n - 1]
            )));
        }
        Ok(Weight { group, entries })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(group: GroupSpec, entries: &[i64]) -> Result<Self> {
        Weight::new(group, entries.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn family(&self) -> Family {
        self.group.family
    }

    pub fn n(&self) -> usize {
        self.group.n
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// `λ_j`, 1-based.
    pub fn lambda(&self, j: usize) -> &Rational {
        &self.entries[j - 1]
    }

    /// Entries with `λ_n` replaced by `|λ_n|` for SO(2n); identical otherwise.
    pub fn normalized(&self) -> Vec<Rational> {
        let mut v = self.entries.clone();
        if self.group.family == Family::EvenOrthogonal {
            let last = v.len() - 1;
            v[last] = v[last].abs();
        }
        v
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (", self.group)?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Maximal runs of equal entries of the (sign-normalized) weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    /// `n_1 < … < n_m < n_{m+1} = n`.
    ends: Vec<usize>,
    /// Common value of each block.
    values: Vec<Rational>,
}

impl BlockStructure {
    /// Number of strict drops.
    pub fn m(&self) -> usize {
        self.ends.len() - 1
    }

    /// `n_1, …, n_m`.
    pub fn breakpoints(&self) -> &[usize] {
        &self.ends[..self.ends.len() - 1]
    }

    /// `k_1, …, k_{m+1}`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut prev = 0;
        self.ends
            .iter()
            .map(|&e| {
                let k = e - prev;
                prev = e;
                k
            })
            .collect()
    }

    /// `n_g` for `g` in `0..=m+1`, with `n_0 = 0`.
    pub fn end(&self, g: usize) -> usize {
        if g == 0 {
            0
        } else {
            self.ends[g - 1]
        }
    }

    /// Block value for `g` in `1..=m+1`.
    pub fn value(&self, g: usize) -> &Rational {
        &self.values[g - 1]
    }

    /// The block `g` (1-based) containing coordinate `j` (1-based).
    pub fn block_of(&self, j: usize) -> usize {
        self.ends.partition_point(|&e| e < j) + 1
    }

    pub fn num_blocks(&self) -> usize {
        self.ends.len()
    }
}

pub fn block_structure(w: &Weight) -> BlockStructure {
    let v = w.normalized();
    let mut ends = Vec::new();
    let mut values = Vec::new();
    for j in 1..=v.len() {
        if j == v.len() || v[j - 1] != v[j] {
            ends.push(j);
            values.push(v[j - 1].clone());
        }
    }
    BlockStructure { ends, values }
}

/// Positive coroots, 1-based indices with `j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coroot {
    /// `(e_j - e_k)^∨`
    Difference(usize, usize),
    /// `(e_j + e_k)^∨`
    Sum(usize, usize),
    /// `e_j^∨` (short root of SO(2n+1))
    Short(usize),
}

impl fmt::Display for Coroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coroot::Difference(j, k) => write!(f, "(e_{j} - e_{k})^v"),
            Coroot::Sum(j, k) => write!(f, "(e_{j} + e_{k})^v"),
            Coroot::Short(j) => write!(f, "(e_{j})^v"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorootPairing {
    pub coroot: Coroot,
    pub value: Rational,
}

/// One entry per positive coroot. Difference/sum pairs come first in
/// lexicographic `(j, k)` order, followed by the short coroots.
pub fn coroot_pairings(w: &Weight) -> Vec<CorootPairing> {
    let n = w.n();
    let l = w.entries();
    let mut out = Vec::new();
    for j in 1..=n {
        for k in j + 1..=n {
            out.push(CorootPairing {
                coroot: Coroot::Difference(j, k),
                value: &l[j - 1] - &l[k - 1],
            });
            if w.family().is_orthogonal() {
                out.push(CorootPairing {
                    coroot: Coroot::Sum(j, k),
                    value: &l[j - 1] + &l[k - 1],
                });
            }
        }
    }
    if w.family() == Family::OddOrthogonal {
        for j in 1..=n {
            out.push(CorootPairing {
                coroot: Coroot::Short(j),
                value: &l[j - 1] * rational::int(2),
            });
        }
    }
    out
}

/// `r_G(λ)`: the smallest strictly positive coroot pairing.
pub fn r_of(w: &Weight) -> Result<Rational> {
    coroot_pairings(w)
        .into_iter()
        .map(|p| p.value)
        .filter(|v| v.is_positive())
        .min()
        .ok_or(Error::PointOrbit)
}

/// The closed-form block expression for `r_G(λ)`: the minimum of the gaps
/// between consecutive blocks, together with `2λ_n` (SO(2n+1), `λ_n ≠ 0`) or
/// `λ_{n-1} + |λ_n|` (SO(2n)).
pub fn r_from_blocks(w: &Weight) -> Result<Rational> {
    let b = block_structure(w);
    let v = w.normalized();
    let n = w.n();
    let mut candidates: Vec<Rational> = (1..=b.m())
        .map(|g| b.value(g) - b.value(g + 1))
        .collect();
    match w.family() {
        Family::UnitaryU => {}
        Family::OddOrthogonal => {
            if !v[n - 1].is_zero() {
                candidates.push(&v[n - 1] * rational::int(2));
            }
        }
        Family::EvenOrthogonal => {
            if n >= 2 {
                let s = &v[n - 2] + &v[n - 1];
                if s.is_positive() {
                    candidates.push(s);
                }
            }
        }
    }
    candidates.into_iter().min().ok_or(Error::PointOrbit)
}

/// Condition (*) gating the full bound for SO orbits:
/// `(λ_n ≠ λ_{n-1}) ∨ (λ_n = 0) ∨ (λ_n ≥ r_G(λ))`, evaluated on the
/// sign-normalized weight. For `n = 1` the first clause is vacuous and the
/// condition holds.
pub fn condition_star(w: &Weight) -> Result<bool> {
    if w.family() == Family::UnitaryU {
        return Err(Error::WrongFamily(w.family()));
    }
    let r = r_of(w)?;
    let n = w.n();
    if n == 1 {
        return Ok(true);
    }
    let v = w.normalized();
    let last = &v[n - 1];
    Ok(last != &v[n - 2] || last.is_zero() || *last >= r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBound {
    pub r: Rational,
    pub r_prime: Rational,
    pub star: bool,
}

/// The certified lower bound `r'`: `r` when (*) holds (always for U(n)),
/// otherwise `|λ_n|`.
pub fn lower_bound(w: &Weight) -> Result<LowerBound> {
    let r = r_of(w)?;
    if w.family() == Family::UnitaryU {
        return Ok(LowerBound {
            r: r.clone(),
            r_prime: r,
            star: true,
        });
    }
    if condition_star(w)? {
        return Ok(LowerBound {
            r: r.clone(),
            r_prime: r,
            star: true,
        });
    }
    let last = w.normalized().pop().expect("n >= 1");
    if last.is_zero() || last >= r {
        return Err(Error::Internal(format!(
            "(*) fails but r = {r} > λ_n = {last} ≠ 0 does not hold"
        )));
    }
    Ok(LowerBound {
        r,
        r_prime: last,
        star: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitDims {
    pub real_dim: usize,
    /// Complex dimension `N`, the number of non-constant Gelfand-Tsetlin functions.
    pub n_complex: usize,
}

/// `dim G - dim Stab(λ)`, with the stabilizer read off the root system:
/// `dim Stab = rank + 2·#{positive roots α : ⟨α^∨, λ⟩ = 0}`.
pub fn orbit_dims(w: &Weight) -> OrbitDims {
    let zero_roots = coroot_pairings(w)
        .iter()
        .filter(|p| p.value.is_zero())
        .count();
    let stab = w.group().rank() + 2 * zero_roots;
    let real_dim = w.group().dim() - stab;
    OrbitDims {
        real_dim,
        n_complex: real_dim / 2,
    }
}

/// The block-multiplicity dimension formula.
///
/// For `λ_n = 0` the subtracted term is `k_{m+1}(k_{m+1}+1)` (SO(2n+1)) or
/// `k_{m+1}(k_{m+1}-1)` (SO(2n)); this is what `dim G - dim Stab(λ)` forces,
/// e.g. SO(5) at `(a, 0)` has stabilizer `SO(2) × SO(3)` and a 6-dimensional
/// orbit. Halving that term would give 7.
pub fn block_formula_dim(w: &Weight) -> usize {
    let b = block_structure(w);
    let n = w.n() as i64;
    let ks = b.multiplicities();
    let s: i64 = ks.iter().map(|&k| (k * (k - 1)) as i64).sum();
    let last_zero = b.value(b.num_blocks()).is_zero();
    let kl = *ks.last().expect("at least one block") as i64;
    let d = match w.family() {
        Family::UnitaryU => n * (n - 1) - s,
        Family::OddOrthogonal => {
            2 * n * n - s - if last_zero { kl * (kl + 1) } else { 0 }
        }
        Family::EvenOrthogonal => {
            2 * n * (n - 1) - s - if last_zero { kl * (kl - 1) } else { 0 }
        }
    };
    usize::try_from(d).expect("dimension formula is non-negative")
}

/// Exact Gromov width for U(n) orbits whose weight differences are all
/// integer multiples of a single difference `λ_i - λ_j`. Returns `None` when
/// no such pair exists.
pub fn exact_width(w: &Weight) -> Result<Option<Rational>> {
    if w.family() != Family::UnitaryU {
        return Err(Error::WrongFamily(w.family()));
    }
    let r = r_of(w)?;
    let l = w.entries();
    let n = l.len();
    for i in 0..n {
        for j in i + 1..n {
            let d = &l[i] - &l[j];
            if d.is_zero() {
                continue;
            }
            let divides_all = (0..n)
                .all(|a| (a + 1..n).all(|b| rational::is_multiple_of(&(&l[a] - &l[b]), &d)));
            if divides_all {
                let width = d.abs();
                if width != r {
                    return Err(Error::Internal(format!(
                        "exact width {width} disagrees with r = {r}"
                    )));
                }
                return Ok(Some(width));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indecomposability {
    pub indecomposable: bool,
    /// The simple coroot whose pairing divides all others, if any.
    pub witness: Option<Coroot>,
    /// `min |⟨α^∨, λ⟩|` over all coroots; an upper bound for the width when
    /// the orbit is indecomposable.
    pub upper_bound: Option<Rational>,
}

pub fn simple_coroots(g: GroupSpec) -> Vec<Coroot> {
    let n = g.n;
    let mut s: Vec<Coroot> = (1..n).map(|i| Coroot::Difference(i, i + 1)).collect();
    match g.family {
        Family::UnitaryU => {}
        Family::OddOrthogonal => s.push(Coroot::Short(n)),
        Family::EvenOrthogonal => {
            if n >= 2 {
                s.push(Coroot::Sum(n - 1, n));
            }
        }
    }
    s
}

/// Checks whether some simple root `α` has every positive-root pairing equal
/// to a positive integer multiple of `⟨α^∨, λ⟩`. Requires regular `λ`.
pub fn is_indecomposable(w: &Weight) -> Result<Indecomposability> {
    let pairings = coroot_pairings(w);
    if pairings.is_empty() {
        return Err(Error::PointOrbit);
    }
    if let Some(p) = pairings.iter().find(|p| p.value.is_zero()) {
        return Err(Error::NotRegular(p.coroot.to_string()));
    }
    let bound = pairings
        .iter()
        .map(|p| p.value.abs())
        .min()
        .expect("non-empty");
    for simple in simple_coroots(w.group()) {
        let base = &pairings
            .iter()
            .find(|p| p.coroot == simple)
            .expect("simple coroot is positive")
            .value;
        let ok = pairings.iter().all(|p| {
            let q = &p.value / base;
            q.is_integer() && q >= Rational::one()
        });
        if ok {
            return Ok(Indecomposability {
                indecomposable: true,
                witness: Some(simple),
                upper_bound: Some(bound),
            });
        }
    }
    Ok(Indecomposability {
        indecomposable: false,
        witness: None,
        upper_bound: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn u(e: &[i64]) -> Weight {
        Weight::from_ints(GroupSpec::unitary(e.len()), e).unwrap()
    }
    fn so_odd(e: &[i64]) -> Weight {
        Weight::from_ints(GroupSpec::odd_orthogonal(e.len()), e).unwrap()
    }
    fn so_even(e: &[i64]) -> Weight {
        Weight::from_ints(GroupSpec::even_orthogonal(e.len()), e).unwrap()
    }
    fn values(w: &Weight) -> Vec<Rational> {
        coroot_pairings(w).into_iter().map(|p| p.value).collect()
    }

    #[test]
    fn chamber_is_enforced() {
        assert!(Weight::from_ints(GroupSpec::unitary(3), &[1, 2, 0]).is_err());
        assert!(Weight::from_ints(GroupSpec::odd_orthogonal(2), &[3, -1]).is_err());
        assert!(Weight::from_ints(GroupSpec::even_orthogonal(2), &[3, -3]).is_ok());
        assert!(Weight::from_ints(GroupSpec::even_orthogonal(3), &[3, -1, 0]).is_err());
        let err = Weight::from_ints(GroupSpec::even_orthogonal(2), &[2, -3]).unwrap_err();
        assert!(err.to_string().contains("λ_1 ≥ |λ_2|"), "{err}");
        assert!(Weight::from_ints(GroupSpec::unitary(2), &[1]).is_err());
        assert!(GroupSpec::new(Family::UnitaryU, 0).is_err());
    }

    #[test]
    fn block_structure_examples() {
        let b = block_structure(&u(&[3, 3, 1]));
        assert_eq!(b.m(), 1);
        assert_eq!(b.breakpoints(), &[2]);
        assert_eq!(b.multiplicities(), vec![2, 1]);

        let b = block_structure(&u(&[5, 5]));
        assert_eq!(b.m(), 0);
        assert_eq!(b.multiplicities(), vec![2]);

        // (a,a,a,b,b,c,c,d) with a > b > c > d
        let b = block_structure(&u(&[9, 9, 9, 7, 7, 4, 4, 1]));
        assert_eq!(b.m(), 3);
        assert_eq!(b.breakpoints(), &[3, 5, 7]);
        assert_eq!(b.multiplicities(), vec![3, 2, 2, 1]);
        assert_eq!(b.block_of(4), 2);
        assert_eq!(b.block_of(8), 4);
        assert_eq!(b.end(0), 0);
    }

    #[test]
    fn even_orthogonal_blocks_use_the_normalized_last_entry() {
        let b = block_structure(&so_even(&[3, 3, -3]));
        assert_eq!(b.multiplicities(), vec![3]);
        let b = block_structure(&so_even(&[3, -1]));
        assert_eq!(b.multiplicities(), vec![1, 1]);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(values(&u(&[3, 1, 0])), vec![int(2), int(3), int(1)]);
        assert_eq!(
            values(&so_odd(&[5, 1])),
            vec![int(4), int(6), int(10), int(2)]
        );
        assert_eq!(values(&so_even(&[3, 3])), vec![int(0), int(6)]);
    }

    #[test]
    fn r_examples() {
        assert_eq!(r_of(&u(&[3, 1, 0])).unwrap(), int(1));
        assert_eq!(r_of(&so_odd(&[5, 1])).unwrap(), int(2));
        assert_eq!(r_of(&so_even(&[3, 3])).unwrap(), int(6));
        assert_eq!(r_of(&u(&[2, 2])), Err(Error::PointOrbit));
        assert_eq!(r_of(&so_odd(&[0, 0])), Err(Error::PointOrbit));
        assert_eq!(r_of(&so_even(&[4])), Err(Error::PointOrbit));
    }

    #[test]
    fn r_block_formula_matches_on_awkward_cases() {
        for w in [
            so_even(&[10, 1, 1]),
            so_even(&[3, 3, -3]),
            so_even(&[2, 0, 0]),
            so_odd(&[4, 4, 0]),
            so_odd(&[1, 1, 1]),
            u(&[7, 7, 2, 2, 2]),
        ] {
            assert_eq!(r_of(&w).unwrap(), r_from_blocks(&w).unwrap(), "{w}");
        }
    }

    #[test]
    fn condition_star_examples() {
        assert!(condition_star(&so_odd(&[5, 1])).unwrap());
        assert!(!condition_star(&so_even(&[3, 3])).unwrap());
        assert!(condition_star(&so_odd(&[4, 2, 0])).unwrap());
        assert!(condition_star(&so_odd(&[7])).unwrap());
        assert_eq!(
            condition_star(&u(&[1, 0])),
            Err(Error::WrongFamily(Family::UnitaryU))
        );
        // λ_{n-1} = -λ_n: normalized to (3, 3, 3), which fails (*).
        assert!(!condition_star(&so_even(&[3, 3, -3])).unwrap());
    }

    #[test]
    fn lower_bound_examples() {
        let lb = lower_bound(&u(&[3, 1, 0])).unwrap();
        assert_eq!((lb.r_prime, lb.star), (int(1), true));
        let lb = lower_bound(&so_even(&[3, 3])).unwrap();
        assert_eq!((lb.r.clone(), lb.r_prime, lb.star), (int(6), int(3), false));
        let lb = lower_bound(&so_odd(&[5])).unwrap();
        assert_eq!((lb.r_prime, lb.star), (int(10), true));
        assert_eq!(lower_bound(&u(&[1, 1])), Err(Error::PointOrbit));
    }

    #[test]
    fn dimension_examples() {
        let d = orbit_dims(&u(&[3, 3, 1]));
        assert_eq!((d.real_dim, d.n_complex), (4, 2));
        let d = orbit_dims(&so_odd(&[4]));
        assert_eq!((d.real_dim, d.n_complex), (2, 1));
        let d = orbit_dims(&so_odd(&[4, 0]));
        assert_eq!((d.real_dim, d.n_complex), (6, 3));
        assert_eq!(block_formula_dim(&so_odd(&[4, 0])), 6);
        assert_eq!(orbit_dims(&so_even(&[3, -3])).real_dim, 2);
        assert_eq!(block_formula_dim(&so_even(&[3, -3])), 2);
        assert_eq!(orbit_dims(&u(&[2, 2])).real_dim, 0);
    }

    #[test]
    fn exact_width_examples() {
        assert_eq!(exact_width(&u(&[1, 0, 0, 0])).unwrap(), Some(int(1)));
        assert_eq!(exact_width(&u(&[2, 1, 0])).unwrap(), Some(int(1)));
        let w = Weight::new(GroupSpec::unitary(3), vec![int(1), frac(1, 2), int(0)]).unwrap();
        assert_eq!(exact_width(&w).unwrap(), Some(frac(1, 2)));
        assert_eq!(exact_width(&u(&[5, 3, 0])).unwrap(), None);
        assert!(matches!(
            exact_width(&so_odd(&[2, 1])),
            Err(Error::WrongFamily(_))
        ));
    }

    #[test]
    fn indecomposable_examples() {
        let i = is_indecomposable(&u(&[2, 1, 0])).unwrap();
        assert!(i.indecomposable);
        assert_eq!(i.witness, Some(Coroot::Difference(1, 2)));
        assert_eq!(i.upper_bound, Some(int(1)));

        assert!(!is_indecomposable(&u(&[5, 3, 0])).unwrap().indecomposable);
        assert!(is_indecomposable(&u(&[1, 0])).unwrap().indecomposable);
        assert!(matches!(
            is_indecomposable(&u(&[1, 1, 0])),
            Err(Error::NotRegular(_))
        ));
        // SO(5), (2,1): pairings 1, 3, 4, 2; e_2 simple with pairing 2 fails,
        // e_1 - e_2 with pairing 1 divides everything.
        let i = is_indecomposable(&so_odd(&[2, 1])).unwrap();
        assert_eq!(i.witness, Some(Coroot::Difference(1, 2)));
    }
}
