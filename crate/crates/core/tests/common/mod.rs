#![allow(dead_code)]

use gtwidth::lie::{self, Family, GroupSpec, Weight};
use gtwidth::rational::{frac, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const FAMILIES: [Family; 3] = [
    Family::UnitaryU,
    Family::OddOrthogonal,
    Family::EvenOrthogonal,
];

pub fn group(family: Family, n: usize) -> GroupSpec {
    GroupSpec::new(family, n).unwrap()
}

pub fn weight(family: Family, e: &[i64]) -> Weight {
    Weight::from_ints(group(family, e.len()), e).unwrap()
}

fn random_weight(family: Family, rng: &mut ChaCha8Rng) -> Option<Weight> {
    let n = match family {
        Family::EvenOrthogonal => rng.random_range(2..=6),
        _ => rng.random_range(1..=6),
    };
    let top = if rng.random_bool(0.5) { 4 } else { 9 };
    let mut v: Vec<i64> = (0..n).map(|_| rng.random_range(0..=top)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    if rng.random_bool(0.25) {
        let zeros = rng.random_range(1..=n);
        for x in v.iter_mut().rev().take(zeros) {
            *x = 0;
        }
    }
    if family == Family::UnitaryU && rng.random_bool(0.3) {
        let shift = rng.random_range(-5..=5);
        v.iter_mut().for_each(|x| *x += shift);
    }
    if family == Family::EvenOrthogonal {
        if rng.random_bool(0.15) {
            v[n - 1] = -v[n - 2];
        } else if rng.random_bool(0.3) {
            v[n - 1] = -v[n - 1];
        }
    }
    let denom = if rng.random_bool(0.2) { 2 } else { 1 };
    let entries: Vec<Rational> = v.iter().map(|&x| frac(x, denom)).collect();
    let w = Weight::new(group(family, n), entries).ok()?;
    lie::r_of(&w).ok()?;
    Some(w)
}

/// Deterministic random non-point weights: ties, zero tails, negative and
/// mirrored last entries (SO(2n)), half-integers, `n ≤ 6`.
pub fn sweep(family: Family, count: usize, seed: u64) -> Vec<Weight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(w) = random_weight(family, &mut rng) {
            out.push(w);
        }
    }
    out
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every block pattern for `n ≤ max_n`, with a few gap profiles and last
/// values (zero, small, large; negated for SO(2n)).
pub fn block_grid(family: Family, max_n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for blocks in compositions(n) {
            let m = blocks.len();
            let gap_profiles: Vec<Vec<i64>> = vec![
                vec![1; m],
                (1..=m as i64).collect(),
                (1..=m as i64).rev().map(|g| 2 * g).collect(),
            ];
            for last in [0i64, 1, 3] {
                for gaps in &gap_profiles {
                    let mut values = vec![last; m];
                    for g in (0..m.saturating_sub(1)).rev() {
                        values[g] = values[g + 1] + gaps[g];
                    }
                    let mut e: Vec<i64> = Vec::with_capacity(n);
                    for (b, &k) in blocks.iter().enumerate() {
                        e.extend(std::iter::repeat_n(values[b], k));
                    }
                    let mut signs = vec![1i64];
                    if family == Family::EvenOrthogonal && last != 0 {
                        signs.push(-1);
                    }
                    for s in signs {
                        let mut e = e.clone();
                        e[n - 1] *= s;
                        let Ok(w) = Weight::from_ints(group(family, n), &e) else {
                            continue;
                        };
                        if lie::r_of(&w).is_ok() && !out.contains(&w) {
                            out.push(w);
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn report(id: usize, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {id:>2} [{}] {name}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}
