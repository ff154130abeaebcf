use gtwidth::lie::{self, Family, GroupSpec, Weight};
use gtwidth::oracle::{self, LinearProgram, LpStatus};
use gtwidth::polytope::{self, hrep};
use gtwidth::rational::{self, frac, int, to_f64, Rational};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::UnitaryU),
        Just(Family::OddOrthogonal),
        Just(Family::EvenOrthogonal),
    ]
}

fn weight() -> impl Strategy<Value = Weight> {
    (family(), 1usize..=5, prop::collection::vec(0i64..8, 5), any::<bool>(), 1i64..=3)
        .prop_filter_map("point orbit or invalid", |(f, n, mut v, flip, den)| {
            let n = if f == Family::EvenOrthogonal { n.max(2) } else { n };
            v.truncate(n);
            v.sort_unstable_by(|a, b| b.cmp(a));
            if flip && f != Family::OddOrthogonal {
                v[n - 1] = -v[n - 1];
            }
            let e = v.iter().map(|&x| frac(x, den)).collect();
            let w = Weight::new(GroupSpec::new(f, n).ok()?, e).ok()?;
            lie::r_of(&w).ok()?;
            Some(w)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn certificate_is_unimodular_and_contained(w in weight()) {
        let c = polytope::certificate(&w).unwrap();
        prop_assert_eq!(c.w.det.abs(), 1);
        prop_assert!(c.w.lower_triangular);
        let p = hrep(&w).unwrap();
        for x in &c.simplex_vertices {
            prop_assert!(p.contains(x).unwrap());
        }
        prop_assert!(c.r_prime <= c.r);
    }

    #[test]
    fn v_is_a_vertex(w in weight()) {
        let p = hrep(&w).unwrap();
        let v = polytope::vertex_v(&w).unwrap();
        prop_assert!(oracle::is_vertex(&p, &v).unwrap());
    }

    #[test]
    fn edges_are_at_least_r_prime(w in weight()) {
        let lb = lie::lower_bound(&w).unwrap();
        for e in polytope::edges(&w).unwrap() {
            prop_assert_eq!(&e.interval.1 - &e.interval.0, e.length.clone());
            prop_assert!(e.length >= lb.r_prime, "{} at {}", w, e.cell);
            prop_assert!(e.moved.contains(&e.cell));
        }
    }

    #[test]
    fn dimensions_agree(w in weight()) {
        let d = lie::orbit_dims(&w);
        prop_assert_eq!(d.real_dim + oracle::stabilizer_dim(&w), w.group().dim());
        prop_assert_eq!(d.real_dim, 2 * gtwidth::build_diagram(&w).unwrap().len());
        prop_assert_eq!(d.real_dim, lie::block_formula_dim(&w));
    }

    #[test]
    fn r_routes_agree(w in weight()) {
        prop_assert_eq!(lie::r_of(&w).unwrap(), lie::r_from_blocks(&w).unwrap());
    }

    #[test]
    fn distinguished_point_maps_to_v(w in weight()) {
        let x = oracle::gt_values(&w, &oracle::distinguished_point(&w)).unwrap();
        let v = polytope::vertex_v(&w).unwrap();
        for (a, b) in x.iter().zip(&v) {
            prop_assert!((a - to_f64(b)).abs() < 1e-10);
        }
    }

    #[test]
    fn random_orbit_points_land_in_p(w in weight(), seed in any::<u64>()) {
        let r = oracle::montecarlo_membership(&w, 20, 1e-8, seed).unwrap();
        prop_assert!(r.pass, "{} {:?}", w, r);
    }

    #[test]
    fn lp_witness_attains_value(w in weight(), c in prop::collection::vec(-3i64..=3, 40), max in any::<bool>()) {
        let p = hrep(&w).unwrap();
        let obj: Vec<Rational> = c.iter().take(p.dim()).map(|&x| int(x)).collect();
        prop_assume!(obj.len() == p.dim());
        let r = oracle::lp_optimize(&p, &obj, max).unwrap();
        prop_assert_eq!(r.status, LpStatus::Optimal);
        let x = r.witness.unwrap();
        prop_assert!(p.contains(&x).unwrap());
        let value: Rational = obj.iter().zip(&x).map(|(a, b)| a * b).sum();
        prop_assert_eq!(Some(value.clone()), r.value);
        // V and every simplex vertex are feasible, so none beats the optimum.
        for y in polytope::simplex_r(&w).unwrap() {
            let vy: Rational = obj.iter().zip(&y).map(|(a, b)| a * b).sum();
            let no_better = if max { vy <= value } else { vy >= value };
            prop_assert!(no_better);
        }
    }

    #[test]
    fn chamber_rejects_increasing_pairs(n in 2usize..=5, a in 0i64..5, d in 1i64..5) {
        let mut e = vec![0i64; n];
        e[0] = a;
        e[1] = a + d;
        prop_assert!(Weight::from_ints(GroupSpec::unitary(n), &e).is_err());
        prop_assert!(Weight::from_ints(GroupSpec::odd_orthogonal(n), &e).is_err());
    }

    #[test]
    fn rational_strings_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = frac(p, q);
        prop_assert_eq!(rational::parse(&rational::format(&r)).unwrap(), r);
    }
}

#[test]
fn lp_matches_brute_force_on_a_box() {
    // max 2x - y over [0,3] x [-1,4] with x + y ≤ 5.
    let mut lp = LinearProgram::new(2);
    for (row, rhs) in [([1, 0], 3), ([-1, 0], 0), ([0, 1], 4), ([0, -1], 1), ([1, 1], 5)] {
        lp.le.push((row.iter().map(|&x| int(x)).collect(), int(rhs)));
    }
    let r = lp.solve(&[int(2), int(-1)], true).unwrap();
    assert_eq!(r.value, Some(int(7)));
    let r = lp.solve(&[int(2), int(-1)], false).unwrap();
    assert_eq!(r.value, Some(int(-4)));
}
