//! Classical bound inequalities swept over every connected graph of small
//! order, with equality classes pinned exactly.

use rqv_core::bounds::{BoundName, Side};
use rqv_core::enumerate::{enumerate_connected, GraphFilter};
use rqv_core::invariants::{full_report, randic_index, t_value};
use rqv_core::spectral::DEFAULT_EIGEN_TOL;
use rqv_core::{CertInterval, Family, Graph, Interval};

const TOL: f64 = 1e-9;

fn sqrt_int(k: i64) -> Interval {
    Interval::from_int(k).sqrt()
}

#[test]
fn classical_bounds_sandwich_every_small_graph() {
    for n in 2..=8usize {
        for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
            let rep = full_report(&g, DEFAULT_EIGEN_TOL).unwrap();
            for b in &rep.bounds {
                let (quantity, label) = match b.name {
                    BoundName::Hong | BoundName::FavaronMaheoSacleLower => {
                        (rep.lambda1, "lambda1")
                    }
                    BoundName::FengYu | BoundName::Merris => (rep.q_radius, "q"),
                    BoundName::BolobasErdosLower | BoundName::DelormeFavaronRautenbachLower => {
                        (rep.randic, "R")
                    }
                };
                match b.side {
                    Side::Upper => assert!(
                        quantity.hi() <= b.value.hi() + TOL,
                        "{} violates upper bound {} on n={n} m={}",
                        label,
                        b.name.as_str(),
                        rep.m
                    ),
                    Side::Lower => assert!(
                        quantity.lo() >= b.value.lo() - TOL,
                        "{} violates lower bound {} on n={n} m={}",
                        label,
                        b.name.as_str(),
                        rep.m
                    ),
                }
            }
        }
    }
}

#[test]
fn randic_floor_equality_class_is_exactly_the_stars() {
    for n in 2..=8usize {
        let floor = sqrt_int(n as i64 - 1);
        for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
            let r = randic_index(&g).unwrap();
            assert!(r.lo() >= floor.lo() - TOL, "R >= sqrt(n-1) failed on n={n}");
            let attains = r.lo() <= floor.hi() + TOL;
            assert_eq!(
                attains,
                g.is_star(),
                "sqrt(n-1) attainment must single out stars, n={n} m={}",
                g.m()
            );
        }
    }
}

/// For m >= n, a Randic index above sqrt(n-1) + (2m-2n+2)/(n sqrt(n-1))
/// forces the ratio below n/sqrt(n-1): the workhorse reduction behind the
/// second branch of the theorem, checked here as a material implication.
#[test]
fn randic_threshold_implies_the_second_branch_bound() {
    for n in 4..=8i64 {
        for g in enumerate_connected(n as usize, GraphFilter::default()).unwrap() {
            if (g.m() as i64) < n {
                continue;
            }
            let m = g.m() as i64;
            let rep = full_report(&g, DEFAULT_EIGEN_TOL).unwrap();
            let threshold = sqrt_int(n - 1)
                + Interval::from_int(2 * m - 2 * n + 2)
                    / (Interval::from_int(n) * sqrt_int(n - 1));
            if rep.randic.lo() > threshold.hi() {
                let cap = Interval::from_int(n) / sqrt_int(n - 1);
                assert!(
                    rep.ratio.hi() < cap.hi() + TOL,
                    "threshold implication failed on n={n} m={m}"
                );
            }
        }
    }
}

#[test]
fn randic_is_at_least_density_over_max_degree_share() {
    // R >= m/(n-1): each edge term is at least 1/(n-1)
    for n in 2..=8usize {
        for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
            let r = randic_index(&g).unwrap();
            assert!(
                r.lo() >= g.m() as f64 / (n as f64 - 1.0) - TOL,
                "R >= m/(n-1) failed on n={n} m={}",
                g.m()
            );
        }
    }
}

#[test]
fn small_max_degree_keeps_q_below_order() {
    for n in 2..=8usize {
        for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
            if 2 * g.max_degree() < n {
                let rep = full_report(&g, DEFAULT_EIGEN_TOL).unwrap();
                assert!(
                    rep.q_radius.hi() < n as f64 + TOL,
                    "q < n failed for Delta < n/2 on n={n} m={}",
                    g.m()
                );
            }
        }
    }
}

#[test]
fn max_t_value_dominates_q() {
    for n in 2..=8usize {
        for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
            let rep = full_report(&g, DEFAULT_EIGEN_TOL).unwrap();
            let max_t = (0..n)
                .map(|v| {
                    let t = t_value(&g, v).unwrap();
                    *t.numer() as f64 / *t.denom() as f64
                })
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(max_t >= rep.q_radius.lo() - TOL, "max t(v) >= q failed on n={n}");
        }
    }
}

/// A simplification sometimes quoted for trees, q(T) = n, is false for
/// every non-star tree (q(P_4) = 2 + sqrt(2) < 4). The correct statement is
/// q(T) <= n with equality exactly for stars, and that is what ships.
#[test]
fn tree_q_is_at_most_order_with_equality_only_for_stars() {
    for n in 2..=8usize {
        let trees = GraphFilter { edges: Some((n - 1)..=(n - 1)), ..Default::default() };
        for g in enumerate_connected(n, trees).unwrap() {
            let rep = full_report(&g, DEFAULT_EIGEN_TOL).unwrap();
            assert!(rep.q_radius.hi() <= n as f64 + TOL, "q(tree) <= n failed at n={n}");
            let attains = rep.q_radius.hi() >= n as f64 - TOL;
            assert_eq!(attains, g.is_star(), "q(tree) = n must single out stars, n={n}");
        }
    }
}

/// The unicyclic closure step: the minimum unicyclic Randic index (attained
/// by the star plus one edge) clears the threshold that the reduction needs
/// at m = n, for every order the second branch covers at desk scale.
#[test]
fn star_plus_edge_randic_clears_the_unicyclic_threshold() {
    for n in 12..=50i64 {
        let g = Graph::family(Family::StarPlusEdge, n as usize).unwrap();
        let r = randic_index(&g).unwrap();
        let thr = sqrt_int(n - 1)
            + Interval::from_int(2) / (Interval::from_int(n) * sqrt_int(n - 1));
        assert!(
            r.lo() > thr.hi(),
            "R(S*_n) must exceed sqrt(n-1) + 2/(n sqrt(n-1)) at n = {n}"
        );
    }
}
