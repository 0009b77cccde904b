//! Spectral enclosures checked against Rayleigh quotients, degree bounds,
//! and an independent characteristic-polynomial oracle.

use rqv_core::enumerate::{enumerate_connected, GraphFilter};
use rqv_core::oracle::char_poly_lambda_max;
use rqv_core::spectral::{lambda1, q_radius, SymmetricMatrix, DEFAULT_EIGEN_TOL};

const TOL: f64 = 1e-9;

#[test]
fn rayleigh_and_degree_bounds_hold_on_every_small_graph() {
    for n in 2..=8 {
        for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
            let q = q_radius(&g, DEFAULT_EIGEN_TOL).unwrap();
            let a = lambda1(&g, DEFAULT_EIGEN_TOL).unwrap();
            let m = g.m() as f64;
            let nn = n as f64;
            // all-ones Rayleigh quotient: x^T Q x = sum over edges (x_u+x_v)^2
            assert!(q.lo() >= 4.0 * m / nn - TOL, "q >= 4m/n failed on n={n} m={m}");
            assert!(
                q.hi() <= 2.0 * g.max_degree() as f64 + TOL,
                "q <= 2*Delta failed on n={n} m={m}"
            );
            assert!(a.hi() <= q.hi() + TOL, "lambda1 <= q failed on n={n} m={m}");
            assert!(q.width() <= 1e-8, "loose q bracket on n={n}");
            assert!(a.width() <= 1e-8, "loose lambda1 bracket on n={n}");
        }
    }
}

#[test]
fn eigensolver_agrees_with_the_characteristic_polynomial_oracle() {
    for n in 2..=5 {
        for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
            let q = q_radius(&g, DEFAULT_EIGEN_TOL).unwrap();
            let q_oracle = char_poly_lambda_max(&SymmetricMatrix::signless_laplacian(&g));
            assert!(
                (q.mid() - q_oracle.mid()).abs() <= TOL,
                "q disagreement at n={n}: {:?} vs {:?}",
                (q.lo(), q.hi()),
                (q_oracle.lo(), q_oracle.hi())
            );
            let a = lambda1(&g, DEFAULT_EIGEN_TOL).unwrap();
            let a_oracle = char_poly_lambda_max(&SymmetricMatrix::adjacency(&g));
            assert!(
                (a.mid() - a_oracle.mid()).abs() <= TOL,
                "lambda1 disagreement at n={n}"
            );
        }
    }
}
