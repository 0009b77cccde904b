//! Independent cross-checking oracles for the verification suites.
//!
//! Everything in this module is deliberately naive and shares no code path
//! with the implementation it checks: eigenvalues come from exact integer
//! characteristic polynomials and Sturm-chain bisection instead of Jacobi
//! rotations, and isomorphism classes come from whole-permutation scans
//! instead of the pruned canonicity search used by the enumerator.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::Graph;
use crate::interval::Interval;
use crate::spectral::SymmetricMatrix;

/// Exact largest eigenvalue of a small integer symmetric matrix, via Sturm
/// bisection on the characteristic polynomial. Order is capped at 5: the
/// polynomial is expanded by the Leibniz permutation sum, which is O(n!).
///
/// Returns a certified enclosure; when the largest root is rational the
/// enclosure is exact (width zero).
pub fn char_poly_lambda_max(mat: &SymmetricMatrix) -> Interval {
    let n = mat.order();
    assert!(n <= 5, "oracle is restricted to order <= 5");
    let entries: Vec<i128> = (0..n * n)
        .map(|k| {
            let v = mat.get(k / n, k % n);
            assert!(v.fract() == 0.0 && v.abs() < 1e12, "oracle needs integer entries");
            v as i128
        })
        .collect();

    // char(lambda) = det(lambda I - M), expanded over permutations.
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for_each_permutation(n, |perm, sign| {
        // product of n linear polynomials in lambda
        let mut term = vec![BigRational::zero(); n + 1];
        term[0] = BigRational::one();
        let mut deg = 0;
        for (i, &pi) in perm.iter().enumerate() {
            let a = entries[i * n + pi];
            let (c0, c1) = if i == pi { (-a, 1i128) } else { (-a, 0) };
            let c0 = BigRational::from_integer(BigInt::from(c0));
            let c1 = BigRational::from_integer(BigInt::from(c1));
            let mut next = vec![BigRational::zero(); n + 1];
            for d in 0..=deg {
                let v = term[d].clone();
                if !v.is_zero() {
                    next[d] += &v * &c0;
                    if !c1.is_zero() {
                        next[d + 1] += v * &c1;
                    }
                }
            }
            term = next;
            deg += 1;
        }
        for d in 0..=n {
            if sign > 0 {
                coeffs[d] += term[d].clone();
            } else {
                coeffs[d] -= term[d].clone();
            }
        }
    });

    largest_real_root(&coeffs)
}

/// Certified enclosure of the largest real root of a polynomial with
/// rational coefficients, all of whose roots are real.
fn largest_real_root(coeffs: &[BigRational]) -> Interval {
    let chain = sturm_chain(coeffs);
    let p = &chain[0];

    // Cauchy bound: every root has |root| < 1 + max |c_i| / |c_deg|.
    let deg = p.len() - 1;
    let lead = p[deg].clone();
    let mut bound = BigRational::one();
    for c in &p[..deg] {
        let q = (c / &lead).abs();
        if q > bound {
            bound = q;
        }
    }
    bound += BigRational::one();

    let mut lo = -bound.clone();
    let mut hi = bound;
    debug_assert!(count_roots_above(&chain, &lo) >= 1);
    debug_assert_eq!(count_roots_above(&chain, &hi), 0);

    let eps = BigRational::new(BigInt::one(), BigInt::one() << 80);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for _ in 0..200 {
        if small_enough(&lo, &hi) {
            break;
        }
        let mid = (&lo + &hi) * &half;
        if eval_poly(p, &mid).is_zero() {
            // mid is an eigenvalue; is anything above it?
            let probe = &mid + &eps;
            if count_roots_above(&chain, &probe) == 0 {
                let x = rational_to_f64(&mid);
                return Interval::new(x.next_down(), x.next_up());
            }
            lo = probe;
        } else if count_roots_above(&chain, &mid) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Interval::new(
        rational_to_f64(&lo).next_down(),
        rational_to_f64(&hi).next_up(),
    )
}

fn small_enough(lo: &BigRational, hi: &BigRational) -> bool {
    let width = hi - lo;
    width < BigRational::new(BigInt::one(), BigInt::one() << 48)
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("oracle values are within f64 range")
}

fn eval_poly(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn derivative(p: &[BigRational]) -> Vec<BigRational> {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    (1..p.len())
        .map(|d| &p[d] * BigRational::from_integer(BigInt::from(d)))
        .collect()
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn poly_rem(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    while r.len() - 1 >= dd && !(r.len() == 1 && r[0].is_zero()) {
        let rd = r.len() - 1;
        let f = r[rd].clone() / &lead;
        for k in 0..=dd {
            let idx = rd - dd + k;
            let sub = &f * &den[k];
            r[idx] -= sub;
        }
        r = trim(r);
        if r.len() - 1 < dd {
            break;
        }
        if r.iter().all(|c| c.is_zero()) {
            break;
        }
    }
    r
}

/// Canonical Sturm chain: p, p', then negated remainders. Counts *distinct*
/// real roots, so eigenvalue multiplicities do not disturb bisection.
fn sturm_chain(p: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut chain = vec![trim(p.to_vec())];
    let d = trim(derivative(p));
    if !(d.len() == 1 && d[0].is_zero()) {
        chain.push(d);
    }
    loop {
        let k = chain.len();
        if k < 2 || chain[k - 1].len() == 1 {
            break;
        }
        let r = poly_rem(&chain[k - 2], &chain[k - 1]);
        if r.iter().all(|c| c.is_zero()) {
            break;
        }
        chain.push(trim(r.into_iter().map(|c| -c).collect()));
    }
    chain
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots in (x, +inf). Requires p(x) != 0.
fn count_roots_above(chain: &[Vec<BigRational>], x: &BigRational) -> usize {
    let at_x = variations(chain.iter().map(|p| sign_of(&eval_poly(p, x))));
    let at_inf = variations(chain.iter().map(|p| sign_of(p.last().unwrap())));
    at_x - at_inf
}

/// Visits every permutation of 0..n along with its parity (Heap's method).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize], i8)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i8;
    f(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Upper-triangle bit code of a labeled graph under a relabeling `perm`
/// (vertex `i` of the code is `perm[i]` of the graph), column-major.
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    debug_assert!(n * (n - 1) / 2 <= 64);
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | u64::from(g.has_edge(perm[i], perm[j]));
        }
    }
    code
}

/// Canonical form by exhaustive permutation scan: the maximal code.
/// (The production enumerator canonicalizes to the *minimal* code, so the
/// two sides cannot share a bug in the tie-breaking direction.)
pub fn canonical_code_brute(g: &Graph) -> u64 {
    let n = g.n();
    let mut best = 0u64;
    let mut first = true;
    for_each_permutation(n, |perm, _| {
        let c = code_under(g, perm);
        if first || c > best {
            best = c;
            first = false;
        }
    });
    best
}

pub fn are_isomorphic_brute(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_code_brute(a) == canonical_code_brute(b)
}

/// All connected labeled graphs on n vertices, grouped into isomorphism
/// classes by exhaustive canonicalization. Returns (labeled count, classes).
/// Feasible for n <= 6 routinely; n = 7 is a minutes-scale run.
pub fn connected_classes_brute(n: usize) -> (u64, HashSet<u64>) {
    assert!(n >= 1 && n <= 7);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let np = pairs.len();
    let mut labeled = 0u64;
    let mut classes = HashSet::new();
    for mask in 0u64..(1u64 << np) {
        let mut g = Graph::empty(n).unwrap();
        let mut mm = mask;
        while mm != 0 {
            let k = mm.trailing_zeros() as usize;
            mm &= mm - 1;
            let (u, v) = pairs[k];
            g.add_edge_unchecked(u, v);
        }
        if g.is_connected() {
            labeled += 1;
            classes.insert(canonical_code_brute(&g));
        }
    }
    (labeled, classes)
}
