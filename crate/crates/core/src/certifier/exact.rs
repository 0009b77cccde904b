//! Exact integer evaluation of the polynomial side of the certificates.
//!
//! h and l are integer polynomials in (n, m), so their values, differences,
//! and monotonicity claims are decided in checked i128 arithmetic with no
//! rounding at all. The magnitudes involved stay far below the i128 range
//! for every grid this crate accepts; overflow is still surfaced as an
//! error rather than wrapped.

use crate::error::{Error, Result};

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// h(n, m) = m^2 n^2 (n-1) - (2m + n^2 - 3n + 2)^2 (2m - (n-1)).
pub fn h_value(n: i64, m: i64) -> Result<i128> {
    let (n, m) = (n as i128, m as i128);
    let lead = mul(mul(m, m)?, mul(mul(n, n)?, n - 1)?)?;
    let p = add(2 * m, sub(mul(n, n)?, 3 * n - 2)?)?;
    let tail = mul(mul(p, p)?, sub(2 * m, n - 1)?)?;
    sub(lead, tail)
}

/// l(n, m) = h'(m) = 2mn^2(n-1) - 4(n^2 + 2m - 3n + 2)(2m - n + 1)
///           - 2(n^2 + 2m - 3n + 2)^2.
pub fn l_value(n: i64, m: i64) -> Result<i128> {
    let (n, m) = (n as i128, m as i128);
    let p = add(2 * m, sub(mul(n, n)?, 3 * n - 2)?)?;
    let q = sub(2 * m, n - 1)?;
    let lead = mul(2 * m, mul(mul(n, n)?, n - 1)?)?;
    sub(sub(lead, mul(4, mul(p, q)?)?)?, mul(2, mul(p, p)?)?)
}

/// The closed cubic for h at m = n + 8: 45n^3 - 657n^2 + 288n - 5508.
pub fn h_cubic(n: i64) -> Result<i128> {
    let n = n as i128;
    let n2 = mul(n, n)?;
    sub(add(sub(mul(45, mul(n2, n)?)?, mul(657, n2)?)?, 288 * n)?, 5508)
}

/// The closed cubic for l at m = n + 8: 14n^3 - 154n^2 + 68n - 1872.
pub fn l_cubic(n: i64) -> Result<i128> {
    let n = n as i128;
    let n2 = mul(n, n)?;
    sub(add(sub(mul(14, mul(n2, n)?)?, mul(154, n2)?)?, 68 * n)?, 1872)
}

/// l'(m) = 2n^3 - 18n^2 - 48m + 56n - 40.
pub fn l_slope(n: i64, m: i64) -> Result<i128> {
    let (n, m) = (n as i128, m as i128);
    let n2 = mul(n, n)?;
    sub(add(sub(mul(2, mul(n2, n)?)?, mul(18, n2)?)?, 56 * n - 40)?, 48 * m)
}

/// floor(sqrt(x)) for unsigned 128-bit x.
pub fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    // one f64 guess then settle exactly
    while r.checked_mul(r).map_or(true, |rr| rr > x) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |rr| rr <= x) {
        r += 1;
    }
    r
}

/// floor(2 n^{3/2}) = floor(sqrt(4 n^3)), exactly.
pub fn floor_2n32(n: u64) -> u64 {
    let cube = (n as u128).pow(3);
    isqrt(4 * cube) as u64
}
