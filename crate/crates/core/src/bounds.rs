//! Classical spectral and Randic-index bounds.
//!
//! Each function returns a certified enclosure of the bound's exact value;
//! the verification suites then compare these against certified enclosures
//! of the spectral radii themselves, so a bound "holds" only when the
//! intervals are strictly ordered.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{CertInterval, Interval};
use crate::invariants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    /// lambda_1 <= sqrt(2m - n + 1)
    Hong,
    /// q <= 2m/(n-1) + n - 2
    FengYu,
    /// q <= max over vertices of d(v) + avg neighbor degree
    Merris,
    /// R >= sqrt(n - 1) for connected graphs
    #[serde(rename = "be_lower")]
    BolobasErdosLower,
    /// R >= sqrt(2(n-1)) + 1/(n-1) - sqrt(2/(n-1)) when min degree >= 2
    #[serde(rename = "dfr_lower")]
    DelormeFavaronRautenbachLower,
    /// lambda_1 >= m / R
    #[serde(rename = "fms_lower")]
    FavaronMaheoSacleLower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Upper,
    Lower,
}

/// Which spectral or degree quantity a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Lambda1,
    QRadius,
    Randic,
}

impl BoundName {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundName::Hong => "hong",
            BoundName::FengYu => "feng_yu",
            BoundName::Merris => "merris",
            BoundName::BolobasErdosLower => "be_lower",
            BoundName::DelormeFavaronRautenbachLower => "dfr_lower",
            BoundName::FavaronMaheoSacleLower => "fms_lower",
        }
    }
}

impl Side {
    pub fn as_str(&self) -> &'static str {
        match self {
            Side::Upper => "upper",
            Side::Lower => "lower",
        }
    }
}

impl Target {
    pub fn as_str(&self) -> &'static str {
        match self {
            Target::Lambda1 => "lambda1",
            Target::QRadius => "q",
            Target::Randic => "randic",
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundValue {
    pub name: BoundName,
    pub side: Side,
    pub target: Target,
    pub value: Interval,
}

/// lambda_1(G) <= sqrt(2m - n + 1) for connected graphs.
pub fn hong_bound(n: usize, m: usize) -> Result<Interval> {
    if n < 1 || m + 1 < n {
        return Err(Error::Infeasible(format!(
            "sqrt(2m - n + 1) needs m >= n - 1, got n = {n}, m = {m}"
        )));
    }
    Ok(Interval::from_int((2 * m + 1 - n) as i64).sqrt())
}

/// q(G) <= 2m/(n-1) + n - 2.
pub fn feng_yu_bound(n: usize, m: usize) -> Result<Interval> {
    if n < 2 {
        return Err(Error::Infeasible(format!("q bound needs n >= 2, got n = {n}")));
    }
    let frac = Interval::from_ratio(2 * m as i64, (n - 1) as i64);
    Ok(frac + Interval::from_int(n as i64 - 2))
}

/// q(G) <= max over vertices v of t(v) = d(v) + m(v). The maximum is taken
/// over exact rationals before any rounding.
pub fn merris_bound(g: &Graph) -> Result<Interval> {
    let t_max = (0..g.n())
        .map(|v| invariants::t_value(g, v))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .ok_or(Error::BadOrder(0))?;
    Ok(Interval::from_ratio(*t_max.numer(), *t_max.denom()))
}

/// lambda_1(G) >= m / R(G), given a positive enclosure of R.
pub fn fms_lower_lambda1(m: usize, randic: Interval) -> Result<Interval> {
    if randic.lo() <= 0.0 {
        return Err(Error::NonPositiveRandic(randic.lo(), randic.hi()));
    }
    Ok(Interval::from_int(m as i64) / randic)
}

/// R(G) >= sqrt(n - 1) for connected graphs, with equality only for stars.
pub fn be_lower_randic(n: usize) -> Result<Interval> {
    if n < 2 {
        return Err(Error::Infeasible(format!("Randic lower bound needs n >= 2, got n = {n}")));
    }
    Ok(Interval::from_int((n - 1) as i64).sqrt())
}

/// R(G) >= sqrt(2(n-1)) + 1/(n-1) - sqrt(2/(n-1)) for min degree >= 2.
pub fn dfr_lower_randic(n: usize) -> Result<Interval> {
    if n < 3 {
        return Err(Error::Infeasible(format!(
            "min-degree-2 Randic bound needs n >= 3, got n = {n}"
        )));
    }
    let nm1 = (n - 1) as i64;
    let a = Interval::from_int(2 * nm1).sqrt();
    let b = Interval::from_ratio(1, nm1);
    let c = (Interval::from_int(2) / Interval::from_int(nm1)).sqrt();
    Ok(a + b - c)
}

/// The full slate of applicable bounds for one connected graph.
pub fn standard_bounds(g: &Graph, randic: Interval) -> Result<Vec<BoundValue>> {
    let (n, m) = (g.n(), g.m());
    let mut out = vec![
        BoundValue {
            name: BoundName::Hong,
            side: Side::Upper,
            target: Target::Lambda1,
            value: hong_bound(n, m)?,
        },
        BoundValue {
            name: BoundName::FengYu,
            side: Side::Upper,
            target: Target::QRadius,
            value: feng_yu_bound(n, m)?,
        },
        BoundValue {
            name: BoundName::Merris,
            side: Side::Upper,
            target: Target::QRadius,
            value: merris_bound(g)?,
        },
        BoundValue {
            name: BoundName::BolobasErdosLower,
            side: Side::Lower,
            target: Target::Randic,
            value: be_lower_randic(n)?,
        },
        BoundValue {
            name: BoundName::FavaronMaheoSacleLower,
            side: Side::Lower,
            target: Target::Lambda1,
            value: fms_lower_lambda1(m, randic)?,
        },
    ];
    if g.min_degree() >= 2 {
        out.push(BoundValue {
            name: BoundName::DelormeFavaronRautenbachLower,
            side: Side::Lower,
            target: Target::Randic,
            value: dfr_lower_randic(n)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn hong_closed_values() {
        let b = hong_bound(15, 23).unwrap();
        assert!(b.contains(32f64.sqrt()) && b.width() < 1e-13);
        // K_4: lambda_1 = 3, bound sqrt(9) = 3 is tight
        let b = hong_bound(4, 6).unwrap();
        assert!(b.contains(3.0));
        assert!(hong_bound(10, 3).is_err());
    }

    #[test]
    fn feng_yu_closed_values() {
        // stars: 2(n-1)/(n-1) + n - 2 = n, exactly q(S_n)
        let b = feng_yu_bound(13, 12).unwrap();
        assert!(b.contains(13.0) && b.width() < 1e-12);
        // complete graphs: 2m/(n-1) = n, bound = 2n - 2 = q(K_n)
        let b = feng_yu_bound(12, 66).unwrap();
        assert!(b.contains(22.0));
    }

    #[test]
    fn merris_closed_values() {
        // P_4: t at an inner vertex = 2 + 3/2
        let p4 = Graph::family(Family::Path, 4).unwrap();
        assert!(merris_bound(&p4).unwrap().contains(3.5));
        // K_n: t(v) = 2(n-1), matching q exactly
        let k5 = Graph::family(Family::Complete, 5).unwrap();
        assert!(merris_bound(&k5).unwrap().contains(8.0));
        // isolated vertices have no average neighbor degree
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(merris_bound(&g).is_err());
    }

    #[test]
    fn fms_is_tight_for_stars() {
        let s13 = Graph::family(Family::Star, 13).unwrap();
        let r = invariants::randic_index(&s13).unwrap();
        let lower = fms_lower_lambda1(s13.m(), r).unwrap();
        // m / R = 12 / sqrt(12) = sqrt(12) = lambda_1(S_13)
        assert!(lower.contains(12f64.sqrt()));
        assert!(fms_lower_lambda1(5, Interval::new(-1.0, 1.0)).is_err());
    }

    #[test]
    fn randic_lower_bounds() {
        let b = be_lower_randic(13).unwrap();
        assert!(b.contains(12f64.sqrt()));
        // C_n has min degree 2 and R = n/2; the bound must sit below it
        for n in 3..=20 {
            let lb = dfr_lower_randic(n).unwrap();
            assert!(lb.hi() <= n as f64 / 2.0 + 1e-12, "C_{n}");
        }
        // tight at n = 3: bound = 2 + 1/2 - 1 = 3/2 = R(C_3)
        let b3 = dfr_lower_randic(3).unwrap();
        assert!(b3.contains(1.5));
    }

    #[test]
    fn standard_slate_respects_min_degree() {
        let star = Graph::family(Family::Star, 6).unwrap();
        let r = invariants::randic_index(&star).unwrap();
        let slate = standard_bounds(&star, r).unwrap();
        assert!(slate.iter().all(|b| b.name != BoundName::DelormeFavaronRautenbachLower));
        let cycle = Graph::family(Family::Cycle, 6).unwrap();
        let r = invariants::randic_index(&cycle).unwrap();
        let slate = standard_bounds(&cycle, r).unwrap();
        assert!(slate.iter().any(|b| b.name == BoundName::DelormeFavaronRautenbachLower));
    }
}
