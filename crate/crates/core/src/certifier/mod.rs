//! Certificates for the inequality and identity grids behind the ratio
//! bound.
//!
//! Every check reduces a finite family of claims to sign tests that are
//! decided either in exact integer/rational arithmetic (polynomials at
//! integer points) or by certified interval enclosures (anything with a
//! square root). A claim whose f64 enclosure straddles the threshold is
//! retried in exact rational interval arithmetic before the check is
//! allowed to report `undecidable`, so spurious precision failures cannot
//! masquerade as mathematical ones.

pub mod exact;

use std::time::Instant;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{CertInterval, Interval, RatInterval, SignTest};
use crate::invariants;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    ReduceF,
    #[serde(rename = "lemma_1314")]
    Lemma1314,
    G12Final,
    Lb131N13,
    Lb131N12,
    Min2,
    LargedegreeT,
    HIdentity,
    LIdentity,
    HMonotone,
    LConcaveEndpoints,
    Base13K1Randic,
    Dense,
    Small,
}

impl LemmaId {
    /// Suite order; `certify_all` runs exactly this sequence.
    pub const ALL: [LemmaId; 14] = [
        LemmaId::ReduceF,
        LemmaId::Lemma1314,
        LemmaId::G12Final,
        LemmaId::Lb131N13,
        LemmaId::Lb131N12,
        LemmaId::Min2,
        LemmaId::LargedegreeT,
        LemmaId::HIdentity,
        LemmaId::LIdentity,
        LemmaId::HMonotone,
        LemmaId::LConcaveEndpoints,
        LemmaId::Base13K1Randic,
        LemmaId::Dense,
        LemmaId::Small,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::ReduceF => "reduce_f",
            LemmaId::Lemma1314 => "lemma_1314",
            LemmaId::G12Final => "g12_final",
            LemmaId::Lb131N13 => "lb131_n13",
            LemmaId::Lb131N12 => "lb131_n12",
            LemmaId::Min2 => "min2",
            LemmaId::LargedegreeT => "largedegree_t",
            LemmaId::HIdentity => "h_identity",
            LemmaId::LIdentity => "l_identity",
            LemmaId::HMonotone => "h_monotone",
            LemmaId::LConcaveEndpoints => "l_concave_endpoints",
            LemmaId::Base13K1Randic => "base13_k1_randic",
            LemmaId::Dense => "dense",
            LemmaId::Small => "small",
        }
    }
}

impl std::str::FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "unknown certificate id `{s}`; known ids: {}",
                    LemmaId::ALL.map(|id| id.as_str()).join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Certified,
    Failed,
    Undecidable,
}

/// One machine-checkable certificate: a grid of claims, the outcome, and
/// the thinnest margin encountered.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheck {
    pub schema_version: u32,
    pub lemma_id: LemmaId,
    pub grid: String,
    pub status: CheckStatus,
    pub worst_margin: Interval,
    pub witness: String,
    pub evaluated_points: u64,
    pub wall_time_ms: u64,
    /// Diagnostic points outside the claimed domain that do not hold.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub exceptions: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Certified
    }
}

#[derive(Debug, Clone)]
pub struct CertifyOptions {
    /// Grid ceiling for the polynomial h/l certificates (>= 18).
    pub n_max_hl: usize,
    /// Grid ceiling for the rational chain certificates (>= 13).
    pub n_max_chains: usize,
    /// Test hook: added to every f margin. Nonzero values exist to prove
    /// the machinery can fail; production runs use 0.
    pub f_shift: f64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { n_max_hl: 40, n_max_chains: 100, f_shift: 0.0 }
    }
}

fn validate_options(opts: &CertifyOptions) -> Result<()> {
    if opts.n_max_hl < 18 || opts.n_max_hl > 100 {
        return Err(Error::InvalidInput(format!(
            "h/l grid ceiling must be in 18..=100, got {}",
            opts.n_max_hl
        )));
    }
    if opts.n_max_chains < 13 || opts.n_max_chains > 10_000 {
        return Err(Error::InvalidInput(format!(
            "chain grid ceiling must be in 13..=10000, got {}",
            opts.n_max_chains
        )));
    }
    Ok(())
}

/// Runs the complete certificate suite in a fixed order.
pub fn certify_all(opts: &CertifyOptions) -> Result<Vec<LemmaCheck>> {
    validate_options(opts)?;
    Ok(LemmaId::ALL.iter().map(|id| run_certificate(*id, opts)).collect())
}

/// Runs a single certificate by id.
pub fn certify_one(id: LemmaId, opts: &CertifyOptions) -> Result<LemmaCheck> {
    validate_options(opts)?;
    Ok(run_certificate(id, opts))
}

fn run_certificate(id: LemmaId, opts: &CertifyOptions) -> LemmaCheck {
    match id {
        LemmaId::ReduceF => certify_reduce_f(opts),
        LemmaId::Lemma1314 => certify_lemma_1314(opts),
        LemmaId::G12Final => certify_g12_final(opts),
        LemmaId::Lb131N13 => certify_lb131_n13(opts),
        LemmaId::Lb131N12 => certify_lb131_n12(opts),
        LemmaId::Min2 => certify_min2(opts),
        LemmaId::LargedegreeT => certify_largedegree(opts),
        LemmaId::HIdentity => certify_h_identity(opts),
        LemmaId::LIdentity => certify_l_identity(opts),
        LemmaId::HMonotone => certify_h_monotone(opts),
        LemmaId::LConcaveEndpoints => certify_l_concave_endpoints(opts),
        LemmaId::Base13K1Randic => certify_base13_k1(opts),
        LemmaId::Dense => certify_dense(opts),
        LemmaId::Small => certify_small(opts),
    }
}

// ---------------------------------------------------------------------
// margin expressions, written once and evaluated in either carrier
// ---------------------------------------------------------------------

/// f(n, m) = m/sqrt(2m-(n-1)) - sqrt(n-1) - (2m-2(n-1))/(n sqrt(n-1)).
///
/// Public because the test suites cross-check its sign against the exact
/// polynomial h = A^2 - B^2 (same sign whenever both sides A, B of the
/// defining difference are positive).
pub fn f_margin<I: CertInterval>(n: i64, m: i64, shift: f64) -> I {
    let sqrt_nm1 = I::from_int(n - 1).sqrt();
    let rad = I::from_int(2 * m - (n - 1)).sqrt();
    let val = I::from_int(m) / rad
        - sqrt_nm1.clone()
        - I::from_int(2 * m - 2 * (n - 1)) / (I::from_int(n) * sqrt_nm1);
    val + I::from_f64_exact(shift)
}

/// 11/3 - g(m) with g(m) = (2m/11 + 10) sqrt(2m - 11) / m, the n = 12
/// closing function.
fn g12_margin<I: CertInterval>(m: i64) -> I {
    let g = (I::from_ratio(2 * m, 11) + I::from_int(10)) * I::from_int(2 * m - 11).sqrt()
        / I::from_int(m);
    I::from_ratio(11, 3) - g
}

/// Pendant-deletion lower bound minus the required threshold:
/// sum_{i<s} 1/(2 sqrt(n-1-i)) + sqrt(2(n-1-s)) + 1/(n-1-s)
///   - sqrt(2/(n-1-s)) - sqrt(n-1) - 2(k+1)/(n sqrt(n-1)).
fn deletion_margin<I: CertInterval>(n: i64, k: i64, s: i64) -> I {
    let d = n - 1;
    assert!(s >= 1 && d - s >= 2, "the reduced graph needs at least 3 vertices");
    let mut lhs = I::from_int(0);
    for i in 0..s {
        lhs = lhs + I::from_int(1) / (I::from_int(2) * I::from_int(d - i).sqrt());
    }
    let rem = d - s;
    lhs = lhs + I::from_int(2 * rem).sqrt() + I::from_ratio(1, rem)
        - (I::from_int(2) / I::from_int(rem)).sqrt();
    let sqrt_d = I::from_int(d).sqrt();
    let rhs = sqrt_d.clone() + I::from_int(2 * (k + 1)) / (I::from_int(n) * sqrt_d);
    lhs - rhs
}

/// (2n-4)/sqrt(2n-2) + 1/(n-1) - sqrt(n-1) - 2(k+1)/(n sqrt(n-1)).
fn min2_margin<I: CertInterval>(n: i64, k: i64) -> I {
    let sqrt_nm1 = I::from_int(n - 1).sqrt();
    let lhs = I::from_int(2 * n - 4) / I::from_int(2 * n - 2).sqrt() + I::from_ratio(1, n - 1);
    let rhs = sqrt_nm1.clone() + I::from_int(2 * (k + 1)) / (I::from_int(n) * sqrt_nm1);
    lhs - rhs
}

/// n/sqrt(n-1) - (n-1)^2/n^{3/2}, the closing comparison of the dense case.
fn dense_margin<I: CertInterval>(n: i64) -> I {
    I::from_int(n) / I::from_int(n - 1).sqrt()
        - I::from_int((n - 1) * (n - 1)) / I::from_int(n * n * n).sqrt()
}

/// l evaluated at the real right endpoint m = 2 n^{3/2} = sqrt(4 n^3).
fn l_at_real_endpoint<I: CertInterval>(n: i64) -> I {
    let m = I::from_int(4 * n * n * n).sqrt();
    let p = m.clone() + m.clone() + I::from_int(n * n - 3 * n + 2); // 2m + n^2 - 3n + 2
    let q = m.clone() + m.clone() - I::from_int(n - 1); // 2m - n + 1
    I::from_int(2) * m * I::from_int(n * n * (n - 1))
        - I::from_int(4) * p.clone() * q
        - I::from_int(2) * p.clone() * p
}

/// The paper-side expansion of l(2 n^{3/2}):
/// 4n^{9/2} - 2n^4 - 36n^{7/2} - 80n^3 + 112n^{5/2} - 42n^2 - 80n^{3/2}
///   + 44n - 16.
fn l_expansion<I: CertInterval>(n: i64) -> I {
    let half = |k: u32| I::from_int(n.pow(k)).sqrt(); // n^{k/2}
    I::from_int(4) * half(9) - I::from_int(2 * n.pow(4)) - I::from_int(36) * half(7)
        - I::from_int(80 * n.pow(3))
        + I::from_int(112) * half(5)
        - I::from_int(42 * n * n)
        - I::from_int(80) * half(3)
        + I::from_int(44 * n - 16)
}

// ---------------------------------------------------------------------
// decision machinery
// ---------------------------------------------------------------------

/// Decides a sign test, falling back to exact rational intervals when the
/// f64 enclosure straddles the threshold.
fn decide_sign(
    strict: bool,
    fast: Interval,
    precise: impl FnOnce() -> RatInterval,
) -> (Interval, SignTest) {
    match fast.test_positive(strict) {
        SignTest::Undecided => {
            let p = precise();
            let verdict = p.test_positive(strict);
            (p.to_interval(), verdict)
        }
        verdict => (fast, verdict),
    }
}

fn int_sign(v: i128, strict: bool) -> SignTest {
    if v > 0 || (v == 0 && !strict) {
        SignTest::Satisfied
    } else {
        SignTest::Violated
    }
}

fn int_margin(v: i128) -> Interval {
    let x = v as f64;
    if v.unsigned_abs() < (1 << 52) {
        Interval::point(x)
    } else {
        Interval::new(x.next_down(), x.next_up())
    }
}

/// Exact margin of the chain claim `delta + c/delta <= n` (or `<`), namely
/// (n - delta) - c/delta as the fraction ((n-delta) delta - c) / delta.
fn chain_point(n: i64, delta: i64, c: i64) -> (Interval, i128) {
    let num = (n - delta) as i128 * delta as i128 - c as i128;
    let margin = if num % delta as i128 == 0 {
        int_margin(num / delta as i128)
    } else {
        Interval::from_ratio(num as i64, delta)
    };
    (margin, num)
}

struct GridRun {
    id: LemmaId,
    grid: String,
    started: Instant,
    worst: Option<(Interval, String)>,
    points: u64,
    failures: Vec<String>,
    undecided: Vec<String>,
    exceptions: Vec<String>,
    notes: Option<String>,
}

impl GridRun {
    fn new(id: LemmaId, grid: impl Into<String>) -> Self {
        GridRun {
            id,
            grid: grid.into(),
            started: Instant::now(),
            worst: None,
            points: 0,
            failures: Vec::new(),
            undecided: Vec::new(),
            exceptions: Vec::new(),
            notes: None,
        }
    }

    /// A claim inside the certified domain: it must hold.
    fn observe(&mut self, witness: String, margin: Interval, verdict: SignTest) {
        self.points += 1;
        let replace = match &self.worst {
            None => true,
            Some((m, _)) => margin.lo() < m.lo(),
        };
        if replace {
            self.worst = Some((margin, witness.clone()));
        }
        match verdict {
            SignTest::Satisfied => {}
            SignTest::Violated => self.failures.push(witness),
            SignTest::Undecided => self.undecided.push(witness),
        }
    }

    /// A diagnostic claim outside the certified domain: recorded, never
    /// fatal, and excluded from the worst margin.
    fn observe_diagnostic(&mut self, witness: String, margin: Interval, verdict: SignTest) {
        self.points += 1;
        if verdict != SignTest::Satisfied {
            self.exceptions
                .push(format!("{witness}: margin [{:.6}, {:.6}] does not hold", margin.lo(), margin.hi()));
        }
    }

    /// An exact structural claim (identity, overlap, equality).
    fn require(&mut self, witness: String, ok: bool) {
        self.points += 1;
        if !ok {
            self.failures.push(witness);
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes = Some(text.into());
    }

    fn finish(self) -> LemmaCheck {
        let status = if !self.failures.is_empty() {
            CheckStatus::Failed
        } else if !self.undecided.is_empty() {
            CheckStatus::Undecidable
        } else {
            CheckStatus::Certified
        };
        let (worst_margin, mut witness) = self
            .worst
            .expect("every certificate grid contains at least one margin point");
        if let Some(first_failure) = self.failures.first() {
            witness = first_failure.clone();
        } else if let Some(first_undecided) = self.undecided.first() {
            witness = first_undecided.clone();
        }
        LemmaCheck {
            schema_version: SCHEMA_VERSION,
            lemma_id: self.id,
            grid: self.grid,
            status,
            worst_margin,
            witness,
            evaluated_points: self.points,
            wall_time_ms: self.started.elapsed().as_millis() as u64,
            exceptions: self.exceptions,
            notes: self.notes,
        }
    }
}

// ---------------------------------------------------------------------
// the certificates
// ---------------------------------------------------------------------

/// f > 0 on n in 15..=17, m in n+8..=C(n,2): the positivity that settles
/// orders 15 through 17 in one sweep.
pub fn certify_reduce_f(opts: &CertifyOptions) -> LemmaCheck {
    let mut run = GridRun::new(LemmaId::ReduceF, "n=15..=17, m=n+8..=C(n,2)");
    for n in 15i64..=17 {
        for m in (n + 8)..=(n * (n - 1) / 2) {
            let (margin, verdict) = decide_sign(
                true,
                f_margin::<Interval>(n, m, opts.f_shift),
                || f_margin::<RatInterval>(n, m, opts.f_shift),
            );
            run.observe(format!("n={n} m={m}"), margin, verdict);
        }
    }
    run.finish()
}

/// The same positivity for the two orders that need a wider edge window:
/// n = 13 with 24 <= m <= 78 and n = 14 with 23 <= m <= 91.
pub fn certify_lemma_1314(opts: &CertifyOptions) -> LemmaCheck {
    let mut run = GridRun::new(LemmaId::Lemma1314, "n=13, m=24..=78; n=14, m=23..=91");
    for (n, lo, hi) in [(13i64, 24i64, 78i64), (14, 23, 91)] {
        for m in lo..=hi {
            let (margin, verdict) = decide_sign(
                true,
                f_margin::<Interval>(n, m, opts.f_shift),
                || f_margin::<RatInterval>(n, m, opts.f_shift),
            );
            run.observe(format!("n={n} m={m}"), margin, verdict);
        }
    }
    run.finish()
}

/// g(m) < 11/3 for 21 <= m <= 65, and g(66) = 11/3 exactly. The equality
/// is decided in exact rational arithmetic (sqrt(121) = 11), which is why
/// the worst margin of this check legitimately contains zero.
pub fn certify_g12_final(_opts: &CertifyOptions) -> LemmaCheck {
    let mut run = GridRun::new(LemmaId::G12Final, "m=21..=65 strict; m=66 exact equality");
    for m in 21i64..=65 {
        let (margin, verdict) =
            decide_sign(true, g12_margin::<Interval>(m), || g12_margin::<RatInterval>(m));
        run.observe(format!("m={m}"), margin, verdict);
    }
    let eq = g12_margin::<RatInterval>(66);
    let exact_zero = eq.lo().is_zero() && eq.hi().is_zero();
    run.observe(
        "m=66".into(),
        Interval::point(0.0),
        if exact_zero { SignTest::Satisfied } else { SignTest::Violated },
    );
    run.note("the m=66 equality is certified on the exact rational path");
    run.finish()
}

fn pendant_cap(n: usize, k: usize) -> i64 {
    invariants::max_pendant_neighbors(n, n + k, n - 1)
        .expect("pendant cap grid is graph-feasible") as i64
}

/// Pendant-deletion inequality at n = 13 for k = 2..=10, with the s range
/// capped by the counting bound for each k. (k = 1 is handled by the two
/// explicit neighborhood configurations; see base13_k1_randic.)
pub fn certify_lb131_n13(_opts: &CertifyOptions) -> LemmaCheck {
    let mut run =
        GridRun::new(LemmaId::Lb131N13, "n=13, k=2..=10, s=1..=cap(k) from pendant counting");
    for k in 2i64..=10 {
        let cap = pendant_cap(13, k as usize);
        for s in 1..=cap {
            let (margin, verdict) = decide_sign(
                true,
                deletion_margin::<Interval>(13, k, s),
                || deletion_margin::<RatInterval>(13, k, s),
            );
            run.observe(format!("k={k} s={s}"), margin, verdict);
        }
    }
    run.note("k=1 is covered by the explicit configuration check base13_k1_randic");
    run.finish()
}

/// The order-12 analogue, k = 1..=8.
pub fn certify_lb131_n12(_opts: &CertifyOptions) -> LemmaCheck {
    let mut run =
        GridRun::new(LemmaId::Lb131N12, "n=12, k=1..=8, s=1..=cap(k) from pendant counting");
    for k in 1i64..=8 {
        let cap = pendant_cap(12, k as usize);
        for s in 1..=cap {
            let (margin, verdict) = decide_sign(
                true,
                deletion_margin::<Interval>(12, k, s),
                || deletion_margin::<RatInterval>(12, k, s),
            );
            run.observe(format!("k={k} s={s}"), margin, verdict);
        }
    }
    run.finish()
}

/// Minimum-degree-two lower bound versus the k-dependent threshold.
///
/// The claim's stated domain is n >= 12, certified here up to the grid
/// ceiling. The surrounding argument asserts the same inequality already
/// from n = 9; that wider claim is false at (n=9, k=10), so the 9..=11
/// strip is swept as diagnostics and any failing point is recorded as an
/// exception instead of silently narrowing the grid.
pub fn certify_min2(opts: &CertifyOptions) -> LemmaCheck {
    let top = opts.n_max_chains as i64;
    let mut run = GridRun::new(
        LemmaId::Min2,
        format!("n=12..={top}, k=1..=10 certified; n=9..=11 diagnostic"),
    );
    for n in 12..=top {
        for k in 1i64..=10 {
            let (margin, verdict) =
                decide_sign(true, min2_margin::<Interval>(n, k), || min2_margin::<RatInterval>(n, k));
            run.observe(format!("n={n} k={k}"), margin, verdict);
        }
    }
    for n in 9i64..=11 {
        for k in 1i64..=10 {
            let (margin, verdict) =
                decide_sign(true, min2_margin::<Interval>(n, k), || min2_margin::<RatInterval>(n, k));
            run.observe_diagnostic(format!("n={n} k={k}"), margin, verdict);
        }
    }
    run.note(
        "certified on the stated domain n >= 12; the n >= 9 strengthening fails exactly \
         at the excepted points",
    );
    run.finish()
}

/// The degree-chain arithmetic behind the Merris-bound argument: every
/// stated chain of the form delta + (n + 2k + 1)/delta against n, for
/// n >= 13, plus the order-12 variant with its per-delta k windows.
pub fn certify_largedegree(opts: &CertifyOptions) -> LemmaCheck {
    let top = opts.n_max_chains as i64;
    let mut run = GridRun::new(
        LemmaId::LargedegreeT,
        format!("n=13..={top} chains; n=12 per-delta windows"),
    );
    for n in 13..=top {
        // guard for case (1): n/2 > sqrt(n+21), i.e. n^2 - 4n - 84 > 0
        let guard = n as i128 * n as i128 - 4 * n as i128 - 84;
        run.observe(format!("n={n} guard n^2>4n+84"), int_margin(guard), int_sign(guard, true));
        // sqrt(n+21) >= sqrt(n+2k+1) for k <= 10 reduces to 21 >= 2k+1
        run.require(format!("n={n} window 2k+1<=21"), (1..=10).all(|k| 2 * k + 1 <= 21));

        for (label, delta, c, strict) in [
            ("case1 (n-4)+(n+21)/(n-4)<n", n - 4, n + 21, true),
            ("case2 (n-3)+(n+15)/(n-3)<n", n - 3, n + 15, true),
            ("case3 (n-2)+(n+9)/(n-2)<=n", n - 2, n + 9, false),
            ("d3 3+(n+9)/3<=n", 3, n + 9, false),
        ] {
            let (margin, num) = chain_point(n, delta, c);
            run.observe(format!("n={n} {label}"), margin, int_sign(num, strict));
        }
        for k in 1i64..=10 {
            let (margin, num) = chain_point(n, 4, n + 2 * k + 1);
            run.observe(format!("n={n} k={k} 4+(n+2k+1)/4<=n"), margin, int_sign(num, false));
        }
        // degree 1, 2, 3 tail cases peak at t = n exactly
        for (label, delta, c) in [
            ("d1 1+(n-1)<=n", 1, n - 1),
            ("d2 2+(n-2)<=n", 2, 2 * (n - 2)),
            ("d3 3+(n-3)<=n", 3, 3 * (n - 3)),
        ] {
            let (margin, num) = chain_point(n, delta, c);
            run.observe(format!("n={n} {label}"), margin, int_sign(num, false));
        }
    }

    // order 12: delta + (13+2k)/delta < 12 on the stated (delta, k) windows
    for (delta, k_hi) in [(6i64, 8i64), (7, 8), (8, 8), (9, 6), (10, 3)] {
        for k in 1..=k_hi {
            let (margin, num) = chain_point(12, delta, 13 + 2 * k);
            run.observe(format!("n=12 delta={delta} k={k}"), margin, int_sign(num, true));
        }
    }
    for k in 1i64..=8 {
        let (margin, num) = chain_point(12, 4, 13 + 2 * k);
        run.observe(format!("n=12 k={k} 4+(13+2k)/4<=12"), margin, int_sign(num, false));
    }
    for (label, delta, c, strict) in [
        ("n=12 d1 1+10<12", 1i64, 10i64, true),
        ("n=12 d2 2+10<=12", 2, 20, false),
        ("n=12 d3 3+9<=12", 3, 27, false),
    ] {
        let (margin, num) = chain_point(12, delta, c);
        run.observe(label.to_string(), margin, int_sign(num, strict));
    }
    for k in 1i64..=3 {
        let (margin, num) = chain_point(12, 3, 13 + 2 * k);
        run.observe(format!("n=12 delta=10 d3 k={k}"), margin, int_sign(num, true));
    }

    run.note(
        "non-strict chains peak at t = n; strictness of the final ratio bound comes from \
         R > sqrt(n-1), not from these chains",
    );
    run.finish()
}

/// h(n, n+8) agrees with its closed cubic, is positive, and the cubic
/// increases along the grid. Also pins A^2 > 0, the positivity that the
/// squaring step A^2 - B^2 quietly needs.
pub fn certify_h_identity(opts: &CertifyOptions) -> LemmaCheck {
    let top = opts.n_max_hl as i64;
    let mut run = GridRun::new(LemmaId::HIdentity, format!("n=18..={top}, m=n+8"));
    for n in 18..=top {
        let h = exact::h_value(n, n + 8).expect("h fits in i128 on this grid");
        let cubic = exact::h_cubic(n).expect("cubic fits in i128");
        run.require(format!("n={n} h==45n^3-657n^2+288n-5508"), h == cubic);
        run.observe(format!("n={n} h(n+8)>0"), int_margin(h), int_sign(h, true));
        if n < top {
            let step = exact::h_cubic(n + 1).unwrap() - cubic;
            run.observe(format!("n={n} cubic increasing"), int_margin(step), int_sign(step, true));
        }
        let m = n + 8;
        let a2 = (m * m) as i128 * (n * n) as i128 * (n - 1) as i128;
        run.observe(format!("n={n} A^2>0"), int_margin(a2), int_sign(a2, true));
    }
    run.finish()
}

/// l(n, n+8) agrees with its closed cubic and is positive; the discrete
/// slope matches l' and the second difference is the constant -48, which
/// is the concavity the endpoint argument rests on.
pub fn certify_l_identity(opts: &CertifyOptions) -> LemmaCheck {
    let top = opts.n_max_hl as i64;
    let mut run = GridRun::new(LemmaId::LIdentity, format!("n=18..={top}, m=n+8..=n+12"));
    for n in 18..=top {
        let l = exact::l_value(n, n + 8).expect("l fits in i128 on this grid");
        let cubic = exact::l_cubic(n).expect("cubic fits in i128");
        run.require(format!("n={n} l==14n^3-154n^2+68n-1872"), l == cubic);
        run.observe(format!("n={n} l(n+8)>0"), int_margin(l), int_sign(l, true));
        for m in (n + 8)..=(n + 12) {
            let secant = exact::l_value(n, m + 1).unwrap() - exact::l_value(n, m).unwrap();
            let slope = exact::l_slope(n, m).unwrap();
            run.require(format!("n={n} m={m} secant==l'(m)-24"), secant == slope - 24);
            let dd = exact::l_value(n, m + 2).unwrap() - 2 * exact::l_value(n, m + 1).unwrap()
                + exact::l_value(n, m).unwrap();
            run.require(format!("n={n} m={m} l''==-48"), dd == -48);
        }
    }
    run.finish()
}

/// h is strictly increasing on the integer points of [n+8, 2n^{3/2}],
/// decided by exact consecutive differences.
pub fn certify_h_monotone(opts: &CertifyOptions) -> LemmaCheck {
    let top = opts.n_max_hl as i64;
    let mut run =
        GridRun::new(LemmaId::HMonotone, format!("n=18..={top}, m=n+8..=floor(2n^(3/2))"));
    for n in 18..=top {
        let hi = exact::floor_2n32(n as u64) as i64;
        for m in (n + 8)..hi {
            let step = exact::h_value(n, m + 1).unwrap() - exact::h_value(n, m).unwrap();
            run.observe(format!("n={n} m={m}"), int_margin(step), int_sign(step, true));
        }
    }
    run.finish()
}

/// l > 0 at both ends of [n+8, 2n^{3/2}]: exactly at the integer points
/// bracketing the real right endpoint, and by certified intervals at the
/// real endpoint itself, cross-checked against the expanded surd form.
/// With l concave (l'' = -48), endpoint positivity covers the interval.
pub fn certify_l_concave_endpoints(opts: &CertifyOptions) -> LemmaCheck {
    let top = opts.n_max_hl as i64;
    let mut run = GridRun::new(
        LemmaId::LConcaveEndpoints,
        format!("n=18..={top}, m in {{n+8, floor(2n^(3/2)), 2n^(3/2)}}"),
    );
    for n in 18..=top {
        let left = exact::l_value(n, n + 8).unwrap();
        run.observe(format!("n={n} l(n+8)>0"), int_margin(left), int_sign(left, true));

        // last integer point inside the interval; the ceiling lies outside
        // the claimed domain, so it gets no check
        let fl = exact::floor_2n32(n as u64) as i64;
        let v = exact::l_value(n, fl).unwrap();
        run.observe(format!("n={n} l({fl})>0"), int_margin(v), int_sign(v, true));

        let (margin, verdict) = decide_sign(true, l_at_real_endpoint::<Interval>(n), || {
            l_at_real_endpoint::<RatInterval>(n)
        });
        run.observe(format!("n={n} l(2n^(3/2))>0"), margin, verdict);

        let direct = l_at_real_endpoint::<Interval>(n);
        let expanded = l_expansion::<Interval>(n);
        let overlap = direct.lo() <= expanded.hi() && expanded.lo() <= direct.hi();
        run.require(format!("n={n} expansion consistent"), overlap);
        let (e_margin, e_verdict) =
            decide_sign(true, expanded, || l_expansion::<RatInterval>(n));
        run.observe(format!("n={n} expansion>0"), e_margin, e_verdict);
    }
    run.note("concavity itself is pinned by the exact l''=-48 checks in l_identity");
    run.finish()
}

fn star_plus(edges: &[(usize, usize)]) -> Graph {
    let mut all: Vec<(usize, usize)> = (1..13).map(|v| (0, v)).collect();
    all.extend_from_slice(edges);
    Graph::from_edges(13, &all).expect("configuration graph is well formed")
}

/// Randic value of a configuration given its edge classes as
/// (edge count, product of endpoint degrees).
fn config_lhs<I: CertInterval>(terms: &[(i64, i64)]) -> I {
    let mut lhs = I::from_int(0);
    for &(count, prod) in terms {
        lhs = lhs + I::from_int(count) / I::from_int(prod).sqrt();
    }
    lhs
}

fn config_margin<I: CertInterval>(terms: &[(i64, i64)]) -> I {
    let sqrt12 = I::from_int(12).sqrt();
    config_lhs::<I>(terms) - sqrt12.clone() - I::from_int(4) / (I::from_int(13) * sqrt12)
}

/// The two explicit order-13, k=1 neighborhoods (a P_3 among the hub's
/// neighbors, or two disjoint edges): their Randic values beat
/// sqrt(12) + 4/(13 sqrt(12)), by formula and by building the graphs.
pub fn certify_base13_k1(_opts: &CertifyOptions) -> LemmaCheck {
    let mut run = GridRun::new(LemmaId::Base13K1Randic, "n=13, k=1, both neighborhood shapes");

    // degree products per edge class: (how many edges, d(u)*d(v))
    let p3_terms: &[(i64, i64)] = &[(9, 12), (2, 24), (1, 36), (2, 6)];
    let disjoint_terms: &[(i64, i64)] = &[(8, 12), (4, 24), (2, 4)];
    let graphs = [
        ("p3_in_neighborhood", p3_terms, star_plus(&[(1, 2), (2, 3)])),
        ("two_disjoint_edges", disjoint_terms, star_plus(&[(1, 2), (3, 4)])),
    ];
    for (name, terms, graph) in graphs {
        let (margin, verdict) = decide_sign(true, config_margin::<Interval>(terms), || {
            config_margin::<RatInterval>(terms)
        });
        run.observe(format!("config={name}"), margin, verdict);

        let formula_r = config_lhs::<Interval>(terms);
        let graph_r = invariants::randic_index(&graph).expect("configuration graph is connected");
        let overlap = formula_r.lo() <= graph_r.hi() && graph_r.lo() <= formula_r.hi();
        let close = (formula_r.mid() - graph_r.mid()).abs() <= 1e-12;
        run.require(format!("config={name} graph agrees with formula"), overlap && close);
    }
    run.finish()
}

/// (n-1)^2 / n^{3/2} < n / sqrt(n-1): the comparison that closes the
/// dense case once R >= m/(n-1) and q <= 2(n-1) are in hand.
pub fn certify_dense(opts: &CertifyOptions) -> LemmaCheck {
    let top = opts.n_max_chains as i64;
    let mut run = GridRun::new(LemmaId::Dense, format!("n=13..={top}"));
    for n in 13..=top {
        let (margin, verdict) =
            decide_sign(true, dense_margin::<Interval>(n), || dense_margin::<RatInterval>(n));
        run.observe(format!("n={n}"), margin, verdict);
    }
    run.note("R >= m/(n-1) is property-tested on enumerated graphs in the bound suite");
    run.finish()
}

/// 2 * delta < n for every delta below n/2: the arithmetic half of the
/// small-maximum-degree case (the spectral half, q <= 2 delta, is
/// property-tested on enumerated graphs).
pub fn certify_small(opts: &CertifyOptions) -> LemmaCheck {
    let top = opts.n_max_chains as i64;
    let mut run = GridRun::new(LemmaId::Small, format!("n=12..={top}, delta=floor((n-1)/2)"));
    for n in 12..=top {
        let delta_max = (n - 1) / 2;
        let margin = (n - 2 * delta_max) as i128;
        run.observe(
            format!("n={n} delta={delta_max}"),
            int_margin(margin),
            int_sign(margin, true),
        );
    }
    run.note("q <= 2*maxdeg is verified spectrally on enumerated graphs in the bound suite");
    run.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_suite() -> Vec<LemmaCheck> {
        certify_all(&CertifyOptions::default()).unwrap()
    }

    #[test]
    fn full_suite_certifies() {
        let suite = default_suite();
        assert_eq!(suite.len(), 14);
        for check in &suite {
            assert_eq!(
                check.status,
                CheckStatus::Certified,
                "{} failed: witness {}",
                check.lemma_id.as_str(),
                check.witness
            );
        }
    }

    #[test]
    fn f_grid_margins_match_hand_evaluation() {
        let opts = CertifyOptions::default();
        let reduce = certify_reduce_f(&opts);
        assert_eq!(reduce.evaluated_points, 83 + 97 + 112);
        assert_eq!(reduce.witness, "n=15 m=23");
        assert!(reduce.worst_margin.lo() > 0.0030 && reduce.worst_margin.hi() < 0.0040);

        let wide = certify_lemma_1314(&opts);
        assert_eq!(wide.evaluated_points, 55 + 69);
        assert_eq!(wide.witness, "n=14 m=23");
        assert!(wide.worst_margin.lo() > 0.0015 && wide.worst_margin.hi() < 0.0025);
    }

    #[test]
    fn g12_equality_is_exact_and_strict_part_has_margin() {
        let check = certify_g12_final(&CertifyOptions::default());
        assert_eq!(check.status, CheckStatus::Certified);
        assert_eq!(check.witness, "m=66");
        assert!(check.worst_margin.contains(0.0));
        assert_eq!(check.evaluated_points, 46);
        // strict part: thinnest margin is at m=21, around 2.9e-3
        let strict_worst = (21i64..=65)
            .map(|m| g12_margin::<Interval>(m).lo())
            .fold(f64::INFINITY, f64::min);
        assert!(strict_worst > 0.0025 && strict_worst < 0.0035);
    }

    #[test]
    fn pendant_caps_match_the_counting_argument() {
        let caps13: Vec<i64> = (2..=10).map(|k| pendant_cap(13, k)).collect();
        assert_eq!(caps13, vec![9, 8, 8, 8, 7, 7, 7, 7, 6]);
        let caps12: Vec<i64> = (1..=8).map(|k| pendant_cap(12, k)).collect();
        assert_eq!(caps12, vec![8, 8, 7, 7, 7, 6, 6, 6]);
    }

    #[test]
    fn deletion_grids_certify_with_known_worst_points() {
        let n13 = certify_lb131_n13(&CertifyOptions::default());
        assert_eq!(n13.status, CheckStatus::Certified);
        assert_eq!(n13.witness, "k=9 s=7");
        assert!(n13.worst_margin.lo() > 0.010 && n13.worst_margin.hi() < 0.013);
        assert_eq!(n13.evaluated_points, 67);

        let n12 = certify_lb131_n12(&CertifyOptions::default());
        assert_eq!(n12.status, CheckStatus::Certified);
        assert_eq!(n12.witness, "k=8 s=6");
        assert!(n12.worst_margin.lo() > 0.005 && n12.worst_margin.hi() < 0.008);
    }

    #[test]
    fn min2_certifies_stated_domain_and_reports_the_overreach() {
        let check = certify_min2(&CertifyOptions::default());
        assert_eq!(check.status, CheckStatus::Certified);
        assert_eq!(check.witness, "n=12 k=10");
        assert!(check.worst_margin.lo() > 0.48 && check.worst_margin.hi() < 0.49);
        assert_eq!(check.exceptions.len(), 1);
        assert!(check.exceptions[0].starts_with("n=9 k=10"));
    }

    #[test]
    fn chain_grid_hits_its_equality_edges() {
        let check = certify_largedegree(&CertifyOptions::default());
        assert_eq!(check.status, CheckStatus::Certified);
        // (n-2) + (n+9)/(n-2) = n exactly at n = 13
        assert_eq!(check.worst_margin, Interval::point(0.0));
        assert_eq!(check.witness, "n=13 case3 (n-2)+(n+9)/(n-2)<=n");
        assert!(check.exceptions.is_empty());
    }

    #[test]
    fn polynomial_certificates_hold_on_default_and_reduced_grids() {
        for n_max in [25usize, 40] {
            let opts = CertifyOptions { n_max_hl: n_max, ..Default::default() };
            for check in [
                certify_h_identity(&opts),
                certify_l_identity(&opts),
                certify_h_monotone(&opts),
                certify_l_concave_endpoints(&opts),
            ] {
                assert_eq!(
                    check.status,
                    CheckStatus::Certified,
                    "{} at n_max={n_max}: {}",
                    check.lemma_id.as_str(),
                    check.witness
                );
                assert!(check.grid.contains(&format!("{n_max}")));
            }
        }
    }

    #[test]
    fn config_check_prefers_the_thinner_shape() {
        let check = certify_base13_k1(&CertifyOptions::default());
        assert_eq!(check.status, CheckStatus::Certified);
        assert_eq!(check.witness, "config=p3_in_neighborhood");
        // 9/sqrt(12) + 2/sqrt(24) + 1/6 + 2/sqrt(6) - sqrt(12) - 4/(13 sqrt(12))
        assert!((check.worst_margin.mid() - 0.43655).abs() < 1e-4);
    }

    #[test]
    fn perturbation_hook_flips_exactly_the_thin_margins() {
        // -0.0025 sits between the worst margins of the two grids
        // (about 0.00202 at n=14 m=23 versus 0.00350 at n=15 m=23)
        let opts = CertifyOptions { f_shift: -0.0025, ..Default::default() };
        assert_eq!(certify_reduce_f(&opts).status, CheckStatus::Certified);
        let wide = certify_lemma_1314(&opts);
        assert_eq!(wide.status, CheckStatus::Failed);
        assert_eq!(wide.witness, "n=14 m=23");
        // -0.01 kills both
        let opts = CertifyOptions { f_shift: -0.01, ..Default::default() };
        assert_eq!(certify_reduce_f(&opts).status, CheckStatus::Failed);
        assert_eq!(certify_lemma_1314(&opts).status, CheckStatus::Failed);
    }

    #[test]
    fn a_margin_straddling_zero_in_both_carriers_is_undecidable() {
        let mut run = GridRun::new(LemmaId::Dense, "synthetic");
        let straddle = Interval::new(-0.25, 0.25);
        let (margin, verdict) = decide_sign(true, straddle, || {
            RatInterval::new(
                num_rational::BigRational::new((-1).into(), 4.into()),
                num_rational::BigRational::new(1.into(), 4.into()),
            )
        });
        run.observe("synthetic straddle".into(), margin, verdict);
        let check = run.finish();
        assert_eq!(check.status, CheckStatus::Undecidable);
        assert_eq!(check.witness, "synthetic straddle");
        // an exactly-zero margin under a strict test is an honest violation
        let (_, v) = decide_sign(true, Interval::point(0.0), || RatInterval::from_int(0));
        assert_eq!(v, SignTest::Violated);
    }

    #[test]
    fn certificates_serialize_with_spec_field_names() {
        let check = certify_dense(&CertifyOptions::default());
        let json = serde_json::to_value(&check).unwrap();
        assert_eq!(json["lemma_id"], "dense");
        assert_eq!(json["status"], "certified");
        assert_eq!(json["schema_version"], 1);
        for field in ["grid", "worst_margin", "witness", "evaluated_points", "wall_time_ms"] {
            assert!(json.get(field).is_some(), "missing {field}");
        }
        assert!(json["worst_margin"].get("lo").is_some());
        assert!(json["worst_margin"].get("hi").is_some());
        // ids serialize in snake case, including the numeric ones
        assert_eq!(serde_json::to_value(LemmaId::Lemma1314).unwrap(), "lemma_1314");
        assert_eq!(serde_json::to_value(LemmaId::Base13K1Randic).unwrap(), "base13_k1_randic");
        assert_eq!(serde_json::to_value(LemmaId::LConcaveEndpoints).unwrap(), "l_concave_endpoints");
    }

    #[test]
    fn options_are_validated() {
        assert!(certify_all(&CertifyOptions { n_max_hl: 17, ..Default::default() }).is_err());
        assert!(certify_all(&CertifyOptions { n_max_hl: 101, ..Default::default() }).is_err());
        assert!(certify_all(&CertifyOptions { n_max_chains: 12, ..Default::default() }).is_err());
    }

    #[test]
    fn deterministic_reports() {
        let a = certify_min2(&CertifyOptions::default());
        let b = certify_min2(&CertifyOptions::default());
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.worst_margin, b.worst_margin);
        assert_eq!(a.evaluated_points, b.evaluated_points);
        assert_eq!(a.exceptions, b.exceptions);
    }
}
