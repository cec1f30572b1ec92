//! Built-in verification suite: closed forms against exact family values
//! and against the search oracles.
//!
//! Checks are grouped by family (`pure`, `cq`, `cc`, `rho_d`, `rho_theta`,
//! `bell_diagonal`, `global`, `oracle`, `conjecture`). Each check id starts
//! with its group name, and [`VerifyOptions::filter`] selects checks by id
//! prefix. Random samples come from a ChaCha stream keyed by the seed and the
//! group, so filtering does not change what a group sees.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::measures::{
    correlation_distance, d1_x_state, full_report, mmc, negativity, D1Method, XStateTerms,
    X_PATTERN_TOL,
};
use crate::oracles::{classical_cov, classical_cov_moments, d1_oracle, mmc_oracle, SearchConfig};
use crate::sampling;
use crate::states::{
    bell_diagonal, cc_state, cq_state, pure_state, rho_d, rho_d_smax, rho_theta, BlochVector,
    DensityMatrix, ProbTable2x2, XStateParams,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub closed_form: f64,
    pub oracle: f64,
    /// Bound on the oracle's discord for states with none.
    pub oracle_zero: f64,
    pub mmc_oracle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            closed_form: 1e-10,
            oracle: 2e-3,
            oracle_zero: 1e-6,
            mmc_oracle: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn scaled(&self, s: f64) -> Self {
        Tolerances {
            closed_form: self.closed_form * s,
            oracle: self.oracle * s,
            oracle_zero: self.oracle_zero * s,
            mmc_oracle: self.mmc_oracle * s,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub search: SearchConfig,
    /// Search settings for the 10⁴-state conjecture sweep.
    pub sweep_search: SearchConfig,
    pub seed: u64,
    pub filter: Option<String>,
    pub tolerances: Tolerances,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            search: SearchConfig::default(),
            sweep_search: SearchConfig::minimal(),
            seed: 0,
            filter: None,
            tolerances: Tolerances::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyResult {
    pub check_id: String,
    pub expected: f64,
    pub actual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl VerifyResult {
    pub fn new(check_id: impl Into<String>, expected: f64, actual: f64, tolerance: f64) -> Self {
        let passed = (expected - actual).abs() <= tolerance;
        VerifyResult {
            check_id: check_id.into(),
            expected,
            actual,
            tolerance,
            passed,
        }
    }
}

impl fmt::Display for VerifyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} expected={:e} actual={:e} tol={:e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check_id,
            self.expected,
            self.actual,
            self.tolerance
        )
    }
}

/// Reported value that never fails the run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observation {
    pub check_id: String,
    pub value: f64,
    pub note: String,
}

impl fmt::Display for Observation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NOTE {} value={} {}", self.check_id, self.value, self.note)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerifyReport {
    pub results: Vec<VerifyResult>,
    pub observations: Vec<Observation>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| !r.passed).count()
    }
}

/// Largest-deviation tracker over many samples; the reported pair is the
/// worst one seen.
struct Worst {
    id: String,
    expected: f64,
    actual: f64,
    seen: usize,
}

impl Worst {
    fn new(id: impl Into<String>) -> Self {
        Worst {
            id: id.into(),
            expected: 0.0,
            actual: 0.0,
            seen: 0,
        }
    }

    fn add(&mut self, expected: f64, actual: f64) {
        let err = (expected - actual).abs();
        // NaN counts as worst
        if self.seen == 0 || !(err <= (self.expected - self.actual).abs()) {
            self.expected = expected;
            self.actual = actual;
        }
        self.seen += 1;
    }

    fn finish(self, tol: f64) -> VerifyResult {
        VerifyResult::new(format!("{}[{}]", self.id, self.seen), self.expected, self.actual, tol)
    }
}

/// Counts samples violating a condition; passes at zero.
struct Violations {
    id: String,
    count: usize,
    seen: usize,
}

impl Violations {
    fn new(id: impl Into<String>) -> Self {
        Violations {
            id: id.into(),
            count: 0,
            seen: 0,
        }
    }

    fn add(&mut self, ok: bool) {
        self.seen += 1;
        if !ok {
            self.count += 1;
        }
    }

    fn finish(self) -> VerifyResult {
        VerifyResult::new(format!("{}[{}]", self.id, self.seen), 0.0, self.count as f64, 0.0)
    }
}

struct Ctx<'a> {
    opts: &'a VerifyOptions,
    tol: Tolerances,
    out: VerifyReport,
}

impl Ctx<'_> {
    fn rng(&self, group: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed);
        rng.set_stream(group);
        rng
    }

    fn push(&mut self, r: VerifyResult) {
        self.out.results.push(r);
    }

    fn close(&mut self, id: impl Into<String>, expected: f64, actual: f64, tol: f64) {
        self.push(VerifyResult::new(id, expected, actual, tol));
    }
}

type Group = fn(&mut Ctx<'_>);

/// Group names in run order.
pub const GROUPS: [&str; 9] = [
    "pure",
    "cq",
    "cc",
    "rho_d",
    "rho_theta",
    "bell_diagonal",
    "global",
    "oracle",
    "conjecture",
];

const RUNNERS: [Group; 9] = [
    pure_group,
    cq_group,
    cc_group,
    rho_d_group,
    rho_theta_group,
    bell_diagonal_group,
    global_group,
    oracle_group,
    conjecture_group,
];

fn group_selected(group: &str, filter: &str) -> bool {
    group.starts_with(filter) || filter.strip_prefix(group).is_some_and(|rest| rest.starts_with('.'))
}

/// Runs every selected check.
pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let mut ctx = Ctx {
        opts,
        tol: opts.tolerances,
        out: VerifyReport::default(),
    };
    for (name, runner) in GROUPS.iter().zip(RUNNERS) {
        if opts.filter.as_deref().is_none_or(|f| group_selected(name, f)) {
            runner(&mut ctx);
        }
    }
    let mut out = ctx.out;
    if let Some(f) = opts.filter.as_deref() {
        // ids are prefixed by their group, so this only trims within a group
        out.results.retain(|r| r.check_id.starts_with(f));
        out.observations.retain(|o| o.check_id.starts_with(f));
    }
    out
}

fn report_d1(ctx: &Ctx<'_>, rho: &DensityMatrix) -> (f64, D1Method) {
    match full_report(rho, &ctx.opts.search) {
        Ok(r) => (r.d1, r.d1_method),
        Err(_) => (f64::NAN, D1Method::ClosedForm),
    }
}

fn pure_group(ctx: &mut Ctx<'_>) {
    let t = ctx.tol;
    let mut chain = Violations::new("pure.chain_n_eq_d1_eq_mmc_lt_c");
    for n in [0.1, 0.25, 0.6, 0.9, 1.0] {
        let rho = pure_state(n).expect("n in [0, 1]");
        let id = format!("pure.n={n}");
        let (d1, method) = report_d1(ctx, &rho);
        let d1_tol = match method {
            D1Method::ClosedForm => t.closed_form,
            D1Method::Oracle => t.oracle,
        };
        let (nv, m, c) = (negativity(&rho), mmc(&rho), correlation_distance(&rho));
        ctx.close(format!("{id}.negativity"), n, nv, t.closed_form);
        ctx.close(format!("{id}.mmc"), n, m, t.closed_form);
        ctx.close(format!("{id}.correlation_distance"), n + n * n / 2.0, c, t.closed_form);
        ctx.close(format!("{id}.d1_report"), n, d1, d1_tol);
        ctx.close(format!("{id}.d1_oracle"), n, d1_oracle(&rho, &ctx.opts.search), t.oracle);
        if let Some(p) = XStateParams::from_density(&rho, X_PATTERN_TOL) {
            if !XStateTerms::new(&p).is_degenerate() {
                let v = d1_x_state(&p, &ctx.opts.search).map_or(f64::NAN, |d| d.value);
                ctx.close(format!("{id}.d1_closed_form"), n, v, t.closed_form);
            }
        }
        chain.add(
            (nv - d1).abs() <= d1_tol && (d1 - m).abs() <= d1_tol && m < c,
        );
    }
    ctx.push(chain.finish());
}

fn cq_group(ctx: &mut Ctx<'_>) {
    let t = ctx.tol;
    let mut rng = ctx.rng(2);
    let mut m_formula = Worst::new("cq.mmc_formula");
    let mut c_eq_m = Worst::new("cq.correlation_distance_eq_mmc");
    let mut n_zero = Worst::new("cq.negativity_zero");
    let mut d1_zero = Worst::new("cq.d1_oracle_zero");
    let mut below_one = Violations::new("cq.mmc_below_one");
    for _ in 0..200 {
        let p1: f64 = rand::Rng::random(&mut rng);
        let (theta, phi) = sampling::projector_angles(&mut rng);
        let a1 = sampling::bloch_in_ball(&mut rng);
        let a2 = sampling::bloch_in_ball(&mut rng);
        let rho = cq_state(p1, theta, phi, &a1, &a2).expect("valid cq parameters");
        let m = mmc(&rho);
        m_formula.add(2.0 * p1 * (1.0 - p1) * a1.distance(&a2), m);
        c_eq_m.add(m, correlation_distance(&rho));
        n_zero.add(0.0, negativity(&rho));
        d1_zero.add(0.0, d1_oracle(&rho, &ctx.opts.search));
        below_one.add(m < 1.0);
    }
    ctx.push(m_formula.finish(t.closed_form));
    ctx.push(c_eq_m.finish(t.closed_form));
    ctx.push(n_zero.finish(t.closed_form));
    ctx.push(d1_zero.finish(t.oracle_zero));
    ctx.push(below_one.finish());

    // M reaches 1 only with p1 = ½ and antipodal pure conditional states
    let axis = BlochVector::new(0.48, -0.6, 0.64).expect("unit vector");
    let anti = axis.scaled(-1.0).expect("unit vector");
    let rho = cq_state(0.5, 0.4, 1.1, &axis, &anti).expect("valid");
    ctx.close("cq.sup.orthogonal_limit", 1.0, mmc(&rho), t.closed_form);
    let mut approach = Violations::new("cq.sup.approach_from_below");
    for eps in [1e-1, 1e-2, 1e-3, 1e-4] {
        let a1 = axis.scaled(1.0 - eps).expect("inside the ball");
        let a2 = anti.scaled(1.0 - eps).expect("inside the ball");
        let m = mmc(&cq_state(0.5, 0.4, 1.1, &a1, &a2).expect("valid"));
        ctx.close(format!("cq.sup.eps={eps}"), 1.0 - eps, m, t.closed_form);
        approach.add(m < 1.0);
        // unbalanced weights stay away from 1 even for orthogonal states
        let m = mmc(&cq_state(0.5 + eps, 0.4, 1.1, &axis, &anti).expect("valid"));
        approach.add(m < 1.0);
    }
    ctx.push(approach.finish());
}

fn cc_group(ctx: &mut Ctx<'_>) {
    let t = ctx.tol;
    let mut rng = ctx.rng(3);
    let mut m_cov = Worst::new("cc.mmc_eq_abs_cov");
    let mut c_eq_m = Worst::new("cc.correlation_distance_eq_mmc");
    let mut n_zero = Worst::new("cc.negativity_zero");
    let mut d1_zero = Worst::new("cc.d1_oracle_zero");
    for _ in 0..200 {
        let p = sampling::prob_table(&mut rng);
        let (ta, pa) = sampling::projector_angles(&mut rng);
        let (tb, pb) = sampling::projector_angles(&mut rng);
        let rho = cc_state(&p, ta, pa, tb, pb).expect("valid cc parameters");
        let m = mmc(&rho);
        m_cov.add(classical_cov(&p).abs(), m);
        c_eq_m.add(m, correlation_distance(&rho));
        n_zero.add(0.0, negativity(&rho));
        d1_zero.add(0.0, d1_oracle(&rho, &ctx.opts.search));
    }
    ctx.push(m_cov.finish(t.closed_form));
    ctx.push(c_eq_m.finish(t.closed_form));
    ctx.push(n_zero.finish(t.closed_form));
    ctx.push(d1_zero.finish(t.oracle_zero));

    let p = ProbTable2x2::new(0.4, 0.1, 0.2, 0.3).expect("table");
    ctx.close("cc.spot.cov_closed", 0.4, classical_cov(&p), t.closed_form);
    ctx.close("cc.spot.cov_moments", 0.4, classical_cov_moments(&p), t.closed_form);
    let rho = cc_state(&p, 0.3, 0.2, 1.0, -0.5).expect("valid");
    ctx.close("cc.spot.mmc", 0.4, mmc(&rho), t.closed_form);
}

fn rho_d_group(ctx: &mut Ctx<'_>) {
    let t = ctx.tol;
    let mut m_val = Worst::new("rho_d.mmc_eq_4s");
    let mut c_val = Worst::new("rho_d.correlation_distance_eq_4s");
    let mut d1_val = Worst::new("rho_d.d1_formula");
    let mut n_zero = Worst::new("rho_d.negativity_zero");
    let mut strict = Violations::new("rho_d.d1_lt_mmc");
    for i in 1..=24 {
        let w = 0.02 * i as f64;
        for frac in [0.05, 0.25, 0.5, 0.75, 1.0] {
            let s = frac * rho_d_smax(w);
            let rho = rho_d(w, s).expect("inside the valid region");
            let u = 1.0 - 4.0 * w;
            let d1_want = 4.0 * s * u.abs() / (16.0 * s * s + u * u).sqrt();
            let (d1, _) = report_d1(ctx, &rho);
            let m = mmc(&rho);
            m_val.add(4.0 * s, m);
            c_val.add(4.0 * s, correlation_distance(&rho));
            d1_val.add(d1_want, d1);
            n_zero.add(0.0, negativity(&rho));
            strict.add(d1 < m);
        }
    }
    ctx.push(m_val.finish(t.closed_form));
    ctx.push(c_val.finish(t.closed_form));
    ctx.push(d1_val.finish(t.closed_form));
    ctx.push(n_zero.finish(t.closed_form));
    ctx.push(strict.finish());

    let rho = rho_d(0.1, 0.2).expect("valid");
    ctx.close("rho_d.spot.d1", 0.48, report_d1(ctx, &rho).0, t.closed_form);
    ctx.close("rho_d.spot.d1_oracle", 0.48, d1_oracle(&rho, &ctx.opts.search), t.oracle);
    ctx.close("rho_d.spot.mmc", 0.8, mmc(&rho), t.closed_form);
}

fn rho_theta_group(ctx: &mut Ctx<'_>) {
    let t = ctx.tol;
    let mut n_val = Worst::new("rho_theta.negativity_formula");
    let mut d1_val = Worst::new("rho_theta.d1_eq_half_sin");
    let mut m_val = Worst::new("rho_theta.mmc_eq_half_sin");
    let mut c_val = Worst::new("rho_theta.correlation_distance_formula");
    let mut chain = Violations::new("rho_theta.chain_n_lt_d1_eq_mmc_lt_c");
    for k in 1..=50 {
        let theta = FRAC_PI_2 * k as f64 / 51.0;
        let rho = rho_theta(theta).expect("valid");
        let half = 0.5 * (2.0 * theta).sin();
        let n_want = ((6.0 - 2.0 * (4.0 * theta).cos()).sqrt() - 2.0) / 4.0;
        let (nv, m, c) = (negativity(&rho), mmc(&rho), correlation_distance(&rho));
        let (d1, _) = report_d1(ctx, &rho);
        n_val.add(n_want, nv);
        d1_val.add(half, d1);
        m_val.add(half, m);
        c_val.add(half + half * half / 2.0, c);
        chain.add(nv < d1 && (d1 - m).abs() <= t.closed_form && m < c);
    }
    for w in [n_val, d1_val, m_val, c_val] {
        ctx.push(w.finish(t.closed_form));
    }
    ctx.push(chain.finish());

    let rho = rho_theta(FRAC_PI_4).expect("valid");
    ctx.close("rho_theta.spot.negativity", (2f64.sqrt() - 1.0) / 2.0, negativity(&rho), t.closed_form);
    ctx.close("rho_theta.spot.d1", 0.5, report_d1(ctx, &rho).0, t.closed_form);
    ctx.close("rho_theta.spot.mmc", 0.5, mmc(&rho), t.closed_form);
    ctx.close("rho_theta.spot.correlation_distance", 0.625, correlation_distance(&rho), t.closed_form);
}

fn bell_diagonal_group(ctx: &mut Ctx<'_>) {
    let t = ctx.tol;
    let mut rng = ctx.rng(6);
    let mut d1_closed = Worst::new("bell_diagonal.d1_closed_eq_c0");
    let mut d1_or = Worst::new("bell_diagonal.d1_oracle_eq_c0");
    let mut m_val = Worst::new("bell_diagonal.mmc_eq_c_plus");
    let mut chain = Violations::new("bell_diagonal.chain_n_le_d1_le_mmc_le_c");
    let mut chain_or = Violations::new("bell_diagonal.chain_with_oracle");
    for _ in 0..500 {
        let c = sampling::tetrahedron_point(&mut rng);
        let rho = bell_diagonal(c[0], c[1], c[2]).expect("inside the tetrahedron");
        let mut abs = c.map(f64::abs);
        abs.sort_by(f64::total_cmp);
        let (c0, c_plus) = (abs[1], abs[2]);
        let p = XStateParams::from_density(&rho, X_PATTERN_TOL).expect("Bell-diagonal states are X-shaped");
        let closed = d1_x_state(&p, &ctx.opts.search).map_or(f64::NAN, |d| d.value);
        let oracle = d1_oracle(&rho, &ctx.opts.search);
        let (nv, m, cd) = (negativity(&rho), mmc(&rho), correlation_distance(&rho));
        d1_closed.add(c0, closed);
        d1_or.add(c0, oracle);
        m_val.add(c_plus, m);
        let eps = t.closed_form;
        chain.add(nv <= closed + eps && closed <= m + eps && m <= cd + eps);
        let eps = t.closed_form + t.oracle;
        chain_or.add(nv <= oracle + eps && oracle <= m + eps);
    }
    ctx.push(d1_closed.finish(t.closed_form));
    ctx.push(d1_or.finish(t.oracle));
    ctx.push(m_val.finish(t.closed_form));
    ctx.push(chain.finish());
    ctx.push(chain_or.finish());

    let rho = bell_diagonal(0.5, -0.3, 0.2).expect("valid");
    ctx.close("bell_diagonal.spot.d1", 0.3, report_d1(ctx, &rho).0, t.closed_form);
    ctx.close("bell_diagonal.spot.mmc", 0.5, mmc(&rho), t.closed_form);
    ctx.close("bell_diagonal.spot.negativity", 0.0, negativity(&rho), t.closed_form);
}

fn global_group(ctx: &mut Ctx<'_>) {
    let t = ctx.tol;
    let mut rng = ctx.rng(7);
    let mut bound = Violations::new("global.mmc_le_correlation_distance");
    for _ in 0..10_000 {
        let rho = sampling::mixed_state(&mut rng);
        bound.add(mmc(&rho) <= correlation_distance(&rho) + t.closed_form);
    }
    ctx.push(bound.finish());
}

fn oracle_group(ctx: &mut Ctx<'_>) {
    let t = ctx.tol;
    let mut rng = ctx.rng(8);
    let mut mmc_match = Worst::new("oracle.mmc_oracle_eq_mmc");
    let mut d1_match = Worst::new("oracle.d1_x_state_eq_d1_oracle");
    for _ in 0..500 {
        let p = sampling::x_params(&mut rng);
        let rho = DensityMatrix::new(p.matrix()).expect("valid X-state");
        mmc_match.add(mmc(&rho), mmc_oracle(&rho, &ctx.opts.search));
        let closed = d1_x_state(&p, &ctx.opts.search).map_or(f64::NAN, |d| d.value);
        d1_match.add(closed, d1_oracle(&rho, &ctx.opts.search));
    }
    ctx.push(mmc_match.finish(t.mmc_oracle));
    ctx.push(d1_match.finish(t.oracle));

    // x = 0 and |α1| = |α2| = |α3|
    let cases = [
        ("werner", XStateParams::new(0.3, 0.2, 0.2, 0.3, 0.0, 0.1), 0.2),
        ("bell", XStateParams::new(0.5, 0.0, 0.0, 0.5, 0.5, 0.0), 1.0),
        ("mixed_bell", XStateParams::new(0.35, 0.15, 0.15, 0.35, 0.2, 0.0), 0.4),
    ];
    for (name, p, want) in cases {
        let p = p.expect("valid X-state");
        let routed = XStateTerms::new(&p).is_degenerate()
            && matches!(d1_x_state(&p, &ctx.opts.search), Ok(d) if d.method == D1Method::Oracle && d.value.is_finite());
        ctx.close(format!("oracle.degenerate.{name}.routed"), 1.0, f64::from(u8::from(routed)), 0.0);
        let v = d1_x_state(&p, &ctx.opts.search).map_or(f64::NAN, |d| d.value);
        ctx.close(format!("oracle.degenerate.{name}.value"), want, v, t.oracle);
    }
}

fn conjecture_group(ctx: &mut Ctx<'_>) {
    let mut rng = ctx.rng(9);
    let tol = ctx.tol.oracle;
    let search = ctx.opts.sweep_search;
    let (mut violations, mut worst) = (0usize, f64::NEG_INFINITY);
    const SAMPLES: usize = 10_000;
    for _ in 0..SAMPLES {
        let rho = sampling::mixed_state(&mut rng);
        let gap = d1_oracle(&rho, &search) - mmc(&rho);
        worst = worst.max(gap);
        if gap > tol {
            violations += 1;
        }
    }
    ctx.out.observations.push(Observation {
        check_id: "conjecture.d1_le_mmc.violations".into(),
        value: violations as f64,
        note: format!("of {SAMPLES} random states beyond {tol:e}; largest D1 - M = {worst:e}"),
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn result_passes_iff_within_tolerance() {
        assert!(VerifyResult::new("a", 1.0, 1.0 + 1e-11, 1e-10).passed);
        assert!(!VerifyResult::new("a", 1.0, 1.0 + 1e-9, 1e-10).passed);
        assert!(!VerifyResult::new("a", 1.0, f64::NAN, 1e-10).passed);
    }

    #[test]
    fn group_selection() {
        assert!(group_selected("bell_diagonal", "bell"));
        assert!(group_selected("bell_diagonal", "bell_diagonal.spot"));
        assert!(!group_selected("rho_d", "rho_theta"));
        assert!(group_selected("rho_d", "rho"));
        assert!(!group_selected("cc", "cq"));
    }

    #[test]
    fn worst_tracks_largest_deviation() {
        let mut w = Worst::new("x");
        w.add(1.0, 1.0);
        w.add(2.0, 2.5);
        w.add(0.0, 0.1);
        let r = w.finish(1.0);
        assert_eq!((r.expected, r.actual), (2.0, 2.5));
        assert_eq!(r.check_id, "x[3]");
    }

    #[test]
    fn filtered_spot_checks() {
        let opts = VerifyOptions {
            filter: Some("bell_diagonal.spot".into()),
            search: SearchConfig::minimal(),
            ..VerifyOptions::default()
        };
        let r = run(&opts);
        assert_eq!(r.results.len(), 3);
        assert!(r.all_passed(), "{:?}", r.results);
    }

    #[test]
    fn zero_tolerance_fails() {
        let opts = VerifyOptions {
            filter: Some("rho_theta".into()),
            tolerances: Tolerances::default().scaled(0.0),
            ..VerifyOptions::default()
        };
        assert!(!run(&opts).all_passed());
    }
}
