//! Seeded property suites over random signed graphs.
//!
//! Each suite draws its instances from a ChaCha stream derived from the seed
//! and the suite name, so a fixed seed reproduces the same report.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::balance::{
    det_exact, distance_determinants, forest_det, is_balanced_switching, DetValue,
};
use crate::distance::{distance_table, DistanceKind};
use crate::error::{Error, Result};
use crate::generate::{
    generate, random_connected, random_connected_weighted, seeded_rng, GraphKind, SignSpec,
};
use crate::graph::{Orientation, SignedGraph, SwitchingFunction, WeightedSignedGraph};
use crate::laplacian::{distance_laplacian_from_table, incidence_matrix, weighted_laplacian};
use crate::spectra::{
    spectral_deviation, sym_eig, transmission_regular_shift_check, unsigned_distance_laplacian,
};

/// Cospectrality and transmission-shift tolerance.
pub const SPECTRAL_TOL: f64 = 1e-8;
/// Lower bound accepted for the least eigenvalue of `L^max`/`L^min`.
pub const PSD_TOL: f64 = -1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    ForestTheorem,
    BalanceEquivalence,
    Cospectrality,
    TransmissionShift,
    IncidenceFactorization,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::ForestTheorem,
        Suite::BalanceEquivalence,
        Suite::Cospectrality,
        Suite::TransmissionShift,
        Suite::IncidenceFactorization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ForestTheorem => "forest-theorem",
            Suite::BalanceEquivalence => "balance-equivalence",
            Suite::Cospectrality => "cospectrality",
            Suite::TransmissionShift => "transmission-shift",
            Suite::IncidenceFactorization => "incidence-factorization",
        }
    }

    /// Largest `n` accepted by the suite.
    pub fn size_limit(self) -> usize {
        match self {
            Suite::ForestTheorem => 8,
            Suite::BalanceEquivalence | Suite::Cospectrality | Suite::IncidenceFactorization => 16,
            Suite::TransmissionShift => 40,
        }
    }

    pub fn default_instances(self) -> usize {
        match self {
            Suite::ForestTheorem => 200,
            Suite::BalanceEquivalence => 500,
            Suite::Cospectrality => 100,
            Suite::TransmissionShift => 0,
            Suite::IncidenceFactorization => 500,
        }
    }

    fn stream_id(self) -> u64 {
        match self {
            Suite::ForestTheorem => 0x1f0e,
            Suite::BalanceEquivalence => 0xba1a,
            Suite::Cospectrality => 0xc05e,
            Suite::TransmissionShift => 0x7a45,
            Suite::IncidenceFactorization => 0x14c1,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub seed: u64,
    /// Random instances per suite; `None` uses [`Suite::default_instances`].
    pub instances: Option<usize>,
    /// Extra graphs checked alongside the random ones.
    pub corpus: Vec<WeightedSignedGraph>,
}

impl VerifyOptions {
    pub fn new(max_n: usize, seed: u64) -> VerifyOptions {
        VerifyOptions {
            max_n,
            seed,
            instances: None,
            corpus: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: usize,
    pub passed: bool,
    /// Name of the measured quantity, e.g. `|det - sum|`.
    pub metric: String,
    /// Largest observed value of `metric`, as a decimal string.
    pub max_deviation: String,
    /// Least eigenvalue of `L^max`/`L^min` seen, when the suite computes it.
    pub min_eigenvalue: Option<f64>,
    pub failures: Vec<String>,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} instances, max {} = {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.instances,
            self.metric,
            self.max_deviation
        )?;
        if let Some(m) = self.min_eigenvalue {
            write!(f, ", min eigenvalue = {m:e}")?;
        }
        for fail in self.failures.iter().take(5) {
            write!(f, "\n  {fail}")?;
        }
        Ok(())
    }
}

struct Tracker {
    suite: Suite,
    instances: usize,
    metric: &'static str,
    max_f: f64,
    max_exact: Option<BigInt>,
    min_eig: Option<f64>,
    failures: Vec<String>,
}

impl Tracker {
    fn new(suite: Suite, metric: &'static str) -> Tracker {
        Tracker {
            suite,
            instances: 0,
            metric,
            max_f: 0.0,
            max_exact: None,
            min_eig: None,
            failures: Vec::new(),
        }
    }

    fn exact(&mut self, d: BigInt) {
        let d = d.abs();
        if self.max_exact.as_ref().is_none_or(|m| d > *m) {
            self.max_exact = Some(d);
        }
    }

    fn real(&mut self, d: f64) {
        if d.is_nan() || d > self.max_f {
            self.max_f = d;
        }
    }

    fn eig(&mut self, lo: f64) {
        self.min_eig = Some(self.min_eig.map_or(lo, |m| m.min(lo)));
        if lo < PSD_TOL {
            self.fail(format!("least eigenvalue {lo:e} below {PSD_TOL:e}"));
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures
            .push(format!("instance {}: {msg}", self.instances));
    }

    fn finish(self) -> SuiteReport {
        let max_deviation = match self.max_exact {
            Some(b) if self.max_f == 0.0 => b.to_string(),
            _ => format!("{:e}", self.max_f),
        };
        SuiteReport {
            suite: self.suite.name().to_string(),
            instances: self.instances,
            passed: self.failures.is_empty(),
            metric: self.metric.to_string(),
            max_deviation,
            min_eigenvalue: self.min_eig,
            failures: self.failures,
        }
    }
}

fn suite_rng(suite: Suite, seed: u64) -> ChaCha8Rng {
    seeded_rng(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ suite.stream_id())
}

fn random_n(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo.min(hi)..=hi)
}

fn psd_check(t: &mut Tracker, g: &SignedGraph) -> Result<()> {
    let table = distance_table(g)?;
    for kind in [DistanceKind::Max, DistanceKind::Min] {
        let s = sym_eig(&distance_laplacian_from_table(&table, kind)?)?;
        if let Some(lo) = s.min() {
            t.eig(lo);
        }
    }
    Ok(())
}

fn forest_theorem(opts: &VerifyOptions) -> Result<SuiteReport> {
    let suite = Suite::ForestTheorem;
    let mut rng = suite_rng(suite, opts.seed);
    let mut t = Tracker::new(suite, "|det - sum|");
    let count = opts.instances.unwrap_or(suite.default_instances());
    let mut graphs: Vec<WeightedSignedGraph> = (0..count)
        .map(|_| {
            let n = random_n(&mut rng, 1, opts.max_n);
            let density = rng.gen_range(0.2..0.9);
            random_connected_weighted(&mut rng, n, density, 0.5, 5)
        })
        .collect();
    graphs.extend(
        opts.corpus
            .iter()
            .filter(|g| g.has_integer_weights() && g.vertex_count() <= suite.size_limit())
            .cloned(),
    );
    for g in &graphs {
        let det = det_exact(&weighted_laplacian(g))?;
        match forest_det(g)? {
            DetValue::Exact(sum) => {
                let diff = &det - &sum;
                if !diff.is_zero() {
                    t.fail(format!("det = {det}, forest sum = {sum}"));
                }
                t.exact(diff);
            }
            DetValue::Real(_) => unreachable!("integer weights give exact sums"),
        }
        t.instances += 1;
    }
    Ok(t.finish())
}

fn balance_equivalence(opts: &VerifyOptions) -> Result<SuiteReport> {
    let suite = Suite::BalanceEquivalence;
    let mut rng = suite_rng(suite, opts.seed);
    let mut t = Tracker::new(suite, "verdict disagreements");
    let count = opts.instances.unwrap_or(suite.default_instances());
    let mut graphs: Vec<SignedGraph> = Vec::with_capacity(count);
    for i in 0..count {
        let n = random_n(&mut rng, 1, opts.max_n);
        let density = rng.gen_range(0.2..0.9);
        let g = if i % 2 == 0 {
            let base = random_connected(&mut rng, n, density, 0.0);
            let zeta = SwitchingFunction::random(n, &mut rng);
            base.switch(&zeta)?
        } else {
            random_connected(&mut rng, n, density, 0.5)
        };
        graphs.push(g);
    }
    graphs.extend(
        opts.corpus
            .iter()
            .filter(|g| g.graph().is_connected())
            .map(|g| g.graph().clone()),
    );
    let mut disagreements = 0u64;
    for g in &graphs {
        let sw = is_balanced_switching(g)?;
        if !sw.verify_certificate(g)? {
            t.fail("switching certificate does not verify".into());
        }
        let d = distance_determinants(g)?;
        let by_max = d.det_max.is_zero();
        let by_min = d.det_min.is_zero();
        let by_pm = d.det_pm.as_ref().is_some_and(Zero::is_zero);
        if d.det_max.is_negative() || d.det_min.is_negative() {
            t.fail(format!(
                "negative determinant ({}, {})",
                d.det_max, d.det_min
            ));
        }
        if [by_max, by_min, by_pm].iter().any(|&v| v != sw.balanced)
            || (sw.balanced && !d.laplacians_equal)
        {
            disagreements += 1;
            t.fail(format!(
                "switching={}, det_max={}, det_min={}, det_pm={:?}",
                sw.balanced, d.det_max, d.det_min, d.det_pm
            ));
        }
        psd_check(&mut t, g)?;
        t.instances += 1;
    }
    t.exact(BigInt::from(disagreements));
    Ok(t.finish())
}

fn cospectrality(opts: &VerifyOptions) -> Result<SuiteReport> {
    let suite = Suite::Cospectrality;
    let mut rng = suite_rng(suite, opts.seed);
    let mut t = Tracker::new(suite, "eigenvalue deviation");
    let count = opts.instances.unwrap_or(suite.default_instances());
    let mut graphs: Vec<SignedGraph> = (0..count)
        .map(|_| {
            let n = random_n(&mut rng, 1, opts.max_n);
            let density = rng.gen_range(0.2..0.9);
            let base = random_connected(&mut rng, n, density, 0.0);
            let zeta = SwitchingFunction::random(n, &mut rng);
            base.switch(&zeta).expect("same length")
        })
        .collect();
    for g in &opts.corpus {
        if g.graph().is_connected() && is_balanced_switching(g.graph())?.balanced {
            graphs.push(g.graph().clone());
        }
    }
    for g in &graphs {
        let table = distance_table(g)?;
        if !table.is_compatible() {
            t.fail("balanced graph is not distance-compatible".into());
            t.instances += 1;
            continue;
        }
        let lpm = distance_laplacian_from_table(&table, DistanceKind::Pm)?;
        let dev = spectral_deviation(&lpm, &unsigned_distance_laplacian(g)?)?;
        if dev.is_nan() || dev > SPECTRAL_TOL {
            t.fail(format!("deviation {dev:e} exceeds {SPECTRAL_TOL:e}"));
        }
        t.real(dev);
        psd_check(&mut t, g)?;
        t.instances += 1;
    }
    Ok(t.finish())
}

fn transmission_shift(opts: &VerifyOptions) -> Result<SuiteReport> {
    let suite = Suite::TransmissionShift;
    let mut t = Tracker::new(suite, "shift deviation");
    let mut graphs = Vec::new();
    for n in 3..=opts.max_n.max(3) {
        for spec in [SignSpec::AllPositive, SignSpec::AllNegative] {
            graphs.push((generate(GraphKind::Cycle, n, &spec, opts.seed)?, Some(n)));
        }
    }
    for g in &opts.corpus {
        if g.graph().is_connected() {
            graphs.push((g.graph().clone(), None));
        }
    }
    for (g, cycle_len) in &graphs {
        for kind in [DistanceKind::Max, DistanceKind::Min] {
            let r = transmission_regular_shift_check(g, kind)?;
            if let Some(n) = cycle_len {
                let k = (*n / 2) as u64;
                let expected = if n % 2 == 1 { k * (k + 1) } else { k * k };
                if r.t != Some(expected) {
                    t.fail(format!("C{n}: transmission {:?}, expected {expected}", r.t));
                }
            }
            if r.is_transmission_regular
                && (r.max_deviation.is_nan() || r.max_deviation > SPECTRAL_TOL)
            {
                t.fail(format!(
                    "deviation {:e} exceeds {SPECTRAL_TOL:e}",
                    r.max_deviation
                ));
            }
            t.real(r.max_deviation);
        }
        psd_check(&mut t, g)?;
        t.instances += 1;
    }
    Ok(t.finish())
}

fn incidence_factorization(opts: &VerifyOptions) -> Result<SuiteReport> {
    let suite = Suite::IncidenceFactorization;
    let mut rng = suite_rng(suite, opts.seed);
    let mut t = Tracker::new(suite, "|HHᵀ - L|");
    let count = opts.instances.unwrap_or(suite.default_instances());
    let mut graphs: Vec<WeightedSignedGraph> = (0..count)
        .map(|_| {
            let n = random_n(&mut rng, 1, opts.max_n);
            let density = rng.gen_range(0.2..0.9);
            random_connected_weighted(&mut rng, n, density, 0.5, 5)
        })
        .collect();
    graphs.extend(opts.corpus.iter().cloned());
    for g in &graphs {
        let lap = weighted_laplacian(g);
        for _ in 0..3 {
            let o = Orientation::random(g.graph(), &mut rng);
            let hht = incidence_matrix(g, &o)?.gram()?;
            let diff = hht.max_abs_diff(&lap)?;
            let exact = g.has_integer_weights();
            let ok = if exact {
                diff == 0.0
            } else {
                diff <= 1e-12 * lap.max_abs().max(1.0)
            };
            if !ok {
                t.fail(format!("HHᵀ differs from L by {diff:e}"));
            }
            t.real(diff);
        }
        t.instances += 1;
    }
    Ok(t.finish())
}

/// Runs one suite. Fails with [`Error::TooLarge`] when `max_n` exceeds the suite limit.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    if opts.max_n < 1 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if opts.max_n > suite.size_limit() {
        return Err(Error::TooLarge {
            n: opts.max_n,
            limit: suite.size_limit(),
        });
    }
    match suite {
        Suite::ForestTheorem => forest_theorem(opts),
        Suite::BalanceEquivalence => balance_equivalence(opts),
        Suite::Cospectrality => cospectrality(opts),
        Suite::TransmissionShift => transmission_shift(opts),
        Suite::IncidenceFactorization => incidence_factorization(opts),
    }
}

pub fn run_all(opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    Suite::ALL.iter().map(|&s| run_suite(s, opts)).collect()
}
