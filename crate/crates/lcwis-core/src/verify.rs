//! Seeded property suites checking every construction against first
//! principles: the coordinate case table, the vector-gadget identity, the
//! combining equality, weight expansion, solver-versus-oracle agreement,
//! the AND/OR combinators, and the end-to-end MAX-SAT pipeline.
//!
//! Each suite re-derives expected values from brute force or closed
//! forms, never from the code under test. Runs are deterministic in the
//! seed; a failing check freezes the first counterexample as a
//! human-readable string.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::gadget::{self, GadgetSide};
use crate::reduce::{self, CnfFormula};
use crate::rng::SplitMix64;
use crate::seq::{Sequence, Symbol, WeightedAlphabet};
use crate::solve::{lcwis, lcwis_oracle, wlcwis, wlcwis_oracle};

/// The property suites, in pipeline order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Exhaustive coordinate-gadget case table, x, y in {0,1}, i in 1..=8.
    Coordinate,
    /// Vector-gadget identity `d - u.v`: exhaustive d <= 4 plus random d <= 12.
    Vector,
    /// Combining equality `max pairwise + (4n-2) * ell`, plus token counts.
    Combine,
    /// Weight expansion: unweighted LCWIS of expansions equals WLCWIS.
    Expansion,
    /// Quadratic solvers against subsequence-enumeration oracles.
    Oracle,
    /// AND additivity and OR maximum decoding.
    AndOr,
    /// Full CNF chain against the assignment-enumeration MAX-SAT oracle.
    Pipeline,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Coordinate,
        Suite::Vector,
        Suite::Combine,
        Suite::Expansion,
        Suite::Oracle,
        Suite::AndOr,
        Suite::Pipeline,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coordinate => "coordinate",
            Suite::Vector => "vector",
            Suite::Combine => "combine",
            Suite::Expansion => "expansion",
            Suite::Oracle => "oracle",
            Suite::AndOr => "andor",
            Suite::Pipeline => "pipeline",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Trial count used when the caller does not override it. Exhaustive
    /// parts of a suite always run in full regardless of this number.
    pub fn default_trials(self) -> u64 {
        match self {
            Suite::Coordinate => 32,
            Suite::Vector => 500,
            Suite::Combine => 500,
            Suite::Expansion => 500,
            Suite::Oracle => 1000,
            Suite::AndOr => 200,
            Suite::Pipeline => 100,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Per-suite random-trial override; `None` keeps each suite's default.
    pub trials: Option<u64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: None,
        }
    }
}

/// Outcome of one suite: total individual checks, mismatch count, and the
/// first failing instance if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={} checks={} failures={} status={}",
            self.suite.name(),
            self.checks,
            self.failures,
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

#[derive(Default)]
struct Recorder {
    checks: u64,
    failures: u64,
    counterexample: Option<String>,
}

impl Recorder {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }
}

/// Runs one suite; the random stream is derived from the seed and the
/// suite's position so suites stay independent of one another.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> SuiteReport {
    let index = Suite::ALL.iter().position(|&s| s == suite).unwrap() as u64;
    let mut rng = SplitMix64::new(config.seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let trials = config.trials.unwrap_or(suite.default_trials());
    let mut rec = Recorder::default();
    match suite {
        Suite::Coordinate => coordinate_suite(&mut rec),
        Suite::Vector => vector_suite(&mut rec, &mut rng, trials, &|a, b| {
            lcwis(a, b, false).value
        }),
        Suite::Combine => combine_suite(&mut rec, &mut rng, trials),
        Suite::Expansion => expansion_suite(&mut rec, &mut rng, trials),
        Suite::Oracle => oracle_suite(&mut rec, &mut rng, trials),
        Suite::AndOr => andor_suite(&mut rec, &mut rng, trials),
        Suite::Pipeline => pipeline_suite(&mut rec, &mut rng, trials),
    }
    SuiteReport {
        suite,
        checks: rec.checks,
        failures: rec.failures,
        counterexample: rec.counterexample,
    }
}

pub fn run_all(config: &VerifyConfig) -> Vec<SuiteReport> {
    Suite::ALL
        .into_iter()
        .map(|suite| run_suite(suite, config))
        .collect()
}

fn random_sequence(rng: &mut SplitMix64, max_len: u64, lo: u64, hi: u64) -> Sequence {
    let len = rng.below(max_len + 1);
    Sequence::new(
        (0..len)
            .map(|_| Symbol::new(rng.range(lo, hi) as u32))
            .collect(),
    )
}

fn coordinate_suite(rec: &mut Recorder) {
    for i in 1..=8u32 {
        for (x, y) in [(false, false), (false, true), (true, false), (true, true)] {
            let g1 = gadget::coordinate_gadget(GadgetSide::One, x, i).unwrap();
            let g2 = gadget::coordinate_gadget(GadgetSide::Two, y, i).unwrap();
            let expected = if x && y { 0 } else { 1 };
            let got = lcwis(&g1, &g2, false).value;
            rec.check(got == expected, || {
                format!(
                    "coordinate i={i} x={} y={}: lcwis({g1}; {g2}) = {got}, want {expected}",
                    x as u8, y as u8
                )
            });
        }
    }
}

fn vector_pair_check(
    rec: &mut Recorder,
    u: &[bool],
    v: &[bool],
    solver: &dyn Fn(&Sequence, &Sequence) -> i64,
) {
    let d = u.len() as i64;
    let dot = u.iter().zip(v).filter(|&(&x, &y)| x && y).count() as i64;
    let g1 = gadget::vector_gadget(GadgetSide::One, u).unwrap();
    let g2 = gadget::vector_gadget(GadgetSide::Two, v).unwrap();
    let got = solver(&g1, &g2);
    rec.check(got == d - dot, || {
        let bits = |w: &[bool]| {
            w.iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect::<String>()
        };
        format!(
            "vector u={} v={}: lcwis = {got}, want {}",
            bits(u),
            bits(v),
            d - dot
        )
    });
}

fn vector_suite(
    rec: &mut Recorder,
    rng: &mut SplitMix64,
    trials: u64,
    solver: &dyn Fn(&Sequence, &Sequence) -> i64,
) {
    for d in 1..=4usize {
        for u_bits in 0u32..1 << d {
            for v_bits in 0u32..1 << d {
                let u: Vec<bool> = (0..d).map(|k| u_bits >> k & 1 == 1).collect();
                let v: Vec<bool> = (0..d).map(|k| v_bits >> k & 1 == 1).collect();
                vector_pair_check(rec, &u, &v, solver);
            }
        }
    }
    for _ in 0..trials {
        let d = rng.range(1, 12) as usize;
        let u: Vec<bool> = (0..d).map(|_| rng.chance()).collect();
        let v: Vec<bool> = (0..d).map(|_| rng.chance()).collect();
        vector_pair_check(rec, &u, &v, solver);
    }
}

fn combine_suite(rec: &mut Recorder, rng: &mut SplitMix64, trials: u64) {
    let weights = WeightedAlphabet::unit((3..=11).map(Symbol::new));
    for _ in 0..trials {
        let n = rng.range(1, 5) as usize;
        let s_list: Vec<Sequence> = (0..n).map(|_| random_sequence(rng, 6, 3, 11)).collect();
        let t_list: Vec<Sequence> = (0..n).map(|_| random_sequence(rng, 6, 3, 11)).collect();

        let ci = match gadget::combine(&s_list, &t_list, &weights) {
            Ok(ci) => ci,
            Err(e) => {
                rec.check(false, || format!("combine rejected valid payloads: {e}"));
                continue;
            }
        };

        let s_tokens: usize = s_list.iter().map(Sequence::len).sum();
        let t_tokens: usize = t_list.iter().map(Sequence::len).sum();
        rec.check(
            ci.p1.len() == gadget::CombinedInstance::expected_p1_tokens(n, s_tokens)
                && ci.p2.len() == gadget::CombinedInstance::expected_p2_tokens(n, t_tokens),
            || format!("token counts off for n={n}: |p1|={} |p2|={}", ci.p1.len(), ci.p2.len()),
        );

        let mut best = 0;
        for s in &s_list {
            for t in &t_list {
                best = best.max(wlcwis_oracle(s, t, &weights).unwrap());
            }
        }
        let got = wlcwis(&ci.p1, &ci.p2, &ci.weights, false).unwrap().value;
        rec.check(got == best + ci.offset, || {
            format!(
                "combining equality broken: n={n} s={s_list:?} t={t_list:?} \
                 got {got}, want {best} + {}",
                ci.offset
            )
        });

        // The combined pair itself is oracle-checkable only when one side
        // stays within the enumeration cutoff.
        if let Ok(oracle_value) = wlcwis_oracle(&ci.p1, &ci.p2, &ci.weights) {
            rec.check(got == oracle_value, || {
                format!("combined instance disagrees with oracle: {got} vs {oracle_value}")
            });
        }
    }
}

fn expansion_suite(rec: &mut Recorder, rng: &mut SplitMix64, trials: u64) {
    for _ in 0..trials {
        let w = WeightedAlphabet::from_pairs(
            (0..6).map(|s| (Symbol::new(s), rng.range(1, 4) as i64)),
        )
        .unwrap();
        let a = random_sequence(rng, 8, 0, 5);
        let b = random_sequence(rng, 8, 0, 5);
        let ea = gadget::expand_weights(&a, &w).unwrap();
        let eb = gadget::expand_weights(&b, &w).unwrap();
        let got = lcwis(&ea, &eb, false).value;
        let want = wlcwis(&a, &b, &w, false).unwrap().value;
        rec.check(got == want, || {
            format!("expansion mismatch: a=[{a}] b=[{b}] expanded {got}, weighted {want}")
        });
    }
}

fn oracle_suite(rec: &mut Recorder, rng: &mut SplitMix64, trials: u64) {
    for _ in 0..trials {
        let a = random_sequence(rng, 12, 0, 4);
        let b = random_sequence(rng, 12, 0, 4);

        let fast = lcwis(&a, &b, false).value;
        let slow = lcwis_oracle(&a, &b).unwrap();
        rec.check(fast == slow, || {
            format!("lcwis mismatch: a=[{a}] b=[{b}] solver {fast}, oracle {slow}")
        });

        let w = WeightedAlphabet::from_pairs(
            (0..5).map(|s| (Symbol::new(s), rng.range(1, 9) as i64)),
        )
        .unwrap();
        let wfast = wlcwis(&a, &b, &w, false).unwrap().value;
        let wslow = wlcwis_oracle(&a, &b, &w).unwrap();
        rec.check(wfast == wslow, || {
            format!("wlcwis mismatch: a=[{a}] b=[{b}] solver {wfast}, oracle {wslow}")
        });

        let unit = WeightedAlphabet::unit((0..5).map(Symbol::new));
        let via_unit = wlcwis(&a, &b, &unit, false).unwrap().value;
        rec.check(via_unit == fast, || {
            format!("unit-weight degeneracy broken: a=[{a}] b=[{b}] {via_unit} vs {fast}")
        });
    }
}

fn andor_suite(rec: &mut Recorder, rng: &mut SplitMix64, trials: u64) {
    for _ in 0..trials {
        let a1 = random_sequence(rng, 8, 0, 5);
        let b1 = random_sequence(rng, 8, 0, 5);
        let a2 = random_sequence(rng, 8, 0, 5);
        let b2 = random_sequence(rng, 8, 0, 5);
        let (o1, o2) = gadget::and_gadget((&a1, &b1), (&a2, &b2)).unwrap();
        let want = lcwis_oracle(&a1, &b1).unwrap() + lcwis_oracle(&a2, &b2).unwrap();
        let got = lcwis(&o1, &o2, false).value;
        rec.check(got == want, || {
            format!("and additivity broken: ([{a1}];[{b1}]) + ([{a2}];[{b2}]) = {got}, want {want}")
        });
    }
    for _ in 0..trials {
        let k = rng.range(1, 4) as usize;
        let pairs: Vec<(Sequence, Sequence)> = (0..k)
            .map(|_| (random_sequence(rng, 4, 0, 5), random_sequence(rng, 4, 0, 5)))
            .collect();
        let want = pairs
            .iter()
            .map(|(f, s)| lcwis_oracle(f, s).unwrap())
            .max()
            .unwrap();
        let ci = gadget::or_gadget(&pairs).unwrap();
        let got = wlcwis(&ci.p1, &ci.p2, &ci.weights, false).unwrap().value - ci.offset;
        rec.check(got == want, || {
            format!("or maximum broken: pairs={pairs:?} decoded {got}, want {want}")
        });
    }
}

fn random_formula(rng: &mut SplitMix64, max_vars: u64, max_clauses: u64) -> CnfFormula {
    loop {
        let num_vars = rng.range(1, max_vars) as u32;
        let num_clauses = rng.range(1, max_clauses) as usize;
        let clauses: Vec<Vec<i32>> = (0..num_clauses)
            .map(|_| {
                (0..rng.range(1, 3))
                    .map(|_| {
                        let var = rng.range(1, num_vars as u64) as i32;
                        if rng.chance() {
                            var
                        } else {
                            -var
                        }
                    })
                    .collect()
            })
            .collect();
        if let Ok(f) = CnfFormula::new(num_vars, clauses) {
            return f;
        }
    }
}

fn pipeline_suite(rec: &mut Recorder, rng: &mut SplitMix64, trials: u64) {
    for _ in 0..trials {
        let f = random_formula(rng, 8, 12);
        let via_lcwis = reduce::maxsat_via_lcwis(&f, reduce::DEFAULT_MAXSAT_BUDGET).unwrap();
        let via_oracle = reduce::maxsat_oracle(&f).unwrap();
        rec.check(via_lcwis == via_oracle, || {
            format!("pipeline mismatch on {f:?}: lcwis chain {via_lcwis}, oracle {via_oracle}")
        });
    }
}
