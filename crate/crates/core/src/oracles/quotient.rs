//! Randomized checks of the greedy determinant quotient over a prime field.
//!
//! Every trial specializes all coefficients `u[i][a]` to uniform elements of
//! `Z/p` (zero included), then compares determinants of the greedy matrix,
//! its principal submatrix and, when they are small enough, the full matrix.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::greedy::greedy_closure;
use crate::matrix::{build_matrix, principal_submatrix, SymbolicMatrix};
use crate::model::{CoeffRef, LatticePoint, ZonotopeSystem};
use crate::oracles::field::{PrimeField, DEFAULT_PRIME};
use crate::oracles::mixed_volume::mixed_volume_permanent;
use crate::oracles::sylvester::sylvester_resultant;
use crate::subdivision::Subdivision;
use crate::system::System;

/// Redraws allowed when the principal submatrix specializes to a singular one.
const SINGULAR_RETRIES: u64 = 3;

#[derive(Clone, Debug)]
pub struct QuotientOptions {
    pub prime: u64,
    pub trials: usize,
    pub seed: u64,
    /// Checks that need the matrix on all of `B` are skipped above this many points.
    pub full_matrix_limit: usize,
}

impl Default for QuotientOptions {
    fn default() -> Self {
        Self { prime: DEFAULT_PRIME, trials: 50, seed: 0, full_matrix_limit: 1500 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: String,
    pub applicable: bool,
    pub passed: usize,
    pub failed: usize,
    pub failing_seeds: Vec<u64>,
}

impl CheckTally {
    fn new(name: &str, applicable: bool) -> Self {
        Self { name: name.to_string(), applicable, ..Self::default() }
    }

    fn record(&mut self, ok: bool, seed: u64) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failing_seeds.push(seed);
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub prime: u64,
    pub trials: usize,
    pub seed: u64,
    pub greedy_rows: usize,
    pub principal_rows: usize,
    pub full_rows: Option<usize>,
    /// Trial seeds whose principal submatrix stayed singular after all redraws.
    pub singular_e_seeds: Vec<u64>,
    pub checks: Vec<CheckTally>,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.singular_e_seeds.is_empty() && self.checks.iter().all(CheckTally::ok)
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_E_NONSINGULAR: &str = "principal-nonsingular";
pub const CHECK_H_NONSINGULAR: &str = "greedy-nonsingular";
pub const CHECK_SYLVESTER: &str = "univariate-sylvester";
pub const CHECK_FULL_VS_GREEDY: &str = "full-vs-greedy-quotient";
pub const CHECK_ORIENTATION: &str = "orientation-independence";
pub const CHECK_BLOCK_FACTOR: &str = "block-factorization";
pub const CHECK_POINT_SUPPORT: &str = "point-support-power";

/// A matrix pair `(H, E)` ready to be specialized.
struct Pair {
    h: SymbolicMatrix,
    e: SymbolicMatrix,
}

impl Pair {
    fn from_points(points: &[LatticePoint], sub: &Subdivision) -> Result<Self> {
        let h = build_matrix(points, sub)?;
        let e = principal_submatrix(&h);
        Ok(Self { h, e })
    }

    fn greedy(sub: &Subdivision) -> Result<Self> {
        Self::from_points(&greedy_closure(sub).point_set(), sub)
    }
}

/// Dense specialization of a symbolic matrix.
pub fn specialize(m: &SymbolicMatrix, values: &HashMap<CoeffRef, u64>) -> Vec<Vec<u64>> {
    let mut dense = vec![vec![0; m.len()]; m.len()];
    for (r, c, coeff) in m.entries() {
        dense[r][c] = *values.get(coeff).expect("every coefficient has a value");
    }
    dense
}

fn labels(sub: &Subdivision) -> Vec<CoeffRef> {
    let mut set = BTreeSet::new();
    for i in 0..=sub.n() {
        for a in sub.support(i) {
            set.insert(CoeffRef { poly: i, support: sub.native_support(i, a) });
        }
    }
    set.into_iter().collect()
}

fn draw(labels: &[CoeffRef], p: u64, seed: u64) -> HashMap<CoeffRef, u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    labels.iter().map(|l| (l.clone(), rng.gen_range(0..p))).collect()
}

/// Per-trial seeds derived from the master seed.
pub fn trial_seeds(master: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    (0..trials).map(|_| rng.gen()).collect()
}

struct Prepared {
    greedy: Pair,
    full: Option<Pair>,
    reflected: Option<Pair>,
    labels: Vec<CoeffRef>,
    univariate: bool,
}

fn prepare(system: &System, opts: &QuotientOptions) -> Result<Prepared> {
    let sub = system.subdivision()?;
    let greedy = Pair::greedy(&sub)?;
    let full = if sub.num_points() <= opts.full_matrix_limit as u128 {
        Some(Pair::from_points(&sub.points(), &sub)?)
    } else {
        None
    };
    let reflected = match system {
        System::Zonotope(s) => {
            Some(Pair::greedy(&Subdivision::with_reflection(s.clone(), vec![true; s.n()])?)?)
        }
        System::MultiHomogeneous(_) => None,
    };
    Ok(Prepared { greedy, full, reflected, labels: labels(&sub), univariate: system.n() == 1 })
}

#[derive(Default)]
struct TrialOutcome {
    singular_e: bool,
    results: Vec<(usize, bool)>,
}

const NAMES: [&str; 6] = [
    CHECK_E_NONSINGULAR,
    CHECK_H_NONSINGULAR,
    CHECK_SYLVESTER,
    CHECK_FULL_VS_GREEDY,
    CHECK_ORIENTATION,
    CHECK_BLOCK_FACTOR,
];

fn run_trial(prep: &Prepared, field: &PrimeField, seed: u64) -> TrialOutcome {
    let p = field.modulus();
    let mut values = None;
    for attempt in 0..=SINGULAR_RETRIES {
        let v = draw(&prep.labels, p, seed.wrapping_add(attempt));
        if field.det(&specialize(&prep.greedy.e, &v)) != 0 {
            values = Some(v);
            break;
        }
    }
    let Some(values) = values else {
        return TrialOutcome { singular_e: true, results: vec![(0, false)] };
    };
    let det = |m: &SymbolicMatrix| field.det(&specialize(m, &values));
    let det_hg = det(&prep.greedy.h);
    let det_eg = det(&prep.greedy.e);
    let mut results = vec![(0, true), (1, det_hg != 0)];

    if prep.univariate {
        let coeffs = |poly: usize| -> Vec<u64> {
            let mut c: Vec<(i64, u64)> = values
                .iter()
                .filter(|(k, _)| k.poly == poly)
                .map(|(k, &v)| (k.support[0], v))
                .collect();
            c.sort();
            c.into_iter().map(|(_, v)| v).collect()
        };
        let res = sylvester_resultant(&coeffs(0), &coeffs(1), p).expect("prime checked");
        results.push((2, field.div(det_hg, det_eg) == res));
    }
    if let Some(full) = &prep.full {
        let det_h = det(&full.h);
        let det_e = det(&full.e);
        results.push((3, field.mul(det_h, det_eg) == field.mul(det_hg, det_e)));
        let block = field.mul(det(&full.h.greedy_block()), det(&full.h.complement_block()));
        results.push((5, det_h == block));
    }
    if let Some(refl) = &prep.reflected {
        // reflecting swaps which polynomial fills some rows, so only the sign may change
        let lhs = field.mul(det(&refl.h), det_eg);
        let rhs = field.mul(det_hg, det(&refl.e));
        results.push((4, lhs == rhs || lhs == field.neg(rhs)));
    }
    TrialOutcome { singular_e: false, results }
}

/// Runs all applicable quotient checks on `system`.
pub fn verify_quotient(system: &System, opts: &QuotientOptions) -> Result<QuotientReport> {
    let field = PrimeField::new(opts.prime)?;
    let prep = prepare(system, opts)?;
    let seeds = trial_seeds(opts.seed, opts.trials);
    let outcomes: Vec<TrialOutcome> =
        seeds.par_iter().map(|&s| run_trial(&prep, &field, s)).collect();

    let applicable = [
        true,
        true,
        prep.univariate,
        prep.full.is_some(),
        prep.reflected.is_some(),
        prep.full.is_some(),
    ];
    let mut checks: Vec<CheckTally> =
        NAMES.iter().zip(applicable).map(|(n, a)| CheckTally::new(n, a)).collect();
    let mut singular_e_seeds = Vec::new();
    for (outcome, &seed) in outcomes.iter().zip(&seeds) {
        if outcome.singular_e {
            singular_e_seeds.push(seed);
        }
        for &(k, ok) in &outcome.results {
            checks[k].record(ok, seed);
        }
    }
    if let System::Zonotope(sys) = system {
        let mut tally = point_support_check(sys, opts)?;
        tally.name = CHECK_POINT_SUPPORT.to_string();
        checks.push(tally);
    }
    Ok(QuotientReport {
        prime: opts.prime,
        trials: opts.trials,
        seed: opts.seed,
        greedy_rows: prep.greedy.h.len(),
        principal_rows: prep.greedy.e.len(),
        full_rows: prep.full.as_ref().map(|f| f.h.len()),
        singular_e_seeds,
        checks,
    })
}

/// With the last support shrunk to the origin the resultant is `c^MV`, where
/// `c` is that polynomial's constant and `MV` the mixed volume of the others.
pub fn point_support_check(sys: &ZonotopeSystem, opts: &QuotientOptions) -> Result<CheckTally> {
    let field = PrimeField::new(opts.prime)?;
    let n = sys.n();
    let exponent = mixed_volume_permanent(sys.bounds(), n)? as u64;
    let sub = Subdivision::canonical(sys.degenerate_last_support());
    let pair = Pair::greedy(&sub)?;
    let labels = labels(&sub);
    let constant = CoeffRef { poly: n, support: LatticePoint::zero(n) };
    let p = field.modulus();

    let seeds = trial_seeds(opts.seed ^ 0x5eed, opts.trials);
    let results: Vec<bool> = seeds
        .par_iter()
        .map(|&seed| {
            for attempt in 0..=SINGULAR_RETRIES {
                let mut values = draw(&labels, p, seed.wrapping_add(attempt));
                if values[&constant] == 0 {
                    values.insert(constant.clone(), 1);
                }
                let det_e = field.det(&specialize(&pair.e, &values));
                if det_e == 0 {
                    continue;
                }
                let det_h = field.det(&specialize(&pair.h, &values));
                return field.div(det_h, det_e) == field.pow(values[&constant], exponent);
            }
            false
        })
        .collect();
    let mut tally = CheckTally::new(CHECK_POINT_SUPPORT, true);
    for (ok, seed) in results.into_iter().zip(seeds) {
        tally.record(ok, seed);
    }
    Ok(tally)
}
