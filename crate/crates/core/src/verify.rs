//! Brute-force cross-validation: enumerate determinants on coefficient
//! boxes, check the classifier against them, and check that `achieve`
//! covers every accepted value in a window.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{has_predicate, lambda_from_classifier, member};
use crate::error::{Error, Result};
use crate::fast::Evaluator;
use crate::group::{build_group, GroupSpec, SUPPORTED_NAMES};
use crate::witness::{achieve, all_identities};

/// Default cap on `(2r + 1)^n`.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Vectors per parallel work unit.
const CHUNK: u64 = 1 << 14;

/// One box enumeration: entries in `[-radius, radius]`, values kept when
/// `|v| <= value_bound`, restricted to shard `index` of `count` contiguous
/// ranges of the mixed-radix index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationJob {
    pub spec: GroupSpec,
    pub radius: u32,
    pub value_bound: u64,
    pub shard: (u64, u64),
    pub budget: u64,
}

impl EnumerationJob {
    pub fn new(spec: GroupSpec, radius: u32, value_bound: u64) -> Self {
        EnumerationJob {
            spec,
            radius,
            value_bound,
            shard: (0, 1),
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_shard(mut self, index: u64, count: u64) -> Self {
        self.shard = (index, count);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// `(2r + 1)^n`, or `None` past `u64`.
    pub fn space(&self) -> Option<u64> {
        let side = 2 * self.radius as u64 + 1;
        side.checked_pow(self.spec.order() as u32)
    }

    fn checked_space(&self) -> Result<u64> {
        match self.space() {
            Some(n) if n <= self.budget => Ok(n),
            n => Err(Error::BudgetExceeded(format!(
                "{} ({}^{} for {}, budget {})",
                n.map_or_else(|| "more than 2^64".to_string(), |n| n.to_string()),
                2 * self.radius + 1,
                self.spec.order(),
                self.spec,
                self.budget
            ))),
        }
    }

    /// The index range of this shard.
    fn range(&self, total: u64) -> Result<(u64, u64)> {
        let (i, k) = self.shard;
        if k == 0 || i >= k {
            return Err(Error::Precondition(format!("shard {i} of {k}")));
        }
        let cut = |j: u64| (total as u128 * j as u128 / k as u128) as u64;
        Ok((cut(i), cut(i + 1)))
    }
}

/// Outcome of a verification run; passing runs have empty violation lists.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub group: Option<GroupSpec>,
    /// Sorted attained values in the window.
    pub attained: Vec<i64>,
    /// `(vector, value)` pairs whose value the classifier rejects.
    pub soundness_violations: Vec<(Vec<i64>, i64)>,
    /// Accepted values with no verified witness.
    pub completeness_misses: Vec<i64>,
    /// Smallest attained `|v| >= 2`.
    pub lambda_observed: Option<u64>,
    /// Per-identity outcomes; only the identity suite fills this.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<IdentityOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.soundness_violations.is_empty()
            && self.completeness_misses.is_empty()
            && self.identities.iter().all(|o| o.failures.is_empty())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOutcome {
    pub id: String,
    pub group: GroupSpec,
    pub checked: u64,
    /// Parameter tuples where the determinant differs from the claimed value.
    pub failures: Vec<Vec<i64>>,
}

/// Writes the mixed-radix digits of `index` (least significant first) as
/// entries in `[-r, r]`.
fn decode(mut index: u64, r: i64, out: &mut [i64]) {
    let side = (2 * r + 1) as u64;
    for e in out.iter_mut() {
        *e = (index % side) as i64 - r;
        index /= side;
    }
}

/// Steps to the next vector in index order.
fn advance(r: i64, c: &mut [i64]) {
    for e in c.iter_mut() {
        if *e < r {
            *e += 1;
            return;
        }
        *e = -r;
    }
}

/// Attained values in the window, each with the smallest index reaching it.
fn enumerate_indexed(job: &EnumerationJob) -> Result<BTreeMap<i64, u64>> {
    let total = job.checked_space()?;
    let (lo, hi) = job.range(total)?;
    let eval = Evaluator::new(&job.spec)?;
    let n = job.spec.order();
    let r = job.radius as i64;
    let bound = job.value_bound as i128;
    let chunks: Vec<u64> = (lo..hi).step_by(CHUNK as usize).collect();
    let parts: Vec<BTreeMap<i64, u64>> = chunks
        .into_par_iter()
        .map(|start| {
            let end = (start + CHUNK).min(hi);
            let mut c = vec![0i64; n];
            decode(start, r, &mut c);
            let mut seen = BTreeMap::new();
            for index in start..end {
                let v = match eval.eval_i128(&c) {
                    Some(v) => v,
                    None => eval.eval(&c).to_i128().unwrap_or(i128::MAX),
                };
                if v.abs() <= bound {
                    seen.entry(v as i64).or_insert(index);
                }
                advance(r, &mut c);
            }
            seen
        })
        .collect();
    let mut out = BTreeMap::new();
    for part in parts {
        for (v, i) in part {
            out.entry(v).and_modify(|j: &mut u64| *j = (*j).min(i)).or_insert(i);
        }
    }
    Ok(out)
}

/// `{det(u) : u in [-r, r]^n} ∩ [-B, B]` over this job's shard, sorted.
pub fn enumerate_window(job: &EnumerationJob) -> Result<Vec<i64>> {
    Ok(enumerate_indexed(job)?.into_keys().collect())
}

fn lambda_of(values: impl IntoIterator<Item = i64>) -> Option<u64> {
    values.into_iter().map(i64::unsigned_abs).filter(|&a| a >= 2).min()
}

/// Checks every attained value of `job` against the classifier.
pub fn soundness_check(spec: &GroupSpec, job: &EnumerationJob) -> Result<VerificationReport> {
    if spec != &job.spec {
        return Err(Error::Precondition(format!("job is for {}, not {spec}", job.spec)));
    }
    let attained = enumerate_indexed(job)?;
    let mut violations = Vec::new();
    for (&v, &index) in &attained {
        if !member(spec, &BigInt::from(v))?.verdict {
            let mut c = vec![0; spec.order()];
            decode(index, job.radius as i64, &mut c);
            violations.push((c, v));
        }
    }
    Ok(VerificationReport {
        group: Some(spec.clone()),
        lambda_observed: lambda_of(attained.keys().copied()),
        attained: attained.into_keys().collect(),
        soundness_violations: violations,
        ..Default::default()
    })
}

/// Asks `achieve` for every accepted value in `[-bound, bound]` and
/// re-verifies each witness.
pub fn completeness_check(spec: &GroupSpec, bound: u64) -> Result<VerificationReport> {
    build_group(spec)?;
    if !has_predicate(spec) {
        return Err(Error::UnsupportedGroup(format!("{spec} has no value-set classifier")));
    }
    let b = bound as i64;
    let outcomes: Vec<(i64, Option<bool>)> = (-b..=b)
        .into_par_iter()
        .map(|v| {
            let big = BigInt::from(v);
            match member(spec, &big) {
                Ok(c) if c.verdict => {
                    let ok = achieve(spec, &big)
                        .ok()
                        .is_some_and(|w| w.value == big && w.verify().unwrap_or(false));
                    (v, Some(ok))
                }
                Ok(_) => (v, None),
                Err(_) => (v, Some(false)),
            }
        })
        .collect();
    let attained: Vec<i64> = outcomes.iter().filter(|o| o.1 == Some(true)).map(|o| o.0).collect();
    Ok(VerificationReport {
        group: Some(spec.clone()),
        lambda_observed: lambda_of(attained.iter().copied()),
        attained,
        completeness_misses: outcomes.iter().filter(|o| o.1 == Some(false)).map(|o| o.0).collect(),
        ..Default::default()
    })
}

/// Smallest attained `|v| >= 2`, which must match the classifier.
pub fn lambda_search(spec: &GroupSpec, job: &EnumerationJob) -> Result<u64> {
    let expected = lambda_from_classifier(spec)?;
    let job = EnumerationJob {
        spec: spec.clone(),
        value_bound: job.value_bound.max(expected),
        ..job.clone()
    };
    let observed = lambda_of(enumerate_window(&job)?);
    match observed {
        Some(l) if l == expected => Ok(l),
        Some(l) => Err(Error::Inconclusive(format!(
            "{spec}: radius {} attains {l}, classifier gives {expected}",
            job.radius
        ))),
        None => Err(Error::Inconclusive(format!(
            "{spec}: radius {} attains nothing in [2, {expected}]",
            job.radius
        ))),
    }
}

/// Checks every construction identity over `[-range, range]^arity`.
pub fn identity_suite_with(range: i64) -> VerificationReport {
    let mut cases = Vec::new();
    for ident in all_identities() {
        for spec in &ident.groups {
            cases.push((ident, spec.clone()));
        }
    }
    let outcomes = cases
        .into_par_iter()
        .map(|(ident, spec)| {
            let eval = Evaluator::new(&spec).expect("identity groups are supported");
            let side = (2 * range + 1) as u64;
            let count = side.pow(ident.arity() as u32);
            let mut failures = Vec::new();
            let mut t = vec![0i64; ident.arity()];
            for index in 0..count {
                decode(index, range, &mut t);
                let params: Vec<BigInt> = t.iter().map(|&a| BigInt::from(a)).collect();
                let c = ident.template(&params);
                let det = match c.to_i64s() {
                    Some(small) => eval.eval(&small),
                    None => crate::measure::group_determinant(eval.table(), &c).expect("length matches"),
                };
                if det != ident.claimed(&params) {
                    failures.push(t.clone());
                }
            }
            IdentityOutcome {
                id: ident.id.clone(),
                group: spec,
                checked: count,
                failures,
            }
        })
        .collect();
    VerificationReport {
        identities: outcomes,
        ..Default::default()
    }
}

/// [`identity_suite_with`] over `[-5, 5]`.
pub fn identity_suite() -> VerificationReport {
    identity_suite_with(5)
}

/// Groups with a classifier, in display order.
pub fn classified_groups() -> Vec<GroupSpec> {
    SUPPORTED_NAMES
        .iter()
        .map(|n| n.parse().expect("supported names parse"))
        .filter(has_predicate)
        .collect()
}
