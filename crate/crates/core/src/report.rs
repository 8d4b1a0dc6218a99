//! Violation reports produced by every identity checker.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::scalar::Scalar;

/// Witness lists are capped at this many entries unless changed with
/// [`set_witness_limit`]. The violation count is always exact.
pub const DEFAULT_WITNESS_LIMIT: usize = 16;

static WITNESS_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_WITNESS_LIMIT);

/// Sets the process-wide witness cap used by subsequently built reports.
pub fn set_witness_limit(limit: usize) {
    WITNESS_LIMIT.store(limit, Ordering::Relaxed);
}

pub fn witness_limit() -> usize {
    WITNESS_LIMIT.load(Ordering::Relaxed)
}

/// A basis tuple on which an identity fails, with the nonzero leftover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Which clause of a multi-part identity failed, when there are several.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    pub indices: Vec<usize>,
    pub leftover: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ViolationReport {
    pub identity: String,
    /// Arity of the basis tuples counted in `checked`.
    pub arity: usize,
    pub checked: usize,
    pub violation_count: usize,
    pub witnesses: Vec<Witness>,
}

impl ViolationReport {
    pub fn empty(identity: &str, arity: usize, checked: usize) -> Self {
        ViolationReport {
            identity: identity.to_string(),
            arity,
            checked,
            violation_count: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn from_witnesses(identity: &str, arity: usize, checked: usize, all: Vec<Witness>) -> Self {
        let violation_count = all.len();
        let mut witnesses = all;
        witnesses.truncate(witness_limit());
        ViolationReport {
            identity: identity.to_string(),
            arity,
            checked,
            violation_count,
            witnesses,
        }
    }

    pub fn holds(&self) -> bool {
        self.violation_count == 0
    }

    pub fn renamed(mut self, identity: &str) -> Self {
        self.identity = identity.to_string();
        self
    }

    pub fn tuple_noun(&self) -> &'static str {
        tuple_noun(self.arity)
    }

    /// Combines reports of sub-identities into one under a new name. Witnesses
    /// without a clause are tagged with the name of the part they came from.
    pub fn merge(identity: &str, parts: Vec<ViolationReport>) -> Self {
        let arity = parts.iter().map(|p| p.arity).max().unwrap_or(0);
        let checked = parts.iter().map(|p| p.checked).sum();
        let violation_count = parts.iter().map(|p| p.violation_count).sum();
        let mut witnesses: Vec<Witness> = parts
            .into_iter()
            .flat_map(|p| {
                let name = p.identity;
                p.witnesses.into_iter().map(move |mut w| {
                    if w.clause.is_none() && name != identity {
                        w.clause = Some(name.clone());
                    }
                    w
                })
            })
            .collect();
        witnesses.truncate(witness_limit());
        ViolationReport {
            identity: identity.to_string(),
            arity,
            checked,
            violation_count,
            witnesses,
        }
    }
}

pub fn tuple_noun(arity: usize) -> &'static str {
    match arity {
        1 => "elements",
        2 => "pairs",
        3 => "triples",
        4 => "quadruples",
        _ => "tuples",
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            write!(f, "{}: pass, {} {}", self.identity, self.checked, self.tuple_noun())
        } else {
            write!(
                f,
                "{}: fail, {} violation(s) in {} {}",
                self.identity,
                self.violation_count,
                self.checked,
                self.tuple_noun()
            )?;
            for w in &self.witnesses {
                let idx: Vec<String> = w.indices.iter().map(|i| i.to_string()).collect();
                let left: Vec<String> = w.leftover.iter().map(|s| s.to_string()).collect();
                write!(f, "\n  witness ({})", idx.join(", "))?;
                if let Some(c) = &w.clause {
                    write!(f, " [{c}]")?;
                }
                write!(f, ": leftover [{}]", left.join(", "))?;
            }
            if self.witnesses.len() < self.violation_count {
                write!(f, "\n  ... {} more", self.violation_count - self.witnesses.len())?;
            }
            Ok(())
        }
    }
}

/// Evaluates `eval` on every tuple of `arity` indices below `dim`, in
/// lexicographic order, and collects nonzero leftovers. Evaluation may run in
/// parallel; the result is identical to a sequential scan.
pub(crate) fn scan_tuples<F>(identity: &str, dim: usize, arity: usize, eval: F) -> ViolationReport
where
    F: Fn(&[usize]) -> Vec<(Option<&'static str>, Vec<Scalar>)> + Sync,
{
    scan_grid(identity, &vec![dim; arity], eval)
}

/// Like [`scan_tuples`] with a separate range per slot.
pub(crate) fn scan_grid<F>(identity: &str, dims: &[usize], eval: F) -> ViolationReport
where
    F: Fn(&[usize]) -> Vec<(Option<&'static str>, Vec<Scalar>)> + Sync,
{
    let total: usize = dims.iter().product();
    let found: Vec<Witness> = (0..total)
        .into_par_iter()
        .flat_map_iter(|code| {
            let idx = decode(code, dims);
            eval(&idx)
                .into_iter()
                .filter(|(_, v)| v.iter().any(|s| !s.is_zero()))
                .map(move |(clause, leftover)| Witness {
                    clause: clause.map(str::to_string),
                    indices: idx.clone(),
                    leftover,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    ViolationReport::from_witnesses(identity, dims.len(), total, found)
}

/// Scans tuples whose evaluation is a matrix on a module, given column by
/// column. A tuple counts once; its witness is the first nonzero column,
/// recorded as an extra trailing index.
pub(crate) fn scan_operator<F>(identity: &str, dims: &[usize], eval: F) -> ViolationReport
where
    F: Fn(&[usize]) -> Vec<(Option<&'static str>, Vec<Vec<Scalar>>)> + Sync,
{
    let total: usize = dims.iter().product();
    let found: Vec<Witness> = (0..total)
        .into_par_iter()
        .flat_map_iter(|code| {
            let idx = decode(code, dims);
            eval(&idx)
                .into_iter()
                .filter_map(|(clause, cols)| {
                    let (k, col) = cols.into_iter().enumerate().find(|(_, c)| c.iter().any(|s| !s.is_zero()))?;
                    let mut indices = idx.clone();
                    indices.push(k);
                    Some(Witness {
                        clause: clause.map(str::to_string),
                        indices,
                        leftover: col,
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    ViolationReport::from_witnesses(identity, dims.len(), total, found)
}

fn decode(mut code: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (slot, &d) in idx.iter_mut().zip(dims).rev() {
        *slot = code % d;
        code /= d;
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn lexicographic_decode() {
        assert_eq!(decode(0, &[3, 3]), vec![0, 0]);
        assert_eq!(decode(5, &[3, 3]), vec![1, 2]);
        assert_eq!(decode(26, &[3, 3, 3]), vec![2, 2, 2]);
        assert_eq!(decode(5, &[2, 3]), vec![1, 2]);
    }

    #[test]
    fn display_pass_and_fail() {
        let r = ViolationReport::empty("malcev", 4, 81);
        assert_eq!(r.to_string(), "malcev: pass, 81 quadruples");
        let r = scan_tuples("toy", 2, 2, |idx| {
            if idx == [1, 0] {
                vec![(None, vec![q(1)])]
            } else {
                vec![(None, vec![q(0)])]
            }
        });
        assert_eq!(r.violation_count, 1);
        assert_eq!(r.witnesses[0].indices, vec![1, 0]);
        assert!(r.to_string().starts_with("toy: fail, 1 violation(s) in 4 pairs"));
    }
}
