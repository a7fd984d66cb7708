//! Resistance-based content quantities and their exhaustive evaluation.
//!
//! * Dirichlet content `Ψ(G, S) = min_A R(S, A)⁻¹ / μ(A)` over nonempty `A`
//!   disjoint from `S`; the Hardy quantity is `H = 1 / Ψ`.
//! * Neumann content `Ψ₂(G) = min_{A,B} (μ(A)⁻¹ + μ(B)⁻¹) / R(A, B)` over
//!   disjoint nonempty pairs; the two-sided Hardy quantity is `H₂ = 1 / Ψ₂`.
//! * Isoperimetric constant `Φ(G)`: cut conductance over the smaller side's
//!   mass, minimized over bipartitions.
//!
//! Exact evaluations enumerate every candidate and break ties by the
//! smallest canonical key of `A`, then of `B`. The search is split across
//! rayon workers and reduced with that same total order, so the result does
//! not depend on scheduling.

mod dirichlet;
mod level_set;
mod neumann;

use std::cmp::Ordering;

use rayon::prelude::*;

pub use dirichlet::{dirichlet_content_exact, hardy_path, MAX_DIRICHLET_FREE};
pub use level_set::{level_set_quotient, LevelSetQuotient};
pub use neumann::{isoperimetric_exact, neumann_content_exact, neumann_content_sweep, MAX_ISOPERIMETRIC, MAX_NEUMANN};

use crate::graph::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContentMethod {
    ExactEnumeration,
    PathTailSet,
    SweepHeuristic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContentResult {
    /// `Ψ`, `Ψ₂` or `Φ` depending on the producer.
    pub value: f64,
    pub witness_a: VertexSet,
    pub witness_b: Option<VertexSet>,
    pub method: ContentMethod,
}

impl ContentResult {
    /// `1 / value`: the Hardy quantity `H` or two-sided `H₂`.
    pub fn hardy(&self) -> f64 {
        self.value.recip()
    }
}

/// A candidate in a minimization, ordered by `(value, a, b)`.
#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    pub value: f64,
    pub a: VertexSet,
    pub b: Option<VertexSet>,
}

impl Candidate {
    fn order(&self, other: &Self) -> Ordering {
        self.value
            .total_cmp(&other.value)
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }

    pub fn into_result(self, method: ContentMethod) -> ContentResult {
        ContentResult {
            value: self.value,
            witness_a: self.a,
            witness_b: self.b,
            method,
        }
    }
}

/// Smallest candidate produced by `eval` over `range`. If any evaluation
/// fails, the error from the lowest index is returned.
pub(crate) fn par_min<F>(range: std::ops::Range<u64>, eval: F) -> crate::Result<Option<Candidate>>
where
    F: Fn(u64) -> crate::Result<Option<Candidate>> + Sync + Send,
{
    type Partial = Result<Option<Candidate>, (u64, crate::Error)>;
    range
        .into_par_iter()
        .map(|i| eval(i).map_err(|e| (i, e)))
        .reduce(
            || Ok(None),
            |x: Partial, y: Partial| match (x, y) {
                (Err(a), Err(b)) => Err(if a.0 <= b.0 { a } else { b }),
                (Err(a), _) | (_, Err(a)) => Err(a),
                (Ok(x), Ok(y)) => Ok(match (x, y) {
                    (Some(x), Some(y)) => Some(if y.order(&x) == Ordering::Less { y } else { x }),
                    (x, y) => x.or(y),
                }),
            },
        )
        .map_err(|(_, e)| e)
}

/// Replaces `best` with `candidate` if the candidate is smaller.
pub(crate) fn keep_min(best: &mut Option<Candidate>, candidate: Candidate) {
    if best.as_ref().is_none_or(|b| candidate.order(b) == Ordering::Less) {
        *best = Some(candidate);
    }
}

/// Sequential minimum with the same ordering as [`par_min`].
pub(crate) fn seq_min(candidates: impl IntoIterator<Item = Candidate>) -> Option<Candidate> {
    candidates
        .into_iter()
        .min_by(|x, y| x.order(y))
}
