//! Max-belief decision over singleton hypotheses.

use gds_core::{Cbba, Proposition};
use serde::Serialize;

/// Scores closer than this count as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionResult {
    pub winner: Proposition,
    /// `Bel_c` of every singleton, in frame order.
    pub scores: Vec<(Proposition, f64)>,
    pub tie: bool,
}

/// Picks the singleton with the largest complex belief.
///
/// Among singletons within [`TIE_TOLERANCE`] of the best score the
/// lexicographically smallest label wins, and `tie` is set.
pub fn decide(m: &Cbba) -> DecisionResult {
    let scores: Vec<(Proposition, f64)> = m
        .frame()
        .singletons()
        .map(|s| {
            let bel = m.bel_c(&s).expect("singleton of the body's own frame");
            (s, bel)
        })
        .collect();
    let best = scores
        .iter()
        .map(|(_, s)| *s)
        .fold(f64::NEG_INFINITY, f64::max);
    let leaders: Vec<&Proposition> = scores
        .iter()
        .filter(|(_, s)| best - s < TIE_TOLERANCE)
        .map(|(p, _)| p)
        .collect();
    let winner = leaders
        .iter()
        .min_by(|a, b| a.label().cmp(&b.label()))
        .map(|p| (*p).clone())
        .expect("a frame has at least one element");
    DecisionResult {
        tie: leaders.len() > 1,
        winner,
        scores,
    }
}

#[derive(Serialize)]
pub(crate) struct DecisionJson {
    winner: String,
    score: f64,
    tie: bool,
    scores: Vec<ScoreJson>,
}

#[derive(Serialize)]
struct ScoreJson {
    hypothesis: String,
    bel_c: f64,
}

impl From<&DecisionResult> for DecisionJson {
    fn from(d: &DecisionResult) -> Self {
        let score = d
            .scores
            .iter()
            .find(|(p, _)| *p == d.winner)
            .map(|(_, s)| *s)
            .unwrap_or_default();
        DecisionJson {
            winner: d.winner.label(),
            score,
            tie: d.tie,
            scores: d
                .scores
                .iter()
                .map(|(p, s)| ScoreJson {
                    hypothesis: p.label(),
                    bel_c: *s,
                })
                .collect(),
        }
    }
}
