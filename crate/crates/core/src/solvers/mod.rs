//! Exact solvers: chromatic number, total domination number, total
//! dominator chromatic number, and the specialized star/triangle
//! decomposition search for `KG(n, 2)`.
//!
//! Every search takes an explicit [`Budget`]. Exceeding it surfaces as
//! [`Error::ResourceExhausted`](crate::Error::ResourceExhausted), never as
//! a wrong answer; with a fixed budget every solver is deterministic.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

mod chromatic;
mod domination;
mod kneser2;
mod tdc_search;

pub use chromatic::chromatic_number;
pub use domination::{is_total_dominating_set, total_domination_number};
pub use kneser2::{for_each_decomposition, kneser2_decision, DecompositionOptions};
pub use tdc_search::{enumerate_proper_colorings, exists_tdc_with_k_classes, tdc_number};

/// Search limits. The node limit is deterministic; the wall-clock limit is
/// a backstop checked every few thousand nodes.
#[derive(Copy, Clone, Debug, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_duration: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn max_nodes(nodes: u64) -> Budget {
        Budget { max_nodes: Some(nodes), max_duration: None }
    }

    pub fn max_seconds(seconds: u64) -> Budget {
        Budget { max_nodes: None, max_duration: Some(Duration::from_secs(seconds)) }
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Budget {
        self.max_nodes = Some(nodes);
        self
    }

    pub fn with_max_duration(mut self, d: Duration) -> Budget {
        self.max_duration = Some(d);
        self
    }
}

/// An exact answer with its certificate.
#[derive(Clone, Debug)]
pub struct SolveResult<C> {
    pub value: usize,
    pub certificate: C,
    pub nodes_explored: u64,
    /// True when every smaller value was refuted by an exhausted decision
    /// search (always the case for a returned result; budget overruns error
    /// out instead).
    pub proof_of_optimality: bool,
}

/// Outcome of a single decision search that ran to exhaustion: `Some`
/// certificate, or a proof-of-exhaustion `None`.
#[derive(Clone, Debug)]
pub struct DecisionOutcome<C> {
    pub certificate: Option<C>,
    pub nodes_explored: u64,
}

/// Node counter shared by all searches.
pub(crate) struct Ticker {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Ticker {
    pub(crate) fn new(budget: &Budget) -> Ticker {
        Ticker {
            nodes: 0,
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.max_duration.map(|d| Instant::now() + d),
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::ResourceExhausted { nodes: self.nodes });
        }
        if self.nodes % 8192 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(Error::ResourceExhausted { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}

/// Bron-Kerbosch maximum clique size over single-word adjacency rows.
/// Exact; used both for clique lower bounds and (on the complement) for
/// independence numbers.
pub(crate) fn max_clique_size(adj: &[u64], ticker: &mut Ticker) -> Result<usize> {
    let full: u64 = if adj.len() == 64 { !0 } else { (1u64 << adj.len()) - 1 };
    let mut best = 0;
    bk_max(adj, 0, full, 0, &mut best, ticker)?;
    Ok(best)
}

fn bk_max(
    adj: &[u64],
    r_count: usize,
    mut p: u64,
    mut x: u64,
    best: &mut usize,
    ticker: &mut Ticker,
) -> Result<()> {
    ticker.tick()?;
    if p == 0 && x == 0 {
        *best = (*best).max(r_count);
        return Ok(());
    }
    if r_count + p.count_ones() as usize <= *best {
        return Ok(());
    }
    // pivot: the vertex of P | X leaving the fewest candidates uncovered
    let mut pivot = usize::MAX;
    let mut pivot_left = u32::MAX;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let left = (p & !adj[u]).count_ones();
        if left < pivot_left {
            pivot = u;
            pivot_left = left;
        }
    }
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        candidates &= candidates - 1;
        bk_max(adj, r_count + 1, p & adj[v], x & adj[v], best, ticker)?;
        p &= !bit;
        x |= bit;
    }
    Ok(())
}
