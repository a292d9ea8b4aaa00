//! Exact total domination number for graphs of at most 64 vertices.
//!
//! A set S totally dominates when every vertex of the graph, including the
//! members of S, has a neighbor in S. Branch and bound: pick an uncovered
//! vertex, branch over which of its neighbors joins S, and exclude each
//! tried neighbor from the sibling branches so no set is visited twice.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{Budget, SolveResult, Ticker};

/// True when every vertex of `g` has a neighbor in `set`.
pub fn is_total_dominating_set(g: &Graph, set: &[usize]) -> Result<bool> {
    let order = g.order();
    let mut in_set = vec![false; order];
    for &v in set {
        if v >= order {
            return Err(Error::VertexOutOfRange { index: v, order });
        }
        in_set[v] = true;
    }
    for v in 0..order {
        if !g.neighbors(v).any(|u| in_set[u]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest totally dominating set, as a sorted vertex list.
pub fn total_domination_number(g: &Graph, budget: &Budget) -> Result<SolveResult<Vec<usize>>> {
    if g.order() == 0 {
        return Err(Error::InvalidParameter("total domination of an empty graph".into()));
    }
    if let Some(v) = g.first_isolated_vertex() {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    let adj = g
        .adjacency_words()
        .ok_or_else(|| Error::InvalidParameter(format!(
            "domination solver is capped at 64 vertices, graph has {}",
            g.order()
        )))?;
    let order = adj.len();
    let full: u64 = if order == 64 { !0 } else { (1u64 << order) - 1 };
    let max_degree = adj.iter().map(|m| m.count_ones()).max().unwrap() as usize;
    let mut ticker = Ticker::new(budget);

    let mut best = greedy_cover(&adj, full);
    let mut search = Search { adj: &adj, full, max_degree, ticker: &mut ticker };
    let mut current = Vec::new();
    search.run(0, 0, &mut current, &mut best)?;

    let mut set: Vec<usize> = Vec::with_capacity(best.len());
    let mut m = best.iter().fold(0u64, |acc, &v| acc | (1u64 << v));
    while m != 0 {
        set.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    debug_assert!(is_total_dominating_set(g, &set).unwrap());
    Ok(SolveResult {
        value: set.len(),
        certificate: set,
        nodes_explored: ticker.nodes(),
        proof_of_optimality: true,
    })
}

fn greedy_cover(adj: &[u64], full: u64) -> Vec<usize> {
    let mut covered = 0u64;
    let mut set = Vec::new();
    while covered != full {
        let mut pick = 0;
        let mut gain = 0;
        for (v, &row) in adj.iter().enumerate() {
            let g = (row & !covered).count_ones();
            if g > gain {
                pick = v;
                gain = g;
            }
        }
        // every uncovered vertex has a neighbor, so gain is always positive
        debug_assert!(gain > 0);
        set.push(pick);
        covered |= adj[pick];
    }
    set
}

struct Search<'a> {
    adj: &'a [u64],
    full: u64,
    max_degree: usize,
    ticker: &'a mut Ticker,
}

impl Search<'_> {
    fn run(
        &mut self,
        covered: u64,
        mut excluded: u64,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) -> Result<()> {
        self.ticker.tick()?;
        if covered == self.full {
            if current.len() < best.len() {
                *best = current.clone();
            }
            return Ok(());
        }
        let uncovered = (self.full & !covered).count_ones() as usize;
        let lower = current.len() + uncovered.div_ceil(self.max_degree);
        if lower >= best.len() {
            return Ok(());
        }
        // any total dominating set must pick a neighbor of the tightest
        // uncovered vertex; branch over which one
        let mut branch_cands = 0u64;
        let mut branch_count = u32::MAX;
        let mut rest = self.full & !covered;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let cands = self.adj[v] & !excluded;
            let count = cands.count_ones();
            if count < branch_count {
                branch_cands = cands;
                branch_count = count;
                if count == 0 {
                    return Ok(());
                }
            }
        }
        let mut cands = branch_cands;
        while cands != 0 {
            let u = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            current.push(u);
            self.run(covered | self.adj[u], excluded, current, best)?;
            current.pop();
            excluded |= 1u64 << u;
        }
        Ok(())
    }
}
