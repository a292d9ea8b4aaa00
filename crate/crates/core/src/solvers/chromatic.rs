//! Exact chromatic number for graphs of at most 64 vertices.
//!
//! Decision core: a graph is k-colorable iff some maximal independent set
//! containing its first uncovered vertex leaves a (k-1)-colorable rest, so
//! the search branches over maximal independent sets rather than per-vertex
//! color choices. A clique gives the lower bound, greedy saturation order
//! the upper bound.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{max_clique_size, Budget, SolveResult, Ticker};

pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<SolveResult<Coloring>> {
    if g.order() == 0 {
        return Err(Error::InvalidParameter("chromatic number of an empty graph".into()));
    }
    let adj = g
        .adjacency_words()
        .ok_or_else(|| Error::InvalidParameter(format!(
            "chromatic solver is capped at 64 vertices, graph has {}",
            g.order()
        )))?;
    let order = adj.len();
    let mut ticker = Ticker::new(budget);

    let greedy = dsatur_greedy(&adj);
    let ub = greedy.iter().max().unwrap() + 1;
    let lb = max_clique_size(&adj, &mut ticker)?.max(1);
    debug_assert!(lb <= ub);

    let full: u64 = if order == 64 { !0 } else { (1u64 << order) - 1 };
    let comp: Vec<u64> = (0..order).map(|v| !adj[v] & full & !(1u64 << v)).collect();
    let alpha = max_clique_size(&comp, &mut ticker)?.max(1);

    let mut assignment = greedy;
    let mut value = ub;
    for k in lb..ub {
        let mut search = Cover { comp: &comp, alpha, classes: Vec::new(), ticker: &mut ticker };
        if search.cover(full, k)? {
            let classes = search.classes.clone();
            debug_assert_eq!(classes.len(), k);
            for (c, &members) in classes.iter().enumerate() {
                let mut m = members;
                while m != 0 {
                    assignment[m.trailing_zeros() as usize] = c;
                    m &= m - 1;
                }
            }
            value = k;
            break;
        }
    }

    let certificate = Coloring::from_class_of(assignment)?;
    debug_assert_eq!(certificate.k(), value);
    Ok(SolveResult {
        value,
        certificate,
        nodes_explored: ticker.nodes(),
        proof_of_optimality: true,
    })
}

struct Cover<'a> {
    comp: &'a [u64],
    alpha: usize,
    classes: Vec<u64>,
    ticker: &'a mut Ticker,
}

impl Cover<'_> {
    fn cover(&mut self, rem: u64, k_left: usize) -> Result<bool> {
        self.ticker.tick()?;
        if rem == 0 {
            return Ok(true);
        }
        if k_left == 0 || rem.count_ones() as usize > k_left * self.alpha {
            return Ok(false);
        }
        let v = rem.trailing_zeros() as usize;
        self.mis(1u64 << v, rem & self.comp[v], 0, rem, k_left)
    }

    /// Enumerates maximal independent sets of the graph induced on `rem`
    /// that extend `r`, recursing into `cover` at each one. `p` holds
    /// candidates, `x` already-processed extensions (both within `rem`).
    fn mis(&mut self, r: u64, mut p: u64, mut x: u64, rem: u64, k_left: usize) -> Result<bool> {
        self.ticker.tick()?;
        if p == 0 && x == 0 {
            self.classes.push(r);
            if self.cover(rem & !r, k_left - 1)? {
                return Ok(true);
            }
            self.classes.pop();
            return Ok(false);
        }
        let mut pivot = usize::MAX;
        let mut pivot_left = u32::MAX;
        let mut scan = p | x;
        while scan != 0 {
            let u = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let left = (p & !self.comp[u]).count_ones();
            if left < pivot_left {
                pivot = u;
                pivot_left = left;
            }
        }
        let mut candidates = p & !self.comp[pivot];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            let bit = 1u64 << v;
            candidates &= candidates - 1;
            if self.mis(r | bit, p & self.comp[v], x & self.comp[v], rem, k_left)? {
                return Ok(true);
            }
            p &= !bit;
            x |= bit;
        }
        Ok(false)
    }
}

/// Greedy coloring in saturation order: most distinctly-colored neighbors
/// first, ties by degree then index.
fn dsatur_greedy(adj: &[u64]) -> Vec<usize> {
    let order = adj.len();
    let mut colors = vec![usize::MAX; order];
    let mut neighbor_colors = vec![0u64; order];
    for _ in 0..order {
        let mut pick = usize::MAX;
        let mut pick_key = (0u32, 0u32);
        for v in 0..order {
            if colors[v] != usize::MAX {
                continue;
            }
            let key = (neighbor_colors[v].count_ones(), adj[v].count_ones());
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let color = (!neighbor_colors[pick]).trailing_zeros() as usize;
        colors[pick] = color;
        let mut m = adj[pick];
        while m != 0 {
            neighbor_colors[m.trailing_zeros() as usize] |= 1u64 << color;
            m &= m - 1;
        }
    }
    colors
}
