//! Decomposition search for KG(n,2) colorings, phrased over K_n.
//!
//! A proper coloring of KG(n,2) is the same thing as a partition of the
//! C(n,2) edges of K_n into classes that are each a star or a triangle,
//! and the dominator condition becomes: for every edge ab some class
//! touches neither a nor b. Searching edge classes directly keeps the
//! state tiny (a support mask and a running common-symbol mask per class)
//! and scales past the generic vertex search.
//!
//! Class shape bookkeeping rests on one invariant: while the common mask
//! is non-zero the class is a star (every edge shares a common symbol),
//! and the moment it hits zero the class must already be the complete
//! triangle on exactly three symbols, after which it accepts no more
//! edges. Two edges on three symbols always share a symbol, so the zero
//! transition can only happen on the third edge.
//!
//! Symmetry breaking: relabeling symbols maps any partition to one whose
//! class through the edge {1,2} is a star {12,13,..,1(s+1)} or the
//! triangle {12,13,23}. The search fixes that first class to each
//! canonical shape in turn and never extends it, so it visits at least
//! one representative of every symbol-permutation orbit (possibly more
//! than one per orbit, which exhaustive no-instance proofs and orbit
//! invariant checks do not mind).

use crate::coloring::Coloring;
use crate::constructions::pair_index;
use crate::error::{Error, Result};
use crate::graph::PairVertex;

use super::{Budget, DecisionOutcome, Ticker};

const MAX_SYMBOLS: usize = 16;
const MAX_CLASSES: usize = 64;

#[derive(Copy, Clone, Debug)]
pub struct DecompositionOptions {
    /// Forbid triangular classes entirely.
    pub stars_only: bool,
    /// Keep only partitions where every edge has an avoiding class.
    pub require_tdc: bool,
}

impl Default for DecompositionOptions {
    fn default() -> Self {
        DecompositionOptions { stars_only: false, require_tdc: true }
    }
}

/// Decides whether KG(n,2) has a total dominator coloring with exactly
/// `k` classes, searching K_n edge partitions exhaustively. `None` is a
/// proof of non-existence; budget overruns error instead.
///
/// The certificate indexes vertices of KG(n,2) in label order, so it
/// verifies directly against `kneser_graph(n, 2)`.
pub fn kneser2_decision(n: u32, k: usize, budget: &Budget) -> Result<DecisionOutcome<Coloring>> {
    let mut found: Option<Coloring> = None;
    let nodes = run_search(n, k, budget, DecompositionOptions::default(), &mut |c| {
        found = Some(c.clone());
        Ok(true)
    })?;
    Ok(DecisionOutcome { certificate: found, nodes_explored: nodes })
}

/// Visits every star/triangle partition of E(K_n) into exactly `k`
/// classes that survives `options`, modulo the first-class symmetry
/// breaking described in the module docs. Returns nodes explored.
pub fn for_each_decomposition(
    n: u32,
    k: usize,
    budget: &Budget,
    options: DecompositionOptions,
    visit: &mut dyn FnMut(&Coloring) -> Result<()>,
) -> Result<u64> {
    run_search(n, k, budget, options, &mut |c| {
        visit(c)?;
        Ok(false)
    })
}

fn run_search(
    n: u32,
    k: usize,
    budget: &Budget,
    options: DecompositionOptions,
    visit: &mut dyn FnMut(&Coloring) -> Result<bool>,
) -> Result<u64> {
    if !(5..=MAX_SYMBOLS as u32).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "decomposition search handles 5 <= n <= {MAX_SYMBOLS}, got {n}"
        )));
    }
    if k > MAX_CLASSES {
        return Err(Error::InvalidParameter(format!(
            "decomposition search is capped at {MAX_CLASSES} classes, asked for {k}"
        )));
    }
    let ticker = Ticker::new(budget);
    if k == 0 {
        return Ok(ticker.nodes());
    }

    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            debug_assert_eq!(pairs.len(), pair_index(n, a, b));
            pairs.push(PairVertex::new(a, b).unwrap());
        }
    }
    let m = pairs.len();
    let mut touch = vec![0u128; n as usize + 1];
    let mut sym_bits = vec![0u32; m];
    for (e, p) in pairs.iter().enumerate() {
        touch[p.lo().get() as usize] |= 1 << e;
        touch[p.hi().get() as usize] |= 1 << e;
        sym_bits[e] = (1 << p.lo().get()) | (1 << p.hi().get());
    }

    let mut search = Decomp {
        n: n as usize,
        k,
        m,
        sym_bits,
        touch,
        classes: vec![ClassState::default(); k],
        first_frozen: false,
        used: 0,
        assigned: 0,
        unassigned: m,
        class_of: vec![usize::MAX; m],
        alive: vec![full_mask(k); m],
        options,
        ticker,
    };
    search.run(visit)?;
    Ok(search.ticker.nodes())
}

fn full_mask(k: usize) -> u64 {
    if k >= 64 { !0 } else { (1u64 << k) - 1 }
}

#[derive(Copy, Clone, Default)]
struct ClassState {
    /// symbols touched by any edge of the class
    support: u32,
    /// symbols shared by every edge; zero exactly for a complete triangle
    common: u32,
    size: u32,
}

struct Undo {
    prev: ClassState,
    /// edges whose witness bit for the assigned class was cleared
    changed: u128,
}

struct Decomp {
    n: usize,
    k: usize,
    m: usize,
    sym_bits: Vec<u32>,
    touch: Vec<u128>,
    classes: Vec<ClassState>,
    /// the canonical first class takes no further edges
    first_frozen: bool,
    used: usize,
    assigned: u128,
    unassigned: usize,
    class_of: Vec<usize>,
    /// per edge: classes that may still avoid both endpoints
    alive: Vec<u64>,
    options: DecompositionOptions,
    ticker: Ticker,
}

impl Decomp {
    fn run(&mut self, visit: &mut dyn FnMut(&Coloring) -> Result<bool>) -> Result<()> {
        // canonical candidates for the class of edge {1,2}: stars at 1
        // of every size, then the triangle on {1,2,3}
        let star_edges: Vec<usize> = (2..=self.n as u32).map(|b| pair_index(self.n as u32, 1, b)).collect();
        for s in 1..self.n {
            if self.try_first_class(&star_edges[..s], visit)? {
                return Ok(());
            }
        }
        if !self.options.stars_only {
            let triangle = [
                pair_index(self.n as u32, 1, 2),
                pair_index(self.n as u32, 1, 3),
                pair_index(self.n as u32, 2, 3),
            ];
            if self.try_first_class(&triangle, visit)? {
                return Ok(());
            }
        }
        Ok(())
    }

    fn try_first_class(
        &mut self,
        edges: &[usize],
        visit: &mut dyn FnMut(&Coloring) -> Result<bool>,
    ) -> Result<bool> {
        let mut undos = Vec::with_capacity(edges.len());
        let mut viable = true;
        for &e in edges {
            match self.try_assign(e, 0) {
                Some(undo) => undos.push((e, undo)),
                None => {
                    viable = false;
                    break;
                }
            }
        }
        let mut stop = false;
        if viable {
            self.first_frozen = true;
            stop = self.search(visit)?;
            self.first_frozen = false;
        }
        for (e, undo) in undos.into_iter().rev() {
            self.unassign(e, 0, undo);
        }
        Ok(stop)
    }

    fn search(&mut self, visit: &mut dyn FnMut(&Coloring) -> Result<bool>) -> Result<bool> {
        self.ticker.tick()?;
        if self.unassigned == 0 {
            debug_assert_eq!(self.used, self.k);
            let coloring = Coloring::from_class_of(self.class_of.clone())?;
            return visit(&coloring);
        }
        let opens_needed = self.k - self.used;
        if self.unassigned < opens_needed {
            return Ok(false);
        }
        // star capacity bounds every class: n-1 edges
        let mut capacity = opens_needed * (self.n - 1);
        for c in 0..self.used {
            let st = &self.classes[c];
            if !(c == 0 && self.first_frozen) && st.common != 0 {
                capacity += self.n - 1 - st.size as usize;
            }
        }
        if capacity < self.unassigned {
            return Ok(false);
        }

        let e = (!self.assigned).trailing_zeros() as usize;
        debug_assert!(e < self.m);
        let must_open = self.unassigned == opens_needed;
        let bottom = if must_open { self.used } else { 0 };
        let top = if self.used < self.k { self.used + 1 } else { self.k };
        for c in bottom..top {
            if c == 0 && self.first_frozen {
                continue;
            }
            if let Some(undo) = self.try_assign(e, c) {
                let stop = self.search(visit)?;
                self.unassign(e, c, undo);
                if stop {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Adds edge `e` to class `c` when the class stays a star or becomes
    /// the complete triangle, and no edge loses its last witness.
    fn try_assign(&mut self, e: usize, c: usize) -> Option<Undo> {
        let prev = self.classes[c];
        let syms = self.sym_bits[e];
        let next = if prev.size == 0 {
            ClassState { support: syms, common: syms, size: 1 }
        } else {
            if prev.common == 0 {
                return None;
            }
            let common = prev.common & syms;
            let support = prev.support | syms;
            if common == 0 && (self.options.stars_only || support.count_ones() != 3) {
                return None;
            }
            ClassState { support, common, size: prev.size + 1 }
        };

        let mut changed: u128 = 0;
        if self.options.require_tdc {
            let bit = 1u64 << c;
            let mut dead = false;
            let mut new_syms = next.support & !prev.support;
            while new_syms != 0 {
                let s = new_syms.trailing_zeros() as usize;
                new_syms &= new_syms - 1;
                let mut touched = self.touch[s];
                while touched != 0 {
                    let e2 = touched.trailing_zeros() as usize;
                    touched &= touched - 1;
                    if self.alive[e2] & bit != 0 {
                        self.alive[e2] &= !bit;
                        changed |= 1u128 << e2;
                        if self.alive[e2] == 0 {
                            dead = true;
                        }
                    }
                }
            }
            if dead {
                self.restore_alive(c, changed);
                return None;
            }
        }

        if prev.size == 0 {
            debug_assert_eq!(c, self.used);
            self.used += 1;
        }
        self.classes[c] = next;
        self.class_of[e] = c;
        self.assigned |= 1u128 << e;
        self.unassigned -= 1;
        Some(Undo { prev, changed })
    }

    fn unassign(&mut self, e: usize, c: usize, undo: Undo) {
        self.unassigned += 1;
        self.assigned &= !(1u128 << e);
        self.class_of[e] = usize::MAX;
        if undo.prev.size == 0 {
            self.used -= 1;
        }
        self.classes[c] = undo.prev;
        self.restore_alive(c, undo.changed);
    }

    fn restore_alive(&mut self, c: usize, mut changed: u128) {
        let bit = 1u64 << c;
        while changed != 0 {
            let e = changed.trailing_zeros() as usize;
            changed &= changed - 1;
            self.alive[e] |= bit;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_proper, is_total_dominator};
    use crate::graph::kneser_graph;

    #[test]
    fn petersen_decisions_match_known_values() {
        for k in [3, 4, 5] {
            let out = kneser2_decision(5, k, &Budget::unlimited()).unwrap();
            assert!(out.certificate.is_none(), "unexpected {k}-class TDC");
        }
        let out = kneser2_decision(5, 6, &Budget::unlimited()).unwrap();
        let coloring = out.certificate.expect("Petersen has a 6-class TDC");
        let g = kneser_graph(5, 2).unwrap();
        assert!(is_total_dominator(&g, &coloring).unwrap());
    }

    #[test]
    fn no_five_class_tdc_for_n_six() {
        let out = kneser2_decision(6, 5, &Budget::unlimited()).unwrap();
        assert!(out.certificate.is_none());
        assert!(out.nodes_explored > 0);
    }

    #[test]
    fn six_class_tdc_for_n_six_exists() {
        let out = kneser2_decision(6, 6, &Budget::unlimited()).unwrap();
        let coloring = out.certificate.expect("six classes suffice at n=6");
        let g = kneser_graph(6, 2).unwrap();
        assert!(is_proper(&g, &coloring).unwrap());
        assert!(is_total_dominator(&g, &coloring).unwrap());
        assert_eq!(coloring.k(), 6);
    }

    #[test]
    fn counting_bound_rejects_tiny_class_counts_fast() {
        // 3 classes of at most 9 edges cannot cover the 45 edges of K_10
        let out = kneser2_decision(10, 3, &Budget::max_nodes(10_000)).unwrap();
        assert!(out.certificate.is_none());
    }

    #[test]
    fn stars_only_never_yields_a_tdc_witness_at_n_minus_one() {
        // every all-star 5-class partition of K_6 fails total domination
        let opts = DecompositionOptions { stars_only: true, require_tdc: true };
        let mut seen = 0usize;
        let nodes = for_each_decomposition(6, 5, &Budget::unlimited(), opts, &mut |_| {
            seen += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(seen, 0);
        assert!(nodes > 0);
    }

    #[test]
    fn visitor_sees_proper_partitions_without_tdc_filter() {
        let g = kneser_graph(5, 2).unwrap();
        let opts = DecompositionOptions { stars_only: false, require_tdc: false };
        let mut count = 0usize;
        for_each_decomposition(5, 3, &Budget::unlimited(), opts, &mut |c| {
            assert!(is_proper(&g, c).unwrap());
            assert_eq!(c.k(), 3);
            count += 1;
            Ok(())
        })
        .unwrap();
        // at least one representative per orbit; Petersen has proper
        // 3-colorings, none of them total dominator colorings
        assert!(count > 0);
        let decided = kneser2_decision(5, 3, &Budget::unlimited()).unwrap();
        assert!(decided.certificate.is_none());
    }

    #[test]
    fn parameter_validation() {
        assert!(kneser2_decision(4, 3, &Budget::unlimited()).is_err());
        assert!(kneser2_decision(17, 3, &Budget::unlimited()).is_err());
        let out = kneser2_decision(5, 0, &Budget::unlimited()).unwrap();
        assert!(out.certificate.is_none());
        let err = kneser2_decision(6, 5, &Budget::max_nodes(5)).unwrap_err();
        assert!(err.is_resource_exhausted());
    }
}
