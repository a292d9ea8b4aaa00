//! Kneser graphs, complete graphs, and the star/triangle classification of
//! independent sets.
//!
//! Vertices of `KG(n, k)` are the k-element subsets of `{1..n}` in
//! lexicographic order; two vertices are adjacent exactly when the subsets
//! are disjoint. For `k = 2` every vertex is a [`PairVertex`] and every
//! independent set is either starlike (all pairs share one symbol) or
//! triangular (the three pairings of three symbols); [`classify_class`]
//! decides which.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Hard cap on generated graph order; everything here is desk scale.
const MAX_ORDER: usize = 10_000;

// ============================================================
// Symbols and pair vertices
// ============================================================

/// A 1-based element of the ground set `{1..n}`.
///
/// The upper bound `n` is contextual, so only `value >= 1` is enforced here;
/// operations that know `n` check the range themselves.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol(u32);

impl Symbol {
    pub fn new(value: u32) -> Result<Symbol> {
        if value == 0 {
            return Err(Error::InvalidParameter("symbols are 1-based".into()));
        }
        Ok(Symbol(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn check_range(self, n: u32) -> Result<()> {
        if self.0 > n {
            return Err(Error::SymbolOutOfRange { value: self.0, n });
        }
        Ok(())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A vertex of `KG(n, 2)`: an unordered pair of distinct symbols, stored
/// with `lo < hi`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PairVertex {
    lo: Symbol,
    hi: Symbol,
}

impl PairVertex {
    /// Builds the pair `{a, b}`, canonicalizing order. `a == b` is rejected.
    pub fn new(a: u32, b: u32) -> Result<PairVertex> {
        let a = Symbol::new(a)?;
        let b = Symbol::new(b)?;
        if a == b {
            return Err(Error::InvalidParameter(format!(
                "pair vertex needs two distinct symbols, got {{{a},{b}}}"
            )));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Ok(PairVertex { lo, hi })
    }

    pub fn lo(self) -> Symbol {
        self.lo
    }

    pub fn hi(self) -> Symbol {
        self.hi
    }

    pub fn contains(self, s: Symbol) -> bool {
        self.lo == s || self.hi == s
    }

    /// Disjoint pairs are exactly the adjacent vertices of `KG(n, 2)`.
    pub fn is_disjoint(self, other: PairVertex) -> bool {
        !self.contains(other.lo) && !self.contains(other.hi)
    }

    /// The symbol shared with `other`, if any. Two distinct pairs share at
    /// most one symbol.
    pub fn common_symbol(self, other: PairVertex) -> Option<Symbol> {
        if other.contains(self.lo) {
            Some(self.lo)
        } else if other.contains(self.hi) {
            Some(self.hi)
        } else {
            None
        }
    }

    /// Canonical text form `"lo,hi"`, used in certificates and DIMACS
    /// label comments.
    pub fn label(self) -> String {
        format!("{},{}", self.lo, self.hi)
    }

    /// Parses the canonical `"a,b"` form (order-insensitive).
    pub fn parse_label(s: &str) -> Result<PairVertex> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("pair label `{s}` is not of the form a,b")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("pair label `{s}` has a non-numeric symbol")))
        };
        PairVertex::new(parse(a)?, parse(b)?)
    }
}

impl fmt::Display for PairVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.lo, self.hi)
    }
}

// ============================================================
// Graph
// ============================================================

/// Subset labels attached to a generated Kneser graph: `sets[v]` is the
/// k-subset for vertex `v`, each sorted ascending, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labels {
    pub n: u32,
    pub k: u32,
    pub sets: Vec<Vec<Symbol>>,
}

/// An immutable simple graph: symmetric, irreflexive adjacency over
/// vertices `0..order`, with optional subset labels.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    size: usize,
    labels: Option<Labels>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; duplicate edges collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if order > MAX_ORDER {
            return Err(Error::InvalidParameter(format!(
                "order {order} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        let mut adj = vec![FixedBitSet::with_capacity(order); order];
        for &(u, v) in edges {
            if u >= order {
                return Err(Error::VertexOutOfRange { index: u, order });
            }
            if v >= order {
                return Err(Error::VertexOutOfRange { index: v, order });
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let size = adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2;
        Ok(Graph { adj, size, labels: None })
    }

    /// Attaches subset labels; `labels.sets.len()` must equal the order.
    pub fn with_labels(mut self, labels: Labels) -> Result<Graph> {
        if labels.sets.len() != self.order() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for a graph of order {}",
                labels.sets.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_row(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.labels.as_ref()
    }

    /// Pair labels when the graph is labeled with 2-subsets.
    pub fn pair_labels(&self) -> Option<Vec<PairVertex>> {
        let labels = self.labels.as_ref()?;
        if labels.k != 2 {
            return None;
        }
        let mut pairs = Vec::with_capacity(labels.sets.len());
        for set in &labels.sets {
            debug_assert_eq!(set.len(), 2);
            pairs.push(PairVertex::new(set[0].get(), set[1].get()).ok()?);
        }
        Some(pairs)
    }

    pub fn first_isolated_vertex(&self) -> Option<usize> {
        (0..self.order()).find(|&v| self.degree(v) == 0)
    }

    /// When the graph is exactly `KG(n, 2)` (full lexicographic pair labels
    /// and adjacency equal to pair disjointness), returns `n`.
    pub fn kneser2_order(&self) -> Option<u32> {
        let labels = self.labels.as_ref()?;
        if labels.k != 2 {
            return None;
        }
        let n = labels.n;
        if n < 2 || self.order() != (n as usize) * (n as usize - 1) / 2 {
            return None;
        }
        let pairs = self.pair_labels()?;
        let mut expected = Vec::with_capacity(self.order());
        for a in 1..=n {
            for b in (a + 1)..=n {
                expected.push(PairVertex::new(a, b).ok()?);
            }
        }
        if pairs != expected {
            return None;
        }
        for u in 0..self.order() {
            for v in (u + 1)..self.order() {
                if self.are_adjacent(u, v) != pairs[u].is_disjoint(pairs[v]) {
                    return None;
                }
            }
        }
        Some(n)
    }

    /// Single-word adjacency rows for solver inner loops; `None` above 64
    /// vertices.
    pub fn adjacency_words(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        let mut rows = vec![0u64; self.order()];
        for u in 0..self.order() {
            for v in self.adj[u].ones() {
                rows[u] |= 1 << v;
            }
        }
        Some(rows)
    }
}

// ============================================================
// Generators
// ============================================================

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All k-subsets of `{1..n}` in lexicographic order.
fn k_subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        // advance to the lexicographic successor
        let mut i = k as usize;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i as u32) {
                cur[i] += 1;
                for j in i + 1..k as usize {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The Kneser graph `KG(n, k)`: vertices are the k-subsets of `{1..n}` in
/// lexicographic order, edges join disjoint subsets. Requires
/// `1 <= k <= n/2` (so the graph has at least one edge per vertex pairing
/// rule; `k > n/2` would be edgeless and is rejected).
pub fn kneser_graph(n: u32, k: u32) -> Result<Graph> {
    if k < 1 || 2 * k > n {
        return Err(Error::InvalidParameter(format!(
            "kneser graph needs 1 <= k <= n/2, got n={n}, k={k}"
        )));
    }
    if n > 64 {
        return Err(Error::InvalidParameter(format!(
            "kneser ground set capped at 64 symbols, got n={n}"
        )));
    }
    let order = binomial(n as u64, k as u64);
    if order as usize > MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "KG({n},{k}) has {order} vertices, above the supported maximum {MAX_ORDER}"
        )));
    }
    let sets = k_subsets(n, k);
    debug_assert_eq!(sets.len() as u64, order);

    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &x| m | 1 << (x - 1)))
        .collect();
    let order = sets.len();
    let mut adj = vec![FixedBitSet::with_capacity(order); order];
    let mut size = 0;
    for u in 0..order {
        for v in u + 1..order {
            if masks[u] & masks[v] == 0 {
                adj[u].insert(v);
                adj[v].insert(u);
                size += 1;
            }
        }
    }
    let labels = Labels {
        n,
        k,
        sets: sets
            .into_iter()
            .map(|s| s.into_iter().map(Symbol).collect())
            .collect(),
    };
    Ok(Graph { adj, size, labels: Some(labels) })
}

/// The complete graph `K_n` on vertices `0..n`, unlabeled.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "order {n} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                adj[u].insert(v);
            }
        }
    }
    Ok(Graph { adj, size: n * (n - 1) / 2, labels: None })
}

// ============================================================
// Independence and class shapes
// ============================================================

/// True when no two vertices of `set` are adjacent. Duplicates are
/// harmless; indices are range-checked.
pub fn is_independent(g: &Graph, set: &[usize]) -> Result<bool> {
    for &v in set {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange { index: v, order: g.order() });
        }
    }
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.are_adjacent(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Shape of a set of pair vertices viewed as a color class of `KG(n, 2)`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ClassShape {
    /// All pairs share the center symbol. A singleton `{a,b}` reports the
    /// smaller symbol as its center.
    Starlike(Symbol),
    /// Exactly the three pairings of three symbols.
    Triangular,
    /// Contains two disjoint pairs, i.e. not an independent set.
    NotIndependent,
    /// Anything else; unreachable for non-empty independent sets, and the
    /// value reported for an empty set.
    Unstructured,
}

/// Classifies a color class of `KG(n, 2)`. Defined for `n >= 5`, where the
/// starlike/triangular reading of an independent set is unambiguous; smaller
/// ground sets are rejected.
pub fn classify_class(n: u32, class: &[PairVertex]) -> Result<ClassShape> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "class shapes are defined for n >= 5, got n={n}"
        )));
    }
    for p in class {
        p.lo.check_range(n)?;
        p.hi.check_range(n)?;
    }
    if class.is_empty() {
        return Ok(ClassShape::Unstructured);
    }
    for (i, &p) in class.iter().enumerate() {
        for &q in &class[i + 1..] {
            if p.is_disjoint(q) {
                return Ok(ClassShape::NotIndependent);
            }
        }
    }
    // common symbol across all pairs, if any
    let mut common = 1u64 << (class[0].lo.get() - 1) | 1u64 << (class[0].hi.get() - 1);
    let mut support = 0u64;
    for p in class {
        let mask = 1u64 << (p.lo.get() - 1) | 1u64 << (p.hi.get() - 1);
        common &= mask;
        support |= mask;
    }
    if common != 0 {
        let center = common.trailing_zeros() + 1;
        return Ok(ClassShape::Starlike(Symbol(center)));
    }
    let distinct: std::collections::BTreeSet<PairVertex> = class.iter().copied().collect();
    if support.count_ones() == 3 && distinct.len() == 3 {
        return Ok(ClassShape::Triangular);
    }
    Ok(ClassShape::Unstructured)
}
