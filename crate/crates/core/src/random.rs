//! Random instances for property suites: isolate-free graphs and random
//! proper colorings. Callers own the RNG, so fixed seeds give fixed
//! instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edge-probability random graph, patched to have no isolated vertex:
/// any vertex left bare gets one edge to a random other vertex.
pub fn random_isolate_free_graph(rng: &mut impl Rng, order: usize, edge_prob: f64) -> Result<Graph> {
    if order < 2 {
        return Err(Error::InvalidParameter(
            "an isolate-free graph needs at least two vertices".into(),
        ));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {edge_prob} outside [0, 1]"
        )));
    }
    let mut edges = Vec::new();
    let mut degree = vec![0usize; order];
    for u in 0..order {
        for v in u + 1..order {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
                degree[u] += 1;
                degree[v] += 1;
            }
        }
    }
    for v in 0..order {
        if degree[v] == 0 {
            let mut u = rng.random_range(0..order - 1);
            if u >= v {
                u += 1;
            }
            edges.push((v.min(u), v.max(u)));
            degree[v] += 1;
            degree[u] += 1;
        }
    }
    Graph::from_edges(order, &edges)
}

/// A uniform-ish random proper coloring with at most `max_classes`
/// classes: vertices are visited in shuffled order and each picks a
/// uniformly random feasible class (an open one, or a fresh one while
/// room remains). Runs of bad luck restart, so `max_classes` must be at
/// least the chromatic number for this to return.
pub fn random_proper_coloring(
    rng: &mut impl Rng,
    g: &Graph,
    max_classes: usize,
) -> Result<Coloring> {
    if g.order() == 0 || max_classes == 0 {
        return Err(Error::InvalidParameter("nothing to color".into()));
    }
    let order = g.order();
    const ATTEMPTS: usize = 10_000;
    for _ in 0..ATTEMPTS {
        let mut vertices: Vec<usize> = (0..order).collect();
        vertices.shuffle(rng);
        let mut class_of = vec![usize::MAX; order];
        let mut used = 0usize;
        let mut stuck = false;
        for &v in &vertices {
            let mut feasible: Vec<usize> = (0..used)
                .filter(|&c| g.neighbors(v).all(|u| class_of[u] != c))
                .collect();
            if used < max_classes {
                feasible.push(used);
            }
            match feasible.as_slice() {
                [] => {
                    stuck = true;
                    break;
                }
                choices => {
                    let c = choices[rng.random_range(0..choices.len())];
                    if c == used {
                        used += 1;
                    }
                    class_of[v] = c;
                }
            }
        }
        if !stuck {
            return Coloring::from_class_of(class_of);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no proper coloring with {max_classes} classes found in {ATTEMPTS} randomized attempts"
    )))
}
