//! JSON certificates for colorings of pair-labeled graphs.
//!
//! A certificate stores the coloring by vertex labels, never by index, so
//! it survives any re-indexing of the graph. Emission is canonical: pairs
//! inside a class sort numerically, classes sort by their smallest pair,
//! and the witness map is keyed by label in string order. Parsing a
//! canonically emitted certificate and serializing it again reproduces
//! the input byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coloring::{domination_witness, is_proper, is_total_dominator, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, PairVertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringCertificate {
    /// ambient symbol count of the labels
    pub n: u32,
    /// subset size of the labels; always 2 here
    pub k: u32,
    /// vertex labels grouped by class
    pub classes: Vec<Vec<String>>,
    /// whether the coloring is a total dominator coloring
    pub tdc: bool,
    /// witness class index per vertex label, present when `tdc`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, usize>>,
}

impl ColoringCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<ColoringCertificate> {
        serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Emits the canonical certificate for a proper coloring of a pair-labeled
/// graph, deciding the dominator property along the way. Improper
/// colorings are refused: a certificate documents a verified object.
pub fn certificate_from_coloring(g: &Graph, c: &Coloring) -> Result<ColoringCertificate> {
    let labels = g.labels().ok_or(Error::MissingPairLabels)?;
    if !is_proper(g, c)? {
        return Err(Error::Certificate("refusing to certify an improper coloring".into()));
    }
    let n = labels.n;
    let tdc = is_total_dominator(g, c)?;

    let mut classes: Vec<Vec<PairVertex>> = c.labeled_classes(g)?;
    for class in &mut classes {
        class.sort();
    }
    // canonical class order: by smallest member pair
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| classes[i][0]);
    let mut rank = vec![0usize; classes.len()];
    for (new_idx, &old_idx) in order.iter().enumerate() {
        rank[old_idx] = new_idx;
    }

    let witness = if tdc {
        let w = domination_witness(g, c)?.expect("tdc implies a witness");
        let pairs = g.pair_labels().expect("pair labels checked");
        Some(
            (0..g.order())
                .map(|v| (pairs[v].label(), rank[w.class_for[v]]))
                .collect::<BTreeMap<String, usize>>(),
        )
    } else {
        None
    };

    Ok(ColoringCertificate {
        n,
        k: 2,
        classes: order
            .iter()
            .map(|&i| classes[i].iter().map(|p| p.label()).collect())
            .collect(),
        tdc,
        witness,
    })
}

/// Rebuilds the coloring a certificate describes, against `g`'s labels.
/// Class indices follow the certificate's class order.
pub fn coloring_from_certificate(g: &Graph, cert: &ColoringCertificate) -> Result<Coloring> {
    let labels = g.labels().ok_or(Error::MissingPairLabels)?;
    if cert.n != labels.n || cert.k != labels.k {
        return Err(Error::Certificate(format!(
            "certificate is for ({}, {})-subsets, graph carries ({}, {})",
            cert.n, cert.k, labels.n, labels.k
        )));
    }
    let pairs = g.pair_labels().ok_or(Error::MissingPairLabels)?;
    let index_of: BTreeMap<String, usize> =
        pairs.iter().enumerate().map(|(v, p)| (p.label(), v)).collect();
    let mut classes: Vec<Vec<usize>> = Vec::with_capacity(cert.classes.len());
    for class in &cert.classes {
        let mut members = Vec::with_capacity(class.len());
        for label in class {
            let v = index_of
                .get(label)
                .ok_or_else(|| Error::Certificate(format!("unknown vertex label {label:?}")))?;
            members.push(*v);
        }
        classes.push(members);
    }
    Coloring::from_classes(g.order(), &classes)
}

/// Full check of a certificate against a graph: the classes must form a
/// proper coloring, the `tdc` flag must match reality, and a witness, when
/// present, must be complete, sound, and only claim what `tdc` claims.
/// Structural mismatches (wrong labels, bad partition) are errors;
/// falsified claims return `Ok(false)`.
pub fn verify_certificate(g: &Graph, cert: &ColoringCertificate) -> Result<bool> {
    let coloring = coloring_from_certificate(g, cert)?;
    if !is_proper(g, &coloring)? {
        return Ok(false);
    }
    if cert.tdc != is_total_dominator(g, &coloring)? {
        return Ok(false);
    }
    if let Some(witness) = &cert.witness {
        if !cert.tdc || witness.len() != g.order() {
            return Ok(false);
        }
        let pairs = g.pair_labels().ok_or(Error::MissingPairLabels)?;
        let sets = coloring.classes();
        for (v, pair) in pairs.iter().enumerate() {
            let Some(&cl) = witness.get(&pair.label()) else {
                return Ok(false);
            };
            if cl >= sets.len() || !sets[cl].iter().all(|&u| g.are_adjacent(u, v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
