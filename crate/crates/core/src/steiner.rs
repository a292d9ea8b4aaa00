//! Steiner triple systems: existence by congruence, explicit constructions
//! for both admissible residue classes, verification, and exhaustive
//! nonexistence search for small orders.
//!
//! An `STS(n)` is a set of 3-element blocks of `{1..n}` covering every pair
//! exactly once; one exists precisely when `n = 1, 3 (mod 6)`.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A triple system on points `1..=n`. Canonical form keeps each block
/// strictly ascending and the block list sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSystem {
    pub n: u32,
    pub blocks: Vec<[u32; 3]>,
}

impl TripleSystem {
    /// Sorts each block and the block list into canonical form.
    pub fn normalized(n: u32, mut blocks: Vec<[u32; 3]>) -> TripleSystem {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        TripleSystem { n, blocks }
    }
}

/// Existence by the admissibility congruence: `n = 1` or `3 (mod 6)`.
pub fn sts_exists(n: u32) -> bool {
    n % 6 == 1 || n % 6 == 3
}

/// Number of blocks in an STS(n).
fn block_count(n: u32) -> usize {
    (n as usize) * (n as usize - 1) / 6
}

/// Builds an STS(n) for admissible `n`: the quasigroup construction over
/// `Z_{2t+1} x {0,1,2}` for `n = 6t+3`, and its half-idempotent variant
/// with an extra point for `n = 6t+1`. Inadmissible `n` is rejected.
pub fn construct_sts(n: u32) -> Result<TripleSystem> {
    if !sts_exists(n) {
        return Err(Error::InvalidParameter(format!(
            "no Steiner triple system on {n} points (n must be 1 or 3 mod 6)"
        )));
    }
    if n > 1000 {
        return Err(Error::InvalidParameter(format!(
            "triple system order capped at 1000, got {n}"
        )));
    }
    let system = match n {
        1 => TripleSystem { n, blocks: Vec::new() },
        3 => TripleSystem { n, blocks: vec![[1, 2, 3]] },
        _ if n % 6 == 3 => bose(n),
        _ => skolem(n),
    };
    debug_assert_eq!(system.blocks.len(), block_count(n));
    Ok(system)
}

/// `n = 6t + 3`: points `Z_q x {0,1,2}` with `q = 2t+1`, using the
/// idempotent commutative quasigroup `x o y = (t+1)(x+y) mod q`.
fn bose(n: u32) -> TripleSystem {
    let t = (n - 3) / 6;
    let q = 2 * t + 1;
    let label = |x: u32, j: u32| 1 + x + j * q;
    let op = |x: u32, y: u32| ((x + y) * (t + 1)) % q;

    let mut blocks = Vec::with_capacity(block_count(n));
    for x in 0..q {
        blocks.push([label(x, 0), label(x, 1), label(x, 2)]);
    }
    for x in 0..q {
        for y in x + 1..q {
            for j in 0..3 {
                blocks.push([label(x, j), label(y, j), label(op(x, y), (j + 1) % 3)]);
            }
        }
    }
    TripleSystem::normalized(n, blocks)
}

/// `n = 6t + 1`: points `Z_m x {0,1,2}` plus one extra, `m = 2t`, using the
/// half-idempotent commutative quasigroup `x o y = pi((x+y) mod m)` where
/// `pi(2k) = k` and `pi(2k+1) = k + t`.
fn skolem(n: u32) -> TripleSystem {
    let t = (n - 1) / 6;
    let m = 2 * t;
    let infinity = n; // label of the extra point
    let label = |x: u32, j: u32| 1 + x + j * m;
    let pi = |v: u32| if v % 2 == 0 { v / 2 } else { v / 2 + t };
    let op = |x: u32, y: u32| pi((x + y) % m);

    let mut blocks = Vec::with_capacity(block_count(n));
    for i in 0..t {
        blocks.push([label(i, 0), label(i, 1), label(i, 2)]);
    }
    for i in 0..t {
        for j in 0..3 {
            blocks.push([infinity, label(t + i, j), label(i, (j + 1) % 3)]);
        }
    }
    for x in 0..m {
        for y in x + 1..m {
            for j in 0..3 {
                blocks.push([label(x, j), label(y, j), label(op(x, y), (j + 1) % 3)]);
            }
        }
    }
    TripleSystem::normalized(n, blocks)
}

/// Full structural check: blocks strictly ascending within range, block
/// count right, and every pair covered exactly once.
pub fn verify_sts(system: &TripleSystem) -> bool {
    let n = system.n;
    if n < 1 {
        return false;
    }
    // 3 * blocks must equal the pair count exactly; the rounded quotient
    // would let an inadmissible order slip through with one pair uncovered
    if 3 * system.blocks.len() != (n as usize) * (n as usize - 1) / 2 {
        return false;
    }
    for b in &system.blocks {
        if !(1 <= b[0] && b[0] < b[1] && b[1] < b[2] && b[2] <= n) {
            return false;
        }
    }
    let idx = |a: u32, b: u32| (a as usize - 1) * n as usize + b as usize - 1;
    let mut covered = vec![false; (n as usize) * (n as usize)];
    for b in &system.blocks {
        for (x, y) in [(b[0], b[1]), (b[0], b[2]), (b[1], b[2])] {
            let i = idx(x, y);
            if covered[i] {
                return false;
            }
            covered[i] = true;
        }
    }
    // every pair covered: counts match since none was covered twice
    true
}

/// Exhaustive backtracking proof that no STS(n) exists; `true` means the
/// search ran to completion without finding a decomposition. Capped at
/// `n <= 9`.
pub fn sts_nonexistence_bruteforce(n: u32) -> Result<bool> {
    if !(1..=9).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "exhaustive triple search is capped at 1 <= n <= 9, got {n}"
        )));
    }
    let n = n as usize;
    let mut covered = vec![vec![false; n + 1]; n + 1];
    Ok(!place_blocks(n, &mut covered))
}

fn place_blocks(n: usize, covered: &mut Vec<Vec<bool>>) -> bool {
    // lex-first uncovered pair; the third point must sit above b, since a
    // smaller third point would need an even earlier pair to be free
    let mut first: Option<(usize, usize)> = None;
    'outer: for a in 1..=n {
        for b in a + 1..=n {
            if !covered[a][b] {
                first = Some((a, b));
                break 'outer;
            }
        }
    }
    let Some((a, b)) = first else { return true };
    for c in b + 1..=n {
        if covered[a][c] || covered[b][c] {
            continue;
        }
        covered[a][b] = true;
        covered[a][c] = true;
        covered[b][c] = true;
        if place_blocks(n, covered) {
            return true;
        }
        covered[a][b] = false;
        covered[a][c] = false;
        covered[b][c] = false;
    }
    false
}

// ============================================================
// Plain-text block list
// ============================================================

/// One block per line, `a b c` ascending, blocks sorted.
pub fn write_triples(system: &TripleSystem) -> String {
    let mut out = String::new();
    for b in &system.blocks {
        writeln!(out, "{} {} {}", b[0], b[1], b[2]).unwrap();
    }
    out
}

/// Parses `write_triples` output; `n` is supplied by the caller. Blocks
/// are normalized, so the result round-trips byte-identically.
pub fn parse_triples(n: u32, text: &str) -> Result<TripleSystem> {
    let mut blocks = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut points = [0u32; 3];
        let mut tokens = line.split_whitespace();
        for slot in &mut points {
            *slot = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("line {}: expected `a b c`", lineno + 1)))?;
            if *slot < 1 || *slot > n {
                return Err(Error::Parse(format!(
                    "line {}: point {} out of range 1..={n}",
                    lineno + 1,
                    slot
                )));
            }
        }
        if tokens.next().is_some() {
            return Err(Error::Parse(format!("line {}: expected `a b c`", lineno + 1)));
        }
        blocks.push(points);
    }
    Ok(TripleSystem::normalized(n, blocks))
}
