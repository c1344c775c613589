//! Canonical forms for small graphs.
//!
//! The canonical form is the lexicographically smallest adjacency matrix
//! over all vertex orderings compatible with an iterated degree refinement:
//! vertices are first partitioned into cells by repeatedly splitting on the
//! multiset of neighbour cells, then all cell-respecting orderings are
//! searched. Two prunings keep the search small without giving up exactness:
//! vertices with identical neighbourhoods (twins) are interchangeable by an
//! automorphism, so only one representative per twin class is tried at each
//! position, and branches that cannot beat the best matrix found so far are
//! cut.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use std::fmt;

/// Largest vertex count canonicalized by default.
pub const DEFAULT_CANON_BOUND: usize = 12;

/// Isomorphism-invariant fingerprint: the graph6 string of the canonical
/// relabelling. Equal keys if and only if the graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_key_bounded(g, DEFAULT_CANON_BOUND)
}

pub fn canonical_key_bounded(g: &Graph, bound: usize) -> Result<CanonicalKey> {
    Ok(CanonicalKey(graph6::encode(&canonical_form_bounded(
        g, bound,
    )?)))
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    canonical_form_bounded(g, DEFAULT_CANON_BOUND)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<Graph> {
    let n = g.n();
    if n > bound {
        return Err(Error::CanonBoundExceeded { n, bound });
    }
    if n <= 1 {
        return Ok(g.clone());
    }
    let colors = refine(g);
    let cells = cells_by_color(&colors);
    let twin_class = twin_classes(g, &colors);

    let mut search = Search {
        g,
        n,
        cells,
        twin_class,
        rows: vec![0u64; n],
        placed: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.run(0, 0);
    let best = search.best.expect("search visits at least one ordering");

    let mut canon = Graph::new(n)?;
    for (pos, row) in best.iter().enumerate() {
        for earlier in 0..pos {
            if row >> (62 - earlier) & 1 == 1 {
                canon.add_edge(earlier, pos)?;
            }
        }
    }
    Ok(canon)
}

/// Iterated refinement starting from vertex degrees. Colour ids are ranks of
/// sorted signatures, so they are isomorphism-invariant at every round.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = {
        let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut distinct = degs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        degs.iter_mut()
            .for_each(|d| *d = distinct.binary_search(d).unwrap());
        degs
    };
    let mut num_colors = colors.iter().max().map_or(0, |m| m + 1);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() == num_colors {
            return colors;
        }
        num_colors = distinct.len();
        for v in 0..n {
            colors[v] = distinct.binary_search(&signatures[v]).unwrap();
        }
    }
}

fn cells_by_color(colors: &[usize]) -> Vec<Vec<usize>> {
    let num = colors.iter().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); num];
    for (v, &c) in colors.iter().enumerate() {
        cells[c].push(v);
    }
    cells
}

/// Groups same-coloured vertices whose neighbourhoods agree outside the pair
/// itself; swapping two such vertices is an automorphism, and so is any
/// composition of swaps, so a whole class is mutually interchangeable.
fn twin_classes(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if colors[u] != colors[v] {
                continue;
            }
            let mask = !((1u64 << u) | (1u64 << v));
            if g.adjacency_row(u) & mask == g.adjacency_row(v) & mask {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    cells: Vec<Vec<usize>>,
    twin_class: Vec<usize>,
    rows: Vec<u64>,
    placed: Vec<usize>,
    used: u64,
    /// Adjacency rows of the best ordering found so far. Positions past the
    /// deepest completed prefix hold `u64::MAX` so any completion improves
    /// them; the invariant is `rows[..pos] == best[..pos]` on every call.
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, mut cell_idx: usize) {
        if pos == self.n {
            self.best = Some(self.rows.clone());
            return;
        }
        while self.cells[cell_idx].iter().all(|&v| self.used >> v & 1 == 1) {
            cell_idx += 1;
        }
        // One candidate per twin class among the cell's unused vertices.
        let mut candidates: Vec<(u64, usize)> = Vec::new();
        let mut seen_classes = 0u64;
        for &v in &self.cells[cell_idx] {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let class_bit = 1u64 << self.twin_class[v];
            if seen_classes & class_bit != 0 {
                continue;
            }
            seen_classes |= class_bit;
            let mut row = 0u64;
            for (i, &p) in self.placed.iter().enumerate() {
                if self.g.has_edge(v, p) {
                    row |= 1u64 << (62 - i);
                }
            }
            candidates.push((row, v));
        }
        candidates.sort_unstable();
        for (row, v) in candidates {
            if let Some(best) = &mut self.best {
                if row > best[pos] {
                    continue;
                }
                if row < best[pos] {
                    best[pos] = row;
                    for slot in best.iter_mut().skip(pos + 1) {
                        *slot = u64::MAX;
                    }
                }
            }
            self.rows[pos] = row;
            self.placed.push(v);
            self.used |= 1 << v;
            self.run(pos + 1, cell_idx);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}
