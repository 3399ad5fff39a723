//! Labelled finite simple graphs and the combinatorial predicates the
//! ideal-theoretic modules consume: cut sets, cliques, closed labellings,
//! clique-path structure, domination and matching numbers.
//!
//! Vertices are 1-based integers `1..=n` throughout. The lexicographic
//! term order downstream depends on the labels, so operations that relabel
//! always return the permutation used.

use crate::config::Caps;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Labelled simple graph on the vertex set `{1, .., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted list of edges (i, j) with i < j.
    edges: Vec<(usize, usize)>,
    /// Adjacency bitmask per vertex, bit v-1 set iff v is a neighbour.
    adj: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::new(j.n, &j.edges).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > 64 {
            return Err(Error::InvalidParameter(format!(
                "at most 64 vertices supported, got {n}"
            )));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a},{b}) outside vertex range 1..={n}"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![0u64; n + 1];
        for &(a, b) in &edges {
            adj[a] |= 1 << (b - 1);
            adj[b] |= 1 << (a - 1);
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::new(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = vec![];
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// Star K_{1,m} with centre 1.
    pub fn star(m: usize) -> Graph {
        let edges: Vec<_> = (2..=m + 1).map(|v| (1, v)).collect();
        Graph::new(m + 1, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adj[a] & (1 << (b - 1)) != 0
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_to_vertices(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Graph with vertex v relabelled perm[v]. `perm` is 1-based with
    /// perm[0] unused.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::new(self.n, &edges).unwrap()
    }

    /// Connected components of the subgraph induced on `mask`, each sorted.
    pub fn components_in(&self, mask: u64) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut comps = vec![];
        for v in 1..=self.n {
            let bit = 1u64 << (v - 1);
            if mask & bit == 0 || seen & bit != 0 {
                continue;
            }
            // BFS by mask expansion
            let mut comp = bit;
            loop {
                let mut next = comp;
                let mut m = comp;
                while m != 0 {
                    let u = m.trailing_zeros() as usize + 1;
                    m &= m - 1;
                    next |= self.adj[u] & mask;
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            comps.push(mask_to_vertices(comp));
        }
        comps
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_in(self.full_mask())
    }

    pub fn component_count_in(&self, mask: u64) -> usize {
        self.components_in(mask).len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// {v : c(G - v) > c(G)}.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let base = self.connected_components().len();
        (1..=self.n)
            .filter(|&v| {
                self.component_count_in(self.full_mask() & !(1 << (v - 1))) > base
            })
            .collect()
    }

    /// All cut sets: S such that removing any s from S strictly lowers the
    /// component count of the complement. Always includes the empty set.
    pub fn enumerate_cut_sets(&self, caps: &Caps) -> Result<Vec<CutSet>> {
        if self.n > caps.cut_set_vertices {
            return Err(Error::ResourceCap {
                what: "cut-set enumeration vertex count",
                size: self.n,
                cap: caps.cut_set_vertices,
            });
        }
        let full = self.full_mask();
        // memoized component counts over the subset lattice of removed sets
        let mut comp_count = vec![0u8; 1 << self.n];
        for s in 0..(1u64 << self.n) {
            comp_count[s as usize] = self.component_count_in(full & !s) as u8;
        }
        let mut out = vec![];
        for s in 0..(1u64 << self.n) {
            let c = comp_count[s as usize];
            let mut ok = true;
            let mut m = s;
            while m != 0 {
                let bit = m & m.wrapping_neg();
                m &= m - 1;
                if c <= comp_count[(s & !bit) as usize] {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(CutSet {
                    vertices: mask_to_vertices(s),
                    components: self.components_in(full & !s),
                });
            }
        }
        Ok(out)
    }

    /// Checks the defining cut-set property for one vertex set.
    pub fn is_cut_set(&self, vertices: &[usize]) -> bool {
        let s = vertices_to_mask(vertices);
        let full = self.full_mask();
        let c = self.component_count_in(full & !s);
        vertices
            .iter()
            .all(|&v| c > self.component_count_in(full & !(s & !(1 << (v - 1)))))
    }

    pub fn cut_set(&self, vertices: &[usize]) -> Result<CutSet> {
        if !self.is_cut_set(vertices) {
            return Err(Error::InvalidCutSet(format!("{vertices:?}")));
        }
        let s = vertices_to_mask(vertices);
        let mut vs: Vec<_> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        Ok(CutSet {
            vertices: vs,
            components: self.components_in(self.full_mask() & !s),
        })
    }

    /// All inclusion-maximal cliques (Bron-Kerbosch), each sorted; the list
    /// is sorted for determinism.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<u64> = vec![];
        self.bron_kerbosch(0, self.full_mask(), 0, &mut out);
        let mut cliques: Vec<Vec<usize>> = out.into_iter().map(mask_to_vertices).collect();
        cliques.sort();
        cliques
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            if r != 0 {
                out.push(r);
            }
            return;
        }
        // pivot on a vertex of p|x with most neighbours in p
        let pivot = {
            let mut best = 0;
            let mut best_v = 0;
            let mut m = p | x;
            while m != 0 {
                let v = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                let cnt = (self.adj[v] & p).count_ones();
                if best_v == 0 || cnt > best {
                    best = cnt;
                    best_v = v;
                }
            }
            best_v
        };
        let mut cand = p & !self.adj[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize + 1;
            let bit = 1u64 << (v - 1);
            cand &= cand - 1;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    /// Closedness of the given labelling: for every vertex, the smaller
    /// neighbours form a clique and the larger neighbours form a clique.
    pub fn closed_check(&self) -> bool {
        for v in 1..=self.n {
            let below = self.adj[v] & ((1u64 << (v - 1)) - 1);
            let above = self.adj[v] & !((1u64 << (v - 1)) - 1) & !(1 << (v - 1));
            for side in [below, above] {
                let mut m = side;
                while m != 0 {
                    let u = m.trailing_zeros() as usize + 1;
                    m &= m - 1;
                    if side & !self.adj[u] & !(1 << (u - 1)) != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Brute-force search for a closed labelling; returns the permutation
    /// `perm` (1-based, perm[v] = new label of v) if one exists.
    pub fn closed_search(&self, caps: &Caps) -> Result<Option<Vec<usize>>> {
        if self.closed_check() {
            let mut id: Vec<usize> = (0..=self.n).collect();
            id[0] = 0;
            return Ok(Some(id));
        }
        if self.n > caps.closed_search_vertices {
            return Err(Error::ResourceCap {
                what: "closed-labelling permutation search",
                size: self.n,
                cap: caps.closed_search_vertices,
            });
        }
        let mut perm: Vec<usize> = (0..=self.n).collect();
        if self.search_closed_perm(&mut perm, 1) {
            return Ok(Some(perm));
        }
        Ok(None)
    }

    fn search_closed_perm(&self, perm: &mut Vec<usize>, pos: usize) -> bool {
        if pos > self.n {
            return self.relabel(perm).closed_check();
        }
        for i in pos..=self.n {
            perm.swap(pos, i);
            if self.search_closed_perm(perm, pos + 1) {
                return true;
            }
            perm.swap(pos, i);
        }
        false
    }

    /// Clique-path structure of a connected Cohen-Macaulay closed graph:
    /// maximal cliques orderable so consecutive ones meet in a single cut
    /// vertex and non-consecutive ones are disjoint. None if the graph does
    /// not have this shape.
    pub fn cm_closed_structure(&self) -> Option<CliquePathStructure> {
        if !self.is_connected() || self.n == 0 {
            return None;
        }
        let cliques = self.maximal_cliques();
        let t = cliques.len();
        if t == 1 {
            return Some(CliquePathStructure {
                cliques,
                cut_vertices: vec![],
            });
        }
        let masks: Vec<u64> = cliques.iter().map(|c| vertices_to_mask(c)).collect();
        // pairwise intersections must have size <= 1 and the intersection
        // graph must be a path
        let mut inter = vec![vec![]; t];
        for i in 0..t {
            for j in (i + 1)..t {
                let m = masks[i] & masks[j];
                match m.count_ones() {
                    0 => {}
                    1 => {
                        inter[i].push(j);
                        inter[j].push(i);
                    }
                    _ => return None,
                }
            }
        }
        let ends: Vec<usize> = (0..t).filter(|&i| inter[i].len() == 1).collect();
        if ends.len() != 2 || inter.iter().any(|x| x.len() > 2) {
            return None;
        }
        // walk the path from the end with the lexicographically smallest clique
        let start = *ends.iter().min_by_key(|&&i| &cliques[i]).unwrap();
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while order.len() < t {
            let next = *inter[cur].iter().find(|&&x| x != prev)?;
            prev = cur;
            cur = next;
            order.push(cur);
        }
        // non-consecutive cliques must be disjoint; every vertex covered
        for a in 0..t {
            for b in (a + 2)..t {
                if masks[order[a]] & masks[order[b]] != 0 {
                    return None;
                }
            }
        }
        if order.iter().fold(0u64, |m, &i| m | masks[i]) != self.full_mask() {
            return None;
        }
        let cut_vertices: Vec<usize> = (0..t - 1)
            .map(|i| (masks[order[i]] & masks[order[i + 1]]).trailing_zeros() as usize + 1)
            .collect();
        Some(CliquePathStructure {
            cliques: order.into_iter().map(|i| cliques[i].clone()).collect(),
            cut_vertices,
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Universal-vertex test; complete graphs count as cones.
    pub fn is_cone(&self) -> bool {
        (1..=self.n).any(|v| self.degree(v) == self.n - 1)
    }

    /// Minimum size of a connected dominating set. Complete graphs return 0
    /// by the convention that their binomial edge ideal is prime.
    pub fn min_connected_dominating_set_size(&self, caps: &Caps) -> Result<usize> {
        self.ensure_connected()?;
        if self.is_complete() {
            return Ok(0);
        }
        if self.n > caps.cut_set_vertices {
            return Err(Error::ResourceCap {
                what: "connected dominating set search",
                size: self.n,
                cap: caps.cut_set_vertices,
            });
        }
        let full = self.full_mask();
        for size in 1..=self.n {
            let mut found = None;
            self.for_each_subset_of_size(size, &mut |mask| {
                if found.is_some() {
                    return;
                }
                let mut closed = mask;
                let mut m = mask;
                while m != 0 {
                    let v = m.trailing_zeros() as usize + 1;
                    m &= m - 1;
                    closed |= self.adj[v];
                }
                if closed == full && self.component_count_in(mask) == 1 {
                    found = Some(mask);
                }
            });
            if found.is_some() {
                return Ok(size);
            }
        }
        unreachable!("the whole vertex set dominates a connected graph")
    }

    fn for_each_subset_of_size(&self, size: usize, f: &mut impl FnMut(u64)) {
        fn rec(n: usize, start: usize, left: usize, mask: u64, f: &mut impl FnMut(u64)) {
            if left == 0 {
                f(mask);
                return;
            }
            for v in start..=(n - left + 1) {
                rec(n, v + 1, left - 1, mask | (1 << (v - 1)), f);
            }
        }
        if size <= self.n {
            rec(self.n, 1, size, 0, f);
        }
    }

    /// Induced matching number by branch-and-bound over the edge list.
    pub fn induced_matching_number(&self) -> usize {
        fn rec(g: &Graph, idx: usize, forbidden: u64, count: usize, best: &mut usize) {
            if count + (g.edges.len() - idx).min(g.n / 2) <= *best {
                // cannot beat the incumbent even taking every remaining edge
                if count + g.edges.len() - idx <= *best {
                    return;
                }
            }
            if idx == g.edges.len() {
                *best = (*best).max(count);
                return;
            }
            let (a, b) = g.edges[idx];
            let bits = (1u64 << (a - 1)) | (1u64 << (b - 1));
            if forbidden & bits == 0 {
                let newly = forbidden | g.adj[a] | g.adj[b] | bits;
                rec(g, idx + 1, newly, count + 1, best);
            }
            rec(g, idx + 1, forbidden, count, best);
        }
        let mut best = 0;
        rec(self, 0, 0, 0, &mut best);
        best
    }

    /// Decomposition over a free cut vertex: a cut vertex v with exactly two
    /// branches such that N[v] is a clique inside each branch. Returns the
    /// two induced pieces sharing only v.
    pub fn clique_sum_split(&self) -> Option<(Graph, Graph, usize)> {
        if !self.is_connected() {
            return None;
        }
        for v in self.cut_vertices() {
            let rest = self.full_mask() & !(1 << (v - 1));
            let comps = self.components_in(rest);
            if comps.len() != 2 {
                continue;
            }
            let free_in = |comp_mask: u64| {
                let nb = self.adj[v] & comp_mask;
                let mut m = nb;
                while m != 0 {
                    let u = m.trailing_zeros() as usize + 1;
                    m &= m - 1;
                    if nb & !self.adj[u] & !(1 << (u - 1)) != 0 {
                        return false;
                    }
                }
                true
            };
            let m0 = vertices_to_mask(&comps[0]);
            let m1 = vertices_to_mask(&comps[1]);
            if free_in(m0) && free_in(m1) {
                let bit = 1u64 << (v - 1);
                return Some((
                    self.induced_subgraph_keep_labels(m0 | bit),
                    self.induced_subgraph_keep_labels(m1 | bit),
                    v,
                ));
            }
        }
        None
    }

    /// Induced subgraph on the masked vertices, keeping the original vertex
    /// labels (absent vertices become isolated and are excluded from edges).
    pub fn induced_subgraph_keep_labels(&self, mask: u64) -> Graph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| mask & (1 << (a - 1)) != 0 && mask & (1 << (b - 1)) != 0)
            .collect();
        Graph::new(self.n, &edges).unwrap()
    }

    /// Chordality via greedy simplicial-vertex elimination.
    pub fn is_chordal(&self) -> bool {
        let mut alive = self.full_mask();
        loop {
            if alive.count_ones() <= 1 {
                return true;
            }
            let mut found = false;
            let mut m = alive;
            'outer: while m != 0 {
                let v = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                let nb = self.adj[v] & alive;
                let mut q = nb;
                while q != 0 {
                    let u = q.trailing_zeros() as usize + 1;
                    q &= q - 1;
                    if nb & !self.adj[u] & !(1 << (u - 1)) != 0 {
                        continue 'outer;
                    }
                }
                alive &= !(1u64 << (v - 1));
                found = true;
                break;
            }
            if !found {
                return false;
            }
        }
    }
}

/// A cut set together with the component partition of its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSet {
    pub vertices: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl CutSet {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mask(&self) -> u64 {
        vertices_to_mask(&self.vertices)
    }
}

/// Ordered maximal cliques F_1..F_t of a Cohen-Macaulay closed graph with
/// their singleton consecutive intersections v_1..v_{t-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePathStructure {
    pub cliques: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

impl CliquePathStructure {
    pub fn t(&self) -> usize {
        self.cliques.len()
    }

    /// The set of clique-path cut vertices (every cut set is a subset).
    pub fn tilde_c(&self) -> &[usize] {
        &self.cut_vertices
    }
}

pub fn mask_to_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = vec![];
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize + 1);
        mask &= mask - 1;
    }
    out
}

pub fn vertices_to_mask(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1 << (v - 1)))
}
