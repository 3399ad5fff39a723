//! Generators for the named graph families, each with a fixed deterministic
//! labelling and a name table so structured vertices ("the hub", "the i-th
//! pendant") can be addressed without knowing the labelling.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// Star K_{1,m}, centre plus m leaves.
    Star { m: usize },
    /// Complete binary tree B_n on 2^(n+1) - 1 vertices, heap-labelled.
    BinaryTree { n: usize },
    /// Cliques of the given sizes glued consecutively at single vertices.
    CliquePath { sizes: Vec<usize> },
    /// Hub v with k claws K_{1,3} (centres one step from v) and r pendant
    /// paths of length two.
    Gkr { k: usize, r: usize },
    /// Spider of 3-paths: x joined to x_2..x_k (each continuing x_i-y_i-z_i)
    /// and to x_1, which carries m-k+1 branches x_1-y_1s-z_1s.
    Hkm { k: usize, m: usize },
    /// K_m with counts[i] whiskers attached to vertex i+1.
    WhiskeredComplete { m: usize, counts: Vec<usize> },
}

/// A built family: the graph plus its vertex-name table.
#[derive(Debug, Clone)]
pub struct FamilyGraph {
    pub graph: Graph,
    names: BTreeMap<String, usize>,
}

impl FamilyGraph {
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.names
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertexName(name.to_string()))
    }

    pub fn names(&self) -> &BTreeMap<String, usize> {
        &self.names
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<FamilyGraph> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        let mut names = BTreeMap::new();
        let graph = match self {
            FamilySpec::Path { n } => {
                if *n < 1 {
                    return bad("path needs n >= 1".into());
                }
                Graph::path(*n)
            }
            FamilySpec::Cycle { n } => {
                if *n < 3 {
                    return bad("cycle needs n >= 3".into());
                }
                Graph::cycle(*n)
            }
            FamilySpec::Complete { n } => {
                if *n < 1 {
                    return bad("complete graph needs n >= 1".into());
                }
                Graph::complete(*n)
            }
            FamilySpec::Star { m } => {
                names.insert("center".into(), 1);
                Graph::star(*m)
            }
            FamilySpec::BinaryTree { n } => {
                // heap labelling: root 1, children of v are 2v and 2v+1, so
                // level l occupies 2^l .. 2^(l+1)-1 (level-major order)
                let total = (1usize << (n + 1)) - 1;
                if total > 64 {
                    return bad(format!("binary tree level {n} needs {total} vertices"));
                }
                let edges: Vec<_> = (2..=total).map(|v| (v / 2, v)).collect();
                for level in 0..=*n {
                    for i in 1..=(1usize << level) {
                        names.insert(format!("v{level}_{i}"), (1 << level) + i - 1);
                    }
                }
                for i in 1..=(1usize << n) {
                    names.insert(format!("leaf{i}"), (1 << n) + i - 1);
                }
                Graph::new(total, &edges)?
            }
            FamilySpec::CliquePath { sizes } => {
                if sizes.is_empty() || sizes.iter().any(|&c| c < 2) {
                    return bad("clique path needs sizes each >= 2".into());
                }
                // consecutive labels: clique i starts at the cut vertex it
                // shares with clique i-1, so the labelling is closed
                let mut edges = vec![];
                let mut start = 1;
                for (idx, &c) in sizes.iter().enumerate() {
                    for a in start..start + c {
                        for b in (a + 1)..start + c {
                            edges.push((a, b));
                        }
                    }
                    start += c - 1;
                    if idx + 1 < sizes.len() {
                        names.insert(format!("v{}", idx + 1), start);
                    }
                }
                Graph::new(start, &edges)?
            }
            FamilySpec::Gkr { k, r } => {
                if *k < 2 {
                    return bad("G(k,r) needs k >= 2".into());
                }
                // hub v = 1; claw i occupies 3i-1, 3i, 3i+1 as
                // (v_i1, v_i2, v_i3) with centre v_i2 adjacent to the hub;
                // path j occupies 3k+2j, 3k+2j+1 as (u_j1, u_j2)
                let total = 1 + 3 * k + 2 * r;
                if total > 64 {
                    return bad(format!("G({k},{r}) needs {total} vertices"));
                }
                names.insert("v".into(), 1);
                let mut edges = vec![];
                for i in 1..=*k {
                    let (a, b, c) = (3 * i - 1, 3 * i, 3 * i + 1);
                    edges.extend([(b, 1), (b, a), (b, c)]);
                    names.insert(format!("v{i}_1"), a);
                    names.insert(format!("v{i}_2"), b);
                    names.insert(format!("v{i}_3"), c);
                }
                for j in 1..=*r {
                    let (a, b) = (3 * k + 2 * j, 3 * k + 2 * j + 1);
                    edges.extend([(1, a), (a, b)]);
                    names.insert(format!("u{j}_1"), a);
                    names.insert(format!("u{j}_2"), b);
                }
                Graph::new(total, &edges)?
            }
            FamilySpec::Hkm { k, m } => {
                if *k < 1 || k > m {
                    return bad("H(k,m) needs 1 <= k <= m".into());
                }
                // x = 1, x_1 = 2; branch i (2 <= i <= k) occupies 3i-3,
                // 3i-2, 3i-1 as (x_i, y_i, z_i); the s-th branch under x_1
                // occupies 3k-1+2s, 3k+2s as (y_1s, z_1s)
                let b = m - k + 1;
                let total = 2 + 3 * (k - 1) + 2 * b;
                names.insert("x".into(), 1);
                names.insert("x1".into(), 2);
                let mut edges = vec![(1, 2)];
                for i in 2..=*k {
                    let (xi, yi, zi) = (3 * i - 3, 3 * i - 2, 3 * i - 1);
                    edges.extend([(1, xi), (xi, yi), (yi, zi)]);
                    names.insert(format!("x{i}"), xi);
                    names.insert(format!("y{i}"), yi);
                    names.insert(format!("z{i}"), zi);
                }
                for s in 1..=b {
                    let (ys, zs) = (3 * k + 2 * s - 2, 3 * k + 2 * s - 1);
                    edges.extend([(2, ys), (ys, zs)]);
                    names.insert(format!("y1_{s}"), ys);
                    names.insert(format!("z1_{s}"), zs);
                }
                Graph::new(total, &edges)?
            }
            FamilySpec::WhiskeredComplete { m, counts } => {
                if *m < 2 {
                    return bad("whiskered complete graph needs m >= 2".into());
                }
                if counts.len() > *m {
                    return bad("more whiskered vertices than clique vertices".into());
                }
                let mut edges = vec![];
                for a in 1..=*m {
                    for b in (a + 1)..=*m {
                        edges.push((a, b));
                    }
                }
                let mut next = m + 1;
                for (i, &c) in counts.iter().enumerate() {
                    names.insert(format!("u{}", i + 1), i + 1);
                    for w in 1..=c {
                        edges.push((i + 1, next));
                        names.insert(format!("w{}_{w}", i + 1), next);
                        next += 1;
                    }
                }
                Graph::new(next - 1, &edges)?
            }
        };
        Ok(FamilyGraph { graph, names })
    }

    /// Number of vertices of the built graph without building it.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => *n,
            FamilySpec::Star { m } => m + 1,
            FamilySpec::BinaryTree { n } => (1 << (n + 1)) - 1,
            FamilySpec::CliquePath { sizes } => {
                sizes.iter().sum::<usize>() - sizes.len().saturating_sub(1)
            }
            FamilySpec::Gkr { k, r } => 1 + 3 * k + 2 * r,
            FamilySpec::Hkm { k, m } => 2 + 3 * (k - 1) + 2 * (m - k + 1),
            FamilySpec::WhiskeredComplete { m, counts } => m + counts.iter().sum::<usize>(),
        }
    }
}
