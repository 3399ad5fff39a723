//! Castelnuovo-Mumford regularity of R/I for squarefree monomial ideals,
//! computed Hochster-style from reduced simplicial homology of induced
//! subcomplexes of the Stanley-Reisner complex. The convention throughout
//! is reg(R/I) = reg(I) - 1, realized as
//!
//!   reg(R/I) = max { h + 1 : H~_h(Δ|_σ; K) ≠ 0 for some σ ⊆ vars },
//!
//! which is 0 for I = 0 (σ = ∅ contributes h = −1).
//!
//! Binomial edge ideals are handled through their squarefree lex initial
//! ideal. That reg(R/J_G) = reg(R/in_<(J_G)) when the initial ideal is
//! squarefree is an imported theorem, not re-proved here; every consumer
//! pairs the value with an independent closed-form check.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::field::{Field, Fp, DEFAULT_PRIME};
use crate::graph::Graph;
use crate::ideals::BinomialEdgeIdeal;
use crate::linalg::sparse_rank;
use crate::poly::Monomial;
use rayon::prelude::*;
use std::collections::{HashMap, HashSet};

/// Stanley-Reisner complex of a squarefree monomial ideal, stored by its
/// minimal non-faces (the supports of the minimal generators). Faces are
/// exactly the subsets containing no non-face, so closure under subsets is
/// automatic.
#[derive(Debug, Clone)]
pub struct SimplicialComplexModel {
    nvars: usize,
    nonfaces: Vec<u64>,
}

impl SimplicialComplexModel {
    // the `any` below is a subset test, not membership (clippy false positive)
    #[allow(clippy::manual_contains)]
    pub fn from_ideal(nvars: usize, gens: &[Monomial]) -> Result<SimplicialComplexModel> {
        if nvars > 64 {
            return Err(Error::ResourceCap {
                what: "simplicial complex variables",
                size: nvars,
                cap: 64,
            });
        }
        let mut masks = vec![];
        for g in gens {
            if !g.is_squarefree() {
                return Err(Error::InvalidParameter(format!(
                    "non-squarefree generator {g:?}"
                )));
            }
            if g.degree() == 0 {
                return Err(Error::InvalidParameter("unit generator".into()));
            }
            masks.push(g.support_mask());
        }
        masks.sort_by_key(|m| m.count_ones());
        let mut minimal: Vec<u64> = vec![];
        for m in masks {
            if !minimal.iter().any(|&s| m & s == s) {
                minimal.push(m);
            }
        }
        minimal.sort_unstable();
        Ok(SimplicialComplexModel {
            nvars,
            nonfaces: minimal,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal non-faces as vertex masks (bit i = variable i).
    pub fn nonfaces(&self) -> &[u64] {
        &self.nonfaces
    }

    pub fn is_face(&self, mask: u64) -> bool {
        self.nonfaces.iter().all(|&nf| mask & nf != nf)
    }

    /// Maximal faces, by exhaustive sweep; intended for small models.
    pub fn facets(&self) -> Vec<u64> {
        let full = if self.nvars == 64 {
            u64::MAX
        } else {
            (1u64 << self.nvars) - 1
        };
        let mut facets = vec![];
        for mask in 0..=full {
            if self.is_face(mask)
                && (0..self.nvars)
                    .all(|v| mask >> v & 1 == 1 || !self.is_face(mask | 1 << v))
            {
                facets.push(mask);
            }
        }
        facets
    }
}

/// Highest degree h (possibly −1) with H~_h(Δ|_m; K) ≠ 0, where Δ|_m is the
/// complex on the vertices of `m` with the given non-faces (all ⊆ m), or
/// None when every reduced homology group vanishes.
fn max_homology_degree<F: Field>(m: u64, nonfaces: &[u64], one: &F) -> Option<i32> {
    // faces grouped by cardinality; face = submask of m avoiding non-faces
    let k = m.count_ones() as usize;
    let mut by_size: Vec<Vec<u64>> = vec![vec![]; k + 1];
    let mut sub = m;
    loop {
        let f = m & !sub; // enumerate complements so ∅ comes first
        if nonfaces.iter().all(|&nf| f & nf != nf) {
            by_size[f.count_ones() as usize].push(f);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & m;
    }
    for faces in &mut by_size {
        faces.sort_unstable();
    }
    // rank of the boundary map from size-s faces down to size-(s−1) faces
    let mut ranks = vec![0usize; k + 2];
    for s in 1..=k {
        if by_size[s].is_empty() {
            continue;
        }
        let index: HashMap<u64, u32> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i as u32))
            .collect();
        let rows = by_size[s].iter().map(|&f| {
            let mut row = vec![];
            let mut sign = one.clone();
            // vertices from highest bit to lowest so removing the i-th
            // smallest vertex carries sign (−1)^i; order of row entries is
            // fixed up by sorting below
            let mut rem = f;
            let mut signs = vec![];
            while rem != 0 {
                let v = 63 - rem.leading_zeros();
                signs.push((v, f & !(1u64 << v)));
                rem &= !(1u64 << v);
            }
            signs.reverse();
            for (_, face) in signs {
                if let Some(&col) = index.get(&face) {
                    row.push((col, sign.clone()));
                }
                sign = sign.neg();
            }
            row.sort_by_key(|e| e.0);
            row
        });
        ranks[s] = sparse_rank(rows);
    }
    let mut best = None;
    for s in 0..=k {
        let betti = by_size[s].len() - ranks[s] - ranks[s + 1];
        if betti > 0 {
            best = Some(s as i32 - 1);
        }
    }
    best
}

/// reg(R/I) for a squarefree monomial ideal over GF(32003).
pub fn reg_monomial(nvars: usize, gens: &[Monomial], caps: &Caps) -> Result<usize> {
    reg_monomial_field(nvars, gens, &Fp::new(1, DEFAULT_PRIME), caps)
}

/// reg(R/I) over an arbitrary coefficient field. Sweeps all subsets σ of
/// the variables actually appearing in minimal generators; subsets with a
/// vertex in no contained non-face are cone-contractible and skipped, and
/// the rest split into join factors along the connected components of the
/// contained non-faces, whose top homology degrees add (+1 each).
pub fn reg_monomial_field<F: Field>(
    nvars: usize,
    gens: &[Monomial],
    one: &F,
    caps: &Caps,
) -> Result<usize> {
    if nvars > caps.hochster_variables {
        return Err(Error::ResourceCap {
            what: "regularity variables",
            size: nvars,
            cap: caps.hochster_variables,
        });
    }
    let model = SimplicialComplexModel::from_ideal(nvars, gens)?;
    let support: u64 = model.nonfaces().iter().fold(0, |a, &b| a | b);
    // first sweep: collect the connected covered component masks needing a
    // homology computation
    let mut needed: HashSet<u64> = HashSet::new();
    let mut sigmas: Vec<Vec<u64>> = vec![];
    let mut sub = support;
    loop {
        let sigma = support & !sub;
        if let Some(comps) = split_components(sigma, model.nonfaces()) {
            for &c in &comps {
                needed.insert(c);
            }
            sigmas.push(comps);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & support;
    }
    let needed: Vec<u64> = {
        let mut v: Vec<u64> = needed.into_iter().collect();
        v.sort_unstable();
        v
    };
    let memo: HashMap<u64, Option<i32>> = needed
        .par_iter()
        .map(|&m| {
            let local: Vec<u64> = model
                .nonfaces()
                .iter()
                .copied()
                .filter(|&nf| nf & m == nf)
                .collect();
            (m, max_homology_degree(m, &local, one))
        })
        .collect();
    let mut reg = 0i64;
    for comps in sigmas {
        let mut total = 0i64;
        let mut alive = true;
        for c in comps {
            match memo[&c] {
                Some(h) => total += h as i64 + 1,
                None => {
                    alive = false;
                    break;
                }
            }
        }
        if alive {
            reg = reg.max(total);
        }
    }
    Ok(reg as usize)
}

/// Splits σ into the connected components of the non-faces contained in it.
/// Returns None when some vertex of σ lies in no contained non-face (a cone
/// point: the induced subcomplex is contractible).
fn split_components(sigma: u64, nonfaces: &[u64]) -> Option<Vec<u64>> {
    let contained: Vec<u64> = nonfaces
        .iter()
        .copied()
        .filter(|&nf| nf & sigma == nf)
        .collect();
    let covered = contained.iter().fold(0u64, |a, &b| a | b);
    if covered != sigma {
        return None;
    }
    let mut comps: Vec<u64> = vec![];
    for nf in contained {
        let mut merged = nf;
        comps.retain(|&c| {
            if c & merged != 0 {
                merged |= c;
                false
            } else {
                true
            }
        });
        comps.push(merged);
    }
    // merging is order-sensitive; iterate until stable
    loop {
        let mut changed = false;
        let mut next: Vec<u64> = vec![];
        'outer: for c in comps.drain(..) {
            for n in next.iter_mut() {
                if *n & c != 0 {
                    *n |= c;
                    changed = true;
                    continue 'outer;
                }
            }
            next.push(c);
        }
        comps = next;
        if !changed {
            break;
        }
    }
    comps.sort_unstable();
    Some(comps)
}

/// reg(R/J_G) through the squarefree lex initial ideal (imported equality;
/// see the module docs).
pub fn reg_binomial(g: &Graph, caps: &Caps) -> Result<usize> {
    g.ensure_connected()?;
    let ideal = BinomialEdgeIdeal::new(g.clone(), Fp::new(1, DEFAULT_PRIME));
    let leads = ideal.initial_ideal(caps)?;
    reg_monomial(ideal.var_space().nvars(), &leads, caps)
}

/// reg(R/I(G)) for a chordal graph: the induced matching number.
pub fn reg_chordal_edge(g: &Graph) -> Result<usize> {
    if !g.is_chordal() {
        return Err(Error::InvalidParameter(
            "edge-ideal regularity formula requires a chordal graph".into(),
        ));
    }
    Ok(g.induced_matching_number())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::field::Rat;
    use crate::ideals::MonomialEdgeIdeal;

    fn edge_gens(g: &Graph) -> (usize, Vec<Monomial>) {
        let ideal = MonomialEdgeIdeal::new(g.clone());
        (g.n(), ideal.generators())
    }

    #[test]
    fn model_basics() {
        let (n, gens) = edge_gens(&Graph::path(3));
        let model = SimplicialComplexModel::from_ideal(n, &gens).unwrap();
        assert_eq!(model.nonfaces().len(), 2);
        assert!(model.is_face(0b101));
        assert!(!model.is_face(0b011));
        // facets of Ind(P_3): {1,3} and {2}
        assert_eq!(model.facets(), vec![0b010, 0b101]);
    }

    #[test]
    fn single_quadric() {
        let m = Monomial::var(0, 2).mul(&Monomial::var(1, 2));
        assert_eq!(reg_monomial(2, &[m], &Caps::default()).unwrap(), 1);
    }

    #[test]
    fn zero_ideal_and_linear() {
        assert_eq!(reg_monomial(3, &[], &Caps::default()).unwrap(), 0);
        assert_eq!(
            reg_monomial(3, &[Monomial::var(1, 3)], &Caps::default()).unwrap(),
            0
        );
    }

    #[test]
    fn path_edge_ideals() {
        let (n, gens) = edge_gens(&Graph::path(5));
        assert_eq!(reg_monomial(n, &gens, &Caps::default()).unwrap(), 2);
        let (n, gens) = edge_gens(&Graph::path(4));
        assert_eq!(reg_monomial(n, &gens, &Caps::default()).unwrap(), 1);
    }

    #[test]
    fn rational_and_prime_field_agree() {
        for g in [Graph::path(5), Graph::cycle(5), Graph::star(3)] {
            let (n, gens) = edge_gens(&g);
            let fp = reg_monomial(n, &gens, &Caps::default()).unwrap();
            let qq =
                reg_monomial_field(n, &gens, &Rat::from_i64(1), &Caps::default()).unwrap();
            assert_eq!(fp, qq);
        }
    }

    #[test]
    fn initial_ideal_of_complete_graphs() {
        let caps = Caps::default();
        for n in 2..=4 {
            assert_eq!(reg_binomial(&Graph::complete(n), &caps).unwrap(), 1);
        }
    }

    #[test]
    fn binomial_path_is_complete_intersection() {
        let caps = Caps::default();
        assert_eq!(reg_binomial(&Graph::path(3), &caps).unwrap(), 2);
        assert_eq!(reg_binomial(&Graph::path(4), &caps).unwrap(), 3);
    }

    #[test]
    fn whiskered_complete_formula() {
        let caps = Caps::default();
        let g = FamilySpec::WhiskeredComplete {
            m: 4,
            counts: vec![1, 1, 1, 0],
        }
        .build()
        .unwrap()
        .graph;
        assert_eq!(reg_binomial(&g, &caps).unwrap(), 4);
    }

    #[test]
    fn chordal_edge_regularity_matches_hochster() {
        let caps = Caps::default();
        for g in [
            Graph::path(4),
            Graph::path(6),
            Graph::star(4),
            Graph::complete(5),
            FamilySpec::Hkm { k: 2, m: 2 }.build().unwrap().graph,
        ] {
            let (n, gens) = edge_gens(&g);
            assert_eq!(
                reg_chordal_edge(&g).unwrap(),
                reg_monomial(n, &gens, &caps).unwrap()
            );
        }
        assert!(reg_chordal_edge(&Graph::cycle(4)).is_err());
    }

    #[test]
    fn hkm_edge_regularity() {
        let g = FamilySpec::Hkm { k: 2, m: 3 }.build().unwrap().graph;
        assert_eq!(reg_chordal_edge(&g).unwrap(), 3);
        let (n, gens) = edge_gens(&g);
        assert_eq!(reg_monomial(n, &gens, &Caps::default()).unwrap(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let err = reg_monomial(25, &[], &Caps::default()).unwrap_err();
        assert!(matches!(err, Error::ResourceCap { .. }));
    }
}
