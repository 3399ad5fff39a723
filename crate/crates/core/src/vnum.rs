//! The v-number engine: a brute-force graded oracle for local v-numbers,
//! the combinatorial v_∅ computation, the explicit witness constructions,
//! and the monomial-edge-ideal v-number.
//!
//! Oracle characterization. J_G is radical with minimal primes {P_T : T a
//! cut set}, so (J_G : f) = ∩_{T : f ∉ P_T} P_T. Hence (J_G : f) = P_S
//! exactly when f ∈ P_T for every T ≠ S and f ∉ P_S. The degree-d search
//! space is taken modulo (J_G)_d — adding an element of J_G to f never
//! changes the colon — and is spanned by the standard monomials of the
//! initial ideal. On that span, membership in every P_T simultaneously
//! forces membership in J_G, i.e. the zero class; so any nonzero element of
//! ∩_{T ≠ S} ker(π_T) automatically avoids P_S and is a witness.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::field::{Field, Fp, Rat, DEFAULT_PRIME};
use crate::graph::{vertices_to_mask, CliquePathStructure, Graph};
use crate::ideals::{edge_binomial, BinomialEdgeIdeal, MonomialEdgeIdeal, PrimeComponent};
use crate::linalg::SparseEliminator;
use crate::poly::{monomials_of_degree, Monomial, Polynomial, VarSpace};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Result of one local oracle run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalReport {
    pub cut_set: Vec<usize>,
    /// Local v-number, when found within the degree cap.
    pub value: Option<usize>,
    pub method: String,
    /// Witness in display form, when one was extracted.
    pub witness: Option<String>,
    /// Colon certificate over the search field.
    pub certified_fp: Option<bool>,
    /// Rational re-verification (run for the global minimizer).
    pub certified_qq: Option<bool>,
    pub d_max: usize,
}

/// Full per-graph v-number report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VReport {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub field: String,
    pub d_max: usize,
    pub locals: Vec<LocalReport>,
    /// min over computed locals; None when every local exceeded the cap.
    pub global: Option<usize>,
    /// True when every local value was resolved within the cap.
    pub complete: bool,
}

struct DegreeData {
    monomials: Vec<Monomial>,
    /// per standard monomial: sorted (column, prime index) pairs, one for
    /// each prime the monomial survives in
    rows: Vec<Vec<(u32, u32)>>,
}

/// Oracle engine bound to one graph over one search prime.
pub struct VnumEngine {
    ideal: BinomialEdgeIdeal<Fp>,
    caps: Caps,
    primes: Vec<PrimeComponent<Fp>>,
    lead_supports: Vec<u64>,
}

impl VnumEngine {
    pub fn new(graph: Graph, caps: Caps) -> Result<VnumEngine> {
        Self::with_modulus(graph, DEFAULT_PRIME, caps)
    }

    pub fn with_modulus(graph: Graph, p: u64, caps: Caps) -> Result<VnumEngine> {
        graph.ensure_connected()?;
        let ideal = BinomialEdgeIdeal::new(graph, Fp::new(1, p));
        let primes = ideal.minimal_primes(&caps)?;
        let mut lead_supports = vec![];
        for lead in ideal.groebner_basis(&caps)?.leads() {
            if !lead.is_squarefree() {
                return Err(Error::Disagreement(
                    "initial ideal of a binomial edge ideal must be squarefree".into(),
                ));
            }
            lead_supports.push(lead.support_mask());
        }
        Ok(VnumEngine {
            ideal,
            caps,
            primes,
            lead_supports,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.ideal.graph()
    }

    pub fn ideal(&self) -> &BinomialEdgeIdeal<Fp> {
        &self.ideal
    }

    pub fn primes(&self) -> &[PrimeComponent<Fp>] {
        &self.primes
    }

    pub fn prime_index(&self, cut_set: &[usize]) -> Option<usize> {
        let mut s: Vec<usize> = cut_set.to_vec();
        s.sort_unstable();
        self.primes.iter().position(|p| p.cut_set().vertices == s)
    }

    /// Monomials of degree d outside in_<(J_G): support contains no lead
    /// support (leads are squarefree, so divisibility is support inclusion).
    #[allow(clippy::manual_contains)] // subset test, not membership
    fn standard_monomials(&self, d: usize) -> Result<Vec<Monomial>> {
        let all = monomials_of_degree(self.ideal.var_space().nvars(), d);
        if all.len() > self.caps.graded_dimension {
            return Err(Error::ResourceCap {
                what: "graded monomial basis",
                size: all.len(),
                cap: self.caps.graded_dimension,
            });
        }
        Ok(all
            .into_iter()
            .filter(|m| {
                let s = m.support_mask();
                !self.lead_supports.iter().any(|&l| l & s == l)
            })
            .collect())
    }

    /// Image of a monomial in R/P_T, reduced to its canonical standard
    /// monomial: zero when the monomial meets a cut-set variable; otherwise,
    /// per component of G∖T, the combined index multiset is reassigned with
    /// the smallest indices on y and the largest on x (the normal form under
    /// the complete-graph basis x_u y_v → x_v y_u for u < v).
    fn fiber_image(&self, prime: &PrimeComponent<Fp>, m: &Monomial) -> Option<Monomial> {
        let vs = self.ideal.var_space();
        for &s in &prime.cut_set().vertices {
            if m.0[vs.x(s)] > 0 || m.0[vs.y(s)] > 0 {
                return None;
            }
        }
        let mut out = m.clone();
        for comp in &prime.cut_set().components {
            let mut indices: Vec<usize> = vec![];
            let mut ycount = 0usize;
            for &v in comp {
                for _ in 0..m.0[vs.x(v)] {
                    indices.push(v);
                }
                for _ in 0..m.0[vs.y(v)] {
                    indices.push(v);
                    ycount += 1;
                }
                out.0[vs.x(v)] = 0;
                out.0[vs.y(v)] = 0;
            }
            indices.sort_unstable();
            for (pos, &v) in indices.iter().enumerate() {
                if pos < ycount {
                    out.0[vs.y(v)] += 1;
                } else {
                    out.0[vs.x(v)] += 1;
                }
            }
        }
        Some(out)
    }

    fn degree_data(&self, d: usize) -> Result<DegreeData> {
        let monomials = self.standard_monomials(d)?;
        // per prime: canonical image -> image id; columns are laid out per
        // prime in blocks of 2^24
        assert!(self.primes.len() < (1 << 8));
        let image_tables: Vec<Vec<Option<u32>>> = self
            .primes
            .par_iter()
            .map(|p| {
                let mut ids: HashMap<Monomial, u32> = HashMap::new();
                monomials
                    .iter()
                    .map(|m| {
                        self.fiber_image(p, m).map(|img| {
                            let next = ids.len() as u32;
                            *ids.entry(img).or_insert(next)
                        })
                    })
                    .collect()
            })
            .collect();
        let rows = (0..monomials.len())
            .map(|i| {
                let mut row = vec![];
                for (t, table) in image_tables.iter().enumerate() {
                    if let Some(id) = table[i] {
                        assert!(id < (1 << 24));
                        row.push((((t as u32) << 24) | id, t as u32));
                    }
                }
                row
            })
            .collect();
        Ok(DegreeData { monomials, rows })
    }

    /// Nonzero element of ∩_{T ≠ S} ker(π_T) on the degree-d standard span,
    /// if one exists.
    fn kernel_witness(&self, s_idx: usize, data: &DegreeData) -> Option<Polynomial<Fp>> {
        let one = *self.ideal.one();
        let mut el = SparseEliminator::new(one, true);
        for (i, row) in data.rows.iter().enumerate() {
            let sparse: Vec<(u32, Fp)> = row
                .iter()
                .filter(|&&(_, t)| t as usize != s_idx)
                .map(|&(c, _)| (c, one))
                .collect();
            if let Some(combo) = el.push(sparse, i as u32) {
                let mut f = Polynomial::zero();
                for (label, c) in combo {
                    f.add_term(data.monomials[label as usize].clone(), c);
                }
                return Some(f);
            }
        }
        None
    }

    /// Least degree d ≤ d_max admitting a witness for (J_G : f) = P_S,
    /// together with the extracted witness. None when the cap is reached.
    pub fn local_v_oracle(
        &self,
        s_idx: usize,
        d_max: usize,
    ) -> Result<Option<(usize, Polynomial<Fp>)>> {
        for d in 0..=d_max {
            let data = self.degree_data(d)?;
            if let Some(f) = self.kernel_witness(s_idx, &data) {
                return Ok(Some((d, f)));
            }
        }
        Ok(None)
    }

    /// Sound default degree cap: the global v-number never exceeds v_∅.
    pub fn default_d_max(&self) -> Result<usize> {
        Ok(self.v_empty()? + 1)
    }

    /// Full oracle sweep over every cut set up to `d_max` (default
    /// v_∅ + 1). Witnesses are certified over GF(p); the witness attaining
    /// the global minimum is re-verified over the rationals.
    pub fn v_oracle(&self, d_max: Option<usize>) -> Result<VReport> {
        let d_max = match d_max {
            Some(d) => d,
            None => self.default_d_max()?,
        };
        let mut found: Vec<Option<(usize, Polynomial<Fp>)>> = vec![None; self.primes.len()];
        for d in 0..=d_max {
            if found.iter().all(|f| f.is_some()) {
                break;
            }
            let data = self.degree_data(d)?;
            let hits: Vec<(usize, Polynomial<Fp>)> = (0..self.primes.len())
                .into_par_iter()
                .filter(|i| found[*i].is_none())
                .filter_map(|i| self.kernel_witness(i, &data).map(|f| (i, f)))
                .collect();
            for (i, f) in hits {
                found[i] = Some((d, f));
            }
        }
        let mut locals = vec![];
        let mut global: Option<usize> = None;
        let mut global_idx = None;
        for (i, entry) in found.iter().enumerate() {
            let (value, witness, certified_fp) = match entry {
                Some((d, f)) => {
                    let cert = self
                        .ideal
                        .colon_certificate_check(&self.primes[i], f, &self.caps)?;
                    if !cert.accepted {
                        return Err(Error::Disagreement(format!(
                            "oracle witness failed its own colon certificate at cut set {:?}",
                            self.primes[i].cut_set().vertices
                        )));
                    }
                    if global.is_none_or(|g| *d < g) {
                        global = Some(*d);
                        global_idx = Some(i);
                    }
                    (
                        Some(*d),
                        Some(f.display(self.ideal.var_space())),
                        Some(true),
                    )
                }
                None => (None, None, None),
            };
            locals.push(LocalReport {
                cut_set: self.primes[i].cut_set().vertices.clone(),
                value,
                method: "oracle".into(),
                witness,
                certified_fp,
                certified_qq: None,
                d_max,
            });
        }
        if let Some(i) = global_idx {
            let f = &found[i].as_ref().unwrap().1;
            locals[i].certified_qq = Some(self.confirm_rational(i, f)?);
            if locals[i].certified_qq != Some(true) {
                return Err(Error::Disagreement(
                    "rational re-verification of the minimal witness failed".into(),
                ));
            }
        }
        let g = self.graph();
        Ok(VReport {
            n: g.n(),
            edges: g.edges().to_vec(),
            field: self.ideal.one().name(),
            d_max,
            global,
            complete: locals.iter().all(|l| l.value.is_some()),
            locals,
        })
    }

    /// Lifts a GF(p) witness through the symmetric range and re-runs the
    /// colon certificate over the rationals.
    pub fn confirm_rational(&self, s_idx: usize, f: &Polynomial<Fp>) -> Result<bool> {
        let lifted = f.map_coeffs(|c| Rat::from_i64(c.symmetric_lift()));
        let ideal_q = BinomialEdgeIdeal::new(self.graph().clone(), Rat::from_i64(1));
        let prime_q = PrimeComponent::new(
            ideal_q.var_space(),
            &Rat::from_i64(1),
            self.primes[s_idx].cut_set().clone(),
        );
        Ok(ideal_q
            .colon_certificate_check(&prime_q, &lifted, &self.caps)?
            .accepted)
    }

    /// Certificate check of a caller-supplied witness against a cut set,
    /// over both GF(p) and the rationals.
    pub fn certify_witness(&self, cut_set: &[usize], f: &Polynomial<Fp>) -> Result<bool> {
        let idx = self
            .prime_index(cut_set)
            .ok_or_else(|| Error::InvalidCutSet(format!("{cut_set:?}")))?;
        let fp_ok = self
            .ideal
            .colon_certificate_check(&self.primes[idx], f, &self.caps)?
            .accepted;
        Ok(fp_ok && self.confirm_rational(idx, f)?)
    }

    /// v_∅: minimum connected dominating set size (0 for complete graphs),
    /// cross-checked against the minimum degree of a monomial lying in m_S
    /// for every nonempty cut set S.
    pub fn v_empty(&self) -> Result<usize> {
        let g = self.graph();
        let a = g.min_connected_dominating_set_size(&self.caps)?;
        let nonempty: Vec<u64> = self
            .primes
            .iter()
            .filter(|p| !p.cut_set().is_empty())
            .map(|p| p.cut_set().mask())
            .collect();
        let b = min_hitting_set_size(g.n(), &nonempty);
        if a != b {
            return Err(Error::Disagreement(format!(
                "v_empty routes disagree: connected domination {a} vs monomial intersection {b}"
            )));
        }
        Ok(a)
    }
}

/// Smallest subset of [n] meeting every mask (0 when the family is empty).
fn min_hitting_set_size(n: usize, masks: &[u64]) -> usize {
    if masks.is_empty() {
        return 0;
    }
    for size in 1..=n {
        let mut stack = vec![(0u64, 1usize, 0usize)];
        while let Some((mask, start, cnt)) = stack.pop() {
            if cnt == size {
                if masks.iter().all(|&m| m & mask != 0) {
                    return size;
                }
                continue;
            }
            for v in start..=n {
                stack.push((mask | (1 << (v - 1)), v + 1, cnt + 1));
            }
        }
    }
    n
}

/// Witness f_S · f_{D_S} for a cut set of a Cohen-Macaulay closed graph.
///
/// Each s ∈ S is split by how many unremoved clique-path cut vertices stay
/// adjacent: two (pair them), one (pair with a smallest non-cut
/// non-adjacent neighbour), or none (pair two non-adjacent non-cut
/// neighbours). D_S collects cut vertices untouched by S and N(S).
pub fn witness_cm_closed<F: Field>(
    g: &Graph,
    structure: &CliquePathStructure,
    cut_set: &[usize],
    one: &F,
) -> Result<Polynomial<F>> {
    let vs = VarSpace::binomial(g.n());
    let tilde_mask = vertices_to_mask(structure.tilde_c());
    let s_mask = vertices_to_mask(cut_set);
    if s_mask & !tilde_mask != 0 {
        return Err(Error::InvalidCutSet(format!(
            "{cut_set:?} is not contained in the clique-path cut vertices"
        )));
    }
    let mut f = Polynomial::monomial(Monomial::one(vs.nvars()), one.clone());
    for &s in cut_set {
        let nb = g.neighbors_mask(s) & !s_mask;
        let cut_nb = crate::graph::mask_to_vertices(nb & tilde_mask);
        let free_nb = crate::graph::mask_to_vertices(nb & !tilde_mask);
        let (a, b) = match cut_nb.len() {
            2 => (cut_nb[0], cut_nb[1]),
            1 => {
                let v = cut_nb[0];
                let partner = free_nb
                    .iter()
                    .copied()
                    .find(|&u| !g.has_edge(v, u))
                    .ok_or_else(|| {
                        Error::WitnessConstruction(format!("no partner for {s} beside {v}"))
                    })?;
                (v, partner)
            }
            0 => {
                let mut pair = None;
                'outer: for (i, &u) in free_nb.iter().enumerate() {
                    for &w in &free_nb[i + 1..] {
                        if !g.has_edge(u, w) {
                            pair = Some((u, w));
                            break 'outer;
                        }
                    }
                }
                pair.ok_or_else(|| {
                    Error::WitnessConstruction(format!("no non-adjacent pair around {s}"))
                })?
            }
            _ => {
                return Err(Error::WitnessConstruction(format!(
                    "cut vertex {s} keeps {} clique-path neighbours",
                    cut_nb.len()
                )))
            }
        };
        if g.has_edge(a, b) {
            return Err(Error::WitnessConstruction(format!(
                "selected partners {a},{b} are adjacent"
            )));
        }
        f = f.mul(&edge_binomial(&vs, one, a, b));
    }
    let mut touched = s_mask;
    for &s in cut_set {
        touched |= g.neighbors_mask(s);
    }
    let d_s = crate::graph::mask_to_vertices(tilde_mask & !touched);
    for &v in &d_s {
        f = f.mul_term(&Monomial::var(vs.x(v), vs.nvars()), one);
    }
    debug_assert_eq!(f.degree().unwrap(), 2 * cut_set.len() + d_s.len());
    Ok(f)
}

/// Local v-number of a Cohen-Macaulay closed graph at a cut set S ⊆ C̃:
/// 2|S| + |D_S|, with the (t−1) + |S| − |N_S| form cross-asserted.
pub fn v_cm_closed_local(g: &Graph, structure: &CliquePathStructure, cut_set: &[usize]) -> usize {
    let tilde = vertices_to_mask(structure.tilde_c());
    let s_mask = vertices_to_mask(cut_set);
    let mut nbhd = 0u64;
    for &s in cut_set {
        nbhd |= g.neighbors_mask(s);
    }
    let d_s = (tilde & !s_mask & !nbhd).count_ones() as usize;
    let value = 2 * cut_set.len() + d_s;
    let n_s = (nbhd & !s_mask & tilde).count_ones() as usize;
    debug_assert_eq!(value, structure.t() - 1 + cut_set.len() - n_s);
    value
}

/// Witness ∏_{s ∈ S} f_{s⁻ s⁺} · ∏_{interior} x_i for a nonempty cut set
/// of the cycle on n vertices: each s contributes the binomial on its two
/// cycle neighbours, and every non-leaf vertex of the remaining path
/// components contributes its x-variable.
pub fn witness_cycle<F: Field>(n: usize, cut_set: &[usize], one: &F) -> Result<Polynomial<F>> {
    if cut_set.is_empty() {
        return Err(Error::InvalidParameter(
            "cycle witness recipe needs a nonempty cut set".into(),
        ));
    }
    let g = Graph::cycle(n);
    if !g.is_cut_set(cut_set) {
        return Err(Error::InvalidCutSet(format!("{cut_set:?}")));
    }
    let vs = VarSpace::binomial(n);
    let mut f = Polynomial::monomial(Monomial::one(vs.nvars()), one.clone());
    for &s in cut_set {
        let prev = if s == 1 { n } else { s - 1 };
        let next = if s == n { 1 } else { s + 1 };
        f = f.mul(&edge_binomial(&vs, one, prev, next));
    }
    let rest = g.full_mask() & !vertices_to_mask(cut_set);
    for comp in g.components_in(rest) {
        for &v in &comp {
            let deg_inside =
                (g.neighbors_mask(v) & vertices_to_mask(&comp)).count_ones() as usize;
            if deg_inside == 2 {
                f = f.mul_term(&Monomial::var(vs.x(v), vs.nvars()), one);
            }
        }
    }
    Ok(f)
}

/// Recursive binary-tree witness: levels are peeled three at a time. For
/// level m ≥ 3 the cut set gains the 2^(m−2) vertices at level m−2 and the
/// witness gains the binomial on the two children of each, on top of the
/// witness for the subtree of levels 0..m−3. Bases: level 0 → (∅, 1),
/// level 1 → (∅, x_root), level 2 → ({root}, f on the root's children).
pub fn witness_binary_tree<F: Field>(
    level: usize,
    one: &F,
) -> Result<(Vec<usize>, Polynomial<F>)> {
    let total = (1usize
        .checked_shl(level as u32 + 1)
        .ok_or_else(|| Error::InvalidParameter("binary tree level too large".into()))?)
        - 1;
    if total > 64 {
        return Err(Error::InvalidParameter(format!(
            "binary tree level {level} needs {total} vertices"
        )));
    }
    let vs = VarSpace::binomial(total);
    fn rec<F: Field>(m: usize, vs: &VarSpace, one: &F) -> (Vec<usize>, Polynomial<F>) {
        match m {
            0 => (vec![], Polynomial::monomial(Monomial::one(vs.nvars()), one.clone())),
            1 => (
                vec![],
                Polynomial::monomial(Monomial::var(vs.x(1), vs.nvars()), one.clone()),
            ),
            2 => (vec![1], edge_binomial(vs, one, 2, 3)),
            _ => {
                let (mut s, mut f) = rec(m - 3, vs, one);
                for v in (1usize << (m - 2))..(1usize << (m - 1)) {
                    s.push(v);
                    f = f.mul(&edge_binomial(vs, one, 2 * v, 2 * v + 1));
                }
                (s, f)
            }
        }
    }
    let (mut s, f) = rec(level, &vs, one);
    s.sort_unstable();
    Ok((s, f))
}

/// Degree-k witness at the hub cut set {v} of G(k,r):
/// (∏_{i ≤ k−2} x_{claw-centre i}) · f on the centres of claws k−1 and k.
pub fn witness_gkr<F: Field>(k: usize, r: usize, one: &F) -> Result<(Vec<usize>, Polynomial<F>)> {
    if k < 2 {
        return Err(Error::InvalidParameter("G(k,r) witness needs k >= 2".into()));
    }
    let n = 1 + 3 * k + 2 * r;
    let vs = VarSpace::binomial(n);
    // claw centre i has label 3i
    let mut f = edge_binomial(&vs, one, 3 * (k - 1), 3 * k);
    for i in 1..=(k - 2) {
        f = f.mul_term(&Monomial::var(vs.x(3 * i), vs.nvars()), one);
    }
    Ok((vec![1], f))
}

/// v-number of the monomial edge ideal: the smallest independent set A
/// with (I(G) : X_A) = (N_G(A)) and N_G(A) a minimal vertex cover.
pub fn v_monomial(g: &Graph, caps: &Caps) -> Result<(usize, Vec<usize>)> {
    if g.edges().is_empty() {
        return Err(Error::InvalidParameter(
            "monomial v-number needs at least one edge".into(),
        ));
    }
    let ideal = MonomialEdgeIdeal::new(g.clone());
    let n = g.n();
    if n > caps.hochster_variables {
        return Err(Error::ResourceCap {
            what: "independent set sweep",
            size: n,
            cap: caps.hochster_variables,
        });
    }
    let edges = g.edges();
    for size in 1..=n {
        let mut best: Option<Vec<usize>> = None;
        let mut stack = vec![(0u64, 1usize, 0usize)];
        while let Some((mask, start, cnt)) = stack.pop() {
            if best.is_some() {
                break;
            }
            if cnt == size {
                let a = crate::graph::mask_to_vertices(mask);
                let colon = ideal.monomial_colon(&a)?;
                if !colon.edges.is_empty() {
                    continue;
                }
                // N(A) covers; check minimality of the cover
                let nmask = vertices_to_mask(&colon.variables);
                let minimal = colon.variables.iter().all(|&u| {
                    let smaller = nmask & !(1u64 << (u - 1));
                    edges
                        .iter()
                        .any(|&(a, b)| smaller & ((1 << (a - 1)) | (1 << (b - 1))) == 0)
                });
                if minimal {
                    best = Some(a);
                }
                continue;
            }
            // push in reverse so the lexicographically smallest set wins
            for v in (start..=n).rev() {
                let bit = 1u64 << (v - 1);
                if g.neighbors_mask(v) & mask != 0 {
                    continue; // keep A independent
                }
                stack.push((mask | bit, v + 1, cnt + 1));
            }
        }
        if let Some(a) = best {
            return Ok((size, a));
        }
    }
    Err(Error::WitnessConstruction(
        "no independent set with minimal-cover neighbourhood found".into(),
    ))
}

/// Certificate outcome for v(J_{K_n}^k) = 2k − 2.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PowerReport {
    pub n: usize,
    pub k: usize,
    pub value: usize,
    /// f = f_12^(k−1) verified outside (J^k) with J·f inside it.
    pub upper_certified: bool,
    /// Exhaustive lower-bound search (run only at tiny scale).
    pub lower_certified: Option<bool>,
}

/// v-number of the k-th power of the complete-graph binomial edge ideal,
/// certified through f = f_12^(k−1). The lower bound is searched
/// exhaustively only for n = 2 (dimension growth), otherwise reported from
/// the certified upper bound alone.
pub fn v_power_complete(n: usize, k: usize, caps: &Caps) -> Result<PowerReport> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidParameter(
            "power v-number needs n >= 2, k >= 1".into(),
        ));
    }
    let one = Fp::new(1, DEFAULT_PRIME);
    let ideal = BinomialEdgeIdeal::new(Graph::complete(n), one);
    let vs = *ideal.var_space();
    if k == 1 {
        return Ok(PowerReport {
            n,
            k,
            value: 0,
            upper_certified: true,
            lower_certified: Some(true),
        });
    }
    let f = edge_binomial(&vs, &one, 1, 2).pow(k - 1);
    let mut upper = !ideal.power_graded_member(&f, k, caps)?;
    for g in ideal.generators() {
        upper = upper && ideal.power_graded_member(&g.mul(&f), k, caps)?;
    }
    let lower = if n == 2 {
        Some(power_lower_bound_exhaustive(&ideal, k, caps)?)
    } else {
        None
    };
    Ok(PowerReport {
        n,
        k,
        value: 2 * k - 2,
        upper_certified: upper,
        lower_certified: lower,
    })
}

/// No homogeneous f of degree < 2k−2 satisfies J·f ⊆ J^k with f ∉ J^k.
fn power_lower_bound_exhaustive(
    ideal: &BinomialEdgeIdeal<Fp>,
    k: usize,
    caps: &Caps,
) -> Result<bool> {
    use crate::linalg::row_reduce;
    let vs = ideal.var_space();
    let one = *ideal.one();
    for d in 0..(2 * k - 2) {
        let ambient = monomials_of_degree(vs.nvars(), d);
        let target = monomials_of_degree(vs.nvars(), d + 2);
        let col_of: HashMap<&Monomial, usize> =
            target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        // span of (J^k)_{d+2} and (J^k)_d
        let power_rows = |deg: usize, cols: &[Monomial]| -> Result<Vec<Vec<Fp>>> {
            let col: HashMap<&Monomial, usize> =
                cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows = vec![];
            if deg < 2 * k {
                return Ok(rows);
            }
            let mut products: Vec<Polynomial<Fp>> = vec![Polynomial::monomial(
                Monomial::one(vs.nvars()),
                one,
            )];
            for _ in 0..k {
                let mut next = vec![];
                for p in &products {
                    for g in ideal.generators() {
                        next.push(p.mul(g));
                    }
                }
                products = next;
            }
            for p in &products {
                for s in monomials_of_degree(vs.nvars(), deg - 2 * k) {
                    let q = p.mul_term(&s, &one);
                    let mut row = vec![one.zero(); cols.len()];
                    for (m, c) in q.terms() {
                        row[col[m]] = *c;
                    }
                    rows.push(row);
                }
            }
            Ok(rows)
        };
        let mut u = power_rows(d + 2, &target)?;
        row_reduce(&mut u);
        // residual of a vector modulo the span u (rows in echelon form)
        let residual = |v: &mut Vec<Fp>| {
            for row in &u {
                let piv = row.iter().position(|x| !x.is_zero()).unwrap();
                if !v[piv].is_zero() {
                    let c = v[piv];
                    for i in piv..v.len() {
                        let delta = row[i].mul(&c);
                        v[i] = v[i].sub(&delta);
                    }
                }
            }
        };
        // constraint matrix: candidate f = Σ c_m m must have residual 0 for
        // g·m summed, for every generator g
        let mut constraint: Vec<Vec<Fp>> = vec![]; // columns = ambient monomials
        for g in ideal.generators() {
            let mut images: Vec<Vec<Fp>> = vec![];
            for m in &ambient {
                let q = g.mul_term(m, &one);
                let mut v = vec![one.zero(); target.len()];
                for (t, c) in q.terms() {
                    v[col_of[t]] = *c;
                }
                residual(&mut v);
                images.push(v);
            }
            for r in 0..target.len() {
                constraint.push(images.iter().map(|im| im[r]).collect());
            }
        }
        let kernel = nullspace(&constraint, ambient.len(), &one);
        // every kernel vector must already lie in (J^k)_d
        let mut jk_d = power_rows(d, &ambient)?;
        row_reduce(&mut jk_d);
        for v in kernel {
            let mut w = v.clone();
            for row in &jk_d {
                let piv = row.iter().position(|x| !x.is_zero()).unwrap();
                if !w[piv].is_zero() {
                    let c = w[piv];
                    for i in piv..w.len() {
                        let delta = row[i].mul(&c);
                        w[i] = w[i].sub(&delta);
                    }
                }
            }
            if w.iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
        }
        let _ = caps;
    }
    Ok(true)
}

/// Basis of {c : M c = 0} for a dense matrix given by rows over GF(p).
fn nullspace(rows: &[Vec<Fp>], ncols: usize, one: &Fp) -> Vec<Vec<Fp>> {
    let mut mat: Vec<Vec<Fp>> = rows.to_vec();
    crate::linalg::row_reduce(&mut mat);
    let mut pivot_cols = vec![];
    for row in &mat {
        pivot_cols.push(row.iter().position(|x| !x.is_zero()).unwrap());
    }
    let mut basis = vec![];
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![one.zero(); ncols];
        v[free] = *one;
        for (row, &pc) in mat.iter().zip(&pivot_cols) {
            v[pc] = row[free].neg();
        }
        basis.push(v);
    }
    basis
}
