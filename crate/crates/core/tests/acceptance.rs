//! End-to-end acceptance suite: every headline value, bound, witness and
//! characterization is checked against the independent oracle. Each test
//! prints a single pass line; a panic anywhere is a failure of the
//! corresponding criterion.

use std::collections::HashSet;
use std::sync::OnceLock;

use vnum_core::config::Caps;
use vnum_core::families::FamilySpec;
use vnum_core::field::{Fp, Rat, DEFAULT_PRIME};
use vnum_core::formulas::{
    binary_tree_bound, conjecture_cycle, cycle_local_bound, is_v2, v_cm_closed,
    v_cm_closed_local, v_path,
};
use vnum_core::graph::Graph;
use vnum_core::ideals::{buchberger_check, BinomialEdgeIdeal, MonomialEdgeIdeal};
use vnum_core::regularity::{reg_binomial, reg_chordal_edge, reg_monomial};
use vnum_core::report::{certificate_for, lift_witness, verify_certificate};
use vnum_core::vnum::{
    v_monomial, v_power_complete, witness_binary_tree, witness_cycle, witness_gkr, VnumEngine,
};

fn caps() -> Caps {
    Caps::default()
}

fn engine(g: Graph) -> VnumEngine {
    VnumEngine::new(g, caps()).unwrap()
}

/// All connected graphs on 2..=6 vertices, one representative per
/// isomorphism class (canonical form = minimal edge bitmask over all
/// vertex relabellings).
fn connected_graphs_upto_6() -> &'static Vec<Graph> {
    static GRAPHS: OnceLock<Vec<Graph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        let mut out = vec![];
        for n in 2..=6usize {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
                .collect();
            let perms = permutations(n);
            let mut seen: HashSet<u32> = HashSet::new();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                if !g.is_connected() {
                    continue;
                }
                let canon = perms
                    .iter()
                    .map(|p| {
                        let mut code = 0u32;
                        for (i, &(a, b)) in pairs.iter().enumerate() {
                            if mask >> i & 1 == 1 {
                                let (x, y) = (p[a - 1], p[b - 1]);
                                let (x, y) = (x.min(y), x.max(y));
                                let idx = pairs.iter().position(|&e| e == (x, y)).unwrap();
                                code |= 1 << idx;
                            }
                        }
                        code
                    })
                    .min()
                    .unwrap();
                if seen.insert(canon) {
                    out.push(g);
                }
            }
        }
        out
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut items: Vec<usize> = (1..=n).collect();
    heap_perm(&mut items, n, &mut out);
    out
}

fn heap_perm(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_perm(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Clique-size tuples of length ≤ 4 whose glued graph has ≤ 8 vertices.
fn clique_size_tuples() -> Vec<Vec<usize>> {
    let mut out = vec![];
    fn rec(prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let vertices =
            prefix.iter().sum::<usize>() - prefix.len().saturating_sub(1);
        if !prefix.is_empty() && vertices <= 8 {
            out.push(prefix.clone());
        }
        if prefix.len() == 4 {
            return;
        }
        for s in 2.. {
            prefix.push(s);
            let v = prefix.iter().sum::<usize>() - (prefix.len() - 1);
            if v > 8 {
                prefix.pop();
                break;
            }
            rec(prefix, out);
            prefix.pop();
        }
    }
    rec(&mut vec![], &mut out);
    out
}

#[test]
fn criterion_01_path_values() {
    let expected = [0usize, 1, 2, 2, 3, 4];
    for (n, &want) in (2..=7).zip(expected.iter()) {
        let report = engine(Graph::path(n)).v_oracle(None).unwrap();
        assert_eq!(report.global, Some(want), "P_{n}");
        assert_eq!(v_path(n).unwrap(), want, "P_{n} closed form");
    }
    println!("criterion 01 (path values P_2..P_7): PASS");
}

#[test]
fn criterion_02_cm_closed_locals() {
    for sizes in clique_size_tuples() {
        let g = FamilySpec::CliquePath { sizes: sizes.clone() }
            .build()
            .unwrap()
            .graph;
        let structure = g.cm_closed_structure().unwrap();
        let eng = engine(g.clone());
        for (idx, prime) in eng.primes().iter().enumerate() {
            let s = &prime.cut_set().vertices;
            let want = v_cm_closed_local(&g, &structure, s);
            let got = eng.local_v_oracle(idx, want).unwrap();
            assert_eq!(
                got.map(|(d, _)| d),
                Some(want),
                "sizes {sizes:?} cut set {s:?}"
            );
        }
        // the global closed form is attained at its optimal cut set
        let (value, s0) = v_cm_closed(&structure);
        assert_eq!(v_cm_closed_local(&g, &structure, &s0), value);
    }
    // the five-clique example graph: v = 3 at S_0 = {v_2}
    let g = FamilySpec::CliquePath { sizes: vec![4, 3, 2, 4, 2] }
        .build()
        .unwrap()
        .graph;
    let structure = g.cm_closed_structure().unwrap();
    let v2 = structure.cut_vertices[1];
    let eng = engine(g);
    let report = eng.v_oracle(Some(3)).unwrap();
    assert_eq!(report.global, Some(3));
    let local = report
        .locals
        .iter()
        .find(|l| l.cut_set == vec![v2])
        .unwrap();
    assert_eq!(local.value, Some(3));
    println!("criterion 02 (clique-path locals vs oracle, <=8 vertices): PASS");
}

#[test]
fn criterion_03_cycles() {
    let eng4 = engine(Graph::cycle(4));
    for idx in 0..eng4.primes().len() {
        assert_eq!(
            eng4.local_v_oracle(idx, 2).unwrap().map(|(d, _)| d),
            Some(2)
        );
    }
    assert_eq!(eng4.primes().len(), 3);
    let eng5 = engine(Graph::cycle(5));
    for idx in 0..eng5.primes().len() {
        assert_eq!(
            eng5.local_v_oracle(idx, 3).unwrap().map(|(d, _)| d),
            Some(3)
        );
    }
    // C_6: certified witness at {3,6}, oracle value reported against the
    // conjecture without assertion
    let eng6 = engine(Graph::cycle(6));
    let f = witness_cycle(6, &[3, 6], &Fp::new(1, DEFAULT_PRIME)).unwrap();
    assert_eq!(f.degree(), Some(4));
    assert!(eng6.certify_witness(&[3, 6], &f).unwrap());
    assert_eq!(cycle_local_bound(6, &[3, 6]).unwrap(), 4);
    let r6 = eng6.v_oracle(Some(4)).unwrap();
    let g6 = r6.global.expect("C_6 value within bound 4");
    assert!(g6 <= 4);
    println!(
        "  C_6: oracle {} vs conjecture {}",
        g6,
        conjecture_cycle(6).unwrap()
    );
    let r7 = engine(Graph::cycle(7)).v_oracle(Some(5)).unwrap();
    println!(
        "  C_7: oracle {:?} vs conjecture {}",
        r7.global,
        conjecture_cycle(7).unwrap()
    );
    println!("criterion 03 (cycle locals, C_6 witness, conjecture report): PASS");
}

#[test]
fn criterion_04_v2_characterization() {
    let mut checked = 0usize;
    for g in connected_graphs_upto_6() {
        let report = engine(g.clone()).v_oracle(Some(2)).unwrap();
        let oracle_two = report.global == Some(2);
        let characterized = is_v2(g).is_some();
        assert_eq!(
            oracle_two, characterized,
            "v=2 mismatch on n={} edges {:?}",
            g.n(),
            g.edges()
        );
        checked += 1;
    }
    println!("criterion 04 (v=2 characterization on {checked} connected graphs <=6): PASS");
}

#[test]
fn criterion_05_binary_trees() {
    for (level, want) in [(1usize, 1usize), (2, 2)] {
        let g = FamilySpec::BinaryTree { n: level }.build().unwrap().graph;
        let report = engine(g).v_oracle(None).unwrap();
        assert_eq!(report.global, Some(want), "level {level}");
        assert_eq!(binary_tree_bound(level), want);
    }
    // level 3: degree-4 witness certified; oracle value reported
    let g3 = FamilySpec::BinaryTree { n: 3 }.build().unwrap().graph;
    let (cut_set, f) = witness_binary_tree(3, &Fp::new(1, DEFAULT_PRIME)).unwrap();
    assert_eq!(f.degree(), Some(4));
    assert_eq!(binary_tree_bound(3), 4);
    let eng3 = engine(g3);
    assert!(eng3.certify_witness(&cut_set, &f).unwrap());
    match eng3.v_oracle(Some(4)) {
        Ok(r) => println!("  B_3: oracle {:?} (bound 4)", r.global),
        Err(e) => println!("  B_3: oracle skipped ({e})"),
    }
    println!("criterion 05 (binary trees B_1, B_2, B_3 witness): PASS");
}

#[test]
fn criterion_06_gkr_pairs() {
    for (k, r) in [(2usize, 0usize), (2, 1), (3, 0)] {
        let g = FamilySpec::Gkr { k, r }.build().unwrap().graph;
        let eng = engine(g.clone());
        let report = eng.v_oracle(Some(k)).unwrap();
        assert_eq!(report.global, Some(k), "G({k},{r}) v-number");
        let (cut_set, f) = witness_gkr(k, r, &Fp::new(1, DEFAULT_PRIME)).unwrap();
        assert_eq!(f.degree(), Some(k));
        assert!(eng.certify_witness(&cut_set, &f).unwrap());
        assert_eq!(reg_binomial(&g, &caps()).unwrap(), 2 * k + r, "G({k},{r}) reg");
    }
    println!("criterion 06 (G(k,r): v = k, reg = 2k+r): PASS");
}

#[test]
fn criterion_07_monomial_pairs() {
    for (k, m) in [(1usize, 1usize), (2, 2), (2, 3), (3, 3), (3, 4)] {
        let g = FamilySpec::Hkm { k, m }.build().unwrap().graph;
        let (v, _) = v_monomial(&g, &caps()).unwrap();
        assert_eq!(v, k, "H({k},{m}) monomial v-number");
        let gens = MonomialEdgeIdeal::new(g.clone()).generators();
        assert_eq!(
            reg_monomial(g.n(), &gens, &caps()).unwrap(),
            m,
            "H({k},{m}) regularity"
        );
        assert_eq!(reg_chordal_edge(&g).unwrap(), m);
    }
    println!("criterion 07 (H(k,m): monomial v = k, reg = m): PASS");
}

#[test]
fn criterion_08_whisker_regularity() {
    for m in 2..=8usize {
        for l in 1..=m.min(9 - m) {
            let mut counts = vec![0usize; m];
            for c in counts.iter_mut().take(l) {
                *c = 1;
            }
            let g = FamilySpec::WhiskeredComplete { m, counts }
                .build()
                .unwrap()
                .graph;
            assert_eq!(reg_binomial(&g, &caps()).unwrap(), l + 1, "K_{m} with {l} whiskers");
        }
    }
    // multiple whiskers on one vertex still count it once
    let g = FamilySpec::WhiskeredComplete { m: 3, counts: vec![2, 1, 0] }
        .build()
        .unwrap()
        .graph;
    assert_eq!(reg_binomial(&g, &caps()).unwrap(), 3);
    println!("criterion 08 (whiskered complete: reg = l+1, incl. K_4 + 3 -> 4): PASS");
}

#[test]
fn criterion_09_powers() {
    for n in 2..=4usize {
        for k in 1..=3usize {
            let report = v_power_complete(n, k, &caps()).unwrap();
            assert_eq!(report.value, 2 * k - 2, "K_{n}^{k}");
            assert!(report.upper_certified, "K_{n}^{k} upper bound");
            if n == 2 {
                assert_eq!(report.lower_certified, Some(true), "K_2^{k} lower bound");
            }
        }
    }
    println!("criterion 09 (powers of complete: v = 2k-2 certified): PASS");
}

#[test]
fn criterion_10_v_empty() {
    // on clique paths, v_empty equals the number of cut vertices
    for sizes in clique_size_tuples() {
        let g = FamilySpec::CliquePath { sizes: sizes.clone() }
            .build()
            .unwrap()
            .graph;
        let eng = engine(g.clone());
        assert_eq!(
            eng.v_empty().unwrap(),
            g.cm_closed_structure().unwrap().tilde_c().len(),
            "sizes {sizes:?}"
        );
    }
    // additivity under gluing at a vertex simplicial on both sides
    let mut pieces: Vec<(Graph, usize)> = vec![];
    for n in 2..=5usize {
        pieces.push((Graph::path(n), 1)); // path endpoint
        pieces.push((Graph::complete(n), 1)); // any complete vertex
    }
    for m in 2..=4usize {
        pieces.push((Graph::star(m), 2)); // a leaf of the star
    }
    let mut checked = 0usize;
    'outer: for (g1, a) in &pieces {
        for (g2, b) in &pieces {
            if g1.n() + g2.n() - 1 > 10 {
                continue;
            }
            let glued = glue(g1, *a, g2, *b);
            let whole = engine(glued).v_empty().unwrap();
            let p1 = engine(g1.clone()).v_empty().unwrap();
            let p2 = engine(g2.clone()).v_empty().unwrap();
            assert_eq!(whole, p1 + p2 + 1, "glue {:?} + {:?}", g1.edges(), g2.edges());
            checked += 1;
            if checked == 20 {
                break 'outer;
            }
        }
    }
    assert_eq!(checked, 20);
    println!("criterion 10 (v_empty on clique paths; additivity on 20 glued graphs): PASS");
}

/// Identifies vertex `a` of g1 with vertex `b` of g2.
fn glue(g1: &Graph, a: usize, g2: &Graph, b: usize) -> Graph {
    let n1 = g1.n();
    let map = |w: usize| -> usize {
        if w == b {
            a
        } else if w < b {
            n1 + w
        } else {
            n1 + w - 1
        }
    };
    let mut edges = g1.edges().to_vec();
    for &(u, v) in g2.edges() {
        edges.push((map(u), map(v)));
    }
    Graph::new(n1 + g2.n() - 1, &edges).unwrap()
}

#[test]
fn criterion_11_groebner_soundness() {
    for g in connected_graphs_upto_6() {
        let ideal = BinomialEdgeIdeal::new(g.clone(), Fp::new(1, DEFAULT_PRIME));
        let gb = ideal.groebner_basis(&caps()).unwrap();
        assert!(buchberger_check(gb, false), "Buchberger fails on {:?}", g.edges());
        for lead in gb.leads() {
            assert!(lead.is_squarefree(), "non-squarefree lead on {:?}", g.edges());
        }
        for prime in ideal.minimal_primes(&caps()).unwrap() {
            assert!(
                buchberger_check(prime.basis(), false),
                "prime basis fails on {:?} at {:?}",
                g.edges(),
                prime.cut_set().vertices
            );
        }
        if g.closed_check() {
            assert_eq!(gb.len(), g.edges().len(), "closed graph {:?}", g.edges());
        }
    }
    println!(
        "criterion 11 (Groebner soundness on {} connected graphs <=6): PASS",
        connected_graphs_upto_6().len()
    );
}

#[test]
fn criterion_12_field_robustness() {
    // oracle witnesses re-verify over the rationals as standalone
    // certificates
    for g in [Graph::path(4), Graph::cycle(5), Graph::star(3)] {
        let eng = engine(g.clone());
        let ideal_q = BinomialEdgeIdeal::new(g, Rat::from_i64(1));
        for idx in 0..eng.primes().len() {
            let cut_set = eng.primes()[idx].cut_set().vertices.clone();
            let (d, f) = eng.local_v_oracle(idx, 4).unwrap().unwrap();
            let cert =
                certificate_for(&ideal_q, &cut_set, &lift_witness(&f), &caps()).unwrap();
            assert!(cert.accepted, "certificate at {cut_set:?} degree {d}");
            let outcome = verify_certificate(&cert, &caps()).unwrap();
            assert!(outcome.accepted, "rational re-verification at {cut_set:?}");
        }
    }
    // the full oracle marks its global minimizer as rationally confirmed
    for g in [Graph::path(5), Graph::cycle(4)] {
        let report = engine(g).v_oracle(None).unwrap();
        assert!(report
            .locals
            .iter()
            .any(|l| l.certified_qq == Some(true)));
    }
    println!("criterion 12 (rational re-verification, no disagreements): PASS");
}
