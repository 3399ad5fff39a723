//! Multivariate polynomials over an exact coefficient field, with the fixed
//! lexicographic term order x_1 > .. > x_n > y_1 > .. > y_n used everywhere
//! in this crate, and reduction against a marked basis.

use crate::error::{Error, Result};
use crate::field::Field;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// The ambient polynomial ring layout for a graph on n vertices.
///
/// In the binomial setting the ring is K[x_1..x_n, y_1..y_n]; exponent
/// index i-1 is x_i and n+i-1 is y_i. In the monomial setting the ring is
/// K[x_1..x_n]. Exponent vectors compare lexicographically, which together
/// with this index layout realises x_1 > .. > x_n > y_1 > .. > y_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarSpace {
    n: usize,
    doubled: bool,
}

impl VarSpace {
    pub fn binomial(n: usize) -> VarSpace {
        VarSpace { n, doubled: true }
    }

    pub fn monomial(n: usize) -> VarSpace {
        VarSpace { n, doubled: false }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        if self.doubled {
            2 * self.n
        } else {
            self.n
        }
    }

    /// Exponent index of x_i (1-based vertex i).
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.n);
        i - 1
    }

    /// Exponent index of y_i (1-based vertex i); binomial layout only.
    pub fn y(&self, i: usize) -> usize {
        debug_assert!(self.doubled && 1 <= i && i <= self.n);
        self.n + i - 1
    }

    pub fn var_name(&self, idx: usize) -> String {
        if idx < self.n {
            format!("x{}", idx + 1)
        } else {
            format!("y{}", idx - self.n + 1)
        }
    }

    pub fn parse_var(&self, name: &str) -> Result<usize> {
        let bad = || Error::Parse(format!("unknown variable `{name}`"));
        let (head, tail) = name.split_at(1);
        let i: usize = tail.parse().map_err(|_| bad())?;
        if i < 1 || i > self.n {
            return Err(bad());
        }
        match head {
            "x" => Ok(self.x(i)),
            "y" if self.doubled => Ok(self.y(i)),
            _ => Err(bad()),
        }
    }
}

/// Exponent vector; the derived `Ord` on `Vec<u8>` is the lexicographic
/// term order for the `VarSpace` index layout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(idx: usize, nvars: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self; caller guarantees divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Bitmask of variables with positive exponent.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    pub fn pow(&self, k: usize) -> Monomial {
        let mut out = Monomial::one(self.0.len());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn display(&self, vs: &VarSpace) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&vs.var_name(i));
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }
}

/// All monomials of total degree `d` in `nvars` variables, in increasing
/// lex order.
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Monomial> {
    fn rec(nvars: usize, idx: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Monomial>) {
        if idx == nvars {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        if idx == nvars - 1 {
            cur[idx] = left as u8;
            out.push(Monomial(cur.clone()));
            cur[idx] = 0;
            return;
        }
        for e in 0..=left {
            cur[idx] = e as u8;
            rec(nvars, idx + 1, left - e, cur, out);
        }
        cur[idx] = 0;
    }
    let mut out = vec![];
    let mut cur = vec![0u8; nvars];
    rec(nvars, 0, d, &mut cur, &mut out);
    out.sort();
    out
}

/// Sparse polynomial; the map is keyed by monomial, so iteration is always
/// in increasing term order and the last entry is the leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Polynomial<F> {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial, c: F) -> Polynomial<F> {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&F> {
        self.terms.get(m)
    }

    /// Leading (lexicographically largest) term.
    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial<F>) -> Polynomial<F> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial<F>) -> Polynomial<F> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Polynomial<F> {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Polynomial<F> {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial<F>) -> Polynomial<F> {
        let mut out = Polynomial::zero();
        for (m, c) in &other.terms {
            for (k, v) in &self.terms {
                out.add_term(k.mul(m), v.mul(c));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Polynomial<F> {
        let mut out = match self.terms.iter().next() {
            Some((m, c)) => Polynomial::monomial(Monomial::one(m.0.len()), c.one()),
            None => {
                assert!(k > 0, "0^0 needs a variable count");
                return Polynomial::zero();
            }
        };
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial<F> {
        match self.leading() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn display(&self, vs: &VarSpace) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        // print largest terms first
        for (m, c) in self.terms.iter().rev() {
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let cs = format!("{c}");
            if m.is_one() {
                s.push_str(&cs);
            } else if cs == "1" {
                s.push_str(&m.display(vs));
            } else {
                let _ = write!(s, "{cs}*{}", m.display(vs));
            }
        }
        s
    }
}

/// A list of monic polynomials each marked by its leading monomial, closed
/// under nothing in particular; supplies deterministic full reduction.
#[derive(Debug, Clone)]
pub struct MarkedBasis<F: Field> {
    elements: Vec<(Monomial, Polynomial<F>)>,
}

impl<F: Field> MarkedBasis<F> {
    /// Marks each polynomial by its lex-leading monomial after scaling monic.
    pub fn new(polys: Vec<Polynomial<F>>) -> MarkedBasis<F> {
        let mut elements = vec![];
        for p in polys {
            if p.is_zero() {
                continue;
            }
            let p = p.monic();
            let lead = p.leading().unwrap().0.clone();
            elements.push((lead, p));
        }
        elements.sort_by(|a, b| a.0.cmp(&b.0));
        MarkedBasis { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Monomial, Polynomial<F>)> {
        self.elements.iter()
    }

    pub fn leads(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|(l, _)| l)
    }

    fn reducer_for(&self, m: &Monomial) -> Option<&(Monomial, Polynomial<F>)> {
        // first fit in increasing lead order keeps reduction deterministic
        self.elements.iter().find(|(l, _)| l.divides(m))
    }

    /// Full reduction: the result has no term divisible by any marked lead.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let mut rem = Polynomial::zero();
        let mut work = p.clone();
        while let Some((m, c)) = work.leading() {
            let (m, c) = (m.clone(), c.clone());
            match self.reducer_for(&m) {
                Some((lead, g)) => {
                    let q = lead.quotient_into(&m);
                    work = work.sub(&g.mul_term(&q, &c));
                }
                None => {
                    work.add_term(m.clone(), c.neg());
                    rem.add_term(m, c);
                }
            }
        }
        rem
    }

    pub fn reduces_to_zero(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, DEFAULT_PRIME};
    use proptest::prelude::*;

    fn fp(v: i64) -> Fp {
        Fp::new(v, DEFAULT_PRIME)
    }

    #[test]
    fn lex_order_layout() {
        let vs = VarSpace::binomial(3);
        assert_eq!(vs.nvars(), 6);
        let x1 = Monomial::var(vs.x(1), 6);
        let x3 = Monomial::var(vs.x(3), 6);
        let y1 = Monomial::var(vs.y(1), 6);
        let y3 = Monomial::var(vs.y(3), 6);
        assert!(x1 > x3);
        assert!(x3 > y1);
        assert!(y1 > y3);
        // x1*y3 > x2*y1 since they first differ at x1
        let x2 = Monomial::var(vs.x(2), 6);
        assert!(x1.mul(&y3) > x2.mul(&y1));
    }

    #[test]
    fn var_names_parse_round_trip() {
        let vs = VarSpace::binomial(4);
        for idx in 0..vs.nvars() {
            assert_eq!(vs.parse_var(&vs.var_name(idx)).unwrap(), idx);
        }
        assert!(vs.parse_var("z1").is_err());
        assert!(VarSpace::monomial(4).parse_var("y2").is_err());
    }

    #[test]
    fn leading_term_is_map_max() {
        let vs = VarSpace::binomial(2);
        // f = x1*y2 - x2*y1, leading term x1*y2
        let lead = Monomial::var(vs.x(1), 4).mul(&Monomial::var(vs.y(2), 4));
        let trail = Monomial::var(vs.x(2), 4).mul(&Monomial::var(vs.y(1), 4));
        let mut f = Polynomial::zero();
        f.add_term(trail, fp(-1));
        f.add_term(lead.clone(), fp(1));
        assert_eq!(f.leading().unwrap().0, &lead);
    }

    #[test]
    fn normal_form_single_binomial() {
        let vs = VarSpace::binomial(2);
        let nv = vs.nvars();
        let lead = Monomial::var(vs.x(1), nv).mul(&Monomial::var(vs.y(2), nv));
        let trail = Monomial::var(vs.x(2), nv).mul(&Monomial::var(vs.y(1), nv));
        let mut f = Polynomial::zero();
        f.add_term(lead.clone(), fp(1));
        f.add_term(trail.clone(), fp(-1));
        let basis = MarkedBasis::new(vec![f.clone()]);
        // x1*y2 reduces to x2*y1
        let nf = basis.normal_form(&Polynomial::monomial(lead, fp(1)));
        assert_eq!(nf, Polynomial::monomial(trail, fp(1)));
        assert!(basis.reduces_to_zero(&f));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<Fp>> {
        proptest::collection::vec((proptest::collection::vec(0u8..3, 4), -5i64..5), 0..6).prop_map(
            |terms| {
                let mut p = Polynomial::zero();
                for (e, c) in terms {
                    p.add_term(Monomial(e), fp(c));
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn normal_form_idempotent(p in arb_poly(), q in arb_poly()) {
            let basis = MarkedBasis::new(vec![q]);
            let nf = basis.normal_form(&p);
            prop_assert_eq!(basis.normal_form(&nf), nf);
        }

        #[test]
        fn monomial_quotient_round_trip(a in proptest::collection::vec(0u8..4, 5),
                                        b in proptest::collection::vec(0u8..4, 5)) {
            let (a, b) = (Monomial(a), Monomial(b));
            let l = a.lcm(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert_eq!(a.quotient_into(&l).mul(&a), l);
        }

        #[test]
        fn add_sub_cancel(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(p.add(&q).sub(&q), p);
        }
    }
}
