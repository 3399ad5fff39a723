//! Versioned JSON schemas for reports and witness certificates, plus the
//! exact rational re-verification path for certificates loaded from disk.
//! Serialization is deterministic: term lists follow the monomial order of
//! the polynomial, generator results follow the stored generator order.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::graph::Graph;
use crate::ideals::BinomialEdgeIdeal;
use crate::poly::{Monomial, Polynomial, VarSpace};
use num::rational::BigRational;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

pub const SCHEMA_VERSION: u32 = 1;

/// One term of a witness polynomial: exponent vector plus exact
/// coefficient rendered as a decimal integer or `p/q` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u8>,
    pub coeff: String,
}

pub fn polynomial_to_terms<F: Field>(p: &Polynomial<F>) -> Vec<TermJson> {
    p.terms()
        .map(|(m, c)| TermJson {
            exps: m.0.clone(),
            coeff: c.to_string(),
        })
        .collect()
}

pub fn terms_to_polynomial(terms: &[TermJson], nvars: usize) -> Result<Polynomial<Rat>> {
    let mut p = Polynomial::zero();
    for t in terms {
        if t.exps.len() != nvars {
            return Err(Error::Parse(format!(
                "term has {} exponents, expected {nvars}",
                t.exps.len()
            )));
        }
        let c = BigRational::from_str(&t.coeff)
            .map_err(|e| Error::Parse(format!("bad coefficient `{}`: {e}", t.coeff)))?;
        p.add_term(Monomial(t.exps.clone()), Rat(c));
    }
    Ok(p)
}

/// Outcome of one generator check g·f ∈ J in a colon certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorCheck {
    pub generator: String,
    pub product_in_ideal: bool,
}

/// Self-contained colon certificate: everything needed to re-verify that
/// (J_G : f) equals the minimal prime of the recorded cut set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub version: u32,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub cut_set: Vec<usize>,
    pub field: String,
    pub witness: Vec<TermJson>,
    pub witness_text: String,
    pub f_in_prime: bool,
    pub generator_checks: Vec<GeneratorCheck>,
    pub accepted: bool,
}

/// Symmetric lift of a GF(p) witness to rational coefficients; certificates
/// meant for later rational re-verification must be built from the lifted
/// polynomial, since serialized coefficients are taken literally.
pub fn lift_witness(f: &Polynomial<crate::field::Fp>) -> Polynomial<Rat> {
    f.map_coeffs(|c| Rat::from_i64(c.symmetric_lift()))
}

/// Builds a certificate by running every check: f ∉ P_S and g·f ∈ J_G for
/// each generator g of P_S.
pub fn certificate_for<F: Field>(
    ideal: &BinomialEdgeIdeal<F>,
    cut_set: &[usize],
    f: &Polynomial<F>,
    caps: &Caps,
) -> Result<Certificate> {
    let g = ideal.graph();
    let vs = ideal.var_space();
    let prime = ideal
        .minimal_primes(caps)?
        .into_iter()
        .find(|p| p.cut_set().vertices == cut_set)
        .ok_or_else(|| Error::InvalidCutSet(format!("{cut_set:?}")))?;
    let f_in_prime = prime.member(f);
    let mut checks = vec![];
    for gen in prime.generators() {
        let product = gen.mul(f);
        checks.push(GeneratorCheck {
            generator: gen.display(vs),
            product_in_ideal: ideal.member(&product, caps)?,
        });
    }
    let accepted = !f_in_prime && checks.iter().all(|c| c.product_in_ideal);
    Ok(Certificate {
        version: SCHEMA_VERSION,
        n: g.n(),
        edges: g.edges().to_vec(),
        cut_set: cut_set.to_vec(),
        field: ideal.one().name(),
        witness: polynomial_to_terms(f),
        witness_text: f.display(vs),
        f_in_prime,
        generator_checks: checks,
        accepted,
    })
}

/// Result of re-verifying a stored certificate over the rationals.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub accepted: bool,
    pub f_in_prime: bool,
    /// First generator whose product check failed, if any.
    pub failing_generator: Option<String>,
}

/// Re-runs all checks of a certificate with exact rational arithmetic,
/// independently of the recorded per-check outcomes.
pub fn verify_certificate(cert: &Certificate, caps: &Caps) -> Result<VerifyOutcome> {
    if cert.version != SCHEMA_VERSION {
        return Err(Error::Parse(format!(
            "unsupported certificate version {}",
            cert.version
        )));
    }
    let g = Graph::new(cert.n, &cert.edges)?;
    let vs = VarSpace::binomial(cert.n);
    let f = terms_to_polynomial(&cert.witness, vs.nvars())?;
    if f.num_terms() == 0 {
        return Err(Error::Parse("empty witness polynomial".into()));
    }
    let ideal = BinomialEdgeIdeal::new(g, Rat::from_i64(1));
    let prime = ideal
        .minimal_primes(caps)?
        .into_iter()
        .find(|p| p.cut_set().vertices == cert.cut_set)
        .ok_or_else(|| Error::InvalidCutSet(format!("{:?}", cert.cut_set)))?;
    let f_in_prime = prime.member(&f);
    let mut failing = None;
    if !f_in_prime {
        for gen in prime.generators() {
            if !ideal.member(&gen.mul(&f), caps)? {
                failing = Some(gen.display(ideal.var_space()));
                break;
            }
        }
    }
    Ok(VerifyOutcome {
        accepted: !f_in_prime && failing.is_none(),
        f_in_prime,
        failing_generator: failing,
    })
}
