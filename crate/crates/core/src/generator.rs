//! Seeded random problems: sparse polynomials grouped into two-constraint
//! QFFs whose equation counts follow a system-type label such as `"20"`.
//!
//! Every problem is drawn from its own ChaCha8 stream seeded with the first
//! eight bytes (little endian) of SHA-256 over the corpus seed, the label
//! and the problem index, so corpora do not depend on generation order.

use std::fs;
use std::io;
use std::path::Path;

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::formula::{Constraint, Problem, Qff, Relop};
use crate::io::print_problem;
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub n_vars: usize,
    pub max_tdeg: u32,
    pub terms: usize,
    pub coeff_bound: u32,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { n_vars: 3, max_tdeg: 4, terms: 4, coeff_bound: 20, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("malformed system type label {0:?}: expected digits 0-2")]
    MalformedLabel(String),
    #[error("generator bounds must be positive")]
    BadParams,
}

impl GenParams {
    fn check(&self) -> Result<(), GenError> {
        if self.n_vars == 0 || self.max_tdeg == 0 || self.terms == 0 || self.coeff_bound == 0 {
            return Err(GenError::BadParams);
        }
        Ok(())
    }
}

/// Variable names used for generated problems.
pub fn variable_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Exponent vectors of total degree at most `d` in `n` variables, in a
/// fixed order.
fn monomials_upto(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A nonconstant polynomial with at most `terms` distinct monomials of total
/// degree at most `max_tdeg` and nonzero coefficients in
/// `[-coeff_bound, coeff_bound]`.
pub fn random_polynomial<R: Rng + ?Sized>(params: &GenParams, rng: &mut R) -> Polynomial {
    let monos = monomials_upto(params.n_vars, params.max_tdeg);
    let k = params.terms.min(monos.len());
    let b = params.coeff_bound as i64;
    loop {
        let picked = sample(rng, monos.len(), k);
        let terms: Vec<(Monomial, BigInt)> = picked
            .iter()
            .map(|i| {
                let c = rng.random_range(1..=2 * b);
                let c = if c > b { b - c } else { c };
                (Monomial::from_exponents(&monos[i]), BigInt::from(c))
            })
            .collect();
        let f = Polynomial::from_terms(params.n_vars, terms);
        if !f.is_constant() {
            return f;
        }
    }
}

fn parse_label(label: &str) -> Result<Vec<usize>, GenError> {
    let digits: Option<Vec<usize>> =
        label.chars().map(|c| c.to_digit(10).filter(|&d| d <= 2).map(|d| d as usize)).collect();
    match digits {
        Some(d) if !d.is_empty() => Ok(d),
        _ => Err(GenError::MalformedLabel(label.to_string())),
    }
}

/// One QFF per label digit: that many equations, then strict `<`
/// inequalities up to two constraints, drawn from a stream seeded by
/// `params.seed`.
pub fn random_problem(label: &str, params: &GenParams) -> Result<Problem, GenError> {
    params.check()?;
    let digits = parse_label(label)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let qffs = digits
        .iter()
        .map(|&d| {
            let cs = (0..2)
                .map(|i| {
                    let f = random_polynomial(params, &mut rng).sign_normalized();
                    let op = if i < d { Relop::Eq } else { Relop::Lt };
                    Constraint::new(f, op).expect("nonzero")
                })
                .collect();
            Qff::new(cs)
        })
        .collect();
    Ok(Problem::new(variable_names(params.n_vars), qffs))
}

/// Seed of problem `index` of type `label` within a corpus.
pub fn derive_seed(seed: u64, label: &str, index: usize) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(label.as_bytes());
    h.update((index as u64).to_le_bytes());
    let d = h.finalize();
    u64::from_le_bytes(d[..8].try_into().expect("eight bytes"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub label: String,
    pub seed: u64,
    pub problem: Problem,
}

pub fn problem_id(label: &str, index: usize) -> String {
    format!("{label}-{index:03}")
}

/// `count` problems per label, ordered by label as given then index.
pub fn generate_corpus(labels: &[String], count: usize, params: &GenParams) -> Result<Vec<CorpusEntry>, GenError> {
    params.check()?;
    for l in labels {
        parse_label(l)?;
    }
    let jobs: Vec<(&String, usize)> = labels.iter().flat_map(|l| (0..count).map(move |i| (l, i))).collect();
    jobs.into_par_iter()
        .map(|(label, i)| {
            let seed = derive_seed(params.seed, label, i);
            let problem = random_problem(label, &GenParams { seed, ..*params })?;
            Ok(CorpusEntry { id: problem_id(label, i), label: label.clone(), seed, problem })
        })
        .collect()
}

#[derive(serde::Serialize, serde::Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ManifestRow {
    pub id: String,
    pub label: String,
    pub seed: u64,
    pub path: String,
}

/// Writes `<id>.prob` files and `manifest.csv` into `dir`.
pub fn write_corpus(dir: &Path, corpus: &[CorpusEntry]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut w = csv::Writer::from_path(dir.join("manifest.csv"))?;
    for e in corpus {
        let path = format!("{}.prob", e.id);
        fs::write(dir.join(&path), print_problem(&e.problem))?;
        w.serialize(ManifestRow { id: e.id.clone(), label: e.label.clone(), seed: e.seed, path })?;
    }
    w.flush()
}
