//! Computes both sides of each decomposition statement on concrete instances
//! and reports agreement per degree.
//!
//! Isomorphism is decided by equality of invariant-factor forms. Homology of
//! `X_m` uses the unreduced convention; the simplicial side is the reduced
//! homology of the clique complex.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::action::PointedAction;
use crate::alphabet::IndependenceAlphabet;
use crate::complex::{kset_homology, Variant};
use crate::intlinalg::FinAbGroup;
use crate::simplicial::{reduced_homology, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("NameClash: generator {0:?} appears in more than one component")]
    NameClash(String),
    #[error("UnknownTheorem: {0:?} (expected thm1, thm2, thm3 or corollary)")]
    UnknownTheorem(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `H_k(X_{m+1}) = H_k(X_m) + H~_{k-1}(E, M)`
    Thm1,
    /// `Tor H_k(X_{m+1}) = Tor H_k(X_m) + Tor H_k(X_0)`
    Corollary,
    /// `H_1(X_m)` is free.
    Thm2,
    /// Homology over a disjoint-union alphabet against the sum over its parts.
    Thm3,
}

impl TheoremId {
    pub fn tag(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "THM1",
            TheoremId::Corollary => "COR",
            TheoremId::Thm2 => "THM2",
            TheoremId::Thm3 => "THM3",
        }
    }

    /// Whether a failing record means the statement is refuted on the
    /// instance. `Thm3` only gathers evidence.
    pub fn asserted(self) -> bool {
        !matches!(self, TheoremId::Thm3)
    }
}

impl std::str::FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "thm1" => Ok(TheoremId::Thm1),
            "corollary" => Ok(TheoremId::Corollary),
            "thm2" => Ok(TheoremId::Thm2),
            "thm3" => Ok(TheoremId::Thm3),
            other => Err(VerifyError::UnknownTheorem(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    /// The chain-set parameter (`m` for thm1/corollary/thm2, `n` for thm3).
    pub m: i64,
    pub k: usize,
    pub lhs: FinAbGroup,
    pub rhs: FinAbGroup,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub alpha: String,
    pub records: Vec<Record>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    /// One line per record: `THM1 alpha=A2 m=-1 k=1 lhs=Z^3 rhs=Z^3 pass=1`.
    pub fn machine(&self) -> String {
        let param = if self.theorem == TheoremId::Thm3 { "n" } else { "m" };
        self.records
            .iter()
            .map(|r| {
                format!(
                    "{} alpha={} {param}={} k={} lhs={} rhs={} pass={}\n",
                    self.theorem.tag(),
                    self.alpha,
                    r.m,
                    r.k,
                    r.lhs,
                    r.rhs,
                    u8::from(r.pass)
                )
            })
            .collect()
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let param = if self.theorem == TheoremId::Thm3 { "n" } else { "m" };
        let mode = if self.theorem.asserted() { "asserted" } else { "informational" };
        writeln!(f, "{} alpha={} ({mode}, homology convention: unreduced; simplicial side: reduced clique complex)", self.theorem.tag(), self.alpha)?;
        let rows: Vec<[String; 5]> = self
            .records
            .iter()
            .map(|r| [r.m.to_string(), r.k.to_string(), r.lhs.to_string(), r.rhs.to_string(), if r.pass { "yes" } else { "no" }.into()])
            .collect();
        let header = [param.to_string(), "k".into(), "lhs".into(), "rhs".into(), "pass".into()];
        let widths: Vec<usize> =
            (0..5).map(|c| rows.iter().chain(std::iter::once(&header)).map(|r| r[c].len()).max().unwrap_or(0)).collect();
        for row in std::iter::once(&header).chain(&rows) {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            writeln!(f, "  {}", cells.join("  ").trim_end())?;
        }
        writeln!(f, "  overall: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

/// Caches homology of the chain sets `X_m` and of the clique complex for one
/// alphabet, so grids of checks share work. Safe to use from several threads.
pub struct Verifier<'a> {
    name: String,
    alpha: &'a IndependenceAlphabet,
    kmax: usize,
    chains: Mutex<BTreeMap<i64, Vec<FinAbGroup>>>,
    clique: OnceLock<Vec<FinAbGroup>>,
}

impl<'a> Verifier<'a> {
    /// Checks cover degrees `1..=kmax`.
    pub fn new(name: impl Into<String>, alpha: &'a IndependenceAlphabet, kmax: usize) -> Self {
        Self { name: name.into(), alpha, kmax: kmax.max(1), chains: Mutex::new(BTreeMap::new()), clique: OnceLock::new() }
    }

    /// Unreduced `H_0 ..= H_kmax` of `X_m`.
    pub fn chain_homology(&self, m: i64) -> Vec<FinAbGroup> {
        if let Some(h) = self.chains.lock().expect("cache lock").get(&m) {
            return h.clone();
        }
        let h = kset_homology(&PointedAction::chain_set(self.alpha, m), Variant::Unreduced, self.kmax);
        self.chains.lock().expect("cache lock").entry(m).or_insert(h).clone()
    }

    /// Reduced `H~_0 ..= H~_kmax` of the clique complex.
    pub fn clique_homology(&self) -> &[FinAbGroup] {
        self.clique.get_or_init(|| reduced_homology(&SimplicialComplex::clique_complex(self.alpha), self.kmax))
    }

    fn report(&self, theorem: TheoremId, records: Vec<Record>) -> TheoremReport {
        TheoremReport { theorem, alpha: self.name.clone(), records }
    }

    pub fn thm1(&self, m: i64) -> TheoremReport {
        let upper = self.chain_homology(m + 1);
        let lower = self.chain_homology(m);
        let simplicial = self.clique_homology();
        let records = (1..=self.kmax)
            .map(|k| {
                let lhs = upper[k].clone();
                let rhs = lower[k].direct_sum(&simplicial[k - 1]);
                Record { m, k, pass: lhs == rhs, lhs, rhs }
            })
            .collect();
        self.report(TheoremId::Thm1, records)
    }

    pub fn corollary(&self, m: i64) -> TheoremReport {
        let upper = self.chain_homology(m + 1);
        let lower = self.chain_homology(m);
        let x0 = self.chain_homology(0);
        let records = (1..=self.kmax)
            .map(|k| {
                let lhs = upper[k].torsion_part();
                let rhs = lower[k].torsion_part().direct_sum(&x0[k].torsion_part());
                Record { m, k, pass: lhs == rhs, lhs, rhs }
            })
            .collect();
        self.report(TheoremId::Corollary, records)
    }

    /// One record per `m in -1..=mmax` comparing `Tor H_1(X_m)` with 0.
    pub fn thm2(&self, mmax: i64) -> TheoremReport {
        let records = (-1..=mmax)
            .map(|m| {
                let lhs = self.chain_homology(m)[1].torsion_part();
                Record { m, k: 1, pass: lhs.is_trivial(), lhs, rhs: FinAbGroup::trivial() }
            })
            .collect();
        self.report(TheoremId::Thm2, records)
    }
}

pub fn check_thm1(name: &str, alpha: &IndependenceAlphabet, m: i64, kmax: usize) -> TheoremReport {
    Verifier::new(name, alpha, kmax).thm1(m)
}

pub fn check_corollary(name: &str, alpha: &IndependenceAlphabet, m: i64, kmax: usize) -> TheoremReport {
    Verifier::new(name, alpha, kmax).corollary(m)
}

pub fn check_thm2(name: &str, alpha: &IndependenceAlphabet, mmax: i64) -> TheoremReport {
    Verifier::new(name, alpha, 1).thm2(mmax)
}

/// Disjoint union of alphabets: generators concatenated, no commuting pairs
/// across parts.
pub fn disjoint_union(parts: &[IndependenceAlphabet]) -> Result<IndependenceAlphabet, VerifyError> {
    let mut seen = HashSet::new();
    let mut names = Vec::new();
    let mut pairs = Vec::new();
    for part in parts {
        for g in part.generators() {
            if !seen.insert(g.as_str()) {
                return Err(VerifyError::NameClash(g.clone()));
            }
            names.push(g.as_str());
        }
        let gens = part.generators();
        pairs.extend(part.commuting_pairs().into_iter().map(|(i, j)| (gens[i].as_str(), gens[j].as_str())));
    }
    Ok(IndependenceAlphabet::new(&names, &pairs).expect("union of valid alphabets with distinct names"))
}

/// Compares `H_k` of the uniform chain action of length `n` over the union
/// alphabet with the sum of `H_k` of its restrictions to each part, for
/// `k in 1..=kmax`. The report is informational: mismatches are recorded,
/// not asserted.
pub fn check_thm3(
    name: &str,
    components: &[IndependenceAlphabet],
    n: i64,
    kmax: usize,
) -> Result<TheoremReport, VerifyError> {
    let union = disjoint_union(components)?;
    let action = PointedAction::chain_set(&union, n);
    let lhs = kset_homology(&action, Variant::Unreduced, kmax);
    let mut rhs = vec![FinAbGroup::trivial(); kmax + 1];
    for part in components {
        let restricted = action.restrict(part).expect("component is an induced sub-alphabet of the union");
        for (acc, h) in rhs.iter_mut().zip(kset_homology(&restricted, Variant::Unreduced, kmax)) {
            *acc = acc.direct_sum(&h);
        }
    }
    let records = (1..=kmax)
        .map(|k| Record { m: n, k, pass: lhs[k] == rhs[k], lhs: lhs[k].clone(), rhs: rhs[k].clone() })
        .collect();
    Ok(TheoremReport { theorem: TheoremId::Thm3, alpha: name.to_string(), records })
}
