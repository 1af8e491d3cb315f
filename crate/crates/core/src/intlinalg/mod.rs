//! Exact integer linear algebra: Smith normal form, ranks over `Q` and
//! `F_p`, and homology of integer chain complexes.

mod group;
mod matrix;
mod rank;
mod smith;

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::complex::ChainComplex;

pub use group::FinAbGroup;
pub use matrix::IntMatrix;
pub use rank::{rank_mod_p, rank_rational};
pub use smith::{smith, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("NotPrime: {0} is not a prime modulus")]
    NotPrime(u64),
    #[error("DegreeOutOfRange: degree {degree} outside {bottom}..={top}")]
    DegreeOutOfRange { degree: i64, bottom: i64, top: i64 },
    #[error("NonCanonical: {0} is not an invariant-factor chain")]
    NonCanonical(String),
    #[error("BadGroup: cannot parse {0:?}")]
    BadGroup(String),
}

fn group_from_boundaries(dim: usize, incoming: Option<&SmithForm>, outgoing: Option<&SmithForm>) -> FinAbGroup {
    let rank_in = incoming.map_or(0, SmithForm::rank);
    let rank_out = outgoing.map_or(0, SmithForm::rank);
    let torsion = incoming
        .map(|s| s.invariant_factors.iter().map(|d| d.magnitude().clone()).collect::<Vec<BigUint>>())
        .unwrap_or_default();
    FinAbGroup::from_cyclic(dim - rank_in - rank_out, torsion)
}

/// `H_n` of `cc`: free rank `dim C_n - rank D_n - rank D_{n+1}`, torsion from
/// the invariant factors of `D_{n+1}`. Boundaries outside the complex are zero.
pub fn homology_at(cc: &ChainComplex, n: i64) -> Result<FinAbGroup, LinalgError> {
    let (bottom, top) = (cc.bottom_degree(), cc.top_degree());
    if n < bottom || n > top {
        return Err(LinalgError::DegreeOutOfRange { degree: n, bottom, top });
    }
    let out = cc.boundary(n).map(|d| smith(d, false));
    let inc = cc.boundary(n + 1).map(|d| smith(d, false));
    Ok(group_from_boundaries(cc.dim(n), inc.as_ref(), out.as_ref()))
}

/// All homology groups, bottom degree first. Each boundary is reduced once;
/// reductions run in parallel.
pub fn homology(cc: &ChainComplex) -> Vec<FinAbGroup> {
    let degrees: Vec<i64> = cc.degrees().collect();
    let forms: Vec<Option<SmithForm>> =
        degrees.par_iter().map(|&n| cc.boundary(n).map(|d| smith(d, false))).collect();
    degrees
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let outgoing = forms[i].as_ref();
            let incoming = forms.get(i + 1).and_then(Option::as_ref);
            group_from_boundaries(cc.dim(n), incoming, outgoing)
        })
        .collect()
}

/// `dim H_n(cc; F_p)` from ranks mod `p`, for every degree.
pub fn betti_mod_p(cc: &ChainComplex, p: u64) -> Result<Vec<usize>, LinalgError> {
    let ranks: Vec<usize> = cc
        .degrees()
        .map(|n| cc.boundary(n).map_or(Ok(0), |d| rank_mod_p(d, p)))
        .collect::<Result<_, _>>()?;
    Ok(cc
        .degrees()
        .enumerate()
        .map(|(i, n)| cc.dim(n) - ranks[i] - ranks.get(i + 1).copied().unwrap_or(0))
        .collect())
}

/// `dim H_n(cc; Q)` from rational ranks, for every degree.
pub fn betti_rational(cc: &ChainComplex) -> Vec<usize> {
    let ranks: Vec<usize> = cc.degrees().map(|n| cc.boundary(n).map_or(0, rank_rational)).collect();
    cc.degrees()
        .enumerate()
        .map(|(i, n)| cc.dim(n) - ranks[i] - ranks.get(i + 1).copied().unwrap_or(0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{BasisLabel, ChainComplex};

    fn face(s: &str) -> BasisLabel {
        BasisLabel::Face(vec![s.to_string()])
    }

    #[test]
    fn multiplication_by_two() {
        // 0 -> Z --2--> Z -> 0 in degrees 1 -> 0
        let cc = ChainComplex::new(0, vec![vec![face("p")], vec![face("q")]], vec![IntMatrix::from_rows(&[vec![2]])])
            .unwrap();
        assert_eq!(homology_at(&cc, 0).unwrap().to_string(), "Z/2");
        assert_eq!(homology_at(&cc, 1).unwrap().to_string(), "0");
        assert_eq!(homology(&cc).iter().map(ToString::to_string).collect::<Vec<_>>(), ["Z/2", "0"]);
        assert_eq!(betti_mod_p(&cc, 2).unwrap(), vec![1, 1]);
        assert_eq!(betti_mod_p(&cc, 3).unwrap(), vec![0, 0]);
        assert_eq!(betti_rational(&cc), vec![0, 0]);
    }

    #[test]
    fn degree_out_of_range() {
        let cc = ChainComplex::new(0, vec![vec![face("p")]], vec![]).unwrap();
        assert_eq!(homology_at(&cc, 0).unwrap(), FinAbGroup::free(1));
        assert_eq!(homology_at(&cc, 1), Err(LinalgError::DegreeOutOfRange { degree: 1, bottom: 0, top: 0 }));
        assert!(homology_at(&cc, -1).is_err());
    }
}
