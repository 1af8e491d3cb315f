//! Finite chain complexes of free abelian groups.
//!
//! The homology of a pointed `M(E, I)`-set with constant coefficients is
//! computed from the clique-indexed complex: degree `n` is free on pairs
//! `(x, c)` with `c` an `n`-clique, and
//!
//! ```text
//! d(x, c) = sum_{i=1..n} (-1)^i [ (x.e_i, c - e_i) - (x, c - e_i) ]
//! ```
//!
//! where `c = {e_1 < ... < e_n}` in alphabet order.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use thiserror::Error;

use crate::action::PointedAction;
use crate::alphabet::Clique;
use crate::intlinalg::{homology, FinAbGroup, IntMatrix};
use crate::simplicial::SimplicialComplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("ShapeMismatch: boundary into degree {degree} is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    ShapeMismatch { degree: i64, rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("BoundaryCount: {boundaries} boundaries for {groups} chain groups")]
    BoundaryCount { groups: usize, boundaries: usize },
    #[error("UnknownVariant: {0:?} (expected unreduced or reduced)")]
    UnknownVariant(String),
}

/// Whether the base point contributes basis elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The base point is an ordinary object.
    #[default]
    Unreduced,
    /// Base-point cells and boundary terms landing on the base point are dropped.
    Reduced,
}

impl FromStr for Variant {
    type Err = ComplexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unreduced" => Ok(Variant::Unreduced),
            "reduced" => Ok(Variant::Reduced),
            other => Err(ComplexError::UnknownVariant(other.to_string())),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Unreduced => "unreduced",
            Variant::Reduced => "reduced",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// `(element, clique)` cell of a pointed-set complex.
    Cell { element: String, clique: Vec<String> },
    /// A simplex given by its vertices; the empty face spans the augmentation.
    Face(Vec<String>),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Cell { element, clique } => write!(f, "({element},{{{}}})", clique.join(",")),
            BasisLabel::Face(vs) => write!(f, "{{{}}}", vs.join(",")),
        }
    }
}

/// Chain groups in degrees `bottom ..= top` with boundary matrices between
/// consecutive degrees. `D_n : C_n -> C_{n-1}` has shape `dim C_{n-1} x dim C_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    bottom: i64,
    bases: Vec<Vec<BasisLabel>>,
    /// `boundaries[i] = D_{bottom + i + 1}`
    boundaries: Vec<IntMatrix>,
}

/// Outcome of checking `D_n * D_{n+1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DdCheck {
    Pass,
    /// First nonzero entry of `D_degree * D_{degree+1}`.
    Fail { degree: i64, row: usize, col: usize },
}

impl DdCheck {
    pub fn passed(&self) -> bool {
        matches!(self, DdCheck::Pass)
    }
}

impl ChainComplex {
    pub fn new(bottom: i64, bases: Vec<Vec<BasisLabel>>, boundaries: Vec<IntMatrix>) -> Result<Self, ComplexError> {
        if boundaries.len() != bases.len().saturating_sub(1) {
            return Err(ComplexError::BoundaryCount { groups: bases.len(), boundaries: boundaries.len() });
        }
        for (i, d) in boundaries.iter().enumerate() {
            let expected = (bases[i].len(), bases[i + 1].len());
            if d.shape() != expected {
                return Err(ComplexError::ShapeMismatch {
                    degree: bottom + i as i64,
                    rows: d.rows(),
                    cols: d.cols(),
                    expected_rows: expected.0,
                    expected_cols: expected.1,
                });
            }
        }
        Ok(Self { bottom, bases, boundaries })
    }

    pub fn bottom_degree(&self) -> i64 {
        self.bottom
    }

    /// Highest degree with a chain group; `bottom - 1` when there are none.
    pub fn top_degree(&self) -> i64 {
        self.bottom + self.bases.len() as i64 - 1
    }

    pub fn degrees(&self) -> RangeInclusive<i64> {
        self.bottom..=self.top_degree()
    }

    pub fn basis(&self, n: i64) -> &[BasisLabel] {
        self.slot(n).map_or(&[], |i| self.bases[i].as_slice())
    }

    pub fn dim(&self, n: i64) -> usize {
        self.basis(n).len()
    }

    /// `D_n`, or `None` where it is the zero map out of or into a vanishing group.
    pub fn boundary(&self, n: i64) -> Option<&IntMatrix> {
        let i = self.slot(n)?;
        self.boundaries.get(i.checked_sub(1)?)
    }

    fn slot(&self, n: i64) -> Option<usize> {
        usize::try_from(n - self.bottom).ok().filter(|&i| i < self.bases.len())
    }

    /// `sum_n (-1)^n dim C_n`
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees().map(|n| if n.rem_euclid(2) == 0 { self.dim(n) as i64 } else { -(self.dim(n) as i64) }).sum()
    }

    /// Exact check of `D_n * D_{n+1} = 0` in every degree.
    pub fn verify_dd_zero(&self) -> DdCheck {
        for n in self.degrees() {
            let (Some(d), Some(d_next)) = (self.boundary(n), self.boundary(n + 1)) else { continue };
            let prod = d.mul(d_next);
            for row in 0..prod.rows() {
                if let Some(col) = prod.row(row).iter().position(|x| x != &0.into()) {
                    return DdCheck::Fail { degree: n, row, col };
                }
            }
        }
        DdCheck::Pass
    }

    /// Block-diagonal sum; bases are concatenated degreewise.
    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        if self.bases.is_empty() {
            return other.clone();
        }
        if other.bases.is_empty() {
            return self.clone();
        }
        let bottom = self.bottom.min(other.bottom);
        let top = self.top_degree().max(other.top_degree());
        let bases = (bottom..=top).map(|n| [self.basis(n), other.basis(n)].concat()).collect();
        let boundaries = (bottom + 1..=top)
            .map(|n| {
                let part = |cc: &ChainComplex| {
                    cc.boundary(n).cloned().unwrap_or_else(|| IntMatrix::zeros(cc.dim(n - 1), cc.dim(n)))
                };
                part(self).block_diag(&part(other))
            })
            .collect();
        ChainComplex { bottom, bases, boundaries }
    }

    /// Debug dump: each boundary as `degree n rows r cols c` followed by its rows.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for n in self.degrees() {
            if let Some(d) = self.boundary(n) {
                out.push_str(&format!("degree {n} rows {} cols {}\n{d}", d.rows(), d.cols()));
            }
        }
        out
    }
}

/// The clique-indexed complex of a pointed action in degrees `0 ..= kmax`
/// (default and cap: the maximal clique size, beyond which all groups vanish).
pub fn kset_complex(action: &PointedAction, kmax: Option<usize>, variant: Variant) -> ChainComplex {
    let alpha = action.alphabet();
    let mut cliques = alpha.all_cliques();
    let top = kmax.map_or(cliques.len() - 1, |k| k.min(cliques.len() - 1));
    cliques.truncate(top + 1);

    let elements: Vec<usize> = match variant {
        Variant::Unreduced => action.basis_order(),
        Variant::Reduced => action.basis_order().into_iter().filter(|&x| x != action.base()).collect(),
    };
    let mut position = vec![None; action.elements().len()];
    for (p, &x) in elements.iter().enumerate() {
        position[x] = Some(p);
    }
    let clique_index: Vec<HashMap<&Clique, usize>> =
        cliques.iter().map(|cs| cs.iter().enumerate().map(|(i, c)| (c, i)).collect()).collect();

    let bases = cliques
        .iter()
        .map(|cs| {
            elements
                .iter()
                .flat_map(|&x| {
                    cs.iter().map(move |c| BasisLabel::Cell {
                        element: action.elements()[x].clone(),
                        clique: c.names(alpha).into_iter().map(str::to_string).collect(),
                    })
                })
                .collect()
        })
        .collect();

    let boundaries = (1..=top)
        .map(|n| {
            let (lower, upper) = (&cliques[n - 1], &cliques[n]);
            let mut d = IntMatrix::zeros(elements.len() * lower.len(), elements.len() * upper.len());
            for (px, &x) in elements.iter().enumerate() {
                for (ci, c) in upper.iter().enumerate() {
                    let col = px * upper.len() + ci;
                    for (pos, &e) in c.members().iter().enumerate() {
                        let sign = if pos % 2 == 0 { -1 } else { 1 };
                        let face = clique_index[n - 1][&c.without(pos)];
                        if let Some(py) = position[action.act(x, e)] {
                            d.add_at(py * lower.len() + face, col, sign);
                        }
                        d.add_at(px * lower.len() + face, col, -sign);
                    }
                }
            }
            d
        })
        .collect();

    ChainComplex::new(0, bases, boundaries).expect("kset complex shapes are consistent")
}

/// Homology `H_0 ..= H_kmax` of an action. The complex is built one degree
/// past `kmax` so the top group is exact; degrees past the maximal clique
/// size are zero.
pub fn kset_homology(action: &PointedAction, variant: Variant, kmax: usize) -> Vec<FinAbGroup> {
    let cc = kset_complex(action, Some(kmax + 1), variant);
    let mut groups = homology(&cc);
    groups.resize(kmax + 1, FinAbGroup::trivial());
    groups
}

/// Simplicial chains: degree `k` is free on `(k+1)`-vertex faces, with the
/// alternating-sign boundary in vertex order. The augmented complex adds the
/// empty face in degree `-1` (omitted for the empty complex).
pub fn simplicial_chain_complex(sc: &SimplicialComplex, augmented: bool) -> ChainComplex {
    let all = sc.all_faces();
    let start = if augmented { 0 } else { 1 };
    let faces: Vec<&Vec<Vec<usize>>> = all.iter().skip(start).collect();
    let index: Vec<HashMap<&[usize], usize>> =
        faces.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect()).collect();
    let bases = faces
        .iter()
        .map(|fs| fs.iter().map(|f| BasisLabel::Face(sc.face_names(f))).collect())
        .collect();
    let boundaries = (1..faces.len())
        .map(|n| {
            let mut d = IntMatrix::zeros(faces[n - 1].len(), faces[n].len());
            for (col, f) in faces[n].iter().enumerate() {
                for skip in 0..f.len() {
                    let mut sub = f.clone();
                    sub.remove(skip);
                    let sign = if skip % 2 == 0 { 1 } else { -1 };
                    d.add_at(index[n - 1][sub.as_slice()], col, sign);
                }
            }
            d
        })
        .collect();
    let bottom = if augmented && !sc.is_empty() { -1 } else { 0 };
    ChainComplex::new(bottom, bases, boundaries).expect("simplicial complex shapes are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::IndependenceAlphabet;
    use crate::intlinalg::homology_at;

    fn a1() -> IndependenceAlphabet {
        IndependenceAlphabet::new(&["a", "b"], &[("a", "b")]).unwrap()
    }

    fn a2() -> IndependenceAlphabet {
        IndependenceAlphabet::new::<&str, &str>(&["a", "b"], &[]).unwrap()
    }

    fn labels(cc: &ChainComplex, n: i64) -> Vec<String> {
        cc.basis(n).iter().map(ToString::to_string).collect()
    }

    fn column(d: &IntMatrix, col: usize) -> Vec<i64> {
        (0..d.rows()).map(|r| i64::try_from(d.get(r, col)).unwrap()).collect()
    }

    #[test]
    fn chain_x0_over_a2() {
        let cc = kset_complex(&PointedAction::chain_set(&a2(), 0), None, Variant::Unreduced);
        assert_eq!((0..=2).map(|n| cc.dim(n)).collect::<Vec<_>>(), [2, 4, 0]);
        assert_eq!(labels(&cc, 0), ["(x0,{})", "(*,{})"]);
        assert_eq!(labels(&cc, 1), ["(x0,{a})", "(x0,{b})", "(*,{a})", "(*,{b})"]);
        let d1 = cc.boundary(1).unwrap();
        // d(x0,a) = -[(*) - (x0)] = (x0) - (*)
        assert_eq!(column(d1, 0), [1, -1]);
        assert_eq!(column(d1, 1), [1, -1]);
        assert_eq!(column(d1, 2), [0, 0]);
        assert_eq!(column(d1, 3), [0, 0]);
        assert_eq!(homology_at(&cc, 0).unwrap().to_string(), "Z");
        assert_eq!(homology_at(&cc, 1).unwrap().to_string(), "Z^3");
    }

    #[test]
    fn chain_x0_over_a1_top_boundary() {
        let cc = kset_complex(&PointedAction::chain_set(&a1(), 0), None, Variant::Unreduced);
        assert_eq!(labels(&cc, 2), ["(x0,{a,b})", "(*,{a,b})"]);
        let d2 = cc.boundary(2).unwrap();
        // rows: (x0,a) (x0,b) (*,a) (*,b)
        assert_eq!(column(d2, 0), [-1, 1, 1, -1]);
        assert_eq!(column(d2, 1), [0, 0, 0, 0]);
        assert!(cc.verify_dd_zero().passed());
    }

    #[test]
    fn base_point_alone_has_zero_differentials() {
        for alpha in [a1(), a2(), IndependenceAlphabet::empty()] {
            let cc = kset_complex(&PointedAction::chain_set(&alpha, -1), None, Variant::Unreduced);
            assert!(cc.degrees().filter_map(|n| cc.boundary(n)).all(IntMatrix::is_zero));
        }
    }

    #[test]
    fn kmax_truncates_and_caps() {
        let act = PointedAction::chain_set(&a1(), 1);
        assert_eq!(kset_complex(&act, Some(1), Variant::Unreduced).top_degree(), 1);
        assert_eq!(kset_complex(&act, Some(7), Variant::Unreduced).top_degree(), 2);
        assert_eq!(kset_complex(&act, None, Variant::Reduced).dim(2), 2);
    }

    #[test]
    fn reduced_x0_is_augmented_clique_complex() {
        let alpha = IndependenceAlphabet::new(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
            .unwrap();
        let reduced = kset_complex(&PointedAction::chain_set(&alpha, 0), None, Variant::Reduced);
        let simplicial = simplicial_chain_complex(&SimplicialComplex::clique_complex(&alpha), true);
        assert_eq!(reduced.top_degree(), simplicial.top_degree() + 1);
        for n in reduced.degrees() {
            assert_eq!(reduced.dim(n), simplicial.dim(n - 1));
            assert_eq!(reduced.boundary(n), simplicial.boundary(n - 1));
        }
    }

    #[test]
    fn hollow_triangle_boundary() {
        let sc = SimplicialComplex::builtin("hollow_triangle").unwrap();
        let cc = simplicial_chain_complex(&sc, false);
        let d1 = cc.boundary(1).unwrap();
        assert_eq!(d1, &IntMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]));
        assert_eq!(homology_at(&cc, 1).unwrap().to_string(), "Z");
        assert_eq!(homology_at(&cc, 0).unwrap().to_string(), "Z");
    }

    #[test]
    fn augmented_small_complexes_are_acyclic() {
        let point = SimplicialComplex::new::<&str>(&["v"], &[]).unwrap();
        let edge = SimplicialComplex::new(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        for sc in [point, edge] {
            let cc = simplicial_chain_complex(&sc, true);
            assert_eq!(cc.bottom_degree(), -1);
            assert!(homology(&cc).iter().all(FinAbGroup::is_trivial));
        }
    }

    #[test]
    fn direct_sum_blocks() {
        let x = kset_complex(&PointedAction::chain_set(&a1(), 0), None, Variant::Unreduced);
        let y = simplicial_chain_complex(&SimplicialComplex::builtin("cycle4").unwrap(), true);
        let s = x.direct_sum(&y);
        assert_eq!(s.degrees(), -1..=2);
        for n in -1..=2 {
            assert_eq!(s.dim(n), x.dim(n) + y.dim(n));
        }
        assert!(s.verify_dd_zero().passed());
        let zero = ChainComplex::new(0, vec![], vec![]).unwrap();
        assert_eq!(x.direct_sum(&zero), x);
        assert_eq!(zero.direct_sum(&x), x);
    }

    #[test]
    fn corrupted_matrix_fails_with_witness() {
        let cc = kset_complex(&PointedAction::chain_set(&a1(), 0), None, Variant::Unreduced);
        let mut bases = Vec::new();
        let mut bounds = Vec::new();
        for n in cc.degrees() {
            bases.push(cc.basis(n).to_vec());
            if let Some(d) = cc.boundary(n) {
                bounds.push(d.clone());
            }
        }
        bounds[1].set(0, 0, 5);
        let bad = ChainComplex::new(0, bases, bounds).unwrap();
        assert_eq!(bad.verify_dd_zero(), DdCheck::Fail { degree: 1, row: 0, col: 0 });
    }

    #[test]
    fn shape_mismatch_rejected() {
        let f = |s: &str| BasisLabel::Face(vec![s.into()]);
        let err = ChainComplex::new(0, vec![vec![f("a")], vec![f("b")]], vec![IntMatrix::zeros(2, 1)]).unwrap_err();
        assert!(matches!(err, ComplexError::ShapeMismatch { degree: 0, .. }));
        let err = ChainComplex::new(0, vec![vec![f("a")]], vec![IntMatrix::zeros(1, 1)]).unwrap_err();
        assert!(matches!(err, ComplexError::BoundaryCount { .. }));
    }

    #[test]
    fn dump_format() {
        let cc = kset_complex(&PointedAction::chain_set(&a2(), 0), None, Variant::Unreduced);
        assert_eq!(cc.dump(), "degree 1 rows 2 cols 4\n1 1 0 0\n-1 -1 0 0\n");
    }
}
