//! Finite abstract simplicial complexes, clique complexes of independence
//! alphabets, barycentric subdivision and reduced homology.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::alphabet::IndependenceAlphabet;
use crate::complex::simplicial_chain_complex;
use crate::intlinalg::{homology, FinAbGroup};
use crate::text::statements;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("DuplicateVertex: vertex {0:?} declared twice")]
    DuplicateVertex(String),
    #[error("UnknownVertex: {0:?} is not a declared vertex")]
    UnknownVertex(String),
    #[error("RepeatedVertex: face lists vertex {0:?} more than once")]
    RepeatedVertex(String),
    #[error("NotFlag: complex is not the clique complex of its 1-skeleton")]
    NotFlag,
    #[error("UnknownName: no builtin complex named {0:?}")]
    UnknownName(String),
    #[error("Empty: operation needs a nonempty complex")]
    Empty,
    #[error("Syntax: line {line}: {message}")]
    Syntax { line: usize, message: String },
}

pub const BUILTIN_NAMES: [&str; 5] = ["delta2", "hollow_triangle", "cycle4", "two_points", "rp2_min"];

/// Six-vertex triangulation of the real projective plane.
const RP2_MIN: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 5],
    [1, 4, 6],
    [1, 5, 6],
    [2, 3, 6],
    [2, 4, 5],
    [2, 5, 6],
    [3, 4, 5],
    [3, 4, 6],
];

/// Vertices in declaration order and the maximal faces, each a sorted list
/// of vertex indices. Maximal faces form an antichain and are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    maximal: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the downward closure of `faces`. Vertices not covered by any
    /// listed face become isolated points.
    pub fn new<S: AsRef<str>>(vertices: &[S], faces: &[Vec<S>]) -> Result<Self, SimplicialError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_ref(), i).is_some() {
                return Err(SimplicialError::DuplicateVertex(v.as_ref().to_string()));
            }
        }
        let mut sets = Vec::with_capacity(faces.len());
        for face in faces {
            let mut ids = Vec::with_capacity(face.len());
            for v in face {
                let i = *index.get(v.as_ref()).ok_or_else(|| SimplicialError::UnknownVertex(v.as_ref().to_string()))?;
                if ids.contains(&i) {
                    return Err(SimplicialError::RepeatedVertex(v.as_ref().to_string()));
                }
                ids.push(i);
            }
            sets.push(ids);
        }
        let names = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        Ok(Self::from_index_faces(names, sets))
    }

    fn from_index_faces(vertices: Vec<String>, faces: Vec<Vec<usize>>) -> Self {
        let mut covered = vec![false; vertices.len()];
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut f in faces {
            f.sort_unstable();
            f.iter().for_each(|&v| covered[v] = true);
            if !f.is_empty() {
                all.insert(f);
            }
        }
        all.extend((0..vertices.len()).filter(|&v| !covered[v]).map(|v| vec![v]));
        let all: Vec<Vec<usize>> = all.into_iter().collect();
        let maximal = all
            .iter()
            .filter(|f| !all.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();
        Self { vertices, maximal }
    }

    /// The clique (flag) complex of the commutation graph.
    pub fn clique_complex(alpha: &IndependenceAlphabet) -> Self {
        let vertices = alpha.generators().to_vec();
        let cliques = alpha.all_cliques();
        let extendable = |c: &[usize]| (0..alpha.len()).any(|w| !c.contains(&w) && c.iter().all(|&v| alpha.commute(v, w)));
        let maximal = cliques
            .iter()
            .flatten()
            .filter(|c| !c.is_empty() && !extendable(c.members()))
            .map(|c| c.members().to_vec())
            .sorted()
            .collect();
        Self { vertices, maximal }
    }

    pub fn builtin(name: &str) -> Result<Self, SimplicialError> {
        let numbered = |n: usize, faces: &[&[usize]]| {
            let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let faces: Vec<Vec<usize>> = faces.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
            Self::from_index_faces(vertices, faces)
        };
        Ok(match name {
            "delta2" => numbered(3, &[&[1, 2, 3]]),
            "hollow_triangle" => numbered(3, &[&[1, 2], &[1, 3], &[2, 3]]),
            "cycle4" => numbered(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]),
            "two_points" => numbered(2, &[]),
            "rp2_min" => numbered(6, &RP2_MIN.iter().map(|f| &f[..]).collect::<Vec<_>>()),
            other => return Err(SimplicialError::UnknownName(other.to_string())),
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn maximal_faces(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the largest face; `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.maximal.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// All `k`-vertex faces, lexicographic in vertex order.
    pub fn faces(&self, k: usize) -> Vec<Vec<usize>> {
        let set: BTreeSet<Vec<usize>> =
            self.maximal.iter().filter(|f| f.len() >= k).flat_map(|f| f.iter().copied().combinations(k)).collect();
        set.into_iter().collect()
    }

    /// Faces grouped by vertex count, `1..=dimension+1`; index 0 holds the
    /// empty face when the complex is nonempty.
    pub fn all_faces(&self) -> Vec<Vec<Vec<usize>>> {
        (0..=(self.dimension() + 1) as usize).map(|k| self.faces(k)).collect()
    }

    pub fn face_names(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    /// Vertices are the nonempty faces (by size, then lexicographic), named
    /// `{v1,v2,...}`; simplices are chains under strict inclusion.
    pub fn barycentric_subdivision(&self) -> Result<Self, SimplicialError> {
        if self.is_empty() {
            return Err(SimplicialError::Empty);
        }
        let faces: Vec<Vec<usize>> = self.all_faces().into_iter().skip(1).flatten().collect();
        let position: HashMap<&[usize], usize> = faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let names = faces.iter().map(|f| format!("{{{}}}", self.face_names(f).join(","))).collect();
        let mut flags = Vec::new();
        for top in &self.maximal {
            for order in top.iter().copied().permutations(top.len()) {
                let flag = (1..=order.len())
                    .map(|k| {
                        let mut f = order[..k].to_vec();
                        f.sort_unstable();
                        position[f.as_slice()]
                    })
                    .collect();
                flags.push(flag);
            }
        }
        Ok(Self::from_index_faces(names, flags))
    }

    fn skeleton_alphabet(&self) -> IndependenceAlphabet {
        let pairs: Vec<(&str, &str)> =
            self.faces(2).iter().map(|e| (self.vertices[e[0]].as_str(), self.vertices[e[1]].as_str())).collect();
        IndependenceAlphabet::new(&self.vertices, &pairs).expect("edges of a complex form a valid alphabet")
    }

    /// Whether the complex equals the clique complex of its 1-skeleton.
    pub fn is_flag(&self) -> bool {
        Self::clique_complex(&self.skeleton_alphabet()) == *self
    }

    /// Generators are the vertices, commuting pairs the edges.
    pub fn to_alphabet(&self) -> Result<IndependenceAlphabet, SimplicialError> {
        let alpha = self.skeleton_alphabet();
        if Self::clique_complex(&alpha) != *self {
            return Err(SimplicialError::NotFlag);
        }
        Ok(alpha)
    }

    /// Alternating face count `sum_k (-1)^k f_k` over nonempty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.all_faces().iter().enumerate().skip(1).map(|(k, fs)| if k % 2 == 1 { fs.len() as i64 } else { -(fs.len() as i64) }).sum()
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

/// Reduced homology `H~_0 ..= H~_kmax` from the augmented chain complex.
pub fn reduced_homology(sc: &SimplicialComplex, kmax: usize) -> Vec<FinAbGroup> {
    let cc = simplicial_chain_complex(sc, true);
    let groups = homology(&cc);
    (0..=kmax as i64)
        .map(|k| {
            if cc.degrees().contains(&k) {
                groups[(k - cc.bottom_degree()) as usize].clone()
            } else {
                FinAbGroup::trivial()
            }
        })
        .collect()
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for face in self.maximal.iter().filter(|face| face.len() > 1) {
            writeln!(f, "face: {}", self.face_names(face).join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for SimplicialComplex {
    type Err = SimplicialError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut vertices: Option<Vec<&str>> = None;
        let mut faces = Vec::new();
        for st in statements(text) {
            match st.key {
                "vertices" => vertices.get_or_insert_with(Vec::new).extend(&st.args),
                "face" if !st.args.is_empty() => faces.push(st.args),
                "face" => return Err(SimplicialError::Syntax { line: st.line, message: "empty face".into() }),
                other => {
                    return Err(SimplicialError::Syntax { line: st.line, message: format!("unknown statement {other:?}") })
                }
            }
        }
        let vertices = vertices.ok_or(SimplicialError::Syntax { line: 0, message: "missing vertices line".into() })?;
        Self::new(&vertices, &faces)
    }
}
