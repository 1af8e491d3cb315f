//! Independence alphabets `(E, I)`: a finite ordered set of generators and an
//! irreflexive symmetric commutation relation, with clique enumeration over
//! the commutation graph.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::text::statements;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("DuplicateGenerator: generator {0:?} declared twice")]
    DuplicateGenerator(String),
    #[error("SelfPair: generator {0:?} cannot commute with itself (irreflexivity)")]
    SelfPair(String),
    #[error("UnknownGenerator: {0:?} is not a declared generator")]
    UnknownGenerator(String),
    #[error("Syntax: line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Generators in declaration order plus the commutation relation.
///
/// Declaration order is the total order used for clique sorting and for
/// boundary signs everywhere downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceAlphabet {
    generators: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<bool>>,
}

/// A set of pairwise commuting generators, stored as strictly increasing
/// generator indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique(Vec<usize>);

impl Clique {
    pub fn empty() -> Self {
        Clique(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The clique with its `pos`-th member removed.
    pub fn without(&self, pos: usize) -> Clique {
        let mut m = self.0.clone();
        m.remove(pos);
        Clique(m)
    }

    pub fn names<'a>(&self, alpha: &'a IndependenceAlphabet) -> Vec<&'a str> {
        self.0.iter().map(|&i| alpha.generators[i].as_str()).collect()
    }
}

impl IndependenceAlphabet {
    /// Validates generator names and commuting pairs. Pair orientation and
    /// repeated pairs are normalized away.
    pub fn new<S, P>(names: &[S], pairs: &[(P, P)]) -> Result<Self, AlphabetError>
    where
        S: AsRef<str>,
        P: AsRef<str>,
    {
        let mut index = HashMap::with_capacity(names.len());
        let mut generators = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if index.insert(name.to_string(), generators.len()).is_some() {
                return Err(AlphabetError::DuplicateGenerator(name.to_string()));
            }
            generators.push(name.to_string());
        }
        let mut adjacency = vec![vec![false; generators.len()]; generators.len()];
        for (a, b) in pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let lookup = |n: &str| index.get(n).copied().ok_or_else(|| AlphabetError::UnknownGenerator(n.to_string()));
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(AlphabetError::SelfPair(a.to_string()));
            }
            adjacency[i][j] = true;
            adjacency[j][i] = true;
        }
        Ok(Self { generators, index, adjacency })
    }

    pub fn empty() -> Self {
        Self::new::<&str, &str>(&[], &[]).expect("empty alphabet is valid")
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn commute(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    /// Commuting pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.adjacency[i][j]).collect()
    }

    /// All `n`-element cliques, lexicographic. `n = 0` gives the empty clique.
    pub fn cliques(&self, n: usize) -> Vec<Clique> {
        let mut out = Vec::new();
        let all: Vec<usize> = (0..self.len()).collect();
        self.extend_cliques(&mut Vec::new(), &all, &mut |c| {
            if c.len() == n {
                out.push(Clique(c.to_vec()));
            }
            c.len() < n
        });
        out
    }

    /// Cliques grouped by size, `0..=max_clique_size()`, each group lexicographic.
    pub fn all_cliques(&self) -> Vec<Vec<Clique>> {
        let mut by_size: Vec<Vec<Clique>> = vec![vec![Clique::empty()]];
        let all: Vec<usize> = (0..self.len()).collect();
        self.extend_cliques(&mut Vec::new(), &all, &mut |c| {
            if !c.is_empty() {
                if by_size.len() <= c.len() {
                    by_size.push(Vec::new());
                }
                by_size[c.len()].push(Clique(c.to_vec()));
            }
            true
        });
        by_size
    }

    pub fn max_clique_size(&self) -> usize {
        self.all_cliques().len() - 1
    }

    /// Depth-first clique growth in lexicographic preorder. `visit` returns
    /// whether to keep extending the current clique.
    fn extend_cliques(&self, current: &mut Vec<usize>, candidates: &[usize], visit: &mut dyn FnMut(&[usize]) -> bool) {
        if !visit(current) {
            return;
        }
        for (pos, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[pos + 1..].iter().copied().filter(|&w| self.adjacency[v][w]).collect();
            current.push(v);
            self.extend_cliques(current, &next, visit);
            current.pop();
        }
    }

    /// Connected components of the commutation graph, each in generator
    /// order, ordered by their first generator.
    pub fn components(&self) -> Vec<Vec<String>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(v) = stack.pop() {
                for w in 0..n {
                    if self.adjacency[v][w] && comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            parts.push(id);
        }
        parts
            .iter()
            .map(|&id| (0..n).filter(|&v| comp[v] == id).map(|v| self.generators[v].clone()).collect())
            .collect()
    }

    /// The induced sub-alphabet on `subset`, keeping declaration order.
    pub fn restrict<S: AsRef<str>>(&self, subset: &[S]) -> Result<Self, AlphabetError> {
        let mut keep = vec![false; self.len()];
        for name in subset {
            let i = self.index_of(name.as_ref()).ok_or_else(|| AlphabetError::UnknownGenerator(name.as_ref().into()))?;
            keep[i] = true;
        }
        let order: Vec<usize> = (0..self.len()).filter(|&i| keep[i]).collect();
        Ok(self.induced(&order))
    }

    /// The same relation with generators redeclared in the order given by
    /// `order`, a permutation of `0..len()`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let mut seen = vec![false; self.len()];
        assert!(
            order.len() == self.len() && order.iter().all(|&i| i < self.len() && !std::mem::replace(&mut seen[i], true)),
            "not a permutation of the generators"
        );
        self.induced(order)
    }

    fn induced(&self, order: &[usize]) -> Self {
        let names: Vec<&str> = order.iter().map(|&i| self.generators[i].as_str()).collect();
        let mut pairs = Vec::new();
        for (a, &i) in order.iter().enumerate() {
            for &j in &order[a + 1..] {
                if self.adjacency[i][j] {
                    pairs.push((self.generators[i].as_str(), self.generators[j].as_str()));
                }
            }
        }
        Self::new(&names, &pairs).expect("induced alphabet of a valid alphabet is valid")
    }
}

impl fmt::Display for IndependenceAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators.join(" "))?;
        for (i, j) in self.commuting_pairs() {
            writeln!(f, "commute: {} {}", self.generators[i], self.generators[j])?;
        }
        Ok(())
    }
}

impl FromStr for IndependenceAlphabet {
    type Err = AlphabetError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut names: Option<Vec<&str>> = None;
        let mut pairs = Vec::new();
        for st in statements(text) {
            let syntax = |message: &str| AlphabetError::Syntax { line: st.line, message: message.to_string() };
            match st.key {
                "generators" => names.get_or_insert_with(Vec::new).extend(&st.args),
                "commute" => match st.args.as_slice() {
                    [a, b] => pairs.push((*a, *b)),
                    _ => return Err(syntax("commute takes exactly two generators")),
                },
                other => return Err(syntax(&format!("unknown statement {other:?}"))),
            }
        }
        let names = names.ok_or(AlphabetError::Syntax { line: 0, message: "missing generators line".into() })?;
        Self::new(&names, &pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(names: &[&str], pairs: &[(&str, &str)]) -> IndependenceAlphabet {
        IndependenceAlphabet::new(names, pairs).unwrap()
    }

    fn names_of(alpha: &IndependenceAlphabet, cs: &[Clique]) -> Vec<String> {
        cs.iter().map(|c| c.names(alpha).concat()).collect()
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            IndependenceAlphabet::new(&["a"], &[("a", "a")]),
            Err(AlphabetError::SelfPair("a".into()))
        );
        assert_eq!(
            IndependenceAlphabet::new(&["a", "b"], &[("a", "c")]),
            Err(AlphabetError::UnknownGenerator("c".into()))
        );
        assert_eq!(
            IndependenceAlphabet::new::<&str, &str>(&["a", "a"], &[]),
            Err(AlphabetError::DuplicateGenerator("a".into()))
        );
    }

    #[test]
    fn pairs_normalized() {
        let a1 = alpha(&["a", "b"], &[("a", "b")]);
        assert_eq!(a1.commuting_pairs(), vec![(0, 1)]);
        assert_eq!(alpha(&["a", "b"], &[("b", "a"), ("a", "b"), ("a", "b")]), a1);
    }

    #[test]
    fn clique_examples() {
        let a1 = alpha(&["a", "b"], &[("a", "b")]);
        assert_eq!(names_of(&a1, &a1.cliques(2)), ["ab"]);
        assert_eq!(a1.cliques(0), vec![Clique::empty()]);
        let a2 = alpha(&["a", "b"], &[]);
        assert!(a2.cliques(2).is_empty());
        let k4 = alpha(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]);
        assert_eq!(names_of(&k4, &k4.cliques(2)), ["ab", "ac", "ad", "bc", "bd", "cd"]);
        assert_eq!(k4.max_clique_size(), 4);
        assert!(k4.cliques(5).is_empty());
    }

    #[test]
    fn empty_alphabet() {
        let e = IndependenceAlphabet::empty();
        assert_eq!(e.cliques(0), vec![Clique::empty()]);
        assert!(e.cliques(1).is_empty());
        assert_eq!(e.all_cliques(), vec![vec![Clique::empty()]]);
        assert!(e.components().is_empty());
    }

    #[test]
    fn components_examples() {
        let a2 = alpha(&["a", "b"], &[]);
        assert_eq!(a2.components(), vec![vec!["a"], vec!["b"]]);
        let a1 = alpha(&["a", "b"], &[("a", "b")]);
        assert_eq!(a1.components(), vec![vec!["a", "b"]]);
        let a3 = alpha(&["a", "b", "c"], &[("a", "b")]);
        assert_eq!(a3.components(), vec![vec!["a", "b"], vec!["c"]]);
        let split = alpha(&["a", "b", "c", "d"], &[("a", "c"), ("b", "d")]);
        assert_eq!(split.components(), vec![vec!["a", "c"], vec!["b", "d"]]);
    }

    #[test]
    fn restrict_examples() {
        let a3 = alpha(&["a", "b", "c"], &[("a", "b")]);
        assert_eq!(a3.restrict(&["b", "a"]).unwrap(), alpha(&["a", "b"], &[("a", "b")]));
        assert_eq!(a3.restrict(&["c"]).unwrap(), alpha(&["c"], &[]));
        let a1 = alpha(&["a", "b"], &[("a", "b")]);
        assert_eq!(a1.restrict::<&str>(&[]).unwrap(), IndependenceAlphabet::empty());
        assert_eq!(a1.restrict(&["z"]), Err(AlphabetError::UnknownGenerator("z".into())));
    }

    #[test]
    fn permuted_reorders_cliques() {
        let a3 = alpha(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let p = a3.permuted(&[2, 1, 0]);
        assert_eq!(p.generators(), ["c", "b", "a"]);
        assert_eq!(names_of(&p, &p.cliques(2)), ["cb", "ba"]);
    }

    #[test]
    fn text_format() {
        let text = "# alphabet\ngenerators: a b c\ncommute: a b\ncommute: b c\ncommute: c b\n";
        let a: IndependenceAlphabet = text.parse().unwrap();
        assert_eq!(a.commuting_pairs(), vec![(0, 1), (1, 2)]);
        assert_eq!(a.to_string(), "generators: a b c\ncommute: a b\ncommute: b c\n");
        assert_eq!(a.to_string().parse::<IndependenceAlphabet>().unwrap(), a);
        assert_eq!("generators:\n".parse::<IndependenceAlphabet>().unwrap(), IndependenceAlphabet::empty());
    }

    #[test]
    fn text_format_errors() {
        let err = "generators: a b\ncommute: a\n".parse::<IndependenceAlphabet>().unwrap_err();
        assert!(matches!(err, AlphabetError::Syntax { line: 2, .. }));
        let err = "generators: a b\nfoo: a\n".parse::<IndependenceAlphabet>().unwrap_err();
        assert!(matches!(err, AlphabetError::Syntax { line: 2, .. }));
        assert!("".parse::<IndependenceAlphabet>().is_err());
        assert_eq!(
            "generators: a\ncommute: a a\n".parse::<IndependenceAlphabet>(),
            Err(AlphabetError::SelfPair("a".into()))
        );
    }
}
