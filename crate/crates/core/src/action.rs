//! Finite pointed right `M(E, I)`-sets given by one transition table per
//! generator, and the chain sets `X_n = {x_0, ..., x_n, *}`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::alphabet::IndependenceAlphabet;
use crate::text::statements;

pub const BASE_NAME: &str = "*";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("BaseMoved: base point sent to {target:?} by generator {generator:?}")]
    BaseMoved { generator: String, target: String },
    #[error("CommutationViolation: {element}.{first}.{second} != {element}.{second}.{first}")]
    CommutationViolation { element: String, first: String, second: String },
    #[error("MissingEntry: no transition for ({element}, {generator})")]
    MissingEntry { element: String, generator: String },
    #[error("DuplicateEntry: conflicting transitions for ({element}, {generator})")]
    DuplicateEntry { element: String, generator: String },
    #[error("DuplicateElement: element {0:?} declared twice")]
    DuplicateElement(String),
    #[error("UnknownElement: {0:?} is not a declared element")]
    UnknownElement(String),
    #[error("UnknownGenerator: {0:?} is not a generator of the alphabet")]
    UnknownGenerator(String),
    #[error("NotASubAlphabet: {0}")]
    NotASubAlphabet(String),
    #[error("Syntax: line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// A pointed set with a right action of `M(E, I)` that fixes the base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedAction {
    alphabet: IndependenceAlphabet,
    elements: Vec<String>,
    base: usize,
    /// `table[x][e] = x . e`
    table: Vec<Vec<usize>>,
}

impl PointedAction {
    /// Validates a transition list. Entry order is irrelevant, repeated
    /// identical entries are accepted, and missing entries on the base point
    /// default to the base point.
    pub fn new<S: AsRef<str>>(
        alphabet: IndependenceAlphabet,
        elements: &[S],
        base: &str,
        entries: &[(S, S, S)],
    ) -> Result<Self, ActionError> {
        let action = Self::without_law_checks(alphabet, elements, base, entries)?;
        action.check_laws()?;
        Ok(action)
    }

    /// Like [`PointedAction::new`] but only checks names and totality: the
    /// base point may move and commuting generators may fail to commute.
    /// Such tables do not define monoid actions; they exist to exercise
    /// `d o d = 0` detection.
    pub fn without_law_checks<S: AsRef<str>>(
        alphabet: IndependenceAlphabet,
        elements: &[S],
        base: &str,
        entries: &[(S, S, S)],
    ) -> Result<Self, ActionError> {
        let mut index = HashMap::new();
        let elements: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, x) in elements.iter().enumerate() {
            if index.insert(x.as_str(), i).is_some() {
                return Err(ActionError::DuplicateElement(x.clone()));
            }
        }
        let elem = |x: &str| index.get(x).copied().ok_or_else(|| ActionError::UnknownElement(x.to_string()));
        let base = elem(base)?;
        let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet.len()]; elements.len()];
        for (x, e, y) in entries {
            let (x, e, y) = (x.as_ref(), e.as_ref(), y.as_ref());
            let xi = elem(x)?;
            let ei = alphabet.index_of(e).ok_or_else(|| ActionError::UnknownGenerator(e.to_string()))?;
            let yi = elem(y)?;
            match table[xi][ei] {
                Some(prev) if prev != yi => {
                    return Err(ActionError::DuplicateEntry { element: x.into(), generator: e.into() })
                }
                _ => table[xi][ei] = Some(yi),
            }
        }
        let mut full = Vec::with_capacity(elements.len());
        for (xi, row) in table.into_iter().enumerate() {
            let row = row
                .into_iter()
                .enumerate()
                .map(|(ei, y)| match y {
                    Some(y) => Ok(y),
                    None if xi == base => Ok(base),
                    None => Err(ActionError::MissingEntry {
                        element: elements[xi].clone(),
                        generator: alphabet.generators()[ei].clone(),
                    }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            full.push(row);
        }
        Ok(Self { alphabet, elements, base, table: full })
    }

    /// The first violated action law, if any.
    pub fn check_laws(&self) -> Result<(), ActionError> {
        let gens = self.alphabet.generators();
        for (e, &y) in self.table[self.base].iter().enumerate() {
            if y != self.base {
                return Err(ActionError::BaseMoved { generator: gens[e].clone(), target: self.elements[y].clone() });
            }
        }
        let pairs = self.alphabet.commuting_pairs();
        for x in 0..self.elements.len() {
            for &(e, f) in &pairs {
                if self.act(self.act(x, e), f) != self.act(self.act(x, f), e) {
                    return Err(ActionError::CommutationViolation {
                        element: self.elements[x].clone(),
                        first: gens[e].clone(),
                        second: gens[f].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The chain set `X_n`: every generator sends `x_i` to `x_{i+1}`, `x_n`
    /// to `*`, and fixes `*`. `X_{-1}` is the base point alone.
    ///
    /// Panics if `n < -1`.
    pub fn chain_set(alphabet: &IndependenceAlphabet, n: i64) -> Self {
        assert!(n >= -1, "chain_set requires n >= -1, got {n}");
        let len = usize::try_from(n + 1).expect("n >= -1");
        let mut elements: Vec<String> = (0..len).map(|i| format!("x{i}")).collect();
        elements.push(BASE_NAME.to_string());
        let base = len;
        let table = (0..=len).map(|i| vec![(i + 1).min(base); alphabet.len()]).collect();
        Self { alphabet: alphabet.clone(), elements, base, table }
    }

    pub fn alphabet(&self) -> &IndependenceAlphabet {
        &self.alphabet
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn act(&self, x: usize, e: usize) -> usize {
        self.table[x][e]
    }

    /// `x . w` for a word `w` of generator indices, read left to right.
    pub fn act_word(&self, x: usize, word: &[usize]) -> usize {
        word.iter().fold(x, |y, &e| self.act(y, e))
    }

    /// Non-base elements in declaration order, then the base point.
    pub fn basis_order(&self) -> Vec<usize> {
        (0..self.elements.len()).filter(|&x| x != self.base).chain(std::iter::once(self.base)).collect()
    }

    /// The same pointed set acted on by a sub-alphabet. `sub` must be the
    /// induced sub-alphabet on its own generators.
    pub fn restrict(&self, sub: &IndependenceAlphabet) -> Result<Self, ActionError> {
        let induced = self
            .alphabet
            .restrict(sub.generators())
            .map_err(|e| ActionError::NotASubAlphabet(e.to_string()))?;
        if induced != *sub {
            return Err(ActionError::NotASubAlphabet(
                "commutation relation differs from the induced relation".to_string(),
            ));
        }
        let cols: Vec<usize> = sub.generators().iter().map(|g| self.alphabet.index_of(g).expect("checked")).collect();
        let table = self.table.iter().map(|row| cols.iter().map(|&e| row[e]).collect()).collect();
        Ok(Self { alphabet: sub.clone(), elements: self.elements.clone(), base: self.base, table })
    }

    /// Parses the action text format against a known alphabet.
    pub fn parse(text: &str, alphabet: &IndependenceAlphabet) -> Result<Self, ActionError> {
        let mut elements: Option<Vec<&str>> = None;
        let mut base: Option<&str> = None;
        let mut entries = Vec::new();
        for st in statements(text) {
            let syntax = |message: &str| ActionError::Syntax { line: st.line, message: message.to_string() };
            match (st.key, st.args.as_slice()) {
                ("elements", args) => elements.get_or_insert_with(Vec::new).extend(args),
                ("base", [b]) => {
                    if base.replace(b).is_some() {
                        return Err(syntax("base declared twice"));
                    }
                }
                ("base", _) => return Err(syntax("base takes exactly one element")),
                ("act", [x, e, y]) => entries.push((*x, *e, *y)),
                ("act", _) => return Err(syntax("act takes: element generator element")),
                (other, _) => return Err(syntax(&format!("unknown statement {other:?}"))),
            }
        }
        let elements = elements.ok_or(ActionError::Syntax { line: 0, message: "missing elements line".into() })?;
        let base = base.ok_or(ActionError::Syntax { line: 0, message: "missing base line".into() })?;
        Self::new(alphabet.clone(), &elements, base, &entries)
    }
}

/// Canonical text form: all non-base transitions, element-major then
/// generator order. Base lines are omitted since they default to fixed.
impl fmt::Display for PointedAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "elements: {}", self.elements.join(" "))?;
        writeln!(f, "base: {}", self.elements[self.base])?;
        for (x, row) in self.table.iter().enumerate() {
            if x == self.base {
                continue;
            }
            for (e, &y) in row.iter().enumerate() {
                writeln!(f, "act {} {} {}", self.elements[x], self.alphabet.generators()[e], self.elements[y])?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> IndependenceAlphabet {
        IndependenceAlphabet::new(&["a", "b"], &[("a", "b")]).unwrap()
    }

    fn a2() -> IndependenceAlphabet {
        IndependenceAlphabet::new::<&str, &str>(&["a", "b"], &[]).unwrap()
    }

    fn a3() -> IndependenceAlphabet {
        IndependenceAlphabet::new(&["a", "b", "c"], &[("a", "b")]).unwrap()
    }

    #[test]
    fn chain_action_on_a1_is_valid() {
        let entries = [("x0", "a", "x1"), ("x0", "b", "x1"), ("x1", "a", "*"), ("x1", "b", "*")];
        let act = PointedAction::new(a1(), &["x0", "x1", "*"], "*", &entries).unwrap();
        assert_eq!(act.act_word(0, &[0, 1]), act.base());
        assert_eq!(act.act_word(0, &[1, 0]), act.base());
        assert_eq!(act, PointedAction::chain_set(&a1(), 1));
    }

    #[test]
    fn commutation_violation_reports_witness() {
        // x0.a = x1, x1.b = *, but x0.b = x2 and x2.a = x1: x0.ab = *, x0.ba = x1.
        let entries = [
            ("x0", "a", "x1"),
            ("x0", "b", "x2"),
            ("x1", "a", "*"),
            ("x1", "b", "*"),
            ("x2", "a", "x1"),
            ("x2", "b", "*"),
        ];
        let err = PointedAction::new(a1(), &["x0", "x1", "x2", "*"], "*", &entries).unwrap_err();
        assert_eq!(
            err,
            ActionError::CommutationViolation { element: "x0".into(), first: "a".into(), second: "b".into() }
        );
    }

    #[test]
    fn missing_and_duplicate_entries() {
        let entries = [("x0", "a", "x1"), ("x0", "b", "x1"), ("x1", "a", "*")];
        assert_eq!(
            PointedAction::new(a1(), &["x0", "x1", "*"], "*", &entries),
            Err(ActionError::MissingEntry { element: "x1".into(), generator: "b".into() })
        );
        let entries = [("x0", "a", "*"), ("x0", "a", "x0"), ("x0", "b", "*")];
        assert_eq!(
            PointedAction::new(a1(), &["x0", "*"], "*", &entries),
            Err(ActionError::DuplicateEntry { element: "x0".into(), generator: "a".into() })
        );
        let entries = [("x0", "a", "*"), ("x0", "a", "*"), ("x0", "b", "*")];
        assert!(PointedAction::new(a1(), &["x0", "*"], "*", &entries).is_ok());
    }

    #[test]
    fn base_must_stay_fixed() {
        let entries = [("x0", "a", "*"), ("x0", "b", "*"), ("*", "a", "x0")];
        assert_eq!(
            PointedAction::new(a1(), &["x0", "*"], "*", &entries),
            Err(ActionError::BaseMoved { generator: "a".into(), target: "x0".into() })
        );
    }

    #[test]
    fn unknown_names() {
        assert_eq!(
            PointedAction::new::<&str>(a1(), &["x0", "*"], "y", &[]),
            Err(ActionError::UnknownElement("y".into()))
        );
        assert_eq!(
            PointedAction::new(a1(), &["x0", "*"], "*", &[("x0", "z", "*")]),
            Err(ActionError::UnknownGenerator("z".into()))
        );
        assert_eq!(
            PointedAction::new(a1(), &["x0", "*"], "*", &[("x0", "a", "q")]),
            Err(ActionError::UnknownElement("q".into()))
        );
    }

    #[test]
    fn chain_set_examples() {
        let x = PointedAction::chain_set(&a1(), -1);
        assert_eq!(x.elements(), ["*"]);
        assert_eq!(x.act(0, 0), 0);
        let x = PointedAction::chain_set(&a1(), 0);
        assert_eq!(x.elements(), ["x0", "*"]);
        assert_eq!((x.act(0, 0), x.act(0, 1)), (1, 1));
        let x = PointedAction::chain_set(&a2(), 2);
        assert_eq!(x.elements(), ["x0", "x1", "x2", "*"]);
        for e in 0..2 {
            assert_eq!((0..4).map(|i| x.act(i, e)).collect::<Vec<_>>(), [1, 2, 3, 3]);
        }
    }

    #[test]
    fn restrict_examples() {
        let only_a = a2().restrict(&["a"]).unwrap();
        let r = PointedAction::chain_set(&a2(), 0).restrict(&only_a).unwrap();
        assert_eq!(r, PointedAction::chain_set(&only_a, 0));
        let r = PointedAction::chain_set(&a3(), 1).restrict(&a1()).unwrap();
        assert_eq!(r, PointedAction::chain_set(&a1(), 1));
        let full = PointedAction::chain_set(&a3(), 1);
        assert_eq!(full.restrict(&a3()).unwrap(), full);
        // {a, b} without the commuting pair is not the induced sub-alphabet of A3.
        assert!(matches!(full.restrict(&a2()), Err(ActionError::NotASubAlphabet(_))));
        let foreign = IndependenceAlphabet::new::<&str, &str>(&["q"], &[]).unwrap();
        assert!(matches!(full.restrict(&foreign), Err(ActionError::NotASubAlphabet(_))));
    }

    #[test]
    fn text_round_trip() {
        let text = "elements: x0 x1 *\nbase: *\nact x0 a x1\nact x0 b x1\nact x1 a *\nact x1 b *\n";
        let act = PointedAction::parse(text, &a1()).unwrap();
        assert_eq!(act, PointedAction::chain_set(&a1(), 1));
        let once = act.to_string();
        assert_eq!(once, text);
        assert_eq!(PointedAction::parse(&once, &a1()).unwrap().to_string(), once);
    }

    #[test]
    fn text_errors() {
        let err = PointedAction::parse("elements: x0 *\nbase: y\n", &a1()).unwrap_err();
        assert_eq!(err, ActionError::UnknownElement("y".into()));
        let err = PointedAction::parse("elements: x0 *\nbase: *\nact x0 a\n", &a1()).unwrap_err();
        assert!(matches!(err, ActionError::Syntax { line: 3, .. }));
        let err = PointedAction::parse("elements: x0 *\n", &a1()).unwrap_err();
        assert!(matches!(err, ActionError::Syntax { .. }));
    }
}
