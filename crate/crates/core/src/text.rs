//! Line-oriented `key: values` input shared by the alphabet, action and
//! complex file formats. `#` starts a comment; blank lines are ignored.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Statement<'a> {
    pub line: usize,
    pub key: &'a str,
    pub args: Vec<&'a str>,
}

/// Splits `text` into statements. A statement is either `key: a b c` or,
/// for keys without a colon, `key a b c`.
pub(crate) fn statements(text: &str) -> impl Iterator<Item = Statement<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return None;
        }
        let (key, rest) = match line.split_once(':') {
            Some((k, r)) if !k.contains(char::is_whitespace) => (k.trim(), r),
            _ => line.split_once(char::is_whitespace).unwrap_or((line, "")),
        };
        Some(Statement { line: i + 1, key, args: rest.split_whitespace().collect() })
    })
}
