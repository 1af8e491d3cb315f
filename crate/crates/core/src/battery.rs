//! Versioned manifest of the standard test alphabets.

use crate::alphabet::IndependenceAlphabet;
use crate::simplicial::SimplicialComplex;

/// Bump whenever an instance is added, removed, or changed.
pub const BATTERY_VERSION: u32 = 1;

pub const BATTERY_NAMES: [&str; 6] = ["A1", "A2", "A3", "C4", "K4", "RP2SD"];

/// Looks up a battery alphabet by name.
///
/// * `A1`: two commuting generators
/// * `A2`: two free generators
/// * `A3`: `a, b` commuting, `c` free
/// * `C4`: commutation graph a 4-cycle
/// * `K4`: four pairwise commuting generators
/// * `RP2SD`: 31 generators, commutation graph the 1-skeleton of the
///   barycentric subdivision of the 6-vertex projective plane
pub fn battery_alphabet(name: &str) -> Option<IndependenceAlphabet> {
    let build = |names: &[&str], pairs: &[(&str, &str)]| IndependenceAlphabet::new(names, pairs).expect("battery alphabet");
    Some(match name {
        "A1" => build(&["a", "b"], &[("a", "b")]),
        "A2" => build(&["a", "b"], &[]),
        "A3" => build(&["a", "b", "c"], &[("a", "b")]),
        "C4" => build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]),
        "K4" => build(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]),
        "RP2SD" => SimplicialComplex::builtin("rp2_min")
            .and_then(|sc| sc.barycentric_subdivision())
            .and_then(|sd| sd.to_alphabet())
            .expect("subdivision of a complex is flag"),
        _ => return None,
    })
}

pub fn battery() -> Vec<(&'static str, IndependenceAlphabet)> {
    BATTERY_NAMES.iter().map(|&n| (n, battery_alphabet(n).expect("listed name"))).collect()
}
