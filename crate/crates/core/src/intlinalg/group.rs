use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::LinalgError;

/// A finitely generated abelian group in invariant-factor form
/// `Z^rank + Z/d_1 + ... + Z/d_s` with `2 <= d_1 | d_2 | ... | d_s`.
///
/// Values are always canonical, so `==` decides isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    rank: usize,
    torsion: Vec<BigUint>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { rank, torsion: Vec::new() }
    }

    /// Accepts only canonical input: every factor at least 2, each dividing the next.
    pub fn new(rank: usize, torsion: Vec<BigUint>) -> Result<Self, LinalgError> {
        let two = BigUint::from(2u8);
        let chained = torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        if torsion.iter().any(|d| *d < two) || !chained {
            let rendered = torsion.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            return Err(LinalgError::NonCanonical(format!("rank {rank}, torsion ({rendered})")));
        }
        Ok(Self { rank, torsion })
    }

    /// Canonical form of `Z^rank + (+)_i Z/c_i` for arbitrary cyclic orders.
    /// An order of 0 is an infinite cyclic summand; orders of 1 vanish.
    pub fn from_cyclic<I>(rank: usize, orders: I) -> Self
    where
        I: IntoIterator<Item = BigUint>,
    {
        let mut rank = rank;
        let mut finite: Vec<BigUint> = Vec::new();
        for c in orders {
            if c.is_zero() {
                rank += 1;
            } else if !c.is_one() {
                finite.push(c);
            }
        }
        Self { rank, torsion: rechain(finite) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// The torsion subgroup.
    pub fn torsion_part(&self) -> FinAbGroup {
        Self { rank: 0, torsion: self.torsion.clone() }
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let merged = self.torsion.iter().chain(&other.torsion).cloned().collect();
        Self { rank: self.rank + other.rank, torsion: rechain(merged) }
    }

    /// Number of torsion factors divisible by `p`, i.e. the dimension of
    /// `Tor ⊗ F_p`.
    pub fn p_torsion_count(&self, p: u64) -> usize {
        let p = BigUint::from(p);
        self.torsion.iter().filter(|d| d.is_multiple_of(&p)).count()
    }
}

/// Replaces each pair `(a, b)` by `(gcd, lcm)` until the list is a
/// divisibility chain, then drops units.
fn rechain(mut f: Vec<BigUint>) -> Vec<BigUint> {
    f.sort();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if !f[j].is_multiple_of(&f[i]) {
                let g = f[i].gcd(&f[j]);
                let l = f[i].lcm(&f[j]);
                f[i] = g;
                f[j] = l;
            }
        }
    }
    f.retain(|d| !d.is_one());
    f
}

impl Add for FinAbGroup {
    type Output = FinAbGroup;

    fn add(self, rhs: FinAbGroup) -> FinAbGroup {
        self.direct_sum(&rhs)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::with_capacity(self.torsion.len() + 1);
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Parses the canonical rendering; non-canonical input is rejected.
impl FromStr for FinAbGroup {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let bad = || LinalgError::BadGroup(s.to_string());
        let mut rank = None;
        let mut torsion = Vec::new();
        for (idx, term) in s.split(" + ").enumerate() {
            if let Some(d) = term.strip_prefix("Z/") {
                torsion.push(d.parse::<BigUint>().map_err(|_| bad())?);
            } else if idx == 0 && term == "Z" {
                rank = Some(1);
            } else if let (0, Some(r)) = (idx, term.strip_prefix("Z^")) {
                let r: usize = r.parse().map_err(|_| bad())?;
                if r < 2 {
                    return Err(bad());
                }
                rank = Some(r);
            } else {
                return Err(bad());
            }
        }
        Self::new(rank.unwrap_or(0), torsion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rank: usize, torsion: &[u32]) -> FinAbGroup {
        FinAbGroup::new(rank, torsion.iter().map(|&d| BigUint::from(d)).collect()).unwrap()
    }

    #[test]
    fn rendering() {
        assert_eq!(FinAbGroup::trivial().to_string(), "0");
        assert_eq!(g(1, &[]).to_string(), "Z");
        assert_eq!(g(3, &[2, 4]).to_string(), "Z^3 + Z/2 + Z/4");
        assert_eq!(g(0, &[2]).to_string(), "Z/2");
    }

    #[test]
    fn parse_round_trip_and_rejects() {
        for s in ["0", "Z", "Z^3 + Z/2 + Z/4", "Z/6", "Z/2 + Z/2"] {
            assert_eq!(s.parse::<FinAbGroup>().unwrap().to_string(), s);
        }
        for s in ["Z^1", "Z/4 + Z/2", "Z/1", "Z/2 + Z", "", "Q"] {
            assert!(s.parse::<FinAbGroup>().is_err(), "{s}");
        }
    }

    #[test]
    fn sums() {
        assert_eq!(g(1, &[]) + g(0, &[2]), g(1, &[2]));
        assert_eq!(g(0, &[2]) + g(0, &[2]), g(0, &[2, 2]));
        assert_eq!(g(0, &[2]) + g(0, &[3]), g(0, &[6]));
        assert_eq!(g(2, &[2, 4]) + g(1, &[6]), g(3, &[2, 2, 12]));
    }

    #[test]
    fn non_canonical_rejected() {
        let bad = FinAbGroup::new(0, vec![BigUint::from(4u8), BigUint::from(2u8)]);
        assert!(matches!(bad, Err(LinalgError::NonCanonical(_))));
        assert!(FinAbGroup::new(0, vec![BigUint::from(1u8)]).is_err());
    }

    #[test]
    fn canonicalization_matches_structure() {
        let from = |r, xs: &[u32]| FinAbGroup::from_cyclic(r, xs.iter().map(|&d| BigUint::from(d)));
        assert_eq!(from(1, &[2, 3]), g(1, &[6]));
        assert_eq!(from(0, &[0, 1, 4, 2]), g(1, &[2, 4]));
        assert_eq!(from(0, &[12, 18]), g(0, &[6, 36]));
    }

    #[test]
    fn torsion_part() {
        assert_eq!(g(2, &[2]).torsion_part(), g(0, &[2]));
        assert!(g(5, &[]).torsion_part().is_trivial());
        assert_eq!(g(0, &[2, 4]).torsion_part(), g(0, &[2, 4]));
    }
}
