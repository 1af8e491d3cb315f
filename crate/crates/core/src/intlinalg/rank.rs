use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{IntMatrix, LinalgError};

/// Rank over the rationals, by fraction-free elimination. Independent of the
/// Smith normal form code path.
pub fn rank_rational(a: &IntMatrix) -> usize {
    let mut m = a.to_row_vecs();
    let (rows, cols) = a.shape();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j];
                m[i][j] = v.div_floor(&prev);
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank over the field with `p` elements.
pub fn rank_mod_p(a: &IntMatrix, p: u64) -> Result<usize, LinalgError> {
    if !is_prime(p) {
        return Err(LinalgError::NotPrime(p));
    }
    let bp = BigInt::from(p);
    let (rows, cols) = a.shape();
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|i| a.row(i).iter().map(|x| x.mod_floor(&bp).to_u64().expect("residue fits u64")).collect())
        .collect();
    let p128 = u128::from(p);
    let mulmod = |x: u64, y: u64| ((u128::from(x) * u128::from(y)) % p128) as u64;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i][col] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for j in col..cols {
            m[rank][j] = mulmod(m[rank][j], inv);
        }
        for i in rank + 1..rows {
            let f = m[i][col];
            if f == 0 {
                continue;
            }
            for j in col..cols {
                let sub = mulmod(f, m[rank][j]);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((u128::from(acc) * u128::from(base)) % u128::from(p)) as u64;
        }
        base = ((u128::from(base) * u128::from(base)) % u128::from(p)) as u64;
        exp >>= 1;
    }
    acc
}
