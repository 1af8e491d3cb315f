//! Smith normal form over the integers.
//!
//! Pivot rule: the nonzero entry of minimal absolute value in the active
//! submatrix, ties broken in row-major order. When a pivot fails to clear its
//! row or column, the next pivot is the minimal remainder on that cross.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `d_1 | d_2 | ... | d_r`, all positive.
    pub invariant_factors: Vec<BigInt>,
    /// `(U, V)` with `U * A * V = diag(d_1, ..., d_r)` padded with zeros.
    pub transforms: Option<(IntMatrix, IntMatrix)>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// The diagonal matrix `S` of the given shape.
    pub fn diagonal(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut s = IntMatrix::zeros(rows, cols);
        for (i, d) in self.invariant_factors.iter().enumerate() {
            s.set(i, i, d.clone());
        }
        s
    }
}

pub fn smith(a: &IntMatrix, want_transforms: bool) -> SmithForm {
    let mut calc = SmithCalc {
        m: a.to_row_vecs(),
        rows: a.rows(),
        cols: a.cols(),
        u: want_transforms.then(|| IntMatrix::identity(a.rows()).to_row_vecs()),
        v: want_transforms.then(|| IntMatrix::identity(a.cols()).to_row_vecs()),
    };
    let factors = calc.run();
    let transforms = match (calc.u, calc.v) {
        (Some(u), Some(v)) => Some((
            IntMatrix::from_row_vecs(a.rows(), a.rows(), u),
            IntMatrix::from_row_vecs(a.cols(), a.cols(), v),
        )),
        _ => None,
    };
    SmithForm { invariant_factors: factors, transforms }
}

struct SmithCalc {
    m: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

impl SmithCalc {
    fn run(&mut self) -> Vec<BigInt> {
        let mut factors = Vec::new();
        for t in 0..self.rows.min(self.cols) {
            let Some((pi, pj)) = self.min_abs_in_block(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            self.reduce_pivot(t);
            if self.m[t][t].is_negative() {
                self.negate_row(t);
            }
            factors.push(self.m[t][t].clone());
        }
        factors
    }

    /// Clears row and column `t` and makes the pivot divide the rest of the
    /// active block.
    fn reduce_pivot(&mut self, t: usize) {
        loop {
            let mut dirty = false;
            for i in t + 1..self.rows {
                if self.m[i][t].is_zero() {
                    continue;
                }
                let q = self.m[i][t].div_floor(&self.m[t][t]);
                self.row_axpy(i, t, &q);
                dirty |= !self.m[i][t].is_zero();
            }
            for j in t + 1..self.cols {
                if self.m[t][j].is_zero() {
                    continue;
                }
                let q = self.m[t][j].div_floor(&self.m[t][t]);
                self.col_axpy(j, t, &q);
                dirty |= !self.m[t][j].is_zero();
            }
            if dirty {
                let (pi, pj) = self.min_abs_on_cross(t);
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                continue;
            }
            if self.m[t][t].abs().is_one() {
                return;
            }
            match self.first_non_multiple(t) {
                Some(i) => self.row_add(t, i),
                None => return,
            }
        }
    }

    fn min_abs_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.m[i][j];
                if x.is_zero() {
                    continue;
                }
                if x.magnitude().is_one() {
                    return Some((i, j));
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.magnitude() < self.m[bi][bj].magnitude(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn min_abs_on_cross(&self, t: usize) -> (usize, usize) {
        let cross = (t..self.cols).map(|j| (t, j)).chain((t + 1..self.rows).map(|i| (i, t)));
        let mut best = (t, t);
        let mut best_mag = None;
        for (i, j) in cross {
            let x = &self.m[i][j];
            if x.is_zero() {
                continue;
            }
            if best_mag.is_none_or(|b| x.magnitude() < b) {
                best = (i, j);
                best_mag = Some(x.magnitude());
            }
        }
        best
    }

    fn first_non_multiple(&self, t: usize) -> Option<usize> {
        let p = &self.m[t][t];
        (t + 1..self.rows).find(|&i| self.m[i][t + 1..].iter().any(|x| !x.is_zero() && !x.is_multiple_of(p)))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            self.m.swap(a, b);
            if let Some(u) = self.u.as_mut() {
                u.swap(a, b);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for row in &mut self.m {
                row.swap(a, b);
            }
            if let Some(v) = self.v.as_mut() {
                for row in v {
                    row.swap(a, b);
                }
            }
        }
    }

    fn negate_row(&mut self, t: usize) {
        for x in &mut self.m[t] {
            *x = -std::mem::take(x);
        }
        if let Some(u) = self.u.as_mut() {
            for x in &mut u[t] {
                *x = -std::mem::take(x);
            }
        }
    }

    /// row_i -= q * row_t
    fn row_axpy(&mut self, i: usize, t: usize, q: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
            let (src, dst) = pair_mut(m, t, i);
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                if !s.is_zero() {
                    *d -= q * s;
                }
            }
        }
        apply(&mut self.m, i, t, q);
        if let Some(u) = self.u.as_mut() {
            apply(u, i, t, q);
        }
    }

    /// col_j -= q * col_t
    fn col_axpy(&mut self, j: usize, t: usize, q: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
            for row in m {
                if !row[t].is_zero() {
                    let delta = q * &row[t];
                    row[j] -= delta;
                }
            }
        }
        apply(&mut self.m, j, t, q);
        if let Some(v) = self.v.as_mut() {
            apply(v, j, t, q);
        }
    }

    /// row_t += row_i
    fn row_add(&mut self, t: usize, i: usize) {
        fn apply(m: &mut [Vec<BigInt>], t: usize, i: usize) {
            let (src, dst) = pair_mut(m, i, t);
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                if !s.is_zero() {
                    *d += s;
                }
            }
        }
        apply(&mut self.m, t, i);
        if let Some(u) = self.u.as_mut() {
            apply(u, t, i);
        }
    }
}

/// Borrows rows `src` (shared) and `dst` (mutable); `src != dst`.
fn pair_mut<T>(m: &mut [T], src: usize, dst: usize) -> (&T, &mut T) {
    assert_ne!(src, dst);
    if src < dst {
        let (lo, hi) = m.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    }
}
