//! Dense exact-rational matrices and Gaussian elimination. No floating
//! point: entries are arbitrary-precision rationals throughout.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Serializes as `num/den` with the denominator always present.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let numer: BigInt = num
        .parse()
        .map_err(|_| Error::Constraint(format!("bad rational numerator {num:?}")))?;
    let denom: BigInt = den
        .parse()
        .map_err(|_| Error::Constraint(format!("bad rational denominator {den:?}")))?;
    if denom.is_zero() {
        return Err(Error::Constraint("zero denominator".into()));
    }
    Ok(Rat::new(numer, denom))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Rat::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Rat>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::Constraint("ragged matrix rows".into()));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i]
    }

    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        eliminate(&mut work, usize::MAX)
    }

    /// True when the rank reaches `target`; stops eliminating as soon as it
    /// does, which is much cheaper than a full rank on tall matrices.
    pub fn rank_at_least(&self, target: usize) -> bool {
        if target == 0 {
            return true;
        }
        let mut work = self.data.clone();
        eliminate(&mut work, target) >= target
    }

    pub fn matmul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        let mut out = vec![Rat::zero(); self.cols];
        for (i, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let a = &self.data[i][j];
                if !a.is_zero() {
                    out[j] += coeff * a;
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse; `None` for singular or non-square input.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut work: Vec<Vec<Rat>> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut aug = row.clone();
                aug.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                aug
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
            work.swap(col, pivot);
            let inv = work[col][col].recip();
            for v in work[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r != col && !work[r][col].is_zero() {
                    let factor = work[r][col].clone();
                    for c in col..2 * n {
                        let delta = &factor * &work[col][c];
                        work[r][c] -= delta;
                    }
                }
            }
        }
        let data = work.into_iter().map(|row| row[n..].to_vec()).collect();
        Some(RatMatrix {
            rows: n,
            cols: n,
            data,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().flatten().all(is_integer)
    }

    /// Upper triangular with ones on the diagonal (square input assumed).
    pub fn is_unitriangular(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self.data[i][i].is_one() && (0..i).all(|j| self.data[i][j].is_zero())
            })
    }

    /// Coefficients `x` with `Σ x_i · row_i = target`, if any; free
    /// variables are set to zero.
    pub fn solve_combination(&self, target: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(target.len(), self.cols, "dimension mismatch");
        // Transpose to a standard linear system in the row coefficients.
        let mut aug: Vec<Vec<Rat>> = (0..self.cols)
            .map(|j| {
                let mut row: Vec<Rat> = (0..self.rows).map(|i| self.data[i][j].clone()).collect();
                row.push(target[j].clone());
                row
            })
            .collect();
        let unknowns = self.rows;
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..unknowns {
            let Some(p) = (r..aug.len()).find(|&i| !aug[i][c].is_zero()) else {
                continue;
            };
            aug.swap(r, p);
            let inv = aug[r][c].recip();
            for v in aug[r].iter_mut() {
                *v *= &inv;
            }
            for i in 0..aug.len() {
                if i != r && !aug[i][c].is_zero() {
                    let factor = aug[i][c].clone();
                    for k in c..=unknowns {
                        let delta = &factor * &aug[r][k];
                        aug[i][k] -= delta;
                    }
                }
            }
            pivot_cols.push((r, c));
            r += 1;
            if r == aug.len() {
                break;
            }
        }
        // Inconsistent when a zero row has nonzero RHS.
        for row in aug.iter().skip(r) {
            if row[..unknowns].iter().all(Rat::is_zero) && !row[unknowns].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); unknowns];
        for (row, col) in pivot_cols {
            x[col] = aug[row][unknowns].clone();
        }
        Some(x)
    }

    pub fn in_span(&self, target: &[Rat]) -> bool {
        self.solve_combination(target).is_some()
    }
}

/// Forward elimination in place; returns the rank, stopping early once
/// `limit` pivots are found.
fn eliminate(work: &mut [Vec<Rat>], limit: usize) -> usize {
    if work.is_empty() {
        return 0;
    }
    let cols = work[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..work.len()).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, pivot);
        let inv = work[rank][col].recip();
        for v in work[rank][col..].iter_mut() {
            *v *= &inv;
        }
        for r in (rank + 1)..work.len() {
            if !work[r][col].is_zero() {
                let factor = std::mem::replace(&mut work[r][col], Rat::zero());
                for c in (col + 1)..cols {
                    let delta = &factor * &work[rank][c];
                    work[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank >= limit || rank == work.len() {
            break;
        }
    }
    rank
}

/// Exact absolute value helper used by orientation/χ cross-checks.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(RatMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn rank_with_dependent_rows() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        assert!(a.rank_at_least(2));
        assert!(!a.rank_at_least(3));
    }

    #[test]
    fn solve_picks_out_rows() {
        let a = m(&[&[1, 0, 2], &[0, 1, 1]]);
        let target: Vec<Rat> = vec![rat_int(1), rat_int(0), rat_int(2)];
        let x = a.solve_combination(&target).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(0)]);
        assert!(a.in_span(&target));

        let outside: Vec<Rat> = vec![rat_int(0), rat_int(0), rat_int(1)];
        assert!(!a.in_span(&outside));
    }

    #[test]
    fn solve_with_fractions() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let target = vec![rat_int(1), rat_int(1)];
        let x = a.solve_combination(&target).unwrap();
        assert_eq!(x[0], Rat::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(x[1], Rat::new(BigInt::from(1), BigInt::from(3)));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[1, 2], &[3, 5]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), RatMatrix::identity(2));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn span_stability_under_scaling_and_permutation() {
        let a = m(&[&[1, 2, 0], &[0, 1, 4]]);
        let target = vec![rat_int(2), rat_int(5), rat_int(4)];
        assert!(a.in_span(&target));
        let scaled = m(&[&[0, -3, -12], &[7, 14, 0]]);
        assert!(scaled.in_span(&target));
    }

    #[test]
    fn unitriangular_detection() {
        let a = m(&[&[1, 5, -2], &[0, 1, 9], &[0, 0, 1]]);
        assert!(a.is_unitriangular());
        assert!(a.is_integral());
        let b = m(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(!b.is_unitriangular());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_string(&rat_int(-3)), "-3/1");
        assert_eq!(parse_rat("-3/1").unwrap(), rat_int(-3));
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(rat_string(&half), "1/2");
        assert_eq!(parse_rat("2/4").unwrap(), half);
        assert!(parse_rat("1/0").is_err());
    }
}
