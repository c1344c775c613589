//! Univariate polynomials over exact rationals, used for chromatic
//! polynomials χ_G(t) and their derivatives.

use crate::matrix::{is_integer, Rat};
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly(Vec<Rat>);

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly(Vec::new())
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = RatPoly(coeffs);
        p.trim();
        p
    }

    /// The monomial `t^k`.
    pub fn t_power(k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::from_integer(1.into());
        RatPoly(coeffs)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Rat::is_zero) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.0.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_integer)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let len = self.0.len().max(other.0.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        RatPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let len = self.0.len().max(other.0.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - other.coeff(k)).collect();
        RatPoly::from_coeffs(coeffs)
    }

    pub fn add_term(&mut self, k: usize, v: &Rat) {
        if self.0.len() <= k {
            self.0.resize(k + 1, Rat::zero());
        }
        self.0[k] += v;
        self.trim();
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_int(&self, t: i64) -> Rat {
        self.eval(&Rat::from_integer(t.into()))
    }

    pub fn derivative(&self) -> RatPoly {
        let coeffs = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer((k as i64).into()))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    /// Multiplicity of `t = 1` as a root, by repeated exact division by
    /// `(t - 1)`.
    pub fn root_one_multiplicity(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut current = self.clone();
        let mut mult = 0;
        while !current.eval_int(1).is_zero() == false {
            // Synthetic division by (t - 1): q_k = c_{k+1} + q_{k+1}.
            let deg = current.0.len() - 1;
            if deg == 0 {
                break;
            }
            let mut q = vec![Rat::zero(); deg];
            let mut carry = Rat::zero();
            for k in (0..deg).rev() {
                carry = current.coeff(k + 1) + carry;
                q[k] = carry.clone();
            }
            current = RatPoly::from_coeffs(q);
            mult += 1;
            if current.is_zero() {
                break;
            }
        }
        mult
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat_int;

    fn poly(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn eval_and_derivative() {
        // t^3 - 3t^2 + 2t, the chromatic polynomial of a triangle.
        let chi = poly(&[0, 2, -3, 1]);
        assert_eq!(chi.eval_int(3), rat_int(6));
        assert_eq!(chi.eval_int(-1), rat_int(-6));
        let d = chi.derivative();
        assert_eq!(d, poly(&[2, -6, 3]));
        assert_eq!(d.eval_int(1), rat_int(-1));
    }

    #[test]
    fn root_one_multiplicity_counts_blocks() {
        // t(t-1)^3 has the root 1 with multiplicity 3.
        let p = poly(&[0, -1, 3, -3, 1]);
        assert_eq!(p.root_one_multiplicity(), 3);
        // t^2 has multiplicity 0.
        assert_eq!(poly(&[0, 0, 1]).root_one_multiplicity(), 0);
        // The triangle's χ has multiplicity 1.
        assert_eq!(poly(&[0, 2, -3, 1]).root_one_multiplicity(), 1);
    }

    #[test]
    fn arithmetic() {
        let a = poly(&[1, 1]);
        let b = poly(&[0, 1]);
        assert_eq!(a.sub(&b), poly(&[1]));
        assert_eq!(a.add(&b), poly(&[1, 2]));
        assert!(a.is_integral());
        assert_eq!(a.sub(&a), RatPoly::zero());
    }
}
