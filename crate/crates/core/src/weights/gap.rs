use serde::{Deserialize, Serialize};

use crate::rational::Rational;

use super::{f_r, WeightError};

/// `(x)_m = x(x-1)…(x-m+1)`; `(x)_0 = 1`.
pub fn falling_factorial(x: &Rational, m: usize) -> Rational {
    (0..m).fold(Rational::one(), |acc, i| acc * (x - &Rational::from(i)))
}

/// `C(x, m) = (x)_m / m!` for rational `x`.
pub fn generalized_binomial(x: &Rational, m: usize) -> Rational {
    let fact = (1..=m).fold(Rational::one(), |acc, i| acc * Rational::from(i));
    falling_factorial(x, m) / fact
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapCheck {
    pub r: usize,
    pub k: usize,
    /// `f_r(k) - 2`.
    pub lhs: Rational,
    /// `C(k/2, r-1)`.
    pub rhs: Rational,
    pub holds: bool,
    pub is_equality: bool,
    /// `k >= r+1` with `r >= 4`, or `k >= 6` with `r = 3`.
    pub in_domain: bool,
}

/// Evaluates `f_r(k) - 2 >= C(k/2, r-1)` exactly. Pairs outside the domain
/// where the inequality is claimed are still evaluated and flagged.
pub fn gap_check(r: usize, k: usize) -> Result<GapCheck, WeightError> {
    let lhs = f_r(r, k)? - Rational::from_integer(2);
    let rhs = generalized_binomial(&Rational::new(k as i64, 2), r - 1);
    Ok(GapCheck {
        r,
        k,
        holds: lhs >= rhs,
        is_equality: lhs == rhs,
        in_domain: (r >= 4 && k > r) || (r == 3 && k >= 6),
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_rows() {
        let g = gap_check(3, 6).unwrap();
        assert_eq!((g.lhs.clone(), g.rhs.clone()), (Rational::from_integer(3), Rational::from_integer(3)));
        assert!(g.holds && g.is_equality && g.in_domain);

        let g = gap_check(4, 5).unwrap();
        assert_eq!(g.lhs, Rational::new(1, 2));
        assert_eq!(g.rhs, Rational::new(5, 16));
        assert!(g.holds && !g.is_equality && g.in_domain);

        let g = gap_check(3, 5).unwrap();
        assert_eq!(g.lhs, Rational::new(4, 3));
        assert!(!g.in_domain);
    }

    #[test]
    fn half_integer_binomial() {
        // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8.
        assert_eq!(generalized_binomial(&Rational::new(1, 2), 2), Rational::new(-1, 8));
        assert_eq!(generalized_binomial(&Rational::from_integer(6), 3), Rational::from_integer(20));
        assert_eq!(falling_factorial(&Rational::from_integer(4), 0), Rational::one());
    }

    #[test]
    fn rejects_small_uniformity() {
        assert_eq!(gap_check(2, 5), Err(WeightError::UniformityTooSmall(2)));
    }
}
