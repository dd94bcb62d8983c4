//! The coefficients `Q_{m,k}` that appear in the inner products of the general family.

use leibniz_core::scalar::{frac, int, one};
use leibniz_core::Scalar;

use crate::MuError;

/// Closed form: `Q_{0,1} = 1`, `Q_{0,k} = 1/2` for `k >= 2`, `Q_{1,k} = (k+1)/2`, and
/// `k (k+1) ... (k+m-2) (k+2m-1) / (2 m!)` for `m >= 2`.
pub fn q_coeff(m: usize, k: usize) -> Result<Scalar, MuError> {
    if k == 0 {
        return Err(MuError::IndexRange(format!("Q_{{{m},{k}}} needs k >= 1")));
    }
    Ok(match m {
        0 if k == 1 => one(),
        0 => frac(1, 2),
        1 => frac(k as i64 + 1, 2),
        _ => {
            let rising: Scalar = (k..=k + m - 2).map(|t| int(t as i64)).product();
            let fact: Scalar = (1..=m).map(|t| int(t as i64)).product();
            rising * int((k + 2 * m - 1) as i64) / (int(2) * fact)
        }
    })
}

pub(crate) fn q(m: usize, k: usize) -> Scalar {
    q_coeff(m, k).expect("index inside the closed-form range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(q_coeff(0, 1).unwrap(), int(1));
        assert_eq!(q_coeff(0, 5).unwrap(), frac(1, 2));
        assert_eq!(q_coeff(1, 2).unwrap(), frac(3, 2));
        assert_eq!(q_coeff(2, 2).unwrap(), frac(5, 2));
        assert_eq!(q_coeff(2, 1).unwrap() + q_coeff(1, 2).unwrap(), frac(5, 2));
        assert!(q_coeff(3, 0).is_err());
    }
}
