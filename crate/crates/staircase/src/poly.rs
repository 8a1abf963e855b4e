use num_bigint::BigUint;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dense polynomial with nonnegative big-integer coefficients, index =
/// exponent of `q`. The highest stored coefficient is nonzero unless the
/// polynomial is the single value 0.
///
/// Serializes as a JSON array of decimal strings; coefficients routinely
/// exceed 2^53, so JSON numbers are never used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigUint>,
}

impl IntegerPolynomial {
    /// Builds a polynomial, trimming trailing zeros. An empty or all-zero
    /// input yields the zero polynomial `[0]`.
    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigUint::zero());
        }
        IntegerPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntegerPolynomial {
            coeffs: vec![BigUint::zero()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Number of stored coefficients (`degree + 1`).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `q^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Evaluation at `q = 1`.
    pub fn coeff_sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Adds `other * q^shift` in place.
    pub fn add_shifted(&mut self, other: &IntegerPolynomial, shift: usize) {
        if other.is_zero() {
            return;
        }
        let need = shift + other.coeffs.len();
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigUint::zero());
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[shift + k] += c;
        }
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, String> {
        let coeffs = items
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<BigUint>()
                    .map_err(|e| format!("invalid coefficient {:?}: {e}", s.as_ref()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.is_empty() {
            return Err("coefficient list must not be empty".into());
        }
        Ok(IntegerPolynomial::from_coeffs(coeffs))
    }
}

impl Serialize for IntegerPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntegerPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        IntegerPolynomial::from_decimal_strings(&items).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(values: &[u32]) -> IntegerPolynomial {
        IntegerPolynomial::from_coeffs(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.coeff(1), BigUint::from(2u32));
        assert_eq!(p.coeff(7), BigUint::zero());
    }

    #[test]
    fn zero_polynomial_is_single_zero() {
        let z = IntegerPolynomial::from_coeffs(vec![]);
        assert!(z.is_zero());
        assert_eq!(z.len(), 1);
        assert_eq!(poly(&[0, 0, 0]), z);
    }

    #[test]
    fn serde_round_trips_decimal_strings() {
        let p = poly(&[1, 1, 2, 1]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1","1","2","1"]"#);
        let back: IntegerPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
