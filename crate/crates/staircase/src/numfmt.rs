//! Formatting and serde glue for exact rationals.
//!
//! Rationals cross every external interface as `"p/q"` strings (plain `"p"`
//! when the denominator is 1), matching `BigRational`'s `Display`/`FromStr`.

use num_rational::BigRational;

pub fn rational_to_string(r: &BigRational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// `#[serde(with = "rational_string")]` for `BigRational` fields.
pub mod rational_string {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigRational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&rational_to_string(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Same, for pairs of rationals (intervals).
pub mod rational_pair_string {
    use super::*;
    use serde::de::Error as _;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &(BigRational, BigRational),
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&rational_to_string(&value.0))?;
        seq.serialize_element(&rational_to_string(&value.1))?;
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<(BigRational, BigRational), D::Error> {
        let items = <[String; 2]>::deserialize(deserializer)?;
        Ok((
            parse_rational(&items[0]).map_err(D::Error::custom)?,
            parse_rational(&items[1]).map_err(D::Error::custom)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn parses_both_forms() {
        assert_eq!(
            parse_rational("3/2").unwrap(),
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
        assert_eq!(
            parse_rational("-7").unwrap(),
            BigRational::from_integer(BigInt::from(-7))
        );
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn integers_print_without_denominator() {
        let r = BigRational::new(BigInt::from(4), BigInt::from(2));
        assert_eq!(rational_to_string(&r), "2");
    }
}
