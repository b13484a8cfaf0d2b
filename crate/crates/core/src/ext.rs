//! Extended reals `ℝ ∪ {−∞, +∞}`.
//!
//! Backed by an IEEE double where the two infinities stand for the
//! symbolic bottom and top. NaN is never representable: constructors reject
//! it and both addition flavours define `−∞ + +∞` explicitly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Default)]
#[repr(transparent)]
pub struct ExtReal(f64);

impl ExtReal {
    /// Max-plus zero, `−∞`.
    pub const BOTTOM: ExtReal = ExtReal(f64::NEG_INFINITY);
    /// Min-plus zero, `+∞`.
    pub const TOP: ExtReal = ExtReal(f64::INFINITY);
    /// Multiplicative unit of both semirings.
    pub const ZERO: ExtReal = ExtReal(0.0);

    /// Returns `None` for NaN.
    pub fn new(value: f64) -> Option<Self> {
        if value.is_nan() {
            None
        } else {
            Some(ExtReal(value))
        }
    }

    /// # Panics
    /// If `value` is NaN.
    pub fn from_f64(value: f64) -> Self {
        Self::new(value).expect("ExtReal cannot hold NaN")
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    #[inline]
    pub fn is_bottom(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    #[inline]
    pub fn is_top(self) -> bool {
        self.0 == f64::INFINITY
    }

    /// `⊗` of the max-plus semiring: `−∞` absorbs, including `−∞ + +∞ = −∞`.
    #[inline]
    pub fn max_plus_add(self, other: ExtReal) -> ExtReal {
        ExtReal(max_plus_add(self.0, other.0))
    }

    /// `⊗` of the min-plus semiring: `+∞` absorbs, including `−∞ + +∞ = +∞`.
    #[inline]
    pub fn min_plus_add(self, other: ExtReal) -> ExtReal {
        ExtReal(min_plus_add(self.0, other.0))
    }

    #[inline]
    pub fn max(self, other: ExtReal) -> ExtReal {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }

    #[inline]
    pub fn min(self, other: ExtReal) -> ExtReal {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }
}

#[inline]
pub(crate) fn max_plus_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY || b == f64::NEG_INFINITY {
        f64::NEG_INFINITY
    } else {
        a + b
    }
}

#[inline]
pub(crate) fn min_plus_add(a: f64, b: f64) -> f64 {
    if a == f64::INFINITY || b == f64::INFINITY {
        f64::INFINITY
    } else {
        a + b
    }
}

impl Eq for ExtReal {}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.partial_cmp(&other.0).expect("ExtReal is never NaN")
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for ExtReal {
    type Output = ExtReal;
    fn neg(self) -> ExtReal {
        ExtReal(-self.0)
    }
}

impl TryFrom<f64> for ExtReal {
    type Error = crate::Error;
    fn try_from(value: f64) -> crate::Result<Self> {
        ExtReal::new(value).ok_or_else(|| crate::Error::invalid("NaN is not an extended real"))
    }
}

impl From<ExtReal> for f64 {
    fn from(v: ExtReal) -> f64 {
        v.0
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical token form: `-inf`, `inf`, or the shortest round-trip decimal.
impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bottom() {
            f.write_str("-inf")
        } else if self.is_top() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl std::str::FromStr for ExtReal {
    type Err = String;

    /// Accepts `-inf`/`inf`/`+inf` in any letter case, and plain decimals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "-inf" => return Ok(ExtReal::BOTTOM),
            "inf" | "+inf" => return Ok(ExtReal::TOP),
            _ => {}
        }
        // Rust's float parser also accepts "infinity" and "nan"; the dialect does not.
        if t.is_empty()
            || t.chars()
                .any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E')
        {
            return Err(format!("not a number: {t:?}"));
        }
        let v: f64 = t.parse().map_err(|_| format!("not a number: {t:?}"))?;
        if !v.is_finite() {
            return Err(format!("out of range: {t:?}"));
        }
        Ok(ExtReal(v))
    }
}

// JSON has no infinities: finite values are numbers, infinities are the
// strings "-inf" / "inf".
impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_finite() {
            s.serialize_f64(self.0)
        } else {
            s.serialize_str(if self.is_bottom() { "-inf" } else { "inf" })
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExtReal;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a number or one of \"-inf\", \"inf\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<ExtReal, E> {
                ExtReal::new(v).ok_or_else(|| E::custom("NaN"))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtReal, E> {
                Ok(ExtReal(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtReal, E> {
                Ok(ExtReal(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtReal, E> {
                match v.to_ascii_lowercase().as_str() {
                    "-inf" => Ok(ExtReal::BOTTOM),
                    "inf" | "+inf" => Ok(ExtReal::TOP),
                    _ => Err(E::custom(format!("unexpected token {v:?}"))),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absorbing_elements() {
        let x = ExtReal::from_f64(3.5);
        assert_eq!(ExtReal::BOTTOM.max_plus_add(x), ExtReal::BOTTOM);
        assert_eq!(ExtReal::TOP.min_plus_add(x), ExtReal::TOP);
        assert_eq!(ExtReal::TOP.max_plus_add(x), ExtReal::TOP);
        assert_eq!(ExtReal::BOTTOM.min_plus_add(x), ExtReal::BOTTOM);
    }

    #[test]
    fn mixed_infinities_never_nan() {
        assert_eq!(ExtReal::BOTTOM.max_plus_add(ExtReal::TOP), ExtReal::BOTTOM);
        assert_eq!(ExtReal::TOP.max_plus_add(ExtReal::BOTTOM), ExtReal::BOTTOM);
        assert_eq!(ExtReal::BOTTOM.min_plus_add(ExtReal::TOP), ExtReal::TOP);
        assert_eq!(ExtReal::TOP.min_plus_add(ExtReal::BOTTOM), ExtReal::TOP);
    }

    #[test]
    fn total_order() {
        let mut v = vec![
            ExtReal::TOP,
            ExtReal::from_f64(1.0),
            ExtReal::BOTTOM,
            ExtReal::from_f64(-2.0),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                ExtReal::BOTTOM,
                ExtReal::from_f64(-2.0),
                ExtReal::from_f64(1.0),
                ExtReal::TOP
            ]
        );
    }

    #[test]
    fn rejects_nan() {
        assert!(ExtReal::new(f64::NAN).is_none());
        assert!(ExtReal::try_from(f64::NAN).is_err());
    }

    #[test]
    fn token_parsing() {
        for s in ["-inf", "-Inf", "-INF"] {
            assert_eq!(s.parse::<ExtReal>().unwrap(), ExtReal::BOTTOM);
        }
        assert_eq!("INF".parse::<ExtReal>().unwrap(), ExtReal::TOP);
        assert_eq!(" 2.5e-3 ".parse::<ExtReal>().unwrap().value(), 2.5e-3);
        assert!("nan".parse::<ExtReal>().is_err());
        assert!("infinity".parse::<ExtReal>().is_err());
        assert!("1e999".parse::<ExtReal>().is_err());
        assert!("x".parse::<ExtReal>().is_err());
        assert_eq!(ExtReal::BOTTOM.to_string(), "-inf");
        assert_eq!(ExtReal::from_f64(0.1).to_string(), "0.1");
    }

    #[test]
    fn json_tokens() {
        let v = vec![ExtReal::BOTTOM, ExtReal::from_f64(-0.25), ExtReal::TOP];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["-inf",-0.25,"inf"]"#);
        let back: Vec<ExtReal> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
