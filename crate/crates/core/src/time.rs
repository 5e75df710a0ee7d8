//! Exact times, always rational multiples of π.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// The time `(num / den) · π`, kept in lowest terms with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PiMultiple {
    num: u64,
    den: u64,
}

impl PiMultiple {
    /// `None` when `den == 0`.
    pub fn new(num: u64, den: u64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = num.gcd(&den);
        Some(Self { num: num / g, den: den / g })
    }

    /// `2π / g` for `g >= 1`.
    pub fn two_pi_over(g: u64) -> Self {
        Self::new(2, g).expect("g must be positive")
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64 * std::f64::consts::PI
    }

    /// `self / unit` when it is a whole number.
    pub fn multiple_of(&self, unit: &PiMultiple) -> Option<u64> {
        if unit.num == 0 {
            return None;
        }
        let top = self.num as u128 * unit.den as u128;
        let bottom = self.den as u128 * unit.num as u128;
        top.is_multiple_of(bottom).then(|| u64::try_from(top / bottom).ok()).flatten()
    }

    /// Twelve-digit decimal rendering used in reports.
    pub fn decimal(&self) -> String {
        format!("{:.12}", self.to_f64())
    }
}

impl Ord for PiMultiple {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for PiMultiple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "0"),
            (n, 1) => write!(f, "{n} π"),
            (n, d) => write!(f, "{n}/{d} π"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: u64,
    den: u64,
    unit: String,
}

impl Serialize for PiMultiple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { num: self.num, den: self.den, unit: "pi".into() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiMultiple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = Wire::deserialize(d)?;
        if w.unit != "pi" {
            return Err(D::Error::custom(format!("unsupported time unit {:?}", w.unit)));
        }
        PiMultiple::new(w.num, w.den).ok_or_else(|| D::Error::custom("zero denominator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_orders() {
        assert_eq!(PiMultiple::two_pi_over(4), PiMultiple::new(1, 2).unwrap());
        assert_eq!(PiMultiple::two_pi_over(3).to_string(), "2/3 π");
        assert_eq!(PiMultiple::two_pi_over(1).to_string(), "2 π");
        assert!(PiMultiple::new(1, 0).is_none());
        assert!(PiMultiple::two_pi_over(5) < PiMultiple::two_pi_over(3));
        assert_eq!(PiMultiple::two_pi_over(3).decimal(), "2.094395102393");
    }

    #[test]
    fn multiples() {
        let unit = PiMultiple::two_pi_over(6);
        assert_eq!(PiMultiple::two_pi_over(3).multiple_of(&unit), Some(2));
        assert_eq!(PiMultiple::two_pi_over(2).multiple_of(&unit), Some(3));
        assert_eq!(PiMultiple::two_pi_over(4).multiple_of(&unit), None);
        assert_eq!(unit.multiple_of(&PiMultiple::new(0, 1).unwrap()), None);
    }

    #[test]
    fn json_shape() {
        let t = PiMultiple::two_pi_over(3);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"num":2,"den":3,"unit":"pi"}"#);
        assert_eq!(serde_json::from_str::<PiMultiple>(&s).unwrap(), t);
        assert!(serde_json::from_str::<PiMultiple>(r#"{"num":2,"den":3,"unit":"tau"}"#).is_err());
    }
}
