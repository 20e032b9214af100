//! Exact fractions for average eccentricities and rational bounds.

use num_integer::Integer;

/// Lowest-terms fraction with a positive denominator.
pub type Rational = num_rational::Ratio<i64>;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// `"p/q"` text form, always with an explicit denominator.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_pq(s: &str) -> Option<Rational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse().ok()?, q.trim().parse().ok()?),
        None => (s.trim().parse().ok()?, 1),
    };
    if q == 0 {
        return None;
    }
    Some(Rational::new(p, q))
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `⌊a / b⌋` for `b > 0`.
pub fn floor_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// Serde adapter writing a rational as its `"p/q"` string.
pub mod serde_pq {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_pq(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = ratio(10, 4);
        assert_eq!((*r.numer(), *r.denom()), (5, 2));
        assert_eq!(to_pq(&ratio(-6, -3)), "2/1");
        assert_eq!(to_pq(&ratio(3, -6)), "-1/2");
    }

    #[test]
    fn pq_round_trip() {
        for r in [ratio(16, 5), ratio(-7, 3), int(4), ratio(0, 9)] {
            assert_eq!(parse_pq(&to_pq(&r)), Some(r));
        }
        assert_eq!(parse_pq("1/0"), None);
        assert_eq!(parse_pq("x"), None);
    }

    #[test]
    fn floors() {
        assert_eq!(floor_div(7, 2), 3);
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(ceil_div(7, 3), 3);
        assert_eq!(ceil_div(6, 3), 2);
    }
}
