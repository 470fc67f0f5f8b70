//! Serialization of exact integers and rationals as decimal strings.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::Serializer;

pub fn big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn big_list<S: Serializer>(vs: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(vs.iter().map(|v| v.to_string()))
}

/// `"p/q"` in lowest terms, or `"p"` when the denominator is 1.
pub fn ratio<S: Serializer>(v: &Ratio<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn opt_ratio<S: Serializer>(v: &Option<Ratio<BigUint>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

/// Decimal expansion of a nonnegative rational, truncated to `digits` places.
pub fn to_decimal(v: &Ratio<BigUint>, digits: usize) -> String {
    let (int, mut rem) = v.numer().div_rem(v.denom());
    if digits == 0 {
        return int.to_string();
    }
    let mut out = format!("{int}.");
    for _ in 0..digits {
        rem *= 10u32;
        let (d, r) = rem.div_rem(v.denom());
        out.push_str(&d.to_string());
        rem = r;
        if rem.is_zero() {
            break;
        }
    }
    out
}
