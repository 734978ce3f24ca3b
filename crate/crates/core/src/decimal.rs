//! Serde adapter writing big integers as decimal strings.

use num_bigint::BigUint;
use serde::{de, Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    let s = String::deserialize(d)?;
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(de::Error::custom(format!("not a decimal integer: {s:?}")));
    }
    BigUint::parse_bytes(s.as_bytes(), 10).ok_or_else(|| de::Error::custom("invalid decimal"))
}

/// Same encoding for `Option<BigUint>`, with `None` as `null`.
pub mod option {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => super::serialize(x, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        #[derive(Deserialize)]
        struct Wrapped(#[serde(with = "super")] BigUint);
        Ok(Option::<Wrapped>::deserialize(d)?.map(|w| w.0))
    }
}
