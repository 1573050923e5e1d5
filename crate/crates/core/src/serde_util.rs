//! JSON encodings for exact numbers: integers above 2^53 - 1 become decimal
//! strings, rationals are written as `"p/q"` strings.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::Serializer;

const MAX_SAFE: u64 = (1 << 53) - 1;

fn big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(x) if x <= MAX_SAFE => s.serialize_u64(x),
        _ => s.serialize_str(&v.to_string()),
    }
}

pub fn big_uint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    big(v, s)
}

pub fn big_uint_vec<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    struct Item<'a>(&'a BigUint);
    impl serde::Serialize for Item<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            big(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Item(x))?;
    }
    seq.end()
}

pub fn rational_opt<S: Serializer>(v: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

pub fn rational_vec_opt<S: Serializer>(v: &Option<Vec<BigRational>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(items) => s.collect_seq(items.iter().map(|r| r.to_string())),
        None => s.serialize_none(),
    }
}
