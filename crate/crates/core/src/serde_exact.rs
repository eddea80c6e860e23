//! Serializers that keep exact values exact: integers and rationals are
//! written as decimal strings (`"21/4"`), never as floats.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serializer;

use crate::scalar::rational_string;

pub fn biguint<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn rational<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(x))
}
