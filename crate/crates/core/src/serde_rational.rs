//! Serializes a [`Rational`] as its canonical `"p/q"` string.

use serde::Serializer;

use crate::linalg::{format_rational, Rational};

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}
