//! Fixed formatting rules for report values.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub(crate) fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Integers as JSON numbers while they fit in 64 bits, decimal strings beyond.
pub(crate) fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

/// Rounds to 12 significant digits; negative zero becomes zero.
pub fn format_f64(x: f64) -> Value {
    if !x.is_finite() {
        return json!(x.to_string());
    }
    let rounded: f64 = format!("{x:.11e}")
        .parse()
        .expect("scientific notation parses");
    json!(if rounded == 0.0 { 0.0 } else { rounded })
}

/// `[re, im]`, each rounded by [`format_f64`]. Components below `1e−12·max(1, |z|)`
/// are rounding noise and print as zero.
pub fn format_complex(z: Complex64) -> Value {
    let floor = 1e-12 * z.norm().max(1.0);
    let clean = |x: f64| if x.abs() < floor { 0.0 } else { x };
    json!([format_f64(clean(z.re)), format_f64(clean(z.im))])
}
