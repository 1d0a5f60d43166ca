//! Exact arithmetic in ℚ[q] and ℚ(q).

mod poly;
mod rat;

pub use poly::{exact_div, q_fact, q_int, QPoly};
pub use rat::QRat;

/// `[k]_q` as an element of ℚ(q).
pub fn qr_int(k: usize) -> QRat {
    QRat::from_poly(q_int(k))
}

/// `[k]_q!` as an element of ℚ(q).
pub fn qr_fact(k: usize) -> QRat {
    QRat::from_poly(q_fact(k))
}

/// Parses `"a"` or `"a/b"` into an exact rational.
pub fn parse_rational(s: &str) -> crate::Result<num_rational::BigRational> {
    use num_bigint::BigInt;
    let bad = |e: &dyn std::fmt::Display| crate::Error::Parse(format!("{s:?}: {e}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|e| bad(&e))?;
    let d: BigInt = d.trim().parse().map_err(|e| bad(&e))?;
    if d == BigInt::from(0) {
        return Err(bad(&"zero denominator"));
    }
    Ok(num_rational::BigRational::new(n, d))
}
