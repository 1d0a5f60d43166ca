//! Benchmark inputs shared by the criterion targets.

use chromsym::HessFn;

/// The complete graph on `n` vertices.
pub fn complete(n: usize) -> HessFn {
    HessFn::new(vec![n; n]).expect("valid")
}

/// Hessenberg functions of moderate density, one per size.
pub fn staircase(n: usize) -> HessFn {
    HessFn::new((1..=n).map(|i| (i + 2).min(n)).collect()).expect("valid")
}
