//! Fixtures shared by the criterion benches.

use skewcode::code::code_from_skew_generator;
use skewcode::repro::PARAM_CASES;
use skewcode::skew::DEFAULT_DIVISOR_CAP;
use skewcode::{FieldAutomorphism, FieldSpec, LinearCode, SkewPoly, TwistContext};

/// `F_{p^r}` with its default modulus.
pub fn field(p: u64, r: u32) -> FieldSpec {
    FieldSpec::new(p, r, None).expect("supported field")
}

/// A dense skew polynomial of the given degree with deterministic coefficients.
pub fn dense_poly(theta: &FieldAutomorphism, degree: usize, seed: u32) -> SkewPoly {
    let q = theta.field().q();
    let mut coeffs: Vec<u32> = (0..degree)
        .map(|i| (seed.wrapping_mul(2654435761).wrapping_add(i as u32 * 40503)) % q)
        .collect();
    coeffs.push(1);
    SkewPoly::new(theta, coeffs)
}

/// `F_{p^r}[x; Frob^e] / <x^n - 1>`.
pub fn context(p: u64, r: u32, e: i64, n: usize) -> TwistContext {
    let f = field(p, r);
    TwistContext::new(n, 1, &FieldAutomorphism::new(&f, e)).expect("valid context")
}

/// The largest skew cyclic code of a context by dimension, excluding the full space.
pub fn largest_proper_code(ctx: &TwistContext) -> LinearCode {
    ctx.right_divisors(None, DEFAULT_DIVISOR_CAP)
        .expect("divisors")
        .iter()
        .filter(|g| g.degree() > Some(0))
        .map(|g| code_from_skew_generator(ctx, g).expect("divisor"))
        .max_by_key(|c| c.k())
        .expect("nonconstant divisor")
}

/// The published code of a named parameter case.
pub fn published(name: &str) -> LinearCode {
    PARAM_CASES
        .iter()
        .find(|c| c.name == name)
        .expect("known case")
        .build()
        .expect("case builds")
}
