//! Ordinary (commutative) polynomials over `F_q`, ascending coefficients.
//!
//! Needed for the factorization of `x^n - 1` that counts skew cyclic codes
//! over the product ring when the twist permutes all idempotents.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

/// Default degree bound for [`factor`].
pub const DEFAULT_FACTOR_BOUND: usize = 64;
const CANDIDATE_CAP: u128 = 1 << 24;

pub fn trim(v: &mut Vec<Elem>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn degree(f: &[Elem]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub fn mul(field: &FieldSpec, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division `a = q b + r`.
pub fn divmod(field: &FieldSpec, a: &[Elem], b: &[Elem]) -> Result<(Vec<Elem>, Vec<Elem>)> {
    let mut b = b.to_vec();
    trim(&mut b);
    let lead = *b.last().ok_or(Error::DivisorZero)?;
    let lead_inv = field.inv(lead).expect("nonzero leading coefficient");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![0; rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = field.mul(*rem.last().unwrap(), lead_inv);
        quot[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            rem[shift + i] = field.sub(rem[shift + i], field.mul(c, bc));
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    Ok((quot, rem))
}

/// `x^n - lambda`.
pub fn x_pow_minus(field: &FieldSpec, n: usize, lambda: Elem) -> Vec<Elem> {
    let mut f = vec![0; n + 1];
    f[0] = field.neg(lambda);
    f[n] = field.add(f[n], 1);
    trim(&mut f);
    f
}

/// Factors `f` into monic irreducibles with multiplicities, sorted by degree
/// and then by coefficient codes. The leading coefficient is dropped.
///
/// Trial division by monic candidates of ascending degree: once every factor
/// of degree below `d` has been divided out, any monic degree-`d` divisor is
/// irreducible, so the candidates act as a sieve of irreducibles.
pub fn factor(field: &FieldSpec, f: &[Elem], bound: usize) -> Result<Vec<(Vec<Elem>, usize)>> {
    let mut rest = f.to_vec();
    trim(&mut rest);
    let deg = degree(&rest).ok_or(Error::DivisorZero)?;
    if deg > bound {
        return Err(Error::DegreeBound { degree: deg, bound });
    }
    let lead_inv = field.inv(rest[deg]).unwrap();
    rest = rest.iter().map(|&c| field.mul(c, lead_inv)).collect();
    let q = field.q() as u128;
    let mut out = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.len().saturating_sub(1) {
        let count = q.pow(d as u32);
        if count > CANDIDATE_CAP {
            return Err(Error::EnumerationCap {
                size: count,
                cap: CANDIDATE_CAP,
            });
        }
        for code in 0..count {
            if 2 * d > rest.len() - 1 {
                break;
            }
            let cand = monic_from_code(field, code, d);
            let mut mult = 0;
            loop {
                let (quot, rem) = divmod(field, &rest, &cand)?;
                if !rem.is_empty() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        d += 1;
    }
    if rest.len() > 1 {
        match out.iter_mut().find(|(p, _)| *p == rest) {
            Some(entry) => entry.1 += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
    });
    Ok(out)
}

/// Monic polynomial of degree `d` whose lower coefficients are the base-`q`
/// digits of `code`.
pub fn monic_from_code(field: &FieldSpec, mut code: u128, d: usize) -> Vec<Elem> {
    let q = field.q() as u128;
    let mut v = Vec::with_capacity(d + 1);
    for _ in 0..d {
        v.push((code % q) as Elem);
        code /= q;
    }
    v.push(1);
    v
}

/// Renders with coefficient codes, highest degree first: `x^4 + 2*x^2 + 2`.
pub fn render(coeffs: &[Elem]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
