//! The skew polynomial ring `F_q[x; theta]` with `x a = theta(a) x`.
//!
//! Coefficients are written on the left, so `sum a_i x^i` times `sum b_j x^j`
//! is `sum a_i theta^i(b_j) x^(i+j)`. Division is on the right:
//! `f = quot * g + rem` with `deg rem < deg g`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldAutomorphism, FieldSpec};
use crate::poly;

/// Default cap on the number of monic candidates tried per degree.
pub const DEFAULT_DIVISOR_CAP: u128 = 1 << 24;

#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    theta: FieldAutomorphism,
    coeffs: Vec<Elem>,
}

impl SkewPoly {
    pub fn new(theta: &FieldAutomorphism, coeffs: Vec<Elem>) -> Self {
        let mut coeffs = coeffs;
        poly::trim(&mut coeffs);
        SkewPoly {
            theta: theta.clone(),
            coeffs,
        }
    }

    pub fn zero(theta: &FieldAutomorphism) -> Self {
        Self::new(theta, Vec::new())
    }

    pub fn one(theta: &FieldAutomorphism) -> Self {
        Self::new(theta, vec![1])
    }

    pub fn constant(theta: &FieldAutomorphism, c: Elem) -> Self {
        Self::new(theta, vec![c])
    }

    /// `c x^k`.
    pub fn monomial(theta: &FieldAutomorphism, c: Elem, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::new(theta, v)
    }

    /// `x^n - lambda`.
    pub fn x_pow_minus(theta: &FieldAutomorphism, n: usize, lambda: Elem) -> Self {
        Self::new(theta, poly::x_pow_minus(theta.field(), n, lambda))
    }

    pub fn field(&self) -> &FieldSpec {
        self.theta.field()
    }

    pub fn theta(&self) -> &FieldAutomorphism {
        &self.theta
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.theta != other.theta {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let f = self.field();
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::new(&self.theta, v))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let f = self.field();
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::new(&self.theta, v))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.theta));
        }
        let f = self.field();
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let tb = self.theta.apply_pow(b, i as i64);
                out[i + j] = f.add(out[i + j], f.mul(a, tb));
            }
        }
        Ok(Self::new(&self.theta, out))
    }

    /// `c * self`.
    pub fn scale_left(&self, c: Elem) -> Self {
        let f = self.field();
        Self::new(&self.theta, self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// `self * c`, which twists `c` per coefficient: `a_i theta^i(c)`.
    pub fn scale_right(&self, c: Elem) -> Self {
        let f = self.field();
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| f.mul(a, self.theta.apply_pow(c, i as i64)))
            .collect();
        Self::new(&self.theta, v)
    }

    /// Applies `theta^k` to every coefficient.
    pub fn twist_coeffs(&self, k: i64) -> Self {
        let v = self
            .coeffs
            .iter()
            .map(|&a| self.theta.apply_pow(a, k))
            .collect();
        Self::new(&self.theta, v)
    }

    /// `self = quot * g + rem` with `rem = 0` or `deg rem < deg g`.
    pub fn right_divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_context(g)?;
        let dg = g.degree().ok_or(Error::DivisorZero)?;
        let f = self.field();
        let lead = g.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((Self::zero(&self.theta), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dg];
        while rem.len() > dg {
            let shift = rem.len() - 1 - dg;
            // c x^shift * g has leading coefficient c theta^shift(lead)
            let tl = self.theta.apply_pow(lead, shift as i64);
            let c = f.div(*rem.last().unwrap(), tl)?;
            quot[shift] = c;
            for (j, &b) in g.coeffs.iter().enumerate() {
                let t = f.mul(c, self.theta.apply_pow(b, shift as i64));
                rem[shift + j] = f.sub(rem[shift + j], t);
            }
            debug_assert_eq!(rem.last(), Some(&0));
            poly::trim(&mut rem);
        }
        Ok((Self::new(&self.theta, quot), Self::new(&self.theta, rem)))
    }

    /// Whether `g` right-divides `self`.
    pub fn is_right_divisible_by(&self, g: &Self) -> Result<bool> {
        Ok(self.right_divmod(g)?.1.is_zero())
    }
}

/// Whether `g` right-divides `f`.
pub fn right_divides(g: &SkewPoly, f: &SkewPoly) -> Result<bool> {
    f.is_right_divisible_by(g)
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly::render(&self.coeffs))
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly[{:?}]({})", self.theta, self)
    }
}

/// Which of `C^perp ⊂ C` and `C ⊂ C^perp` hold.
/// Monic right divisors of a nonzero `f`, of one degree or of all degrees
/// `0..=deg f`, by exhaustive candidate search. Sorted by degree, then
/// lexicographically on the coefficient codes from the constant term upwards.
/// The output does not depend on the rayon pool size.
pub fn monic_right_divisors(f: &SkewPoly, degree: Option<usize>, cap: u128) -> Result<Vec<SkewPoly>> {
    let top = f.degree().ok_or(Error::DivisorZero)?;
    let degrees: Vec<usize> = match degree {
        Some(d) if d > top => return Ok(Vec::new()),
        Some(d) => vec![d],
        None => (0..=top).collect(),
    };
    let field = f.field();
    let q = field.q() as u128;
    for &d in &degrees {
        let size = q.checked_pow(d as u32).unwrap_or(u128::MAX);
        if size > cap {
            return Err(Error::EnumerationCap { size, cap });
        }
    }
    let mut out = Vec::new();
    for d in degrees {
        let count = q.pow(d as u32) as u64;
        let mut found: Vec<SkewPoly> = (0..count)
            .into_par_iter()
            .filter_map(|code| {
                let cand = SkewPoly::new(f.theta(), poly::monic_from_code(field, code as u128, d));
                match f.is_right_divisible_by(&cand) {
                    Ok(true) => Some(cand),
                    _ => None,
                }
            })
            .collect();
        found.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        out.extend(found);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    DualContaining,
    SelfOrthogonal,
    Both,
    Neither,
}

impl fmt::Display for Containment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Containment::DualContaining => "dual_containing",
            Containment::SelfOrthogonal => "self_orthogonal",
            Containment::Both => "both",
            Containment::Neither => "neither",
        })
    }
}

/// The quotient module `F_q[x;theta] / <x^n - lambda>`, named by its triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistContext {
    n: usize,
    lambda: Elem,
    theta: FieldAutomorphism,
}

impl TwistContext {
    pub fn new(n: usize, lambda: Elem, theta: &FieldAutomorphism) -> Result<Self> {
        if n == 0 {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        }
        theta.field().check(lambda as u64)?;
        if lambda == 0 {
            return Err(Error::NotAUnit);
        }
        Ok(TwistContext {
            n,
            lambda,
            theta: theta.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    pub fn theta(&self) -> &FieldAutomorphism {
        &self.theta
    }

    pub fn field(&self) -> &FieldSpec {
        self.theta.field()
    }

    /// `x^n - lambda`.
    pub fn modulus(&self) -> SkewPoly {
        SkewPoly::x_pow_minus(&self.theta, self.n, self.lambda)
    }

    /// The context of the dual codes: `(n, lambda^{-1}, theta)`.
    pub fn dual(&self) -> Self {
        let li = self.field().inv(self.lambda).unwrap();
        TwistContext {
            n: self.n,
            lambda: li,
            theta: self.theta.clone(),
        }
    }

    fn check_divisor(&self, g: &SkewPoly) -> Result<()> {
        if g.theta() != &self.theta {
            return Err(Error::ContextMismatch);
        }
        let ok = g.is_monic()
            && g.degree().unwrap() <= self.n
            && self.modulus().is_right_divisible_by(g)?;
        if ok {
            Ok(())
        } else {
            Err(Error::NotARightDivisor)
        }
    }

    /// Monic right divisors of `x^n - lambda`, of one degree or of all
    /// degrees `0..=n`; see [`monic_right_divisors`].
    pub fn right_divisors(&self, degree: Option<usize>, cap: u128) -> Result<Vec<SkewPoly>> {
        monic_right_divisors(&self.modulus(), degree, cap)
    }

    /// `h` with `h g = x^n - lambda`.
    pub fn cofactor(&self, g: &SkewPoly) -> Result<SkewPoly> {
        self.check_divisor(g)?;
        let (h, rem) = self.modulus().right_divmod(g)?;
        debug_assert!(rem.is_zero());
        Ok(h)
    }

    /// `hbar = lambda^{-1} h theta^{-k}(lambda)` where `k = n - deg g`; it
    /// satisfies `g hbar = x^n - theta^{-k}(lambda)`.
    pub fn hbar(&self, g: &SkewPoly) -> Result<SkewPoly> {
        let h = self.cofactor(g)?;
        let k = self.n - g.degree().unwrap();
        let f = self.field();
        let twisted_lambda = self.theta.apply_pow(self.lambda, -(k as i64));
        let li = f.inv(self.lambda).unwrap();
        Ok(h.scale_right(twisted_lambda).scale_left(li))
    }

    /// `theta^{-k}(lambda)`.
    pub fn twisted_lambda(&self, g: &SkewPoly) -> Result<Elem> {
        self.check_divisor(g)?;
        let k = self.n - g.degree().unwrap();
        Ok(self.theta.apply_pow(self.lambda, -(k as i64)))
    }

    /// Twisted reversal of `hbar = b_0 + ... + b_k x^k`: the coefficient of
    /// `x^i` is `theta^i(b_{k-i})`.
    pub fn hbar_star(&self, g: &SkewPoly) -> Result<SkewPoly> {
        let hb = self.hbar(g)?;
        Ok(twisted_reverse(&hb, self.n - g.degree().unwrap()))
    }

    /// Twisted reversal of `g = a_0 + ... + a_m x^m` (`m = deg g`): the
    /// coefficient of `x^j` is `theta^{-(m-j)}(a_{m-j})`. Satisfies
    /// `1 - lambda x^n = hbar_star * g_tilde`.
    pub fn g_tilde(&self, g: &SkewPoly) -> Result<SkewPoly> {
        self.check_divisor(g)?;
        let m = g.degree().unwrap();
        let v = (0..=m)
            .map(|j| self.theta.apply_pow(g.coeff(m - j), -((m - j) as i64)))
            .collect();
        Ok(SkewPoly::new(&self.theta, v))
    }

    fn check_nontrivial(&self, g: &SkewPoly) -> Result<()> {
        self.check_divisor(g)?;
        let d = g.degree().unwrap();
        if d == 0 || d == self.n {
            return Err(Error::ScopeRestriction(
                "generator of the zero code or the full space has no nontrivial dual generator"
                    .into(),
            ));
        }
        Ok(())
    }

    /// Monic generator of the dual code in context `(n, lambda^{-1}, theta)`:
    /// `theta^k(b_0^{-1}) hbar_star`.
    pub fn dual_generator(&self, g: &SkewPoly) -> Result<SkewPoly> {
        self.check_nontrivial(g)?;
        let hb = self.hbar(g)?;
        let k = self.n - g.degree().unwrap();
        let b0 = hb.coeff(0);
        let b0_inv = self.field().inv(b0).ok_or(Error::SingularConstantTerm)?;
        let star = twisted_reverse(&hb, k);
        Ok(star.scale_left(self.theta.apply_pow(b0_inv, k as i64)))
    }

    /// Decides `C^perp ⊂ C` and `C ⊂ C^perp` for the code generated by `g`
    /// through right divisibility in the skew ring.
    pub fn containment_check(&self, g: &SkewPoly) -> Result<Containment> {
        self.check_nontrivial(g)?;
        let f = self.field();
        let li = f.inv(self.lambda).unwrap();
        if li != self.lambda {
            return Ok(Containment::Neither);
        }
        let hb = self.hbar(g)?;
        let star = self.hbar_star(g)?;
        let tl = self.twisted_lambda(g)?;
        let left_mod = SkewPoly::x_pow_minus(&self.theta, self.n, tl);
        let dual_containing = star.mul(&hb)?.is_right_divisible_by(&left_mod)?;
        let gt = self.g_tilde(g)?;
        let inv_mod = SkewPoly::x_pow_minus(&self.theta, self.n, li);
        let self_orthogonal = g.mul(&gt)?.is_right_divisible_by(&inv_mod)?;
        Ok(match (dual_containing, self_orthogonal) {
            (true, true) => Containment::Both,
            (true, false) => Containment::DualContaining,
            (false, true) => Containment::SelfOrthogonal,
            (false, false) => Containment::Neither,
        })
    }
}

fn twisted_reverse(p: &SkewPoly, k: usize) -> SkewPoly {
    let v = (0..=k)
        .map(|i| p.theta().apply_pow(p.coeff(k - i), i as i64))
        .collect();
    SkewPoly::new(p.theta(), v)
}
