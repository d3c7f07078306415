//! Linear codes over `R = F_q^t` as component tuples `C = C_1 e_1 + ... + C_t e_t`.
//!
//! For a twist `sigma_{theta,lambda}` the image of `x e_j` is
//! `rho_{psi_j, lambda_{perm[j]}}(x) e_{perm[j]}`, so `C` is closed exactly when
//! every component is carried onto the component it lands in. That test is the
//! primary one; [`is_sigma_closed`] applies `sigma` directly with ring
//! arithmetic and serves as an independent check.

use std::fmt;

use crate::code::{self, LinearCode, ShiftMap};
use crate::distance;
use crate::error::{Error, Result};
use crate::field::{gcd, Elem, FieldAutomorphism};
use crate::poly;
use crate::ring::{RingAutomorphism, RingElement, RingSpec};
use crate::skew::{SkewPoly, TwistContext};

/// A word of length `n` over `R`.
pub type RingWord = Vec<RingElement>;

#[derive(Clone, PartialEq, Eq)]
pub struct RingLinearCode {
    ring: RingSpec,
    n: usize,
    comps: Vec<LinearCode>,
}

impl RingLinearCode {
    pub fn new(ring: &RingSpec, comps: Vec<LinearCode>) -> Result<Self> {
        if comps.len() != ring.t() {
            return Err(Error::RingMismatch);
        }
        let n = comps[0].n();
        for c in &comps {
            if c.field() != ring.field() {
                return Err(Error::FieldMismatch);
            }
            if c.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: c.n(),
                });
            }
        }
        Ok(RingLinearCode {
            ring: ring.clone(),
            n,
            comps,
        })
    }

    pub fn zero(ring: &RingSpec, n: usize) -> Self {
        let comps = (0..ring.t())
            .map(|_| LinearCode::zero(ring.field(), n))
            .collect();
        RingLinearCode {
            ring: ring.clone(),
            n,
            comps,
        }
    }

    pub fn full(ring: &RingSpec, n: usize) -> Self {
        let comps = (0..ring.t())
            .map(|_| LinearCode::full(ring.field(), n))
            .collect();
        RingLinearCode {
            ring: ring.clone(),
            n,
            comps,
        }
    }

    /// Projects each generator row onto every idempotent and spans.
    pub fn from_generator_rows(ring: &RingSpec, n: usize, rows: &[RingWord]) -> Result<Self> {
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for x in row {
                ring.check(x)?;
            }
        }
        let comps = (0..ring.t())
            .map(|j| {
                let proj = rows.iter().map(|row| row.iter().map(|x| x[j]).collect());
                LinearCode::new(ring.field(), n, proj.collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, comps)
    }

    /// Generator rows over `R`: every row of `C_j` placed on `e_j`.
    pub fn generator_rows(&self) -> Vec<RingWord> {
        let mut out = Vec::new();
        for (j, c) in self.comps.iter().enumerate() {
            for row in c.rows() {
                out.push(row.iter().map(|&a| self.ring.scalar_at(a, j)).collect());
            }
        }
        out
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[LinearCode] {
        &self.comps
    }

    /// `log_q |C| = sum k_j`.
    pub fn log_size(&self) -> usize {
        self.comps.iter().map(|c| c.k()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn contains_word(&self, word: &[RingElement]) -> bool {
        word.len() == self.n
            && self
                .comps
                .iter()
                .enumerate()
                .all(|(j, c)| c.contains_word(&project(word, j)))
    }

    /// Componentwise dual.
    pub fn dual(&self) -> Self {
        RingLinearCode {
            ring: self.ring.clone(),
            n: self.n,
            comps: self.comps.iter().map(|c| c.dual()).collect(),
        }
    }

    /// Whether `self ⊂ self^perp`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.comps.iter().all(|c| c.dual().contains(c).unwrap())
    }
}

impl fmt::Debug for RingLinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingLinearCode")
            .field("ring", &self.ring)
            .field("n", &self.n)
            .field("comps", &self.comps)
            .finish()
    }
}

/// Component `j` of every symbol.
pub fn project(word: &[RingElement], j: usize) -> Vec<Elem> {
    word.iter().map(|x| x[j]).collect()
}

/// `sum x_i y_i` in `R`.
pub fn ring_inner_product(ring: &RingSpec, x: &[RingElement], y: &[RingElement]) -> Result<RingElement> {
    let mut acc = ring.zero();
    for (a, b) in x.iter().zip(y) {
        acc = ring.add(&acc, &ring.mul(a, b)?)?;
    }
    Ok(acc)
}

/// Gray weight: Hamming weight of the flattened `t n` coordinates.
pub fn gray_weight(word: &[RingElement]) -> usize {
    word.iter().flatten().filter(|&&c| c != 0).count()
}

/// Minimum Gray distance, the least component distance.
pub fn ring_min_distance(code: &RingLinearCode, budget: u128) -> Result<usize> {
    let mut best = None;
    for c in code.components().iter().filter(|c| !c.is_zero()) {
        let d = distance::min_distance(c, budget)?;
        best = Some(best.map_or(d, |b: usize| b.min(d)));
    }
    best.ok_or(Error::ZeroCode)
}

/// `sigma_{theta,lambda}` with a unit `lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingTwist {
    theta: RingAutomorphism,
    lambda: RingElement,
}

impl RingTwist {
    pub fn new(theta: &RingAutomorphism, lambda: RingElement) -> Result<Self> {
        theta.ring().check(&lambda)?;
        if !theta.ring().is_unit(&lambda) {
            return Err(Error::NotAUnit);
        }
        Ok(RingTwist {
            theta: theta.clone(),
            lambda,
        })
    }

    pub fn theta(&self) -> &RingAutomorphism {
        &self.theta
    }

    pub fn lambda(&self) -> &[Elem] {
        &self.lambda
    }

    pub fn ring(&self) -> &RingSpec {
        self.theta.ring()
    }

    /// The twist for duals: same `theta`, `lambda^{-1}`.
    pub fn inverse_lambda(&self) -> Self {
        RingTwist {
            theta: self.theta.clone(),
            lambda: self.ring().inv(&self.lambda).unwrap(),
        }
    }

    /// The shift carrying component `j` to component `perm[j]`:
    /// `rho_{psi_j, lambda_{perm[j]}}`.
    pub fn component_shift(&self, j: usize) -> ShiftMap {
        let f = self.ring().field();
        let psi = FieldAutomorphism::new(f, self.theta.exps()[j] as i64);
        ShiftMap::new(&psi, self.lambda[self.theta.perm()[j]]).unwrap()
    }

    pub fn apply(&self, word: &[RingElement]) -> Result<RingWord> {
        let n = word.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        let ring = self.ring();
        let mut out = Vec::with_capacity(n);
        out.push(ring.mul(&self.lambda, &self.theta.apply(&word[n - 1])?)?);
        for x in &word[..n - 1] {
            out.push(self.theta.apply(x)?);
        }
        Ok(out)
    }
}

pub fn apply_sigma(tw: &RingTwist, word: &[RingElement]) -> Result<RingWord> {
    tw.apply(word)
}

fn check_twist(code: &RingLinearCode, tw: &RingTwist) -> Result<()> {
    if code.ring() != tw.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `rho_{psi_j, lambda_{perm[j]}}(C_j) = C_{perm[j]}` for every `j`.
pub fn is_ring_skew_constacyclic(code: &RingLinearCode, tw: &RingTwist) -> Result<bool> {
    check_twist(code, tw)?;
    for (j, c) in code.components().iter().enumerate() {
        let image = c.image_under(&tw.component_shift(j))?;
        if image != code.components()[tw.theta().perm()[j]] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Direct closure test: applies `sigma` to the additive generators
/// `beta * row * e_j` (with `beta` running over the polynomial basis of
/// `F_q` over `F_p`) and checks membership.
pub fn is_sigma_closed(code: &RingLinearCode, tw: &RingTwist) -> Result<bool> {
    check_twist(code, tw)?;
    let ring = code.ring();
    let f = ring.field();
    let mut betas = Vec::new();
    let mut b: Elem = 1;
    for _ in 0..f.r() {
        betas.push(b);
        b *= f.p();
    }
    for (j, c) in code.components().iter().enumerate() {
        for row in c.rows() {
            for &beta in &betas {
                let word: RingWord = row
                    .iter()
                    .map(|&a| ring.scalar_at(f.mul(beta, a), j))
                    .collect();
                if !code.contains_word(&tw.apply(&word)?) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn check_cycle_in_g2(theta: &RingAutomorphism) -> Result<()> {
    if !theta.in_g2() || !theta.is_full_cycle() {
        return Err(Error::ScopeRestriction(
            "expected a G2 automorphism permuting the idempotents in one cycle".into(),
        ));
    }
    Ok(())
}

/// The `theta`-cyclic code with first component `c1`, for `theta` a full
/// cycle in `G_2`: component `perm^i(0)` is `rho^i(c1)`.
pub fn build_case_two(c1: &LinearCode, theta: &RingAutomorphism) -> Result<RingLinearCode> {
    check_cycle_in_g2(theta)?;
    let ring = theta.ring();
    if c1.field() != ring.field() {
        return Err(Error::FieldMismatch);
    }
    let t = ring.t();
    let n = c1.n();
    let ell = gcd(t as u64, n as u64) as usize;
    let rho = ShiftMap::cyclic(ring.field());
    let mut shifted = c1.clone();
    for _ in 0..ell {
        shifted = shifted.image_under(&rho)?;
    }
    if &shifted != c1 {
        return Err(Error::NotQuasiCyclicIndexEll(ell));
    }
    let mut comps = vec![LinearCode::zero(ring.field(), n); t];
    let mut cur = c1.clone();
    let mut pos = 0;
    for _ in 0..t {
        comps[pos] = cur.clone();
        cur = cur.image_under(&rho)?;
        pos = theta.perm()[pos];
    }
    RingLinearCode::new(ring, comps)
}

/// Number of `theta`-cyclic codes of length `n` over `R` for a full-cycle
/// `theta ∈ G_2` with `gcd(t, n) = 1`: `prod (1 + k_i)` over the
/// factorization `x^n - 1 = prod p_i^{k_i}`.
pub fn count_theta_cyclic_coprime(theta: &RingAutomorphism, n: usize) -> Result<u128> {
    check_cycle_in_g2(theta)?;
    let ring = theta.ring();
    let g = gcd(ring.t() as u64, n as u64) as usize;
    if g != 1 {
        return Err(Error::CoprimalityViolated(g));
    }
    let f = ring.field();
    let factors = poly::factor(f, &poly::x_pow_minus(f, n, 1), poly::DEFAULT_FACTOR_BOUND)?;
    Ok(factors.iter().map(|(_, k)| 1 + *k as u128).product())
}

/// A polynomial over `R` in `R[x; theta]`, coefficients on the left.
#[derive(Clone, PartialEq, Eq)]
pub struct RingSkewPoly {
    theta: RingAutomorphism,
    coeffs: Vec<RingElement>,
}

impl RingSkewPoly {
    pub fn new(theta: &RingAutomorphism, coeffs: Vec<RingElement>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.iter().all(|&a| a == 0)) {
            coeffs.pop();
        }
        RingSkewPoly {
            theta: theta.clone(),
            coeffs,
        }
    }

    /// `sum g_j e_j`.
    pub fn from_components(theta: &RingAutomorphism, comps: &[SkewPoly]) -> Self {
        let ring = theta.ring();
        let len = comps.iter().map(|g| g.coeffs().len()).max().unwrap_or(0);
        let coeffs = (0..len)
            .map(|i| comps.iter().map(|g| g.coeff(i)).collect())
            .collect();
        debug_assert_eq!(comps.len(), ring.t());
        Self::new(theta, coeffs)
    }

    /// `x^n - lambda`.
    pub fn x_pow_minus(theta: &RingAutomorphism, n: usize, lambda: &[Elem]) -> Self {
        let ring = theta.ring();
        let mut coeffs = vec![ring.zero(); n + 1];
        coeffs[0] = ring.neg(lambda);
        coeffs[n] = ring.add(&coeffs[n], &ring.one()).unwrap();
        Self::new(theta, coeffs)
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.theta != other.theta {
            return Err(Error::ContextMismatch);
        }
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(Self::new(&self.theta, Vec::new()));
        }
        let ring = self.theta.ring();
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        let mut powers = vec![RingAutomorphism::identity(ring)];
        for _ in 1..self.coeffs.len() {
            powers.push(powers.last().unwrap().compose(&self.theta)?);
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let tb = powers[i].apply(b)?;
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, &tb)?)?;
            }
        }
        Ok(Self::new(&self.theta, out))
    }
}

impl fmt::Debug for RingSkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingSkewPoly[{}]{:?}", self.theta, self.coeffs)
    }
}

/// Highest degree first, ring coefficients as component lists: `[1,1]*x^2 + [0,2]`.
impl fmt::Display for RingSkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.iter().all(|&v| v == 0) {
                continue;
            }
            let coef: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            let coef = format!("[{}]", coef.join(","));
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}*x"),
                _ => format!("{coef}*x^{i}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Generator data of a `theta`-`lambda`-cyclic code with `theta ∈ G_1`.
#[derive(Debug, Clone)]
pub struct RingGenerator {
    pub components: Vec<SkewPoly>,
    pub combined: RingSkewPoly,
    /// `h` with `h g = x^n - lambda` in `R[x; theta]`.
    pub cofactor: RingSkewPoly,
}

impl RingGenerator {
    /// `log_q |C| = sum (n - deg g_j)`.
    pub fn log_size(&self, n: usize) -> usize {
        self.components
            .iter()
            .map(|g| n - g.degree().unwrap())
            .sum()
    }
}

pub fn ring_generator_polynomial(code: &RingLinearCode, tw: &RingTwist) -> Result<RingGenerator> {
    check_twist(code, tw)?;
    if !tw.theta().in_g1() {
        return Err(Error::ScopeRestriction(
            "generator polynomials need a twist that fixes every idempotent".into(),
        ));
    }
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    let f = code.ring().field();
    let n = code.n();
    let mut components = Vec::new();
    let mut cofactors = Vec::new();
    for (j, c) in code.components().iter().enumerate() {
        let psi = FieldAutomorphism::new(f, tw.theta().exps()[j] as i64);
        let ctx = TwistContext::new(n, tw.lambda()[j], &psi)?;
        let g = if c.is_zero() {
            ctx.modulus()
        } else {
            code::generator_skew_polynomial(c, &ctx)?
        };
        cofactors.push(ctx.cofactor(&g)?);
        components.push(g);
    }
    let combined = RingSkewPoly::from_components(tw.theta(), &components);
    let cofactor = RingSkewPoly::from_components(tw.theta(), &cofactors);
    Ok(RingGenerator {
        components,
        combined,
        cofactor,
    })
}
