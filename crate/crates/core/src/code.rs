//! Linear codes over `F_q` held in reduced row-echelon form.
//!
//! Closure under a twisted shift is checked on generator rows only. The shift
//! `rho(c) = (lambda theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))` is
//! additive and satisfies `rho(a c) = theta(a) rho(c)`; since `theta` is onto
//! `F_q`, the image of the row space is the span of the row images.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldAutomorphism, FieldSpec};
use crate::skew::{SkewPoly, TwistContext};

#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

/// Reduces `rows` in place to reduced row-echelon form and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref(field: &FieldSpec, rows: &mut Vec<Vec<Elem>>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).unwrap();
        if inv != 1 {
            for v in rows[r].iter_mut() {
                *v = field.mul(*v, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let c = row[col];
            for (v, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                if pv != 0 {
                    *v = field.sub(*v, field.mul(c, pv));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

impl LinearCode {
    pub fn new(field: &FieldSpec, n: usize, rows: Vec<Vec<Elem>>) -> Result<Self> {
        for row in &rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for &v in row {
                field.check(v as u64)?;
            }
        }
        Ok(Self::from_checked(field, n, rows))
    }

    fn from_checked(field: &FieldSpec, n: usize, mut rows: Vec<Vec<Elem>>) -> Self {
        let pivots = rref(field, &mut rows, n);
        LinearCode {
            field: field.clone(),
            n,
            rows,
            pivots,
        }
    }

    pub fn zero(field: &FieldSpec, n: usize) -> Self {
        Self::from_checked(field, n, Vec::new())
    }

    pub fn full(field: &FieldSpec, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Self::from_checked(field, n, rows)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Canonical generator matrix.
    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of codewords, `q^k`, saturating.
    pub fn size(&self) -> u128 {
        (self.field.q() as u128)
            .checked_pow(self.k() as u32)
            .unwrap_or(u128::MAX)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn contains_word(&self, word: &[Elem]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let f = &self.field;
        let mut w = word.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c == 0 {
                continue;
            }
            for (v, &rv) in w.iter_mut().zip(row) {
                *v = f.sub(*v, f.mul(c, rv));
            }
        }
        w.iter().all(|&v| v == 0)
    }

    /// Whether `other ⊂ self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.rows.iter().all(|r| self.contains_word(r)))
    }

    /// Euclidean dual under `sum x_i y_i`.
    pub fn dual(&self) -> Self {
        let f = &self.field;
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.n];
                v[free] = 1;
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = f.neg(row[free]);
                }
                v
            })
            .collect();
        Self::from_checked(f, self.n, rows)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Self::from_checked(&self.field, self.n, rows))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// The span of `f` applied to every generator row.
    pub fn map_rows(&self, f: impl Fn(&[Elem]) -> Vec<Elem>) -> Self {
        let rows = self.rows.iter().map(|r| f(r)).collect();
        Self::from_checked(&self.field, self.n, rows)
    }

    /// Image under a twisted shift; equals the code when it is closed.
    pub fn image_under(&self, m: &ShiftMap) -> Result<Self> {
        if m.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.map_rows(|r| m.apply(r)))
    }

    pub fn is_closed_under(&self, m: &ShiftMap) -> Result<bool> {
        if m.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.rows.iter().all(|r| self.contains_word(&m.apply(r))))
    }

    /// Whether `rho_lambda^ell(C) = C` for the untwisted constacyclic shift.
    pub fn is_quasi_twisted(&self, lambda: Elem, ell: usize) -> Result<bool> {
        if ell == 0 || ell > self.n.max(1) {
            return Err(Error::DimensionMismatch(format!(
                "index {ell} outside 1..={}",
                self.n
            )));
        }
        let m = ShiftMap::new(&FieldAutomorphism::identity(&self.field), lambda)?;
        Ok(self.rows.iter().all(|r| {
            let mut w = r.clone();
            for _ in 0..ell {
                w = m.apply(&w);
            }
            self.contains_word(&w)
        }))
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let s: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{},{}] over {:?} {:?}", self.n, self.k(), self.field, self.rows)
    }
}

/// The twisted shift `rho_{theta,lambda}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftMap {
    theta: FieldAutomorphism,
    lambda: Elem,
}

impl ShiftMap {
    pub fn new(theta: &FieldAutomorphism, lambda: Elem) -> Result<Self> {
        theta.field().check(lambda as u64)?;
        if lambda == 0 {
            return Err(Error::NotAUnit);
        }
        Ok(ShiftMap {
            theta: theta.clone(),
            lambda,
        })
    }

    /// The plain cyclic shift.
    pub fn cyclic(field: &FieldSpec) -> Self {
        ShiftMap {
            theta: FieldAutomorphism::identity(field),
            lambda: 1,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        self.theta.field()
    }

    pub fn theta(&self) -> &FieldAutomorphism {
        &self.theta
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    pub fn apply(&self, c: &[Elem]) -> Vec<Elem> {
        let n = c.len();
        if n == 0 {
            return Vec::new();
        }
        let f = self.field();
        let mut out = Vec::with_capacity(n);
        out.push(f.mul(self.lambda, self.theta.apply(c[n - 1])));
        out.extend(c[..n - 1].iter().map(|&v| self.theta.apply(v)));
        out
    }
}

/// The code generated by the rows `x^i g` for `i < n - deg g`, written with
/// twisted coefficients: row `i` is `(0^i, theta^i(a_0), ..., theta^i(a_m), 0...)`.
pub fn code_from_skew_generator(ctx: &TwistContext, g: &SkewPoly) -> Result<LinearCode> {
    // validates g through the cofactor computation
    ctx.cofactor(g)?;
    let n = ctx.n();
    let m = g.degree().unwrap();
    let rows = (0..n - m)
        .map(|i| {
            let mut v = vec![0; n];
            for (j, &a) in g.coeffs().iter().enumerate() {
                v[i + j] = ctx.theta().apply_pow(a, i as i64);
            }
            v
        })
        .collect();
    Ok(LinearCode::from_checked(ctx.field(), n, rows))
}

/// The monic generator skew polynomial of a `theta`-`lambda`-cyclic code:
/// the unique codeword of least degree with leading coefficient one.
pub fn generator_skew_polynomial(code: &LinearCode, ctx: &TwistContext) -> Result<SkewPoly> {
    if code.field() != ctx.field() {
        return Err(Error::FieldMismatch);
    }
    if code.n() != ctx.n() {
        return Err(Error::LengthMismatch {
            expected: ctx.n(),
            found: code.n(),
        });
    }
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    let shift = ShiftMap::new(ctx.theta(), ctx.lambda())?;
    if !code.is_closed_under(&shift)? {
        return Err(Error::NotSkewConstacyclic);
    }
    // echelon form on reversed columns: the last row ends earliest
    let n = code.n();
    let mut rev: Vec<Vec<Elem>> = code
        .rows()
        .iter()
        .map(|r| r.iter().rev().copied().collect())
        .collect();
    rref(code.field(), &mut rev, n);
    let low = rev.last().unwrap();
    let coeffs: Vec<Elem> = low.iter().rev().copied().collect();
    let g = SkewPoly::new(ctx.theta(), coeffs);
    let rebuilt = code_from_skew_generator(ctx, &g).map_err(|_| Error::NotSkewConstacyclic)?;
    if &rebuilt != code {
        return Err(Error::NotSkewConstacyclic);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skew::DEFAULT_DIVISOR_CAP;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_code(rng: &mut ChaCha8Rng, f: &FieldSpec, n: usize) -> LinearCode {
        let k = rng.gen_range(0..=n);
        let rows = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..f.q())).collect())
            .collect();
        LinearCode::new(f, n, rows).unwrap()
    }

    fn dot(f: &FieldSpec, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
    }

    #[test]
    fn make_code_basics() {
        let f = FieldSpec::prime(3).unwrap();
        assert_eq!(LinearCode::new(&f, 4, vec![]).unwrap().k(), 0);
        assert_eq!(LinearCode::full(&f, 4).k(), 4);
        assert!(matches!(
            LinearCode::new(&f, 4, vec![vec![1, 2]]),
            Err(Error::LengthMismatch { .. })
        ));
        let c = LinearCode::new(&f, 3, vec![vec![2, 1, 0], vec![1, 2, 0], vec![0, 0, 2]]).unwrap();
        assert_eq!(c.rows(), &[vec![1, 2, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn dual_properties_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (p, r) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = FieldSpec::new(p, r, None).unwrap();
            for _ in 0..100 {
                let n = rng.gen_range(1..8);
                let c = random_code(&mut rng, &f, n);
                let d = c.dual();
                assert_eq!(c.k() + d.k(), n);
                assert_eq!(d.dual(), c);
                for a in c.rows() {
                    for b in d.rows() {
                        assert_eq!(dot(&f, a, b), 0);
                    }
                }
            }
        }
        let f = FieldSpec::prime(2).unwrap();
        assert!(LinearCode::full(&f, 5).dual().is_zero());
    }

    #[test]
    fn dual_of_x_plus_one_code() {
        let f = FieldSpec::prime(3).unwrap();
        let id = FieldAutomorphism::identity(&f);
        let ctx = TwistContext::new(10, 1, &id).unwrap();
        let c = code_from_skew_generator(&ctx, &SkewPoly::new(&id, vec![1, 1])).unwrap();
        assert_eq!(c.k(), 9);
        let d = c.dual();
        assert_eq!(d.k(), 1);
        // alternating signs (1, 2, 1, 2, ...)
        let expect: Vec<Elem> = (0..10).map(|i| if i % 2 == 0 { 1 } else { 2 }).collect();
        assert_eq!(d.rows()[0], expect);
    }

    fn remark_code() -> LinearCode {
        let f = FieldSpec::new(2, 2, None).unwrap();
        LinearCode::new(&f, 3, vec![vec![2, 3, 1]]).unwrap()
    }

    #[test]
    fn cyclic_but_not_theta_cyclic() {
        let c = remark_code();
        let f = c.field().clone();
        assert!(c.is_closed_under(&ShiftMap::cyclic(&f)).unwrap());
        let frob = ShiftMap::new(&FieldAutomorphism::frobenius(&f), 1).unwrap();
        assert!(!c.is_closed_under(&frob).unwrap());
        assert!(LinearCode::zero(&f, 3).is_closed_under(&frob).unwrap());
        // the full word list is the four words of the example
        let words = crate::distance::codewords(&c, 1 << 10).unwrap();
        let mut words: Vec<Vec<Elem>> = words;
        words.sort();
        assert_eq!(words, vec![vec![0, 0, 0], vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]);
    }

    #[test]
    fn quasi_twisted_examples() {
        let f = FieldSpec::prime(3).unwrap();
        let id = FieldAutomorphism::identity(&f);
        let ctx = TwistContext::new(6, 1, &id).unwrap();
        for g in ctx.right_divisors(None, DEFAULT_DIVISOR_CAP).unwrap() {
            let c = code_from_skew_generator(&ctx, &g).unwrap();
            assert!(c.is_quasi_twisted(1, 1).unwrap());
        }
        let c = LinearCode::new(&f, 4, vec![vec![1, 0, 0, 0]]).unwrap();
        assert!(!c.is_quasi_twisted(1, 1).unwrap());
        assert!(!c.is_quasi_twisted(1, 2).unwrap());
        assert!(c.is_quasi_twisted(1, 4).unwrap());
    }

    #[test]
    fn skew_cyclic_codes_are_quasi_twisted() {
        // theta of order m fixing lambda gives a quasi-lambda-cyclic code of index gcd(m, n)
        for (p, r) in [(2, 2), (3, 2), (2, 3)] {
            let f = FieldSpec::new(p, r, None).unwrap();
            let th = FieldAutomorphism::frobenius(&f);
            let m = th.order() as usize;
            for n in 1..=6 {
                let ell = crate::field::gcd(m as u64, n as u64) as usize;
                for lambda in f.nonzero_elements().filter(|&l| th.apply(l) == l) {
                    let ctx = TwistContext::new(n, lambda, &th).unwrap();
                    let Ok(divs) = ctx.right_divisors(None, 1 << 14) else {
                        continue;
                    };
                    for g in divs {
                        let c = code_from_skew_generator(&ctx, &g).unwrap();
                        assert!(c.is_quasi_twisted(lambda, ell).unwrap());
                        if ell == 1 {
                            let plain = ShiftMap::new(&FieldAutomorphism::identity(&f), lambda).unwrap();
                            assert!(c.is_closed_under(&plain).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generator_code_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let id = FieldAutomorphism::identity(&f2);
        let ctx = TwistContext::new(3, 1, &id).unwrap();
        let g = SkewPoly::new(&id, vec![1, 1]);
        let c = code_from_skew_generator(&ctx, &g).unwrap();
        assert_eq!((c.n(), c.k()), (3, 2));
        assert_eq!(crate::distance::min_distance(&c, 1 << 27).unwrap(), 2);
        assert_eq!(generator_skew_polynomial(&c, &ctx).unwrap(), g);
        let full = code_from_skew_generator(&ctx, &SkewPoly::one(&id)).unwrap();
        assert_eq!(full, LinearCode::full(&f2, 3));
        assert_eq!(generator_skew_polynomial(&full, &ctx).unwrap(), SkewPoly::one(&id));
        assert_eq!(
            generator_skew_polynomial(&LinearCode::zero(&f2, 3), &ctx).unwrap_err(),
            Error::ZeroCode
        );
        let f3 = FieldSpec::prime(3).unwrap();
        let id3 = FieldAutomorphism::identity(&f3);
        let ctx = TwistContext::new(10, 1, &id3).unwrap();
        let c = code_from_skew_generator(&ctx, &SkewPoly::new(&id3, vec![1, 1])).unwrap();
        assert_eq!((c.n(), c.k()), (10, 9));
        assert_eq!(crate::distance::min_distance(&c, 1 << 27).unwrap(), 2);
    }

    #[test]
    fn generator_round_trip_f4() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        for th in FieldAutomorphism::all(&f) {
            for n in 1..=4 {
                for lambda in f.nonzero_elements() {
                    let ctx = TwistContext::new(n, lambda, &th).unwrap();
                    for g in ctx.right_divisors(None, DEFAULT_DIVISOR_CAP).unwrap() {
                        let c = code_from_skew_generator(&ctx, &g).unwrap();
                        assert_eq!(c.k(), n - g.degree().unwrap());
                        let shift = ShiftMap::new(&th, lambda).unwrap();
                        assert!(c.is_closed_under(&shift).unwrap());
                        if !c.is_zero() {
                            assert_eq!(generator_skew_polynomial(&c, &ctx).unwrap(), g);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn non_closed_code_has_no_generator() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let ctx = TwistContext::new(3, 1, &FieldAutomorphism::frobenius(&f)).unwrap();
        assert_eq!(
            generator_skew_polynomial(&remark_code(), &ctx).unwrap_err(),
            Error::NotSkewConstacyclic
        );
    }

    #[test]
    fn dual_of_skew_code_is_skew_code() {
        for (p, r) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = FieldSpec::new(p, r, None).unwrap();
            for th in FieldAutomorphism::all(&f) {
                for n in 1..=6 {
                    for lambda in f.nonzero_elements() {
                        let ctx = TwistContext::new(n, lambda, &th).unwrap();
                        let Ok(divs) = ctx.right_divisors(None, 1 << 12) else {
                            continue;
                        };
                        let dual_shift = ShiftMap::new(&th, f.inv(lambda).unwrap()).unwrap();
                        for g in divs {
                            let c = code_from_skew_generator(&ctx, &g).unwrap();
                            assert!(c.dual().is_closed_under(&dual_shift).unwrap());
                        }
                    }
                }
            }
        }
    }

    /// Module view: a word is the polynomial `sum c_i x^i` in `F_q[x;theta]/<x^n - lambda>`.
    fn times_x_mod(ctx: &TwistContext, c: &[Elem]) -> Vec<Elem> {
        let th = ctx.theta();
        let p = SkewPoly::new(th, c.to_vec());
        let prod = SkewPoly::monomial(th, 1, 1).mul(&p).unwrap();
        let (_, rem) = prod.right_divmod(&ctx.modulus()).unwrap();
        let mut v = rem.coeffs().to_vec();
        v.resize(ctx.n(), 0);
        v
    }

    #[test]
    fn module_closure_matches_shift_closure() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let f = FieldSpec::new(3, 2, None).unwrap();
        let th = FieldAutomorphism::frobenius(&f);
        let mut closed = 0;
        for _ in 0..400 {
            let n = rng.gen_range(1..5);
            let lambda = rng.gen_range(1..f.q());
            let ctx = TwistContext::new(n, lambda, &th).unwrap();
            let c = if rng.gen_bool(0.5) {
                random_code(&mut rng, &f, n)
            } else {
                let divs = ctx.right_divisors(None, DEFAULT_DIVISOR_CAP).unwrap();
                code_from_skew_generator(&ctx, &divs[rng.gen_range(0..divs.len())]).unwrap()
            };
            let shift = ShiftMap::new(&th, lambda).unwrap();
            let module = c.rows().iter().all(|r| c.contains_word(&times_x_mod(&ctx, r)));
            let by_shift = c.is_closed_under(&shift).unwrap();
            assert_eq!(module, by_shift);
            closed += by_shift as usize;
        }
        assert!(closed > 50);
    }

    #[test]
    fn sum_and_intersection() {
        let f = FieldSpec::prime(3).unwrap();
        let a = LinearCode::new(&f, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let b = LinearCode::new(&f, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(a.sum(&b).unwrap(), LinearCode::full(&f, 3));
        assert_eq!(
            a.intersection(&b).unwrap(),
            LinearCode::new(&f, 3, vec![vec![0, 1, 0]]).unwrap()
        );
        assert!(a.contains(&a.intersection(&b).unwrap()).unwrap());
        let g = FieldSpec::prime(2).unwrap();
        assert_eq!(
            a.contains(&LinearCode::zero(&g, 3)).unwrap_err(),
            Error::FieldMismatch
        );
    }
}
