//! Arithmetic in F_{p^r}.
//!
//! Elements are canonical integer codes: the polynomial-basis coordinates
//! `c_0 + c_1 a + ... + c_{r-1} a^{r-1}` are packed little-endian in base `p`,
//! so `code = sum c_i p^i`. The field object performs every operation; codes
//! carry no back-reference to their field, which keeps vectors and matrices
//! over `F_q` plain `Vec<u32>`.
//!
//! Fields with `q <= 2^16` precompute discrete log/exp tables and an inverse
//! table (filled by the extended Euclidean algorithm); larger fields fall back
//! to polynomial arithmetic on the coordinate digits.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Canonical integer code of a field element.
pub type Elem = u32;

const TABLE_LIMIT: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u64 = 256;
/// Largest order for which a default modulus is searched.
pub const DEFAULT_MODULUS_LIMIT: u64 = 1 << 20;
const EXPLICIT_LIMIT: u64 = 1 << 30;

#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

struct Tables {
    /// `exp[i] = g^i` for `i < 2(q-1)`.
    exp: Vec<u32>,
    log: Vec<u32>,
    inv: Vec<u32>,
    /// Full addition table, only for small odd-characteristic extensions.
    add: Option<Vec<u32>>,
    primitive: u32,
}

/// Binary field operation selector for [`FieldSpec::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldSpec {
    /// Builds `F_{p^r}`. Without an explicit modulus the lexicographically
    /// least monic irreducible of degree `r` is used, ordering candidates by
    /// the canonical code of their lower coefficients (so `x` for prime
    /// fields, `x^2+x+1` for `F_4`, `x^2+1` for `F_9`, `x^3+x+1` for `F_8`).
    pub fn new(p: u64, r: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::UnsupportedSize { p, r });
        }
        let q = (p as u128).checked_pow(r).unwrap_or(u128::MAX);
        let p32 = p as u32;
        let modulus = match modulus {
            Some(m) => {
                if q > EXPLICIT_LIMIT as u128 {
                    return Err(Error::UnsupportedSize { p, r });
                }
                let valid = m.len() == r as usize + 1
                    && m[r as usize] == 1
                    && m.iter().all(|&c| c < p32)
                    && fp::is_irreducible(&m, p32);
                if !valid {
                    return Err(Error::NotIrreducible(m));
                }
                m
            }
            None => {
                if q > DEFAULT_MODULUS_LIMIT as u128 {
                    return Err(Error::UnsupportedSize { p, r });
                }
                default_modulus(p32, r)
            }
        };
        let q = q as u32;
        let mut inner = Inner {
            p: p32,
            r,
            q,
            modulus,
            tables: None,
        };
        if (q as u64) <= TABLE_LIMIT {
            inner.tables = Some(Tables::build(&inner));
        }
        Ok(FieldSpec {
            inner: Arc::new(inner),
        })
    }

    /// Prime field `F_p` (modulus `x`).
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn r(&self) -> u32 {
        self.inner.r
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Ascending coefficients of the defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// A primitive element (generator of the multiplicative group).
    pub fn primitive_element(&self) -> Elem {
        match &self.inner.tables {
            Some(t) => t.primitive,
            None => find_primitive(&self.inner),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.inner.q
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        1..self.inner.q
    }

    pub fn check(&self, a: u64) -> Result<Elem> {
        if a < self.inner.q as u64 {
            Ok(a as Elem)
        } else {
            Err(Error::ElementOutOfRange {
                code: a,
                q: self.inner.q as u64,
            })
        }
    }

    /// Coordinates of `a` in the polynomial basis.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        to_digits(a, self.inner.p, self.inner.r)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        from_digits(digits, self.inner.p)
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        v.rem_euclid(self.inner.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.p == 2 {
            return a ^ b;
        }
        if inner.r == 1 {
            let s = a + b;
            return if s >= inner.p { s - inner.p } else { s };
        }
        if let Some(Tables { add: Some(t), .. }) = &inner.tables {
            return t[(a * inner.q + b) as usize];
        }
        add_digits(a, b, inner.p, inner.r)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.p == 2 || a == 0 {
            return a;
        }
        if inner.r == 1 {
            return inner.p - a;
        }
        let mut out = 0u32;
        let mut mul = 1u32;
        let mut v = a;
        for _ in 0..inner.r {
            let d = v % inner.p;
            v /= inner.p;
            out += fp::neg(d, inner.p) * mul;
            mul = mul.wrapping_mul(inner.p);
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.inner;
        if inner.r == 1 {
            return ((a as u64 * b as u64) % inner.p as u64) as Elem;
        }
        match &inner.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => mul_slow(inner, a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        match &self.inner.tables {
            Some(t) => Some(t.inv[a as usize]),
            None => Some(inv_euclid(&self.inner, a)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        let bi = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        if let (Some(t), true) = (&self.inner.tables, a != 0) {
            let e = (t.log[a as usize] as u64 * (k % (self.inner.q as u64 - 1)))
                % (self.inner.q as u64 - 1);
            return t.exp[e as usize];
        }
        let mut base = a;
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^(p^e)` for `e` reduced modulo `r`.
    #[inline]
    pub fn frob(&self, a: Elem, e: u32) -> Elem {
        let inner = &*self.inner;
        let e = e % inner.r;
        if e == 0 || a == 0 || a == 1 {
            return a;
        }
        match &inner.tables {
            Some(t) => {
                let m = inner.q as u64 - 1;
                let pe = (inner.p as u64).pow(e) % m;
                t.exp[((t.log[a as usize] as u64 * pe) % m) as usize]
            }
            None => self.pow(a, (inner.p as u64).pow(e)),
        }
    }

    /// Checked binary operation on element codes.
    pub fn arith(&self, a: Elem, b: Elem, op: FieldOp) -> Result<Elem> {
        self.check(a as u64)?;
        self.check(b as u64)?;
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Div => self.div(a, b)?,
        })
    }

    /// Discrete log with respect to [`primitive_element`](Self::primitive_element).
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a == 0 {
            return None;
        }
        match &self.inner.tables {
            Some(t) => Some(t.log[a as usize]),
            None => {
                let g = self.primitive_element();
                let mut x = 1;
                for k in 0..self.inner.q - 1 {
                    if x == a {
                        return Some(k);
                    }
                    x = self.mul(x, g);
                }
                None
            }
        }
    }

    /// Power-basis name `a^k` (with `a` primitive) for small fields,
    /// the integer code otherwise.
    pub fn pretty(&self, a: Elem) -> String {
        if self.inner.q > 16 {
            return a.to_string();
        }
        match self.log(a) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(1) => "a".to_string(),
            Some(k) => format!("a^{k}"),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let m = self.inner.q as u64 - 1;
        let mut ord = m;
        for f in prime_factors(m) {
            while ord % f == 0 && self.pow(a, ord / f) == 1 {
                ord /= f;
            }
        }
        Some(ord)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.r == other.inner.r
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}(mod {:?})", self.inner.q, self.inner.modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.inner.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "p:{} r:{} mod:[{}]", self.inner.p, self.inner.r, m.join(","))
    }
}

/// A power of the Frobenius map, `a -> a^(p^e)`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldAutomorphism {
    field: FieldSpec,
    exponent: u32,
}

impl FieldAutomorphism {
    /// Reduces `e` modulo `r`, so negative exponents name inverses.
    pub fn new(field: &FieldSpec, e: i64) -> Self {
        let r = field.r() as i64;
        FieldAutomorphism {
            field: field.clone(),
            exponent: e.rem_euclid(r) as u32,
        }
    }

    pub fn identity(field: &FieldSpec) -> Self {
        Self::new(field, 0)
    }

    pub fn frobenius(field: &FieldSpec) -> Self {
        Self::new(field, 1)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_identity(&self) -> bool {
        self.exponent == 0
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.field.frob(a, self.exponent)
    }

    /// `self^k(a)` for any integer `k`.
    #[inline]
    pub fn apply_pow(&self, a: Elem, k: i64) -> Elem {
        let r = self.field.r() as i64;
        let e = (self.exponent as i64 * k.rem_euclid(r)).rem_euclid(r);
        self.field.frob(a, e as u32)
    }

    pub fn apply_checked(&self, field: &FieldSpec, a: Elem) -> Result<Elem> {
        if *field != self.field {
            return Err(Error::FieldMismatch);
        }
        field.check(a as u64)?;
        Ok(self.apply(a))
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::new(
            &self.field,
            self.exponent as i64 + other.exponent as i64,
        ))
    }

    pub fn inverse(&self) -> Self {
        Self::new(&self.field, -(self.exponent as i64))
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::new(&self.field, self.exponent as i64 * k)
    }

    /// `r / gcd(e, r)`.
    pub fn order(&self) -> u32 {
        let r = self.field.r();
        r / gcd(self.exponent as u64, r as u64) as u32
    }

    /// All `r` automorphisms of the field, by exponent.
    pub fn all(field: &FieldSpec) -> Vec<Self> {
        (0..field.r() as i64).map(|e| Self::new(field, e)).collect()
    }
}

impl fmt::Debug for FieldAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frob^{}", self.exponent)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn to_digits(mut a: u32, p: u32, r: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(r as usize);
    for _ in 0..r {
        d.push(a % p);
        a /= p;
    }
    d
}

fn from_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

fn add_digits(mut a: u32, mut b: u32, p: u32, r: u32) -> u32 {
    let mut out = 0u32;
    let mut mul = 1u32;
    for _ in 0..r {
        let s = (a % p + b % p) % p;
        a /= p;
        b /= p;
        out += s * mul;
        mul = mul.wrapping_mul(p);
    }
    out
}

fn mul_slow(inner: &Inner, a: u32, b: u32) -> u32 {
    let (p, r) = (inner.p, inner.r);
    let prod = fp::mul(&to_digits(a, p, r), &to_digits(b, p, r), p);
    let (_, rem) = fp::divmod(&prod, &inner.modulus, p);
    let mut d = rem;
    d.resize(r as usize, 0);
    from_digits(&d, p)
}

fn inv_euclid(inner: &Inner, a: u32) -> u32 {
    let (p, r) = (inner.p, inner.r);
    let mut d = fp::inverse_mod(&to_digits(a, p, r), &inner.modulus, p)
        .expect("nonzero element of a field is invertible");
    d.resize(r as usize, 0);
    from_digits(&d, p)
}

fn find_primitive(inner: &Inner) -> u32 {
    let m = inner.q as u64 - 1;
    if m == 1 {
        return 1;
    }
    let factors = prime_factors(m);
    let pow = |a: u32, mut k: u64| {
        let mut base = a;
        let mut acc = 1u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = mul_any(inner, acc, base);
            }
            base = mul_any(inner, base, base);
            k >>= 1;
        }
        acc
    };
    (2..inner.q)
        .find(|&g| factors.iter().all(|&f| pow(g, m / f) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

fn mul_any(inner: &Inner, a: u32, b: u32) -> u32 {
    if inner.r == 1 {
        ((a as u64 * b as u64) % inner.p as u64) as u32
    } else {
        mul_slow(inner, a, b)
    }
}

impl Tables {
    fn build(inner: &Inner) -> Tables {
        let q = inner.q;
        let m = (q - 1) as usize;
        let primitive = find_primitive(inner);
        let mut exp = vec![0u32; 2 * m.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..m {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = mul_any(inner, x, primitive);
        }
        for i in m..2 * m {
            exp[i] = exp[i - m];
        }
        if m == 0 {
            exp[0] = 1;
        }
        let mut inv = vec![0u32; q as usize];
        for a in 1..q {
            inv[a as usize] = if inner.r == 1 {
                fp::inv(a, inner.p)
            } else {
                inv_euclid(inner, a)
            };
        }
        let add = if inner.p != 2 && inner.r > 1 && (q as u64) <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_digits(a, b, inner.p, inner.r);
                }
            }
            Some(t)
        } else {
            None
        };
        Tables {
            exp,
            log,
            inv,
            add,
            primitive,
        }
    }
}

fn default_modulus(p: u32, r: u32) -> Vec<u32> {
    if r == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(r);
    for code in 0..count {
        let mut m = to_digits(code as u32, p, r);
        m.push(1);
        if m[0] != 0 && fp::is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Dense polynomial helpers over the prime field `F_p` (ascending
/// coefficients). Only used to realise the extension field itself.
pub(crate) mod fp {
    pub fn neg(a: u32, p: u32) -> u32 {
        if a == 0 {
            0
        } else {
            p - a
        }
    }

    pub fn inv(a: u32, p: u32) -> u32 {
        // extended Euclid on integers
        let (mut r0, mut r1) = (p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let qt = r0 / r1;
            (r0, r1) = (r1, r0 - qt * r1);
            (s0, s1) = (s1, s0 - qt * s1);
        }
        s0.rem_euclid(p as i64) as u32
    }

    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
        trim(&mut out);
        out
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let mut out: Vec<u32> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn divmod(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
        let mut b = b.to_vec();
        trim(&mut b);
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut rem = a.to_vec();
        trim(&mut rem);
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let lead_inv = inv(*b.last().unwrap(), p) as u64;
        let mut quot = vec![0u32; rem.len() - b.len() + 1];
        while rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let c = (*rem.last().unwrap() as u64 * lead_inv % p as u64) as u32;
            quot[shift] = c;
            for (i, &bc) in b.iter().enumerate() {
                let t = (c as u64 * bc as u64 % p as u64) as u32;
                rem[shift + i] = (rem[shift + i] + p - t) % p;
            }
            trim(&mut rem);
        }
        trim(&mut quot);
        (quot, rem)
    }

    pub fn inverse_mod(a: &[u32], m: &[u32], p: u32) -> Option<Vec<u32>> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r1);
        let (mut s0, mut s1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (qt, rr) = divmod(&r0, &r1, p);
            let ss = sub(&s0, &mul(&qt, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rr);
            s0 = std::mem::replace(&mut s1, ss);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = inv(r0[0], p);
        Some(mul(&s0, &[c], p))
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(m: &[u32], p: u32) -> bool {
        let mut m = m.to_vec();
        trim(&mut m);
        let deg = match m.len() {
            0 | 1 => return false,
            n => n - 1,
        };
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut cand = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    cand.push((c % p as u64) as u32);
                    c /= p as u64;
                }
                cand.push(1);
                if divmod(&m, &cand, p).1.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<FieldSpec> {
        [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (3, 3), (3, 4)]
            .iter()
            .map(|&(p, r)| FieldSpec::new(p, r, None).unwrap())
            .collect()
    }

    #[test]
    fn f4_default_modulus_and_alpha_squared() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let alpha = 2;
        // alpha^2 = 1 + alpha has code 3
        assert_eq!(f.mul(alpha, alpha), 3);
        assert_eq!(f.mul(alpha, f.mul(alpha, alpha)), 1);
        let explicit = FieldSpec::new(2, 2, Some(vec![1, 1, 1])).unwrap();
        assert_eq!(f, explicit);
    }

    #[test]
    fn alpha_cubed_by_repeated_multiplication() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let mut x = 1;
        for _ in 0..3 {
            x = f.mul(x, 2);
        }
        assert_eq!(x, 1);
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f = FieldSpec::new(3, 1, None).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.q(), 3);
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.neg(1), 2);
    }

    #[test]
    fn default_moduli_are_least() {
        assert_eq!(FieldSpec::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 4, None).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(4, 1, None), Err(Error::NotPrime(4)));
        assert!(matches!(
            FieldSpec::new(2, 2, Some(vec![1, 0, 1])),
            Err(Error::NotIrreducible(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 2, Some(vec![1, 1])),
            Err(Error::NotIrreducible(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 21, None),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn division_by_zero() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        assert_eq!(f.div(4, 0), Err(Error::DivisionByZero));
        assert_eq!(f.arith(1, 0, FieldOp::Div), Err(Error::DivisionByZero));
        assert!(f.arith(9, 1, FieldOp::Add).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.pow(a, q as u64), a, "a^q = a in {f:?}");
                if a != 0 {
                    let ai = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, ai), 1);
                    let others = (1..q).filter(|&b| f.mul(a, b) == 1).count();
                    assert_eq!(others, 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
            if q <= 27 {
                for a in 0..q {
                    for b in 0..q {
                        for c in 0..q {
                            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                            assert_eq!(
                                f.mul(a, f.add(b, c)),
                                f.add(f.mul(a, b), f.mul(a, c))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_a_ring_automorphism() {
        for f in small_fields() {
            for e in 0..f.r() {
                let psi = FieldAutomorphism::new(&f, e as i64);
                assert_eq!(psi.apply(1), 1);
                for a in f.elements() {
                    assert_eq!(psi.apply(a), f.pow(a, (f.p() as u64).pow(e)));
                    for b in f.elements() {
                        assert_eq!(psi.apply(f.add(a, b)), f.add(psi.apply(a), psi.apply(b)));
                        assert_eq!(psi.apply(f.mul(a, b)), f.mul(psi.apply(a), psi.apply(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let theta = FieldAutomorphism::frobenius(&f4);
        assert_eq!(theta.apply(2), 3);
        assert_eq!(FieldAutomorphism::identity(&f4).apply(2), 2);
        let f9 = FieldSpec::new(3, 2, None).unwrap();
        let psi = FieldAutomorphism::frobenius(&f9);
        for a in f9.elements() {
            assert_eq!(psi.apply(psi.apply(a)), a);
        }
        assert_eq!(psi.order(), 2);
        assert_eq!(psi.inverse(), psi);
        let f8 = FieldSpec::new(2, 3, None).unwrap();
        let phi = FieldAutomorphism::new(&f8, -1);
        assert_eq!(phi.exponent(), 2);
        assert_eq!(phi.compose(&FieldAutomorphism::frobenius(&f8)).unwrap().exponent(), 0);
        assert_eq!(
            phi.apply_checked(&f4, 1),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn slow_path_matches_tables() {
        // F_{3^11} has no tables; cross-check a few identities
        let big = FieldSpec::new(3, 11, None).unwrap();
        let small = FieldSpec::new(3, 4, None).unwrap();
        for f in [big, small] {
            let q = f.q() as u64;
            for a in [1u32, 2, 5, 77, (q - 1) as u32] {
                let ai = f.inv(a).unwrap();
                assert_eq!(f.mul(a, ai), 1);
                assert_eq!(f.frob(a, f.r()), a);
                assert_eq!(f.pow(a, q - 1), 1);
            }
        }
    }

    #[test]
    fn pretty_names() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let names: Vec<String> = f4.elements().map(|a| f4.pretty(a)).collect();
        assert_eq!(names[0], "0");
        assert_eq!(names[1], "1");
        assert!(names[2..].iter().all(|s| s.starts_with('a')));
        assert_eq!(f4.order(f4.primitive_element()), Some(3));
    }
}
