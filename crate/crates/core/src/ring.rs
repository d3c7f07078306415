//! The product ring `R = F_q^t` and its automorphism group.
//!
//! Elements are coordinate vectors in the idempotent basis `e_1, ..., e_t`.
//! An automorphism sends `sum a_j e_j` to `sum psi_j(a_j) e_{perm[j]}` with
//! `psi_j = Frob^{exps[j]}`. Permutations are 0-based image arrays.
//!
//! Composition `(theta1 ∘ theta2)(x) = theta1(theta2(x))`: coordinate `j` is
//! first moved to `p2[j]` under `Frob^{m2[j]}`, then to `p1[p2[j]]` under
//! `Frob^{m1[p2[j]]}`, so
//! `perm[j] = p1[p2[j]]` and `exps[j] = m2[j] + m1[p2[j]] (mod r)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

/// Default cap on the size of an enumerated automorphism group.
pub const DEFAULT_AUT_CAP: u128 = 1_000_000;

#[derive(Clone, PartialEq, Eq)]
pub struct RingSpec {
    field: FieldSpec,
    t: usize,
}

/// A ring element as its `t` component codes.
pub type RingElement = Vec<Elem>;

impl RingSpec {
    pub fn new(field: &FieldSpec, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::DimensionMismatch("t must be at least 1".into()));
        }
        Ok(RingSpec {
            field: field.clone(),
            t,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `|R| = q^t`, saturating.
    pub fn size(&self) -> u128 {
        (self.field.q() as u128)
            .checked_pow(self.t as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn check(&self, x: &[Elem]) -> Result<()> {
        if x.len() != self.t {
            return Err(Error::RingMismatch);
        }
        for &c in x {
            self.field.check(c as u64)?;
        }
        Ok(())
    }

    pub fn zero(&self) -> RingElement {
        vec![0; self.t]
    }

    pub fn one(&self) -> RingElement {
        vec![1; self.t]
    }

    /// The primitive idempotent `e_j` (0-based).
    pub fn idempotent(&self, j: usize) -> RingElement {
        let mut v = self.zero();
        v[j] = 1;
        v
    }

    /// `a e_j`.
    pub fn scalar_at(&self, a: Elem, j: usize) -> RingElement {
        let mut v = self.zero();
        v[j] = a;
        v
    }

    /// Embeds `a` as `a 1_R`.
    pub fn constant(&self, a: Elem) -> RingElement {
        vec![a; self.t]
    }

    pub fn add(&self, x: &[Elem], y: &[Elem]) -> Result<RingElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect())
    }

    pub fn mul(&self, x: &[Elem], y: &[Elem]) -> Result<RingElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.iter().zip(y).map(|(&a, &b)| self.field.mul(a, b)).collect())
    }

    pub fn neg(&self, x: &[Elem]) -> RingElement {
        x.iter().map(|&a| self.field.neg(a)).collect()
    }

    pub fn is_unit(&self, x: &[Elem]) -> bool {
        x.len() == self.t && x.iter().all(|&a| a != 0)
    }

    pub fn inv(&self, x: &[Elem]) -> Result<RingElement> {
        self.check(x)?;
        x.iter()
            .map(|&a| self.field.inv(a).ok_or(Error::NotAUnit))
            .collect()
    }

    /// All `q^t` elements in lexicographic order of their codes.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        let q = self.field.q() as u128;
        let total = self.size();
        (0..total).map(move |mut code| {
            let mut v = vec![0; self.t];
            for slot in v.iter_mut() {
                *slot = (code % q) as Elem;
                code /= q;
            }
            v
        })
    }
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}^{}", self.field, self.t)
    }
}

/// An ideal `sum_{j in S} F_q e_j`, named by its support `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub support: Vec<usize>,
    t: usize,
}

impl Ideal {
    pub fn is_maximal(&self) -> bool {
        self.support.len() + 1 == self.t
    }

    pub fn contains(&self, x: &[Elem]) -> bool {
        x.iter()
            .enumerate()
            .all(|(j, &a)| a == 0 || self.support.contains(&j))
    }

    /// The idempotent generating this ideal.
    pub fn generator(&self) -> RingElement {
        (0..self.t)
            .map(|j| self.support.contains(&j) as Elem)
            .collect()
    }
}

/// All `2^t` ideals ordered by support bitmask.
pub fn list_ideals(ring: &RingSpec) -> Result<Vec<Ideal>> {
    let t = ring.t();
    if t > 20 {
        return Err(Error::EnumerationCap {
            size: 1u128 << t,
            cap: 1 << 20,
        });
    }
    Ok((0u32..1 << t)
        .map(|mask| Ideal {
            support: (0..t).filter(|&j| mask >> j & 1 == 1).collect(),
            t,
        })
        .collect())
}

#[derive(Clone, PartialEq, Eq)]
pub struct RingAutomorphism {
    ring: RingSpec,
    perm: Vec<usize>,
    exps: Vec<u32>,
}

impl RingAutomorphism {
    /// `perm` is a 0-based image array, `exps` are Frobenius exponents
    /// (reduced mod `r`).
    pub fn new(ring: &RingSpec, perm: Vec<usize>, exps: Vec<i64>) -> Result<Self> {
        let t = ring.t();
        if perm.len() != t || exps.len() != t {
            return Err(Error::InvalidPermutation(perm));
        }
        let mut seen = vec![false; t];
        for &p in &perm {
            if p >= t || seen[p] {
                return Err(Error::InvalidPermutation(perm));
            }
            seen[p] = true;
        }
        let r = ring.field().r() as i64;
        Ok(RingAutomorphism {
            ring: ring.clone(),
            perm,
            exps: exps.iter().map(|&e| e.rem_euclid(r) as u32).collect(),
        })
    }

    pub fn identity(ring: &RingSpec) -> Self {
        RingAutomorphism {
            ring: ring.clone(),
            perm: (0..ring.t()).collect(),
            exps: vec![0; ring.t()],
        }
    }

    /// The `G_2` element `e_j -> e_{j+1 mod t}`.
    pub fn full_cycle(ring: &RingSpec) -> Self {
        let t = ring.t();
        RingAutomorphism {
            ring: ring.clone(),
            perm: (0..t).map(|j| (j + 1) % t).collect(),
            exps: vec![0; t],
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Fixes every idempotent.
    pub fn in_g1(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| j == p)
    }

    /// Acts trivially on every component field.
    pub fn in_g2(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Whether the permutation is one cycle through all `t` positions.
    pub fn is_full_cycle(&self) -> bool {
        let t = self.perm.len();
        let mut j = 0;
        for step in 1..=t {
            j = self.perm[j];
            if j == 0 {
                return step == t;
            }
        }
        false
    }

    /// `psi_j` applied to a field element.
    pub fn apply_component(&self, j: usize, a: Elem) -> Elem {
        self.ring.field().frob(a, self.exps[j])
    }

    pub fn apply(&self, x: &[Elem]) -> Result<RingElement> {
        self.ring.check(x)?;
        let mut out = self.ring.zero();
        for (j, &a) in x.iter().enumerate() {
            out[self.perm[j]] = self.apply_component(j, a);
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let r = self.ring.field().r();
        let t = self.ring.t();
        let perm = (0..t).map(|j| self.perm[other.perm[j]]).collect();
        let exps = (0..t)
            .map(|j| (other.exps[j] + self.exps[other.perm[j]]) % r)
            .collect();
        Ok(RingAutomorphism {
            ring: self.ring.clone(),
            perm,
            exps,
        })
    }

    pub fn inverse(&self) -> Self {
        let r = self.ring.field().r();
        let t = self.ring.t();
        let mut perm = vec![0; t];
        let mut exps = vec![0; t];
        for j in 0..t {
            perm[self.perm[j]] = j;
            exps[self.perm[j]] = (r - self.exps[j]) % r;
        }
        RingAutomorphism {
            ring: self.ring.clone(),
            perm,
            exps,
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(&self.ring);
        for _ in 0..k {
            acc = acc.compose(self).unwrap();
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.in_g1() && self.in_g2()
    }

    pub fn order(&self) -> usize {
        let id = Self::identity(&self.ring);
        let mut acc = self.clone();
        let mut k = 1;
        while acc != id {
            acc = acc.compose(self).unwrap();
            k += 1;
        }
        k
    }

    /// `self = g1 ∘ g2` with `g1 ∈ G_1` and `g2 ∈ G_2`.
    pub fn factor(&self) -> (Self, Self) {
        let t = self.ring.t();
        let g2 = RingAutomorphism {
            ring: self.ring.clone(),
            perm: self.perm.clone(),
            exps: vec![0; t],
        };
        // (g1 ∘ g2) has exps[j] = m1[perm[j]]
        let mut e1 = vec![0; t];
        for j in 0..t {
            e1[self.perm[j]] = self.exps[j];
        }
        let g1 = RingAutomorphism {
            ring: self.ring.clone(),
            perm: (0..t).collect(),
            exps: e1,
        };
        (g1, g2)
    }

    /// All `r^t t!` automorphisms, lexicographic on `(perm, exps)`.
    pub fn enumerate(ring: &RingSpec, cap: u128) -> Result<Vec<Self>> {
        let t = ring.t();
        let r = ring.field().r() as u128;
        let fact: u128 = (1..=t as u128).product();
        let size = r
            .checked_pow(t as u32)
            .and_then(|v| v.checked_mul(fact))
            .unwrap_or(u128::MAX);
        if size > cap {
            return Err(Error::EnumerationCap { size, cap });
        }
        let mut out = Vec::with_capacity(size as usize);
        for perm in permutations(t) {
            for code in 0..r.pow(t as u32) {
                let mut c = code;
                let exps = (0..t)
                    .map(|_| {
                        let e = (c % r) as u32;
                        c /= r;
                        e
                    })
                    .rev()
                    .collect();
                out.push(RingAutomorphism {
                    ring: ring.clone(),
                    perm: perm.clone(),
                    exps,
                });
            }
        }
        Ok(out)
    }
}

/// Permutations of `0..t` in lexicographic order.
pub fn permutations(t: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..t).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..t).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..t).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

impl fmt::Display for RingAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        let exps: Vec<String> = self.exps.iter().map(|e| e.to_string()).collect();
        write!(f, "perm:[{}] exps:[{}]", perm.join(","), exps.join(","))
    }
}

impl fmt::Debug for RingAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
