//! Exhaustive minimum distance and weight enumerators.
//!
//! The code is viewed as an `F_p`-space spanned by `beta_j G_i`, where `G_i`
//! are the generator rows and `beta_j = alpha^j` the polynomial basis of
//! `F_q` over `F_p`. A `p`-ary modular Gray code walks its `q^k` words with a
//! single vector addition per step. The walk is split on its top digits into
//! independent chunks for rayon; per-chunk results are merged in chunk order,
//! so the outcome is independent of the pool size.

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

/// Largest number of codewords an exhaustive search may visit by default.
pub const DEFAULT_BUDGET: u128 = 1 << 27;

/// Target number of chunks handed to rayon.
const CHUNK_TARGET: u64 = 256;

fn check_budget(code: &LinearCode, budget: u128) -> Result<()> {
    let size = code.size();
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    Ok(())
}

/// Addition on symbol indices, with a lookup table when `q <= 256`.
enum Adder {
    Table { q: usize, table: Vec<u8> },
    Field(FieldSpec),
}

impl Adder {
    fn new(field: &FieldSpec) -> Self {
        let q = field.q() as usize;
        if q <= 256 {
            let mut table = vec![0u8; q * q];
            for a in 0..q {
                for b in 0..q {
                    table[a * q + b] = field.add(a as Elem, b as Elem) as u8;
                }
            }
            Adder::Table { q, table }
        } else {
            Adder::Field(field.clone())
        }
    }

    #[inline]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Adder::Table { q, table } => table[a as usize * q + b as usize] as Elem,
            Adder::Field(f) => f.add(a, b),
        }
    }
}

struct Walk {
    p: u32,
    n: usize,
    /// Sparse `F_p` basis vectors: `(position, symbol)` pairs.
    basis: Vec<Vec<(usize, Elem)>>,
    adder: Adder,
}

impl Walk {
    fn new(code: &LinearCode) -> Self {
        let f = code.field();
        let p = f.p();
        let mut basis = Vec::new();
        let mut beta: Elem = 1;
        let mut betas = Vec::new();
        for _ in 0..f.r() {
            betas.push(beta);
            beta *= p;
        }
        // low digits vary fastest; keep the first rows there
        for row in code.rows() {
            for &b in &betas {
                let v: Vec<(usize, Elem)> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, f.mul(b, c)))
                    .collect();
                basis.push(v);
            }
        }
        Walk {
            p,
            n: code.n(),
            basis,
            adder: Adder::new(f),
        }
    }

    fn add_basis(&self, word: &mut [Elem], weight: &mut usize, j: usize) {
        for &(pos, val) in &self.basis[j] {
            let old = word[pos];
            let new = self.adder.add(old, val);
            word[pos] = new;
            *weight = *weight + (new != 0) as usize - (old != 0) as usize;
        }
    }

    /// Calls `visit(weight)` for every word whose top digits (from `low`
    /// upward) equal those of `prefix`.
    fn run_chunk(&self, low: usize, prefix: u64, mut visit: impl FnMut(usize) -> bool) {
        let mut word = vec![0; self.n];
        let mut weight = 0;
        let mut rest = prefix;
        for j in low..self.basis.len() {
            let d = rest % self.p as u64;
            rest /= self.p as u64;
            for _ in 0..d {
                self.add_basis(&mut word, &mut weight, j);
            }
        }
        let mut digits = vec![0u32; low];
        loop {
            if !visit(weight) {
                return;
            }
            // position of the Gray digit that changes: lowest counter digit below p-1
            let Some(j) = digits.iter().position(|&d| d + 1 < self.p) else {
                return;
            };
            for d in digits.iter_mut().take(j) {
                *d = 0;
            }
            digits[j] += 1;
            self.add_basis(&mut word, &mut weight, j);
        }
    }

    fn split(&self) -> (usize, u64) {
        let total = self.basis.len();
        let mut top = 0;
        let mut chunks = 1u64;
        while top < total && chunks < CHUNK_TARGET {
            chunks *= self.p as u64;
            top += 1;
        }
        (total - top, chunks)
    }
}

/// Exact minimum Hamming weight of the nonzero codewords.
pub fn min_distance(code: &LinearCode, budget: u128) -> Result<usize> {
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    check_budget(code, budget)?;
    let walk = Walk::new(code);
    let (low, chunks) = walk.split();
    let best = (0..chunks)
        .into_par_iter()
        .map(|prefix| {
            let mut best = usize::MAX;
            walk.run_chunk(low, prefix, |w| {
                if w > 0 && w < best {
                    best = w;
                }
                best > 1
            });
            best
        })
        .min()
        .unwrap();
    Ok(best)
}

/// `A_w` for `w = 0..=n`.
pub fn weight_enumerator(code: &LinearCode, budget: u128) -> Result<Vec<u64>> {
    check_budget(code, budget)?;
    let walk = Walk::new(code);
    let (low, chunks) = walk.split();
    let n = code.n();
    let parts: Vec<Vec<u64>> = (0..chunks)
        .into_par_iter()
        .map(|prefix| {
            let mut hist = vec![0u64; n + 1];
            walk.run_chunk(low, prefix, |w| {
                hist[w] += 1;
                true
            });
            hist
        })
        .collect();
    let mut out = vec![0u64; n + 1];
    for part in parts {
        for (o, v) in out.iter_mut().zip(part) {
            *o += v;
        }
    }
    Ok(out)
}

/// Every codeword, in no particular order. Meant for small codes.
pub fn codewords(code: &LinearCode, budget: u128) -> Result<Vec<Vec<Elem>>> {
    check_budget(code, budget)?;
    let f = code.field();
    let mut out = vec![vec![0; code.n()]];
    for row in code.rows() {
        let mut next = Vec::with_capacity(out.len() * f.q() as usize);
        for w in &out {
            for c in f.elements() {
                next.push(
                    w.iter()
                        .zip(row)
                        .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                        .collect(),
                );
            }
        }
        out = next;
    }
    Ok(out)
}

pub fn hamming_weight(word: &[Elem]) -> usize {
    word.iter().filter(|&&c| c != 0).count()
}
