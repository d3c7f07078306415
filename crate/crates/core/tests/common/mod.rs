//! Brute-force oracles shared by the integration tests.
//!
//! `Space` enumerates every `R`-submodule of `R^n` directly from the module
//! axioms: words are indexed, addition and scalar multiplication are lookup
//! tables, and submodules are grown as `S + R x` from the zero module. Nothing
//! here uses the component decomposition of `R`.

#![allow(dead_code)]

use std::collections::HashSet;

use skewcode::ring::{RingElement, RingSpec};
use skewcode::ring_code::{RingLinearCode, RingWord};
use skewcode::{Elem, FieldSpec, LinearCode};

pub type Bits = Vec<u64>;

pub struct Space {
    pub ring: RingSpec,
    pub n: usize,
    pub words: Vec<RingWord>,
    scalars: Vec<RingElement>,
    add: Vec<u32>,
    smul: Vec<u32>,
}

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

impl Space {
    pub fn new(ring: &RingSpec, n: usize) -> Self {
        let scalars: Vec<RingElement> = ring.elements().collect();
        let r = scalars.len();
        let size = r.pow(n as u32);
        assert!(size <= 1 << 12, "space too large for the oracle");
        let index_of_scalar = |x: &RingElement| scalars.iter().position(|s| s == x).unwrap();
        let words: Vec<RingWord> = (0..size)
            .map(|mut i| {
                (0..n)
                    .map(|_| {
                        let s = scalars[i % r].clone();
                        i /= r;
                        s
                    })
                    .collect()
            })
            .collect();
        let encode = |w: &RingWord| {
            w.iter()
                .rev()
                .fold(0usize, |acc, x| acc * r + index_of_scalar(x))
        };
        let mut add = vec![0u32; size * size];
        for a in 0..size {
            for b in 0..size {
                let s: RingWord = words[a]
                    .iter()
                    .zip(&words[b])
                    .map(|(x, y)| ring.add(x, y).unwrap())
                    .collect();
                add[a * size + b] = encode(&s) as u32;
            }
        }
        let mut smul = vec![0u32; r * size];
        for (si, s) in scalars.iter().enumerate() {
            for a in 0..size {
                let w: RingWord = words[a].iter().map(|x| ring.mul(s, x).unwrap()).collect();
                smul[si * size + a] = encode(&w) as u32;
            }
        }
        Space {
            ring: ring.clone(),
            n,
            words,
            scalars,
            add,
            smul,
        }
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn index(&self, w: &RingWord) -> usize {
        self.words.iter().position(|x| x == w).unwrap()
    }

    fn members(&self, b: &Bits) -> Vec<usize> {
        (0..self.size()).filter(|&i| bit(b, i)).collect()
    }

    /// `S + R x`.
    fn extend(&self, s: &Bits, x: usize) -> Bits {
        let size = self.size();
        let mut out = vec![0u64; size.div_ceil(64)];
        let multiples: Vec<usize> = (0..self.scalars.len())
            .map(|si| self.smul[si * size + x] as usize)
            .collect();
        for m in self.members(s) {
            for &y in &multiples {
                set(&mut out, self.add[m * size + y] as usize);
            }
        }
        out
    }

    /// Every submodule of `R^n`, as bitsets over word indices.
    pub fn submodules(&self) -> Vec<Bits> {
        let mut zero = vec![0u64; self.size().div_ceil(64)];
        set(&mut zero, 0);
        let mut seen: HashSet<Bits> = HashSet::from([zero.clone()]);
        let mut stack = vec![zero];
        let mut out = Vec::new();
        while let Some(s) = stack.pop() {
            for x in 0..self.size() {
                if !bit(&s, x) {
                    let t = self.extend(&s, x);
                    if seen.insert(t.clone()) {
                        stack.push(t);
                    }
                }
            }
            out.push(s);
        }
        out.sort();
        out
    }

    pub fn words_of(&self, b: &Bits) -> Vec<RingWord> {
        self.members(b).into_iter().map(|i| self.words[i].clone()).collect()
    }

    /// Whether `map` sends the set into itself.
    pub fn is_closed(&self, b: &Bits, map: impl Fn(&RingWord) -> RingWord) -> bool {
        self.members(b)
            .into_iter()
            .all(|i| bit(b, self.index(&map(&self.words[i]))))
    }

    pub fn to_code(&self, b: &Bits) -> RingLinearCode {
        RingLinearCode::from_generator_rows(&self.ring, self.n, &self.words_of(b)).unwrap()
    }
}

/// Every subspace of `F_q^n`, via the `t = 1` module space.
pub fn subspaces(field: &FieldSpec, n: usize) -> Vec<LinearCode> {
    let space = Space::new(&RingSpec::new(field, 1).unwrap(), n);
    space
        .submodules()
        .iter()
        .map(|b| {
            let rows: Vec<Vec<Elem>> = space
                .words_of(b)
                .into_iter()
                .map(|w| w.into_iter().map(|x| x[0]).collect())
                .collect();
            LinearCode::new(field, n, rows).unwrap()
        })
        .collect()
}

/// Runs `f` and reports the elapsed time.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, std::time::Duration) {
    let start = std::time::Instant::now();
    let out = f();
    (out, start.elapsed())
}
