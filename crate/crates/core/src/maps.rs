//! Maps from codes over `R` to codes over `F_q`: the flattening `phi`, the
//! matrix product map `eta_M`, the component sum `Psi`, and general matrix
//! product codes `[C_1, ..., C_u] A`.
//!
//! `phi(x) = (x_1 | x_2 | ... | x_t)` concatenates the component words, and
//! `eta_M(x) = phi(x) (M ⊗ E_n)`, whose block `i` is `sum_j m_{j,i} x_j`. The
//! tensor product is never formed; blocks are scaled copies of the rows.

use std::fmt;

use crate::code::{rref, LinearCode, ShiftMap};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::ring_code::RingLinearCode;

#[derive(Clone, PartialEq, Eq)]
pub struct MapMatrix {
    field: FieldSpec,
    rows: Vec<Vec<Elem>>,
}

impl MapMatrix {
    pub fn new(field: &FieldSpec, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.is_empty() || cols == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
            for &v in r {
                field.check(v as u64)?;
            }
        }
        Ok(MapMatrix {
            field: field.clone(),
            rows,
        })
    }

    pub fn identity(field: &FieldSpec, t: usize) -> Self {
        let rows = (0..t)
            .map(|i| (0..t).map(|j| (i == j) as Elem).collect())
            .collect();
        MapMatrix {
            field: field.clone(),
            rows,
        }
    }

    /// `[[1,1],[0,1]]`, the `(u | u+v)` construction.
    pub fn plotkin(field: &FieldSpec) -> Self {
        MapMatrix {
            field: field.clone(),
            rows: vec![vec![1, 1], vec![0, 1]],
        }
    }

    /// The all-ones column, `u x 1`.
    pub fn ones_column(field: &FieldSpec, u: usize) -> Self {
        MapMatrix {
            field: field.clone(),
            rows: vec![vec![1]; u],
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.rows[i][j]
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        rref(&self.field, &mut rows, self.ncols()).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.nrows() == self.ncols() && self.rank() == self.nrows()
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols())
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        MapMatrix {
            field: self.field.clone(),
            rows,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let f = &self.field;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.ncols())
                    .map(|j| {
                        r.iter()
                            .zip(&other.rows)
                            .fold(0, |acc, (&a, o)| f.add(acc, f.mul(a, o[j])))
                    })
                    .collect()
            })
            .collect();
        Ok(MapMatrix {
            field: f.clone(),
            rows,
        })
    }

    /// `k` with `M M^T = k E_t`, `k != 0`.
    pub fn orthogonality_scale(&self) -> Option<Elem> {
        let g = self.mul(&self.transpose()).ok()?;
        let k = g.get(0, 0);
        if k == 0 {
            return None;
        }
        let t = g.nrows();
        let ok = (0..t).all(|i| (0..t).all(|j| g.get(i, j) == if i == j { k } else { 0 }));
        ok.then_some(k)
    }
}

impl fmt::Display for MapMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let s: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MapMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MapMatrix{:?}", self.rows)
    }
}

/// Image of one component row `r` of `C_k` under `[..] A`: `(a_{k,1} r, ..., a_{k,v} r)`.
fn block_row(field: &FieldSpec, a: &MapMatrix, k: usize, r: &[Elem]) -> Vec<Elem> {
    let mut out = Vec::with_capacity(r.len() * a.ncols());
    for col in 0..a.ncols() {
        let s = a.get(k, col);
        out.extend(r.iter().map(|&v| field.mul(s, v)));
    }
    out
}

/// `[C_1, ..., C_u] A` for a `u x v` matrix `A`.
pub fn matrix_product_code(codes: &[LinearCode], a: &MapMatrix) -> Result<LinearCode> {
    if codes.is_empty() || codes.len() != a.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "{} codes for a matrix with {} rows",
            codes.len(),
            a.nrows()
        )));
    }
    let f = codes[0].field();
    let n = codes[0].n();
    for c in codes {
        if c.field() != f || a.field() != f {
            return Err(Error::FieldMismatch);
        }
        if c.n() != n {
            return Err(Error::DimensionMismatch("codes of different lengths".into()));
        }
    }
    let mut rows = Vec::new();
    for (k, c) in codes.iter().enumerate() {
        for r in c.rows() {
            rows.push(block_row(f, a, k, r));
        }
    }
    LinearCode::new(f, n * a.ncols(), rows)
}

/// `phi(C) = C_1 × ... × C_t`.
pub fn phi(code: &RingLinearCode) -> LinearCode {
    let t = code.ring().t();
    matrix_product_code(code.components(), &MapMatrix::identity(code.ring().field(), t)).unwrap()
}

/// `eta_M(C) = [C_1, ..., C_t] M` for an invertible `t x t` matrix.
pub fn eta(m: &MapMatrix, code: &RingLinearCode) -> Result<LinearCode> {
    let t = code.ring().t();
    if m.nrows() != t || m.ncols() != t {
        return Err(Error::DimensionMismatch(format!(
            "expected a {t}x{t} matrix, found {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if !m.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    matrix_product_code(code.components(), m)
}

/// `eta_M` on a single word: `phi(x) (M ⊗ E_n)`, as an explicit
/// vector-matrix product over the `t n` coordinates.
pub fn eta_word(m: &MapMatrix, word: &[Vec<Elem>]) -> Vec<Elem> {
    let f = m.field();
    let n = word.len();
    let t = m.nrows();
    let flat: Vec<Elem> = (0..t).flat_map(|j| word.iter().map(move |x| x[j])).collect();
    let mut out = vec![0; t * n];
    for (col, slot) in out.iter_mut().enumerate() {
        let (bi, pos) = (col / n, col % n);
        for (row, &v) in flat.iter().enumerate() {
            let (bj, rpos) = (row / n, row % n);
            // (M ⊗ E_n)[row][col] = m[bj][bi] when the positions agree
            if rpos == pos && v != 0 {
                *slot = f.add(*slot, f.mul(v, m.get(bj, bi)));
            }
        }
    }
    out
}

/// `Psi(C) = C_1 + ... + C_t`.
pub fn psi(code: &RingLinearCode) -> LinearCode {
    let comps = code.components();
    comps[1..]
        .iter()
        .fold(comps[0].clone(), |acc, c| acc.sum(c).unwrap())
}

/// Outcome of the cyclic/negacyclic intersection test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntersectionVerdict {
    Trivial,
    Nontrivial,
    /// The hypotheses fail; `trivial` still reports the computed intersection.
    PreconditionViolated { trivial: bool, reasons: Vec<String> },
}

impl IntersectionVerdict {
    pub fn is_trivial(&self) -> bool {
        match self {
            IntersectionVerdict::Trivial => true,
            IntersectionVerdict::Nontrivial => false,
            IntersectionVerdict::PreconditionViolated { trivial, .. } => *trivial,
        }
    }
}

/// Whether `C_1 ∩ C_2 = {0}` for `C_1` cyclic and `C_2` negacyclic in odd
/// characteristic with `k_1 + k_2 < n`; the intersection is always computed.
pub fn cyclic_negacyclic_intersection_trivial(
    c1: &LinearCode,
    c2: &LinearCode,
) -> Result<IntersectionVerdict> {
    let meet = c1.intersection(c2)?;
    let trivial = meet.is_zero();
    let f = c1.field();
    let mut reasons = Vec::new();
    if f.p() == 2 {
        reasons.push("characteristic 2".to_string());
    }
    if c1.k() + c2.k() >= c1.n() {
        reasons.push(format!("k1 + k2 = {} is not below n = {}", c1.k() + c2.k(), c1.n()));
    }
    if !c1.is_closed_under(&ShiftMap::cyclic(f))? {
        reasons.push("first code is not cyclic".to_string());
    }
    let neg = ShiftMap::new(&crate::field::FieldAutomorphism::identity(f), f.neg(1))?;
    if !c2.is_closed_under(&neg)? {
        reasons.push("second code is not negacyclic".to_string());
    }
    Ok(if !reasons.is_empty() {
        IntersectionVerdict::PreconditionViolated { trivial, reasons }
    } else if trivial {
        IntersectionVerdict::Trivial
    } else {
        IntersectionVerdict::Nontrivial
    })
}

/// `M = diag(m) V` with `V[j][i] = lambda_j^i`, for pairwise distinct `t`-th
/// roots of unity `lambda_j` and units `m_j`.
pub fn vandermonde_map(field: &FieldSpec, scalars: &[Elem], roots: &[Elem]) -> Result<MapMatrix> {
    let t = roots.len();
    if t == 0 || scalars.len() != t {
        return Err(Error::DimensionMismatch(format!(
            "{} scalars for {} roots",
            scalars.len(),
            t
        )));
    }
    for &v in scalars.iter().chain(roots) {
        field.check(v as u64)?;
    }
    if (field.q() as usize - 1) % t != 0 {
        return Err(Error::DivisibilityViolated(format!(
            "t = {t} does not divide q - 1 = {}",
            field.q() - 1
        )));
    }
    for &l in roots {
        if l == 0 || field.pow(l, t as u64) != 1 {
            return Err(Error::DivisibilityViolated(format!("{l} is not a root of x^{t} = 1")));
        }
    }
    for i in 0..t {
        if roots[i + 1..].contains(&roots[i]) {
            return Err(Error::RootsNotDistinct);
        }
    }
    if scalars.contains(&0) {
        return Err(Error::NotAUnit);
    }
    let rows = (0..t)
        .map(|j| {
            (0..t)
                .map(|i| field.mul(scalars[j], field.pow(roots[j], i as u64)))
                .collect()
        })
        .collect();
    MapMatrix::new(field, rows)
}

/// Checks `eta_M(C^perp) = eta_M(C)^perp` under `M M^T = k E_t`.
pub fn duality_transport_check(m: &MapMatrix, code: &RingLinearCode) -> Result<bool> {
    if m.orthogonality_scale().is_none() {
        return Err(Error::NotScaledOrthogonal);
    }
    Ok(eta(m, &code.dual())? == eta(m, code)?.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{min_distance, DEFAULT_BUDGET};
    use crate::field::FieldAutomorphism;
    use crate::ring::RingSpec;
    use crate::skew::{SkewPoly, TwistContext};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn constacyclic(field: &FieldSpec, n: usize, lambda: Elem, g: Vec<Elem>) -> LinearCode {
        let id = FieldAutomorphism::identity(field);
        let ctx = TwistContext::new(n, lambda, &id).unwrap();
        crate::code::code_from_skew_generator(&ctx, &SkewPoly::new(&id, g)).unwrap()
    }

    fn random_code(rng: &mut ChaCha8Rng, field: &FieldSpec, n: usize) -> LinearCode {
        let k = rng.gen_range(0..=n);
        let rows = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..field.q())).collect())
            .collect();
        LinearCode::new(field, n, rows).unwrap()
    }

    fn ring_code(field: &FieldSpec, comps: Vec<LinearCode>) -> RingLinearCode {
        RingLinearCode::new(&RingSpec::new(field, comps.len()).unwrap(), comps).unwrap()
    }

    #[test]
    fn phi_of_copies() {
        let f2 = f(2);
        let c = constacyclic(&f2, 3, 1, vec![1, 1]);
        for (t, n, k) in [(2, 6, 4), (3, 9, 6), (4, 12, 8)] {
            let image = phi(&ring_code(&f2, vec![c.clone(); t]));
            assert_eq!((image.n(), image.k()), (n, k));
            assert_eq!(min_distance(&image, DEFAULT_BUDGET).unwrap(), 2);
        }
    }

    #[test]
    fn eta_identity_is_phi_and_plotkin_is_u_u_plus_v() {
        let f3 = f(3);
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..20 {
            let c = ring_code(&f3, vec![random_code(&mut rng, &f3, 4), random_code(&mut rng, &f3, 4)]);
            assert_eq!(eta(&MapMatrix::identity(&f3, 2), &c).unwrap(), phi(&c));
            let plot = eta(&MapMatrix::plotkin(&f3), &c).unwrap();
            // explicit (u | u + v) spanning set
            let mut rows = Vec::new();
            for u in c.components()[0].rows() {
                rows.push(u.iter().chain(u).copied().collect());
            }
            for v in c.components()[1].rows() {
                rows.push(vec![0; 4].into_iter().chain(v.iter().copied()).collect());
            }
            assert_eq!(plot, LinearCode::new(&f3, 8, rows).unwrap());
            assert_eq!(
                matrix_product_code(c.components(), &MapMatrix::plotkin(&f3)).unwrap(),
                plot
            );
        }
        let singular = MapMatrix::new(&f3, vec![vec![1, 1], vec![1, 1]]).unwrap();
        let c = ring_code(&f3, vec![LinearCode::full(&f3, 2); 2]);
        assert_eq!(eta(&singular, &c).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn eta_generator_identity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        for p in [2, 3, 5] {
            let field = f(p);
            for _ in 0..40 {
                let t = rng.gen_range(1..=4);
                let n = rng.gen_range(1..=8);
                let m = loop {
                    let rows = (0..t)
                        .map(|_| (0..t).map(|_| rng.gen_range(0..p as Elem)).collect())
                        .collect();
                    let m = MapMatrix::new(&field, rows).unwrap();
                    if m.is_invertible() {
                        break m;
                    }
                };
                let comps = (0..t).map(|_| random_code(&mut rng, &field, n)).collect();
                let c = ring_code(&field, comps);
                let image = eta(&m, &c).unwrap();
                assert_eq!(image.k(), c.log_size());
                for row in c.generator_rows() {
                    let w = eta_word(&m, &row);
                    assert_eq!(w, block_image(&m, &row));
                    assert!(image.contains_word(&w));
                }
            }
        }
    }

    /// Block `i` of `eta_M(x)` is `sum_j m_{j,i} x_j`.
    fn block_image(m: &MapMatrix, word: &[Vec<Elem>]) -> Vec<Elem> {
        let fl = m.field();
        let t = m.nrows();
        let mut out = Vec::new();
        for i in 0..t {
            for x in word {
                out.push((0..t).fold(0, |acc, j| fl.add(acc, fl.mul(m.get(j, i), x[j]))));
            }
        }
        out
    }

    #[test]
    fn matrix_product_small_cases() {
        let f3 = f(3);
        let c = constacyclic(&f3, 4, 1, vec![2, 1]);
        assert_eq!(matrix_product_code(std::slice::from_ref(&c), &MapMatrix::ones_column(&f3, 1)).unwrap(), c);
        let d = constacyclic(&f3, 4, 2, vec![2, 1, 1]);
        let sum = matrix_product_code(&[c.clone(), d.clone()], &MapMatrix::ones_column(&f3, 2)).unwrap();
        assert_eq!(sum, psi(&ring_code(&f3, vec![c.clone(), d])));
        assert!(matches!(
            matrix_product_code(&[c], &MapMatrix::plotkin(&f3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    fn g8() -> (LinearCode, LinearCode) {
        let f3 = f(3);
        // (x+1)(x+2)(x^2+1)(x^2+2x+2) and x^4 + 2x^2 + 2
        let g1 = crate::poly::mul(&f3, &crate::poly::mul(&f3, &[2, 0, 1], &[1, 0, 1]), &[2, 2, 1]);
        (constacyclic(&f3, 8, 1, g1), constacyclic(&f3, 8, 2, vec![2, 0, 2, 0, 1]))
    }

    #[test]
    fn psi_eight() {
        let (c1, c2) = g8();
        assert_eq!((c1.k(), c2.k()), (2, 4));
        let s = psi(&ring_code(&f(3), vec![c1.clone(), c2.clone()]));
        assert_eq!((s.n(), s.k()), (8, 6));
        assert_eq!(min_distance(&s, DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(
            cyclic_negacyclic_intersection_trivial(&c1, &c2).unwrap(),
            IntersectionVerdict::Trivial
        );
        let v = cyclic_negacyclic_intersection_trivial(&c1, &c1).unwrap();
        assert!(!v.is_trivial());
        assert!(matches!(v, IntersectionVerdict::PreconditionViolated { .. }));
    }

    #[test]
    fn cyclic_negacyclic_pairs_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        let mut checked = 0;
        while checked < 50 {
            let field = f(if rng.gen_bool(0.5) { 3 } else { 5 });
            let n = rng.gen_range(2..8);
            let id = FieldAutomorphism::identity(&field);
            let pick = |lambda: Elem, rng: &mut ChaCha8Rng| {
                let ctx = TwistContext::new(n, lambda, &id).unwrap();
                let divs = ctx.right_divisors(None, 1 << 20).unwrap();
                crate::code::code_from_skew_generator(&ctx, &divs[rng.gen_range(0..divs.len())])
                    .unwrap()
            };
            let c1 = pick(1, &mut rng);
            let c2 = pick(field.neg(1), &mut rng);
            if c1.k() + c2.k() >= n {
                continue;
            }
            assert_eq!(
                cyclic_negacyclic_intersection_trivial(&c1, &c2).unwrap(),
                IntersectionVerdict::Trivial
            );
            checked += 1;
        }
    }

    #[test]
    fn vandermonde_examples() {
        let f3 = f(3);
        let m = vandermonde_map(&f3, &[1, 1], &[1, 2]).unwrap();
        assert_eq!(m.rows(), &[vec![1, 1], vec![1, 2]]);
        // [[1,1],[-1,1]] is the Vandermonde map with scalars (1, -1)
        let zhu = MapMatrix::new(&f3, vec![vec![1, 1], vec![2, 1]]).unwrap();
        assert_eq!(vandermonde_map(&f3, &[1, 2], &[1, 2]).unwrap(), zhu);
        let m1 = vandermonde_map(&f(5), &[3], &[1]).unwrap();
        assert_eq!(m1.rows(), &[vec![3]]);
        assert_eq!(vandermonde_map(&f3, &[1, 1], &[1, 1]).unwrap_err(), Error::RootsNotDistinct);
        assert!(matches!(
            vandermonde_map(&f3, &[1, 1, 1], &[1, 2, 1]),
            Err(Error::DivisibilityViolated(_))
        ));
    }

    #[test]
    fn duality_transport() {
        let f3 = f(3);
        let m = MapMatrix::new(&f3, vec![vec![1, 1], vec![1, 2]]).unwrap();
        assert_eq!(m.orthogonality_scale(), Some(2));
        let mut rng = ChaCha8Rng::seed_from_u64(64);
        for _ in 0..30 {
            let n = rng.gen_range(1..6);
            let c = ring_code(&f3, vec![random_code(&mut rng, &f3, n), random_code(&mut rng, &f3, n)]);
            assert!(duality_transport_check(&m, &c).unwrap());
            assert!(duality_transport_check(&MapMatrix::identity(&f3, 2), &c).unwrap());
        }
        let c = ring_code(&f3, vec![LinearCode::full(&f3, 2); 2]);
        assert_eq!(
            duality_transport_check(&MapMatrix::plotkin(&f3), &c).unwrap_err(),
            Error::NotScaledOrthogonal
        );
    }
}
