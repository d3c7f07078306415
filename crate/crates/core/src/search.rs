//! Ranked tables of skew constacyclic codes.
//!
//! Over `F_q` every monic right divisor of `x^n - lambda` in `F_q[x;theta]`
//! gives one code. Over `R` each component `j` draws from the divisor codes
//! of `x^n - lambda_{perm[j]}` in `F_q[x;psi_j]`, and a tuple is kept when it
//! passes the component characterization. For `theta` in `G_1` this is every
//! `theta`-`lambda`-cyclic code; for other twists it is the subfamily whose
//! components are themselves skew constacyclic.
//!
//! Rows are sorted by `k` descending, `d` descending, then the generator
//! coefficient codes, so output never depends on the pool size. Anything
//! beyond a cap is reported as a `SKIPPED` row instead of failing the search.

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{code_from_skew_generator, LinearCode};
use crate::distance::min_distance;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldAutomorphism};
use crate::poly;
use crate::repro::table;
use crate::ring_code::{is_ring_skew_constacyclic, RingLinearCode, RingTwist};
use crate::skew::{SkewPoly, TwistContext};

#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    /// Codeword budget per distance computation.
    pub budget: u128,
    /// Candidate cap per divisor degree.
    pub divisor_cap: u128,
    /// Cap on the number of component tuples in ring mode.
    pub tuple_cap: u128,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            budget: crate::distance::DEFAULT_BUDGET,
            divisor_cap: 1 << 20,
            tuple_cap: 1 << 16,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchRow {
    /// One generator per component (a single one over `F_q`), ascending codes.
    pub generators: Vec<Vec<Elem>>,
    pub n: usize,
    pub k: usize,
    /// `None` for the zero code or when skipped.
    pub d: Option<usize>,
    pub skipped: Option<String>,
}

impl SearchRow {
    fn sort_key(&self) -> (std::cmp::Reverse<usize>, std::cmp::Reverse<Option<usize>>, bool, &[Vec<Elem>]) {
        (
            std::cmp::Reverse(self.k),
            std::cmp::Reverse(self.d),
            self.skipped.is_some(),
            &self.generators,
        )
    }

    pub fn generator_text(&self) -> String {
        let g: Vec<String> = self.generators.iter().map(|g| poly::render(g)).collect();
        g.join(" | ")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchTable {
    pub title: String,
    pub rows: Vec<SearchRow>,
}

impl SearchTable {
    fn new(title: String, mut rows: Vec<SearchRow>) -> Self {
        rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        SearchTable { title, rows }
    }

    pub fn to_text(&self) -> String {
        let body: Vec<[String; 3]> = self
            .rows
            .iter()
            .map(|r| {
                let params = match (&r.skipped, r.d) {
                    (Some(why), _) => format!("SKIPPED ({why})"),
                    (None, Some(d)) => format!("[{},{},{}]", r.n, r.k, d),
                    (None, None) => format!("[{},{},-]", r.n, r.k),
                };
                [params, r.k.to_string(), r.generator_text()]
            })
            .collect();
        let mut out = format!("{}\n", self.title);
        table(&mut out, &["[n,k,d]", "k", "generator"], &body);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

enum DegreeCodes {
    Codes(Vec<(SkewPoly, LinearCode)>),
    Skipped { degree: usize, reason: String },
}

fn divisor_codes(ctx: &TwistContext, limits: &SearchLimits) -> Result<Vec<DegreeCodes>> {
    let mut out = Vec::new();
    for deg in 0..=ctx.n() {
        match ctx.right_divisors(Some(deg), limits.divisor_cap) {
            Ok(divs) => {
                let codes = divs
                    .into_iter()
                    .map(|g| {
                        let c = code_from_skew_generator(ctx, &g)?;
                        Ok((g, c))
                    })
                    .collect::<Result<Vec<_>>>()?;
                out.push(DegreeCodes::Codes(codes));
            }
            Err(e @ Error::EnumerationCap { .. }) => out.push(DegreeCodes::Skipped {
                degree: deg,
                reason: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn distance_or_skip(code: &LinearCode, budget: u128) -> (Option<usize>, Option<String>) {
    if code.is_zero() {
        return (None, None);
    }
    match min_distance(code, budget) {
        Ok(d) => (Some(d), None),
        Err(e) => (None, Some(e.to_string())),
    }
}

/// Every `theta`-`lambda`-cyclic code of length `n` over `F_q`.
pub fn search_field(ctx: &TwistContext, limits: &SearchLimits) -> Result<SearchTable> {
    let n = ctx.n();
    let mut rows = Vec::new();
    for group in divisor_codes(ctx, limits)? {
        match group {
            DegreeCodes::Codes(codes) => {
                rows.par_extend(codes.into_par_iter().map(|(g, c)| {
                    let (d, skipped) = distance_or_skip(&c, limits.budget);
                    SearchRow {
                        generators: vec![g.coeffs().to_vec()],
                        n,
                        k: c.k(),
                        d,
                        skipped,
                    }
                }));
            }
            DegreeCodes::Skipped { degree, reason } => rows.push(SearchRow {
                generators: Vec::new(),
                n,
                k: n - degree,
                d: None,
                skipped: Some(format!("divisors of degree {degree}: {reason}")),
            }),
        }
    }
    let title = format!(
        "n={} lambda={} theta=Frob^{} over F_{}",
        n,
        ctx.lambda(),
        ctx.theta().exponent(),
        ctx.field().q()
    );
    Ok(SearchTable::new(title, rows))
}

/// Ring mode: tuples of component divisor codes that form a
/// `theta`-`lambda`-cyclic code over `R`. The reported distance is the Gray
/// (flattened Hamming) distance.
pub fn search_ring(tw: &RingTwist, n: usize, limits: &SearchLimits) -> Result<SearchTable> {
    let ring = tw.ring();
    let f = ring.field();
    let t = ring.t();
    let mut pools: Vec<Vec<(SkewPoly, LinearCode)>> = Vec::with_capacity(t);
    let mut skipped = Vec::new();
    for j in 0..t {
        let psi = FieldAutomorphism::new(f, tw.theta().exps()[j] as i64);
        let ctx = TwistContext::new(n, tw.lambda()[tw.theta().perm()[j]], &psi)?;
        let mut pool = Vec::new();
        for group in divisor_codes(&ctx, limits)? {
            match group {
                DegreeCodes::Codes(c) => pool.extend(c),
                DegreeCodes::Skipped { degree, reason } => {
                    skipped.push(format!("component {} degree {degree}: {reason}", j + 1))
                }
            }
        }
        pools.push(pool);
    }
    let title = format!(
        "n={} ring F_{}^{} theta=({}) lambda={:?}",
        n,
        f.q(),
        t,
        tw.theta(),
        tw.lambda()
    );
    let skip_row = |why: String| SearchRow {
        generators: Vec::new(),
        n,
        k: 0,
        d: None,
        skipped: Some(why),
    };
    let total = pools
        .iter()
        .try_fold(1u128, |acc, p| acc.checked_mul(p.len() as u128))
        .unwrap_or(u128::MAX);
    if total > limits.tuple_cap {
        return Ok(SearchTable::new(
            title,
            vec![skip_row(format!("{total} component tuples exceed the cap {}", limits.tuple_cap))],
        ));
    }
    let mut rows: Vec<SearchRow> = (0..total as u64)
        .into_par_iter()
        .map(|mut idx| -> Result<Option<SearchRow>> {
            let mut gens = Vec::with_capacity(t);
            let mut comps = Vec::with_capacity(t);
            for pool in &pools {
                let (g, c) = &pool[(idx % pool.len() as u64) as usize];
                idx /= pool.len() as u64;
                gens.push(g.coeffs().to_vec());
                comps.push(c.clone());
            }
            let code = RingLinearCode::new(ring, comps)?;
            if !is_ring_skew_constacyclic(&code, tw)? {
                return Ok(None);
            }
            let (d, skipped) = if code.is_zero() {
                (None, None)
            } else {
                match crate::ring_code::ring_min_distance(&code, limits.budget) {
                    Ok(d) => (Some(d), None),
                    Err(e) => (None, Some(e.to_string())),
                }
            };
            Ok(Some(SearchRow {
                generators: gens,
                n,
                k: code.log_size(),
                d,
                skipped,
            }))
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;
    rows.extend(skipped.into_iter().map(skip_row));
    Ok(SearchTable::new(title, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::{RingAutomorphism, RingSpec};

    #[test]
    fn f4_frobenius_alpha() {
        let f = crate::repro::f4();
        let frob = FieldAutomorphism::frobenius(&f);
        let ctx = TwistContext::new(3, 2, &frob).unwrap();
        let t = search_field(&ctx, &SearchLimits::default()).unwrap();
        let gens: Vec<&Vec<Elem>> = t.rows.iter().map(|r| &r.generators[0]).collect();
        assert!(gens.contains(&&vec![2, 1]));
        assert!(gens.contains(&&vec![1, 3, 1]));
        assert!(t.rows.iter().all(|r| r.skipped.is_none()));
        let text = t.to_text();
        assert!(text.contains("x + 2") && text.contains("x^2 + 3*x + 1"));
    }

    #[test]
    fn length_one_is_trivial() {
        let f = FieldSpec::prime(5).unwrap();
        let ctx = TwistContext::new(1, 3, &FieldAutomorphism::identity(&f)).unwrap();
        let t = search_field(&ctx, &SearchLimits::default()).unwrap();
        let ks: Vec<usize> = t.rows.iter().map(|r| r.k).collect();
        assert_eq!(ks, vec![1, 0]);
    }

    #[test]
    fn negacyclic_ten() {
        let f = FieldSpec::prime(3).unwrap();
        let ctx = TwistContext::new(10, 2, &FieldAutomorphism::identity(&f)).unwrap();
        let t = search_field(&ctx, &SearchLimits::default()).unwrap();
        assert!(t
            .rows
            .iter()
            .any(|r| (r.k, r.d) == (6, Some(4)) && r.generators[0] == vec![1, 2, 0, 1, 1]));
        // sorted by k desc, d desc
        for w in t.rows.windows(2) {
            assert!((w[0].k, w[0].d) >= (w[1].k, w[1].d));
        }
    }

    #[test]
    fn caps_become_skipped_rows() {
        let f = FieldSpec::prime(3).unwrap();
        let ctx = TwistContext::new(6, 1, &FieldAutomorphism::identity(&f)).unwrap();
        let limits = SearchLimits {
            divisor_cap: 27,
            budget: 81,
            ..SearchLimits::default()
        };
        let t = search_field(&ctx, &limits).unwrap();
        let skipped = t.rows.iter().filter(|r| r.skipped.is_some()).count();
        assert!(skipped >= 3);
        assert!(t.to_text().contains("SKIPPED"));
    }

    #[test]
    fn deterministic_across_pools() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let ctx = TwistContext::new(4, 1, &FieldAutomorphism::frobenius(&f)).unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| search_field(&ctx, &SearchLimits::default()).unwrap().to_json())
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn ring_mode() {
        let f = FieldSpec::prime(3).unwrap();
        let ring = RingSpec::new(&f, 2).unwrap();
        let id = RingAutomorphism::identity(&ring);
        let tw = RingTwist::new(&id, vec![1, 2]).unwrap();
        let t = search_ring(&tw, 4, &SearchLimits::default()).unwrap();
        // x^4-1 = (x-1)(x+1)(x^2+1) has 8 divisors over F_3, x^4+1 = (x^2+x+2)(x^2+2x+2) has 4
        assert_eq!(t.rows.len(), 8 * 4);
        let cyc = RingAutomorphism::full_cycle(&ring);
        let tw = RingTwist::new(&cyc, vec![1, 1]).unwrap();
        let t = search_ring(&tw, 3, &SearchLimits::default()).unwrap();
        // gcd(2,3) = 1: C_1 = C_2 cyclic
        assert!(t.rows.iter().all(|r| r.generators[0] == r.generators[1]));
        assert_eq!(t.rows.len(), 4);
    }
}
