//! Exhaustive cross-checks of the ring code results against brute-force
//! submodule enumeration.

mod common;

use common::{subspaces, Space};
use skewcode::code::code_from_skew_generator;
use skewcode::ring::DEFAULT_AUT_CAP;
use skewcode::ring_code::{build_case_two, is_ring_skew_constacyclic, is_sigma_closed};
use skewcode::skew::DEFAULT_DIVISOR_CAP;
use skewcode::{
    Error, FieldAutomorphism, FieldSpec, RingAutomorphism, RingLinearCode, RingSpec, RingTwist,
    ShiftMap, TwistContext,
};

fn f2_ring() -> RingSpec {
    RingSpec::new(&FieldSpec::prime(2).unwrap(), 2).unwrap()
}

#[test]
fn submodule_counts() {
    let ring = f2_ring();
    assert_eq!(Space::new(&ring, 3).submodules().len(), 256);
    assert_eq!(Space::new(&ring, 4).submodules().len(), 4489);
    assert_eq!(subspaces(&FieldSpec::prime(2).unwrap(), 4).len(), 67);
    assert_eq!(subspaces(&FieldSpec::prime(3).unwrap(), 3).len(), 28);
}

#[test]
fn case_two_count_matches_quasi_cyclic_count() {
    let ring = f2_ring();
    let f = ring.field().clone();
    let theta = RingAutomorphism::full_cycle(&ring);
    let tw = RingTwist::new(&theta, ring.one()).unwrap();
    let n = 4;
    let mut built = Vec::new();
    let mut quasi_cyclic = 0;
    for c1 in subspaces(&f, n) {
        let qc = c1.is_quasi_twisted(1, 2).unwrap();
        quasi_cyclic += qc as usize;
        match build_case_two(&c1, &theta) {
            Ok(code) => {
                assert!(qc);
                assert_eq!(code.components()[0], c1);
                assert!(is_sigma_closed(&code, &tw).unwrap());
                built.push(code);
            }
            Err(Error::NotQuasiCyclicIndexEll(2)) => assert!(!qc),
            Err(e) => panic!("{e}"),
        }
    }
    let space = Space::new(&ring, n);
    let closed: Vec<RingLinearCode> = space
        .submodules()
        .iter()
        .filter(|s| space.is_closed(s, |w| tw.apply(w).unwrap()))
        .map(|s| space.to_code(s))
        .collect();
    assert_eq!(built.len(), quasi_cyclic);
    assert_eq!(closed.len(), quasi_cyclic);
    for c in &closed {
        assert!(built.contains(c));
    }
}

#[test]
fn case_two_component_chain() {
    let ring = f2_ring();
    let theta = RingAutomorphism::full_cycle(&ring);
    let tw = RingTwist::new(&theta, ring.one()).unwrap();
    let rho = ShiftMap::cyclic(ring.field());
    for n in [3, 4] {
        let space = Space::new(&ring, n);
        let ell = if n % 2 == 0 { 2 } else { 1 };
        for s in space.submodules() {
            if !space.is_closed(&s, |w| tw.apply(w).unwrap()) {
                continue;
            }
            let code = space.to_code(&s);
            let c = code.components();
            assert_eq!(c[1], c[0].image_under(&rho).unwrap());
            assert_eq!(c[0], c[1].image_under(&rho).unwrap());
            if ell == 1 {
                assert_eq!(c[0], c[1]);
            }
            assert!(c[0].is_quasi_twisted(1, ell).unwrap());
        }
    }
}

#[test]
fn characterization_matches_enumeration_for_every_twist() {
    // every submodule, not only divisor-generated ones
    let ring = f2_ring();
    for n in [2, 3] {
        let space = Space::new(&ring, n);
        let subs = space.submodules();
        for theta in RingAutomorphism::enumerate(&ring, DEFAULT_AUT_CAP).unwrap() {
            let tw = RingTwist::new(&theta, ring.one()).unwrap();
            for s in &subs {
                let code = space.to_code(s);
                let brute = space.is_closed(s, |w| tw.apply(w).unwrap());
                assert_eq!(is_ring_skew_constacyclic(&code, &tw).unwrap(), brute);
            }
        }
    }
}

#[test]
fn dual_twist_on_grid() {
    for (p, r, t) in [(2, 1, 2), (3, 1, 2), (2, 2, 2), (2, 1, 3)] {
        let f = FieldSpec::new(p, r, None).unwrap();
        let ring = RingSpec::new(&f, t).unwrap();
        let units: Vec<Vec<u32>> = ring.elements().filter(|x| ring.is_unit(x)).collect();
        for n in 1..=3 {
            let mut pool = Vec::new();
            for psi in FieldAutomorphism::all(&f) {
                for mu in f.nonzero_elements() {
                    let ctx = TwistContext::new(n, mu, &psi).unwrap();
                    for g in ctx.right_divisors(None, DEFAULT_DIVISOR_CAP).unwrap() {
                        let c = code_from_skew_generator(&ctx, &g).unwrap();
                        if !pool.contains(&c) {
                            pool.push(c);
                        }
                    }
                }
            }
            for theta in RingAutomorphism::enumerate(&ring, DEFAULT_AUT_CAP).unwrap() {
                for lambda in &units {
                    let tw = RingTwist::new(&theta, lambda.clone()).unwrap();
                    let inv = tw.inverse_lambda();
                    let mut idx = vec![0; t];
                    'tuples: loop {
                        let comps = idx.iter().map(|&i| pool[i].clone()).collect();
                        let code = RingLinearCode::new(&ring, comps).unwrap();
                        if is_ring_skew_constacyclic(&code, &tw).unwrap() {
                            assert!(is_ring_skew_constacyclic(&code.dual(), &inv).unwrap());
                        }
                        for slot in idx.iter_mut() {
                            *slot += 1;
                            if *slot < pool.len() {
                                continue 'tuples;
                            }
                            *slot = 0;
                        }
                        break;
                    }
                }
            }
        }
    }
}
