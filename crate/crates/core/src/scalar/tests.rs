use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;

fn poly(v: &[(u32, u32, i64)]) -> IntPoly2 {
    IntPoly2::from_terms(v.iter().map(|&(a, b, c)| (a, b, BigInt::from(c))))
}

fn raw_eval(p: &IntPoly2, pt: &ModPoint) -> ModP {
    p.terms().fold(ModP::zero(), |acc, (a, b, c)| {
        acc.add(&ModP::from_bigint(c).mul(&pt.q.pow(a as u64)).mul(&pt.t.pow(b as u64)))
    })
}

#[test]
fn normalize_cancels_common_factors() {
    let s = QtScalar::normalize(poly(&[(2, 0, 1), (0, 0, -1)]), poly(&[(1, 0, 1), (0, 0, -1)]));
    assert_eq!(s.unwrap(), qt("q+1"));
    let z = QtScalar::normalize(IntPoly2::zero(), poly(&[(1, 0, 1), (0, 1, -1)])).unwrap();
    assert!(z.is_zero());
    assert!(z.denom().is_one());
    let s = QtScalar::normalize(poly(&[(1, 1, 1), (1, 0, -1)]), poly(&[(0, 1, 1), (0, 0, -1)]));
    assert_eq!(s.unwrap(), qt("q"));
    assert_eq!(
        QtScalar::normalize(IntPoly2::one(), IntPoly2::zero()),
        Err(ScalarError::ZeroDenominator)
    );
}

#[test]
fn arithmetic_examples() {
    assert_eq!(qt("q").add(&qt("1")), qt("q+1"));
    assert_eq!(qt("1/(q-1)").mul(&qt("q-1")), qt("1"));
    assert_eq!(qt("1").div(&qt("0")), Err(ScalarError::DivisionByZero));
}

#[test]
fn denominator_sign_is_canonical() {
    let s = qt("1/(1-q)");
    assert_eq!(s.denom().leading_coeff().unwrap(), &BigInt::from(1));
    assert_eq!(s.to_string(), "-1/(q-1)");
    assert_eq!(qt("(q^2-t)/(q*t-1)").to_string(), "(q^2-t)/(q*t-1)");
}

#[test]
fn evaluation_examples() {
    let pt = ModPoint::new(2, 3);
    assert_eq!(qt("q+t").eval(&pt.q, &pt.t).unwrap(), ModP::new(5));
    let at = ModPoint::new(1, 5);
    assert_eq!(qt("1/(q-1)").eval(&at.q, &at.t), Err(ScalarError::PoleAtPoint));
    let exact = qt("q+t").eval(&QtScalar::int(2), &QtScalar::int(3)).unwrap();
    assert_eq!(exact, QtScalar::int(5));
}

#[test]
fn q_factorial_values() {
    assert_eq!(q_factorial(0), qt("1"));
    assert_eq!(q_factorial(2), qt("1+q"));
    let expected = poly(&[(0, 0, 1), (1, 0, 2), (2, 0, 2), (3, 0, 1)]);
    assert_eq!(q_factorial(3), QtScalar::from_poly(expected));
    let ratio = (1..=4).fold(qt("1"), |acc, i| {
        acc.mul(&qt(&format!("(1-q^{i})/(1-q)")))
    });
    assert_eq!(q_factorial(4), ratio);
    assert!(q_factorial(5).is_polynomial());
}

#[test]
fn parser_handles_negative_exponents_and_nesting() {
    assert_eq!(qt("q^-2"), qt("1/q^2"));
    assert_eq!(qt("q^(-1)*q"), qt("1"));
    assert_eq!(qt("((q))^2 - 2*q + 1"), qt("(q-1)^2"));
    assert!("q +".parse::<QtScalar>().is_err());
    assert!("x".parse::<QtScalar>().is_err());
    assert!("1/(q-q)".parse::<QtScalar>().is_err());
}

#[test]
fn twenty_term_scalar_reduced_and_unreduced_agree() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng, n: usize| {
            IntPoly2::from_terms((0..n).map(|_| {
                (rng.gen_range(0..6), rng.gen_range(0..6), BigInt::from(rng.gen_range(-9i64..=9)))
            }))
        };
        let num = rand_poly(&mut rng, 20);
        let den = rand_poly(&mut rng, 6);
        let h = rand_poly(&mut rng, 4);
        if den.is_zero() || h.is_zero() {
            continue;
        }
        let (un, ud) = (num.mul(&h), den.mul(&h));
        let s = QtScalar::normalize(un.clone(), ud.clone()).unwrap();
        let pt = ModPoint::new(rng.gen_range(2..MODULUS), rng.gen_range(2..MODULUS));
        let d = raw_eval(&ud, &pt);
        if d.is_zero() {
            continue;
        }
        let expect = raw_eval(&un, &pt).mul(&d.inv().unwrap());
        assert_eq!(s.eval(&pt.q, &pt.t).unwrap(), expect);
    }
}

fn arb_poly() -> impl Strategy<Value = IntPoly2> {
    prop::collection::vec((0u32..4, 0u32..4, -5i64..=5), 0..5)
        .prop_map(|v| IntPoly2::from_terms(v.into_iter().map(|(a, b, c)| (a, b, BigInt::from(c)))))
}

fn arb_scalar() -> impl Strategy<Value = QtScalar> {
    (arb_poly(), arb_poly()).prop_filter_map("nonzero denominator", |(n, d)| {
        QtScalar::normalize(n, d).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normalize_is_idempotent(a in arb_scalar()) {
        let again = QtScalar::normalize(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn distributivity(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
    }

    #[test]
    fn field_axioms(a in arb_scalar(), b in arb_scalar()) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn eval_is_a_homomorphism(a in arb_scalar(), b in arb_scalar(), q0 in 2u64..MODULUS, t0 in 2u64..MODULUS) {
        let pt = ModPoint::new(q0, t0);
        let ev = |x: &QtScalar| x.eval(&pt.q, &pt.t);
        if let (Ok(ea), Ok(eb)) = (ev(&a), ev(&b)) {
            prop_assert_eq!(ev(&a.add(&b)).unwrap(), ea.add(&eb));
            prop_assert_eq!(ev(&a.mul(&b)).unwrap(), ea.mul(&eb));
            if !b.is_zero() && !eb.is_zero() {
                if let Ok(eq) = ev(&a.div(&b).unwrap()) {
                    prop_assert_eq!(eq, ea.mul(&eb.inv().unwrap()));
                }
            }
        }
    }

    #[test]
    fn print_parse_round_trip(a in arb_scalar()) {
        let text = a.to_string();
        let back: QtScalar = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, a);
    }
}

#[test]
fn gcd_scales_with_common_factor() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng, n: usize, d: u32| {
        IntPoly2::from_terms((0..n).map(|_| {
            (rng.gen_range(0..d), rng.gen_range(0..d), BigInt::from(rng.gen_range(-20i64..=20)))
        }))
    };
    for _ in 0..40 {
        let f = rand_poly(&mut rng, 6, 5);
        let g = rand_poly(&mut rng, 6, 5);
        let h = rand_poly(&mut rng, 4, 4);
        if f.is_zero() || g.is_zero() || h.is_zero() {
            continue;
        }
        let lhs = f.mul(&h).gcd(&g.mul(&h));
        let rhs = f.gcd(&g).mul(&h).sign_normalized();
        assert_eq!(lhs, rhs, "f={f} g={g} h={h}");
    }
}

#[test]
fn gcd_regression_divisor_case() {
    let a = qt("(q*t+2)*(4*t^2-q)");
    let b = qt("4*t^2-q");
    let g = a.numer().gcd(b.numer());
    assert_eq!(g, b.numer().clone(), "got {g}");
}
