use feasichar::cyclotomic::{cyclotomic_polynomial, divisors, euler_phi, CyclotomicNumber as Cyc};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

/// Numerical value of `sum counts[k] zeta_n^k`, computed without the library.
fn numeric(n: u64, counts: &[i64]) -> (f64, f64) {
    counts.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
        let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        (re + c as f64 * a.cos(), im + c as f64 * a.sin())
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
}

#[test]
fn small_polynomials() {
    assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
    assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
    assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
    assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    assert_eq!(euler_phi(36), 12);
    assert_eq!(euler_phi(1), 1);
    assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
}

#[test]
fn identities() {
    let z3 = Cyc::root_of_unity(3, 1);
    assert!((Cyc::one() + z3.clone() + &z3 * &z3).is_zero());
    let i = Cyc::root_of_unity(4, 1);
    assert_eq!(&i * &i, Cyc::integer(-1));
    assert_eq!(Cyc::root_of_unity(7, 7), Cyc::one());
    assert_eq!(Cyc::root_of_unity(5, -1), Cyc::root_of_unity(5, 4));
}

#[test]
fn conductors_are_minimal() {
    assert_eq!(Cyc::root_of_unity(6, 1).conductor(), 3);
    assert_eq!(Cyc::root_of_unity(10, 3).conductor(), 5);
    assert_eq!(Cyc::root_of_unity(12, 3).conductor(), 4);
    assert_eq!(Cyc::root_of_unity(12, 1).conductor(), 12);
    let s = Cyc::root_of_unity(8, 1) + Cyc::root_of_unity(8, 7);
    assert_eq!(s.conductor(), 8);
    assert_eq!((&s * &s), Cyc::integer(2));
    let golden = Cyc::root_of_unity(15, 3) + Cyc::root_of_unity(15, 12);
    assert_eq!(golden.conductor(), 5);
}

#[test]
fn rendering() {
    let v: Cyc = "1 - z5^2 + 3*z5^3".parse().unwrap();
    assert_eq!(v.to_string(), "1 - z5^2 + 3*z5^3");
    assert_eq!(Cyc::zero().to_string(), "0");
    assert_eq!(Cyc::integer(-7).to_string(), "-7");
    assert_eq!(Cyc::root_of_unity(7, 1).to_string(), "z7");
    let mixed: Cyc = "-1*z5^1 + -1*z5^4 + z3 - z3".parse().unwrap();
    assert_eq!(mixed.to_string(), "1 + z5^2 + z5^3");
    for bad in ["z", "z0^1", "1 +", "3*", "z5^", "zq"] {
        assert!(bad.parse::<Cyc>().is_err(), "{bad}");
    }
}

#[test]
fn coordinates_and_lifting() {
    let v = Cyc::root_of_unity(3, 1);
    assert_eq!(v.coords_at_i64(3).unwrap(), vec![0, 1]);
    assert_eq!(v.coords_at_i64(6).unwrap(), vec![-1, 1]);
    assert!(v.coords_at_i64(4).is_none());
    assert_eq!(Cyc::integer(5).coords_at_i64(5).unwrap(), vec![5, 0, 0, 0]);
}

#[test]
fn galois_rejects_non_units() {
    assert!(Cyc::root_of_unity(6, 1).galois(3).is_err());
    assert!(Cyc::root_of_unity(5, 1).galois(5).is_err());
    assert_eq!(Cyc::integer(3).galois(2).unwrap(), Cyc::integer(3));
}

#[test]
fn norms() {
    let one_minus_z5 = Cyc::one() - Cyc::root_of_unity(5, 1);
    assert_eq!(one_minus_z5.norm(), BigInt::from(5));
    let sqrt_m3 = Cyc::root_of_unity(3, 1) - Cyc::root_of_unity(3, 2);
    assert_eq!(sqrt_m3.norm(), BigInt::from(3));
    assert_eq!(Cyc::integer(-4).norm(), BigInt::from(-4));
}

fn element() -> impl Strategy<Value = (u64, Vec<i64>)> {
    prop::sample::select(vec![1u64, 3, 4, 5, 7, 8, 9, 12, 15])
        .prop_flat_map(|n| (Just(n), prop::collection::vec(-5i64..=5, n as usize)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_numeric_value((n, c) in element()) {
        let v = Cyc::from_exponent_counts(n, &c);
        prop_assert!(close(v.to_complex(), numeric(n, &c)));
        prop_assert_eq!(v.conductor() % 4 == 2, false);
        prop_assert_eq!(n % v.conductor(), 0);
    }

    #[test]
    fn ring_operations((n, a) in element(), (m, b) in element()) {
        let x = Cyc::from_exponent_counts(n, &a);
        let y = Cyc::from_exponent_counts(m, &b);
        let (xr, xi) = numeric(n, &a);
        let (yr, yi) = numeric(m, &b);
        prop_assert!(close((&x + &y).to_complex(), (xr + yr, xi + yi)));
        prop_assert!(close((&x - &y).to_complex(), (xr - yr, xi - yi)));
        prop_assert!(close((&x * &y).to_complex(), (xr * yr - xi * yi, xr * yi + xi * yr)));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn display_round_trips((n, c) in element()) {
        let v = Cyc::from_exponent_counts(n, &c);
        let back: Cyc = v.to_string().parse().unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn galois_is_a_ring_map((n, a) in element(), (m, b) in element(), k in 1i64..60) {
        let x = Cyc::from_exponent_counts(n, &a);
        let y = Cyc::from_exponent_counts(m, &b);
        let l = n.lcm(&m) as i64;
        prop_assume!(k.gcd(&l) == 1);
        let g = |v: &Cyc| v.galois(k).unwrap();
        prop_assert_eq!(g(&(&x * &y)), &g(&x) * &g(&y));
        prop_assert_eq!(g(&(&x + &y)), &g(&x) + &g(&y));
        let shifted: Vec<i64> = {
            let mut s = vec![0; n as usize];
            for (j, &cj) in a.iter().enumerate() {
                s[(j as i64 * k).rem_euclid(n as i64) as usize] += cj;
            }
            s
        };
        prop_assert!(close(g(&x).to_complex(), numeric(n, &shifted)));
    }

    #[test]
    fn norm_is_product_of_conjugates((n, c) in element()) {
        let v = Cyc::from_exponent_counts(n, &c);
        let f = v.conductor();
        let mut re = 1.0f64;
        let mut im = 0.0f64;
        for k in 1..=f {
            if k.gcd(&f) == 1 {
                let (a, b) = v.galois(k as i64).unwrap().to_complex();
                let t = re * a - im * b;
                im = re * b + im * a;
                re = t;
            }
        }
        let nrm = v.norm();
        let approx: f64 = nrm.to_string().parse().unwrap();
        prop_assert!((approx - re).abs() <= 1e-6 * approx.abs().max(1.0));
        prop_assert!(im.abs() <= 1e-6 * approx.abs().max(1.0));
    }
}
