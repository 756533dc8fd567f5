//! `x^3 + b x + a^n` over coprime `a <= 30`, `1 <= |b| <= 200`.

use flt_lab_core::claims::coverage::coprime_cubic_pairs;
use flt_lab_core::polysplit::{classify_cubic, CubicClass};
use flt_lab_core::ExactInt;
use flt_lab_oracles as oracle;

fn three_linear(a_max: i128, b_max: i128, n: u32) -> (Vec<(i128, i128)>, u64) {
    let mut found = Vec::new();
    let mut seen = 0;
    for a in 1..=a_max {
        for b in -b_max..=b_max {
            if b == 0 || oracle::gcd(a, b) != 1 {
                continue;
            }
            seen += 1;
            if classify_cubic(&ExactInt::from(b), &ExactInt::from(a), n).unwrap() == CubicClass::ThreeLinear {
                found.push((a, b));
            }
        }
    }
    (found, seen)
}

#[test]
fn no_split_cubic_for_exponents_three_to_five() {
    for n in 3..=5 {
        let (found, seen) = three_linear(30, 200, n);
        assert!(found.is_empty(), "n={n}: {found:?}");
        assert_eq!(seen, coprime_cubic_pairs(30, 200));
        assert_eq!(oracle::split_cubics(30, 200, n), (vec![], seen));
    }
}

#[test]
fn split_cubics_for_small_exponents_match_oracle() {
    for n in 1..=2 {
        let got = three_linear(30, 200, n);
        assert_eq!(got, oracle::split_cubics(30, 200, n), "n={n}");
    }
    // 3^2 + 4^2 = 5^2 gives a = 60, b = -481; within a <= 30 nothing Pythagorean fits
    assert!(three_linear(60, 481, 2).0.contains(&(60, -481)));
}
