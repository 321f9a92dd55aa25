use num_rational::BigRational;

use super::series::{int, pow2, DonaldsonSeries};
use crate::floer::binom;

/// Basis `[E, F]` with `E = [Σ_g]`, `F = [Σ_h]` and the hyperbolic form.
pub fn product_lattice() -> DonaldsonSeries {
    DonaldsonSeries::new(vec!["E".into(), "F".into()], vec![vec![0, 1], vec![1, 0]])
        .expect("hyperbolic form")
}

/// `4^m sinh^{2m−2}(X)` for the unit class `X` at position `slot`, expanded
/// as `Σ_j C(n,j) (−1)^{n−j} e^{(2j−n)X} / 2^n` with `n = 2m − 2`.
fn sinh_power(m: u32, slot: usize) -> Vec<(Vec<i64>, BigRational)> {
    let n = 2 * m as i64 - 2;
    (0..=n)
        .map(|j| {
            let sign = if (n - j) % 2 == 0 { 1 } else { -1 };
            let mut k = vec![0, 0];
            k[slot] = 2 * j - n;
            let a = int(sign * binom(n, j)) * pow2(2 * m) / pow2(n as u32);
            (k, a)
        })
        .collect()
}

/// Donaldson series of `Σ_g × Σ_h`.
pub fn product_series(g: u32, h: u32) -> DonaldsonSeries {
    assert!(g >= 1 && h >= 1, "genera must be positive");
    let base = product_lattice();
    let terms = if h == 1 {
        sinh_power(g, 1)
    } else if g == 1 {
        sinh_power(h, 0)
    } else {
        let k = vec![2 * h as i64 - 2, 2 * g as i64 - 2];
        let minus: Vec<i64> = k.iter().map(|x| -x).collect();
        let c = pow2(7 * (g - 1) * (h - 1) + 2);
        let sign = if g.is_multiple_of(2) && h.is_multiple_of(2) {
            -1
        } else {
            1
        };
        vec![(k, c.clone()), (minus, c * int(sign))]
    };
    base.with_terms(terms).expect("classes have rank 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::donaldson::evaluate;
    use crate::exactalg::{GaussianRational, TruncatedSeries};
    use num_traits::Zero;

    #[test]
    fn examples() {
        let s = product_series(1, 1);
        assert_eq!(
            s.terms()
                .map(|(k, a)| (k.clone(), a.clone()))
                .collect::<Vec<_>>(),
            vec![(vec![0, 0], int(4))]
        );
        let s = product_series(2, 2);
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(&[2, 2]), int(512));
        assert_eq!(s.coeff(&[-2, -2]), int(-512));
        let s = product_series(2, 1);
        assert_eq!(s.len(), 3);
        assert_eq!(s.coeff(&[0, 2]), int(4));
        assert_eq!(s.coeff(&[0, 0]), int(-8));
        assert_eq!(s.coeff(&[0, -2]), int(4));
        let s = product_series(2, 3);
        assert_eq!(s.coeff(&[4, 2]), pow2(16));
        assert_eq!(s.coeff(&[-4, -2]), pow2(16));
    }

    #[test]
    fn symmetric_convention() {
        let a = product_series(3, 1);
        let b = product_series(1, 3);
        for (k, c) in a.terms() {
            assert_eq!(&b.coeff(&[k[1], k[0]]), c);
        }
    }

    #[test]
    fn evaluation_examples() {
        let e = evaluate(&product_series(2, 2), &[1, 0], 6).unwrap();
        let want = TruncatedSeries::from_coeffs(
            vec![
                GaussianRational::from_int(0),
                GaussianRational::from_int(2048),
                GaussianRational::from_int(0),
                GaussianRational::from_ratio(4096, 3),
                GaussianRational::from_int(0),
                GaussianRational::from_ratio(4096, 15),
            ],
            6,
        );
        assert_eq!(e, want);
        let e = evaluate(&product_series(1, 1), &[1, 0], 4).unwrap();
        assert_eq!(
            e,
            TruncatedSeries::constant(GaussianRational::from_int(4), 4)
        );
    }

    #[test]
    fn denominators_divide_factorials() {
        use num_integer::Integer;
        let order = 8;
        let mut fact = num_bigint::BigInt::from(1);
        for k in 1..order {
            fact *= k;
        }
        for g in 1..=4 {
            for h in 1..=4 {
                for d in [[1, 0], [0, 1], [1, 1], [2, -1]] {
                    let e = evaluate(&product_series(g, h), &d, order).unwrap();
                    for c in e.coeffs() {
                        assert!(c.im().is_zero());
                        assert!(fact.is_multiple_of(c.re().denom()));
                    }
                }
            }
        }
    }
}
