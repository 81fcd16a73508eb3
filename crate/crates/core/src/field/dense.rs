//! Dense univariate polynomials over the rationals, used only to cancel common
//! factors of a ratio. Coefficients are stored lowest degree first with no
//! trailing zeros.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::Rational;

/// The Mersenne prime `2^61 - 1`.
const P: u64 = (1 << 61) - 1;

pub(super) type Dense = Vec<Rational>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &Dense) -> Option<usize> {
    p.len().checked_sub(1)
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub(super) fn div_rem(a: &Dense, b: &Dense) -> (Dense, Dense) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = &b[db];
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(db)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let k = dr - db;
        let c = &rem[dr] / lead;
        for (i, bc) in b.iter().enumerate() {
            rem[i + k] -= &c * bc;
        }
        quot[k] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn make_monic(p: &mut Dense) {
    if let Some(lead) = p.last().cloned() {
        for c in p.iter_mut() {
            *c /= &lead;
        }
    }
}

/// Monic greatest common divisor.
pub(super) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    make_monic(&mut y);
    while !y.is_empty() {
        let (_, mut r) = div_rem(&x, &y);
        make_monic(&mut r);
        x = y;
        y = r;
    }
    make_monic(&mut x);
    x
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

fn int_mod(n: &BigInt) -> u64 {
    let r = n % BigInt::from(P);
    let r = if r < BigInt::zero() { r + BigInt::from(P) } else { r };
    r.to_u64().expect("reduced below P")
}

/// The image of `p` in `F_P[t]`, or `None` when a denominator vanishes.
fn reduce(p: &Dense) -> Option<Vec<u64>> {
    p.iter()
        .map(|c| {
            let d = int_mod(c.denom());
            (d != 0).then(|| mul_mod(int_mod(c.numer()), inv_mod(d)))
        })
        .collect()
}

fn degree_of_gcd_mod_p(mut x: Vec<u64>, mut y: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let inv = inv_mod(*y.last().expect("nonempty"));
        while x.len() >= y.len() {
            let k = x.len() - y.len();
            let c = mul_mod(*x.last().expect("nonempty"), inv);
            for (i, yc) in y.iter().enumerate() {
                x[i + k] = (x[i + k] + P - mul_mod(c, *yc)) % P;
            }
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len().saturating_sub(1)
}

/// `true` only when `a` and `b` are certainly coprime over the rationals:
/// their images mod a prime keep both leading coefficients and are coprime.
pub(super) fn certainly_coprime(a: &Dense, b: &Dense) -> bool {
    let (Some(x), Some(y)) = (reduce(a), reduce(b)) else {
        return false;
    };
    let keeps_lead = |v: &[u64]| v.last().is_some_and(|&c| c != 0);
    keeps_lead(&x) && keeps_lead(&y) && degree_of_gcd_mod_p(x, y) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    fn d(cs: &[i64]) -> Dense {
        cs.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        // t² − 1 and t − 1
        assert_eq!(gcd(&d(&[-1, 0, 1]), &d(&[-1, 1])), d(&[-1, 1]));
        // coprime
        assert_eq!(gcd(&d(&[1, 1]), &d(&[-1, 1])), d(&[1]));
    }

    #[test]
    fn modular_coprimality() {
        assert!(certainly_coprime(&d(&[1, 1]), &d(&[-1, 1])));
        assert!(!certainly_coprime(&d(&[-1, 0, 1]), &d(&[-1, 1])));
        assert!(!certainly_coprime(&d(&[2, 3, 1]), &d(&[1, 1])));
    }

    #[test]
    fn exact_quotient() {
        let (q, r) = div_rem(&d(&[-1, 0, 0, 1]), &d(&[-1, 1]));
        assert_eq!(q, d(&[1, 1, 1]));
        assert!(r.is_empty());
    }
}
