//! Exact rational scalars.
//!
//! All arithmetic in the workbench is exact; the scalar type is an
//! arbitrary-precision rational kept in lowest terms with a positive
//! denominator (maintained by `num-rational`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};


pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational p/q. Panics if q = 0.
pub fn rat_pq(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Scale a rational vector to a primitive integer vector (clears
/// denominators, divides by the gcd, and makes the first nonzero entry
/// positive). Returns `None` for the zero vector.
pub fn to_primitive_integers(v: &[Rat]) -> Option<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.clone());
    }
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
    }
    Some(ints)
}

/// Render a rational as `p` or `p/q`.
pub fn rat_display(x: &Rat) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form() {
        let x = rat_pq(4, 6);
        assert_eq!(x, rat_pq(2, 3));
        assert_eq!(rat_display(&x), "2/3");
        assert_eq!(rat_display(&rat(-5)), "-5");
    }

    #[test]
    fn primitive_integers() {
        let v = vec![rat_pq(1, 2), rat_pq(-3, 4), rat(0)];
        let ints = to_primitive_integers(&v).unwrap();
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
        assert!(to_primitive_integers(&[rat(0), rat(0)]).is_none());
        // sign normalization: first nonzero entry positive
        let w = to_primitive_integers(&[rat(-2), rat(4)]).unwrap();
        assert_eq!(w, vec![BigInt::from(1), BigInt::from(-2)]);
    }
}
