//! Exact numbers `(a + b√d) / c` in a real quadratic field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadNum {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl QuadNum {
    /// `(a + b√d) / c`. `d` must be a positive non-square when `b ≠ 0`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> QuadNum {
        assert!(!c.is_zero(), "zero denominator");
        let mut q = QuadNum { a, b, c, d };
        q.normalize();
        q
    }

    pub fn rational(num: i128, den: i128) -> QuadNum {
        QuadNum::new(num.into(), BigInt::zero(), den.into(), BigInt::zero())
    }

    pub fn integer(n: i128) -> QuadNum {
        QuadNum::rational(n, 1)
    }

    fn normalize(&mut self) {
        if self.b.is_zero() {
            self.d = BigInt::zero();
        }
        if self.c.is_negative() {
            self.a = -&self.a;
            self.b = -&self.b;
            self.c = -&self.c;
        }
        let g = self.a.gcd(&self.b).gcd(&self.c);
        if !g.is_zero() && !g.is_one() {
            self.a /= &g;
            self.b /= &g;
            self.c /= &g;
        }
    }

    fn radicand(&self, o: &QuadNum) -> BigInt {
        match (self.b.is_zero(), o.b.is_zero()) {
            (true, _) => o.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, o.d, "mixing quadratic fields");
                self.d.clone()
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn add(&self, o: &QuadNum) -> QuadNum {
        let d = self.radicand(o);
        QuadNum::new(
            &self.a * &o.c + &o.a * &self.c,
            &self.b * &o.c + &o.b * &self.c,
            &self.c * &o.c,
            d,
        )
    }

    pub fn neg(&self) -> QuadNum {
        QuadNum { a: -&self.a, b: -&self.b, c: self.c.clone(), d: self.d.clone() }
    }

    pub fn sub(&self, o: &QuadNum) -> QuadNum {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QuadNum) -> QuadNum {
        let d = self.radicand(o);
        QuadNum::new(
            &self.a * &o.a + &self.b * &o.b * &d,
            &self.a * &o.b + &self.b * &o.a,
            &self.c * &o.c,
            d,
        )
    }

    /// Division; panics on a zero divisor.
    pub fn div(&self, o: &QuadNum) -> QuadNum {
        assert!(o.signum() != 0, "division by zero");
        let d = self.radicand(o);
        // multiply by the conjugate of o's numerator
        let norm = &o.a * &o.a - &o.b * &o.b * &d;
        let conj = QuadNum::new(o.a.clone(), -&o.b, BigInt::one(), d.clone());
        let num = self.mul(&conj);
        QuadNum::new(num.a * &o.c, num.b * &o.c, num.c * norm, d)
    }

    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        match (&self.a * &self.a).cmp(&(&self.b * &self.b * &self.d)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> QuadNum {
        if self.signum() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn floor(&self) -> BigInt {
        // t = b√d lies in (k, k+1) when irrational
        let k = if self.b.is_zero() {
            BigInt::zero()
        } else {
            let sq = &self.b * &self.b * &self.d;
            let r = sq.sqrt();
            if &r * &r == sq {
                if self.b.is_negative() {
                    -r
                } else {
                    r
                }
            } else if self.b.is_negative() {
                -r - 1
            } else {
                r
            }
        };
        (&self.a + k).div_floor(&self.c)
    }

    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    pub fn to_f64(&self) -> f64 {
        let f = |x: &BigInt| x.to_string().parse::<f64>().unwrap_or(f64::NAN);
        (f(&self.a) + f(&self.b) * f(&self.d).sqrt()) / f(&self.c)
    }
}

fn sign(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, o: &Self) -> Ordering {
        self.sub(o).signum().cmp(&0)
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}/{}", self.a, self.c)
        } else {
            write!(f, "({} + {}√{})/{}", self.a, self.b, self.d, self.c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> QuadNum {
        QuadNum::new(1.into(), 1.into(), 2.into(), 5.into())
    }

    #[test]
    fn golden_ratio_arithmetic() {
        let phi = golden();
        // φ² = φ + 1
        assert_eq!(phi.mul(&phi), phi.add(&QuadNum::integer(1)));
        assert_eq!(phi.floor(), 1.into());
        assert_eq!(phi.ceil(), 2.into());
        assert_eq!(phi.neg().floor(), (-2).into());
        assert!((phi.to_f64() - 1.618_033_988_75).abs() < 1e-9);
        assert_eq!(QuadNum::integer(1).div(&phi), phi.sub(&QuadNum::integer(1)));
    }

    #[test]
    fn sign_of_near_cancellation() {
        // 99 − 70√2 ≈ 0.00505
        let x = QuadNum::new(99.into(), (-70).into(), 1.into(), 2.into());
        assert_eq!(x.signum(), 1);
        assert_eq!(x.floor(), 0.into());
        assert_eq!(x.ceil(), 1.into());
        assert_eq!(x.neg().signum(), -1);
    }

    #[test]
    fn rational_floor() {
        assert_eq!(QuadNum::rational(-7, 2).floor(), (-4).into());
        assert_eq!(QuadNum::rational(7, 2).ceil(), 4.into());
        assert_eq!(QuadNum::rational(6, 2).ceil(), 3.into());
    }
}
