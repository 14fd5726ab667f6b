use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact scalar `a + b t` with rational `a, b` and `t^2 = q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TCoeff {
    q: u32,
    a: BigRational,
    b: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TCoeff {
    pub fn new(q: u32, a: BigRational, b: BigRational) -> Self {
        TCoeff { q, a, b }
    }

    pub fn zero(q: u32) -> Self {
        TCoeff::new(q, BigRational::zero(), BigRational::zero())
    }

    pub fn one(q: u32) -> Self {
        TCoeff::from_int(q, 1)
    }

    pub fn from_int(q: u32, n: i64) -> Self {
        TCoeff::new(q, rat(n), BigRational::zero())
    }

    pub fn from_ratio(q: u32, num: i64, den: i64) -> Self {
        TCoeff::new(
            q,
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// The generator `t` itself.
    pub fn t(q: u32) -> Self {
        TCoeff::new(q, BigRational::zero(), rat(1))
    }

    /// `t^k` for any integer `k`.
    pub fn tpow(q: u32, k: i64) -> Self {
        let m = k.div_euclid(2);
        let odd = k.rem_euclid(2) == 1;
        let qm = if m >= 0 {
            BigRational::from_integer(BigInt::from(q).pow(m as u32))
        } else {
            BigRational::new(BigInt::one(), BigInt::from(q).pow((-m) as u32))
        };
        if odd {
            TCoeff::new(q, BigRational::zero(), qm)
        } else {
            TCoeff::new(q, qm, BigRational::zero())
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn a(&self) -> &BigRational {
        &self.a
    }
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Field norm `a^2 - q b^2`; nonzero for nonzero elements since `q` is prime.
    fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * rat(self.q as i64)
    }

    pub fn inverse(&self) -> Result<TCoeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(TCoeff::new(self.q, &self.a / &n, -(&self.b / &n)))
    }

    pub fn checked_div(&self, other: &TCoeff) -> Result<TCoeff> {
        Ok(self * &other.inverse()?)
    }

    pub fn scale_rational(&self, r: &BigRational) -> TCoeff {
        TCoeff::new(self.q, &self.a * r, &self.b * r)
    }

    fn check_q(&self, other: &TCoeff) {
        assert_eq!(self.q, other.q, "mixing coefficient rings for different q");
    }
}

impl<'a> Add<&'a TCoeff> for &'a TCoeff {
    type Output = TCoeff;
    fn add(self, o: &TCoeff) -> TCoeff {
        self.check_q(o);
        TCoeff::new(self.q, &self.a + &o.a, &self.b + &o.b)
    }
}

impl Add for TCoeff {
    type Output = TCoeff;
    fn add(self, o: TCoeff) -> TCoeff {
        &self + &o
    }
}

impl AddAssign<&TCoeff> for TCoeff {
    fn add_assign(&mut self, o: &TCoeff) {
        self.check_q(o);
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl<'a> Sub<&'a TCoeff> for &'a TCoeff {
    type Output = TCoeff;
    fn sub(self, o: &TCoeff) -> TCoeff {
        self.check_q(o);
        TCoeff::new(self.q, &self.a - &o.a, &self.b - &o.b)
    }
}

impl Sub for TCoeff {
    type Output = TCoeff;
    fn sub(self, o: TCoeff) -> TCoeff {
        &self - &o
    }
}

impl<'a> Mul<&'a TCoeff> for &'a TCoeff {
    type Output = TCoeff;
    // (a + bt)(c + dt) = (ac + bdq) + (ad + bc)t
    fn mul(self, o: &TCoeff) -> TCoeff {
        self.check_q(o);
        let q = rat(self.q as i64);
        TCoeff::new(
            self.q,
            &self.a * &o.a + &self.b * &o.b * q,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Mul for TCoeff {
    type Output = TCoeff;
    fn mul(self, o: TCoeff) -> TCoeff {
        &self * &o
    }
}

impl Neg for TCoeff {
    type Output = TCoeff;
    fn neg(self) -> TCoeff {
        TCoeff::new(self.q, -self.a, -self.b)
    }
}

impl Neg for &TCoeff {
    type Output = TCoeff;
    fn neg(self) -> TCoeff {
        TCoeff::new(self.q, -self.a.clone(), -self.b.clone())
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for TCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rat(&self.a)),
            (true, false) => write!(f, "{}t", fmt_rat(&self.b)),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}t", fmt_rat(&self.a), fmt_rat(&-self.b.clone()))
                } else {
                    write!(f, "{} + {}t", fmt_rat(&self.a), fmt_rat(&self.b))
                }
            }
        }
    }
}

impl fmt::Debug for TCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (q={})", self, self.q)
    }
}

fn int_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

impl Serialize for TCoeff {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TCoeff", 4)?;
        st.serialize_field("a_num", &int_json(self.a.numer()))?;
        st.serialize_field("a_den", &int_json(self.a.denom()))?;
        st.serialize_field("b_num", &int_json(self.b.numer()))?;
        st.serialize_field("b_den", &int_json(self.b.denom()))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let one = TCoeff::one(2);
        let t = TCoeff::t(2);
        let x = &one + &t;
        let y = &one - &t;
        assert_eq!(&x * &y, TCoeff::from_int(2, -1));
    }

    #[test]
    fn t_squared_is_q() {
        let t = TCoeff::t(3);
        assert_eq!(&t * &t, TCoeff::from_int(3, 3));
    }

    #[test]
    fn tpow_examples() {
        assert!(TCoeff::tpow(5, 0).is_one());
        assert_eq!(
            TCoeff::tpow(2, -1),
            TCoeff::t(2).scale_rational(&BigRational::new(1.into(), 2.into()))
        );
        assert_eq!(TCoeff::tpow(3, 4), TCoeff::from_int(3, 9));
    }

    #[test]
    fn division_by_zero() {
        let x = TCoeff::from_int(3, 4);
        assert_eq!(x.checked_div(&TCoeff::zero(3)), Err(Error::DivisionByZero));
        let y = &TCoeff::from_int(3, 2) + &TCoeff::t(3);
        let z = x.checked_div(&y).unwrap();
        assert_eq!(&z * &y, x);
    }

    #[test]
    fn multiplicative_identity() {
        let x = &TCoeff::from_ratio(7, 3, 5) + &TCoeff::tpow(7, 3);
        assert_eq!(&x * &TCoeff::one(7), x);
    }

    fn arb_coeff(q: u32) -> impl Strategy<Value = TCoeff> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(move |(an, ad, bn, bd)| {
            TCoeff::new(
                q,
                BigRational::new(an.into(), ad.into()),
                BigRational::new(bn.into(), bd.into()),
            )
        })
    }

    proptest! {
        #[test]
        fn tpow_is_a_homomorphism(j in -6i64..=6, k in -6i64..=6, q in prop::sample::select(vec![2u32, 3, 5, 7, 11, 13])) {
            prop_assert_eq!(&TCoeff::tpow(q, j) * &TCoeff::tpow(q, k), TCoeff::tpow(q, j + k));
        }

        #[test]
        fn no_zero_divisors(x in arb_coeff(3), y in arb_coeff(3)) {
            let p = &x * &y;
            prop_assert_eq!(p.is_zero(), x.is_zero() || y.is_zero());
        }

        #[test]
        fn ring_axioms(x in arb_coeff(2), y in arb_coeff(2), z in arb_coeff(2)) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert!((&x * &x.inverse().unwrap()).is_one());
            }
        }
    }
}
