//! Coefficient arithmetic over `Q` or `F_p`, and sparse Laurent polynomials
//! with fractional exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::exponent::{write_monomial, Monomial, Var};

/// The prime field `Q` (characteristic 0) or `F_p`.
///
/// Every coefficient is a `BigRational`; in characteristic `p` it is kept as
/// an integer in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalars {
    characteristic: u64,
}

impl Scalars {
    /// `characteristic` must be 0 or a prime; callers validate.
    pub(crate) fn new(characteristic: u64) -> Self {
        Scalars { characteristic }
    }

    pub fn characteristic(self) -> u64 {
        self.characteristic
    }

    fn modulus(self) -> BigInt {
        BigInt::from(self.characteristic)
    }

    /// Canonical representative; `None` when a denominator vanishes mod `p`.
    pub fn reduce(self, c: &BigRational) -> Option<BigRational> {
        if self.characteristic == 0 {
            return Some(c.clone());
        }
        let p = self.modulus();
        let d = c.denom().mod_floor(&p);
        if d.is_zero() {
            return None;
        }
        let inv_d = d.modpow(&(&p - 2u32), &p);
        Some(BigRational::from_integer((c.numer() * inv_d).mod_floor(&p)))
    }

    fn fix(self, c: BigRational) -> BigRational {
        if self.characteristic == 0 {
            c
        } else {
            BigRational::from_integer(c.to_integer().mod_floor(&self.modulus()))
        }
    }

    pub fn from_i64(self, k: i64) -> BigRational {
        self.fix(BigRational::from_integer(k.into()))
    }

    pub fn add(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.fix(a + b)
    }

    pub fn sub(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.fix(a - b)
    }

    pub fn mul(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.fix(a * b)
    }

    pub fn neg(self, a: &BigRational) -> BigRational {
        self.fix(-a)
    }

    pub fn inv(self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            return None;
        }
        if self.characteristic == 0 {
            return Some(a.recip());
        }
        let p = self.modulus();
        Some(BigRational::from_integer(a.to_integer().modpow(&(&p - 2u32), &p)))
    }

    pub fn div(self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    pub fn is_one(self, a: &BigRational) -> bool {
        a.is_one()
    }

    pub fn is_minus_one(self, a: &BigRational) -> bool {
        *a == self.neg(&BigRational::one())
    }

    /// Some `x` with `x^r = a`, if one exists in the prime field.
    pub fn root(self, a: &BigRational, r: u64) -> Option<BigRational> {
        if a.is_zero() {
            return Some(a.clone());
        }
        if self.characteristic == 0 {
            let ri = u32::try_from(r).ok()?;
            let negative = a.is_negative();
            if negative && r.is_multiple_of(2) {
                return None;
            }
            let int_root = |n: &BigInt| {
                let x = n.abs().nth_root(ri);
                (x.pow(ri) == n.abs()).then_some(x)
            };
            let x = BigRational::new(int_root(a.numer())?, int_root(a.denom())?);
            return Some(if negative { -x } else { x });
        }
        let p = self.characteristic;
        let a_int = a.to_integer().to_u64().expect("reduced coefficient fits in u64");
        let pow_mod = |b: u64, e: u64| BigInt::from(b).modpow(&BigInt::from(e), &BigInt::from(p)).to_u64().unwrap();
        if (p - 1).gcd(&r) == 1 {
            let e = BigInt::from(r).modinv(&BigInt::from(p - 1)).expect("r invertible mod p-1");
            return Some(BigRational::from_integer(BigInt::from(a_int).modpow(&e, &BigInt::from(p))));
        }
        (1..p).find(|&x| pow_mod(x, r) == a_int).map(|x| BigRational::from_integer(x.into()))
    }

    /// Writes a coefficient; in characteristic 0 only its absolute value.
    fn write_abs(self, f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
        if c.is_integer() {
            write!(f, "{}", c.numer().abs())
        } else {
            write!(f, "{}/{}", c.numer().abs(), c.denom())
        }
    }

    fn is_negative(self, c: &BigRational) -> bool {
        self.characteristic == 0 && c.numer().sign() == Sign::Minus
    }
}

/// A finite sum of terms `c · m`, zero coefficients omitted.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(BTreeMap<Monomial, BigRational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    /// `c · m`, with `c` already reduced.
    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut out = Poly::zero();
        if !c.is_zero() {
            out.0.insert(m, c);
        }
        out
    }

    pub fn one() -> Self {
        Poly::term(Monomial::one(), BigRational::one())
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Monomial::var(v), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.first_key_value().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.0.iter()
    }

    /// Greatest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.0.last_key_value()
    }

    /// The only term, if there is exactly one.
    pub fn as_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.0.len() == 1 {
            self.0.first_key_value()
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: &BigRational, s: Scalars) {
        let entry = self.0.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = s.add(o.get(), c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly, s: Scalars) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.0 {
            out.add_term(m.clone(), c, s);
        }
        out
    }

    pub fn neg(&self, s: Scalars) -> Poly {
        Poly(self.0.iter().map(|(m, c)| (m.clone(), s.neg(c))).collect())
    }

    pub fn sub(&self, other: &Poly, s: Scalars) -> Poly {
        self.add(&other.neg(s), s)
    }

    /// `self · c · m`; `c` must be nonzero.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational, s: Scalars) -> Poly {
        Poly(self.0.iter().map(|(n, d)| (n.mul(m), s.mul(d, c))).collect())
    }

    pub fn mul(&self, other: &Poly, s: Scalars) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.0 {
            for (n, d) in &other.0 {
                out.add_term(m.mul(n), &s.mul(c, d), s);
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32, s: Scalars) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, s);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, s);
            }
        }
        acc
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var + Copy, s: Scalars) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.0 {
            out.add_term(m.rename(f), c, s);
        }
        out
    }

    /// Sum in decreasing monomial order, e.g. `v0^(2) - 3*v1 + 1`.
    pub(crate) fn write(&self, f: &mut fmt::Formatter<'_>, s: Scalars, p0: u64) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.0.iter().rev().enumerate() {
            let negative = s.is_negative(c);
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = c.abs().is_one();
            if m.is_one() {
                s.write_abs(f, c)?;
            } else {
                if !unit {
                    s.write_abs(f, c)?;
                    f.write_str("*")?;
                }
                write_monomial(f, m, p0)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().rev().map(|(m, c)| format!("{c}*{m:?}")).collect();
        write!(f, "[{}]", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = Scalars::new(7);
        assert_eq!(f7.reduce(&q(1, 2)), Some(q(4, 1)));
        assert_eq!(f7.reduce(&q(1, 7)), None);
        assert_eq!(f7.from_i64(-1), q(6, 1));
        assert!(f7.is_minus_one(&q(6, 1)));
        assert_eq!(f7.inv(&q(3, 1)), Some(q(5, 1)));
    }

    #[test]
    fn coefficient_roots() {
        let qq = Scalars::new(0);
        assert_eq!(qq.root(&q(-8, 27), 3), Some(q(-2, 3)));
        assert_eq!(qq.root(&q(2, 1), 3), None);
        // in F_7 the cubes are 0, 1, 6
        let f7 = Scalars::new(7);
        assert_eq!(f7.root(&q(6, 1), 3).map(|x| f7.mul(&f7.mul(&x, &x), &x)), Some(q(6, 1)));
        assert_eq!(f7.root(&q(2, 1), 3), None);
        // in F_5 cubing is a bijection
        let f5 = Scalars::new(5);
        for a in 1..5 {
            let x = f5.root(&q(a, 1), 3).unwrap();
            assert_eq!(f5.mul(&f5.mul(&x, &x), &x), q(a, 1));
        }
    }

    #[test]
    fn polynomial_identities() {
        let s = Scalars::new(0);
        let (v0, v1) = (Poly::var(0), Poly::var(1));
        let lhs = v0.add(&v1, s).mul(&v0.sub(&v1, s), s);
        let rhs = v0.pow(2, s).sub(&v1.pow(2, s), s);
        assert_eq!(lhs, rhs);
        assert!(v0.sub(&v0, s).is_zero());
        assert_eq!(v0.add(&v1, s).leading().unwrap().0, &Monomial::var(0));
    }
}
