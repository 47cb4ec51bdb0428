//! Elements of `K0` as fractions `num / den` of polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::exponent::{FracExponent, Monomial, Var};
use super::poly::Poly;
use super::{FieldError, K0Ctx};

/// An element `num / den` of `K0`.
///
/// Normal form: zero is `0 / 1`; the leading term of `den` is `1`; a fraction
/// whose numerator is a term multiple of its denominator is stored with
/// denominator `1`. Fractions are not reduced by polynomial gcd, so equality
/// is decided by cross-multiplication.
#[derive(Clone)]
pub struct K0Elem {
    ctx: K0Ctx,
    num: Poly,
    den: Poly,
}

impl K0Elem {
    fn normalized(ctx: K0Ctx, num: Poly, den: Poly) -> K0Elem {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return K0Elem::zero(ctx);
        }
        let s = ctx.scalars();
        let (lm, lc) = den.leading().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero denominator");
        let (mi, ci) = (lm.inv(), s.inv(&lc).expect("leading coefficient is nonzero"));
        let num = num.mul_term(&mi, &ci, s);
        let den = den.mul_term(&mi, &ci, s);
        if den.is_one() {
            return K0Elem { ctx, num, den };
        }
        let (nm, nc) = num.leading().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero numerator");
        if num == den.mul_term(&nm, &nc, s) {
            return K0Elem { ctx, num: Poly::term(nm, nc), den: Poly::one() };
        }
        K0Elem { ctx, num, den }
    }

    pub fn zero(ctx: K0Ctx) -> Self {
        K0Elem { ctx, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one(ctx: K0Ctx) -> Self {
        K0Elem { ctx, num: Poly::one(), den: Poly::one() }
    }

    pub fn var(ctx: K0Ctx, v: Var) -> Self {
        K0Elem { ctx, num: Poly::var(v), den: Poly::one() }
    }

    pub fn integer(ctx: K0Ctx, k: i64) -> Self {
        let c = ctx.scalars().from_i64(k);
        K0Elem { ctx, num: Poly::term(Monomial::one(), c), den: Poly::one() }
    }

    pub fn constant(ctx: K0Ctx, c: &BigRational) -> Result<Self, FieldError> {
        K0Elem::monomial(ctx, Monomial::one(), c)
    }

    /// `c · m`. Errors if `c` has a denominator divisible by the characteristic.
    pub fn monomial(ctx: K0Ctx, m: Monomial, c: &BigRational) -> Result<Self, FieldError> {
        let c = ctx.scalars().reduce(c).ok_or(FieldError::DivisionByZero)?;
        Ok(K0Elem { ctx, num: Poly::term(m, c), den: Poly::one() })
    }

    /// `v^(m / p0^l)`.
    pub fn var_pow(ctx: K0Ctx, v: Var, m: i64, l: u32) -> Self {
        let e = FracExponent::new(m, l, ctx.p0());
        K0Elem { ctx, num: Poly::term(Monomial::from_pairs([(v, e)]), BigRational::one()), den: Poly::one() }
    }

    /// `num / den` from polynomials built with this context's scalars.
    pub fn from_parts(ctx: K0Ctx, num: Poly, den: Poly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(K0Elem::normalized(ctx, num, den))
    }

    pub fn ctx(&self) -> K0Ctx {
        self.ctx
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn check_ctx(&self, other: &K0Elem) {
        assert_eq!(self.ctx, other.ctx, "elements of different fields");
    }

    pub fn add(&self, other: &K0Elem) -> K0Elem {
        self.check_ctx(other);
        let s = self.ctx.scalars();
        if self.den == other.den {
            return K0Elem::normalized(self.ctx, self.num.add(&other.num, s), self.den.clone());
        }
        let num = self.num.mul(&other.den, s).add(&other.num.mul(&self.den, s), s);
        K0Elem::normalized(self.ctx, num, self.den.mul(&other.den, s))
    }

    pub fn neg(&self) -> K0Elem {
        K0Elem { ctx: self.ctx, num: self.num.neg(self.ctx.scalars()), den: self.den.clone() }
    }

    pub fn sub(&self, other: &K0Elem) -> K0Elem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &K0Elem) -> K0Elem {
        self.check_ctx(other);
        let s = self.ctx.scalars();
        K0Elem::normalized(self.ctx, self.num.mul(&other.num, s), self.den.mul(&other.den, s))
    }

    pub fn inv(&self) -> Result<K0Elem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(K0Elem::normalized(self.ctx, self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &K0Elem) -> Result<K0Elem, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<K0Elem, FieldError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(k.unsigned_abs()).expect("exponent fits in u32");
        let s = self.ctx.scalars();
        Ok(K0Elem::normalized(self.ctx, base.num.pow(e, s), base.den.pow(e, s)))
    }

    /// Applies the substitution `v_i -> v_{f(i)}`; a ring homomorphism when
    /// `f` is injective on the variables present.
    pub fn rename_vars(&self, f: impl Fn(Var) -> Var + Copy) -> K0Elem {
        let s = self.ctx.scalars();
        K0Elem::normalized(self.ctx, self.num.rename(f, s), self.den.rename(f, s))
    }

    /// `(c, m)` with `self = c · m`, if `self` is a nonzero scaled monomial.
    pub fn as_scaled_monomial(&self) -> Option<(BigRational, Monomial)> {
        let s = self.ctx.scalars();
        let (nm, nc) = self.num.leading()?;
        let (dm, dc) = self.den.leading()?;
        let c = s.div(nc, dc)?;
        let m = nm.div(dm);
        (self.num == self.den.mul_term(&m, &c, s)).then_some((c, m))
    }

    /// The index `i` if `self = v_i`.
    pub fn as_variable(&self) -> Option<Var> {
        self.as_scaled_monomial().and_then(|(c, m)| if c.is_one() { m.as_variable() } else { None })
    }

    /// Every variable index occurring in numerator or denominator.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> =
            self.num.terms().chain(self.den.terms()).flat_map(|(m, _)| m.exponents().iter().map(|&(v, _)| v)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

impl PartialEq for K0Elem {
    fn eq(&self, other: &Self) -> bool {
        if self.ctx != other.ctx {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        let s = self.ctx.scalars();
        self.num.mul(&other.den, s) == other.num.mul(&self.den, s)
    }
}

impl Eq for K0Elem {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for &K0Elem {
            type Output = K0Elem;
            fn $method(self, rhs: &K0Elem) -> K0Elem {
                K0Elem::$method(self, rhs)
            }
        }
        impl $tr for K0Elem {
            type Output = K0Elem;
            fn $method(self, rhs: K0Elem) -> K0Elem {
                K0Elem::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &K0Elem {
    type Output = K0Elem;
    fn neg(self) -> K0Elem {
        K0Elem::neg(self)
    }
}

impl Neg for K0Elem {
    type Output = K0Elem;
    fn neg(self) -> K0Elem {
        K0Elem::neg(&self)
    }
}

impl fmt::Display for K0Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, p0) = (self.ctx.scalars(), self.ctx.p0());
        if self.den.is_one() {
            return self.num.write(f, s, p0);
        }
        f.write_str("(")?;
        self.num.write(f, s, p0)?;
        f.write_str(")/(")?;
        self.den.write(f, s, p0)?;
        f.write_str(")")
    }
}

impl fmt::Debug for K0Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0Elem({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> K0Ctx {
        K0Ctx::default()
    }

    fn v(i: Var) -> K0Elem {
        K0Elem::var(ctx(), i)
    }

    #[test]
    fn cube_roots_multiply_back() {
        let r = K0Elem::var_pow(ctx(), 0, 1, 1);
        assert_eq!(&(&r * &r) * &r, v(0));
        assert_eq!(format!("{r}"), "v0^(1/3^1)");
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (v(0) + v(1)) * (v(0) - v(1));
        let rhs = v(0).pow(2).unwrap() - v(1).pow(2).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(format!("{lhs}"), "v0^(2) - v1^(2)");
    }

    #[test]
    fn inverse_of_binomial() {
        let a = v(0) + v(1);
        let inv = a.inv().unwrap();
        assert_eq!(&inv * &a, K0Elem::one(ctx()));
        assert_eq!(format!("{inv}"), "(v0^(-1))/(1 + v0^(-1)*v1)");
        assert_eq!(K0Elem::zero(ctx()).inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn normalization_folds_term_multiples() {
        let s = ctx().scalars();
        let den = Poly::var(0).add(&Poly::var(1), s);
        let num = den.mul(&Poly::var(2), s);
        let e = K0Elem::from_parts(ctx(), num, den).unwrap();
        assert!(e.denominator().is_one());
        assert_eq!(e.as_variable(), Some(2));
        let z = K0Elem::from_parts(ctx(), Poly::zero(), Poly::var(3)).unwrap();
        assert!(z.denominator().is_one() && z.is_zero());
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = (v(0) + v(1)).inv().unwrap();
        let b = (v(0) * v(2) + v(1) * v(2)).inv().unwrap() * v(2);
        assert_eq!(a, b);
        assert_ne!(a, v(0).inv().unwrap());
    }

    #[test]
    fn characteristic_p_arithmetic() {
        let c5 = K0Ctx::new(5).unwrap();
        let x = K0Elem::var(c5, 0);
        let five_x = (0..5).fold(K0Elem::zero(c5), |acc, _| acc + x.clone());
        assert!(five_x.is_zero());
        let half = K0Elem::constant(c5, &BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(half.clone() + half, K0Elem::one(c5));
        assert_eq!(K0Elem::constant(c5, &BigRational::new(1.into(), 5.into())), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn renaming_is_multiplicative() {
        let a = v(0) + v(1).pow(2).unwrap();
        let b = (v(1) - v(2)).inv().unwrap();
        let f = |i: Var| [4, 2, 7][i as usize];
        assert_eq!((&a * &b).rename_vars(f), a.rename_vars(f) * b.rename_vars(f));
        assert_eq!((&a + &b).rename_vars(f), a.rename_vars(f) + b.rename_vars(f));
    }
}
