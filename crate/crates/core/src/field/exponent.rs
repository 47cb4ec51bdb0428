//! Fractional exponents `m / p^l` and Laurent monomials over them.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

/// `m / p^l` for a fixed prime `p`, stored as a reduced rational.
///
/// Exponent arithmetic is checked only by `i64` overflow of the underlying
/// rational; depths stay far below that range for every supported use.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FracExponent(Ratio<i64>);

fn is_power_of(mut d: i64, p: i64) -> Option<u32> {
    let mut l = 0;
    while d > 1 {
        if d % p != 0 {
            return None;
        }
        d /= p;
        l += 1;
    }
    Some(l)
}

impl FracExponent {
    pub const ZERO: FracExponent = FracExponent(Ratio::new_raw(0, 1));
    pub const ONE: FracExponent = FracExponent(Ratio::new_raw(1, 1));

    pub fn integer(m: i64) -> Self {
        FracExponent(Ratio::from_integer(m))
    }

    /// `m / p^l`, reduced.
    pub fn new(m: i64, l: u32, p: u64) -> Self {
        FracExponent(Ratio::new(m, (p as i64).pow(l)))
    }

    /// Accepts `r` only when its reduced denominator is a power of `p`.
    pub fn from_ratio(r: Ratio<i64>, p: u64) -> Option<Self> {
        is_power_of(*r.denom(), p as i64).map(|_| FracExponent(r))
    }

    pub fn value(self) -> Ratio<i64> {
        self.0
    }

    /// Numerator `m` of the reduced form `m / p^l`.
    pub fn numerator(self) -> i64 {
        *self.0.numer()
    }

    /// Depth `l` of the reduced form `m / p^l`.
    pub fn depth(self, p: u64) -> u32 {
        is_power_of(*self.0.denom(), p as i64).expect("denominator is a power of p")
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(self) -> bool {
        self.0.is_integer()
    }

    pub fn mul_int(self, k: i64) -> Self {
        FracExponent(self.0 * k)
    }

    /// `self / r`, if the quotient keeps a `p`-power denominator.
    pub fn div_int(self, r: i64, p: u64) -> Option<Self> {
        FracExponent::from_ratio(self.0 / r, p)
    }
}

impl std::ops::Add for FracExponent {
    type Output = FracExponent;
    fn add(self, rhs: Self) -> Self {
        FracExponent(self.0 + rhs.0)
    }
}

impl std::ops::Sub for FracExponent {
    type Output = FracExponent;
    fn sub(self, rhs: Self) -> Self {
        FracExponent(self.0 - rhs.0)
    }
}

impl std::ops::Neg for FracExponent {
    type Output = FracExponent;
    fn neg(self) -> Self {
        FracExponent(-self.0)
    }
}

impl fmt::Debug for FracExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Variable index of a vertex variable `v_i`.
pub type Var = u32;

/// A Laurent monomial `∏ v_i^{e_i}`: sorted by variable, zero exponents omitted.
///
/// Ordered lexicographically with `v0 > v1 > ...`: the first variable whose
/// exponents differ decides, the larger exponent being the larger monomial.
/// The order is compatible with multiplication, so leading terms multiply.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, FracExponent)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, FracExponent::ONE)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, FracExponent)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial(if e.is_zero() { vec![] } else { vec![(v, e)] }));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, FracExponent)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> FracExponent {
        self.0.binary_search_by_key(&v, |&(w, _)| w).map_or(FracExponent::ZERO, |i| self.0[i].1)
    }

    /// The single variable `v` if this monomial is exactly `v^1`.
    pub fn as_variable(&self) -> Option<Var> {
        match self.0.as_slice() {
            [(v, e)] if *e == FracExponent::ONE => Some(*v),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let a = self.0.get(i);
            let b = other.0.get(j);
            match (a, b) {
                (Some(&(va, ea)), Some(&(vb, eb))) if va == vb => {
                    let e = ea + eb;
                    if !e.is_zero() {
                        out.push((va, e));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(&x), Some(&(vb, _))) if x.0 < vb => {
                    out.push(x);
                    i += 1;
                }
                (Some(&x), None) => {
                    out.push(x);
                    i += 1;
                }
                (_, Some(&y)) => {
                    out.push(y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e.mul_int(k))).collect())
    }

    /// `self^(1/r)`, if every exponent keeps a `p`-power denominator.
    pub fn root(&self, r: i64, p: u64) -> Option<Monomial> {
        self.0.iter().map(|&(v, e)| e.div_int(r, p).map(|e| (v, e))).collect::<Option<Vec<_>>>().map(Monomial)
    }

    /// Substitutes `v -> f(v)`; exponents of variables that collide are added.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let sign = |e: FracExponent| e.cmp(&FracExponent::ZERO);
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return sign(ea),
                (None, Some(&(_, eb))) => return sign(eb).reverse(),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return sign(ea),
                    Ordering::Greater => return sign(eb).reverse(),
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Writes `v0^(2/3^2)*v1^(-1)`; `1` for the empty monomial.
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, p: u64) -> fmt::Result {
    if m.is_one() {
        return f.write_str("1");
    }
    for (k, &(v, e)) in m.0.iter().enumerate() {
        if k > 0 {
            f.write_str("*")?;
        }
        write!(f, "v{v}")?;
        if e == FracExponent::ONE {
            continue;
        }
        let l = e.depth(p);
        if l == 0 {
            write!(f, "^({})", e.numerator())?;
        } else {
            write!(f, "^({}/{}^{})", e.numerator(), p, l)?;
        }
    }
    Ok(())
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|(v, e)| format!("v{v}^{e:?}")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Smallest and largest exponent of each listed variable across `monomials`,
/// counting an absent variable as exponent 0.
pub(crate) fn exponent_box(monomials: &[&Monomial]) -> Vec<(Var, Ratio<i64>, Ratio<i64>)> {
    let mut vars: Vec<Var> = monomials.iter().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
    vars.sort_unstable();
    vars.dedup();
    vars.into_iter()
        .map(|v| {
            let mut es = monomials.iter().map(|m| m.exponent(v).value());
            let first = es.next().unwrap_or_default();
            let (lo, hi) = es.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e)));
            (v, lo, hi)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(m: i64, l: u32) -> FracExponent {
        FracExponent::new(m, l, 3)
    }

    #[test]
    fn exponent_reduction_and_depth() {
        assert_eq!(e(3, 1), FracExponent::ONE);
        assert_eq!(e(6, 2).depth(3), 1);
        assert_eq!(e(6, 2).numerator(), 2);
        assert_eq!(e(1, 1).div_int(3, 3), Some(e(1, 2)));
        assert_eq!(e(1, 1).div_int(5, 3), None);
        assert_eq!(FracExponent::from_ratio(Ratio::new(1, 6), 3), None);
    }

    #[test]
    fn monomial_multiplication_cancels() {
        let a = Monomial::from_pairs([(0, e(1, 1)), (2, e(-1, 0))]);
        let b = Monomial::from_pairs([(0, e(2, 1)), (1, e(1, 0)), (2, e(1, 0))]);
        let c = a.mul(&b);
        assert_eq!(c, Monomial::from_pairs([(0, e(1, 0)), (1, e(1, 0))]));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(Monomial::var(0).pow(3).root(3, 3), Some(Monomial::var(0)));
    }

    #[test]
    fn lex_order() {
        let v0 = Monomial::var(0);
        let v1 = Monomial::var(1);
        assert!(v0 > v1);
        assert!(v1 > Monomial::one());
        assert!(Monomial::one() > v1.inv());
        assert!(v0.mul(&v1.inv()) > v1.pow(5));
        assert!(v0.pow(2) > v0.mul(&v1));
        // compatible with multiplication
        let w = Monomial::from_pairs([(1, e(-2, 1)), (3, e(4, 0))]);
        assert!(v0.mul(&w) > v1.mul(&w));
    }

    #[test]
    fn exponent_box_counts_missing_as_zero() {
        let a = Monomial::from_pairs([(0, e(3, 0))]);
        let b = Monomial::from_pairs([(1, e(-1, 0))]);
        let bx = exponent_box(&[&a, &b]);
        assert_eq!(bx, vec![(0, Ratio::zero(), Ratio::from(3)), (1, Ratio::from(-1), Ratio::zero())]);
    }
}
