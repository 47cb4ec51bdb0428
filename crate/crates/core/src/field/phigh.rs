//! Detecting `p0`-high elements: the `±monomial` shape test, an independent
//! `r`-th root oracle, and the shape test for formal `t`-powers.

use num_rational::{BigRational, Ratio};

use super::exponent::{exponent_box, Monomial};
use super::poly::Poly;
use super::tower::TowerPresentation;
use super::{FieldError, K0Ctx, K0Elem};

/// True iff `e = ±m` for a monomial `m` with arbitrary fractional exponents.
pub fn is_p0_high_form(e: &K0Elem) -> Result<bool, FieldError> {
    if e.is_zero() {
        return Err(FieldError::ZeroElement);
    }
    let s = e.ctx().scalars();
    Ok(e.as_scaled_monomial().is_some_and(|(c, _)| s.is_one(&c) || s.is_minus_one(&c)))
}

/// Some `x ∈ K0` with `x^r = e`, or `None` if there is none.
///
/// Writes `e = num / den` and looks for a polynomial `y` with
/// `y^r = num · den^(r-1)`; then `x = y / den`. The polynomial root is built
/// term by term from the leading term down and abandoned as soon as a term
/// fails to decrease or leaves the exponent box `[min/r, max/r]` of the
/// radicand's support.
pub fn p_root_oracle(e: &K0Elem, r: u64) -> Result<Option<K0Elem>, FieldError> {
    assert!(r >= 1, "root index must be positive");
    if e.is_zero() {
        return Err(FieldError::ZeroElement);
    }
    let ctx = e.ctx();
    let ch = ctx.characteristic();
    if ch != 0 && r.is_multiple_of(ch) {
        return Err(FieldError::RootOfCharacteristic(ch));
    }
    let s = ctx.scalars();
    let radicand = e.numerator().mul(&e.denominator().pow(r as u32 - 1, s), s);
    Ok(poly_root(&radicand, r, ctx)
        .map(|y| K0Elem::from_parts(ctx, y, e.denominator().clone()).expect("denominator is nonzero")))
}

fn poly_root(p: &Poly, r: u64, ctx: K0Ctx) -> Option<Poly> {
    let (s, p0) = (ctx.scalars(), ctx.p0());
    let ri = r as i64;
    let (m0, c0) = p.leading()?;
    let lead_m = m0.root(ri, p0)?;
    let lead_c = s.root(c0, r)?;
    // r · lead^(r-1), the divisor producing each next term
    let div_m = lead_m.pow(ri - 1);
    let div_c = (1..r).fold(s.from_i64(ri), |acc, _| s.mul(&acc, &lead_c));
    let support: Vec<&Monomial> = p.terms().map(|(m, _)| m).collect();
    let bounds = exponent_box(&support);
    let in_box = |m: &Monomial| {
        m.exponents().iter().all(|&(v, _)| bounds.iter().any(|&(w, _, _)| w == v))
            && bounds.iter().all(|&(v, lo, hi)| {
                let scaled = m.exponent(v).value() * Ratio::from(ri);
                lo <= scaled && scaled <= hi
            })
    };
    let mut x = Poly::term(lead_m.clone(), lead_c);
    let mut last = lead_m;
    loop {
        let rem = p.sub(&x.pow(r as u32, s), s);
        let Some((rm, rc)) = rem.leading() else {
            return Some(x);
        };
        let next_m = rm.div(&div_m);
        if next_m >= last || !in_box(&next_m) {
            return None;
        }
        let next_c = s.div(rc, &div_c)?;
        x = x.add(&Poly::term(next_m.clone(), next_c), s);
        last = next_m;
    }
}

/// Whether `levels` successive `p0`-th roots of `e` exist in `K0`.
pub fn iterated_root_oracle(e: &K0Elem, levels: u32) -> Result<bool, FieldError> {
    let p0 = e.ctx().p0();
    let mut cur = e.clone();
    for _ in 0..levels {
        match p_root_oracle(&cur, p0)? {
            Some(x) => cur = x,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Classifier verdict and oracle verdict (one and two successive `p0`-th
/// roots) for a nonzero element.
pub fn classifier_oracle_pair(e: &K0Elem) -> Result<(bool, bool), FieldError> {
    let classified = is_p0_high_form(e)?;
    let oracle = iterated_root_oracle(e, 1)? && iterated_root_oracle(e, 2)?;
    Ok((classified, oracle))
}

/// Monomials, binomials, scaled monomials, constants and products, for
/// checking the classifier against the oracle in characteristic 0.
///
/// Elements with two or more nested `p0`-th roots that are not `±monomials`,
/// such as `(v0 + v1)^9`, are left out: two roots cannot tell them apart.
pub fn stress_set(ctx: K0Ctx) -> Vec<K0Elem> {
    let v = |i| K0Elem::var(ctx, i);
    let vp = |i, m, l| K0Elem::var_pow(ctx, i, m, l);
    let int = |k| K0Elem::integer(ctx, k);
    let inv = |e: K0Elem| e.inv().expect("stress elements are nonzero");
    let pw = |e: &K0Elem, k| e.pow(k).expect("stress elements are nonzero");
    let b01 = v(0) + v(1);
    let cube = pw(&b01, 3);
    vec![
        int(1),
        int(-1),
        v(0),
        -v(1),
        inv(v(2)),
        vp(0, 1, 1),
        vp(0, 2, 2) * inv(v(1)),
        -(vp(1, -4, 3) * v(2)),
        v(0) * v(1) * inv(vp(2, 1, 2)),
        pw(&(v(0) * vp(1, 1, 1)), -2),
        b01.clone(),
        v(0) - v(1),
        pw(&v(0), 2) + v(1),
        vp(0, 1, 1) + vp(1, 1, 1),
        int(2) * v(0),
        int(-3) * vp(1, 1, 1),
        int(8),
        int(8) * pw(&v(0), 3),
        int(27) * inv(v(3)),
        K0Elem::constant(ctx, &BigRational::new(1.into(), 27.into())).expect("nonzero denominator"),
        cube.clone(),
        cube.clone() * inv(v(1)),
        cube.clone() * vp(2, 1, 1),
        v(0) * inv(b01.clone()),
        inv(b01.clone()),
        b01.clone() * inv(b01.clone()),
        (pw(&v(0), 2) + v(0) * v(1)) * inv(b01.clone()),
        int(-1) * pw(&b01, 3) * inv(pw(&b01, 3)),
        pw(&(v(0) - int(2) * v(2)), 3) * inv(pw(&(v(1) + int(1)), 3)),
    ]
}

/// A formal term `c · t_level^exponent` above `K0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TTerm {
    pub coefficient: BigRational,
    pub level: usize,
    pub exponent: Ratio<i64>,
}

/// `±t_k^(m / p^l)` with `p = p_{k+1}` and `l` within the materialized root
/// depth of `tower`.
pub fn is_t_high_form(term: &TTerm, tower: &TowerPresentation) -> bool {
    let s = tower.ctx().scalars();
    let Some(c) = s.reduce(&term.coefficient) else {
        return false;
    };
    if term.level >= tower.depth() || !(s.is_one(&c) || s.is_minus_one(&c)) {
        return false;
    }
    let p = tower.level(term.level).prime as i64;
    let mut d = *term.exponent.denom();
    let mut l = 0;
    while d % p == 0 {
        d /= p;
        l += 1;
    }
    d == 1 && l <= tower.root_depth()
}
