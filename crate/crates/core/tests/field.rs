use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qfw::field::{
    build_tower, classifier_oracle_pair, induced_hom, is_p0_high_form, p_root_oracle, recover_edge,
    recover_graph_from_hom, stress_set, FieldError, K0Ctx, K0Elem, Poly,
};
use qfw::graph::{random_ct_tree, Graph, GraphMap};
use qfw::workbench::{case_rng, random_k0_elem, random_sub_ct_tree};

/// Base points `c_v` for the substitution `v ↦ c_v^9`.
const POINT: [(i64, i64); 4] = [(2, 1), (-3, 2), (5, 3), (1, 2)];

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `p` at `v = c_v^9`, where `v^e ↦ c_v^(9e)` is exact for exponents in `(1/9)ℤ`.
fn eval_poly(p: &Poly) -> BigRational {
    p.terms().fold(BigRational::zero(), |acc, (m, c)| {
        let value = m.exponents().iter().fold(c.clone(), |x, &(v, e)| {
            let k = e.value() * 9;
            assert!(k.is_integer(), "exponent {e:?} outside (1/9)Z");
            let (n, d) = POINT[v as usize];
            x * num_traits::pow::Pow::pow(r(n, d), *k.numer() as i32)
        });
        acc + value
    })
}

/// `None` when the denominator vanishes at the point.
fn eval(e: &K0Elem) -> Option<BigRational> {
    let den = eval_poly(e.denominator());
    (!den.is_zero()).then(|| eval_poly(e.numerator()) / den)
}

fn elems(seed: u64, count: usize, ctx: K0Ctx) -> Vec<K0Elem> {
    let mut rng = case_rng(seed, 0);
    (0..count).map(|_| random_k0_elem(ctx, 3, &mut rng)).collect()
}

fn v(k: u32) -> K0Elem {
    K0Elem::var(K0Ctx::default(), k)
}

#[test]
fn characteristic_validation() {
    assert_eq!(K0Ctx::new(4).unwrap_err(), FieldError::BadCharacteristic(4));
    assert_eq!(K0Ctx::new(2).unwrap_err(), FieldError::BadCharacteristic(2));
    assert_eq!(K0Ctx::new(0).unwrap().p0(), 3);
    assert_eq!(K0Ctx::new(3).unwrap().p0(), 5);
    assert_eq!(K0Ctx::new(5).unwrap().p0(), 3);
}

#[test]
fn division_by_zero() {
    let ctx = K0Ctx::default();
    assert_eq!(K0Elem::zero(ctx).inv().unwrap_err(), FieldError::DivisionByZero);
    assert!(v(0).div(&(&v(1) - &v(1))).is_err());
}

#[test]
fn normal_form_is_canonical() {
    let a = &v(0) + &v(1);
    let b = (&(&v(0) * &v(0)) - &(&v(1) * &v(1))).div(&(&v(0) - &v(1))).unwrap();
    assert_eq!(a, b);
    // no gcd cancellation, so equal elements may print differently
    assert_ne!(a.to_string(), b.to_string());
    assert_eq!(a.inv().unwrap().to_string(), "(v0^(-1))/(1 + v0^(-1)*v1)");
}

#[test]
fn roots_of_powers() {
    let ctx = K0Ctx::default();
    let cube = K0Elem::var_pow(ctx, 0, 1, 1).pow(3).unwrap();
    assert_eq!(cube, v(0));
    let e = (&v(0) + &v(1)).pow(3).unwrap();
    let y = p_root_oracle(&e, 3).unwrap().expect("a cube");
    assert_eq!(y.pow(3).unwrap(), e);
    assert_eq!(p_root_oracle(&(&v(0) + &v(1)), 3).unwrap(), None);
    assert!(is_p0_high_form(&v(2)).unwrap());
    assert!(is_p0_high_form(&v(2).neg()).unwrap());
    assert!(!is_p0_high_form(&(&v(2) * &K0Elem::integer(ctx, 2))).unwrap());
}

#[test]
fn stress_set_agrees() {
    let set = stress_set(K0Ctx::default());
    assert!(set.len() >= 20);
    for e in &set {
        let (classified, oracle) = classifier_oracle_pair(e).unwrap();
        assert_eq!(classified, oracle, "{e}");
    }
}

#[test]
fn tower_dump_is_stable() {
    let t = build_tower(&Graph::path(4), 1, 1, 0).unwrap();
    let expected = "tower 1 1 0\nlevel 0 5 t_0 3\ns_0_1^5 = t_0\n\
                    r_1_0^2 = t_0 - (v0 + v1)\nr_1_1^2 = t_0 - (v1 + v2)\nr_1_2^2 = t_0 - (v2 + v3)\n";
    assert_eq!(t.to_string(), expected);
    assert_eq!(build_tower(&Graph::cycle(4), 1, 1, 0).unwrap_err(), FieldError::NotATree);
}

#[test]
fn recovery_errors_in_precedence_order() {
    let ctx = K0Ctx::default();
    let (s, t) = (Graph::path(4), Graph::path(5));
    let ok = [v(1), v(2), v(3), v(4)];
    assert_eq!(recover_graph_from_hom(&ok, &s, &t).unwrap(), GraphMap::new(vec![1, 2, 3, 4]));
    assert_eq!(
        recover_graph_from_hom(&ok[..3], &s, &t).unwrap_err(),
        FieldError::LengthMismatch { expected: 4, got: 3 }
    );
    let mut zero = ok.clone();
    zero[2] = K0Elem::zero(ctx);
    assert_eq!(recover_graph_from_hom(&zero, &s, &t).unwrap_err(), FieldError::NotPHigh { vertex: 2 });
    let mut scaled = ok.clone();
    scaled[1] = &v(2) * &K0Elem::integer(ctx, 2);
    assert_eq!(recover_graph_from_hom(&scaled, &s, &t).unwrap_err(), FieldError::NotPHigh { vertex: 1 });
    let mut sum = ok.clone();
    sum[0] = &v(0) + &v(1);
    assert_eq!(recover_graph_from_hom(&sum, &s, &t).unwrap_err(), FieldError::NotAVariable { vertex: 0 });
    let mut outside = ok.clone();
    outside[3] = v(9);
    assert_eq!(recover_graph_from_hom(&outside, &s, &t).unwrap_err(), FieldError::NotAVariable { vertex: 3 });
    let broken = [v(0), v(2), v(3), v(4)];
    assert_eq!(recover_graph_from_hom(&broken, &s, &t).unwrap_err(), FieldError::EdgeNotPreserved { u: 0, v: 1 });
    assert_eq!(recover_edge(&(&v(1) + &v(2)), &t), Some((1, 2)));
    assert_eq!(recover_edge(&(&v(1) + &v(3)), &t), None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operations_commute_with_evaluation(seed in any::<u64>()) {
        let xs = elems(seed, 2, K0Ctx::default());
        let (a, b) = (&xs[0], &xs[1]);
        if let (Some(ea), Some(eb)) = (eval(a), eval(b)) {
            if let Some(s) = eval(&(a + b)) { prop_assert_eq!(s, &ea + &eb); }
            if let Some(p) = eval(&(a * b)) { prop_assert_eq!(p, &ea * &eb); }
            if !eb.is_zero() {
                if let Some(q) = eval(&a.div(b).unwrap()) { prop_assert_eq!(q, &ea / &eb); }
            }
        }
    }

    #[test]
    fn field_laws_in_char_zero(seed in any::<u64>()) {
        let xs = elems(seed, 3, K0Ctx::default());
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert!((a - a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a * &a.inv().unwrap(), K0Elem::one(a.ctx()));
        }
    }

    #[test]
    fn field_laws_in_positive_characteristic(seed in any::<u64>(), p in prop::sample::select(vec![3u64, 5, 7, 11])) {
        let ctx = K0Ctx::new(p).unwrap();
        let xs = elems(seed, 3, ctx);
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        let pa = (0..p).fold(K0Elem::zero(ctx), |acc, _| &acc + a);
        prop_assert!(pa.is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a * &a.inv().unwrap(), K0Elem::one(ctx));
        }
    }

    #[test]
    fn scaled_monomial_powers_have_roots(seed in any::<u64>(), sign in prop::bool::ANY) {
        let ctx = K0Ctx::default();
        let mut rng = case_rng(seed, 1);
        let m = random_k0_elem(ctx, 3, &mut rng);
        prop_assume!(!m.is_zero());
        let base = if sign { m } else { m.neg() };
        let cube = base.pow(3).unwrap();
        let root = p_root_oracle(&cube, 3).unwrap();
        prop_assert!(root.is_some());
        prop_assert_eq!(root.unwrap().pow(3).unwrap(), cube);
    }

    #[test]
    fn induced_hom_round_trip(n in 4usize..9, seed in any::<u64>()) {
        let t = random_ct_tree(n, seed).unwrap();
        let mut rng = case_rng(seed, 2);
        let (s, f) = random_sub_ct_tree(&t, &mut rng);
        let src = build_tower(&s, 2, 2, 0).unwrap();
        let dst = build_tower(&t, 2, 2, 0).unwrap();
        for k in 0..=2 {
            prop_assert_eq!(src.h_len(k), s.edge_count());
            prop_assert_eq!(dst.h_len(k), t.edge_count());
        }
        let hom = induced_hom(&f, &src, &dst).unwrap();
        let ctx = src.ctx();
        let (a, b) = (random_k0_elem(ctx, s.n() as u32, &mut rng), random_k0_elem(ctx, s.n() as u32, &mut rng));
        prop_assert_eq!(hom.apply_k0(&(&a * &b)), hom.apply_k0(&a) * hom.apply_k0(&b));
        prop_assert_eq!(hom.apply_k0(&(&a + &b)), hom.apply_k0(&a) + hom.apply_k0(&b));
        prop_assert_eq!(hom.apply_k0(&K0Elem::one(ctx)), K0Elem::one(ctx));
        prop_assert_eq!(recover_graph_from_hom(&hom.vertex_images(), &s, &t).unwrap(), f);
    }
}

#[test]
fn eval_oracle_sanity() {
    let ctx = K0Ctx::default();
    assert_eq!(eval(&K0Elem::one(ctx)), Some(BigRational::one()));
    // v0^(1/3) at v0 = 2^9 is 2^3
    assert_eq!(eval(&K0Elem::var_pow(ctx, 0, 1, 1)), Some(r(8, 1)));
}
