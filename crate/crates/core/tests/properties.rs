use std::sync::OnceLock;

use proptest::prelude::*;
use weak_hopf::double::{dprime_and_f, drinfeld_double};
use weak_hopf::exactlin::{Elem, Field, Op, Scalar};
use weak_hopf::weakhopf::{groupoid_algebra, Groupoid, WeakHopf};

struct Fixture {
    h: WeakHopf,
    d: WeakHopf,
    dprime: WeakHopf,
    induced: Op,
}

fn fixture(field: Field) -> Fixture {
    let h = groupoid_algebra(&Groupoid::pair(2).unwrap(), field);
    let (_, dbl) = drinfeld_double(&h).unwrap();
    let (_, dp, induced) = dprime_and_f(&dbl).unwrap();
    Fixture { h, d: dbl.d, dprime: dp.d, induced }
}

fn rational() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture(Field::Rational))
}

fn mod7() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| fixture(Field::prime(7).unwrap()))
}

fn elem(f: Field, coords: &[i64]) -> Elem {
    let v: Vec<Scalar> = coords.iter().map(|&c| f.int(c)).collect();
    Elem::vector(f, &v)
}

fn coords(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, n)
}

fn mul(a: &WeakHopf, x: &Elem, y: &Elem) -> Elem {
    x.tensor(y).apply(&[0, 1], a.mult())
}

fn comult_is_multiplicative(a: &WeakHopf, x: &Elem, y: &Elem) -> bool {
    let lhs = a.comult().eval(&mul(a, x, y));
    let dx = a.comult().eval(x);
    let dy = a.comult().eval(y);
    let rhs = dx.tensor(&dy).apply(&[0, 2], a.mult()).apply(&[1, 2], a.mult());
    lhs == rhs
}

fn antipode_reverses(a: &WeakHopf, x: &Elem, y: &Elem) -> bool {
    let s = a.antipode();
    s.eval(&mul(a, x, y)) == mul(a, &s.eval(y), &s.eval(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groupoid_algebra_comult_multiplicative(x in coords(4), y in coords(4)) {
        let h = &rational().h;
        let f = h.field();
        prop_assert!(comult_is_multiplicative(h, &elem(f, &x), &elem(f, &y)));
        prop_assert!(antipode_reverses(h, &elem(f, &x), &elem(f, &y)));
    }

    #[test]
    fn double_comult_multiplicative(x in coords(4), y in coords(4)) {
        for fx in [rational(), mod7()] {
            let d = &fx.d;
            let f = d.field();
            prop_assert!(comult_is_multiplicative(d, &elem(f, &x), &elem(f, &y)));
        }
    }

    #[test]
    fn double_antipode_anti_multiplicative(x in coords(4), y in coords(4)) {
        for fx in [rational(), mod7()] {
            let d = &fx.d;
            let f = d.field();
            prop_assert!(antipode_reverses(d, &elem(f, &x), &elem(f, &y)));
        }
    }

    #[test]
    fn induced_map_reverses_products(x in coords(4), y in coords(4)) {
        for fx in [rational(), mod7()] {
            let f = fx.d.field();
            let (x, y) = (elem(f, &x), elem(f, &y));
            let lhs = fx.induced.eval(&mul(&fx.d, &x, &y));
            let rhs = mul(&fx.dprime, &fx.induced.eval(&y), &fx.induced.eval(&x));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn induced_map_preserves_counit(x in coords(4)) {
        let fx = rational();
        let x = elem(fx.d.field(), &x);
        prop_assert_eq!(fx.dprime.counit().eval(&fx.induced.eval(&x)), fx.d.counit().eval(&x));
    }
}
