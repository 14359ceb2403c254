use num_complex::Complex64;
use proptest::prelude::*;

use nevlab::exterior::wedge_rows;
use nevlab::harness::HyperplaneConfig;
use nevlab::nevanlinna::{counting, select_tuple, weil};
use nevlab::{GaussPoly, GaussRational};

fn scalar() -> impl Strategy<Value = GaussRational> {
    (-5i64..=5, 1i64..=4, -5i64..=5, 1i64..=4).prop_map(|(a, b, c, d)| GaussRational::from_parts(a, b, c, d))
}

fn nonzero_scalar() -> impl Strategy<Value = GaussRational> {
    scalar().prop_filter("nonzero", |c| !c.is_zero())
}

fn poly(max_len: usize) -> impl Strategy<Value = GaussPoly> {
    prop::collection::vec(scalar(), 1..=max_len).prop_map(GaussPoly::from_coeffs)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = GaussPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(a, b)| Complex64::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_scales_with_a_common_factor(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
        let scaled = (&a * &c).gcd(&(&b * &c)).unwrap();
        prop_assert!(scaled.is_associate(&(&g * &c)));
    }

    #[test]
    fn product_rule(p in poly(5), q in poly(5)) {
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squarefree_parts_reassemble(p in nonzero_poly(4), q in nonzero_poly(3)) {
        let f = &(&p * &q) * &q;
        let parts = f.squarefree_decomposition().unwrap();
        let product = parts.iter().fold(GaussPoly::one(), |acc, (g, m)| &acc * &g.pow(*m as u32));
        prop_assert!(product.is_associate(&f));
        for (g, _) in &parts {
            prop_assert!(g.gcd(&g.derivative()).unwrap().is_constant());
        }
    }

    #[test]
    fn display_round_trips(p in poly(6), c in scalar()) {
        prop_assert_eq!(p.to_string().parse::<GaussPoly>().unwrap(), p);
        prop_assert_eq!(c.to_string().parse::<GaussRational>().unwrap(), c);
    }

    #[test]
    fn wedge_is_alternating(rows in prop::collection::vec(prop::collection::vec(poly(2), 4), 3), k in 0usize..3) {
        let w = wedge_rows(&rows, 3).unwrap();
        let mut swapped = rows.clone();
        swapped.swap(k, (k + 1) % 3);
        prop_assert_eq!(wedge_rows(&swapped, 3).unwrap(), w.negate());
        let mut repeated = rows.clone();
        repeated[(k + 1) % 3] = rows[k].clone();
        prop_assert!(wedge_rows(&repeated, 3).unwrap().is_zero());
    }

    #[test]
    fn counting_is_nondecreasing(p in nonzero_poly(6), shift in 0usize..3, r in 0.05f64..20.0, step in 0.0f64..5.0) {
        let divisor = p.shift(shift).roots().unwrap();
        prop_assert!(counting(&divisor, r).unwrap() <= counting(&divisor, r + step).unwrap() + 1e-12);
    }
}

fn config_forms(config: &HyperplaneConfig) -> Vec<Vec<Complex64>> {
    config
        .forms()
        .iter()
        .map(|f| f.iter().map(GaussRational::to_complex).collect())
        .collect()
}

fn generic_config() -> HyperplaneConfig {
    HyperplaneConfig::parse(
        &[
            &["1", "0", "0"],
            &["0", "1", "0"],
            &["0", "0", "1"],
            &["1", "1", "1"],
            &["1", "-1", "2"],
        ],
        2,
    )
    .unwrap()
}

proptest! {
    #[test]
    fn selector_ignores_the_scale_of_the_point(v in prop::collection::vec(complex(), 3), c in complex()) {
        prop_assume!(c.norm() > 1e-3 && v.iter().any(|x| x.norm() > 1e-3));
        let config = generic_config();
        let forms = config_forms(&config);
        let scaled: Vec<Complex64> = v.iter().map(|x| x * c).collect();
        let a: Vec<f64> = forms.iter().map(|f| weil(f, &v)).collect();
        let b: Vec<f64> = forms.iter().map(|f| weil(f, &scaled)).collect();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!(x == y || (x - y).abs() <= 1e-9 * x.abs().max(1.0));
        }
        let (sa, sb) = (select_tuple(&a, config.tuples()), select_tuple(&b, config.tuples()));
        prop_assert!((sa.value - sb.value).abs() <= 1e-9 * sa.value.abs().max(1.0));
    }

    #[test]
    fn adding_a_hyperplane_never_lowers_the_selector(
        v in prop::collection::vec(complex(), 3),
        extra in prop::collection::vec(nonzero_scalar(), 3),
    ) {
        prop_assume!(v.iter().any(|x| x.norm() > 1e-3));
        let config = generic_config();
        let bigger = config.with_form(extra).unwrap();
        let value = |c: &HyperplaneConfig| {
            let lambdas: Vec<f64> = config_forms(c).iter().map(|f| weil(f, &v)).collect();
            select_tuple(&lambdas, c.tuples()).value
        };
        prop_assert!(value(&bigger) >= value(&config));
    }
}
