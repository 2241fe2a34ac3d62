use proptest::collection::vec;
use proptest::prelude::*;
use tropos::analysis::{
    integrate, kernel_apply, legendre_transform, measure_integrate, pointwise_add, pointwise_mul, pointwise_scale,
    scalar_product, uniform_grid, GridFunction,
};
use tropos::linalg::Matrix;
use tropos::semiring::{ExtReal, MaxPlus, MinPlus, Semiring};

fn mp_value() -> impl Strategy<Value = ExtReal> {
    prop_oneof![1 => Just(ExtReal::NegInf), 8 => (-100i32..100).prop_map(|k| ExtReal::new(f64::from(k) / 4.0))]
}

fn mp_pair(max_len: usize) -> impl Strategy<Value = (Vec<ExtReal>, Vec<ExtReal>)> {
    (1..=max_len).prop_flat_map(|n| (vec(mp_value(), n), vec(mp_value(), n)))
}

fn grid<S: Semiring<Elem = ExtReal>>(values: Vec<ExtReal>) -> GridFunction<S, usize> {
    GridFunction::new((0..values.len()).collect(), values).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn integral_is_linear((a, b) in mp_pair(20), lambda in mp_value()) {
        let (f, g) = (grid::<MaxPlus>(a.clone()), grid::<MaxPlus>(b.clone()));
        let sum = pointwise_add(&f, &g).unwrap();
        prop_assert_eq!(integrate(&sum).unwrap(), MaxPlus::add(integrate(&f).unwrap(), integrate(&g).unwrap()));
        prop_assert_eq!(integrate(&pointwise_scale(lambda, &f)).unwrap(), MaxPlus::mul(lambda, integrate(&f).unwrap()));

        // min-plus reads the same values with +inf as zero
        let swap = |v: &Vec<ExtReal>| -> Vec<ExtReal> {
            v.iter().map(|&x| if x == ExtReal::NegInf { ExtReal::PosInf } else { x }).collect()
        };
        let (f, g) = (grid::<MinPlus>(swap(&a)), grid::<MinPlus>(swap(&b)));
        let sum = pointwise_add(&f, &g).unwrap();
        prop_assert_eq!(integrate(&sum).unwrap(), MinPlus::add(integrate(&f).unwrap(), integrate(&g).unwrap()));
    }

    #[test]
    fn scalar_product_is_symmetric_and_linear((a, b) in mp_pair(20), c in vec(mp_value(), 20), lambda in mp_value()) {
        let (f, g) = (grid::<MaxPlus>(a.clone()), grid::<MaxPlus>(b));
        let psi = grid::<MaxPlus>(c[..a.len()].to_vec());
        prop_assert_eq!(scalar_product(&f, &g), scalar_product(&g, &f));
        prop_assert_eq!(scalar_product(&f, &psi), measure_integrate(&f, &psi));
        // f ↦ ⟨f, ψ⟩ is S-linear
        let lhs = scalar_product(&pointwise_add(&pointwise_scale(lambda, &f), &g).unwrap(), &psi).unwrap();
        let rhs = MaxPlus::add(
            MaxPlus::mul(lambda, scalar_product(&f, &psi).unwrap()),
            scalar_product(&g, &psi).unwrap(),
        );
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(integrate(&pointwise_mul(&f, &psi).unwrap()), measure_integrate(&f, &psi));
    }

    #[test]
    fn kernel_operators_are_linear((a, b) in mp_pair(8), rows in 1usize..6, k in vec(mp_value(), 48), lambda in mp_value()) {
        let n = a.len();
        let kernel = Matrix::<MaxPlus>::new(rows, n, k[..rows * n].to_vec()).unwrap();
        let (f, g) = (grid::<MaxPlus>(a), grid::<MaxPlus>(b));
        let kf = kernel_apply(&kernel, &f).unwrap();
        let kg = kernel_apply(&kernel, &g).unwrap();
        prop_assert_eq!(kernel_apply(&kernel, &pointwise_add(&f, &g).unwrap()).unwrap(), pointwise_add(&kf, &kg).unwrap());
        prop_assert_eq!(kernel_apply(&kernel, &pointwise_scale(lambda, &f)).unwrap(), pointwise_scale(lambda, &kf));
        // entrywise oracle
        for x in 0..rows {
            let direct = (0..n).map(|y| kernel.get(x, y).to_f64() + f.values()[y].to_f64()).fold(f64::NEG_INFINITY, f64::max);
            prop_assert_eq!(kf.values()[x].to_f64(), direct);
        }
    }

}

proptest! {
    // each case is two dense transforms
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn double_legendre_lies_below(knots in vec((-3.0..3.0f64, -5.0..5.0f64), 2..6)) {
        let xs = uniform_grid(-3.0, 3.0, 0.01).unwrap();
        let f = piecewise_linear(&xs, &knots);
        let lf = legendre_transform(&f, &xs).unwrap();
        let llf = legendre_transform(&lf, &xs).unwrap();
        for (v, w) in llf.values().iter().zip(f.values()) {
            prop_assert!(v.to_f64() <= w.to_f64() + 0.01);
        }
        // the transform is convex: discrete midpoint test
        let l = lf.values();
        for i in 1..l.len() - 1 {
            prop_assert!(l[i].to_f64() <= (l[i - 1].to_f64() + l[i + 1].to_f64()) / 2.0 + 1e-9);
        }
    }

    #[test]
    fn legendre_reverses_order(shift in vec(0.0..2.0f64, 61)) {
        let xs = uniform_grid(-3.0, 3.0, 0.1).unwrap();
        let f = GridFunction::<MaxPlus, f64>::from_fn(xs.clone(), |&x| ExtReal::new(x.sin())).unwrap();
        let g = GridFunction::<MaxPlus, f64>::new(
            xs.clone(),
            f.values().iter().zip(&shift).map(|(v, s)| ExtReal::new(v.to_f64() + s)).collect(),
        ).unwrap();
        let ps = uniform_grid(-2.0, 2.0, 0.1).unwrap();
        let (lf, lg) = (legendre_transform(&f, &ps).unwrap(), legendre_transform(&g, &ps).unwrap());
        for (a, b) in lf.values().iter().zip(lg.values()) {
            prop_assert!(a >= b);
        }
    }
}

/// Linear interpolation through `knots` (sorted by x), constant outside.
fn piecewise_linear(xs: &[f64], knots: &[(f64, f64)]) -> GridFunction<MaxPlus, f64> {
    let mut k = knots.to_vec();
    k.sort_by(|a, b| a.0.total_cmp(&b.0));
    GridFunction::from_fn(xs.to_vec(), |&x| {
        let y = match k.iter().position(|&(kx, _)| kx >= x) {
            None => k[k.len() - 1].1,
            Some(0) => k[0].1,
            Some(i) => {
                let ((x0, y0), (x1, y1)) = (k[i - 1], k[i]);
                if x1 == x0 {
                    y1
                } else {
                    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
                }
            }
        };
        ExtReal::new(y)
    })
    .unwrap()
}

#[test]
fn double_transform_of_the_quadratic() {
    let xs = uniform_grid(-3.0, 3.0, 0.01).unwrap();
    let f = GridFunction::<MaxPlus, f64>::from_fn(xs.clone(), |&x| ExtReal::new(x * x / 2.0)).unwrap();
    let llf = legendre_transform(&legendre_transform(&f, &xs).unwrap(), &xs).unwrap();
    let err = llf
        .values()
        .iter()
        .zip(f.values())
        .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
        .fold(0.0, f64::max);
    assert!(err <= 0.02, "sup error {err}");
}

#[test]
fn riemann_sums_of_a_concave_bump() {
    for step in [0.1, 0.01, 0.001] {
        let xs = uniform_grid(-1.0, 1.0, step).unwrap();
        let f = GridFunction::<MaxPlus, f64>::from_fn(xs, |&x| ExtReal::new(-x * x)).unwrap();
        let top = integrate(&f).unwrap().to_f64();
        assert!(top <= 0.0 && top >= -2.0 * step * step, "step {step}: {top}");
    }
}
