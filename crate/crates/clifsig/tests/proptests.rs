//! Property tests over the algebra, the transforms, and the multiplier
//! constructors.

use proptest::prelude::*;
use rustfft::FftDirection;

use clifsig::analytic::{extended_hilbert, max_abs_diff, reconstruct, remove_exceptional};
use clifsig::field::{Domain, MultivectorField};
use clifsig::ga::Multivector;
use clifsig::grid::FrequencyGrid;
use clifsig::multipliers::{
    make_parametric, make_random_unit, ParametricParams, SignRule, SymmetryClass,
};
use clifsig::spectral::{brute_force_ft, even_odd_split, forward_ft, inverse_ft};

fn mv3() -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-1.0f64..1.0, 8).prop_map(|c| Multivector::from_coeffs(3, c))
}

proptest! {
    #[test]
    fn geometric_product_is_associative(a in mv3(), b in mv3(), c in mv3()) {
        let lhs = &(&a * &b) * &c;
        let rhs = &a * &(&b * &c);
        prop_assert!((&lhs - &rhs).max_abs() <= 1e-12);
    }

    #[test]
    fn pseudoscalar_is_central(m in mv3()) {
        let i3 = Multivector::pseudoscalar(3);
        prop_assert!((&(&i3 * &m) - &(&m * &i3)).max_abs() <= 1e-12);
    }

    #[test]
    fn anticommuting_unit_pair_squares_to_signed_scalar(
        alpha in -2.0f64..2.0,
        beta in -2.0f64..2.0,
        angle in 0.0f64..std::f64::consts::TAU,
    ) {
        // u = cos(t) e1 + sin(t) e2 squares to +1; w = e1e2 squares to -1
        // and anticommutes with u; a = alpha u + beta w must square to the
        // scalar alpha^2 - beta^2.
        let mut u = Multivector::zero(3);
        u.set_coeff(0b001, angle.cos());
        u.set_coeff(0b010, angle.sin());
        let w = Multivector::blade(3, 0b011, 1.0);
        let a = &u.scaled(alpha) + &w.scaled(beta);
        let sq = &a * &a;
        let expect = Multivector::scalar(3, alpha * alpha - beta * beta);
        prop_assert!((&sq - &expect).max_abs() <= 1e-12);
    }
}

fn small_field() -> impl Strategy<Value = MultivectorField> {
    (1usize..=8, 1usize..=8)
        .prop_flat_map(|(rows, cols)| {
            prop::collection::vec(-1.0f64..1.0, rows * cols * 8)
                .prop_map(move |data| {
                    let mut f = MultivectorField::zeros(&[rows, cols], 3, Domain::Spatial);
                    f.data_mut().copy_from_slice(&data);
                    f
                })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transform_round_trips(f in small_field()) {
        let back = inverse_ft(&forward_ft(&f).unwrap()).unwrap();
        prop_assert!(back.max_abs_diff(&f) <= 1e-10);
    }

    #[test]
    fn fft_agrees_with_brute_force(f in small_field()) {
        let fast = forward_ft(&f).unwrap();
        let slow = brute_force_ft(&f, FftDirection::Forward).unwrap();
        prop_assert!(fast.max_abs_diff(&slow) <= 1e-9);
    }

    #[test]
    fn even_odd_split_reassembles(f in small_field()) {
        let (even, odd) = even_odd_split(&f).unwrap();
        prop_assert!(even.add(&odd).max_abs_diff(&f) <= 1e-15);
        // And the parts have the claimed parity under reflection.
        let grid = f.grid();
        let blades = f.blade_count();
        for cell in 0..f.cells() {
            let m = grid.negate(cell);
            for b in 0..blades {
                let e = even.data()[cell * blades + b] - even.data()[m * blades + b];
                let o = odd.data()[cell * blades + b] + odd.data()[m * blades + b];
                prop_assert!(e == 0.0 && o == 0.0);
            }
        }
    }
}

fn parametric_params() -> impl Strategy<Value = ParametricParams> {
    (
        1.0f64..3.0,
        prop::array::uniform4(-2.0f64..2.0),
        prop::array::uniform4(0.0f64..3.0),
        prop::bool::ANY,
    )
        .prop_map(|(amplitude, coeffs, exps, sign_product)| ParametricParams {
            amplitude,
            a1: coeffs[0],
            a2: coeffs[1],
            b1: coeffs[2],
            b2: coeffs[3],
            alpha1: exps[0],
            alpha2: exps[1],
            beta1: exps[2],
            beta2: exps[3],
            sign_rule: if sign_product {
                SignRule::SignProduct
            } else {
                SignRule::PlusOne
            },
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parametric_always_validates(params in parametric_params()) {
        let grid = FrequencyGrid::new(&[12, 12]);
        let field = make_parametric(&grid, params).unwrap();
        field.validate().unwrap();
        // Classification stays inside the generic subset: the vector part
        // is odd and the pseudovector part even by construction.
        let class = field.classify();
        prop_assert!(matches!(class, SymmetryClass::Generic | SymmetryClass::Ordinary));
    }

    #[test]
    fn random_unit_toggle_round_trips(seed in 0u64..1000) {
        let grid = FrequencyGrid::new(&[12, 12]);
        let m = make_random_unit(&grid, seed).unwrap();
        let raw: Vec<f64> = (0..grid.len()).map(|i| ((i * 37 + 11) % 101) as f64 / 101.0 - 0.5).collect();
        let (clean, _) = remove_exceptional(&raw, &m).unwrap();
        let back = reconstruct(&extended_hilbert(&clean, &m).unwrap(), &m).unwrap();
        prop_assert!(max_abs_diff(&back, &clean) <= 1e-8);
    }
}
