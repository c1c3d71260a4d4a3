//! The runnable verification suite behind `clifsig selftest`.
//!
//! Each check pins one contract of the transform stack at a fixed tolerance
//! on a synthetic desk-scale grid and reports the worst residual it saw. The
//! acceptance integration test runs `run_all` and requires every check to
//! pass; the CLI prints the same results as JSON lines.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rustfft::FftDirection;
use serde::Serialize;

use crate::analytic::{
    analytic_signal, apply_multiplier, cosine_field, decompose, extended_hilbert,
    hilbert_of_field, max_abs_diff, partial_transforms, pearson, reconstruct,
    reconstruct_from_orientation, remove_exceptional, HilbertParts,
};
use crate::field::{Domain, MultivectorField};
use crate::ga::Multivector;
use crate::grid::FrequencyGrid;
use crate::multipliers::{
    make_hahn, make_hypercomplex, make_modified_hypercomplex, make_monogenic, make_parametric,
    make_random_unit, make_scalar_set, make_sgn_1d, MultiplierField, MultiplierKind,
    ParametricParams, SymmetryClass,
};
use crate::spectral;

mod fixtures;

/// Exact-arithmetic contracts: algebra axioms, multiplier idempotency,
/// Table-row reproduction.
pub const TOL_EXACT: f64 = 1e-12;
/// FFT round-trip contracts on small grids.
pub const TOL_ROUNDTRIP: f64 = 1e-10;
/// Single-frequency responses and component equivalences.
pub const TOL_COMPONENTS: f64 = 1e-9;
/// Full toggle/reconstruction round trips through two transform pairs.
pub const TOL_TOGGLE: f64 = 1e-8;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub status: &'static str,
    pub residual: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl CheckResult {
    fn new(check: &'static str, residual: f64, tolerance: f64, detail: String) -> Self {
        CheckResult {
            check,
            status: if residual <= tolerance { "pass" } else { "fail" },
            residual,
            tolerance,
            detail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Deliberate defects for negative-control runs: the suite must notice them.
#[derive(Clone, Copy, Debug, Default)]
pub struct FaultInjection {
    /// Flip the sign of the sgn(w1) factor in the Hahn construction, moving
    /// the spectral support to the second quadrant.
    pub hahn_sign_flip: bool,
}

/// Run every check, in order. All grids are 32x32 or smaller, so the whole
/// suite stays well under a minute.
pub fn run_all(faults: FaultInjection) -> Vec<CheckResult> {
    vec![
        check_algebra_axioms(),
        check_idempotency(),
        check_classification(),
        check_table_rows(),
        check_one_dimensional(),
        check_cosine_law(),
        check_toggle(faults),
        check_quadrant_support(faults),
        check_named_equivalence(),
        check_generic_polar(),
        check_oracle_equivalence(),
        check_orientation_reconstruction(),
    ]
}

fn grid32() -> FrequencyGrid {
    FrequencyGrid::new(&[32, 32])
}

fn random_signal(cells: usize, seed: u64) -> Vec<f64> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..cells).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

/// The constructor battery shared by several checks: every named builder,
/// the three parameter rows, five random seeds, and a scalar set.
fn constructor_battery(grid: &FrequencyGrid) -> Vec<MultiplierField> {
    let mut fields = vec![
        make_hahn(grid).unwrap(),
        make_hypercomplex(grid).unwrap(),
        make_modified_hypercomplex(grid).unwrap(),
        make_monogenic(grid).unwrap(),
        make_parametric(grid, ParametricParams::monogenic()).unwrap(),
        make_parametric(grid, ParametricParams::modified_hypercomplex()).unwrap(),
        make_parametric(grid, ParametricParams::hypercomplex()).unwrap(),
    ];
    for seed in 0..5 {
        fields.push(make_random_unit(grid, seed).unwrap());
    }
    fields.push(make_scalar_set(grid, |w| w[0] + w[1] > 0).unwrap());
    fields
}

fn check_algebra_axioms() -> CheckResult {
    let mut worst = 0.0f64;
    for dim in [3usize, 7] {
        for k in 1..=dim {
            let ek = Multivector::generator(dim, k);
            worst = worst.max((&(&ek * &ek) - &Multivector::scalar(dim, 1.0)).max_abs());
            for j in 1..k {
                let ej = Multivector::generator(dim, j);
                worst = worst.max((&(&ej * &ek) + &(&ek * &ej)).max_abs());
            }
        }
        let i = Multivector::pseudoscalar(dim);
        worst = worst.max((&(&i * &i) - &Multivector::scalar(dim, -1.0)).max_abs());
        // I_L I_{L-1} = -e_L.
        let i_lm1 = {
            let mut m = Multivector::zero(dim);
            m.set_coeff((1 << (dim - 1)) - 1, 1.0);
            m
        };
        let expect = Multivector::generator(dim, dim).scaled(-1.0);
        worst = worst.max((&(&i * &i_lm1) - &expect).max_abs());
        // Centrality on randomized products, 1000 trials per dimension.
        let mut rng = StdRng::seed_from_u64(dim as u64);
        let blades = 1usize << dim;
        for _ in 0..1000 {
            let m = Multivector::from_coeffs(
                dim,
                (0..blades).map(|_| rng.gen_range(-1.0..1.0)).collect(),
            );
            worst = worst.max((&(&i * &m) - &(&m * &i)).max_abs());
        }
    }
    CheckResult::new(
        "01-algebra-axioms",
        worst,
        TOL_EXACT,
        "generator relations, pseudoscalar square/centrality, L=3 and L=7".into(),
    )
}

fn check_idempotency() -> CheckResult {
    let grid = grid32();
    let table = crate::ga::AlgebraTable::get(3);
    let mut worst = 0.0f64;
    let mut names = Vec::new();
    for field in constructor_battery(&grid) {
        names.push(field.name().to_string());
        if let Err(crate::Error::InvalidMultiplier { residual, .. }) = field.validate() {
            worst = worst.max(residual);
        }
        let psi = match field.idempotent() {
            Ok(psi) => psi,
            Err(_) => continue,
        };
        for bin in 0..grid.len() {
            if !field.active(bin) {
                continue;
            }
            let mut sq = [0.0; 8];
            table.product_acc(psi.cell(bin), psi.cell(bin), &mut sq);
            let resid = sq
                .iter()
                .zip(psi.cell(bin))
                .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
            worst = worst.max(resid);
        }
    }
    CheckResult::new(
        "02-idempotency-unitarity",
        worst,
        TOL_EXACT,
        format!("a^2 = 1 and psi^2 = psi for {} fields", names.len()),
    )
}

fn check_classification() -> CheckResult {
    let grid = grid32();
    let mut failures = Vec::new();
    let expectations: Vec<(MultiplierField, SymmetryClass)> = vec![
        (make_hahn(&grid).unwrap(), SymmetryClass::Generalized),
        (make_hypercomplex(&grid).unwrap(), SymmetryClass::Generic),
        (
            make_modified_hypercomplex(&grid).unwrap(),
            SymmetryClass::Ordinary,
        ),
        (make_monogenic(&grid).unwrap(), SymmetryClass::Ordinary),
        (make_random_unit(&grid, 11).unwrap(), SymmetryClass::Ordinary),
        (
            make_parametric(
                &grid,
                ParametricParams {
                    amplitude: 1.5,
                    ..ParametricParams::monogenic()
                },
            )
            .unwrap(),
            SymmetryClass::Generic,
        ),
    ];
    for (field, expected) in &expectations {
        let got = field.classify();
        if got != *expected {
            failures.push(format!("{}: {got} != {expected}", field.name()));
        }
        // Hierarchy containment: the residuals behind the tighter classes
        // must be consistent with the wider ones.
        let r = field.symmetry_residuals();
        let generic_ok = match field.kind() {
            MultiplierKind::Scalar => r.m_even <= TOL_EXACT,
            MultiplierKind::VectorPseudovector => {
                r.v_even <= TOL_EXACT && r.p_odd <= TOL_EXACT
            }
        };
        if got == SymmetryClass::Ordinary && !generic_ok {
            failures.push(format!("{}: ordinary but not generic", field.name()));
        }
    }
    CheckResult::new(
        "03-classification",
        failures.len() as f64,
        0.0,
        if failures.is_empty() {
            format!("{} constructors classified as stated", expectations.len())
        } else {
            failures.join("; ")
        },
    )
}

fn check_table_rows() -> CheckResult {
    let grid = grid32();
    let mut worst = 0.0f64;
    let mut mask_mismatch = false;
    let rows: [(MultiplierField, ParametricParams); 3] = [
        (make_monogenic(&grid).unwrap(), ParametricParams::monogenic()),
        (
            make_modified_hypercomplex(&grid).unwrap(),
            ParametricParams::modified_hypercomplex(),
        ),
        (
            make_hypercomplex(&grid).unwrap(),
            ParametricParams::hypercomplex(),
        ),
    ];
    for (named, params) in rows {
        let parametric = make_parametric(&grid, params).unwrap();
        mask_mismatch |= parametric.active_mask() != named.active_mask();
        worst = worst.max(parametric.values().max_abs_diff(named.values()));
    }
    if mask_mismatch {
        worst = f64::INFINITY;
    }
    CheckResult::new(
        "04-table-rows",
        worst,
        TOL_EXACT,
        "parametric rows reproduce monogenic, modified hypercomplex, hypercomplex".into(),
    )
}

fn check_one_dimensional() -> CheckResult {
    let grid = FrequencyGrid::new(&[64]);
    let m = make_sgn_1d(&grid).unwrap();
    let mut worst = 0.0f64;
    // Negative-frequency support of the analytic signal of a cosine.
    let f = cosine_field(&grid, &[5]);
    let f_a = analytic_signal(&f, &m).unwrap();
    let spec = spectral::forward_ft(&f_a).unwrap();
    let peak = spec.max_abs();
    for bin in 0..grid.len() {
        if grid.omega(bin)[0] < 0 {
            let mag = spec.cell(bin).iter().fold(0.0f64, |a, &b| a.max(b.abs()));
            worst = worst.max(mag / peak);
        }
    }
    // Double application on a zero-mean signal and the fixed point.
    let raw = random_signal(64, 64);
    let (clean, _) = remove_exceptional(&raw, &m).unwrap();
    let back = reconstruct(&extended_hilbert(&clean, &m).unwrap(), &m).unwrap();
    worst = worst.max(max_abs_diff(&back, &clean));
    let f_a = analytic_signal(&clean, &m).unwrap();
    let h_f_a = hilbert_of_field(&f_a, &m).unwrap();
    worst = worst.max(h_f_a.max_abs_diff(&f_a));
    CheckResult::new(
        "05-one-dimensional",
        worst,
        TOL_ROUNDTRIP,
        "negative bins vanish; H1 H1 = id; f_A = H1[f_A]".into(),
    )
}

fn check_cosine_law() -> CheckResult {
    let grid = grid32();
    let mut worst = 0.0f64;
    let i3 = Multivector::pseudoscalar(3);
    // Ordinary multipliers: f_H(cos) = I_3 v-hat(w_c) sin.
    let ordinary = [
        make_monogenic(&grid).unwrap(),
        make_modified_hypercomplex(&grid).unwrap(),
        make_random_unit(&grid, 2).unwrap(),
    ];
    let mut rng = StdRng::seed_from_u64(6);
    for m in &ordinary {
        let active: Vec<usize> = (0..grid.len()).filter(|&b| m.active(b)).collect();
        for _ in 0..10 {
            let bin = active[rng.gen_range(0..active.len())];
            let omega = grid.omega(bin);
            let f = cosine_field(&grid, &omega);
            let f_h = extended_hilbert(&f, m).unwrap();
            let v = m.v(bin);
            let mut vhat = Multivector::zero(3);
            vhat.set_coeff(0b001, v[0]);
            vhat.set_coeff(0b010, v[1]);
            let dir = &i3 * &vhat;
            let mut expect = MultivectorField::zeros(grid.shape(), 3, Domain::Spatial);
            for (cell, s) in sine_cells(&grid, &omega).into_iter().enumerate() {
                expect.set(cell, &dir.scaled(s));
            }
            worst = worst.max(f_h.max_abs_diff(&expect));
        }
    }
    // General multipliers: f_H(cos) = a_e(w_c) cos + I_3 a_o(w_c) sin.
    let general = [
        make_hahn(&grid).unwrap(),
        make_hypercomplex(&grid).unwrap(),
        make_parametric(
            &grid,
            ParametricParams {
                amplitude: 1.5,
                ..ParametricParams::monogenic()
            },
        )
        .unwrap(),
    ];
    for m in &general {
        let active: Vec<usize> = (0..grid.len()).filter(|&b| m.active(b)).collect();
        for _ in 0..10 {
            let bin = active[rng.gen_range(0..active.len())];
            let omega = grid.omega(bin);
            let f = cosine_field(&grid, &omega);
            let f_h = extended_hilbert(&f, m).unwrap();
            let a_plus = m.values().get(bin);
            let a_minus = m.values().get(grid.negate(bin));
            let a_even = (&a_plus + &a_minus).scaled(0.5);
            let i3_a_odd = &i3 * &(&a_plus - &a_minus).scaled(0.5);
            let sines = sine_cells(&grid, &omega);
            let mut expect = MultivectorField::zeros(grid.shape(), 3, Domain::Spatial);
            for cell in 0..grid.len() {
                let mv = &a_even.scaled(f[cell]) + &i3_a_odd.scaled(sines[cell]);
                expect.set(cell, &mv);
            }
            worst = worst.max(f_h.max_abs_diff(&expect));
        }
    }
    CheckResult::new(
        "06-cosine-law",
        worst,
        TOL_COMPONENTS,
        "single-frequency response, ordinary and general multipliers".into(),
    )
}

fn sine_cells(grid: &FrequencyGrid, omega: &[i64]) -> Vec<f64> {
    (0..grid.len())
        .map(|cell| {
            let x = grid.unflat(cell);
            let phase: f64 = x
                .iter()
                .zip(omega)
                .zip(grid.shape())
                .map(|((&xi, &wi), &n)| xi as f64 * wi as f64 / n as f64)
                .sum();
            (std::f64::consts::TAU * phase).sin()
        })
        .collect()
}

fn hahn_variant(grid: &FrequencyGrid, faults: FaultInjection) -> MultiplierField {
    if faults.hahn_sign_flip {
        // sgn(w1) negated in the step product: the support moves to the
        // second quadrant and the support check must catch it.
        make_scalar_set(grid, |w| w[0] < 0 && w[1] > 0).unwrap()
    } else {
        make_hahn(grid).unwrap()
    }
}

fn check_toggle(faults: FaultInjection) -> CheckResult {
    let grid = grid32();
    let raw = random_signal(grid.len(), 77);
    let mut worst = 0.0f64;
    let mut fields = constructor_battery(&grid);
    fields[0] = hahn_variant(&grid, faults);
    for m in &fields {
        let (clean, _) = remove_exceptional(&raw, m).unwrap();
        let back = reconstruct(&extended_hilbert(&clean, m).unwrap(), m).unwrap();
        worst = worst.max(max_abs_diff(&back, &clean));
    }
    CheckResult::new(
        "07-toggle-reconstruction",
        worst,
        TOL_TOGGLE,
        format!("H[H[f]] = f on cleaned random input, {} fields", fields.len()),
    )
}

fn check_quadrant_support(faults: FaultInjection) -> CheckResult {
    let grid = grid32();
    let m = hahn_variant(&grid, faults);
    let raw = random_signal(grid.len(), 40);
    let (f, _) = remove_exceptional(&raw, &m).unwrap();
    let f_a = analytic_signal(&f, &m).unwrap();
    let spec = spectral::forward_ft(&f_a).unwrap();
    let peak = spec.max_abs();
    let mut worst = 0.0f64;
    for bin in 0..grid.len() {
        let w = grid.omega(bin);
        if !(w[0] >= 0 && w[1] >= 0) {
            let mag = spec.cell(bin).iter().fold(0.0f64, |a, &b| a.max(b.abs()));
            worst = worst.max(mag / peak);
        }
    }
    // Component identity against the independent partial-transform route:
    // f_A = (f + f_HT)/4 + I_3 (f_H1 + f_H2)/4.
    let pt = partial_transforms(&f, grid.shape()).unwrap();
    let expect_scalar: Vec<f64> = f.iter().zip(&pt.f_ht).map(|(a, b)| (a + b) / 4.0).collect();
    let expect_pseudo: Vec<f64> = pt
        .f_h1
        .iter()
        .zip(&pt.f_h2)
        .map(|(a, b)| (a + b) / 4.0)
        .collect();
    let comp = max_abs_diff(&f_a.blade_plane(0), &expect_scalar)
        .max(max_abs_diff(&f_a.blade_plane(0b111), &expect_pseudo));
    // Both halves share the tolerance; the support half is the tighter
    // relative bound and dominates in the fault-injected run.
    worst = worst.max(comp);
    CheckResult::new(
        "08-quadrant-support",
        worst,
        TOL_COMPONENTS,
        "single-orthant spectrum and partial-transform components".into(),
    )
}

fn check_named_equivalence() -> CheckResult {
    let grid = grid32();
    let raw = random_signal(grid.len(), 41);
    let mut worst = 0.0f64;
    // Hypercomplex components are the partial/total Hilbert transforms.
    let hc = make_hypercomplex(&grid).unwrap();
    let (f, _) = remove_exceptional(&raw, &hc).unwrap();
    let pt = partial_transforms(&f, grid.shape()).unwrap();
    let d = decompose(&f, &hc).unwrap();
    if let HilbertParts::Vector { v, .. } = &d.parts {
        worst = worst.max(max_abs_diff(&v[0], &pt.f_h1));
        worst = worst.max(max_abs_diff(&v[1], &pt.f_h2));
        worst = worst.max(max_abs_diff(&v[2], &pt.f_ht));
    }
    // Monogenic components are the Riesz transforms.
    let mono = make_monogenic(&grid).unwrap();
    let (f, _) = remove_exceptional(&raw, &mono).unwrap();
    let pt = partial_transforms(&f, grid.shape()).unwrap();
    let d = decompose(&f, &mono).unwrap();
    if let HilbertParts::Vector { v, .. } = &d.parts {
        worst = worst.max(max_abs_diff(&v[0], &pt.f_r1));
        worst = worst.max(max_abs_diff(&v[1], &pt.f_r2));
        worst = worst.max(v[2].iter().fold(0.0f64, |a, &b| a.max(b.abs())));
    }
    CheckResult::new(
        "09-named-equivalence",
        worst,
        TOL_COMPONENTS,
        "hypercomplex = partial Hilbert, monogenic = Riesz".into(),
    )
}

fn check_generic_polar() -> CheckResult {
    let grid = grid32();
    let raw = random_signal(grid.len(), 42);
    let mut worst = 0.0f64;
    let generics = [
        make_hypercomplex(&grid).unwrap(),
        make_monogenic(&grid).unwrap(),
        make_parametric(
            &grid,
            ParametricParams {
                amplitude: 1.25,
                ..ParametricParams::monogenic()
            },
        )
        .unwrap(),
    ];
    let i3 = Multivector::pseudoscalar(3);
    for m in &generics {
        let (f, _) = remove_exceptional(&raw, m).unwrap();
        let d = decompose(&f, m).unwrap();
        // Vanishing of the even-route fields.
        worst = worst.max(d.f_hilbert.blade_plane(0).iter().fold(0.0f64, |a, &b| a.max(b.abs())));
        if let HilbertParts::Vector { w, v, v_norm, v_hat, sigma, kappa, orient_valid } = &d.parts {
            for plane in w {
                worst = worst.max(plane.iter().fold(0.0f64, |a, &b| a.max(b.abs())));
            }
            for cell in 0..grid.len() {
                if !d.valid[cell] {
                    continue;
                }
                let r = d.magnitude[cell];
                worst = worst.max((r * d.theta[cell].cos() - f[cell]).abs());
                worst = worst.max((r * d.theta[cell].sin() - d.hilbert_norm[cell]).abs());
                if !orient_valid[cell] {
                    continue;
                }
                // Unit Hilbert direction squares to -1.
                let mut unit = Multivector::zero(3);
                unit.set_coeff(0b001, v[0][cell] / v_norm[cell]);
                unit.set_coeff(0b010, v[1][cell] / v_norm[cell]);
                unit.set_coeff(0b100, v[2][cell] / v_norm[cell]);
                let dir = &i3 * &unit;
                let sq = &dir * &dir;
                worst = worst.max((&sq - &Multivector::scalar(3, -1.0)).max_abs());
                // Spherical reconstruction of the orientation vector.
                let (ck, sk) = (kappa[cell].cos(), kappa[cell].sin());
                let (cs, ss) = (sigma[cell].cos(), sigma[cell].sin());
                worst = worst.max((v_hat[0][cell] - ck * cs).abs());
                worst = worst.max((v_hat[1][cell] - ck * ss).abs());
                worst = worst.max((v_hat[2][cell] - sk).abs());
            }
        }
    }
    CheckResult::new(
        "10-generic-polar",
        worst,
        TOL_ROUNDTRIP,
        "vanishing even parts, polar identities, orientation angles".into(),
    )
}

fn check_oracle_equivalence() -> CheckResult {
    let mut worst = 0.0f64;
    let mut shapes: Vec<Vec<usize>> = (1..=8).map(|n| vec![n]).collect();
    for rows in 1..=8 {
        for cols in 1..=8 {
            shapes.push(vec![rows, cols]);
        }
    }
    for (i, shape) in shapes.iter().enumerate() {
        let cells: usize = shape.iter().product();
        for seed in 0..20u64 {
            let mut rng = StdRng::seed_from_u64(seed * 1000 + i as u64);
            let mut field = MultivectorField::zeros(shape, 3, Domain::Spatial);
            for c in 0..cells {
                for b in 0..8 {
                    field.cell_mut(c)[b] = rng.gen_range(-1.0..1.0);
                }
            }
            let fast = spectral::forward_ft(&field).unwrap();
            let slow = spectral::brute_force_ft(&field, FftDirection::Forward).unwrap();
            worst = worst.max(fast.max_abs_diff(&slow));
            let fast_inv = spectral::inverse_ft(&fast).unwrap();
            let slow_inv = spectral::brute_force_ft(&slow, FftDirection::Inverse).unwrap();
            worst = worst.max(fast_inv.max_abs_diff(&slow_inv));
        }
    }
    CheckResult::new(
        "11-oracle-equivalence",
        worst,
        TOL_COMPONENTS,
        "FFT path vs literal double sum, all grids to 8x8, 20 seeds".into(),
    )
}

/// H applied through the brute-force transform pair instead of the FFT:
/// the oracle route used to freeze the orientation-reconstruction baseline.
fn hilbert_via_oracle(field: &MultivectorField, m: &MultiplierField) -> MultivectorField {
    let spec = spectral::brute_force_ft(field, FftDirection::Forward).unwrap();
    let filtered = apply_multiplier(&spec, m).unwrap();
    spectral::brute_force_ft(&filtered, FftDirection::Inverse).unwrap()
}

fn orientation_surrogate(v_hat: &[Vec<f64>; 3], shape: &[usize]) -> MultivectorField {
    let mut field = MultivectorField::zeros(shape, 3, Domain::Spatial);
    for cell in 0..field.cells() {
        let c = field.cell_mut(cell);
        c[0b110] = v_hat[0][cell];
        c[0b101] = -v_hat[1][cell];
        c[0b011] = v_hat[2][cell];
    }
    field
}

fn check_orientation_reconstruction() -> CheckResult {
    let mut worst = 0.0f64;
    let mut detail = String::new();

    // Regression against the stored oracle-generated baseline on 8x8.
    let grid = FrequencyGrid::new(&[8, 8]);
    let m = make_monogenic(&grid).unwrap();
    let f = fixtures::orientation_input(&grid);
    let d = decompose(&f, &m).unwrap();
    let v_hat = d.v_hat().unwrap();
    // The oracle route must match the stored values exactly.
    let oracle = hilbert_via_oracle(&orientation_surrogate(v_hat, grid.shape()), &m);
    let oracle_out = oracle.scalar_plane();
    let frozen = fixtures::ORIENTATION_BASELINE_8X8;
    let exact = oracle_out
        .iter()
        .zip(frozen.iter())
        .all(|(a, b)| a.to_bits() == b.to_bits());
    if !exact {
        worst = f64::INFINITY;
        detail.push_str("oracle route drifted from frozen baseline; ");
    }
    // The production route agrees with the baseline at FFT tolerance.
    let produced = reconstruct_from_orientation(v_hat, &m).unwrap();
    worst = worst.max(max_abs_diff(&produced, &frozen));

    // Smoke contract on a 32x32 multi-cosine: finite output, positive
    // correlation with the original. The reconstruction is not exact by
    // design; only its feature-preserving tendency is checked.
    let grid = grid32();
    let m = make_monogenic(&grid).unwrap();
    let f = fixtures::orientation_input(&grid);
    let d = decompose(&f, &m).unwrap();
    let out = reconstruct_from_orientation(d.v_hat().unwrap(), &m).unwrap();
    if !out.iter().all(|v| v.is_finite()) {
        worst = f64::INFINITY;
        detail.push_str("non-finite output; ");
    }
    let corr = pearson(&out, &f).unwrap_or(0.0);
    if corr <= 0.0 {
        worst = f64::INFINITY;
        detail.push_str(&format!("correlation {corr:.3} not positive; "));
    } else {
        detail.push_str(&format!("correlation {corr:.3}; "));
    }
    detail.push_str("baseline regression on 8x8");
    CheckResult::new(
        "12-orientation-reconstruction",
        worst,
        TOL_COMPONENTS,
        detail,
    )
}
