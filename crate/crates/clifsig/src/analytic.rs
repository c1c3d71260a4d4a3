//! The transform engine: extended Hilbert transform, analytic signals,
//! magnitude/phase/orientation decomposition, named partial transforms, and
//! reconstruction.
//!
//! The operator H multiplies the spectrum by a(w) on the left,
//! H[g] = F^-1[a(w) F[g](w)]. Since a(w)^2 = 1 on active bins, applying H
//! twice restores whatever content those bins carry; content on the
//! exceptional set is dropped by vector-kind multipliers (a = 0 there), so
//! the toggle contracts hold for signals cleaned with
//! [`remove_exceptional`].

use rustfft::num_complex::Complex;
use rustfft::FftDirection;

use crate::error::{Error, Result};
use crate::field::{Domain, MultivectorField};
use crate::ga::AlgebraTable;
use crate::grid::FrequencyGrid;
use crate::multipliers::{MultiplierField, MultiplierKind, SymmetryClass};
use crate::parallel;
use crate::spectral;

/// Orientation and magnitude data are flagged invalid below this fraction of
/// the field's peak magnitude; angles there are defined as 0 and unit
/// vectors as the zero vector so no NaN can leak into exports.
pub const VALID_FRACTION: f64 = 1e-12;

/// Apply the multiplier to a frequency-domain field, bin by bin, from the
/// left.
pub fn apply_multiplier(
    spectrum: &MultivectorField,
    multiplier: &MultiplierField,
) -> Result<MultivectorField> {
    spectrum.expect_domain(Domain::Frequency)?;
    spectrum.expect_shape(multiplier.grid().shape())?;
    let table = AlgebraTable::get(3);
    let blades = spectrum.blade_count();
    let mut out = MultivectorField::zeros(spectrum.shape(), 3, Domain::Frequency);
    let a = multiplier.values().data();
    let g = spectrum.data();
    parallel::for_each_chunk_mut(out.data_mut(), blades, |cell, out_cell| {
        let lo = cell * blades;
        table.product_acc(&a[lo..lo + blades], &g[lo..lo + blades], out_cell);
    });
    Ok(out)
}

/// The extended Hilbert operator H on an arbitrary spatial multivector
/// field: forward transform, per-bin left multiplication, inverse transform.
pub fn hilbert_of_field(
    field: &MultivectorField,
    multiplier: &MultiplierField,
) -> Result<MultivectorField> {
    multiplier.validate()?;
    let spectrum = spectral::forward_ft(field)?;
    let filtered = apply_multiplier(&spectrum, multiplier)?;
    spectral::inverse_ft(&filtered)
}

/// Extended Hilbert transform of a real signal.
pub fn extended_hilbert(f: &[f64], multiplier: &MultiplierField) -> Result<MultivectorField> {
    let shape = multiplier.grid().shape();
    if f.len() != multiplier.grid().len() {
        return Err(Error::ShapeMismatch {
            expected: shape.to_vec(),
            got: vec![f.len()],
        });
    }
    let field = MultivectorField::from_real(shape, 3, f);
    hilbert_of_field(&field, multiplier)
}

/// The analytic signal f_A = f/2 + H[f]/2.
pub fn analytic_signal(f: &[f64], multiplier: &MultiplierField) -> Result<MultivectorField> {
    let f_h = extended_hilbert(f, multiplier)?;
    let mut out = f_h.scaled(0.5);
    let blades = out.blade_count();
    for (cell, &v) in f.iter().enumerate() {
        out.data_mut()[cell * blades] += 0.5 * v;
    }
    Ok(out)
}

/// Recover the scalar signal from its extended Hilbert transform by applying
/// H once more. Exact (up to FFT round-off) for content on active bins.
pub fn reconstruct(f_h: &MultivectorField, multiplier: &MultiplierField) -> Result<Vec<f64>> {
    let back = hilbert_of_field(f_h, multiplier)?;
    Ok(back.scalar_plane())
}

/// Split a real signal into the part supported on the multiplier's active
/// bins and the dropped remainder: returns (clean, removed) with
/// clean + removed == f up to FFT round-off. The toggle and reconstruction
/// contracts apply to the clean part.
pub fn remove_exceptional(f: &[f64], multiplier: &MultiplierField) -> Result<(Vec<f64>, Vec<f64>)> {
    let grid = multiplier.grid();
    if f.len() != grid.len() {
        return Err(Error::ShapeMismatch {
            expected: grid.shape().to_vec(),
            got: vec![f.len()],
        });
    }
    let mut buf: Vec<Complex<f64>> = f.iter().map(|&v| Complex::new(v, 0.0)).collect();
    spectral::complex_ft(&mut buf, grid.shape(), FftDirection::Forward);
    for (bin, z) in buf.iter_mut().enumerate() {
        if !multiplier.active(bin) {
            *z = Complex::new(0.0, 0.0);
        }
    }
    spectral::complex_ft(&mut buf, grid.shape(), FftDirection::Inverse);
    let clean: Vec<f64> = buf.iter().map(|z| z.re).collect();
    let removed: Vec<f64> = f.iter().zip(&clean).map(|(a, b)| a - b).collect();
    Ok((clean, removed))
}

/// Named scalar fields extracted from the extended Hilbert transform.
///
/// For scalar-kind multipliers f_H = re + I_3 im. For vector-kind
/// multipliers f_H = I_3 (v1 e1 + v2 e2 + v3 e3) + (w1 e1 + w2 e2 + w3 e3),
/// stored here as the component planes `v` and `w`; generic multipliers make
/// `w` (and `re`) vanish.
#[allow(clippy::large_enum_variant)] // one per decomposition, vectors dominate anyway
pub enum HilbertParts {
    Scalar {
        re: Vec<f64>,
        im: Vec<f64>,
    },
    Vector {
        v: [Vec<f64>; 3],
        w: [Vec<f64>; 3],
        /// |v| per cell.
        v_norm: Vec<f64>,
        /// v / |v| per cell, zero where invalid.
        v_hat: [Vec<f64>; 3],
        /// Orientation angle atan2(v2, v1), zero where invalid.
        sigma: Vec<f64>,
        /// Elevation angle asin(v3 / |v|), zero where invalid.
        kappa: Vec<f64>,
        /// False where |v| is below the validity threshold.
        orient_valid: Vec<bool>,
    },
}

/// Everything the decomposition pipeline produces for one (signal,
/// multiplier) pair.
pub struct AnalyticDecomposition {
    pub shape: Vec<usize>,
    pub kind: MultiplierKind,
    pub class: SymmetryClass,
    /// The analyzed signal.
    pub f: Vec<f64>,
    /// Extended Hilbert transform H[f].
    pub f_hilbert: MultivectorField,
    /// Analytic signal f/2 + H[f]/2.
    pub f_analytic: MultivectorField,
    /// |f_H| per cell: |im| for scalar kind, |v| for vector kind.
    pub hilbert_norm: Vec<f64>,
    /// Magnitude R = sqrt(f^2 + |f_H|^2).
    pub magnitude: Vec<f64>,
    /// Phase angle atan2(|f_H|, f) in [0, pi].
    pub theta: Vec<f64>,
    /// False where R is below the validity threshold.
    pub valid: Vec<bool>,
    pub parts: HilbertParts,
}

impl AnalyticDecomposition {
    /// Orientation angle field; scalar-kind decompositions have none.
    pub fn sigma(&self) -> Result<&[f64]> {
        match &self.parts {
            HilbertParts::Vector { sigma, .. } => Ok(sigma),
            HilbertParts::Scalar { .. } => Err(Error::ScalarKind),
        }
    }

    /// Elevation angle field; scalar-kind decompositions have none.
    pub fn kappa(&self) -> Result<&[f64]> {
        match &self.parts {
            HilbertParts::Vector { kappa, .. } => Ok(kappa),
            HilbertParts::Scalar { .. } => Err(Error::ScalarKind),
        }
    }

    pub fn v_hat(&self) -> Result<&[Vec<f64>; 3]> {
        match &self.parts {
            HilbertParts::Vector { v_hat, .. } => Ok(v_hat),
            HilbertParts::Scalar { .. } => Err(Error::ScalarKind),
        }
    }
}

/// Blade bookkeeping for the vector branch: I_3 e1 = e2e3, I_3 e2 = -e1e3,
/// I_3 e3 = e1e2, so v rides the grade-2 blades and w the grade-1 blades.
fn vector_parts(f_h: &MultivectorField) -> ([Vec<f64>; 3], [Vec<f64>; 3]) {
    let v = [
        f_h.blade_plane(0b110),
        f_h.blade_plane(0b101).iter().map(|x| -x).collect(),
        f_h.blade_plane(0b011),
    ];
    let w = [
        f_h.blade_plane(0b001),
        f_h.blade_plane(0b010),
        f_h.blade_plane(0b100),
    ];
    (v, w)
}

/// Full decomposition of a real signal under a multiplier.
pub fn decompose(f: &[f64], multiplier: &MultiplierField) -> Result<AnalyticDecomposition> {
    let f_hilbert = extended_hilbert(f, multiplier)?;
    let mut f_analytic = f_hilbert.scaled(0.5);
    let blades = f_analytic.blade_count();
    for (cell, &v) in f.iter().enumerate() {
        f_analytic.data_mut()[cell * blades] += 0.5 * v;
    }
    let cells = f.len();

    let (hilbert_norm, parts) = match multiplier.kind() {
        MultiplierKind::Scalar => {
            let re = f_hilbert.blade_plane(0);
            let im = f_hilbert.blade_plane(0b111);
            let norm: Vec<f64> = im.iter().map(|x| x.abs()).collect();
            (norm, HilbertParts::Scalar { re, im })
        }
        MultiplierKind::VectorPseudovector => {
            let (v, w) = vector_parts(&f_hilbert);
            let v_norm: Vec<f64> = (0..cells)
                .map(|c| (v[0][c] * v[0][c] + v[1][c] * v[1][c] + v[2][c] * v[2][c]).sqrt())
                .collect();
            let peak = v_norm.iter().fold(0.0f64, |m, &x| m.max(x));
            let threshold = VALID_FRACTION * peak;
            let orient_valid: Vec<bool> = v_norm.iter().map(|&n| n > threshold).collect();
            let mut v_hat = [vec![0.0; cells], vec![0.0; cells], vec![0.0; cells]];
            let mut sigma = vec![0.0; cells];
            let mut kappa = vec![0.0; cells];
            for c in 0..cells {
                if !orient_valid[c] {
                    continue;
                }
                for k in 0..3 {
                    v_hat[k][c] = v[k][c] / v_norm[c];
                }
                sigma[c] = v[1][c].atan2(v[0][c]);
                kappa[c] = (v[2][c] / v_norm[c]).clamp(-1.0, 1.0).asin();
            }
            (
                v_norm.clone(),
                HilbertParts::Vector {
                    v,
                    w,
                    v_norm,
                    v_hat,
                    sigma,
                    kappa,
                    orient_valid,
                },
            )
        }
    };

    let magnitude: Vec<f64> = f
        .iter()
        .zip(&hilbert_norm)
        .map(|(&a, &b)| (a * a + b * b).sqrt())
        .collect();
    let peak = magnitude.iter().fold(0.0f64, |m, &x| m.max(x));
    let threshold = VALID_FRACTION * peak;
    let valid: Vec<bool> = magnitude.iter().map(|&r| r > threshold).collect();
    let theta: Vec<f64> = (0..cells)
        .map(|c| {
            if valid[c] {
                hilbert_norm[c].atan2(f[c])
            } else {
                0.0
            }
        })
        .collect();

    Ok(AnalyticDecomposition {
        shape: multiplier.grid().shape().to_vec(),
        kind: multiplier.kind(),
        class: multiplier.classify(),
        f: f.to_vec(),
        f_hilbert,
        f_analytic,
        hilbert_norm,
        magnitude,
        theta,
        valid,
        parts,
    })
}

/// The classical 1-D analytic decomposition via the sign multiplier.
pub fn classical_1d(f: &[f64]) -> Result<AnalyticDecomposition> {
    let grid = FrequencyGrid::new(&[f.len()]);
    let multiplier = crate::multipliers::make_sgn_1d(&grid)?;
    decompose(f, &multiplier)
}

/// Partial, total, and Riesz Hilbert transforms of a 2-D real signal.
///
/// Computed entirely in the {1, I_3} complex plane with scalar multipliers:
/// the odd ones (sgn(w1), sgn(w2), w_k/|w|) carry a -I_3 factor so the
/// output is real, the even product sgn(w1) sgn(w2) applies directly. This
/// is a deliberately separate route from the multivector engine; the
/// component identities of the named signals are checked against it.
pub struct PartialTransforms {
    pub f_h1: Vec<f64>,
    pub f_h2: Vec<f64>,
    pub f_ht: Vec<f64>,
    pub f_r1: Vec<f64>,
    pub f_r2: Vec<f64>,
}

pub fn partial_transforms(f: &[f64], shape: &[usize]) -> Result<PartialTransforms> {
    if shape.len() != 2 {
        return Err(Error::BadParameter(format!(
            "partial transforms require a 2-D grid, got rank {}",
            shape.len()
        )));
    }
    let grid = FrequencyGrid::new(shape);
    if f.len() != grid.len() {
        return Err(Error::ShapeMismatch {
            expected: shape.to_vec(),
            got: vec![f.len()],
        });
    }
    let mut spectrum: Vec<Complex<f64>> = f.iter().map(|&v| Complex::new(v, 0.0)).collect();
    spectral::complex_ft(&mut spectrum, shape, FftDirection::Forward);

    let filtered = |weight: &dyn Fn(usize) -> Complex<f64>| -> Vec<f64> {
        let mut buf: Vec<Complex<f64>> = spectrum
            .iter()
            .enumerate()
            .map(|(bin, z)| z * weight(bin))
            .collect();
        spectral::complex_ft(&mut buf, shape, FftDirection::Inverse);
        buf.iter().map(|z| z.re).collect()
    };

    let minus_i = Complex::new(0.0, -1.0);
    let riesz = |bin: usize, axis: usize| -> f64 {
        if grid.self_paired(bin) || grid.has_nyquist(bin) {
            return 0.0;
        }
        let w = grid.omega(bin);
        let r = grid.omega_norm(bin);
        if r == 0.0 {
            0.0
        } else {
            w[axis] as f64 / r
        }
    };

    Ok(PartialTransforms {
        f_h1: filtered(&|bin| minus_i * grid.sgn(bin, 0)),
        f_h2: filtered(&|bin| minus_i * grid.sgn(bin, 1)),
        f_ht: filtered(&|bin| Complex::new(grid.sgn(bin, 0) * grid.sgn(bin, 1), 0.0)),
        f_r1: filtered(&|bin| minus_i * riesz(bin, 0)),
        f_r2: filtered(&|bin| minus_i * riesz(bin, 1)),
    })
}

/// Rebuild a signal from the unit orientation vector alone.
///
/// Applies H to I_3 v-hat(x), a unit-magnitude stand-in for the true
/// extended Hilbert transform, and returns the scalar part. This does not
/// fully recover the signal; it is a feature-preserving surrogate, checked
/// only against stored baselines and a positive-correlation smoke test.
pub fn reconstruct_from_orientation(
    v_hat: &[Vec<f64>; 3],
    multiplier: &MultiplierField,
) -> Result<Vec<f64>> {
    let grid = multiplier.grid();
    let cells = grid.len();
    for plane in v_hat {
        if plane.len() != cells {
            return Err(Error::ShapeMismatch {
                expected: grid.shape().to_vec(),
                got: vec![plane.len()],
            });
        }
    }
    let mut field = MultivectorField::zeros(grid.shape(), 3, Domain::Spatial);
    for cell in 0..cells {
        let (x, y, z) = (v_hat[0][cell], v_hat[1][cell], v_hat[2][cell]);
        let norm = (x * x + y * y + z * z).sqrt();
        if norm <= 1e-6 {
            continue; // cells with no defined orientation stay zero
        }
        if (norm - 1.0).abs() > 1e-6 {
            return Err(Error::NonUnitOrientation { cell, norm });
        }
        let c = field.cell_mut(cell);
        c[0b110] = x;
        c[0b101] = -y;
        c[0b011] = z;
    }
    let back = hilbert_of_field(&field, multiplier)?;
    Ok(back.scalar_plane())
}

/// Sampled cosine of a grid frequency: cos(2 pi sum_k w_k x_k / N_k).
pub fn cosine_field(grid: &FrequencyGrid, omega: &[i64]) -> Vec<f64> {
    assert_eq!(omega.len(), grid.rank());
    (0..grid.len())
        .map(|cell| {
            let x = grid.unflat(cell);
            let phase: f64 = x
                .iter()
                .zip(omega)
                .zip(grid.shape())
                .map(|((&xi, &wi), &n)| xi as f64 * wi as f64 / n as f64)
                .sum();
            (std::f64::consts::TAU * phase).cos()
        })
        .collect()
}

/// Pearson correlation coefficient; `None` when either input is constant.
pub fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    assert_eq!(a.len(), b.len());
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        cov += (x - ma) * (y - mb);
        va += (x - ma) * (x - ma);
        vb += (y - mb) * (y - mb);
    }
    if va == 0.0 || vb == 0.0 {
        None
    } else {
        Some(cov / (va * vb).sqrt())
    }
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipliers::{
        make_hahn, make_hypercomplex, make_modified_hypercomplex, make_monogenic,
        make_random_unit, make_scalar_set, make_sgn_1d,
    };
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_signal(cells: usize, seed: u64) -> Vec<f64> {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..cells).map(|_| rng.gen_range(-1.0..1.0)).collect()
    }

    fn sine_field(grid: &FrequencyGrid, omega: &[i64]) -> Vec<f64> {
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

    #[test]
    fn sgn_1d_cosine_becomes_i3_sine() {
        let grid = FrequencyGrid::new(&[32]);
        let m = make_sgn_1d(&grid).unwrap();
        let f = cosine_field(&grid, &[5]);
        let f_h = extended_hilbert(&f, &m).unwrap();
        let s = sine_field(&grid, &[5]);
        assert!(max_abs_diff(&f_h.blade_plane(0b111), &s) <= 1e-10);
        for blade in 0..7 {
            assert!(f_h.blade_plane(blade).iter().all(|v| v.abs() <= 1e-10));
        }
    }

    #[test]
    fn ordinary_2d_cosine_law() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let m = make_monogenic(&grid).unwrap();
        let omega = [3i64, 4];
        let f = cosine_field(&grid, &omega);
        let f_h = extended_hilbert(&f, &m).unwrap();
        let s = sine_field(&grid, &omega);
        // f_H = I_3 (0.6 e1 + 0.8 e2) sin: blades e2e3, -e1e3.
        let expect_v1: Vec<f64> = s.iter().map(|x| 0.6 * x).collect();
        let expect_v2: Vec<f64> = s.iter().map(|x| 0.8 * x).collect();
        assert!(max_abs_diff(&f_h.blade_plane(0b110), &expect_v1) <= 1e-9);
        let got_v2: Vec<f64> = f_h.blade_plane(0b101).iter().map(|x| -x).collect();
        assert!(max_abs_diff(&got_v2, &expect_v2) <= 1e-9);
        for blade in [0b000, 0b001, 0b010, 0b100, 0b011, 0b111] {
            assert!(f_h.blade_plane(blade).iter().all(|v| v.abs() <= 1e-9));
        }
    }

    #[test]
    fn zero_in_zero_out() {
        let grid = FrequencyGrid::new(&[8, 8]);
        let m = make_monogenic(&grid).unwrap();
        let f = vec![0.0; 64];
        assert_eq!(extended_hilbert(&f, &m).unwrap().max_abs(), 0.0);
        assert_eq!(reconstruct(&MultivectorField::zeros(&[8, 8], 3, Domain::Spatial), &m).unwrap(), vec![0.0; 64]);
    }

    #[test]
    fn general_cosine_response_matches_multiplier_split() {
        // f_H(cos) = a_e(w_c) cos + I_3 a_o(w_c) sin for any multiplier,
        // with a_e, a_o the even/odd parts over the +/-w_c pair.
        let grid = FrequencyGrid::new(&[16, 16]);
        let omega = [2i64, 5];
        let f = cosine_field(&grid, &omega);
        let s = sine_field(&grid, &omega);
        let i3 = crate::ga::Multivector::pseudoscalar(3);
        for m in [
            make_hahn(&grid).unwrap(),
            make_hypercomplex(&grid).unwrap(),
            make_monogenic(&grid).unwrap(),
        ] {
            let bin = (0..grid.len()).find(|&b| grid.omega(b) == omega).unwrap();
            let a_plus = m.values().get(bin);
            let a_minus = m.values().get(grid.negate(bin));
            let a_even = (&a_plus + &a_minus).scaled(0.5);
            let a_odd = (&a_plus - &a_minus).scaled(0.5);
            let i3_a_odd = &i3 * &a_odd;
            let f_h = extended_hilbert(&f, &m).unwrap();
            let mut expect = MultivectorField::zeros(grid.shape(), 3, Domain::Spatial);
            for cell in 0..grid.len() {
                let mv = &a_even.scaled(f[cell]) + &i3_a_odd.scaled(s[cell]);
                expect.set(cell, &mv);
            }
            assert!(f_h.max_abs_diff(&expect) <= 1e-9, "{}", m.name());
        }
    }

    #[test]
    fn analytic_signal_1d_kills_negative_bins() {
        let grid = FrequencyGrid::new(&[64]);
        let m = make_sgn_1d(&grid).unwrap();
        let f = cosine_field(&grid, &[7]);
        let f_a = analytic_signal(&f, &m).unwrap();
        // Spatial form: cos/2 + I_3 sin/2.
        let s = sine_field(&grid, &[7]);
        for cell in 0..64 {
            assert!((f_a.cell(cell)[0] - f[cell] / 2.0).abs() <= 1e-10);
            assert!((f_a.cell(cell)[0b111] - s[cell] / 2.0).abs() <= 1e-10);
        }
        // Frequency support: nothing on negative bins.
        let spec = spectral::forward_ft(&f_a).unwrap();
        let peak = spec.max_abs();
        for bin in 0..64 {
            if grid.omega(bin)[0] < 0 {
                let mag: f64 = spec.cell(bin).iter().map(|c| c.abs()).fold(0.0, f64::max);
                assert!(mag <= 1e-10 * peak, "bin {bin}");
            }
        }
    }

    #[test]
    fn double_application_is_identity_1d() {
        let grid = FrequencyGrid::new(&[64]);
        let m = make_sgn_1d(&grid).unwrap();
        let raw = random_signal(64, 4);
        let (f, _) = remove_exceptional(&raw, &m).unwrap();
        let f_h = extended_hilbert(&f, &m).unwrap();
        let back = reconstruct(&f_h, &m).unwrap();
        assert!(max_abs_diff(&back, &f) <= 1e-10);
        // Fixed point: f_A = H[f_A].
        let f_a = analytic_signal(&f, &m).unwrap();
        let h_f_a = hilbert_of_field(&f_a, &m).unwrap();
        assert!(h_f_a.max_abs_diff(&f_a) <= 1e-10);
    }

    #[test]
    fn toggle_identity_all_constructors_32x32() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let raw = random_signal(1024, 10);
        let constructors: Vec<MultiplierField> = vec![
            make_hahn(&grid).unwrap(),
            make_hypercomplex(&grid).unwrap(),
            make_modified_hypercomplex(&grid).unwrap(),
            make_monogenic(&grid).unwrap(),
            make_random_unit(&grid, 99).unwrap(),
            make_scalar_set(&grid, |w| w[0] >= w[1]).unwrap(),
        ];
        for m in constructors {
            let (f, _) = remove_exceptional(&raw, &m).unwrap();
            let f_h = extended_hilbert(&f, &m).unwrap();
            let back = reconstruct(&f_h, &m).unwrap();
            assert!(
                max_abs_diff(&back, &f) <= 1e-8,
                "{}: {}",
                m.name(),
                max_abs_diff(&back, &f)
            );
        }
    }

    #[test]
    fn removed_plus_clean_reassembles() {
        let grid = FrequencyGrid::new(&[16, 16]);
        let m = make_monogenic(&grid).unwrap();
        let raw = random_signal(256, 17);
        let (clean, removed) = remove_exceptional(&raw, &m).unwrap();
        let sum: Vec<f64> = clean.iter().zip(&removed).map(|(a, b)| a + b).collect();
        assert!(max_abs_diff(&sum, &raw) <= 1e-12);
    }

    #[test]
    fn hahn_components_match_partial_transforms() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let m = make_hahn(&grid).unwrap();
        let raw = random_signal(1024, 5);
        let (f, _) = remove_exceptional(&raw, &m).unwrap();
        let pt = partial_transforms(&f, grid.shape()).unwrap();
        let f_a = analytic_signal(&f, &m).unwrap();
        let expect_scalar: Vec<f64> = f
            .iter()
            .zip(&pt.f_ht)
            .map(|(a, b)| (a + b) / 4.0)
            .collect();
        let expect_pseudo: Vec<f64> = pt
            .f_h1
            .iter()
            .zip(&pt.f_h2)
            .map(|(a, b)| (a + b) / 4.0)
            .collect();
        assert!(max_abs_diff(&f_a.blade_plane(0), &expect_scalar) <= 1e-9);
        assert!(max_abs_diff(&f_a.blade_plane(0b111), &expect_pseudo) <= 1e-9);
    }

    #[test]
    fn hahn_spectrum_confined_to_first_quadrant() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let m = make_hahn(&grid).unwrap();
        let raw = random_signal(1024, 8);
        let (f, _) = remove_exceptional(&raw, &m).unwrap();
        let f_a = analytic_signal(&f, &m).unwrap();
        let spec = spectral::forward_ft(&f_a).unwrap();
        let peak = spec.max_abs();
        for bin in 0..grid.len() {
            let w = grid.omega(bin);
            if !(w[0] >= 0 && w[1] >= 0) {
                let mag: f64 = spec.cell(bin).iter().map(|c| c.abs()).fold(0.0, f64::max);
                assert!(mag <= 1e-10 * peak, "bin {:?}", w);
            }
        }
    }

    #[test]
    fn hypercomplex_components_match_partial_transforms() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let m = make_hypercomplex(&grid).unwrap();
        let raw = random_signal(1024, 6);
        let (f, _) = remove_exceptional(&raw, &m).unwrap();
        let pt = partial_transforms(&f, grid.shape()).unwrap();
        let d = decompose(&f, &m).unwrap();
        match &d.parts {
            HilbertParts::Vector { v, w, .. } => {
                assert!(max_abs_diff(&v[0], &pt.f_h1) <= 1e-9);
                assert!(max_abs_diff(&v[1], &pt.f_h2) <= 1e-9);
                assert!(max_abs_diff(&v[2], &pt.f_ht) <= 1e-9);
                for plane in w {
                    assert!(plane.iter().all(|x| x.abs() <= 1e-10));
                }
            }
            _ => panic!("vector parts expected"),
        }
    }

    #[test]
    fn monogenic_components_are_riesz_transforms() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let m = make_monogenic(&grid).unwrap();
        let raw = random_signal(1024, 13);
        let (f, _) = remove_exceptional(&raw, &m).unwrap();
        let pt = partial_transforms(&f, grid.shape()).unwrap();
        let d = decompose(&f, &m).unwrap();
        match &d.parts {
            HilbertParts::Vector { v, .. } => {
                assert!(max_abs_diff(&v[0], &pt.f_r1) <= 1e-9);
                assert!(max_abs_diff(&v[1], &pt.f_r2) <= 1e-9);
                assert!(v[2].iter().all(|x| x.abs() <= 1e-9));
            }
            _ => panic!("vector parts expected"),
        }
    }

    #[test]
    fn riesz_of_interior_cosine() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let omega = [3i64, 4];
        let f = cosine_field(&grid, &omega);
        let pt = partial_transforms(&f, grid.shape()).unwrap();
        let s = sine_field(&grid, &omega);
        let expect: Vec<f64> = s.iter().map(|x| 0.6 * x).collect();
        assert!(max_abs_diff(&pt.f_r1, &expect) <= 1e-9);
    }

    #[test]
    fn partial_transforms_of_axis_cosine() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let f = cosine_field(&grid, &[5, 0]);
        let pt = partial_transforms(&f, grid.shape()).unwrap();
        let s = sine_field(&grid, &[5, 0]);
        assert!(max_abs_diff(&pt.f_h1, &s) <= 1e-10);
        assert!(pt.f_h2.iter().all(|x| x.abs() <= 1e-10));
        assert!(pt.f_ht.iter().all(|x| x.abs() <= 1e-10));
    }

    #[test]
    fn decompose_monogenic_cosine_polar_fields() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let m = make_monogenic(&grid).unwrap();
        let omega = [3i64, 4];
        let f = cosine_field(&grid, &omega);
        let d = decompose(&f, &m).unwrap();
        assert_eq!(d.class, SymmetryClass::Ordinary);
        // R = 1 everywhere, theta = phase folded to [0, pi].
        for cell in 0..grid.len() {
            assert!((d.magnitude[cell] - 1.0).abs() <= 1e-9);
            let x = grid.unflat(cell);
            let phase = std::f64::consts::TAU
                * (x[0] as f64 * 3.0 / 32.0 + x[1] as f64 * 4.0 / 32.0);
            let folded = {
                let p = phase.rem_euclid(std::f64::consts::TAU);
                p.min(std::f64::consts::TAU - p)
            };
            assert!((d.theta[cell] - folded).abs() <= 1e-9, "cell {cell}");
        }
        // Orientation: +/- (0.6, 0.8) with the sign of sin(phase).
        let s = sine_field(&grid, &omega);
        match &d.parts {
            HilbertParts::Vector {
                v_hat,
                orient_valid,
                kappa,
                ..
            } => {
                for cell in 0..grid.len() {
                    if !orient_valid[cell] || s[cell].abs() < 1e-6 {
                        continue;
                    }
                    let sign = s[cell].signum();
                    assert!((v_hat[0][cell] - 0.6 * sign).abs() <= 1e-7);
                    assert!((v_hat[1][cell] - 0.8 * sign).abs() <= 1e-7);
                    assert!(kappa[cell].abs() <= 1e-9);
                }
            }
            _ => panic!("vector parts expected"),
        }
    }

    #[test]
    fn decompose_constant_signal() {
        let grid = FrequencyGrid::new(&[16, 16]);
        let m = make_monogenic(&grid).unwrap();
        let f = vec![0.75; 256];
        let d = decompose(&f, &m).unwrap();
        for cell in 0..256 {
            assert!(d.f_hilbert.cell(cell).iter().all(|x| x.abs() <= 1e-12));
            assert!((d.magnitude[cell] - 0.75).abs() <= 1e-12);
            assert_eq!(d.theta[cell], 0.0);
        }
        match &d.parts {
            HilbertParts::Vector { orient_valid, .. } => {
                assert!(orient_valid.iter().all(|&v| !v));
            }
            _ => panic!("vector parts expected"),
        }
    }

    #[test]
    fn scalar_kind_decomposition_refuses_orientation() {
        let grid = FrequencyGrid::new(&[16, 16]);
        let m = make_hahn(&grid).unwrap();
        let d = decompose(&random_signal(256, 1), &m).unwrap();
        assert!(matches!(d.sigma(), Err(Error::ScalarKind)));
        assert!(matches!(d.kappa(), Err(Error::ScalarKind)));
    }

    #[test]
    fn generic_scalar_multiplier_kills_re_part() {
        // Odd half-space scalar set: m_e = 0, so f_H has no scalar part.
        let grid = FrequencyGrid::new(&[16, 16]);
        let m = make_scalar_set(&grid, |w| w[0] > 0 || (w[0] == 0 && w[1] > 0)).unwrap();
        assert_eq!(m.classify(), SymmetryClass::Ordinary);
        let raw = random_signal(256, 2);
        let (f, _) = remove_exceptional(&raw, &m).unwrap();
        let d = decompose(&f, &m).unwrap();
        match &d.parts {
            HilbertParts::Scalar { re, .. } => {
                assert!(re.iter().all(|x| x.abs() <= 1e-10));
            }
            _ => panic!("scalar parts expected"),
        }
    }

    #[test]
    fn hypercomplex_kappa_generally_nonzero() {
        let grid = FrequencyGrid::new(&[32, 32]);
        let m = make_hypercomplex(&grid).unwrap();
        let raw = random_signal(1024, 30);
        let (f, _) = remove_exceptional(&raw, &m).unwrap();
        let d = decompose(&f, &m).unwrap();
        let kappa = d.kappa().unwrap();
        let max_kappa = kappa.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
        assert!(max_kappa > 0.01, "kappa should not vanish: {max_kappa}");
        // And kappa = asin(v3 / |v|) by definition.
        match &d.parts {
            HilbertParts::Vector {
                v, v_norm, kappa, orient_valid, ..
            } => {
                for cell in 0..1024 {
                    if orient_valid[cell] {
                        assert!((kappa[cell] - (v[2][cell] / v_norm[cell]).asin()).abs() <= 1e-12);
                    }
                }
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn orientation_reconstruction_contracts() {
        let grid = FrequencyGrid::new(&[16, 16]);
        let m = make_monogenic(&grid).unwrap();
        // Non-unit input is rejected.
        let bad = [vec![0.5; 256], vec![0.0; 256], vec![0.0; 256]];
        assert!(matches!(
            reconstruct_from_orientation(&bad, &m),
            Err(Error::NonUnitOrientation { .. })
        ));
        // A constant unit field concentrates on exceptional bins: output is
        // ~0 once the mean is removed.
        let constant = [vec![0.6; 256], vec![0.8; 256], vec![0.0; 256]];
        let out = reconstruct_from_orientation(&constant, &m).unwrap();
        let mean = out.iter().sum::<f64>() / 256.0;
        assert!(out.iter().all(|x| (x - mean).abs() <= 1e-10));
    }

    #[test]
    fn polar_identities_generic() {
        let grid = FrequencyGrid::new(&[32, 32]);
        for m in [
            make_hypercomplex(&grid).unwrap(),
            make_monogenic(&grid).unwrap(),
        ] {
            let raw = random_signal(1024, 23);
            let (f, _) = remove_exceptional(&raw, &m).unwrap();
            let d = decompose(&f, &m).unwrap();
            for cell in 0..1024 {
                if !d.valid[cell] {
                    continue;
                }
                let r = d.magnitude[cell];
                assert!((r * d.theta[cell].cos() - f[cell]).abs() <= 1e-10);
                assert!((r * d.theta[cell].sin() - d.hilbert_norm[cell]).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn orientation_spherical_reconstruction() {
        // v-hat = cos(kappa) cos(sigma) e1 + cos(kappa) sin(sigma) e2
        //       + sin(kappa) e3 wherever defined.
        let grid = FrequencyGrid::new(&[32, 32]);
        let m = make_hypercomplex(&grid).unwrap();
        let raw = random_signal(1024, 31);
        let (f, _) = remove_exceptional(&raw, &m).unwrap();
        let d = decompose(&f, &m).unwrap();
        match &d.parts {
            HilbertParts::Vector {
                v_hat,
                sigma,
                kappa,
                orient_valid,
                ..
            } => {
                for cell in 0..1024 {
                    if !orient_valid[cell] {
                        continue;
                    }
                    let (ck, sk) = (kappa[cell].cos(), kappa[cell].sin());
                    let (cs, ss) = (sigma[cell].cos(), sigma[cell].sin());
                    assert!((v_hat[0][cell] - ck * cs).abs() <= 1e-10);
                    assert!((v_hat[1][cell] - ck * ss).abs() <= 1e-10);
                    assert!((v_hat[2][cell] - sk).abs() <= 1e-10);
                }
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn unit_hilbert_direction_squares_to_minus_one() {
        let grid = FrequencyGrid::new(&[16, 16]);
        let m = make_monogenic(&grid).unwrap();
        let raw = random_signal(256, 40);
        let (f, _) = remove_exceptional(&raw, &m).unwrap();
        let d = decompose(&f, &m).unwrap();
        let i3 = crate::ga::Multivector::pseudoscalar(3);
        match &d.parts {
            HilbertParts::Vector { v_hat, orient_valid, .. } => {
                for cell in 0..256 {
                    if !orient_valid[cell] {
                        continue;
                    }
                    let mut v = crate::ga::Multivector::zero(3);
                    v.set_coeff(0b001, v_hat[0][cell]);
                    v.set_coeff(0b010, v_hat[1][cell]);
                    v.set_coeff(0b100, v_hat[2][cell]);
                    let dir = &i3 * &v;
                    let sq = &dir * &dir;
                    let expect = crate::ga::Multivector::scalar(3, -1.0);
                    assert!((&sq - &expect).max_abs() <= 1e-10);
                }
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn classical_1d_decomposition() {
        let grid = FrequencyGrid::new(&[64]);
        let f = cosine_field(&grid, &[5]);
        let d = classical_1d(&f).unwrap();
        assert_eq!(d.kind, crate::multipliers::MultiplierKind::Scalar);
        assert_eq!(d.class, SymmetryClass::Ordinary);
        // f_A = cos/2 + I_3 sin/2 and nothing on negative bins.
        let s = sine_field(&grid, &[5]);
        for cell in 0..64 {
            assert!((d.f_analytic.cell(cell)[0] - f[cell] / 2.0).abs() <= 1e-10);
            assert!((d.f_analytic.cell(cell)[0b111] - s[cell] / 2.0).abs() <= 1e-10);
        }
        // R = 1/|..| envelope: cos^2 + sin^2 = 1.
        for cell in 0..64 {
            assert!((d.magnitude[cell] - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let grid = FrequencyGrid::new(&[8, 8]);
        let m = make_monogenic(&grid).unwrap();
        assert!(matches!(
            extended_hilbert(&vec![0.0; 63], &m),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn pearson_basics() {
        let a = [1.0, 2.0, 3.0, 4.0];
        let b: Vec<f64> = a.iter().map(|x| 2.0 * x - 1.0).collect();
        assert!((pearson(&a, &b).unwrap() - 1.0).abs() < 1e-12);
        let c: Vec<f64> = a.iter().map(|x| -x).collect();
        assert!((pearson(&a, &c).unwrap() + 1.0).abs() < 1e-12);
        assert!(pearson(&a, &[5.0; 4]).is_none());
    }
}
