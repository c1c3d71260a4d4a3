//! Discrete Fourier analysis on G_3 fields with the unit pseudoscalar in the
//! role of the imaginary unit.
//!
//! G_3 splits into four planes that are each closed under multiplication by
//! I_3: {1, I_3} and {e_k, I_3 e_k} for k = 1, 2, 3. Because I_3 is central
//! and squares to -1, right-multiplying a field by exp(-I_3 x.w) acts on each
//! plane as an ordinary complex rotation, so the transform reduces to four
//! independent complex FFTs. `brute_force_ft` keeps the literal double-sum
//! definition as an O(M^2) oracle for the FFT path.
//!
//! Normalization: the forward transform is unnormalized and the inverse
//! carries the full 1/(N_1...N_N) factor.

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftDirection, FftPlanner};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Domain, MultivectorField};
use crate::ga::AlgebraTable;
use crate::parallel;

/// Largest cell count the brute-force oracle will accept.
pub const ORACLE_CELL_LIMIT: usize = 4096;

/// The four I_3-complex planes of G_3 as (real blade, imaginary blade, sign)
/// triples: the cell value restricted to a plane is
/// `coeffs[re] + I_3 * sign * coeffs[im]` times the plane's basis blade.
///
/// The minus sign on the e2 plane comes from I_3 e2 = -e1e3.
const PLANES: [(usize, usize, f64); 4] = [
    (0b000, 0b111, 1.0),
    (0b001, 0b110, 1.0),
    (0b010, 0b101, -1.0),
    (0b100, 0b011, 1.0),
];

fn require_dim3(field: &MultivectorField) -> Result<()> {
    if field.dim() != 3 {
        return Err(Error::UnsupportedDim { dim: field.dim() });
    }
    Ok(())
}

/// Forward GA Fourier transform (unnormalized).
pub fn forward_ft(field: &MultivectorField) -> Result<MultivectorField> {
    require_dim3(field)?;
    field.expect_domain(Domain::Spatial)?;
    let mut out = transform(field, FftDirection::Forward);
    out.set_domain(Domain::Frequency);
    Ok(out)
}

/// Inverse GA Fourier transform, scaled by 1/(number of cells).
pub fn inverse_ft(field: &MultivectorField) -> Result<MultivectorField> {
    require_dim3(field)?;
    field.expect_domain(Domain::Frequency)?;
    let mut out = transform(field, FftDirection::Inverse);
    let scale = 1.0 / out.cells() as f64;
    for v in out.data_mut() {
        *v *= scale;
    }
    out.set_domain(Domain::Spatial);
    Ok(out)
}

fn transform(field: &MultivectorField, direction: FftDirection) -> MultivectorField {
    let shape = field.shape().to_vec();
    let mut out = field.clone();
    let mut planner = FftPlanner::new();
    let ffts: Vec<Arc<dyn Fft<f64>>> = shape
        .iter()
        .map(|&n| planner.plan_fft(n, direction))
        .collect();
    // The four planes are independent fat tasks; the per-line FFTs inside
    // each plane parallelize further on larger pools.
    let planes = parallel::map_slice(&PLANES, |&(re, im, sign)| {
        let mut plane = gather_plane(field, re, im, sign);
        fft_all_axes(&mut plane, &shape, &ffts);
        plane
    });
    for (plane, &(re, im, sign)) in planes.iter().zip(&PLANES) {
        scatter_plane(&mut out, plane, re, im, sign);
    }
    out
}

fn gather_plane(field: &MultivectorField, re: usize, im: usize, sign: f64) -> Vec<Complex<f64>> {
    let blades = field.blade_count();
    let data = field.data();
    (0..field.cells())
        .map(|c| Complex::new(data[c * blades + re], sign * data[c * blades + im]))
        .collect()
}

fn scatter_plane(
    field: &mut MultivectorField,
    plane: &[Complex<f64>],
    re: usize,
    im: usize,
    sign: f64,
) {
    let blades = field.blade_count();
    let data = field.data_mut();
    for (c, z) in plane.iter().enumerate() {
        data[c * blades + re] = z.re;
        data[c * blades + im] = sign * z.im;
    }
}

/// Complex FFT of a row-major buffer over every axis of `shape`, for code
/// that works in a single I_3 plane (partial/Riesz transforms, exceptional
/// content removal).
pub fn complex_ft(buf: &mut [Complex<f64>], shape: &[usize], direction: FftDirection) {
    let mut planner = FftPlanner::new();
    let ffts: Vec<Arc<dyn Fft<f64>>> = shape
        .iter()
        .map(|&n| planner.plan_fft(n, direction))
        .collect();
    fft_all_axes(buf, shape, &ffts);
    if direction == FftDirection::Inverse {
        let scale = 1.0 / buf.len() as f64;
        for z in buf.iter_mut() {
            *z *= scale;
        }
    }
}

/// Run the per-axis FFTs over a row-major complex buffer of the given shape.
/// Rows (last axis) are transformed in place; the leading axis of a rank-2
/// grid is handled through a transpose so lines stay contiguous.
fn fft_all_axes(buf: &mut [Complex<f64>], shape: &[usize], ffts: &[Arc<dyn Fft<f64>>]) {
    match shape.len() {
        1 => fft_lines(buf, shape[0], &ffts[0]),
        2 => {
            let (rows, cols) = (shape[0], shape[1]);
            fft_lines(buf, cols, &ffts[1]);
            let mut t = transpose(buf, rows, cols);
            fft_lines(&mut t, rows, &ffts[0]);
            let back = transpose(&t, cols, rows);
            buf.copy_from_slice(&back);
        }
        r => panic!("transforms support rank 1 or 2 grids, got rank {r}"),
    }
}

fn fft_lines(buf: &mut [Complex<f64>], line: usize, fft: &Arc<dyn Fft<f64>>) {
    let scratch_len = fft.get_inplace_scratch_len();
    parallel::for_each_chunk_mut_with(
        buf,
        line,
        || vec![Complex::default(); scratch_len],
        |scratch, _, chunk| fft.process_with_scratch(chunk, scratch),
    );
}

fn transpose(buf: &[Complex<f64>], rows: usize, cols: usize) -> Vec<Complex<f64>> {
    let mut out = vec![Complex::default(); buf.len()];
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = buf[r * cols + c];
        }
    }
    out
}

/// Literal DFT double sum using the geometric product, exp(-I_3 x.w)
/// expanded as cos - I_3 sin. Independent of the per-plane FFT path; guarded
/// to small grids.
pub fn brute_force_ft(
    field: &MultivectorField,
    direction: FftDirection,
) -> Result<MultivectorField> {
    require_dim3(field)?;
    let cells = field.cells();
    if cells > ORACLE_CELL_LIMIT {
        return Err(Error::OracleGuard {
            cells,
            max: ORACLE_CELL_LIMIT,
        });
    }
    let shape = field.shape().to_vec();
    let grid = field.grid();
    let table = AlgebraTable::get(3);
    let mut out = field.clone();
    let (dir_sign, scale) = match direction {
        FftDirection::Forward => (-1.0, 1.0),
        FftDirection::Inverse => (1.0, 1.0 / cells as f64),
    };
    for target in 0..cells {
        let tv = grid.unflat(target);
        let mut acc = vec![0.0; 8];
        let mut kernel = vec![0.0; 8];
        for source in 0..cells {
            let sv = grid.unflat(source);
            let mut phase = 0.0;
            for (k, (&t, &s)) in tv.iter().zip(&sv).enumerate() {
                phase += (t * s) as f64 / shape[k] as f64;
            }
            phase *= 2.0 * std::f64::consts::PI * dir_sign;
            kernel.fill(0.0);
            kernel[0] = phase.cos();
            kernel[7] = phase.sin();
            table.product_acc(field.cell(source), &kernel, &mut acc);
        }
        for v in &mut acc {
            *v *= scale;
        }
        out.cell_mut(target).copy_from_slice(&acc);
    }
    out.set_domain(match direction {
        FftDirection::Forward => Domain::Frequency,
        FftDirection::Inverse => Domain::Spatial,
    });
    Ok(out)
}

/// Even/odd split of a spatial field under grid reflection x -> -x
/// (index negation modulo the shape). Returns (even, odd) with
/// even + odd == field.
pub fn even_odd_split(field: &MultivectorField) -> Result<(MultivectorField, MultivectorField)> {
    field.expect_domain(Domain::Spatial)?;
    let grid = field.grid();
    let blades = field.blade_count();
    let mut even = field.clone();
    let mut odd = field.clone();
    for cell in 0..field.cells() {
        let mirror = grid.negate(cell);
        for b in 0..blades {
            let f = field.data()[cell * blades + b];
            let g = field.data()[mirror * blades + b];
            even.data_mut()[cell * blades + b] = (f + g) / 2.0;
            odd.data_mut()[cell * blades + b] = (f - g) / 2.0;
        }
    }
    Ok((even, odd))
}

/// Scalar/pseudoscalar split of a real signal's spectrum,
/// F(w) = F_e(w) - I_3 F_o(w).
pub struct SpectrumSplit {
    /// Scalar plane; even in w for real input.
    pub f_e: Vec<f64>,
    /// Coefficient multiplying -I_3; odd in w for real input.
    pub f_o: Vec<f64>,
}

pub fn spectrum_split(field: &MultivectorField) -> Result<SpectrumSplit> {
    field.expect_domain(Domain::Frequency)?;
    require_dim3(field)?;
    Ok(SpectrumSplit {
        f_e: field.blade_plane(0),
        f_o: field.blade_plane(7).iter().map(|v| -v).collect(),
    })
}
