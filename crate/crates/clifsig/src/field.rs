//! Grids of multivectors: the common container for spatial signals,
//! frequency spectra, and multiplier fields.

use crate::error::{Error, Result};
use crate::ga::{AlgebraTable, Multivector};
use crate::grid::FrequencyGrid;

/// Which domain a field's samples live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Spatial,
    Frequency,
}

/// A rank-1 or rank-2 grid of G_L elements, stored as a flat coefficient
/// array with layout `[cell * 2^L + blade]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultivectorField {
    shape: Vec<usize>,
    dim: usize,
    domain: Domain,
    data: Vec<f64>,
}

impl MultivectorField {
    pub fn zeros(shape: &[usize], dim: usize, domain: Domain) -> Self {
        let table = AlgebraTable::get(dim);
        let cells: usize = shape.iter().product();
        MultivectorField {
            shape: shape.to_vec(),
            dim,
            domain,
            data: vec![0.0; cells * table.blade_count()],
        }
    }

    /// Lift a real signal into the scalar blade of a spatial field.
    pub fn from_real(shape: &[usize], dim: usize, values: &[f64]) -> Self {
        let mut field = MultivectorField::zeros(shape, dim, Domain::Spatial);
        assert_eq!(
            values.len(),
            field.cells(),
            "sample count must match the grid"
        );
        let blades = field.blade_count();
        for (cell, &v) in values.iter().enumerate() {
            field.data[cell * blades] = v;
        }
        field
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn cells(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn blade_count(&self) -> usize {
        1 << self.dim
    }

    pub fn grid(&self) -> FrequencyGrid {
        FrequencyGrid::new(&self.shape)
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub(crate) fn set_domain(&mut self, domain: Domain) {
        self.domain = domain;
    }

    pub fn cell(&self, cell: usize) -> &[f64] {
        let b = self.blade_count();
        &self.data[cell * b..(cell + 1) * b]
    }

    pub fn cell_mut(&mut self, cell: usize) -> &mut [f64] {
        let b = self.blade_count();
        &mut self.data[cell * b..(cell + 1) * b]
    }

    pub fn get(&self, cell: usize) -> Multivector {
        Multivector::from_coeffs(self.dim, self.cell(cell).to_vec())
    }

    pub fn set(&mut self, cell: usize, value: &Multivector) {
        assert_eq!(value.dim(), self.dim, "dimension mismatch");
        self.cell_mut(cell).copy_from_slice(value.coeffs());
    }

    /// Copy of one blade's coefficient plane across all cells.
    pub fn blade_plane(&self, blade: usize) -> Vec<f64> {
        let b = self.blade_count();
        assert!(blade < b);
        self.data.iter().skip(blade).step_by(b).copied().collect()
    }

    /// Scalar (grade-0) plane; for fields holding real signals this is the
    /// signal itself.
    pub fn scalar_plane(&self) -> Vec<f64> {
        self.blade_plane(0)
    }

    pub fn set_blade_plane(&mut self, blade: usize, values: &[f64]) {
        let b = self.blade_count();
        assert_eq!(values.len(), self.cells());
        for (cell, &v) in values.iter().enumerate() {
            self.data[cell * b + blade] = v;
        }
    }

    /// Largest coefficient magnitude over the whole field.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest cellwise coefficient difference against another field.
    pub fn max_abs_diff(&self, other: &MultivectorField) -> f64 {
        assert_eq!(self.shape, other.shape);
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= s;
        }
        out
    }

    pub fn add(&self, other: &MultivectorField) -> Self {
        assert_eq!(self.shape, other.shape);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &MultivectorField) -> Self {
        assert_eq!(self.shape, other.shape);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub(crate) fn expect_domain(&self, domain: Domain) -> Result<()> {
        if self.domain != domain {
            return Err(Error::WrongDomain {
                expected: domain,
                got: self.domain,
            });
        }
        Ok(())
    }

    pub(crate) fn expect_shape(&self, shape: &[usize]) -> Result<()> {
        if self.shape != shape {
            return Err(Error::ShapeMismatch {
                expected: shape.to_vec(),
                got: self.shape.clone(),
            });
        }
        Ok(())
    }
}
