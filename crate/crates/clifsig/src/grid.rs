//! Discrete frequency grid: DFT bin indexing, signed frequency coordinates,
//! bin negation, and the exceptional-bin bookkeeping that discrete sign
//! functions require.
//!
//! Signed coordinates follow the usual DFT layout: index i on an axis of
//! length n maps to i for i <= n/2 and to i - n otherwise, so an even axis
//! carries its Nyquist bin at +n/2 and an odd axis has no Nyquist bin at all.

/// Discrete sign with the DC and Nyquist coordinates mapped to zero.
///
/// `omega` is a signed bin coordinate on an axis of length `n`. Zero is
/// returned both at omega = 0 and, for even n, at |omega| = n/2: neither bin
/// has a distinct mirror under negation modulo the grid, so no odd-symmetric
/// multiplier can take a nonzero value there.
pub fn sgn_d(omega: i64, n: usize) -> f64 {
    if omega == 0 || (n.is_multiple_of(2) && omega.unsigned_abs() as usize == n / 2) {
        0.0
    } else if omega > 0 {
        1.0
    } else {
        -1.0
    }
}

/// Frequency-domain view of a rank-1 or rank-2 sample grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyGrid {
    shape: Vec<usize>,
}

impl FrequencyGrid {
    pub fn new(shape: &[usize]) -> Self {
        assert!(
            !shape.is_empty() && shape.len() <= 2,
            "grids are rank 1 or rank 2, got rank {}",
            shape.len()
        );
        assert!(shape.iter().all(|&n| n > 0), "axis lengths must be positive");
        FrequencyGrid {
            shape: shape.to_vec(),
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    /// Total number of bins.
    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Row-major flat index of a multi-index.
    pub fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut f = 0;
        for (i, (&x, &n)) in idx.iter().zip(&self.shape).enumerate() {
            debug_assert!(x < n, "index {x} out of range on axis {i}");
            f = f * n + x;
        }
        f
    }

    /// Multi-index of a row-major flat index.
    pub fn unflat(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.shape.len()];
        for k in (0..self.shape.len()).rev() {
            idx[k] = flat % self.shape[k];
            flat /= self.shape[k];
        }
        idx
    }

    /// Signed frequency coordinate of one axis index.
    pub fn signed_coord(&self, axis: usize, idx: usize) -> i64 {
        let n = self.shape[axis];
        if idx <= n / 2 {
            idx as i64
        } else {
            idx as i64 - n as i64
        }
    }

    /// Signed frequency vector omega of a flat bin.
    pub fn omega(&self, flat: usize) -> Vec<i64> {
        let idx = self.unflat(flat);
        idx.iter()
            .enumerate()
            .map(|(a, &i)| self.signed_coord(a, i))
            .collect()
    }

    /// Flat index of the bin at -omega (negation modulo the grid).
    pub fn negate(&self, flat: usize) -> usize {
        let idx = self.unflat(flat);
        let neg: Vec<usize> = idx
            .iter()
            .zip(&self.shape)
            .map(|(&i, &n)| if i == 0 { 0 } else { n - i })
            .collect();
        self.flat(&neg)
    }

    /// True when the bin is its own negation modulo the grid: every
    /// coordinate is DC, or Nyquist on an even axis.
    pub fn self_paired(&self, flat: usize) -> bool {
        self.negate(flat) == flat
    }

    /// True when any coordinate sits on the Nyquist bin of an even axis.
    /// Such bins cannot participate in odd-symmetric multiplier pairs, so
    /// every constructor treats them as exceptional.
    pub fn has_nyquist(&self, flat: usize) -> bool {
        let idx = self.unflat(flat);
        idx.iter()
            .zip(&self.shape)
            .any(|(&i, &n)| n.is_multiple_of(2) && i == n / 2)
    }

    /// Exceptional mask in the grid sense: self-paired bins only.
    pub fn exceptional_mask(&self) -> Vec<bool> {
        (0..self.len()).map(|f| self.self_paired(f)).collect()
    }

    /// Discrete sign of one coordinate of a bin.
    pub fn sgn(&self, flat: usize, axis: usize) -> f64 {
        let idx = self.unflat(flat);
        sgn_d(self.signed_coord(axis, idx[axis]), self.shape[axis])
    }

    /// Euclidean norm of the signed frequency vector.
    pub fn omega_norm(&self, flat: usize) -> f64 {
        self.omega(flat)
            .iter()
            .map(|&w| (w * w) as f64)
            .sum::<f64>()
            .sqrt()
    }
}
