//! Dense multivector arithmetic for the real geometric algebra G_L.
//!
//! Generators square to +1 and anticommute. Blades are indexed by bitmask:
//! bit k set means e_{k+1} participates in the blade product, so the blade
//! count is 2^L and the grade of a blade is the popcount of its index.
//!
//! Only L = 3 and L = 7 are admitted. These are the first two members of the
//! L = 4n + 3 family, for which the unit pseudoscalar I_L is central and
//! squares to -1, letting it stand in for the imaginary unit.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Blade index: bitmask over the L generator slots.
pub type BladeIndex = usize;

/// Grade of a blade = number of generators in the product.
#[inline]
pub fn grade(blade: BladeIndex) -> u32 {
    blade.count_ones()
}

/// Sign from reordering the concatenation of two blades into canonical
/// ascending order. Counts generator transpositions; equal generators then
/// cancel with e_k^2 = +1, contributing no further sign.
fn reorder_sign(a: BladeIndex, b: BladeIndex) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Precomputed product table for all 2^L x 2^L blade pairs.
///
/// `blade_a * blade_b = sign[a * n + b] * blade(a ^ b)`. The table is built
/// once per supported dimension and shared immutably, so per-bin products in
/// the spectral hot loop are table lookups.
pub struct AlgebraTable {
    dim: usize,
    blades: usize,
    sign: Vec<f64>,
}

impl AlgebraTable {
    fn build(dim: usize) -> Self {
        let blades = 1usize << dim;
        let mut sign = vec![0.0; blades * blades];
        for a in 0..blades {
            for b in 0..blades {
                sign[a * blades + b] = reorder_sign(a, b);
            }
        }
        AlgebraTable { dim, blades, sign }
    }

    /// Shared table for a supported dimension. Panics unless L is 3 or 7.
    pub fn get(dim: usize) -> &'static AlgebraTable {
        static T3: OnceLock<AlgebraTable> = OnceLock::new();
        static T7: OnceLock<AlgebraTable> = OnceLock::new();
        match dim {
            3 => T3.get_or_init(|| AlgebraTable::build(3)),
            7 => T7.get_or_init(|| AlgebraTable::build(7)),
            _ => panic!(
                "unsupported algebra dimension L = {dim}; L must be of the form 4n + 3 (3 or 7)"
            ),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of blades, 2^L.
    pub fn blade_count(&self) -> usize {
        self.blades
    }

    #[inline]
    pub fn sign(&self, a: BladeIndex, b: BladeIndex) -> f64 {
        self.sign[a * self.blades + b]
    }

    #[inline]
    pub fn target(&self, a: BladeIndex, b: BladeIndex) -> BladeIndex {
        a ^ b
    }

    /// Accumulate the geometric product of two coefficient slices into `acc`.
    /// Slices must all have length 2^L. Zero coefficients are skipped, which
    /// matters for the sparse multiplier-times-spectrum products.
    pub fn product_acc(&self, a: &[f64], b: &[f64], acc: &mut [f64]) {
        debug_assert_eq!(a.len(), self.blades);
        debug_assert_eq!(b.len(), self.blades);
        debug_assert_eq!(acc.len(), self.blades);
        for (i, &ca) in a.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            let row = &self.sign[i * self.blades..(i + 1) * self.blades];
            for (j, &cb) in b.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                acc[i ^ j] += row[j] * ca * cb;
            }
        }
    }
}

/// Check that L is odd with L(L-1)/2 odd, i.e. L = 4n + 3.
pub fn valid_dim(dim: usize) -> bool {
    dim % 4 == 3
}

/// A dense element of G_L: one real coefficient per blade.
#[derive(Clone, PartialEq)]
pub struct Multivector {
    dim: usize,
    coeffs: Vec<f64>,
}

impl Multivector {
    /// The zero element of G_L.
    pub fn zero(dim: usize) -> Self {
        let table = AlgebraTable::get(dim);
        Multivector {
            dim,
            coeffs: vec![0.0; table.blade_count()],
        }
    }

    /// A scalar (grade-0) element.
    pub fn scalar(dim: usize, value: f64) -> Self {
        let mut m = Multivector::zero(dim);
        m.coeffs[0] = value;
        m
    }

    /// The generator e_k, 1-based: k in 1..=L.
    pub fn generator(dim: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= dim, "generator index {k} out of 1..={dim}");
        Multivector::blade(dim, 1 << (k - 1), 1.0)
    }

    /// A single blade with the given coefficient.
    pub fn blade(dim: usize, blade: BladeIndex, coeff: f64) -> Self {
        let mut m = Multivector::zero(dim);
        assert!(blade < m.coeffs.len(), "blade index {blade} out of range");
        m.coeffs[blade] = coeff;
        m
    }

    /// The unit pseudoscalar I_L = e_1 ... e_L. Central with I_L^2 = -1 for
    /// the supported dimensions.
    pub fn pseudoscalar(dim: usize) -> Self {
        assert!(
            valid_dim(dim),
            "pseudoscalar requires L = 4n + 3, got L = {dim}"
        );
        let blades = 1usize << dim;
        Multivector::blade(dim, blades - 1, 1.0)
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<f64>) -> Self {
        assert_eq!(coeffs.len(), 1 << dim, "coefficient count must be 2^L");
        Multivector { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: BladeIndex) -> f64 {
        self.coeffs[blade]
    }

    pub fn set_coeff(&mut self, blade: BladeIndex, value: f64) {
        self.coeffs[blade] = value;
    }

    /// Scalar (grade-0) part.
    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Keep only blades of grade `k`; summing the projections over all k
    /// reconstructs the element.
    pub fn grade_project(&self, k: u32) -> Self {
        let mut out = Multivector::zero(self.dim);
        for (blade, &c) in self.coeffs.iter().enumerate() {
            if grade(blade) == k {
                out.coeffs[blade] = c;
            }
        }
        out
    }

    /// Sum of even-grade blades.
    pub fn even_part(&self) -> Self {
        self.parity_part(0)
    }

    /// Sum of odd-grade blades.
    pub fn odd_part(&self) -> Self {
        self.parity_part(1)
    }

    fn parity_part(&self, parity: u32) -> Self {
        let mut out = Multivector::zero(self.dim);
        for (blade, &c) in self.coeffs.iter().enumerate() {
            if grade(blade) % 2 == parity {
                out.coeffs[blade] = c;
            }
        }
        out
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// True when the element squares to itself within `tol` on every blade.
    pub fn is_idempotent(&self, tol: f64) -> bool {
        assert!(tol > 0.0, "tolerance must be positive");
        let sq = self * self;
        (&sq - self).max_abs() <= tol
    }

    pub fn scaled(&self, s: f64) -> Self {
        Multivector {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector(L={})[", self.dim)?;
        let mut first = true;
        for (blade, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if blade == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*e{{")?;
                for k in 0..self.dim {
                    if blade & (1 << k) != 0 {
                        write!(f, "{}", k + 1)?;
                    }
                }
                write!(f, "}}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, "]")
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in addition");
        Multivector {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in subtraction");
        Multivector {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scaled(-1.0)
    }
}

/// Geometric product. Dimension mismatch is a hard error.
impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        assert_eq!(
            self.dim, rhs.dim,
            "dimension mismatch in geometric product"
        );
        let table = AlgebraTable::get(self.dim);
        let mut out = Multivector::zero(self.dim);
        table.product_acc(&self.coeffs, &rhs.coeffs, &mut out.coeffs);
        out
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scaled(rhs)
    }
}

/// Free-function form of the geometric product.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Multivector {
    a * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_mv(dim: usize, rng: &mut StdRng) -> Multivector {
        let n = 1usize << dim;
        Multivector::from_coeffs(dim, (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect())
    }

    #[test]
    fn generators_square_to_one() {
        for dim in [3, 7] {
            for k in 1..=dim {
                let e = Multivector::generator(dim, k);
                let sq = &e * &e;
                assert_eq!(sq, Multivector::scalar(dim, 1.0), "e{k}^2 in L={dim}");
            }
        }
    }

    #[test]
    fn generators_anticommute() {
        for dim in [3, 7] {
            for j in 1..=dim {
                for k in 1..=dim {
                    if j == k {
                        continue;
                    }
                    let ej = Multivector::generator(dim, j);
                    let ek = Multivector::generator(dim, k);
                    let anti = &(&ej * &ek) + &(&ek * &ej);
                    assert_eq!(anti.max_abs(), 0.0, "e{j}e{k} + e{k}e{j} in L={dim}");
                }
            }
        }
    }

    #[test]
    fn e1_e2_product_is_signed_bivector() {
        let e1 = Multivector::generator(3, 1);
        let e2 = Multivector::generator(3, 2);
        let b = &e1 * &e2;
        assert_eq!(b.coeff(0b011), 1.0);
        let b_rev = &e2 * &e1;
        assert_eq!(b_rev.coeff(0b011), -1.0);
    }

    #[test]
    fn pseudoscalar_squares_to_minus_one() {
        for dim in [3, 7] {
            let i = Multivector::pseudoscalar(dim);
            let sq = &i * &i;
            assert_eq!(sq, Multivector::scalar(dim, -1.0), "I^2 in L={dim}");
        }
    }

    #[test]
    #[should_panic(expected = "4n + 3")]
    fn pseudoscalar_rejects_bad_dim() {
        let _ = Multivector::pseudoscalar(5);
    }

    #[test]
    #[should_panic(expected = "unsupported algebra dimension")]
    fn table_rejects_bad_dim() {
        let _ = AlgebraTable::get(4);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn product_rejects_mixed_dims() {
        let a = Multivector::scalar(3, 1.0);
        let b = Multivector::scalar(7, 1.0);
        let _ = &a * &b;
    }

    #[test]
    fn pseudoscalar_commutes_with_every_basis_blade() {
        // Brute-force commutator over all 8 basis blades of G_3.
        let i3 = Multivector::pseudoscalar(3);
        for blade in 0..8 {
            let b = Multivector::blade(3, blade, 1.0);
            let lhs = &i3 * &b;
            let rhs = &b * &i3;
            assert_eq!(lhs, rhs, "I_3 and blade {blade}");
        }
    }

    #[test]
    fn pseudoscalar_times_i2_is_minus_e3() {
        let i3 = Multivector::pseudoscalar(3);
        let i2 = &Multivector::generator(3, 1) * &Multivector::generator(3, 2);
        let prod = &i3 * &i2;
        let expect = Multivector::generator(3, 3).scaled(-1.0);
        assert_eq!(prod, expect);
    }

    #[test]
    fn grade_projection_partitions() {
        let mut rng = StdRng::seed_from_u64(11);
        for dim in [3usize, 7] {
            let m = random_mv(dim, &mut rng);
            let mut sum = Multivector::zero(dim);
            for k in 0..=dim as u32 {
                sum = &sum + &m.grade_project(k);
            }
            assert_eq!(sum, m);
        }
    }

    #[test]
    fn grade_project_examples() {
        // 1 + e1 + e1e2 projected to grade 1 leaves e1.
        let mut m = Multivector::scalar(3, 1.0);
        m.set_coeff(0b001, 1.0);
        m.set_coeff(0b011, 1.0);
        assert_eq!(m.grade_project(1), Multivector::generator(3, 1));
        // Identity on scalars.
        let s = Multivector::scalar(3, 2.5);
        assert_eq!(s.grade_project(0), s);
    }

    #[test]
    fn even_odd_split_reconstructs() {
        let mut rng = StdRng::seed_from_u64(7);
        let m = random_mv(3, &mut rng);
        assert_eq!(&m.even_part() + &m.odd_part(), m);
        // v + P*e1e2 splits into grade-1 odd and grade-2 even parts.
        let mut a = Multivector::zero(3);
        a.set_coeff(0b001, 0.6);
        a.set_coeff(0b010, 0.8);
        a.set_coeff(0b011, 1.0);
        assert_eq!(a.odd_part(), a.grade_project(1));
        assert_eq!(a.even_part(), a.grade_project(2));
    }

    #[test]
    fn simple_idempotents() {
        // (1 + e1)/2 squares to itself; e1 does not.
        let mut psi = Multivector::scalar(3, 0.5);
        psi.set_coeff(0b001, 0.5);
        assert!(psi.is_idempotent(1e-15));
        assert!(!Multivector::generator(3, 1).is_idempotent(1e-12));
        let sq = &psi * &psi;
        assert_eq!(sq, psi);
    }

    #[test]
    fn hypercomplex_corner_value_is_idempotent() {
        // (1 + e1 + e2 + e1e2)/2: the multiplier value in the (+,+) quadrant.
        let mut psi = Multivector::scalar(3, 0.5);
        psi.set_coeff(0b001, 0.5);
        psi.set_coeff(0b010, 0.5);
        psi.set_coeff(0b011, 0.5);
        assert!(psi.is_idempotent(1e-15));
    }

    #[test]
    fn associativity_randomized() {
        let mut rng = StdRng::seed_from_u64(99);
        for dim in [3usize, 7] {
            for _ in 0..50 {
                let a = random_mv(dim, &mut rng);
                let b = random_mv(dim, &mut rng);
                let c = random_mv(dim, &mut rng);
                let lhs = &(&a * &b) * &c;
                let rhs = &a * &(&b * &c);
                assert!((&lhs - &rhs).max_abs() <= 1e-12, "associativity in L={dim}");
            }
        }
    }

    #[test]
    fn pseudoscalar_central_randomized() {
        let mut rng = StdRng::seed_from_u64(5);
        for dim in [3usize, 7] {
            let i = Multivector::pseudoscalar(dim);
            for _ in 0..50 {
                let m = random_mv(dim, &mut rng);
                assert!((&(&i * &m) - &(&m * &i)).max_abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn unit_condition_algebra() {
        // a = alpha*u + beta*w with u^2 = 1, w^2 = -1, uw + wu = 0
        // has a^2 = alpha^2 - beta^2 as a pure scalar.
        let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
        let mut u = Multivector::zero(3);
        u.set_coeff(0b001, inv_sqrt2);
        u.set_coeff(0b010, inv_sqrt2);
        let w = Multivector::blade(3, 0b011, 1.0);
        assert!(((&u * &u).scalar_part() - 1.0).abs() <= 1e-15);
        assert!(((&w * &w).scalar_part() + 1.0).abs() <= 1e-15);
        assert!((&(&u * &w) + &(&w * &u)).max_abs() <= 1e-15);

        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..20 {
            let alpha: f64 = rng.gen_range(-2.0..2.0);
            let beta: f64 = rng.gen_range(-2.0..2.0);
            let a = &u.scaled(alpha) + &w.scaled(beta);
            let sq = &a * &a;
            let expect = Multivector::scalar(3, alpha * alpha - beta * beta);
            assert!((&sq - &expect).max_abs() <= 1e-12);
        }
    }
}
