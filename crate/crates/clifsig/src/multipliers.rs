//! Fourier multiplier fields a(w) with a(w)^2 = 1 and their idempotents
//! psi(w) = (1 + a(w)) / 2.
//!
//! Two concrete families are constructed: scalar-valued multipliers
//! m(w) = +/-1, and vector + pseudovector multipliers
//! a(w) = v(w) + P(w) e1e2 with P^2 = |v|^2 - 1. Every constructor marks an
//! exceptional set of bins - DC, Nyquist-coordinate bins, and bins where its
//! defining signs are undefined - and stores the identity-compatible value
//! there (1 for scalar kind, 0 for vector kind). Those bins are excluded
//! from the unit-square validation and from the toggle contract downstream.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Domain, MultivectorField};
use crate::ga::AlgebraTable;
use crate::grid::FrequencyGrid;

/// Unit-square validation tolerance. Constructors are exact sign arithmetic;
/// residuals above this indicate a construction bug, not round-off.
pub const VALIDATION_TOL: f64 = 1e-12;

/// Blade indices used by the 2-D multiplier family.
const E1: usize = 0b001;
const E2: usize = 0b010;
const E12: usize = 0b011;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplierKind {
    Scalar,
    VectorPseudovector,
}

/// The nested signal classes, widest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryClass {
    Generalized,
    Generic,
    Ordinary,
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymmetryClass::Generalized => "generalized",
            SymmetryClass::Generic => "generic",
            SymmetryClass::Ordinary => "ordinary",
        };
        f.write_str(s)
    }
}

/// Sign s(w) of the pseudovector square root, free to choose.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignRule {
    /// s(w) = +1 everywhere (the default when unspecified).
    #[default]
    PlusOne,
    /// s(w) = sgn(w1) sgn(w2); bins where either sign vanishes become
    /// exceptional when the pseudovector part is nonzero.
    SignProduct,
}

/// Parameters of the normalized-vector multiplier family
/// v_G = A (v1, v2) / sqrt(v1^2 + v2^2) with
/// v1 = a1 sgn(w1) (|w1|/|w|)^alpha1 + b1 sgn(w2) (|w2|/|w|)^beta1 and
/// v2 = a2 sgn(w1) (|w1|/|w|)^alpha2 + b2 sgn(w2) (|w2|/|w|)^beta2,
/// plus the pseudovector part s(w) sqrt(A^2 - 1) e1e2.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParametricParams {
    /// Overall vector magnitude A >= 1.
    pub amplitude: f64,
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub b2: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub sign_rule: SignRule,
}

impl ParametricParams {
    /// The A = 1, v = w-hat row: reproduces the monogenic multiplier.
    pub fn monogenic() -> Self {
        ParametricParams {
            amplitude: 1.0,
            a1: 1.0,
            a2: 0.0,
            b1: 0.0,
            b2: 1.0,
            alpha1: 1.0,
            alpha2: 0.0,
            beta1: 0.0,
            beta2: 1.0,
            sign_rule: SignRule::PlusOne,
        }
    }

    /// The A = 1, per-axis-sign row: reproduces the modified hypercomplex
    /// multiplier.
    pub fn modified_hypercomplex() -> Self {
        ParametricParams {
            alpha1: 0.0,
            beta2: 0.0,
            ..ParametricParams::monogenic()
        }
    }

    /// The A = sqrt(2), per-axis-sign row with s = sgn(w1) sgn(w2):
    /// reproduces the hypercomplex multiplier.
    pub fn hypercomplex() -> Self {
        ParametricParams {
            amplitude: 2.0_f64.sqrt(),
            sign_rule: SignRule::SignProduct,
            ..ParametricParams::modified_hypercomplex()
        }
    }
}

impl Default for ParametricParams {
    fn default() -> Self {
        ParametricParams::monogenic()
    }
}

/// Serializable description of how a multiplier was built; enough to rebuild
/// it bit-for-bit (given the grid), which is what archives store.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum MultiplierConfig {
    Hahn,
    Hypercomplex,
    ModifiedHypercomplex,
    Monogenic,
    Parametric(ParametricParams),
    Random { seed: u64 },
    ScalarSet1d,
}

impl MultiplierConfig {
    pub fn build(&self, grid: &FrequencyGrid) -> Result<MultiplierField> {
        match self {
            MultiplierConfig::Hahn => make_hahn(grid),
            MultiplierConfig::Hypercomplex => make_hypercomplex(grid),
            MultiplierConfig::ModifiedHypercomplex => make_modified_hypercomplex(grid),
            MultiplierConfig::Monogenic => make_monogenic(grid),
            MultiplierConfig::Parametric(p) => make_parametric(grid, *p),
            MultiplierConfig::Random { seed } => make_random_unit(grid, *seed),
            MultiplierConfig::ScalarSet1d => make_sgn_1d(grid),
        }
    }
}

impl fmt::Display for MultiplierConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MultiplierConfig::Hahn => "hahn",
            MultiplierConfig::Hypercomplex => "hypercomplex",
            MultiplierConfig::ModifiedHypercomplex => "modified-hypercomplex",
            MultiplierConfig::Monogenic => "monogenic",
            MultiplierConfig::Parametric(_) => "parametric",
            MultiplierConfig::Random { .. } => "random",
            MultiplierConfig::ScalarSet1d => "scalar-set-1d",
        };
        f.write_str(s)
    }
}

/// A validated frequency-indexed multiplier field.
pub struct MultiplierField {
    grid: FrequencyGrid,
    values: MultivectorField,
    kind: MultiplierKind,
    name: String,
    active: Vec<bool>,
}

impl MultiplierField {
    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn values(&self) -> &MultivectorField {
        &self.values
    }

    pub fn kind(&self) -> MultiplierKind {
        self.kind
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// True where the multiplier is defined and squares to one; false on the
    /// exceptional set (DC, Nyquist coordinates, undefined signs).
    pub fn active(&self, bin: usize) -> bool {
        self.active[bin]
    }

    pub fn active_mask(&self) -> &[bool] {
        &self.active
    }

    /// Scalar component m(w) at a bin.
    pub fn m(&self, bin: usize) -> f64 {
        self.values.cell(bin)[0]
    }

    /// Vector component (v1, v2) at a bin.
    pub fn v(&self, bin: usize) -> [f64; 2] {
        let c = self.values.cell(bin);
        [c[E1], c[E2]]
    }

    /// Pseudovector coefficient P(w) at a bin.
    pub fn p(&self, bin: usize) -> f64 {
        self.values.cell(bin)[E12]
    }

    /// Check a(w)^2 == 1 coefficientwise on every active bin, plus the
    /// structural constraints of the kind. Reports the worst bin.
    pub fn validate(&self) -> Result<()> {
        let table = AlgebraTable::get(3);
        let mut worst = 0.0;
        let mut worst_bin = 0;
        let mut sq = [0.0; 8];
        for bin in 0..self.grid.len() {
            let cell = self.values.cell(bin);
            let structural = match self.kind {
                MultiplierKind::Scalar => cell[1..].iter().fold(0.0f64, |m, c| m.max(c.abs())),
                MultiplierKind::VectorPseudovector => cell
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| !matches!(*b, E1 | E2 | E12))
                    .fold(0.0f64, |m, (_, c)| m.max(c.abs())),
            };
            let mut residual = structural;
            if self.active[bin] {
                sq.fill(0.0);
                table.product_acc(cell, cell, &mut sq);
                sq[0] -= 1.0;
                residual = residual.max(sq.iter().fold(0.0f64, |m, c| m.max(c.abs())));
                if self.kind == MultiplierKind::VectorPseudovector {
                    // |v| >= 1 and P^2 = |v|^2 - 1.
                    let nv2 = cell[E1] * cell[E1] + cell[E2] * cell[E2];
                    residual = residual.max((cell[E12] * cell[E12] - (nv2 - 1.0)).abs());
                    if nv2 < 1.0 - VALIDATION_TOL {
                        residual = residual.max(1.0 - nv2);
                    }
                }
            }
            if residual > worst {
                worst = residual;
                worst_bin = bin;
            }
        }
        if worst > VALIDATION_TOL {
            return Err(Error::InvalidMultiplier {
                name: self.name.clone(),
                bin: self.grid.omega(worst_bin),
                residual: worst,
                tolerance: VALIDATION_TOL,
            });
        }
        Ok(())
    }

    /// The idempotent field psi(w) = (1 + a(w)) / 2. Validates first, so a
    /// broken multiplier is reported with its worst bin rather than silently
    /// producing a non-projector.
    pub fn idempotent(&self) -> Result<MultivectorField> {
        self.validate()?;
        let mut psi = self.values.scaled(0.5);
        let blades = psi.blade_count();
        for cell in 0..psi.cells() {
            psi.cell_mut(cell)[0] += 0.5;
        }
        debug_assert_eq!(blades, 8);
        Ok(psi)
    }

    /// Worst-case symmetry residuals over active bin pairs, the raw material
    /// of `classify`.
    pub fn symmetry_residuals(&self) -> SymmetryResiduals {
        let mut r = SymmetryResiduals::default();
        for bin in 0..self.grid.len() {
            if !self.active[bin] {
                continue;
            }
            let mirror = self.grid.negate(bin);
            debug_assert!(self.active[mirror], "active mask must be mirror-symmetric");
            match self.kind {
                MultiplierKind::Scalar => {
                    let me = (self.m(bin) + self.m(mirror)) / 2.0;
                    r.m_even = r.m_even.max(me.abs());
                }
                MultiplierKind::VectorPseudovector => {
                    let v = self.v(bin);
                    let vm = self.v(mirror);
                    r.v_even = r
                        .v_even
                        .max(((v[0] + vm[0]) / 2.0).abs())
                        .max(((v[1] + vm[1]) / 2.0).abs());
                    let po = (self.p(bin) - self.p(mirror)) / 2.0;
                    r.p_odd = r.p_odd.max(po.abs());
                    r.p_max = r.p_max.max(self.p(bin).abs());
                    let nv = (v[0] * v[0] + v[1] * v[1]).sqrt();
                    r.unit_norm_dev = r.unit_norm_dev.max((nv - 1.0).abs());
                }
            }
        }
        r
    }

    /// Tightest symmetry class whose conditions hold within 1e-12.
    ///
    /// Generic requires the even part of m (scalar kind) or the even part of
    /// v and odd part of P (vector kind) to vanish over bin pairs; ordinary
    /// additionally requires P == 0 and |v| == 1 for vector kind, and is
    /// automatic for odd scalar multipliers.
    pub fn classify(&self) -> SymmetryClass {
        let r = self.symmetry_residuals();
        let tol = VALIDATION_TOL;
        match self.kind {
            MultiplierKind::Scalar => {
                if r.m_even <= tol {
                    SymmetryClass::Ordinary
                } else {
                    SymmetryClass::Generalized
                }
            }
            MultiplierKind::VectorPseudovector => {
                if r.v_even > tol || r.p_odd > tol {
                    SymmetryClass::Generalized
                } else if r.p_max <= tol && r.unit_norm_dev <= tol {
                    SymmetryClass::Ordinary
                } else {
                    SymmetryClass::Generic
                }
            }
        }
    }

    /// Quiver-plot CSV of the vector field: one row per bin,
    /// `omega1,omega2,v1,v2,P` with 17 significant digits. Scalar-kind
    /// multipliers have no vector field to export.
    pub fn export_csv(&self) -> Result<String> {
        if self.kind != MultiplierKind::VectorPseudovector {
            return Err(Error::ScalarKind);
        }
        // The vector part must be odd over active pairs before it is worth
        // plotting; a violation indicates a broken constructor.
        for bin in 0..self.grid.len() {
            if !self.active[bin] {
                continue;
            }
            let mirror = self.grid.negate(bin);
            let v = self.v(bin);
            let vm = self.v(mirror);
            if (v[0] + vm[0]).abs() > VALIDATION_TOL || (v[1] + vm[1]).abs() > VALIDATION_TOL {
                return Err(Error::InvalidMultiplier {
                    name: self.name.clone(),
                    bin: self.grid.omega(bin),
                    residual: (v[0] + vm[0]).abs().max((v[1] + vm[1]).abs()),
                    tolerance: VALIDATION_TOL,
                });
            }
        }
        let mut out = String::from("omega1,omega2,v1,v2,P\n");
        for bin in 0..self.grid.len() {
            let w = self.grid.omega(bin);
            let v = self.v(bin);
            let (w1, w2) = (w[0], w.get(1).copied().unwrap_or(0));
            out.push_str(&format!(
                "{},{},{:.16e},{:.16e},{:.16e}\n",
                w1,
                w2,
                v[0],
                v[1],
                self.p(bin)
            ));
        }
        Ok(out)
    }
}

/// Worst-case residuals of the symmetry conditions over active bin pairs.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SymmetryResiduals {
    pub m_even: f64,
    pub v_even: f64,
    pub p_odd: f64,
    pub p_max: f64,
    pub unit_norm_dev: f64,
}

fn require_2d(grid: &FrequencyGrid) -> Result<()> {
    if grid.rank() != 2 {
        return Err(Error::BadParameter(format!(
            "constructor requires a 2-D grid, got rank {}",
            grid.rank()
        )));
    }
    Ok(())
}

/// Bins usable by any multiplier: not self-paired and free of Nyquist
/// coordinates, so a distinct mirror bin at exactly -w exists.
fn base_active(grid: &FrequencyGrid, bin: usize) -> bool {
    !grid.self_paired(bin) && !grid.has_nyquist(bin)
}

fn empty_field(grid: &FrequencyGrid) -> MultivectorField {
    MultivectorField::zeros(grid.shape(), 3, Domain::Frequency)
}

/// Scalar single-orthant multiplier
/// m(w) = (sgn(w1) + sgn(w2) + sgn(w1) sgn(w2) - 1) / 2: +1 on the open
/// first quadrant, -1 on the other three. Axis bins are exceptional.
pub fn make_hahn(grid: &FrequencyGrid) -> Result<MultiplierField> {
    require_2d(grid)?;
    let mut values = empty_field(grid);
    let mut active = vec![false; grid.len()];
    for bin in 0..grid.len() {
        let s1 = grid.sgn(bin, 0);
        let s2 = grid.sgn(bin, 1);
        if base_active(grid, bin) && s1 != 0.0 && s2 != 0.0 {
            active[bin] = true;
            values.cell_mut(bin)[0] = (s1 + s2 + s1 * s2 - 1.0) / 2.0;
        } else {
            values.cell_mut(bin)[0] = 1.0;
        }
    }
    Ok(MultiplierField {
        grid: grid.clone(),
        values,
        kind: MultiplierKind::Scalar,
        name: "hahn".into(),
        active,
    })
}

/// Per-axis-sign vector multiplier v = sgn(w1) e1 + sgn(w2) e2 with
/// pseudovector P = sgn(w1) sgn(w2): |v| = sqrt(2) off the axes.
pub fn make_hypercomplex(grid: &FrequencyGrid) -> Result<MultiplierField> {
    require_2d(grid)?;
    let mut values = empty_field(grid);
    let mut active = vec![false; grid.len()];
    for bin in 0..grid.len() {
        let s1 = grid.sgn(bin, 0);
        let s2 = grid.sgn(bin, 1);
        if base_active(grid, bin) && s1 != 0.0 && s2 != 0.0 {
            active[bin] = true;
            let cell = values.cell_mut(bin);
            cell[E1] = s1;
            cell[E2] = s2;
            cell[E12] = s1 * s2;
        }
    }
    Ok(MultiplierField {
        grid: grid.clone(),
        values,
        kind: MultiplierKind::VectorPseudovector,
        name: "hypercomplex".into(),
        active,
    })
}

/// The hypercomplex vector part rescaled to unit length,
/// v = (sgn(w1) e1 + sgn(w2) e2) / sqrt(2), with no pseudovector part.
pub fn make_modified_hypercomplex(grid: &FrequencyGrid) -> Result<MultiplierField> {
    require_2d(grid)?;
    let sqrt2 = 2.0_f64.sqrt();
    let mut values = empty_field(grid);
    let mut active = vec![false; grid.len()];
    for bin in 0..grid.len() {
        let s1 = grid.sgn(bin, 0);
        let s2 = grid.sgn(bin, 1);
        if base_active(grid, bin) && s1 != 0.0 && s2 != 0.0 {
            active[bin] = true;
            let cell = values.cell_mut(bin);
            cell[E1] = s1 / sqrt2;
            cell[E2] = s2 / sqrt2;
        }
    }
    Ok(MultiplierField {
        grid: grid.clone(),
        values,
        kind: MultiplierKind::VectorPseudovector,
        name: "modified-hypercomplex".into(),
        active,
    })
}

/// Riesz multiplier v = w / |w|, the unit radial field; P = 0.
pub fn make_monogenic(grid: &FrequencyGrid) -> Result<MultiplierField> {
    require_2d(grid)?;
    let mut values = empty_field(grid);
    let mut active = vec![false; grid.len()];
    for bin in 0..grid.len() {
        if !base_active(grid, bin) {
            continue;
        }
        let w = grid.omega(bin);
        let r = grid.omega_norm(bin);
        if r == 0.0 {
            continue;
        }
        active[bin] = true;
        let cell = values.cell_mut(bin);
        cell[E1] = w[0] as f64 / r;
        cell[E2] = w[1] as f64 / r;
    }
    Ok(MultiplierField {
        grid: grid.clone(),
        values,
        kind: MultiplierKind::VectorPseudovector,
        name: "monogenic".into(),
        active,
    })
}

/// Power with the exponents 0 and 1 pinned exactly, so parameter rows that
/// reduce to plain signs or ratios reproduce the named constructors without
/// libm noise.
fn pow_frac(base: f64, exp: f64) -> f64 {
    if exp == 0.0 {
        1.0
    } else if exp == 1.0 {
        base
    } else {
        base.powf(exp)
    }
}

/// General normalized-vector multiplier family; see [`ParametricParams`].
///
/// A bin is exceptional when |w| = 0, when v1^2 + v2^2 = 0, when a term with
/// nonzero coefficient needs the sign of a vanishing coordinate with a zero
/// exponent (0^0 carries no continuous extension), or when the sign-product
/// rule needs a vanishing sign while A > 1.
pub fn make_parametric(grid: &FrequencyGrid, params: ParametricParams) -> Result<MultiplierField> {
    require_2d(grid)?;
    let p = params;
    if p.amplitude.is_nan() || p.amplitude < 1.0 {
        return Err(Error::BadParameter(format!(
            "amplitude A must be >= 1, got {}",
            p.amplitude
        )));
    }
    for (name, exp) in [
        ("alpha1", p.alpha1),
        ("alpha2", p.alpha2),
        ("beta1", p.beta1),
        ("beta2", p.beta2),
    ] {
        if exp.is_nan() || exp < 0.0 {
            return Err(Error::BadParameter(format!(
                "exponent {name} must be >= 0, got {exp}"
            )));
        }
    }
    let pseudo_mag = (p.amplitude * p.amplitude - 1.0).max(0.0).sqrt();
    let mut values = empty_field(grid);
    let mut active = vec![false; grid.len()];
    for bin in 0..grid.len() {
        if !base_active(grid, bin) {
            continue;
        }
        let w = grid.omega(bin);
        let r = grid.omega_norm(bin);
        if r == 0.0 {
            continue;
        }
        let s1 = grid.sgn(bin, 0);
        let s2 = grid.sgn(bin, 1);
        let m1 = w[0].unsigned_abs() as f64 / r;
        let m2 = w[1].unsigned_abs() as f64 / r;
        // With Nyquist bins excluded, a vanishing sign means the coordinate
        // itself is zero; a zero exponent then leaves the term undefined.
        let undefined = |coeff: f64, sgn: f64, exp: f64| coeff != 0.0 && sgn == 0.0 && exp == 0.0;
        if undefined(p.a1, s1, p.alpha1)
            || undefined(p.a2, s1, p.alpha2)
            || undefined(p.b1, s2, p.beta1)
            || undefined(p.b2, s2, p.beta2)
        {
            continue;
        }
        let v1 = p.a1 * s1 * pow_frac(m1, p.alpha1) + p.b1 * s2 * pow_frac(m2, p.beta1);
        let v2 = p.a2 * s1 * pow_frac(m1, p.alpha2) + p.b2 * s2 * pow_frac(m2, p.beta2);
        let norm = (v1 * v1 + v2 * v2).sqrt();
        if norm == 0.0 {
            continue;
        }
        let s = match p.sign_rule {
            SignRule::PlusOne => 1.0,
            SignRule::SignProduct => s1 * s2,
        };
        if pseudo_mag > 0.0 && s == 0.0 {
            continue;
        }
        active[bin] = true;
        let cell = values.cell_mut(bin);
        cell[E1] = p.amplitude * v1 / norm;
        cell[E2] = p.amplitude * v2 / norm;
        if pseudo_mag > 0.0 {
            cell[E12] = s * pseudo_mag;
        }
    }
    Ok(MultiplierField {
        grid: grid.clone(),
        values,
        kind: MultiplierKind::VectorPseudovector,
        name: "parametric".into(),
        active,
    })
}

/// Random unit-vector multiplier: on each active bin of the half-space
/// w2 > 0 (or w2 = 0, w1 > 0) an independently drawn unit vector, mirrored
/// as v(-w) = -v(w) so the field is odd. Deterministic for a given seed.
pub fn make_random_unit(grid: &FrequencyGrid, seed: u64) -> Result<MultiplierField> {
    require_2d(grid)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = empty_field(grid);
    let mut active = vec![false; grid.len()];
    for bin in 0..grid.len() {
        if !base_active(grid, bin) {
            continue;
        }
        let w = grid.omega(bin);
        let primary = w[1] > 0 || (w[1] == 0 && w[0] > 0);
        if !primary {
            continue;
        }
        let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let (v1, v2) = (phi.cos(), phi.sin());
        let mirror = grid.negate(bin);
        active[bin] = true;
        active[mirror] = true;
        let cell = values.cell_mut(bin);
        cell[E1] = v1;
        cell[E2] = v2;
        let cell = values.cell_mut(mirror);
        cell[E1] = -v1;
        cell[E2] = -v2;
    }
    Ok(MultiplierField {
        grid: grid.clone(),
        values,
        kind: MultiplierKind::VectorPseudovector,
        name: "random".into(),
        active,
    })
}

/// Scalar set multiplier: a(w) = +1 for bins whose signed frequency vector
/// satisfies the predicate, -1 otherwise.
pub fn make_scalar_set(
    grid: &FrequencyGrid,
    predicate: impl Fn(&[i64]) -> bool,
) -> Result<MultiplierField> {
    let mut values = empty_field(grid);
    let mut active = vec![false; grid.len()];
    for bin in 0..grid.len() {
        if base_active(grid, bin) {
            active[bin] = true;
            values.cell_mut(bin)[0] = if predicate(&grid.omega(bin)) { 1.0 } else { -1.0 };
        } else {
            values.cell_mut(bin)[0] = 1.0;
        }
    }
    Ok(MultiplierField {
        grid: grid.clone(),
        values,
        kind: MultiplierKind::Scalar,
        name: "scalar-set".into(),
        active,
    })
}

/// The classical 1-D sign multiplier, a(w) = sgn(w), as a scalar set.
pub fn make_sgn_1d(grid: &FrequencyGrid) -> Result<MultiplierField> {
    if grid.rank() != 1 {
        return Err(Error::BadParameter(format!(
            "scalar-set-1d requires a 1-D grid, got rank {}",
            grid.rank()
        )));
    }
    let mut field = make_scalar_set(grid, |w| w[0] > 0)?;
    field.name = "scalar-set-1d".into();
    Ok(field)
}
