//! Plot-ready exports of a decomposition: min-max normalized PGM previews
//! with a JSON sidecar of the normalization constants, and quiver CSVs for
//! the orientation and phase-vector fields.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::analytic::{AnalyticDecomposition, HilbertParts};
use crate::error::Result;

use super::image::save_pgm;

#[derive(Serialize)]
struct Normalization {
    min: f64,
    max: f64,
}

/// Write the preview and quiver files for a decomposition into `dir`.
///
/// Every kind gets `R.pgm` and `theta.pgm`. Vector-kind decompositions add
/// `fH1.pgm`, `fH2.pgm`, `fH3.pgm`, `vnorm.pgm`, `sigma.pgm`, `kappa.pgm`
/// and the quiver tables `vhat.csv` / `phase_vector.csv`; scalar-kind ones
/// add `fHRe.pgm` / `fHIm.pgm`. Quiver rows are subsampled by `stride` and
/// carry a trailing validity flag, 0 on cells where the orientation is
/// undefined. Normalization constants land in `normalization.json`.
pub fn export_maps(
    decomposition: &AnalyticDecomposition,
    dir: &Path,
    stride: usize,
) -> Result<Vec<PathBuf>> {
    assert!(stride > 0, "stride must be positive");
    fs::create_dir_all(dir)?;
    let d = decomposition;
    let rows = if d.shape.len() == 2 { d.shape[0] } else { 1 };
    let cols = d.shape[d.shape.len() - 1];
    let mut written = Vec::new();
    let mut norms: BTreeMap<String, Normalization> = BTreeMap::new();

    let mut preview = |name: &str, values: &[f64], written: &mut Vec<PathBuf>| -> Result<()> {
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let span = max - min;
        let scaled: Vec<f64> = if span > 0.0 {
            values.iter().map(|v| (v - min) / span).collect()
        } else {
            vec![0.0; values.len()]
        };
        let path = dir.join(format!("{name}.pgm"));
        save_pgm(&path, cols, rows, &scaled)?;
        norms.insert(name.to_string(), Normalization { min, max });
        written.push(path);
        Ok(())
    };

    preview("R", &d.magnitude, &mut written)?;
    preview("theta", &d.theta, &mut written)?;
    match &d.parts {
        HilbertParts::Scalar { re, im } => {
            preview("fHRe", re, &mut written)?;
            preview("fHIm", im, &mut written)?;
        }
        HilbertParts::Vector {
            v,
            v_norm,
            v_hat,
            sigma,
            kappa,
            orient_valid,
            ..
        } => {
            preview("fH1", &v[0], &mut written)?;
            preview("fH2", &v[1], &mut written)?;
            preview("fH3", &v[2], &mut written)?;
            preview("vnorm", v_norm, &mut written)?;
            preview("sigma", sigma, &mut written)?;
            preview("kappa", kappa, &mut written)?;
            let vhat_rows = |scale: Option<&[f64]>| -> String {
                let mut csv = String::from("x,y,vx,vy,valid\n");
                for r in (0..rows).step_by(stride) {
                    for c in (0..cols).step_by(stride) {
                        let cell = r * cols + c;
                        let ok = orient_valid[cell];
                        let weight = if ok {
                            scale.map_or(1.0, |s| s[cell])
                        } else {
                            0.0
                        };
                        // x is the column axis; vx pairs with it.
                        writeln!(
                            csv,
                            "{c},{r},{:.16e},{:.16e},{}",
                            weight * v_hat[1][cell],
                            weight * v_hat[0][cell],
                            ok as u8
                        )
                        .expect("string write");
                    }
                }
                csv
            };
            let vhat_path = dir.join("vhat.csv");
            fs::write(&vhat_path, vhat_rows(None))?;
            written.push(vhat_path);
            let phase_path = dir.join("phase_vector.csv");
            fs::write(&phase_path, vhat_rows(Some(&d.theta)))?;
            written.push(phase_path);
        }
    }

    let sidecar = dir.join("normalization.json");
    fs::write(&sidecar, serde_json::to_vec_pretty(&norms)?)?;
    written.push(sidecar);
    Ok(written)
}
