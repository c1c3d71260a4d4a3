//! Batch front end for analytic-signal decomposition of 1-D signals and 2-D
//! images.
//!
//! Output contract: stdout carries machine-readable JSON lines only; human
//! prose goes to stderr. Exit codes: 0 success, 1 verification failure,
//! 2 usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use clifsig::analytic::{
    decompose, extended_hilbert, max_abs_diff, pearson, reconstruct,
    reconstruct_from_orientation, remove_exceptional, AnalyticDecomposition, HilbertParts,
};
use clifsig::field::{Domain, MultivectorField};
use clifsig::grid::FrequencyGrid;
use clifsig::io::{export_maps, load_image, save_pgm, ArchiveHeader, FieldArchive};
use clifsig::multipliers::{MultiplierConfig, MultiplierKind, ParametricParams, SignRule};
use clifsig::selftest::{run_all, FaultInjection};

#[derive(Parser)]
#[command(name = "clifsig", version, about = "Analytic-signal decomposition via idempotent Fourier multipliers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose an image: multiplier, extended Hilbert transform, maps, archive.
    Analytic(AnalyticArgs),
    /// Rebuild the signal from an archive produced by `analytic`.
    Reconstruct(ReconstructArgs),
    /// Export a multiplier's vector field as a quiver CSV.
    Field(FieldArgs),
    /// Run the verification suite on synthetic grids.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MultiplierName {
    Hahn,
    Hypercomplex,
    ModifiedHypercomplex,
    Monogenic,
    Parametric,
    Random,
    #[value(name = "scalar-set-1d")]
    ScalarSet1d,
}

#[derive(Args, Clone)]
struct MultiplierArgs {
    /// Which multiplier to build.
    #[arg(long, value_enum)]
    multiplier: MultiplierName,

    /// Seed for the random multiplier (only with --multiplier random).
    #[arg(long)]
    seed: Option<u64>,

    /// Vector magnitude A >= 1 (parametric only).
    #[arg(long = "amplitude", visible_alias = "A")]
    amplitude: Option<f64>,
    #[arg(long)]
    a1: Option<f64>,
    #[arg(long)]
    a2: Option<f64>,
    #[arg(long)]
    b1: Option<f64>,
    #[arg(long)]
    b2: Option<f64>,
    #[arg(long)]
    alpha1: Option<f64>,
    #[arg(long)]
    alpha2: Option<f64>,
    #[arg(long)]
    beta1: Option<f64>,
    #[arg(long)]
    beta2: Option<f64>,
    /// Sign rule for the pseudovector part (parametric only); defaults to
    /// plus-one when omitted.
    #[arg(long = "s-rule", value_enum)]
    s_rule: Option<SRule>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SRule {
    PlusOne,
    SignProduct,
}

impl MultiplierArgs {
    fn to_config(&self) -> Result<MultiplierConfig, Failure> {
        let parametric_opts = [
            self.amplitude,
            self.a1,
            self.a2,
            self.b1,
            self.b2,
            self.alpha1,
            self.alpha2,
            self.beta1,
            self.beta2,
        ];
        if self.multiplier != MultiplierName::Parametric
            && (parametric_opts.iter().any(Option::is_some) || self.s_rule.is_some())
        {
            return Err(Failure::usage(anyhow!(
                "parametric parameters are only accepted with --multiplier parametric"
            )));
        }
        if self.multiplier != MultiplierName::Random && self.seed.is_some() {
            return Err(Failure::usage(anyhow!(
                "--seed is only accepted with --multiplier random"
            )));
        }
        Ok(match self.multiplier {
            MultiplierName::Hahn => MultiplierConfig::Hahn,
            MultiplierName::Hypercomplex => MultiplierConfig::Hypercomplex,
            MultiplierName::ModifiedHypercomplex => MultiplierConfig::ModifiedHypercomplex,
            MultiplierName::Monogenic => MultiplierConfig::Monogenic,
            MultiplierName::Random => MultiplierConfig::Random {
                seed: self.seed.unwrap_or(0),
            },
            MultiplierName::ScalarSet1d => MultiplierConfig::ScalarSet1d,
            MultiplierName::Parametric => {
                let d = ParametricParams::default();
                MultiplierConfig::Parametric(ParametricParams {
                    amplitude: self.amplitude.unwrap_or(d.amplitude),
                    a1: self.a1.unwrap_or(d.a1),
                    a2: self.a2.unwrap_or(d.a2),
                    b1: self.b1.unwrap_or(d.b1),
                    b2: self.b2.unwrap_or(d.b2),
                    alpha1: self.alpha1.unwrap_or(d.alpha1),
                    alpha2: self.alpha2.unwrap_or(d.alpha2),
                    beta1: self.beta1.unwrap_or(d.beta1),
                    beta2: self.beta2.unwrap_or(d.beta2),
                    sign_rule: match self.s_rule {
                        Some(SRule::SignProduct) => SignRule::SignProduct,
                        _ => SignRule::PlusOne,
                    },
                })
            }
        })
    }
}

#[derive(Args)]
struct AnalyticArgs {
    #[command(flatten)]
    multiplier: MultiplierArgs,

    /// Analyze the raw signal instead of removing exceptional-bin content.
    #[arg(long)]
    keep_mean: bool,

    /// Export the analytic signal at engineering scale (f + H[f] instead of
    /// the halved form). Affects only the archived fA planes.
    #[arg(long)]
    engineering_scale: bool,

    /// Quiver subsampling stride.
    #[arg(long, default_value_t = 4)]
    stride: usize,

    /// Input image: binary PGM (P5) or grayscale PNG.
    input: PathBuf,
    /// Output directory for maps and the archive.
    outdir: PathBuf,
}

#[derive(Args)]
struct ReconstructArgs {
    /// Reconstruct from the unit orientation vector alone (lossy).
    #[arg(long)]
    orientation_only: bool,

    /// Add the removed exceptional-bin content back onto the output.
    #[arg(long)]
    restore_removed: bool,

    /// Archive produced by `clifsig analytic`.
    archive: PathBuf,
    /// Output directory.
    outdir: PathBuf,
}

#[derive(Args)]
struct FieldArgs {
    #[command(flatten)]
    multiplier: MultiplierArgs,

    /// Grid rows.
    #[arg(long, default_value_t = 32)]
    rows: usize,
    /// Grid columns.
    #[arg(long, default_value_t = 32)]
    cols: usize,

    /// Output CSV path.
    output: PathBuf,
}

#[derive(Args)]
struct SelftestArgs {
    /// Emit one JSON object per check (the default output is already JSON
    /// lines; the flag is accepted for explicitness).
    #[arg(long)]
    json: bool,

    /// Negative-control hook: corrupt the Hahn construction so the support
    /// check must fail.
    #[arg(long, hide = true)]
    inject_hahn_sign_error: bool,
}

/// Failures carry the exit code: 2 for usage/input problems, 1 for
/// verification failures.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(error: anyhow::Error) -> Self {
        Failure { code: 2, error }
    }

    fn verification(error: anyhow::Error) -> Self {
        Failure { code: 1, error }
    }
}

impl From<clifsig::Error> for Failure {
    fn from(e: clifsig::Error) -> Self {
        Failure::usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analytic(args) => cmd_analytic(args),
        Command::Reconstruct(args) => cmd_reconstruct(args),
        Command::Field(args) => cmd_field(args),
        Command::Selftest(args) => cmd_selftest(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            emit(json!({"error": f.error.to_string(), "code": f.code}));
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

/// Print one JSON line, tolerating a closed stdout (e.g. piping into
/// `head`); the data loss is the reader's choice.
fn emit(line: impl std::fmt::Display) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let _ = writeln!(stdout.lock(), "{line}");
}

fn blade_plane_names() -> [String; 8] {
    std::array::from_fn(|b| format!("fH_b{b}"))
}

fn cmd_analytic(args: AnalyticArgs) -> Result<(), Failure> {
    let config = args.multiplier.to_config()?;
    let image = load_image(&args.input).map_err(|e| Failure::usage(e.into()))?;
    let one_d = matches!(config, MultiplierConfig::ScalarSet1d);
    let shape: Vec<usize> = if one_d {
        if image.height != 1 {
            return Err(Failure::usage(anyhow!(
                "scalar-set-1d expects a height-1 image, got {}x{}",
                image.width,
                image.height
            )));
        }
        vec![image.width]
    } else {
        vec![image.height, image.width]
    };
    let grid = FrequencyGrid::new(&shape);
    let multiplier = config.build(&grid)?;
    multiplier.validate().map_err(|e| Failure::verification(e.into()))?;

    let f_original = image.pixels.clone();
    let (f_clean, removed) = remove_exceptional(&f_original, &multiplier)?;
    let analyzed = if args.keep_mean { &f_original } else { &f_clean };
    let d = decompose(analyzed, &multiplier)?;

    std::fs::create_dir_all(&args.outdir).map_err(|e| Failure::usage(e.into()))?;
    let mut files = export_maps(&d, &args.outdir, args.stride)?;

    // Round-trip residual: H[H[f_clean]] vs f_clean.
    let back = reconstruct(&extended_hilbert(&f_clean, &multiplier)?, &multiplier)?;
    let toggle_residual = max_abs_diff(&back, &f_clean);

    let archive_path = args.outdir.join("decomposition.clifsig");
    let archive = build_archive(&d, &config, &f_original, &f_clean, args.engineering_scale)?;
    archive.save(&archive_path)?;
    files.push(archive_path);

    let report = json!({
        "command": "analytic",
        "multiplier": config.to_string(),
        "class": d.class.to_string(),
        "shape": shape,
        "residuals": {
            "toggle_max_abs": toggle_residual,
            "removed_max_abs": removed.iter().fold(0.0f64, |m, v| m.max(v.abs())),
            "symmetry": multiplier.symmetry_residuals(),
        },
        "outputs": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    });
    emit(&report);
    eprintln!(
        "decomposed {} with the {} multiplier ({} class)",
        args.input.display(),
        config,
        d.class
    );
    Ok(())
}

fn build_archive(
    d: &AnalyticDecomposition,
    config: &MultiplierConfig,
    f_original: &[f64],
    f_clean: &[f64],
    engineering_scale: bool,
) -> Result<FieldArchive, Failure> {
    let mut components: Vec<String> = vec!["f".into(), "f_clean".into()];
    let mut planes: Vec<Vec<f64>> = vec![f_original.to_vec(), f_clean.to_vec()];
    for (b, name) in blade_plane_names().into_iter().enumerate() {
        components.push(name);
        planes.push(d.f_hilbert.blade_plane(b));
    }
    let fa_scale = if engineering_scale { 2.0 } else { 1.0 };
    for b in 0..8 {
        components.push(format!("fA_b{b}"));
        planes.push(
            d.f_analytic
                .blade_plane(b)
                .iter()
                .map(|v| v * fa_scale)
                .collect(),
        );
    }
    components.push("R".into());
    planes.push(d.magnitude.clone());
    components.push("theta".into());
    planes.push(d.theta.clone());
    components.push("valid".into());
    planes.push(d.valid.iter().map(|&v| v as u8 as f64).collect());
    if let HilbertParts::Vector {
        v_norm,
        v_hat,
        sigma,
        kappa,
        orient_valid,
        ..
    } = &d.parts
    {
        components.push("vnorm".into());
        planes.push(v_norm.clone());
        for (k, plane) in v_hat.iter().enumerate() {
            components.push(format!("vhat{}", k + 1));
            planes.push(plane.clone());
        }
        components.push("sigma".into());
        planes.push(sigma.clone());
        components.push("kappa".into());
        planes.push(kappa.clone());
        components.push("orient_valid".into());
        planes.push(orient_valid.iter().map(|&v| v as u8 as f64).collect());
    }
    let header = ArchiveHeader {
        shape: d.shape.clone(),
        components,
        dtype: "f64-le".into(),
        multiplier: Some(config.clone()),
        class: Some(d.class),
    };
    Ok(FieldArchive::new(header, planes)?)
}

fn cmd_reconstruct(args: ReconstructArgs) -> Result<(), Failure> {
    let archive = FieldArchive::load(&args.archive).map_err(|e| Failure::usage(e.into()))?;
    let header = &archive.header;
    let config = header
        .multiplier
        .clone()
        .ok_or_else(|| Failure::usage(anyhow!("archive carries no multiplier description")))?;
    let grid = FrequencyGrid::new(&header.shape);
    let multiplier = config.build(&grid)?;

    let f_original = archive
        .plane("f")
        .ok_or_else(|| Failure::usage(anyhow!("archive is missing the `f` plane")))?
        .to_vec();
    let f_clean = archive
        .plane("f_clean")
        .ok_or_else(|| Failure::usage(anyhow!("archive is missing the `f_clean` plane")))?
        .to_vec();

    std::fs::create_dir_all(&args.outdir).map_err(|e| Failure::usage(e.into()))?;
    let cells = grid.len();

    let (name, mut output, report_bound): (&str, Vec<f64>, Option<f64>) = if args.orientation_only
    {
        let mut v_hat: [Vec<f64>; 3] = Default::default();
        for (k, plane) in v_hat.iter_mut().enumerate() {
            *plane = archive
                .plane(&format!("vhat{}", k + 1))
                .ok_or_else(|| {
                    Failure::usage(anyhow!(
                        "archive has no orientation planes: was it made with a vector-kind multiplier?"
                    ))
                })?
                .to_vec();
        }
        let out = reconstruct_from_orientation(&v_hat, &multiplier)?;
        ("orientation_reconstructed", out, None)
    } else {
        let mut f_h = MultivectorField::zeros(&header.shape, 3, Domain::Spatial);
        for (b, plane_name) in blade_plane_names().into_iter().enumerate() {
            let plane = archive.plane(&plane_name).ok_or_else(|| {
                Failure::usage(anyhow!("archive is missing the `{plane_name}` plane"))
            })?;
            f_h.set_blade_plane(b, plane);
        }
        let out = reconstruct(&f_h, &multiplier)?;
        ("reconstructed", out, Some(1e-8))
    };

    if args.restore_removed {
        for (o, (orig, clean)) in output.iter_mut().zip(f_original.iter().zip(&f_clean)) {
            *o += orig - clean;
        }
    }

    let max_abs_vs_clean = if args.restore_removed {
        max_abs_diff(&output, &f_original)
    } else {
        max_abs_diff(&output, &f_clean)
    };
    let correlation = pearson(&output, &f_original);

    let rows = if header.shape.len() == 2 { header.shape[0] } else { 1 };
    let cols = header.shape[header.shape.len() - 1];
    let pgm = args.outdir.join(format!("{name}.pgm"));
    let clamped: Vec<f64> = output.iter().map(|v| v.clamp(0.0, 1.0)).collect();
    save_pgm(&pgm, cols, rows, &clamped)?;
    let out_archive = args.outdir.join(format!("{name}.clifsig"));
    FieldArchive::new(
        ArchiveHeader {
            shape: header.shape.clone(),
            components: vec![name.to_string()],
            dtype: "f64-le".into(),
            multiplier: Some(config.clone()),
            class: header.class,
        },
        vec![output.clone()],
    )?
    .save(&out_archive)?;

    let _ = cells;
    let report = json!({
        "command": "reconstruct",
        "mode": if args.orientation_only { "orientation-only" } else { "full" },
        "multiplier": config.to_string(),
        "max_abs_error": max_abs_vs_clean,
        "pearson_vs_original": correlation,
        "outputs": [pgm.display().to_string(), out_archive.display().to_string()],
    });
    emit(&report);

    if let Some(bound) = report_bound {
        if max_abs_vs_clean > bound && !args.restore_removed {
            return Err(Failure::verification(anyhow!(
                "full reconstruction error {max_abs_vs_clean:.3e} exceeds {bound:.1e}"
            )));
        }
    }
    eprintln!("wrote {}", pgm.display());
    Ok(())
}

fn cmd_field(args: FieldArgs) -> Result<(), Failure> {
    let config = args.multiplier.to_config()?;
    let grid = FrequencyGrid::new(&[args.rows, args.cols]);
    let multiplier = config.build(&grid)?;
    if multiplier.kind() != MultiplierKind::VectorPseudovector {
        return Err(Failure::usage(anyhow!(
            "`field` needs a vector-kind multiplier; `{config}` is scalar"
        )));
    }
    let csv = multiplier.export_csv()?;
    if let Some(parent) = args.output.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| Failure::usage(e.into()))?;
    }
    std::fs::write(&args.output, csv).map_err(|e| Failure::usage(e.into()))?;
    emit(json!({
            "command": "field",
            "multiplier": config.to_string(),
            "rows": args.rows,
            "cols": args.cols,
            "output": args.output.display().to_string(),
    }));
    Ok(())
}

fn cmd_selftest(args: SelftestArgs) -> Result<(), Failure> {
    let faults = FaultInjection {
        hahn_sign_flip: args.inject_hahn_sign_error,
    };
    let results = run_all(faults);
    for r in &results {
        emit(serde_json::to_string(r).expect("results serialize"));
    }
    let failing: Vec<&str> = results.iter().filter(|r| !r.passed()).map(|r| r.check).collect();
    if failing.is_empty() {
        eprintln!("all {} checks passed", results.len());
        Ok(())
    } else {
        Err(Failure::verification(anyhow!(
            "{} of {} checks failed: {}",
            failing.len(),
            results.len(),
            failing.join(", ")
        )))
    }
}
