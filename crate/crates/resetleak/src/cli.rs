//! Config ingestion, experiment execution, and CSV/JSON export for the
//! command-line front end.
//!
//! Config files are strict JSON: unknown fields are rejected so a typo in an
//! error-rate name fails loudly instead of being ignored. Every numeric CSV
//! value is printed with Rust's shortest round-trip formatting.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use crate::analytic::Axis;
use crate::channels::{MeasurementlessParams, ResetInstrParams, ResetSpec, ThermalParams};
use crate::error::Error;
use crate::experiment::{
    analytic_p_minus, reference_alphas, run_snr_grid, run_sweep_salted, ExperimentConfig, GridParams,
    GridProtocol, SnrGrid, SweepResult, REFERENCE_EXPERIMENTS, REFERENCE_SHOTS,
};
use crate::otp::{OtpKind, OtpScheme};
use crate::states::AxisVector;
use crate::verify::{run_verification, VerifyOptions, VerifyReport};

/// Exit code for configuration errors.
pub const EXIT_CONFIG: i32 = 2;
/// Exit code for I/O errors.
pub const EXIT_IO: i32 = 3;
/// Exit code for failed verification.
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Io(String),
    Verification,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Io(_) => EXIT_IO,
            CliError::Verification => EXIT_VERIFICATION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "config error: {msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
            CliError::Verification => write!(f, "verification failed"),
        }
    }
}

impl std::error::Error for CliError {}

fn config_err(err: impl fmt::Display) -> CliError {
    CliError::Config(err.to_string())
}

fn io_err(path: &Path, err: impl fmt::Display) -> CliError {
    CliError::Io(format!("{}: {err}", path.display()))
}

fn default_otps() -> Vec<String> {
    vec!["none".into(), "cotp".into(), "qotp".into()]
}

fn default_axes() -> Vec<String> {
    vec!["z".into()]
}

fn default_shots() -> u64 {
    REFERENCE_SHOTS
}

fn default_experiments() -> u32 {
    REFERENCE_EXPERIMENTS
}

/// Reset description shared by both commands. All parameters are optional at
/// parse time; `build` enforces that exactly the fields of the chosen kind
/// are present.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ResetConfig {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m10: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m01: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_bf: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_r: Option<f64>,
}

impl ResetConfig {
    fn require(&self, field: &str, value: Option<f64>) -> Result<f64, CliError> {
        value.ok_or_else(|| {
            config_err(format!(
                "reset kind `{}` requires field `{field}`",
                self.kind
            ))
        })
    }

    fn forbid(&self, fields: &[(&str, Option<f64>)]) -> Result<(), CliError> {
        for (name, value) in fields {
            if value.is_some() {
                return Err(config_err(format!(
                    "field `{name}` does not apply to reset kind `{}`",
                    self.kind
                )));
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<ResetSpec, CliError> {
        match self.kind.as_str() {
            "thermal" => {
                self.forbid(&[
                    ("m10", self.m10),
                    ("m01", self.m01),
                    ("p_bf", self.p_bf),
                    ("p_r", self.p_r),
                ])?;
                let gamma1 = self.require("gamma1", self.gamma1)?;
                let gamma2 = self.require("gamma2", self.gamma2)?;
                let p0 = self.p0.unwrap_or(1.0);
                let params = ThermalParams::with_populations(gamma1, gamma2, p0, 1.0 - p0)
                    .map_err(config_err)?;
                Ok(ResetSpec::Thermal(params))
            }
            "reset_instruction" => {
                self.forbid(&[
                    ("gamma1", self.gamma1),
                    ("gamma2", self.gamma2),
                    ("p0", self.p0),
                    ("p_r", self.p_r),
                ])?;
                let m10 = self.require("m10", self.m10)?;
                let m01 = self.require("m01", self.m01)?;
                let params =
                    ResetInstrParams::new(m10, m01, self.p_bf.unwrap_or(0.0), AxisVector::z())
                        .map_err(config_err)?;
                Ok(ResetSpec::Instruction(params))
            }
            "measurementless" => {
                self.forbid(&[
                    ("gamma1", self.gamma1),
                    ("gamma2", self.gamma2),
                    ("p0", self.p0),
                    ("m10", self.m10),
                    ("m01", self.m01),
                    ("p_bf", self.p_bf),
                ])?;
                let params =
                    MeasurementlessParams::new(self.require("p_r", self.p_r)?).map_err(config_err)?;
                Ok(ResetSpec::Measurementless(params))
            }
            other => Err(config_err(format!(
                "unknown reset kind `{other}` (expected thermal, reset_instruction, or measurementless)"
            ))),
        }
    }
}

/// Config for `sweep`: tabulates P(-1) per (pad, alpha, experiment).
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub victim_axis: String,
    pub attacker_axis: String,
    #[serde(default = "default_otps")]
    pub otps: Vec<String>,
    pub reset: ResetConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alphas: Option<Vec<f64>>,
    #[serde(default = "default_shots")]
    pub n_shots: u64,
    #[serde(default = "default_experiments")]
    pub n_experiments: u32,
    #[serde(default)]
    pub master_seed: u64,
}

/// One grid axis: the parameter name and its values.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ParamSpec {
    pub name: String,
    pub values: Vec<f64>,
}

/// Config for `snr-grid`: empirical and theoretical SNR per grid cell.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub victim_axis: String,
    #[serde(default = "default_axes")]
    pub attacker_axes: Vec<String>,
    #[serde(default = "default_otps")]
    pub otps: Vec<String>,
    pub reset_kind: String,
    pub param1: ParamSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param2: Option<ParamSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_bf: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alphas: Option<Vec<f64>>,
    #[serde(default = "default_shots")]
    pub n_shots: u64,
    #[serde(default = "default_experiments")]
    pub n_experiments: u32,
    #[serde(default)]
    pub master_seed: u64,
}

impl GridConfig {
    fn build_params(&self) -> Result<GridParams, CliError> {
        let expect_param = |spec: &ParamSpec, expected: &str| -> Result<Vec<f64>, CliError> {
            if spec.name != expected {
                return Err(config_err(format!(
                    "reset kind `{}` expects parameter `{expected}`, got `{}`",
                    self.reset_kind, spec.name
                )));
            }
            if spec.values.is_empty() {
                return Err(config_err(format!("parameter `{expected}` has no values")));
            }
            Ok(spec.values.clone())
        };
        match self.reset_kind.as_str() {
            "thermal" => {
                if self.p_bf.is_some() {
                    return Err(config_err(
                        "field `p_bf` does not apply to reset kind `thermal`",
                    ));
                }
                let param2 = self
                    .param2
                    .as_ref()
                    .ok_or_else(|| config_err("thermal grids need `param2` (gamma2)"))?;
                Ok(GridParams::Thermal {
                    gamma1: expect_param(&self.param1, "gamma1")?,
                    gamma2: expect_param(param2, "gamma2")?,
                    p0: self.p0.unwrap_or(1.0),
                })
            }
            "reset_instruction" => {
                if self.p0.is_some() {
                    return Err(config_err(
                        "field `p0` does not apply to reset kind `reset_instruction`",
                    ));
                }
                let param2 = self
                    .param2
                    .as_ref()
                    .ok_or_else(|| config_err("reset_instruction grids need `param2` (m01)"))?;
                Ok(GridParams::Instruction {
                    m10: expect_param(&self.param1, "m10")?,
                    m01: expect_param(param2, "m01")?,
                    p_bf: self.p_bf.unwrap_or(0.0),
                })
            }
            "measurementless" => {
                if self.param2.is_some() {
                    return Err(config_err(
                        "measurementless grids are one-dimensional; drop `param2`",
                    ));
                }
                if self.p_bf.is_some() || self.p0.is_some() {
                    return Err(config_err(
                        "fields `p_bf`/`p0` do not apply to reset kind `measurementless`",
                    ));
                }
                Ok(GridParams::Measurementless {
                    p_r: expect_param(&self.param1, "p_r")?,
                })
            }
            other => Err(config_err(format!(
                "unknown reset kind `{other}` (expected thermal, reset_instruction, or measurementless)"
            ))),
        }
    }
}

/// Run metadata written next to every data file.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub library_version: String,
    pub master_seed: u64,
    pub started_at: String,
    pub finished_at: String,
    pub config: serde_json::Value,
    pub outputs: Vec<String>,
}

fn parse_axis(name: &str, value: &str) -> Result<Axis, CliError> {
    value
        .parse::<Axis>()
        .map_err(|e| config_err(format!("{name}: {e}")))
}

fn parse_otps(values: &[String]) -> Result<Vec<OtpKind>, CliError> {
    if values.is_empty() {
        return Err(config_err("otp list must not be empty"));
    }
    values
        .iter()
        .map(|v| v.parse::<OtpKind>().map_err(config_err))
        .collect()
}

fn resolve_alphas(alphas: &Option<Vec<f64>>) -> Result<Vec<f64>, CliError> {
    match alphas {
        None => Ok(reference_alphas()),
        Some(list) if list.is_empty() => Err(config_err("alpha list must not be empty")),
        Some(list) => Ok(list.clone()),
    }
}

fn with_thread_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Io(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn now_rfc3339() -> String {
    chrono::Utc::now().to_rfc3339()
}

/// Shortest representation that parses back to the same value.
fn fmt_f64(x: f64) -> String {
    format!("{x}")
}

fn read_config<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<(T, serde_json::Value), CliError> {
    let raw = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let parsed: T = serde_json::from_str(&raw)
        .map_err(|e| config_err(format!("{}: {e}", path.display())))?;
    let echo: serde_json::Value = serde_json::from_str(&raw)
        .map_err(|e| config_err(format!("{}: {e}", path.display())))?;
    Ok((parsed, echo))
}

fn write_outputs(
    out_dir: &Path,
    command: &str,
    data_name: &str,
    data: String,
    config_echo: serde_json::Value,
    master_seed: u64,
    started_at: String,
) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(out_dir).map_err(|e| io_err(out_dir, e))?;
    let data_path = out_dir.join(data_name);
    fs::write(&data_path, data).map_err(|e| io_err(&data_path, e))?;
    let manifest = RunManifest {
        command: command.to_string(),
        library_version: env!("CARGO_PKG_VERSION").to_string(),
        master_seed,
        started_at,
        finished_at: now_rfc3339(),
        config: config_echo,
        outputs: vec![data_name.to_string()],
    };
    let manifest_path = out_dir.join("manifest.json");
    let body = serde_json::to_string_pretty(&manifest)
        .map_err(|e| CliError::Io(format!("manifest: {e}")))?;
    fs::write(&manifest_path, body).map_err(|e| io_err(&manifest_path, e))?;
    Ok(vec![data_path, manifest_path])
}

const SWEEP_HEADER: &str = "reset_kind,otp,victim_axis,attacker_axis,alpha_rad,experiment_index,n_shots,p_minus_empirical,p_minus_analytic";

fn sweep_csv(
    rows: &[(OtpKind, SweepResult)],
    base: &ExperimentConfig,
    alphas: &[f64],
) -> String {
    let mut csv = String::from(SWEEP_HEADER);
    csv.push('\n');
    for (otp, sweep) in rows {
        for (ai, &alpha) in alphas.iter().enumerate() {
            let mut point = base.clone();
            point.otp = OtpScheme::standard(*otp);
            point.alpha = alpha;
            let analytic = analytic_p_minus(&point);
            for ei in 0..sweep.n_experiments as usize {
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    base.reset.kind_name(),
                    otp,
                    base.victim_axis,
                    base.attacker_axis,
                    fmt_f64(alpha),
                    ei,
                    sweep.n_shots,
                    fmt_f64(sweep.frequencies[ai][ei]),
                    fmt_f64(analytic),
                ));
            }
        }
    }
    csv
}

const GRID_HEADER: &str = "reset_kind,param1_name,param1_value,param2_name,param2_value,otp,attacker_axis,snr_empirical,snr_theoretical,valid";

fn grid_csv(grid: &SnrGrid) -> String {
    let mut csv = String::from(GRID_HEADER);
    csv.push('\n');
    for cell in &grid.cells {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            grid.reset_kind,
            grid.param1_name,
            fmt_f64(grid.param1_values[cell.i1]),
            grid.param2_name,
            fmt_f64(grid.param2_values[cell.i2]),
            cell.otp,
            cell.attacker_axis,
            fmt_f64(cell.snr_empirical),
            fmt_f64(cell.snr_theoretical),
            cell.valid,
        ));
    }
    csv
}

/// `sweep --config <file> --out <dir>`: writes `sweep.csv` and
/// `manifest.json`, one CSV row per (pad, alpha, experiment).
pub fn cmd_sweep(
    config_path: &Path,
    out_dir: &Path,
    seed_override: Option<u64>,
    threads: usize,
) -> Result<Vec<PathBuf>, CliError> {
    let started_at = now_rfc3339();
    let (config, echo) = read_config::<SweepConfig>(config_path)?;
    let victim_axis = parse_axis("victim_axis", &config.victim_axis)?;
    let attacker_axis = parse_axis("attacker_axis", &config.attacker_axis)?;
    let otps = parse_otps(&config.otps)?;
    let reset = config.reset.build()?;
    let alphas = resolve_alphas(&config.alphas)?;
    let master_seed = seed_override.unwrap_or(config.master_seed);

    let mut base = ExperimentConfig::reference_protocol(
        victim_axis,
        OtpScheme::none(),
        reset,
        attacker_axis,
    );
    base.n_shots = config.n_shots;
    base.n_experiments = config.n_experiments;
    base.master_seed = master_seed;
    base.validate().map_err(config_err)?;

    let rows = with_thread_pool(threads, || -> Result<Vec<(OtpKind, SweepResult)>, Error> {
        otps.iter()
            .enumerate()
            .map(|(oi, &otp)| {
                let mut cfg = base.clone();
                cfg.otp = OtpScheme::standard(otp);
                run_sweep_salted(&cfg, &alphas, oi as u64).map(|sweep| (otp, sweep))
            })
            .collect()
    })?
    .map_err(config_err)?;

    let csv = sweep_csv(&rows, &base, &alphas);
    write_outputs(out_dir, "sweep", "sweep.csv", csv, echo, master_seed, started_at)
}

/// `snr-grid --config <file> --out <dir>`: writes `snr_grid.csv` and
/// `manifest.json`, one row per (cell, pad, axis).
pub fn cmd_snr_grid(
    config_path: &Path,
    out_dir: &Path,
    seed_override: Option<u64>,
    threads: usize,
) -> Result<Vec<PathBuf>, CliError> {
    let started_at = now_rfc3339();
    let (config, echo) = read_config::<GridConfig>(config_path)?;
    let victim_axis = parse_axis("victim_axis", &config.victim_axis)?;
    let axes = config
        .attacker_axes
        .iter()
        .map(|a| parse_axis("attacker_axes", a))
        .collect::<Result<Vec<Axis>, CliError>>()?;
    if axes.is_empty() {
        return Err(config_err("attacker_axes must not be empty"));
    }
    let otps = parse_otps(&config.otps)?;
    let params = config.build_params()?;
    let alphas = resolve_alphas(&config.alphas)?;
    let master_seed = seed_override.unwrap_or(config.master_seed);
    let proto = GridProtocol {
        victim_axis,
        alphas,
        n_shots: config.n_shots,
        n_experiments: config.n_experiments,
        master_seed,
    };

    let grid = with_thread_pool(threads, || run_snr_grid(&params, &otps, &axes, &proto))?
        .map_err(config_err)?;

    let csv = grid_csv(&grid);
    write_outputs(
        out_dir,
        "snr-grid",
        "snr_grid.csv",
        csv,
        echo,
        master_seed,
        started_at,
    )
}

/// `verify [--quick]`: runs the self checks and renders one line per check.
pub fn cmd_verify(quick: bool, seed: u64, threads: usize) -> Result<VerifyReport, CliError> {
    with_thread_pool(threads, || {
        run_verification(&VerifyOptions {
            quick,
            seed,
            extra_kraus: Vec::new(),
        })
    })
}
