//! Command-line front end.
//!
//! Every subcommand resolves a [`RunConfig`] from built-in defaults, an
//! optional flat JSON file (`--config`) and command-line flags, in increasing
//! order of precedence. Data files go to `output_dir` next to a
//! `manifest.json` from which `ionchain replay` reproduces them.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::chain::{ChainParams, DisorderParams};
use crate::error::{domain, Error, Result};
use crate::experiments::{
    calibrated_traps, default_k_grid, disorder_localization, estimate_kc, kc_scaling_scan, minima_statistics,
    sweep_gap_vs_k, SweepRecord, TransitionMethod,
};
use crate::ground_state::{calibrate_trap, central_density, ground_state, RelaxSettings};
use crate::maps::{
    ion_map_orbit, resonant_momentum, standard_map_orbit, IonMapState, StandardMapState, GOLDEN_MEAN,
};
use crate::phonons::{localization_report, spectrum};
use crate::report::{self, fmt_g, PlotOptions, Series};
use crate::units::{derive_scales, PhysicalInputs};

pub const THREADS_ENV: &str = "IONCHAIN_THREADS";
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Parser)]
#[command(name = "ionchain", version, about = "Ion chains in a periodic lattice: equilibria, phonons, pinning")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// SI values of the dimensionless units.
    Units(RunArgs),
    /// Multi-start ground state of one chain.
    GroundState(RunArgs),
    /// Trap frequency giving the target density in the central third.
    CalibrateTrap(RunArgs),
    /// Phonon spectrum and mode localization of the ground state.
    Phonons(RunArgs),
    /// Orbit of the ion equilibrium map or of the standard map.
    MapOrbit(RunArgs),
    /// Lowest phonon frequency against lattice amplitude.
    SweepK(RunArgs),
    /// Sweep plus estimate of the transition amplitude.
    FindKc(RunArgs),
    /// Transition amplitude against density.
    KcScaling(RunArgs),
    /// Enumeration of metastable minima.
    Minima(RunArgs),
    /// Mode localization in disordered microtrap arrays.
    Disorder(RunArgs),
    /// Re-run the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Flat JSON file with any of the configuration keys.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Worker threads; falls back to IONCHAIN_THREADS.
    #[arg(long)]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub overlay: ConfigOverlay,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    /// Write the outputs here instead of the recorded directory.
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    NCollapse,
    GapThreshold,
}

impl From<MethodArg> for TransitionMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::NCollapse => TransitionMethod::NCollapse,
            MethodArg::GapThreshold => TransitionMethod::GapThreshold,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    Ion,
    Standard,
}

/// Partial configuration, as read from a file or from flags.
#[derive(Debug, Clone, Default, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverlay {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub omega_tr: Option<f64>,
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long)]
    pub nu: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub n_list: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    pub k_grid: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub k_list: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub nu_list: Option<Vec<f64>>,
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub extended: Option<bool>,
    #[arg(long)]
    pub n_starts: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub grad_tolerance: Option<f64>,
    #[arg(long)]
    pub max_iterations: Option<usize>,
    #[arg(long)]
    pub perturbation_scale: Option<f64>,
    #[arg(long)]
    pub density_tolerance: Option<f64>,
    #[arg(long)]
    pub method: Option<MethodArg>,
    #[arg(long)]
    pub disorder_w: Option<f64>,
    #[arg(long)]
    pub trap_stiffness: Option<f64>,
    #[arg(long)]
    pub mean_spacing: Option<f64>,
    #[arg(long)]
    pub n_seeds: Option<usize>,
    #[arg(long)]
    pub map: Option<MapKind>,
    #[arg(long)]
    pub k_eff: Option<f64>,
    #[arg(long)]
    pub x0: Option<f64>,
    #[arg(long)]
    pub y0: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub period: Option<f64>,
    #[arg(long)]
    pub mass_amu: Option<f64>,
    #[arg(long)]
    pub charge_e: Option<f64>,
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<OutputFormat>,
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub plot: Option<bool>,
}

/// Fully resolved configuration.
///
/// Defaults: `n` 50; `omega_tr` calibrated at `K = 0` for density `nu` when
/// absent; `k` 0.03; `nu` the golden mean; `n_list` {50, 150} ({50, 150, 300}
/// with `extended`), {50, 100, 200} for `disorder`, {25, 50} for `minima`;
/// `k_grid` 24 log-spaced points in [0.005, 0.3] densified in [0.03, 0.08];
/// `k_list` {0, 0.2}; `nu_list` {1.0, 1.3, 1.618, 2.0, 2.6}; `n_starts` 1
/// (100 for `minima`); `seed` 0; `grad_tolerance` 1e-10; `max_iterations`
/// 200000; `perturbation_scale` 0.3; `density_tolerance` 0.005; `method`
/// n-collapse; `disorder_w` 0.25; `trap_stiffness` 0.2; `mean_spacing` 2π;
/// `n_seeds` 10; `map` standard; `k_eff` 0.5; `x0` 0.1; `y0` 0.05 (the
/// resonant momentum for the ion map); `steps` 1000; `period` 1e-6 m;
/// `mass_amu` 40; `charge_e` 1; `output_dir` `ionchain-out`; `format` csv;
/// `plot` false.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub n: usize,
    pub omega_tr: Option<f64>,
    pub k: f64,
    pub nu: f64,
    pub n_list: Vec<usize>,
    pub k_grid: Vec<f64>,
    pub k_list: Vec<f64>,
    pub nu_list: Vec<f64>,
    pub n_starts: usize,
    pub seed: u64,
    pub grad_tolerance: f64,
    pub max_iterations: usize,
    pub perturbation_scale: f64,
    pub density_tolerance: f64,
    pub method: MethodArg,
    pub disorder_w: f64,
    pub trap_stiffness: f64,
    pub mean_spacing: f64,
    pub n_seeds: usize,
    pub map: MapKind,
    pub k_eff: f64,
    pub x0: f64,
    pub y0: Option<f64>,
    pub steps: usize,
    pub period: f64,
    pub mass_amu: f64,
    pub charge_e: f64,
    pub output_dir: PathBuf,
    pub format: OutputFormat,
    pub plot: bool,
}

impl ConfigOverlay {
    /// `other`'s values win where present.
    pub fn merged(&self, other: &ConfigOverlay) -> ConfigOverlay {
        macro_rules! pick {
            ($($f:ident),*) => { ConfigOverlay { $($f: other.$f.clone().or_else(|| self.$f.clone())),* } };
        }
        pick!(
            n, omega_tr, k, nu, n_list, k_grid, k_list, nu_list, extended, n_starts, seed, grad_tolerance,
            max_iterations, perturbation_scale, density_tolerance, method, disorder_w, trap_stiffness,
            mean_spacing, n_seeds, map, k_eff, x0, y0, steps, period, mass_amu, charge_e, output_dir, format,
            plot
        )
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Fills every missing key with the default for `command`.
    pub fn resolve(&self, command: &str) -> RunConfig {
        let extended = self.extended.unwrap_or(false);
        let default_lengths = match command {
            "disorder" => vec![50, 100, 200],
            "minima" => vec![25, 50],
            _ if extended => vec![50, 150, 300],
            _ => vec![50, 150],
        };
        RunConfig {
            n: self.n.unwrap_or(50),
            omega_tr: self.omega_tr,
            k: self.k.unwrap_or(0.03),
            nu: self.nu.unwrap_or(GOLDEN_MEAN),
            n_list: self.n_list.clone().unwrap_or(default_lengths),
            k_grid: self.k_grid.clone().unwrap_or_else(default_k_grid),
            k_list: self.k_list.clone().unwrap_or_else(|| vec![0.0, 0.2]),
            nu_list: self.nu_list.clone().unwrap_or_else(|| vec![1.0, 1.3, GOLDEN_MEAN, 2.0, 2.6]),
            n_starts: self.n_starts.unwrap_or(if command == "minima" { 100 } else { 1 }),
            seed: self.seed.unwrap_or(0),
            grad_tolerance: self.grad_tolerance.unwrap_or(1e-10),
            max_iterations: self.max_iterations.unwrap_or(200_000),
            perturbation_scale: self.perturbation_scale.unwrap_or(0.3),
            density_tolerance: self.density_tolerance.unwrap_or(0.005),
            method: self.method.unwrap_or(MethodArg::NCollapse),
            disorder_w: self.disorder_w.unwrap_or(0.25),
            trap_stiffness: self.trap_stiffness.unwrap_or(0.2),
            mean_spacing: self.mean_spacing.unwrap_or(2.0 * std::f64::consts::PI),
            n_seeds: self.n_seeds.unwrap_or(10),
            map: self.map.unwrap_or(MapKind::Standard),
            k_eff: self.k_eff.unwrap_or(0.5),
            x0: self.x0.unwrap_or(0.1),
            y0: self.y0,
            steps: self.steps.unwrap_or(1000),
            period: self.period.unwrap_or(1e-6),
            mass_amu: self.mass_amu.unwrap_or(40.0),
            charge_e: self.charge_e.unwrap_or(1.0),
            output_dir: self.output_dir.clone().unwrap_or_else(|| PathBuf::from("ionchain-out")),
            format: self.format.unwrap_or(OutputFormat::Csv),
            plot: self.plot.unwrap_or(false),
        }
    }
}

impl RunConfig {
    pub fn relax_settings(&self) -> RelaxSettings {
        RelaxSettings {
            grad_tolerance: self.grad_tolerance,
            max_iterations: self.max_iterations,
            n_starts: self.n_starts,
            perturbation_scale: self.perturbation_scale,
            seed: self.seed,
        }
    }

    pub fn disorder(&self) -> DisorderParams {
        DisorderParams {
            mean_spacing: self.mean_spacing,
            relative_halfwidth: self.disorder_w,
            trap_stiffness: self.trap_stiffness,
            seed: self.seed,
        }
    }

    fn trap_frequency(&self, n: usize) -> Result<f64> {
        match self.omega_tr {
            Some(w) => Ok(w),
            None => Ok(calibrate_trap(n, self.nu, 0.0, self.density_tolerance, &self.relax_settings())?.omega_tr),
        }
    }

    fn traps(&self) -> Result<Vec<(usize, f64)>> {
        match self.omega_tr {
            Some(w) => Ok(self.n_list.iter().map(|&n| (n, w)).collect()),
            None => calibrated_traps(&self.n_list, self.nu, 0.0, self.density_tolerance, &self.relax_settings()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageStatus {
    pub name: String,
    pub status: String,
    pub outputs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: RunConfig,
    pub seeds: Vec<u64>,
    pub wall_time_s: f64,
    pub stages: Vec<StageStatus>,
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code: 0 on success, 1 on a domain or I/O error, 2 on a
/// usage error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

fn dispatch(command: Command) -> std::result::Result<(), Failure> {
    let (name, args) = match command {
        Command::Replay(r) => return replay(&r),
        Command::Units(a) => ("units", a),
        Command::GroundState(a) => ("ground-state", a),
        Command::CalibrateTrap(a) => ("calibrate-trap", a),
        Command::Phonons(a) => ("phonons", a),
        Command::MapOrbit(a) => ("map-orbit", a),
        Command::SweepK(a) => ("sweep-k", a),
        Command::FindKc(a) => ("find-kc", a),
        Command::KcScaling(a) => ("kc-scaling", a),
        Command::Minima(a) => ("minima", a),
        Command::Disorder(a) => ("disorder", a),
    };
    let file = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            ConfigOverlay::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        None => ConfigOverlay::default(),
    };
    let config = file.merged(&args.overlay).resolve(name);
    configure_threads(args.threads);
    execute(name, &config)?;
    Ok(())
}

fn replay(r: &ReplayArgs) -> std::result::Result<(), Failure> {
    let text = fs::read_to_string(&r.manifest).map_err(|e| Failure::Usage(format!("{}: {e}", r.manifest.display())))?;
    let manifest: RunManifest =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", r.manifest.display())))?;
    let mut config = manifest.config;
    if let Some(dir) = &r.output_dir {
        config.output_dir = dir.clone();
    }
    configure_threads(r.threads);
    execute(&manifest.command, &config)?;
    Ok(())
}

fn configure_threads(flag: Option<usize>) {
    let n = flag.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()));
    if let Some(n) = n.filter(|&n| n > 0) {
        // a pool that already exists keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Runs `command` with a resolved configuration, writing data files and the
/// manifest to `config.output_dir`.
pub fn execute(command: &str, config: &RunConfig) -> Result<()> {
    let started = Instant::now();
    fs::create_dir_all(&config.output_dir)
        .map_err(|e| Error::Io(format!("{}: {e}", config.output_dir.display())))?;
    let mut out = Outputs::new(config);
    let result = run_command(command, config, &mut out);
    let status = match &result {
        Ok(()) => "ok".to_string(),
        Err(e) => format!("error: {e}"),
    };
    let manifest = RunManifest {
        tool: "ionchain".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: command.into(),
        config: config.clone(),
        seeds: vec![config.seed],
        wall_time_s: started.elapsed().as_secs_f64(),
        stages: vec![StageStatus {
            name: command.into(),
            status,
            outputs: out.written,
        }],
    };
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write_file(&config.output_dir.join(MANIFEST_FILE), &text)?;
    result
}

struct Outputs<'a> {
    config: &'a RunConfig,
    written: Vec<String>,
}

impl<'a> Outputs<'a> {
    fn new(config: &'a RunConfig) -> Self {
        Self {
            config,
            written: Vec::new(),
        }
    }

    /// Writes one table under `stem` in the configured format and echoes it
    /// to standard output.
    fn table<T: Serialize>(&mut self, stem: &str, csv: impl FnOnce() -> String, json: &T) -> Result<()> {
        let (name, text) = match self.config.format {
            OutputFormat::Csv => (format!("{stem}.csv"), csv()),
            OutputFormat::Json => (
                format!("{stem}.json"),
                serde_json::to_string_pretty(json).expect("records serialize") + "\n",
            ),
        };
        self.file(&name, &text)?;
        print!("{text}");
        Ok(())
    }

    fn file(&mut self, name: &str, text: &str) -> Result<()> {
        write_file(&self.config.output_dir.join(name), text)?;
        self.written.push(name.to_string());
        Ok(())
    }

    fn plot(&mut self, name: &str, series: &[Series], opts: &PlotOptions) -> Result<()> {
        if self.config.plot {
            report::write_svg_plot(series, opts, &self.config.output_dir.join(name))?;
            self.written.push(name.to_string());
        }
        Ok(())
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn run_command(command: &str, c: &RunConfig, out: &mut Outputs) -> Result<()> {
    let settings = c.relax_settings();
    match command {
        "units" => {
            let scales = derive_scales(&PhysicalInputs::from_amu(c.period, c.mass_amu, c.charge_e)?)?;
            let text = serde_json::to_string_pretty(&scales).expect("scales serialize") + "\n";
            out.file("units.json", &text)?;
            print!("{text}");
        }
        "ground-state" => {
            let params = ChainParams::periodic(c.n, c.trap_frequency(c.n)?, c.k)?;
            let (best, catalog) = ground_state(&params, &settings, c.nu)?;
            eprintln!(
                "E0 = {}, {} distinct minima, central density {}",
                fmt_g(best.energy),
                catalog.n_distinct,
                central_density(&best.positions).map(fmt_g).unwrap_or_else(|_| "n/a".into())
            );
            out.table("configuration", || report::configuration_csv(&best), &best)?;
        }
        "calibrate-trap" => {
            let cal = calibrate_trap(c.n, c.nu, c.k, c.density_tolerance, &settings)?;
            let text = serde_json::to_string_pretty(&serde_json::json!({
                "n": c.n,
                "nu": c.nu,
                "k": c.k,
                "omega_tr": cal.omega_tr,
                "central_density": cal.central_density,
                "n_probes": cal.n_probes,
            }))
            .expect("json value")
                + "\n";
            out.file("calibration.json", &text)?;
            print!("{text}");
        }
        "phonons" => {
            let params = ChainParams::periodic(c.n, c.trap_frequency(c.n)?, c.k)?;
            let (best, _) = ground_state(&params, &settings, c.nu)?;
            let spec = spectrum(&params, &best)?;
            let modes = localization_report(&spec);
            out.table("phonons", || report::phonons_csv(&modes), &modes)?;
            let pts = modes.iter().map(|m| (m.k_scaled, m.omega)).collect();
            out.plot(
                "spectrum.svg",
                &[Series::new(format!("K = {}", fmt_g(c.k)), pts)],
                &PlotOptions {
                    title: format!("N = {}", c.n),
                    x_label: "k = i/N".into(),
                    y_label: "omega".into(),
                    log_x: false,
                },
            )?;
        }
        "map-orbit" => {
            let points: Vec<(f64, f64)> = match c.map {
                MapKind::Standard => {
                    let s = StandardMapState {
                        x: c.x0,
                        y: c.y0.unwrap_or(0.05),
                    };
                    standard_map_orbit(s, c.k_eff, c.steps).iter().map(|s| (s.x, s.y)).collect()
                }
                MapKind::Ion => {
                    let p0 = match c.y0 {
                        Some(p) => p,
                        None => resonant_momentum(c.nu)?,
                    };
                    let w = c.omega_tr.unwrap_or(0.0);
                    ion_map_orbit(IonMapState::new(c.x0, p0)?, c.k, w, c.steps)?
                        .iter()
                        .map(|s| (s.x, s.p))
                        .collect()
                }
            };
            out.table("map_orbit", || report::map_orbit_csv(&points), &points)?;
        }
        "sweep-k" | "find-kc" => {
            let records = sweep_gap_vs_k(&c.k_grid, &c.traps()?, c.nu, &settings)?;
            out.table("sweep", || report::sweep_csv(&records), &records)?;
            out.plot("gap_vs_k.svg", &gap_series(&records), &gap_plot_options())?;
            if command == "find-kc" {
                let est = estimate_kc(&records, c.method.into())?;
                eprintln!("K_c = {} ({})", fmt_g(est.k_c_estimate), est.method.name());
                let ests = [est];
                out.table("transition", || report::transition_csv(&ests), &ests)?;
            }
        }
        "kc-scaling" => {
            let scan = kc_scaling_scan(&c.nu_list, c.n, c.method.into(), &settings)?;
            eprintln!(
                "K_c ~ {} nu^{}",
                fmt_g(scan.law.prefactor),
                fmt_g(scan.law.exponent)
            );
            let rows: Vec<[String; 2]> = scan
                .densities
                .iter()
                .zip(&scan.k_c)
                .map(|(nu, kc)| [fmt_g(*nu), fmt_g(*kc)])
                .collect();
            out.table("kc_scaling", || report::csv_table(["nu", "k_c"], rows), &scan)?;
        }
        "minima" => {
            let traps = c.traps()?;
            let records = minima_statistics(&c.k_list, &traps, c.nu, &settings)?;
            out.table("minima", || report::minima_csv(&records), &records)?;
        }
        "disorder" => {
            let study = disorder_localization(&c.n_list, &c.disorder(), c.n_seeds, &settings)?;
            for s in &study.summaries {
                eprintln!(
                    "N = {}: median PR {}, min omega {}",
                    s.n,
                    fmt_g(s.pr_median),
                    fmt_g(s.min_omega_median)
                );
            }
            out.table("disorder", || report::disorder_csv(&study.records), &study)?;
        }
        other => return Err(domain(format!("unknown command {other}"))),
    }
    Ok(())
}

fn gap_series(records: &[SweepRecord]) -> Vec<Series> {
    let mut lengths: Vec<usize> = records.iter().map(|r| r.n).collect();
    lengths.dedup();
    lengths
        .into_iter()
        .map(|n| {
            let pts = records
                .iter()
                .filter(|r| r.n == n && r.converged && r.k > 0.0)
                .map(|r| (r.k, r.omega0))
                .collect();
            Series::new(format!("N = {n}"), pts)
        })
        .filter(|s| !s.points.is_empty())
        .collect()
}

fn gap_plot_options() -> PlotOptions {
    PlotOptions {
        title: "lowest phonon frequency".into(),
        x_label: "K".into(),
        y_label: "omega0".into(),
        log_x: true,
    }
}

