//! Command line front end for the singularity spectrum toolkit.
//!
//! Subcommands:
//! * `spectrum`       spectral exponents of an isolated hypersurface germ
//! * `tjurina`        Milnor/Tjurina data with excluded exponents and bounds
//! * `check`          variance-versus-range inequality checks
//! * `catalog`        list, verify, and sweep the built-in family catalog
//! * `emit-singular`  cross-validation script for the SINGULAR system
//!
//! Stdout carries data only; diagnostics go to stderr. All rational values
//! are printed exactly as `p/q` strings (integers without the `/q`). Exit
//! codes: 0 success, 2 parse error, 3 not an isolated singularity, 4
//! unresolved Newton degeneracy, 5 unsupported truncation length, 6 unknown
//! family, 1 any other failure.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use singspec_core::catalog::{Catalog, FamilySpec, ParamMap, VerificationRecord};
use singspec_core::hertling::{
    hertling_check, reduced_variance_check, variance_check_mean, CheckMode, InequalityVerdict,
};
use singspec_core::localstd::StdOptions;
use singspec_core::spectrum::{
    spectrum_newton, spectrum_quasihomogeneous, Spectrum, SpectrumOptions,
};
use singspec_core::tjurina::exclusion_report;
use singspec_core::{Error, Polynomial, Rat, Result};

// ---------------------------------------------------------------------------
// Argument definitions.

#[derive(Parser)]
#[command(
    name = "singspec",
    version,
    about = "Spectra, Tjurina spectra, and variance bounds of isolated hypersurface singularities",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the singularity spectrum of a germ.
    Spectrum(SpectrumArgs),
    /// Compute Milnor and Tjurina data, excluded exponents, and bounds.
    Tjurina(TjurinaArgs),
    /// Run a variance inequality check on a germ or an exponent file.
    Check(CheckArgs),
    /// Inspect and verify the catalog of parametric families.
    Catalog(CatalogCmd),
    /// Emit a SINGULAR script that recomputes the same invariants.
    EmitSingular(EmitArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    /// Germ as a polynomial in x, y, z with rational coefficients.
    poly: String,
    /// Number of variables; inferred from the support when omitted.
    #[arg(long)]
    nvars: Option<usize>,
    /// Comma separated positive weights; selects the weighted-homogeneous
    /// route instead of the Newton diagram route.
    #[arg(long, value_name = "W0,W1,...")]
    weights: Option<String>,
    /// Skip the Newton non-degeneracy gate and trust the input.
    #[arg(long)]
    assume_nondegenerate: bool,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Also print decimal approximations of the exponents.
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
struct TjurinaArgs {
    /// Germ as a polynomial in x, y, z with rational coefficients.
    poly: String,
    /// Number of variables; inferred from the support when omitted.
    #[arg(long)]
    nvars: Option<usize>,
    /// Skip the Newton non-degeneracy gate and trust the input.
    #[arg(long)]
    assume_nondegenerate: bool,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Also print decimal approximations of the exponents.
    #[arg(long)]
    approx: bool,
}

#[derive(Args)]
#[command(group(
    clap::ArgGroup::new("source").required(true).args(["poly", "exponents"])
))]
struct CheckArgs {
    /// Germ as a polynomial; its spectrum is computed first.
    poly: Option<String>,
    /// File of spectral exponents (rationals separated by whitespace,
    /// commas, or newlines; `#` starts a comment).
    #[arg(long, value_name = "FILE", requires = "nvars")]
    exponents: Option<PathBuf>,
    /// Number of variables; required with --exponents.
    #[arg(long)]
    nvars: Option<usize>,
    /// Which deviation center and truncation to use.
    #[arg(long, value_enum, default_value_t = ModeArg::Hertling)]
    mode: ModeArg,
    /// Truncation length for --mode reduced (the Tjurina spectrum size).
    #[arg(long, required_if_eq("mode", "reduced"))]
    tau_max: Option<usize>,
    /// Skip the Newton non-degeneracy gate and trust the input.
    #[arg(long)]
    assume_nondegenerate: bool,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Deviations from the symmetry center; full spectrum.
    Hertling,
    /// Deviations from the mean; full spectrum.
    Mean,
    /// Deviations from the mean after keeping the smallest tau-max entries.
    Reduced,
}

#[derive(Args)]
struct CatalogCmd {
    /// Family file to use instead of the built-in catalog.
    #[arg(long, global = true, value_name = "FILE")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    action: CatalogAction,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the families with their variables and parameters.
    List,
    /// Check one family member against its catalog closed forms.
    Verify(VerifyArgs),
    /// Check every family over a parameter grid.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Family name as listed by `catalog list`, e.g. NA_r_0.
    family: String,
    /// Parameter values, e.g. r=2 or r=1,s=3.
    #[arg(long, value_name = "NAME=INT,...")]
    params: Option<String>,
    /// Print the record as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest value for parameters named r (and any unrecognized name).
    #[arg(long, default_value_t = 3)]
    rmax: i64,
    /// Largest value for parameters named s.
    #[arg(long, default_value_t = 3)]
    smax: i64,
    /// Largest value for parameters named k.
    #[arg(long, default_value_t = 2)]
    kmax: i64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Print one JSON record per line.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Print a CSV table instead of text lines.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct EmitArgs {
    /// Germ as a polynomial in x, y, z with rational coefficients.
    poly: String,
    /// Number of variables; inferred from the support when omitted.
    #[arg(long)]
    nvars: Option<usize>,
}

// ---------------------------------------------------------------------------
// JSON report shapes.

#[derive(Serialize)]
struct Report {
    input: String,
    nvars: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tjurina_spectrum: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    excluded: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<CheckOut>,
}

#[derive(Serialize)]
struct CheckOut {
    mode: String,
    holds: bool,
    count: usize,
    center: String,
    range: String,
    lhs: String,
    rhs: String,
    slack: String,
    residual: String,
}

#[derive(Serialize)]
struct RecordOut {
    family: String,
    params: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<usize>,
    mu_ok: bool,
    spectrum_ok: bool,
    rset_ok: bool,
    hertling_ok: bool,
    reduced_ok: bool,
    all_ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    mismatches: Vec<String>,
}

// ---------------------------------------------------------------------------
// Entry point and error mapping.

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes early, e.g. `singspec ... | head`.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(code_for(&e))
        }
    }
}

fn code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::NotIsolated => 3,
        Error::DegeneracyUnresolved { .. } => 4,
        Error::BadTauMax { .. } => 5,
        Error::UnknownFamily { .. } => 6,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Spectrum(a) => cmd_spectrum(a),
        Cmd::Tjurina(a) => cmd_tjurina(a),
        Cmd::Check(a) => cmd_check(a),
        Cmd::Catalog(a) => cmd_catalog(a),
        Cmd::EmitSingular(a) => cmd_emit_singular(a),
    }
}

// ---------------------------------------------------------------------------
// spectrum

fn cmd_spectrum(a: SpectrumArgs) -> Result<ExitCode> {
    let f = parse_poly(&a.poly, a.nvars)?;
    let opts = SpectrumOptions {
        assume_nondegenerate: a.assume_nondegenerate,
        candidate_seed: None,
        std: StdOptions::from_env(),
    };
    let sp = match &a.weights {
        Some(list) => {
            let w = parse_rat_list(list)?;
            spectrum_quasihomogeneous(&f, &w, &opts.std)?
        }
        None => spectrum_newton(&f, &opts)?,
    };
    let verdict = hertling_check(&sp)?;
    let report = Report {
        input: a.poly.clone(),
        nvars: f.nvars(),
        mu: Some(sp.len()),
        tau: None,
        spectrum: Some(rat_strings(sp.exponents())),
        tjurina_spectrum: None,
        excluded: None,
        bounds: None,
        checks: vec![check_out(&verdict)],
    };
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("input = {}", report.input);
        println!("nvars = {}", report.nvars);
        println!("mu = {}", sp.len());
        println!("spectrum = {}", fmt_rats(sp.exponents()));
        if a.approx {
            println!("spectrum ~ {}", fmt_approx(sp.exponents()));
        }
        print_check_lines(&verdict);
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// tjurina

fn cmd_tjurina(a: TjurinaArgs) -> Result<ExitCode> {
    let f = parse_poly(&a.poly, a.nvars)?;
    let opts = SpectrumOptions {
        assume_nondegenerate: a.assume_nondegenerate,
        candidate_seed: None,
        std: StdOptions::from_env(),
    };
    let rep = exclusion_report(&f, &opts)?;
    let mut checks = vec![hertling_check(&rep.sp)?];
    // The truncated mean check is defined only when the cut length is
    // mu, mu-1, or mu-2.
    if rep.mu - rep.tau <= 2 {
        checks.push(reduced_variance_check(&rep.sp, rep.tau)?);
    }
    let report = Report {
        input: a.poly.clone(),
        nvars: f.nvars(),
        mu: Some(rep.mu),
        tau: Some(rep.tau),
        spectrum: Some(rat_strings(rep.sp.exponents())),
        tjurina_spectrum: Some(rat_strings(rep.sp_tau.exponents())),
        excluded: Some(rat_strings(&rep.rset)),
        bounds: Some(rat_strings(&rep.bounds)),
        checks: checks.iter().map(check_out).collect(),
    };
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("input = {}", report.input);
        println!("nvars = {}", report.nvars);
        println!("mu = {}", rep.mu);
        println!("tau = {}", rep.tau);
        println!("spectrum = {}", fmt_rats(rep.sp.exponents()));
        println!("tjurina-spectrum = {}", fmt_rats(rep.sp_tau.exponents()));
        println!("excluded = {}", fmt_rats(&rep.rset));
        println!("bounds = {}", fmt_rats(&rep.bounds));
        if a.approx {
            println!("spectrum ~ {}", fmt_approx(rep.sp.exponents()));
            println!("excluded ~ {}", fmt_approx(&rep.rset));
        }
        for v in &checks {
            print_check_lines(v);
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// check

fn cmd_check(a: CheckArgs) -> Result<ExitCode> {
    let (label, sp, spectrum_field) = if let Some(text) = &a.poly {
        let f = parse_poly(text, a.nvars)?;
        let opts = SpectrumOptions {
            assume_nondegenerate: a.assume_nondegenerate,
            candidate_seed: None,
            std: StdOptions::from_env(),
        };
        let sp = spectrum_newton(&f, &opts)?;
        let field = Some(rat_strings(sp.exponents()));
        (text.clone(), sp, field)
    } else {
        let path = a.exponents.as_ref().unwrap();
        let exps = read_exponents(path)?;
        let sp = Spectrum::new(exps, a.nvars.unwrap());
        (path.display().to_string(), sp, None)
    };
    let verdict = match a.mode {
        ModeArg::Hertling => hertling_check(&sp)?,
        ModeArg::Mean => variance_check_mean(&sp)?,
        ModeArg::Reduced => reduced_variance_check(&sp, a.tau_max.unwrap())?,
    };
    let report = Report {
        input: label.clone(),
        nvars: sp.nvars(),
        mu: Some(sp.len()),
        tau: None,
        spectrum: spectrum_field,
        tjurina_spectrum: None,
        excluded: None,
        bounds: None,
        checks: vec![check_out(&verdict)],
    };
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("input = {label}");
        println!("nvars = {}", sp.nvars());
        println!("size = {}", sp.len());
        println!("mode = {}", mode_name(verdict.mode));
        println!("count = {}", verdict.count);
        println!("center = {}", verdict.center);
        println!("range = {}", verdict.range);
        println!("lhs = {}", verdict.lhs);
        println!("rhs = {}", verdict.rhs);
        println!("slack = {}", verdict.slack);
        println!("residual = {}", verdict.scaled_residual);
        println!("holds = {}", verdict.holds);
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// catalog

fn cmd_catalog(a: CatalogCmd) -> Result<ExitCode> {
    let owned;
    let cat: &Catalog = match &a.catalog {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::InvalidInput {
                msg: format!("cannot read {}: {e}", path.display()),
            })?;
            owned = Catalog::parse(&text)?;
            &owned
        }
        None => Catalog::builtin(),
    };
    match a.action {
        CatalogAction::List => {
            for fam in cat.families() {
                let params = if fam.params().is_empty() {
                    "-".to_string()
                } else {
                    fam.params()
                        .iter()
                        .map(|(n, lo)| format!("{n}>={lo}"))
                        .collect::<Vec<_>>()
                        .join(",")
                };
                println!(
                    "{}\t{}\tvars={}\tparams={}",
                    fam.name(),
                    fam.display(),
                    fam.nvars(),
                    params
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        CatalogAction::Verify(v) => cmd_catalog_verify(cat, v),
        CatalogAction::Sweep(s) => cmd_catalog_sweep(cat, s),
    }
}

fn cmd_catalog_verify(cat: &Catalog, a: VerifyArgs) -> Result<ExitCode> {
    let fam = cat.get(&a.family)?;
    let params = parse_params(a.params.as_deref())?;
    let rec = fam.verify(&params)?;
    let mu = fam.mu_at(&params)?;
    let tau = fam.tau_at(&params)?;
    if a.json {
        let out = record_out(&rec, Some(mu), Some(tau));
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("family = {}", rec.family);
        println!("display = {}", fam.display());
        println!("params = {}", fmt_params(&rec.params));
        println!("mu = {mu}");
        println!("tau = {tau}");
        println!("mu_ok = {}", rec.mu_ok);
        println!("spectrum_ok = {}", rec.spectrum_ok);
        println!("rset_ok = {}", rec.rset_ok);
        println!("hertling_ok = {}", rec.hertling_ok);
        println!("reduced_ok = {}", rec.reduced_ok);
        println!("all_ok = {}", rec.all_ok());
        for m in &rec.mismatches {
            eprintln!("mismatch: {m}");
        }
    }
    Ok(if rec.all_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_catalog_sweep(cat: &Catalog, a: SweepArgs) -> Result<ExitCode> {
    if let Some(jobs) = a.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    let mut work: Vec<(&FamilySpec, ParamMap)> = Vec::new();
    for fam in cat.families() {
        for params in sweep_grid(fam, a.rmax, a.smax, a.kmax) {
            work.push((fam, params));
        }
    }
    let results: Vec<Result<VerificationRecord>> = work
        .par_iter()
        .map(|(fam, params)| fam.verify(params))
        .collect();

    if a.csv {
        println!("family,params,mu_ok,spectrum_ok,rset_ok,hertling_ok,reduced_ok,all_ok");
    }
    let mut ok = 0usize;
    let mut failed = 0usize;
    for ((fam, params), res) in work.iter().zip(&results) {
        match res {
            Ok(rec) => {
                if rec.all_ok() {
                    ok += 1;
                } else {
                    failed += 1;
                }
                if a.json {
                    let out = record_out(rec, None, None);
                    println!("{}", serde_json::to_string(&out).unwrap());
                } else if a.csv {
                    println!(
                        "{},{},{},{},{},{},{},{}",
                        rec.family,
                        fmt_params(&rec.params),
                        rec.mu_ok,
                        rec.spectrum_ok,
                        rec.rset_ok,
                        rec.hertling_ok,
                        rec.reduced_ok,
                        rec.all_ok()
                    );
                } else if rec.all_ok() {
                    println!("ok   {} {}", rec.family, fmt_params(&rec.params));
                } else {
                    println!(
                        "FAIL {} {}: {}",
                        rec.family,
                        fmt_params(&rec.params),
                        rec.mismatches.join("; ")
                    );
                }
            }
            Err(e) => {
                failed += 1;
                if a.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "family": fam.name(),
                            "params": params,
                            "error": e.to_string(),
                        })
                    );
                } else {
                    println!("ERROR {} {}: {e}", fam.name(), fmt_params(params));
                }
            }
        }
    }
    eprintln!("swept {} members: {ok} ok, {failed} failed", work.len());
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

/// Cartesian parameter grid from each parameter's lower bound up to the cap
/// chosen by its name.
fn sweep_grid(fam: &FamilySpec, rmax: i64, smax: i64, kmax: i64) -> Vec<ParamMap> {
    let mut maps = vec![ParamMap::new()];
    for (name, lo) in fam.params() {
        let hi = match name.as_str() {
            "s" => smax,
            "k" => kmax,
            _ => rmax,
        };
        let mut next = Vec::new();
        for base in &maps {
            for v in *lo..=hi {
                let mut m = base.clone();
                m.insert(name.clone(), v);
                next.push(m);
            }
        }
        maps = next;
    }
    maps
}

// ---------------------------------------------------------------------------
// emit-singular

const SINGULAR_TEMPLATE: &str = r#"LIB"gmssing.lib";
LIB"sing.lib";
ring r = 0, (@VARS@), ds;
poly f = @POLY@;
list v = vfilt(f);
ideal I = v[4];
list sp = spectrum(f);
list vf = v[3];
int m = size(sp[2]);
int mu = milnor(f);
intvec t;
ideal J = f,jacob(f);
int a;
int j;
module temp;
for(a = m ; a >= 1 ; a = a-1){
    temp = vf[a];
    temp = std(temp);
    for(j = 1 ; j <= mu ; j = j+1){
        if(reduce(gen(j),temp) == 0){
            J = J,I[j];
        }
    }
    J = std(J);
    t[a] = vdim(J);
}
int tau = tjurina(f);
intvec w;
w[m] = tau-t[m];
for(a = m-1 ; a >= 1 ; a = a-1){
    w[a] = t[a+1]-t[a];
}
w;
spectrum(f);
mu-tau;
"#;

fn cmd_emit_singular(a: EmitArgs) -> Result<ExitCode> {
    let f = parse_poly(&a.poly, a.nvars)?;
    let n = f.nvars();
    if n == 0 || n > 3 {
        return Err(Error::InvalidInput {
            msg: format!("the SINGULAR emitter supports 1 to 3 variables, got {n}"),
        });
    }
    let names = &["x", "y", "z"][..n];
    let script = SINGULAR_TEMPLATE
        .replace("@VARS@", &names.join(","))
        .replace("@POLY@", &singular_poly(&f, names));
    print!("{script}");
    Ok(ExitCode::SUCCESS)
}

/// Short SINGULAR syntax: single-letter variables with juxtaposed exponents,
/// e.g. `x22+x3y2+y7` or `-3/2x2y`.
fn singular_poly(f: &Polynomial, names: &[&str]) -> String {
    let mut out = String::new();
    for (m, c) in f.terms() {
        let mut mon = String::new();
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                mon.push_str(names[i]);
                if e > 1 {
                    mon.push_str(&e.to_string());
                }
            }
        }
        let abs = c.abs();
        let coeff = if mon.is_empty() || !abs.is_one() {
            abs.to_string()
        } else {
            String::new()
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push(if c.is_negative() { '-' } else { '+' });
        }
        out.push_str(&coeff);
        out.push_str(&mon);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// ---------------------------------------------------------------------------
// Shared helpers.

fn parse_poly(text: &str, nvars: Option<usize>) -> Result<Polynomial> {
    match nvars {
        Some(n) => Polynomial::parse(text, n),
        None => Polynomial::parse_infer(text),
    }
}

fn parse_rat_list(list: &str) -> Result<Vec<Rat>> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tok| {
            Rat::from_str(tok).map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad rational `{tok}` in weight list"),
            })
        })
        .collect()
}

fn parse_params(text: Option<&str>) -> Result<ParamMap> {
    let mut map = ParamMap::new();
    let Some(text) = text else { return Ok(map) };
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part.split_once('=').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("expected NAME=INT, got `{part}`"),
        })?;
        let value: i64 = value.trim().parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("bad integer `{}` for parameter {name}", value.trim()),
        })?;
        map.insert(name.trim().to_string(), value);
    }
    Ok(map)
}

fn read_exponents(path: &Path) -> Result<Vec<Rat>> {
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidInput {
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let data = line.split('#').next().unwrap();
        for tok in data
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            out.push(Rat::from_str(tok).map_err(|_| Error::Parse {
                pos: lineno + 1,
                msg: format!("bad rational `{tok}` in exponent file"),
            })?);
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidInput {
            msg: format!("exponent file {} is empty", path.display()),
        });
    }
    Ok(out)
}

fn rat_strings(rs: &[Rat]) -> Vec<String> {
    rs.iter().map(|r| r.to_string()).collect()
}

fn fmt_rats(rs: &[Rat]) -> String {
    if rs.is_empty() {
        "(none)".to_string()
    } else {
        rat_strings(rs).join(" ")
    }
}

fn fmt_approx(rs: &[Rat]) -> String {
    if rs.is_empty() {
        return "(none)".to_string();
    }
    rs.iter()
        .map(|r| format!("{:.4}", r.to_f64().unwrap_or(f64::NAN)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_params(params: &ParamMap) -> String {
    if params.is_empty() {
        "-".to_string()
    } else {
        params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn mode_name(mode: CheckMode) -> &'static str {
    match mode {
        CheckMode::Hertling => "hertling",
        CheckMode::MeanCentered => "mean",
        CheckMode::MeanCenteredReduced { .. } => "reduced",
    }
}

fn check_out(v: &InequalityVerdict) -> CheckOut {
    CheckOut {
        mode: mode_name(v.mode).to_string(),
        holds: v.holds,
        count: v.count,
        center: v.center.to_string(),
        range: v.range.to_string(),
        lhs: v.lhs.to_string(),
        rhs: v.rhs.to_string(),
        slack: v.slack.to_string(),
        residual: v.scaled_residual.to_string(),
    }
}

fn print_check_lines(v: &InequalityVerdict) {
    let name = mode_name(v.mode);
    println!("{name}_holds = {}", v.holds);
    println!("{name}_slack = {}", v.slack);
}

fn record_out(rec: &VerificationRecord, mu: Option<usize>, tau: Option<usize>) -> RecordOut {
    RecordOut {
        family: rec.family.clone(),
        params: rec.params.clone(),
        mu,
        tau,
        mu_ok: rec.mu_ok,
        spectrum_ok: rec.spectrum_ok,
        rset_ok: rec.rset_ok,
        hertling_ok: rec.hertling_ok,
        reduced_ok: rec.reduced_ok,
        all_ok: rec.all_ok(),
        mismatches: rec.mismatches.clone(),
    }
}
