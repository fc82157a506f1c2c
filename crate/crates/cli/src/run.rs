use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::Parser;

use projdiff_core::classify::{classify_chart, example_generate, theorem_classify, Class4Variant, Example, ExampleParams, TheoremClass};
use projdiff_core::contact::{contact_order, fubini_test, LineSpec};
use projdiff_core::jets::{chart_from_implicit, fundamental_forms, generality_check, graph_spec, VarietySpec};
use projdiff_core::lines::coskun_check;
use projdiff_core::pencils::{pencil_classify, QuadricPencil};
use projdiff_core::{Matrix, Scalar};

use crate::args::{Cli, Command, Format, Variant};
use crate::error::CliError;
use crate::files::{self, InputFile};
use crate::report::{strings, ChartInfo, ClassInfo, ContactInfo, PencilInfo, Report, SplittingInfo};

/// What a process invocation prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let (reports, batch) = match &cli.command {
        Command::Analyze { batch: Some(dir), point, order, .. } => match analyze_batch(dir, point.as_deref(), *order) {
            Ok(r) => (r, true),
            Err(e) => return failure(cli.format, "analyze", e),
        },
        cmd => match execute(cmd) {
            Ok(r) => (vec![(r, 0)], false),
            Err(e) => return failure(cli.format, command_name(cmd), e),
        },
    };
    let code = reports.iter().map(|(_, c)| *c).max().unwrap_or(0);
    let reports: Vec<Report> = reports.into_iter().map(|(r, _)| r).collect();
    let stdout = match cli.format {
        Format::Json if batch => serde_json::to_string_pretty(&reports).expect("serializable") + "\n",
        Format::Json => reports[0].to_json() + "\n",
        Format::Text => reports.iter().map(Report::to_text).collect::<Vec<_>>().join("\n"),
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}

fn failure(format: Format, command: &str, e: CliError) -> Outcome {
    let code = e.exit_code();
    match format {
        Format::Json => {
            let mut r = Report::new(command);
            r.error = Some(e.to_string());
            Outcome {
                stdout: r.to_json() + "\n",
                stderr: String::new(),
                code,
            }
        }
        Format::Text => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e),
            code,
        },
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Analyze { .. } => "analyze",
        Command::Contact { .. } => "contact",
        Command::Pencil { .. } => "pencil",
        Command::Fubini { .. } => "fubini",
        Command::Splitting { .. } => "splitting",
        Command::Gen { .. } => "gen",
    }
}

/// Runs a single (non-batch) command.
pub fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Analyze { input, point, order, .. } => {
            let path = input.as_ref().ok_or_else(|| CliError::Usage("an input file or --batch is required".into()))?;
            analyze_file(path, point.as_deref(), *order)
        }
        Command::Contact { input, line, order } => {
            check_order(*order)?;
            let file = files::read_input(input)?;
            let spec = match &file {
                InputFile::Variety { spec, .. } => spec.clone(),
                InputFile::Chart(chart) => graph_spec(chart)?,
            };
            let (p, q) = files::parse_line(line)?;
            check_length(&spec, &p)?;
            check_length(&spec, &q)?;
            let co = contact_order(&spec, &LineSpec::new(p.clone(), q)?, *order)?;
            let mut r = Report::new("contact");
            r.input = Some(input.display().to_string());
            r.point = Some(strings(&p));
            r.contact = Some(ContactInfo::of(co, *order));
            Ok(r)
        }
        Command::Pencil { a, b } => {
            let a = symmetric_matrix(a, "--a")?;
            let b = symmetric_matrix(b, "--b")?;
            if a.rows() != b.rows() {
                return Err(CliError::Usage("--a and --b have different sizes".into()));
            }
            let cls = pencil_classify(&QuadricPencil::new(a, b)?)?;
            let mut r = Report::new("pencil");
            r.pencil = Some(PencilInfo::of(&cls));
            Ok(r)
        }
        Command::Fubini { input, point, order } => {
            check_order(*order)?;
            let file = files::read_input(input)?;
            let chart = match &file {
                InputFile::Variety { spec, point: stored } => {
                    let p = resolve_point(spec, point.as_deref(), stored.as_deref())?;
                    chart_from_implicit(spec, &p, *order)?
                }
                InputFile::Chart(chart) => chart.clone(),
            };
            let ff = fundamental_forms(&chart, (*order).min(5).min(chart.order()))?;
            let f = fubini_test(&ff)?;
            let mut r = Report::new("fubini").with_fubini(&ff, &f);
            r.input = Some(input.display().to_string());
            r.point = Some(strings(chart.base_point()));
            r.chart = Some(ChartInfo::of(&chart));
            Ok(r)
        }
        Command::Splitting { input, line } => {
            let file = files::read_input(input)?;
            let InputFile::Variety { spec, .. } = &file else {
                return Err(CliError::Usage("splitting needs a hypersurface file".into()));
            };
            let [f] = spec.generators() else {
                return Err(CliError::Usage(format!(
                    "splitting needs a hypersurface, found {} generators",
                    spec.generators().len()
                )));
            };
            let (p, q) = files::parse_line(line)?;
            check_length(spec, &p)?;
            check_length(spec, &q)?;
            let (st, check) = coskun_check(f, &LineSpec::new(p, q)?)?;
            let mut r = Report::new("splitting");
            r.input = Some(input.display().to_string());
            r.splitting = Some(SplittingInfo::of(&st, &check));
            Ok(r)
        }
        Command::Gen {
            class,
            n,
            r: rr,
            u,
            v,
            w,
            lambda,
            rho,
            variant,
            output,
        } => {
            let mut params = ExampleParams::new(*n);
            for (slot, text, name) in [(&mut params.r, rr, "--r"), (&mut params.u, u, "--u"), (&mut params.v, v, "--v"), (&mut params.w, w, "--w")] {
                if let Some(t) = text {
                    *slot = files::parse_rational(t, name)?;
                }
            }
            if let Some(l) = lambda {
                params.lambda = files::parse_vector(l)?;
            }
            if let Some(l) = rho {
                params.rho = files::parse_vector(l)?;
            }
            if let Some(var) = variant {
                params.variant = match var {
                    Variant::DoublePlusTwo => Class4Variant::DoublePlusTwo,
                    Variant::Quadruple => Class4Variant::Quadruple,
                    Variant::TriplePlusOne => Class4Variant::TriplePlusOne,
                    Variant::Squares => Class4Variant::Squares,
                };
            }
            let text = match example_generate(*class, &params)? {
                Example::Spec { spec, point } => files::variety_to_string(&spec, Some(&point)),
                Example::Chart(chart) => files::chart_to_string(&chart),
            };
            std::fs::write(output, text).map_err(|source| CliError::Io {
                path: output.display().to_string(),
                source,
            })?;
            let mut r = Report::new("gen");
            r.output = Some(output.display().to_string());
            let tag = TheoremClass::from_number(*class).expect("generated classes are numbered");
            r.class = Some(ClassInfo {
                tag: tag.name().into(),
                number: Some(*class),
            });
            Ok(r)
        }
    }
}

fn check_order(order: u32) -> Result<(), CliError> {
    if !(2..=6).contains(&order) {
        return Err(CliError::Usage(format!("order {} is outside 2..=6", order)));
    }
    Ok(())
}

fn check_length(spec: &VarietySpec, p: &[Scalar]) -> Result<(), CliError> {
    if p.len() != spec.nvars() {
        return Err(CliError::Usage(format!(
            "point has {} coordinates, the ambient space needs {}",
            p.len(),
            spec.nvars()
        )));
    }
    Ok(())
}

fn resolve_point(spec: &VarietySpec, arg: Option<&str>, stored: Option<&[Scalar]>) -> Result<Vec<Scalar>, CliError> {
    let p = match (arg, stored) {
        (Some(text), _) => files::parse_vector(text)?,
        (None, Some(p)) => p.to_vec(),
        (None, None) => return Err(CliError::Usage("--point is required for this file".into())),
    };
    check_length(spec, &p)?;
    Ok(p)
}

fn symmetric_matrix(text: &str, name: &str) -> Result<Matrix, CliError> {
    let rows = files::parse_matrix(text)?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!("{} is not square", name)));
    }
    let m = Matrix::from_rows(rows);
    if !m.is_symmetric() {
        return Err(CliError::Usage(format!("{} is not symmetric", name)));
    }
    Ok(m)
}

/// Full evidence trail for one input.
pub fn analyze_input(input: &InputFile, point: Option<&str>, order: u32) -> Result<Report, CliError> {
    check_order(order)?;
    let cls = match input {
        InputFile::Variety { spec, point: stored } => {
            let p = resolve_point(spec, point, stored.as_deref())?;
            theorem_classify(spec, &p, order)?
        }
        InputFile::Chart(chart) => classify_chart(chart.clone(), order)?,
    };
    let mut r = Report::new("analyze").with_classification(&cls);
    r.warnings.extend(generality_check(&cls.chart, order)?);
    Ok(r)
}

pub fn analyze_file(path: &Path, point: Option<&str>, order: u32) -> Result<Report, CliError> {
    let input = files::read_input(path)?;
    let mut r = analyze_input(&input, point, order)?;
    r.input = Some(path.display().to_string());
    Ok(r)
}

/// Analyzes every `.json` file of `dir` in parallel; the reports come back
/// in file name order, each with its own exit code.
pub fn analyze_batch(dir: &Path, point: Option<&str>, order: u32) -> Result<Vec<(Report, u8)>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|source| CliError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let results: Vec<(Report, u8)> = std::thread::scope(|scope| {
        let handles: Vec<_> = paths
            .iter()
            .map(|path| scope.spawn(move || analyze_file(path, point, order)))
            .collect();
        handles
            .into_iter()
            .zip(&paths)
            .map(|(h, path)| match h.join().expect("analysis thread panicked") {
                Ok(r) => (r, 0),
                Err(e) => {
                    let mut r = Report::new("analyze");
                    r.input = Some(path.display().to_string());
                    r.error = Some(e.to_string());
                    (r, e.exit_code())
                }
            })
            .collect()
    });
    Ok(results)
}
