use std::fmt::Write as _;
use std::path::Path;

use deformkit::algebra::AlgebraFile;
use deformkit::deform::{compare_targets, scan, Family, ScanResult};
use deformkit::obstruct::{admissible_targets, ObstructionReport};
use deformkit::structure::{analyze, enumerate_semisimple_types, identity_ideal, identity_span, StructureReport};
use serde_json::{json, Value};

use crate::input::{build_presentation, load, load_algebra, resolve_element, Loaded};
use crate::{Cli, CliError, Command, Format};

/// Text and JSON renderings of one report.
struct Output {
    text: String,
    json: Value,
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let out = match &cli.command {
        Command::Build { input, max_degree } => build(cli, input, *max_degree)?,
        Command::Analyze { input, max_degree } => many(input, |p| analyze_one(p, *max_degree))?,
        Command::Scan { input, schedule } => scan_cmd(input, &schedule.base, schedule.count)?,
        Command::Obstruct { input, generators, max_degree, trials, seed } => {
            obstruct(input, generators, *max_degree, *trials, *seed)?
        }
        Command::Enumerate { n, max_block } => enumerate(*n, *max_block)?,
        Command::IdentitySpan { input, m, max_degree } => many(input, |p| identity_one(p, *m, *max_degree))?,
    };
    // `build --out` writes the algebra file and keeps the summary on stdout
    let to_file = !matches!(cli.command, Command::Build { .. });
    emit(cli, out, to_file)
}

fn emit(cli: &Cli, out: Output, to_file: bool) -> Result<(), CliError> {
    let body = match cli.format {
        Format::Text => out.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    match (&cli.out, to_file) {
        (Some(path), true) => write_file(path, &body),
        _ => {
            print!("{body}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    std::fs::write(path, body).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// One report per input; JSON becomes an array when there are several.
fn many(inputs: &[std::path::PathBuf], one: impl Fn(&Path) -> Result<Output, CliError>) -> Result<Output, CliError> {
    let outs = inputs.iter().map(|p| one(p)).collect::<Result<Vec<_>, _>>()?;
    if outs.len() == 1 {
        return Ok(outs.into_iter().next().expect("one output"));
    }
    let text = outs.iter().map(|o| o.text.as_str()).collect::<Vec<_>>().join("\n");
    let json = Value::Array(outs.into_iter().map(|o| o.json).collect());
    Ok(Output { text, json })
}

fn build(cli: &Cli, input: &Path, max_degree: Option<usize>) -> Result<Output, CliError> {
    let file = match load(input)? {
        Loaded::Presentation(f) => f,
        _ => return Err(CliError::Input(format!("{}: expected a presentation file", input.display()))),
    };
    let built = build_presentation(file, max_degree)?;
    let basis: Vec<String> = built.word_basis.iter().map(|w| w.render(&built.generators)).collect();
    let valid = built.algebra.validate().is_valid();
    let algebra_file = AlgebraFile::from(&built.algebra);
    if let Some(path) = &cli.out {
        let mut src = algebra_file.to_json();
        src.push('\n');
        write_file(path, &src)?;
    }
    let mut text = String::new();
    writeln!(text, "dim {}", built.algebra.dim()).unwrap();
    writeln!(text, "degree {}", built.reducer.degree()).unwrap();
    writeln!(text, "basis {}", basis.join(" ")).unwrap();
    writeln!(text, "valid {valid}").unwrap();
    let json = json!({
        "dim": built.algebra.dim(),
        "degree": built.reducer.degree(),
        "basis": basis,
        "valid": valid,
        "algebra": algebra_file,
    });
    Ok(Output { text, json })
}

fn structure_text(input: &Path, r: &StructureReport) -> String {
    let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut text = String::new();
    writeln!(text, "input {}", input.display()).unwrap();
    writeln!(text, "dim {}", r.dim).unwrap();
    writeln!(text, "radical {}", r.radical_dim).unwrap();
    writeln!(text, "semisimple {}", r.semisimple).unwrap();
    if r.semisimple {
        writeln!(text, "profile {}", r.profile).unwrap();
    } else {
        writeln!(text, "profile of semisimplification {}", r.profile).unwrap();
    }
    writeln!(text, "filtration {}", join(&r.filtration.dims)).unwrap();
    writeln!(text, "layers {}", join(&r.filtration.layer_dims)).unwrap();
    text
}

fn analyze_one(input: &Path, max_degree: Option<usize>) -> Result<Output, CliError> {
    let r = load_algebra(input, max_degree)?;
    let report = analyze(&r.algebra).map_err(CliError::input)?;
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["input"] = json!(input.display().to_string());
    Ok(Output { text: structure_text(input, &report), json })
}

fn scan_cmd(input: &Path, base: &deformkit::Scalar, count: usize) -> Result<Output, CliError> {
    let family = match load(input)? {
        Loaded::Family(f) => f.into_family().map_err(CliError::input)?,
        _ => return Err(CliError::Input(format!("{}: expected a family file", input.display()))),
    };
    let dim = match &family {
        Family::Table(f) => f.family().dim(),
        Family::Relations(f) => f.expected_dim(),
    };
    let result = scan(&family, base, count).map_err(|e| match e {
        deformkit::deform::DeformError::NonPositiveBase(_) | deformkit::deform::DeformError::ScheduleTooShort(_) => {
            CliError::Usage(e.to_string())
        }
        e => CliError::input(e),
    })?;
    let targets = enumerate_semisimple_types(dim, None);
    let cmp = compare_targets(&result, &targets);
    Ok(Output { text: scan_text(&result, &cmp), json: scan_json(base, count, &result, &cmp) })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

fn scan_text(result: &ScanResult, cmp: &deformkit::deform::TargetComparison) -> String {
    let mut text = String::new();
    writeln!(text, "{:>3}  {:<16} {:>4}  {:<10} {:>7}  profile", "k", "s", "dim", "semisimple", "radical").unwrap();
    for (k, row) in result.rows.iter().enumerate() {
        write!(
            text,
            "{:>3}  {:<16} {:>4}  {:<10} {:>7}  {}",
            k,
            row.s.to_string(),
            opt(&row.dim),
            opt(&row.semisimple),
            opt(&row.radical_dim),
            opt(&row.profile)
        )
        .unwrap();
        if let Some(e) = &row.error {
            write!(text, "  ({e})").unwrap();
        }
        text.push('\n');
    }
    writeln!(text, "verdict {}", result.verdict).unwrap();
    for (p, hit) in &cmp.matches {
        writeln!(text, "target {p}{}", if *hit { "  <- match" } else { "" }).unwrap();
    }
    writeln!(text, "{}", cmp.message).unwrap();
    text
}

fn scan_json(base: &deformkit::Scalar, count: usize, result: &ScanResult, cmp: &deformkit::deform::TargetComparison) -> Value {
    let targets: Vec<Value> =
        cmp.matches.iter().map(|(p, hit)| json!({"profile": p.to_string(), "match": hit})).collect();
    json!({
        "base": base.to_string(),
        "count": count,
        "rows": result.rows,
        "verdict": result.verdict,
        "targets": targets,
        "message": cmp.message,
    })
}

fn obstruct(
    input: &Path,
    generators: &[String],
    max_degree: Option<usize>,
    trials: usize,
    seed: u64,
) -> Result<Output, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let r = load_algebra(input, max_degree)?;
    let specs: Vec<String> = match (generators.len(), &r.built) {
        (2, _) => generators.to_vec(),
        (0, Some(b)) if b.generators.len() >= 2 => b.generators[..2].to_vec(),
        (0, _) => return Err(CliError::Usage("pass two generators with --gen".into())),
        (n, _) => return Err(CliError::Usage(format!("expected two --gen values, got {n}"))),
    };
    let x = resolve_element(&specs[0], &r)?;
    let y = resolve_element(&specs[1], &r)?;
    let mut report = admissible_targets(&r.algebra, &x, &y, trials, seed).map_err(CliError::input)?;
    report.generators = specs;
    Ok(Output { text: obstruct_text(&report), json: serde_json::to_value(&report).expect("report serializes") })
}

fn obstruct_text(r: &ObstructionReport) -> String {
    let mut text = String::new();
    writeln!(text, "family {}", r.family.join(", ")).unwrap();
    writeln!(text, "generators {}", r.generators.join(", ")).unwrap();
    writeln!(text, "dim_in_N {}", r.dim_in_n).unwrap();
    writeln!(text, "{:<14} {:>5} {:>7}  status", "profile", "bound", "sampled").unwrap();
    for row in &r.targets {
        writeln!(text, "{:<14} {:>5} {:>7}  {}", row.profile.to_string(), opt(&row.bound), row.sampled, row.status).unwrap();
    }
    text
}

fn enumerate(n: usize, max_block: Option<usize>) -> Result<Output, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let profiles = enumerate_semisimple_types(n, max_block);
    let text = profiles.iter().map(|p| format!("{p}\n")).collect();
    Ok(Output { text, json: json!({"n": n, "profiles": profiles}) })
}

fn identity_one(input: &Path, m: Option<usize>, max_degree: Option<usize>) -> Result<Output, CliError> {
    let r = load_algebra(input, max_degree)?;
    let n = r.algebra.dim();
    let ms: Vec<usize> = match m {
        Some(m) => vec![m],
        None => (1..=n.isqrt()).collect(),
    };
    let mut text = String::new();
    writeln!(text, "input {}", input.display()).unwrap();
    writeln!(text, "dim {n}").unwrap();
    let mut rows = Vec::new();
    for m in ms {
        let span = identity_span(&r.algebra, m).dim();
        let ideal = identity_ideal(&r.algebra, m).map_err(CliError::input)?.dim();
        writeln!(text, "m {m}  span {span}  ideal {ideal}").unwrap();
        rows.push(json!({"m": m, "span_dim": span, "ideal_dim": ideal}));
    }
    Ok(Output { text, json: json!({"input": input.display().to_string(), "dim": n, "rows": rows}) })
}
