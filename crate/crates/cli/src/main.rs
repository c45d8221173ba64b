use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gelfand_triple::data;
use gelfand_triple::groups::{validate_table, CharacterTable, FiniteGroup, GroupData};
use gelfand_triple::selftest;
use gelfand_triple::spherical::{
    brute_table, closed_table, reconcile, symfunc_table, Engine, Readings, Setup, SphericalCache,
    SphericalTable,
};
use gelfand_triple::wreath::{decompose_induced, Caps, Pi, ThetaCharacter};
use gelfand_triple::Error;

#[derive(Parser)]
#[command(
    name = "gelfand",
    version,
    about = "Twisted Gelfand triples in wreath products"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the group axioms and the orthogonality of the character table.
    Validate(GroupArgs),
    /// Print ν₂^ξ(χ) for every χ and every linear ξ.
    Nu2(GroupArgs),
    /// Decompose the induced character Θ↑ into irreducibles of SG_{2n}.
    Decompose(RunArgs),
    /// Emit the table of spherical functions.
    Spherical {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = EngineArg::Closed)]
        engine: EngineArg,
        /// Directory for cached tables.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Compare the brute, closed-form and symmetric-function engines.
    Reconcile(RunArgs),
    /// Run the bundled acceptance checks.
    Selftest {
        /// Criteria to run, e.g. `1,2,9`; all by default.
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<u8>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Bundled group name or path to a group file.
    #[arg(long)]
    group: String,
    /// Character-table file; required when --group is a path.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = Caps::default().elements)]
    cap_elements: u64,
    #[arg(long, default_value_t = Caps::default().class_work)]
    cap_classwork: u64,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Linear character ξ, by name; the trivial character by default.
    #[arg(long)]
    xi: Option<String>,
    /// One of triv, delta, iota, delta-iota.
    #[arg(long, default_value = "triv")]
    pi: String,
    #[arg(long)]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Brute,
    Closed,
    Symfunc,
}

/// A failed command and its exit status.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::UnknownName(_) | Error::Parse(_) | Error::Io(_) | Error::Json(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let res = match cli.cmd {
        Cmd::Validate(a) => cmd_validate(&a),
        Cmd::Nu2(a) => cmd_nu2(&a),
        Cmd::Decompose(a) => cmd_decompose(&a),
        Cmd::Spherical {
            run,
            engine,
            cache_dir,
        } => cmd_spherical(&run, engine, cache_dir.as_deref()),
        Cmd::Reconcile(a) => cmd_reconcile(&a),
        Cmd::Selftest {
            criteria,
            format,
            out,
        } => cmd_selftest(&criteria, format, out.as_deref()),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn caps(a: &GroupArgs) -> Caps {
    Caps {
        elements: a.cap_elements,
        class_work: a.cap_classwork,
    }
}

fn group_cap(a: &GroupArgs) -> usize {
    usize::try_from(a.cap_elements).unwrap_or(usize::MAX)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// The group and table JSON named by the arguments.
fn sources(a: &GroupArgs) -> Result<(Value, Value), Failure> {
    if data::NAMES.contains(&a.group.as_str()) && a.table.is_none() {
        let (g, t) = data::raw_files(&a.group)?;
        let g = serde_json::from_str(g).map_err(Error::from)?;
        let t = serde_json::from_str(t).map_err(Error::from)?;
        return Ok((g, t));
    }
    let table = a
        .table
        .as_deref()
        .ok_or_else(|| usage(format!("{} is not a bundled group; pass --table", a.group)))?;
    Ok((read_json(Path::new(&a.group))?, read_json(table)?))
}

fn load(a: &GroupArgs) -> Result<GroupData, Failure> {
    let (g, t) = sources(a)?;
    Ok(GroupData::from_json(&g, &t, group_cap(a))?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => {
            fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))
        }
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes())
                .map_err(|e| usage(format!("stdout: {e}")))
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cmd_validate(a: &GroupArgs) -> Outcome {
    let (g, t) = sources(a)?;
    let group = FiniteGroup::from_json(&g, group_cap(a))?;
    let table = CharacterTable::from_json(&t)?;
    let data = GroupData::assemble(group, table)?;
    let violations: Vec<String> = validate_table(&data)
        .iter()
        .map(|v| v.to_string())
        .collect();
    let text = match a.format {
        Format::Json => pretty(&json!({
            "group": data.name(),
            "order": data.order(),
            "classes": data.num_classes(),
            "digest": data.digest(),
            "violations": violations,
        })),
        Format::Csv => {
            let mut s = format!(
                "group,{}\norder,{}\nclasses,{}\n",
                data.name(),
                data.order(),
                data.num_classes()
            );
            for v in &violations {
                s.push_str(&format!("violation,\"{}\"\n", v.replace('"', "\"\"")));
            }
            s
        }
    };
    emit(a.out.as_deref(), &text)?;
    for v in &violations {
        eprintln!("violation: {v}");
    }
    Ok(if violations.is_empty() { 0 } else { 1 })
}

fn cmd_nu2(a: &GroupArgs) -> Outcome {
    let data = load(a)?;
    let xis = data.linear_characters()?;
    let names = data.char_names();
    let mut rows = Vec::new();
    for (chi, name) in names.iter().enumerate() {
        let vals = xis
            .iter()
            .map(|&xi| data.nu2(xi, chi))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((name.clone(), vals));
    }
    let text = match a.format {
        Format::Json => pretty(&json!({
            "group": data.name(),
            "xi": xis.iter().map(|&x| names[x].clone()).collect::<Vec<_>>(),
            "rows": rows.iter().map(|(c, v)| json!({"chi": c, "nu2": v})).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("chi");
            for &x in &xis {
                s.push(',');
                s.push_str(&names[x]);
            }
            s.push('\n');
            for (c, v) in &rows {
                s.push_str(c);
                for x in v {
                    s.push_str(&format!(",{x}"));
                }
                s.push('\n');
            }
            s
        }
    };
    emit(a.out.as_deref(), &text)?;
    Ok(0)
}

fn theta(data: &GroupData, a: &RunArgs) -> Result<ThetaCharacter, Failure> {
    let pi: Pi = a.pi.parse().map_err(|_| {
        usage(format!(
            "unknown π '{}': expected triv, delta, iota or delta-iota",
            a.pi
        ))
    })?;
    let xi = match &a.xi {
        Some(name) => data.find_char(name)?,
        None => data.trivial_char(),
    };
    data.check_linear(xi)?;
    Ok(ThetaCharacter { xi, pi, n: a.n })
}

fn cmd_decompose(a: &RunArgs) -> Outcome {
    let data = load(&a.group)?;
    let th = theta(&data, a)?;
    let parts = decompose_induced(&data, th, &caps(&a.group))?;
    let text = match a.group.format {
        Format::Json => pretty(&json!({
            "group": data.name(),
            "xi": data.char_names()[th.xi],
            "pi": th.pi.to_string(),
            "n": th.n,
            "constituents": parts
                .iter()
                .map(|(l, m)| json!({"label": l.to_string(), "multiplicity": m}))
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("label,multiplicity\n");
            for (l, m) in &parts {
                s.push_str(&format!("\"{l}\",{m}\n"));
            }
            s
        }
    };
    emit(a.group.out.as_deref(), &text)?;
    let repeated: Vec<_> = parts.iter().filter(|(_, m)| *m != 1).collect();
    for (l, m) in &repeated {
        eprintln!("violation: {l} occurs with multiplicity {m}");
    }
    Ok(if repeated.is_empty() { 0 } else { 1 })
}

fn render_table(t: &SphericalTable, f: Format) -> String {
    match f {
        Format::Csv => t.to_csv(),
        Format::Json => pretty(&t.to_json()),
    }
}

fn cmd_spherical(a: &RunArgs, engine: EngineArg, cache_dir: Option<&Path>) -> Outcome {
    let data = load(&a.group)?;
    let th = theta(&data, a)?;
    let setup = Setup::new(&data, th.xi, th.pi, th.n)?;
    let caps = caps(&a.group);
    let engine = match engine {
        EngineArg::Brute => Engine::Brute,
        EngineArg::Closed => Engine::Closed,
        EngineArg::Symfunc => Engine::Symfunc,
    };
    let compute = || match engine {
        Engine::Brute => brute_table(&setup, &caps),
        Engine::Closed => closed_table(&setup, &caps),
        Engine::Symfunc => symfunc_table(&setup, &Readings::default()),
    };
    let table = match cache_dir {
        Some(dir) => SphericalCache::new(dir)?.get_or_compute(&setup, engine, compute)?,
        None => compute()?,
    };
    emit(
        a.group.out.as_deref(),
        &render_table(&table, a.group.format),
    )?;
    Ok(0)
}

fn cmd_reconcile(a: &RunArgs) -> Outcome {
    let data = load(&a.group)?;
    let th = theta(&data, a)?;
    let setup = Setup::new(&data, th.xi, th.pi, th.n)?;
    let report = reconcile(&setup, &Readings::default(), &caps(&a.group))?;
    let text = match a.group.format {
        Format::Json => pretty(&report.to_json()),
        Format::Csv => {
            let mut s = String::from("row,at,engine,brute,other\n");
            for m in &report.mismatches {
                s.push_str(&format!(
                    "\"{}\",\"{}\",{},{},{}\n",
                    m.row, m.at, m.engine, m.brute, m.other
                ));
            }
            s
        }
    };
    emit(a.group.out.as_deref(), &text)?;
    eprintln!(
        "{} rows, {} closed cells, {} symmetric-function terms, {} mismatches",
        report.rows,
        report.closed_cells,
        report.symfunc_terms,
        report.mismatches.len()
    );
    Ok(if report.is_clean() { 0 } else { 1 })
}

fn cmd_selftest(ids: &[u8], format: Format, out: Option<&Path>) -> Outcome {
    let outcomes = if ids.is_empty() {
        selftest::run_all()
    } else {
        ids.iter()
            .map(|&i| selftest::run(i).ok_or_else(|| usage(format!("no criterion {i}"))))
            .collect::<Result<Vec<_>, _>>()?
    };
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&outcomes).map_err(Error::from)?),
        Format::Csv => outcomes.iter().map(|o| format!("{o}\n")).collect(),
    };
    emit(out, &text)?;
    Ok(if outcomes.iter().all(|o| o.passed) {
        0
    } else {
        1
    })
}
