use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use negq_core::algebra::{rational_fraction_string, Poly};
use negq_core::data::{shipped_types, DataSource};
use negq_core::ppoly::{
    degree_checks, independence_report, p_table, verify_sign_theorem, TypeContext, DEGREE_CHECK_QS,
};
use negq_core::rootsystem::CartanType;
use negq_core::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "negq", version, about = "Exact P-polynomials of unipotent families over pseudo-Levi orbits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cartan type, e.g. B2, G2, F4
    #[arg(long = "type", short = 't', global = true)]
    cartan_type: Option<String>,
    /// Orbit name ("A2(long)"), index, "full" or "empty"
    #[arg(long, global = true)]
    orbit: Option<String>,
    /// Family index, member label, "trivial" or "sign"
    #[arg(long, global = true)]
    family: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Directory with labels_<T>.toml / families_<T>.toml overriding the shipped data
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
    /// Worker threads for sweeps over several types (0 = all cores)
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the supported Cartan types
    Types,
    /// Pseudo-Levi orbits with |Z_Y| and the ! pairing
    Subsystems,
    /// Classes of N_W(Σ_H)/W_H for one orbit
    Zclasses,
    /// Table of P_{m,z}(u)
    Ppoly,
    /// Verification sweeps
    Verify {
        #[arg(value_enum)]
        which: Check,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    Theorem112,
    Independence,
    Degrees,
    Selftest,
}

/// Tabular output shared by the table and CSV formats.
struct Rows {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Rows {
    fn new(header: Vec<&'static str>) -> Self {
        Rows { header, rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn render_table(&self, out: &mut String) {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: Vec<&str>, out: &mut String| {
            let padded: Vec<String> =
                cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            out.push_str(padded.join("  ").trim_end());
            out.push('\n');
        };
        line(self.header.clone(), out);
        for r in &self.rows {
            line(r.iter().map(String::as_str).collect(), out);
        }
    }

    fn render_csv(&self, out: &mut String) -> Result<()> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::DataIntegrity(e.to_string());
        w.write_record(&self.header).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::DataIntegrity(e.to_string()))?;
        out.push_str(&String::from_utf8_lossy(&bytes));
        Ok(())
    }
}

/// One command's output for one type.
struct Section {
    title: String,
    rows: Rows,
    json: serde_json::Value,
    failures: usize,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::W0NotCentral(_) => 3,
        Error::UnsupportedType(_) | Error::UnknownFilter(_) => 2,
        Error::DataIntegrity(_)
        | Error::UnknownLabel(_)
        | Error::NotAPartition(_)
        | Error::EmbeddingNotInjective(_)
        | Error::SpecialNotUnique(_)
        | Error::SignTwistNotAFamily(_)
        | Error::AmbiguousLabel(_)
        | Error::UnmatchedIrreducible(_) => 4,
        _ => 1,
    }
}

fn coeff_strings(p: &Poly) -> String {
    if p.is_zero() {
        return "0/1".into();
    }
    p.coeffs().iter().map(rational_fraction_string).collect::<Vec<_>>().join(" ")
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn context(cli: &Cli, t: &CartanType) -> Result<TypeContext> {
    let source = match &cli.data_dir {
        Some(d) => DataSource::directory(d),
        None => DataSource::embedded(),
    };
    TypeContext::load(t, &source)
}

fn selected_orbits(cli: &Cli, ctx: &TypeContext) -> Result<Vec<usize>> {
    match &cli.orbit {
        None => Ok((0..ctx.orbits.len()).collect()),
        Some(key) => ctx.find_orbit(key).map(|o| vec![o]).ok_or_else(|| Error::UnknownFilter(format!("orbit {key}"))),
    }
}

fn selected_families(cli: &Cli, ctx: &TypeContext) -> Result<Vec<usize>> {
    match &cli.family {
        None => Ok((0..ctx.families.families.len()).collect()),
        Some(key) => ctx
            .families
            .find(&ctx.chars, key)
            .map(|f| vec![f])
            .ok_or_else(|| Error::UnknownFilter(format!("family {key}"))),
    }
}

fn types_section() -> Result<Section> {
    let mut rows = Rows::new(vec!["type", "rank", "|W|", "N", "degrees", "w0 = -1"]);
    let mut json = Vec::new();
    for t in shipped_types() {
        let rs = negq_core::rootsystem::build_root_system(&t)?;
        let wg = negq_core::weyl::WeylGroup::new(std::sync::Arc::new(rs));
        let rs = wg.root_system();
        let minus_one = wg.longest_element().1;
        let degrees: Vec<String> = rs.degrees().iter().map(u32::to_string).collect();
        rows.push(vec![
            t.to_string(),
            rs.rank().to_string(),
            wg.order().to_string(),
            rs.num_positive().to_string(),
            degrees.join(","),
            minus_one.to_string(),
        ]);
        json.push(serde_json::json!({
            "type": t.to_string(),
            "rank": rs.rank(),
            "order": wg.order(),
            "num_positive": rs.num_positive(),
            "degrees": rs.degrees(),
            "w0_is_minus_one": minus_one,
        }));
    }
    Ok(Section { title: "types".into(), rows, json: json.into(), failures: 0 })
}

fn subsystems_section(ctx: &TypeContext) -> Result<Section> {
    let mut rows = Rows::new(vec!["index", "orbit", "N_H", "orbit size", "|Z_Y|", "bang"]);
    let mut json = Vec::new();
    for (o, y) in ctx.orbits.iter().enumerate() {
        let z = ctx.zset(o)?;
        let bang: Vec<String> =
            z.classes.iter().map(|c| c.bang.map_or("-".to_string(), |b| format!("{}->{}", c.index, b))).collect();
        rows.push(vec![
            o.to_string(),
            y.name.clone(),
            y.representative.num_positive().to_string(),
            y.orbit_size.to_string(),
            z.len().to_string(),
            bang.join(" "),
        ]);
        json.push(serde_json::json!({
            "index": o,
            "orbit": y.name,
            "num_positive": y.representative.num_positive(),
            "orbit_size": y.orbit_size,
            "roots": y.representative.roots,
            "z_classes": z.len(),
            "bang": z.classes.iter().map(|c| c.bang).collect::<Vec<_>>(),
        }));
    }
    Ok(Section { title: ctx.cartan_type.to_string(), rows, json: json.into(), failures: 0 })
}

fn zclasses_section(cli: &Cli, ctx: &TypeContext) -> Result<Section> {
    let mut rows = Rows::new(vec!["orbit", "z", "cosets", "representative", "bang"]);
    let mut json = Vec::new();
    for o in selected_orbits(cli, ctx)? {
        let name = &ctx.orbits[o].name;
        let z = ctx.zset(o)?;
        for c in &z.classes {
            let word = ctx.group.format_word(c.representative);
            rows.push(vec![
                name.clone(),
                c.index.to_string(),
                c.cosets.len().to_string(),
                if word.is_empty() { "1".into() } else { word.clone() },
                c.bang.map_or("-".into(), |b| b.to_string()),
            ]);
            json.push(serde_json::json!({
                "orbit": name,
                "z": c.index,
                "cosets": c.cosets.len(),
                "representative": word,
                "bang": c.bang,
            }));
        }
    }
    Ok(Section { title: ctx.cartan_type.to_string(), rows, json: json.into(), failures: 0 })
}

fn ppoly_section(cli: &Cli, ctx: &TypeContext) -> Result<Section> {
    let orbits = selected_orbits(cli, ctx)?;
    let families = selected_families(cli, ctx)?;
    let mut rows = Rows::new(vec!["type", "orbit", "family", "m", "z", "coeffs", "P(u)"]);
    let mut json = Vec::new();
    for p in p_table(ctx, &orbits, &families)? {
        let pr = &p.provenance;
        rows.push(vec![
            pr.cartan_type.clone(),
            pr.orbit.clone(),
            pr.family.to_string(),
            pr.m.clone(),
            pr.z.to_string(),
            coeff_strings(&p.poly),
            p.poly.to_string(),
        ]);
        json.push(serde_json::json!({
            "type": pr.cartan_type,
            "orbit": pr.orbit,
            "family": pr.family,
            "m": pr.m,
            "z": pr.z,
            "coeffs": if p.poly.is_zero() { serde_json::json!([[0, 1]]) } else { to_json(&p.poly) },
        }));
    }
    Ok(Section { title: ctx.cartan_type.to_string(), rows, json: json.into(), failures: 0 })
}

fn verify_section(which: Check, ctx: &TypeContext) -> Result<Section> {
    let title = ctx.cartan_type.to_string();
    match which {
        Check::Theorem112 => {
            let r = verify_sign_theorem(ctx)?;
            let mut rows = Rows::new(vec!["orbit", "family", "m", "z", "m!", "z!", "result"]);
            for c in &r.checks {
                rows.push(vec![
                    c.orbit.clone(),
                    c.family.to_string(),
                    c.m.clone(),
                    c.z.to_string(),
                    c.m_bang.clone(),
                    c.z_bang.to_string(),
                    if c.pass {
                        "pass".into()
                    } else {
                        format!("FAIL {} vs {}", c.lhs.as_ref().unwrap(), c.rhs.as_ref().unwrap())
                    },
                ]);
            }
            let failures = r.checks.iter().filter(|c| !c.pass).count();
            Ok(Section { title, rows, json: to_json(&r), failures })
        }
        Check::Independence => {
            let r = independence_report(ctx)?;
            let mut rows = Rows::new(vec!["orbit", "z", "kind", "representative", "result"]);
            for c in &r.checks {
                rows.push(vec![
                    c.orbit.clone(),
                    c.z.to_string(),
                    c.kind.clone(),
                    c.alternative_representative.to_string(),
                    if c.pass { "pass" } else { "FAIL" }.into(),
                ]);
            }
            for s in &r.skipped {
                rows.push(vec![s.clone(), "-".into(), "skipped".into(), "-".into(), "-".into()]);
            }
            let failures = r.checks.iter().filter(|c| !c.pass).count();
            Ok(Section { title, rows, json: to_json(&r), failures })
        }
        Check::Degrees => {
            let checks = degree_checks(ctx, &DEGREE_CHECK_QS)?;
            let mut rows = Rows::new(vec!["family", "m", "q", "value", "result"]);
            for c in &checks {
                rows.push(vec![
                    c.family.to_string(),
                    c.m.clone(),
                    c.q.to_string(),
                    c.value.clone(),
                    if c.pass { "pass" } else { "FAIL" }.into(),
                ]);
            }
            let failures = checks.iter().filter(|c| !c.pass).count();
            Ok(Section { title, rows, json: to_json(&checks), failures })
        }
        Check::Selftest => {
            let checks = negq_core::checks::self_checks(ctx);
            let mut rows = Rows::new(vec!["check", "result"]);
            for (name, ok) in &checks {
                rows.push(vec![name.clone(), if *ok { "pass" } else { "FAIL" }.into()]);
            }
            let failures = checks.iter().filter(|c| !c.1).count();
            let json = checks.iter().map(|(n, ok)| serde_json::json!({"check": n, "pass": ok})).collect();
            Ok(Section { title, rows, json: serde_json::Value::Array(json), failures })
        }
    }
}

/// Types a command runs over: the --type selection, or every shipped type
/// (restricted to w0 = −1 for the sign identity).
fn types_for(cli: &Cli) -> Result<Vec<CartanType>> {
    match &cli.cartan_type {
        Some(t) => Ok(vec![t.parse()?]),
        None => {
            let all = shipped_types();
            Ok(match cli.command {
                Command::Verify { which: Check::Theorem112 } => all
                    .into_iter()
                    .filter(|t| {
                        negq_core::rootsystem::build_root_system(t).is_ok_and(|rs| {
                            negq_core::weyl::WeylGroup::new(std::sync::Arc::new(rs)).longest_element().1
                        })
                    })
                    .collect(),
                _ => all,
            })
        }
    }
}

fn sections(cli: &Cli) -> Result<Vec<Section>> {
    if let Command::Types = cli.command {
        return Ok(vec![types_section()?]);
    }
    let types = types_for(cli)?;
    let run = |t: &CartanType| -> Result<Section> {
        let ctx = context(cli, t)?;
        match &cli.command {
            Command::Types => unreachable!(),
            Command::Subsystems => subsystems_section(&ctx),
            Command::Zclasses => zclasses_section(cli, &ctx),
            Command::Ppoly => ppoly_section(cli, &ctx),
            Command::Verify { which } => verify_section(*which, &ctx),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| Error::DataIntegrity(e.to_string()))?;
    pool.install(|| types.par_iter().map(run).collect())
}

fn render(cli: &Cli, sections: &[Section]) -> Result<String> {
    let mut out = String::new();
    match cli.format {
        Format::Json => {
            let value = if sections.len() == 1 {
                sections[0].json.clone()
            } else {
                serde_json::Value::Object(sections.iter().map(|s| (s.title.clone(), s.json.clone())).collect())
            };
            out.push_str(&serde_json::to_string_pretty(&value).expect("json values serialize"));
            out.push('\n');
        }
        Format::Csv => {
            for s in sections {
                s.rows.render_csv(&mut out)?;
            }
        }
        Format::Table => {
            for (i, s) in sections.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                if sections.len() > 1 || !matches!(cli.command, Command::Types) {
                    out.push_str(&format!("== {} ==\n", s.title));
                }
                s.rows.render_table(&mut out);
            }
            if let Command::Verify { which } = cli.command {
                let total: usize = sections.iter().map(|s| s.rows.rows.len()).sum();
                let failed: usize = sections.iter().map(|s| s.failures).sum();
                out.push_str(&format!("\n{which:?}: {} of {total} checks passed\n", total - failed));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = sections(&cli).and_then(|s| Ok((render(&cli, &s)?, s.iter().map(|s| s.failures).sum::<usize>())));
    match result {
        Ok((text, failures)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if failures == 0 { 0 } else { 1 })
        }
        Err(e) => {
            match &e {
                Error::W0NotCentral(t) => eprintln!(
                    "error: {e}\nthe q -> -q identity is only stated when the longest element of W({t}) is central"
                ),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
