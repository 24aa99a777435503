use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use octoweak::checks::{mass_claims, verify_all, VerifyConfig, FLOAT_TOL};
use octoweak::lang::eval_str;
use octoweak::terms;
use octoweak_core::couplings::{coupling_match, Couplings};
use octoweak_core::field::{lagrangian_terms, FieldParams};
use octoweak_core::octonion::{generator_product, EpsTable, EpsTable3, EpsTable4};
use octoweak_core::scalar::Rational;
use serde_json::json;

#[derive(Parser)]
#[command(name = "octoweak", version, about = "Exact split-octonion algebra and claim verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check and print one line per check.
    Verify(VerifyArgs),
    /// Evaluate an expression.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a multiplication or structure-constant table.
    Table {
        #[arg(long, value_enum)]
        what: TableKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Diagonalize the vector-boson mass matrix and compare the named masses.
    Spectrum(Physics),
    /// Print the broken-phase term table.
    Terms {
        #[command(flatten)]
        physics: Physics,
        #[arg(long, value_enum, default_value_t = TermFormat::Json)]
        format: TermFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TermFormat {
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Bao,
    Nonasalg,
    Sigma,
    Eps4,
}

#[derive(Args, Clone)]
struct Physics {
    #[arg(long, default_value = "1")]
    m: Rational,
    #[arg(long, default_value = "1")]
    f: Rational,
    #[arg(long, default_value = "1")]
    g: Rational,
    #[arg(long, default_value = "1")]
    g1: Rational,
    #[arg(long, default_value = "1")]
    g4: Rational,
    #[arg(long, default_value = "1")]
    g5: Rational,
    #[arg(long, default_value = "1")]
    g6: Rational,
    #[arg(long, default_value = "1")]
    g7: Rational,
    #[arg(long, default_value = "1")]
    h: Rational,
}

impl Physics {
    fn resolve(&self) -> Result<(FieldParams, Couplings), String> {
        let p = FieldParams::new(self.m.clone(), self.f.clone()).map_err(|e| e.to_string())?;
        let c = Couplings {
            g: self.g.clone(),
            g1: self.g1.clone(),
            h: self.h.clone(),
            gk: [self.g4.clone(), self.g5.clone(), self.g6.clone(), self.g7.clone()],
        };
        Ok((p, c))
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    markdown: Option<PathBuf>,
    /// Treat FLAG as failure.
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    physics: Physics,
}

const USAGE: u8 = 2;

/// Exit code plus the text destined for stdout and stderr.
#[derive(Debug, Default)]
struct Outcome {
    code: u8,
    out: String,
    err: String,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome { out, ..Outcome::default() }
    }

    fn fail(code: u8, msg: impl std::fmt::Display) -> Self {
        Outcome { code, err: format!("error: {msg}\n"), ..Outcome::default() }
    }
}

fn main() -> ExitCode {
    let o = run(std::env::args_os());
    print!("{}", o.out);
    eprint!("{}", o.err);
    ExitCode::from(o.code)
}

fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: USAGE, err: text, ..Outcome::default() }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Verify(a) => verify(a),
        Command::Eval { expr, format } => match eval_str(&expr) {
            Ok(v) => Outcome::ok(match format {
                Format::Text => format!("{}\n", v.render()),
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&v.to_json()).expect("json")),
            }),
            Err(e) if e.code.is_parse() => Outcome::fail(USAGE, e),
            Err(e) => Outcome::fail(1, e),
        },
        Command::Table { what, format } => Outcome::ok(table(what, format)),
        Command::Spectrum(p) => spectrum(&p),
        Command::Terms { physics, format } => {
            let (p, c) = match physics.resolve() {
                Ok(x) => x,
                Err(e) => return Outcome::fail(USAGE, e),
            };
            match lagrangian_terms(&coupling_match(&c), &p) {
                Ok(t) => Outcome::ok(match format {
                    TermFormat::Json => terms::to_json(&t),
                    TermFormat::Markdown => terms::to_markdown(&t),
                }),
                Err(e) => Outcome::fail(1, e),
            }
        }
    }
}

fn verify(a: VerifyArgs) -> Outcome {
    let (params, couplings) = match a.physics.resolve() {
        Ok(x) => x,
        Err(e) => return Outcome::fail(USAGE, e),
    };
    let seed = match VerifyConfig::seed_from_env() {
        Ok(s) => s,
        Err(e) => return Outcome::fail(USAGE, e),
    };
    let r = verify_all(&VerifyConfig { params, couplings, seed, ..VerifyConfig::default() });
    for (path, text) in [(&a.json, r.to_json()), (&a.markdown, r.to_markdown())] {
        if let Some(path) = path {
            if let Err(e) = fs::write(path, text) {
                return Outcome::fail(1, format!("writing {}: {e}", path.display()));
            }
        }
    }
    Outcome { code: r.exit_code(a.strict) as u8, out: r.summary_lines(), err: String::new() }
}

fn digits(idx: &[usize]) -> String {
    idx.iter().map(|k| k.to_string()).collect()
}

fn eps_rows<const N: usize>(t: &EpsTable<N>, format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<_> = t.entries().iter().map(|(idx, s)| json!({ "indices": idx.to_vec(), "sign": s })).collect();
            serde_json::to_string_pretty(&rows).expect("json") + "\n"
        }
        Format::Text => t
            .entries()
            .iter()
            .map(|(idx, s)| format!("ε{} = {s:+}\n", digits(idx)))
            .collect(),
    }
}

fn table(what: TableKind, format: Format) -> String {
    match what {
        TableKind::Bao => match format {
            Format::Json => {
                let rows: Vec<_> = (0..8)
                    .flat_map(|i| (0..8).map(move |j| (i, j)))
                    .map(|(i, j)| {
                        let p = generator_product(i, j);
                        json!({ "indices": [i, j], "sign": p.sign, "product": p.index })
                    })
                    .collect();
                serde_json::to_string_pretty(&rows).expect("json") + "\n"
            }
            Format::Text => {
                let mut out = String::from("      ");
                for j in 0..8 {
                    out.push_str(&format!("{:>5}", format!("e{j}")));
                }
                out.push('\n');
                for i in 0..8 {
                    out.push_str(&format!("{:>5} ", format!("e{i}")));
                    for j in 0..8 {
                        let p = generator_product(i, j);
                        let cell = format!("{}e{}", if p.sign < 0 { "-" } else { "" }, p.index);
                        out.push_str(&format!("{cell:>5}"));
                    }
                    out.push('\n');
                }
                out
            }
        },
        TableKind::Nonasalg => eps_rows(&EpsTable3::structure_constants(), format),
        TableKind::Eps4 => match EpsTable4::from_associators() {
            Ok(t) => eps_rows(&t, format),
            Err(e) => format!("{e}\n"),
        },
        TableKind::Sigma => {
            let cells: Vec<(usize, usize, String)> = (0..8)
                .flat_map(|i| (0..8).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let text = eval_str(&format!("(S{i}*S{j})")).expect("generator product").render();
                    (i, j, text)
                })
                .collect();
            match format {
                Format::Json => {
                    let rows: Vec<_> =
                        cells.iter().map(|(i, j, t)| json!({ "indices": [i, j], "product": t })).collect();
                    serde_json::to_string_pretty(&rows).expect("json") + "\n"
                }
                Format::Text => {
                    let width = cells.iter().map(|c| c.2.chars().count()).max().unwrap_or(1) + 2;
                    let pad = |s: &str| format!("{}{s}", " ".repeat(width - s.chars().count()));
                    let mut out = pad("");
                    for j in 0..8 {
                        out.push_str(&pad(&format!("Σ{j}")));
                    }
                    out.push('\n');
                    for i in 0..8 {
                        out.push_str(&pad(&format!("Σ{i}")));
                        for j in 0..8 {
                            out.push_str(&pad(&cells[i * 8 + j].2));
                        }
                        out.push('\n');
                    }
                    out
                }
            }
        }
    }
}

fn spectrum(p: &Physics) -> Outcome {
    let (params, couplings) = match p.resolve() {
        Ok(x) => x,
        Err(e) => return Outcome::fail(USAGE, e),
    };
    let cs = coupling_match(&couplings);
    match mass_claims(&cs, &params) {
        Ok((sp, claims)) => {
            let scale = sp.eigenvalues.iter().fold(1.0f64, |a, b| a.max(b.abs()));
            let claims: Vec<_> = claims
                .iter()
                .map(|c| json!({ "name": c.name, "claimed": c.claimed, "computed": c.computed, "status": c.status }))
                .collect();
            let out = json!({
                "eigenvalues": sp.eigenvalues,
                "zero_modes": sp.zero_modes(FLOAT_TOL * scale),
                "claims": claims,
            });
            Outcome::ok(format!("{}\n", serde_json::to_string_pretty(&out).expect("json")))
        }
        Err(e) => Outcome::fail(1, e),
    }
}
