use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use freebell::bell::{self, CForm};
use freebell::bellhopf;
use freebell::qsym::{self, DualImmaculateRoute};
use freebell::verify::{self, Bounds, Suite};
use freebell::{Composition, Permutation};

#[derive(Parser)]
#[command(
    name = "freebell",
    version,
    about = "Noncommutative Bell polynomials, dual immaculate functions and Bell classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Classic,
    Qprime,
    Qdoubleprime,
    Triangle,
    Qdet,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    All,
    BarCi,
    Grinberg,
    Tableaux,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Form {
    Fqsym,
    Qsym,
    Qpoly,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Bell,
    Dendriform,
    Dualimm,
    Hopf,
}

#[derive(Subcommand)]
enum Command {
    /// Bell polynomials B''_n, B'_n(q), B''_n(q), B_n(q) or the quasideterminant
    Bell {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "classic")]
        variant: Variant,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dual immaculate function of a composition
    Dualimm {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value = "all")]
        route: Route,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Coefficient C_I of Y^I in the free Bell polynomial
    Ccoeff {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value = "fqsym")]
        form: Form,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Free Bell polynomial with FQSym coefficients
    Freebell {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Bell classes of S_n
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Poset of a permutation
    Poset {
        #[arg(long)]
        sigma: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run invariant suites
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A failure with its exit code: 1 for a failed check, 2 for bad input.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn mismatch(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn internal(e: freebell::Error) -> Failure {
    mismatch(e.to_string())
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(usage(
            "--format dot is only available for the poset command",
        ))
    } else {
        Ok(())
    }
}

fn check_n(n: usize, max: usize) -> Result<(), Failure> {
    if n == 0 || n > max {
        Err(usage(format!("--n must lie in 1..={max}")))
    } else {
        Ok(())
    }
}

fn parse_shape(s: &str) -> Result<Composition, Failure> {
    let i: Composition = s
        .parse()
        .map_err(|e: freebell::Error| usage(e.to_string()))?;
    if i.is_empty() {
        return Err(usage("the composition must be nonempty"));
    }
    Ok(i)
}

fn emit(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable"),
        _ => text,
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Bell {
            n,
            variant,
            max_degree,
            format,
        } => {
            no_dot(format)?;
            check_n(n, max_degree)?;
            let text = match variant {
                Variant::Classic => bell::bell_double_prime(n).to_string(),
                Variant::Qprime => bell::bell_prime_q(n).to_string(),
                Variant::Qdoubleprime => bell::bell_double_prime_q(n).to_string(),
                Variant::Triangle => bell::bell_triangle(n).to_string(),
                Variant::Qdet => bell::quasideterminant_bell_q(n).to_string(),
            };
            let value =
                json!({ "n": n, "variant": format!("{variant:?}").to_lowercase(), "result": text });
            Ok(emit(format, text, value))
        }
        Command::Dualimm {
            shape,
            route,
            format,
        } => {
            no_dot(format)?;
            let i = parse_shape(&shape)?;
            let routes: Vec<DualImmaculateRoute> = match route {
                Route::All => DualImmaculateRoute::ALL.to_vec(),
                Route::BarCi => vec![DualImmaculateRoute::BarCI],
                Route::Grinberg => vec![DualImmaculateRoute::GrinbergIterated],
                Route::Tableaux => vec![DualImmaculateRoute::Tableaux],
            };
            let results = routes
                .iter()
                .map(|&r| qsym::dual_immaculate(&i, r).map(|x| (r, x)))
                .collect::<freebell::Result<Vec<_>>>()
                .map_err(internal)?;
            let (first_route, first) = &results[0];
            for (r, x) in &results[1..] {
                if x != first {
                    return Err(mismatch(format!(
                        "routes disagree for {i}\n{first_route:?}: {first}\n{r:?}: {x}"
                    )));
                }
            }
            let value = json!({ "shape": i.to_string(), "expansion": first });
            Ok(emit(format, first.to_string(), value))
        }
        Command::Ccoeff {
            shape,
            form,
            format,
        } => {
            no_dot(format)?;
            let i = parse_shape(&shape)?;
            let form = match form {
                Form::Fqsym => CForm::Fqsym,
                Form::Qsym => CForm::Qsym,
                Form::Qpoly => CForm::Qpoly,
            };
            let c = bell::c_coefficient(&i, form).map_err(internal)?;
            let value = json!({ "shape": i.to_string(), "form": format!("{form:?}").to_lowercase(), "result": c.to_string() });
            Ok(emit(format, c.to_string(), value))
        }
        Command::Freebell {
            n,
            max_degree,
            format,
        } => {
            no_dot(format)?;
            check_n(n, max_degree)?;
            let b = bell::free_bell(n);
            Ok(emit(format, b.to_string(), b.to_json()))
        }
        Command::Classes {
            n,
            max_degree,
            format,
        } => {
            no_dot(format)?;
            check_n(n, max_degree)?;
            let classes = bellhopf::bell_classes(n);
            let text = classes
                .iter()
                .map(|c| {
                    format!(
                        "{}  min {}  max {}  size {}",
                        c.partition,
                        c.min,
                        c.max,
                        c.members.len()
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let value = json!({
                "n": n,
                "classes": classes.iter().map(|c| json!({
                    "partition": c.partition.to_string(),
                    "min": c.min.to_string(),
                    "max": c.max.to_string(),
                    "size": c.members.len(),
                })).collect::<Vec<_>>(),
            });
            Ok(emit(format, text, value))
        }
        Command::Poset { sigma, format } => {
            let p: Permutation = sigma
                .parse()
                .map_err(|e: freebell::Error| usage(e.to_string()))?;
            let columns = bellhopf::psa_insert(p.values()).map_err(|e| usage(e.to_string()))?;
            let poset = bellhopf::bell_poset(&columns);
            let edges: Vec<Value> = poset
                .hasse()
                .iter()
                .map(|&(a, b, kind)| json!({ "lower": a, "upper": b, "kind": format!("{kind:?}").to_lowercase() }))
                .collect();
            Ok(match format {
                Format::Dot => poset.to_dot(),
                Format::Json => emit(
                    format,
                    String::new(),
                    json!({ "sigma": p.to_string(), "columns": columns.to_string(), "hasse": edges }),
                ),
                Format::Text => {
                    let mut lines = vec![format!("columns {columns}")];
                    lines.extend(poset.hasse().iter().map(|&(a, b, kind)| {
                        format!("{a} < {b} ({})", format!("{kind:?}").to_lowercase())
                    }));
                    lines.join("\n")
                }
            })
        }
        Command::Verify {
            suite,
            max_degree,
            format,
        } => {
            no_dot(format)?;
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Bell => Suite::Bell,
                SuiteArg::Dendriform => Suite::Dendriform,
                SuiteArg::Dualimm => Suite::Dualimm,
                SuiteArg::Hopf => Suite::Hopf,
            };
            let report = verify::run(suite, Bounds { max_degree });
            let value = serde_json::to_value(&report).expect("serializable");
            let out = emit(format, report.to_string().trim_end().to_string(), value);
            if report.passed() {
                Ok(out)
            } else {
                Err(mismatch(out))
            }
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("FREEBELL_THREADS") {
        let n: usize = v.parse().map_err(|_| {
            usage(format!(
                "FREEBELL_THREADS must be a positive integer, got '{v}'"
            ))
        })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|_| run(cli)) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
