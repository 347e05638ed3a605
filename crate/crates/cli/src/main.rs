//! `pinperm`: batch front end for the word, pin and class computations.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use pinperm::classes::{self, enumeration_divergence};
use pinperm::verify::{self, Check};
use pinperm::{sadic, words, DirectiveWord, Error, SequenceSpec, SuiteSelection};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "pinperm",
    version,
    about = "Pin-sequence permutation classes built from binary word families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Largest length any class enumeration may reach.
    #[arg(long, global = true, env = "PINPERM_MAX_N", default_value_t = classes::DEFAULT_MAX_N)]
    max_n: usize,

    /// Include wall-clock durations (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The word alpha_i of a sequence.
    Alpha {
        #[arg(long)]
        spec: SequenceSpec,
        #[arg(long)]
        i: usize,
    },
    /// Length-n factors of the word family.
    Lang {
        #[arg(long)]
        spec: SequenceSpec,
        #[arg(long)]
        n: usize,
    },
    /// Members of the class of length n.
    Class {
        #[arg(long)]
        spec: SequenceSpec,
        #[arg(long)]
        n: usize,
    },
    /// Class sizes for n = 1..=n_max.
    Counts {
        #[arg(long)]
        spec: SequenceSpec,
        #[arg(long)]
        n_max: usize,
    },
    /// Where two sequences' languages and classes first differ.
    Diverge {
        #[arg(long)]
        s: SequenceSpec,
        #[arg(long)]
        t: SequenceSpec,
    },
    /// Factor complexity of the S-adic sequence.
    Sadic {
        #[arg(
            long,
            conflicts_with = "directive",
            required_unless_present = "directive"
        )]
        spec: Option<SequenceSpec>,
        /// Exponents t_k of the directive word, last one repeating.
        #[arg(long)]
        directive: Option<DirectiveWord>,
        #[arg(long)]
        n: usize,
    },
    /// Fekete lower bounds on the growth rate.
    Growth {
        #[arg(long)]
        spec: SequenceSpec,
        #[arg(long)]
        n_max: usize,
    },
    /// Run reproduction suites.
    Verify {
        /// words, pins, perm, classes, sadic or ALL.
        #[arg(long, default_value = "ALL")]
        suite: SuiteSelection,
    },
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs: Value,
    outputs: Value,
    checks: Vec<Check>,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    duration_ms: Option<f64>,
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    checks_passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            checks_passed: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli, started) {
        Ok(out) => {
            print!("{}", out.text);
            if cli.timing && cli.format != Format::Json {
                eprintln!("elapsed: {:.3} ms", started.elapsed().as_secs_f64() * 1e3);
            }
            if out.checks_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn guard(n: usize, max_n: usize) -> Result<(), Failure> {
    if n > max_n {
        return Err(Failure::Usage(format!(
            "length {n} exceeds the enumeration bound {max_n} (raise --max-n or PINPERM_MAX_N)"
        )));
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn report(
    cli: &Cli,
    started: Instant,
    command: &str,
    inputs: Value,
    outputs: Value,
    checks: Vec<Check>,
) -> RunReport {
    RunReport {
        command: command.to_string(),
        inputs,
        outputs,
        passed: checks.iter().all(|c| c.passed),
        checks,
        duration_ms: cli.timing.then(|| started.elapsed().as_secs_f64() * 1e3),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn run(cli: &Cli, started: Instant) -> Result<Output, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Alpha { spec, i } => {
            let word = words::alpha(spec, *i)?;
            Ok(Output::ok(match fmt {
                Format::Json => {
                    to_json(&json!({"spec": spec, "i": i, "length": word.len(), "word": word}))
                }
                Format::Csv => {
                    format!("spec,i,word\n{},{i},{word}\n", csv_field(&spec.to_string()))
                }
                Format::Plain => format!("{word}\n"),
            }))
        }
        Command::Lang { spec, n } => {
            let slice = words::language_slice(spec, *n)?;
            Ok(Output::ok(match fmt {
                Format::Json => to_json(&slice),
                Format::Csv => slice
                    .iter()
                    .fold("word\n".to_string(), |acc, w| acc + &format!("{w}\n")),
                Format::Plain => slice.iter().map(|w| format!("{w}\n")).collect(),
            }))
        }
        Command::Class { spec, n } => {
            guard(*n, cli.max_n)?;
            let slice = classes::class_slice(spec, *n, cli.max_n)?;
            Ok(Output::ok(match fmt {
                Format::Json => to_json(&slice),
                Format::Csv => slice
                    .members
                    .iter()
                    .fold("permutation\n".to_string(), |acc, p| {
                        acc + &csv_field(&p.to_string()) + "\n"
                    }),
                Format::Plain => slice.members.iter().map(|p| format!("{p}\n")).collect(),
            }))
        }
        Command::Counts { spec, n_max } => {
            guard(*n_max, cli.max_n)?;
            let counts = classes::class_counts(spec, *n_max, cli.max_n)?;
            let rows: String = counts
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{},{c}\n", k + 1))
                .collect();
            Ok(Output::ok(match fmt {
                Format::Json => to_json(&json!({"spec": spec, "n_max": n_max, "counts": counts})),
                Format::Csv => format!("n,count\n{rows}"),
                Format::Plain => rows,
            }))
        }
        Command::Growth { spec, n_max } => {
            guard(*n_max, cli.max_n)?;
            let counts = classes::class_counts(spec, *n_max, cli.max_n)?;
            let bounds: Vec<f64> = (1..=counts.len())
                .map(|k| classes::fekete_from_counts(&counts[..k]))
                .collect();
            let violations = classes::supermultiplicativity_violations(&counts);
            Ok(Output::ok(match fmt {
                Format::Json => to_json(&json!({
                    "spec": spec,
                    "n_max": n_max,
                    "counts": counts,
                    "fekete_lower_bounds": bounds,
                    "fekete_lower_bound": bounds.last(),
                    "supermultiplicativity_violations": violations,
                })),
                Format::Csv => {
                    let mut s = "n,count,fekete_lower_bound\n".to_string();
                    for (k, (c, b)) in counts.iter().zip(&bounds).enumerate() {
                        writeln!(s, "{},{c},{b:.6}", k + 1).unwrap();
                    }
                    s
                }
                Format::Plain => {
                    let mut s = String::new();
                    for (k, (c, b)) in counts.iter().zip(&bounds).enumerate() {
                        writeln!(s, "n={:<3} |C_n|={c:<10} bound={b:.6}", k + 1).unwrap();
                    }
                    writeln!(s, "supermultiplicativity violations: {}", violations.len()).unwrap();
                    s
                }
            }))
        }
        Command::Sadic { spec, directive, n } => {
            let (directive, spec) = match (spec, directive) {
                (Some(s), _) => (DirectiveWord::from_spec(s)?, s.clone()),
                (None, Some(d)) => (d.clone(), d.to_spec()?),
                (None, None) => unreachable!("clap requires one of --spec and --directive"),
            };
            let complexity = sadic::complexity(&spec, *n)?;
            Ok(Output::ok(match fmt {
                Format::Json => to_json(&json!({
                    "spec": spec,
                    "directive": directive,
                    "n": n,
                    "complexity": complexity,
                })),
                Format::Csv => format!(
                    "spec,directive,n,complexity\n{},{},{n},{complexity}\n",
                    csv_field(&spec.to_string()),
                    csv_field(&directive.to_string())
                ),
                Format::Plain => format!("{complexity}\n"),
            }))
        }
        Command::Diverge { s, t } => diverge(cli, started, s, t),
        Command::Verify { suite } => {
            let checks = verify::run(*suite);
            let passed = checks.iter().all(|c| c.passed);
            let label = match suite {
                SuiteSelection::All => "ALL".to_string(),
                SuiteSelection::One(s) => s.to_string(),
            };
            let text = match fmt {
                Format::Json => to_json(&report(
                    cli,
                    started,
                    "verify",
                    json!({"suite": label}),
                    json!({"total": checks.len(), "failed": checks.iter().filter(|c| !c.passed).count()}),
                    checks,
                )),
                Format::Csv => {
                    let mut s = "suite,name,anchor,expected,actual,passed\n".to_string();
                    for c in &checks {
                        writeln!(
                            s,
                            "{},{},{},{},{},{}",
                            c.suite,
                            csv_field(&c.name),
                            csv_field(&c.anchor),
                            csv_field(&c.expected),
                            csv_field(&c.actual),
                            c.passed
                        )
                        .unwrap();
                    }
                    s
                }
                Format::Plain => plain_checks(&checks),
            };
            Ok(Output {
                text,
                checks_passed: passed,
            })
        }
    }
}

fn plain_checks(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        writeln!(s, "{tag} {}: {}", c.suite, c.name).unwrap();
        if !c.passed {
            writeln!(s, "     contradicts: {}", c.anchor).unwrap();
            writeln!(s, "     expected: {}", c.expected).unwrap();
            writeln!(s, "     actual:   {}", c.actual).unwrap();
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(
        s,
        "{} checks, {} passed, {failed} failed",
        checks.len(),
        checks.len() - failed
    )
    .unwrap();
    s
}

fn diverge(
    cli: &Cli,
    started: Instant,
    a: &SequenceSpec,
    b: &SequenceSpec,
) -> Result<Output, Failure> {
    let (s, t, orientation) = match a.lex_cmp(b) {
        std::cmp::Ordering::Less => (a, b, "as given"),
        std::cmp::Ordering::Greater => (b, a, "swapped"),
        std::cmp::Ordering::Equal => return Err(Error::EqualSequences.into()),
    };
    let d = enumeration_divergence(s, t, cli.max_n)?;
    let anchor = "distinct enumerations, separated at N = 2M - 1";
    let mk = |name: &str, expected: &str, actual: String| Check {
        suite: pinperm::Suite::Classes,
        name: name.to_string(),
        anchor: anchor.to_string(),
        passed: expected == actual,
        expected: expected.to_string(),
        actual,
    };
    let mut checks = vec![
        mk(
            "containment C_n(t) ⊆ C_n(s) for n <= min(N, max_n)",
            "true",
            d.containment_holds.to_string(),
        ),
        mk("witness in C_N(s)", "true", d.witness_in_s.to_string()),
        mk(
            "witness outside C_N(t)",
            "true",
            d.witness_excluded_from_t.to_string(),
        ),
    ];
    if let Some(strict) = d.strict_at_n {
        checks.push(mk("|C_N(t)| < |C_N(s)|", "true", strict.to_string()));
    }

    let text = match cli.format {
        Format::Json => to_json(&report(
            cli,
            started,
            "diverge",
            json!({"s": a, "t": b}),
            json!({"orientation": orientation, "divergence": d}),
            checks.clone(),
        )),
        Format::Csv => {
            let mut s = "key,value\n".to_string();
            let rows = [
                ("orientation", orientation.to_string()),
                ("s", d.s.to_string()),
                ("t", d.t.to_string()),
                ("M", d.m.to_string()),
                ("N", d.n.to_string()),
                ("word", d.word.to_string()),
                ("pin_word", d.pin_word.verbose()),
                ("witness", d.witness.to_string()),
                (
                    "first_strict",
                    d.first_strict.map_or(String::new(), |n| n.to_string()),
                ),
            ];
            for (k, v) in rows {
                writeln!(s, "{k},{}", csv_field(&v)).unwrap();
            }
            s
        }
        Format::Plain => {
            let mut s = String::new();
            writeln!(s, "orientation: {orientation}").unwrap();
            writeln!(s, "s: {}", d.s).unwrap();
            writeln!(s, "t: {}", d.t).unwrap();
            writeln!(s, "M={}", d.m).unwrap();
            writeln!(s, "N={}", d.n).unwrap();
            writeln!(s, "word: {}", d.word).unwrap();
            writeln!(s, "pin word: {}", d.pin_word.verbose()).unwrap();
            writeln!(s, "witness: {}", d.witness).unwrap();
            writeln!(s, "route: {:?}", d.route).unwrap();
            let counts = |c: &[usize]| {
                c.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            writeln!(s, "counts s: {}", counts(&d.counts_s)).unwrap();
            writeln!(s, "counts t: {}", counts(&d.counts_t)).unwrap();
            match (d.first_strict, &d.separating) {
                (Some(n), Some(pi)) => writeln!(s, "first strict length: {n} (e.g. {pi})").unwrap(),
                _ => writeln!(s, "first strict length: none up to {}", cli.max_n).unwrap(),
            }
            s.push_str(&plain_checks(&checks));
            s
        }
    };
    Ok(Output {
        text,
        checks_passed: checks.iter().all(|c| c.passed),
    })
}
