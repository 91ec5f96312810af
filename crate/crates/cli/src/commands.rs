use std::fmt::Write as _;
use std::path::Path;

use abshift::surgery::{self, RandomSample, SuiteConfig};
use abshift::thermo::{self, Potential};
use abshift::{criterion, expansion, language, AbShift, LabeledGraph, Params, Word};
use serde::Serialize;

use crate::output::{document, Emitted, Failure};
use crate::{Cli, Command, LangCommand, SurgeryCommand, Which};

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Expand(_) => "expand",
        Command::Lang(LangCommand::Check { .. }) => "lang check",
        Command::Lang(LangCommand::Enum { .. }) => "lang enum",
        Command::Lang(LangCommand::Count { .. }) => "lang count",
        Command::Graph(_) => "graph",
        Command::Surgery(SurgeryCommand::Hat { .. }) => "surgery hat",
        Command::Surgery(SurgeryCommand::Tilde { .. }) => "surgery tilde",
        Command::Surgery(SurgeryCommand::G { .. }) => "surgery g",
        Command::Surgery(SurgeryCommand::Check { .. }) => "surgery check",
        Command::Criterion(_) => "criterion",
        Command::Pressure(_) => "pressure",
        Command::Gibbs(_) => "gibbs",
    }
}

fn params(cli: &Cli) -> Result<Params, Failure> {
    let (Some(alpha), Some(beta)) = (&cli.global.alpha, &cli.global.beta) else {
        return Err(Failure::Usage("--alpha and --beta are required".into()));
    };
    Ok(Params::new(alpha.clone(), beta.clone())?)
}

fn main_mode_shift(cli: &Cli) -> Result<AbShift, Failure> {
    let p = params(cli)?;
    if !p.main_mode() {
        return Err(Failure::Domain(format!(
            "{} needs the reciprocal regime alpha = 1/beta with beta > 3; got alpha = {}, beta = {}",
            command_name(&cli.command),
            p.alpha(),
            p.beta()
        )));
    }
    Ok(AbShift::new(p))
}

fn text(stdout: String) -> Result<Emitted, Failure> {
    Ok(Emitted {
        stdout,
        failed: false,
    })
}

fn json(cli: &Cli, body: impl Serialize) -> Result<Emitted, Failure> {
    text(document(cli, command_name(&cli.command), body))
}

/// Sends `content` to the `--csv` target; returns what goes to standard output.
fn csv(target: &str, content: String) -> Result<Emitted, Failure> {
    if target == "-" {
        return text(content);
    }
    std::fs::write(target, content)?;
    text(String::new())
}

fn no_csv(cli: &Cli) -> Result<(), Failure> {
    match cli.global.csv {
        Some(_) => Err(Failure::Usage(format!(
            "--csv is not supported by {}",
            command_name(&cli.command)
        ))),
        None => Ok(()),
    }
}

fn load_potential(path: Option<&Path>, lambda: u8) -> Result<Potential, Failure> {
    match path {
        None => Ok(Potential::zero(lambda)),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Domain(format!("reading {}: {e}", p.display())))?;
            Ok(Potential::from_json(&text, lambda)?)
        }
    }
}

pub fn dispatch(cli: &Cli) -> Result<Emitted, Failure> {
    match &cli.command {
        Command::Expand(args) => {
            no_csv(cli)?;
            expand(cli, args)
        }
        Command::Lang(cmd) => lang(cli, cmd),
        Command::Graph(args) => {
            no_csv(cli)?;
            graph(cli, args)
        }
        Command::Surgery(cmd) => {
            no_csv(cli)?;
            surgery_cmd(cli, cmd)
        }
        Command::Criterion(args) => criterion_cmd(cli, args.horizon),
        Command::Pressure(args) => {
            no_csv(cli)?;
            pressure(cli, args)
        }
        Command::Gibbs(args) => {
            no_csv(cli)?;
            gibbs(cli, args)
        }
    }
}

#[derive(Serialize)]
struct Expansion {
    which: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<abshift::Rational>,
    digits: Vec<abshift::Digit>,
    orbit: Vec<abshift::Rational>,
}

fn expand(cli: &Cli, args: &crate::ExpandArgs) -> Result<Emitted, Failure> {
    let p = params(cli)?;
    let n = args.digits;
    let out = match args.which {
        Which::Zero => {
            let s = AbShift::new(p);
            Expansion {
                which: "zero",
                x: None,
                digits: s.expansion_of_zero(n).into_digits(),
                orbit: s.zero_orbit(n),
            }
        }
        Which::One => {
            let s = AbShift::new(p);
            Expansion {
                which: "one",
                x: None,
                digits: s.expansion_of_one(n).into_digits(),
                orbit: s.one_orbit(n),
            }
        }
        Which::Point => {
            let x = args
                .x
                .clone()
                .ok_or_else(|| Failure::Usage("--which point needs --x".into()))?;
            let (digits, orbit) = expansion::itinerary_with_orbit(&p, &x, n)?;
            Expansion {
                which: "point",
                x: Some(x),
                digits: digits.into_digits(),
                orbit,
            }
        }
    };
    if cli.global.json {
        json(cli, out)
    } else {
        text(format!("{}\n", Word::new(out.digits)))
    }
}

#[derive(Serialize)]
struct Admissibility {
    word: Word,
    admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<abshift::SuffixDecomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex: Option<abshift::Vertex>,
}

#[derive(Serialize)]
struct Count {
    length: usize,
    count: String,
}

fn lang(cli: &Cli, cmd: &LangCommand) -> Result<Emitted, Failure> {
    let shift = AbShift::new(params(cli)?);
    match cmd {
        LangCommand::Check { word } => {
            no_csv(cli)?;
            let admissible = language::is_admissible(&shift, word)?;
            let (decomposition, vertex) = if admissible {
                (
                    Some(language::suffix_decompose(&shift, word)?),
                    Some(language::follower_vertex(&shift, word)?),
                )
            } else {
                (None, None)
            };
            let out = Admissibility {
                word: word.clone(),
                admissible,
                decomposition,
                vertex,
            };
            if cli.global.json {
                json(cli, out)
            } else {
                text(format!("{admissible}\n"))
            }
        }
        LangCommand::Enum { length } => {
            if let Some(target) = &cli.global.csv {
                let mut s = String::from("word\n");
                language::for_each_word(&shift, *length, |w, _| {
                    let _ = writeln!(s, "\"{}\"", Word::from(w));
                });
                return csv(target, s);
            }
            if cli.global.json {
                let words: Vec<Word> = language::enumerate(&shift, *length).collect();
                return json(cli, serde_json::json!({ "length": length, "words": words }));
            }
            let mut s = String::new();
            language::for_each_word(&shift, *length, |w, _| {
                let _ = writeln!(s, "{}", Word::from(w));
            });
            text(s)
        }
        LangCommand::Count { length } => {
            let count = language::count(&shift, *length).to_string();
            if let Some(target) = &cli.global.csv {
                return csv(target, format!("length,count\n{length},{count}\n"));
            }
            if cli.global.json {
                json(
                    cli,
                    Count {
                        length: *length,
                        count,
                    },
                )
            } else {
                text(format!("{count}\n"))
            }
        }
    }
}

fn graph(cli: &Cli, args: &crate::GraphArgs) -> Result<Emitted, Failure> {
    let shift = AbShift::new(params(cli)?);
    let g = LabeledGraph::build(&shift, args.depth);
    let mut stdout = String::new();
    if let Some(target) = &args.dot {
        let dot = g.export_dot();
        if target == "-" {
            stdout.push_str(&dot);
        } else {
            std::fs::write(target, dot)?;
        }
    }
    if args.stats || args.dot.is_none() {
        let stats = g.stats();
        if cli.global.json {
            stdout.push_str(&document(cli, "graph", stats));
        } else {
            let _ = writeln!(stdout, "depth {}", stats.depth);
            let _ = writeln!(stdout, "vertices {}", stats.vertex_count);
            let _ = writeln!(stdout, "edges {}", stats.edge_count);
            for (deg, n) in &stats.out_degree_histogram {
                let _ = writeln!(stdout, "out-degree {deg}: {n}");
            }
        }
    }
    text(stdout)
}

#[derive(Serialize)]
struct SurgeryResult {
    word: Word,
    class: abshift::SuffixTag,
    result: Word,
    hamming: usize,
    vertex_after: abshift::Vertex,
}

fn surgery_cmd(cli: &Cli, cmd: &SurgeryCommand) -> Result<Emitted, Failure> {
    let shift = main_mode_shift(cli)?;
    let rewrite = |word: &Word, f: fn(&AbShift, &[u8]) -> abshift::Result<Word>| {
        let result = f(&shift, word)?;
        let out = SurgeryResult {
            word: word.clone(),
            class: surgery::class_of(&shift, word)?,
            hamming: abshift::word::hamming(word, &result),
            vertex_after: language::follower_vertex(&shift, &result)?,
            result,
        };
        if cli.global.json {
            json(cli, out)
        } else {
            text(format!("{}\n", out.result))
        }
    };
    match cmd {
        SurgeryCommand::Hat { word } => rewrite(word, surgery::hat),
        SurgeryCommand::Tilde { word } => rewrite(word, surgery::tilde),
        SurgeryCommand::G { word } => {
            let g = surgery::g_letter(&shift, word)?;
            if cli.global.json {
                json(cli, serde_json::json!({ "word": word, "g": g }))
            } else {
                text(format!("{g}\n"))
            }
        }
        SurgeryCommand::Check {
            max_n,
            random_count,
            random_length,
        } => {
            let mut config = SuiteConfig::new(*max_n);
            if *random_count > 0 {
                config.random = Some(RandomSample {
                    seed: cli.global.seed,
                    count: *random_count,
                    length: *random_length,
                });
            }
            let report = surgery::check_suite(&shift, &config)?;
            let failed = !report.all_passed;
            for c in report.checks.iter().filter(|c| !c.passed) {
                eprintln!(
                    "FAILED {}: {} of {} cases, e.g. {}",
                    c.name,
                    c.failures,
                    c.cases,
                    c.counterexample.as_deref().unwrap_or("-")
                );
            }
            Ok(Emitted {
                stdout: document(cli, "surgery check", report),
                failed,
            })
        }
    }
}

fn criterion_cmd(cli: &Cli, horizon: usize) -> Result<Emitted, Failure> {
    let shift = AbShift::new(params(cli)?);
    let series = criterion::zbar_series(&shift, horizon)?;
    if let Some(target) = &cli.global.csv {
        let mut s = String::from("n,zbar,ratio_num,ratio_den\n");
        for (i, r) in series.ratios.iter().enumerate() {
            let _ = writeln!(
                s,
                "{},{},{},{}",
                i + 1,
                series.zbar[i],
                r.numer(),
                r.denom()
            );
        }
        let mut out = csv(target, s)?;
        if target != "-" && cli.global.json {
            out.stdout = document(cli, "criterion", &series);
        }
        return Ok(out);
    }
    if cli.global.json {
        return json(cli, series);
    }
    let mut s = String::new();
    for (i, r) in series.ratios.iter().enumerate() {
        let _ = writeln!(s, "{} {} {} {}", i + 1, series.z[i], series.zbar[i], r);
    }
    text(s)
}

#[derive(Serialize)]
struct PressureOutput {
    potential_range: usize,
    total_oscillation: f64,
    centred: thermo::PressureReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    full: Option<thermo::PressureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    restricted: Option<thermo::PressureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    restricted_deviation: Option<thermo::RestrictedDeviation>,
}

fn pressure(cli: &Cli, args: &crate::PressureArgs) -> Result<Emitted, Failure> {
    let shift = main_mode_shift(cli)?;
    let phi = load_potential(args.phi.as_deref(), shift.lambda())?;
    let centred = thermo::pressure_estimate(&shift, &phi, args.n)?;
    let full = args
        .m
        .map(|m| thermo::full_pressure_estimate(&shift, &phi, m))
        .transpose()?;
    let (restricted, restricted_deviation) = match (args.restricted, args.m) {
        (true, Some(m)) => {
            let r = thermo::restricted_pressure_estimate(&shift, &phi, m)?;
            let dev = args
                .epsilon
                .map(|eps| thermo::restricted_deviation(&shift, &phi, m, eps, centred.value))
                .transpose()?;
            (Some(r), dev)
        }
        _ => (None, None),
    };
    json(
        cli,
        PressureOutput {
            potential_range: phi.range(),
            total_oscillation: phi.total_oscillation(),
            centred,
            full,
            restricted,
            restricted_deviation,
        },
    )
}

fn gibbs(cli: &Cli, args: &crate::GibbsArgs) -> Result<Emitted, Failure> {
    let shift = main_mode_shift(cli)?;
    let phi = load_potential(args.phi.as_deref(), shift.lambda())?;
    let report = thermo::gibbs_diagnostic(&shift, &phi, &args.word, args.n, args.epsilon)?;
    match args.min_m {
        Some(min) if report.m >= min => {}
        Some(min) => eprintln!(
            "warning: |word| = {} is below --min-m {min}; the bounds are only claimed for long words",
            report.m
        ),
        None => eprintln!(
            "warning: no --min-m given; the bounds are only claimed beyond an unspecified length"
        ),
    }
    eprintln!(
        "note: pressure_used is the finite-n estimate at n = {}",
        args.n
    );
    let curve = if args.curve {
        Some(thermo::cylinder_curve(
            &shift,
            &phi,
            &args.word,
            1..=args.n,
        )?)
    } else {
        None
    };
    json(cli, GibbsOutput { report, curve })
}

#[derive(Serialize)]
struct GibbsOutput {
    #[serde(flatten)]
    report: thermo::GibbsReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    curve: Option<Vec<thermo::CurvePoint>>,
}
