//! `gamedecomp`: inspect, classify and decompose finite games, and check
//! weighted inner products for compatibility with a decomposition scheme.
//!
//! Exit codes: 0 success (or compatible), 1 usage/parse/construction error,
//! 2 incompatible.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use gamedecomp::json::{
    classification_to_json, decomposition_to_json, game_from_str, game_to_json,
    preset_weight, rational_to_value, theorem_report_to_json, weight_from_str,
};
use gamedecomp::random::{random_game, random_member, rng_from_seed};
use gamedecomp::rational::format_rational;
use gamedecomp::{
    build_scheme, classify, decompose, inner, theorem_check, Game, GameClass, GameSpace,
    InnerProduct, SchemeKind,
};

#[derive(Parser)]
#[command(name = "gamedecomp", version, about = "Exact decompositions of finite games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the space signature, payoff vector and class memberships.
    Info {
        /// Game JSON file, or "-" for stdin.
        game: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check every class definition and report a potential function if any.
    Classify { game: PathBuf },
    /// Split a game along a scheme.
    Decompose {
        game: PathBuf,
        #[arg(long)]
        scheme: String,
        /// standard | candogan | file:Q.json
        #[arg(long, default_value = "standard")]
        inner: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Decide compatibility of a weight with a scheme and test the
    /// equivalence with a common orthogonal decomposition.
    Check {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        inner: String,
        /// Strategy counts, e.g. 2,2,2.
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit a seeded random game, optionally inside a class subspace.
    Random {
        #[arg(long)]
        space: String,
        #[arg(long)]
        seed: u64,
        #[arg(long = "in-class")]
        in_class: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Info { game, json } => cmd_info(&game, json),
        Command::Classify { game } => cmd_classify(&game),
        Command::Decompose {
            game,
            scheme,
            inner,
            output,
        } => cmd_decompose(&game, &scheme, &inner, output.as_deref()),
        Command::Check {
            scheme,
            inner,
            space,
            trials,
            seed,
        } => cmd_check(&scheme, &inner, &space, trials, seed),
        Command::Random {
            space,
            seed,
            in_class,
        } => cmd_random(&space, seed, in_class.as_deref()),
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_game(path: &Path) -> Result<Game> {
    let text = read_input(path)?;
    game_from_str(&text).with_context(|| format!("parsing game {}", path.display()))
}

fn parse_space(text: &str) -> Result<GameSpace> {
    let ks = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("invalid --space {text:?}; expected e.g. 2,2,2"))?;
    Ok(GameSpace::new(ks)?)
}

fn parse_inner(space: &GameSpace, spec: &str) -> Result<InnerProduct> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        return weight_from_str(space, &text, spec).with_context(|| format!("weight file {path}"));
    }
    Ok(preset_weight(space, spec)?)
}

fn print_json(v: &Value) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{}", serde_json::to_string_pretty(v)?) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn cmd_info(path: &Path, as_json: bool) -> Result<u8> {
    let g = load_game(path)?;
    let c = classify(&g);
    let space = g.space();
    let flags: Vec<(GameClass, Option<bool>)> = GameClass::ALL
        .into_iter()
        .map(|class| {
            let v = if class == GameClass::Symmetric && c.symmetric_skipped.is_some() {
                None
            } else {
                Some(c.has(class))
            };
            (class, v)
        })
        .collect();
    if as_json {
        let classes: serde_json::Map<String, Value> = flags
            .iter()
            .map(|(class, v)| (class.name().to_string(), json!(v)))
            .collect();
        print_json(&json!({
            "space": space.to_string(),
            "players": space.n(),
            "strategies": space.ks(),
            "profiles": space.k(),
            "dimension": space.dim(),
            "payoff_vector": g.payoff_vector().iter().map(rational_to_value).collect::<Vec<_>>(),
            "classes": classes,
        }))?;
    } else {
        println!(
            "space: G{space}  (players {}, profiles {}, dimension {})",
            space.n(),
            space.k(),
            space.dim()
        );
        println!("V_G = {g}");
        for (class, v) in flags {
            match v {
                Some(b) => println!("{:<16} {b}", format!("{class}:")),
                None => println!("{:<16} skipped", format!("{class}:")),
            }
        }
    }
    Ok(0)
}

fn cmd_classify(path: &Path) -> Result<u8> {
    let g = load_game(path)?;
    print_json(&classification_to_json(&classify(&g)))?;
    Ok(0)
}

fn cmd_decompose(path: &Path, scheme: &str, inner_spec: &str, output: Option<&Path>) -> Result<u8> {
    let g = load_game(path)?;
    let kind: SchemeKind = scheme.parse()?;
    let ip = parse_inner(g.space(), inner_spec)?;
    let scheme = build_scheme(kind, g.space(), &ip)
        .with_context(|| format!("building the {kind} scheme on {}", g.space()))?;
    let d = decompose(&scheme, &ip, &g)?;
    let doc = serde_json::to_string_pretty(&decomposition_to_json(&d))?;

    let mut summary = Vec::new();
    for (label, c) in d.labels.iter().zip(&d.components) {
        let norm = inner(&ip, c, c)?;
        summary.push(format!("{label}: <v,v> = {}", format_rational(&norm)));
    }
    summary.push(format!("orthogonal under {}: {}", d.inner, d.orthogonal));

    match output {
        Some(out) => {
            std::fs::write(out, doc + "\n").with_context(|| format!("writing {}", out.display()))?;
            for line in summary {
                println!("{line}");
            }
        }
        None => {
            println!("{doc}");
            for line in summary {
                eprintln!("{line}");
            }
        }
    }
    Ok(0)
}

fn cmd_check(scheme: &str, inner_spec: &str, space: &str, trials: usize, seed: u64) -> Result<u8> {
    let space = parse_space(space)?;
    let kind: SchemeKind = scheme.parse()?;
    let ip = parse_inner(&space, inner_spec)?;
    let report = theorem_check(kind, &space, &ip, trials, seed)
        .with_context(|| format!("checking the {kind} scheme on {space}"))?;
    let mut doc = theorem_report_to_json(&report);
    doc["weight"] = Value::String(inner_spec.to_string());
    print_json(&doc)?;
    Ok(if report.compat.compatible { 0 } else { 2 })
}

fn cmd_random(space: &str, seed: u64, in_class: Option<&str>) -> Result<u8> {
    let space = parse_space(space)?;
    let mut rng = rng_from_seed(seed);
    let g = match in_class {
        None => random_game(&space, &mut rng),
        Some(name) => {
            let class: GameClass = name.parse()?;
            let sub = class.subspace(&space)?;
            if sub.dimension() == 0 {
                bail!("class {class} is trivial on {space}");
            }
            random_member(&sub, &mut rng)
        }
    };
    print_json(&game_to_json(&g))?;
    Ok(0)
}
