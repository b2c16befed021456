//! The `pigame` command line.
//!
//! Exit codes: 0 success, 2 invalid input, 3 refusal at a cap or budget.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pigame_core::geometry::{
    enumerate_core_vertices, generate_extremes_from_owen, is_boundary_point, is_core_member,
    DEFAULT_VERTEX_CAP, DEFAULT_WALK_BUDGET,
};
use pigame_core::model::DEFAULT_PLAYER_CAP;
use pigame_core::rules::{
    check_axioms, coincidence_report, nucleolus, omega_point, qpq, shapley, solomonic,
};
use pigame_core::{
    builtin, parse_rational, ratio, Allocation, CostGame, Error, GameTable, Rational,
};
use serde::Serialize;

use crate::instance_file::{load_instance, InstanceFile};
use crate::report::{self, Envelope, InstanceSummary, QpqEntry, SCHEMA_VERSION};
use crate::selftest::{self, Status};

#[derive(Debug, Parser)]
#[command(
    name = "pigame",
    version,
    about = "Exact analysis of production-inventory cost games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Instance JSON file.
    #[arg(long, value_name = "PATH")]
    instance: Option<PathBuf>,
    /// Bundled instance: example1, example3, example4, example1-printed,
    /// example4-printed or expfamily:N (2 <= N <= 8).
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Debug, Args)]
struct GameArgs {
    #[command(flatten)]
    source: Source,
    /// Largest player count accepted for the coalition table.
    #[arg(long, default_value_t = DEFAULT_PLAYER_CAP)]
    player_cap: usize,
    /// Acknowledge a --player-cap above the default.
    #[arg(long)]
    allow_large_games: bool,
}

#[derive(Debug, Args)]
struct WalkArgs {
    /// Extreme-function evaluations the walk may spend.
    #[arg(long, default_value_t = DEFAULT_WALK_BUDGET)]
    budget: usize,
    /// Acknowledge a --budget above the default.
    #[arg(long)]
    allow_large_budget: bool,
}

#[derive(Debug, Args)]
struct VertexArgs {
    /// Largest player count for brute-force vertex enumeration.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    vertex_cap: usize,
    /// Acknowledge a --vertex-cap above the default.
    #[arg(long)]
    allow_large_vertex_cap: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Characteristic function of every nonempty coalition.
    Table {
        #[command(flatten)]
        game: GameArgs,
        /// Include each coalition's dual prices.
        #[arg(long)]
        dual_prices: bool,
    },
    /// The Owen point.
    Owen {
        #[command(flatten)]
        game: GameArgs,
    },
    /// The Omega point with its per-period decomposition.
    Omega {
        #[command(flatten)]
        game: GameArgs,
    },
    /// The λ-agreement between the Owen and Omega points.
    Qpq {
        #[command(flatten)]
        game: GameArgs,
        /// Weight of the Omega point, in [0, 1].
        #[arg(long, value_name = "P/Q")]
        lambda: String,
    },
    /// The Shapley value.
    Shapley {
        #[command(flatten)]
        game: GameArgs,
    },
    /// The Nucleolus.
    Nucleolus {
        #[command(flatten)]
        game: GameArgs,
    },
    /// Exact core membership of an allocation.
    CoreCheck {
        #[command(flatten)]
        game: GameArgs,
        /// Comma-separated shares, one per player.
        #[arg(long, value_name = "A1,A2,...")]
        allocation: String,
    },
    /// Points reached from the Owen point by composite extreme functions.
    Extremes {
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        walk: WalkArgs,
    },
    /// Brute-force core vertex enumeration.
    Vertices {
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        vertex: VertexArgs,
    },
    /// Concavity, PS-game and coincidence-condition checks.
    Predicates {
        #[command(flatten)]
        game: GameArgs,
    },
    /// Axiom checks for an allocation (the Omega point by default).
    Axioms {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, value_name = "A1,A2,...")]
        allocation: Option<String>,
    },
    /// Everything above in one report.
    Analyze {
        #[command(flatten)]
        game: GameArgs,
        /// QPQ weights to report (repeatable); defaults to 0, 1/4, 1/2, 3/4, 1.
        #[arg(long, value_name = "P/Q")]
        lambda: Vec<String>,
        #[arg(long)]
        dual_prices: bool,
        #[command(flatten)]
        walk: WalkArgs,
        #[command(flatten)]
        vertex: VertexArgs,
    },
    /// Print the instance in file form.
    Instance {
        #[command(flatten)]
        game: GameArgs,
    },
    /// Run the acceptance checks.
    Selftest,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooManyPlayers { .. } => Failure::Refused(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

struct Loaded {
    game: GameTable,
    summary: InstanceSummary,
}

fn load(args: &GameArgs) -> Result<Loaded, Failure> {
    if args.player_cap > DEFAULT_PLAYER_CAP && !args.allow_large_games {
        return Err(Failure::Refused(format!(
            "--player-cap {} exceeds the default {DEFAULT_PLAYER_CAP}; pass --allow-large-games to confirm",
            args.player_cap
        )));
    }
    let (instance, name) = match (&args.source.instance, &args.source.builtin) {
        (Some(path), _) => {
            let loaded = load_instance(path).map_err(|e| Failure::Invalid(e.to_string()))?;
            for w in &loaded.warnings {
                eprintln!("warning: {w}");
            }
            (loaded.instance, loaded.name)
        }
        (None, Some(name)) => {
            let inst = builtin::by_name(name)
                .ok_or_else(|| Failure::Invalid(format!("unknown builtin instance {name:?}")))?;
            (inst, Some(name.clone()))
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let summary = InstanceSummary {
        name,
        players: instance.players(),
        periods: instance.periods(),
    };
    let game = GameTable::with_player_cap(instance, args.player_cap)?;
    Ok(Loaded { game, summary })
}

fn parse_lambda(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::Invalid(format!("--lambda: {e}")))
}

fn parse_allocation(text: &str, players: usize) -> Result<Allocation, Failure> {
    let shares = text
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Invalid(format!("--allocation: {e}")))?;
    if shares.len() != players {
        return Err(Failure::Invalid(format!(
            "--allocation: expected {players} shares, found {}",
            shares.len()
        )));
    }
    Ok(Allocation::new(shares))
}

fn check_budget(walk: &WalkArgs) -> Result<(), Failure> {
    if walk.budget > DEFAULT_WALK_BUDGET && !walk.allow_large_budget {
        return Err(Failure::Refused(format!(
            "--budget {} exceeds the default {DEFAULT_WALK_BUDGET}; pass --allow-large-budget to confirm",
            walk.budget
        )));
    }
    Ok(())
}

fn check_vertex_cap(v: &VertexArgs) -> Result<(), Failure> {
    if v.vertex_cap > DEFAULT_VERTEX_CAP && !v.allow_large_vertex_cap {
        return Err(Failure::Refused(format!(
            "--vertex-cap {} exceeds the default {DEFAULT_VERTEX_CAP}; pass --allow-large-vertex-cap to confirm",
            v.vertex_cap
        )));
    }
    Ok(())
}

/// A report plus the exit status it should end with.
struct Output {
    json: String,
    refused: Option<String>,
}

fn envelope<T: Serialize>(command: &'static str, loaded: Loaded, result: T) -> Output {
    let doc = Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        instance: loaded.summary,
        result,
    };
    Output {
        json: serde_json::to_string_pretty(&doc).expect("reports serialize"),
        refused: None,
    }
}

fn run_command(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Table { game, dual_prices } => {
            let l = load(&game)?;
            let t = report::table(&l.game, dual_prices);
            envelope("table", l, t)
        }
        Command::Owen { game } => {
            let l = load(&game)?;
            let o = report::allocation(&l.game.owen_point());
            envelope("owen", l, o)
        }
        Command::Omega { game } => {
            let l = load(&game)?;
            let om = report::OmegaJson::from(&omega_point(&l.game));
            envelope("omega", l, om)
        }
        Command::Qpq { game, lambda } => {
            let l = load(&game)?;
            let lambda = parse_lambda(&lambda)?;
            let a = report::allocation(&qpq(&l.game, &lambda)?);
            envelope("qpq", l, a)
        }
        Command::Shapley { game } => {
            let l = load(&game)?;
            let a = report::allocation(&shapley(&l.game));
            envelope("shapley", l, a)
        }
        Command::Nucleolus { game } => {
            let l = load(&game)?;
            let a = report::allocation(&nucleolus(&l.game));
            envelope("nucleolus", l, a)
        }
        Command::CoreCheck { game, allocation } => {
            let l = load(&game)?;
            let x = parse_allocation(&allocation, l.game.players())?;
            let check = is_core_member(&l.game, &x)?;
            let boundary = if check.member {
                Some(is_boundary_point(&l.game, &x)?)
            } else {
                None
            };
            let r = report::core_check(&l.game, &x, &check, boundary);
            envelope("core-check", l, r)
        }
        Command::Extremes { game, walk } => {
            check_budget(&walk)?;
            let l = load(&game)?;
            let w = generate_extremes_from_owen(&l.game, walk.budget);
            let r = report::extremes(&w, walk.budget, None);
            let mut out = envelope("extremes", l, r);
            if w.truncated {
                out.refused = Some(format!(
                    "walk budget of {} evaluations exhausted; the point set is partial",
                    walk.budget
                ));
            }
            out
        }
        Command::Vertices { game, vertex } => {
            check_vertex_cap(&vertex)?;
            let l = load(&game)?;
            let v = enumerate_core_vertices(&l.game, vertex.vertex_cap)?;
            let r = report::vertices(&v, vertex.vertex_cap);
            envelope("vertices", l, r)
        }
        Command::Predicates { game } => {
            let l = load(&game)?;
            let r = report::predicates(&coincidence_report(&l.game));
            envelope("predicates", l, r)
        }
        Command::Axioms { game, allocation } => {
            let l = load(&game)?;
            let x = match allocation {
                Some(text) => parse_allocation(&text, l.game.players())?,
                None => omega_point(&l.game).omega,
            };
            let r = report::axioms(&x, &check_axioms(&l.game, &x)?);
            envelope("axioms", l, r)
        }
        Command::Analyze {
            game,
            lambda,
            dual_prices,
            walk,
            vertex,
        } => {
            check_budget(&walk)?;
            check_vertex_cap(&vertex)?;
            let lambdas = if lambda.is_empty() {
                vec![
                    ratio(0, 1),
                    ratio(1, 4),
                    ratio(1, 2),
                    ratio(3, 4),
                    ratio(1, 1),
                ]
            } else {
                lambda
                    .iter()
                    .map(|s| parse_lambda(s))
                    .collect::<Result<_, _>>()?
            };
            let l = load(&game)?;
            analyze(l, &lambdas, dual_prices, &walk, &vertex)?
        }
        Command::Instance { game } => {
            let l = load(&game)?;
            let file = InstanceFile::from_instance(l.game.instance(), l.summary.name.clone());
            Output {
                json: serde_json::to_string_pretty(&file).expect("instances serialize"),
                refused: None,
            }
        }
        Command::Selftest => unreachable!("handled by the caller"),
    })
}

fn analyze(
    l: Loaded,
    lambdas: &[Rational],
    dual_prices: bool,
    walk: &WalkArgs,
    vertex: &VertexArgs,
) -> Result<Output, Failure> {
    let g = &l.game;
    let om = omega_point(g);
    let qpq_entries = lambdas
        .iter()
        .map(|lam| {
            Ok(QpqEntry {
                lambda: lam.to_string(),
                allocation: report::allocation(&qpq(g, lam)?),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let vertex_set = if g.players() <= vertex.vertex_cap {
        Some(enumerate_core_vertices(g, vertex.vertex_cap)?)
    } else {
        None
    };
    let w = generate_extremes_from_owen(g, walk.budget);
    let coincidence = coincidence_report(g);
    let owen = g.owen_point();
    let r = report::AnalysisReport {
        table: report::table(g, dual_prices),
        owen: report::allocation(&owen),
        omega: (&om).into(),
        qpq: qpq_entries,
        solomonic: report::allocation(&solomonic(g)),
        shapley: report::allocation(&coincidence.shapley),
        nucleolus: report::allocation(&coincidence.nucleolus),
        structure: report::structure(g),
        extremes: report::extremes(&w, walk.budget, vertex_set.as_ref()),
        vertices: match &vertex_set {
            Some(v) => report::vertices(v, vertex.vertex_cap),
            None => report::VerticesJson::Skipped {
                cap: vertex.vertex_cap,
                reason: format!(
                    "{} players exceeds the vertex enumeration cap of {}",
                    g.players(),
                    vertex.vertex_cap
                ),
            },
        },
        predicates: report::predicates(&coincidence),
        axioms: report::AxiomPair {
            omega: report::axioms(&om.omega, &check_axioms(g, &om.omega)?),
            owen: report::axioms(&owen, &check_axioms(g, &owen)?),
        },
    };
    let mut out = envelope("analyze", l, r);
    if w.truncated {
        out.refused = Some(format!(
            "walk budget of {} evaluations exhausted; the extreme set is partial",
            walk.budget
        ));
    }
    Ok(out)
}

fn selftest_main() -> ExitCode {
    let results = selftest::run_all();
    let mut stdout = std::io::stdout().lock();
    for c in &results {
        let _ = writeln!(stdout, "{}", c.render());
    }
    let failed = results
        .iter()
        .filter(|c| c.status() == Status::Fail)
        .count();
    let _ = writeln!(stdout, "{} criteria, {} failed", results.len(), failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Command::Selftest = cli.command {
        return selftest_main();
    }
    match run_command(cli.command) {
        Ok(out) => {
            println!("{}", out.json);
            match out.refused {
                None => ExitCode::SUCCESS,
                Some(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(3)
                }
            }
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
