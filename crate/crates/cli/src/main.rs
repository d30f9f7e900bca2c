use std::fs;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tgg_core::{
    all_distances, classify, delta_play, diffusion_play, find_all_nash, generate, is_nash,
    nash_diffusion_growing_cycle, nash_diffusion_superset_forest, nash_diffusion_superset_path,
    nash_voronoi_growing_path, voronoi_play, Family, GameKind, StrategyProfile, TemporalGraph,
    UnderlyingKind,
};
use tgg_cli::{format, report, verify};

#[derive(Parser)]
#[command(name = "tgg", about = "Competitive diffusion and Voronoi games on temporal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Instance file in .tg format.
    #[arg(long = "in", value_name = "FILE")]
    input: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum SimGame {
    Diffusion,
    Voronoi,
    Ddiff,
    Lddiff,
}

#[derive(Clone, Copy, ValueEnum)]
enum NashGame {
    Diffusion,
    Voronoi,
}

#[derive(Clone, Copy, ValueEnum)]
enum NashMethod {
    /// Exhaustive scan over all profiles.
    Brute,
    /// Structural algorithm matching the graph class, else brute force.
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Report the graph classes an instance belongs to.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Temporal distances from one source vertex.
    Distances {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: usize,
    },
    /// Play one game and report coloring and payoffs.
    Simulate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        game: SimGame,
        /// Comma-separated positions, e.g. 2,3.
        #[arg(long)]
        positions: String,
        /// Include per-step coloring snapshots (diffusion only).
        #[arg(long)]
        trace: bool,
    },
    /// Find all equilibria or check one profile.
    Nash {
        #[command(subcommand)]
        action: NashAction,
    },
    /// Emit a bundled instance family in .tg format.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        tau: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-derive the bundled existence/non-existence results.
    #[command(name = "verify-theorems")]
    VerifyTheorems {
        /// File with one check id per line; default: full suite.
        #[arg(long)]
        suite: Option<String>,
    },
}

#[derive(Subcommand)]
enum NashAction {
    Find {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        game: NashGame,
        #[arg(long, value_enum, default_value = "brute")]
        method: NashMethod,
    },
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        game: NashGame,
        #[arg(long)]
        positions: String,
    },
}

fn load(input: &Input) -> Result<TemporalGraph> {
    let text = fs::read_to_string(&input.input)
        .with_context(|| format!("cannot read {}", input.input))?;
    format::parse_tg(&text)
}

fn parse_positions(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| anyhow!("bad position `{p}`")))
        .collect()
}

fn auto_nash(game: NashGame, g: &TemporalGraph) -> Result<(String, Vec<(usize, usize)>)> {
    let labels = classify(g);
    let report = match game {
        NashGame::Diffusion => {
            if labels.is_growing && labels.underlying_kind == UnderlyingKind::Cycle {
                Some(nash_diffusion_growing_cycle(g)?)
            } else if labels.is_superset && labels.underlying_kind == UnderlyingKind::Path {
                nash_diffusion_superset_path(g).ok()
            } else if labels.is_superset && labels.underlying_kind.is_linear_forest() {
                nash_diffusion_superset_forest(g).ok()
            } else {
                None
            }
        }
        NashGame::Voronoi => {
            if labels.is_growing && labels.underlying_kind == UnderlyingKind::Path {
                nash_voronoi_growing_path(g).ok()
            } else {
                None
            }
        }
    };
    Ok(match report {
        Some(r) => {
            let p = r.profile.positions();
            (r.method.name().to_string(), vec![(p[0], p[1])])
        }
        None => {
            let kind = nash_kind(game);
            ("brute_force".to_string(), find_all_nash(kind, g))
        }
    })
}

fn nash_kind(game: NashGame) -> GameKind {
    match game {
        NashGame::Diffusion => GameKind::Diffusion,
        NashGame::Voronoi => GameKind::Voronoi,
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Classify { input } => {
            let g = load(&input)?;
            let labels = classify(&g);
            println!("{}", report::classify_report(&g, &labels));
        }
        Command::Distances { input, from } => {
            let g = load(&input)?;
            let row = all_distances(&g, from)?;
            println!("{}", report::distances_report(&g, &row));
        }
        Command::Simulate { input, game, positions, trace } => {
            let g = load(&input)?;
            let pos = parse_positions(&positions)?;
            let rep = match game {
                SimGame::Diffusion => {
                    diffusion_play(&g, &StrategyProfile::new(pos.clone())?, trace)?
                }
                SimGame::Voronoi => voronoi_play(&g, &StrategyProfile::new(pos.clone())?)?,
                SimGame::Ddiff | SimGame::Lddiff => {
                    let [p1, p2] = pos.as_slice() else {
                        bail!("difference games take exactly two positions");
                    };
                    delta_play(&g, *p1, *p2, matches!(game, SimGame::Lddiff))?
                }
            };
            println!("{}", report::game_report(&g, &pos, &rep));
        }
        Command::Nash { action } => match action {
            NashAction::Find { input, game, method } => {
                let g = load(&input)?;
                let (method_name, equilibria) = match method {
                    NashMethod::Brute => {
                        ("brute_force".to_string(), find_all_nash(nash_kind(game), &g))
                    }
                    NashMethod::Auto => auto_nash(game, &g)?,
                };
                let game_name = nash_kind(game).name();
                println!("{}", report::nash_find_report(game_name, &method_name, &equilibria));
            }
            NashAction::Check { input, game, positions } => {
                let g = load(&input)?;
                let pos = parse_positions(&positions)?;
                let profile = StrategyProfile::new(pos)?;
                let rep = is_nash(nash_kind(game), &g, &profile)?;
                println!("{}", report::nash_check_report(nash_kind(game).name(), &rep));
            }
        },
        Command::Generate { family, n, tau, seed } => {
            let fam = Family::from_parts(&family, n, tau, seed)?;
            let g = generate(&fam)?;
            print!("{}", format::serialize_tg(&g));
        }
        Command::VerifyTheorems { suite } => {
            let ids: Option<Vec<String>> = match suite {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("cannot read {path}"))?;
                    Some(
                        text.lines()
                            .map(str::trim)
                            .filter(|l| !l.is_empty() && !l.starts_with('#'))
                            .map(String::from)
                            .collect(),
                    )
                }
                None => None,
            };
            let checks = verify::verify_theorems(ids.as_deref());
            let all_pass = checks.iter().all(|c| c.pass);
            let doc = serde_json::json!({
                "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                "pass": all_pass,
            });
            println!("{doc}");
            for c in &checks {
                eprintln!("{} {}", if c.pass { "pass" } else { "FAIL" }, c.id);
            }
            if !all_pass {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
