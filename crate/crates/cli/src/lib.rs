//! Command handlers for the `hookgame` binary. Everything writes to a
//! caller-supplied sink so the commands can be driven from tests.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hookgame::closedforms::{start_table, verify, PredictionReport, TheoremId, VerifyRange};
use hookgame::diagrams::{canonical_board, unimodal_number, YoungDiagram};
use hookgame::grundy::{grundy_with, GrundyMemo, ImpartialGame};
use hookgame::mhrg::{moves_diagonal, moves_semantic, options, reachable};
use hookgame::{Engine, MhrgGame, MhrgPosition, MoveRecord, Outcome};
use serde_json::json;

/// Exit code for a verification that ran and failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for bad arguments or inputs.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hookgame", version, about = "Grundy values and play for hook removing games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Move generator used for every expansion.
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Diagonal)]
    pub engine: EngineArg,

    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Grundy value of a position (the full rectangle by default).
    Grundy {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        /// Row lengths such as "5,4,3"; "-" is the empty diagram.
        #[arg(long)]
        diagram: Option<String>,
    },
    /// Grid of starting values for every board up to the given size.
    Table {
        #[arg(default_value_t = 9)]
        max_m: usize,
        #[arg(default_value_t = 9)]
        max_n: usize,
        #[arg(long = "max-m")]
        max_m_flag: Option<usize>,
        #[arg(long = "max-n")]
        max_n_flag: Option<usize>,
    },
    /// Every position reachable from the full rectangle.
    Reachable {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
    },
    /// Moves available from a position, with the hooks they remove.
    Options {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        diagram: Option<String>,
    },
    /// Check a closed form or isomorphism against exhaustive search.
    Verify {
        theorem: String,
        #[arg(short, long)]
        m: Option<usize>,
        #[arg(short, long)]
        n: Option<usize>,
    },
    /// Play against the engine; you move first.
    Play {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        diagram: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Diagonal,
    Semantic,
    CrossCheck,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Diagonal => Engine::Diagonal,
            EngineArg::Semantic => Engine::Semantic,
            EngineArg::CrossCheck => Engine::CrossCheck,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

/// A command failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { code: EXIT_USAGE, error: e.into() }
    }
}

/// Resolves `-m`/`-n` and an optional literal into a position, transposing
/// boards with more rows than columns.
fn position(m: usize, n: usize, diagram: Option<&str>) -> anyhow::Result<MhrgPosition> {
    let y: YoungDiagram = match diagram {
        Some(s) => s.parse().with_context(|| format!("cannot parse diagram {s:?}"))?,
        None => YoungDiagram::new(&vec![n; m])?,
    };
    if y.height() > m || y.row_len(1) > n {
        bail!("diagram {y} does not fit in the {m}x{n} board");
    }
    let (board, y) = canonical_board(m, n, &y)?;
    Ok(MhrgPosition::new(board, y)?)
}

fn render_diagram(pos: &MhrgPosition) -> String {
    if pos.diagram.is_empty() {
        return "(empty)\n".into();
    }
    let mut s = String::new();
    for i in 1..=pos.diagram.height() {
        let row: Vec<String> = (1..=pos.diagram.row_len(i))
            .map(|j| unimodal_number(&pos.board, i, j).map_or_else(|_| "?".into(), |l| l.to_string()))
            .collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn describe(rec: &MoveRecord) -> String {
    let mut s = format!("hook at {:?} with labels {}", rec.first.corner, rec.first.labels);
    if let Some(h) = &rec.second {
        s.push_str(&format!(
            "; the hook at {:?} has the same labels and is removed as well",
            h.corner
        ));
    }
    s
}

fn pretty_report(report: &PredictionReport) -> String {
    let mut s = format!(
        "{} {} over {} ({} checks)\n",
        if report.passed() { "PASS" } else { "FAIL" },
        report.theorem,
        report.range,
        report.checked
    );
    for m in report.mismatches.iter().take(20) {
        s.push_str(&format!("  {}: expected {}, found {}\n", m.position, m.predicted, m.computed));
    }
    if report.mismatches.len() > 20 {
        s.push_str(&format!("  ... {} more\n", report.mismatches.len() - 20));
    }
    s
}

/// Runs a parsed command, writing its output to `out`. Interactive input is
/// read from `input`.
pub fn run<R: BufRead, W: Write>(cli: &Cli, input: R, out: &mut W) -> Result<(), Failure> {
    let engine: Engine = cli.engine.into();
    match &cli.command {
        Command::Grundy { m, n, diagram } => {
            let pos = position(*m, *n, diagram.as_deref())?;
            let game = MhrgGame::with_engine(pos.board, engine);
            let reach = reachable(pos.board, engine)?;
            let mut memo = GrundyMemo::new(&game);
            let g = grundy_with(&game, &pos, &mut memo)?;
            let in_t = reach.contains(&pos);
            if !in_t {
                eprintln!("warning: {pos} is not reachable from the full {} rectangle", pos.board);
            }
            match cli.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "board": [pos.board.m(), pos.board.n()],
                        "diagram": pos.diagram.to_string(),
                        "grundy": g,
                        "outcome": Outcome::from_grundy(g).to_string(),
                        "explored": memo.len(),
                        "reachable": in_t,
                    })
                )?,
                Format::Csv => writeln!(out, "m,n,diagram,grundy\n{},{},{},{g}", pos.board.m(), pos.board.n(), pos.diagram)?,
                Format::Pretty => {
                    writeln!(out, "{g}")?;
                    writeln!(out, "positions explored: {}", memo.len())?;
                }
            }
        }
        Command::Table { max_m, max_n, max_m_flag, max_n_flag } => {
            let (mm, mn) = (max_m_flag.unwrap_or(*max_m), max_n_flag.unwrap_or(*max_n));
            if mm == 0 || mn == 0 || mm > 9 || mn > 9 {
                bail_usage(format!("table size {mm}x{mn} must lie within 1..=9 on each side"))?;
            }
            let grid = if engine == Engine::Diagonal {
                start_table(mm, mn)?
            } else {
                let mut grid = vec![vec![0; mn]; mm];
                for (i, row) in grid.iter_mut().enumerate() {
                    for (j, cell) in row.iter_mut().enumerate() {
                        let pos = position(i + 1, j + 1, None)?;
                        let game = MhrgGame::with_engine(pos.board, engine);
                        *cell = grundy_with(&game, &pos, &mut GrundyMemo::new(&game))?;
                    }
                }
                grid
            };
            match cli.format {
                Format::Json => writeln!(out, "{}", json!({ "max_m": mm, "max_n": mn, "values": grid }))?,
                Format::Csv => {
                    for row in &grid {
                        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                        writeln!(out, "{}", cells.join(","))?;
                    }
                }
                Format::Pretty => {
                    let header: Vec<String> = (1..=mn).map(|n| format!("{n:>3}")).collect();
                    writeln!(out, "m\\n{}", header.join(""))?;
                    for (i, row) in grid.iter().enumerate() {
                        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
                        writeln!(out, "{:>3}{}", i + 1, cells.join(""))?;
                    }
                }
            }
        }
        Command::Reachable { m, n } => {
            let board = position(*m, *n, Some("-"))?.board;
            let reach = reachable(board, engine)?;
            match cli.format {
                Format::Json => {
                    let list: Vec<String> = reach.iter().map(|p| p.to_string()).collect();
                    writeln!(out, "{}", json!({ "board": [board.m(), board.n()], "count": list.len(), "positions": list }))?
                }
                Format::Csv => {
                    writeln!(out, "diagram")?;
                    for p in &reach {
                        writeln!(out, "\"{p}\"")?;
                    }
                }
                Format::Pretty => {
                    for p in &reach {
                        writeln!(out, "{p}")?;
                    }
                    writeln!(out, "{} of {} diagrams are reachable", reach.len(), board.all_diagrams().len())?;
                }
            }
        }
        Command::Options { m, n, diagram } => {
            let pos = position(*m, *n, diagram.as_deref())?;
            let recs = options(&pos, engine)?;
            match cli.format {
                Format::Json => {
                    let list: Vec<_> = recs
                        .iter()
                        .map(|r| {
                            json!({
                                "result": r.result.to_string(),
                                "first": { "corner": [r.first.corner.0, r.first.corner.1], "interval": [r.first.l, r.first.r], "labels": r.first.labels.to_sorted_vec() },
                                "second": r.second.as_ref().map(|h| json!({ "corner": [h.corner.0, h.corner.1], "interval": [h.l, h.r] })),
                            })
                        })
                        .collect();
                    writeln!(out, "{}", json!({ "position": pos.to_string(), "options": list }))?
                }
                Format::Csv => {
                    writeln!(out, "result,corner_i,corner_j,l,r,forced")?;
                    for r in &recs {
                        writeln!(
                            out,
                            "\"{}\",{},{},{},{},{}",
                            r.result, r.first.corner.0, r.first.corner.1, r.first.l, r.first.r, r.second.is_some()
                        )?;
                    }
                }
                Format::Pretty => {
                    for r in &recs {
                        writeln!(out, "{} -> {}", describe(r), r.result)?;
                    }
                    writeln!(out, "{} options", recs.len())?;
                }
            }
        }
        Command::Verify { theorem, m, n } => {
            let id: TheoremId = theorem.parse()?;
            let report = verify(id, VerifyRange { m: *m, n: *n })?;
            match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
                Format::Csv => {
                    writeln!(out, "theorem,range,checked,mismatches,status")?;
                    writeln!(
                        out,
                        "{},\"{}\",{},{},{}",
                        report.theorem,
                        report.range,
                        report.checked,
                        report.mismatches.len(),
                        if report.passed() { "PASS" } else { "FAIL" }
                    )?;
                }
                Format::Pretty => write!(out, "{}", pretty_report(&report))?,
            }
            if !report.passed() {
                return Err(Failure { code: EXIT_FAIL, error: anyhow::anyhow!("{} failed", report.theorem) });
            }
        }
        Command::Play { m, n, diagram } => {
            let pos = position(*m, *n, diagram.as_deref())?;
            play(pos, engine, input, out)?;
        }
    }
    Ok(())
}

fn bail_usage(msg: String) -> Result<(), Failure> {
    Err(Failure { code: EXIT_USAGE, error: anyhow::anyhow!(msg) })
}

fn moves_for(pos: &MhrgPosition, engine: Engine) -> hookgame::Result<Vec<MoveRecord>> {
    match engine {
        Engine::Semantic => moves_semantic(pos),
        _ => moves_diagonal(pos),
    }
}

/// Terminal game loop. The human moves first by typing `i j`; the engine
/// answers with a move to a 0-valued option when one exists.
pub fn play<R: BufRead, W: Write>(
    start: MhrgPosition,
    engine: Engine,
    input: R,
    out: &mut W,
) -> anyhow::Result<()> {
    let game = MhrgGame::with_engine(start.board, engine);
    let mut memo = GrundyMemo::new(&game);
    let mut pos = start;
    let mut lines = input.lines();
    writeln!(out, "board {}; enter a box as \"row column\", or q to quit", pos.board)?;
    while !pos.diagram.is_empty() {
        write!(out, "{}", render_diagram(&pos))?;
        write!(out, "your move> ")?;
        out.flush()?;
        let Some(line) = lines.next() else {
            writeln!(out)?;
            return Ok(());
        };
        let line = line?;
        let line = line.trim();
        if line == "q" {
            return Ok(());
        }
        let coords: Vec<usize> = match line.split_whitespace().map(str::parse).collect() {
            Ok(v) => v,
            Err(_) => {
                writeln!(out, "expected two numbers, got {line:?}")?;
                continue;
            }
        };
        let [i, j] = coords[..] else {
            writeln!(out, "expected two numbers, got {line:?}")?;
            continue;
        };
        let moves = moves_for(&pos, engine)?;
        let Some(rec) = moves.into_iter().find(|r| r.first.corner == (i, j)) else {
            writeln!(out, "({i},{j}) is not a box of the current diagram")?;
            continue;
        };
        writeln!(out, "you remove the {}", describe(&rec))?;
        pos = rec.result;
        writeln!(out, "position: {pos}")?;
        if pos.diagram.is_empty() {
            writeln!(out, "you emptied the board: you win")?;
            return Ok(());
        }

        let moves = moves_for(&pos, engine)?;
        let mut best: Option<&MoveRecord> = None;
        for rec in &moves {
            if grundy_with(&game, &rec.result, &mut memo)? == 0 {
                best = Some(rec);
                break;
            }
        }
        let choice = match best {
            Some(rec) => rec.clone(),
            None => {
                let first: BTreeSet<MhrgPosition> = game.options(&pos)?.into_iter().collect();
                let target = first.into_iter().next().expect("non-empty diagram has options");
                moves.into_iter().find(|r| r.result == target).expect("option comes from a move")
            }
        };
        writeln!(out, "engine removes the {}", describe(&choice))?;
        pos = choice.result;
        writeln!(out, "position: {pos}")?;
        if pos.diagram.is_empty() {
            writeln!(out, "the engine emptied the board: the engine wins")?;
        }
    }
    Ok(())
}
