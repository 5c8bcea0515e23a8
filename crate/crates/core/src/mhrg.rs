//! Move generation for the modified hook removing game.
//!
//! Two engines produce the same option sets. The semantic engine follows the
//! rules box by box and compares label multisets. The diagonal engine works
//! on diagonal sequences, where a hook is an interval decrement and the
//! forced second removal is the decrement on the mirrored interval.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagrams::{
    diagonal_of, diagram_of, hook_at, label_of_diagonal, remove_hook, BoardParams, DiagonalSeq,
    HookRecord, LabelMultiset, YoungDiagram,
};
use crate::error::{Error, Result};
use crate::grundy::{closure, ImpartialGame};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MhrgPosition {
    pub board: BoardParams,
    pub diagram: YoungDiagram,
}

impl MhrgPosition {
    pub fn new(board: BoardParams, diagram: YoungDiagram) -> Result<Self> {
        board.check(&diagram)?;
        Ok(MhrgPosition { board, diagram })
    }

    /// The full rectangle.
    pub fn start(board: BoardParams) -> Self {
        MhrgPosition { diagram: board.full(), board }
    }

    pub fn diagonal(&self) -> DiagonalSeq {
        diagonal_of(&self.board, &self.diagram).expect("positions fit their board")
    }
}

impl fmt::Display for MhrgPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.diagram.fmt(f)
    }
}

/// One move: the chosen hook, the forced second hook if any, and the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub first: HookRecord,
    pub second: Option<HookRecord>,
    pub result: MhrgPosition,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Engine {
    /// Interval decrements on diagonal sequences.
    #[default]
    Diagonal,
    /// Literal hook removal with label multiset comparison.
    Semantic,
    /// Runs both and fails if they disagree.
    CrossCheck,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diagonal" => Ok(Engine::Diagonal),
            "semantic" => Ok(Engine::Semantic),
            "cross-check" => Ok(Engine::CrossCheck),
            other => Err(Error::Parse(format!("unknown engine {other:?}"))),
        }
    }
}

/// The interval `(n - m - r, n - m - l)` mirrored through the board centre.
pub fn mirror_interval(board: &BoardParams, l: i64, r: i64) -> (i64, i64) {
    let shift = board.n() as i64 - board.m() as i64;
    (shift - r, shift - l)
}

fn equal_multiset_boxes(
    board: &BoardParams,
    y: &YoungDiagram,
    labels: &LabelMultiset,
) -> Result<Vec<HookRecord>> {
    let mut found = Vec::new();
    for (i, j) in y.boxes() {
        let h = hook_at(board, y, i, j)?;
        if &h.labels == labels {
            found.push(h);
        }
    }
    Ok(found)
}

fn keep_first_per_result(records: Vec<MoveRecord>) -> Vec<MoveRecord> {
    let mut by_result: BTreeMap<MhrgPosition, MoveRecord> = BTreeMap::new();
    for rec in records {
        by_result.entry(rec.result.clone()).or_insert(rec);
    }
    by_result.into_values().collect()
}

/// Options by direct application of the rules, deduplicated by result.
pub fn options_semantic(pos: &MhrgPosition) -> Result<Vec<MoveRecord>> {
    Ok(keep_first_per_result(moves_semantic(pos)?))
}

/// One record per box of the position, in row-major order. Any breach of
/// the expected structure (two different forced results, a possible third
/// removal, an unexpected second interval) is reported as an internal error.
pub fn moves_semantic(pos: &MhrgPosition) -> Result<Vec<MoveRecord>> {
    let board = &pos.board;
    board.check(&pos.diagram)?;
    let mut records = Vec::new();
    for (i, j) in pos.diagram.boxes() {
        let first = hook_at(board, &pos.diagram, i, j)?;
        let after_first = remove_hook(&pos.diagram, i, j)?;
        let candidates = equal_multiset_boxes(board, &after_first, &first.labels)?;
        if candidates.is_empty() {
            records.push(MoveRecord {
                first,
                second: None,
                result: MhrgPosition { board: *board, diagram: after_first },
            });
            continue;
        }
        let expected = mirror_interval(board, first.l, first.r);
        let mut result: Option<YoungDiagram> = None;
        for cand in &candidates {
            if (cand.l, cand.r) != expected {
                return Err(Error::internal(format!(
                    "second hook at {:?} has interval [{},{}], expected [{},{}]",
                    cand.corner, cand.l, cand.r, expected.0, expected.1
                )));
            }
            let after = remove_hook(&after_first, cand.corner.0, cand.corner.1)?;
            match &result {
                Some(prev) if prev != &after => {
                    return Err(Error::internal(format!(
                        "forced removals from {after_first} disagree: {prev} vs {after}"
                    )))
                }
                _ => result = Some(after),
            }
        }
        let after_second = result.expect("at least one candidate");
        if !equal_multiset_boxes(board, &after_second, &first.labels)?.is_empty() {
            return Err(Error::internal(format!(
                "a third equal-multiset hook remains in {after_second}"
            )));
        }
        let second = candidates.into_iter().min_by_key(|h| h.corner);
        records.push(MoveRecord {
            first,
            second,
            result: MhrgPosition { board: *board, diagram: after_second },
        });
    }
    Ok(records)
}

/// The hook of `seq` occupying the accepted interval `[l, r]`.
fn hook_from_interval(seq: &DiagonalSeq, l: i64, r: i64) -> HookRecord {
    let board = seq.board();
    let row = seq.last_box(r).expect("accepted interval has boxes").0;
    let col = seq.last_box(l).expect("accepted interval has boxes").1;
    HookRecord {
        corner: (row, col),
        l,
        r,
        labels: LabelMultiset::from_labels(board, (l..=r).map(|k| label_of_diagonal(board, k))),
    }
}

/// A move seen on diagonal sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Successor {
    /// Interval of the chosen hook.
    pub first: (i64, i64),
    /// Interval of the forced second hook, if one was removed.
    pub second: Option<(i64, i64)>,
    pub result: DiagonalSeq,
}

/// Resulting diagonal sequences of every move, with the intervals used.
/// This is the hot path of the Grundy solver.
pub fn diagonal_successors(seq: &DiagonalSeq) -> Vec<Successor> {
    let board = *seq.board();
    let (m, n) = (board.m() as i64, board.n() as i64);
    let mut out = Vec::new();
    for l in (-m + 1)..n {
        if seq.get(l) == 0 {
            continue;
        }
        for r in l..n {
            if seq.get(r) == 0 {
                // entries fall away from the centre, so no longer interval works
                if r >= 0 {
                    break;
                }
                continue;
            }
            if seq.probe(l, r).is_err() {
                continue;
            }
            let first = seq.decremented(l, r);
            let (ml, mr) = mirror_interval(&board, l, r);
            // a self-mirrored hook never forces a second removal
            let forced = (ml, mr) != (l, r) && first.probe(ml, mr).is_ok();
            out.push(if forced {
                Successor { first: (l, r), second: Some((ml, mr)), result: first.decremented(ml, mr) }
            } else {
                Successor { first: (l, r), second: None, result: first }
            });
        }
    }
    out
}

/// Options computed on the diagonal sequence, deduplicated by result.
pub fn options_diagonal(pos: &MhrgPosition) -> Result<Vec<MoveRecord>> {
    Ok(keep_first_per_result(moves_diagonal(pos)?))
}

/// One record per accepted interval, ordered by `(l, r)`.
pub fn moves_diagonal(pos: &MhrgPosition) -> Result<Vec<MoveRecord>> {
    pos.board.check(&pos.diagram)?;
    let seq = pos.diagonal();
    let records = diagonal_successors(&seq)
        .into_iter()
        .map(|succ| {
            let (l, r) = succ.first;
            let first = hook_from_interval(&seq, l, r);
            let second = succ.second.map(|(ml, mr)| hook_from_interval(&seq.decremented(l, r), ml, mr));
            MoveRecord {
                first,
                second,
                result: MhrgPosition { board: pos.board, diagram: diagram_of(&succ.result) },
            }
        })
        .collect();
    Ok(records)
}

pub fn options(pos: &MhrgPosition, engine: Engine) -> Result<Vec<MoveRecord>> {
    match engine {
        Engine::Diagonal => options_diagonal(pos),
        Engine::Semantic => options_semantic(pos),
        Engine::CrossCheck => {
            let a = options_diagonal(pos)?;
            let b = options_semantic(pos)?;
            let ra: Vec<_> = a.iter().map(|r| &r.result).collect();
            let rb: Vec<_> = b.iter().map(|r| &r.result).collect();
            if ra != rb {
                return Err(Error::internal(format!("engines disagree on options of {pos}")));
            }
            Ok(a)
        }
    }
}

/// The game `MHRG(m, n)` on a fixed board.
#[derive(Clone, Copy, Debug)]
pub struct MhrgGame {
    pub board: BoardParams,
    pub engine: Engine,
}

impl MhrgGame {
    pub fn new(board: BoardParams) -> Self {
        MhrgGame { board, engine: Engine::Diagonal }
    }

    pub fn with_engine(board: BoardParams, engine: Engine) -> Self {
        MhrgGame { board, engine }
    }

    pub fn start(&self) -> MhrgPosition {
        MhrgPosition::start(self.board)
    }
}

impl ImpartialGame for MhrgGame {
    type Position = MhrgPosition;

    fn options(&self, pos: &MhrgPosition) -> Result<Vec<MhrgPosition>> {
        if pos.board != self.board {
            return Err(Error::domain(format!(
                "position on {} used with game on {}",
                pos.board, self.board
            )));
        }
        Ok(options(pos, self.engine)?.into_iter().map(|r| r.result).collect())
    }

    fn identity(&self) -> String {
        format!("mhrg:{}", self.board)
    }
}

/// The same game played directly on diagonal sequences. Positions are
/// cheaper to hash and expand than diagrams, which matters for tables.
#[derive(Clone, Copy, Debug)]
pub struct DiagonalGame {
    pub board: BoardParams,
}

impl ImpartialGame for DiagonalGame {
    type Position = DiagonalSeq;

    fn options(&self, pos: &DiagonalSeq) -> Result<Vec<DiagonalSeq>> {
        let set: BTreeSet<DiagonalSeq> =
            diagonal_successors(pos).into_iter().map(|s| s.result).collect();
        Ok(set.into_iter().collect())
    }

    fn identity(&self) -> String {
        format!("mhrg:{}", self.board)
    }
}

/// `T(Y_{m,n})`: every position reachable from the full rectangle.
pub fn reachable(board: BoardParams, engine: Engine) -> Result<BTreeSet<MhrgPosition>> {
    let game = MhrgGame::with_engine(board, engine);
    closure(&game, &game.start(), usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(m: usize, n: usize, s: &str) -> MhrgPosition {
        MhrgPosition::new(BoardParams::new(m, n).unwrap(), s.parse().unwrap()).unwrap()
    }

    fn results(recs: &[MoveRecord]) -> Vec<String> {
        recs.iter().map(|r| r.result.to_string()).collect()
    }

    #[test]
    fn two_by_two_options() {
        let p = pos(2, 2, "2,2");
        let mut sem = results(&options_semantic(&p).unwrap());
        sem.sort();
        assert_eq!(sem, vec!["-", "1", "2,1"]);
        let mut diag = results(&options_diagonal(&p).unwrap());
        diag.sort();
        assert_eq!(diag, sem);
    }

    #[test]
    fn first_move_on_three_by_five_has_no_second_removal() {
        let p = MhrgPosition::start(BoardParams::new(3, 5).unwrap());
        let recs = options_semantic(&p).unwrap();
        let rec = recs.iter().find(|r| r.first.corner == (2, 4)).unwrap();
        assert_eq!(rec.result.to_string(), "5,4,3");
        assert!(rec.second.is_none());
    }

    #[test]
    fn forced_second_removal_on_three_by_five() {
        let p = pos(3, 5, "5,4,3");
        let recs = moves_semantic(&p).unwrap();
        let rec = recs.iter().find(|r| r.first.corner == (2, 1)).unwrap();
        assert_eq!(rec.first.labels.to_sorted_vec(), vec![1, 2, 3, 3, 4]);
        assert_eq!((rec.first.l, rec.first.r), (-2, 2));
        let second = rec.second.as_ref().unwrap();
        assert_eq!(second.corner, (1, 2));
        assert_eq!((second.l, second.r), (0, 4));
        assert_eq!(rec.result.to_string(), "1,1");
        // the hook at (1,3) has the same labels and lands on the same diagram
        let other = recs.iter().find(|r| r.first.corner == (1, 3)).unwrap();
        assert_eq!((other.first.l, other.first.r), (0, 4));
        assert_eq!(other.second.as_ref().unwrap().corner, (1, 1));
        assert_eq!(other.result.to_string(), "1,1");
        let diag = moves_diagonal(&p).unwrap();
        let rec = diag.iter().find(|r| (r.first.l, r.first.r) == (-2, 2)).unwrap();
        assert_eq!(rec.first.corner, (2, 1));
        assert_eq!(rec.second.as_ref().map(|h| (h.corner, h.l, h.r)), Some(((1, 2), 0, 4)));
        assert_eq!(rec.result.to_string(), "1,1");
        // a player who picks (1,2) in (5,2) directly also reaches (1,1)
        let direct = moves_semantic(&pos(3, 5, "5,2")).unwrap();
        let rec = direct.iter().find(|r| r.first.corner == (1, 2)).unwrap();
        assert!(rec.second.is_none());
        assert_eq!(rec.result.to_string(), "1,1");
    }

    #[test]
    fn diagonal_worked_instance() {
        let board = BoardParams::new(3, 5).unwrap();
        let seq = DiagonalSeq::new(board, vec![0, 1, 2, 3, 2, 2, 1, 1, 0]).unwrap();
        let succ = diagonal_successors(&seq);
        let hit = succ.iter().find(|s| s.first == (0, 4)).unwrap();
        assert_eq!(hit.second, Some((-2, 2)));
        assert_eq!(hit.result.values(), &[0, 0, 1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn self_mirrored_and_forced_on_two_by_two() {
        let board = BoardParams::new(2, 2).unwrap();
        let seq = DiagonalSeq::new(board, vec![0, 1, 2, 1, 0]).unwrap();
        let succ = diagonal_successors(&seq);
        let whole = succ.iter().find(|s| s.first == (-1, 1)).unwrap();
        assert_eq!(whole.second, None);
        assert_eq!(whole.result.values(), &[0, 0, 1, 0, 0]);
        let part = succ.iter().find(|s| s.first == (0, 1)).unwrap();
        assert_eq!(part.second, Some((-1, 0)));
        assert_eq!(part.result.values(), &[0; 5]);
    }

    #[test]
    fn empty_position_has_no_options() {
        let p = pos(3, 4, "-");
        assert!(options_semantic(&p).unwrap().is_empty());
        assert!(options_diagonal(&p).unwrap().is_empty());
    }

    #[test]
    fn reachable_sets() {
        let b22 = BoardParams::new(2, 2).unwrap();
        let got: Vec<String> = reachable(b22, Engine::Diagonal).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["-", "1", "2,1", "2,2"]);
        let b14 = BoardParams::new(1, 4).unwrap();
        let got: Vec<String> = reachable(b14, Engine::Semantic).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["-", "1", "3", "4"]);
        let b13 = BoardParams::new(1, 3).unwrap();
        assert_eq!(reachable(b13, Engine::CrossCheck).unwrap().len(), 4);
    }

    #[test]
    fn engine_names() {
        assert_eq!("cross-check".parse::<Engine>().unwrap(), Engine::CrossCheck);
        assert!("fast".parse::<Engine>().is_err());
    }

    #[test]
    fn mirror() {
        let board = BoardParams::new(3, 5).unwrap();
        assert_eq!(mirror_interval(&board, 0, 4), (-2, 2));
    }
}
