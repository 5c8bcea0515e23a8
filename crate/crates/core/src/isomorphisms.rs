//! Maps between game positions and an exhaustive isomorphism checker.
//!
//! `E` widens a board by one column by duplicating the centre diagonal.
//! `A` and `B` translate between near-square boards `n x (n+1)` and the
//! shifted game on the staircase `S_n`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::diagrams::{diagram_of, BoardParams, DiagonalSeq};
use crate::error::{Error, Result};
use crate::grundy::{grundy_with, GrundyMemo, ImpartialGame};
use crate::mhrg::{reachable, Engine, MhrgGame, MhrgPosition};
use crate::shifted::{
    all_shifted, shifted_diagonal_of, shifted_diagram_of, HrgGame, ShiftedDiagonalSeq, ShiftedDiagram,
};

/// `a_i = a_{n-m-i}` for every index.
pub fn is_symmetric(seq: &DiagonalSeq) -> bool {
    let b = seq.board();
    let shift = b.n() as i64 - b.m() as i64;
    (-(b.m() as i64)..=b.n() as i64).all(|i| seq.get(i) == seq.get(shift - i))
}

/// `E`: on a board with `m + n` even, duplicates the entry at `c = (n - m) / 2`.
pub fn e_map(seq: &DiagonalSeq) -> Result<DiagonalSeq> {
    let b = seq.board();
    if !(b.m() + b.n()).is_multiple_of(2) {
        return Err(Error::domain(format!("the widening map needs m + n even, got board {b}")));
    }
    let target = BoardParams::new(b.m(), b.n() + 1)?;
    let c_slot = b.m() + (b.n() - b.m()) / 2;
    let mut values = seq.values().to_vec();
    values.insert(c_slot, values[c_slot]);
    DiagonalSeq::new(target, values)
}

pub fn e_map_position(pos: &MhrgPosition) -> Result<MhrgPosition> {
    let seq = e_map(&pos.diagonal())?;
    Ok(MhrgPosition { board: *seq.board(), diagram: diagram_of(&seq) })
}

/// `A`: reads `[a_1, ..., a_{n+1}]` off a symmetric position on `n x (n+1)`.
pub fn a_map(pos: &MhrgPosition) -> Result<ShiftedDiagram> {
    let b = pos.board;
    if b.n() != b.m() + 1 {
        return Err(Error::domain(format!("the map A needs an n x (n+1) board, got {b}")));
    }
    let seq = pos.diagonal();
    if !is_symmetric(&seq) {
        return Err(Error::domain(format!("position {pos} has an asymmetric diagonal sequence")));
    }
    let values = (1..=b.n() as i64).map(|k| seq.get(k)).collect();
    Ok(shifted_diagram_of(&ShiftedDiagonalSeq::new(values)?))
}

/// `B`: mirrors `sd(S) = [b_0, ..., b_n]` into `(b_n, ..., b_0, b_0, ..., b_n)`.
pub fn b_map(s: &ShiftedDiagram, n: usize) -> Result<MhrgPosition> {
    let sd = shifted_diagonal_of(s, n)?;
    let board = BoardParams::new(n, n + 1)?;
    let mut values: Vec<u8> = sd.values().iter().rev().copied().collect();
    values.extend_from_slice(sd.values());
    let seq = DiagonalSeq::new(board, values)?;
    Ok(MhrgPosition { board, diagram: diagram_of(&seq) })
}

/// Forward function of a [`GameMap`].
pub type MapFn<'a, S, T> = Box<dyn Fn(&S) -> Result<T> + 'a>;

/// A named function between the position sets of two games.
pub struct GameMap<'a, S, T> {
    pub name: String,
    pub source: String,
    pub target: String,
    pub forward: MapFn<'a, S, T>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub map: String,
    pub source: String,
    pub target: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn render<P: Display>(set: &BTreeSet<P>) -> String {
    let parts: Vec<String> = set.iter().map(|p| format!("({p})")).collect();
    format!("{{{}}}", parts.join(" "))
}

/// Checks that `map` is a bijection from `src_set` onto `tgt_set` that
/// commutes with taking options and preserves Grundy values. Every failure
/// is recorded with a witness; only errors from the games themselves abort.
pub fn verify_isomorphism<G, H>(
    map: &GameMap<'_, G::Position, H::Position>,
    src_game: &G,
    tgt_game: &H,
    src_set: &BTreeSet<G::Position>,
    tgt_set: &BTreeSet<H::Position>,
) -> Result<IsoReport>
where
    G: ImpartialGame,
    H: ImpartialGame,
    G::Position: Display,
    H::Position: Display,
{
    let mut violations = Vec::new();
    let mut push = |kind: &str, witness: String| violations.push(Violation { kind: kind.into(), witness });

    let mut image: HashMap<G::Position, H::Position> = HashMap::new();
    let mut preimage: HashMap<H::Position, G::Position> = HashMap::new();
    for pos in src_set {
        match (map.forward)(pos) {
            Ok(t) => {
                if let Some(prev) = preimage.insert(t.clone(), pos.clone()) {
                    push("not-injective", format!("({prev}) and ({pos}) both map to ({t})"));
                }
                if !tgt_set.contains(&t) {
                    push("outside-target", format!("({pos}) maps to ({t})"));
                }
                image.insert(pos.clone(), t);
            }
            Err(e) => push("map-error", format!("({pos}): {e}")),
        }
    }
    for t in tgt_set {
        if !preimage.contains_key(t) {
            push("not-surjective", format!("({t}) has no preimage"));
        }
    }

    let mut src_memo = GrundyMemo::new(src_game);
    let mut tgt_memo = GrundyMemo::new(tgt_game);
    for pos in src_set {
        let Some(t) = image.get(pos) else { continue };
        let mut mapped = BTreeSet::new();
        let mut unmapped = false;
        for o in src_game.options(pos)? {
            match image.get(&o) {
                Some(x) => {
                    mapped.insert(x.clone());
                }
                None => unmapped = true,
            }
        }
        let target_opts: BTreeSet<H::Position> = tgt_game.options(t)?.into_iter().collect();
        if unmapped || mapped != target_opts {
            push(
                "options-not-preserved",
                format!("f(O({pos})) = {} but O({t}) = {}", render(&mapped), render(&target_opts)),
            );
        }
        let gs = grundy_with(src_game, pos, &mut src_memo)?;
        let gt = grundy_with(tgt_game, t, &mut tgt_memo)?;
        if gs != gt {
            push("grundy-not-transported", format!("G({pos}) = {gs} but G({t}) = {gt}"));
        }
    }
    Ok(IsoReport {
        map: map.name.clone(),
        source: map.source.clone(),
        target: map.target.clone(),
        checked: src_set.len(),
        violations,
    })
}

/// `E` from `T(Y_{m,n})` onto `T(Y_{m,n+1})`.
pub fn verify_e(m: usize, n: usize) -> Result<IsoReport> {
    let src = BoardParams::new(m, n)?;
    let tgt = BoardParams::new(m, n + 1)?;
    if !(m + n).is_multiple_of(2) {
        return Err(Error::domain(format!("the widening map needs m + n even, got board {src}")));
    }
    let map = GameMap {
        name: "E".into(),
        source: format!("MHRG({m},{n})"),
        target: format!("MHRG({m},{})", n + 1),
        forward: Box::new(e_map_position),
    };
    verify_isomorphism(
        &map,
        &MhrgGame::new(src),
        &MhrgGame::new(tgt),
        &reachable(src, Engine::Diagonal)?,
        &reachable(tgt, Engine::Diagonal)?,
    )
}

/// `A` from `T(Y_{n,n+1})` onto `F(S_n)`.
pub fn verify_a(n: usize) -> Result<IsoReport> {
    let board = BoardParams::new(n, n + 1)?;
    let map = GameMap {
        name: "A".into(),
        source: format!("MHRG({n},{})", n + 1),
        target: format!("HRG(S_{n})"),
        forward: Box::new(a_map),
    };
    verify_isomorphism(
        &map,
        &MhrgGame::new(board),
        &HrgGame::new(n)?,
        &reachable(board, Engine::Diagonal)?,
        &all_shifted(n)?.into_iter().collect(),
    )
}

/// `B` from `F(S_n)` onto `T(Y_{n,n+1})`.
pub fn verify_b(n: usize) -> Result<IsoReport> {
    let board = BoardParams::new(n, n + 1)?;
    let map = GameMap {
        name: "B".into(),
        source: format!("HRG(S_{n})"),
        target: format!("MHRG({n},{})", n + 1),
        forward: Box::new(move |s: &ShiftedDiagram| b_map(s, n)),
    };
    verify_isomorphism(
        &map,
        &HrgGame::new(n)?,
        &MhrgGame::new(board),
        &all_shifted(n)?.into_iter().collect(),
        &reachable(board, Engine::Diagonal)?,
    )
}
