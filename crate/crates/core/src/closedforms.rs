//! Closed-form predictions of Grundy values and reachable sets, the golden
//! table of starting values, and harnesses that check each prediction
//! against exhaustive search.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{diagonal_of, BoardParams, YoungDiagram};
use crate::error::{Error, Result};
use crate::grundy::{closure, grundy_with, GrundyMemo};
use crate::isomorphisms::{a_map, b_map, is_symmetric, verify_a, verify_b, verify_e, IsoReport};
use crate::mhrg::{reachable, DiagonalGame, Engine, MhrgGame, MhrgPosition};
use crate::shifted::{all_shifted, HrgGame, ShiftedDiagram};

/// Starting values `G(Y_{m,n})` for `1 <= m, n <= 9`, row `m - 1`, column `n - 1`.
pub const TABLE1: [[u32; 9]; 9] = [
    [1, 1, 3, 3, 5, 5, 7, 7, 9],
    [1, 3, 3, 1, 1, 1, 1, 1, 1],
    [3, 3, 0, 0, 0, 0, 3, 3, 10],
    [3, 1, 0, 4, 4, 2, 2, 5, 5],
    [5, 1, 0, 4, 1, 1, 14, 14, 18],
    [5, 1, 0, 2, 1, 7, 7, 0, 0],
    [7, 1, 3, 2, 14, 7, 0, 0, 10],
    [7, 1, 3, 5, 14, 0, 0, 8, 8],
    [9, 1, 10, 5, 18, 0, 10, 8, 1],
];

pub fn table1_golden() -> [[u32; 9]; 9] {
    TABLE1
}

/// Bounds for exhaustive verification.
pub const MAX_CELLS: usize = 81;
pub const MAX_TWO_ROW_TABLE: usize = 24;
pub const MAX_STAIRCASE_CHECK: usize = 8;

/// On `1 x n`: whether `(l)` is reachable, and its value when it is.
pub fn predict_1n(n: usize, l: usize) -> (bool, Option<u32>) {
    if n % 2 == 1 {
        return (true, Some(l as u32));
    }
    let half = n / 2;
    match l.cmp(&half) {
        std::cmp::Ordering::Less => (true, Some(l as u32)),
        std::cmp::Ordering::Equal => (false, None),
        std::cmp::Ordering::Greater => (true, Some(l as u32 - 1)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwoRowClass {
    G0,
    G1,
    G2,
    Other,
    Unreachable,
}

impl TwoRowClass {
    pub fn value(self) -> Option<u32> {
        match self {
            TwoRowClass::G0 => Some(0),
            TwoRowClass::G1 => Some(1),
            TwoRowClass::G2 => Some(2),
            _ => None,
        }
    }
}

/// `(base + c1 + step * i, base + c2 + step * i)` for `i >= 0`; a zero step
/// is a single point.
#[derive(Clone, Copy)]
struct Family(i64, i64, i64);

impl Family {
    fn contains(self, base: i64, l1: i64, l2: i64) -> bool {
        let Family(c1, c2, step) = self;
        let (d1, d2) = (l1 - base - c1, l2 - base - c2);
        if step == 0 {
            d1 == 0 && d2 == 0
        } else {
            d1 == d2 && d1 >= 0 && d1 % step == 0
        }
    }
}

const BELOW: [&[Family]; 3] = [
    &[Family(0, 0, 2)],
    &[Family(1, 0, 4), Family(2, 1, 4)],
    &[Family(2, 0, 4), Family(1, 1, 4)],
];

/// Families above the anti-diagonal, indexed by `n' mod 4`, offsets
/// relative to `n'`.
const ABOVE: [[&[Family]; 3]; 4] = [
    [
        &[Family(1, 0, 4), Family(2, 1, 4)],
        &[Family(2, 0, 0), Family(1, 1, 0), Family(4, 4, 2)],
        &[Family(2, 2, 0), Family(3, 0, 0), Family(4, 1, 0), Family(7, 6, 4), Family(8, 7, 4)],
    ],
    [
        &[Family(2, 1, 4), Family(3, 2, 4)],
        &[Family(2, 0, 2)],
        &[Family(1, 0, 0), Family(2, -1, 0), Family(3, 1, 0), Family(5, 5, 2)],
    ],
    [
        &[Family(1, 0, 4), Family(2, 1, 4)],
        &[Family(2, 2, 2)],
        &[Family(3, 2, 4), Family(4, 3, 4)],
    ],
    [
        &[Family(2, 1, 4), Family(3, 2, 4)],
        &[Family(1, 1, 2)],
        &[Family(4, 1, 8), Family(5, 2, 8), Family(6, 3, 8), Family(7, 4, 8)],
    ],
];

/// Classifies `(l1, l2)` on the board `2 x 2n'` by the two-row tables.
pub fn predict_2n_class(np: usize, l1: usize, l2: usize) -> TwoRowClass {
    let (np_i, a, b) = (np as i64, l1 as i64, l2 as i64);
    let sum = l1 + l2;
    let (rows, base) = match sum.cmp(&(2 * np)) {
        std::cmp::Ordering::Equal => return TwoRowClass::Unreachable,
        std::cmp::Ordering::Less => (&BELOW, 0),
        std::cmp::Ordering::Greater => (&ABOVE[np % 4], np_i),
    };
    let classes = [TwoRowClass::G0, TwoRowClass::G1, TwoRowClass::G2];
    for (class, fams) in classes.iter().zip(rows.iter()) {
        if fams.iter().any(|f| f.contains(base, a, b)) {
            return *class;
        }
    }
    TwoRowClass::Other
}

/// `G(Y_{2,n})` for `n >= 2`.
pub fn predict_start_2n(n: usize) -> u32 {
    match n {
        2 | 3 => 3,
        _ if matches!(n % 8, 2 | 3) => 2,
        _ => 1,
    }
}

/// `G(Y_{n,n}) = G(Y_{n,n+1}) = 1 ^ 2 ^ ... ^ n`.
pub fn predict_start_square(n: usize) -> u32 {
    (1..=n as u32).fold(0, |acc, k| acc ^ k)
}

/// Nim-sum of the parts.
pub fn predict_shifted(s: &ShiftedDiagram) -> u32 {
    s.nim_sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Periodicity {
    pub preperiod: usize,
    pub period: usize,
    pub saltus: i64,
}

/// Smallest preperiod, then smallest period, such that
/// `values[i + d] = values[i] + s` for every observed `i >= p`, with at
/// least two whole periods of confirmation after the preperiod.
pub fn detect_periodicity(values: &[i64], max_period: usize, max_saltus: i64) -> Option<Periodicity> {
    for p in 0..values.len() {
        for d in 1..=max_period {
            if values.len() < p + 3 * d {
                break;
            }
            let s = values[p + d] - values[p];
            if s.abs() > max_saltus {
                continue;
            }
            if (p..values.len() - d).all(|i| values[i + d] == values[i] + s) {
                return Some(Periodicity { preperiod: p, period: d, saltus: s });
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Starting values against the golden table.
    Table1,
    /// Reachable sets and values on `1 x n`.
    OneRow,
    /// Reachable sets and value classes on `2 x 2n'`.
    TwoRow,
    /// Starting values on `2 x n`.
    TwoRowStart,
    /// The widening map is an isomorphism.
    IsoE,
    /// The maps between near-square boards and staircases are inverse isomorphisms.
    IsoA,
    /// Starting values on square and near-square boards.
    SquareStart,
    /// Values of shifted positions are nim-sums.
    Nim,
    /// Reachable positions are exactly the symmetric ones.
    Symmetry,
    /// Reachable positions on widened boards repeat the centre diagonal.
    CenterEquality,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Table1,
        TheoremId::OneRow,
        TheoremId::TwoRow,
        TheoremId::TwoRowStart,
        TheoremId::IsoE,
        TheoremId::IsoA,
        TheoremId::SquareStart,
        TheoremId::Nim,
        TheoremId::Symmetry,
        TheoremId::CenterEquality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Table1 => "table1",
            TheoremId::OneRow => "thm-1n",
            TheoremId::TwoRow => "lemma-2n",
            TheoremId::TwoRowStart => "cor-2n",
            TheoremId::IsoE => "iso-e",
            TheoremId::IsoA => "iso-a",
            TheoremId::SquareStart => "cor-square",
            TheoremId::Nim => "nim",
            TheoremId::Symmetry => "symmetry",
            TheoremId::CenterEquality => "center-equality",
        }
    }

    /// Default `n` bound used when the range leaves it open.
    pub fn default_n(self) -> usize {
        match self {
            TheoremId::Table1 => 9,
            TheoremId::OneRow => 20,
            TheoremId::TwoRow => 24,
            TheoremId::TwoRowStart => 40,
            TheoremId::IsoE => 8,
            TheoremId::IsoA | TheoremId::SquareStart | TheoremId::Nim => 7,
            TheoremId::Symmetry => 6,
            TheoremId::CenterEquality => 7,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                Error::Parse(format!("unknown theorem id {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// Parameters of a verification run. `n` is the main size bound (or the
/// staircase size for `nim`); `m` bounds rows for `table1` and picks a
/// single board together with `n` for `iso-e`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRange {
    pub m: Option<usize>,
    pub n: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub position: String,
    pub predicted: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionReport {
    pub theorem: String,
    pub range: String,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl PredictionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn new(theorem: TheoremId, range: String) -> Self {
        PredictionReport { theorem: theorem.name().into(), range, checked: 0, mismatches: Vec::new() }
    }

    fn check(&mut self, position: impl fmt::Display, predicted: impl fmt::Display, computed: impl fmt::Display) {
        self.checked += 1;
        let (p, c) = (predicted.to_string(), computed.to_string());
        if p != c {
            self.mismatches.push(Mismatch { position: position.to_string(), predicted: p, computed: c });
        }
    }

    fn absorb_iso(&mut self, iso: IsoReport) {
        self.checked += iso.checked;
        self.mismatches.extend(iso.violations.into_iter().map(|v| Mismatch {
            position: v.witness,
            predicted: format!("{} is an isomorphism {} -> {}", iso.map, iso.source, iso.target),
            computed: v.kind,
        }));
    }
}

fn bounded(what: &str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(Error::RangeTooLarge { what: format!("{what} {value}"), bound });
    }
    Ok(())
}

/// `G(Y_{m,n})` by exhaustive search, transposing when `m > n`.
pub fn start_value(m: usize, n: usize) -> Result<u32> {
    let board = if m <= n { BoardParams::new(m, n)? } else { BoardParams::new(n, m)? };
    bounded("board cells", board.cells(), MAX_CELLS)?;
    let game = DiagonalGame { board };
    let start = diagonal_of(&board, &board.full())?;
    grundy_with(&game, &start, &mut GrundyMemo::new(&game))
}

/// Starting values for every board up to `max_m x max_n`, computed in parallel.
pub fn start_table(max_m: usize, max_n: usize) -> Result<Vec<Vec<u32>>> {
    bounded("board cells", max_m * max_n, MAX_CELLS)?;
    let mut cells: Vec<(usize, usize)> = (1..=max_m)
        .flat_map(|m| (1..=max_n).map(move |n| (m.min(n), m.max(n))))
        .collect();
    cells.sort_unstable();
    cells.dedup();
    let values: Vec<((usize, usize), u32)> = cells
        .into_par_iter()
        .map(|(a, b)| start_value(a, b).map(|g| ((a, b), g)))
        .collect::<Result<_>>()?;
    let lookup = |m: usize, n: usize| {
        let key = (m.min(n), m.max(n));
        values.iter().find(|(k, _)| *k == key).map(|(_, g)| *g).expect("every board was solved")
    };
    Ok((1..=max_m).map(|m| (1..=max_n).map(|n| lookup(m, n)).collect()).collect())
}

/// Runs one verification harness.
pub fn verify(theorem: TheoremId, range: VerifyRange) -> Result<PredictionReport> {
    let n = range.n.unwrap_or_else(|| theorem.default_n());
    match theorem {
        TheoremId::Table1 => verify_table1(range.m.unwrap_or(9), n),
        TheoremId::OneRow => verify_one_row(n),
        TheoremId::TwoRow => verify_two_row(n),
        TheoremId::TwoRowStart => verify_two_row_start(n),
        TheoremId::IsoE => verify_iso_e(range.m, n),
        TheoremId::IsoA => verify_iso_a(n),
        TheoremId::SquareStart => verify_square_start(n),
        TheoremId::Nim => verify_nim(n),
        TheoremId::Symmetry => verify_symmetry(n),
        TheoremId::CenterEquality => verify_center_equality(n),
    }
}

fn verify_table1(max_m: usize, max_n: usize) -> Result<PredictionReport> {
    bounded("table rows", max_m, 9)?;
    bounded("table columns", max_n, 9)?;
    let mut report = PredictionReport::new(TheoremId::Table1, format!("m <= {max_m}, n <= {max_n}"));
    let table = start_table(max_m, max_n)?;
    for m in 1..=max_m {
        for n in 1..=max_n {
            report.check(format!("Y_{{{m},{n}}}"), TABLE1[m - 1][n - 1], table[m - 1][n - 1]);
        }
    }
    Ok(report)
}

fn verify_one_row(max_n: usize) -> Result<PredictionReport> {
    bounded("row length", max_n, crate::diagrams::MAX_SIDE)?;
    let mut report = PredictionReport::new(TheoremId::OneRow, format!("1 <= n <= {max_n}"));
    for n in 1..=max_n {
        let board = BoardParams::new(1, n)?;
        let game = MhrgGame::new(board);
        let reach = reachable(board, Engine::Diagonal)?;
        let mut memo = GrundyMemo::new(&game);
        for l in 0..=n {
            let pos = MhrgPosition::new(board, YoungDiagram::new(&[l])?)?;
            let (pred_reach, pred_g) = predict_1n(n, l);
            let label = format!("({l}) on 1x{n}");
            report.check(&label, reachability(pred_reach), reachability(reach.contains(&pos)));
            if let Some(g) = pred_g {
                report.check(&label, g, grundy_with(&game, &pos, &mut memo)?);
            }
        }
    }
    Ok(report)
}

fn reachability(r: bool) -> &'static str {
    if r {
        "reachable"
    } else {
        "unreachable"
    }
}

fn verify_two_row(max_n: usize) -> Result<PredictionReport> {
    bounded("two-row board width", max_n, MAX_TWO_ROW_TABLE)?;
    let mut report = PredictionReport::new(TheoremId::TwoRow, format!("even 2 <= n <= {max_n}"));
    for np in 1..=max_n / 2 {
        let board = BoardParams::new(2, 2 * np)?;
        let game = MhrgGame::new(board);
        let reach = reachable(board, Engine::Diagonal)?;
        let mut memo = GrundyMemo::new(&game);
        for y in board.all_diagrams() {
            let (l1, l2) = (y.row_len(1), y.row_len(2));
            let pos = MhrgPosition::new(board, y)?;
            let class = predict_2n_class(np, l1, l2);
            let label = format!("({l1},{l2}) on 2x{}", 2 * np);
            let predicted_reach = class != TwoRowClass::Unreachable;
            report.check(&label, reachability(predicted_reach), reachability(reach.contains(&pos)));
            if !predicted_reach || !reach.contains(&pos) {
                continue;
            }
            let g = grundy_with(&game, &pos, &mut memo)?;
            match class.value() {
                Some(v) => report.check(&label, v, g),
                // a value of 0, 1 or 2 must appear in the tables
                None if g <= 2 => report.check(&label, "a value above 2", g),
                None => {}
            }
        }
    }
    Ok(report)
}

fn verify_two_row_start(max_n: usize) -> Result<PredictionReport> {
    bounded("two-row board width", max_n, crate::diagrams::MAX_SIDE)?;
    let mut report = PredictionReport::new(TheoremId::TwoRowStart, format!("2 <= n <= {max_n}"));
    for n in 2..=max_n {
        let board = BoardParams::new(2, n)?;
        let game = MhrgGame::new(board);
        let g = grundy_with(&game, &game.start(), &mut GrundyMemo::new(&game))?;
        report.check(format!("Y_{{2,{n}}}"), predict_start_2n(n), g);
    }
    Ok(report)
}

fn iso_e_boards(m: Option<usize>, n: usize) -> Result<Vec<(usize, usize)>> {
    if let Some(m) = m {
        if !(m + n).is_multiple_of(2) || m > n {
            return Err(Error::domain(format!("the widening map needs m <= n and m + n even, got {m}x{n}")));
        }
        bounded("board cells", m * (n + 1), MAX_CELLS)?;
        return Ok(vec![(m, n)]);
    }
    bounded("board side", n, 8)?;
    Ok((1..=n)
        .flat_map(|b| (1..=b).map(move |a| (a, b)))
        .filter(|(a, b)| (a + b) % 2 == 0)
        .collect())
}

fn verify_iso_e(m: Option<usize>, n: usize) -> Result<PredictionReport> {
    let boards = iso_e_boards(m, n)?;
    let range = match m {
        Some(m) => format!("{m}x{n} -> {m}x{}", n + 1),
        None => format!("m <= n <= {n}, m + n even"),
    };
    let mut report = PredictionReport::new(TheoremId::IsoE, range);
    let isos: Vec<IsoReport> = boards.into_par_iter().map(|(a, b)| verify_e(a, b)).collect::<Result<_>>()?;
    for iso in isos {
        report.absorb_iso(iso);
    }
    Ok(report)
}

fn verify_iso_a(max_n: usize) -> Result<PredictionReport> {
    bounded("staircase size", max_n, MAX_STAIRCASE_CHECK)?;
    let mut report = PredictionReport::new(TheoremId::IsoA, format!("1 <= n <= {max_n}"));
    for n in 1..=max_n {
        report.absorb_iso(verify_a(n)?);
        report.absorb_iso(verify_b(n)?);
        for s in all_shifted(n)? {
            let back = a_map(&b_map(&s, n)?)?;
            report.check(format!("A(B({s})) on S_{n}"), &s, back);
        }
        for pos in reachable(BoardParams::new(n, n + 1)?, Engine::Diagonal)? {
            let back = b_map(&a_map(&pos)?, n)?;
            report.check(format!("B(A({pos})) on {}", pos.board), &pos, back);
        }
    }
    Ok(report)
}

fn verify_square_start(max_n: usize) -> Result<PredictionReport> {
    bounded("board side", max_n, 8)?;
    let mut report = PredictionReport::new(TheoremId::SquareStart, format!("1 <= n <= {max_n}"));
    for n in 1..=max_n {
        let expected = predict_start_square(n);
        report.check(format!("Y_{{{n},{n}}}"), expected, start_value(n, n)?);
        report.check(format!("Y_{{{n},{}}}", n + 1), expected, start_value(n, n + 1)?);
        let game = HrgGame::new(n)?;
        let g = grundy_with(&game, &game.start(), &mut GrundyMemo::new(&game))?;
        report.check(format!("S_{n}"), expected, g);
    }
    Ok(report)
}

fn verify_nim(n: usize) -> Result<PredictionReport> {
    bounded("staircase size", n, MAX_STAIRCASE_CHECK)?;
    let mut report = PredictionReport::new(TheoremId::Nim, format!("F(S_{n})"));
    let game = HrgGame::new(n)?;
    let mut memo = GrundyMemo::new(&game);
    for s in all_shifted(n)? {
        let g = grundy_with(&game, &s, &mut memo)?;
        report.check(&s, predict_shifted(&s), g);
    }
    Ok(report)
}

fn verify_symmetry(max_n: usize) -> Result<PredictionReport> {
    bounded("board side", max_n, 8)?;
    let mut report = PredictionReport::new(TheoremId::Symmetry, format!("n x n and n x (n+1), n <= {max_n}"));
    for n in 1..=max_n {
        for board in [BoardParams::new(n, n)?, BoardParams::new(n, n + 1)?] {
            let reach = reachable(board, Engine::Diagonal)?;
            for y in board.all_diagrams() {
                let sym = is_symmetric(&diagonal_of(&board, &y)?);
                let pos = MhrgPosition::new(board, y)?;
                let label = format!("({pos}) on {board}");
                report.check(label, reachability(sym), reachability(reach.contains(&pos)));
            }
        }
    }
    Ok(report)
}

fn verify_center_equality(max_n: usize) -> Result<PredictionReport> {
    bounded("board side", max_n, 8)?;
    let mut report = PredictionReport::new(TheoremId::CenterEquality, format!("m <= n <= {max_n}, m + n even"));
    for n in 1..=max_n {
        for m in (1..=n).filter(|m| (m + n) % 2 == 0) {
            let board = BoardParams::new(m, n + 1)?;
            let c = ((n - m) / 2) as i64;
            let game = MhrgGame::new(board);
            let reach: BTreeSet<MhrgPosition> = closure(&game, &game.start(), usize::MAX)?;
            for pos in reach {
                let d = pos.diagonal();
                report.check(format!("({pos}) on {board}"), d.get(c), d.get(c + 1));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_table_shape() {
        let t = table1_golden();
        assert_eq!(t[2][4], 0);
        assert_eq!(t[4][6], 14);
        assert_eq!(t[8][8], 1);
        for (m, row) in t.iter().enumerate() {
            for (n, &v) in row.iter().enumerate() {
                assert_eq!(v, t[n][m]);
            }
        }
        // widening an even board keeps the starting value
        for m in 1..=9 {
            for n in m..9 {
                if (m + n) % 2 == 0 {
                    assert_eq!(t[m - 1][n - 1], t[m - 1][n]);
                }
            }
        }
    }

    #[test]
    fn one_row_predictions() {
        assert_eq!(predict_1n(4, 2), (false, None));
        assert_eq!(predict_1n(4, 4), (true, Some(3)));
        assert_eq!(predict_1n(4, 1), (true, Some(1)));
        assert_eq!(predict_1n(5, 5), (true, Some(5)));
        assert_eq!(predict_1n(5, 0), (true, Some(0)));
    }

    #[test]
    fn two_row_predictions() {
        assert_eq!(predict_2n_class(2, 3, 2), TwoRowClass::G0);
        assert_eq!(predict_2n_class(2, 2, 2), TwoRowClass::Unreachable);
        // (2i,2i) needs equal rows; (2,0) sits in (2+4i,4i)
        assert_eq!(predict_2n_class(2, 2, 0), TwoRowClass::G2);
        assert_eq!(predict_2n_class(3, 2, 2), TwoRowClass::G0);
        assert_eq!(predict_2n_class(5, 1, 0), TwoRowClass::G1);
        assert_eq!(predict_2n_class(5, 2, 0), TwoRowClass::G2);
        assert_eq!(predict_2n_class(5, 3, 0), TwoRowClass::Other);
    }

    #[test]
    fn start_predictions() {
        assert_eq!(predict_start_2n(2), 3);
        assert_eq!(predict_start_2n(3), 3);
        assert_eq!(predict_start_2n(10), 2);
        assert_eq!(predict_start_2n(11), 2);
        assert_eq!(predict_start_2n(6), 1);
        assert_eq!(predict_start_square(3), 0);
        assert_eq!(predict_start_square(4), 4);
        assert_eq!(predict_shifted(&"7,6,4,3,2".parse().unwrap()), 4);
    }

    #[test]
    fn periodicity() {
        let row1: Vec<i64> = TABLE1[0].iter().map(|&v| v as i64).collect();
        assert_eq!(
            detect_periodicity(&row1, 4, 4),
            Some(Periodicity { preperiod: 0, period: 2, saltus: 2 })
        );
        assert_eq!(
            detect_periodicity(&[1, 1, 1, 1], 3, 3),
            Some(Periodicity { preperiod: 0, period: 1, saltus: 0 })
        );
        assert_eq!(detect_periodicity(&[0, 1, 0, 2, 0, 3], 3, 3), None);
        assert_eq!(detect_periodicity(&[], 3, 3), None);
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert!("thm-9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn small_harnesses_pass() {
        for (t, n) in [
            (TheoremId::OneRow, 8),
            (TheoremId::TwoRow, 8),
            (TheoremId::TwoRowStart, 12),
            (TheoremId::IsoE, 4),
            (TheoremId::IsoA, 3),
            (TheoremId::SquareStart, 4),
            (TheoremId::Nim, 5),
            (TheoremId::Symmetry, 3),
            (TheoremId::CenterEquality, 4),
        ] {
            let report = verify(t, VerifyRange { m: None, n: Some(n) }).unwrap();
            assert!(report.passed(), "{t}: {:?}", report.mismatches);
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn oversized_ranges_are_refused() {
        let err = verify(TheoremId::Table1, VerifyRange { m: Some(10), n: Some(10) }).unwrap_err();
        assert!(matches!(err, Error::RangeTooLarge { bound: 9, .. }));
        assert!(verify(TheoremId::Nim, VerifyRange { m: None, n: Some(12) }).is_err());
        assert!(verify(TheoremId::TwoRow, VerifyRange { m: None, n: Some(30) }).is_err());
    }

    #[test]
    fn small_start_table() {
        assert_eq!(start_table(2, 3).unwrap(), vec![vec![1, 1, 3], vec![1, 3, 3]]);
        assert_eq!(start_table(1, 1).unwrap(), vec![vec![1]]);
    }
}
