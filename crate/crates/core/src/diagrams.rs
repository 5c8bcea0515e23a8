//! Young diagrams inside an `m x n` box with the unimodal numbering.
//!
//! Boxes are addressed 1-based as `(row, column)`. Diagonals are addressed by
//! the logical index `k = column - row`, which ranges over `-m..=n`; storage
//! uses the slot `k + m` but every public API speaks logical indices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest side length accepted by [`BoardParams::new`]. Row lengths and
/// diagonal counts then fit in a byte.
pub const MAX_SIDE: usize = 64;

/// The rectangle `m x n` that fixes a game instance and its numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoardParams {
    m: usize,
    n: usize,
}

impl BoardParams {
    /// Requires `1 <= m <= n <= 64`. Use [`canonical_board`] for `m > n`.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::domain(format!("board sides must be positive, got {m}x{n}")));
        }
        if m > n {
            return Err(Error::domain(format!(
                "board {m}x{n} has m > n; transpose it first"
            )));
        }
        if n > MAX_SIDE {
            return Err(Error::domain(format!("board side {n} exceeds {MAX_SIDE}")));
        }
        Ok(BoardParams { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> usize {
        self.m * self.n
    }

    /// Length `m + n + 1` of a diagonal sequence on this board.
    pub fn diagonal_len(&self) -> usize {
        self.m + self.n + 1
    }

    /// The largest unimodal number, `floor((m + n) / 2)`.
    pub fn max_label(&self) -> usize {
        (self.m + self.n) / 2
    }

    /// The full rectangle, i.e. the starting position.
    pub fn full(&self) -> YoungDiagram {
        YoungDiagram { rows: vec![self.n as u8; self.m] }
    }

    pub fn contains(&self, y: &YoungDiagram) -> bool {
        y.rows.len() <= self.m && y.rows.first().is_none_or(|&r| r as usize <= self.n)
    }

    pub fn check(&self, y: &YoungDiagram) -> Result<()> {
        if self.contains(y) {
            Ok(())
        } else {
            Err(Error::domain(format!("diagram {y} does not fit in the {self} box")))
        }
    }

    /// Every diagram contained in the rectangle, in canonical order.
    pub fn all_diagrams(&self) -> Vec<YoungDiagram> {
        fn go(rows_left: usize, cap: usize, prefix: &mut Vec<u8>, out: &mut Vec<YoungDiagram>) {
            out.push(YoungDiagram { rows: prefix.clone() });
            if rows_left == 0 {
                return;
            }
            for len in 1..=cap {
                prefix.push(len as u8);
                go(rows_left - 1, len, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(self.m, self.n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for BoardParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// Converts an arbitrary `m x n` instance to one with `m <= n`, conjugating
/// the diagram when the sides are swapped.
pub fn canonical_board(m: usize, n: usize, y: &YoungDiagram) -> Result<(BoardParams, YoungDiagram)> {
    if m <= n {
        Ok((BoardParams::new(m, n)?, y.clone()))
    } else {
        Ok((BoardParams::new(n, m)?, y.conjugate()))
    }
}

/// A partition `lambda_1 >= lambda_2 >= ... > 0` stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungDiagram {
    rows: Vec<u8>,
}

impl YoungDiagram {
    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// Builds a diagram from row lengths; trailing zeros are stripped.
    pub fn new(rows: &[usize]) -> Result<Self> {
        for (idx, w) in rows.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::Validation {
                    index: idx as i64 + 2,
                    reason: format!("row lengths must be weakly decreasing, got {} < {}", w[0], w[1]),
                });
            }
        }
        if let Some(&first) = rows.first() {
            if first > u8::MAX as usize {
                return Err(Error::domain(format!("row length {first} is too large")));
            }
        }
        let rows = rows.iter().filter(|&&r| r > 0).map(|&r| r as u8).collect();
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[u8] {
        &self.rows
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.rows.get(i - 1).map_or(0, |&r| r as usize)
    }

    /// Length of column `j` (1-based).
    pub fn col_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.rows.iter().take_while(|&&r| r as usize >= j).count()
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|&r| r as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        j >= 1 && j <= self.row_len(i)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len as usize).map(move |j| (i + 1, j)))
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let width = self.row_len(1);
        YoungDiagram { rows: (1..=width).map(|j| self.col_len(j) as u8).collect() }
    }

    /// Fixed-width memo key: the row lengths padded with zeros to `m` bytes.
    pub fn encode(&self, board: &BoardParams) -> Vec<u8> {
        let mut key = self.rows.clone();
        key.resize(board.m(), 0);
        key
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    /// Parses `"5,4,3"`; the empty diagram is `"-"` (an empty string is accepted too).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(YoungDiagram::empty());
        }
        let rows = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row length {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(&rows)
    }
}

/// The unimodal number `min(j - i + m, i - j + n)` of box `(i, j)`.
pub fn unimodal_number(board: &BoardParams, i: usize, j: usize) -> Result<usize> {
    if i < 1 || i > board.m() || j < 1 || j > board.n() {
        return Err(Error::domain(format!("box ({i},{j}) lies outside the {board} board")));
    }
    Ok(label_of_diagonal(board, j as i64 - i as i64))
}

/// The number shared by every box on diagonal `k`, for `-m < k < n`.
pub fn diagonal_label(board: &BoardParams, k: i64) -> Result<usize> {
    if k <= -(board.m() as i64) || k >= board.n() as i64 {
        return Err(Error::domain(format!("diagonal {k} lies outside the {board} board")));
    }
    Ok(label_of_diagonal(board, k))
}

pub(crate) fn label_of_diagonal(board: &BoardParams, k: i64) -> usize {
    (k + board.m() as i64).min(board.n() as i64 - k) as usize
}

/// Multiset of box labels, stored as counts indexed by label `1..=max_label`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelMultiset {
    counts: Vec<u32>,
}

impl LabelMultiset {
    pub fn new(board: &BoardParams) -> Self {
        LabelMultiset { counts: vec![0; board.max_label()] }
    }

    pub fn from_labels(board: &BoardParams, labels: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::new(board);
        for label in labels {
            set.insert(label);
        }
        set
    }

    pub fn insert(&mut self, label: usize) {
        debug_assert!(label >= 1 && label <= self.counts.len());
        self.counts[label - 1] += 1;
    }

    pub fn count(&self, label: usize) -> usize {
        if label == 0 {
            return 0;
        }
        self.counts.get(label - 1).map_or(0, |&c| c as usize)
    }

    pub fn len(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Labels in ascending order, with repetition.
    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(idx, &c)| std::iter::repeat_n(idx + 1, c as usize))
            .collect()
    }
}

impl fmt::Display for LabelMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_sorted_vec().iter().map(|l| l.to_string()).collect();
        write!(f, "{{{{{}}}}}", parts.join(","))
    }
}

/// A hook together with the diagonal interval `[l, r]` it occupies.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookRecord {
    pub corner: (usize, usize),
    pub l: i64,
    pub r: i64,
    pub labels: LabelMultiset,
}

impl HookRecord {
    pub fn size(&self) -> usize {
        (self.r - self.l + 1) as usize
    }
}

/// Boxes of the hook at `(i, j)`: the corner, the boxes below it and the
/// boxes to its right.
pub fn hook_boxes(y: &YoungDiagram, i: usize, j: usize) -> Result<Vec<(usize, usize)>> {
    if !y.contains_box(i, j) {
        return Err(Error::domain(format!("box ({i},{j}) is not in diagram {y}")));
    }
    let bottom = y.col_len(j);
    let right = y.row_len(i);
    let mut boxes = vec![(i, j)];
    boxes.extend((i + 1..=bottom).map(|r| (r, j)));
    boxes.extend((j + 1..=right).map(|c| (i, c)));
    Ok(boxes)
}

pub fn hook_at(board: &BoardParams, y: &YoungDiagram, i: usize, j: usize) -> Result<HookRecord> {
    board.check(y)?;
    let boxes = hook_boxes(y, i, j)?;
    let labels = LabelMultiset::from_labels(
        board,
        boxes.iter().map(|&(a, b)| label_of_diagonal(board, b as i64 - a as i64)),
    );
    let l = j as i64 - y.col_len(j) as i64;
    let r = y.row_len(i) as i64 - i as i64;
    Ok(HookRecord { corner: (i, j), l, r, labels })
}

/// `Y \ h(i, j)`: remove the hook, then slide every box strictly south-east
/// of the corner one step up-left.
pub fn remove_hook(y: &YoungDiagram, i: usize, j: usize) -> Result<YoungDiagram> {
    if !y.contains_box(i, j) {
        return Err(Error::domain(format!("box ({i},{j}) is not in diagram {y}")));
    }
    let bottom = y.col_len(j);
    let mut rows: Vec<usize> = y.rows.iter().map(|&r| r as usize).collect();
    // rows i..bottom-1 take the shifted remainder of the row below
    for r in i..bottom {
        rows[r - 1] = y.row_len(r + 1) - 1;
    }
    rows[bottom - 1] = j - 1;
    YoungDiagram::new(&rows)
}

/// A point of `D_{m,n}`: the diagonal profile `(d_{-m}, ..., d_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagonalSeq {
    board: BoardParams,
    values: Vec<u8>,
}

/// Why a candidate interval decrement leaves `D_{m,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// Some entry in the interval is already zero.
    NegativeEntry { index: i64 },
    /// The pair `(a_{l-1}, a_l)` breaks adjacency after the decrement.
    AdjacencyAtLeft { index: i64 },
    /// The pair `(a_r, a_{r+1})` breaks adjacency after the decrement.
    AdjacencyAtRight { index: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bulge {
    /// The left entry of the pair can be decremented.
    Left,
    /// The right entry of the pair can be decremented.
    Right,
}

/// Adjacency of the pair `(prev, cur) = (a_{k-1}, a_k)`.
#[inline]
fn pair_ok(k: i64, prev: i32, cur: i32) -> bool {
    let diff = if k <= 0 { cur - prev } else { prev - cur };
    (0..=1).contains(&diff)
}

/// Classifies the pair `(values[k-1], values[k])` of a raw sequence indexed
/// `-m..=n` (stored with offset `m`).
pub fn bulge_kind(m: usize, values: &[i32], k: i64) -> Result<Bulge> {
    let slot = k + m as i64;
    if slot < 1 || slot as usize >= values.len() {
        return Err(Error::domain(format!("pair index {k} is out of range")));
    }
    let prev = values[slot as usize - 1];
    let cur = values[slot as usize];
    if !pair_ok(k, prev, cur) {
        return Err(Error::domain(format!("pair at {k} = ({prev},{cur}) violates adjacency")));
    }
    let left = pair_ok(k, prev - 1, cur);
    let right = pair_ok(k, prev, cur - 1);
    match (left, right) {
        (true, false) => Ok(Bulge::Left),
        (false, true) => Ok(Bulge::Right),
        _ => Err(Error::internal(format!("pair at {k} = ({prev},{cur}) is not a unique bulge"))),
    }
}

impl DiagonalSeq {
    /// Validates membership in `D_{m,n}`; the error names the first failing
    /// logical index.
    pub fn new(board: BoardParams, values: Vec<u8>) -> Result<Self> {
        if values.len() != board.diagonal_len() {
            return Err(Error::Validation {
                index: -(board.m() as i64),
                reason: format!("expected {} entries, got {}", board.diagonal_len(), values.len()),
            });
        }
        let m = board.m() as i64;
        if values[0] != 0 {
            return Err(Error::Validation { index: -m, reason: "first entry must be 0".into() });
        }
        for slot in 1..values.len() {
            let k = slot as i64 - m;
            if !pair_ok(k, values[slot - 1] as i32, values[slot] as i32) {
                return Err(Error::Validation {
                    index: k,
                    reason: format!(
                        "pair ({},{}) violates the adjacency condition",
                        values[slot - 1],
                        values[slot]
                    ),
                });
            }
        }
        if *values.last().unwrap() != 0 {
            return Err(Error::Validation { index: board.n() as i64, reason: "last entry must be 0".into() });
        }
        Ok(DiagonalSeq { board, values })
    }

    pub fn zero(board: BoardParams) -> Self {
        DiagonalSeq { values: vec![0; board.diagonal_len()], board }
    }

    pub fn board(&self) -> &BoardParams {
        &self.board
    }

    /// Raw storage; slot `k + m` holds `d_k`.
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// `d_k` for `-m <= k <= n`; zero outside that range.
    pub fn get(&self, k: i64) -> u8 {
        let slot = k + self.board.m() as i64;
        if slot < 0 || slot as usize >= self.values.len() {
            0
        } else {
            self.values[slot as usize]
        }
    }

    fn slot(&self, k: i64) -> usize {
        (k + self.board.m() as i64) as usize
    }

    fn check_interval(&self, l: i64, r: i64) -> Result<()> {
        let (m, n) = (self.board.m() as i64, self.board.n() as i64);
        if !(-m < l && l <= r && r < n) {
            return Err(Error::domain(format!(
                "interval [{l},{r}] is outside -{m} < l <= r < {n}"
            )));
        }
        Ok(())
    }

    /// Constant-time acceptance test for [`decrement_interval`]; the interval
    /// must already be in range.
    pub(crate) fn probe(&self, l: i64, r: i64) -> std::result::Result<(), Rejection> {
        let (sl, sr) = (self.slot(l), self.slot(r));
        // entries rise to index 0 and fall after it, so the interval minimum
        // sits at one of its ends
        if self.values[sl] == 0 {
            return Err(Rejection::NegativeEntry { index: l });
        }
        if self.values[sr] == 0 {
            return Err(Rejection::NegativeEntry { index: r });
        }
        if !pair_ok(l, self.values[sl - 1] as i32, self.values[sl] as i32 - 1) {
            return Err(Rejection::AdjacencyAtLeft { index: l });
        }
        if !pair_ok(r + 1, self.values[sr] as i32 - 1, self.values[sr + 1] as i32) {
            return Err(Rejection::AdjacencyAtRight { index: r + 1 });
        }
        Ok(())
    }

    pub(crate) fn decremented(&self, l: i64, r: i64) -> DiagonalSeq {
        let mut values = self.values.clone();
        for v in &mut values[self.slot(l)..=self.slot(r)] {
            *v -= 1;
        }
        DiagonalSeq { board: self.board, values }
    }

    pub fn bulge_kind(&self, k: i64) -> Result<Bulge> {
        let raw: Vec<i32> = self.values.iter().map(|&v| v as i32).collect();
        bulge_kind(self.board.m(), &raw, k)
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.values.iter().map(|&v| v as usize).sum()
    }

    /// Last box on diagonal `k` as `(row, column)`, when `d_k > 0`.
    pub fn last_box(&self, k: i64) -> Option<(usize, usize)> {
        let d = self.get(k) as i64;
        (d > 0).then(|| ((d + (-k).max(0)) as usize, (d + k.max(0)) as usize))
    }
}

impl fmt::Display for DiagonalSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.board.m();
        let join = |s: &[u8]| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "({}, 0:{}, {})",
            join(&self.values[..m]),
            self.values[m],
            join(&self.values[m + 1..])
        )
    }
}

/// The diagonal expression `d_k(Y) = #{(i, j) in Y : j - i = k}`.
pub fn diagonal_of(board: &BoardParams, y: &YoungDiagram) -> Result<DiagonalSeq> {
    board.check(y)?;
    let m = board.m() as i64;
    let mut values = vec![0u8; board.diagonal_len()];
    for (i, &len) in y.rows.iter().enumerate() {
        let row = i as i64 + 1;
        for j in 1..=len as i64 {
            values[(j - row + m) as usize] += 1;
        }
    }
    Ok(DiagonalSeq { board: *board, values })
}

/// Inverse of [`diagonal_of`]: `(i, j)` is a box iff `min(i, j) <= a_{j-i}`.
pub fn diagram_of(seq: &DiagonalSeq) -> YoungDiagram {
    let (m, n) = (seq.board.m(), seq.board.n());
    let mut rows = Vec::with_capacity(m);
    for i in 1..=m {
        let len = (1..=n)
            .take_while(|&j| i.min(j) <= seq.get(j as i64 - i as i64) as usize)
            .count();
        if len == 0 {
            break;
        }
        rows.push(len as u8);
    }
    YoungDiagram { rows }
}

/// `a_{[l,r]}`: subtract one on `l..=r`. The outer `Result` reports an
/// out-of-range interval; the inner one says whether the result stays in
/// `D_{m,n}`.
pub fn decrement_interval(
    seq: &DiagonalSeq,
    l: i64,
    r: i64,
) -> Result<std::result::Result<DiagonalSeq, Rejection>> {
    seq.check_interval(l, r)?;
    Ok(seq.probe(l, r).map(|()| seq.decremented(l, r)))
}

pub fn label_multiset(board: &BoardParams, y: &YoungDiagram) -> Result<LabelMultiset> {
    board.check(y)?;
    Ok(LabelMultiset::from_labels(
        board,
        y.boxes().map(|(i, j)| label_of_diagonal(board, j as i64 - i as i64)),
    ))
}
