//! Shifted Young diagrams inside the staircase `S_n` and the hook removing
//! game played on them.
//!
//! Row `i` of a shifted diagram with parts `lambda_1 > lambda_2 > ...` holds
//! the boxes `(i, i), ..., (i, i + lambda_i - 1)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grundy::ImpartialGame;

/// Largest staircase accepted anywhere in this module.
pub const MAX_STAIRCASE: usize = 32;

/// Largest staircase whose whole position family may be enumerated.
pub const MAX_ENUMERATED_STAIRCASE: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedDiagram {
    parts: Vec<u8>,
}

impl ShiftedDiagram {
    pub fn empty() -> Self {
        ShiftedDiagram { parts: Vec::new() }
    }

    /// Parts must be strictly decreasing and positive.
    pub fn new(parts: &[usize]) -> Result<Self> {
        for (idx, &p) in parts.iter().enumerate() {
            if p == 0 || p > u8::MAX as usize {
                return Err(Error::Validation {
                    index: idx as i64 + 1,
                    reason: format!("part {p} must be between 1 and 255"),
                });
            }
            if idx > 0 && parts[idx - 1] <= p {
                return Err(Error::Validation {
                    index: idx as i64 + 1,
                    reason: format!("parts must strictly decrease, got {} then {p}", parts[idx - 1]),
                });
            }
        }
        Ok(ShiftedDiagram { parts: parts.iter().map(|&p| p as u8).collect() })
    }

    /// The staircase `S_n = (n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Result<Self> {
        check_staircase(n)?;
        Ok(ShiftedDiagram { parts: (1..=n as u8).rev().collect() })
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Whether the diagram lies inside `S_n`.
    pub fn fits(&self, n: usize) -> bool {
        self.parts.first().is_none_or(|&p| p as usize <= n)
    }

    fn row_end(&self, i: usize) -> usize {
        // last column of row i, or i - 1 when the row is empty
        match self.parts.get(i.wrapping_sub(1)) {
            Some(&p) if i >= 1 => i + p as usize - 1,
            _ => i.saturating_sub(1),
        }
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.height() && j >= i && j <= self.row_end(i)
    }

    pub fn boxes(&self) -> BTreeSet<(usize, usize)> {
        (1..=self.height())
            .flat_map(|i| (i..=self.row_end(i)).map(move |j| (i, j)))
            .collect()
    }

    /// Reads a diagram back from a box set, which must be a valid shifted shape.
    pub fn from_boxes(boxes: &BTreeSet<(usize, usize)>) -> Result<Self> {
        let mut parts = Vec::new();
        let mut i = 1;
        let mut seen = 0;
        while seen < boxes.len() {
            let len = (i..).take_while(|&j| boxes.contains(&(i, j))).count();
            if len == 0 {
                return Err(Error::internal(format!("box set has a gap at row {i}")));
            }
            parts.push(len);
            seen += len;
            i += 1;
        }
        let diagram = ShiftedDiagram::new(&parts)?;
        if &diagram.boxes() != boxes {
            return Err(Error::internal("box set is not a shifted diagram"));
        }
        Ok(diagram)
    }

    /// Nim-sum of the parts.
    pub fn nim_sum(&self) -> u32 {
        self.parts.iter().fold(0, |acc, &p| acc ^ p as u32)
    }
}

impl fmt::Display for ShiftedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ShiftedDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(ShiftedDiagram::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ShiftedDiagram::new(&parts)
    }
}

fn check_staircase(n: usize) -> Result<()> {
    if n == 0 || n > MAX_STAIRCASE {
        return Err(Error::domain(format!("staircase size {n} must be in 1..={MAX_STAIRCASE}")));
    }
    Ok(())
}

/// Boxes of the shifted hook at `(i, j)`: the box, its arm, its leg, and the
/// tail, which is the whole of row `j + 1`.
pub fn shifted_hook(s: &ShiftedDiagram, i: usize, j: usize) -> Result<BTreeSet<(usize, usize)>> {
    if !s.contains_box(i, j) {
        return Err(Error::domain(format!("box ({i},{j}) is not in shifted diagram {s}")));
    }
    let mut hook = BTreeSet::new();
    hook.insert((i, j));
    hook.extend((j + 1..=s.row_end(i)).map(|c| (i, c)));
    hook.extend((i + 1..=s.height()).filter(|&r| s.contains_box(r, j)).map(|r| (r, j)));
    let tail = j + 1;
    if tail <= s.height() {
        hook.extend((tail..=s.row_end(tail)).map(|c| (tail, c)));
    }
    Ok(hook)
}

/// Removes the shifted hook at `(i, j)`; boxes in rows strictly between `i`
/// and `j + 1` right of column `j` slide one step up-left, and rows below
/// `j + 1` slide two steps.
pub fn shifted_remove_hook(s: &ShiftedDiagram, i: usize, j: usize) -> Result<ShiftedDiagram> {
    let hook = shifted_hook(s, i, j)?;
    let moved: BTreeSet<(usize, usize)> = s
        .boxes()
        .into_iter()
        .filter(|b| !hook.contains(b))
        .map(|(r, c)| {
            if r > i && r < j + 1 && c > j {
                (r - 1, c - 1)
            } else if r > j + 1 {
                (r - 2, c - 2)
            } else {
                (r, c)
            }
        })
        .collect();
    ShiftedDiagram::from_boxes(&moved)
}

/// Options of `S` in the game on `S_n`, deduplicated and sorted.
pub fn hrg_options(s: &ShiftedDiagram, n: usize) -> Result<Vec<ShiftedDiagram>> {
    check_staircase(n)?;
    if !s.fits(n) {
        return Err(Error::domain(format!("{s} does not fit in the staircase S_{n}")));
    }
    let mut out = BTreeSet::new();
    for (i, j) in s.boxes() {
        out.insert(shifted_remove_hook(s, i, j)?);
    }
    Ok(out.into_iter().collect())
}

/// `F(S_n)`: every shifted diagram inside the staircase, in canonical order.
pub fn all_shifted(n: usize) -> Result<Vec<ShiftedDiagram>> {
    check_staircase(n)?;
    if n > MAX_ENUMERATED_STAIRCASE {
        return Err(Error::RangeTooLarge { what: format!("F(S_{n})"), bound: MAX_ENUMERATED_STAIRCASE });
    }
    let mut out: Vec<ShiftedDiagram> = (0u32..1 << n)
        .map(|mask| ShiftedDiagram {
            parts: (1..=n as u8).rev().filter(|&p| mask >> (p - 1) & 1 == 1).collect(),
        })
        .collect();
    out.sort();
    Ok(out)
}

/// A point of `SD_n`: `(b_0, ..., b_n)` with `b_n = 0` and steps of 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedDiagonalSeq {
    values: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransitionKind {
    /// Decrement `b_l..=b_r`.
    Single { l: usize, r: usize },
    /// Decrement `b_0..=b_r` and then `b_0..=b_r2`, with `r2 < r`.
    Double { r: usize, r2: usize },
}

impl ShiftedDiagonalSeq {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if values.len() < 2 || values.len() > MAX_STAIRCASE + 1 {
            return Err(Error::Validation {
                index: 0,
                reason: format!("length {} is not a staircase size plus one", values.len()),
            });
        }
        for k in 0..values.len() - 1 {
            let step = values[k] as i32 - values[k + 1] as i32;
            if !(0..=1).contains(&step) {
                return Err(Error::Validation {
                    index: k as i64,
                    reason: format!("step from {} to {} is not 0 or 1", values[k], values[k + 1]),
                });
            }
        }
        if *values.last().unwrap() != 0 {
            return Err(Error::Validation {
                index: values.len() as i64 - 1,
                reason: "last entry must be 0".into(),
            });
        }
        Ok(ShiftedDiagonalSeq { values })
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// The staircase size `n`.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    fn apply(&self, ranges: &[(usize, usize)]) -> Option<ShiftedDiagonalSeq> {
        let mut v: Vec<i32> = self.values.iter().map(|&x| x as i32).collect();
        for &(l, r) in ranges {
            for x in &mut v[l..=r] {
                *x -= 1;
            }
        }
        if v.iter().any(|&x| x < 0) {
            return None;
        }
        ShiftedDiagonalSeq::new(v.into_iter().map(|x| x as u8).collect()).ok()
    }
}

impl fmt::Display for ShiftedDiagonalSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `sd(S)`: `b_k` counts the boxes on diagonal `j - i = k`, i.e. the parts
/// larger than `k`.
pub fn shifted_diagonal_of(s: &ShiftedDiagram, n: usize) -> Result<ShiftedDiagonalSeq> {
    check_staircase(n)?;
    if !s.fits(n) {
        return Err(Error::domain(format!("{s} does not fit in the staircase S_{n}")));
    }
    let values = (0..=n).map(|k| s.parts.iter().filter(|&&p| p as usize > k).count() as u8).collect();
    Ok(ShiftedDiagonalSeq { values })
}

/// Inverse of [`shifted_diagonal_of`]: `lambda_i = #{k : b_k >= i}`.
pub fn shifted_diagram_of(seq: &ShiftedDiagonalSeq) -> ShiftedDiagram {
    let height = seq.values[0] as usize;
    let parts = (1..=height)
        .map(|i| seq.values.iter().filter(|&&b| b as usize >= i).count() as u8)
        .collect();
    ShiftedDiagram { parts }
}

/// Every single and double interval transition that stays inside `SD_n`.
pub fn shifted_transitions(seq: &ShiftedDiagonalSeq) -> Vec<(TransitionKind, ShiftedDiagonalSeq)> {
    let n = seq.n();
    let mut out = Vec::new();
    for l in 0..n {
        for r in l..n {
            if let Some(next) = seq.apply(&[(l, r)]) {
                out.push((TransitionKind::Single { l, r }, next));
            }
        }
    }
    for r in 0..n {
        for r2 in 0..r {
            if let Some(next) = seq.apply(&[(0, r), (0, r2)]) {
                out.push((TransitionKind::Double { r, r2 }, next));
            }
        }
    }
    out
}

/// The hook removing game on the staircase `S_n`.
#[derive(Clone, Copy, Debug)]
pub struct HrgGame {
    n: usize,
}

impl HrgGame {
    pub fn new(n: usize) -> Result<Self> {
        check_staircase(n)?;
        Ok(HrgGame { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> ShiftedDiagram {
        ShiftedDiagram::staircase(self.n).expect("size checked at construction")
    }
}

impl ImpartialGame for HrgGame {
    type Position = ShiftedDiagram;

    fn options(&self, pos: &ShiftedDiagram) -> Result<Vec<ShiftedDiagram>> {
        hrg_options(pos, self.n)
    }

    fn identity(&self) -> String {
        format!("hrg:S_{}", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grundy::grundy;

    fn sd(s: &str) -> ShiftedDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!(sd("7,6,4,3,2").height(), 5);
        assert!("3,3".parse::<ShiftedDiagram>().is_err());
        assert!("2,3".parse::<ShiftedDiagram>().is_err());
        assert!("2,0".parse::<ShiftedDiagram>().is_err());
        assert_eq!(sd("-"), ShiftedDiagram::empty());
        assert_eq!(sd("3,1").to_string(), "3,1");
    }

    #[test]
    fn hook_with_tail() {
        let s = sd("7,6,4,3,2");
        let hook = shifted_hook(&s, 2, 3).unwrap();
        let expected: BTreeSet<_> = [(2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 3), (4, 4), (4, 5), (4, 6)]
            .into_iter()
            .collect();
        assert_eq!(hook, expected);
        let hook = shifted_hook(&s, 2, 6).unwrap();
        let expected: BTreeSet<_> = [(2, 6), (2, 7), (3, 6), (4, 6), (5, 6)].into_iter().collect();
        assert_eq!(hook, expected);
        assert_eq!(shifted_hook(&sd("1"), 1, 1).unwrap().len(), 1);
        assert!(shifted_hook(&s, 3, 2).is_err());
        assert!(shifted_hook(&s, 3, 7).is_err());
    }

    #[test]
    fn hook_removal() {
        let s = sd("7,6,4,3,2");
        assert_eq!(shifted_remove_hook(&s, 2, 3).unwrap(), sd("7,4,2"));
        assert_eq!(shifted_remove_hook(&s, 2, 6).unwrap(), sd("7,4,3,2,1"));
        assert_eq!(shifted_remove_hook(&sd("1"), 1, 1).unwrap(), ShiftedDiagram::empty());
    }

    #[test]
    fn options() {
        assert_eq!(hrg_options(&sd("2,1"), 2).unwrap(), vec![sd("-"), sd("1"), sd("2")]);
        assert!(hrg_options(&ShiftedDiagram::empty(), 3).unwrap().is_empty());
        assert!(hrg_options(&sd("4"), 3).is_err());
    }

    #[test]
    fn diagonal_sequences() {
        let s = sd("7,6,4,3,2");
        let seq = shifted_diagonal_of(&s, 7).unwrap();
        assert_eq!(seq.values(), &[5, 5, 4, 3, 2, 2, 1, 0]);
        assert_eq!(shifted_diagram_of(&seq), s);
        assert_eq!(shifted_diagonal_of(&sd("7,4,2"), 7).unwrap().values(), &[3, 3, 2, 2, 1, 1, 1, 0]);
        assert_eq!(shifted_diagonal_of(&ShiftedDiagram::empty(), 4).unwrap().values(), &[0; 5]);
        assert!(ShiftedDiagonalSeq::new(vec![2, 0]).is_err());
        assert!(ShiftedDiagonalSeq::new(vec![1, 1]).is_err());
        assert!(ShiftedDiagonalSeq::new(vec![0, 1, 0]).is_err());
    }

    #[test]
    fn transitions() {
        let seq = ShiftedDiagonalSeq::new(vec![5, 5, 4, 3, 2, 2, 1, 0]).unwrap();
        let all = shifted_transitions(&seq);
        let single = all.iter().find(|t| t.0 == TransitionKind::Single { l: 1, r: 5 }).unwrap();
        assert_eq!(single.1.values(), &[5, 4, 3, 2, 1, 1, 1, 0]);
        let double = all.iter().find(|t| t.0 == TransitionKind::Double { r: 5, r2: 2 }).unwrap();
        assert_eq!(double.1.values(), &[3, 3, 2, 2, 1, 1, 1, 0]);
        let zero = ShiftedDiagonalSeq::new(vec![0; 6]).unwrap();
        assert!(shifted_transitions(&zero).is_empty());
    }

    #[test]
    fn enumeration() {
        assert_eq!(all_shifted(8).unwrap().len(), 256);
        assert!(all_shifted(21).is_err());
        assert!(all_shifted(0).is_err());
    }

    #[test]
    fn grundy_is_nim_sum_on_example() {
        let game = HrgGame::new(7).unwrap();
        assert_eq!(grundy(&game, &sd("7,6,4,3,2")).unwrap(), 4);
    }
}
