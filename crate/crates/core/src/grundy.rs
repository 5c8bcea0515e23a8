//! Generic Sprague-Grundy machinery for finite acyclic impartial games.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite impartial game. `identity` names the ruleset and board so that
/// memo tables from different games are never mixed.
pub trait ImpartialGame {
    type Position: Clone + Eq + Hash + Ord;

    fn options(&self, pos: &Self::Position) -> Result<Vec<Self::Position>>;

    fn identity(&self) -> String;
}

/// Minimum excluded value of a list of non-negative integers.
pub fn mex(values: &[u32]) -> u32 {
    let mut seen = vec![false; values.len() + 1];
    for &v in values {
        if (v as usize) < seen.len() {
            seen[v as usize] = true;
        }
    }
    seen.iter().position(|&s| !s).unwrap_or(values.len()) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// The player to move wins.
    N,
    /// The previous player wins.
    P,
}

impl Outcome {
    pub fn from_grundy(g: u32) -> Self {
        if g == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::N => "N",
            Outcome::P => "P",
        })
    }
}

/// Memo table of Grundy values scoped to a single game identity. Entries are
/// written once and never change.
#[derive(Debug)]
pub struct GrundyMemo<P> {
    identity: String,
    values: HashMap<P, u32>,
}

impl<P: Clone + Eq + Hash> GrundyMemo<P> {
    pub fn new<G: ImpartialGame<Position = P>>(game: &G) -> Self {
        GrundyMemo { identity: game.identity(), values: HashMap::new() }
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn get(&self, pos: &P) -> Option<u32> {
        self.values.get(pos).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn insert(&mut self, pos: P, value: u32) -> Result<()> {
        match self.values.insert(pos, value) {
            Some(old) if old != value => Err(Error::internal(format!(
                "memo entry rewritten from {old} to {value}"
            ))),
            _ => Ok(()),
        }
    }
}

/// Grundy value of `pos` using a throwaway memo.
pub fn grundy<G: ImpartialGame>(game: &G, pos: &G::Position) -> Result<u32> {
    let mut memo = GrundyMemo::new(game);
    grundy_with(game, pos, &mut memo)
}

/// Grundy value of `pos`, reusing and extending `memo`. Runs an explicit
/// post-order walk so deep games cannot overflow the call stack.
pub fn grundy_with<G: ImpartialGame>(
    game: &G,
    pos: &G::Position,
    memo: &mut GrundyMemo<G::Position>,
) -> Result<u32> {
    if memo.identity != game.identity() {
        return Err(Error::domain(format!(
            "memo belongs to {:?}, not {:?}",
            memo.identity,
            game.identity()
        )));
    }
    if let Some(v) = memo.get(pos) {
        return Ok(v);
    }
    struct Frame<P> {
        pos: P,
        options: Vec<P>,
        next: usize,
    }
    let mut on_stack: HashSet<G::Position> = HashSet::new();
    let mut stack = vec![Frame { options: game.options(pos)?, pos: pos.clone(), next: 0 }];
    on_stack.insert(pos.clone());
    while let Some(top) = stack.last_mut() {
        if top.next < top.options.len() {
            let child = top.options[top.next].clone();
            top.next += 1;
            if memo.get(&child).is_some() {
                continue;
            }
            if !on_stack.insert(child.clone()) {
                return Err(Error::domain("the option graph contains a cycle"));
            }
            let options = game.options(&child)?;
            stack.push(Frame { pos: child, options, next: 0 });
        } else {
            let frame = stack.pop().expect("stack is non-empty");
            let values: Vec<u32> = frame
                .options
                .iter()
                .map(|o| memo.get(o).expect("children are solved first"))
                .collect();
            on_stack.remove(&frame.pos);
            memo.insert(frame.pos, mex(&values))?;
        }
    }
    Ok(memo.get(pos).expect("root was solved"))
}

/// Outcome class of `pos`: P exactly when its Grundy value is 0.
pub fn outcome<G: ImpartialGame>(game: &G, pos: &G::Position) -> Result<Outcome> {
    grundy(game, pos).map(Outcome::from_grundy)
}

/// Nim-sum of a list of values.
pub fn nim_sum(values: impl IntoIterator<Item = u32>) -> u32 {
    values.into_iter().fold(0, |acc, v| acc ^ v)
}

/// Every position reachable from `start` (including it), in canonical order.
/// Fails with [`Error::RangeTooLarge`] once more than `limit` positions are seen.
pub fn closure<G: ImpartialGame>(
    game: &G,
    start: &G::Position,
    limit: usize,
) -> Result<BTreeSet<G::Position>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(pos) = queue.pop_front() {
        for opt in game.options(&pos)? {
            if seen.insert(opt.clone()) {
                if seen.len() > limit {
                    return Err(Error::RangeTooLarge { what: "reachable set".into(), bound: limit });
                }
                queue.push_back(opt);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Subtraction game with moves {1, 2}: values cycle 0, 1, 2.
    struct Subtraction;

    impl ImpartialGame for Subtraction {
        type Position = u32;
        fn options(&self, pos: &u32) -> Result<Vec<u32>> {
            Ok([1, 2].iter().filter(|&&s| s <= *pos).map(|s| pos - s).collect())
        }
        fn identity(&self) -> String {
            "subtraction{1,2}".into()
        }
    }

    /// Nim heap where any positive amount may be taken.
    struct Heap;

    impl ImpartialGame for Heap {
        type Position = u32;
        fn options(&self, pos: &u32) -> Result<Vec<u32>> {
            Ok((0..*pos).collect())
        }
        fn identity(&self) -> String {
            "heap".into()
        }
    }

    struct Loop;

    impl ImpartialGame for Loop {
        type Position = u32;
        fn options(&self, pos: &u32) -> Result<Vec<u32>> {
            Ok(vec![(pos + 1) % 3])
        }
        fn identity(&self) -> String {
            "loop".into()
        }
    }

    #[test]
    fn mex_values() {
        assert_eq!(mex(&[]), 0);
        assert_eq!(mex(&[0, 1, 3]), 2);
        assert_eq!(mex(&[1, 2]), 0);
        assert_eq!(mex(&[2, 0, 1, 1]), 3);
        assert_eq!(mex(&[7, 9]), 0);
    }

    #[test]
    fn subtraction_game_values() {
        for n in 0..30 {
            assert_eq!(grundy(&Subtraction, &n).unwrap(), n % 3);
        }
    }

    #[test]
    fn nim_heap_values() {
        let mut memo = GrundyMemo::new(&Heap);
        for n in 0..40 {
            assert_eq!(grundy_with(&Heap, &n, &mut memo).unwrap(), n);
        }
        assert_eq!(memo.len(), 40);
    }

    #[test]
    fn deep_game_does_not_overflow() {
        assert_eq!(grundy(&Subtraction, &200_000).unwrap(), 200_000 % 3);
    }

    #[test]
    fn memo_is_scoped_to_its_game() {
        let mut memo = GrundyMemo::new(&Heap);
        assert!(grundy_with(&Subtraction, &3, &mut memo).is_err());
    }

    #[test]
    fn cycles_are_reported() {
        assert!(grundy(&Loop, &0).is_err());
    }

    #[test]
    fn closure_and_limits() {
        assert_eq!(closure(&Heap, &5, 100).unwrap().len(), 6);
        assert!(matches!(closure(&Heap, &5, 3), Err(Error::RangeTooLarge { .. })));
    }

    #[test]
    fn outcomes() {
        assert_eq!(Outcome::from_grundy(0), Outcome::P);
        assert_eq!(Outcome::from_grundy(4).to_string(), "N");
    }
}
