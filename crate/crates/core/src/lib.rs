//! Analysis engine for the multiple hook removing game (MHRG) played on
//! rectangular Young diagrams with the unimodal numbering, and for the hook
//! removing game (HRG) on shifted Young diagrams.
//!
//! The crate is organised bottom-up:
//!
//! - [`diagrams`]: boards, Young diagrams, hooks, diagonal expressions.
//! - [`mhrg`]: move generation (a box-level engine and a diagonal engine) and
//!   reachable-set enumeration.
//! - [`shifted`]: shifted diagrams inside a staircase and HRG moves.
//! - [`grundy`]: a generic memoized Sprague-Grundy solver.
//! - [`isomorphisms`]: the structure-preserving maps between games and a
//!   data-driven isomorphism verifier.
//! - [`closedforms`]: closed-form predictors, the 9x9 golden table and the
//!   verification harnesses that pit them against brute force.

pub mod closedforms;
pub mod diagrams;
pub mod error;
pub mod grundy;
pub mod isomorphisms;
pub mod mhrg;
pub mod shifted;

pub use diagrams::{BoardParams, DiagonalSeq, HookRecord, LabelMultiset, YoungDiagram};
pub use error::{Error, Result};
pub use grundy::{grundy, grundy_with, mex, nim_sum, outcome, GrundyMemo, ImpartialGame, Outcome};
pub use mhrg::{Engine, MhrgGame, MhrgPosition, MoveRecord};
pub use shifted::{HrgGame, ShiftedDiagonalSeq, ShiftedDiagram};
