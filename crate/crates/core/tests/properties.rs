use std::collections::BTreeSet;

use hookgame::diagrams::{
    decrement_interval, diagonal_of, diagram_of, hook_at, hook_boxes, label_multiset, remove_hook,
    unimodal_number, BoardParams, Bulge, YoungDiagram,
};
use hookgame::grundy::{grundy_with, GrundyMemo, ImpartialGame};
use hookgame::mhrg::{diagonal_successors, MhrgGame, MhrgPosition};
use hookgame::shifted::{
    hrg_options, shifted_diagonal_of, shifted_diagram_of, shifted_transitions, ShiftedDiagram,
};
use proptest::prelude::*;

/// A board and a diagram inside it.
fn board_and_diagram() -> impl Strategy<Value = (BoardParams, YoungDiagram)> {
    (1usize..=8, 0usize..=4)
        .prop_flat_map(|(m, extra)| {
            let n = m + extra;
            (Just(m), Just(n), proptest::collection::vec(0..=n, m))
        })
        .prop_map(|(m, n, mut rows)| {
            rows.sort_unstable_by(|a, b| b.cmp(a));
            (BoardParams::new(m, n).unwrap(), YoungDiagram::new(&rows).unwrap())
        })
}

/// Hook removal done literally on box sets: drop the hook, then move every
/// box strictly south-east of the corner one step up-left.
fn remove_hook_oracle(y: &YoungDiagram, i: usize, j: usize) -> YoungDiagram {
    let hook: BTreeSet<_> = hook_boxes(y, i, j).unwrap().into_iter().collect();
    let boxes: BTreeSet<(usize, usize)> = y
        .boxes()
        .filter(|b| !hook.contains(b))
        .map(|(r, c)| if r > i && c > j { (r - 1, c - 1) } else { (r, c) })
        .collect();
    let rows: Vec<usize> = (1..).map(|r| boxes.iter().filter(|b| b.0 == r).count()).take_while(|&c| c > 0).collect();
    let out = YoungDiagram::new(&rows).unwrap();
    assert_eq!(out.boxes().collect::<BTreeSet<_>>(), boxes, "result is not left-justified");
    out
}

fn shifted_in(n: usize) -> impl Strategy<Value = ShiftedDiagram> {
    proptest::collection::btree_set(1..=n, 0..=n).prop_map(|set| {
        let parts: Vec<usize> = set.into_iter().rev().collect();
        ShiftedDiagram::new(&parts).unwrap()
    })
}

proptest! {
    #[test]
    fn diagonal_round_trip((board, y) in board_and_diagram()) {
        let d = diagonal_of(&board, &y).unwrap();
        prop_assert_eq!(d.size(), y.size());
        prop_assert_eq!(diagram_of(&d), y);
    }

    #[test]
    fn hook_removal_matches_box_oracle((board, y) in board_and_diagram()) {
        let _ = board;
        for (i, j) in y.boxes() {
            prop_assert_eq!(remove_hook(&y, i, j).unwrap(), remove_hook_oracle(&y, i, j));
        }
    }

    #[test]
    fn hooks_are_accepted_interval_decrements((board, y) in board_and_diagram()) {
        let d = diagonal_of(&board, &y).unwrap();
        let mut from_hooks = BTreeSet::new();
        for (i, j) in y.boxes() {
            let h = hook_at(&board, &y, i, j).unwrap();
            prop_assert_eq!(h.labels.len(), (h.r - h.l + 1) as usize);
            let after = decrement_interval(&d, h.l, h.r).unwrap();
            prop_assert_eq!(after, Ok(diagonal_of(&board, &remove_hook(&y, i, j).unwrap()).unwrap()));
            from_hooks.insert((h.l, h.r));
        }
        let (m, n) = (board.m() as i64, board.n() as i64);
        let mut accepted = BTreeSet::new();
        for l in (-m + 1)..n {
            for r in l..n {
                if decrement_interval(&d, l, r).unwrap().is_ok() {
                    accepted.insert((l, r));
                }
            }
        }
        prop_assert_eq!(accepted, from_hooks);
    }

    #[test]
    fn label_counts_from_diagonals((board, y) in board_and_diagram()) {
        let d = diagonal_of(&board, &y).unwrap();
        let labels = label_multiset(&board, &y).unwrap();
        let (m, n) = (board.m() as i64, board.n() as i64);
        for k in 1..=board.max_label() as i64 {
            let (a, b) = (-m + k, n - k);
            let expected = if a == b { d.get(a) as usize } else { d.get(a) as usize + d.get(b) as usize };
            prop_assert_eq!(labels.count(k as usize), expected);
        }
        let brute: usize = y.boxes().filter(|&(i, j)| unimodal_number(&board, i, j).unwrap() == 1).count();
        prop_assert_eq!(labels.count(1), brute);
    }

    #[test]
    fn every_pair_is_exactly_one_bulge((board, y) in board_and_diagram()) {
        let d = diagonal_of(&board, &y).unwrap();
        let (m, n) = (board.m() as i64, board.n() as i64);
        for k in (-m + 1)..=n {
            let kind = d.bulge_kind(k).unwrap();
            let (prev, cur) = (d.get(k - 1) as i32, d.get(k) as i32);
            let diff = if k <= 0 { cur - prev } else { prev - cur };
            let left_expected = if k <= 0 { diff == 0 } else { diff == 1 };
            prop_assert_eq!(kind == Bulge::Left, left_expected);
        }
    }

    #[test]
    fn options_shrink_and_stay_on_board((board, y) in board_and_diagram()) {
        let d = diagonal_of(&board, &y).unwrap();
        for next in diagonal_successors(&d).into_iter().map(|s| s.result) {
            prop_assert!(next.size() < d.size());
            let back = diagram_of(&next);
            prop_assert!(board.contains(&back));
        }
    }

    #[test]
    fn shifted_round_trip(s in shifted_in(12)) {
        let sd = shifted_diagonal_of(&s, 12).unwrap();
        prop_assert_eq!(shifted_diagram_of(&sd), s);
    }

    #[test]
    fn shifted_hooks_match_transitions(s in shifted_in(9)) {
        let sd = shifted_diagonal_of(&s, 9).unwrap();
        let by_hooks: BTreeSet<_> = hrg_options(&s, 9).unwrap().into_iter()
            .map(|o| shifted_diagonal_of(&o, 9).unwrap())
            .collect();
        let by_transitions: BTreeSet<_> = shifted_transitions(&sd).into_iter().map(|(_, t)| t).collect();
        prop_assert_eq!(by_hooks, by_transitions);
    }
}

#[test]
fn shifted_hooks_match_transitions_exhaustively() {
    for s in hookgame::shifted::all_shifted(7).unwrap() {
        let sd = shifted_diagonal_of(&s, 7).unwrap();
        let by_hooks: BTreeSet<_> =
            hrg_options(&s, 7).unwrap().into_iter().map(|o| shifted_diagonal_of(&o, 7).unwrap()).collect();
        let by_transitions: BTreeSet<_> = shifted_transitions(&sd).into_iter().map(|(_, t)| t).collect();
        assert_eq!(by_hooks, by_transitions, "at {s}");
    }
}

#[test]
fn grundy_is_bounded_by_option_count_and_order_independent() {
    let board = BoardParams::new(4, 6).unwrap();
    let game = MhrgGame::new(board);
    let all = board.all_diagrams();
    let mut forward = GrundyMemo::new(&game);
    let mut backward = GrundyMemo::new(&game);
    for y in &all {
        let pos = MhrgPosition::new(board, y.clone()).unwrap();
        let g = grundy_with(&game, &pos, &mut forward).unwrap();
        assert!(g as usize <= game.options(&pos).unwrap().len());
    }
    for y in all.iter().rev() {
        let pos = MhrgPosition::new(board, y.clone()).unwrap();
        grundy_with(&game, &pos, &mut backward).unwrap();
    }
    for y in &all {
        let pos = MhrgPosition::new(board, y.clone()).unwrap();
        assert_eq!(forward.get(&pos), backward.get(&pos));
    }
}
