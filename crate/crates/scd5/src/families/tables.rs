//! Symbolic encodings of the nine parallel-chain families.
//!
//! Each family is a list of printed anchor rows (5-vectors of affine forms
//! in `i, j, k, u, w, p, q, n`) plus a segment plan saying how consecutive
//! anchors are connected: either a single coordinate stepping by 1 until it
//! reaches the next anchor, or a zigzag in which two designated coordinates
//! alternate unit steps, the leader moving first (and also last when it has
//! one more step than the follower). A transcription slip in a row or plan
//! surfaces as a saturation failure during materialization, never as silent
//! bad output.

use std::sync::LazyLock;

use crate::affine::{Affine, I, J, K, N, P, Q, U, W};
use crate::families::FamilyId;

/// How two consecutive anchor rows are joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Segment {
    /// One coordinate (0-based index) climbs by unit steps.
    Single(usize),
    /// Two coordinates alternate unit steps; `leader` moves first and,
    /// when its step count exceeds the follower's by one, also last.
    Zigzag { leader: usize, follower: usize },
}

/// Which values of `u` a family admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum UMode {
    /// `u` is not a parameter of the family (fixed 0).
    Unused,
    /// `u` ranges over {0, 1}.
    Free,
    /// `u` is forced to `n mod 2`.
    Parity,
}

/// How the row index set of a family is shaped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RowKind {
    /// Rows indexed by `0 <= p <= k`.
    PUpToK,
    /// Rows indexed by `0 <= p <= 2k + u`.
    PUpTo2KPlusU,
    /// Rows indexed by pairs `0 <= q <= p <= k`, grouped along the
    /// symmetric chains of L(2, k).
    L2kGrid,
}

pub(crate) struct Table {
    pub id: FamilyId,
    /// Left side of the feasibility condition, compared against `n`.
    pub cond: Affine,
    /// Condition is an equality (`cond = n`) rather than `cond <= n`.
    pub exact: bool,
    pub u_mode: UMode,
    pub uses_i: bool,
    pub uses_j: bool,
    pub uses_w: bool,
    pub row_kind: RowKind,
    /// Anchor index where chains begin when the condition holds with
    /// equality; the earlier anchors would need a negative dotted run.
    pub start_at_equality: Option<usize>,
    /// Ladder rows are ordered by ascending first-point rank; this family
    /// ranks its rows in descending `p`, so assembly reverses them.
    pub reverse_rows: bool,
    pub rows: Vec<[Affine; 5]>,
    pub segments: Vec<Segment>,
}

use Segment::{Single, Zigzag};

fn c1() -> Table {
    Table {
        id: FamilyId::C1,
        cond: 2 + 2 * I + 2 * J + 3 * K,
        exact: false,
        u_mode: UMode::Unused,
        uses_i: true,
        uses_j: true,
        uses_w: false,
        row_kind: RowKind::PUpToK,
        start_at_equality: None,
        reverse_rows: false,
        rows: vec![
            [P, K, J + K, 1 + I + J + 2 * K, 1 + I + 2 * J + 2 * K],
            [P, K, 1 + I + J + K + P, 1 + I + J + 2 * K, 1 + I + 2 * J + 2 * K],
            [P, 1 + I + J + K, 1 + I + J + K + P, 1 + I + J + 2 * K, 1 + I + 2 * J + 2 * K],
            [1 + I + K, 1 + I + J + K, 1 + I + J + K + P, 1 + I + J + 2 * K, 1 + I + 2 * J + 2 * K],
            [1 + I + K, 1 + I + J + K, 1 + I + J + K + P, 1 + I + J + 2 * K, -K + N + P],
            [1 + I + K, 1 + I + J + K, 1 + I + J + K + P, -K + N, -K + N + P],
            [1 + I + K, 1 + I + J + K, -J - K + N, -K + N, -K + N + P],
            [1 + I + K, -1 - I - J - 2 * K + N, -J - K + N, -K + N, -K + N + P],
            [-1 - I - 2 * J - 2 * K + N, -1 - I - J - 2 * K + N, -J - K + N, -K + N, -K + N + P],
        ],
        segments: vec![
            Single(2),
            Single(1),
            Single(0),
            Single(4),
            Single(3),
            Single(2),
            Single(1),
            Single(0),
        ],
    }
}

fn c2() -> Table {
    Table {
        id: FamilyId::C2,
        cond: 3 + 2 * I + 2 * J + 3 * K,
        exact: false,
        u_mode: UMode::Unused,
        uses_i: true,
        uses_j: true,
        uses_w: false,
        row_kind: RowKind::PUpToK,
        start_at_equality: None,
        reverse_rows: true,
        rows: vec![
            [K - P, K, J + K, 1 + I + J + 2 * K, 2 + I + 2 * J + 2 * K],
            [K - P, K, J + K, 1 + I + J + 2 * K, -1 - I - K + N],
            [K - P, K, J + K, -1 - I - J - K + N, -1 - I - K + N],
            [K - P, K, -1 - I - J - K + N - P, -1 - I - J - K + N, -1 - I - K + N],
            [K - P, -1 - I - J - 2 * K + N, -1 - I - J - K + N - P, -1 - I - J - K + N, -1 - I - K + N],
            [-1 - I - 2 * J - 2 * K + N, -1 - I - J - 2 * K + N, -1 - I - J - K + N - P, -1 - I - J - K + N, -1 - I - K + N],
            [-1 - I - 2 * J - 2 * K + N, -1 - I - J - 2 * K + N, -1 - I - J - K + N - P, -1 - I - J - K + N, N - P],
            [-1 - I - 2 * J - 2 * K + N, -1 - I - J - 2 * K + N, -1 - I - J - K + N - P, -K + N, N - P],
            [-1 - I - 2 * J - 2 * K + N, -1 - I - J - 2 * K + N, -1 - J - K + N, -K + N, N - P],
        ],
        segments: vec![
            Single(4),
            Single(3),
            Single(2),
            Single(1),
            Single(0),
            Single(4),
            Single(3),
            Single(2),
        ],
    }
}

fn c3() -> Table {
    Table {
        id: FamilyId::C3,
        cond: 2 * U + 1 + 6 * J + 4 * K + 3 * I,
        exact: false,
        u_mode: UMode::Free,
        uses_i: true,
        uses_j: true,
        uses_w: false,
        row_kind: RowKind::PUpTo2KPlusU,
        start_at_equality: None,
        reverse_rows: false,
        rows: vec![
            [2 * J, I + 2 * J + P, I + 2 * J + 2 * K + U, 2 * I + 4 * J + 2 * K + U, 2 * I + 4 * J + 4 * K + 2 * U],
            [I + 2 * J, I + 2 * J + P, 2 * I + 2 * J + 2 * K + U, 2 * I + 4 * J + 2 * K + U, 2 * I + 4 * J + 4 * K + 2 * U],
            [I + 2 * J, I + 2 * J + P, 2 * I + 2 * J + 2 * K + U, 2 * I + 4 * J + 2 * K + U, -2 * J + N],
            [I + 2 * J, I + 2 * J + P, 2 * I + 2 * J + 2 * K + U, -I - 2 * J - 2 * K + N + P - U, -2 * J + N],
            [I + 2 * J, I + 2 * J + P, -I - 2 * J - 2 * K + N - U, -I - 2 * J - 2 * K + N + P - U, -2 * J + N],
            [I + 2 * J, -2 * I - 4 * J - 2 * K + N - U, -I - 2 * J - 2 * K + N - U, -I - 2 * J - 2 * K + N + P - U, -2 * J + N],
            [-2 * I - 4 * J - 4 * K + N - 2 * U, -2 * I - 4 * J - 2 * K + N - U, -I - 2 * J - 2 * K + N - U, -I - 2 * J - 2 * K + N + P - U, -2 * J + N],
        ],
        segments: vec![
            Zigzag { leader: 0, follower: 2 },
            Single(4),
            Single(3),
            Single(2),
            Single(1),
            Single(0),
        ],
    }
}

fn c4() -> Table {
    Table {
        id: FamilyId::C4,
        cond: 2 * U + 4 + 6 * J + 4 * K + 3 * I,
        exact: false,
        u_mode: UMode::Free,
        uses_i: true,
        uses_j: true,
        uses_w: false,
        row_kind: RowKind::PUpTo2KPlusU,
        start_at_equality: None,
        reverse_rows: false,
        rows: vec![
            [1 + 2 * J, 1 + I + 2 * J + P, 1 + I + 2 * J + 2 * K + U, 2 + 2 * I + 4 * J + 2 * K + U, 3 + 2 * I + 4 * J + 4 * K + 2 * U],
            [1 + I + 2 * J, 1 + I + 2 * J + P, 1 + 2 * I + 2 * J + 2 * K + U, 2 + 2 * I + 4 * J + 2 * K + U, 3 + 2 * I + 4 * J + 4 * K + 2 * U],
            [1 + I + 2 * J, 1 + I + 2 * J + P, 1 + 2 * I + 2 * J + 2 * K + U, 2 + 2 * I + 4 * J + 2 * K + U, -1 - 2 * J + N],
            [1 + I + 2 * J, 1 + I + 2 * J + P, 1 + 2 * I + 2 * J + 2 * K + U, -1 - I - 2 * J - 2 * K + N + P - U, -1 - 2 * J + N],
            [1 + I + 2 * J, 1 + I + 2 * J + P, -1 - I - 2 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N + P - U, -1 - 2 * J + N],
            [1 + I + 2 * J, -2 - 2 * I - 4 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N + P - U, -1 - 2 * J + N],
            [-3 - 2 * I - 4 * J - 4 * K + N - 2 * U, -2 - 2 * I - 4 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N + P - U, -1 - 2 * J + N],
        ],
        segments: vec![
            Zigzag { leader: 2, follower: 0 },
            Single(4),
            Single(3),
            Single(2),
            Single(1),
            Single(0),
        ],
    }
}

fn c5() -> Table {
    Table {
        id: FamilyId::C5,
        cond: 2 * U + 4 + 6 * J + 4 * K + 3 * I,
        exact: false,
        u_mode: UMode::Free,
        uses_i: true,
        uses_j: true,
        uses_w: false,
        row_kind: RowKind::PUpTo2KPlusU,
        start_at_equality: None,
        reverse_rows: false,
        rows: vec![
            [2 * J, 1 + I + 2 * J + P, 1 + I + 2 * J + 2 * K + U, 2 + 2 * I + 4 * J + 2 * K + U, 3 + 2 * I + 4 * J + 4 * K + 2 * U],
            [2 * J, 1 + I + 2 * J + P, 1 + I + 2 * J + 2 * K + U, 2 + 2 * I + 4 * J + 2 * K + U, -1 - I - 2 * J + N],
            [2 * J, 1 + I + 2 * J + P, 1 + I + 2 * J + 2 * K + U, -1 - I - 2 * J - 2 * K + N + P - U, -1 - I - 2 * J + N],
            [2 * J, 1 + I + 2 * J + P, -2 - 2 * I - 2 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N + P - U, -1 - I - 2 * J + N],
            [2 * J, -2 - 2 * I - 4 * J - 2 * K + N - U, -2 - 2 * I - 2 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N + P - U, -1 - I - 2 * J + N],
            [-2 - 2 * I - 4 * J - 4 * K + N - 2 * U, -2 - 2 * I - 4 * J - 2 * K + N - U, -2 - 2 * I - 2 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N + P - U, -1 - I - 2 * J + N],
            [-2 - 2 * I - 4 * J - 4 * K + N - 2 * U, -2 - 2 * I - 4 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N - U, -1 - I - 2 * J - 2 * K + N + P - U, -1 - 2 * J + N],
        ],
        segments: vec![
            Single(4),
            Single(3),
            Single(2),
            Single(1),
            Single(0),
            Zigzag { leader: 2, follower: 4 },
        ],
    }
}

fn c6() -> Table {
    Table {
        id: FamilyId::C6,
        cond: 2 * U + 7 + 6 * J + 4 * K + 3 * I,
        exact: false,
        u_mode: UMode::Free,
        uses_i: true,
        uses_j: true,
        uses_w: false,
        row_kind: RowKind::PUpTo2KPlusU,
        // At equality the opening dotted run on a5 would be negative; the
        // chain begins at anchor 2 instead.
        start_at_equality: Some(2),
        reverse_rows: false,
        rows: vec![
            [1 + 2 * J, 2 + I + 2 * J + P, 2 + I + 2 * J + 2 * K + U, 4 + 2 * I + 4 * J + 2 * K + U, 6 + 2 * I + 4 * J + 4 * K + 2 * U],
            [1 + 2 * J, 2 + I + 2 * J + P, 2 + I + 2 * J + 2 * K + U, 4 + 2 * I + 4 * J + 2 * K + U, -2 - I - 2 * J + N],
            [1 + 2 * J, 2 + I + 2 * J + P, 2 + I + 2 * J + 2 * K + U, 5 + 2 * I + 4 * J + 2 * K + U, -2 - I - 2 * J + N],
            [1 + 2 * J, 2 + I + 2 * J + P, 2 + I + 2 * J + 2 * K + U, -2 - I - 2 * J - 2 * K + N + P - U, -2 - I - 2 * J + N],
            [1 + 2 * J, 2 + I + 2 * J + P, -3 - 2 * I - 2 * J - 2 * K + N - U, -2 - I - 2 * J - 2 * K + N + P - U, -2 - I - 2 * J + N],
            [1 + 2 * J, -4 - 2 * I - 4 * J - 2 * K + N - U, -3 - 2 * I - 2 * J - 2 * K + N - U, -2 - I - 2 * J - 2 * K + N + P - U, -2 - I - 2 * J + N],
            [-5 - 2 * I - 4 * J - 4 * K + N - 2 * U, -4 - 2 * I - 4 * J - 2 * K + N - U, -3 - 2 * I - 2 * J - 2 * K + N - U, -2 - I - 2 * J - 2 * K + N + P - U, -2 - I - 2 * J + N],
            [-5 - 2 * I - 4 * J - 4 * K + N - 2 * U, -4 - 2 * I - 4 * J - 2 * K + N - U, -3 - I - 2 * J - 2 * K + N - U, -2 - I - 2 * J - 2 * K + N + P - U, -1 - 2 * J + N],
        ],
        segments: vec![
            Single(4),
            Single(3),
            Single(3),
            Single(2),
            Single(1),
            Single(0),
            Zigzag { leader: 4, follower: 2 },
        ],
    }
}

fn c7() -> Table {
    Table {
        id: FamilyId::C7,
        cond: 6 + 3 * U + 6 * W + 6 * I + 2 * K,
        exact: true,
        u_mode: UMode::Parity,
        uses_i: true,
        uses_j: false,
        uses_w: true,
        row_kind: RowKind::L2kGrid,
        start_at_equality: None,
        reverse_rows: false,
        rows: vec![
            [1 + I, 2 + 2 * I + P + U + 2 * W, 3 + 3 * I + K + U + 2 * W, 4 + 4 * I + K + Q + 2 * U + 4 * W, 4 + 4 * I + 2 * K + 2 * U + 4 * W],
            [1 + I + U + 2 * W, 2 + 2 * I + P + U + 2 * W, 3 + 3 * I + K + U + 2 * W, 4 + 4 * I + K + Q + 2 * U + 4 * W, 4 + 4 * I + 2 * K + 2 * U + 4 * W],
            [1 + I + U + 2 * W, 2 + 2 * I + P + U + 2 * W, 3 + 3 * I + K + 2 * U + 4 * W, 4 + 4 * I + K + Q + 2 * U + 4 * W, 4 + 4 * I + 2 * K + 2 * U + 4 * W],
            [1 + I + U + 2 * W, 2 + 2 * I + P + U + 2 * W, 3 + 3 * I + K + 2 * U + 4 * W, 4 + 4 * I + K + Q + 2 * U + 4 * W, 5 + 4 * I + 2 * K + 2 * U + 4 * W],
            [1 + 2 * I + U + 2 * W, 2 + 2 * I + P + U + 2 * W, 3 + 3 * I + K + 2 * U + 4 * W, 4 + 4 * I + K + Q + 2 * U + 4 * W, 5 + 4 * I + 2 * K + 2 * U + 4 * W],
            [1 + 2 * I + U + 2 * W, 2 + 2 * I + P + U + 2 * W, 3 + 3 * I + K + 2 * U + 4 * W, 4 + 4 * I + K + Q + 2 * U + 4 * W, 5 + 5 * I + 2 * K + 3 * U + 6 * W],
            [2 + 2 * I + U + 2 * W, 2 + 2 * I + P + U + 2 * W, 3 + 3 * I + K + 2 * U + 4 * W, 4 + 4 * I + K + Q + 2 * U + 4 * W, 5 + 5 * I + 2 * K + 3 * U + 6 * W],
        ],
        segments: vec![
            Single(0),
            Single(2),
            Single(4),
            Single(0),
            Single(4),
            Single(0),
        ],
    }
}

fn c8() -> Table {
    Table {
        id: FamilyId::C8,
        cond: 12 - 3 * U + 6 * W + 6 * I + 2 * K,
        exact: true,
        u_mode: UMode::Parity,
        uses_i: true,
        uses_j: false,
        uses_w: true,
        row_kind: RowKind::L2kGrid,
        start_at_equality: None,
        reverse_rows: false,
        rows: vec![
            [1 + I, 4 + 2 * I + P - U + 2 * W, 5 + 3 * I + K - U + 2 * W, 8 + 4 * I + K + Q - 2 * U + 4 * W, 9 + 4 * I + 2 * K - 2 * U + 4 * W],
            [3 + 2 * I - U + 2 * W, 4 + 2 * I + P - U + 2 * W, 5 + 3 * I + K - U + 2 * W, 8 + 4 * I + K + Q - 2 * U + 4 * W, 9 + 4 * I + 2 * K - 2 * U + 4 * W],
            [3 + 2 * I - U + 2 * W, 4 + 2 * I + P - U + 2 * W, 5 + 3 * I + K - U + 2 * W, 8 + 4 * I + K + Q - 2 * U + 4 * W, 9 + 5 * I + 2 * K - 2 * U + 4 * W],
            [4 + 2 * I - U + 2 * W, 4 + 2 * I + P - U + 2 * W, 5 + 3 * I + K - U + 2 * W, 8 + 4 * I + K + Q - 2 * U + 4 * W, 9 + 5 * I + 2 * K - 2 * U + 4 * W],
            [4 + 2 * I - U + 2 * W, 4 + 2 * I + P - U + 2 * W, 7 + 3 * I + K - 2 * U + 4 * W, 8 + 4 * I + K + Q - 2 * U + 4 * W, 9 + 5 * I + 2 * K - 2 * U + 4 * W],
            [4 + 2 * I - U + 2 * W, 4 + 2 * I + P - U + 2 * W, 7 + 3 * I + K - 2 * U + 4 * W, 8 + 4 * I + K + Q - 2 * U + 4 * W, 10 + 5 * I + 2 * K - 3 * U + 6 * W],
        ],
        segments: vec![
            Single(0),
            Single(4),
            Single(0),
            Single(2),
            Single(4),
        ],
    }
}

fn c9() -> Table {
    Table {
        id: FamilyId::C9,
        cond: 2 * K + 3 * U + 6 * W,
        exact: true,
        u_mode: UMode::Parity,
        uses_i: false,
        uses_j: false,
        uses_w: true,
        row_kind: RowKind::L2kGrid,
        start_at_equality: None,
        reverse_rows: false,
        rows: vec![
            [Affine::constant(0), P + U + 2 * W, K + U + 2 * W, K + Q + 2 * U + 4 * W, 2 * K + 2 * U + 4 * W],
            [U + 2 * W, P + U + 2 * W, K + U + 2 * W, K + Q + 2 * U + 4 * W, 2 * K + 2 * U + 4 * W],
            [U + 2 * W, P + U + 2 * W, K + 2 * U + 4 * W, K + Q + 2 * U + 4 * W, 2 * K + 2 * U + 4 * W],
            [U + 2 * W, P + U + 2 * W, K + 2 * U + 4 * W, K + Q + 2 * U + 4 * W, 2 * K + 3 * U + 6 * W],
        ],
        segments: vec![Single(0), Single(2), Single(4)],
    }
}

static TABLES: LazyLock<[Table; 9]> = LazyLock::new(|| {
    let all = [c1(), c2(), c3(), c4(), c5(), c6(), c7(), c8(), c9()];
    for t in &all {
        assert_eq!(t.rows.len(), t.segments.len() + 1, "{:?} plan shape", t.id);
    }
    all
});

pub(crate) fn tables() -> &'static [Table; 9] {
    &TABLES
}

pub(crate) fn table(id: FamilyId) -> &'static Table {
    &tables()[id.index()]
}
