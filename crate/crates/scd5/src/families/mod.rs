//! The nine parallel-chain families and their materialization.
//!
//! For a given box height `n`, [`enumerate_family_params`] lists every
//! feasible `(family, parameters)` pair, and [`materialize_chain`] expands
//! one table row (one choice of row index) into an explicit saturated
//! chain, unfolding the dotted single-coordinate runs and the two-coordinate
//! zigzags between printed anchor rows.

mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::affine::Env;
use crate::error::Error;
use crate::lattice::LatticePoint;

pub(crate) use tables::{table, RowKind, Segment, UMode};

/// Identifier of one of the nine chain families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::C1,
        FamilyId::C2,
        FamilyId::C3,
        FamilyId::C4,
        FamilyId::C5,
        FamilyId::C6,
        FamilyId::C7,
        FamilyId::C8,
        FamilyId::C9,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"][self.index()]
    }

    /// Families whose rows are indexed by pairs `0 <= q <= p <= k` rather
    /// than a single `p`.
    pub fn is_grid(self) -> bool {
        matches!(self, FamilyId::C7 | FamilyId::C8 | FamilyId::C9)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family {s:?} (expected C1..C9)"))
    }
}

/// Fixed (non-row) parameters of a family instance. Parameters a family
/// does not use stay 0: `w` only matters for C7-C9, `j` never does there,
/// and `u` is free in {0, 1} for C3-C6 but forced to `n mod 2` for C7-C9.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub i: u16,
    pub j: u16,
    pub k: u16,
    pub u: u16,
    pub w: u16,
}

/// Row selector within a family: `p` for C1-C6 (`q` stays 0), a pair
/// `(q, p)` for C7-C9.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RowIndex {
    pub p: u16,
    pub q: u16,
}

/// One fully specified parallel chain: family, parameters, row, ambient n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FamilyInstance {
    pub family: FamilyId,
    pub params: FamilyParams,
    pub row: RowIndex,
    pub n: u16,
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let FamilyParams { i, j, k, u, w } = self.params;
        write!(f, "{} i={i} j={j} k={k} u={u} w={w}", self.family)?;
        if self.family.is_grid() {
            write!(f, " q={} p={}", self.row.q, self.row.p)?;
        } else {
            write!(f, " p={}", self.row.p)?;
        }
        write!(f, " (n={})", self.n)
    }
}

/// A saturated run of lattice points together with the table row that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub points: Vec<LatticePoint>,
    pub instance: FamilyInstance,
}

impl Chain {
    pub fn first(&self) -> LatticePoint {
        self.points[0]
    }

    pub fn last(&self) -> LatticePoint {
        *self.points.last().expect("chains are non-empty")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn min_rank(&self) -> u32 {
        self.first().rank()
    }

    pub fn max_rank(&self) -> u32 {
        self.last().rank()
    }
}

/// Largest admissible `p` for the family at these parameters.
pub fn max_p(family: FamilyId, params: &FamilyParams) -> u16 {
    match table(family).row_kind {
        RowKind::PUpToK | RowKind::L2kGrid => params.k,
        RowKind::PUpTo2KPlusU => 2 * params.k + params.u,
    }
}

fn row_in_bounds(family: FamilyId, params: &FamilyParams, row: &RowIndex) -> bool {
    match table(family).row_kind {
        RowKind::PUpToK => row.p <= params.k && row.q == 0,
        RowKind::PUpTo2KPlusU => row.p <= 2 * params.k + params.u && row.q == 0,
        RowKind::L2kGrid => row.q <= row.p && row.p <= params.k,
    }
}

fn env_for(instance: &FamilyInstance) -> Env {
    Env {
        i: i64::from(instance.params.i),
        j: i64::from(instance.params.j),
        k: i64::from(instance.params.k),
        u: i64::from(instance.params.u),
        w: i64::from(instance.params.w),
        p: i64::from(instance.row.p),
        q: i64::from(instance.row.q),
        n: i64::from(instance.n),
    }
}

/// Every feasible `(family, parameters)` pair at box height `n`, in
/// lexicographic order by `(family, i, j, k, u, w)`.
///
/// C1-C6 admit every parameter tuple satisfying the family inequality;
/// C7-C9 require their condition to hold with equality and force
/// `u = n mod 2`. The feasibility left-hand sides are monotone in each of
/// `i, j, k, w`, so the scan prunes each loop as soon as the partial sum
/// passes `n`.
pub fn enumerate_family_params(n: u16) -> Vec<(FamilyId, FamilyParams)> {
    let mut out = Vec::new();
    for t in tables::tables() {
        let mut found = Vec::new();
        let u_values: &[u16] = match t.u_mode {
            UMode::Unused => &[0],
            UMode::Free => &[0, 1],
            UMode::Parity => &[n % 2],
        };
        let lhs = |i: u16, j: u16, k: u16, u: u16, w: u16| {
            t.cond.eval(&Env {
                i: i64::from(i),
                j: i64::from(j),
                k: i64::from(k),
                u: i64::from(u),
                w: i64::from(w),
                ..Env::default()
            })
        };
        for &u in u_values {
            for i in 0.. {
                if (!t.uses_i && i > 0) || lhs(i, 0, 0, u, 0) > i64::from(n) {
                    break;
                }
                for j in 0.. {
                    if (!t.uses_j && j > 0) || lhs(i, j, 0, u, 0) > i64::from(n) {
                        break;
                    }
                    for k in 0.. {
                        if lhs(i, j, k, u, 0) > i64::from(n) {
                            break;
                        }
                        for w in 0.. {
                            let v = lhs(i, j, k, u, w);
                            if (!t.uses_w && w > 0) || v > i64::from(n) {
                                break;
                            }
                            let feasible = if t.exact {
                                v == i64::from(n)
                            } else {
                                v <= i64::from(n)
                            };
                            if feasible {
                                found.push(FamilyParams { i, j, k, u, w });
                            }
                        }
                    }
                }
            }
        }
        found.sort_unstable();
        out.extend(found.into_iter().map(|p| (t.id, p)));
    }
    out
}

/// Expands one table row into its explicit saturated chain.
///
/// Anchor rows are evaluated at the instance's parameters; each single
/// segment then steps its coordinate by 1 until the next anchor, and each
/// zigzag alternates unit steps of its two coordinates starting (and, with
/// an odd step count, ending) with the leader. Every produced point is
/// checked for validity, so a transcription defect in a table surfaces
/// here as an error rather than as corrupt output.
pub fn materialize_chain(instance: &FamilyInstance) -> Result<Chain, Error> {
    let t = table(instance.family);
    if !row_in_bounds(instance.family, &instance.params, &instance.row) {
        return Err(Error::InvalidArgument(format!(
            "row index out of bounds for {instance}"
        )));
    }
    let env = env_for(instance);
    let defect = |detail: String| Error::TableDefect {
        instance: *instance,
        detail,
    };

    let start = match t.start_at_equality {
        Some(row) if t.cond.eval(&env) == env.n => row,
        _ => 0,
    };
    let anchors: Vec<[i64; 5]> = t.rows[start..]
        .iter()
        .map(|row| {
            let mut vals = [0i64; 5];
            for (v, e) in vals.iter_mut().zip(row) {
                *v = e.eval(&env);
            }
            vals
        })
        .collect();

    let n = i64::from(instance.n);
    let as_point = |vals: &[i64; 5], what: &str| -> Result<LatticePoint, Error> {
        let mut coords = [0u16; 5];
        for (c, &v) in coords.iter_mut().zip(vals) {
            if v < 0 || v > n {
                return Err(defect(format!("{what} {vals:?} leaves 0..={n}")));
            }
            *c = v as u16;
        }
        LatticePoint::new(coords)
            .ok_or_else(|| defect(format!("{what} {vals:?} is not weakly increasing")))
    };

    let mut cur = anchors[0];
    let mut points = vec![as_point(&cur, "first anchor")?];
    let step = |cur: &mut [i64; 5], coord: usize, points: &mut Vec<LatticePoint>| {
        cur[coord] += 1;
        as_point(cur, "expansion step").map(|pt| points.push(pt))
    };

    for (anchor_ix, target) in anchors.iter().enumerate().skip(1) {
        let seg = t.segments[start + anchor_ix - 1];
        let moved: Vec<usize> = (0..5).filter(|&c| cur[c] != target[c]).collect();
        match seg {
            Segment::Single(coord) => {
                if moved.iter().any(|&c| c != coord) {
                    return Err(defect(format!(
                        "segment {anchor_ix} declared single on coordinate {coord} but anchors differ at {moved:?}"
                    )));
                }
                let delta = target[coord] - cur[coord];
                if delta < 0 {
                    return Err(defect(format!(
                        "segment {anchor_ix} runs backwards by {delta} on coordinate {coord}"
                    )));
                }
                for _ in 0..delta {
                    step(&mut cur, coord, &mut points)?;
                }
            }
            Segment::Zigzag { leader, follower } => {
                if moved.iter().any(|&c| c != leader && c != follower) {
                    return Err(defect(format!(
                        "segment {anchor_ix} declared zigzag on {leader}/{follower} but anchors differ at {moved:?}"
                    )));
                }
                let dl = target[leader] - cur[leader];
                let df = target[follower] - cur[follower];
                if dl < 0 || df < 0 || (dl != df && dl != df + 1) {
                    return Err(defect(format!(
                        "segment {anchor_ix} zigzag deltas {dl}/{df} are not alternation-shaped"
                    )));
                }
                let mut lead_turn = true;
                while cur[leader] != target[leader] || cur[follower] != target[follower] {
                    let coord = if lead_turn { leader } else { follower };
                    if cur[coord] != target[coord] {
                        step(&mut cur, coord, &mut points)?;
                    }
                    lead_turn = !lead_turn;
                }
            }
        }
    }

    Ok(Chain {
        points,
        instance: *instance,
    })
}

/// The standard symmetric chain decomposition of L(2, k): for each
/// `0 <= t <= k/2` the chain
///
/// `(t,t) -> (t,t+1) -> ... -> (t,k-t) -> (t+1,k-t) -> ... -> (k-t,k-t)`.
///
/// C7-C9 use these chains of `(q, p)` pairs to order their rows.
pub fn l2k_scd(k: u16) -> Vec<Vec<(u16, u16)>> {
    (0..=k / 2)
        .map(|t| {
            let mut chain: Vec<(u16, u16)> = (t..=k - t).map(|p| (t, p)).collect();
            chain.extend((t + 1..=k - t).map(|q| (q, k - t)));
            chain
        })
        .collect()
}
