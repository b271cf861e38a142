//! Grouping parallel chains into rectangles and peeling perimeters.
//!
//! For fixed non-row parameters, a family's rows are equally long chains
//! whose endpoints climb one rank per row: stacked in rank order they form
//! a rectangle (a "ladder"). Its perimeter splits into two saturated
//! symmetric chains, one of which holds both extreme corners; peeling
//! perimeters recursively decomposes the whole ladder. C1-C6 ladders take
//! one row per `p`; C7-C9 order their rows along the symmetric chains of
//! L(2, k) over the row pairs `(q, p)`.

use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

use crate::error::Error;
use crate::families::{
    self, enumerate_family_params, l2k_scd, materialize_chain, Chain, FamilyId, FamilyInstance,
    FamilyParams, RowIndex,
};
use crate::lattice::{covers, LatticePoint, MAX_N};

/// Identity of one ladder: family, fixed parameters, and for C7-C9 the
/// index of the L(2, k) chain supplying the rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LadderKey {
    pub family: FamilyId,
    pub params: FamilyParams,
    pub l2k_layer: Option<u16>,
}

impl fmt::Display for LadderKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let FamilyParams { i, j, k, u, w } = self.params;
        write!(f, "{} i={i} j={j} k={k} u={u} w={w}", self.family)?;
        if let Some(t) = self.l2k_layer {
            write!(f, " t={t}")?;
        }
        Ok(())
    }
}

/// A rectangle of parallel chains. `rows[0]` has the lowest ranks; row
/// `r + 1` sits exactly one rank above row `r`, column by column.
#[derive(Clone, Debug)]
pub struct Ladder {
    pub key: LadderKey,
    pub n: u16,
    pub rows: Vec<Chain>,
}

impl Ladder {
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows[0].len()
    }

    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.rows.iter().flat_map(|row| row.points.iter().copied())
    }

    /// Checks every rectangle invariant; any violation is a family
    /// encoding bug, reported with the offending ladder's key.
    pub fn validate(&self) -> Result<(), Error> {
        let fail = |detail: String| Error::LadderInvariant {
            key: self.key,
            n: self.n,
            detail,
        };
        if self.rows.is_empty() {
            return Err(fail("no rows".into()));
        }
        let cols = self.col_count();
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != cols {
                return Err(fail(format!(
                    "row {r} has {} points, row 0 has {cols}",
                    row.len()
                )));
            }
        }
        for (r, pair) in self.rows.windows(2).enumerate() {
            let (lo, hi) = (&pair[0], &pair[1]);
            if hi.min_rank() != lo.min_rank() + 1 || hi.max_rank() != lo.max_rank() + 1 {
                return Err(fail(format!("row {} does not sit one rank above row {r}", r + 1)));
            }
            if !covers(&lo.first(), &hi.first()) || !covers(&lo.last(), &hi.last()) {
                return Err(fail(format!("rows {r} and {} do not cover at the edges", r + 1)));
            }
        }
        let top = self.rows.len() - 1;
        let span = u64::from(self.rows[0].min_rank()) + u64::from(self.rows[top].max_rank());
        if span != 5 * u64::from(self.n) {
            return Err(fail(format!("corner ranks sum to {span}, want {}", 5 * self.n)));
        }
        // Paired rows r and top-r must together span 10n.
        for r in 0..=top / 2 {
            let a = &self.rows[r];
            let b = &self.rows[top - r];
            let sum = u64::from(a.min_rank())
                + u64::from(a.max_rank())
                + u64::from(b.min_rank())
                + u64::from(b.max_rank());
            if sum != 10 * u64::from(self.n) {
                return Err(fail(format!(
                    "rows {r} and {} have endpoint ranks summing to {sum}",
                    top - r
                )));
            }
        }
        Ok(())
    }
}

/// Which border chain of each peeled perimeter takes the two extreme
/// corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// Corner chain descends the left edge, then crosses the bottom row.
    #[serde(rename = "left-bottom")]
    LeftBottom,
    /// Corner chain crosses the top row, then descends the right edge.
    #[serde(rename = "top-right")]
    TopRight,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::LeftBottom => "left-bottom",
            Orientation::TopRight => "top-right",
        }
    }

    fn flipped(self) -> Orientation {
        match self {
            Orientation::LeftBottom => Orientation::TopRight,
            Orientation::TopRight => Orientation::LeftBottom,
        }
    }
}

/// Orientation selection: a fixed choice, or the canonical left-bottom
/// with a per-ladder fallback to the other one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OrientationPolicy {
    #[default]
    Auto,
    Fixed(Orientation),
}

/// Where a symmetric chain sat in its peeled perimeter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainRole {
    /// Perimeter chain holding both extreme corners.
    Corner,
    /// The other perimeter chain.
    Border,
    /// Degenerate layer: a single remaining row.
    Row,
    /// Degenerate layer: a single remaining column.
    Column,
}

impl ChainRole {
    pub fn name(self) -> &'static str {
        match self {
            ChainRole::Corner => "corner",
            ChainRole::Border => "border",
            ChainRole::Row => "row",
            ChainRole::Column => "column",
        }
    }
}

/// Provenance of one symmetric chain: ladder, peel depth, perimeter role,
/// and the orientation that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeelTag {
    pub key: LadderKey,
    pub depth: u16,
    pub role: ChainRole,
    pub orientation: Orientation,
}

/// A saturated chain whose endpoint ranks sum to 5n.
#[derive(Clone, Debug)]
pub struct SymmetricChain {
    pub points: Vec<LatticePoint>,
    pub tag: PeelTag,
}

impl SymmetricChain {
    pub fn first(&self) -> LatticePoint {
        self.points[0]
    }

    pub fn last(&self) -> LatticePoint {
        *self.points.last().expect("chains are non-empty")
    }

    pub fn min_rank(&self) -> u32 {
        self.first().rank()
    }

    pub fn max_rank(&self) -> u32 {
        self.last().rank()
    }
}

fn check_n(n: u16) -> Result<(), Error> {
    if n > MAX_N {
        return Err(Error::InvalidArgument(format!(
            "n={n} exceeds the supported maximum {MAX_N}"
        )));
    }
    Ok(())
}

/// Builds every ladder of L(5, n), validated, in canonical key order.
pub fn assemble_ladders(n: u16) -> Result<Vec<Ladder>, Error> {
    assemble_ladders_except(n, None)
}

/// [`assemble_ladders`] with one family withheld. The withheld family is a
/// fault-injection hook for the verification paths; production callers
/// pass `None`.
pub fn assemble_ladders_except(n: u16, skip: Option<FamilyId>) -> Result<Vec<Ladder>, Error> {
    check_n(n)?;
    let mut plans: Vec<(LadderKey, Vec<RowIndex>)> = Vec::new();
    for (family, params) in enumerate_family_params(n) {
        if Some(family) == skip {
            continue;
        }
        if family.is_grid() {
            for (t, layer) in l2k_scd(params.k).into_iter().enumerate() {
                let rows = layer.into_iter().map(|(q, p)| RowIndex { p, q }).collect();
                let key = LadderKey {
                    family,
                    params,
                    l2k_layer: Some(t as u16),
                };
                plans.push((key, rows));
            }
        } else {
            let mut rows: Vec<RowIndex> = (0..=families::max_p(family, &params))
                .map(|p| RowIndex { p, q: 0 })
                .collect();
            if families::table(family).reverse_rows {
                // C2 ranks its rows in descending p.
                rows.reverse();
            }
            let key = LadderKey {
                family,
                params,
                l2k_layer: None,
            };
            plans.push((key, rows));
        }
    }

    let ladders = plans
        .into_par_iter()
        .map(|(key, row_indices)| {
            let rows = row_indices
                .into_iter()
                .map(|row| {
                    materialize_chain(&FamilyInstance {
                        family: key.family,
                        params: key.params,
                        row,
                        n,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let ladder = Ladder { key, n, rows };
            ladder.validate()?;
            Ok(ladder)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(ladders)
}

/// Splits a ladder into symmetric chains by peeling perimeters under the
/// given orientation. Fails if any peeled chain is not saturated; the
/// caller may then retry with the other orientation.
pub fn peel(ladder: &Ladder, orientation: Orientation) -> Result<Vec<SymmetricChain>, Error> {
    let rows = &ladder.rows;
    let row_count = rows.len();
    let col_count = rows[0].len();
    let at = |r: usize, c: usize| rows[r].points[c];
    let mut chains = Vec::new();
    let mut depth = 0usize;

    loop {
        let (rlo, clo) = (depth, depth);
        if rlo + depth >= row_count || clo + depth >= col_count {
            break;
        }
        let (rhi, chi) = (row_count - 1 - depth, col_count - 1 - depth);
        let mut emit = |points: Vec<LatticePoint>, role: ChainRole| -> Result<(), Error> {
            for (step, pair) in points.windows(2).enumerate() {
                if !covers(&pair[0], &pair[1]) {
                    return Err(Error::PeelFailed {
                        key: ladder.key,
                        n: ladder.n,
                        detail: format!(
                            "{} chain at depth {depth} breaks saturation at step {step} \
                             ({:?} -> {:?}) under {}",
                            role.name(),
                            pair[0],
                            pair[1],
                            orientation.name()
                        ),
                    });
                }
            }
            let span = points[0].rank() + points[points.len() - 1].rank();
            if u64::from(span) != 5 * u64::from(ladder.n) {
                return Err(Error::PeelFailed {
                    key: ladder.key,
                    n: ladder.n,
                    detail: format!(
                        "{} chain at depth {depth} spans ranks {}..{}, not symmetric for n={}",
                        role.name(),
                        points[0].rank(),
                        points[points.len() - 1].rank(),
                        ladder.n
                    ),
                });
            }
            chains.push(SymmetricChain {
                points,
                tag: PeelTag {
                    key: ladder.key,
                    depth: depth as u16,
                    role,
                    orientation,
                },
            });
            Ok(())
        };

        if rlo == rhi {
            emit((clo..=chi).map(|c| at(rlo, c)).collect(), ChainRole::Row)?;
            break;
        }
        if clo == chi {
            emit((rlo..=rhi).map(|r| at(r, clo)).collect(), ChainRole::Column)?;
            break;
        }
        match orientation {
            Orientation::LeftBottom => {
                let mut corner: Vec<_> = (rlo..=rhi).map(|r| at(r, clo)).collect();
                corner.extend((clo + 1..=chi).map(|c| at(rhi, c)));
                emit(corner, ChainRole::Corner)?;
                let mut border: Vec<_> = (clo + 1..=chi).map(|c| at(rlo, c)).collect();
                border.extend((rlo + 1..rhi).map(|r| at(r, chi)));
                emit(border, ChainRole::Border)?;
            }
            Orientation::TopRight => {
                let mut corner: Vec<_> = (clo..=chi).map(|c| at(rlo, c)).collect();
                corner.extend((rlo + 1..=rhi).map(|r| at(r, chi)));
                emit(corner, ChainRole::Corner)?;
                let mut border: Vec<_> = (rlo + 1..=rhi).map(|r| at(r, clo)).collect();
                border.extend((clo + 1..chi).map(|c| at(rhi, c)));
                emit(border, ChainRole::Border)?;
            }
        }
        depth += 1;
    }
    Ok(chains)
}

/// Peels under a policy; reports whether the fallback orientation was
/// needed.
pub fn peel_with_policy(
    ladder: &Ladder,
    policy: OrientationPolicy,
) -> Result<(Vec<SymmetricChain>, bool), Error> {
    match policy {
        OrientationPolicy::Fixed(orientation) => Ok((peel(ladder, orientation)?, false)),
        OrientationPolicy::Auto => {
            let canonical = Orientation::LeftBottom;
            match peel(ladder, canonical) {
                Ok(chains) => Ok((chains, false)),
                Err(first) => match peel(ladder, canonical.flipped()) {
                    Ok(chains) => Ok((chains, true)),
                    Err(second) => Err(Error::PeelFailed {
                        key: ladder.key,
                        n: ladder.n,
                        detail: format!("both orientations fail: {first}; {second}"),
                    }),
                },
            }
        }
    }
}

/// A complete symmetric chain decomposition of L(5, n).
#[derive(Clone, Debug)]
pub struct Scd {
    pub n: u16,
    pub chains: Vec<SymmetricChain>,
    /// Ladders that needed the non-canonical orientation.
    pub fallbacks: Vec<LadderKey>,
}

/// Builds the decomposition with the canonical orientation policy.
pub fn scd(n: u16) -> Result<Scd, Error> {
    scd_with(n, OrientationPolicy::Auto)
}

/// Builds the decomposition under an explicit orientation policy.
pub fn scd_with(n: u16, policy: OrientationPolicy) -> Result<Scd, Error> {
    scd_from_ladders(n, &assemble_ladders(n)?, policy)
}

/// Peels pre-assembled ladders in their canonical order.
pub fn scd_from_ladders(
    n: u16,
    ladders: &[Ladder],
    policy: OrientationPolicy,
) -> Result<Scd, Error> {
    let peeled = ladders
        .par_iter()
        .map(|ladder| peel_with_policy(ladder, policy))
        .collect::<Result<Vec<_>, Error>>()?;
    let mut chains = Vec::new();
    let mut fallbacks = Vec::new();
    for (ladder, (mut part, fell_back)) in ladders.iter().zip(peeled) {
        if fell_back {
            fallbacks.push(ladder.key);
        }
        chains.append(&mut part);
    }
    Ok(Scd {
        n,
        chains,
        fallbacks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(n: u16) -> Vec<(FamilyId, Option<u16>, usize, usize)> {
        assemble_ladders(n)
            .unwrap()
            .iter()
            .map(|l| (l.key.family, l.key.l2k_layer, l.row_count(), l.col_count()))
            .collect()
    }

    #[test]
    fn ladder_dimensions_small_n() {
        assert_eq!(dims(0), vec![(FamilyId::C9, Some(0), 1, 1)]);
        assert_eq!(
            dims(2),
            vec![
                (FamilyId::C1, None, 1, 7),
                (FamilyId::C3, None, 1, 11),
                (FamilyId::C9, Some(0), 3, 1),
            ]
        );
        assert_eq!(
            dims(3),
            vec![
                (FamilyId::C1, None, 1, 12),
                (FamilyId::C2, None, 1, 10),
                (FamilyId::C3, None, 1, 16),
                (FamilyId::C3, None, 2, 7),
                (FamilyId::C9, Some(0), 1, 4),
            ]
        );
        // 12 + 10 + 16 + 14 + 4 = 56 = binomial(8, 5)
        let total: usize = assemble_ladders(3)
            .unwrap()
            .iter()
            .map(|l| l.row_count() * l.col_count())
            .sum();
        assert_eq!(total, 56);
    }

    #[test]
    fn single_row_ladder_peels_to_itself() {
        let ladders = assemble_ladders(2).unwrap();
        let c1 = &ladders[0];
        assert_eq!(c1.row_count(), 1);
        let chains = peel(c1, Orientation::LeftBottom).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].points, c1.rows[0].points);
        assert_eq!(chains[0].tag.role, ChainRole::Row);
    }

    #[test]
    fn single_column_ladder_peels_to_one_chain() {
        let ladders = assemble_ladders(2).unwrap();
        let c9 = ladders.last().unwrap();
        assert_eq!((c9.row_count(), c9.col_count()), (3, 1));
        let chains = peel(c9, Orientation::LeftBottom).unwrap();
        assert_eq!(chains.len(), 1);
        let coords: Vec<_> = chains[0].points.iter().map(|p| p.coords()).collect();
        assert_eq!(
            coords,
            vec![[0, 0, 1, 1, 2], [0, 1, 1, 1, 2], [0, 1, 1, 2, 2]]
        );
        assert_eq!((chains[0].min_rank(), chains[0].max_rank()), (4, 6));
    }

    #[test]
    fn two_row_ladder_splits_into_two_symmetric_chains() {
        let ladders = assemble_ladders(3).unwrap();
        let c3u1 = &ladders[3];
        assert_eq!((c3u1.row_count(), c3u1.col_count()), (2, 7));
        let chains = peel(c3u1, Orientation::LeftBottom).unwrap();
        assert_eq!(chains.len(), 2);
        assert_eq!((chains[0].min_rank(), chains[0].max_rank()), (4, 11));
        assert_eq!((chains[1].min_rank(), chains[1].max_rank()), (5, 10));
        assert_eq!(chains[0].tag.role, ChainRole::Corner);
        // The corner chain holds both extreme corners.
        assert_eq!(chains[0].first(), c3u1.rows[0].first());
        assert_eq!(chains[0].last(), c3u1.rows[1].last());
    }

    #[test]
    fn peel_partitions_points_both_orientations() {
        for n in 0..=8u16 {
            for ladder in assemble_ladders(n).unwrap() {
                let mut want: Vec<_> = ladder.points().collect();
                want.sort_unstable();
                for orientation in [Orientation::LeftBottom, Orientation::TopRight] {
                    let chains = peel(&ladder, orientation).unwrap();
                    assert_eq!(
                        chains.len(),
                        ladder.row_count().min(ladder.col_count()),
                        "{} n={n}",
                        ladder.key
                    );
                    let mut got: Vec<_> = chains
                        .iter()
                        .flat_map(|c| c.points.iter().copied())
                        .collect();
                    got.sort_unstable();
                    assert_eq!(got, want, "{} n={n} {orientation:?}", ladder.key);
                    // Extreme corners land in one chain.
                    let min = *want.first().unwrap();
                    let max = *want.last().unwrap();
                    assert!(chains.iter().any(|c| c.points.contains(&min)
                        && c.points.contains(&max)));
                }
            }
        }
    }

    #[test]
    fn scd_small_counts() {
        assert_eq!(scd(0).unwrap().chains.len(), 1);
        let s2 = scd(2).unwrap();
        assert_eq!(s2.chains.len(), 3);
        assert_eq!(
            s2.chains.iter().map(|c| c.points.len()).sum::<usize>(),
            21
        );
        let s3 = scd(3).unwrap();
        assert_eq!(s3.chains.len(), 6);
        assert_eq!(
            s3.chains.iter().map(|c| c.points.len()).sum::<usize>(),
            56
        );
        assert!(s3.fallbacks.is_empty());
    }

    #[test]
    fn scd_rejects_oversized_n() {
        assert!(matches!(scd(MAX_N + 1), Err(Error::InvalidArgument(_))));
    }
}
