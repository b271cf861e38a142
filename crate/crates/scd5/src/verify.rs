//! Independent checks of the construction.
//!
//! Nothing here trusts the chain tables: coverage is checked against the
//! lexicographic enumeration of the lattice, rank statistics against the
//! Gaussian-binomial recurrence, and the pre-peel families against the
//! weight-monomial coverage of the product generating function
//! `1 / ((1-x0)...(1-x5))`, truncated degree by degree. Failures are data
//! in a report, not exceptions.

use crate::error::Error;
use crate::families::{enumerate_family_params, l2k_scd, materialize_chain, FamilyInstance, RowIndex};
use crate::ladder::{Ladder, SymmetricChain};
use crate::lattice::{binomial, covers, enumerate_box5, rank_sizes, AmbientParams, LatticePoint, MAX_N};

/// Failure lists in reports keep at most this many samples.
pub const SAMPLE_LIMIT: usize = 20;

/// Exponents of `x0..x5` for one lattice point: the point's weight is the
/// monomial `x0^(n-a5) x1^(a5-a4) x2^(a4-a3) x3^(a3-a2) x4^(a2-a1) x5^a1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightExponents(pub [u16; 6]);

impl WeightExponents {
    /// Total degree; always `n` for a point of L(5, n).
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn packed(&self) -> u128 {
        self.0
            .iter()
            .fold(0u128, |acc, &e| (acc << 16) | u128::from(e))
    }
}

/// Weight exponents of a point of L(5, n): successive coordinate gaps,
/// top down, bracketed by `n - a5` and `a1`.
pub fn weight(point: &LatticePoint, n: u16) -> WeightExponents {
    debug_assert!(point.is_valid(n));
    let [a1, a2, a3, a4, a5] = point.coords();
    WeightExponents([n - a5, a5 - a4, a4 - a3, a3 - a2, a2 - a1, a1])
}

/// Inverse of [`weight`]: reconstructs the point (and the ambient n).
pub fn point_from_weight(exponents: &WeightExponents) -> (LatticePoint, u16) {
    let e = exponents.0;
    let a1 = e[5];
    let a2 = a1 + e[4];
    let a3 = a2 + e[3];
    let a4 = a3 + e[2];
    let a5 = a4 + e[1];
    (LatticePoint([a1, a2, a3, a4, a5]), a5 + e[0])
}

/// True iff every consecutive pair is a covering step.
pub fn is_saturated(points: &[LatticePoint]) -> bool {
    points.windows(2).all(|pair| covers(&pair[0], &pair[1]))
}

/// True iff the endpoint ranks sum to 5n.
pub fn is_symmetric(points: &[LatticePoint], n: u16) -> bool {
    match (points.first(), points.last()) {
        (Some(first), Some(last)) => {
            u64::from(first.rank()) + u64::from(last.rank()) == 5 * u64::from(n)
        }
        _ => false,
    }
}

/// Outcome of a coverage check over L(5, n).
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n: u16,
    pub total_points: u64,
    pub chain_count: u64,
    /// Points appearing more than once (bounded sample).
    pub duplicates: Vec<LatticePoint>,
    /// Lattice points never covered (bounded sample).
    pub missing: Vec<LatticePoint>,
    /// Indices of chains that are not saturated (bounded sample).
    pub saturation_failures: Vec<usize>,
    /// Indices of chains that are not symmetric (bounded sample).
    pub symmetry_failures: Vec<usize>,
    /// Ranks whose covered-point count disagrees with the
    /// Gaussian-binomial oracle: `(rank, covered, oracle)`.
    pub profile_mismatches: Vec<(u32, u64, u64)>,
    pub pass: bool,
}

fn push_sample<T>(list: &mut Vec<T>, value: T) {
    if list.len() < SAMPLE_LIMIT {
        list.push(value);
    }
}

fn oracle_profile(n: u16) -> Vec<u64> {
    rank_sizes(&AmbientParams::new(5, n))
        .expect("rank sizes of L(5, n<=4095) fit in u64")
        .sizes
}

/// Checks that `chains` is a symmetric chain decomposition of L(5, n):
/// every chain saturated and symmetric, and the union covering every
/// lattice point exactly once. Rank counts are re-checked against the
/// Gaussian-binomial oracle.
pub fn verify_partition<'a, I>(chains: I, n: u16) -> VerificationReport
where
    I: IntoIterator<Item = &'a [LatticePoint]>,
{
    assert!(n <= MAX_N);
    let mut report = VerificationReport {
        n,
        total_points: 0,
        chain_count: 0,
        duplicates: Vec::new(),
        missing: Vec::new(),
        saturation_failures: Vec::new(),
        symmetry_failures: Vec::new(),
        profile_mismatches: Vec::new(),
        pass: false,
    };

    let oracle = oracle_profile(n);
    let mut covered_per_rank = vec![0u64; oracle.len()];
    let mut keys: Vec<u64> = Vec::new();
    for (index, chain) in chains.into_iter().enumerate() {
        report.chain_count += 1;
        report.total_points += chain.len() as u64;
        if !is_saturated(chain) {
            push_sample(&mut report.saturation_failures, index);
        }
        if !is_symmetric(chain, n) {
            push_sample(&mut report.symmetry_failures, index);
        }
        for point in chain {
            covered_per_rank[point.rank() as usize] += 1;
            keys.push(point.packed());
        }
    }

    keys.sort_unstable();
    for pair in keys.windows(2) {
        if pair[0] == pair[1] {
            let point = LatticePoint::from_packed(pair[0]);
            if report.duplicates.last() != Some(&point) {
                push_sample(&mut report.duplicates, point);
            }
        }
    }

    // Packed keys sort lexicographically, so one merge pass against the
    // enumeration stream finds everything never covered.
    let mut it = keys.iter().peekable();
    for point in enumerate_box5(n) {
        let key = point.packed();
        while it.next_if(|&&k| k < key).is_some() {}
        if it.peek() == Some(&&key) {
            it.next();
            while it.next_if(|&&k| k == key).is_some() {}
        } else {
            push_sample(&mut report.missing, point);
        }
    }

    for (rank, (&got, &want)) in covered_per_rank.iter().zip(&oracle).enumerate() {
        if got != want {
            push_sample(&mut report.profile_mismatches, (rank as u32, got, want));
        }
    }

    let expected_total = binomial(u64::from(n) + 5, 5).expect("n <= 4095");
    report.pass = report.duplicates.is_empty()
        && report.missing.is_empty()
        && report.saturation_failures.is_empty()
        && report.symmetry_failures.is_empty()
        && report.profile_mismatches.is_empty()
        && report.total_points == expected_total;
    report
}

/// Chain-count profile check: an SCD must start exactly
/// `sizes[r] - sizes[r-1]` chains at each rank `r` up to the middle.
pub fn verify_chain_profile<'a, I>(chains: I, n: u16) -> bool
where
    I: IntoIterator<Item = &'a [LatticePoint]>,
{
    let oracle = oracle_profile(n);
    let mid = (5 * usize::from(n)) / 2;
    let mut starts = vec![0u64; oracle.len()];
    for chain in chains {
        match chain.first() {
            Some(first) => starts[first.rank() as usize] += 1,
            None => return false,
        }
    }
    (0..oracle.len()).all(|r| {
        let want = if r <= mid {
            oracle[r] - if r == 0 { 0 } else { oracle[r - 1] }
        } else {
            0
        };
        starts[r] == want
    })
}

/// All pre-peel parallel chains of L(5, n), every family, every row.
pub fn all_parallel_chains(n: u16) -> Result<Vec<Vec<LatticePoint>>, Error> {
    let mut chains = Vec::new();
    for (family, params) in enumerate_family_params(n) {
        let rows: Vec<RowIndex> = if family.is_grid() {
            l2k_scd(params.k)
                .into_iter()
                .flatten()
                .map(|(q, p)| RowIndex { p, q })
                .collect()
        } else {
            (0..=crate::families::max_p(family, &params))
                .map(|p| RowIndex { p, q: 0 })
                .collect()
        };
        for row in rows {
            let chain = materialize_chain(&FamilyInstance {
                family,
                params,
                row,
                n,
            })?;
            chains.push(chain.points);
        }
    }
    Ok(chains)
}

/// Coverage of the truncated generating function: for every degree
/// `n <= n_max`, the weights of all pre-peel chain points must hit every
/// degree-n monomial in `x0..x5` exactly once. Cumulatively that gives
/// every monomial of total degree at most `n_max` coefficient exactly 1.
#[derive(Clone, Debug)]
pub struct GfCheck {
    pub n_max: u16,
    pub per_degree: Vec<VerificationReport>,
    pub distinct_monomials: u64,
    pub expected_monomials: u64,
    pub pass: bool,
}

pub fn gf_truncated_check(n_max: u16) -> Result<GfCheck, Error> {
    let mut per_degree = Vec::with_capacity(usize::from(n_max) + 1);
    let mut distinct_total = 0u64;
    for n in 0..=n_max {
        let chains = all_parallel_chains(n)?;
        let expected = binomial(u64::from(n) + 5, 5).expect("n <= 4095");

        let mut report = VerificationReport {
            n,
            total_points: 0,
            chain_count: chains.len() as u64,
            duplicates: Vec::new(),
            missing: Vec::new(),
            saturation_failures: Vec::new(),
            symmetry_failures: Vec::new(),
            profile_mismatches: Vec::new(),
            pass: false,
        };

        let mut keys: Vec<u128> = Vec::new();
        let mut degree_ok = true;
        for chain in &chains {
            report.total_points += chain.len() as u64;
            for point in chain {
                let w = weight(point, n);
                degree_ok &= w.degree() == u32::from(n);
                keys.push(w.packed());
            }
        }
        keys.sort_unstable();
        let mut distinct = if keys.is_empty() { 0u64 } else { 1 };
        for pair in keys.windows(2) {
            if pair[0] == pair[1] {
                let exps = unpack_weight(pair[0]);
                let (point, _) = point_from_weight(&exps);
                if report.duplicates.last() != Some(&point) {
                    push_sample(&mut report.duplicates, point);
                }
            } else {
                distinct += 1;
            }
        }
        // Distinct degree-n tuples == binomial(n+5, 5) with no duplicates
        // means the weight map hits every degree-n monomial exactly once.
        report.pass = degree_ok
            && report.duplicates.is_empty()
            && report.total_points == expected
            && distinct == expected;
        distinct_total += distinct;
        per_degree.push(report);
    }

    let expected_monomials = binomial(u64::from(n_max) + 6, 6).expect("n_max <= 4095");
    let pass = per_degree.iter().all(|r| r.pass) && distinct_total == expected_monomials;
    Ok(GfCheck {
        n_max,
        per_degree,
        distinct_monomials: distinct_total,
        expected_monomials,
        pass,
    })
}

fn unpack_weight(key: u128) -> WeightExponents {
    let mut exps = [0u16; 6];
    for (slot, e) in exps.iter_mut().rev().enumerate() {
        *e = ((key >> (16 * slot)) & 0xffff) as u16;
    }
    WeightExponents(exps)
}

/// True iff the peeled chains carry exactly the ladder's points.
pub fn verify_peel_conservation(ladder: &Ladder, peeled: &[SymmetricChain]) -> bool {
    let mut before: Vec<u64> = ladder.points().map(|p| p.packed()).collect();
    let mut after: Vec<u64> = peeled
        .iter()
        .flat_map(|c| c.points.iter().map(|p| p.packed()))
        .collect();
    before.sort_unstable();
    after.sort_unstable();
    before == after
}
