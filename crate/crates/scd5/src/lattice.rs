//! Elements of L(m, n), lexicographic enumeration, and rank-size oracles.
//!
//! L(m, n) is the poset of weakly increasing m-tuples with entries in
//! `0..=n`, ordered coordinatewise. The chain construction is specific to
//! m = 5, so points are fixed-length 5-tuples; enumeration and the
//! Gaussian-binomial rank oracle stay general in m because they serve as
//! independent cross-checks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Largest supported box height; five 12-bit coordinates fit one `u64` key.
pub const MAX_N: u16 = 4095;

/// An element of L(5, n): five weakly increasing coordinates `a1..=a5`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint(pub [u16; 5]);

impl LatticePoint {
    /// Weakly increasing coordinates make a point; ambient bounds are
    /// checked separately via [`LatticePoint::is_valid`].
    pub fn new(coords: [u16; 5]) -> Option<Self> {
        if coords.windows(2).all(|w| w[0] <= w[1]) {
            Some(LatticePoint(coords))
        } else {
            None
        }
    }

    pub fn coords(&self) -> [u16; 5] {
        self.0
    }

    /// Coordinate sum; the grading of the lattice.
    pub fn rank(&self) -> u32 {
        self.0.iter().map(|&a| u32::from(a)).sum()
    }

    /// Membership in L(5, n): weakly increasing and bounded by `n`.
    pub fn is_valid(&self, n: u16) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1]) && self.0[4] <= n
    }

    /// Packs the coordinates into a single key, 12 bits each, `a1` in the
    /// most significant slot so that key order equals lexicographic order.
    pub fn packed(&self) -> u64 {
        debug_assert!(self.0[4] <= MAX_N);
        self.0
            .iter()
            .fold(0u64, |acc, &a| (acc << 12) | u64::from(a))
    }

    pub fn from_packed(key: u64) -> Self {
        let mut coords = [0u16; 5];
        for (slot, c) in coords.iter_mut().rev().enumerate() {
            *c = ((key >> (12 * slot)) & 0xfff) as u16;
        }
        LatticePoint(coords)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a5] = self.0;
        write!(f, "({a1},{a2},{a3},{a4},{a5})")
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a5] = self.0;
        write!(f, "{a1} {a2} {a3} {a4} {a5}")
    }
}

/// True iff `hi` covers `lo`: exactly one coordinate grows, by exactly 1,
/// and `hi` is still weakly increasing. The ambient bound `a5 <= n` is the
/// caller's invariant since the pair does not carry `n`.
pub fn covers(lo: &LatticePoint, hi: &LatticePoint) -> bool {
    let mut bumped = 0usize;
    for (a, b) in lo.0.iter().zip(hi.0) {
        match b as i32 - *a as i32 {
            0 => {}
            1 => bumped += 1,
            _ => return false,
        }
    }
    bumped == 1 && hi.0.windows(2).all(|w| w[0] <= w[1])
}

/// Box shape for enumeration and rank oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AmbientParams {
    pub m: u8,
    pub n: u16,
}

impl AmbientParams {
    pub fn new(m: u8, n: u16) -> Self {
        assert!(m >= 1, "m must be positive");
        AmbientParams { m, n }
    }
}

/// Lexicographic stream of all weakly increasing m-tuples bounded by `n`.
pub fn enumerate_lattice(params: &AmbientParams) -> impl Iterator<Item = Vec<u16>> {
    let m = params.m as usize;
    let n = params.n;
    let mut next: Option<Vec<u16>> = Some(vec![0; m]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        // Bump the rightmost coordinate below n, then minimize the suffix.
        if let Some(idx) = succ.iter().rposition(|&a| a < n) {
            succ[idx] += 1;
            let v = succ[idx];
            for a in succ[idx + 1..].iter_mut() {
                *a = v;
            }
            next = Some(succ);
        }
        Some(cur)
    })
}

/// Fast path for m = 5: the same lexicographic stream as [`LatticePoint`]s.
pub fn enumerate_box5(n: u16) -> impl Iterator<Item = LatticePoint> {
    let mut next: Option<[u16; 5]> = Some([0; 5]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur;
        if let Some(idx) = succ.iter().rposition(|&a| a < n) {
            succ[idx] += 1;
            let v = succ[idx];
            for a in succ[idx + 1..].iter_mut() {
                *a = v;
            }
            next = Some(succ);
        }
        Some(LatticePoint(cur))
    })
}

/// Rank sizes of L(m, n): `sizes[r]` counts elements of coordinate sum `r`.
/// These are the coefficients of the Gaussian binomial `[m + n choose m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub sizes: Vec<u64>,
}

impl RankProfile {
    pub fn total(&self) -> Option<u64> {
        self.sizes.iter().try_fold(0u64, |acc, &s| acc.checked_add(s))
    }

    pub fn is_palindromic(&self) -> bool {
        let s = &self.sizes;
        (0..s.len() / 2).all(|r| s[r] == s[s.len() - 1 - r])
    }

    /// Non-decreasing up to the middle (palindromy gives the descent).
    pub fn is_unimodal(&self) -> bool {
        let mid = (self.sizes.len() - 1) / 2;
        self.sizes[..=mid].windows(2).all(|w| w[0] <= w[1])
            && self.sizes[mid..].windows(2).all(|w| w[0] >= w[1])
    }

    /// Size of the largest (middle) rank; the chain count of any SCD.
    pub fn middle_size(&self) -> u64 {
        self.sizes[(self.sizes.len() - 1) / 2]
    }
}

/// Computes the rank profile by the partition-counting recurrence
///
/// `P(a, b, r) = P(a, b-1, r) + P(a-1, b, r-b)`
///
/// (partitions of `r` into at most `a` parts, each at most `b`), which is
/// independent of lattice enumeration. Overflow is an error, not a wrap.
pub fn rank_sizes(params: &AmbientParams) -> Result<RankProfile, Error> {
    let m = params.m as usize;
    let n = params.n as usize;
    let top = m * n;
    // dp[a][r], rolled over the part bound b.
    let mut dp = vec![vec![0u64; top + 1]; m + 1];
    for row in dp.iter_mut() {
        row[0] = 1;
    }
    for b in 1..=n {
        for a in 1..=m {
            for r in b..=top {
                let add = dp[a - 1][r - b];
                dp[a][r] = dp[a][r].checked_add(add).ok_or_else(|| Error::Overflow {
                    what: format!("rank size of L({m}, {n}) at rank {r}"),
                })?;
            }
        }
    }
    Ok(RankProfile {
        sizes: dp.pop().expect("m + 1 rows"),
    })
}

/// Checked binomial coefficient, used by the verification oracles.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for step in 1..=k {
        // Multiply before dividing; the running product of a prefix of the
        // factors is divisible by step! so the division is exact.
        acc = acc.checked_mul(n - k + step)? / step;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(LatticePoint([0, 0, 0, 0, 0]).rank(), 0);
        assert_eq!(LatticePoint([1, 1, 1, 1, 1]).rank(), 5);
        assert_eq!(LatticePoint([0, 0, 0, 1, 2]).rank(), 3);
    }

    #[test]
    fn covers_examples() {
        let c = |a, b| covers(&LatticePoint(a), &LatticePoint(b));
        assert!(c([0, 0, 0, 0, 0], [0, 0, 0, 0, 1]));
        assert!(!c([0, 0, 0, 0, 0], [0, 0, 0, 1, 1]));
        assert!(c([0, 1, 1, 1, 1], [1, 1, 1, 1, 1]));
        // A bump that breaks monotonicity is not a covering step.
        assert!(!c([0, 1, 1, 1, 1], [1, 1, 1, 2, 1]));
        assert!(!c([0, 0, 1, 1, 1], [0, 0, 1, 1, 1]));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_box5(0).count(), 1);
        assert_eq!(enumerate_box5(1).count(), 6);
        assert_eq!(enumerate_box5(2).count(), 21);
        let general: Vec<_> = enumerate_lattice(&AmbientParams::new(5, 2)).collect();
        assert_eq!(general.len(), 21);
    }

    #[test]
    fn enumerate_is_strictly_lexicographic() {
        let pts: Vec<_> = enumerate_box5(3).collect();
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert!(pts.windows(2).all(|w| w[0].packed() < w[1].packed()));
        assert_eq!(pts.len() as u64, binomial(8, 5).unwrap());
    }

    #[test]
    fn rank_sizes_examples() {
        let p1 = rank_sizes(&AmbientParams::new(5, 1)).unwrap();
        assert_eq!(p1.sizes, vec![1, 1, 1, 1, 1, 1]);
        let p2 = rank_sizes(&AmbientParams::new(5, 2)).unwrap();
        assert_eq!(p2.sizes, vec![1, 1, 2, 2, 3, 3, 3, 2, 2, 1, 1]);
        let p3 = rank_sizes(&AmbientParams::new(5, 3)).unwrap();
        assert_eq!(
            p3.sizes,
            vec![1, 1, 2, 3, 4, 5, 6, 6, 6, 6, 5, 4, 3, 2, 1, 1]
        );
        assert_eq!(p3.total(), Some(56));
        assert!(p3.is_palindromic() && p3.is_unimodal());
        assert_eq!(p3.middle_size(), 6);
    }

    #[test]
    fn rank_sizes_matches_enumeration_histogram() {
        for n in 0..=15u16 {
            let profile = rank_sizes(&AmbientParams::new(5, n)).unwrap();
            let mut hist = vec![0u64; 5 * n as usize + 1];
            for pt in enumerate_box5(n) {
                hist[pt.rank() as usize] += 1;
            }
            assert_eq!(profile.sizes, hist, "n={n}");
        }
    }

    #[test]
    fn packed_roundtrip_and_order() {
        let pt = LatticePoint([0, 3, 17, 400, 4095]);
        assert_eq!(LatticePoint::from_packed(pt.packed()), pt);
    }

    #[test]
    fn binomial_checked() {
        assert_eq!(binomial(7, 5), Some(21));
        assert_eq!(binomial(45, 5), Some(1_221_759));
        assert_eq!(binomial(31, 6), Some(736_281));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(u64::MAX, 30), None);
    }
}
