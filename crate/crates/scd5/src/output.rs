//! Machine- and human-readable emission of decompositions, verification
//! sweeps, and statistics. The command-line front end is a thin wrapper
//! over these writers, which keeps their output byte-for-byte testable.
//!
//! All emission happens in canonical ladder order after any parallel work
//! has finished, so output is identical across runs and thread counts.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::families::{enumerate_family_params, FamilyId, FamilyParams};
use crate::ladder::{
    assemble_ladders_except, scd_from_ladders, LadderKey, OrientationPolicy, Scd, SymmetricChain,
};
use crate::lattice::{rank_sizes, AmbientParams, LatticePoint};
use crate::verify::{verify_chain_profile, verify_partition, verify_peel_conservation, weight};

/// Output encodings of `generate`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// One emitted symmetric chain with its full provenance. The struct field
/// order is the canonical JSON field order; parsing a record and
/// serializing it again reproduces the original line byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u16,
    pub id: usize,
    pub family: String,
    pub params: FamilyParams,
    /// Index of the L(2, k) chain supplying the ladder rows (C7-C9 only).
    pub t: Option<u16>,
    /// Peel depth within the ladder.
    pub layer: u16,
    pub role: String,
    pub orientation: String,
    pub chain: Vec<LatticePoint>,
}

impl OutputRecord {
    pub fn from_chain(n: u16, id: usize, chain: &SymmetricChain) -> Self {
        OutputRecord {
            n,
            id,
            family: chain.tag.key.family.name().to_owned(),
            params: chain.tag.key.params,
            t: chain.tag.key.l2k_layer,
            layer: chain.tag.depth,
            role: chain.tag.role.name().to_owned(),
            orientation: chain.tag.orientation.name().to_owned(),
            chain: chain.points.clone(),
        }
    }
}

fn text_line(points: &[LatticePoint]) -> String {
    points
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" -> ")
}

/// Writes one record per symmetric chain of the decomposition of L(5, n).
pub fn write_generate<W: Write>(
    out: &mut W,
    n: u16,
    format: Format,
    policy: OrientationPolicy,
) -> Result<Scd, Error> {
    let ladders = assemble_ladders_except(n, None)?;
    let decomposition = scd_from_ladders(n, &ladders, policy)?;
    for (id, chain) in decomposition.chains.iter().enumerate() {
        match format {
            Format::Text => {
                writeln!(out, "{}", text_line(&chain.points))
                    .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
            }
            Format::Json => {
                let record = OutputRecord::from_chain(n, id, chain);
                let line = serde_json::to_string(&record)
                    .map_err(|e| Error::InvalidArgument(format!("serialize failed: {e}")))?;
                writeln!(out, "{line}")
                    .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
            }
        }
    }
    Ok(decomposition)
}

/// Options for a verification sweep.
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Additionally check pre-peel weight coverage and peel conservation.
    pub deep: bool,
    pub policy: OrientationPolicy,
    /// Fault-injection hook: withhold one family so the failure paths can
    /// be exercised end to end.
    pub skip_family: Option<FamilyId>,
}

struct SweepResult {
    summary: String,
    diagnostics: Vec<String>,
    pass: bool,
}

fn sweep_one(n: u16, options: &VerifyOptions) -> Result<SweepResult, Error> {
    let mut diagnostics = Vec::new();
    let ladders = assemble_ladders_except(n, options.skip_family)?;
    let decomposition = scd_from_ladders(n, &ladders, options.policy)?;
    for key in &decomposition.fallbacks {
        diagnostics.push(format!("note: fallback orientation for {key} at n={n}"));
    }

    let report = verify_partition(
        decomposition.chains.iter().map(|c| c.points.as_slice()),
        n,
    );
    let profile_ok = verify_chain_profile(
        decomposition.chains.iter().map(|c| c.points.as_slice()),
        n,
    );
    let mut pass = report.pass && profile_ok;

    if !report.pass {
        for point in &report.missing {
            diagnostics.push(format!("n={n}: missing point {point:?}"));
        }
        for point in &report.duplicates {
            diagnostics.push(format!("n={n}: duplicated point {point:?}"));
        }
        for index in &report.saturation_failures {
            diagnostics.push(format!("n={n}: chain {index} is not saturated"));
        }
        for index in &report.symmetry_failures {
            diagnostics.push(format!("n={n}: chain {index} is not symmetric"));
        }
        for (rank, got, want) in &report.profile_mismatches {
            diagnostics.push(format!(
                "n={n}: rank {rank} covered {got} times, lattice has {want}"
            ));
        }
    }
    if !profile_ok {
        diagnostics.push(format!(
            "n={n}: chain min-rank profile disagrees with the rank-size oracle"
        ));
    }

    if options.deep {
        // Pre-peel coverage in weight space: every degree-n monomial once.
        let mut keys: Vec<u128> = ladders
            .iter()
            .flat_map(|l| l.points())
            .map(|p| {
                weight(&p, n)
                    .0
                    .iter()
                    .fold(0u128, |acc, &e| (acc << 16) | u128::from(e))
            })
            .collect();
        keys.sort_unstable();
        let duplicate = keys.windows(2).any(|w| w[0] == w[1]);
        let expected = crate::lattice::binomial(u64::from(n) + 5, 5).expect("n <= 4095");
        if duplicate || keys.len() as u64 != expected {
            pass = false;
            diagnostics.push(format!(
                "n={n}: weight coverage broken ({} monomials, want {expected}{})",
                keys.len(),
                if duplicate { ", with duplicates" } else { "" }
            ));
        }

        // Conservation: peeled chains carry exactly the ladder points.
        let mut cursor = 0usize;
        for ladder in &ladders {
            let count = ladder.row_count().min(ladder.col_count());
            let peeled: &[SymmetricChain] = &decomposition.chains[cursor..cursor + count];
            cursor += count;
            debug_assert!(peeled.iter().all(|c| c.tag.key == ladder.key));
            if !verify_peel_conservation(ladder, peeled) {
                pass = false;
                diagnostics.push(format!(
                    "n={n}: peel of {} does not conserve its points",
                    ladder.key
                ));
            }
        }
        debug_assert_eq!(cursor, decomposition.chains.len());
    }

    let summary = format!(
        "n={n} points={} chains={} {}",
        report.total_points,
        report.chain_count,
        if pass { "pass" } else { "fail" }
    );
    Ok(SweepResult {
        summary,
        diagnostics,
        pass,
    })
}

/// Runs the verification sweep over `n_lo..=n_hi`, one summary line per n
/// on `out`, failure samples and fallback notes on `diag`. Returns whether
/// every n passed.
pub fn write_verify<W: Write, D: Write>(
    out: &mut W,
    diag: &mut D,
    n_lo: u16,
    n_hi: u16,
    options: &VerifyOptions,
) -> Result<bool, Error> {
    if n_lo > n_hi {
        return Err(Error::InvalidArgument(format!(
            "empty range: n_lo={n_lo} > n_hi={n_hi}"
        )));
    }
    let results = (n_lo..=n_hi)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| sweep_one(n, options))
        .collect::<Result<Vec<_>, Error>>()?;
    let mut all_pass = true;
    for result in results {
        writeln!(out, "{}", result.summary)
            .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
        for line in &result.diagnostics {
            writeln!(diag, "{line}")
                .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
        }
        all_pass &= result.pass;
    }
    Ok(all_pass)
}

/// Prints instance counts, ladder dimensions, the chain-length histogram,
/// and the oracle rank profile for one n.
pub fn write_stats<W: Write>(out: &mut W, n: u16) -> Result<(), Error> {
    let io_err = |e: std::io::Error| Error::InvalidArgument(format!("write failed: {e}"));
    let ladders = assemble_ladders_except(n, None)?;
    let decomposition = scd_from_ladders(n, &ladders, OrientationPolicy::Auto)?;
    let profile = rank_sizes(&AmbientParams::new(5, n))?;

    let points: usize = decomposition.chains.iter().map(|c| c.points.len()).sum();
    writeln!(
        out,
        "n={n} points={points} chains={}",
        decomposition.chains.len()
    )
    .map_err(io_err)?;

    let sizes: Vec<String> = profile.sizes.iter().map(u64::to_string).collect();
    writeln!(out, "rank sizes: {}", sizes.join(" ")).map_err(io_err)?;

    let mut per_family: BTreeMap<FamilyId, usize> = BTreeMap::new();
    for (family, _) in enumerate_family_params(n) {
        *per_family.entry(family).or_default() += 1;
    }
    let families: Vec<String> = per_family
        .iter()
        .map(|(family, count)| format!("{family}={count}"))
        .collect();
    writeln!(out, "families: {}", families.join(" ")).map_err(io_err)?;

    writeln!(out, "ladders: {}", ladders.len()).map_err(io_err)?;
    for ladder in &ladders {
        writeln!(
            out,
            "  {}: {}x{}",
            ladder.key,
            ladder.row_count(),
            ladder.col_count()
        )
        .map_err(io_err)?;
    }

    let mut lengths: BTreeMap<usize, usize> = BTreeMap::new();
    for chain in &decomposition.chains {
        *lengths.entry(chain.points.len()).or_default() += 1;
    }
    let histogram: Vec<String> = lengths
        .iter()
        .map(|(len, count)| format!("{len}={count}"))
        .collect();
    writeln!(out, "chain lengths: {}", histogram.join(" ")).map_err(io_err)?;
    Ok(())
}

/// Convenience used by the fault-injection path of the CLI.
pub fn ladder_keys(n: u16) -> Result<Vec<LadderKey>, Error> {
    Ok(assemble_ladders_except(n, None)?
        .iter()
        .map(|l| l.key)
        .collect())
}
