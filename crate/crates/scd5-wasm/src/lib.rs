//! Browser bindings for the L(5, n) symmetric chain decomposition.
//!
//! Three operations back the demo page: build a decomposition, fetch the
//! rank profile, and run the verification checks. Results come back as
//! JSON strings; failures use an `{"error": ...}` envelope so the page
//! never has to deal with thrown exceptions.

use serde_json::json;
use wasm_bindgen::prelude::*;

use scd5::{
    rank_sizes, scd, verify_chain_profile, verify_partition, verify_peel_conservation,
    AmbientParams,
};

fn error_json(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

/// Full decomposition of L(5, n) with provenance, as JSON:
/// `{ n, profile, chains: [{family, i, j, k, u, w, t, layer, role,
/// orientation, points}], fallbacks }`.
#[wasm_bindgen]
pub fn decompose(n: u16) -> String {
    let decomposition = match scd(n) {
        Ok(s) => s,
        Err(e) => return error_json(e),
    };
    let profile = match rank_sizes(&AmbientParams::new(5, n)) {
        Ok(p) => p,
        Err(e) => return error_json(e),
    };
    let chains: Vec<_> = decomposition
        .chains
        .iter()
        .map(|chain| {
            let params = chain.tag.key.params;
            json!({
                "family": chain.tag.key.family.name(),
                "i": params.i,
                "j": params.j,
                "k": params.k,
                "u": params.u,
                "w": params.w,
                "t": chain.tag.key.l2k_layer,
                "layer": chain.tag.depth,
                "role": chain.tag.role.name(),
                "orientation": chain.tag.orientation.name(),
                "points": chain.points.iter().map(|p| p.coords()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "n": n,
        "profile": profile.sizes,
        "chains": chains,
        "fallbacks": decomposition
            .fallbacks
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
    })
    .to_string()
}

/// Rank sizes of L(5, n) (the Gaussian binomial coefficients), as a JSON
/// array.
#[wasm_bindgen]
pub fn rank_profile(n: u16) -> String {
    match rank_sizes(&AmbientParams::new(5, n)) {
        Ok(profile) => json!(profile.sizes).to_string(),
        Err(e) => error_json(e),
    }
}

/// Runs the partition, profile, and conservation checks for one n and
/// returns a JSON summary.
#[wasm_bindgen]
pub fn verify(n: u16) -> String {
    let ladders = match scd5::assemble_ladders(n) {
        Ok(l) => l,
        Err(e) => return error_json(e),
    };
    let decomposition = match scd(n) {
        Ok(s) => s,
        Err(e) => return error_json(e),
    };
    let report = verify_partition(
        decomposition.chains.iter().map(|c| c.points.as_slice()),
        n,
    );
    let profile_ok = verify_chain_profile(
        decomposition.chains.iter().map(|c| c.points.as_slice()),
        n,
    );
    let mut cursor = 0usize;
    let conservation_ok = ladders.iter().all(|ladder| {
        let count = ladder.row_count().min(ladder.col_count());
        let peeled = &decomposition.chains[cursor..cursor + count];
        cursor += count;
        verify_peel_conservation(ladder, peeled)
    });
    json!({
        "n": n,
        "points": report.total_points,
        "chains": report.chain_count,
        "partition_ok": report.pass,
        "profile_ok": profile_ok,
        "conservation_ok": conservation_ok,
        "pass": report.pass && profile_ok && conservation_ok,
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_json_shape() {
        let value: serde_json::Value = serde_json::from_str(&decompose(2)).unwrap();
        assert_eq!(value["n"], 2);
        assert_eq!(value["chains"].as_array().unwrap().len(), 3);
        assert_eq!(value["profile"].as_array().unwrap().len(), 11);
    }

    #[test]
    fn verify_json_passes() {
        let value: serde_json::Value = serde_json::from_str(&verify(4)).unwrap();
        assert_eq!(value["pass"], true);
        assert_eq!(value["points"], 126);
    }

    #[test]
    fn oversized_n_reports_an_error_envelope() {
        let value: serde_json::Value = serde_json::from_str(&decompose(5000)).unwrap();
        assert!(value["error"].is_string());
    }
}
