//! Browser bindings. Each call returns a JSON string for the page to draw.
//!
//! The `*_json` functions hold the logic and run natively; the exported
//! wrappers only turn their errors into JS exceptions.

use rs_cycles::rs::rs_trace;
use rs_cycles::shapeset::constructive_s_alpha;
use rs_cycles::{
    brute_force_s_alpha, class_size, construct_two_cycle, rs_forward, BruteForceConfig, Partition, Permutation,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest class the page enumerates; bigger ones fall back to the constructions.
pub const PAGE_BUDGET: u128 = 2_000_000;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn insertion_json(sigma: &str) -> Result<String, String> {
    let sigma = Permutation::parse(sigma, None).map_err(err)?;
    let pair = rs_forward(&sigma);
    Ok(json!({
        "oneLine": sigma.one_line(),
        "cycles": sigma.format_cycles(),
        "cycleType": sigma.cycle_type().parts(),
        "shape": pair.shape().parts(),
        "p": pair.p.rows(),
        "q": pair.q.rows(),
        "steps": rs_trace(&sigma)
            .iter()
            .map(|s| json!({ "inserted": s.inserted, "p": s.p.rows(), "q": s.q.rows() }))
            .collect::<Vec<_>>(),
    })
    .to_string())
}

pub fn coloring_json(alpha: &str, shape: &str) -> Result<String, String> {
    let alpha: Partition = alpha.parse().map_err(err)?;
    let shape: Partition = shape.parse().map_err(err)?;
    let out = construct_two_cycle(&alpha, &shape).map_err(err)?;
    let up = out.q.as_ref().map(|q| q.column_reverse());
    Ok(json!({
        "kind": out.kind,
        "shape": shape.parts(),
        "qUp": up.as_ref().map(|t| t.rows()),
        "colors": out.coloring.as_ref().map(|c| c.rows()),
        "p": out.sigma.as_ref().map(|s| rs_forward(s).p.rows().to_vec()),
        "sigma": out.sigma.as_ref().map(|s| s.one_line().to_vec()),
        "cycles": out.sigma.as_ref().map(|s| s.format_cycles()),
    })
    .to_string())
}

/// `S_alpha` against `B_alpha`. Enumerates the class when it fits the page
/// budget; two-part classes beyond it use the constructions.
pub fn shape_set_json(alpha: &str) -> Result<String, String> {
    let alpha: Partition = alpha.parse().map_err(err)?;
    let report = if class_size(&alpha) <= PAGE_BUDGET {
        let cfg = BruteForceConfig {
            jobs: 1,
            budget: PAGE_BUDGET,
            histogram: true,
        };
        brute_force_s_alpha(&alpha, &cfg).map_err(err)?
    } else if alpha.len() == 2 {
        constructive_s_alpha(&alpha).map_err(err)?
    } else {
        return Err(format!("class of size {} is too large for the page", class_size(&alpha)));
    };
    let parts = |v: &[Partition]| v.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>();
    Ok(json!({
        "alpha": alpha.parts(),
        "method": report.method,
        "classSize": report.class_size.to_string(),
        "bAlpha": parts(&report.b_alpha),
        "sAlpha": parts(&report.s_alpha),
        "missing": parts(&report.missing),
        "histogram": report.histogram.map(|h| h.into_iter().map(|(p, c)| json!([p.parts(), c])).collect::<Vec<_>>()),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn insertion(sigma: &str) -> Result<String, JsError> {
    insertion_json(sigma).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn coloring(alpha: &str, shape: &str) -> Result<String, JsError> {
    coloring_json(alpha, shape).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = shapeSet)]
pub fn shape_set(alpha: &str) -> Result<String, JsError> {
    shape_set_json(alpha).map_err(|e| JsError::new(&e))
}
