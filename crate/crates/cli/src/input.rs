//! Loading labels, diagrams and weights from files, stdin or inline JSON.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::Value;
use superdual_core::{
    fmt_q, parse_grading, realize, FundamentalWeight, NonCompactYoungDiagram, RepLabel, Strategy,
};

/// `-` reads stdin, a leading `{` or `[` is inline JSON, anything else is a path.
pub fn read_json(arg: &str) -> Result<Value> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        fs::read_to_string(arg).with_context(|| format!("cannot read {arg}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("{arg}: not valid JSON"))
}

pub fn label(arg: &str) -> Result<RepLabel> {
    let v = read_json(arg)?;
    let l: RepLabel = serde_json::from_value(v).map_err(|e| anyhow!("{arg}: {e}\n{LABEL_GRAMMAR}"))?;
    l.validate()?;
    Ok(l)
}

/// A diagram JSON carries `P`; a bare label is realised with the minimal number of colours.
pub fn diagram(arg: &str, allow_nonunitary: bool) -> Result<NonCompactYoungDiagram> {
    let v = read_json(arg)?;
    if v.get("P").is_some() {
        let d: NonCompactYoungDiagram = serde_json::from_value(v).map_err(|e| anyhow!("{arg}: {e}\n{DIAGRAM_GRAMMAR}"))?;
        Ok(realize(&d.label, Strategy::Explicit(d.realization), allow_nonunitary)?)
    } else {
        let l: RepLabel = serde_json::from_value(v).map_err(|e| anyhow!("{arg}: {e}\n{LABEL_GRAMMAR}"))?;
        Ok(realize(&l, Strategy::MinimalP, allow_nonunitary)?)
    }
}

/// Either a full weight object or a bare array of entries plus `--grading`.
pub fn weight(arg: &str, grading: Option<&str>) -> Result<FundamentalWeight> {
    let v = read_json(arg)?;
    match v {
        Value::Array(_) => {
            let Some(g) = grading else { bail!("a bare weight array needs --grading\n{WEIGHT_GRAMMAR}") };
            let entries: Vec<Value> = serde_json::from_value(v)?;
            let obj = serde_json::json!({ "grading": g, "m": entries });
            let w: FundamentalWeight = serde_json::from_value(obj).map_err(|e| anyhow!("{arg}: {e}\n{WEIGHT_GRAMMAR}"))?;
            Ok(w)
        }
        _ => {
            let w: FundamentalWeight = serde_json::from_value(v).map_err(|e| anyhow!("{arg}: {e}\n{WEIGHT_GRAMMAR}"))?;
            Ok(w)
        }
    }
}

pub fn grading(text: &str) -> Result<superdual_core::Grading> {
    parse_grading(text).map_err(|e| anyhow!("{e}\n{GRADING_GRAMMAR}"))
}

pub fn weight_text(w: &FundamentalWeight) -> String {
    let entries: Vec<String> = w.m.iter().map(fmt_q).collect();
    format!("{} [{}]", superdual_core::render_grading(&w.grading), entries.join(","))
}

pub const LABEL_GRAMMAR: &str = "label JSON: {\"p\":2,\"q\":2,\"m\":4,\"mu_L\":[0,0],\"tau\":[1,1,0,0],\"mu_R\":[0,0],\"beta_L\":\"0\",\"beta_R\":\"0\"}";
pub const DIAGRAM_GRAMMAR: &str =
    "diagram JSON: label fields plus {\"gamma_L\":\"0\",\"gamma_R\":\"1/2\",\"fdelta\":2,\"P\":3}";
pub const WEIGHT_GRAMMAR: &str =
    "weight JSON: {\"grading\":\"su(2,|4|2)\",\"m\":[\"-1\",\"-1\",\"1\",\"1\",\"0\",\"0\",\"0\",\"0\"]} or a bare array with --grading";
pub const GRADING_GRAMMAR: &str = "grading: su(p,q|m) notation such as \"su(2,2|4)\" or \"su(2,|4|2)\"";
