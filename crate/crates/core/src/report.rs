//! Text and JSON renderings, and the cochain file format.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::cohomology::{BlockSpec, Cochain1, Cochain2, CohomologyReport};
use crate::error::{Error, Result};
use crate::gamma::{self, NAMES};
use crate::parse::parse_symbol;

pub fn ser_display<T: Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `{"block": {...}, "images": {"D1": "t^-1*xi1", ...}}`; zero values are omitted.
pub fn cochain_to_json(c: &Cochain1) -> Value {
    let images: BTreeMap<&str, String> = c.nonzero().map(|(n, v)| (n, v.to_string())).collect();
    json!({ "block": c.block, "images": images })
}

pub fn cochain_from_json(v: &Value) -> Result<Cochain1> {
    let block: BlockSpec = serde_json::from_value(v.get("block").cloned().ok_or_else(|| Error::Json("missing \"block\"".into()))?)?;
    block.validate()?;
    let mut c = Cochain1::zero(block);
    let images = v
        .get("images")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Json("missing \"images\" object".into()))?;
    for (name, text) in images {
        let text = text.as_str().ok_or_else(|| Error::Json(format!("value of {name} is not a string")))?;
        c.set(name, parse_symbol(text)?)?;
    }
    Ok(c)
}

pub fn read_cochain(path: &Path) -> Result<Cochain1> {
    let text = std::fs::read_to_string(path)?;
    cochain_from_json(&serde_json::from_str(&text)?)
}

pub fn write_cochain(path: &Path, c: &Cochain1) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(&cochain_to_json(c))?)?;
    Ok(())
}

pub fn cochain2_to_json(c: &Cochain2) -> Value {
    let values: Vec<Value> = c
        .values
        .iter()
        .map(|((a, b), v)| json!({ "pair": [NAMES[*a], NAMES[*b]], "value": v.to_string() }))
        .collect();
    json!({ "zero": c.is_zero(), "values": values })
}

pub fn cohomology_to_json(r: &CohomologyReport) -> Value {
    json!({
        "block": r.block,
        "alpha": r.alpha.as_ref().map(|a| a.to_string()),
        "dim_c0": r.dim_c0,
        "dim_c1": r.dim_c1,
        "dim_cocycles": r.dim_cocycles,
        "dim_coboundaries": r.dim_coboundaries,
        "dim_h1": r.dim_h1,
        "representatives": r.representatives.iter().map(cochain_to_json).collect::<Vec<_>>(),
        "pivot_polynomials": r.pivot_polynomials.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

pub fn cohomology_text(r: &CohomologyReport) -> String {
    let mut s = format!(
        "block {}: dim C0 = {}, dim C1 = {}, dim Z1 = {}, dim B1 = {}, dim H1 = {}\n",
        r.block, r.dim_c0, r.dim_c1, r.dim_cocycles, r.dim_coboundaries, r.dim_h1
    );
    if let Some(a) = &r.alpha {
        s += &format!("  at alpha = {a}\n");
    }
    for (i, rep) in r.representatives.iter().enumerate() {
        s += &format!(" representative {}:\n{rep}", i + 1);
    }
    if !r.pivot_polynomials.is_empty() {
        let ps: Vec<String> = r.pivot_polynomials.iter().map(|p| p.to_string()).collect();
        s += &format!("  generic answer; pivots vanish at roots of: {}\n", ps.join(", "));
    }
    s
}

/// One named check with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    pub fn from_result(name: impl Into<String>, r: Result<String>) -> Self {
        match r {
            Ok(d) => Check::new(name, true, d),
            Err(e) => Check::new(name, false, e.to_string()),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s += &format!("[{}] {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        s
    }

    pub fn json(&self) -> Value {
        json!({ "passed": self.passed(), "checks": self.checks })
    }
}

/// Name/value table of an image basis.
pub fn basis_json(basis: &gamma::GammaImageBasis) -> Value {
    serde_json::to_value(&basis.elements).unwrap_or(Value::Null)
}
