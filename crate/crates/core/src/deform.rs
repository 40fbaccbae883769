//! Formal deformations `rho + sum_k beta^k rho_k` of the embedding and their
//! exact verification.

use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::{cup, d1, named_cocycle, Cochain1, Cochain2, Complex, Engine};
use crate::error::{Error, Result};
use crate::gamma::{DIM, NAMES};
use crate::quantize;
use crate::report::{cochain2_to_json, cochain_from_json, ser_display};
use crate::scalar::{rat, Scalar};
use crate::symalg::Symbol;

/// `orders[0]` is the embedding itself.
#[derive(Clone, Debug)]
pub struct DeformedMap {
    pub orders: Vec<Cochain1>,
    pub engine: Engine,
}

#[derive(Clone, Debug, Serialize)]
pub struct Residual {
    pub pair: (String, String),
    pub beta_power: u32,
    #[serde(serialize_with = "ser_display")]
    pub residual: Symbol,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomomorphismVerdict {
    pub pairs_checked: usize,
    pub max_beta: u32,
    pub residuals: Vec<Residual>,
}

impl HomomorphismVerdict {
    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct OrderRelation {
    pub order: u32,
    pub residual: Cochain2,
}

impl OrderRelation {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Build the map from higher orders `rho_1, rho_2, ...`; each is checked
/// against its block.
pub fn assemble(orders: Vec<Cochain1>, engine: Engine) -> Result<DeformedMap> {
    let cx = Complex::for_engine(engine);
    for (k, c) in orders.iter().enumerate() {
        if c.block.engine() != engine {
            return Err(Error::BlockViolation(format!("order {} belongs to the {:?} complex", k + 1, c.block.engine())));
        }
        c.validate(cx).map_err(|e| Error::BlockViolation(format!("order {}: {e}", k + 1)))?;
    }
    let base = orders.first().map(|c| c.block).unwrap_or_else(|| match engine {
        Engine::Poisson => crate::cohomology::BlockSpec::new(2, 0, crate::symalg::Target::K4prime),
        Engine::Quantized => quantize::embedding_block(),
    });
    let mut all = vec![Cochain1::from_basis(&cx.basis, base)];
    all.extend(orders);
    Ok(DeformedMap { orders: all, engine })
}

impl DeformedMap {
    pub fn complex(&self) -> &'static Complex {
        Complex::for_engine(self.engine)
    }

    /// `rho~(X_i) = sum_k beta^k rho_k(X_i)`.
    pub fn image(&self, i: usize) -> Symbol {
        let mut s = Symbol::zero();
        for (k, c) in self.orders.iter().enumerate() {
            s = &s + &c.images[i].times_beta(k as u32);
        }
        s
    }

    pub fn images(&self) -> Vec<Symbol> {
        (0..DIM).map(|i| self.image(i)).collect()
    }

    pub fn top_order(&self) -> u32 {
        self.orders.iter().rposition(|c| !c.is_zero()).unwrap_or(0) as u32
    }

    pub fn order(&self, k: usize) -> Option<&Cochain1> {
        self.orders.get(k).filter(|c| !c.is_zero())
    }
}

/// `[rho~(X), rho~(Y)] - rho~([X, Y])` for all ordered basis pairs, split by
/// powers of `beta`; only powers `<= max_beta` are reported when given.
pub fn verify_homomorphism_upto(d: &DeformedMap, max_beta: Option<u32>) -> Result<HomomorphismVerdict> {
    let cx = d.complex();
    let images = d.images();
    let pairs: Vec<(usize, usize)> = (0..DIM).flat_map(|a| (0..DIM).map(move |b| (a, b))).collect();
    let per_pair = pairs
        .par_iter()
        .map(|&(a, b)| {
            let mut r = cx.engine.bracket(&images[a], &images[b])?;
            for (z, c) in cx.table.get(a, b).iter().enumerate() {
                if !c.is_zero() {
                    r = &r - &images[z].scale(c);
                }
            }
            let top = r.max_beta();
            Ok((0..=top)
                .filter(|k| max_beta.is_none_or(|m| *k <= m))
                .filter_map(|k| {
                    let part = r.beta_part(k);
                    (!part.is_zero()).then(|| Residual {
                        pair: (NAMES[a].to_string(), NAMES[b].to_string()),
                        beta_power: k,
                        residual: part,
                    })
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomomorphismVerdict {
        pairs_checked: pairs.len(),
        max_beta: 2 * d.top_order(),
        residuals: per_pair.into_iter().flatten().collect(),
    })
}

pub fn verify_homomorphism(d: &DeformedMap) -> Result<HomomorphismVerdict> {
    verify_homomorphism_upto(d, None)
}

/// `d rho_k + 1/2 sum_{i+j=k} [[rho_i, rho_j]]` for `k = 1..=max_order`,
/// with missing orders read as zero.
pub fn verify_order_relations(d: &DeformedMap, max_order: u32) -> Result<Vec<OrderRelation>> {
    let cx = d.complex();
    let half = Scalar::from_rat(rat(1, 2));
    let zero = Cochain1::zero(d.orders[0].block);
    let get = |k: usize| d.orders.get(k).unwrap_or(&zero);
    (1..=max_order as usize)
        .map(|k| {
            let mut r = d1(cx, get(k))?;
            for i in 1..k {
                let (a, b) = (get(i), get(k - i));
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                r = r.combine(&cup(cx, a, b)?, &half);
            }
            Ok(OrderRelation { order: k as u32, residual: r })
        })
        .collect()
}

pub fn k4_deformation() -> Result<DeformedMap> {
    assemble(vec![named_cocycle("theta")?], Engine::Poisson)
}

pub fn pplus_deformation() -> Result<DeformedMap> {
    assemble(vec![named_cocycle("theta1")?, named_cocycle("rho2")?], Engine::Poisson)
}

pub fn quantized_deformation() -> Result<DeformedMap> {
    assemble(vec![named_cocycle("thetabar1")?, named_cocycle("rho2h")?], Engine::Quantized)
}

#[derive(Clone, Debug, Serialize)]
pub struct QuantizedVerdict {
    pub homomorphism: HomomorphismVerdict,
    pub contraction_mismatches: Vec<String>,
}

impl QuantizedVerdict {
    pub fn passed(&self) -> bool {
        self.homomorphism.passed() && self.contraction_mismatches.is_empty()
    }
}

/// The quantized deformation is a homomorphism for `h_bracket`, and its
/// `h = 0` contraction is the classical one order by order.
pub fn verify_quantized() -> Result<QuantizedVerdict> {
    let q = quantized_deformation()?;
    let c = pplus_deformation()?;
    let homomorphism = verify_homomorphism(&q)?;
    let mut contraction_mismatches = Vec::new();
    for (k, (qo, co)) in q.orders.iter().zip(&c.orders).enumerate() {
        for i in 0..DIM {
            let got = quantize::contract(&qo.images[i]);
            if got != co.images[i] {
                contraction_mismatches.push(format!("order {k}, {}: {} vs {}", NAMES[i], got, co.images[i]));
            }
        }
    }
    Ok(QuantizedVerdict { homomorphism, contraction_mismatches })
}

/// `{"engine": "poisson"|"quantized", "orders": [cochain | "path.json", ...]}`;
/// paths are relative to the descriptor and list orders from 1 upwards.
pub fn descriptor_from_json(v: &Value, base: Option<&Path>) -> Result<DeformedMap> {
    let engine: Engine = serde_json::from_value(v.get("engine").cloned().unwrap_or(json!("poisson")))?;
    let orders = v
        .get("orders")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing \"orders\" array".into()))?
        .iter()
        .map(|o| match o {
            Value::String(p) => {
                let path = base.map(|b| b.join(p)).unwrap_or_else(|| p.into());
                crate::report::read_cochain(&path)
            }
            other => cochain_from_json(other),
        })
        .collect::<Result<Vec<_>>>()?;
    assemble(orders, engine)
}

pub fn read_descriptor(path: &Path) -> Result<DeformedMap> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    descriptor_from_json(&v, path.parent())
}

pub fn verdict_json(h: &HomomorphismVerdict, rel: &[OrderRelation]) -> Value {
    json!({
        "passed": h.passed() && rel.iter().all(OrderRelation::holds),
        "homomorphism": h,
        "order_relations": rel.iter().map(|r| json!({
            "order": r.order,
            "holds": r.holds(),
            "residual": cochain2_to_json(&r.residual),
        })).collect::<Vec<_>>(),
    })
}
