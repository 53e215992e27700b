use super::{Domain, ParamSpec, Params, Template};
use crate::patterns::EmbedRule;
use crate::polytopes::Construction::{self, Interval, Reeve};
use crate::{Error, Result};

fn get(params: &Params, name: &str, min: u64) -> Result<u64> {
    match params.get(name) {
        Some(&v) if v >= min => Ok(v),
        Some(&v) => Err(Error::InvalidParameter(format!("{name} = {v}, need {name} >= {min}"))),
        None => Err(Error::InvalidParameter(format!("missing parameter {name}"))),
    }
}

/// Lower limit of each parameter a rule reads.
fn param_mins(rule: EmbedRule) -> &'static [(&'static str, u64)] {
    match rule {
        EmbedRule::IHigh | EmbedRule::IILeft | EmbedRule::IIRight => &[("r", 1)],
        EmbedRule::ILow => &[("m", 1)],
        EmbedRule::III => &[("r", 1), ("a", 1)],
        EmbedRule::IV | EmbedRule::V => &[("m", 13), ("r", 1)],
    }
}

/// The product/dilation construction behind each embedding rule:
///
/// | rule | construction |
/// |------|--------------|
/// | I-high | `rP × [0,1]` |
/// | I-low | `P × [0,m]` |
/// | II-left | `rP1 × P2` |
/// | II-right | `P1 × rP2` |
/// | III | `rP × conv{(0,0),(1,0),(1,a),(2,a)}` |
/// | IV | `rP × T_m` |
/// | V | `P × rT_m` |
pub fn build_embedding(rule: EmbedRule, bases: &[Construction], params: &Params) -> Result<Construction> {
    if bases.len() != rule.arity() {
        return Err(Error::InvalidParameter(format!(
            "rule {rule} takes {} base(s), got {}",
            rule.arity(),
            bases.len()
        )));
    }
    for b in bases {
        b.ensure_valid()?;
    }
    let mut v = Vec::new();
    for &(name, min) in param_mins(rule) {
        v.push(get(params, name, min)?);
    }
    let p = bases[0].clone();
    let dil = Construction::dilate;
    Ok(match rule {
        EmbedRule::IHigh => Construction::product(dil(v[0], p), Interval(1)),
        EmbedRule::ILow => Construction::product(p, Interval(v[0])),
        EmbedRule::IILeft => Construction::product(dil(v[0], p), bases[1].clone()),
        EmbedRule::IIRight => Construction::product(p, dil(v[0], bases[1].clone())),
        EmbedRule::III => Construction::product(dil(v[0], p), Construction::thin_parallelogram(v[1])),
        EmbedRule::IV => Construction::product(dil(v[1], p), Reeve(v[0])),
        EmbedRule::V => Construction::product(p, dil(v[1], Reeve(v[0]))),
    })
}

/// Template over the rule's parameters, each on a doubling ladder.
pub fn embedding_template(rule: EmbedRule, bases: Vec<Construction>) -> Result<Template> {
    if bases.len() != rule.arity() {
        return Err(Error::InvalidParameter(format!("rule {rule} takes {} base(s)", rule.arity())));
    }
    let params = param_mins(rule)
        .iter()
        .map(|&(name, lo)| {
            let hi = if name == "r" { 1 << 12 } else { 1 << 24 };
            ParamSpec { name, domain: Domain::Ladder { lo, hi } }
        })
        .collect();
    let label = bases.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    Ok(Template::new(format!("embed-{rule}[{label}]"), params, move |p| build_embedding(rule, &bases, p)))
}
