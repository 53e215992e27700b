//! Witness search over parameterized construction templates.
//!
//! Parameters are scanned in lexicographic order (first declared parameter
//! outermost). `Range` parameters take every integer in their interval;
//! `Ladder` parameters take `lo, 2lo, 4lo, …` and, once a hit is found, the
//! hit value is bisected down towards the previous rung.

mod embed;
mod templates;

pub use embed::{build_embedding, embedding_template};
pub use templates::{cube, f_chain, pyr, pyr_cube, q_cube, reeve};
pub use templates::{construct_tail_pattern, tail_pattern, TAIL_BOUNDS};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::ehrhart::Engine;
use crate::exactnum::Polynomial;
use crate::oracle::Oracle;
use crate::patterns::{middle_pattern, Sign, SignPattern};
use crate::polytopes::Construction;
use crate::{Error, Result};

/// Work cap used when cross-checking a witness against the oracle.
pub const VERIFY_WORK_CAP: u64 = 2_000_000;

const BATCH: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Range { lo: u64, hi: u64 },
    Ladder { lo: u64, hi: u64 },
}

impl Domain {
    pub fn lo(self) -> u64 {
        match self {
            Domain::Range { lo, .. } | Domain::Ladder { lo, .. } => lo,
        }
    }

    pub fn hi(self) -> u64 {
        match self {
            Domain::Range { hi, .. } | Domain::Ladder { hi, .. } => hi,
        }
    }

    fn with_hi(self, hi: u64) -> Domain {
        match self {
            Domain::Range { lo, .. } => Domain::Range { lo, hi },
            Domain::Ladder { lo, .. } => Domain::Ladder { lo, hi },
        }
    }

    fn len(self) -> u64 {
        match self {
            Domain::Range { lo, hi } => hi.saturating_sub(lo) + u64::from(hi >= lo),
            Domain::Ladder { .. } => self.rungs().len() as u64,
        }
    }

    fn nth(self, i: u64) -> u64 {
        match self {
            Domain::Range { lo, .. } => lo + i,
            Domain::Ladder { .. } => self.rungs()[i as usize],
        }
    }

    /// `lo, 2lo, 4lo, …` up to `hi`, with `hi` itself as the last rung.
    fn rungs(self) -> Vec<u64> {
        let (lo, hi) = (self.lo().max(1), self.hi());
        let mut v = Vec::new();
        let mut x = lo;
        while x <= hi {
            v.push(x);
            x = match x.checked_mul(2) {
                Some(y) => y,
                None => break,
            };
        }
        if v.last().is_some_and(|&l| l < hi) {
            v.push(hi);
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: Domain,
}

pub type Params = BTreeMap<String, u64>;

type Builder = Arc<dyn Fn(&Params) -> Result<Construction> + Send + Sync>;

/// A named family of constructions indexed by integer parameters.
#[derive(Clone)]
pub struct Template {
    name: String,
    params: Vec<ParamSpec>,
    builder: Builder,
}

impl fmt::Debug for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Template").field("name", &self.name).field("params", &self.params).finish()
    }
}

impl Template {
    pub fn new(
        name: impl Into<String>,
        params: Vec<ParamSpec>,
        builder: impl Fn(&Params) -> Result<Construction> + Send + Sync + 'static,
    ) -> Self {
        Template { name: name.into(), params, builder: Arc::new(builder) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Parameters in scan order, outermost first.
    pub fn params(&self) -> &[ParamSpec] {
        &self.params
    }

    pub fn build(&self, params: &Params) -> Result<Construction> {
        for spec in &self.params {
            match params.get(spec.name) {
                Some(&v) if v >= spec.domain.lo() => {}
                Some(v) => {
                    return Err(Error::InvalidParameter(format!(
                        "{} = {v} is below {}",
                        spec.name,
                        spec.domain.lo()
                    )))
                }
                None => return Err(Error::InvalidParameter(format!("missing parameter {}", spec.name))),
            }
        }
        (self.builder)(params)
    }

    /// Replaces the domain of one parameter.
    pub fn with_domain(mut self, name: &str, domain: Domain) -> Self {
        for spec in &mut self.params {
            if spec.name == name {
                spec.domain = domain;
            }
        }
        self
    }

    /// Looks up a template by its CLI name: `reeve`, `pyr:K`, `pyr-cube:K,N`,
    /// `f-chain:D`, `q-cube:K,N`, `cube:S,N`.
    pub fn by_name(name: &str) -> Result<Template> {
        templates::by_name(name)
    }

    fn lowest(&self) -> Params {
        self.params.iter().map(|p| (p.name.to_string(), p.domain.lo())).collect()
    }
}

/// Upper limits for named parameters; unnamed ones keep the template's own.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bounds(BTreeMap<String, u64>);

impl Bounds {
    pub fn new() -> Self {
        Bounds::default()
    }

    pub fn max(mut self, name: &str, hi: u64) -> Self {
        self.0.insert(name.to_string(), hi);
        self
    }

    fn apply(&self, t: &Template) -> Vec<ParamSpec> {
        t.params
            .iter()
            .map(|p| ParamSpec {
                name: p.name,
                domain: self.0.get(p.name).map_or(p.domain, |&hi| p.domain.with_hi(hi)),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub template: String,
    pub params: Params,
    pub construction: Construction,
    pub polynomial: Polynomial,
    pub pattern: SignPattern,
    /// Whether the oracle reproduced the polynomial; false when the
    /// cross-check was out of reach.
    pub verified: bool,
}

impl Witness {
    pub fn to_json(&self) -> serde_json::Value {
        let params: serde_json::Map<String, serde_json::Value> =
            self.params.iter().map(|(k, v)| (k.clone(), v.to_string().into())).collect();
        serde_json::json!({
            "template": self.template,
            "params": params,
            "expr": self.construction.to_string(),
            "polynomial": self.polynomial.to_json(),
            "pattern": self.pattern.to_json(),
            "verified": self.verified,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(Witness),
    NotFound { bounds: BTreeMap<String, u64>, scanned: u64 },
}

impl Outcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Outcome::Found(w) => Some(w),
            Outcome::NotFound { .. } => None,
        }
    }

    pub fn into_witness(self) -> Option<Witness> {
        match self {
            Outcome::Found(w) => Some(w),
            Outcome::NotFound { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Searcher {
    pub engine: Engine,
    pub verify_work_cap: u64,
}

impl Default for Searcher {
    fn default() -> Self {
        Searcher { engine: Engine::default(), verify_work_cap: VERIFY_WORK_CAP }
    }
}

impl Searcher {
    fn hits(&self, t: &Template, params: &Params, target: &SignPattern) -> Result<bool> {
        let c = t.build(params)?;
        let p = self.engine.ehrhart(&c)?;
        Ok(p.degree() == Some(target.dim()) && middle_pattern(&p)? == *target)
    }

    pub fn find_witness(&self, t: &Template, target: &SignPattern, bounds: &Bounds) -> Result<Outcome> {
        target.ensure_strict()?;
        let dim = t.build(&t.lowest())?.dimension()?;
        if dim != target.dim() {
            return Err(Error::DimensionMismatch(format!(
                "template {} has dimension {dim}, target {} has dimension {}",
                t.name,
                target,
                target.dim()
            )));
        }
        let specs = bounds.apply(t);
        let sizes: Vec<u64> = specs.iter().map(|s| s.domain.len()).collect();
        let total = sizes.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n)).ok_or_else(|| {
            Error::ResourceLimit(format!("parameter space of {} is too large", t.name))
        })?;
        let record = |mut i: u64| -> Params {
            let mut out = Params::new();
            for (spec, &n) in specs.iter().zip(&sizes).rev() {
                out.insert(spec.name.to_string(), spec.domain.nth(i % n));
                i /= n;
            }
            out
        };
        let mut start = 0;
        while start < total {
            let end = (start + BATCH).min(total);
            let hit = (start..end).into_par_iter().find_map_first(|i| {
                let params = record(i);
                match self.hits(t, &params, target) {
                    Ok(true) => Some(Ok(params)),
                    Ok(false) => None,
                    Err(e) => Some(Err(e)),
                }
            });
            if let Some(found) = hit {
                let params = self.refine(t, &specs, found?, target)?;
                return self.witness(t, params).map(Outcome::Found);
            }
            start = end;
        }
        let bounds = specs.iter().map(|s| (s.name.to_string(), s.domain.hi())).collect();
        Ok(Outcome::NotFound { bounds, scanned: total })
    }

    /// Bisects each ladder parameter between the previous rung and the hit.
    fn refine(&self, t: &Template, specs: &[ParamSpec], mut params: Params, target: &SignPattern) -> Result<Params> {
        for spec in specs {
            let Domain::Ladder { .. } = spec.domain else { continue };
            let rungs = spec.domain.rungs();
            let hit = params[spec.name];
            let pos = rungs.iter().position(|&x| x == hit).expect("hit is a rung");
            if pos == 0 {
                continue;
            }
            let (mut fail, mut ok) = (rungs[pos - 1], hit);
            while ok - fail > 1 {
                let mid = fail + (ok - fail) / 2;
                let mut probe = params.clone();
                probe.insert(spec.name.to_string(), mid);
                if self.hits(t, &probe, target)? {
                    ok = mid;
                } else {
                    fail = mid;
                }
            }
            params.insert(spec.name.to_string(), ok);
        }
        Ok(params)
    }

    fn witness(&self, t: &Template, params: Params) -> Result<Witness> {
        let construction = t.build(&params)?;
        let polynomial = self.engine.ehrhart(&construction)?;
        let pattern = middle_pattern(&polynomial)?;
        let verified = match Oracle::with_work_cap(self.verify_work_cap).cross_check(&self.engine, &construction) {
            Ok(report) => report.equal,
            Err(Error::ResourceLimit(_)) => false,
            Err(e) => return Err(e),
        };
        Ok(Witness { template: t.name.clone(), params, construction, polynomial, pattern, verified })
    }
}

/// Sign pattern of the template as `m` grows without bound, read off the
/// affine decomposition `b_i + a_i·m` of each coefficient. Other parameters
/// are held at their lowest values.
pub fn eventual_pattern(t: &Template) -> Result<SignPattern> {
    if !t.params.iter().any(|p| p.name == "m") {
        return Err(Error::InvalidParameter(format!("template {} has no parameter m", t.name)));
    }
    let base = t.lowest();
    let build = |m: u64| {
        let mut p = base.clone();
        p.insert("m".into(), m);
        t.build(&p).expect("in-domain parameters")
    };
    let lo = base["m"];
    let f = crate::analysis::f_family_decompose(build, [lo + 100, lo + 200, lo + 300])?;
    let zero = crate::Rational::from_integer(0.into());
    let signs = f
        .a
        .iter()
        .zip(&f.b)
        .map(|(a, b)| if *a != zero { Sign::of(a) } else { Sign::of(b) })
        .take(f.n.saturating_sub(2))
        .collect();
    SignPattern::new(f.n, signs)
}

pub fn find_witness(t: &Template, target: &SignPattern, bounds: &Bounds) -> Result<Outcome> {
    Searcher::default().find_witness(t, target, bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::Sign;

    fn linear_negative() -> SignPattern {
        SignPattern::new(3, vec![Sign::Minus]).unwrap()
    }

    #[test]
    fn reeve_threshold() {
        let t = Template::by_name("reeve").unwrap();
        let w = find_witness(&t, &linear_negative(), &Bounds::new().max("m", 100)).unwrap();
        let w = w.into_witness().unwrap();
        assert_eq!(w.params["m"], 13);
        assert_eq!(w.construction, Construction::Reeve(13));
        assert!(w.verified);
        let none = find_witness(&t, &linear_negative(), &Bounds::new().max("m", 12)).unwrap();
        assert_eq!(none, Outcome::NotFound { bounds: [("m".to_string(), 12)].into(), scanned: 12 });
    }

    #[test]
    fn dimension_mismatch() {
        let t = Template::by_name("reeve").unwrap();
        let err = find_witness(&t, &"-+".parse().unwrap(), &Bounds::new());
        assert!(matches!(err, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn non_strict_target_rejected() {
        let t = Template::by_name("reeve").unwrap();
        let err = find_witness(&t, &SignPattern::new(3, vec![Sign::Zero]).unwrap(), &Bounds::new());
        assert!(matches!(err, Err(Error::NonStrictPattern(_))));
    }

    #[test]
    fn ladder_refines_to_threshold() {
        let t = Template::by_name("reeve").unwrap().with_domain("m", Domain::Ladder { lo: 1, hi: 1 << 20 });
        let w = find_witness(&t, &linear_negative(), &Bounds::new()).unwrap().into_witness().unwrap();
        assert_eq!(w.params["m"], 13);
    }

    #[test]
    fn eventual_patterns() {
        assert_eq!(eventual_pattern(&Template::by_name("reeve").unwrap()).unwrap().to_desc(), "-");
        let p = eventual_pattern(&Template::by_name("pyr-cube:3,6").unwrap()).unwrap();
        assert_eq!(p.to_desc(), "+++-------");
        let p = eventual_pattern(&Template::by_name("pyr-cube:3,5").unwrap()).unwrap();
        assert_ne!(p.to_desc(), "+++------");
        assert!(eventual_pattern(&Template::by_name("cube:2,2").unwrap()).is_err());
    }

    #[test]
    fn rungs() {
        assert_eq!(Domain::Ladder { lo: 1, hi: 10 }.rungs(), [1, 2, 4, 8, 10]);
        assert_eq!(Domain::Ladder { lo: 13, hi: 52 }.rungs(), [13, 26, 52]);
        assert_eq!(Domain::Range { lo: 3, hi: 2 }.len(), 0);
    }

    #[test]
    fn pyr_cube_three() {
        let t = Template::by_name("pyr-cube:1,3").unwrap();
        let target: SignPattern = "+----".parse().unwrap();
        let w = find_witness(&t, &target, &Bounds::new().max("m", 1000)).unwrap().into_witness().unwrap();
        assert_eq!(w.pattern, target);
        let m = w.params["m"];
        let below = Template::by_name("pyr-cube:1,3").unwrap();
        let miss = find_witness(&below, &target, &Bounds::new().max("m", m - 1)).unwrap();
        assert!(miss.witness().is_none());
        let json = w.to_json();
        assert_eq!(json["params"]["m"], m.to_string());
        assert_eq!(json["pattern"]["middle_desc"], "+----");
    }
}
