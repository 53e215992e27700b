use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use super::{embed_pattern, EmbedRule, KnownFacts, Sign, SignPattern};
use crate::{Error, Result};

/// Which embedding rules may be used. Rule I covers both variants, as does II.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RuleSet {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
    pub v: bool,
}

impl RuleSet {
    pub const I_TO_IV: RuleSet = RuleSet { i: true, ii: true, iii: true, iv: true, v: false };
    pub const ALL: RuleSet = RuleSet { i: true, ii: true, iii: true, iv: true, v: true };
    pub const NONE: RuleSet = RuleSet { i: false, ii: false, iii: false, iv: false, v: false };

    fn allows(&self, rule: EmbedRule) -> bool {
        match rule {
            EmbedRule::IHigh | EmbedRule::ILow => self.i,
            EmbedRule::IILeft | EmbedRule::IIRight => self.ii,
            EmbedRule::III => self.iii,
            EmbedRule::IV => self.iv,
            EmbedRule::V => self.v,
        }
    }
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::I_TO_IV
    }
}

impl FromStr for RuleSet {
    type Err = Error;
    /// Comma-separated subset of `I,II,III,IV,V`.
    fn from_str(s: &str) -> Result<Self> {
        let mut set = RuleSet::NONE;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.to_ascii_uppercase().as_str() {
                "I" => set.i = true,
                "II" => set.ii = true,
                "III" => set.iii = true,
                "IV" => set.iv = true,
                "V" => set.v = true,
                _ => return Err(Error::InvalidInput(format!("unknown rule {part:?}"))),
            }
        }
        Ok(set)
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [(self.i, "I"), (self.ii, "II"), (self.iii, "III"), (self.iv, "IV"), (self.v, "V")]
            .into_iter()
            .filter(|(on, _)| *on)
            .map(|(_, n)| n)
            .collect();
        f.write_str(&names.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every strict pattern of every lower dimension counts as realized.
    Inductive,
    /// Only what follows from the known-facts store.
    Strict,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inductive" => Ok(Mode::Inductive),
            "strict" => Ok(Mode::Strict),
            _ => Err(Error::InvalidInput(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReachRule {
    /// Every middle coefficient negative.
    AllMinus,
    /// Exactly one negative middle coefficient.
    SingleMinus,
    /// Listed in the known-facts store.
    Known,
    Embed(EmbedRule),
}

impl fmt::Display for ReachRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReachRule::AllMinus => f.write_str("base: all negative"),
            ReachRule::SingleMinus => f.write_str("base: one negative"),
            ReachRule::Known => f.write_str("known fact"),
            ReachRule::Embed(r) => write!(f, "rule {r}"),
        }
    }
}

/// How a pattern is reached: the rule and the source patterns it was applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reach {
    pub rule: ReachRule,
    pub preimages: Vec<SignPattern>,
}

impl Reach {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rule": self.rule.to_string(),
            "preimages": self.preimages.iter().map(SignPattern::to_json).collect::<Vec<_>>(),
        })
    }
}

fn base(p: &SignPattern) -> Option<ReachRule> {
    let minus = p.middle().iter().filter(|&&s| s == Sign::Minus).count();
    if minus == p.middle().len() {
        Some(ReachRule::AllMinus)
    } else if minus == 1 {
        Some(ReachRule::SingleMinus)
    } else {
        None
    }
}

/// First embedding rule whose image contains `p`, with sources satisfying
/// `realized`. Rules are tried in the order I-high, I-low, II, III, IV, V.
fn preimage(
    p: &SignPattern,
    rules: &RuleSet,
    realized: &dyn Fn(&SignPattern) -> bool,
) -> Option<Reach> {
    use Sign::{Minus, Plus};
    let c = p.middle();
    let len = c.len();
    let hit = |rule: EmbedRule, pre: Vec<SignPattern>| -> Option<Reach> {
        (pre.iter().all(|q| q.dim() >= 2 && realized(q))).then_some(Reach { rule: ReachRule::Embed(rule), preimages: pre })
    };
    let from = |v: &[Sign]| SignPattern::from_middle(v.to_vec());
    let mut found = None;

    if rules.allows(EmbedRule::IHigh) && len >= 1 && c[len - 1] == Plus {
        found = found.or_else(|| hit(EmbedRule::IHigh, vec![from(&c[..len - 1])]));
    }
    if found.is_none() && rules.allows(EmbedRule::ILow) && len >= 1 && c[0] == Plus {
        found = hit(EmbedRule::ILow, vec![from(&c[1..])]);
    }
    if found.is_none() && rules.ii {
        for j in 0..len.saturating_sub(1) {
            if c[j] != Plus || c[j + 1] != Plus {
                continue;
            }
            let (left, right) = (from(&c[..j]), from(&c[j + 2..]));
            let r = if left.dim() >= right.dim() {
                hit(EmbedRule::IILeft, vec![left, right])
            } else {
                hit(EmbedRule::IIRight, vec![right, left])
            };
            if r.is_some() {
                found = r;
                break;
            }
        }
    }
    // III: (c1, +, c1, c2, ...) from a source of dimension >= 3
    if found.is_none() && rules.iii && len >= 3 && c[1] == Plus && c[2] == c[0] {
        let src = [&c[..1], &c[3..]].concat();
        found = hit(EmbedRule::III, vec![from(&src)]);
    }
    // IV: (-, -c1, ..., -c_{d-2}, -, -)
    if found.is_none() && rules.iv && len >= 3 && c[0] == Minus && c[len - 2] == Minus && c[len - 1] == Minus {
        let src: Vec<Sign> = c[1..len - 2].iter().map(|&s| -s).collect();
        found = hit(EmbedRule::IV, vec![from(&src)]);
    }
    // V: (-, -c1, +, c1, ...)
    if found.is_none() && rules.v && len >= 4 && c[0] == Minus && c[2] == Plus && c[1] == -c[3] {
        found = hit(EmbedRule::V, vec![from(&c[3..])]);
    }
    if let Some(r) = &found {
        debug_assert_eq!(
            &embed_pattern(match r.rule { ReachRule::Embed(e) => e, _ => unreachable!() }, &r.preimages.iter().collect::<Vec<_>>()).unwrap(),
            p
        );
    }
    found
}

/// Reachability assuming every strict pattern of every lower dimension is
/// realized. `None` means no base family or allowed rule produces `p`.
pub fn reachable_inductive(p: &SignPattern, rules: &RuleSet) -> Result<Option<Reach>> {
    p.ensure_strict()?;
    if let Some(b) = base(p) {
        return Ok(Some(Reach { rule: b, preimages: vec![] }));
    }
    Ok(preimage(p, rules, &|q| q.dim() < p.dim()))
}

fn sorted(mut v: Vec<SignPattern>) -> Vec<SignPattern> {
    v.sort_by_key(SignPattern::to_desc);
    v
}

fn check_dim(d: usize) -> Result<()> {
    if !(3..=40).contains(&d) {
        return Err(Error::Domain(format!("dimension {d} outside 3..=40")));
    }
    Ok(())
}

/// Strict patterns of dimension `d` not reachable in inductive mode, sorted
/// by their descending text form.
pub fn remaining_patterns(d: usize, rules: &RuleSet) -> Result<Vec<SignPattern>> {
    check_dim(d)?;
    let len = d - 2;
    let out: Vec<SignPattern> = (0u64..1 << len)
        .into_par_iter()
        .map(|bits| SignPattern::from_bits(d, bits))
        .filter(|p| reachable_inductive(p, rules).unwrap().is_none())
        .collect();
    Ok(sorted(out))
}

fn bits_of(p: &SignPattern) -> u64 {
    p.middle().iter().enumerate().filter(|(_, &s)| s == Sign::Plus).map(|(j, _)| 1u64 << j).sum()
}

/// Realized strict patterns per dimension `2..=d`, closed under the allowed
/// rules and seeded only by the base families and the known facts.
pub fn realized_strict(d: usize, rules: &RuleSet, facts: &KnownFacts) -> HashMap<usize, HashSet<u64>> {
    let mut realized: HashMap<usize, HashSet<u64>> = HashMap::new();
    for dim in 2..=d {
        let known: HashSet<u64> = facts.patterns_of_dim(dim).filter(|p| p.is_strict()).map(bits_of).collect();
        let set: HashSet<u64> = (0u64..1 << (dim - 2))
            .into_par_iter()
            .filter(|&bits| {
                let p = SignPattern::from_bits(dim, bits);
                known.contains(&bits)
                    || base(&p).is_some()
                    || preimage(&p, rules, &|q| {
                        realized.get(&q.dim()).is_some_and(|s| s.contains(&bits_of(q)))
                    })
                    .is_some()
            })
            .collect();
        realized.insert(dim, set);
    }
    realized
}

/// Strict patterns of dimension `d` not derivable from the known facts.
pub fn remaining_patterns_strict(d: usize, rules: &RuleSet, facts: &KnownFacts) -> Result<Vec<SignPattern>> {
    check_dim(d)?;
    let realized = realized_strict(d, rules, facts);
    let top = &realized[&d];
    let out = (0u64..1 << (d - 2))
        .filter(|b| !top.contains(b))
        .map(|b| SignPattern::from_bits(d, b))
        .collect();
    Ok(sorted(out))
}

/// `F_d` with `F_6 = F_7 = 1`.
pub fn fibonacci_bound(d: usize) -> Result<BigUint> {
    if d < 6 {
        return Err(Error::Domain(format!("bound defined for d >= 6, got {d}")));
    }
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 6..d {
        let next = &a + &b;
        a = b;
        b = next;
    }
    Ok(a)
}

/// Effect of adding rule V to rules I-IV in inductive mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleVExperiment {
    pub dim: usize,
    pub without_v: usize,
    pub with_v: usize,
    /// Patterns that rule V removes from the remaining set.
    pub newly_reached: Vec<SignPattern>,
}

pub fn rule_v_experiment(d: usize) -> Result<RuleVExperiment> {
    let base = remaining_patterns(d, &RuleSet::I_TO_IV)?;
    let with: HashSet<SignPattern> = remaining_patterns(d, &RuleSet::ALL)?.into_iter().collect();
    let newly_reached: Vec<SignPattern> = base.iter().filter(|p| !with.contains(p)).cloned().collect();
    Ok(RuleVExperiment { dim: d, without_v: base.len(), with_v: with.len(), newly_reached })
}
