//! Sign patterns of middle Ehrhart coefficients and the embedding rules that
//! carry realized patterns into higher dimensions.
//!
//! Patterns are stored ascending (`c_1` first). Text and JSON use descending
//! order, `c_{d-2}` first, middle coefficients only.

mod facts;
mod reach;

pub use facts::{FactStatus, KnownFact, KnownFacts, Provenance};
pub use reach::{
    fibonacci_bound, reachable_inductive, remaining_patterns, remaining_patterns_strict,
    rule_v_experiment, Mode, Reach, ReachRule, RuleSet, RuleVExperiment,
};

use std::fmt;
use std::str::FromStr;

use crate::exactnum::{sign_of, Polynomial, Rational};
use crate::{Error, Result};
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(q: &Rational) -> Sign {
        match sign_of(q) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPattern {
    dim: usize,
    middle: Vec<Sign>,
}

impl SignPattern {
    /// `middle[j-1]` is the sign of `c_j`; its length must be `dim - 2`.
    pub fn new(dim: usize, middle: Vec<Sign>) -> Result<Self> {
        if dim < 2 || middle.len() != dim - 2 {
            return Err(Error::DimensionMismatch(format!(
                "{} middle signs for dimension {dim}",
                middle.len()
            )));
        }
        Ok(SignPattern { dim, middle })
    }

    pub(crate) fn from_middle(middle: Vec<Sign>) -> Self {
        SignPattern { dim: middle.len() + 2, middle }
    }

    /// Parses the descending text form; the dimension is the length plus two.
    pub fn from_desc(s: &str) -> Result<Self> {
        let mut middle = s
            .trim()
            .chars()
            .map(|c| {
                Sign::from_symbol(c).ok_or_else(|| {
                    Error::InvalidInput(format!("bad sign {c:?} in pattern {s:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        middle.reverse();
        Ok(SignPattern::from_middle(middle))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Ascending: index 0 is `c_1`.
    pub fn middle(&self) -> &[Sign] {
        &self.middle
    }

    /// Sign of `c_j`, `1 <= j <= dim - 2`.
    pub fn c(&self, j: usize) -> Sign {
        self.middle[j - 1]
    }

    pub fn is_strict(&self) -> bool {
        !self.middle.contains(&Sign::Zero)
    }

    pub fn ensure_strict(&self) -> Result<()> {
        if self.is_strict() {
            Ok(())
        } else {
            Err(Error::NonStrictPattern(self.to_desc()))
        }
    }

    pub fn to_desc(&self) -> String {
        self.middle.iter().rev().map(|s| s.symbol()).collect()
    }

    /// The full descending tuple, with the two positive top coefficients.
    pub fn to_full_desc(&self) -> String {
        format!("++{}", self.to_desc())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "dim": self.dim, "middle_desc": self.to_desc() })
    }

    /// Every strict pattern of dimension `dim`, in index order (bit `j` set
    /// means `c_{j+1}` is positive).
    pub fn all_strict(dim: usize) -> impl Iterator<Item = SignPattern> {
        let len = dim.saturating_sub(2);
        (0u64..1 << len).map(move |bits| SignPattern::from_bits(dim, bits))
    }

    pub(crate) fn from_bits(dim: usize, bits: u64) -> SignPattern {
        let len = dim - 2;
        let middle = (0..len)
            .map(|j| if bits >> j & 1 == 1 { Sign::Plus } else { Sign::Minus })
            .collect();
        SignPattern { dim, middle }
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_desc())
    }
}

impl fmt::Debug for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}:{}", self.dim, self.to_desc())
    }
}

impl FromStr for SignPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SignPattern::from_desc(s)
    }
}

/// Signs of `c_1..c_{d-2}` of an Ehrhart polynomial of degree `d`.
pub fn middle_pattern(p: &Polynomial) -> Result<SignPattern> {
    let d = p.degree().unwrap_or(0);
    if d < 2 {
        return Err(Error::MalformedEhrhart(format!("degree {d} has no middle coefficients")));
    }
    if p.coeff(0) != Rational::from_integer(1.into()) {
        return Err(Error::MalformedEhrhart(format!("constant term {}", p.coeff(0))));
    }
    for k in [d, d - 1] {
        if p.coeff(k) <= Rational::zero() {
            return Err(Error::MalformedEhrhart(format!(
                "coefficient of t^{k} is {}, must be positive",
                p.coeff(k)
            )));
        }
    }
    let middle = (1..=d - 2).map(|k| Sign::of(&p.coeff(k))).collect();
    SignPattern::new(d, middle)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmbedRule {
    IHigh,
    ILow,
    IILeft,
    IIRight,
    III,
    IV,
    V,
}

impl EmbedRule {
    pub const ALL: [EmbedRule; 7] = [
        EmbedRule::IHigh,
        EmbedRule::ILow,
        EmbedRule::IILeft,
        EmbedRule::IIRight,
        EmbedRule::III,
        EmbedRule::IV,
        EmbedRule::V,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EmbedRule::IHigh => "I-high",
            EmbedRule::ILow => "I-low",
            EmbedRule::IILeft => "II-left",
            EmbedRule::IIRight => "II-right",
            EmbedRule::III => "III",
            EmbedRule::IV => "IV",
            EmbedRule::V => "V",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            EmbedRule::IILeft | EmbedRule::IIRight => 2,
            _ => 1,
        }
    }

    /// Dimension added to the (first) input.
    pub fn dim_increase(self) -> usize {
        match self {
            EmbedRule::IHigh | EmbedRule::ILow => 1,
            EmbedRule::III => 2,
            EmbedRule::IV | EmbedRule::V => 3,
            EmbedRule::IILeft | EmbedRule::IIRight => 0,
        }
    }

    /// Smallest input dimension the rule accepts.
    pub fn min_source_dim(self) -> usize {
        match self {
            EmbedRule::III | EmbedRule::V => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for EmbedRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for EmbedRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EmbedRule::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidInput(format!("unknown embedding rule {s:?}")))
    }
}

/// Pattern carried by an embedding rule. Two-input rules take `(P1, P2)`
/// with `dim P1 >= dim P2 >= 2`; `II-left` dilates `P1`, `II-right` dilates `P2`.
pub fn embed_pattern(rule: EmbedRule, inputs: &[&SignPattern]) -> Result<SignPattern> {
    if inputs.len() != rule.arity() {
        return Err(Error::InvalidParameter(format!(
            "rule {rule} takes {} pattern(s), got {}",
            rule.arity(),
            inputs.len()
        )));
    }
    for p in inputs {
        p.ensure_strict()?;
    }
    let p = inputs[0];
    if p.dim < rule.min_source_dim() {
        return Err(Error::InvalidParameter(format!(
            "rule {rule} needs source dimension >= {}, got {}",
            rule.min_source_dim(),
            p.dim
        )));
    }
    let c = &p.middle;
    let neg = |v: &[Sign]| v.iter().map(|&s| -s).collect::<Vec<_>>();
    use Sign::{Minus, Plus};
    let out: Vec<Sign> = match rule {
        EmbedRule::IHigh => [c.as_slice(), &[Plus]].concat(),
        EmbedRule::ILow => [&[Plus], c.as_slice()].concat(),
        EmbedRule::IILeft | EmbedRule::IIRight => {
            let q = inputs[1];
            if q.dim < 2 || p.dim < q.dim {
                return Err(Error::InvalidParameter(format!(
                    "rule {rule} needs dim P1 >= dim P2 >= 2, got {} and {}",
                    p.dim, q.dim
                )));
            }
            let a = &q.middle;
            if rule == EmbedRule::IILeft {
                [c.as_slice(), &[Plus, Plus], a.as_slice()].concat()
            } else {
                [a.as_slice(), &[Plus, Plus], c.as_slice()].concat()
            }
        }
        EmbedRule::III => [&[c[0], Plus], c.as_slice()].concat(),
        EmbedRule::IV => [&[Minus], neg(c).as_slice(), &[Minus, Minus]].concat(),
        EmbedRule::V => [&[Minus, -c[0], Plus], c.as_slice()].concat(),
    };
    Ok(SignPattern::from_middle(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn pat(s: &str) -> SignPattern {
        SignPattern::from_desc(s).unwrap()
    }

    fn asc(dim: usize, s: &str) -> SignPattern {
        let middle = s.chars().map(|c| Sign::from_symbol(c).unwrap()).collect();
        SignPattern::new(dim, middle).unwrap()
    }

    #[test]
    fn text_forms() {
        let p = pat("-+---");
        assert_eq!(p.dim(), 7);
        assert_eq!(p.c(5), Sign::Minus);
        assert_eq!(p.c(4), Sign::Plus);
        assert_eq!(p.to_desc(), "-+---");
        assert_eq!(p.to_full_desc(), "++-+---");
        assert_eq!(p.to_json(), serde_json::json!({"dim": 7, "middle_desc": "-+---"}));
        assert!(SignPattern::from_desc("+x").is_err());
        assert!(SignPattern::new(5, vec![Sign::Plus]).is_err());
    }

    #[test]
    fn middle_of_printed_polynomials() {
        let coeffs = [
            int(1),
            rat(-13, 3),
            rat(-1316, 9),
            rat(-224, 9),
            rat(199, 9),
            rat(-1445, 9),
            rat(1900, 9),
            rat(2500, 9),
        ];
        let p = Polynomial::new(coeffs.to_vec());
        assert_eq!(middle_pattern(&p).unwrap().to_desc(), "-+---");

        let cube = Polynomial::from_ints([1, 5]).pow(5);
        assert_eq!(middle_pattern(&cube).unwrap().to_desc(), "+++");

        let zero = Polynomial::new(vec![
            int(1),
            rat(-19, 6),
            rat(53, 18),
            rat(13, 2),
            rat(-187, 18),
            int(0),
            rat(148, 9),
            rat(20, 3),
        ]);
        let z = middle_pattern(&zero).unwrap();
        assert_eq!(z.c(5), Sign::Zero);
        assert!(!z.is_strict());

        let bad = Polynomial::from_ints([1, 1, -1, 1]);
        assert!(matches!(middle_pattern(&bad), Err(Error::MalformedEhrhart(_))));
    }

    #[test]
    fn transformer_examples() {
        let iv = embed_pattern(EmbedRule::IV, &[&asc(3, "+")]).unwrap();
        assert_eq!(iv, asc(6, "----"));
        let low = embed_pattern(EmbedRule::ILow, &[&asc(6, "----")]).unwrap();
        assert_eq!(low, asc(7, "+----"));
        let high = embed_pattern(EmbedRule::IHigh, &[&asc(4, "-+")]).unwrap();
        assert_eq!(high, asc(5, "-++"));
        let iii = embed_pattern(EmbedRule::III, &[&asc(4, "-+")]).unwrap();
        assert_eq!(iii, asc(6, "-+-+"));
        let v = embed_pattern(EmbedRule::V, &[&asc(4, "+-")]).unwrap();
        assert_eq!(v, asc(7, "--++-"));

        let (p1, p2) = (asc(4, "-+"), asc(3, "-"));
        assert_eq!(embed_pattern(EmbedRule::IILeft, &[&p1, &p2]).unwrap(), asc(7, "-+++-"));
        assert_eq!(embed_pattern(EmbedRule::IIRight, &[&p1, &p2]).unwrap(), asc(7, "-++-+"));
        assert!(matches!(
            embed_pattern(EmbedRule::IILeft, &[&p2, &p1]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn transformers_reject_zero_signs() {
        let z = SignPattern::new(4, vec![Sign::Zero, Sign::Plus]).unwrap();
        assert!(matches!(embed_pattern(EmbedRule::IHigh, &[&z]), Err(Error::NonStrictPattern(_))));
    }

    #[test]
    fn rule_v_cannot_reach_unresolved_ten() {
        let target = asc(10, "------+-");
        let hits = SignPattern::all_strict(7)
            .filter(|p| embed_pattern(EmbedRule::V, &[p]).unwrap() == target)
            .count();
        assert_eq!(hits, 0);
    }
}
