use std::fmt;

use super::{middle_pattern, SignPattern};
use crate::ehrhart::Engine;
use crate::polytopes::Construction;
use crate::{catalog, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactStatus {
    /// Taken from the literature, not rebuilt here.
    AxiomCitation,
    /// Backed by a construction whose computed pattern was checked.
    WitnessVerified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Citation(String),
    Witness { label: String, construction: Construction },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Citation(s) => f.write_str(s),
            Provenance::Witness { label, construction } => write!(f, "{label}: {construction}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownFact {
    pub pattern: SignPattern,
    pub status: FactStatus,
    pub provenance: Provenance,
}

/// Realized sign patterns that seed the strict closure.
#[derive(Clone, Debug, Default)]
pub struct KnownFacts {
    facts: Vec<KnownFact>,
}

pub const LOW_DIMENSION_CITATION: &str =
    "every sign pattern is realized in dimensions 3 to 6 (prior classification)";

impl KnownFacts {
    pub fn new() -> Self {
        KnownFacts::default()
    }

    /// Every strict pattern of dimensions 2 through 6.
    pub fn axioms() -> Self {
        let mut facts = KnownFacts::new();
        for dim in 2..=6 {
            for pattern in SignPattern::all_strict(dim) {
                facts.facts.push(KnownFact {
                    pattern,
                    status: FactStatus::AxiomCitation,
                    provenance: Provenance::Citation(LOW_DIMENSION_CITATION.into()),
                });
            }
        }
        facts
    }

    /// The axioms plus every catalogued witness in dimensions 7 to 9.
    pub fn with_catalog_witnesses() -> Result<Self> {
        let mut facts = KnownFacts::axioms();
        for entry in catalog::witnesses() {
            if (7..=9).contains(&entry.construction.dimension()?) {
                facts.insert_witness(entry.label, entry.construction)?;
            }
        }
        Ok(facts)
    }

    /// Computes the pattern of `construction` and records it. Patterns with
    /// a zero sign are rejected.
    pub fn insert_witness(&mut self, label: &str, construction: Construction) -> Result<&KnownFact> {
        let p = Engine::default().ehrhart(&construction)?;
        let pattern = middle_pattern(&p)?;
        if !pattern.is_strict() {
            return Err(Error::NonStrictPattern(format!("{label}: {pattern}")));
        }
        self.facts.push(KnownFact {
            pattern,
            status: FactStatus::WitnessVerified,
            provenance: Provenance::Witness { label: label.into(), construction },
        });
        Ok(self.facts.last().unwrap())
    }

    pub fn facts(&self) -> &[KnownFact] {
        &self.facts
    }

    pub fn patterns_of_dim(&self, dim: usize) -> impl Iterator<Item = &SignPattern> {
        self.facts.iter().map(|f| &f.pattern).filter(move |p| p.dim() == dim)
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{remaining_patterns_strict, RuleSet};

    #[test]
    fn axioms_cover_low_dims() {
        let f = KnownFacts::axioms();
        assert_eq!(f.len(), 1 + 2 + 4 + 8 + 16);
        assert_eq!(f.patterns_of_dim(6).count(), 16);
    }

    #[test]
    fn witnesses_close_seven_eight_nine() {
        let facts = KnownFacts::with_catalog_witnesses().unwrap();
        for f in facts.facts().iter().filter(|f| f.status == FactStatus::WitnessVerified) {
            let Provenance::Witness { construction, .. } = &f.provenance else { panic!() };
            let p = Engine::default().ehrhart(construction).unwrap();
            assert_eq!(middle_pattern(&p).unwrap(), f.pattern);
        }
        for d in 7..=9 {
            let rem = remaining_patterns_strict(d, &RuleSet::default(), &facts).unwrap();
            assert!(rem.is_empty(), "d = {d}: {rem:?}");
        }
        let ten = remaining_patterns_strict(10, &RuleSet::default(), &facts).unwrap();
        assert_eq!(ten.len(), 5);
    }

    #[test]
    fn zero_pattern_is_not_a_witness() {
        let mut facts = KnownFacts::new();
        let zero = Construction::product(
            Construction::pyramid(Construction::Reeve(48), 1),
            Construction::Reeve(20),
        );
        assert!(matches!(facts.insert_witness("zero", zero), Err(Error::NonStrictPattern(_))));
    }
}
