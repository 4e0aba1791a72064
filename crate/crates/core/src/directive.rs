use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::morphism::{Alphabet, Morphism};

/// A sequence of morphisms `σ_n : A_{n+1} → A_n⁺` given by a finite prefix and
/// an optional cycle repeated forever.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DirectiveRepr", into = "DirectiveRepr")]
pub struct DirectiveSequence {
    prefix: Vec<Morphism>,
    cycle: Option<Vec<Morphism>>,
}

#[derive(Serialize, Deserialize)]
struct DirectiveRepr {
    prefix: Vec<Morphism>,
    cycle: Option<Vec<Morphism>>,
}

impl From<DirectiveSequence> for DirectiveRepr {
    fn from(d: DirectiveSequence) -> Self {
        DirectiveRepr { prefix: d.prefix, cycle: d.cycle }
    }
}

impl TryFrom<DirectiveRepr> for DirectiveSequence {
    type Error = Error;
    fn try_from(r: DirectiveRepr) -> Result<Self> {
        DirectiveSequence::new(r.prefix, r.cycle)
    }
}

fn chain(outer: &Morphism, inner: &Morphism, at: usize) -> Result<()> {
    if outer.domain_size() != inner.codomain_size() {
        return Err(Error::input(format!(
            "level {at}: domain has {} letters but the next morphism maps into {} letters",
            outer.domain_size(),
            inner.codomain_size()
        )));
    }
    Ok(())
}

impl DirectiveSequence {
    pub fn new(prefix: Vec<Morphism>, cycle: Option<Vec<Morphism>>) -> Result<Self> {
        if let Some(c) = &cycle {
            if c.is_empty() {
                return Err(Error::input("the cycle must contain at least one morphism"));
            }
        }
        if prefix.is_empty() && cycle.is_none() {
            return Err(Error::input("a directive sequence needs at least one morphism"));
        }
        let all: Vec<&Morphism> = prefix.iter().chain(cycle.iter().flatten()).collect();
        for (i, w) in all.windows(2).enumerate() {
            chain(w[0], w[1], i)?;
        }
        if let Some(c) = &cycle {
            chain(c.last().expect("nonempty"), &c[0], prefix.len() + c.len() - 1)?;
        }
        Ok(DirectiveSequence { prefix, cycle })
    }

    /// The constant sequence `(m, m, …)`.
    pub fn stationary(m: Morphism) -> Result<Self> {
        if !m.is_substitution() {
            return Err(Error::input("a stationary sequence needs a substitution"));
        }
        DirectiveSequence::new(vec![], Some(vec![m]))
    }

    pub fn prefix(&self) -> &[Morphism] {
        &self.prefix
    }

    pub fn cycle(&self) -> Option<&[Morphism]> {
        self.cycle.as_deref()
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.as_ref().map_or(0, Vec::len)
    }

    pub fn is_cyclic(&self) -> bool {
        self.cycle.is_some()
    }

    /// Number of explicitly represented morphisms; unbounded for cyclic sequences.
    pub fn depth_limit(&self) -> Option<usize> {
        if self.is_cyclic() {
            None
        } else {
            Some(self.prefix.len())
        }
    }

    /// `σ_n`.
    pub fn level_morphism(&self, n: usize) -> Result<&Morphism> {
        if n < self.prefix.len() {
            return Ok(&self.prefix[n]);
        }
        match &self.cycle {
            Some(c) => Ok(&c[(n - self.prefix.len()) % c.len()]),
            None => Err(Error::input(format!(
                "level {n} is beyond the {} morphisms of a sequence without cycle",
                self.prefix.len()
            ))),
        }
    }

    /// `A_n`, the codomain of `σ_n` (or the domain of the last prefix morphism).
    pub fn alphabet(&self, n: usize) -> Result<&Alphabet> {
        match self.level_morphism(n) {
            Ok(m) => Ok(m.codomain()),
            Err(e) => {
                if !self.is_cyclic() && n == self.prefix.len() {
                    Ok(self.prefix[n - 1].domain())
                } else {
                    Err(e)
                }
            }
        }
    }

    /// `σ_[n,N) = σ_n ∘ … ∘ σ_{N-1}`; the identity on `A_n` when `n == N`.
    pub fn composition(&self, n: usize, end: usize) -> Result<Morphism> {
        if end < n {
            return Err(Error::input("composition range is reversed"));
        }
        let mut acc = Morphism::identity(self.alphabet(n)?.clone());
        for i in n..end {
            acc = Morphism::compose(&acc, self.level_morphism(i)?)?;
        }
        Ok(acc)
    }

    /// The cycle composition read from level `n ≥ prefix_len`, a substitution
    /// on `A_n`.
    pub fn cycle_composition_at(&self, n: usize) -> Result<Morphism> {
        let c = self.cycle_len();
        if c == 0 || n < self.prefix.len() {
            return Err(Error::input(format!("level {n} is not inside the cycle")));
        }
        self.composition(n, n + c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chaining_is_checked() {
        let s0 = Morphism::from_names("ABC", "01", &["00", "01", "10"]).unwrap();
        let f = Morphism::from_digits(&["01", "0"]).unwrap();
        assert!(DirectiveSequence::new(vec![s0.clone()], Some(vec![f.clone()])).is_err());
        assert!(DirectiveSequence::new(vec![f.clone()], Some(vec![f.clone()])).is_ok());
        assert!(DirectiveSequence::new(vec![f.clone(), s0.clone()], None).is_ok());
        assert!(DirectiveSequence::new(vec![], None).is_err());
        assert!(DirectiveSequence::new(vec![], Some(vec![s0])).is_err());
    }

    #[test]
    fn levels_and_compositions() {
        let f = Morphism::from_digits(&["01", "0"]).unwrap();
        let d = DirectiveSequence::stationary(f.clone()).unwrap();
        assert_eq!(d.level_morphism(7).unwrap(), &f);
        assert_eq!(d.composition(3, 5).unwrap(), f.power(2).unwrap());
        assert_eq!(d.composition(2, 2).unwrap().images(), &[vec![0], vec![1]]);
        let p = DirectiveSequence::new(vec![f.clone(), f.clone()], None).unwrap();
        assert!(p.level_morphism(5).is_err());
        assert_eq!(p.alphabet(2).unwrap().size(), 2);
        assert!(p.alphabet(3).is_err());
    }
}
