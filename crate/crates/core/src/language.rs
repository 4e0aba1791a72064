//! Factor sets of substitutive and S-adic languages up to a length horizon.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::directive::DirectiveSequence;
use crate::error::{Error, Result};
use crate::morphism::{Alphabet, Letter, Morphism, Word};

/// All words of length at most `max_len` of a language, the empty word
/// included. The set is closed under taking factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSet {
    alphabet: Alphabet,
    max_len: usize,
    words: HashSet<Word>,
    extendability_pruned: bool,
    depth_bounded: bool,
}

#[derive(Serialize, Deserialize)]
struct FactorSetRepr {
    alphabet: Alphabet,
    max_len: usize,
    extendability_pruned: bool,
    depth_bounded: bool,
    words: Vec<Word>,
}

impl Serialize for FactorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FactorSetRepr {
            alphabet: self.alphabet.clone(),
            max_len: self.max_len,
            extendability_pruned: self.extendability_pruned,
            depth_bounded: self.depth_bounded,
            words: self.sorted_words(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FactorSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FactorSetRepr::deserialize(d)?;
        let mut fs = FactorSet::from_words(r.alphabet, r.max_len, r.words).map_err(serde::de::Error::custom)?;
        fs.extendability_pruned = r.extendability_pruned;
        fs.depth_bounded = r.depth_bounded;
        Ok(fs)
    }
}

fn insert_factors(set: &mut HashSet<Word>, w: &[Letter], max_len: usize) {
    for i in 0..w.len() {
        for j in i + 1..=w.len().min(i + max_len) {
            set.insert(w[i..j].to_vec());
        }
    }
}

impl FactorSet {
    /// The factor closure of `words`, truncated to `max_len`.
    pub fn from_words(alphabet: Alphabet, max_len: usize, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        if max_len == 0 {
            return Err(Error::input("the horizon must be positive"));
        }
        let mut set = HashSet::new();
        set.insert(Vec::new());
        for w in words {
            alphabet.check_word(&w)?;
            insert_factors(&mut set, &w, max_len);
        }
        Ok(FactorSet { alphabet, max_len, words: set, extendability_pruned: false, depth_bounded: false })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Number of words, the empty word included.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.len() <= 1
    }

    pub fn is_pruned(&self) -> bool {
        self.extendability_pruned
    }

    /// Set for sequences without a cycle: the language is only approximated
    /// from below by the finitely many given morphisms.
    pub fn is_depth_bounded(&self) -> bool {
        self.depth_bounded
    }

    pub fn contains(&self, w: &[Letter]) -> Result<bool> {
        if w.len() > self.max_len {
            return Err(Error::Horizon { have: self.max_len, need: w.len() });
        }
        Ok(self.words.contains(w))
    }

    /// Membership for words no longer than the horizon.
    pub(crate) fn has(&self, w: &[Letter]) -> bool {
        debug_assert!(w.len() <= self.max_len);
        self.words.contains(w)
    }

    /// Whether every factor of `w` within the horizon belongs to the set.
    pub fn admits(&self, w: &[Letter]) -> bool {
        if w.len() <= self.max_len {
            return self.words.contains(w);
        }
        w.windows(self.max_len).all(|f| self.words.contains(f))
    }

    pub fn words_of_len(&self, n: usize) -> Vec<Word> {
        let mut v: Vec<Word> = self.words.iter().filter(|w| w.len() == n).cloned().collect();
        v.sort();
        v
    }

    /// Every word, sorted by length and then lexicographically.
    pub fn sorted_words(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.words.iter().cloned().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    /// The words of length at most `max_len`.
    pub fn restrict(&self, max_len: usize) -> Result<FactorSet> {
        if max_len == 0 || max_len > self.max_len {
            return Err(Error::Horizon { have: self.max_len, need: max_len });
        }
        Ok(FactorSet {
            alphabet: self.alphabet.clone(),
            max_len,
            words: self.words.iter().filter(|w| w.len() <= max_len).cloned().collect(),
            extendability_pruned: self.extendability_pruned,
            depth_bounded: self.depth_bounded,
        })
    }

    /// The mirror language: every word read backwards.
    pub fn reversed(&self) -> FactorSet {
        FactorSet {
            alphabet: self.alphabet.clone(),
            max_len: self.max_len,
            words: self.words.iter().map(|w| w.iter().rev().copied().collect()).collect(),
            extendability_pruned: self.extendability_pruned,
            depth_bounded: self.depth_bounded,
        }
    }

    /// Factors within the horizon of the images of the words of `self`.
    pub fn image(&self, m: &Morphism, max_len: usize) -> Result<FactorSet> {
        if !m.domain().compatible(&self.alphabet) {
            return Err(Error::AlphabetMismatch { expected: m.domain_size(), found: self.alphabet.size() });
        }
        let mut set = HashSet::new();
        set.insert(Vec::new());
        for w in &self.words {
            if !w.is_empty() {
                insert_spanning(&mut set, m, w, max_len);
            }
        }
        Ok(FactorSet {
            alphabet: m.codomain().clone(),
            max_len,
            words: set,
            extendability_pruned: false,
            depth_bounded: self.depth_bounded,
        })
    }
}

/// Calls `emit` on the factors of `m(w)` of length at most `max_len` that
/// start in the image of the first letter and end in the image of the last
/// one. Single letters contribute all factors of their image.
fn spanning_factors(m: &Morphism, w: &[Letter], max_len: usize, mut emit: impl FnMut(&[Letter])) {
    let img = m.apply_unchecked(w);
    if w.len() == 1 {
        for i in 0..img.len() {
            for j in i + 1..=img.len().min(i + max_len) {
                emit(&img[i..j]);
            }
        }
        return;
    }
    let first = m.image_len(w[0]);
    let last_start = img.len() - m.image_len(w[w.len() - 1]);
    for i in 0..first {
        for j in (last_start + 1).max(i + 1)..=img.len().min(i + max_len) {
            emit(&img[i..j]);
        }
    }
}

fn insert_spanning(set: &mut HashSet<Word>, m: &Morphism, w: &[Letter], max_len: usize) {
    spanning_factors(m, w, max_len, |f| {
        set.insert(f.to_vec());
    });
}

/// Smallest factor-closed set containing `seeds` and the factors of `m(w)` for
/// every member `w`, truncated to `max_len`.
pub fn closure(m: &Morphism, seeds: FactorSet) -> Result<FactorSet> {
    if !m.is_substitution() || !m.domain().compatible(seeds.alphabet()) {
        return Err(Error::input("closure needs a substitution on the alphabet of the seeds"));
    }
    let max_len = seeds.max_len;
    let mut set = seeds.words;
    let mut queue: Vec<Word> = set.iter().filter(|w| !w.is_empty()).cloned().collect();
    queue.sort();
    while let Some(w) = queue.pop() {
        let mut found = Vec::new();
        spanning_factors(m, &w, max_len, |f| {
            if !set.contains(f) {
                found.push(f.to_vec());
            }
        });
        for f in found {
            if set.insert(f.clone()) {
                queue.push(f);
            }
        }
    }
    Ok(FactorSet { alphabet: seeds.alphabet, max_len, words: set, extendability_pruned: false, depth_bounded: false })
}

/// Factors of length at most `max_len` of the words `m^n(a)`, `n ≥ 0`.
pub fn substitutive_factors(m: &Morphism, max_len: usize) -> Result<FactorSet> {
    if !m.is_substitution() {
        return Err(Error::input("substitutive factors need a substitution"));
    }
    let letters = (0..m.domain_size() as Letter).map(|a| vec![a]);
    closure(m, FactorSet::from_words(m.domain().clone(), max_len, letters)?)
}

/// Factors of length at most `max_len` of the words `σ_[level,N)(a)`, `N > level`.
///
/// Exact for sequences with a cycle. Without a cycle the deepest available
/// level stands in for the limit and the result is flagged as depth bounded.
pub fn sadic_factors(d: &DirectiveSequence, level: usize, max_len: usize) -> Result<FactorSet> {
    let p = d.prefix_len();
    if !d.is_cyclic() {
        if level > p {
            return Err(Error::input(format!("level {level} is beyond the {p} morphisms of the sequence")));
        }
        let mut fs = FactorSet::from_words(d.alphabet(p)?.clone(), max_len, std::iter::empty())?;
        if level == p {
            let letters = (0..fs.alphabet.size() as Letter).map(|a| vec![a]);
            fs = FactorSet::from_words(fs.alphabet.clone(), max_len, letters)?;
        }
        for n in (level..p).rev() {
            fs = push_down(d.level_morphism(n)?, &fs, max_len)?;
        }
        fs.depth_bounded = true;
        return Ok(fs);
    }
    let entry = level.max(p);
    let fs = cycle_level_factors(d, entry, max_len)?;
    let mut fs = fs;
    for n in (level..entry).rev() {
        fs = push_down(d.level_morphism(n)?, &fs, max_len)?;
    }
    Ok(fs)
}

/// `factors(σ_n(L ∪ A_{n+1}))`.
fn push_down(m: &Morphism, upper: &FactorSet, max_len: usize) -> Result<FactorSet> {
    let mut set = HashSet::new();
    set.insert(Vec::new());
    for a in 0..m.domain_size() as Letter {
        insert_spanning(&mut set, m, &[a], max_len);
    }
    for w in upper.words.iter().filter(|w| w.len() >= 2) {
        insert_spanning(&mut set, m, w, max_len);
    }
    Ok(FactorSet {
        alphabet: m.codomain().clone(),
        max_len,
        words: set,
        extendability_pruned: false,
        depth_bounded: upper.depth_bounded,
    })
}

/// Inside the cycle: seeds are the factors of `σ_[n,n+r)(a)` for `r = 1..=c`,
/// closed under the cycle composition read from `n`.
fn cycle_level_factors(d: &DirectiveSequence, n: usize, max_len: usize) -> Result<FactorSet> {
    let c = d.cycle_len();
    let rho = d.cycle_composition_at(n)?;
    let mut seeds = Vec::new();
    for r in 1..=c {
        let m = d.composition(n, n + r)?;
        seeds.extend(m.images().iter().cloned());
    }
    closure(&rho, FactorSet::from_words(rho.domain().clone(), max_len, seeds)?)
}

/// Drops words that cannot be extended on both sides within the set, then
/// words with a dropped factor, until nothing changes. Words shorter than
/// `max_len - 1` need a two-sided extension `a·u·b`; words of length
/// `max_len - 1` need a left and a right extension. The result still
/// contains the language of the two-sided shift.
pub fn prune_to_biextendable(fs: &FactorSet) -> FactorSet {
    let k = fs.alphabet.size() as Letter;
    let l = fs.max_len;
    let mut words = fs.words.clone();
    loop {
        let mut doomed: Vec<Word> = Vec::new();
        for u in words.iter().filter(|u| !u.is_empty() && u.len() < l) {
            let ok = if u.len() + 2 <= l {
                let mut buf = Vec::with_capacity(u.len() + 2);
                (0..k).any(|a| {
                    (0..k).any(|b| {
                        buf.clear();
                        buf.push(a);
                        buf.extend_from_slice(u);
                        buf.push(b);
                        words.contains(&buf)
                    })
                })
            } else {
                let left = (0..k).any(|a| {
                    let mut v = vec![a];
                    v.extend_from_slice(u);
                    words.contains(&v)
                });
                let right = (0..k).any(|b| {
                    let mut v = u.clone();
                    v.push(b);
                    words.contains(&v)
                });
                left && right
            };
            if !ok {
                doomed.push(u.clone());
            }
        }
        if doomed.is_empty() {
            break;
        }
        for u in &doomed {
            words.remove(u);
        }
        let mut by_len: Vec<Word> = words.iter().filter(|w| w.len() >= 2).cloned().collect();
        by_len.sort_by_key(Vec::len);
        for w in by_len {
            if !words.contains(&w[1..]) || !words.contains(&w[..w.len() - 1]) {
                words.remove(&w);
            }
        }
    }
    FactorSet {
        alphabet: fs.alphabet.clone(),
        max_len: l,
        words,
        extendability_pruned: true,
        depth_bounded: fs.depth_bounded,
    }
}
