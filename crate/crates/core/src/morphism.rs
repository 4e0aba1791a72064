//! Alphabets, words and non-erasing morphisms.
//!
//! Letters are dense indices `0..size`; display names only matter for input
//! and output.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

pub type Letter = u32;
pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::input("an alphabet needs at least one letter"));
        }
        Ok(Alphabet { size, names: None })
    }

    pub fn named<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::input("an alphabet needs at least one letter"));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.chars().any(char::is_whitespace) {
                return Err(Error::input(format!("invalid letter name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::input(format!("duplicate letter name {n:?}")));
            }
        }
        if names.iter().enumerate().all(|(i, n)| *n == i.to_string()) {
            return Ok(Alphabet { size: names.len(), names: None });
        }
        Ok(Alphabet { size: names.len(), names: Some(names) })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, a: Letter) -> String {
        match &self.names {
            Some(n) => n[a as usize].clone(),
            None => a.to_string(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        match &self.names {
            Some(n) => n.iter().position(|x| x == name).map(|i| i as Letter),
            None => name.parse::<usize>().ok().filter(|&i| i < self.size).map(|i| i as Letter),
        }
    }

    /// Two alphabets can be chained when they have the same number of letters.
    pub fn compatible(&self, other: &Alphabet) -> bool {
        self.size == other.size
    }

    fn single_char_names(&self) -> bool {
        match &self.names {
            Some(n) => n.iter().all(|s| s.chars().count() == 1),
            None => self.size <= 10,
        }
    }

    /// Concatenates names when every name is one character, otherwise joins with spaces.
    pub fn format_word(&self, w: &[Letter]) -> String {
        let parts: Vec<String> = w.iter().map(|&a| self.name(a)).collect();
        if self.single_char_names() {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    /// Accepts whitespace-separated names, or a run of single-character names.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok.chars().count() == 1 || !self.single_char_names() {
                let a = self.index_of(tok).ok_or_else(|| Error::input(format!("unknown letter {tok:?}")))?;
                out.push(a);
            } else {
                for ch in tok.chars() {
                    let a = self
                        .index_of(&ch.to_string())
                        .ok_or_else(|| Error::input(format!("unknown letter {ch:?}")))?;
                    out.push(a);
                }
            }
        }
        Ok(out)
    }

    pub fn check_word(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|&&a| a as usize >= self.size) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, size: self.size }),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Permutativity {
    Left,
    Right,
    Both,
    Neither,
}

impl Permutativity {
    pub fn is_left(self) -> bool {
        matches!(self, Permutativity::Left | Permutativity::Both)
    }

    pub fn is_right(self) -> bool {
        matches!(self, Permutativity::Right | Permutativity::Both)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "power")]
pub enum Primitivity {
    Primitive(usize),
    NotPrimitive,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `σ(a)·w = w·σ̃(a)` for every letter.
    Left,
    /// `w·σ(a) = σ̃(a)·w` for every letter.
    Right,
}

/// A non-erasing morphism from `domain` into words over `codomain`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MorphismRepr", into = "MorphismRepr")]
pub struct Morphism {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(domain: Alphabet, codomain: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != domain.size() {
            return Err(Error::AlphabetMismatch { expected: domain.size(), found: images.len() });
        }
        for (a, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(Error::input(format!("image of letter {} is empty", domain.name(a as Letter))));
            }
            codomain.check_word(img)?;
        }
        Ok(Morphism { domain, codomain, images })
    }

    /// A morphism with unnamed alphabets.
    pub fn from_images(codomain_size: usize, images: Vec<Word>) -> Result<Self> {
        let domain = Alphabet::new(images.len())?;
        Morphism::new(domain, Alphabet::new(codomain_size)?, images)
    }

    /// A substitution whose images are written with digit letters, e.g. `["01", "0"]`.
    pub fn from_digits(images: &[&str]) -> Result<Self> {
        let imgs = images
            .iter()
            .map(|s| {
                s.chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| Error::input(format!("not a digit: {c:?}"))))
                    .collect::<Result<Word>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = imgs.len();
        Morphism::from_images(n, imgs)
    }

    /// Builds a morphism whose letter names are single characters.
    pub fn from_names(domain: &str, codomain: &str, images: &[&str]) -> Result<Self> {
        let dom = Alphabet::named(domain.chars().map(String::from))?;
        let cod = Alphabet::named(codomain.chars().map(String::from))?;
        let imgs = images.iter().map(|s| cod.parse_word(s)).collect::<Result<Vec<_>>>()?;
        Morphism::new(dom, cod, imgs)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = (0..alphabet.size() as Letter).map(|a| vec![a]).collect();
        Morphism { domain: alphabet.clone(), codomain: alphabet, images }
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, a: Letter) -> &[Letter] {
        &self.images[a as usize]
    }

    pub fn image_len(&self, a: Letter) -> usize {
        self.images[a as usize].len()
    }

    pub fn domain_size(&self) -> usize {
        self.domain.size()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain.size()
    }

    pub fn is_substitution(&self) -> bool {
        self.domain.compatible(&self.codomain)
    }

    pub fn min_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(Vec::len).sum()
    }

    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        self.domain.check_word(w)?;
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(w.iter().map(|&a| self.image_len(a)).sum());
        for &a in w {
            out.extend_from_slice(self.image(a));
        }
        out
    }

    /// Length of the image of `w`.
    pub fn image_length_of(&self, w: &[Letter]) -> usize {
        w.iter().map(|&a| self.image_len(a)).sum()
    }

    /// `outer ∘ inner`: first `inner`, then `outer`.
    pub fn compose(outer: &Morphism, inner: &Morphism) -> Result<Morphism> {
        if !inner.codomain.compatible(&outer.domain) {
            return Err(Error::AlphabetMismatch {
                expected: outer.domain.size(),
                found: inner.codomain.size(),
            });
        }
        let images = inner.images.iter().map(|w| outer.apply_unchecked(w)).collect();
        Ok(Morphism { domain: inner.domain.clone(), codomain: outer.codomain.clone(), images })
    }

    pub fn power(&self, n: usize) -> Result<Morphism> {
        if !self.is_substitution() {
            return Err(Error::input("only substitutions can be iterated"));
        }
        let mut acc = Morphism::identity(self.domain.clone());
        for _ in 0..n {
            acc = Morphism::compose(self, &acc)?;
        }
        Ok(acc)
    }

    /// The morphism with every image reversed; it acts on left-infinite words as
    /// the original acts on right-infinite ones.
    pub fn reversed(&self) -> Morphism {
        let images = self.images.iter().map(|w| w.iter().rev().copied().collect()).collect();
        Morphism { domain: self.domain.clone(), codomain: self.codomain.clone(), images }
    }

    /// Rows are codomain letters, columns domain letters.
    pub fn incidence_matrix(&self) -> IntegerMatrix {
        let rows = self.codomain.size();
        let cols = self.domain.size();
        let mut m = IntegerMatrix::zeros(rows, cols);
        for (j, img) in self.images.iter().enumerate() {
            for &b in img {
                *m.get_mut(b as usize, j) += 1;
            }
        }
        m
    }

    pub fn permutativity(&self) -> Permutativity {
        let distinct = |f: fn(&Word) -> Letter| {
            let mut seen = vec![false; self.codomain.size()];
            self.images.iter().all(|w| !std::mem::replace(&mut seen[f(w) as usize], true))
        };
        match (distinct(|w| w[0]), distinct(|w| w[w.len() - 1])) {
            (true, true) => Permutativity::Both,
            (true, false) => Permutativity::Left,
            (false, true) => Permutativity::Right,
            (false, false) => Permutativity::Neither,
        }
    }

    pub fn is_proper(&self) -> bool {
        let first = self.images[0][0];
        let last = *self.images[0].last().unwrap();
        self.images.iter().all(|w| w[0] == first && *w.last().unwrap() == last)
    }

    /// Default bound is the classical primitivity index `(n-1)^2 + 1`.
    pub fn is_primitive(&self, max_power: Option<usize>) -> Result<Primitivity> {
        if !self.is_substitution() {
            return Err(Error::input("primitivity needs a substitution"));
        }
        let n = self.domain.size();
        let wielandt = (n - 1) * (n - 1) + 1;
        let max_power = max_power.unwrap_or(wielandt);
        let base = self.incidence_matrix().support();
        if !strongly_connected(&base) {
            return Ok(Primitivity::NotPrimitive);
        }
        let mut seen = std::collections::HashSet::new();
        let mut p = base.clone();
        for k in 1..=max_power {
            if p.iter().all(|row| row.iter().all(|&b| b)) {
                return Ok(Primitivity::Primitive(k));
            }
            if !seen.insert(p.clone()) {
                return Ok(Primitivity::NotPrimitive);
            }
            p = bool_mul(&p, &base);
        }
        if max_power >= wielandt {
            Ok(Primitivity::NotPrimitive)
        } else {
            Ok(Primitivity::Unknown)
        }
    }

    pub fn rename_domain(&self, domain: Alphabet) -> Result<Morphism> {
        Morphism::new(domain, self.codomain.clone(), self.images.clone())
    }

    pub fn rename_codomain(&self, codomain: Alphabet) -> Result<Morphism> {
        Morphism::new(self.domain.clone(), codomain, self.images.clone())
    }

    /// One `a -> image` line per letter, in the text format accepted by the parser.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let names = |al: &Alphabet| (0..al.size() as Letter).map(|a| al.name(a)).collect::<Vec<_>>().join(" ");
        s.push_str(&format!("alphabet: {}\n", names(&self.domain)));
        if self.domain != self.codomain {
            s.push_str(&format!("codomain: {}\n", names(&self.codomain)));
        }
        for (a, img) in self.images.iter().enumerate() {
            let toks: Vec<String> = img.iter().map(|&b| self.codomain.name(b)).collect();
            s.push_str(&format!("{} -> {}\n", self.domain.name(a as Letter), toks.join(" ")));
        }
        s
    }
}

impl std::fmt::Display for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(a, w)| format!("{}->{}", self.domain.name(a as Letter), self.codomain.format_word(w)))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct MorphismRepr {
    domain: Vec<String>,
    codomain: Vec<String>,
    images: Vec<Word>,
}

impl From<Morphism> for MorphismRepr {
    fn from(m: Morphism) -> Self {
        let names = |al: &Alphabet| (0..al.size() as Letter).map(|a| al.name(a)).collect();
        MorphismRepr { domain: names(&m.domain), codomain: names(&m.codomain), images: m.images }
    }
}

impl TryFrom<MorphismRepr> for Morphism {
    type Error = Error;

    fn try_from(r: MorphismRepr) -> Result<Self> {
        Morphism::new(alphabet_from_names(r.domain)?, alphabet_from_names(r.codomain)?, r.images)
    }
}

/// Index names `0..n` in order collapse back to an unnamed alphabet.
fn alphabet_from_names(names: Vec<String>) -> Result<Alphabet> {
    let plain = names.iter().enumerate().all(|(i, n)| *n == i.to_string());
    if plain {
        Alphabet::new(names.len())
    } else {
        Alphabet::named(names)
    }
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![false; m]; n];
    for i in 0..n {
        for k in 0..b.len() {
            if a[i][k] {
                for j in 0..m {
                    out[i][j] |= b[k][j];
                }
            }
        }
    }
    out
}

fn strongly_connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in 0..n {
                let e = if forward { adj[v][u] } else { adj[u][v] };
                if e && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    reach(true) && reach(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationalConjugate {
    pub witness: Word,
    pub side: Side,
    pub conjugate: Morphism,
}

/// The conjugate of `m` by `w` on the given side, if it exists.
pub fn conjugate_by_word(m: &Morphism, w: &[Letter], side: Side) -> Option<Morphism> {
    let mut images = Vec::with_capacity(m.domain_size());
    for img in &m.images {
        let joined: Word = match side {
            Side::Left => img.iter().chain(w).copied().collect(),
            Side::Right => w.iter().chain(img).copied().collect(),
        };
        let ok = match side {
            Side::Left => joined.starts_with(w),
            Side::Right => joined.ends_with(w),
        };
        if !ok {
            return None;
        }
        images.push(match side {
            Side::Left => joined[w.len()..].to_vec(),
            Side::Right => joined[..img.len()].to_vec(),
        });
    }
    Some(Morphism { domain: m.domain.clone(), codomain: m.codomain.clone(), images })
}

/// For each length only one word can work on each side: the prefix (left) or
/// suffix (right) of the powers of the first image. Results are ordered by
/// length, then left before right.
pub fn rotational_conjugates(m: &Morphism, max_w_len: usize) -> Vec<RotationalConjugate> {
    let first = &m.images[0];
    let mut out = Vec::new();
    for n in 0..=max_w_len {
        for side in [Side::Left, Side::Right] {
            let w: Word = match side {
                Side::Left => (0..n).map(|i| first[i % first.len()]).collect(),
                Side::Right => {
                    let l = first.len();
                    (0..n).map(|i| first[(l - (n - i) % l) % l]).collect()
                }
            };
            if let Some(conjugate) = conjugate_by_word(m, &w, side) {
                out.push(RotationalConjugate { witness: w, side, conjugate });
            }
        }
    }
    out
}

pub fn default_conjugacy_bound(m: &Morphism) -> usize {
    2 * m.total_length()
}

/// Shortest rotational conjugate (possibly `m` itself) that is left or right
/// permutative, searched up to `max_w_len`. `None` only means nothing was
/// found within the bound.
pub fn rotational_conjugacy_search(m: &Morphism, max_w_len: usize) -> Option<RotationalConjugate> {
    rotational_conjugates(m, max_w_len)
        .into_iter()
        .find(|c| c.conjugate.permutativity() != Permutativity::Neither)
}

/// Solves `code ∘ θ₁ = theta ∘ code` for `θ₁`, requiring every
/// `theta(code(a))` to factor uniquely over the code images.
pub fn conjugate_by_coding(theta: &Morphism, code: &Morphism) -> Result<Morphism> {
    if !theta.is_substitution() {
        return Err(Error::input("theta must be a substitution"));
    }
    if !theta.domain.compatible(&code.codomain) {
        return Err(Error::AlphabetMismatch { expected: theta.domain_size(), found: code.codomain_size() });
    }
    for (i, w) in code.images.iter().enumerate() {
        if code.images[..i].contains(w) {
            return Err(Error::Precondition("code images must be pairwise distinct".into()));
        }
    }
    let mut images = Vec::with_capacity(code.domain_size());
    for a in 0..code.domain_size() as Letter {
        let target = theta.apply_unchecked(code.image(a));
        let parsed = greedy_factor(&target, code).filter(|_| factor_count(&target, code) == 1);
        let factors = match parsed {
            Some(f) => f,
            None => match factor_count(&target, code) {
                0 => return Err(Error::NoFactorization { letter: a }),
                1 => unique_factor(&target, code),
                _ => return Err(Error::AmbiguousFactorization { letter: a }),
            },
        };
        images.push(factors);
    }
    Morphism::new(code.domain.clone(), code.domain.clone(), images)
}

fn greedy_factor(target: &[Letter], code: &Morphism) -> Option<Word> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < target.len() {
        let c = (0..code.domain_size()).find(|&c| target[i..].starts_with(&code.images[c]))?;
        out.push(c as Letter);
        i += code.images[c].len();
    }
    Some(out)
}

/// Number of factorizations of every suffix, saturated at 2.
fn suffix_counts(target: &[Letter], code: &Morphism) -> Vec<u8> {
    let n = target.len();
    let mut ways = vec![0u8; n + 1];
    ways[n] = 1;
    for i in (0..n).rev() {
        let mut w = 0u8;
        for img in &code.images {
            if target[i..].starts_with(img) {
                w = (w + ways[i + img.len()]).min(2);
            }
        }
        ways[i] = w;
    }
    ways
}

fn factor_count(target: &[Letter], code: &Morphism) -> u8 {
    suffix_counts(target, code)[0]
}

fn unique_factor(target: &[Letter], code: &Morphism) -> Word {
    let ways = suffix_counts(target, code);
    let mut out = Vec::new();
    let mut i = 0;
    while i < target.len() {
        let c = (0..code.domain_size())
            .find(|&c| target[i..].starts_with(&code.images[c]) && ways[i + code.images[c].len()] > 0)
            .expect("counted factorization exists");
        out.push(c as Letter);
        i += code.images[c].len();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Morphism {
        Morphism::from_digits(&["01", "0"]).unwrap()
    }

    fn theta() -> Morphism {
        Morphism::from_digits(&["00100", "00000"]).unwrap()
    }

    fn sigma0() -> Morphism {
        Morphism::from_names("ABC", "01", &["00", "01", "10"]).unwrap()
    }

    #[test]
    fn apply_concatenates_images() {
        assert_eq!(fib().apply(&[0, 1, 0]).unwrap(), vec![0, 1, 0, 0, 1]);
        assert_eq!(fib().apply(&[]).unwrap(), Vec::<Letter>::new());
        assert!(fib().apply(&[2]).is_err());
    }

    #[test]
    fn fibonacci_square() {
        let f2 = Morphism::compose(&fib(), &fib()).unwrap();
        assert_eq!(f2.images(), &[vec![0, 1, 0], vec![0, 1]]);
        assert_eq!(f2, fib().power(2).unwrap());
    }

    #[test]
    fn compose_rejects_mismatched_alphabets() {
        let three = Morphism::from_digits(&["0", "1", "2"]).unwrap();
        assert!(Morphism::compose(&fib(), &three).is_err());
    }

    #[test]
    fn incidence_and_lengths() {
        assert_eq!(fib().incidence_matrix().to_rows(), vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(theta().incidence_matrix().to_rows(), vec![vec![4, 5], vec![1, 0]]);
        assert_eq!(fib().total_length(), 3);
        assert_eq!(theta().total_length(), 10);
    }

    #[test]
    fn permutativity_cases() {
        let mu1 = Morphism::from_names("123", "123", &["1", "21", "31"]).unwrap();
        assert_eq!(mu1.permutativity(), Permutativity::Left);
        assert_eq!(fib().permutativity(), Permutativity::Right);
        assert_eq!(Morphism::identity(Alphabet::new(3).unwrap()).permutativity(), Permutativity::Both);
    }

    #[test]
    fn properness() {
        let theta1 = Morphism::from_names("ABC", "ABC", &["ACABA", "ACAAA", "AAABA"]).unwrap();
        assert!(theta1.is_proper());
        assert!(!fib().is_proper());
        assert!(!Morphism::identity(Alphabet::new(2).unwrap()).is_proper());
    }

    #[test]
    fn primitivity() {
        assert_eq!(fib().is_primitive(None).unwrap(), Primitivity::Primitive(2));
        assert_eq!(theta().is_primitive(None).unwrap(), Primitivity::Primitive(2));
        let id = Morphism::identity(Alphabet::new(2).unwrap());
        assert_eq!(id.is_primitive(None).unwrap(), Primitivity::NotPrimitive);
        // Strongly connected but periodic: powers alternate forever.
        let swap = Morphism::from_digits(&["1", "0"]).unwrap();
        assert_eq!(swap.is_primitive(Some(1)).unwrap(), Primitivity::Unknown);
        assert_eq!(swap.is_primitive(None).unwrap(), Primitivity::NotPrimitive);
        assert!(sigma0().is_primitive(None).is_err());
    }

    #[test]
    fn fibonacci_conjugate_by_zero() {
        let c = conjugate_by_word(&fib(), &[0], Side::Left).unwrap();
        assert_eq!(c.images(), &[vec![1, 0], vec![0]]);
        assert_eq!(c.permutativity(), Permutativity::Left);
        assert!(rotational_conjugates(&fib(), 4)
            .iter()
            .any(|r| r.witness == vec![0] && r.side == Side::Left && r.conjugate == c));
    }

    #[test]
    fn empty_witness_gives_the_morphism_itself() {
        let mu1 = Morphism::from_names("123", "123", &["1", "21", "31"]).unwrap();
        let r = rotational_conjugacy_search(&mu1, 0).unwrap();
        assert!(r.witness.is_empty());
        assert_eq!(r.side, Side::Left);
        assert_eq!(r.conjugate, mu1);
    }

    #[test]
    fn search_finds_permutative_conjugate() {
        // 0 -> 010, 1 -> 00 is neither left nor right permutative; its
        // conjugate by 0 on the left is 0 -> 100, 1 -> 00.
        let m = Morphism::from_digits(&["010", "00"]).unwrap();
        assert_eq!(m.permutativity(), Permutativity::Neither);
        let r = rotational_conjugacy_search(&m, default_conjugacy_bound(&m)).unwrap();
        assert_eq!(r.witness, vec![0]);
        assert_eq!(r.side, Side::Left);
        assert_eq!(r.conjugate.images(), &[vec![1, 0, 0], vec![0, 0]]);
    }

    #[test]
    fn coding_conjugate_reproduces_theta1() {
        let t1 = conjugate_by_coding(&theta(), &sigma0()).unwrap();
        let names: Vec<String> = t1.images().iter().map(|w| t1.codomain().format_word(w)).collect();
        assert_eq!(names, ["ACABA", "ACAAA", "AAABA"]);
    }

    #[test]
    fn coding_with_identity_returns_theta() {
        let id = Morphism::identity(Alphabet::new(2).unwrap());
        assert_eq!(conjugate_by_coding(&theta(), &id).unwrap(), theta());
    }

    #[test]
    fn coding_without_factorization_fails() {
        let t = Morphism::from_digits(&["00", "11"]).unwrap();
        assert_eq!(conjugate_by_coding(&t, &sigma0()), Err(Error::NoFactorization { letter: 1 }));
    }

    #[test]
    fn ambiguous_coding_is_reported() {
        let t = Morphism::from_digits(&["00", "00"]).unwrap();
        let code = Morphism::from_images(2, vec![vec![0], vec![0, 0], vec![1]]).unwrap();
        assert_eq!(conjugate_by_coding(&t, &code), Err(Error::AmbiguousFactorization { letter: 0 }));
    }

    #[test]
    fn json_round_trip() {
        let m = sigma0();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"domain":["A","B","C"],"codomain":["0","1"],"images":[[0,0],[0,1],[1,0]]}"#);
        let back: Morphism = serde_json::from_str(&s).unwrap();
        assert_eq!(back.images(), m.images());
        assert!(serde_json::from_str::<Morphism>(r#"{"domain":["0"],"codomain":["0"],"images":[[]]}"#).is_err());
    }
}
