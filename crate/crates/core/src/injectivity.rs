//! Injectivity on one- and two-sided infinite words, the decompositions that
//! shrink a non-injective morphism, and the sufficient conditions for full
//! recognizability.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::morphism::{
    default_conjugacy_bound, rotational_conjugacy_search, Alphabet, Letter, Morphism, RotationalConjugate, Word,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Words read from the origin to the right.
    Right,
    /// Words read from the origin to the left; letters are stored outward.
    Left,
}

/// Two infinite words `first·first_cycle^ω` and `second·second_cycle^ω` with
/// different first letters and the same image. Empty cycles mean the finite
/// words already have equal images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonInjectivityWitness {
    pub direction: Direction,
    pub first: Word,
    pub first_cycle: Word,
    pub second: Word,
    pub second_cycle: Word,
}

impl NonInjectivityWitness {
    fn letter(prefix: &[Letter], cycle: &[Letter], i: usize) -> Letter {
        if i < prefix.len() {
            prefix[i]
        } else {
            cycle[(i - prefix.len()) % cycle.len()]
        }
    }

    /// The first `n` letters of each word (outward from the origin); finite
    /// witnesses are returned as they are.
    pub fn expand(&self, n: usize) -> (Word, Word) {
        if self.first_cycle.is_empty() {
            return (self.first.clone(), self.second.clone());
        }
        let a = (0..n).map(|i| Self::letter(&self.first, &self.first_cycle, i)).collect();
        let b = (0..n).map(|i| Self::letter(&self.second, &self.second_cycle, i)).collect();
        (a, b)
    }

    /// Checks the witness against `m` by expanding `n` letters on each side.
    pub fn verify(&self, m: &Morphism, n: usize) -> bool {
        let m = match self.direction {
            Direction::Right => m.clone(),
            Direction::Left => m.reversed(),
        };
        let (a, b) = self.expand(n);
        if a.is_empty() || b.is_empty() || a[0] == b[0] {
            return false;
        }
        let (ia, ib) = (m.apply_unchecked(&a), m.apply_unchecked(&b));
        if self.first_cycle.is_empty() {
            ia == ib
        } else {
            let k = ia.len().min(ib.len());
            ia[..k] == ib[..k]
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Injectivity {
    pub injective: bool,
    pub witness: Option<NonInjectivityWitness>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Ahead {
    First,
    Second,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    dangling: Word,
    ahead: Ahead,
}

struct Edge {
    from: usize,
    behind: Ahead,
    letter: Letter,
}

enum Step {
    Equal,
    Next(State),
}

fn step(m: &Morphism, s: &State, c: Letter) -> Option<Step> {
    let img = m.image(c);
    let d = &s.dangling;
    if img == d.as_slice() {
        Some(Step::Equal)
    } else if d.starts_with(img) {
        Some(Step::Next(State { dangling: d[img.len()..].to_vec(), ahead: s.ahead }))
    } else if img.starts_with(d) {
        let ahead = if s.ahead == Ahead::First { Ahead::Second } else { Ahead::First };
        Some(Step::Next(State { dangling: img[d.len()..].to_vec(), ahead }))
    } else {
        None
    }
}

/// Dangling-suffix exploration: a state is the unmatched part of the longer
/// image together with the side it belongs to. `m` is not injective on
/// right-infinite words iff two images coincide, an empty dangling part is
/// reachable, or a cycle is reachable.
fn right_injectivity(m: &Morphism, direction: Direction) -> Injectivity {
    let k = m.domain_size() as Letter;
    let mut states: Vec<State> = Vec::new();
    let mut index: HashMap<State, usize> = HashMap::new();
    // How each state was first reached: a start pair or an edge.
    let mut origin: Vec<std::result::Result<(Letter, Letter), Edge>> = Vec::new();
    let mut queue = VecDeque::new();

    for a in 0..k {
        for b in a + 1..k {
            let (ia, ib) = (m.image(a), m.image(b));
            if ia == ib {
                return Injectivity {
                    injective: false,
                    witness: Some(NonInjectivityWitness {
                        direction,
                        first: vec![a],
                        first_cycle: vec![],
                        second: vec![b],
                        second_cycle: vec![],
                    }),
                };
            }
            let st = if ib.starts_with(ia) {
                State { dangling: ib[ia.len()..].to_vec(), ahead: Ahead::Second }
            } else if ia.starts_with(ib) {
                State { dangling: ia[ib.len()..].to_vec(), ahead: Ahead::First }
            } else {
                continue;
            };
            if !index.contains_key(&st) {
                index.insert(st.clone(), states.len());
                states.push(st);
                origin.push(Ok((a, b)));
                queue.push_back(states.len() - 1);
            }
        }
    }

    let mut succ: Vec<Vec<(usize, Ahead, Letter)>> = Vec::new();
    while let Some(i) = queue.pop_front() {
        let mut out = Vec::new();
        for c in 0..k {
            let behind = if states[i].ahead == Ahead::First { Ahead::Second } else { Ahead::First };
            match step(m, &states[i], c) {
                None => {}
                Some(Step::Equal) => {
                    let (first, second) = trace(&origin, i, Some((behind, c)));
                    return Injectivity {
                        injective: false,
                        witness: Some(NonInjectivityWitness {
                            direction,
                            first,
                            first_cycle: vec![],
                            second,
                            second_cycle: vec![],
                        }),
                    };
                }
                Some(Step::Next(st)) => {
                    let j = match index.get(&st) {
                        Some(&j) => j,
                        None => {
                            index.insert(st.clone(), states.len());
                            states.push(st);
                            origin.push(Err(Edge { from: i, behind, letter: c }));
                            queue.push_back(states.len() - 1);
                            states.len() - 1
                        }
                    };
                    out.push((j, behind, c));
                }
            }
        }
        if succ.len() <= i {
            succ.resize_with(i + 1, Vec::new);
        }
        succ[i] = out;
    }
    succ.resize_with(states.len(), Vec::new);

    match find_cycle(&succ) {
        None => Injectivity { injective: true, witness: None },
        Some(cycle) => {
            let entry = cycle[0].0;
            let (first, second) = trace(&origin, entry, None);
            let (mut fc, mut sc) = (Vec::new(), Vec::new());
            for &(_, behind, c) in &cycle {
                match behind {
                    Ahead::First => fc.push(c),
                    Ahead::Second => sc.push(c),
                }
            }
            Injectivity {
                injective: false,
                witness: Some(NonInjectivityWitness {
                    direction,
                    first,
                    first_cycle: fc,
                    second,
                    second_cycle: sc,
                }),
            }
        }
    }
}

/// Rebuilds the two words leading to state `i`, optionally with one more step.
fn trace(
    origin: &[std::result::Result<(Letter, Letter), Edge>],
    mut i: usize,
    extra: Option<(Ahead, Letter)>,
) -> (Word, Word) {
    let mut steps: Vec<(Ahead, Letter)> = extra.into_iter().collect();
    let (a, b) = loop {
        match &origin[i] {
            Ok(pair) => break *pair,
            Err(e) => {
                steps.push((e.behind, e.letter));
                i = e.from;
            }
        }
    };
    let (mut first, mut second) = (vec![a], vec![b]);
    for &(side, c) in steps.iter().rev() {
        match side {
            Ahead::First => first.push(c),
            Ahead::Second => second.push(c),
        }
    }
    (first, second)
}

/// Returns the edges of some cycle, starting at the cycle's first node in
/// discovery order: `(from, behind, letter)` for each edge.
fn find_cycle(succ: &[Vec<(usize, Ahead, Letter)>]) -> Option<Vec<(usize, Ahead, Letter)>> {
    let n = succ.len();
    let mut color = vec![0u8; n];
    for root in 0..n {
        if color[root] != 0 {
            continue;
        }
        // Iterative DFS keeping the current path of edges.
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        let mut path: Vec<(usize, Ahead, Letter)> = Vec::new();
        color[root] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < succ[v].len() {
                let (u, behind, c) = succ[v][*next];
                *next += 1;
                match color[u] {
                    0 => {
                        color[u] = 1;
                        path.push((v, behind, c));
                        stack.push((u, 0));
                    }
                    1 => {
                        path.push((v, behind, c));
                        let start = path.iter().position(|e| e.0 == u).expect("node on current path");
                        return Some(path[start..].to_vec());
                    }
                    _ => {}
                }
            } else {
                color[v] = 2;
                stack.pop();
                path.pop();
            }
        }
    }
    None
}

pub fn injective_on_right_infinite(m: &Morphism) -> Injectivity {
    right_injectivity(m, Direction::Right)
}

/// Mirror of the right-infinite check, run on the reversed images.
pub fn injective_on_left_infinite(m: &Morphism) -> Injectivity {
    right_injectivity(&m.reversed(), Direction::Left)
}

/// Two-sided equal images restrict to equal one-sided images on the side where
/// the preimages differ, and one-sided examples extend by a common tail.
pub fn injective_on_two_sided(m: &Morphism) -> bool {
    injective_on_right_infinite(m).injective && injective_on_left_infinite(m).injective
}

/// `sigma_tilde ∘ tau` equals the decomposed morphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub tau: Morphism,
    pub sigma_tilde: Morphism,
    pub witness: NonInjectivityWitness,
}

/// One shortening step, built from a witness pair `x ≠ x'` with equal images:
/// with `b = x'_0` the letter with the longer image, write
/// `m(b) = m(x_[0,l))·v` where `v` is a proper prefix of `m(x_l)`. An empty
/// `v` removes `b`; otherwise the image of `b` is cut down to `v`.
pub fn decompose_non_injective(m: &Morphism) -> Result<Decomposition> {
    let right = injective_on_right_infinite(m);
    if let Some(w) = right.witness {
        return Ok(decompose_with(m, w));
    }
    let left = injective_on_left_infinite(m);
    match left.witness {
        Some(w) => {
            let d = decompose_with(&m.reversed(), w);
            Ok(Decomposition { tau: d.tau.reversed(), sigma_tilde: d.sigma_tilde.reversed(), witness: d.witness })
        }
        None => Err(Error::Precondition("the morphism is injective on two-sided sequences".into())),
    }
}

fn decompose_with(m: &Morphism, w: NonInjectivityWitness) -> Decomposition {
    let (a0, b0) = (w.first[0], w.second[0]);
    let swap = m.image_len(a0) > m.image_len(b0);
    let (xp, xc) = if swap { (&w.second, &w.second_cycle) } else { (&w.first, &w.first_cycle) };
    let b = if swap { a0 } else { b0 };
    let target = m.image_len(b);
    let x_at = |i: usize| NonInjectivityWitness::letter(xp, xc, i);

    let mut l = 0;
    let mut s = 0;
    while (l < xp.len() || !xc.is_empty()) && s + m.image_len(x_at(l)) <= target {
        s += m.image_len(x_at(l));
        l += 1;
    }
    let head: Word = (0..l).map(x_at).collect();
    let v = m.image(b)[s..].to_vec();

    if v.is_empty() {
        let shift = |a: Letter| if a > b { a - 1 } else { a };
        let domain = match m.domain().names() {
            Some(n) => Alphabet::named(n.iter().enumerate().filter(|&(i, _)| i != b as usize).map(|(_, s)| s.clone())),
            None => Alphabet::new(m.domain_size() - 1),
        }
        .expect("at least two letters when two images agree");
        let tau_images = (0..m.domain_size() as Letter)
            .map(|a| if a == b { head.iter().map(|&c| shift(c)).collect() } else { vec![shift(a)] })
            .collect();
        let sigma_images =
            (0..m.domain_size() as Letter).filter(|&a| a != b).map(|a| m.image(a).to_vec()).collect();
        Decomposition {
            tau: Morphism::new(m.domain().clone(), domain.clone(), tau_images).expect("valid images"),
            sigma_tilde: Morphism::new(domain, m.codomain().clone(), sigma_images).expect("valid images"),
            witness: w,
        }
    } else {
        let tau_images = (0..m.domain_size() as Letter)
            .map(|a| if a == b { head.iter().copied().chain([b]).collect() } else { vec![a] })
            .collect();
        let sigma_images = (0..m.domain_size() as Letter)
            .map(|a| if a == b { v.clone() } else { m.image(a).to_vec() })
            .collect();
        Decomposition {
            tau: Morphism::new(m.domain().clone(), m.domain().clone(), tau_images).expect("valid images"),
            sigma_tilde: Morphism::new(m.domain().clone(), m.codomain().clone(), sigma_images).expect("valid images"),
            witness: w,
        }
    }
}

/// Iterates [`decompose_non_injective`] until the alphabet shrinks. The total
/// length drops at every step, so this terminates.
pub fn decompose_reduce_alphabet(m: &Morphism) -> Result<Decomposition> {
    let first = decompose_non_injective(m)?;
    let mut tau = first.tau;
    let mut current = first.sigma_tilde;
    let witness = first.witness;
    while current.domain_size() == m.domain_size() {
        let d = decompose_non_injective(&current)?;
        tau = Morphism::compose(&d.tau, &tau)?;
        current = d.sigma_tilde;
    }
    Ok(Decomposition { tau, sigma_tilde: current, witness })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    TwoLetterDomain,
    FullRank,
    LeftPermutative,
    RightPermutative,
    RotationalConjugate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    FullyRecognizableAperiodic,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognizabilityCertificate {
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
    /// The permutative conjugate behind [`Reason::RotationalConjugate`].
    pub witness: Option<RotationalConjugate>,
}

/// Records every satisfied sufficient condition. The conjugacy search runs
/// only when the morphism is not permutative itself.
pub fn full_recognizability_check(m: &Morphism, conj_bound: usize) -> RecognizabilityCertificate {
    let mut reasons = Vec::new();
    if m.domain_size() == 2 {
        reasons.push(Reason::TwoLetterDomain);
    }
    if m.incidence_matrix().rank() == m.domain_size() {
        reasons.push(Reason::FullRank);
    }
    let p = m.permutativity();
    if p.is_left() {
        reasons.push(Reason::LeftPermutative);
    }
    if p.is_right() {
        reasons.push(Reason::RightPermutative);
    }
    let mut witness = None;
    if !p.is_left() && !p.is_right() {
        if let Some(c) = rotational_conjugacy_search(m, conj_bound) {
            reasons.push(Reason::RotationalConjugate);
            witness = Some(c);
        }
    }
    let verdict = if reasons.is_empty() { Verdict::Inconclusive } else { Verdict::FullyRecognizableAperiodic };
    RecognizabilityCertificate { verdict, reasons, witness }
}

/// [`full_recognizability_check`] with the default conjugacy bound.
pub fn certify(m: &Morphism) -> RecognizabilityCertificate {
    full_recognizability_check(m, default_conjugacy_bound(m))
}
