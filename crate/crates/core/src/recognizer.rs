//! Desubstitution: parsing finite windows and eventually periodic points into
//! images of a morphism, cutting points, the Mossé search and the infection
//! bound.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::language::FactorSet;
use crate::morphism::{Letter, Morphism, Word};
use crate::point::{apply_to_point, image_position, EventuallyPeriodicPoint};

/// A tiling of a finite window: the window is `m(preimage)[offset..]`, cut to
/// the window length, and both the first and the last image meet the window.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WindowParse {
    pub offset: usize,
    pub preimage: Word,
}

impl WindowParse {
    /// Block boundaries in window coordinates, from `-offset` to the end of
    /// the last image.
    pub fn cuts(&self, m: &Morphism) -> Vec<i64> {
        let mut c = -(self.offset as i64);
        let mut out = vec![c];
        for &a in &self.preimage {
            c += m.image_len(a) as i64;
            out.push(c);
        }
        out
    }

    /// Cuts strictly inside a window of length `len`.
    pub fn interior_cuts(&self, m: &Morphism, len: usize) -> Vec<i64> {
        self.cuts(m).into_iter().filter(|&c| c > 0 && c < len as i64).collect()
    }

    pub fn has_cut_at(&self, m: &Morphism, pos: i64) -> bool {
        self.cuts(m).contains(&pos)
    }

    /// Whether the parse reproduces `w`.
    pub fn reproduces(&self, m: &Morphism, w: &[Letter]) -> bool {
        let img = m.apply_unchecked(&self.preimage);
        let first = self.preimage.first().map_or(0, |&a| m.image_len(a));
        let last = self.preimage.last().map_or(0, |&a| m.image_len(a));
        self.offset < first
            && img.len() >= self.offset + w.len()
            && img.len() - last < self.offset + w.len()
            && img[self.offset..self.offset + w.len()] == *w
    }
}

fn check_lang(m: &Morphism, lang: &FactorSet) -> Result<()> {
    if !m.domain().compatible(lang.alphabet()) {
        return Err(Error::AlphabetMismatch { expected: m.domain_size(), found: lang.alphabet().size() });
    }
    Ok(())
}

/// Horizon a language needs so that every window of length `n` can be
/// checked against it.
pub fn window_horizon(m: &Morphism, n: usize) -> usize {
    n.div_ceil(m.min_image_len()) + 2
}

/// Every parse of `w`, sorted by offset and then preimage. With a language,
/// only preimages in the language are kept.
pub fn window_parses(w: &[Letter], m: &Morphism, lang: Option<&FactorSet>) -> Result<Vec<WindowParse>> {
    if w.is_empty() {
        return Err(Error::input("cannot parse the empty window"));
    }
    m.codomain().check_word(w)?;
    if let Some(l) = lang {
        check_lang(m, l)?;
        let need = window_horizon(m, w.len());
        if l.max_len() < need {
            return Err(Error::Horizon { have: l.max_len(), need });
        }
    }
    Ok(parse_window(w, m, lang))
}

/// [`window_parses`] without the argument checks.
pub(crate) fn parse_window(w: &[Letter], m: &Morphism, lang: Option<&FactorSet>) -> Vec<WindowParse> {
    let n = w.len();
    let k = m.domain_size() as Letter;
    let fits = |p: usize, b: Letter| {
        let img = m.image(b);
        let t = img.len().min(n - p);
        img[..t] == w[p..p + t]
    };
    // finish[p]: the suffix from p can be tiled.
    let mut finish = vec![false; n + 1];
    for p in (1..n).rev() {
        finish[p] = (0..k).any(|b| fits(p, b) && (p + m.image_len(b) >= n || finish[p + m.image_len(b)]));
    }
    let mut out = Vec::new();
    let mut v = Vec::new();
    for a in 0..k {
        let img = m.image(a);
        for off in 0..img.len() {
            let t = (img.len() - off).min(n);
            if img[off..off + t] != w[..t] {
                continue;
            }
            let p = img.len() - off;
            if p < n && !finish[p] {
                continue;
            }
            v.clear();
            v.push(a);
            if lang.is_some_and(|l| !l.has(&v)) {
                continue;
            }
            extend(m, w, lang, &fits, &finish, p, &mut v, off, &mut out);
        }
    }
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    m: &Morphism,
    w: &[Letter],
    lang: Option<&FactorSet>,
    fits: &dyn Fn(usize, Letter) -> bool,
    finish: &[bool],
    p: usize,
    v: &mut Word,
    offset: usize,
    out: &mut Vec<WindowParse>,
) {
    let n = w.len();
    if p >= n {
        out.push(WindowParse { offset, preimage: v.clone() });
        return;
    }
    for b in 0..m.domain_size() as Letter {
        if !fits(p, b) {
            continue;
        }
        let q = p + m.image_len(b);
        if q < n && !finish[q] {
            continue;
        }
        v.push(b);
        let ok = match lang {
            Some(l) => l.has(&v[v.len().saturating_sub(l.max_len())..]),
            None => true,
        };
        if ok {
            extend(m, w, lang, fits, finish, q, v, offset, out);
        }
        v.pop();
    }
}

/// A centered representation `y = T^offset m(preimage)` with
/// `offset < |m(preimage_0)|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CenteredParse {
    pub offset: usize,
    pub preimage: EventuallyPeriodicPoint,
}

impl CenteredParse {
    /// Whether `T^offset m(preimage) = y`.
    pub fn reproduces(&self, m: &Morphism, y: &EventuallyPeriodicPoint) -> bool {
        self.offset < m.image_len(self.preimage.letter_at(0))
            && apply_to_point(m, &self.preimage).shift(self.offset as i64) == *y
    }

    /// The cut in front of `preimage_i`.
    pub fn cut_at(&self, m: &Morphism, i: i64) -> i64 {
        image_position(m, &self.preimage, i) - self.offset as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointParses {
    Finite { parses: Vec<CenteredParse> },
    /// Infinitely many eventually periodic preimages; only possible for
    /// morphisms that are not injective.
    Infinite,
}

impl PointParses {
    pub fn count(&self) -> Option<usize> {
        match self {
            PointParses::Finite { parses } => Some(parses.len()),
            PointParses::Infinite => None,
        }
    }

    pub fn parses(&self) -> Option<&[CenteredParse]> {
        match self {
            PointParses::Finite { parses } => Some(parses),
            PointParses::Infinite => None,
        }
    }
}

/// Right-infinite continuations `u·p^ω` of a parse.
enum Halves {
    Finite(Vec<(Word, Word)>),
    Infinite,
}

type Node = (i64, Word);

/// Walks cut positions to the right through `y`. Positions inside the right
/// periodic part are identified modulo its period, so the walk graph is
/// finite. With a language the node also carries the last `h - 1` letters of
/// the preimage.
struct Walker<'a> {
    y: EventuallyPeriodicPoint,
    m: Morphism,
    lang: Option<&'a FactorSet>,
    cache: HashMap<Node, std::rc::Rc<Halves>>,
}

impl<'a> Walker<'a> {
    fn key(&self, p: i64) -> i64 {
        let j = self.y.right_start();
        if p < j {
            p
        } else {
            j + (p - j).rem_euclid(self.y.right_period().len() as i64)
        }
    }

    fn fits(&self, p: i64, b: Letter) -> bool {
        self.m.image(b).iter().enumerate().all(|(t, &c)| self.y.letter_at(p + t as i64) == c)
    }

    /// The letter `b` placed at cut `p` after history `hist`.
    fn step(&self, p: i64, hist: &[Letter], b: Letter) -> Option<(i64, Word)> {
        if !self.fits(p, b) {
            return None;
        }
        let q = p + self.m.image_len(b) as i64;
        let Some(l) = self.lang else {
            return Some((q, Vec::new()));
        };
        let mut nh = hist.to_vec();
        nh.push(b);
        if !l.has(&nh) {
            return None;
        }
        if nh.len() >= l.max_len() {
            nh.remove(0);
        }
        Some((q, nh))
    }

    /// All letter sequences of length `len` starting at cut `p`, each with the
    /// cut and history reached.
    fn blocks(&self, p: i64, hist: Word, len: usize) -> Vec<(Word, i64, Word)> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), p, hist)];
        while let Some((w, p, h)) = stack.pop() {
            if w.len() == len {
                out.push((w, p, h));
                continue;
            }
            for b in 0..self.m.domain_size() as Letter {
                if let Some((q, nh)) = self.step(p, &h, b) {
                    let mut w2 = w.clone();
                    w2.push(b);
                    stack.push((w2, q, nh));
                }
            }
        }
        out.sort();
        out
    }

    fn halves(&mut self, p: i64, hist: Word) -> std::rc::Rc<Halves> {
        let start: Node = (self.key(p), hist);
        if let Some(h) = self.cache.get(&start) {
            return h.clone();
        }
        let h = std::rc::Rc::new(self.compute_halves(start.clone()));
        self.cache.insert(start, h.clone());
        h
    }

    fn compute_halves(&self, start: Node) -> Halves {
        let mut index: HashMap<Node, usize> = HashMap::new();
        let mut nodes: Vec<Node> = vec![start.clone()];
        index.insert(start, 0);
        let mut edges: Vec<Vec<(Letter, usize)>> = Vec::new();
        let mut i = 0;
        while i < nodes.len() {
            let (p, h) = nodes[i].clone();
            let mut out = Vec::new();
            for b in 0..self.m.domain_size() as Letter {
                if let Some((q, nh)) = self.step(p, &h, b) {
                    let node = (self.key(q), nh);
                    let j = *index.entry(node.clone()).or_insert_with(|| {
                        nodes.push(node);
                        nodes.len() - 1
                    });
                    out.push((b, j));
                }
            }
            edges.push(out);
            i += 1;
        }
        let n = nodes.len();

        // Alive nodes start an infinite walk.
        let mut alive = vec![true; n];
        loop {
            let mut changed = false;
            for v in 0..n {
                if alive[v] && !edges[v].iter().any(|&(_, u)| alive[u]) {
                    alive[v] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if !alive[0] {
            return Halves::Finite(vec![]);
        }
        let live: Vec<Vec<(Letter, usize)>> =
            edges.iter().map(|es| es.iter().copied().filter(|&(_, u)| alive[u]).collect()).collect();

        let on_cycle = cyclic_nodes(&live);
        if (0..n).any(|v| alive[v] && on_cycle[v] && live[v].len() >= 2) {
            return Halves::Infinite;
        }

        // Every walk now ends in a cycle it cannot leave.
        let mut out = Vec::new();
        let mut path = vec![0usize];
        let mut labels: Vec<Letter> = Vec::new();
        let mut depth_of: HashMap<usize, usize> = HashMap::from([(0, 0)]);
        lassos(&live, &mut path, &mut labels, &mut depth_of, &mut out);
        out.sort();
        Halves::Finite(out)
    }
}

fn lassos(
    live: &[Vec<(Letter, usize)>],
    path: &mut Vec<usize>,
    labels: &mut Vec<Letter>,
    depth_of: &mut HashMap<usize, usize>,
    out: &mut Vec<(Word, Word)>,
) {
    let v = *path.last().expect("nonempty path");
    for &(b, u) in &live[v] {
        if let Some(&d) = depth_of.get(&u) {
            let mut cycle = labels[d..].to_vec();
            cycle.push(b);
            out.push((labels[..d].to_vec(), cycle));
        } else {
            depth_of.insert(u, path.len());
            path.push(u);
            labels.push(b);
            lassos(live, path, labels, depth_of, out);
            labels.pop();
            path.pop();
            depth_of.remove(&u);
        }
    }
}

/// Nodes lying on some cycle, by Tarjan's algorithm.
fn cyclic_nodes(adj: &[Vec<(Letter, usize)>]) -> Vec<bool> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut counter = 0;
    let mut result = vec![false; n];
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut e)) = call.last_mut() {
            if *e < adj[v].len() {
                let u = adj[v][*e].1;
                *e += 1;
                if index[u] == usize::MAX {
                    index[u] = counter;
                    low[u] = counter;
                    counter += 1;
                    stack.push(u);
                    on_stack[u] = true;
                    call.push((u, 0));
                } else if on_stack[u] {
                    low[v] = low[v].min(index[u]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("scc member");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    let cyclic = comp.len() > 1 || adj[v].iter().any(|&(_, u)| u == v);
                    for w in comp {
                        result[w] = cyclic;
                    }
                }
            }
        }
    }
    result
}

/// Every centered representation `(k, x)` of `y` with `x` eventually periodic,
/// or [`PointParses::Infinite`]. With a language, every factor of `x` within
/// the horizon must belong to it.
pub fn point_parses(y: &EventuallyPeriodicPoint, m: &Morphism, lang: Option<&FactorSet>) -> Result<PointParses> {
    y.check_alphabet(m.codomain())?;
    if let Some(l) = lang {
        check_lang(m, l)?;
    }
    let rev_lang = lang.map(FactorSet::reversed);
    let mut right = Walker { y: y.clone(), m: m.clone(), lang, cache: HashMap::new() };
    let mut left = Walker { y: y.mirror(), m: m.reversed(), lang: rev_lang.as_ref(), cache: HashMap::new() };
    // Letters on each side of x_0 fixed before the two walks separate, so that
    // every factor within the horizon is checked by exactly one of them.
    let block = lang.map_or(0, |l| l.max_len() - 1);

    let mut parses = Vec::new();
    let mut infinite = false;
    for a in 0..m.domain_size() as Letter {
        let len = m.image_len(a) as i64;
        for k in 0..len {
            if !right.fits(-k, a) {
                continue;
            }
            if lang.is_some_and(|l| !l.has(&[a])) {
                continue;
            }
            let hist = if lang.is_some() { vec![a] } else { vec![] };
            let hist = if block == 0 { vec![] } else { hist };
            let rights = right.blocks(len - k, hist.clone(), block);
            let lefts = left.blocks(k, hist, block);
            for (lb, lp, lh) in &lefts {
                let lword: Word = lb.iter().rev().copied().collect();
                for (rb, rp, rh) in &rights {
                    if let Some(l) = lang {
                        let mut full = lword.clone();
                        full.push(a);
                        full.extend_from_slice(rb);
                        if !l.admits(&full) {
                            continue;
                        }
                    }
                    let lh_ = left.halves(*lp, lh.clone());
                    let rh_ = right.halves(*rp, rh.clone());
                    match (&*lh_, &*rh_) {
                        (Halves::Finite(ls), Halves::Finite(rs)) => {
                            for (lu, lc) in ls {
                                for (ru, rc) in rs {
                                    let mut center: Word = lu.iter().rev().copied().collect();
                                    center.extend_from_slice(&lword);
                                    center.push(a);
                                    center.extend_from_slice(rb);
                                    center.extend_from_slice(ru);
                                    let x = EventuallyPeriodicPoint::with_center_start(
                                        lc.iter().rev().copied().collect(),
                                        center,
                                        rc.clone(),
                                        -((lu.len() + lword.len()) as i64),
                                    )?;
                                    parses.push(CenteredParse { offset: k as usize, preimage: x });
                                }
                            }
                        }
                        (Halves::Finite(ls), _) if ls.is_empty() => {}
                        (_, Halves::Finite(rs)) if rs.is_empty() => {}
                        _ => infinite = true,
                    }
                }
            }
        }
    }
    if infinite {
        return Ok(PointParses::Infinite);
    }
    parses.sort();
    parses.dedup();
    Ok(PointParses::Finite { parses })
}

/// Cutting points of a parse inside `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSet {
    pub lo: i64,
    pub hi: i64,
    pub cuts: Vec<i64>,
}

impl CutSet {
    pub fn intersects(&self, other: &CutSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.cuts.len() && j < other.cuts.len() {
            match self.cuts[i].cmp(&other.cuts[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

pub fn cutting_set(m: &Morphism, parse: &CenteredParse, lo: i64, hi: i64) -> CutSet {
    let x = &parse.preimage;
    let mut cuts = Vec::new();
    let mut c = -(parse.offset as i64);
    let mut i = 0i64;
    while c > lo {
        i -= 1;
        c -= m.image_len(x.letter_at(i)) as i64;
    }
    while c <= hi {
        if c >= lo {
            cuts.push(c);
        }
        c += m.image_len(x.letter_at(i)) as i64;
        i += 1;
    }
    CutSet { lo, hi, cuts }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// The window outside of which the cut sets of both parses are periodic,
/// widened by one common period on each side.
pub fn common_cut_window(m: &Morphism, a: &CenteredParse, b: &CenteredParse) -> (i64, i64) {
    let tails = |p: &CenteredParse| {
        let x = &p.preimage;
        (
            p.cut_at(m, x.center_start()),
            m.image_length_of(x.left_period()) as i64,
            p.cut_at(m, x.right_start()),
            m.image_length_of(x.right_period()) as i64,
        )
    };
    let (la, pla, ra, pra) = tails(a);
    let (lb, plb, rb, prb) = tails(b);
    (la.min(lb) - lcm(pla, plb), ra.max(rb) + lcm(pra, prb))
}

/// Whether two parses share a cutting point, decided exactly.
pub fn have_common_cut(m: &Morphism, a: &CenteredParse, b: &CenteredParse) -> bool {
    let (lo, hi) = common_cut_window(m, a, b);
    cutting_set(m, a, lo, hi).intersects(&cutting_set(m, b, lo, hi))
}

/// `2^(K-1)·(K-1) + 2`: this many pairwise cut-disjoint representations force
/// a point to be periodic.
pub fn infection_threshold(k: usize) -> Result<u128> {
    if k == 0 {
        return Err(Error::input("the alphabet must be nonempty"));
    }
    let k1 = (k - 1) as u128;
    1u128
        .checked_shl(k as u32 - 1)
        .filter(|_| k - 1 < 128)
        .and_then(|p| p.checked_mul(k1))
        .and_then(|v| v.checked_add(2))
        .ok_or_else(|| Error::input(format!("threshold for {k} letters overflows")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfectionReport {
    pub threshold: u128,
    pub parse_count: usize,
    /// `common_cut[i][j]`: parses `i` and `j` share a cut.
    pub common_cut: Vec<Vec<bool>>,
    pub largest_cut_disjoint_family: usize,
    pub threshold_reached: bool,
    pub point_is_periodic: bool,
    /// False only if the threshold is reached by a non-periodic point.
    pub consistent: bool,
}

pub fn infection_verify(y: &EventuallyPeriodicPoint, m: &Morphism, parses: &[CenteredParse]) -> Result<InfectionReport> {
    for (i, p) in parses.iter().enumerate() {
        if !p.reproduces(m, y) {
            return Err(Error::input(format!("parse {i} does not represent the point")));
        }
    }
    let n = parses.len();
    let common_cut: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| have_common_cut(m, &parses[i], &parses[j])).collect()).collect();
    let largest = largest_independent(&common_cut);
    let threshold = infection_threshold(m.domain_size())?;
    let reached = largest as u128 >= threshold;
    let periodic = y.is_periodic();
    Ok(InfectionReport {
        threshold,
        parse_count: n,
        common_cut,
        largest_cut_disjoint_family: largest,
        threshold_reached: reached,
        point_is_periodic: periodic,
        consistent: !reached || periodic,
    })
}

/// Largest set of indices pairwise without a common cut.
fn largest_independent(conflict: &[Vec<bool>]) -> usize {
    fn go(conflict: &[Vec<bool>], cand: &[usize], size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let Some((&v, rest)) = cand.split_first() else {
            *best = size;
            return;
        };
        let with: Vec<usize> = rest.iter().copied().filter(|&u| !conflict[v][u]).collect();
        go(conflict, &with, size + 1, best);
        go(conflict, rest, size, best);
    }
    let all: Vec<usize> = (0..conflict.len()).collect();
    let mut best = 0;
    go(conflict, &all, 0, &mut best);
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MosseOutcome {
    /// Every occurrence of a length-`2·ell` context centered at a cut is
    /// centered at a cut in every parse.
    Certificate { ell: usize },
    /// A window with two parses in the language and no common interior cut.
    Counterexample { window: Word, parse_a: WindowParse, parse_b: WindowParse },
    Unknown { ell_tried: usize },
}

/// Length of the windows examined for counterexamples.
pub fn mosse_window_len(m: &Morphism, ell_max: usize) -> usize {
    2 * ell_max + 2 * m.max_image_len()
}

/// Horizon [`mosse_search`] needs.
pub fn mosse_horizon(m: &Morphism, ell_max: usize) -> usize {
    window_horizon(m, mosse_window_len(m, ell_max))
}

/// Looks for the smallest `ell ≤ ell_max` such that the length-`2·ell`
/// context around a cut forces a cut in every parse allowed by `lang`. When
/// there is none, looks for a window of length [`mosse_window_len`] with two
/// cut-disjoint parses.
pub fn mosse_search(m: &Morphism, lang: &FactorSet, ell_max: usize) -> Result<MosseOutcome> {
    check_lang(m, lang)?;
    if ell_max == 0 {
        return Err(Error::input("ell_max must be positive"));
    }
    let need = mosse_horizon(m, ell_max);
    if lang.max_len() < need {
        return Err(Error::Horizon { have: lang.max_len(), need });
    }
    let wlen = mosse_window_len(m, ell_max);
    let images = lang.image(m, wlen)?;

    for ell in 1..=ell_max {
        let contexts = images.words_of_len(2 * ell);
        let center = ell as i64;
        let ambiguous = contexts.par_iter().any(|u| {
            let ps = parse_window(u, m, Some(lang));
            let with = ps.iter().filter(|p| p.has_cut_at(m, center)).count();
            with > 0 && with < ps.len()
        });
        if !ambiguous {
            return Ok(MosseOutcome::Certificate { ell });
        }
    }

    let windows = images.words_of_len(wlen);
    let found = windows.par_iter().find_map_first(|u| {
        let ps = parse_window(u, m, Some(lang));
        let cuts: Vec<Vec<i64>> = ps.iter().map(|p| p.interior_cuts(m, u.len())).collect();
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                if !cuts[i].iter().any(|c| cuts[j].binary_search(c).is_ok()) {
                    return Some((u.clone(), ps[i].clone(), ps[j].clone()));
                }
            }
        }
        None
    });
    Ok(match found {
        Some((window, parse_a, parse_b)) => MosseOutcome::Counterexample { window, parse_a, parse_b },
        None => MosseOutcome::Unknown { ell_tried: ell_max },
    })
}
