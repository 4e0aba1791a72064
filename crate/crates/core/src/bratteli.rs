//! The ordered Bratteli diagram of a directive sequence, its Vershik
//! successor on finite paths, and the map from paths to windows of points.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::directive::DirectiveSequence;
use crate::error::{Error, Result};
use crate::language::{prune_to_biextendable, sadic_factors};
use crate::matrix::IntegerMatrix;
use crate::morphism::{Letter, Word};
use crate::recognizer::window_parses;

/// Levels `V_0..V_depth`: the root, then `V_{n+1}` a copy of `A_n`.
///
/// `edges[n][v]` lists the sources in `V_n` of the edges entering `v ∈ V_{n+1}`,
/// the position in the list being the order of the edge. Edges into `V_1`
/// come from the root; for `n ≥ 1` the sources of `a` are the letters of
/// `σ_{n-1}(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedBratteliDiagram {
    pub depth: usize,
    pub levels: Vec<usize>,
    pub edges: Vec<Vec<Vec<usize>>>,
    /// Vertex names per level, the root being `"root"`.
    pub labels: Vec<Vec<String>>,
}

pub fn build_diagram(d: &DirectiveSequence, depth: usize) -> Result<OrderedBratteliDiagram> {
    if depth == 0 {
        return Err(Error::input("the diagram depth must be positive"));
    }
    if let Some(l) = d.depth_limit() {
        if depth - 1 > l {
            return Err(Error::input(format!("depth {depth} needs {} morphisms, the sequence has {l}", depth - 1)));
        }
    }
    let mut levels = vec![1];
    let mut labels = vec![vec!["root".to_string()]];
    let mut edges = Vec::new();
    for n in 0..depth {
        let a = d.alphabet(n)?;
        levels.push(a.size());
        labels.push((0..a.size() as Letter).map(|x| a.name(x)).collect());
        if n == 0 {
            edges.push(vec![vec![0]; a.size()]);
        } else {
            let m = d.level_morphism(n - 1)?;
            edges.push(m.images().iter().map(|w| w.iter().map(|&b| b as usize).collect()).collect());
        }
    }
    Ok(OrderedBratteliDiagram { depth, levels, edges, labels })
}

impl OrderedBratteliDiagram {
    /// Ordered sources of `v ∈ V_{n+1}`.
    pub fn sources(&self, n: usize, v: usize) -> &[usize] {
        &self.edges[n][v]
    }

    pub fn in_degree(&self, n: usize, v: usize) -> usize {
        self.edges[n][v].len()
    }

    pub fn edge_count(&self, n: usize) -> usize {
        self.edges[n].iter().map(Vec::len).sum()
    }

    /// `F_n`, with `F_n[v][u]` the number of edges from `u ∈ V_n` to `v ∈ V_{n+1}`.
    pub fn incidence(&self, n: usize) -> IntegerMatrix {
        let mut f = IntegerMatrix::zeros(self.levels[n + 1], self.levels[n]);
        for (v, srcs) in self.edges[n].iter().enumerate() {
            for &u in srcs {
                *f.get_mut(v, u) += 1;
            }
        }
        f
    }

    /// Deterministic DOT rendering; vertex `i` of `V_n` is named `Ln_i` and
    /// edges carry their order.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph bratteli {\n  rankdir=TB;\n");
        for (n, labels) in self.labels.iter().enumerate() {
            for (i, l) in labels.iter().enumerate() {
                let _ = writeln!(s, "  L{n}_{i} [label=\"{}\"];", l.replace('"', "\\\""));
            }
        }
        for (n, level) in self.edges.iter().enumerate() {
            for (v, srcs) in level.iter().enumerate() {
                for (k, u) in srcs.iter().enumerate() {
                    let _ = writeln!(s, "  L{n}_{u} -> L{}_{v} [label=\"{k}\"];", n + 1);
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Same as [`OrderedBratteliDiagram::to_dot`].
pub fn export_dot(b: &OrderedBratteliDiagram) -> String {
    b.to_dot()
}

/// A finite path read from the top: vertices `a_1..a_depth` with `a_n ∈ A_n`
/// and orders `k_0..k_{depth-1}`, where `k_{n-1}` picks a position in
/// `σ_{n-1}(a_n)` and `a_{n-1} = σ_{n-1}(a_n)[k_{n-1}]`. It lives in any
/// diagram of depth at least `depth + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathPrefix {
    pub depth: usize,
    pub edge_orders: Vec<usize>,
    pub vertices: Vec<Letter>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Successor {
    Path(PathPrefix),
    /// Every edge is maximal; the successor depends on deeper levels.
    MaximalAtDepth,
}

impl PathPrefix {
    /// The path with all orders 0 ending at `top ∈ A_depth`.
    pub fn minimal(b: &OrderedBratteliDiagram, depth: usize, top: Letter) -> Result<Self> {
        if depth == 0 || depth + 1 > b.depth {
            return Err(Error::input(format!("a path of depth {depth} needs a diagram of depth {}", depth + 1)));
        }
        if top as usize >= b.levels[depth + 1] {
            return Err(Error::LetterOutOfRange { letter: top, size: b.levels[depth + 1] });
        }
        let mut vertices = vec![0; depth];
        vertices[depth - 1] = top;
        for n in (1..depth).rev() {
            vertices[n - 1] = b.sources(n + 1, vertices[n] as usize)[0] as Letter;
        }
        Ok(PathPrefix { depth, edge_orders: vec![0; depth], vertices })
    }

    /// `a_n` for `1 ≤ n ≤ depth`.
    pub fn vertex(&self, n: usize) -> Letter {
        self.vertices[n - 1]
    }

    pub fn validate(&self, b: &OrderedBratteliDiagram) -> Result<()> {
        let d = self.depth;
        if d == 0 || self.edge_orders.len() != d || self.vertices.len() != d {
            return Err(Error::input("a path needs depth ≥ 1 and one order and vertex per level"));
        }
        if d + 1 > b.depth {
            return Err(Error::input(format!("a path of depth {d} needs a diagram of depth {}", d + 1)));
        }
        for n in 1..=d {
            let a = self.vertex(n) as usize;
            if a >= b.levels[n + 1] {
                return Err(Error::input(format!("vertex {a} does not exist at level {n}")));
            }
            let srcs = b.sources(n, a);
            let k = self.edge_orders[n - 1];
            if k >= srcs.len() {
                return Err(Error::input(format!("order {k} exceeds the in-degree of vertex {a} at level {n}")));
            }
            if n >= 2 && srcs[k] != self.vertex(n - 1) as usize {
                return Err(Error::input(format!("the edge of order {k} into vertex {a} does not start at the path")));
            }
        }
        Ok(())
    }
}

/// The next path in the order: the lowest non-maximal edge is incremented and
/// every edge below it becomes minimal.
pub fn vershik_successor(b: &OrderedBratteliDiagram, p: &PathPrefix) -> Result<Successor> {
    p.validate(b)?;
    let Some(n) = (0..p.depth).find(|&n| p.edge_orders[n] + 1 < b.in_degree(n + 1, p.vertex(n + 1) as usize)) else {
        return Ok(Successor::MaximalAtDepth);
    };
    let mut q = p.clone();
    q.edge_orders[n] += 1;
    for i in (1..=n).rev() {
        let k = if i == n { q.edge_orders[n] } else { 0 };
        q.vertices[i - 1] = b.sources(i + 1, q.vertex(i + 1) as usize)[k] as Letter;
    }
    for k in &mut q.edge_orders[..n] {
        *k = 0;
    }
    Ok(Successor::Path(q))
}

/// `y[-left_len, right_len)` of some point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowOfPoint {
    pub left_len: usize,
    pub right_len: usize,
    pub letters: Word,
}

impl WindowOfPoint {
    pub fn new(left_len: usize, letters: Word) -> Result<Self> {
        if left_len > letters.len() {
            return Err(Error::input("the origin lies outside the window"));
        }
        Ok(WindowOfPoint { left_len, right_len: letters.len() - left_len, letters })
    }

    /// `y_i` when `i` lies in the window.
    pub fn letter_at(&self, i: i64) -> Option<Letter> {
        let j = i + self.left_len as i64;
        (0..self.letters.len() as i64).contains(&j).then(|| self.letters[j as usize])
    }
}

/// Image lengths `|σ_[0,n)(b)|` for `n ≤ depth`, with access to single
/// letters of the images without expanding them.
struct Tower {
    images: Vec<Vec<Word>>,
    lengths: Vec<Vec<u128>>,
}

impl Tower {
    fn new(d: &DirectiveSequence, depth: usize) -> Result<Self> {
        let mut images = Vec::with_capacity(depth);
        let mut lengths = vec![vec![1u128; d.alphabet(0)?.size()]];
        for n in 0..depth {
            let m = d.level_morphism(n)?;
            let prev = &lengths[n];
            let next = m
                .images()
                .iter()
                .map(|w| w.iter().try_fold(0u128, |s, &c| s.checked_add(prev[c as usize])))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::input("image lengths overflow"))?;
            lengths.push(next);
            images.push(m.images().to_vec());
        }
        Ok(Tower { images, lengths })
    }

    fn len(&self, n: usize, b: Letter) -> u128 {
        self.lengths[n][b as usize]
    }

    /// `σ_[0,n)(b)[idx]`.
    fn letter(&self, mut n: usize, mut b: Letter, mut idx: u128) -> Letter {
        while n > 0 {
            for &c in &self.images[n - 1][b as usize] {
                let l = self.len(n - 1, c);
                if idx < l {
                    b = c;
                    break;
                }
                idx -= l;
            }
            n -= 1;
        }
        b
    }

    /// `|q_depth|`, the length of `σ_[0,d-1)(p_{d-1}) ⋯ σ_0(p_1) p_0`.
    fn left_len(&self, p: &PathPrefix) -> u128 {
        (1..=p.depth)
            .map(|n| {
                let img = &self.images[n - 1][p.vertex(n) as usize];
                img[..p.edge_orders[n - 1]].iter().map(|&c| self.len(n - 1, c)).sum::<u128>()
            })
            .sum()
    }

    /// The path of depth `n` through position `idx` of `σ_[0,n)(top)`.
    fn path_through(&self, n: usize, top: Letter, mut idx: u128) -> PathPrefix {
        let mut vertices = vec![0; n];
        let mut orders = vec![0; n];
        let mut b = top;
        for level in (1..=n).rev() {
            vertices[level - 1] = b;
            for (k, &c) in self.images[level - 1][b as usize].iter().enumerate() {
                let l = self.len(level - 1, c);
                if idx < l {
                    orders[level - 1] = k;
                    b = c;
                    break;
                }
                idx -= l;
            }
        }
        PathPrefix { depth: n, edge_orders: orders, vertices }
    }
}

/// Largest window [`psi_window`] materializes.
pub const MAX_WINDOW: u128 = 1 << 24;

/// The window `σ_[0,d)(a_d)` of the point coded by `p`, with the origin after
/// the prefix `q_d`.
pub fn psi_window(d: &DirectiveSequence, p: &PathPrefix) -> Result<WindowOfPoint> {
    let b = build_diagram(d, p.depth + 1)?;
    p.validate(&b)?;
    let t = Tower::new(d, p.depth)?;
    let top = p.vertex(p.depth);
    let n = t.len(p.depth, top);
    if n > MAX_WINDOW {
        return Err(Error::input(format!("the window has {n} letters, more than {MAX_WINDOW}")));
    }
    let letters = d.composition(0, p.depth)?.image(top).to_vec();
    WindowOfPoint::new(t.left_len(p) as usize, letters)
}

/// Addresses found at one level: every path of that depth consistent with
/// the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelAddresses {
    pub level: usize,
    pub paths: Vec<PathPrefix>,
}

/// For each level `1 ≤ n ≤ depth`, the pairs `(a, k)` with the origin at
/// position `k` of `σ_[0,n)(a)` in some parse of the window by `σ_[0,n)` in
/// the level-`n` language, returned as paths.
pub fn address_of(
    d: &DirectiveSequence,
    window: &WindowOfPoint,
    depth: usize,
    lang_horizon: usize,
) -> Result<Vec<LevelAddresses>> {
    if window.letters.is_empty() || window.right_len == 0 {
        return Err(Error::input("the window must contain the origin"));
    }
    let t = Tower::new(d, depth)?;
    let mut out = Vec::new();
    for n in 1..=depth {
        let m = d.composition(0, n)?;
        let lang = prune_to_biextendable(&sadic_factors(d, n, lang_horizon)?);
        let parses = window_parses(&window.letters, &m, Some(&lang)).map_err(|e| e.at_level(n))?;
        let origin = window.left_len as i64;
        let mut paths: Vec<PathPrefix> = Vec::new();
        for ps in parses {
            let mut start = -(ps.offset as i64);
            for &a in &ps.preimage {
                let end = start + m.image_len(a) as i64;
                if start <= origin && origin < end {
                    let path = t.path_through(n, a, (origin - start) as u128);
                    if !paths.contains(&path) {
                        paths.push(path);
                    }
                    break;
                }
                start = end;
            }
        }
        paths.sort_by(|x, y| (&x.vertices, &x.edge_orders).cmp(&(&y.vertices, &y.edge_orders)));
        out.push(LevelAddresses { level: n, paths });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivarianceReport {
    pub depth: usize,
    pub steps_requested: usize,
    pub steps_verified: usize,
    /// Step at which the truncation ran out of successors.
    pub maximal_at: Option<usize>,
    /// First step whose window disagrees with the shifted previous one.
    pub first_failure: Option<usize>,
    /// Letters compared one by one over all steps.
    pub letters_compared: u64,
    pub min_overlap: u128,
    pub max_overlap: u128,
}

impl EquivarianceReport {
    pub fn verified(&self) -> bool {
        self.first_failure.is_none() && self.maximal_at.is_none() && self.steps_verified == self.steps_requested
    }
}

/// Letters compared explicitly on each side of the origin at every step.
pub const COMPARE_RADIUS: u128 = 64;

/// Checks that the window of each successor is the previous window shifted by
/// one, on their overlap.
///
/// Consecutive windows are slices of the same word `σ_[0,d)(a_d)`, so when the
/// origin moves by exactly one they agree on the whole overlap. Letters within
/// [`COMPARE_RADIUS`] of the origin are also compared one by one, and the
/// whole overlap is compared whenever the top vertex changes or the origin
/// does not move by one.
pub fn equivariance_check(d: &DirectiveSequence, p: &PathPrefix, steps: usize) -> Result<EquivarianceReport> {
    let b = build_diagram(d, p.depth + 1)?;
    p.validate(&b)?;
    let t = Tower::new(d, p.depth)?;
    let depth = p.depth;
    let mut report = EquivarianceReport {
        depth,
        steps_requested: steps,
        steps_verified: 0,
        maximal_at: None,
        first_failure: None,
        letters_compared: 0,
        min_overlap: u128::MAX,
        max_overlap: 0,
    };
    let mut cur = p.clone();
    for step in 1..=steps {
        let next = match vershik_successor(&b, &cur)? {
            Successor::Path(q) => q,
            Successor::MaximalAtDepth => {
                report.maximal_at = Some(step);
                break;
            }
        };
        let (top, ntop) = (cur.vertex(depth), next.vertex(depth));
        let (l, nl) = (t.left_len(&cur) as i128, t.left_len(&next) as i128);
        let (len, nlen) = (t.len(depth, top) as i128, t.len(depth, ntop) as i128);
        // y'_i = y_{i+1}: next covers [-nl, nlen-nl), cur shifted covers [-l-1, len-l-1).
        let lo = (-nl).max(-l - 1);
        let hi = (nlen - nl).min(len - l - 1);
        let overlap = (hi - lo).max(0) as u128;
        report.min_overlap = report.min_overlap.min(overlap);
        report.max_overlap = report.max_overlap.max(overlap);
        let structural = top == ntop && nl == l + 1;
        let (clo, chi) = if structural {
            (lo.max(-(COMPARE_RADIUS as i128)), hi.min(COMPARE_RADIUS as i128))
        } else {
            (lo, hi)
        };
        let mut ok = true;
        for i in clo..chi {
            let a = t.letter(depth, ntop, (i + nl) as u128);
            let c = t.letter(depth, top, (i + 1 + l) as u128);
            report.letters_compared += 1;
            if a != c {
                ok = false;
                break;
            }
        }
        if !ok {
            report.first_failure = Some(step);
            break;
        }
        report.steps_verified = step;
        cur = next;
    }
    if report.min_overlap == u128::MAX {
        report.min_overlap = 0;
    }
    Ok(report)
}
