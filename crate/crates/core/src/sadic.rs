//! Directive sequences: telescoping, growth, per-level recognizability, the
//! counting bounds, limit words, fixed points and return words.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

pub use crate::directive::DirectiveSequence;
use crate::error::{Error, Result};
use crate::injectivity::{certify, RecognizabilityCertificate, Verdict};
use crate::language::{prune_to_biextendable, sadic_factors, substitutive_factors, FactorSet};
use crate::morphism::{conjugate_by_coding, Alphabet, Letter, Morphism, Word};
use crate::point::{apply_to_point, EventuallyPeriodicPoint};
use crate::recognizer::{mosse_search, point_parses, CenteredParse, MosseOutcome};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Block compositions `σ_[n_i, n_{i+1})` along `breakpoints`, continued with
/// blocks of length `stride` after the last breakpoint.
pub fn telescope(d: &DirectiveSequence, breakpoints: &[usize], stride: usize) -> Result<DirectiveSequence> {
    if breakpoints.first() != Some(&0) || breakpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::input("breakpoints must start at 0 and increase strictly"));
    }
    if stride == 0 {
        return Err(Error::input("the stride must be positive"));
    }
    let mut blocks = Vec::new();
    let limit = d.depth_limit();
    for w in breakpoints.windows(2) {
        if limit.is_some_and(|l| w[1] > l) {
            return Err(Error::input(format!("breakpoint {} is beyond the sequence", w[1])));
        }
        blocks.push(d.composition(w[0], w[1])?);
    }
    let mut start = *breakpoints.last().expect("nonempty");
    match limit {
        Some(l) => {
            while start + stride <= l {
                blocks.push(d.composition(start, start + stride)?);
                start += stride;
            }
            if blocks.is_empty() {
                return Err(Error::input("no complete block fits in the sequence"));
            }
            DirectiveSequence::new(blocks, None)
        }
        None => {
            while start < d.prefix_len() {
                blocks.push(d.composition(start, start + stride)?);
                start += stride;
            }
            let c = d.cycle_len();
            let period = c / gcd(stride, c);
            let cycle = (0..period)
                .map(|i| d.composition(start + i * stride, start + (i + 1) * stride))
                .collect::<Result<Vec<_>>>()?;
            DirectiveSequence::new(blocks, Some(cycle))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Growth {
    Growing,
    NotGrowing,
    /// No cycle: a finite prefix cannot witness a limit.
    Undetermined,
}

/// Letters `a` with `|m^n(a)|` bounded, for a substitution `m`: those that
/// cannot reach a cycle of the letter graph through a letter with a longer
/// image.
pub fn bounded_letters(m: &Morphism) -> Vec<bool> {
    let k = m.domain_size();
    // expanding[a]: a reaches a cycle containing a letter with |m(b)| ≥ 2.
    let reach = |from: usize| {
        let mut seen = vec![false; k];
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            for &b in m.image(v as Letter) {
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    stack.push(b as usize);
                }
            }
        }
        seen
    };
    let reaches: Vec<Vec<bool>> = (0..k).map(reach).collect();
    let on_growing_cycle: Vec<bool> = (0..k)
        .map(|b| reaches[b][b] && (0..k).any(|d| reaches[b][d] && reaches[d][b] && m.image_len(d as Letter) >= 2))
        .collect();
    (0..k).map(|a| !(0..k).any(|b| (a == b || reaches[a][b]) && on_growing_cycle[b])).collect()
}

/// Whether `min_a |σ_[0,n)(a)|` tends to infinity.
pub fn is_everywhere_growing(d: &DirectiveSequence) -> Growth {
    if !d.is_cyclic() {
        return Growth::Undetermined;
    }
    let rho = d.cycle_composition_at(d.prefix_len()).expect("cyclic sequence");
    if bounded_letters(&rho).iter().any(|&b| b) {
        Growth::NotGrowing
    } else {
        Growth::Growing
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelVerdict {
    RecognizableCertified,
    NotRecognizable,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelMethod {
    FullRecognizability,
    MosseSearch,
    PeriodicProbe,
}

/// A periodic point of the level language whose image has several parses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicWitness {
    pub period: Word,
    pub image: EventuallyPeriodicPoint,
    pub parses: Vec<CenteredParse>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub level: usize,
    /// For cyclic sequences, levels in the cycle stand for every level with
    /// the same position.
    pub cycle_position: Option<usize>,
    pub verdict: LevelVerdict,
    pub method: LevelMethod,
    /// The certificate covers aperiodic points; periodic points were only
    /// probed up to a bounded period.
    pub aperiodic_only: bool,
    pub certificate: RecognizabilityCertificate,
    pub mosse: Option<MosseOutcome>,
    pub periodic_witness: Option<PeriodicWitness>,
    pub lang_horizon: usize,
    pub depth_bounded: bool,
}

/// Longest period tried by the periodic probe.
pub const PROBE_PERIOD: usize = 8;

/// Periodic points `v^ℤ` with `|v| ≤ max_period` allowed by `lang` whose
/// image under `m` has at least two parses in `lang`.
pub fn periodic_probe(m: &Morphism, lang: &FactorSet, max_period: usize) -> Result<Option<PeriodicWitness>> {
    let mut seen = HashSet::new();
    for n in 1..=max_period.min(lang.max_len()) {
        for v in lang.words_of_len(n) {
            let root_len = (1..=n).find(|&p| n % p == 0 && (p..n).all(|i| v[i] == v[i - p])).unwrap_or(n);
            if root_len != n {
                continue;
            }
            let least = (0..n).map(|r| [&v[r..], &v[..r]].concat()).min().expect("nonempty");
            if !seen.insert(least) {
                continue;
            }
            let reps = lang.max_len() / n + 2;
            if !lang.admits(&v.repeat(reps)) {
                continue;
            }
            let x = EventuallyPeriodicPoint::periodic(v.clone())?;
            let y = apply_to_point(m, &x);
            if let Some(ps) = point_parses(&y, m, Some(lang))?.parses() {
                if ps.len() >= 2 {
                    return Ok(Some(PeriodicWitness { period: v, image: y, parses: ps.to_vec() }));
                }
            }
        }
    }
    Ok(None)
}

/// Recognizability of `σ_n` in the level-`n+1` shift for every level up to
/// `max_level`; a cyclic sequence is reported once per cycle position.
pub fn analyze_levels(
    d: &DirectiveSequence,
    max_level: usize,
    lang_horizon: usize,
    ell_max: usize,
) -> Result<Vec<LevelReport>> {
    let last = match d.depth_limit() {
        Some(l) => l.checked_sub(1).ok_or_else(|| Error::input("empty sequence"))?,
        None => d.prefix_len() + d.cycle_len() - 1,
    };
    (0..=max_level.min(last)).map(|n| analyze_level(d, n, lang_horizon, ell_max).map_err(|e| e.at_level(n))).collect()
}

fn analyze_level(d: &DirectiveSequence, n: usize, lang_horizon: usize, ell_max: usize) -> Result<LevelReport> {
    let m = d.level_morphism(n)?;
    let certificate = certify(m);
    let lang = prune_to_biextendable(&sadic_factors(d, n + 1, lang_horizon)?);
    let cycle_position = d.is_cyclic().then(|| n.checked_sub(d.prefix_len()).map(|r| r % d.cycle_len())).flatten();
    let mut report = LevelReport {
        level: n,
        cycle_position,
        verdict: LevelVerdict::Unknown,
        method: LevelMethod::FullRecognizability,
        aperiodic_only: false,
        certificate: certificate.clone(),
        mosse: None,
        periodic_witness: None,
        lang_horizon,
        depth_bounded: lang.is_depth_bounded(),
    };
    let probe = |report: &mut LevelReport| -> Result<bool> {
        if let Some(w) = periodic_probe(m, &lang, PROBE_PERIOD)? {
            report.verdict = LevelVerdict::NotRecognizable;
            report.method = LevelMethod::PeriodicProbe;
            report.periodic_witness = Some(w);
            return Ok(true);
        }
        Ok(false)
    };

    if certificate.verdict == Verdict::FullyRecognizableAperiodic {
        if !probe(&mut report)? {
            report.verdict = LevelVerdict::RecognizableCertified;
            report.aperiodic_only = true;
        }
        return Ok(report);
    }
    let outcome = mosse_search(m, &lang, ell_max)?;
    report.method = LevelMethod::MosseSearch;
    report.verdict = match &outcome {
        MosseOutcome::Certificate { .. } => LevelVerdict::RecognizableCertified,
        MosseOutcome::Counterexample { .. } => LevelVerdict::NotRecognizable,
        MosseOutcome::Unknown { .. } => LevelVerdict::Unknown,
    };
    report.mosse = Some(outcome);
    if report.verdict == LevelVerdict::Unknown {
        probe(&mut report)?;
    }
    Ok(report)
}

/// `(K-1)·((K-1+⌊log₂(K-1)⌋)·L+1)`, a bound on the number of levels at which
/// a sequence over at most `K` letters with `L` as in the eventual
/// recognizability statement fails to be recognizable.
pub fn eventual_bound(k: u64, l: u64) -> Result<u128> {
    if k < 2 {
        return Err(Error::input("the bound needs at least two letters"));
    }
    let k1 = (k - 1) as u128;
    let log = (k - 1).ilog2() as u128;
    (k1 + log)
        .checked_mul(l as u128)
        .and_then(|v| v.checked_add(1))
        .and_then(|v| v.checked_mul(k1))
        .ok_or_else(|| Error::input("bound overflows"))
}

/// `(K²-3K+5)·K/3`, a bound on the number of distinct languages of points.
pub fn language_count_bound(k: u64) -> Result<u128> {
    if k == 0 {
        return Err(Error::input("the alphabet must be nonempty"));
    }
    let k = k as u128;
    let v = (k * k + 5 - 3 * k) * k;
    debug_assert_eq!(v % 3, 0);
    Ok(v / 3)
}

/// A limit word, given by the pair `(x_{-1}, x_0)` it has at the cycle entry
/// level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitWord {
    pub level: usize,
    pub pair: (Letter, Letter),
    /// Period of the pair under the pair map.
    pub pair_period: usize,
    /// Whether `x_{-1} x_0` belongs to the language at that level, which
    /// puts the limit word in the shift.
    pub in_language: bool,
}

fn pair_map(m: &Morphism, (b, a): (Letter, Letter)) -> (Letter, Letter) {
    (*m.image(b).last().expect("nonempty image"), m.image(a)[0])
}

/// Limit words, one per pair on a cycle of the pair map of the cycle
/// composition. There are at most `K²`.
pub fn enumerate_limit_words(d: &DirectiveSequence) -> Result<Vec<LimitWord>> {
    if is_everywhere_growing(d) != Growth::Growing {
        return Err(Error::input("limit words need an everywhere growing sequence with a cycle"));
    }
    let p = d.prefix_len();
    let rho = d.cycle_composition_at(p)?;
    let k = rho.domain_size() as Letter;
    let lang = sadic_factors(d, p, 2)?;
    let mut out = Vec::new();
    for b in 0..k {
        for a in 0..k {
            let start = (b, a);
            let mut cur = pair_map(&rho, start);
            let mut steps = 1;
            while cur != start && steps <= (k * k) as usize {
                cur = pair_map(&rho, cur);
                steps += 1;
            }
            if cur == start {
                out.push(LimitWord { level: p, pair: start, pair_period: steps, in_language: lang.has(&[b, a]) });
            }
        }
    }
    Ok(out)
}

impl LimitWord {
    /// `y[-radius, radius)` of the limit word at level 0.
    pub fn window(&self, d: &DirectiveSequence, radius: usize) -> Result<Word> {
        let p = self.level;
        let rho = d.cycle_composition_at(p)?;
        let down = d.composition(0, p)?;
        let period = self.pair_period;
        // The pair at cycle depth q is the one mapped onto `pair` after q steps.
        let mut q = 0usize;
        loop {
            let back = (period - q % period) % period;
            let mut pair = self.pair;
            for _ in 0..back {
                pair = pair_map(&rho, pair);
            }
            let pw = rho.power(q)?;
            let left = down.apply(&pw.apply(&[pair.0])?)?;
            let right = down.apply(&pw.apply(&[pair.1])?)?;
            if left.len() >= radius && right.len() >= radius {
                let mut w = left[left.len() - radius..].to_vec();
                w.extend_from_slice(&right[..radius]);
                return Ok(w);
            }
            q += 1;
            if q > 64 * (radius + 1) {
                return Err(Error::Precondition("the limit word does not grow".into()));
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedSide {
    /// Images of the seed letter grow without bound.
    Growing,
    /// The seed letter is fixed, the side is constant.
    Constant,
}

/// A fixed point of the normalizing power `τ = m^power`, grown from the
/// seed `x_{-1} x_0 = b a` where `τ(b)` ends with `b` and `τ(a)` starts with `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub power: usize,
    pub seed: (Letter, Letter),
    pub left: SeedSide,
    pub right: SeedSide,
    /// Every factor of the window of radius [`FIXED_POINT_CHECK_RADIUS`] lies in the language.
    pub in_language: bool,
    /// Both sides constant: the point is `b^ω·a^ω`.
    pub degenerate: bool,
}

pub const FIXED_POINT_CHECK_RADIUS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointCensus {
    pub power: usize,
    pub points: Vec<FixedPoint>,
    /// Some letter has bounded growth, so fixed points interleaving bounded
    /// segments may exist beyond the seeds listed.
    pub unclassified_possible: bool,
}

/// Smallest `j ≥ 1` with `F^{2j} = F^j` for the first-letter and last-letter
/// maps of `m`.
pub fn normalizing_power(m: &Morphism) -> usize {
    let k = m.domain_size();
    let first: Vec<usize> = (0..k).map(|a| m.image(a as Letter)[0] as usize).collect();
    let last: Vec<usize> = (0..k).map(|a| *m.image(a as Letter).last().expect("nonempty") as usize).collect();
    let pow = |f: &[usize], n: usize| -> Vec<usize> {
        (0..k)
            .map(|mut a| {
                for _ in 0..n {
                    a = f[a];
                }
                a
            })
            .collect()
    };
    (1..)
        .find(|&j| pow(&first, 2 * j) == pow(&first, j) && pow(&last, 2 * j) == pow(&last, j))
        .expect("idempotent power exists")
}

pub fn enumerate_fixed_points(m: &Morphism) -> Result<FixedPointCensus> {
    if !m.is_substitution() {
        return Err(Error::input("fixed points need a substitution"));
    }
    let j = normalizing_power(m);
    let tau = m.power(j)?;
    let bounded = bounded_letters(&tau);
    let r = FIXED_POINT_CHECK_RADIUS;
    let lang = substitutive_factors(m, 2 * r)?;
    let k = m.domain_size() as Letter;
    let mut points = Vec::new();
    for b in 0..k {
        if *tau.image(b).last().expect("nonempty") != b {
            continue;
        }
        for a in 0..k {
            if tau.image(a)[0] != a {
                continue;
            }
            let side = |c: Letter| if bounded[c as usize] { SeedSide::Constant } else { SeedSide::Growing };
            let fp = FixedPoint {
                power: j,
                seed: (b, a),
                left: side(b),
                right: side(a),
                in_language: false,
                degenerate: bounded[b as usize] && bounded[a as usize],
            };
            let window = fp.window(m, r)?;
            points.push(FixedPoint { in_language: lang.admits(&window), ..fp });
        }
    }
    Ok(FixedPointCensus { power: j, points, unclassified_possible: bounded.iter().any(|&x| x) })
}

impl FixedPoint {
    /// `x[-radius, radius)`.
    pub fn window(&self, m: &Morphism, radius: usize) -> Result<Word> {
        let tau = m.power(self.power)?;
        let grow = |c: Letter, side: SeedSide, left: bool| -> Result<Word> {
            match side {
                SeedSide::Constant => Ok(vec![c; radius]),
                SeedSide::Growing => {
                    let mut w = vec![c];
                    while w.len() < radius {
                        w = tau.apply(&w)?;
                    }
                    Ok(if left { w[w.len() - radius..].to_vec() } else { w[..radius].to_vec() })
                }
            }
        };
        let mut w = grow(self.seed.0, self.left, true)?;
        w.extend(grow(self.seed.1, self.right, false)?);
        Ok(w)
    }

    /// The point itself when both sides are constant.
    pub fn as_point(&self) -> Option<EventuallyPeriodicPoint> {
        self.degenerate
            .then(|| EventuallyPeriodicPoint::new(vec![self.seed.0], vec![], vec![self.seed.1]).expect("nonempty periods"))
    }
}

/// Return words to `w`: the words `v` starting with `w` such that `v·w` is in
/// the language and contains exactly two occurrences of `w`. Sorted by length,
/// then lexicographically.
pub fn return_words(fs: &FactorSet, w: &[Letter]) -> Result<Vec<Word>> {
    if w.is_empty() || !fs.contains(w)? {
        return Err(Error::input("the word must be a nonempty member of the language"));
    }
    let occurrences = |u: &[Letter]| u.windows(w.len()).filter(|f| *f == w).count();
    let mut out = Vec::new();
    for u in fs.iter() {
        if u.len() > w.len() && u.starts_with(w) && u.ends_with(w) && occurrences(u) == 2 {
            out.push(u[..u.len() - w.len()].to_vec());
        }
    }
    let open = fs.words_of_len(fs.max_len()).into_iter().any(|u| u.starts_with(w) && occurrences(&u) == 1);
    if open {
        return Err(Error::Horizon { have: fs.max_len(), need: fs.max_len() + 1 });
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Names `A, B, …, Z, A1, B1, …`.
pub fn letter_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            let c = char::from(b'A' + (i % 26) as u8);
            if i < 26 {
                c.to_string()
            } else {
                format!("{c}{}", i / 26)
            }
        })
        .collect()
}

/// The coding morphism sending the `i`-th letter to the `i`-th return word.
pub fn derived_coding_morphism(fs: &FactorSet, w: &[Letter]) -> Result<Morphism> {
    let words = return_words(fs, w)?;
    let domain = Alphabet::named(letter_names(words.len()))?;
    Morphism::new(domain, fs.alphabet().clone(), words)
}

/// The coding of the length-two words of a language, in lexicographic order,
/// named by concatenating the names of their letters.
pub fn two_letter_coding(lang: &FactorSet) -> Result<Morphism> {
    let words = lang.words_of_len(2);
    if words.is_empty() {
        return Err(Error::input("the language has no words of length two"));
    }
    let a = lang.alphabet();
    let names: Vec<String> = words.iter().map(|w| format!("{}{}", a.name(w[0]), a.name(w[1]))).collect();
    let domain = Alphabet::named(names).or_else(|_| Alphabet::new(words.len()))?;
    Morphism::new(domain, a.clone(), words)
}

/// The construction iterating the two-letter coding: `θ_0 = theta`,
/// `σ_n` codes the length-two words of `θ_n`, and `θ_{n+1}` is the
/// substitution with `σ_n ∘ θ_{n+1} = θ_n ∘ σ_n`. Returns the sequence
/// `σ_0, …, σ_{stages-1}` followed by the cycle `θ_stages`.
pub fn iterated_coding_sequence(theta: &Morphism, stages: usize) -> Result<DirectiveSequence> {
    let mut prefix = Vec::new();
    let mut t = theta.clone();
    for _ in 0..stages {
        let horizon = 2;
        let lang = substitutive_factors(&t, horizon)?;
        let code = two_letter_coding(&lang)?;
        let next = conjugate_by_coding(&t, &code)?;
        prefix.push(code);
        t = next;
    }
    DirectiveSequence::new(prefix, Some(vec![t]))
}

/// Cycles of the pair map `(b, a) ↦ (last letter of m(b), first letter of m(a))`.
pub fn pair_map_cycles(m: &Morphism) -> Vec<Vec<(Letter, Letter)>> {
    let k = m.domain_size() as Letter;
    let mut seen: HashMap<(Letter, Letter), bool> = HashMap::new();
    let mut out = Vec::new();
    for b in 0..k {
        for a in 0..k {
            let start = (b, a);
            if seen.contains_key(&start) {
                continue;
            }
            let mut cur = pair_map(m, start);
            let mut cyc = vec![start];
            while cur != start && cyc.len() <= (k * k) as usize {
                cyc.push(cur);
                cur = pair_map(m, cur);
            }
            if cur == start {
                for &c in &cyc {
                    seen.insert(c, true);
                }
                out.push(cyc);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(images: &[&str]) -> Morphism {
        Morphism::from_digits(images).unwrap()
    }

    fn fib() -> Morphism {
        d(&["01", "0"])
    }

    fn example42() -> DirectiveSequence {
        let theta = d(&["00100", "00000"]);
        let s0 = Morphism::from_names("ABC", "01", &["00", "01", "10"]).unwrap();
        let t1 = conjugate_by_coding(&theta, &s0).unwrap();
        DirectiveSequence::new(vec![s0], Some(vec![t1])).unwrap()
    }

    #[test]
    fn telescoping() {
        let s = DirectiveSequence::stationary(fib()).unwrap();
        let t = telescope(&s, &[0], 2).unwrap();
        assert_eq!(t.prefix_len(), 0);
        assert_eq!(t.cycle().unwrap(), &[fib().power(2).unwrap()]);
        assert_eq!(telescope(&s, &[0], 1).unwrap(), s);

        let e = example42();
        let t = telescope(&e, &[0, 2], 1).unwrap();
        let s0t1 = Morphism::compose(&e.prefix()[0], &e.cycle().unwrap()[0]).unwrap();
        assert_eq!(t.prefix(), &[s0t1]);
        assert_eq!(t.cycle().unwrap(), e.cycle().unwrap());
        assert!(telescope(&e, &[1, 2], 1).is_err());
        assert!(telescope(&e, &[0, 0], 1).is_err());
        assert!(telescope(&e, &[0], 0).is_err());
    }

    #[test]
    fn telescoping_keeps_languages() {
        let e = example42();
        let t = telescope(&e, &[0, 2, 3], 2).unwrap();
        assert_eq!(sadic_factors(&e, 0, 8).unwrap().sorted_words(), sadic_factors(&t, 0, 8).unwrap().sorted_words());
    }

    #[test]
    fn growth() {
        assert_eq!(is_everywhere_growing(&DirectiveSequence::stationary(fib()).unwrap()), Growth::Growing);
        let id = Morphism::identity(Alphabet::new(2).unwrap());
        assert_eq!(is_everywhere_growing(&DirectiveSequence::stationary(id).unwrap()), Growth::NotGrowing);
        assert_eq!(is_everywhere_growing(&DirectiveSequence::stationary(d(&["0010", "11"])).unwrap()), Growth::Growing);
        assert_eq!(is_everywhere_growing(&DirectiveSequence::new(vec![fib()], None).unwrap()), Growth::Undetermined);
        // 2 -> 01 keeps length 2 forever.
        let m = Morphism::from_images(3, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
        assert_eq!(bounded_letters(&m), vec![true, true, true]);
        let m = Morphism::from_images(2, vec![vec![0, 1], vec![1]]).unwrap();
        assert_eq!(bounded_letters(&m), vec![false, true]);
    }

    #[test]
    fn bounds() {
        assert_eq!(eventual_bound(2, 1).unwrap(), 2);
        assert_eq!(eventual_bound(3, 5).unwrap(), 32);
        assert_eq!(eventual_bound(4, 1).unwrap(), 15);
        assert!(eventual_bound(1, 1).is_err());
        assert_eq!(language_count_bound(1).unwrap(), 1);
        assert_eq!(language_count_bound(2).unwrap(), 2);
        assert_eq!(language_count_bound(3).unwrap(), 5);
    }

    #[test]
    fn fibonacci_limit_words() {
        let s = DirectiveSequence::stationary(fib()).unwrap();
        let lw = enumerate_limit_words(&s).unwrap();
        let pairs: Vec<_> = lw.iter().map(|l| l.pair).collect();
        assert_eq!(pairs, vec![(0, 0), (1, 0)]);
        assert!(lw.iter().all(|l| l.in_language && l.pair_period == 2));
        let lang = substitutive_factors(&fib(), 20).unwrap();
        for l in &lw {
            let w = l.window(&s, 10).unwrap();
            assert_eq!(w.len(), 20);
            assert!(lang.admits(&w));
        }
    }

    #[test]
    fn fixed_points() {
        let c = enumerate_fixed_points(&fib()).unwrap();
        assert_eq!(c.power, 2);
        let seeds: Vec<_> = c.points.iter().map(|p| p.seed).collect();
        assert_eq!(seeds, vec![(0, 0), (1, 0)]);
        assert!(c.points.iter().all(|p| p.in_language && !p.degenerate));

        let r = enumerate_fixed_points(&d(&["0010", "11"])).unwrap();
        assert_eq!(r.power, 1);
        assert_eq!(r.points.len(), 4);
        let ones = r.points.iter().find(|p| p.seed == (1, 1)).unwrap();
        assert_eq!(ones.window(&d(&["0010", "11"]), 4).unwrap(), vec![1; 8]);

        let id = Morphism::identity(Alphabet::new(3).unwrap());
        let c = enumerate_fixed_points(&id).unwrap();
        assert_eq!(c.points.len(), 9);
        assert!(c.points.iter().all(|p| p.degenerate));
        assert!(c.unclassified_possible);
        let diag: Vec<_> = c.points.iter().filter(|p| p.seed.0 == p.seed.1).map(|p| p.as_point().unwrap()).collect();
        assert_eq!(diag.len(), 3);
        assert!(diag.iter().all(|p| p.is_periodic()));
    }

    #[test]
    fn fibonacci_return_words() {
        let fs = prune_to_biextendable(&substitutive_factors(&fib(), 12).unwrap());
        assert_eq!(return_words(&fs, &[0]).unwrap(), vec![vec![0], vec![0, 1]]);
        let tau = derived_coding_morphism(&fs, &[0]).unwrap();
        assert_eq!(tau.to_text().lines().filter(|l| l.contains("->")).count(), 2);
        assert_eq!(tau.images(), &[vec![0], vec![0, 1]]);
        assert_eq!(tau.domain().names().unwrap(), &["A".to_string(), "B".to_string()]);
        assert!(return_words(&fs, &[1, 1]).is_err());
        let short = substitutive_factors(&fib(), 2).unwrap();
        assert!(return_words(&short, &[0, 1]).unwrap_err().is_horizon());
    }

    #[test]
    fn iterated_coding_reproduces_example() {
        let theta = d(&["00100", "00000"]);
        let s = iterated_coding_sequence(&theta, 1).unwrap();
        assert_eq!(s.prefix()[0].images(), &[vec![0, 0], vec![0, 1], vec![1, 0]]);
        let t1 = &s.cycle().unwrap()[0];
        assert_eq!(t1.domain().format_word(&t1.images()[0]), "00 10 00 01 00");
        let two = iterated_coding_sequence(&theta, 2).unwrap();
        assert_eq!(two.prefix_len(), 2);
        assert!(two.alphabet(2).unwrap().size() > 3);
    }

    #[test]
    fn level_reports_for_example() {
        let reps = analyze_levels(&example42(), 5, 48, 6).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0].verdict, LevelVerdict::NotRecognizable);
        assert_eq!(reps[1].verdict, LevelVerdict::RecognizableCertified);
        assert_eq!(reps[1].cycle_position, Some(0));
    }
}
