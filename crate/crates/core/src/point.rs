use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::morphism::{Alphabet, Letter, Morphism, Word};

/// A bi-infinite word `…LLL·C·RRR…` whose center `C` starts at index
/// `center_start`.
///
/// Values are always canonical: both periods are primitive, the right periodic
/// part is extended as far left as possible, then the left one as far right as
/// possible, and a periodic point is stored as `(P, ε, P)` with
/// `center_start = 0`. Equal points therefore have equal fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EventuallyPeriodicPoint {
    left_period: Word,
    center: Word,
    right_period: Word,
    center_start: i64,
}

#[derive(Deserialize)]
struct PointRepr {
    left_period: Word,
    center: Word,
    right_period: Word,
    #[serde(default)]
    center_start: i64,
}

impl<'de> Deserialize<'de> for EventuallyPeriodicPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PointRepr::deserialize(d)?;
        EventuallyPeriodicPoint::with_center_start(r.left_period, r.center, r.right_period, r.center_start)
            .map_err(serde::de::Error::custom)
    }
}

fn primitive_root(w: &[Letter]) -> Word {
    let n = w.len();
    for p in 1..n {
        if n.is_multiple_of(p) && (p..n).all(|i| w[i] == w[i - p]) {
            return w[..p].to_vec();
        }
    }
    w.to_vec()
}

impl EventuallyPeriodicPoint {
    /// `…LLL·C·RRR…` with index 0 at the first letter of `center`, or of the
    /// right period when `center` is empty.
    pub fn new(left_period: Word, center: Word, right_period: Word) -> Result<Self> {
        Self::with_center_start(left_period, center, right_period, 0)
    }

    pub fn with_center_start(left_period: Word, center: Word, right_period: Word, center_start: i64) -> Result<Self> {
        if left_period.is_empty() || right_period.is_empty() {
            return Err(Error::input("periods of an eventually periodic point must be nonempty"));
        }
        Ok(Self::canonical(left_period, center, right_period, center_start))
    }

    /// The periodic point with `y_i = period[i mod |period|]`.
    pub fn periodic(period: Word) -> Result<Self> {
        Self::new(period.clone(), vec![], period)
    }

    fn raw_at(l: &[Letter], c: &[Letter], r: &[Letter], s: i64, i: i64) -> Letter {
        let off = i - s;
        if off < 0 {
            let back = (-off - 1) as usize % l.len();
            l[l.len() - 1 - back]
        } else if (off as usize) < c.len() {
            c[off as usize]
        } else {
            r[(off as usize - c.len()) % r.len()]
        }
    }

    fn canonical(l: Word, c: Word, r: Word, s: i64) -> Self {
        let l = primitive_root(&l);
        let r = primitive_root(&r);
        let at = |i: i64| Self::raw_at(&l, &c, &r, s, i);
        let (pl, pr) = (l.len() as i64, r.len() as i64);
        let end = s + c.len() as i64;

        // Smallest j such that y[j..] has period |R|.
        let mut j = end;
        let floor = s - pl - pr;
        while j > floor && at(j - 1) == at(j - 1 + pr) {
            j -= 1;
        }
        if j == floor {
            // The left tail agrees with the right period for |L| + |R| letters,
            // so the point is periodic with period |R|.
            let period: Word = (0..pr).map(&at).collect();
            return EventuallyPeriodicPoint { left_period: period.clone(), center: vec![], right_period: period, center_start: 0 };
        }
        // Largest i <= j such that y[..i] has period |L|.
        let mut i = s.min(j);
        while i < j && at(i) == at(i - pl) {
            i += 1;
        }
        EventuallyPeriodicPoint {
            left_period: (i - pl..i).map(&at).collect(),
            center: (i..j).map(&at).collect(),
            right_period: (j..j + pr).map(at).collect(),
            center_start: i,
        }
    }

    pub fn left_period(&self) -> &[Letter] {
        &self.left_period
    }

    pub fn center(&self) -> &[Letter] {
        &self.center
    }

    pub fn right_period(&self) -> &[Letter] {
        &self.right_period
    }

    /// Index of the first letter of the center.
    pub fn center_start(&self) -> i64 {
        self.center_start
    }

    /// Index where the right periodic part begins.
    pub fn right_start(&self) -> i64 {
        self.center_start + self.center.len() as i64
    }

    pub fn is_periodic(&self) -> bool {
        self.center.is_empty() && self.left_period == self.right_period && self.center_start == 0
    }

    pub fn letter_at(&self, i: i64) -> Letter {
        Self::raw_at(&self.left_period, &self.center, &self.right_period, self.center_start, i)
    }

    /// `y[from, to)`.
    pub fn window(&self, from: i64, to: i64) -> Word {
        (from..to).map(|i| self.letter_at(i)).collect()
    }

    /// `T^k y`, that is `(T^k y)_i = y_{i+k}`.
    pub fn shift(&self, k: i64) -> Self {
        Self::canonical(self.left_period.clone(), self.center.clone(), self.right_period.clone(), self.center_start - k)
    }

    /// The point read right to left: `y'_i = y_{-1-i}`.
    pub fn mirror(&self) -> Self {
        let rev = |w: &[Letter]| w.iter().rev().copied().collect::<Word>();
        Self::canonical(
            rev(&self.right_period),
            rev(&self.center),
            rev(&self.left_period),
            -self.right_start(),
        )
    }

    /// Some `k` with `T^k self == other`.
    pub fn shift_to(&self, other: &Self) -> Option<i64> {
        if self.is_periodic() != other.is_periodic() {
            return None;
        }
        if self.is_periodic() {
            let p = self.right_period.len();
            if other.right_period.len() != p {
                return None;
            }
            return (0..p as i64).find(|&k| self.shift(k) == *other);
        }
        let k = self.center_start - other.center_start;
        (self.shift(k) == *other).then_some(k)
    }

    pub fn is_shift_equivalent(&self, other: &Self) -> bool {
        self.shift_to(other).is_some()
    }

    pub fn check_alphabet(&self, a: &Alphabet) -> Result<()> {
        a.check_word(&self.left_period)?;
        a.check_word(&self.center)?;
        a.check_word(&self.right_period)
    }

    pub fn format(&self, a: &Alphabet) -> String {
        format!(
            "({})^ω [{}]@{} ({})^ω",
            a.format_word(&self.left_period),
            a.format_word(&self.center),
            self.center_start,
            a.format_word(&self.right_period)
        )
    }
}

impl fmt::Display for EventuallyPeriodicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = |v: &[Letter]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({})^ω [{}]@{} ({})^ω", w(&self.left_period), w(&self.center), self.center_start, w(&self.right_period))
    }
}

/// `|m(x[0,i))|` for `i ≥ 0` and `-|m(x[i,0))|` for `i < 0`.
pub fn image_position(m: &Morphism, x: &EventuallyPeriodicPoint, i: i64) -> i64 {
    if i >= 0 {
        (0..i).map(|t| m.image_len(x.letter_at(t)) as i64).sum()
    } else {
        -(i..0).map(|t| m.image_len(x.letter_at(t)) as i64).sum::<i64>()
    }
}

/// `m(x)`, with index 0 at the first letter of `m(x_0)`.
pub fn apply_to_point(m: &Morphism, x: &EventuallyPeriodicPoint) -> EventuallyPeriodicPoint {
    EventuallyPeriodicPoint::canonical(
        m.apply_unchecked(&x.left_period),
        m.apply_unchecked(&x.center),
        m.apply_unchecked(&x.right_period),
        image_position(m, x, x.center_start),
    )
}
