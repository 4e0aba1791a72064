//! Named examples.

use crate::directive::DirectiveSequence;
use crate::error::{Error, Result};
use crate::morphism::{conjugate_by_coding, Alphabet, Morphism};
use crate::sadic::iterated_coding_sequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    Morphism(Morphism),
    Sequence(DirectiveSequence),
}

pub const PRESET_NAMES: &[&str] = &[
    "fibonacci",
    "thue-morse",
    "remark22",
    "example42",
    "example42-theta",
    "example42-sigma0",
    "example42-theta1",
    "example43",
    "arnoux-rauzy",
    "arnoux-rauzy-2",
    "arnoux-rauzy-3",
    "arnoux-rauzy-123",
    "figure2",
    "mosse-nonunilateral",
    "identity",
];

impl Preset {
    /// The morphism itself; a sequence only when it has a single morphism.
    pub fn morphism(&self) -> Result<Morphism> {
        match self {
            Preset::Morphism(m) => Ok(m.clone()),
            Preset::Sequence(d) => match (d.prefix(), d.cycle()) {
                ([], Some([m])) | ([m], None) => Ok(m.clone()),
                _ => Err(Error::input("this preset is a directive sequence, not a single morphism")),
            },
        }
    }

    /// The sequence itself, or the stationary sequence of a substitution.
    pub fn sequence(&self) -> Result<DirectiveSequence> {
        match self {
            Preset::Sequence(d) => Ok(d.clone()),
            Preset::Morphism(m) if m.is_substitution() => DirectiveSequence::stationary(m.clone()),
            Preset::Morphism(m) => DirectiveSequence::new(vec![m.clone()], None),
        }
    }
}

pub fn fibonacci() -> Morphism {
    Morphism::from_digits(&["01", "0"]).expect("valid")
}

pub fn thue_morse() -> Morphism {
    Morphism::from_digits(&["01", "10"]).expect("valid")
}

/// `0 → 0010, 1 → 11`.
pub fn remark22() -> Morphism {
    Morphism::from_digits(&["0010", "11"]).expect("valid")
}

/// `θ: 0 → 00100, 1 → 00000`.
pub fn example42_theta() -> Morphism {
    Morphism::from_digits(&["00100", "00000"]).expect("valid")
}

/// The coding of length-two words `A → 00, B → 01, C → 10`.
pub fn example42_sigma0() -> Morphism {
    Morphism::from_names("ABC", "01", &["00", "01", "10"]).expect("valid")
}

pub fn example42_theta1() -> Morphism {
    conjugate_by_coding(&example42_theta(), &example42_sigma0()).expect("valid")
}

/// `σ_0` followed by the cycle `θ_1`.
pub fn example42() -> DirectiveSequence {
    DirectiveSequence::new(vec![example42_sigma0()], Some(vec![example42_theta1()])).expect("valid")
}

/// Two rounds of the two-letter coding of `θ`, then the resulting cycle.
pub fn example43() -> DirectiveSequence {
    iterated_coding_sequence(&example42_theta(), 2).expect("valid")
}

/// `μ_i: i → i, j → j i` on the letters `1 2 3`.
pub fn arnoux_rauzy(i: u32) -> Morphism {
    let names = ["1", "2", "3"];
    let a = Alphabet::named(names).expect("valid");
    let images = (0..3u32).map(|j| if j + 1 == i { vec![j] } else { vec![j, i - 1] }).collect();
    Morphism::new(a.clone(), a, images).expect("valid")
}

pub fn arnoux_rauzy_123() -> DirectiveSequence {
    DirectiveSequence::new(vec![], Some(vec![arnoux_rauzy(1), arnoux_rauzy(2), arnoux_rauzy(3)])).expect("valid")
}

/// A morphism from five letters onto three whose incidence matrix has rows
/// `1 3 1 1 0`, `0 1 1 1 1`, `0 0 0 1 4`.
pub fn figure2() -> DirectiveSequence {
    let images = vec![vec![0], vec![0, 0, 0, 1], vec![0, 1], vec![0, 1, 2], vec![1, 2, 2, 2, 2]];
    let m = Morphism::new(
        Alphabet::named(["v0", "v1", "v2", "v3", "v4"]).expect("valid"),
        Alphabet::named(["a", "b", "c"]).expect("valid"),
        images,
    )
    .expect("valid");
    DirectiveSequence::new(vec![m], None).expect("valid")
}

/// `0 → 010, 1 → 10`.
pub fn mosse_nonunilateral() -> Morphism {
    Morphism::from_digits(&["010", "10"]).expect("valid")
}

pub fn preset(name: &str) -> Result<Preset> {
    Ok(match name {
        "fibonacci" => Preset::Morphism(fibonacci()),
        "thue-morse" => Preset::Morphism(thue_morse()),
        "remark22" => Preset::Morphism(remark22()),
        "example42" => Preset::Sequence(example42()),
        "example42-theta" => Preset::Morphism(example42_theta()),
        "example42-sigma0" => Preset::Morphism(example42_sigma0()),
        "example42-theta1" => Preset::Morphism(example42_theta1()),
        "example43" => Preset::Sequence(example43()),
        "arnoux-rauzy" => Preset::Morphism(arnoux_rauzy(1)),
        "arnoux-rauzy-2" => Preset::Morphism(arnoux_rauzy(2)),
        "arnoux-rauzy-3" => Preset::Morphism(arnoux_rauzy(3)),
        "arnoux-rauzy-123" => Preset::Sequence(arnoux_rauzy_123()),
        "figure2" => Preset::Sequence(figure2()),
        "mosse-nonunilateral" => Preset::Morphism(mosse_nonunilateral()),
        "identity" => Preset::Morphism(Morphism::identity(Alphabet::new(2).expect("valid"))),
        _ => return Err(Error::input(format!("unknown preset {name:?}; known: {}", PRESET_NAMES.join(", ")))),
    })
}
