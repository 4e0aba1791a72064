//! Recognizability of morphisms and S-adic directive sequences.

pub mod bratteli;
pub mod directive;
pub mod error;
pub mod format;
pub mod injectivity;
pub mod language;
pub mod matrix;
pub mod morphism;
pub mod point;
pub mod presets;
pub mod recognizer;
pub mod sadic;

pub use error::{Error, Result};
pub use matrix::IntegerMatrix;
pub use morphism::{Alphabet, Letter, Morphism, Permutativity, Primitivity, Side, Word};
pub use directive::DirectiveSequence;
pub use language::FactorSet;
pub use point::EventuallyPeriodicPoint;
