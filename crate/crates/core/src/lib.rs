pub mod arith;
pub mod cache;
pub mod cli;
pub mod error;
pub mod family;
pub mod field;
pub mod gauss;
pub mod ideals;
pub mod lfunc;
pub mod moments;
pub mod primes;
pub mod special;
pub mod symbols;

pub use error::{Error, Result};
pub use family::Family;
pub use field::{FieldContext, FieldTag, FracQuad, QuadInt, ResidueSystem};
pub use gauss::ComplexVal;
pub use primes::{PrimeElement, SplitType};
pub use symbols::{residue_symbol, DirichletChar, RootOfUnity};
