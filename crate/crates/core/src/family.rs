//! The six character families: which field, which order, which class of
//! prime moduli.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldTag, QuadInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "quad-hecke-qw")]
    QuadHeckeQw,
    #[serde(rename = "quad-hecke-qi")]
    QuadHeckeQi,
    #[serde(rename = "cubic-hecke")]
    CubicHecke,
    #[serde(rename = "quartic-hecke")]
    QuarticHecke,
    #[serde(rename = "dirichlet-cubic")]
    DirichletCubic,
    #[serde(rename = "dirichlet-quartic")]
    DirichletQuartic,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::QuadHeckeQw,
        Family::QuadHeckeQi,
        Family::CubicHecke,
        Family::QuarticHecke,
        Family::DirichletCubic,
        Family::DirichletQuartic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::QuadHeckeQw => "quad-hecke-qw",
            Family::QuadHeckeQi => "quad-hecke-qi",
            Family::CubicHecke => "cubic-hecke",
            Family::QuarticHecke => "quartic-hecke",
            Family::DirichletCubic => "dirichlet-cubic",
            Family::DirichletQuartic => "dirichlet-quartic",
        }
    }

    pub fn field(self) -> FieldTag {
        match self {
            Family::QuadHeckeQw | Family::CubicHecke | Family::DirichletCubic => FieldTag::EisensteinQw,
            _ => FieldTag::GaussianQi,
        }
    }

    /// Order of the residue symbol defining the characters.
    pub fn order(self) -> u8 {
        match self {
            Family::QuadHeckeQw | Family::QuadHeckeQi => 2,
            Family::CubicHecke | Family::DirichletCubic => 3,
            Family::QuarticHecke | Family::DirichletQuartic => 4,
        }
    }

    /// Prime moduli `pi` of the family satisfy `pi == 1 (mod class_modulus)`.
    pub fn class_modulus(self) -> QuadInt {
        match self {
            Family::QuadHeckeQw => QuadInt::eisenstein(36, 0),
            Family::CubicHecke | Family::DirichletCubic => QuadInt::eisenstein(9, 0),
            _ => QuadInt::gaussian(16, 0),
        }
    }

    pub fn is_dirichlet(self) -> bool {
        matches!(self, Family::DirichletCubic | Family::DirichletQuartic)
    }

    pub fn is_quadratic(self) -> bool {
        self.order() == 2
    }

    /// Whether `pi` lies in the congruence class of the family.
    pub fn check_member(self, pi: &QuadInt) -> Result<()> {
        if pi.field != self.field() {
            return Err(Error::FieldMismatch(self.field().to_string(), pi.to_string()));
        }
        if !pi.is_one_mod(&self.class_modulus()) {
            return Err(Error::Precondition(format!(
                "{pi} is not 1 mod {} as required by {}",
                self.class_modulus(),
                self.name()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}
