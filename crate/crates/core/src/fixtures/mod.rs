//! Named fixtures: the five cubic normal forms, the pinched Veronese, the
//! three-squares complete intersection and its companions.

use crate::apolarity::{orbit_representatives, DualPair};
use crate::arith::FieldDescriptor;
use crate::diagonal::{determinantal_comparison_ideal, rees_presentation, segre_presentation};
use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::presentation::{
    pinched_veronese_generators, projection_presentation, subalgebra_presentation, Presentation,
};
use crate::resolution::SliceAlgebra;
use crate::{Error, Result};

/// A named fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Cubic normal forms: two on the first secant variety, three on the
    /// second.
    Cubic(usize),
    /// Projection of the cubic Veronese surface away from the triangle
    /// cubic.
    Pinched,
    /// Diagonal of the quotient by the three balanced monomial minors.
    HMatrix,
    /// The 3 x 3 Segre product ring.
    Segre3x3,
    /// The complete intersection x1^2, x2^2, x3^2.
    Squares,
}

impl Preset {
    pub fn parse(name: &str) -> Result<Preset> {
        let n: String = name
            .to_ascii_lowercase()
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect();
        match n.as_str() {
            "f1" | "af1" => Ok(Preset::Cubic(0)),
            "f2" | "af2" => Ok(Preset::Cubic(1)),
            "f3" | "af3" => Ok(Preset::Cubic(2)),
            "f4" | "af4" => Ok(Preset::Cubic(3)),
            "f5" | "af5" => Ok(Preset::Cubic(4)),
            "pinched" | "pinchedveronese" => Ok(Preset::Pinched),
            "hmatrix" | "remarkh" => Ok(Preset::HMatrix),
            "segre3x3" | "segre" => Ok(Preset::Segre3x3),
            "squares" => Ok(Preset::Squares),
            _ => Err(Error::Parse(format!(
                "unknown preset '{name}' (expected f1..f5, pinched, h-matrix, segre-3x3 or squares)"
            ))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Preset::Cubic(k) => format!("f{}", k + 1),
            Preset::Pinched => "pinched".to_string(),
            Preset::HMatrix => "h-matrix".to_string(),
            Preset::Segre3x3 => "segre-3x3".to_string(),
            Preset::Squares => "squares".to_string(),
        }
    }
}

/// The cubic form a preset denotes, if it denotes one.
pub fn preset_cubic(preset: Preset, field: &FieldDescriptor) -> Result<(DualPair, Polynomial)> {
    match preset {
        Preset::Cubic(k) => {
            let pair = DualPair::new(2, field.clone());
            let f = orbit_representatives(&pair)?[k].1.clone();
            Ok((pair, f))
        }
        _ => Err(Error::Parse(format!(
            "preset '{}' is not a cubic form",
            preset.name()
        ))),
    }
}

/// The quadrics a preset denotes, if it denotes a quadric sequence.
pub fn preset_quadrics(preset: Preset, field: &FieldDescriptor) -> Result<Vec<Polynomial>> {
    match preset {
        Preset::Squares => {
            let ring = Ring::standard(&["x1", "x2", "x3"], field.clone());
            Ok((0..3)
                .map(|i| ring.polynomial(vec![(ring.monomial(&[(i, 2)]), field.one())]))
                .collect())
        }
        _ => Err(Error::Parse(format!(
            "preset '{}' is not a quadric sequence",
            preset.name()
        ))),
    }
}

/// An algebra fixture, either a generated-subalgebra presentation or a
/// (1,1)-diagonal of a bigraded quotient.
pub enum PresetAlgebra {
    Presentation(Presentation),
    Diagonal(GroebnerBasis),
}

/// Builds the standard graded algebra a preset denotes.
pub fn preset_algebra(
    preset: Preset,
    field: &FieldDescriptor,
    budget: Option<usize>,
) -> Result<PresetAlgebra> {
    match preset {
        Preset::Cubic(_) => {
            let (pair, f) = preset_cubic(preset, field)?;
            Ok(PresetAlgebra::Presentation(projection_presentation(
                &pair, &f, budget,
            )?))
        }
        Preset::Pinched => {
            let pair = DualPair::new(2, field.clone());
            let gens = pinched_veronese_generators(&pair)?;
            Ok(PresetAlgebra::Presentation(subalgebra_presentation(
                &gens, budget,
            )?))
        }
        Preset::Segre3x3 => Ok(PresetAlgebra::Presentation(
            segre_presentation(field, 3, 3, budget)?.presentation,
        )),
        Preset::HMatrix => {
            let ring = Ring::bigraded(&["x1", "x2", "x3"], &["t1", "t2", "t3"], field.clone());
            let ideal = determinantal_comparison_ideal(&ring)?;
            Ok(PresetAlgebra::Diagonal(groebner_basis(
                &ideal,
                &MonomialOrder::DegRevLex,
                budget,
            )?))
        }
        Preset::Squares => {
            let gens = preset_quadrics(preset, field)?;
            let rp = rees_presentation(&gens, budget)?;
            Ok(PresetAlgebra::Diagonal(groebner_basis(
                rp.ideal(),
                &MonomialOrder::DegRevLex,
                budget,
            )?))
        }
    }
}

impl PresetAlgebra {
    pub fn slice_algebra(&self) -> Result<SliceAlgebra> {
        match self {
            PresetAlgebra::Presentation(p) => SliceAlgebra::graded_quotient(p.groebner().clone()),
            PresetAlgebra::Diagonal(gb) => SliceAlgebra::diagonal(gb.clone(), 1, 1),
        }
    }

    /// Slice dimensions in degrees 0..=through.
    pub fn dims(&self, through: i64) -> Result<Vec<usize>> {
        match self {
            PresetAlgebra::Presentation(p) => {
                (0..=through).map(|d| p.quotient_dimension(d)).collect()
            }
            PresetAlgebra::Diagonal(gb) => {
                Ok((0..=through).map(|s| gb.quotient_slice_dim(&[s, s])).collect())
            }
        }
    }
}
