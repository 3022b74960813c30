//! The input document: a JSON object tagged by `"mode"`, with rationals as
//! strings `"p/q"` (plain integers are accepted too).

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{parse_rat, Rat};
use crate::model::{dual_group, subgroup_closure, GroupElement, Potential, SymmetryGroup};
use crate::unified::ToricMirrorData;

/// A rational read from `"p/q"` or an integer.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(try_from = "RawRat")]
pub struct RatValue(pub Rat);

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRat {
    Int(i64),
    Text(String),
}

impl TryFrom<RawRat> for RatValue {
    type Error = String;

    fn try_from(raw: RawRat) -> std::result::Result<Self, String> {
        match raw {
            RawRat::Int(n) => Ok(RatValue(Rat::from_integer(n.into()))),
            RawRat::Text(s) => parse_rat(&s)
                .map(RatValue)
                .ok_or_else(|| format!("`{s}` is not a rational \"p/q\"")),
        }
    }
}

fn rats(values: Option<Vec<RatValue>>) -> Option<Vec<Rat>> {
    values.map(|v| v.into_iter().map(|r| r.0).collect())
}

/// Which computation produces the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    /// Lattice complexes.
    Complex,
    /// Orbifolded Milnor rings.
    #[serde(alias = "orbifold-only")]
    Orbifold,
    /// Both, with the cross-check.
    Both,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub window_margin: Option<i64>,
    pub degree_bound: Option<RatValue>,
    pub engine: Option<Engine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInput {
    pub generators: Vec<Vec<RatValue>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientsInput {
    pub f: Option<Vec<RatValue>>,
    pub g: Option<Vec<RatValue>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BhInput {
    pub mode: String,
    pub matrix: Vec<Vec<i64>>,
    pub group: Option<GroupInput>,
    #[serde(default)]
    pub coefficients: CoefficientsInput,
    #[serde(default)]
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnifiedInput {
    pub mode: String,
    pub rank: usize,
    #[serde(rename = "Delta")]
    pub delta: Vec<Vec<i64>>,
    #[serde(rename = "Delta_dual")]
    pub delta_dual: Vec<Vec<i64>>,
    pub deg: Vec<i64>,
    pub deg_dual: Vec<i64>,
    pub f: Option<Vec<RatValue>>,
    pub g: Option<Vec<RatValue>>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSpec {
    Bh(BhInput),
    Unified(UnifiedInput),
}

impl InputSpec {
    /// Parses a document; serde reports the line, column and field of any
    /// schema violation.
    pub fn parse(text: &str) -> Result<InputSpec> {
        #[derive(Deserialize)]
        struct Mode {
            mode: String,
        }
        let err = |e: serde_json::Error| Error::Input(e.to_string());
        let mode: Mode = serde_json::from_str(text).map_err(err)?;
        match mode.mode.as_str() {
            "bh" => serde_json::from_str(text).map(InputSpec::Bh).map_err(err),
            "unified" => serde_json::from_str(text)
                .map(InputSpec::Unified)
                .map_err(err),
            other => Err(Error::Input(format!(
                "mode `{other}` is neither \"bh\" nor \"unified\""
            ))),
        }
    }

    pub fn options(&self) -> &Options {
        match self {
            InputSpec::Bh(b) => &b.options,
            InputSpec::Unified(u) => &u.options,
        }
    }

    /// Validated data: every downstream invariant is checked here.
    pub fn resolve(&self) -> Result<Datum> {
        match self {
            InputSpec::Bh(b) => b.resolve().map(Datum::Bh),
            InputSpec::Unified(u) => u.resolve().map(Datum::Unified),
        }
    }
}

impl BhInput {
    fn resolve(&self) -> Result<BhDatum> {
        let f = rats(self.coefficients.f.clone());
        let g = rats(self.coefficients.g.clone());
        let potential = Potential::new(self.matrix.clone(), f)?;
        let mut notices = Vec::new();
        let group = match &self.group {
            None => {
                notices.push("no group given; G defaults to the trivial group".to_string());
                SymmetryGroup::trivial(potential.dim())
            }
            Some(gi) => {
                let gens: Vec<GroupElement> = gi
                    .generators
                    .iter()
                    .map(|h| GroupElement::new(h.iter().map(|x| x.0.clone()).collect()))
                    .collect();
                subgroup_closure(&potential, &gens)?
            }
        };
        let transpose = potential.transpose()?;
        let dual_potential = match g {
            Some(g) => transpose.with_coefficients(g)?,
            None => transpose,
        };
        Ok(BhDatum {
            potential,
            group,
            dual_potential,
            notices,
        })
    }
}

impl UnifiedInput {
    fn resolve(&self) -> Result<ToricMirrorData> {
        ToricMirrorData::new(
            self.rank,
            self.delta.clone(),
            self.delta_dual.clone(),
            self.deg.clone(),
            self.deg_dual.clone(),
            rats(self.f.clone()),
            rats(self.g.clone()),
        )
    }
}

/// A validated Berglund-Hübsch pair `(W, G)` together with `W^T`, which
/// carries the coefficients `g`.
#[derive(Clone, Debug)]
pub struct BhDatum {
    pub potential: Potential,
    pub group: SymmetryGroup,
    pub dual_potential: Potential,
    pub notices: Vec<String>,
}

impl BhDatum {
    pub fn new(potential: Potential, group: SymmetryGroup) -> Result<BhDatum> {
        let dual_potential = potential.transpose()?;
        Ok(BhDatum {
            potential,
            group,
            dual_potential,
            notices: Vec::new(),
        })
    }

    /// `(W^T, G^v)` with the coefficient roles exchanged.
    pub fn dual(&self) -> Result<BhDatum> {
        let group = dual_group(&self.potential, &self.group)?;
        let dual_potential = self.potential.clone();
        Ok(BhDatum {
            potential: self.dual_potential.clone(),
            group,
            dual_potential,
            notices: Vec::new(),
        })
    }

    /// Lattice form, requiring Calabi-Yau type.
    pub fn toric(&self) -> Result<ToricMirrorData> {
        ToricMirrorData::from_bh(
            &self.potential,
            &self.group,
            Some(self.dual_potential.coefficients().to_vec()),
        )
    }

    /// The input document describing this datum.
    pub fn to_input_json(&self) -> Value {
        let gens: Vec<Vec<String>> = self
            .group
            .generators()
            .iter()
            .map(|g| g.h().iter().map(ToString::to_string).collect())
            .collect();
        let coeffs = |p: &Potential| {
            p.coefficients()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        };
        json!({
            "mode": "bh",
            "matrix": self.potential.exponents(),
            "group": {"generators": gens},
            "coefficients": {"f": coeffs(&self.potential), "g": coeffs(&self.dual_potential)},
        })
    }
}

#[derive(Clone, Debug)]
pub enum Datum {
    Bh(BhDatum),
    Unified(ToricMirrorData),
}
