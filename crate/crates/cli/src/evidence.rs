//! Evidence files: a frame plus named bodies of (possibly complex) masses.
//!
//! ```json
//! {
//!   "frame": ["A", "B"],
//!   "bodies": [
//!     { "name": "m1",
//!       "masses": [
//!         { "proposition": ["A"], "mass": { "rect": { "re": 0.8, "im": 0.0 } } },
//!         { "proposition": ["A", "B"], "mass": { "polar": { "magnitude": 0.2, "phase_radians": 0.0 } } }
//!       ] }
//!   ]
//! }
//! ```
//!
//! Propositions not listed carry zero mass. A body whose masses are all
//! real is validated as a classical assignment before being lifted.

use std::fs;
use std::path::Path;

use gds_core::{Bba, Cbba, Complex, Frame, Polar};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvidenceFile {
    pub frame: Vec<String>,
    pub bodies: Vec<BodySpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodySpec {
    pub name: String,
    pub masses: Vec<MassEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassEntry {
    pub proposition: Vec<String>,
    pub mass: MassValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum MassValue {
    Rect { re: f64, im: f64 },
    Polar { magnitude: f64, phase_radians: f64 },
}

impl MassValue {
    fn to_complex(self) -> gds_core::Result<Complex> {
        match self {
            MassValue::Rect { re, im } => Complex::try_new(re, im),
            MassValue::Polar {
                magnitude,
                phase_radians,
            } => Ok(Polar::new(magnitude, phase_radians)?.to_complex()),
        }
    }
}

/// A named, validated body of evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedBody {
    pub name: String,
    pub cbba: Cbba,
}

/// A parsed and validated evidence file.
#[derive(Debug, Clone)]
pub struct Evidence {
    pub frame: Frame,
    pub bodies: Vec<NamedBody>,
}

impl Evidence {
    pub fn load(path: impl AsRef<Path>, tolerance: f64) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse_str(&text, tolerance)
    }

    pub fn parse_str(text: &str, tolerance: f64) -> Result<Self> {
        let file: EvidenceFile = serde_json::from_str(text).map_err(|e| {
            CliError::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        Self::from_file(&file, tolerance)
    }

    pub fn from_file(file: &EvidenceFile, tolerance: f64) -> Result<Self> {
        let frame = Frame::new(file.frame.iter().cloned())
            .map_err(|e| CliError::Parse(format!("frame: {e}")))?;
        let mut bodies: Vec<NamedBody> = Vec::with_capacity(file.bodies.len());
        for (i, spec) in file.bodies.iter().enumerate() {
            if spec.name.is_empty() {
                return Err(CliError::Parse(format!("bodies[{i}]: empty name")));
            }
            if bodies.iter().any(|b| b.name == spec.name) {
                return Err(CliError::Parse(format!(
                    "bodies[{i}]: duplicate body name `{}`",
                    spec.name
                )));
            }
            let cbba = build_body(&frame, spec, i, tolerance)?;
            bodies.push(NamedBody {
                name: spec.name.clone(),
                cbba,
            });
        }
        Ok(Evidence { frame, bodies })
    }

    pub fn body(&self, name: &str) -> Result<&NamedBody> {
        self.bodies
            .iter()
            .find(|b| b.name == name)
            .ok_or_else(|| CliError::Usage(format!("no body named `{name}`")))
    }

    /// The named bodies in the requested order, or every body in file
    /// order when `names` is `None`.
    pub fn select(&self, names: Option<&[String]>) -> Result<Vec<&NamedBody>> {
        match names {
            None => Ok(self.bodies.iter().collect()),
            Some(names) => names.iter().map(|n| self.body(n)).collect(),
        }
    }
}

fn build_body(frame: &Frame, spec: &BodySpec, index: usize, tolerance: f64) -> Result<Cbba> {
    let mut entries = Vec::with_capacity(spec.masses.len());
    for (j, entry) in spec.masses.iter().enumerate() {
        let context = || format!("bodies[{index}] (`{}`).masses[{j}]", spec.name);
        let prop = frame
            .proposition(&entry.proposition)
            .map_err(|e| CliError::Parse(format!("{}.proposition: {e}", context())))?;
        let mass = entry
            .mass
            .to_complex()
            .map_err(|e| CliError::Parse(format!("{}.mass: {e}", context())))?;
        entries.push((prop, mass));
    }
    let body_err = |source| CliError::Body {
        name: spec.name.clone(),
        source,
    };
    if entries.iter().all(|(_, m)| m.is_real()) {
        let real = entries.into_iter().map(|(p, m)| (p, m.re()));
        Ok(Bba::with_tolerance(frame, real, tolerance)
            .map_err(body_err)?
            .lift())
    } else {
        Cbba::with_tolerance(frame, entries, tolerance).map_err(body_err)
    }
}

impl EvidenceFile {
    /// Serializes bodies in rectangular form at full precision.
    pub fn from_bodies<'a, I>(frame: &Frame, bodies: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, &'a Cbba)>,
    {
        EvidenceFile {
            frame: frame.labels().to_vec(),
            bodies: bodies
                .into_iter()
                .map(|(name, cbba)| BodySpec {
                    name: name.to_string(),
                    masses: cbba
                        .iter()
                        .map(|(p, m)| MassEntry {
                            proposition: p.elements().into_iter().map(str::to_string).collect(),
                            mass: MassValue::Rect {
                                re: m.re(),
                                im: m.im(),
                            },
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("evidence file serializes")
    }
}
