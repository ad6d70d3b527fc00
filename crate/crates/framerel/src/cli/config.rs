//! Scenario configuration: one JSON document with a top-level `kind`
//! discriminator. Unknown keys are rejected, so a typo cannot silently turn
//! into a default.

use serde::de::Error as _;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::numerics::OscillatorParams;

fn one() -> f64 {
    1.0
}

/// Physical parameters of a scenario; natural units unless overridden.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsConfig {
    #[serde(default = "one")]
    pub mass: f64,
    #[serde(default = "one")]
    pub omega: f64,
    #[serde(default = "one")]
    pub hbar: f64,
}

impl Default for ParamsConfig {
    fn default() -> Self {
        Self { mass: 1.0, omega: 1.0, hbar: 1.0 }
    }
}

impl ParamsConfig {
    pub fn to_params(&self) -> Result<OscillatorParams, String> {
        OscillatorParams::new(self.mass, self.omega, self.hbar).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QubitConfig {
    pub theta: f64,
    pub phi: f64,
    pub frame_theta: f64,
    pub frame_phi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassicalConfig {
    pub eta1: f64,
    pub eta2: f64,
    pub mass: f64,
    pub omega: f64,
    #[serde(default)]
    pub phase: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OscillatorConfig {
    pub n: u32,
    pub ell: u32,
    #[serde(default)]
    pub params: ParamsConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldConfig {
    pub occupations: Vec<u32>,
    pub offsets: Vec<u32>,
    #[serde(default)]
    pub params: ParamsConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleConfig {
    pub n: u32,
    pub count: u32,
    pub seed: u64,
    #[serde(default)]
    pub params: ParamsConfig,
}

/// A complete scenario description, dispatched on `kind`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ScenarioConfig {
    Qubit(QubitConfig),
    Classical(ClassicalConfig),
    Oscillator(OscillatorConfig),
    Field(FieldConfig),
    Sample(SampleConfig),
}

// Hand-written so unknown keys are rejected: serde's internally tagged
// representation cannot combine with deny_unknown_fields on its own.
impl<'de> Deserialize<'de> for ScenarioConfig {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let mut value = Value::deserialize(deserializer)?;
        let obj = value
            .as_object_mut()
            .ok_or_else(|| D::Error::custom("config must be a JSON object"))?;
        let kind = match obj.remove("kind") {
            Some(Value::String(s)) => s,
            Some(_) => return Err(D::Error::custom("'kind' must be a string")),
            None => return Err(D::Error::custom("missing 'kind' discriminator")),
        };
        let rest = Value::Object(std::mem::take(obj));
        let wrap = |e: serde_json::Error| D::Error::custom(format!("kind '{kind}': {e}"));
        match kind.as_str() {
            "qubit" => serde_json::from_value(rest).map(ScenarioConfig::Qubit).map_err(wrap),
            "classical" => {
                serde_json::from_value(rest).map(ScenarioConfig::Classical).map_err(wrap)
            }
            "oscillator" => {
                serde_json::from_value(rest).map(ScenarioConfig::Oscillator).map_err(wrap)
            }
            "field" => serde_json::from_value(rest).map(ScenarioConfig::Field).map_err(wrap),
            "sample" => serde_json::from_value(rest).map(ScenarioConfig::Sample).map_err(wrap),
            other => Err(D::Error::custom(format!(
                "unknown kind '{other}' (expected qubit, classical, oscillator, field or sample)"
            ))),
        }
    }
}

impl ScenarioConfig {
    pub fn kind(&self) -> &'static str {
        match self {
            ScenarioConfig::Qubit(_) => "qubit",
            ScenarioConfig::Classical(_) => "classical",
            ScenarioConfig::Oscillator(_) => "oscillator",
            ScenarioConfig::Field(_) => "field",
            ScenarioConfig::Sample(_) => "sample",
        }
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let config: ScenarioConfig =
            serde_json::from_str(text).map_err(|e| e.to_string())?;
        config.validate()?;
        Ok(config)
    }

    /// Lossless serialization; pairs with [`Self::from_json`] for exact
    /// round-trips.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialization")
    }

    /// Field-level semantic checks beyond what the shape of the JSON gives.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            ScenarioConfig::Qubit(c) => {
                for (name, v) in [
                    ("theta", c.theta),
                    ("phi", c.phi),
                    ("frame_theta", c.frame_theta),
                    ("frame_phi", c.frame_phi),
                ] {
                    if !v.is_finite() {
                        return Err(format!("{name} must be finite, got {v}"));
                    }
                }
                Ok(())
            }
            ScenarioConfig::Classical(c) => {
                if c.eta1 < 0.0 || !c.eta1.is_finite() {
                    return Err(format!("eta1 must be non-negative, got {}", c.eta1));
                }
                if c.eta2 < 0.0 || !c.eta2.is_finite() {
                    return Err(format!("eta2 must be non-negative, got {}", c.eta2));
                }
                if c.eta2 > c.eta1 {
                    return Err(format!(
                        "eta2 ({}) must not exceed eta1 ({})",
                        c.eta2, c.eta1
                    ));
                }
                if c.omega <= 0.0 || !c.omega.is_finite() {
                    return Err(format!("omega must be positive, got {}", c.omega));
                }
                if c.mass <= 0.0 || !c.mass.is_finite() {
                    return Err(format!("mass must be positive, got {}", c.mass));
                }
                if !c.phase.is_finite() {
                    return Err(format!("phase must be finite, got {}", c.phase));
                }
                Ok(())
            }
            ScenarioConfig::Oscillator(c) => c.params.to_params().map(|_| ()),
            ScenarioConfig::Field(c) => {
                if c.occupations.is_empty() {
                    return Err("occupations must contain at least one mode".to_string());
                }
                if c.occupations.len() != c.offsets.len() {
                    return Err(format!(
                        "occupations ({}) and offsets ({}) must have the same length",
                        c.occupations.len(),
                        c.offsets.len()
                    ));
                }
                c.params.to_params().map(|_| ())
            }
            ScenarioConfig::Sample(c) => {
                if c.count == 0 {
                    return Err("count must be at least 1".to_string());
                }
                c.params.to_params().map(|_| ())
            }
        }
    }
}
