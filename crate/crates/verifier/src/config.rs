//! Harness configuration: defaults, a flat `key = value` file, CLI flags and
//! the `OCTOWEAK_SEED` environment fallback.

use std::str::FromStr;

use serde::Serialize;

use crate::error::HarnessError;
use crate::suites::SuiteId;

pub const SEED_ENV: &str = "OCTOWEAK_SEED";
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides every sampled suite's own draw count when set.
    pub samples_per_suite: Option<usize>,
    pub tol_exact: f64,
    pub tol_series: f64,
    pub theta_bound: f64,
    pub field_degree: u32,
    pub suites: Vec<SuiteId>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            samples_per_suite: None,
            tol_exact: 1e-12,
            tol_series: 1e-8,
            theta_bound: 2.0,
            field_degree: 2,
            suites: SuiteId::ALL.to_vec(),
        }
    }
}

/// A partial configuration; `None` means "not given at this layer".
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigLayer {
    pub seed: Option<u64>,
    pub samples_per_suite: Option<usize>,
    pub tol_exact: Option<f64>,
    pub tol_series: Option<f64>,
    pub theta_bound: Option<f64>,
    pub field_degree: Option<u32>,
    pub suites: Option<Vec<SuiteId>>,
}

impl ConfigLayer {
    /// Parses the flat key-value format. Blank lines and `#` comments are
    /// ignored; `suites` takes a comma-separated list.
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let mut layer = ConfigLayer::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .or_else(|| line.split_once(':'))
                .ok_or_else(|| HarnessError::ConfigSyntax {
                    line: n + 1,
                    reason: format!("expected `key = value`, got `{line}`"),
                })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "seed" => layer.seed = Some(parse_value(key, value)?),
                "samples" | "samples_per_suite" => {
                    layer.samples_per_suite = Some(parse_value(key, value)?)
                }
                "tol_exact" => layer.tol_exact = Some(parse_value(key, value)?),
                "tol_series" => layer.tol_series = Some(parse_value(key, value)?),
                "theta_bound" => layer.theta_bound = Some(parse_value(key, value)?),
                "field_degree" => layer.field_degree = Some(parse_value(key, value)?),
                "suites" => {
                    let ids = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(SuiteId::from_str)
                        .collect::<Result<Vec<_>, _>>()?;
                    layer.suites = Some(ids);
                }
                other => {
                    return Err(HarnessError::ConfigSyntax {
                        line: n + 1,
                        reason: format!("unknown key `{other}`"),
                    })
                }
            }
        }
        Ok(layer)
    }

    fn apply(&self, cfg: &mut SuiteConfig) {
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = self.samples_per_suite {
            cfg.samples_per_suite = Some(v);
        }
        if let Some(v) = self.tol_exact {
            cfg.tol_exact = v;
        }
        if let Some(v) = self.tol_series {
            cfg.tol_series = v;
        }
        if let Some(v) = self.theta_bound {
            cfg.theta_bound = v;
        }
        if let Some(v) = self.field_degree {
            cfg.field_degree = v;
        }
        if let Some(v) = &self.suites {
            cfg.suites = v.clone();
        }
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, HarnessError>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e: T::Err| HarnessError::InvalidConfig {
            key: key.to_owned(),
            reason: format!("`{value}`: {e}"),
        })
}

impl SuiteConfig {
    /// Layers, lowest precedence first: defaults, the env seed (only when no
    /// other layer sets a seed), the config file, the command line.
    pub fn resolve(
        file: Option<&ConfigLayer>,
        cli: &ConfigLayer,
        env_seed: Option<&str>,
    ) -> Result<Self, HarnessError> {
        let mut cfg = SuiteConfig::default();
        let seed_given = cli.seed.is_some() || file.is_some_and(|f| f.seed.is_some());
        if let (false, Some(raw)) = (seed_given, env_seed) {
            cfg.seed = parse_value(SEED_ENV, raw.trim())?;
        }
        if let Some(f) = file {
            f.apply(&mut cfg);
        }
        cli.apply(&mut cfg);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let invalid = |key: &str, reason: &str| HarnessError::InvalidConfig {
            key: key.to_owned(),
            reason: reason.to_owned(),
        };
        if self.samples_per_suite == Some(0) {
            return Err(invalid("samples_per_suite", "must be at least 1"));
        }
        for (key, v) in [
            ("tol_exact", self.tol_exact),
            ("tol_series", self.tol_series),
            ("theta_bound", self.theta_bound),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(invalid(key, "must be positive and finite"));
            }
        }
        if self.suites.is_empty() {
            return Err(invalid("suites", "no suites selected"));
        }
        Ok(())
    }

    /// Draw count for a suite whose own default is `default`.
    pub fn samples_or(&self, default: usize) -> usize {
        self.samples_per_suite.unwrap_or(default)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_file() {
        let layer = ConfigLayer::parse(
            "# harness\nseed = 7\nsamples = 12\ntol_series=1e-9\nsuites = gamma5, lemma3\n\n",
        )
        .unwrap();
        assert_eq!(layer.seed, Some(7));
        assert_eq!(layer.samples_per_suite, Some(12));
        assert_eq!(layer.tol_series, Some(1e-9));
        assert_eq!(layer.suites, Some(vec![SuiteId::Gamma5, SuiteId::Lemma3]));
    }

    #[test]
    fn rejects_unknown_keys_and_suites() {
        assert!(matches!(
            ConfigLayer::parse("colour = blue"),
            Err(HarnessError::ConfigSyntax { line: 1, .. })
        ));
        assert!(matches!(
            ConfigLayer::parse("suites = gamma5, nonexistent"),
            Err(HarnessError::UnknownSuite(s)) if s == "nonexistent"
        ));
        assert!(ConfigLayer::parse("seed = many").is_err());
    }

    #[test]
    fn precedence() {
        let file = ConfigLayer {
            seed: Some(5),
            tol_exact: Some(1e-11),
            ..Default::default()
        };
        let cli = ConfigLayer {
            tol_exact: Some(1e-13),
            ..Default::default()
        };
        let cfg = SuiteConfig::resolve(Some(&file), &cli, Some("99")).unwrap();
        assert_eq!(cfg.seed, 5);
        assert_eq!(cfg.tol_exact, 1e-13);

        let cfg = SuiteConfig::resolve(None, &ConfigLayer::default(), Some("99")).unwrap();
        assert_eq!(cfg.seed, 99);

        let cli = ConfigLayer {
            seed: Some(1),
            ..Default::default()
        };
        let cfg = SuiteConfig::resolve(None, &cli, Some("not a number")).unwrap();
        assert_eq!(cfg.seed, 1);
        assert!(SuiteConfig::resolve(None, &ConfigLayer::default(), Some("x")).is_err());
    }

    #[test]
    fn validation() {
        let cli = ConfigLayer {
            samples_per_suite: Some(0),
            ..Default::default()
        };
        assert!(SuiteConfig::resolve(None, &cli, None).is_err());
        let cli = ConfigLayer {
            tol_series: Some(-1.0),
            ..Default::default()
        };
        assert!(SuiteConfig::resolve(None, &cli, None).is_err());
    }
}
