//! Resource caps, read from the TOML file named by `QSCHRODER_CONFIG`.

use std::path::Path;

use serde::Deserialize;

use crate::error::CliError;

pub const CONFIG_ENV: &str = "QSCHRODER_CONFIG";

/// Upper bounds on the sizes a command may ask for. Anything larger exits
/// with status 3.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Highest index `n` for symbolic sequence terms.
    pub max_order: usize,
    /// Largest symbolic Hankel matrix.
    pub max_symbolic_n: usize,
    /// Largest Hankel matrix at a specialized point.
    pub max_specialized_n: usize,
    /// Longest path enumerated by `paths`.
    pub max_path_n: usize,
    /// Deepest Jacobi extraction or triangle.
    pub max_depth: usize,
    /// Most random points per identity.
    pub max_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: 40,
            max_symbolic_n: 10,
            max_specialized_n: 12,
            max_path_n: 12,
            max_depth: 12,
            max_points: 100,
        }
    }
}

impl Limits {
    /// Defaults, overridden by the file in `QSCHRODER_CONFIG` if it is set.
    pub fn load() -> Result<Self, CliError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) => Self::from_file(Path::new(&path)),
            None => Ok(Self::default()),
        }
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn check(&self, what: &str, requested: usize, limit: usize) -> Result<(), CliError> {
        if requested > limit {
            return Err(CliError::Limit(format!("{what} {requested} exceeds the configured cap {limit}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let l = Limits::parse("max_path_n = 9\n").unwrap();
        assert_eq!(l.max_path_n, 9);
        assert_eq!(l.max_order, Limits::default().max_order);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(Limits::parse("max_paths = 9\n").is_err());
    }

    #[test]
    fn cap_check() {
        let l = Limits::default();
        assert!(l.check("depth", 3, 4).is_ok());
        assert!(matches!(l.check("depth", 5, 4), Err(CliError::Limit(_))));
    }
}
