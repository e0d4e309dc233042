use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::generic_module::GenericModule;
use crate::singular_module::SingularModule;
use crate::tableaux::{SingularFrame, Tableau};

pub const DEFAULT_SEED: u64 = 20240607;

/// Run configuration, read from TOML.
///
/// ```toml
/// n = 3
/// frame = [2, 1, 2]          # (k, i, j); omit for a generic base
/// vbar = "(0,2/5,9/7|1/3,1/3|1/11)"
/// window = 2
/// suites = ["commutators", "gamma"]
/// seed = 7
/// output_dir = "out"
/// ```
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub n: usize,
    #[serde(default)]
    pub frame: Option<[usize; 3]>,
    pub vbar: String,
    #[serde(default = "default_window")]
    pub window: i64,
    #[serde(default)]
    pub suites: Vec<String>,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
}

fn default_window() -> i64 {
    2
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}

/// The module a configuration describes.
pub enum Target {
    Generic(GenericModule),
    Singular(SingularModule),
}

impl Target {
    pub fn describe(&self) -> String {
        match self {
            Target::Generic(m) => format!("generic n={} base={}", m.base().n(), m.base()),
            Target::Singular(m) => m.frame().describe(),
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn validate(&self) -> Result<()> {
        if self.window < 0 {
            return Err(Error::Config(format!("window must be >= 0, got {}", self.window)));
        }
        let base = self.base()?;
        if base.n() != self.n {
            return Err(Error::Config(format!("n = {} but vbar has {} rows", self.n, base.n())));
        }
        self.target().map(|_| ())
    }

    pub fn base(&self) -> Result<Tableau> {
        self.vbar
            .parse()
            .map_err(|e| Error::Config(format!("vbar {:?}: {e}", self.vbar)))
    }

    pub fn target(&self) -> Result<Target> {
        let base = self.base()?;
        match self.frame {
            None => GenericModule::new(base)
                .map(Target::Generic)
                .map_err(|e| Error::Config(e.to_string())),
            Some([k, i, j]) => SingularFrame::new(k, i, j, base)
                .map(|f| Target::Singular(SingularModule::new(f)))
                .map_err(|e| Error::Config(e.to_string())),
        }
    }
}
