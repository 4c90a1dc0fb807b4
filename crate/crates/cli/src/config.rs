//! Run configuration. Each setting comes from the first source that has it:
//! command-line flag, `JLK_*` environment variable, `key=value` config file,
//! built-in default.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use jlk_core::stanley::{Convention, Reading, TableVersion};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => bail!("unknown format {s:?} (expected json or text)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub max_weight: u32,
    pub max_weight_qt: u32,
    pub cache_dir: Option<PathBuf>,
    pub workers: usize,
    /// `None` lets each command pick its usual format.
    pub format: Option<Format>,
    pub convention: Convention,
    pub table: TableVersion,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_weight: 14,
            max_weight_qt: 8,
            cache_dir: None,
            workers: 1,
            format: None,
            convention: Convention::Minus,
            table: TableVersion::Printed,
        }
    }
}

impl RunConfig {
    pub fn reading(&self) -> Reading {
        Reading {
            convention: self.convention,
            table: self.table,
        }
    }
}

/// Raw values of the settings, before parsing.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub max_weight: Option<String>,
    pub max_weight_qt: Option<String>,
    pub cache_dir: Option<String>,
    pub workers: Option<String>,
    pub format: Option<String>,
    pub d_convention: Option<String>,
    pub table: Option<String>,
}

const KEYS: [&str; 7] = [
    "max_weight",
    "max_weight_qt",
    "cache_dir",
    "workers",
    "format",
    "d_convention",
    "table",
];

impl Overrides {
    fn slot(&mut self, key: &str) -> Option<&mut Option<String>> {
        Some(match key {
            "max_weight" => &mut self.max_weight,
            "max_weight_qt" => &mut self.max_weight_qt,
            "cache_dir" => &mut self.cache_dir,
            "workers" => &mut self.workers,
            "format" => &mut self.format,
            "d_convention" => &mut self.d_convention,
            "table" => &mut self.table,
            _ => return None,
        })
    }

    /// Fills unset values from `other`.
    fn or(mut self, other: Overrides) -> Overrides {
        let mut other = other;
        for k in KEYS {
            let theirs = other.slot(k).and_then(Option::take);
            let mine = self.slot(k).expect("known key");
            if mine.is_none() {
                *mine = theirs;
            }
        }
        self
    }

    pub fn from_env(vars: &BTreeMap<String, String>) -> Overrides {
        let mut o = Overrides::default();
        for k in KEYS {
            if let Some(v) = vars.get(&format!("JLK_{}", k.to_uppercase())) {
                *o.slot(k).expect("known key") = Some(v.clone());
            }
        }
        o
    }

    pub fn parse_file(text: &str, origin: &Path) -> Result<Overrides> {
        let mut o = Overrides::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("{}:{}: expected key=value", origin.display(), no + 1))?;
            let k = k.trim().replace('-', "_");
            let slot = o
                .slot(&k)
                .ok_or_else(|| anyhow!("{}:{}: unknown key {k:?}", origin.display(), no + 1))?;
            *slot = Some(v.trim().to_string());
        }
        Ok(o)
    }
}

/// `$JLK_CONFIG`, else `$HOME/.config/jlk/config`.
pub fn default_config_path(vars: &BTreeMap<String, String>) -> Option<PathBuf> {
    if let Some(p) = vars.get("JLK_CONFIG") {
        return Some(PathBuf::from(p));
    }
    vars.get("HOME")
        .map(|h| Path::new(h).join(".config/jlk/config"))
}

fn parse<T: FromStr>(key: &str, v: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    v.parse()
        .map_err(|e| anyhow!("bad value {v:?} for {key}: {e}"))
}

/// Resolves the configuration. An explicitly named config file must exist;
/// the default one is optional.
pub fn resolve(
    flags: Overrides,
    config_file: Option<&Path>,
    vars: &BTreeMap<String, String>,
) -> Result<RunConfig> {
    let file = match config_file {
        Some(p) => {
            let text =
                fs::read_to_string(p).with_context(|| format!("reading config {}", p.display()))?;
            Overrides::parse_file(&text, p)?
        }
        None => match default_config_path(vars) {
            Some(p) if p.is_file() => {
                let text = fs::read_to_string(&p)
                    .with_context(|| format!("reading config {}", p.display()))?;
                Overrides::parse_file(&text, &p)?
            }
            _ => Overrides::default(),
        },
    };
    let o = flags.or(Overrides::from_env(vars)).or(file);
    let mut cfg = RunConfig::default();
    if let Some(v) = &o.max_weight {
        cfg.max_weight = parse("max_weight", v)?;
    }
    if let Some(v) = &o.max_weight_qt {
        cfg.max_weight_qt = parse("max_weight_qt", v)?;
    }
    if let Some(v) = &o.cache_dir {
        cfg.cache_dir = (!v.is_empty()).then(|| PathBuf::from(v));
    }
    if let Some(v) = &o.workers {
        cfg.workers = parse("workers", v)?;
        if cfg.workers == 0 {
            bail!("workers must be at least 1");
        }
    }
    if let Some(v) = &o.format {
        cfg.format = Some(parse("format", v)?);
    }
    if let Some(v) = &o.d_convention {
        cfg.convention = parse("d_convention", v)?;
    }
    if let Some(v) = &o.table {
        cfg.table = parse("table", v)?;
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(kv: &[(&str, &str)]) -> BTreeMap<String, String> {
        kv.iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }

    #[test]
    fn precedence() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("config");
        fs::write(&path, "# comment\nmax_weight = 9\nworkers=3\nformat=text\n").unwrap();
        let env = vars(&[("JLK_WORKERS", "5"), ("JLK_D_CONVENTION", "plus")]);

        let cfg = resolve(Overrides::default(), Some(&path), &env).unwrap();
        assert_eq!(cfg.max_weight, 9);
        assert_eq!(cfg.workers, 5);
        assert_eq!(cfg.convention, Convention::Plus);
        assert_eq!(cfg.format, Some(Format::Text));

        let flags = Overrides {
            workers: Some("2".into()),
            max_weight: Some("4".into()),
            ..Default::default()
        };
        let cfg = resolve(flags, Some(&path), &env).unwrap();
        assert_eq!((cfg.max_weight, cfg.workers), (4, 2));
    }

    #[test]
    fn defaults_and_default_path() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = resolve(
            Overrides::default(),
            None,
            &vars(&[("HOME", dir.path().to_str().unwrap())]),
        )
        .unwrap();
        assert_eq!(cfg, RunConfig::default());

        fs::create_dir_all(dir.path().join(".config/jlk")).unwrap();
        fs::write(dir.path().join(".config/jlk/config"), "table=corrected\n").unwrap();
        let cfg = resolve(
            Overrides::default(),
            None,
            &vars(&[("HOME", dir.path().to_str().unwrap())]),
        )
        .unwrap();
        assert_eq!(cfg.table, TableVersion::Corrected);
    }

    #[test]
    fn bad_values() {
        let env = vars(&[("JLK_WORKERS", "0")]);
        assert!(resolve(Overrides::default(), None, &env).is_err());
        let env = vars(&[("JLK_D_CONVENTION", "sideways")]);
        assert!(resolve(Overrides::default(), None, &env).is_err());
        assert!(Overrides::parse_file("nonsense", Path::new("x")).is_err());
        assert!(Overrides::parse_file("colour=red", Path::new("x")).is_err());
    }
}
