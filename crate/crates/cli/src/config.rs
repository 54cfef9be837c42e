use std::path::PathBuf;

use clap::ValueEnum;
use motivic_core::Genus;
use thiserror::Error;

pub const DEFAULT_GENUS_MIN: u32 = 2;
pub const DEFAULT_GENUS_MAX: u32 = 30;
pub const DEFAULT_M_MIN: u32 = 1;
pub const DEFAULT_M_MAX: u32 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("genus range must satisfy 2 <= min <= max <= {max}, got {0}..{1}", max = Genus::MAX)]
    GenusRange(u32, u32),
    #[error("m range must satisfy 1 <= min <= max, got {0}..{1}")]
    MRange(u32, u32),
    #[error("--jobs must be at least 1")]
    Jobs,
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub genus_min: u32,
    pub genus_max: u32,
    pub m_min: u32,
    pub m_max: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    /// `None` lets the thread pool pick; `Some(1)` runs sequentially.
    pub jobs: Option<usize>,
    pub diamond: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            genus_min: DEFAULT_GENUS_MIN,
            genus_max: DEFAULT_GENUS_MAX,
            m_min: DEFAULT_M_MIN,
            m_max: DEFAULT_M_MAX,
            format: Format::Text,
            out: None,
            jobs: None,
            diamond: false,
        }
    }
}

impl RunConfig {
    pub fn validate(self) -> Result<Self, ConfigError> {
        let (lo, hi) = (self.genus_min, self.genus_max);
        if lo < Genus::MIN || lo > hi || hi > Genus::MAX {
            return Err(ConfigError::GenusRange(lo, hi));
        }
        if self.m_min < 1 || self.m_min > self.m_max {
            return Err(ConfigError::MRange(self.m_min, self.m_max));
        }
        if self.jobs == Some(0) {
            return Err(ConfigError::Jobs);
        }
        Ok(self)
    }

    pub fn genera(&self) -> Vec<Genus> {
        (self.genus_min..=self.genus_max)
            .map(|g| Genus::new(g).expect("validated range"))
            .collect()
    }

    pub fn single_genus(&self) -> bool {
        self.genus_min == self.genus_max
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RunConfig::default().validate().is_ok());
        let bad = |f: fn(&mut RunConfig)| {
            let mut c = RunConfig::default();
            f(&mut c);
            c.validate().unwrap_err()
        };
        assert_eq!(bad(|c| c.genus_min = 1), ConfigError::GenusRange(1, 30));
        assert_eq!(bad(|c| c.genus_min = 31), ConfigError::GenusRange(31, 30));
        assert_eq!(bad(|c| c.m_min = 0), ConfigError::MRange(0, 100));
        assert_eq!(bad(|c| c.jobs = Some(0)), ConfigError::Jobs);
    }

    #[test]
    fn genera_in_order() {
        let c = RunConfig {
            genus_min: 3,
            genus_max: 5,
            ..RunConfig::default()
        };
        let g: Vec<u32> = c.genera().into_iter().map(Genus::get).collect();
        assert_eq!(g, [3, 4, 5]);
    }
}
