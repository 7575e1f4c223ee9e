//! Spectrum files: a TOML document with a `statistics` tag and a `levels`
//! array, so the statistics always travel with the level data. Loading
//! canonicalizes (sorts by energy, merges duplicate energies); the canonical
//! writer round-trips to an identical structure.

use qstat::ensemble::{Level, LevelSpectrum, Statistics};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumFile {
    pub statistics: String,
    pub levels: Vec<LevelEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelEntry {
    pub energy: f64,
    pub degeneracy: u32,
}

pub fn parse(text: &str) -> Result<(Statistics, LevelSpectrum), CliError> {
    let file: SpectrumFile = toml::from_str(text)
        .map_err(|e| CliError::Failed(qstat::Error::Domain(format!("invalid spectrum file: {e}"))))?;
    let stat = match file.statistics.as_str() {
        "fermi" => Statistics::Fermi,
        "bose" => Statistics::Bose,
        other => {
            return Err(CliError::Failed(qstat::Error::Domain(format!(
                "statistics must be \"fermi\" or \"bose\", got \"{other}\""
            ))))
        }
    };
    let levels = file
        .levels
        .into_iter()
        .map(|l| Level { energy: l.energy, degeneracy: l.degeneracy })
        .collect();
    let spectrum = LevelSpectrum::new(levels).map_err(CliError::Failed)?;
    Ok((stat, spectrum))
}

pub fn load(path: &std::path::Path) -> Result<(Statistics, LevelSpectrum), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}

/// Canonical TOML text for a spectrum; parsing it back yields an identical
/// statistics/spectrum pair.
pub fn canonical_string(stat: Statistics, spectrum: &LevelSpectrum) -> String {
    let file = SpectrumFile {
        statistics: String::from(match stat {
            Statistics::Fermi => "fermi",
            Statistics::Bose => "bose",
        }),
        levels: spectrum
            .levels()
            .iter()
            .map(|l| LevelEntry { energy: l.energy, degeneracy: l.degeneracy })
            .collect(),
    };
    toml::to_string(&file).expect("spectrum serializes to TOML")
}
