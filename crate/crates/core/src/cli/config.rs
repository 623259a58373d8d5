//! Run configuration shared by the binary and the library entry points.

use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use serde::Serialize;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Svg => "svg",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem1,
    Theorem2,
    Apparatus,
}

/// One axis of a rectangular grid: `start:end:steps`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Axis {
    pub start: f64,
    pub end: f64,
    pub steps: usize,
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        (0..self.steps)
            .map(|k| self.start + (self.end - self.start) * k as f64 / (self.steps - 1) as f64)
            .collect()
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, k] = parts.as_slice() else {
            return Err(Error::Parse(format!("grid axis {s:?} is not start:end:steps")));
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| Error::Parse(format!("grid value {t:?}: {e}")));
        let steps = k.trim().parse::<usize>().map_err(|e| Error::Parse(format!("grid steps {k:?}: {e}")))?;
        if steps == 0 {
            return Err(Error::Parse("grid steps must be positive".into()));
        }
        Ok(Axis {
            start: num(a)?,
            end: num(b)?,
            steps,
        })
    }
}

/// Rectangular evaluation grid `re0:re1:steps,im0:im1:steps`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Grid {
    pub re: Axis,
    pub im: Axis,
}

impl Grid {
    /// Points in row-major order, imaginary part outermost.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let xs = self.re.values();
        self.im.values().into_iter().flat_map(|y| xs.iter().map(move |&x| (x, y))).collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("grid {s:?} needs two axes separated by ','")))?;
        Ok(Grid {
            re: re.parse()?,
            im: im.parse()?,
        })
    }
}

/// Parses `a,b,c` into a strictly increasing list of degrees.
pub fn parse_sweep(s: &str) -> Result<Vec<usize>> {
    let v = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("sweep entry {t:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    if v.is_empty() || v.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse(format!("sweep {s:?} must be strictly increasing")));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Interpolate,
    Figure,
    Verify(Suite),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub precision: u32,
    pub n: Option<usize>,
    pub sweep: Option<Vec<usize>>,
    pub scheme: Option<PathBuf>,
    pub preset: Option<String>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub grid: Option<Grid>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            precision: crate::DEFAULT_PRECISION,
            n: None,
            sweep: None,
            scheme: None,
            preset: None,
            out: None,
            format: None,
            grid: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.precision < 128 {
            return Err(Error::Parse(format!("precision {} is below 128 bits", self.precision)));
        }
        if self.n.is_some() && self.sweep.is_some() {
            return Err(Error::Parse("--n and --n-sweep are exclusive".into()));
        }
        if let Some(s) = &self.sweep {
            if s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse("sweep values must be strictly increasing".into()));
            }
        }
        match self.command {
            Command::Interpolate => {
                let sources = self.scheme.is_some() as u8 + self.preset.is_some() as u8 + self.n.is_some() as u8;
                if sources != 1 {
                    return Err(Error::Parse("interpolate needs exactly one of --scheme, --preset, --n (Padé)".into()));
                }
            }
            Command::Figure => {
                if self.preset.is_none() {
                    return Err(Error::Parse("figure needs --preset".into()));
                }
            }
            Command::Verify(_) => {}
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g: Grid = "-1:1:3,0:2:2".parse().unwrap();
        assert_eq!(g.points(), vec![(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0), (-1.0, 2.0), (0.0, 2.0), (1.0, 2.0)]);
        assert!("1:2".parse::<Grid>().is_err());
        assert!("0:1:0,0:1:2".parse::<Grid>().is_err());
    }

    #[test]
    fn sweep_parsing() {
        assert_eq!(parse_sweep("10, 20,40").unwrap(), vec![10, 20, 40]);
        assert!(parse_sweep("20,10").is_err());
        assert!(parse_sweep("10,10").is_err());
        assert!(parse_sweep("x").is_err());
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::new(Command::Interpolate);
        assert!(c.validate().is_err());
        c.n = Some(3);
        assert!(c.validate().is_ok());
        c.precision = 64;
        assert!(c.validate().is_err());
    }
}
