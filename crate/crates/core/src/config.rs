//! Experiment configuration files.
//!
//! TOML with flat tables: one `[[code]]` per code, a single `[sweep]`, and one
//! `[[decoder]]` per decoder arm.
//!
//! ```toml
//! [[code]]
//! label = "crc-128-112"
//! family = "crc"          # crc | bch | hamming | polar | file
//! n = 128
//! poly = "0x1021"
//!
//! [sweep]
//! ebn0_db = [3.0, 4.0, 5.0, 6.0, 7.0]
//! min_frame_errors = 100
//! max_frames = 10000000
//! seed = 1
//! output_dir = "results/fig3"
//!
//! [[decoder]]
//! label = "lgrand-96-8-15"
//! code = "crc-128-112"    # optional when there is one code
//! kind = "lgrand"         # grandab | orbgrand | sgrand | lgrand
//! lw_max = 96
//! hw_max = 8
//! delta = 15
//! ```
//!
//! Every validation error names the offending key, e.g. `decoder[2].delta`.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use toml::{Table, Value};

use crate::channel::StopRule;
use crate::code::LinearCode;
use crate::codes::CodeSpec;
use crate::decoders::{DecoderSpec, LgrandParams};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct CodeEntry {
    pub label: String,
    pub spec: CodeSpec,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecoderEntry {
    pub label: String,
    pub code: String,
    pub spec: DecoderSpec,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub ebn0_db: Vec<f64>,
    pub stop: StopRule,
    pub seed: u64,
    pub output_dir: PathBuf,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub codes: Vec<CodeEntry>,
    pub sweep: SweepConfig,
    pub decoders: Vec<DecoderEntry>,
}

/// A config with its codes built and every decoder checked against its code.
#[derive(Clone, Debug)]
pub struct Experiment {
    pub config: ExperimentConfig,
    pub codes: Vec<(String, LinearCode)>,
}

impl Experiment {
    pub fn code(&self, label: &str) -> &LinearCode {
        &self
            .codes
            .iter()
            .find(|(l, _)| l == label)
            .expect("decoder code labels are validated")
            .1
    }
}

fn cfg_err(key: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::Config {
        key: key.into(),
        msg: msg.into(),
    }
}

/// Typed access to one table that remembers which keys were read.
struct Section<'a> {
    name: String,
    table: &'a Table,
    used: BTreeSet<&'static str>,
}

impl<'a> Section<'a> {
    fn new(name: String, table: &'a Table) -> Self {
        Self {
            name,
            table,
            used: BTreeSet::new(),
        }
    }

    fn key(&self, k: &str) -> String {
        format!("{}.{k}", self.name)
    }

    fn get(&mut self, k: &'static str) -> Option<&'a Value> {
        self.used.insert(k);
        self.table.get(k)
    }

    fn require(&mut self, k: &'static str) -> Result<&'a Value> {
        self.get(k).ok_or_else(|| cfg_err(self.key(k), "missing"))
    }

    fn int(&mut self, k: &'static str) -> Result<Option<i64>> {
        match self.get(k) {
            None => Ok(None),
            Some(Value::Integer(i)) => Ok(Some(*i)),
            Some(other) => Err(cfg_err(
                self.key(k),
                format!("expected an integer, got {}", other.type_str()),
            )),
        }
    }

    fn nonneg(&mut self, k: &'static str) -> Result<Option<u64>> {
        match self.int(k)? {
            None => Ok(None),
            Some(i) if i < 0 => Err(cfg_err(
                self.key(k),
                format!("must be nonnegative, got {i}"),
            )),
            Some(i) => Ok(Some(i as u64)),
        }
    }

    fn usize_req(&mut self, k: &'static str) -> Result<usize> {
        self.require(k)?;
        Ok(self.nonneg(k)?.expect("present") as usize)
    }

    fn string(&mut self, k: &'static str) -> Result<Option<&'a str>> {
        match self.get(k) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(other) => Err(cfg_err(
                self.key(k),
                format!("expected a string, got {}", other.type_str()),
            )),
        }
    }

    fn string_req(&mut self, k: &'static str) -> Result<&'a str> {
        self.require(k)?;
        Ok(self.string(k)?.expect("present"))
    }

    /// Rejects keys that were never read.
    fn finish(self) -> Result<()> {
        match self.table.keys().find(|k| !self.used.contains(k.as_str())) {
            Some(k) => Err(cfg_err(self.key(k), "unknown key")),
            None => Ok(()),
        }
    }
}

fn parse_code(mut s: Section<'_>) -> Result<CodeEntry> {
    let label = s.string_req("label")?.to_string();
    let family = s.string_req("family")?;
    let spec = match family {
        "crc" => CodeSpec::Crc {
            n: s.usize_req("n")?,
            poly: s.string_req("poly")?.to_string(),
        },
        "bch" => CodeSpec::Bch {
            m: s.usize_req("m")? as u32,
            t: s.usize_req("t")?,
        },
        "hamming" => CodeSpec::Hamming {
            m: s.usize_req("m")? as u32,
        },
        "polar" => {
            let crc = match s.string("crc")? {
                None => None,
                Some(h) => Some(
                    parse_hex_u64(h)
                        .ok_or_else(|| cfg_err(s.key("crc"), format!("bad hex `{h}`")))?,
                ),
            };
            CodeSpec::Polar {
                n: s.usize_req("n")?,
                k: s.usize_req("k")?,
                crc,
            }
        }
        "file" => CodeSpec::File {
            path: PathBuf::from(s.string_req("path")?),
        },
        other => {
            return Err(cfg_err(
                s.key("family"),
                format!("unknown family `{other}`; expected crc, bch, hamming, polar, or file"),
            ))
        }
    };
    s.finish()?;
    Ok(CodeEntry { label, spec })
}

fn parse_hex_u64(s: &str) -> Option<u64> {
    let t = s.trim();
    let digits = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u64::from_str_radix(digits, 16).ok()
}

fn parse_decoder(mut s: Section<'_>, default_code: Option<&str>) -> Result<DecoderEntry> {
    let label = s.string_req("label")?.to_string();
    let code = match (s.string("code")?, default_code) {
        (Some(c), _) => c.to_string(),
        (None, Some(c)) => c.to_string(),
        (None, None) => {
            return Err(cfg_err(
                s.key("code"),
                "required when several codes are defined",
            ))
        }
    };
    let spec = match s.string_req("kind")? {
        "grandab" => DecoderSpec::Grandab {
            ab: s.usize_req("ab")?,
        },
        "orbgrand" => DecoderSpec::Orbgrand {
            lw_max: s.usize_req("lw_max")?,
            hw_cap: s.usize_req("hw_max")?,
        },
        "sgrand" => DecoderSpec::Sgrand {
            budget: s.nonneg("budget")?,
        },
        "lgrand" => DecoderSpec::Lgrand(LgrandParams::new(
            s.usize_req("lw_max")?,
            s.usize_req("hw_max")?,
            s.usize_req("delta")?,
        )),
        other => {
            return Err(cfg_err(
                s.key("kind"),
                format!("unknown decoder `{other}`; expected grandab, orbgrand, sgrand, or lgrand"),
            ))
        }
    };
    s.finish()?;
    Ok(DecoderEntry { label, code, spec })
}

fn parse_sweep(mut s: Section<'_>) -> Result<SweepConfig> {
    let ebn0_db = match s.require("ebn0_db")? {
        Value::Array(items) if !items.is_empty() => items
            .iter()
            .map(|v| match v {
                Value::Float(f) if f.is_finite() => Ok(*f),
                Value::Integer(i) => Ok(*i as f64),
                other => Err(cfg_err(s.key("ebn0_db"), format!("bad entry {other}"))),
            })
            .collect::<Result<Vec<_>>>()?,
        _ => {
            return Err(cfg_err(
                s.key("ebn0_db"),
                "expected a nonempty array of numbers",
            ))
        }
    };
    let defaults = StopRule::default();
    let stop = StopRule {
        min_frame_errors: s
            .nonneg("min_frame_errors")?
            .unwrap_or(defaults.min_frame_errors),
        max_frames: s.nonneg("max_frames")?.unwrap_or(defaults.max_frames),
    };
    if stop.min_frame_errors == 0 {
        return Err(cfg_err(s.key("min_frame_errors"), "must be at least 1"));
    }
    if stop.max_frames == 0 {
        return Err(cfg_err(s.key("max_frames"), "must be at least 1"));
    }
    let seed = s.nonneg("seed")?.unwrap_or(1);
    let output_dir = PathBuf::from(s.string("output_dir")?.unwrap_or("results"));
    s.finish()?;
    Ok(SweepConfig {
        ebn0_db,
        stop,
        seed,
        output_dir,
    })
}

fn tables<'a>(root: &'a Table, key: &str) -> Result<Vec<&'a Table>> {
    match root.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.as_table()
                    .ok_or_else(|| cfg_err(format!("{key}[{i}]"), "expected a table"))
            })
            .collect(),
        Some(Value::Table(t)) => Ok(vec![t]),
        Some(_) => Err(cfg_err(key, "expected a table or an array of tables")),
    }
}

impl FromStr for ExperimentConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let root: Table = text
            .parse()
            .map_err(|e: toml::de::Error| cfg_err("<syntax>", e.message().to_string()))?;
        if let Some(k) = root
            .keys()
            .find(|k| !["code", "sweep", "decoder"].contains(&k.as_str()))
        {
            return Err(cfg_err(k.clone(), "unknown section"));
        }
        let codes = tables(&root, "code")?
            .into_iter()
            .enumerate()
            .map(|(i, t)| parse_code(Section::new(format!("code[{i}]"), t)))
            .collect::<Result<Vec<_>>>()?;
        if codes.is_empty() {
            return Err(cfg_err("code", "at least one [[code]] section is required"));
        }
        for (i, c) in codes.iter().enumerate() {
            if codes[..i].iter().any(|d| d.label == c.label) {
                return Err(cfg_err(
                    format!("code[{i}].label"),
                    format!("duplicate label `{}`", c.label),
                ));
            }
        }
        let sweep = match root.get("sweep") {
            Some(Value::Table(t)) => parse_sweep(Section::new("sweep".into(), t))?,
            Some(_) => return Err(cfg_err("sweep", "expected a table")),
            None => return Err(cfg_err("sweep", "missing")),
        };
        let default_code = (codes.len() == 1).then(|| codes[0].label.as_str());
        let decoders = tables(&root, "decoder")?
            .into_iter()
            .enumerate()
            .map(|(i, t)| parse_decoder(Section::new(format!("decoder[{i}]"), t), default_code))
            .collect::<Result<Vec<_>>>()?;
        if decoders.is_empty() {
            return Err(cfg_err(
                "decoder",
                "at least one [[decoder]] section is required",
            ));
        }
        for (i, d) in decoders.iter().enumerate() {
            if !codes.iter().any(|c| c.label == d.code) {
                return Err(cfg_err(
                    format!("decoder[{i}].code"),
                    format!("no code labelled `{}`", d.code),
                ));
            }
            if decoders[..i].iter().any(|e| e.label == d.label) {
                return Err(cfg_err(
                    format!("decoder[{i}].label"),
                    format!("duplicate label `{}`", d.label),
                ));
            }
        }
        Ok(Self {
            codes,
            sweep,
            decoders,
        })
    }
}

impl ExperimentConfig {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        std::fs::read_to_string(path.as_ref())?.parse()
    }

    /// Builds the codes and checks every decoder's parameters against its code.
    pub fn resolve(self) -> Result<Experiment> {
        let codes = self
            .codes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let code = c
                    .spec
                    .build()
                    .map_err(|e| cfg_err(format!("code[{i}]"), e.to_string()))?;
                Ok((c.label.clone(), code))
            })
            .collect::<Result<Vec<_>>>()?;
        for (i, d) in self.decoders.iter().enumerate() {
            let n = codes
                .iter()
                .find(|(l, _)| *l == d.code)
                .expect("validated")
                .1
                .n();
            d.spec
                .validate(n)
                .map_err(|e| cfg_err(format!("decoder[{i}]"), e.to_string()))?;
        }
        Ok(Experiment {
            config: self,
            codes,
        })
    }
}

/// `family:params`, e.g. `crc:128:0x1021`, `bch:7:3`, `hamming:4`,
/// `polar:128:105[:0xE21]`, `file:PATH`.
impl FromStr for CodeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad code spec `{s}`"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        Ok(match parts[..] {
            ["crc", n, poly] => CodeSpec::Crc {
                n: num(n)?,
                poly: poly.to_string(),
            },
            ["bch", m, t] => CodeSpec::Bch {
                m: num(m)? as u32,
                t: num(t)?,
            },
            ["hamming", m] => CodeSpec::Hamming { m: num(m)? as u32 },
            ["polar", n, k] => CodeSpec::Polar {
                n: num(n)?,
                k: num(k)?,
                crc: None,
            },
            ["polar", n, k, crc] => CodeSpec::Polar {
                n: num(n)?,
                k: num(k)?,
                crc: Some(parse_hex_u64(crc).ok_or_else(bad)?),
            },
            ["file", ..] if parts.len() >= 2 => CodeSpec::File {
                path: PathBuf::from(&s["file:".len()..]),
            },
            _ => return Err(bad()),
        })
    }
}

/// `grandab:AB`, `orbgrand:LW_MAX:HW_MAX`, `sgrand[:BUDGET]`,
/// `lgrand:LW_MAX:HW_MAX:DELTA`.
impl FromStr for DecoderSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad decoder spec `{s}`"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        Ok(match parts[..] {
            ["grandab", ab] => DecoderSpec::Grandab { ab: num(ab)? },
            ["orbgrand", lw, hw] => DecoderSpec::Orbgrand {
                lw_max: num(lw)?,
                hw_cap: num(hw)?,
            },
            ["sgrand"] => DecoderSpec::Sgrand { budget: None },
            ["sgrand", b] => DecoderSpec::Sgrand {
                budget: Some(b.parse().map_err(|_| bad())?),
            },
            ["lgrand", lw, hw, d] => {
                DecoderSpec::Lgrand(LgrandParams::new(num(lw)?, num(hw)?, num(d)?))
            }
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASIC: &str = r#"
[[code]]
label = "h"
family = "hamming"
m = 4

[sweep]
ebn0_db = [1.0, 2]
seed = 3

[[decoder]]
label = "l"
kind = "lgrand"
lw_max = 40
hw_max = 4
delta = 2
"#;

    fn key_of(e: Error) -> String {
        match e {
            Error::Config { key, .. } => key,
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn parses_basic() {
        let c: ExperimentConfig = BASIC.parse().unwrap();
        assert_eq!(c.sweep.ebn0_db, vec![1.0, 2.0]);
        assert_eq!(c.sweep.stop, StopRule::default());
        assert_eq!(c.decoders[0].code, "h");
        assert_eq!(
            c.decoders[0].spec,
            DecoderSpec::Lgrand(LgrandParams::new(40, 4, 2))
        );
        let x = c.resolve().unwrap();
        assert_eq!(x.code("h").n(), 15);
    }

    #[test]
    fn negative_delta_names_key() {
        let e = BASIC
            .replace("delta = 2", "delta = -1")
            .parse::<ExperimentConfig>()
            .unwrap_err();
        assert_eq!(key_of(e), "decoder[0].delta");
    }

    #[test]
    fn unknown_and_missing_keys_named() {
        let e = BASIC
            .replace("delta = 2", "delta = 2\ngamma = 1")
            .parse::<ExperimentConfig>()
            .unwrap_err();
        assert_eq!(key_of(e), "decoder[0].gamma");
        let e = BASIC
            .replace("hw_max = 4\n", "")
            .parse::<ExperimentConfig>()
            .unwrap_err();
        assert_eq!(key_of(e), "decoder[0].hw_max");
        let e = BASIC
            .replace("ebn0_db = [1.0, 2]", "ebn0_db = []")
            .parse::<ExperimentConfig>()
            .unwrap_err();
        assert_eq!(key_of(e), "sweep.ebn0_db");
    }

    #[test]
    fn parameters_checked_against_code_length() {
        let c: ExperimentConfig = BASIC.replace("hw_max = 4", "hw_max = 16").parse().unwrap();
        assert_eq!(key_of(c.resolve().unwrap_err()), "decoder[0]");
    }

    #[test]
    fn spec_strings() {
        assert_eq!(
            "bch:7:3".parse::<CodeSpec>().unwrap(),
            CodeSpec::Bch { m: 7, t: 3 }
        );
        assert_eq!(
            "polar:128:105:0xE21".parse::<CodeSpec>().unwrap(),
            CodeSpec::Polar {
                n: 128,
                k: 105,
                crc: Some(0xE21)
            }
        );
        assert!("crc:128".parse::<CodeSpec>().is_err());
        assert_eq!(
            "sgrand".parse::<DecoderSpec>().unwrap(),
            DecoderSpec::Sgrand { budget: None }
        );
        assert_eq!(
            "lgrand:96:8:15".parse::<DecoderSpec>().unwrap(),
            DecoderSpec::Lgrand(LgrandParams::new(96, 8, 15))
        );
        assert!("lgrand:96:8:-1".parse::<DecoderSpec>().is_err());
    }
}
