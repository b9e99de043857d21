//! Line-oriented `key = value` configuration for `verify`.
//!
//! `#` starts a comment. `oracle` may repeat; every other key may appear
//! once. Lists are whitespace-separated, ranges are `a:b`.

use std::fmt;
use std::str::FromStr;

use turanp::ForestPattern;

use crate::io::parse_range;

pub const DEFAULT_CONFIG: &str = "\
# turanp verify defaults
suites = construction lemmas rewrite oracle

# construction: n from the pattern order up to n_max, plus large_n
n_max = 60
large_n = 200 500
p_range = 1:6

# lemmas: n1, n2 in ell..ell+lemma_span; absorb tuples per variant
lemma_span = 20
absorb_tuples = 50

# rewrite: hosts per site kind
rewrite_instances = 100
seed = 5

# oracle rows: pattern, n range, p range, and `unique` to demand one maximizer
oracle = path:3 n=2:8 p=2:3 unique
oracle = stars:1,1 n=5:8 p=2:2 unique
oracle = path:2 n=2:8 p=1:1
oracle = path:3 n=2:8 p=1:1
oracle = path:4 n=2:8 p=1:1
oracle = path:5 n=2:8 p=1:1
oracle = path:6 n=2:8 p=1:1
oracle = linear:2,2 n=5:8 p=1:1
";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Construction,
    Lemmas,
    Rewrite,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Construction, Suite::Lemmas, Suite::Rewrite, Suite::Oracle];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "construction" => Ok(Suite::Construction),
            "lemmas" => Ok(Suite::Lemmas),
            "rewrite" => Ok(Suite::Rewrite),
            "oracle" => Ok(Suite::Oracle),
            _ => Err(format!("unknown suite `{s}` (construction, lemmas, rewrite, oracle)")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Construction => "construction",
            Suite::Lemmas => "lemmas",
            Suite::Rewrite => "rewrite",
            Suite::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRow {
    pub pattern: ForestPattern,
    pub n: (usize, usize),
    pub p: (u32, u32),
    pub unique: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub suites: Vec<Suite>,
    pub n_max: u64,
    pub large_n: Vec<u64>,
    pub p_range: (u32, u32),
    pub lemma_span: u64,
    pub absorb_tuples: usize,
    pub rewrite_instances: usize,
    pub seed: u64,
    pub oracle: Vec<OracleRow>,
}

fn num<T: FromStr>(key: &str, v: &str) -> Result<T, String> {
    v.parse().map_err(|_| format!("`{key}` needs a number, got `{v}`"))
}

fn oracle_row(v: &str) -> Result<OracleRow, String> {
    let mut words = v.split_whitespace();
    let pattern: ForestPattern = words
        .next()
        .ok_or("`oracle` needs a pattern")?
        .parse()
        .map_err(|e: turanp::Error| e.to_string())?;
    let (mut n, mut p, mut unique) = (None, None, false);
    for w in words {
        match w.split_once('=') {
            Some(("n", r)) => n = Some(parse_range(r)?),
            Some(("p", r)) => p = Some(parse_range(r)?),
            None if w == "unique" => unique = true,
            _ => return Err(format!("unexpected `{w}` in oracle row `{v}`")),
        }
    }
    Ok(OracleRow {
        pattern,
        n: n.ok_or_else(|| format!("oracle row `{v}` needs n=a:b"))?,
        p: p.ok_or_else(|| format!("oracle row `{v}` needs p=a:b"))?,
        unique,
    })
}

impl FromStr for Config {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let mut seen: Vec<String> = Vec::new();
        let mut suites = None;
        let mut n_max = None;
        let mut large_n = None;
        let mut p_range = None;
        let mut lemma_span = None;
        let mut absorb_tuples = None;
        let mut rewrite_instances = None;
        let mut seed = None;
        let mut oracle = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: String| format!("line {}: {e}", i + 1);
            let (key, value) = line.split_once('=').ok_or_else(|| at(format!("expected key = value, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            if key != "oracle" {
                if seen.iter().any(|k| k == key) {
                    return Err(at(format!("duplicate key `{key}`")));
                }
                seen.push(key.to_string());
            }
            match key {
                "suites" => {
                    let s: Result<Vec<Suite>, String> = value.split_whitespace().map(str::parse).collect();
                    suites = Some(s.map_err(at)?);
                }
                "n_max" => n_max = Some(num(key, value).map_err(at)?),
                "large_n" => {
                    let v: Result<Vec<u64>, String> = value.split_whitespace().map(|x| num(key, x)).collect();
                    large_n = Some(v.map_err(at)?);
                }
                "p_range" => p_range = Some(parse_range(value).map_err(at)?),
                "lemma_span" => lemma_span = Some(num(key, value).map_err(at)?),
                "absorb_tuples" => absorb_tuples = Some(num(key, value).map_err(at)?),
                "rewrite_instances" => rewrite_instances = Some(num(key, value).map_err(at)?),
                "seed" => seed = Some(num(key, value).map_err(at)?),
                "oracle" => oracle.push(oracle_row(value).map_err(at)?),
                _ => return Err(at(format!("unknown key `{key}`"))),
            }
        }
        let p_range: (u32, u32) = p_range.unwrap_or((1, 6));
        if p_range.0 == 0 {
            return Err("p_range must start at 1 or more".into());
        }
        Ok(Config {
            suites: suites.unwrap_or_else(|| Suite::ALL.to_vec()),
            n_max: n_max.unwrap_or(60),
            large_n: large_n.unwrap_or_default(),
            p_range,
            lemma_span: lemma_span.unwrap_or(20),
            absorb_tuples: absorb_tuples.unwrap_or(50),
            rewrite_instances: rewrite_instances.unwrap_or(100),
            seed: seed.unwrap_or(5),
            oracle,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_parses() {
        let c: Config = DEFAULT_CONFIG.parse().unwrap();
        assert_eq!(c.suites, Suite::ALL.to_vec());
        assert_eq!(c.large_n, vec![200, 500]);
        assert_eq!(c.oracle.len(), 8);
        assert!(c.oracle[0].unique);
        assert_eq!(c.oracle[1].pattern, ForestPattern::star_forest(vec![1, 1]).unwrap());
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!("n_max 60".parse::<Config>().is_err());
        assert!("colour = red".parse::<Config>().is_err());
        assert!("n_max = 6\nn_max = 7".parse::<Config>().is_err());
        assert!("oracle = path:3 n=2:8".parse::<Config>().is_err());
        assert!("oracle = path:3 n=8:2 p=2".parse::<Config>().is_err());
        assert!("suites = construction plots".parse::<Config>().is_err());
    }
}
