use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};

use serde::Serialize;
use turanp::constructions::FamilySpec;
use turanp::{g6_decode, Graph};

use crate::Failure;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutFormat {
    #[default]
    Json,
    Csv,
    G6,
}

/// Where graphs come from: a family description or graph6 lines.
pub enum Source {
    Family(FamilySpec),
    Graphs(Vec<Graph>),
}

/// Reads graph6 lines from `path`, `-` being standard input. Blank lines and
/// lines starting with `#` are skipped.
pub fn read_graph6(path: &str) -> Result<Vec<Graph>, Failure> {
    let reader: Box<dyn BufRead> = if path == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let f = File::open(path).map_err(|e| Failure::Usage(format!("cannot open `{path}`: {e}")))?;
        Box::new(BufReader::new(f))
    };
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Failure::Domain(format!("reading `{path}`: {e}")))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = g6_decode(line).map_err(|e| Failure::Domain(format!("line {}: {e}", i + 1)))?;
        out.push(g);
    }
    if out.is_empty() {
        return Err(Failure::Domain(format!("no graphs in `{path}`")));
    }
    Ok(out)
}

pub fn source(family: Option<FamilySpec>, input: Option<String>) -> Result<Source, Failure> {
    match (family, input) {
        (Some(f), None) => Ok(Source::Family(f)),
        (None, Some(path)) => Ok(Source::Graphs(read_graph6(&path)?)),
        _ => Err(Failure::Usage("give exactly one of --family or --in".into())),
    }
}

/// Builds the family member, or returns the graphs as given.
pub fn graphs(src: Source) -> Result<Vec<Graph>, Failure> {
    match src {
        Source::Family(f) => Ok(vec![f.build()?]),
        Source::Graphs(gs) => Ok(gs),
    }
}

/// Record writer for the json (one object per line) and csv formats.
pub struct Sink {
    csv: Option<csv::Writer<io::Stdout>>,
}

impl Sink {
    pub fn new(format: OutFormat) -> Self {
        let csv = (format == OutFormat::Csv).then(|| csv::Writer::from_writer(io::stdout()));
        Sink { csv }
    }

    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let s = serde_json::to_string(value).map_err(|e| Failure::Domain(e.to_string()))?;
        writeln!(io::stdout(), "{s}").map_err(Failure::from)
    }

    pub fn csv_row<I, S>(&mut self, fields: I) -> Result<(), Failure>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        let w = self.csv.as_mut().expect("csv sink");
        w.write_record(fields).map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(e) => Failure::from(e),
            other => Failure::Domain(format!("{other:?}")),
        })
    }

    pub fn line(&mut self, s: &str) -> Result<(), Failure> {
        writeln!(io::stdout(), "{s}").map_err(Failure::from)
    }

    pub fn finish(mut self) -> Result<(), Failure> {
        if let Some(w) = self.csv.as_mut() {
            w.flush()?;
        }
        io::stdout().flush()?;
        Ok(())
    }
}

/// `a:b` or a single `a`, inclusive.
pub fn parse_range<T>(s: &str) -> Result<(T, T), String>
where
    T: std::str::FromStr + PartialOrd + Copy,
{
    let num = |x: &str| x.trim().parse::<T>().map_err(|_| format!("bad number `{x}` in range `{s}`"));
    let (a, b) = match s.split_once(':') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let a = num(s)?;
            (a, a)
        }
    };
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok((a, b))
}

/// Comma-separated list of numbers.
pub fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("bad number `{x}` in list `{s}`")))
        .collect()
}
