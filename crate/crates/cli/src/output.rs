use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Kind {
    Value,
    TableRow,
    Identity,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Value => "VALUE",
            Kind::TableRow => "TABLE_ROW",
            Kind::Identity => "IDENTITY",
        }
    }
}

/// One output line. CSV columns follow the field order.
#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub kind: Kind,
    pub name: Option<String>,
    pub params: Option<String>,
    pub n: Option<u32>,
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub x: Option<String>,
    pub method: Option<String>,
    pub digits: u32,
    pub value: Option<String>,
    pub err_estimate: Option<String>,
    pub residual: Option<String>,
    pub tolerance: Option<String>,
    pub pass: Option<bool>,
    pub max_deviation: Option<String>,
}

impl OutputRecord {
    pub fn new(kind: Kind, digits: u32) -> Self {
        OutputRecord {
            kind,
            name: None,
            params: None,
            n: None,
            p: None,
            q: None,
            x: None,
            method: None,
            digits,
            value: None,
            err_estimate: None,
            residual: None,
            tolerance: None,
            pass: None,
            max_deviation: None,
        }
    }

    fn plain(&self) -> String {
        fn push(parts: &mut Vec<String>, key: &str, v: Option<&str>) {
            if let Some(v) = v {
                parts.push(format!("{key}={v}"));
            }
        }
        let mut parts: Vec<String> = Vec::new();
        if let Some(pass) = self.pass {
            parts.push(String::from(if pass { "PASS" } else { "FAIL" }));
        }
        push(&mut parts, "name", self.name.as_deref());
        if self.kind == Kind::Identity {
            if let Some(p) = self.params.as_deref().filter(|p| !p.is_empty()) {
                parts.push(p.to_string());
            }
        } else {
            push(&mut parts, "n", self.n.map(|v| v.to_string()).as_deref());
            push(&mut parts, "x", self.x.as_deref());
        }
        push(&mut parts, "method", self.method.as_deref());
        push(&mut parts, "value", self.value.as_deref());
        push(&mut parts, "err", self.err_estimate.as_deref());
        push(&mut parts, "residual", self.residual.as_deref());
        push(&mut parts, "tolerance", self.tolerance.as_deref());
        push(&mut parts, "max_deviation", self.max_deviation.as_deref());
        parts.join(" ")
    }
}

/// Streams records in one format. CSV gets its header before the first row.
pub struct Emitter<W: Write> {
    format: Format,
    csv: Option<csv::Writer<W>>,
    out: Option<W>,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        match format {
            Format::Csv => Emitter {
                format,
                csv: Some(csv::WriterBuilder::new().has_headers(true).from_writer(out)),
                out: None,
            },
            _ => Emitter {
                format,
                csv: None,
                out: Some(out),
            },
        }
    }

    pub fn emit(&mut self, rec: &OutputRecord) -> io::Result<()> {
        match self.format {
            Format::Csv => {
                let w = self.csv.as_mut().expect("csv writer");
                w.serialize(rec).map_err(io::Error::other)?;
                w.flush()
            }
            Format::Json => {
                let w = self.out.as_mut().expect("writer");
                serde_json::to_writer(&mut *w, rec).map_err(io::Error::other)?;
                writeln!(w)?;
                w.flush()
            }
            Format::Plain => {
                let w = self.out.as_mut().expect("writer");
                writeln!(w, "{} {}", rec.kind.as_str(), rec.plain())?;
                w.flush()
            }
        }
    }

    /// A trailing human-readable line; plain format only.
    pub fn note(&mut self, text: &str) -> io::Result<()> {
        if let (Format::Plain, Some(w)) = (self.format, self.out.as_mut()) {
            writeln!(w, "{text}")?;
            w.flush()?;
        }
        Ok(())
    }
}
