use std::io::Write;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Cli, Format};
use crate::commands::params;
use crate::EXIT_USAGE;

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub struct Output {
    pub payload: Value,
    pub exit_code: u8,
    /// One JSON line per item under `--format jsonl`.
    pub items: Option<Vec<Value>>,
    pub table: Option<Table>,
}

impl Output {
    pub fn new(payload: &impl Serialize) -> Self {
        Output {
            payload: to_value(payload),
            exit_code: 0,
            items: None,
            table: None,
        }
    }

    pub fn code(mut self, exit_code: u8) -> Self {
        self.exit_code = exit_code;
        self
    }

    pub fn items(mut self, items: Vec<Value>) -> Self {
        self.items = Some(items);
        self
    }

    pub fn table<const K: usize>(mut self, header: [&str; K], rows: Vec<[String; K]>) -> Self {
        self.table = Some(Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: rows.into_iter().map(|r| r.to_vec()).collect(),
        });
        self
    }
}

pub fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("payload types serialize infallibly")
}

#[derive(Debug)]
pub struct Failure {
    pub exit_code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { exit_code: EXIT_USAGE, kind: "usage", message: message.into() }
    }
}

impl From<intmetric::Error> for Failure {
    fn from(e: intmetric::Error) -> Self {
        use intmetric::Error::*;
        let (exit_code, kind) = match &e {
            Domain(_) => (2, "domain"),
            Unsupported(_) => (2, "unsupported"),
            Capacity(_) => (3, "capacity"),
            Invariant(_) => (4, "invariant"),
        };
        Failure { exit_code, kind, message: e.to_string() }
    }
}

fn render(cli: &Cli, out: &Output) -> Result<String, Failure> {
    let command = cli.command.name();
    let envelope = || {
        json!({
            "command": command,
            "params": params(&cli.command),
            "payload": out.payload,
            "exit_code": out.exit_code,
        })
    };
    match cli.global.format {
        Format::Json => Ok(serde_json::to_string_pretty(&envelope()).expect("json") + "\n"),
        Format::Jsonl => match &out.items {
            Some(items) => Ok(items.iter().map(|v| v.to_string() + "\n").collect()),
            None => Ok(envelope().to_string() + "\n"),
        },
        Format::Csv => {
            let table = out
                .table
                .as_ref()
                .ok_or_else(|| Failure::usage(format!("`{command}` has no CSV form; use --format json or jsonl")))?;
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::usage(e.to_string());
            w.write_record(&table.header).map_err(io)?;
            for row in &table.rows {
                w.write_record(row).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

fn write(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.global.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

pub fn emit(cli: &Cli, outcome: Result<Output, Failure>) -> ExitCode {
    let rendered = outcome.and_then(|out| render(cli, &out).map(|text| (text, out.exit_code)));
    let (text, code) = match rendered {
        Ok(ok) => ok,
        Err(f) => {
            eprintln!("error: {}", f.message);
            let envelope = json!({
                "command": cli.command.name(),
                "params": params(&cli.command),
                "payload": {"error": f.kind, "message": f.message},
                "exit_code": f.exit_code,
            });
            (serde_json::to_string_pretty(&envelope).expect("json") + "\n", f.exit_code)
        }
    };
    if let Err(e) = write(cli, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(code)
}
