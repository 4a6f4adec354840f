use std::fs;
use std::path::Path;
use std::time::Duration;

use anyhow::Context;
use serde::Serialize;

use madness_core::Tableau;

use crate::{exit, Format};

/// Outcome of a command beyond its payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// `--check` or `--verify` found differences from the expected values.
    Mismatch(Vec<String>),
    /// A budgeted run stopped early; the message says how to resume.
    Incomplete(String),
}

impl Status {
    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Ok => exit::SUCCESS,
            Status::Mismatch(_) => exit::MISMATCH,
            Status::Incomplete(_) => exit::BUDGET_EXHAUSTED,
        }
    }

    pub fn from_problems(problems: Vec<String>) -> Status {
        if problems.is_empty() {
            Status::Ok
        } else {
            Status::Mismatch(problems)
        }
    }

    fn label(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch(_) => "mismatch",
            Status::Incomplete(_) => "incomplete",
        }
    }

    fn messages(&self) -> Vec<String> {
        match self {
            Status::Ok => Vec::new(),
            Status::Mismatch(p) => p.clone(),
            Status::Incomplete(m) => vec![m.clone()],
        }
    }
}

/// One command's result in every output shape.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub params: serde_json::Value,
    pub payload: serde_json::Value,
    pub text: String,
    /// CSV printed for `--format csv`.
    pub csv: String,
    /// CSV files written under `--out`, by file name.
    pub files: Vec<(String, String)>,
    /// Name of the JSON mirror written under `--out`.
    pub json_file: String,
    pub status: Status,
    /// Whether `--check` ran for this report.
    pub checked: bool,
    pub elapsed: Duration,
}

#[derive(Debug, Serialize)]
pub struct ReportEnvelope<'a> {
    pub tool_version: &'static str,
    pub cube_data_hash: String,
    pub command: CommandEcho<'a>,
    /// Wall time; left out of files so they stay byte-identical between runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub problems: Vec<String>,
    pub payload: &'a serde_json::Value,
}

#[derive(Debug, Serialize)]
pub struct CommandEcho<'a> {
    pub name: &'static str,
    pub params: &'a serde_json::Value,
}

impl Report {
    pub fn envelope(&self, timed: bool) -> ReportEnvelope<'_> {
        ReportEnvelope {
            tool_version: env!("CARGO_PKG_VERSION"),
            cube_data_hash: Tableau::data_hash(),
            command: CommandEcho {
                name: self.command,
                params: &self.params,
            },
            elapsed_ms: timed.then_some(self.elapsed.as_millis() as u64),
            status: self.status.label(),
            problems: self.status.messages(),
            payload: &self.payload,
        }
    }

    pub fn write_files(&self, dir: &Path) -> anyhow::Result<()> {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (name, contents) in &self.files {
            let path = dir.join(name);
            fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
        }
        let path = dir.join(&self.json_file);
        let mut json = serde_json::to_string_pretty(&self.envelope(false))?;
        json.push('\n');
        fs::write(&path, json).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }

    fn status_lines(&self) -> String {
        match &self.status {
            Status::Ok if self.checked => "check: ok\n".to_string(),
            Status::Ok => String::new(),
            Status::Mismatch(problems) => problems
                .iter()
                .map(|p| format!("MISMATCH: {p}\n"))
                .collect(),
            Status::Incomplete(m) => format!("INCOMPLETE: {m}\n"),
        }
    }
}

/// Stdout for a list of reports.
pub fn render(reports: &[Report], format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Text => reports
            .iter()
            .map(|r| format!("{}{}", r.text, r.status_lines()))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => reports
            .iter()
            .map(|r| r.csv.as_str())
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let mut s = if let [single] = reports {
                serde_json::to_string_pretty(&single.envelope(true))?
            } else {
                let all: Vec<_> = reports.iter().map(|r| r.envelope(true)).collect();
                serde_json::to_string_pretty(&all)?
            };
            s.push('\n');
            s
        }
    })
}

/// Serialize rows to CSV text with a header.
pub fn to_csv<T: Serialize>(rows: &[T]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
