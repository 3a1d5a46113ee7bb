//! JSON job files: one command with its arguments, parsed strictly.

use std::io::{Read, Write};

use serde::Deserialize;
use serde_json::Value;

use crate::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: String,
    /// A string such as `"0,1,sqrt(2)"` or an array of scalar literals.
    #[serde(default)]
    pub lambda: Option<Value>,
    #[serde(default)]
    pub with: Option<Value>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub n_max: Option<usize>,
    #[serde(default)]
    pub m: Option<usize>,
    #[serde(default)]
    pub generic: Option<usize>,
    #[serde(default)]
    pub matrix: Option<Value>,
    #[serde(default)]
    pub matrix_path: Option<String>,
    #[serde(default)]
    pub poly: Option<Value>,
    #[serde(default)]
    pub poly_path: Option<String>,
    #[serde(default)]
    pub g: Option<Vec<u64>>,
    #[serde(default)]
    pub h: Option<Vec<u64>>,
    #[serde(default)]
    pub format: Option<String>,
    #[serde(default)]
    pub threads: Option<usize>,
    #[serde(default)]
    pub flags: Vec<String>,
}

const FLAGS: [&str; 5] = ["signed", "summary", "contract-top", "general", "erc"];

fn text_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn list(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl JobSpec {
    /// The equivalent command line, without the program name.
    pub fn to_args(&self) -> Result<Vec<String>, CliError> {
        let mut a = vec![self.command.clone()];
        let mut push = |k: &str, v: String| {
            a.push(format!("--{k}"));
            a.push(v);
        };
        if let Some(v) = &self.lambda {
            push("lambda", text_of(v));
        }
        if let Some(v) = &self.with {
            push("with", text_of(v));
        }
        if let Some(n) = self.n {
            push("n", n.to_string());
        }
        if let Some(n) = self.n_max {
            push("n-max", n.to_string());
        }
        if let Some(m) = self.m {
            push("m", m.to_string());
        }
        if let Some(m) = self.generic {
            push("generic", m.to_string());
        }
        if let Some(v) = &self.matrix {
            push("matrix", text_of(v));
        }
        if let Some(p) = &self.matrix_path {
            push("matrix-file", p.clone());
        }
        match (&self.poly, &self.poly_path) {
            (Some(_), Some(_)) => return Err(CliError::Usage("give poly or poly_path, not both".into())),
            (Some(v), None) => push("poly", text_of(v)),
            (None, Some(p)) => push("poly", std::fs::read_to_string(p)?.trim().to_string()),
            (None, None) => {}
        }
        if let Some(g) = &self.g {
            push("g", list(g));
        }
        if let Some(h) = &self.h {
            push("h", list(h));
        }
        if let Some(f) = &self.format {
            push("format", f.clone());
        }
        if let Some(t) = self.threads {
            push("threads", t.to_string());
        }
        for f in &self.flags {
            if !FLAGS.contains(&f.as_str()) {
                return Err(CliError::Usage(format!("unknown flag {f:?} in job")));
            }
            a.push(format!("--{f}"));
        }
        Ok(a)
    }
}

pub fn parse_job(text: &str) -> Result<JobSpec, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Core(dopekit::Error::Parse(format!("job: {e}"))))
}

pub fn run_job(path: &str, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    let spec = parse_job(&text)?;
    if spec.command == "job" {
        return Err(CliError::Usage("jobs cannot run jobs".into()));
    }
    let args = std::iter::once("dopekit".to_string()).chain(spec.to_args()?);
    Ok(crate::run(args, out, err))
}
