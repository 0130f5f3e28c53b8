use serde::Serialize;

use crate::infer::{Conditional, CredalInterval, Stats};
use crate::prob::{self, Prob};

/// An exact value with its rounded rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Number {
    pub exact: String,
    pub decimal: String,
}

impl From<&Prob> for Number {
    fn from(p: &Prob) -> Self {
        Number { exact: prob::format_fraction(p), decimal: prob::format_significant(p, 6) }
    }
}

impl std::fmt::Display for Number {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.exact, self.decimal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Answer {
    Interval { lower: Number, upper: Number },
    Point { probability: Number },
    Undefined,
}

impl Answer {
    pub fn interval(c: &Conditional<CredalInterval>) -> Self {
        match c {
            Conditional::Defined(iv) => Answer::Interval { lower: (&iv.lower).into(), upper: (&iv.upper).into() },
            Conditional::Undefined => Answer::Undefined,
        }
    }

    pub fn point(c: &Conditional<Prob>) -> Self {
        match c {
            Conditional::Defined(p) => Answer::Point { probability: p.into() },
            Conditional::Undefined => Answer::Undefined,
        }
    }
}

/// Everything `query` reports, in both output modes.
#[derive(Clone, Debug, Serialize)]
pub struct QueryReport {
    pub semantics: &'static str,
    pub class: String,
    pub query: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<String>,
    pub result: Answer,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<&'static str>,
    pub choices: u64,
    pub models: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl QueryReport {
    pub fn from_stats(
        semantics: &'static str,
        class: String,
        query: String,
        evidence: Option<String>,
        result: Answer,
        stats: Stats,
    ) -> Self {
        QueryReport {
            semantics,
            class,
            query,
            evidence,
            result,
            decision: None,
            choices: stats.choices,
            models: stats.models,
            cross_check: None,
            elapsed_ms: None,
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("semantics: {}\nclass: {}\nquery: {}\n", self.semantics, self.class, self.query);
        if let Some(e) = &self.evidence {
            out.push_str(&format!("evidence: {e}\n"));
        }
        match &self.result {
            Answer::Interval { lower, upper } => {
                out.push_str(&format!("lower: {lower}\nupper: {upper}\n"));
            }
            Answer::Point { probability } => out.push_str(&format!("probability: {probability}\n")),
            Answer::Undefined => out.push_str("result: undefined (evidence has probability zero)\n"),
        }
        if let Some(d) = self.decision {
            out.push_str(&format!("decision: {d}\n"));
        }
        out.push_str(&format!("choices: {}\nmodels: {}\n", self.choices, self.models));
        if let Some(c) = self.cross_check {
            out.push_str(&format!("cross-check: {c}\n"));
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("time: {ms:.3} ms\n"));
        }
        out
    }
}
