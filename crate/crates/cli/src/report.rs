use polycover::Error;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
    pub output: Value,
    /// Raw text printed instead of the table in human mode.
    #[serde(skip)]
    pub text: Option<String>,
}

pub fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

impl RunReport {
    pub fn new(command: &str, output: Value) -> Self {
        RunReport {
            command: command.to_string(),
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            output,
            text: None,
        }
    }

    /// Passes when `holds`; otherwise fails with the given witnesses, or a
    /// generic one if there are none.
    pub fn verdict(mut self, holds: bool, witnesses: Vec<Value>) -> Self {
        if holds {
            self.verdict = Verdict::Pass;
        } else {
            self.verdict = Verdict::Fail;
            self.witnesses = if witnesses.is_empty() {
                vec![json!({ "reason": "property does not hold" })]
            } else {
                witnesses
            };
        }
        self
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    pub fn from_error(command: &str, err: &Error) -> Self {
        match failure_witness(err) {
            Some(witness) => RunReport {
                command: command.to_string(),
                verdict: Verdict::Fail,
                witnesses: vec![witness],
                output: json!({ "message": err.to_string() }),
                text: None,
            },
            None => RunReport {
                command: command.to_string(),
                verdict: Verdict::Error,
                witnesses: Vec::new(),
                output: json!({ "error": err.to_string() }),
                text: None,
            },
        }
    }

    pub fn machine(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn human(&self) -> String {
        if let Some(text) = &self.text {
            return text.clone();
        }
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        };
        let mut out = format!("{}: {verdict}\n", self.command);
        if let Value::Object(fields) = &self.output {
            let width = fields.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in fields {
                out.push_str(&format!("  {k:<width$}  {}\n", cell(v)));
            }
        } else {
            out.push_str(&format!("  {}\n", cell(&self.output)));
        }
        if !self.witnesses.is_empty() {
            out.push_str("witnesses:\n");
            for w in &self.witnesses {
                out.push_str(&format!("  - {}\n", cell(w)));
            }
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Null => Some("-".into()),
        _ => None,
    }
}

fn cell(v: &Value) -> String {
    if let Some(s) = scalar(v) {
        return s;
    }
    match v {
        Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        }
        Value::Object(map) if map.values().all(|i| scalar(i).is_some()) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v).unwrap()))
            .collect::<Vec<_>>()
            .join(" "),
        _ => v.to_string(),
    }
}

/// Library errors that report a failed property rather than bad input.
fn failure_witness(err: &Error) -> Option<Value> {
    Some(match err {
        Error::NotCombinatorial(w) | Error::CorestrictionNotCombinatorial(w) => to_value(w),
        Error::NotBalancedInput(v) => to_value(v),
        Error::NotMonotone { lower, upper } => json!({ "lower": lower, "upper": upper }),
        Error::NotGraded { lower, upper, .. } => json!({ "lower": lower, "upper": upper }),
        Error::MaxElementsUncovered(e) => json!({ "element": e }),
        Error::NoLiftExists { from, target } => json!({ "from": from, "target": target }),
        Error::RefinementNotCombinatorial(e) => json!({ "element": e }),
        Error::TheoremViolation(m) => json!({ "message": m }),
        _ => return None,
    })
}
