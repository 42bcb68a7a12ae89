use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// Everything a command prints. Status is 0 iff every check passed.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<String>,
    pub checks: Vec<Check>,
    pub data: Value,
    #[serde(skip)]
    pub dot: Option<String>,
}

impl RunReport {
    pub fn new(command: &str, inputs: &[String]) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: inputs.to_vec(),
            checks: Vec::new(),
            data: Value::Null,
            dot: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            witness: None,
        });
    }

    pub fn check_with(&mut self, name: impl Into<String>, pass: bool, witness: impl Serialize) {
        let witness = if pass { None } else { serde_json::to_value(witness).ok() };
        self.checks.push(Check {
            name: name.into(),
            pass,
            witness,
        });
    }

    pub fn status(&self) -> i32 {
        if self.checks.iter().all(|c| c.pass) {
            0
        } else {
            1
        }
    }

    pub fn json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            report: &'a RunReport,
            status: i32,
        }
        serde_json::to_string_pretty(&Out {
            report: self,
            status: self.status(),
        })
        .expect("reports serialize")
    }

    pub fn text(&self) -> String {
        let mut s = format!("{} {}\n", self.command, self.inputs.join(" "));
        for c in &self.checks {
            s.push_str(if c.pass { "PASS " } else { "FAIL " });
            s.push_str(&c.name);
            if let Some(w) = &c.witness {
                s.push_str(&format!("  witness: {w}"));
            }
            s.push('\n');
        }
        match &self.data {
            Value::Null => {}
            Value::Object(m) => {
                for (k, v) in m {
                    s.push_str(&format!("{k}: {v}\n"));
                }
            }
            v => s.push_str(&format!("{v}\n")),
        }
        s.push_str(&format!("status {}\n", self.status()));
        s
    }
}
