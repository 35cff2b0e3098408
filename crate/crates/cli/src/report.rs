use toml::{Table, Value};

/// A result document: named values in insertion order followed by the list
/// of verifications and their outcome.
#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    fields: Table,
    checks: Vec<(String, bool)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), fields: Table::new(), checks: Vec::new() }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_owned(), value.into());
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push((name.into(), passed));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.clone()).collect()
    }

    pub fn to_table(&self) -> Table {
        let mut doc = Table::new();
        doc.insert("command".into(), Value::String(self.command.clone()));
        doc.insert("status".into(), Value::String(if self.passed() { "pass" } else { "fail" }.into()));
        let (plain, nested): (Vec<_>, Vec<_>) = self.fields.iter().partition(|(_, v)| !v.is_table());
        for (k, v) in plain {
            doc.insert(k.clone(), v.clone());
        }
        let summary = self
            .checks
            .iter()
            .map(|(n, ok)| Value::String(format!("{n}: {}", if *ok { "pass" } else { "fail" })))
            .collect();
        doc.insert("summary".into(), Value::Array(summary));
        doc.insert(
            "failures".into(),
            Value::Array(self.failures().into_iter().map(Value::String).collect()),
        );
        for (k, v) in nested {
            doc.insert(k.clone(), v.clone());
        }
        doc
    }

    pub fn render(&self) -> String {
        toml::to_string(&self.to_table()).expect("documents contain only finite values")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_in_insertion_order() {
        let mut r = Report::new("demo");
        r.set("b", 1);
        r.set("a", "x");
        let mut inner = Table::new();
        inner.insert("k".into(), Value::Boolean(true));
        r.set("objects", inner);
        r.check("first", true);
        r.check("second", false);
        let text = r.render();
        let keys: Vec<&str> = text.lines().filter_map(|l| l.split(" = ").next()).collect();
        assert_eq!(&keys[..6], ["command", "status", "b", "a", "summary", "failures"]);
        assert!(text.contains("[objects]"));
        assert!(!r.passed());
        let parsed: Table = text.parse().unwrap();
        assert_eq!(parsed["failures"], Value::Array(vec![Value::String("second".into())]));
    }
}
