use std::collections::BTreeMap;

use elemdiv::algebra::Ring;
use elemdiv::{Mat, Poly};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Output of one command: human lines plus the machine-readable record.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub kind: String,
    pub input_digest: String,
    pub invariants: BTreeMap<String, Value>,
    /// Row-major entry strings.
    pub transforms: BTreeMap<String, Vec<Vec<String>>>,
    pub verified: bool,
    #[serde(skip)]
    lines: Vec<String>,
    #[serde(skip)]
    human_transforms: Vec<(String, String)>,
}

/// SHA-256 over the command name and each input, NUL-separated.
pub fn digest(kind: &str, parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    h.update(kind.as_bytes());
    for p in parts {
        h.update([0u8]);
        h.update(p);
    }
    hex::encode(h.finalize())
}

pub fn cells<R: Ring>(m: &Mat<R>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

/// Polynomial entries with `x` for the variable.
pub fn poly_cells<R: Ring>(m: &Mat<Poly<R>>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|p| p.render("x", false)).collect())
        .collect()
}

impl Report {
    pub fn new(kind: &str, input_digest: String) -> Self {
        Report {
            kind: kind.to_string(),
            input_digest,
            invariants: BTreeMap::new(),
            transforms: BTreeMap::new(),
            verified: false,
            lines: Vec::new(),
            human_transforms: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    pub fn invariant(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("serializable invariant");
        self.invariants.insert(key.to_string(), v);
    }

    pub fn transform<R: Ring>(&mut self, key: &str, m: &Mat<R>) {
        self.transforms.insert(key.to_string(), cells(m));
        self.human_transforms.push((key.to_string(), m.to_string()));
    }

    pub fn poly_transform<R: Ring>(&mut self, key: &str, m: &Mat<Poly<R>>) {
        self.transforms.insert(key.to_string(), poly_cells(m));
        self.human_transforms.push((key.to_string(), m.to_string()));
    }

    /// Drops every transform, for `--no-transform`.
    pub fn strip_transforms(&mut self) {
        self.transforms.clear();
        self.human_transforms.clear();
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("report serializes");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for (name, text) in &self.human_transforms {
            out.push_str(&format!("{name} =\n{text}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use elemdiv::{qmat, qpoly};

    #[test]
    fn digest_is_stable() {
        let a = digest("eldiv", &[b"FIELD Q"]);
        assert_eq!(a, digest("eldiv", &[b"FIELD Q"]));
        assert_ne!(a, digest("jordan", &[b"FIELD Q"]));
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn json_shape() {
        let mut r = Report::new("demo", "00".into());
        r.invariant("size", 2);
        r.transform("T", &qmat(&[&[1, -1], &[0, 2]]));
        r.poly_transform("U", &Mat::from_rows((), vec![vec![qpoly(&[-2, 1])]]).unwrap());
        r.verified = true;
        let v: Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(v["kind"], "demo");
        assert_eq!(v["transforms"]["T"][0][1], "-1");
        assert_eq!(v["transforms"]["U"][0][0], "x - 2");
        assert_eq!(v["verified"], true);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["input_digest", "invariants", "kind", "transforms", "verified"]);
        r.strip_transforms();
        assert!(r.transforms.is_empty());
    }
}
