//! Text form of certificates and degenerate reports.
//!
//! ```text
//! char3-linkage-cert v1
//! vars = a,b
//! [witness]
//! alpha = a
//! ...
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactfield::RatFunc;
use crate::symbolalg::SymbolAlgebra;
use crate::syntax::{
    parse_e, parse_elem, parse_elem_e, parse_l, parse_ratfunc, parse_raw_descriptor, Vars,
};
use crate::towers::ExtKind;

use super::certificate::{Complement, LinkageCertificate};
use super::construct::{algebra_over_e, Degenerate, DegenerateReason};

pub const CERT_VERSION: &str = "char3-linkage-cert v1";

const SECTIONS: [(&str, &[&str]); 4] = [
    ("witness", &["alpha", "beta", "gamma", "r"]),
    ("slot", &["E", "lambda", "z", "z3"]),
    ("cross", &["w"]),
    ("complement", &["u", "delta"]),
];

impl LinkageCertificate {
    pub fn to_text(&self, vars: &Vars) -> String {
        let mut out = format!("{CERT_VERSION}\nvars = {}\n", vars.spec());
        let e = match &self.e_datum {
            None => "trivial".to_string(),
            Some(d) => format!("quad(d={})", vars.render(d)),
        };
        out.push_str("[witness]\n");
        out.push_str(&format!("alpha = {}\n", vars.render(&self.alpha)));
        out.push_str(&format!("beta = {}\n", vars.render(&self.beta)));
        out.push_str(&format!("gamma = {}\n", vars.render(&self.gamma)));
        out.push_str(&format!("r = {}\n", vars.render_elem(&self.r)));
        out.push_str("[slot]\n");
        out.push_str(&format!("E = {e}\n"));
        out.push_str(&format!("lambda = {}\n", vars.render_l(&self.lambda)));
        out.push_str(&format!("z = {}\n", vars.render_elem_e(&self.z)));
        out.push_str(&format!("z3 = {}\n", vars.render_e(&self.zc)));
        out.push_str("[cross]\n");
        out.push_str(&format!("w = {}\n", vars.render_elem_e(&self.w)));
        if let Some(c) = &self.complement {
            out.push_str("[complement]\n");
            out.push_str(&format!("u = {}\n", vars.render_elem_e(&c.u)));
            out.push_str(&format!("delta = {}\n", vars.render_e(&c.delta)));
        }
        out
    }

    /// Parses a certificate without validating its mathematical claims; the
    /// quadratic datum in particular is taken as written.
    pub fn from_text(text: &str) -> Result<(Self, Vars)> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some((_, l)) if l == CERT_VERSION => {}
            Some((_, l)) => return Err(Error::Format(format!("unsupported version line {l:?}"))),
            None => return Err(Error::Format("empty certificate".into())),
        }
        let mut vars = None;
        let mut section: Option<&str> = None;
        let mut fields: BTreeMap<(&str, &str), (usize, &str)> = BTreeMap::new();
        for (no, line) in lines {
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let Some((known, _)) = SECTIONS.iter().find(|(s, _)| *s == name) else {
                    return Err(Error::Format(format!(
                        "line {}: unknown section [{name}]",
                        no + 1
                    )));
                };
                section = Some(known);
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Format(format!(
                    "line {}: expected key = value",
                    no + 1
                )));
            };
            let (key, value) = (key.trim(), value.trim());
            match section {
                None if key == "vars" => vars = Some(Vars::parse(value)?),
                None => {
                    return Err(Error::Format(format!(
                        "line {}: {key} outside a section",
                        no + 1
                    )))
                }
                Some(s) => {
                    let keys = SECTIONS.iter().find(|(n, _)| *n == s).expect("known").1;
                    let Some(k) = keys.iter().find(|k| **k == key) else {
                        return Err(Error::Format(format!(
                            "line {}: unknown key {key} in [{s}]",
                            no + 1
                        )));
                    };
                    if fields.insert((s, k), (no + 1, value)).is_some() {
                        return Err(Error::Format(format!(
                            "line {}: duplicate key {key}",
                            no + 1
                        )));
                    }
                }
            }
        }
        let vars = vars.unwrap_or_default();
        let get = |s: &str, k: &str| -> Result<(usize, &str)> {
            fields
                .get(&(s, k))
                .copied()
                .ok_or_else(|| Error::Format(format!("missing {k} in [{s}]")))
        };
        let located = |line: usize, e: Error| match e {
            Error::Syntax { column, message } => {
                Error::Format(format!("line {line}, column {column}: {message}"))
            }
            other => other,
        };
        let field = |s: &str, k: &str| -> Result<RatFunc> {
            let (line, v) = get(s, k)?;
            parse_ratfunc(v, &vars).map_err(|e| located(line, e))
        };

        let alpha = field("witness", "alpha")?;
        let beta = field("witness", "beta")?;
        let gamma = field("witness", "gamma")?;
        let alg = SymbolAlgebra::new(alpha.clone(), beta.clone())?;
        let (line, text_r) = get("witness", "r")?;
        let r = parse_elem(text_r, &vars, &alg).map_err(|e| located(line, e))?;

        let (line, text_e) = get("slot", "E")?;
        let raw = parse_raw_descriptor(text_e, &vars).map_err(|e| located(line, e))?;
        let e_datum = match (&raw.kind, &raw.base) {
            (ExtKind::Trivial, None) => None,
            (ExtKind::Quadratic(d), None) => Some(d.clone()),
            _ => {
                return Err(Error::Format(format!(
                    "line {line}: E must be trivial or quad(d=..)"
                )))
            }
        };
        let d = e_datum.clone().map(Arc::new);
        let d = d.as_ref();
        let alg_e = algebra_over_e(&alpha, &beta, d)?;
        let alg_b = algebra_over_e(&alpha, &gamma, d)?;

        let (line, text) = get("slot", "lambda")?;
        let lambda = parse_l(text, &vars, alg_e.k_modulus(), d).map_err(|e| located(line, e))?;
        let (line, text) = get("slot", "z")?;
        let z = parse_elem_e(text, &vars, &alg_e, d).map_err(|e| located(line, e))?;
        let (line, text) = get("slot", "z3")?;
        let zc = parse_e(text, &vars, d).map_err(|e| located(line, e))?;
        let (line, text) = get("cross", "w")?;
        let w = parse_elem_e(text, &vars, &alg_b, d).map_err(|e| located(line, e))?;

        let has_u = fields.contains_key(&("complement", "u"));
        let has_delta = fields.contains_key(&("complement", "delta"));
        let complement = match (has_u, has_delta) {
            (false, false) => None,
            (true, true) => {
                let (line, text) = get("complement", "u")?;
                let u = parse_elem_e(text, &vars, &alg_e, d).map_err(|e| located(line, e))?;
                let (line, text) = get("complement", "delta")?;
                let delta = parse_e(text, &vars, d).map_err(|e| located(line, e))?;
                Some(Complement { u, delta })
            }
            _ => return Err(Error::Format("[complement] needs both u and delta".into())),
        };

        Ok((
            LinkageCertificate {
                alpha,
                beta,
                gamma,
                r,
                e_datum,
                lambda,
                z,
                zc,
                w,
                complement,
            },
            vars,
        ))
    }
}

impl Degenerate {
    pub fn to_text(&self, vars: &Vars) -> String {
        let mut out = String::from("degenerate\n");
        out.push_str(&format!("E = {}\n", vars.render_descriptor(&self.ext)));
        out.push_str(&format!("lambda = {}\n", vars.render_l(&self.lambda)));
        match &self.reason {
            DegenerateReason::Central {
                scalar,
                norm_confirmed,
            } => {
                out.push_str(&format!("z = {} (central)\n", vars.render_e(scalar)));
                out.push_str(&format!(
                    "gamma = N(z/lambda): {}\n",
                    if *norm_confirmed {
                        "confirmed"
                    } else {
                        "not confirmed"
                    }
                ));
            }
            DegenerateReason::CubeInE { root } => {
                out.push_str(&format!(
                    "z^3 = ({})^3 is a cube in E\n",
                    vars.render_e(root)
                ));
            }
        }
        out.push_str(&format!("candidates tried = {}\n", self.attempts));
        out
    }
}
