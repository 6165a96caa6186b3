use num_traits::Zero;

use crate::exactfield::{Gf3, MPoly, Monomial, RatFunc};
use crate::field::Field;
use crate::katomilne::{DiffForm, SymbolForm};
use crate::symbolalg::AlgElem;
use crate::EElem;

use super::Vars;

fn render_monomial(vars: &Vars, m: &Monomial) -> String {
    let exps = m.exps();
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{e}", vars.name(i))),
        }
    }
    parts.join("*")
}

fn render_term(vars: &Vars, m: &Monomial, c: Gf3) -> String {
    if m.is_one() {
        return c.value().to_string();
    }
    let mono = render_monomial(vars, m);
    if c == Gf3::ONE {
        mono
    } else {
        format!("{}*{mono}", c.value())
    }
}

pub(super) fn render_poly(vars: &Vars, p: &MPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .iter()
        .map(|(m, c)| render_term(vars, m, *c))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// A factor that binds tighter than `/`: one term with at most one variable.
fn is_atomic(p: &MPoly) -> bool {
    match p.terms() {
        [(m, c)] => *c == Gf3::ONE && m.exps().iter().filter(|&&e| e > 0).count() <= 1,
        _ => false,
    }
}

pub(super) fn render_ratfunc(vars: &Vars, f: &RatFunc) -> String {
    let num = render_poly(vars, f.num());
    if f.den().is_one() {
        return num;
    }
    let num = if f.num().len() > 1 {
        format!("({num})")
    } else {
        num
    };
    let den = render_poly(vars, f.den());
    if is_atomic(f.den()) {
        format!("{num}/{den}")
    } else {
        format!("{num}/({den})")
    }
}

pub(super) fn render_e(vars: &Vars, e: &EElem) -> String {
    if e.c1().is_zero() {
        render_ratfunc(vars, e.c0())
    } else {
        format!(
            "quad[{}, {}]",
            render_ratfunc(vars, e.c0()),
            render_ratfunc(vars, e.c1())
        )
    }
}

pub(super) fn render_grid<S: Field>(a: &AlgElem<S>, entry: impl Fn(&S) -> String) -> String {
    let rows: Vec<String> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| entry(a.get(i, j)))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!("elem[{}]", rows.join(";"))
}

/// Terms `f * d(v1)^d(v2)`, joined by ` + `.
pub fn render_form(vars: &Vars, w: &DiffForm<RatFunc>) -> String {
    if w.is_zero() {
        return "0".into();
    }
    w.terms()
        .map(|(idx, f)| {
            let coeff = render_ratfunc(vars, f);
            if idx.is_empty() {
                return coeff;
            }
            let ds: Vec<String> = idx
                .iter()
                .map(|&v| format!("d({})", vars.name(v)))
                .collect();
            format!("({coeff}) * {}", ds.join("^"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn render_symbol_form(vars: &Vars, s: &SymbolForm) -> String {
    let bs: Vec<String> = s.bs().iter().map(|b| render_ratfunc(vars, b)).collect();
    if bs.is_empty() {
        format!("form({})", render_ratfunc(vars, s.a()))
    } else {
        format!("form({}; {})", render_ratfunc(vars, s.a()), bs.join(", "))
    }
}
