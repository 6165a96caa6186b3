//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use char3::exactfield::{artin_schreier_solve, Gf3, MPoly, Monomial, RatFunc};
use char3::katomilne::{artin_schreier_image, d, dlog, wedge, SymbolForm};
use char3::linalg::berkowitz;
use char3::linkage::{
    build_certificate_with, construct_inseparable_subfield, verify_certificate, verify_slot,
    BuildOptions, BuildOutcome, Construction, DegenerateReason, LinkageCertificate, NormWitness,
};
use char3::symbolalg::{char_forms, reduced_norm, reduced_sigma, reduced_trace};
use char3::syntax::Vars;
use char3::valuation::{
    fundamental_inequality_check, morandi_check, symbol_value_group, x_adic, Asserted,
    InequalityClass, MorandiConclusion, MorandiEvidence, ValueGroup, XAdicValue,
};
use char3::{Algebra, Elem, Field, SymbolAlgebra};
use num_traits::{One, Zero};

use common::*;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cayley_hamilton() -> Check {
    let alg = ab_algebra();
    let mut rng = rng(1);
    for i in 0..1000 {
        let a = rand_elem(&mut rng, &alg, 2);
        let f = char_forms(&a).map_err(|e| format!("sample {i}: {e}"))?;
        ensure(f.cayley_hamilton_residual(&a).is_zero(), || {
            format!("sample {i}: a^3 - Tr a^2 - sigma a - N != 0")
        })?;
        ensure(
            f.tr == reduced_trace(&a) && f.sigma == reduced_sigma(&a),
            || format!("sample {i}: fast Tr/sigma disagree with the regular representation"),
        )?;
    }
    Ok("1000 elements, coefficient degree <= 2".into())
}

fn frobenius_shape() -> Check {
    let alg = ab_algebra();
    let mut rng = rng(2);
    for i in 0..200 {
        let a = rand_elem(&mut rng, &alg, 2);
        let cp = berkowitz(&alg.regular_rep(&a));
        for (k, c) in cp.iter().enumerate() {
            ensure(k % 3 == 0 || c.is_zero(), || {
                format!("sample {i}: nonzero coefficient at t^{}", 9 - k)
            })?;
        }
        let f = char_forms(&a).map_err(|e| format!("sample {i}: {e}"))?;
        let cube = |s: &RatFunc| -(s.clone() * s.clone() * s.clone());
        ensure(
            cp[3] == cube(&f.tr) && cp[6] == cube(&f.sigma) && cp[9] == cube(&f.norm),
            || format!("sample {i}: coefficients are not -Tr^3, -sigma^3, -N^3"),
        )?;
    }
    Ok("200 elements, support {9,6,3,0}, cube coefficients".into())
}

fn multiplicativity() -> Check {
    let alg = ab_algebra();
    let mut rng = rng(3);
    for i in 0..500 {
        let a = rand_elem(&mut rng, &alg, 1);
        let b = rand_elem(&mut rng, &alg, 1);
        let ab = &a * &b;
        let ba = &b * &a;
        let n = |e: &Elem| reduced_norm(e).map_err(|err| format!("pair {i}: {err}"));
        ensure(n(&ab)? == n(&a)? * n(&b)?, || {
            format!("pair {i}: N(ab) != N(a)N(b)")
        })?;
        ensure(reduced_trace(&ab) == reduced_trace(&ba), || {
            format!("pair {i}: Tr(ab) != Tr(ba)")
        })?;
    }
    Ok("500 pairs".into())
}

fn univariate_polys(max_deg: usize) -> Vec<MPoly> {
    let count = 3usize.pow(max_deg as u32 + 1);
    (0..count)
        .map(|mut code| {
            let mut terms = Vec::new();
            for e in 0..=max_deg {
                let c = code % 3;
                code /= 3;
                if c != 0 {
                    terms.push((
                        Monomial::from_exps(&[e as u32]).unwrap(),
                        Gf3::new(c as i64),
                    ));
                }
            }
            MPoly::from_terms(terms)
        })
        .collect()
}

fn univariate_ratfuncs(max_deg: usize) -> Vec<RatFunc> {
    let polys = univariate_polys(max_deg);
    let mut out = Vec::new();
    for n in &polys {
        for den in polys.iter().filter(|p| !p.is_empty()) {
            let f = RatFunc::new(n.clone(), den.clone()).unwrap();
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out
}

fn artin_schreier_oracle() -> Check {
    let inputs = univariate_ratfuncs(2);
    // any preimage of an input of degree <= 2 has degree <= 2 as well
    let image: Vec<RatFunc> = univariate_ratfuncs(2)
        .into_iter()
        .map(|m| m.clone() * m.clone() * m.clone() - m)
        .collect();
    for f in &inputs {
        let brute = image.contains(f);
        match artin_schreier_solve(f) {
            Some(m) => {
                ensure(m.clone() * m.clone() * m.clone() - m == *f, || {
                    format!("solution for {f:?} does not satisfy m^3 - m = f")
                })?;
                ensure(brute, || {
                    format!("{f:?} solved but absent from the enumeration")
                })?;
            }
            None => ensure(!brute, || {
                format!("{f:?} is in the image but was not solved")
            })?,
        }
    }
    Ok(format!("{} distinct inputs, all agree", inputs.len()))
}

/// Witnesses `r` with coefficient degree <= 1 whose norm is a nonzero non-cube.
fn random_witnesses(alg: &Algebra, count: usize, stream: u64) -> Vec<(Elem, RatFunc)> {
    let mut rng = rng(stream);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r = rand_elem(&mut rng, alg, 1);
        let gamma = reduced_norm(&r).expect("norm");
        if !gamma.is_zero() && gamma.cube_root().is_none() {
            out.push((r, gamma));
        }
    }
    out
}

const PIPELINE_CASES: usize = 50;

fn pipeline() -> Check {
    let alg = ab_algebra();
    let (mut slots, mut degenerate) = (0, 0);
    for (i, (r, gamma)) in random_witnesses(&alg, PIPELINE_CASES, 5)
        .into_iter()
        .enumerate()
    {
        let witness = NormWitness::new(r, gamma).map_err(|e| format!("case {i}: {e}"))?;
        match construct_inseparable_subfield(&witness).map_err(|e| format!("case {i}: {e}"))? {
            Construction::Slot(slot) => {
                let report = verify_slot(&witness, &slot);
                ensure(report.is_verified(), || {
                    format!("case {i}:\n{}", report.render())
                })?;
                slots += 1;
            }
            Construction::Degenerate(dg) => {
                ensure(
                    matches!(
                        dg.reason,
                        DegenerateReason::Central {
                            norm_confirmed: true,
                            ..
                        } | DegenerateReason::CubeInE { .. }
                    ),
                    || format!("case {i}: degenerate scalar not confirmed: {:?}", dg.reason),
                )?;
                degenerate += 1;
            }
        }
    }
    Ok(format!(
        "{slots} verified slots, {degenerate} confirmed degenerate"
    ))
}

fn certificates(count: usize) -> Result<Vec<LinkageCertificate>, String> {
    let alg = ab_algebra();
    let options = BuildOptions { complement: false };
    let mut out = Vec::new();
    for (i, (r, gamma)) in random_witnesses(&alg, count, 5).into_iter().enumerate() {
        match build_certificate_with(alg.alpha(), alg.beta(), &gamma, &r, options)
            .map_err(|e| format!("case {i}: {e}"))?
        {
            BuildOutcome::Certificate(c) => out.push(*c),
            BuildOutcome::Degenerate(_) => {}
        }
    }
    Ok(out)
}

fn hand_cases() -> Result<(), String> {
    let alg = ab_algebra();
    let (a, b) = (alg.alpha().clone(), alg.beta().clone());
    match build_certificate_with(&a, &b, &b, &alg.y(), BuildOptions::default()) {
        Ok(BuildOutcome::Certificate(c)) => {
            ensure(c.e_datum.is_none(), || "r = y: E is not F".into())?;
            ensure(c.lambda.is_one(), || "r = y: lambda != 1".into())?;
            let z = Vars::default().render_elem_e(&c.z);
            ensure(z == "elem[0,1,0;0,0,0;0,0,0]", || format!("r = y: z = {z}"))?;
            ensure(verify_certificate(&c).is_verified(), || {
                "r = y: not verified".into()
            })?;
        }
        other => return Err(format!("r = y: expected a certificate, got {other:?}")),
    }
    match build_certificate_with(&a, &b, &a, &alg.x(), BuildOptions::default()) {
        Ok(BuildOutcome::Degenerate(_)) => Ok(()),
        other => Err(format!("r = x: expected Degenerate, got {other:?}")),
    }
}

fn cross_check() -> Check {
    hand_cases()?;
    let certs = certificates(PIPELINE_CASES)?;
    for (i, c) in certs.iter().enumerate() {
        ensure(c.w.pow(3) == c.w.algebra().scalar(c.zc.clone()), || {
            format!("certificate {i}: w^3 != z^3")
        })?;
        let report = verify_certificate(c);
        ensure(report.is_verified(), || {
            format!("certificate {i}:\n{}", report.render())
        })?;
    }
    Ok(format!(
        "{} certificates verified, hand cases reproduced",
        certs.len()
    ))
}

fn complements() -> Check {
    let certs = certificates(20)?;
    ensure(certs.len() == 20, || {
        format!("only {} certificates", certs.len())
    })?;
    for (i, c) in certs.into_iter().enumerate() {
        let c = c
            .with_complement()
            .map_err(|e| format!("certificate {i}: {e}"))?;
        ensure(c.complement.is_some(), || {
            format!("certificate {i}: no complement")
        })?;
        ensure(c.z.pow(3) == c.z.algebra().scalar(c.zc.clone()), || {
            format!("certificate {i}: z^3 not central")
        })?;
        // the u relations are checked on a denominator-free multiple of u
        let report = verify_certificate(&c);
        ensure(report.is_verified(), || {
            format!("certificate {i}:\n{}", report.render())
        })?;
        for label in ["u^3 - u = delta", "z*u*z^-1 = u + 1"] {
            ensure(
                report
                    .transcript
                    .iter()
                    .any(|l| l.starts_with("ok") && l.ends_with(label)),
                || format!("certificate {i}: {label} not checked"),
            )?;
        }
    }
    Ok("20 complements satisfy all three relations".into())
}

fn kato_milne() -> Check {
    let mut rng = rng(8);
    for i in 0..200 {
        let f = rand_ratfunc(&mut rng, 2, 2);
        let g = loop {
            let g = rand_ratfunc(&mut rng, 2, 2);
            if !g.is_zero() {
                break g;
            }
        };
        let h = loop {
            let h = rand_ratfunc(&mut rng, 2, 2);
            if !h.is_zero() {
                break h;
            }
        };
        ensure(d(&f).exterior_d().is_zero(), || {
            format!("sample {i}: d(d f) != 0")
        })?;
        let gh = g.clone() * h.clone();
        let sum = dlog(&g).unwrap().add(&dlog(&h).unwrap());
        ensure(dlog(&gh).unwrap() == sum, || {
            format!("sample {i}: dlog not additive")
        })?;
        let omega = dlog(&g).unwrap().scale(&f);
        ensure(wedge(&omega, &omega).is_zero(), || {
            format!("sample {i}: omega ^ omega != 0")
        })?;
        let s = SymbolForm::new(f.clone(), vec![g.clone(), h.clone()]).unwrap();
        let wp = f.clone() * f.clone() * f.clone() - f.clone();
        let expected = SymbolForm::new(wp, vec![g, h]).unwrap().expand();
        ensure(artin_schreier_image(&s) == expected, || {
            format!("sample {i}: wp image differs from (a^3 - a) dlog b ^ dlog c")
        })?;
    }
    Ok("200 samples per identity".into())
}

fn valuations() -> Check {
    let mut rng = rng(9);
    for i in 0..500 {
        let f = rand_ratfunc(&mut rng, 2, 3);
        let g = rand_ratfunc(&mut rng, 2, 3);
        let (vf, vg) = (x_adic(&f, 0), x_adic(&g, 0));
        let vfg = x_adic(&(f.clone() * g.clone()), 0);
        let vsum = x_adic(&(f.clone() + g.clone()), 0);
        match (vf.finite(), vg.finite()) {
            (Some(p), Some(q)) => {
                ensure(vfg.finite() == Some(p + q), || {
                    format!("pair {i}: v(fg) != v(f)+v(g)")
                })?;
                let min = p.min(q);
                match vsum.finite() {
                    Some(s) => {
                        ensure(s >= min, || format!("pair {i}: v(f+g) < min"))?;
                        ensure(p == q || s == min, || {
                            format!("pair {i}: strict case fails")
                        })?;
                    }
                    None => ensure(p == q, || format!("pair {i}: f + g = 0 with v(f) != v(g)"))?,
                }
            }
            _ => ensure(vfg == XAdicValue::Infinity, || {
                format!("pair {i}: v(0 g) finite")
            })?,
        }
    }
    let group = |alpha: RatFunc, beta: RatFunc| {
        let alg = SymbolAlgebra::new(alpha, beta).map_err(|e| e.to_string())?;
        symbol_value_group(&alg, 0)
            .map(|s| s.group)
            .map_err(|e| e.to_string())
    };
    let (x, b) = (RatFunc::var(0), RatFunc::var(1));
    let z = ValueGroup::new(1, 1).unwrap();
    let third = ValueGroup::new(1, 3).unwrap();
    let delta = b.clone() + RatFunc::one();
    ensure(group(delta.clone(), b.clone())? == z, || {
        "[b+1, b) is not Z".into()
    })?;
    ensure(group(b.clone(), x.clone())? == third, || {
        "[gamma, x) is not (1/3)Z".into()
    })?;
    ensure(group(x.inv().unwrap(), delta)? == third, || {
        "[1/x, delta) is not (1/3)Z".into()
    })?;
    let ev = |gd, ge, gf| MorandiEvidence {
        defectless: Asserted::yes("value group and residue degrees"),
        residue_division: Asserted::yes("residue fields are linearly disjoint"),
        gd,
        ge,
        gf,
    };
    ensure(
        morandi_check(&ev(z, third, z)) == MorandiConclusion::DivisionConditional,
        || "Z, (1/3)Z, Z not accepted".into(),
    )?;
    ensure(
        matches!(
            morandi_check(&ev(third, third, z)),
            MorandiConclusion::Condition3Fails { .. }
        ),
        || "(1/3)Z, (1/3)Z not rejected".into(),
    )?;
    for (f, e, n) in [(9, 1, 9), (3, 3, 9)] {
        ensure(
            fundamental_inequality_check(f, e, n) == Ok(InequalityClass::Defectless),
            || format!("({f},{e},{n}) not defectless"),
        )?;
    }
    Ok("500 pairs, value groups, Morandi and inequality cases".into())
}

/// Certificate texts and verification reports for a fixed subset, as bytes.
fn transcript() -> Result<String, String> {
    let vars = Vars::default();
    let mut out = String::new();
    for (i, c) in certificates(6)?.into_iter().enumerate() {
        let c = if i < 2 {
            c.with_complement().map_err(|e| e.to_string())?
        } else {
            c
        };
        out.push_str(&c.to_text(&vars));
        out.push_str(&verify_certificate(&c).render());
    }
    let alg = ab_algebra();
    if let Ok(BuildOutcome::Degenerate(dg)) = build_certificate_with(
        alg.alpha(),
        alg.beta(),
        alg.alpha(),
        &alg.x(),
        BuildOptions::default(),
    ) {
        out.push_str(&dg.to_text(&vars));
    }
    let mut rng = rng(1);
    for _ in 0..50 {
        let f = char_forms(&rand_elem(&mut rng, &alg, 2)).map_err(|e| e.to_string())?;
        out.push_str(&format!(
            "{}|{}|{}\n",
            vars.render(&f.tr),
            vars.render(&f.sigma),
            vars.render(&f.norm)
        ));
    }
    Ok(out)
}

fn determinism() -> Check {
    let first = transcript()?;
    let second = transcript()?;
    ensure(first == second, || "transcripts differ between runs".into())?;
    ensure(first.contains("verdict: verified"), || {
        "no verified report in transcript".into()
    })?;
    Ok(format!("{} identical bytes over two runs", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Cayley-Hamilton", cayley_hamilton),
        ("Frobenius-twist shape", frobenius_shape),
        ("norm multiplicativity, trace symmetry", multiplicativity),
        ("Artin-Schreier oracle", artin_schreier_oracle),
        ("inseparable slot pipeline", pipeline),
        ("w^3 = z^3 and certificate verification", cross_check),
        ("separable complement", complements),
        ("Kato-Milne identities", kato_milne),
        ("valuation suite", valuations),
        ("determinism", determinism),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let n = n + 1;
        if !filter.is_empty() && !filter.iter().any(|f| f == &n.to_string()) {
            continue;
        }
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {why} ({secs:.1}s)");
            }
        }
    }
    panic::set_hook(hook);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
