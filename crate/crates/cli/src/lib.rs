//! Command-line front end: parses literals in the shared grammar, runs one
//! operation and returns an exit status with a deterministic report.

use std::fmt::Write as _;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;

use char3::error::Error;
use char3::katomilne::{artin_schreier_image, symbol_to_algebra, triviality_by_witness};
use char3::linkage::{
    build_certificate_with, verify_certificate, BuildOptions, BuildOutcome, LinkageCertificate,
};
use char3::symbolalg::{char_forms, inverse, SymbolAlgebra, Verdict};
use char3::syntax::{
    parse_algebra, parse_elem, parse_ratfunc, parse_symbol_form, render_form, render_symbol_form,
    Vars,
};
use char3::valuation::{
    fundamental_inequality_check, morandi_check, symbol_value_group, x_adic, Asserted,
    InequalityClass, MorandiConclusion, MorandiEvidence, ValueGroup,
};
use char3::Algebra;
use clap::{ArgGroup, Args, Parser, Subcommand};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    Refuted,
    Degenerate,
    Invalid,
    BudgetExceeded,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::Refuted => 1,
            Status::Degenerate => 2,
            Status::Invalid => 3,
            Status::BudgetExceeded => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub report: String,
}

impl Outcome {
    fn new(status: Status, report: String) -> Self {
        Outcome { status, report }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "char3link",
    version,
    about = "Symbol algebras of degree 3 over GF(3)(vars)"
)]
struct Cli {
    /// Variable order of the base field.
    #[arg(long, global = true, default_value = "a,b")]
    vars: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalize a rational function, or multiply algebra elements.
    Eval(EvalArgs),
    /// Reduced trace, sigma and norm of an algebra element.
    Charforms(ElemArgs),
    /// Inverse of an algebra element.
    Invert(ElemArgs),
    /// Build a linkage certificate from a norm witness r.
    LinkConstruct(ConstructArgs),
    /// Check every equation of a certificate file.
    LinkVerify(VerifyArgs),
    /// Expand a symbol form and its Artin-Schreier image.
    Forms(FormsArgs),
    /// Valuations, value groups and the degree bookkeeping around them.
    Valuation(ValuationArgs),
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// A rational function in the declared variables.
    expr: Option<String>,
    #[arg(long, requires_all = ["beta", "elem"])]
    alpha: Option<String>,
    #[arg(long, requires = "alpha")]
    beta: Option<String>,
    #[arg(long, requires = "alpha", conflicts_with = "expr")]
    elem: Option<String>,
    /// Right factor, applied in order; repeatable.
    #[arg(long = "mul", requires = "elem")]
    mul: Vec<String>,
    #[arg(long, requires = "elem")]
    pow: Option<u32>,
}

#[derive(Args, Debug)]
struct ElemArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[arg(long)]
    elem: String,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Defaults to N(r).
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    r: String,
    /// Certificate file; printed in the report when absent.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Skip the separable complement.
    #[arg(long)]
    no_complement: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    cert: PathBuf,
}

#[derive(Args, Debug)]
struct FormsArgs {
    /// `form(a; b1, ..., bn)` for `a dlog(b1) ^ ... ^ dlog(bn)`.
    #[arg(long)]
    symbol: String,
    /// Norm witness for a degree-2 symbol `form(alpha; beta, gamma)`.
    #[arg(long)]
    r: Option<String>,
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(
    ArgGroup::new("query")
        .required(true)
        .args(["of", "algebra", "inequality", "morandi"])
))]
struct ValuationArgs {
    /// The variable x of the x-adic valuation.
    #[arg(long)]
    var: Option<char>,
    /// A rational function to evaluate.
    #[arg(long, requires = "var")]
    of: Option<String>,
    /// `symbol(alpha=.., beta=..)`.
    #[arg(long, requires = "var")]
    algebra: Option<String>,
    /// `f,e,n`: residue degree, ramification index, dimension.
    #[arg(long)]
    inequality: Option<String>,
    /// `gd,ge,gf` as generators such as `1` or `1/3`.
    #[arg(long)]
    morandi: Option<String>,
    /// Assert that the first factor is defectless.
    #[arg(long, requires = "morandi")]
    defectless: bool,
    /// Assert that the residue tensor product is a division algebra.
    #[arg(long, requires = "morandi")]
    residue_division: bool,
}

/// Parses `argv` (without the program name) and runs the command. Errors
/// and panics become exit statuses; nothing escapes.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once("char3link".into()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                Status::Invalid
            } else {
                Status::Success
            };
            return Outcome::new(status, e.to_string());
        }
    };
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let result = panic::catch_unwind(AssertUnwindSafe(|| dispatch(cli)));
    panic::set_hook(hook);
    match result {
        Ok(Ok(outcome)) => outcome,
        Ok(Err(e)) => error_outcome(&e),
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown failure".into());
            Outcome::new(
                Status::BudgetExceeded,
                format!("error: computation aborted: {msg}\n"),
            )
        }
    }
}

enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult = Result<Outcome, CliError>;

fn error_outcome(e: &CliError) -> Outcome {
    let (status, text) = match e {
        CliError::Core(e) => {
            let status = match e {
                Error::BudgetExceeded(_) | Error::ExponentOverflow { .. } => Status::BudgetExceeded,
                Error::Inconsistent(_) => Status::Refuted,
                _ => Status::Invalid,
            };
            (status, e.to_string())
        }
        CliError::Io(msg) | CliError::Usage(msg) => (Status::Invalid, msg.clone()),
    };
    Outcome::new(status, format!("error: {text}\n"))
}

fn dispatch(cli: Cli) -> CliResult {
    let vars = Vars::parse(&cli.vars)?;
    match cli.command {
        Command::Eval(args) => eval(&vars, args),
        Command::Charforms(args) => charforms(&vars, args),
        Command::Invert(args) => invert(&vars, args),
        Command::LinkConstruct(args) => link_construct(&vars, args),
        Command::LinkVerify(args) => link_verify(args),
        Command::Forms(args) => forms(&vars, args),
        Command::Valuation(args) => valuation(&vars, args),
    }
}

fn algebra(vars: &Vars, args: &AlgebraArgs) -> Result<Algebra, Error> {
    SymbolAlgebra::new(
        parse_ratfunc(&args.alpha, vars)?,
        parse_ratfunc(&args.beta, vars)?,
    )
}

fn success(report: String) -> CliResult {
    Ok(Outcome::new(Status::Success, report))
}

fn eval(vars: &Vars, args: EvalArgs) -> CliResult {
    match (&args.expr, &args.elem) {
        (Some(expr), None) => success(format!(
            "value = {}\n",
            vars.render(&parse_ratfunc(expr, vars)?)
        )),
        (None, Some(elem)) => {
            let alg = algebra(
                vars,
                &AlgebraArgs {
                    alpha: args.alpha.clone().unwrap_or_default(),
                    beta: args.beta.clone().unwrap_or_default(),
                },
            )?;
            let mut acc = parse_elem(elem, vars, &alg)?;
            for factor in &args.mul {
                acc = &acc * &parse_elem(factor, vars, &alg)?;
            }
            if let Some(k) = args.pow {
                acc = acc.pow(k);
            }
            success(format!("value = {}\n", vars.render_elem(&acc)))
        }
        _ => Err(CliError::Usage("eval needs an expression or --elem".into())),
    }
}

fn charforms(vars: &Vars, args: ElemArgs) -> CliResult {
    let alg = algebra(vars, &args.algebra)?;
    let a = parse_elem(&args.elem, vars, &alg)?;
    let f = char_forms(&a)?;
    success(format!(
        "Tr = {}\nsigma = {}\nN = {}\n",
        vars.render(&f.tr),
        vars.render(&f.sigma),
        vars.render(&f.norm)
    ))
}

fn invert(vars: &Vars, args: ElemArgs) -> CliResult {
    let alg = algebra(vars, &args.algebra)?;
    let a = parse_elem(&args.elem, vars, &alg)?;
    match inverse(&a) {
        Some(inv) => {
            let check = if &a * &inv == alg.one() { "ok" } else { "FAIL" };
            success(format!(
                "inverse = {}\ncheck a*inverse = 1: {check}\n",
                vars.render_elem(&inv)
            ))
        }
        None => Ok(Outcome::new(
            Status::Refuted,
            "not invertible: N = 0\n".into(),
        )),
    }
}

fn link_construct(vars: &Vars, args: ConstructArgs) -> CliResult {
    let alg = algebra(vars, &args.algebra)?;
    let r = parse_elem(&args.r, vars, &alg)?;
    let gamma = match &args.gamma {
        Some(g) => parse_ratfunc(g, vars)?,
        None => char_forms(&r)?.norm,
    };
    let options = BuildOptions {
        complement: !args.no_complement,
    };
    let cert = match build_certificate_with(alg.alpha(), alg.beta(), &gamma, &r, options)? {
        BuildOutcome::Degenerate(d) => {
            return Ok(Outcome::new(Status::Degenerate, d.to_text(vars)));
        }
        BuildOutcome::Certificate(c) => c,
    };
    let text = cert.to_text(vars);
    let report = verify_certificate(&cert);
    let mut out = String::new();
    writeln!(out, "E = {}", vars.render_descriptor(&cert.ext()?)).expect("string");
    writeln!(out, "z = {}", vars.render_elem_e(&cert.z)).expect("string");
    writeln!(out, "z^3 = {}", vars.render_e(&cert.zc)).expect("string");
    writeln!(
        out,
        "complement: {}",
        if cert.complement.is_some() {
            "computed"
        } else {
            "skipped"
        }
    )
    .expect("string");
    match &report.verdict {
        Verdict::Verified => out.push_str("self-check: verified\n"),
        Verdict::Refuted(why) => writeln!(out, "self-check: refuted ({why})").expect("string"),
    }
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            writeln!(out, "certificate written to {}", path.display()).expect("string");
        }
        None => {
            out.push('\n');
            out.push_str(&text);
        }
    }
    let status = if report.is_verified() {
        Status::Success
    } else {
        Status::Refuted
    };
    Ok(Outcome::new(status, out))
}

fn link_verify(args: VerifyArgs) -> CliResult {
    let text = std::fs::read_to_string(&args.cert)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.cert.display())))?;
    let (cert, _) = LinkageCertificate::from_text(&text)?;
    let report = verify_certificate(&cert);
    let status = if report.is_verified() {
        Status::Success
    } else {
        Status::Refuted
    };
    Ok(Outcome::new(status, report.render()))
}

fn forms(vars: &Vars, args: FormsArgs) -> CliResult {
    let s = parse_symbol_form(&args.symbol, vars)?;
    let mut out = String::new();
    writeln!(out, "symbol = {}", render_symbol_form(vars, &s)).expect("string");
    writeln!(out, "omega = {}", render_form(vars, &s.expand())).expect("string");
    writeln!(
        out,
        "wp(omega) = {}",
        render_form(vars, &artin_schreier_image(&s))
    )
    .expect("string");
    if s.degree() == 1 {
        writeln!(
            out,
            "algebra = {}",
            vars.render_algebra(&symbol_to_algebra(&s)?)
        )
        .expect("string");
    }
    let Some(r_text) = &args.r else {
        return success(out);
    };
    if s.degree() != 2 {
        return Err(CliError::Usage("--r needs a symbol of degree 2".into()));
    }
    let (alpha, beta, gamma) = (s.a(), &s.bs()[0], &s.bs()[1]);
    let alg = SymbolAlgebra::new(alpha.clone(), beta.clone())?;
    let r = parse_elem(r_text, vars, &alg)?;
    match triviality_by_witness(alpha, beta, gamma, &r)? {
        Verdict::Verified => {
            out.push_str("trivial: N(r) = gamma\n");
            success(out)
        }
        Verdict::Refuted(why) => {
            writeln!(out, "not certified: {why}").expect("string");
            Ok(Outcome::new(Status::Refuted, out))
        }
    }
}

fn var_index(vars: &Vars, var: Option<char>) -> Result<usize, CliError> {
    let c = var.ok_or_else(|| CliError::Usage("--var is required".into()))?;
    vars.index(c)
        .ok_or(CliError::Core(Error::UnknownVariable(c)))
}

fn parse_numbers(text: &str, count: usize) -> Result<Vec<u64>, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let nums: Option<Vec<u64>> = parts.iter().map(|p| p.parse().ok()).collect();
    match nums {
        Some(n) if n.len() == count => Ok(n),
        _ => Err(CliError::Usage(format!(
            "expected {count} comma-separated integers, got {text:?}"
        ))),
    }
}

fn parse_group(text: &str) -> Result<ValueGroup, CliError> {
    let bad = || CliError::Usage(format!("value group generator {text:?} is not p or p/q"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (
            p.trim().parse().map_err(|_| bad())?,
            q.trim().parse().map_err(|_| bad())?,
        ),
        None => (text.trim().parse().map_err(|_| bad())?, 1),
    };
    Ok(ValueGroup::new(num, den)?)
}

fn valuation(vars: &Vars, args: ValuationArgs) -> CliResult {
    if let Some(text) = &args.of {
        let var = var_index(vars, args.var)?;
        let f = parse_ratfunc(text, vars)?;
        return success(format!(
            "v_{}({}) = {}\n",
            vars.name(var),
            vars.render(&f),
            x_adic(&f, var)
        ));
    }
    if let Some(text) = &args.algebra {
        let var = var_index(vars, args.var)?;
        let alg = parse_algebra(text, vars)?;
        let svg = symbol_value_group(&alg, var)?;
        let mut out = format!("value group = {}\n", svg.group);
        if let Some(w) = svg.witness {
            writeln!(
                out,
                "witness: {:?} has value {}/3, relation value {}: {}",
                w.generator,
                w.value_thirds,
                w.relation_value,
                if w.holds() { "ok" } else { "FAIL" }
            )
            .expect("string");
        }
        return success(out);
    }
    if let Some(text) = &args.inequality {
        let n = parse_numbers(text, 3)?;
        let class = fundamental_inequality_check(n[0], n[1], n[2])?;
        let out = format!("f*e = {}, n = {}: {:?}\n", n[0] * n[1], n[2], class);
        let status = if class == InequalityClass::Violation {
            Status::Refuted
        } else {
            Status::Success
        };
        return Ok(Outcome::new(status, out));
    }
    let text = args.morandi.as_deref().expect("argument group is required");
    let groups: Vec<&str> = text.split(',').collect();
    let [gd, ge, gf] = groups.as_slice() else {
        return Err(CliError::Usage("--morandi takes gd,ge,gf".into()));
    };
    let asserted = |flag: bool, reason: &str| {
        if flag {
            Asserted::yes(reason)
        } else {
            Asserted::no()
        }
    };
    let ev = MorandiEvidence {
        defectless: asserted(args.defectless, "asserted on the command line"),
        residue_division: asserted(args.residue_division, "asserted on the command line"),
        gd: parse_group(gd)?,
        ge: parse_group(ge)?,
        gf: parse_group(gf)?,
    };
    let (status, line) = match morandi_check(&ev) {
        MorandiConclusion::DivisionConditional => (
            Status::Success,
            "division (conditional on the asserted hypotheses)".to_string(),
        ),
        MorandiConclusion::Withheld => {
            (Status::Success, "withheld: hypotheses not asserted".into())
        }
        MorandiConclusion::Condition3Fails { intersection } => (
            Status::Refuted,
            format!("value groups meet in {intersection}, not {}", ev.gf),
        ),
        MorandiConclusion::InvalidEvidence => (
            Status::Invalid,
            "gf is not contained in both gd and ge".to_string(),
        ),
    };
    Ok(Outcome::new(status, format!("{line}\n")))
}
