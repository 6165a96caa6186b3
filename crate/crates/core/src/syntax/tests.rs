use super::*;
use crate::error::Error;
use crate::field::Field;
use num_traits::One;

fn v() -> Vars {
    Vars::default()
}

#[test]
fn expressions() {
    let f = parse_ratfunc("a^2*b + 2", &v()).unwrap();
    assert_eq!(f.num().len(), 2);
    let g = parse_ratfunc("(a^2*b + 2*a + 1)/(b + 2)", &v()).unwrap();
    assert_eq!(v().render(&g), "(a^2*b + 2*a + 1)/(b + 2)");
    assert_eq!(parse_ratfunc("7", &v()).unwrap(), RatFunc::one());
    assert_eq!(
        parse_ratfunc("-a", &v()).unwrap(),
        RatFunc::var(0).scale(Gf3::TWO)
    );
    assert_eq!(
        parse_ratfunc("a^-1", &v()).unwrap(),
        parse_ratfunc("1/a", &v()).unwrap()
    );
    assert_eq!(
        parse_ratfunc("1/a*b", &v()).unwrap(),
        parse_ratfunc("b/a", &v()).unwrap()
    );
}

#[test]
fn errors_carry_columns() {
    match parse_ratfunc("a^^2", &v()) {
        Err(Error::Syntax { column, .. }) => assert_eq!(column, 3),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse_ratfunc("a + c", &v()),
        Err(Error::UnknownVariable('c'))
    ));
    assert!(matches!(
        parse_ratfunc("(a", &v()),
        Err(Error::Syntax { column: 3, .. })
    ));
    assert!(matches!(
        parse_ratfunc("a/0", &v()),
        Err(Error::Syntax { column: 2, .. })
    ));
    assert!(matches!(
        parse_ratfunc("a^40000", &v()),
        Err(Error::Syntax { .. })
    ));
    assert!(matches!(
        parse_ratfunc("(a^20000)^2", &v()),
        Err(Error::ExponentOverflow { .. })
    ));
    assert!(parse_ratfunc("ab", &v()).is_err());
}

#[test]
fn elements() {
    let alg = Algebra::new(RatFunc::var(0), RatFunc::var(1)).unwrap();
    let one = parse_elem("elem[1,0,0;0,0,0;0,0,0]", &v(), &alg).unwrap();
    assert_eq!(one, alg.one());
    let x = parse_elem("elem[0,0,0;1,0,0;0,0,0]", &v(), &alg).unwrap();
    assert_eq!(x, alg.x());
    let y = parse_elem("elem[0,1,0;0,0,0;0,0,0]", &v(), &alg).unwrap();
    assert_eq!(y, alg.y());
    assert_eq!(v().render_elem(&y), "elem[0,1,0;0,0,0;0,0,0]");
    assert!(parse_elem("elem[1,0,0;0,0,0]", &v(), &alg).is_err());
}

#[test]
fn quadratic_elements() {
    let d = Arc::new(RatFunc::var(0));
    let e = parse_e("quad[1, b]", &v(), Some(&d)).unwrap();
    assert_eq!(e, Quad::new(RatFunc::one(), RatFunc::var(1), d.clone()));
    assert_eq!(v().render_e(&e), "quad[1, b]");
    assert!(parse_e("quad[1, b]", &v(), None).is_err());
}

#[test]
fn descriptors() {
    let d = parse_descriptor("quad(d=a)", &v()).unwrap();
    assert_eq!(v().render_descriptor(&d), "quad(d=a)");
    let s = parse_descriptor("as(alpha=b) over quad(d=a)", &v()).unwrap();
    assert_eq!(s.degree(), 6);
    assert_eq!(v().render_descriptor(&s), "as(alpha=b) over quad(d=a)");
    assert!(parse_descriptor("quad(d=a^2)", &v()).is_err());
    assert!(parse_raw_descriptor("quad(d=a^2)", &v()).is_ok());
    assert!(parse_descriptor("insep(c=a^3)", &v()).is_err());
    assert_eq!(parse_descriptor("trivial", &v()).unwrap().degree(), 1);
}

#[test]
fn forms_and_algebras() {
    let s = parse_symbol_form("form(a; b, a + b)", &v()).unwrap();
    assert_eq!(s.degree(), 2);
    assert_eq!(render_symbol_form(&v(), &s), "form(a; b, a + b)");
    let w = parse_symbol_form("form(a; b)", &v()).unwrap().expand();
    assert_eq!(render_form(&v(), &w), "(a/b) * d(b)");
    let alg = parse_algebra("symbol(alpha=a, beta=b)", &v()).unwrap();
    assert_eq!(v().render_algebra(&alg), "symbol(alpha=a, beta=b)");
}

#[test]
fn vars() {
    let xs = Vars::parse("a,b,x").unwrap();
    assert_eq!(xs.index('x'), Some(2));
    assert_eq!(xs.spec(), "a,b,x");
    assert!(Vars::parse("a,a").is_err());
    assert!(Vars::parse("a,b,c,d,e,f,g,h,i").is_err());
    assert!(Vars::parse("ab").is_err());
}
