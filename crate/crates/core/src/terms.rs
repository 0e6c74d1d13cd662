//! The term language over { ^, v, ', ~, 0, 1 }: parser, printer, compiled
//! evaluation, brute-force identity satisfaction, the m(t, u) transform and
//! the named-identity catalog.
//!
//! Grammar (postfix ' and ~ bind tightest, ^ over v, both left-associative):
//!
//! ```text
//! id     := term "=" term
//! term   := term "v" factor | factor
//! factor := factor "^" atom | atom
//! atom   := VAR | "0" | "1" | "(" term ")" | atom "'" | atom "~"
//! ```
//!
//! `v` is reserved for join; any other letter-led identifier is a variable.

use std::fmt;

use crate::algebra::{FiniteAlgebra, Flavor};
use crate::congruence::guard_override;
use crate::error::{Error, Result};

pub const DEFAULT_SWEEP_GUARD: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Kleene(Box<Term>),
    Brouwer(Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Term {
    pub fn var(name: &str) -> Self {
        Term::Var(name.to_string())
    }

    pub fn meet(a: Term, b: Term) -> Self {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Self {
        Term::Join(Box::new(a), Box::new(b))
    }

    pub fn kleene(a: Term) -> Self {
        Term::Kleene(Box::new(a))
    }

    pub fn brouwer(a: Term) -> Self {
        Term::Brouwer(Box::new(a))
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(name) => {
                if !out.iter().any(|v| v == name) {
                    out.push(name.clone());
                }
            }
            Term::Zero | Term::One => {}
            Term::Meet(a, b) | Term::Join(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Kleene(a) | Term::Brouwer(a) => a.collect_vars(out),
        }
    }

    /// Variables in order of first appearance.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub fn uses_brouwer(&self) -> bool {
        match self {
            Term::Brouwer(_) => true,
            Term::Var(_) | Term::Zero | Term::One => false,
            Term::Meet(a, b) | Term::Join(a, b) => a.uses_brouwer() || b.uses_brouwer(),
            Term::Kleene(a) => a.uses_brouwer(),
        }
    }

    pub fn uses_kleene(&self) -> bool {
        match self {
            Term::Kleene(_) => true,
            Term::Var(_) | Term::Zero | Term::One => false,
            Term::Meet(a, b) | Term::Join(a, b) => a.uses_kleene() || b.uses_kleene(),
            Term::Brouwer(a) => a.uses_kleene(),
        }
    }
}

impl Identity {
    /// Variables of both sides, lhs first, in order of first appearance.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.lhs.collect_vars(&mut out);
        self.rhs.collect_vars(&mut out);
        out
    }
}

// Printing: parenthesize only where the grammar demands it.
// Precedence levels: join 1, meet 2, atoms 3.
fn prec(t: &Term) -> u8 {
    match t {
        Term::Join(..) => 1,
        Term::Meet(..) => 2,
        _ => 3,
    }
}

fn fmt_term(t: &Term, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let wrap = prec(t) < min;
    if wrap {
        write!(f, "(")?;
    }
    match t {
        Term::Var(name) => write!(f, "{name}")?,
        Term::Zero => write!(f, "0")?,
        Term::One => write!(f, "1")?,
        Term::Meet(a, b) => {
            fmt_term(a, 2, f)?;
            write!(f, " ^ ")?;
            fmt_term(b, 3, f)?;
        }
        Term::Join(a, b) => {
            fmt_term(a, 1, f)?;
            write!(f, " v ")?;
            fmt_term(b, 2, f)?;
        }
        Term::Kleene(a) => {
            fmt_term(a, 3, f)?;
            write!(f, "'")?;
        }
        Term::Brouwer(a) => {
            fmt_term(a, 3, f)?;
            write!(f, "~")?;
        }
    }
    if wrap {
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_term(self, 0, f)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Var(String),
    Zero,
    One,
    Meet,
    Join,
    Prime,
    Tilde,
    LParen,
    RParen,
    Eq,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0' => Tok::Zero,
            '1' => Tok::One,
            '^' => Tok::Meet,
            '\'' => Tok::Prime,
            '~' => Tok::Tilde,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Eq,
            c if c.is_alphabetic() => {
                let start = i;
                let mut name = String::new();
                while i < chars.len() && chars[i].is_alphanumeric() {
                    name.push(chars[i]);
                    i += 1;
                }
                out.push((start, if name == "v" { Tok::Join } else { Tok::Var(name) }));
                continue;
            }
            other => return Err(Error::SyntaxError(i, format!("unexpected character '{other}'"))),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn term(&mut self) -> Result<Term> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Join) {
            self.bump();
            acc = Term::join(acc, self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Term> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::Meet) {
            self.bump();
            acc = Term::meet(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Term> {
        let at = self.here();
        let mut acc = match self.bump() {
            Some(Tok::Var(name)) => Term::Var(name),
            Some(Tok::Zero) => Term::Zero,
            Some(Tok::One) => Term::One,
            Some(Tok::LParen) => {
                let inner = self.term()?;
                let at = self.here();
                if self.bump() != Some(Tok::RParen) {
                    return Err(Error::SyntaxError(at, "expected ')'".into()));
                }
                inner
            }
            other => {
                return Err(Error::SyntaxError(at, format!("expected an atom, got {other:?}")))
            }
        };
        loop {
            match self.peek() {
                Some(Tok::Prime) => {
                    self.bump();
                    acc = Term::kleene(acc);
                }
                Some(Tok::Tilde) => {
                    self.bump();
                    acc = Term::brouwer(acc);
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

fn parser(text: &str) -> Result<Parser> {
    Ok(Parser { toks: lex(text)?, pos: 0, end: text.chars().count() })
}

pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = parser(text)?;
    let t = p.term()?;
    if p.peek().is_some() {
        return Err(Error::SyntaxError(p.here(), "trailing input after term".into()));
    }
    Ok(t)
}

pub fn parse_identity(text: &str) -> Result<Identity> {
    let mut p = parser(text)?;
    let lhs = p.term()?;
    let at = p.here();
    if p.bump() != Some(Tok::Eq) {
        return Err(Error::SyntaxError(at, "expected '='".into()));
    }
    let rhs = p.term()?;
    if p.peek().is_some() {
        return Err(Error::SyntaxError(p.here(), "trailing input after identity".into()));
    }
    Ok(Identity { lhs, rhs })
}

// Stack-machine compilation: the satisfaction sweeps evaluate the same term
// millions of times, so the tree is flattened once per algebra.
#[derive(Debug, Clone, Copy)]
enum Instr {
    Var(usize),
    Const(usize),
    Meet,
    Join,
    Kleene,
    Brouwer,
}

fn compile(t: &Term, a: &FiniteAlgebra, vars: &[String], code: &mut Vec<Instr>) -> Result<()> {
    match t {
        Term::Var(name) => {
            let i = vars.iter().position(|v| v == name).expect("variable listed");
            code.push(Instr::Var(i));
        }
        Term::Zero => code.push(Instr::Const(a.bottom())),
        Term::One => code.push(Instr::Const(a.top())),
        Term::Meet(x, y) => {
            compile(x, a, vars, code)?;
            compile(y, a, vars, code)?;
            code.push(Instr::Meet);
        }
        Term::Join(x, y) => {
            compile(x, a, vars, code)?;
            compile(y, a, vars, code)?;
            code.push(Instr::Join);
        }
        Term::Kleene(x) => {
            if a.flavor() < Flavor::Bi {
                return Err(Error::MissingOperation("kleene complement"));
            }
            compile(x, a, vars, code)?;
            code.push(Instr::Kleene);
        }
        Term::Brouwer(x) => {
            if a.flavor() < Flavor::Bz {
                return Err(Error::MissingOperation("brouwer complement"));
            }
            compile(x, a, vars, code)?;
            code.push(Instr::Brouwer);
        }
    }
    Ok(())
}

fn eval(code: &[Instr], a: &FiniteAlgebra, valuation: &[usize], stack: &mut Vec<usize>) -> usize {
    stack.clear();
    let l = a.lattice();
    for ins in code {
        match *ins {
            Instr::Var(i) => stack.push(valuation[i]),
            Instr::Const(c) => stack.push(c),
            Instr::Meet => {
                let y = stack.pop().unwrap();
                let x = stack.pop().unwrap();
                stack.push(l.meet(x, y));
            }
            Instr::Join => {
                let y = stack.pop().unwrap();
                let x = stack.pop().unwrap();
                stack.push(l.join(x, y));
            }
            Instr::Kleene => {
                let x = stack.pop().unwrap();
                stack.push(a.kleene(x));
            }
            Instr::Brouwer => {
                let x = stack.pop().unwrap();
                stack.push(a.brouwer(x));
            }
        }
    }
    stack.pop().unwrap()
}

/// Evaluates a single term under one valuation (variables in order of first
/// appearance, matching `term.vars()`).
pub fn eval_term(a: &FiniteAlgebra, t: &Term, valuation: &[usize]) -> Result<usize> {
    let vars = t.vars();
    assert_eq!(vars.len(), valuation.len(), "valuation must cover every variable");
    let mut code = Vec::new();
    compile(t, a, &vars, &mut code)?;
    let mut stack = Vec::new();
    Ok(eval(&code, a, valuation, &mut stack))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Satisfaction {
    pub holds: bool,
    /// Variables in order of first appearance, lhs first.
    pub vars: Vec<String>,
    /// First falsifying valuation in lexicographic order (first variable
    /// most significant), absent when the identity holds.
    pub witness: Option<Vec<usize>>,
}

/// Exhaustive satisfaction sweep over all valuations.
pub fn satisfies(a: &FiniteAlgebra, id: &Identity) -> Result<Satisfaction> {
    let vars = id.vars();
    let full: Vec<Vec<usize>> = vars.iter().map(|_| (0..a.n()).collect()).collect();
    satisfies_restricted(a, id, &full)
}

/// Satisfaction sweep with each variable restricted to its own range, in the
/// order of `id.vars()`.
pub fn satisfies_restricted(
    a: &FiniteAlgebra,
    id: &Identity,
    ranges: &[Vec<usize>],
) -> Result<Satisfaction> {
    let vars = id.vars();
    assert_eq!(ranges.len(), vars.len(), "one range per variable");
    let guard = guard_override().unwrap_or(DEFAULT_SWEEP_GUARD);
    let mut total: u64 = 1;
    for r in ranges {
        total = total.saturating_mul(r.len() as u64);
    }
    if total > guard {
        return Err(Error::GuardExceeded(total, guard));
    }

    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    compile(&id.lhs, a, &vars, &mut lhs)?;
    compile(&id.rhs, a, &vars, &mut rhs)?;

    let k = vars.len();
    let mut stack = Vec::new();
    if k == 0 {
        let holds = eval(&lhs, a, &[], &mut stack) == eval(&rhs, a, &[], &mut stack);
        return Ok(Satisfaction { holds, vars, witness: (!holds).then(Vec::new) });
    }
    if ranges.iter().any(|r| r.is_empty()) {
        return Ok(Satisfaction { holds: true, vars, witness: None });
    }
    // Odometer in lexicographic order, first variable most significant.
    let mut idx = vec![0usize; k];
    let mut valuation: Vec<usize> = ranges.iter().map(|r| r[0]).collect();
    loop {
        if eval(&lhs, a, &valuation, &mut stack) != eval(&rhs, a, &valuation, &mut stack) {
            return Ok(Satisfaction { holds: false, vars, witness: Some(valuation) });
        }
        let mut d = k;
        loop {
            if d == 0 {
                return Ok(Satisfaction { holds: true, vars, witness: None });
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < ranges[d].len() {
                valuation[d] = ranges[d][idx[d]];
                break;
            }
            idx[d] = 0;
            valuation[d] = ranges[d][0];
        }
    }
}

fn join_all(mut terms: Vec<Term>) -> Term {
    let first = terms.remove(0);
    terms.into_iter().fold(first, Term::join)
}

fn meet_all(mut terms: Vec<Term>) -> Term {
    let first = terms.remove(0);
    terms.into_iter().fold(first, Term::meet)
}

/// Sharpness disjunct (w ^ w')~ used by the m transform.
fn sharp_disjunct(name: &str) -> Term {
    Term::brouwer(Term::meet(Term::var(name), Term::kleene(Term::var(name))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MTransform {
    pub m_tu: Term,
    pub m_ut: Term,
}

/// The m(t, u) transform: with x-variables only in t, y-variables only in u
/// and z-variables common (each list in order of appearance),
/// m(t, u) = (x1 ^ x1')~ v ... v (y1 ^ y1')~ v ... v (z1 ^ z1')~ v ... v t,
/// and m(u, t) has the same prefix with tail u.
pub fn m_transform(t: &Term, u: &Term) -> MTransform {
    let tv = t.vars();
    let uv = u.vars();
    let xs: Vec<&String> = tv.iter().filter(|v| !uv.contains(v)).collect();
    let ys: Vec<&String> = uv.iter().filter(|v| !tv.contains(v)).collect();
    let zs: Vec<&String> = tv.iter().filter(|v| uv.contains(v)).collect();
    let prefix: Vec<Term> = xs
        .iter()
        .chain(ys.iter())
        .chain(zs.iter())
        .map(|v| sharp_disjunct(v))
        .collect();
    let with_tail = |tail: &Term| {
        let mut parts = prefix.clone();
        parts.push(tail.clone());
        join_all(parts)
    };
    MTransform { m_tu: with_tail(t), m_ut: with_tail(u) }
}

/// Encodes t <= u as the identity t = t ^ u.
pub fn leq_as_identity(t: Term, u: Term) -> Identity {
    Identity { lhs: t.clone(), rhs: Term::meet(t, u) }
}

/// The named identities of the paper; C and D take the parameter n >= 2.
pub fn named_identity(name: &str, n: Option<usize>) -> Result<Identity> {
    let x = || Term::var("x");
    let y = || Term::var("y");
    let z = || Term::var("z");
    let xp = || Term::kleene(Term::var("x"));
    let yp = || Term::kleene(Term::var("y"));
    let need_n = || -> Result<usize> {
        match n {
            Some(n) if n >= 2 => Ok(n),
            _ => Err(Error::MissingParam(name.to_string())),
        }
    };
    match name {
        // (x ^ x')~ = x~ v x'~
        "STAR" => Ok(Identity {
            lhs: Term::brouwer(Term::meet(x(), xp())),
            rhs: Term::join(Term::brouwer(x()), Term::brouwer(xp())),
        }),
        // (x ^ y)~ = x~ v y~
        "SDM" => Ok(Identity {
            lhs: Term::brouwer(Term::meet(x(), y())),
            rhs: Term::join(Term::brouwer(x()), Term::brouwer(y())),
        }),
        // x ^ y~~ <= x'~ v y
        "SK" => Ok(leq_as_identity(
            Term::meet(x(), Term::brouwer(Term::brouwer(y()))),
            Term::join(Term::brouwer(xp()), y()),
        )),
        // (x ^ y~) v (x ^ y~~) = x
        "J0" => Ok(Identity {
            lhs: Term::join(
                Term::meet(x(), Term::brouwer(y())),
                Term::meet(x(), Term::brouwer(Term::brouwer(y()))),
            ),
            rhs: x(),
        }),
        // x ^ (y v z) = (x ^ y) v (x ^ z)
        "DIST" => Ok(Identity {
            lhs: Term::meet(x(), Term::join(y(), z())),
            rhs: Term::join(Term::meet(x(), y()), Term::meet(x(), z())),
        }),
        // x v (y ^ (x v z)) = (x v y) ^ (x v z)
        "MOD" => Ok(Identity {
            lhs: Term::join(x(), Term::meet(y(), Term::join(x(), z()))),
            rhs: Term::meet(Term::join(x(), y()), Term::join(x(), z())),
        }),
        // m(x ^ x', y ^ y') = m(y ^ y', x ^ x')
        "R" => {
            let m = m_transform(&Term::meet(x(), xp()), &Term::meet(y(), yp()));
            Ok(Identity { lhs: m.m_tu, rhs: m.m_ut })
        }
        // m(x v x', y v y') = m(y v y', x v x')
        "RV" => {
            let m = m_transform(&Term::join(x(), xp()), &Term::join(y(), yp()));
            Ok(Identity { lhs: m.m_tu, rhs: m.m_ut })
        }
        // m(x v (x' ^ (x v y)), x v y) = m(x v y, x v (x' ^ (x v y)))
        "O" => {
            let t = Term::join(x(), Term::meet(xp(), Term::join(x(), y())));
            let u = Term::join(x(), y());
            let m = m_transform(&t, &u);
            Ok(Identity { lhs: m.m_tu, rhs: m.m_ut })
        }
        "C" => {
            let n = need_n()?;
            let xi = |i: usize| Term::var(&format!("x{i}"));
            let tildes: Vec<Term> = (1..=n).map(|i| Term::brouwer(xi(i))).collect();
            let pair_meets: Vec<Term> = (1..=n)
                .flat_map(|i| {
                    ((i + 1)..=n).map(move |j| Term::brouwer(Term::meet(xi(i), xi(j))))
                })
                .collect();
            let all_join = join_all((1..=n).map(xi).collect());
            let mut lhs_parts = tildes.clone();
            let mut inner = pair_meets.clone();
            inner.push(all_join);
            lhs_parts.push(meet_all(inner));
            let mut rhs_parts = tildes;
            let mut inner = pair_meets;
            inner.extend((1..=n).map(|i| Term::kleene(xi(i))));
            rhs_parts.push(meet_all(inner));
            Ok(Identity { lhs: join_all(lhs_parts), rhs: join_all(rhs_parts) })
        }
        "D" => {
            let n = need_n()?;
            let xi = |i: usize| Term::var(&format!("x{i}"));
            let pair_meets: Vec<Term> = (1..=n)
                .flat_map(|i| {
                    ((i + 1)..=n).map(move |j| Term::brouwer(Term::meet(xi(i), xi(j))))
                })
                .collect();
            let mut tail: Vec<Term> = (1..=n).map(xi).collect();
            tail.extend((1..=n).map(|i| Term::brouwer(xi(i))));
            // The disjointness factor stays outside the outer Brouwer
            // complement; with it inside, x1 = x2 = 1 would falsify the
            // identity on every nontrivial algebra.
            let inner = Term::meet(Term::join(x(), Term::brouwer(x())), join_all(tail));
            let mut parts = vec![Term::brouwer(inner)];
            parts.extend(pair_meets);
            Ok(Identity { lhs: meet_all(parts), rhs: Term::Zero })
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bz_chain, catalog, CatalogName};

    #[test]
    fn sdm_parses_to_the_catalog_form() {
        let parsed = parse_identity("(x ^ y)~ = x~ v y~").unwrap();
        assert_eq!(parsed, named_identity("SDM", None).unwrap());
    }

    #[test]
    fn precedence_and_postfix_bind_as_documented() {
        let t = parse_term("x ^ y v z'~").unwrap();
        assert_eq!(
            t,
            Term::join(
                Term::meet(Term::var("x"), Term::var("y")),
                Term::brouwer(Term::kleene(Term::var("z")))
            )
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(parse_term("x ^^ y"), Err(Error::SyntaxError(3, _))));
        assert!(matches!(parse_term("x ?"), Err(Error::SyntaxError(2, _))));
        assert!(matches!(parse_identity("x v y"), Err(Error::SyntaxError(_, _))));
    }

    #[test]
    fn printer_round_trips_the_named_identities() {
        for name in ["STAR", "SDM", "SK", "J0", "DIST", "MOD", "R", "RV", "O"] {
            let id = named_identity(name, None).unwrap();
            let reparsed = parse_identity(&id.to_string()).unwrap();
            assert_eq!(id, reparsed, "{name}");
        }
        for name in ["C", "D"] {
            for n in 2..=4 {
                let id = named_identity(name, Some(n)).unwrap();
                let reparsed = parse_identity(&id.to_string()).unwrap();
                assert_eq!(id, reparsed, "{name}({n})");
            }
        }
    }

    #[test]
    fn named_identity_guards() {
        assert!(matches!(named_identity("C", None), Err(Error::MissingParam(_))));
        assert!(matches!(named_identity("C", Some(1)), Err(Error::MissingParam(_))));
        assert!(matches!(named_identity("NOPE", None), Err(Error::UnknownName(_))));
    }

    #[test]
    fn d_of_n_has_the_documented_variables() {
        let id = named_identity("D", Some(2)).unwrap();
        assert_eq!(id.vars(), ["x", "x1", "x2"]);
        assert_eq!(id.rhs, Term::Zero);
    }

    #[test]
    fn chains_are_distributive_by_sweep() {
        let id = named_identity("DIST", None).unwrap();
        let d5 = bz_chain(5);
        assert!(satisfies(&d5, &id).unwrap().holds);
    }

    #[test]
    fn d4_fails_sk_with_the_lex_least_witness() {
        let d4 = bz_chain(4);
        let sat = satisfies(&d4, &named_identity("SK", None).unwrap()).unwrap();
        assert!(!sat.holds);
        // First failure in lex order: x = b, y = a, where b ^ a~~ = b
        // exceeds b'~ v a = a.
        assert_eq!(sat.witness, Some(vec![2, 1]));
        assert!(satisfies(&bz_chain(3), &named_identity("SK", None).unwrap()).unwrap().holds);
    }

    #[test]
    fn restricted_sweep_differs_from_full() {
        let d4 = bz_chain(4);
        let sk = named_identity("SK", None).unwrap();
        // x over L minus 1, y pinned to 0.
        let ranges = vec![vec![0, 1, 2], vec![0]];
        assert!(satisfies_restricted(&d4, &sk, &ranges).unwrap().holds);
        assert!(!satisfies(&d4, &sk).unwrap().holds);
    }

    #[test]
    fn missing_operation_is_reported() {
        let n5 = catalog(&CatalogName::N5).unwrap();
        let err = satisfies(&n5, &named_identity("SDM", None).unwrap()).unwrap_err();
        assert!(matches!(err, Error::MissingOperation(_)));
    }

    #[test]
    fn sweep_guard_fires() {
        let gd3 = catalog(&CatalogName::Gd(3)).unwrap();
        // 15^7 valuations blow the default guard.
        let many: Vec<Term> = (0..7).map(|i| Term::var(&format!("x{i}"))).collect();
        let id = Identity { lhs: join_all(many), rhs: Term::One };
        assert!(matches!(satisfies(&gd3, &id), Err(Error::GuardExceeded(..))));
    }

    #[test]
    fn m_transform_recovers_the_paper_r_form() {
        let r = named_identity("R", None).unwrap();
        let expected = parse_identity(
            "(x ^ x')~ v (y ^ y')~ v (x ^ x') = (x ^ x')~ v (y ^ y')~ v (y ^ y')",
        )
        .unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn m_transform_splits_variables_by_side() {
        let t = parse_term("x ^ z").unwrap();
        let u = parse_term("y v z").unwrap();
        let m = m_transform(&t, &u);
        // x only in t, y only in u, z common; order x, y, z.
        assert_eq!(m.m_tu.vars(), ["x", "y", "z"]);
        assert_eq!(m.m_tu.to_string(), "(x ^ x')~ v (y ^ y')~ v (z ^ z')~ v x ^ z");
        assert_eq!(m.m_ut.to_string(), "(x ^ x')~ v (y ^ y')~ v (z ^ z')~ v (y v z)");
    }

    #[test]
    fn uses_flags() {
        let sk = named_identity("SK", None).unwrap();
        assert!(sk.lhs.uses_brouwer() || sk.rhs.uses_brouwer());
        assert!(sk.rhs.uses_kleene());
    }
}
