//! Parser for the line-oriented `.hopf` presentation format.
//!
//! ```text
//! [generators] g x
//! [rules]
//! g^2 -> 1
//! x g -> -1 * g x        # words are space-separated symbols, ^ repeats
//! x^2 -> T
//! [central]
//! T primitive-free       # or: z group-like-torsion 2, s group-like-free
//! [coproduct]
//! g -> g (x) g           # (x) separates the tensor legs
//! x -> x (x) g + 1 (x) x
//! [counit] g -> 1 ; x -> 0
//! [antipode] g -> g ; x -> -1 * x g
//! [basis] 1, g, x, g x
//! ```
//!
//! Symbols are alphanumeric identifiers; scalar literals are integers,
//! rationals `p/q`, or `zeta(N,k)`; `#` starts a comment. Entries are
//! separated by newlines or `;`, and basis words by `,`.

use std::collections::HashMap;

use crate::exactmath::{root_of_unity, Scalar};

use super::central::{CCElem, CElem, CentralDescriptor, CentralKind, CentralSymbol};
use super::rewrite::RewriteRule;
use super::term::{NCPoly, TensorPoly, Word};
use super::PresentationError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(i64),
    Arrow,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> PresentationError {
    PresentationError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Token>, PresentationError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '#' => break,
            '-' if i + 1 < chars.len() && chars[i + 1] == '>' => {
                out.push(Token {
                    tok: Tok::Arrow,
                    line,
                    col,
                });
                i += 2;
            }
            '-' => {
                out.push(Token {
                    tok: Tok::Minus,
                    line,
                    col,
                });
                i += 1;
            }
            '+' => {
                out.push(Token {
                    tok: Tok::Plus,
                    line,
                    col,
                });
                i += 1;
            }
            '*' => {
                out.push(Token {
                    tok: Tok::Star,
                    line,
                    col,
                });
                i += 1;
            }
            '/' => {
                out.push(Token {
                    tok: Tok::Slash,
                    line,
                    col,
                });
                i += 1;
            }
            '^' => {
                out.push(Token {
                    tok: Tok::Caret,
                    line,
                    col,
                });
                i += 1;
            }
            '(' => {
                out.push(Token {
                    tok: Tok::LParen,
                    line,
                    col,
                });
                i += 1;
            }
            ')' => {
                out.push(Token {
                    tok: Tok::RParen,
                    line,
                    col,
                });
                i += 1;
            }
            ',' => {
                out.push(Token {
                    tok: Tok::Comma,
                    line,
                    col,
                });
                i += 1;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s
                    .parse::<i64>()
                    .map_err(|_| syntax(line, col, format!("integer literal {s} out of range")))?;
                out.push(Token {
                    tok: Tok::Num(n),
                    line,
                    col,
                });
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line,
                    col,
                });
            }
            other => return Err(syntax(line, col, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Cursor {
    toks: Vec<Token>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(toks: Vec<Token>, line: usize) -> Self {
        Cursor { toks, pos: 0, line }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .unwrap_or((self.line, 0))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), PresentationError> {
        let (l, c) = self.here();
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(syntax(l, c, format!("expected {what}")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }
}

/// Symbol tables shared by the term parsers.
pub struct SymbolTable {
    pub gens: Vec<String>,
    pub gen_index: HashMap<String, u32>,
    pub central: CentralDescriptor,
}

impl SymbolTable {
    fn classify(&self, name: &str) -> Option<SymbolRef> {
        if let Some(&g) = self.gen_index.get(name) {
            return Some(SymbolRef::Generator(g));
        }
        self.central.index_of(name).map(SymbolRef::Central)
    }
}

enum SymbolRef {
    Generator(u32),
    Central(usize),
}

/// One additive term: scalar coefficient, generator word, central exponents.
struct RawTerm {
    coeff: Scalar,
    word: Word,
    central: Vec<i64>,
}

fn parse_scalar_literal(cur: &mut Cursor) -> Result<Option<Scalar>, PresentationError> {
    match cur.peek() {
        Some(Tok::Num(_)) => {
            let Some(Token {
                tok: Tok::Num(p), ..
            }) = cur.next()
            else {
                unreachable!()
            };
            if cur.peek() == Some(&Tok::Slash) {
                cur.next();
                let (l, c) = cur.here();
                match cur.next() {
                    Some(Token {
                        tok: Tok::Num(q), ..
                    }) if q != 0 => Ok(Some(Scalar::from_fraction(p, q))),
                    _ => Err(syntax(l, c, "expected nonzero denominator")),
                }
            } else {
                Ok(Some(Scalar::from_int(p)))
            }
        }
        Some(Tok::Ident(name)) if name == "zeta" => {
            cur.next();
            cur.expect(Tok::LParen, "( after zeta")?;
            let (l, c) = cur.here();
            let Some(Token {
                tok: Tok::Num(n), ..
            }) = cur.next()
            else {
                return Err(syntax(l, c, "expected root-of-unity order"));
            };
            if n < 1 {
                return Err(syntax(l, c, "root-of-unity order must be positive"));
            }
            cur.expect(Tok::Comma, ", in zeta(N,k)")?;
            let (l2, c2) = cur.here();
            let neg = cur.eat(&Tok::Minus);
            let Some(Token {
                tok: Tok::Num(k), ..
            }) = cur.next()
            else {
                return Err(syntax(l2, c2, "expected root-of-unity exponent"));
            };
            cur.expect(Tok::RParen, ") after zeta(N,k)")?;
            Ok(Some(root_of_unity(n as u64, if neg { -k } else { k })))
        }
        _ => Ok(None),
    }
}

/// Parse primaries until a term boundary (+, -, (x), comma, or end).
fn parse_term(
    cur: &mut Cursor,
    table: &SymbolTable,
    stop_at_tensor_sep: bool,
) -> Result<RawTerm, PresentationError> {
    let mut term = RawTerm {
        coeff: Scalar::one(),
        word: Vec::new(),
        central: vec![0; table.central.len()],
    };
    let mut saw_primary = false;
    loop {
        match cur.peek() {
            None | Some(Tok::Plus) | Some(Tok::Minus) | Some(Tok::Comma) | Some(Tok::Arrow) => {
                break
            }
            Some(Tok::LParen) if stop_at_tensor_sep && is_tensor_sep(cur) => break,
            Some(Tok::Star) => {
                cur.next();
                continue;
            }
            _ => {}
        }
        if let Some(s) = parse_scalar_literal(cur)? {
            term.coeff = term.coeff.mul(&s);
            saw_primary = true;
            continue;
        }
        let (l, c) = cur.here();
        match cur.next() {
            Some(Token {
                tok: Tok::Ident(name),
                ..
            }) => {
                let mut reps = 1i64;
                if cur.eat(&Tok::Caret) {
                    let (l2, c2) = cur.here();
                    let neg = cur.eat(&Tok::Minus);
                    match cur.next() {
                        Some(Token {
                            tok: Tok::Num(n), ..
                        }) => reps = if neg { -n } else { n },
                        _ => return Err(syntax(l2, c2, "expected exponent after ^")),
                    }
                }
                match table.classify(&name) {
                    Some(SymbolRef::Generator(g)) => {
                        if reps < 0 {
                            return Err(syntax(l, c, "generators cannot carry negative powers"));
                        }
                        for _ in 0..reps {
                            term.word.push(g);
                        }
                    }
                    Some(SymbolRef::Central(idx)) => {
                        term.central[idx] += reps;
                    }
                    None => {
                        return Err(PresentationError::UnknownSymbol {
                            line: l,
                            col: c,
                            name,
                        })
                    }
                }
                saw_primary = true;
            }
            Some(t) => return Err(syntax(t.line, t.col, "unexpected token in term")),
            None => break,
        }
    }
    if !saw_primary {
        let (l, c) = cur.here();
        return Err(syntax(l, c, "empty term"));
    }
    Ok(term)
}

fn is_tensor_sep(cur: &Cursor) -> bool {
    matches!(
        (cur.peek(), cur.peek2(), cur.toks.get(cur.pos + 2).map(|t| &t.tok)),
        (Some(Tok::LParen), Some(Tok::Ident(s)), Some(Tok::RParen)) if s == "x"
    )
}

fn term_to_ncpoly(term: RawTerm, table: &SymbolTable) -> NCPoly {
    let mono = table.central.normalize_mono(term.central);
    NCPoly::from_term(term.word, CElem::from_term(mono, term.coeff))
}

/// `t1 + t2 - t3 ...` over generator words with central coefficients.
fn parse_ncpoly(cur: &mut Cursor, table: &SymbolTable) -> Result<NCPoly, PresentationError> {
    let mut out = NCPoly::zero();
    let mut sign = if cur.eat(&Tok::Minus) { -1 } else { 1 };
    loop {
        let mut term = parse_term(cur, table, false)?;
        if sign < 0 {
            term.coeff = term.coeff.neg();
        }
        let p = term_to_ncpoly(term, table);
        out = out.add(&p);
        match cur.peek() {
            Some(Tok::Plus) => {
                cur.next();
                sign = 1;
            }
            Some(Tok::Minus) => {
                cur.next();
                sign = -1;
            }
            None => break,
            Some(_) => {
                let (l, c) = cur.here();
                return Err(syntax(l, c, "expected + or - between terms"));
            }
        }
    }
    Ok(out)
}

/// Sum of `left (x) right` tensor terms.
fn parse_tensor_poly(cur: &mut Cursor, table: &SymbolTable) -> Result<TensorPoly, PresentationError> {
    let mut out = TensorPoly::zero();
    let mut sign = if cur.eat(&Tok::Minus) { -1 } else { 1 };
    loop {
        let left = parse_term(cur, table, true)?;
        let (l, c) = cur.here();
        if !is_tensor_sep(cur) {
            return Err(syntax(l, c, "expected (x) between tensor legs"));
        }
        cur.next();
        cur.next();
        cur.next();
        let right = parse_term(cur, table, true)?;
        let mut coeff = left.coeff.mul(&right.coeff);
        if sign < 0 {
            coeff = coeff.neg();
        }
        let cc = CCElem::from_term(
            table.central.normalize_mono(left.central),
            table.central.normalize_mono(right.central),
            coeff,
        );
        out.accumulate(left.word, right.word, cc);
        match cur.peek() {
            Some(Tok::Plus) => {
                cur.next();
                sign = 1;
            }
            Some(Tok::Minus) => {
                cur.next();
                sign = -1;
            }
            None => break,
            Some(_) => {
                let (l2, c2) = cur.here();
                return Err(syntax(l2, c2, "expected + or - between tensor terms"));
            }
        }
    }
    Ok(out)
}

/// Everything read from a `.hopf` file before Hopf-consistency validation.
pub struct ParsedPresentation {
    pub table: SymbolTable,
    pub rules: Vec<RewriteRule>,
    pub coproduct: Vec<TensorPoly>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<NCPoly>,
    pub basis: Vec<Word>,
}

struct Section {
    name: String,
    line: usize,
    entries: Vec<(usize, String)>,
}

fn split_sections(text: &str) -> Result<Vec<Section>, PresentationError> {
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let rest = if let Some(stripped) = trimmed.strip_prefix('[') {
            let Some(end) = stripped.find(']') else {
                return Err(syntax(line_no, 1, "unterminated section header"));
            };
            let name = stripped[..end].trim().to_string();
            sections.push(Section {
                name,
                line: line_no,
                entries: Vec::new(),
            });
            stripped[end + 1..].trim()
        } else {
            trimmed
        };
        if rest.is_empty() {
            continue;
        }
        let Some(current) = sections.last_mut() else {
            return Err(syntax(line_no, 1, "content before the first section header"));
        };
        for piece in rest.split(';') {
            let p = piece.trim();
            if !p.is_empty() {
                current.entries.push((line_no, p.to_string()));
            }
        }
    }
    Ok(sections)
}

pub fn parse_text(text: &str) -> Result<ParsedPresentation, PresentationError> {
    let sections = split_sections(text)?;
    let find = |name: &str| sections.iter().find(|s| s.name == name);
    let known = [
        "generators",
        "rules",
        "central",
        "coproduct",
        "counit",
        "antipode",
        "basis",
    ];
    for s in &sections {
        if !known.contains(&s.name.as_str()) {
            return Err(syntax(s.line, 1, format!("unknown section [{}]", s.name)));
        }
    }
    for required in ["generators", "rules", "coproduct", "counit", "antipode", "basis"] {
        if find(required).is_none() {
            return Err(PresentationError::HopfMapInconsistent {
                detail: format!("required section [{required}] is missing"),
            });
        }
    }

    // generators
    let gen_section = find("generators").unwrap();
    let mut gens: Vec<String> = Vec::new();
    for (line, entry) in &gen_section.entries {
        for tok in tokenize(entry, *line)? {
            match tok.tok {
                Tok::Ident(name) => {
                    if name == "zeta" {
                        return Err(syntax(tok.line, tok.col, "zeta is a reserved name"));
                    }
                    if gens.contains(&name) {
                        return Err(syntax(tok.line, tok.col, format!("duplicate generator {name}")));
                    }
                    gens.push(name);
                }
                Tok::Comma => {}
                _ => return Err(syntax(tok.line, tok.col, "expected generator name")),
            }
        }
    }
    if gens.is_empty() {
        return Err(syntax(gen_section.line, 1, "no generators declared"));
    }

    // central
    let mut central = CentralDescriptor::default();
    if let Some(cs) = find("central") {
        for (line, entry) in &cs.entries {
            let parts: Vec<&str> = entry.split_whitespace().collect();
            if parts.len() < 2 {
                return Err(syntax(*line, 1, "central entry needs a symbol and a kind"));
            }
            let name = parts[0].to_string();
            if gens.contains(&name) || central.index_of(&name).is_some() || name == "zeta" {
                return Err(syntax(*line, 1, format!("symbol {name} already in use")));
            }
            let kind = match parts[1] {
                "primitive-free" => CentralKind::PrimitiveFree,
                "group-like-free" => CentralKind::GroupFree,
                "group-like-torsion" => {
                    let Some(ord) = parts.get(2).and_then(|s| s.parse::<u64>().ok()) else {
                        return Err(syntax(*line, 1, "group-like-torsion needs a positive order"));
                    };
                    if ord == 0 {
                        return Err(syntax(*line, 1, "torsion order must be positive"));
                    }
                    CentralKind::GroupTorsion(ord)
                }
                other => {
                    return Err(syntax(
                        *line,
                        1,
                        format!("unknown central kind {other}; expected primitive-free, group-like-free or group-like-torsion"),
                    ))
                }
            };
            central.symbols.push(CentralSymbol { name, kind });
        }
    }

    let gen_index: HashMap<String, u32> = gens
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i as u32))
        .collect();
    let table = SymbolTable {
        gens: gens.clone(),
        gen_index,
        central,
    };

    // rules
    let mut rules = Vec::new();
    for (line, entry) in &find("rules").unwrap().entries {
        let mut cur = Cursor::new(tokenize(entry, *line)?, *line);
        let lhs_term = parse_term(&mut cur, &table, false)?;
        if !lhs_term.coeff.is_one() || lhs_term.central.iter().any(|&e| e != 0) {
            return Err(syntax(
                *line,
                1,
                "rule left-hand side must be a plain generator word",
            ));
        }
        if lhs_term.word.is_empty() {
            return Err(syntax(*line, 1, "rule left-hand side must be nonempty"));
        }
        cur.expect(Tok::Arrow, "-> in rule")?;
        let rhs = parse_ncpoly(&mut cur, &table)?;
        if !cur.at_end() {
            let (l, c) = cur.here();
            return Err(syntax(l, c, "trailing tokens after rule"));
        }
        for w in rhs.terms.keys() {
            if w.len() >= lhs_term.word.len()
                && w.windows(lhs_term.word.len()).any(|win| win == lhs_term.word)
            {
                return Err(syntax(
                    *line,
                    1,
                    "rule right-hand side contains its own left-hand side; rewriting would not terminate",
                ));
            }
        }
        rules.push(RewriteRule {
            lhs: lhs_term.word,
            rhs,
        });
    }

    // per-generator maps
    let mut coproduct: Vec<Option<TensorPoly>> = vec![None; gens.len()];
    for (line, entry) in &find("coproduct").unwrap().entries {
        let mut cur = Cursor::new(tokenize(entry, *line)?, *line);
        let g = expect_generator(&mut cur, &table)?;
        cur.expect(Tok::Arrow, "-> in coproduct entry")?;
        let tp = parse_tensor_poly(&mut cur, &table)?;
        ensure_done(&cur)?;
        set_once(&mut coproduct, g, tp, "coproduct", *line)?;
    }
    let mut counit: Vec<Option<Scalar>> = vec![None; gens.len()];
    for (line, entry) in &find("counit").unwrap().entries {
        let mut cur = Cursor::new(tokenize(entry, *line)?, *line);
        let g = expect_generator(&mut cur, &table)?;
        cur.expect(Tok::Arrow, "-> in counit entry")?;
        let p = parse_ncpoly(&mut cur, &table)?;
        ensure_done(&cur)?;
        let value = p
            .terms
            .iter()
            .try_fold(Scalar::zero(), |acc, (w, c)| {
                if !w.is_empty() {
                    return Err(());
                }
                c.to_scalar().map(|s| acc.add(&s)).ok_or(())
            })
            .map_err(|_| syntax(*line, 1, "counit values must be scalars"))?;
        set_once(&mut counit, g, value, "counit", *line)?;
    }
    let mut antipode: Vec<Option<NCPoly>> = vec![None; gens.len()];
    for (line, entry) in &find("antipode").unwrap().entries {
        let mut cur = Cursor::new(tokenize(entry, *line)?, *line);
        let g = expect_generator(&mut cur, &table)?;
        cur.expect(Tok::Arrow, "-> in antipode entry")?;
        let p = parse_ncpoly(&mut cur, &table)?;
        ensure_done(&cur)?;
        set_once(&mut antipode, g, p, "antipode", *line)?;
    }
    for (what, missing) in [
        ("coproduct", coproduct.iter().position(|x| x.is_none())),
        ("counit", counit.iter().position(|x| x.is_none())),
        ("antipode", antipode.iter().position(|x| x.is_none())),
    ] {
        if let Some(g) = missing {
            return Err(PresentationError::HopfMapInconsistent {
                detail: format!("generator {} has no {what} entry", gens[g]),
            });
        }
    }

    // basis
    let mut basis: Vec<Word> = Vec::new();
    for (line, entry) in &find("basis").unwrap().entries {
        let mut cur = Cursor::new(tokenize(entry, *line)?, *line);
        loop {
            let term = parse_term(&mut cur, &table, false)?;
            if !term.coeff.is_one() || term.central.iter().any(|&e| e != 0) {
                return Err(syntax(*line, 1, "basis entries must be plain generator words"));
            }
            if basis.contains(&term.word) {
                return Err(syntax(*line, 1, "duplicate basis word"));
            }
            basis.push(term.word);
            if cur.eat(&Tok::Comma) {
                continue;
            }
            break;
        }
        ensure_done(&cur)?;
    }
    if basis.is_empty() {
        return Err(syntax(1, 1, "basis must be nonempty"));
    }

    Ok(ParsedPresentation {
        table,
        rules,
        coproduct: coproduct.into_iter().map(|x| x.unwrap()).collect(),
        counit: counit.into_iter().map(|x| x.unwrap()).collect(),
        antipode: antipode.into_iter().map(|x| x.unwrap()).collect(),
        basis,
    })
}

fn expect_generator(cur: &mut Cursor, table: &SymbolTable) -> Result<u32, PresentationError> {
    let (l, c) = cur.here();
    match cur.next() {
        Some(Token {
            tok: Tok::Ident(name),
            line,
            col,
        }) => match table.gen_index.get(&name) {
            Some(&g) => Ok(g),
            None => Err(PresentationError::UnknownSymbol { line, col, name }),
        },
        _ => Err(syntax(l, c, "expected a generator name")),
    }
}

fn ensure_done(cur: &Cursor) -> Result<(), PresentationError> {
    if cur.at_end() {
        Ok(())
    } else {
        let (l, c) = cur.here();
        Err(syntax(l, c, "trailing tokens"))
    }
}

fn set_once<T>(
    slot: &mut [Option<T>],
    g: u32,
    value: T,
    what: &str,
    line: usize,
) -> Result<(), PresentationError> {
    if slot[g as usize].is_some() {
        return Err(syntax(line, 1, format!("duplicate {what} entry")));
    }
    slot[g as usize] = Some(value);
    Ok(())
}
