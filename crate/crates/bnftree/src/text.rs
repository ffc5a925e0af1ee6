//! Text formats: clause documents, automaton documents, and model
//! documents, with parsers and printers forming inverse pairs. Lines
//! starting with `#` are comments everywhere; blank lines separate nothing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::automata::{BuchiTreeAutomaton, Symbol, Transition};
use crate::bnf::{
    normalize, BoolExpr, ClauseSet, Index, Literal, Proposition, RawClause, RawLhs, RawRhs,
};
use crate::model::IndexedModel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> ParseError {
        ParseError { line, col, message: message.into() }
    }
}

/// Words that cannot name propositions or indices in documents.
const RESERVED_WORDS: &[&str] = &["start", "A", "E", "X", "F", "G", "T", "F_", "prop", "index"];

fn check_name(word: &str, line: usize, col: usize) -> Result<(), ParseError> {
    if RESERVED_WORDS.contains(&word) {
        return Err(ParseError::new(line, col, format!("`{word}` is a reserved word")));
    }
    Ok(())
}

fn parse_prop(word: &str, line: usize, col: usize) -> Result<Proposition, ParseError> {
    check_name(word, line, col)?;
    Proposition::new(word).map_err(|e| ParseError::new(line, col, e.to_string()))
}

fn parse_index_name(word: &str, line: usize, col: usize) -> Result<Index, ParseError> {
    check_name(word, line, col)?;
    Index::new(word).map_err(|e| ParseError::new(line, col, e.to_string()))
}

// ---------------------------------------------------------------------------
// Clause documents
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Implies,
    Amp,
    Pipe,
    Tilde,
    LParen,
    RParen,
    Lt,
    Gt,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Implies => f.write_str("`=>`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Pipe => f.write_str("`|`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Lt => f.write_str("`<`"),
            Tok::Gt => f.write_str("`>`"),
        }
    }
}

fn lex_line(line: &str, lineno: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '#' => break,
            '=' => {
                if bytes.get(i + 1) == Some(&'>') {
                    out.push((Tok::Implies, col));
                    i += 2;
                } else {
                    return Err(ParseError::new(lineno, col, "expected `=>`"));
                }
            }
            '&' => {
                out.push((Tok::Amp, col));
                i += 1;
            }
            '|' => {
                out.push((Tok::Pipe, col));
                i += 1;
            }
            '~' => {
                out.push((Tok::Tilde, col));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, col));
                i += 1;
            }
            '<' => {
                out.push((Tok::Lt, col));
                i += 1;
            }
            '>' => {
                out.push((Tok::Gt, col));
                i += 1;
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(bytes[start..i].iter().collect()), start + 1));
            }
            c => return Err(ParseError::new(lineno, col, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

/// Recursive-descent parser over one clause line.
struct ClauseLine {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

impl ClauseLine {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map_or(1, |&(_, c)| c)
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        match self.advance() {
            Some(t) if t == want => Ok(()),
            Some(t) => {
                Err(ParseError::new(self.line, self.col(), format!("expected {want}, found {t}")))
            }
            None => Err(ParseError::new(
                self.line,
                self.col(),
                format!("expected {want}, found end of line"),
            )),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), message)
    }

    /// lit := ["~"] IDENT | "T" | "F_"
    fn literal(&mut self) -> Result<BoolExpr, ParseError> {
        let negated = if self.peek() == Some(&Tok::Tilde) {
            self.advance();
            true
        } else {
            false
        };
        let col = self.col();
        match self.advance() {
            Some(Tok::Ident(w)) if w == "T" => {
                Ok(if negated { BoolExpr::False } else { BoolExpr::True })
            }
            Some(Tok::Ident(w)) if w == "F_" => {
                Ok(if negated { BoolExpr::True } else { BoolExpr::False })
            }
            Some(Tok::Ident(w)) => {
                let p = parse_prop(&w, self.line, col)?;
                Ok(BoolExpr::lit(if negated { Literal::neg(p) } else { Literal::pos(p) }))
            }
            other => Err(self.error(match other {
                Some(t) => format!("expected a literal, found {t}"),
                None => "expected a literal, found end of line".to_string(),
            })),
        }
    }

    /// disj := lit {"|" lit}
    fn disjunction(&mut self) -> Result<BoolExpr, ParseError> {
        let mut expr = self.literal()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.advance();
            expr = expr.or(self.literal()?);
        }
        Ok(expr)
    }

    /// conj := lit {"&" lit}
    fn conjunction(&mut self) -> Result<BoolExpr, ParseError> {
        let mut expr = self.literal()?;
        while self.peek() == Some(&Tok::Amp) {
            self.advance();
            expr = expr.and(self.literal()?);
        }
        Ok(expr)
    }

    fn angle_index(&mut self) -> Result<Index, ParseError> {
        self.expect(Tok::Lt)?;
        let col = self.col();
        let name = match self.advance() {
            Some(Tok::Ident(w)) => w,
            _ => return Err(self.error("expected an index name")),
        };
        let ind = parse_index_name(&name, self.line, col)?;
        self.expect(Tok::Gt)?;
        Ok(ind)
    }

    fn paren_disj(&mut self) -> Result<BoolExpr, ParseError> {
        self.expect(Tok::LParen)?;
        let d = self.disjunction()?;
        self.expect(Tok::RParen)?;
        Ok(d)
    }

    /// rhs := "A X" "(" disj ")" | "E X" "<" IDENT ">" "(" disj ")"
    ///      | "A F" lit | "E F" "<" IDENT ">" lit | disj
    fn rhs(&mut self) -> Result<RawRhs, ParseError> {
        let quantifier = match self.peek() {
            Some(Tok::Ident(w)) if w == "A" || w == "E" => {
                let is_op = matches!(
                    self.toks.get(self.pos + 1),
                    Some((Tok::Ident(w2), _)) if w2 == "X" || w2 == "F" || w2 == "G"
                );
                if is_op {
                    let q = w.clone();
                    self.advance();
                    Some(q)
                } else {
                    None
                }
            }
            _ => None,
        };
        let Some(q) = quantifier else {
            return Ok(RawRhs::Bool(self.disjunction()?));
        };
        let op = match self.advance() {
            Some(Tok::Ident(w)) => w,
            _ => unreachable!("lookahead checked"),
        };
        match (q.as_str(), op.as_str()) {
            ("A", "X") => Ok(RawRhs::AllNext(self.paren_disj()?)),
            ("E", "X") => {
                let ind = self.angle_index()?;
                Ok(RawRhs::ExistsNext(self.paren_disj()?, ind))
            }
            ("A", "F") => Ok(RawRhs::AllSometime(self.literal()?)),
            ("E", "F") => {
                let ind = self.angle_index()?;
                Ok(RawRhs::ExistsSometime(self.literal()?, ind))
            }
            ("A", "G") => Ok(RawRhs::AllAlways { body: self.paren_disj()?, loop_prop: None }),
            _ => Err(self.error(format!("`{q} {op}` is not a modality here"))),
        }
    }

    /// clause := "start" "=>" disj | conj "=>" rhs
    fn clause(&mut self) -> Result<RawClause, ParseError> {
        let lhs = match self.peek() {
            Some(Tok::Ident(w)) if w == "start" => {
                self.advance();
                RawLhs::Start
            }
            _ => {
                let conj = self.conjunction()?;
                let mut lits = Vec::new();
                flatten_conj(&conj, &mut lits).map_err(|m| self.error(m))?;
                RawLhs::Conj(lits)
            }
        };
        self.expect(Tok::Implies)?;
        let rhs = match lhs {
            RawLhs::Start => RawRhs::Bool(self.disjunction()?),
            _ => self.rhs()?,
        };
        if self.pos != self.toks.len() {
            return Err(self.error("trailing input after clause"));
        }
        Ok(RawClause::new(lhs, rhs))
    }
}

/// Flattens a parsed conjunction of literals; `T` disappears.
fn flatten_conj(e: &BoolExpr, out: &mut Vec<Literal>) -> Result<(), String> {
    match e {
        BoolExpr::True => Ok(()),
        BoolExpr::False => Err("`F_` cannot appear in a left-hand side".to_string()),
        BoolExpr::Lit(l) => {
            out.push(l.clone());
            Ok(())
        }
        BoolExpr::And(a, b) => {
            flatten_conj(a, out)?;
            flatten_conj(b, out)
        }
        _ => Err("left-hand side must be a conjunction of literals".to_string()),
    }
}

/// Parses a clause document into a normalized clause set. Optional leading
/// `prop` and `index` declaration lines are accepted and checked but carry
/// no content of their own.
pub fn parse_clauses(text: &str) -> Result<ClauseSet, ParseError> {
    let mut raw = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let toks = lex_line(line, lineno)?;
        if toks.is_empty() {
            continue;
        }
        if let (Tok::Ident(w), _) = &toks[0] {
            if w == "prop" || w == "index" {
                for (t, col) in &toks[1..] {
                    match t {
                        Tok::Ident(name) if w == "prop" => {
                            parse_prop(name, lineno, *col)?;
                        }
                        Tok::Ident(name) => {
                            parse_index_name(name, lineno, *col)?;
                        }
                        t => {
                            return Err(ParseError::new(
                                lineno,
                                *col,
                                format!("expected a name in `{w}` declaration, found {t}"),
                            ))
                        }
                    }
                }
                continue;
            }
        }
        let mut p = ClauseLine { toks, pos: 0, line: lineno };
        raw.push(p.clause()?);
    }
    normalize(&raw).map_err(|e| ParseError::new(0, 0, e.to_string()))
}

/// Prints a clause set in the document grammar, one clause per line.
pub fn print_clauses(cs: &ClauseSet) -> String {
    let mut out = String::new();
    for c in cs.clauses() {
        out.push_str(&c.to_string());
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Automaton documents
// ---------------------------------------------------------------------------

fn split_sections<'a>(
    text: &'a str,
    names: &[&str],
) -> Result<BTreeMap<String, Vec<(usize, &'a str)>>, ParseError> {
    let mut sections: BTreeMap<String, Vec<(usize, &str)>> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (i, rawline) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = rawline.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if names.contains(&line) {
            if sections.contains_key(line) {
                return Err(ParseError::new(lineno, 1, format!("duplicate section {line}")));
            }
            sections.insert(line.to_string(), Vec::new());
            current = Some(line.to_string());
            continue;
        }
        match &current {
            Some(section) => sections.get_mut(section).unwrap().push((lineno, line)),
            None => {
                return Err(ParseError::new(
                    lineno,
                    1,
                    format!("expected a section header, one of: {}", names.join(", ")),
                ))
            }
        }
    }
    for name in names {
        if !sections.contains_key(*name) {
            return Err(ParseError::new(0, 0, format!("missing section {name}")));
        }
    }
    Ok(sections)
}

fn parse_symbol(word: &str, lineno: usize) -> Result<Symbol, ParseError> {
    let inner = word.strip_prefix('{').and_then(|w| w.strip_suffix('}')).ok_or_else(|| {
        ParseError::new(lineno, 1, format!("expected a symbol like `{{p,r}}`, found `{word}`"))
    })?;
    let mut sym = Symbol::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        sym.insert(parse_prop(part, lineno, 1)?);
    }
    Ok(sym)
}

fn print_symbol(sym: &Symbol) -> String {
    let names: Vec<&str> = sym.iter().map(|p| p.name()).collect();
    format!("{{{}}}", names.join(","))
}

/// Parses an automaton document with sections ALPHABET, DEGREES, STATES,
/// INITIAL, ACCEPTING, TRANS. Every TRANS line must reference declared
/// entities.
pub fn parse_automaton(text: &str) -> Result<BuchiTreeAutomaton, ParseError> {
    let names = ["ALPHABET", "DEGREES", "STATES", "INITIAL", "ACCEPTING", "TRANS"];
    let sections = split_sections(text, &names)?;

    let mut alphabet: BTreeSet<Symbol> = BTreeSet::new();
    for &(lineno, line) in &sections["ALPHABET"] {
        for word in line.split_whitespace() {
            alphabet.insert(parse_symbol(word, lineno)?);
        }
    }
    let mut degrees: BTreeSet<usize> = BTreeSet::new();
    for &(lineno, line) in &sections["DEGREES"] {
        for word in line.split_whitespace() {
            let d: usize = word
                .parse()
                .map_err(|_| ParseError::new(lineno, 1, format!("bad degree `{word}`")))?;
            if d == 0 {
                return Err(ParseError::new(lineno, 1, "degrees are positive"));
            }
            degrees.insert(d);
        }
    }
    let mut state_names: Vec<String> = Vec::new();
    for &(lineno, line) in &sections["STATES"] {
        for word in line.split_whitespace() {
            check_name(word, lineno, 1)?;
            if state_names.iter().any(|n| n == word) {
                return Err(ParseError::new(lineno, 1, format!("duplicate state `{word}`")));
            }
            state_names.push(word.to_string());
        }
    }
    let lookup = |word: &str, lineno: usize| -> Result<usize, ParseError> {
        state_names
            .iter()
            .position(|n| n == word)
            .ok_or_else(|| ParseError::new(lineno, 1, format!("unknown state `{word}`")))
    };
    let mut initial = BTreeSet::new();
    for &(lineno, line) in &sections["INITIAL"] {
        for word in line.split_whitespace() {
            initial.insert(lookup(word, lineno)?);
        }
    }
    let mut accepting = BTreeSet::new();
    for &(lineno, line) in &sections["ACCEPTING"] {
        for word in line.split_whitespace() {
            accepting.insert(lookup(word, lineno)?);
        }
    }
    let mut transitions = Vec::new();
    for &(lineno, line) in &sections["TRANS"] {
        // STATE , {p,r} , DEGREE -> (STATE, ..., STATE)
        let (head, tuple_part) = line
            .split_once("->")
            .ok_or_else(|| ParseError::new(lineno, 1, "expected `->` in transition"))?;
        let fields: Vec<&str> = head.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(ParseError::new(
                lineno,
                1,
                "expected `STATE , SYMBOL , DEGREE -> (STATE, ...)`",
            ));
        }
        let from = lookup(fields[0], lineno)?;
        let symbol = parse_symbol(fields[1], lineno)?;
        if !alphabet.contains(&symbol) {
            return Err(ParseError::new(lineno, 1, format!("symbol `{}` not declared", fields[1])));
        }
        let degree: usize = fields[2]
            .parse()
            .map_err(|_| ParseError::new(lineno, 1, format!("bad degree `{}`", fields[2])))?;
        if !degrees.contains(&degree) {
            return Err(ParseError::new(lineno, 1, format!("degree {degree} not declared")));
        }
        let tuple_part = tuple_part.trim();
        let inner = tuple_part
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| ParseError::new(lineno, 1, "expected `(STATE, ...)`"))?;
        let mut tuple = Vec::new();
        for word in inner.split(',') {
            let word = word.trim();
            if word.is_empty() {
                continue;
            }
            tuple.push(lookup(word, lineno)?);
        }
        if tuple.len() != degree {
            return Err(ParseError::new(
                lineno,
                1,
                format!("tuple of length {} under degree {degree}", tuple.len()),
            ));
        }
        transitions.push(Transition { from, symbol, degree, tuple });
    }
    Ok(BuchiTreeAutomaton { alphabet, degrees, state_names, transitions, initial, accepting })
}

/// Prints an automaton document; the inverse of [`parse_automaton`].
pub fn print_automaton(a: &BuchiTreeAutomaton) -> String {
    let mut out = String::new();
    out.push_str("ALPHABET\n");
    let syms: Vec<String> = a.alphabet.iter().map(print_symbol).collect();
    if !syms.is_empty() {
        out.push_str(&format!("  {}\n", syms.join(" ")));
    }
    out.push_str("DEGREES\n");
    let degs: Vec<String> = a.degrees.iter().map(|d| d.to_string()).collect();
    if !degs.is_empty() {
        out.push_str(&format!("  {}\n", degs.join(" ")));
    }
    out.push_str("STATES\n");
    if !a.state_names.is_empty() {
        out.push_str(&format!("  {}\n", a.state_names.join(" ")));
    }
    out.push_str("INITIAL\n");
    let init: Vec<&str> = a.initial.iter().map(|&s| a.state_names[s].as_str()).collect();
    if !init.is_empty() {
        out.push_str(&format!("  {}\n", init.join(" ")));
    }
    out.push_str("ACCEPTING\n");
    let acc: Vec<&str> = a.accepting.iter().map(|&s| a.state_names[s].as_str()).collect();
    if !acc.is_empty() {
        out.push_str(&format!("  {}\n", acc.join(" ")));
    }
    out.push_str("TRANS\n");
    for t in &a.transitions {
        let tuple: Vec<&str> = t.tuple.iter().map(|&s| a.state_names[s].as_str()).collect();
        out.push_str(&format!(
            "  {} , {} , {} -> ({})\n",
            a.state_names[t.from],
            print_symbol(&t.symbol),
            t.degree,
            tuple.join(", ")
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// Model documents
// ---------------------------------------------------------------------------

/// Parses a model document with sections STATES, ROOT, LABELS, EDGES.
/// LABELS lines read `state : p q`; EDGES lines read `state , index ->
/// state`. Every index must give each state exactly one successor.
pub fn parse_model(text: &str) -> Result<IndexedModel, ParseError> {
    let names = ["STATES", "ROOT", "LABELS", "EDGES"];
    let sections = split_sections(text, &names)?;

    let mut state_names: Vec<String> = Vec::new();
    for &(lineno, line) in &sections["STATES"] {
        for word in line.split_whitespace() {
            check_name(word, lineno, 1)?;
            if state_names.iter().any(|n| n == word) {
                return Err(ParseError::new(lineno, 1, format!("duplicate state `{word}`")));
            }
            state_names.push(word.to_string());
        }
    }
    let lookup = |word: &str, lineno: usize| -> Result<usize, ParseError> {
        state_names
            .iter()
            .position(|n| n == word)
            .ok_or_else(|| ParseError::new(lineno, 1, format!("unknown state `{word}`")))
    };

    let roots = &sections["ROOT"];
    let root = match roots.as_slice() {
        [(lineno, line)] => lookup(line.trim(), *lineno)?,
        _ => return Err(ParseError::new(0, 0, "ROOT must name exactly one state")),
    };

    let mut valuation: Vec<BTreeSet<Proposition>> = vec![BTreeSet::new(); state_names.len()];
    for &(lineno, line) in &sections["LABELS"] {
        let (state, props) = line
            .split_once(':')
            .ok_or_else(|| ParseError::new(lineno, 1, "expected `state : p q ...`"))?;
        let s = lookup(state.trim(), lineno)?;
        for word in props.split_whitespace() {
            valuation[s].insert(parse_prop(word, lineno, 1)?);
        }
    }

    let mut partial: BTreeMap<Index, BTreeMap<usize, usize>> = BTreeMap::new();
    for &(lineno, line) in &sections["EDGES"] {
        let (head, target) = line
            .split_once("->")
            .ok_or_else(|| ParseError::new(lineno, 1, "expected `state , index -> state`"))?;
        let fields: Vec<&str> = head.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(ParseError::new(lineno, 1, "expected `state , index -> state`"));
        }
        let from = lookup(fields[0], lineno)?;
        let ind = parse_index_name(fields[1], lineno, 1)?;
        let to = lookup(target.trim(), lineno)?;
        if partial.entry(ind.clone()).or_default().insert(from, to).is_some() {
            return Err(ParseError::new(
                lineno,
                1,
                format!("state `{}` already has an `{}` successor", fields[0], fields[1]),
            ));
        }
    }
    let mut ind_succ = BTreeMap::new();
    for (ind, edges) in partial {
        let mut f = Vec::with_capacity(state_names.len());
        for s in 0..state_names.len() {
            match edges.get(&s) {
                Some(&t) => f.push(t),
                None => {
                    return Err(ParseError::new(
                        0,
                        0,
                        format!("index `{ind}` gives no successor for state `{}`", state_names[s]),
                    ))
                }
            }
        }
        ind_succ.insert(ind, f);
    }
    Ok(IndexedModel { valuation, ind_succ, root })
}

/// Prints a model document; the inverse of [`parse_model`] up to state
/// naming.
pub fn print_model(m: &IndexedModel) -> String {
    let name = |s: usize| format!("m{s}");
    let mut out = String::new();
    out.push_str("STATES\n  ");
    out.push_str(&(0..m.state_count()).map(name).collect::<Vec<_>>().join(" "));
    out.push_str("\nROOT\n  ");
    out.push_str(&name(m.root));
    out.push_str("\nLABELS\n");
    for s in 0..m.state_count() {
        let props: Vec<&str> = m.valuation[s].iter().map(|p| p.name()).collect();
        out.push_str(&format!("  {} : {}\n", name(s), props.join(" ")));
    }
    out.push_str("EDGES\n");
    for (ind, f) in &m.ind_succ {
        for (s, &t) in f.iter().enumerate() {
            out.push_str(&format!("  {} , {ind} -> {}\n", name(s), name(t)));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Label files
// ---------------------------------------------------------------------------

/// Parses a labels file: one `state : p q` line per state, giving the
/// positive part of its label.
pub fn parse_label_file(
    text: &str,
) -> Result<BTreeMap<String, BTreeSet<Proposition>>, ParseError> {
    let mut out = BTreeMap::new();
    for (i, rawline) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = rawline.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (state, props) = line
            .split_once(':')
            .ok_or_else(|| ParseError::new(lineno, 1, "expected `state : p q ...`"))?;
        let mut set = BTreeSet::new();
        for word in props.split_whitespace() {
            set.insert(parse_prop(word, lineno, 1)?);
        }
        if out.insert(state.trim().to_string(), set).is_some() {
            return Err(ParseError::new(
                lineno,
                1,
                format!("duplicate labels for `{}`", state.trim()),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bnf::Clause;

    fn p(name: &str) -> Proposition {
        Proposition::new(name).unwrap()
    }

    fn lit(name: &str) -> Literal {
        Literal::pos(p(name))
    }

    fn ind(name: &str) -> Index {
        Index::new(name).unwrap()
    }

    #[test]
    fn parses_basic_clause_shapes() {
        let cs = parse_clauses("start => q1\nu => E F <ind1> l\np & q => A X (r | s)\n").unwrap();
        let expected = ClauseSet::from_clauses(vec![
            Clause::initial(vec![lit("q1")]),
            Clause::e_sometime(vec![lit("u")], lit("l"), ind("ind1")),
            Clause::a_step(vec![lit("p"), lit("q")], vec![lit("r"), lit("s")]),
        ]);
        assert!(cs.same_clauses(&expected), "got:\n{cs}");
    }

    #[test]
    fn clause_round_trip() {
        let text = "start => q1\n\
                    q1 => E X <ind1> (q1)\n\
                    T => A X (~q1 | v)\n\
                    p => A F ~q\n\
                    w => E F <g> l\n\
                    start => F_\n";
        let cs = parse_clauses(text).unwrap();
        let printed = print_clauses(&cs);
        let cs2 = parse_clauses(&printed).unwrap();
        assert_eq!(cs, cs2);
        assert_eq!(printed, print_clauses(&cs2));
    }

    #[test]
    fn classical_global_clause_is_normalized() {
        let cs = parse_clauses("v => p | r\n").unwrap();
        let expected = ClauseSet::from_clauses(vec![
            Clause::initial(vec![Literal::neg(p("v")), lit("p"), lit("r")]),
            Clause::a_step(vec![], vec![Literal::neg(p("v")), lit("p"), lit("r")]),
        ]);
        assert!(cs.same_clauses(&expected), "got:\n{cs}");
    }

    #[test]
    fn reports_position_of_errors() {
        let err = parse_clauses("start => q |\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("literal"), "{err}");
        let err = parse_clauses("p => E X (q)\n").unwrap_err();
        assert!(err.message.contains('<'), "{err}");
        let err = parse_clauses("start => _g0\n").unwrap_err();
        assert!(err.message.contains("reserved"), "{err}");
    }

    #[test]
    fn declaration_lines_accepted() {
        let cs = parse_clauses("prop p q\nindex f\nstart => p\n").unwrap();
        assert_eq!(cs.len(), 1);
    }

    fn sample_automaton_text() -> &'static str {
        "ALPHABET\n  {p} {r}\nDEGREES\n  2\nSTATES\n  s0 s1\nINITIAL\n  s0\nACCEPTING\n  s1\nTRANS\n  s0 , {p} , 2 -> (s0, s0)\n  s1 , {p} , 2 -> (s0, s0)\n  s0 , {r} , 2 -> (s1, s1)\n  s1 , {r} , 2 -> (s1, s1)\n"
    }

    #[test]
    fn parses_automaton_document() {
        let a = parse_automaton(sample_automaton_text()).unwrap();
        assert_eq!(a.state_count(), 2);
        assert_eq!(a.transitions.len(), 4);
        assert_eq!(a.initial, [0].into_iter().collect());
        assert_eq!(a.accepting, [1].into_iter().collect());
    }

    #[test]
    fn automaton_round_trip() {
        let a = parse_automaton(sample_automaton_text()).unwrap();
        let printed = print_automaton(&a);
        let a2 = parse_automaton(&printed).unwrap();
        assert_eq!(a, a2);
    }

    #[test]
    fn empty_trans_section_is_fine() {
        let text =
            "ALPHABET\n  {p}\nDEGREES\n  1\nSTATES\n  s0\nINITIAL\n  s0\nACCEPTING\n\nTRANS\n";
        let a = parse_automaton(text).unwrap();
        assert!(a.transitions.is_empty());
        assert!(crate::automata::is_empty(&a));
    }

    #[test]
    fn undeclared_state_in_trans_is_an_error() {
        let text = "ALPHABET\n  {p}\nDEGREES\n  1\nSTATES\n  s0\nINITIAL\n  s0\nACCEPTING\n  s0\nTRANS\n  s0 , {p} , 1 -> (s9)\n";
        let err = parse_automaton(text).unwrap_err();
        assert!(err.message.contains("unknown state"), "{err}");
    }

    #[test]
    fn model_document_round_trip() {
        let text = "STATES\n  m0 m1\nROOT\n  m0\nLABELS\n  m0 : p\n  m1 :\nEDGES\n  m0 , f -> m1\n  m1 , f -> m0\n";
        let m = parse_model(text).unwrap();
        assert!(m.validate().is_clean());
        let m2 = parse_model(&print_model(&m)).unwrap();
        assert_eq!(m, m2);
    }

    #[test]
    fn model_totality_enforced() {
        let text = "STATES\n  m0 m1\nROOT\n  m0\nLABELS\nEDGES\n  m0 , f -> m1\n";
        let err = parse_model(text).unwrap_err();
        assert!(err.message.contains("no successor"), "{err}");
    }

    #[test]
    fn label_file_parses() {
        let labels = parse_label_file("s0 : p r\ns1 : p r\n").unwrap();
        assert_eq!(labels.len(), 2);
        assert_eq!(labels["s0"], [p("p"), p("r")].into_iter().collect());
    }
}
