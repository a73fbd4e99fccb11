//! Line-oriented text formats for algebras, modules, short exact sequences
//! and (co)resolutions. Vertices are numbered from 1 in files.
//!
//! ```text
//! # algebra
//! name A3rad2
//! field 5
//! vertices 3
//! arrow a 1 2
//! arrow b 2 3
//! rel 1*a.b
//!
//! # module: one `map` block per arrow v → w, dims[w] rows of dims[v] entries
//! dims 1 1 0
//! map a
//! 1
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};
use crate::quiver::{Algebra, Arrow, Morphism, Quiver, Representation, ShortExactSequence};
use crate::resolve::{AugmentedComplex, Direction};

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

#[derive(Clone, Debug)]
struct Token {
    text: String,
    col: usize,
}

#[derive(Clone, Debug)]
struct Line {
    number: usize,
    tokens: Vec<Token>,
}

impl Line {
    fn head(&self) -> &str {
        &self.tokens[0].text
    }

    fn end_col(&self) -> usize {
        self.tokens.last().map_or(1, |t| t.col + t.text.chars().count())
    }

    fn arg(&self, i: usize, what: &str) -> Result<&Token> {
        self.tokens.get(i).ok_or_else(|| perr(self.number, self.end_col(), format!("expected {}", what)))
    }

    fn usize_arg(&self, i: usize, what: &str) -> Result<usize> {
        let t = self.arg(i, what)?;
        t.text.parse().map_err(|_| perr(self.number, t.col, format!("expected {}, found {:?}", what, t.text)))
    }

    fn no_more(&self, n: usize) -> Result<()> {
        match self.tokens.get(n) {
            Some(t) => Err(perr(self.number, t.col, format!("unexpected {:?}", t.text))),
            None => Ok(()),
        }
    }
}

/// Non-empty lines with `#` comments stripped, split on whitespace with
/// 1-based columns.
fn lex(text: &str) -> Vec<Line> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (c, ch) in body.chars().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(c),
                (true, Some(s)) => {
                    tokens.push(Token { text: body.chars().skip(s).take(c - s).collect(), col: s + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            tokens.push(Token { text: body.chars().skip(s).collect(), col: s + 1 });
        }
        if !tokens.is_empty() {
            out.push(Line { number: i + 1, tokens });
        }
    }
    out
}

struct Cursor {
    lines: Vec<Line>,
    pos: usize,
    last_line: usize,
}

impl Cursor {
    fn new(text: &str) -> Cursor {
        let last_line = text.lines().count().max(1);
        Cursor { lines: lex(text), pos: 0, last_line }
    }

    fn peek(&self) -> Option<&Line> {
        self.lines.get(self.pos)
    }

    fn next(&mut self) -> Option<Line> {
        let l = self.lines.get(self.pos).cloned();
        self.pos += 1;
        l
    }

    fn expect(&mut self, keyword: &str) -> Result<Line> {
        match self.next() {
            Some(l) if l.head() == keyword => Ok(l),
            Some(l) => Err(perr(l.number, 1, format!("expected `{}`, found {:?}", keyword, l.head()))),
            None => Err(perr(self.last_line, 1, format!("expected `{}`, found end of file", keyword))),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Some(l) => Err(perr(l.number, 1, format!("unexpected {:?}", l.head()))),
            None => Ok(()),
        }
    }
}

fn is_number(s: &str) -> bool {
    s.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) && !s.trim_start_matches('-').is_empty()
}

/// `rows` rows of `cols` integers.
fn read_matrix(cur: &mut Cursor, f: PrimeField, rows: usize, cols: usize, what: &str) -> Result<Matrix> {
    let mut data = Vec::with_capacity(rows * cols);
    if cols == 0 {
        return Ok(Matrix::zeros(f, rows, 0));
    }
    for r in 0..rows {
        let line = match cur.peek() {
            Some(l) if is_number(l.head()) => cur.next().unwrap(),
            Some(l) => {
                return Err(perr(l.number, 1, format!("{}: expected row {} of {}", what, r + 1, rows)));
            }
            None => return Err(perr(cur.last_line, 1, format!("{}: expected row {} of {}", what, r + 1, rows))),
        };
        if line.tokens.len() != cols {
            let col = line.tokens.get(cols).map_or(line.end_col(), |t| t.col);
            return Err(perr(line.number, col, format!("{}: expected {} entries, found {}", what, cols, line.tokens.len())));
        }
        for t in &line.tokens {
            let v: i64 = t.text.parse().map_err(|_| perr(line.number, t.col, format!("not an integer: {:?}", t.text)))?;
            data.push(f.reduce(v));
        }
    }
    Ok(Matrix::from_vec(f, rows, cols, data))
}

fn write_matrix(out: &mut String, m: &Matrix) {
    if m.cols() == 0 {
        return;
    }
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
}

pub fn parse_algebra(text: &str, default_name: &str) -> Result<Algebra> {
    let mut cur = Cursor::new(text);
    let mut name = default_name.to_string();
    if let Some(l) = cur.peek() {
        if l.head() == "name" {
            let l = cur.next().unwrap();
            name = l.arg(1, "a name")?.text.clone();
            l.no_more(2)?;
        }
    }
    let fl = cur.expect("field")?;
    let p = fl.usize_arg(1, "a prime")?;
    fl.no_more(2)?;
    let field = u32::try_from(p)
        .map_err(|_| Error::InvalidField(u32::MAX))
        .and_then(PrimeField::new)
        .map_err(|e| perr(fl.number, fl.tokens[1].col, e.to_string()))?;
    let vl = cur.expect("vertices")?;
    let n = vl.usize_arg(1, "a vertex count")?;
    vl.no_more(2)?;
    let mut arrows = Vec::new();
    let mut relations = Vec::new();
    let mut first_rel_line = None;
    while let Some(l) = cur.next() {
        match l.head() {
            "arrow" => {
                if first_rel_line.is_some() {
                    return Err(perr(l.number, 1, "arrows must precede relations"));
                }
                let id = l.arg(1, "an arrow id")?.text.clone();
                if is_number(&id) || id.contains(['.', '*', '+', '-']) {
                    return Err(perr(l.number, l.tokens[1].col, format!("invalid arrow id {:?}", id)));
                }
                let mut ends = [0usize; 2];
                for (j, e) in ends.iter_mut().enumerate() {
                    let v = l.usize_arg(2 + j, "a vertex")?;
                    if v == 0 || v > n {
                        return Err(perr(l.number, l.tokens[2 + j].col, format!("vertex {} out of range 1..{}", v, n)));
                    }
                    *e = v - 1;
                }
                l.no_more(4)?;
                if arrows.iter().any(|a: &Arrow| a.id == id) {
                    return Err(perr(l.number, l.tokens[1].col, format!("duplicate arrow {:?}", id)));
                }
                arrows.push(Arrow { id, source: ends[0], target: ends[1] });
            }
            "rel" => {
                first_rel_line.get_or_insert(l.number);
                relations.push((l.number, parse_relation(&l, &arrows)?));
            }
            other => return Err(perr(l.number, 1, format!("unknown keyword {:?}", other))),
        }
    }
    let quiver = Quiver::new(n, arrows).map_err(|e| perr(vl.number, 1, e.to_string()))?;
    let line_of = |e: &Error| -> usize {
        if let Error::InvalidRelation(msg) = e {
            if let Some(k) = msg.strip_prefix("relation ").and_then(|r| r.split(':').next()).and_then(|d| d.parse::<usize>().ok())
            {
                return relations.get(k - 1).map_or(1, |r| r.0);
            }
        }
        first_rel_line.unwrap_or(vl.number)
    };
    let rels: Vec<_> = relations.iter().map(|r| r.1.clone()).collect();
    Algebra::new(&name, field, quiver, rels).map_err(|e| perr(line_of(&e), 1, e.to_string()))
}

/// `c1*p1 + c2*p2 - …` with each path an arrow-id sequence joined by `.`;
/// a missing coefficient means 1.
fn parse_relation(l: &Line, arrows: &[Arrow]) -> Result<Vec<(i64, Vec<String>)>> {
    if l.tokens.len() < 2 {
        return Err(perr(l.number, l.end_col(), "expected a relation"));
    }
    // Re-join the rest of the line, tracking the column of every character.
    let mut chars: Vec<(char, usize)> = Vec::new();
    for t in &l.tokens[1..] {
        for (k, ch) in t.text.chars().enumerate() {
            chars.push((ch, t.col + k));
        }
    }
    let mut terms = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1i64;
        while i < chars.len() && (chars[i].0 == '+' || chars[i].0 == '-') {
            if chars[i].0 == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && chars[i].0 != '+' && chars[i].0 != '-' {
            i += 1;
        }
        if start == i {
            let col = chars.get(start).map_or(l.end_col(), |c| c.1);
            return Err(perr(l.number, col, "empty term"));
        }
        let term: String = chars[start..i].iter().map(|c| c.0).collect();
        let col0 = chars[start].1;
        let (coeff, path, pcol) = match term.split_once('*') {
            Some((c, p)) => {
                let v: i64 = c.parse().map_err(|_| perr(l.number, col0, format!("bad coefficient {:?}", c)))?;
                (v, p.to_string(), col0 + c.chars().count() + 1)
            }
            None => (1, term.clone(), col0),
        };
        let mut ids = Vec::new();
        let mut off = 0;
        for id in path.split('.') {
            if !arrows.iter().any(|a| a.id == id) {
                return Err(perr(l.number, pcol + off, format!("unknown arrow {:?}", id)));
            }
            ids.push(id.to_string());
            off += id.chars().count() + 1;
        }
        terms.push((sign * coeff, ids));
    }
    Ok(terms)
}

pub fn emit_algebra(alg: &Algebra) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "name {}", alg.name());
    let _ = writeln!(s, "field {}", alg.field.p());
    let _ = writeln!(s, "vertices {}", alg.vertex_count());
    for a in alg.arrows() {
        let _ = writeln!(s, "arrow {} {} {}", a.id, a.source + 1, a.target + 1);
    }
    for r in &alg.relations {
        let terms: Vec<String> = r
            .terms
            .iter()
            .map(|(c, p)| {
                let ids: Vec<&str> = p.iter().map(|&a| alg.arrows()[a].id.as_str()).collect();
                format!("{}*{}", c, ids.join("."))
            })
            .collect();
        let _ = writeln!(s, "rel {}", terms.join(" + "));
    }
    s
}

fn read_module(cur: &mut Cursor, alg: &Algebra) -> Result<Representation> {
    let dl = cur.expect("dims")?;
    let n = alg.vertex_count();
    let mut dims = Vec::with_capacity(n);
    for v in 0..n {
        dims.push(dl.usize_arg(1 + v, &format!("dimension at vertex {}", v + 1))?);
    }
    dl.no_more(1 + n)?;
    let f = alg.field;
    let arrows = alg.arrows();
    let mut maps: Vec<Option<Matrix>> = vec![None; arrows.len()];
    while let Some(l) = cur.peek() {
        if l.head() != "map" {
            break;
        }
        let l = cur.next().unwrap();
        let id = &l.arg(1, "an arrow id")?.text;
        l.no_more(2)?;
        let a = alg
            .quiver
            .arrow_index(id)
            .ok_or_else(|| perr(l.number, l.tokens[1].col, format!("unknown arrow {:?}", id)))?;
        if maps[a].is_some() {
            return Err(perr(l.number, l.tokens[1].col, format!("arrow {:?} given twice", id)));
        }
        let (s, t) = (arrows[a].source, arrows[a].target);
        let rows = if dims[s] == 0 { 0 } else { dims[t] };
        let m = read_matrix(cur, f, rows, dims[s], &format!("map {}", id))?;
        maps[a] = Some(if rows == dims[t] { m } else { Matrix::zeros(f, dims[t], dims[s]) });
    }
    let maps: Vec<Matrix> = maps
        .into_iter()
        .enumerate()
        .map(|(a, m)| m.unwrap_or_else(|| Matrix::zeros(f, dims[arrows[a].target], dims[arrows[a].source])))
        .collect();
    Representation::new(alg, dims, maps).map_err(|e| perr(dl.number, 1, e.to_string()))
}

fn write_module(s: &mut String, m: &Representation) {
    let dims: Vec<String> = m.dims().iter().map(|d| d.to_string()).collect();
    let _ = writeln!(s, "dims {}", dims.join(" "));
    for (a, arrow) in m.algebra().arrows().iter().enumerate() {
        let _ = writeln!(s, "map {}", arrow.id);
        if m.dim(arrow.source) > 0 {
            write_matrix(s, m.map(a));
        }
    }
}

pub fn parse_module(text: &str, alg: &Algebra) -> Result<Representation> {
    let mut cur = Cursor::new(text);
    let m = read_module(&mut cur, alg)?;
    cur.finish()?;
    Ok(m)
}

pub fn emit_module(m: &Representation) -> String {
    let mut s = String::new();
    write_module(&mut s, m);
    s
}

/// Blocks `vertex v` followed by `dims_target[v]` rows of `dims_source[v]`
/// entries; omitted vertices are zero.
fn read_morphism(cur: &mut Cursor, source: &Representation, target: &Representation, what: &str) -> Result<Morphism> {
    let f = source.field();
    let n = source.algebra().vertex_count();
    let mut blocks: Vec<Option<Matrix>> = vec![None; n];
    let mut first = None;
    while let Some(l) = cur.peek() {
        if l.head() != "vertex" {
            break;
        }
        let l = cur.next().unwrap();
        first.get_or_insert(l.number);
        let v = l.usize_arg(1, "a vertex")?;
        l.no_more(2)?;
        if v == 0 || v > n {
            return Err(perr(l.number, l.tokens[1].col, format!("vertex {} out of range 1..{}", v, n)));
        }
        if blocks[v - 1].is_some() {
            return Err(perr(l.number, l.tokens[1].col, format!("vertex {} given twice", v)));
        }
        let (r, c) = (target.dim(v - 1), source.dim(v - 1));
        let rows = if c == 0 { 0 } else { r };
        let m = read_matrix(cur, f, rows, c, &format!("{} at vertex {}", what, v))?;
        blocks[v - 1] = Some(if rows == r { m } else { Matrix::zeros(f, r, c) });
    }
    let blocks: Vec<Matrix> = blocks
        .into_iter()
        .enumerate()
        .map(|(v, b)| b.unwrap_or_else(|| Matrix::zeros(f, target.dim(v), source.dim(v))))
        .collect();
    Morphism::new(source, target, blocks).map_err(|e| perr(first.unwrap_or(cur.last_line), 1, format!("{}: {}", what, e)))
}

fn write_morphism(s: &mut String, m: &Morphism) {
    for v in 0..m.blocks().len() {
        if m.source().dim(v) > 0 && m.target().dim(v) > 0 {
            let _ = writeln!(s, "vertex {}", v + 1);
            write_matrix(s, m.block(v));
        }
    }
}

/// `left`, `middle` module sections and the `inclusion` of the left term;
/// the sequence is completed by the cokernel.
pub fn parse_ses(text: &str, alg: &Algebra) -> Result<ShortExactSequence> {
    let mut cur = Cursor::new(text);
    cur.expect("left")?;
    let left = read_module(&mut cur, alg)?;
    cur.expect("middle")?;
    let middle = read_module(&mut cur, alg)?;
    let il = cur.expect("inclusion")?;
    let f = read_morphism(&mut cur, &left, &middle, "inclusion")?;
    cur.finish()?;
    if !f.is_injective() {
        return Err(perr(il.number, 1, "the inclusion is not injective"));
    }
    let (_, g) = crate::quiver::cokernel(&f);
    ShortExactSequence::new(f, g).map_err(|e| perr(il.number, 1, e.to_string()))
}

pub fn emit_ses(s: &ShortExactSequence) -> String {
    let mut out = String::from("left\n");
    write_module(&mut out, s.left());
    out.push_str("middle\n");
    write_module(&mut out, s.middle());
    out.push_str("inclusion\n");
    write_morphism(&mut out, &s.f);
    out
}

pub fn emit_complex(c: &AugmentedComplex) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "complex {}",
        match c.direction {
            Direction::Resolution => "resolution",
            Direction::Coresolution => "coresolution",
        }
    );
    s.push_str("module\n");
    write_module(&mut s, &c.module);
    for (i, t) in c.terms.iter().enumerate() {
        let _ = writeln!(s, "term {}", i);
        write_module(&mut s, t);
    }
    s.push_str("augmentation\n");
    write_morphism(&mut s, &c.augmentation);
    for (i, d) in c.differentials.iter().enumerate() {
        let _ = writeln!(s, "differential {}", i);
        write_morphism(&mut s, d);
    }
    s
}

pub fn parse_complex(text: &str, alg: &Algebra) -> Result<AugmentedComplex> {
    let mut cur = Cursor::new(text);
    let hl = cur.expect("complex")?;
    let direction = match hl.arg(1, "`resolution` or `coresolution`")?.text.as_str() {
        "resolution" => Direction::Resolution,
        "coresolution" => Direction::Coresolution,
        other => return Err(perr(hl.number, hl.tokens[1].col, format!("unknown direction {:?}", other))),
    };
    hl.no_more(2)?;
    cur.expect("module")?;
    let module = read_module(&mut cur, alg)?;
    let mut terms = Vec::new();
    while cur.peek().is_some_and(|l| l.head() == "term") {
        let l = cur.next().unwrap();
        let i = l.usize_arg(1, "a term index")?;
        if i != terms.len() {
            return Err(perr(l.number, l.tokens[1].col, format!("expected term {}", terms.len())));
        }
        terms.push(read_module(&mut cur, alg)?);
    }
    if terms.is_empty() {
        return Err(perr(cur.peek().map_or(cur.last_line, |l| l.number), 1, "expected `term 0`"));
    }
    cur.expect("augmentation")?;
    let augmentation = match direction {
        Direction::Resolution => read_morphism(&mut cur, &terms[0], &module, "augmentation")?,
        Direction::Coresolution => read_morphism(&mut cur, &module, &terms[0], "augmentation")?,
    };
    let mut differentials = Vec::new();
    for i in 0..terms.len() - 1 {
        let l = cur.expect("differential")?;
        if l.usize_arg(1, "a differential index")? != i {
            return Err(perr(l.number, l.tokens[1].col, format!("expected differential {}", i)));
        }
        differentials.push(match direction {
            Direction::Resolution => read_morphism(&mut cur, &terms[i + 1], &terms[i], "differential")?,
            Direction::Coresolution => read_morphism(&mut cur, &terms[i], &terms[i + 1], "differential")?,
        });
    }
    cur.finish()?;
    Ok(AugmentedComplex { direction, module, terms, differentials, augmentation, summands: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{algebra, random_module, random_ses, NAMES};
    use crate::resolve::{min_coresolution, min_resolution};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fixture_algebras_round_trip() {
        for name in NAMES {
            let a = algebra(name).unwrap();
            let text = emit_algebra(&a);
            let b = parse_algebra(&text, "x").unwrap();
            assert_eq!(emit_algebra(&b), text);
            assert_eq!(b.dimension(), a.dimension());
        }
    }

    #[test]
    fn diagnostics_carry_positions() {
        let bad = "field 5\nvertices 2\narrow a 1 3\n";
        assert_eq!(parse_algebra(bad, "x").unwrap_err(), perr(3, 11, "vertex 3 out of range 1..2"));
        let bad = "field 5\nvertices 1\narrow x 1 1\nrel 1*x.y\n";
        assert!(matches!(parse_algebra(bad, "x").unwrap_err(), Error::Parse { line: 4, col: 9, .. }));
        let bad = "field 6\nvertices 1\n";
        assert!(matches!(parse_algebra(bad, "x").unwrap_err(), Error::Parse { line: 1, col: 7, .. }));
        let a = algebra("kA2").unwrap();
        let bad = "dims 1 1\nmap a\n1 2\n";
        assert!(matches!(parse_module(bad, &a).unwrap_err(), Error::Parse { line: 3, col: 3, .. }));
        let x = algebra("kxx2").unwrap();
        // x acting by a unipotent Jordan block of size 3 violates x² = 0.
        let bad = "dims 3\nmap x\n0 0 0\n1 0 0\n0 1 0\n";
        assert!(matches!(parse_module(bad, &x).unwrap_err(), Error::Parse { line: 1, .. }));
    }

    #[test]
    fn relations_with_signs() {
        let text = "field 7\nvertices 2\narrow a 1 2\narrow b 1 2\narrow c 2 2\nrel a.c - 2*b.c\nrel c.c\n";
        let alg = parse_algebra(text, "t").unwrap();
        assert_eq!(alg.relations.len(), 2);
        assert_eq!(parse_algebra(&emit_algebra(&alg), "t").unwrap().dimension(), alg.dimension());
    }

    #[test]
    fn zero_module_and_complex() {
        let a = algebra("kA2").unwrap();
        let z = Representation::zero(&a);
        assert_eq!(parse_module(&emit_module(&z), &a).unwrap(), z);
        let c = min_resolution(&z, 3);
        let back = parse_complex(&emit_complex(&c), &a).unwrap();
        assert_eq!(back.terms, c.terms);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn modules_sequences_and_complexes_round_trip(seed in 0u64..10_000, which in 0usize..5) {
            let a = algebra(NAMES[which]).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_module(&a, &mut rng, 3);
            prop_assert_eq!(&parse_module(&emit_module(&m), &a).unwrap(), &m);
            let s = random_ses(&a, &mut rng, 3);
            let back = parse_ses(&emit_ses(&s), &a).unwrap();
            prop_assert_eq!(&back.f, &s.f);
            for c in [min_resolution(&m, 2), min_coresolution(&m, 2)] {
                let text = emit_complex(&c);
                let back = parse_complex(&text, &a).unwrap();
                prop_assert_eq!(&back.terms, &c.terms);
                prop_assert_eq!(&back.differentials, &c.differentials);
                prop_assert_eq!(&back.augmentation, &c.augmentation);
                prop_assert_eq!(emit_complex(&back), text);
            }
        }
    }
}
