//! Text syntax for the command line and the JSON file formats.
//!
//! Elements are always written as canonical integer codes. Parse failures
//! carry a 1-based line and column.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::ring::{RingAutomorphism, RingElement, RingSpec};
use crate::ring_code::RingLinearCode;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(before.chars().count(), |i| {
            before[i + 1..].chars().count()
        }) + 1;
        (line, column)
    }

    fn error_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        let (line, column) = self.location(pos);
        Error::parse(line, column, msg)
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        self.error_at(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(w) {
            self.pos += w.len();
            Ok(())
        } else {
            Err(self.error(format!("expected '{w}'")))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.error("expected a non-negative integer"));
        }
        self.pos += digits;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error_at(start, "integer out of range"))
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        let v = self.uint()?;
        let v = i64::try_from(v).map_err(|_| self.error_at(start, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect('[')?;
        let mut out = Vec::new();
        if self.eat(']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(']') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            Err(self.error("unexpected trailing input"))
        } else {
            Ok(())
        }
    }
}

fn element(c: &mut Cursor, field: &FieldSpec) -> Result<Elem> {
    let start = {
        c.skip_ws();
        c.pos
    };
    let v = c.uint()?;
    field
        .check(v)
        .map_err(|e| c.error_at(start, e.to_string()))
}

/// Parses `"2*x^3 + x + 2"` into ascending coefficients. A leading or
/// separating `-` negates the following term.
pub fn parse_poly(field: &FieldSpec, s: &str) -> Result<Vec<Elem>> {
    let mut c = Cursor::new(s);
    let mut coeffs: Vec<Elem> = Vec::new();
    let mut negate = c.eat('-');
    loop {
        let (coef, deg) = poly_term(&mut c, field)?;
        let coef = if negate { field.neg(coef) } else { coef };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] = field.add(coeffs[deg], coef);
        if c.eat('+') {
            negate = false;
        } else if c.eat('-') {
            negate = true;
        } else {
            break;
        }
    }
    c.finish()?;
    crate::poly::trim(&mut coeffs);
    Ok(coeffs)
}

fn poly_term(c: &mut Cursor, field: &FieldSpec) -> Result<(Elem, usize)> {
    match c.peek() {
        Some('x') => Ok((1, monomial(c)?)),
        Some(ch) if ch.is_ascii_digit() => {
            let coef = element(c, field)?;
            let star = c.eat('*');
            if star || c.peek() == Some('x') {
                Ok((coef, monomial(c)?))
            } else {
                Ok((coef, 0))
            }
        }
        _ => Err(c.error("expected a coefficient or 'x'")),
    }
}

fn monomial(c: &mut Cursor) -> Result<usize> {
    c.expect('x')?;
    if c.eat('^') {
        Ok(c.uint()? as usize)
    } else {
        Ok(1)
    }
}

/// Parses a bracketed list of element codes, e.g. `[2,0,1]`.
pub fn parse_elements(field: &FieldSpec, s: &str) -> Result<Vec<Elem>> {
    let mut c = Cursor::new(s);
    let v = c.list(|c| element(c, field))?;
    c.finish()?;
    Ok(v)
}

/// Parses a ring element `[a_1,...,a_t]`.
pub fn parse_ring_element(ring: &RingSpec, s: &str) -> Result<RingElement> {
    let v = parse_elements(ring.field(), s)?;
    if v.len() != ring.t() {
        return Err(Error::parse(1, 1, format!("expected {} components, found {}", ring.t(), v.len())));
    }
    Ok(v)
}

/// Parses `[[1,1],[0,1]]`.
pub fn parse_matrix(field: &FieldSpec, s: &str) -> Result<Vec<Vec<Elem>>> {
    let mut c = Cursor::new(s);
    let m = c.list(|c| c.list(|c| element(c, field)))?;
    c.finish()?;
    Ok(m)
}

/// Parses `perm:[2,3,1] exps:[1,0,1]` with a 1-based permutation.
pub fn parse_automorphism(ring: &RingSpec, s: &str) -> Result<RingAutomorphism> {
    let mut c = Cursor::new(s);
    c.expect_word("perm")?;
    c.expect(':')?;
    let at = c.pos;
    let perm = c.list(|c| c.uint())?;
    c.expect_word("exps")?;
    c.expect(':')?;
    let exps = c.list(|c| c.int())?;
    c.finish()?;
    if perm.contains(&0) {
        return Err(c.error_at(at, "permutation entries are 1-based"));
    }
    let perm = perm.iter().map(|&v| v as usize - 1).collect();
    RingAutomorphism::new(ring, perm, exps)
}

/// Parses `p:3 r:2 mod:[2,2,1]`; `r` and `mod` are optional.
pub fn parse_field_block(s: &str) -> Result<FieldSpec> {
    let mut c = Cursor::new(s);
    c.expect_word("p")?;
    c.expect(':')?;
    let p = c.uint()?;
    let mut r = 1;
    let mut modulus = None;
    c.skip_ws();
    if c.src[c.pos..].starts_with("r") {
        c.expect_word("r")?;
        c.expect(':')?;
        r = c.uint()?;
    }
    c.skip_ws();
    if c.src[c.pos..].starts_with("mod") {
        c.expect_word("mod")?;
        c.expect(':')?;
        modulus = Some(c.list(|c| c.uint().map(|v| v as u32))?);
    }
    c.finish()?;
    build_field(p, r, modulus)
}

/// Parses the `--field p,r[,mod]` flag, e.g. `3`, `2,2` or `3,2,[2,2,1]`.
pub fn parse_field_flag(s: &str) -> Result<FieldSpec> {
    let mut c = Cursor::new(s);
    let p = c.uint()?;
    let mut r = 1;
    let mut modulus = None;
    if c.eat(',') {
        r = c.uint()?;
        if c.eat(',') {
            modulus = Some(c.list(|c| c.uint().map(|v| v as u32))?);
        }
    }
    c.finish()?;
    build_field(p, r, modulus)
}

fn build_field(p: u64, r: u64, modulus: Option<Vec<u32>>) -> Result<FieldSpec> {
    let r = u32::try_from(r).map_err(|_| Error::UnsupportedSize { p, r: u32::MAX })?;
    FieldSpec::new(p, r, modulus)
}

pub fn field_block(field: &FieldSpec) -> String {
    format!("p:{} r:{} mod:{}", field.p(), field.r(), int_list(field.modulus()))
}

pub fn int_list<T: ToString>(v: &[T]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", s.join(","))
}

/// Plain matrix text: whitespace-separated codes, one row per line; blank
/// lines and `#` comments are skipped.
pub fn parse_matrix_text(field: &FieldSpec, s: &str) -> Result<Vec<Vec<Elem>>> {
    let mut rows = Vec::new();
    for (li, line) in s.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let mut row = Vec::new();
        let mut col = 0;
        for tok in body.split_whitespace() {
            col = body[col..].find(tok).unwrap() + col;
            let v: u64 = tok
                .parse()
                .map_err(|_| Error::parse(li + 1, col + 1, format!("'{tok}' is not an element code")))?;
            row.push(
                field
                    .check(v)
                    .map_err(|e| Error::parse(li + 1, col + 1, e.to_string()))?,
            );
            col += tok.len();
        }
        if !row.is_empty() {
            if let Some(first) = rows.first().map(|r: &Vec<Elem>| r.len()) {
                if first != row.len() {
                    return Err(Error::parse(li + 1, 1, format!("expected {first} entries, found {}", row.len())));
                }
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

pub fn matrix_text(rows: &[Vec<Elem>]) -> String {
    let mut out = String::new();
    for r in rows {
        let s: Vec<String> = r.iter().map(|v| v.to_string()).collect();
        out.push_str(&s.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldJson {
    p: u64,
    r: u32,
    #[serde(rename = "mod")]
    modulus: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeJson {
    field: FieldJson,
    n: usize,
    rows: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingCodeJson {
    field: FieldJson,
    t: usize,
    n: usize,
    components: Vec<Vec<Vec<u64>>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line().max(1), e.column().max(1), e.to_string())
}

fn field_from_json(f: FieldJson) -> Result<FieldSpec> {
    FieldSpec::new(f.p, f.r, Some(f.modulus))
}

fn rows_from_json(field: &FieldSpec, n: usize, rows: Vec<Vec<u64>>) -> Result<LinearCode> {
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| field.check(v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    LinearCode::new(field, n, rows)
}

/// Reads a code file; the code is stored in canonical (reduced row echelon) form.
pub fn read_code(s: &str) -> Result<LinearCode> {
    let j: CodeJson = serde_json::from_str(s).map_err(json_error)?;
    let field = field_from_json(j.field)?;
    rows_from_json(&field, j.n, j.rows)
}

pub fn read_ring_code(s: &str) -> Result<RingLinearCode> {
    let j: RingCodeJson = serde_json::from_str(s).map_err(json_error)?;
    let field = field_from_json(j.field)?;
    let ring = RingSpec::new(&field, j.t)?;
    if j.components.len() != j.t {
        return Err(Error::DimensionMismatch(format!(
            "{} component blocks for t = {}",
            j.components.len(),
            j.t
        )));
    }
    let comps = j
        .components
        .into_iter()
        .map(|rows| rows_from_json(&field, j.n, rows))
        .collect::<Result<Vec<_>>>()?;
    RingLinearCode::new(&ring, comps)
}

fn field_json(field: &FieldSpec) -> String {
    format!(
        "{{\"p\": {}, \"r\": {}, \"mod\": {}}}",
        field.p(),
        field.r(),
        json_list(field.modulus())
    )
}

fn json_list(v: &[Elem]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", s.join(", "))
}

fn rows_json(rows: &[Vec<Elem>], indent: &str) -> String {
    if rows.is_empty() {
        return "[]".into();
    }
    let body: Vec<String> = rows
        .iter()
        .map(|r| format!("{indent}  {}", json_list(r)))
        .collect();
    format!("[\n{}\n{indent}]", body.join(",\n"))
}

/// Writes a code file with one generator row per line.
pub fn write_code(code: &LinearCode) -> String {
    format!(
        "{{\n  \"field\": {},\n  \"n\": {},\n  \"rows\": {}\n}}\n",
        field_json(code.field()),
        code.n(),
        rows_json(code.rows(), "  ")
    )
}

pub fn write_ring_code(code: &RingLinearCode) -> String {
    let comps: Vec<String> = code
        .components()
        .iter()
        .map(|c| format!("    {}", rows_json(c.rows(), "    ")))
        .collect();
    format!(
        "{{\n  \"field\": {},\n  \"t\": {},\n  \"n\": {},\n  \"components\": [\n{}\n  ]\n}}\n",
        field_json(code.ring().field()),
        code.ring().t(),
        code.n(),
        comps.join(",\n")
    )
}
