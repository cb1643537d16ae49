//! Parser for the expression syntax `c*eI^eJ + ...`.
//!
//! A term is an optional rational coefficient (`3`, `-1/2`, `0.25`) followed
//! by an optional `*` and a blade. A blade is a `^`- or `∧`-separated list
//! of generators `e<digits>`; since `n <= 8` every digit is its own index, so
//! `e135` is shorthand for `e1^e3^e5`. A term without a blade is a scalar.

use ratlin::{parse_rational, qi, Rational};

use crate::Form;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at column {column}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { column: self.column(), message: message.into() }
    }

    fn byte(&self, pos: usize) -> usize {
        self.chars.get(pos).map_or(self.src.len(), |&(b, _)| b)
    }
}

pub fn parse_form(dim: usize, input: &str) -> Result<Form, ParseError> {
    let mut cur = Cursor { chars: input.char_indices().collect(), pos: 0, src: input };
    let mut out = Form::zero(dim);
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty expression"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut sign = qi(1);
        match cur.peek() {
            Some('+') if !first => cur.pos += 1,
            Some('-') | Some('−') => {
                sign = qi(-1);
                cur.pos += 1;
            }
            Some(_) if first => {}
            Some(c) => return Err(cur.err(format!("expected '+' or '-', found '{c}'"))),
            None => break,
        }
        first = false;
        cur.skip_ws();
        out += &parse_term(dim, &mut cur)?.scale(&sign);
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(out)
}

fn parse_term(dim: usize, cur: &mut Cursor) -> Result<Form, ParseError> {
    let mut coeff: Option<Rational> = None;
    if cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
        let start = cur.pos;
        while cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '.' || c == '/') {
            cur.pos += 1;
        }
        let text = &cur.src[cur.byte(start)..cur.byte(cur.pos)];
        let c = parse_rational(text)
            .map_err(|e| ParseError { column: start + 1, message: format!("bad coefficient '{text}': {e}") })?;
        coeff = Some(c);
        cur.skip_ws();
        if cur.peek() == Some('*') {
            cur.pos += 1;
            cur.skip_ws();
            if cur.peek() != Some('e') {
                return Err(cur.err("expected a blade after '*'"));
            }
        }
    }
    let coeff = coeff.unwrap_or_else(|| qi(1));
    if cur.peek() != Some('e') {
        return match cur.peek() {
            None | Some('+') | Some('-') | Some('−') => Ok(Form::scalar(dim, coeff)),
            Some(c) if cur.pos > 0 && !matches!(cur.chars[cur.pos - 1].1, '+' | '-' | '−' | ' ') => {
                Err(cur.err(format!("unexpected '{c}'")))
            }
            Some(c) => Err(cur.err(format!("expected a coefficient or a blade, found '{c}'"))),
        };
    }
    let mut indices = Vec::new();
    loop {
        if cur.peek() != Some('e') {
            return Err(cur.err("expected 'e'"));
        }
        cur.pos += 1;
        if cur.peek() == Some('_') {
            cur.pos += 1;
        }
        if !cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(cur.err("expected an index after 'e'"));
        }
        while let Some(c) = cur.peek().filter(char::is_ascii_digit) {
            let i = c.to_digit(10).expect("digit") as usize;
            if i == 0 || i > dim {
                return Err(cur.err(format!("index {i} outside 1..{dim}")));
            }
            if indices.contains(&i) {
                return Err(cur.err(format!("repeated index {i}")));
            }
            indices.push(i);
            cur.pos += 1;
        }
        cur.skip_ws();
        match cur.peek() {
            Some('^') | Some('∧') => {
                cur.pos += 1;
                cur.skip_ws();
            }
            _ => break,
        }
    }
    Ok(Form::term(dim, &indices, coeff))
}

impl Form {
    pub fn parse(dim: usize, s: &str) -> Result<Form, ParseError> {
        parse_form(dim, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::q;

    #[test]
    fn parses_sums_of_blades() {
        let f = parse_form(7, "e1^e2^e7 + e1∧e3∧e5 - 1/2*e4^e6 + 3").unwrap();
        let want = Form::from_terms(
            7,
            [(vec![1, 2, 7], qi(1)), (vec![1, 3, 5], qi(1)), (vec![4, 6], q(-1, 2)), (vec![], qi(3))],
        );
        assert_eq!(f, want);
        assert_eq!(parse_form(7, "-2 e135").unwrap(), Form::term(7, &[1, 3, 5], qi(-2)));
    }

    #[test]
    fn display_round_trips() {
        let f = Form::from_terms(6, [(vec![2, 1], q(3, 4)), (vec![3, 5, 6], qi(-1))]);
        assert_eq!(parse_form(6, &f.to_string()).unwrap(), f);
    }

    #[test]
    fn reports_error_columns() {
        assert_eq!(parse_form(5, "e1^e9").unwrap_err().column, 5);
        assert_eq!(parse_form(5, "2*e1 + x").unwrap_err().column, 8);
        assert_eq!(parse_form(5, "e1^").unwrap_err().column, 4);
        assert_eq!(parse_form(5, "").unwrap_err().column, 1);
        assert_eq!(parse_form(5, "1/0*e1").unwrap_err().column, 1);
        assert_eq!(parse_form(5, "e1^e1").unwrap_err().column, 5);
    }
}
