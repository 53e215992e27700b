//! Recursive-descent parser for the construction DSL:
//!
//! ```text
//! expr := term ('*' term)*
//! term := interval(M) | cube(M,N) | reeve(M) | simplex([v];[v];...)
//!       | polygon([x,y];...) | pyr(expr) | pyr(expr,K) | dilate(S,expr) | (expr)
//! ```

use crate::polytopes::Construction;
use crate::{Error, Result};

/// Parses and validates a construction.
pub fn parse_expr(text: &str) -> Result<Construction> {
    let c = parse_unchecked(text)?;
    c.ensure_valid()?;
    Ok(c)
}

/// Parses without the validation pass.
pub fn parse_unchecked(text: &str) -> Result<Construction> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let c = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(&["'*'", "end of input"]));
    }
    Ok(c)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

const TERM_START: [&str; 8] = ["interval", "cube", "reeve", "simplex", "polygon", "pyr", "dilate", "'('"];

impl Parser<'_> {
    fn error(&self, expected: &[&str]) -> Error {
        Error::Syntax {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{}'", c as char)]))
        }
    }

    fn expr(&mut self) -> Result<Construction> {
        let mut c = self.term()?;
        while self.eat(b'*') {
            c = Construction::product(c, self.term()?);
        }
        Ok(c)
    }

    fn ident(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn term(&mut self) -> Result<Construction> {
        if self.eat(b'(') {
            let c = self.expr()?;
            self.expect(b')')?;
            return Ok(c);
        }
        let start = {
            self.skip_ws();
            self.pos
        };
        let Some(name) = self.ident().map(str::to_owned) else {
            return Err(self.error(&TERM_START));
        };
        if !TERM_START[..7].contains(&name.as_str()) {
            self.pos = start;
            return Err(self.error(&TERM_START));
        }
        self.expect(b'(')?;
        let c = match name.as_str() {
            "interval" => Construction::Interval(self.unsigned()?),
            "reeve" => Construction::Reeve(self.unsigned()?),
            "cube" => {
                let side = self.unsigned()?;
                self.expect(b',')?;
                let dim = self.small()?;
                Construction::Cube { side, dim }
            }
            "simplex" => Construction::Simplex(self.vertices()?),
            "polygon" => {
                let pts = self.vertices()?;
                let mut out = Vec::with_capacity(pts.len());
                for v in pts {
                    match v[..] {
                        [x, y] => out.push([x, y]),
                        _ => return Err(Error::Validation(format!("polygon vertex {v:?} is not a point in Z^2"))),
                    }
                }
                Construction::Polygon(out)
            }
            "pyr" => {
                let inner = self.expr()?;
                let k = if self.eat(b',') { self.small()? } else { 1 };
                Construction::pyramid(inner, k)
            }
            "dilate" => {
                let s = self.unsigned()?;
                self.expect(b',')?;
                Construction::dilate(s, self.expr()?)
            }
            _ => unreachable!(),
        };
        self.expect(b')')?;
        Ok(c)
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(&["integer"]));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn unsigned(&mut self) -> Result<u64> {
        let at = self.pos;
        self.digits()?.parse().map_err(|_| Error::Syntax { offset: at, expected: vec!["integer below 2^64".into()] })
    }

    fn small(&mut self) -> Result<u32> {
        let at = self.pos;
        self.digits()?.parse().map_err(|_| Error::Syntax { offset: at, expected: vec!["integer below 2^32".into()] })
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let at = self.pos;
        let s = self.digits()?;
        let text = if neg { format!("-{s}") } else { s.to_string() };
        text.parse().map_err(|_| Error::Syntax { offset: at, expected: vec!["64-bit integer".into()] })
    }

    fn vertex(&mut self) -> Result<Vec<i64>> {
        self.expect(b'[')?;
        let mut v = vec![self.signed()?];
        while self.eat(b',') {
            v.push(self.signed()?);
        }
        self.expect(b']')?;
        Ok(v)
    }

    fn vertices(&mut self) -> Result<Vec<Vec<i64>>> {
        let mut out = vec![self.vertex()?];
        while self.eat(b';') {
            out.push(self.vertex()?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::polytopes::Construction::*;
    use proptest::prelude::*;

    #[test]
    fn atoms() {
        assert_eq!(parse_expr("reeve(13)").unwrap(), Reeve(13));
        assert_eq!(parse_expr(" cube( 2 , 3 )").unwrap(), Cube { side: 2, dim: 3 });
        assert_eq!(parse_expr("pyr(reeve(4))").unwrap(), parse_expr("pyr(reeve(4),1)").unwrap());
    }

    #[test]
    fn catalog_expressions() {
        let text = "dilate(99, simplex([0,0,0,0,0];[1,0,0,0,0];[0,1,0,0,0];[0,0,1,0,0];[0,0,0,1,0];[3,4,5,8,371])) \
                    * polygon([0,0];[1,0];[1,1000000];[2,1000000])";
        assert_eq!(parse_expr(text).unwrap(), catalog::witnesses()[6].construction);
        assert_eq!(parse_expr("pyr(reeve(48)) * reeve(20)").unwrap(), catalog::zero_coefficient().construction);
    }

    #[test]
    fn product_is_left_associative() {
        let c = parse_expr("interval(1) * interval(2) * interval(3)").unwrap();
        let l = Construction::product(Construction::product(Interval(1), Interval(2)), Interval(3));
        assert_eq!(c, l);
        let r = parse_expr("interval(1) * (interval(2) * interval(3))").unwrap();
        assert_ne!(r, l);
    }

    #[test]
    fn syntax_errors() {
        match parse_expr("reeve(13) * ") {
            Err(Error::Syntax { offset, expected }) => {
                assert_eq!(offset, 12);
                assert!(expected.contains(&"reeve".to_string()));
            }
            other => panic!("{other:?}"),
        }
        match parse_expr("cube(2 3)") {
            Err(Error::Syntax { offset, expected }) => {
                assert_eq!(offset, 7);
                assert_eq!(expected, vec!["','"]);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("sphere(3)"), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_expr("reeve(1))"), Err(Error::Syntax { offset: 8, .. })));
    }

    #[test]
    fn validation_after_parse() {
        assert!(parse_unchecked("interval(0)").is_ok());
        assert!(matches!(parse_expr("interval(0)"), Err(Error::Validation(_))));
        assert!(matches!(parse_expr("simplex([0,0];[1,1];[2,2])"), Err(Error::Validation(_))));
    }

    fn atom() -> impl Strategy<Value = Construction> {
        prop_oneof![
            (1u64..100).prop_map(Interval),
            (1u64..9, 1u32..4).prop_map(|(side, dim)| Cube { side, dim }),
            (1u64..200).prop_map(Reeve),
            (1u64..50).prop_map(Construction::thin_parallelogram),
            (1i64..30).prop_map(|h| Simplex(vec![vec![0, 0], vec![1, 0], vec![-3, h]])),
        ]
    }

    fn tree() -> impl Strategy<Value = Construction> {
        atom().prop_recursive(4, 16, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Construction::product(a, b)),
                (inner.clone(), 1u32..4).prop_map(|(a, k)| Construction::pyramid(a, k)),
                (1u64..6, inner).prop_map(|(s, a)| Construction::dilate(s, a)),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn print_parse_round_trip(c in tree()) {
            let text = c.to_string();
            prop_assert_eq!(parse_expr(&text).unwrap(), c);
        }
    }
}
