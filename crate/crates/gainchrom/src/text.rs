//! Text forms read from the command line: polynomials as printed by
//! `Poly2`'s `Display`, set partitions like `1 3|2 5|4 6` and degree
//! sequences like `0,1,1`.

use gainchrom_core::combinatorics::{DegreeSequence, SetPartition};
use gainchrom_core::Poly2;
use num_bigint::BigInt;

use crate::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str, CliError> {
        self.peek();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(usage(format!("expected a number at offset {}", start)));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<u32, CliError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        self.digits()?.parse().map_err(|_| usage("exponent too large"))
    }

    /// `factor ('*' factor)*` with factors `123`, `q`, `z`, `q^k`, `z^k`.
    fn term(&mut self) -> Result<Poly2, CliError> {
        let mut coeff = BigInt::from(1);
        let (mut dq, mut dz) = (0u32, 0u32);
        loop {
            match self.peek() {
                Some(b'q') => {
                    self.pos += 1;
                    dq += self.exponent()?;
                }
                Some(b'z') => {
                    self.pos += 1;
                    dz += self.exponent()?;
                }
                Some(c) if c.is_ascii_digit() => coeff *= self.digits()?.parse::<BigInt>().expect("digits"),
                other => {
                    let found = other.map_or("end of input".to_string(), |c| format!("'{}'", c as char));
                    return Err(usage(format!("expected a factor at offset {}, found {}", self.pos, found)));
                }
            }
            if !self.eat(b'*') {
                return Ok(Poly2::monomial(coeff, dq, dz));
            }
        }
    }
}

/// Parses a polynomial in `q` and `z`, e.g. `q^2 - 3*q + 2*z`.
pub fn parse_poly(text: &str) -> Result<Poly2, CliError> {
    let mut lex = Lexer { bytes: text.as_bytes(), pos: 0 };
    let mut total = Poly2::zero();
    let mut negative = lex.eat(b'-');
    loop {
        let t = lex.term()?;
        total = if negative { total - t } else { total + t };
        if lex.eat(b'+') {
            negative = false;
        } else if lex.eat(b'-') {
            negative = true;
        } else if lex.peek().is_none() {
            return Ok(total);
        } else {
            return Err(usage(format!("unexpected '{}' at offset {}", lex.bytes[lex.pos] as char, lex.pos)));
        }
    }
}

/// Parses blocks of 1-based elements separated by `|`, e.g. `1 3|2 5|4 6`.
/// Elements inside a block may be separated by spaces or commas.
pub fn parse_partition(text: &str) -> Result<SetPartition, CliError> {
    let mut blocks = Vec::new();
    for block in text.split('|') {
        let elements = block
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| match s.parse::<usize>() {
                Ok(x) if x >= 1 => Ok(x - 1),
                _ => Err(usage(format!("bad partition element '{}'", s))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        blocks.push(elements);
    }
    let n = blocks.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
    Ok(SetPartition::from_blocks(n, blocks)?)
}

/// Renders a partition the way `parse_partition` reads it.
pub fn format_partition(p: &SetPartition) -> String {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("|")
}

/// Parses `0,1,1` or `0 1 1`.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence, CliError> {
    let values = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| usage(format!("bad sequence entry '{}'", s))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DegreeSequence(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_printed_forms() {
        let p = parse_poly("q^2 - 3*q + 2*z").unwrap();
        let expected = Poly2::from_terms([(2, 0, 1), (1, 0, -3), (0, 1, 2)]);
        assert_eq!(p, expected);
        assert_eq!(parse_poly("0").unwrap(), Poly2::zero());
        assert_eq!(parse_poly("-q*z^2 + 7").unwrap(), Poly2::from_terms([(1, 2, -1), (0, 0, 7)]));
        assert_eq!(parse_poly(" 2 * q * q ").unwrap(), Poly2::monomial(2, 2, 0));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "q +", "x", "q^", "2**q", "q q", "--q"] {
            assert!(parse_poly(bad).is_err(), "{:?}", bad);
        }
    }

    #[test]
    fn partitions() {
        let p = parse_partition("1 3|2 5|4 6").unwrap();
        assert_eq!(p.n(), 6);
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1, 4], vec![3, 5]]);
        assert_eq!(format_partition(&p), "1 3|2 5|4 6");
        assert!(parse_partition("1 2|2").is_err());
        assert!(parse_partition("1|3").is_err());
        assert!(parse_partition("0|1").is_err());
    }

    #[test]
    fn sequences() {
        assert_eq!(parse_sequence("0,1, 1").unwrap().0, vec![0, 1, 1]);
        assert_eq!(parse_sequence("0 1 2").unwrap().0, vec![0, 1, 2]);
        assert!(parse_sequence("0,-1").is_err());
    }

    fn poly() -> impl Strategy<Value = Poly2> {
        proptest::collection::vec((-1000i64..1000, 0u32..5, 0u32..4), 0..8).prop_map(|terms| {
            Poly2::from_terms(terms.into_iter().map(|(c, dq, dz)| (dq, dz, BigInt::from(c) * BigInt::from(c) * c)))
        })
    }

    proptest! {
        #[test]
        fn display_round_trips(p in poly()) {
            prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }
}
