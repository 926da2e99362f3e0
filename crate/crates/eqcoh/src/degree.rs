//! Parser for virtual-representation degree expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr := term (('+'|'-') term)*
//! term := [uint] atom
//! atom := uint | 'L' uint | 's' | 'rho' | 'phi(' uint ')' | 'w(' uint ')'
//! ```
//!
//! `L i` is the 2-dimensional rotation summand `λ^i`, `s` the sign
//! representation, `rho` the sum of all complex characters, `phi(ℓ)` and
//! `w(k)` the projective-space cell degrees of the complex and
//! quaternionic families.  A bare `uint` term is a trivial summand of that
//! dimension.  Printing a [`VirtualRep`] re-enters the grammar.

use crate::reps::{self, VirtualRep};
use crate::{Error, Result};

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: u32,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {:?}", b as char))
        }
    }

    fn uint(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn atom(&mut self, mult: i64) -> Result<VirtualRep> {
        match self.peek() {
            Some(b'L') => {
                self.pos += 1;
                let e = self.uint()?;
                Ok(VirtualRep::lambda_rep(self.n, e, mult))
            }
            Some(b'r') if self.keyword("rho") => {
                Ok(VirtualRep::regular_complex(self.n).scale(mult))
            }
            Some(b's') => {
                self.pos += 1;
                VirtualRep::sigma_rep(self.n, mult)
            }
            Some(b'p') if self.keyword("phi") => {
                self.eat(b'(')?;
                let l = self.uint()?;
                self.eat(b')')?;
                let l = u32::try_from(l).map_err(|_| Error::Parse {
                    pos: self.pos,
                    msg: "argument out of range".into(),
                })?;
                Ok(reps::phi(l, self.n).scale(mult))
            }
            Some(b'w') => {
                self.pos += 1;
                self.eat(b'(')?;
                let k = self.uint()?;
                self.eat(b')')?;
                let k = u32::try_from(k).map_err(|_| Error::Parse {
                    pos: self.pos,
                    msg: "argument out of range".into(),
                })?;
                Ok(reps::quat_w(k, self.n).scale(mult))
            }
            Some(b) if b.is_ascii_digit() => {
                let d = self.uint()?;
                Ok(VirtualRep::trivial_rep(self.n, mult * d))
            }
            _ => self.err("expected an atom (number, L, s, rho, phi, w)"),
        }
    }

    fn term(&mut self) -> Result<VirtualRep> {
        // an optional leading multiplicity: a number is a multiplier only
        // when an atom follows without an intervening operator
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let save = self.pos;
            let mult = self.uint()?;
            match self.peek() {
                Some(b'L' | b's' | b'r' | b'p' | b'w') => return self.atom(mult),
                Some(b) if b.is_ascii_digit() => {
                    return self.err("two numbers in a row");
                }
                _ => {
                    self.pos = save;
                    return self.atom(1);
                }
            }
        }
        self.atom(1)
    }

    fn expr(&mut self) -> Result<VirtualRep> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                None => return Ok(acc),
                Some(c) => return self.err(format!("unexpected {:?}", c as char)),
            }
        }
    }
}

/// Parse a degree expression over `C_n`.
pub fn parse(input: &str, n: u32) -> Result<VirtualRep> {
    if n == 0 {
        return Err(Error::Domain("group order must be positive".into()));
    }
    Parser { bytes: input.as_bytes(), pos: 0, n }.expr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_expressions() {
        let v = parse("2 - L2 - L3", 6).unwrap();
        assert_eq!(v.trivial, 2);
        assert_eq!(v.lambda_mults().get(&2), Some(&-1));
        assert_eq!(v.lambda_mults().get(&3), Some(&-1));

        let v = parse("3L1 + s", 4).unwrap();
        assert_eq!(v.lambda_mults().get(&1), Some(&3));
        assert_eq!(v.sigma, 1);

        let v = parse("rho", 3).unwrap();
        assert_eq!(v.underlying_dim(), 6);

        let v = parse("phi(2) - 4", 6).unwrap();
        assert_eq!(v.underlying_dim(), 0);

        assert_eq!(parse("2w(1)", 3).unwrap(), reps::quat_w(1, 3).scale(2));
    }

    #[test]
    fn lambda_zero_folds_to_trivial() {
        let v = parse("L6 + 1", 6).unwrap();
        assert_eq!(v.trivial, 3);
        assert!(v.lambda_mults().is_empty());
    }

    #[test]
    fn sigma_needs_even_order() {
        assert!(matches!(parse("s", 3), Err(Error::Domain(_))));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse("2 - L", 6) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse("", 6), Err(Error::Parse { .. })));
        assert!(matches!(parse("2 2", 6), Err(Error::Parse { .. })));
        assert!(matches!(parse("phi 3", 6), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_round_trip_examples() {
        for (text, n) in [
            ("0 - L1 + 2", 4u32),
            ("2 - L2 - L3", 6),
            ("1 + s", 2),
            ("4L2 + 3", 8),
        ] {
            let v = parse(text, n).unwrap();
            assert_eq!(parse(&v.to_string(), n).unwrap(), v);
        }
    }

    fn arb_rep() -> impl Strategy<Value = VirtualRep> {
        (
            prop::sample::select(vec![2u32, 3, 4, 6, 8, 12]),
            -5i64..=5,
            prop::collection::btree_map(0u32..12, -4i64..=4, 0..4),
            0i64..=2,
        )
            .prop_map(|(n, trivial, lambda, sigma)| {
                let mut v = VirtualRep::trivial_rep(n, trivial);
                for (e, m) in lambda {
                    v.add_lambda(e as i64, m);
                }
                if n % 2 == 0 {
                    v = v.add(&VirtualRep::sigma_rep(n, sigma).unwrap()).unwrap();
                }
                v
            })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(v in arb_rep()) {
            let text = v.to_string();
            let back = parse(&text, v.n).unwrap();
            prop_assert_eq!(back, v);
        }
    }
}
