//! Text form of elements: `<bits>:<cycles>`, e.g. `10010:(1 2)(3 4)`.
//!
//! `<bits>` has one character per position (position `i` holds `aᵢ`) and fixes
//! the degree. `<cycles>` is a product of disjoint cycles in 1-indexed decimal,
//! or `()` for the identity. The printed form is canonical: each cycle starts
//! at its least element, cycles are ordered by that element, and fixed points
//! are omitted.

use std::str::FromStr;

use super::{Permutation, SignVector, SignedElement, MAX_DEGREE};
use crate::error::{Error, Result};

impl FromStr for SignedElement {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_element(text)
    }
}

pub fn parse_element(text: &str) -> Result<SignedElement> {
    let text = text.trim();
    let (bits, cycles) = text
        .split_once(':')
        .ok_or_else(|| Error::MalformedBits(format!("missing ':' separator in {text:?}")))?;
    let sign = parse_bits(bits)?;
    let perm = parse_cycles(sign.degree(), cycles)?;
    SignedElement::new(sign, perm)
}

fn parse_bits(bits: &str) -> Result<SignVector> {
    if bits.is_empty() {
        return Err(Error::MalformedBits("empty sign vector".into()));
    }
    if bits.len() > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(bits.len()));
    }
    let values = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::MalformedBits(format!(
                "unexpected character {other:?} in {bits:?}"
            ))),
        })
        .collect::<Result<Vec<u8>>>()?;
    SignVector::from_slice(&values)
}

fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
    let text = text.trim();
    if text == "()" {
        return Ok(Permutation::identity(degree));
    }
    if text.is_empty() {
        return Err(Error::MalformedCycles("empty cycle list (use \"()\")".into()));
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::MalformedCycles(format!("expected '(' at {rest:?}")))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| Error::MalformedCycles(format!("unclosed cycle in {text:?}")))?;
        let body = &body_start[..close];
        if body.contains('(') {
            return Err(Error::MalformedCycles(format!("nested '(' in {text:?}")));
        }
        let cycle = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::MalformedCycles(format!("bad index {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if cycle.is_empty() {
            return Err(Error::MalformedCycles(format!("empty cycle in {text:?}")));
        }
        cycles.push(cycle);
        rest = body_start[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let g = parse_element("10010:(1 2)(3 4)").unwrap();
        assert_eq!(g.sign().to_vec(), vec![1, 0, 0, 1, 0]);
        assert_eq!(g.perm().images(), vec![2, 1, 4, 3, 5]);
        let id = parse_element("000:()").unwrap();
        assert!(id.is_identity());
        assert_eq!(id.degree(), 3);
    }

    #[test]
    fn canonical_printing() {
        let g = parse_element("0000:(3 1)(4)(2)").unwrap();
        assert_eq!(g.to_string(), "0000:(1 3)");
        let g = parse_element("000:(2 3 1)").unwrap();
        assert_eq!(g.to_string(), "000:(1 2 3)");
    }

    #[test]
    fn distinct_diagnostics() {
        assert!(matches!(parse_element("10:(1 1)"), Err(Error::RepeatedIndex(1))));
        assert!(matches!(parse_element("10:(1 2)(2)"), Err(Error::RepeatedIndex(2))));
        assert!(matches!(
            parse_element("10:(1 3)"),
            Err(Error::IndexOutOfRange { index: 3, degree: 2 })
        ));
        assert!(matches!(parse_element("1x:()"), Err(Error::MalformedBits(_))));
        assert!(matches!(parse_element(":()"), Err(Error::MalformedBits(_))));
        assert!(matches!(parse_element("10"), Err(Error::MalformedBits(_))));
        assert!(matches!(parse_element("10:(1 2"), Err(Error::MalformedCycles(_))));
        assert!(matches!(parse_element("10:1 2"), Err(Error::MalformedCycles(_))));
        assert!(matches!(parse_element("10:(a 2)"), Err(Error::MalformedCycles(_))));
        assert!(matches!(parse_element("10:"), Err(Error::MalformedCycles(_))));
    }

    fn arb_element() -> impl Strategy<Value = SignedElement> {
        (1usize..=9).prop_flat_map(|n| {
            (
                proptest::collection::vec(0u8..=1, n),
                Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
            )
                .prop_map(|(bits, images)| {
                    SignedElement::new(
                        SignVector::from_slice(&bits).unwrap(),
                        Permutation::from_images(&images).unwrap(),
                    )
                    .unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(g in arb_element()) {
            let text = g.to_string();
            let back = parse_element(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
