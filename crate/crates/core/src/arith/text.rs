//! Parsing of the polynomial-style text forms used for ring elements:
//! `3-4i`, `2+t`, `1+2*x-x^3`, with rational coefficients where allowed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn perr<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

/// Parses a signed sum of terms `coef`, `coef*sym`, `coef sym^k`, `sym`.
/// `symbols` lists the accepted spellings of the indeterminate, longest
/// first. Returns exponent -> coefficient.
pub fn parse_terms(input: &str, symbols: &[&str]) -> Result<BTreeMap<u32, BigRational>> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return perr("empty element");
    }
    let bytes = s.as_bytes();
    let mut out: BTreeMap<u32, BigRational> = BTreeMap::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut neg = false;
        let mut saw_sign = false;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if saw_sign && i > 0 {
                return perr(format!("repeated sign in {input:?}"));
            }
            neg ^= bytes[i] == b'-';
            saw_sign = true;
            i += 1;
        }
        if i > 0 && !saw_sign {
            return perr(format!("missing operator in {input:?}"));
        }
        // coefficient
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let coef = if i > start {
            parse_rational(&s[start..i])?
        } else {
            BigRational::one()
        };
        let had_coef = i > start;
        if i < bytes.len() && bytes[i] == b'*' {
            if !had_coef {
                return perr(format!("dangling '*' in {input:?}"));
            }
            i += 1;
        }
        let mut exp = 0u32;
        if let Some(sym) = symbols.iter().find(|sym| s[i..].starts_with(**sym)) {
            i += sym.len();
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let st = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[st..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {input:?}")))?;
            }
        } else if !had_coef {
            return perr(format!("unexpected text at {:?}", &s[i..]));
        } else if i > 0 && bytes[i - 1] == b'*' {
            return perr(format!("dangling '*' in {input:?}"));
        }
        if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            return perr(format!("unexpected text at {:?}", &s[i..]));
        }
        let c = if neg { -coef } else { coef };
        let e = out.entry(exp).or_insert_with(BigRational::zero);
        *e += c;
    }
    Ok(out)
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad number {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad number {s:?}")))?;
    if d.is_zero() {
        return perr(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

pub fn require_integer(c: &BigRational, input: &str) -> Result<BigInt> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        perr(format!("non-integral coefficient in {input:?}"))
    }
}

/// Appends `coef*sym` to a sum being printed, in the usual compact form.
pub fn push_term(out: &mut String, coef: &BigInt, sym: &str, star: bool) {
    if coef.is_zero() {
        return;
    }
    let neg = coef.is_negative();
    if neg {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    let a = coef.abs();
    if sym.is_empty() {
        out.push_str(&a.to_string());
    } else if a.is_one() {
        out.push_str(sym);
    } else {
        out.push_str(&a.to_string());
        if star {
            out.push('*');
        }
        out.push_str(sym);
    }
}
