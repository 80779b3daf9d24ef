//! Text grammar for braid words and free words.
//!
//! Braid words are whitespace-separated tokens `x<k>`, `x<k>^-1`, `t<k>`,
//! `t<k>^-1`; `t<k>` expands to the catalog half-twist and needs nine strands.
//! Free words use `g<j>` and `g<j>^-1`. The lone token `1` (or an empty
//! string) denotes the identity.

use crate::error::{Error, Result};
use crate::words::braid::BraidWord;
use crate::words::catalog::{t_letter, STRANDS};
use crate::words::free::FreeWord;

/// Largest strand count accepted from text.
pub const MAX_STRANDS: usize = 256;

/// Largest free rank accepted from text.
pub const MAX_RANK: usize = 4096;

/// Rejects sizes that text input may not request.
pub fn check_text_size(n: usize) -> Result<()> {
    if n > MAX_STRANDS {
        return Err(Error::Size(format!("{n} exceeds the limit of {MAX_STRANDS}")));
    }
    Ok(())
}

/// Splits a token like `x12^-1` into its prefix, index and sign.
fn token(tok: &str) -> Result<(char, usize, i32)> {
    let mut chars = tok.chars();
    let prefix = chars.next().ok_or_else(|| Error::Parse("empty token".into()))?;
    let rest = chars.as_str();
    let (num, sign) = match rest.strip_suffix("^-1") {
        Some(n) => (n, -1),
        None => (rest, 1),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) || num.len() > 6 {
        return Err(Error::Parse(format!("bad token `{tok}`")));
    }
    let k: usize = num.parse().map_err(|_| Error::Parse(format!("bad index in `{tok}`")))?;
    Ok((prefix, k, sign))
}

fn is_identity_text(s: &str) -> bool {
    let t = s.trim();
    t.is_empty() || t == "1"
}

/// Parses a braid word on `strands` strands.
pub fn parse_braid(s: &str, strands: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::Size(format!("braid groups need at least 2 strands, got {strands}")));
    }
    check_text_size(strands)?;
    let mut out = BraidWord::identity(strands);
    if is_identity_text(s) {
        return Ok(out);
    }
    for tok in s.split_whitespace() {
        let (prefix, k, sign) = token(tok)?;
        match prefix {
            'x' => {
                if k == 0 || k >= strands {
                    return Err(Error::IndexOutOfRange { index: k as i64, bound: strands - 1 });
                }
                out = out.mul_unchecked(&BraidWord::from_letters_unchecked(strands, vec![sign * k as i32]));
            }
            't' => {
                if strands != STRANDS {
                    return Err(Error::Parse(format!("catalog letter `{tok}` needs {STRANDS} strands")));
                }
                out = out.mul_unchecked(&t_letter(sign * k as i32)?);
            }
            _ => return Err(Error::Parse(format!("bad token `{tok}`"))),
        }
    }
    Ok(out)
}

/// Parses a free word of the given rank.
pub fn parse_free(s: &str, rank: usize) -> Result<FreeWord> {
    if rank > MAX_RANK {
        return Err(Error::Size(format!("rank {rank} exceeds the limit of {MAX_RANK}")));
    }
    if is_identity_text(s) {
        return Ok(FreeWord::identity(rank));
    }
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        let (prefix, k, sign) = token(tok)?;
        if prefix != 'g' {
            return Err(Error::Parse(format!("bad token `{tok}`")));
        }
        if k == 0 || k > rank {
            return Err(Error::IndexOutOfRange { index: k as i64, bound: rank });
        }
        letters.push(sign * k as i32);
    }
    FreeWord::from_letters(rank, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_tokens() {
        let w = parse_braid("x1 x2^-1  x1", 3).unwrap();
        assert_eq!(w.letters(), &[1, -2, 1]);
        assert_eq!(parse_braid("t3", 9).unwrap().letters(), &[2, 3, -2]);
        assert_eq!(parse_braid("t3^-1", 9).unwrap().letters(), &[2, -3, -2]);
        assert!(parse_braid("", 3).unwrap().is_empty());
        assert!(parse_braid("1", 3).unwrap().is_empty());
    }

    #[test]
    fn braid_errors() {
        assert!(parse_braid("x3", 3).is_err());
        assert!(parse_braid("x0", 3).is_err());
        assert!(parse_braid("t1", 4).is_err());
        assert!(parse_braid("y1", 3).is_err());
        assert!(parse_braid("x", 3).is_err());
        assert!(parse_braid("x1^2", 3).is_err());
        assert!(parse_braid("x1", 1).is_err());
        assert!(parse_braid("", MAX_STRANDS + 1).is_err());
    }

    #[test]
    fn free_tokens() {
        assert_eq!(parse_free("g1 g2^-1 g2 g3", 3).unwrap().letters(), &[1, 3]);
        assert!(parse_free("g4", 3).is_err());
        assert!(parse_free("x1", 3).is_err());
        assert!(parse_free("", MAX_RANK + 1).is_err());
    }

    #[test]
    fn round_trip() {
        let w = parse_braid("x1 x2^-1 x3", 4).unwrap();
        assert_eq!(parse_braid(&w.to_string(), 4).unwrap(), w);
        let f = parse_free("g2^-1 g1", 2).unwrap();
        assert_eq!(parse_free(&f.to_string(), 2).unwrap(), f);
    }
}
