//! Text syntax for braid words.
//!
//! ```text
//! word   := header? token*
//! header := "n=" INT
//! token  := "s" INT ( "^" "-"? INT )? | "1"
//! ```
//!
//! Tokens are separated by whitespace. `s2^-1` is `σ_2⁻¹`, `s3^4` is `σ_3⁴`,
//! and a lone `1` denotes the identity. When a header is present it must agree
//! with the strand count supplied by the caller.

use crate::braid::word::{BraidWord, Letter};
use crate::error::{Error, Result};

fn parse_int(s: &str, pos: usize) -> Result<i64> {
    s.parse::<i64>()
        .map_err(|_| Error::Parse { pos, msg: format!("expected an integer, found `{s}`") })
}

pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    let mut offset = 0;
    for raw in text.split_whitespace() {
        let pos = text[offset..].find(raw).map(|p| p + offset).unwrap_or(offset);
        offset = pos + raw.len();
        if let Some(h) = raw.strip_prefix("n=") {
            let n = parse_int(h, pos + 2)?;
            if n != strands as i64 {
                return Err(Error::Parse {
                    pos,
                    msg: format!("header says n={n} but {strands} strands were requested"),
                });
            }
            continue;
        }
        if raw == "1" {
            continue;
        }
        let Some(body) = raw.strip_prefix('s') else {
            return Err(Error::Parse { pos, msg: format!("unexpected token `{raw}`") });
        };
        let (idx, exp) = match body.split_once('^') {
            Some((i, e)) => (parse_int(i, pos + 1)?, parse_int(e, pos + 2 + i.len())?),
            None => (parse_int(body, pos + 1)?, 1),
        };
        if idx < 1 || idx as usize >= strands {
            return Err(Error::GeneratorOutOfRange { index: idx.max(0) as usize, strands });
        }
        let l = Letter { index: idx as usize, positive: exp > 0 };
        letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
    }
    BraidWord::new(strands, letters)
}
