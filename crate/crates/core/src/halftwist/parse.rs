//! Text grammar for half-twist expressions.
//!
//! ```text
//! product := factor*
//! factor  := atom ( "^" "-"? INT | "^" "{" product "}" )*
//! atom    := ("Z" | "Zb") "[" groups "]" | "s" INT | "(" product ")"
//! groups  := group ( "," group )*
//! group   := point+ | INT ".." INT
//! point   := INT "'"?
//! ```
//!
//! Points inside one group are separated by whitespace, groups by commas.
//! `Z[1,3]` is `Z_{1 3}`, `Zb[1,3]^2` is `Z̄²_{1 3}`, `Z[1 1',2]^2` is the
//! grouped twist `Z²_{1 1′, 2}` and `Z[2..4]` is the chain `Z_{2 3 4}`.
//! Three or more single-point groups (`Z[1,3,4]`) give a multi-point twist.
//! A primed point anywhere switches the whole expression to doubled labels,
//! where `i` is strand `2i−1` and `i′` is strand `2i`; ranges are not allowed
//! there. `s<k>` is always the raw generator `σ_k`. `a ^ { b c }` conjugates
//! `a` by the product `b c`.

use crate::error::{Error, Result};
use crate::halftwist::expr::{DoubledIndex, HalfTwistExpr, Point};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Z,
    Zb,
    Sigma(usize),
    Int(i64),
    Prime,
    LBracket,
    RBracket,
    Comma,
    DotDot,
    Caret,
    Minus,
    LBrace,
    RBrace,
    LParen,
    RParen,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut p = 0;
    let read_int = |p: &mut usize| -> Result<i64> {
        let start = *p;
        while *p < bytes.len() && bytes[*p].is_ascii_digit() {
            *p += 1;
        }
        if start == *p {
            return err(start, "expected an integer");
        }
        text[start..*p].parse::<i64>().or_else(|_| err(start, "integer out of range"))
    };
    while p < bytes.len() {
        let c = bytes[p];
        let start = p;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                p += 1;
                continue;
            }
            b'Z' => {
                if bytes.get(p + 1) == Some(&b'b') {
                    p += 2;
                    Tok::Zb
                } else {
                    p += 1;
                    Tok::Z
                }
            }
            b's' => {
                p += 1;
                let k = read_int(&mut p)?;
                Tok::Sigma(k as usize)
            }
            b'0'..=b'9' => Tok::Int(read_int(&mut p)?),
            b'.' if bytes.get(p + 1) == Some(&b'.') => {
                p += 2;
                Tok::DotDot
            }
            _ => {
                p += 1;
                match c {
                    b'\'' => Tok::Prime,
                    b'[' => Tok::LBracket,
                    b']' => Tok::RBracket,
                    b',' => Tok::Comma,
                    b'^' => Tok::Caret,
                    b'-' => Tok::Minus,
                    b'{' => Tok::LBrace,
                    b'}' => Tok::RBrace,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    _ => return err(start, format!("unexpected character `{}`", c as char)),
                }
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
struct RawPoint {
    index: usize,
    primed: bool,
}

#[derive(Debug)]
enum RawGroup {
    Points(Vec<RawPoint>),
    Range(usize, usize),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    primed: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.at += 1;
            Ok(())
        } else {
            err(self.pos(), format!("expected {what}"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.at += 1;
                Ok(v)
            }
            _ => err(self.pos(), "expected an integer"),
        }
    }

    fn product(&mut self) -> Result<Vec<HalfTwistExpr>> {
        let mut items = Vec::new();
        while matches!(self.peek(), Some(Tok::Z | Tok::Zb | Tok::Sigma(_) | Tok::LParen)) {
            items.push(self.factor()?);
        }
        Ok(items)
    }

    fn factor(&mut self) -> Result<HalfTwistExpr> {
        let mut e = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            match self.peek() {
                Some(Tok::LBrace) => {
                    self.at += 1;
                    let by = self.product()?;
                    self.expect(Tok::RBrace, "`}`")?;
                    e = e.conj(collapse(by));
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    let v = self.int()?;
                    e = e.pow(-v);
                }
                Some(Tok::Int(_)) => {
                    let v = self.int()?;
                    e = e.pow(v);
                }
                _ => return err(self.pos(), "expected an exponent or `{`"),
            }
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<HalfTwistExpr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Sigma(k)) => {
                self.at += 1;
                if k == 0 {
                    return err(pos, "generator indices start at 1");
                }
                Ok(HalfTwistExpr::sigma(k, 1))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let items = self.product()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(collapse(items))
            }
            Some(t @ (Tok::Z | Tok::Zb)) => {
                self.at += 1;
                self.expect(Tok::LBracket, "`[`")?;
                let groups = self.groups()?;
                self.expect(Tok::RBracket, "`]`")?;
                self.z_node(groups, t == Tok::Zb, pos)
            }
            _ => err(pos, "expected `Z[`, `Zb[`, `s<k>` or `(`"),
        }
    }

    fn groups(&mut self) -> Result<Vec<RawGroup>> {
        let mut groups = vec![self.group()?];
        while self.peek() == Some(&Tok::Comma) {
            self.at += 1;
            groups.push(self.group()?);
        }
        Ok(groups)
    }

    fn group(&mut self) -> Result<RawGroup> {
        let first = self.point()?;
        if self.peek() == Some(&Tok::DotDot) {
            if first.primed {
                return err(self.pos(), "ranges cannot use primed points");
            }
            self.at += 1;
            let last = self.point()?;
            if last.primed {
                return err(self.pos(), "ranges cannot use primed points");
            }
            return Ok(RawGroup::Range(first.index, last.index));
        }
        let mut pts = vec![first];
        while matches!(self.peek(), Some(Tok::Int(_))) {
            pts.push(self.point()?);
        }
        Ok(RawGroup::Points(pts))
    }

    fn point(&mut self) -> Result<RawPoint> {
        let pos = self.pos();
        let v = self.int()?;
        if v < 1 {
            return err(pos, "point labels start at 1");
        }
        let primed = self.peek() == Some(&Tok::Prime);
        if primed {
            self.at += 1;
            self.primed = true;
        }
        Ok(RawPoint { index: v as usize, primed })
    }

    fn z_node(&self, groups: Vec<RawGroup>, bar: bool, pos: usize) -> Result<HalfTwistExpr> {
        let to_point = |r: RawPoint| -> Point {
            if r.primed {
                Point::Doubled(DoubledIndex::new(r.index, true))
            } else {
                Point::Plain(r.index)
            }
        };
        let has_range = groups.iter().any(|g| matches!(g, RawGroup::Range(..)));
        if has_range {
            let mut pts: Vec<usize> = Vec::new();
            for g in &groups {
                match g {
                    RawGroup::Range(a, b) => {
                        if a >= b {
                            return err(pos, format!("empty range {a}..{b}"));
                        }
                        pts.extend(*a..=*b);
                    }
                    RawGroup::Points(p) => pts.extend(p.iter().map(|r| r.index)),
                }
            }
            let mut sorted = pts.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != pts.len() {
                return err(pos, "repeated point");
            }
            let consecutive = sorted.windows(2).all(|w| w[1] == w[0] + 1);
            if consecutive && !bar {
                return Ok(HalfTwistExpr::chain(sorted[0], sorted.len() - 1));
            }
            let points = sorted.into_iter().map(Point::Plain).collect();
            return Ok(HalfTwistExpr::Z { points, bar, power: 1 });
        }
        let groups: Vec<Vec<Point>> = groups
            .into_iter()
            .map(|g| match g {
                RawGroup::Points(p) => p.into_iter().map(to_point).collect(),
                RawGroup::Range(..) => unreachable!(),
            })
            .collect();
        match groups.len() {
            1 => Ok(HalfTwistExpr::Z { points: groups.into_iter().next().unwrap(), bar, power: 1 }),
            2 if groups.iter().all(|g| g.len() == 1) => {
                Ok(HalfTwistExpr::Z { points: vec![groups[0][0], groups[1][0]], bar, power: 1 })
            }
            2 => {
                let mut it = groups.into_iter();
                let a = it.next().unwrap();
                let b = it.next().unwrap();
                // the power counts half-twists; Z[..]^2 is the single full twist
                Ok(HalfTwistExpr::Grouped { groups: [a, b], bar, power: 1 })
            }
            _ if groups.iter().all(|g| g.len() == 1) => {
                Ok(HalfTwistExpr::Z { points: groups.into_iter().map(|g| g[0]).collect(), bar, power: 1 })
            }
            _ => err(pos, "more than two point groups"),
        }
    }
}

fn collapse(mut items: Vec<HalfTwistExpr>) -> HalfTwistExpr {
    if items.len() == 1 {
        items.pop().unwrap()
    } else {
        HalfTwistExpr::Product(items)
    }
}

fn to_doubled(e: HalfTwistExpr) -> HalfTwistExpr {
    let d = |p: Point| match p {
        Point::Plain(i) => Point::Doubled(DoubledIndex::new(i, false)),
        other => other,
    };
    match e {
        HalfTwistExpr::Z { points, bar, power } => {
            HalfTwistExpr::Z { points: points.into_iter().map(d).collect(), bar, power }
        }
        HalfTwistExpr::Grouped { groups: [a, b], bar, power } => HalfTwistExpr::Grouped {
            groups: [a.into_iter().map(d).collect(), b.into_iter().map(d).collect()],
            bar,
            power,
        },
        HalfTwistExpr::Product(items) => HalfTwistExpr::Product(items.into_iter().map(to_doubled).collect()),
        HalfTwistExpr::Conjugate { base, by } => {
            HalfTwistExpr::Conjugate { base: Box::new(to_doubled(*base)), by: Box::new(to_doubled(*by)) }
        }
        HalfTwistExpr::Inverse(e) => HalfTwistExpr::Inverse(Box::new(to_doubled(*e))),
        HalfTwistExpr::Power { base, exponent } => {
            HalfTwistExpr::Power { base: Box::new(to_doubled(*base)), exponent }
        }
        other => other,
    }
}

fn has_chain(e: &HalfTwistExpr) -> bool {
    match e {
        HalfTwistExpr::Chain { .. } => true,
        HalfTwistExpr::Product(items) => items.iter().any(has_chain),
        HalfTwistExpr::Conjugate { base, by } => has_chain(base) || has_chain(by),
        HalfTwistExpr::Inverse(e) | HalfTwistExpr::Power { base: e, .. } => has_chain(e),
        _ => false,
    }
}

/// Parses a half-twist expression. An empty string is the empty product.
pub fn parse_expr(text: &str) -> Result<HalfTwistExpr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len(), primed: false };
    let items = p.product()?;
    if p.at < p.toks.len() {
        return err(p.pos(), "unexpected token");
    }
    let e = collapse(items);
    if p.primed {
        if has_chain(&e) {
            return err(0, "ranges cannot be mixed with primed points");
        }
        return Ok(to_doubled(e));
    }
    Ok(e)
}
