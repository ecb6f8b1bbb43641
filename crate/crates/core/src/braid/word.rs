use std::fmt;

use crate::braid::garside::NormalForm;
use crate::braid::perm::Permutation;
use crate::error::{Error, Result};

/// A single Artin generator `σ_i` or its inverse. `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter { index, positive: true }
    }

    pub fn neg(index: usize) -> Self {
        Letter { index, positive: false }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, positive: !self.positive }
    }

    pub fn sign(self) -> i64 {
        if self.positive { 1 } else { -1 }
    }

    /// Signed integer form: `+i` for `σ_i`, `-i` for `σ_i^{-1}`.
    pub fn signed(self) -> i64 {
        self.sign() * self.index as i64
    }
}

/// A word in the Artin generators of `B_n`.
///
/// Words are stored exactly as built; no reduction happens implicitly.
/// Use [`BraidWord::free_reduce`] or [`BraidWord::normal_form`] explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidStrandCount(strands));
        }
        Ok(BraidWord { strands, letters: Vec::new() })
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidStrandCount(strands));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::GeneratorOutOfRange { index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed generator indices (`2` is `σ_2`, `-2` is `σ_2^{-1}`).
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(letters.len());
        for &s in letters {
            if s == 0 {
                return Err(Error::GeneratorOutOfRange { index: 0, strands });
            }
            out.push(Letter { index: s.unsigned_abs() as usize, positive: s > 0 });
        }
        Self::new(strands, out)
    }

    /// `σ_i^power`.
    pub fn generator(strands: usize, index: usize, power: i64) -> Result<Self> {
        let l = if power >= 0 { Letter::pos(index) } else { Letter::neg(index) };
        Self::new(strands, vec![l; power.unsigned_abs() as usize])
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Concatenates a sequence of words sharing a strand count.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<BraidWord>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut acc = BraidWord::identity(strands)?;
        for w in words {
            acc.check_same(w)?;
            acc.letters.extend_from_slice(&w.letters);
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// `by⁻¹ · self · by`.
    ///
    /// This is the convention for exponent notation `a^b` throughout the crate;
    /// it reproduces `(Z_{1 2})^{Z²_{2 3}} = σ2⁻²σ1σ2²`.
    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord> {
        self.check_same(by)?;
        let mut letters = by.inverse().letters;
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&by.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&last) if last == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    pub fn is_positive_word(&self) -> bool {
        self.letters.iter().all(|l| l.positive)
    }

    /// Rotation about the axis of the braid: `σ_k ↦ σ_{n-k}`, signs kept.
    pub fn rotate(&self) -> BraidWord {
        let n = self.strands;
        let letters = self
            .letters
            .iter()
            .map(|l| Letter { index: n - l.index, positive: l.positive })
            .collect();
        BraidWord { strands: n, letters }
    }

    /// Image in the symmetric group: `perm.image(s)` is the final position of
    /// the strand that starts at position `s` (both 0-based).
    pub fn permutation_image(&self) -> Permutation {
        let n = self.strands;
        // at[p] = strand currently at position p
        let mut at: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut images = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation::from_images(images).expect("swaps compose to a bijection")
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of(self)
    }

    /// Equality in `B_n`, decided by comparing normal forms.
    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.normal_form() == other.normal_form())
    }

    /// The same braid viewed in `B_m` for `m >= n` (extra strands added on the right).
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: strands });
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// The word with every generator index shifted by `offset`, on `strands` strands.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        let letters = self
            .letters
            .iter()
            .map(|l| Letter { index: l.index + offset, positive: l.positive })
            .collect();
        BraidWord::new(strands, letters)
    }

    /// Compact rendering with runs collapsed, e.g. `s2^2 s1 s2^-2`.
    pub fn compact(&self) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let e = (j - i) as i64 * l.sign();
            if e == 1 {
                parts.push(format!("s{}", l.index));
            } else {
                parts.push(format!("s{}^{}", l.index, e));
            }
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for BraidWord {
    /// One token per letter: `s1 s2^-1 s1`. The identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if l.positive {
                write!(f, "s{}", l.index)?;
            } else {
                write!(f, "s{}^-1", l.index)?;
            }
        }
        Ok(())
    }
}
