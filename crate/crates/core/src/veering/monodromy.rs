//! Monodromy presentations: LR words, matrices and flip scripts.

use crate::error::{Error, Result};
use crate::fiber::slope::Mat2;
use crate::fiber::triangulation::{EdgeId, IdealTriangulation};
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::L => Mat2::L,
            Letter::R => Mat2::R,
        }
    }
}

/// A word in `L` and `R`, read left to right as a matrix product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LrWord(pub Vec<Letter>);

impl LrWord {
    /// Parses words such as `RRL`, `R^6L` or `R6 L2`.
    pub fn parse(s: &str) -> Result<LrWord> {
        let mut out = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let letter = match c.to_ascii_uppercase() {
                'L' => Letter::L,
                'R' => Letter::R,
                _ => return Err(Error::Invalid(format!("unexpected {c:?} in LR word {s:?}"))),
            };
            if chars.peek() == Some(&'^') {
                chars.next();
            }
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let n: usize = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| Error::Invalid(s.into()))? };
            out.extend(std::iter::repeat(letter).take(n));
        }
        Ok(LrWord(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn matrix(&self) -> Result<Mat2> {
        self.0.iter().try_fold(Mat2::IDENTITY, |m, l| m.mul(&l.matrix()))
    }

    pub fn check_pseudo_anosov(&self) -> Result<()> {
        if !(self.0.contains(&Letter::L) && self.0.contains(&Letter::R)) {
            return Err(Error::NotPseudoAnosov(format!("word {self} does not use both letters")));
        }
        Ok(())
    }

    /// Whether `o` is a cyclic rotation of this word.
    pub fn is_rotation_of(&self, o: &LrWord) -> bool {
        self.len() == o.len() && (0..self.len().max(1)).any(|r| self.0.iter().cycle().skip(r).take(self.len()).eq(o.0.iter()))
    }
}

impl fmt::Display for LrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::L { 'L' } else { 'R' })?;
        }
        Ok(())
    }
}

/// A periodic flip sequence. Initial edges are numbered `0..n` and the
/// `i`-th flip creates edge `n + i`; `relabel` maps every edge of the final
/// triangulation to the initial edge it is identified with.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipScript {
    pub initial: IdealTriangulation,
    pub flips: Vec<EdgeId>,
    pub relabel: BTreeMap<EdgeId, EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonodromySpec {
    Word(String),
    Matrix([[i128; 2]; 2]),
    Script(FlipScript),
}

impl MonodromySpec {
    pub fn word(s: &str) -> MonodromySpec {
        MonodromySpec::Word(s.to_string())
    }

    /// The flip script realizing this monodromy.
    pub fn to_script(&self) -> Result<FlipScript> {
        match self {
            MonodromySpec::Word(w) => {
                let w = LrWord::parse(w)?;
                w.check_pseudo_anosov()?;
                lr_script(&w)
            }
            MonodromySpec::Matrix(m) => {
                let w = matrix_to_word(&Mat2(*m))?;
                lr_script(&w)
            }
            MonodromySpec::Script(s) => Ok(s.clone()),
        }
    }

    /// The LR word, for torus presentations.
    pub fn lr_word(&self) -> Result<Option<LrWord>> {
        match self {
            MonodromySpec::Word(w) => Ok(Some(LrWord::parse(w)?)),
            MonodromySpec::Matrix(m) => Ok(Some(matrix_to_word(&Mat2(*m))?)),
            MonodromySpec::Script(_) => Ok(None),
        }
    }
}

/// The Farey flip sequence of an LR word on the square torus. The current
/// triangle is `{u, v, u+v}`; `R` flips `v` and `L` flips `u`.
pub fn lr_script(word: &LrWord) -> Result<FlipScript> {
    word.check_pseudo_anosov()?;
    let initial = IdealTriangulation::square_torus();
    let mut tri = initial.clone();
    let (mut u, mut v, mut s) = (0, 1, 2);
    let mut flips = Vec::with_capacity(word.len());
    for (i, l) in word.0.iter().enumerate() {
        let e = if *l == Letter::R { v } else { u };
        let f = 3 + i as EdgeId;
        let t0 = 2 + 2 * i as i64;
        let (next, rec) = tri.flip_with_ids(e, f, [t0, t0 + 1])?;
        debug_assert_eq!(rec.f, f);
        flips.push(e);
        tri = next;
        match l {
            Letter::R => (v, s) = (s, f),
            Letter::L => (u, s) = (s, f),
        }
    }
    let relabel = [(u, 0), (v, 1), (s, 2)].into();
    Ok(FlipScript { initial, flips, relabel })
}

fn is_nonnegative(m: &Mat2) -> bool {
    m.0.iter().flatten().all(|&x| x >= 0)
}

/// The LR word of a positive conjugate of an Anosov matrix; a negative
/// trace is replaced by its negation, which acts identically on slopes.
pub fn matrix_to_word(m: &Mat2) -> Result<LrWord> {
    if m.det()? != 1 {
        return Err(Error::Invalid(format!("matrix {:?} does not have determinant 1", m.0)));
    }
    if m.trace().abs() <= 2 {
        return Err(Error::NotPseudoAnosov(format!("|trace {}| ≤ 2", m.trace())));
    }
    let m = if m.trace() < 0 { m.neg() } else { *m };
    let positive = positive_conjugate(&m)?;
    let mut letters = Vec::new();
    let mut cur = positive;
    while cur != Mat2::IDENTITY {
        let [[a, b], [c, d]] = cur.0;
        if a >= b && c >= d {
            letters.push(Letter::L);
            cur = Mat2([[a - b, b], [c - d, d]]);
        } else if b >= a && d >= c {
            letters.push(Letter::R);
            cur = Mat2([[a, b - a], [c, d - c]]);
        } else {
            return Err(Error::Inconsistent(format!("cannot factor {:?}", cur.0)));
        }
    }
    letters.reverse();
    let w = LrWord(letters);
    w.check_pseudo_anosov()?;
    Ok(w)
}

fn weight(m: &Mat2) -> i128 {
    m.0.iter().flatten().map(|x| x.abs()).sum()
}

/// Best-first search over conjugations by `R^{±1}`, `L^{±1}`.
fn positive_conjugate(m: &Mat2) -> Result<Mat2> {
    let gens = [Mat2::R, Mat2::L, Mat2::R.inverse_unimodular()?, Mat2::L.inverse_unimodular()?];
    let mut seen = HashSet::from([*m]);
    let mut heap = BinaryHeap::from([(Reverse(weight(m)), m.0)]);
    while let Some((_, cur)) = heap.pop() {
        let cur = Mat2(cur);
        if is_nonnegative(&cur) {
            return Ok(cur);
        }
        if seen.len() > 200_000 {
            break;
        }
        for g in &gens {
            let next = g.mul(&cur)?.mul(&g.inverse_unimodular()?)?;
            if seen.insert(next) {
                heap.push((Reverse(weight(&next)), next.0));
            }
        }
    }
    Err(Error::Inconsistent("no positive conjugate found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_words() {
        assert_eq!(LrWord::parse("R^6L").unwrap().to_string(), "RRRRRRL");
        assert_eq!(LrWord::parse("r2 l2").unwrap().to_string(), "RRLL");
        assert!(LrWord::parse("RXL").is_err());
    }

    #[test]
    fn single_letter_is_rejected() {
        assert!(matches!(MonodromySpec::word("RRRR").to_script(), Err(Error::NotPseudoAnosov(_))));
        assert!(matches!(MonodromySpec::Matrix([[1, 1], [0, 1]]).to_script(), Err(Error::NotPseudoAnosov(_))));
    }

    #[test]
    fn matrix_expansion() {
        assert_eq!(matrix_to_word(&Mat2([[2, 1], [1, 1]])).unwrap().to_string(), "RL");
        let w = LrWord::parse("RRLRL").unwrap();
        let m = w.matrix().unwrap();
        let g = Mat2([[3, 2], [1, 1]]);
        let conj = g.mul(&m).unwrap().mul(&g.inverse_unimodular().unwrap()).unwrap();
        assert!(matrix_to_word(&conj).unwrap().is_rotation_of(&w));
        assert!(matrix_to_word(&conj.neg()).unwrap().is_rotation_of(&w));
    }

    #[test]
    fn script_tracks_the_word_matrix() {
        let w = LrWord::parse("RRL").unwrap();
        let script = lr_script(&w).unwrap();
        assert_eq!(script.flips.len(), 3);
        let mut tri = script.initial.clone();
        for (i, &e) in script.flips.iter().enumerate() {
            tri = tri.flip_with_ids(e, 3 + i as i64, [2 + 2 * i as i64, 3 + 2 * i as i64]).unwrap().0;
        }
        let m = w.matrix().unwrap();
        for (fin, init) in &script.relabel {
            let want = m.apply(script.initial.vector(*init).unwrap()).unwrap();
            let got = tri.vector(*fin).unwrap();
            assert!(got == want || got == want.neg());
        }
    }
}
