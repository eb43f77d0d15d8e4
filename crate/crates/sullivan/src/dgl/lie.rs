//! Lie elements live inside the tensor algebra: a word is a sequence of
//! generator indices, an element is a sparse rational combination of words.
//! The commutator bracket and the boundary derivation both act at the word
//! level, which keeps every sign a consequence of the two Koszul rules below.

use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieGenerator {
    pub name: String,
    pub degree: i64,
}

impl LieGenerator {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        LieGenerator {
            name: name.into(),
            degree,
        }
    }
}

/// Tensor word: sequence of generator indices into the owning algebra.
pub type TensorWord = Vec<u32>;

/// Homogeneous element of the tensor algebra, certified by construction to
/// lie in the free Lie subalgebra (it is only ever built from generators via
/// brackets and linear combinations).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    words: BTreeMap<TensorWord, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement {
            words: BTreeMap::new(),
        }
    }

    pub fn generator(id: u32) -> Self {
        Self::from_word(vec![id], Rational::one())
    }

    pub fn from_word(w: TensorWord, c: Rational) -> Self {
        let mut words = BTreeMap::new();
        if !c.is_zero() {
            words.insert(w, c);
        }
        LieElement { words }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = (&TensorWord, &Rational)> {
        self.words.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, c) in &other.words {
            let e = words.entry(w.clone()).or_insert_with(Rational::zero);
            *e += c;
        }
        words.retain(|_, c| !c.is_zero());
        LieElement { words }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LieElement {
            words: self
                .words
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LieElement {
            words: self.words.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Tensor-algebra product (word concatenation); internal to the bracket.
    pub(crate) fn tensor_mul(&self, other: &Self) -> Self {
        let mut words: BTreeMap<TensorWord, Rational> = BTreeMap::new();
        for (wa, ca) in &self.words {
            for (wb, cb) in &other.words {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                let e = words.entry(w).or_insert_with(Rational::zero);
                *e += ca * cb;
            }
        }
        words.retain(|_, c| !c.is_zero());
        LieElement { words }
    }
}

/// Degree of a word given per-generator degrees.
pub(crate) fn word_degree(degrees: &[i64], w: &TensorWord) -> i64 {
    w.iter().map(|&i| degrees[i as usize]).sum()
}

/// `[x, y] = x (x) y - (-1)^{|x||y|} y (x) x` for homogeneous inputs.
pub(crate) fn bracket_of(dx: i64, dy: i64, x: &LieElement, y: &LieElement) -> LieElement {
    let xy = x.tensor_mul(y);
    let yx = y.tensor_mul(x);
    if (dx * dy) % 2 == 0 {
        xy.sub(&yx)
    } else {
        xy.add(&yx)
    }
}

/// Boundary extension to tensor words: a degree -1 derivation of the tensor
/// algebra, `d(w1 ... wk) = sum_i (-1)^{|w1|+...+|w_{i-1}|} w1 ... d(w_i) ... wk`.
pub(crate) fn boundary_on_element(
    degrees: &[i64],
    boundary: &[LieElement],
    e: &LieElement,
) -> LieElement {
    let mut out = LieElement::zero();
    for (w, c) in e.words() {
        let mut prefix_parity = 0i64;
        for (i, &g) in w.iter().enumerate() {
            let dg = &boundary[g as usize];
            if !dg.is_zero() {
                let prefix = LieElement::from_word(w[..i].to_vec(), Rational::one());
                let suffix = LieElement::from_word(w[i + 1..].to_vec(), Rational::one());
                let mut term = prefix.tensor_mul(dg).tensor_mul(&suffix).scale(c);
                if prefix_parity % 2 != 0 {
                    term = term.neg();
                }
                out = out.add(&term);
            }
            prefix_parity += degrees[g as usize];
        }
    }
    out
}
