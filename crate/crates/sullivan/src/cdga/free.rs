//! Generator tables, graded-commutative monomials and sparse elements.
//!
//! A monomial is an ordered factor list over a fixed generator table; the
//! table is sorted by (degree, name) once at construction, so monomial order
//! and all product signs are reproducible. Odd generators square to zero,
//! products accumulate the Koszul sign of the merge.

use super::CdgaError;
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub type GenId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: i64,
}

impl GeneratorSpec {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        GeneratorSpec {
            name: name.into(),
            degree,
        }
    }
}

/// Immutable generator table, canonically sorted by (degree, name).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators {
    list: Vec<GeneratorSpec>,
}

/// Factor list, sorted by generator id; exponents >= 1, odd generators have
/// exponent exactly 1. The empty list is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(GenId, u32)>);

impl Ord for Monomial {
    /// Lexicographic on exponent vectors: of two monomials, the one with the
    /// higher exponent at the earliest differing generator comes first
    /// (x1^2 < x1*x2 < x2^2).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(&(ga, ea)), Some(&(gb, eb))) => {
                    if ga != gb {
                        return if ga < gb { Ordering::Less } else { Ordering::Greater };
                    }
                    if ea != eb {
                        return if ea > eb { Ordering::Less } else { Ordering::Greater };
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse rational combination of monomials in canonical form: no zero
/// coefficients, keys sorted by the monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element(BTreeMap<Monomial, Rational>);

/// Homogeneity of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(i64),
    Mixed,
}

impl Generators {
    pub fn new(mut specs: Vec<GeneratorSpec>) -> Result<Self, CdgaError> {
        for s in &specs {
            if s.degree < 1 {
                return Err(CdgaError::InvalidDegree {
                    name: s.name.clone(),
                    degree: s.degree,
                });
            }
        }
        specs.sort_by(|a, b| (a.degree, &a.name).cmp(&(b.degree, &b.name)));
        for w in specs.windows(2) {
            if w[0].name == w[1].name {
                return Err(CdgaError::DuplicateGenerator(w[0].name.clone()));
            }
        }
        // names must be pairwise distinct globally, not just within a degree
        let mut names: Vec<&str> = specs.iter().map(|s| s.name.as_str()).collect();
        names.sort_unstable();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(CdgaError::DuplicateGenerator(w[0].to_string()));
            }
        }
        Ok(Generators { list: specs })
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn spec(&self, id: GenId) -> &GeneratorSpec {
        &self.list[id as usize]
    }

    pub fn degree(&self, id: GenId) -> i64 {
        self.list[id as usize].degree
    }

    pub fn is_odd(&self, id: GenId) -> bool {
        self.degree(id) % 2 != 0
    }

    pub fn id_of(&self, name: &str) -> Option<GenId> {
        self.list
            .iter()
            .position(|s| s.name == name)
            .map(|i| i as GenId)
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> {
        0..self.list.len() as GenId
    }

    /// The generator as an element.
    pub fn generator(&self, id: GenId) -> Element {
        Element::from_monomial(Monomial(vec![(id, 1)]), Rational::one())
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        m.0.iter()
            .map(|&(id, e)| self.degree(id) * i64::from(e))
            .sum()
    }

    /// Merge two canonical monomials into their product; `None` when an odd
    /// generator repeats. The sign counts odd-odd transpositions.
    fn merge_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, i32)> {
        let mut swaps = 0u64;
        for &(gb, _) in b.0.iter().filter(|&&(g, _)| self.is_odd(g)) {
            for &(ga, _) in a.0.iter().filter(|&&(g, _)| self.is_odd(g)) {
                if ga == gb {
                    return None;
                }
                if ga > gb {
                    swaps += 1;
                }
            }
        }
        let mut merged: BTreeMap<GenId, u32> = BTreeMap::new();
        for &(g, e) in a.0.iter().chain(b.0.iter()) {
            *merged.entry(g).or_insert(0) += e;
        }
        for (&g, &e) in &merged {
            if self.is_odd(g) && e > 1 {
                return None;
            }
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((Monomial(merged.into_iter().collect()), sign))
    }

    /// Graded-commutative product with Koszul signs.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &a.0 {
            for (mb, cb) in &b.0 {
                if let Some((m, sign)) = self.merge_monomials(ma, mb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    let entry = out.entry(m).or_insert_with(Rational::zero);
                    *entry += c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Element(out)
    }

    pub fn pow(&self, a: &Element, n: u32) -> Element {
        let mut acc = Element::unit();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Complete, deterministically ordered monomial basis in one degree.
    pub fn monomials_of_degree(&self, n: i64) -> Vec<Monomial> {
        if n < 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut stack: Vec<(GenId, u32)> = Vec::new();
        self.enumerate(0, n, &mut stack, &mut out);
        out.sort();
        out
    }

    fn enumerate(&self, from: GenId, remaining: i64, stack: &mut Vec<(GenId, u32)>, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            out.push(Monomial(stack.clone()));
            return;
        }
        for id in from..self.list.len() as GenId {
            let d = self.degree(id);
            if d > remaining {
                continue;
            }
            let max_e = if self.is_odd(id) {
                1
            } else {
                (remaining / d) as u32
            };
            for e in 1..=max_e {
                if i64::from(e) * d <= remaining {
                    stack.push((id, e));
                    self.enumerate(id + 1, remaining - i64::from(e) * d, stack, out);
                    stack.pop();
                }
            }
        }
    }

    /// Extend generator images to a graded derivation. The Koszul sign for
    /// moving the derivation past a prefix of degree k is
    /// `(-1)^{parity_factor * k}`: the differential uses factor 1, a
    /// degree -p suspension uses factor p.
    pub fn apply_derivation(
        &self,
        e: &Element,
        images: &[Element],
        parity_factor: i64,
    ) -> Element {
        let mut out = Element::zero();
        for (m, c) in e.terms() {
            out = out.add(&self.derive_monomial(m, images, parity_factor).scale(c));
        }
        out
    }

    fn derive_monomial(&self, m: &Monomial, images: &[Element], parity_factor: i64) -> Element {
        let factors = m.factors();
        let mut out = Element::zero();
        let mut prefix_degree = 0i64;
        for (i, &(id, exp)) in factors.iter().enumerate() {
            let image = &images[id as usize];
            if !image.is_zero() {
                let mut term = Element::from_monomial(
                    Monomial::from_sorted(
                        factors[..i]
                            .iter()
                            .copied()
                            .chain(if exp > 1 { Some((id, exp - 1)) } else { None })
                            .collect(),
                    ),
                    Rational::one(),
                );
                term = self.mul(&term, image);
                let suffix = Element::from_monomial(
                    Monomial::from_sorted(factors[i + 1..].to_vec()),
                    Rational::one(),
                );
                term = self.mul(&term, &suffix);
                let mut scaled = term.scale(&Rational::from_integer(exp.into()));
                if (parity_factor * prefix_degree) % 2 != 0 {
                    scaled = scaled.neg();
                }
                out = out.add(&scaled);
            }
            prefix_degree += self.degree(id) * i64::from(exp);
        }
        out
    }

    pub fn element_degree(&self, e: &Element) -> Degree {
        let mut deg = None;
        for m in e.0.keys() {
            let d = self.monomial_degree(m);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return Degree::Mixed,
                _ => {}
            }
        }
        match deg {
            None => Degree::Zero,
            Some(d) => Degree::Homogeneous(d),
        }
    }

    /// Re-express an element of `from` in this table; generators are matched
    /// by name. Relative order of odd factors is preserved because both
    /// tables sort by (degree, name), so no signs arise.
    pub fn embed(&self, e: &Element, from: &Generators) -> Result<Element, CdgaError> {
        let mut out = Element::zero();
        for (m, c) in &e.0 {
            let mut factors = Vec::with_capacity(m.0.len());
            for &(id, exp) in &m.0 {
                let name = &from.spec(id).name;
                let new_id = self
                    .id_of(name)
                    .ok_or_else(|| CdgaError::UnknownGenerator(name.clone()))?;
                factors.push((new_id, exp));
            }
            factors.sort_by_key(|&(id, _)| id);
            out = out.add(&Element::from_monomial(Monomial(factors), c.clone()));
        }
        Ok(out)
    }

    pub fn format_element(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, &Rational)> = e.0.iter().collect();
        terms.sort_by_key(|(m, _)| (self.monomial_degree(m), (*m).clone()));
        let mut s = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c < &&Rational::zero();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else if neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let coeff_is_one = abs.is_one();
            if !coeff_is_one || m.is_unit() {
                let _ = write!(s, "{abs}");
                if !m.is_unit() {
                    s.push('*');
                }
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .map(|&(id, exp)| {
                    if exp == 1 {
                        self.spec(id).name.clone()
                    } else {
                        format!("{}^{}", self.spec(id).name, exp)
                    }
                })
                .collect();
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(GenId, u32)] {
        &self.0
    }

    /// Total exponent count; decomposable means length >= 2.
    pub fn word_length(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent_of(&self, id: GenId) -> u32 {
        self.0
            .iter()
            .find(|&&(g, _)| g == id)
            .map_or(0, |&(_, e)| e)
    }

    pub(crate) fn from_sorted(factors: Vec<(GenId, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        Monomial(factors)
    }
}

impl Element {
    pub fn zero() -> Self {
        Element(BTreeMap::new())
    }

    pub fn unit() -> Self {
        Element::from_monomial(Monomial::unit(), Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Element::from_monomial(Monomial::unit(), c)
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut map = BTreeMap::new();
        if !c.is_zero() {
            map.insert(m, c);
        }
        Element(map)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.0.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.0.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.0.clone();
        for (m, c) in &other.0 {
            let entry = out.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
        }
        out.retain(|_, c| !c.is_zero());
        Element(out)
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element(self.0.iter().map(|(m, c)| (m.clone(), -c.clone())).collect())
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element(self.0.iter().map(|(m, x)| (m.clone(), x * c)).collect())
    }
}
