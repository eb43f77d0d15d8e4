//! Free graded Lie algebras presented by generators and a degree -1
//! boundary, with deterministic degree-wise bases computed as the row space
//! of all left-normed bracket words inside the tensor algebra.

use super::lie::{boundary_on_element, bracket_of, word_degree, LieElement, LieGenerator, TensorWord};
use super::DglError;
use crate::matrix::{quotient_representatives, RationalMatrix};
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

/// Canonical basis of one degree: rref rows over the deterministic
/// tensor-word column order.
#[derive(Debug, Clone)]
pub struct LieBasis {
    pub degree: i64,
    pub words: Vec<TensorWord>,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl LieBasis {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn element(&self, i: usize) -> LieElement {
        let mut e = LieElement::zero();
        for (j, c) in self.rows[i].iter().enumerate() {
            if !c.is_zero() {
                e = e.add(&LieElement::from_word(self.words[j].clone(), c.clone()));
            }
        }
        e
    }

    /// Coordinates of a tensor element in this basis; `None` when it lies
    /// outside the Lie subspace in this degree.
    pub fn coords(&self, e: &LieElement) -> Option<Vec<Rational>> {
        let index: BTreeMap<&TensorWord, usize> =
            self.words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut v = vec![Rational::zero(); self.words.len()];
        for (w, c) in e.words() {
            let &i = index.get(w)?;
            v[i] = c.clone();
        }
        let mut coords = vec![Rational::zero(); self.rows.len()];
        for (row, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                coords[row] = factor.clone();
                for j in 0..v.len() {
                    let delta = &factor * &self.rows[row][j];
                    v[j] -= delta;
                }
            }
        }
        v.iter().all(Zero::is_zero).then_some(coords)
    }
}

#[derive(Debug)]
pub struct FreeDgl {
    gens: Vec<LieGenerator>,
    boundary: Vec<LieElement>,
    minimal: bool,
    cache: Mutex<BTreeMap<i64, Arc<LieBasis>>>,
}

impl PartialEq for FreeDgl {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.boundary == other.boundary
    }
}

impl FreeDgl {
    /// Free Lie algebra with zero boundary; the generator table is sorted by
    /// (degree, name) so indices are canonical.
    pub fn abelian_boundary(mut gens: Vec<LieGenerator>) -> Result<Arc<Self>, DglError> {
        for g in &gens {
            if g.degree < 1 {
                return Err(DglError::InvalidDegree {
                    name: g.name.clone(),
                    degree: g.degree,
                });
            }
        }
        gens.sort_by(|a, b| (a.degree, &a.name).cmp(&(b.degree, &b.name)));
        let mut names: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
        names.sort_unstable();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(DglError::DuplicateGenerator(w[0].to_string()));
            }
        }
        let n = gens.len();
        Ok(Arc::new(FreeDgl {
            gens,
            boundary: vec![LieElement::zero(); n],
            minimal: true,
            cache: Mutex::new(BTreeMap::new()),
        }))
    }

    /// Same generators, new boundary. Validates degree -1 homogeneity and
    /// that the boundary squares to zero on every generator.
    pub fn with_boundary(
        self: &Arc<Self>,
        boundary: Vec<(String, LieElement)>,
    ) -> Result<Arc<Self>, DglError> {
        let mut b = vec![LieElement::zero(); self.gens.len()];
        for (name, e) in boundary {
            let id = self
                .id_of(&name)
                .ok_or_else(|| DglError::UnknownGenerator(name.clone()))?;
            b[id as usize] = e;
        }
        let degrees = self.degrees();
        for (i, e) in b.iter().enumerate() {
            match element_degree(&degrees, e) {
                Ok(None) => {}
                Ok(Some(d)) if d == self.gens[i].degree - 1 => {}
                Ok(Some(d)) => {
                    return Err(DglError::BoundaryDegree {
                        generator: self.gens[i].name.clone(),
                        expected: self.gens[i].degree - 1,
                        found: d,
                    })
                }
                Err(e) => return Err(e),
            }
        }
        for (i, e) in b.iter().enumerate() {
            if !boundary_on_element(&degrees, &b, e).is_zero() {
                return Err(DglError::BoundaryNotSquareZero {
                    generator: self.gens[i].name.clone(),
                });
            }
        }
        // minimal iff every boundary lies in brackets, i.e. words of length >= 2
        let minimal = b
            .iter()
            .all(|e| e.words().all(|(w, _)| w.len() >= 2));
        Ok(Arc::new(FreeDgl {
            gens: self.gens.clone(),
            boundary: b,
            minimal,
            cache: Mutex::new(BTreeMap::new()),
        }))
    }

    pub fn generators(&self) -> &[LieGenerator] {
        &self.gens
    }

    pub fn id_of(&self, name: &str) -> Option<u32> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .map(|i| i as u32)
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.gens.iter().map(|g| g.degree).collect()
    }

    pub fn min_generator_degree(&self) -> Option<i64> {
        self.gens.iter().map(|g| g.degree).min()
    }

    pub fn boundary_of(&self, id: u32) -> &LieElement {
        &self.boundary[id as usize]
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn generator(&self, id: u32) -> LieElement {
        LieElement::generator(id)
    }

    /// Homogeneous degree of an element, `None` for zero.
    pub fn degree_of(&self, e: &LieElement) -> Result<Option<i64>, DglError> {
        element_degree(&self.degrees(), e)
    }

    /// `[x, y]` for homogeneous x, y.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement, DglError> {
        let dx = self.degree_of(x)?;
        let dy = self.degree_of(y)?;
        match (dx, dy) {
            (Some(a), Some(b)) => Ok(bracket_of(a, b, x, y)),
            _ => Ok(LieElement::zero()),
        }
    }

    /// Boundary extended to arbitrary elements as a derivation of the tensor
    /// algebra.
    pub fn boundary(&self, e: &LieElement) -> LieElement {
        boundary_on_element(&self.degrees(), &self.boundary, e)
    }

    /// All tensor words of one degree, in deterministic order.
    pub fn words_of_degree(&self, n: i64) -> Vec<TensorWord> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.enumerate_words(n, &mut stack, &mut out);
        out.sort();
        out
    }

    fn enumerate_words(&self, remaining: i64, stack: &mut Vec<u32>, out: &mut Vec<TensorWord>) {
        if remaining == 0 {
            if !stack.is_empty() {
                out.push(stack.clone());
            }
            return;
        }
        for (i, g) in self.gens.iter().enumerate() {
            if g.degree <= remaining {
                stack.push(i as u32);
                self.enumerate_words(remaining - g.degree, stack, out);
                stack.pop();
            }
        }
    }

    /// Deterministic basis of the degree-n part: row space of all left-normed
    /// bracket words of that degree.
    pub fn basis_in_degree(self: &Arc<Self>, n: i64) -> Arc<LieBasis> {
        if let Some(b) = self.cache.lock().unwrap().get(&n) {
            return b.clone();
        }
        let words = self.words_of_degree(n);
        let mut spanning: Vec<LieElement> = Vec::new();
        for seq in &words {
            // left-normed [g1, [g2, [... [g_{k-1}, g_k] ...]]]
            let mut it = seq.iter().rev();
            let Some(&last) = it.next() else { continue };
            let mut acc = LieElement::generator(last);
            let mut acc_deg = self.gens[last as usize].degree;
            for &g in it {
                let dg = self.gens[g as usize].degree;
                acc = bracket_of(dg, acc_deg, &LieElement::generator(g), &acc);
                acc_deg += dg;
            }
            if !acc.is_zero() {
                spanning.push(acc);
            }
        }
        let index: BTreeMap<&TensorWord, usize> =
            words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let rows: Vec<Vec<Rational>> = spanning
            .iter()
            .map(|e| {
                let mut v = vec![Rational::zero(); words.len()];
                for (w, c) in e.words() {
                    v[index[w]] = c.clone();
                }
                v
            })
            .collect();
        let ech = if rows.is_empty() {
            RationalMatrix::zero(0, words.len()).rref()
        } else {
            RationalMatrix::from_rows(rows).rref()
        };
        let basis_rows: Vec<Vec<Rational>> = (0..ech.pivots.len())
            .map(|r| ech.matrix.row(r).to_vec())
            .collect();
        let basis = Arc::new(LieBasis {
            degree: n,
            words,
            rows: basis_rows,
            pivots: ech.pivots,
        });
        self.cache.lock().unwrap().insert(n, basis.clone());
        basis
    }

    /// Matrix of the boundary from degree n to degree n-1 in the canonical
    /// bases.
    pub fn boundary_matrix(self: &Arc<Self>, n: i64) -> RationalMatrix {
        let src = self.basis_in_degree(n);
        let tgt = self.basis_in_degree(n - 1);
        let mut m = RationalMatrix::zero(tgt.dim(), src.dim());
        for j in 0..src.dim() {
            let img = self.boundary(&src.element(j));
            if img.is_zero() {
                continue;
            }
            let col = tgt
                .coords(&img)
                .expect("boundary left the Lie subspace; derivation is broken");
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    *m.at_mut(i, j) = c;
                }
            }
        }
        m
    }

    /// Degree-n homology with canonical representatives.
    pub fn homology(self: &Arc<Self>, n: i64) -> (usize, Vec<LieElement>) {
        let out = self.boundary_matrix(n);
        let cycles = out.kernel_basis();
        let incoming = self.boundary_matrix(n + 1);
        let image: Vec<Vec<Rational>> = (0..incoming.cols())
            .map(|j| {
                (0..incoming.rows())
                    .map(|i| incoming.at(i, j).clone())
                    .collect::<Vec<_>>()
            })
            .filter(|v| v.iter().any(|c| !c.is_zero()))
            .collect();
        let reps = quotient_representatives(&cycles, &image);
        let basis = self.basis_in_degree(n);
        let elems = reps
            .iter()
            .map(|r| {
                let mut e = LieElement::zero();
                for (i, c) in r.iter().enumerate() {
                    if !c.is_zero() {
                        e = e.add(&basis.element(i).scale(c));
                    }
                }
                e
            })
            .collect();
        (reps.len(), elems)
    }

    pub fn format_element(&self, e: &LieElement) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (w, c) in e.words() {
            let word = w
                .iter()
                .map(|&i| self.gens[i as usize].name.clone())
                .collect::<Vec<_>>()
                .join(".");
            let prefix = if c.is_one() {
                String::new()
            } else {
                format!("{c}*")
            };
            parts.push(format!("{prefix}{word}"));
        }
        parts.join(" + ")
    }
}

fn element_degree(degrees: &[i64], e: &LieElement) -> Result<Option<i64>, DglError> {
    let mut deg = None;
    for (w, _) in e.words() {
        let d = word_degree(degrees, w);
        match deg {
            None => deg = Some(d),
            Some(prev) if prev != d => {
                return Err(DglError::NonHomogeneous(format!(
                    "mixes degrees {prev} and {d}"
                )))
            }
            _ => {}
        }
    }
    Ok(deg)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Witt-style dimension oracle: solve the tensor-algebra Hilbert series
    /// for the free graded Lie algebra dimensions, degree by degree. For odd
    /// degrees the factor is (1+t^n)^{l_n}, for even 1/(1-t^n)^{l_n}; either
    /// way l_n = t_n - [t^n](partial product).
    fn witt_dims(gen_degrees: &[i64], up_to: i64) -> Vec<i64> {
        let n = up_to as usize;
        // tensor series t_k = number of words of degree k
        let mut tensor = vec![0i64; n + 1];
        tensor[0] = 1;
        for k in 1..=n {
            let mut total = 0;
            for &d in gen_degrees {
                if (d as usize) <= k {
                    total += tensor[k - d as usize];
                }
            }
            tensor[k] = total;
        }
        let mut partial = vec![0i64; n + 1];
        partial[0] = 1;
        let mut dims = vec![0i64; n + 1];
        for k in 1..=n {
            dims[k] = tensor[k] - partial[k];
            if dims[k] == 0 {
                continue;
            }
            // multiply the partial product by the degree-k factor
            let l = dims[k];
            let mut next = partial.clone();
            if k % 2 == 1 {
                // (1 + t^k)^l, truncated
                let mut binom = 1i64;
                let mut term = vec![0i64; n + 1];
                term[0] = 1;
                let mut power = 0usize;
                for j in 1..=l {
                    binom = binom * (l - j + 1) / j;
                    power += k;
                    if power > n {
                        break;
                    }
                    term[power] = binom;
                }
                next = series_mul(&partial, &term, n);
            } else {
                // 1/(1-t^k)^l = product of l geometric series
                for _ in 0..l {
                    let mut geo = vec![0i64; n + 1];
                    let mut p = 0usize;
                    while p <= n {
                        geo[p] = 1;
                        p += k;
                    }
                    next = series_mul(&next, &geo, n);
                }
            }
            partial = next;
        }
        dims
    }

    fn series_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
        let mut out = vec![0i64; n + 1];
        for i in 0..=n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..=n - i {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    }

    fn two_odd() -> Arc<FreeDgl> {
        FreeDgl::abelian_boundary(vec![
            LieGenerator::new("a1", 3),
            LieGenerator::new("a2", 3),
        ])
        .unwrap()
    }

    #[test]
    fn generator_degree_basis() {
        let l = two_odd();
        assert_eq!(l.basis_in_degree(3).dim(), 2);
    }

    #[test]
    fn odd_pair_degree_six_is_three_dimensional() {
        let l = two_odd();
        assert_eq!(l.basis_in_degree(6).dim(), 3);
    }

    #[test]
    fn single_even_generator_has_no_self_bracket() {
        let l = FreeDgl::abelian_boundary(vec![LieGenerator::new("a", 2)]).unwrap();
        assert_eq!(l.basis_in_degree(4).dim(), 0);
    }

    #[test]
    fn dimensions_match_the_witt_series_oracle() {
        for degrees in [vec![3, 3], vec![1, 1], vec![1, 2, 3], vec![2, 2]] {
            let gens: Vec<LieGenerator> = degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| LieGenerator::new(format!("g{i}"), d))
                .collect();
            let l = FreeDgl::abelian_boundary(gens).unwrap();
            let oracle = witt_dims(&degrees, 9);
            for n in 1..=9i64 {
                assert_eq!(
                    l.basis_in_degree(n).dim() as i64,
                    oracle[n as usize],
                    "degrees {degrees:?}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn homology_with_zero_boundary_is_the_whole_degree() {
        let l = two_odd();
        for n in 1..=8 {
            let (dim, _) = l.homology(n);
            assert_eq!(dim, l.basis_in_degree(n).dim());
        }
    }

    #[test]
    fn killing_the_self_bracket() {
        // generators a (3) and b (7) with db = [a, a]: H6 loses [a,a],
        // H10 keeps [a,b] since d[a,b] = -[a,[a,a]] = 0 and nothing hits it
        let l0 = FreeDgl::abelian_boundary(vec![
            LieGenerator::new("a", 3),
            LieGenerator::new("b", 7),
        ])
        .unwrap();
        let a = l0.generator(l0.id_of("a").unwrap());
        let aa = l0.bracket(&a, &a).unwrap();
        let l = l0.with_boundary(vec![("b".into(), aa)]).unwrap();
        assert!(l.is_minimal());
        let (h6, _) = l.homology(6);
        assert_eq!(h6, 0);
        let (h3, _) = l.homology(3);
        assert_eq!(h3, 1);
        let (h7, _) = l.homology(7);
        assert_eq!(h7, 0);
        let (h10, reps) = l.homology(10);
        assert_eq!(h10, 1);
        // small independent oracle: dim L10 = 1 and no boundaries land there
        assert_eq!(l.basis_in_degree(10).dim(), 1);
        assert_eq!(l.boundary_matrix(11).rank(), 0);
        assert!(!reps[0].is_zero());
    }

    #[test]
    fn boundary_square_not_zero_is_rejected() {
        // da = 0 forced; try db = a with |b| = 4, |a| = 3, then dc = [a, b]
        // gives d(dc) = [a, a]-ish terms
        let l0 = FreeDgl::abelian_boundary(vec![
            LieGenerator::new("a", 3),
            LieGenerator::new("b", 4),
            LieGenerator::new("c", 8),
        ])
        .unwrap();
        let a = l0.generator(l0.id_of("a").unwrap());
        let b = l0.generator(l0.id_of("b").unwrap());
        let ab = l0.bracket(&a, &b).unwrap();
        let err = l0.with_boundary(vec![("b".into(), a.clone()), ("c".into(), ab)]);
        assert!(matches!(err, Err(DglError::BoundaryNotSquareZero { .. })));
    }

    #[test]
    fn bracket_words_certify_membership() {
        let l = two_odd();
        let basis = l.basis_in_degree(6);
        // an element built from brackets has coordinates; a bare tensor word
        // that is not a Lie element does not
        let a1 = l.generator(0);
        let a2 = l.generator(1);
        let el = l.bracket(&a1, &a2).unwrap();
        assert!(basis.coords(&el).is_some());
        let raw = LieElement::from_word(vec![0, 1], crate::rational::rat(1));
        assert!(basis.coords(&raw).is_none());
    }
}
