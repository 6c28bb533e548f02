//! F_q-affine spaces `A = u + V` inside F_{q^n}.
//!
//! Direction spaces are kept as a reduced row echelon basis in the
//! coordinate basis `1, x, …, x^{n-1}`, and the translation is reduced
//! against it, so two descriptions of the same set compare equal.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::error::{Error, Result};
use crate::ff::linalg;
use crate::ff::poly::{format_coeffs, parse_coeffs};
use crate::ff::{Element, Field, FiniteField};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineSpace {
    translation: Element,
    basis: Vec<Element>,
    pivots: Vec<usize>,
}

impl AffineSpace {
    /// `u + span(vectors)`, reducing the vectors to an independent set.
    pub fn new(field: &Field, u: Element, vectors: &[Element]) -> Result<Self> {
        let space = Self::spanned(field, u, vectors);
        if space.basis.is_empty() {
            return Err(Error::EmptySpan);
        }
        Ok(space)
    }

    pub fn linear(field: &Field, vectors: &[Element]) -> Result<Self> {
        Self::new(field, field.zero(), vectors)
    }

    // Like `new` but allows the zero-dimensional space {u}.
    pub(crate) fn spanned(field: &Field, u: Element, vectors: &[Element]) -> Self {
        let mut rows: Vec<Vec<u64>> = vectors.iter().map(|v| v.0.clone()).collect();
        let pivots = linalg::rref(&mut rows, field.base());
        let translation = Element(linalg::reduce(&u.0, &rows, &pivots, field.base()));
        Self { translation, basis: rows.into_iter().map(Element).collect(), pivots }
    }

    /// The whole field.
    pub fn full(field: &Field) -> Self {
        let basis: Vec<Element> = (0..field.n()).map(|i| field.monomial(i)).collect();
        Self::spanned(field, field.zero(), &basis)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical translation: zero in every pivot coordinate.
    pub fn translation(&self) -> &Element {
        &self.translation
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn is_linear(&self) -> bool {
        self.translation.0.iter().all(|&c| c == 0)
    }

    /// Number of elements, `q^t`.
    pub fn size(&self, field: &Field) -> u64 {
        field.q_pow(self.dim())
    }

    /// The direction space `V` as a linear space.
    pub fn direction(&self, field: &Field) -> AffineSpace {
        Self { translation: field.zero(), basis: self.basis.clone(), pivots: self.pivots.clone() }
    }

    /// `c·A` for nonzero `c`.
    pub fn scaled(&self, field: &Field, c: &Element) -> AffineSpace {
        let basis: Vec<Element> = self.basis.iter().map(|b| field.mul(c, b)).collect();
        Self::spanned(field, field.mul(c, &self.translation), &basis)
    }

    /// The element with coordinates `coords` (length t) in `A`.
    pub fn point(&self, field: &Field, coords: &[u64]) -> Element {
        let mut acc = self.translation.clone();
        for (b, &c) in self.basis.iter().zip(coords) {
            if c != 0 {
                acc = field.add(&acc, &field.scale(c, b));
            }
        }
        acc
    }

    /// All `q^t` elements. Element `i` has coordinates given by the base-q
    /// digits of `i`, least significant on the first basis vector.
    pub fn enumerate(&self, field: &Field) -> Vec<Element> {
        self.iter(field).collect()
    }

    pub fn iter<'a>(&'a self, field: &'a Field) -> impl Iterator<Item = Element> + 'a {
        let q = field.q();
        let t = self.dim();
        (0..self.size(field)).map(move |mut i| {
            let mut coords = vec![0u64; t];
            for c in coords.iter_mut() {
                *c = i % q;
                i /= q;
            }
            self.point(field, &coords)
        })
    }

    /// Nonzero elements of the direction space.
    pub fn nonzero_directions<'a>(&'a self, field: &'a Field) -> impl Iterator<Item = Element> + 'a {
        let q = field.q();
        let t = self.dim();
        (1..self.size(field)).map(move |mut i| {
            let mut acc = field.zero();
            for b in &self.basis[..t] {
                let c = i % q;
                i /= q;
                if c != 0 {
                    acc = field.add(&acc, &field.scale(c, b));
                }
            }
            acc
        })
    }

    pub fn contains(&self, field: &Field, a: &Element) -> bool {
        let diff = field.sub(a, &self.translation);
        let rest = linalg::reduce(&diff.0, &vec_rows(&self.basis), &self.pivots, field.base());
        rest.iter().all(|&c| c == 0)
    }

    /// True iff every element of this space lies in `other`.
    pub fn is_subset_of(&self, field: &Field, other: &AffineSpace) -> bool {
        other.contains(field, &self.translation) && self.basis.iter().all(|b| other.direction(field).contains(field, b))
    }

    /// `n_{A,d}`: number of elements of degree exactly `d`, for each `d | n`.
    pub fn degree_profile(&self, field: &Field) -> BTreeMap<usize, u64> {
        let mut profile: BTreeMap<usize, u64> = arith::divisors(field.n() as u64)
            .expect("n >= 1")
            .into_iter()
            .map(|d| (d as usize, 0))
            .collect();
        for a in self.iter(field) {
            *profile.get_mut(&field.degree_over_base(&a)).unwrap() += 1;
        }
        profile
    }

    /// For nonzero `y ∈ A`: either `A ⊆ y·F_{q^d}` for a proper divisor `d`
    /// of n, or some nonzero `z ∈ V` has `y/z` of degree n. The alternative
    /// is guaranteed when `n <= q`.
    pub fn dichotomy(&self, field: &Field, y: &Element) -> Result<Dichotomy> {
        if field.is_zero(y) {
            return Err(Error::ZeroElement);
        }
        if !self.contains(field, y) {
            return Err(Error::NotInSpace);
        }
        let guaranteed = field.n() as u64 <= field.q();
        if let Some(d) = self.subfield_cover(field, y) {
            return Ok(Dichotomy { case: DichotomyCase::Subfield { d }, guaranteed });
        }
        let found = self.nonzero_directions(field).find(|z| {
            let quotient = field.mul(y, &field.inv(z).unwrap());
            field.has_full_degree(&quotient)
        });
        let case = match found {
            Some(z) => DichotomyCase::Quotient { z },
            None => DichotomyCase::Neither,
        };
        Ok(Dichotomy { case, guaranteed })
    }

    /// Least proper divisor `d` of n with `A ⊆ y·F_{q^d}`, for `y ∈ A`
    /// nonzero. Uses that `A = y + V`, so only the basis of `V` needs testing.
    pub fn subfield_cover(&self, field: &Field, y: &Element) -> Option<usize> {
        let n = field.n();
        let y_inv = field.inv(y)?;
        let scaled: Vec<Element> = self.basis.iter().map(|b| field.mul(&y_inv, b)).collect();
        let inside = |d: usize| scaled.iter().all(|v| field.in_subfield(v, d));
        // Maximal proper subfields first; every proper subfield lies in one.
        if !field.n_primes().iter().any(|&r| inside(n / r)) {
            return None;
        }
        arith::divisors(n as u64)
            .expect("n >= 1")
            .into_iter()
            .map(|d| d as usize)
            .find(|&d| d < n && inside(d))
    }

    /// Some nonzero `y ∈ A` and nonzero `z ∈ V` with `y/z` of degree n.
    pub fn quotient_witness(&self, field: &Field) -> Option<(Element, Element)> {
        let inverses: Vec<(Element, Element)> = self
            .nonzero_directions(field)
            .map(|z| {
                let inv = field.inv(&z).unwrap();
                (z, inv)
            })
            .collect();
        self.iter(field).filter(|y| !field.is_zero(y)).find_map(|y| {
            inverses
                .iter()
                .find(|(_, inv)| field.has_full_degree(&field.mul(&y, inv)))
                .map(|(z, _)| (y.clone(), z.clone()))
        })
    }

    /// Text form `u=<coeffs>;V=<coeffs>|<coeffs>|…`.
    pub fn describe(&self) -> String {
        self.to_string()
    }

    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        let (u_part, v_part) = text.split_once(';').ok_or_else(|| Error::Parse {
            offset: text.len(),
            message: "expected ';' separating u=... and V=...".into(),
        })?;
        let u_text = u_part.trim_start().strip_prefix("u=").ok_or_else(|| Error::Parse {
            offset: 0,
            message: "expected 'u='".into(),
        })?;
        let u_offset = u_part.len() - u_text.len();
        let v_start = u_part.len() + 1;
        let v_trimmed = v_part.trim_start();
        let v_text = v_trimmed.strip_prefix("V=").ok_or_else(|| Error::Parse {
            offset: v_start + (v_part.len() - v_trimmed.len()),
            message: "expected 'V='".into(),
        })?;
        let u = element_at(field, u_text, u_offset)?;
        let mut offset = v_start + (v_part.len() - v_text.len());
        let mut vectors = Vec::new();
        for chunk in v_text.split('|') {
            vectors.push(element_at(field, chunk, offset)?);
            offset += chunk.len() + 1;
        }
        Self::new(field, u, &vectors).map_err(|e| match e {
            Error::EmptySpan => Error::Parse { offset: v_start, message: e.to_string() },
            other => other,
        })
    }
}

fn element_at(field: &Field, text: &str, offset: usize) -> Result<Element> {
    let coeffs = parse_coeffs(text, offset)?;
    field.from_coeffs(&coeffs).map_err(|e| Error::Parse { offset, message: e.to_string() })
}

fn vec_rows(basis: &[Element]) -> Vec<Vec<u64>> {
    basis.iter().map(|b| b.0.clone()).collect()
}

impl fmt::Display for AffineSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis: Vec<String> = self.basis.iter().map(|b| format_coeffs(&b.0)).collect();
        write!(f, "u={};V={}", format_coeffs(&self.translation.0), basis.join("|"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DichotomyCase {
    /// `y ∈ A ⊆ y·F_{q^d}` with `d` a proper divisor of n.
    Subfield { d: usize },
    /// `y/z` has degree n over F_q.
    Quotient { z: Element },
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dichotomy {
    pub case: DichotomyCase,
    /// `n <= q`, under which `Neither` cannot occur.
    pub guaranteed: bool,
}

/// Gaussian binomial coefficient `[n choose k]_q`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Every `dim`-dimensional subspace exactly once, via canonical RREF bases.
pub fn subspaces(field: &Field, dim: usize) -> Result<impl Iterator<Item = AffineSpace> + '_> {
    let n = field.n();
    if dim > n {
        return Err(Error::DimensionTooLarge { dim, n });
    }
    let q = field.q();
    Ok(combinations(n, dim).into_iter().flat_map(move |pivots| {
        // Free entries: for the row with pivot c, every non-pivot column after c.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| ((c + 1)..n).filter(|j| !pivots.contains(j)).map(move |j| (r, j)))
            .collect();
        let count = q.pow(free.len() as u32);
        (0..count).map(move |mut idx| {
            let mut rows = vec![vec![0u64; n]; dim];
            for (r, &c) in pivots.iter().enumerate() {
                rows[r][c] = 1;
            }
            for &(r, j) in &free {
                rows[r][j] = idx % q;
                idx /= q;
            }
            AffineSpace {
                translation: field.zero(),
                basis: rows.into_iter().map(Element).collect(),
                pivots: pivots.clone(),
            }
        })
    }))
}

/// Every `dim`-dimensional affine space: each subspace with each canonical
/// translation (supported off the pivot columns).
pub fn affine_spaces(field: &Field, dim: usize) -> Result<impl Iterator<Item = AffineSpace> + '_> {
    let n = field.n();
    let q = field.q();
    Ok(subspaces(field, dim)?.flat_map(move |v| {
        let free: Vec<usize> = (0..n).filter(|j| !v.pivots.contains(j)).collect();
        (0..q.pow(free.len() as u32)).map(move |mut idx| {
            let mut u = vec![0u64; n];
            for &j in &free {
                u[j] = idx % q;
                idx /= q;
            }
            AffineSpace { translation: Element(u), ..v.clone() }
        })
    }))
}

/// Number of `dim`-dimensional affine spaces, `[n choose dim]_q · q^{n-dim}`.
pub fn affine_space_count(field: &Field, dim: usize) -> u128 {
    gaussian_binomial(field.n(), dim, field.q()) * (field.q() as u128).pow((field.n() - dim) as u32)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Random `t`-dimensional affine space: uniform coordinates for `u` and the
/// spanning vectors, redrawn until they are independent.
pub fn random_affine(field: &Field, t: usize, seed: u64) -> Result<AffineSpace> {
    if t > field.n() {
        return Err(Error::DimensionTooLarge { dim: t, n: field.n() });
    }
    if t == 0 {
        return Err(Error::EmptySpan);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = field.element(rng.random_range(0..field.order()));
    loop {
        let vectors: Vec<Element> = (0..t).map(|_| field.element(rng.random_range(0..field.order()))).collect();
        let space = AffineSpace::spanned(field, u.clone(), &vectors);
        if space.dim() == t {
            return Ok(space);
        }
    }
}

/// Kernel of an F_q-linear map on F_{q^n}, as a linear space (possibly {0}).
pub fn linear_kernel<M>(field: &Field, map: M) -> AffineSpace
where
    M: Fn(&Element) -> Element,
{
    let columns: Vec<Vec<u64>> = (0..field.n()).map(|i| map(&field.monomial(i)).0).collect();
    let basis: Vec<Element> = linalg::kernel(&columns, field.base()).into_iter().map(Element).collect();
    AffineSpace::spanned(field, field.zero(), &basis)
}

/// The subfield F_{q^d} as a linear space, for `d | n`.
pub fn subfield(field: &Field, d: usize) -> Result<AffineSpace> {
    let n = field.n();
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotADivisor { d: d as u64, m: n as u64 });
    }
    Ok(linear_kernel(field, |a| field.sub(&field.frobenius(a, d), a)))
}

/// Extends independent vectors to a basis of F_{q^n} with unit vectors.
pub fn extend_to_basis(field: &Field, vectors: &[Element]) -> Vec<Element> {
    let mut out = vectors.to_vec();
    for i in 0..field.n() {
        let e = field.monomial(i);
        let mut trial = out.clone();
        trial.push(e.clone());
        if AffineSpace::spanned(field, field.zero(), &trial).dim() == trial.len() {
            out = trial;
        }
    }
    out
}
