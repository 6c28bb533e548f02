//! Dense univariate polynomials over any [`FiniteField`].
//!
//! Irreducibility uses Rabin's test. Factorization runs squarefree
//! decomposition (with p-th roots in characteristic p), distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FiniteField;
use crate::arith;
use crate::error::{Error, Result};

/// Coefficients constant term first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn new<F: FiniteField<Elem = E>>(mut coeffs: Vec<E>, field: &F) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one<F: FiniteField<Elem = E>>(field: &F) -> Self {
        Self { coeffs: vec![field.one()] }
    }

    /// `x`.
    pub fn x<F: FiniteField<Elem = E>>(field: &F) -> Self {
        Self { coeffs: vec![field.zero(), field.one()] }
    }

    /// `x^n - c`.
    pub fn binomial<F: FiniteField<Elem = E>>(n: usize, c: &E, field: &F) -> Self {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = field.neg(c);
        coeffs[n] = field.one();
        Self::new(coeffs, field)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff<F: FiniteField<Elem = E>>(&self, i: usize, field: &F) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }
}

/// Polynomial arithmetic over a borrowed field.
#[derive(Debug, Clone, Copy)]
pub struct Polys<'a, F> {
    field: &'a F,
}

impl<'a, F: FiniteField> Polys<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &'a F {
        self.field
    }

    fn make(&self, coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        Poly::new(coeffs, self.field)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.make(vec![c])
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = self.field;
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(&a.coeff(i, f), &b.coeff(i, f))).collect();
        self.make(coeffs)
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = self.field;
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(&a.coeff(i, f), &b.coeff(i, f))).collect();
        self.make(coeffs)
    }

    pub fn scale(&self, c: &F::Elem, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.make(a.coeffs.iter().map(|x| self.field.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let f = self.field;
        let mut out = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(x, y));
            }
        }
        self.make(out)
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Option<(Poly<F::Elem>, Poly<F::Elem>)> {
        let f = self.field;
        let db = b.degree()?;
        let lead_inv = f.inv(b.leading()?)?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Some((Poly::zero(), a.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = f.mul(&rem[i], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                let idx = i - db + j;
                rem[idx] = f.sub(&rem[idx], &f.mul(&c, bj));
            }
            quot[i - db] = c;
        }
        rem.truncate(db);
        Some((self.make(quot), self.make(rem)))
    }

    /// Remainder mod a nonzero `b`.
    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.div_rem(a, b).expect("nonzero divisor").1
    }

    pub fn divides(&self, d: &Poly<F::Elem>, a: &Poly<F::Elem>) -> bool {
        match self.div_rem(a, d) {
            Some((_, r)) => r.is_zero(),
            None => a.is_zero(),
        }
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&self.field.inv(l).expect("nonzero leading"), a),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = self.field;
        let coeffs = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_u64(i as u64), c))
            .collect();
        self.make(coeffs)
    }

    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let f = self.field;
        a.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn mul_mod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &Poly<F::Elem>, mut e: u128, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&Poly::one(self.field), m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(&acc, &base, m);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_mod(&base, &base, m);
            }
        }
        acc
    }

    /// Rabin's test: `f` of degree d is irreducible iff `x^{Q^d} ≡ x` and
    /// `gcd(x^{Q^{d/r}} - x, f) = 1` for each prime `r | d`.
    pub fn is_irreducible(&self, f: &Poly<F::Elem>) -> Result<bool> {
        let d = f.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Ok(false);
        }
        if d == 1 {
            return Ok(true);
        }
        let f = self.monic(f);
        let x = Poly::x(self.field);
        let q = self.field.order() as u128;
        // powers[i] = x^{Q^i} mod f
        let mut powers = vec![self.rem(&x, &f)];
        for i in 1..=d {
            let next = self.pow_mod(&powers[i - 1], q, &f);
            powers.push(next);
        }
        if powers[d] != powers[0] {
            return Ok(false);
        }
        let fac = arith::factorize(d as u64)?;
        for r in fac.primes() {
            let h = self.sub(&powers[d / r as usize], &x);
            if self.gcd(&h, &f).degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn pth_root_poly(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let p = self.field.characteristic() as usize;
        let coeffs = a
            .coeffs
            .iter()
            .step_by(p)
            .map(|c| self.field.pth_root(c))
            .collect();
        self.make(coeffs)
    }

    /// Squarefree decomposition of a nonzero polynomial: pairwise coprime
    /// monic squarefree factors with multiplicities, leading coefficient
    /// dropped. Sorted by multiplicity.
    pub fn squarefree_decomposition(&self, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) > 0 {
            self.sff_into(&self.monic(f), 1, &mut out);
        }
        out.sort_by_key(|(_, m)| *m);
        out
    }

    fn sff_into(&self, f: &Poly<F::Elem>, scale: usize, out: &mut Vec<(Poly<F::Elem>, usize)>) {
        let p = self.field.characteristic() as usize;
        let one = Poly::one(self.field);
        let d = self.derivative(f);
        if d.is_zero() {
            if f.degree() > Some(0) {
                self.sff_into(&self.pth_root_poly(f), scale * p, out);
            }
            return;
        }
        let mut c = self.gcd(f, &d);
        let mut w = self.div_rem(f, &c).unwrap().0;
        let mut i = 1;
        while w != one {
            let y = self.gcd(&w, &c);
            let factor = self.div_rem(&w, &y).unwrap().0;
            if factor != one {
                out.push((self.monic(&factor), i * scale));
            }
            i += 1;
            c = self.div_rem(&c, &y).unwrap().0;
            w = y;
        }
        if c != one {
            self.sff_into(&self.pth_root_poly(&c), scale * p, out);
        }
    }

    /// Number of distinct roots in a splitting field.
    pub fn distinct_root_count(&self, f: &Poly<F::Elem>) -> usize {
        self.squarefree_decomposition(f)
            .iter()
            .map(|(g, _)| g.degree().unwrap())
            .sum()
    }

    /// True iff `f = a·h^r` for some `h` of degree at least one.
    pub fn is_power_shape(&self, f: &Poly<F::Elem>, r: usize) -> bool {
        let parts = self.squarefree_decomposition(f);
        !parts.is_empty() && parts.iter().all(|(_, m)| m % r == 0)
    }

    // Splits a monic squarefree polynomial into products of irreducibles of
    // equal degree.
    fn distinct_degree(&self, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
        let q = self.field.order() as u128;
        let x = Poly::x(self.field);
        let mut rest = f.clone();
        let mut h = self.rem(&x, &rest);
        let mut out = Vec::new();
        let mut d = 0;
        while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
            d += 1;
            h = self.pow_mod(&h, q, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.degree() > Some(0) {
                rest = self.div_rem(&rest, &g).unwrap().0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
            out.push((rest, deg));
        }
        out
    }

    fn equal_degree<R: Rng>(&self, f: &Poly<F::Elem>, d: usize, rng: &mut R) -> Vec<Poly<F::Elem>> {
        let n = f.degree().unwrap();
        if n == d {
            return vec![f.clone()];
        }
        let field = self.field;
        let q = field.order() as u128;
        let p = field.characteristic();
        loop {
            let a = self.make((0..n).map(|_| field.element(rng.random_range(0..field.order()))).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if p == 2 {
                // Absolute trace from F_{Q^d} to F_2.
                let bits = (q.trailing_zeros() as usize) * d;
                let mut term = self.rem(&a, f);
                let mut acc = term.clone();
                for _ in 1..bits {
                    term = self.mul_mod(&term, &term, f);
                    acc = self.add(&acc, &term);
                }
                acc
            } else {
                let e = (q.pow(d as u32) - 1) / 2;
                self.sub(&self.pow_mod(&a, e, f), &Poly::one(field))
            };
            let g = self.gcd(&b, f);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n {
                let other = self.div_rem(f, &g).unwrap().0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&self.monic(&other), d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors with multiplicities, sorted by
    /// [`Polys::compare`].
    pub fn factor(&self, f: &Poly<F::Elem>) -> Result<Vec<(Poly<F::Elem>, usize)>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut out = Vec::new();
        for (part, mult) in self.squarefree_decomposition(f) {
            for (block, d) in self.distinct_degree(&part) {
                for g in self.equal_degree(&block, d, &mut rng) {
                    out.push((g, mult));
                }
            }
        }
        out.sort_by(|a, b| self.compare(&a.0, &b.0));
        Ok(out)
    }

    /// Degree first, then coefficient indices from the constant term up.
    pub fn compare(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            let ka = a.coeffs.iter().map(|c| self.field.index_of(c));
            let kb = b.coeffs.iter().map(|c| self.field.index_of(c));
            ka.cmp(kb)
        })
    }
}

/// Formats coefficient codes as `"c0,c1,…"`.
pub fn format_coeffs(coeffs: &[u64]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Parses `"c0,c1,…"`. Offsets in errors are relative to `base_offset`.
pub fn parse_coeffs(text: &str, base_offset: usize) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let mut offset = base_offset;
    for part in text.split(',') {
        let trimmed = part.trim();
        let lead = part.len() - part.trim_start().len();
        let value = trimmed.parse::<u64>().map_err(|_| Error::Parse {
            offset: offset + lead,
            message: format!("expected a nonnegative integer coefficient, found {trimmed:?}"),
        })?;
        out.push(value);
        offset += part.len() + 1;
    }
    Ok(out)
}
