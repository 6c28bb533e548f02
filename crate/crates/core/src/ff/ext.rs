use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::base::checked_power;
use super::poly::{Poly, Polys};
use super::{BaseField, FiniteField};
use crate::arith::{self, Factorization};
use crate::error::{Error, Result};

/// Largest supported field order, so that `N - 1 < 2^63`.
pub const MAX_FIELD_ORDER: u64 = 1 << 63;

/// An element of F_{q^n}: coefficient codes over F_q in the basis
/// `1, x, …, x^{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Element(pub(crate) Vec<u64>);

impl Element {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.0))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

fn join(c: &[u64]) -> String {
    c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// The tower F_p ⊂ F_q ⊂ F_{q^n} with its defining moduli.
#[derive(Debug, Clone)]
pub struct Field {
    base: BaseField,
    n: usize,
    modulus: Vec<u64>,
    order: u64,
    group: Factorization,
    // primes dividing n
    n_primes: Vec<usize>,
    // frobenius[j][i] = x^{i q^j}
    frobenius: Vec<Vec<Element>>,
}

impl Field {
    /// Builds F_{(p^k)^n} with moduli found by a random search seeded by `seed`.
    pub fn build(p: u64, k: usize, n: usize, seed: u64) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::ZeroDegree);
        }
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        checked_power(p, (k * n) as u64)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = BaseField::random(p, k, &mut rng)?;
        let q = base.q();
        if n == 1 {
            return Self::over(base, vec![0, 1]);
        }
        let ring = Polys::new(&base);
        loop {
            let mut g: Vec<u64> = (0..n).map(|_| rng.random_range(0..q)).collect();
            g.push(1);
            if g[0] != 0 && ring.is_irreducible(&Poly::new(g.clone(), &base))? {
                return Self::over(base, g);
            }
        }
    }

    /// Builds the tower from explicit moduli: `h` over F_p and `g` over F_q,
    /// both monic and constant term first.
    pub fn with_moduli(p: u64, h: &[u64], g: &[u64]) -> Result<Self> {
        let base = BaseField::with_modulus(p, h)?;
        Self::over(base, g.to_vec())
    }

    /// F_q[x]/(g) over an existing base field.
    pub fn over(base: BaseField, g: Vec<u64>) -> Result<Self> {
        let n = g.len().checked_sub(1).ok_or(Error::ZeroPolynomial)?;
        if n == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if let Some(&c) = g.iter().find(|&&c| c >= base.q()) {
            return Err(Error::CoefficientOutOfRange { value: c, order: base.q() });
        }
        if g[n] != 1 {
            return Err(Error::Reducible);
        }
        let order = checked_power(base.p(), (base.degree() * n) as u64)?;
        if n > 1 && !Polys::new(&base).is_irreducible(&Poly::new(g.clone(), &base))? {
            return Err(Error::Reducible);
        }
        let group = arith::factorize(order - 1)?;
        let n_primes = arith::factorize(n as u64)?.primes().map(|r| r as usize).collect();
        let mut field =
            Self { base, n, modulus: g, order, group, n_primes, frobenius: Vec::new() };
        field.frobenius = field.frobenius_images();
        Ok(field)
    }

    fn frobenius_images(&self) -> Vec<Vec<Element>> {
        let x = self.generator_x();
        let xq = self.pow_plain(&x, self.base.q());
        let mut first = Vec::with_capacity(self.n);
        let mut cur = self.one();
        for _ in 0..self.n {
            first.push(cur.clone());
            cur = self.mul(&cur, &xq);
        }
        let mut all = vec![(0..self.n).map(|i| self.monomial(i)).collect::<Vec<_>>()];
        for j in 1..self.n {
            let prev: &Vec<Element> = &all[j - 1];
            let next = prev.iter().map(|b| self.linear_apply(&first, b)).collect();
            all.push(next);
        }
        all
    }

    // Applies the F_q-linear map with images `cols[i]` of x^i to `a`.
    fn linear_apply(&self, cols: &[Element], a: &Element) -> Element {
        let f = &self.base;
        let mut out = vec![0u64; self.n];
        for (i, &c) in a.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(&cols[i].0) {
                *o = f.add(o, &f.mul(&c, &v));
            }
        }
        Element(out)
    }

    // Square-and-multiply without exponent reduction, usable while the
    // Frobenius tables are still being built.
    fn pow_plain(&self, a: &Element, mut e: u64) -> Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn p(&self) -> u64 {
        self.base.p()
    }

    pub fn q(&self) -> u64 {
        self.base.q()
    }

    /// Degree of F_q over F_p.
    pub fn k(&self) -> usize {
        self.base.degree()
    }

    /// Degree n of the top field over F_q.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Defining polynomial of F_{q^n} over F_q, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Factorization of `q^n - 1`.
    pub fn group_factorization(&self) -> &Factorization {
        &self.group
    }

    /// `"p^k^n"`, used as the field tag in reports.
    pub fn tag(&self) -> String {
        format!("{}^{}^{}", self.p(), self.k(), self.n)
    }

    /// Primes dividing n, increasing.
    pub fn n_primes(&self) -> &[usize] {
        &self.n_primes
    }

    /// `q^d` for `d <= n`.
    pub fn q_pow(&self, d: usize) -> u64 {
        self.q().pow(d as u32)
    }

    pub fn monomial(&self, i: usize) -> Element {
        let mut c = vec![0; self.n];
        c[i % self.n] = 1;
        Element(c)
    }

    /// The canonical root `x` of the defining polynomial.
    pub fn generator_x(&self) -> Element {
        if self.n == 1 {
            // x ≡ -g_0 when g has degree one.
            return Element(vec![self.base.neg(&self.modulus[0])]);
        }
        self.monomial(1)
    }

    /// Embeds `c ∈ F_q`.
    pub fn scalar(&self, c: u64) -> Element {
        let mut v = vec![0; self.n];
        v[0] = c;
        Element(v)
    }

    pub fn scale(&self, c: u64, a: &Element) -> Element {
        Element(a.0.iter().map(|v| self.base.mul(&c, v)).collect())
    }

    pub fn is_scalar(&self, a: &Element) -> bool {
        a.0[1..].iter().all(|&c| c == 0)
    }

    /// Builds an element from coordinates, padding with zeros.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Element> {
        if coeffs.len() > self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: coeffs.len() });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.q()) {
            return Err(Error::CoefficientOutOfRange { value: c, order: self.q() });
        }
        let mut v = coeffs.to_vec();
        v.resize(self.n, 0);
        Ok(Element(v))
    }

    /// All field elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(move |i| self.element(i))
    }

    /// `a^{q^j}`.
    pub fn frobenius(&self, a: &Element, j: usize) -> Element {
        let j = j % self.n;
        if j == 0 {
            return a.clone();
        }
        self.linear_apply(&self.frobenius[j], a)
    }

    /// Least `d | n` with `a ∈ F_{q^d}`.
    pub fn degree_over_base(&self, a: &Element) -> usize {
        for d in arith::divisors(self.n as u64).expect("n >= 1") {
            let d = d as usize;
            if d == self.n || self.frobenius(a, d) == *a {
                return d;
            }
        }
        unreachable!()
    }

    /// True iff `a` generates F_{q^n} over F_q. Tests only the maximal
    /// proper subfields.
    pub fn has_full_degree(&self, a: &Element) -> bool {
        self.n_primes.iter().all(|&r| self.frobenius(a, self.n / r) != *a)
    }

    /// True iff `a ∈ F_{q^d}` for `d | n`.
    pub fn in_subfield(&self, a: &Element, d: usize) -> bool {
        self.frobenius(a, d) == *a
    }

    pub fn multiplicative_order(&self, a: &Element, fac: &Factorization) -> Result<u64> {
        if self.is_zero(a) {
            return Err(Error::ZeroElement);
        }
        let mut order = fac.value;
        for &(r, e) in &fac.factors {
            for _ in 0..e {
                if self.pow(a, order / r) == self.one() {
                    order /= r;
                } else {
                    break;
                }
            }
        }
        Ok(order)
    }

    pub fn order_of(&self, a: &Element) -> Result<u64> {
        self.multiplicative_order(a, &self.group)
    }

    pub fn is_primitive(&self, a: &Element) -> bool {
        if self.is_zero(a) {
            return false;
        }
        let m = self.order - 1;
        self.group.primes().all(|r| self.pow(a, m / r) != self.one())
    }

    /// First primitive element in the seeded random sequence.
    pub fn find_generator(&self, seed: u64) -> Element {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let a = self.element(rng.random_range(1..self.order));
            if self.is_primitive(&a) {
                return a;
            }
        }
    }

    /// `g∘a = Σ g_i a^{q^i}` for `g` over F_q.
    pub fn apply_linearized(&self, g: &Poly<u64>, a: &Element) -> Element {
        let mut acc = self.zero();
        for (i, c) in g.coeffs().iter().enumerate() {
            if *c != 0 {
                acc = self.add(&acc, &self.scale(*c, &self.frobenius(a, i)));
            }
        }
        acc
    }

    /// Minimal polynomial over F_q: the product of `x - c` over the distinct
    /// conjugates `c` of `a`.
    pub fn minimal_polynomial(&self, a: &Element) -> Poly<u64> {
        let d = self.degree_over_base(a);
        let top = Polys::new(self);
        let mut m = Poly::one(self);
        for j in 0..d {
            let root = self.frobenius(a, j);
            m = top.mul(&m, &Poly::new(vec![self.neg(&root), self.one()], self));
        }
        let coeffs = m.coeffs().iter().map(|c| c.0[0]).collect();
        Poly::new(coeffs, &self.base)
    }
}

impl FiniteField for Field {
    type Elem = Element;

    fn characteristic(&self) -> u64 {
        self.base.p()
    }

    fn order(&self) -> u64 {
        self.order
    }

    fn zero(&self) -> Element {
        Element(vec![0; self.n])
    }

    fn one(&self) -> Element {
        self.scalar(1)
    }

    fn is_zero(&self, a: &Element) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        Element(a.0.iter().zip(&b.0).map(|(x, y)| self.base.add(x, y)).collect())
    }

    fn sub(&self, a: &Element, b: &Element) -> Element {
        Element(a.0.iter().zip(&b.0).map(|(x, y)| self.base.sub(x, y)).collect())
    }

    fn neg(&self, a: &Element) -> Element {
        Element(a.0.iter().map(|x| self.base.neg(x)).collect())
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let f = &self.base;
        let n = self.n;
        if n == 1 {
            return Element(vec![f.mul(&a.0[0], &b.0[0])]);
        }
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if *y != 0 {
                    prod[i + j] = f.add(&prod[i + j], &f.mul(x, y));
                }
            }
        }
        for i in (n..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..n {
                let idx = i - n + j;
                prod[idx] = f.sub(&prod[idx], &f.mul(&c, &self.modulus[j]));
            }
        }
        prod.truncate(n);
        Element(prod)
    }

    fn inv(&self, a: &Element) -> Option<Element> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.order - 2))
    }

    fn element(&self, mut index: u64) -> Element {
        let q = self.q();
        let mut v = vec![0; self.n];
        for c in v.iter_mut() {
            *c = index % q;
            index /= q;
        }
        Element(v)
    }

    fn index_of(&self, a: &Element) -> u64 {
        a.0.iter().rev().fold(0u64, |acc, &c| acc * self.q() + c)
    }

    fn from_u64(&self, c: u64) -> Element {
        self.scalar(c % self.p())
    }
}
