//! Multiplicative characters of F_{q^n} through a dense discrete-log table.
//!
//! With `θ` a fixed generator and `a = θ^d`, the character of index `k`
//! sends `a` to `exp(2πi·kd/(N-1))`, and every character sends 0 to 0.

use num_complex::Complex64;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::ff::{Element, Field, FiniteField};

/// Default cap on `N - 1` for table construction.
pub const DEFAULT_DLOG_CAP: u64 = 10_000_000;

const NO_LOG: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct CharacterTable<'f> {
    field: &'f Field,
    generator: Element,
    // dlog[index_of(a)], NO_LOG at zero
    dlog: Vec<u32>,
}

impl<'f> CharacterTable<'f> {
    pub fn build(field: &'f Field, seed: u64) -> Result<Self> {
        Self::build_with_cap(field, seed, DEFAULT_DLOG_CAP)
    }

    pub fn build_with_cap(field: &'f Field, seed: u64, cap: u64) -> Result<Self> {
        let group = field.order() - 1;
        if group > cap || group >= NO_LOG as u64 {
            return Err(Error::DlogCapExceeded { size: group, cap });
        }
        let generator = field.find_generator(seed);
        let mut dlog = vec![NO_LOG; field.order() as usize];
        let mut cur = field.one();
        for e in 0..group {
            dlog[field.index_of(&cur) as usize] = e as u32;
            cur = field.mul(&cur, &generator);
        }
        Ok(Self { field, generator, dlog })
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn generator(&self) -> &Element {
        &self.generator
    }

    /// `N - 1`, the order of the character group.
    pub fn group_order(&self) -> u64 {
        self.field.order() - 1
    }

    pub fn dlog(&self, a: &Element) -> Option<u64> {
        self.dlog_index(self.field.index_of(a))
    }

    /// Discrete log by element index.
    pub fn dlog_index(&self, index: u64) -> Option<u64> {
        match self.dlog[index as usize] {
            NO_LOG => None,
            e => Some(e as u64),
        }
    }

    pub fn character(&self, index: u64) -> Character<'_> {
        Character { table: self, index: index % self.group_order() }
    }

    pub fn characters(&self) -> impl Iterator<Item = Character<'_>> + '_ {
        (0..self.group_order()).map(move |k| self.character(k))
    }

    /// The `φ(d)` characters of exact order `d`: indices `(N-1)e/d` with
    /// `gcd(e, d) = 1`.
    pub fn lambda_set(&self, d: u64) -> Result<Vec<Character<'_>>> {
        let m = self.group_order();
        if d == 0 || !m.is_multiple_of(d) {
            return Err(Error::NotADivisor { d, m });
        }
        let step = m / d;
        Ok((0..d)
            .filter(|&e| gcd(e, d) == 1)
            .map(|e| self.character(step * e))
            .collect())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Character<'t> {
    table: &'t CharacterTable<'t>,
    index: u64,
}

impl<'t> Character<'t> {
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn table(&self) -> &'t CharacterTable<'t> {
        self.table
    }

    pub fn is_trivial(&self) -> bool {
        self.index == 0
    }

    pub fn order(&self) -> u64 {
        let m = self.table.group_order();
        m / gcd(m, self.index)
    }

    /// `k·dlog(a) mod (N-1)`, or `None` at zero.
    pub fn exponent_index(&self, index: u64) -> Option<u64> {
        let m = self.table.group_order() as u128;
        self.table
            .dlog_index(index)
            .map(|d| ((d as u128 * self.index as u128) % m) as u64)
    }

    pub fn eval(&self, a: &Element) -> Complex64 {
        self.eval_index(self.table.field.index_of(a))
    }

    pub fn eval_index(&self, index: u64) -> Complex64 {
        match self.exponent_index(index) {
            None => Complex64::new(0.0, 0.0),
            Some(e) => root_of_unity(e, self.table.group_order()),
        }
    }

    /// True iff the restriction to F_{q^d}^* is trivial, i.e. `(q^d - 1) | k`.
    pub fn trivial_on_subfield(&self, d: usize) -> Result<bool> {
        let n = self.table.field.n();
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NotADivisor { d: d as u64, m: n as u64 });
        }
        Ok(self.index.is_multiple_of(self.table.field.q_pow(d) - 1))
    }
}

/// `exp(2πi·e/m)`.
pub fn root_of_unity(e: u64, m: u64) -> Complex64 {
    let (s, c) = (std::f64::consts::TAU * (e as f64 / m as f64)).sin_cos();
    Complex64::new(c, s)
}

/// Divisors of `N - 1`.
pub fn group_divisors(field: &Field) -> Vec<u64> {
    field.group_factorization().divisors()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f9() -> Field {
        Field::with_moduli(3, &[0, 1], &[1, 0, 1]).unwrap()
    }

    #[test]
    fn table_basics() {
        let f = f9();
        let t = CharacterTable::build(&f, 3).unwrap();
        assert_eq!(t.dlog.iter().filter(|&&d| d != NO_LOG).count(), 8);
        assert_eq!(t.dlog(&f.one()), Some(0));
        assert_eq!(t.dlog(t.generator()), Some(1));
        assert_eq!(t.dlog(&f.pow(t.generator(), 5)), Some(5));
        assert_eq!(t.dlog(&f.zero()), None);
        for a in f.elements().filter(|a| !f.is_zero(a)) {
            assert_eq!(f.pow(t.generator(), t.dlog(&a).unwrap()), a);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let f = Field::build(2, 1, 10, 0).unwrap();
        assert_eq!(
            CharacterTable::build_with_cap(&f, 0, 1000).unwrap_err(),
            Error::DlogCapExceeded { size: 1023, cap: 1000 }
        );
    }

    #[test]
    fn evaluation_and_orders() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let trivial = t.character(0);
        for a in f.elements().filter(|a| !f.is_zero(a)) {
            assert!((trivial.eval(&a) - 1.0).norm() < 1e-12);
        }
        for chi in t.characters() {
            assert_eq!(chi.eval(&f.zero()), Complex64::new(0.0, 0.0));
        }
        let quad = t.character(4);
        assert_eq!(quad.order(), 2);
        let g = t.generator().clone();
        assert!((quad.eval(&g) + 1.0).norm() < 1e-12);
        assert_eq!(t.character(0).order(), 1);
        assert_eq!(t.character(1).order(), 8);
        assert_eq!(t.character(6).order(), 4);
    }

    #[test]
    fn lambda_sets_partition_the_group() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let one = t.lambda_set(1).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].is_trivial());
        let mut seen = Vec::new();
        for d in group_divisors(&f) {
            let set = t.lambda_set(d).unwrap();
            assert_eq!(set.len() as u64, arith::euler_phi(d).unwrap());
            assert!(set.iter().all(|c| c.order() == d));
            seen.extend(set.iter().map(|c| c.index()));
        }
        seen.sort_unstable();
        assert_eq!(seen, (0..8).collect::<Vec<_>>());
        assert!(matches!(t.lambda_set(3), Err(Error::NotADivisor { .. })));
    }

    #[test]
    fn subfield_triviality_agrees_with_evaluation() {
        for f in [f9(), Field::build(2, 1, 4, 1).unwrap()] {
            let t = CharacterTable::build(&f, 5).unwrap();
            let divisors = arith::divisors(f.n() as u64).unwrap();
            for chi in t.characters() {
                for &d in &divisors {
                    let d = d as usize;
                    let direct = f
                        .elements()
                        .filter(|a| !f.is_zero(a) && f.in_subfield(a, d))
                        .all(|a| (chi.eval(&a) - 1.0).norm() < 1e-9);
                    assert_eq!(chi.trivial_on_subfield(d).unwrap(), direct);
                }
                assert_eq!(chi.trivial_on_subfield(f.n()).unwrap(), chi.is_trivial());
            }
        }
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        assert!(t.character(2).trivial_on_subfield(1).unwrap());
        assert!(!t.character(1).trivial_on_subfield(1).unwrap());
    }

    #[test]
    fn multiplicativity() {
        let f = Field::build(5, 1, 2, 2).unwrap();
        let t = CharacterTable::build(&f, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..1000 {
            let chi = t.character(rng.random_range(0..24));
            let a = f.element(rng.random_range(0..25));
            let b = f.element(rng.random_range(0..25));
            let lhs = chi.eval(&f.mul(&a, &b));
            let rhs = chi.eval(&a) * chi.eval(&b);
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }
}
