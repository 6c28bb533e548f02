use rand::Rng;

use super::poly::{Poly, Polys};
use super::FiniteField;
use crate::arith::{self, mul_mod, pow_mod};
use crate::error::{Error, Result};

// Log/antilog tables are built for proper extensions of F_p up to this size.
const TABLE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone)]
struct LogTables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

/// F_q = F_p[y]/(h). Elements are codes `Σ d_i p^i` in `[0, q)` where
/// `d_0 + d_1 y + …` is the reduced residue.
#[derive(Debug, Clone)]
pub struct BaseField {
    p: u64,
    k: usize,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<LogTables>,
}

impl BaseField {
    /// The prime field F_p, presented with modulus `h = y`.
    pub fn prime(p: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > 1 << 63 {
            return Err(Error::FieldTooLarge { p, exponent: 1 });
        }
        Ok(Self { p, k: 1, q: p, modulus: vec![0, 1], tables: None })
    }

    /// F_p[y]/(h) for a monic irreducible `h` given constant term first.
    pub fn with_modulus(p: u64, h: &[u64]) -> Result<Self> {
        let prime = Self::prime(p)?;
        let k = h.len().checked_sub(1).ok_or(Error::ZeroPolynomial)?;
        if k == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if let Some(&c) = h.iter().find(|&&c| c >= p) {
            return Err(Error::CoefficientOutOfRange { value: c, order: p });
        }
        if h[k] != 1 {
            return Err(Error::Reducible);
        }
        let q = checked_power(p, k as u64)?;
        if k == 1 {
            return Ok(Self { p, k, q, modulus: h.to_vec(), tables: None });
        }
        let ring = Polys::new(&prime);
        if !ring.is_irreducible(&Poly::new(h.to_vec(), &prime))? {
            return Err(Error::Reducible);
        }
        let mut field = Self { p, k, q, modulus: h.to_vec(), tables: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables()?);
        }
        Ok(field)
    }

    /// Seeded random search for a monic irreducible modulus of degree `k`.
    pub fn random<R: Rng>(p: u64, k: usize, rng: &mut R) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let prime = Self::prime(p)?;
        checked_power(p, k as u64)?;
        if k == 1 {
            return Ok(prime);
        }
        let ring = Polys::new(&prime);
        loop {
            let mut h: Vec<u64> = (0..k).map(|_| rng.random_range(0..p)).collect();
            h.push(1);
            if h[0] != 0 && ring.is_irreducible(&Poly::new(h.clone(), &prime))? {
                return Self::with_modulus(p, &h);
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Defining polynomial over F_p, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut out = vec![0; self.k];
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    pub fn from_digits(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0u64, |acc, &d| acc * self.p + d)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let p = self.p;
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        for i in (self.k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..self.k {
                let t = mul_mod(c, self.modulus[j], p);
                let idx = i - self.k + j;
                prod[idx] = (prod[idx] + p - t) % p;
            }
            prod[i] = 0;
        }
        self.from_digits(&prod[..self.k])
    }

    fn build_tables(&self) -> Result<LogTables> {
        let group = self.q - 1;
        let fac = arith::factorize(group)?;
        let slow_pow = |a: u64, mut e: u64| {
            let (mut base, mut acc) = (a, 1u64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul_slow(acc, base);
                }
                base = self.mul_slow(base, base);
                e >>= 1;
            }
            acc
        };
        let generator = (2..self.q)
            .find(|&c| fac.primes().all(|r| slow_pow(c, group / r) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(2 * group as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut cur = 1u64;
        for e in 0..group {
            exp.push(cur);
            log[cur as usize] = e as u32;
            cur = self.mul_slow(cur, generator);
        }
        exp.extend_from_within(..);
        Ok(LogTables { exp, log })
    }
}

pub(crate) fn checked_power(p: u64, e: u64) -> Result<u64> {
    let too_large = Error::FieldTooLarge { p, exponent: e };
    let n = u32::try_from(e)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .ok_or(too_large.clone())?;
    if n > MAX_ORDER {
        return Err(too_large);
    }
    Ok(n)
}

const MAX_ORDER: u64 = 1 << 63;

impl FiniteField for BaseField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> u64 {
        self.q
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        if self.k == 1 {
            let s = a + b;
            if s >= self.p { s - self.p } else { s }
        } else if self.p == 2 {
            a ^ b
        } else {
            let (mut a, mut b) = (*a, *b);
            let (mut out, mut place) = (0u64, 1u64);
            for _ in 0..self.k {
                let d = (a % self.p + b % self.p) % self.p;
                out += d * place;
                place = place.wrapping_mul(self.p);
                a /= self.p;
                b /= self.p;
            }
            out
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &u64) -> u64 {
        if self.p == 2 {
            *a
        } else if self.k == 1 {
            if *a == 0 { 0 } else { self.p - a }
        } else {
            let digits: Vec<u64> = self
                .digits(*a)
                .into_iter()
                .map(|d| if d == 0 { 0 } else { self.p - d })
                .collect();
            self.from_digits(&digits)
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        if self.k == 1 {
            return mul_mod(*a, *b, self.p);
        }
        match &self.tables {
            Some(t) => t.exp[t.log[*a as usize] as usize + t.log[*b as usize] as usize],
            None => self.mul_slow(*a, *b),
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        if self.k == 1 {
            return Some(pow_mod(*a, self.p - 2, self.p));
        }
        match &self.tables {
            Some(t) => {
                let group = self.q - 1;
                Some(t.exp[((group - t.log[*a as usize] as u64) % group) as usize])
            }
            None => Some(self.pow(a, self.q - 2)),
        }
    }

    fn element(&self, index: u64) -> u64 {
        index
    }

    fn index_of(&self, a: &u64) -> u64 {
        *a
    }

    fn from_u64(&self, c: u64) -> u64 {
        c % self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = BaseField::prime(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.neg(&3), 4);
        assert_eq!(f.inv(&0), None);
        assert!(matches!(BaseField::prime(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn table_and_slow_multiplication_agree() {
        // F_9 = F_3[y]/(y^2 + 1)
        let f = BaseField::with_modulus(3, &[1, 0, 1]).unwrap();
        assert!(f.tables.is_some());
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(f.mul(&a, &b), if a == 0 || b == 0 { 0 } else { f.mul_slow(a, b) });
            }
            if a != 0 {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
            assert_eq!(f.add(&a, &f.neg(&a)), 0);
        }
        // y * y = -1
        assert_eq!(f.mul(&3, &3), 2);
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(BaseField::with_modulus(2, &[1, 0, 1]).unwrap_err(), Error::Reducible);
    }
}
