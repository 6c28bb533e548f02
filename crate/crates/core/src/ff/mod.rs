//! Exact arithmetic in the tower F_p ⊂ F_q ⊂ F_{q^n}.
//!
//! [`BaseField`] is F_q = F_p[y]/(h) with elements stored as integer codes
//! (base-p digits of the residue). [`Field`] is F_{q^n} = F_q[x]/(g) with
//! elements stored as coefficient vectors over F_q in the basis
//! 1, x, …, x^{n-1}. Both implement [`FiniteField`], so the polynomial and
//! linear algebra code in [`poly`] and [`linalg`] works over either level.

mod base;
mod ext;
pub mod linalg;
pub mod poly;

use std::fmt::Debug;
use std::hash::Hash;

pub use base::BaseField;
pub use ext::{Element, Field, MAX_FIELD_ORDER};

/// Operations shared by every level of the tower.
pub trait FiniteField {
    type Elem: Clone + PartialEq + Eq + Hash + Debug;

    fn characteristic(&self) -> u64;
    /// Number of elements.
    fn order(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        if e == 0 {
            return self.one();
        }
        if self.is_zero(a) {
            return self.zero();
        }
        let mut exp = e % (self.order() - 1);
        if exp == 0 {
            exp = self.order() - 1;
        }
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// The unique `b` with `b^p = a`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.order() / self.characteristic())
    }

    /// Bijection `[0, order) → field`, lexicographic in base-p or base-q digits.
    fn element(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;

    /// Image of the integer `c` under `Z → F`.
    fn from_u64(&self, c: u64) -> Self::Elem;
}
