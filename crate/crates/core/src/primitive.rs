//! Primitive elements in affine spaces: the character-sum indicator, exact
//! counts against the sieve lower bound, the two-condition
//! characterization, the translate property, primitive-free subspaces and
//! primitive elements with prescribed digits.
//!
//! Exact counts always come from the order test; the character-sum
//! indicator is only used to cross-check it.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::affine::{affine_space_count, affine_spaces, gaussian_binomial, random_affine, subfield, subspaces, AffineSpace};
use crate::arith;
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::ff::poly::format_coeffs;
use crate::ff::{Element, Field, FiniteField};
use crate::rng::derive_seed;
use crate::sums::CompensatedSum;

/// Above this order primitivity is tested per element instead of cached.
const CACHE_LIMIT: u64 = 1 << 22;

/// Primitivity lookup by element index, cached for small fields.
pub struct PrimitiveOracle<'f> {
    field: &'f Field,
    cache: Option<Vec<bool>>,
}

impl<'f> PrimitiveOracle<'f> {
    pub fn new(field: &'f Field) -> Self {
        let cache = (field.order() <= CACHE_LIMIT).then(|| field.elements().map(|a| field.is_primitive(&a)).collect());
        Self { field, cache }
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn is_primitive(&self, a: &Element) -> bool {
        match &self.cache {
            Some(c) => c[self.field.index_of(a) as usize],
            None => self.field.is_primitive(a),
        }
    }

    pub fn count(&self, space: &AffineSpace) -> u64 {
        space.iter(self.field).filter(|a| self.is_primitive(a)).count() as u64
    }

    pub fn first(&self, space: &AffineSpace) -> Option<Element> {
        space.iter(self.field).find(|a| self.is_primitive(a))
    }
}

/// `(φ(N-1)/(N-1))·Σ_{d | N-1} (μ(d)/φ(d))·Σ_{χ∈Λ(d)} χ(a)`, unrounded.
/// Equals 1 on primitive elements and 0 elsewhere.
pub fn primitive_indicator(table: &CharacterTable<'_>, a: &Element) -> Result<f64> {
    let m = table.group_order();
    let fac = table.field().group_factorization();
    if table.field().is_zero(a) {
        return Ok(0.0);
    }
    let mut outer = CompensatedSum::default();
    for d in fac.divisors() {
        let mu = arith::moebius(d)?;
        if mu == 0 {
            continue;
        }
        let mut inner = CompensatedSum::default();
        for chi in table.lambda_set(d)? {
            inner.add(chi.eval(a));
        }
        outer.add(inner.value() * (mu as f64 / arith::euler_phi(d)? as f64));
    }
    Ok(outer.value().re * fac.euler_phi() as f64 / m as f64)
}

/// `q^t·(φ(N-1)/(N-1))·(1 - n·W(N-1)/√q)`.
pub fn sieve_bound(field: &Field, t: usize) -> f64 {
    let fac = field.group_factorization();
    let q = field.q() as f64;
    let density = fac.euler_phi() as f64 / fac.value as f64;
    let w = fac.squarefree_divisor_count() as f64;
    q.powi(t as i32) * density * (1.0 - field.n() as f64 * w / q.sqrt())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubfieldWitness {
    pub d: usize,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientWitness {
    pub y: String,
    pub z: String,
}

/// Exact primitive count of one affine space with both characterization
/// conditions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrimitiveScanResult {
    pub field: String,
    pub space: String,
    pub dim: usize,
    pub exact_count: u64,
    pub sieve_bound: f64,
    /// Some primitive `y ∈ A` with `A ⊆ y·F_{q^d}`, `d` a proper divisor of n.
    pub condition_i: bool,
    pub condition_i_witness: Option<SubfieldWitness>,
    /// Some nonzero `y ∈ A`, `z ∈ V` with `F_q(y/z) = F_{q^n}`. This is also
    /// the hypothesis of the sieve bound.
    pub condition_ii: bool,
    pub condition_ii_witness: Option<QuotientWitness>,
    pub contains_primitive: bool,
}

impl PrimitiveScanResult {
    /// `P(A) > sieve_bound` whenever the sieve hypothesis holds.
    pub fn sieve_holds(&self) -> bool {
        !self.condition_ii || self.exact_count as f64 > self.sieve_bound
    }

    /// A primitive element is present but neither condition holds.
    pub fn is_necessity_violation(&self) -> bool {
        self.contains_primitive && !self.condition_i && !self.condition_ii
    }

    /// A condition holds but no primitive element is present.
    pub fn is_sufficiency_violation(&self) -> bool {
        !self.contains_primitive && (self.condition_i || self.condition_ii)
    }
}

pub fn count_primitive(oracle: &PrimitiveOracle<'_>, space: &AffineSpace) -> PrimitiveScanResult {
    let field = oracle.field();
    let primitives: Vec<Element> = space.iter(field).filter(|a| oracle.is_primitive(a)).collect();
    let condition_i_witness = primitives.iter().find_map(|y| {
        space.subfield_cover(field, y).map(|d| SubfieldWitness { d, y: format_coeffs(y.coeffs()) })
    });
    let condition_ii_witness = space
        .quotient_witness(field)
        .map(|(y, z)| QuotientWitness { y: format_coeffs(y.coeffs()), z: format_coeffs(z.coeffs()) });
    PrimitiveScanResult {
        field: field.tag(),
        space: space.describe(),
        dim: space.dim(),
        exact_count: primitives.len() as u64,
        sieve_bound: sieve_bound(field, space.dim()),
        condition_i: condition_i_witness.is_some(),
        condition_i_witness,
        condition_ii: condition_ii_witness.is_some(),
        condition_ii_witness,
        contains_primitive: !primitives.is_empty(),
    }
}

/// Which affine spaces a scan visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceSelection {
    /// Every affine space of each listed dimension, if their number fits
    /// the budget.
    Exhaustive { budget: u64 },
    /// `samples` seeded spaces, cycling through the listed dimensions.
    Sampled { samples: u64, seed: u64 },
}

/// Spaces chosen by `selection`, in canonical order.
pub fn select_spaces(field: &Field, dims: &[usize], selection: SpaceSelection) -> Result<Vec<AffineSpace>> {
    for &t in dims {
        if t == 0 {
            return Err(Error::EmptySpan);
        }
        if t > field.n() {
            return Err(Error::DimensionTooLarge { dim: t, n: field.n() });
        }
    }
    let mut out = Vec::new();
    match selection {
        SpaceSelection::Exhaustive { budget } => {
            let needed: u128 = dims.iter().map(|&t| affine_space_count(field, t)).sum();
            if needed > budget as u128 {
                return Err(Error::BudgetExceeded { budget, needed: needed.min(u64::MAX as u128) as u64 });
            }
            for &t in dims {
                out.extend(affine_spaces(field, t)?);
            }
        }
        SpaceSelection::Sampled { samples, seed } => {
            if dims.is_empty() {
                return Ok(out);
            }
            for i in 0..samples {
                let t = dims[(i % dims.len() as u64) as usize];
                out.push(random_affine(field, t, derive_seed(seed, "scan.affine", i))?);
            }
        }
    }
    Ok(out)
}

/// Results of a characterization scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacterizationScan {
    pub results: Vec<PrimitiveScanResult>,
    /// Spaces with a primitive element but neither condition.
    pub necessity_violations: Vec<String>,
    /// Spaces satisfying a condition without a primitive element. Expected
    /// for small q; recorded as data.
    pub sufficiency_violations: Vec<String>,
    /// Spaces where the sieve bound fails under its hypothesis.
    pub sieve_failures: Vec<String>,
}

pub fn characterization_scan(field: &Field, dims: &[usize], selection: SpaceSelection) -> Result<CharacterizationScan> {
    let oracle = PrimitiveOracle::new(field);
    let mut results: Vec<PrimitiveScanResult> =
        select_spaces(field, dims, selection)?.iter().map(|a| count_primitive(&oracle, a)).collect();
    results.sort_by(|a, b| (a.dim, &a.space).cmp(&(b.dim, &b.space)));
    let pick = |f: fn(&PrimitiveScanResult) -> bool| results.iter().filter(|r| f(r)).map(|r| r.space.clone()).collect();
    Ok(CharacterizationScan {
        necessity_violations: pick(PrimitiveScanResult::is_necessity_violation),
        sufficiency_violations: pick(PrimitiveScanResult::is_sufficiency_violation),
        sieve_failures: pick(|r| !r.sieve_holds()),
        results,
    })
}

/// Which degree-n elements the translate check visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementSelection {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslateReport {
    pub field: String,
    pub checked: u64,
    /// θ of degree n with no primitive element in `θ + F_q`.
    pub failures: Vec<String>,
}

pub fn translate_check(field: &Field, selection: ElementSelection) -> Result<TranslateReport> {
    let oracle = PrimitiveOracle::new(field);
    let thetas: Vec<Element> = match selection {
        ElementSelection::Exhaustive => field.elements().filter(|a| field.has_full_degree(a)).collect(),
        ElementSelection::Sampled { samples, seed } => {
            use rand::{Rng, SeedableRng};
            let mut out = Vec::new();
            let mut i = 0u64;
            while (out.len() as u64) < samples {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(derive_seed(seed, "scan.translate", i));
                i += 1;
                let a = field.element(rng.random_range(0..field.order()));
                if field.has_full_degree(&a) {
                    out.push(a);
                }
            }
            out
        }
    };
    let mut failures = Vec::new();
    for theta in &thetas {
        let found = (0..field.q()).any(|b| oracle.is_primitive(&field.add(theta, &field.scalar(b))));
        if !found {
            failures.push(format_coeffs(theta.coeffs()));
        }
    }
    failures.sort();
    failures.dedup();
    Ok(TranslateReport { field: field.tag(), checked: thetas.len() as u64, failures })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrassmannLayer {
    pub dim: usize,
    pub subspaces: u64,
    pub primitive_free: u64,
    pub witness: Option<String>,
}

/// The largest dimension of a primitive-free subspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrassmannResult {
    pub field: String,
    pub n: usize,
    pub q: u64,
    /// `n / p_n` with `p_n` the least prime factor of n.
    pub subfield_dim: usize,
    /// The threshold when every layer fit in the budget.
    pub t: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub witness: String,
    pub matches_subfield_dim: Option<bool>,
    pub layers: Vec<GrassmannLayer>,
}

/// Scans dimensions `1..n` for primitive-free subspaces within `budget`
/// subspaces in total. Layers that do not fit are skipped and the answer
/// is bracketed.
pub fn grassmann_threshold(field: &Field, budget: u64) -> Result<GrassmannResult> {
    let n = field.n();
    if n < 2 {
        return Err(Error::DegenerateExtension);
    }
    let p_n = arith::smallest_prime_factor(n as u64)?.expect("n >= 2") as usize;
    let subfield_dim = n / p_n;
    let oracle = PrimitiveOracle::new(field);
    let mut remaining = budget as u128;
    let mut layers = Vec::new();
    let mut complete = true;
    for dim in 1..n {
        let count = gaussian_binomial(n, dim, field.q());
        if count > remaining {
            complete = false;
            continue;
        }
        remaining -= count;
        let mut free = 0u64;
        let mut witness = None;
        for v in subspaces(field, dim)? {
            if oracle.first(&v).is_none() {
                free += 1;
                witness.get_or_insert_with(|| v.describe());
            }
        }
        layers.push(GrassmannLayer { dim, subspaces: count as u64, primitive_free: free, witness });
    }
    let fallback = subfield(field, subfield_dim)?.describe();
    let best = layers.iter().filter(|l| l.primitive_free > 0).map(|l| l.dim).max();
    let lower = best.unwrap_or(0).max(subfield_dim);
    // Existence is monotone in the dimension: subspaces of a primitive-free
    // space are primitive-free.
    let upper = layers
        .iter()
        .filter(|l| l.dim > lower && l.primitive_free == 0)
        .map(|l| l.dim - 1)
        .min()
        .unwrap_or(n - 1);
    let witness = layers
        .iter()
        .find(|l| l.dim == lower)
        .and_then(|l| l.witness.clone())
        .unwrap_or(fallback);
    let t = (complete || lower == upper).then_some(lower);
    Ok(GrassmannResult {
        field: field.tag(),
        n,
        q: field.q(),
        subfield_dim,
        t,
        lower,
        upper,
        witness,
        matches_subfield_dim: t.map(|t| t == subfield_dim),
        layers,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitResult {
    pub field: String,
    pub prescribed: usize,
    /// The set of elements with the prescribed digits.
    pub space: String,
    pub primitive_count: u64,
    pub witness: Option<String>,
}

/// Looks for a primitive element whose digits in `basis` take the value
/// `prescription[i]` at each position `i` (0-based).
pub fn digit_search(field: &Field, basis: &[Element], prescription: &BTreeMap<usize, u64>) -> Result<DigitResult> {
    let n = field.n();
    if basis.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: basis.len() });
    }
    if AffineSpace::linear(field, basis)?.dim() != n {
        return Err(Error::DependentBasis);
    }
    let mut u = field.zero();
    for (&pos, &value) in prescription {
        if pos >= n {
            return Err(Error::PositionOutOfRange { position: pos, n });
        }
        if value >= field.q() {
            return Err(Error::CoefficientOutOfRange { value, order: field.q() });
        }
        u = field.add(&u, &field.mul(&field.scalar(value), &basis[pos]));
    }
    let free: Vec<Element> = (0..n).filter(|i| !prescription.contains_key(i)).map(|i| basis[i].clone()).collect();
    let oracle = PrimitiveOracle::new(field);
    let (space, count, witness) = if free.is_empty() {
        // Every digit fixed: a single element.
        let hit = oracle.is_primitive(&u);
        (format!("u={};V=", format_coeffs(u.coeffs())), hit as u64, hit.then(|| u.clone()))
    } else {
        let a = AffineSpace::new(field, u, &free)?;
        (a.describe(), oracle.count(&a), oracle.first(&a))
    };
    Ok(DigitResult {
        field: field.tag(),
        prescribed: prescription.len(),
        space,
        primitive_count: count,
        witness: witness.map(|w| format_coeffs(w.coeffs())),
    })
}

/// A basis starting with a basis of `F_{q^{n/p_n}}` and the prescription
/// zeroing every later digit, under which no primitive element exists.
pub fn digit_sharpness_example(field: &Field) -> Result<(Vec<Element>, BTreeMap<usize, u64>)> {
    let n = field.n();
    if n < 2 {
        return Err(Error::DegenerateExtension);
    }
    let p_n = arith::smallest_prime_factor(n as u64)?.expect("n >= 2") as usize;
    let sub = subfield(field, n / p_n)?;
    let basis = crate::affine::extend_to_basis(field, sub.basis());
    let prescription = (n / p_n..n).map(|i| (i, 0)).collect();
    Ok((basis, prescription))
}
