//! Character sums over sets, affine spaces and polynomial images, and
//! checkers that compare each sum against its upper bound.
//!
//! Sums are accumulated in double precision with Neumaier compensation.
//! A bound is reported as holding when `lhs <= rhs + 1e-6·terms`, where
//! `terms` is the number of summands. A report whose theorem hypothesis
//! fails is still computed but carries `hypothesis_met = false` and never
//! counts as a violation.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::affine::{affine_space_count, affine_spaces, random_affine, AffineSpace};
use crate::characters::{Character, CharacterTable};
use crate::error::{Error, Result};
use crate::ff::poly::{format_coeffs, Poly, Polys};
use crate::ff::{Element, Field, FiniteField};
use crate::rng::derive_seed;

/// Additive tolerance per summand.
pub const TOLERANCE_PER_TERM: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// `|Σ_c χ(F(c))| <= (z-1)·q^{n/2}` for F not a constant times an r-th power.
    Weil,
    /// `|Σ_{a∈A} χ(a)| <= q^{n/2}`.
    TrivialAffine,
    /// `|Σ_{a∈F_q} χ(θ+a)| <= (n-1)·√q` for θ of degree n.
    Katz,
    /// `|Σ_b Σ_{a∈A} χ(a+b)| <= Σ_d n_{A,d}·δ_{χ,d}`.
    TranslateProfile,
    /// `|Σ_b Σ_{a∈A} χ(a+b)| < n·q^{t+1/2}` when A has an element of degree n.
    TranslateUniform,
    /// `|Σ_{a∈A} χ(a)| < n·q^{t-1/2}` when some `A/y`, `y ∈ V`, meets degree n.
    AffineQuotient,
}

impl Bound {
    pub const ALL: [Bound; 6] = [
        Bound::Weil,
        Bound::TrivialAffine,
        Bound::Katz,
        Bound::TranslateProfile,
        Bound::TranslateUniform,
        Bound::AffineQuotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bound::Weil => "weil",
            Bound::TrivialAffine => "trivial_affine",
            Bound::Katz => "katz",
            Bound::TranslateProfile => "translate_profile",
            Bound::TranslateUniform => "translate_uniform",
            Bound::AffineQuotient => "affine_quotient",
        }
    }
}

/// One checked inequality instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub theorem: Bound,
    pub field: String,
    pub chi_index: u64,
    pub set: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub hypothesis_met: bool,
    pub holds: bool,
    #[serde(skip)]
    pub terms: u64,
}

impl BoundReport {
    fn new(theorem: Bound, chi: &Character<'_>, set: String, lhs: f64, rhs: f64, terms: u64, hypothesis_met: bool) -> Self {
        let holds = lhs <= rhs + TOLERANCE_PER_TERM * terms as f64;
        Self {
            theorem,
            field: chi.table().field().tag(),
            chi_index: chi.index(),
            set,
            lhs,
            rhs,
            slack: rhs - lhs,
            hypothesis_met,
            holds,
            terms,
        }
    }

    /// Hypothesis satisfied but bound exceeded.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && !self.holds
    }

    /// Sort key for canonical output order.
    pub fn context_key(&self) -> (Bound, &str, u64, &str) {
        (self.theorem, &self.field, self.chi_index, &self.set)
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    carry: Complex64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: Complex64) {
        self.sum.re = neumaier(self.sum.re, x.re, &mut self.carry.re);
        self.sum.im = neumaier(self.sum.im, x.im, &mut self.carry.im);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.carry
    }
}

fn neumaier(sum: f64, x: f64, carry: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *carry += (sum - t) + x;
    } else {
        *carry += (x - t) + sum;
    }
    t
}

/// `s(χ, S) = Σ_{s∈S} χ(s)`.
pub fn char_sum(chi: &Character<'_>, set: &[Element]) -> Complex64 {
    sum_indices(chi, set.iter().map(|a| chi.table().field().index_of(a)))
}

pub fn sum_indices(chi: &Character<'_>, indices: impl IntoIterator<Item = u64>) -> Complex64 {
    let mut acc = CompensatedSum::default();
    for i in indices {
        acc.add(chi.eval_index(i));
    }
    acc.value()
}

fn require_nontrivial(chi: &Character<'_>) -> Result<()> {
    if chi.is_trivial() {
        Err(Error::TrivialCharacter)
    } else {
        Ok(())
    }
}

fn describe_poly(f: &Poly<Element>) -> String {
    let parts: Vec<String> = f.coeffs().iter().map(|c| format_coeffs(c.coeffs())).collect();
    format!("F={}", parts.join("|"))
}

/// Weil bound for `Σ_{c∈F_{q^n}} χ(F(c))`.
pub fn weil_check(chi: &Character<'_>, poly: &Poly<Element>) -> Result<BoundReport> {
    require_nontrivial(chi)?;
    let field = chi.table().field();
    let ring = Polys::new(field);
    let r = chi.order() as usize;
    let positive = poly.degree().is_some_and(|d| d > 0);
    let hypothesis_met = positive && !ring.is_power_shape(poly, r);
    let z = if positive { ring.distinct_root_count(poly) } else { 0 };
    let lhs = sum_indices(chi, field.elements().map(|c| field.index_of(&ring.eval(poly, &c)))).norm();
    let rhs = z.saturating_sub(1) as f64 * (field.order() as f64).sqrt();
    Ok(BoundReport::new(Bound::Weil, chi, describe_poly(poly), lhs, rhs, field.order(), hypothesis_met))
}

/// `|Σ_{a∈A} χ(a)| <= q^{n/2}`.
pub fn trivial_affine_check(chi: &Character<'_>, space: &AffineSpace) -> Result<BoundReport> {
    require_nontrivial(chi)?;
    let field = chi.table().field();
    let lhs = sum_indices(chi, space.iter(field).map(|a| field.index_of(&a))).norm();
    let rhs = (field.order() as f64).sqrt();
    let hyp = space.dim() >= 1;
    Ok(BoundReport::new(Bound::TrivialAffine, chi, space.describe(), lhs, rhs, space.size(field), hyp))
}

/// `|Σ_{a∈F_q} χ(θ+a)| <= (n-1)·√q`, asserted when θ has degree n.
pub fn katz_check(chi: &Character<'_>, theta: &Element) -> Result<BoundReport> {
    require_nontrivial(chi)?;
    let field = chi.table().field();
    let base_index = field.index_of(theta);
    let lhs = sum_indices(chi, translate_indices(field, theta, base_index)).norm();
    let rhs = (field.n() as f64 - 1.0) * (field.q() as f64).sqrt();
    let hyp = field.degree_over_base(theta) == field.n();
    let set = format!("theta={}+F_q", format_coeffs(theta.coeffs()));
    Ok(BoundReport::new(Bound::Katz, chi, set, lhs, rhs, field.q(), hyp))
}

// Indices of `a + b` for `b ∈ F_q`, shifting only the constant coordinate.
fn translate_indices<'a>(field: &'a Field, a: &Element, index: u64) -> impl Iterator<Item = u64> + 'a {
    let a0 = a.coeffs()[0];
    let stem = index - a0;
    (0..field.q()).map(move |b| stem + field.base().add(&a0, &b))
}

/// `δ_{χ,d}`: q if χ is trivial on F_{q^d}, else `min(q, (d-1)√q)`.
pub fn delta_weight(chi: &Character<'_>, d: usize) -> Result<f64> {
    let q = chi.table().field().q() as f64;
    Ok(if chi.trivial_on_subfield(d)? { q } else { q.min((d as f64 - 1.0) * q.sqrt()) })
}

/// `|Σ_{b∈F_q} Σ_{a∈A} χ(a+b)|`.
pub fn translate_sum(chi: &Character<'_>, space: &AffineSpace) -> f64 {
    let field = chi.table().field();
    let mut acc = CompensatedSum::default();
    for a in space.iter(field) {
        for i in translate_indices(field, &a, field.index_of(&a)) {
            acc.add(chi.eval_index(i));
        }
    }
    acc.value().norm()
}

/// The degree-profile bound and the uniform bound on the doubly translated
/// sum, in that order.
pub fn translate_sum_check(chi: &Character<'_>, space: &AffineSpace) -> Result<(BoundReport, BoundReport)> {
    require_nontrivial(chi)?;
    let field = chi.table().field();
    let n = field.n();
    if n < 2 {
        return Err(Error::DegenerateExtension);
    }
    let lhs = translate_sum(chi, space);
    let profile = space.degree_profile(field);
    let mut rhs = 0.0;
    for (&d, &count) in &profile {
        rhs += count as f64 * delta_weight(chi, d)?;
    }
    let terms = space.size(field) * field.q();
    let q = field.q() as f64;
    let t = space.dim() as f64;
    let profile_report = BoundReport::new(Bound::TranslateProfile, chi, space.describe(), lhs, rhs, terms, true);
    let uniform_rhs = n as f64 * q.powf(t + 0.5);
    let uniform_hyp = profile[&n] > 0;
    let uniform_report =
        BoundReport::new(Bound::TranslateUniform, chi, space.describe(), lhs, uniform_rhs, terms, uniform_hyp);
    Ok((profile_report, uniform_report))
}

/// `(q^t - Δ)(n-1)√q + Δ·q` with `Δ` the number of elements of A of degree
/// below n: the intermediate bound between the profile bound and the
/// uniform bound.
pub fn translate_chain_bound(field: &Field, space: &AffineSpace) -> f64 {
    let profile = space.degree_profile(field);
    let n = field.n();
    let low: u64 = profile.iter().filter(|(&d, _)| d < n).map(|(_, &c)| c).sum();
    let q = field.q() as f64;
    (space.size(field) - low) as f64 * (n as f64 - 1.0) * q.sqrt() + low as f64 * q
}

/// `|Σ_{a∈A} χ(a)| < n·q^{t-1/2}` when some element of `A/y` (y ∈ V
/// nonzero) has degree n.
pub fn affine_quotient_check(chi: &Character<'_>, space: &AffineSpace) -> Result<BoundReport> {
    require_nontrivial(chi)?;
    let field = chi.table().field();
    if field.n() < 2 {
        return Err(Error::DegenerateExtension);
    }
    let lhs = sum_indices(chi, space.iter(field).map(|a| field.index_of(&a))).norm();
    let hyp = space.quotient_witness(field).is_some();
    let rhs = field.n() as f64 * (field.q() as f64).powf(space.dim() as f64 - 0.5);
    Ok(BoundReport::new(Bound::AffineQuotient, chi, space.describe(), lhs, rhs, space.size(field), hyp))
}

/// All affine-space checks for one `(χ, A)` pair.
pub fn affine_checks(chi: &Character<'_>, space: &AffineSpace) -> Result<Vec<BoundReport>> {
    let (profile, uniform) = translate_sum_check(chi, space)?;
    Ok(vec![trivial_affine_check(chi, space)?, profile, uniform, affine_quotient_check(chi, space)?])
}

/// Population selection for [`verify_bounds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Population {
    /// Every nontrivial character against every affine space, every θ,
    /// and every monic polynomial up to a small degree.
    Exhaustive { budget: u64 },
    /// `samples` seeded draws of each kind.
    Sampled { samples: u64, seed: u64 },
}

/// Largest polynomial degree used by the exhaustive Weil population.
pub const EXHAUSTIVE_WEIL_DEGREE: usize = 2;
/// Largest polynomial degree drawn by the sampled Weil population.
pub const SAMPLED_WEIL_DEGREE: usize = 4;

/// Runs every bound over the chosen population, sorted by context key.
pub fn verify_bounds(table: &CharacterTable<'_>, population: Population) -> Result<Vec<BoundReport>> {
    let field = table.field();
    if field.n() < 2 {
        return Err(Error::DegenerateExtension);
    }
    let n = field.n();
    let chars = table.group_order() - 1;
    let mut out = Vec::new();
    match population {
        Population::Exhaustive { budget } => {
            let spaces: u128 = (1..=n).map(|t| affine_space_count(field, t)).sum();
            let monic: u128 = (1..=EXHAUSTIVE_WEIL_DEGREE as u32).map(|d| (field.order() as u128).pow(d)).sum();
            let needed = chars as u128 * (spaces + field.order() as u128 + monic);
            if needed > budget as u128 {
                return Err(Error::BudgetExceeded { budget, needed: needed.min(u64::MAX as u128) as u64 });
            }
            for t in 1..=n {
                for space in affine_spaces(field, t)? {
                    for chi in table.characters().skip(1) {
                        out.extend(affine_checks(&chi, &space)?);
                    }
                }
            }
            for theta in field.elements() {
                for chi in table.characters().skip(1) {
                    out.push(katz_check(&chi, &theta)?);
                }
            }
            for d in 1..=EXHAUSTIVE_WEIL_DEGREE {
                for idx in 0..field.order().pow(d as u32) {
                    let poly = monic_poly(field, d, idx);
                    for chi in table.characters().skip(1) {
                        out.push(weil_check(&chi, &poly)?);
                    }
                }
            }
        }
        Population::Sampled { samples, seed } => {
            for i in 0..samples {
                let (k, space) = sampled_affine_pair(table, seed, i)?;
                out.extend(affine_checks(&table.character(k), &space)?);

                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, "bounds.katz", i));
                let chi = table.character(rng.random_range(1..=chars));
                let theta = field.element(rng.random_range(0..field.order()));
                out.push(katz_check(&chi, &theta)?);

                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, "bounds.weil", i));
                let chi = table.character(rng.random_range(1..=chars));
                let d = rng.random_range(1..=SAMPLED_WEIL_DEGREE);
                let poly = random_poly(field, d, &mut rng);
                out.push(weil_check(&chi, &poly)?);
            }
        }
    }
    out.sort_by(|a, b| a.context_key().cmp(&b.context_key()));
    Ok(out)
}

/// Draw `i` of the sampled population: a nontrivial character index and
/// an affine space of uniformly chosen dimension `1..=n`.
pub fn sampled_affine_pair(table: &CharacterTable<'_>, seed: u64, i: u64) -> Result<(u64, AffineSpace)> {
    let field = table.field();
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, "bounds.affine", i));
    let k = rng.random_range(1..table.group_order());
    let t = rng.random_range(1..=field.n());
    Ok((k, random_affine(field, t, rng.random())?))
}

/// The `idx`-th monic polynomial of degree `d` over F_{q^n}.
pub fn monic_poly(field: &Field, d: usize, mut idx: u64) -> Poly<Element> {
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        coeffs.push(field.element(idx % field.order()));
        idx /= field.order();
    }
    coeffs.push(field.one());
    Poly::new(coeffs, field)
}

fn random_poly<R: Rng>(field: &Field, d: usize, rng: &mut R) -> Poly<Element> {
    let mut coeffs: Vec<Element> = (0..d).map(|_| field.element(rng.random_range(0..field.order()))).collect();
    coeffs.push(field.element(rng.random_range(1..field.order())));
    Poly::new(coeffs, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::subspaces;

    fn f9() -> Field {
        Field::with_moduli(3, &[0, 1], &[1, 0, 1]).unwrap()
    }

    #[test]
    fn basic_sums() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let all: Vec<Element> = f.elements().collect();
        for chi in t.characters().skip(1) {
            assert!(char_sum(&chi, &all).norm() < 1e-6);
            assert_eq!(char_sum(&chi, &[f.zero()]), Complex64::new(0.0, 0.0));
        }
        // χ_2 is trivial on F_3.
        let chi = t.character(2);
        let s = char_sum(&chi, &[f.scalar(1), f.scalar(2)]);
        assert!((s - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn weil_examples() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let x = Poly::x(&f);
        for chi in t.characters().skip(1) {
            let r = weil_check(&chi, &x).unwrap();
            assert!(r.hypothesis_met && r.holds);
            assert_eq!(r.rhs, 0.0);
            assert!(r.lhs < 1e-9);
        }
        let quad = t.character(4);
        let square = Polys::new(&f).mul(&x, &x);
        assert!(!weil_check(&quad, &square).unwrap().hypothesis_met);
        // x(x - 1)
        let xx1 = Poly::new(vec![f.zero(), f.neg(&f.one()), f.one()], &f);
        let r = weil_check(&quad, &xx1).unwrap();
        assert!(r.hypothesis_met && r.holds);
        assert!((r.rhs - 3.0).abs() < 1e-12);
        // Oracle: direct evaluation of the quadratic character.
        let direct: f64 = f
            .elements()
            .map(|c| {
                let v = f.mul(&c, &f.sub(&c, &f.one()));
                if f.is_zero(&v) { 0.0 } else if t.dlog(&v).unwrap().is_multiple_of(2) { 1.0 } else { -1.0 }
            })
            .sum();
        assert!((r.lhs - direct.abs()).abs() < 1e-9);
        assert_eq!(weil_check(&t.character(0), &x), Err(Error::TrivialCharacter));
    }

    #[test]
    fn trivial_affine_examples() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let fq = AffineSpace::linear(&f, &[f.one()]).unwrap();
        let shifted = AffineSpace::new(&f, f.generator_x(), &[f.one()]).unwrap();
        let full = AffineSpace::full(&f);
        for chi in t.characters().skip(1) {
            for a in [&fq, &shifted, &full] {
                let r = trivial_affine_check(&chi, a).unwrap();
                assert!(r.holds, "{r:?}");
                assert_eq!(r.rhs, 3.0);
            }
            assert!(trivial_affine_check(&chi, &full).unwrap().lhs < 1e-9);
        }
    }

    #[test]
    fn katz_examples() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let theta = f.generator_x();
        // Quadratic character: values at θ, θ+1, θ+2 are those of the norms
        // 1, 2, 2 on F_3, i.e. 1, -1, -1.
        let r = katz_check(&t.character(4), &theta).unwrap();
        assert!(r.hypothesis_met && r.holds);
        assert!((r.lhs - 1.0).abs() < 1e-9);
        assert!((r.rhs - 3f64.sqrt()).abs() < 1e-12);
        let r = katz_check(&t.character(4), &f.scalar(1)).unwrap();
        assert!(!r.hypothesis_met);
        for chi in t.characters().skip(1) {
            for a in f.elements() {
                let r = katz_check(&chi, &a).unwrap();
                assert!(!r.is_violation());
            }
        }
    }

    #[test]
    fn translate_sum_examples() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let fq = AffineSpace::linear(&f, &[f.one()]).unwrap();
        let shifted = AffineSpace::new(&f, f.generator_x(), &[f.one()]).unwrap();
        for chi in t.characters().skip(1) {
            let (_, uniform) = translate_sum_check(&chi, &fq).unwrap();
            assert!(!uniform.hypothesis_met);
            let (profile, uniform) = translate_sum_check(&chi, &shifted).unwrap();
            assert!((profile.rhs - 3.0 * 3f64.sqrt()).abs() < 1e-12);
            assert!(profile.holds && uniform.holds && uniform.hypothesis_met);
        }
        assert!(translate_sum_check(&t.character(0), &fq).is_err());
    }

    #[test]
    fn affine_quotient_examples() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let theta = f.generator_x();
        let a = AffineSpace::new(&f, f.one(), std::slice::from_ref(&theta)).unwrap();
        let fq = AffineSpace::linear(&f, &[f.one()]).unwrap();
        for chi in t.characters().skip(1) {
            let r = affine_quotient_check(&chi, &a).unwrap();
            assert!(r.hypothesis_met && r.holds);
            assert!((r.rhs - 2.0 * 3f64.sqrt()).abs() < 1e-12);
            assert!(!affine_quotient_check(&chi, &fq).unwrap().hypothesis_met);
            // |s(χ, cA)| = |s(χ, A)|
            for c in f.elements().filter(|c| !f.is_zero(c)) {
                let scaled = a.scaled(&f, &c);
                let r2 = affine_quotient_check(&chi, &scaled).unwrap();
                assert!((r.lhs - r2.lhs).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn decomposition_identity() {
        // For A ⊇ F_q-direction: A = F_q ⊕ B and Σ_A χ = Σ_b Σ_B χ(a+b).
        let f = Field::build(5, 1, 2, 1).unwrap();
        let t = CharacterTable::build(&f, 2).unwrap();
        for i in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(i);
            let chi = t.character(rng.random_range(1..24));
            let b = AffineSpace::new(&f, f.element(rng.random_range(0..25)), &[f.generator_x()]).unwrap();
            let mut vectors = b.basis().to_vec();
            vectors.push(f.one());
            let a = AffineSpace::new(&f, b.translation().clone(), &vectors).unwrap();
            let lhs = char_sum(&chi, &a.enumerate(&f)).norm();
            assert!((lhs - translate_sum(&chi, &b)).abs() < 1e-9);
        }
    }

    #[test]
    fn sums_are_invariant_under_scaling() {
        let f = Field::build(7, 1, 2, 3).unwrap();
        let t = CharacterTable::build(&f, 4).unwrap();
        for i in 0..100u64 {
            let (k, a) = sampled_affine_pair(&t, 17, i).unwrap();
            let chi = t.character(k);
            let mut rng = ChaCha8Rng::seed_from_u64(i);
            let y = f.element(rng.random_range(1..f.order()));
            let scaled = a.scaled(&f, &f.inv(&y).unwrap());
            let lhs = char_sum(&chi, &a.enumerate(&f)).norm();
            let rhs = char_sum(&chi, &scaled.enumerate(&f)).norm();
            assert!((lhs - rhs).abs() < 1e-9, "{i}");
        }
    }

    #[test]
    fn chain_bound_dominates_translate_sum() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        for dim in 1..=2 {
            for v in subspaces(&f, dim).unwrap() {
                for a in affine_spaces(&f, dim).unwrap().filter(|a| a.direction(&f) == v) {
                    let chain = translate_chain_bound(&f, &a);
                    for chi in t.characters().skip(1) {
                        let (profile, _) = translate_sum_check(&chi, &a).unwrap();
                        assert!(profile.lhs <= chain + 1e-6 * profile.terms as f64);
                        assert!(profile.rhs <= chain + 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn exhaustive_population_has_no_violations() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let reports = verify_bounds(&t, Population::Exhaustive { budget: 1_000_000 }).unwrap();
        assert!(reports.iter().all(|r| !r.is_violation()));
        for b in Bound::ALL {
            assert!(reports.iter().any(|r| r.theorem == b && r.hypothesis_met), "{b:?}");
        }
        assert!(matches!(
            verify_bounds(&t, Population::Exhaustive { budget: 10 }),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let f = f9();
        let t = CharacterTable::build(&f, 0).unwrap();
        let r = katz_check(&t.character(1), &f.generator_x()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let keys = ["theorem", "field", "chi_index", "set", "lhs", "rhs", "slack", "hypothesis_met", "holds"];
        let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\":")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v.as_object().unwrap().len(), keys.len());
        assert_eq!(v["field"], "3^1^2");
        assert_eq!(v["theorem"], "katz");
    }
}
