//! F_q-orders, k-normal elements and primitive k-normal search.
//!
//! The F_q-order `m_{α,q}` of α is the monic generator of the polynomials
//! `g` over F_q with `g∘α = Σ g_i α^{q^i} = 0`. It divides `x^n - 1`, and α
//! is k-normal exactly when it has degree `n - k`.

use serde::Serialize;

use crate::affine::{linear_kernel, AffineSpace};
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::ff::poly::{format_coeffs, Poly, Polys};
use crate::ff::{BaseField, Element, Field, FiniteField};
use crate::primitive::PrimitiveOracle;

/// Irreducible factors of `x^n - 1` over F_q with multiplicities.
pub fn factor_xn_minus_1(field: &Field) -> Vec<(Poly<u64>, usize)> {
    let base = field.base();
    Polys::new(base)
        .factor(&Poly::binomial(field.n(), &base.one(), base))
        .expect("x^n - 1 is nonzero")
}

/// A monic divisor of `x^n - 1` with its factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    pub poly: Poly<u64>,
    pub factors: Vec<(Poly<u64>, usize)>,
}

impl Divisor {
    pub fn degree(&self) -> usize {
        self.poly.degree().expect("divisors are nonzero")
    }

    /// Number of monic divisors of this polynomial.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }
}

/// The divisor lattice of `x^n - 1`, sorted by degree then coefficients.
#[derive(Debug, Clone)]
pub struct OrderContext<'f> {
    field: &'f Field,
    divisors: Vec<Divisor>,
}

impl<'f> OrderContext<'f> {
    pub fn new(field: &'f Field) -> Self {
        let base = field.base();
        let ring = Polys::new(base);
        let factors = factor_xn_minus_1(field);
        let mut divisors = vec![Divisor { poly: Poly::one(base), factors: Vec::new() }];
        for (p, e) in &factors {
            let mut next = Vec::with_capacity(divisors.len() * (e + 1));
            for d in &divisors {
                let mut poly = d.poly.clone();
                next.push(d.clone());
                for j in 1..=*e {
                    poly = ring.mul(&poly, p);
                    let mut fs = d.factors.clone();
                    fs.push((p.clone(), j));
                    next.push(Divisor { poly: poly.clone(), factors: fs });
                }
            }
            divisors = next;
        }
        divisors.sort_by(|a, b| ring.compare(&a.poly, &b.poly));
        Self { field, divisors }
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn divisors(&self) -> &[Divisor] {
        &self.divisors
    }

    pub fn find(&self, g: &Poly<u64>) -> Option<&Divisor> {
        self.divisors.iter().find(|d| &d.poly == g)
    }

    /// The first divisor (in lattice order) annihilating α. Since the
    /// annihilating divisors are the multiples of `m_{α,q}`, this is it.
    pub fn fq_order(&self, alpha: &Element) -> OrderPoly {
        let d = self
            .divisors
            .iter()
            .find(|d| self.field.is_zero(&self.field.apply_linearized(&d.poly, alpha)))
            .expect("x^n - 1 annihilates every element");
        OrderPoly { m: d.poly.clone(), k_normality: self.field.n() - d.degree() }
    }

    /// True iff `g` divides no `x^t - δ` with `1 <= t < n`, `δ ∈ F_q^*`.
    pub fn poly_free_of_binomials(&self, g: &Poly<u64>) -> bool {
        binomial_free(self.field.base(), g, self.field.n())
    }

    pub fn is_free_of_binomials(&self, alpha: &Element) -> bool {
        self.poly_free_of_binomials(&self.fq_order(alpha).m)
    }
}

fn binomial_free(base: &BaseField, g: &Poly<u64>, n: usize) -> bool {
    let ring = Polys::new(base);
    !(1..n).any(|t| (1..base.q()).any(|delta| ring.divides(g, &Poly::binomial(t, &delta, base))))
}

/// F_q-order of an element with its k-normality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderPoly {
    pub m: Poly<u64>,
    pub k_normality: usize,
}

/// `Φ_q(g) = q^{deg g}·Π_{P|g}(1 - q^{-deg P})`, the number of units of
/// `F_q[x]/(g)`, from the factorization of `g`.
pub fn phi_q(q: u64, factors: &[(Poly<u64>, usize)]) -> u64 {
    factors
        .iter()
        .map(|(p, e)| {
            let qd = q.pow(p.degree().expect("factors are nonconstant") as u32);
            qd.pow(*e as u32 - 1) * (qd - 1)
        })
        .product()
}

/// `Φ_q(g)` for any nonzero `g` over F_q.
pub fn phi_q_of(base: &BaseField, g: &Poly<u64>) -> Result<u64> {
    Ok(phi_q(base.q(), &Polys::new(base).factor(g)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub g: String,
    pub deg: usize,
    pub phi_q: u64,
    pub count: u64,
    pub free_of_binomials: bool,
    pub primitive_witness: Option<String>,
}

/// For every monic divisor `g` of `x^n - 1`, the exact number of elements
/// with F_q-order `g`, by exhaustive enumeration.
pub fn knormal_census(ctx: &OrderContext<'_>) -> Vec<CensusRow> {
    let field = ctx.field();
    let oracle = PrimitiveOracle::new(field);
    let mut counts = vec![0u64; ctx.divisors().len()];
    let mut witnesses: Vec<Option<String>> = vec![None; ctx.divisors().len()];
    for a in field.elements() {
        let m = ctx.fq_order(&a).m;
        let i = ctx.divisors().iter().position(|d| d.poly == m).expect("order is a divisor");
        counts[i] += 1;
        if witnesses[i].is_none() && oracle.is_primitive(&a) {
            witnesses[i] = Some(format_coeffs(a.coeffs()));
        }
    }
    ctx.divisors()
        .iter()
        .zip(counts)
        .zip(witnesses)
        .map(|((d, count), primitive_witness)| CensusRow {
            g: format_coeffs(d.poly.coeffs()),
            deg: d.degree(),
            phi_q: phi_q(field.q(), &d.factors),
            count,
            free_of_binomials: ctx.poly_free_of_binomials(&d.poly),
            primitive_witness,
        })
        .collect()
}

/// `V_g = {a : g∘a = 0}` as a linear space, by elimination.
pub fn kernel_space(ctx: &OrderContext<'_>, g: &Poly<u64>) -> Result<AffineSpace> {
    let field = ctx.field();
    if ctx.find(g).is_none() {
        return Err(Error::NotDivisorOfXnMinus1 { n: field.n() });
    }
    Ok(linear_kernel(field, |a| field.apply_linearized(g, a)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateRow {
    pub g: String,
    pub free_of_binomials: bool,
    /// Monic divisors of g, counted exactly.
    pub divisor_count: u64,
    /// `2^{deg g}`, the generic bound on that count.
    pub divisor_bound: u64,
    pub kernel_size: u64,
    pub primitive_with_order_g: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found { g: String, alpha: String },
    /// Every binomial-free candidate was scanned exhaustively.
    Absent,
    /// `x^n - 1` has no divisor of the required degree. The library
    /// returns [`Error::NoDivisorOfDegree`]; reports use this variant.
    NoDivisor { degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KNormalSearch {
    pub field: String,
    pub k: usize,
    pub candidates: Vec<CandidateRow>,
    pub result: SearchOutcome,
}

impl KNormalSearch {
    pub fn witness(&self) -> Option<(&str, &str)> {
        match &self.result {
            SearchOutcome::Found { g, alpha } => Some((g, alpha)),
            _ => None,
        }
    }
}

/// Searches the kernels `V_g` of the binomial-free divisors `g` of degree
/// `n - k` for a primitive element of F_q-order exactly `g`. Candidates
/// are visited in lattice order and each kernel in enumeration order; the
/// first witness is reported, but every candidate is counted in full.
pub fn primitive_knormal_search(ctx: &OrderContext<'_>, k: usize) -> Result<KNormalSearch> {
    let field = ctx.field();
    let n = field.n();
    if n < 2 || k > n - 2 {
        return Err(Error::NormalityOutOfRange { k, max: n.saturating_sub(2) });
    }
    let degree = n - k;
    let targets: Vec<&Divisor> = ctx.divisors().iter().filter(|d| d.degree() == degree).collect();
    if targets.is_empty() {
        return Err(Error::NoDivisorOfDegree { n, degree });
    }
    let oracle = PrimitiveOracle::new(field);
    let mut candidates = Vec::new();
    let mut result = SearchOutcome::Absent;
    for d in targets {
        let free = ctx.poly_free_of_binomials(&d.poly);
        let mut row = CandidateRow {
            g: format_coeffs(d.poly.coeffs()),
            free_of_binomials: free,
            divisor_count: d.divisor_count(),
            divisor_bound: 1u64 << degree.min(63),
            kernel_size: 0,
            primitive_with_order_g: 0,
        };
        if free {
            let kernel = kernel_space(ctx, &d.poly)?;
            row.kernel_size = kernel.size(field);
            for a in kernel.iter(field) {
                if oracle.is_primitive(&a) && ctx.fq_order(&a).m == d.poly {
                    row.primitive_with_order_g += 1;
                    if result == SearchOutcome::Absent {
                        result = SearchOutcome::Found { g: row.g.clone(), alpha: format_coeffs(a.coeffs()) };
                    }
                }
            }
        }
        candidates.push(row);
    }
    Ok(KNormalSearch { field: field.tag(), k, candidates, result })
}

/// Largest prime for which `p^p` fits the field size cap.
pub const ARTIN_SCHREIER_MAX_P: u64 = 13;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArtinSchreierReport {
    pub p: u64,
    pub a: u64,
    pub modulus: String,
    pub theta_order: u64,
    pub group_order: u64,
    pub theta_primitive: bool,
    pub theta_fq_order: String,
    pub order_is_square_of_x_minus_1: bool,
    pub k_normality: usize,
    /// Elements of F_p-order `(x - 1)^2`, i.e. the (p-2)-normal elements.
    pub low_normal_count: u64,
    pub low_normal_bound: u64,
}

/// Builds `F_{p^p} = F_p[x]/(x^p - x - a)` and examines `θ = x`.
pub fn artin_schreier_check(p: u64, a: u64) -> Result<ArtinSchreierReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > ARTIN_SCHREIER_MAX_P {
        return Err(Error::FieldTooLarge { p, exponent: p });
    }
    let fp = BaseField::prime(p)?;
    if a == 0 || a >= p || !is_primitive_mod(&fp, a) {
        return Err(Error::NotPrimitiveInPrimeField(a));
    }
    let mut g = vec![0u64; p as usize + 1];
    g[0] = fp.neg(&a);
    g[1] = fp.neg(&1);
    g[p as usize] = 1;
    let field = Field::over(fp, g.clone())?;
    let ctx = OrderContext::new(&field);
    let theta = field.generator_x();
    let order = ctx.fq_order(&theta);
    // (x - 1)^2 = x^2 - 2x + 1
    let square = Poly::new(vec![1, (p - 2 % p) % p, 1], field.base());
    let kernel = kernel_space(&ctx, &square)?;
    let low_normal_count = kernel.iter(&field).filter(|b| ctx.fq_order(b).m == square).count() as u64;
    let theta_order = field.order_of(&theta)?;
    Ok(ArtinSchreierReport {
        p,
        a,
        modulus: format_coeffs(&g),
        theta_order,
        group_order: field.order() - 1,
        theta_primitive: theta_order == field.order() - 1,
        theta_fq_order: format_coeffs(order.m.coeffs()),
        order_is_square_of_x_minus_1: order.m == square,
        k_normality: order.k_normality,
        low_normal_count,
        low_normal_bound: p * p,
    })
}

fn is_primitive_mod(fp: &BaseField, a: u64) -> bool {
    let p = fp.p();
    if p == 2 {
        return a == 1;
    }
    let fac = crate::arith::factorize(p - 1).expect("p - 1 >= 1");
    let ok = fac.primes().all(|r| fp.pow(&a, (p - 1) / r) != 1);
    ok
}

/// Smallest primitive element of F_p.
pub fn smallest_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let fp = BaseField::prime(p)?;
    Ok((1..p).find(|&a| is_primitive_mod(&fp, a)).expect("F_p^* is cyclic"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FqpRow {
    pub k: usize,
    pub g: String,
    pub kernel_size: u64,
    pub primitive_with_order_g: u64,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FqpScan {
    pub field: String,
    pub q: u64,
    pub p: u64,
    pub rows: Vec<FqpRow>,
}

/// Primitive k-normal search in `F_{q^p}` for every `0 <= k <= p - 2`,
/// where `q` is a power of the prime `p` and so `x^p - 1 = (x - 1)^p`.
pub fn fqp_knormal_scan(q: u64, p: u64, seed: u64) -> Result<FqpScan> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut k = 0usize;
    let mut rest = q;
    while rest > 1 && rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest != 1 || k == 0 {
        return Err(Error::NotCharacteristicPower { q, p });
    }
    let field = Field::build(p, k, p as usize, seed)?;
    let ctx = OrderContext::new(&field);
    let mut rows = Vec::new();
    for kk in 0..=(p as usize - 2) {
        let search = primitive_knormal_search(&ctx, kk)?;
        let cand = &search.candidates[0];
        rows.push(FqpRow {
            k: kk,
            g: cand.g.clone(),
            kernel_size: cand.kernel_size,
            primitive_with_order_g: cand.primitive_with_order_g,
            witness: search.witness().map(|(_, a)| a.to_string()),
        });
    }
    Ok(FqpScan { field: field.tag(), q, p, rows })
}
