//! Exponential composition at the cycle-index level.
//!
//! `I_k` sends a monomial `p_λ` (with `λ ⊢ n`) to `p_γ` with `γ ⊢ n^k`, the
//! cycle type of an element `(α, τ)` of an exponentiation group where `α` is
//! a single `k`-cycle and the ordered product of the `τ(i)` has type `λ`.
//! Products of operators act through `⊠`, and `Z(A) ∗ f` substitutes `I_r`
//! for every `p_r` in `Z(A)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{divisors, mobius, partitions_of, z_of, Partition};
use crate::symfunc::{PowerSumPoly, Rational, DEFAULT_TRUNCATION};

/// Hard bound on `n^k` for a single operator application.
const MAX_IMAGE_WEIGHT: u64 = 1 << 20;

/// A product `I_{r_1} I_{r_2} ⋯ I_{r_d}` of operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorMonomial {
    ks: Partition,
}

impl OperatorMonomial {
    /// The operator obtained from the monomial `p_ks` of a cycle index.
    pub fn new(ks: Partition) -> Self {
        assert!(!ks.is_empty(), "operator monomials need at least one factor");
        OperatorMonomial { ks }
    }

    pub fn subscripts(&self) -> &[u32] {
        self.ks.parts()
    }

    /// `I_{r_1}(f) ⊠ ⋯ ⊠ I_{r_d}(f)`.
    pub fn apply(&self, f: &PowerSumPoly) -> PowerSumPoly {
        let mut cache = HashMap::new();
        self.apply_cached(f, &mut cache)
    }

    fn apply_cached(&self, f: &PowerSumPoly, cache: &mut HashMap<u32, PowerSumPoly>) -> PowerSumPoly {
        let mut acc: Option<PowerSumPoly> = None;
        for &r in self.ks.parts() {
            let image = cache.entry(r).or_insert_with(|| apply_ik_linear(r, f)).clone();
            acc = Some(match acc {
                None => image,
                Some(a) => a.boxtimes(&image),
            });
        }
        acc.expect("nonempty operator monomial")
    }
}

/// Image partition of `p_λ` under `I_k`.
///
/// `c_j(γ) = (1/j) Σ_{l|j} μ(j/l) (Σ_{i | l/gcd(k,l)} i·c_i(λ))^{gcd(k,l)}`.
/// Panics if a multiplicity comes out negative or fractional, or if the
/// weight is not `n^k`; either means a bug, not bad input.
pub fn apply_ik(k: u32, lambda: &Partition) -> Partition {
    assert!(k >= 1, "I_k needs k >= 1");
    assert!(!lambda.is_empty(), "I_k is applied to monomials of positive weight");
    let n = lambda.weight();
    let total = n
        .checked_pow(k)
        .filter(|&t| t <= MAX_IMAGE_WEIGHT)
        .unwrap_or_else(|| panic!("I_{k} of a weight-{n} monomial is too large"));
    let mults = lambda.multiplicities();
    let k = k as u64;

    // Σ_{i | m} i·c_i(λ), the number of points fixed by the m-th power
    let fixed_by_power = |m: u64| -> u64 {
        mults
            .iter()
            .filter(|(&i, _)| m.is_multiple_of(i as u64))
            .map(|(&i, &c)| i as u64 * c)
            .sum()
    };

    let mut out: BTreeMap<u32, u64> = BTreeMap::new();
    let mut check = 0u64;
    for j in 1..=total {
        let mut sum = BigInt::zero();
        for l in divisors(j) {
            let mu = mobius(j / l);
            if mu == 0 {
                continue;
            }
            let g = k.gcd(&l);
            let base = BigInt::from(fixed_by_power(l / g));
            let term = num_traits::pow(base, g as usize);
            if mu > 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let (q, r) = sum.div_rem(&BigInt::from(j));
        assert!(r.is_zero(), "I_{k}({lambda}): c_{j} is not an integer");
        assert!(q >= BigInt::zero(), "I_{k}({lambda}): c_{j} is negative");
        let c: u64 = q.try_into().expect("multiplicity fits in u64");
        if c > 0 {
            out.insert(j as u32, c);
            check += j * c;
        }
    }
    assert_eq!(check, total, "I_{k}({lambda}) has the wrong weight");
    Partition::from_multiplicities(out)
}

/// `I_k` extended linearly over the terms of `f`; terms whose image would
/// exceed the truncation are dropped.
fn apply_ik_linear(k: u32, f: &PowerSumPoly) -> PowerSumPoly {
    let cap = f.truncation() as u64;
    let terms = f
        .terms()
        .filter(|(l, _)| l.weight().checked_pow(k).is_some_and(|w| w <= cap))
        .map(|(l, c)| (apply_ik(k, l), c.clone()));
    PowerSumPoly::from_terms(terms, f.truncation())
}

/// `zA ∗ f`: each monomial `c·p_{r_1}⋯p_{r_d}` of `zA` becomes
/// `c·I_{r_1}(f) ⊠ ⋯ ⊠ I_{r_d}(f)`. Linear in `zA` only.
///
/// A constant term of `zA` maps to a multiple of `p_1`, the `⊠` unit (the
/// empty operator product); this is what makes `Z(S_0) ∗ f = p_1`.
pub fn star(z_a: &PowerSumPoly, f: &PowerSumPoly) -> Result<PowerSumPoly> {
    let c0 = f.constant_term();
    if !c0.is_zero() {
        return Err(Error::ConstantTerm {
            expected: "0".into(),
            found: c0.to_string(),
        });
    }
    let truncation = f.truncation();
    let mut cache = HashMap::new();
    let mut out = PowerSumPoly::zero(truncation);
    for (r, c) in z_a.terms() {
        let image = if r.is_empty() {
            PowerSumPoly::p(1, truncation)
        } else {
            OperatorMonomial::new(r.clone()).apply_cached(f, &mut cache)
        };
        out += image.scale(c);
    }
    Ok(out)
}

/// `Z(S_k) = Σ_{λ⊢k} p_λ / z_λ`.
pub fn cycle_index_symmetric(k: u32) -> PowerSumPoly {
    let truncation = DEFAULT_TRUNCATION.max(k);
    PowerSumPoly::from_terms(
        partitions_of(k)
            .into_iter()
            .map(|l| {
                let z = z_of(&l);
                (l, Rational::new(BigInt::one(), z.into()))
            }),
        truncation,
    )
}

/// Cycle index of `E_k⟨F⟩ = F^{⊡k}/S_k` for `F` concentrated on one
/// cardinality: `p_1` for `k = 0`, otherwise `Z(S_k) ∗ Z_F`.
pub fn ek_cycle_index(k: u32, z_f: &PowerSumPoly) -> Result<PowerSumPoly> {
    if k == 0 {
        return Ok(PowerSumPoly::p(1, z_f.truncation()));
    }
    if z_f.is_zero() {
        return Ok(PowerSumPoly::zero(z_f.truncation()));
    }
    if z_f.homogeneous_weight().is_none() {
        return Err(Error::NotHomogeneous(z_f.weights()));
    }
    star(&cycle_index_symmetric(k), z_f)
}

/// Cycle index of `E⟨F⟩` for `F = Σ_n F_n`, given `Z_{F_n}` for each `n ≥ 2`:
/// the `⊠`-product over `n` of `p_1 + Σ_{k≥1, n^k ≤ N} Z(E_k⟨F_n⟩)`.
pub fn exp_composition(parts: &BTreeMap<u64, PowerSumPoly>, cap: u32) -> Result<PowerSumPoly> {
    let mut acc = PowerSumPoly::p(1, cap);
    for (&n, part) in parts {
        if n < 2 {
            return Err(Error::WeightTooSmall(n));
        }
        match part.homogeneous_weight() {
            Some(w) if w == n => {}
            None if part.is_zero() => continue,
            _ => return Err(Error::NotHomogeneous(part.weights())),
        }
        if n > cap as u64 {
            continue;
        }
        let part = part.with_truncation(cap);
        let mut factor = PowerSumPoly::p(1, cap);
        let mut k = 1u32;
        while n.pow(k) <= cap as u64 {
            factor += ek_cycle_index(k, &part)?;
            k += 1;
        }
        acc = acc.boxtimes(&factor);
    }
    Ok(acc)
}
