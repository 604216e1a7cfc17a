//! Truncated polynomials in the power sums `p_1, p_2, ...` with exact
//! rational coefficients.
//!
//! A [`PowerSumPoly`] is a sparse map from partitions `λ` to coefficients of
//! `p_λ = p_{λ_1} p_{λ_2} ...`, together with a truncation degree `N`: no term
//! of weight above `N` is ever stored. This is the carrier for cycle-index
//! series `Z_F`, Pólya cycle-index polynomials `Z(A)` and everything built
//! from them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Exact rational coefficient.
pub type Rational = BigRational;

/// Truncation degree used when nothing else is specified.
pub const DEFAULT_TRUNCATION: u32 = 16;

/// Shorthand for `num / den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PolyJson", try_from = "PolyJson")]
pub struct PowerSumPoly {
    terms: BTreeMap<Partition, Rational>,
    truncation: u32,
}

impl PowerSumPoly {
    pub fn zero(truncation: u32) -> Self {
        PowerSumPoly {
            terms: BTreeMap::new(),
            truncation,
        }
    }

    pub fn one(truncation: u32) -> Self {
        Self::monomial(Partition::empty(), Rational::one(), truncation)
    }

    /// The power sum `p_k`.
    pub fn p(k: u32, truncation: u32) -> Self {
        Self::monomial(Partition::single(k), Rational::one(), truncation)
    }

    /// `coeff · p_λ`, or zero when `λ` is heavier than the truncation.
    pub fn monomial(lambda: Partition, coeff: Rational, truncation: u32) -> Self {
        let mut out = Self::zero(truncation);
        out.add_term(lambda, coeff);
        out
    }

    /// Sums the given terms, dropping zeros and anything above `truncation`.
    pub fn from_terms<I>(terms: I, truncation: u32) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut out = Self::zero(truncation);
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Terms in canonical order: ascending weight, then reverse-lex.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    /// Adds `c · p_λ` in place.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || lambda.weight() > self.truncation as u64 {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The degree-`n` part.
    pub fn slice(&self, n: u64) -> PowerSumPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(l, _)| l.weight() == n)
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        PowerSumPoly {
            terms,
            truncation: self.truncation,
        }
    }

    /// Distinct weights of the stored terms, ascending.
    pub fn weights(&self) -> Vec<u64> {
        let mut w: Vec<u64> = self.terms.keys().map(Partition::weight).collect();
        w.dedup();
        w
    }

    /// `Some(n)` when every term has weight `n`; `None` for zero or mixed.
    pub fn homogeneous_weight(&self) -> Option<u64> {
        match self.weights().as_slice() {
            [w] => Some(*w),
            _ => None,
        }
    }

    /// Same terms under a (possibly smaller or larger) truncation degree.
    pub fn with_truncation(&self, truncation: u32) -> PowerSumPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(l, _)| l.weight() <= truncation as u64)
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        PowerSumPoly { terms, truncation }
    }

    pub fn scale(&self, c: &Rational) -> PowerSumPoly {
        if c.is_zero() {
            return Self::zero(self.truncation);
        }
        PowerSumPoly {
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
            truncation: self.truncation,
        }
    }

    /// Substitutes `p_i ↦ p_{ik}` in every monomial.
    pub fn plethysm_pk(&self, k: u32) -> PowerSumPoly {
        assert!(k >= 1, "plethysm by p_0 is undefined");
        let terms = self.terms.iter().map(|(l, c)| (l.scaled(k), c.clone()));
        Self::from_terms(terms, self.truncation)
    }

    /// `log f` for `f` with constant term 1.
    ///
    /// Computed degree by degree from `f · D(log f) = D(f)`, where `D` is the
    /// derivation `p_λ ↦ |λ| p_λ`; this agrees with the alternating expansion
    /// `Σ (-1)^{j+1} (f-1)^j / j` up to the truncation.
    pub fn log_series(&self) -> Result<PowerSumPoly> {
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: c0.to_string(),
            });
        }
        let n_max = self.truncation as usize;
        let f = self.graded_slices();
        let mut g: Vec<PowerSumPoly> = vec![Self::zero(self.truncation); n_max + 1];
        for n in 1..=n_max {
            let mut acc = f[n].scale(&Rational::from_integer(n.into()));
            for j in 1..n {
                if g[j].is_zero() || f[n - j].is_zero() {
                    continue;
                }
                let prod = f[n - j].mul_ref(&g[j]);
                acc = &acc - &prod.scale(&Rational::from_integer(j.into()));
            }
            g[n] = acc.scale(&Rational::new(BigInt::one(), BigInt::from(n)));
        }
        Ok(Self::sum_slices(g, self.truncation))
    }

    /// `exp f` for `f` with constant term 0, via `D(exp f) = exp f · D(f)`.
    pub fn exp_series(&self) -> Result<PowerSumPoly> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0".into(),
                found: c0.to_string(),
            });
        }
        let n_max = self.truncation as usize;
        let g = self.graded_slices();
        let mut h: Vec<PowerSumPoly> = vec![Self::zero(self.truncation); n_max + 1];
        h[0] = Self::one(self.truncation);
        for n in 1..=n_max {
            let mut acc = Self::zero(self.truncation);
            for j in 1..=n {
                if g[j].is_zero() || h[n - j].is_zero() {
                    continue;
                }
                let prod = g[j].mul_ref(&h[n - j]);
                acc += prod.scale(&Rational::from_integer(j.into()));
            }
            h[n] = acc.scale(&Rational::new(BigInt::one(), BigInt::from(n)));
        }
        Ok(Self::sum_slices(h, self.truncation))
    }

    fn graded_slices(&self) -> Vec<PowerSumPoly> {
        let mut out = vec![Self::zero(self.truncation); self.truncation as usize + 1];
        for (l, c) in &self.terms {
            out[l.weight() as usize].terms.insert(l.clone(), c.clone());
        }
        out
    }

    fn sum_slices(slices: Vec<PowerSumPoly>, truncation: u32) -> PowerSumPoly {
        let mut terms = BTreeMap::new();
        for s in slices {
            terms.extend(s.terms);
        }
        PowerSumPoly { terms, truncation }
    }

    /// Ordinary product; `p_λ p_μ = p_{λ∪μ}`.
    fn mul_ref(&self, other: &PowerSumPoly) -> PowerSumPoly {
        let truncation = self.truncation.min(other.truncation);
        let cap = truncation as u64;
        let mut out = Self::zero(truncation);
        for (l, a) in &self.terms {
            let wl = l.weight();
            if wl > cap {
                break;
            }
            for (m, b) in &other.terms {
                if wl + m.weight() > cap {
                    break;
                }
                out.add_term(l.union(m), a * b);
            }
        }
        out
    }

    /// The arithmetic product `⊠`: bilinear, with `p_λ ⊠ p_μ = p_ν` where
    /// `c_k(ν) = Σ_{lcm(i,j)=k} gcd(i,j) c_i(λ) c_j(μ)`.
    ///
    /// A weight-0 term acts as a scalar multiplier.
    pub fn boxtimes(&self, other: &PowerSumPoly) -> PowerSumPoly {
        let truncation = self.truncation.min(other.truncation);
        let cap = truncation as u64;
        let mut out = Self::zero(truncation);
        for (l, a) in &self.terms {
            let wl = l.weight();
            if wl > cap {
                break;
            }
            for (m, b) in &other.terms {
                let wm = m.weight();
                if wl.max(1) * wm.max(1) > cap {
                    break;
                }
                let nu = match (l.is_empty(), m.is_empty()) {
                    (true, _) => m.clone(),
                    (_, true) => l.clone(),
                    _ => boxtimes_partitions(l, m),
                };
                out.add_term(nu, a * b);
            }
        }
        out
    }

    /// Coefficients of the exponential generating series `Z(x, 0, 0, ...)`,
    /// indexed `0..=N`.
    pub fn egs_coeffs(&self) -> Vec<Rational> {
        (0..=self.truncation)
            .map(|n| self.coeff(&Partition::ones(n)))
            .collect()
    }

    /// Coefficients of the type generating series `Z(x, x², x³, ...)`,
    /// indexed `0..=N`.
    pub fn tgs_coeffs(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.truncation as usize + 1];
        for (l, c) in &self.terms {
            out[l.weight() as usize] += c;
        }
        out
    }
}

/// Index of `p_λ ⊠ p_μ` for nonempty `λ`, `μ`.
pub fn boxtimes_partitions(lambda: &Partition, mu: &Partition) -> Partition {
    let mut mults: BTreeMap<u32, u64> = BTreeMap::new();
    for (&i, &ci) in &lambda.multiplicities() {
        for (&j, &cj) in &mu.multiplicities() {
            let (g, l) = i.gcd_lcm(&j);
            *mults.entry(l).or_insert(0) += g as u64 * ci * cj;
        }
    }
    Partition::from_multiplicities(mults)
}

impl Add for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn add(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        let mut out = self.with_truncation(self.truncation.min(rhs.truncation));
        out += rhs.clone();
        out
    }
}

impl Add for PowerSumPoly {
    type Output = PowerSumPoly;
    fn add(self, rhs: PowerSumPoly) -> PowerSumPoly {
        &self + &rhs
    }
}

impl AddAssign for PowerSumPoly {
    fn add_assign(&mut self, rhs: PowerSumPoly) {
        if rhs.truncation < self.truncation {
            *self = self.with_truncation(rhs.truncation);
        }
        for (l, c) in rhs.terms {
            self.add_term(l, c);
        }
    }
}

impl Neg for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn neg(self) -> PowerSumPoly {
        PowerSumPoly {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
            truncation: self.truncation,
        }
    }
}

impl Sub for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn sub(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        self + &(-rhs)
    }
}

impl Sub for PowerSumPoly {
    type Output = PowerSumPoly;
    fn sub(self, rhs: PowerSumPoly) -> PowerSumPoly {
        &self - &rhs
    }
}

impl Mul for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn mul(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        self.mul_ref(rhs)
    }
}

impl Mul for PowerSumPoly {
    type Output = PowerSumPoly;
    fn mul(self, rhs: PowerSumPoly) -> PowerSumPoly {
        self.mul_ref(&rhs)
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_monomial(lambda: &Partition) -> String {
    lambda
        .multiplicities()
        .iter()
        .map(|(i, c)| if *c == 1 { format!("p{i}") } else { format!("p{i}^{c}") })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (lambda, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if lambda.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", fmt_monomial(lambda))?;
            } else {
                write!(f, "{} {}", fmt_rational(&abs), fmt_monomial(lambda))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[N={}] {}", self.truncation, self)
    }
}

/// Wire form: `{ "truncation": N, "terms": [ { "partition": [..], "num": "..", "den": ".." } ] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub truncation: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl From<PowerSumPoly> for PolyJson {
    fn from(poly: PowerSumPoly) -> Self {
        PolyJson {
            truncation: poly.truncation,
            terms: poly
                .terms
                .into_iter()
                .map(|(l, c)| TermJson {
                    partition: l.parts().to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for PowerSumPoly {
    type Error = Error;

    fn try_from(json: PolyJson) -> Result<Self> {
        let mut out = PowerSumPoly::zero(json.truncation);
        for t in json.terms {
            let lambda = Partition::new(t.partition)?;
            if lambda.weight() > json.truncation as u64 {
                return Err(Error::Json(format!(
                    "term {lambda} exceeds truncation {}",
                    json.truncation
                )));
            }
            let num: BigInt = t.num.parse().map_err(|_| Error::Json(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t.den.parse().map_err(|_| Error::Json(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(Error::Json("zero denominator".into()));
            }
            out.add_term(lambda, Rational::new(num, den));
        }
        Ok(out)
    }
}
