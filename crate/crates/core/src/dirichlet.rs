//! Formal Dirichlet series with exact rational coefficients, truncated at a
//! cap `N`.
//!
//! Two flavors share one implementation:
//!
//! * [`DirichletEGF`] stores `a_n` for `Σ a_n / (n! n^s)`; the product has
//!   `c_n = Σ_{k|n} n!/(k! (n/k)!) a_k b_{n/k}`. With `a_n = |F[n]|` this is
//!   the generating function that is multiplicative over `⊡`.
//! * [`DirichletOGF`] stores `a_n` for `Σ a_n / n^s` with plain Dirichlet
//!   convolution.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::marker::PhantomData;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::symfunc::Rational;

/// Default cap for Dirichlet series.
pub const DEFAULT_CAP: u64 = 16;

pub trait Flavor: Copy + Default + fmt::Debug + PartialEq + Eq {
    const NAME: &'static str;

    /// Integer weight on `a_k b_{n/k}` in the coefficient of `n`.
    fn weight(n: u64, k: u64, factorials: &[BigInt]) -> BigInt;

    fn needs_factorials() -> bool;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Exponential;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Ordinary;

impl Flavor for Exponential {
    const NAME: &'static str = "exponential";

    fn weight(n: u64, k: u64, fact: &[BigInt]) -> BigInt {
        &fact[n as usize] / (&fact[k as usize] * &fact[(n / k) as usize])
    }

    fn needs_factorials() -> bool {
        true
    }
}

impl Flavor for Ordinary {
    const NAME: &'static str = "ordinary";

    fn weight(_: u64, _: u64, _: &[BigInt]) -> BigInt {
        BigInt::one()
    }

    fn needs_factorials() -> bool {
        false
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DirichletSeries<F: Flavor> {
    coeffs: BTreeMap<u64, Rational>,
    cap: u64,
    flavor: PhantomData<F>,
}

pub type DirichletEGF = DirichletSeries<Exponential>;
pub type DirichletOGF = DirichletSeries<Ordinary>;

impl<F: Flavor> DirichletSeries<F> {
    pub fn zero(cap: u64) -> Self {
        DirichletSeries {
            coeffs: BTreeMap::new(),
            cap,
            flavor: PhantomData,
        }
    }

    /// `δ_1`, the multiplicative unit.
    pub fn one(cap: u64) -> Self {
        Self::from_coeffs([(1, Rational::one())], cap)
    }

    /// Sums the given `(n, a_n)` pairs; indices above `cap` and zeros are dropped.
    pub fn from_coeffs<I>(coeffs: I, cap: u64) -> Self
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        let mut out = Self::zero(cap);
        for (n, a) in coeffs {
            out.add_coeff(n, a);
        }
        out
    }

    /// Series with `a_n = values[n-1]`.
    pub fn from_sequence<I, T>(values: I, cap: u64) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(
            values
                .into_iter()
                .enumerate()
                .map(|(i, v)| (i as u64 + 1, Rational::from_integer(v.into()))),
            cap,
        )
    }

    fn add_coeff(&mut self, n: u64, a: Rational) {
        assert!(n >= 1, "Dirichlet series are indexed from 1");
        if n > self.cap || a.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(n).or_insert_with(Rational::zero);
        *slot += a;
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn coeff(&self, n: u64) -> Rational {
        self.coeffs.get(&n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients in ascending index order.
    pub fn coeffs(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.coeffs.iter().map(|(&n, a)| (n, a))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(&n, a)| (n, a * c)), self.cap)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let fact = if F::needs_factorials() {
            factorials(cap)
        } else {
            Vec::new()
        };
        let mut out = Self::zero(cap);
        for (&i, a) in &self.coeffs {
            if i > cap {
                break;
            }
            for (&j, b) in &other.coeffs {
                let n = i * j;
                if n > cap {
                    break;
                }
                let w = F::weight(n, i, &fact);
                out.add_coeff(n, a * b * Rational::from_integer(w));
            }
        }
        out
    }

    /// `Σ_k a^k / k!`; needs `a_1 = 0` so that each power at least doubles
    /// the smallest index.
    pub fn exp(&self) -> Result<Self> {
        let a1 = self.coeff(1);
        if !a1.is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0".into(),
                found: a1.to_string(),
            });
        }
        let mut out = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        let mut k = 1u64;
        loop {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            power = power.scale(&Rational::new(BigInt::one(), BigInt::from(k)));
            out = &out + &power;
            k += 1;
        }
        Ok(out)
    }

    /// `Σ_j (-1)^{j+1} (a - δ_1)^j / j`; needs `a_1 = 1`.
    pub fn log(&self) -> Result<Self> {
        let a1 = self.coeff(1);
        if !a1.is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: a1.to_string(),
            });
        }
        let x = self - &Self::one(self.cap);
        let mut out = Self::zero(self.cap);
        let mut power = x.clone();
        let mut j = 1i64;
        while !power.is_zero() {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            out = &out + &power.scale(&Rational::new(BigInt::from(sign), BigInt::from(j)));
            power = power.mul(&x);
            j += 1;
        }
        Ok(out)
    }

    /// `a_1, …, a_cap` as integers, failing on any fractional coefficient.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        (1..=self.cap)
            .map(|n| {
                let a = self.coeff(n);
                if a.is_integer() {
                    Ok(a.to_integer())
                } else {
                    Err(Error::NotIntegral {
                        value: a.to_string(),
                        context: format!("{} Dirichlet coefficient {n}", F::NAME),
                    })
                }
            })
            .collect()
    }

    /// Coefficient table with columns `n,numerator,denominator`, one row per
    /// index `1..=cap`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,numerator,denominator\n");
        for n in 1..=self.cap {
            let a = self.coeff(n);
            writeln!(out, "{n},{},{}", a.numer(), a.denom()).expect("writing to a String");
        }
        out
    }
}

impl<F: Flavor> Add for &DirichletSeries<F> {
    type Output = DirichletSeries<F>;
    fn add(self, rhs: &DirichletSeries<F>) -> DirichletSeries<F> {
        let cap = self.cap.min(rhs.cap);
        let mut out = DirichletSeries::zero(cap);
        for (&n, a) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            out.add_coeff(n, a.clone());
        }
        out
    }
}

impl<F: Flavor> Sub for &DirichletSeries<F> {
    type Output = DirichletSeries<F>;
    fn sub(self, rhs: &DirichletSeries<F>) -> DirichletSeries<F> {
        self + &rhs.scale(&-Rational::one())
    }
}

impl<F: Flavor> fmt::Debug for DirichletSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dirichlet[{}; N={}]{{", F::NAME, self.cap)?;
        for (i, (n, a)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}: {a}")?;
        }
        write!(f, "}}")
    }
}

/// `0!, 1!, …, n!`.
pub fn factorials(n: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for k in 1..=n {
        acc *= k;
        out.push(acc.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::mobius;
    use crate::symfunc::rat;
    use proptest::prelude::*;
    use proptest::test_runner::{Config, RngSeed};

    fn egf(pairs: &[(u64, i64)], cap: u64) -> DirichletEGF {
        DirichletEGF::from_coeffs(pairs.iter().map(|&(n, a)| (n, rat(a, 1))), cap)
    }

    #[test]
    fn egf_products() {
        let b = egf(&[(1, 3), (2, 5), (6, 7)], 16);
        assert_eq!(DirichletEGF::one(16).mul(&b), b);
        let a = egf(&[(2, 1)], 16);
        assert_eq!(a.mul(&a).coeff(4), rat(6, 1));
    }

    #[test]
    fn egf_exp_log() {
        assert_eq!(DirichletEGF::zero(16).exp().unwrap(), DirichletEGF::one(16));
        let a = egf(&[(2, 1), (3, 4)], 16);
        assert_eq!(a.exp().unwrap().log().unwrap(), a);
        assert!(egf(&[(1, 1)], 16).exp().is_err());
        assert!(egf(&[(2, 1)], 16).log().is_err());
    }

    #[test]
    fn labeled_connected_to_prime() {
        let connected: [i64; 9] = [1, 1, 4, 38, 728, 26704, 1866256, 251548592, 66296291072];
        let d = DirichletEGF::from_sequence(connected, 9);
        let primes = d.log().unwrap().integer_coeffs().unwrap();
        let expected: Vec<BigInt> = [0i64, 1, 4, 35, 728, 26464, 1866256, 251518352, 66296210432]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(primes, expected);
    }

    #[test]
    fn zeta_times_mobius_is_delta() {
        let zeta = DirichletOGF::from_coeffs((1..=100).map(|n| (n, rat(1, 1))), 100);
        let mu = DirichletOGF::from_coeffs((1..=100).map(|n| (n, rat(mobius(n) as i64, 1))), 100);
        assert_eq!(zeta.mul(&mu), DirichletOGF::one(100));
    }

    #[test]
    fn ogf_log_of_connected_counts() {
        let c = DirichletOGF::from_sequence([1, 1, 2, 6, 21, 112], 6);
        let d = c.log().unwrap();
        assert_eq!(d.coeff(4), rat(11, 2));
        assert_eq!(d.coeff(6), rat(110, 1));
        assert_eq!(d.coeff(5), rat(21, 1));
    }

    #[test]
    fn integrality_and_csv() {
        let a = DirichletOGF::from_coeffs([(1, rat(1, 1)), (2, rat(1, 2))], 3);
        assert!(matches!(a.integer_coeffs(), Err(Error::NotIntegral { .. })));
        assert_eq!(a.to_csv(), "n,numerator,denominator\n1,1,1\n2,1,2\n3,0,1\n");
    }

    fn series<F: Flavor>(first: i64) -> impl Strategy<Value = DirichletSeries<F>> {
        proptest::collection::vec((2u64..=40, -5i64..=5, 1i64..=3), 0..6).prop_map(move |v| {
            let mut s = DirichletSeries::<F>::from_coeffs(v.into_iter().map(|(n, a, b)| (n, rat(a, b))), 40);
            s.add_coeff(1, rat(first, 1));
            s
        })
    }

    fn fixed_config() -> Config {
        Config {
            cases: 48,
            rng_seed: RngSeed::Fixed(0x5eed_0002),
            failure_persistence: None,
            ..Config::default()
        }
    }

    proptest! {
        #![proptest_config(fixed_config())]

        #[test]
        fn egf_laws(a in series::<Exponential>(2), b in series::<Exponential>(-1), c in series::<Exponential>(0)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&DirichletEGF::one(40)), a.clone());
            prop_assert_eq!(c.exp().unwrap().log().unwrap(), c.clone());
        }

        #[test]
        fn ogf_laws(a in series::<Ordinary>(3), b in series::<Ordinary>(1), c in series::<Ordinary>(0)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&DirichletOGF::one(40)), a.clone());
            prop_assert_eq!(c.exp().unwrap().log().unwrap(), c.clone());
            prop_assert_eq!(b.log().unwrap().exp().unwrap(), b);
        }
    }
}
