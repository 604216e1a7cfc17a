//! Counting pipelines: the cycle index of all graphs, of connected graphs and
//! of prime graphs, together with labeled and unlabeled prime counts obtained
//! through Dirichlet series.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dirichlet::{factorials, DirichletEGF, DirichletOGF};
use crate::error::{Error, Result};
use crate::expcomp::exp_composition;
use crate::partitions::{divisors, mobius, partitions_of, root_and_exponent, z_of};
use crate::symfunc::{PolyJson, PowerSumPoly, Rational};
use crate::Partition;

/// Largest degree any pipeline accepts.
pub const MAX_DEGREE: u32 = 20;

fn check_degree(n: u32) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange {
            value: n,
            min: 0,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}

/// Number of graphs on `[n]` fixed by a permutation of cycle type `λ`:
/// `2^{(Σ_{i,j} gcd(i,j) c_i c_j − Σ_k (k mod 2) c_k)/2}`.
pub fn fix_graphs(lambda: &Partition) -> BigUint {
    let mults = lambda.multiplicities();
    let mut twice: u64 = 0;
    for (&i, &ci) in &mults {
        for (&j, &cj) in &mults {
            twice += i.gcd(&j) as u64 * ci * cj;
        }
    }
    let odd: u64 = mults.iter().filter(|(k, _)| *k % 2 == 1).map(|(_, c)| c).sum();
    assert!(twice >= odd && (twice - odd).is_multiple_of(2), "non-integral exponent for {lambda}");
    BigUint::one() << ((twice - odd) / 2)
}

/// `Z_G = Σ_{n ≤ N} Σ_{λ ⊢ n} fix G[λ] p_λ / z_λ`.
pub fn cycle_index_graphs(max_degree: u32) -> Result<PowerSumPoly> {
    check_degree(max_degree)?;
    let terms: Vec<(Partition, Rational)> = (0..=max_degree)
        .into_par_iter()
        .flat_map_iter(|n| {
            partitions_of(n).into_iter().map(|l| {
                let c = Rational::new(fix_graphs(&l).into(), z_of(&l).into());
                (l, c)
            })
        })
        .collect();
    Ok(PowerSumPoly::from_terms(terms, max_degree))
}

/// `Z_{G^c} = Σ_k μ(k)/k · log(Z_G ∘ p_k)` from a given `Z_G`.
pub fn connected_from_graphs(z_graphs: &PowerSumPoly) -> Result<PowerSumPoly> {
    let max_degree = z_graphs.truncation();
    let pieces: Vec<PowerSumPoly> = (1..=max_degree)
        .into_par_iter()
        .filter(|&k| mobius(k as u64) != 0)
        .map(|k| {
            let weight = Rational::new(BigInt::from(mobius(k as u64)), BigInt::from(k));
            z_graphs.plethysm_pk(k).log_series().map(|l| l.scale(&weight))
        })
        .collect::<Result<_>>()?;
    Ok(pieces
        .into_iter()
        .fold(PowerSumPoly::zero(max_degree), |acc, p| acc + p))
}

pub fn cycle_index_connected(max_degree: u32) -> Result<PowerSumPoly> {
    connected_from_graphs(&cycle_index_graphs(max_degree)?)
}

fn integral(value: &Rational, context: impl FnOnce() -> String) -> Result<BigInt> {
    if value.is_integer() && !value.is_negative() {
        Ok(value.to_integer())
    } else {
        Err(Error::NotIntegral {
            value: value.to_string(),
            context: context(),
        })
    }
}

/// `n!` times the coefficient of `p_1^n`, for `n = 1..=N`.
pub fn labeled_counts(z: &PowerSumPoly) -> Result<Vec<BigInt>> {
    let fact = factorials(z.truncation() as u64);
    z.egs_coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| integral(&(c * Rational::from_integer(fact[n].clone())), || format!("labeled count n={n}")))
        .collect()
}

/// Sum of the coefficients of weight `n`, for `n = 1..=N`.
pub fn unlabeled_counts(z: &PowerSumPoly) -> Result<Vec<BigInt>> {
    z.tgs_coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| integral(c, || format!("unlabeled count n={n}")))
        .collect()
}

/// Labeled connected graphs on `n = 1..=N` vertices, from the logarithm of
/// `Σ 2^{C(n,2)} x^n / n!` (written as a series in `p_1`).
pub fn labeled_connected_counts(max_n: u32) -> Result<Vec<BigInt>> {
    check_degree(max_n)?;
    let fact = factorials(max_n as u64);
    let all = PowerSumPoly::from_terms(
        (0..=max_n).map(|n| {
            let count = BigInt::one() << (n as u64 * n.saturating_sub(1) as u64 / 2);
            (Partition::ones(n), Rational::new(count, fact[n as usize].clone()))
        }),
        max_n,
    );
    labeled_counts(&all.log_series()?)
}

/// Unlabeled connected graphs on `n = 1..=N` vertices as the type generating
/// series of `Z_{G^c}`.
pub fn unlabeled_connected_counts(max_n: u32) -> Result<Vec<BigInt>> {
    unlabeled_counts(&cycle_index_connected(max_n)?)
}

/// The same counts through the univariate route
/// `C̃(x) = Σ_k μ(k)/k · log G̃(x^k)`, where `G̃` counts unlabeled graphs.
pub fn unlabeled_connected_counts_univariate(max_n: u32) -> Result<Vec<BigInt>> {
    let g_tilde = cycle_index_graphs(max_n)?.tgs_coeffs();
    let series = PowerSumPoly::from_terms(
        g_tilde.into_iter().enumerate().map(|(n, c)| (Partition::ones(n as u32), c)),
        max_n,
    );
    unlabeled_counts(&connected_from_graphs(&series)?)
}

/// Labeled primes from labeled connected counts (`n = 1..`): the logarithm of
/// the exponential Dirichlet series.
pub fn labeled_primes_from_connected(connected: &[BigInt]) -> Result<Vec<BigInt>> {
    let d = DirichletEGF::from_sequence(connected.iter().cloned(), connected.len() as u64);
    let out = d.log()?.integer_coeffs()?;
    if let Some((i, v)) = out.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(Error::NotIntegral {
            value: v.to_string(),
            context: format!("labeled prime count n={} is negative", i + 1),
        });
    }
    Ok(out)
}

pub fn labeled_prime_counts(max_n: u32) -> Result<Vec<BigInt>> {
    labeled_primes_from_connected(&labeled_connected_counts(max_n)?)
}

/// `d_n`, the coefficients of the logarithm of `Σ c̃_n n^{-s}`.
pub fn log_connected_dirichlet(connected: &[BigInt]) -> Result<DirichletOGF> {
    DirichletOGF::from_sequence(connected.iter().cloned(), connected.len() as u64).log()
}

/// Unlabeled primes from unlabeled connected counts (`n = 1..`): with
/// `n = r^e`, `b_n = (1/e) Σ_{l | e} μ(e/l) · l · d_{r^l}`.
pub fn unlabeled_primes_from_connected(connected: &[BigInt]) -> Result<Vec<BigInt>> {
    let d = log_connected_dirichlet(connected)?;
    let mut out = vec![BigInt::zero()];
    for n in 2..=connected.len() as u64 {
        let (r, e) = root_and_exponent(n);
        let mut sum = Rational::zero();
        for l in divisors(e as u64) {
            let mu = mobius(e as u64 / l);
            if mu != 0 {
                let term = d.coeff(r.pow(l as u32)) * Rational::from_integer(BigInt::from(mu as i64 * l as i64));
                sum += term;
            }
        }
        let b = sum / Rational::from_integer(BigInt::from(e));
        out.push(integral(&b, || format!("unlabeled prime count n={n}"))?);
    }
    out.truncate(connected.len());
    Ok(out)
}

pub fn unlabeled_prime_counts(max_n: u32) -> Result<Vec<BigInt>> {
    unlabeled_primes_from_connected(&unlabeled_connected_counts(max_n)?)
}

/// Homogeneous pieces `Z_{P,n}`, `2 ≤ n ≤ N`, with `E⟨P⟩ = G^c`, peeled off
/// degree by degree from `Z_{G^c}`.
pub fn prime_parts(z_connected: &PowerSumPoly) -> Result<BTreeMap<u64, PowerSumPoly>> {
    let max_degree = z_connected.truncation();
    let mut parts = BTreeMap::new();
    for n in 2..=max_degree {
        let known = exp_composition(&parts, n)?;
        let part = (z_connected.slice(n as u64) - known.slice(n as u64)).with_truncation(max_degree);
        parts.insert(n as u64, part);
    }
    let rebuilt = exp_composition(&parts, max_degree)?;
    assert_eq!(
        rebuilt, *z_connected,
        "exponential composition of the prime parts does not rebuild the connected cycle index"
    );
    Ok(parts)
}

pub fn primes_from_connected(z_connected: &PowerSumPoly) -> Result<PowerSumPoly> {
    let parts = prime_parts(z_connected)?;
    Ok(parts
        .into_values()
        .fold(PowerSumPoly::zero(z_connected.truncation()), |acc, p| acc + p))
}

pub fn cycle_index_primes(max_degree: u32) -> Result<PowerSumPoly> {
    primes_from_connected(&cycle_index_connected(max_degree)?)
}

/// Every sequence and series for `n ≤ max_n`, cross-checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ReportJson", try_from = "ReportJson")]
pub struct EnumerationReport {
    pub max_n: u32,
    pub labeled_connected: Vec<BigInt>,
    pub labeled_prime: Vec<BigInt>,
    pub unlabeled_connected: Vec<BigInt>,
    pub unlabeled_prime: Vec<BigInt>,
    pub z_graphs: PowerSumPoly,
    pub z_connected: PowerSumPoly,
    pub z_primes: PowerSumPoly,
}

fn cross_check(name: &str, a: &[BigInt], b: &[BigInt]) -> Result<()> {
    if let Some(n) = (0..a.len().max(b.len())).find(|&i| a.get(i) != b.get(i)) {
        return Err(Error::CrossCheck(format!(
            "{name} at n={}: {:?} vs {:?}",
            n + 1,
            a.get(n),
            b.get(n)
        )));
    }
    Ok(())
}

pub fn run_report(max_n: u32) -> Result<EnumerationReport> {
    check_degree(max_n)?;
    let z_graphs = cycle_index_graphs(max_n)?;
    let z_connected = connected_from_graphs(&z_graphs)?;
    let z_primes = primes_from_connected(&z_connected)?;

    let labeled_connected = labeled_connected_counts(max_n)?;
    cross_check("labeled connected counts", &labeled_connected, &labeled_counts(&z_connected)?)?;
    let unlabeled_connected = unlabeled_counts(&z_connected)?;

    let labeled_prime = labeled_primes_from_connected(&labeled_connected)?;
    let unlabeled_prime = unlabeled_primes_from_connected(&unlabeled_connected)?;
    cross_check("labeled prime counts", &labeled_prime, &labeled_counts(&z_primes)?)?;
    cross_check("unlabeled prime counts", &unlabeled_prime, &unlabeled_counts(&z_primes)?)?;

    Ok(EnumerationReport {
        max_n,
        labeled_connected,
        labeled_prime,
        unlabeled_connected,
        unlabeled_prime,
        z_graphs,
        z_connected,
        z_primes,
    })
}

impl EnumerationReport {
    /// Aligned table with one row per `n`: labeled and unlabeled prime counts.
    pub fn prime_table(&self) -> String {
        render_table(
            &["n", "p^l_n", "p^u_n"],
            &[&self.labeled_prime, &self.unlabeled_prime],
        )
    }

    /// Aligned table of all four count sequences.
    pub fn full_table(&self) -> String {
        render_table(
            &["n", "labeled connected", "labeled prime", "unlabeled connected", "unlabeled prime"],
            &[
                &self.labeled_connected,
                &self.labeled_prime,
                &self.unlabeled_connected,
                &self.unlabeled_prime,
            ],
        )
    }
}

/// Right-aligned columns; row `i` is `n = i + 1`.
pub fn render_table(headers: &[&str], columns: &[&[BigInt]]) -> String {
    let rows = columns.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut cells: Vec<Vec<String>> = vec![headers.iter().map(|h| h.to_string()).collect()];
    for i in 0..rows {
        let mut row = vec![(i + 1).to_string()];
        row.extend(columns.iter().map(|c| c.get(i).map(|v| v.to_string()).unwrap_or_default()));
        cells.push(row);
    }
    let widths: Vec<usize> = (0..headers.len())
        .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(out, "{}", line.join("  ")).expect("writing to a String");
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportJson {
    pub max_n: u32,
    pub labeled_connected: Vec<String>,
    pub labeled_prime: Vec<String>,
    pub unlabeled_connected: Vec<String>,
    pub unlabeled_prime: Vec<String>,
    pub z_graphs: PolyJson,
    pub z_connected: PolyJson,
    pub z_primes: PolyJson,
}

fn to_strings(v: Vec<BigInt>) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn from_strings(v: Vec<String>) -> Result<Vec<BigInt>> {
    v.iter()
        .map(|s| s.parse().map_err(|_| Error::Json(format!("not a decimal integer: {s:?}"))))
        .collect()
}

impl From<EnumerationReport> for ReportJson {
    fn from(r: EnumerationReport) -> Self {
        ReportJson {
            max_n: r.max_n,
            labeled_connected: to_strings(r.labeled_connected),
            labeled_prime: to_strings(r.labeled_prime),
            unlabeled_connected: to_strings(r.unlabeled_connected),
            unlabeled_prime: to_strings(r.unlabeled_prime),
            z_graphs: r.z_graphs.into(),
            z_connected: r.z_connected.into(),
            z_primes: r.z_primes.into(),
        }
    }
}

impl TryFrom<ReportJson> for EnumerationReport {
    type Error = Error;

    fn try_from(j: ReportJson) -> Result<Self> {
        Ok(EnumerationReport {
            max_n: j.max_n,
            labeled_connected: from_strings(j.labeled_connected)?,
            labeled_prime: from_strings(j.labeled_prime)?,
            unlabeled_connected: from_strings(j.unlabeled_connected)?,
            unlabeled_prime: from_strings(j.unlabeled_prime)?,
            z_graphs: j.z_graphs.try_into()?,
            z_connected: j.z_connected.try_into()?,
            z_primes: j.z_primes.try_into()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::rat;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Labeled graphs on `[n]` fixed by a permutation of type `λ`, counted by
    /// checking all `2^{C(n,2)}` edge sets.
    fn brute_fix(lambda: &Partition) -> u64 {
        let n = lambda.weight() as usize;
        let mut sigma = Vec::new();
        let mut start = 0;
        for &len in lambda.parts() {
            let len = len as usize;
            sigma.extend((0..len).map(|t| start + (t + 1) % len));
            start += len;
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
        (0u64..1 << pairs.len())
            .filter(|mask| {
                pairs
                    .iter()
                    .enumerate()
                    .all(|(i, &(u, v))| mask >> i & 1 == mask >> index(sigma[u], sigma[v]) & 1)
            })
            .count() as u64
    }

    #[test]
    fn fixed_graph_counts() {
        assert_eq!(fix_graphs(&part(&[1])), BigUint::from(1u32));
        assert_eq!(fix_graphs(&part(&[1, 1])), BigUint::from(2u32));
        assert_eq!(fix_graphs(&part(&[2])), BigUint::from(2u32));
        assert_eq!(fix_graphs(&Partition::empty()), BigUint::from(1u32));
        for n in 1..=6 {
            for l in partitions_of(n) {
                assert_eq!(fix_graphs(&l), BigUint::from(brute_fix(&l)), "{l}");
            }
        }
    }

    #[test]
    fn graphs_series() {
        let z = cycle_index_graphs(8).unwrap();
        assert_eq!(z.slice(1), PowerSumPoly::p(1, 8));
        assert_eq!(z.constant_term(), rat(1, 1));
        assert_eq!(unlabeled_counts(&z).unwrap(), ints(&[1, 2, 4, 11, 34, 156, 1044, 12346]));
        let labeled: Vec<BigInt> = (1..=8u64).map(|n| BigInt::one() << (n * (n - 1) / 2)).collect();
        assert_eq!(labeled_counts(&z).unwrap(), labeled);
        assert_eq!(z.egs_coeffs()[4], rat(64, 24));
        assert_eq!(cycle_index_graphs(0).unwrap(), PowerSumPoly::one(0));
        assert!(cycle_index_graphs(21).is_err());
    }

    #[test]
    fn connected_series_low_degrees() {
        let z = cycle_index_connected(6).unwrap();
        let expected = PowerSumPoly::from_terms(
            [
                (part(&[1]), rat(1, 1)),
                (part(&[1, 1]), rat(1, 2)),
                (part(&[2]), rat(1, 2)),
                (part(&[3]), rat(1, 3)),
                (part(&[1, 1, 1]), rat(2, 3)),
                (part(&[2, 1]), rat(1, 1)),
                (part(&[1, 1, 1, 1]), rat(19, 12)),
                (part(&[2, 1, 1]), rat(2, 1)),
                (part(&[2, 2]), rat(5, 4)),
                (part(&[3, 1]), rat(2, 3)),
                (part(&[4]), rat(1, 2)),
            ],
            6,
        );
        let low: PowerSumPoly = (1..=4).map(|n| z.slice(n)).fold(PowerSumPoly::zero(6), |a, b| a + b);
        assert_eq!(low, expected);
        assert_eq!(z.constant_term(), rat(0, 1));
        assert_eq!(unlabeled_counts(&z).unwrap(), ints(&[1, 1, 2, 6, 21, 112]));
        assert_eq!(cycle_index_connected(0).unwrap(), PowerSumPoly::zero(0));
    }

    #[test]
    fn connected_counts_agree_across_routes() {
        let labeled = ints(&[1, 1, 4, 38, 728, 26704, 1866256, 251548592, 66296291072]);
        assert_eq!(labeled_connected_counts(9).unwrap(), labeled);
        assert_eq!(labeled_counts(&cycle_index_connected(9).unwrap()).unwrap(), labeled);
        assert_eq!(unlabeled_connected_counts(10).unwrap(), unlabeled_connected_counts_univariate(10).unwrap());
    }

    #[test]
    fn prime_counts_small() {
        assert_eq!(labeled_prime_counts(7).unwrap(), ints(&[0, 1, 4, 35, 728, 26464, 1866256]));
        assert_eq!(unlabeled_prime_counts(9).unwrap(), ints(&[0, 1, 2, 5, 21, 110, 853, 11111, 261077]));
        assert_eq!(labeled_prime_counts(1).unwrap(), ints(&[0]));
        assert_eq!(unlabeled_prime_counts(1).unwrap(), ints(&[0]));
    }

    #[test]
    fn unlabeled_prime_formula_by_hand() {
        let c = ints(&[1, 1, 2, 6, 21, 112]);
        let d = log_connected_dirichlet(&c).unwrap();
        assert_eq!(d.coeff(2), rat(1, 1));
        assert_eq!(d.coeff(4), rat(11, 2));
        let b = unlabeled_primes_from_connected(&c).unwrap();
        // b_4 = ½(μ(2)·1·d_2 + μ(1)·2·d_4)
        assert_eq!(b[3], BigInt::from(5));
        assert_eq!(b[5], BigInt::from(112 - 2));
        assert!(unlabeled_primes_from_connected(&ints(&[1, 1, 2, 0])).is_err());
    }

    #[test]
    fn prime_series_low_degrees() {
        let z = cycle_index_primes(4).unwrap();
        let expected = PowerSumPoly::from_terms(
            [
                (part(&[1, 1]), rat(1, 2)),
                (part(&[2]), rat(1, 2)),
                (part(&[1, 1, 1]), rat(2, 3)),
                (part(&[2, 1]), rat(1, 1)),
                (part(&[3]), rat(1, 3)),
                (part(&[1, 1, 1, 1]), rat(35, 24)),
                (part(&[2, 1, 1]), rat(7, 4)),
                (part(&[3, 1]), rat(2, 3)),
                (part(&[2, 2]), rat(7, 8)),
                (part(&[4]), rat(1, 4)),
            ],
            4,
        );
        assert_eq!(z, expected);
        assert_eq!(cycle_index_primes(1).unwrap(), PowerSumPoly::zero(1));
    }

    #[test]
    fn report_cross_checks_and_json() {
        let r = run_report(6).unwrap();
        assert_eq!(r.labeled_prime, ints(&[0, 1, 4, 35, 728, 26464]));
        assert_eq!(r.unlabeled_prime, ints(&[0, 1, 2, 5, 21, 110]));
        let json = serde_json::to_string(&r).unwrap();
        let back: EnumerationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let table = r.prime_table();
        assert!(table.lines().next().unwrap().ends_with("p^u_n"));
        assert_eq!(table.lines().count(), 7);
        let last: Vec<&str> = table.lines().last().unwrap().split_whitespace().collect();
        assert_eq!(last, ["6", "26464", "110"]);

        let two = run_report(2).unwrap();
        assert_eq!(two.labeled_prime, ints(&[0, 1]));
        assert_eq!(two.unlabeled_prime, ints(&[0, 1]));
        let k2 = PowerSumPoly::from_terms([(part(&[1, 1]), rat(1, 2)), (part(&[2]), rat(1, 2))], 2);
        assert_eq!(two.z_primes, k2);
    }
}
