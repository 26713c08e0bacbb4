//! Generating functions of `inv` and `minimaj` by enumeration, the two
//! recursions on the last block, and the equidistribution checks built from
//! them.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{
    enum_compositions, enum_omp, enum_subsets, Composition, OmpConstraint, OrderedMultisetPartition, Subset,
    WeakComposition,
};
use crate::qpoly::{f_poly, q_factorial, q_stirling, QPoly};
use crate::report::{Report, ReportEntry};
use crate::statistics::{inv_omp, minimaj};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    Inv,
    Minimaj,
}

impl Statistic {
    pub fn eval(self, mu: &OrderedMultisetPartition) -> usize {
        match self {
            Statistic::Inv => inv_omp(mu),
            Statistic::Minimaj => minimaj(mu),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Inv => "inv",
            Statistic::Minimaj => "minimaj",
        }
    }
}

/// Which partitions of the weight are summed over.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    All,
    Blocks(usize),
    Shape(Composition),
    BlocksLastSize { k: usize, a: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DistributionKey {
    pub statistic: Statistic,
    pub weight: WeakComposition,
    pub family: Family,
}

impl DistributionKey {
    pub fn new(statistic: Statistic, weight: WeakComposition, family: Family) -> Self {
        DistributionKey { statistic, weight, family }
    }
}

fn family_iter(
    weight: &WeakComposition,
    family: &Family,
) -> Result<Box<dyn Iterator<Item = OrderedMultisetPartition>>> {
    Ok(match family {
        Family::All => Box::new(enum_omp(weight, OmpConstraint::All)?),
        Family::Blocks(k) => Box::new(enum_omp(weight, OmpConstraint::Blocks(*k))?),
        Family::Shape(alpha) => Box::new(enum_omp(weight, OmpConstraint::Shape(alpha.clone()))?),
        Family::BlocksLastSize { k, a } => {
            let a = *a;
            Box::new(
                enum_omp(weight, OmpConstraint::Blocks(*k))?
                    .filter(move |mu| mu.blocks().last().map(Vec::len) == Some(a)),
            )
        }
    })
}

fn bump(hist: &mut Vec<u64>, d: usize) {
    if hist.len() <= d {
        hist.resize(d + 1, 0);
    }
    hist[d] += 1;
}

/// `sum q^{stat(mu)}` over the keyed family.
pub fn distribution(key: &DistributionKey) -> Result<QPoly> {
    let mut hist = Vec::new();
    for mu in family_iter(&key.weight, &key.family)? {
        bump(&mut hist, key.statistic.eval(&mu));
    }
    Ok(QPoly::from_histogram(&hist))
}

/// The `inv` and `minimaj` generating functions of one family, in one pass.
pub fn inv_and_minimaj(weight: &WeakComposition, family: &Family) -> Result<(QPoly, QPoly)> {
    let mut inv = Vec::new();
    let mut mm = Vec::new();
    for mu in family_iter(weight, family)? {
        bump(&mut inv, inv_omp(&mu));
        bump(&mut mm, minimaj(&mu));
    }
    Ok((QPoly::from_histogram(&inv), QPoly::from_histogram(&mm)))
}

fn trim(beta: &[usize]) -> Vec<usize> {
    let end = beta.iter().rposition(|&b| b > 0).map_or(0, |p| p + 1);
    beta[..end].to_vec()
}

/// Subsets `S` of `[m]` with `|S| = size` and `beta_i > 0` on `S`, with the
/// exponent `sum_{i > min S} (beta_i - chi(S)_i)` and `beta - chi(S)`.
fn last_block_choices(beta: &[usize], size: usize) -> Vec<(Subset, usize, Vec<usize>)> {
    let m = beta.len();
    enum_subsets(m, size)
        .filter(|s| s.iter().all(|&i| beta[i - 1] > 0))
        .map(|s| {
            let mut rest = beta.to_vec();
            for &i in s.iter() {
                rest[i - 1] -= 1;
            }
            let exp = rest[s[0]..].iter().sum();
            (s, exp, rest)
        })
        .collect()
}

type Memo = HashMap<(Vec<usize>, Vec<usize>), QPoly>;

fn inv_rec(beta: &[usize], alpha: &[usize], memo: &mut Memo) -> QPoly {
    let beta = trim(beta);
    let Some((&last, head)) = alpha.split_last() else {
        return if beta.is_empty() { QPoly::one() } else { QPoly::zero() };
    };
    let key = (beta.clone(), alpha.to_vec());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let mut acc = QPoly::zero();
    for (_, exp, rest) in last_block_choices(&beta, last) {
        acc += inv_rec(&rest, head, memo).shift(exp);
    }
    memo.insert(key, acc.clone());
    acc
}

/// `I_{beta,alpha}` by recursion on the last block.
pub fn inv_recursion(beta: &WeakComposition, alpha: &Composition) -> Result<QPoly> {
    if beta.size() != alpha.size() {
        return Err(Error::invalid("shape", format!("{alpha} does not have the size of {beta}")));
    }
    Ok(inv_rec(beta, alpha, &mut Memo::new()))
}

/// `(gamma_{s+1}, ..., gamma_m, gamma_1, ..., gamma_s)`.
fn rotate(gamma: &[usize], s: usize) -> Vec<usize> {
    let mut v = gamma[s..].to_vec();
    v.extend_from_slice(&gamma[..s]);
    v
}

fn minimaj_rec(beta: &[usize], alpha: &[usize], memo: &mut Memo) -> QPoly {
    let beta = trim(beta);
    let Some((&last, head)) = alpha.split_last() else {
        return if beta.is_empty() { QPoly::one() } else { QPoly::zero() };
    };
    let key = (beta.clone(), alpha.to_vec());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let mut acc = QPoly::zero();
    if last == 1 {
        // the displayed recursion, cycled weight taken verbatim
        for i in 1..=beta.len() {
            if beta[i - 1] == 0 {
                continue;
            }
            let exp: usize = beta[i..].iter().sum();
            let mut cycled = beta[i..].to_vec();
            cycled.extend_from_slice(&beta[..i]);
            *cycled.last_mut().unwrap() -= 1;
            acc += minimaj_rec(&cycled, head, memo).shift(exp);
        }
    } else {
        // compress the last block to its minimum s, then cycle as above
        for (s, exp, rest) in last_block_choices(&beta, last) {
            acc += minimaj_rec(&rotate(&rest, s[0]), head, memo).shift(exp);
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// `M_{beta,alpha}` by the cycled-weight recursion; requires `alpha_k = 1`.
pub fn minimaj_recursion(beta: &WeakComposition, alpha: &Composition) -> Result<QPoly> {
    if alpha.last() != Some(&1) {
        return Err(Error::invalid("shape", format!("{alpha} must end in a part equal to 1")));
    }
    minimaj_recursion_general(beta, alpha)
}

/// `M_{beta,alpha}` for any last part, reducing a last block `S` to `min S`
/// before cycling.
pub fn minimaj_recursion_general(beta: &WeakComposition, alpha: &Composition) -> Result<QPoly> {
    if beta.size() != alpha.size() {
        return Err(Error::invalid("shape", format!("{alpha} does not have the size of {beta}")));
    }
    Ok(minimaj_rec(beta, alpha, &mut Memo::new()))
}

/// The right side of the summed last-block identity:
/// `sum_S q^{sum_{i > min S}(beta_i - chi(S)_i)} X_{beta - chi(S), k-1}` over
/// `|S| = a`, with `X` the enumerated distribution of `stat`.
pub fn last_block_sum(beta: &WeakComposition, k: usize, a: usize, stat: Statistic) -> Result<QPoly> {
    if k == 0 {
        return Ok(QPoly::zero());
    }
    let mut acc = QPoly::zero();
    for (_, exp, rest) in last_block_choices(beta, a) {
        let key = DistributionKey::new(stat, WeakComposition(rest), Family::Blocks(k - 1));
        acc += distribution(&key)?.shift(exp);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Verification

fn run_parallel<T: Sync, F>(items: &[T], f: F) -> Report
where
    F: Fn(&T) -> Vec<ReportEntry> + Sync + Send,
{
    let chunks: Vec<Vec<ReportEntry>> = items.par_iter().map(f).collect();
    Report::new(chunks.into_iter().flatten().collect())
}

/// Strict compositions of every size in `1..=n`.
pub fn weights_up_to(n: usize) -> Vec<WeakComposition> {
    (1..=n).flat_map(enum_compositions).map(|c| WeakComposition(c.0)).collect()
}

/// Inversions and major index on `S_m`, `m <= n`, against `[m]!_q`.
pub fn verify_macmahon(n: usize) -> Report {
    let sizes: Vec<usize> = (1..=n).collect();
    run_parallel(&sizes, |&m| {
        let mut inv = Vec::new();
        let mut maj = Vec::new();
        for w in crate::partitions::enum_words(&WeakComposition(vec![1; m])) {
            bump(&mut inv, crate::statistics::inv_word(&w));
            bump(&mut maj, crate::statistics::maj_word(&w));
        }
        let target = q_factorial(m);
        vec![
            ReportEntry::compare("inv on S_n = [n]!", format!("n={m}"), QPoly::from_histogram(&inv), target.clone()),
            ReportEntry::compare("maj on S_n = [n]!", format!("n={m}"), QPoly::from_histogram(&maj), target),
        ]
    })
}

/// `I_{n,alpha} = F_{n,alpha}` and `M_{n,alpha} = F_{n,alpha}` for every `alpha |= n`.
pub fn verify_shape_equidistribution(n: usize) -> Report {
    let alphas: Vec<Composition> = enum_compositions(n).collect();
    run_parallel(&alphas, |alpha| {
        let beta = WeakComposition(vec![1; n]);
        let (inv, mm) = inv_and_minimaj(&beta, &Family::Shape(alpha.clone())).expect("valid shape");
        let f = f_poly(alpha);
        vec![
            ReportEntry::compare("I_{n,alpha} = F_{n,alpha}", format!("n={n} alpha={alpha}"), inv, f.clone()),
            ReportEntry::compare("M_{n,alpha} = F_{n,alpha}", format!("n={n} alpha={alpha}"), mm, f),
        ]
    })
}

/// `I_{n,k} = M_{n,k} = [k]!_q Stir_{n,k}(q)` for `1 <= k <= n`.
pub fn verify_block_count_formula(n: usize) -> Report {
    let ks: Vec<usize> = (1..=n).collect();
    run_parallel(&ks, |&k| {
        let beta = WeakComposition(vec![1; n]);
        let (inv, mm) = inv_and_minimaj(&beta, &Family::Blocks(k)).expect("valid family");
        let target = &q_factorial(k) * &q_stirling(n, k);
        vec![
            ReportEntry::compare("I_{n,k} = [k]! Stir_{n,k}", format!("n={n} k={k}"), inv, target.clone()),
            ReportEntry::compare("M_{n,k} = [k]! Stir_{n,k}", format!("n={n} k={k}"), mm, target),
        ]
    })
}

/// The shape-level counterexample for multiset weights and its exact values.
pub fn verify_counterexample() -> Report {
    let beta = WeakComposition(vec![2, 2, 1]);
    let fam = Family::Shape(Composition(vec![2, 1, 2]));
    let (inv, mm) = inv_and_minimaj(&beta, &fam).expect("valid shape");
    let inst = "beta=(2,2,1) alpha=(2,1,2)";
    Report::new(vec![
        ReportEntry::compare("I_{beta,alpha} value", inst, inv.clone(), QPoly::from_coeffs(vec![0, 1, 2, 1, 1])),
        ReportEntry::compare("M_{beta,alpha} value", inst, mm.clone(), QPoly::from_coeffs(vec![0, 1, 1, 2, 1])),
        ReportEntry::differ("I_{beta,alpha} != M_{beta,alpha}", inst, inv, mm),
    ])
}

/// Granularity of the multiset equidistribution check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Granularity {
    /// Fixed number of blocks; the statement that holds.
    Blocks,
    /// Fixed shape; fails for some multiset weights.
    Shape,
}

/// `I_{beta,k} = M_{beta,k}` over all compositions `beta` of sizes `1..=n`.
pub fn verify_multiset_equidistribution(n: usize, granularity: Granularity) -> Report {
    let betas = weights_up_to(n);
    run_parallel(&betas, |beta| {
        let size = beta.size();
        let families: Vec<Family> = match granularity {
            Granularity::Blocks => (1..=size).map(Family::Blocks).collect(),
            Granularity::Shape => enum_compositions(size).map(Family::Shape).collect(),
        };
        families
            .into_iter()
            .map(|fam| {
                let (inv, mm) = inv_and_minimaj(beta, &fam).expect("valid family");
                let label = match &fam {
                    Family::Blocks(k) => format!("beta={beta} k={k}"),
                    Family::Shape(a) => format!("beta={beta} alpha={a}"),
                    _ => unreachable!(),
                };
                let thm = match granularity {
                    Granularity::Blocks => "I_{beta,k} = M_{beta,k}",
                    Granularity::Shape => "I_{beta,alpha} = M_{beta,alpha}",
                };
                ReportEntry::compare(thm, label, inv, mm)
            })
            .collect()
    })
}

/// `inv` and `minimaj` agree on `k`-block partitions whose last block has size `a`.
pub fn verify_refined_last_block(n: usize) -> Report {
    let betas = weights_up_to(n);
    run_parallel(&betas, |beta| {
        let size = beta.size();
        let mut out = Vec::new();
        for k in 1..=size {
            for a in 1..=size + 1 - k {
                let (inv, mm) = inv_and_minimaj(beta, &Family::BlocksLastSize { k, a }).expect("valid family");
                out.push(ReportEntry::compare(
                    "I = M with last block size a",
                    format!("beta={beta} k={k} a={a}"),
                    inv,
                    mm,
                ));
            }
        }
        out
    })
}

/// Both recursions against enumeration, and the summed last-block identity.
pub fn verify_recursions(n: usize) -> Report {
    let betas = weights_up_to(n);
    run_parallel(&betas, |beta| {
        let size = beta.size();
        let mut out = Vec::new();
        for alpha in enum_compositions(size) {
            let (inv, mm) = inv_and_minimaj(beta, &Family::Shape(alpha.clone())).expect("valid shape");
            let inst = format!("beta={beta} alpha={alpha}");
            out.push(ReportEntry::compare(
                "inv recursion",
                inst.clone(),
                inv_recursion(beta, &alpha).expect("sizes agree"),
                inv,
            ));
            if alpha.last() == Some(&1) {
                out.push(ReportEntry::compare(
                    "minimaj recursion",
                    inst.clone(),
                    minimaj_recursion(beta, &alpha).expect("last part is 1"),
                    mm.clone(),
                ));
            }
            out.push(ReportEntry::compare(
                "minimaj recursion via compression",
                inst,
                minimaj_recursion_general(beta, &alpha).expect("sizes agree"),
                mm,
            ));
        }
        for k in 1..=size {
            for a in 1..=size + 1 - k {
                let (inv, mm) = inv_and_minimaj(beta, &Family::BlocksLastSize { k, a }).expect("valid family");
                let inst = format!("beta={beta} k={k} a={a}");
                out.push(ReportEntry::compare(
                    "summed last-block identity (minimaj)",
                    inst.clone(),
                    mm,
                    last_block_sum(beta, k, a, Statistic::Minimaj).expect("valid family"),
                ));
                out.push(ReportEntry::compare(
                    "summed last-block identity (inv)",
                    inst,
                    inv,
                    last_block_sum(beta, k, a, Statistic::Inv).expect("valid family"),
                ));
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(v: &[usize]) -> WeakComposition {
        WeakComposition(v.to_vec())
    }

    fn comp(v: &[usize]) -> Composition {
        Composition(v.to_vec())
    }

    fn p(c: &[i128]) -> QPoly {
        QPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn counterexample_values() {
        let fam = Family::Shape(comp(&[2, 1, 2]));
        let inv = distribution(&DistributionKey::new(Statistic::Inv, wc(&[2, 2, 1]), fam.clone())).unwrap();
        let mm = distribution(&DistributionKey::new(Statistic::Minimaj, wc(&[2, 2, 1]), fam)).unwrap();
        assert_eq!(inv, p(&[0, 1, 2, 1, 1]));
        assert_eq!(mm, p(&[0, 1, 1, 2, 1]));
        assert!(verify_counterexample().all_pass());
    }

    #[test]
    fn single_block_minimaj_is_one() {
        for n in 1..6 {
            let key = DistributionKey::new(Statistic::Minimaj, wc(&vec![1; n]), Family::Shape(comp(&[n])));
            assert_eq!(distribution(&key).unwrap(), QPoly::one());
        }
    }

    #[test]
    fn recursion_small_cases() {
        assert_eq!(inv_recursion(&wc(&[1, 1]), &comp(&[1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(minimaj_recursion(&wc(&[1, 1]), &comp(&[1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(inv_recursion(&wc(&[2]), &comp(&[1, 1])).unwrap(), QPoly::one());
        assert!(minimaj_recursion(&wc(&[3]), &comp(&[2, 1])).unwrap().is_zero());
        assert!(minimaj_recursion(&wc(&[1, 1]), &comp(&[2])).is_err());
        assert!(inv_recursion(&wc(&[1, 1]), &comp(&[3])).is_err());
    }

    #[test]
    fn recursions_match_enumeration_with_zero_letters() {
        for beta in [vec![1, 0, 2], vec![0, 2, 1, 1], vec![2, 0, 0, 1], vec![1, 2, 0]] {
            let beta = wc(&beta);
            for alpha in enum_compositions(beta.size()) {
                let fam = Family::Shape(alpha.clone());
                let (inv, mm) = inv_and_minimaj(&beta, &fam).unwrap();
                assert_eq!(inv_recursion(&beta, &alpha).unwrap(), inv, "{beta} {alpha}");
                assert_eq!(minimaj_recursion_general(&beta, &alpha).unwrap(), mm, "{beta} {alpha}");
            }
        }
    }

    #[test]
    fn small_suites_pass() {
        assert!(verify_macmahon(5).all_pass());
        assert!(verify_shape_equidistribution(4).all_pass());
        assert!(verify_block_count_formula(4).all_pass());
        assert!(verify_multiset_equidistribution(4, Granularity::Blocks).all_pass());
        assert!(verify_refined_last_block(4).all_pass());
        assert!(verify_recursions(4).all_pass());
    }

    #[test]
    fn shape_mode_exhibits_failure() {
        let report = verify_multiset_equidistribution(5, Granularity::Shape);
        assert!(report.failures().any(|e| e.instance == "beta=(2,2,1) alpha=(2,1,2)"));
        // set partitions never fail at shape level
        assert!(report.entries.iter().filter(|e| e.instance.starts_with("beta=(1,1,1,1,1) ")).all(|e| e.pass));
    }

    #[test]
    fn shape_equidistribution_trivial_n1() {
        let r = verify_shape_equidistribution(1);
        assert_eq!(r.len(), 2);
        assert!(r.all_pass());
    }
}
