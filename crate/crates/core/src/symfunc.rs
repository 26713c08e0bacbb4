//! Monomial and Schur expansions of the valley sums
//! `sum_{mu in OP_{beta,k+1}} q^{stat(mu)} x^beta`, standard Young tableaux,
//! Kostka numbers, and the descent-refined sums.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distributions::{DistributionKey, Family, Statistic};
use crate::error::{Error, Result};
use crate::partitions::{enum_omp, next_permutation, OmpConstraint, WeakComposition};
use crate::qpoly::{binomial, q_binomial, QPoly};
use crate::report::{Report, ReportEntry};
use crate::statistics::{descent_set, minimaj, segmented_word, DescentSet};

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerPartition(pub Vec<usize>);

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition", format!("{parts:?} is not weakly decreasing and positive")));
        }
        Ok(IntegerPartition(parts))
    }

    /// Sorts the nonzero parts of a weak composition.
    pub fn from_weight(beta: &[usize]) -> Self {
        let mut parts: Vec<usize> = beta.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition(parts)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_weight(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }

    /// Dominance: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &IntegerPartition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partitions of `n`, reverse lexicographic: `(3),(2,1),(1,1,1)`.
pub fn partitions_of(n: usize) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    let mut cur = if n == 0 { vec![] } else { vec![n] };
    loop {
        out.push(IntegerPartition(cur.clone()));
        let Some(i) = cur.iter().rposition(|&p| p > 1) else {
            break;
        };
        let v = cur[i] - 1;
        let mut rem: usize = cur[i + 1..].iter().sum::<usize>() + 1;
        cur.truncate(i);
        cur.push(v);
        while rem > 0 {
            let part = rem.min(v);
            cur.push(part);
            rem -= part;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Monomial,
    Schur,
}

/// Coefficients of a degree-`n` symmetric function in one basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncExpansion {
    pub basis: Basis,
    pub n: usize,
    pub k: Option<usize>,
    #[serde(with = "coefficient_list")]
    pub coefficients: BTreeMap<IntegerPartition, QPoly>,
}

mod coefficient_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Term {
        partition: IntegerPartition,
        poly: QPoly,
    }

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<IntegerPartition, QPoly>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(map.iter().map(|(p, q)| Term { partition: p.clone(), poly: q.clone() }))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<IntegerPartition, QPoly>, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        Ok(terms.into_iter().map(|t| (t.partition, t.poly)).collect())
    }
}

impl SymFuncExpansion {
    pub fn coeff(&self, lambda: &IntegerPartition) -> QPoly {
        self.coefficients.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms, most dominant partition first.
    pub fn terms(&self) -> Vec<(&IntegerPartition, &QPoly)> {
        self.coefficients.iter().rev().filter(|(_, c)| !c.is_zero()).collect()
    }
}

impl fmt::Display for SymFuncExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Monomial => "m",
            Basis::Schur => "s",
        };
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (lambda, c)) in terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) {sym}{lambda}")?;
        }
        Ok(())
    }
}

/// `sum_{mu in OP_{beta,k+1}} q^{stat(mu)}` for an arbitrary weight `beta`.
pub fn val_coefficient(beta: &WeakComposition, k: usize, stat: Statistic) -> Result<QPoly> {
    crate::distributions::distribution(&DistributionKey::new(stat, beta.clone(), Family::Blocks(k + 1)))
}

/// Monomial expansion of the valley sum with `k + 1` blocks; each partition is
/// used directly as the weight.
pub fn val_expansion(n: usize, k: usize, stat: Statistic) -> Result<SymFuncExpansion> {
    if k >= n {
        return Err(Error::invalid("k", format!("need k < n, got k={k} n={n}")));
    }
    let coefficients = partitions_of(n)
        .into_par_iter()
        .map(|lambda| {
            let c = val_coefficient(&lambda.as_weight(), k, stat)?;
            Ok((lambda, c))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(SymFuncExpansion { basis: Basis::Monomial, n, k: Some(k), coefficients })
}

// ---------------------------------------------------------------------------
// Tableaux

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardTableau {
    pub rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        IntegerPartition::new(shape)?;
        let mut all: Vec<usize> = rows.concat();
        all.sort_unstable();
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(lo, hi)| lo > hi));
        if !all.iter().copied().eq(1..=all.len()) || !rows_ok || !cols_ok {
            return Err(Error::invalid("tableau", format!("{rows:?} is not standard")));
        }
        Ok(StandardTableau { rows })
    }

    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition(self.rows.iter().map(Vec::len).collect())
    }

    fn row_of(&self) -> Vec<usize> {
        let n = self.rows.iter().map(Vec::len).sum::<usize>();
        let mut row = vec![0; n + 1];
        for (r, entries) in self.rows.iter().enumerate() {
            for &e in entries {
                row[e] = r;
            }
        }
        row
    }

    /// `i` with `i + 1` in a strictly lower row than `i`.
    pub fn descents(&self) -> Vec<usize> {
        let row = self.row_of();
        (1..row.len().saturating_sub(1)).filter(|&i| row[i + 1] > row[i]).collect()
    }
}

pub fn syt_des(t: &StandardTableau) -> usize {
    t.descents().len()
}

pub fn syt_maj(t: &StandardTableau) -> usize {
    t.descents().iter().sum()
}

/// All standard tableaux of shape `lambda`, built by placing `1, 2, ...` in
/// turn into every row that accepts a new box.
pub fn syt_enumerate(lambda: &IntegerPartition) -> impl Iterator<Item = StandardTableau> {
    fn fill(lambda: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<StandardTableau>) {
        if next > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..lambda.len() {
            let len = rows[r].len();
            if len < lambda[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                fill(lambda, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.0.len()];
    fill(&lambda.0, &mut rows, 1, lambda.size(), &mut out);
    out.into_iter()
}

/// Coefficient of `s_lambda` in the valley sum with `k` blocks:
/// `sum_T q^{maj(T) + C(n-k,2) - (n-k) des(T)} [des(T) choose n-k]_q`.
pub fn schur_coeff_formula(lambda: &IntegerPartition, n: usize, k: usize) -> QPoly {
    assert_eq!(lambda.size(), n, "lambda must partition n");
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    let d = (n - k) as i64;
    let mut acc = QPoly::zero();
    for t in syt_enumerate(lambda) {
        let des = syt_des(&t);
        let qb = q_binomial(des, d);
        if qb.is_zero() {
            continue;
        }
        let exp = syt_maj(&t) as i64 + binomial(d, 2) as i64 - d * des as i64;
        assert!(exp >= 0, "negative exponent {exp} for tableau {:?}", t.rows);
        acc += qb.shift(exp as usize);
    }
    acc
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`,
/// adding the letters one horizontal strip at a time.
pub fn kostka(lambda: &IntegerPartition, mu: &[usize]) -> u64 {
    fn strips(lambda: &[usize], shape: &[usize], content: &[usize]) -> u64 {
        let Some((&c, rest)) = content.split_first() else {
            return u64::from(shape == lambda);
        };
        let mut total = 0;
        let mut next = shape.to_vec();
        grow(lambda, shape, &mut next, 0, c, rest, &mut total);
        total
    }
    fn grow(
        lambda: &[usize],
        shape: &[usize],
        next: &mut Vec<usize>,
        row: usize,
        left: usize,
        rest: &[usize],
        total: &mut u64,
    ) {
        if row == lambda.len() {
            if left == 0 {
                *total += strips(lambda, next, rest);
            }
            return;
        }
        let cap = if row == 0 { lambda[0] } else { lambda[row].min(shape[row - 1]) };
        let base = shape[row];
        for add in 0..=left.min(cap.saturating_sub(base)) {
            next[row] = base + add;
            grow(lambda, shape, next, row + 1, left - add, rest, total);
        }
        next[row] = base;
    }
    if lambda.size() != mu.iter().sum::<usize>() {
        return 0;
    }
    strips(&lambda.0, &vec![0; lambda.0.len()], mu)
}

/// Solves `c_mu = sum_lambda d_lambda K_{lambda,mu}` for the Schur
/// coefficients `d`, most dominant partition first.
pub fn monomial_to_schur(e: &SymFuncExpansion) -> Result<SymFuncExpansion> {
    if e.basis != Basis::Monomial {
        return Err(Error::Conversion { partition: vec![], reason: "input is not in the monomial basis".into() });
    }
    let parts = partitions_of(e.n);
    let mut d: Vec<QPoly> = Vec::with_capacity(parts.len());
    for (j, mu) in parts.iter().enumerate() {
        let mut c = e.coeff(mu);
        for (i, lambda) in parts[..j].iter().enumerate() {
            let kk = kostka(lambda, &mu.0);
            if kk > 0 && !d[i].is_zero() {
                let term = d[i].checked_mul(&QPoly::constant(kk.into()))?;
                c = c.checked_sub(&term)?;
            }
        }
        // K_{mu,mu} = 1, so no division is needed
        d.push(c);
    }
    let coefficients = parts.into_iter().zip(d).collect();
    Ok(SymFuncExpansion { basis: Basis::Schur, n: e.n, k: e.k, coefficients })
}

pub fn schur_to_monomial(e: &SymFuncExpansion) -> Result<SymFuncExpansion> {
    if e.basis != Basis::Schur {
        return Err(Error::Conversion { partition: vec![], reason: "input is not in the Schur basis".into() });
    }
    let parts = partitions_of(e.n);
    let mut coefficients = BTreeMap::new();
    for mu in &parts {
        let mut c = QPoly::zero();
        for lambda in &parts {
            let kk = kostka(lambda, &mu.0);
            if kk > 0 {
                c = c.checked_add(&e.coeff(lambda).checked_mul(&QPoly::constant(kk.into()))?)?;
            }
        }
        coefficients.insert(mu.clone(), c);
    }
    Ok(SymFuncExpansion { basis: Basis::Monomial, n: e.n, k: e.k, coefficients })
}

// ---------------------------------------------------------------------------
// Descent classes

/// `minimaj` generating functions of `OP_{beta,k}` split by `Des(w(mu))`.
pub fn descent_classes(beta: &WeakComposition, k: usize) -> Result<BTreeMap<DescentSet, QPoly>> {
    let mut hist: BTreeMap<DescentSet, Vec<u64>> = BTreeMap::new();
    for mu in enum_omp(beta, OmpConstraint::Blocks(k))? {
        let des = descent_set(&segmented_word(&mu).word);
        let h = hist.entry(des).or_default();
        let d = minimaj(&mu);
        if h.len() <= d {
            h.resize(d + 1, 0);
        }
        h[d] += 1;
    }
    Ok(hist.into_iter().map(|(s, h)| (s, QPoly::from_histogram(&h))).collect())
}

/// Monomial coefficients of the descent-refined sum over size-`n`,
/// `k`-block partitions with `Des(w(mu)) = S`.
pub fn descent_refined_expansion(n: usize, k: usize, s: &DescentSet) -> Result<SymFuncExpansion> {
    if s.0.iter().any(|&i| i == 0 || i >= n) {
        return Err(Error::invalid("descent set", format!("{:?} is not inside [1, {}]", s.0, n.saturating_sub(1))));
    }
    let coefficients = partitions_of(n)
        .into_par_iter()
        .map(|lambda| {
            let classes = descent_classes(&lambda.as_weight(), k)?;
            Ok((lambda, classes.get(s).cloned().unwrap_or_default()))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(SymFuncExpansion { basis: Basis::Monomial, n, k: Some(k), coefficients })
}

/// Distinct rearrangements of `lambda`, optionally with extra zero parts.
pub fn rearrangements(lambda: &IntegerPartition, zeros: usize) -> Vec<WeakComposition> {
    let mut v: Vec<usize> = lambda.0.clone();
    v.extend(std::iter::repeat_n(0, zeros));
    v.sort_unstable();
    let mut out = vec![WeakComposition(v.clone())];
    while next_permutation(&mut v) {
        out.push(WeakComposition(v.clone()));
    }
    out
}

// ---------------------------------------------------------------------------
// Verification

/// `inv` and `minimaj` valley sums agree, and every monomial coefficient is
/// invariant under rearranging the weight (one extra zero letter allowed).
pub fn verify_val_symmetry(n_max: usize) -> Report {
    let cases: Vec<(usize, IntegerPartition)> =
        (1..=n_max).flat_map(|n| partitions_of(n).into_iter().map(move |l| (n, l))).collect();
    let chunks: Vec<Vec<ReportEntry>> = cases
        .par_iter()
        .map(|(n, lambda)| {
            let mut out = Vec::new();
            for k in 0..*n {
                let inv = val_coefficient(&lambda.as_weight(), k, Statistic::Inv).expect("valid weight");
                let mm = val_coefficient(&lambda.as_weight(), k, Statistic::Minimaj).expect("valid weight");
                let inst = format!("n={n} k={k} lambda={lambda}");
                out.push(ReportEntry::compare("Val(q,0) = Val(0,q) at m_lambda", inst.clone(), inv, mm.clone()));
                let arrangements = rearrangements(lambda, 1);
                let agree = arrangements
                    .iter()
                    .filter(|beta| val_coefficient(beta, k, Statistic::Minimaj).expect("valid weight") == mm)
                    .count();
                out.push(ReportEntry::count(
                    "Val(0,q) coefficient is rearrangement invariant",
                    inst,
                    agree as u64,
                    arrangements.len() as u64,
                ));
            }
            out
        })
        .collect();
    let mut report = Report::new(chunks.into_iter().flatten().collect());
    report.extend(verify_shape_non_symmetry());
    report
}

/// With shape fixed to `(2,2)` the sum is not symmetric.
pub fn verify_shape_non_symmetry() -> Report {
    let shape = Family::Shape(crate::partitions::Composition(vec![2, 2]));
    let coeff = |beta: &[usize]| {
        crate::distributions::distribution(&DistributionKey::new(
            Statistic::Minimaj,
            WeakComposition(beta.to_vec()),
            shape.clone(),
        ))
        .expect("valid shape")
    };
    let a = coeff(&[2, 1, 1]);
    let b = coeff(&[1, 2, 1]);
    let c = coeff(&[1, 1, 2]);
    Report::new(vec![
        ReportEntry::compare("shape (2,2) coefficient", "x1^2 x2 x3", a.clone(), QPoly::monomial(2, 1)),
        ReportEntry::compare("shape (2,2) coefficient", "x1 x2^2 x3", b.clone(), QPoly::from_coeffs(vec![1, 0, 1])),
        ReportEntry::compare("shape (2,2) coefficient", "x1 x2 x3^2", c, QPoly::from_coeffs(vec![0, 1, 1])),
        ReportEntry::differ("shape (2,2) sum is not symmetric", "x1^2 x2 x3 vs x1 x2^2 x3", a, b),
    ])
}

/// Descent-refined sums are symmetric, factor as `q^{sum S}` times a count,
/// and add up to the valley sum.
pub fn verify_descent_refined(n_max: usize) -> Report {
    let cases: Vec<(usize, usize)> = (1..=n_max).flat_map(|n| (1..=n).map(move |k| (n, k))).collect();
    let chunks: Vec<Vec<ReportEntry>> = cases
        .par_iter()
        .map(|&(n, k)| {
            let mut out = Vec::new();
            for lambda in partitions_of(n) {
                let base = descent_classes(&lambda.as_weight(), k).expect("valid weight");
                let inst = format!("n={n} k={k} lambda={lambda}");
                let factored = base
                    .iter()
                    .filter(|(s, p)| p.coeffs().iter().enumerate().all(|(d, &c)| c == 0 || d == s.sum()))
                    .count();
                out.push(ReportEntry::count(
                    "F_{n,k,S} = q^{sum S} x count",
                    inst.clone(),
                    factored as u64,
                    base.len() as u64,
                ));
                let arrangements = rearrangements(&lambda, 0);
                let agree =
                    arrangements.iter().filter(|beta| descent_classes(beta, k).expect("valid weight") == base).count();
                out.push(ReportEntry::count(
                    "F_{n,k,S} is symmetric",
                    inst.clone(),
                    agree as u64,
                    arrangements.len() as u64,
                ));
                let total: QPoly = base.values().cloned().sum();
                let val = val_coefficient(&lambda.as_weight(), k - 1, Statistic::Minimaj).expect("valid weight");
                out.push(ReportEntry::compare("sum over S of F_{n,k,S} = Val", inst, total, val));
            }
            out
        })
        .collect();
    Report::new(chunks.into_iter().flatten().collect())
}

/// Schur coefficients from the tableau formula equal the converted
/// enumerated expansion, and are coefficientwise nonnegative.
pub fn verify_schur(n_max: usize) -> Report {
    let cases: Vec<(usize, usize)> = (1..=n_max).flat_map(|n| (1..=n).map(move |k| (n, k))).collect();
    let chunks: Vec<Vec<ReportEntry>> = cases
        .par_iter()
        .map(|&(n, k)| {
            let mono = val_expansion(n, k - 1, Statistic::Minimaj).expect("k <= n");
            let schur = monomial_to_schur(&mono).expect("exact conversion");
            let mut out = Vec::new();
            for lambda in partitions_of(n) {
                let got = schur.coeff(&lambda);
                let formula = schur_coeff_formula(&lambda, n, k);
                let inst = format!("n={n} k={k} lambda={lambda}");
                out.push(ReportEntry::count(
                    "Schur coefficient is nonnegative",
                    inst.clone(),
                    u64::from(got.has_nonnegative_coeffs()),
                    1,
                ));
                out.push(ReportEntry::compare("Schur coefficient = tableau formula", inst, got, formula));
            }
            out
        })
        .collect();
    let mut report = Report::new(chunks.into_iter().flatten().collect());
    report.extend(verify_val_3_1_example());
    report
}

/// The worked three-letter example in both bases.
pub fn verify_val_3_1_example() -> Report {
    let p = |c: &[i128]| QPoly::from_coeffs(c.to_vec());
    let lam = |v: &[usize]| IntegerPartition(v.to_vec());
    let mono = val_expansion(3, 1, Statistic::Minimaj).expect("1 < 3");
    let schur = monomial_to_schur(&mono).expect("exact conversion");
    let mut out = Vec::new();
    for (l, want) in [(lam(&[1, 1, 1]), p(&[2, 3, 1])), (lam(&[2, 1]), p(&[1, 1])), (lam(&[3]), p(&[]))] {
        out.push(ReportEntry::compare("Val_{3,1} monomial coefficient", format!("m{l}"), mono.coeff(&l), want));
    }
    for (l, want) in [(lam(&[1, 1, 1]), p(&[0, 1, 1])), (lam(&[2, 1]), p(&[1, 1])), (lam(&[3]), p(&[]))] {
        out.push(ReportEntry::compare("Val_{3,1} Schur coefficient", format!("s{l}"), schur.coeff(&l), want));
    }
    Report::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(v: &[usize]) -> IntegerPartition {
        IntegerPartition(v.to_vec())
    }

    fn p(c: &[i128]) -> QPoly {
        QPoly::from_coeffs(c.to_vec())
    }

    fn hook_count(lambda: &IntegerPartition) -> u64 {
        let n = lambda.size() as u64;
        let mut denom = 1u64;
        let conj: Vec<usize> =
            (0..lambda.0.first().copied().unwrap_or(0)).map(|c| lambda.0.iter().filter(|&&r| r > c).count()).collect();
        for (r, &len) in lambda.0.iter().enumerate() {
            for c in 0..len {
                denom *= ((len - c - 1) + (conj[c] - r - 1) + 1) as u64;
            }
        }
        (1..=n).product::<u64>() / denom
    }

    #[test]
    fn partitions_order_and_counts() {
        assert_eq!(partitions_of(3), vec![lam(&[3]), lam(&[2, 1]), lam(&[1, 1, 1])]);
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
        for n in 1..8 {
            let ps = partitions_of(n);
            for (i, a) in ps.iter().enumerate() {
                for b in &ps[i + 1..] {
                    assert!(!b.dominates(a) || a == b, "{b} dominates earlier {a}");
                }
            }
        }
    }

    #[test]
    fn tableau_statistics() {
        let t = StandardTableau::new(vec![vec![1, 3, 4], vec![2, 6, 7], vec![5, 8]]).unwrap();
        assert_eq!(t.descents(), vec![1, 4, 7]);
        assert_eq!(syt_des(&t), 3);
        assert_eq!(syt_maj(&t), 12);
        let row: Vec<_> = syt_enumerate(&lam(&[4])).collect();
        assert_eq!(row.len(), 1);
        assert_eq!((syt_des(&row[0]), syt_maj(&row[0])), (0, 0));
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3, 4], vec![5]]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
    }

    #[test]
    fn syt_counts_match_hook_lengths() {
        assert_eq!(syt_enumerate(&lam(&[2, 1])).count(), 2);
        for n in 1..=7 {
            for l in partitions_of(n) {
                let all: Vec<_> = syt_enumerate(&l).collect();
                assert_eq!(all.len() as u64, hook_count(&l), "{l}");
                for t in &all {
                    StandardTableau::new(t.rows.clone()).unwrap();
                }
            }
        }
    }

    #[test]
    fn kostka_matches_brute_force_fillings() {
        fn brute(lambda: &IntegerPartition, mu: &[usize]) -> u64 {
            let mut letters: Vec<usize> = Vec::new();
            for (i, &c) in mu.iter().enumerate() {
                letters.extend(std::iter::repeat_n(i + 1, c));
            }
            let mut count = 0;
            loop {
                let mut rows = Vec::new();
                let mut pos = 0;
                for &len in &lambda.0 {
                    rows.push(letters[pos..pos + len].to_vec());
                    pos += len;
                }
                let rows_ok = rows.iter().all(|r: &Vec<usize>| r.windows(2).all(|w| w[0] <= w[1]));
                let cols_ok = rows.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(lo, hi)| lo > hi));
                if rows_ok && cols_ok {
                    count += 1;
                }
                if !next_permutation(&mut letters) {
                    return count;
                }
            }
        }
        for n in 1..=5 {
            for l in partitions_of(n) {
                for m in partitions_of(n) {
                    assert_eq!(kostka(&l, &m.0), brute(&l, &m.0), "K_{l},{m}");
                }
                assert_eq!(kostka(&l, &l.0), 1);
                // content order does not matter
                let mut rev = l.0.clone();
                rev.reverse();
                assert_eq!(kostka(&lam(&[n]), &rev), 1);
            }
        }
        assert_eq!(kostka(&lam(&[2, 1]), &[1, 1, 1]), 2);
    }

    #[test]
    fn val_3_1_example() {
        let mono = val_expansion(3, 1, Statistic::Minimaj).unwrap();
        assert_eq!(mono.coeff(&lam(&[1, 1, 1])), p(&[2, 3, 1]));
        assert_eq!(mono.coeff(&lam(&[2, 1])), p(&[1, 1]));
        assert!(mono.coeff(&lam(&[3])).is_zero());
        let schur = monomial_to_schur(&mono).unwrap();
        assert_eq!(schur.coeff(&lam(&[1, 1, 1])), p(&[0, 1, 1]));
        assert_eq!(schur.coeff(&lam(&[2, 1])), p(&[1, 1]));
        assert!(schur.coeff(&lam(&[3])).is_zero());
        assert_eq!(schur_to_monomial(&schur).unwrap(), mono);
        assert!(verify_val_3_1_example().all_pass());
    }

    #[test]
    fn schur_formula_example() {
        assert_eq!(schur_coeff_formula(&lam(&[1, 1, 1]), 3, 2), p(&[0, 1, 1]));
        assert_eq!(schur_coeff_formula(&lam(&[2, 1]), 3, 2), p(&[1, 1]));
        assert!(schur_coeff_formula(&lam(&[3]), 3, 2).is_zero());
    }

    #[test]
    fn val_with_all_singletons_is_q_factorial() {
        for n in 1..=5 {
            for stat in [Statistic::Inv, Statistic::Minimaj] {
                let e = val_expansion(n, n - 1, stat).unwrap();
                assert_eq!(e.coeff(&lam(&vec![1; n])), crate::qpoly::q_factorial(n));
            }
        }
        assert!(val_expansion(3, 3, Statistic::Inv).is_err());
    }

    #[test]
    fn val_inv_equals_minimaj_n4() {
        for k in 0..4 {
            assert_eq!(val_expansion(4, k, Statistic::Inv).unwrap(), val_expansion(4, k, Statistic::Minimaj).unwrap());
        }
    }

    #[test]
    fn schur_round_trip_on_basis_elements() {
        for n in 1..=5 {
            for l in partitions_of(n) {
                let mut coefficients: BTreeMap<_, _> =
                    partitions_of(n).into_iter().map(|m| (m, QPoly::zero())).collect();
                coefficients.insert(l.clone(), QPoly::one());
                let s = SymFuncExpansion { basis: Basis::Schur, n, k: None, coefficients };
                let m = schur_to_monomial(&s).unwrap();
                assert_eq!(monomial_to_schur(&m).unwrap(), s);
            }
        }
    }

    #[test]
    fn complete_homogeneous_gives_kostka_column() {
        // all monomial coefficients 1 is h_n, whose Schur expansion is s_(n)
        for n in 1..=5 {
            let coefficients = partitions_of(n).into_iter().map(|m| (m, QPoly::one())).collect();
            let e = SymFuncExpansion { basis: Basis::Monomial, n, k: None, coefficients };
            let s = monomial_to_schur(&e).unwrap();
            for l in partitions_of(n) {
                let want = if l.0 == vec![n] { QPoly::one() } else { QPoly::zero() };
                assert_eq!(s.coeff(&l), want);
            }
        }
    }

    #[test]
    fn conversion_rejects_wrong_basis() {
        let e = val_expansion(3, 1, Statistic::Inv).unwrap();
        assert!(schur_to_monomial(&e).is_err());
    }

    #[test]
    fn shape_fixed_sum_is_not_symmetric() {
        let r = verify_shape_non_symmetry();
        assert!(r.all_pass(), "{}", r.to_pretty());
    }

    #[test]
    fn descent_refined_small() {
        assert!(verify_descent_refined(4).all_pass());
        let e = descent_refined_expansion(3, 3, &DescentSet(vec![])).unwrap();
        // increasing words of three singletons: weight (3), (2,1), (1,1,1) each once
        for l in partitions_of(3) {
            assert_eq!(e.coeff(&l), QPoly::one());
        }
        assert!(descent_refined_expansion(3, 2, &DescentSet(vec![3])).is_err());
    }

    #[test]
    fn json_shape() {
        let e = val_expansion(2, 0, Statistic::Inv).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(
            s,
            r#"{"basis":"monomial","n":2,"k":0,"coefficients":[{"partition":[1,1],"poly":["1"]},{"partition":[2],"poly":[]}]}"#
        );
        let back: SymFuncExpansion = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }
}
