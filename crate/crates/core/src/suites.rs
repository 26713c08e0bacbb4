//! Named verification suites with explicit size bounds.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::colored::{
    verify_colored_equidistribution, verify_colored_examples, verify_colored_last_block_identity, verify_colored_lemmas,
};
use crate::distributions::{
    verify_block_count_formula, verify_counterexample, verify_macmahon, verify_multiset_equidistribution,
    verify_recursions, verify_refined_last_block, verify_shape_equidistribution, Granularity,
};
use crate::error::{Error, Result};
use crate::partitions::{
    enum_compositions, enum_omp, enum_osp, enum_weak_compositions, parse_omp, Letter, OmpConstraint,
    OrderedMultisetPartition, WeakComposition,
};
use crate::report::{Report, ReportEntry};
use crate::statistics::{
    compress, cycle_omp, cycle_word, descent_set, maj_word, minimaj, rearrangement_class, segmented_word, standardize,
};
use crate::switch_maps::{decorate, omp_switch, switched_word};
use crate::symfunc::{verify_descent_refined, verify_schur, verify_val_symmetry};

/// Largest alphabet used by the word-level sweeps.
pub const WORD_ALPHABET: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub n: usize,
    pub r: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { n: 5, r: 2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Macmahon,
    ShapeEquidistribution,
    BlockCountFormula,
    Counterexample,
    MultisetEquidistribution,
    RefinedLastBlock,
    Recursions,
    SwitchMaps,
    Lemmas,
    ValSymmetry,
    Schur,
    ColoredEquidistribution,
    ColoredLastBlock,
    All,
}

impl Suite {
    pub const EACH: [Suite; 13] = [
        Suite::Macmahon,
        Suite::ShapeEquidistribution,
        Suite::BlockCountFormula,
        Suite::Counterexample,
        Suite::MultisetEquidistribution,
        Suite::RefinedLastBlock,
        Suite::Recursions,
        Suite::SwitchMaps,
        Suite::Lemmas,
        Suite::ValSymmetry,
        Suite::Schur,
        Suite::ColoredEquidistribution,
        Suite::ColoredLastBlock,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Macmahon => "macmahon",
            Suite::ShapeEquidistribution => "theorem-2-7",
            Suite::BlockCountFormula => "corollary-2-8",
            Suite::Counterexample => "counterexample",
            Suite::MultisetEquidistribution => "theorem-3-13",
            Suite::RefinedLastBlock => "refined-last-block",
            Suite::Recursions => "recursions",
            Suite::SwitchMaps => "switch-maps",
            Suite::Lemmas => "lemmas",
            Suite::ValSymmetry => "val-symmetry",
            Suite::Schur => "schur",
            Suite::ColoredEquidistribution => "theorem-4-4",
            Suite::ColoredLastBlock => "prop-4-8",
            Suite::All => "all",
        }
    }

    pub fn run(self, bounds: Bounds) -> Report {
        let n = bounds.n;
        let r = bounds.r;
        match self {
            Suite::Macmahon => verify_macmahon(n),
            Suite::ShapeEquidistribution => concat((1..=n).map(verify_shape_equidistribution)),
            Suite::BlockCountFormula => concat((1..=n).map(verify_block_count_formula)),
            Suite::Counterexample => {
                let mut report = verify_counterexample();
                report.extend(shape_failure_exists(n));
                report
            }
            Suite::MultisetEquidistribution => verify_multiset_equidistribution(n, Granularity::Blocks),
            Suite::RefinedLastBlock => verify_refined_last_block(n),
            Suite::Recursions => verify_recursions(n),
            Suite::SwitchMaps => verify_switch_maps(n, WORD_ALPHABET),
            Suite::Lemmas => verify_lemmas(n, WORD_ALPHABET),
            Suite::ValSymmetry => {
                let mut report = verify_val_symmetry(n);
                report.extend(verify_descent_refined(n));
                report
            }
            Suite::Schur => verify_schur(n),
            Suite::ColoredEquidistribution => {
                let mut report =
                    concat((1..=n).flat_map(|m| (1..=r).map(move |c| verify_colored_equidistribution(m, c))));
                report.extend(verify_colored_examples());
                report.extend(verify_colored_lemmas(n.min(4), r));
                report
            }
            Suite::ColoredLastBlock => verify_colored_last_block_identity(n, r),
            Suite::All => concat(Suite::EACH.iter().map(|s| s.run(bounds))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::invalid("suite", format!("unknown suite {s:?}")))
    }
}

fn concat(reports: impl Iterator<Item = Report>) -> Report {
    let mut out = Report::default();
    for r in reports {
        out.extend(r);
    }
    out
}

/// Shape-level equidistribution fails somewhere among multiset weights of
/// size at most `n` (it holds for set partitions).
fn shape_failure_exists(n: usize) -> Report {
    let report = verify_multiset_equidistribution(n.max(5), Granularity::Shape);
    let failing = report.failures().count() as u64;
    Report::new(vec![ReportEntry::count(
        "some fixed-shape multiset class has I != M",
        format!("n<={} failing={failing}", n.max(5)),
        u64::from(failing > 0),
        1,
    )])
}

/// Every ordered multiset partition of size at most `n` over `[m]`.
fn all_omps(n: usize, m: usize) -> Vec<(WeakComposition, OrderedMultisetPartition)> {
    (0..=n)
        .flat_map(|size| enum_weak_compositions(size, m))
        .flat_map(|beta| {
            enum_omp(&beta, OmpConstraint::All)
                .expect("valid weight")
                .map(move |mu| (beta.clone(), mu))
                .collect::<Vec<_>>()
        })
        .collect()
}

struct Tally {
    name: &'static str,
    passed: u64,
    total: u64,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, passed: 0, total: 0 }
    }

    fn check(&mut self, ok: bool) {
        self.total += 1;
        self.passed += u64::from(ok);
    }

    fn entry(&self, instance: &str) -> ReportEntry {
        ReportEntry::count(self.name, instance, self.passed, self.total)
    }
}

fn merge(parts: Vec<Vec<Tally>>, instance: &str) -> Vec<ReportEntry> {
    let mut acc: Vec<Tally> = Vec::new();
    for part in parts {
        if acc.is_empty() {
            acc = part;
            continue;
        }
        for (a, p) in acc.iter_mut().zip(part) {
            a.passed += p.passed;
            a.total += p.total;
        }
    }
    acc.iter().map(|t| t.entry(instance)).collect()
}

/// The switch maps over all ordered multiset partitions of size at most `n`
/// with alphabet `[m]`, plus commutation and the worked example.
pub fn verify_switch_maps(n: usize, m: usize) -> Report {
    let omps = all_omps(n, m);
    let parts: Vec<Vec<Tally>> = omps
        .par_chunks(256)
        .map(|chunk| {
            let mut t = [
                Tally::new("t_i is an involution"),
                Tally::new("t_i preserves block count and size"),
                Tally::new("t_i transposes the weight"),
                Tally::new("t_i preserves Des(w(mu))"),
                Tally::new("t_i preserves minimaj"),
                Tally::new("w(t_i mu) is the transformed segmented word"),
                Tally::new("t_i t_j = t_j t_i for |i-j| > 1"),
            ];
            for (beta, mu) in chunk {
                let padded = beta.padded(m);
                let sw = segmented_word(mu);
                let images: Vec<OrderedMultisetPartition> = (1..m as Letter).map(|i| omp_switch(mu, i)).collect();
                for (idx, tau) in images.iter().enumerate() {
                    let i = idx as Letter + 1;
                    t[0].check(omp_switch(tau, i) == *mu);
                    t[1].check(tau.num_blocks() == mu.num_blocks() && tau.size() == mu.size());
                    t[2].check(tau.weight_in(m) == padded.transpose(i as usize));
                    t[3].check(descent_set(&segmented_word(tau).word) == descent_set(&sw.word));
                    t[4].check(minimaj(tau) == minimaj(mu));
                    t[5].check(segmented_word(tau) == switched_word(mu, i));
                }
                for i in 1..m as Letter {
                    for j in i + 2..m as Letter {
                        let ij = omp_switch(&images[j as usize - 1], i);
                        let ji = omp_switch(&images[i as usize - 1], j);
                        t[6].check(ij == ji);
                    }
                }
            }
            t.into_iter().collect()
        })
        .collect();
    let mut entries = merge(parts, &format!("size<={n} alphabet<={m}"));
    let mu = parse_omp("1237|34|4|3|3|4|3467|3|3|457|356").expect("valid");
    let want = parse_omp("12347|4|4|3|3|4|467|34|4|457|356").expect("valid");
    let got = omp_switch(&mu, 3);
    entries.push(ReportEntry::count("worked t_3 example", format!("{mu} -> {got}"), u64::from(got == want), 1));
    Report::new(entries)
}

/// Pointwise lemmas on ordered set partitions of `[n']` and on ordered
/// multiset partitions of size `n' <= n` over `[m]`.
pub fn verify_lemmas(n: usize, m: usize) -> Report {
    let mut entries = Vec::new();

    let sizes: Vec<usize> = (1..=n).collect();
    let set_parts: Vec<Vec<ReportEntry>> = sizes
        .par_iter()
        .map(|&size| {
            let mut uniq = Tally::new("maj has a unique minimizer at pi(sigma)");
            let mut comp = Tally::new("minimaj compression with standardization");
            let mut cyc = Tally::new("maj(c.pi) = maj(pi) + 1 when pi_n != 1");
            let mut comm = Tally::new("pi(c.sigma) = c.pi(sigma) when last block is a singleton");
            for alpha in enum_compositions(size) {
                for sigma in enum_osp(size, OmpConstraint::Shape(alpha)).expect("valid shape") {
                    uniq.check(unique_minimizer(&sigma));
                    let mut blocks: Vec<Vec<i64>> =
                        sigma.blocks().iter().map(|b| b.iter().map(|&x| i64::from(x)).collect()).collect();
                    blocks.last_mut().expect("nonempty").truncate(1);
                    let small = standardize(&blocks).expect("disjoint");
                    comp.check(minimaj(&sigma) == minimaj(&small));
                    check_commute(&sigma, size as u32, &mut comm);
                }
            }
            for pi in crate::partitions::enum_words(&WeakComposition(vec![1; size])) {
                if pi.last() != Some(&1) {
                    let c = cycle_word(&pi, size as u32).expect("in range");
                    cyc.check(maj_word(&c) == maj_word(&pi) + 1);
                }
            }
            let inst = format!("n={size}");
            vec![uniq.entry(&inst), comp.entry(&inst), cyc.entry(&inst), comm.entry(&inst)]
        })
        .collect();
    entries.extend(set_parts.into_iter().flatten());

    let omps = all_omps(n, m);
    let parts: Vec<Vec<Tally>> = omps
        .par_chunks(256)
        .map(|chunk| {
            let mut uniq = Tally::new("maj has a unique minimizer at w(mu)");
            let mut comp = Tally::new("minimaj(B_1|...|B_k) = minimaj(B_1|...|min B_k)");
            let mut cyc = Tally::new("maj(c.w) = maj(w) + beta_1 when w_n != 1");
            let mut comm = Tally::new("w(c.mu) = c.w(mu) when last block is a singleton");
            let mut tri = Tally::new("each segment satisfies the i/(i+1) trichotomy");
            let mut over = Tally::new("overlined runs read i^a (i+1)^b");
            for (beta, mu) in chunk {
                if mu.num_blocks() == 0 {
                    continue;
                }
                uniq.check(unique_minimizer(mu));
                comp.check(minimaj(mu) == minimaj(&compress(mu)));
                check_commute(mu, m as u32, &mut comm);
                let w = mu.reading_word();
                if w.last() != Some(&1) {
                    let c = cycle_word(&w, m as u32).expect("in range");
                    cyc.check(maj_word(&c) == maj_word(&w) + beta.padded(m)[0]);
                }
                let sw = segmented_word(mu);
                for i in 1..m as Letter {
                    tri.check(trichotomy_holds(&sw.segments(), i));
                    over.check(decorate(&sw, i).is_ok());
                }
            }
            vec![uniq, comp, cyc, comm, tri, over]
        })
        .collect();
    entries.extend(merge(parts, &format!("size<={n} alphabet<={m}")));
    Report::new(entries)
}

fn unique_minimizer(mu: &OrderedMultisetPartition) -> bool {
    let target = segmented_word(mu).word;
    let best = maj_word(&target);
    rearrangement_class(mu).all(|w| {
        let v = maj_word(&w);
        v > best || (v == best && w == target)
    })
}

fn check_commute(mu: &OrderedMultisetPartition, m: u32, tally: &mut Tally) {
    if mu.blocks().last().map(Vec::len) != Some(1) {
        return;
    }
    let sw = segmented_word(mu);
    let lhs = segmented_word(&cycle_omp(mu, m).expect("in range"));
    let word = cycle_word(&sw.word, m).expect("in range");
    tally.check(lhs.word == word && lhs.segmentation == sw.segmentation);
}

fn trichotomy_holds(segments: &[&[Letter]], i: Letter) -> bool {
    segments.iter().enumerate().all(|(l, seg)| {
        let hits = seg.iter().filter(|&&x| x == i || x == i + 1).count();
        if hits <= 1 {
            return true;
        }
        let adjacent = seg.windows(2).any(|p| p == [i, i + 1]);
        let wrap = seg.first() == Some(&(i + 1))
            && seg.last() == Some(&i)
            && segments.get(l + 1).and_then(|s| s.first()) == Some(&i);
        adjacent || wrap
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::EACH.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("theorem-9-9".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let b = Bounds { n: 3, r: 2 };
        for s in Suite::EACH {
            let report = s.run(b);
            assert!(!report.is_empty(), "{s}");
            assert!(report.all_pass(), "{s}\n{}", report.to_pretty());
        }
    }

    #[test]
    fn trichotomy_rejects_bad_segment() {
        let bad: Vec<&[Letter]> = vec![&[4, 1, 3], &[5]];
        assert!(!trichotomy_holds(&bad, 3));
        let good: Vec<&[Letter]> = vec![&[4, 1, 3], &[3]];
        assert!(trichotomy_holds(&good, 3));
    }
}
