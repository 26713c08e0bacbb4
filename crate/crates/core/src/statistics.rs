//! Word and partition statistics, the segmented-word map, standardization,
//! compression and the cyclic actions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{next_permutation, Composition, Letter, OrderedMultisetPartition, SegmentedWord, Word};

/// Descent positions `i` (1-based) with `w_i > w_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DescentSet(pub Vec<usize>);

impl DescentSet {
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

pub fn inv_word<T: Ord>(w: &[T]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

pub fn descent_set<T: Ord>(w: &[T]) -> DescentSet {
    DescentSet(w.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).collect())
}

pub fn maj_word<T: Ord>(w: &[T]) -> usize {
    w.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).sum()
}

/// Pairs `(l < m, j in B_l)` with `j > min(B_m)`.
pub fn inv_omp(mu: &OrderedMultisetPartition) -> usize {
    inv_blocks(mu.blocks())
}

pub(crate) fn inv_blocks<T: Ord>(blocks: &[Vec<T>]) -> usize {
    let mut count = 0;
    for (m, later) in blocks.iter().enumerate() {
        let min = &later[0];
        for earlier in &blocks[..m] {
            count += earlier.iter().filter(|j| *j > min).count();
        }
    }
    count
}

/// All words obtained by permuting letters inside each block, in
/// lexicographic order.
pub fn rearrangement_class(mu: &OrderedMultisetPartition) -> impl Iterator<Item = Word> {
    rearrangements(mu.blocks().to_vec()).map(|blocks| Word(blocks.concat()))
}

/// Odometer over per-block permutations; the last block varies fastest.
pub(crate) fn rearrangements<T: Ord + Clone>(start: Vec<Vec<T>>) -> impl Iterator<Item = Vec<Vec<T>>> {
    let mut next = Some(
        start
            .into_iter()
            .map(|mut b| {
                b.sort();
                b
            })
            .collect::<Vec<_>>(),
    );
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for idx in (0..succ.len()).rev() {
            if next_permutation(&mut succ[idx]) {
                next = Some(succ);
                break;
            }
            // wrapped around: reset to sorted and carry left
            succ[idx].sort();
        }
        Some(current)
    })
}

/// The backward rotation map on blocks: the last block is written increasing;
/// each earlier block `j_1 < ... < j_a` is written `j_{m+1} ... j_a j_1 ... j_m`
/// where `m` is maximal with `j_m <= r` and `r` starts the next segment.
pub fn segment_blocks<T: Ord + Copy>(blocks: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut segments: Vec<Vec<T>> = vec![Vec::new(); blocks.len()];
    for idx in (0..blocks.len()).rev() {
        let mut block = blocks[idx].clone();
        block.sort();
        if idx + 1 < blocks.len() {
            let r = segments[idx + 1][0];
            let m = block.partition_point(|x| *x <= r);
            block.rotate_left(m);
        }
        segments[idx] = block;
    }
    segments
}

pub fn segmented_word(mu: &OrderedMultisetPartition) -> SegmentedWord {
    let segments = segment_blocks(mu.blocks());
    SegmentedWord { segmentation: Composition(segments.iter().map(Vec::len).collect()), word: Word(segments.concat()) }
}

/// `maj` of the segmented word, which is the minimum of `maj` over the
/// rearrangement class.
pub fn minimaj(mu: &OrderedMultisetPartition) -> usize {
    maj_word(&segment_blocks(mu.blocks()).concat())
}

pub fn minimaj_brute(mu: &OrderedMultisetPartition) -> usize {
    rearrangement_class(mu).map(|w| maj_word(&w)).min().unwrap_or(0)
}

/// Relabels disjoint integer sets to `1..N` preserving relative order.
pub fn standardize(blocks: &[Vec<i64>]) -> Result<OrderedMultisetPartition> {
    let mut rank: BTreeMap<i64, Letter> = BTreeMap::new();
    for block in blocks {
        if block.is_empty() {
            return Err(Error::invalid("standardize", "empty block"));
        }
        for &x in block {
            if rank.insert(x, 0).is_some() {
                return Err(Error::Overlap { value: x });
            }
        }
    }
    for (r, v) in rank.values_mut().enumerate() {
        *v = r as Letter + 1;
    }
    let relabeled = blocks
        .iter()
        .map(|b| {
            let mut nb: Vec<Letter> = b.iter().map(|x| rank[x]).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    Ok(OrderedMultisetPartition::from_sorted_blocks(relabeled))
}

/// Replaces the last block by its minimum letter.
pub fn compress(mu: &OrderedMultisetPartition) -> OrderedMultisetPartition {
    let mut blocks = mu.blocks().to_vec();
    if let Some(last) = blocks.last_mut() {
        last.truncate(1);
    }
    OrderedMultisetPartition::from_sorted_blocks(blocks)
}

fn cycle_letter(x: Letter, m: u32) -> Result<Letter> {
    match x {
        0 => Err(Error::invalid("letter", "letters must be positive")),
        1 => Ok(m),
        x if x > m => Err(Error::LetterOutOfRange { letter: x, alphabet: m }),
        x => Ok(x - 1),
    }
}

/// Decrements every letter modulo `m` (`1` goes to `m`).
pub fn cycle_word(w: &[Letter], m: u32) -> Result<Word> {
    w.iter().map(|&x| cycle_letter(x, m)).collect::<Result<Vec<_>>>().map(Word)
}

pub fn cycle_omp(mu: &OrderedMultisetPartition, m: u32) -> Result<OrderedMultisetPartition> {
    let blocks = mu
        .blocks()
        .iter()
        .map(|b| {
            let mut nb = cycle_word(b, m)?.0;
            nb.sort_unstable();
            Ok(nb)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrderedMultisetPartition::from_sorted_blocks(blocks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enum_omp, enum_osp, enum_words, parse_omp, OmpConstraint, WeakComposition};
    use crate::qpoly::{q_factorial, QPoly};

    fn omp(s: &str) -> OrderedMultisetPartition {
        parse_omp(s).unwrap()
    }

    fn digits(s: &str) -> Vec<Letter> {
        s.bytes().map(|b| (b - b'0') as Letter).collect()
    }

    #[test]
    fn word_inv_and_maj() {
        assert_eq!(inv_word(&digits("12345")), 0);
        assert_eq!(inv_word(&digits("54321")), 10);
        for (w, m) in [("13123", 2), ("31123", 1), ("13132", 6), ("31132", 5), ("725648139", 11)] {
            assert_eq!(maj_word(&digits(w)), m, "{w}");
        }
        assert_eq!(descent_set(&digits("725648139")).0, vec![1, 4, 6]);
        assert_eq!(maj_word(&digits("1234")), 0);
    }

    #[test]
    fn macmahon_small() {
        for n in 0..=6usize {
            let words: Vec<_> = enum_words(&WeakComposition(vec![1; n])).collect();
            let mut inv = vec![0u64; n * n + 1];
            let mut maj = vec![0u64; n * n + 1];
            for w in &words {
                inv[inv_word(w)] += 1;
                maj[maj_word(w)] += 1;
            }
            assert_eq!(QPoly::from_histogram(&inv), q_factorial(n));
            assert_eq!(QPoly::from_histogram(&maj), q_factorial(n));
        }
    }

    #[test]
    fn inv_omp_examples() {
        assert_eq!(inv_omp(&omp("25|1|34")), 3);
        assert_eq!(inv_omp(&omp("245|134|2457|4")), 10);
        assert_eq!(inv_omp(&omp("12345")), 0);
    }

    #[test]
    fn inv_omp_of_singletons_is_word_inv() {
        for w in enum_words(&WeakComposition(vec![1, 1, 2, 1])) {
            let mu = OrderedMultisetPartition::new(w.iter().map(|&x| vec![x]).collect()).unwrap();
            // strict inversions only: equal letters are never counted
            assert_eq!(inv_omp(&mu), inv_word(&w));
        }
    }

    #[test]
    fn rearrangement_class_examples() {
        let got: Vec<String> = rearrangement_class(&omp("13|1|23")).map(|w| w.to_string()).collect();
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(sorted, ["13123", "13132", "31123", "31132"]);
        let s: Vec<String> = rearrangement_class(&omp("25|1|34")).map(|w| w.to_string()).collect();
        assert_eq!(s.len(), 4);
        assert!(s.contains(&"25134".to_string()));
        assert_eq!(rearrangement_class(&omp("3|1|2")).count(), 1);
        assert_eq!(rearrangement_class(&omp("123|45|6")).count(), 12);
    }

    #[test]
    fn segmented_word_examples() {
        assert_eq!(segmented_word(&omp("257|6|148|39")).to_string(), "725.6.481.39");
        assert_eq!(segmented_word(&omp("124|2|13|245|34")).to_string(), "412.2.13.452.34");
        assert_eq!(segmented_word(&omp("1234")).to_string(), "1234");
    }

    #[test]
    fn minimaj_examples() {
        assert_eq!(minimaj(&omp("13|1|23")), 1);
        assert_eq!(minimaj(&omp("25|1|34")), 2);
        assert_eq!(minimaj(&omp("124|2|13|245|34")), 13);
        assert_eq!(minimaj(&omp("257|6|148|39")), 11);
        for s in ["13|1|23", "25|1|34", "124|2|13|245|34"] {
            assert_eq!(minimaj(&omp(s)), minimaj_brute(&omp(s)));
        }
    }

    #[test]
    fn minimaj_matches_brute_force_small() {
        for n in 1..=5 {
            for mu in enum_osp(n, OmpConstraint::All).unwrap() {
                assert_eq!(minimaj(&mu), minimaj_brute(&mu), "{mu}");
            }
        }
        for mu in enum_omp(&WeakComposition(vec![2, 2, 1]), OmpConstraint::All).unwrap() {
            assert_eq!(minimaj(&mu), minimaj_brute(&mu), "{mu}");
        }
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[vec![2, 9], vec![5], vec![3, 7]]).unwrap(), omp("15|3|24"));
        assert_eq!(standardize(&[vec![1, 3], vec![5, 8], vec![2]]).unwrap(), omp("13|45|2"));
        assert_eq!(standardize(&[vec![1, 3], vec![2]]).unwrap(), omp("13|2"));
        assert_eq!(standardize(&[vec![-4, 10], vec![0]]).unwrap(), omp("13|2"));
        assert_eq!(standardize(&[vec![1, 3], vec![3]]), Err(Error::Overlap { value: 3 }));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycle_word(&digits("35278416"), 8).unwrap().to_string(), "24167385");
        assert_eq!(cycle_word(&[5], 4), Err(Error::LetterOutOfRange { letter: 5, alphabet: 4 }));
        let mu = omp("13|2|34");
        let mut x = mu.clone();
        for _ in 0..5 {
            x = cycle_omp(&x, 5).unwrap();
        }
        assert_eq!(x, mu);
        assert_eq!(cycle_omp(&mu, 4).unwrap(), omp("24|1|23"));
    }

    #[test]
    fn compress_keeps_min() {
        assert_eq!(compress(&omp("25|1|34")), omp("25|1|3"));
        assert_eq!(minimaj(&compress(&omp("25|1|34"))), minimaj(&omp("25|1|34")));
    }
}
