//! The switch maps `t_i`: on words, and on ordered multiset partitions through
//! `i`-drops and the decorated segmented word.
//!
//! Positions are absolute 0-based letter offsets in the underlying word;
//! intervals are half-open. A segmentation is handled as a set of cuts, where
//! cut `p` (for `1 <= p < n`) separates letters `p - 1` and `p`.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Composition, Letter, OrderedMultisetPartition, SegmentedWord, Word};
use crate::statistics::segmented_word;

/// The `i`-decoration of a segmented word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decoration {
    pub base: SegmentedWord,
    pub drops: Vec<Range<usize>>,
    pub overlines: Vec<Range<usize>>,
    pub letter: Letter,
}

/// `t_i` on words: freeze every adjacent pair `(i+1) i`, then replace each
/// maximal unfrozen run `i^a (i+1)^b` by `i^b (i+1)^a`.
pub fn word_switch(w: &[Letter], i: Letter) -> Word {
    let n = w.len();
    let mut frozen = vec![false; n];
    for p in 1..n {
        if w[p - 1] == i + 1 && w[p] == i {
            frozen[p - 1] = true;
            frozen[p] = true;
        }
    }
    let free = |p: usize| !frozen[p] && (w[p] == i || w[p] == i + 1);
    let mut out = w.to_vec();
    let mut p = 0;
    while p < n {
        if !free(p) {
            p += 1;
            continue;
        }
        let start = p;
        while p < n && free(p) {
            p += 1;
        }
        let b = w[start..p].iter().filter(|&&x| x == i + 1).count();
        for (k, slot) in out[start..p].iter_mut().enumerate() {
            *slot = if k < b { i } else { i + 1 };
        }
    }
    Word(out)
}

/// All `i`-drops, left to right. A drop starts a segment with `i+1` and is
/// either the whole segment `(i+1) j.. i`, or the segment `(i+1) j..`
/// together with the first letter `i` of the next segment; the `j`s avoid
/// `i` and `i+1`.
pub fn find_drops(sw: &SegmentedWord, i: Letter) -> Vec<Range<usize>> {
    let outside = |x: &Letter| *x != i && *x != i + 1;
    let segments = sw.segments();
    let starts = sw.segment_starts();
    let mut drops = Vec::new();
    for (idx, seg) in segments.iter().enumerate() {
        if seg[0] != i + 1 {
            continue;
        }
        let start = starts[idx];
        let (last, inner) = seg[1..].split_last().map_or((None, &[][..]), |(l, r)| (Some(*l), r));
        if last == Some(i) && inner.iter().all(outside) {
            drops.push(start..start + seg.len());
        } else if seg[1..].iter().all(outside) && segments.get(idx + 1).is_some_and(|next| next[0] == i) {
            drops.push(start..start + seg.len() + 1);
        }
    }
    drops
}

/// Underlines the `i`-drops and overlines the maximal remaining runs of `i`
/// and `i+1`. Each overline must read `i^a (i+1)^b`; anything else means the
/// input was not produced by the segmented-word map.
pub fn decorate(sw: &SegmentedWord, i: Letter) -> Result<Decoration> {
    let w = &sw.word;
    let drops = find_drops(sw, i);
    let mut in_drop = vec![false; w.len()];
    for d in &drops {
        for slot in &mut in_drop[d.clone()] {
            *slot = true;
        }
    }
    let free = |p: usize| !in_drop[p] && (w[p] == i || w[p] == i + 1);
    let mut overlines = Vec::new();
    let mut p = 0;
    while p < w.len() {
        if !free(p) {
            p += 1;
            continue;
        }
        let start = p;
        while p < w.len() && free(p) {
            p += 1;
        }
        if let Some(q) = (start + 1..p).find(|&q| w[q - 1] == i + 1 && w[q] == i) {
            return Err(Error::Decoration { position: q, reason: format!("overlined run contains {}{}", i + 1, i) });
        }
        overlines.push(start..p);
    }
    Ok(Decoration { base: sw.clone(), drops, overlines, letter: i })
}

fn cuts_of(seg: &Composition, n: usize) -> Vec<bool> {
    let mut cuts = vec![false; n + 1];
    let mut pos = 0;
    for &len in seg.iter() {
        pos += len;
        cuts[pos] = true;
    }
    cuts[0] = true;
    cuts
}

fn segmentation_of(cuts: &[bool]) -> Composition {
    let n = cuts.len() - 1;
    let mut parts = Vec::new();
    let mut last = 0;
    for (p, &c) in cuts.iter().enumerate().skip(1) {
        if c || p == n {
            parts.push(p - last);
            last = p;
        }
    }
    Composition(parts)
}

/// The transformed segmented word `w'` of the switch-map construction.
pub fn switch_segmented(sw: &SegmentedWord, i: Letter) -> Result<SegmentedWord> {
    let deco = decorate(sw, i)?;
    let w = &sw.word;
    let n = w.len();
    let orig = cuts_of(&sw.segmentation, n);
    let mut cuts = orig.clone();
    let mut letters = w.0.clone();
    for run in &deco.overlines {
        let s = run.start;
        let a = w[run.clone()].iter().filter(|&&x| x == i).count();
        let b = run.len() - a;
        let preceding = deco.drops.iter().find(|d| d.end == s);
        match (a > 0, b > 0) {
            (true, false) => {
                for x in &mut letters[run.clone()] {
                    *x = i + 1;
                }
                if preceding.is_some() && !orig[s - 1] && orig[s] {
                    cuts[s - 1] = true;
                    cuts[s] = false;
                }
            }
            (false, true) => {
                for x in &mut letters[run.clone()] {
                    *x = i;
                }
                if preceding.is_some() && orig[s - 1] && !orig[s] {
                    cuts[s - 1] = false;
                    cuts[s] = true;
                }
            }
            (true, true) => {
                for (k, x) in letters[run.clone()].iter_mut().enumerate() {
                    *x = if k < b { i } else { i + 1 };
                }
                let junction = orig[s + a];
                cuts[s + 1..run.end].fill(true);
                cuts[s + b] = junction;
            }
            (false, false) => unreachable!("overlines are nonempty"),
        }
    }
    cuts[n] = true;
    Ok(SegmentedWord { word: Word(letters), segmentation: segmentation_of(&cuts) })
}

/// `w'` for `mu`; equals the segmented word of `omp_switch(mu, i)`.
pub fn switched_word(mu: &OrderedMultisetPartition, i: Letter) -> SegmentedWord {
    switch_segmented(&segmented_word(mu), i).expect("segmented words of partitions always decorate")
}

/// `t_i` on ordered multiset partitions: blocks are the letter sets of the
/// segments of `w'`.
pub fn omp_switch(mu: &OrderedMultisetPartition, i: Letter) -> OrderedMultisetPartition {
    assert!(i >= 1, "switch index must be positive");
    let sw = switched_word(mu, i);
    let blocks = sw
        .segments()
        .iter()
        .map(|s| {
            let mut b = s.to_vec();
            b.sort_unstable();
            b
        })
        .collect();
    let out = OrderedMultisetPartition::from_sorted_blocks(blocks);
    debug_assert_eq!(segmented_word(&out), sw, "w(t_i mu) must equal w' for {mu}");
    out
}
