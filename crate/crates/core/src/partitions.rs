//! Words, compositions and ordered multiset partitions, with lazy enumerators
//! and the text notation `25|1|34` / `725.6.481.39`.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseErrorKind, Result};

pub type Letter = u32;

macro_rules! seq_newtype {
    ($name:ident, $elem:ty) => {
        impl Deref for $name {
            type Target = [$elem];
            fn deref(&self) -> &[$elem] {
                &self.0
            }
        }

        impl From<$name> for Vec<$elem> {
            fn from(v: $name) -> Vec<$elem> {
                v.0
            }
        }
    };
}

/// A finite word over the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);
seq_newtype!(Word, Letter);

impl Word {
    /// Multiplicity vector of length `max(letter)`.
    pub fn weight(&self) -> WeakComposition {
        let m = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut beta = vec![0; m];
        for &x in &self.0 {
            beta[x as usize - 1] += 1;
        }
        WeakComposition(beta)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_letters(&self.0, letters_need_commas(&self.0)))
    }
}

/// A sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);
seq_newtype!(Composition, usize);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("composition", format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// A sequence of nonnegative parts; the weight of a word or partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(pub Vec<usize>);
seq_newtype!(WeakComposition, usize);

impl WeakComposition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Drops trailing zero parts.
    pub fn trimmed(&self) -> WeakComposition {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        WeakComposition(v)
    }

    /// Pads with zeros up to length `m` (no-op if already longer).
    pub fn padded(&self, m: usize) -> WeakComposition {
        let mut v = self.0.clone();
        if v.len() < m {
            v.resize(m, 0);
        }
        WeakComposition(v)
    }

    /// `s_i` acting on positions: swaps parts `i` and `i+1` (1-based).
    pub fn transpose(&self, i: usize) -> WeakComposition {
        let mut v = self.padded(i + 1).0;
        v.swap(i - 1, i);
        WeakComposition(v)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (idx, p) in parts.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// A strictly increasing set of 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub Vec<usize>);
seq_newtype!(Subset, usize);

/// The indicator vector `chi(S)` of length `m`.
pub fn subset_indicator(s: &Subset, m: usize) -> WeakComposition {
    let mut v = vec![0; m];
    for &i in s.iter() {
        v[i - 1] = 1;
    }
    WeakComposition(v)
}

/// A sequence of nonempty strictly increasing blocks of positive letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Letter>>", into = "Vec<Vec<Letter>>")]
pub struct OrderedMultisetPartition {
    blocks: Vec<Vec<Letter>>,
}

impl OrderedMultisetPartition {
    /// Sorts each block and validates: blocks nonempty, letters positive and
    /// not repeated inside a block.
    pub fn new(mut blocks: Vec<Vec<Letter>>) -> Result<Self> {
        for (idx, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::invalid("partition", format!("block {} is empty", idx + 1)));
            }
            block.sort_unstable();
            if block[0] == 0 {
                return Err(Error::invalid("partition", "letters must be positive"));
            }
            if let Some(w) = block.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::invalid("partition", format!("letter {} repeated in block {}", w[0], idx + 1)));
            }
        }
        Ok(OrderedMultisetPartition { blocks })
    }

    /// Caller guarantees every block is nonempty and strictly increasing.
    pub(crate) fn from_sorted_blocks(blocks: Vec<Vec<Letter>>) -> Self {
        debug_assert!(blocks.iter().all(|b| !b.is_empty() && b.windows(2).all(|w| w[0] < w[1]) && b[0] >= 1));
        OrderedMultisetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<Letter>> {
        self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn max_letter(&self) -> Letter {
        self.blocks.iter().filter_map(|b| b.last().copied()).max().unwrap_or(0)
    }

    pub fn shape(&self) -> Composition {
        Composition(self.blocks.iter().map(Vec::len).collect())
    }

    /// Letter multiplicities, length `max_letter`.
    pub fn weight(&self) -> WeakComposition {
        self.weight_in(self.max_letter() as usize)
    }

    /// Letter multiplicities padded to alphabet size `m` (at least `max_letter`).
    pub fn weight_in(&self, m: usize) -> WeakComposition {
        let mut beta = vec![0; m.max(self.max_letter() as usize)];
        for &x in self.blocks.iter().flatten() {
            beta[x as usize - 1] += 1;
        }
        WeakComposition(beta)
    }

    /// True when the weight is `(1,...,1)`.
    pub fn is_set_partition(&self) -> bool {
        self.weight().iter().all(|&c| c == 1)
    }

    /// The concatenation of the blocks in increasing order.
    pub fn reading_word(&self) -> Word {
        Word(self.blocks.concat())
    }
}

impl TryFrom<Vec<Vec<Letter>>> for OrderedMultisetPartition {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<Letter>>) -> Result<Self> {
        Self::new(blocks)
    }
}

impl From<OrderedMultisetPartition> for Vec<Vec<Letter>> {
    fn from(mu: OrderedMultisetPartition) -> Self {
        mu.blocks
    }
}

impl fmt::Display for OrderedMultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_omp(self))
    }
}

impl std::str::FromStr for OrderedMultisetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_omp(s)
    }
}

/// A word cut into contiguous nonempty segments.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SegmentedWord {
    pub word: Word,
    pub segmentation: Composition,
}

impl SegmentedWord {
    pub fn new(word: Word, segmentation: Composition) -> Result<Self> {
        if segmentation.size() != word.len() {
            return Err(Error::invalid(
                "segmented word",
                format!("segmentation {segmentation} does not cover {} letters", word.len()),
            ));
        }
        Ok(SegmentedWord { word, segmentation })
    }

    pub fn from_segments(segments: Vec<Vec<Letter>>) -> Result<Self> {
        let seg = Composition::new(segments.iter().map(Vec::len).collect())?;
        Ok(SegmentedWord { word: Word(segments.concat()), segmentation: seg })
    }

    pub fn segments(&self) -> Vec<&[Letter]> {
        let mut out = Vec::with_capacity(self.segmentation.len());
        let mut start = 0;
        for &len in self.segmentation.iter() {
            out.push(&self.word[start..start + len]);
            start += len;
        }
        out
    }

    /// Start offset of every segment.
    pub fn segment_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.segmentation.len());
        let mut pos = 0;
        for &len in self.segmentation.iter() {
            starts.push(pos);
            pos += len;
        }
        starts
    }
}

impl fmt::Display for SegmentedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_segmented(self))
    }
}

// ---------------------------------------------------------------------------
// Enumerators

/// Compositions of `n` in reverse lexicographic order: `(3),(2,1),(1,2),(1,1,1)`.
pub fn enum_compositions(n: usize) -> impl Iterator<Item = Composition> {
    let mut next = Some(if n == 0 { vec![] } else { vec![n] });
    std::iter::from_fn(move || {
        let current = next.take()?;
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let tail: usize = current[i + 1..].iter().sum();
            let mut succ = current[..=i].to_vec();
            succ[i] -= 1;
            succ.push(1 + tail);
            next = Some(succ);
        }
        Some(Composition(current))
    })
}

/// Weak compositions of `n` with `m` parts, reverse lexicographic order.
pub fn enum_weak_compositions(n: usize, m: usize) -> impl Iterator<Item = WeakComposition> {
    let mut next = match m {
        0 if n == 0 => Some(vec![]),
        0 => None,
        _ => {
            let mut v = vec![0; m];
            v[0] = n;
            Some(v)
        }
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        if m >= 2 {
            if let Some(i) = current[..m - 1].iter().rposition(|&p| p > 0) {
                let tail: usize = current[i + 1..].iter().sum();
                let mut succ = current.clone();
                succ[i] -= 1;
                succ[i + 1] = 1 + tail;
                for p in &mut succ[i + 2..] {
                    *p = 0;
                }
                next = Some(succ);
            }
        }
        Some(WeakComposition(current))
    })
}

/// `size`-element subsets of `[m]`, lexicographic.
pub fn enum_subsets(m: usize, size: usize) -> impl Iterator<Item = Subset> {
    let mut next = (size <= m).then(|| (1..=size).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // rightmost position that can still move up
        if let Some(i) = (0..size).rev().find(|&i| succ[i] < m - (size - 1 - i)) {
            succ[i] += 1;
            for j in i + 1..size {
                succ[j] = succ[j - 1] + 1;
            }
            next = Some(succ);
        }
        Some(Subset(current))
    })
}

/// In-place lexicographic successor; false when `v` is the last permutation.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|x| *x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// All words with `beta[i]` copies of `i+1`, in lexicographic order.
pub fn enum_words(beta: &WeakComposition) -> impl Iterator<Item = Word> {
    let mut letters: Vec<Letter> = Vec::with_capacity(beta.size());
    for (i, &c) in beta.iter().enumerate() {
        letters.extend(std::iter::repeat_n(i as Letter + 1, c));
    }
    let mut next = Some(letters);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            next = Some(succ);
        }
        Some(Word(current))
    })
}

/// Which ordered multiset partitions of a weight to enumerate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OmpConstraint {
    All,
    Blocks(usize),
    Shape(Composition),
}

/// Lazy enumeration of ordered multiset partitions of weight `beta`.
///
/// Blocks are chosen left to right; each block ranges over the nonempty
/// subsets of the letters still available, in lexicographic order.
pub fn enum_omp(beta: &WeakComposition, constraint: OmpConstraint) -> Result<OmpIter> {
    if let OmpConstraint::Shape(alpha) = &constraint {
        if alpha.size() != beta.size() {
            return Err(Error::invalid(
                "shape",
                format!("{alpha} has size {} but the weight {beta} has size {}", alpha.size(), beta.size()),
            ));
        }
        if alpha.contains(&0) {
            return Err(Error::invalid("shape", format!("{alpha} has a zero part")));
        }
    }
    Ok(OmpIter::new(beta.0.clone(), constraint))
}

/// Ordered set partitions of `[n]`.
pub fn enum_osp(n: usize, constraint: OmpConstraint) -> Result<OmpIter> {
    enum_omp(&WeakComposition(vec![1; n]), constraint)
}

struct Frame {
    avail: Vec<Letter>,
    pick: Vec<usize>,
    started: bool,
}

pub struct OmpIter {
    rem: Vec<usize>,
    total: usize,
    constraint: OmpConstraint,
    stack: Vec<Frame>,
    done: bool,
    empty_pending: bool,
}

impl OmpIter {
    fn new(rem: Vec<usize>, constraint: OmpConstraint) -> Self {
        let total = rem.iter().sum();
        let empty_ok = total == 0
            && match &constraint {
                OmpConstraint::All => true,
                OmpConstraint::Blocks(k) => *k == 0,
                OmpConstraint::Shape(a) => a.is_empty(),
            };
        let mut it = OmpIter { rem, total, constraint, stack: Vec::new(), done: total == 0, empty_pending: empty_ok };
        if total > 0 {
            let frame = it.frame();
            it.stack.push(frame);
        }
        it
    }

    fn frame(&self) -> Frame {
        let avail = (0..self.rem.len()).filter(|&i| self.rem[i] > 0).map(|i| i as Letter + 1).collect();
        Frame { avail, pick: Vec::new(), started: false }
    }

    /// Inclusive block-size bounds at `level` (0-based).
    fn size_bounds(&self, level: usize, avail: usize) -> (usize, usize) {
        match &self.constraint {
            OmpConstraint::All => (1, avail),
            OmpConstraint::Blocks(k) if level >= *k => (1, 0),
            OmpConstraint::Blocks(k) => {
                let later = k.saturating_sub(level + 1);
                (1, avail.min(self.total.saturating_sub(later)))
            }
            OmpConstraint::Shape(alpha) => {
                let s = alpha.get(level).copied().unwrap_or(usize::MAX);
                (s, s)
            }
        }
    }

    fn blocks_left(&self, used: usize) -> Option<usize> {
        match &self.constraint {
            OmpConstraint::All => None,
            OmpConstraint::Blocks(k) => Some(k.saturating_sub(used)),
            OmpConstraint::Shape(alpha) => Some(alpha.len().saturating_sub(used)),
        }
    }

    fn apply(&mut self, level: usize, sign: bool) {
        let frame = &self.stack[level];
        for &p in &frame.pick {
            let x = frame.avail[p] as usize - 1;
            if sign {
                self.rem[x] -= 1;
            } else {
                self.rem[x] += 1;
            }
        }
        let n = frame.pick.len();
        if sign {
            self.total -= n;
        } else {
            self.total += n;
        }
    }

    fn current(&self) -> OrderedMultisetPartition {
        let blocks = self.stack.iter().map(|f| f.pick.iter().map(|&p| f.avail[p]).collect()).collect();
        OrderedMultisetPartition::from_sorted_blocks(blocks)
    }
}

/// Lexicographic successor among increasing index sequences over `0..len`
/// with length at most `hi`.
fn advance_pick(frame: &mut Frame, hi: usize) -> bool {
    let len = frame.avail.len();
    if !frame.started {
        frame.started = true;
        if len == 0 || hi == 0 {
            return false;
        }
        frame.pick.push(0);
        return true;
    }
    if let Some(&last) = frame.pick.last() {
        if frame.pick.len() < hi && last + 1 < len {
            frame.pick.push(last + 1);
            return true;
        }
    }
    while let Some(x) = frame.pick.pop() {
        if x + 1 < len {
            frame.pick.push(x + 1);
            return true;
        }
    }
    false
}

impl Iterator for OmpIter {
    type Item = OrderedMultisetPartition;

    fn next(&mut self) -> Option<Self::Item> {
        if self.empty_pending {
            self.empty_pending = false;
            return Some(OrderedMultisetPartition::from_sorted_blocks(vec![]));
        }
        if self.done {
            return None;
        }
        loop {
            let level = self.stack.len() - 1;
            if self.stack[level].started {
                self.apply(level, false);
            }
            let (lo, hi) = self.size_bounds(level, self.stack[level].avail.len());
            let mut found = false;
            while advance_pick(&mut self.stack[level], hi) {
                if self.stack[level].pick.len() >= lo {
                    found = true;
                    break;
                }
            }
            if !found {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            self.apply(level, true);
            let used = level + 1;
            let left = self.blocks_left(used);
            if self.total == 0 {
                if left.unwrap_or(0) == 0 {
                    return Some(self.current());
                }
                continue;
            }
            if let Some(left) = left {
                let max_rem = self.rem.iter().copied().max().unwrap_or(0);
                if left == 0 || max_rem > left || self.total < left {
                    continue;
                }
            }
            let frame = self.frame();
            self.stack.push(frame);
        }
    }
}

// ---------------------------------------------------------------------------
// Notation

fn letters_need_commas(letters: &[Letter]) -> bool {
    letters.iter().any(|&x| x > 9)
}

fn print_letters(letters: &[Letter], commas: bool) -> String {
    let parts: Vec<String> = letters.iter().map(Letter::to_string).collect();
    parts.join(if commas { "," } else { "" })
}

/// `(25|1|34)`; letters above 9 switch every block to comma form.
pub fn print_omp(mu: &OrderedMultisetPartition) -> String {
    let commas = mu.blocks.iter().any(|b| letters_need_commas(b));
    let body: Vec<String> = mu.blocks.iter().map(|b| print_letters(b, commas)).collect();
    format!("({})", body.join("|"))
}

/// `725.6.481.39`.
pub fn print_segmented(sw: &SegmentedWord) -> String {
    let commas = letters_need_commas(&sw.word);
    let body: Vec<String> = sw.segments().iter().map(|s| print_letters(s, commas)).collect();
    body.join(".")
}

/// Splits `text` on any of `seps`, returning each piece with its char offset.
/// Outer parentheses are stripped first.
fn split_groups(text: &str, seps: &[char]) -> Result<Vec<(usize, String)>> {
    let chars: Vec<(usize, char)> =
        text.char_indices().enumerate().map(|(ci, (_, c))| (ci, c)).filter(|(_, c)| !c.is_whitespace()).collect();
    let mut body: &[(usize, char)] = &chars;
    if let Some((&(_, '('), rest)) = body.split_first() {
        match rest.split_last() {
            Some((&(_, ')'), inner)) => body = inner,
            _ => {
                let pos = rest.last().map_or(0, |p| p.0);
                return Err(Error::parse(pos, ParseErrorKind::MalformedToken("(".into())));
            }
        }
    }
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut groups = Vec::new();
    let mut start = body[0].0;
    let mut cur = String::new();
    for &(pos, c) in body {
        if seps.contains(&c) {
            groups.push((start, std::mem::take(&mut cur)));
            start = pos + 1;
        } else {
            cur.push(c);
        }
    }
    groups.push((start, cur));
    let _ = text;
    Ok(groups)
}

fn parse_letters(group: &str, pos: usize, commas: bool) -> Result<Vec<Letter>> {
    if group.is_empty() {
        return Err(Error::parse(pos, ParseErrorKind::EmptyBlock));
    }
    let malformed = |tok: &str, at: usize| Error::parse(at, ParseErrorKind::MalformedToken(tok.to_string()));
    let mut out = Vec::new();
    if commas {
        let mut at = pos;
        for tok in group.split(',') {
            match tok.parse::<Letter>() {
                Ok(x) if x >= 1 && tok.bytes().all(|b| b.is_ascii_digit()) => out.push(x),
                _ => return Err(malformed(tok, at)),
            }
            at += tok.chars().count() + 1;
        }
    } else {
        for (k, c) in group.chars().enumerate() {
            match c.to_digit(10) {
                Some(d) if d >= 1 => out.push(d),
                _ => return Err(malformed(&c.to_string(), pos + k)),
            }
        }
    }
    Ok(out)
}

/// Parses `25|1|34`, `(25|1|34)` or `2,5|1|3,4`. Whitespace is ignored and
/// blocks are re-sorted.
pub fn parse_omp(text: &str) -> Result<OrderedMultisetPartition> {
    let commas = text.contains(',');
    let mut blocks = Vec::new();
    for (pos, group) in split_groups(text, &['|'])? {
        let mut letters = parse_letters(&group, pos, commas)?;
        letters.sort_unstable();
        if let Some(w) = letters.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::parse(pos, ParseErrorKind::RepeatedLetter(w[0])));
        }
        blocks.push(letters);
    }
    Ok(OrderedMultisetPartition::from_sorted_blocks(blocks))
}

/// Parses `725.6.481.39` (a middle dot is accepted as a separator too).
pub fn parse_segmented(text: &str) -> Result<SegmentedWord> {
    let commas = text.contains(',');
    let mut segments = Vec::new();
    for (pos, group) in split_groups(text, &['.', '·'])? {
        segments.push(parse_letters(&group, pos, commas)?);
    }
    SegmentedWord::from_segments(segments)
}

/// Parses a plain word such as `13123` or `10,2,3`.
pub fn parse_word(text: &str) -> Result<Word> {
    let commas = text.contains(',');
    let groups = split_groups(text, &[])?;
    match groups.as_slice() {
        [] => Ok(Word(vec![])),
        [(pos, g)] => Ok(Word(parse_letters(g, *pos, commas)?)),
        _ => unreachable!("no separators requested"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{binomial, q_stirling};
    use std::collections::HashSet;

    fn omp(s: &str) -> OrderedMultisetPartition {
        parse_omp(s).unwrap()
    }

    fn comps(n: usize) -> Vec<Vec<usize>> {
        enum_compositions(n).map(Vec::from).collect()
    }

    fn fubini(n: usize) -> u64 {
        // a(n) = sum_k C(n,k) a(n-k)
        let mut a = vec![1u64; n + 1];
        for m in 1..=n {
            a[m] = (1..=m).map(|k| binomial(m as i64, k as i64) as u64 * a[m - k]).sum();
        }
        a[n]
    }

    #[test]
    fn compositions_order_and_count() {
        assert_eq!(comps(3), vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]);
        assert_eq!(comps(0), vec![Vec::<usize>::new()]);
        for n in 1..10 {
            let all = comps(n);
            assert_eq!(all.len(), 1 << (n - 1));
            let mut sorted = all.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(all, sorted);
        }
    }

    #[test]
    fn weak_compositions_order_and_count() {
        let got: Vec<Vec<usize>> = enum_weak_compositions(2, 2).map(Vec::from).collect();
        assert_eq!(got, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(enum_weak_compositions(0, 0).count(), 1);
        assert_eq!(enum_weak_compositions(3, 0).count(), 0);
        for n in 0..6 {
            for m in 1..5 {
                let c = enum_weak_compositions(n, m).count() as i128;
                assert_eq!(c, binomial((n + m - 1) as i64, (m - 1) as i64));
            }
        }
    }

    #[test]
    fn subsets_and_indicator() {
        let got: Vec<Vec<usize>> = enum_subsets(4, 2).map(Vec::from).collect();
        assert_eq!(got, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(enum_subsets(3, 0).count(), 1);
        assert_eq!(enum_subsets(2, 3).count(), 0);
        assert_eq!(subset_indicator(&Subset(vec![1, 3]), 4).0, vec![1, 0, 1, 0]);
    }

    #[test]
    fn words_of_weight() {
        let got: Vec<String> = enum_words(&WeakComposition(vec![2, 1])).map(|w| w.to_string()).collect();
        assert_eq!(got, ["112", "121", "211"]);
        assert_eq!(enum_words(&WeakComposition(vec![1, 1, 1])).count(), 6);
        assert_eq!(enum_words(&WeakComposition(vec![2, 2, 1])).count(), 30);
        assert_eq!(enum_words(&WeakComposition(vec![])).count(), 1);
    }

    #[test]
    fn omp_shape_counterexample_family() {
        let beta = WeakComposition(vec![2, 2, 1]);
        let alpha = Composition(vec![2, 1, 2]);
        let got: HashSet<_> = enum_omp(&beta, OmpConstraint::Shape(alpha)).unwrap().collect();
        let want: HashSet<_> = ["12|3|12", "12|1|23", "23|1|12", "12|2|13", "13|2|12"].iter().map(|s| omp(s)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn omp_empty_families() {
        let beta = WeakComposition(vec![3]);
        assert_eq!(enum_omp(&beta, OmpConstraint::Blocks(2)).unwrap().count(), 0);
        assert_eq!(enum_omp(&beta, OmpConstraint::Blocks(3)).unwrap().count(), 1);
        assert!(enum_omp(&beta, OmpConstraint::Shape(Composition(vec![1, 1]))).is_err());
        let empty = WeakComposition(vec![]);
        assert_eq!(enum_omp(&empty, OmpConstraint::All).unwrap().count(), 1);
        assert_eq!(enum_omp(&empty, OmpConstraint::Blocks(1)).unwrap().count(), 0);
    }

    #[test]
    fn osp_counts_match_fubini_and_stirling() {
        for n in 0..=7 {
            let all: Vec<_> = enum_osp(n, OmpConstraint::All).unwrap().collect();
            assert_eq!(all.len() as u64, fubini(n));
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            let mut by_shape = 0;
            for alpha in enum_compositions(n) {
                by_shape += enum_osp(n, OmpConstraint::Shape(alpha)).unwrap().count();
            }
            assert_eq!(by_shape, all.len());
            for k in 0..=n {
                let count = enum_osp(n, OmpConstraint::Blocks(k)).unwrap().count() as i128;
                let fact: i128 = (1..=k as i128).product();
                assert_eq!(count, fact * q_stirling(n, k).eval_at_one(), "n={n} k={k}");
            }
        }
        assert_eq!(enum_osp(3, OmpConstraint::All).unwrap().count(), 13);
    }

    #[test]
    fn omp_enumeration_matches_filter_oracle() {
        // oracle: every sequence of nonempty subsets, filtered by weight
        fn brute(beta: &[usize]) -> HashSet<OrderedMultisetPartition> {
            let m = beta.len();
            let n: usize = beta.iter().sum();
            let subsets: Vec<Vec<Letter>> = (1u32..(1 << m))
                .map(|mask| (0..m as u32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect())
                .collect();
            let mut out = HashSet::new();
            let mut stack: Vec<Vec<Vec<Letter>>> = vec![vec![]];
            while let Some(bs) = stack.pop() {
                let used: usize = bs.iter().map(Vec::len).sum();
                if used == n {
                    let mu = OrderedMultisetPartition::new(bs).unwrap();
                    if mu.weight_in(m).0 == beta {
                        out.insert(mu);
                    }
                    continue;
                }
                for s in &subsets {
                    if used + s.len() <= n {
                        let mut next = bs.clone();
                        next.push(s.clone());
                        stack.push(next);
                    }
                }
            }
            out
        }
        for beta in [vec![2, 1], vec![2, 2, 1], vec![1, 0, 2], vec![3, 1, 1], vec![2, 2]] {
            let b = WeakComposition(beta.clone());
            let got: Vec<_> = enum_omp(&b, OmpConstraint::All).unwrap().collect();
            let set: HashSet<_> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len());
            assert_eq!(set, brute(&beta), "beta={beta:?}");
            for k in 1..=b.size() {
                let by_k: HashSet<_> = enum_omp(&b, OmpConstraint::Blocks(k)).unwrap().collect();
                let want: HashSet<_> = set.iter().filter(|m| m.num_blocks() == k).cloned().collect();
                assert_eq!(by_k, want);
            }
        }
    }

    #[test]
    fn omp_order_is_lexicographic() {
        let all: Vec<_> = enum_omp(&WeakComposition(vec![2, 1, 1]), OmpConstraint::All).unwrap().collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(omp("25|1|34").blocks(), &[vec![2, 5], vec![1], vec![3, 4]]);
        assert_eq!(omp("2,5|1|3,4"), omp("25|1|34"));
        assert_eq!(omp(" ( 52 | 1 | 43 ) "), omp("25|1|34"));
        assert_eq!(omp("10,2|3").blocks(), &[vec![2, 10], vec![3]]);
        let sw = parse_segmented("725.6.481.39").unwrap();
        assert_eq!(sw.segmentation.0, vec![3, 1, 3, 2]);
        assert_eq!(sw.word.0, vec![7, 2, 5, 6, 4, 8, 1, 3, 9]);
        assert_eq!(parse_segmented("725·6·481·39").unwrap(), sw);
    }

    #[test]
    fn parse_errors_are_distinct() {
        let kind = |s: &str| match parse_omp(s) {
            Err(Error::Parse { kind, position }) => (kind, position),
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(kind("12||3"), (ParseErrorKind::EmptyBlock, 3));
        assert_eq!(kind("121|3"), (ParseErrorKind::RepeatedLetter(1), 0));
        assert_eq!(kind("1a|3").0, ParseErrorKind::MalformedToken("a".into()));
        assert_eq!(kind("1a|3").1, 1);
        assert_eq!(kind("10|3").0, ParseErrorKind::MalformedToken("0".into()));
        assert_eq!(kind("1,,2").0, ParseErrorKind::MalformedToken("".into()));
        assert!(matches!(parse_segmented("12..3"), Err(Error::Parse { kind: ParseErrorKind::EmptyBlock, .. })));
    }

    #[test]
    fn print_parse_round_trip_through_n6() {
        for n in 0..=6 {
            for mu in enum_osp(n, OmpConstraint::All).unwrap() {
                assert_eq!(parse_omp(&print_omp(&mu)).unwrap(), mu);
            }
        }
        for mu in enum_omp(&WeakComposition(vec![2, 2, 1, 1]), OmpConstraint::All).unwrap() {
            assert_eq!(parse_omp(&mu.to_string()).unwrap(), mu);
        }
        let big = omp("10,2|11");
        assert_eq!(print_omp(&big), "(2,10|11)");
        assert_eq!(parse_omp(&print_omp(&big)).unwrap(), big);
    }

    #[test]
    fn json_form_is_array_of_arrays() {
        let mu = omp("25|1|34");
        let s = serde_json::to_string(&mu).unwrap();
        assert_eq!(s, "[[2,5],[1],[3,4]]");
        assert_eq!(serde_json::from_str::<OrderedMultisetPartition>(&s).unwrap(), mu);
        assert!(serde_json::from_str::<OrderedMultisetPartition>("[[1,1]]").is_err());
        assert!(serde_json::from_str::<OrderedMultisetPartition>("[[]]").is_err());
    }

    #[test]
    fn shape_and_weight() {
        let mu = omp("245|134|2457|4");
        assert_eq!(mu.shape().0, vec![3, 3, 4, 1]);
        assert_eq!(mu.weight().0, vec![1, 2, 1, 4, 2, 0, 1]);
        assert!(omp("25|1|34").is_set_partition());
        assert!(!mu.is_set_partition());
    }
}
