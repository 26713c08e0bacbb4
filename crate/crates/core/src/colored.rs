//! Colored letters `i^j`, colored ordered set partitions, flag major index,
//! colored `inv`/`minimaj`, and the checks relating them to the uncolored
//! distributions.

use std::cmp::{Ordering, Reverse};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseErrorKind, Result};
use crate::partitions::{enum_compositions, enum_osp, Composition, Letter, OmpConstraint, OrderedMultisetPartition};
use crate::qpoly::{binomial, f_factor, f_poly, q_integer, QPoly};
use crate::report::{Report, ReportEntry};
use crate::statistics::{inv_blocks, maj_word, minimaj, rearrangements, segment_blocks};

/// The letter `value^color`, ordered so that larger colors come first and
/// ties go to the smaller value: `1^{r-1}` is least, `n^0` is greatest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredLetter {
    pub value: Letter,
    pub color: u32,
}

impl ColoredLetter {
    pub fn new(value: Letter, color: u32) -> Self {
        ColoredLetter { value, color }
    }

    fn key(&self) -> (Reverse<u32>, Letter) {
        (Reverse(self.color), self.value)
    }
}

impl Ord for ColoredLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for ColoredLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.value, self.color)
    }
}

/// A sequence of nonempty blocks of colored letters in which every value
/// `1..=n` appears exactly once; blocks are kept sorted by the colored order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredOsp {
    blocks: Vec<Vec<ColoredLetter>>,
    r: u32,
}

impl ColoredOsp {
    pub fn new(mut blocks: Vec<Vec<ColoredLetter>>, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("colors", "r must be positive"));
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (idx, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::invalid("colored partition", format!("block {} is empty", idx + 1)));
            }
            for x in block.iter() {
                if x.color >= r {
                    return Err(Error::invalid("colored partition", format!("color of {x} is not below {r}")));
                }
                let v = x.value as usize;
                if v == 0 || v > n || seen[v] {
                    return Err(Error::invalid(
                        "colored partition",
                        format!("values must be 1..={n}, each once; {x} breaks this"),
                    ));
                }
                seen[v] = true;
            }
            block.sort();
        }
        Ok(ColoredOsp { blocks, r })
    }

    pub fn blocks(&self) -> &[Vec<ColoredLetter>] {
        &self.blocks
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Composition {
        Composition(self.blocks.iter().map(Vec::len).collect())
    }

    /// Total color.
    pub fn epsilon(&self) -> u32 {
        self.blocks.iter().flatten().map(|x| x.color).sum()
    }

    /// Forgets colors.
    pub fn decolor(&self) -> OrderedMultisetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut v: Vec<Letter> = b.iter().map(|x| x.value).collect();
                v.sort_unstable();
                v
            })
            .collect();
        OrderedMultisetPartition::from_sorted_blocks(blocks)
    }
}

impl fmt::Display for ColoredOsp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.blocks.iter().map(|b| join_letters(b)).collect();
        write!(f, "({})", body.join("|"))
    }
}

fn join_letters(letters: &[ColoredLetter]) -> String {
    letters.iter().map(ColoredLetter::to_string).collect::<Vec<_>>().join(" ")
}

/// `1^1 4^0 2^2 . 7^2 . 9^2 8^1`.
pub fn print_colored_segments(segments: &[Vec<ColoredLetter>]) -> String {
    segments.iter().map(|s| join_letters(s)).collect::<Vec<_>>().join(" . ")
}

/// Parses `2^0 3^2|4^0|5^0 1^1`; a letter without a caret has color 0.
pub fn parse_colored(text: &str, r: u32) -> Result<ColoredOsp> {
    let trimmed = text.trim();
    let (body, offset) = match trimmed.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        Some(inner) => (inner, text.find('(').unwrap_or(0) + 1),
        None => (trimmed, text.len() - text.trim_start().len()),
    };
    let mut blocks = Vec::new();
    let mut pos = offset;
    for group in body.split('|') {
        let mut block = Vec::new();
        let mut tok_pos = pos;
        for tok in group.split(' ') {
            if !tok.is_empty() {
                let letter = parse_colored_letter(tok)
                    .ok_or_else(|| Error::parse(tok_pos, ParseErrorKind::MalformedToken(tok.to_string())))?;
                if block.iter().any(|x: &ColoredLetter| x.value == letter.value) {
                    return Err(Error::parse(tok_pos, ParseErrorKind::RepeatedLetter(letter.value)));
                }
                block.push(letter);
            }
            tok_pos += tok.len() + 1;
        }
        if block.is_empty() {
            return Err(Error::parse(pos, ParseErrorKind::EmptyBlock));
        }
        blocks.push(block);
        pos += group.len() + 1;
    }
    ColoredOsp::new(blocks, r)
}

fn parse_colored_letter(tok: &str) -> Option<ColoredLetter> {
    let (v, c) = tok.split_once('^').unwrap_or((tok, "0"));
    let value: Letter = v.parse().ok().filter(|&x| x >= 1)?;
    let color: u32 = c.parse().ok()?;
    Some(ColoredLetter { value, color })
}

/// `r * (sum of positions i with pi_{i+1} before pi_i in the colored order) + total color`.
pub fn flag_maj(pi: &[ColoredLetter], r: u32) -> usize {
    r as usize * maj_word(pi) + pi.iter().map(|x| x.color as usize).sum::<usize>()
}

/// `r * inv(d(sigma)) + epsilon(sigma)`.
pub fn colored_inv(sigma: &ColoredOsp) -> usize {
    sigma.r as usize * inv_blocks(sigma.decolor().blocks()) + sigma.epsilon() as usize
}

/// The segmented-word map taken with respect to the colored order.
pub fn colored_segmented(sigma: &ColoredOsp) -> Vec<Vec<ColoredLetter>> {
    segment_blocks(&sigma.blocks)
}

pub fn colored_minimaj(sigma: &ColoredOsp) -> usize {
    flag_maj(&colored_segmented(sigma).concat(), sigma.r)
}

pub fn colored_minimaj_brute(sigma: &ColoredOsp) -> usize {
    rearrangements(sigma.blocks.clone()).map(|bs| flag_maj(&bs.concat(), sigma.r)).min().unwrap_or(0)
}

/// Relabels by rank in the colored order and drops colors.
pub fn colored_standardize(sigma: &ColoredOsp) -> OrderedMultisetPartition {
    let mut all: Vec<ColoredLetter> = sigma.blocks.iter().flatten().copied().collect();
    all.sort();
    let rank = |x: &ColoredLetter| all.binary_search(x).expect("letter present") as Letter + 1;
    let blocks = sigma
        .blocks
        .iter()
        .map(|b| {
            let mut v: Vec<Letter> = b.iter().map(rank).collect();
            v.sort_unstable();
            v
        })
        .collect();
    OrderedMultisetPartition::from_sorted_blocks(blocks)
}

/// The cycle `n^0 -> (n-1)^0 -> ... -> 1^0 -> n^1 -> ... -> 1^{r-1} -> n^0`.
pub fn colored_cycle_letter(x: ColoredLetter, n: Letter, r: u32) -> ColoredLetter {
    match (x.value, x.color) {
        (1, c) if c + 1 < r => ColoredLetter::new(n, c + 1),
        (1, _) => ColoredLetter::new(n, 0),
        (v, c) => ColoredLetter::new(v - 1, c),
    }
}

pub fn colored_cycle_word(pi: &[ColoredLetter], n: Letter, r: u32) -> Vec<ColoredLetter> {
    pi.iter().map(|&x| colored_cycle_letter(x, n, r)).collect()
}

pub fn colored_cycle(sigma: &ColoredOsp) -> ColoredOsp {
    let n = sigma.n() as Letter;
    let blocks = sigma
        .blocks
        .iter()
        .map(|b| {
            let mut v = colored_cycle_word(b, n, sigma.r);
            v.sort();
            v
        })
        .collect();
    ColoredOsp { blocks, r: sigma.r }
}

/// Order-isomorphic relabeling of the values to `1..=n'`, keeping colors.
pub fn colored_compress_standardize(blocks: &[Vec<ColoredLetter>], r: u32) -> Result<ColoredOsp> {
    let mut values: Vec<Letter> = blocks.iter().flatten().map(|x| x.value).collect();
    values.sort_unstable();
    let relabeled = blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|x| {
                    let v = values.binary_search(&x.value).expect("value present") as Letter + 1;
                    ColoredLetter::new(v, x.color)
                })
                .collect()
        })
        .collect();
    ColoredOsp::new(relabeled, r)
}

/// All `r^n` colorings of one uncolored ordered set partition.
pub fn colorings(sigma0: &OrderedMultisetPartition, r: u32) -> impl Iterator<Item = ColoredOsp> + '_ {
    let n = sigma0.size() as u32;
    let total = (r as u64).pow(n);
    (0..total).map(move |code| {
        let mut code = code;
        let blocks = sigma0
            .blocks()
            .iter()
            .map(|b| {
                let mut v: Vec<ColoredLetter> = b
                    .iter()
                    .map(|&value| {
                        let color = (code % r as u64) as u32;
                        code /= r as u64;
                        ColoredLetter::new(value, color)
                    })
                    .collect();
                v.sort();
                v
            })
            .collect();
        ColoredOsp { blocks, r }
    })
}

/// Colored ordered set partitions of `[n]` with `r` colors and the given shape.
pub fn enum_colored_osp(n: usize, r: u32, shape: &Composition) -> Result<impl Iterator<Item = ColoredOsp>> {
    let bases: Vec<OrderedMultisetPartition> = enum_osp(n, OmpConstraint::Shape(shape.clone()))?.collect();
    Ok(bases.into_iter().flat_map(move |s| colorings(&s, r).collect::<Vec<_>>()))
}

/// `([r]_q)^n F_{n,alpha}(q^r)`.
pub fn colored_closed_form(alpha: &Composition, r: u32) -> QPoly {
    let n = alpha.size() as u32;
    &q_integer(r as usize).pow(n) * &f_poly(alpha).substitute_power(r as usize)
}

/// `I^r_{n,alpha} = M^r_{n,alpha} = ([r]_q)^n F_{n,alpha}(q^r)` for all `alpha |= n`.
pub fn verify_colored_equidistribution(n: usize, r: u32) -> Report {
    let alphas: Vec<Composition> = enum_compositions(n).collect();
    let chunks: Vec<Vec<ReportEntry>> = alphas
        .par_iter()
        .map(|alpha| {
            let mut inv = Vec::new();
            let mut mm = Vec::new();
            for sigma in enum_colored_osp(n, r, alpha).expect("valid shape") {
                bump(&mut inv, colored_inv(&sigma));
                bump(&mut mm, colored_minimaj(&sigma));
            }
            let target = colored_closed_form(alpha, r);
            let inst = format!("n={n} r={r} alpha={alpha}");
            vec![
                ReportEntry::compare(
                    "I^r_{n,alpha} = [r]^n F(q^r)",
                    inst.clone(),
                    QPoly::from_histogram(&inv),
                    target.clone(),
                ),
                ReportEntry::compare("M^r_{n,alpha} = [r]^n F(q^r)", inst, QPoly::from_histogram(&mm), target),
            ]
        })
        .collect();
    Report::new(chunks.into_iter().flatten().collect())
}

fn bump(hist: &mut Vec<u64>, d: usize) {
    if hist.len() <= d {
        hist.resize(d + 1, 0);
    }
    hist[d] += 1;
}

/// Both sides of the last-block polynomial identity, computed independently.
pub fn colored_last_block_sides(n: usize, alpha_k: usize, r: u32) -> (QPoly, QPoly) {
    assert!(1 <= alpha_k && alpha_k <= n && r >= 1);
    let a = alpha_k;
    let lhs = &q_integer(r as usize).pow(a as u32) * &f_factor(a, n - a).substitute_power(r as usize);
    let mut rhs = QPoly::zero();
    for i in 1..=n {
        for j in 0..r as usize {
            for t in 0..a {
                let c = binomial((n - i) as i64, t as i64) * binomial(i as i64 - 1, (a - t - 1) as i64);
                if c == 0 {
                    continue;
                }
                // c != 0 forces t <= n - i, so the exponent is nonnegative
                let exp = j * (n - a + 1) + (n - i - t);
                let colors = &q_integer(j).pow((a - t - 1) as u32) * &q_integer(j + 1).pow(t as u32);
                rhs += (&colors * &QPoly::constant(c)).shift(exp);
            }
        }
    }
    (lhs, rhs)
}

pub fn verify_colored_last_block_identity(n_max: usize, r_max: u32) -> Report {
    let mut entries = Vec::new();
    for n in 1..=n_max {
        for a in 1..=n {
            for r in 1..=r_max {
                let (lhs, rhs) = colored_last_block_sides(n, a, r);
                entries.push(ReportEntry::compare(
                    "last-block polynomial identity",
                    format!("n={n} alpha_k={a} r={r}"),
                    lhs,
                    rhs,
                ));
            }
        }
    }
    Report::new(entries)
}

/// All colored permutations of `[n]` with `r` colors.
pub fn colored_permutations(n: usize, r: u32) -> Vec<Vec<ColoredLetter>> {
    let singletons = enum_osp(n, OmpConstraint::Blocks(n)).expect("valid family");
    singletons.flat_map(|s| colorings(&s, r).map(|c| c.blocks.concat()).collect::<Vec<_>>()).collect()
}

/// The pointwise checks on colored objects, exhaustive for `n <= n_max`,
/// `r <= r_max`: the cycle raises flag maj by one, the colored segmented word
/// is the unique minimizer, compression, cycle commutation when the last
/// block is a singleton, and the standardization formula for `minimaj`.
pub fn verify_colored_lemmas(n_max: usize, r_max: u32) -> Report {
    let cases: Vec<(usize, u32)> = (1..=n_max).flat_map(|n| (1..=r_max).map(move |r| (n, r))).collect();
    let chunks: Vec<Vec<ReportEntry>> = cases
        .par_iter()
        .map(|&(n, r)| {
            let inst = format!("n={n} r={r}");
            let last = ColoredLetter::new(1, r - 1);
            let perms = colored_permutations(n, r);
            let cycle_cases: Vec<_> = perms.iter().filter(|p| p.last() != Some(&last)).collect();
            let cycle_ok = cycle_cases
                .iter()
                .filter(|p| flag_maj(&colored_cycle_word(p, n as Letter, r), r) == flag_maj(p, r) + 1)
                .count();

            let mut all = Vec::new();
            for alpha in enum_compositions(n) {
                all.extend(enum_colored_osp(n, r, &alpha).expect("valid shape"));
            }
            let (mut unique, mut compress, mut relation) = (0u64, 0u64, 0u64);
            let (mut commute, mut commute_total) = (0u64, 0u64);
            for sigma in &all {
                let seg = colored_segmented(sigma);
                let best = flag_maj(&seg.concat(), r);
                let mut minima = 0;
                let mut min_val = usize::MAX;
                let mut at_seg = false;
                for bs in rearrangements(sigma.blocks.clone()) {
                    let v = flag_maj(&bs.concat(), r);
                    match v.cmp(&min_val) {
                        Ordering::Less => {
                            min_val = v;
                            minima = 1;
                            at_seg = bs == seg;
                        }
                        Ordering::Equal => minima += 1,
                        Ordering::Greater => {}
                    }
                }
                if minima == 1 && at_seg && min_val == best {
                    unique += 1;
                }

                let (head, tail) = sigma.blocks.split_at(sigma.blocks.len() - 1);
                let tail = &tail[0];
                let mut compressed = head.to_vec();
                compressed.push(vec![tail[0]]);
                let extra: usize = tail[1..].iter().map(|x| x.color as usize).sum();
                let small = colored_compress_standardize(&compressed, r).expect("distinct values");
                if colored_minimaj(sigma) == colored_minimaj(&small) + extra {
                    compress += 1;
                }

                if tail.len() == 1 {
                    commute_total += 1;
                    let lhs = colored_segmented(&colored_cycle(sigma));
                    let rhs: Vec<Vec<ColoredLetter>> =
                        seg.iter().map(|s| colored_cycle_word(s, n as Letter, r)).collect();
                    if lhs == rhs {
                        commute += 1;
                    }
                }

                let s = colored_standardize(sigma);
                if colored_minimaj(sigma) == r as usize * minimaj(&s) + sigma.epsilon() as usize {
                    relation += 1;
                }
            }
            let total = all.len() as u64;
            vec![
                ReportEntry::count(
                    "colored cycle raises flag maj by 1",
                    inst.clone(),
                    cycle_ok as u64,
                    cycle_cases.len() as u64,
                ),
                ReportEntry::count("colored segmented word is the unique minimizer", inst.clone(), unique, total),
                ReportEntry::count("colored compression", inst.clone(), compress, total),
                ReportEntry::count("colored cycle commutes with segmentation", inst.clone(), commute, commute_total),
                ReportEntry::count("colored minimaj = r minimaj(s) + colors", inst, relation, total),
            ]
        })
        .collect();
    Report::new(chunks.into_iter().flatten().collect())
}

/// The worked values on the running colored examples.
pub fn verify_colored_examples() -> Report {
    let p = |s: &str| parse_colored(s, 3).expect("example parses");
    let pi: Vec<ColoredLetter> =
        [(3, 0), (4, 2), (5, 0), (1, 2), (2, 1)].iter().map(|&(v, c)| ColoredLetter::new(v, c)).collect();
    let sigma = p("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2");
    let c = |x: usize| QPoly::constant(x as i128);
    let seg = print_colored_segments(&colored_segmented(&sigma));
    let want_seg = "1^1 4^0 2^2 . 7^2 . 9^2 8^1 . 6^2 3^1 5^1";
    let std = colored_standardize(&sigma);
    let want_std: OrderedMultisetPartition = "159|3|48|267".parse().expect("valid");
    Report::new(vec![
        ReportEntry::compare("flag maj example", "3^0 4^2 5^0 1^2 2^1", c(flag_maj(&pi, 3)), c(17)),
        ReportEntry::compare("colored inv example", sigma.to_string(), c(colored_inv(&sigma)), c(24)),
        ReportEntry::count(
            "colored segmented example",
            seg,
            u64::from(print_colored_segments(&colored_segmented(&sigma)) == want_seg),
            1,
        ),
        ReportEntry::count("colored standardization example", std.to_string(), u64::from(std == want_std), 1),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(v: Letter, c: u32) -> ColoredLetter {
        ColoredLetter::new(v, c)
    }

    #[test]
    fn order_chain() {
        let r = 3;
        let n = 4;
        let mut chain = Vec::new();
        for c in (0..r).rev() {
            for v in 1..=n {
                chain.push(cl(v, c));
            }
        }
        let mut sorted = chain.clone();
        sorted.sort();
        assert_eq!(sorted, chain);
        assert_eq!(chain[0], cl(1, 2));
        assert_eq!(*chain.last().unwrap(), cl(4, 0));
    }

    #[test]
    fn flag_maj_examples() {
        let pi = [cl(3, 0), cl(4, 2), cl(5, 0), cl(1, 2), cl(2, 1)];
        assert_eq!(flag_maj(&pi, 3), 17);
        let plain = [cl(3, 0), cl(1, 0), cl(2, 0)];
        assert_eq!(flag_maj(&plain, 1), maj_word(&[3, 1, 2]));
        let flat = [cl(1, 2), cl(2, 2), cl(3, 2)];
        assert_eq!(flag_maj(&flat, 3), 6);
    }

    #[test]
    fn colored_inv_examples() {
        let sigma = parse_colored("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2", 3).unwrap();
        assert_eq!(sigma.decolor().to_string(), "(124|7|89|356)");
        assert_eq!(colored_inv(&sigma), 24);
        let one = parse_colored("1^0 2^0 3^0", 2).unwrap();
        assert_eq!(colored_inv(&one), 0);
        let uncolored = parse_colored("2 5|1|3 4", 1).unwrap();
        assert_eq!(colored_inv(&uncolored), 3);
    }

    #[test]
    fn colored_segmented_example() {
        let sigma = parse_colored("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2", 3).unwrap();
        assert_eq!(print_colored_segments(&colored_segmented(&sigma)), "1^1 4^0 2^2 . 7^2 . 9^2 8^1 . 6^2 3^1 5^1");
        assert_eq!(colored_minimaj(&sigma), colored_minimaj_brute(&sigma));
        let single = parse_colored("3^1 1^0 2^2", 3).unwrap();
        assert_eq!(colored_minimaj(&single), 3);
    }

    #[test]
    fn colored_standardize_example() {
        let sigma = parse_colored("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2", 3).unwrap();
        assert_eq!(colored_standardize(&sigma).to_string(), "(159|3|48|267)");
        let plain = parse_colored("2 5|1|3 4", 1).unwrap();
        assert_eq!(colored_standardize(&plain).to_string(), "(25|1|34)");
    }

    #[test]
    fn compression_standardization_example() {
        let blocks = vec![vec![cl(2, 3), cl(7, 0), cl(9, 1)], vec![cl(5, 1)], vec![cl(3, 1), cl(8, 0)]];
        let got = colored_compress_standardize(&blocks, 4).unwrap();
        assert_eq!(got, parse_colored("1^3 4^0 6^1|3^1|2^1 5^0", 4).unwrap());
    }

    #[test]
    fn cycle_has_order_nr() {
        let (n, r) = (4, 3);
        let start = cl(2, 1);
        let mut x = start;
        for step in 1..=(n * r) {
            x = colored_cycle_letter(x, n, r);
            assert_eq!(x == start, step == n * r);
        }
        assert_eq!(colored_cycle_letter(cl(1, 0), 4, 3), cl(4, 1));
        assert_eq!(colored_cycle_letter(cl(1, 2), 4, 3), cl(4, 0));
    }

    #[test]
    fn brute_matches_fast_small() {
        for n in 1..=3 {
            for r in 1..=3 {
                for alpha in enum_compositions(n) {
                    for sigma in enum_colored_osp(n, r, &alpha).unwrap() {
                        assert_eq!(colored_minimaj(&sigma), colored_minimaj_brute(&sigma), "{sigma}");
                    }
                }
            }
        }
    }

    #[test]
    fn theorem_small_and_r1_reduction() {
        assert!(verify_colored_equidistribution(3, 2).all_pass());
        let r1 = verify_colored_equidistribution(4, 1);
        assert!(r1.all_pass());
        for alpha in enum_compositions(4) {
            assert_eq!(colored_closed_form(&alpha, 1), f_poly(&alpha));
        }
        assert_eq!(verify_colored_equidistribution(3, 2).len(), 8);
    }

    #[test]
    fn colored_last_block_examples() {
        for n in 1..=5 {
            let (lhs, rhs) = colored_last_block_sides(n, n, 3);
            assert_eq!(lhs, q_integer(3).pow(n as u32));
            assert_eq!(lhs, rhs);
            for a in 1..=n {
                let (l, r) = colored_last_block_sides(n, a, 1);
                assert_eq!(l, f_factor(a, n - a));
                assert_eq!(l, r);
            }
        }
        let (l, r) = colored_last_block_sides(4, 2, 3);
        assert_eq!(l, r);
    }

    #[test]
    fn lemmas_small() {
        let report = verify_colored_lemmas(3, 2);
        assert!(report.all_pass(), "{}", report.to_pretty());
        assert!(verify_colored_examples().all_pass());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_colored("1^0||2^0", 2), Err(Error::Parse { kind: ParseErrorKind::EmptyBlock, .. })));
        assert!(matches!(parse_colored("1^x", 2), Err(Error::Parse { kind: ParseErrorKind::MalformedToken(_), .. })));
        assert!(matches!(
            parse_colored("1^0 1^1", 2),
            Err(Error::Parse { kind: ParseErrorKind::RepeatedLetter(1), .. })
        ));
        assert!(parse_colored("1^2", 2).is_err());
        assert!(parse_colored("1^0|3^0", 2).is_err());
    }
}
