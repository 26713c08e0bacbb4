//! Dense univariate polynomials in `q` with exact `i128` coefficients, plus the
//! q-analog constructors used throughout the crate.
//!
//! Every arithmetic path is checked. The `checked_*` methods return
//! [`Overflow`]; the operator impls (`+`, `-`, `*`) raise an [`Overflow`]
//! panic payload via [`std::panic::panic_any`] so that callers running whole
//! sweeps can recover it with `catch_unwind` and report it distinctly.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Coeff = i128;

/// Coefficient arithmetic left the `i128` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("polynomial coefficient overflow")]
pub struct Overflow;

fn raise(_: Overflow) -> ! {
    std::panic::panic_any(Overflow)
}

/// A polynomial `c_0 + c_1 q + ... + c_d q^d` stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Coeff>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^degree`.
    pub fn monomial(c: Coeff, degree: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        QPoly { coeffs }
    }

    /// Builds a polynomial from coefficients listed constant term first.
    pub fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Polynomial whose coefficient at `d` is `hist[d]`; used to turn statistic
    /// histograms into generating functions.
    pub fn from_histogram(hist: &[u64]) -> Self {
        Self::from_coeffs(hist.iter().map(|&c| Coeff::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Coeff {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn checked_add(&self, other: &QPoly) -> Result<QPoly, Overflow> {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.checked_add(s).ok_or(Overflow)?;
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn checked_neg(&self) -> Result<QPoly, Overflow> {
        let coeffs = self.coeffs.iter().map(|c| c.checked_neg().ok_or(Overflow)).collect::<Result<Vec<_>, _>>()?;
        Ok(QPoly { coeffs })
    }

    pub fn checked_sub(&self, other: &QPoly) -> Result<QPoly, Overflow> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &QPoly) -> Result<QPoly, Overflow> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0 as Coeff; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(term).ok_or(Overflow)?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn checked_pow(&self, exp: u32) -> Result<QPoly, Overflow> {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: usize) -> QPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; shift];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    pub fn checked_eval_at_one(&self) -> Result<Coeff, Overflow> {
        self.coeffs.iter().try_fold(0 as Coeff, |acc, &c| acc.checked_add(c).ok_or(Overflow))
    }

    /// Value at `q = 1`; panics with an [`Overflow`] payload on overflow.
    pub fn eval_at_one(&self) -> Coeff {
        self.checked_eval_at_one().unwrap_or_else(|e| raise(e))
    }

    /// The substitution `q -> q^r`: the coefficient at `d` moves to `r * d`.
    pub fn substitute_power(&self, r: usize) -> QPoly {
        assert!(r >= 1, "substitute_power needs a positive exponent");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * r + 1];
        for (d, &c) in self.coeffs.iter().enumerate() {
            coeffs[d * r] = c;
        }
        QPoly { coeffs }
    }

    pub fn pow(&self, exp: u32) -> QPoly {
        self.checked_pow(exp).unwrap_or_else(|e| raise(e))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        self.checked_add(rhs).unwrap_or_else(|e| raise(e))
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl AddAssign for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        *self = &*self + &rhs;
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self.checked_sub(rhs).unwrap_or_else(|e| raise(e))
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.checked_neg().unwrap_or_else(|e| raise(e))
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        self.checked_mul(rhs).unwrap_or_else(|e| raise(e))
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| acc * p)
    }
}

/// Pretty form, lowest degree first: `1 + 2q + q^2`, `q - q^3`, `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match d {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// JSON form: array of decimal coefficient strings, constant term first.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw.iter().map(|s| s.parse::<Coeff>().map_err(D::Error::custom)).collect::<Result<Vec<_>, _>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Coeff {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: Coeff = 1;
    for i in 0..k {
        // exact at every step: acc == C(n, i) before the update
        acc = acc * Coeff::from(n - i) / Coeff::from(i + 1);
    }
    acc
}

/// `[r]_q = 1 + q + ... + q^(r-1)`; zero for `r = 0`.
pub fn q_integer(r: usize) -> QPoly {
    QPoly::from_coeffs(vec![1; r])
}

/// `[n]!_q = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).map(q_integer).product()
}

/// Gaussian binomial via `[n,k] = [n-1,k-1] + q^k [n-1,k]`. Zero outside
/// `0 <= k <= n`.
pub fn q_binomial(n: usize, k: i64) -> QPoly {
    if k < 0 || k as usize > n {
        return QPoly::zero();
    }
    let k = k as usize;
    // row[j] = [m, j] for the current m
    let mut row = vec![QPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j >= 1 { row[j - 1].clone() } else { QPoly::zero() };
            let right = row.get(j).map(|p| p.shift(j)).unwrap_or_default();
            next.push(left + right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// q-Stirling numbers of the second kind:
/// `Stir(n,k) = Stir(n-1,k-1) + [k]_q Stir(n-1,k)`, `Stir(0,k) = [k == 0]`.
pub fn q_stirling(n: usize, k: usize) -> QPoly {
    let mut row: Vec<QPoly> = (0..=k).map(|j| if j == 0 { QPoly::one() } else { QPoly::zero() }).collect();
    for _ in 1..=n {
        let mut next = vec![QPoly::zero(); k + 1];
        for j in 1..=k {
            next[j] = &row[j - 1] + &(&q_integer(j) * &row[j]);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `sum_{d=0}^{max_shift} C(part - 1 + d, part - 1) q^d`, one factor of `F_{n,alpha}`.
pub fn f_factor(part: usize, max_shift: usize) -> QPoly {
    assert!(part >= 1);
    QPoly::from_coeffs((0..=max_shift).map(|d| binomial((part - 1 + d) as i64, (part - 1) as i64)).collect())
}

/// `F_{n,alpha}(q)`: the product over blocks `i` of
/// `f_factor(alpha_i, alpha_1 + ... + alpha_{i-1})`.
pub fn f_poly(alpha: &[usize]) -> QPoly {
    let mut prefix = 0;
    let mut acc = QPoly::one();
    for &part in alpha {
        acc = &acc * &f_factor(part, prefix);
        prefix += part;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[Coeff]) -> QPoly {
        QPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]).coeffs(), &[1]);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn binomial_square() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn substitute_power_spreads_coefficients() {
        assert_eq!(p(&[1, 1]).substitute_power(3), p(&[1, 0, 0, 1]));
        assert!(QPoly::zero().substitute_power(2).is_zero());
    }

    #[test]
    fn display_matches_notation() {
        assert_eq!(p(&[1, 2, 1]).to_string(), "1 + 2q + q^2");
        assert_eq!(p(&[0, 1, 0, -1]).to_string(), "q - q^3");
        assert_eq!(p(&[-2]).to_string(), "-2");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_is_decimal_strings() {
        let s = serde_json::to_string(&p(&[1, 2, 1])).unwrap();
        assert_eq!(s, r#"["1","2","1"]"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[1, 2, 1]));
        let big = QPoly::constant(Coeff::MAX);
        let back: QPoly = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn overflow_is_detected() {
        let big = QPoly::constant(Coeff::MAX);
        assert_eq!(big.checked_add(&QPoly::one()), Err(Overflow));
        assert_eq!(big.checked_mul(&QPoly::constant(2)), Err(Overflow));
        let payload = std::panic::catch_unwind(|| &big + &QPoly::one()).unwrap_err();
        assert!(payload.downcast_ref::<Overflow>().is_some());
    }

    #[test]
    fn q_integer_values() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), QPoly::one());
        assert_eq!(q_integer(4), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn q_factorial_values() {
        assert_eq!(q_factorial(0), QPoly::one());
        // (1+q)(1+q+q^2) expanded by hand
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
        for n in 0..10 {
            assert_eq!(q_factorial(n).eval_at_one(), (1..=n as Coeff).product());
        }
    }

    #[test]
    fn q_binomial_values() {
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), QPoly::one());
        }
        assert_eq!(q_binomial(2, 1), p(&[1, 1]));
        assert!(q_binomial(0, 1).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn q_binomial_both_pascal_rules_and_symmetry() {
        for n in 1..10usize {
            for k in 0..=n as i64 {
                let lhs = q_binomial(n, k);
                let a = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k as usize);
                let b = &q_binomial(n - 1, k) + &q_binomial(n - 1, k - 1).shift(n - k as usize);
                assert_eq!(lhs, a);
                assert_eq!(lhs, b);
                assert_eq!(lhs, q_binomial(n, n as i64 - k));
                assert_eq!(lhs.eval_at_one(), binomial(n as i64, k));
            }
        }
    }

    #[test]
    fn q_binomial_agrees_with_factorial_quotient() {
        // [n,k] [k]! [n-k]! == [n]!, checked without division
        for n in 0..9usize {
            for k in 0..=n {
                let prod = &(&q_binomial(n, k as i64) * &q_factorial(k)) * &q_factorial(n - k);
                assert_eq!(prod, q_factorial(n));
            }
        }
    }

    #[test]
    fn q_stirling_values() {
        assert_eq!(q_stirling(0, 0), QPoly::one());
        assert!(q_stirling(1, 0).is_zero());
        assert!(q_stirling(0, 2).is_zero());
        // Stir(3,2) = Stir(2,1) + [2] Stir(2,2) = 1 + (1+q)
        assert_eq!(q_stirling(3, 2), p(&[2, 1]));
    }

    #[test]
    fn q_stirling_at_one_is_stirling_second_kind() {
        // S(n,k) = S(n-1,k-1) + k S(n-1,k), computed independently in integers
        let mut s = vec![vec![0 as Coeff; 10]; 10];
        s[0][0] = 1;
        for n in 1..10 {
            for k in 1..10 {
                s[n][k] = s[n - 1][k - 1] + k as Coeff * s[n - 1][k];
            }
        }
        for n in 0..10 {
            for k in 0..10 {
                assert_eq!(q_stirling(n, k).eval_at_one(), s[n][k], "S({n},{k})");
            }
        }
    }

    #[test]
    fn f_poly_extremes_and_example() {
        for n in 1..7 {
            assert_eq!(f_poly(&[n]), QPoly::one());
            assert_eq!(f_poly(&vec![1; n]), q_factorial(n));
        }
        let expected = &p(&[1, 3, 6]) * &p(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(f_poly(&[2, 3, 2]), expected);
    }

    #[test]
    fn f_poly_at_one_is_multinomial() {
        let multinomial = |alpha: &[usize]| {
            let mut n = 0i64;
            let mut acc = 1;
            for &a in alpha {
                n += a as i64;
                acc *= binomial(n, a as i64);
            }
            acc
        };
        for alpha in [vec![2, 3, 2], vec![1, 4], vec![3, 1, 1, 2], vec![5]] {
            assert_eq!(f_poly(&alpha).eval_at_one(), multinomial(&alpha));
        }
    }

    #[test]
    fn f_poly_last_part_recursion() {
        for alpha in [vec![2, 3, 2], vec![1, 1, 3], vec![4, 2], vec![1, 2, 1, 2]] {
            let (last, head) = alpha.split_last().unwrap();
            let n: usize = alpha.iter().sum();
            assert_eq!(f_poly(&alpha), &f_poly(head) * &f_factor(*last, n - last));
        }
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-1000i128..1000, 0..8).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!(
                (&a * &b).substitute_power(3),
                &a.substitute_power(3) * &b.substitute_power(3)
            );
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: QPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
