//! Compositions, partitions, and sparse quasi-symmetric / power-sum
//! symmetric function arithmetic with principal specialization.
//!
//! Both element types are sparse maps from index (composition, resp.
//! partition) to a checked 64-bit integer coefficient; zero coefficients
//! are never stored.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{cadd, cmul, Error, Result};

/// An ordered sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// The proper partial sums as a bitmask: bit `s-1` is set for every
    /// partial sum `s` strictly between 0 and the weight.
    pub fn subset_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut acc = 0usize;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// Rebuilds a composition of weight `n` from its partial-sum mask.
    pub fn from_subset_mask(n: usize, mask: u64) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut prev = 0usize;
        for s in 1..n {
            if mask >> (s - 1) & 1 == 1 {
                parts.push(s - prev);
                prev = s;
            }
        }
        parts.push(n - prev);
        Composition { parts }
    }

    /// The composition whose partial-sum set is the complement within
    /// `1..weight`. An involution.
    pub fn opposite(&self) -> Self {
        let n = self.weight();
        if n == 0 {
            return Composition::empty();
        }
        let all = if n >= 2 { (1u64 << (n - 1)) - 1 } else { 0 };
        Composition::from_subset_mask(n, all & !self.subset_mask())
    }

    /// True when the partial sums of `self` refine into those of `other`,
    /// i.e. `other` is obtained by merging adjacent parts of `self`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        self.weight() == coarser.weight()
            && coarser.subset_mask() & !self.subset_mask() == 0
    }

    /// Parts as a multiset.
    pub fn to_partition(&self) -> Partition {
        Partition::new(self.parts.clone()).expect("parts already positive")
    }

    /// All compositions of `n`, enumerated by partial-sum mask value.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let count = 1u64 << (n - 1);
        (0..count).map(|m| Composition::from_subset_mask(n, m)).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// A multiset of positive integers, stored sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Multiset union with another partition.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Sparse integer combination of monomial quasi-symmetric functions,
/// indexed by compositions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QSymElement {
    coeffs: BTreeMap<Composition, i64>,
}

/// Sparse integer combination of power-sum symmetric functions, indexed by
/// partitions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PSymElement {
    coeffs: BTreeMap<Partition, i64>,
}

impl QSymElement {
    pub fn zero() -> Self {
        QSymElement::default()
    }

    /// The single basis element with coefficient one.
    pub fn monomial(alpha: Composition) -> Self {
        let mut q = QSymElement::zero();
        q.add_term(alpha, 1).unwrap();
        q
    }

    pub fn unit() -> Self {
        QSymElement::monomial(Composition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.coeffs.iter().map(|(k, &c)| (k, c))
    }

    pub fn coefficient(&self, alpha: &Composition) -> i64 {
        self.coeffs.get(alpha).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, alpha: Composition, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let updated = cadd(self.coefficient(&alpha), coeff, "qsym coefficient")?;
        if updated == 0 {
            self.coeffs.remove(&alpha);
        } else {
            self.coeffs.insert(alpha, updated);
        }
        Ok(())
    }

    pub fn add(&mut self, other: &QSymElement) -> Result<()> {
        for (k, c) in other.terms() {
            self.add_term(k.clone(), c)?;
        }
        Ok(())
    }

    pub fn sub(&mut self, other: &QSymElement) -> Result<()> {
        for (k, c) in other.terms() {
            self.add_term(k.clone(), -c)?;
        }
        Ok(())
    }

    /// Bilinear extension of the quasi-shuffle of compositions: interleave
    /// parts or merge one part of each side into their sum.
    pub fn quasi_shuffle(&self, other: &QSymElement) -> Result<QSymElement> {
        let mut out = QSymElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let c = cmul(ca, cb, "quasi-shuffle coefficient")?;
                let mut prefix = Vec::new();
                shuffle_rec(a.parts(), b.parts(), &mut prefix, c, &mut out)?;
            }
        }
        Ok(out)
    }

    /// Coefficients are constant on the classes of compositions sharing the
    /// same underlying partition.
    pub fn is_symmetric(&self) -> bool {
        let mut by_partition: BTreeMap<(usize, Partition), i64> = BTreeMap::new();
        for (alpha, c) in self.terms() {
            let key = (alpha.weight(), alpha.to_partition());
            if *by_partition.entry(key).or_insert(c) != c {
                return false;
            }
        }
        // every composition in a touched class must carry the class value
        for ((n, lambda), c) in by_partition {
            for alpha in Composition::all(n) {
                if alpha.to_partition() == lambda && self.coefficient(&alpha) != c {
                    return false;
                }
            }
        }
        true
    }

    /// Value under setting the first `m` variables to one: each basis
    /// element of length k contributes binomial(m, k), extended
    /// polynomially so negative `m` is legal.
    pub fn specialize(&self, m: i64) -> Result<i64> {
        let mut acc = 0i64;
        for (alpha, c) in self.terms() {
            let term = cmul(c, binomial(m, alpha.length())?, "specialization")?;
            acc = cadd(acc, term, "specialization")?;
        }
        Ok(acc)
    }
}

fn shuffle_rec(
    a: &[usize],
    b: &[usize],
    prefix: &mut Vec<usize>,
    coeff: i64,
    out: &mut QSymElement,
) -> Result<()> {
    if a.is_empty() && b.is_empty() {
        return out.add_term(Composition::new(prefix.clone()).unwrap(), coeff);
    }
    if !a.is_empty() {
        prefix.push(a[0]);
        shuffle_rec(&a[1..], b, prefix, coeff, out)?;
        prefix.pop();
    }
    if !b.is_empty() {
        prefix.push(b[0]);
        shuffle_rec(a, &b[1..], prefix, coeff, out)?;
        prefix.pop();
    }
    if !a.is_empty() && !b.is_empty() {
        prefix.push(a[0] + b[0]);
        shuffle_rec(&a[1..], &b[1..], prefix, coeff, out)?;
        prefix.pop();
    }
    Ok(())
}

/// binomial(m, k) for any integer m, as the polynomial
/// m(m-1)...(m-k+1)/k!.
pub fn binomial(m: i64, k: usize) -> Result<i64> {
    let mut num: i128 = 1;
    for i in 0..k as i128 {
        num = num
            .checked_mul(m as i128 - i)
            .ok_or(Error::Overflow("binomial"))?;
    }
    let mut den: i128 = 1;
    for i in 1..=k as i128 {
        den *= i;
    }
    let v = num / den;
    debug_assert_eq!(num % den, 0);
    i64::try_from(v).map_err(|_| Error::Overflow("binomial"))
}

impl PSymElement {
    pub fn zero() -> Self {
        PSymElement::default()
    }

    pub fn powersum(lambda: Partition) -> Self {
        let mut p = PSymElement::zero();
        p.add_term(lambda, 1).unwrap();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().map(|(k, &c)| (k, c))
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let updated = cadd(self.coefficient(&lambda), coeff, "psym coefficient")?;
        if updated == 0 {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, updated);
        }
        Ok(())
    }

    pub fn add(&mut self, other: &PSymElement) -> Result<()> {
        for (k, c) in other.terms() {
            self.add_term(k.clone(), c)?;
        }
        Ok(())
    }

    pub fn sub(&mut self, other: &PSymElement) -> Result<()> {
        for (k, c) in other.terms() {
            self.add_term(k.clone(), -c)?;
        }
        Ok(())
    }

    /// Product: power sums multiply by merging partitions.
    pub fn mul(&self, other: &PSymElement) -> Result<PSymElement> {
        let mut out = PSymElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.merge(b), cmul(ca, cb, "psym product")?)?;
            }
        }
        Ok(out)
    }

    /// Expansion into the monomial quasi-symmetric basis: a power sum with
    /// one part equals the one-part monomial function, and products expand
    /// through the quasi-shuffle.
    pub fn to_monomial(&self) -> Result<QSymElement> {
        let mut out = QSymElement::zero();
        for (lambda, c) in self.terms() {
            let mut term = QSymElement::unit();
            for &part in lambda.parts() {
                let m = QSymElement::monomial(Composition::new(vec![part]).unwrap());
                term = term.quasi_shuffle(&m)?;
            }
            for (alpha, tc) in term.terms() {
                out.add_term(alpha.clone(), cmul(tc, c, "powersum expansion")?)?;
            }
        }
        Ok(out)
    }

    /// Setting the first `m` variables to one: each power sum contributes
    /// m^(number of parts).
    pub fn specialize(&self, m: i64) -> Result<i64> {
        let mut acc = 0i64;
        for (lambda, c) in self.terms() {
            let mut pw = 1i64;
            for _ in 0..lambda.num_parts() {
                pw = cmul(pw, m, "psym specialization")?;
            }
            acc = cadd(acc, cmul(c, pw, "psym specialization")?, "psym specialization")?;
        }
        Ok(acc)
    }
}

/// Evaluation of the inverse of the counting character on the monomial
/// basis: each composition of length k contributes (-1)^k. Coincides with
/// specialization at -1.
pub fn zeta_q_inverse_eval(x: &QSymElement) -> Result<i64> {
    let mut acc = 0i64;
    for (alpha, c) in x.terms() {
        let sign = if alpha.length() % 2 == 0 { 1 } else { -1 };
        acc = cadd(acc, cmul(c, sign, "inverse character")?, "inverse character")?;
    }
    Ok(acc)
}
