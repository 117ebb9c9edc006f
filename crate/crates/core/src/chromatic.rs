//! The counting character, its convolution powers, chromatic symmetric
//! functions of building sets in two bases, chromatic polynomials, and the
//! brute-force coloring oracle.
//!
//! The character takes value 1 on discrete building sets and 0 otherwise;
//! its convolution power indexed by a composition counts ordered
//! decompositions of the ground set into discrete-restriction blocks of the
//! prescribed sizes.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::building::{BuildingSet, SetFamily};
use crate::error::{cadd, cmul, guard, Error, Result};
use crate::subset::{card, full_mask, merge_components, submasks, Mask};
use crate::symfunc::{Composition, PSymElement, Partition, QSymElement};

/// Integer-coefficient univariate polynomial in the number of colors,
/// stored by ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChromaticPolynomial {
    coeffs: Vec<i64>,
}

impl ChromaticPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        ChromaticPolynomial { coeffs }
    }

    pub fn one() -> Self {
        ChromaticPolynomial { coeffs: vec![1] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn eval(&self, m: i64) -> Result<i64> {
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(m as i128)
                .and_then(|v| v.checked_add(c as i128))
                .ok_or(Error::Overflow("polynomial evaluation"))?;
        }
        i64::try_from(acc).map_err(|_| Error::Overflow("polynomial evaluation"))
    }

    pub fn mul(&self, other: &ChromaticPolynomial) -> Result<ChromaticPolynomial> {
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = cadd(coeffs[i + j], cmul(a, b, "polynomial product")?, "polynomial product")?;
            }
        }
        Ok(ChromaticPolynomial::new(coeffs))
    }

    pub fn sub(&self, other: &ChromaticPolynomial) -> ChromaticPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0i64; len];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeffs.get(i).copied().unwrap_or(0) - other.coeffs.get(i).copied().unwrap_or(0);
        }
        ChromaticPolynomial::new(coeffs)
    }

    /// Specialization of a power-sum expansion: each power sum contributes
    /// one monomial of degree equal to its number of parts.
    pub fn from_powersum(p: &PSymElement) -> Result<ChromaticPolynomial> {
        let deg = p.terms().map(|(l, _)| l.num_parts()).max().unwrap_or(0);
        let mut coeffs = vec![0i64; deg + 1];
        for (lambda, c) in p.terms() {
            let k = lambda.num_parts();
            coeffs[k] = cadd(coeffs[k], c, "powersum specialization")?;
        }
        Ok(ChromaticPolynomial::new(coeffs))
    }
}

impl fmt::Display for ChromaticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 && self.coeffs.len() > 1 {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            }
            let a = if first { c } else { c.abs() };
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a == 1 {
                    } else if a == -1 {
                        write!(f, "-")?;
                    } else {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "m")?;
                    } else {
                        write!(f, "m^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// For every subset of the ground set, whether the restriction contains no
/// member with two or more elements.
pub(crate) fn discrete_table(b: &BuildingSet) -> Result<Vec<bool>> {
    guard("subset table rank", 20, b.rank())?;
    let size = 1usize << b.rank();
    let mut bad = vec![false; size];
    for &m in b.members() {
        if card(m) >= 2 {
            bad[m as usize] = true;
        }
    }
    for mask in 1..size {
        if !bad[mask] {
            let mut rest = mask;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                if bad[mask & !low] {
                    bad[mask] = true;
                    break;
                }
                rest &= rest - 1;
            }
        }
    }
    Ok(bad.into_iter().map(|x| !x).collect())
}

/// Number of ordered decompositions of the ground set into blocks of sizes
/// prescribed by `alpha` such that every block induces a discrete
/// restriction.
///
/// Memoized over (remaining mask, remaining suffix of the composition).
pub fn zeta_alpha(b: &BuildingSet, alpha: &Composition) -> Result<i64> {
    if alpha.weight() != b.rank() {
        return Err(Error::InvalidInput(format!(
            "composition weight {} does not match rank {}",
            alpha.weight(),
            b.rank()
        )));
    }
    let discrete = discrete_table(b)?;
    let mut memo: HashMap<(Mask, usize), i64> = HashMap::new();
    fn rec(
        mask: Mask,
        i: usize,
        parts: &[usize],
        discrete: &[bool],
        memo: &mut HashMap<(Mask, usize), i64>,
    ) -> Result<i64> {
        if i == parts.len() {
            return Ok(if mask == 0 { 1 } else { 0 });
        }
        if let Some(&v) = memo.get(&(mask, i)) {
            return Ok(v);
        }
        let mut acc = 0i64;
        for j in submasks(mask) {
            if card(j) == parts[i] && discrete[j as usize] {
                let sub = rec(mask & !j, i + 1, parts, discrete, memo)?;
                acc = cadd(acc, sub, "zeta convolution")?;
            }
        }
        memo.insert((mask, i), acc);
        Ok(acc)
    }
    rec(full_mask(b.rank()), 0, alpha.parts(), &discrete, &mut memo)
}

/// All convolution-power values at once, keyed by composition.
///
/// Single pass over subsets: the table at a mask maps each block-size
/// sequence to the number of ordered discrete decompositions realizing it.
pub fn zeta_table(b: &BuildingSet) -> Result<BTreeMap<Composition, i64>> {
    guard("composition table rank", 12, b.rank())?;
    let n = b.rank();
    let discrete = discrete_table(b)?;
    let size = 1usize << n;
    // compositions encoded by their partial-sum mask within the weight
    let mut table: Vec<HashMap<u32, i64>> = vec![HashMap::new(); size];
    table[0].insert(0, 1);
    for mask in 1..size {
        let mut acc: HashMap<u32, i64> = HashMap::new();
        for j in submasks(mask as Mask) {
            if j == 0 || !discrete[j as usize] {
                continue;
            }
            let a = card(j);
            let rest = mask & !(j as usize);
            let rest_weight = card(rest as Mask);
            for (&enc, &cnt) in &table[rest] {
                let new_enc = if rest_weight == 0 { 0 } else { (enc << a) | (1 << (a - 1)) };
                let slot = acc.entry(new_enc).or_insert(0);
                *slot = cadd(*slot, cnt, "zeta table")?;
            }
        }
        table[mask] = acc;
    }
    let mut out = BTreeMap::new();
    for (enc, cnt) in table[size - 1].drain() {
        out.insert(Composition::from_subset_mask(n, enc as u64), cnt);
    }
    Ok(out)
}

/// The chromatic symmetric function in the monomial basis: the sum of
/// convolution-power values times the matching monomial function.
pub fn psi_monomial(b: &BuildingSet) -> Result<QSymElement> {
    let mut out = QSymElement::zero();
    for (alpha, c) in zeta_table(b)? {
        out.add_term(alpha, c)?;
    }
    Ok(out)
}

/// The chromatic polynomial: the binomial-basis sum over compositions
/// expanded into standard coefficients.
///
/// binomial(m, k) expands through falling factorials scaled by exact
/// integer ratios n!/k!, accumulated over a common denominator n!.
pub fn chromatic_polynomial(b: &BuildingSet) -> Result<ChromaticPolynomial> {
    let n = b.rank();
    let mut by_length = vec![0i64; n + 1];
    for (alpha, c) in zeta_table(b)? {
        by_length[alpha.length()] = cadd(by_length[alpha.length()], c, "chromatic polynomial")?;
    }
    // falling factorial m(m-1)...(m-k+1), ascending coefficients
    let mut falling: Vec<i128> = vec![1];
    let mut factorial: Vec<i128> = vec![1; n + 1];
    for k in 1..=n {
        factorial[k] = factorial[k - 1] * k as i128;
    }
    let mut scaled = vec![0i128; n + 1];
    if n == 0 {
        scaled[0] = by_length[0] as i128;
    }
    for k in 1..=n {
        let mut next = vec![0i128; falling.len() + 1];
        for (i, &c) in falling.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * (k as i128 - 1);
        }
        falling = next;
        let scale = factorial[n] / factorial[k];
        for (i, &c) in falling.iter().enumerate() {
            scaled[i] = scaled[i]
                .checked_add(
                    (by_length[k] as i128)
                        .checked_mul(scale)
                        .and_then(|v| v.checked_mul(c))
                        .ok_or(Error::Overflow("chromatic polynomial"))?,
                )
                .ok_or(Error::Overflow("chromatic polynomial"))?;
        }
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for &c in &scaled {
        if c % factorial[n] != 0 {
            return Err(Error::InternalCheck(
                "chromatic polynomial has a non-integer coefficient".into(),
            ));
        }
        let v = c / factorial[n];
        coeffs.push(i64::try_from(v).map_err(|_| Error::Overflow("chromatic polynomial"))?);
    }
    Ok(ChromaticPolynomial::new(coeffs))
}

/// Component-size partition of the ground set after gluing each set of the
/// chosen subfamily; isolated elements count as size-1 components.
fn component_partition(n: usize, sets: &[Mask], chosen: Mask) -> Partition {
    let comps = merge_components(
        n,
        crate::subset::elements(chosen).map(|i| sets[i]),
    );
    Partition::new(comps.into_iter().map(card).collect()).expect("components are nonempty")
}

/// The chromatic symmetric function in the power-sum basis via signed
/// subsets of the minimal generators.
pub fn psi_powersum_subsets(b: &BuildingSet) -> Result<PSymElement> {
    let (_, c_min) = b.minimal_generators();
    guard("minimal generator count", 20, c_min.len())?;
    let sets = c_min.sets();
    let mut out = PSymElement::zero();
    for chosen in submasks(full_mask(sets.len())) {
        let sign = if card(chosen).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(component_partition(b.rank(), sets, chosen), sign)?;
    }
    Ok(out)
}

/// The lattice of connected partitions of the minimalization: partitions
/// of the ground set all of whose blocks induce connected restrictions,
/// ordered by refinement, with Moebius values from the bottom element.
#[derive(Debug, Clone)]
pub struct ConnectedPartitionLattice {
    n: usize,
    elements: Vec<Vec<Mask>>,
    moebius: Vec<i64>,
}

impl ConnectedPartitionLattice {
    pub fn build(b: &BuildingSet) -> Result<Self> {
        guard("partition lattice rank", 9, b.rank())?;
        let n = b.rank();
        let check = b.minimalization();
        let members: HashSet<Mask> = check.members().iter().copied().collect();
        let mut elements: Vec<Vec<Mask>> = Vec::new();
        let mut blocks: Vec<Mask> = Vec::new();
        enumerate_partitions(full_mask(n), &members, &mut blocks, &mut elements);
        // bottom element first, then by number of blocks descending
        elements.sort_by_key(|p| std::cmp::Reverse(p.len()));
        let mut moebius = vec![0i64; elements.len()];
        for i in 0..elements.len() {
            if elements[i].len() == n {
                moebius[i] = 1;
                continue;
            }
            let mut acc = 0i64;
            for j in 0..i {
                if refines(&elements[j], &elements[i]) {
                    acc = cadd(acc, moebius[j], "moebius")?;
                }
            }
            moebius[i] = -acc;
        }
        Ok(ConnectedPartitionLattice { n, elements, moebius })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Partitions as block masks, coarsest last; parallel to
    /// [`Self::moebius_values`].
    pub fn partitions(&self) -> &[Vec<Mask>] {
        &self.elements
    }

    pub fn moebius_values(&self) -> &[i64] {
        &self.moebius
    }

    pub fn block_type(&self, index: usize) -> Partition {
        Partition::new(self.elements[index].iter().map(|&b| card(b)).collect())
            .expect("blocks are nonempty")
    }

    /// Refinement test between two lattice members.
    pub fn leq(&self, finer: usize, coarser: usize) -> bool {
        refines(&self.elements[finer], &self.elements[coarser])
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }
}

fn refines(finer: &[Mask], coarser: &[Mask]) -> bool {
    finer.iter().all(|&b| coarser.iter().any(|&c| b & !c == 0))
}

fn enumerate_partitions(
    remaining: Mask,
    members: &HashSet<Mask>,
    blocks: &mut Vec<Mask>,
    out: &mut Vec<Vec<Mask>>,
) {
    if remaining == 0 {
        let mut p = blocks.clone();
        p.sort_unstable();
        out.push(p);
        return;
    }
    let low = remaining & remaining.wrapping_neg();
    for candidate in submasks(remaining) {
        if candidate & low != 0 && members.contains(&candidate) {
            blocks.push(candidate);
            enumerate_partitions(remaining & !candidate, members, blocks, out);
            blocks.pop();
        }
    }
}

/// The chromatic symmetric function in the power-sum basis via Moebius
/// values on the lattice of connected partitions.
pub fn psi_powersum_moebius(b: &BuildingSet) -> Result<PSymElement> {
    let lattice = ConnectedPartitionLattice::build(b)?;
    let mut out = PSymElement::zero();
    for i in 0..lattice.len() {
        out.add_term(lattice.block_type(i), lattice.moebius_values()[i])?;
    }
    Ok(out)
}

/// Exact count of maps from the ground set into `m` colors that are not
/// monochromatic on any set of the family with two or more elements.
///
/// This is the oracle the polynomial routes are checked against. Brute
/// force, guarded at `m^n <= 10^7`.
pub fn count_proper_colorings(c_min: &SetFamily, m: i64) -> Result<i64> {
    if m < 0 {
        return Err(Error::InvalidInput("color count must be nonnegative".into()));
    }
    let n = c_min.ground_size();
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(m.max(1) as u128);
    }
    if total > 10_000_000 {
        return Err(Error::GuardExceeded {
            what: "coloring enumeration",
            limit: 10_000_000,
            got: total.min(usize::MAX as u128) as usize,
        });
    }
    if m == 0 {
        return Ok(if n == 0 { 1 } else { 0 });
    }
    // sets grouped by their largest element: checked as soon as complete
    let mut completes_at: Vec<Vec<Mask>> = vec![Vec::new(); n];
    for &s in c_min.sets() {
        if card(s) >= 2 {
            completes_at[63 - s.leading_zeros() as usize].push(s);
        }
    }
    let mut colors = vec![0u32; n];
    fn rec(pos: usize, n: usize, m: i64, colors: &mut [u32], completes_at: &[Vec<Mask>]) -> i64 {
        if pos == n {
            return 1;
        }
        let mut acc = 0;
        'next: for c in 0..m as u32 {
            colors[pos] = c;
            for &s in &completes_at[pos] {
                let mut mono = true;
                let mut rest = s;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    if colors[i] != c {
                        mono = false;
                        break;
                    }
                    rest &= rest - 1;
                }
                if mono {
                    continue 'next;
                }
            }
            acc += rec(pos + 1, n, m, colors, completes_at);
        }
        acc
    }
    Ok(rec(0, n, m, &mut colors, &completes_at))
}

/// The chromatic polynomial evaluated at -1, computed by every route whose
/// guard admits the input, with the routes cross-checked.
///
/// Routes: (i) polynomial evaluation, run up to rank 10 where the
/// composition table stays cheap; (ii) the signed subset formula over
/// minimal generators (at most 20 of them).
pub fn minus_one_invariant(b: &BuildingSet) -> Result<i64> {
    let poly = if b.rank() <= 10 {
        Some(chromatic_polynomial(b)?.eval(-1)?)
    } else {
        None
    };
    let subsets = {
        let (_, c_min) = b.minimal_generators();
        if c_min.len() <= 20 {
            Some(minus_one_by_subsets(b.rank(), c_min.sets())?)
        } else {
            None
        }
    };
    match (poly, subsets) {
        (Some(p), Some(s)) if p != s => Err(Error::InternalCheck(format!(
            "(-1)-evaluation routes disagree: polynomial {p}, subsets {s}"
        ))),
        (Some(p), _) => Ok(p),
        (_, Some(s)) => Ok(s),
        (None, None) => Err(Error::GuardExceeded {
            what: "(-1)-invariant",
            limit: 20,
            got: b.rank(),
        }),
    }
}

/// Signed subset formula over a generating antichain: for each subfamily,
/// (-1) to the (size + number of glued components).
pub(crate) fn minus_one_by_subsets(n: usize, sets: &[Mask]) -> Result<i64> {
    let mut acc = 0i64;
    for chosen in submasks(full_mask(sets.len())) {
        let comps = merge_components(n, crate::subset::elements(chosen).map(|i| sets[i])).len();
        let sign = if (card(chosen) + comps).is_multiple_of(2) { 1 } else { -1 };
        acc = cadd(acc, sign, "subset formula")?;
    }
    Ok(acc)
}

/// Strips free sets off the minimal generators, accumulating the
/// polynomial factor each strip contributes; returns the factors and the
/// residual building set on the reduced ground set.
///
/// A set is free when it meets the union of the other generators in at
/// most one element. A disjoint free set of size s contributes m^s - m and
/// its elements leave the ground set; one sharing a single element
/// contributes m^(s-1) - 1 and only the shared element stays. The factored
/// product is cross-checked against the chromatic polynomial.
pub fn free_set_reduce(b: &BuildingSet) -> Result<(Vec<ChromaticPolynomial>, BuildingSet)> {
    let mut current = b.minimalization();
    let mut factors = Vec::new();
    loop {
        let (_, c_min) = current.minimal_generators();
        let sets = c_min.sets().to_vec();
        let mut reduced = None;
        for (i, &s) in sets.iter().enumerate() {
            let others = sets
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(0u64, |acc, (_, &t)| acc | t);
            let shared = s & others;
            if card(shared) > 1 {
                continue;
            }
            let keep = if shared == 0 {
                factors.push(power_minus(card(s), 1));
                full_mask(current.rank()) & !s
            } else {
                factors.push(power_minus(card(s) - 1, 0));
                full_mask(current.rank()) & !(s & !shared)
            };
            let remaining: Vec<Mask> = sets
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &t)| crate::subset::pack_into(t, keep))
                .collect();
            reduced = Some(BuildingSet::closure(&SetFamily::new(card(keep), remaining)?)?);
            break;
        }
        match reduced {
            Some(next) => current = next,
            None => break,
        }
    }
    // cross-check: factored product equals the chromatic polynomial
    let mut product = ChromaticPolynomial::from_powersum(&psi_powersum_subsets(&current)?)?;
    for f in &factors {
        product = product.mul(f)?;
    }
    let direct = ChromaticPolynomial::from_powersum(&psi_powersum_subsets(b)?)?;
    if product != direct {
        return Err(Error::InternalCheck(format!(
            "free-set factorization ({product}) disagrees with the chromatic polynomial ({direct})"
        )));
    }
    Ok((factors, current))
}

/// m^a - m^b as a polynomial.
fn power_minus(a: usize, b: usize) -> ChromaticPolynomial {
    let mut coeffs = vec![0i64; a + 1];
    coeffs[a] += 1;
    coeffs[b] -= 1;
    ChromaticPolynomial::new(coeffs)
}
