//! Formal integer combinations of building sets and the antipode.
//!
//! Linear combinations live on equivalence classes: a building set is
//! identified with the multiset of canonical forms of its connected
//! components, so `FormalSum` keys are canonical products and collection
//! happens automatically.

use std::collections::BTreeMap;
use std::fmt;

use crate::building::BuildingSet;
use crate::error::{cadd, guard, Result};
use crate::subset::{full_mask, submasks, Mask};

/// Canonical form of a connected building set: its rank and the member
/// encoding minimized over all ground-set permutations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalFactor {
    pub rank: usize,
    pub members: Vec<Mask>,
}

/// A product of connected building sets up to equivalence: the sorted
/// multiset of canonical factors. The empty product is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ProductKey(pub Vec<CanonicalFactor>);

impl ProductKey {
    pub fn unit() -> Self {
        ProductKey(Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|f| f.rank).sum()
    }

    /// All factors are single points, i.e. the product is discrete.
    pub fn is_discrete(&self) -> bool {
        self.0.iter().all(|f| f.rank == 1)
    }

    pub fn concat(&self, other: &ProductKey) -> ProductKey {
        let mut factors = self.0.clone();
        factors.extend(other.0.iter().cloned());
        factors.sort();
        ProductKey(factors)
    }
}

/// Canonical product key of a building set: canonical forms of its
/// connected components, sorted.
pub fn canonical_key(b: &BuildingSet) -> Result<ProductKey> {
    let mut factors = Vec::new();
    for comp in b.connected_components() {
        factors.push(CanonicalFactor {
            rank: comp.rank(),
            members: comp.canonical_members()?,
        });
    }
    factors.sort();
    Ok(ProductKey(factors))
}

/// Integer linear combination of canonical products. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalSum {
    terms: BTreeMap<ProductKey, i64>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    pub fn unit() -> Self {
        let mut s = FormalSum::zero();
        s.add_term(ProductKey::unit(), 1).unwrap();
        s
    }

    pub fn from_building_set(b: &BuildingSet) -> Result<Self> {
        let mut s = FormalSum::zero();
        s.add_term(canonical_key(b)?, 1)?;
        Ok(s)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ProductKey, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coefficient(&self, key: &ProductKey) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, key: ProductKey, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let updated = cadd(self.coefficient(&key), coeff, "formal sum coefficient")?;
        if updated == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, updated);
        }
        Ok(())
    }

    pub fn add(&mut self, other: &FormalSum) -> Result<()> {
        for (k, c) in other.terms() {
            self.add_term(k.clone(), c)?;
        }
        Ok(())
    }

    pub fn negate(&mut self) {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
    }

    /// Multiplies every term by the given product key.
    pub fn mul_key(&self, key: &ProductKey) -> FormalSum {
        let terms = self
            .terms
            .iter()
            .map(|(k, &c)| (k.concat(key), c))
            .collect();
        FormalSum { terms }
    }

    /// Applies the discreteness indicator character linearly: a term
    /// contributes its coefficient iff every factor is a single point.
    pub fn apply_zeta(&self) -> Result<i64> {
        let mut acc = 0i64;
        for (k, c) in self.terms() {
            if k.is_discrete() {
                acc = cadd(acc, c, "zeta of formal sum")?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{:+}*", c)?;
            if k.0.is_empty() {
                write!(f, "1")?;
            } else {
                for (j, factor) in k.0.iter().enumerate() {
                    if j > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "B{}({})", factor.rank, factor.members.len())?;
                }
            }
        }
        Ok(())
    }
}

/// Signed sum over all ordered decompositions of the ground set into
/// nonempty blocks of the product of restrictions:
/// the antipode of the underlying Hopf algebra, in collected canonical
/// form. For the empty building set the unit is returned.
pub fn antipode(b: &BuildingSet) -> Result<FormalSum> {
    guard("antipode rank", 8, b.rank())?;
    if b.rank() == 0 {
        return Ok(FormalSum::unit());
    }
    let full = full_mask(b.rank());
    // Canonical factors of every restriction, computed once per mask.
    let mut factors: Vec<ProductKey> = Vec::with_capacity(1 << b.rank());
    for mask in 0..=full {
        factors.push(canonical_key(&b.restrict(mask))?);
    }
    // f(mask) = sum over ordered decompositions of `mask` of
    // (-1)^blocks * product of per-block factors, by first-block recursion.
    let mut memo: Vec<Option<FormalSum>> = vec![None; (full as usize) + 1];
    memo[0] = Some(FormalSum::unit());
    for mask in 1..=(full as usize) {
        let mut acc = FormalSum::zero();
        for j in submasks(mask as Mask) {
            if j == 0 || j == mask as Mask {
                continue;
            }
            let rest = memo[(mask as Mask & !j) as usize]
                .as_ref()
                .expect("submasks precede their supersets");
            acc.add(&rest.mul_key(&factors[j as usize]))?;
        }
        // whole mask as the single first block
        acc.add_term(factors[mask].clone(), 1)?;
        acc.negate();
        memo[mask] = Some(acc);
    }
    Ok(memo[full as usize].take().unwrap())
}
