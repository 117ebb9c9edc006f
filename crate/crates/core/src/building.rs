//! Building sets: families of nonempty subsets of a finite ground set that
//! contain every singleton and are closed under unions of overlapping
//! members.
//!
//! The ground set is always `{0, .., n-1}` and subsets are bitmasks. All
//! values are immutable after construction; every operation is a pure
//! function returning fresh values.

use std::fmt;

use crate::error::{guard, Error, Result};
use crate::subset::{card, elements, full_mask, pack_into, Mask, MAX_GROUND};

/// Sort key realizing the "by (size, mask value)" member order.
#[inline]
fn member_key(m: Mask) -> (u32, Mask) {
    (m.count_ones(), m)
}

fn sort_members(members: &mut Vec<Mask>) {
    members.sort_by_key(|&m| member_key(m));
    members.dedup();
}

/// An arbitrary family of distinct subsets of `{0, .., n-1}`.
///
/// Used for generating collections, hypergraphs and nerve vertex data.
/// Emptiness and minimum-size constraints are checked by the consumers
/// (closure rejects sets with fewer than two elements; nerves require an
/// antichain).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    sets: Vec<Mask>,
}

impl SetFamily {
    pub fn new(n: usize, mut sets: Vec<Mask>) -> Result<Self> {
        guard("ground-set size", MAX_GROUND, n)?;
        let full = full_mask(n);
        for &s in &sets {
            if s & !full != 0 {
                return Err(Error::InvalidInput(format!(
                    "set {{{}}} has elements outside the ground set 0..{}",
                    format_mask(s),
                    n
                )));
            }
        }
        sort_members(&mut sets);
        Ok(SetFamily { n, sets })
    }

    pub fn from_slices(n: usize, sets: &[&[usize]]) -> Result<Self> {
        let masks = sets.iter().map(|s| crate::subset::mask_of(s)).collect();
        SetFamily::new(n, masks)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Mask] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// True when no set of the family contains another.
    pub fn is_antichain(&self) -> bool {
        for (i, &s) in self.sets.iter().enumerate() {
            for &t in &self.sets[i + 1..] {
                if s & t == s || s & t == t {
                    return false;
                }
            }
        }
        true
    }
}

/// A building set on the ground set `{0, .., n-1}`.
///
/// Invariants, checked at construction: no member is empty, members are
/// distinct, every singleton is a member, and the union of any two
/// overlapping members is a member. Members are stored sorted by
/// (size, mask value). Optional per-index labels are carried for display
/// purposes only and are ignored by equality.
#[derive(Debug, Clone)]
pub struct BuildingSet {
    n: usize,
    members: Vec<Mask>,
    labels: Option<Vec<String>>,
}

impl PartialEq for BuildingSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.members == other.members
    }
}

impl Eq for BuildingSet {}

impl std::hash::Hash for BuildingSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.members.hash(state);
    }
}

impl fmt::Display for BuildingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, &m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{}}}", format_mask(m))?;
        }
        write!(f, "}}")
    }
}

fn format_mask(m: Mask) -> String {
    elements(m)
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl BuildingSet {
    /// Validates the building-set axioms and constructs.
    pub fn new(n: usize, mut members: Vec<Mask>) -> Result<Self> {
        guard("ground-set size", MAX_GROUND, n)?;
        let full = full_mask(n);
        sort_members(&mut members);
        for &m in &members {
            if m == 0 {
                return Err(Error::InvalidInput("empty member".into()));
            }
            if m & !full != 0 {
                return Err(Error::InvalidInput(format!(
                    "member {{{}}} has elements outside the ground set 0..{}",
                    format_mask(m),
                    n
                )));
            }
        }
        for i in 0..n {
            if members.binary_search_by_key(&member_key(1 << i), |&m| member_key(m)).is_err() {
                return Err(Error::InvalidInput(format!("missing singleton {{{i}}}")));
            }
        }
        for (i, &s) in members.iter().enumerate() {
            for &t in &members[i + 1..] {
                if s & t != 0 {
                    let u = s | t;
                    if members.binary_search_by_key(&member_key(u), |&m| member_key(m)).is_err() {
                        return Err(Error::InvalidInput(format!(
                            "members {{{}}} and {{{}}} overlap but their union is missing",
                            format_mask(s),
                            format_mask(t)
                        )));
                    }
                }
            }
        }
        Ok(BuildingSet { n, members, labels: None })
    }

    fn from_sorted_unchecked(n: usize, members: Vec<Mask>) -> Self {
        debug_assert!(members.windows(2).all(|w| member_key(w[0]) < member_key(w[1])));
        BuildingSet { n, members, labels: None }
    }

    /// For families that satisfy the axioms by construction; sorts and
    /// dedupes but skips the quadratic union scan.
    pub(crate) fn from_members_unvalidated(n: usize, mut members: Vec<Mask>) -> Self {
        sort_members(&mut members);
        BuildingSet::from_sorted_unchecked(n, members)
    }

    /// The discrete building set: singletons only.
    pub fn discrete(n: usize) -> Self {
        BuildingSet::from_sorted_unchecked(n, (0..n).map(|i| 1 << i).collect())
    }

    /// The building set on the empty ground set (the unit of the product).
    pub fn empty() -> Self {
        BuildingSet::discrete(0)
    }

    /// All nonempty subsets of the ground set.
    pub fn complete(n: usize) -> Result<Self> {
        guard("complete building set rank", 20, n)?;
        let mut members: Vec<Mask> = (1..=full_mask(n)).collect();
        sort_members(&mut members);
        Ok(BuildingSet::from_sorted_unchecked(n, members))
    }

    /// Adds the full ground set as a member: the least connected building
    /// set containing `self`. Applied to a discrete set this yields
    /// singletons plus the whole ground set.
    pub fn connected_hull(&self) -> Self {
        if self.n == 0 {
            return self.clone();
        }
        let mut members = self.members.clone();
        members.push(full_mask(self.n));
        sort_members(&mut members);
        let mut out = BuildingSet::from_sorted_unchecked(self.n, members);
        out.labels = self.labels.clone();
        out
    }

    /// Least building set containing the family: all singletons plus the
    /// closure of `c` under unions of overlapping sets.
    ///
    /// Rejects generating sets with fewer than two elements.
    pub fn closure(c: &SetFamily) -> Result<Self> {
        for &s in c.sets() {
            if card(s) < 2 {
                return Err(Error::InvalidInput(format!(
                    "generator {{{}}} must have at least 2 elements",
                    format_mask(s)
                )));
            }
        }
        let n = c.ground_size();
        let mut found: std::collections::HashSet<Mask> = c.sets().iter().copied().collect();
        let mut queue: Vec<Mask> = found.iter().copied().collect();
        while let Some(t) = queue.pop() {
            for &s in c.sets() {
                if s & t != 0 {
                    let u = s | t;
                    if found.insert(u) {
                        queue.push(u);
                    }
                }
            }
        }
        let mut members: Vec<Mask> = found.into_iter().collect();
        members.extend((0..n).map(|i| 1u64 << i));
        sort_members(&mut members);
        Ok(BuildingSet::from_sorted_unchecked(n, members))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn contains_member(&self, m: Mask) -> bool {
        self.members.binary_search_by_key(&member_key(m), |&x| member_key(x)).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "{} labels for a ground set of {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Only singletons.
    pub fn is_discrete(&self) -> bool {
        self.members.len() == self.n
    }

    /// The whole ground set is a member (requires n >= 1).
    pub fn is_connected(&self) -> bool {
        self.n >= 1 && *self.members.last().unwrap() == full_mask(self.n)
    }

    /// Restriction to `keep`, re-packed onto `0..|keep|`.
    ///
    /// The index map is the canonical packing: the i-th smallest element of
    /// `keep` becomes index i (see [`crate::subset::pack_into`]).
    pub fn restriction(&self, keep: Mask) -> Result<Self> {
        if keep & !full_mask(self.n) != 0 {
            return Err(Error::InvalidInput(format!(
                "restriction set {{{}}} not within the ground set 0..{}",
                format_mask(keep),
                self.n
            )));
        }
        Ok(self.restrict(keep))
    }

    pub(crate) fn restrict(&self, keep: Mask) -> Self {
        let members: Vec<Mask> = self
            .members
            .iter()
            .filter(|&&m| m & !keep == 0)
            .map(|&m| pack_into(m, keep))
            .collect();
        let mut out = BuildingSet::from_sorted_unchecked(card(keep), members);
        if let Some(ref labels) = self.labels {
            out.labels = Some(elements(keep).map(|i| labels[i].clone()).collect());
        }
        out
    }

    /// Disjoint union: members of `self` plus shifted members of `other`.
    pub fn product(&self, other: &BuildingSet) -> Result<Self> {
        guard("product rank", MAX_GROUND, self.n + other.n)?;
        let mut members = self.members.clone();
        members.extend(other.members.iter().map(|&m| m << self.n));
        sort_members(&mut members);
        let mut out = BuildingSet::from_sorted_unchecked(self.n + other.n, members);
        if let (Some(a), Some(b)) = (&self.labels, &other.labels) {
            out.labels = Some(a.iter().chain(b.iter()).cloned().collect());
        }
        Ok(out)
    }

    /// All `2^n` ordered pairs (restriction to I, restriction to the
    /// complement), one per subset I in increasing mask order.
    pub fn coproduct_terms(&self) -> Result<Vec<(BuildingSet, BuildingSet)>> {
        guard("coproduct rank", 20, self.n)?;
        let full = full_mask(self.n);
        Ok((0..=full).map(|i| (self.restrict(i), self.restrict(full & !i))).collect())
    }

    /// Inclusion-maximal members; their ground sets partition the ground
    /// set. Returned as masks on the original ground set.
    pub fn component_masks(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = Vec::new();
        for &m in self.members.iter().rev() {
            if out.iter().all(|&c| m & c == 0) {
                out.push(m);
            }
        }
        out.sort_unstable();
        out
    }

    /// Restrictions to the inclusion-maximal members.
    pub fn connected_components(&self) -> Vec<BuildingSet> {
        self.component_masks().into_iter().map(|m| self.restrict(m)).collect()
    }

    /// The generating collection C (members of size >= 2 that are not
    /// unions of two overlapping proper members) together with its
    /// inclusion-minimal elements C_min.
    ///
    /// closure(C) reproduces `self` exactly; closure(C_min) is the
    /// minimalization.
    pub fn minimal_generators(&self) -> (SetFamily, SetFamily) {
        let mut gens: Vec<Mask> = Vec::new();
        for &m in &self.members {
            if card(m) < 2 {
                continue;
            }
            // Largest proper sub-member of m; it is maximal among proper
            // sub-members, and m decomposes iff some member S (properly
            // inside m) covers m \ p while overlapping p.
            let p = self
                .members
                .iter()
                .rev()
                .find(|&&s| s != m && s & !m == 0)
                .copied()
                .expect("singletons are always proper sub-members");
            let rest = m & !p;
            let decomposable = self
                .members
                .iter()
                .any(|&s| s != m && s & !m == 0 && s & rest == rest && s & p != 0);
            if !decomposable {
                gens.push(m);
            }
        }
        let minimal: Vec<Mask> = gens
            .iter()
            .filter(|&&s| !gens.iter().any(|&t| t != s && t & s == t))
            .copied()
            .collect();
        (
            SetFamily { n: self.n, sets: gens },
            SetFamily { n: self.n, sets: minimal },
        )
    }

    /// closure of the inclusion-minimal generators.
    pub fn minimalization(&self) -> Self {
        let (_, c_min) = self.minimal_generators();
        BuildingSet::closure(&c_min).expect("minimal generators are valid generators")
    }

    /// Removes the minimal generator `s` from the generating collection and
    /// takes the closure on the same ground set.
    pub fn deletion(&self, s: Mask) -> Result<Self> {
        let (c, c_min) = self.minimal_generators();
        if !c_min.sets().contains(&s) {
            return Err(Error::InvalidInput(format!(
                "{{{}}} is not a minimal generator",
                format_mask(s)
            )));
        }
        let remaining: Vec<Mask> = c.sets().iter().copied().filter(|&t| t != s).collect();
        let mut out = BuildingSet::closure(&SetFamily { n: self.n, sets: remaining })?;
        out.labels = self.labels.clone();
        Ok(out)
    }

    /// Merges the minimal generator `s` to a single point and re-generates.
    ///
    /// The merged element takes the smallest index of `s`; remaining
    /// indices re-pack in order. Returns the contracted building set and
    /// the old-index -> new-index map. Generators that collapse to
    /// singletons are discarded (singletons are supplied by the axioms).
    pub fn contraction(&self, s: Mask) -> Result<(Self, Vec<usize>)> {
        let (c, c_min) = self.minimal_generators();
        if !c_min.sets().contains(&s) {
            return Err(Error::InvalidInput(format!(
                "{{{}}} is not a minimal generator",
                format_mask(s)
            )));
        }
        let rep = s.trailing_zeros() as usize;
        let kept: Mask = (full_mask(self.n) & !s) | (1 << rep);
        let index_map: Vec<usize> = (0..self.n)
            .map(|i| {
                let old = if s >> i & 1 == 1 { rep } else { i };
                card(kept & ((1u64 << old) - 1))
            })
            .collect();
        let new_n = card(kept);
        let contracted: Vec<Mask> = c
            .sets()
            .iter()
            .map(|&a| {
                let image = if a & s == 0 { a } else { (a & !s) | (1 << rep) };
                pack_into(image, kept)
            })
            .filter(|&a| card(a) >= 2)
            .collect();
        let mut out = BuildingSet::closure(&SetFamily::new(new_n, contracted)?)?;
        if let Some(ref labels) = self.labels {
            out.labels = Some(elements(kept).map(|i| labels[i].clone()).collect());
        }
        Ok((out, index_map))
    }

    /// Member encoding minimized over all ground-set permutations: the
    /// canonical form deciding equivalence. Guarded at n <= 10.
    pub fn canonical_members(&self) -> Result<Vec<Mask>> {
        guard("canonicalization rank", 10, self.n)?;
        let mut best: Option<Vec<Mask>> = None;
        let mut perm: Vec<usize> = (0..self.n).collect();
        permute_all(&mut perm, &mut |p| {
            let mut image: Vec<Mask> = self
                .members
                .iter()
                .map(|&m| elements(m).fold(0u64, |acc, i| acc | (1 << p[i])))
                .collect();
            image.sort_unstable_by_key(|&m| member_key(m));
            match best {
                Some(ref b) if !keyed_less(&image, b) => {}
                _ => best = Some(image),
            }
        });
        Ok(best.unwrap_or_default())
    }

    /// True iff some ground-set bijection maps members onto members.
    pub fn equivalent(&self, other: &BuildingSet) -> Result<bool> {
        if self.n != other.n || self.members.len() != other.members.len() {
            return Ok(false);
        }
        let profile = |b: &BuildingSet| {
            let mut sizes: Vec<u32> = b.members.iter().map(|m| m.count_ones()).collect();
            sizes.sort_unstable();
            sizes
        };
        if profile(self) != profile(other) {
            return Ok(false);
        }
        Ok(self.canonical_members()? == other.canonical_members()?)
    }
}

/// Compares member vectors under the (size, mask value) key order.
fn keyed_less(a: &[Mask], b: &[Mask]) -> bool {
    let ka = a.iter().map(|&m| member_key(m));
    let kb = b.iter().map(|&m| member_key(m));
    ka.cmp(kb) == std::cmp::Ordering::Less
}

/// Heap's algorithm; calls `f` on every permutation of `items`.
fn permute_all<F: FnMut(&[usize])>(items: &mut [usize], f: &mut F) {
    let n = items.len();
    if n == 0 {
        f(items);
        return;
    }
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::mask_of;

    fn family(n: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::from_slices(n, sets).unwrap()
    }

    fn bs(n: usize, sets: &[&[usize]]) -> BuildingSet {
        BuildingSet::closure(&family(n, sets)).unwrap()
    }

    #[test]
    fn closure_forces_overlapping_union() {
        let b = bs(3, &[&[0, 1], &[1, 2]]);
        assert!(b.contains_member(mask_of(&[0, 1, 2])));
    }

    #[test]
    fn closure_of_empty_family_is_discrete() {
        let b = bs(2, &[]);
        assert_eq!(b, BuildingSet::discrete(2));
    }

    #[test]
    fn closure_path_on_four() {
        let b = bs(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(b.members().len(), 10);
        assert!(b.contains_member(mask_of(&[0, 1, 2])));
        assert!(b.contains_member(mask_of(&[1, 2, 3])));
        assert!(b.contains_member(mask_of(&[0, 1, 2, 3])));
        assert!(!b.contains_member(mask_of(&[0, 2])));
    }

    #[test]
    fn closure_rejects_small_generators() {
        let err = BuildingSet::closure(&family(2, &[&[0]]));
        assert!(matches!(err, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn closure_is_idempotent() {
        for b in [bs(4, &[&[0, 1], &[1, 2], &[2, 3]]), bs(3, &[&[0, 1, 2]]), bs(5, &[&[0, 1], &[2, 3, 4]])] {
            let (c, _) = b.minimal_generators();
            assert_eq!(BuildingSet::closure(&c).unwrap(), b);
        }
    }

    #[test]
    fn validation_catches_broken_axioms() {
        // missing singleton
        assert!(BuildingSet::new(2, vec![0b01]).is_err());
        // overlapping union missing
        assert!(BuildingSet::new(3, vec![0b001, 0b010, 0b100, 0b011, 0b110]).is_err());
        // fine once the union is present
        assert!(BuildingSet::new(3, vec![0b001, 0b010, 0b100, 0b011, 0b110, 0b111]).is_ok());
    }

    #[test]
    fn restriction_examples() {
        let k3 = bs(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        assert_eq!(k3.restriction(0).unwrap(), BuildingSet::empty());
        assert_eq!(k3.restriction(mask_of(&[0, 1])).unwrap(), bs(2, &[&[0, 1]]));
        let path = bs(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(path.restriction(mask_of(&[0, 2])).unwrap(), BuildingSet::discrete(2));
        assert!(path.restriction(mask_of(&[3])).is_err());
    }

    #[test]
    fn product_examples() {
        let d1 = BuildingSet::discrete(1);
        assert_eq!(d1.product(&d1).unwrap(), BuildingSet::discrete(2));
        let b = bs(3, &[&[0, 1, 2]]);
        assert_eq!(b.product(&BuildingSet::empty()).unwrap(), b);
        assert_eq!(BuildingSet::empty().product(&b).unwrap(), b);
        let e = bs(2, &[&[0, 1]]);
        assert_eq!(e.product(&e).unwrap(), bs(4, &[&[0, 1], &[2, 3]]));
    }

    #[test]
    fn coproduct_shape() {
        let d1 = BuildingSet::discrete(1);
        let terms = d1.coproduct_terms().unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0], (BuildingSet::empty(), d1.clone()));
        assert_eq!(terms[1], (d1.clone(), BuildingSet::empty()));

        let e = bs(2, &[&[0, 1]]);
        let terms = e.coproduct_terms().unwrap();
        assert_eq!(terms.len(), 4);
        // I = {0} gives a pair of single points
        assert_eq!(terms[1], (BuildingSet::discrete(1), BuildingSet::discrete(1)));
    }

    #[test]
    fn generators_recovered() {
        let k3 = bs(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let (c, c_min) = k3.minimal_generators();
        assert_eq!(c.sets(), &[0b011, 0b101, 0b110]);
        assert_eq!(c_min.sets(), &[0b011, 0b101, 0b110]);

        let (c, _) = BuildingSet::discrete(4).minimal_generators();
        assert!(c.is_empty());

        let p3 = BuildingSet::complete(3).unwrap();
        let (c, _) = p3.minimal_generators();
        assert_eq!(c.sets(), &[0b011, 0b101, 0b110]);
    }

    #[test]
    fn generators_of_non_minimal_building_set() {
        // {0,1,2} is not a union of two overlapping proper members here,
        // so it stays in C, while C_min drops it.
        let b = BuildingSet::new(3, vec![0b001, 0b010, 0b100, 0b011, 0b111]).unwrap();
        let (c, c_min) = b.minimal_generators();
        assert_eq!(c.sets(), &[0b011, 0b111]);
        assert_eq!(c_min.sets(), &[0b011]);
        assert_eq!(BuildingSet::closure(&c).unwrap(), b);
        assert_eq!(b.minimalization(), bs(3, &[&[0, 1]]));
    }

    #[test]
    fn deletion_examples() {
        let k3 = bs(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let del = k3.deletion(mask_of(&[0, 1])).unwrap();
        assert_eq!(del, bs(3, &[&[0, 2], &[1, 2]]));

        let t = bs(3, &[&[0, 1, 2]]);
        assert_eq!(t.deletion(mask_of(&[0, 1, 2])).unwrap(), BuildingSet::discrete(3));
        assert!(t.deletion(mask_of(&[0, 1])).is_err());

        let two = bs(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(two.deletion(mask_of(&[0, 1])).unwrap(), bs(4, &[&[2, 3]]));
    }

    #[test]
    fn contraction_examples() {
        let k3 = bs(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let (con, map) = k3.contraction(mask_of(&[0, 1])).unwrap();
        assert_eq!(con, bs(2, &[&[0, 1]]));
        assert_eq!(map, vec![0, 0, 1]);

        let t = bs(3, &[&[0, 1, 2]]);
        let (con, map) = t.contraction(mask_of(&[0, 1, 2])).unwrap();
        assert_eq!(con, BuildingSet::discrete(1));
        assert_eq!(map, vec![0, 0, 0]);

        let b = bs(5, &[&[0, 1, 2], &[2, 3, 4]]);
        let (con, map) = b.contraction(mask_of(&[0, 1, 2])).unwrap();
        assert_eq!(con, bs(3, &[&[0, 1, 2]]));
        assert_eq!(map, vec![0, 0, 0, 1, 2]);
    }

    #[test]
    fn components() {
        let d4 = BuildingSet::discrete(4);
        assert_eq!(d4.connected_components().len(), 4);
        assert!(d4.connected_components().iter().all(|c| *c == BuildingSet::discrete(1)));

        let t = bs(3, &[&[0, 1, 2]]);
        assert_eq!(t.connected_components(), vec![t.clone()]);
        assert!(t.is_connected());

        let b = bs(5, &[&[0, 1], &[2, 3, 4]]);
        let comps = b.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].rank(), 2);
        assert_eq!(comps[1].rank(), 3);
        assert!(!b.is_connected());
        assert!(BuildingSet::empty().connected_components().is_empty());
    }

    #[test]
    fn equivalence_examples() {
        let p1 = bs(3, &[&[0, 1], &[1, 2]]);
        let p2 = bs(3, &[&[1, 0], &[0, 2]]);
        assert!(p1.equivalent(&p2).unwrap());

        let d2 = BuildingSet::discrete(2);
        let e = bs(2, &[&[0, 1]]);
        assert!(!d2.equivalent(&e).unwrap());

        let star = bs(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        let path = bs(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert!(!star.equivalent(&path).unwrap());
    }

    #[test]
    fn connected_hull_on_discrete() {
        let b = BuildingSet::discrete(3).connected_hull();
        assert_eq!(b.members().len(), 4);
        assert!(b.is_connected());
        assert!(!b.is_discrete());
    }

    #[test]
    fn labels_carry_through() {
        let b = bs(3, &[&[0, 1, 2]])
            .with_labels(vec!["x".into(), "y".into(), "z".into()])
            .unwrap();
        let r = b.restriction(0b101).unwrap();
        assert_eq!(r.labels().unwrap(), &["x".to_string(), "z".to_string()]);
        let (con, _) = b.contraction(0b111).unwrap();
        assert_eq!(con.labels().unwrap(), &["x".to_string()]);
    }
}
