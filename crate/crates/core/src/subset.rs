//! Bitmask subsets of a ground set `{0, .., n-1}` with `n <= 64`.
//!
//! Every set-valued algorithm in this crate enumerates subsets, so subsets
//! are machine words throughout: bit `i` set means element `i` is present.

/// A subset of the ground set, one bit per element.
pub type Mask = u64;

/// Largest supported ground-set size.
pub const MAX_GROUND: usize = 64;

/// The full set `{0, .., n-1}`.
pub fn full_mask(n: usize) -> Mask {
    debug_assert!(n <= MAX_GROUND);
    if n == MAX_GROUND {
        Mask::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of elements in the subset.
pub fn card(mask: Mask) -> usize {
    mask.count_ones() as usize
}

/// Elements of the subset in increasing order.
pub fn elements(mask: Mask) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// Builds a mask from element indices. Panics on indices >= 64.
pub fn mask_of(elems: &[usize]) -> Mask {
    let mut m = 0;
    for &e in elems {
        assert!(e < MAX_GROUND, "element index {e} out of range");
        m |= 1 << e;
    }
    m
}

/// All submasks of `mask`, including the empty set and `mask` itself,
/// in decreasing numeric order of the submask.
pub fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut cur = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if cur == 0 {
            done = true;
        } else {
            cur = (cur - 1) & mask;
        }
        Some(out)
    })
}

/// Re-packs a subset of the ground set into dense indices `0..|keep|`.
///
/// The `i`-th smallest element of `keep` becomes index `i`; this fixes the
/// index map that restriction uses. Returns the packed image of
/// `mask & keep`.
pub fn pack_into(mask: Mask, keep: Mask) -> Mask {
    let mut out = 0;
    let mut pos = 0;
    let mut k = keep;
    while k != 0 {
        let i = k.trailing_zeros() as u64;
        if mask >> i & 1 == 1 {
            out |= 1 << pos;
        }
        pos += 1;
        k &= k - 1;
    }
    out
}

/// Inverse of [`pack_into`]: spreads dense indices back onto `keep`.
pub fn unpack_from(packed: Mask, keep: Mask) -> Mask {
    let mut out = 0;
    let mut pos = 0;
    let mut k = keep;
    while k != 0 {
        let i = k.trailing_zeros() as u64;
        if packed >> pos & 1 == 1 {
            out |= 1 << i;
        }
        pos += 1;
        k &= k - 1;
    }
    out
}

/// Connected components of the ground set `{0, .., n-1}` after gluing each
/// given set into one block. Isolated elements stay as singleton
/// components. Returns the component masks sorted ascending.
pub(crate) fn merge_components<I: IntoIterator<Item = Mask>>(n: usize, sets: I) -> Vec<Mask> {
    let mut comps: Vec<Mask> = (0..n).map(|i| 1u64 << i).collect();
    for s in sets {
        let mut merged = s;
        comps.retain(|&c| {
            if c & merged != 0 {
                merged |= c;
                false
            } else {
                true
            }
        });
        if merged != 0 {
            comps.push(merged);
        }
    }
    comps.sort_unstable();
    comps
}
