//! Flag vectors, the ab-index, and the cd-index of eulerian building sets
//! computed by two independent routes over exact rationals.
//!
//! Words in the noncommuting letters a, b encode the flag h-vector; for
//! eulerian inputs the generating polynomial rewrites in c = a + b and
//! d = ab + ba with integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Ratio;

use crate::building::BuildingSet;
use crate::chromatic::{discrete_table, zeta_table};
use crate::error::{cadd, cmul, guard, Error, Result};
use crate::eulerian::is_eulerian;
use crate::subset::{card, full_mask, submasks, Mask};
use crate::symfunc::{binomial, Composition};

type Q = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ab {
    A,
    B,
}

/// A word in the noncommuting letters a, b.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AbWord(pub Vec<Ab>);

impl AbWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exchanges the letters a and b at every position.
    pub fn swap_letters(&self) -> AbWord {
        AbWord(
            self.0
                .iter()
                .map(|l| match l {
                    Ab::A => Ab::B,
                    Ab::B => Ab::A,
                })
                .collect(),
        )
    }

    pub fn parse(s: &str) -> Result<AbWord> {
        if s == "1" {
            return Ok(AbWord::default());
        }
        s.chars()
            .map(|ch| match ch {
                'a' => Ok(Ab::A),
                'b' => Ok(Ab::B),
                _ => Err(Error::InvalidInput(format!("letter {ch} is not a or b"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(AbWord)
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{}", if *l == Ab::A { 'a' } else { 'b' })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cd {
    C,
    D,
}

/// A word in the noncommuting letters c (degree one) and d (degree two).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CdWord(pub Vec<Cd>);

impl CdWord {
    /// Total degree: c counts one, d counts two.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| if *l == Cd::C { 1 } else { 2 }).sum()
    }

    pub fn parse(s: &str) -> Result<CdWord> {
        if s == "1" {
            return Ok(CdWord::default());
        }
        s.chars()
            .map(|ch| match ch {
                'c' => Ok(Cd::C),
                'd' => Ok(Cd::D),
                _ => Err(Error::InvalidInput(format!("letter {ch} is not c or d"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(CdWord)
    }
}

impl fmt::Display for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{}", if *l == Cd::C { 'c' } else { 'd' })?;
        }
        Ok(())
    }
}

/// Integer combination of ab-words; zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcPolynomial {
    coeffs: BTreeMap<AbWord, i64>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        NcPolynomial::default()
    }

    pub fn one() -> Self {
        let mut p = NcPolynomial::zero();
        p.add_term(AbWord::default(), 1).unwrap();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AbWord, i64)> {
        self.coeffs.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, w: &AbWord) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: AbWord, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let updated = cadd(self.coefficient(&w), coeff, "word coefficient")?;
        if updated == 0 {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, updated);
        }
        Ok(())
    }

    /// Letter exchange a <-> b applied to every word.
    pub fn swap_letters(&self) -> NcPolynomial {
        let coeffs = self.coeffs.iter().map(|(w, &c)| (w.swap_letters(), c)).collect();
        NcPolynomial { coeffs }
    }

    /// Rewrites into c = a+b, d = ab+ba if possible.
    ///
    /// Triangular elimination: the lexicographically least ab-word of any
    /// cd-expansion determines its cd-word uniquely (c contributes a, d
    /// contributes ab), so coefficients peel off greedily. Returns None
    /// when some leading word is not reachable from any cd-word.
    pub fn to_cd(&self) -> Option<CdPolynomial> {
        let mut rest = self.clone();
        let mut out = CdPolynomial::default();
        while let Some((word, coeff)) = rest.coeffs.iter().next().map(|(w, &c)| (w.clone(), c)) {
            let mut letters = Vec::new();
            let mut i = 0;
            while i < word.0.len() {
                match word.0[i] {
                    Ab::B => return None,
                    Ab::A => {
                        if word.0.get(i + 1) == Some(&Ab::B) {
                            letters.push(Cd::D);
                            i += 2;
                        } else {
                            letters.push(Cd::C);
                            i += 1;
                        }
                    }
                }
            }
            let cd = CdWord(letters);
            let expansion = expand_cd_word(&cd);
            for (w, c) in expansion.terms() {
                rest.add_term(w.clone(), (-coeff).checked_mul(c)?).ok()?;
            }
            out.add_term(cd, coeff).ok()?;
        }
        Some(out)
    }
}

impl fmt::Display for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_word_poly(f, self.coeffs.iter().map(|(w, c)| (w.to_string(), *c)))
    }
}

/// Integer combination of cd-words; zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CdPolynomial {
    coeffs: BTreeMap<CdWord, i64>,
}

impl CdPolynomial {
    pub fn zero() -> Self {
        CdPolynomial::default()
    }

    pub fn one() -> Self {
        let mut p = CdPolynomial::zero();
        p.add_term(CdWord::default(), 1).unwrap();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CdWord, i64)> {
        self.coeffs.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, w: &CdWord) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: CdWord, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let updated = cadd(self.coefficient(&w), coeff, "word coefficient")?;
        if updated == 0 {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, updated);
        }
        Ok(())
    }

    pub fn parse(terms: &[(&str, i64)]) -> Result<CdPolynomial> {
        let mut p = CdPolynomial::zero();
        for &(w, c) in terms {
            p.add_term(CdWord::parse(w)?, c)?;
        }
        Ok(p)
    }
}

impl fmt::Display for CdPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_word_poly(f, self.coeffs.iter().map(|(w, c)| (w.to_string(), *c)))
    }
}

fn format_word_poly(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, i64)>,
) -> fmt::Result {
    let mut first = true;
    for (w, c) in terms {
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
            first = false;
        } else {
            write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
        }
        let a = c.abs();
        if a != 1 || w == "1" {
            write!(f, "{a}")?;
        }
        if w != "1" {
            write!(f, "{w}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// The substitution homomorphism c -> a+b, d -> ab+ba on one word.
fn expand_cd_word(w: &CdWord) -> NcPolynomial {
    let mut acc: Vec<(Vec<Ab>, i64)> = vec![(Vec::new(), 1)];
    for l in &w.0 {
        let choices: &[&[Ab]] = match l {
            Cd::C => &[&[Ab::A], &[Ab::B]],
            Cd::D => &[&[Ab::A, Ab::B], &[Ab::B, Ab::A]],
        };
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (prefix, c) in &acc {
            for choice in choices {
                let mut word = prefix.clone();
                word.extend_from_slice(choice);
                next.push((word, *c));
            }
        }
        acc = next;
    }
    let mut out = NcPolynomial::zero();
    for (word, c) in acc {
        out.add_term(AbWord(word), c).unwrap();
    }
    out
}

/// The substitution homomorphism c -> a+b, d -> ab+ba.
pub fn expand_cd(p: &CdPolynomial) -> Result<NcPolynomial> {
    let mut out = NcPolynomial::zero();
    for (w, c) in p.terms() {
        for (ab, e) in expand_cd_word(w).terms() {
            out.add_term(ab.clone(), cmul(c, e, "cd expansion")?)?;
        }
    }
    Ok(out)
}

/// The flag f-vector (convolution-power values) and flag h-vector (its
/// inclusion-exclusion transform over refinement), indexed by compositions
/// of the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVector {
    rank: usize,
    f: BTreeMap<Composition, i64>,
    h: BTreeMap<Composition, i64>,
}

impl FlagVector {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn zeta(&self, alpha: &Composition) -> i64 {
        self.f.get(alpha).copied().unwrap_or(0)
    }

    pub fn eta(&self, alpha: &Composition) -> i64 {
        self.h.get(alpha).copied().unwrap_or(0)
    }

    pub fn f_entries(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.f.iter().map(|(a, &c)| (a, c))
    }

    pub fn h_entries(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.h.iter().map(|(a, &c)| (a, c))
    }
}

/// Both flag vectors over all compositions of the rank.
pub fn flag_vectors(b: &BuildingSet) -> Result<FlagVector> {
    guard("flag vector rank", 12, b.rank())?;
    let n = b.rank();
    let table = zeta_table(b)?;
    let mut f = BTreeMap::new();
    let mut h = BTreeMap::new();
    for alpha in Composition::all(n) {
        let fv = table.get(&alpha).copied().unwrap_or(0);
        let mut hv = 0i64;
        for beta_mask in submasks(alpha.subset_mask()) {
            let beta = Composition::from_subset_mask(n, beta_mask);
            let sign = if (alpha.length() - beta.length()).is_multiple_of(2) { 1 } else { -1 };
            let term = cmul(sign, table.get(&beta).copied().unwrap_or(0), "flag transform")?;
            hv = cadd(hv, term, "flag transform")?;
        }
        f.insert(alpha.clone(), fv);
        h.insert(alpha, hv);
    }
    Ok(FlagVector { rank: n, f, h })
}

/// Word of length rank-1 with the letter b exactly at the partial-sum
/// positions of the composition.
pub fn word_of_composition(alpha: &Composition) -> AbWord {
    let n = alpha.weight();
    let mask = alpha.subset_mask();
    AbWord(
        (1..n)
            .map(|i| if mask >> (i - 1) & 1 == 1 { Ab::B } else { Ab::A })
            .collect(),
    )
}

/// The generating polynomial of the flag h-vector in the letters a, b.
pub fn ab_index(b: &BuildingSet) -> Result<NcPolynomial> {
    if b.rank() == 0 {
        return Err(Error::InvalidInput("ab-index needs rank at least 1".into()));
    }
    let fv = flag_vectors(b)?;
    let mut out = NcPolynomial::zero();
    for (alpha, eta) in fv.h_entries() {
        out.add_term(word_of_composition(alpha), eta)?;
    }
    Ok(out)
}

// ---- rational word polynomials for the two cd routes ----

type QPoly = BTreeMap<CdWord, Q>;

fn qp_zero() -> QPoly {
    QPoly::new()
}

fn qp_one() -> QPoly {
    let mut p = QPoly::new();
    p.insert(CdWord::default(), Q::from_integer(1));
    p
}

fn qp_add_scaled(acc: &mut QPoly, other: &QPoly, scale: Q) {
    for (w, c) in other {
        let v = acc.entry(w.clone()).or_insert_with(|| Q::from_integer(0));
        *v += *c * scale;
        if *v == Q::from_integer(0) {
            acc.remove(w);
        }
    }
}

fn qp_mul(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = qp_zero();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut word = wa.0.clone();
            word.extend_from_slice(&wb.0);
            *out.entry(CdWord(word)).or_insert_with(|| Q::from_integer(0)) += *ca * *cb;
        }
    }
    out.retain(|_, v| *v != Q::from_integer(0));
    out
}

/// Powers of c^2 - 2d up to the given exponent.
fn c2_minus_2d_powers(max: usize) -> Vec<QPoly> {
    let mut base = qp_zero();
    base.insert(CdWord(vec![Cd::C, Cd::C]), Q::from_integer(1));
    base.insert(CdWord(vec![Cd::D]), Q::from_integer(-2));
    let mut out = vec![qp_one()];
    for _ in 0..max {
        let next = qp_mul(out.last().unwrap(), &base);
        out.push(next);
    }
    out
}

fn qp_mul_letter_c(p: &QPoly) -> QPoly {
    let mut out = qp_zero();
    for (w, c) in p {
        let mut word = w.0.clone();
        word.push(Cd::C);
        // letter multiplies on the right of the prefix
        out.insert(CdWord(word), *c);
    }
    out
}

/// Prefix factor for a block of the stated size in the closed form: half
/// of (c^2-2d)^((j-1)/2) c for odd sizes, minus half of (c^2-2d)^(j/2) for
/// even sizes.
fn omega(j: usize, pows: &[QPoly]) -> QPoly {
    let half = Q::new(1, 2);
    let mut out = qp_zero();
    if j % 2 == 1 {
        let p = qp_mul_letter_c(&pows[(j - 1) / 2]);
        qp_add_scaled(&mut out, &p, half);
    } else {
        qp_add_scaled(&mut out, &pows[j / 2], -half);
    }
    out
}

/// Terminal factor: (c^2-2d)^((j-1)/2) for odd sizes, zero for even.
fn delta(j: usize, pows: &[QPoly]) -> QPoly {
    if j % 2 == 1 {
        pows[(j - 1) / 2].clone()
    } else {
        qp_zero()
    }
}

fn qp_into_integer(p: QPoly, context: &'static str) -> Result<CdPolynomial> {
    let mut out = CdPolynomial::zero();
    for (w, c) in p {
        if !c.is_integer() {
            return Err(Error::InternalCheck(format!(
                "{context}: non-integer coefficient {c} at {w}"
            )));
        }
        let v = i64::try_from(c.to_integer()).map_err(|_| Error::Overflow("cd coefficient"))?;
        out.add_term(w, v)?;
    }
    Ok(out)
}

/// Recursive route: strips one discrete block off the ground set,
/// splitting by block parity, with the terminal correction on discrete
/// restrictions.
fn cd_index_recursive(b: &BuildingSet) -> Result<CdPolynomial> {
    let n = b.rank();
    let discrete = discrete_table(b)?;
    let pows = c2_minus_2d_powers(n / 2 + 1);
    let half = Q::new(1, 2);
    let mut memo: HashMap<Mask, QPoly> = HashMap::new();

    fn rec(
        keep: Mask,
        discrete: &[bool],
        pows: &[QPoly],
        half: Q,
        memo: &mut HashMap<Mask, QPoly>,
    ) -> QPoly {
        if let Some(p) = memo.get(&keep) {
            return p.clone();
        }
        let mut acc = qp_zero();
        for i in submasks(keep) {
            if i == 0 || i == keep || !discrete[i as usize] {
                continue;
            }
            let rest = rec(keep & !i, discrete, pows, half, memo);
            let size = card(i);
            if size % 2 == 1 {
                let prefix = qp_mul_letter_c(&pows[(size - 1) / 2]);
                qp_add_scaled(&mut acc, &qp_mul(&prefix, &rest), half);
            } else {
                qp_add_scaled(&mut acc, &qp_mul(&pows[size / 2], &rest), -half);
            }
        }
        if discrete[keep as usize] {
            let size = card(keep);
            if size % 2 == 1 {
                qp_add_scaled(&mut acc, &pows[(size - 1) / 2], Q::from_integer(1));
            }
        }
        memo.insert(keep, acc.clone());
        acc
    }

    let result = rec(full_mask(n), &discrete, &pows, half, &mut memo);
    qp_into_integer(result, "recursive cd route")
}

/// Closed-form route: sum over compositions of the rank of the
/// convolution-power value times the product of block factors, with the
/// terminal factor killing even last blocks.
fn cd_index_closed(b: &BuildingSet) -> Result<CdPolynomial> {
    let n = b.rank();
    let table = zeta_table(b)?;
    let pows = c2_minus_2d_powers(n / 2 + 1);
    let mut acc = qp_zero();
    for (alpha, zv) in &table {
        if *zv == 0 {
            continue;
        }
        let parts = alpha.parts();
        let last = *parts.last().expect("rank >= 1 compositions are nonempty");
        if last % 2 == 0 {
            continue;
        }
        let mut term = qp_one();
        for &p in &parts[..parts.len() - 1] {
            term = qp_mul(&term, &omega(p, &pows));
        }
        term = qp_mul(&term, &delta(last, &pows));
        qp_add_scaled(&mut acc, &term, Q::from_integer(*zv as i128));
    }
    qp_into_integer(acc, "closed cd route")
}

/// The cd-index of an eulerian building set: both routes computed and
/// cross-checked, and the expansion checked against the ab-index.
pub fn cd_index(b: &BuildingSet) -> Result<CdPolynomial> {
    if b.rank() == 0 {
        return Err(Error::InvalidInput("cd-index needs rank at least 1".into()));
    }
    guard("cd-index rank", 12, b.rank())?;
    if !is_eulerian(b)? {
        return Err(Error::InvalidInput("cd-index requires an eulerian building set".into()));
    }
    let recursive = cd_index_recursive(b)?;
    let closed = cd_index_closed(b)?;
    if recursive != closed {
        return Err(Error::InternalCheck(format!(
            "cd routes disagree: recursive {recursive}, closed {closed}"
        )));
    }
    let expanded = expand_cd(&recursive)?;
    if expanded != ab_index(b)? {
        return Err(Error::InternalCheck(
            "cd-index expansion does not reproduce the ab-index".into(),
        ));
    }
    Ok(recursive)
}

/// The cd-index of the rank-n discrete building set by its own recursion
/// over block sizes with binomial multiplicities.
pub fn andre_phi(n: usize) -> Result<CdPolynomial> {
    if n == 0 || n > 12 {
        return Err(Error::GuardExceeded { what: "Andre polynomial rank", limit: 12, got: n });
    }
    let pows = c2_minus_2d_powers(n / 2 + 1);
    let half = Q::new(1, 2);
    let mut phi: Vec<QPoly> = vec![qp_zero()]; // empty-rank term is absorbed by delta
    for m in 1..=n {
        let mut acc = qp_zero();
        for k in 1..m {
            let coeff = Q::from_integer(binomial(m as i64, k)? as i128);
            if k % 2 == 1 {
                let prefix = qp_mul_letter_c(&pows[(k - 1) / 2]);
                qp_add_scaled(&mut acc, &qp_mul(&prefix, &phi[m - k]), half * coeff);
            } else {
                qp_add_scaled(&mut acc, &qp_mul(&pows[k / 2], &phi[m - k]), -half * coeff);
            }
        }
        if m % 2 == 1 {
            qp_add_scaled(&mut acc, &pows[(m - 1) / 2], Q::from_integer(1));
        }
        phi.push(acc);
    }
    qp_into_integer(phi.pop().unwrap(), "Andre recursion")
}
