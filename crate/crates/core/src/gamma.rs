//! Position patterns on the index set {1,…,6} of an induced `P6`.
//!
//! A [`GammaPattern`] is a graph with loops on six positions, stored as a
//! 21-bit mask (6 loops and 15 proper pairs). A host graph is
//! P6-γ-heavy when every induced six-vertex path `v1…v6` has some pattern
//! pair `ij` with `d(vi) + d(vj) >= n`; a loop `ii` asks for `2 d(vi) >= n`.
//!
//! An induced path has two labelings. An embedding counts as satisfied when
//! either labeling hits the pattern; for patterns fixed by `i ↦ 7-i` the two
//! readings coincide.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::induced::{for_each_induced, Embedding};

/// Every position pair `(i, j)`, `1 <= i <= j <= 6`, in bit order.
pub const PAIRS: [(u8, u8); 21] = {
    let mut out = [(0u8, 0u8); 21];
    let mut k = 0;
    let mut i = 1;
    while i <= 6 {
        let mut j = i;
        while j <= 6 {
            out[k] = (i, j);
            k += 1;
            j += 1;
        }
        i += 1;
    }
    out
};

const FULL_MASK: u32 = (1 << 21) - 1;

fn pair_bit(i: u8, j: u8) -> u32 {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    let idx = PAIRS.iter().position(|&p| p == (i, j)).expect("positions are in 1..=6");
    1 << idx
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("invalid pattern token {0:?}: expected two digits in 1..=6")]
    BadToken(String),
    #[error("pattern {0} is not symmetrical")]
    NotSymmetrical(GammaPattern),
    #[error("embedding is not an induced P6 of the graph")]
    NotAnInducedP6,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GammaPattern(u32);

impl GammaPattern {
    pub const EMPTY: GammaPattern = GammaPattern(0);

    pub fn from_mask(mask: u32) -> Option<GammaPattern> {
        (mask & !FULL_MASK == 0).then_some(GammaPattern(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    /// Builds a pattern from two-digit codes such as `13` or `66`.
    ///
    /// Panics on digits outside 1..=6; use [`FromStr`] for untrusted input.
    pub fn from_codes(codes: &[u8]) -> GammaPattern {
        GammaPattern(
            codes
                .iter()
                .map(|&c| {
                    let (i, j) = (c / 10, c % 10);
                    assert!((1..=6).contains(&i) && (1..=6).contains(&j), "bad code {c}");
                    pair_bit(i, j)
                })
                .fold(0, |a, b| a | b),
        )
    }

    pub fn full() -> GammaPattern {
        GammaPattern(FULL_MASK)
    }

    pub fn contains(self, i: u8, j: u8) -> bool {
        self.0 & pair_bit(i, j) != 0
    }

    pub fn with(self, i: u8, j: u8) -> GammaPattern {
        GammaPattern(self.0 | pair_bit(i, j))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn pairs(self) -> impl Iterator<Item = (u8, u8)> {
        PAIRS
            .into_iter()
            .enumerate()
            .filter(move |(k, _)| self.0 >> k & 1 == 1)
            .map(|(_, p)| p)
    }

    pub fn loops(self) -> impl Iterator<Item = u8> {
        self.pairs().filter(|(i, j)| i == j).map(|(i, _)| i)
    }

    pub fn union(self, other: GammaPattern) -> GammaPattern {
        GammaPattern(self.0 | other.0)
    }

    pub fn intersection(self, other: GammaPattern) -> GammaPattern {
        GammaPattern(self.0 & other.0)
    }

    pub fn difference(self, other: GammaPattern) -> GammaPattern {
        GammaPattern(self.0 & !other.0)
    }

    pub fn intersects(self, other: GammaPattern) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: GammaPattern) -> bool {
        self.0 & !other.0 == 0
    }

    /// Image under the position reversal `i ↦ 7-i`.
    pub fn mirror(self) -> GammaPattern {
        GammaPattern(self.pairs().map(|(i, j)| pair_bit(7 - i, 7 - j)).fold(0, |a, b| a | b))
    }

    pub fn is_symmetrical(self) -> bool {
        self.mirror() == self
    }
}

impl fmt::Display for GammaPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j) in self.pairs() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{i}{j}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for GammaPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for GammaPattern {
    type Err = GammaError;

    /// Comma- or whitespace-separated two-digit tokens; the empty string and
    /// `empty` denote the empty pattern. `41` is read as `14`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s.eq_ignore_ascii_case("empty") {
            return Ok(GammaPattern::EMPTY);
        }
        let mut mask = 0;
        for tok in s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let digits: Vec<u8> = tok.bytes().map(|b| b.wrapping_sub(b'0')).collect();
            match digits.as_slice() {
                &[i, j] if (1..=6).contains(&i) && (1..=6).contains(&j) => mask |= pair_bit(i, j),
                _ => return Err(GammaError::BadToken(tok.to_string())),
            }
        }
        Ok(GammaPattern(mask))
    }
}

impl Serialize for GammaPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `{14,15,16,24,25,26,34,35,36}`: some position in 1..3 pairs with some in 4..6.
pub fn gamma1() -> GammaPattern {
    GammaPattern::from_codes(&[14, 15, 16, 24, 25, 26, 34, 35, 36])
}

pub fn gamma2() -> GammaPattern {
    GammaPattern::from_codes(&[11, 12, 14, 15, 16, 25, 26, 36, 56, 66])
}

pub fn gamma3() -> GammaPattern {
    GammaPattern::from_codes(&[13, 14, 15, 25, 26, 36, 46])
}

/// `(γ1, γ2, γ3)`.
pub fn gamma_constants() -> (GammaPattern, GammaPattern, GammaPattern) {
    (gamma1(), gamma2(), gamma3())
}

/// All pairs at path distance at least 2: P6-σ-heavy is P6-o-heavy.
pub fn sigma() -> GammaPattern {
    GammaPattern(
        PAIRS
            .iter()
            .filter(|(i, j)| j - i >= 2)
            .map(|&(i, j)| pair_bit(i, j))
            .fold(0, |a, b| a | b),
    )
}

/// Orbits of the 21 position pairs under `i ↦ 7-i`.
pub fn mirror_orbits() -> Vec<GammaPattern> {
    let mut seen = 0u32;
    let mut orbits = Vec::new();
    for (i, j) in PAIRS {
        let bit = pair_bit(i, j);
        if seen & bit != 0 {
            continue;
        }
        let orbit = GammaPattern(bit).union(GammaPattern(bit).mirror());
        seen |= orbit.0;
        orbits.push(orbit);
    }
    orbits
}

/// Every symmetrical pattern, each exactly once, in increasing orbit-subset order.
pub fn enumerate_symmetrical() -> impl Iterator<Item = GammaPattern> {
    let orbits = mirror_orbits();
    (0u32..1 << orbits.len()).map(move |choice| {
        orbits
            .iter()
            .enumerate()
            .filter(|(k, _)| choice >> k & 1 == 1)
            .fold(GammaPattern::EMPTY, |acc, (_, o)| acc.union(*o))
    })
}

/// Whether every 2-connected claw-o-heavy P6-γ-heavy graph is hamiltonian,
/// i.e. whether `γ` lies inside one of γ1, γ2, γ3.
pub fn guarantees_hamiltonicity(gamma: GammaPattern) -> Result<bool, GammaError> {
    if !gamma.is_symmetrical() {
        return Err(GammaError::NotSymmetrical(gamma));
    }
    Ok([gamma1(), gamma2(), gamma3()].iter().any(|g| gamma.is_subset(*g)))
}

/// The first of γ1, γ2, γ3 (1-based) containing `γ`.
pub fn guaranteeing_superpattern(gamma: GammaPattern) -> Option<usize> {
    [gamma1(), gamma2(), gamma3()]
        .iter()
        .position(|g| gamma.is_subset(*g))
        .map(|k| k + 1)
}

/// Position pairs (loops included) of an oriented induced `P6` whose
/// images form a heavy pair of the host.
pub type P6HeavySignature = GammaPattern;

pub fn heavy_signature(g: &Graph, path: &[usize; 6]) -> P6HeavySignature {
    let mut mask = 0;
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        if g.is_heavy_pair(path[usize::from(i) - 1], path[usize::from(j) - 1]) {
            mask |= 1 << k;
        }
    }
    GammaPattern(mask)
}

fn as_p6(g: &Graph, e: &Embedding) -> Result<[usize; 6], GammaError> {
    let p6 = Graph::path(6);
    if !e.is_induced_copy(g, &p6) {
        return Err(GammaError::NotAnInducedP6);
    }
    let mut out = [0; 6];
    out.copy_from_slice(e.vertices());
    Ok(out)
}

/// Positional equality of heavy signatures: `d(ui)+d(uj) >= n` iff
/// `d(vi)+d(vj) >= n` for all `i, j`.
pub fn essentially_same(g: &Graph, e1: &Embedding, e2: &Embedding) -> Result<bool, GammaError> {
    Ok(heavy_signature(g, &as_p6(g, e1)?) == heavy_signature(g, &as_p6(g, e2)?))
}

/// Like [`essentially_same`], but also accepts a match against the reversal of `e2`.
pub fn essentially_same_up_to_reversal(g: &Graph, e1: &Embedding, e2: &Embedding) -> Result<bool, GammaError> {
    let s1 = heavy_signature(g, &as_p6(g, e1)?);
    let s2 = heavy_signature(g, &as_p6(g, e2)?);
    Ok(s1 == s2 || s1 == s2.mirror())
}

/// Calls `visit` once per induced `P6`, oriented so that `v1 < v6`.
pub fn for_each_induced_p6<F>(g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize; 6]) -> ControlFlow<()>,
{
    let p6 = Graph::path(6);
    for_each_induced(g, &p6, |m| {
        if m[0] < m[5] {
            let mut path = [0; 6];
            path.copy_from_slice(m);
            visit(&path)
        } else {
            ControlFlow::Continue(())
        }
    })
}

pub fn induced_p6s(g: &Graph) -> Vec<[usize; 6]> {
    let mut out = Vec::new();
    let _ = for_each_induced_p6(g, |p| {
        out.push(*p);
        ControlFlow::Continue(())
    });
    out
}

fn reversed(path: &[usize; 6]) -> [usize; 6] {
    let mut r = *path;
    r.reverse();
    r
}

/// True when neither labeling of `path` has a heavy pair at a pattern position.
fn is_bad(g: &Graph, gamma: GammaPattern, path: &[usize; 6]) -> bool {
    !heavy_signature(g, path).intersects(gamma.union(gamma.mirror()))
}

/// An induced `P6` such that every pattern pair, in both labelings, is light.
pub fn find_bad_p6(g: &Graph, gamma: GammaPattern) -> Option<[usize; 6]> {
    let mut found = None;
    let _ = for_each_induced_p6(g, |p| {
        if is_bad(g, gamma, p) {
            found = Some(*p);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

pub fn is_p6_gamma_heavy(g: &Graph, gamma: GammaPattern) -> bool {
    find_bad_p6(g, gamma).is_none()
}

/// Distinct heavy signatures over all induced `P6`s in both orientations,
/// each with one representative labeling (the first found).
pub fn signature_classes(g: &Graph) -> BTreeMap<P6HeavySignature, [usize; 6]> {
    let mut classes = BTreeMap::new();
    let _ = for_each_induced_p6(g, |p| {
        for path in [*p, reversed(p)] {
            classes.entry(heavy_signature(g, &path)).or_insert(path);
        }
        ControlFlow::Continue(())
    });
    classes
}

/// Classes of [`signature_classes`] with a class and its mirror merged.
pub fn signature_classes_up_to_reversal(g: &Graph) -> BTreeMap<P6HeavySignature, [usize; 6]> {
    signature_classes(g)
        .into_iter()
        .filter(|(s, _)| *s <= s.mirror())
        .collect()
}

/// Heaviness decided from a precomputed signature set: every class (or its
/// reversal) must meet `γ`.
pub fn is_gamma_heavy_by_classes<'a, I>(classes: I, gamma: GammaPattern) -> bool
where
    I: IntoIterator<Item = &'a P6HeavySignature>,
{
    let both = gamma.union(gamma.mirror());
    classes.into_iter().all(|s| s.intersects(both))
}
