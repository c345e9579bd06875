//! The reduced representation ring of `(Z_2)^r` over GF(2).
//!
//! Irreducible real representations of `(Z_2)^r` are the characters `Y_S`,
//! one per subset `S` of the generators. The ring is the polynomial ring on
//! the nontrivial ones: `Y_S · Y_S` is a degree-2 monomial, never collapsed.

use std::collections::BTreeSet;
use std::fmt;
use std::num::NonZeroU32;

use thiserror::Error;

/// Ranks are bounded by the bitmask width.
pub const MAX_RANK: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("rank {0} outside 1..={MAX_RANK}")]
    InvalidRank(usize),
    #[error("character {{{0}}} does not live in rank {1}")]
    CharacterOutOfRange(String, usize),
    #[error("empty subset does not define a nontrivial character")]
    EmptyCharacter,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("homomorphism has {got} images but the element lives in rank {expected}")]
    HomArity { expected: usize, got: usize },
    #[error("pullback of Y{{{0}}} is the trivial character")]
    PullbackEmpty(String),
}

fn mask_to_string(mask: u32) -> String {
    let items: Vec<String> = (0..32)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| (i + 1).to_string())
        .collect();
    items.join(",")
}

fn rank_mask(rank: usize) -> u32 {
    if rank >= 32 {
        u32::MAX
    } else {
        (1u32 << rank) - 1
    }
}

/// A nontrivial character `Y_S`, `S` a nonempty set of generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(NonZeroU32);

impl Character {
    pub fn from_mask(mask: u32) -> Result<Self, RepError> {
        NonZeroU32::new(mask).map(Character).ok_or(RepError::EmptyCharacter)
    }

    /// 1-based generator indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self, RepError> {
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > MAX_RANK {
                return Err(RepError::CharacterOutOfRange(i.to_string(), MAX_RANK));
            }
            mask |= 1 << (i - 1);
        }
        Self::from_mask(mask)
    }

    pub fn mask(&self) -> u32 {
        self.0.get()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        let m = self.mask();
        (0..32).filter(move |i| m & (1 << i) != 0).map(|i| i + 1)
    }

    pub fn top_index(&self) -> usize {
        32 - self.mask().leading_zeros() as usize
    }

    /// Value on generator `T_i`: `true` for -1.
    pub fn flips(&self, generator: usize) -> bool {
        self.mask() & (1 << (generator - 1)) != 0
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y{{{}}}", mask_to_string(self.mask()))
    }
}

/// A monomial in the characters: sorted `(character, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RepMonomial {
    factors: Vec<(Character, u32)>,
}

impl RepMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_characters<I: IntoIterator<Item = Character>>(chars: I) -> Self {
        let mut m = Self::default();
        for c in chars {
            m.push(c, 1);
        }
        m
    }

    fn push(&mut self, c: Character, mult: u32) {
        if mult == 0 {
            return;
        }
        match self.factors.binary_search_by(|(x, _)| x.cmp(&c)) {
            Ok(i) => self.factors[i].1 += mult,
            Err(i) => self.factors.insert(i, (c, mult)),
        }
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|&(_, m)| m as usize).sum()
    }

    pub fn factors(&self) -> &[(Character, u32)] {
        &self.factors
    }

    /// Each character repeated by its multiplicity.
    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        self.factors
            .iter()
            .flat_map(|&(c, m)| std::iter::repeat(c).take(m as usize))
    }

    pub fn mul(&self, other: &RepMonomial) -> RepMonomial {
        let mut out = self.clone();
        for &(c, m) in &other.factors {
            out.push(c, m);
        }
        out
    }

    pub fn multiplicity(&self, c: Character) -> u32 {
        self.factors
            .iter()
            .find(|(x, _)| *x == c)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    }

    fn top_index(&self) -> usize {
        self.factors.iter().map(|(c, _)| c.top_index()).max().unwrap_or(0)
    }
}

impl fmt::Display for RepMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for &(c, m) in &self.factors {
            if m == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{m}")?;
            }
        }
        Ok(())
    }
}

/// A GF(2)-combination of monomials over a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepElement {
    rank: usize,
    monomials: BTreeSet<RepMonomial>,
}

impl RepElement {
    pub fn zero(rank: usize) -> Result<Self, RepError> {
        if rank == 0 || rank > MAX_RANK {
            return Err(RepError::InvalidRank(rank));
        }
        Ok(RepElement {
            rank,
            monomials: BTreeSet::new(),
        })
    }

    pub fn one(rank: usize) -> Result<Self, RepError> {
        let mut e = Self::zero(rank)?;
        e.monomials.insert(RepMonomial::one());
        Ok(e)
    }

    pub fn from_monomial(rank: usize, m: RepMonomial) -> Result<Self, RepError> {
        let mut e = Self::zero(rank)?;
        e.toggle(m)?;
        Ok(e)
    }

    pub fn from_character(rank: usize, c: Character) -> Result<Self, RepError> {
        Self::from_monomial(rank, RepMonomial::from_characters([c]))
    }

    /// Adds a single monomial (mod 2).
    pub fn toggle(&mut self, m: RepMonomial) -> Result<(), RepError> {
        if m.top_index() > self.rank {
            return Err(RepError::CharacterOutOfRange(m.to_string(), self.rank));
        }
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &RepMonomial> {
        self.monomials.iter()
    }

    pub fn contains(&self, m: &RepMonomial) -> bool {
        self.monomials.contains(m)
    }

    /// The common degree of all monomials; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.monomials.iter().map(RepMonomial::degree);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    fn check_rank(&self, other: &RepElement) -> Result<(), RepError> {
        if self.rank != other.rank {
            return Err(RepError::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn add(&self, other: &RepElement) -> Result<RepElement, RepError> {
        self.check_rank(other)?;
        Ok(RepElement {
            rank: self.rank,
            monomials: self
                .monomials
                .symmetric_difference(&other.monomials)
                .cloned()
                .collect(),
        })
    }

    pub fn mul(&self, other: &RepElement) -> Result<RepElement, RepError> {
        self.check_rank(other)?;
        let mut out = RepElement::zero(self.rank)?;
        for a in &self.monomials {
            for b in &other.monomials {
                let p = a.mul(b);
                if !out.monomials.remove(&p) {
                    out.monomials.insert(p);
                }
            }
        }
        Ok(out)
    }

    /// Restriction along `h: (Z_2)^r → (Z_2)^n`: every `Y_T` becomes
    /// `Y_{Δ_{t∈T} S_t}`.
    pub fn pullback(&self, h: &GroupHom) -> Result<RepElement, RepError> {
        if h.target_rank() != self.rank {
            return Err(RepError::HomArity {
                expected: self.rank,
                got: h.target_rank(),
            });
        }
        let mut out = RepElement::zero(h.source_rank())?;
        for m in &self.monomials {
            let mut image = RepMonomial::one();
            for &(c, mult) in m.factors() {
                image.push(h.pull_character(c)?, mult);
            }
            out.toggle(image)?;
        }
        Ok(out)
    }
}

impl fmt::Display for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// `Λ_{S_1..S_n}: (Z_2)^r → (Z_2)^n`, `T_i ↦ Π_{j: i∈S_j} T_j`.
///
/// Images may be empty or repeated here; whether they give a pulled-back
/// action with finitely many fixed points is checked elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    source_rank: usize,
    images: Vec<u32>,
}

impl GroupHom {
    pub fn new(source_rank: usize, images: Vec<u32>) -> Result<Self, RepError> {
        if source_rank == 0 || source_rank > MAX_RANK {
            return Err(RepError::InvalidRank(source_rank));
        }
        if images.is_empty() || images.len() > MAX_RANK {
            return Err(RepError::InvalidRank(images.len()));
        }
        for &s in &images {
            if s & !rank_mask(source_rank) != 0 {
                return Err(RepError::CharacterOutOfRange(mask_to_string(s), source_rank));
            }
        }
        Ok(GroupHom {
            source_rank,
            images,
        })
    }

    /// Images as lists of 1-based indices.
    pub fn from_subsets(source_rank: usize, subsets: &[Vec<usize>]) -> Result<Self, RepError> {
        let mut images = Vec::with_capacity(subsets.len());
        for s in subsets {
            let mut mask = 0u32;
            for &i in s {
                if i == 0 || i > source_rank {
                    return Err(RepError::CharacterOutOfRange(i.to_string(), source_rank));
                }
                mask |= 1 << (i - 1);
            }
            images.push(mask);
        }
        Self::new(source_rank, images)
    }

    pub fn identity(rank: usize) -> Result<Self, RepError> {
        Self::new(rank, (0..rank).map(|i| 1u32 << i).collect())
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.images.len()
    }

    /// `S_1..S_n` as bitmasks.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image_indices(&self) -> Vec<Vec<usize>> {
        self.images
            .iter()
            .map(|&m| (0..32).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect())
            .collect()
    }

    /// `Y_T ↦ Y_{Δ_{t∈T} S_t}`.
    pub fn pull_character(&self, c: Character) -> Result<Character, RepError> {
        let mut mask = 0u32;
        for t in c.indices() {
            let s = self
                .images
                .get(t - 1)
                .ok_or(RepError::CharacterOutOfRange(t.to_string(), self.images.len()))?;
            mask ^= s;
        }
        Character::from_mask(mask).map_err(|_| RepError::PullbackEmpty(mask_to_string(c.mask())))
    }
}

impl fmt::Display for GroupHom {
    /// `1;2;3,4` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|&m| mask_to_string(m)).collect();
        f.write_str(&parts.join(";"))
    }
}
