//! Decision procedures on η-images: nontriviality, the indecomposability
//! certificate search, and families of independent indecomposables.
//!
//! A class of degree `d` is indecomposable as soon as the coefficient of
//! `b_k` or of `b_{k-1} b_1` in its tom Dieck image is nonzero for some
//! `k > d`. The converse does not hold, so a search that finds nothing is
//! [`Verdict::Inconclusive`], never "decomposable".

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linratfun::RationalFunction;
use crate::milnor::{MilnorAction, MilnorError};
use crate::repring::{GroupHom, RepElement, RepError, RepMonomial};
use crate::tomdieck::{b_coefficient, BMultiIndex, TomDieckError};

/// Powers of two tried by the default search policy.
pub const DEFAULT_POWERS: [u32; 3] = [8, 16, 32];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("search candidate k={k} must exceed the degree {d}")]
    CandidateTooSmall { k: u32, d: usize },
    #[error("empty search policy")]
    EmptyPolicy,
    #[error("infeasible family parameters: {0}")]
    Infeasible(String),
    #[error("elements differ in rank or degree")]
    Mixed,
    #[error(transparent)]
    TomDieck(#[from] TomDieckError),
    #[error(transparent)]
    Milnor(#[from] MilnorError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientKind {
    /// `b_k`
    Single,
    /// `b_{k-1} b_1`
    Split,
}

impl CoefficientKind {
    pub fn b_index(self, k: u32) -> BMultiIndex {
        match self {
            CoefficientKind::Single => BMultiIndex::single(k),
            CoefficientKind::Split => BMultiIndex::split(k),
        }
    }
}

impl fmt::Display for CoefficientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoefficientKind::Single => "single",
            CoefficientKind::Split => "split",
        })
    }
}

/// The `(m, n, hom)` a class was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassParams {
    pub m: usize,
    pub n: usize,
    pub hom: Option<GroupHom>,
}

impl From<&MilnorAction> for ClassParams {
    fn from(a: &MilnorAction) -> Self {
        ClassParams {
            m: a.m(),
            n: a.n(),
            hom: a.hom().cloned(),
        }
    }
}

/// Witness that a degree-`d` class is indecomposable: the coefficient of
/// `kind.b_index(k)` is the nonzero `witness`, with `k > d`.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub k: u32,
    pub kind: CoefficientKind,
    pub witness: RationalFunction,
    pub degree: usize,
    pub params: Option<ClassParams>,
}

impl Certificate {
    /// Recomputes the coefficient and compares it with the stored witness.
    pub fn recheck(&self, e: &RepElement) -> Result<bool, CriteriaError> {
        if self.k as usize <= self.degree || self.witness.is_zero() {
            return Ok(false);
        }
        let fresh = b_coefficient(e, &self.kind.b_index(self.k))?;
        Ok(!fresh.is_zero() && fresh.numerator() == self.witness.numerator()
            && fresh.denominator() == self.witness.denominator())
    }
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Proven(Certificate),
    Inconclusive,
}

impl Verdict {
    pub fn is_proven(&self) -> bool {
        matches!(self, Verdict::Proven(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Proven(c) => Some(c),
            Verdict::Inconclusive => None,
        }
    }
}

/// Ordered list of `k` values to try.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchPolicy {
    k_candidates: Vec<u32>,
}

impl SearchPolicy {
    pub fn new(k_candidates: Vec<u32>) -> Self {
        SearchPolicy { k_candidates }
    }

    /// Every `k` in `lo..=hi`.
    pub fn range(lo: u32, hi: u32) -> Self {
        SearchPolicy {
            k_candidates: (lo..=hi).collect(),
        }
    }

    /// `{N + m : N ∈ {8, 16, 32}}` restricted to `k > d`, ascending.
    pub fn default_for(m: usize, d: usize) -> Self {
        let mut ks: Vec<u32> = DEFAULT_POWERS
            .iter()
            .map(|&n| n + m as u32)
            .filter(|&k| k as usize > d)
            .collect();
        ks.sort_unstable();
        ks.dedup();
        SearchPolicy { k_candidates: ks }
    }

    pub fn candidates(&self) -> &[u32] {
        &self.k_candidates
    }
}

/// Tries `b_k` then `b_{k-1} b_1` for each candidate in order and returns
/// the first nonzero coefficient.
pub fn test_indecomposable(
    e: &RepElement,
    d: usize,
    policy: &SearchPolicy,
) -> Result<Verdict, CriteriaError> {
    if policy.k_candidates.is_empty() {
        return Err(CriteriaError::EmptyPolicy);
    }
    if let Some(&k) = policy.k_candidates.iter().find(|&&k| k as usize <= d) {
        return Err(CriteriaError::CandidateTooSmall { k, d });
    }
    if e.is_zero() {
        return Ok(Verdict::Inconclusive);
    }
    for &k in &policy.k_candidates {
        for kind in [CoefficientKind::Single, CoefficientKind::Split] {
            // b_{k-1} b_1 needs two factors.
            if kind == CoefficientKind::Split && d < 2 {
                continue;
            }
            let witness = b_coefficient(e, &kind.b_index(k))?;
            if !witness.is_zero() {
                return Ok(Verdict::Proven(Certificate {
                    k,
                    kind,
                    witness,
                    degree: d,
                    params: None,
                }));
            }
        }
    }
    Ok(Verdict::Inconclusive)
}

/// [`test_indecomposable`] on the η-image of a Milnor action, with the
/// action recorded in the certificate.
pub fn certify_action(action: &MilnorAction, policy: &SearchPolicy) -> Result<Verdict, CriteriaError> {
    let e = action.eta()?;
    Ok(match test_indecomposable(&e, action.dimension(), policy)? {
        Verdict::Proven(mut c) => {
            c.params = Some(action.into());
            Verdict::Proven(c)
        }
        Verdict::Inconclusive => Verdict::Inconclusive,
    })
}

/// η is injective, so a class bounds iff its image vanishes.
pub fn is_nonbounding(e: &RepElement) -> bool {
    !e.is_zero()
}

/// Nonempty subsets of `{lo..=hi}` ordered by size, then lexicographically.
pub fn subsets_by_size(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let elems: Vec<usize> = (lo..=hi).collect();
    let mut out = Vec::new();
    for size in 1..=elems.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| elems[i]).collect());
            // next combination
            let mut pos = size;
            while pos > 0 && idx[pos - 1] == elems.len() - size + pos - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            idx[pos - 1] += 1;
            for q in pos..size {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    out
}

/// The homomorphism `ψ_j: (Z_2)^k → (Z_2)^n` with `S_1 = {j}` and `S_2..S_n`
/// the first `n-1` nonempty subsets of `{free_from..=k}`.
pub fn family_hom(k: usize, j: usize, n: usize, free_from: usize) -> Result<GroupHom, CriteriaError> {
    let pool = subsets_by_size(free_from, k);
    if pool.len() < n - 1 {
        return Err(CriteriaError::Infeasible(format!(
            "need {} distinct nonempty subsets of {{{free_from}..{k}}}, only {} exist",
            n - 1,
            pool.len()
        )));
    }
    let mut images = vec![vec![j]];
    images.extend(pool.into_iter().take(n - 1));
    Ok(GroupHom::from_subsets(k, &images)?)
}

/// The actions `ψ_j ∘ φ` on `H(m,n)` for `j = 1..=i` over `(Z_2)^k`.
pub fn linind_actions(k: usize, i: usize, m: usize, n: usize) -> Result<Vec<MilnorAction>, CriteriaError> {
    if i == 0 || i >= k {
        return Err(CriteriaError::Infeasible(format!("need 1 <= i < k, got i={i}, k={k}")));
    }
    if !(i <= m && m + 2 <= n) {
        return Err(CriteriaError::Infeasible(format!(
            "need i <= m <= n-2, got i={i}, m={m}, n={n}"
        )));
    }
    let room = (1usize << (k - i)) - 1;
    if n > room {
        return Err(CriteriaError::Infeasible(format!(
            "need n <= 2^(k-i) - 1 = {room}, got n={n}"
        )));
    }
    (1..=i)
        .map(|j| {
            let hom = family_hom(k, j, n, i + 1)?;
            Ok(MilnorAction::pulled_back(m, n, hom)?)
        })
        .collect()
}

pub fn build_linind_family(k: usize, i: usize, m: usize, n: usize) -> Result<Vec<RepElement>, CriteriaError> {
    linind_actions(k, i, m, n)?
        .iter()
        .map(|a| Ok(a.eta()?))
        .collect()
}

/// GF(2) independence: no nonempty sub-collection sums to zero.
///
/// Decided by Gaussian elimination with monomials as coordinates.
pub fn verify_linear_independence(es: &[RepElement]) -> Result<bool, CriteriaError> {
    let Some(first) = es.first() else {
        return Ok(true);
    };
    let degree = first.homogeneous_degree();
    if es
        .iter()
        .any(|e| e.rank() != first.rank() || (!e.is_zero() && e.homogeneous_degree() != degree))
    {
        return Err(CriteriaError::Mixed);
    }
    let mut basis: BTreeMap<RepMonomial, RepElement> = BTreeMap::new();
    for e in es {
        let mut v = e.clone();
        loop {
            let Some(pivot) = v.monomials().next().cloned() else {
                return Ok(false);
            };
            match basis.get(&pivot) {
                Some(row) => v = v.add(row)?,
                None => {
                    basis.insert(pivot, v);
                    break;
                }
            }
        }
    }
    Ok(true)
}
