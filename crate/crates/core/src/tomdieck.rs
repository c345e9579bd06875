//! Coefficient extraction for the tom Dieck map.
//!
//! Each character goes to the series
//! `Y_S ↦ σ_S^{-1} Σ_{r≥0} b_r σ_S^r` with `σ_S = Σ_{i∈S} y_i` and `b_0 = 1`.
//! A degree-`d` monomial maps to the product of `d` such series; the
//! coefficient of a monomial `B` in the `b_r` collects every way of handing
//! the parts of `B` to distinct factors. The full series is never built.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gf2poly::{Gf2Polynomial, LinearForm, PolyContext, PolyError};
use crate::linratfun::{tree_sum, FactoredDenominator, RatError, RationalFunction};
use crate::repring::{Character, RepElement, RepMonomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TomDieckError {
    #[error("b-monomial {b} has {parts} parts but the element has degree {degree}")]
    TooManyParts { b: String, parts: usize, degree: usize },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("element has rank {element} but the context has {context} variables")]
    ContextMismatch { element: usize, context: usize },
    #[error(transparent)]
    Rat(#[from] RatError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A monomial in `b_1, b_2, ...`, as `r ↦ multiplicity`. `b_0` is implicit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BMultiIndex {
    mults: BTreeMap<u32, u32>,
}

impl BMultiIndex {
    /// The empty monomial (coefficient of `b_0^d`).
    pub fn empty() -> Self {
        Self::default()
    }

    /// `b_{parts[0]} b_{parts[1]} ...`; zeros are dropped.
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut b = Self::default();
        for &r in parts.iter().filter(|&&r| r > 0) {
            *b.mults.entry(r).or_insert(0) += 1;
        }
        b
    }

    pub fn single(k: u32) -> Self {
        Self::from_parts(&[k])
    }

    /// `b_{k-1} b_1`.
    pub fn split(k: u32) -> Self {
        Self::from_parts(&[k - 1, 1])
    }

    /// `Σ r·mult(r)`.
    pub fn weight(&self) -> u32 {
        self.mults.iter().map(|(&r, &m)| r * m).sum()
    }

    /// `Σ mult(r)`.
    pub fn size(&self) -> usize {
        self.mults.values().map(|&m| m as usize).sum()
    }

    pub fn parts(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mults.iter().map(|(&r, &m)| (r, m))
    }

    /// All monomials of weight at most `max_weight` with at most
    /// `max_size` factors, ordered by weight then parts.
    pub fn enumerate(max_weight: u32, max_size: usize) -> Vec<BMultiIndex> {
        fn rec(
            remaining: u32,
            max_part: u32,
            slots: usize,
            current: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            out.push(current.clone());
            if slots == 0 {
                return;
            }
            for r in (1..=max_part.min(remaining)).rev() {
                current.push(r);
                rec(remaining - r, r, slots - 1, current, out);
                current.pop();
            }
        }
        let mut raw = Vec::new();
        rec(max_weight, max_weight, max_size, &mut Vec::new(), &mut raw);
        let mut out: Vec<BMultiIndex> = raw.iter().map(|p| Self::from_parts(p)).collect();
        out.sort_by_key(|b| (b.weight(), b.size(), b.mults.clone()));
        out
    }
}

impl fmt::Display for BMultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return f.write_str("1");
        }
        for (&r, &m) in &self.mults {
            if m == 1 {
                write!(f, "b{r}")?;
            } else {
                write!(f, "b{r}^{m}")?;
            }
        }
        Ok(())
    }
}

fn form_of(c: Character) -> LinearForm {
    LinearForm::from_mask(c.mask()).expect("characters are nontrivial")
}

/// Memoized `σ^e` for the forms in play.
struct PowerCache {
    ctx: PolyContext,
    powers: HashMap<(LinearForm, u32), Gf2Polynomial>,
}

impl PowerCache {
    fn new(ctx: PolyContext) -> Self {
        PowerCache {
            ctx,
            powers: HashMap::new(),
        }
    }

    fn get(&mut self, form: LinearForm, e: u32) -> Result<&Gf2Polynomial, PolyError> {
        if !self.powers.contains_key(&(form, e)) {
            let p = self.ctx.linear_form_poly(form)?.pow(e)?;
            self.powers.insert((form, e), p);
        }
        Ok(&self.powers[&(form, e)])
    }
}

/// Every placement of `B`'s parts into `slots` distinct slots, as a vector
/// of per-slot exponents (0 for an untouched slot).
fn assignments(b: &BMultiIndex, slots: usize) -> Vec<Vec<u32>> {
    fn place(
        parts: &[(u32, u32)],
        slot: usize,
        current: &mut Vec<u32>,
        remaining: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let left: u32 = remaining.iter().sum();
        if left == 0 {
            out.push(current.clone());
            return;
        }
        if slot == current.len() || (current.len() - slot) < left as usize {
            return;
        }
        // Leave this slot at b_0.
        place(parts, slot + 1, current, remaining, out);
        for (idx, &(r, _)) in parts.iter().enumerate() {
            if remaining[idx] > 0 {
                remaining[idx] -= 1;
                current[slot] = r;
                place(parts, slot + 1, current, remaining, out);
                current[slot] = 0;
                remaining[idx] += 1;
            }
        }
    }
    let parts: Vec<(u32, u32)> = b.parts().collect();
    let mut remaining: Vec<u32> = parts.iter().map(|&(_, m)| m).collect();
    let mut out = Vec::new();
    place(&parts, 0, &mut vec![0; slots], &mut remaining, &mut out);
    out
}

/// Coefficient of `B` contributed by one monomial `Y_{S_1}⋯Y_{S_d}`:
/// `Σ_a Π_t σ_t^{a(t)} / Π_t σ_t`.
pub fn monomial_b_coefficient(
    ctx: PolyContext,
    mono: &RepMonomial,
    b: &BMultiIndex,
) -> Result<RationalFunction, TomDieckError> {
    let forms: Vec<LinearForm> = mono.characters().map(form_of).collect();
    if b.size() > forms.len() {
        return Err(TomDieckError::TooManyParts {
            b: b.to_string(),
            parts: b.size(),
            degree: forms.len(),
        });
    }
    let mut cache = PowerCache::new(ctx);
    let mut numerator = ctx.zero();
    for a in assignments(b, forms.len()) {
        let mut term = ctx.one();
        for (&form, &e) in forms.iter().zip(a.iter()) {
            if e > 0 {
                term = term.mul(cache.get(form, e)?)?;
            }
        }
        numerator = numerator.add(&term)?;
    }
    Ok(RationalFunction::new(
        numerator,
        FactoredDenominator::from_forms(forms),
    )?)
}

/// The coefficient of `B` in `γ(e)`, a rational function in `y_1..y_r`
/// homogeneous of degree `|B| - d` (or zero).
pub fn b_coefficient(e: &RepElement, b: &BMultiIndex) -> Result<RationalFunction, TomDieckError> {
    let ctx = PolyContext::new(e.rank())?;
    b_coefficient_in(ctx, e, b)
}

pub fn b_coefficient_in(
    ctx: PolyContext,
    e: &RepElement,
    b: &BMultiIndex,
) -> Result<RationalFunction, TomDieckError> {
    if ctx.nvars() != e.rank() {
        return Err(TomDieckError::ContextMismatch {
            element: e.rank(),
            context: ctx.nvars(),
        });
    }
    if e.is_zero() {
        return Ok(RationalFunction::zero(ctx));
    }
    let d = e.homogeneous_degree().ok_or(TomDieckError::NotHomogeneous)?;
    if b.size() > d {
        return Err(TomDieckError::TooManyParts {
            b: b.to_string(),
            parts: b.size(),
            degree: d,
        });
    }
    let monomials: Vec<&RepMonomial> = e.monomials().collect();
    let parts = monomials
        .par_iter()
        .map(|m| monomial_b_coefficient(ctx, m, b))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(tree_sum(ctx, &parts)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralityExpectation {
    /// `|B| < d`: the coefficient must vanish.
    Zero,
    /// `|B| ≥ d`: the coefficient must be a polynomial.
    Polynomial,
}

#[derive(Debug, Clone)]
pub struct IntegralityEntry {
    pub b: BMultiIndex,
    pub expectation: IntegralityExpectation,
    pub passed: bool,
    pub value: RationalFunction,
}

#[derive(Debug, Clone)]
pub struct IntegralityReport {
    pub degree: usize,
    pub entries: Vec<IntegralityEntry>,
}

impl IntegralityReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IntegralityEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

/// Checks that every coefficient of weight at most `max_weight` lies in the
/// power-series ring: zero below weight `d`, a polynomial from `d` on.
pub fn check_integrality(
    e: &RepElement,
    d: usize,
    max_weight: u32,
) -> Result<IntegralityReport, TomDieckError> {
    let ctx = PolyContext::new(e.rank())?;
    if !e.is_zero() && e.homogeneous_degree() != Some(d) {
        return Err(TomDieckError::NotHomogeneous);
    }
    let bs = BMultiIndex::enumerate(max_weight, d);
    let entries = bs
        .into_par_iter()
        .map(|b| {
            let value = b_coefficient_in(ctx, e, &b)?;
            let (expectation, passed) = if (b.weight() as usize) < d {
                (IntegralityExpectation::Zero, value.is_zero())
            } else {
                (
                    IntegralityExpectation::Polynomial,
                    value.to_polynomial().is_ok(),
                )
            };
            Ok(IntegralityEntry {
                b,
                expectation,
                passed,
                value,
            })
        })
        .collect::<Result<Vec<_>, TomDieckError>>()?;
    Ok(IntegralityReport { degree: d, entries })
}
