//! Dense GF(2) polynomial oracle, independent of the crate's sparse
//! arithmetic. Coefficients live in a flat bit vector indexed by the
//! exponent vector in mixed radix.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use eqcob::gf2poly::{Gf2Polynomial, LinearForm};
use eqcob::linratfun::RationalFunction;
use eqcob::tomdieck::BMultiIndex;
use eqcob::repring::RepMonomial;

#[derive(Debug, Clone)]
pub struct Dense {
    /// Per-variable exclusive exponent bound.
    pub bounds: Vec<usize>,
    pub coeffs: Vec<bool>,
}

impl Dense {
    pub fn zero(nvars: usize) -> Self {
        Dense {
            bounds: vec![1; nvars],
            coeffs: vec![false],
        }
    }

    pub fn one(nvars: usize) -> Self {
        Dense {
            bounds: vec![1; nvars],
            coeffs: vec![true],
        }
    }

    pub fn nvars(&self) -> usize {
        self.bounds.len()
    }

    fn index(bounds: &[usize], exps: &[usize]) -> usize {
        let mut idx = 0;
        for (b, e) in bounds.iter().zip(exps) {
            idx = idx * b + e;
        }
        idx
    }

    fn exps_of(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.bounds.len()];
        for (slot, b) in out.iter_mut().zip(self.bounds.iter()).rev() {
            *slot = idx % b;
            idx /= b;
        }
        out
    }

    pub fn from_terms(nvars: usize, terms: &[Vec<usize>]) -> Self {
        let mut bounds = vec![1; nvars];
        for t in terms {
            for (b, &e) in bounds.iter_mut().zip(t) {
                *b = (*b).max(e + 1);
            }
        }
        let mut coeffs = vec![false; bounds.iter().product()];
        for t in terms {
            let i = Self::index(&bounds, t);
            coeffs[i] ^= true;
        }
        Dense { bounds, coeffs }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v - 1] = 1;
        Self::from_terms(nvars, &[e])
    }

    /// `Σ_{i∈mask} y_i`.
    pub fn form(nvars: usize, mask: u32) -> Self {
        let terms: Vec<Vec<usize>> = (0..nvars)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| {
                let mut e = vec![0; nvars];
                e[i] = 1;
                e
            })
            .collect();
        Self::from_terms(nvars, &terms)
    }

    pub fn terms(&self) -> BTreeSet<Vec<usize>> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| self.exps_of(i))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| !c)
    }

    pub fn add(&self, other: &Dense) -> Dense {
        let mut terms: BTreeSet<Vec<usize>> = self.terms();
        for t in other.terms() {
            if !terms.remove(&t) {
                terms.insert(t);
            }
        }
        Dense::from_terms(self.nvars(), &terms.into_iter().collect::<Vec<_>>())
    }

    pub fn mul(&self, other: &Dense) -> Dense {
        let bounds: Vec<usize> = self
            .bounds
            .iter()
            .zip(&other.bounds)
            .map(|(a, b)| a + b - 1)
            .collect();
        let mut coeffs = vec![false; bounds.iter().product()];
        let a_nz: Vec<Vec<usize>> = self.terms().into_iter().collect();
        let b_nz: Vec<Vec<usize>> = other.terms().into_iter().collect();
        for a in &a_nz {
            for b in &b_nz {
                let e: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let i = Self::index(&bounds, &e);
                coeffs[i] ^= true;
            }
        }
        Dense { bounds, coeffs }
    }

    pub fn pow(&self, e: u32) -> Dense {
        let mut acc = Dense::one(self.nvars());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn same(&self, other: &Dense) -> bool {
        self.terms() == other.terms()
    }
}

pub fn to_dense(p: &Gf2Polynomial) -> Dense {
    let n = p.context().nvars();
    let terms: Vec<Vec<usize>> = p
        .terms()
        .iter()
        .map(|m| m.exponents().iter().map(|&e| e as usize).collect())
        .collect();
    Dense::from_terms(n, &terms)
}

pub fn forms_product(nvars: usize, forms: impl IntoIterator<Item = LinearForm>) -> Dense {
    forms
        .into_iter()
        .fold(Dense::one(nvars), |acc, f| acc.mul(&Dense::form(nvars, f.mask())))
}

/// A fraction held as dense numerator and dense denominator.
#[derive(Debug, Clone)]
pub struct DenseFrac {
    pub num: Dense,
    pub den: Dense,
}

impl DenseFrac {
    pub fn add(&self, other: &DenseFrac) -> DenseFrac {
        DenseFrac {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn equals(&self, num: &Dense, den: &Dense) -> bool {
        self.num.mul(den).same(&num.mul(&self.den))
    }
}

/// Sorted parts of a b-monomial, e.g. `[1, 4]` for `b_1 b_4`.
pub type BKey = Vec<u32>;

/// Multiplies out `Π_t Σ_{r=0}^{R} b_r σ_t^r` with the b-variables kept
/// symbolic and weight truncated at `max_weight`; returns the
/// `b`-coefficient table of the product (each entry a dense polynomial).
/// The true coefficient of `γ(Y_{S_1}⋯Y_{S_d})` is that entry divided by
/// `Π_t σ_t`.
pub fn truncated_series_product(
    nvars: usize,
    masks: &[u32],
    max_weight: u32,
) -> BTreeMap<BKey, Dense> {
    let mut acc: BTreeMap<BKey, Dense> = BTreeMap::new();
    acc.insert(Vec::new(), Dense::one(nvars));
    for &mask in masks {
        let sigma = Dense::form(nvars, mask);
        let mut next: BTreeMap<BKey, Dense> = BTreeMap::new();
        for (key, poly) in &acc {
            let w: u32 = key.iter().sum();
            for r in 0..=(max_weight - w) {
                let mut k = key.clone();
                if r > 0 {
                    k.push(r);
                    k.sort_unstable();
                }
                let term = poly.mul(&sigma.pow(r));
                let slot = next.entry(k).or_insert_with(|| Dense::zero(nvars));
                *slot = slot.add(&term);
            }
        }
        acc = next;
    }
    acc
}

/// Oracle coefficients of every `B` with `|B| ≤ max_weight` in
/// `γ(Σ monomials)`, keyed by sorted parts. Absent keys are zero.
pub fn oracle_b_table(
    nvars: usize,
    monomials: &[RepMonomial],
    max_weight: u32,
) -> BTreeMap<BKey, DenseFrac> {
    let mut out: BTreeMap<BKey, DenseFrac> = BTreeMap::new();
    for mono in monomials {
        let masks: Vec<u32> = mono.characters().map(|c| c.mask()).collect();
        let den = masks
            .iter()
            .fold(Dense::one(nvars), |acc, &m| acc.mul(&Dense::form(nvars, m)));
        for (key, num) in truncated_series_product(nvars, &masks, max_weight) {
            let term = DenseFrac {
                num,
                den: den.clone(),
            };
            let slot = out.entry(key).or_insert_with(|| DenseFrac {
                num: Dense::zero(nvars),
                den: Dense::one(nvars),
            });
            *slot = slot.add(&term);
        }
    }
    out
}

/// Oracle coefficient of `B` (as sorted parts) in `γ(Σ monomials)`.
pub fn oracle_b_coefficient(nvars: usize, monomials: &[RepMonomial], b: &[u32]) -> DenseFrac {
    let weight: u32 = b.iter().sum();
    let mut key = b.to_vec();
    key.sort_unstable();
    oracle_b_table(nvars, monomials, weight)
        .remove(&key)
        .unwrap_or(DenseFrac {
            num: Dense::zero(nvars),
            den: Dense::one(nvars),
        })
}

pub fn b_key(b: &BMultiIndex) -> BKey {
    let mut key: BKey = b
        .parts()
        .flat_map(|(part, mult)| std::iter::repeat(part).take(mult as usize))
        .collect();
    key.sort_unstable();
    key
}

pub fn rat_to_frac(f: &RationalFunction) -> DenseFrac {
    let n = f.context().nvars();
    let mut den = Dense::one(n);
    for (form, mult) in f.denominator().factors() {
        for _ in 0..mult {
            den = den.mul(&Dense::form(n, form.mask()));
        }
    }
    DenseFrac {
        num: to_dense(f.numerator()),
        den,
    }
}

/// Value equality of an implementation result and an oracle fraction.
pub fn agrees(f: &RationalFunction, oracle: &DenseFrac) -> bool {
    let g = rat_to_frac(f);
    oracle.equals(&g.num, &g.den)
}

/// `Σ_i y_i^k / Π_{j≠i}(y_i + y_j)` built densely, with an extra `y_i`
/// in each denominator when `extra_y`.
pub fn dense_lagrange(n: usize, k: u32, extra_y: bool) -> DenseFrac {
    let mut acc = DenseFrac {
        num: Dense::zero(n),
        den: Dense::one(n),
    };
    for i in 1..=n {
        let mut den = Dense::one(n);
        for j in 1..=n {
            if j != i {
                den = den.mul(&Dense::form(n, (1 << (i - 1)) | (1 << (j - 1))));
            }
        }
        if extra_y {
            den = den.mul(&Dense::var(n, i));
        }
        acc = acc.add(&DenseFrac {
            num: Dense::var(n, i).pow(k),
            den,
        });
    }
    acc
}

/// All partitions with parts ≥ 1, at most `max_parts` parts, total ≤ `max_weight`.
pub fn partitions(max_weight: u32, max_parts: usize) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if slots == 0 {
            return;
        }
        for r in (1..=max_part.min(rem)).rev() {
            cur.push(r);
            rec(rem - r, r, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_weight, max_weight, max_parts, &mut Vec::new(), &mut out);
    out
}
