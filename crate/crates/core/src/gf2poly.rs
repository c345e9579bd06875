//! Sparse multivariate polynomials over the two-element field.
//!
//! A polynomial is a set of monomials: a monomial is present iff its
//! coefficient is 1. Terms are kept sorted in ascending graded-lex order, so
//! addition is a linear merge (symmetric difference) and multiplication is
//! "generate, sort, cancel pairs".

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

/// Default cap on a single exponent.
pub const DEFAULT_MAX_EXPONENT: u16 = u16::MAX;

/// Hard cap on the number of variables a context may carry.
pub const MAX_VARS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial contexts differ: {left} vs {right}")]
    ContextMismatch { left: PolyContext, right: PolyContext },
    #[error("exponent of y{var} exceeds the configured maximum {max}")]
    ExponentOverflow { var: usize, max: u16 },
    #[error("linear form must have a nonempty support")]
    EmptyLinearForm,
    #[error("variable y{var} is outside the context ({nvars} variables)")]
    VariableOutOfRange { var: usize, nvars: usize },
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(LinearForm),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("a context supports at most {MAX_VARS} variables, got {0}")]
    TooManyVariables(usize),
}

/// The ambient ring GF(2)[y_1..y_r]: variable count plus exponent cap.
///
/// Polynomials built in different contexts never mix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyContext {
    nvars: u8,
    max_exponent: u16,
}

impl fmt::Display for PolyContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2)[y1..y{}] (max exp {})", self.nvars, self.max_exponent)
    }
}

impl PolyContext {
    pub fn new(nvars: usize) -> Result<Self, PolyError> {
        Self::with_max_exponent(nvars, DEFAULT_MAX_EXPONENT)
    }

    pub fn with_max_exponent(nvars: usize, max_exponent: u16) -> Result<Self, PolyError> {
        if nvars > MAX_VARS {
            return Err(PolyError::TooManyVariables(nvars));
        }
        Ok(PolyContext {
            nvars: nvars as u8,
            max_exponent,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn max_exponent(&self) -> u16 {
        self.max_exponent
    }

    pub fn zero(&self) -> Gf2Polynomial {
        Gf2Polynomial {
            ctx: *self,
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Gf2Polynomial {
        Gf2Polynomial {
            ctx: *self,
            terms: vec![Monomial::one(self.nvars())],
        }
    }

    /// The variable `y_var`, 1-based.
    pub fn var(&self, var: usize) -> Result<Gf2Polynomial, PolyError> {
        self.check_var(var)?;
        let mut m = Monomial::one(self.nvars());
        m.exps[var - 1] = 1;
        m.degree = 1;
        Ok(Gf2Polynomial {
            ctx: *self,
            terms: vec![m],
        })
    }

    /// Single-term polynomial from an exponent vector (slot `i` holds the
    /// exponent of `y_{i+1}`).
    pub fn monomial(&self, exps: &[u16]) -> Result<Gf2Polynomial, PolyError> {
        let m = Monomial::from_exponents(exps);
        if m.exps.len() != self.nvars() {
            return Err(PolyError::VariableOutOfRange {
                var: exps.len(),
                nvars: self.nvars(),
            });
        }
        self.check_exponents(&m)?;
        Ok(Gf2Polynomial {
            ctx: *self,
            terms: vec![m],
        })
    }

    /// The polynomial `Σ_{i∈support} y_i`.
    pub fn linear_form_poly(&self, form: LinearForm) -> Result<Gf2Polynomial, PolyError> {
        let top = form.top_var();
        if top > self.nvars() {
            return Err(PolyError::VariableOutOfRange {
                var: top,
                nvars: self.nvars(),
            });
        }
        let mut terms: Vec<Monomial> = form
            .vars()
            .map(|v| {
                let mut m = Monomial::one(self.nvars());
                m.exps[v - 1] = 1;
                m.degree = 1;
                m
            })
            .collect();
        terms.sort_unstable();
        Ok(Gf2Polynomial { ctx: *self, terms })
    }

    /// Builds a polynomial from arbitrary exponent vectors, cancelling repeats
    /// mod 2.
    pub fn from_monomials<I>(&self, monomials: I) -> Result<Gf2Polynomial, PolyError>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut terms = Vec::new();
        for m in monomials {
            if m.exps.len() != self.nvars() {
                return Err(PolyError::VariableOutOfRange {
                    var: m.exps.len(),
                    nvars: self.nvars(),
                });
            }
            self.check_exponents(&m)?;
            terms.push(m);
        }
        Ok(Gf2Polynomial {
            ctx: *self,
            terms: cancel_sorted(terms),
        })
    }

    fn check_var(&self, var: usize) -> Result<(), PolyError> {
        if var == 0 || var > self.nvars() {
            return Err(PolyError::VariableOutOfRange {
                var,
                nvars: self.nvars(),
            });
        }
        Ok(())
    }

    fn check_exponents(&self, m: &Monomial) -> Result<(), PolyError> {
        match m.exps.iter().position(|&e| e > self.max_exponent) {
            Some(i) => Err(PolyError::ExponentOverflow {
                var: i + 1,
                max: self.max_exponent,
            }),
            None => Ok(()),
        }
    }
}

/// Exponent vector with its cached total degree.
///
/// The derived ordering is graded lexicographic with `y_1 > y_2 > ...`:
/// total degree first, then the exponent vectors compared slot by slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Exponent of `y_var` (1-based).
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var - 1]
    }

    fn mul(&self, other: &Monomial, max: u16) -> Result<Monomial, PolyError> {
        let mut exps = self.exps.clone();
        for (i, (a, &b)) in exps.iter_mut().zip(other.exps.iter()).enumerate() {
            let s = *a as u32 + b as u32;
            if s > max as u32 {
                return Err(PolyError::ExponentOverflow { var: i + 1, max });
            }
            *a = s as u16;
        }
        Ok(Monomial {
            degree: self.degree + other.degree,
            exps,
        })
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "y{}", i + 1)?;
            } else {
                write!(f, "y{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Sorts and removes monomials that occur an even number of times.
fn cancel_sorted(mut terms: Vec<Monomial>) -> Vec<Monomial> {
    terms.sort_unstable();
    let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
    for t in terms {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}

/// A nonempty subset of the variables, standing for `Σ_{i∈support} y_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(u32);

impl LinearForm {
    /// `mask` bit `i-1` set means `y_i` is in the support.
    pub fn from_mask(mask: u32) -> Result<Self, PolyError> {
        if mask == 0 {
            return Err(PolyError::EmptyLinearForm);
        }
        Ok(LinearForm(mask))
    }

    /// Support given as 1-based variable indices.
    pub fn from_vars(vars: &[usize]) -> Result<Self, PolyError> {
        let mut mask = 0u32;
        for &v in vars {
            if v == 0 || v > MAX_VARS {
                return Err(PolyError::VariableOutOfRange {
                    var: v,
                    nvars: MAX_VARS,
                });
            }
            mask |= 1 << (v - 1);
        }
        Self::from_mask(mask)
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    /// Support variables, ascending, 1-based.
    pub fn vars(&self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |i| mask & (1 << i) != 0).map(|i| i + 1)
    }

    /// Smallest variable in the support; the division pivot.
    pub fn pivot(&self) -> usize {
        self.0.trailing_zeros() as usize + 1
    }

    pub fn top_var(&self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Parses `y1+y3`, the polynomial form of a linear form.
    pub fn parse(s: &str) -> Result<Self, PolyError> {
        let err = |reason: &str| PolyError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut mask = 0u32;
        for part in body.split('+') {
            let v: usize = part
                .trim()
                .strip_prefix('y')
                .ok_or_else(|| err("expected a variable y<i>"))?
                .parse()
                .map_err(|_| err("bad variable index"))?;
            if v == 0 || v > MAX_VARS {
                return Err(err("variable index out of range"));
            }
            let bit = 1u32 << (v - 1);
            if mask & bit != 0 {
                return Err(err("repeated variable"));
            }
            mask |= bit;
        }
        Self::from_mask(mask).map_err(|_| err("empty form"))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.vars() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            write!(f, "y{v}")?;
        }
        Ok(())
    }
}

/// A polynomial over GF(2): the set of monomials with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gf2Polynomial {
    ctx: PolyContext,
    terms: Vec<Monomial>,
}

impl Gf2Polynomial {
    pub fn context(&self) -> PolyContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].degree == 0
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.binary_search(m).is_ok()
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|m| m.degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].degree == w[1].degree)
    }

    fn check_ctx(&self, other: &Gf2Polynomial) -> Result<(), PolyError> {
        if self.ctx != other.ctx {
            return Err(PolyError::ContextMismatch {
                left: self.ctx,
                right: other.ctx,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Gf2Polynomial) -> Result<Gf2Polynomial, PolyError> {
        self.check_ctx(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Gf2Polynomial {
            ctx: self.ctx,
            terms: out,
        })
    }

    pub fn add_assign(&mut self, other: &Gf2Polynomial) -> Result<(), PolyError> {
        *self = self.add(other)?;
        Ok(())
    }

    pub fn mul(&self, other: &Gf2Polynomial) -> Result<Gf2Polynomial, PolyError> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ctx.zero());
        }
        let max = self.ctx.max_exponent;
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                products.push(a.mul(b, max)?);
            }
        }
        Ok(Gf2Polynomial {
            ctx: self.ctx,
            terms: cancel_sorted(products),
        })
    }

    /// Product with a single monomial; no cancellation can occur.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<Gf2Polynomial, PolyError> {
        let max = self.ctx.max_exponent;
        let terms = self
            .terms
            .iter()
            .map(|t| t.mul(m, max))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Gf2Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    /// Product with the linear form `Σ_{i∈support} y_i`.
    pub fn mul_linear_form(&self, form: LinearForm) -> Result<Gf2Polynomial, PolyError> {
        self.mul(&self.ctx.linear_form_poly(form)?)
    }

    /// Squaring is the Frobenius map: every exponent doubles, cross terms
    /// cancel.
    pub fn square(&self) -> Result<Gf2Polynomial, PolyError> {
        let max = self.ctx.max_exponent;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(t.mul(t, max)?);
        }
        // Doubling preserves graded-lex order.
        Ok(Gf2Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    pub fn pow(&self, mut e: u32) -> Result<Gf2Polynomial, PolyError> {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.square()?;
            }
        }
        Ok(acc)
    }

    /// Exact quotient by a linear form.
    ///
    /// The pivot is the smallest variable `v` of the form. Writing
    /// `p = Σ_e c_e v^e` with `c_e` free of `v`, synthetic division by
    /// `v + s` (`s` the rest of the form) runs Horner's scheme at `v := s`;
    /// the final remainder is exactly `p` with `v` substituted by `s`, so the
    /// form divides `p` iff that remainder vanishes.
    pub fn divide_by_linear_form(&self, form: LinearForm) -> Result<Gf2Polynomial, PolyError> {
        let top = form.top_var();
        if top > self.ctx.nvars() {
            return Err(PolyError::VariableOutOfRange {
                var: top,
                nvars: self.ctx.nvars(),
            });
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let v = form.pivot() - 1;
        if form.len() == 1 {
            if self.terms.iter().any(|t| t.exps[v] == 0) {
                return Err(PolyError::NotDivisible(form));
            }
            let terms = self
                .terms
                .iter()
                .map(|t| {
                    let mut q = t.clone();
                    q.exps[v] -= 1;
                    q.degree -= 1;
                    q
                })
                .collect();
            return Ok(Gf2Polynomial {
                ctx: self.ctx,
                terms,
            });
        }

        // Coefficients c_e as polynomials in the remaining variables.
        let top_e = self.terms.iter().map(|t| t.exps[v]).max().unwrap_or(0) as usize;
        let mut coeffs: Vec<Vec<Monomial>> = vec![Vec::new(); top_e + 1];
        for t in &self.terms {
            let e = t.exps[v] as usize;
            let mut c = t.clone();
            c.exps[v] = 0;
            c.degree -= e as u32;
            coeffs[e].push(c);
        }
        let coeffs: Vec<Gf2Polynomial> = coeffs
            .into_iter()
            .map(|mut ts| {
                ts.sort_unstable();
                Gf2Polynomial {
                    ctx: self.ctx,
                    terms: ts,
                }
            })
            .collect();
        let rest = LinearForm(form.0 & !(1 << v));
        let s = self.ctx.linear_form_poly(rest)?;

        // Horner: b_{D-1} = c_D, b_{e-1} = c_e + s·b_e, remainder = c_0 + s·b_0.
        let mut quotient_coeffs: Vec<Gf2Polynomial> = vec![self.ctx.zero(); top_e];
        let mut carry = coeffs[top_e].clone();
        for e in (0..top_e).rev() {
            quotient_coeffs[e] = carry.clone();
            carry = coeffs[e].add(&carry.mul(&s)?)?;
        }
        if !carry.is_zero() {
            return Err(PolyError::NotDivisible(form));
        }

        let mut terms = Vec::new();
        for (e, c) in quotient_coeffs.into_iter().enumerate() {
            for mut t in c.terms {
                t.exps[v] = e as u16;
                t.degree += e as u32;
                terms.push(t);
            }
        }
        terms.sort_unstable();
        Ok(Gf2Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    /// Substitutes `y_var := replacement` everywhere.
    pub fn substitute(&self, var: usize, replacement: &Gf2Polynomial) -> Result<Gf2Polynomial, PolyError> {
        self.check_ctx(replacement)?;
        self.ctx.check_var(var)?;
        let v = var - 1;
        let mut by_exp: std::collections::BTreeMap<u16, Vec<Monomial>> = Default::default();
        for t in &self.terms {
            let mut c = t.clone();
            let e = c.exps[v];
            c.exps[v] = 0;
            c.degree -= e as u32;
            by_exp.entry(e).or_default().push(c);
        }
        let mut acc = self.ctx.zero();
        let mut power = self.ctx.one();
        let mut power_exp = 0u16;
        for (e, cs) in by_exp {
            while power_exp < e {
                power = power.mul(replacement)?;
                power_exp += 1;
            }
            let c = Gf2Polynomial {
                ctx: self.ctx,
                terms: cancel_sorted(cs),
            };
            acc = acc.add(&c.mul(&power)?)?;
        }
        Ok(acc)
    }

    /// Parses the canonical text form (`y1^2*y3+y2+1`, `0`).
    pub fn parse(ctx: PolyContext, s: &str) -> Result<Gf2Polynomial, PolyError> {
        let err = |reason: String| PolyError::Parse {
            input: s.to_string(),
            reason,
        };
        let s = s.trim();
        if s == "0" {
            return Ok(ctx.zero());
        }
        let mut monomials = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let mut exps = vec![0u16; ctx.nvars()];
            if term != "1" {
                for factor in term.split('*') {
                    let (var, e) = match factor.split_once('^') {
                        Some((v, e)) => (v, e.parse::<u16>().map_err(|_| err(format!("bad exponent in {factor:?}")))?),
                        None => (factor, 1),
                    };
                    let idx: usize = var
                        .strip_prefix('y')
                        .and_then(|i| i.parse().ok())
                        .ok_or_else(|| err(format!("bad variable {var:?}")))?;
                    if idx == 0 || idx > ctx.nvars() {
                        return Err(err(format!("variable y{idx} outside context")));
                    }
                    exps[idx - 1] = exps[idx - 1]
                        .checked_add(e)
                        .ok_or_else(|| err("exponent overflow".into()))?;
                }
            }
            monomials.push(Monomial::from_exponents(&exps));
        }
        ctx.from_monomials(monomials)
    }
}

impl fmt::Display for Gf2Polynomial {
    /// Leading term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            t.write(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> PolyContext {
        PolyContext::new(n).unwrap()
    }

    fn p(c: PolyContext, s: &str) -> Gf2Polynomial {
        Gf2Polynomial::parse(c, s).unwrap()
    }

    #[test]
    fn add_examples() {
        let c = ctx(3);
        let a = p(c, "y1+y2");
        assert!(a.add(&a).unwrap().is_zero());
        assert_eq!(a.to_string(), "y1+y2");
        let b = p(c, "y2+y3");
        assert_eq!(a.add(&b).unwrap(), p(c, "y1+y3"));
    }

    #[test]
    fn mul_examples() {
        let c = ctx(3);
        let a = p(c, "y1+y2");
        assert_eq!(a.mul(&a).unwrap(), p(c, "y1^2+y2^2"));
        let b = p(c, "y1+y2+y3");
        assert_eq!(
            a.mul(&b).unwrap(),
            p(c, "y1^2+y2^2+y1*y3+y2*y3")
        );
        assert_eq!(a.mul(&c.one()).unwrap(), a);
    }

    #[test]
    fn linear_form_examples() {
        let c = ctx(4);
        let f = |v: &[usize]| c.linear_form_poly(LinearForm::from_vars(v).unwrap()).unwrap();
        assert_eq!(f(&[1]).to_string(), "y1");
        assert_eq!(f(&[1, 2]).to_string(), "y1+y2");
        assert_eq!(f(&[2, 3, 4]).to_string(), "y2+y3+y4");
        assert_eq!(LinearForm::from_vars(&[]), Err(PolyError::EmptyLinearForm));
        assert_eq!(LinearForm::from_mask(0), Err(PolyError::EmptyLinearForm));
    }

    #[test]
    fn division_examples() {
        let c = ctx(2);
        let f = LinearForm::from_vars(&[1, 2]).unwrap();
        assert_eq!(
            p(c, "y1^2+y2^2").divide_by_linear_form(f).unwrap(),
            p(c, "y1+y2")
        );
        assert_eq!(
            p(c, "y1*y2").divide_by_linear_form(f),
            Err(PolyError::NotDivisible(f))
        );
        assert!(c.zero().divide_by_linear_form(f).unwrap().is_zero());
    }

    #[test]
    fn division_residue_is_substitution() {
        // y1*y2 with y1 := y2 leaves y2^2.
        let c = ctx(2);
        let residue = p(c, "y1*y2").substitute(1, &p(c, "y2")).unwrap();
        assert_eq!(residue, p(c, "y2^2"));
    }

    #[test]
    fn division_by_single_variable() {
        let c = ctx(2);
        let y1 = LinearForm::from_vars(&[1]).unwrap();
        assert_eq!(
            p(c, "y1^2*y2+y1*y2^2").divide_by_linear_form(y1).unwrap(),
            p(c, "y1*y2+y2^2")
        );
        assert!(p(c, "y1+y2").divide_by_linear_form(y1).is_err());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = ctx(2).one();
        let b = ctx(3).one();
        assert!(matches!(a.add(&b), Err(PolyError::ContextMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(PolyError::ContextMismatch { .. })));
    }

    #[test]
    fn exponent_overflow_is_an_error() {
        let c = PolyContext::with_max_exponent(1, 3).unwrap();
        let y = c.var(1).unwrap();
        assert_eq!(y.pow(3).unwrap(), c.monomial(&[3]).unwrap());
        assert!(matches!(y.pow(4), Err(PolyError::ExponentOverflow { var: 1, max: 3 })));
    }

    #[test]
    fn serialization_order_is_graded_lex() {
        let c = ctx(3);
        let q = p(c, "1+y3+y1*y2+y2^2+y1^2+y1");
        assert_eq!(q.to_string(), "y1^2+y1*y2+y2^2+y1+y3+1");
        assert_eq!(c.zero().to_string(), "0");
    }

    #[test]
    fn pow_uses_frobenius() {
        let c = ctx(3);
        let s = p(c, "y1+y2+y3");
        assert_eq!(s.pow(4).unwrap(), p(c, "y1^4+y2^4+y3^4"));
        assert_eq!(s.pow(3).unwrap(), s.mul(&s).unwrap().mul(&s).unwrap());
        assert!(s.pow(0).unwrap().is_one());
    }

    #[test]
    fn parse_rejects_garbage() {
        let c = ctx(2);
        assert!(Gf2Polynomial::parse(c, "y3").is_err());
        assert!(Gf2Polynomial::parse(c, "x1").is_err());
        assert!(LinearForm::parse("y1+y1").is_err());
        assert_eq!(LinearForm::parse("(y1+y3)").unwrap().mask(), 0b101);
    }
}
