//! Rational functions whose denominators are products of linear forms.
//!
//! Denominators stay factored as multisets of [`LinearForm`]s. Distinct linear
//! forms over GF(2) are pairwise non-associate irreducibles, so greedy
//! cancellation (strip any factor that divides the numerator, repeat) leaves
//! the fraction in lowest terms.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gf2poly::{Gf2Polynomial, LinearForm, PolyContext, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("rational function has a non-trivial denominator {0}")]
    NotPolynomial(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Multiset of linear forms; empty means 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredDenominator {
    factors: BTreeMap<LinearForm, u32>,
}

impl FactoredDenominator {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_forms<I: IntoIterator<Item = LinearForm>>(forms: I) -> Self {
        let mut d = Self::default();
        for f in forms {
            d.push(f, 1);
        }
        d
    }

    pub fn push(&mut self, form: LinearForm, mult: u32) {
        if mult > 0 {
            *self.factors.entry(form).or_insert(0) += mult;
        }
    }

    fn remove_one(&mut self, form: LinearForm) {
        if let Some(m) = self.factors.get_mut(&form) {
            *m -= 1;
            if *m == 0 {
                self.factors.remove(&form);
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn multiplicity(&self, form: LinearForm) -> u32 {
        self.factors.get(&form).copied().unwrap_or(0)
    }

    /// `(form, multiplicity)` pairs in a fixed order.
    pub fn factors(&self) -> impl Iterator<Item = (LinearForm, u32)> + '_ {
        self.factors.iter().map(|(&f, &m)| (f, m))
    }

    /// Each form repeated by its multiplicity.
    pub fn forms(&self) -> impl Iterator<Item = LinearForm> + '_ {
        self.factors
            .iter()
            .flat_map(|(&f, &m)| std::iter::repeat(f).take(m as usize))
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    /// Multiset-wise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&f, &m) in &other.factors {
            let e = out.factors.entry(f).or_insert(0);
            *e = (*e).max(m);
        }
        out
    }

    /// The factors of `self` not covered by `other` (`self - other` as
    /// multisets, floored at zero).
    pub fn missing_from(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&f, &m) in &self.factors {
            let have = other.multiplicity(f);
            if m > have {
                out.push(f, m - have);
            }
        }
        out
    }

    /// Multiplies the factors out. Only used transiently.
    pub fn expand(&self, ctx: PolyContext) -> Result<Gf2Polynomial, PolyError> {
        let mut acc = ctx.one();
        for f in self.forms() {
            acc = acc.mul_linear_form(f)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for FactoredDenominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for form in self.forms() {
            write!(f, "({form})")?;
        }
        Ok(())
    }
}

/// `numerator / Π denominator`.
///
/// Equality is value equality, decided by cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    numerator: Gf2Polynomial,
    denominator: FactoredDenominator,
}

impl RationalFunction {
    /// Builds and reduces `numerator / Π denominator`.
    pub fn new(
        numerator: Gf2Polynomial,
        denominator: FactoredDenominator,
    ) -> Result<Self, RatError> {
        let ctx = numerator.context();
        if let Some(top) = denominator.forms().map(|f| f.top_var()).max() {
            if top > ctx.nvars() {
                return Err(PolyError::VariableOutOfRange {
                    var: top,
                    nvars: ctx.nvars(),
                }
                .into());
            }
        }
        let mut f = RationalFunction {
            numerator,
            denominator,
        };
        f.reduce();
        Ok(f)
    }

    pub fn zero(ctx: PolyContext) -> Self {
        RationalFunction {
            numerator: ctx.zero(),
            denominator: FactoredDenominator::one(),
        }
    }

    pub fn from_polynomial(p: Gf2Polynomial) -> Self {
        RationalFunction {
            numerator: p,
            denominator: FactoredDenominator::one(),
        }
    }

    /// `1 / Π forms`.
    pub fn reciprocal_of_forms<I>(ctx: PolyContext, forms: I) -> Result<Self, RatError>
    where
        I: IntoIterator<Item = LinearForm>,
    {
        Self::new(ctx.one(), FactoredDenominator::from_forms(forms))
    }

    pub fn context(&self) -> PolyContext {
        self.numerator.context()
    }

    pub fn numerator(&self) -> &Gf2Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &FactoredDenominator {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Numerator degree minus denominator degree; `None` for zero or a
    /// non-homogeneous numerator.
    pub fn degree(&self) -> Option<i64> {
        if !self.numerator.is_homogeneous() {
            return None;
        }
        self.numerator
            .degree()
            .map(|d| d as i64 - self.denominator.degree() as i64)
    }

    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.denominator = FactoredDenominator::one();
            return;
        }
        loop {
            let mut progressed = false;
            let forms: Vec<LinearForm> = self.denominator.factors().map(|(f, _)| f).collect();
            for form in forms {
                while self.denominator.multiplicity(form) > 0 {
                    match self.numerator.divide_by_linear_form(form) {
                        Ok(q) => {
                            self.numerator = q;
                            self.denominator.remove_one(form);
                            progressed = true;
                        }
                        Err(_) => break,
                    }
                }
            }
            if !progressed {
                break;
            }
        }
    }

    pub fn add(&self, other: &RationalFunction) -> Result<RationalFunction, RatError> {
        if self.context() != other.context() {
            return Err(PolyError::ContextMismatch {
                left: self.context(),
                right: other.context(),
            }
            .into());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let common = self.denominator.lcm(&other.denominator);
        let scale = |f: &RationalFunction| -> Result<Gf2Polynomial, PolyError> {
            let mut num = f.numerator.clone();
            for form in common.missing_from(&f.denominator).forms() {
                num = num.mul_linear_form(form)?;
            }
            Ok(num)
        };
        let numerator = scale(self)?.add(&scale(other)?)?;
        RationalFunction::new(numerator, common)
    }

    pub fn mul_polynomial(&self, p: &Gf2Polynomial) -> Result<RationalFunction, RatError> {
        RationalFunction::new(self.numerator.mul(p)?, self.denominator.clone())
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<RationalFunction, RatError> {
        let mut den = self.denominator.clone();
        for (f, m) in other.denominator.factors() {
            den.push(f, m);
        }
        RationalFunction::new(self.numerator.mul(&other.numerator)?, den)
    }

    /// The polynomial this function equals, if any.
    pub fn to_polynomial(&self) -> Result<Gf2Polynomial, RatError> {
        let mut num = self.numerator.clone();
        for form in self.denominator.forms() {
            num = num.divide_by_linear_form(form).map_err(|e| match e {
                PolyError::NotDivisible(_) => RatError::NotPolynomial(self.denominator.to_string()),
                other => other.into(),
            })?;
        }
        Ok(num)
    }

    /// Value equality: `a/b == c/d` iff `a·d == c·b`.
    pub fn value_eq(&self, other: &RationalFunction) -> Result<bool, RatError> {
        if self.context() != other.context() {
            return Err(PolyError::ContextMismatch {
                left: self.context(),
                right: other.context(),
            }
            .into());
        }
        let ctx = self.context();
        let lhs = self.numerator.mul(&other.denominator.expand(ctx)?)?;
        let rhs = other.numerator.mul(&self.denominator.expand(ctx)?)?;
        Ok(lhs == rhs)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.value_eq(other).unwrap_or(false)
    }
}

impl fmt::Display for RationalFunction {
    /// `numerator / (form)(form)...`; a bare numerator when the denominator
    /// is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{} / {}", self.numerator, self.denominator)
        }
    }
}

/// Adds a list of rational functions with a fixed balanced tree, halves in
/// parallel. The association order depends only on the input length.
pub fn tree_sum(ctx: PolyContext, parts: &[RationalFunction]) -> Result<RationalFunction, RatError> {
    match parts.len() {
        0 => Ok(RationalFunction::zero(ctx)),
        1 => Ok(parts[0].clone()),
        len => {
            let (left, right) = parts.split_at(len / 2);
            let (a, b) = rayon::join(|| tree_sum(ctx, left), || tree_sum(ctx, right));
            a?.add(&b?)
        }
    }
}

fn pair_form(a: usize, b: usize) -> LinearForm {
    LinearForm::from_mask((1 << (a - 1)) | (1 << (b - 1))).expect("nonempty")
}

fn single_form(a: usize) -> LinearForm {
    LinearForm::from_mask(1 << (a - 1)).expect("nonempty")
}

fn check_vars(ctx: PolyContext, vars: &[usize]) -> Result<(), RatError> {
    let mut seen = 0u64;
    for &v in vars {
        if v == 0 || v > ctx.nvars() {
            return Err(PolyError::VariableOutOfRange {
                var: v,
                nvars: ctx.nvars(),
            }
            .into());
        }
        if seen & (1 << v) != 0 {
            return Err(RatError::InvalidParameters(format!("variable y{v} repeated")));
        }
        seen |= 1 << v;
    }
    Ok(())
}

/// `Σ_i 1 / Π_{j≠i} (y_j + y_i)` over the given variables.
pub fn lagrange_p_over(ctx: PolyContext, vars: &[usize]) -> Result<RationalFunction, RatError> {
    if vars.len() < 2 {
        return Err(RatError::InvalidParameters(format!(
            "need at least 2 variables, got {}",
            vars.len()
        )));
    }
    check_vars(ctx, vars)?;
    let parts = vars
        .iter()
        .map(|&i| {
            RationalFunction::reciprocal_of_forms(
                ctx,
                vars.iter().filter(|&&j| j != i).map(|&j| pair_form(i, j)),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    tree_sum(ctx, &parts)
}

/// `Σ_{i=1}^{n} 1 / Π_{j≠i} (y_j + y_i)` in `n` variables; identically zero.
pub fn lagrange_p(n: usize) -> Result<RationalFunction, RatError> {
    let ctx = PolyContext::new(n)?;
    lagrange_p_over(ctx, &(1..=n).collect::<Vec<_>>())
}

/// `1/(y_1⋯y_n) + Σ_i 1/(y_i Π_{j≠i}(y_i + y_j))` over the given variables.
pub fn lagrange_ii_over(ctx: PolyContext, vars: &[usize]) -> Result<RationalFunction, RatError> {
    if vars.is_empty() {
        return Err(RatError::InvalidParameters("need at least 1 variable".into()));
    }
    check_vars(ctx, vars)?;
    let mut parts = vec![RationalFunction::reciprocal_of_forms(
        ctx,
        vars.iter().map(|&i| single_form(i)),
    )?];
    for &i in vars {
        let forms = std::iter::once(single_form(i))
            .chain(vars.iter().filter(|&&j| j != i).map(|&j| pair_form(i, j)));
        parts.push(RationalFunction::reciprocal_of_forms(ctx, forms)?);
    }
    tree_sum(ctx, &parts)
}

/// The second identity in `n` variables; identically zero.
pub fn lagrange_ii(n: usize) -> Result<RationalFunction, RatError> {
    let ctx = PolyContext::new(n)?;
    lagrange_ii_over(ctx, &(1..=n).collect::<Vec<_>>())
}

/// `Σ_i y_i^k / Π_{j≠i} (y_i + y_j)` over the given variables.
///
/// For `n` variables this is 0 when `k < n-1`, 1 when `k = n-1`, and in
/// general the complete homogeneous symmetric polynomial of degree `k-n+1`.
/// The raw sum is returned for every `k`.
pub fn lagrange_q_over(
    ctx: PolyContext,
    vars: &[usize],
    k: u32,
) -> Result<RationalFunction, RatError> {
    if vars.len() < 2 {
        return Err(RatError::InvalidParameters(format!(
            "need at least 2 variables, got {}",
            vars.len()
        )));
    }
    check_vars(ctx, vars)?;
    let parts = vars
        .iter()
        .map(|&i| {
            let num = ctx.var(i)?.pow(k)?;
            RationalFunction::new(
                num,
                FactoredDenominator::from_forms(
                    vars.iter().filter(|&&j| j != i).map(|&j| pair_form(i, j)),
                ),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    tree_sum(ctx, &parts)
}

pub fn lagrange_q(n: usize, k: u32) -> Result<RationalFunction, RatError> {
    let ctx = PolyContext::new(n)?;
    lagrange_q_over(ctx, &(1..=n).collect::<Vec<_>>(), k)
}
