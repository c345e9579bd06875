//! Milnor manifolds `H(m,n) ⊂ RP^m × RP^n` with the coordinate-flip action
//! of `(Z_2)^n` and its pullbacks.
//!
//! Generator `T_k` negates `x_k` (when `k ≤ m`) and `y_k`. The fixed points
//! are the coordinate points `P_{i,j}` with `i ≠ j`; at each, the tangent
//! space splits into lines on which the group acts by a character, and the
//! class is detected by the sum of those tangential representations.

use serde::Serialize;
use thiserror::Error;

use crate::repring::{Character, GroupHom, RepElement, RepError, RepMonomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error("invalid Milnor parameters m={m}, n={n}: need 1 <= m <= n")]
    InvalidParameters { m: usize, n: usize },
    #[error("invalid fixed point P({i},{j}) for H({m},{n})")]
    InvalidFixedPoint { m: usize, n: usize, i: usize, j: usize },
    #[error("invalid pullback action: {0}")]
    InvalidAction(String),
    #[error("invalid projective space dimension {0}")]
    InvalidDimension(usize),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// `P_{i,j}`: the point whose `i`-th x-coordinate and `j`-th y-coordinate
/// are the only nonzero ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FixedPoint {
    pub i: usize,
    pub j: usize,
}

/// The action of `H(m,n)`: the standard one when `hom` is absent, else its
/// pullback along `hom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorAction {
    m: usize,
    n: usize,
    hom: Option<GroupHom>,
}

impl MilnorAction {
    pub fn standard(m: usize, n: usize) -> Result<Self, MilnorError> {
        check_mn(m, n)?;
        Ok(MilnorAction { m, n, hom: None })
    }

    pub fn pulled_back(m: usize, n: usize, hom: GroupHom) -> Result<Self, MilnorError> {
        check_mn(m, n)?;
        if hom.target_rank() != n {
            return Err(MilnorError::InvalidAction(format!(
                "homomorphism has {} images, expected n = {n}",
                hom.target_rank()
            )));
        }
        validate_pullback_action(&hom)?;
        Ok(MilnorAction { m, n, hom: Some(hom) })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hom(&self) -> Option<&GroupHom> {
        self.hom.as_ref()
    }

    /// Rank of the acting group.
    pub fn rank(&self) -> usize {
        self.hom.as_ref().map_or(self.n, GroupHom::source_rank)
    }

    pub fn dimension(&self) -> usize {
        self.m + self.n - 1
    }

    pub fn eta(&self) -> Result<RepElement, MilnorError> {
        eta_fixed_point_sum(self)
    }
}

fn check_mn(m: usize, n: usize) -> Result<(), MilnorError> {
    if m == 0 || m > n || n > crate::repring::MAX_RANK {
        return Err(MilnorError::InvalidParameters { m, n });
    }
    Ok(())
}

/// The character by which the group acts on the coordinate ratio
/// `z_b / z_a` of a projective space: `Y_{{a,b}∖{0}}`. Index 0 is never
/// flipped. `a ≠ b`, so the set is never empty.
fn ratio_character(a: usize, b: usize) -> Character {
    let mask = [a, b]
        .iter()
        .filter(|&&x| x > 0)
        .fold(0u32, |acc, &x| acc ^ (1 << (x - 1)));
    Character::from_mask(mask).expect("distinct coordinates give a nontrivial character")
}

pub fn fixed_points(m: usize, n: usize) -> Result<Vec<FixedPoint>, MilnorError> {
    check_mn(m, n)?;
    Ok((0..=m)
        .flat_map(|i| (0..=n).filter(move |&j| j != i).map(move |j| FixedPoint { i, j }))
        .collect())
}

/// The tangential representation at `P_{i,j}` as a monomial over rank `n`.
///
/// In the chart `x_i = y_j = 1` the tangent lines are spanned by the
/// remaining x- and y-coordinates, minus one direction cut out by the
/// defining equation: for `j > m` it kills `y_i`; for `j ≤ m` it identifies
/// `y_i` with `x_j`, which leaves one line acting by `Y_{{i,j}}`.
pub fn tangential_rep(m: usize, n: usize, fp: FixedPoint) -> Result<RepMonomial, MilnorError> {
    check_mn(m, n)?;
    let FixedPoint { i, j } = fp;
    if i > m || j > n || i == j {
        return Err(MilnorError::InvalidFixedPoint { m, n, i, j });
    }
    let mut chars = Vec::with_capacity(m + n - 1);
    if j > m {
        chars.extend((0..=m).filter(|&l| l != i).map(|l| ratio_character(i, l)));
    } else {
        chars.extend(
            (0..=m)
                .filter(|&l| l != i && l != j)
                .map(|l| ratio_character(i, l)),
        );
        chars.push(ratio_character(i, j));
    }
    chars.extend(
        (0..=n)
            .filter(|&l| l != i && l != j)
            .map(|l| ratio_character(j, l)),
    );
    Ok(RepMonomial::from_characters(chars))
}

/// η as the sum over fixed points of the tangential representations.
pub fn eta_fixed_point_sum(action: &MilnorAction) -> Result<RepElement, MilnorError> {
    let (m, n) = (action.m, action.n);
    let mut standard = RepElement::zero(n)?;
    for fp in fixed_points(m, n)? {
        standard.toggle(tangential_rep(m, n, fp)?)?;
    }
    match &action.hom {
        None => Ok(standard),
        Some(h) => Ok(standard.pullback(h)?),
    }
}

/// η of the standard action from the grouped closed-form expression
///
/// ```text
/// Π_{i≤m} Y_i · Σ_{j≤n} Π_{k≠j} Y_{k,j}
///   + Σ_{i≤m} Y_i Π_{k≤m, k≠i} Y_{k,i} · ( Π_{l≠i} Y_l + Σ_{j≠i} Y_j Π_{l≠i,j} Y_{l,j} )
/// ```
///
/// built directly in the representation ring, independent of the fixed-point
/// enumeration.
pub fn eta_closed_formula(m: usize, n: usize) -> Result<RepElement, MilnorError> {
    check_mn(m, n)?;
    let y = |s: &[usize]| -> Result<RepElement, MilnorError> {
        Ok(RepElement::from_character(n, Character::from_indices(s)?)?)
    };
    let product = |factors: Vec<RepElement>| -> Result<RepElement, MilnorError> {
        let mut acc = RepElement::one(n)?;
        for f in factors {
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    };

    let mut prefix = RepElement::one(n)?;
    for i in 1..=m {
        prefix = prefix.mul(&y(&[i])?)?;
    }
    let mut first_sum = RepElement::zero(n)?;
    for j in 1..=n {
        let term = product(
            (1..=n)
                .filter(|&k| k != j)
                .map(|k| y(&[k, j]))
                .collect::<Result<_, _>>()?,
        )?;
        first_sum = first_sum.add(&term)?;
    }
    let mut total = prefix.mul(&first_sum)?;

    for i in 1..=m {
        let mut lead = y(&[i])?;
        for k in (1..=m).filter(|&k| k != i) {
            lead = lead.mul(&y(&[k, i])?)?;
        }
        let mut inner = product(
            (1..=n)
                .filter(|&l| l != i)
                .map(|l| y(&[l]))
                .collect::<Result<_, _>>()?,
        )?;
        for j in (1..=n).filter(|&j| j != i) {
            let mut term = y(&[j])?;
            for l in (1..=n).filter(|&l| l != i && l != j) {
                term = term.mul(&y(&[l, j])?)?;
            }
            inner = inner.add(&term)?;
        }
        total = total.add(&lead.mul(&inner)?)?;
    }
    Ok(total)
}

/// The pulled-back action has exactly the fixed points `P_{i,j}` iff the
/// images `S_1..S_n` are nonempty and pairwise distinct.
pub fn validate_pullback_action(h: &GroupHom) -> Result<(), MilnorError> {
    let images = h.image_indices();
    for (a, s) in images.iter().enumerate() {
        if s.is_empty() {
            return Err(MilnorError::InvalidAction(format!("S_{} is empty", a + 1)));
        }
        if let Some(b) = images[..a].iter().position(|t| t == s) {
            return Err(MilnorError::InvalidAction(format!(
                "S_{} = S_{} = {{{}}}",
                b + 1,
                a + 1,
                s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            )));
        }
    }
    Ok(())
}

/// η of `RP^k` with `T_i` negating the `i`-th homogeneous coordinate.
pub fn projective_class(k: usize) -> Result<RepElement, MilnorError> {
    if k == 0 || k > crate::repring::MAX_RANK {
        return Err(MilnorError::InvalidDimension(k));
    }
    let mut e = RepElement::zero(k)?;
    for i in 0..=k {
        e.toggle(RepMonomial::from_characters(
            (0..=k).filter(|&l| l != i).map(|l| ratio_character(i, l)),
        ))?;
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(idx: &[usize]) -> Character {
        Character::from_indices(idx).unwrap()
    }

    fn mono(chars: &[&[usize]]) -> RepMonomial {
        RepMonomial::from_characters(chars.iter().map(|c| y(c)))
    }

    #[test]
    fn fixed_point_examples() {
        let pts = fixed_points(1, 2).unwrap();
        let pairs: Vec<_> = pts.iter().map(|p| (p.i, p.j)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 0), (1, 2)]);
        assert_eq!(fixed_points(1, 1).unwrap().len(), 2);
        assert_eq!(fixed_points(2, 3).unwrap().len(), 9);
        assert!(fixed_points(0, 3).is_err());
        assert!(fixed_points(4, 3).is_err());
    }

    #[test]
    fn tangential_examples() {
        assert_eq!(
            tangential_rep(1, 2, FixedPoint { i: 0, j: 2 }).unwrap(),
            mono(&[&[1], &[1, 2]])
        );
        assert_eq!(
            tangential_rep(1, 2, FixedPoint { i: 1, j: 0 }).unwrap(),
            mono(&[&[1], &[2]])
        );
        let t = tangential_rep(2, 3, FixedPoint { i: 1, j: 2 }).unwrap();
        assert_eq!(t, mono(&[&[1], &[2], &[2, 3], &[1, 2]]));
        assert_eq!(t.degree(), 4);
        assert!(tangential_rep(2, 3, FixedPoint { i: 1, j: 1 }).is_err());
        assert!(tangential_rep(2, 3, FixedPoint { i: 3, j: 1 }).is_err());
    }

    #[test]
    fn eta_small_cases() {
        let e12 = eta_fixed_point_sum(&MilnorAction::standard(1, 2).unwrap()).unwrap();
        assert!(e12.is_zero());
        let e13 = eta_fixed_point_sum(&MilnorAction::standard(1, 3).unwrap()).unwrap();
        assert_eq!(e13.len(), 6);
        assert!(e13.contains(&mono(&[&[1], &[2], &[3]])));
        assert_eq!(e13, eta_closed_formula(1, 3).unwrap());

        let id = GroupHom::identity(3).unwrap();
        let pulled = MilnorAction::pulled_back(1, 3, id).unwrap().eta().unwrap();
        assert_eq!(pulled, e13);

        let e24 = eta_closed_formula(2, 4).unwrap();
        assert!(!e24.is_zero());
        assert_eq!(e24.homogeneous_degree(), Some(5));
    }

    #[test]
    fn validate_examples() {
        let ok = GroupHom::from_subsets(2, &[vec![1], vec![2], vec![1, 2]]).unwrap();
        assert!(validate_pullback_action(&ok).is_ok());
        let dup = GroupHom::from_subsets(2, &[vec![1], vec![1], vec![2]]).unwrap();
        assert!(matches!(
            validate_pullback_action(&dup),
            Err(MilnorError::InvalidAction(msg)) if msg.contains("S_1 = S_2")
        ));
        let empty = GroupHom::from_subsets(2, &[vec![1], vec![], vec![2]]).unwrap();
        assert!(matches!(
            validate_pullback_action(&empty),
            Err(MilnorError::InvalidAction(msg)) if msg.contains("S_2 is empty")
        ));
    }

    #[test]
    fn projective_examples() {
        let p2 = projective_class(2).unwrap();
        assert_eq!(p2.to_string(), "Y{1}Y{2}+Y{1}Y{1,2}+Y{2}Y{1,2}");
        assert!(projective_class(1).unwrap().is_zero());
        assert_eq!(projective_class(4).unwrap().homogeneous_degree(), Some(4));
        assert!(projective_class(0).is_err());
    }
}
