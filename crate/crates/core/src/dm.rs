//! The constant `d_m`, evaluated three independent ways.
//!
//! * `product`: the product over `R^+(m)` of `<rho/m, beta> / <rho_m, beta>`
//!   with `rho`, `rho_m` built as literal half-sums of coroots.
//! * `heights`: the same product with `ht(beta)` and the height of `beta`
//!   relative to `Γ(m)` substituted for the two pairings.
//! * `oracle`: the closed-form dimension of the fundamental representation
//!   attached to the extra simple root, read off its position in the diagram.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::dynkin::{ComponentLabel, DynkinType};
use crate::error::{Error, Result};
use crate::linalg::{rat, Echelon, Rational};
use crate::subsystem::{classify_roots, components, HeightSubsystem};
use crate::system::{Family, Root, RootSystem};

/// A rational vector in the coefficient realization, paired with roots
/// through the invariant form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    coords: Vec<Rational>,
    // (coords, e_j) = covector[j] / denom for every simple root index j
    covector: Vec<i128>,
    denom: i128,
}

impl WeightVector {
    fn new(rs: &RootSystem, coords: Vec<Rational>) -> Self {
        let lcm = coords.iter().fold(1i128, |l, c| l.lcm(c.denom()));
        let scaled: Vec<i128> = coords.iter().map(|c| (c * lcm).to_integer()).collect();
        let form = rs.int_form();
        let covector = (0..rs.rank())
            .map(|j| {
                scaled
                    .iter()
                    .zip(form)
                    .map(|(u, row)| u * row[j] as i128)
                    .sum()
            })
            .collect();
        WeightVector {
            coords,
            covector,
            denom: lcm * rs.form_scale() as i128,
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn pair(&self, beta: &[i64]) -> Rational {
        let num: i128 = self
            .covector
            .iter()
            .zip(beta)
            .map(|(w, &b)| w * b as i128)
            .sum();
        Rational::new(num, self.denom)
    }

    fn half_sum_of_coroots<'r>(rs: &RootSystem, roots: impl Iterator<Item = &'r Root>) -> Self {
        let mut coords = vec![Rational::zero(); rs.rank()];
        let scale = rs.form_scale() as i128;
        for beta in roots {
            // beta^vee / 2 = beta / (beta, beta)
            let f = Rational::new(scale, rs.scaled_inner(beta.coeffs(), beta.coeffs()) as i128);
            for (x, &c) in coords.iter_mut().zip(beta.coeffs()) {
                if c != 0 {
                    *x += f * rat(c);
                }
            }
        }
        WeightVector::new(rs, coords)
    }
}

/// Half-sum of the positive coroots of `R`.
pub fn rho(rs: &RootSystem) -> WeightVector {
    WeightVector::half_sum_of_coroots(rs, rs.positive_roots().iter())
}

/// Half-sum of the positive coroots of `R(m)`.
pub fn rho_m(sub: &HeightSubsystem<'_>) -> WeightVector {
    WeightVector::half_sum_of_coroots(sub.parent(), sub.positive())
}

/// The element of `span Γ(m)` pairing to 1 with `delta` and to 0 with the
/// rest of `Γ(m)`.
pub fn fundamental_coweight(sub: &HeightSubsystem<'_>, delta: &Root) -> Result<WeightVector> {
    let rs = sub.parent();
    let base = sub.base();
    let pos = base
        .iter()
        .position(|g| g.coeffs() == delta.coeffs())
        .ok_or_else(|| Error::invariant("delta is not in the base"))?;
    let gram: Vec<Vec<Rational>> = base
        .iter()
        .map(|u| base.iter().map(|v| rs.inner(u.coeffs(), v.coeffs())).collect())
        .collect();
    let mut target = vec![Rational::zero(); base.len()];
    target[pos] = Rational::one();
    let x = Echelon::from_rational(gram, base.len())
        .coordinates(&target)
        .ok_or_else(|| Error::invariant("Gram matrix of the base is singular"))?;
    let mut coords = vec![Rational::zero(); rs.rank()];
    for (xj, g) in x.iter().zip(&base) {
        for (c, &gc) in coords.iter_mut().zip(g.coeffs()) {
            *c += xj * rat(gc);
        }
    }
    Ok(WeightVector::new(rs, coords))
}

/// `prod <weight + rho_m, beta> / <rho_m, beta>` over `R^+(m)`.
pub fn weyl_dimension(sub: &HeightSubsystem<'_>, weight: &WeightVector) -> BigRational {
    let rm = rho_m(sub);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for beta in sub.positive() {
        let r = rm.pair(beta.coeffs());
        let f = (weight.pair(beta.coeffs()) + r) / r;
        num *= BigInt::from(*f.numer());
        den *= BigInt::from(*f.denom());
    }
    BigRational::new(num, den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    /// End node of a type-A component (natural representation).
    End,
    /// Spin node of a type-D component.
    Spin,
    /// Vector node of a type-D component.
    Vector,
}

/// Where the extra simple root sits: its component `X†` and what remains
/// after removing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodePosition {
    pub kind: NodeKind,
    pub x_dagger: ComponentLabel,
    pub x_zero: DynkinType,
}

impl fmt::Display for NodePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            NodeKind::End => "end",
            NodeKind::Spin => "spin",
            NodeKind::Vector => "vector",
        };
        let mut x = self.x_dagger;
        x.dagger = false;
        write!(f, "{kind} node of {x}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub d: u64,
    pub node: Option<NodePosition>,
}

/// Closed-form dimension of the fundamental representation attached to the
/// extra simple root, or 1 when there is none.
pub fn dimension_oracle(sub: &HeightSubsystem<'_>, ty: &DynkinType) -> Result<OracleResult> {
    let Some(delta) = sub.delta() else {
        return Ok(OracleResult { d: 1, node: None });
    };
    let rs = sub.parent();
    let base: Vec<&[i64]> = sub.base().into_iter().map(Root::coeffs).collect();
    let comp = components(rs, &base)
        .into_iter()
        .find(|c| c.iter().any(|&i| base[i] == delta.coeffs()))
        .ok_or_else(|| Error::invariant("delta lies in no component"))?;
    let members: Vec<&[i64]> = comp.iter().map(|&i| base[i]).collect();
    let x_dagger = classify_roots(rs, &members, Some(delta.coeffs()))?
        .as_single()
        .ok_or_else(|| Error::invariant("component of delta is not connected"))?;
    if ty.dagger_component() != Some(x_dagger) {
        return Err(Error::invariant(format!(
            "daggered component {x_dagger} not found in {ty}"
        )));
    }
    let rest: Vec<&[i64]> = members
        .iter()
        .copied()
        .filter(|&r| r != delta.coeffs())
        .collect();
    let x_zero = classify_roots(rs, &rest, None)?;
    let p = x_dagger.rank;
    let single = x_zero.as_single();
    let is = |family: Family, rank: usize| {
        single.is_some_and(|c| c.family == family && c.rank == rank && !c.dagger)
    };
    let (kind, d) = match x_dagger.family {
        Family::A if p == 1 && x_zero.is_empty() => (NodeKind::End, 2),
        Family::A if is(Family::A, p - 1) && end_node(rs, &members, delta.coeffs()) => {
            (NodeKind::End, p as u64 + 1)
        }
        Family::D if is(Family::A, p - 1) => (NodeKind::Spin, 1u64 << (p - 1)),
        Family::D if is(Family::D, p - 1) => (NodeKind::Vector, 2 * p as u64),
        _ => {
            return Err(Error::UnsupportedPattern(format!(
                "X† = {x_dagger}, X0 = {} in {} m={}",
                x_zero.to_string_or_empty_set(),
                rs.label(),
                sub.m()
            )))
        }
    };
    Ok(OracleResult {
        d,
        node: Some(NodePosition {
            kind,
            x_dagger,
            x_zero,
        }),
    })
}

fn end_node(rs: &RootSystem, members: &[&[i64]], node: &[i64]) -> bool {
    members
        .iter()
        .filter(|&&r| r != node && rs.scaled_inner(r, node) != 0)
        .count()
        <= 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmReport {
    pub m: usize,
    pub d_product: BigRational,
    pub d_heights: BigRational,
    pub d_oracle: u64,
    pub node: Option<NodePosition>,
}

impl DmReport {
    /// `d_m` as an integer (all evaluations agree by construction).
    pub fn d(&self) -> u64 {
        self.d_oracle
    }
}

pub fn compute_dm(sub: &HeightSubsystem<'_>) -> Result<DmReport> {
    if sub.is_empty() {
        return Err(Error::EmptySubsystem(sub.m()));
    }
    let rs = sub.parent();
    let m = sub.m() as i64;
    let rho = rho(rs);
    let rho_m = rho_m(sub);

    for alpha in rs.simple_roots() {
        if rho.pair(alpha.coeffs()) != Rational::one() {
            return Err(Error::invariant("<rho, alpha_i> != 1"));
        }
    }
    for gamma in sub.base() {
        if rho_m.pair(gamma.coeffs()) != Rational::one() {
            return Err(Error::invariant("<rho_m, gamma> != 1 on the base"));
        }
    }

    let (mut pn, mut pd) = (BigInt::one(), BigInt::one());
    let (mut hn, mut hd) = (BigInt::one(), BigInt::one());
    for (beta, &sub_ht) in sub.positive().zip(sub.sub_heights()) {
        let a = rho.pair(beta.coeffs());
        let b = rho_m.pair(beta.coeffs());
        if a != rat(beta.height()) || b != rat(sub_ht) {
            return Err(Error::invariant(format!(
                "pairings of rho, rho_m with {:?} differ from the heights",
                beta.coeffs()
            )));
        }
        let f = a / (b * rat(m));
        pn *= BigInt::from(*f.numer());
        pd *= BigInt::from(*f.denom());
        hn *= BigInt::from(beta.height());
        hd *= BigInt::from(m * sub_ht);
    }
    let d_product = BigRational::new(pn, pd);
    let d_heights = BigRational::new(hn, hd);

    let ty = sub.classify()?;
    let oracle = dimension_oracle(sub, &ty)?;

    if d_product != d_heights {
        return Err(Error::invariant(format!(
            "d_m evaluations disagree: {d_product} vs {d_heights}"
        )));
    }
    let d_int = (d_product.is_integer() && d_product > BigRational::zero())
        .then(|| d_product.to_integer().to_u64())
        .flatten()
        .ok_or_else(|| Error::invariant(format!("d_m = {d_product} is not a positive integer")))?;
    if d_int != oracle.d {
        return Err(Error::invariant(format!(
            "d_m = {d_int} but the closed form gives {}",
            oracle.d
        )));
    }
    if (d_int == 1) != sub.delta().is_none() {
        return Err(Error::invariant("d_m = 1 does not match Γ(m) = R_m"));
    }
    if let Some(delta) = sub.delta() {
        let omega = fundamental_coweight(sub, delta)?;
        for gamma in sub.base() {
            let want = if gamma == delta { 1 } else { 0 };
            if omega.pair(gamma.coeffs()) != rat(want) {
                return Err(Error::invariant("fundamental coweight is not dual to the base"));
            }
        }
    }
    Ok(DmReport {
        m: sub.m(),
        d_product,
        d_heights,
        d_oracle: oracle.d,
        node: oracle.node,
    })
}
