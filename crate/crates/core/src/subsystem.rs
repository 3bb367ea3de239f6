//! The closed subsystem `R(m)` of roots whose height is a multiple of `m`,
//! its base, and its Dynkin type.

use crate::dynkin::{identify_component, DynkinType};
use crate::error::{Error, Result};
use crate::linalg::{is_nonnegative_integral, Echelon};
use crate::system::{Root, RootSystem};

/// `R(m)` together with its height-`m` slice and its base `Γ(m)`.
///
/// Roots are referenced by their index in the parent's positive roots.
#[derive(Debug, Clone)]
pub struct HeightSubsystem<'a> {
    parent: &'a RootSystem,
    m: usize,
    positive: Vec<usize>,
    slice: Vec<usize>,
    base: Vec<usize>,
    sub_height: Vec<i64>,
    delta: Option<usize>,
}

pub fn r_of_m(rs: &RootSystem, m: i64) -> Result<HeightSubsystem<'_>> {
    if m <= 0 {
        return Err(Error::InvalidModulus(m));
    }
    let roots = rs.positive_roots();
    let positive: Vec<usize> = (0..roots.len())
        .filter(|&i| roots[i].height() % m == 0)
        .collect();
    let slice: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&i| roots[i].height() == m)
        .collect();
    let base = extract_base(rs, &positive);

    let gens: Vec<&[i64]> = base.iter().map(|&i| roots[i].coeffs()).collect();
    let echelon = Echelon::from_integer(&gens, rs.rank());
    if !echelon.is_independent() {
        return Err(Error::invariant(format!(
            "base of R({m}) in {} is linearly dependent",
            rs.label()
        )));
    }
    let mut sub_height = Vec::with_capacity(positive.len());
    for &i in &positive {
        let c = echelon
            .coordinates_integer(roots[i].coeffs())
            .filter(|c| is_nonnegative_integral(c))
            .ok_or_else(|| {
                Error::invariant(format!(
                    "{:?} is not a nonnegative integral combination of the base of R({m})",
                    roots[i].coeffs()
                ))
            })?;
        sub_height.push(c.iter().map(|x| x.to_integer() as i64).sum());
    }

    let extra: Vec<usize> = base.iter().copied().filter(|i| !slice.contains(i)).collect();
    if extra.len() > 1 {
        return Err(Error::invariant(format!(
            "base of R({m}) in {} has {} roots outside the height-m slice",
            rs.label(),
            extra.len()
        )));
    }
    Ok(HeightSubsystem {
        parent: rs,
        m: m as usize,
        positive,
        slice,
        base,
        sub_height,
        delta: extra.first().copied(),
    })
}

/// The roots of `positive` that are not a sum of two roots of `positive`.
/// `positive` must be the positive part of a closed subsystem.
pub fn extract_base(rs: &RootSystem, positive: &[usize]) -> Vec<usize> {
    let roots = rs.positive_roots();
    let mut buf = vec![0i64; rs.rank()];
    positive
        .iter()
        .copied()
        .filter(|&b| {
            let beta = &roots[b];
            !positive.iter().any(|&g| {
                let gamma = &roots[g];
                if gamma.height() >= beta.height() {
                    return false;
                }
                let mut nonneg = true;
                for ((x, &u), &v) in buf.iter_mut().zip(beta.coeffs()).zip(gamma.coeffs()) {
                    *x = u - v;
                    nonneg &= *x >= 0;
                }
                nonneg && rs.index_of(&buf).is_some()
            })
        })
        .collect()
}

impl<'a> HeightSubsystem<'a> {
    pub fn parent(&self) -> &'a RootSystem {
        self.parent
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    /// Indices of `R^+(m)` among the parent's positive roots.
    pub fn positive_indices(&self) -> &[usize] {
        &self.positive
    }

    pub fn slice_indices(&self) -> &[usize] {
        &self.slice
    }

    pub fn base_indices(&self) -> &[usize] {
        &self.base
    }

    pub fn positive(&self) -> impl Iterator<Item = &'a Root> + '_ {
        self.positive.iter().map(|&i| &self.parent.positive_roots()[i])
    }

    pub fn slice(&self) -> impl Iterator<Item = &'a Root> + '_ {
        self.slice.iter().map(|&i| &self.parent.positive_roots()[i])
    }

    /// `Γ(m)`, in the parent's root order.
    pub fn base(&self) -> Vec<&'a Root> {
        self.base
            .iter()
            .map(|&i| &self.parent.positive_roots()[i])
            .collect()
    }

    /// Heights in `R(m)` relative to `Γ(m)`, aligned with [`Self::positive`].
    pub fn sub_heights(&self) -> &[i64] {
        &self.sub_height
    }

    pub fn sub_height_of(&self, root_index: usize) -> Option<i64> {
        self.positive
            .binary_search(&root_index)
            .ok()
            .map(|k| self.sub_height[k])
    }

    /// The element of `Γ(m)` outside `R_m`, if any.
    pub fn delta(&self) -> Option<&'a Root> {
        self.delta.map(|i| &self.parent.positive_roots()[i])
    }

    pub fn delta_index(&self) -> Option<usize> {
        self.delta
    }

    pub fn classify(&self) -> Result<DynkinType> {
        let base: Vec<&[i64]> = self.base().into_iter().map(Root::coeffs).collect();
        classify_roots(self.parent, &base, self.delta().map(Root::coeffs))
    }

    /// `R ∩ span_Q(R(m)) = R(m)`.
    pub fn is_levi_type(&self) -> bool {
        let base: Vec<&[i64]> = self.base().into_iter().map(Root::coeffs).collect();
        let ann = Echelon::from_integer(&base, self.parent.rank()).annihilator();
        let m = self.m as i64;
        self.parent
            .positive_roots()
            .iter()
            .filter(|b| b.height() % m != 0)
            .all(|b| {
                ann.iter().any(|l| {
                    l.iter()
                        .zip(b.coeffs())
                        .map(|(x, &c)| x * c as i128)
                        .sum::<i128>()
                        != 0
                })
            })
    }
}

/// Connected components of the pairing graph on `roots`.
pub fn components(rs: &RootSystem, roots: &[&[i64]]) -> Vec<Vec<usize>> {
    let n = roots.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut k = 0;
        while k < members.len() {
            let u = members[k];
            for v in 0..n {
                if comp[v] == usize::MAX && rs.scaled_inner(roots[u], roots[v]) != 0 {
                    comp[v] = id;
                    members.push(v);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Dynkin type of the root subsystem with simple roots `roots`; the
/// component containing `dagger` (if given) is marked.
pub fn classify_roots(
    rs: &RootSystem,
    roots: &[&[i64]],
    dagger: Option<&[i64]>,
) -> Result<DynkinType> {
    let long_norm = 2 * rs.form_scale();
    let mut labels = Vec::new();
    for comp in components(rs, roots) {
        let cartan: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| {
                comp.iter()
                    .map(|&j| rs.pairing_unchecked(roots[j], roots[i]))
                    .collect()
            })
            .collect();
        let norms: Vec<i64> = comp
            .iter()
            .map(|&i| rs.scaled_inner(roots[i], roots[i]))
            .collect();
        let mut label = identify_component(&cartan, &norms, long_norm)?;
        if let Some(d) = dagger {
            label.dagger = comp.iter().any(|&i| roots[i] == d);
        }
        labels.push(label);
    }
    let ty = DynkinType::new(labels);
    if ty.components().iter().filter(|c| c.dagger).count() > 1 {
        return Err(Error::invariant("more than one daggered component"));
    }
    Ok(ty)
}

/// Checks that `R_m` is part of a base: independent, pairwise obtuse, no
/// difference of two elements is a root, and every root in its span is an
/// integral combination of constant sign.
pub fn rm_is_partial_base(rs: &RootSystem, m: i64) -> Result<bool> {
    if m <= 0 {
        return Err(Error::InvalidModulus(m));
    }
    let slice: Vec<&[i64]> = rs
        .positive_roots()
        .iter()
        .filter(|b| b.height() == m)
        .map(Root::coeffs)
        .collect();
    let echelon = Echelon::from_integer(&slice, rs.rank());
    if !echelon.is_independent() {
        return Ok(false);
    }
    for (i, u) in slice.iter().enumerate() {
        for v in &slice[i + 1..] {
            if rs.scaled_inner(u, v) > 0 {
                return Ok(false);
            }
            let diff: Vec<i64> = u.iter().zip(v.iter()).map(|(a, b)| a - b).collect();
            if rs.is_root(&diff) {
                return Ok(false);
            }
        }
    }
    for b in rs.positive_roots() {
        if let Some(c) = echelon.coordinates_integer(b.coeffs()) {
            // positive roots expand with nonnegative coefficients; a negative
            // sign pattern would mean the roles of beta and -beta are swapped
            if !is_nonnegative_integral(&c) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
