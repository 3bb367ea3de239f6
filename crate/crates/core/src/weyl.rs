//! Weyl group as permutations of the root set, and the exhaustive
//! conjugacy test against standard Levi subsystems.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::subsystem::HeightSubsystem;
use crate::system::RootSystem;

pub const DEFAULT_ORBIT_BUDGET: u64 = 2_000_000;
pub const ORBIT_BUDGET_ENV: &str = "HEIGHTFILTER_ORBIT_BUDGET";

/// The group-order bound, overridable through `HEIGHTFILTER_ORBIT_BUDGET`.
pub fn orbit_budget_from_env() -> u64 {
    std::env::var(ORBIT_BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORBIT_BUDGET)
}

/// All elements of `W`, each stored as the permutation it induces on the
/// roots. Positive root `i` has index `i`, its negative `i + N`.
pub struct WeylGroup<'a> {
    rs: &'a RootSystem,
    elements: Vec<Vec<u16>>,
}

impl<'a> WeylGroup<'a> {
    pub fn enumerate(rs: &'a RootSystem, budget: u64) -> Result<Self> {
        let order = rs.weyl_group_order();
        if order > budget {
            return Err(Error::OrbitBudgetExceeded {
                system: rs.label().to_string(),
                order,
                budget,
            });
        }
        let n = rs.positive_roots().len();
        let all: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|b| b.coeffs().to_vec())
            .chain(rs.positive_roots().iter().map(|b| b.negated().coeffs().to_vec()))
            .collect();
        let lookup = |v: &[i64]| -> u16 {
            let (i, sign) = rs.signed_index(v).expect("reflections permute roots");
            (if sign > 0 { i } else { i + n }) as u16
        };
        let generators: Vec<Vec<u16>> = rs
            .simple_roots()
            .iter()
            .map(|alpha| {
                all.iter()
                    .map(|beta| {
                        let c = rs.pairing_unchecked(beta, alpha.coeffs());
                        let image: Vec<i64> = beta
                            .iter()
                            .zip(alpha.coeffs())
                            .map(|(b, a)| b - c * a)
                            .collect();
                        lookup(&image)
                    })
                    .collect()
            })
            .collect();

        let identity: Vec<u16> = (0..2 * n as u16).collect();
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        seen.insert(identity.clone());
        let mut elements = vec![identity];
        let mut k = 0;
        while k < elements.len() {
            for s in &generators {
                let w: Vec<u16> = s.iter().map(|&j| elements[k][j as usize]).collect();
                if seen.insert(w.clone()) {
                    elements.push(w);
                }
            }
            k += 1;
        }
        if elements.len() as u64 != order {
            return Err(Error::invariant(format!(
                "enumerated {} Weyl group elements for {}, expected {order}",
                elements.len(),
                rs.label()
            )));
        }
        Ok(WeylGroup { rs, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<u16>] {
        &self.elements
    }

    /// Bitsets of the subsystems `R_I` generated by subsets `I` of the base
    /// whose positive part has `size` roots.
    fn standard_levis(&self, size: usize) -> HashSet<Vec<u64>> {
        let rs = self.rs;
        let r = rs.rank();
        let n = rs.positive_roots().len();
        let mut out = HashSet::new();
        for mask in 0u32..(1 << r) {
            let members: Vec<usize> = (0..n)
                .filter(|&i| {
                    rs.positive_roots()[i]
                        .coeffs()
                        .iter()
                        .enumerate()
                        .all(|(j, &c)| c == 0 || mask & (1 << j) != 0)
                })
                .collect();
            if members.len() == size {
                out.insert(bitset(members.iter().flat_map(|&i| [i, i + n]), 2 * n));
            }
        }
        out
    }

    /// Whether some `w` maps `R(m)` onto a standard subsystem `R_I`.
    pub fn is_levi_conjugate(&self, sub: &HeightSubsystem<'_>) -> bool {
        let n = self.rs.positive_roots().len();
        let positive = sub.positive_indices();
        let targets = self.standard_levis(positive.len());
        let neg = |j: usize| if j < n { j + n } else { j - n };
        self.elements.iter().any(|w| {
            let image = positive.iter().flat_map(|&i| {
                let j = w[i] as usize;
                [j, neg(j)]
            });
            targets.contains(&bitset(image, 2 * n))
        })
    }
}

fn bitset(items: impl Iterator<Item = usize>, len: usize) -> Vec<u64> {
    let mut bits = vec![0u64; len.div_ceil(64)];
    for i in items {
        bits[i / 64] |= 1 << (i % 64);
    }
    bits
}

/// Exhaustive Levi test over `W` and all subsets of the base.
pub fn weyl_orbit_levi_oracle(sub: &HeightSubsystem<'_>, budget: u64) -> Result<bool> {
    let group = WeylGroup::enumerate(sub.parent(), budget)?;
    Ok(group.is_levi_conjugate(sub))
}
