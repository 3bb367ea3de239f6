//! Reduced irreducible root systems, built from their Cartan matrices.
//!
//! Roots are integer coefficient vectors over the simple roots. The simple
//! roots are numbered as follows (0-based indices in brackets):
//!
//! * `A_r`: a chain, `alpha_i = e_{i+1} - e_i` for `i = 1..r` \[`i-1`\].
//! * `B_n`: `alpha_1 = e_1` (short), `alpha_i = e_i - e_{i-1}` \[`i-1`\].
//! * `C_n`: `alpha_1 = 2 e_1` (long), `alpha_i = e_i - e_{i-1}` \[`i-1`\].
//! * `D_{n+1}`: vertices `0..n`, `alpha_0 = e_1 + e_0`, `alpha_i = e_i - e_{i-1}` \[`i`\].
//! * `E_6, E_7, E_8`: Bourbaki numbering, node 2 attached to node 4 \[`i-1`\].
//! * `F_4`: `a, b` long, `c, d` short, `b + c` a root \[`0..4`\].
//! * `G_2`: `alpha` short \[0\], `beta` long \[1\].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rat, Echelon, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Family and rank parameter of an irreducible reduced root system.
///
/// For type D the parameter is `n` and the system is `D_{n+1}` with vertices
/// numbered `0..=n`; use [`SystemLabel::d`] or [`SystemLabel::from_rank`] to
/// avoid off-by-one mistakes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemLabel {
    family: Family,
    param: usize,
}

impl SystemLabel {
    pub fn new(family: Family, param: usize) -> Result<Self> {
        let check = |ok: bool, constraint: &'static str| {
            if ok {
                Ok(SystemLabel { family, param })
            } else {
                Err(Error::InvalidRank {
                    family: family.letter(),
                    param,
                    constraint,
                })
            }
        };
        match family {
            Family::A => check(param >= 1, "A_n needs n >= 1"),
            Family::B => check(param >= 2, "B_n needs n >= 2"),
            Family::C => check(param >= 2, "C_n needs n >= 2"),
            Family::D => check(param >= 3, "D_{n+1} needs n >= 3"),
            Family::E => check((6..=8).contains(&param), "E_n needs n in {6,7,8}"),
            Family::F => check(param == 4, "F_n needs n = 4"),
            Family::G => check(param == 2, "G_n needs n = 2"),
        }
    }

    /// Label from the usual rank, so `from_rank(D, 7)` is `D_7` (parameter 6).
    pub fn from_rank(family: Family, rank: usize) -> Result<Self> {
        match family {
            Family::D => {
                if rank < 4 {
                    return Err(Error::InvalidRank {
                        family: 'D',
                        param: rank.saturating_sub(1),
                        constraint: "D_{n+1} needs n >= 3",
                    });
                }
                SystemLabel::new(family, rank - 1)
            }
            _ => SystemLabel::new(family, rank),
        }
    }

    pub fn a(rank: usize) -> Result<Self> {
        SystemLabel::new(Family::A, rank)
    }

    pub fn b(n: usize) -> Result<Self> {
        SystemLabel::new(Family::B, n)
    }

    pub fn c(n: usize) -> Result<Self> {
        SystemLabel::new(Family::C, n)
    }

    /// `D_{n+1}`, i.e. `d(3)` is `D_4`.
    pub fn d(n: usize) -> Result<Self> {
        SystemLabel::new(Family::D, n)
    }

    pub fn e(rank: usize) -> Result<Self> {
        SystemLabel::new(Family::E, rank)
    }

    pub fn f4() -> Self {
        SystemLabel {
            family: Family::F,
            param: 4,
        }
    }

    pub fn g2() -> Self {
        SystemLabel {
            family: Family::G,
            param: 2,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The parameter as used in the closed-form formulas (`n` for `D_{n+1}`).
    pub fn param(&self) -> usize {
        self.param
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::D => self.param + 1,
            _ => self.param,
        }
    }
}

impl fmt::Display for SystemLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank())
    }
}

impl FromStr for SystemLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(s.to_string()))?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| Error::Parse(s.to_string()))?;
        SystemLabel::from_rank(family, rank)
    }
}

impl Serialize for SystemLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
    height: i64,
    long: bool,
}

impl Root {
    fn new(coeffs: Vec<i64>, long: bool) -> Self {
        let height = coeffs.iter().sum();
        Root {
            coeffs,
            height,
            long,
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn is_long(&self) -> bool {
        self.long
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coeffs.iter().map(|c| -c).collect(), self.long)
    }
}

/// An irreducible reduced root system with its positive roots sorted by
/// height, then lexicographically by coefficients.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: SystemLabel,
    simple_roots: Vec<Root>,
    cartan: Vec<Vec<i64>>,
    sym_form: Vec<Vec<Rational>>,
    positive_roots: Vec<Root>,
    coxeter_h: i64,
    exponents: Vec<i64>,
    // sym_form scaled by form_scale, so that all entries are integers
    int_form: Vec<Vec<i64>>,
    form_scale: i64,
    index: HashMap<Vec<i64>, usize>,
    height_counts: Vec<usize>,
}

type Bond = (usize, usize, i64, i64);

fn bonds(label: SystemLabel) -> Vec<Bond> {
    let r = label.rank();
    let chain = |from: usize| (from..r - 1).map(|i| (i, i + 1, -1, -1));
    match label.family() {
        Family::A => chain(0).collect(),
        Family::B => std::iter::once((0, 1, -2, -1)).chain(chain(1)).collect(),
        Family::C => std::iter::once((0, 1, -1, -2)).chain(chain(1)).collect(),
        Family::D => [(0, 2, -1, -1)].into_iter().chain(chain(1)).collect(),
        Family::E => [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
            .into_iter()
            .filter(|&(i, j)| i < r && j < r)
            .map(|(i, j)| (i, j, -1, -1))
            .collect(),
        Family::F => vec![(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)],
        Family::G => vec![(0, 1, -3, -1)],
    }
}

fn cartan_matrix(r: usize, bonds: &[Bond]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j, aij, aji) in bonds {
        a[i][j] = aij;
        a[j][i] = aji;
    }
    a
}

/// Squared lengths of the simple roots, long ones normalized to 2.
fn simple_lengths(cartan: &[Vec<i64>]) -> Result<Vec<Rational>> {
    let r = cartan.len();
    let mut len: Vec<Option<Rational>> = vec![None; r];
    len[0] = Some(Rational::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let li = len[i].unwrap();
        for j in 0..r {
            if j != i && cartan[i][j] != 0 && len[j].is_none() {
                len[j] = Some(li * rat(cartan[i][j]) / rat(cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let len: Vec<Rational> = len
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::invariant("Dynkin diagram is not connected"))?;
    let max = *len.iter().max().unwrap();
    Ok(len.iter().map(|l| l * rat(2) / max).collect())
}

fn validate_cartan(a: &[Vec<i64>]) -> Result<()> {
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            let ok = if i == j {
                x == 2
            } else {
                x <= 0 && ((x == 0) == (a[j][i] == 0))
            };
            if !ok {
                return Err(Error::invariant(format!("invalid Cartan entry ({i},{j})")));
            }
        }
    }
    Ok(())
}

impl RootSystem {
    pub fn build(label: SystemLabel) -> Result<Self> {
        let label = SystemLabel::new(label.family(), label.param())?;
        let r = label.rank();
        let cartan = cartan_matrix(r, &bonds(label));
        validate_cartan(&cartan)?;

        let lengths = simple_lengths(&cartan)?;
        let sym_form: Vec<Vec<Rational>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| rat(cartan[i][j]) * lengths[i] / rat(2))
                    .collect()
            })
            .collect();
        if (0..r).any(|i| (0..r).any(|j| sym_form[i][j] != sym_form[j][i])) {
            return Err(Error::invariant("symmetrized Cartan form is not symmetric"));
        }
        let form_scale = sym_form
            .iter()
            .flatten()
            .fold(1i128, |acc, x| acc.lcm(x.denom())) as i64;
        let int_form: Vec<Vec<i64>> = sym_form
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * rat(form_scale)).to_integer() as i64)
                    .collect()
            })
            .collect();

        let coeff_vectors = positive_root_closure(&cartan);

        let long_norm = 2 * form_scale;
        let norm = |v: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..r {
                if v[i] == 0 {
                    continue;
                }
                for j in 0..r {
                    s += v[i] * int_form[i][j] * v[j];
                }
            }
            s
        };
        let positive_roots: Vec<Root> = coeff_vectors
            .into_iter()
            .map(|v| {
                let long = norm(&v) == long_norm;
                Root::new(v, long)
            })
            .collect();
        let index: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, b)| (b.coeffs.clone(), i))
            .collect();
        let simple_roots: Vec<Root> = (0..r)
            .map(|i| {
                let mut e = vec![0; r];
                e[i] = 1;
                positive_roots[index[&e]].clone()
            })
            .collect();
        let max_height = positive_roots.last().map(|b| b.height).unwrap_or(0);
        let coxeter_h = max_height + 1;
        let mut height_counts = vec![0usize; coxeter_h as usize + 1];
        for b in &positive_roots {
            height_counts[b.height as usize] += 1;
        }
        let mut exponents = Vec::new();
        for m in 1..coxeter_h as usize {
            for _ in 0..height_counts[m] - height_counts[m + 1] {
                exponents.push(m as i64);
            }
        }

        let rs = RootSystem {
            label,
            simple_roots,
            cartan,
            sym_form,
            positive_roots,
            coxeter_h,
            exponents,
            int_form,
            form_scale,
            index,
            height_counts,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.positive_roots.len() as i64;
        if 2 * n != self.rank() as i64 * self.coxeter_h {
            return Err(Error::invariant("|R+| != rank * h / 2"));
        }
        if self.pi(self.coxeter_h as usize - 1) != 1 {
            return Err(Error::invariant("highest root is not unique"));
        }
        if self.exponents.iter().sum::<i64>() != n {
            return Err(Error::invariant("exponents do not sum to |R+|"));
        }
        if self.exponents.len() != self.rank() {
            return Err(Error::invariant("number of exponents differs from the rank"));
        }
        Ok(())
    }

    pub fn label(&self) -> SystemLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn sym_form(&self) -> &[Vec<Rational>] {
        &self.sym_form
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_h
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("root systems are nonempty")
    }

    /// Order of the Weyl group, `prod (e_i + 1)` over the exponents.
    pub fn weyl_group_order(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64 + 1).product()
    }

    /// Position of a positive root in [`RootSystem::positive_roots`].
    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.signed_index(coeffs).is_some()
    }

    /// Index of `±coeffs` among the positive roots, and the sign.
    pub fn signed_index(&self, coeffs: &[i64]) -> Option<(usize, i64)> {
        if let Some(i) = self.index_of(coeffs) {
            return Some((i, 1));
        }
        if coeffs.iter().any(|&c| c > 0) {
            return None;
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.index_of(&neg).map(|i| (i, -1))
    }

    pub fn root(&self, coeffs: &[i64]) -> Result<Root> {
        match self.signed_index(coeffs) {
            Some((i, 1)) => Ok(self.positive_roots[i].clone()),
            Some((i, _)) => Ok(self.positive_roots[i].negated()),
            None => Err(self.not_a_root(coeffs)),
        }
    }

    fn not_a_root(&self, coeffs: &[i64]) -> Error {
        Error::NotARoot(coeffs.to_vec(), self.label.to_string())
    }

    pub fn height(&self, coeffs: &[i64]) -> Result<i64> {
        if coeffs.len() != self.rank() || !self.is_root(coeffs) {
            return Err(self.not_a_root(coeffs));
        }
        Ok(coeffs.iter().sum())
    }

    /// `(u, v)` scaled by [`RootSystem::form_scale`]; exact integer.
    pub fn scaled_inner(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            let row = &self.int_form[i];
            for (j, &vj) in v.iter().enumerate() {
                s += ui * row[j] * vj;
            }
        }
        s
    }

    /// The form scaled by [`RootSystem::form_scale`], an integer matrix.
    pub fn int_form(&self) -> &[Vec<i64>] {
        &self.int_form
    }

    pub fn form_scale(&self) -> i64 {
        self.form_scale
    }

    pub fn inner(&self, u: &[i64], v: &[i64]) -> Rational {
        Rational::new(self.scaled_inner(u, v) as i128, self.form_scale as i128)
    }

    /// `<beta, gamma^vee> = 2 (beta, gamma) / (gamma, gamma)` without the root check.
    pub(crate) fn pairing_unchecked(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let num = 2 * self.scaled_inner(beta, gamma);
        let den = self.scaled_inner(gamma, gamma);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    pub fn cartan_pairing(&self, beta: &[i64], gamma: &[i64]) -> Result<i64> {
        for v in [beta, gamma] {
            if v.len() != self.rank() || !self.is_root(v) {
                return Err(self.not_a_root(v));
            }
        }
        let num = 2 * self.scaled_inner(beta, gamma);
        let den = self.scaled_inner(gamma, gamma);
        if num % den != 0 {
            return Err(Error::invariant("Cartan pairing is not an integer"));
        }
        Ok(num / den)
    }

    /// Number of positive roots of height `k`.
    pub fn pi(&self, k: usize) -> usize {
        self.height_counts.get(k).copied().unwrap_or(0)
    }

    /// The `e`-coordinate view for the classical families.
    pub fn epsilon_view(&self) -> Option<EpsilonView> {
        EpsilonView::new(self.label)
    }

    pub fn to_json(&self) -> String {
        let doc = RootSystemDoc {
            label: self.label,
            rank: self.rank(),
            cartan: &self.cartan,
            positive_roots: self.positive_roots.iter().map(|b| b.coeffs()).collect(),
            coxeter_number: self.coxeter_h,
            exponents: &self.exponents,
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

#[derive(Serialize)]
struct RootSystemDoc<'a> {
    label: SystemLabel,
    rank: usize,
    cartan: &'a [Vec<i64>],
    positive_roots: Vec<&'a [i64]>,
    coxeter_number: i64,
    exponents: &'a [i64],
}

/// Positive roots by height-increasing closure: `beta + alpha_i` is a root
/// exactly when the `alpha_i`-string through `beta` continues upward, i.e.
/// `p - <beta, alpha_i^vee> > 0` where `p` counts the roots below `beta`.
fn positive_root_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<i64>> = Default::default();
    let mut level: BTreeSet<Vec<i64>> = (0..r)
        .map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            e
        })
        .collect();
    while !level.is_empty() {
        for v in &level {
            seen.insert(v.clone());
        }
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..r {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] >= 0 && seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        // BTreeSet iteration is lexicographic within a height
        all.extend(std::mem::replace(&mut level, next));
    }
    all
}

/// Realization of a classical system in coordinates `e_i`, with the
/// numbering of the module documentation.
#[derive(Debug, Clone)]
pub struct EpsilonView {
    offset: usize,
    dim: usize,
    simple: Vec<Vec<i64>>,
    echelon: Echelon,
}

impl EpsilonView {
    fn new(label: SystemLabel) -> Option<Self> {
        let n = label.param();
        let (offset, dim) = match label.family() {
            Family::A => (1, n + 1),
            Family::B | Family::C => (1, n),
            Family::D => (0, n + 1),
            _ => return None,
        };
        let unit = |k: usize, c: i64| {
            let mut v = vec![0; dim];
            v[k - offset] += c;
            v
        };
        let diff = |j: usize, i: usize| {
            let mut v = unit(j, 1);
            v[i - offset] -= 1;
            v
        };
        let simple: Vec<Vec<i64>> = match label.family() {
            Family::A => (1..=n).map(|i| diff(i + 1, i)).collect(),
            Family::B => std::iter::once(unit(1, 1))
                .chain((2..=n).map(|i| diff(i, i - 1)))
                .collect(),
            Family::C => std::iter::once(unit(1, 2))
                .chain((2..=n).map(|i| diff(i, i - 1)))
                .collect(),
            Family::D => {
                let mut a0 = unit(1, 1);
                a0[0] += 1;
                std::iter::once(a0)
                    .chain((1..=n).map(|i| diff(i, i - 1)))
                    .collect()
            }
            _ => unreachable!(),
        };
        let echelon = Echelon::from_integer(&simple, dim);
        Some(EpsilonView {
            offset,
            dim,
            simple,
            echelon,
        })
    }

    /// Index of the first coordinate (`e_0` in type D, `e_1` otherwise).
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    pub fn to_epsilon(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut v = vec![0; self.dim];
        for (c, s) in coeffs.iter().zip(&self.simple) {
            for (x, y) in v.iter_mut().zip(s) {
                *x += c * y;
            }
        }
        v
    }

    /// Coefficient vector of `sum c * e_k` given as `(k, c)` terms; `None` if
    /// the vector is not an integral combination of simple roots.
    pub fn coeffs_of(&self, terms: &[(usize, i64)]) -> Option<Vec<i64>> {
        let mut v = vec![rat(0); self.dim];
        for &(k, c) in terms {
            if k < self.offset || k - self.offset >= self.dim {
                return None;
            }
            v[k - self.offset] += rat(c);
        }
        let c = self.echelon.coordinates(&v)?;
        c.iter()
            .map(|x| x.is_integer().then(|| x.to_integer() as i64))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn e6_counts() {
        let rs = build("E6");
        assert_eq!(rs.coxeter_number(), 12);
        assert_eq!(rs.positive_roots().len(), 36);
    }

    #[test]
    fn a1_single_root() {
        let rs = build("A1");
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.coxeter_number(), 2);
    }

    #[test]
    fn g2_heights() {
        let rs = build("G2");
        let h: Vec<i64> = rs.positive_roots().iter().map(Root::height).collect();
        assert_eq!(h, vec![1, 1, 2, 3, 4, 5]);
        assert!(!rs.simple_roots()[0].is_long());
        assert!(rs.simple_roots()[1].is_long());
    }

    #[test]
    fn label_parsing() {
        let d7: SystemLabel = "D7".parse().unwrap();
        assert_eq!(d7.param(), 6);
        assert_eq!(d7.rank(), 7);
        assert_eq!(d7.to_string(), "D7");
        assert_eq!(SystemLabel::d(6).unwrap(), d7);
        assert!("D3".parse::<SystemLabel>().is_err());
        assert!("E9".parse::<SystemLabel>().is_err());
        assert!("X2".parse::<SystemLabel>().is_err());
        assert!(matches!(
            SystemLabel::b(1),
            Err(Error::InvalidRank { family: 'B', .. })
        ));
    }

    #[test]
    fn heights_of_epsilon_roots() {
        let c5 = build("C5");
        let ev = c5.epsilon_view().unwrap();
        let b = ev.coeffs_of(&[(3, 2)]).unwrap();
        assert_eq!(c5.height(&b).unwrap(), 5);

        let d7 = RootSystem::build(SystemLabel::d(6).unwrap()).unwrap();
        let ev = d7.epsilon_view().unwrap();
        let b = ev.coeffs_of(&[(2, 1), (5, 1)]).unwrap();
        assert_eq!(d7.height(&b).unwrap(), 7);
    }

    #[test]
    fn height_rejects_non_roots() {
        let rs = build("A3");
        assert!(rs.height(&[1, 0, 1]).is_err());
        assert_eq!(rs.height(&[-1, -1, 0]).unwrap(), -2);
        assert_eq!(rs.height(&[0, 1, 0]).unwrap(), 1);
    }

    #[test]
    fn pairings() {
        let a2 = build("A2");
        assert_eq!(a2.cartan_pairing(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(a2.cartan_pairing(&[1, 1], &[1, 1]).unwrap(), 2);
        let g2 = build("G2");
        assert_eq!(g2.cartan_pairing(&[0, 1], &[1, 0]).unwrap(), -3);
        assert_eq!(g2.cartan_pairing(&[1, 0], &[0, 1]).unwrap(), -1);
        assert!(g2.cartan_pairing(&[2, 0], &[0, 1]).is_err());
    }

    #[test]
    fn pi_examples() {
        assert_eq!(build("A6").pi(3), 4);
        assert_eq!(build("B5").pi(3), 4);
        assert_eq!(build("E8").pi(15), 4);
        assert_eq!(build("E8").pi(30), 0);
    }

    #[test]
    fn short_root_lengths() {
        let g2 = build("G2");
        assert_eq!(g2.inner(&[1, 0], &[1, 0]), Rational::new(2, 3));
        let b3 = build("B3");
        assert_eq!(b3.inner(&[1, 0, 0], &[1, 0, 0]), rat(1));
        assert_eq!(b3.inner(&[0, 1, 0], &[0, 1, 0]), rat(2));
    }

    #[test]
    fn json_is_stable() {
        let rs = build("B2");
        let j = rs.to_json();
        assert_eq!(j, build("B2").to_json());
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["label"], "B2");
        assert_eq!(v["coxeter_number"], 4);
        assert_eq!(v["positive_roots"].as_array().unwrap().len(), 4);
        assert_eq!(v["exponents"], serde_json::json!([1, 3]));
    }
}
