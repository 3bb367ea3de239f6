//! Dynkin types of (possibly reducible) root systems and identification of a
//! connected Cartan matrix.

use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::Family;

/// One connected component: family and rank, plus whether it consists of
/// short roots of the ambient system and whether it carries the extra simple
/// root of height `2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ComponentLabel {
    pub family: Family,
    pub rank: usize,
    pub short: bool,
    pub dagger: bool,
}

impl ComponentLabel {
    pub const fn new(family: Family, rank: usize) -> Self {
        ComponentLabel {
            family,
            rank,
            short: false,
            dagger: false,
        }
    }

    pub const fn a(rank: usize) -> Self {
        ComponentLabel::new(Family::A, rank)
    }

    pub const fn with_short(mut self, short: bool) -> Self {
        self.short = short;
        self
    }

    pub const fn short(self) -> Self {
        self.with_short(true)
    }

    pub const fn dagger(mut self) -> Self {
        self.dagger = true;
        self
    }

    /// Rewrites low-rank aliases: `D2 = 2A1`, `D3 = A3`, `B1 = A1(s)`,
    /// `C1 = A1`, `C2 = B2`. Rank-0 labels vanish. A daggered `D2` keeps the
    /// dagger on one of its two `A1`.
    pub fn normalize(self) -> Vec<ComponentLabel> {
        let ComponentLabel {
            family,
            rank,
            short,
            dagger,
        } = self;
        let a = |r: usize, short: bool, dagger: bool| ComponentLabel {
            family: Family::A,
            rank: r,
            short,
            dagger,
        };
        match (family, rank) {
            (_, 0) | (Family::D, 1) => vec![],
            (Family::D, 2) => vec![a(1, short, false), a(1, short, dagger)],
            (Family::D, 3) => vec![a(3, short, dagger)],
            (Family::B, 1) => vec![a(1, true, dagger)],
            (Family::C, 1) => vec![a(1, false, dagger)],
            (Family::C, 2) => vec![ComponentLabel {
                family: Family::B,
                rank: 2,
                short: false,
                dagger,
            }],
            _ => vec![self],
        }
    }

    /// Number of positive roots of a root system of this type.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    fn sort_key(&self) -> (Reverse<usize>, Family, bool, bool) {
        (Reverse(self.rank), self.family, self.dagger, self.short)
    }
}

impl Ord for ComponentLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for ComponentLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)?;
        if self.short {
            f.write_str("(s)")?;
        }
        if self.dagger {
            f.write_str("†")?;
        }
        Ok(())
    }
}

/// A normalized multiset of components.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DynkinType {
    components: Vec<ComponentLabel>,
}

impl DynkinType {
    pub fn new(labels: impl IntoIterator<Item = ComponentLabel>) -> Self {
        let mut components: Vec<ComponentLabel> =
            labels.into_iter().flat_map(ComponentLabel::normalize).collect();
        components.sort();
        DynkinType { components }
    }

    pub fn empty() -> Self {
        DynkinType::default()
    }

    pub fn components(&self) -> &[ComponentLabel] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn positive_root_count(&self) -> usize {
        self.components
            .iter()
            .map(ComponentLabel::positive_root_count)
            .sum()
    }

    pub fn dagger_component(&self) -> Option<ComponentLabel> {
        self.components.iter().copied().find(|c| c.dagger)
    }

    /// The single component, if there is exactly one.
    pub fn as_single(&self) -> Option<ComponentLabel> {
        match self.components.as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    /// Rendering used for `X^0`: `∅` when empty.
    pub fn to_string_or_empty_set(&self) -> String {
        if self.is_empty() {
            "∅".to_string()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("empty");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let run = self.components[i..].iter().take_while(|&&d| d == c).count();
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{run}")?;
            }
            write!(f, "{c}")?;
            i += run;
        }
        Ok(())
    }
}

impl Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for ComponentLabel {
    type Err = Error;

    /// Parses `A2`, `A1(s)`, `D8†` (also `D8+` for the dagger).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let mut rest = s.trim();
        let mut dagger = false;
        for suffix in ["†", "+"] {
            if let Some(r) = rest.strip_suffix(suffix) {
                rest = r;
                dagger = true;
            }
        }
        let short = match rest.strip_suffix("(s)") {
            Some(r) => {
                rest = r;
                true
            }
            None => false,
        };
        let mut chars = rest.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Ok(ComponentLabel {
            family,
            rank,
            short,
            dagger,
        })
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Parses the rendering of [`DynkinType`]'s `Display`, e.g. `2A2 + A2†`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "empty" || s == "∅" {
            return Ok(DynkinType::empty());
        }
        let mut labels = Vec::new();
        for term in s.split(" + ") {
            let term = term.trim();
            let digits = term.chars().take_while(char::is_ascii_digit).count();
            let count = if digits == 0 {
                1
            } else {
                term[..digits].parse().map_err(|_| Error::Parse(s.to_string()))?
            };
            let label: ComponentLabel = term[digits..].parse()?;
            labels.extend(std::iter::repeat_n(label, count));
        }
        Ok(DynkinType::new(labels))
    }
}

/// Identifies a connected Cartan matrix (`cartan[i][j] = <g_j, g_i^vee>`)
/// whose nodes have squared lengths `norms` (any common scale).
///
/// `short` is set for simply-laced components whose roots are all shorter
/// than `long_norm`. The result is not yet normalized.
pub fn identify_component(
    cartan: &[Vec<i64>],
    norms: &[i64],
    long_norm: i64,
) -> Result<ComponentLabel> {
    let n = cartan.len();
    let bad = |why: &str| Error::invariant(format!("not a finite-type Cartan matrix: {why}"));
    if n == 0 {
        return Err(bad("empty component"));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut multiple: Vec<(usize, usize, i64)> = Vec::new();
    let mut edges = 0;
    for i in 0..n {
        if cartan[i][i] != 2 {
            return Err(bad("diagonal entry"));
        }
        for j in (i + 1)..n {
            let (x, y) = (cartan[i][j], cartan[j][i]);
            if x == 0 && y == 0 {
                continue;
            }
            if x >= 0 || y >= 0 || x * y > 3 {
                return Err(bad("off-diagonal entry"));
            }
            edges += 1;
            adj[i].push(j);
            adj[j].push(i);
            if x * y > 1 {
                multiple.push((i, j, x * y));
            }
        }
    }
    if edges != n - 1 {
        return Err(bad("diagram is not a tree"));
    }
    let all_short = norms.iter().all(|&l| l < long_norm);
    let simply_laced = |family, rank| ComponentLabel::new(family, rank).with_short(all_short);

    if n == 1 {
        return Ok(simply_laced(Family::A, 1));
    }
    let max_degree = adj.iter().map(Vec::len).max().unwrap();
    match multiple.as_slice() {
        [] => {}
        [(_, _, 3)] if n == 2 => return Ok(ComponentLabel::new(Family::G, 2)),
        [(_, _, 2)] if n == 2 => return Ok(ComponentLabel::new(Family::B, 2)),
        [(i, j, 2)] if max_degree <= 2 => {
            let (i, j) = (*i, *j);
            let (end, inner) = if adj[i].len() == 1 {
                (i, j)
            } else if adj[j].len() == 1 {
                (j, i)
            } else if n == 4 {
                return Ok(ComponentLabel::new(Family::F, 4));
            } else {
                return Err(bad("double bond inside a long chain"));
            };
            let family = if norms[end] < norms[inner] {
                Family::B
            } else {
                Family::C
            };
            return Ok(ComponentLabel::new(family, n));
        }
        _ => return Err(bad("unexpected multiple bonds")),
    }

    if max_degree <= 2 {
        return Ok(simply_laced(Family::A, n));
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    if branch.len() != 1 || adj[branch[0]].len() != 3 {
        return Err(bad("more than one branch point"));
    }
    let center = branch[0];
    let mut arms: Vec<usize> = adj[center]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, c] => Ok(simply_laced(Family::D, c + 3)),
        [1, 2, 2] => Ok(simply_laced(Family::E, 6)),
        [1, 2, 3] => Ok(simply_laced(Family::E, 7)),
        [1, 2, 4] => Ok(simply_laced(Family::E, 8)),
        _ => Err(bad("branch arms do not match D or E")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    }

    #[test]
    fn normalization() {
        let t = DynkinType::new([
            ComponentLabel::new(Family::D, 2).dagger(),
            ComponentLabel::a(2),
            ComponentLabel::new(Family::D, 2),
        ]);
        assert_eq!(t.to_string(), "A2 + 3A1 + A1†");
        assert_eq!(
            DynkinType::new([ComponentLabel::new(Family::D, 3).dagger()]).to_string(),
            "A3†"
        );
        assert_eq!(
            DynkinType::new([ComponentLabel::new(Family::C, 2)]).to_string(),
            "B2"
        );
        assert_eq!(
            DynkinType::new([ComponentLabel::new(Family::B, 1), ComponentLabel::new(Family::C, 1)])
                .to_string(),
            "A1 + A1(s)"
        );
        assert_eq!(DynkinType::empty().to_string(), "empty");
    }

    #[test]
    fn ordering_matches_usual_notation() {
        let t = DynkinType::new([ComponentLabel::a(2).dagger(), ComponentLabel::a(2).short()]);
        assert_eq!(t.to_string(), "A2(s) + A2†");
        let t = DynkinType::new([ComponentLabel::a(4).dagger(), ComponentLabel::a(4)]);
        assert_eq!(t.to_string(), "A4 + A4†");
        let t = DynkinType::new([ComponentLabel::a(1).dagger(), ComponentLabel::new(Family::C, 3)]);
        assert_eq!(t.to_string(), "C3 + A1†");
    }

    #[test]
    fn identify_chains_and_branches() {
        let a4 = chain(4);
        assert_eq!(
            identify_component(&a4, &[2; 4], 2).unwrap(),
            ComponentLabel::a(4)
        );
        assert_eq!(
            identify_component(&a4, &[1; 4], 2).unwrap(),
            ComponentLabel::a(4).short()
        );
        // D5: branch at node 2 with arms 1, 1, 2
        let mut d5 = chain(4);
        for row in d5.iter_mut() {
            row.push(0);
        }
        d5.push(vec![0, 0, -1, 0, 2]);
        d5[2][4] = -1;
        let l = identify_component(&d5, &[2; 5], 2).unwrap();
        assert_eq!(l, ComponentLabel::new(Family::D, 5));
    }

    #[test]
    fn identify_b_versus_c() {
        // nodes 0 - 1 = 2 with node 2 short: B3
        let b3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]];
        assert_eq!(
            identify_component(&b3, &[2, 2, 1], 2).unwrap().family,
            Family::B
        );
        let c3 = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        assert_eq!(
            identify_component(&c3, &[1, 1, 2], 2).unwrap().family,
            Family::C
        );
    }

    #[test]
    fn parse_round_trip() {
        for s in ["A2 + 3A1 + A1†", "D8†", "A2(s) + A2†", "C3 + A1†", "empty", "A5 + D4 + A3†"] {
            let t: DynkinType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        let t: DynkinType = "D2 + A2 + D2†".parse().unwrap();
        assert_eq!(t.to_string(), "A2 + 3A1 + A1†");
        assert!("Q3".parse::<DynkinType>().is_err());
    }

    #[test]
    fn rejects_cycles() {
        let cyc = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(identify_component(&cyc, &[2; 3], 2).is_err());
    }

    #[test]
    fn positive_root_counts() {
        let t = DynkinType::new([ComponentLabel::new(Family::D, 8)]);
        assert_eq!(t.positive_root_count(), 56);
        let t = DynkinType::new([ComponentLabel::a(4), ComponentLabel::a(4).dagger()]);
        assert_eq!(t.positive_root_count(), 20);
    }
}
