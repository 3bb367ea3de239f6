//! Closed-form classification of `R(m)` by family, used to check the
//! computed classification cell by cell.

use serde::Serialize;

use crate::dynkin::{ComponentLabel, DynkinType};
use crate::error::{Error, Result};
use crate::system::{Family, SystemLabel};

/// Which closed form produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    TypeA,
    TypeCLargeModulus,
    TypeCLowRemainder,
    TypeCHighRemainder,
    TypeBdLargeModulus,
    TypeBdOdd,
    TypeBdEvenSmall,
    TypeBdExtraRootHighRemainder,
    TypeBdExtraRootLowRemainder,
    ExceptionalHighModulus,
    ExceptionalTable,
    DerivedTable,
}

impl Source {
    pub fn tag(self) -> &'static str {
        match self {
            Source::TypeA => "type-a",
            Source::TypeCLargeModulus => "type-c-large-modulus",
            Source::TypeCLowRemainder => "type-c-low-remainder",
            Source::TypeCHighRemainder => "type-c-high-remainder",
            Source::TypeBdLargeModulus => "type-bd-large-modulus",
            Source::TypeBdOdd => "type-bd-odd",
            Source::TypeBdEvenSmall => "type-bd-even-small",
            Source::TypeBdExtraRootHighRemainder => "type-bd-extra-root-high-remainder",
            Source::TypeBdExtraRootLowRemainder => "type-bd-extra-root-low-remainder",
            Source::ExceptionalHighModulus => "exceptional-high-modulus",
            Source::ExceptionalTable => "exceptional-table",
            Source::DerivedTable => "derived-table",
        }
    }

    /// Rows read off the list of positive roots rather than a stated formula.
    pub fn is_derived(self) -> bool {
        self == Source::DerivedTable
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    #[serde(rename = "type")]
    pub dynkin: DynkinType,
    pub x_dagger: Option<ComponentLabel>,
    /// `None` with `x_dagger` present means `X0` is empty.
    pub x_zero: Option<ComponentLabel>,
    pub d: u64,
    pub levi: bool,
    pub source: Source,
    /// For B/D with an extra root: `2^floor((n - k)/m)`, the single-formula
    /// form of `d`, kept to confirm it agrees with `d`.
    pub d_alt: Option<u64>,
}

impl Prediction {
    fn levi(dynkin: DynkinType, source: Source) -> Self {
        Prediction {
            dynkin,
            x_dagger: None,
            x_zero: None,
            d: 1,
            levi: true,
            source,
            d_alt: None,
        }
    }

    /// `X0` as a (possibly empty) type, for comparison with a computed one.
    pub fn x_zero_type(&self) -> DynkinType {
        DynkinType::new(self.x_zero)
    }
}

/// Coxeter number from the label alone.
pub fn coxeter_number(label: SystemLabel) -> usize {
    let n = label.param();
    match label.family() {
        Family::A => n + 1,
        Family::B | Family::C | Family::D => 2 * n,
        Family::E => match n {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        Family::F => 12,
        Family::G => 6,
    }
}

/// The closed-form type of `R(m)` for `2 <= m < h`.
pub fn predict(label: SystemLabel, m: usize) -> Result<Prediction> {
    if m < 2 || m >= coxeter_number(label) {
        return Err(Error::NoPrediction(label.to_string(), m));
    }
    let n = label.param();
    Ok(match label.family() {
        Family::A => type_a(n + 1, m),
        Family::C => type_c(n, m),
        Family::B | Family::D => type_bd(label.family(), n, m),
        Family::E => type_e(n, m)?,
        Family::F => type_f4(m)?,
        Family::G => type_g2(m)?,
    })
}

fn a(rank: usize) -> ComponentLabel {
    ComponentLabel::a(rank)
}

fn a_short(rank: usize) -> ComponentLabel {
    ComponentLabel::a(rank).short()
}

fn copies(count: usize, c: ComponentLabel) -> impl Iterator<Item = ComponentLabel> {
    std::iter::repeat_n(c, count)
}

/// `A_{n-1}`, every `R(m)` of Levi type.
fn type_a(n: usize, m: usize) -> Prediction {
    let labels: Vec<ComponentLabel> = if n < 2 * m {
        copies(n - m, a(1)).collect()
    } else {
        let (q, t) = (n / m, n % m);
        copies(t, a(q)).chain(copies(m - t, a(q - 1))).collect()
    };
    Prediction::levi(DynkinType::new(labels), Source::TypeA)
}

/// `C_n`; the type-A components consist of short roots, the `C` component
/// contains the long roots `2 e_i`.
fn type_c(n: usize, m: usize) -> Prediction {
    let k = m / 2;
    let odd = m % 2 == 1;
    let c = |rank: usize| ComponentLabel::new(Family::C, rank);
    let mut labels = Vec::new();
    let source = if m > n {
        let i = m - n;
        labels.extend(copies(k - i, a_short(1)));
        if odd {
            labels.push(c(1));
        }
        Source::TypeCLargeModulus
    } else {
        let (q, t) = (n / m, n % m);
        if 2 * t <= m {
            labels.extend(copies(t, a_short(2 * q)));
            labels.extend(copies(k - t, a_short(2 * q - 1)));
            if odd {
                labels.push(c(q));
            }
            Source::TypeCLowRemainder
        } else {
            labels.extend(copies(m - t, a_short(2 * q)));
            labels.extend(copies(k + t - m, a_short(2 * q + 1)));
            if odd {
                labels.push(c(q + 1));
            }
            Source::TypeCHighRemainder
        }
    };
    Prediction::levi(DynkinType::new(labels), source)
}

/// `B_n` or `D_{n+1}`.
fn type_bd(family: Family, n: usize, m: usize) -> Prediction {
    let k = m / 2;
    let odd = m % 2 == 1;
    // B_q, resp. D_{q+1}; low-rank aliases are resolved by normalization
    let bd = |q: usize| match family {
        Family::B => ComponentLabel::new(Family::B, q),
        _ => ComponentLabel::new(Family::D, q + 1),
    };
    if m > n {
        let i = m - n;
        let count = if odd { k - i + 1 } else { k - i };
        return Prediction::levi(
            DynkinType::new(copies(count, a(1))),
            Source::TypeBdLargeModulus,
        );
    }
    let (q, t) = (n / m, n % m);
    let mut labels = vec![bd(q)];
    if odd {
        if t > k {
            let i = t - k;
            labels.extend(copies(i, a(2 * q + 1)));
            labels.extend(copies(k - i, a(2 * q)));
        } else {
            labels.extend(copies(t, a(2 * q)));
            labels.extend(copies(k - t, a(2 * q - 1)));
        }
        return Prediction::levi(DynkinType::new(labels), Source::TypeBdOdd);
    }
    if q == 1 && t < k {
        labels.extend(copies(t, a(2)));
        labels.extend(copies(k - 1 - t, a(1)));
        return Prediction::levi(DynkinType::new(labels), Source::TypeBdEvenSmall);
    }
    // the extra root e_k + e_{3k} joins a spin node to an A component
    let (p, source) = if t >= k {
        let i = t - k;
        labels.extend(copies(k - 1 - i, a(2 * q)));
        labels.extend(copies(i, a(2 * q + 1)));
        (q + 1, Source::TypeBdExtraRootHighRemainder)
    } else {
        labels.extend(copies(t, a(2 * q)));
        labels.extend(copies(k - 1 - t, a(2 * q - 1)));
        (q, Source::TypeBdExtraRootLowRemainder)
    };
    let (x_dagger, x_zero) = match p {
        2 => (a(1).dagger(), None),
        3 => (a(3).dagger(), Some(a(2))),
        _ => (ComponentLabel::new(Family::D, p).dagger(), Some(a(p - 1))),
    };
    labels.extend(ComponentLabel::new(Family::D, p).dagger().normalize());
    Prediction {
        dynkin: DynkinType::new(labels),
        x_dagger: Some(x_dagger),
        x_zero,
        d: 1 << (p - 1),
        levi: false,
        source,
        d_alt: Some(1 << ((n - k) / m)),
    }
}

/// Number of positive roots of each height, as `(first height, last
/// height, count)` blocks starting at height 2.
pub const E6_HEIGHTS: &[(usize, usize, usize)] =
    &[(2, 4, 5), (5, 5, 4), (6, 7, 3), (8, 8, 2), (9, 11, 1)];
pub const E7_HEIGHTS: &[(usize, usize, usize)] = &[
    (2, 5, 6),
    (6, 7, 5),
    (8, 9, 4),
    (10, 11, 3),
    (12, 13, 2),
    (14, 17, 1),
];
pub const E8_HEIGHTS: &[(usize, usize, usize)] = &[
    (2, 7, 7),
    (8, 11, 6),
    (12, 13, 5),
    (14, 17, 4),
    (18, 19, 3),
    (20, 23, 2),
    (24, 29, 1),
];

fn lookup_heights(table: &[(usize, usize, usize)], k: usize) -> usize {
    table
        .iter()
        .find(|(lo, hi, _)| (*lo..=*hi).contains(&k))
        .map_or(0, |&(_, _, c)| c)
}

struct Row {
    m: usize,
    dynkin: &'static str,
    x_zero: Option<&'static str>,
    d: u64,
}

const fn levi(m: usize, dynkin: &'static str) -> Row {
    Row {
        m,
        dynkin,
        x_zero: None,
        d: 1,
    }
}

const fn extra(m: usize, dynkin: &'static str, x_zero: Option<&'static str>, d: u64) -> Row {
    Row {
        m,
        dynkin,
        x_zero,
        d,
    }
}

const E6_ROWS: &[Row] = &[
    extra(2, "A5 + A1†", None, 2),
    extra(3, "2A2 + A2†", Some("A1"), 3),
    levi(4, "2A2 + A1"),
    levi(5, "A2 + 2A1"),
];

const E7_ROWS: &[Row] = &[
    extra(2, "A7†", Some("A6"), 8),
    extra(3, "A5 + A2†", Some("A1"), 3),
    levi(4, "A4 + A2"),
    levi(5, "A3 + A2 + A1"),
    levi(6, "2A2 + A1"),
    levi(7, "A2 + 3A1"),
    levi(8, "A2 + 2A1"),
];

const E8_ROWS: &[Row] = &[
    extra(2, "D8†", Some("D7"), 16),
    extra(3, "A8†", Some("A7"), 9),
    extra(4, "D5 + A3†", Some("A2"), 4),
    extra(5, "A4 + A4†", Some("A3"), 5),
    levi(6, "A4 + A3"),
    levi(7, "A4 + A2 + A1"),
    extra(8, "A3 + A2 + A1 + A1†", None, 2),
    levi(9, "A3 + A2 + A1"),
    levi(10, "2A2 + 2A1"),
    levi(11, "2A2 + 2A1"),
    levi(12, "A2 + 3A1"),
    levi(13, "A2 + 3A1"),
    levi(14, "A2 + 2A1"),
];

const F4_ROWS: &[Row] = &[
    extra(2, "C3 + A1†", None, 2),
    extra(3, "A2(s) + A2†", Some("A1"), 3),
    levi(4, "A2(s) + A1"),
    levi(5, "A2 + A1(s)"),
    levi(6, "A1 + A1(s)"),
    levi(7, "A1 + A1(s)"),
];

const F4_SINGLE_ROOTS: &[Row] = &[levi(8, "A1(s)"), levi(9, "A1"), levi(10, "A1"), levi(11, "A1")];

const G2_ROWS: &[Row] = &[extra(2, "A1(s) + A1†", None, 2)];

const G2_SINGLE_ROOTS: &[Row] = &[levi(3, "A1(s)"), levi(4, "A1"), levi(5, "A1")];

fn from_row(row: &Row, source: Source) -> Result<Prediction> {
    let dynkin: DynkinType = row.dynkin.parse()?;
    let x_dagger = dynkin.dagger_component();
    let x_zero = row.x_zero.map(str::parse).transpose()?;
    Ok(Prediction {
        dynkin,
        x_dagger,
        x_zero,
        d: row.d,
        levi: x_dagger.is_none(),
        source,
        d_alt: None,
    })
}

fn table_lookup(rows: &[Row], m: usize, source: Source) -> Option<Result<Prediction>> {
    rows.iter().find(|r| r.m == m).map(|r| from_row(r, source))
}

fn type_e(rank: usize, m: usize) -> Result<Prediction> {
    let (rows, heights, h) = match rank {
        6 => (E6_ROWS, E6_HEIGHTS, 12),
        7 => (E7_ROWS, E7_HEIGHTS, 18),
        _ => (E8_ROWS, E8_HEIGHTS, 30),
    };
    if 2 * m >= h {
        let count = lookup_heights(heights, m);
        return Ok(Prediction::levi(
            DynkinType::new(copies(count, a(1))),
            Source::ExceptionalHighModulus,
        ));
    }
    table_lookup(rows, m, Source::ExceptionalTable)
        .unwrap_or_else(|| Err(Error::NoPrediction(format!("E{rank}"), m)))
}

fn type_f4(m: usize) -> Result<Prediction> {
    table_lookup(F4_ROWS, m, Source::ExceptionalTable)
        .or_else(|| table_lookup(F4_SINGLE_ROOTS, m, Source::DerivedTable))
        .unwrap_or_else(|| Err(Error::NoPrediction("F4".into(), m)))
}

fn type_g2(m: usize) -> Result<Prediction> {
    table_lookup(G2_ROWS, m, Source::ExceptionalTable)
        .or_else(|| table_lookup(G2_SINGLE_ROOTS, m, Source::DerivedTable))
        .unwrap_or_else(|| Err(Error::NoPrediction("G2".into(), m)))
}
