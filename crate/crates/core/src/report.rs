//! Per-cell classification reports, the verification grid, and their text
//! and JSON renderings.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::dm::{compute_dm, DmReport};
use crate::dynkin::{ComponentLabel, DynkinType};
use crate::error::Result;
use crate::predictor::{predict, Prediction, Source};
use crate::subsystem::{r_of_m, rm_is_partial_base};
use crate::system::{Family, RootSystem, SystemLabel};

/// Everything computed for one `(system, m)`.
#[derive(Debug, Clone)]
pub struct CellReport {
    pub system: SystemLabel,
    pub m: usize,
    pub cardinality: usize,
    pub base: Vec<Vec<i64>>,
    pub dynkin: DynkinType,
    pub levi: bool,
    pub delta: Option<Vec<i64>>,
    /// `None` exactly when `R(m)` is empty.
    pub dm: Option<DmReport>,
}

impl CellReport {
    pub fn compute(rs: &RootSystem, m: usize) -> Result<Self> {
        let sub = r_of_m(rs, m as i64)?;
        let dynkin = sub.classify()?;
        let dm = if sub.is_empty() {
            None
        } else {
            Some(compute_dm(&sub)?)
        };
        Ok(CellReport {
            system: rs.label(),
            m,
            cardinality: sub.positive_indices().len(),
            base: sub.base().iter().map(|b| b.coeffs().to_vec()).collect(),
            dynkin,
            levi: sub.is_levi_type(),
            delta: sub.delta().map(|d| d.coeffs().to_vec()),
            dm,
        })
    }

    pub fn d(&self) -> Option<u64> {
        self.dm.as_ref().map(DmReport::d)
    }

    pub fn x_dagger(&self) -> Option<ComponentLabel> {
        self.dm.as_ref()?.node.as_ref().map(|n| n.x_dagger)
    }

    pub fn x_zero(&self) -> Option<&DynkinType> {
        self.dm.as_ref()?.node.as_ref().map(|n| &n.x_zero)
    }

    /// One summary line, followed by a second line locating the extra
    /// simple root when there is one.
    pub fn text(&self) -> String {
        let mut s = format!(
            "{} m={}: |R+|={}, type {}",
            self.system, self.m, self.cardinality, self.dynkin
        );
        if let Some(x0) = self.x_zero() {
            write!(s, ", X0={}", x0.to_string_or_empty_set()).unwrap();
        }
        write!(s, ", levi={}", self.levi).unwrap();
        if let Some(d) = self.d() {
            write!(s, ", d={d}").unwrap();
        }
        if let (Some(delta), Some(node)) = (&self.delta, self.dm.as_ref().and_then(|r| r.node.as_ref())) {
            write!(s, "\n  delta={delta:?} at the {node}").unwrap();
        }
        s
    }

    pub fn doc(&self) -> ClassificationDoc<'_> {
        let node = self.dm.as_ref().and_then(|r| r.node.as_ref());
        ClassificationDoc {
            system: self.system,
            m: self.m,
            cardinality: self.cardinality,
            base: &self.base,
            dynkin: &self.dynkin,
            components: self.dynkin.components(),
            levi: self.levi,
            delta: self.delta.as_deref(),
            x_dagger: node.map(|n| n.x_dagger),
            x_zero: node.map(|n| n.x_zero.to_string_or_empty_set()),
            node: node.map(|n| n.to_string()),
            d: self.d(),
            evaluations: self.dm.as_ref().map(|r| Evaluations {
                product: r.d_product.to_string(),
                heights: r.d_heights.to_string(),
                oracle: r.d_oracle,
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.doc()).expect("plain data serializes")
    }
}

/// Canonical JSON layout of a [`CellReport`].
#[derive(Debug, Serialize)]
pub struct ClassificationDoc<'a> {
    pub system: SystemLabel,
    pub m: usize,
    pub cardinality: usize,
    pub base: &'a [Vec<i64>],
    #[serde(rename = "type")]
    pub dynkin: &'a DynkinType,
    pub components: &'a [ComponentLabel],
    pub levi: bool,
    pub delta: Option<&'a [i64]>,
    pub x_dagger: Option<ComponentLabel>,
    pub x_zero: Option<String>,
    pub node: Option<String>,
    pub d: Option<u64>,
    pub evaluations: Option<Evaluations>,
}

#[derive(Debug, Serialize)]
pub struct Evaluations {
    pub product: String,
    pub heights: String,
    pub oracle: u64,
}

/// Which systems a sweep or verification covers. Bounds are on the usual
/// rank, so `D` with `max_rank = 7` ends at `D_7`.
#[derive(Debug, Clone, Copy, Default)]
pub struct GridSpec {
    pub family: Option<Family>,
    pub min_rank: Option<usize>,
    pub max_rank: Option<usize>,
}

const FAMILY_RANKS: &[(Family, usize, usize)] = &[
    (Family::A, 1, 30),
    (Family::B, 2, 30),
    (Family::C, 2, 30),
    (Family::D, 4, 31),
    (Family::E, 6, 8),
    (Family::F, 4, 4),
    (Family::G, 2, 2),
];

impl GridSpec {
    pub fn family(family: Family) -> Self {
        GridSpec {
            family: Some(family),
            ..GridSpec::default()
        }
    }

    pub fn systems(&self) -> Vec<SystemLabel> {
        let lo = self.min_rank.unwrap_or(0);
        let hi = self.max_rank.unwrap_or(usize::MAX);
        FAMILY_RANKS
            .iter()
            .filter(|(f, _, _)| self.family.is_none_or(|g| g == *f))
            .flat_map(|&(f, min, max)| (min.max(lo)..=max.min(hi)).map(move |r| (f, r)))
            .map(|(f, r)| SystemLabel::from_rank(f, r).expect("grid ranks are valid"))
            .collect()
    }

    /// All `(system, m)` with `2 <= m < h`, in grid order.
    pub fn cells(&self) -> Vec<(SystemLabel, usize)> {
        self.systems()
            .into_iter()
            .flat_map(|s| (2..crate::predictor::coxeter_number(s)).map(move |m| (s, m)))
            .collect()
    }
}

/// Builds the systems of `spec` and computes every cell, in grid order.
pub fn sweep(spec: &GridSpec) -> Result<Vec<CellReport>> {
    let systems = build_all(&spec.systems())?;
    let cells = cell_indices(&systems);
    cells
        .par_iter()
        .map(|&(i, m)| CellReport::compute(&systems[i], m))
        .collect()
}

fn build_all(labels: &[SystemLabel]) -> Result<Vec<RootSystem>> {
    labels.par_iter().map(|&l| RootSystem::build(l)).collect()
}

fn cell_indices(systems: &[RootSystem]) -> Vec<(usize, usize)> {
    systems
        .iter()
        .enumerate()
        .flat_map(|(i, rs)| (2..rs.coxeter_number() as usize).map(move |m| (i, m)))
        .collect()
}

/// Outcome of comparing one computed cell with its prediction.
#[derive(Debug, Clone, Serialize)]
pub struct CellCheck {
    pub system: SystemLabel,
    pub m: usize,
    pub source: Source,
    #[serde(rename = "type")]
    pub dynkin: DynkinType,
    pub d: u64,
    pub levi: bool,
    /// `2^floor((n - k)/m)` for B/D cells with an extra root.
    pub d_alt: Option<u64>,
    pub mismatches: Vec<String>,
}

impl CellCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn text(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} {} m={}: type {}, levi={}, d={} [{}]",
            self.system,
            self.m,
            self.dynkin,
            self.levi,
            self.d,
            self.source.tag()
        );
        for msg in &self.mismatches {
            write!(s, "\n  {msg}").unwrap();
        }
        s
    }
}

fn compare(cell: &CellReport, pred: &Prediction, partial_base: bool) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |what: &str, computed: String, predicted: String| {
        if computed != predicted {
            out.push(format!("{what}: computed {computed}, predicted {predicted}"));
        }
    };
    let d = cell.d().unwrap_or(1);
    check("type", cell.dynkin.to_string(), pred.dynkin.to_string());
    check("levi", cell.levi.to_string(), pred.levi.to_string());
    check("d", d.to_string(), pred.d.to_string());
    let show = |c: Option<ComponentLabel>| c.map_or("none".to_string(), |c| c.to_string());
    check("X†", show(cell.x_dagger()), show(pred.x_dagger));
    if let Some(x0) = cell.x_zero() {
        check(
            "X0",
            x0.to_string_or_empty_set(),
            pred.x_zero_type().to_string_or_empty_set(),
        );
    }
    check(
        "|R+(m)|",
        cell.cardinality.to_string(),
        pred.dynkin.positive_root_count().to_string(),
    );
    check(
        "Γ(m) = R_m",
        cell.delta.is_none().to_string(),
        pred.levi.to_string(),
    );
    check("R_m is a partial base", partial_base.to_string(), "true".into());
    if let Some(alt) = pred.d_alt {
        check("d = 2^floor((n-k)/m)", d.to_string(), alt.to_string());
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub cells: Vec<CellCheck>,
    pub summary: VerifySummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub cells: usize,
    pub pass: usize,
    pub fail: usize,
    pub failing: Vec<String>,
    /// Cells predicted from the root list rather than a stated formula.
    pub derived_table_cells: usize,
    pub bd_extra_root: BdReconciliation,
}

/// The B/D cells with an extra root, where `d` is given both by the table
/// (`2^q` or `2^{q-1}` with `n = qm + t`) and by `2^floor((n - k)/m)`.
#[derive(Debug, Clone, Serialize)]
pub struct BdReconciliation {
    pub cells: usize,
    pub agree: usize,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn summary_text(&self) -> String {
        let s = &self.summary;
        let mut out = format!("{} cells, {} PASS", s.cells, s.pass);
        if s.fail > 0 {
            write!(out, ", {} FAIL", s.fail).unwrap();
        }
        if s.bd_extra_root.cells > 0 {
            write!(
                out,
                "\nB/D cells with an extra root: {}, d = 2^floor((n-k)/m) agrees on {}",
                s.bd_extra_root.cells, s.bd_extra_root.agree
            )
            .unwrap();
        }
        if s.derived_table_cells > 0 {
            write!(out, "\ncells read off the root list: {}", s.derived_table_cells).unwrap();
        }
        if s.fail > 0 {
            write!(out, "\nfailing cells: {}", s.failing.join(", ")).unwrap();
        }
        out
    }

    pub fn text(&self) -> String {
        let mut out: Vec<String> = self.cells.iter().map(CellCheck::text).collect();
        out.push(self.summary_text());
        out.join("\n")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Options for [`verify`]. `corrupt` perturbs the prediction of one cell,
/// so the failure path can be exercised.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub corrupt: Option<(SystemLabel, usize)>,
}

/// Computes every cell of `spec` and compares it with [`predict`].
/// Mismatches are reported per cell; internal invariant failures abort.
pub fn verify(spec: &GridSpec, opts: VerifyOptions) -> Result<VerifyReport> {
    let systems = build_all(&spec.systems())?;
    let cells: Vec<CellCheck> = cell_indices(&systems)
        .par_iter()
        .map(|&(i, m)| {
            let rs = &systems[i];
            let cell = CellReport::compute(rs, m)?;
            let mut pred = predict(rs.label(), m)?;
            if opts.corrupt == Some((rs.label(), m)) {
                pred.d += 1;
            }
            let partial_base = rm_is_partial_base(rs, m as i64)?;
            Ok(CellCheck {
                system: cell.system,
                m,
                source: pred.source,
                d: cell.d().unwrap_or(1),
                levi: cell.levi,
                d_alt: pred.d_alt,
                mismatches: compare(&cell, &pred, partial_base),
                dynkin: cell.dynkin,
            })
        })
        .collect::<Result<_>>()?;

    let pass = cells.iter().filter(|c| c.passed()).count();
    let bd: Vec<&CellCheck> = cells.iter().filter(|c| c.d_alt.is_some()).collect();
    let summary = VerifySummary {
        cells: cells.len(),
        pass,
        fail: cells.len() - pass,
        failing: cells
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{} m={}", c.system, c.m))
            .collect(),
        derived_table_cells: cells.iter().filter(|c| c.source.is_derived()).count(),
        bd_extra_root: BdReconciliation {
            cells: bd.len(),
            agree: bd.iter().filter(|c| c.d_alt == Some(c.d)).count(),
        },
    };
    Ok(VerifyReport { cells, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_lines() {
        let e7 = RootSystem::build("E7".parse().unwrap()).unwrap();
        let cell = CellReport::compute(&e7, 2).unwrap();
        assert_eq!(
            cell.text().lines().next().unwrap(),
            "E7 m=2: |R+|=28, type A7†, X0=A6, levi=false, d=8"
        );
        let a2 = RootSystem::build("A2".parse().unwrap()).unwrap();
        assert_eq!(
            CellReport::compute(&a2, 2).unwrap().text(),
            "A2 m=2: |R+|=1, type A1, levi=true, d=1"
        );
        let empty = CellReport::compute(&a2, 5).unwrap();
        assert_eq!(empty.text(), "A2 m=5: |R+|=0, type empty, levi=true");
        assert!(empty.to_json().contains("\"d\": null"));
    }

    #[test]
    fn grid_counts() {
        let g = GridSpec::family(Family::G);
        assert_eq!(g.cells().len(), 4);
        let d = GridSpec {
            family: Some(Family::D),
            min_rank: Some(4),
            max_rank: Some(5),
        };
        assert_eq!(d.systems().iter().map(|s| s.to_string()).collect::<Vec<_>>(), ["D4", "D5"]);
        // C_n has h = 2n, so 2n - 2 cells
        let c = GridSpec {
            family: Some(Family::C),
            min_rank: None,
            max_rank: Some(20),
        };
        assert_eq!(c.cells().len(), (2..=20).map(|n| 2 * n - 2).sum::<usize>());
    }

    #[test]
    fn small_verify() {
        let spec = GridSpec {
            family: Some(Family::B),
            min_rank: None,
            max_rank: Some(6),
        };
        let report = verify(&spec, VerifyOptions::default()).unwrap();
        assert!(report.all_passed(), "{}", report.text());
        let b5: SystemLabel = "B5".parse().unwrap();
        let bad = verify(&spec, VerifyOptions { corrupt: Some((b5, 3)) }).unwrap();
        assert_eq!(bad.summary.failing, ["B5 m=3"]);
    }
}
