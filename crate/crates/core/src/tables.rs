//! Classification tables regenerated from computed data.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::report::CellReport;
use crate::system::{RootSystem, SystemLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    /// Every `(system, m)` with an extra simple root.
    Thm1,
    /// `Γ(m)`, `X0` and `d` for all `m` in `E6`, `E7`, `E8`.
    EProp,
    /// `|R^+(m)|` for `E6`, `E7`, `E8`.
    Cardinalities,
    /// Number of positive roots of each height in `E6`, `E7`, `E8`.
    Heights,
    /// Positive roots of `F4` by height and length.
    F4,
}

impl TableId {
    pub const ALL: [TableId; 5] = [
        TableId::Thm1,
        TableId::EProp,
        TableId::Cardinalities,
        TableId::Heights,
        TableId::F4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::Thm1 => "thm1",
            TableId::EProp => "e-prop",
            TableId::Cardinalities => "cardinalities",
            TableId::Heights => "heights",
            TableId::F4 => "f4",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown table id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Text,
    Json,
}

pub fn render(id: TableId, format: TableFormat) -> Result<String> {
    let table = match id {
        TableId::Thm1 => thm1()?,
        TableId::EProp => e_prop()?,
        TableId::Cardinalities => cardinalities()?,
        TableId::Heights => heights()?,
        TableId::F4 => f4()?,
    };
    Ok(match format {
        TableFormat::Text => table.text(),
        TableFormat::Json => serde_json::to_string_pretty(&table.json).expect("plain data serializes"),
    })
}

/// Text blocks (title, header, rows) plus the JSON form of the same data.
struct Table {
    blocks: Vec<Block>,
    json: Value,
}

struct Block {
    title: Option<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Block {
    fn text(&self) -> String {
        let ncols = self.header.len();
        let width = |j: usize| {
            std::iter::once(&self.header)
                .chain(&self.rows)
                .map(|r| r[j].chars().count())
                .max()
                .unwrap_or(0)
        };
        let widths: Vec<usize> = (0..ncols).map(width).collect();
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (j, c) in cells.iter().enumerate() {
                s.push_str(c);
                if j + 1 < ncols {
                    let pad = widths[j] - c.chars().count() + 2;
                    s.extend(std::iter::repeat_n(' ', pad));
                }
            }
            s.trim_end().to_string()
        };
        let mut out = Vec::new();
        if let Some(t) = &self.title {
            out.push(t.clone());
        }
        out.push(line(&self.header));
        out.extend(self.rows.iter().map(|r| line(r)));
        out.join("\n")
    }
}

impl Table {
    fn text(&self) -> String {
        let blocks: Vec<String> = self.blocks.iter().map(Block::text).collect();
        blocks.join("\n\n") + "\n"
    }
}

fn header(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|c| c.to_string()).collect()
}

fn build(s: &str) -> Result<RootSystem> {
    RootSystem::build(s.parse::<SystemLabel>()?)
}

const EXCEPTIONAL: [&str; 3] = ["E6", "E7", "E8"];

fn exceptional_systems() -> Result<Vec<RootSystem>> {
    EXCEPTIONAL.iter().map(|s| build(s)).collect()
}

fn cells_with_extra_root(rs: &RootSystem) -> Result<Vec<CellReport>> {
    let mut out = Vec::new();
    for m in 2..rs.coxeter_number() as usize {
        let cell = CellReport::compute(rs, m)?;
        if cell.delta.is_some() {
            out.push(cell);
        }
    }
    Ok(out)
}

fn coeffs(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

#[derive(Serialize)]
struct ExtraRootRow {
    system: SystemLabel,
    m: usize,
    delta: Vec<i64>,
    x_dagger: String,
    x_zero: String,
    d: u64,
}

fn thm1() -> Result<Table> {
    let mut systems: Vec<RootSystem> = exceptional_systems()?;
    systems.push(build("F4")?);
    systems.push(build("G2")?);
    for n in 3..=8 {
        systems.push(RootSystem::build(SystemLabel::b(n)?)?);
    }
    for n in 3..=8 {
        systems.push(RootSystem::build(SystemLabel::d(n)?)?);
    }
    let mut rows = Vec::new();
    for rs in &systems {
        for cell in cells_with_extra_root(rs)? {
            let mut x_dagger = cell.x_dagger().expect("extra root has a component");
            x_dagger.dagger = false;
            rows.push(ExtraRootRow {
                system: cell.system,
                m: cell.m,
                delta: cell.delta.clone().unwrap_or_default(),
                x_dagger: x_dagger.to_string(),
                x_zero: cell.x_zero().map(|t| t.to_string_or_empty_set()).unwrap_or_default(),
                d: cell.d().unwrap_or(1),
            });
        }
    }
    let block = Block {
        title: None,
        header: header(&["system", "m", "delta", "X†", "X0", "d"]),
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.system.to_string(),
                    r.m.to_string(),
                    coeffs(&r.delta),
                    r.x_dagger.clone(),
                    r.x_zero.clone(),
                    r.d.to_string(),
                ]
            })
            .collect(),
    };
    Ok(Table {
        blocks: vec![block],
        json: json!(rows),
    })
}

fn e_prop() -> Result<Table> {
    let mut blocks = Vec::new();
    let mut json_rows = Vec::new();
    for rs in exceptional_systems()? {
        let mut rows = Vec::new();
        for m in 2..rs.coxeter_number() as usize {
            let cell = CellReport::compute(&rs, m)?;
            let x0 = cell.x_zero().map(|t| t.to_string_or_empty_set());
            rows.push(vec![
                m.to_string(),
                cell.dynkin.to_string(),
                x0.clone().unwrap_or_default(),
                cell.d().unwrap_or(1).to_string(),
                cell.levi.to_string(),
            ]);
            json_rows.push(json!({
                "system": cell.system,
                "m": m,
                "type": cell.dynkin,
                "x_zero": x0,
                "d": cell.d(),
                "levi": cell.levi,
            }));
        }
        blocks.push(Block {
            title: Some(format!("{}, h={}", rs.label(), rs.coxeter_number())),
            header: header(&["m", "Γ(m)", "X0", "d", "levi"]),
            rows,
        });
    }
    Ok(Table {
        blocks,
        json: json!(json_rows),
    })
}

/// `|R^+(m)|` for `m = 2..=14`, shown while `2m <= h`.
fn cardinalities() -> Result<Table> {
    let systems = exceptional_systems()?;
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for m in 2..=14usize {
        let mut row = vec![m.to_string()];
        let mut obj = serde_json::Map::new();
        obj.insert("m".into(), json!(m));
        for rs in &systems {
            let value = (2 * m as i64 <= rs.coxeter_number()).then(|| {
                rs.positive_roots()
                    .iter()
                    .filter(|b| b.height() % m as i64 == 0)
                    .count()
            });
            row.push(value.map_or("-".to_string(), |v| v.to_string()));
            obj.insert(rs.label().to_string(), json!(value));
        }
        rows.push(row);
        json_rows.push(Value::Object(obj));
    }
    Ok(Table {
        blocks: vec![Block {
            title: None,
            header: header(&["m", "E6", "E7", "E8"]),
            rows,
        }],
        json: json!(json_rows),
    })
}

/// Maximal runs of heights `k >= 2` with the same number of positive roots.
fn height_runs(rs: &RootSystem) -> Vec<(usize, usize, usize)> {
    let mut runs: Vec<(usize, usize, usize)> = Vec::new();
    for k in 2..rs.coxeter_number() as usize {
        let c = rs.pi(k);
        match runs.last_mut() {
            Some((_, hi, count)) if *count == c => *hi = k,
            _ => runs.push((k, k, c)),
        }
    }
    runs
}

fn heights() -> Result<Table> {
    let mut blocks = Vec::new();
    let mut json_obj = serde_json::Map::new();
    for rs in exceptional_systems()? {
        let runs = height_runs(&rs);
        let range = |lo: usize, hi: usize| {
            if lo == hi {
                lo.to_string()
            } else {
                format!("{lo}-{hi}")
            }
        };
        blocks.push(Block {
            title: Some(rs.label().to_string()),
            header: header(&["height", "count"]),
            rows: runs
                .iter()
                .map(|&(lo, hi, c)| vec![range(lo, hi), c.to_string()])
                .collect(),
        });
        json_obj.insert(
            rs.label().to_string(),
            json!(runs
                .iter()
                .map(|&(lo, hi, c)| json!({"from": lo, "to": hi, "count": c}))
                .collect::<Vec<_>>()),
        );
    }
    Ok(Table {
        blocks,
        json: Value::Object(json_obj),
    })
}

/// A root of `F4` written over the simple roots `a, b` (long), `c, d`
/// (short), e.g. `a+2b+3c+d`.
fn f4_name(coeffs: &[i64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(["a", "b", "c", "d"])
        .filter(|(c, _)| **c != 0)
        .map(|(&c, x)| if c == 1 { x.to_string() } else { format!("{c}{x}") })
        .collect();
    terms.join("+")
}

fn f4() -> Result<Table> {
    let rs = build("F4")?;
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for k in 2..rs.coxeter_number() {
        let mut at: Vec<_> = rs.positive_roots().iter().filter(|b| b.height() == k).collect();
        at.sort_by(|x, y| y.coeffs().cmp(x.coeffs()));
        let names = |long: bool| -> Vec<String> {
            at.iter()
                .filter(|b| b.is_long() == long)
                .map(|b| f4_name(b.coeffs()))
                .collect()
        };
        let (long, short) = (names(true), names(false));
        rows.push(vec![k.to_string(), long.join("  "), short.join("  ")]);
        json_rows.push(json!({"height": k, "long": long, "short": short}));
    }
    Ok(Table {
        blocks: vec![Block {
            title: None,
            header: header(&["height", "long roots", "short roots"]),
            rows,
        }],
        json: json!(json_rows),
    })
}
