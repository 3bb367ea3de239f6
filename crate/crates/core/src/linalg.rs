//! Small dense exact linear algebra over the rationals.
//!
//! Everything here works on a handful of vectors of length at most a few dozen, so
//! the implementation is plain Gauss-Jordan elimination on `Ratio<i128>`.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i128>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

/// Reduced row echelon form of a family of generators, remembering how each
/// reduced row is expressed in terms of the original generators.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    ngens: usize,
    rows: Vec<Vec<Rational>>,
    transform: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn from_integer<V: AsRef<[i64]>>(gens: &[V], ncols: usize) -> Self {
        let rows = gens
            .iter()
            .map(|g| {
                let g = g.as_ref();
                assert_eq!(g.len(), ncols, "generator length mismatch");
                g.iter().map(|&x| rat(x)).collect()
            })
            .collect();
        Self::from_rational(rows, ncols)
    }

    pub fn from_rational(gens: Vec<Vec<Rational>>, ncols: usize) -> Self {
        let ngens = gens.len();
        let mut rows = gens;
        let mut transform: Vec<Vec<Rational>> = (0..ngens)
            .map(|i| {
                let mut e = vec![Rational::zero(); ngens];
                e[i] = Rational::one();
                e
            })
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..ncols {
            let Some(p) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(top, p);
            transform.swap(top, p);
            let inv = rows[top][col].recip();
            scale(&mut rows[top], inv);
            scale(&mut transform[top], inv);
            for r in 0..rows.len() {
                if r == top || rows[r][col].is_zero() {
                    continue;
                }
                let f = rows[r][col];
                let (pr, pt) = (rows[top].clone(), transform[top].clone());
                axpy(&mut rows[r], -f, &pr);
                axpy(&mut transform[r], -f, &pt);
            }
            pivots.push(col);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        rows.truncate(top);
        transform.truncate(top);
        Echelon {
            ncols,
            ngens,
            rows,
            transform,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_independent(&self) -> bool {
        self.rank() == self.ngens
    }

    pub fn contains_integer(&self, v: &[i64]) -> bool {
        let v: Vec<Rational> = v.iter().map(|&x| rat(x)).collect();
        self.contains(&v)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut rest = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = rest[p];
            if !f.is_zero() {
                axpy(&mut rest, -f, row);
            }
        }
        rest.iter().all(Zero::is_zero)
    }

    /// Coefficients `c` with `v = sum_j c[j] * gens[j]`, if `v` lies in the span.
    /// Unique when the generators are independent.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        let mut c = vec![Rational::zero(); self.ngens];
        for (t, &p) in self.transform.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                axpy(&mut c, v[p], t);
            }
        }
        Some(c)
    }

    pub fn coordinates_integer(&self, v: &[i64]) -> Option<Vec<Rational>> {
        let v: Vec<Rational> = v.iter().map(|&x| rat(x)).collect();
        self.coordinates(&v)
    }

    /// Integer basis of the linear forms vanishing on every generator.
    pub fn annihilator(&self) -> Vec<Vec<i128>> {
        let free = (0..self.ncols).filter(|c| !self.pivots.contains(c));
        free.map(|f| {
            let mut l = vec![Rational::zero(); self.ncols];
            l[f] = Rational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                l[p] = -row[f];
            }
            let den = l.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
            l.iter()
                .map(|x| (x * Rational::from_integer(den)).to_integer())
                .collect()
        })
        .collect()
    }
}

fn scale(v: &mut [Rational], f: Rational) {
    for x in v.iter_mut() {
        *x *= f;
    }
}

fn axpy(y: &mut [Rational], a: Rational, x: &[Rational]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

/// True when every entry is a nonnegative integer.
pub fn is_nonnegative_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer() && !x.is_negative())
}
