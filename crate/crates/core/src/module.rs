//! Free-module elements, twisting functions and polynomial matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Degree, Poly, Ring};

/// Degree shift per coordinate of a free module, e.g. `a` in `S^p[-a]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistFunction(Vec<i64>);

impl TwistFunction {
    pub fn new(values: Vec<i64>) -> Result<TwistFunction> {
        if values.iter().any(|&v| v < 0) {
            return Err(Error::Domain(format!(
                "twist values must be non-negative: {values:?}"
            )));
        }
        Ok(TwistFunction(values))
    }

    pub fn zero(len: usize) -> TwistFunction {
        TwistFunction(vec![0; len])
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn max(&self) -> Option<i64> {
        self.0.iter().copied().max()
    }

    pub fn sorted(&self) -> TwistFunction {
        let mut v = self.0.clone();
        v.sort_unstable();
        TwistFunction(v)
    }
}

impl fmt::Display for TwistFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// An element of `S^p` or `T^p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModElem {
    ring: Ring,
    components: Vec<Poly>,
}

impl ModElem {
    pub fn new(ring: Ring, components: Vec<Poly>) -> Result<ModElem> {
        for c in &components {
            ring.check_same(&c.ring())?;
        }
        Ok(ModElem { ring, components })
    }

    pub fn zero(ring: Ring, rank: usize) -> ModElem {
        ModElem {
            ring,
            components: vec![Poly::zero(ring); rank],
        }
    }

    /// The standard basis vector `e_i` scaled by `c`.
    pub fn unit(ring: Ring, rank: usize, i: usize, c: Poly) -> ModElem {
        let mut v = ModElem::zero(ring, rank);
        v.components[i] = c;
        v
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Poly> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &ModElem) -> ModElem {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        ModElem {
            ring: self.ring,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModElem) -> ModElem {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        ModElem {
            ring: self.ring,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale_poly(&self, c: &Poly) -> ModElem {
        ModElem {
            ring: self.ring,
            components: self.components.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Total degree: the maximum component degree.
    pub fn degree(&self) -> Degree {
        self.components
            .iter()
            .map(Poly::total_degree)
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// True when every nonzero component `f_i` is homogeneous of degree
    /// `d - twist(i)` for one common `d`; returns that `d`.
    pub fn homogeneous_degree(&self, twist: &TwistFunction) -> Result<Option<i64>> {
        let mut deg = None;
        for (i, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(Error::Domain(format!("component {i} is not homogeneous")));
            }
            let d = c.total_degree().finite().expect("nonzero") + twist.get(i);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::Domain(format!(
                        "components have twisted degrees {e} and {d}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }
}

/// `deg_a(f) = max_i (a(i) + deg f_i)`, `-inf` for `f = 0`.
pub fn twisted_degree(f: &ModElem, a: &TwistFunction) -> Result<Degree> {
    if f.rank() != a.len() {
        return Err(Error::Structural(format!(
            "element of rank {} with twist of length {}",
            f.rank(),
            a.len()
        )));
    }
    Ok(f.components
        .iter()
        .zip(a.values())
        .map(|(c, &t)| c.total_degree().shift(t))
        .max()
        .unwrap_or(Degree::NegInfinity))
}

/// A dense `rows x cols` matrix of polynomials. Empty shapes are allowed
/// (kernels of injective maps); complexes reject them separately.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring,
            rows,
            cols,
            entries: vec![Poly::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: Ring, size: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(ring, size, size);
        for i in 0..size {
            m.set(i, i, Poly::one(ring));
        }
        m
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Structural(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for e in row {
                ring.check_same(&e.ring())?;
                entries.push(e);
            }
        }
        Ok(PolyMatrix {
            ring,
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given elements, all of rank `rows`.
    pub fn from_columns(ring: Ring, rows: usize, columns: &[ModElem]) -> Result<PolyMatrix> {
        let mut m = PolyMatrix::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.rank() != rows {
                return Err(Error::Structural(format!(
                    "column {j} has rank {}, expected {rows}",
                    col.rank()
                )));
            }
            ring.check_same(&col.ring())?;
            for (i, c) in col.components().iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> ModElem {
        ModElem {
            ring: self.ring,
            components: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn columns(&self) -> Vec<ModElem> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_zero())
    }

    pub fn zero_column(&self) -> Option<usize> {
        (0..self.cols).find(|&j| self.is_zero_column(j))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.ring.check_same(&other.ring)?;
        if self.cols != other.rows {
            return Err(Error::Structural(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &ModElem) -> Result<ModElem> {
        if v.rank() != self.cols {
            return Err(Error::Structural(format!(
                "vector of rank {} against {} columns",
                v.rank(),
                self.cols
            )));
        }
        let comps = (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Poly::zero(self.ring), |acc, k| {
                    let (a, b) = (self.get(i, k), &v.components()[k]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(b))
                    }
                })
            })
            .collect();
        ModElem::new(self.ring, comps)
    }

    /// `deg_a` of every column; errors on a zero column.
    pub fn column_degrees(&self, row_twist: &TwistFunction) -> Result<TwistFunction> {
        let mut out = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            match twisted_degree(&self.column(j), row_twist)? {
                Degree::Finite(d) => out.push(d),
                Degree::NegInfinity => return Err(Error::Domain(format!("zero column {j}"))),
            }
        }
        TwistFunction::new(out)
    }

    /// Applies `f` to every entry, producing a matrix over `ring`.
    pub fn map_entries(
        &self,
        ring: Ring,
        mut f: impl FnMut(usize, usize, &Poly) -> Result<Poly>,
    ) -> Result<PolyMatrix> {
        let mut out = PolyMatrix::zeros(ring, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, f(i, j, self.get(i, j))?);
            }
        }
        Ok(out)
    }

    pub fn remove_row(&mut self, i: usize) {
        let cols = self.cols;
        self.entries.drain(i * cols..(i + 1) * cols);
        self.rows -= 1;
    }

    pub fn remove_column(&mut self, j: usize) {
        let cols = self.cols;
        let mut idx = 0;
        self.entries.retain(|_| {
            let keep = idx % cols != j;
            idx += 1;
            keep
        });
        self.cols -= 1;
    }

    pub fn select_columns(&self, keep: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.ring, self.rows, keep.len());
        for (nj, &j) in keep.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, nj, self.get(i, j).clone());
            }
        }
        out
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_poly;

    fn ring() -> Ring {
        Ring::affine(PrimeField::new(101).unwrap(), 1)
    }

    fn elem(r: Ring, parts: &[&str]) -> ModElem {
        ModElem::new(
            r,
            parts.iter().map(|s| parse_poly(s, &r).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn twisted_degree_examples() {
        let r = ring();
        let a = TwistFunction::new(vec![4, 2]).unwrap();
        assert_eq!(
            twisted_degree(&elem(r, &["1", "D1"]), &a).unwrap(),
            Degree::Finite(4)
        );
        assert_eq!(
            twisted_degree(&ModElem::zero(r, 2), &a).unwrap(),
            Degree::NegInfinity
        );
        let f = elem(r, &["D1^3 + 1", "D1"]);
        assert_eq!(
            twisted_degree(&f, &TwistFunction::zero(2)).unwrap(),
            f.degree()
        );
        assert!(twisted_degree(&f, &TwistFunction::zero(3)).is_err());
    }

    #[test]
    fn twists_must_be_non_negative() {
        assert!(TwistFunction::new(vec![0, -1]).is_err());
    }

    #[test]
    fn row_and_column_removal() {
        let r = ring();
        let mut m = PolyMatrix::from_rows(
            r,
            vec![
                vec![
                    parse_poly("1", &r).unwrap(),
                    parse_poly("2", &r).unwrap(),
                    parse_poly("3", &r).unwrap(),
                ],
                vec![
                    parse_poly("4", &r).unwrap(),
                    parse_poly("5", &r).unwrap(),
                    parse_poly("6", &r).unwrap(),
                ],
            ],
        )
        .unwrap();
        m.remove_column(1);
        m.remove_row(0);
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!(m.get(0, 1).as_constant(), Some(6));
    }
}
