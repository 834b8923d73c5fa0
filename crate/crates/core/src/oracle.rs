//! Brute-force checks by degree-truncated linear algebra over `F_p`.
//!
//! Nothing here touches the Gröbner engine. Code spaces `C_{<=d}` come from
//! Macaulay matrices: the span of all `m * g_j` with `deg(m * g_j) <= cap`,
//! cut down to degree `<= d`. Raising `cap` can only grow that space; it is
//! raised until the dimension holds still for two consecutive increments.

use crate::complexes::{column_degree_table, CodePresentation, PolyComplex};
use crate::error::{Error, Result};
use crate::linalg::{rank, Echelon, SparseRow};
use crate::module::{ModElem, TwistFunction};
use crate::poly::{monomials_of_degree, Monomial, Poly, Ring, RingKind};

const DEG_BITS: u32 = 12;
const DEG_LIMIT: i64 = 1 << DEG_BITS;
const EXP_BITS: u32 = 6;
const MON_SHIFT: u32 = 8;
const DEG_SHIFT: u32 = 44;
/// How far past the starting cap the stabilization loop may go.
const MAX_CAP_GROWTH: i64 = 12;

/// A subspace of `S^p[-a]_{<=d}` given by a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSpace {
    pub degree: i64,
    pub twist: TwistFunction,
    pub basis: Vec<ModElem>,
    pub dimension: usize,
    /// Final Macaulay degree cap.
    pub cap: i64,
    /// False when the cap limit was hit before the dimension settled.
    pub stabilized: bool,
}

/// Coordinates `(monomial, position)` keyed so that higher total degree sorts
/// first; the rows supported in degree `<= d` then form a trailing block.
#[derive(Clone, Copy, Debug)]
struct Coords {
    ring: Ring,
}

impl Coords {
    fn new(ring: Ring, rank: usize) -> Result<Coords> {
        if ring.kind != RingKind::Affine {
            return Err(Error::Structural("truncated spaces live in S^p".into()));
        }
        if ring.n * EXP_BITS as usize > (DEG_SHIFT - MON_SHIFT) as usize || rank > 1 << MON_SHIFT {
            return Err(Error::Unsupported(format!(
                "oracle supports n <= 6 and rank <= 256, got n = {}, rank = {rank}",
                ring.n
            )));
        }
        Ok(Coords { ring })
    }

    fn key(&self, mon: &Monomial, pos: usize) -> Result<usize> {
        let deg = mon.degree();
        if deg >= DEG_LIMIT || mon.exponents().iter().any(|&e| e >= 1 << EXP_BITS) {
            return Err(Error::Unsupported(format!(
                "monomial degree {deg} too large for the oracle"
            )));
        }
        let code = mon
            .exponents()
            .iter()
            .rev()
            .fold(0usize, |acc, &e| (acc << EXP_BITS) | e as usize);
        Ok((((DEG_LIMIT - 1 - deg) as usize) << DEG_SHIFT) | (code << MON_SHIFT) | pos)
    }

    /// Smallest key of degree `<= d`.
    fn boundary(d: i64) -> usize {
        let d = d.clamp(-1, DEG_LIMIT - 1);
        ((DEG_LIMIT - 1 - d) as usize) << DEG_SHIFT
    }

    fn decode(&self, key: usize) -> (Monomial, usize) {
        let pos = key & ((1 << MON_SHIFT) - 1);
        let mut code = (key >> MON_SHIFT) & ((1 << (DEG_SHIFT - MON_SHIFT)) - 1);
        let mut exps = vec![0u32; self.ring.nvars()];
        for e in exps.iter_mut() {
            *e = (code & ((1 << EXP_BITS) - 1)) as u32;
            code >>= EXP_BITS;
        }
        (Monomial::from_exponents(&exps), pos)
    }

    fn row(&self, f: &ModElem) -> Result<SparseRow> {
        let mut row = Vec::new();
        for (pos, c) in f.components().iter().enumerate() {
            for t in c.terms() {
                row.push((self.key(&t.mon, pos)?, t.coef));
            }
        }
        row.sort_unstable_by_key(|&(k, _)| k);
        Ok(row)
    }

    fn elem(&self, row: &SparseRow, rank: usize) -> ModElem {
        let mut comps = vec![Vec::new(); rank];
        for &(k, v) in row {
            let (mon, pos) = self.decode(k);
            comps[pos].push((v, mon));
        }
        let comps = comps
            .into_iter()
            .map(|t| Poly::from_terms(self.ring, t))
            .collect();
        ModElem::new(self.ring, comps).expect("same ring")
    }
}

fn monomials_up_to(ring: &Ring, d: i64) -> Vec<Monomial> {
    (0..=d.max(-1))
        .flat_map(|k| monomials_of_degree(ring, k as u32))
        .collect()
}

/// Incrementally grown Macaulay matrix of a code.
struct Macaulay {
    coords: Coords,
    rank: usize,
    gens: Vec<(i64, ModElem)>,
    echelon: Echelon,
    cap: i64,
}

impl Macaulay {
    fn new(code: &CodePresentation) -> Result<Macaulay> {
        let ring = code.ring();
        let gens = code
            .nonzero_columns()
            .into_iter()
            .map(|g| (g.degree().finite().expect("nonzero"), g))
            .collect();
        Ok(Macaulay {
            coords: Coords::new(ring, code.length())?,
            rank: code.length(),
            gens,
            echelon: Echelon::new(ring.field),
            cap: -1,
        })
    }

    fn max_degree(&self) -> i64 {
        self.gens.iter().map(|(d, _)| *d).max().unwrap_or(0)
    }

    fn raise_to(&mut self, cap: i64) -> Result<()> {
        let ring = self.coords.ring;
        while self.cap < cap {
            self.cap += 1;
            for (dg, g) in &self.gens {
                let k = self.cap - dg;
                if k < 0 {
                    continue;
                }
                for m in monomials_of_degree(&ring, k as u32) {
                    let shifted = ModElem::new(
                        ring,
                        g.components().iter().map(|c| c.mul_term(1, &m)).collect(),
                    )?;
                    self.echelon.insert(self.coords.row(&shifted)?);
                }
            }
        }
        Ok(())
    }

    fn dim(&self, d: i64) -> usize {
        let b = Coords::boundary(d);
        self.echelon.pivots().filter(|&c| c >= b).count()
    }

    /// Raises the cap from `start` until `dim(d)` is unchanged over two
    /// consecutive increments. Returns whether that happened in time.
    fn settle(&mut self, d: i64, start: i64) -> Result<bool> {
        self.raise_to(start)?;
        let mut history = vec![self.dim(d)];
        while self.cap < start + MAX_CAP_GROWTH {
            self.raise_to(self.cap + 1)?;
            history.push(self.dim(d));
            if history.len() >= 3
                && history[history.len() - 3..]
                    .iter()
                    .all(|&x| x == history[history.len() - 1])
            {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn space(&self, d: i64, stabilized: bool) -> TruncatedSpace {
        let rows = self.echelon.reduced_rows_from(Coords::boundary(d));
        TruncatedSpace {
            degree: d,
            twist: TwistFunction::zero(self.rank),
            basis: rows
                .iter()
                .map(|r| self.coords.elem(r, self.rank))
                .collect(),
            dimension: rows.len(),
            cap: self.cap,
            stabilized,
        }
    }
}

/// Default starting cap: `d + 2 * (max generator degree)`.
pub fn default_cap(code: &CodePresentation, d: i64) -> i64 {
    let maxdeg = code
        .nonzero_columns()
        .iter()
        .filter_map(|g| g.degree().finite())
        .max()
        .unwrap_or(0);
    d + 2 * maxdeg
}

/// `C_{<=d}` from the Macaulay matrix, starting at `cap` (at least `d`).
pub fn truncated_code_space(code: &CodePresentation, d: i64, cap: i64) -> Result<TruncatedSpace> {
    let mut mac = Macaulay::new(code)?;
    let stabilized = mac.settle(d, cap.max(d))?;
    Ok(mac.space(d, stabilized))
}

/// `dim C_{<=d}`.
pub fn hilbert_oracle(code: &CodePresentation, d: i64) -> Result<u64> {
    Ok(truncated_code_space(code, d, default_cap(code, d))?.dimension as u64)
}

/// `dim C_{<=d}` for `0 <= d <= max_d` from one Macaulay matrix, plus whether
/// every value settled.
pub fn hilbert_oracle_range(code: &CodePresentation, max_d: i64) -> Result<(Vec<u64>, bool)> {
    let mut mac = Macaulay::new(code)?;
    let start = max_d + 2 * mac.max_degree();
    let mut all_stable = true;
    let mut out = Vec::new();
    for d in 0..=max_d {
        all_stable &= mac.settle(d, start.max(mac.cap))?;
        out.push(mac.dim(d) as u64);
    }
    Ok((out, all_stable))
}

/// Exactness of `0 -> S^{p_l}[-a_l]_{<=d} -> ... -> S^{p_1}[-a_1]_{<=d} -> C_{<=d} -> 0`
/// with `C = Im G_1`, by ranks of the truncated maps.
pub fn truncated_exactness(g: &PolyComplex, d: i64) -> Result<bool> {
    let ring = g.ring();
    let table = column_degree_table(g)?;
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for (k, m) in g.matrices().iter().enumerate() {
        let coords = Coords::new(ring, m.rows())?;
        let twist = &table.levels()[k];
        let mut rows = Vec::new();
        for j in 0..m.cols() {
            let col = m.column(j);
            for mon in monomials_up_to(&ring, d - twist.get(j)) {
                let shifted = ModElem::new(
                    ring,
                    col.components()
                        .iter()
                        .map(|c| c.mul_term(1, &mon))
                        .collect(),
                )?;
                rows.push(coords.row(&shifted)?);
            }
        }
        dims.push(rows.len());
        ranks.push(rank(ring.field, rows));
    }
    let l = g.len();
    if ranks[l - 1] != dims[l - 1] {
        return Ok(false);
    }
    for i in 0..l - 1 {
        if dims[i] - ranks[i] != ranks[i + 1] {
            return Ok(false);
        }
    }
    let image = CodePresentation::new(g.matrices()[0].clone())?;
    Ok(hilbert_oracle(&image, d)? == ranks[0] as u64)
}

/// Rebuilds `C_{<=d}` for `m < d <= d_max` from `C_{<=m}` via
/// `C_{<=d} = C_{<=d-1} + D_1 C_{<=d-1} + ... + D_n C_{<=d-1}` and compares
/// each step with the Macaulay space.
pub fn memory_recovery_check(code: &CodePresentation, m: i64, d_max: i64) -> Result<bool> {
    let ring = code.ring();
    let mut mac = Macaulay::new(code)?;
    let coords = mac.coords;
    mac.settle(d_max, default_cap(code, d_max))?;
    let mut current: Vec<SparseRow> = if m < 0 {
        Vec::new()
    } else {
        mac.echelon.reduced_rows_from(Coords::boundary(m))
    };
    for d in (m + 1).max(0)..=d_max {
        let mut e = Echelon::new(ring.field);
        for row in &current {
            let f = coords.elem(row, mac.rank);
            e.insert(row.clone());
            for k in 1..=ring.n {
                let v = Poly::var(ring, k)?;
                e.insert(coords.row(&f.scale_poly(&v))?);
            }
        }
        let candidate = e.reduced_rows_from(0);
        if candidate != mac.echelon.reduced_rows_from(Coords::boundary(d)) {
            return Ok(false);
        }
        current = candidate;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::validate_complex;
    use crate::field::PrimeField;
    use crate::module::PolyMatrix;
    use crate::parse::parse_poly;
    use crate::poly::count_monomials_up_to;

    fn s(p: u64, n: usize) -> Ring {
        Ring::affine(PrimeField::new(p).unwrap(), n)
    }

    fn matrix(r: Ring, rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            r,
            rows.iter()
                .map(|row| row.iter().map(|e| parse_poly(e, &r).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn code(r: Ring, rows: &[&[&str]]) -> CodePresentation {
        CodePresentation::new(matrix(r, rows)).unwrap()
    }

    #[test]
    fn ideal_slices() {
        let c = code(s(2, 2), &[&["D1", "D2"]]);
        let one = truncated_code_space(&c, 1, 3).unwrap();
        assert_eq!(one.dimension, 2);
        assert!(one.stabilized);
        assert_eq!(truncated_code_space(&c, 0, 2).unwrap().dimension, 0);
        let values: Vec<u64> = (0..=4).map(|d| hilbert_oracle(&c, d).unwrap()).collect();
        assert_eq!(values, vec![0, 2, 5, 9, 14]);
        assert_eq!(hilbert_oracle_range(&c, 4).unwrap(), (values, true));
    }

    #[test]
    fn full_space_and_decoding() {
        let r = s(3, 3);
        let c = CodePresentation::new(PolyMatrix::identity(r, 1)).unwrap();
        for d in 0..4 {
            assert_eq!(hilbert_oracle(&c, d).unwrap(), count_monomials_up_to(3, d));
        }
        let coords = Coords::new(r, 2).unwrap();
        let f = ModElem::new(
            r,
            vec![
                parse_poly("D1*D3^2 + 2", &r).unwrap(),
                parse_poly("D2", &r).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(coords.elem(&coords.row(&f).unwrap(), 2), f);
    }

    #[test]
    fn hidden_low_degree_codeword() {
        // (D+1, D) - (D, D) = (1, 0) has degree 0.
        let r = s(2, 1);
        let c = code(r, &[&["D1 + 1", "D1"], &["D1", "D1"]]);
        let zero = truncated_code_space(&c, 0, 2).unwrap();
        assert_eq!(zero.dimension, 1);
        assert_eq!(
            zero.basis[0],
            ModElem::new(r, vec![Poly::one(r), Poly::zero(r)]).unwrap()
        );
        let g = validate_complex(vec![c.generators().clone()]).unwrap();
        assert!(!truncated_exactness(&g, 1).unwrap());
    }

    #[test]
    fn exact_complexes() {
        let r = s(2, 2);
        let koszul = validate_complex(vec![
            matrix(r, &[&["D1", "D2"]]),
            matrix(r, &[&["D2"], &["D1"]]),
        ])
        .unwrap();
        for d in 0..5 {
            assert!(truncated_exactness(&koszul, d).unwrap());
        }
        let single = validate_complex(vec![matrix(r, &[&["D1", "D2"]])]).unwrap();
        assert!(!truncated_exactness(&single, 2).unwrap());
        let id = validate_complex(vec![PolyMatrix::identity(r, 2)]).unwrap();
        assert!(truncated_exactness(&id, 3).unwrap());
    }

    #[test]
    fn memory_recovery() {
        let r = s(2, 2);
        let koszul = code(r, &[&["D1", "D2"]]);
        assert!(memory_recovery_check(&koszul, 1, 4).unwrap());
        assert!(!memory_recovery_check(&koszul, 0, 4).unwrap());
        let free = code(r, &[&["D1"], &["D2"]]);
        assert!(memory_recovery_check(&free, 1, 4).unwrap());
    }
}
