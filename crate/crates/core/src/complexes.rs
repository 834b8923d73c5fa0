//! Polynomial complexes `(G_l, ..., G_1)`, their column degree tables,
//! homogenization, leading-term complexes, and the exactness-based tests
//! (resolution, reduced, predictable degree, minimal).
//!
//! A minimal reduced polynomial resolution of a code `C` is built in `T`:
//! a degree-compatible Gröbner basis of `C` is homogenized, trimmed to a
//! minimal homogeneous generating set of `C^H`, and resolved graded step by
//! step with minimal generators of each kernel. Setting `D_0 = 1` gives the
//! resolution over `S`; its column degree table equals the graded twists.

use crate::error::{Error, Result};
use crate::groebner::{
    first_outside_span, minimal_generators, reduced_basis_elems, syzygies, ModuleOrder,
};
use crate::module::{ModElem, PolyMatrix, TwistFunction};
use crate::poly::{Poly, Ring, RingKind};

/// A code `C ⊆ S^q` given by generator columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodePresentation {
    generators: PolyMatrix,
}

impl CodePresentation {
    pub fn new(generators: PolyMatrix) -> Result<CodePresentation> {
        if generators.ring().kind != RingKind::Affine {
            return Err(Error::Structural("codes live in S^q".into()));
        }
        if generators.rows() == 0 {
            return Err(Error::Domain("code length q must be at least 1".into()));
        }
        Ok(CodePresentation { generators })
    }

    pub fn ring(&self) -> Ring {
        self.generators.ring()
    }

    pub fn length(&self) -> usize {
        self.generators.rows()
    }

    pub fn generators(&self) -> &PolyMatrix {
        &self.generators
    }

    /// Nonzero generator columns.
    pub fn nonzero_columns(&self) -> Vec<ModElem> {
        self.generators
            .columns()
            .into_iter()
            .filter(|c| !c.is_zero())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_zero()
    }
}

/// `(G_1, ..., G_l)` with `G_i G_{i+1} = 0`, no zero columns, `l >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyComplex {
    matrices: Vec<PolyMatrix>,
}

impl PolyComplex {
    pub fn ring(&self) -> Ring {
        self.matrices[0].ring()
    }

    /// Length `l`.
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// `G_1, ..., G_l` in that order.
    pub fn matrices(&self) -> &[PolyMatrix] {
        &self.matrices
    }

    pub fn into_matrices(self) -> Vec<PolyMatrix> {
        self.matrices
    }

    /// Row count of `G_1`.
    pub fn q(&self) -> usize {
        self.matrices[0].rows()
    }

    /// `(p_1, ..., p_l)`.
    pub fn sizes(&self) -> Vec<usize> {
        self.matrices.iter().map(PolyMatrix::cols).collect()
    }
}

/// Column degree table `(a_1, ..., a_l)` with `a_0 = 0` implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeTable {
    levels: Vec<TwistFunction>,
}

impl DegreeTable {
    pub fn new(levels: Vec<TwistFunction>) -> DegreeTable {
        DegreeTable { levels }
    }

    pub fn levels(&self) -> &[TwistFunction] {
        &self.levels
    }

    /// `a_k` for `k >= 1`, or the zero twist of length `q` for `k = 0`.
    pub fn level(&self, k: usize, q: usize) -> TwistFunction {
        if k == 0 {
            TwistFunction::zero(q)
        } else {
            self.levels[k - 1].clone()
        }
    }

    pub fn sorted(&self) -> DegreeTable {
        DegreeTable {
            levels: self.levels.iter().map(TwistFunction::sorted).collect(),
        }
    }
}

/// Outcome of building a resolution, with the verified structural flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionReport {
    pub complex: PolyComplex,
    pub degree_table: DegreeTable,
    pub is_resolution: bool,
    pub is_reduced: bool,
    pub is_pd: bool,
    pub is_minimal: bool,
}

/// Where exactness fails: homology at `S^{p_stage}` (stage `l` means `G_l`
/// is not injective) and an element of the kernel outside the image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessDefect {
    pub stage: usize,
    pub witness: ModElem,
}

/// A nonzero scalar entry of `G_level^L` for some `level >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarEntry {
    pub level: usize,
    pub row: usize,
    pub col: usize,
    pub value: u64,
}

pub fn validate_complex(matrices: Vec<PolyMatrix>) -> Result<PolyComplex> {
    let Some(first) = matrices.first() else {
        return Err(Error::Structural(
            "a complex needs at least one matrix".into(),
        ));
    };
    let ring = first.ring();
    for (k, g) in matrices.iter().enumerate() {
        ring.check_same(&g.ring())?;
        if g.rows() == 0 || g.cols() == 0 {
            return Err(Error::Structural(format!("G_{} has an empty shape", k + 1)));
        }
        if let Some(j) = g.zero_column() {
            return Err(Error::Domain(format!("zero column {j} in G_{}", k + 1)));
        }
    }
    for (k, pair) in matrices.windows(2).enumerate() {
        if pair[0].cols() != pair[1].rows() {
            return Err(Error::Structural(format!(
                "G_{} has {} columns but G_{} has {} rows",
                k + 1,
                pair[0].cols(),
                k + 2,
                pair[1].rows()
            )));
        }
        if !pair[0].mul(&pair[1])?.is_zero() {
            return Err(Error::Domain(format!(
                "G_{} G_{} is not zero",
                k + 1,
                k + 2
            )));
        }
    }
    Ok(PolyComplex { matrices })
}

/// `a_0 = 0`, `a_{i+1} = deg_{a_i}(G_{i+1})`.
pub fn column_degree_table(g: &PolyComplex) -> Result<DegreeTable> {
    let mut levels = Vec::with_capacity(g.len());
    let mut prev = TwistFunction::zero(g.q());
    for m in &g.matrices {
        let next = m.column_degrees(&prev)?;
        levels.push(next.clone());
        prev = next;
    }
    Ok(DegreeTable { levels })
}

/// Entry `(i, j)` of `G_k` homogenized in degree `a_k(j) - a_{k-1}(i)`.
pub fn homogenize_complex(g: &PolyComplex) -> Result<PolyComplex> {
    if g.ring().kind != RingKind::Affine {
        return Err(Error::Structural(
            "homogenization expects a complex over S".into(),
        ));
    }
    let table = column_degree_table(g)?;
    let t = g.ring().homogenized();
    let mut out = Vec::with_capacity(g.len());
    for (k, m) in g.matrices.iter().enumerate() {
        let (rows, cols) = (table.level(k, g.q()), table.level(k + 1, g.q()));
        out.push(m.map_entries(t, |i, j, e| {
            if e.is_zero() {
                Ok(Poly::zero(t))
            } else {
                e.homogenize_in_degree(cols.get(j) - rows.get(i))
            }
        })?);
    }
    Ok(PolyComplex { matrices: out })
}

/// Entry `(i, j)` of `G_k^L` is the homogeneous `(a_k(j) - a_{k-1}(i))`-part
/// of entry `(i, j)` of `G_k`. Cross-checked against `G^H(0, D)`.
pub fn leading_term_complex(g: &PolyComplex) -> Result<PolyComplex> {
    if g.ring().kind != RingKind::Affine {
        return Err(Error::Structural(
            "leading-term complex expects a complex over S".into(),
        ));
    }
    let table = column_degree_table(g)?;
    let s = g.ring();
    let mut out = Vec::with_capacity(g.len());
    for (k, m) in g.matrices.iter().enumerate() {
        let (rows, cols) = (table.level(k, g.q()), table.level(k + 1, g.q()));
        out.push(m.map_entries(s, |i, j, e| {
            Ok(e.homogeneous_part(cols.get(j) - rows.get(i)))
        })?);
    }
    let homog = homogenize_complex(g)?;
    for (lk, hk) in out.iter().zip(&homog.matrices) {
        let via_h = hk.map_entries(s, |_, _, e| e.set_d0_to_zero()?.to_affine())?;
        if &via_h != lk {
            return Err(Error::Internal("G^L differs from G^H(0, D)".into()));
        }
    }
    validate_complex(out)
        .map_err(|e| Error::Internal(format!("leading-term sequence is not a complex: {e}")))
}

/// First failure of exactness of `0 -> R^{p_l} -> ... -> R^{p_1} -> R^q`,
/// or `None` when the complex is a resolution.
pub fn resolution_defect(g: &PolyComplex) -> Result<Option<ExactnessDefect>> {
    let table = column_degree_table(g)?;
    let ring = g.ring();
    let l = g.len();
    for stage in 1..=l {
        let gi = &g.matrices[stage - 1];
        let kernel = syzygies(gi, &table.level(stage - 1, g.q()))?;
        if stage == l {
            if let Some(w) = kernel.into_iter().next() {
                return Ok(Some(ExactnessDefect { stage, witness: w }));
            }
        } else {
            let image = g.matrices[stage].columns();
            let order = ModuleOrder::new(table.level(stage, g.q()));
            if let Some(w) = first_outside_span(ring, &image, &order, &kernel) {
                return Ok(Some(ExactnessDefect { stage, witness: w }));
            }
        }
    }
    Ok(None)
}

pub fn check_resolution(g: &PolyComplex) -> Result<bool> {
    Ok(resolution_defect(g)?.is_none())
}

/// Exactness failure of the leading-term complex, if any.
pub fn reducedness_defect(g: &PolyComplex) -> Result<Option<ExactnessDefect>> {
    resolution_defect(&leading_term_complex(g)?)
}

pub fn check_reduced(g: &PolyComplex) -> Result<bool> {
    Ok(reducedness_defect(g)?.is_none())
}

/// Predictable degree property: a resolution whose leading-term complex is exact.
pub fn check_pd(g: &PolyComplex) -> Result<bool> {
    Ok(pd_defect(g)?.is_none())
}

/// First reason the predictable degree property fails.
pub fn pd_defect(g: &PolyComplex) -> Result<Option<ExactnessDefect>> {
    if let Some(d) = resolution_defect(g)? {
        return Ok(Some(d));
    }
    reducedness_defect(g)
}

/// Lexicographically first scalar entry of `G_2^L, ..., G_l^L`.
pub fn minimality_witness(g: &PolyComplex) -> Result<Option<ScalarEntry>> {
    if !check_resolution(g)? || !check_reduced(g)? {
        return Err(Error::Precondition(
            "minimality is only defined for reduced resolutions".into(),
        ));
    }
    let lt = leading_term_complex(g)?;
    Ok(first_scalar_entry(&lt))
}

pub fn check_minimal(g: &PolyComplex) -> Result<bool> {
    Ok(minimality_witness(g)?.is_none())
}

fn first_scalar_entry(g: &PolyComplex) -> Option<ScalarEntry> {
    for (k, m) in g.matrices.iter().enumerate().skip(1) {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if let Some(c) = m.get(i, j).as_constant().filter(|&c| c != 0) {
                    return Some(ScalarEntry {
                        level: k + 1,
                        row: i,
                        col: j,
                        value: c,
                    });
                }
            }
        }
    }
    None
}

/// Removes every trivial summand `T --c--> T` (scalar entry of some
/// `G_k`, `k >= 2`) from a graded resolution over `T`.
pub fn minimalize_graded(r: &PolyComplex) -> Result<PolyComplex> {
    if r.ring().kind != RingKind::Homogenizing {
        return Err(Error::Structural(
            "graded minimalization works over T".into(),
        ));
    }
    let field = r.ring().field;
    let mut mats = r.matrices.clone();
    while let Some(pivot) = first_scalar_entry(&PolyComplex {
        matrices: mats.clone(),
    }) {
        let (k, i, j) = (pivot.level - 1, pivot.row, pivot.col);
        let cinv = field.inv(pivot.value);
        // Clear row i of G_k by column operations; G_{k+1} changes basis.
        for jj in 0..mats[k].cols() {
            if jj == j || mats[k].get(i, jj).is_zero() {
                continue;
            }
            let t = mats[k].get(i, jj).scale(cinv);
            for ii in 0..mats[k].rows() {
                let v = mats[k].get(ii, jj).sub(&mats[k].get(ii, j).mul(&t));
                mats[k].set(ii, jj, v);
            }
            if let Some(next) = mats.get_mut(k + 1) {
                for c in 0..next.cols() {
                    let v = next.get(j, c).add(&next.get(jj, c).mul(&t));
                    next.set(j, c, v);
                }
            }
        }
        // Clear column j of G_k by row operations; G_{k-1} changes basis.
        for ii in 0..mats[k].rows() {
            if ii == i || mats[k].get(ii, j).is_zero() {
                continue;
            }
            let t = mats[k].get(ii, j).scale(cinv);
            for jj in 0..mats[k].cols() {
                let v = mats[k].get(ii, jj).sub(&mats[k].get(i, jj).mul(&t));
                mats[k].set(ii, jj, v);
            }
            let prev = &mut mats[k - 1];
            for rr in 0..prev.rows() {
                let v = prev.get(rr, i).add(&prev.get(rr, ii).mul(&t));
                prev.set(rr, i, v);
            }
        }
        if !mats[k - 1].is_zero_column(i) {
            return Err(Error::Precondition(
                "input is not a complex: split column is nonzero".into(),
            ));
        }
        if let Some(next) = mats.get(k + 1) {
            if (0..next.cols()).any(|c| !next.get(j, c).is_zero()) {
                return Err(Error::Precondition(
                    "input is not a complex: split row is nonzero".into(),
                ));
            }
        }
        mats[k].remove_row(i);
        mats[k].remove_column(j);
        mats[k - 1].remove_column(i);
        if let Some(next) = mats.get_mut(k + 1) {
            next.remove_row(j);
        }
        if let Some(cut) = mats.iter().position(|m| m.cols() == 0 || m.rows() == 0) {
            mats.truncate(cut);
        }
        if mats.is_empty() {
            return Err(Error::Precondition(
                "minimalization removed the whole complex".into(),
            ));
        }
    }
    if mats.iter().any(|m| m.zero_column().is_some()) {
        return Err(Error::Precondition(
            "zero column survived minimalization; input is not exact".into(),
        ));
    }
    validate_complex(mats)
}

/// Options for [`resolve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolveOptions {
    /// Trim the first map to minimal generators and minimalize the result.
    pub minimalize: bool,
    /// Run the exactness checks that populate the report flags.
    pub verify: bool,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            minimalize: true,
            verify: true,
        }
    }
}

/// Minimal reduced polynomial resolution of `C`, with verified flags.
pub fn minimal_resolution(code: &CodePresentation) -> Result<ResolutionReport> {
    resolve(code, ResolveOptions::default())
}

/// Homogenizations of the elements of a degree-compatible Gröbner basis of
/// `C`, each in its own degree; they generate `C^H`.
pub fn homogenized_generators(code: &CodePresentation) -> Result<Vec<ModElem>> {
    let ring = code.ring();
    let q = code.length();
    let gb = reduced_basis_elems(ring, q, &code.nonzero_columns(), &ModuleOrder::untwisted(q));
    gb.iter().map(homogenize_column).collect()
}

fn homogenize_column(f: &ModElem) -> Result<ModElem> {
    let d = f
        .degree()
        .finite()
        .ok_or_else(|| Error::Domain("cannot homogenize the zero column".into()))?;
    let comps = f
        .components()
        .iter()
        .map(|c| c.homogenize_in_degree(d))
        .collect::<Result<Vec<_>>>()?;
    ModElem::new(f.ring().homogenized(), comps)
}

/// Graded resolution over `T` starting from the homogeneous map `first`
/// (columns homogeneous for the zero row twist), taking minimal generators of
/// every kernel.
pub fn graded_resolution(first: PolyMatrix, max_len: usize) -> Result<PolyComplex> {
    let q = first.rows();
    let mut row_twist = TwistFunction::zero(q);
    let mut col_twist = first.column_degrees(&row_twist)?;
    let mut mats = vec![first];
    loop {
        let last = mats.last().expect("nonempty");
        let kernel = syzygies(last, &row_twist)?;
        let kernel = PolyMatrix::from_columns(last.ring(), last.cols(), &kernel)?;
        let (next, degrees) = minimal_generators(&kernel, &col_twist)?;
        if next.cols() == 0 {
            break;
        }
        if mats.len() >= max_len {
            return Err(Error::Internal(format!(
                "graded resolution exceeds length {max_len}"
            )));
        }
        mats.push(next);
        row_twist = col_twist;
        col_twist = degrees;
    }
    validate_complex(mats)
}

pub fn resolve(code: &CodePresentation, options: ResolveOptions) -> Result<ResolutionReport> {
    if code.is_zero() {
        return Err(Error::Domain(
            "minimal resolutions need a nontrivial convolutional code".into(),
        ));
    }
    let ring = code.ring();
    let t = ring.homogenized();
    let q = code.length();
    let mut gens = homogenized_generators(code)?;
    let first = if options.minimalize {
        let all = PolyMatrix::from_columns(t, q, &gens)?;
        minimal_generators(&all, &TwistFunction::zero(q))?.0
    } else {
        for c in code.nonzero_columns() {
            gens.push(homogenize_column(&c)?);
        }
        PolyMatrix::from_columns(t, q, &gens)?
    };
    // Non-minimal inputs may need one extra step beyond the syzygy bound.
    let graded = graded_resolution(first, ring.n + 1)?;
    let graded = if options.minimalize {
        minimalize_graded(&graded)?
    } else {
        graded
    };
    let graded_table = column_degree_table(&graded)?;
    let dehom = graded
        .matrices
        .iter()
        .map(|m| m.map_entries(ring, |_, _, e| e.dehomogenize()))
        .collect::<Result<Vec<_>>>()?;
    let complex = validate_complex(dehom)?;
    let degree_table = column_degree_table(&complex)?;
    if degree_table != graded_table {
        return Err(Error::Internal(
            "column degree table differs from the graded twists".into(),
        ));
    }
    let (mut is_resolution, mut is_reduced, mut is_minimal) = (true, true, options.minimalize);
    if options.verify {
        is_resolution = check_resolution(&complex)?;
        is_reduced = check_reduced(&complex)?;
        is_minimal = is_resolution && is_reduced && check_minimal(&complex)?;
    }
    Ok(ResolutionReport {
        complex,
        degree_table,
        is_resolution,
        is_reduced,
        is_pd: is_resolution && is_reduced,
        is_minimal,
    })
}
