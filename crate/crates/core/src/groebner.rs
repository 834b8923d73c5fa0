//! Module Gröbner bases over `S` and `T`.
//!
//! Submodules of `R^q` are handled with a degree-compatible
//! term-over-position order: a term `m e_i` has weight `deg m + twist(i)`;
//! ties are broken by grevlex on `m` and then by the smaller position.
//! Completion is plain Buchberger with the normal selection strategy.
//!
//! When syzygies are requested, every basis element records its expression
//! in the input generators. Each S-pair that reduces to zero then yields a
//! relation among the inputs; by Schreyer's theorem these relations,
//! together with unit vectors for zero inputs, generate the full syzygy
//! module. S-pairs that produce a new basis element yield the zero relation
//! once expressed in the inputs, so they are not recorded.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::module::{ModElem, PolyMatrix, TwistFunction};
use crate::poly::{Monomial, Poly, Ring};

/// Weighted term-over-position order on `R^p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub twist: TwistFunction,
}

impl ModuleOrder {
    pub fn new(twist: TwistFunction) -> ModuleOrder {
        ModuleOrder { twist }
    }

    pub fn untwisted(rank: usize) -> ModuleOrder {
        ModuleOrder {
            twist: TwistFunction::zero(rank),
        }
    }

    pub fn weight(&self, mon: &Monomial, pos: usize) -> i64 {
        mon.degree() + self.twist.get(pos)
    }

    pub fn compare(&self, ring: &Ring, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        self.weight(a.0, a.1)
            .cmp(&self.weight(b.0, b.1))
            .then_with(|| ring.cmp_monomials(a.0, b.0))
            .then_with(|| b.1.cmp(&a.1))
    }
}

/// A submodule given by generating columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmodulePresentation {
    generators: PolyMatrix,
}

impl SubmodulePresentation {
    pub fn new(generators: PolyMatrix) -> Result<SubmodulePresentation> {
        if generators.cols() == 0 || generators.rows() == 0 {
            return Err(Error::Domain(
                "a submodule needs at least one generator and rank >= 1".into(),
            ));
        }
        if let Some(j) = generators.zero_column() {
            return Err(Error::Domain(format!("generator {j} is the zero column")));
        }
        Ok(SubmodulePresentation { generators })
    }

    pub fn from_columns(
        ring: Ring,
        rank: usize,
        columns: &[ModElem],
    ) -> Result<SubmodulePresentation> {
        SubmodulePresentation::new(PolyMatrix::from_columns(ring, rank, columns)?)
    }

    pub fn ring(&self) -> Ring {
        self.generators.ring()
    }

    pub fn rank(&self) -> usize {
        self.generators.rows()
    }

    pub fn generators(&self) -> &PolyMatrix {
        &self.generators
    }
}

/// A Gröbner basis with monic generators sorted by leading term, descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    rank: usize,
    generators: Vec<ModElem>,
    order: ModuleOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[ModElem] {
        &self.generators
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    fn engine(&self) -> Engine {
        let ctx = Ctx {
            ring: self.ring,
            order: self.order.clone(),
        };
        let mut e = Engine::new(ctx, false);
        for g in &self.generators {
            let v = e.ctx.to_vec(g);
            e.push_basis(v, None);
        }
        e
    }
}

// ---------------------------------------------------------------------------
// Internal vector-polynomial representation.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VTerm {
    coef: u64,
    mon: Monomial,
    pos: usize,
}

/// Terms sorted strictly decreasing under the module order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct VecPoly(Vec<VTerm>);

impl VecPoly {
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lead(&self) -> &VTerm {
        &self.0[0]
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    ring: Ring,
    order: ModuleOrder,
}

impl Ctx {
    fn cmp(&self, a: &VTerm, b: &VTerm) -> Ordering {
        self.order
            .compare(&self.ring, (&a.mon, a.pos), (&b.mon, b.pos))
    }

    fn rank(&self) -> usize {
        self.order.twist.len()
    }

    fn to_vec(&self, f: &ModElem) -> VecPoly {
        let mut terms: Vec<VTerm> = f
            .components()
            .iter()
            .enumerate()
            .flat_map(|(pos, c)| {
                c.terms().iter().map(move |t| VTerm {
                    coef: t.coef,
                    mon: t.mon.clone(),
                    pos,
                })
            })
            .collect();
        terms.sort_by(|a, b| self.cmp(b, a));
        VecPoly(terms)
    }

    fn to_elem(&self, v: &VecPoly) -> ModElem {
        let mut parts: Vec<Vec<(u64, Monomial)>> = vec![Vec::new(); self.rank()];
        for t in &v.0 {
            parts[t.pos].push((t.coef, t.mon.clone()));
        }
        let comps = parts
            .into_iter()
            .map(|p| Poly::from_terms(self.ring, p))
            .collect();
        ModElem::new(self.ring, comps).expect("ring is consistent")
    }

    /// `f - c * mon * g`.
    fn sub_mul(&self, f: &[VTerm], c: u64, mon: &Monomial, g: &VecPoly) -> Vec<VTerm> {
        let field = self.ring.field;
        let neg = field.neg(c);
        let mut out = Vec::with_capacity(f.len() + g.0.len());
        let mut i = 0;
        let mut gi =
            g.0.iter()
                .map(|t| VTerm {
                    coef: field.mul(t.coef, neg),
                    mon: t.mon.mul(mon),
                    pos: t.pos,
                })
                .peekable();
        while i < f.len() {
            let Some(b) = gi.peek() else { break };
            match self.cmp(&f[i], b) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(gi.next().expect("peeked")),
                Ordering::Equal => {
                    let b = gi.next().expect("peeked");
                    let s = field.add(f[i].coef, b.coef);
                    if s != 0 {
                        out.push(VTerm { coef: s, ..b });
                    }
                    i += 1;
                }
            }
        }
        out.extend_from_slice(&f[i..]);
        out.extend(gi);
        out
    }

    fn make_monic(&self, v: &mut VecPoly) -> u64 {
        let field = self.ring.field;
        let lc = v.lead().coef;
        if lc != 1 {
            let inv = field.inv(lc);
            for t in &mut v.0 {
                t.coef = field.mul(t.coef, inv);
            }
        }
        lc
    }
}

#[derive(Clone, Debug)]
struct BasisElem {
    poly: VecPoly,
    /// Coordinates in the input generators, when tracking.
    rep: Option<Vec<Poly>>,
}

type PairKey = (i64, Vec<i64>, i64, usize, usize);

pub(crate) struct Engine {
    ctx: Ctx,
    basis: Vec<BasisElem>,
    pairs: BinaryHeap<Reverse<PairKey>>,
    track: bool,
    /// Relations among the input generators found so far.
    relations: Vec<Vec<Poly>>,
}

impl Engine {
    fn new(ctx: Ctx, track: bool) -> Engine {
        Engine {
            ctx,
            basis: Vec::new(),
            pairs: BinaryHeap::new(),
            track,
            relations: Vec::new(),
        }
    }

    /// Sort key realizing "smallest lcm first" for the module order.
    fn pair_key(&self, lcm: &Monomial, pos: usize, i: usize, j: usize) -> PairKey {
        let ring = &self.ctx.ring;
        let scan: Vec<usize> = if ring.is_homogenizing() {
            std::iter::once(0).chain((1..=ring.n).rev()).collect()
        } else {
            (0..ring.n).rev().collect()
        };
        let revlex: Vec<i64> = scan.iter().map(|&s| -i64::from(lcm.0[s])).collect();
        (
            self.ctx.order.weight(lcm, pos),
            [vec![lcm.degree()], revlex].concat(),
            -(pos as i64),
            i,
            j,
        )
    }

    /// Appends a nonzero element (made monic) and queues its pairs.
    fn push_basis(&mut self, mut poly: VecPoly, rep: Option<Vec<Poly>>) -> usize {
        let lc = self.ctx.make_monic(&mut poly);
        let rep = rep.map(|r| {
            let inv = self.ctx.ring.field.inv(lc);
            r.into_iter().map(|p| p.scale(inv)).collect()
        });
        let idx = self.basis.len();
        let (lm, pos) = (poly.lead().mon.clone(), poly.lead().pos);
        for (i, b) in self.basis.iter().enumerate() {
            let bl = b.poly.lead();
            if bl.pos == pos {
                let lcm = bl.mon.lcm(&lm);
                let key = self.pair_key(&lcm, pos, i, idx);
                self.pairs.push(Reverse(key));
            }
        }
        self.basis.push(BasisElem { poly, rep });
        idx
    }

    fn find_divisor(&self, t: &VTerm) -> Option<usize> {
        self.basis.iter().position(|b| {
            let l = b.poly.lead();
            l.pos == t.pos && l.mon.divides(&t.mon)
        })
    }

    /// Full reduction. When `quotients` is given, records `(basis index, coef, monomial)`
    /// for every subtraction so that `f = sum q_k g_k + result`.
    fn reduce(
        &self,
        f: VecPoly,
        mut quotients: Option<&mut Vec<(usize, u64, Monomial)>>,
    ) -> VecPoly {
        let mut rem: Vec<VTerm> = Vec::new();
        let mut cur = f.0;
        let mut start = 0;
        while start < cur.len() {
            let t = &cur[start];
            match self.find_divisor(t) {
                Some(k) => {
                    let g = &self.basis[k].poly;
                    let m = g.lead().mon.quotient_of(&t.mon);
                    let c = t.coef;
                    if let Some(q) = quotients.as_deref_mut() {
                        q.push((k, c, m.clone()));
                    }
                    cur = self.ctx.sub_mul(&cur[start..], c, &m, g);
                    start = 0;
                }
                None => {
                    rem.push(t.clone());
                    start += 1;
                }
            }
        }
        VecPoly(rem)
    }

    fn combine_reps(&self, parts: &[(usize, u64, Monomial)], nin: usize) -> Vec<Poly> {
        let ring = self.ctx.ring;
        let mut out = vec![Poly::zero(ring); nin];
        for (k, c, m) in parts {
            let rep = self.basis[*k].rep.as_ref().expect("tracking enabled");
            for (o, r) in out.iter_mut().zip(rep) {
                if !r.is_zero() {
                    *o = o.add(&r.mul_term(*c, m));
                }
            }
        }
        out
    }

    /// Runs Buchberger until every queued pair is processed.
    fn complete(&mut self, nin: usize) {
        let field = self.ctx.ring.field;
        while let Some(Reverse((_, _, _, i, j))) = self.pairs.pop() {
            let (gi, gj) = (&self.basis[i].poly, &self.basis[j].poly);
            let lcm = gi.lead().mon.lcm(&gj.lead().mon);
            let mi = gi.lead().mon.quotient_of(&lcm);
            let mj = gj.lead().mon.quotient_of(&lcm);
            // S = mi*gi - mj*gj; the lead terms cancel.
            let mut s: Vec<VTerm> =
                gi.0.iter()
                    .map(|t| VTerm {
                        coef: t.coef,
                        mon: t.mon.mul(&mi),
                        pos: t.pos,
                    })
                    .collect();
            s = self.ctx.sub_mul(&s, 1, &mj, gj);
            let mut quot = Vec::new();
            let r = self.reduce(VecPoly(s), self.track.then_some(&mut quot));
            if self.track {
                // mi*rep_i - mj*rep_j - sum q_k rep_k
                let mut parts = vec![(i, 1u64, mi), (j, field.neg(1), mj)];
                parts.extend(quot.into_iter().map(|(k, c, m)| (k, field.neg(c), m)));
                let combo = self.combine_reps(&parts, nin);
                if r.is_zero() {
                    if combo.iter().any(|p| !p.is_zero()) {
                        self.relations.push(combo);
                    }
                } else {
                    self.push_basis(r, Some(combo));
                }
            } else if !r.is_zero() {
                self.push_basis(r, None);
            }
        }
    }

    /// Reduced, monic Gröbner basis sorted by leading term, descending.
    fn reduced_basis(&self) -> Vec<VecPoly> {
        // Keep elements whose lead is not divisible by another kept lead.
        let mut keep: Vec<usize> = Vec::new();
        for (i, b) in self.basis.iter().enumerate() {
            let l = b.poly.lead();
            let redundant = self.basis.iter().enumerate().any(|(j, o)| {
                let ol = o.poly.lead();
                j != i && ol.pos == l.pos && ol.mon.divides(&l.mon) && (ol.mon != l.mon || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let minimal = Engine {
            ctx: self.ctx.clone(),
            basis: keep
                .iter()
                .map(|&i| BasisElem {
                    poly: self.basis[i].poly.clone(),
                    rep: None,
                })
                .collect(),
            pairs: BinaryHeap::new(),
            track: false,
            relations: Vec::new(),
        };
        let mut out: Vec<VecPoly> = (0..minimal.basis.len())
            .map(|i| {
                let g = &minimal.basis[i].poly;
                let tail = VecPoly(g.0[1..].to_vec());
                let mut reduced = vec![g.lead().clone()];
                reduced.extend(minimal.reduce(tail, None).0);
                VecPoly(reduced)
            })
            .collect();
        out.sort_by(|a, b| self.ctx.cmp(b.lead(), a.lead()));
        out
    }
}

fn check_elem(ring: &Ring, rank: usize, f: &ModElem) -> Result<()> {
    ring.check_same(&f.ring())?;
    if f.rank() != rank {
        return Err(Error::Structural(format!(
            "element of rank {} in a rank-{rank} module",
            f.rank()
        )));
    }
    Ok(())
}

fn check_order(rank: usize, order: &ModuleOrder) -> Result<()> {
    if order.twist.len() != rank {
        return Err(Error::Structural(format!(
            "order twist of length {} for a rank-{rank} module",
            order.twist.len()
        )));
    }
    Ok(())
}

/// Complete (not reduced) basis of the span of `gens`.
pub(crate) fn complete_basis(ring: Ring, gens: &[ModElem], order: &ModuleOrder) -> Engine {
    let ctx = Ctx {
        ring,
        order: order.clone(),
    };
    let mut e = Engine::new(ctx, false);
    for g in gens {
        let v = e.ctx.to_vec(g);
        if !v.is_zero() {
            e.push_basis(v, None);
        }
    }
    e.complete(0);
    e
}

fn reduced_from_elems(
    ring: Ring,
    rank: usize,
    gens: &[ModElem],
    order: &ModuleOrder,
) -> GroebnerBasis {
    let e = complete_basis(ring, gens, order);
    let generators = e.reduced_basis().iter().map(|v| e.ctx.to_elem(v)).collect();
    GroebnerBasis {
        ring,
        rank,
        generators,
        order: order.clone(),
        reduced: true,
    }
}

/// Reduced Gröbner basis of `M` under `order`.
pub fn groebner_basis(m: &SubmodulePresentation, order: &ModuleOrder) -> Result<GroebnerBasis> {
    check_order(m.rank(), order)?;
    Ok(reduced_from_elems(
        m.ring(),
        m.rank(),
        &m.generators().columns(),
        order,
    ))
}

/// Remainder of `f` after full reduction by `gb`.
pub fn normal_form(f: &ModElem, gb: &GroebnerBasis) -> Result<ModElem> {
    check_elem(&gb.ring, gb.rank, f)?;
    let e = gb.engine();
    let v = e.ctx.to_vec(f);
    Ok(e.ctx.to_elem(&e.reduce(v, None)))
}

/// Whether `f` lies in the span of the generators of `m`.
pub fn membership(f: &ModElem, m: &SubmodulePresentation) -> Result<bool> {
    check_elem(&m.ring(), m.rank(), f)?;
    if f.is_zero() {
        return Ok(true);
    }
    let e = complete_basis(
        m.ring(),
        &m.generators().columns(),
        &ModuleOrder::untwisted(m.rank()),
    );
    Ok(e.reduce(e.ctx.to_vec(f), None).is_zero())
}

/// Equality of two submodules of the same free module, by comparing reduced bases.
pub fn module_equal(m1: &SubmodulePresentation, m2: &SubmodulePresentation) -> Result<bool> {
    m1.ring().check_same(&m2.ring())?;
    if m1.rank() != m2.rank() {
        return Err(Error::Structural(format!(
            "ranks {} and {} differ",
            m1.rank(),
            m2.rank()
        )));
    }
    Ok(spans_equal(
        m1.ring(),
        m1.rank(),
        &m1.generators().columns(),
        &m2.generators().columns(),
    ))
}

/// Span equality for possibly empty or zero-containing generator lists.
pub(crate) fn spans_equal(ring: Ring, rank: usize, a: &[ModElem], b: &[ModElem]) -> bool {
    let order = ModuleOrder::untwisted(rank);
    reduced_from_elems(ring, rank, a, &order).generators
        == reduced_from_elems(ring, rank, b, &order).generators
}

/// Whether every element of `elems` lies in the span of `gens`.
pub(crate) fn all_in_span(ring: Ring, rank: usize, gens: &[ModElem], elems: &[ModElem]) -> bool {
    let e = complete_basis(ring, gens, &ModuleOrder::untwisted(rank));
    elems
        .iter()
        .all(|f| e.reduce(e.ctx.to_vec(f), None).is_zero())
}

/// First element of `elems` outside the span of `gens`, reducing under `order`.
pub(crate) fn first_outside_span(
    ring: Ring,
    gens: &[ModElem],
    order: &ModuleOrder,
    elems: &[ModElem],
) -> Option<ModElem> {
    let e = complete_basis(ring, gens, order);
    elems
        .iter()
        .find(|f| !e.reduce(e.ctx.to_vec(f), None).is_zero())
        .cloned()
}

/// Reduced basis elements of the span of `gens` (which may contain zeros).
pub(crate) fn reduced_basis_elems(
    ring: Ring,
    rank: usize,
    gens: &[ModElem],
    order: &ModuleOrder,
) -> Vec<ModElem> {
    reduced_from_elems(ring, rank, gens, order).generators
}

/// Generators of the syzygies of the columns of `g`, as columns.
///
/// Uses `row_twist` for the order on the target module; with homogeneous
/// columns of a graded map the returned syzygies are homogeneous for the
/// induced column twist.
pub(crate) fn syzygies(g: &PolyMatrix, row_twist: &TwistFunction) -> Result<Vec<ModElem>> {
    let ring = g.ring();
    let (q, k) = (g.rows(), g.cols());
    check_order(q, &ModuleOrder::new(row_twist.clone()))?;
    let ctx = Ctx {
        ring,
        order: ModuleOrder::new(row_twist.clone()),
    };
    let mut e = Engine::new(ctx, true);
    let mut out: Vec<ModElem> = Vec::new();
    for j in 0..k {
        let v = e.ctx.to_vec(&g.column(j));
        if v.is_zero() {
            out.push(ModElem::unit(ring, k, j, Poly::one(ring)));
        } else {
            let rep: Vec<Poly> = (0..k)
                .map(|i| {
                    if i == j {
                        Poly::one(ring)
                    } else {
                        Poly::zero(ring)
                    }
                })
                .collect();
            e.push_basis(v, Some(rep));
        }
    }
    e.complete(k);
    for r in std::mem::take(&mut e.relations) {
        let v = ModElem::new(ring, r)?;
        if !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Columns generating `{y : G y = 0}`; an empty matrix means `G` is injective.
pub fn syzygy_basis(g: &PolyMatrix) -> Result<PolyMatrix> {
    syzygy_basis_twisted(g, &TwistFunction::zero(g.rows()))
}

/// [`syzygy_basis`] with an explicit order twist on the target of `g`.
pub fn syzygy_basis_twisted(g: &PolyMatrix, row_twist: &TwistFunction) -> Result<PolyMatrix> {
    let syz = syzygies(g, row_twist)?;
    PolyMatrix::from_columns(g.ring(), g.cols(), &syz)
}

/// Rows generating `{h : h G = 0}`.
pub fn left_kernel(g: &PolyMatrix) -> Result<PolyMatrix> {
    Ok(syzygy_basis(&g.transpose())?.transpose())
}

/// A minimal homogeneous generating set of the graded submodule of
/// `T^q(-twist)` (or `S^q(-twist)`) spanned by the columns of `m`.
///
/// Generators are scanned by ascending degree; one is kept iff it is not in
/// the span of those already kept. Returns the kept columns and their degrees.
pub fn minimal_generators(
    m: &PolyMatrix,
    twist: &TwistFunction,
) -> Result<(PolyMatrix, TwistFunction)> {
    let ring = m.ring();
    if twist.len() != m.rows() {
        return Err(Error::Structural(format!(
            "twist of length {} for {} rows",
            twist.len(),
            m.rows()
        )));
    }
    let mut cands: Vec<(i64, usize, ModElem)> = Vec::new();
    for (j, col) in m.columns().into_iter().enumerate() {
        match col.homogeneous_degree(twist)? {
            Some(d) => cands.push((d, j, col)),
            None => continue,
        }
    }
    cands.sort_by_key(|(d, j, _)| (*d, *j));
    let ctx = Ctx {
        ring,
        order: ModuleOrder::new(twist.clone()),
    };
    let mut e = Engine::new(ctx, false);
    let mut kept = Vec::new();
    let mut degrees = Vec::new();
    for (d, _, col) in cands {
        let nf = e.reduce(e.ctx.to_vec(&col), None);
        if !nf.is_zero() {
            e.push_basis(nf, None);
            e.complete(0);
            kept.push(col);
            degrees.push(d);
        }
    }
    Ok((
        PolyMatrix::from_columns(ring, m.rows(), &kept)?,
        TwistFunction::new(degrees)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_poly;

    fn s(p: u64, n: usize) -> Ring {
        Ring::affine(PrimeField::new(p).unwrap(), n)
    }

    fn ideal(r: Ring, gens: &[&str]) -> SubmodulePresentation {
        let cols: Vec<ModElem> = gens
            .iter()
            .map(|g| ModElem::new(r, vec![parse_poly(g, &r).unwrap()]).unwrap())
            .collect();
        SubmodulePresentation::from_columns(r, 1, &cols).unwrap()
    }

    fn scalar(r: Ring, g: &str) -> ModElem {
        ModElem::new(r, vec![parse_poly(g, &r).unwrap()]).unwrap()
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

    fn gb_strings(gb: &GroebnerBasis) -> Vec<String> {
        gb.generators()
            .iter()
            .map(|g| g.components()[0].to_string())
            .collect()
    }

    #[test]
    fn normal_forms() {
        let r = s(2, 2);
        let ord = ModuleOrder::untwisted(1);
        let gb = groebner_basis(&ideal(r, &["D1"]), &ord).unwrap();
        assert_eq!(
            normal_form(&scalar(r, "D1^2 + D2"), &gb).unwrap(),
            scalar(r, "D2")
        );
        let gb2 = groebner_basis(&ideal(r, &["D1", "D2"]), &ord).unwrap();
        assert_eq!(normal_form(&scalar(r, "1"), &gb2).unwrap(), scalar(r, "1"));
        assert!(normal_form(&scalar(r, "D1*D2 + D2^3"), &gb2)
            .unwrap()
            .is_zero());
        assert!(normal_form(&ModElem::zero(r, 2), &gb2).is_err());
    }

    #[test]
    fn reduced_bases() {
        let r = s(2, 2);
        let ord = ModuleOrder::untwisted(1);
        assert_eq!(
            gb_strings(&groebner_basis(&ideal(r, &["D1", "D2"]), &ord).unwrap()),
            ["D1", "D2"]
        );
        assert_eq!(
            gb_strings(&groebner_basis(&ideal(r, &["D1", "D1"]), &ord).unwrap()),
            ["D1"]
        );
        assert_eq!(
            gb_strings(&groebner_basis(&ideal(r, &["D1 + D2", "D2"]), &ord).unwrap()),
            ["D1", "D2"]
        );
        let r3 = s(3, 2);
        let gb = groebner_basis(&ideal(r3, &["D1^2 - D2", "D1*D2 - 1"]), &ord).unwrap();
        assert!(gb.is_reduced());
        for g in gb.generators() {
            assert_eq!(g.components()[0].leading_term().unwrap().coef, 1);
        }
    }

    #[test]
    fn membership_and_equality() {
        let r = s(2, 2);
        let m = ideal(r, &["D1", "D2"]);
        assert!(membership(&scalar(r, "D1*D2"), &m).unwrap());
        assert!(!membership(&scalar(r, "1"), &m).unwrap());
        assert!(membership(&ModElem::zero(r, 1), &m).unwrap());
        assert!(module_equal(&m, &ideal(r, &["D2", "D1 + D2"])).unwrap());
        assert!(!module_equal(&ideal(r, &["D1"]), &m).unwrap());
        assert!(module_equal(&m, &m).unwrap());
    }

    #[test]
    fn koszul_syzygies() {
        let r = s(2, 2);
        let g = matrix(r, &[&["D1", "D2"]]);
        let syz = syzygy_basis(&g).unwrap();
        assert_eq!(syz.cols(), 1);
        assert!(g.mul(&syz).unwrap().is_zero());
        let expected = matrix(r, &[&["D2"], &["D1"]]);
        assert!(spans_equal(r, 2, &syz.columns(), &expected.columns()));

        let column = matrix(r, &[&["D1"], &["D2"]]);
        assert!(syzygy_basis(&column).unwrap().is_empty());

        let twin = matrix(r, &[&["D1", "D1"]]);
        let syz = syzygy_basis(&twin).unwrap();
        assert!(spans_equal(
            r,
            2,
            &syz.columns(),
            &matrix(r, &[&["1"], &["1"]]).columns()
        ));
    }

    #[test]
    fn left_kernels() {
        let r = s(3, 2);
        let h = left_kernel(&matrix(r, &[&["D1"], &["D2"]])).unwrap();
        assert_eq!(h.rows(), 1);
        assert!(spans_equal(
            r,
            2,
            &h.transpose().columns(),
            &matrix(r, &[&["D2"], &["-D1"]]).columns()
        ));
        assert!(left_kernel(&matrix(r, &[&["D1", "D2"]]))
            .unwrap()
            .is_empty());
        assert!(left_kernel(&PolyMatrix::identity(r, 3)).unwrap().is_empty());
    }

    #[test]
    fn minimal_generator_examples() {
        let r = s(2, 2);
        let tw = TwistFunction::zero(1);
        let (m, d) = minimal_generators(&matrix(r, &[&["D1", "D2", "D1 + D2"]]), &tw).unwrap();
        assert_eq!(m.cols(), 2);
        assert_eq!(d.values(), &[1, 1]);
        let (m, _) = minimal_generators(&matrix(r, &[&["D1"]]), &tw).unwrap();
        assert_eq!(m, matrix(r, &[&["D1"]]));
        let (m, d) = minimal_generators(&matrix(r, &[&["D1*D2", "D1"]]), &tw).unwrap();
        assert_eq!(m, matrix(r, &[&["D1"]]));
        assert_eq!(d.values(), &[1]);
        assert!(minimal_generators(&matrix(r, &[&["D1 + 1"]]), &tw).is_err());
    }

    #[test]
    fn module_syzygies_with_positions() {
        // Columns of a 2x3 matrix over F_3[D1, D2].
        let r = s(3, 2);
        let g = matrix(r, &[&["D1", "D2", "0"], &["D2", "0", "D1"]]);
        let syz = syzygy_basis(&g).unwrap();
        assert!(g.mul(&syz).unwrap().is_zero());
        // (D1*D2, -D1^2, -D2^2) is a syzygy.
        let k = matrix(r, &[&["D1*D2"], &["-D1^2"], &["-D2^2"]]);
        assert!(all_in_span(r, 3, &syz.columns(), &k.columns()));
    }
}
