//! Monomials and sparse polynomials over `S = F_p[D_1..D_n]` and
//! `T = F_p[D_0, D_1..D_n]`.
//!
//! Every polynomial carries the [`Ring`] it lives in. Terms are kept sorted
//! strictly decreasing under graded reverse lexicographic order with
//! `D_1 > D_2 > ... > D_n`; in `T` the homogenizing variable `D_0` is the
//! smallest variable, so the leading term of a homogeneous polynomial is
//! `D_0`-free whenever possible.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Which of the two polynomial rings a value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// `S = F[D_1..D_n]`; exponent slot `k - 1` holds `D_k`.
    Affine,
    /// `T = F[D_0, D_1..D_n]`; exponent slot 0 holds `D_0`, slot `k` holds `D_k`.
    Homogenizing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub field: PrimeField,
    /// Number of code variables `n` (excludes `D_0`).
    pub n: usize,
    pub kind: RingKind,
}

impl Ring {
    pub fn affine(field: PrimeField, n: usize) -> Ring {
        Ring {
            field,
            n,
            kind: RingKind::Affine,
        }
    }

    pub fn homogenizing(field: PrimeField, n: usize) -> Ring {
        Ring {
            field,
            n,
            kind: RingKind::Homogenizing,
        }
    }

    /// `S` for `T` and vice versa.
    pub fn affine_part(&self) -> Ring {
        Ring::affine(self.field, self.n)
    }

    pub fn homogenized(&self) -> Ring {
        Ring::homogenizing(self.field, self.n)
    }

    pub fn is_homogenizing(&self) -> bool {
        self.kind == RingKind::Homogenizing
    }

    /// Number of exponent slots.
    pub fn nvars(&self) -> usize {
        match self.kind {
            RingKind::Affine => self.n,
            RingKind::Homogenizing => self.n + 1,
        }
    }

    /// Slot holding `D_k`, if that variable exists in this ring.
    pub fn slot_of(&self, k: usize) -> Option<usize> {
        match self.kind {
            RingKind::Affine if (1..=self.n).contains(&k) => Some(k - 1),
            RingKind::Homogenizing if k <= self.n => Some(k),
            _ => None,
        }
    }

    /// Index `k` of the variable `D_k` stored in `slot`.
    pub fn var_index(&self, slot: usize) -> usize {
        match self.kind {
            RingKind::Affine => slot + 1,
            RingKind::Homogenizing => slot,
        }
    }

    /// Graded reverse lexicographic comparison.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        // Scan from the smallest variable; a smaller exponent there wins.
        let scan = |slot: usize| -> Option<Ordering> {
            let (x, y) = (a.0[slot], b.0[slot]);
            (x != y).then(|| y.cmp(&x))
        };
        if self.kind == RingKind::Homogenizing {
            if let Some(o) = scan(0) {
                return o;
            }
            for slot in (1..=self.n).rev() {
                if let Some(o) = scan(slot) {
                    return o;
                }
            }
        } else {
            for slot in (0..self.n).rev() {
                if let Some(o) = scan(slot) {
                    return o;
                }
            }
        }
        Ordering::Equal
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Structural(format!(
                "modulus mismatch: {} vs {}",
                self.field.modulus(),
                other.field.modulus()
            )));
        }
        if self.n != other.n || self.kind != other.kind {
            return Err(Error::Structural(format!(
                "ring mismatch: {:?}/{} vs {:?}/{}",
                self.kind, self.n, other.kind, other.n
            )));
        }
        Ok(())
    }
}

/// Dense exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| i64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

/// A total degree, with a distinct sentinel for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// Shifts a finite degree; `-inf` absorbs.
    pub fn shift(self, by: i64) -> Degree {
        match self {
            Degree::NegInfinity => Degree::NegInfinity,
            Degree::Finite(d) => Degree::Finite(d + by),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coef: u64,
    pub mon: Monomial,
}

/// Polynomial in canonical form: nonzero coefficients, distinct monomials,
/// strictly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring arithmetic on two polynomials.
pub fn poly_arith(op: ArithOp, f: &Poly, g: &Poly) -> Result<Poly> {
    f.ring.check_same(&g.ring)?;
    Ok(match op {
        ArithOp::Add => f.add(g),
        ArithOp::Sub => f.sub(g),
        ArithOp::Mul => f.mul(g),
    })
}

impl Poly {
    pub fn zero(ring: Ring) -> Poly {
        Poly {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, c: u64) -> Poly {
        let c = c % ring.field.modulus();
        Poly::from_sorted(
            ring,
            vec![Term {
                coef: c,
                mon: Monomial::one(ring.nvars()),
            }],
        )
    }

    pub fn one(ring: Ring) -> Poly {
        Poly::constant(ring, 1)
    }

    /// The variable `D_k`.
    pub fn var(ring: Ring, k: usize) -> Result<Poly> {
        let slot = ring
            .slot_of(k)
            .ok_or_else(|| Error::Domain(format!("variable D{k} does not exist in this ring")))?;
        let mut mon = Monomial::one(ring.nvars());
        mon.0[slot] = 1;
        Ok(Poly {
            ring,
            terms: vec![Term { coef: 1, mon }],
        })
    }

    pub fn monomial(ring: Ring, coef: u64, mon: Monomial) -> Poly {
        debug_assert_eq!(mon.0.len(), ring.nvars());
        Poly::from_sorted(
            ring,
            vec![Term {
                coef: coef % ring.field.modulus(),
                mon,
            }],
        )
    }

    /// Builds a canonical polynomial from terms in any order, merging duplicates.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (u64, Monomial)>) -> Poly {
        let f = ring.field;
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(c, mon)| Term {
                coef: c % f.modulus(),
                mon,
            })
            .collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.mon, &a.mon));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon => last.coef = f.add(last.coef, t.coef),
                _ => {
                    if out.last().is_some_and(|l| l.coef == 0) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coef == 0) {
            out.pop();
        }
        Poly { ring, terms: out }
    }

    fn from_sorted(ring: Ring, mut terms: Vec<Term>) -> Poly {
        terms.retain(|t| t.coef != 0);
        Poly { ring, terms }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.mon.is_one() => Some(t.coef),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|t| t.mon.degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mon.degree();
                self.terms.iter().all(|u| u.mon.degree() == d)
            }
        }
    }

    fn merge(&self, other: &Poly, other_scale: u64) -> Poly {
        let f = self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match self.ring.cmp_monomials(&a.mon, &b.mon) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coef: f.mul(b.coef, other_scale),
                        mon: b.mon.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a.coef, f.mul(b.coef, other_scale));
                    if c != 0 {
                        out.push(Term {
                            coef: c,
                            mon: a.mon.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|b| Term {
            coef: f.mul(b.coef, other_scale),
            mon: b.mon.clone(),
        }));
        Poly::from_sorted(self.ring, out)
    }

    /// Panics if the rings differ; use [`poly_arith`] for a checked version.
    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.ring, other.ring, "ring mismatch in add");
        self.merge(other, 1)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.ring, other.ring, "ring mismatch in sub");
        self.merge(other, self.ring.field.modulus() - 1)
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: u64, other: &Poly) -> Poly {
        assert_eq!(self.ring, other.ring, "ring mismatch in add_scaled");
        self.merge(other, c % self.ring.field.modulus())
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.ring.field.modulus() - 1)
    }

    pub fn scale(&self, c: u64) -> Poly {
        let f = self.ring.field;
        let c = c % f.modulus();
        if c == 0 {
            return Poly::zero(self.ring);
        }
        Poly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: f.mul(t.coef, c),
                    mon: t.mon.clone(),
                })
                .collect(),
        }
    }

    /// Multiplication by `c * mon`; order is preserved by monomial multiplication.
    pub fn mul_term(&self, c: u64, mon: &Monomial) -> Poly {
        let f = self.ring.field;
        let c = c % f.modulus();
        if c == 0 {
            return Poly::zero(self.ring);
        }
        Poly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: f.mul(t.coef, c),
                    mon: t.mon.mul(mon),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.ring, other.ring, "ring mismatch in mul");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Poly::zero(self.ring);
        for t in &small.terms {
            acc = acc.merge(&large.mul_term(t.coef, &t.mon), 1);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: i64) -> Poly {
        Poly::from_sorted(
            self.ring,
            self.terms
                .iter()
                .filter(|t| t.mon.degree() == d)
                .cloned()
                .collect(),
        )
    }

    /// `f(D) -> D_0^d f(D / D_0)`, a bijection `S_{<=d} -> T_d`.
    pub fn homogenize_in_degree(&self, d: i64) -> Result<Poly> {
        if self.ring.kind != RingKind::Affine {
            return Err(Error::Structural(
                "homogenization expects a polynomial over S".into(),
            ));
        }
        if let Degree::Finite(deg) = self.total_degree() {
            if deg > d {
                return Err(Error::Domain(format!(
                    "cannot homogenize a polynomial of degree {deg} in degree {d}"
                )));
            }
        }
        let target = self.ring.homogenized();
        Ok(Poly::from_terms(
            target,
            self.terms.iter().map(|t| {
                let mut exps: SmallVec<[u32; 8]> = SmallVec::with_capacity(target.nvars());
                exps.push((d - t.mon.degree()) as u32);
                exps.extend_from_slice(&t.mon.0);
                (t.coef, Monomial(exps))
            }),
        ))
    }

    /// Substitutes `D_0 := 1`, landing in `S`.
    pub fn dehomogenize(&self) -> Result<Poly> {
        if self.ring.kind != RingKind::Homogenizing {
            return Err(Error::Structural(
                "dehomogenization expects a polynomial over T".into(),
            ));
        }
        let target = self.ring.affine_part();
        Ok(Poly::from_terms(
            target,
            self.terms
                .iter()
                .map(|t| (t.coef, Monomial::from_exponents(&t.mon.0[1..]))),
        ))
    }

    /// Drops every term divisible by `D_0`.
    pub fn set_d0_to_zero(&self) -> Result<Poly> {
        if self.ring.kind != RingKind::Homogenizing {
            return Err(Error::Structural("D0 only exists in T".into()));
        }
        Ok(Poly::from_sorted(
            self.ring,
            self.terms
                .iter()
                .filter(|t| t.mon.0[0] == 0)
                .cloned()
                .collect(),
        ))
    }

    /// Reinterprets a `D_0`-free polynomial of `T` as a polynomial of `S`.
    pub fn to_affine(&self) -> Result<Poly> {
        if self.terms.iter().any(|t| t.mon.0[0] != 0) {
            return Err(Error::Domain("polynomial involves D0".into()));
        }
        self.dehomogenize()
    }

    /// Evaluates all variables at zero (the constant term).
    pub fn constant_term(&self) -> u64 {
        self.terms
            .last()
            .filter(|t| t.mon.is_one())
            .map_or(0, |t| t.coef)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if t.coef != 1 || t.mon.is_one() {
                factors.push(t.coef.to_string());
            }
            for (slot, &e) in t.mon.0.iter().enumerate() {
                let k = self.ring.var_index(slot);
                match e {
                    0 => {}
                    1 => factors.push(format!("D{k}")),
                    _ => factors.push(format!("D{k}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// `C(d + n, n)`: the number of monomials of degree at most `d` in `n`
/// variables, zero for negative `d`.
pub fn count_monomials_up_to(n: usize, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 1..=n as u128 {
        acc = acc * (d as u128 + i) / i;
    }
    acc as u64
}

/// All monomials in `nvars` slots of total degree exactly `d`, in decreasing
/// grevlex order of `ring`.
pub fn monomials_of_degree(ring: &Ring, d: u32) -> Vec<Monomial> {
    let nvars = ring.nvars();
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(slot: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slot + 1 == cur.len() {
            cur[slot] = left;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur[slot] = e;
            rec(slot + 1, left - e, cur, out);
        }
        cur[slot] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort_by(|a, b| ring.cmp_monomials(b, a));
    out
}
