//! Observability: torsion-freeness of `S^q / C`, decided by comparing `C`
//! with the kernel of its parity-check matrix, plus the univariate
//! per-irreducible exactness test.

use crate::complexes::{CodePresentation, PolyComplex};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{all_in_span, left_kernel, spans_equal, syzygies, syzygy_basis};
use crate::linalg::rank;
use crate::module::{ModElem, PolyMatrix, TwistFunction};
use crate::poly::Poly;

/// `element` is outside `C` but `multiplier * element` lies in `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionWitness {
    pub element: ModElem,
    pub multiplier: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservabilityReport {
    pub observable: bool,
    /// `H` with `C ⊆ ker H`; `C = ker H` exactly when observable.
    pub parity_check: Option<PolyMatrix>,
    pub witness: Option<TorsionWitness>,
}

/// Generators of `ker H ⊆ S^q`; all of `S^q` when `H` has no rows.
fn kernel_columns(h: &PolyMatrix, q: usize) -> Result<Vec<ModElem>> {
    let ring = h.ring();
    if h.rows() == 0 {
        return Ok((0..q)
            .map(|i| ModElem::unit(ring, q, i, Poly::one(ring)))
            .collect());
    }
    Ok(syzygy_basis(h)?.columns())
}

pub fn is_observable(code: &CodePresentation) -> Result<ObservabilityReport> {
    if code.is_zero() {
        return Err(Error::Domain(
            "observability needs a nontrivial code".into(),
        ));
    }
    let ring = code.ring();
    let q = code.length();
    let gens = code.nonzero_columns();
    let g = PolyMatrix::from_columns(ring, q, &gens)?;
    let h = left_kernel(&g)?;
    let k = kernel_columns(&h, q)?;
    if spans_equal(ring, q, &gens, &k) {
        return Ok(ObservabilityReport {
            observable: true,
            parity_check: Some(h),
            witness: None,
        });
    }
    let element = k
        .into_iter()
        .find(|v| !all_in_span(ring, q, &gens, std::slice::from_ref(v)))
        .ok_or_else(|| {
            Error::Internal("kernel differs from C but every generator lies in C".into())
        })?;
    // A syzygy of [G | element] with nonzero last entry s gives s * element in C.
    let mut extended = gens.clone();
    extended.push(element.clone());
    let ext = PolyMatrix::from_columns(ring, q, &extended)?;
    let multiplier = syzygies(&ext, &TwistFunction::zero(q))?
        .into_iter()
        .map(|s| s.components()[gens.len()].clone())
        .find(|s| !s.is_zero())
        .ok_or_else(|| Error::Internal("torsion element without an annihilator".into()))?;
    Ok(ObservabilityReport {
        observable: false,
        parity_check: Some(h),
        witness: Some(TorsionWitness {
            element,
            multiplier,
        }),
    })
}

/// Dense univariate polynomial, lowest coefficient first, no trailing zeros.
type Dense = Vec<u64>;

fn trim(mut a: Dense) -> Dense {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem(field: &PrimeField, a: &[u64], m: &[u64]) -> Dense {
    let mut r = trim(a.to_vec());
    let lead_inv = field.inv(*m.last().expect("nonzero modulus"));
    while r.len() >= m.len() {
        let c = field.mul(*r.last().expect("nonempty"), lead_inv);
        let shift = r.len() - m.len();
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = field.sub(r[shift + i], field.mul(c, mi));
        }
        r = trim(r);
    }
    r
}

fn mul(field: &PrimeField, a: &[u64], b: &[u64]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    trim(out)
}

fn monic_of_degree(field: &PrimeField, deg: usize) -> Vec<Dense> {
    let p = field.modulus();
    let count = p.pow(deg as u32);
    (0..count)
        .map(|mut idx| {
            let mut c = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                c.push(idx % p);
                idx /= p;
            }
            c.push(1);
            c
        })
        .collect()
}

fn is_irreducible(field: &PrimeField, f: &[u64]) -> bool {
    let deg = f.len() - 1;
    (1..=deg / 2).all(|k| {
        monic_of_degree(field, k)
            .iter()
            .all(|g| !rem(field, f, g).is_empty())
    })
}

/// Monic irreducible polynomials of degree `1..=bound` over `F_p`.
pub fn monic_irreducibles(field: &PrimeField, bound: usize) -> Vec<Vec<u64>> {
    (1..=bound)
        .flat_map(|d| monic_of_degree(field, d))
        .filter(|f| is_irreducible(field, f))
        .collect()
}

/// Largest `bound` accepted by [`prop3_spot_check`].
pub const MAX_PROP3_BOUND: usize = 4;
const MAX_CANDIDATES: u64 = 1 << 20;

fn to_dense(f: &Poly) -> Dense {
    let mut out = Vec::new();
    for t in f.terms() {
        let e = t.mon.exponents()[0] as usize;
        if out.len() <= e {
            out.resize(e + 1, 0);
        }
        out[e] = t.coef;
    }
    out
}

/// Rank over `F_p` of `m` reduced mod `lambda`, each entry replaced by its
/// multiplication matrix on `F_p[D]/(lambda)`; this is `deg(lambda)` times
/// the rank over the residue field.
fn residue_rank(field: &PrimeField, m: &PolyMatrix, lambda: &[u64]) -> usize {
    let k = lambda.len() - 1;
    let powers: Vec<Dense> = (0..k)
        .map(|t| {
            let mut x = vec![0; t + 1];
            x[t] = 1;
            x
        })
        .collect();
    let mut rows = vec![Vec::new(); m.rows() * k];
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let f = rem(field, &to_dense(m.get(i, j)), lambda);
            if f.is_empty() {
                continue;
            }
            for (t, x) in powers.iter().enumerate() {
                let image = rem(field, &mul(field, &f, x), lambda);
                for (s, &c) in image.iter().enumerate() {
                    if c != 0 {
                        rows[i * k + s].push((j * k + t, c));
                    }
                }
            }
        }
    }
    rank(*field, rows)
}

/// For `n = 1`: exactness of `0 -> K^{p_l} -> ... -> K^{p_1} -> K^q` over
/// `K = F_p[D]/(lambda)` for every monic irreducible `lambda` of degree at
/// most `degree_bound`.
pub fn prop3_spot_check(g: &PolyComplex, degree_bound: usize) -> Result<bool> {
    let ring = g.ring();
    if ring.n != 1 {
        return Err(Error::Unsupported(format!(
            "the per-irreducible check needs n = 1, got n = {}",
            ring.n
        )));
    }
    let p = ring.field.modulus();
    if degree_bound > MAX_PROP3_BOUND
        || p.checked_pow(degree_bound as u32)
            .is_none_or(|c| c > MAX_CANDIDATES)
    {
        return Err(Error::Unsupported(format!(
            "degree bound {degree_bound} too large for p = {p}"
        )));
    }
    for lambda in monic_irreducibles(&ring.field, degree_bound) {
        let k = lambda.len() - 1;
        let ranks: Vec<usize> = g
            .matrices()
            .iter()
            .map(|m| residue_rank(&ring.field, m, &lambda))
            .collect();
        let sizes = g.sizes();
        let l = g.len();
        if ranks[l - 1] != k * sizes[l - 1] {
            return Ok(false);
        }
        for i in 0..l - 1 {
            if k * sizes[i] - ranks[i] != ranks[i + 1] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::validate_complex;
    use crate::groebner::{module_equal, SubmodulePresentation};
    use crate::parse::parse_poly;
    use crate::poly::Ring;

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

    #[test]
    fn free_code_is_observable() {
        let r = s(2, 2);
        let g = matrix(r, &[&["D1"], &["D2"]]);
        let rep = is_observable(&CodePresentation::new(g.clone()).unwrap()).unwrap();
        assert!(rep.observable);
        let h = rep.parity_check.unwrap();
        let expected = matrix(r, &[&["D2", "D1"]]);
        let k = syzygy_basis(&h).unwrap();
        assert!(module_equal(
            &SubmodulePresentation::new(k).unwrap(),
            &SubmodulePresentation::new(g).unwrap()
        )
        .unwrap());
        assert!(module_equal(
            &SubmodulePresentation::new(syzygy_basis(&expected).unwrap()).unwrap(),
            &SubmodulePresentation::new(syzygy_basis(&h).unwrap()).unwrap()
        )
        .unwrap());
    }

    #[test]
    fn ideal_has_torsion() {
        let r = s(2, 2);
        let rep =
            is_observable(&CodePresentation::new(matrix(r, &[&["D1", "D2"]])).unwrap()).unwrap();
        assert!(!rep.observable);
        let w = rep.witness.unwrap();
        assert_eq!(w.element, ModElem::new(r, vec![Poly::one(r)]).unwrap());
        assert!(!w.multiplier.is_zero());
        assert_eq!(rep.parity_check.unwrap().rows(), 0);
    }

    #[test]
    fn full_space_has_empty_parity_check() {
        let r = s(3, 2);
        let rep =
            is_observable(&CodePresentation::new(PolyMatrix::identity(r, 2)).unwrap()).unwrap();
        assert!(rep.observable);
        assert_eq!(rep.parity_check.unwrap().rows(), 0);
    }

    #[test]
    fn irreducibles_over_f2() {
        let f = PrimeField::new(2).unwrap();
        let irr = monic_irreducibles(&f, 4);
        // 2 linear, 1 quadratic, 2 cubic, 3 quartic.
        assert_eq!(irr.len(), 8);
        assert!(irr.contains(&vec![1, 1, 1]));
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(monic_irreducibles(&f3, 2).len(), 3 + 3);
    }

    #[test]
    fn per_irreducible_checks() {
        let r = s(2, 1);
        let good = validate_complex(vec![matrix(r, &[&["D1"], &["1"]])]).unwrap();
        assert!(prop3_spot_check(&good, 2).unwrap());
        let bad = validate_complex(vec![matrix(r, &[&["D1"], &["D1"]])]).unwrap();
        assert!(!prop3_spot_check(&bad, 1).unwrap());
        let id = validate_complex(vec![PolyMatrix::identity(r, 2)]).unwrap();
        assert!(prop3_spot_check(&id, 3).unwrap());
        let r2 = s(2, 2);
        let two = validate_complex(vec![matrix(r2, &[&["D1"]])]).unwrap();
        assert!(matches!(
            prop3_spot_check(&two, 1),
            Err(Error::Unsupported(_))
        ));
        // D^2 + D + 1 divides both entries only over F_2 quadratics.
        let quad = validate_complex(vec![matrix(r, &[&["D1^2 + D1 + 1"], &["D1^3 + 1"]])]).unwrap();
        assert!(prop3_spot_check(&quad, 1).unwrap());
        assert!(!prop3_spot_check(&quad, 2).unwrap());
    }
}
