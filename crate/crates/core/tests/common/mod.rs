#![allow(dead_code)]

use mdcc::complexes::CodePresentation;
use mdcc::parse::parse_poly;
use mdcc::poly::monomials_of_degree;
use mdcc::{ModElem, Poly, PolyMatrix, PrimeField, Ring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn s(p: u64, n: usize) -> Ring {
    Ring::affine(PrimeField::new(p).unwrap(), n)
}

pub fn matrix(r: Ring, rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_rows(
        r,
        rows.iter()
            .map(|row| row.iter().map(|e| parse_poly(e, &r).unwrap()).collect())
            .collect(),
    )
    .unwrap()
}

pub fn code(r: Ring, rows: &[&[&str]]) -> CodePresentation {
    CodePresentation::new(matrix(r, rows)).unwrap()
}

/// Sparse random polynomial of degree at most `max_deg`: up to three terms.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: Ring, max_deg: u32) -> Poly {
    let p = ring.field.modulus();
    let terms = rng.gen_range(1..=3);
    (0..terms).fold(Poly::zero(ring), |acc, _| {
        let d = rng.gen_range(0..=max_deg);
        let mons = monomials_of_degree(&ring, d);
        let mon = mons.choose(rng).unwrap().clone();
        acc.add(&Poly::monomial(ring, rng.gen_range(1..p), mon))
    })
}

/// Random nonzero column; each entry is zero with probability about 1/3.
pub fn random_column(rng: &mut ChaCha8Rng, ring: Ring, q: usize, max_deg: u32) -> ModElem {
    loop {
        let comps: Vec<Poly> = (0..q)
            .map(|_| {
                if rng.gen_ratio(1, 3) {
                    Poly::zero(ring)
                } else {
                    random_poly(rng, ring, max_deg)
                }
            })
            .collect();
        let v = ModElem::new(ring, comps).unwrap();
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    ring: Ring,
    q: usize,
    k: usize,
    max_deg: u32,
) -> PolyMatrix {
    let cols: Vec<ModElem> = (0..k)
        .map(|_| random_column(rng, ring, q, max_deg))
        .collect();
    PolyMatrix::from_columns(ring, q, &cols).unwrap()
}

pub fn random_code(
    rng: &mut ChaCha8Rng,
    ring: Ring,
    q: usize,
    k: usize,
    max_deg: u32,
) -> CodePresentation {
    CodePresentation::new(random_matrix(rng, ring, q, k, max_deg)).unwrap()
}

/// Codes with `p` in {2, 3, 101}, `n <= 3`, `q <= 3`, generator degrees `<= 2`.
pub fn code_corpus(seed: u64, count: usize) -> Vec<CodePresentation> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let p = *[2u64, 3, 101].choose(&mut rng).unwrap();
            let n = rng.gen_range(1..=3);
            let q = rng.gen_range(1..=3);
            let k = rng.gen_range(1..=3);
            random_code(&mut rng, s(p, n), q, k, 2)
        })
        .collect()
}

/// Same code, different generators: shuffled and with `extra` random
/// `S`-combinations appended.
pub fn re_present(rng: &mut ChaCha8Rng, c: &CodePresentation, extra: usize) -> CodePresentation {
    let ring = c.ring();
    let mut cols = c.generators().columns();
    for _ in 0..extra {
        let mut v = ModElem::zero(ring, c.length());
        for g in c.generators().columns() {
            let coef = if rng.gen_ratio(1, 2) {
                random_poly(rng, ring, 1)
            } else {
                Poly::zero(ring)
            };
            v = v.add(&g.scale_poly(&coef));
        }
        cols.push(v);
    }
    cols.shuffle(rng);
    CodePresentation::new(PolyMatrix::from_columns(ring, c.length(), &cols).unwrap()).unwrap()
}
