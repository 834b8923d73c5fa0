//! Numeric invariants read off a minimal reduced resolution.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::complexes::{DegreeTable, ResolutionReport};
use crate::error::{Error, Result};
use crate::module::TwistFunction;

/// Column degree table with every level sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ForneyTable {
    levels: Vec<TwistFunction>,
}

impl ForneyTable {
    pub fn levels(&self) -> &[TwistFunction] {
        &self.levels
    }

    pub fn as_degree_table(&self) -> DegreeTable {
        DegreeTable::new(self.levels.clone())
    }
}

impl fmt::Display for ForneyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.levels.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The rate `(p_l, ..., p_1)/q`, kept as a tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rate {
    /// `(p_l, ..., p_1)`.
    pub numerators: Vec<usize>,
    pub q: usize,
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.numerators.iter().map(ToString::to_string).collect();
        write!(f, "({})/{}", parts.join(","), self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeInvariants {
    pub rate: Rate,
    pub memory: i64,
    pub homological_dimension: usize,
    pub hilbert_values: BTreeMap<i64, u64>,
}

fn binomial(top: i64, k: usize) -> BigInt {
    if top < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1u32);
    for i in 0..k as i64 {
        acc = acc * BigInt::from(top - i) / BigInt::from(i + 1);
    }
    acc
}

/// `HF(C, d) = sum_i (-1)^(i-1) sum_j binom(d - a_i(j) + n, n)`, with
/// `binom(e + n, n) = 0` for `e < 0`.
pub fn hilbert_formula(table: &DegreeTable, n: usize, d: i64) -> Result<u64> {
    let mut total = BigInt::zero();
    for (i, level) in table.levels().iter().enumerate() {
        let level_sum: BigInt = level
            .values()
            .iter()
            .map(|&a| {
                if d - a < 0 {
                    BigInt::zero()
                } else {
                    binomial(d - a + n as i64, n)
                }
            })
            .sum();
        if i % 2 == 0 {
            total += level_sum;
        } else {
            total -= level_sum;
        }
    }
    total
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("Hilbert value {total} does not fit in 64 bits")))
}

pub fn forney_table(report: &ResolutionReport) -> ForneyTable {
    ForneyTable {
        levels: report.degree_table.sorted().levels().to_vec(),
    }
}

/// Largest column degree of `G_1`.
pub fn memory(report: &ResolutionReport) -> i64 {
    TwistFunction::max(&report.degree_table.levels()[0]).unwrap_or(0)
}

/// Rate, memory and homological dimension; fails if `l` exceeds `n`.
pub fn rate_and_dimension(report: &ResolutionReport) -> Result<CodeInvariants> {
    let n = report.complex.ring().n;
    let l = report.complex.len();
    if l == 0 || l > n {
        return Err(Error::Internal(format!(
            "resolution length {l} outside 1..={n}"
        )));
    }
    let mut numerators = report.complex.sizes();
    numerators.reverse();
    Ok(CodeInvariants {
        rate: Rate {
            numerators,
            q: report.complex.q(),
        },
        memory: memory(report),
        homological_dimension: l,
        hilbert_values: BTreeMap::new(),
    })
}

/// [`rate_and_dimension`] plus Hilbert values for `0 <= d <= max_d`.
pub fn code_invariants(report: &ResolutionReport, max_d: i64) -> Result<CodeInvariants> {
    let mut inv = rate_and_dimension(report)?;
    let n = report.complex.ring().n;
    for d in 0..=max_d {
        inv.hilbert_values
            .insert(d, hilbert_formula(&report.degree_table, n, d)?);
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(levels: &[&[i64]]) -> DegreeTable {
        DegreeTable::new(
            levels
                .iter()
                .map(|l| TwistFunction::new(l.to_vec()).unwrap())
                .collect(),
        )
    }

    #[test]
    fn koszul_hilbert_values() {
        let t = table(&[&[1, 1], &[2]]);
        let values: Vec<u64> = (0..=4)
            .map(|d| hilbert_formula(&t, 2, d).unwrap())
            .collect();
        assert_eq!(values, vec![0, 2, 5, 9, 14]);
        assert_eq!(hilbert_formula(&t, 2, -3).unwrap(), 0);
    }

    #[test]
    fn full_space_counts_monomials() {
        let t = table(&[&[0, 0, 0]]);
        for d in 0..6 {
            assert_eq!(
                hilbert_formula(&t, 3, d).unwrap(),
                3 * binomial(d + 3, 3).to_u64().unwrap()
            );
        }
    }

    #[test]
    fn huge_degrees_report_overflow() {
        let t = table(&[&[0]]);
        assert!(hilbert_formula(&t, 6, 1 << 40).is_err());
        assert_eq!(binomial(5, 2), BigInt::from(10));
    }

    #[test]
    fn display_forms() {
        let r = Rate {
            numerators: vec![1, 2],
            q: 1,
        };
        assert_eq!(r.to_string(), "(1,2)/1");
        let f = ForneyTable {
            levels: table(&[&[1, 1], &[2]]).levels().to_vec(),
        };
        assert_eq!(f.to_string(), "((1,1),(2))");
    }
}
