//! The instance-transformation chain from MAX-CNF-SAT to LCWIS, its
//! decoding certificate, and brute-force oracles for both endpoints.
//!
//! Split-and-list turns a formula on `N` variables into two vector sets:
//! enumerate every assignment of the first `ceil(N/2)` variables into `U`
//! and of the rest into `V`, one coordinate per clause, `0` iff the
//! half-assignment satisfies the clause. A pair `(u, v)` then has inner
//! product equal to the number of clauses the combined assignment leaves
//! unsatisfied, so `min u.v = M - maxsat`.
//!
//! The vector sets become one unweighted sequence pair via vector gadgets,
//! [`combine`](gadget::combine) with unit payload weights, and
//! [`expand_weights`](gadget::expand_weights). A single LCWIS solve then
//! pins down the minimum inner product exactly — the combined value is
//! `offset + d - min u.v` — so no search over a threshold is needed.

use alloc::vec::Vec;

use thiserror::Error;

use crate::gadget::{self, GadgetError, GadgetSide};
use crate::seq::{Sequence, Symbol, WeightedAlphabet};
use crate::solve::{self, SolveError};

/// Default cap on formula variables for [`maxsat_via_lcwis`]; `N = 12`
/// yields instances around `10^5` tokens, the comfortable limit for one
/// quadratic solve.
pub const DEFAULT_MAXSAT_BUDGET: u32 = 12;

/// Variable cap for [`maxsat_oracle`]'s full assignment enumeration.
pub const ORACLE_MAX_VARS: u32 = 20;

/// Hard representational limit for split-and-list: half-assignment masks
/// are 64-bit, so each half may hold at most 63 variables.
pub const SPLIT_MAX_VARS: u32 = 126;

/// Every emitted instance is checked against this loose token bound
/// (`60 * n * d`); the exact sizes follow the closed forms in
/// [`expected_token_lengths`].
pub const TOKEN_BOUND_FACTOR: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("clause {clause} contains the literal 0")]
    ZeroLiteral { clause: usize },
    #[error("clause {clause} references variable {var}, but the formula has {num_vars}")]
    LiteralOutOfRange { clause: usize, var: u32, num_vars: u32 },
    #[error("clause {clause} contains a variable and its negation")]
    TautologicalClause { clause: usize },
    #[error("the formula has no variables")]
    NoVariables,
    #[error("the formula has no clauses")]
    NoClauses,
    #[error("{num_vars} variables exceed the split-and-list limit of {max}")]
    TooManyVariables { num_vars: u32, max: u32 },
    #[error("vector dimension must be at least 1")]
    ZeroDimension,
    #[error("vector {index} has {got} coordinates, expected {dim}")]
    RaggedVector { index: usize, got: usize, dim: usize },
    #[error("vector set is empty")]
    EmptySet,
    #[error("vector sets have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("value {value} lies outside the decodable band [{lo}, {hi}]")]
    ValueOutOfBand { value: i64, lo: i64, hi: i64 },
    #[error("formula has {num_vars} variables, over the budget of {budget}")]
    BudgetExceeded { num_vars: u32, budget: u32 },
}

/// A CNF formula: clauses are lists of non-zero signed literals whose
/// magnitudes are 1-based variable indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Rejects zero literals, out-of-range variables, and clauses that
    /// contain both a variable and its negation — the latter are always
    /// satisfied and would silently distort the max-sat count.
    pub fn new(num_vars: u32, clauses: Vec<Vec<i32>>) -> Result<Self, ReduceError> {
        for (idx, clause) in clauses.iter().enumerate() {
            let clause_no = idx + 1;
            for &lit in clause {
                if lit == 0 {
                    return Err(ReduceError::ZeroLiteral { clause: clause_no });
                }
                let var = lit.unsigned_abs();
                if var > num_vars {
                    return Err(ReduceError::LiteralOutOfRange {
                        clause: clause_no,
                        var,
                        num_vars,
                    });
                }
                if clause.contains(&-lit) {
                    return Err(ReduceError::TautologicalClause { clause: clause_no });
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }
}

/// Evaluates one clause under an assignment of the variable block
/// `first_var .. first_var + count`; literals outside the block never
/// satisfy the clause here.
fn half_satisfies(clause: &[i32], mask: u64, first_var: u32, count: u32) -> bool {
    clause.iter().any(|&lit| {
        let var = lit.unsigned_abs();
        if var < first_var || var >= first_var + count {
            return false;
        }
        let bit = mask >> (var - first_var) & 1 == 1;
        (lit > 0) == bit
    })
}

/// A set of 0/1 vectors sharing one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVectorSet {
    dim: usize,
    vectors: Vec<Vec<bool>>,
}

impl BitVectorSet {
    pub fn new(dim: usize, vectors: Vec<Vec<bool>>) -> Result<Self, ReduceError> {
        if dim == 0 {
            return Err(ReduceError::ZeroDimension);
        }
        for (index, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(ReduceError::RaggedVector {
                    index,
                    got: v.len(),
                    dim,
                });
            }
        }
        Ok(Self { dim, vectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<bool>] {
        &self.vectors
    }
}

/// The bookkeeping needed to invert the reduction: a solved LCWIS value
/// maps back through `offset` and `dim` to a minimum inner product, and —
/// when the instance came from a formula — on to a max-sat count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionCertificate {
    /// Padded common set size.
    pub n: usize,
    /// Vector dimension; equals the clause count for the CNF chain.
    pub dim: usize,
    /// Maximum payload total weight inside the combined instance.
    pub ell: i64,
    /// `(4n - 2) * ell`.
    pub offset: i64,
    /// Clause count, absent for instances built from bare vector sets.
    pub num_clauses: Option<usize>,
}

/// What a certificate recovers from a solved LCWIS value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decoded {
    pub min_inner_product: i64,
    /// Present iff the certificate carries a clause count.
    pub max_satisfiable: Option<i64>,
}

/// Split-and-list: one vector per half-assignment, coordinate `i` is 0 iff
/// the half-assignment satisfies clause `i`. `U` covers the first
/// `ceil(N/2)` variables in mask order (bit `k` = variable `k + 1` of the
/// block), `V` the rest. The empty second half of `N = 1` contributes one
/// all-ones vector.
pub fn vectors_from_cnf(f: &CnfFormula) -> Result<(BitVectorSet, BitVectorSet), ReduceError> {
    if f.num_vars() == 0 {
        return Err(ReduceError::NoVariables);
    }
    if f.num_clauses() == 0 {
        return Err(ReduceError::NoClauses);
    }
    if f.num_vars() > SPLIT_MAX_VARS {
        return Err(ReduceError::TooManyVariables {
            num_vars: f.num_vars(),
            max: SPLIT_MAX_VARS,
        });
    }

    let first_count = f.num_vars().div_ceil(2);
    let second_count = f.num_vars() - first_count;

    let list_half = |first_var: u32, count: u32| -> Vec<Vec<bool>> {
        (0u64..1 << count)
            .map(|mask| {
                f.clauses()
                    .iter()
                    .map(|clause| !half_satisfies(clause, mask, first_var, count))
                    .collect()
            })
            .collect()
    };

    let u = list_half(1, first_count);
    let v = list_half(first_count + 1, second_count);
    let dim = f.num_clauses();
    Ok((BitVectorSet::new(dim, u)?, BitVectorSet::new(dim, v)?))
}

/// Exact expanded token lengths of the two sequences emitted by
/// [`ovp_to_lcwis_instance`], given the per-side payload token totals.
pub fn expected_token_lengths(
    n: usize,
    ell: i64,
    payload1_tokens: usize,
    payload2_tokens: usize,
) -> (usize, usize) {
    let ell = ell as usize;
    // P1 = A^{2n} .. (YB)^{n-1} .. Z^{2n} at weights ell, 2ell+2ell, ell.
    let p1 = 4 * n * ell + 4 * ell * (n - 1) + payload1_tokens;
    // P2 carries 3n - 1 ZYBA blocks of weight 6ell each.
    let p2 = 6 * ell * (3 * n - 1) + payload2_tokens;
    (p1, p2)
}

/// Builds an unweighted LCWIS instance whose value is
/// `offset + d - min_{u,v} u.v`.
///
/// The smaller set is padded to common size `n` by repeating its first
/// vector (a duplicate can never lower the minimum). Payload weights put 1
/// on the whole coordinate band `3 ..= 3d+2`, so the framing symbols land
/// at `1, 2, 3d+3, 3d+4` regardless of which coordinates occur, and the
/// final expansion step leaves payload tokens untouched.
pub fn ovp_to_lcwis_instance(
    u: &BitVectorSet,
    v: &BitVectorSet,
) -> Result<(Sequence, Sequence, ReductionCertificate), ReduceError> {
    if u.dim() != v.dim() {
        return Err(ReduceError::DimensionMismatch(u.dim(), v.dim()));
    }
    if u.is_empty() || v.is_empty() {
        return Err(ReduceError::EmptySet);
    }
    let d = u.dim();
    let n = u.len().max(v.len());

    let build = |set: &BitVectorSet, side: GadgetSide| -> Result<Vec<Sequence>, GadgetError> {
        let mut gadgets = Vec::with_capacity(n);
        for vector in set.vectors() {
            gadgets.push(gadget::vector_gadget(side, vector)?);
        }
        while gadgets.len() < n {
            gadgets.push(gadgets[0].clone());
        }
        Ok(gadgets)
    };
    let s_list = build(u, GadgetSide::One)?;
    let t_list = build(v, GadgetSide::Two)?;

    // vector_gadget validated d, so 3d + 2 fits in a symbol.
    let top = 3 * d as u32 + 2;
    let weights = WeightedAlphabet::unit((3..=top).map(Symbol::new));
    let ci = gadget::combine(&s_list, &t_list, &weights)?;

    let out1 = gadget::expand_weights(&ci.p1, &ci.weights)?;
    let out2 = gadget::expand_weights(&ci.p2, &ci.weights)?;

    let payload1: usize = s_list.iter().map(Sequence::len).sum();
    let payload2: usize = t_list.iter().map(Sequence::len).sum();
    let (want1, want2) = expected_token_lengths(n, ci.ell, payload1, payload2);
    assert_eq!(out1.len(), want1, "emitted instance breaks the size closed form");
    assert_eq!(out2.len(), want2, "emitted instance breaks the size closed form");
    let bound = TOKEN_BOUND_FACTOR
        .checked_mul(n)
        .and_then(|b| b.checked_mul(d))
        .expect("token bound overflows usize");
    assert!(
        out1.len() <= bound && out2.len() <= bound,
        "emitted instance exceeds the {TOKEN_BOUND_FACTOR}*n*d token bound"
    );

    let cert = ReductionCertificate {
        n,
        dim: d,
        ell: ci.ell,
        offset: ci.offset,
        num_clauses: None,
    };
    Ok((out1, out2, cert))
}

/// Inverts the reduction: `min u.v = d - (value - offset)`, and with a
/// clause count attached, `maxsat = M - min u.v`. A value outside
/// `[offset, offset + d]` signals a solver or construction bug.
pub fn decode(cert: &ReductionCertificate, lcwis_value: i64) -> Result<Decoded, ReduceError> {
    let lo = cert.offset;
    let hi = cert.offset + cert.dim as i64;
    if lcwis_value < lo || lcwis_value > hi {
        return Err(ReduceError::ValueOutOfBand {
            value: lcwis_value,
            lo,
            hi,
        });
    }
    let min_inner_product = cert.dim as i64 - (lcwis_value - lo);
    Ok(Decoded {
        min_inner_product,
        max_satisfiable: cert
            .num_clauses
            .map(|m| m as i64 - min_inner_product),
    })
}

/// Exact MAX-SAT through the full chain: split-and-list, gadget instance,
/// one LCWIS solve, decode. The instance has `O(2^{N/2} * M)` tokens, so
/// `N` is capped by `budget_n` ([`DEFAULT_MAXSAT_BUDGET`] for callers
/// without an opinion).
pub fn maxsat_via_lcwis(f: &CnfFormula, budget_n: u32) -> Result<i64, ReduceError> {
    if f.num_vars() > budget_n {
        return Err(ReduceError::BudgetExceeded {
            num_vars: f.num_vars(),
            budget: budget_n,
        });
    }
    let (u, v) = vectors_from_cnf(f)?;
    let (a, b, mut cert) = ovp_to_lcwis_instance(&u, &v)?;
    cert.num_clauses = Some(f.num_clauses());
    let value = solve::lcwis(&a, &b, false).value;
    let decoded = decode(&cert, value)?;
    Ok(decoded.max_satisfiable.expect("clause count was attached"))
}

/// Reference MAX-SAT by enumerating all `2^N` assignments.
pub fn maxsat_oracle(f: &CnfFormula) -> Result<i64, ReduceError> {
    if f.num_vars() > ORACLE_MAX_VARS {
        return Err(ReduceError::BudgetExceeded {
            num_vars: f.num_vars(),
            budget: ORACLE_MAX_VARS,
        });
    }
    // One positive and one negative bitmask per clause make the inner loop
    // two ANDs instead of a literal scan.
    let masks: Vec<(u64, u64)> = f
        .clauses()
        .iter()
        .map(|clause| {
            let mut pos = 0u64;
            let mut neg = 0u64;
            for &lit in clause {
                let bit = 1u64 << (lit.unsigned_abs() - 1);
                if lit > 0 {
                    pos |= bit;
                } else {
                    neg |= bit;
                }
            }
            (pos, neg)
        })
        .collect();

    let mut best = 0;
    for assignment in 0u64..1 << f.num_vars() {
        let satisfied = masks
            .iter()
            .filter(|&&(pos, neg)| assignment & pos != 0 || !assignment & neg != 0)
            .count();
        best = best.max(satisfied);
    }
    Ok(best as i64)
}

/// Reference most-orthogonal-vectors answer by pairwise enumeration:
/// whether some pair has inner product at most `r`, and the exact minimum.
pub fn ovp_oracle(u: &BitVectorSet, v: &BitVectorSet, r: i64) -> Result<(bool, i64), ReduceError> {
    if u.dim() != v.dim() {
        return Err(ReduceError::DimensionMismatch(u.dim(), v.dim()));
    }
    if u.is_empty() || v.is_empty() {
        return Err(ReduceError::EmptySet);
    }
    let mut min_ip = i64::MAX;
    for a in u.vectors() {
        for b in v.vectors() {
            let ip = a.iter().zip(b).filter(|&(&x, &y)| x && y).count() as i64;
            min_ip = min_ip.min(ip);
        }
    }
    Ok((min_ip <= r, min_ip))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::solve::lcwis;

    fn formula(num_vars: u32, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(num_vars, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    /// Independent clause evaluator over full assignments; bit `k` of
    /// `mask` is the value of variable `k + 1`.
    fn clause_satisfied(clause: &[i32], mask: u64) -> bool {
        clause.iter().any(|&lit| {
            let bit = mask >> (lit.unsigned_abs() - 1) & 1 == 1;
            (lit > 0) == bit
        })
    }

    fn set(dim: usize, rows: &[&[u8]]) -> BitVectorSet {
        BitVectorSet::new(
            dim,
            rows.iter()
                .map(|row| row.iter().map(|&b| b == 1).collect())
                .collect(),
        )
        .unwrap()
    }

    fn random_formula(rng: &mut SplitMix64, max_vars: u64, max_clauses: u64) -> CnfFormula {
        loop {
            let num_vars = rng.range(1, max_vars) as u32;
            let num_clauses = rng.range(1, max_clauses) as usize;
            let clauses: Vec<Vec<i32>> = (0..num_clauses)
                .map(|_| {
                    let width = rng.range(1, 3.min(num_vars as u64)) as usize;
                    (0..width)
                        .map(|_| {
                            let var = rng.range(1, num_vars as u64) as i32;
                            if rng.chance() {
                                var
                            } else {
                                -var
                            }
                        })
                        .collect()
                })
                .collect();
            if let Ok(f) = CnfFormula::new(num_vars, clauses) {
                return f;
            }
        }
    }

    #[test]
    fn formula_validation() {
        assert!(CnfFormula::new(2, alloc::vec![alloc::vec![1, -2]]).is_ok());
        assert_eq!(
            CnfFormula::new(2, alloc::vec![alloc::vec![1, 0]]),
            Err(ReduceError::ZeroLiteral { clause: 1 })
        );
        assert_eq!(
            CnfFormula::new(2, alloc::vec![alloc::vec![3]]),
            Err(ReduceError::LiteralOutOfRange {
                clause: 1,
                var: 3,
                num_vars: 2
            })
        );
        assert_eq!(
            CnfFormula::new(2, alloc::vec![alloc::vec![1], alloc::vec![2, -2]]),
            Err(ReduceError::TautologicalClause { clause: 2 })
        );
        // Repeated literals are legal; an empty clause list is legal.
        assert!(CnfFormula::new(1, alloc::vec![alloc::vec![1, 1]]).is_ok());
        assert!(CnfFormula::new(0, alloc::vec![]).is_ok());
    }

    #[test]
    fn split_and_list_contradiction_example() {
        // (x1) and (not x1): one-variable first half, empty second half.
        let f = formula(1, &[&[1], &[-1]]);
        let (u, v) = vectors_from_cnf(&f).unwrap();
        assert_eq!(u.vectors(), set(2, &[&[1, 0], &[0, 1]]).vectors());
        assert_eq!(v.vectors(), set(2, &[&[1, 1]]).vectors());
        assert_eq!(ovp_oracle(&u, &v, 0).unwrap(), (false, 1));
        assert_eq!(maxsat_oracle(&f).unwrap(), 1);
    }

    #[test]
    fn split_and_list_satisfiable_single_clause() {
        let f = formula(2, &[&[1, -2]]);
        let (u, v) = vectors_from_cnf(&f).unwrap();
        assert_eq!(ovp_oracle(&u, &v, 0).unwrap().1, 0);
    }

    #[test]
    fn split_and_list_repeated_clause() {
        let f = formula(1, &[&[1], &[1], &[1], &[1], &[1]]);
        let (u, v) = vectors_from_cnf(&f).unwrap();
        assert_eq!(ovp_oracle(&u, &v, 0).unwrap(), (true, 0));
    }

    #[test]
    fn split_and_list_rejects_empty_formula() {
        let f = formula(0, &[]);
        assert_eq!(vectors_from_cnf(&f), Err(ReduceError::NoVariables));
        let no_clauses = formula(3, &[]);
        assert_eq!(vectors_from_cnf(&no_clauses), Err(ReduceError::NoClauses));
    }

    #[test]
    fn inner_products_count_unsatisfied_clauses() {
        // u[i] . v[j] must equal the clauses missed by the combined
        // assignment, checked against the independent full-mask evaluator.
        let mut rng = SplitMix64::new(0x5A7);
        for _ in 0..40 {
            let f = random_formula(&mut rng, 6, 6);
            let first_count = f.num_vars().div_ceil(2);
            let (u, v) = vectors_from_cnf(&f).unwrap();
            for (i, uv) in u.vectors().iter().enumerate() {
                for (j, vv) in v.vectors().iter().enumerate() {
                    let full = i as u64 | (j as u64) << first_count;
                    let missed = f
                        .clauses()
                        .iter()
                        .filter(|c| !clause_satisfied(c, full))
                        .count();
                    let ip = uv.iter().zip(vv).filter(|&(&x, &y)| x && y).count();
                    assert_eq!(ip, missed);
                }
            }
        }
    }

    #[test]
    fn bit_vector_set_validation() {
        assert_eq!(
            BitVectorSet::new(0, alloc::vec![]),
            Err(ReduceError::ZeroDimension)
        );
        assert_eq!(
            BitVectorSet::new(2, alloc::vec![alloc::vec![true], alloc::vec![true, false]]),
            Err(ReduceError::RaggedVector {
                index: 0,
                got: 1,
                dim: 2
            })
        );
    }

    #[test]
    fn instance_example_single_pair() {
        let u = set(2, &[&[1, 0]]);
        let v = set(2, &[&[1, 1]]);
        let (a, b, cert) = ovp_to_lcwis_instance(&u, &v).unwrap();
        // Gadget lengths 3 and 2 under unit weights, so ell is 3.
        assert_eq!(cert.n, 1);
        assert_eq!(cert.dim, 2);
        assert_eq!(cert.ell, 3);
        assert_eq!(cert.offset, 6);
        let value = lcwis(&a, &b, false).value;
        assert_eq!(value, cert.offset + 1);
        let decoded = decode(&cert, value).unwrap();
        assert_eq!(decoded.min_inner_product, 1);
        assert_eq!(decoded.max_satisfiable, None);
    }

    #[test]
    fn instance_all_ones_vectors() {
        let u = set(3, &[&[1, 1, 1]]);
        let v = set(3, &[&[1, 1, 1]]);
        let (a, b, cert) = ovp_to_lcwis_instance(&u, &v).unwrap();
        let value = lcwis(&a, &b, false).value;
        assert_eq!(value, cert.offset);
        assert_eq!(decode(&cert, value).unwrap().min_inner_product, 3);
    }

    #[test]
    fn instance_rejects_bad_sets() {
        let u = set(2, &[&[1, 0]]);
        let v = set(3, &[&[1, 1, 0]]);
        assert_eq!(
            ovp_to_lcwis_instance(&u, &v),
            Err(ReduceError::DimensionMismatch(2, 3))
        );
        let empty = BitVectorSet::new(2, alloc::vec![]).unwrap();
        assert_eq!(
            ovp_to_lcwis_instance(&u, &empty),
            Err(ReduceError::EmptySet)
        );
    }

    #[test]
    fn random_instances_match_ovp_oracle() {
        let mut rng = SplitMix64::new(0x07);
        for _ in 0..50 {
            let d = rng.range(1, 4) as usize;
            let draw_set = |rng: &mut SplitMix64| {
                let count = rng.range(1, 4) as usize;
                BitVectorSet::new(
                    d,
                    (0..count)
                        .map(|_| (0..d).map(|_| rng.chance()).collect())
                        .collect(),
                )
                .unwrap()
            };
            let u = draw_set(&mut rng);
            let v = draw_set(&mut rng);
            let (a, b, cert) = ovp_to_lcwis_instance(&u, &v).unwrap();
            let decoded = decode(&cert, lcwis(&a, &b, false).value).unwrap();
            let (_, oracle_min) = ovp_oracle(&u, &v, 0).unwrap();
            assert_eq!(decoded.min_inner_product, oracle_min, "u={u:?} v={v:?}");
        }
    }

    #[test]
    fn padding_never_changes_the_minimum() {
        let mut rng = SplitMix64::new(0xFAD);
        for _ in 0..40 {
            let d = rng.range(1, 5) as usize;
            let count = rng.range(1, 4) as usize;
            let rows: Vec<Vec<bool>> = (0..count)
                .map(|_| (0..d).map(|_| rng.chance()).collect())
                .collect();
            let base = BitVectorSet::new(d, rows.clone()).unwrap();
            let mut padded_rows = rows.clone();
            for _ in 0..rng.below(3) {
                padded_rows.push(rows[0].clone());
            }
            let padded = BitVectorSet::new(d, padded_rows).unwrap();
            let other = BitVectorSet::new(
                d,
                (0..2).map(|_| (0..d).map(|_| rng.chance()).collect()).collect(),
            )
            .unwrap();
            assert_eq!(
                ovp_oracle(&base, &other, 0).unwrap().1,
                ovp_oracle(&padded, &other, 0).unwrap().1
            );
        }
    }

    #[test]
    fn decode_band_edges_and_rejection() {
        let cert = ReductionCertificate {
            n: 4,
            dim: 5,
            ell: 7,
            offset: 98,
            num_clauses: Some(5),
        };
        assert_eq!(decode(&cert, 103).unwrap().min_inner_product, 0);
        assert_eq!(decode(&cert, 98).unwrap().min_inner_product, 5);
        assert_eq!(decode(&cert, 100).unwrap().max_satisfiable, Some(2));
        assert_eq!(
            decode(&cert, 97),
            Err(ReduceError::ValueOutOfBand {
                value: 97,
                lo: 98,
                hi: 103
            })
        );
        assert!(decode(&cert, 104).is_err());
    }

    #[test]
    fn maxsat_examples() {
        let contradiction = formula(1, &[&[1], &[-1]]);
        assert_eq!(
            maxsat_via_lcwis(&contradiction, DEFAULT_MAXSAT_BUDGET).unwrap(),
            1
        );

        let satisfiable = formula(2, &[&[1, 2], &[-1]]);
        assert_eq!(
            maxsat_via_lcwis(&satisfiable, DEFAULT_MAXSAT_BUDGET).unwrap(),
            2
        );

        let wide = formula(13, &[&[1], &[13]]);
        assert_eq!(
            maxsat_via_lcwis(&wide, DEFAULT_MAXSAT_BUDGET),
            Err(ReduceError::BudgetExceeded {
                num_vars: 13,
                budget: 12
            })
        );
    }

    #[test]
    fn maxsat_pipeline_matches_oracle() {
        let mut rng = SplitMix64::new(0xCF);
        for _ in 0..60 {
            let f = random_formula(&mut rng, 6, 8);
            assert_eq!(
                maxsat_via_lcwis(&f, DEFAULT_MAXSAT_BUDGET).unwrap(),
                maxsat_oracle(&f).unwrap(),
                "formula {f:?}"
            );
        }
    }

    #[test]
    fn maxsat_oracle_budget() {
        let f = formula(21, &[&[21]]);
        assert_eq!(
            maxsat_oracle(&f),
            Err(ReduceError::BudgetExceeded {
                num_vars: 21,
                budget: 20
            })
        );
    }

    #[test]
    fn ovp_oracle_cases() {
        assert_eq!(
            ovp_oracle(&set(2, &[&[1, 0]]), &set(2, &[&[0, 1]]), 0).unwrap(),
            (true, 0)
        );
        assert_eq!(
            ovp_oracle(&set(2, &[&[1, 1]]), &set(2, &[&[1, 1]]), 1).unwrap(),
            (false, 2)
        );
    }
}
