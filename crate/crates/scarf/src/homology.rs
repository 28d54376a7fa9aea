//! Exact linear algebra and simplicial homology.
//!
//! Ranks are computed over `Q` (fraction-free Bareiss elimination on big
//! integers, so no floating point and no overflow) or over a prime field
//! `F_p` with `p <= 32749` (word-sized modular elimination).

use num::{BigInt, One, Zero};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Coefficient field for homology, exactness and Betti computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u32),
}

/// Largest admissible prime (the biggest prime below `2^15`).
pub const MAX_PRIME: u32 = 32749;

impl Field {
    /// Parse `q` or `p:<prime>`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = t.strip_prefix("p:") {
            let p: u32 = rest
                .parse()
                .map_err(|_| Error::BadField(format!("bad prime {rest:?}")))?;
            return Field::prime(p);
        }
        Err(Error::BadField(format!(
            "expected q or p:<prime>, got {t:?}"
        )))
    }

    pub fn prime(p: u32) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::BadField(format!("prime {p} exceeds {MAX_PRIME}")));
        }
        if !is_prime(p) {
            return Err(Error::BadField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of an integer matrix over the chosen field.
///
/// Row-major input; the empty matrix has rank 0.  Fails when the column
/// count exceeds `limits.homology_columns`.
pub fn matrix_rank(rows: &[Vec<i64>], field: Field, limits: &Limits) -> Result<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    if cols > limits.homology_columns {
        return Err(Error::CapExceeded {
            what: "matrix columns",
            size: cols,
            cap: limits.homology_columns,
        });
    }
    if rows.is_empty() || cols == 0 {
        return Ok(0);
    }
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    match field {
        Field::Rationals => Ok(rank_rational(rows)),
        Field::Prime(p) => Ok(rank_mod_p(rows, u64::from(p))),
    }
}

/// Fraction-free Gaussian elimination (Bareiss): every division is exact,
/// so the rank over `Q` comes out of pure `BigInt` arithmetic.
fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let (nrows, ncols) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    while rank < nrows && rank < ncols {
        // pivot search over the whole remaining submatrix
        let Some((pi, pj)) = (rank..nrows)
            .flat_map(|i| (rank..ncols).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero())
        else {
            break;
        };
        m.swap(rank, pi);
        if pj != rank {
            for row in &mut m {
                row.swap(rank, pj);
            }
        }
        let pivot = m[rank][rank].clone();
        for i in rank + 1..nrows {
            for j in rank + 1..ncols {
                let num = &m[i][j] * &pivot - &m[i][rank] * &m[rank][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][rank] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Standard elimination over `F_p` in machine words.
fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let reduce = |e: i64| -> u64 { e.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&e| reduce(e)).collect())
        .collect();
    let (nrows, ncols) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let Some(pi) = (rank..nrows).find(|&i| m[i][col] != 0) else {
            col += 1;
            continue;
        };
        m.swap(rank, pi);
        let inv = mod_inverse(m[rank][col], p);
        for entry in m[rank].iter_mut().skip(col) {
            *entry = *entry * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let factor = row[col];
                for (entry, &pivot) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *entry = (*entry + (p - factor) * pivot) % p;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// The boundary matrix from `sources` (cardinality k) to `targets`
/// (cardinality k-1): entry `(t, s)` is the incidence sign when removing
/// the j-th vertex (0-based) of the source gives the target.
#[must_use]
pub fn boundary_matrix(sources: &[Face], targets: &[Face]) -> Vec<Vec<i64>> {
    let index: std::collections::HashMap<&Face, usize> =
        targets.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = vec![vec![0i64; sources.len()]; targets.len()];
    for (s, face) in sources.iter().enumerate() {
        for (j, &v) in face.vertices().iter().enumerate() {
            let sub = face.without(v);
            if let Some(&t) = index.get(&sub) {
                m[t][s] = if j % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    m
}

/// Reduced homology ranks of a nonvoid complex, indexed from dimension -1:
/// the returned vector has `dim + 2` entries and `result[d + 1]` is the
/// rank of the reduced homology in dimension `d`.
///
/// The irrelevant complex `{∅}` has a single entry `[1]`.
pub fn reduced_homology_ranks(
    complex: &SimplicialComplex,
    field: Field,
    limits: &Limits,
) -> Result<Vec<usize>> {
    if complex.is_void() {
        return Err(Error::Invariant(
            "reduced homology of the void complex is not defined here".into(),
        ));
    }
    let faces = complex.all_faces();
    let dim = complex.dim().expect("nonvoid complex has a dimension");
    // strata[k] = faces of cardinality k; strata[0] = [∅]
    let mut strata: Vec<Vec<Face>> = vec![Vec::new(); (dim + 2) as usize];
    for f in faces {
        strata[f.cardinality()].push(f);
    }
    // boundary_rank[k] = rank of ∂ from cardinality k to k-1
    let mut boundary_rank = vec![0usize; strata.len() + 1];
    for k in 1..strata.len() {
        let m = boundary_matrix(&strata[k], &strata[k - 1]);
        boundary_rank[k] = matrix_rank(&m, field, limits)?;
    }
    let mut ranks = Vec::with_capacity(strata.len());
    for k in 0..strata.len() {
        // reduced homology in dimension k-1
        let dim_ck = strata[k].len();
        let h = dim_ck - boundary_rank[k] - boundary_rank[k + 1];
        ranks.push(h);
    }
    Ok(ranks)
}

/// True when every reduced homology group over the field vanishes.
pub fn is_acyclic(complex: &SimplicialComplex, field: Field, limits: &Limits) -> Result<bool> {
    Ok(reduced_homology_ranks(complex, field, limits)?
        .iter()
        .all(|&r| r == 0))
}
