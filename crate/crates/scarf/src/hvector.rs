//! The f→h transform, local h-polynomials of labeled triangulations of
//! the coordinate simplex, the decomposition identity `h = Σ_W ℓ_W`, and
//! the counting theorems built on it: the component bound for generic
//! ideals with uniform support size, the bivariate component count, and
//! the interior-face bound for triangulations with marked vertices.
//!
//! Geometry enters only through labels: a vertex of a labeled complex
//! lies in the coordinate face `W` exactly when the support of its
//! label is contained in `W`, so restrictions, interiors and all the
//! h-polynomial machinery reduce to subset sums over support bitmasks.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::complex::{LabeledComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::generic::{extended_scarf_complex, is_generic, scarf_complex};
use crate::ideal::MonomialIdeal;

/// Cap on the variable count for ops sweeping all `2^n` coordinate
/// faces (and, for the decomposition identity, all `3^n` face/subface
/// pairs).
const FACE_SWEEP_CAP: usize = 12;

/// A polynomial with integer coefficients, stored low-to-high with
/// trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    #[must_use]
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    #[must_use]
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    #[must_use]
    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the top nonzero term; `None` for the zero polynomial.
    #[must_use]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `x^i` (0 beyond the stored length).
    #[must_use]
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    #[must_use]
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    #[must_use]
    pub fn padded(&self, len: usize) -> Vec<i64> {
        let mut out = self.coeffs.clone();
        out.resize(len.max(out.len()), 0);
        out
    }

    #[must_use]
    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    #[must_use]
    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    #[must_use]
    pub fn nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Whether the coefficients are palindromic with symmetry axis
    /// `d/2`, i.e. `c_i = c_{d-i}` after padding to `d + 1` entries.
    #[must_use]
    pub fn is_symmetric(&self, d: usize) -> bool {
        if self.coeffs.len() > d + 1 {
            return false;
        }
        let padded = self.padded(d + 1);
        (0..=d).all(|i| padded[i] == padded[d - i])
    }
}

impl fmt::Display for IntPolynomial {
    /// Coefficient list low-to-high, e.g. `[1, 4, 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

fn binomial(k: usize, j: usize) -> i64 {
    if j > k {
        return 0;
    }
    let mut value = 1i64;
    for t in 0..j.min(k - j) {
        value = value * (k - t) as i64 / (t + 1) as i64;
    }
    value
}

/// The f→h transform relative to ambient dimension parameter `d`:
/// `h(x) = Σ_{i=0}^{d} counts[i] · x^i (1-x)^{d-i}`, where `counts[i]`
/// is the number of faces with `i` vertices (`counts[0] = 1` when the
/// empty face is present).  Fails when some face has more than `d`
/// vertices.
fn h_from_counts(counts: &[i64], d: usize) -> Result<IntPolynomial> {
    if let Some(i) = (d + 1..counts.len()).find(|&i| counts[i] != 0) {
        return Err(Error::Precondition(format!(
            "a face has {i} vertices but the ambient simplex has only {d}"
        )));
    }
    let mut h = vec![0i64; d + 1];
    for (i, &count) in counts.iter().enumerate().take(d + 1) {
        // counts[i] · x^i (1-x)^{d-i} adds counts[i]·(-1)^j·C(d-i, j) to h_{i+j}
        for j in 0..=d - i {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            h[i + j] += count * sign * binomial(d - i, j);
        }
    }
    Ok(IntPolynomial::from_coeffs(h))
}

/// The h-polynomial of a simplicial complex relative to ambient
/// dimension parameter `d` (facets of the reference simplex have `d`
/// vertices).  Requires `dim K ≤ d - 1`.
pub fn h_polynomial(complex: &SimplicialComplex, d: usize) -> Result<IntPolynomial> {
    let f: Vec<i64> = complex.f_vector().iter().map(|&c| c as i64).collect();
    h_from_counts(&f, d)
}

/// Face-support statistics of a labeled complex viewed as a candidate
/// triangulation of the coordinate simplex on its variables.  Each face
/// is bucketed by the support of its label; restrictions to coordinate
/// faces, their interiors, and all h-polynomial computations are then
/// subset sums over the buckets.
pub struct SupportProfile {
    num_vars: usize,
    names: Vec<String>,
    /// `exact[m][i]`: faces with label-support bitmask exactly `m` and
    /// `i` vertices.  These are the faces in the relative interior of
    /// the coordinate face `m`.
    exact: Vec<Vec<i64>>,
    /// `within[m][i]`: faces with label support contained in `m` and
    /// `i` vertices — the f-vector of the restriction to `m`.
    within: Vec<Vec<i64>>,
}

impl SupportProfile {
    pub fn new(labeled: &LabeledComplex) -> Result<Self> {
        let n = labeled.num_vars();
        if n > FACE_SWEEP_CAP {
            return Err(Error::CapExceeded {
                what: "coordinate-face sweep variables",
                size: n,
                cap: FACE_SWEEP_CAP,
            });
        }
        let max_card = labeled
            .labels()
            .keys()
            .map(crate::complex::Face::cardinality)
            .max()
            .unwrap_or(0);
        let mut exact = vec![vec![0i64; max_card + 1]; 1 << n];
        for (face, label) in labeled.labels() {
            let mask: usize = label.support().iter().map(|s| 1 << s).sum();
            exact[mask][face.cardinality()] += 1;
        }
        // subset sums: within[m] = Σ_{m' ⊆ m} exact[m']
        let mut within = exact.clone();
        for b in 0..n {
            for m in 0..1usize << n {
                if m >> b & 1 == 1 {
                    // `m ^ (1 << b) < m` because bit `b` is set in `m`.
                    let (below, from_m) = within.split_at_mut(m);
                    for (acc, &prev) in from_m[0].iter_mut().zip(&below[m ^ (1 << b)]) {
                        *acc += prev;
                    }
                }
            }
        }
        Ok(SupportProfile {
            num_vars: n,
            names: labeled.names().to_vec(),
            exact,
            within,
        })
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    fn full_mask(&self) -> usize {
        (1 << self.num_vars) - 1
    }

    fn face_names(&self, mask: usize) -> Vec<String> {
        (0..self.num_vars)
            .filter(|s| mask >> s & 1 == 1)
            .map(|s| self.names[s].clone())
            .collect()
    }

    /// The h-polynomial of the restriction to the coordinate face
    /// `mask`, relative to that face's own vertex count.
    pub fn restriction_h(&self, mask: usize) -> Result<IntPolynomial> {
        h_from_counts(&self.within[mask], mask.count_ones() as usize)
    }

    /// The h-polynomial of the relative interior of the restriction to
    /// `mask` (faces whose label support is exactly `mask`).
    pub fn interior_h(&self, mask: usize) -> Result<IntPolynomial> {
        h_from_counts(&self.exact[mask], mask.count_ones() as usize)
    }

    /// The h-polynomial of the whole complex relative to the full
    /// coordinate simplex.
    pub fn h(&self) -> Result<IntPolynomial> {
        self.restriction_h(self.full_mask())
    }

    /// The local h-polynomial of the restriction to `mask`, by
    /// inclusion-exclusion over its coordinate subfaces:
    /// `ℓ_W = Σ_{F ⊆ W} (-1)^{#W-#F} h(Γ_F)`.
    pub fn local_h(&self, mask: usize) -> Result<IntPolynomial> {
        let w_size = mask.count_ones();
        let mut total = IntPolynomial::zero();
        let mut f = mask;
        loop {
            let term = self.restriction_h(f)?;
            if (w_size - f.count_ones()).is_multiple_of(2) {
                total = total.add(&term);
            } else {
                total = total.sub(&term);
            }
            if f == 0 {
                break;
            }
            f = (f - 1) & mask;
        }
        Ok(total)
    }

    /// Vertices whose label support is exactly `mask` (they sit in the
    /// relative interior of that coordinate face).
    #[must_use]
    pub fn interior_vertices(&self, mask: usize) -> i64 {
        self.exact[mask].get(1).copied().unwrap_or(0)
    }

    /// Interior face counts of the whole complex by vertex count
    /// (`counts[i]` = interior faces with `i` vertices).
    #[must_use]
    pub fn interior_counts(&self) -> &[i64] {
        &self.exact[self.full_mask()]
    }
}

/// The local h-polynomial `ℓ_W` of a labeled complex at the coordinate
/// face spanned by the given variables.
pub fn local_h(labeled: &LabeledComplex, vars: &[usize]) -> Result<IntPolynomial> {
    let n = labeled.num_vars();
    let mut mask = 0usize;
    for &s in vars {
        if s >= n {
            return Err(Error::Precondition(format!(
                "variable index {s} out of range for {n} variables"
            )));
        }
        mask |= 1 << s;
    }
    SupportProfile::new(labeled)?.local_h(mask)
}

/// One nonzero local h-polynomial in the decomposition `h = Σ_W ℓ_W`.
#[derive(Debug, Clone, Serialize)]
pub struct LocalPart {
    /// The coordinate face `W`, as variable names.
    pub face: Vec<String>,
    pub local_h: IntPolynomial,
}

/// The decomposition of the h-polynomial of a labeled triangulation
/// into local h-polynomials.
#[derive(Debug, Clone, Serialize)]
pub struct LocalDecomposition {
    pub h: IntPolynomial,
    /// `h(1)`, which equals the facet count for a pure triangulation.
    pub h_at_one: i64,
    pub facets: usize,
    /// The coordinate faces with nonzero local h-polynomial.
    pub locals: Vec<LocalPart>,
    /// `Σ_W ℓ_W` over all `2^n` coordinate faces.
    pub sum: IntPolynomial,
    /// Whether `h = Σ_W ℓ_W` exactly.
    pub holds: bool,
}

/// Verify the identity `h(Γ, x) = Σ_{W} ℓ_W(Γ_W, x)` over all
/// coordinate faces `W`.
pub fn check_decomposition(labeled: &LabeledComplex) -> Result<LocalDecomposition> {
    let profile = SupportProfile::new(labeled)?;
    let h = profile.h()?;
    let mut sum = IntPolynomial::zero();
    let mut locals = Vec::new();
    for mask in 0..1usize << profile.num_vars() {
        let ell = profile.local_h(mask)?;
        if !ell.is_zero() {
            locals.push(LocalPart {
                face: profile.face_names(mask),
                local_h: ell.clone(),
            });
        }
        sum = sum.add(&ell);
    }
    Ok(LocalDecomposition {
        h_at_one: h.eval(1),
        facets: labeled.complex().facets().len(),
        holds: h == sum,
        h,
        locals,
        sum,
    })
}

/// Properties of one local h-polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct LocalHEntry {
    /// The coordinate face `W`, as variable names.
    pub face: Vec<String>,
    /// Coefficients padded to `#W + 1` entries.
    pub local_h: Vec<i64>,
    /// Vertices in the relative interior of `W`.
    pub interior_vertices: i64,
    pub nonnegative: bool,
    /// `ℓ_i = ℓ_{#W-i}`.
    pub symmetric: bool,
    /// `ℓ_1` counts the interior vertices (only meaningful for
    /// `#W ≥ 2`; vacuously true below that).
    pub ell_one_matches: bool,
    /// `ℓ_i ≥ ℓ_1` for `1 ≤ i ≤ #W - 1`.
    pub middle_dominates: bool,
    /// The h-vector of the relative interior of `Γ_W` is the reverse
    /// of the h-vector of `Γ_W`.
    pub interior_reversed: bool,
}

/// Local h-polynomial properties across all coordinate faces.
#[derive(Debug, Clone, Serialize)]
pub struct LocalHProperties {
    /// Number of coordinate faces swept (`2^n`).
    pub faces_checked: usize,
    /// Entries for faces with a nonzero local h-polynomial or a
    /// nonempty relative interior.
    pub entries: Vec<LocalHEntry>,
    pub nonnegative: bool,
    pub symmetric: bool,
    pub ell_one_counts_interior_vertices: bool,
    pub middle_dominates_ell_one: bool,
    pub interior_h_reversed: bool,
    /// All five properties across all faces.
    pub holds: bool,
}

/// Evaluate, for every coordinate face `W`, the expected properties of
/// the local h-polynomial of a triangulation restricted to `W`:
/// nonnegativity, symmetry, `ℓ_1` = interior vertex count, the
/// intermediate-coefficient bound `ℓ_i ≥ ℓ_1`, and the reversal
/// relation between the h-vectors of `Γ_W` and its relative interior.
/// Nonnegativity and the intermediate bound are theorems for regular
/// triangulations, which the Scarf pipeline produces; failures are
/// reported rather than asserted.
pub fn check_local_h_properties(labeled: &LabeledComplex) -> Result<LocalHProperties> {
    let profile = SupportProfile::new(labeled)?;
    let n = profile.num_vars();
    let mut entries = Vec::new();
    let mut all = [true; 5];
    for mask in 0..1usize << n {
        let w_size = mask.count_ones() as usize;
        let ell = profile.local_h(mask)?;
        let padded = ell.padded(w_size + 1);
        let interior_vertices = profile.interior_vertices(mask);

        let nonnegative = ell.nonnegative();
        let symmetric = ell.is_symmetric(w_size);
        let ell_one_matches = w_size < 2 || padded[1] == interior_vertices;
        let middle_dominates = (1..w_size).all(|i| padded[i] >= padded[1]);
        let interior_reversed = {
            let h = profile.restriction_h(mask)?.padded(w_size + 1);
            let interior = profile.interior_h(mask)?.padded(w_size + 1);
            (0..=w_size).all(|i| interior[i] == h[w_size - i])
        };

        let flags = [
            nonnegative,
            symmetric,
            ell_one_matches,
            middle_dominates,
            interior_reversed,
        ];
        for (slot, &flag) in all.iter_mut().zip(&flags) {
            *slot &= flag;
        }
        if !ell.is_zero() || interior_vertices > 0 || flags.iter().any(|&f| !f) {
            entries.push(LocalHEntry {
                face: profile.face_names(mask),
                local_h: padded,
                interior_vertices,
                nonnegative,
                symmetric,
                ell_one_matches,
                middle_dominates,
                interior_reversed,
            });
        }
    }
    Ok(LocalHProperties {
        faces_checked: 1 << n,
        entries,
        nonnegative: all[0],
        symmetric: all[1],
        ell_one_counts_interior_vertices: all[2],
        middle_dominates_ell_one: all[3],
        interior_h_reversed: all[4],
        holds: all.iter().all(|&f| f),
    })
}

/// One coordinate face's contribution in the component-bound ledger.
#[derive(Debug, Clone, Serialize)]
pub struct LedgerEntry {
    /// The coordinate face `W` (of size `c`), as variable names.
    pub face: Vec<String>,
    /// `ℓ_W` padded to `c + 1` entries.
    pub local_h: Vec<i64>,
    /// Generators whose support is exactly `W`.
    pub generators_with_support: usize,
    pub ell_one: i64,
    /// `ℓ_W(1)`, this face's contribution to the facet count.
    pub contribution: i64,
}

/// The component bound for generic ideals with uniform support size.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentBoundReport {
    /// False when the generator supports do not all have one size.
    pub applicable: bool,
    pub support_size: Option<usize>,
    pub generators: usize,
    pub components: usize,
    /// Facets of the extended Scarf complex (equals `components` for
    /// generic ideals).
    pub facets: usize,
    /// `(c-1)·r + 1`.
    pub bound: Option<usize>,
    pub holds: Option<bool>,
    /// Per-face replay of the proof for `#W = c`: `ℓ_1` counts the
    /// generators supported on `W` and every middle coefficient
    /// dominates it, so `h(Γ,1) ≥ 1 + Σ_W (c-1)·ℓ_1 = (c-1)·r + 1`.
    pub ledger: Vec<LedgerEntry>,
    /// The ledger identities all hold (`deg ℓ_W < c`, `ℓ_0 = 0`,
    /// `ℓ_1` = generator count, dominance, `Σ ℓ_1 = r`, and
    /// `h(Γ,1) = facets = components`); vacuous for `c = 1`.
    pub ledger_consistent: bool,
}

/// For a generic ideal whose `r` generators all have support of size
/// `c`, the irreducible components number at least `(c-1)·r + 1`.
/// Refuses non-generic input; reports `applicable: false` when the
/// support sizes are not uniform.
pub fn check_component_bound(ideal: &MonomialIdeal) -> Result<ComponentBoundReport> {
    let genericity = is_generic(ideal)?;
    if !genericity.generic {
        return Err(Error::NotGeneric(
            "the component bound is only claimed for generic ideals".into(),
        ));
    }
    let r = ideal.generators().len();
    let components = ideal.irreducible_decomposition()?.components().len();
    let labeled = extended_scarf_complex(ideal)?;
    let facets = labeled.complex().facets().len();

    let sizes: BTreeSet<usize> = ideal.generators().iter().map(|m| m.support_size()).collect();
    if sizes.len() != 1 {
        return Ok(ComponentBoundReport {
            applicable: false,
            support_size: None,
            generators: r,
            components,
            facets,
            bound: None,
            holds: None,
            ledger: Vec::new(),
            ledger_consistent: true,
        });
    }
    let c = *sizes.first().expect("nonempty by construction");

    let profile = SupportProfile::new(&labeled)?;
    let mut ledger = Vec::new();
    let mut consistent = profile.h()?.eval(1) == facets as i64 && facets == components;
    if c >= 2 {
        let mut total_ell_one = 0i64;
        for mask in 0..1usize << profile.num_vars() {
            if mask.count_ones() as usize != c {
                continue;
            }
            let gens_here = ideal
                .generators()
                .iter()
                .filter(|m| {
                    let support: usize = m.support().iter().map(|s| 1 << s).sum();
                    support == mask
                })
                .count();
            let ell = profile.local_h(mask)?;
            if ell.is_zero() && gens_here == 0 {
                continue;
            }
            let padded = ell.padded(c + 1);
            total_ell_one += padded[1];
            consistent &= padded[0] == 0
                && padded[c] == 0
                && padded[1] == gens_here as i64
                && (1..c).all(|i| padded[i] >= padded[1]);
            ledger.push(LedgerEntry {
                face: profile.face_names(mask),
                local_h: padded,
                generators_with_support: gens_here,
                ell_one: ell.coeff(1),
                contribution: ell.eval(1),
            });
        }
        consistent &= total_ell_one == r as i64;
    }

    let bound = (c - 1) * r + 1;
    Ok(ComponentBoundReport {
        applicable: true,
        support_size: Some(c),
        generators: r,
        components,
        facets,
        bound: Some(bound),
        holds: Some(components >= bound),
        ledger,
        ledger_consistent: consistent,
    })
}

/// The exact component count for generic ideals with bivariate
/// generators.
#[derive(Debug, Clone, Serialize)]
pub struct BivariateReport {
    pub generators: usize,
    pub components: usize,
    /// `r + 1`.
    pub expected: usize,
    /// Edge count of the Scarf complex.
    pub edges: usize,
    pub max_edge_support: Option<usize>,
    /// Every Scarf edge's degree has support of size at most 3.
    pub all_edges_small: bool,
    /// `components == r + 1`.
    pub count_exact: bool,
    /// The two sides of the equivalence agree.
    pub holds: bool,
}

/// For a generic ideal with `r` bivariate generators, the component
/// count equals `r + 1` exactly when every edge `σ` of the Scarf
/// complex has `#supp(m_σ) ≤ 3`.  Verifies the equivalence in both
/// directions.  Refuses non-generic or non-bivariate input.
pub fn check_bivariate(ideal: &MonomialIdeal) -> Result<BivariateReport> {
    let genericity = is_generic(ideal)?;
    if !genericity.generic {
        return Err(Error::NotGeneric(
            "the bivariate component count is only claimed for generic ideals".into(),
        ));
    }
    if let Some(m) = ideal.generators().iter().find(|m| m.support_size() != 2) {
        return Err(Error::Precondition(format!(
            "generator {} is not bivariate",
            m.render(ideal.names())
        )));
    }
    let r = ideal.generators().len();
    let components = ideal.irreducible_decomposition()?.components().len();
    let scarf = scarf_complex(ideal)?;
    let edge_supports: Vec<usize> = scarf
        .complex()
        .all_faces()
        .iter()
        .filter(|f| f.cardinality() == 2)
        .map(|f| scarf.label(f).support_size())
        .collect();
    let all_edges_small = edge_supports.iter().all(|&s| s <= 3);
    let count_exact = components == r + 1;
    Ok(BivariateReport {
        generators: r,
        components,
        expected: r + 1,
        edges: edge_supports.len(),
        max_edge_support: edge_supports.iter().max().copied(),
        all_edges_small,
        count_exact,
        holds: count_exact == all_edges_small,
    })
}

/// The interior-face count bound for triangulations of the coordinate
/// simplex with marked vertices.
#[derive(Debug, Clone, Serialize)]
pub struct InteriorFaceBoundReport {
    /// The stratum parameter `c`.
    pub support_size: usize,
    pub num_vars: usize,
    /// Vertices whose label support has size exactly `c` — they sit in
    /// the relative interior of a `(c-1)`-dimensional coordinate face.
    pub stratum_vertices: i64,
    /// Interior faces with at most `n - c` vertices (the hypothesis
    /// requires none).
    pub small_interior_faces: i64,
    /// Interior faces with exactly `n - c + 1` vertices.
    pub target_interior_faces: i64,
    pub hypothesis_holds: bool,
    /// `target ≥ stratum_vertices`, evaluated when the hypothesis
    /// holds.
    pub bound: Option<bool>,
    /// The implication: hypothesis failing makes it vacuous.
    pub holds: bool,
}

/// For a triangulation of the coordinate simplex with `r` vertices in
/// the relative interiors of `(c-1)`-dimensional coordinate faces and
/// no interior face of fewer than `n - c + 1` vertices, the interior
/// faces with exactly `n - c + 1` vertices number at least `r`.  The
/// bound has content for `c ≥ 2`; for `c = 1` only the trivial
/// triangulation satisfies the hypothesis.
pub fn check_interior_face_bound(
    labeled: &LabeledComplex,
    c: usize,
) -> Result<InteriorFaceBoundReport> {
    let n = labeled.num_vars();
    if c == 0 || c > n {
        return Err(Error::Precondition(format!(
            "stratum parameter {c} must be between 1 and the variable count {n}"
        )));
    }
    let profile = SupportProfile::new(labeled)?;
    let stratum_vertices: i64 = (0..1usize << n)
        .filter(|m| m.count_ones() as usize == c)
        .map(|m| profile.interior_vertices(m))
        .sum();
    let interior = profile.interior_counts();
    let small: i64 = interior.iter().take(n - c + 1).sum();
    let target = interior.get(n - c + 1).copied().unwrap_or(0);
    let hypothesis_holds = small == 0;
    let bound = hypothesis_holds.then_some(target >= stratum_vertices);
    Ok(InteriorFaceBoundReport {
        support_size: c,
        num_vars: n,
        stratum_vertices,
        small_interior_faces: small,
        target_interior_faces: target,
        hypothesis_holds,
        bound,
        holds: bound.unwrap_or(true),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::{co_scarf, excess};
    use crate::complex::{Face, Vertex};
    use crate::corpus::{
        cm_triple_example, cogeneric_example, generic_example, paired_variables_ideal,
        permutahedron_ideal, random_cogeneric, random_generic, rng_from_seed, tree_ideal,
    };
    use crate::homology::Field;
    use crate::limits::Limits;
    use crate::resolution::is_cm;
    use rand::seq::SliceRandom;
    use rand::Rng;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.to_vec())
    }

    /// A random generic ideal whose generators all have support size c:
    /// per-variable exponents are globally distinct, so no positive
    /// exponent is ever shared.
    fn random_uniform_support(
        rng: &mut impl Rng,
        n: usize,
        r: usize,
        c: usize,
    ) -> MonomialIdeal {
        loop {
            let mut pools: Vec<Vec<u32>> = (0..n)
                .map(|_| {
                    let mut pool: Vec<u32> = (1..=r as u32).collect();
                    pool.shuffle(rng);
                    pool
                })
                .collect();
            let vars: Vec<usize> = (0..n).collect();
            let gens: Vec<Vec<u32>> = (0..r)
                .map(|_| {
                    let mut row = vec![0u32; n];
                    for &s in vars.choose_multiple(rng, c) {
                        row[s] = pools[s].pop().expect("pool sized to r");
                    }
                    row
                })
                .collect();
            let rows: Vec<&[u32]> = gens.iter().map(Vec::as_slice).collect();
            let ideal = MonomialIdeal::from_exps(n, &rows).unwrap();
            // minimalization can drop generators; keep full-size samples
            if ideal.generators().len() == r {
                return ideal;
            }
        }
    }

    #[test]
    fn int_polynomial_arithmetic() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs(), &[1, 2]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.eval(3), 7);
        let q = poly(&[0, 1]);
        assert_eq!(p.mul(&q).coeffs(), &[0, 1, 2]);
        assert_eq!(p.sub(&p), IntPolynomial::zero());
        assert_eq!(p.add(&q).coeffs(), &[1, 3]);
        assert!(IntPolynomial::zero().is_zero());
        assert_eq!(IntPolynomial::one().eval(5), 1);
        assert_eq!(p.padded(4), vec![1, 2, 0, 0]);
        assert!(poly(&[0, 1, 1, 0]).is_symmetric(3));
        assert!(!poly(&[1, 2]).is_symmetric(3));
        assert!(!poly(&[1, 2, 2, 1, 5]).is_symmetric(3));
        assert_eq!(format!("{}", poly(&[1, 4, 1])), "[1, 4, 1]");
    }

    #[test]
    fn h_transform_fixed_values() {
        // one facet with d vertices: h = 1
        for d in 1..=4 {
            let facet: Face = (0..d).map(Vertex::Var).collect();
            let k = SimplicialComplex::from_faces(vec![facet]);
            assert_eq!(h_polynomial(&k, d).unwrap(), IntPolynomial::one());
        }
        // boundary of a triangle, ambient parameter 2
        let boundary = SimplicialComplex::from_faces(vec![
            Face::new(vec![Vertex::Var(0), Vertex::Var(1)]),
            Face::new(vec![Vertex::Var(1), Vertex::Var(2)]),
            Face::new(vec![Vertex::Var(0), Vertex::Var(2)]),
        ]);
        let h = h_polynomial(&boundary, 2).unwrap();
        assert_eq!(h, poly(&[1, 1, 1]));
        assert_eq!(h.eval(1), 3);
        // a 2-dimensional face cannot live in a 1-dimensional ambient simplex
        let solid = SimplicialComplex::from_faces(vec![Face::new(vec![
            Vertex::Var(0),
            Vertex::Var(1),
            Vertex::Var(2),
        ])]);
        assert!(matches!(
            h_polynomial(&solid, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn tree_three_triangulation_has_barycentric_h_vector() {
        let labeled = extended_scarf_complex(&tree_ideal(3).unwrap()).unwrap();
        let profile = SupportProfile::new(&labeled).unwrap();
        let h = profile.h().unwrap();
        assert_eq!(h, poly(&[1, 4, 1]));
        assert_eq!(h.eval(1), 6);
        assert_eq!(labeled.complex().facets().len(), 6);
        // the barycenter is the unique fully interior vertex
        assert_eq!(profile.interior_vertices(0b111), 1);
        // local h-polynomials: x on each edge of the triangle, x + x^2 inside
        assert_eq!(profile.local_h(0).unwrap(), IntPolynomial::one());
        for mask in [0b001usize, 0b010, 0b100] {
            assert_eq!(profile.local_h(mask).unwrap(), IntPolynomial::zero());
        }
        for mask in [0b011usize, 0b101, 0b110] {
            assert_eq!(profile.local_h(mask).unwrap(), poly(&[0, 1]));
        }
        assert_eq!(profile.local_h(0b111).unwrap(), poly(&[0, 1, 1]));
        // and through the public wrapper
        assert_eq!(local_h(&labeled, &[0, 1, 2]).unwrap(), poly(&[0, 1, 1]));
    }

    #[test]
    fn trivial_triangulation_has_no_local_contribution() {
        // a complete intersection of pure powers: the extended Scarf
        // complex is the coordinate simplex itself
        let m = MonomialIdeal::from_exps(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]).unwrap();
        let labeled = extended_scarf_complex(&m).unwrap();
        let profile = SupportProfile::new(&labeled).unwrap();
        assert_eq!(profile.h().unwrap(), IntPolynomial::one());
        for mask in 1..8usize {
            assert_eq!(profile.local_h(mask).unwrap(), IntPolynomial::zero());
        }
        let report = check_decomposition(&labeled).unwrap();
        assert!(report.holds);
        assert_eq!(report.h, IntPolynomial::one());
        assert_eq!(report.locals.len(), 1); // only W = ∅
        let props = check_local_h_properties(&labeled).unwrap();
        assert!(props.holds);
    }

    #[test]
    fn decomposition_identity_on_fixtures() {
        // pure triangulations of the coordinate simplex: extended Scarf
        // complexes of generic ideals and co-Scarf complexes of
        // cogeneric ones; there h(1) also counts the facets
        let complexes = vec![
            extended_scarf_complex(&tree_ideal(3).unwrap()).unwrap(),
            extended_scarf_complex(&generic_example()).unwrap(),
            co_scarf(&cogeneric_example(), None).unwrap().labeled().clone(),
            co_scarf(&cm_triple_example().unwrap(), None)
                .unwrap()
                .labeled()
                .clone(),
            co_scarf(&permutahedron_ideal(3).unwrap(), None)
                .unwrap()
                .labeled()
                .clone(),
        ];
        for labeled in &complexes {
            assert!(labeled.complex().is_pure());
            let report = check_decomposition(labeled).unwrap();
            assert!(report.holds, "h != sum of local h");
            assert_eq!(report.h_at_one, report.facets as i64);
        }
    }

    #[test]
    fn decomposition_identity_is_formal_off_triangulations() {
        // the permutahedron ideal is cogeneric but NOT generic: its
        // extended Scarf complex is not pure, h(1) misses the facet
        // count, yet the decomposition identity still holds (it is a
        // formal inclusion-exclusion inversion)
        let labeled = extended_scarf_complex(&permutahedron_ideal(3).unwrap()).unwrap();
        assert!(!labeled.complex().is_pure());
        let report = check_decomposition(&labeled).unwrap();
        assert!(report.holds);
        assert_ne!(report.h_at_one, report.facets as i64);
    }

    #[test]
    fn decomposition_identity_on_random_complexes() {
        let mut rng = rng_from_seed(41);
        for _ in 0..10 {
            let m = random_generic(&mut rng, 3, 4, 4).unwrap();
            let labeled = extended_scarf_complex(&m).unwrap();
            let report = check_decomposition(&labeled).unwrap();
            assert!(report.holds, "decomposition fails for {}", m.render());
            assert_eq!(report.h_at_one, report.facets as i64);
        }
        for _ in 0..6 {
            let m = random_cogeneric(&mut rng, 3, 3, 4).unwrap();
            let labeled = co_scarf(&m, None).unwrap().labeled().clone();
            let report = check_decomposition(&labeled).unwrap();
            assert!(report.holds, "decomposition fails for {}", m.render());
        }
    }

    #[test]
    fn local_h_properties_on_fixtures() {
        for labeled in [
            extended_scarf_complex(&tree_ideal(3).unwrap()).unwrap(),
            co_scarf(&cogeneric_example(), None).unwrap().labeled().clone(),
        ] {
            let props = check_local_h_properties(&labeled).unwrap();
            assert!(props.nonnegative);
            assert!(props.symmetric);
            assert!(props.ell_one_counts_interior_vertices);
            assert!(props.middle_dominates_ell_one);
            assert!(props.interior_h_reversed);
            assert!(props.holds);
        }
    }

    #[test]
    fn local_h_properties_on_random_complexes() {
        let mut rng = rng_from_seed(59);
        for _ in 0..10 {
            let m = random_generic(&mut rng, 3, 4, 4).unwrap();
            let labeled = extended_scarf_complex(&m).unwrap();
            let props = check_local_h_properties(&labeled).unwrap();
            assert!(props.holds, "local h property fails for {}", m.render());
        }
        for _ in 0..6 {
            let m = random_cogeneric(&mut rng, 3, 3, 4).unwrap();
            let labeled = co_scarf(&m, None).unwrap().labeled().clone();
            let props = check_local_h_properties(&labeled).unwrap();
            assert!(props.holds, "local h property fails for {}", m.render());
        }
    }

    #[test]
    fn component_bound_fixtures() {
        // nonuniform supports: not applicable, but still reported
        let report = check_component_bound(&tree_ideal(3).unwrap()).unwrap();
        assert!(!report.applicable);
        assert_eq!(report.support_size, None);
        assert!(report.ledger_consistent);

        // <x1,y1> ∩ <x2,y2>: uniform support size 2 with only 2
        // components — far below (c-1)r+1 = 5 — but not generic, so the
        // op refuses and the bound is not contradicted
        let paired = paired_variables_ideal(2).unwrap();
        assert_eq!(paired.generators().len(), 4);
        assert_eq!(
            paired.irreducible_decomposition().unwrap().components().len(),
            2
        );
        assert!(matches!(
            check_component_bound(&paired),
            Err(Error::NotGeneric(_))
        ));

        // a generic uniform-support instance, by hand
        let m = MonomialIdeal::from_exps(3, &[&[1, 2, 0], &[2, 0, 1], &[0, 1, 2]]).unwrap();
        let report = check_component_bound(&m).unwrap();
        assert!(report.applicable);
        assert_eq!(report.support_size, Some(2));
        assert_eq!(report.bound, Some(4));
        assert_eq!(report.holds, Some(true));
        assert!(report.ledger_consistent);
        assert_eq!(report.components, report.facets);
        let total: i64 = report.ledger.iter().map(|e| e.ell_one).sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn component_bound_on_random_uniform_ideals() {
        let mut rng = rng_from_seed(67);
        for _ in 0..12 {
            let n = rng.gen_range(3..=4);
            let c = rng.gen_range(2..=n.min(3));
            let r = rng.gen_range(2..=4);
            let m = random_uniform_support(&mut rng, n, r, c);
            assert!(is_generic(&m).unwrap().generic);
            let report = check_component_bound(&m).unwrap();
            assert!(report.applicable, "nonuniform sample {}", m.render());
            assert_eq!(report.holds, Some(true), "bound fails for {}", m.render());
            assert!(report.ledger_consistent, "ledger broken for {}", m.render());
        }
    }

    #[test]
    fn bivariate_fixtures() {
        // <xy, yz> shares the y-exponent with no witness: not generic,
        // and indeed its component count 2 misses r + 1 = 3
        let probe = MonomialIdeal::from_exps(3, &[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        assert_eq!(
            probe.irreducible_decomposition().unwrap().components().len(),
            2
        );
        assert!(matches!(check_bivariate(&probe), Err(Error::NotGeneric(_))));

        // a single bivariate generator: no edges, exactly r + 1 = 2
        let single = MonomialIdeal::from_exps(2, &[&[1, 1]]).unwrap();
        let report = check_bivariate(&single).unwrap();
        assert_eq!(report.components, 2);
        assert_eq!(report.edges, 0);
        assert!(report.count_exact && report.all_edges_small && report.holds);

        // <xy, zw>: the edge has support size 4, and the count jumps to 4
        let disjoint = MonomialIdeal::from_exps(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]).unwrap();
        let report = check_bivariate(&disjoint).unwrap();
        assert_eq!(report.components, 4);
        assert_eq!(report.expected, 3);
        assert_eq!(report.max_edge_support, Some(4));
        assert!(!report.count_exact && !report.all_edges_small && report.holds);

        // all three edges small: exactly r + 1
        let small = MonomialIdeal::from_exps(3, &[&[1, 2, 0], &[2, 0, 1], &[0, 1, 2]]).unwrap();
        let report = check_bivariate(&small).unwrap();
        assert!(report.all_edges_small);
        assert_eq!(report.components, 4);
        assert!(report.count_exact && report.holds);

        // non-bivariate input is refused
        assert!(matches!(
            check_bivariate(&generic_example()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn bivariate_equivalence_on_random_ideals() {
        let mut rng = rng_from_seed(83);
        for _ in 0..15 {
            let n = rng.gen_range(3..=5);
            let r = rng.gen_range(2..=4);
            let m = random_uniform_support(&mut rng, n, r, 2);
            let report = check_bivariate(&m).unwrap();
            assert!(report.holds, "equivalence fails for {}", m.render());
        }
    }

    #[test]
    fn interior_face_bound_fixtures() {
        // CM codimension-2 ideal with three components: the co-Scarf
        // triangulation has three marked vertices and at least three
        // interior faces of the target size
        let co = co_scarf(&cm_triple_example().unwrap(), None).unwrap();
        let report = check_interior_face_bound(co.labeled(), 2).unwrap();
        assert_eq!(report.stratum_vertices, 3);
        assert!(report.hypothesis_holds);
        assert!(report.target_interior_faces >= 3);
        assert_eq!(report.bound, Some(true));
        assert!(report.holds);

        // depth-0 cogeneric example: an interior vertex kills the
        // hypothesis, so the bound is vacuous
        let co = co_scarf(&cogeneric_example(), None).unwrap();
        let report = check_interior_face_bound(co.labeled(), 2).unwrap();
        assert!(!report.hypothesis_holds);
        assert_eq!(report.bound, None);
        assert!(report.holds);

        // c = 1 on a subdivided triangulation: interior walls always
        // exist, so the statement is vacuous there too
        let labeled = extended_scarf_complex(&tree_ideal(3).unwrap()).unwrap();
        let report = check_interior_face_bound(&labeled, 1).unwrap();
        assert!(!report.hypothesis_holds);
        assert!(report.holds);

        // out-of-range stratum parameter
        assert!(matches!(
            check_interior_face_bound(&labeled, 4),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn interior_face_bound_on_cm_cogeneric_samples() {
        let limits = Limits::default();
        let mut rng = rng_from_seed(97);
        let mut checked = 0;
        let mut attempts = 0;
        while checked < 8 && attempts < 400 {
            attempts += 1;
            let m = random_cogeneric(&mut rng, 3, 3, 4).unwrap();
            let codims: BTreeSet<usize> = m
                .irreducible_decomposition()
                .unwrap()
                .components()
                .iter()
                .map(|comp| comp.codim())
                .collect();
            if codims.len() != 1 || !is_cm(&m, Field::Rationals, &limits).unwrap() {
                continue;
            }
            let c = *codims.first().unwrap();
            if c < 2 {
                continue;
            }
            checked += 1;
            let co = co_scarf(&m, None).unwrap();
            let report = check_interior_face_bound(co.labeled(), c).unwrap();
            assert!(report.hypothesis_holds, "CM sample {} has small interior faces", m.render());
            assert_eq!(report.bound, Some(true), "bound fails for {}", m.render());
        }
        assert!(checked > 0, "no CM uniform-codimension samples found");
    }

    #[test]
    fn excess_edge_forces_extra_generators() {
        // for a cogeneric ideal with uniform codimension c that is not
        // CM, some co-Scarf edge has excess ≥ c and the generator count
        // strictly exceeds (c-1)·r + 1
        let limits = Limits::default();
        let mut rng = rng_from_seed(101);
        let mut non_cm_seen = 0;
        let mut attempts = 0;
        while non_cm_seen < 5 && attempts < 600 {
            attempts += 1;
            let m = random_cogeneric(&mut rng, 4, 3, 4).unwrap();
            let decomposition = m.irreducible_decomposition().unwrap();
            let codims: BTreeSet<usize> = decomposition
                .components()
                .iter()
                .map(|comp| comp.codim())
                .collect();
            if codims.len() != 1 {
                continue;
            }
            let c = *codims.first().unwrap();
            if c < 2 || is_cm(&m, Field::Rationals, &limits).unwrap() {
                continue;
            }
            non_cm_seen += 1;
            let r = decomposition.components().len();
            let co = co_scarf(&m, None).unwrap();
            let max_edge_excess = co
                .labeled()
                .complex()
                .all_faces()
                .iter()
                .filter(|f| f.cardinality() == 2)
                .map(|f| excess(co.labeled(), f))
                .max()
                .unwrap_or(i64::MIN);
            assert!(
                max_edge_excess >= c as i64,
                "non-CM {} has max edge excess {max_edge_excess} < {c}",
                m.render()
            );
            assert!(
                m.generators().len() > (c - 1) * r + 1,
                "non-CM {} meets the minimal generator count",
                m.render()
            );
        }
        assert!(non_cm_seen > 0, "no non-CM uniform-codimension samples found");
    }
}
