//! Multigraded free complexes over the polynomial ring: the algebraic
//! Scarf complex, the Taylor complex, symbolic complex/exactness checks,
//! Betti numbers via an independent simplicial-homology oracle, and the
//! homological invariants derived from them (projective dimension, depth,
//! Cohen-Macaulayness, type).
//!
//! Betti convention: tables are for the quotient `S/M` unless explicitly
//! shifted; the module convention `beta_i(M) = beta_{i+1}(S/M)` is a
//! degree shift applied by [`BettiTable::shift_to_module`].

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::complex::{Face, LabeledComplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::generic::scarf_complex;
use crate::homology::{matrix_rank, reduced_homology_ranks, Field};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::{lcm_of, ExponentVector};

/// A free-module basis element: the face it came from and its multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub face: Face,
    pub degree: ExponentVector,
}

/// A nonzero differential entry: a signed monomial `coeff * x^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub coeff: i64,
    pub exponent: ExponentVector,
}

/// A sparse matrix of signed monomials, keyed by `(row, col)` with
/// `row` indexing the target strand and `col` the source strand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), SignedMonomial>,
}

/// A complex of multigraded free modules `F_top -> .. -> F_1 -> F_0`.
///
/// `strands[h]` is the basis of `F_h`; `differential(h)` (for `h >= 1`)
/// maps strand `h` to strand `h-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigradedFreeComplex {
    names: Vec<String>,
    strands: Vec<Vec<BasisElement>>,
    diffs: Vec<SparseMatrix>,
}

impl MultigradedFreeComplex {
    pub fn from_parts(
        names: Vec<String>,
        strands: Vec<Vec<BasisElement>>,
        diffs: Vec<SparseMatrix>,
    ) -> Result<Self> {
        if diffs.len() + 1 != strands.len() && !(strands.is_empty() && diffs.is_empty()) {
            return Err(Error::Invariant(format!(
                "{} strands need {} differentials, got {}",
                strands.len(),
                strands.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (h, d) in diffs.iter().enumerate() {
            if d.rows != strands[h].len() || d.cols != strands[h + 1].len() {
                return Err(Error::Invariant(format!(
                    "differential {} has shape {}x{}, expected {}x{}",
                    h + 1,
                    d.rows,
                    d.cols,
                    strands[h].len(),
                    strands[h + 1].len()
                )));
            }
        }
        Ok(MultigradedFreeComplex {
            names,
            strands,
            diffs,
        })
    }

    #[must_use]
    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[must_use]
    pub fn num_strands(&self) -> usize {
        self.strands.len()
    }

    #[must_use]
    pub fn strand(&self, h: usize) -> &[BasisElement] {
        &self.strands[h]
    }

    /// Ranks of the free modules, lowest homological degree first.
    #[must_use]
    pub fn ranks(&self) -> Vec<usize> {
        self.strands.iter().map(Vec::len).collect()
    }

    /// The differential `F_h -> F_{h-1}`; `h` must be at least 1.
    #[must_use]
    pub fn differential(&self, h: usize) -> &SparseMatrix {
        &self.diffs[h - 1]
    }

    /// Multidegree homogeneity and `d ∘ d = 0`, checked symbolically over
    /// the integers.  Returns the first violation found.
    pub fn verify_complex(&self) -> Result<()> {
        for (h, d) in self.diffs.iter().enumerate() {
            for (&(row, col), entry) in &d.entries {
                if entry.coeff == 0 {
                    return Err(Error::Invariant(format!(
                        "stored zero entry at d_{} ({row},{col})",
                        h + 1
                    )));
                }
                let source = &self.strands[h + 1][col].degree;
                let target = &self.strands[h][row].degree;
                if &target.checked_add(&entry.exponent) != source {
                    return Err(Error::Invariant(format!(
                        "inhomogeneous entry at d_{} ({row},{col})",
                        h + 1
                    )));
                }
            }
        }
        for h in 1..self.diffs.len() {
            // compose d_h ∘ d_{h+1}: strand h+1 -> strand h-1
            let inner = &self.diffs[h]; // d_{h+1}
            let outer = &self.diffs[h - 1]; // d_h
            let mut acc: BTreeMap<(usize, usize, ExponentVector), i64> = BTreeMap::new();
            for (&(mid, col), e2) in &inner.entries {
                for (&(row, mid2), e1) in &outer.entries {
                    if mid2 != mid {
                        continue;
                    }
                    let exp = e1.exponent.checked_add(&e2.exponent);
                    *acc.entry((row, col, exp)).or_insert(0) += e1.coeff * e2.coeff;
                }
            }
            if let Some(((row, col, _), _)) = acc.iter().find(|(_, &c)| c != 0) {
                return Err(Error::Invariant(format!(
                    "d_{h} ∘ d_{} is nonzero at ({row},{col})",
                    h + 1
                )));
            }
        }
        Ok(())
    }

    #[must_use]
    pub fn is_complex(&self) -> bool {
        self.verify_complex().is_ok()
    }

    /// Minimality: no differential entry is a unit (exponent zero).
    #[must_use]
    pub fn is_minimal(&self) -> bool {
        self.diffs
            .iter()
            .all(|d| d.entries.values().all(|e| !e.exponent.is_zero()))
    }

    /// All basis multidegrees, deduplicated.
    #[must_use]
    pub fn basis_degrees(&self) -> Vec<ExponentVector> {
        let set: BTreeSet<ExponentVector> = self
            .strands
            .iter()
            .flatten()
            .map(|b| b.degree.clone())
            .collect();
        set.into_iter().collect()
    }

    /// Exactness in every multidegree, checked degree by degree over the
    /// join-closure of the basis multidegrees (plus 0).  In each degree
    /// the strands restrict to finite-dimensional vector spaces and the
    /// differentials to scalar matrices; higher homology must vanish and
    /// the cokernel at strand 0 must match the target module.
    pub fn check_exactness(
        &self,
        ideal: &MonomialIdeal,
        target: ResolutionTarget,
        field: Field,
        limits: &Limits,
    ) -> Result<ExactnessReport> {
        ideal.require_proper()?;
        let n = ideal.num_vars();
        let mut degrees = join_closure(&self.basis_degrees());
        let zero = ExponentVector::zeros(n);
        if !degrees.contains(&zero) {
            degrees.insert(0, zero);
        }
        let mut failures = Vec::new();
        for b in &degrees {
            let included: Vec<Vec<usize>> = self
                .strands
                .iter()
                .map(|strand| {
                    (0..strand.len())
                        .filter(|&i| strand[i].degree.leq(b))
                        .collect()
                })
                .collect();
            let mut ranks = vec![0usize; self.strands.len() + 1];
            for h in 1..self.strands.len() {
                let rows_of: HashMap<usize, usize> = included[h - 1]
                    .iter()
                    .enumerate()
                    .map(|(pos, &i)| (i, pos))
                    .collect();
                let mut scalar = vec![vec![0i64; included[h].len()]; included[h - 1].len()];
                for (pos, &col) in included[h].iter().enumerate() {
                    for (&(row, c), entry) in &self.diffs[h - 1].entries {
                        if c != col {
                            continue;
                        }
                        // targets of included sources are included: the
                        // target degree divides the source degree
                        scalar[rows_of[&row]][pos] = entry.coeff;
                    }
                }
                ranks[h] = matrix_rank(&scalar, field, limits)?;
            }
            for h in 0..self.strands.len() {
                let homology = included[h].len() - ranks[h] - ranks[h + 1];
                let expected = if h > 0 {
                    0
                } else {
                    match target {
                        ResolutionTarget::Quotient => usize::from(!ideal.contains_exponent(b)),
                        ResolutionTarget::Module => usize::from(ideal.contains_exponent(b)),
                    }
                };
                if homology != expected {
                    failures.push(ExactnessFailure {
                        degree: b.clone(),
                        homological_degree: h,
                        rank: homology,
                        expected,
                    });
                }
            }
        }
        Ok(ExactnessReport {
            exact: failures.is_empty(),
            degrees_checked: degrees.len(),
            failures,
        })
    }

    /// Betti numbers read off this complex, assuming it is exact (a free
    /// resolution): tensor with the residue field, i.e. keep only unit
    /// entries, block by exact multidegree, and take homology ranks.
    /// For a minimal complex this just counts basis elements.
    pub fn betti_numbers(&self, field: Field, limits: &Limits) -> Result<BettiTable> {
        let mut groups: BTreeMap<(usize, ExponentVector), Vec<usize>> = BTreeMap::new();
        for (h, strand) in self.strands.iter().enumerate() {
            for (i, basis) in strand.iter().enumerate() {
                groups
                    .entry((h, basis.degree.clone()))
                    .or_default()
                    .push(i);
            }
        }
        let unit_rank = |h: usize, degree: &ExponentVector| -> Result<usize> {
            // rank of the unit entries of d_h between the degree blocks
            if h == 0 || h >= self.strands.len() {
                return Ok(0);
            }
            let Some(sources) = groups.get(&(h, degree.clone())) else {
                return Ok(0);
            };
            let Some(targets) = groups.get(&(h - 1, degree.clone())) else {
                return Ok(0);
            };
            let row_of: HashMap<usize, usize> = targets
                .iter()
                .enumerate()
                .map(|(pos, &i)| (i, pos))
                .collect();
            let mut scalar = vec![vec![0i64; sources.len()]; targets.len()];
            for (pos, &col) in sources.iter().enumerate() {
                for (&(row, c), entry) in &self.diffs[h - 1].entries {
                    if c == col && entry.exponent.is_zero() {
                        scalar[row_of[&row]][pos] = entry.coeff;
                    }
                }
            }
            matrix_rank(&scalar, field, limits)
        };
        let mut table = BettiTable::default();
        for ((h, degree), ids) in &groups {
            let beta = ids.len() - unit_rank(*h, degree)? - unit_rank(*h + 1, degree)?;
            if beta > 0 {
                table.add(*h, degree.clone(), beta as u64);
            }
        }
        Ok(table)
    }
}

/// What an exact complex augments to: the quotient `S/M` (strand 0 = `S`)
/// or the ideal `M` itself as a module (strand 0 surjects onto `M`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionTarget {
    Quotient,
    Module,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessFailure {
    pub degree: ExponentVector,
    pub homological_degree: usize,
    pub rank: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub exact: bool,
    pub degrees_checked: usize,
    pub failures: Vec<ExactnessFailure>,
}

/// Build the boundary-style free complex of a labeled simplicial complex:
/// strand `h` has one generator per `h`-element face with its label as
/// multidegree, and `d(e_f) = Σ_j (-1)^j (x^{a_f} / x^{a_{f∖v_j}}) e_{f∖v_j}`
/// over the vertices `v_j` of `f` in sorted order.
///
/// The face set of a [`SimplicialComplex`] is closed under subsets by
/// construction, so every boundary term lands on a basis element.
pub fn complex_from_labels(lc: &LabeledComplex) -> Result<MultigradedFreeComplex> {
    let faces = lc.complex().all_faces();
    let top = faces.iter().map(Face::cardinality).max().unwrap_or(0);
    let mut strands: Vec<Vec<BasisElement>> = vec![Vec::new(); top + 1];
    let mut index: HashMap<Face, (usize, usize)> = HashMap::new();
    for face in faces {
        let h = face.cardinality();
        index.insert(face.clone(), (h, strands[h].len()));
        strands[h].push(BasisElement {
            degree: lc.label(&face).clone(),
            face,
        });
    }
    let mut diffs: Vec<SparseMatrix> = Vec::new();
    for h in 1..=top {
        let mut m = SparseMatrix {
            rows: strands[h - 1].len(),
            cols: strands[h].len(),
            entries: BTreeMap::new(),
        };
        for (col, basis) in strands[h].iter().enumerate() {
            for (j, &v) in basis.face.vertices().iter().enumerate() {
                let sub = basis.face.without(v);
                let (_, row) = index[&sub];
                let exponent = basis
                    .degree
                    .checked_sub(&strands[h - 1][row].degree)
                    .ok_or_else(|| {
                        Error::Invariant(format!(
                            "label of {sub:?} does not divide label of {:?}",
                            basis.face
                        ))
                    })?;
                let coeff = if j % 2 == 0 { 1 } else { -1 };
                m.entries.insert((row, col), SignedMonomial { coeff, exponent });
            }
        }
        diffs.push(m);
    }
    MultigradedFreeComplex::from_parts(lc.names().to_vec(), strands, diffs)
}

/// The algebraic Scarf complex of `M`: the boundary complex of the Scarf
/// complex with lcm labels.  Always a complex; exact precisely when the
/// Scarf complex supports a resolution (guaranteed for generic `M`).
pub fn algebraic_scarf(ideal: &MonomialIdeal) -> Result<MultigradedFreeComplex> {
    complex_from_labels(&scarf_complex(ideal)?)
}

/// The Taylor complex: the boundary complex of the full simplex on the
/// generators.  Always a free resolution of `S/M`, rarely minimal; the
/// independent exactness oracle.  Exponential in the generator count.
pub fn taylor_complex(ideal: &MonomialIdeal, limits: &Limits) -> Result<MultigradedFreeComplex> {
    ideal.require_proper()?;
    let r = ideal.num_generators();
    if r > limits.subset_generators {
        return Err(Error::CapExceeded {
            what: "Taylor complex generators",
            size: r,
            cap: limits.subset_generators,
        });
    }
    let full: Face = (0..r).map(Vertex::Gen).collect();
    let simplex = SimplicialComplex::from_faces(vec![full]);
    let labels: BTreeMap<Face, ExponentVector> = simplex
        .all_faces()
        .into_iter()
        .map(|face| {
            let label = lcm_of(
                ideal.num_vars(),
                face.gens().into_iter().map(|i| &ideal.generators()[i]),
            );
            (face, label.into_exponents())
        })
        .collect();
    let lc = LabeledComplex::new(simplex, labels, ideal.names().to_vec())?;
    complex_from_labels(&lc)
}

/// The join-closure of a set of multidegrees: close under entrywise max.
/// This is the lcm lattice (minus the bottom element) when fed generator
/// degrees.  Returned sorted and deduplicated.
#[must_use]
pub fn join_closure(degrees: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut closed: BTreeSet<ExponentVector> = degrees.iter().cloned().collect();
    let mut frontier: Vec<ExponentVector> = closed.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for new in &frontier {
            for old in closed.clone() {
                let join = new.join(&old);
                if !closed.contains(&join) {
                    closed.insert(join.clone());
                    fresh.push(join);
                }
            }
        }
        frontier = fresh;
    }
    closed.into_iter().collect()
}

/// A table of multigraded Betti numbers `beta_{i,b}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, ExponentVector), u64>,
}

impl BettiTable {
    pub fn add(&mut self, i: usize, degree: ExponentVector, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, degree)).or_insert(0) += rank;
        }
    }

    #[must_use]
    pub fn get(&self, i: usize, degree: &ExponentVector) -> u64 {
        self.entries
            .get(&(i, degree.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &ExponentVector, u64)> {
        self.entries.iter().map(|((i, b), &r)| (*i, b, r))
    }

    /// Total Betti numbers, index = homological degree.
    #[must_use]
    pub fn totals(&self) -> Vec<u64> {
        let top = self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let mut out = vec![0u64; top + 1];
        for ((i, _), r) in &self.entries {
            out[*i] += r;
        }
        out
    }

    /// Largest homological degree with a nonzero entry.
    #[must_use]
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Total Betti number in the top homological degree.
    #[must_use]
    pub fn top_rank(&self) -> u64 {
        let top = self.proj_dim();
        self.entries
            .iter()
            .filter(|((i, _), _)| *i == top)
            .map(|(_, r)| r)
            .sum()
    }

    /// Convert an `S/M` table to the module convention for `M` itself:
    /// `beta_i(M) = beta_{i+1}(S/M)` (the strand-0 entry of `S/M` drops).
    #[must_use]
    pub fn shift_to_module(&self) -> BettiTable {
        let entries = self
            .entries
            .iter()
            .filter(|((i, _), _)| *i >= 1)
            .map(|((i, b), &r)| ((i - 1, b.clone()), r))
            .collect();
        BettiTable { entries }
    }

    /// Plain-text rendering, one line per `(i, degree)` pair.
    #[must_use]
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        let width = self
            .entries
            .values()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(1);
        for ((i, b), r) in &self.entries {
            let degree = crate::monomial::Monomial::new(b.clone()).render(names);
            out.push_str(&format!("beta[{i}, {degree}] = {r:>width$}\n"));
        }
        out.push_str(&format!("totals: {:?}\n", self.totals()));
        out
    }

    /// JSON record list `[{"i": .., "degree": [..], "rank": ..}, ..]`.
    #[must_use]
    pub fn to_json_records(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|((i, b), r)| {
                    serde_json::json!({
                        "i": i,
                        "degree": b.as_slice(),
                        "rank": r,
                    })
                })
                .collect(),
        )
    }
}

/// Independent Betti-number oracle for `S/M`: for every multidegree `b`
/// in the lcm lattice, `beta_{i,b}(S/M)` is the rank of reduced homology
/// `H~_{i-2}` of the upper Koszul complex
/// `K^b = { squarefree τ ⊆ supp(b) : x^{b-τ} ∈ M }`.
pub fn betti_oracle(ideal: &MonomialIdeal, field: Field, limits: &Limits) -> Result<BettiTable> {
    ideal.require_proper()?;
    let n = ideal.num_vars();
    let mut table = BettiTable::default();
    table.add(0, ExponentVector::zeros(n), 1);
    let degrees = join_closure(
        &ideal
            .generators()
            .iter()
            .map(|g| g.exponents().clone())
            .collect::<Vec<_>>(),
    );
    for b in &degrees {
        let support = b.support();
        let mut faces = Vec::new();
        for mask in 0u32..(1 << support.len()) {
            let mut shaved = b.clone();
            let mut verts = Vec::new();
            for (pos, &s) in support.iter().enumerate() {
                if mask >> pos & 1 == 1 {
                    shaved.set(s, shaved.get(s) - 1);
                    verts.push(Vertex::Var(s));
                }
            }
            if ideal.contains_exponent(&shaved) {
                faces.push(Face::new(verts));
            }
        }
        // x^b ∈ M for every lattice degree, so K^b is never void
        let koszul = SimplicialComplex::from_faces(faces);
        let ranks = reduced_homology_ranks(&koszul, field, limits)?;
        for (k, &rank) in ranks.iter().enumerate() {
            // index k holds H~_{k-1} = beta_{k+1, b}
            table.add(k + 1, b.clone(), rank as u64);
        }
    }
    Ok(table)
}

/// Homological invariants of `S/M`, all derived from one oracle run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologicalSummary {
    pub betti: BettiTable,
    pub proj_dim: usize,
    pub depth: usize,
    pub codim: usize,
    pub is_cm: bool,
    pub cm_type: u64,
}

pub fn homological_summary(
    ideal: &MonomialIdeal,
    field: Field,
    limits: &Limits,
) -> Result<HomologicalSummary> {
    let betti = betti_oracle(ideal, field, limits)?;
    let proj_dim = betti.proj_dim();
    let codim = ideal.codim()?;
    Ok(HomologicalSummary {
        proj_dim,
        depth: ideal.num_vars() - proj_dim,
        codim,
        is_cm: proj_dim == codim,
        cm_type: betti.top_rank(),
        betti,
    })
}

pub fn proj_dim(ideal: &MonomialIdeal, field: Field, limits: &Limits) -> Result<usize> {
    Ok(betti_oracle(ideal, field, limits)?.proj_dim())
}

/// `depth(S/M) = n - proj_dim(S/M)` (Auslander-Buchsbaum).
pub fn depth(ideal: &MonomialIdeal, field: Field, limits: &Limits) -> Result<usize> {
    Ok(ideal.num_vars() - proj_dim(ideal, field, limits)?)
}

pub fn is_cm(ideal: &MonomialIdeal, field: Field, limits: &Limits) -> Result<bool> {
    Ok(proj_dim(ideal, field, limits)? == ideal.codim()?)
}

/// The Cohen-Macaulay type: total Betti number in the top homological
/// degree of `S/M`.
pub fn cm_type(ideal: &MonomialIdeal, field: Field, limits: &Limits) -> Result<u64> {
    Ok(betti_oracle(ideal, field, limits)?.top_rank())
}

/// Multigraded Euler-characteristic crosscheck for artinian ideals:
/// `colength(M) = Σ_{i,b} (-1)^i beta_{i,b} Π_s (E+1-b_s)` where `E` is
/// the largest exponent.  Returns `None` for non-artinian input.
pub fn colength_from_betti(ideal: &MonomialIdeal, table: &BettiTable) -> Option<i128> {
    if !ideal.is_artinian() {
        return None;
    }
    let e = i128::from(ideal.max_exponent());
    let mut total: i128 = 0;
    for (i, b, r) in table.iter() {
        let points: i128 = b.iter().map(|bs| e + 1 - i128::from(bs)).product();
        let sign = if i % 2 == 0 { 1 } else { -1 };
        total += sign * i128::from(r) * points;
    }
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(src: &str) -> MonomialIdeal {
        MonomialIdeal::parse(src).unwrap()
    }

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn koszul_complex_of_two_variables() {
        let m = ideal("vars: x,y\nx\ny");
        let f = algebraic_scarf(&m).unwrap();
        assert_eq!(f.ranks(), vec![1, 2, 1]);
        f.verify_complex().unwrap();
        assert!(f.is_minimal());
        let report = f
            .check_exactness(&m, ResolutionTarget::Quotient, q(), &Limits::default())
            .unwrap();
        assert!(report.exact, "{report:?}");
        let betti = f.betti_numbers(q(), &Limits::default()).unwrap();
        assert_eq!(betti.totals(), vec![1, 2, 1]);
    }

    #[test]
    fn single_generator_resolves_in_one_step() {
        let m = ideal("vars: x,y\nx^2*y");
        let f = algebraic_scarf(&m).unwrap();
        assert_eq!(f.ranks(), vec![1, 1]);
        assert!(f
            .check_exactness(&m, ResolutionTarget::Quotient, q(), &Limits::default())
            .unwrap()
            .exact);
    }

    #[test]
    fn tree_two_scarf_is_the_minimal_resolution() {
        let m = ideal("vars: x,y\nx^2\nx*y\ny^2");
        let f = algebraic_scarf(&m).unwrap();
        assert_eq!(f.ranks(), vec![1, 3, 2]);
        f.verify_complex().unwrap();
        assert!(f.is_minimal());
        assert!(f
            .check_exactness(&m, ResolutionTarget::Quotient, q(), &Limits::default())
            .unwrap()
            .exact);
        let oracle = betti_oracle(&m, q(), &Limits::default()).unwrap();
        assert_eq!(oracle.totals(), vec![1, 3, 2]);
        assert_eq!(f.betti_numbers(q(), &Limits::default()).unwrap(), oracle);
    }

    #[test]
    fn taylor_complex_is_exact_but_not_minimal() {
        let m = ideal("vars: x,y\nx^2\nx*y\ny^2");
        let t = taylor_complex(&m, &Limits::default()).unwrap();
        assert_eq!(t.ranks(), vec![1, 3, 3, 1]);
        t.verify_complex().unwrap();
        assert!(!t.is_minimal());
        assert!(t
            .check_exactness(&m, ResolutionTarget::Quotient, q(), &Limits::default())
            .unwrap()
            .exact);
        // unit cancellation recovers the minimal Betti numbers
        let betti = t.betti_numbers(q(), &Limits::default()).unwrap();
        assert_eq!(betti.totals(), vec![1, 3, 2]);
    }

    #[test]
    fn taylor_cap_is_enforced() {
        let m = ideal("vars: x,y\nx^2\nx*y\ny^2");
        let tiny = Limits {
            subset_generators: 2,
            ..Limits::default()
        };
        assert!(matches!(
            taylor_complex(&m, &tiny),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn non_generic_scarf_complex_is_not_exact() {
        // all pairwise lcms collide at xyz, so the Scarf complex has no
        // edges and misses both first syzygies
        let m = ideal("vars: x,y,z\nx*y\nx*z\ny*z");
        let f = algebraic_scarf(&m).unwrap();
        assert_eq!(f.ranks(), vec![1, 3]);
        f.verify_complex().unwrap();
        let report = f
            .check_exactness(&m, ResolutionTarget::Quotient, q(), &Limits::default())
            .unwrap();
        assert!(!report.exact);
        let oracle = betti_oracle(&m, q(), &Limits::default()).unwrap();
        assert_eq!(oracle.totals(), vec![1, 3, 2]);
    }

    #[test]
    fn betti_oracle_matches_taylor_homology_on_samples() {
        let samples = [
            "vars: x,y\nx^3\ny^2",
            "vars: x,y,z\nx*y\nx*z\ny*z",
            "vars: x,y,z\ny*z^2\nx*z^2\ny^2*z\nx*y^2\nx^2",
            "vars: x,y,z\nx^2*y\nx^2*z",
        ];
        for src in samples {
            let m = ideal(src);
            let t = taylor_complex(&m, &Limits::default()).unwrap();
            let from_taylor = t.betti_numbers(q(), &Limits::default()).unwrap();
            let oracle = betti_oracle(&m, q(), &Limits::default()).unwrap();
            assert_eq!(from_taylor, oracle, "{src}");
        }
    }

    #[test]
    fn running_cogeneric_example_has_shape_1_5_5_1() {
        let m = ideal("vars: x,y,z\ny*z^2\nx*z^2\ny^2*z\nx*y^2\nx^2");
        let s = homological_summary(&m, q(), &Limits::default()).unwrap();
        assert_eq!(s.betti.totals(), vec![1, 5, 5, 1]);
        assert_eq!(s.proj_dim, 3);
        assert_eq!(s.depth, 0);
        assert_eq!(s.codim, 2);
        assert!(!s.is_cm);
        assert_eq!(s.cm_type, 1);
    }

    #[test]
    fn two_disjoint_planes_have_projective_dimension_three() {
        // <x1,x2> ∩ <x3,x4>
        let m = ideal("vars: x1,x2,x3,x4\nx1*x3\nx1*x4\nx2*x3\nx2*x4");
        assert_eq!(proj_dim(&m, q(), &Limits::default()).unwrap(), 3);
        assert_eq!(depth(&m, q(), &Limits::default()).unwrap(), 1);
    }

    #[test]
    fn euler_characteristic_recovers_colength() {
        for src in [
            "vars: x,y\nx^2\nx*y\ny^2",
            "vars: x,y,z\nx^3\ny^3\nz^3\nx^2*y^2\nx^2*z^2\ny^2*z^2\nx*y*z",
        ] {
            let m = ideal(src);
            let table = betti_oracle(&m, q(), &Limits::default()).unwrap();
            let from_betti = colength_from_betti(&m, &table).unwrap();
            let direct = m.colength().unwrap().unwrap();
            assert_eq!(from_betti, i128::from(direct), "{src}");
        }
    }

    #[test]
    fn join_closure_is_closed_and_minimal_in_size() {
        let degs = vec![
            ExponentVector::new(vec![2, 0, 0]),
            ExponentVector::new(vec![0, 2, 0]),
            ExponentVector::new(vec![0, 0, 2]),
        ];
        let closure = join_closure(&degs);
        assert_eq!(closure.len(), 7); // all nonempty joins distinct
        for a in &closure {
            for b in &closure {
                assert!(closure.contains(&a.join(b)));
            }
        }
    }

    #[test]
    fn scarf_faces_always_contribute_betti_numbers() {
        // even non-generic: every Scarf face gives a minimal syzygy
        for src in [
            "vars: x,y,z\nx*y\nx*z\ny*z",
            "vars: x,y,z\nx^2*y\nx^2*z",
            "vars: x,y,z\ny*z^2\nx*z^2\ny^2*z\nx*y^2\nx^2",
        ] {
            let m = ideal(src);
            let scarf = crate::generic::scarf_complex(&m).unwrap();
            let oracle = betti_oracle(&m, q(), &Limits::default()).unwrap();
            for face in scarf.complex().all_faces() {
                let i = face.cardinality();
                let b = scarf.label(&face);
                if i == 0 {
                    continue;
                }
                assert!(
                    oracle.get(i, b) >= 1,
                    "face {face:?} in {src} missing from Betti table"
                );
            }
        }
    }
}
