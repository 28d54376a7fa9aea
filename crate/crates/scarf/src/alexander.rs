//! Alexander duality for monomial ideals and the theory of cogeneric
//! ideals: dual vectors and dual ideals, cogenericity detection, the
//! coScarf complex and the free resolution it carries, depth and
//! Cohen-Macaulay diagnostics, Cohen-Macaulay type and Gorenstein
//! classification, and the duality bound relating Betti numbers of an
//! ideal to those of its dual.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{Face, LabeledComplex};
use crate::error::{Error, Result};
use crate::generic::{extended_scarf_complex_with_degree, is_generic};
use crate::homology::Field;
use crate::ideal::{IrreducibleComponent, IrreducibleDecomposition, MonomialIdeal, MonomialPrime};
use crate::limits::Limits;
use crate::monomial::{ExponentVector, Monomial};
use crate::resolution::{
    betti_oracle, BasisElement, BettiTable, MultigradedFreeComplex, SignedMonomial, SparseMatrix,
};

/// How many multidegrees a dual Betti sweep may enumerate.
const DUAL_BETTI_BOX_CAP: usize = 4096;

/// How many monomial primes a Serre condition sweep may localize at.
const SERRE_PRIME_CAP: usize = 1 << 16;

/// The exponent bound `a` that fixes a duality: degrees are reflected
/// inside the box `0 <= b <= a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualContext {
    a: ExponentVector,
}

impl DualContext {
    /// Context with an explicit bound vector.
    #[must_use]
    pub fn new(a: ExponentVector) -> Self {
        DualContext { a }
    }

    /// The symmetric context `a = (t, ..., t)` in `n` variables.
    #[must_use]
    pub fn symmetric(num_vars: usize, t: u32) -> Self {
        DualContext {
            a: ExponentVector::new(vec![t; num_vars]),
        }
    }

    /// The default context for an ideal: symmetric with `t` equal to the
    /// largest exponent appearing on a minimal generator.
    pub fn for_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_proper()?;
        Ok(DualContext::symmetric(
            ideal.num_vars(),
            ideal.max_exponent(),
        ))
    }

    #[must_use]
    pub fn bound(&self) -> &ExponentVector {
        &self.a
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.a.len()
    }

    /// `Some(t)` when the bound is `(t, ..., t)`.
    #[must_use]
    pub fn symmetric_value(&self) -> Option<u32> {
        let t = self.a.get(0);
        if (0..self.a.len()).all(|s| self.a.get(s) == t) {
            Some(t)
        } else {
            None
        }
    }

    /// The marker degree `D = 1 + max(a)` used when the dual ideal is
    /// extended to an artinian one.
    #[must_use]
    pub fn extension_degree(&self) -> u32 {
        self.a.max_entry() + 1
    }

    /// A context is valid for an ideal when every generator fits inside
    /// the box `0 <= b <= a`.
    pub fn validate_for(&self, ideal: &MonomialIdeal) -> Result<()> {
        ideal.require_proper()?;
        if ideal.num_vars() != self.num_vars() {
            return Err(Error::AmbientMismatch(ideal.num_vars(), self.num_vars()));
        }
        for s in 0..self.num_vars() {
            let need = ideal
                .generators()
                .iter()
                .map(|g| g.exponents().get(s))
                .max()
                .unwrap_or(0);
            if self.a.get(s) < need {
                return Err(Error::BoundTooSmall {
                    var: ideal.names()[s].clone(),
                    need,
                    got: self.a.get(s),
                });
            }
        }
        Ok(())
    }

    /// The dual of `b` inside the box: coordinate `s` becomes
    /// `a_s + 1 - b_s` when `b_s >= 1` and stays `0` when `b_s = 0`.
    /// The support is preserved, and on vectors inside the box the map
    /// is an involution.
    pub fn dual_vector(&self, b: &ExponentVector) -> Result<ExponentVector> {
        if b.len() != self.a.len() {
            return Err(Error::AmbientMismatch(b.len(), self.a.len()));
        }
        let mut out = ExponentVector::zeros(b.len());
        for s in 0..b.len() {
            let bs = b.get(s);
            if bs == 0 {
                continue;
            }
            if bs > self.a.get(s) {
                return Err(Error::BoundTooSmall {
                    var: format!("#{}", s + 1),
                    need: bs,
                    got: self.a.get(s),
                });
            }
            out.set(s, self.a.get(s) + 1 - bs);
        }
        Ok(out)
    }
}

/// The Alexander dual of `ideal` with respect to `ctx`.
///
/// Two independent constructions are run and compared: the generator
/// form (the duals of the bounds of the irredundant irreducible
/// components become the minimal generators) and the intersection form
/// (each minimal generator's dual bound becomes an irreducible
/// component).  Generators and components must swap roles bijectively;
/// any disagreement is reported as an internal invariant failure.
pub fn alexander_dual(ideal: &MonomialIdeal, ctx: &DualContext) -> Result<MonomialIdeal> {
    ctx.validate_for(ideal)?;
    let decomposition = ideal.irreducible_decomposition()?;

    let mut gens = Vec::with_capacity(decomposition.len());
    for comp in decomposition.components() {
        gens.push(Monomial::new(ctx.dual_vector(comp.bound())?));
    }
    let from_components = MonomialIdeal::new(ideal.names().to_vec(), gens)?;
    if from_components.num_generators() != decomposition.len() {
        return Err(Error::Invariant(format!(
            "dualizing {} irreducible components produced only {} minimal generators",
            decomposition.len(),
            from_components.num_generators()
        )));
    }

    let dual_components: Vec<IrreducibleComponent> = ideal
        .generators()
        .iter()
        .map(|g| Ok(IrreducibleComponent::new(ctx.dual_vector(g.exponents())?)))
        .collect::<Result<_>>()?;
    let from_generators =
        IrreducibleDecomposition::from_parts(ideal.names().to_vec(), dual_components)?
            .intersection()?;

    if from_components != from_generators {
        return Err(Error::Invariant(format!(
            "the two Alexander dual constructions disagree: {} vs {}",
            from_components.render(),
            from_generators.render()
        )));
    }
    Ok(from_components)
}

/// What [`is_cogeneric`] found, pair by pair of irreducible components.
#[derive(Debug, Clone, Serialize)]
pub struct CogenericityReport {
    /// The verdict: every sharing pair of components has a witness.
    pub cogeneric: bool,
    /// `(i, j, s)`: components `i < j` have the minimal generator
    /// `x_s^e` in common.
    pub shared_generators: Vec<(usize, usize, usize)>,
    /// `(i, j, l)`: component `l` lies inside `M_i + M_j` and shares no
    /// minimal generator with it.
    pub witnesses: Vec<(usize, usize, usize)>,
    /// Sharing pairs with no witness.
    pub violations: Vec<(usize, usize)>,
    /// Number of irreducible components examined.
    pub components: usize,
}

/// Decide cogenericity directly from the irredundant irreducible
/// decomposition: whenever two components share a minimal generator,
/// some third component must sit inside their sum without sharing a
/// minimal generator with that sum.
///
/// The verdict is cross-checked against genericity of the Alexander
/// dual (the two are equivalent); disagreement would be a bug and is
/// reported as an invariant failure.
pub fn is_cogeneric(ideal: &MonomialIdeal) -> Result<CogenericityReport> {
    ideal.require_proper()?;
    let decomposition = ideal.irreducible_decomposition()?;
    let comps = decomposition.components();
    let mut shared_generators = Vec::new();
    let mut witnesses = Vec::new();
    let mut violations = Vec::new();

    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let shares: Vec<usize> = (0..ideal.num_vars())
                .filter(|&s| {
                    let (bi, bj) = (comps[i].bound().get(s), comps[j].bound().get(s));
                    bi == bj && bi >= 1
                })
                .collect();
            if shares.is_empty() {
                continue;
            }
            for &s in &shares {
                shared_generators.push((i, j, s));
            }
            let sum = comps[i].sum(&comps[j]);
            let witness = (0..comps.len()).find(|&l| {
                l != i
                    && l != j
                    && comps[l].contained_in(&sum)
                    && !comps[l].shares_generator(sum.bound())
            });
            match witness {
                Some(l) => witnesses.push((i, j, l)),
                None => violations.push((i, j)),
            }
        }
    }

    let cogeneric = violations.is_empty();
    let dual = alexander_dual(ideal, &DualContext::for_ideal(ideal)?)?;
    let dual_generic = is_generic(&dual)?.generic;
    if cogeneric != dual_generic {
        return Err(Error::Invariant(format!(
            "direct cogenericity check ({cogeneric}) disagrees with genericity of the \
             Alexander dual ({dual_generic})"
        )));
    }

    Ok(CogenericityReport {
        cogeneric,
        shared_generators,
        witnesses,
        violations,
        components: comps.len(),
    })
}

/// The coScarf complex of an ideal `M` with respect to the symmetric
/// bound `a = (t, ..., t)`: the extended Scarf complex of the Alexander
/// dual `M^a`, built with marker degree `t + 1`, together with its
/// interior faces (the faces whose label has full support).
///
/// The interior faces index the basis of a free complex in which the
/// face `sigma` sits in homological degree `n - #sigma` with multidegree
/// `(a + 1) - label(sigma)`; for cogeneric `M` that complex is the
/// minimal free resolution of `M`.
#[derive(Debug, Clone)]
pub struct CoScarfComplex {
    labeled: LabeledComplex,
    interior: Vec<Face>,
    bound: ExponentVector,
    dual: MonomialIdeal,
    components: Vec<IrreducibleComponent>,
    component_of_gen: Vec<usize>,
}

/// The default symmetric duality bound for an ideal: its largest
/// generator exponent.
#[must_use]
pub fn default_symmetric_bound(ideal: &MonomialIdeal) -> u32 {
    ideal.max_exponent()
}

/// Build the coScarf complex of a cogeneric ideal.  `t` is the
/// symmetric duality bound; it defaults to the largest generator
/// exponent and must not be smaller than that.
pub fn co_scarf(ideal: &MonomialIdeal, t: Option<u32>) -> Result<CoScarfComplex> {
    let report = is_cogeneric(ideal)?;
    if !report.cogeneric {
        return Err(Error::NotCogeneric(format!(
            "component pairs {:?} share a minimal generator but have no witness component",
            report.violations
        )));
    }
    co_scarf_unchecked(ideal, t)
}

/// [`co_scarf`] without the cogenericity requirement, for exploration.
/// The complex is still built and labeled the same way, but nothing
/// guarantees that the interior faces carry a resolution.
pub fn co_scarf_unchecked(ideal: &MonomialIdeal, t: Option<u32>) -> Result<CoScarfComplex> {
    ideal.require_proper()?;
    let t = t.unwrap_or_else(|| default_symmetric_bound(ideal));
    let ctx = DualContext::symmetric(ideal.num_vars(), t);
    ctx.validate_for(ideal)?;

    let dual = alexander_dual(ideal, &ctx)?;
    let labeled = extended_scarf_complex_with_degree(&dual, ctx.extension_degree())?;
    let mut interior = labeled.full_support_faces();
    interior.sort();

    let decomposition = ideal.irreducible_decomposition()?;
    let components = decomposition.components().to_vec();
    let bound_of_dual_gen: BTreeMap<ExponentVector, usize> = components
        .iter()
        .enumerate()
        .map(|(i, c)| Ok((ctx.dual_vector(c.bound())?, i)))
        .collect::<Result<_>>()?;
    let component_of_gen: Vec<usize> = dual
        .generators()
        .iter()
        .map(|g| {
            bound_of_dual_gen.get(g.exponents()).copied().ok_or_else(|| {
                Error::Invariant(format!(
                    "dual generator {:?} does not come from any irreducible component",
                    g.exponents()
                ))
            })
        })
        .collect::<Result<_>>()?;

    let cs = CoScarfComplex {
        labeled,
        interior,
        bound: ctx.bound().clone(),
        dual,
        components,
        component_of_gen,
    };
    cs.check_component_sum_labels(&ctx)?;
    Ok(cs)
}

impl CoScarfComplex {
    /// The underlying labeled extended Scarf complex of the dual ideal.
    #[must_use]
    pub fn labeled(&self) -> &LabeledComplex {
        &self.labeled
    }

    /// Interior faces (label with full support), sorted.
    #[must_use]
    pub fn interior_faces(&self) -> &[Face] {
        &self.interior
    }

    /// The symmetric duality bound `a`.
    #[must_use]
    pub fn bound(&self) -> &ExponentVector {
        &self.bound
    }

    /// The Alexander dual ideal whose extended Scarf complex this is.
    #[must_use]
    pub fn dual_ideal(&self) -> &MonomialIdeal {
        &self.dual
    }

    /// The irreducible components of the original ideal, in the order
    /// used by [`Self::component_of_gen`].
    #[must_use]
    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    /// Which irreducible component of the original ideal the `i`-th
    /// generator vertex of the dual corresponds to.
    #[must_use]
    pub fn component_of_gen(&self, i: usize) -> usize {
        self.component_of_gen[i]
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.labeled.num_vars()
    }

    /// A face is interior exactly when its label has full support.
    #[must_use]
    pub fn is_interior(&self, face: &Face) -> bool {
        self.labeled.label(face).support_size() == self.num_vars()
    }

    /// The multidegree `(a + 1) - label` of the basis element a face
    /// contributes to the resolution.
    #[must_use]
    pub fn multidegree(&self, face: &Face) -> ExponentVector {
        let label = self.labeled.label(face);
        let mut out = ExponentVector::zeros(self.num_vars());
        for s in 0..self.num_vars() {
            out.set(s, self.bound.get(s) + 1 - label.get(s));
        }
        out
    }

    /// The excess of a face inside this complex.
    #[must_use]
    pub fn excess(&self, face: &Face) -> i64 {
        excess(&self.labeled, face)
    }

    /// Number of interior faces of each cardinality; index = cardinality.
    #[must_use]
    pub fn interior_counts(&self) -> Vec<usize> {
        let max = self
            .interior
            .iter()
            .map(Face::cardinality)
            .max()
            .unwrap_or(0);
        let mut counts = vec![0usize; max + 1];
        for f in &self.interior {
            counts[f.cardinality()] += 1;
        }
        counts
    }

    /// The smallest cardinality of an interior face, if any exist.
    #[must_use]
    pub fn min_interior_cardinality(&self) -> Option<usize> {
        self.interior.iter().map(Face::cardinality).min()
    }

    /// The free complex carried by the interior faces: face `sigma` in
    /// homological degree `n - #sigma`, differential from `sigma` to
    /// each interior `sigma + v` with the sign of `v`'s position and the
    /// label quotient as coefficient.
    pub fn algebraic(&self) -> Result<MultigradedFreeComplex> {
        let n = self.num_vars();
        if self.interior.is_empty() {
            return Err(Error::Invariant(
                "no interior faces: the coScarf complex carries no resolution".into(),
            ));
        }
        for f in &self.interior {
            if f.cardinality() > n {
                return Err(Error::Invariant(format!(
                    "interior face with {} vertices in a ring with {} variables",
                    f.cardinality(),
                    n
                )));
            }
        }
        let h_max = n - self
            .interior
            .iter()
            .map(Face::cardinality)
            .min()
            .expect("nonempty");
        let mut strands: Vec<Vec<BasisElement>> = vec![Vec::new(); h_max + 1];
        for f in &self.interior {
            strands[n - f.cardinality()].push(BasisElement {
                face: f.clone(),
                degree: self.multidegree(f),
            });
        }
        for (h, strand) in strands.iter().enumerate() {
            if strand.is_empty() {
                return Err(Error::Invariant(format!(
                    "interior faces skip cardinality {}: strands are not contiguous",
                    n - h
                )));
            }
        }

        let mut diffs = Vec::with_capacity(h_max);
        for h in 1..=h_max {
            let sources = &strands[h];
            let targets = &strands[h - 1];
            let mut entries = BTreeMap::new();
            for (col, src) in sources.iter().enumerate() {
                for (row, tgt) in targets.iter().enumerate() {
                    if !src.face.is_subset_of(&tgt.face) {
                        continue;
                    }
                    let (pos, &added) = tgt
                        .face
                        .vertices()
                        .iter()
                        .enumerate()
                        .find(|(_, v)| !src.face.contains(**v))
                        .expect("a strict superset has an extra vertex");
                    let exponent = self
                        .labeled
                        .label(&tgt.face)
                        .checked_sub(self.labeled.label(&src.face))
                        .ok_or_else(|| {
                            Error::Invariant(format!(
                                "label of {:?} does not divide label of its superset",
                                src.face
                            ))
                        })?;
                    debug_assert!(tgt.face.contains(added));
                    let coeff = if pos % 2 == 0 { 1 } else { -1 };
                    entries.insert((row, col), SignedMonomial { coeff, exponent });
                }
            }
            diffs.push(SparseMatrix {
                rows: targets.len(),
                cols: sources.len(),
                entries,
            });
        }
        MultigradedFreeComplex::from_parts(self.labeled.names().to_vec(), strands, diffs)
    }

    /// Every face on generator vertices only must be labeled by the dual
    /// of the bound of the sum of the matching components.
    fn check_component_sum_labels(&self, ctx: &DualContext) -> Result<()> {
        for (face, label) in self.labeled.labels() {
            if face.is_empty() || !face.vars().is_empty() {
                continue;
            }
            let sum = face
                .gens()
                .iter()
                .map(|&g| self.components[self.component_of_gen[g]].clone())
                .reduce(|acc, c| acc.sum(&c))
                .expect("nonempty face");
            let expected = ctx.dual_vector(sum.bound())?;
            if &expected != label {
                return Err(Error::Invariant(format!(
                    "face {:?} is labeled {:?} but the dual of its component sum is {:?}",
                    face, label, expected
                )));
            }
        }
        Ok(())
    }
}

/// The excess of a face: the size of its label's support minus its
/// number of vertices.
#[must_use]
pub fn excess(labeled: &LabeledComplex, face: &Face) -> i64 {
    labeled.label(face).support_size() as i64 - face.cardinality() as i64
}

/// The free resolution of a cogeneric ideal read off its coScarf
/// complex (module convention: the complex resolves the ideal itself,
/// and the strand-0 degrees are its minimal generators).
pub fn algebraic_co_scarf(ideal: &MonomialIdeal, t: Option<u32>) -> Result<MultigradedFreeComplex> {
    co_scarf(ideal, t)?.algebraic()
}

/// `depth(S/M)` for cogeneric `M`: one less than the smallest
/// cardinality of an interior coScarf face.
pub fn depth_cogeneric(ideal: &MonomialIdeal, t: Option<u32>) -> Result<usize> {
    let cs = co_scarf(ideal, t)?;
    let min = cs.min_interior_cardinality().ok_or_else(|| {
        Error::Invariant("no interior faces: depth is undefined".into())
    })?;
    Ok(min - 1)
}

/// One failure of the Serre condition at a monomial prime.
#[derive(Debug, Clone, Serialize)]
pub struct S2Failure {
    /// Variable indices generating the prime.
    pub prime: Vec<usize>,
    /// The prime rendered in the ring's variable names.
    pub rendered: String,
    pub depth: usize,
    pub dim: usize,
}

/// Outcome of the Serre `(S_2)` sweep over monomial primes.
#[derive(Debug, Clone, Serialize)]
pub struct S2Report {
    pub satisfied: bool,
    pub failures: Vec<S2Failure>,
    /// How many monomial primes in the support were examined.
    pub primes_checked: usize,
}

/// Check Serre's condition `(S_2)` at every monomial prime in the
/// support: the localized quotient must satisfy
/// `depth >= min(2, dim)`.  Primes where the ideal localizes to the
/// unit ideal lie outside the support and are skipped.
pub fn serre_s2(ideal: &MonomialIdeal, field: Field, limits: &Limits) -> Result<S2Report> {
    ideal.require_proper()?;
    let n = ideal.num_vars();
    if n > 16 {
        return Err(Error::CapExceeded {
            what: "monomial primes in the Serre condition sweep",
            size: 1usize << n,
            cap: SERRE_PRIME_CAP,
        });
    }
    let mut failures = Vec::new();
    let mut primes_checked = 0usize;
    for mask in 1u32..(1 << n) {
        let vars: Vec<usize> = (0..n).filter(|s| mask & (1 << s) != 0).collect();
        let p = MonomialPrime::new(n, vars.clone());
        let localized = ideal.localize(&p)?;
        if !localized.is_proper() {
            continue;
        }
        primes_checked += 1;
        let local_vars = localized.num_vars();
        let depth = local_vars - betti_oracle(&localized, field, limits)?.proj_dim();
        let dim = local_vars - localized.codim()?;
        if depth < 2.min(dim) {
            failures.push(S2Failure {
                prime: vars,
                rendered: p.render(ideal.names()),
                depth,
                dim,
            });
        }
    }
    Ok(S2Report {
        satisfied: failures.is_empty(),
        failures,
        primes_checked,
    })
}

/// The five equivalent Cohen-Macaulay tests for a cogeneric ideal,
/// evaluated independently.
#[derive(Debug, Clone, Serialize)]
pub struct CmCogenericReport {
    pub codim: usize,
    pub components: usize,
    /// `Some(c)` when every irreducible component has codimension `c`.
    pub uniform_codim: Option<usize>,
    /// (a) the projective dimension of the quotient equals the
    /// codimension.
    pub cm_by_resolution: bool,
    /// (b) Serre's condition `(S_2)` holds at every monomial prime.
    pub serre_s2: bool,
    /// (c) components have uniform codimension `c` and every
    /// generator-generator edge of the coScarf complex has
    /// `codim(M_i + M_j) <= c + 1`.
    pub component_sums: bool,
    /// (d) every coScarf face has excess `< c`.
    pub excess_bound: bool,
    /// (e) no interior face has dimension `< n - c`.
    pub interior_dims: bool,
    /// All five tests agreed.
    pub consistent: bool,
    /// The headline verdict, from test (a).
    pub is_cm: bool,
}

/// Evaluate the five Cohen-Macaulay criteria for a cogeneric ideal.
/// They are equivalent in theory; each is computed independently here,
/// and `consistent` records whether they in fact agreed.
pub fn cm_cogeneric(
    ideal: &MonomialIdeal,
    t: Option<u32>,
    field: Field,
    limits: &Limits,
) -> Result<CmCogenericReport> {
    let cs = co_scarf(ideal, t)?;
    let n = ideal.num_vars();
    let c = ideal.codim()?;
    let decomposition = ideal.irreducible_decomposition()?;
    let uniform_codim = decomposition.uniform_codim();

    let cm_by_resolution = crate::resolution::is_cm(ideal, field, limits)?;
    let s2 = serre_s2(ideal, field, limits)?.satisfied;

    let component_sums = match uniform_codim {
        None => false,
        Some(u) => {
            debug_assert_eq!(u, c);
            cs.labeled()
                .labels()
                .keys()
                .filter(|f| f.cardinality() == 2 && f.vars().is_empty())
                .all(|f| {
                    let g = f.gens();
                    let ci = &cs.components()[cs.component_of_gen(g[0])];
                    let cj = &cs.components()[cs.component_of_gen(g[1])];
                    ci.sum(cj).codim() <= c + 1
                })
        }
    };

    let excess_bound = cs
        .labeled()
        .labels()
        .keys()
        .all(|f| cs.excess(f) < c as i64);

    let interior_dims = cs
        .min_interior_cardinality()
        .is_some_and(|min| min as i64 > n as i64 - c as i64);

    let all = [
        cm_by_resolution,
        s2,
        component_sums,
        excess_bound,
        interior_dims,
    ];
    Ok(CmCogenericReport {
        codim: c,
        components: decomposition.len(),
        uniform_codim,
        cm_by_resolution,
        serre_s2: s2,
        component_sums,
        excess_bound,
        interior_dims,
        consistent: all.iter().all(|&b| b == all[0]),
        is_cm: cm_by_resolution,
    })
}

/// The Cohen-Macaulay type of a cogeneric quotient against the number
/// of its irreducible components.
#[derive(Debug, Clone, Serialize)]
pub struct TypeBoundReport {
    /// The bound applies to Cohen-Macaulay cogeneric ideals of
    /// codimension at least 2.
    pub applicable: bool,
    pub is_cm: bool,
    pub codim: usize,
    pub components: usize,
    /// Rank of the last module in the minimal free resolution of the
    /// quotient.
    pub cm_type: u64,
    /// `Some(type >= components)` when applicable.
    pub bound_holds: Option<bool>,
}

/// For a Cohen-Macaulay cogeneric ideal of codimension at least 2, the
/// type of the quotient is at least the number of irreducible
/// components.  Returns the computed type and whether the bound holds.
pub fn cm_type_bound(
    ideal: &MonomialIdeal,
    field: Field,
    limits: &Limits,
) -> Result<TypeBoundReport> {
    let report = is_cogeneric(ideal)?;
    if !report.cogeneric {
        return Err(Error::NotCogeneric(
            "the type bound is only claimed for cogeneric ideals".into(),
        ));
    }
    let summary = crate::resolution::homological_summary(ideal, field, limits)?;
    let applicable = summary.is_cm && summary.codim >= 2;
    Ok(TypeBoundReport {
        applicable,
        is_cm: summary.is_cm,
        codim: summary.codim,
        components: report.components,
        cm_type: summary.cm_type,
        bound_holds: applicable.then_some(summary.cm_type >= report.components as u64),
    })
}

/// Gorenstein classification of a quotient, with the cogeneric
/// characterization checked when it applies.
#[derive(Debug, Clone, Serialize)]
pub struct GorensteinReport {
    pub gorenstein: bool,
    pub is_cm: bool,
    pub cm_type: u64,
    pub principal: bool,
    pub irreducible: bool,
    /// For cogeneric ideals: `Some(gorenstein == (principal or
    /// irreducible))` — the characterization theorem, evaluated.
    pub characterization: Option<bool>,
}

/// Decide whether `S/M` is Gorenstein (Cohen-Macaulay of type 1).  For
/// cogeneric `M` the verdict must coincide with `M` being principal or
/// irreducible; the report records that comparison.
pub fn gorenstein(ideal: &MonomialIdeal, field: Field, limits: &Limits) -> Result<GorensteinReport> {
    ideal.require_proper()?;
    let summary = crate::resolution::homological_summary(ideal, field, limits)?;
    let gor = summary.is_cm && summary.cm_type == 1;
    let principal = ideal.num_generators() == 1;
    let irreducible = ideal.irreducible_decomposition()?.len() == 1;
    let characterization = is_cogeneric(ideal)?
        .cogeneric
        .then_some(gor == (principal || irreducible));
    Ok(GorensteinReport {
        gorenstein: gor,
        is_cm: summary.is_cm,
        cm_type: summary.cm_type,
        principal,
        irreducible,
        characterization,
    })
}

/// One instance of the duality bound on Betti numbers.
#[derive(Debug, Clone, Serialize)]
pub struct DualBettiCheck {
    /// The homological index `i` (module convention).
    pub homological_index: usize,
    /// The multidegree `b` on the primal side.
    pub degree: ExponentVector,
    /// Its dual `b^a`, where the dual Betti number is read.
    pub dual_degree: ExponentVector,
    /// `beta_{i, b^a}` of the dual ideal.
    pub lhs: u64,
    /// Sum of `beta_{#F - i - 1, c}` of the ideal over degrees `c`
    /// agreeing with `b` on `F = supp(b)`.
    pub rhs: u64,
    pub holds: bool,
}

fn dual_betti_check_inner(
    table: &BettiTable,
    dual_table: &BettiTable,
    ctx: &DualContext,
    i: usize,
    b: &ExponentVector,
) -> Result<DualBettiCheck> {
    let f: Vec<usize> = b.support();
    let dual_degree = ctx.dual_vector(b)?;
    // Module convention: beta_i(ideal) = beta_{i+1}(quotient).
    let lhs = dual_table.get(i + 1, &dual_degree);
    let rhs = if i <= f.len() {
        let quotient_index = f.len() - i;
        table
            .iter()
            .filter(|(j, c, _)| {
                *j == quotient_index && c.restrict(&f) == b.restrict(&f)
            })
            .map(|(_, _, rank)| rank)
            .sum()
    } else {
        0
    };
    Ok(DualBettiCheck {
        homological_index: i,
        degree: b.clone(),
        dual_degree,
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}

/// Evaluate the duality bound
/// `beta_{i, b^a}(M^a) <= sum over c agreeing with b on supp(b) of
/// beta_{#supp(b) - i - 1, c}(M)` (module convention on both sides) for
/// one pair `(i, b)` with `b <= a`.
pub fn dual_betti_inequality(
    ideal: &MonomialIdeal,
    ctx: &DualContext,
    i: usize,
    b: &ExponentVector,
    field: Field,
    limits: &Limits,
) -> Result<DualBettiCheck> {
    ctx.validate_for(ideal)?;
    let table = betti_oracle(ideal, field, limits)?;
    let dual_table = betti_oracle(&alexander_dual(ideal, ctx)?, field, limits)?;
    dual_betti_check_inner(&table, &dual_table, ctx, i, b)
}

/// Evaluate the duality bound for every multidegree `b` in the box
/// `0 <= b <= a` and every homological index `0 <= i <= #supp(b)`.
pub fn dual_betti_sweep(
    ideal: &MonomialIdeal,
    ctx: &DualContext,
    field: Field,
    limits: &Limits,
) -> Result<Vec<DualBettiCheck>> {
    ctx.validate_for(ideal)?;
    let n = ctx.num_vars();
    let mut box_size = 1usize;
    for s in 0..n {
        box_size = box_size.saturating_mul(ctx.bound().get(s) as usize + 1);
    }
    if box_size > DUAL_BETTI_BOX_CAP {
        return Err(Error::CapExceeded {
            what: "multidegree box in the dual Betti sweep",
            size: box_size,
            cap: DUAL_BETTI_BOX_CAP,
        });
    }
    let table = betti_oracle(ideal, field, limits)?;
    let dual_table = betti_oracle(&alexander_dual(ideal, ctx)?, field, limits)?;

    let mut checks = Vec::new();
    let mut b = ExponentVector::zeros(n);
    loop {
        for i in 0..=b.support_size() {
            checks.push(dual_betti_check_inner(&table, &dual_table, ctx, i, &b)?);
        }
        // odometer step through the box
        let mut s = 0;
        loop {
            if s == n {
                return Ok(checks);
            }
            if b.get(s) < ctx.bound().get(s) {
                b.set(s, b.get(s) + 1);
                break;
            }
            b.set(s, 0);
            s += 1;
        }
    }
}

/// Generator count of a cogeneric ideal against the lower bound forced
/// by its components.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorBoundReport {
    /// The bound applies when every component has the same codimension.
    pub applicable: bool,
    /// The uniform codimension, when there is one.
    pub codim: Option<usize>,
    pub components: usize,
    pub generators: usize,
    /// The lower bound `(c - 1) r + 1`.
    pub bound: Option<usize>,
    pub bound_holds: Option<bool>,
    /// Whether the generator count meets the bound exactly.
    pub tight: Option<bool>,
    /// When tight: a tight count forces Cohen-Macaulayness; records
    /// whether the quotient is indeed Cohen-Macaulay.
    pub tight_implies_cm: Option<bool>,
    /// When `c = 2`: Cohen-Macaulayness is equivalent to having exactly
    /// `r + 1` generators; records whether that equivalence held.
    pub codim_two_equivalence: Option<bool>,
}

/// For a cogeneric ideal whose `r` components all have codimension `c`,
/// the ideal has at least `(c - 1) r + 1` minimal generators; equality
/// forces the quotient to be Cohen-Macaulay, and for `c = 2`
/// Cohen-Macaulayness is equivalent to having exactly `r + 1`
/// generators.
pub fn generator_bound_cogeneric(
    ideal: &MonomialIdeal,
    field: Field,
    limits: &Limits,
) -> Result<GeneratorBoundReport> {
    let report = is_cogeneric(ideal)?;
    if !report.cogeneric {
        return Err(Error::NotCogeneric(
            "the generator bound is only claimed for cogeneric ideals".into(),
        ));
    }
    let decomposition = ideal.irreducible_decomposition()?;
    let r = decomposition.len();
    let generators = ideal.num_generators();
    let Some(c) = decomposition.uniform_codim() else {
        return Ok(GeneratorBoundReport {
            applicable: false,
            codim: None,
            components: r,
            generators,
            bound: None,
            bound_holds: None,
            tight: None,
            tight_implies_cm: None,
            codim_two_equivalence: None,
        });
    };
    let bound = (c - 1) * r + 1;
    let tight = generators == bound;
    let is_cm = crate::resolution::is_cm(ideal, field, limits)?;
    Ok(GeneratorBoundReport {
        applicable: true,
        codim: Some(c),
        components: r,
        generators,
        bound: Some(bound),
        bound_holds: Some(generators >= bound),
        tight: Some(tight),
        tight_implies_cm: tight.then_some(is_cm),
        codim_two_equivalence: (c == 2).then_some((generators == r + 1) == is_cm),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Vertex;
    use crate::corpus::{
        cm_triple_example, cogeneric_example, depth_one_example, generic_example,
        permutahedron_ideal, random_cogeneric, rng_from_seed, tree_ideal,
    };
    use crate::resolution::{self, ResolutionTarget};

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn dual_vector_matches_hand_values() {
        let ctx = DualContext::symmetric(3, 2);
        let d = |v: &[u32]| ctx.dual_vector(&ExponentVector::new(v.to_vec())).unwrap();
        assert_eq!(d(&[1, 1, 0]), ExponentVector::new(vec![2, 2, 0]));
        assert_eq!(d(&[2, 2, 2]), ExponentVector::new(vec![1, 1, 1]));
        assert_eq!(d(&[0, 0, 0]), ExponentVector::zeros(3));
        // involution inside the box
        for b in [[2, 1, 0], [1, 0, 2], [2, 2, 1]] {
            let b = ExponentVector::new(b.to_vec());
            assert_eq!(ctx.dual_vector(&ctx.dual_vector(&b).unwrap()).unwrap(), b);
        }
        // above the bound is rejected
        assert!(ctx.dual_vector(&ExponentVector::new(vec![3, 0, 0])).is_err());
    }

    #[test]
    fn running_example_ideals_are_dual_to_each_other() {
        let m = cogeneric_example();
        let ctx = DualContext::symmetric(3, 2);
        assert_eq!(alexander_dual(&m, &ctx).unwrap(), generic_example());
        assert_eq!(alexander_dual(&generic_example(), &ctx).unwrap(), m);
    }

    #[test]
    fn tree_and_permutahedron_ideals_are_dual() {
        for n in 2..=4 {
            let tree = tree_ideal(n).unwrap();
            let perm = permutahedron_ideal(n).unwrap();
            let ctx = DualContext::symmetric(n, n as u32);
            assert_eq!(alexander_dual(&tree, &ctx).unwrap(), perm);
            assert_eq!(alexander_dual(&perm, &ctx).unwrap(), tree);
        }
    }

    #[test]
    fn duality_is_an_involution_on_random_ideals() {
        let mut rng = rng_from_seed(41);
        for _ in 0..12 {
            let m = crate::corpus::random_ideal(&mut rng, 4, 5, 3).unwrap();
            let ctx = DualContext::for_ideal(&m).unwrap();
            let dual = alexander_dual(&m, &ctx).unwrap();
            assert_eq!(alexander_dual(&dual, &ctx).unwrap(), m);
        }
    }

    #[test]
    fn bound_validation_rejects_small_contexts() {
        let m = cogeneric_example(); // max exponent 2
        let ctx = DualContext::symmetric(3, 1);
        assert!(matches!(
            alexander_dual(&m, &ctx),
            Err(Error::BoundTooSmall { .. })
        ));
    }

    #[test]
    fn cogenericity_verdicts() {
        assert!(is_cogeneric(&cogeneric_example()).unwrap().cogeneric);
        assert!(is_cogeneric(&permutahedron_ideal(3).unwrap()).unwrap().cogeneric);
        assert!(is_cogeneric(&depth_one_example().unwrap()).unwrap().cogeneric);
        assert!(is_cogeneric(&cm_triple_example().unwrap()).unwrap().cogeneric);
        // single component: vacuously cogeneric
        let irr = MonomialIdeal::from_exps(2, &[&[2, 0], &[0, 2]]).unwrap();
        let report = is_cogeneric(&irr).unwrap();
        assert!(report.cogeneric);
        assert!(report.shared_generators.is_empty());
        assert_eq!(report.components, 1);
        // <x, yz> = <x,y> n <x,z>: the components share x, no witness exists
        let bad = MonomialIdeal::from_exps(3, &[&[1, 0, 0], &[0, 1, 1]]).unwrap();
        let report = is_cogeneric(&bad).unwrap();
        assert!(!report.cogeneric);
        assert_eq!(report.violations, vec![(0, 1)]);
        assert_eq!(report.shared_generators, vec![(0, 1, 0)]);
    }

    #[test]
    fn running_example_interior_faces() {
        let m = cogeneric_example();
        let cs = co_scarf(&m, None).unwrap();
        assert_eq!(cs.interior_faces().len(), 11);
        assert_eq!(cs.interior_counts(), vec![0, 1, 5, 5]);

        // locate dual generators by content: xyz, x^2z^2, x^2y^2
        let dual = cs.dual_ideal();
        let idx = |exps: [u32; 3]| {
            Vertex::Gen(
                dual.generators()
                    .iter()
                    .position(|g| g.exponents().as_slice() == exps)
                    .unwrap(),
            )
        };
        let (xyz, xxzz, xxyy) = (idx([1, 1, 1]), idx([2, 0, 2]), idx([2, 2, 0]));
        let (x, y, z) = (Vertex::Var(0), Vertex::Var(1), Vertex::Var(2));
        let expected: Vec<Face> = [
            vec![xyz],
            vec![xyz, xxyy],
            vec![xyz, xxzz],
            vec![xyz, x],
            vec![xyz, y],
            vec![xyz, z],
            vec![xyz, xxyy, x],
            vec![xyz, xxyy, y],
            vec![xyz, xxzz, x],
            vec![xyz, xxzz, z],
            vec![xyz, y, z],
        ]
        .into_iter()
        .map(Face::new)
        .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(cs.interior_faces(), expected.as_slice());
    }

    #[test]
    fn interior_faces_are_superset_closed() {
        for (ideal, t) in [
            (cogeneric_example(), None),
            (cm_triple_example().unwrap(), None),
            (permutahedron_ideal(3).unwrap(), None),
        ] {
            let cs = co_scarf(&ideal, t).unwrap();
            for face in cs.labeled().complex().all_faces() {
                if !cs.is_interior(&face) {
                    continue;
                }
                for bigger in cs.labeled().complex().all_faces() {
                    if face.is_subset_of(&bigger) {
                        assert!(cs.is_interior(&bigger));
                    }
                }
            }
        }
    }

    #[test]
    fn running_example_co_scarf_resolution() {
        let m = cogeneric_example();
        let complex = algebraic_co_scarf(&m, None).unwrap();
        assert_eq!(complex.ranks(), vec![5, 5, 1]);
        complex.verify_complex().unwrap();
        assert!(complex.is_minimal());

        let limits = Limits::default();
        let report = complex
            .check_exactness(&m, ResolutionTarget::Module, q(), &limits)
            .unwrap();
        assert!(report.exact, "failures: {:?}", report.failures);

        // strand ranks and degrees agree with the independent Betti oracle
        let table = complex.betti_numbers(q(), &limits).unwrap();
        let oracle = betti_oracle(&m, q(), &limits).unwrap().shift_to_module();
        assert_eq!(table, oracle);

        // facet multidegrees are exactly the minimal generators
        let mut facet_degrees: Vec<ExponentVector> = complex
            .strand(0)
            .iter()
            .map(|b| b.degree.clone())
            .collect();
        facet_degrees.sort();
        let mut gens: Vec<ExponentVector> = m
            .generators()
            .iter()
            .map(|g| g.exponents().clone())
            .collect();
        gens.sort();
        assert_eq!(facet_degrees, gens);
    }

    #[test]
    fn symmetric_bound_fixes_facet_degrees_of_small_principal_ideal() {
        // For <x^2> with bound t = 2 the single facet must sit in
        // multidegree x^2; deriving the marker degree from the dual
        // ideal alone would give x instead.
        let m = MonomialIdeal::from_exps(1, &[&[2]]).unwrap();
        let complex = algebraic_co_scarf(&m, Some(2)).unwrap();
        assert_eq!(complex.ranks(), vec![1]);
        assert_eq!(
            complex.strand(0)[0].degree,
            ExponentVector::new(vec![2])
        );
    }

    #[test]
    fn co_scarf_resolutions_match_oracle_on_fixtures() {
        let limits = Limits::default();
        for (ideal, t) in [
            (depth_one_example().unwrap(), None),
            (cm_triple_example().unwrap(), None),
            (permutahedron_ideal(3).unwrap(), None),
            (MonomialIdeal::from_exps(2, &[&[1, 0], &[0, 1]]).unwrap(), None),
        ] {
            let complex = algebraic_co_scarf(&ideal, t).unwrap();
            complex.verify_complex().unwrap();
            assert!(complex.is_minimal());
            let report = complex
                .check_exactness(&ideal, ResolutionTarget::Module, q(), &limits)
                .unwrap();
            assert!(report.exact, "{} failures: {:?}", ideal.render(), report.failures);
            let table = complex.betti_numbers(q(), &limits).unwrap();
            let oracle = betti_oracle(&ideal, q(), &limits)
                .unwrap()
                .shift_to_module();
            assert_eq!(table, oracle, "Betti mismatch for {}", ideal.render());
        }
    }

    #[test]
    fn co_scarf_on_random_cogeneric_ideals_matches_oracle() {
        let limits = Limits::default();
        let mut rng = rng_from_seed(57);
        let mut checked = 0;
        while checked < 6 {
            let m = random_cogeneric(&mut rng, 3, 3, 2).unwrap();
            let Ok(cs) = co_scarf(&m, None) else { continue };
            checked += 1;
            let complex = cs.algebraic().unwrap();
            complex.verify_complex().unwrap();
            let table = complex.betti_numbers(q(), &limits).unwrap();
            let oracle = betti_oracle(&m, q(), &limits).unwrap().shift_to_module();
            assert_eq!(table, oracle, "Betti mismatch for {}", m.render());
        }
    }

    #[test]
    fn permutahedron_facet_count_is_generator_count() {
        let cs = co_scarf(&permutahedron_ideal(3).unwrap(), None).unwrap();
        let counts = cs.interior_counts();
        assert_eq!(counts[3], 6); // 3! facets = 3! generators
    }

    #[test]
    fn depth_fixtures() {
        assert_eq!(depth_cogeneric(&cogeneric_example(), None).unwrap(), 0);
        assert_eq!(depth_cogeneric(&depth_one_example().unwrap(), None).unwrap(), 1);
        assert_eq!(depth_cogeneric(&cm_triple_example().unwrap(), None).unwrap(), 2);
    }

    #[test]
    fn depth_agrees_with_resolution_depth() {
        let limits = Limits::default();
        for ideal in [
            cogeneric_example(),
            depth_one_example().unwrap(),
            cm_triple_example().unwrap(),
            permutahedron_ideal(3).unwrap(),
        ] {
            assert_eq!(
                depth_cogeneric(&ideal, None).unwrap(),
                resolution::depth(&ideal, q(), &limits).unwrap(),
                "depth mismatch for {}",
                ideal.render()
            );
        }
    }

    #[test]
    fn excess_of_basic_faces() {
        let cs = co_scarf(&cogeneric_example(), None).unwrap();
        assert_eq!(cs.excess(&Face::empty()), 0);
        // variable markers have excess 0, generator vertices supp - 1
        for v in cs.labeled().complex().vertices() {
            let f = Face::new(vec![v]);
            match v {
                Vertex::Var(_) => assert_eq!(cs.excess(&f), 0),
                Vertex::Gen(i) => {
                    let supp = cs.dual_ideal().generators()[i].support_size() as i64;
                    assert_eq!(cs.excess(&f), supp - 1);
                }
            }
        }
    }

    #[test]
    fn serre_s2_fixtures() {
        let limits = Limits::default();
        assert!(!serre_s2(&depth_one_example().unwrap(), q(), &limits).unwrap().satisfied);
        assert!(!serre_s2(&cogeneric_example(), q(), &limits).unwrap().satisfied);
        assert!(serre_s2(&cm_triple_example().unwrap(), q(), &limits).unwrap().satisfied);
        let hypersurface = MonomialIdeal::from_exps(2, &[&[1, 0]]).unwrap();
        assert!(serre_s2(&hypersurface, q(), &limits).unwrap().satisfied);
    }

    #[test]
    fn cm_report_on_running_example_is_all_false() {
        let limits = Limits::default();
        let report = cm_cogeneric(&cogeneric_example(), None, q(), &limits).unwrap();
        assert!(!report.cm_by_resolution);
        assert!(!report.serre_s2);
        assert!(!report.component_sums);
        assert!(!report.excess_bound);
        assert!(!report.interior_dims);
        assert!(report.consistent);
        assert_eq!(report.uniform_codim, None);
        assert_eq!(report.codim, 2);
    }

    #[test]
    fn cm_report_on_cm_fixtures_is_all_true() {
        let limits = Limits::default();
        for ideal in [
            cm_triple_example().unwrap(),
            crate::corpus::optimal_family(2, 2).unwrap(),
        ] {
            let report = cm_cogeneric(&ideal, None, q(), &limits).unwrap();
            assert!(report.cm_by_resolution, "{}", ideal.render());
            assert!(report.serre_s2);
            assert!(report.component_sums);
            assert!(report.excess_bound);
            assert!(report.interior_dims);
            assert!(report.consistent);
        }
    }

    #[test]
    fn cm_reports_are_consistent_on_random_cogeneric_ideals() {
        let limits = Limits::default();
        let mut rng = rng_from_seed(91);
        let mut checked = 0;
        while checked < 6 {
            let m = random_cogeneric(&mut rng, 3, 3, 2).unwrap();
            let Ok(report) = cm_cogeneric(&m, None, q(), &limits) else {
                continue;
            };
            checked += 1;
            assert!(report.consistent, "inconsistent CM report for {}", m.render());
        }
    }

    #[test]
    fn type_bound_fixtures() {
        let limits = Limits::default();
        let report = cm_type_bound(&cm_triple_example().unwrap(), q(), &limits).unwrap();
        assert!(report.applicable);
        assert_eq!(report.components, 3);
        assert!(report.cm_type >= 3);
        assert_eq!(report.bound_holds, Some(true));

        let report =
            cm_type_bound(&crate::corpus::optimal_family(3, 2).unwrap(), q(), &limits).unwrap();
        assert!(report.applicable);
        assert_eq!(report.bound_holds, Some(true));

        // not CM: the bound does not apply
        let report = cm_type_bound(&cogeneric_example(), q(), &limits).unwrap();
        assert!(!report.applicable);
        assert_eq!(report.bound_holds, None);
    }

    #[test]
    fn gorenstein_fixtures() {
        let limits = Limits::default();
        let irr = MonomialIdeal::from_exps(2, &[&[2, 0], &[0, 3]]).unwrap();
        let report = gorenstein(&irr, q(), &limits).unwrap();
        assert!(report.gorenstein);
        assert!(report.irreducible);
        assert_eq!(report.characterization, Some(true));

        let principal = MonomialIdeal::from_exps(2, &[&[2, 1]]).unwrap();
        let report = gorenstein(&principal, q(), &limits).unwrap();
        assert!(report.gorenstein);
        assert!(report.principal);
        assert_eq!(report.characterization, Some(true));

        // type 1 but not CM: not Gorenstein, and neither principal nor
        // irreducible — the characterization still holds
        let report = gorenstein(&cogeneric_example(), q(), &limits).unwrap();
        assert!(!report.gorenstein);
        assert_eq!(report.cm_type, 1);
        assert_eq!(report.characterization, Some(true));

        let not_gor = cm_triple_example().unwrap(); // type >= 3
        let report = gorenstein(&not_gor, q(), &limits).unwrap();
        assert!(!report.gorenstein);
        assert_eq!(report.characterization, Some(true));
    }

    #[test]
    fn dual_betti_inequality_sweeps() {
        let limits = Limits::default();
        for (ideal, ctx) in [
            (cogeneric_example(), DualContext::symmetric(3, 2)),
            (generic_example(), DualContext::symmetric(3, 2)),
            (tree_ideal(2).unwrap(), DualContext::symmetric(2, 2)),
        ] {
            let checks = dual_betti_sweep(&ideal, &ctx, q(), &limits).unwrap();
            assert!(!checks.is_empty());
            for check in &checks {
                assert!(
                    check.holds,
                    "{}: beta_{},{:?} of the dual is {} > {}",
                    ideal.render(),
                    check.homological_index,
                    check.degree,
                    check.lhs,
                    check.rhs
                );
            }
            // the bound is attained somewhere nontrivial
            assert!(checks.iter().any(|c| c.lhs > 0 && c.lhs == c.rhs));
        }
    }

    #[test]
    fn dual_betti_out_of_range_index_is_trivially_true() {
        let limits = Limits::default();
        let ctx = DualContext::symmetric(3, 2);
        let b = ExponentVector::new(vec![1, 1, 0]);
        let check =
            dual_betti_inequality(&cogeneric_example(), &ctx, 7, &b, q(), &limits).unwrap();
        assert_eq!(check.lhs, 0);
        assert_eq!(check.rhs, 0);
        assert!(check.holds);
    }

    #[test]
    fn generator_bound_fixtures() {
        let limits = Limits::default();
        for (c, r) in [(2usize, 2usize), (2, 3), (3, 2)] {
            let ideal = crate::corpus::optimal_family(c, r).unwrap();
            let report = generator_bound_cogeneric(&ideal, q(), &limits).unwrap();
            assert!(report.applicable);
            assert_eq!(report.codim, Some(c));
            assert_eq!(report.generators, (c - 1) * r + 1);
            assert_eq!(report.tight, Some(true));
            assert_eq!(report.tight_implies_cm, Some(true));
            if c == 2 {
                assert_eq!(report.codim_two_equivalence, Some(true));
            }
        }

        // tight at c=2, r=3 from the intersection fixture
        let report = generator_bound_cogeneric(&cm_triple_example().unwrap(), q(), &limits).unwrap();
        assert_eq!(report.codim, Some(2));
        assert_eq!(report.components, 3);
        assert_eq!(report.generators, 4);
        assert_eq!(report.codim_two_equivalence, Some(true));

        // mixed component codimensions: not applicable
        let report = generator_bound_cogeneric(&permutahedron_ideal(3).unwrap(), q(), &limits).unwrap();
        assert!(!report.applicable);
        assert_eq!(report.bound_holds, None);
    }

    #[test]
    fn non_cogeneric_inputs_are_refused_by_theorem_checks() {
        let bad = MonomialIdeal::from_exps(3, &[&[1, 0, 0], &[0, 1, 1]]).unwrap();
        assert!(matches!(co_scarf(&bad, None), Err(Error::NotCogeneric(_))));
        assert!(co_scarf_unchecked(&bad, None).is_ok());
        let limits = Limits::default();
        assert!(matches!(
            cm_type_bound(&bad, q(), &limits),
            Err(Error::NotCogeneric(_))
        ));
        assert!(matches!(
            generator_bound_cogeneric(&bad, q(), &limits),
            Err(Error::NotCogeneric(_))
        ));
    }
}
