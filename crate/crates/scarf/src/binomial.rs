//! Pure-difference binomial ideals and their initial ideals.
//!
//! The inputs here are explicit generating sets of *pure-difference*
//! binomial ideals: ideals generated by differences of monomials
//! `x^a - x^b`.  The interesting case is a **lattice ideal**, generated by
//! all differences `x^(u+) - x^(u-)` as `u` runs over a lattice
//! `L ⊆ ℤ^n`; callers assert that their generating set really generates
//! the lattice ideal (saturation is out of scope).  A lattice ideal is
//! called **generic** when it admits a generating set in which every
//! binomial has full support, i.e. every difference vector `a - b` is
//! nonzero in every coordinate.
//!
//! The engine is a deterministic [Buchberger] loop specialised to
//! binomials: S-pairs and reduction steps of pure differences are again
//! pure differences, and this closure property is asserted at every step.
//! On top of it sit the checks this crate cares about:
//!
//! * [`initial_ideal`] — the monomial ideal of leading terms under a
//!   weighted reverse-lexicographic [`TermOrder`];
//! * [`check_initial_generic`] — for generic lattice input, the reverse-lex
//!   initial ideal is a generic monomial ideal (in the lcm-witness sense);
//! * [`check_pd_bound`] — `proj_dim(S/M) ≤ 2^c - 1` where `c` is the
//!   common codimension of the lattice ideal and its initial ideal `M`;
//! * [`conjecture_report`] — whether some associated prime of `S/M` has
//!   codimension equal to `proj_dim(S/M)`.  This is reported, not
//!   asserted: it is proved for reverse-lex initial ideals of generic
//!   lattice ideals and for codimension 2, and open in general;
//! * [`census_initial_ideals`] — the distinct initial ideals obtained from
//!   all weight vectors in an integer box (ties broken by reverse-lex).
//!   A sampling device, not a Gröbner-fan traversal.
//!
//! [Buchberger]: https://en.wikipedia.org/wiki/Buchberger%27s_algorithm

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap};
use std::ops::RangeInclusive;

use crate::assoc::associated_primes;
use crate::error::{Error, Result};
use crate::generic::{is_generic, GenericityReport};
use crate::homology::Field;
use crate::ideal::{parse_monomial, parse_names, MonomialIdeal};
use crate::limits::Limits;
use crate::monomial::{ExponentVector, Monomial};
use crate::resolution;

/// Hard cap on the number of weight vectors a census will enumerate.
pub const CENSUS_CAP: usize = 4096;

// ---------------------------------------------------------------------------
// Binomials
// ---------------------------------------------------------------------------

/// A difference of two monomials `x^plus - x^minus` with `plus ≠ minus`.
///
/// [`Binomial::new`] normalises its input by cancelling the common
/// monomial factor, so constructed binomials have `min(plus, minus) = 0`
/// entrywise — the two sides have disjoint support.  This identifies a
/// binomial with its difference vector `plus - minus ∈ ℤ^n`, the lattice
/// point it represents.
///
/// Gröbner bases *computed* from binomials are returned verbatim: when the
/// input ideal is not saturated with respect to the variables, a reduced
/// Gröbner basis can legitimately contain elements whose sides share a
/// factor (for example `y^2 - y`), and cancelling it would change the
/// ideal.  Such elements are built internally and never re-normalised.
///
/// The sign of a binomial is not meaningful (`x^a - x^b` and `x^b - x^a`
/// generate the same ideal), so equality is taken up to sign: the stored
/// orientation is canonical, with `plus` the lexicographically larger
/// side.
#[derive(Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Binomial {
    plus: ExponentVector,
    minus: ExponentVector,
}

impl Binomial {
    /// Build a binomial from the exponent vectors of its two sides,
    /// cancelling their common factor.  Rejects sides of different
    /// lengths and sides that agree after cancellation.
    pub fn new(a: ExponentVector, b: ExponentVector) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::AmbientMismatch(a.len(), b.len()));
        }
        let common = a.meet(&b);
        let plus = a
            .checked_sub(&common)
            .expect("meet is entrywise at most each side");
        let minus = b
            .checked_sub(&common)
            .expect("meet is entrywise at most each side");
        if plus == minus {
            return Err(Error::Precondition(
                "the two sides of a binomial must differ".into(),
            ));
        }
        Ok(Self::from_oriented_parts(plus, minus))
    }

    /// Internal constructor for Gröbner-basis elements: keeps both sides
    /// verbatim (no cancellation) and only fixes the canonical sign.
    pub(crate) fn from_oriented_parts(a: ExponentVector, b: ExponentVector) -> Self {
        debug_assert_eq!(a.len(), b.len());
        debug_assert_ne!(a, b, "zero binomial");
        if a.as_slice() < b.as_slice() {
            Binomial { plus: b, minus: a }
        } else {
            Binomial { plus: a, minus: b }
        }
    }

    /// Number of ambient variables.
    pub fn num_vars(&self) -> usize {
        self.plus.len()
    }

    /// The canonically-first side.
    pub fn plus(&self) -> &ExponentVector {
        &self.plus
    }

    /// The canonically-second side.
    pub fn minus(&self) -> &ExponentVector {
        &self.minus
    }

    /// Whether the difference vector `plus - minus` is nonzero in *every*
    /// variable.  A lattice ideal generated by full-support binomials is a
    /// generic lattice ideal.
    pub fn has_full_support(&self) -> bool {
        (0..self.num_vars()).all(|s| self.plus.get(s) != self.minus.get(s))
    }

    /// The side that leads under `order`, then the other side.
    pub fn oriented(&self, order: &TermOrder) -> (&ExponentVector, &ExponentVector) {
        match order.cmp_vectors(&self.plus, &self.minus) {
            Ordering::Less => (&self.minus, &self.plus),
            _ => (&self.plus, &self.minus),
        }
    }

    /// The exponent of the leading term under `order`.
    pub fn lead(&self, order: &TermOrder) -> &ExponentVector {
        self.oriented(order).0
    }

    /// Print as `a^4 - b*c*d`; a trivial side prints as `1`.
    pub fn render(&self, names: &[String]) -> String {
        let side = |v: &ExponentVector| Monomial::new(v.clone()).render(names);
        format!("{} - {}", side(&self.plus), side(&self.minus))
    }
}

impl std::fmt::Debug for Binomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x^{:?} - x^{:?}", self.plus, self.minus)
    }
}

// ---------------------------------------------------------------------------
// Term orders
// ---------------------------------------------------------------------------

/// A weighted reverse-lexicographic term order.
///
/// Monomials compare first by weighted degree (strictly positive integer
/// weights; all ones by default) — higher weight wins.  Ties are broken
/// reverse-lexicographically: scanning the variable order from the *last*
/// (cheapest) variable backwards, the first variable where the exponents
/// differ decides, and the monomial with the *smaller* exponent there is
/// the larger one.  `variable_order[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TermOrder {
    weights: Vec<u64>,
    variable_order: Vec<usize>,
}

impl TermOrder {
    /// The standard reverse-lexicographic order on `n` variables: all
    /// weights 1, natural variable order `x_0 > x_1 > … > x_{n-1}`.
    pub fn revlex(n: usize) -> Self {
        TermOrder {
            weights: vec![1; n],
            variable_order: (0..n).collect(),
        }
    }

    /// Reverse-lex with the given weights (natural variable order).
    /// Weights must be strictly positive so the order is a well-order.
    pub fn with_weights(weights: Vec<u64>) -> Result<Self> {
        if let Some(s) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Precondition(format!(
                "term-order weights must be strictly positive; weight of variable {s} is 0"
            )));
        }
        let n = weights.len();
        Ok(TermOrder {
            weights,
            variable_order: (0..n).collect(),
        })
    }

    /// Replace the variable order.  `order[0]` becomes the most
    /// significant variable; the slice must be a permutation of `0..n`.
    pub fn with_variable_order(mut self, order: Vec<usize>) -> Result<Self> {
        let n = self.weights.len();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::Precondition(format!(
                "variable order has {} entries for {} variables",
                order.len(),
                n
            )));
        }
        for &s in &order {
            if s >= n || seen[s] {
                return Err(Error::Precondition(format!(
                    "variable order {order:?} is not a permutation of 0..{n}"
                )));
            }
            seen[s] = true;
        }
        self.variable_order = order;
        Ok(self)
    }

    /// Number of ambient variables.
    pub fn num_vars(&self) -> usize {
        self.weights.len()
    }

    /// The weight vector.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// The variable order, most significant first.
    pub fn variable_order(&self) -> &[usize] {
        &self.variable_order
    }

    /// Weighted degree of an exponent vector.
    pub fn weighted_degree(&self, v: &ExponentVector) -> u64 {
        debug_assert_eq!(v.len(), self.num_vars());
        v.iter()
            .zip(&self.weights)
            .map(|(e, &w)| u64::from(e) * w)
            .sum()
    }

    /// Whether the weights make every given binomial homogeneous
    /// (`weights · plus = weights · minus`).
    ///
    /// When this holds the weights grade the whole ideal, every
    /// comparison that arises inside it is a tie decided purely by the
    /// reverse-lex scan, and the initial ideal is a genuine *reverse-lex*
    /// initial ideal in the sense the genericity theorem needs.  With
    /// incompatible weights the order is still a term order — the census
    /// exploits exactly that — but its initial ideals are weight-then-
    /// revlex ones, outside the scope of the revlex-specific results.
    pub fn is_compatible_with(&self, gens: &[Binomial]) -> bool {
        gens.iter()
            .all(|g| self.weighted_degree(g.plus()) == self.weighted_degree(g.minus()))
    }

    /// Compare two exponent vectors.  Total on vectors of the right
    /// length: `Equal` only for identical vectors.
    pub fn cmp_vectors(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        let by_weight = self.weighted_degree(a).cmp(&self.weighted_degree(b));
        if by_weight != Ordering::Equal {
            return by_weight;
        }
        for &s in self.variable_order.iter().rev() {
            if a.get(s) != b.get(s) {
                // smaller exponent in the last differing variable wins
                return b.get(s).cmp(&a.get(s));
            }
        }
        Ordering::Equal
    }
}

// ---------------------------------------------------------------------------
// Binomial systems (named generating sets)
// ---------------------------------------------------------------------------

/// A generating set of binomials together with its variable names — the
/// parsed form of the text format below, and the input the ideal-level
/// checks work on.
///
/// ```text
/// vars: a,b,c,d
/// a*c - b^2
/// a*d - b*c
/// b*d - c^2
/// ```
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BinomialSystem {
    names: Vec<String>,
    binomials: Vec<Binomial>,
}

impl BinomialSystem {
    /// Bundle names and binomials, checking ambient consistency.  An
    /// empty generating set is rejected: it generates the zero ideal,
    /// which has no initial ideal.
    pub fn new(names: Vec<String>, binomials: Vec<Binomial>) -> Result<Self> {
        if binomials.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for b in &binomials {
            if b.num_vars() != names.len() {
                return Err(Error::AmbientMismatch(b.num_vars(), names.len()));
            }
        }
        Ok(BinomialSystem { names, binomials })
    }

    /// Parse the text format: a `vars:` header, then one binomial per
    /// line as two monomials separated by `-` (either side may be `1`).
    /// Blank lines and `#` comments are skipped.
    pub fn parse(input: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut binomials: Vec<Binomial> = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vars:") {
                if names.is_some() {
                    return Err(Error::parse(lineno, "duplicate vars: header"));
                }
                names = Some(parse_names(rest, lineno)?);
                continue;
            }
            let Some(names) = names.as_ref() else {
                return Err(Error::parse(lineno, "expected vars: header first"));
            };
            if line.matches('-').count() != 1 {
                return Err(Error::parse(
                    lineno,
                    "a binomial line needs exactly one '-' between its two monomials",
                ));
            }
            let (lhs, rhs) = line.split_once('-').expect("counted one dash");
            let plus = parse_side(lhs, names, lineno)?;
            let minus = parse_side(rhs, names, lineno)?;
            match Binomial::new(plus, minus) {
                Ok(b) => binomials.push(b),
                Err(Error::Precondition(msg)) => return Err(Error::parse(lineno, msg)),
                Err(other) => return Err(other),
            }
        }
        let Some(names) = names else {
            return Err(Error::parse(input.lines().count(), "missing vars: header"));
        };
        BinomialSystem::new(names, binomials)
    }

    /// The variable names.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The binomial generators, in input order.
    pub fn binomials(&self) -> &[Binomial] {
        &self.binomials
    }

    /// Number of ambient variables.
    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    /// Whether every generator has full support — the presented form of a
    /// *generic* lattice ideal.
    pub fn is_full_support(&self) -> bool {
        self.binomials.iter().all(Binomial::has_full_support)
    }

    /// Print in the same format [`BinomialSystem::parse`] accepts.
    pub fn render(&self) -> String {
        let mut out = format!("vars: {}\n", self.names.join(","));
        for b in &self.binomials {
            out.push_str(&b.render(&self.names));
            out.push('\n');
        }
        out
    }
}

/// One side of a binomial line: a monomial, or the literal `1`.
fn parse_side(token: &str, names: &[String], lineno: usize) -> Result<ExponentVector> {
    let compact: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "1" {
        return Ok(ExponentVector::zeros(names.len()));
    }
    Ok(parse_monomial(&compact, names, lineno)?.into_exponents())
}

// ---------------------------------------------------------------------------
// Buchberger engine
// ---------------------------------------------------------------------------

/// One rewriting step `x^m ↦ x^(m - lead + tail)` by the basis element
/// `x^lead - x^tail`.  The divisibility of `m` by `lead` is re-checked so
/// that a bookkeeping bug surfaces as an invariant violation instead of a
/// silently wrong basis — this is the per-step binomiality assertion:
/// rewriting a monomial always yields a monomial, never a polynomial.
fn rewrite(m: &ExponentVector, lead: &ExponentVector, tail: &ExponentVector) -> Result<ExponentVector> {
    let quotient = m.checked_sub(lead).ok_or_else(|| {
        Error::Invariant("binomial reduction step applied to a non-multiple".into())
    })?;
    Ok(quotient.checked_add(tail))
}

/// Fully reduce the pure difference `x^a - x^b` by the oriented basis.
/// Returns the reduced `(lead, tail)` pair, or `None` if the difference
/// reduces to zero.  Every intermediate result is again a pure difference.
fn reduce_pair(
    mut a: ExponentVector,
    mut b: ExponentVector,
    basis: &[(ExponentVector, ExponentVector)],
    order: &TermOrder,
) -> Result<Option<(ExponentVector, ExponentVector)>> {
    loop {
        if a == b {
            return Ok(None);
        }
        if order.cmp_vectors(&a, &b) == Ordering::Less {
            std::mem::swap(&mut a, &mut b);
        }
        // Top-reduce the leading side first, then the trailing side; the
        // first dividing basis element (in basis order) is used, so the
        // normal form is deterministic.
        if let Some((lead, tail)) = basis.iter().find(|(lead, _)| lead.leq(&a)) {
            a = rewrite(&a, lead, tail)?;
            continue;
        }
        if let Some((lead, tail)) = basis.iter().find(|(lead, _)| lead.leq(&b)) {
            b = rewrite(&b, lead, tail)?;
            continue;
        }
        return Ok(Some((a, b)));
    }
}

/// Compute the reduced Gröbner basis of the ideal generated by `gens`
/// with respect to `order`.
///
/// S-pairs are processed by increasing weighted degree of their lcm
/// (normal selection) from a deterministic queue; pairs with coprime
/// leading terms are skipped.  If the smallest pending S-pair exceeds
/// `limits.gb_degree` the run aborts with
/// [`Error::DegreeCapExceeded`] — a safety valve, not an expected outcome.
///
/// The result is the unique reduced basis: leading terms form the minimal
/// generating set of the initial ideal, no leading term divides any other
/// element's trailing term, and the list is sorted by leading exponents.
pub fn buchberger(
    gens: &[Binomial],
    order: &TermOrder,
    limits: &Limits,
) -> Result<Vec<Binomial>> {
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let n = order.num_vars();
    for g in gens {
        if g.num_vars() != n {
            return Err(Error::AmbientMismatch(g.num_vars(), n));
        }
    }

    // Working basis of oriented (lead, tail) pairs, duplicates dropped.
    let mut basis: Vec<(ExponentVector, ExponentVector)> = Vec::new();
    let mut seen: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
    for g in gens {
        let (lead, tail) = g.oriented(order);
        if seen.insert((lead.as_slice().to_vec(), tail.as_slice().to_vec())) {
            basis.push((lead.clone(), tail.clone()));
        }
    }

    // Pending S-pairs keyed by (weighted lcm degree, lcm, i, j): popping
    // the minimum implements the normal selection strategy and makes the
    // whole run deterministic.
    type PairKey = Reverse<(u64, Vec<u32>, usize, usize)>;
    let mut queue: BinaryHeap<PairKey> = BinaryHeap::new();
    let push_pairs = |queue: &mut BinaryHeap<PairKey>,
                      basis: &[(ExponentVector, ExponentVector)],
                      j: usize| {
        for i in 0..j {
            // Coprime leading terms: the S-pair reduces to zero.
            if basis[i].0.meet(&basis[j].0).is_zero() {
                continue;
            }
            let lcm = basis[i].0.join(&basis[j].0);
            let deg = order_weighted(&lcm, order);
            queue.push(Reverse((deg, lcm.as_slice().to_vec(), i, j)));
        }
    };
    for j in 1..basis.len() {
        push_pairs(&mut queue, &basis, j);
    }

    let cap = u64::from(limits.gb_degree);
    while let Some(Reverse((deg, lcm, i, j))) = queue.pop() {
        if deg > cap {
            return Err(Error::DegreeCapExceeded(limits.gb_degree));
        }
        let lcm = ExponentVector::new(lcm);
        // S-pair of x^li - x^ti and x^lj - x^tj with L = lcm(li, lj):
        // x^(L - li + ti) - x^(L - lj + tj), again a pure difference.
        let a = rewrite(&lcm, &basis[i].0, &basis[i].1)?;
        let b = rewrite(&lcm, &basis[j].0, &basis[j].1)?;
        if let Some((lead, tail)) = reduce_pair(a, b, &basis, order)? {
            let j_new = basis.len();
            basis.push((lead, tail));
            push_pairs(&mut queue, &basis, j_new);
        }
    }

    // Inter-reduce: keep only elements with minimal leading terms …
    basis.sort_by(|x, y| {
        order
            .cmp_vectors(&x.0, &y.0)
            .then_with(|| order.cmp_vectors(&x.1, &y.1))
    });
    let mut kept: Vec<(ExponentVector, ExponentVector)> = Vec::new();
    for (lead, tail) in basis {
        if kept.iter().any(|(l, _)| l.leq(&lead)) {
            continue;
        }
        kept.push((lead, tail));
    }
    // … and bring every trailing term to its normal form.  Rewrites use
    // the current tails of the other elements, so iterate to a fixpoint
    // (each rewrite strictly decreases a tail in the term order).
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            while let Some(j) = (0..kept.len()).find(|&j| kept[j].0.leq(&kept[i].1)) {
                let (lead_j, tail_j) = kept[j].clone();
                kept[i].1 = rewrite(&kept[i].1, &lead_j, &tail_j)?;
                changed = true;
                if kept[i].1 == kept[i].0 {
                    return Err(Error::Invariant(
                        "inter-reduction collapsed a basis element to zero".into(),
                    ));
                }
            }
        }
        if !changed {
            break;
        }
    }

    kept.sort_by(|x, y| x.0.as_slice().cmp(y.0.as_slice()));
    Ok(kept
        .into_iter()
        .map(|(lead, tail)| Binomial::from_oriented_parts(lead, tail))
        .collect())
}

/// Weighted degree helper (free function so closures can use it without
/// borrowing the whole order mutably).
fn order_weighted(v: &ExponentVector, order: &TermOrder) -> u64 {
    order.weighted_degree(v)
}

/// The monomial ideal of leading terms of `gb` under `order`, minimally
/// generated.  Pass a Gröbner basis to get the initial ideal of the ideal
/// it generates; for a non-basis the result is only the ideal generated
/// by the listed leading terms.
pub fn initial_ideal(gb: &[Binomial], order: &TermOrder, names: &[String]) -> Result<MonomialIdeal> {
    let leads = gb
        .iter()
        .map(|g| Monomial::new(g.lead(order).clone()))
        .collect();
    MonomialIdeal::new(names.to_vec(), leads)
}

// ---------------------------------------------------------------------------
// Theorem checks on initial ideals
// ---------------------------------------------------------------------------

/// Outcome of [`check_initial_generic`].
#[derive(Clone, Debug, serde::Serialize)]
pub struct InitialGenericityReport {
    /// The reverse-lex initial ideal that was tested.
    pub initial_ideal: MonomialIdeal,
    /// Size of the reduced Gröbner basis behind it.
    pub basis_size: usize,
    /// Full genericity diagnostics for the initial ideal, including the
    /// strong (`old_generic`) verdict — reverse-lex initial ideals of
    /// generic lattice ideals are generic in the lcm-witness sense but
    /// usually *not* in the strong sense.
    pub genericity: GenericityReport,
    /// Whether the initial ideal is generic (the theorem's conclusion).
    pub holds: bool,
}

/// Check that the reverse-lex initial ideal of a generic lattice ideal is
/// a generic monomial ideal.
///
/// Two hypotheses are machine-checked and enforced as preconditions:
/// every input binomial must have full support (the definition of a
/// presented generic lattice ideal), and the order's weights must make
/// every generator homogeneous (see [`TermOrder::is_compatible_with`]) —
/// otherwise the initial ideal is not a reverse-lex one and the theorem
/// genuinely fails (incompatible weights on a generic lattice ideal do
/// produce non-generic initial ideals).  The remaining hypothesis — that
/// the generators really generate a lattice ideal — is asserted by the
/// caller and not machine-checkable, so the conclusion is reported in
/// `holds` rather than turned into a hard error.
pub fn check_initial_generic(
    system: &BinomialSystem,
    order: &TermOrder,
    limits: &Limits,
) -> Result<InitialGenericityReport> {
    if system.num_vars() != order.num_vars() {
        return Err(Error::AmbientMismatch(system.num_vars(), order.num_vars()));
    }
    for (idx, b) in system.binomials().iter().enumerate() {
        if !b.has_full_support() {
            return Err(Error::Precondition(format!(
                "generator {} ({}) does not have full support, so this is not \
                 a presented generic lattice ideal",
                idx,
                b.render(system.names())
            )));
        }
    }
    if !order.is_compatible_with(system.binomials()) {
        return Err(Error::Precondition(
            "the weights do not make every generator homogeneous, so this \
             order is not reverse-lexicographic for the ideal; use a weight \
             vector w with w·plus = w·minus for each generator"
                .into(),
        ));
    }
    let gb = buchberger(system.binomials(), order, limits)?;
    let initial = initial_ideal(&gb, order, system.names())?;
    let genericity = is_generic(&initial)?;
    Ok(InitialGenericityReport {
        basis_size: gb.len(),
        holds: genericity.generic,
        genericity,
        initial_ideal: initial,
    })
}

/// Outcome of [`check_pd_bound`].
#[derive(Clone, Debug, serde::Serialize)]
pub struct PdBoundReport {
    /// Common codimension `c` of the lattice ideal and its initial ideal.
    pub codim: usize,
    /// Projective dimension of `S/M` for the initial ideal `M`.
    pub proj_dim: usize,
    /// The bound `2^c - 1`.
    pub bound: u64,
    /// `proj_dim ≤ 2^c - 1`.
    pub holds: bool,
    /// The elementary lower bound `codim ≤ proj_dim`.
    pub codim_leq_proj_dim: bool,
}

/// Check `proj_dim(S/M) ≤ 2^c - 1` for the initial ideal `M` of a lattice
/// ideal of codimension `c`.  (Deformation to the initial ideal preserves
/// codimension, so `c` is read off `M`.)
pub fn check_pd_bound(
    system: &BinomialSystem,
    order: &TermOrder,
    field: Field,
    limits: &Limits,
) -> Result<PdBoundReport> {
    if system.num_vars() != order.num_vars() {
        return Err(Error::AmbientMismatch(system.num_vars(), order.num_vars()));
    }
    let gb = buchberger(system.binomials(), order, limits)?;
    let initial = initial_ideal(&gb, order, system.names())?;
    let codim = initial.codim()?;
    let proj_dim = resolution::proj_dim(&initial, field, limits)?;
    let bound = (1u64 << codim) - 1;
    Ok(PdBoundReport {
        codim,
        proj_dim,
        bound,
        holds: proj_dim as u64 <= bound,
        codim_leq_proj_dim: codim <= proj_dim,
    })
}

/// Outcome of [`conjecture_report`].
#[derive(Clone, Debug, serde::Serialize)]
pub struct ConjectureReport {
    /// Codimension of the initial ideal.
    pub codim: usize,
    /// Projective dimension of `S/M`.
    pub proj_dim: usize,
    /// Codimensions of all associated primes of `S/M`, in listing order.
    pub associated_codims: Vec<usize>,
    /// An associated prime of codimension exactly `proj_dim`, if any.
    pub witness: Option<String>,
    /// Whether such a prime exists.
    pub holds: bool,
    /// Whether `holds` is forced by a proved case: genuinely reverse-lex
    /// initial ideals (compatible weights) of generic (full-support)
    /// lattice ideals, or codimension 2 under any term order.  Outside
    /// those cases the statement is an open conjecture and `holds` is
    /// observational.
    pub guaranteed: bool,
}

/// Report whether some associated prime of `S/M` has codimension equal to
/// `proj_dim(S/M)`, for the initial ideal `M` of the given lattice ideal.
pub fn conjecture_report(
    system: &BinomialSystem,
    order: &TermOrder,
    field: Field,
    limits: &Limits,
) -> Result<ConjectureReport> {
    if system.num_vars() != order.num_vars() {
        return Err(Error::AmbientMismatch(system.num_vars(), order.num_vars()));
    }
    let gb = buchberger(system.binomials(), order, limits)?;
    let initial = initial_ideal(&gb, order, system.names())?;
    let codim = initial.codim()?;
    let proj_dim = resolution::proj_dim(&initial, field, limits)?;
    let ass = associated_primes(&initial)?;
    let witness = ass
        .primes()
        .iter()
        .find(|p| p.codim() == proj_dim)
        .map(|p| p.render(system.names()));
    Ok(ConjectureReport {
        codim,
        proj_dim,
        associated_codims: ass.codims(),
        holds: witness.is_some(),
        witness,
        guaranteed: (system.is_full_support() && order.is_compatible_with(system.binomials()))
            || codim == 2,
    })
}

// ---------------------------------------------------------------------------
// Census over a weight box
// ---------------------------------------------------------------------------

/// All distinct initial ideals of the given binomial ideal obtained from
/// weight vectors in the box `range^n`, with ties broken reverse-lex in
/// the natural variable order.
///
/// This samples the Gröbner fan through a finite grid — it can miss
/// initial ideals whose cones avoid the box, so the result is a lower
/// bound on the true count.  The box size is capped at [`CENSUS_CAP`]
/// vectors; the runs are independent and are distributed over threads,
/// with the output in a canonical order (sorted by generator exponents)
/// either way.
pub fn census_initial_ideals(
    system: &BinomialSystem,
    range: RangeInclusive<u64>,
    limits: &Limits,
) -> Result<Vec<MonomialIdeal>> {
    let n = system.num_vars();
    let (lo, hi) = (*range.start(), *range.end());
    if lo == 0 {
        return Err(Error::Precondition(
            "census weights must be strictly positive".into(),
        ));
    }
    if lo > hi {
        return Err(Error::Precondition(format!(
            "empty census weight range {lo}..={hi}"
        )));
    }
    let span = hi - lo + 1;
    let size = (span as u128).checked_pow(n as u32);
    let size = match size {
        Some(s) if s <= CENSUS_CAP as u128 => s as usize,
        _ => {
            return Err(Error::CapExceeded {
                what: "census weight box",
                size: size.map_or(usize::MAX, |s| s.min(usize::MAX as u128) as usize),
                cap: CENSUS_CAP,
            })
        }
    };

    // Enumerate the box in lexicographic order (odometer on the digits).
    let mut weight_vectors: Vec<Vec<u64>> = Vec::with_capacity(size);
    let mut w = vec![lo; n];
    'odometer: loop {
        weight_vectors.push(w.clone());
        for k in (0..n).rev() {
            if w[k] < hi {
                w[k] += 1;
                for digit in w.iter_mut().skip(k + 1) {
                    *digit = lo;
                }
                continue 'odometer;
            }
        }
        break;
    }

    // Independent Buchberger runs, one per weight vector, fanned out over
    // threads; results are collected back in enumeration order so the
    // outcome does not depend on the thread count.
    let workers = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(weight_vectors.len())
        .max(1);
    let chunk = weight_vectors.len().div_ceil(workers);
    let per_weight: Vec<Result<Vec<ExponentVector>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = weight_vectors
            .chunks(chunk)
            .map(|slice| {
                scope.spawn(move || {
                    slice
                        .iter()
                        .map(|w| {
                            let order = TermOrder::with_weights(w.clone())?;
                            let gb = buchberger(system.binomials(), &order, limits)?;
                            Ok(gb.iter().map(|g| g.lead(&order).clone()).collect())
                        })
                        .collect::<Vec<Result<Vec<ExponentVector>>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("census worker panicked"))
            .collect()
    });

    let exponent_key = |m: &MonomialIdeal| -> Vec<Vec<u32>> {
        m.generators()
            .iter()
            .map(|g| g.exponents().as_slice().to_vec())
            .collect()
    };
    let mut seen: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    let mut out: Vec<MonomialIdeal> = Vec::new();
    for leads in per_weight {
        let leads = leads?;
        let ideal = MonomialIdeal::new(
            system.names().to_vec(),
            leads.into_iter().map(Monomial::new).collect(),
        )?;
        if seen.insert(exponent_key(&ideal)) {
            out.push(ideal);
        }
    }
    out.sort_by_cached_key(exponent_key);
    Ok(out)
}

// ---------------------------------------------------------------------------
