//! Monomial ideals with a canonical minimal-generator representation,
//! irreducible decomposition, and the plain-text exchange format.
//!
//! Every ideal stores the unique minimal generating antichain, sorted in
//! ascending lexicographic order on exponent vectors, so two ideals are
//! equal exactly when their representations are equal.  The zero ideal
//! (no generators) and the unit ideal (generated by 1) are representable
//! but rejected by the mathematical operations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{lcm_of, ExponentVector, Monomial};

/// A monomial ideal in `k[x_1..x_n]`, kept in canonical form.
///
/// Equality and hashing ignore the variable names: two ideals are equal
/// when they have the same ambient variable count and the same minimal
/// generators.
#[derive(Clone, serde::Serialize)]
pub struct MonomialIdeal {
    names: Vec<String>,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.num_vars() == other.num_vars() && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl std::hash::Hash for MonomialIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.num_vars().hash(state);
        self.gens.hash(state);
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.render(&self.names))?;
        }
        write!(f, ">")
    }
}

/// Remove duplicates and non-minimal elements, and sort canonically.
/// If the unit monomial is present the result is just `[1]`.
#[must_use]
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    if gens.iter().any(Monomial::is_unit) {
        let n = gens[0].num_vars();
        return vec![Monomial::unit(n)];
    }
    gens.sort();
    gens.dedup();
    let keep: Vec<Monomial> = gens
        .iter()
        .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
        .cloned()
        .collect();
    keep
}

impl MonomialIdeal {
    /// Build an ideal from any generating set; the representation is
    /// minimalized and sorted.  Fails if a generator has the wrong number
    /// of exponents.
    pub fn new(names: Vec<String>, gens: Vec<Monomial>) -> Result<Self> {
        let n = names.len();
        for g in &gens {
            if g.num_vars() != n {
                return Err(Error::AmbientMismatch(n, g.num_vars()));
            }
        }
        Ok(MonomialIdeal {
            names,
            gens: minimalize(gens),
        })
    }

    /// Convenience constructor with names `x1..xn` when none matter.
    pub fn from_gens(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        MonomialIdeal::new(default_names(n), gens)
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_exps(n: usize, rows: &[&[u32]]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), n, "exponent row length mismatch");
                Monomial::from_exps(r.to_vec())
            })
            .collect();
        MonomialIdeal::from_gens(n, gens)
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    #[must_use]
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The minimal generators, in canonical order.
    #[must_use]
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    #[must_use]
    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    #[must_use]
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    #[must_use]
    pub fn is_proper(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Guard used by the mathematical operations: zero and unit ideals are
    /// representable but not operable.
    pub fn require_proper(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Largest exponent appearing in any minimal generator.
    #[must_use]
    pub fn max_exponent(&self) -> u32 {
        self.gens
            .iter()
            .map(|g| g.exponents().max_entry())
            .max()
            .unwrap_or(0)
    }

    /// Membership test for a monomial.
    #[must_use]
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Membership test for `x^b` given only the exponent vector.
    #[must_use]
    pub fn contains_exponent(&self, b: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.exponents().leq(b))
    }

    /// Ideal containment: every generator of `other` lies in `self`.
    #[must_use]
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Lcm of the generators indexed by `indices`.
    #[must_use]
    pub fn lcm_of(&self, indices: &[usize]) -> Monomial {
        lcm_of(self.num_vars(), indices.iter().map(|&i| &self.gens[i]))
    }

    /// Intersection with another ideal in the same ring: pairwise lcms of
    /// generators, minimalized.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::AmbientMismatch(self.num_vars(), other.num_vars()));
        }
        self.require_proper()?;
        other.require_proper()?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.names.clone(), gens)
    }

    /// The radical: squarefree parts of the generators.
    pub fn radical(&self) -> Result<Self> {
        self.require_proper()?;
        MonomialIdeal::new(
            self.names.clone(),
            self.gens.iter().map(Monomial::radical).collect(),
        )
    }

    /// Minimal primes, i.e. the minimal vertex covers of the generator
    /// supports, each returned as a sorted variable set.
    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        self.require_proper()?;
        let supports: Vec<Vec<usize>> = self.gens.iter().map(Monomial::support).collect();
        let universe: Vec<usize> = {
            let mut u: BTreeSet<usize> = BTreeSet::new();
            for s in &supports {
                u.extend(s.iter().copied());
            }
            u.into_iter().collect()
        };
        let k = universe.len();
        assert!(k < 64, "too many active variables for cover enumeration");
        let masks: Vec<u64> = supports
            .iter()
            .map(|supp| {
                supp.iter()
                    .map(|v| 1u64 << universe.iter().position(|u| u == v).unwrap())
                    .sum()
            })
            .collect();
        let mut covers: Vec<u64> = Vec::new();
        for cand in 0..(1u64 << k) {
            if masks.iter().all(|&m| m & cand != 0) {
                covers.push(cand);
            }
        }
        let minimal: Vec<u64> = covers
            .iter()
            .copied()
            .filter(|&c| !covers.iter().any(|&d| d != c && d & c == d))
            .collect();
        let mut primes: Vec<MonomialPrime> = minimal
            .into_iter()
            .map(|c| {
                let vars: Vec<usize> = universe
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| c >> bit & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                MonomialPrime::new(self.num_vars(), vars)
            })
            .collect();
        primes.sort();
        Ok(primes)
    }

    /// Codimension (height): the size of the smallest minimal prime.
    pub fn codim(&self) -> Result<usize> {
        Ok(self
            .minimal_primes()?
            .iter()
            .map(MonomialPrime::codim)
            .min()
            .expect("a proper ideal has a minimal prime"))
    }

    /// Localize at a monomial prime: variables outside `p` are set to 1 and
    /// the result lives in the smaller ring on `p`'s variables (in
    /// increasing order).  The result can be the unit ideal when no minimal
    /// prime of `self` is contained in `p`.
    pub fn localize(&self, p: &MonomialPrime) -> Result<Self> {
        self.require_proper()?;
        if p.num_vars() != self.num_vars() {
            return Err(Error::AmbientMismatch(self.num_vars(), p.num_vars()));
        }
        let vars = p.vars();
        let names = vars.iter().map(|&s| self.names[s].clone()).collect();
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::new(g.exponents().restrict(vars)))
            .collect();
        MonomialIdeal::new(names, gens)
    }

    /// Whether every variable has a pure-power generator (finite colength).
    #[must_use]
    pub fn is_artinian(&self) -> bool {
        (0..self.num_vars()).all(|s| {
            self.gens
                .iter()
                .any(|g| g.as_pure_power().map(|(t, _)| t) == Some(s))
        })
    }

    /// Number of monomials outside the ideal; `None` when infinite.
    /// Counts by direct enumeration of the standard-monomial box.
    pub fn colength(&self) -> Result<Option<u64>> {
        self.require_proper()?;
        if !self.is_artinian() {
            return Ok(None);
        }
        let n = self.num_vars();
        let mut bound = vec![0u32; n];
        for g in &self.gens {
            if let Some((s, e)) = g.as_pure_power() {
                bound[s] = e;
            }
        }
        let box_size: u64 = bound.iter().map(|&e| u64::from(e)).product();
        if box_size > 1 << 24 {
            return Err(Error::CapExceeded {
                what: "standard monomial box",
                size: box_size as usize,
                cap: 1 << 24,
            });
        }
        let mut count = 0u64;
        let mut v = vec![0u32; n];
        'outer: loop {
            let mono = Monomial::from_exps(v.clone());
            if !self.contains(&mono) {
                count += 1;
            }
            // odometer increment over the box
            for s in 0..n {
                v[s] += 1;
                if v[s] < bound[s] {
                    continue 'outer;
                }
                v[s] = 0;
            }
            break;
        }
        Ok(Some(count))
    }

    /// The unique irredundant irreducible decomposition, computed by
    /// recursive generator splitting: the lexicographically first generator
    /// with mixed support `x_s^e * m'` splits the ideal as
    /// `(M + <x_s^e>) ∩ (M + <m'>)`; leaves are generated by pure powers
    /// and read off directly.  Redundant components are pruned at the end.
    pub fn irreducible_decomposition(&self) -> Result<IrreducibleDecomposition> {
        self.require_proper()?;
        let mut memo: HashMap<Vec<Monomial>, BTreeSet<ExponentVector>> = HashMap::new();
        let bounds = split_pure(self.num_vars(), self.gens.clone(), &mut memo);
        let mut components: Vec<IrreducibleComponent> = bounds
            .into_iter()
            .map(IrreducibleComponent::new)
            .collect();
        prune_redundant(self, &mut components)?;
        components.sort();
        Ok(IrreducibleDecomposition {
            names: self.names.clone(),
            components,
        })
    }
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Recursive splitting step of the decomposition oracle.
fn split_pure(
    n: usize,
    gens: Vec<Monomial>,
    memo: &mut HashMap<Vec<Monomial>, BTreeSet<ExponentVector>>,
) -> BTreeSet<ExponentVector> {
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let result = match gens.iter().find(|g| g.support_size() >= 2) {
        None => {
            // every generator is a pure power: the ideal is irreducible
            let mut bound = ExponentVector::zeros(n);
            for g in &gens {
                let (s, e) = g.as_pure_power().expect("nonunit pure power");
                bound.set(s, e);
            }
            std::iter::once(bound).collect()
        }
        Some(g) => {
            let s = g.support()[0];
            let e = g.degree_in(s);
            let power = Monomial::pure_power(n, s, e);
            let rest = g.div(&power).expect("power divides its own monomial");
            let with = |extra: Monomial| {
                let mut next = gens.clone();
                next.push(extra);
                minimalize(next)
            };
            let mut acc = split_pure(n, with(power), memo);
            acc.extend(split_pure(n, with(rest), memo));
            acc
        }
    };
    memo.insert(gens, result.clone());
    result
}

/// Drop components whose omission leaves the intersection unchanged.
/// The irredundant decomposition is unique, so the scan order does not
/// affect the result.
fn prune_redundant(ideal: &MonomialIdeal, components: &mut Vec<IrreducibleComponent>) -> Result<()> {
    loop {
        let mut removed = false;
        let mut idx = 0;
        while idx < components.len() {
            if components.len() == 1 {
                break;
            }
            let others = components
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != idx)
                .map(|(_, c)| c.to_ideal_named(ideal.names().to_vec()))
                .collect::<Result<Vec<_>>>()?;
            let mut meet = others[0].clone();
            for o in &others[1..] {
                meet = meet.intersect(o)?;
            }
            if meet == *ideal {
                components.remove(idx);
                removed = true;
            } else {
                idx += 1;
            }
        }
        if !removed {
            return Ok(());
        }
    }
}

/// An irreducible monomial ideal `m^b = <x_s^{b_s} : b_s >= 1>`, stored as
/// its bound vector `b` (at least one positive entry).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct IrreducibleComponent {
    bound: ExponentVector,
}

impl IrreducibleComponent {
    #[must_use]
    pub fn new(bound: ExponentVector) -> Self {
        assert!(!bound.is_zero(), "irreducible component needs a positive entry");
        IrreducibleComponent { bound }
    }

    #[must_use]
    pub fn bound(&self) -> &ExponentVector {
        &self.bound
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.bound.len()
    }

    /// Codimension of `m^b`, the size of its support.
    #[must_use]
    pub fn codim(&self) -> usize {
        self.bound.support_size()
    }

    /// The pure powers generating the component.
    #[must_use]
    pub fn pure_powers(&self) -> Vec<Monomial> {
        self.bound
            .support()
            .into_iter()
            .map(|s| Monomial::pure_power(self.bound.len(), s, self.bound.get(s)))
            .collect()
    }

    pub fn to_ideal_named(&self, names: Vec<String>) -> Result<MonomialIdeal> {
        MonomialIdeal::new(names, self.pure_powers())
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        self.to_ideal_named(default_names(self.bound.len()))
    }

    /// The radical `sqrt(m^b)`, a monomial prime.
    #[must_use]
    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(self.bound.len(), self.bound.support())
    }

    /// Does a pure power `x_s^e` generate both `self` and `other`?
    #[must_use]
    pub fn shares_generator(&self, other: &ExponentVector) -> bool {
        (0..self.bound.len())
            .any(|s| self.bound.get(s) >= 1 && self.bound.get(s) == other.get(s))
    }

    /// The ideal sum `m^b + m^c`, again irreducible: entrywise minimum of
    /// the positive parts.
    #[must_use]
    pub fn sum(&self, other: &Self) -> Self {
        let d = ExponentVector::new(
            (0..self.bound.len())
                .map(|s| match (self.bound.get(s), other.bound.get(s)) {
                    (0, e) | (e, 0) => e,
                    (a, b) => a.min(b),
                })
                .collect(),
        );
        IrreducibleComponent::new(d)
    }

    /// Containment `self ⊆ other` of the corresponding ideals.
    #[must_use]
    pub fn contained_in(&self, other: &Self) -> bool {
        (0..self.bound.len()).all(|s| {
            let (b, d) = (self.bound.get(s), other.bound.get(s));
            b == 0 || (d >= 1 && d <= b)
        })
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m^{:?}", self.bound)
    }
}

/// An irredundant irreducible decomposition, sorted canonically.
#[derive(Clone, PartialEq, Eq, serde::Serialize)]
pub struct IrreducibleDecomposition {
    names: Vec<String>,
    components: Vec<IrreducibleComponent>,
}

impl IrreducibleDecomposition {
    /// Assemble from components computed elsewhere.  Sorts canonically and
    /// rejects duplicates; irredundancy is the caller's contract.
    pub fn from_parts(
        names: Vec<String>,
        mut components: Vec<IrreducibleComponent>,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Invariant(
                "a decomposition needs at least one component".into(),
            ));
        }
        if let Some(c) = components.iter().find(|c| c.num_vars() != names.len()) {
            return Err(Error::AmbientMismatch(names.len(), c.num_vars()));
        }
        components.sort_by(|a, b| a.bound().cmp(b.bound()));
        let distinct = components.windows(2).all(|w| w[0] != w[1]);
        if !distinct {
            return Err(Error::Invariant("duplicate irreducible component".into()));
        }
        Ok(IrreducibleDecomposition { names, components })
    }

    #[must_use]
    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.components.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    #[must_use]
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Re-intersect the components (used by consistency checks).
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        let ideals = self
            .components
            .iter()
            .map(|c| c.to_ideal_named(self.names.clone()))
            .collect::<Result<Vec<_>>>()?;
        let mut acc = ideals[0].clone();
        for i in &ideals[1..] {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// All component codimensions equal?  Returns that codimension if so.
    #[must_use]
    pub fn uniform_codim(&self) -> Option<usize> {
        let c = self.components.first()?.codim();
        self.components
            .iter()
            .all(|comp| comp.codim() == c)
            .then_some(c)
    }
}

impl fmt::Debug for IrreducibleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.components).finish()
    }
}

/// A monomial prime `<x_s : s in vars>`, stored as a sorted variable set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct MonomialPrime {
    num_vars: usize,
    vars: Vec<usize>,
}

impl MonomialPrime {
    #[must_use]
    pub fn new(num_vars: usize, mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        assert!(!vars.is_empty(), "monomial prime needs at least one variable");
        assert!(vars.iter().all(|&v| v < num_vars));
        MonomialPrime { num_vars, vars }
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    #[must_use]
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    #[must_use]
    pub fn codim(&self) -> usize {
        self.vars.len()
    }

    #[must_use]
    pub fn contains_var(&self, s: usize) -> bool {
        self.vars.binary_search(&s).is_ok()
    }

    /// Set containment of the primes (reverse of ideal containment is not
    /// a thing here: more variables = bigger prime ideal).
    #[must_use]
    pub fn contains_prime(&self, other: &Self) -> bool {
        other.vars.iter().all(|v| self.contains_var(*v))
    }

    /// The prime generated by the union of both variable sets.
    #[must_use]
    pub fn sum(&self, other: &Self) -> Self {
        let mut vars = self.vars.clone();
        vars.extend_from_slice(&other.vars);
        MonomialPrime::new(self.num_vars, vars)
    }

    pub fn to_ideal_named(&self, names: Vec<String>) -> Result<MonomialIdeal> {
        MonomialIdeal::new(
            names,
            self.vars
                .iter()
                .map(|&s| Monomial::pure_power(self.num_vars, s, 1))
                .collect(),
        )
    }

    #[must_use]
    pub fn render(&self, names: &[String]) -> String {
        let body: Vec<&str> = self.vars.iter().map(|&s| names[s].as_str()).collect();
        format!("<{}>", body.join(","))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.vars)
    }
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

impl MonomialIdeal {
    /// Parse the plain-text ideal format:
    ///
    /// ```text
    /// vars: x,y,z
    /// x^2*y*z^3
    /// x*y
    /// ```
    ///
    /// Whitespace is insignificant, `^1` may be omitted, and the unit
    /// monomial `1` is rejected as a generator.
    pub fn parse(input: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut gens: Vec<Monomial> = Vec::new();
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
            gens.push(parse_monomial(line, names, lineno)?);
        }
        let Some(names) = names else {
            return Err(Error::parse(input.lines().count(), "missing vars: header"));
        };
        MonomialIdeal::new(names, gens)
    }

    /// Render in the same format `parse` accepts, canonically sorted.
    #[must_use]
    pub fn render(&self) -> String {
        let mut out = format!("vars: {}\n", self.names.join(","));
        for g in &self.gens {
            out.push_str(&g.render(&self.names));
            out.push('\n');
        }
        out
    }
}

pub(crate) fn parse_names(rest: &str, lineno: usize) -> Result<Vec<String>> {
    let parsed: Vec<String> = rest
        .split(',')
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect();
    if parsed.is_empty() {
        return Err(Error::parse(lineno, "empty variable list"));
    }
    for (i, a) in parsed.iter().enumerate() {
        if a.contains(['^', '*', ' ', '-', '+'])
            || a.chars().next().is_some_and(|c| c.is_ascii_digit())
        {
            return Err(Error::parse(lineno, format!("bad variable name {a:?}")));
        }
        if parsed[..i].contains(a) {
            return Err(Error::parse(lineno, format!("repeated variable {a:?}")));
        }
    }
    Ok(parsed)
}

pub(crate) fn parse_monomial(token: &str, names: &[String], lineno: usize) -> Result<Monomial> {
    let compact: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "1" {
        return Err(Error::parse(
            lineno,
            "the unit monomial 1 is not a valid generator",
        ));
    }
    let mut exps = ExponentVector::zeros(names.len());
    for factor in compact.split('*') {
        if factor.is_empty() {
            return Err(Error::parse(lineno, "empty factor"));
        }
        let (name, exp) = match factor.split_once('^') {
            None => (factor, 1u32),
            Some((name, e)) => {
                let parsed = e.parse::<u32>().map_err(|_| {
                    Error::parse(lineno, format!("bad exponent {e:?} in {factor:?}"))
                })?;
                (name, parsed)
            }
        };
        let Some(s) = names.iter().position(|n| n == name) else {
            return Err(Error::parse(lineno, format!("unknown variable {name:?}")));
        };
        exps.set(s, exps.get(s).checked_add(exp).expect("exponent overflow"));
    }
    if exps.is_zero() {
        return Err(Error::parse(
            lineno,
            "the unit monomial 1 is not a valid generator",
        ));
    }
    Ok(Monomial::new(exps))
}
