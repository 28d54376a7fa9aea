//! Associated primes of monomial quotients and the structure theory
//! built on them: the embedded-prime spectrum of generic ideals,
//! saturated chains in the poset of associated primes, connectivity
//! sequences, facet cardinalities of extended Scarf complexes, and the
//! Cohen-Macaulay/shellability consequences of having no embedded
//! primes.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generic::{extended_scarf_complex, is_generic, scarf_complex, stanley_reisner};
use crate::homology::Field;
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::limits::Limits;
use crate::resolution::betti_oracle;

/// The associated primes of a quotient by a monomial ideal, with each
/// prime flagged as minimal or embedded.
#[derive(Debug, Clone, Serialize)]
pub struct AssPrimeSet {
    primes: Vec<MonomialPrime>,
    minimal: Vec<bool>,
}

impl AssPrimeSet {
    /// All associated primes, sorted.
    #[must_use]
    pub fn primes(&self) -> &[MonomialPrime] {
        &self.primes
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Whether the `i`-th prime is inclusion-minimal.
    #[must_use]
    pub fn is_minimal(&self, i: usize) -> bool {
        self.minimal[i]
    }

    /// The inclusion-minimal members.
    #[must_use]
    pub fn minimal_primes(&self) -> Vec<&MonomialPrime> {
        self.primes
            .iter()
            .zip(&self.minimal)
            .filter(|(_, &m)| m)
            .map(|(p, _)| p)
            .collect()
    }

    /// The embedded members (those strictly containing another
    /// associated prime).
    #[must_use]
    pub fn embedded_primes(&self) -> Vec<&MonomialPrime> {
        self.primes
            .iter()
            .zip(&self.minimal)
            .filter(|(_, &m)| !m)
            .map(|(p, _)| p)
            .collect()
    }

    #[must_use]
    pub fn has_embedded(&self) -> bool {
        self.minimal.iter().any(|&m| !m)
    }

    #[must_use]
    pub fn contains(&self, p: &MonomialPrime) -> bool {
        self.primes.contains(p)
    }

    /// Codimensions, parallel to [`Self::primes`].
    #[must_use]
    pub fn codims(&self) -> Vec<usize> {
        self.primes.iter().map(MonomialPrime::codim).collect()
    }

    /// Each prime rendered in the given variable names.
    #[must_use]
    pub fn render(&self, names: &[String]) -> Vec<String> {
        self.primes.iter().map(|p| p.render(names)).collect()
    }
}

/// The associated primes of `S/M`: the radicals of the irredundant
/// irreducible components, deduplicated.  The inclusion-minimal members
/// are cross-checked against the minimal primes computed independently
/// from vertex covers of the generator supports; a mismatch is an
/// internal invariant failure.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<AssPrimeSet> {
    ideal.require_proper()?;
    let decomposition = ideal.irreducible_decomposition()?;
    let set: BTreeSet<MonomialPrime> = decomposition
        .components()
        .iter()
        .map(|c| c.radical())
        .collect();
    let primes: Vec<MonomialPrime> = set.into_iter().collect();
    let minimal: Vec<bool> = primes
        .iter()
        .map(|p| {
            !primes
                .iter()
                .any(|q| q != p && p.contains_prime(q))
        })
        .collect();

    let mut from_flags: Vec<MonomialPrime> = primes
        .iter()
        .zip(&minimal)
        .filter(|(_, &m)| m)
        .map(|(p, _)| p.clone())
        .collect();
    from_flags.sort();
    let from_covers = ideal.minimal_primes()?;
    if from_flags != from_covers {
        return Err(Error::Invariant(
            "minimal members of the associated primes disagree with the \
             vertex-cover computation of minimal primes"
                .into(),
        ));
    }

    Ok(AssPrimeSet { primes, minimal })
}

/// Result of checking that a generic ideal has embedded primes in every
/// intermediate codimension.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddedSpectrumReport {
    pub codim: usize,
    pub proj_dim: usize,
    /// For each codimension in `(codim, proj_dim]`, a witness prime.
    pub witnesses: Vec<(usize, String)>,
    /// Codimensions in the range with no associated prime.
    pub missing: Vec<usize>,
    /// Every intermediate codimension is realized.
    pub holds: bool,
    /// Every associated prime has codimension within
    /// `[codim, proj_dim]`.
    pub all_in_range: bool,
}

/// For a generic ideal, every codimension between `codim M`
/// (exclusive) and `proj_dim S/M` (inclusive) must be realized by an
/// embedded associated prime.  Refuses non-generic input.
pub fn check_embedded_spectrum(
    ideal: &MonomialIdeal,
    field: Field,
    limits: &Limits,
) -> Result<EmbeddedSpectrumReport> {
    let genericity = is_generic(ideal)?;
    if !genericity.generic {
        return Err(Error::NotGeneric(format!(
            "the embedded-prime spectrum is only claimed for generic ideals \
             (violating pairs: {:?})",
            genericity.violations
        )));
    }
    let ass = associated_primes(ideal)?;
    let codim = ideal.codim()?;
    let proj_dim = betti_oracle(ideal, field, limits)?.proj_dim();
    let codims = ass.codims();

    let mut witnesses = Vec::new();
    let mut missing = Vec::new();
    for i in codim + 1..=proj_dim {
        match codims.iter().position(|&c| c == i) {
            Some(k) => witnesses.push((i, ass.primes()[k].render(ideal.names()))),
            None => missing.push(i),
        }
    }
    let all_in_range = codims.iter().all(|&c| codim <= c && c <= proj_dim);
    Ok(EmbeddedSpectrumReport {
        codim,
        proj_dim,
        witnesses,
        holds: missing.is_empty(),
        missing,
        all_in_range,
    })
}

/// Result of the saturated-chain search in the poset of associated
/// primes.
#[derive(Debug, Clone, Serialize)]
pub struct SaturatedChainReport {
    /// Every associated prime reaches a minimal prime by steps that
    /// drop the codimension by exactly one inside the set.
    pub holds: bool,
    /// The associated primes, rendered.
    pub primes: Vec<String>,
    /// For each prime, a witnessing chain as indices into `primes`
    /// (starting at the prime itself); empty when none exists.
    pub chains: Vec<Vec<usize>>,
    /// Indices of primes with no saturated chain.
    pub failures: Vec<usize>,
}

/// For every associated prime `P`, search for a chain
/// `P = P_0 ⊃ P_1 ⊃ ... ⊃ P_t` inside the associated primes with
/// `codim(P_k) = codim(P_{k-1}) - 1` at every step, ending at a
/// minimal prime.  This is a pure checker: it holds for every generic
/// ideal and for reverse-lexicographic initial ideals of lattice
/// ideals, but can fail in general.
pub fn check_saturated_chains(ideal: &MonomialIdeal) -> Result<SaturatedChainReport> {
    let ass = associated_primes(ideal)?;
    let n = ass.len();
    let codims = ass.codims();

    // chain[i]: a saturated descent from prime i, computed bottom-up.
    let mut chain: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| codims[i]);
    for &i in &order {
        if ass.is_minimal(i) {
            chain[i] = Some(vec![i]);
            continue;
        }
        let next = (0..n).find(|&j| {
            codims[j] + 1 == codims[i]
                && ass.primes()[i].contains_prime(&ass.primes()[j])
                && chain[j].is_some()
        });
        if let Some(j) = next {
            let mut c = vec![i];
            c.extend(chain[j].as_ref().expect("checked above"));
            chain[i] = Some(c);
        }
    }

    let failures: Vec<usize> = (0..n).filter(|&i| chain[i].is_none()).collect();
    Ok(SaturatedChainReport {
        holds: failures.is_empty(),
        primes: ass.render(ideal.names()),
        chains: chain
            .into_iter()
            .map(Option::unwrap_or_default)
            .collect(),
        failures,
    })
}

/// Result of the connectivity-sequence search on the associated primes.
#[derive(Debug, Clone, Serialize)]
pub struct ConnectivityReport {
    /// Any two associated primes are linked by a sequence of steps
    /// `codim(P + P') = min(codim P, codim P') + 1`.
    pub holds: bool,
    /// The associated primes, rendered.
    pub primes: Vec<String>,
    /// The admissible steps, as index pairs.
    pub edges: Vec<(usize, usize)>,
    /// Connected-component id of each prime in the step graph.
    pub component: Vec<usize>,
    /// When all minimal primes have the same codimension: whether the
    /// step graph restricted to minimal primes is connected, i.e. the
    /// zero set is connected in codimension one.
    pub pure_connected_in_codim_one: Option<bool>,
}

/// Build the graph on the associated primes whose edges are the pairs
/// with `codim(P + P') = min(codim P, codim P') + 1` and report its
/// connectivity.  Generic ideals always produce a connected graph;
/// the op itself accepts any proper ideal.
pub fn connectivity_sequence(ideal: &MonomialIdeal) -> Result<ConnectivityReport> {
    let ass = associated_primes(ideal)?;
    let n = ass.len();
    let codims = ass.codims();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let sum = ass.primes()[i].sum(&ass.primes()[j]);
            if sum.codim() == codims[i].min(codims[j]) + 1 {
                edges.push((i, j));
            }
        }
    }

    let component = components_of(n, &edges, |_| true);
    let holds = component.iter().all(|&c| c == 0);

    let minimal_codims: BTreeSet<usize> = (0..n)
        .filter(|&i| ass.is_minimal(i))
        .map(|i| codims[i])
        .collect();
    let pure_connected_in_codim_one = (minimal_codims.len() == 1).then(|| {
        let comp = components_of(n, &edges, |i| ass.is_minimal(i));
        (0..n)
            .filter(|&i| ass.is_minimal(i))
            .map(|i| comp[i])
            .collect::<BTreeSet<_>>()
            .len()
            <= 1
    });

    Ok(ConnectivityReport {
        holds,
        primes: ass.render(ideal.names()),
        edges,
        component,
        pure_connected_in_codim_one,
    })
}

/// Connected components of the graph on `0..n` with the given edges,
/// visiting only nodes accepted by `keep` (others get component
/// `usize::MAX`).  Component ids are normalized so the smallest kept
/// node of each component labels it by discovery order.
fn components_of(n: usize, edges: &[(usize, usize)], keep: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut component = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if !keep(start) || component[start] != usize::MAX {
            continue;
        }
        component[start] = next;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(a, b) in edges {
                let v = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if keep(v) && component[v] == usize::MAX {
                    component[v] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    component
}

/// Facet statistics of the extended Scarf complex of a generic ideal
/// with no embedded primes.
#[derive(Debug, Clone, Serialize)]
pub struct FacetCardinalityReport {
    pub codim: usize,
    pub dim: usize,
    pub facets: usize,
    /// Every facet has exactly `codim` generator vertices and `dim`
    /// variable vertices.
    pub holds: bool,
    /// Facets violating either count, rendered.
    pub failures: Vec<String>,
}

/// For a generic ideal with no embedded primes, every facet of the
/// extended Scarf complex has exactly `codim M` generator vertices and
/// `dim S/M` variable vertices.  Refuses non-generic input and input
/// with embedded primes.
pub fn check_facet_cardinalities(ideal: &MonomialIdeal) -> Result<FacetCardinalityReport> {
    let genericity = is_generic(ideal)?;
    if !genericity.generic {
        return Err(Error::NotGeneric(
            "facet cardinalities are only claimed for generic ideals".into(),
        ));
    }
    let ass = associated_primes(ideal)?;
    if ass.has_embedded() {
        return Err(Error::Precondition(format!(
            "the ideal has embedded associated primes: {:?}",
            ass.embedded_primes()
                .iter()
                .map(|p| p.render(ideal.names()))
                .collect::<Vec<_>>()
        )));
    }
    let codim = ideal.codim()?;
    let dim = ideal.num_vars() - codim;
    let labeled = extended_scarf_complex(ideal)?;
    let mut failures = Vec::new();
    let facets = labeled.complex().facets().to_vec();
    for f in &facets {
        if f.gens().len() != codim || f.vars().len() != dim {
            failures.push(f.key(ideal.names()));
        }
    }
    Ok(FacetCardinalityReport {
        codim,
        dim,
        facets: facets.len(),
        holds: failures.is_empty(),
        failures,
    })
}

/// The consequences of a generic ideal having no embedded primes.
#[derive(Debug, Clone, Serialize)]
pub struct ShellabilityReport {
    pub is_cm: bool,
    pub scarf_shellable: bool,
    pub zero_set_shellable: bool,
    /// All three consequences verified.
    pub holds: bool,
}

/// A generic ideal with no embedded primes has a Cohen-Macaulay
/// quotient, a shellable Scarf complex, and a shellable zero-set
/// complex.  Evaluates all three (shellability within the configured
/// facet cap).  Refuses non-generic input and input with embedded
/// primes.
pub fn shellability_consequences(
    ideal: &MonomialIdeal,
    field: Field,
    limits: &Limits,
) -> Result<ShellabilityReport> {
    let genericity = is_generic(ideal)?;
    if !genericity.generic {
        return Err(Error::NotGeneric(
            "the shellability consequences are only claimed for generic ideals".into(),
        ));
    }
    let ass = associated_primes(ideal)?;
    if ass.has_embedded() {
        return Err(Error::Precondition(format!(
            "the ideal has embedded associated primes: {:?}",
            ass.embedded_primes()
                .iter()
                .map(|p| p.render(ideal.names()))
                .collect::<Vec<_>>()
        )));
    }
    let is_cm = crate::resolution::is_cm(ideal, field, limits)?;
    let scarf_shellable = scarf_complex(ideal)?.complex().is_shellable(limits)?;
    let zero_set_shellable = stanley_reisner(ideal)?.is_shellable(limits)?;
    Ok(ShellabilityReport {
        is_cm,
        scarf_shellable,
        zero_set_shellable,
        holds: is_cm && scarf_shellable && zero_set_shellable,
    })
}
