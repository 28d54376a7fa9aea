//! Genericity of monomial ideals and the Scarf complex machinery: the
//! Scarf complex itself, the extended (artinian-ized) Scarf complex, the
//! Stanley-Reisner complex of the radical, and irreducible decomposition
//! read off from extended Scarf facets.
//!
//! A monomial ideal is *generic* when any two minimal generators that
//! agree in some positive exponent admit a third generator dividing their
//! lcm strictly in every variable of the lcm's support.  The stronger
//! historical notion ("old-generic": no two generators agree in any
//! positive exponent) is also tracked.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::complex::{Face, LabeledComplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::ideal::{IrreducibleComponent, IrreducibleDecomposition, MonomialIdeal};
use crate::limits::Limits;
use crate::monomial::{lcm_of, ExponentVector, Monomial};

/// Outcome of the genericity test, with enough detail to see why.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GenericityReport {
    /// Generic in the lcm-witness sense.
    pub generic: bool,
    /// Generic in the strong sense: no shared positive exponent at all.
    pub old_generic: bool,
    /// Pairs `(i, j, s)` of generators sharing the positive exponent of
    /// variable `s` (what old-genericity forbids).
    pub shared_exponents: Vec<(usize, usize, usize)>,
    /// For each sharing pair that has one: a witness generator index `l`
    /// with `m_l` strictly dividing `lcm(m_i, m_j)`.
    pub witnesses: Vec<(usize, usize, usize)>,
    /// Sharing pairs with no witness; nonempty exactly when not generic.
    pub violations: Vec<(usize, usize)>,
}

/// Test genericity.  Rejects the zero and unit ideal.
pub fn is_generic(ideal: &MonomialIdeal) -> Result<GenericityReport> {
    ideal.require_proper()?;
    let gens = ideal.generators();
    let mut shared = Vec::new();
    let mut witnesses = Vec::new();
    let mut violations = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let Some(s) = (0..ideal.num_vars())
                .find(|&s| gens[i].degree_in(s) > 0 && gens[i].degree_in(s) == gens[j].degree_in(s))
            else {
                continue;
            };
            shared.push((i, j, s));
            let lcm = gens[i].lcm(&gens[j]);
            match (0..gens.len())
                .find(|&l| l != i && l != j && gens[l].strictly_divides(&lcm))
            {
                Some(l) => witnesses.push((i, j, l)),
                None => violations.push((i, j)),
            }
        }
    }
    Ok(GenericityReport {
        generic: violations.is_empty(),
        old_generic: shared.is_empty(),
        shared_exponents: shared,
        witnesses,
        violations,
    })
}

/// The strong historical notion: no two minimal generators agree in any
/// positive exponent.
pub fn is_generic_old(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(is_generic(ideal)?.old_generic)
}

/// Core Scarf enumeration on an explicit monomial list (which must be the
/// minimal generating antichain of the ideal it spans, in final vertex
/// order).  Returns the faces as sorted index sets, grouped by level.
///
/// A subset is a face iff its lcm label is not shared with any other
/// subset.  Label collisions always propagate to Hamming-distance-one
/// collisions, so the test is local: no index outside the face may divide
/// the label, and no one-smaller subset may carry the same label.  The
/// face set is closed under subsets, which makes level-by-level extension
/// exhaustive.
fn scarf_index_faces(monomials: &[Monomial]) -> Vec<Vec<usize>> {
    let r = monomials.len();
    let n = monomials.first().map_or(0, Monomial::num_vars);
    debug_assert!(
        (0..r).all(|i| (0..r).all(|j| i == j || !monomials[i].divides(&monomials[j]))),
        "scarf enumeration needs an antichain of minimal generators"
    );
    let mut all: Vec<Vec<usize>> = vec![Vec::new()];
    // singletons are always faces (minimality kills outside divisors)
    let mut level: Vec<(Vec<usize>, Monomial)> = (0..r)
        .map(|i| (vec![i], monomials[i].clone()))
        .collect();
    let mut level_set: HashSet<Vec<usize>> = level.iter().map(|(f, _)| f.clone()).collect();
    while !level.is_empty() {
        all.extend(level.iter().map(|(f, _)| f.clone()));
        let mut next: Vec<(Vec<usize>, Monomial)> = Vec::new();
        let mut next_set: HashSet<Vec<usize>> = HashSet::new();
        for (face, label) in &level {
            for j in face.last().unwrap() + 1..r {
                let mut candidate = face.clone();
                candidate.push(j);
                if next_set.contains(&candidate) {
                    continue;
                }
                // closure: all one-smaller subsets must already be faces
                let closed = (0..candidate.len()).all(|drop| {
                    let mut sub = candidate.clone();
                    sub.remove(drop);
                    level_set.contains(&sub)
                });
                if !closed {
                    continue;
                }
                let big = label.lcm(&monomials[j]);
                let outside_divisor = (0..r)
                    .filter(|l| candidate.binary_search(l).is_err())
                    .any(|l| monomials[l].divides(&big));
                if outside_divisor {
                    continue;
                }
                next_set.insert(candidate.clone());
                next.push((candidate, big));
            }
        }
        let _ = n;
        level = next;
        level_set = next_set;
    }
    all
}

/// Brute-force oracle: bucket all `2^r` subsets by lcm label and keep the
/// singleton buckets.  Exponential; used to cross-check the fast
/// enumeration.
pub fn scarf_index_faces_by_enumeration(
    monomials: &[Monomial],
    limits: &Limits,
) -> Result<Vec<Vec<usize>>> {
    let r = monomials.len();
    if r > limits.subset_generators {
        return Err(Error::CapExceeded {
            what: "subset enumeration generators",
            size: r,
            cap: limits.subset_generators,
        });
    }
    let n = monomials.first().map_or(0, Monomial::num_vars);
    let mut buckets: HashMap<ExponentVector, Vec<u32>> = HashMap::new();
    for mask in 0u32..(1 << r) {
        let members = (0..r).filter(|i| mask >> i & 1 == 1);
        let label = lcm_of(n, members.map(|i| &monomials[i]));
        buckets
            .entry(label.into_exponents())
            .or_default()
            .push(mask);
    }
    let mut faces: Vec<Vec<usize>> = buckets
        .into_values()
        .filter(|masks| masks.len() == 1)
        .map(|masks| (0..r).filter(|i| masks[0] >> i & 1 == 1).collect())
        .collect();
    faces.sort_by_key(|a| (a.len(), a.clone()));
    Ok(faces)
}

fn assemble_labeled(
    faces: Vec<Vec<usize>>,
    vertex_of: &dyn Fn(usize) -> Vertex,
    monomials: &[Monomial],
    n: usize,
    names: Vec<String>,
) -> Result<LabeledComplex> {
    let mut labels: BTreeMap<Face, ExponentVector> = BTreeMap::new();
    let mut as_faces: Vec<Face> = Vec::with_capacity(faces.len());
    for idx_face in &faces {
        let face: Face = idx_face.iter().map(|&i| vertex_of(i)).collect();
        let label = lcm_of(n, idx_face.iter().map(|&i| &monomials[i]));
        labels.insert(face.clone(), label.into_exponents());
        as_faces.push(face);
    }
    let complex = SimplicialComplex::from_faces(as_faces);
    LabeledComplex::new(complex, labels, names)
}

/// The Scarf complex: subsets of generators whose lcm is shared by no
/// other subset, labeled by those lcms.  Defined for every monomial
/// ideal; for generic ideals it supports the minimal free resolution.
pub fn scarf_complex(ideal: &MonomialIdeal) -> Result<LabeledComplex> {
    ideal.require_proper()?;
    let faces = scarf_index_faces(ideal.generators());
    assemble_labeled(
        faces,
        &Vertex::Gen,
        ideal.generators(),
        ideal.num_vars(),
        ideal.names().to_vec(),
    )
}

/// The same complex computed by the exponential label-bucket oracle.
pub fn scarf_complex_by_enumeration(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<LabeledComplex> {
    ideal.require_proper()?;
    let faces = scarf_index_faces_by_enumeration(ideal.generators(), limits)?;
    assemble_labeled(
        faces,
        &Vertex::Gen,
        ideal.generators(),
        ideal.num_vars(),
        ideal.names().to_vec(),
    )
}

/// The artinian-izing exponent: one more than the largest exponent of any
/// minimal generator.
pub fn extension_degree(ideal: &MonomialIdeal) -> u32 {
    ideal.max_exponent() + 1
}

/// The extended ideal `M + <x_1^D, .., x_n^D>` with `D` one more than the
/// largest exponent in `M`.  Minimal generators of `M` all survive; the
/// marker `x_s^D` survives exactly when `M` has no pure power of `x_s`.
pub fn extended_ideal(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, u32)> {
    ideal.require_proper()?;
    let d = extension_degree(ideal);
    let n = ideal.num_vars();
    let mut gens = ideal.generators().to_vec();
    gens.extend((0..n).map(|s| Monomial::pure_power(n, s, d)));
    Ok((MonomialIdeal::new(ideal.names().to_vec(), gens)?, d))
}

/// Variables whose marker `x_s^D` survives in the extended ideal, i.e.
/// those without a pure-power minimal generator in `M`.
#[must_use]
pub fn marker_vars(ideal: &MonomialIdeal) -> Vec<usize> {
    (0..ideal.num_vars())
        .filter(|&s| {
            !ideal
                .generators()
                .iter()
                .any(|g| g.as_pure_power().map(|(t, _)| t) == Some(s))
        })
        .collect()
}

/// The extended Scarf complex: the Scarf complex of the extended ideal,
/// with the original generators as `Gen` vertices (in canonical order)
/// followed by the surviving markers as `Var` vertices.
pub fn extended_scarf_complex(ideal: &MonomialIdeal) -> Result<LabeledComplex> {
    extended_scarf_complex_with_degree(ideal, extension_degree(ideal))
}

/// [`extended_scarf_complex`] with an explicit marker degree `d`, which
/// must exceed every generator exponent.  The face set is the same for
/// every valid `d`; only marker label entries change.
pub fn extended_scarf_complex_with_degree(
    ideal: &MonomialIdeal,
    d: u32,
) -> Result<LabeledComplex> {
    ideal.require_proper()?;
    if d <= ideal.max_exponent() {
        let var = (0..ideal.num_vars())
            .find(|&s| ideal.generators().iter().any(|g| g.exponents().get(s) >= d))
            .unwrap_or(0);
        return Err(Error::BoundTooSmall {
            var: ideal.names()[var].clone(),
            need: ideal.max_exponent() + 1,
            got: d,
        });
    }
    let n = ideal.num_vars();
    let markers = marker_vars(ideal);
    let mut monomials = ideal.generators().to_vec();
    monomials.extend(markers.iter().map(|&s| Monomial::pure_power(n, s, d)));
    let faces = scarf_index_faces(&monomials);
    let r = ideal.num_generators();
    let vertex_of = move |i: usize| {
        if i < r {
            Vertex::Gen(i)
        } else {
            Vertex::Var(markers[i - r])
        }
    };
    assemble_labeled(faces, &vertex_of, &monomials, n, ideal.names().to_vec())
}

/// The Stanley-Reisner complex of the radical: variable sets containing no
/// generator support.  Its facets are the complements of the minimal
/// primes.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let primes = ideal.minimal_primes()?;
    let n = ideal.num_vars();
    let facets = primes
        .iter()
        .map(|p| {
            (0..n)
                .filter(|s| !p.contains_var(*s))
                .map(Vertex::Var)
                .collect::<Face>()
        })
        .collect();
    Ok(SimplicialComplex::from_faces(facets))
}

/// Irreducible decomposition of a *generic* ideal, read off from the
/// facets of the extended Scarf complex: facet label entries equal to the
/// artinian marker degree `D` are dropped, the rest give the component
/// bound.  Agrees with the splitting oracle (and is much faster).
pub fn decompose_generic(ideal: &MonomialIdeal) -> Result<IrreducibleDecomposition> {
    let report = is_generic(ideal)?;
    if !report.generic {
        return Err(Error::NotGeneric(format!(
            "{} generator pair(s) share an exponent without a witness",
            report.violations.len()
        )));
    }
    let d = extension_degree(ideal);
    let complex = extended_scarf_complex(ideal)?;
    let mut bounds: Vec<ExponentVector> = complex
        .complex()
        .facets()
        .iter()
        .map(|facet| {
            let label = complex.label(facet);
            ExponentVector::new(
                label
                    .iter()
                    .map(|e| if e >= d { 0 } else { e })
                    .collect(),
            )
        })
        .collect();
    bounds.sort();
    let components: Vec<IrreducibleComponent> = bounds
        .into_iter()
        .map(IrreducibleComponent::new)
        .collect();
    IrreducibleDecomposition::from_parts(ideal.names().to_vec(), components)
}

/// Replay of the non-face witness construction: given a subset `sigma`
/// that is *not* a face of the Scarf complex of a generic ideal, produce
/// a generator index `l` with `m_l` dividing `lcm(sigma)` strictly in
/// every variable of the lcm's support.
pub fn nonface_witness(ideal: &MonomialIdeal, sigma: &[usize]) -> Result<usize> {
    ideal.require_proper()?;
    let gens = ideal.generators();
    let label = ideal.lcm_of(sigma);
    let validate = |l: usize| gens[l].strictly_divides(&label);

    // constructive replay: saturate sigma to the maximal subset with the
    // same label, find a redundant member, then follow the genericity
    // witness of a sharing pair
    let saturated: Vec<usize> = (0..gens.len())
        .filter(|&j| gens[j].divides(&label))
        .collect();
    let redundant = saturated.iter().copied().find(|&i| {
        let others = lcm_of(
            ideal.num_vars(),
            saturated.iter().filter(|&&j| j != i).map(|j| &gens[*j]),
        );
        others == label
    });
    if let Some(i) = redundant {
        if validate(i) {
            return Ok(i);
        }
        // some sharing partner exists in the saturated set; its genericity
        // witness strictly divides the pair lcm, hence the label
        for &j in &saturated {
            if j == i {
                continue;
            }
            let shares = (0..ideal.num_vars())
                .any(|s| gens[i].degree_in(s) > 0 && gens[i].degree_in(s) == gens[j].degree_in(s));
            if !shares {
                continue;
            }
            let pair = gens[i].lcm(&gens[j]);
            if let Some(l) = (0..gens.len())
                .find(|&l| l != i && l != j && gens[l].strictly_divides(&pair))
            {
                if validate(l) {
                    return Ok(l);
                }
            }
        }
    }
    // fall back to a direct scan, so a correct witness is never missed
    if let Some(l) = (0..gens.len()).find(|&l| validate(l)) {
        return Ok(l);
    }
    Err(Error::NotGeneric(format!(
        "no full-support witness divides lcm of {sigma:?} (is the subset a Scarf face?)"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn ideal(src: &str) -> MonomialIdeal {
        MonomialIdeal::parse(src).unwrap()
    }

    #[test]
    fn tree_ideals_are_generic_but_not_old_generic() {
        for n in 2..=4 {
            let t = corpus::tree_ideal(n).unwrap();
            let report = is_generic(&t).unwrap();
            assert!(report.generic, "tree({n}) generic");
            // from n = 3 on, distinct generators share exponents
            assert_eq!(report.old_generic, n == 2, "tree({n}) old-genericity");
        }
    }

    #[test]
    fn shared_square_without_witness_is_not_generic() {
        let m = ideal("vars: x,y,z\nx^2*y\nx^2*z");
        let report = is_generic(&m).unwrap();
        assert!(!report.generic);
        assert_eq!(report.violations, vec![(0, 1)]);
    }

    #[test]
    fn scarf_complex_of_tree_two() {
        // generators sorted canonically: y^2 < xy < x^2
        let m = ideal("vars: x,y\nx^2\nx*y\ny^2");
        let scarf = scarf_complex(&m).unwrap();
        let faces = scarf.complex().all_faces();
        assert_eq!(faces.len(), 6); // ∅, three vertices, two edges
        assert_eq!(scarf.complex().f_vector(), vec![1, 3, 2]);
        // the excluded edge is {y^2, x^2}: its lcm equals the full lcm
        let excluded = Face::new(vec![Vertex::Gen(0), Vertex::Gen(2)]);
        assert!(!scarf.complex().contains_face(&excluded));
    }

    #[test]
    fn fast_and_bruteforce_scarf_agree() {
        let samples = [
            "vars: x,y\nx^2\nx*y\ny^2",
            "vars: x,y,z\nx*y\nx*z\ny*z",
            "vars: x,y,z\ny*z^2\nx*z^2\ny^2*z\nx*y^2\nx^2",
            "vars: x,y,z\nx^3\ny^3\nz^3\nx^2*y^2\nx^2*z^2\ny^2*z^2\nx*y*z",
        ];
        for src in samples {
            let m = ideal(src);
            let fast = scarf_complex(&m).unwrap();
            let slow = scarf_complex_by_enumeration(&m, &Limits::default()).unwrap();
            assert_eq!(fast, slow, "{src}");
        }
    }

    #[test]
    fn scarf_labels_are_unique() {
        let m = corpus::tree_ideal(3).unwrap();
        let scarf = scarf_complex(&m).unwrap();
        let labels: Vec<_> = scarf.labels().values().collect();
        let distinct: std::collections::BTreeSet<_> = labels.iter().collect();
        assert_eq!(labels.len(), distinct.len());
    }

    #[test]
    fn extension_examples() {
        // principal ideal in one variable: D = 2, marker absorbed
        let m = ideal("vars: x\nx");
        let (ext, d) = extended_ideal(&m).unwrap();
        assert_eq!(d, 2);
        assert_eq!(ext, m);
        // artinian ideal: nothing changes
        let t2 = ideal("vars: x,y\nx^2\nx*y\ny^2");
        let (ext, d) = extended_ideal(&t2).unwrap();
        assert_eq!(d, 3);
        assert_eq!(ext, t2);
        assert!(marker_vars(&t2).is_empty());
        // a single edge generator gets both markers
        let e = ideal("vars: x,y\nx*y");
        let (ext, d) = extended_ideal(&e).unwrap();
        assert_eq!(d, 2);
        assert_eq!(ext, ideal("vars: x,y\nx*y\nx^2\ny^2"));
        assert_eq!(marker_vars(&e), vec![0, 1]);
    }

    #[test]
    fn extended_scarf_of_an_edge() {
        let e = ideal("vars: x,y\nx*y");
        let ext = extended_scarf_complex(&e).unwrap();
        // facets {gen, x-marker} and {gen, y-marker}; the two markers are
        // not joined (their lcm x^2 y^2 is the total lcm)
        let facets = ext.complex().facets();
        assert_eq!(facets.len(), 2);
        assert!(ext
            .complex()
            .contains_face(&Face::new(vec![Vertex::Gen(0), Vertex::Var(0)])));
        assert!(ext
            .complex()
            .contains_face(&Face::new(vec![Vertex::Gen(0), Vertex::Var(1)])));
        assert!(!ext
            .complex()
            .contains_face(&Face::new(vec![Vertex::Var(0), Vertex::Var(1)])));
    }

    #[test]
    fn extended_scarf_restricts_to_scarf_and_stanley_reisner() {
        let m = ideal("vars: x,y,z\ny*z^2\nx*z^2\ny^2*z\nx*y^2\nx^2");
        let ext = extended_scarf_complex(&m).unwrap();
        // restriction to generator vertices = the Scarf complex
        let keep: std::collections::BTreeSet<Vertex> =
            (0..m.num_generators()).map(Vertex::Gen).collect();
        let restricted = ext.complex().restriction(&keep);
        assert_eq!(&restricted, scarf_complex(&m).unwrap().complex());
        // restriction to marker vertices = the Stanley-Reisner complex
        let keep: std::collections::BTreeSet<Vertex> =
            (0..m.num_vars()).map(Vertex::Var).collect();
        let markers_only = ext.complex().restriction(&keep);
        assert_eq!(markers_only, stanley_reisner(&m).unwrap());
    }

    #[test]
    fn stanley_reisner_of_running_example() {
        let m = ideal("vars: x,y,z\ny*z^2\nx*z^2\ny^2*z\nx*y^2\nx^2");
        let v = stanley_reisner(&m).unwrap();
        // facets {y} and {z}: x is in every minimal prime
        assert_eq!(
            v.facets(),
            &[
                Face::new(vec![Vertex::Var(1)]),
                Face::new(vec![Vertex::Var(2)])
            ]
        );
    }

    #[test]
    fn generic_decomposition_matches_oracle() {
        let samples = [
            "vars: x,y\nx^2\nx*y\ny^2",
            "vars: x,y\nx*y",
            "vars: x,y,z\nx^3\ny^3\nz^3\nx^2*y^2\nx^2*z^2\ny^2*z^2\nx*y*z",
        ];
        for src in samples {
            let m = ideal(src);
            let fast = decompose_generic(&m).unwrap();
            let oracle = m.irreducible_decomposition().unwrap();
            assert_eq!(fast, oracle, "{src}");
        }
    }

    #[test]
    fn decompose_generic_refuses_non_generic_input() {
        let m = ideal("vars: x,y,z\nx^2*y\nx^2*z");
        assert!(matches!(decompose_generic(&m), Err(Error::NotGeneric(_))));
    }

    #[test]
    fn nonface_witness_on_tree_three() {
        let t3 = corpus::tree_ideal(3).unwrap();
        let scarf = scarf_complex(&t3).unwrap();
        // find a non-face of size 2 and check the witness property
        let mut checked = 0;
        for i in 0..t3.num_generators() {
            for j in i + 1..t3.num_generators() {
                let face = Face::new(vec![Vertex::Gen(i), Vertex::Gen(j)]);
                if scarf.complex().contains_face(&face) {
                    continue;
                }
                let l = nonface_witness(&t3, &[i, j]).unwrap();
                let label = t3.lcm_of(&[i, j]);
                assert!(t3.generators()[l].strictly_divides(&label));
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}
