//! Named example ideals and seeded random generators used across the
//! test suite and the CLI.  Everything here is deterministic: the random
//! constructions take an explicit RNG, and `rng_from_seed` pins the
//! stream cipher so a seed reproduces the corpus byte for byte.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::binomial::BinomialSystem;
use crate::error::{Error, Result};
use crate::ideal::{IrreducibleComponent, MonomialIdeal};
use crate::monomial::{ExponentVector, Monomial};

#[must_use]
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn numbered_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn xyz_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        4 => vec!["x".into(), "y".into(), "z".into(), "w".into()],
        _ => numbered_names("x", n),
    }
}

/// The tree ideal on `n` variables: one generator `(Π_{s∈σ} x_s)^{n-#σ+1}`
/// per nonempty subset `σ`.  Artinian, generic, with colength
/// `(n+1)^(n-1)` (the number of parking functions).
pub fn tree_ideal(n: usize) -> Result<MonomialIdeal> {
    if n == 0 || n > 8 {
        return Err(Error::CapExceeded {
            what: "tree ideal variables",
            size: n,
            cap: 8,
        });
    }
    let mut gens = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones();
        let power = (n as u32) - size + 1;
        let mut e = ExponentVector::zeros(n);
        for s in 0..n {
            if mask >> s & 1 == 1 {
                e.set(s, power);
            }
        }
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(xyz_names(n), gens)
}

/// The permutahedron ideal: generators `x^w` for all permutations `w` of
/// `(1, 2, .., n)`.  Alexander dual of the tree ideal for `a = (n,..,n)`.
pub fn permutahedron_ideal(n: usize) -> Result<MonomialIdeal> {
    if n == 0 || n > 6 {
        return Err(Error::CapExceeded {
            what: "permutahedron variables",
            size: n,
            cap: 6,
        });
    }
    let mut gens = Vec::new();
    let mut perm: Vec<u32> = (1..=n as u32).collect();
    permute(&mut perm, 0, &mut |p| {
        gens.push(Monomial::new(ExponentVector::new(p.to_vec())));
    });
    MonomialIdeal::new(xyz_names(n), gens)
}

fn permute(values: &mut [u32], k: usize, emit: &mut impl FnMut(&[u32])) {
    if k == values.len() {
        emit(values);
        return;
    }
    for i in k..values.len() {
        values.swap(k, i);
        permute(values, k + 1, emit);
        values.swap(k, i);
    }
}

/// The codimension-`c` family `⋂_{i=1}^{r} <x_1^i, .., x_{c-1}^i, x_{c-1+i}>`
/// in `c-1+r` variables: cogeneric with uniform codimension `c` and
/// exactly `(c-1)r + 1` minimal generators, making the cogeneric
/// generator bound tight.
pub fn optimal_family(c: usize, r: usize) -> Result<MonomialIdeal> {
    if c == 0 || r == 0 || c - 1 + r > 14 {
        return Err(Error::CapExceeded {
            what: "optimal family variables",
            size: c.saturating_sub(1) + r,
            cap: 14,
        });
    }
    let n = c - 1 + r;
    let names = numbered_names("x", n);
    let mut acc: Option<MonomialIdeal> = None;
    for i in 1..=r {
        let mut bound = ExponentVector::zeros(n);
        for s in 0..c - 1 {
            bound.set(s, i as u32);
        }
        bound.set(c - 1 + i - 1, 1);
        let component = IrreducibleComponent::new(bound).to_ideal_named(names.clone())?;
        acc = Some(match acc {
            None => component,
            Some(prev) => prev.intersect(&component)?,
        });
    }
    Ok(acc.expect("r >= 1"))
}

/// The running generic example `<x²y², xyz, x²z²>` in `k[x,y,z]`:
/// generic in the witness sense (the witness is `xyz`) but not in the
/// strong no-shared-exponent sense; five irreducible components.
pub fn generic_example() -> MonomialIdeal {
    MonomialIdeal::parse("vars: x,y,z\nx^2*y^2\nx*y*z\nx^2*z^2").expect("fixture parses")
}

/// The running cogeneric example `<x², xy², xz², y²z, yz²>`, the
/// Alexander dual of [`generic_example`] with bound `(2,2,2)`; three
/// irreducible components of codimensions 2, 2, 3.
pub fn cogeneric_example() -> MonomialIdeal {
    MonomialIdeal::parse("vars: x,y,z\nx^2\nx*y^2\nx*z^2\ny^2*z\ny*z^2").expect("fixture parses")
}

/// `<x,y²> ∩ <y,z> ∩ <z²,w>`: cogeneric, pure codimension 2, connected
/// in codimension 1, yet depth 1 (not Cohen-Macaulay, fails Serre's S2).
pub fn depth_one_example() -> Result<MonomialIdeal> {
    let names = xyz_names(4);
    let a = component(&[1, 2, 0, 0]).to_ideal_named(names.clone())?;
    let b = component(&[0, 1, 1, 0]).to_ideal_named(names.clone())?;
    let c = component(&[0, 0, 2, 1]).to_ideal_named(names)?;
    a.intersect(&b)?.intersect(&c)
}

/// `<x,y> ∩ <y²,z²> ∩ <z,w>`: same associated primes as
/// [`depth_one_example`] but Cohen-Macaulay.
pub fn cm_triple_example() -> Result<MonomialIdeal> {
    let names = xyz_names(4);
    let a = component(&[1, 1, 0, 0]).to_ideal_named(names.clone())?;
    let b = component(&[0, 2, 2, 0]).to_ideal_named(names.clone())?;
    let c = component(&[0, 0, 1, 1]).to_ideal_named(names)?;
    a.intersect(&b)?.intersect(&c)
}

fn component(bound: &[u32]) -> IrreducibleComponent {
    IrreducibleComponent::new(ExponentVector::new(bound.to_vec()))
}

/// `<ac, bd, a³b², a²b³>` in `k[a,b,c,d]`: generic, with `<a,b>` and the
/// maximal ideal both associated yet no associated prime strictly between
/// them — the embedded-spectrum theorem fills every codimension globally,
/// not every interval above a given associated prime.
pub fn codim_gap_ideal() -> MonomialIdeal {
    MonomialIdeal::parse("vars: a,b,c,d\na*c\nb*d\na^3*b^2\na^2*b^3").expect("fixture parses")
}

/// `<x², xy, xz>`: associated primes `{x}` and `{x,y,z}` of codimensions
/// 1 and 3; no saturated chain connects them inside the associated set.
pub fn chain_failure_ideal() -> MonomialIdeal {
    MonomialIdeal::parse("vars: x,y,z\nx^2\nx*y\nx*z").expect("fixture parses")
}

/// `⋂_{i=1}^{n} <x_i, y_i>` in `2n` variables: `n` components but `2^n`
/// minimal generators (all squarefree).  Not generic; shows the generic
/// component bound needs its genericity hypothesis.
pub fn paired_variables_ideal(n: usize) -> Result<MonomialIdeal> {
    if n == 0 || n > 7 {
        return Err(Error::CapExceeded {
            what: "paired variable blocks",
            size: n,
            cap: 7,
        });
    }
    let mut names = Vec::with_capacity(2 * n);
    for i in 1..=n {
        names.push(format!("x{i}"));
        names.push(format!("y{i}"));
    }
    let mut acc: Option<MonomialIdeal> = None;
    for i in 0..n {
        let mut bound = ExponentVector::zeros(2 * n);
        bound.set(2 * i, 1);
        bound.set(2 * i + 1, 1);
        let comp = IrreducibleComponent::new(bound).to_ideal_named(names.clone())?;
        acc = Some(match acc {
            None => comp,
            Some(prev) => prev.intersect(&comp)?,
        });
    }
    Ok(acc.expect("n >= 1"))
}

/// A random monomial ideal: `r` monomials with entries uniform in
/// `0..=max_exp` (the zero vector is resampled), minimalized.  The
/// result has at most `r` generators and is always proper.
pub fn random_ideal(
    rng: &mut impl Rng,
    n: usize,
    r: usize,
    max_exp: u32,
) -> Result<MonomialIdeal> {
    assert!(n >= 1 && r >= 1 && max_exp >= 1, "degenerate parameters");
    let mut gens = Vec::with_capacity(r);
    for _ in 0..r {
        loop {
            let e = ExponentVector::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect());
            if !e.is_zero() {
                gens.push(Monomial::new(e));
                break;
            }
        }
    }
    MonomialIdeal::new(xyz_names(n), gens)
}

/// A random *generic* monomial ideal, by construction rather than by
/// rejection: within each variable the positive exponents are pairwise
/// distinct, so no two generators share a positive exponent anywhere
/// (generic in the strong sense, hence generic).
pub fn random_generic(
    rng: &mut impl Rng,
    n: usize,
    r: usize,
    max_exp: u32,
) -> Result<MonomialIdeal> {
    assert!(n >= 1 && r >= 1 && max_exp >= 1, "degenerate parameters");
    let hi = max_exp.max(r as u32);
    let mut exps = vec![ExponentVector::zeros(n); r];
    for s in 0..n {
        let mut pool: Vec<u32> = (1..=hi).collect();
        pool.shuffle(rng);
        for (i, row) in exps.iter_mut().enumerate() {
            // a third of the entries drop to zero: varied supports
            let value = if rng.gen_ratio(1, 3) { 0 } else { pool[i] };
            row.set(s, value);
        }
    }
    for row in &mut exps {
        if row.is_zero() {
            let s = rng.gen_range(0..n);
            let value = rng.gen_range(1..=hi);
            row.set(s, value);
        }
    }
    // rows may collide in a variable only after the zero jitter:
    // re-separate any repeated positive value per column
    for s in 0..n {
        let mut seen = std::collections::HashSet::new();
        let mut free: Vec<u32> = (1..=hi.max(2 * r as u32)).collect();
        free.retain(|v| exps.iter().all(|row| row.get(s) != *v));
        let mut next = free.into_iter();
        for row in &mut exps {
            let v = row.get(s);
            if v > 0 && !seen.insert(v) {
                row.set(s, next.next().expect("pool large enough"));
            }
        }
    }
    MonomialIdeal::new(xyz_names(n), exps.into_iter().map(Monomial::new).collect())
}

/// A random *cogeneric* ideal: the Alexander dual of a random generic
/// ideal, generated by the duals of its irreducible components.
pub fn random_cogeneric(
    rng: &mut impl Rng,
    n: usize,
    r: usize,
    max_exp: u32,
) -> Result<MonomialIdeal> {
    let generic = random_generic(rng, n, r, max_exp)?;
    let e = generic.max_exponent();
    let decomposition = generic.irreducible_decomposition()?;
    let gens = decomposition
        .components()
        .iter()
        .map(|comp| {
            let b = comp.bound();
            let dual = ExponentVector::new(
                (0..n)
                    .map(|s| if b.get(s) >= 1 { e + 1 - b.get(s) } else { 0 })
                    .collect(),
            );
            Monomial::new(dual)
        })
        .collect();
    MonomialIdeal::new(generic.names().to_vec(), gens)
}

/// The defining ideal of the monomial curve `(t^20, t^24, t^25, t^31)` in
/// `k[a,b,c,d]` — a *generic* lattice ideal: every difference vector has
/// full support.  Its reverse-lex initial ideal
/// `<a^4, a^3c^2, a^2b^3, ab^2c, b^4, b^3c^2, c^3>` is generic in the
/// lcm-witness sense but not in the strong no-shared-exponent sense.
pub fn toric_curve_binomials() -> Result<BinomialSystem> {
    BinomialSystem::parse(
        "vars: a,b,c,d\n\
         a^4 - b*c*d\n\
         a^3*c^2 - b^2*d^2\n\
         a^2*b^3 - c^2*d^2\n\
         a*b^2*c - d^3\n\
         b^4 - a^2*c*d\n\
         b^3*c^2 - a^3*d^2\n\
         c^3 - a*b*d\n",
    )
}

/// The twisted cubic curve `<ac - b², ad - bc, bd - c²>` in `k[a,b,c,d]`:
/// a codimension-2 lattice ideal that is *not* generic (every difference
/// vector has a zero coordinate).  It has exactly eight distinct initial
/// ideals over all term orders; four of them fail to be Cohen-Macaulay
/// and pick up embedded primes of codimension 3.
pub fn twisted_cubic_binomials() -> Result<BinomialSystem> {
    BinomialSystem::parse(
        "vars: a,b,c,d\n\
         a*c - b^2\n\
         a*d - b*c\n\
         b*d - c^2\n",
    )
}
