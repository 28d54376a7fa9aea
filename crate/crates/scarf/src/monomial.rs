//! Exponent vectors and monomials in a fixed polynomial ring `k[x_1..x_n]`.
//!
//! A monomial is identified with its exponent vector; the ambient variable
//! count is carried by every value and checked on every binary operation.
//! Exponents are `u32` with checked arithmetic on products, so overflow is
//! a loud failure instead of silent wraparound.

use std::fmt;

/// A vector of nonnegative exponents, one per ring variable.
///
/// Comparison (`Ord`) is ascending lexicographic; this is the canonical
/// order used to sort generators, *not* divisibility.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    #[must_use]
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    #[must_use]
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// Number of ring variables (not the number of nonzero entries).
    #[must_use]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[must_use]
    pub fn get(&self, s: usize) -> u32 {
        self.0[s]
    }

    pub fn set(&mut self, s: usize, e: u32) {
        self.0[s] = e;
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    #[must_use]
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// All entries zero.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of the nonzero entries, ascending.
    #[must_use]
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.0[s] > 0).collect()
    }

    #[must_use]
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    /// Sum of all entries.
    #[must_use]
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Entrywise `<=`, i.e. divisibility of the corresponding monomials.
    #[must_use]
    pub fn leq(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Entrywise maximum (the lcm exponent vector).
    #[must_use]
    pub fn join(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Entrywise minimum (the gcd exponent vector).
    #[must_use]
    pub fn meet(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// Entrywise sum with overflow check (monomial product).
    #[must_use]
    pub fn checked_add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow in product"))
                .collect(),
        )
    }

    /// Entrywise difference; `None` if any entry would go negative.
    #[must_use]
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<u32>>>()
            .map(ExponentVector)
    }

    #[must_use]
    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Keep the entries at `vars` (in the given order), dropping the rest.
    #[must_use]
    pub fn restrict(&self, vars: &[usize]) -> Self {
        ExponentVector(vars.iter().map(|&s| self.0[s]).collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Monomial(ExponentVector);

impl Monomial {
    #[must_use]
    pub fn new(exps: ExponentVector) -> Self {
        Monomial(exps)
    }

    #[must_use]
    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(ExponentVector::new(exps))
    }

    /// The constant monomial 1.
    #[must_use]
    pub fn unit(n: usize) -> Self {
        Monomial(ExponentVector::zeros(n))
    }

    /// A pure power `x_s^e`.
    #[must_use]
    pub fn pure_power(n: usize, s: usize, e: u32) -> Self {
        let mut v = ExponentVector::zeros(n);
        v.set(s, e);
        Monomial(v)
    }

    #[must_use]
    pub fn exponents(&self) -> &ExponentVector {
        &self.0
    }

    #[must_use]
    pub fn into_exponents(self) -> ExponentVector {
        self.0
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn degree_in(&self, s: usize) -> u32 {
        self.0.get(s)
    }

    #[must_use]
    pub fn total_degree(&self) -> u64 {
        self.0.total_degree()
    }

    #[must_use]
    pub fn is_unit(&self) -> bool {
        self.0.is_zero()
    }

    #[must_use]
    pub fn support(&self) -> Vec<usize> {
        self.0.support()
    }

    #[must_use]
    pub fn support_size(&self) -> usize {
        self.0.support_size()
    }

    /// `Some((s, e))` when the monomial is `x_s^e` with `e >= 1`.
    #[must_use]
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let supp = self.support();
        match supp.as_slice() {
            [s] => Some((*s, self.0.get(*s))),
            _ => None,
        }
    }

    #[must_use]
    pub fn divides(&self, other: &Self) -> bool {
        self.0.leq(&other.0)
    }

    /// Divides `other` with a *strictly* smaller exponent in every variable
    /// of `other`'s support.  Equivalently: `self` divides `other` and the
    /// quotient `other / self` has the same support as `other`.
    #[must_use]
    pub fn strictly_divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        (0..self.num_vars()).all(|s| {
            let (a, b) = (self.0.get(s), other.0.get(s));
            if b == 0 {
                a == 0
            } else {
                a < b
            }
        })
    }

    #[must_use]
    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(self.0.join(&other.0))
    }

    #[must_use]
    pub fn gcd(&self, other: &Self) -> Self {
        Monomial(self.0.meet(&other.0))
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.checked_add(&other.0))
    }

    /// Exact quotient; `None` if `other` does not divide `self`.
    #[must_use]
    pub fn div(&self, other: &Self) -> Option<Self> {
        self.0.checked_sub(&other.0).map(Monomial)
    }

    /// The squarefree monomial on the same support.
    #[must_use]
    pub fn radical(&self) -> Self {
        Monomial(ExponentVector::new(
            self.0.iter().map(|e| u32::from(e > 0)).collect(),
        ))
    }

    /// Render with the given variable names, e.g. `x^2*y`.
    #[must_use]
    pub fn render(&self, names: &[String]) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (name, &e) in names.iter().zip(self.0.as_slice()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.0)
    }
}

/// Lcm of any number of monomials; the empty lcm is 1.
#[must_use]
pub fn lcm_of<'a, I>(n: usize, monomials: I) -> Monomial
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let mut acc = ExponentVector::zeros(n);
    for m in monomials {
        acc = acc.join(m.exponents());
    }
    Monomial(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 1, 1]);
        assert!(!a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.lcm(&b), m(&[2, 1, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert!(m(&[1, 1, 0]).divides(&a));
    }

    #[test]
    fn strict_divisibility_needs_full_support_quotient() {
        let target = m(&[3, 3, 2]);
        assert!(m(&[1, 2, 1]).strictly_divides(&target));
        // equal exponent in one support variable: not strict
        assert!(!m(&[3, 2, 1]).strictly_divides(&target));
        // positive exponent outside the support of the target
        assert!(!m(&[1, 2, 1]).strictly_divides(&m(&[3, 3, 0])));
        // the unit strictly divides anything with nonempty support
        assert!(m(&[0, 0, 0]).strictly_divides(&target));
    }

    #[test]
    fn empty_lcm_is_unit() {
        assert!(lcm_of(3, std::iter::empty()).is_unit());
        let gens = [m(&[2, 0, 0]), m(&[0, 1, 1])];
        assert_eq!(lcm_of(3, gens.iter()), m(&[2, 1, 1]));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(m(&[0, 3, 0]).as_pure_power(), Some((1, 3)));
        assert_eq!(m(&[1, 3, 0]).as_pure_power(), None);
        assert_eq!(m(&[0, 0, 0]).as_pure_power(), None);
        assert_eq!(Monomial::pure_power(3, 1, 3), m(&[0, 3, 0]));
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let mut gens = vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])];
        gens.sort();
        assert_eq!(gens, vec![m(&[0, 2]), m(&[1, 1]), m(&[2, 0])]);
    }

    #[test]
    fn render_uses_names() {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(m(&[2, 1, 0]).render(&names), "x^2*y");
        assert_eq!(m(&[0, 0, 0]).render(&names), "1");
    }
}
