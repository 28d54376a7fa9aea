//! Simplicial complexes on generator/variable vertices, with f-vectors,
//! restrictions, an exhaustive shellability search, and the JSON exchange
//! format.
//!
//! Vertices are either generator indices (`Gen`, displayed 1-based) or
//! variable markers (`Var`, displayed by name).  All generator vertices
//! sort before all variable vertices; this fixed order orients boundary
//! maps and differentials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monomial::ExponentVector;

/// A vertex: a generator index (0-based internally, 1-based in output) or
/// a variable marker.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Gen(usize),
    Var(usize),
}

impl Vertex {
    #[must_use]
    pub fn render(&self, names: &[String]) -> String {
        match self {
            Vertex::Gen(i) => (i + 1).to_string(),
            Vertex::Var(s) => names[*s].clone(),
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Gen(i) => write!(f, "g{}", i + 1),
            Vertex::Var(s) => write!(f, "v{s}"),
        }
    }
}

/// A face: a sorted set of vertices.  The empty face is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<Vertex>);

impl Face {
    #[must_use]
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    #[must_use]
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    #[must_use]
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    #[must_use]
    pub fn cardinality(&self) -> usize {
        self.0.len()
    }

    /// Dimension: cardinality minus one (the empty face has dimension -1).
    #[must_use]
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[must_use]
    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    #[must_use]
    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    #[must_use]
    pub fn with(&self, v: Vertex) -> Face {
        let mut vs = self.0.clone();
        vs.push(v);
        Face::new(vs)
    }

    #[must_use]
    pub fn without(&self, v: Vertex) -> Face {
        Face(self.0.iter().copied().filter(|&u| u != v).collect())
    }

    #[must_use]
    pub fn intersect(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    /// All subsets one vertex smaller, in vertex order.
    #[must_use]
    pub fn boundary(&self) -> Vec<Face> {
        self.0.iter().map(|&v| self.without(v)).collect()
    }

    /// Generator indices contained in this face.
    #[must_use]
    pub fn gens(&self) -> Vec<usize> {
        self.0
            .iter()
            .filter_map(|v| match v {
                Vertex::Gen(i) => Some(*i),
                Vertex::Var(_) => None,
            })
            .collect()
    }

    /// Variable markers contained in this face.
    #[must_use]
    pub fn vars(&self) -> Vec<usize> {
        self.0
            .iter()
            .filter_map(|v| match v {
                Vertex::Var(s) => Some(*s),
                Vertex::Gen(_) => None,
            })
            .collect()
    }

    /// The comma-joined key used in the JSON format ("" for the empty face).
    #[must_use]
    pub fn key(&self, names: &[String]) -> String {
        self.0
            .iter()
            .map(|v| v.render(names))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v:?}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Vertex> for Face {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        Face::new(iter.into_iter().collect())
    }
}

/// A finite simplicial complex, stored by its facets.
///
/// The void complex (no faces at all) and the irrelevant complex (only the
/// empty face) are distinct values; most constructions here produce
/// complexes containing at least the empty face.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Build from generating faces; non-maximal faces are dropped.
    #[must_use]
    pub fn from_faces(faces: Vec<Face>) -> Self {
        let mut facets: Vec<Face> = Vec::new();
        for f in &faces {
            if !faces.iter().any(|g| g != f && f.is_subset_of(g)) && !facets.contains(f) {
                facets.push(f.clone());
            }
        }
        facets.sort();
        SimplicialComplex { facets }
    }

    /// The void complex: no faces, not even the empty one.
    #[must_use]
    pub fn void() -> Self {
        SimplicialComplex { facets: Vec::new() }
    }

    /// The irrelevant complex `{∅}`.
    #[must_use]
    pub fn irrelevant() -> Self {
        SimplicialComplex {
            facets: vec![Face::empty()],
        }
    }

    #[must_use]
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    #[must_use]
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `None` for the void complex, `-1` for `{∅}`.
    #[must_use]
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(Face::dim).max()
    }

    #[must_use]
    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(Face::cardinality);
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// Sorted list of vertices (union of the facets).
    #[must_use]
    pub fn vertices(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self
            .facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect();
        set.into_iter().collect()
    }

    #[must_use]
    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    /// Downward closure: every face, including the empty face (when the
    /// complex is nonvoid), sorted by cardinality then lexicographically.
    #[must_use]
    pub fn all_faces(&self) -> Vec<Face> {
        let mut seen: BTreeSet<Face> = BTreeSet::new();
        for facet in &self.facets {
            let vs = facet.vertices();
            assert!(vs.len() < 26, "facet too large to enumerate subsets");
            for mask in 0u32..(1 << vs.len()) {
                let face: Face = vs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                seen.insert(face);
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_by(|a, b| (a.cardinality(), a).cmp(&(b.cardinality(), b)));
        faces
    }

    /// `f_vector()[i]` counts the faces of cardinality `i` (dimension
    /// `i-1`), so the leading entry is 1 for any nonvoid complex.
    #[must_use]
    pub fn f_vector(&self) -> Vec<u64> {
        let top = self.dim().map_or(0, |d| (d + 1) as usize);
        let mut f = vec![0u64; top + 1];
        for face in self.all_faces() {
            f[face.cardinality()] += 1;
        }
        f
    }

    /// The restriction to a vertex set: all faces contained in `keep`.
    #[must_use]
    pub fn restriction(&self, keep: &BTreeSet<Vertex>) -> SimplicialComplex {
        let cut: Vec<Face> = self
            .facets
            .iter()
            .map(|f| f.vertices().iter().copied().filter(|v| keep.contains(v)).collect())
            .collect();
        SimplicialComplex::from_faces(cut)
    }

    /// Exhaustive shellability decision for pure complexes.
    ///
    /// Returns a witness shelling order (facet indices) or `None` when no
    /// order works.  Fails on non-pure input and when the facet count
    /// exceeds `limits.shelling_facets` (the subset DP is exponential).
    pub fn shelling_order(&self, limits: &Limits) -> Result<Option<Vec<usize>>> {
        let t = self.facets.len();
        if t > limits.shelling_facets {
            return Err(Error::CapExceeded {
                what: "shellability facet count",
                size: t,
                cap: limits.shelling_facets,
            });
        }
        for w in self.facets.windows(2) {
            if w[0].cardinality() != w[1].cardinality() {
                return Err(Error::NotPure(w[0].cardinality(), w[1].cardinality()));
            }
        }
        if t <= 1 {
            return Ok(Some((0..t).collect()));
        }
        let size = self.facets[0].cardinality();
        // Pairwise intersections as bitmasks over the vertex list.
        let verts = self.vertices();
        assert!(verts.len() <= 64, "too many vertices for the shelling search");
        let masks: Vec<u64> = self
            .facets
            .iter()
            .map(|f| {
                f.vertices()
                    .iter()
                    .map(|v| 1u64 << verts.binary_search(v).unwrap())
                    .sum()
            })
            .collect();
        // A facet F may be appended after the set S when every earlier
        // intersection G∩F is dominated by some L∩F of cardinality
        // |F| - 1 with L in S.
        let attachable = |f: usize, set: u32| -> bool {
            let fm = masks[f];
            (0..t).filter(|g| set >> g & 1 == 1).all(|g| {
                let gf = masks[g] & fm;
                (0..t).filter(|l| set >> l & 1 == 1).any(|l| {
                    let lf = masks[l] & fm;
                    lf.count_ones() as usize == size - 1 && gf & !lf == 0
                })
            })
        };
        // Subset DP: can the subset be arranged as a shelling prefix?
        let mut reachable = vec![false; 1usize << t];
        let mut pred: Vec<u8> = vec![0; 1usize << t];
        reachable[0] = true;
        for set in 1u32..(1 << t) {
            for f in 0..t {
                if set >> f & 1 == 0 {
                    continue;
                }
                let prev = set & !(1 << f);
                if !reachable[prev as usize] {
                    continue;
                }
                if prev == 0 || attachable(f, prev) {
                    reachable[set as usize] = true;
                    pred[set as usize] = f as u8;
                    break;
                }
            }
        }
        let full = (1u32 << t) - 1;
        if !reachable[full as usize] {
            return Ok(None);
        }
        let mut order = Vec::with_capacity(t);
        let mut set = full;
        while set != 0 {
            let f = pred[set as usize] as usize;
            order.push(f);
            set &= !(1 << f);
        }
        order.reverse();
        Ok(Some(order))
    }

    pub fn is_shellable(&self, limits: &Limits) -> Result<bool> {
        Ok(self.shelling_order(limits)?.is_some())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.facets).finish()
    }
}

/// A simplicial complex together with a monomial label (exponent vector)
/// on every face: the lcm of the vertex labels, with the empty face
/// labeled by the zero vector.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledComplex {
    complex: SimplicialComplex,
    labels: BTreeMap<Face, ExponentVector>,
    names: Vec<String>,
}

impl LabeledComplex {
    /// Assemble from parts; every face of the complex must be labeled.
    pub fn new(
        complex: SimplicialComplex,
        labels: BTreeMap<Face, ExponentVector>,
        names: Vec<String>,
    ) -> Result<Self> {
        for face in complex.all_faces() {
            if !labels.contains_key(&face) {
                return Err(Error::Invariant(format!("missing label for face {face:?}")));
            }
        }
        Ok(LabeledComplex {
            complex,
            labels,
            names,
        })
    }

    /// Label a complex by vertex supports: every face gets the 0/1 vector
    /// of its variable markers.  Used for complexes living on variables.
    #[must_use]
    pub fn from_support(complex: SimplicialComplex, names: Vec<String>) -> Self {
        let n = names.len();
        let labels = complex
            .all_faces()
            .into_iter()
            .map(|face| {
                let mut v = ExponentVector::zeros(n);
                for s in face.vars() {
                    v.set(s, 1);
                }
                (face, v)
            })
            .collect();
        LabeledComplex {
            complex,
            labels,
            names,
        }
    }

    #[must_use]
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    #[must_use]
    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    #[must_use]
    pub fn label(&self, face: &Face) -> &ExponentVector {
        &self.labels[face]
    }

    #[must_use]
    pub fn labels(&self) -> &BTreeMap<Face, ExponentVector> {
        &self.labels
    }

    /// Faces whose label has full support (no zero coordinate).
    #[must_use]
    pub fn full_support_faces(&self) -> Vec<Face> {
        self.complex
            .all_faces()
            .into_iter()
            .filter(|f| self.labels[f].support_size() == self.num_vars())
            .collect()
    }

    /// Restrict to the vertices whose label support lies inside `vars`
    /// (the part of a labeled triangulation carried by a coordinate face).
    #[must_use]
    pub fn restrict_to_variables(&self, vars: &[usize]) -> LabeledComplex {
        let keep: BTreeSet<Vertex> = self
            .complex
            .vertices()
            .into_iter()
            .filter(|v| {
                let supp = self.labels[&Face::new(vec![*v])].support();
                supp.iter().all(|s| vars.contains(s))
            })
            .collect();
        let complex = self.complex.restriction(&keep);
        let labels = complex
            .all_faces()
            .into_iter()
            .map(|f| {
                let l = self.labels[&f].clone();
                (f, l)
            })
            .collect();
        LabeledComplex {
            complex,
            labels,
            names: self.names.clone(),
        }
    }
}

impl fmt::Debug for LabeledComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledComplex{:?}", self.complex)
    }
}

// ---------------------------------------------------------------------------
// JSON format
// ---------------------------------------------------------------------------

fn vertex_to_json(v: Vertex, names: &[String]) -> serde_json::Value {
    match v {
        Vertex::Gen(i) => serde_json::Value::from(i as u64 + 1),
        Vertex::Var(s) => serde_json::Value::from(names[s].clone()),
    }
}

fn vertex_from_json(value: &serde_json::Value, names: &[String]) -> Result<Vertex> {
    match value {
        serde_json::Value::Number(n) => {
            let i = n
                .as_u64()
                .filter(|&i| i >= 1)
                .ok_or_else(|| Error::parse(0, format!("bad generator index {n}")))?;
            Ok(Vertex::Gen(i as usize - 1))
        }
        serde_json::Value::String(name) => {
            let s = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::parse(0, format!("unknown variable {name:?}")))?;
            Ok(Vertex::Var(s))
        }
        other => Err(Error::parse(0, format!("bad vertex {other}"))),
    }
}

impl SimplicialComplex {
    /// JSON object in the exchange format, with support labels.
    #[must_use]
    pub fn to_json(&self, names: &[String]) -> serde_json::Value {
        LabeledComplex::from_support(self.clone(), names.to_vec()).to_json()
    }
}

impl LabeledComplex {
    /// `{"vertices": [...], "facets": [[...], ...], "labels": {...}}` with
    /// generator vertices as 1-based integers and variable markers by name.
    /// Face keys are comma-joined sorted vertex renderings; the empty face
    /// has key `""`.  Key order is deterministic.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let names = &self.names;
        let vertices: Vec<serde_json::Value> = self
            .complex
            .vertices()
            .into_iter()
            .map(|v| vertex_to_json(v, names))
            .collect();
        let facets: Vec<serde_json::Value> = self
            .complex
            .facets()
            .iter()
            .map(|f| {
                serde_json::Value::Array(
                    f.vertices()
                        .iter()
                        .map(|&v| vertex_to_json(v, names))
                        .collect(),
                )
            })
            .collect();
        let mut labels = serde_json::Map::new();
        for face in self.complex.all_faces() {
            let l = &self.labels[&face];
            labels.insert(
                face.key(names),
                serde_json::Value::Array(l.iter().map(serde_json::Value::from).collect()),
            );
        }
        serde_json::json!({
            "vertices": vertices,
            "facets": facets,
            "labels": labels,
        })
    }

    /// Parse the exchange format; `names` gives the ambient variables.
    pub fn from_json(value: &serde_json::Value, names: &[String]) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::parse(0, "expected a JSON object"))?;
        let facet_rows = obj
            .get("facets")
            .and_then(|f| f.as_array())
            .ok_or_else(|| Error::parse(0, "missing facets array"))?;
        let mut facets = Vec::new();
        for row in facet_rows {
            let items = row
                .as_array()
                .ok_or_else(|| Error::parse(0, "facet must be an array"))?;
            let verts = items
                .iter()
                .map(|v| vertex_from_json(v, names))
                .collect::<Result<Vec<_>>>()?;
            facets.push(Face::new(verts));
        }
        let complex = SimplicialComplex::from_faces(facets);
        if let Some(declared) = obj.get("vertices").and_then(|v| v.as_array()) {
            let parsed: BTreeSet<Vertex> = declared
                .iter()
                .map(|v| vertex_from_json(v, names))
                .collect::<Result<_>>()?;
            let actual: BTreeSet<Vertex> = complex.vertices().into_iter().collect();
            if parsed != actual {
                return Err(Error::parse(0, "vertex list does not match the facets"));
            }
        }
        let mut labels = BTreeMap::new();
        match obj.get("labels").and_then(|l| l.as_object()) {
            Some(map) => {
                for face in complex.all_faces() {
                    let key = face.key(names);
                    let row = map
                        .get(&key)
                        .and_then(|v| v.as_array())
                        .ok_or_else(|| Error::parse(0, format!("missing label for {key:?}")))?;
                    let exps = row
                        .iter()
                        .map(|e| {
                            e.as_u64()
                                .map(|e| e as u32)
                                .ok_or_else(|| Error::parse(0, "label entries must be integers"))
                        })
                        .collect::<Result<Vec<u32>>>()?;
                    if exps.len() != names.len() {
                        return Err(Error::parse(0, format!("label for {key:?} has wrong length")));
                    }
                    labels.insert(face, ExponentVector::new(exps));
                }
            }
            None => {
                return Ok(LabeledComplex::from_support(complex, names.to_vec()));
            }
        }
        LabeledComplex::new(complex, labels, names.to_vec())
    }
}
