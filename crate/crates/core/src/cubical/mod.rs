//! Finitely presented cubical sets.
//!
//! A presentation lists the nondegenerate cubes only. Every face of a cube is a
//! [`FaceRef`]: a nondegenerate base cube together with the degeneracies applied
//! to it, written as a strictly decreasing index word `s_{i1} .. s_{ik}` with
//! `i1 > .. > ik`. With that convention the indices are exactly the positions
//! of the dummy coordinates in the resulting cube, which makes equality of
//! degenerate cubes a plain comparison.

mod quotient;
mod realization;
mod suspension;
mod tensor;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub use quotient::quotient_collapse;
pub use realization::{r, RealizationPoint};
pub use suspension::{suspension_model, IntervalCell, SuspensionModel};
pub use tensor::tensor_product;

/// Index of a nondegenerate cube inside its [`CubicalSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cube {
    pub name: String,
    pub dim: usize,
}

/// A possibly degenerate cube: `s_{degens[0]} .. s_{degens[k-1]} (base)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceRef {
    pub base: CubeId,
    /// Strictly decreasing, each entry in `1..=dim` of the resulting cube.
    pub degens: Vec<usize>,
}

impl FaceRef {
    pub fn cube(base: CubeId) -> Self {
        FaceRef { base, degens: Vec::new() }
    }

    /// The fully degenerate `dim`-cube on a vertex.
    pub fn collapsed(vertex: CubeId, dim: usize) -> Self {
        FaceRef { base: vertex, degens: (1..=dim).rev().collect() }
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degens.is_empty()
    }
}

/// A face given by name, as it appears in a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFace {
    pub base: String,
    pub degens: Vec<usize>,
}

impl RawFace {
    pub fn new(base: impl Into<String>, degens: &[usize]) -> Self {
        RawFace { base: base.into(), degens: degens.to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawCube {
    pub name: String,
    pub dim: usize,
    /// Keyed by `(i, eps)` with `1 <= i <= dim`.
    pub faces: BTreeMap<(usize, u8), RawFace>,
}

/// Name-based presentation, the shape of the JSON complex format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub basepoint: String,
    pub cubes: Vec<RawCube>,
}

/// One failed instance of `d^eps_i d^eta_j = d^eta_{j-1} d^eps_i` (`i < j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub cube: CubeId,
    pub i: usize,
    pub j: usize,
    pub eps: u8,
    pub eta: u8,
}

#[derive(Clone, PartialEq, Eq)]
pub struct CubicalSet {
    cubes: Vec<Cube>,
    /// `faces[c][i - 1][eps]`
    faces: Vec<Vec<[FaceRef; 2]>>,
    by_name: HashMap<String, CubeId>,
    basepoint: CubeId,
}

impl fmt::Debug for CubicalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CubicalSet")
            .field("basepoint", &self.cubes[self.basepoint.0].name)
            .field("counts", &self.counts())
            .finish()
    }
}

impl CubicalSet {
    pub fn builder(basepoint: impl Into<String>) -> Builder {
        Builder { pres: Presentation { basepoint: basepoint.into(), cubes: Vec::new() } }
    }

    /// Builds from a name-based presentation, checking everything except the
    /// cubical relations (see [`CubicalSet::validate`]).
    ///
    /// A basepoint name that is not declared among the cubes declares a vertex.
    pub fn from_presentation(pres: &Presentation) -> Result<Self> {
        let mut raw: Vec<&RawCube> = pres.cubes.iter().collect();
        let implicit;
        if !raw.iter().any(|c| c.name == pres.basepoint) {
            implicit = RawCube { name: pres.basepoint.clone(), dim: 0, faces: BTreeMap::new() };
            raw.insert(0, &implicit);
        }

        let mut by_name = HashMap::new();
        let mut cubes = Vec::with_capacity(raw.len());
        for (idx, c) in raw.iter().enumerate() {
            if by_name.insert(c.name.clone(), CubeId(idx)).is_some() {
                return Err(Error::Structure(format!("duplicate cube name {:?}", c.name)));
            }
            cubes.push(Cube { name: c.name.clone(), dim: c.dim });
        }

        let lookup = |name: &str| -> Result<CubeId> {
            by_name.get(name).copied().ok_or_else(|| Error::DanglingCube(name.to_string()))
        };

        let mut faces = Vec::with_capacity(raw.len());
        for c in &raw {
            for &(i, eps) in c.faces.keys() {
                if i == 0 || i > c.dim || eps > 1 {
                    return Err(Error::Structure(format!(
                        "cube {:?} of dim {} has no face d{}_{}",
                        c.name, c.dim, eps, i
                    )));
                }
            }
            let mut row = Vec::with_capacity(c.dim);
            for i in 1..=c.dim {
                let mut pair: [Option<FaceRef>; 2] = [None, None];
                for eps in 0..2u8 {
                    let rf = c.faces.get(&(i, eps)).ok_or_else(|| {
                        Error::Structure(format!("cube {:?} is missing face d{}_{}", c.name, eps, i))
                    })?;
                    let base = lookup(&rf.base)?;
                    let fr = FaceRef { base, degens: rf.degens.clone() };
                    check_degens(&fr.degens, cubes[base.0].dim + fr.degens.len()).map_err(|why| {
                        Error::Structure(format!("face d{}_{} of {:?}: {}", eps, i, c.name, why))
                    })?;
                    let fdim = cubes[base.0].dim + fr.degens.len();
                    if fdim + 1 != c.dim {
                        return Err(Error::Structure(format!(
                            "face d{}_{} of {:?} has dim {}, expected {}",
                            eps,
                            i,
                            c.name,
                            fdim,
                            c.dim - 1
                        )));
                    }
                    pair[eps as usize] = Some(fr);
                }
                let [a, b] = pair;
                row.push([a.unwrap(), b.unwrap()]);
            }
            faces.push(row);
        }

        let basepoint = lookup(&pres.basepoint)?;
        if cubes[basepoint.0].dim != 0 {
            return Err(Error::Structure(format!(
                "basepoint {:?} must be a vertex",
                pres.basepoint
            )));
        }
        Ok(CubicalSet { cubes, faces, by_name, basepoint })
    }

    pub fn to_presentation(&self) -> Presentation {
        let cubes = self
            .ids()
            .map(|c| {
                let mut faces = BTreeMap::new();
                for i in 1..=self.dim(c) {
                    for eps in 0..2u8 {
                        let f = self.face(c, i, eps);
                        faces.insert(
                            (i, eps),
                            RawFace { base: self.name(f.base).to_string(), degens: f.degens.clone() },
                        );
                    }
                }
                RawCube { name: self.name(c).to_string(), dim: self.dim(c), faces }
            })
            .collect();
        Presentation { basepoint: self.name(self.basepoint).to_string(), cubes }
    }

    /// Assembles a set whose face data is known to be well formed.
    pub(crate) fn from_parts(
        cubes: Vec<Cube>,
        faces: Vec<Vec<[FaceRef; 2]>>,
        basepoint: CubeId,
    ) -> Self {
        let by_name = cubes.iter().enumerate().map(|(i, c)| (c.name.clone(), CubeId(i))).collect();
        CubicalSet { cubes, faces, by_name, basepoint }
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = CubeId> + '_ {
        (0..self.cubes.len()).map(CubeId)
    }

    pub fn ids_of_dim(&self, dim: usize) -> impl Iterator<Item = CubeId> + '_ {
        self.ids().filter(move |&c| self.dim(c) == dim)
    }

    pub fn cube(&self, c: CubeId) -> &Cube {
        &self.cubes[c.0]
    }

    pub fn name(&self, c: CubeId) -> &str {
        &self.cubes[c.0].name
    }

    pub fn dim(&self, c: CubeId) -> usize {
        self.cubes[c.0].dim
    }

    pub fn id(&self, name: &str) -> Option<CubeId> {
        self.by_name.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<CubeId> {
        self.id(name).ok_or_else(|| Error::DanglingCube(name.to_string()))
    }

    pub fn basepoint(&self) -> CubeId {
        self.basepoint
    }

    pub fn top_dim(&self) -> usize {
        self.cubes.iter().map(|c| c.dim).max().unwrap_or(0)
    }

    /// Number of nondegenerate cubes in each dimension `0..=top_dim`.
    pub fn counts(&self) -> Vec<usize> {
        let mut v = vec![0; self.top_dim() + 1];
        for c in &self.cubes {
            v[c.dim] += 1;
        }
        v
    }

    /// Stored face `d^eps_i c` of a nondegenerate cube, `1 <= i <= dim(c)`.
    pub fn face(&self, c: CubeId, i: usize, eps: u8) -> &FaceRef {
        &self.faces[c.0][i - 1][eps as usize]
    }

    pub fn cell_dim(&self, cell: &FaceRef) -> usize {
        self.dim(cell.base) + cell.degens.len()
    }

    /// `d^eps_i` of a possibly degenerate cube, in normal form.
    pub fn face_of(&self, cell: &FaceRef, i: usize, eps: u8) -> FaceRef {
        let n = self.cell_dim(cell);
        debug_assert!(1 <= i && i <= n);
        if let Some(pos) = cell.degens.iter().position(|&d| d == i) {
            // d_i s_i = id: drop the dummy coordinate.
            let degens = cell
                .degens
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != pos)
                .map(|(_, &d)| if d > i { d - 1 } else { d })
                .collect();
            return FaceRef { base: cell.base, degens };
        }
        let below = cell.degens.iter().filter(|&&d| d < i).count();
        let f = self.face(cell.base, i - below, eps);
        let outer: BTreeSet<usize> =
            cell.degens.iter().map(|&d| if d > i { d - 1 } else { d }).collect();
        FaceRef { base: f.base, degens: merge_dummies(&outer, n - 1, &f.degens) }
    }

    /// Checks the face relations of every cube of dimension at least two.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for c in self.ids() {
            let n = self.dim(c);
            for j in 2..=n {
                for i in 1..j {
                    for eps in 0..2u8 {
                        for eta in 0..2u8 {
                            let lhs = self.face_of(self.face(c, j, eta), i, eps);
                            let rhs = self.face_of(self.face(c, i, eps), j - 1, eta);
                            if lhs != rhs {
                                out.push(Violation { cube: c, i, j, eps, eta });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Vertex reached from a cube by taking `d^0` in every coordinate.
    pub fn min_vertex(&self, c: CubeId) -> CubeId {
        let mut cell = FaceRef::cube(c);
        while self.cell_dim(&cell) > 0 {
            cell = self.face_of(&cell, 1, 0);
        }
        cell.base
    }

    /// Endpoints `(d^0, d^1)` of an edge, as vertices.
    pub fn edge_ends(&self, e: CubeId) -> (CubeId, CubeId) {
        debug_assert_eq!(self.dim(e), 1);
        (self.face(e, 1, 0).base, self.face(e, 1, 1).base)
    }

    /// Connected components of the 1-skeleton; their number is the degree-0
    /// Betti number. Returns a component label per vertex id.
    pub fn components(&self) -> (usize, HashMap<CubeId, usize>) {
        let mut label = HashMap::new();
        let mut count = 0;
        for v in self.ids_of_dim(0) {
            if label.contains_key(&v) {
                continue;
            }
            let mut stack = vec![v];
            label.insert(v, count);
            while let Some(w) = stack.pop() {
                for (u, _) in self.neighbours(w) {
                    if let std::collections::hash_map::Entry::Vacant(e) = label.entry(u) {
                        e.insert(count);
                        stack.push(u);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// Edges at a vertex: `(other end, edge, true if the edge leaves v)`.
    pub(crate) fn neighbours(&self, v: CubeId) -> Vec<(CubeId, (CubeId, bool))> {
        let mut out = Vec::new();
        for e in self.ids_of_dim(1) {
            let (a, b) = self.edge_ends(e);
            if a == v {
                out.push((b, (e, true)));
            }
            if b == v {
                out.push((a, (e, false)));
            }
        }
        out
    }

    /// Shortest edge path from `from` to the basepoint, as `(edge, forward)`
    /// steps. `None` when the basepoint is in another component.
    pub fn edge_path_to_basepoint(&self, from: CubeId) -> Option<Vec<(CubeId, bool)>> {
        let target = self.basepoint;
        let mut prev: HashMap<CubeId, (CubeId, (CubeId, bool))> = HashMap::new();
        let mut queue = std::collections::VecDeque::from([from]);
        let mut seen = BTreeSet::from([from]);
        while let Some(w) = queue.pop_front() {
            if w == target {
                let mut steps = Vec::new();
                let mut cur = w;
                while cur != from {
                    let (p, step) = prev[&cur];
                    steps.push(step);
                    cur = p;
                }
                steps.reverse();
                return Some(steps);
            }
            for (u, step) in self.neighbours(w) {
                if seen.insert(u) {
                    prev.insert(u, (w, step));
                    queue.push_back(u);
                }
            }
        }
        None
    }
}

fn check_degens(degens: &[usize], n: usize) -> std::result::Result<(), String> {
    if degens.windows(2).any(|w| w[0] <= w[1]) {
        return Err(format!("degeneracy word {degens:?} is not strictly decreasing"));
    }
    if let Some(&d) = degens.iter().find(|&&d| d == 0 || d > n) {
        return Err(format!("degeneracy index {d} out of range 1..={n}"));
    }
    Ok(())
}

/// Dummy positions of a `total`-cube that already has dummies `outer`, after
/// the remaining coordinates (in order) pick up the dummies `inner`.
/// Result is strictly decreasing.
fn merge_dummies(outer: &BTreeSet<usize>, total: usize, inner: &[usize]) -> Vec<usize> {
    let free: Vec<usize> = (1..=total).filter(|p| !outer.contains(p)).collect();
    let mut all: BTreeSet<usize> = outer.clone();
    all.extend(inner.iter().map(|&r| free[r - 1]));
    all.into_iter().rev().collect()
}

/// A set of cubes of a fixed [`CubicalSet`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subcomplex {
    members: BTreeSet<CubeId>,
}

impl Subcomplex {
    pub fn new(ids: impl IntoIterator<Item = CubeId>) -> Self {
        Subcomplex { members: ids.into_iter().collect() }
    }

    pub fn from_names<'a>(k: &CubicalSet, names: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        names.into_iter().map(|n| k.lookup(n)).collect::<Result<BTreeSet<_>>>().map(|members| {
            Subcomplex { members }
        })
    }

    /// Smallest face-closed set containing `ids`.
    pub fn closure(k: &CubicalSet, ids: impl IntoIterator<Item = CubeId>) -> Self {
        let mut members = BTreeSet::new();
        let mut stack: Vec<CubeId> = ids.into_iter().collect();
        while let Some(c) = stack.pop() {
            if members.insert(c) {
                for i in 1..=k.dim(c) {
                    for eps in 0..2 {
                        stack.push(k.face(c, i, eps).base);
                    }
                }
            }
        }
        Subcomplex { members }
    }

    pub fn contains(&self, c: CubeId) -> bool {
        self.members.contains(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = CubeId> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// First member with a face outside the set, if any.
    pub fn face_closure_gap(&self, k: &CubicalSet) -> Option<(CubeId, CubeId)> {
        for c in self.iter() {
            for i in 1..=k.dim(c) {
                for eps in 0..2 {
                    let b = k.face(c, i, eps).base;
                    if !self.contains(b) {
                        return Some((c, b));
                    }
                }
            }
        }
        None
    }
}

/// Convenience construction of presentations in code.
pub struct Builder {
    pres: Presentation,
}

impl Builder {
    pub fn vertex(mut self, name: &str) -> Self {
        self.pres.cubes.push(RawCube { name: name.into(), dim: 0, faces: BTreeMap::new() });
        self
    }

    /// A cube whose faces are nondegenerate; `faces[i-1] = [d0_i, d1_i]`.
    pub fn cube(self, name: &str, faces: &[[&str; 2]]) -> Self {
        let faces = faces.iter().map(|[a, b]| [RawFace::new(*a, &[]), RawFace::new(*b, &[])]).collect();
        self.cube_raw(name, faces)
    }

    pub fn cube_raw(mut self, name: &str, faces: Vec<[RawFace; 2]>) -> Self {
        let dim = faces.len();
        let mut map = BTreeMap::new();
        for (i, [a, b]) in faces.into_iter().enumerate() {
            map.insert((i + 1, 0), a);
            map.insert((i + 1, 1), b);
        }
        self.pres.cubes.push(RawCube { name: name.into(), dim, faces: map });
        self
    }

    pub fn build(self) -> Result<CubicalSet> {
        CubicalSet::from_presentation(&self.pres)
    }
}

/// Small named complexes used throughout the tests and the CLI corpus.
pub mod standard {
    use super::*;

    pub fn point() -> CubicalSet {
        CubicalSet::builder("v").vertex("v").build().unwrap()
    }

    /// One vertex `v`, one edge `e` with both ends at `v`.
    pub fn circle() -> CubicalSet {
        CubicalSet::builder("v").vertex("v").cube("e", &[["v", "v"]]).build().unwrap()
    }

    /// Vertices `a`, `b`, edge `e` from `a` to `b`, based at `a`.
    pub fn interval() -> CubicalSet {
        CubicalSet::builder("a").vertex("a").vertex("b").cube("e", &[["a", "b"]]).build().unwrap()
    }

    /// Two loops `e`, `f` at `v`.
    pub fn wedge_of_circles() -> CubicalSet {
        CubicalSet::builder("v")
            .vertex("v")
            .cube("e", &[["v", "v"]])
            .cube("f", &[["v", "v"]])
            .build()
            .unwrap()
    }

    pub fn torus() -> CubicalSet {
        tensor_product(&circle(), &circle())
    }

    /// A circle plus an isolated vertex `w`.
    pub fn two_components() -> CubicalSet {
        CubicalSet::builder("v")
            .vertex("v")
            .vertex("w")
            .cube("e", &[["v", "v"]])
            .build()
            .unwrap()
    }

    /// Four corners, four edges and a commuting square `q`.
    pub fn square() -> CubicalSet {
        square_with_left_edge_from("v00")
    }

    /// Square whose left edge starts at `corner` instead of `v00`.
    pub fn square_with_left_edge_from(corner: &str) -> CubicalSet {
        CubicalSet::builder("v00")
            .vertex("v00")
            .vertex("v10")
            .vertex("v01")
            .vertex("v11")
            .cube("left", &[[corner, "v01"]])
            .cube("right", &[["v10", "v11"]])
            .cube("bottom", &[["v00", "v10"]])
            .cube("top", &[["v01", "v11"]])
            .cube("q", &[["left", "right"], ["bottom", "top"]])
            .build()
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;

    #[test]
    fn circle_has_no_relations_to_check() {
        assert!(circle().validate().is_empty());
    }

    #[test]
    fn commuting_square_validates() {
        assert!(square().validate().is_empty());
        assert!(torus().validate().is_empty());
    }

    #[test]
    fn swapped_corner_is_reported() {
        let k = square_with_left_edge_from("v10");
        let q = k.id("q").unwrap();
        assert_eq!(k.validate(), vec![Violation { cube: q, i: 1, j: 2, eps: 0, eta: 0 }]);
    }

    #[test]
    fn dangling_reference_is_structural() {
        let err = CubicalSet::builder("v").vertex("v").cube("e", &[["v", "w"]]).build().unwrap_err();
        assert_eq!(err, Error::DanglingCube("w".into()));
    }

    #[test]
    fn structural_errors() {
        // wrong face dimension
        let err = CubicalSet::builder("v")
            .vertex("v")
            .cube("e", &[["v", "v"]])
            .cube("q", &[["v", "v"], ["e", "e"]])
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::Structure(_)), "{err}");
        // degeneracy word not decreasing
        let err = CubicalSet::builder("v")
            .vertex("v")
            .cube_raw(
                "q",
                vec![
                    [RawFace::new("v", &[1]), RawFace::new("v", &[1])],
                    [RawFace::new("v", &[1]), RawFace::new("v", &[1])],
                ],
            )
            .build();
        assert!(err.is_ok());
        let err = CubicalSet::builder("v")
            .vertex("v")
            .cube_raw(
                "c",
                vec![
                    [RawFace::new("v", &[1, 2]), RawFace::new("v", &[2, 1])],
                    [RawFace::new("v", &[2, 1]), RawFace::new("v", &[2, 1])],
                    [RawFace::new("v", &[2, 1]), RawFace::new("v", &[2, 1])],
                ],
            )
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::Structure(_)), "{err}");
        // basepoint must be a vertex
        let err = CubicalSet::builder("e").vertex("v").cube("e", &[["v", "v"]]).build().unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
    }

    #[test]
    fn implicit_basepoint_vertex() {
        let k = CubicalSet::builder("v").cube("e", &[["v", "v"]]).build().unwrap();
        assert_eq!(k.counts(), vec![1, 1]);
        assert_eq!(k.name(k.basepoint()), "v");
    }

    #[test]
    fn face_of_degenerate_cells() {
        let k = circle();
        let v = k.id("v").unwrap();
        let e = k.id("e").unwrap();
        // s_1 e is a square with dummy first coordinate
        let s1e = FaceRef { base: e, degens: vec![1] };
        assert_eq!(k.face_of(&s1e, 1, 0), FaceRef::cube(e));
        assert_eq!(k.face_of(&s1e, 2, 1), FaceRef { base: v, degens: vec![1] });
        // s_2 e: dummy second coordinate
        let s2e = FaceRef { base: e, degens: vec![2] };
        assert_eq!(k.face_of(&s2e, 2, 0), FaceRef::cube(e));
        assert_eq!(k.face_of(&s2e, 1, 0), FaceRef { base: v, degens: vec![1] });
        // fully degenerate stays fully degenerate
        let c = FaceRef::collapsed(v, 3);
        assert_eq!(k.face_of(&c, 2, 1), FaceRef::collapsed(v, 2));
    }

    #[test]
    fn subcomplex_closure_and_gap() {
        let k = interval();
        let e = k.id("e").unwrap();
        let l = Subcomplex::closure(&k, [e]);
        assert_eq!(l.len(), 3);
        assert!(l.face_closure_gap(&k).is_none());
        assert!(Subcomplex::new([e]).face_closure_gap(&k).is_some());
    }

    #[test]
    fn components_and_edge_paths() {
        assert_eq!(two_components().components().0, 2);
        assert_eq!(circle().components().0, 1);
        let k = interval();
        let b = k.id("b").unwrap();
        let e = k.id("e").unwrap();
        assert_eq!(k.edge_path_to_basepoint(b), Some(vec![(e, false)]));
        let k = two_components();
        assert_eq!(k.edge_path_to_basepoint(k.id("w").unwrap()), None);
    }
}
