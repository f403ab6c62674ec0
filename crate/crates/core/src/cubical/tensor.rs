use super::{Cube, CubeId, CubicalSet, FaceRef};

/// Id of the pair `(a, b)` inside `tensor_product(A, B)`.
pub(crate) fn pair_id(b: &CubicalSet, a_cube: CubeId, b_cube: CubeId) -> CubeId {
    CubeId(a_cube.0 * b.len() + b_cube.0)
}

/// Tensor product: nondegenerate `(p+q)`-cubes are pairs of a `p`-cube of `a`
/// and a `q`-cube of `b`; faces `d_i` with `i <= p` act on the first factor
/// and the rest on the second. A degenerate factor makes the pair degenerate.
///
/// The pair `(x, y)` is named `x⊗y` and the basepoint is the pair of
/// basepoints.
pub fn tensor_product(a: &CubicalSet, b: &CubicalSet) -> CubicalSet {
    let mut cubes = Vec::with_capacity(a.len() * b.len());
    let mut faces = Vec::with_capacity(a.len() * b.len());
    for x in a.ids() {
        for y in b.ids() {
            let (p, q) = (a.dim(x), b.dim(y));
            cubes.push(Cube { name: format!("{}⊗{}", a.name(x), b.name(y)), dim: p + q });
            let mut row = Vec::with_capacity(p + q);
            for i in 1..=p + q {
                let pair = [0u8, 1].map(|eps| {
                    if i <= p {
                        let f = a.face(x, i, eps);
                        FaceRef { base: pair_id(b, f.base, y), degens: f.degens.clone() }
                    } else {
                        let f = b.face(y, i - p, eps);
                        FaceRef {
                            base: pair_id(b, x, f.base),
                            degens: f.degens.iter().map(|d| d + p).collect(),
                        }
                    }
                });
                row.push(pair);
            }
            faces.push(row);
        }
    }
    let basepoint = pair_id(b, a.basepoint(), b.basepoint());
    CubicalSet::from_parts(cubes, faces, basepoint)
}
