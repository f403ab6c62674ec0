use super::{Cube, CubeId, CubicalSet, FaceRef, Subcomplex};
use crate::error::{Error, Result};

/// Result of collapsing a subcomplex: the quotient and where each old cube went.
pub(crate) struct Collapse {
    pub complex: CubicalSet,
    pub star: CubeId,
    /// `None` for cubes of the collapsed subcomplex.
    pub image: Vec<Option<CubeId>>,
}

/// `K / L`: every cube of `L` becomes a degeneracy of one new vertex, which is
/// the basepoint of the quotient.
pub fn quotient_collapse(k: &CubicalSet, l: &Subcomplex) -> Result<CubicalSet> {
    collapse(k, l, "*").map(|c| c.complex)
}

pub(crate) fn collapse(k: &CubicalSet, l: &Subcomplex, star_name: &str) -> Result<Collapse> {
    if l.is_empty() {
        return Err(Error::pre("quotient_collapse", "subcomplex to collapse is empty"));
    }
    if let Some((c, f)) = l.face_closure_gap(k) {
        return Err(Error::NotFaceClosed(format!(
            "subcomplex (cube {:?} has face {:?} outside it)",
            k.name(c),
            k.name(f)
        )));
    }

    let mut star = star_name.to_string();
    while k.id(&star).is_some() {
        star.push('\'');
    }

    let star_id = CubeId(0);
    let mut image = vec![None; k.len()];
    let mut cubes = vec![Cube { name: star, dim: 0 }];
    for c in k.ids().filter(|&c| !l.contains(c)) {
        image[c.0] = Some(CubeId(cubes.len()));
        cubes.push(k.cube(c).clone());
    }

    let retarget = |f: &FaceRef| match image[f.base.0] {
        Some(b) => FaceRef { base: b, degens: f.degens.clone() },
        None => FaceRef::collapsed(star_id, k.cell_dim(f)),
    };
    let mut faces = vec![Vec::new()];
    for c in k.ids().filter(|&c| !l.contains(c)) {
        faces.push((1..=k.dim(c)).map(|i| [0u8, 1].map(|eps| retarget(k.face(c, i, eps)))).collect());
    }

    Ok(Collapse { complex: CubicalSet::from_parts(cubes, faces, star_id), star: star_id, image })
}
