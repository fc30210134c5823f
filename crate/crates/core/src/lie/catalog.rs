use crate::error::{Error, Result};
use crate::rational::int;

use super::{product_with_abelian, BracketEntry, LieAlgebra};

pub const CATALOG_NAMES: &[&str] = &["abelian<d>", "abdo4", "so3", "so3xR3"];

/// Named algebras:
///
/// * `abelian<d>`: zero bracket in dimension `d >= 1`;
/// * `abdo4`: `[e1,e2]=e2, [e1,e3]=e2+e3, [e1,e4]=e3+e4`;
/// * `so3`: `[e1,e2]=-e3, [e1,e3]=e2, [e2,e3]=-e1`, a frame in which the
///   identity pairing is ad-invariant;
/// * `so3xR3`: `so3` times a 3-dimensional abelian factor.
pub fn catalog(name: &str) -> Result<LieAlgebra> {
    let entry = |a, b, c, v| BracketEntry::new(a, b, c, int(v));
    match name {
        "abdo4" => LieAlgebra::build(
            4,
            &[
                entry(1, 2, 2, 1),
                entry(1, 3, 2, 1),
                entry(1, 3, 3, 1),
                entry(1, 4, 3, 1),
                entry(1, 4, 4, 1),
            ],
        ),
        "so3" => LieAlgebra::build(
            3,
            &[entry(1, 2, 3, -1), entry(1, 3, 2, 1), entry(2, 3, 1, -1)],
        ),
        "so3xR3" => product_with_abelian(&catalog("so3")?),
        _ => match name.strip_prefix("abelian") {
            Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
                match d.parse::<usize>() {
                    Ok(dim) if dim >= 1 => Ok(LieAlgebra::abelian(dim)),
                    _ => Err(Error::UnknownName(name.to_string())),
                }
            }
            _ => Err(Error::UnknownName(name.to_string())),
        },
    }
}
