//! Orientations of the walls of the affine complex.
//!
//! Only Weyl chamber orientations are provided. They are wall-consistent and
//! periodic, so the sign only depends on the parallelism class of the wall
//! and on which side of it the alcove lies.

use crate::affine::{AffineComplex, Alcove, Hyperplane};
use crate::error::{Error, Result};
use crate::gallery::Gallery;
use crate::weyl::{WeylElement, WeylGroup};

pub trait Orientation {
    /// `+1` or `-1` for the alcove `a` with respect to the wall `h`.
    fn sign(&self, cx: &AffineComplex, h: Hyperplane, a: &Alcove) -> i8;
}

/// `phi_w`: an alcove is on the positive side of a wall iff it lies on the
/// same side as the chamber at infinity `C_w`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylChamberOrientation {
    pub direction: WeylElement,
}

impl WeylChamberOrientation {
    pub fn new(direction: WeylElement) -> Self {
        WeylChamberOrientation { direction }
    }

    /// `"w0"`, `"e"` or a word such as `"s1 s2"`.
    pub fn parse(group: &WeylGroup, s: &str) -> Result<Self> {
        let t = s.trim();
        let direction = if t.eq_ignore_ascii_case("w0") {
            group.longest_element()
        } else {
            group.parse(t)?
        };
        Ok(Self::new(direction))
    }
}

impl Orientation for WeylChamberOrientation {
    fn sign(&self, cx: &AffineComplex, h: Hyperplane, a: &Alcove) -> i8 {
        if cx.side(h, a) == cx.group().chamber_side(h.root, self.direction) {
            1
        } else {
            -1
        }
    }
}

/// The crossing at step `i` goes from the positive to the negative side.
pub fn crossing_is_positive<O: Orientation>(
    o: &O,
    cx: &AffineComplex,
    g: &Gallery,
    i: usize,
) -> Result<bool> {
    let step = g.step(i)?;
    if step.is_folded() {
        return Err(Error::StepFolded { index: i });
    }
    let h = g.wall(cx, i)?;
    Ok(o.sign(cx, h, &step.panel.base) == 1)
}

/// The repeated alcove of the fold at step `i` is on the positive side.
pub fn fold_is_positive<O: Orientation>(
    o: &O,
    cx: &AffineComplex,
    g: &Gallery,
    i: usize,
) -> Result<bool> {
    let step = g.step(i)?;
    if !step.is_folded() {
        return Err(Error::StepUnfolded { index: i });
    }
    let h = g.wall(cx, i)?;
    Ok(o.sign(cx, h, &step.alcove) == 1)
}

pub fn gallery_is_positively_folded<O: Orientation>(o: &O, cx: &AffineComplex, g: &Gallery) -> bool {
    g.fold_indices()
        .into_iter()
        .all(|i| fold_is_positive(o, cx, g, i).unwrap_or(false))
}
