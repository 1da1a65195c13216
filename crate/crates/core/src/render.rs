//! SVG pictures of rank-2 affine complexes.
//!
//! Geometry stays in exact coweight coordinates until [`RenderScene::to_svg`],
//! which maps points to the plane through a fixed embedding of the simple
//! roots.

use std::fmt::Write as _;

use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::affine::{AffineComplex, Alcove, Hyperplane};
use crate::error::{Error, Result};
use crate::gallery::Gallery;
use crate::root_system::{Point, RootId};
use crate::weyl::WeylElement;

/// Simple roots in the plane. `alpha_1` points along the x-axis and
/// `alpha_2` makes the standard angle with it (120° for A2, 135° for B2,
/// 150° for G2); in B2 and G2 `alpha_1` is the short root.
#[derive(Copy, Clone, Debug)]
pub struct Embedding {
    pub roots: [[f64; 2]; 2],
}

impl Embedding {
    pub fn for_type(label: &str) -> Option<Self> {
        let (angle, ratio): (f64, f64) = match label {
            "A2" => (120.0, 1.0),
            "B2" => (135.0, 2f64.sqrt()),
            "G2" => (150.0, 3f64.sqrt()),
            _ => return None,
        };
        let t = angle.to_radians();
        Some(Embedding {
            roots: [[1.0, 0.0], [ratio * t.cos(), ratio * t.sin()]],
        })
    }

    /// Solves `<alpha_i, p> = x_i` for the coweight coordinates `x`.
    pub fn place(&self, x: &[Rational64]) -> [f64; 2] {
        let [[a, b], [c, d]] = self.roots;
        let x0 = x[0].to_f64().unwrap_or(0.0);
        let x1 = x[1].to_f64().unwrap_or(0.0);
        let det = a * d - b * c;
        [(x0 * d - b * x1) / det, (a * x1 - c * x0) / det]
    }

    fn root_vector(&self, coeffs: &[i64]) -> [f64; 2] {
        let [r1, r2] = self.roots;
        let (c1, c2) = (coeffs[0] as f64, coeffs[1] as f64);
        [c1 * r1[0] + c2 * r2[0], c1 * r1[1] + c2 * r2[1]]
    }
}

#[derive(Clone, Debug)]
pub struct AlcoveShape {
    pub alcove: Alcove,
    pub chamber: WeylElement,
    pub vertices: Vec<Point>,
    pub shrunken: bool,
}

/// Sign decoration of one wall class: the side of `H_{alpha,0}` holding
/// `+1` under the orientation.
#[derive(Clone, Debug)]
pub struct WallMark {
    pub root: RootId,
    pub coeffs: Vec<i64>,
    pub positive_side: i8,
}

#[derive(Clone, Debug)]
pub struct GalleryPath {
    pub points: Vec<Point>,
    pub folds: Vec<Point>,
}

#[derive(Clone, Debug)]
pub struct RenderScene {
    pub label: String,
    pub radius: i64,
    pub alcoves: Vec<AlcoveShape>,
    pub walls: Vec<WallMark>,
    pub galleries: Vec<GalleryPath>,
    embedding: Embedding,
    root_coeffs: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Default)]
pub struct RenderOptions {
    /// Translations `t^lambda` with every `|lambda_i| <= radius`.
    pub radius: i64,
    pub orientation: Option<WeylElement>,
    /// Chamber and level of a shrunken chamber to shade.
    pub shrunken: Option<(WeylElement, i64)>,
    pub galleries: Vec<Gallery>,
}

fn midpoint(points: &[Point]) -> Point {
    let n = points.len() as i64;
    let dim = points[0].0.len();
    Point(
        (0..dim)
            .map(|i| points.iter().map(|p| p.0[i]).sum::<Rational64>() / n)
            .collect(),
    )
}

/// Panel of type `s` of `a`: the face opposite vertex `s`.
fn panel_midpoint(cx: &AffineComplex, a: &Alcove, s: u8) -> Point {
    let verts: Vec<Point> = cx
        .vertices(a)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| *i != s as usize)
        .map(|(_, p)| p)
        .collect();
    midpoint(&verts)
}

pub fn scene(cx: &AffineComplex, opts: &RenderOptions) -> Result<RenderScene> {
    let rs = cx.root_system();
    let embedding = Embedding::for_type(rs.label()).ok_or_else(|| Error::UnsupportedRender {
        label: rs.label().to_string(),
        rank: rs.rank(),
    })?;
    let group = cx.group();
    let r = opts.radius;
    let mut alcoves = Vec::new();
    for l1 in -r..=r {
        for l2 in -r..=r {
            let t = cx.translation(vec![l1, l2]);
            for w in group.elements() {
                let a = cx.mul(&t, &cx.from_spherical(w));
                let chamber = cx.chamber_of(&a);
                let shrunken = opts
                    .shrunken
                    .is_some_and(|(v, k)| cx.in_shrunken_chamber(&a, v, k));
                alcoves.push(AlcoveShape {
                    vertices: cx.vertices(&a),
                    alcove: a,
                    chamber,
                    shrunken,
                });
            }
        }
    }
    let walls = match opts.orientation {
        Some(w) => rs
            .positive_ids()
            .map(|root| WallMark {
                root,
                coeffs: rs.root(root).coeffs().to_vec(),
                positive_side: group.chamber_side(root, w),
            })
            .collect(),
        None => Vec::new(),
    };
    let galleries = opts
        .galleries
        .iter()
        .map(|g| {
            let mut points = vec![cx.point(g.start())];
            let mut folds = Vec::new();
            for step in g.steps() {
                if step.is_folded() {
                    let m = panel_midpoint(cx, &step.panel.base, step.panel.generator);
                    points.push(m.clone());
                    folds.push(m);
                }
                points.push(cx.point(&step.alcove));
            }
            GalleryPath { points, folds }
        })
        .collect();
    Ok(RenderScene {
        label: rs.label().to_string(),
        radius: r,
        alcoves,
        walls,
        galleries,
        embedding,
        root_coeffs: rs.positive_ids().map(|id| rs.root(id).coeffs().to_vec()).collect(),
    })
}

const CHAMBER_FILLS: [&str; 12] = [
    "#f4f1de", "#e0ecf4", "#fde0dd", "#e5f5e0", "#fee6ce", "#efedf5", "#deebf7", "#fcfbfd",
    "#fff7bc", "#e7e1ef", "#f7fcb9", "#ece2f0",
];
const GALLERY_STROKES: [&str; 6] = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02"];

impl RenderScene {
    /// Whether `a` and `b` share a panel in the drawing; agrees with
    /// [`AffineComplex::separating_wall`].
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        let va = &self.alcoves[a].vertices;
        let shared = self.alcoves[b].vertices.iter().filter(|p| va.contains(p)).count();
        shared == va.len() - 1
    }

    pub fn separating_wall(&self, cx: &AffineComplex, a: usize, b: usize) -> Option<Hyperplane> {
        cx.separating_wall(&self.alcoves[a].alcove, &self.alcoves[b].alcove).ok()
    }

    pub fn to_svg(&self) -> String {
        let e = &self.embedding;
        let placed: Vec<Vec<[f64; 2]>> = self
            .alcoves
            .iter()
            .map(|a| a.vertices.iter().map(|p| e.place(&p.0)).collect())
            .collect();
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for p in placed.iter().flatten() {
            x0 = x0.min(p[0]);
            x1 = x1.max(p[0]);
            y0 = y0.min(p[1]);
            y1 = y1.max(p[1]);
        }
        if placed.is_empty() {
            (x0, y0, x1, y1) = (-1.0, -1.0, 1.0, 1.0);
        }
        let pad = 0.6;
        let scale = 40.0;
        let tx = |p: [f64; 2]| ((p[0] - x0 + pad) * scale, (y1 - p[1] + pad) * scale);
        let width = (x1 - x0 + 2.0 * pad) * scale;
        let height = (y1 - y0 + 2.0 * pad) * scale;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
        );
        let _ = writeln!(s, "<title>affine {} alcoves, window {}</title>", self.label, self.radius);
        let _ = writeln!(s, r##"<g id="alcoves" stroke="#888" stroke-width="0.6">"##);
        for (shape, pts) in self.alcoves.iter().zip(&placed) {
            let fill = CHAMBER_FILLS[shape.chamber.index() % CHAMBER_FILLS.len()];
            let _ = writeln!(s, r#"<polygon points="{}" fill="{fill}"/>"#, polyline(pts, &tx));
        }
        let _ = writeln!(s, "</g>");

        let shaded: Vec<&Vec<[f64; 2]>> = self
            .alcoves
            .iter()
            .zip(&placed)
            .filter(|(a, _)| a.shrunken)
            .map(|(_, p)| p)
            .collect();
        if !shaded.is_empty() {
            let _ = writeln!(s, r##"<g id="shrunken" fill="#2ca25f" fill-opacity="0.45" stroke="none">"##);
            for pts in shaded {
                let _ = writeln!(s, r#"<polygon points="{}"/>"#, polyline(pts, &tx));
            }
            let _ = writeln!(s, "</g>");
        }

        let origin = tx([0.0, 0.0]);
        // distance from the origin to the box edge along the unit vector d
        let reach = |d: [f64; 2]| {
            let bound = |v: f64, lo: f64, hi: f64| {
                if v > 1e-12 {
                    hi / v
                } else if v < -1e-12 {
                    lo / v
                } else {
                    f64::MAX
                }
            };
            bound(d[0], x0, x1).min(bound(d[1], y0, y1))
        };
        let unit = |coeffs: &[i64]| {
            let n = e.root_vector(coeffs);
            let len = (n[0] * n[0] + n[1] * n[1]).sqrt();
            ([n[0] / len, n[1] / len], [-n[1] / len, n[0] / len])
        };
        let _ = writeln!(s, r##"<g id="walls" stroke="#333" stroke-width="1.4">"##);
        for coeffs in &self.root_coeffs {
            let (_, d) = unit(coeffs);
            let (ra, rb) = (reach(d), reach([-d[0], -d[1]]));
            let a = tx([d[0] * ra, d[1] * ra]);
            let b = tx([-d[0] * rb, -d[1] * rb]);
            let _ = writeln!(
                s,
                r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
                a.0, a.1, b.0, b.1
            );
        }
        let _ = writeln!(s, "</g>");
        if !self.walls.is_empty() {
            let _ = writeln!(s, r#"<g id="orientation" font-size="16" font-family="sans-serif" text-anchor="middle">"#);
            for mark in &self.walls {
                let (n, d) = unit(&mark.coeffs);
                for end in [d, [-d[0], -d[1]]] {
                    let at = reach(end) - 0.6;
                    for (sign, text) in [(mark.positive_side as f64, "+"), (-(mark.positive_side as f64), "\u{2212}")] {
                        let p = tx([end[0] * at + sign * n[0] * 0.3, end[1] * at + sign * n[1] * 0.3]);
                        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}">{text}</text>"#, p.0, p.1 + 5.0);
                    }
                }
            }
            let _ = writeln!(s, "</g>");
        }
        let _ = writeln!(
            s,
            r##"<circle cx="{:.3}" cy="{:.3}" r="3" fill="#000"/>"##,
            origin.0, origin.1
        );

        for (k, g) in self.galleries.iter().enumerate() {
            let color = GALLERY_STROKES[k % GALLERY_STROKES.len()];
            let pts: Vec<[f64; 2]> = g.points.iter().map(|p| e.place(&p.0)).collect();
            let _ = writeln!(s, r#"<g class="gallery" id="gallery-{}">"#, k + 1);
            let _ = writeln!(
                s,
                r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2.5"/>"#,
                polyline(&pts, &tx)
            );
            for f in &g.folds {
                let p = tx(e.place(&f.0));
                let _ = writeln!(
                    s,
                    r##"<circle class="fold" cx="{:.3}" cy="{:.3}" r="4.5" fill="{color}" stroke="#000"/>"##,
                    p.0, p.1
                );
            }
            let _ = writeln!(s, "</g>");
        }
        s.push_str("</svg>\n");
        s
    }
}

fn polyline(pts: &[[f64; 2]], tx: &impl Fn([f64; 2]) -> (f64, f64)) -> String {
    pts.iter()
        .map(|&p| {
            let (x, y) = tx(p);
            format!("{x:.3},{y:.3}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}
