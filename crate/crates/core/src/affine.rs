//! The affine Weyl group `W = T ⋊ W0` and its alcoves.
//!
//! An [`AffineElement`] `(lambda, w)` acts by `x -> w(x) + lambda`, where
//! `lambda` is a coroot-lattice vector in simple-coroot coefficients. The
//! alcove of `g` is `g·c_f` and is represented by `g` itself.
//!
//! All wall tests go through the integer `h·<alpha, g(x0)>`, which is never
//! divisible by the Coxeter number `h` because `x0` is regular.

use std::collections::{HashMap, VecDeque};
use std::ops::ControlFlow;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Point, Root, RootId, RootSystem};
use crate::weyl::{parse_word, WeylElement, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    /// Coroot-lattice vector over the simple coroots.
    pub translation: Vec<i64>,
    pub spherical: WeylElement,
}

/// The alcove `g·c_f`, identified with `g`.
pub type Alcove = AffineElement;

impl AffineElement {
    pub fn new(translation: Vec<i64>, spherical: WeylElement) -> Self {
        AffineElement {
            translation,
            spherical,
        }
    }

    /// The spherical direction `zeta(t^lambda w) = w`.
    pub fn spherical_direction(&self) -> WeylElement {
        self.spherical
    }
}

/// The wall `H_{root,level}`; `root` is always positive.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub root: RootId,
    pub level: i64,
}

/// The panel of `base` of type `s_generator`, shared with `base·s_generator`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Panel {
    pub base: Alcove,
    pub generator: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlcoveJson {
    pub translation: Vec<i64>,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneJson {
    pub root: Root,
    pub pretty: String,
    pub level: i64,
}

/// An alcove found by [`AffineComplex::region`] with its canonical word.
#[derive(Clone, Debug)]
pub struct RegionEntry {
    pub alcove: Alcove,
    pub word: Vec<u8>,
}

#[derive(Clone, Debug)]
pub struct AffineComplex {
    group: WeylGroup,
    h: i64,
    heights: Vec<i64>,
    /// Per generator `s_0..s_n`: the root of its wall through `c_f` and the
    /// level of that wall.
    gen_root: Vec<RootId>,
    gen_level: Vec<i64>,
    generators: Vec<AffineElement>,
}

impl AffineComplex {
    pub fn new(group: WeylGroup) -> Self {
        let rs = group.root_system().clone();
        let n = rs.rank();
        let theta = rs.highest_root();
        let mut gen_root = vec![theta];
        let mut gen_level = vec![1];
        for i in 1..=n {
            gen_root.push(rs.simple(i));
            gen_level.push(0);
        }
        let mut generators = vec![AffineElement::new(
            rs.coroot(theta).to_vec(),
            group.reflection(theta),
        )];
        for i in 1..=n {
            generators.push(AffineElement::new(vec![0; n], group.generator(i)));
        }
        let heights = rs.root_ids().map(|id| rs.root(id).height()).collect();
        AffineComplex {
            h: rs.coxeter_number(),
            group,
            heights,
            gen_root,
            gen_level,
            generators,
        }
    }

    pub fn from_type(label: &str) -> Result<Self> {
        Ok(Self::new(WeylGroup::from_type(label)?))
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn root_system(&self) -> &RootSystem {
        self.group.root_system()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement::new(vec![0; self.rank()], self.group.identity())
    }

    /// `s_0, s_1, ..., s_n` with `s_0 = t^{theta^vee} r_theta`.
    pub fn simple_affine_generators(&self) -> &[AffineElement] {
        &self.generators
    }

    pub fn generator(&self, s: u8) -> &AffineElement {
        &self.generators[s as usize]
    }

    pub fn translation(&self, lambda: Vec<i64>) -> AffineElement {
        AffineElement::new(lambda, self.group.identity())
    }

    pub fn from_spherical(&self, w: WeylElement) -> AffineElement {
        AffineElement::new(vec![0; self.rank()], w)
    }

    pub fn mul(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let moved = self.group.coroot_matrix(a.spherical).apply(&b.translation);
        AffineElement::new(
            a.translation.iter().zip(&moved).map(|(x, y)| x + y).collect(),
            self.group.mul(a.spherical, b.spherical),
        )
    }

    pub fn inverse(&self, a: &AffineElement) -> AffineElement {
        let winv = self.group.inverse(a.spherical);
        let moved = self.group.coroot_matrix(winv).apply(&a.translation);
        AffineElement::new(moved.into_iter().map(|x| -x).collect(), winv)
    }

    /// `a · s` for a generator index in `0..=rank`.
    pub fn mul_generator(&self, a: &AffineElement, s: u8) -> AffineElement {
        self.mul(a, &self.generators[s as usize])
    }

    pub fn from_word(&self, word: &[u8]) -> AffineElement {
        word.iter()
            .fold(self.identity(), |acc, &s| self.mul_generator(&acc, s))
    }

    pub fn parse_word(&self, s: &str) -> Result<Vec<u8>> {
        parse_word(s, 0, self.rank(), "affine word")
    }

    /// The affine reflection `r_{alpha,k}: x -> r_alpha(x) + k alpha^vee`.
    pub fn reflection(&self, h: Hyperplane) -> AffineElement {
        let rs = self.root_system();
        AffineElement::new(
            rs.coroot(h.root).iter().map(|c| c * h.level).collect(),
            self.group.reflection(h.root),
        )
    }

    pub fn act_point(&self, a: &AffineElement, x: &Point) -> Point {
        let rs = self.root_system();
        let lin = self.group.coweight_matrix(a.spherical).apply_rational(x.coords());
        let shift = rs.coroot_vector_point(&a.translation);
        Point(lin.iter().zip(shift.coords()).map(|(p, q)| p + q).collect())
    }

    /// The interior point `g(x0)` of the alcove.
    pub fn point(&self, a: &Alcove) -> Point {
        self.act_point(a, &self.root_system().fundamental_interior_point())
    }

    /// Vertices of the alcove in coweight coordinates; vertex 0 is the image
    /// of the origin.
    pub fn vertices(&self, a: &Alcove) -> Vec<Point> {
        let rs = self.root_system();
        let n = rs.rank();
        let theta = rs.root(rs.highest_root()).coeffs().to_vec();
        let mut out = vec![self.act_point(a, &Point(vec![Rational64::from_integer(0); n]))];
        for i in 0..n {
            let mut v = vec![Rational64::from_integer(0); n];
            v[i] = Rational64::new(1, theta[i]);
            out.push(self.act_point(a, &Point(v)));
        }
        out
    }

    fn coords(&self, lambda: &[i64]) -> Vec<i64> {
        let cartan = self.root_system().cartan();
        (0..lambda.len())
            .map(|i| (0..lambda.len()).map(|j| cartan[i][j] * lambda[j]).sum())
            .collect()
    }

    fn scaled_with(&self, alpha: RootId, a: &Alcove, coords: &[i64]) -> i64 {
        let rs = self.root_system();
        let back = self.group.act_root(self.group.inverse(a.spherical), alpha);
        let lin: i64 = rs.root(alpha).coeffs().iter().zip(coords).map(|(x, y)| x * y).sum();
        self.heights[back.index()] + self.h * lin
    }

    /// `h·<alpha, pt(a)>`, an integer never divisible by `h`.
    pub fn scaled_pair(&self, alpha: RootId, a: &Alcove) -> i64 {
        self.scaled_with(alpha, a, &self.coords(&a.translation))
    }

    /// `h·<alpha, pt(a)>` for every positive root, in positive-root order.
    pub fn scaled_pairs(&self, a: &Alcove) -> Vec<i64> {
        let coords = self.coords(&a.translation);
        self.root_system()
            .positive_ids()
            .map(|id| self.scaled_with(id, a, &coords))
            .collect()
    }

    pub fn coxeter_number(&self) -> i64 {
        self.h
    }

    /// `floor(<alpha, pt(a)>)`; `c_f` lies in strip 0 for every positive root.
    pub fn strip_index(&self, alpha: RootId, a: &Alcove) -> i64 {
        Integer::div_floor(&self.scaled_pair(alpha, a), &self.h)
    }

    pub fn strips(&self, a: &Alcove) -> Vec<i64> {
        self.scaled_pairs(a)
            .into_iter()
            .map(|p| Integer::div_floor(&p, &self.h))
            .collect()
    }

    pub fn side(&self, h: Hyperplane, a: &Alcove) -> i8 {
        if self.scaled_pair(h.root, a) > self.h * h.level {
            1
        } else {
            -1
        }
    }

    /// Number of walls separating `c_f` and `g·c_f`.
    pub fn ell(&self, g: &AffineElement) -> usize {
        self.strips(g).iter().map(|s| s.unsigned_abs() as usize).sum()
    }

    /// Number of walls separating two alcoves, `ell(a^{-1} b)`.
    pub fn distance(&self, a: &Alcove, b: &Alcove) -> usize {
        self.strips(a)
            .iter()
            .zip(self.strips(b))
            .map(|(x, y)| (x - y).unsigned_abs() as usize)
            .sum()
    }

    /// The wall containing the panel of `a` of type `s`, and the side of `a`
    /// with respect to it.
    pub fn panel_wall(&self, a: &Alcove, s: u8) -> (Hyperplane, i8) {
        let rs = self.root_system();
        let beta = self.group.act_root(a.spherical, self.gen_root[s as usize]);
        let coords = self.coords(&a.translation);
        let lin: i64 = rs.root(beta).coeffs().iter().zip(&coords).map(|(x, y)| x * y).sum();
        // The wall is <beta, x> = <beta, lambda> + level_s, with a on the
        // positive side for s_1..s_n and on the negative side for s_0.
        let level = lin + self.gen_level[s as usize];
        let gen_side = if s == 0 { -1 } else { 1 };
        if rs.is_positive(beta) {
            (Hyperplane { root: beta, level }, gen_side)
        } else {
            (
                Hyperplane {
                    root: rs.negate(beta),
                    level: -level,
                },
                -gen_side,
            )
        }
    }

    /// The generator `s` with `b = a·s`, if the alcoves are adjacent.
    pub fn adjacency(&self, a: &Alcove, b: &Alcove) -> Option<u8> {
        let d = self.mul(&self.inverse(a), b);
        (0..=self.rank() as u8).find(|&s| self.generators[s as usize] == d)
    }

    pub fn separating_wall(&self, a: &Alcove, b: &Alcove) -> Result<Hyperplane> {
        match self.adjacency(a, b) {
            Some(s) => Ok(self.panel_wall(a, s).0),
            None => Err(Error::NotAdjacent {
                a: self.format_alcove(a),
                b: self.format_alcove(b),
            }),
        }
    }

    /// The chamber `C_v` containing the alcove.
    pub fn chamber_of(&self, a: &Alcove) -> WeylElement {
        let mask = self
            .scaled_pairs(a)
            .iter()
            .enumerate()
            .filter(|(_, &p)| p < 0)
            .fold(0u64, |m, (k, _)| m | 1 << k);
        self.group
            .element_with_sides(mask)
            .expect("every regular point lies in a Weyl chamber")
    }

    /// Membership in the local Weyl chamber `C_{mu,v}`.
    pub fn in_local_chamber(&self, a: &Alcove, mu: &[i64], v: WeylElement) -> bool {
        let rs = self.root_system();
        let pairs = self.scaled_pairs(a);
        rs.positive_ids().all(|alpha| {
            let shift = self.h * rs.pair_coroot_vector(alpha, mu);
            let side = if pairs[alpha.index()] > shift { 1 } else { -1 };
            side == self.group.chamber_side(alpha, v)
        })
    }

    /// Membership in the shrunken chamber of level `k` in `C_v`: for every
    /// simple `i`, `<v alpha_i, pt> > k` if `v alpha_i > 0`, else `> 0`.
    pub fn in_shrunken_chamber(&self, a: &Alcove, v: WeylElement, k: i64) -> bool {
        let rs = self.root_system();
        (1..=rs.rank()).all(|i| {
            let beta = self.group.act_root(v, rs.simple(i));
            let p = self.scaled_pair(beta, a);
            let bound = if rs.is_positive(beta) { k } else { 0 };
            p > self.h * bound
        })
    }

    /// Largest `k` with the alcove in the level-`k` shrunken chamber of
    /// `C_v`; `None` outside `C_v`, `i64::MAX` when unbounded (`v = w0`).
    pub fn shrink_depth(&self, a: &Alcove, v: WeylElement) -> Option<i64> {
        if self.chamber_of(a) != v {
            return None;
        }
        let rs = self.root_system();
        Some(
            (1..=rs.rank())
                .map(|i| self.group.act_root(v, rs.simple(i)))
                .filter(|&beta| rs.is_positive(beta))
                .map(|beta| self.strip_index(beta, a))
                .min()
                .unwrap_or(i64::MAX),
        )
    }

    /// Distance into `C_v` counted against every wall of the chamber:
    /// `min_i floor(<v alpha_i, pt>)`. `None` outside `C_v`.
    pub fn wall_depth(&self, a: &Alcove, v: WeylElement) -> Option<i64> {
        if self.chamber_of(a) != v {
            return None;
        }
        let rs = self.root_system();
        (1..=rs.rank())
            .map(|i| self.strip_index(self.group.act_root(v, rs.simple(i)), a))
            .min()
    }

    /// `v` applied to the level-`k` shrunken fundamental chamber: beyond
    /// `H_{v alpha_i, k}` for every simple root.
    pub fn in_deep_chamber(&self, a: &Alcove, v: WeylElement, k: i64) -> bool {
        self.wall_depth(a, v).is_some_and(|d| d >= k)
    }

    /// All alcoves with `ell <= radius`, breadth first, each with its
    /// lexicographically least reduced word over `s0 < s1 < ... < sn`.
    pub fn region(&self, radius: usize) -> Vec<RegionEntry> {
        let mut out = vec![RegionEntry {
            alcove: self.identity(),
            word: Vec::new(),
        }];
        let mut seen: HashMap<AffineElement, ()> = HashMap::from([(self.identity(), ())]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            if out[cur].word.len() == radius {
                continue;
            }
            for s in 0..=self.rank() as u8 {
                let next = self.mul_generator(&out[cur].alcove, s);
                if seen.contains_key(&next) {
                    continue;
                }
                seen.insert(next.clone(), ());
                let mut word = out[cur].word.clone();
                word.push(s);
                queue.push_back(out.len());
                out.push(RegionEntry { alcove: next, word });
            }
        }
        out
    }

    /// Visits the reduced words of `g` in lexicographic order until `visit`
    /// breaks.
    pub fn for_each_reduced_word<F>(&self, g: &AffineElement, mut visit: F)
    where
        F: FnMut(&[u8]) -> ControlFlow<()>,
    {
        let mut word = Vec::new();
        let _ = self.reduced_word_dfs(&self.identity(), g, &mut word, &mut visit);
    }

    fn reduced_word_dfs<F>(
        &self,
        cur: &AffineElement,
        target: &AffineElement,
        word: &mut Vec<u8>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[u8]) -> ControlFlow<()>,
    {
        let remaining = self.distance(cur, target);
        if remaining == 0 {
            return visit(word);
        }
        for s in 0..=self.rank() as u8 {
            let next = self.mul_generator(cur, s);
            if self.distance(&next, target) + 1 == remaining {
                word.push(s);
                let flow = self.reduced_word_dfs(&next, target, word, visit);
                word.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    /// Up to `cap` reduced words of `g`, in lexicographic order.
    pub fn reduced_words(&self, g: &AffineElement, cap: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        if cap == 0 {
            return out;
        }
        self.for_each_reduced_word(g, |w| {
            out.push(w.to_vec());
            if out.len() >= cap {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        out
    }

    /// Lexicographically least reduced word.
    pub fn canonical_word(&self, g: &AffineElement) -> Vec<u8> {
        self.reduced_words(g, 1).pop().unwrap_or_default()
    }

    /// `"t[1,0] s1 s2"` style text for messages.
    pub fn format_alcove(&self, a: &Alcove) -> String {
        format!(
            "t{:?} {}",
            a.translation,
            self.group.format(a.spherical)
        )
    }

    pub fn alcove_to_json(&self, a: &Alcove) -> AlcoveJson {
        AlcoveJson {
            translation: a.translation.clone(),
            word: self.group.format(a.spherical),
        }
    }

    pub fn alcove_from_json(&self, j: &AlcoveJson) -> Result<Alcove> {
        if j.translation.len() != self.rank() {
            return Err(Error::Invalid(format!(
                "translation {:?} has length {}, expected {}",
                j.translation,
                j.translation.len(),
                self.rank()
            )));
        }
        Ok(AffineElement::new(j.translation.clone(), self.group.parse(&j.word)?))
    }

    pub fn hyperplane_to_json(&self, h: Hyperplane) -> HyperplaneJson {
        let root = self.root_system().root(h.root).clone();
        HyperplaneJson {
            pretty: root.to_string(),
            root,
            level: h.level,
        }
    }

    pub fn hyperplane_from_json(&self, j: &HyperplaneJson) -> Result<Hyperplane> {
        let rs = self.root_system();
        let id = rs
            .id_of(&j.root)
            .filter(|&id| rs.is_positive(id))
            .ok_or_else(|| Error::Invalid(format!("{} is not a positive root", j.root)))?;
        Ok(Hyperplane {
            root: id,
            level: j.level,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::SUPPORTED_TYPES;

    fn complex(label: &str) -> AffineComplex {
        AffineComplex::from_type(label).unwrap()
    }

    fn root(c: &AffineComplex, s: &str) -> RootId {
        c.root_system().parse_root(s).unwrap()
    }

    #[test]
    fn generators_are_involutions() {
        for label in SUPPORTED_TYPES {
            let c = complex(label);
            for g in c.simple_affine_generators() {
                assert_eq!(c.mul(g, g), c.identity());
                assert_eq!(c.ell(g), 1);
            }
            assert_eq!(c.simple_affine_generators().len(), c.rank() + 1);
        }
    }

    #[test]
    fn s0_reflects_in_theta_one() {
        let c = complex("B2");
        let rs = c.root_system();
        let theta = rs.root(rs.highest_root()).clone();
        let x = Point(vec![Rational64::new(2, 7), Rational64::new(-5, 3)]);
        let y = c.act_point(c.generator(0), &x);
        assert_eq!(
            rs.pair(&theta, &y),
            Rational64::from_integer(2) - rs.pair(&theta, &x)
        );
    }

    #[test]
    fn order_of_s0_s1() {
        // In affine A1 the two walls are parallel, so s0 s1 is a translation.
        let c = complex("A1");
        let rs = c.root_system();
        let a1 = rs.root(rs.simple(1)).clone();
        let g = c.mul(c.generator(0), c.generator(1));
        let mut p = c.identity();
        let mut last = rs.pair(&a1, &c.point(&p));
        for _ in 0..12 {
            p = c.mul(&p, &g);
            assert_ne!(p, c.identity());
            let now = rs.pair(&a1, &c.point(&p));
            assert_eq!(now - last, Rational64::from_integer(2));
            last = now;
        }
        // In affine A2 the diagram is a triangle and s0 s1 is a rotation of order 3.
        let c = complex("A2");
        let g = c.mul(c.generator(0), c.generator(1));
        assert_ne!(c.mul(&g, &g), c.identity());
        assert_eq!(c.mul(&c.mul(&g, &g), &g), c.identity());
    }

    #[test]
    fn sides_and_walls() {
        let c = complex("A2");
        let rs = c.root_system();
        let cf = c.identity();
        for a in rs.positive_ids() {
            assert_eq!(c.side(Hyperplane { root: a, level: 0 }, &cf), 1);
            assert_eq!(c.strip_index(a, &cf), 0);
        }
        let theta = rs.highest_root();
        assert_eq!(c.side(Hyperplane { root: theta, level: 1 }, &cf), -1);
        let s1 = c.from_word(&[1]);
        let a1 = rs.simple(1);
        assert_eq!(c.side(Hyperplane { root: a1, level: 0 }, &s1), -1);
        assert_eq!(c.strip_index(a1, &s1), -1);
        let s0 = c.from_word(&[0]);
        assert_eq!(c.strip_index(theta, &s0), 1);
        assert_eq!(
            c.separating_wall(&cf, &s1).unwrap(),
            Hyperplane { root: a1, level: 0 }
        );
        assert_eq!(
            c.separating_wall(&cf, &s0).unwrap(),
            Hyperplane { root: theta, level: 1 }
        );
        let s1s2 = c.from_word(&[1, 2]);
        assert_eq!(
            c.separating_wall(&s1, &s1s2).unwrap(),
            Hyperplane { root: root(&c, "a1+a2"), level: 0 }
        );
        assert!(matches!(
            c.separating_wall(&cf, &s1s2),
            Err(Error::NotAdjacent { .. })
        ));
    }

    #[test]
    fn separating_wall_is_the_only_side_change() {
        for label in ["A2", "B2", "G2", "B3"] {
            let c = complex(label);
            for e in c.region(3) {
                for s in 0..=c.rank() as u8 {
                    let b = c.mul_generator(&e.alcove, s);
                    let (h, side) = c.panel_wall(&e.alcove, s);
                    assert_eq!(c.side(h, &e.alcove), side);
                    assert_eq!(c.side(h, &b), -side);
                    let sa = c.strips(&e.alcove);
                    let sb = c.strips(&b);
                    for k in c.root_system().positive_ids() {
                        let d = (sa[k.index()] - sb[k.index()]).abs();
                        assert_eq!(d, (k == h.root) as i64);
                    }
                    // the reflection in the wall swaps the two alcoves
                    assert_eq!(c.mul(&c.reflection(h), &e.alcove), b);
                }
            }
        }
    }

    #[test]
    fn ell_examples() {
        let c = complex("A2");
        let rs = c.root_system();
        let t = c.translation(rs.coroot(rs.highest_root()).to_vec());
        assert_eq!(c.ell(&t), 4);
        assert_eq!(c.ell(&c.identity()), 0);
        for label in SUPPORTED_TYPES {
            let c = complex(label);
            assert_eq!(
                c.ell(&c.from_spherical(c.group().longest_element())),
                c.root_system().num_positive()
            );
        }
    }

    #[test]
    fn region_words_are_reduced_and_least() {
        for label in ["A1", "A2", "B2", "G2"] {
            let c = complex(label);
            let region = c.region(5);
            for e in &region {
                assert_eq!(c.from_word(&e.word), e.alcove);
                assert_eq!(c.ell(&e.alcove), e.word.len());
                assert_eq!(c.ell(&c.inverse(&e.alcove)), e.word.len());
                assert_eq!(c.canonical_word(&e.alcove), e.word);
            }
        }
        // alcoves at distance k in A1 come in pairs
        assert_eq!(complex("A1").region(4).len(), 9);
    }

    #[test]
    fn reduced_words_of_w0() {
        let c = complex("A2");
        let w0 = c.from_spherical(c.group().longest_element());
        assert_eq!(c.reduced_words(&w0, 10), vec![vec![1, 2, 1], vec![2, 1, 2]]);
        let b = complex("B2");
        let w0 = b.from_spherical(b.group().longest_element());
        assert_eq!(b.reduced_words(&w0, 10).len(), 2);
        assert_eq!(b.reduced_words(&w0, 1).len(), 1);
    }

    #[test]
    fn chambers() {
        let c = complex("A2");
        let rs = c.root_system();
        let g = c.group();
        assert_eq!(c.chamber_of(&c.identity()), g.identity());
        let w0 = c.from_spherical(g.longest_element());
        assert_eq!(c.chamber_of(&w0), g.longest_element());
        // t^{alpha_1^vee} moves x0 to (7/3, -2/3), across H_{alpha_2,0}
        let t = c.translation(vec![1, 0]);
        assert_eq!(c.chamber_of(&t), g.generator(2));
        let t = c.translation(vec![1, 1]);
        assert_eq!(c.chamber_of(&t), g.identity());

        assert!(c.in_local_chamber(&c.identity(), &[0, 0], g.identity()));
        assert!(!c.in_local_chamber(&w0, &[0, 0], g.identity()));
        let s1 = g.generator(1);
        let a = AffineElement::new(vec![1, 1], s1);
        assert!(c.in_local_chamber(&a, &[1, 1], s1));
        assert_eq!(rs.num_positive(), 3);
    }

    #[test]
    fn shrunken_chambers() {
        let c = complex("A2");
        let g = c.group();
        let e = g.identity();
        assert!(!c.in_shrunken_chamber(&c.identity(), e, 1));
        assert!(c.in_shrunken_chamber(&c.identity(), e, 0));
        let t = c.translation(vec![3, 3]);
        // pair(alpha_i, t(x0)) = 3 + 1/3 > 3
        assert!(c.in_shrunken_chamber(&t, e, 3));
        assert!(!c.in_shrunken_chamber(&t, e, 4));
        assert_eq!(c.shrink_depth(&t, e), Some(3));
        for label in ["A2", "B2", "G2"] {
            let c = complex(label);
            for entry in c.region(5) {
                let v = c.chamber_of(&entry.alcove);
                for u in c.group().elements() {
                    assert_eq!(c.in_shrunken_chamber(&entry.alcove, u, 0), u == v);
                }
                for k in 1..4 {
                    if c.in_shrunken_chamber(&entry.alcove, v, k) {
                        assert!(c.in_shrunken_chamber(&entry.alcove, v, k - 1));
                    }
                }
                let d = c.shrink_depth(&entry.alcove, v).unwrap();
                if d < 10 {
                    assert!(c.in_shrunken_chamber(&entry.alcove, v, d));
                    assert!(!c.in_shrunken_chamber(&entry.alcove, v, d + 1));
                }
            }
        }
    }

    #[test]
    fn vertices_of_fundamental_alcove() {
        for label in SUPPORTED_TYPES {
            let c = complex(label);
            let rs = c.root_system();
            let verts = c.vertices(&c.identity());
            let theta = rs.root(rs.highest_root()).clone();
            assert_eq!(verts.len(), rs.rank() + 1);
            for v in &verts[1..] {
                assert_eq!(rs.pair(&theta, v), Rational64::from_integer(1));
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let c = complex("B2");
        for e in c.region(3) {
            let j = c.alcove_to_json(&e.alcove);
            assert_eq!(c.alcove_from_json(&j).unwrap(), e.alcove);
        }
        let h = Hyperplane {
            root: root(&c, "2a1+a2"),
            level: -3,
        };
        let j = c.hyperplane_to_json(h);
        assert_eq!(j.pretty, "2a1+a2");
        assert_eq!(c.hyperplane_from_json(&j).unwrap(), h);
    }
}
