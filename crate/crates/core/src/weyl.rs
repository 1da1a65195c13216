//! The finite Weyl group `W0` as a table-driven group.
//!
//! Every element is stored once, with its canonical (lexicographically least)
//! reduced word, its integer action on coweight coordinates and on
//! coroot-lattice coefficients, and the permutation it induces on roots.
//! Elements are referred to by the cheap [`WeylElement`] handle.

use std::collections::{HashMap, VecDeque};

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::root_system::{Point, RootId, RootSystem};

/// Square integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.data[r * self.n + c] * v[c]).sum())
            .collect()
    }

    pub fn apply_rational(&self, v: &[Rational64]) -> Vec<Rational64> {
        (0..self.n)
            .map(|r| {
                (0..self.n)
                    .map(|c| Rational64::from_integer(self.data[r * self.n + c]) * v[c])
                    .sum()
            })
            .collect()
    }
}

/// Handle to an element of a [`WeylGroup`]. Only meaningful together with
/// the group that produced it. The identity is always index 0.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(pub(crate) u16);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
struct ElementData {
    word: Vec<u8>,
    coweight: IntMatrix,
    coroot: IntMatrix,
    root_perm: Vec<RootId>,
    length: usize,
    /// Bit k set iff positive root k is on the negative side of the chamber,
    /// i.e. `chamber_side(alpha_k, v) = -1`.
    neg_sides: u64,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<ElementData>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    reflections: Vec<WeylElement>,
    reflection_root: HashMap<WeylElement, RootId>,
    by_sides: HashMap<u64, WeylElement>,
    longest: WeylElement,
}

impl WeylGroup {
    /// Enumerates `W0` breadth-first; identity first, then by length and
    /// lexicographic canonical word.
    pub fn new(rs: RootSystem) -> Self {
        let n = rs.rank();
        let nroots = 2 * rs.num_positive();
        let cartan = rs.cartan().to_vec();

        let mut gen_coweight = Vec::with_capacity(n);
        let mut gen_coroot = Vec::with_capacity(n);
        let mut gen_perm = Vec::with_capacity(n);
        for i in 0..n {
            let mut p = IntMatrix::identity(n);
            let mut c = IntMatrix::identity(n);
            for (r, row) in cartan.iter().enumerate() {
                // x -> x - x_i * (column i of A)
                p.data[r * n + i] -= row[i];
                // m -> m - (row i of A . m) e_i
                c.data[i * n + r] -= cartan[i][r];
            }
            gen_coweight.push(p);
            gen_coroot.push(c);
            let perm: Vec<RootId> = rs
                .root_ids()
                .map(|id| {
                    let img = rs.reflect_root(i + 1, rs.root(id));
                    rs.id_of(&img).expect("root system closed under reflections")
                })
                .collect();
            gen_perm.push(perm);
        }

        let identity_perm: Vec<RootId> = rs.root_ids().collect();
        let mut elements = vec![ElementData {
            word: Vec::new(),
            coweight: IntMatrix::identity(n),
            coroot: IntMatrix::identity(n),
            root_perm: identity_perm.clone(),
            length: 0,
            neg_sides: 0,
        }];
        let mut index: HashMap<Vec<RootId>, u16> = HashMap::new();
        index.insert(identity_perm, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            for i in 0..n {
                let parent = &elements[cur];
                // (v s_i)(beta) = v(s_i(beta))
                let perm: Vec<RootId> = (0..nroots)
                    .map(|b| parent.root_perm[gen_perm[i][b].index()])
                    .collect();
                if index.contains_key(&perm) {
                    continue;
                }
                let mut word = parent.word.clone();
                word.push((i + 1) as u8);
                let data = ElementData {
                    length: word.len(),
                    word,
                    coweight: parent.coweight.mul(&gen_coweight[i]),
                    coroot: parent.coroot.mul(&gen_coroot[i]),
                    root_perm: perm.clone(),
                    neg_sides: 0,
                };
                index.insert(perm, elements.len() as u16);
                queue.push_back(elements.len());
                elements.push(data);
            }
        }

        let order = elements.len();
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let perm: Vec<RootId> = elements[b]
                    .root_perm
                    .iter()
                    .map(|r| elements[a].root_perm[r.index()])
                    .collect();
                mul[a * order + b] = index[&perm];
            }
        }
        let inv: Vec<u16> = (0..order)
            .map(|a| (0..order).find(|&b| mul[a * order + b] == 0).unwrap() as u16)
            .collect();

        let np = rs.num_positive();
        for a in 0..order {
            let inverse = &elements[inv[a] as usize].root_perm;
            let mut mask = 0u64;
            for (k, &img) in inverse[..np].iter().enumerate() {
                if !rs.is_positive(img) {
                    mask |= 1 << k;
                }
            }
            elements[a].neg_sides = mask;
        }
        let by_sides = (0..order)
            .map(|a| (elements[a].neg_sides, WeylElement(a as u16)))
            .collect();

        // r_beta = u s_i u^{-1} whenever u(alpha_i) = beta.
        let mut reflections = Vec::with_capacity(np);
        for k in 0..np {
            let beta = RootId(k as u16);
            let (u, i) = (0..order)
                .flat_map(|u| (0..n).map(move |i| (u, i)))
                .find(|&(u, i)| elements[u].root_perm[i] == beta)
                .expect("every positive root is conjugate to a simple root");
            let si = index[&gen_perm[i]] as usize;
            let us = mul[u * order + si] as usize;
            reflections.push(WeylElement(mul[us * order + inv[u] as usize]));
        }
        let reflection_root = reflections
            .iter()
            .enumerate()
            .map(|(k, &r)| (r, RootId(k as u16)))
            .collect();
        let longest = WeylElement(
            (0..order)
                .max_by_key(|&a| elements[a].length)
                .unwrap() as u16,
        );

        WeylGroup {
            rs,
            elements,
            mul,
            inv,
            reflections,
            reflection_root,
            by_sides,
            longest,
        }
    }

    pub fn from_type(label: &str) -> Result<Self> {
        Ok(Self::new(RootSystem::build(label)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, identity first, ordered by length then canonical word.
    pub fn elements(&self) -> impl Iterator<Item = WeylElement> {
        (0..self.order()).map(|a| WeylElement(a as u16))
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    /// Simple reflection `s_i`, `i` in `1..=rank`.
    pub fn generator(&self, i: usize) -> WeylElement {
        self.product(&[i as u8])
    }

    pub fn longest_element(&self) -> WeylElement {
        self.longest
    }

    pub fn mul(&self, a: WeylElement, b: WeylElement) -> WeylElement {
        WeylElement(self.mul[a.index() * self.order() + b.index()])
    }

    pub fn inverse(&self, a: WeylElement) -> WeylElement {
        WeylElement(self.inv[a.index()])
    }

    pub fn length(&self, a: WeylElement) -> usize {
        self.elements[a.index()].length
    }

    /// `l(u^{-1} v)`.
    pub fn distance(&self, u: WeylElement, v: WeylElement) -> usize {
        self.length(self.mul(self.inverse(u), v))
    }

    /// Canonical reduced word, generator indices in `1..=rank`.
    pub fn word(&self, a: WeylElement) -> &[u8] {
        &self.elements[a.index()].word
    }

    /// `"e"` for the identity, otherwise `"s1 s2 s1"`.
    pub fn format(&self, a: WeylElement) -> String {
        format_word(self.word(a))
    }

    /// Product of simple reflections; panics on indices outside `1..=rank`.
    pub fn product(&self, word: &[u8]) -> WeylElement {
        let n = self.rank();
        let mut cur = self.identity();
        for &i in word {
            assert!(i >= 1 && (i as usize) <= n, "generator index out of range");
            // the element s_i sits at the position reached from identity by word [i]
            let gi = self.simple_element(i as usize);
            cur = self.mul(cur, gi);
        }
        cur
    }

    fn simple_element(&self, i: usize) -> WeylElement {
        // s_i is the unique length-1 element with canonical word [i].
        WeylElement(i as u16)
    }

    pub fn parse(&self, s: &str) -> Result<WeylElement> {
        let word = parse_word(s, 1, self.rank(), "Weyl group element")?;
        Ok(self.product(&word))
    }

    /// Action matrix on coweight coordinates.
    pub fn coweight_matrix(&self, a: WeylElement) -> &IntMatrix {
        &self.elements[a.index()].coweight
    }

    /// Action matrix on coroot-lattice coefficients.
    pub fn coroot_matrix(&self, a: WeylElement) -> &IntMatrix {
        &self.elements[a.index()].coroot
    }

    pub fn act_root(&self, a: WeylElement, beta: RootId) -> RootId {
        self.elements[a.index()].root_perm[beta.index()]
    }

    pub fn act_point(&self, a: WeylElement, x: &Point) -> Point {
        Point(self.coweight_matrix(a).apply_rational(x.coords()))
    }

    /// Reflection `r_alpha` for a root of either sign.
    pub fn reflection(&self, alpha: RootId) -> WeylElement {
        self.reflections[self.rs.positive_class(alpha).index()]
    }

    /// Positive root of a reflection, `None` for non-reflections.
    pub fn reflection_root(&self, r: WeylElement) -> Option<RootId> {
        self.reflection_root.get(&r).copied()
    }

    /// The positive root `alpha` with `w = r_alpha * u`, if any.
    pub fn reflection_between(&self, u: WeylElement, w: WeylElement) -> Option<RootId> {
        self.reflection_root(self.mul(w, self.inverse(u)))
    }

    /// Sign of `<alpha, v(x0)>`: `+1` iff the chamber `C_v` lies on the
    /// positive side of `H_{alpha,0}`. Works for roots of either sign.
    pub fn chamber_side(&self, alpha: RootId, v: WeylElement) -> i8 {
        let k = self.rs.positive_class(alpha);
        let neg = self.elements[v.index()].neg_sides >> k.index() & 1 == 1;
        let s = if neg { -1 } else { 1 };
        if self.rs.is_positive(alpha) {
            s
        } else {
            -s
        }
    }

    /// Bit mask of positive roots on whose negative side `C_v` lies.
    pub fn negative_sides(&self, v: WeylElement) -> u64 {
        self.elements[v.index()].neg_sides
    }

    /// The element whose chamber has the given side mask.
    pub fn element_with_sides(&self, mask: u64) -> Option<WeylElement> {
        self.by_sides.get(&mask).copied()
    }
}

pub fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses `e`, `w0`-free words such as `s1 s2 s1`, `s1s2s1`, `s1,s2` or
/// bare digit lists `1 2 1` / `121`. Generator indices must lie in
/// `min..=max`.
pub fn parse_word(s: &str, min: usize, max: usize, what: &'static str) -> Result<Vec<u8>> {
    let t = s.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b == b' ' || b == b',' || b == b'.' || b == b'*' {
            i += 1;
            continue;
        }
        if b == b's' {
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == start {
                return Err(Error::parse(what, s, i, "expected generator index after 's'"));
            }
            let k: usize = s[start..i].parse().unwrap();
            if k < min || k > max {
                return Err(Error::parse(
                    what,
                    s,
                    start,
                    format!("generator index {k} outside {min}..={max}"),
                ));
            }
            out.push(k as u8);
        } else if b.is_ascii_digit() {
            let k = (b - b'0') as usize;
            if k < min || k > max {
                return Err(Error::parse(
                    what,
                    s,
                    i,
                    format!("generator index {k} outside {min}..={max}"),
                ));
            }
            out.push(k as u8);
            i += 1;
        } else {
            return Err(Error::parse(what, s, i, format!("unexpected character {:?}", b as char)));
        }
    }
    Ok(out)
}
