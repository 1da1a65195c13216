//! Root data for the supported irreducible crystallographic types.
//!
//! Conventions, fixed here and nowhere else:
//!
//! * The Cartan matrix is `A[j][k] = <alpha_j, alpha_k^vee>`.
//! * Roots are integer coefficient vectors over the simple roots.
//! * Coroots are integer coefficient vectors over the simple coroots.
//! * Points are exact rational vectors in fundamental-coweight coordinates,
//!   so `coords[i] = <alpha_i, x>` and the pairing of a root with a point is
//!   the dot product of the two coefficient vectors.
//! * The wall `H_{alpha,k}` is `{x : <alpha, x> = k}`. Half-spaces are taken
//!   with respect to the same pairing. For non-simply-laced types this
//!   differs from a pairing against `alpha^vee` only by a positive per-root
//!   factor, which changes no sign and no wall level.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Type labels accepted by [`RootSystem::build`].
pub const SUPPORTED_TYPES: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];

/// Version tag of the JSON root-system document.
pub const TABLE_VERSION: u32 = 1;

fn cartan_table(label: &str) -> Option<Vec<Vec<i64>>> {
    let m = match label {
        "A1" => vec![vec![2]],
        "A2" => vec![vec![2, -1], vec![-1, 2]],
        "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        // alpha_1 short, alpha_2 long: highest root 2a1+a2
        "B2" => vec![vec![2, -1], vec![-2, 2]],
        // alpha_3 short
        "B3" => vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
        // alpha_3 long
        "C3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
        // alpha_1 short: highest root 3a1+2a2
        "G2" => vec![vec![2, -1], vec![-3, 2]],
        _ => return None,
    };
    Some(m)
}

/// A root as integer coefficients over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    /// The simple root `alpha_i`, `i` in `1..=rank`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Parses either a coefficient list (`[1,1]`, `1,1`) or a sum such as
    /// `a1+a2`, `2a1+a2`, `-a1`. Missing coefficients are zero.
    pub fn parse(s: &str, rank: usize) -> Result<Root> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::parse("root", s, 0, "empty input"));
        }
        let looks_like_list = t.starts_with('[')
            || t.chars().all(|c| c.is_ascii_digit() || c == ',' || c == '-' || c == ' ');
        let coeffs = if looks_like_list {
            parse_list(s, rank)?
        } else {
            parse_sum(s, rank)?
        };
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::parse("root", s, 0, "zero vector is not a root"));
        }
        Ok(Root(coeffs))
    }
}

fn parse_list(s: &str, rank: usize) -> Result<Vec<i64>> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let mut out = Vec::new();
    let mut offset = s.find(inner).unwrap_or(0);
    for part in inner.split(',') {
        let v: i64 = part
            .trim()
            .parse()
            .map_err(|_| Error::parse("root", s, offset, format!("bad coefficient {part:?}")))?;
        out.push(v);
        offset += part.len() + 1;
    }
    if out.len() != rank {
        return Err(Error::parse(
            "root",
            s,
            0,
            format!("expected {rank} coefficients, got {}", out.len()),
        ));
    }
    Ok(out)
}

fn parse_sum(s: &str, rank: usize) -> Result<Vec<i64>> {
    let bytes = s.as_bytes();
    let mut out = vec![0i64; rank];
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i] == b' ' {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    let mut first = true;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
            skip_ws(&mut i);
        } else if !first {
            return Err(Error::parse("root", s, i, "expected '+' or '-'"));
        }
        first = false;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mult: i64 = if i > start { s[start..i].parse().unwrap() } else { 1 };
        if s[i..].starts_with("alpha") {
            i += 5;
        } else if s[i..].starts_with('a') {
            i += 1;
        } else {
            return Err(Error::parse("root", s, i, "expected 'a<index>'"));
        }
        if s[i..].starts_with('_') {
            i += 1;
        }
        let istart = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == istart {
            return Err(Error::parse("root", s, i, "missing simple root index"));
        }
        let idx: usize = s[istart..i].parse().unwrap();
        if idx == 0 || idx > rank {
            return Err(Error::parse(
                "root",
                s,
                istart,
                format!("simple root index must be in 1..={rank}"),
            ));
        }
        out[idx - 1] += sign * mult;
        skip_ws(&mut i);
    }
    Ok(out)
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Index of a root inside its [`RootSystem`]. Positive roots come first, in
/// the order of [`RootSystem::positive_roots`]; the negative of positive root
/// `k` has index `k + N`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub(crate) u16);

impl RootId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A point of the ambient space in fundamental-coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point(pub Vec<Rational64>);

impl Point {
    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    coroots: Vec<Vec<i64>>,
    index: HashMap<Root, RootId>,
    highest: RootId,
    coxeter_number: i64,
}

impl RootSystem {
    pub fn build(type_label: &str) -> Result<Self> {
        let label = type_label.trim().to_ascii_uppercase();
        let cartan = cartan_table(&label).ok_or_else(|| Error::UnknownType {
            label: type_label.to_string(),
            supported: SUPPORTED_TYPES.to_vec(),
        })?;
        Ok(Self::from_cartan(label, cartan))
    }

    /// Builds the system for an arbitrary (assumed valid, irreducible,
    /// crystallographic) Cartan matrix.
    pub fn from_cartan(label: String, cartan: Vec<Vec<i64>>) -> Self {
        let n = cartan.len();
        // Orbit of the simple (root, coroot) pairs under simple reflections.
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone(), e.clone());
            queue.push_back((e.clone(), e));
        }
        while let Some((root, coroot)) = queue.pop_front() {
            for i in 0..n {
                let r = reflect_root_coeffs(&cartan, i, &root);
                let c = reflect_coroot_coeffs(&cartan, i, &coroot);
                if !seen.contains_key(&r) {
                    seen.insert(r.clone(), c.clone());
                    queue.push_back((r, c));
                }
            }
        }
        let mut positive: Vec<(Vec<i64>, Vec<i64>)> = seen
            .into_iter()
            .filter(|(r, _)| Root(r.clone()).is_positive())
            .collect();
        positive.sort_by(|(a, _), (b, _)| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let np = positive.len();
        let mut roots = Vec::with_capacity(2 * np);
        let mut coroots = Vec::with_capacity(2 * np);
        for (r, c) in &positive {
            roots.push(Root(r.clone()));
            coroots.push(c.clone());
        }
        for (r, c) in &positive {
            roots.push(Root(r.iter().map(|x| -x).collect()));
            coroots.push(c.iter().map(|x| -x).collect());
        }
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), RootId(i as u16)))
            .collect();
        let highest = RootId((np - 1) as u16);
        let coxeter_number = roots[np - 1].height() + 1;
        RootSystem {
            label,
            rank: n,
            cartan,
            roots,
            coroots,
            index,
            highest,
            coxeter_number,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn positive_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.num_positive()).map(|i| RootId(i as u16))
    }

    pub fn root_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(|i| RootId(i as u16))
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.index()]
    }

    /// Coroot of `id` in simple-coroot coordinates.
    pub fn coroot(&self, id: RootId) -> &[i64] {
        &self.coroots[id.index()]
    }

    pub fn coroot_of(&self, root: &Root) -> Option<&[i64]> {
        self.id_of(root).map(|id| self.coroot(id))
    }

    pub fn id_of(&self, root: &Root) -> Option<RootId> {
        self.index.get(root).copied()
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id.index() < self.num_positive()
    }

    pub fn negate(&self, id: RootId) -> RootId {
        let np = self.num_positive();
        let i = id.index();
        RootId(if i < np { i + np } else { i - np } as u16)
    }

    /// The positive root of `{id, -id}`.
    pub fn positive_class(&self, id: RootId) -> RootId {
        if self.is_positive(id) {
            id
        } else {
            self.negate(id)
        }
    }

    /// Simple root `alpha_i`, `i` in `1..=rank`.
    pub fn simple(&self, i: usize) -> RootId {
        RootId((i - 1) as u16)
    }

    pub fn highest_root(&self) -> RootId {
        self.highest
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn parse_root(&self, s: &str) -> Result<RootId> {
        let root = Root::parse(s, self.rank)?;
        self.id_of(&root)
            .ok_or_else(|| Error::parse("root", s, 0, format!("{root} is not a root of {}", self.label)))
    }

    /// `<beta, alpha_i^vee>` for `i` in `1..=rank`.
    pub fn coroot_pairing(&self, beta: &Root, i: usize) -> i64 {
        beta.0
            .iter()
            .enumerate()
            .map(|(j, b)| b * self.cartan[j][i - 1])
            .sum()
    }

    pub fn pair(&self, alpha: &Root, x: &Point) -> Rational64 {
        alpha
            .0
            .iter()
            .zip(&x.0)
            .map(|(&a, &c)| Rational64::from_integer(a) * c)
            .sum()
    }

    /// `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`, `i` in `1..=rank`.
    pub fn reflect_root(&self, i: usize, beta: &Root) -> Root {
        Root(reflect_root_coeffs(&self.cartan, i - 1, &beta.0))
    }

    /// The regular point with every coweight coordinate `1/h`.
    pub fn fundamental_interior_point(&self) -> Point {
        Point(vec![Rational64::new(1, self.coxeter_number); self.rank])
    }

    /// Converts a coroot-lattice vector (simple-coroot coefficients) to
    /// coweight coordinates.
    pub fn coroot_vector_point(&self, lambda: &[i64]) -> Point {
        Point(
            self.coroot_vector_coords(lambda)
                .into_iter()
                .map(Rational64::from_integer)
                .collect(),
        )
    }

    pub(crate) fn coroot_vector_coords(&self, lambda: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * lambda[j]).sum())
            .collect()
    }

    /// `<alpha, lambda>` for a root id and a coroot-lattice vector.
    pub fn pair_coroot_vector(&self, alpha: RootId, lambda: &[i64]) -> i64 {
        let coords = self.coroot_vector_coords(lambda);
        self.root(alpha).0.iter().zip(&coords).map(|(a, c)| a * c).sum()
    }

    /// Coxeter matrix entry `m_ij` (1-based indices).
    pub fn coxeter_entry(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        match self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => panic!("not a crystallographic Cartan product: {p}"),
        }
    }

    pub fn to_document(&self) -> RootSystemDocument {
        RootSystemDocument {
            version: TABLE_VERSION,
            type_label: self.label.clone(),
            rank: self.rank,
            cartan: self.cartan.clone(),
            positive_roots: self.positive_roots().to_vec(),
            positive_roots_pretty: self.positive_roots().iter().map(|r| r.to_string()).collect(),
            coroots: self.coroots[..self.num_positive()].to_vec(),
            highest_root: self.root(self.highest).clone(),
            coxeter_number: self.coxeter_number,
        }
    }

    /// Rebuilds a system from a serialized table, checking that the stored
    /// positive roots agree with the ones generated from the Cartan matrix.
    pub fn from_document(doc: &RootSystemDocument) -> Result<Self> {
        if doc.version != TABLE_VERSION {
            return Err(Error::Invalid(format!(
                "unsupported root table version {}",
                doc.version
            )));
        }
        let rs = Self::from_cartan(doc.type_label.clone(), doc.cartan.clone());
        if rs.positive_roots() != doc.positive_roots.as_slice() {
            return Err(Error::Invalid(format!(
                "positive roots of {} do not match its Cartan matrix",
                doc.type_label
            )));
        }
        Ok(rs)
    }
}

fn reflect_root_coeffs(cartan: &[Vec<i64>], i: usize, beta: &[i64]) -> Vec<i64> {
    let p: i64 = beta.iter().enumerate().map(|(j, b)| b * cartan[j][i]).sum();
    let mut out = beta.to_vec();
    out[i] -= p;
    out
}

fn reflect_coroot_coeffs(cartan: &[Vec<i64>], i: usize, gamma: &[i64]) -> Vec<i64> {
    let p: i64 = gamma.iter().enumerate().map(|(j, c)| cartan[i][j] * c).sum();
    let mut out = gamma.to_vec();
    out[i] -= p;
    out
}

/// Versioned JSON form of a root-system table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSystemDocument {
    pub version: u32,
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root>,
    pub positive_roots_pretty: Vec<String>,
    pub coroots: Vec<Vec<i64>>,
    pub highest_root: Root,
    pub coxeter_number: i64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(c: &[i64]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn positive_root_counts() {
        for (label, count, h) in [
            ("A1", 1, 2),
            ("A2", 3, 3),
            ("A3", 6, 4),
            ("B2", 4, 4),
            ("B3", 9, 6),
            ("C3", 9, 6),
            ("G2", 6, 6),
        ] {
            let rs = RootSystem::build(label).unwrap();
            assert_eq!(rs.num_positive(), count, "{label}");
            assert_eq!(rs.coxeter_number(), h, "{label}");
            assert_eq!(rs.root(rs.highest_root()).height(), h - 1);
            for root in rs.positive_roots() {
                assert!(root.is_positive());
            }
        }
    }

    #[test]
    fn a2_and_b2_roots() {
        let a2 = RootSystem::build("A2").unwrap();
        assert_eq!(a2.positive_roots(), &[r(&[1, 0]), r(&[0, 1]), r(&[1, 1])]);
        let b2 = RootSystem::build("b2").unwrap();
        assert!(b2.id_of(&r(&[1, 1])).is_some());
        assert_eq!(b2.root(b2.highest_root()), &r(&[2, 1]));
        let a1 = RootSystem::build("A1").unwrap();
        assert_eq!(a1.positive_roots(), &[r(&[1])]);
    }

    #[test]
    fn unknown_type_names_supported() {
        let err = RootSystem::build("E8").unwrap_err().to_string();
        assert!(err.contains("G2") && err.contains("E8"), "{err}");
    }

    #[test]
    fn reflections_on_roots() {
        let a2 = RootSystem::build("A2").unwrap();
        assert_eq!(a2.reflect_root(1, &r(&[0, 1])), r(&[1, 1]));
        assert_eq!(a2.reflect_root(1, &r(&[1, 0])), r(&[-1, 0]));
        let b2 = RootSystem::build("B2").unwrap();
        assert_eq!(b2.reflect_root(1, &r(&[0, 1])), r(&[2, 1]));
        for label in SUPPORTED_TYPES {
            let rs = RootSystem::build(label).unwrap();
            for i in 1..=rs.rank() {
                for (k, beta) in rs.positive_roots().iter().enumerate() {
                    let img = rs.reflect_root(i, beta);
                    assert!(rs.id_of(&img).is_some());
                    assert_eq!(!img.is_positive(), k == i - 1, "{label}");
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = RootSystem::build("A2").unwrap();
        let x0 = a2.fundamental_interior_point();
        assert_eq!(x0.coords(), &[Rational64::new(1, 3), Rational64::new(1, 3)]);
        assert_eq!(a2.pair(&r(&[1, 0]), &x0), Rational64::new(1, 3));
        // alpha_1^vee in coweight coordinates is the first Cartan column (2, -1).
        let mu = a2.coroot_vector_point(&[1, 0]);
        assert_eq!(a2.pair(&r(&[1, 1]), &mu), Rational64::from_integer(1));
        for label in SUPPORTED_TYPES {
            let rs = RootSystem::build(label).unwrap();
            let x0 = rs.fundamental_interior_point();
            let h = rs.coxeter_number();
            let theta = rs.root(rs.highest_root());
            assert_eq!(rs.pair(theta, &x0), Rational64::new(h - 1, h));
        }
        // G2 heights are 1,1,2,3,4,5: alpha_1 and alpha_2 share a value.
        let g2 = RootSystem::build("G2").unwrap();
        let x0 = g2.fundamental_interior_point();
        let mut heights: Vec<i64> = g2.positive_roots().iter().map(Root::height).collect();
        heights.sort();
        assert_eq!(heights, vec![1, 1, 2, 3, 4, 5]);
        let mut vals: Vec<_> = g2.positive_roots().iter().map(|a| g2.pair(a, &x0)).collect();
        vals.sort();
        vals.dedup();
        assert_eq!(vals.len(), 5);
        assert!(vals
            .iter()
            .all(|v| *v > Rational64::from_integer(0) && *v < Rational64::from_integer(1)));
    }

    #[test]
    fn root_parsing() {
        let b2 = RootSystem::build("B2").unwrap();
        assert_eq!(b2.root(b2.parse_root("2a1+a2").unwrap()), &r(&[2, 1]));
        assert_eq!(b2.root(b2.parse_root("[1,1]").unwrap()), &r(&[1, 1]));
        assert_eq!(b2.root(b2.parse_root("-a1").unwrap()), &r(&[-1, 0]));
        assert_eq!(r(&[3, 2]).to_string(), "3a1+2a2");
        assert_eq!(r(&[-1, -1]).to_string(), "-a1-a2");
        match b2.parse_root("a1+b2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(b2.parse_root("a1+2a2").is_err());
    }

    #[test]
    fn coroots_match_definition() {
        // alpha^vee = 2 alpha / (alpha, alpha): check <alpha, alpha^vee> = 2.
        for label in SUPPORTED_TYPES {
            let rs = RootSystem::build(label).unwrap();
            for id in rs.positive_ids() {
                assert_eq!(rs.pair_coroot_vector(id, rs.coroot(id)), 2, "{label}");
            }
        }
    }

    #[test]
    fn document_roundtrip() {
        let rs = RootSystem::build("G2").unwrap();
        let doc = rs.to_document();
        let json = serde_json::to_string(&doc).unwrap();
        let back: RootSystemDocument = serde_json::from_str(&json).unwrap();
        let rs2 = RootSystem::from_document(&back).unwrap();
        assert_eq!(rs2.positive_roots(), rs.positive_roots());
    }
}
