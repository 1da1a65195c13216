//! Alcove-to-alcove galleries, their crossings, folds and folding patterns.
//!
//! Steps are numbered from 1. Step `i` joins `c_{i-1}` and `c_i` through the
//! panel of `c_{i-1}` of type `s_{tau_i}`; the step is folded iff
//! `c_i = c_{i-1}`, in which case the wall of that panel is the fold wall.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::affine::{AffineComplex, Alcove, AlcoveJson, Hyperplane, HyperplaneJson, Panel};
use crate::error::{Error, Result};
use crate::root_system::{Root, RootId, RootSystem};
use crate::weyl::format_word;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub panel: Panel,
    pub alcove: Alcove,
}

impl Step {
    pub fn is_folded(&self) -> bool {
        self.alcove == self.panel.base
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gallery {
    start: Alcove,
    steps: Vec<Step>,
}

/// Parallelism classes of the fold walls, in gallery order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoldingPattern(pub Vec<RootId>);

impl FoldingPattern {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn roots(&self) -> &[RootId] {
        &self.0
    }

    pub fn is_prefix_of(&self, other: &FoldingPattern) -> bool {
        other.0.starts_with(&self.0)
    }

    /// `"(a1+a2, a1)"`.
    pub fn format(&self, rs: &RootSystem) -> String {
        let parts: Vec<String> = self.0.iter().map(|&r| rs.root(r).to_string()).collect();
        format!("({})", parts.join(", "))
    }

    /// Comma-or-semicolon separated roots, optionally in parentheses:
    /// `"(a1+a2, a1)"`, `"[1,1];[1,0]"`.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(FoldingPattern::default());
        }
        let parts: Vec<&str> = if t.contains(';') || t.contains('[') {
            split_top_level(t)
        } else {
            t.split(',').collect()
        };
        let mut out = Vec::new();
        for p in parts {
            let id = rs.parse_root(p.trim())?;
            if !rs.is_positive(id) {
                return Err(Error::parse(
                    "folding pattern",
                    s,
                    0,
                    format!("{} is not a positive root", rs.root(id)),
                ));
            }
            out.push(id);
        }
        Ok(FoldingPattern(out))
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' | ';' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().filter(|p| !p.trim().is_empty()).collect()
}

impl Gallery {
    /// The one-alcove gallery.
    pub fn trivial(start: Alcove) -> Self {
        Gallery {
            start,
            steps: Vec::new(),
        }
    }

    /// The unfolded gallery of the given type from `start`.
    pub fn from_word(cx: &AffineComplex, start: Alcove, word: &[u8]) -> Self {
        Self::with_folds(cx, start, word, &[])
    }

    /// The gallery of type `word` from `start` that is folded exactly at the
    /// given (1-based) steps: `c_i = c_{i-1}` on folded steps, otherwise
    /// `c_i = c_{i-1}·s_{tau_i}`.
    pub fn with_folds(cx: &AffineComplex, start: Alcove, word: &[u8], folds: &[usize]) -> Self {
        let folded: BTreeSet<usize> = folds.iter().copied().collect();
        let mut steps = Vec::with_capacity(word.len());
        let mut cur = start.clone();
        for (k, &s) in word.iter().enumerate() {
            let next = if folded.contains(&(k + 1)) {
                cur.clone()
            } else {
                cx.mul_generator(&cur, s)
            };
            steps.push(Step {
                panel: Panel {
                    base: cur,
                    generator: s,
                },
                alcove: next.clone(),
            });
            cur = next;
        }
        Gallery { start, steps }
    }

    pub fn start(&self) -> &Alcove {
        &self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of alcoves, counting repeats: `len() + 1`.
    pub fn num_alcoves(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn end(&self) -> &Alcove {
        self.steps.last().map_or(&self.start, |s| &s.alcove)
    }

    /// `c_0, c_1, ..., c_len`.
    pub fn alcoves(&self) -> impl Iterator<Item = &Alcove> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.alcove))
    }

    pub fn type_word(&self) -> Vec<u8> {
        self.steps.iter().map(|s| s.panel.generator).collect()
    }

    pub fn fold_indices(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.steps[i - 1].is_folded()).collect()
    }

    pub fn is_unfolded(&self) -> bool {
        self.steps.iter().all(|s| !s.is_folded())
    }

    fn check_index(&self, i: usize) -> Result<&Step> {
        if i == 0 || i > self.len() {
            return Err(Error::StepOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(&self.steps[i - 1])
    }

    pub fn step(&self, i: usize) -> Result<&Step> {
        self.check_index(i)
    }

    /// The wall supporting the panel of step `i`.
    pub fn wall(&self, cx: &AffineComplex, i: usize) -> Result<Hyperplane> {
        let step = self.check_index(i)?;
        Ok(cx.panel_wall(&step.panel.base, step.panel.generator).0)
    }

    /// Unfolded and as short as the wall count between its ends.
    pub fn is_minimal(&self, cx: &AffineComplex) -> bool {
        self.is_unfolded() && self.len() == cx.distance(&self.start, self.end())
    }

    /// `(step, wall)` for every unfolded step.
    pub fn crossings(&self, cx: &AffineComplex) -> Vec<(usize, Hyperplane)> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_folded())
            .map(|(k, s)| (k + 1, cx.panel_wall(&s.panel.base, s.panel.generator).0))
            .collect()
    }

    /// Reflects everything from step `i` on across the wall of `p_i`.
    pub fn fold_at(&self, cx: &AffineComplex, i: usize) -> Result<Gallery> {
        let wall = self.wall(cx, i)?;
        let r = cx.reflection(wall);
        let mut steps = self.steps.clone();
        steps[i - 1].alcove = cx.mul(&r, &steps[i - 1].alcove);
        for step in &mut steps[i..] {
            step.panel.base = cx.mul(&r, &step.panel.base);
            step.alcove = cx.mul(&r, &step.alcove);
        }
        Ok(Gallery {
            start: self.start.clone(),
            steps,
        })
    }

    /// Applies [`Gallery::fold_at`] in increasing index order.
    pub fn fold_set(&self, cx: &AffineComplex, idxs: &BTreeSet<usize>) -> Result<Gallery> {
        for &i in idxs {
            self.check_index(i)?;
        }
        let mut g = self.clone();
        for &i in idxs {
            g = g.fold_at(cx, i)?;
        }
        Ok(g)
    }

    pub fn pattern_of(&self, cx: &AffineComplex) -> FoldingPattern {
        FoldingPattern(
            self.steps
                .iter()
                .filter(|s| s.is_folded())
                .map(|s| cx.panel_wall(&s.panel.base, s.panel.generator).0.root)
                .collect(),
        )
    }

    /// `self` followed by `other` moved so that it starts at `self.end()`.
    /// For an unfolded `self` from `c_f` the transport is by the element of
    /// the type word, as in the usual definition.
    pub fn concatenate(&self, cx: &AffineComplex, other: &Gallery) -> Gallery {
        let t = cx.mul(self.end(), &cx.inverse(&other.start));
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().map(|s| Step {
            panel: Panel {
                base: cx.mul(&t, &s.panel.base),
                generator: s.panel.generator,
            },
            alcove: cx.mul(&t, &s.alcove),
        }));
        Gallery {
            start: self.start.clone(),
            steps,
        }
    }

    /// Checks the structural invariants: every panel belongs to the
    /// previous alcove, and each alcove is either the previous one or its
    /// neighbour across that panel.
    pub fn validate(&self, cx: &AffineComplex) -> Result<()> {
        let mut prev = &self.start;
        for (k, s) in self.steps.iter().enumerate() {
            if &s.panel.base != prev || s.panel.generator as usize > cx.rank() {
                return Err(Error::Invalid(format!("step {} has a foreign panel", k + 1)));
            }
            if !s.is_folded() && s.alcove != cx.mul_generator(prev, s.panel.generator) {
                return Err(Error::NotAdjacent {
                    a: cx.format_alcove(prev),
                    b: cx.format_alcove(&s.alcove),
                });
            }
            prev = &s.alcove;
        }
        Ok(())
    }

    pub fn to_json(&self, cx: &AffineComplex) -> GalleryJson {
        let rs = cx.root_system();
        GalleryJson {
            root_system: rs.label().to_string(),
            start: cx.alcove_to_json(&self.start),
            word: format_word(&self.type_word()),
            folds: self.fold_indices(),
            steps: self
                .steps
                .iter()
                .enumerate()
                .map(|(k, s)| StepJson {
                    index: k + 1,
                    generator: s.panel.generator,
                    folded: s.is_folded(),
                    wall: cx.hyperplane_to_json(cx.panel_wall(&s.panel.base, s.panel.generator).0),
                    alcove: cx.alcove_to_json(&s.alcove),
                })
                .collect(),
            end: cx.alcove_to_json(self.end()),
            pattern: self
                .pattern_of(cx)
                .0
                .iter()
                .map(|&r| rs.root(r).clone())
                .collect(),
            pattern_pretty: self.pattern_of(cx).format(rs),
        }
    }

    /// Rebuilds the gallery from `start`, `word` and `folds`, and rejects
    /// documents whose recorded steps disagree.
    pub fn from_json(cx: &AffineComplex, j: &GalleryJson) -> Result<Gallery> {
        let start = cx.alcove_from_json(&j.start)?;
        let word = cx.parse_word(&j.word)?;
        for &f in &j.folds {
            if f == 0 || f > word.len() {
                return Err(Error::StepOutOfRange {
                    index: f,
                    len: word.len(),
                });
            }
        }
        let g = Gallery::with_folds(cx, start, &word, &j.folds);
        if !j.steps.is_empty() {
            let recorded: Vec<Alcove> = j
                .steps
                .iter()
                .map(|s| cx.alcove_from_json(&s.alcove))
                .collect::<Result<_>>()?;
            let actual: Vec<Alcove> = g.steps.iter().map(|s| s.alcove.clone()).collect();
            if recorded != actual {
                return Err(Error::Invalid(
                    "recorded step alcoves do not match start, word and folds".into(),
                ));
            }
        }
        Ok(g)
    }

    /// Multi-line text summary.
    pub fn describe(&self, cx: &AffineComplex) -> String {
        let rs = cx.root_system();
        let mut out = String::new();
        let _ = writeln!(out, "start {}", cx.format_alcove(&self.start));
        for (k, s) in self.steps.iter().enumerate() {
            let h = cx.panel_wall(&s.panel.base, s.panel.generator).0;
            let _ = writeln!(
                out,
                "{:>3} s{} {} H({}, {}) -> {}",
                k + 1,
                s.panel.generator,
                if s.is_folded() { "fold " } else { "cross" },
                rs.root(h.root),
                h.level,
                cx.format_alcove(&s.alcove)
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub index: usize,
    pub generator: u8,
    pub folded: bool,
    pub wall: HyperplaneJson,
    pub alcove: AlcoveJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GalleryJson {
    #[serde(rename = "type")]
    pub root_system: String,
    pub start: AlcoveJson,
    pub word: String,
    pub folds: Vec<usize>,
    #[serde(default)]
    pub steps: Vec<StepJson>,
    pub end: AlcoveJson,
    pub pattern: Vec<Root>,
    pub pattern_pretty: String,
}
