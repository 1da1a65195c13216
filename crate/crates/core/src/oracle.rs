//! Brute-force verification engine.
//!
//! Everything here enumerates: fold subsets of minimal galleries, words over
//! the affine generators, alcoves in an `ell`-ball. The fold enumerators use
//! the fact that a folded gallery of type `s_1 ... s_k` is determined by its
//! fold set: `c_i = c_{i-1}` on folded steps and `c_{i-1}·s_i` otherwise.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{AffineComplex, Alcove};
use crate::error::{Error, Result};
use crate::gallery::{FoldingPattern, Gallery};
use crate::moment_graph::MomentGraph;
use crate::orientation::{crossing_is_positive, Orientation, WeylChamberOrientation};
use crate::root_system::RootId;
use crate::weyl::{format_word, WeylElement};

/// Longest gallery whose fold subsets are enumerated exhaustively.
pub const DEFAULT_FOLD_CAP: usize = 20;

/// Alcoves with at most this many reduced words are checked on every
/// reduced word; others only on the canonical one.
pub const REDUCED_WORD_CAP: usize = 200;

/// At most this many counterexamples are stored per result.
const STORED_COUNTEREXAMPLES: usize = 100;

#[derive(Clone, Debug)]
pub struct FoldResult {
    pub folds: Vec<usize>,
    pub gallery: Gallery,
    pub pattern: FoldingPattern,
    pub positive: bool,
    pub end: Alcove,
    pub direction: WeylElement,
}

#[derive(Clone, Debug)]
pub struct FoldingReport {
    pub base: Gallery,
    /// One entry per fold subset, in increasing bitmask order.
    pub results: Vec<FoldResult>,
    pub positive_patterns: BTreeSet<FoldingPattern>,
    pub end_alcoves: BTreeSet<Alcove>,
}

fn check_cap(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        return Err(Error::FoldCap { len, cap });
    }
    Ok(())
}

/// Folds `g` at every subset of its steps.
pub fn enumerate_foldings<O: Orientation>(
    cx: &AffineComplex,
    g: &Gallery,
    o: &O,
) -> Result<FoldingReport> {
    enumerate_foldings_capped(cx, g, o, DEFAULT_FOLD_CAP)
}

pub fn enumerate_foldings_capped<O: Orientation>(
    cx: &AffineComplex,
    g: &Gallery,
    o: &O,
    cap: usize,
) -> Result<FoldingReport> {
    check_cap(g.len(), cap)?;
    if !g.is_unfolded() {
        return Err(Error::Invalid("fold enumeration needs an unfolded gallery".into()));
    }
    let n = g.len();
    let mut results = Vec::with_capacity(1 << n);
    let mut positive_patterns = BTreeSet::new();
    let mut end_alcoves = BTreeSet::new();
    let word = g.type_word();
    for mask in 0u64..(1u64 << n) {
        let folds: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let folded = Gallery::with_folds(cx, g.start().clone(), &word, &folds);
        let positive = crate::orientation::gallery_is_positively_folded(o, cx, &folded);
        let pattern = folded.pattern_of(cx);
        let end = folded.end().clone();
        if positive {
            positive_patterns.insert(pattern.clone());
        }
        end_alcoves.insert(end.clone());
        results.push(FoldResult {
            folds,
            direction: end.spherical,
            gallery: folded,
            pattern,
            positive,
            end,
        });
    }
    Ok(FoldingReport {
        base: g.clone(),
        results,
        positive_patterns,
        end_alcoves,
    })
}

/// One leaf of [`for_each_folding`].
pub struct FoldVisit<'a> {
    pub folds: &'a [usize],
    pub pattern: &'a [RootId],
    pub end: &'a Alcove,
    pub positive: bool,
}

/// Depth-first enumeration of the foldings of the gallery of type `word`
/// from `start`. With `positive_only`, branches through a negative fold are
/// cut.
pub fn for_each_folding<O, F>(
    cx: &AffineComplex,
    start: &Alcove,
    word: &[u8],
    o: &O,
    positive_only: bool,
    mut visit: F,
) where
    O: Orientation,
    F: FnMut(&FoldVisit),
{
    let mut folds = Vec::new();
    let mut pattern = Vec::new();
    fold_dfs(cx, start.clone(), word, 0, o, positive_only, true, &mut folds, &mut pattern, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn fold_dfs<O, F>(
    cx: &AffineComplex,
    cur: Alcove,
    word: &[u8],
    k: usize,
    o: &O,
    positive_only: bool,
    positive: bool,
    folds: &mut Vec<usize>,
    pattern: &mut Vec<RootId>,
    visit: &mut F,
) where
    O: Orientation,
    F: FnMut(&FoldVisit),
{
    if k == word.len() {
        visit(&FoldVisit {
            folds,
            pattern,
            end: &cur,
            positive,
        });
        return;
    }
    let s = word[k];
    let next = cx.mul_generator(&cur, s);
    fold_dfs(cx, next, word, k + 1, o, positive_only, positive, folds, pattern, visit);
    let (h, _) = cx.panel_wall(&cur, s);
    let fold_positive = o.sign(cx, h, &cur) == 1;
    if positive_only && !fold_positive {
        return;
    }
    folds.push(k + 1);
    pattern.push(h.root);
    fold_dfs(cx, cur, word, k + 1, o, positive_only, positive && fold_positive, folds, pattern, visit);
    folds.pop();
    pattern.pop();
}

/// A fold set realising `pattern` as a positively folded gallery of type
/// `word` from `start`, if one exists.
pub fn realize_pattern<O: Orientation>(
    cx: &AffineComplex,
    start: &Alcove,
    word: &[u8],
    o: &O,
    pattern: &[RootId],
) -> Option<Vec<usize>> {
    let mut folds = Vec::new();
    if realize_dfs(cx, start.clone(), word, 0, o, pattern, &mut folds) {
        Some(folds)
    } else {
        None
    }
}

fn realize_dfs<O: Orientation>(
    cx: &AffineComplex,
    cur: Alcove,
    word: &[u8],
    k: usize,
    o: &O,
    pattern: &[RootId],
    folds: &mut Vec<usize>,
) -> bool {
    if pattern.is_empty() {
        return true;
    }
    if word.len() - k < pattern.len() {
        return false;
    }
    let s = word[k];
    let (h, _) = cx.panel_wall(&cur, s);
    if h.root == pattern[0] && o.sign(cx, h, &cur) == 1 {
        folds.push(k + 1);
        if realize_dfs(cx, cur.clone(), word, k + 1, o, &pattern[1..], folds) {
            return true;
        }
        folds.pop();
    }
    let next = cx.mul_generator(&cur, s);
    realize_dfs(cx, next, word, k + 1, o, pattern, folds)
}

#[derive(Clone, Debug, Serialize)]
pub struct Scope {
    #[serde(rename = "type")]
    pub root_system: String,
    pub orientation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word_length_cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationResult {
    pub theorem: String,
    pub scope: Scope,
    pub success: bool,
    pub counterexample_total: u64,
    /// The first counterexamples found, in deterministic order.
    pub counterexamples: Vec<String>,
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
}

impl VerificationResult {
    fn new(theorem: &str, scope: Scope) -> Self {
        VerificationResult {
            theorem: theorem.to_string(),
            scope,
            success: true,
            counterexample_total: 0,
            counterexamples: Vec::new(),
            counts: BTreeMap::new(),
            details: serde_json::Value::Null,
        }
    }

    fn absorb(&mut self, part: Partial) {
        self.counterexample_total += part.total;
        for c in part.examples {
            if self.counterexamples.len() < STORED_COUNTEREXAMPLES {
                self.counterexamples.push(c);
            }
        }
        for (k, v) in part.counts {
            *self.counts.entry(k.to_string()).or_default() += v;
        }
        for (k, v) in part.maxima {
            let e = self.counts.entry(k.to_string()).or_default();
            *e = (*e).max(v);
        }
        self.success = self.counterexample_total == 0;
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }
}

/// Per-task accumulator, merged in task order.
#[derive(Default)]
struct Partial {
    total: u64,
    examples: Vec<String>,
    counts: BTreeMap<&'static str, u64>,
    maxima: BTreeMap<&'static str, u64>,
}

impl Partial {
    fn fail(&mut self, msg: impl FnOnce() -> String) {
        self.total += 1;
        if self.examples.len() < STORED_COUNTEREXAMPLES {
            self.examples.push(msg());
        }
    }

    fn add(&mut self, key: &'static str, n: u64) {
        *self.counts.entry(key).or_default() += n;
    }

    fn max(&mut self, key: &'static str, n: u64) {
        let e = self.maxima.entry(key).or_default();
        *e = (*e).max(n);
    }
}

fn merge(result: &mut VerificationResult, parts: Vec<Partial>) {
    for p in parts {
        result.absorb(p);
    }
}

fn orientation_label(cx: &AffineComplex, w: WeylElement) -> String {
    let g = cx.group();
    if w == g.longest_element() && g.order() > 1 {
        format!("w0 = {}", g.format(w))
    } else {
        g.format(w)
    }
}

/// An alcove of an `ell`-ball with the minimal galleries checked for it.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub alcove: Alcove,
    pub chamber: WeylElement,
    /// Reduced words in lexicographic order; all of them when
    /// `all_words`, otherwise only the canonical one.
    pub words: Vec<Vec<u8>>,
    pub all_words: bool,
}

/// The alcoves with `ell <= radius` and their reduced words, shared by the
/// orientation-dependent checks.
#[derive(Clone, Debug)]
pub struct Sweep {
    pub radius: usize,
    pub entries: Vec<SweepEntry>,
}

impl Sweep {
    pub fn new(cx: &AffineComplex, radius: usize) -> Self {
        let region = cx.region(radius);
        let entries = region
            .par_iter()
            .map(|e| {
                let mut words = cx.reduced_words(&e.alcove, REDUCED_WORD_CAP + 1);
                let all_words = words.len() <= REDUCED_WORD_CAP;
                if !all_words {
                    words = vec![e.word.clone()];
                }
                SweepEntry {
                    chamber: cx.chamber_of(&e.alcove),
                    alcove: e.alcove.clone(),
                    words,
                    all_words,
                }
            })
            .collect();
        Sweep { radius, entries }
    }

    pub fn galleries(&self) -> usize {
        self.entries.iter().map(|e| e.words.len()).sum()
    }
}

/// Smallest shrink depths beyond which every alcove of a chamber in the
/// region is complete; `None` if an incomplete alcove has unbounded depth.
#[derive(Clone, Debug, Default, Serialize)]
pub struct EmpiricalDepth {
    /// Depth measured as in [`AffineComplex::shrink_depth`].
    pub shrink: Option<i64>,
    /// Depth measured as in [`AffineComplex::wall_depth`].
    pub walls: Option<i64>,
}

/// Per-chamber completeness statistics of [`check_pattern_theorem`].
#[derive(Clone, Debug, Serialize)]
pub struct ChamberDepth {
    pub chamber: String,
    pub longest_path: usize,
    pub alcoves: usize,
    /// Alcoves at wall depth `longest_path`, where completeness is asserted.
    pub alcoves_at_level: usize,
    /// Alcoves in the level-`longest_path` shrunken chamber.
    pub alcoves_shrunken: usize,
    /// Of those, the ones whose canonical gallery misses a path.
    pub shrunken_incomplete: usize,
    /// Alcoves whose canonical gallery realises every path.
    pub complete_canonical: usize,
    /// Alcoves where every path is realised on some checked gallery.
    pub complete_some: usize,
    /// Alcoves every checked gallery of which realises every path.
    pub complete_every: usize,
    pub depth_canonical: EmpiricalDepth,
    pub depth_some: EmpiricalDepth,
    pub depth_every: EmpiricalDepth,
}

fn empirical(incomplete: impl Iterator<Item = i64>) -> Option<i64> {
    let mut worst: Option<i64> = None;
    for d in incomplete {
        if d == i64::MAX {
            return None;
        }
        worst = Some(worst.map_or(d, |w| w.max(d)));
    }
    Some(worst.map_or(0, |w| w + 1))
}

/// Soundness, completeness at depth `l_p`, the fold-count bound and the
/// spherical-direction law for positive foldings, over every alcove of the
/// sweep.
///
/// Completeness is asserted for every alcove at [`AffineComplex::wall_depth`]
/// at least `l_p`: each path must be realised on some checked gallery. Alcoves
/// there whose canonical gallery alone misses a path are counted under
/// `canonical_incomplete_at_level`. Alcoves of the level-`l_p`
/// [`AffineComplex::in_shrunken_chamber`] whose canonical gallery misses a
/// path are counted under `shrunken_incomplete`; for `v = w0` that chamber
/// is not shrunk at all and short galleries cannot carry long patterns.
pub fn check_pattern_theorem_in(cx: &AffineComplex, sweep: &Sweep, w: WeylElement) -> VerificationResult {
    let group = cx.group();
    let rs = cx.root_system();
    let o = WeylChamberOrientation::new(w);
    let graph = MomentGraph::modified(group, w);
    let undirected = MomentGraph::undirected(group);
    let paths: Vec<HashSet<Vec<RootId>>> = group
        .elements()
        .map(|v| {
            graph
                .directed_paths_from(v)
                .expect("modified graphs are directed")
                .into_iter()
                .map(|p| p.0)
                .collect()
        })
        .collect();
    let longest: Vec<usize> = group
        .elements()
        .map(|v| graph.longest_path_from(v).expect("directed"))
        .collect();

    struct EntryOut {
        partial: Partial,
        chamber: WeylElement,
        at_level: bool,
        shrunken: bool,
        canonical: bool,
        some: bool,
        every: bool,
        depth: i64,
        wall_depth: i64,
    }

    let outs: Vec<EntryOut> = sweep
        .entries
        .par_iter()
        .map(|entry| {
            let mut part = Partial::default();
            let v = entry.chamber;
            let allowed = &paths[v.index()];
            let lp = longest[v.index()];
            let at_level = cx.in_deep_chamber(&entry.alcove, v, lp as i64);
            let shrunken = cx.in_shrunken_chamber(&entry.alcove, v, lp as i64);
            let mut union: HashSet<Vec<RootId>> = HashSet::new();
            let mut every = true;
            let mut canonical = true;
            for (k, word) in entry.words.iter().enumerate() {
                part.add("galleries", 1);
                let mut realized: HashSet<Vec<RootId>> = HashSet::new();
                for_each_folding(cx, &cx.identity(), word, &o, true, |f| {
                    part.add("positive_foldings", 1);
                    part.max("max_positive_folds", f.pattern.len() as u64);
                    let pattern = FoldingPattern(f.pattern.to_vec());
                    if !allowed.contains(f.pattern) {
                        part.fail(|| {
                            format!(
                                "soundness: alcove {} word {} folds {:?} pattern {} is not a path from {}",
                                cx.format_alcove(&entry.alcove),
                                format_word(word),
                                f.folds,
                                pattern.format(rs),
                                group.format(v)
                            )
                        });
                    }
                    if undirected.walk_undirected(entry.alcove.spherical, &pattern) != f.end.spherical {
                        part.add("spherical_direction_failures", 1);
                        part.fail(|| {
                            format!(
                                "direction: alcove {} word {} folds {:?} ends in direction {}",
                                cx.format_alcove(&entry.alcove),
                                format_word(word),
                                f.folds,
                                group.format(f.end.spherical)
                            )
                        });
                    }
                    realized.insert(pattern.0);
                });
                let complete = realized.len() == allowed.len();
                every &= complete;
                if k == 0 {
                    canonical = complete;
                }
                union.extend(realized);
            }
            let some = union.len() == allowed.len();
            if at_level {
                part.add("alcoves_at_level", 1);
                if !canonical {
                    part.add("canonical_incomplete_at_level", 1);
                }
                if !some {
                    part.fail(|| {
                        let mut missing: Vec<String> = allowed
                            .iter()
                            .filter(|p| !union.contains(*p))
                            .map(|p| FoldingPattern(p.clone()).format(rs))
                            .collect();
                        missing.sort();
                        format!(
                            "completeness: alcove {} (chamber {}, depth {}) misses {} on all {} checked galleries",
                            cx.format_alcove(&entry.alcove),
                            group.format(v),
                            lp,
                            missing.join(" "),
                            entry.words.len()
                        )
                    });
                }
            }
            if shrunken && !canonical {
                part.add("shrunken_incomplete", 1);
            }
            part.add("alcoves", 1);
            EntryOut {
                partial: part,
                chamber: v,
                at_level,
                shrunken,
                canonical,
                some,
                every,
                depth: cx.shrink_depth(&entry.alcove, v).unwrap_or(0),
                wall_depth: cx.wall_depth(&entry.alcove, v).unwrap_or(0),
            }
        })
        .collect();

    let mut result = VerificationResult::new(
        "patterns",
        Scope {
            root_system: rs.label().to_string(),
            orientation: orientation_label(cx, w),
            radius: Some(sweep.radius),
            word_length_cap: None,
            seed: None,
        },
    );
    let mut depths = Vec::new();
    for v in group.elements() {
        let mine: Vec<&EntryOut> = outs.iter().filter(|o| o.chamber == v).collect();
        let depth = |flag: fn(&EntryOut) -> bool| EmpiricalDepth {
            shrink: empirical(mine.iter().filter(|o| !flag(o)).map(|o| o.depth)),
            walls: empirical(mine.iter().filter(|o| !flag(o)).map(|o| o.wall_depth)),
        };
        depths.push(ChamberDepth {
            chamber: group.format(v),
            longest_path: longest[v.index()],
            alcoves: mine.len(),
            alcoves_at_level: mine.iter().filter(|o| o.at_level).count(),
            alcoves_shrunken: mine.iter().filter(|o| o.shrunken).count(),
            shrunken_incomplete: mine.iter().filter(|o| o.shrunken && !o.canonical).count(),
            complete_canonical: mine.iter().filter(|o| o.canonical).count(),
            complete_some: mine.iter().filter(|o| o.some).count(),
            complete_every: mine.iter().filter(|o| o.every).count(),
            depth_canonical: depth(|o| o.canonical),
            depth_some: depth(|o| o.some),
            depth_every: depth(|o| o.every),
        });
    }
    merge(&mut result, outs.into_iter().map(|o| o.partial).collect());
    result.counts.insert("l_w0".into(), group.length(group.longest_element()) as u64);
    result.details = serde_json::to_value(&depths).unwrap_or_default();
    result
}

pub fn check_pattern_theorem(cx: &AffineComplex, w: WeylElement, radius: usize) -> VerificationResult {
    check_pattern_theorem_in(cx, &Sweep::new(cx, radius), w)
}

/// For every word of length `<= max_len`: the gallery is minimal iff for
/// every positive root one of the three crossing conditions holds.
pub fn check_minimality_lemma(cx: &AffineComplex, w: WeylElement, max_len: usize) -> VerificationResult {
    let group = cx.group();
    let rs = cx.root_system();
    let o = WeylChamberOrientation::new(w);
    let gens = cx.rank() as u8 + 1;
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * gens as usize);
        for word in &frontier {
            for s in 0..gens {
                let mut w2: Vec<u8> = word.clone();
                w2.push(s);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let parts: Vec<Partial> = words
        .par_chunks(1024)
        .map(|chunk| {
            let mut part = Partial::default();
            for word in chunk {
                let g = Gallery::from_word(cx, cx.identity(), word);
                let minimal = g.is_minimal(cx);
                let x = g.end();
                let trichotomy = rs.positive_ids().all(|alpha| {
                    let dirs: Vec<bool> = g
                        .crossings(cx)
                        .into_iter()
                        .filter(|(_, h)| h.root == alpha)
                        .map(|(i, _)| crossing_is_positive(&o, cx, &g, i).expect("unfolded"))
                        .collect();
                    let lambda_pair = rs.pair_coroot_vector(alpha, &x.translation);
                    let separated = group.chamber_side(alpha, x.spherical) == -1;
                    let c1 = lambda_pair != 0
                        && (dirs.iter().all(|&d| d) || dirs.iter().all(|&d| !d));
                    let c2 = lambda_pair == 0 && !separated && dirs.is_empty();
                    let c3 = lambda_pair == 0 && separated && dirs.len() == 1;
                    c1 || c2 || c3
                });
                part.add("words", 1);
                if minimal {
                    part.add("minimal_words", 1);
                }
                if minimal != trichotomy {
                    part.fail(|| {
                        format!(
                            "word {}: minimal = {minimal}, trichotomy = {trichotomy}",
                            format_word(word)
                        )
                    });
                }
            }
            part
        })
        .collect();
    let mut result = VerificationResult::new(
        "minimality",
        Scope {
            root_system: rs.label().to_string(),
            orientation: orientation_label(cx, w),
            radius: None,
            word_length_cap: Some(max_len),
            seed: None,
        },
    );
    merge(&mut result, parts);
    result
}

fn crossing_law_part(
    cx: &AffineComplex,
    o: &WeylChamberOrientation,
    g: &Gallery,
    v: WeylElement,
    part: &mut Partial,
) {
    let group = cx.group();
    for (i, h) in g.crossings(cx) {
        part.add("crossings", 1);
        let actual = crossing_is_positive(o, cx, g, i).expect("unfolded");
        let predicted = group.chamber_side(h.root, v) != group.chamber_side(h.root, o.direction);
        if actual != predicted {
            part.fail(|| {
                format!(
                    "gallery from {} of type {} step {}: crossing positive = {actual}, predicted {predicted}",
                    cx.format_alcove(g.start()),
                    format_word(&g.type_word()),
                    i
                )
            });
        }
    }
}

/// Every crossing of every checked minimal gallery from `c_f` is positive
/// iff the end chamber `C_v` and `C_w` lie on opposite sides of the wall
/// class.
pub fn check_crossing_direction_in(cx: &AffineComplex, sweep: &Sweep, w: WeylElement) -> VerificationResult {
    let o = WeylChamberOrientation::new(w);
    let parts: Vec<Partial> = sweep
        .entries
        .par_iter()
        .map(|entry| {
            let mut part = Partial::default();
            for word in &entry.words {
                part.add("galleries", 1);
                let g = Gallery::from_word(cx, cx.identity(), word);
                crossing_law_part(cx, &o, &g, entry.chamber, &mut part);
            }
            part
        })
        .collect();
    let mut result = VerificationResult::new(
        "crossings",
        Scope {
            root_system: cx.root_system().label().to_string(),
            orientation: orientation_label(cx, w),
            radius: Some(sweep.radius),
            word_length_cap: None,
            seed: None,
        },
    );
    merge(&mut result, parts);
    result
}

pub fn check_crossing_direction(cx: &AffineComplex, w: WeylElement, radius: usize) -> VerificationResult {
    check_crossing_direction_in(cx, &Sweep::new(cx, radius), w)
}

/// A uniformly chosen reduced word of `g`, built one letter at a time.
fn random_reduced_word(cx: &AffineComplex, g: &Alcove, rng: &mut ChaCha8Rng) -> Vec<u8> {
    let mut cur = cx.identity();
    let mut word = Vec::new();
    let mut remaining = cx.distance(&cur, g);
    while remaining > 0 {
        let choices: Vec<u8> = (0..=cx.rank() as u8)
            .filter(|&s| cx.distance(&cx.mul_generator(&cur, s), g) + 1 == remaining)
            .collect();
        let s = *choices.choose(rng).expect("a descent always exists");
        cur = cx.mul_generator(&cur, s);
        word.push(s);
        remaining -= 1;
    }
    word
}

/// Minimal galleries from random starts `y = t^mu u` to `x` in the local
/// chamber `C_{mu,v}`: crossings follow the same side law with `v`.
pub fn check_crossing_direction_translated(
    cx: &AffineComplex,
    w: WeylElement,
    radius: usize,
    samples: usize,
    seed: u64,
) -> VerificationResult {
    let o = WeylChamberOrientation::new(w);
    let region = cx.region(radius);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut part = Partial::default();
    for _ in 0..samples {
        let y = &region[rng.gen_range(0..region.len())].alcove;
        let d = &region[rng.gen_range(0..region.len())].alcove;
        let word = random_reduced_word(cx, d, &mut rng);
        let g = Gallery::from_word(cx, y.clone(), &word);
        part.add("galleries", 1);
        if !g.is_minimal(cx) {
            part.fail(|| format!("translated gallery of type {} is not minimal", format_word(&word)));
            continue;
        }
        let x = g.end();
        let mu = &y.translation;
        let back = cx.mul(&cx.translation(mu.iter().map(|c| -c).collect()), x);
        let v = cx.chamber_of(&back);
        if !cx.in_local_chamber(x, mu, v) {
            part.fail(|| format!("end alcove {} not in C_(mu,{})", cx.format_alcove(x), cx.group().format(v)));
            continue;
        }
        // the same gallery moved back to the origin crosses the same way
        let moved = Gallery::from_word(cx, cx.mul(&cx.translation(mu.iter().map(|c| -c).collect()), y), &word);
        for ((i, _), (j, _)) in g.crossings(cx).into_iter().zip(moved.crossings(cx)) {
            if crossing_is_positive(&o, cx, &g, i).ok() != crossing_is_positive(&o, cx, &moved, j).ok() {
                part.fail(|| format!("periodicity fails for type {} at step {i}", format_word(&word)));
            }
        }
        crossing_law_part(cx, &o, &g, v, &mut part);
    }
    let mut result = VerificationResult::new(
        "crossings-translated",
        Scope {
            root_system: cx.root_system().label().to_string(),
            orientation: orientation_label(cx, w),
            radius: Some(radius),
            word_length_cap: None,
            seed: Some(seed),
        },
    );
    result.absorb(part);
    result
}

/// For every folding of every checked minimal gallery: the spherical
/// direction of the end equals the undirected walk from the unfolded end's
/// direction along the pattern.
pub fn check_spherical_direction_in(cx: &AffineComplex, sweep: &Sweep, w: WeylElement) -> VerificationResult {
    let o = WeylChamberOrientation::new(w);
    let undirected = MomentGraph::undirected(cx.group());
    let parts: Vec<Partial> = sweep
        .entries
        .par_iter()
        .map(|entry| {
            let mut part = Partial::default();
            for word in &entry.words {
                for_each_folding(cx, &cx.identity(), word, &o, false, |f| {
                    part.add("foldings", 1);
                    if f.positive {
                        part.add("positive_foldings", 1);
                    }
                    let walked = undirected.walk_undirected(entry.alcove.spherical, &FoldingPattern(f.pattern.to_vec()));
                    if walked != f.end.spherical {
                        part.fail(|| {
                            format!(
                                "word {} folds {:?}: end direction {} but walk gives {}",
                                format_word(word),
                                f.folds,
                                cx.group().format(f.end.spherical),
                                cx.group().format(walked)
                            )
                        });
                    }
                });
            }
            part
        })
        .collect();
    let mut result = VerificationResult::new(
        "direction",
        Scope {
            root_system: cx.root_system().label().to_string(),
            orientation: orientation_label(cx, w),
            radius: Some(sweep.radius),
            word_length_cap: None,
            seed: None,
        },
    );
    merge(&mut result, parts);
    result
}

pub fn check_spherical_direction(cx: &AffineComplex, w: WeylElement, radius: usize) -> VerificationResult {
    check_spherical_direction_in(cx, &Sweep::new(cx, radius), w)
}

/// Length of a longest directed path from `v` in the modified graph of `w`;
/// the shrunken chamber of this level lies in the X-set.
pub fn naive_subset(cx: &AffineComplex, w: WeylElement, v: WeylElement) -> usize {
    MomentGraph::modified(cx.group(), w)
        .longest_path_from(v)
        .expect("modified graphs are directed")
}

#[derive(Clone, Debug)]
pub struct XSet {
    pub longest_path: usize,
    /// The non-extendable directed-path label sequences from `v`.
    pub patterns: Vec<FoldingPattern>,
    /// Alcoves of `C_v` in the region, in region order.
    pub chamber_alcoves: Vec<Alcove>,
    /// Those on which every pattern is realised by some minimal gallery.
    pub members: Vec<Alcove>,
}

/// Alcoves `x·c_f` of `C_v` with `ell <= radius` such that every
/// directed-path label sequence from `v` in the modified graph of `w` is a
/// positive folding pattern of some minimal gallery to `x·c_f`.
pub fn x_set(cx: &AffineComplex, w: WeylElement, v: WeylElement, radius: usize) -> XSet {
    let graph = MomentGraph::modified(cx.group(), w);
    let patterns = graph.maximal_paths_from(v).expect("directed");
    let o = WeylChamberOrientation::new(w);
    let chamber_alcoves: Vec<Alcove> = cx
        .region(radius)
        .into_iter()
        .map(|e| e.alcove)
        .filter(|a| cx.chamber_of(a) == v)
        .collect();
    let flags: Vec<bool> = chamber_alcoves
        .par_iter()
        .map(|x| {
            let mut open: Vec<&FoldingPattern> = patterns.iter().collect();
            let start = cx.identity();
            cx.for_each_reduced_word(x, |word| {
                open.retain(|p| realize_pattern(cx, &start, word, &o, p.roots()).is_none());
                if open.is_empty() {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            open.is_empty()
        })
        .collect();
    let members = chamber_alcoves
        .iter()
        .zip(&flags)
        .filter(|(_, &f)| f)
        .map(|(a, _)| a.clone())
        .collect();
    XSet {
        longest_path: graph.longest_path_from(v).expect("directed"),
        patterns,
        chamber_alcoves,
        members,
    }
}

/// For every chamber `C_v`: the alcoves of the region at wall depth `l_p`
/// all lie in the X-set. Members and depth-`l_p` alcoves are counted.
pub fn check_naive_subset(cx: &AffineComplex, w: WeylElement, radius: usize) -> VerificationResult {
    let group = cx.group();
    let mut part = Partial::default();
    for v in group.elements() {
        let x = x_set(cx, w, v, radius);
        let members: HashSet<&Alcove> = x.members.iter().collect();
        part.add("chamber_alcoves", x.chamber_alcoves.len() as u64);
        part.add("members", members.len() as u64);
        for a in &x.chamber_alcoves {
            if cx.in_deep_chamber(a, v, x.longest_path as i64) {
                part.add("naive", 1);
                if !members.contains(a) {
                    part.fail(|| {
                        format!(
                            "alcove {} at depth {} of {} is not in the X-set",
                            cx.format_alcove(a),
                            x.longest_path,
                            group.format(v)
                        )
                    });
                }
            }
        }
    }
    let mut result = VerificationResult::new(
        "xset",
        Scope {
            root_system: cx.root_system().label().to_string(),
            orientation: orientation_label(cx, w),
            radius: Some(radius),
            word_length_cap: None,
            seed: None,
        },
    );
    result.absorb(part);
    result
}

/// End alcoves of all positively folded galleries of type `word` from
/// `c_f`.
pub fn shadow<O: Orientation>(cx: &AffineComplex, word: &[u8], o: &O) -> Result<BTreeSet<Alcove>> {
    check_cap(word.len(), DEFAULT_FOLD_CAP)?;
    let mut out = BTreeSet::new();
    for_each_folding(cx, &cx.identity(), word, o, true, |f| {
        out.insert(f.end.clone());
    });
    Ok(out)
}

/// Positive patterns realised on each reduced word of `x`, keyed by word.
pub fn patterns_by_word<O: Orientation>(
    cx: &AffineComplex,
    x: &Alcove,
    o: &O,
    cap: usize,
) -> HashMap<Vec<u8>, BTreeSet<Vec<RootId>>> {
    cx.reduced_words(x, cap)
        .into_iter()
        .map(|word| {
            let mut set = BTreeSet::new();
            for_each_folding(cx, &cx.identity(), &word, o, true, |f| {
                set.insert(f.pattern.to_vec());
            });
            (word, set)
        })
        .collect()
}
