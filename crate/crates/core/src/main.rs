use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use alcovefold::affine::{AffineComplex, AlcoveJson, HyperplaneJson};
use alcovefold::error::{Error, Result};
use alcovefold::gallery::{FoldingPattern, Gallery, GalleryJson};
use alcovefold::moment_graph::MomentGraph;
use alcovefold::oracle::{self, Sweep, VerificationResult};
use alcovefold::orientation::{fold_is_positive, gallery_is_positively_folded, WeylChamberOrientation};
use alcovefold::render::{self, RenderOptions};
use alcovefold::root_system::Root;
use alcovefold::weyl::WeylElement;

#[derive(Parser)]
#[command(name = "alcovefold", version, about = "Folded alcove galleries and Bruhat moment graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Root system type, e.g. A2, B2, G2, A3.
    #[arg(long = "type", global = true, default_value = "A2")]
    root_type: String,
    /// Weyl chamber orientation: "w0", "e" or a word such as "s1 s2".
    #[arg(long, global = true, default_value = "w0")]
    orientation: String,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Patterns,
    Minimality,
    Crossings,
    Direction,
    Xset,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, coroots and the Cartan matrix.
    Roots,
    /// The Bruhat moment graph of the finite Weyl group.
    MomentGraph {
        /// Build the modified graph whose sink is this element.
        #[arg(long)]
        modified: Option<String>,
        #[arg(long, conflicts_with = "modified")]
        undirected: bool,
    },
    /// Fold the gallery of a word from the fundamental alcove.
    Fold {
        #[arg(long)]
        word: String,
        /// Comma separated 1-based step indices.
        #[arg(long, default_value = "")]
        folds: String,
    },
    /// Directed-path label sequences from a chamber in the modified graph.
    Patterns {
        #[arg(long)]
        chamber: String,
    },
    /// Brute-force verification over a region; `--orientation all` runs
    /// every chamber direction.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        radius: Option<usize>,
        /// Word length cap for the minimality check.
        #[arg(long, default_value_t = 8)]
        length: usize,
        /// Random translated galleries for the crossing check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the full results as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Alcoves of a chamber on which every path pattern is realised.
    Xset {
        #[arg(long)]
        chamber: String,
        #[arg(long, default_value_t = 10)]
        radius: usize,
    },
    /// End alcoves of the positively folded galleries of a word.
    Shadow {
        #[arg(long)]
        word: String,
    },
    /// SVG picture of a rank-2 complex.
    Render {
        #[arg(long, default_value_t = 2)]
        radius: i64,
        /// JSON file with one gallery or a list of galleries.
        #[arg(long)]
        galleries: Option<PathBuf>,
        /// Shade the shrunken chamber of this level.
        #[arg(long)]
        shrunken: Option<i64>,
        /// Chamber for the shrunken overlay.
        #[arg(long, default_value = "e")]
        chamber: String,
    },
}

struct Ctx {
    cx: AffineComplex,
    global: Global,
}

impl Ctx {
    fn orientation(&self) -> Result<WeylChamberOrientation> {
        WeylChamberOrientation::parse(self.cx.group(), &self.global.orientation)
    }

    fn orientations(&self) -> Result<Vec<WeylElement>> {
        if self.global.orientation.trim().eq_ignore_ascii_case("all") {
            Ok(self.cx.group().elements().collect())
        } else {
            Ok(vec![self.orientation()?.direction])
        }
    }

    fn element(&self, s: &str) -> Result<WeylElement> {
        if s.trim().eq_ignore_ascii_case("w0") {
            Ok(self.cx.group().longest_element())
        } else {
            self.cx.group().parse(s)
        }
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.global.out {
            Some(path) => fs::write(path, text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn emit_json<T: Serialize>(&self, value: &T) -> Result<()> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.emit(&text)
    }
}

#[derive(Serialize)]
struct FoldJson {
    index: usize,
    wall: HyperplaneJson,
    positive: bool,
}

#[derive(Serialize)]
struct FoldReportJson {
    orientation: String,
    gallery: GalleryJson,
    minimal: bool,
    positively_folded: bool,
    fold_signs: Vec<FoldJson>,
    spherical_direction: String,
    /// Walk in the undirected graph from the unfolded end's direction.
    prediction: String,
    prediction_matches: bool,
}

#[derive(Serialize)]
struct PatternJson {
    roots: Vec<Root>,
    pretty: String,
}

fn pattern_json(cx: &AffineComplex, p: &FoldingPattern) -> PatternJson {
    let rs = cx.root_system();
    PatternJson {
        roots: p.roots().iter().map(|&id| rs.root(id).clone()).collect(),
        pretty: p.format(rs),
    }
}

fn parse_folds(s: &str, len: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for part in s.split(',') {
        let t = part.trim();
        if !t.is_empty() {
            let i: usize = t
                .parse()
                .map_err(|_| Error::Parse {
                    what: "fold index",
                    input: s.to_string(),
                    position: pos,
                    message: "expected a positive integer".into(),
                })?;
            if i == 0 || i > len {
                return Err(Error::StepOutOfRange { index: i, len });
            }
            out.push(i);
        }
        pos += part.len() + 1;
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn cmd_roots(ctx: &Ctx) -> Result<()> {
    let rs = ctx.cx.root_system();
    if ctx.global.format == Some(Format::Text) {
        let mut s = format!("{} rank {} h = {}\n", rs.label(), rs.rank(), rs.coxeter_number());
        for id in rs.positive_ids() {
            s.push_str(&format!("{}\tcoroot {:?}\n", rs.root(id), rs.coroot(id)));
        }
        return ctx.emit(&s);
    }
    ctx.emit_json(&rs.to_document())
}

fn cmd_moment_graph(ctx: &Ctx, modified: Option<&str>, undirected: bool) -> Result<()> {
    let group = ctx.cx.group();
    let graph = match (modified, undirected) {
        (_, true) => MomentGraph::undirected(group),
        (Some(w), false) => MomentGraph::modified(group, ctx.element(w)?),
        (None, false) => MomentGraph::bruhat(group),
    };
    match ctx.global.format.unwrap_or(Format::Dot) {
        Format::Json => ctx.emit_json(&graph.to_json()),
        _ => ctx.emit(&graph.to_dot()),
    }
}

fn cmd_fold(ctx: &Ctx, word: &str, folds: &str) -> Result<()> {
    let cx = &ctx.cx;
    let o = ctx.orientation()?;
    let word = cx.parse_word(word)?;
    let folds = parse_folds(folds, word.len())?;
    let unfolded = Gallery::from_word(cx, cx.identity(), &word);
    let minimal = unfolded.is_minimal(cx);
    if !minimal {
        eprintln!("warning: the word is not reduced; the unfolded gallery is not minimal");
    }
    let g = Gallery::with_folds(cx, cx.identity(), &word, &folds);
    let fold_signs = g
        .fold_indices()
        .into_iter()
        .map(|i| {
            Ok(FoldJson {
                index: i,
                wall: cx.hyperplane_to_json(g.wall(cx, i)?),
                positive: fold_is_positive(&o, cx, &g, i)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let group = cx.group();
    let predicted = MomentGraph::undirected(group).walk_undirected(unfolded.end().spherical, &g.pattern_of(cx));
    let report = FoldReportJson {
        orientation: group.format(o.direction),
        gallery: g.to_json(cx),
        minimal,
        positively_folded: gallery_is_positively_folded(&o, cx, &g),
        fold_signs,
        spherical_direction: group.format(g.end().spherical),
        prediction: group.format(predicted),
        prediction_matches: predicted == g.end().spherical,
    };
    ctx.emit_json(&report)
}

fn cmd_patterns(ctx: &Ctx, chamber: &str) -> Result<()> {
    let cx = &ctx.cx;
    let group = cx.group();
    let w = ctx.orientation()?.direction;
    let v = ctx.element(chamber)?;
    let graph = MomentGraph::modified(group, w);
    let mut by_length: BTreeMap<usize, Vec<PatternJson>> = BTreeMap::new();
    for p in graph.directed_paths_from(v)? {
        by_length.entry(p.len()).or_default().push(pattern_json(cx, &p));
    }
    let maximal: Vec<PatternJson> = graph
        .maximal_paths_from(v)?
        .iter()
        .map(|p| pattern_json(cx, p))
        .collect();
    ctx.emit_json(&json!({
        "type": cx.root_system().label(),
        "orientation": group.format(w),
        "chamber": group.format(v),
        "longest_path": graph.longest_path_from(v)?,
        "by_length": by_length,
        "maximal": maximal,
    }))
}

fn cmd_verify(
    ctx: &Ctx,
    theorem: Theorem,
    radius: Option<usize>,
    length: usize,
    samples: usize,
    seed: u64,
    json_out: Option<&PathBuf>,
) -> Result<bool> {
    let cx = &ctx.cx;
    let radius = radius.unwrap_or(if cx.rank() >= 3 { 5 } else { 8 });
    let ws = ctx.orientations()?;
    let sweep = matches!(theorem, Theorem::Patterns | Theorem::Crossings | Theorem::Direction)
        .then(|| Sweep::new(cx, radius));
    let mut results: Vec<VerificationResult> = Vec::new();
    for w in ws {
        match theorem {
            Theorem::Patterns => results.push(oracle::check_pattern_theorem_in(cx, sweep.as_ref().unwrap(), w)),
            Theorem::Minimality => results.push(oracle::check_minimality_lemma(cx, w, length)),
            Theorem::Crossings => {
                results.push(oracle::check_crossing_direction_in(cx, sweep.as_ref().unwrap(), w));
                results.push(oracle::check_crossing_direction_translated(cx, w, radius, samples, seed));
            }
            Theorem::Direction => results.push(oracle::check_spherical_direction_in(cx, sweep.as_ref().unwrap(), w)),
            Theorem::Xset => results.push(oracle::check_naive_subset(cx, w, radius)),
        }
    }
    let mut summary = String::new();
    for r in &results {
        summary.push_str(&format!(
            "{} {} phi_{}: {} ({} counterexamples)\n",
            r.theorem,
            r.scope.root_system,
            r.scope.orientation,
            if r.success { "ok" } else { "FAILED" },
            r.counterexample_total
        ));
        for c in r.counterexamples.iter().take(5) {
            summary.push_str(&format!("  {c}\n"));
        }
    }
    if let Some(path) = json_out {
        let mut text = serde_json::to_string_pretty(&results)?;
        text.push('\n');
        fs::write(path, text)?;
    }
    if ctx.global.format == Some(Format::Json) {
        ctx.emit_json(&results)?;
    } else {
        ctx.emit(&summary)?;
    }
    Ok(results.iter().all(|r| r.success))
}

fn cmd_xset(ctx: &Ctx, chamber: &str, radius: usize) -> Result<()> {
    let cx = &ctx.cx;
    let group = cx.group();
    let w = ctx.orientation()?.direction;
    let v = ctx.element(chamber)?;
    let x = oracle::x_set(cx, w, v, radius);
    let naive: Vec<AlcoveJson> = x
        .chamber_alcoves
        .iter()
        .filter(|a| cx.in_shrunken_chamber(a, v, x.longest_path as i64))
        .map(|a| cx.alcove_to_json(a))
        .collect();
    ctx.emit_json(&json!({
        "type": cx.root_system().label(),
        "orientation": group.format(w),
        "chamber": group.format(v),
        "radius": radius,
        "longest_path": x.longest_path,
        "patterns": x.patterns.iter().map(|p| pattern_json(cx, p)).collect::<Vec<_>>(),
        "chamber_alcoves": x.chamber_alcoves.len(),
        "members": x.members.iter().map(|a| cx.alcove_to_json(a)).collect::<Vec<_>>(),
        "shrunken": naive,
    }))
}

fn cmd_shadow(ctx: &Ctx, word: &str) -> Result<()> {
    let cx = &ctx.cx;
    let o = ctx.orientation()?;
    let word = cx.parse_word(word)?;
    let sh = oracle::shadow(cx, &word, &o)?;
    ctx.emit_json(&json!({
        "type": cx.root_system().label(),
        "orientation": cx.group().format(o.direction),
        "word": alcovefold::weyl::format_word(&word),
        "count": sh.len(),
        "alcoves": sh.iter().map(|a| cx.alcove_to_json(a)).collect::<Vec<_>>(),
    }))
}

fn read_galleries(cx: &AffineComplex, path: &PathBuf) -> Result<Vec<Gallery>> {
    let text = fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let items = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|v| {
            let j: GalleryJson = match v.get("gallery") {
                Some(inner) => serde_json::from_value(inner.clone())?,
                None => serde_json::from_value(v)?,
            };
            Gallery::from_json(cx, &j)
        })
        .collect()
}

fn cmd_render(ctx: &Ctx, radius: i64, galleries: Option<&PathBuf>, shrunken: Option<i64>, chamber: &str) -> Result<()> {
    let cx = &ctx.cx;
    let galleries = match galleries {
        Some(p) => read_galleries(cx, p)?,
        None => Vec::new(),
    };
    let opts = RenderOptions {
        radius,
        orientation: Some(ctx.orientation()?.direction),
        shrunken: match shrunken {
            Some(k) => Some((ctx.element(chamber)?, k)),
            None => None,
        },
        galleries,
    };
    ctx.emit(&render::scene(cx, &opts)?.to_svg())
}

fn run(cli: Cli) -> Result<bool> {
    let cx = AffineComplex::from_type(&cli.global.root_type)?;
    let ctx = Ctx { cx, global: cli.global };
    match &cli.command {
        Command::Roots => cmd_roots(&ctx)?,
        Command::MomentGraph { modified, undirected } => cmd_moment_graph(&ctx, modified.as_deref(), *undirected)?,
        Command::Fold { word, folds } => cmd_fold(&ctx, word, folds)?,
        Command::Patterns { chamber } => cmd_patterns(&ctx, chamber)?,
        Command::Verify {
            theorem,
            radius,
            length,
            samples,
            seed,
            json,
        } => return cmd_verify(&ctx, *theorem, *radius, *length, *samples, *seed, json.as_ref()),
        Command::Xset { chamber, radius } => cmd_xset(&ctx, chamber, *radius)?,
        Command::Shadow { word } => cmd_shadow(&ctx, word)?,
        Command::Render {
            radius,
            galleries,
            shrunken,
            chamber,
        } => cmd_render(&ctx, *radius, galleries.as_ref(), *shrunken, chamber)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
