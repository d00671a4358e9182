use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use jw_core::cyclic::{cyclic_rank, QuotientMode};
use jw_core::exactlin::QuotientStructure;
use jw_core::freelie::{lyndon_basis, witt_rank, MAX_LETTER, MAX_WORD_LEN};
use jw_core::grouppres::{
    abelianization, builtin, h1_report, h2_report, GroupKind, LatticeAction, Presentation, Representation,
};
use jw_core::johnson::*;
use log::info;

use crate::cache::{self, CacheSource};
use crate::document::{torsion_cell, Cell, Format, TableDocument};

#[derive(Debug, Parser)]
#[command(name = "jw", version, about = "Exact tables for Johnson images, traces and related cohomology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the document to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Directory for cached Lyndon bases.
    #[arg(long, global = true, env = "JW_CACHE_DIR")]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ranks of the free Lie algebra by degree.
    Witt {
        #[arg(long)]
        n: usize,
        /// Degree or inclusive range `a..b`.
        #[arg(long, value_parser = parse_range)]
        k: DegreeRange,
    },
    /// Free Lie, cyclic and tangential ranks for degrees up to `kmax`.
    Ranks {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
    /// Lyndon (Hall) basis words of degree `k`.
    Hall(NK),
    /// Rank of the trace map on tangential derivations.
    Trace {
        #[command(flatten)]
        nk: NK,
        #[arg(long, value_enum, default_value_t = ModeArg::Bar)]
        mode: ModeArg,
    },
    /// Johnson image dimension by content block.
    Image(NK),
    /// `c_alpha` and `r_alpha` for one partition or all partitions of `k`.
    Calpha {
        #[arg(long)]
        k: usize,
        /// Comma-separated partition, e.g. `3,2,2`.
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<usize>>,
    },
    /// Degree 1..4 rank table with closed forms next to computed values.
    Table7 {
        #[arg(long)]
        n: usize,
    },
    /// `c_alpha` / `r_alpha` rows for `k = 5..=kmax`.
    Table8 {
        #[arg(long)]
        kmax: usize,
    },
    /// Johnson image against trace kernel for three generators.
    N3gap {
        #[arg(long)]
        kmax: usize,
    },
    /// Cokernel of the bar-trace over the integers.
    Coker(NK),
    /// Trace-kernel elements of blocks with a unit part lie in the image.
    T0530(NK),
    /// Degree-three generators built from brackets of degree-one elements.
    Egens {
        #[arg(long)]
        n: usize,
    },
    /// First cohomology with twisted lattice coefficients.
    H1 {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = RepArg::Standard)]
        rep: RepArg,
    },
    /// Rank of the second cohomology of the pure symmetric automorphism group.
    H2 {
        #[arg(long)]
        n: usize,
    },
    /// Abelianization of a presentation.
    Abelianize {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Save and reload a cached Lyndon basis.
    Cache(NK),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct NK {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    pub group: GroupArg,
    #[arg(long)]
    pub n: Option<usize>,
    /// Presentation file for `--group file`.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Bp,
    Braid,
    Sym,
    Mccool,
    File,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepArg {
    Standard,
    Trivial,
    Perm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    Bar,
    Tilde,
}

impl ModeArg {
    fn mode(self) -> QuotientMode {
        match self {
            ModeArg::Full => QuotientMode::Full,
            ModeArg::Bar => QuotientMode::Bar,
            ModeArg::Tilde => QuotientMode::Tilde,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ModeArg::Full => "full",
            ModeArg::Bar => "bar",
            ModeArg::Tilde => "tilde",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeRange {
    pub lo: usize,
    pub hi: usize,
}

fn parse_range(s: &str) -> Result<DegreeRange, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad degree `{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo == 0 || lo > hi {
        return Err(format!("empty or invalid degree range `{s}`"));
    }
    Ok(DegreeRange { lo, hi })
}

/// The emitted table and, when an internal consistency check failed, why.
pub struct Outcome {
    pub doc: TableDocument,
    pub mismatch: Option<String>,
}

impl Outcome {
    fn ok(doc: TableDocument) -> Self {
        Outcome { doc, mismatch: None }
    }

    fn check(doc: TableDocument, mismatch: Option<String>) -> Self {
        Outcome { doc, mismatch }
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    ensure!((min..=MAX_LETTER as usize).contains(&n), "--n must be in {min}..={MAX_LETTER}, got {n}");
    Ok(())
}

fn check_k(k: usize, max: usize) -> Result<()> {
    ensure!((1..=max).contains(&k), "degree must be in 1..={max}, got {k}");
    Ok(())
}

fn alpha_cell(alpha: &[usize]) -> Cell {
    Cell::Text(format_alpha(alpha))
}

fn structure_row(s: &QuotientStructure) -> [Cell; 3] {
    [s.free_rank.into(), torsion_cell(s), s.to_string().into()]
}

/// Loads the Lyndon bases `(n, 1..=kmax)` from the cache directory, if any.
fn warm_cache(dir: Option<&Path>, n: usize, kmax: usize) -> Result<()> {
    let Some(dir) = dir else { return Ok(()) };
    for k in 1..=kmax.min(MAX_WORD_LEN) {
        let source = cache::warm(dir, n, k)?;
        if source == CacheSource::Generated {
            info!("cached Lyndon basis n={n} k={k} in {}", dir.display());
        }
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cache_dir = cli.cache.as_deref();
    match &cli.command {
        Command::Witt { n, k } => {
            check_n(*n, 1)?;
            let columns: Vec<String> = (k.lo..=k.hi).map(|d| format!("k={d}")).collect();
            let refs: Vec<&str> = columns.iter().map(String::as_str).collect();
            let mut doc = TableDocument::new(format!("free Lie algebra ranks, n={n}"), &refs, "necklace formula");
            doc.push((k.lo..=k.hi).map(|d| Cell::from(&witt_rank(*n, d))).collect());
            Ok(Outcome::ok(doc))
        }
        Command::Ranks { n, kmax } => {
            check_n(*n, 2)?;
            check_k(*kmax, MAX_WORD_LEN)?;
            let mut doc = TableDocument::new(
                format!("ranks by degree, n={n}"),
                &["k", "lie", "cyclic", "cyclic_bar", "cyclic_tilde", "tangential"],
                "free Lie and cyclic rank formulas",
            );
            for k in 1..=*kmax {
                doc.push(vec![
                    k.into(),
                    (&witt_rank(*n, k)).into(),
                    (&cyclic_rank(*n, k, QuotientMode::Full)).into(),
                    (&cyclic_rank(*n, k, QuotientMode::Bar)).into(),
                    (&cyclic_rank(*n, k, QuotientMode::Tilde)).into(),
                    p_dim(*n, k).into(),
                ]);
            }
            Ok(Outcome::ok(doc))
        }
        Command::Hall(NK { n, k }) => {
            check_n(*n, 1)?;
            check_k(*k, MAX_WORD_LEN)?;
            warm_cache(cache_dir, *n, *k)?;
            let mut doc =
                TableDocument::new(format!("Lyndon basis, n={n} k={k}"), &["index", "word"], "Lyndon words");
            for (i, w) in lyndon_basis(*n, *k).iter().enumerate() {
                doc.push(vec![i.into(), w.to_string().into()]);
            }
            Ok(Outcome::ok(doc))
        }
        Command::Trace { nk: NK { n, k }, mode } => {
            check_n(*n, 2)?;
            check_k(*k, MAX_WORD_LEN - 1)?;
            let target = cyclic_rank(*n, *k, mode.mode());
            let mut doc = TableDocument::new(
                format!("{}-trace on tangential derivations, n={n} k={k}", mode.name()),
                &["n", "k", "mode", "tangential", "target", "image", "kernel"],
                "trace rank by content block",
            );
            let (rank, mismatch) = match mode {
                ModeArg::Bar => {
                    info!("bar-trace rank by orbits and by blocks");
                    let orbit = trace_image_dim(*n, *k);
                    let direct = trace_image_dim_direct(*n, *k);
                    let m = (orbit != direct).then(|| format!("orbit route {orbit} != block route {direct}"));
                    (orbit, m)
                }
                ModeArg::Tilde => (tilde_trace_rank(*n, *k), None),
                ModeArg::Full => (full_trace_rank(*n, *k), None),
            };
            let p = p_dim(*n, *k);
            doc.push(vec![
                (*n).into(),
                (*k).into(),
                mode.name().into(),
                p.into(),
                (&target).into(),
                rank.into(),
                (p - rank).into(),
            ]);
            Ok(Outcome::check(doc, mismatch))
        }
        Command::Image(NK { n, k }) => {
            check_n(*n, 2)?;
            check_k(*k, MAX_WORD_LEN - 1)?;
            info!("Johnson image up to degree {k}");
            let image = johnson_image(*n, *k);
            let mut doc = TableDocument::new(
                format!("Johnson image by content, n={n} k={k}"),
                &["alpha", "dim"],
                "brackets of degree-one generators, split by content",
            );
            for b in image.blocks() {
                doc.push(vec![Cell::Text(content_label(b.alpha())), b.dim().into()]);
            }
            doc.push(vec!["total".into(), image.dim().into()]);
            let mismatch = if *k >= 2 {
                let kernel = trace_kernel_dim(*n, *k);
                (image.dim() > kernel).then(|| format!("image {} exceeds trace kernel {kernel}", image.dim()))
            } else {
                None
            };
            Ok(Outcome::check(doc, mismatch))
        }
        Command::Calpha { k, alpha } => {
            check_k(*k, MAX_WORD_LEN - 1)?;
            let reports = match alpha {
                Some(a) => {
                    ensure!(a.iter().sum::<usize>() == *k, "--alpha must sum to --k");
                    ensure!(a.iter().filter(|&&x| x > 0).count() >= 2, "--alpha needs at least two nonzero parts");
                    ensure!(a.len() <= MAX_LETTER as usize, "--alpha has too many parts");
                    let mut p = a.clone();
                    p.sort_unstable_by(|x, y| y.cmp(x));
                    vec![c_alpha(&p)]
                }
                None => alpha_table(*k),
            };
            let mut doc = TableDocument::new(
                format!("c_alpha, k={k}"),
                &["k", "alpha", "c_alpha", "lie_rank", "r_alpha"],
                "bar-trace rank per content block",
            );
            for r in reports {
                doc.push(alpha_row(*k, &r));
            }
            Ok(Outcome::ok(doc))
        }
        Command::Table7 { n } => {
            check_n(*n, 3)?;
            warm_cache(cache_dir, *n, 5)?;
            let mut doc = TableDocument::new(
                format!("ranks in degrees 1..4, n={n}"),
                &[
                    "k",
                    "gr_formula",
                    "gr",
                    "p_formula",
                    "p",
                    "cbar_formula",
                    "cbar",
                    "coker_formula",
                    "coker_free",
                    "coker_torsion",
                    "coker",
                    "match",
                ],
                "rank table for degrees 1..4 (closed forms vs computation)",
            );
            let rows = rank_table(*n);
            let bad: Vec<usize> = rows.iter().filter(|r| !r.matches()).map(|r| r.k).collect();
            for r in rows {
                let mut row: Vec<Cell> = vec![
                    r.k.into(),
                    r.gr_formula.into(),
                    r.gr_computed.into(),
                    r.p_formula.into(),
                    r.p_computed.into(),
                    r.cbar_formula.into(),
                    r.cbar_computed.into(),
                    r.coker_formula.into(),
                ];
                row.extend(structure_row(&r.coker_computed));
                row.push(r.matches().into());
                doc.push(row);
            }
            let mismatch = (!bad.is_empty()).then(|| format!("closed form differs in degrees {bad:?}"));
            Ok(Outcome::check(doc, mismatch))
        }
        Command::Table8 { kmax } => {
            ensure!((5..MAX_WORD_LEN).contains(kmax), "--kmax must be in 5..{MAX_WORD_LEN}");
            let mut doc = TableDocument::new(
                format!("c_alpha and r_alpha, k=5..{kmax}"),
                &["k", "alpha", "c_alpha", "lie_rank", "r_alpha"],
                "c_alpha / r_alpha tables (computed values)",
            );
            for k in 5..=*kmax {
                info!("c_alpha table k={k}");
                for r in alpha_table(k) {
                    doc.push(alpha_row(k, &r));
                }
            }
            Ok(Outcome::ok(doc))
        }
        Command::N3gap { kmax } => {
            check_k(*kmax, MAX_WORD_LEN - 1)?;
            let mut doc = TableDocument::new(
                format!("Johnson image vs trace kernel, n=3 k=1..{kmax}"),
                &["k", "image", "kernel", "gap", "gap_blocks"],
                "Johnson image table for three generators",
            );
            let mut bad = Vec::new();
            for r in gap_table(3, *kmax) {
                info!("n=3 degree {} done", r.k);
                if r.image_dim > r.kernel_dim {
                    bad.push(r.k);
                }
                let blocks: Vec<String> =
                    r.gap_blocks.iter().map(|(a, g)| format!("{}:{g}", format_alpha(a))).collect();
                let gap = r.kernel_dim as i64 - r.image_dim as i64;
                doc.push(vec![r.k.into(), r.image_dim.into(), r.kernel_dim.into(), gap.into(), blocks.join(" ").into()]);
            }
            let mismatch = (!bad.is_empty()).then(|| format!("image exceeds kernel in degrees {bad:?}"));
            Ok(Outcome::check(doc, mismatch))
        }
        Command::Coker(NK { n, k }) => {
            check_n(*n, 2)?;
            check_k(*k, MAX_WORD_LEN - 1)?;
            let s = coker_structure(*n, *k);
            let mut doc = TableDocument::new(
                format!("bar-trace cokernel, n={n} k={k}"),
                &["n", "k", "free_rank", "torsion", "structure"],
                "Smith normal form of the trace matrix",
            );
            let mut row: Vec<Cell> = vec![(*n).into(), (*k).into()];
            row.extend(structure_row(&s));
            doc.push(row);
            Ok(Outcome::ok(doc.with_structure(s)))
        }
        Command::T0530(NK { n, k }) => {
            check_n(*n, 2)?;
            check_k(*k, MAX_WORD_LEN - 1)?;
            let rep = check_t0530(*n, *k);
            let mut doc = TableDocument::new(
                format!("trace kernel inside Johnson image for unit-part contents, n={n} k={k}"),
                &["alpha", "kernel_dim", "violations"],
                "kernel inclusion check",
            );
            for (alpha, dim, v) in &rep.checked {
                doc.push(vec![Cell::Text(content_label(alpha)), (*dim).into(), (*v).into()]);
            }
            let v = rep.violations();
            Ok(Outcome::check(doc, (v > 0).then(|| format!("{v} kernel elements outside the image"))))
        }
        Command::Egens { n } => {
            check_n(*n, 3)?;
            let r = verify_e_generators(*n);
            let mut doc = TableDocument::new(
                format!("degree-three generators, n={n}"),
                &["n", "count", "expected", "span", "image", "contained"],
                "generators of the degree-three image",
            );
            doc.push(vec![
                r.n.into(),
                r.count.into(),
                r.expected_count.into(),
                r.span_dim.into(),
                r.image_dim.into(),
                r.contained.into(),
            ]);
            let ok = r.spans_image() && r.count == r.expected_count;
            Ok(Outcome::check(doc, (!ok).then(|| format!("{r:?}"))))
        }
        Command::H1 { group, rep } => {
            let (p, label, n) = presentation(group)?;
            let action = match rep {
                RepArg::Trivial => LatticeAction::trivial(&p, 1),
                RepArg::Standard | RepArg::Perm => {
                    let n = n.context("--n is required for this representation")?;
                    let r = if *rep == RepArg::Standard { Representation::Standard } else { Representation::Permutation };
                    LatticeAction::symmetric(&p, n, r)?
                }
            };
            let h = h1_report(&p, &action)?;
            let rep_name = format!("{rep:?}").to_lowercase();
            let mut doc = TableDocument::new(
                format!("H^1({label}; {rep_name})"),
                &["group", "n", "rep", "cocycles", "coboundaries", "free_rank", "torsion", "structure"],
                "crossed homomorphisms modulo principal ones",
            );
            let mut row: Vec<Cell> = vec![
                label.into(),
                n.map_or(Cell::Text(String::new()), Cell::from),
                rep_name.into(),
                h.cocycle_rank.into(),
                h.coboundary_rank.into(),
            ];
            row.extend(structure_row(&h.structure));
            doc.push(row);
            Ok(Outcome::ok(doc.with_structure(h.structure)))
        }
        Command::H2 { n } => {
            check_n(*n, 3)?;
            let r = h2_report(*n)?;
            let mut doc = TableDocument::new(
                format!("rank H^2 of the pure symmetric automorphism group, n={n}"),
                &["n", "from_image", "formula", "relators", "consistent"],
                "three expressions for the same rank",
            );
            doc.push(vec![
                r.n.into(),
                r.from_image.into(),
                r.formula.into(),
                r.relator_count.into(),
                r.consistent().into(),
            ]);
            let mismatch = (!r.consistent()).then(|| format!("{r:?}"));
            Ok(Outcome::check(doc, mismatch))
        }
        Command::Abelianize { group } => {
            let (p, label, n) = presentation(group)?;
            let s = abelianization(&p);
            let mut doc = TableDocument::new(
                format!("abelianization of {label}"),
                &["group", "n", "generators", "relators", "free_rank", "torsion", "structure"],
                "Smith normal form of the exponent-sum matrix",
            );
            let mut row: Vec<Cell> = vec![
                label.into(),
                n.map_or(Cell::Text(String::new()), Cell::from),
                p.generators().len().into(),
                p.relators().len().into(),
            ];
            row.extend(structure_row(&s));
            doc.push(row);
            Ok(Outcome::ok(doc.with_structure(s)))
        }
        Command::Cache(NK { n, k }) => {
            check_n(*n, 1)?;
            check_k(*k, MAX_WORD_LEN)?;
            let Some(dir) = cache_dir else { bail!("--cache or JW_CACHE_DIR is required") };
            let source = cache::warm(dir, *n, *k)?;
            let (count, identical) = cache::roundtrip(dir, *n, *k)?;
            let mut doc = TableDocument::new(
                format!("Lyndon basis cache, n={n} k={k}"),
                &["n", "k", "words", "source", "identical"],
                "versioned JSON cache roundtrip",
            );
            let source = match source {
                CacheSource::Loaded => "loaded",
                CacheSource::Generated => "generated",
            };
            doc.push(vec![(*n).into(), (*k).into(), count.into(), source.into(), identical.into()]);
            Ok(Outcome::check(doc, (!identical).then(|| "reloaded basis differs".to_string())))
        }
    }
}

fn alpha_row(k: usize, r: &AlphaReport) -> Vec<Cell> {
    vec![k.into(), alpha_cell(&r.alpha), r.c_alpha.into(), r.lie_rank.into(), r.r_alpha.into()]
}

/// Content vectors keep their zero entries, e.g. `(2,0,1)`.
fn content_label(alpha: &[usize]) -> String {
    let parts: Vec<String> = alpha.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(","))
}

fn full_trace_rank(n: usize, k: usize) -> usize {
    use rayon::prelude::*;
    jw_core::combinat::compositions(k, n)
        .par_iter()
        .map(|a| TraceBlock::new(a, QuotientMode::Full).rank())
        .sum()
}

fn presentation(g: &GroupArgs) -> Result<(Presentation, String, Option<usize>)> {
    let kind = match g.group {
        GroupArg::Bp => GroupKind::BraidPermutation,
        GroupArg::Braid => GroupKind::Braid,
        GroupArg::Sym => GroupKind::Symmetric,
        GroupArg::Mccool => GroupKind::McCool,
        GroupArg::File => {
            let path = g.file.as_ref().context("--group file needs --file PATH")?;
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let p: Presentation = text.parse().with_context(|| format!("parsing {}", path.display()))?;
            return Ok((p, path.display().to_string(), g.n));
        }
    };
    let n = g.n.context("--n is required for builtin groups")?;
    check_n(n, 2)?;
    let label = format!("{}_{n}", format!("{:?}", g.group).to_lowercase());
    Ok((builtin(kind, n)?, label, Some(n)))
}
