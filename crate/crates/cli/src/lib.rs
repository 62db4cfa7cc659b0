//! `amplify` command-line front end.
//!
//! Exit codes: `0` success or a true verdict, `1` a false verdict, `2`
//! usage, I/O or parse errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use amplify_core::classify::{validate_lattice_iso_report, LevelPartition};
use amplify_core::{
    amplified_transitive_closure, canonical_form, check_lemma23, decide_gauge_iso,
    decide_stable_iso, normalize_lattice_iso, parse_graph, reconstruct, search_bounded_iso,
    skew_window, t_move, write_graph, AmplifiedGraph, LatticeIsoData, Lemma23Verdict,
    Lemma23Violation, VHSpec, VertexId,
};
use clap::{Parser, Subcommand};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "amplify", version, about = "Classify amplified graph algebras")]
pub struct Cli {
    /// Print nothing; report only through the exit code.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded (gauge-equivariant) isomorphism: E ≅ F.
    Iso { e: PathBuf, f: PathBuf },
    /// Stable isomorphism: tE ≅ tF.
    StableIso { e: PathBuf, f: PathBuf },
    /// Rebuild E from its level-zero principal hereditary sets.
    Reconstruct { e: PathBuf },
    /// Amplified transitive closure tE.
    Tclosure { e: PathBuf },
    /// Add u -> w given u -> v and v -> w.
    Tmove {
        e: PathBuf,
        u: String,
        v: String,
        w: String,
    },
    /// Check whether levels `v=n` describe a translate of H₀.
    CheckH0 {
        e: PathBuf,
        /// One `vertex=level` pair per vertex.
        #[arg(required = true, allow_hyphen_values = true)]
        levels: Vec<String>,
    },
    /// Validate a lattice isomorphism `v=x@c` and normalize it to fix H₀.
    NormalizeIso {
        e: PathBuf,
        f: PathBuf,
        /// One `vertex=image@shift` entry per vertex of E.
        #[arg(required = true, allow_hyphen_values = true)]
        map: Vec<String>,
    },
    /// Canonical form.
    Canon { e: PathBuf },
    /// Finite band of the skew product E ×₁ ℤ.
    SkewWindow {
        e: PathBuf,
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, required = true)]
        window: Vec<i64>,
    },
    /// Exhaustive bounded search for a lattice isomorphism, compared with `iso`.
    Oracle {
        e: PathBuf,
        f: PathBuf,
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn load(path: &Path) -> Result<AmplifiedGraph, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn names(g: &AmplifiedGraph, vs: &[VertexId]) -> String {
    vs.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(", ")
}

fn parse_level(entry: &str) -> Result<(String, i64), Failure> {
    let (name, level) = entry
        .split_once('=')
        .ok_or_else(|| Failure(format!("expected `vertex=level`, got `{entry}`")))?;
    let level = level
        .parse()
        .map_err(|_| Failure(format!("invalid level in `{entry}`")))?;
    Ok((name.to_owned(), level))
}

fn parse_lattice_map(
    e: &AmplifiedGraph,
    f: &AmplifiedGraph,
    entries: &[String],
) -> Result<LatticeIsoData, Failure> {
    let n = e.vertex_count();
    let mut vertex_map = vec![None; n];
    let mut shift = vec![0; n];
    for entry in entries {
        let bad = || Failure(format!("expected `vertex=image@shift`, got `{entry}`"));
        let (src, rest) = entry.split_once('=').ok_or_else(bad)?;
        let (dst, c) = rest.split_once('@').ok_or_else(bad)?;
        let v = e.vertex(src)?;
        if vertex_map[v.0].is_some() {
            return Err(Failure(format!("vertex `{src}` mapped twice")));
        }
        vertex_map[v.0] = Some(f.vertex(dst)?);
        shift[v.0] = c.parse().map_err(|_| bad())?;
    }
    let vertex_map = vertex_map
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| Failure(format!("no image for `{}`", e.name(VertexId(v))))))
        .collect::<Result<_, _>>()?;
    Ok(LatticeIsoData { vertex_map, shift })
}

fn render_lattice_map(e: &AmplifiedGraph, f: &AmplifiedGraph, rho: &LatticeIsoData) -> String {
    e.vertices()
        .map(|v| {
            format!(
                "{}->{}@{}",
                e.name(v),
                f.name(rho.vertex_map[v.0]),
                rho.shift[v.0]
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn execute(command: &Command, out: &mut String) -> Result<i32, Failure> {
    let code = match command {
        Command::Iso { e, f } => {
            let (e, f) = (load(e)?, load(f)?);
            let verdict = decide_gauge_iso(&e, &f);
            out.push_str(&verdict.render(&e, &f));
            verdict_code(verdict.isomorphic)
        }
        Command::StableIso { e, f } => {
            let (e, f) = (load(e)?, load(f)?);
            let verdict = decide_stable_iso(&e, &f);
            out.push_str(&verdict.render(&e, &f));
            verdict_code(verdict.isomorphic)
        }
        Command::Reconstruct { e } => {
            let e = load(e)?;
            let r = reconstruct(&e)?;
            let edges: Vec<String> = r
                .ebar
                .edges()
                .map(|(h, k)| format!("{}->{}", r.ebar.name(h), r.ebar.name(k)))
                .collect();
            writeln!(out, "vertices: {}", r.ebar.names().join(" ")).unwrap();
            writeln!(
                out,
                "edges: {}",
                if edges.is_empty() {
                    "none".to_owned()
                } else {
                    edges.join(", ")
                }
            )
            .unwrap();
            let witness: Vec<String> = e
                .vertices()
                .map(|v| format!("{}->{}", e.name(v), r.ebar.name(r.iso[v.0])))
                .collect();
            writeln!(out, "witness: {}", witness.join(", ")).unwrap();
            writeln!(out, "verified: {}", r.verified).unwrap();
            verdict_code(r.verified)
        }
        Command::Tclosure { e } => {
            out.push_str(&write_graph(&amplified_transitive_closure(&load(e)?)));
            EXIT_TRUE
        }
        Command::Tmove { e, u, v, w } => {
            let g = load(e)?;
            let moved = t_move(&g, g.vertex(u)?, g.vertex(v)?, g.vertex(w)?)?;
            out.push_str(&write_graph(&moved));
            EXIT_TRUE
        }
        Command::CheckH0 { e, levels } => {
            let g = load(e)?;
            let pairs = levels
                .iter()
                .map(|s| parse_level(s))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = VHSpec::from_named(&g, &pairs)?;
            let report = check_lemma23(&g, &spec)?;
            match report.verdict {
                Lemma23Verdict::Constant(n) => {
                    writeln!(out, "verdict: constant({n})").unwrap();
                    EXIT_TRUE
                }
                Lemma23Verdict::Violated => {
                    writeln!(out, "verdict: violated").unwrap();
                    if let Some(violation) = report.violation {
                        writeln!(out, "condition: {}", violation.tag()).unwrap();
                        match violation {
                            Lemma23Violation::Connectivity { separated: (a, b) } => {
                                writeln!(out, "witness: ({}, {})", g.name(a), g.name(b)).unwrap()
                            }
                            Lemma23Violation::ShiftContainment {
                                pair: (a, b),
                                shift,
                            } => writeln!(out, "witness: ({}, {}) n={shift}", g.name(a), g.name(b))
                                .unwrap(),
                        }
                    }
                    if let Some(LevelPartition {
                        pivot,
                        lower,
                        upper,
                    }) = report.partition
                    {
                        writeln!(
                            out,
                            "partition: pivot={} L={{{}}} G={{{}}}",
                            g.name(pivot),
                            names(&g, &lower),
                            names(&g, &upper)
                        )
                        .unwrap();
                    }
                    EXIT_FALSE
                }
            }
        }
        Command::NormalizeIso { e, f, map } => {
            let (e, f) = (load(e)?, load(f)?);
            let rho = parse_lattice_map(&e, &f, map)?;
            let check = validate_lattice_iso_report(&e, &f, &rho)?;
            writeln!(out, "valid: {}", check.valid).unwrap();
            writeln!(out, "range: {}..{}", check.range.0, check.range.1).unwrap();
            if let Some((v, w, k)) = check.counterexample {
                writeln!(out, "counterexample: {} {} k={k}", e.name(v), e.name(w)).unwrap();
                EXIT_FALSE
            } else {
                let normalized = normalize_lattice_iso(&e, &f, &rho)?;
                writeln!(
                    out,
                    "normalized: {}",
                    render_lattice_map(&e, &f, &normalized.iso)
                )
                .unwrap();
                let shifts: Vec<String> = normalized
                    .component_shifts
                    .iter()
                    .map(i64::to_string)
                    .collect();
                writeln!(out, "component_shifts: {}", shifts.join(", ")).unwrap();
                EXIT_TRUE
            }
        }
        Command::Canon { e } => {
            out.push_str(&canonical_form(&load(e)?));
            EXIT_TRUE
        }
        Command::SkewWindow { e, window } => {
            let window_graph = skew_window(&load(e)?, window[0], window[1])?;
            out.push_str(&write_graph(window_graph.graph()));
            EXIT_TRUE
        }
        Command::Oracle { e, f, bound } => {
            let (e, f) = (load(e)?, load(f)?);
            let found = search_bounded_iso(&e, &f, *bound)?;
            let gauge = decide_gauge_iso(&e, &f).isomorphic;
            writeln!(out, "found: {}", found.is_some()).unwrap();
            if let Some(rho) = &found {
                writeln!(out, "lattice_map: {}", render_lattice_map(&e, &f, rho)).unwrap();
            }
            writeln!(out, "gauge_iso: {gauge}").unwrap();
            writeln!(out, "agrees: {}", gauge == found.is_some()).unwrap();
            verdict_code(found.is_some())
        }
    };
    Ok(code)
}

fn verdict_code(ok: bool) -> i32 {
    if ok {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

/// Runs the CLI on `argv` (including the program name), writing the report
/// to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let quiet = argv.iter().any(|a| a == "--quiet");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_TRUE
            };
            if !quiet {
                let text = e.render().to_string();
                let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
                let _ = sink.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut out = String::new();
    match execute(&cli.command, &mut out) {
        Ok(code) => {
            if !cli.quiet {
                let _ = stdout.write_all(out.as_bytes());
            }
            code
        }
        Err(Failure(message)) => {
            if !cli.quiet {
                let _ = writeln!(stderr, "error: {message}");
            }
            EXIT_ERROR
        }
    }
}
