use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use transversal_lab::caps::extract_realizable;
use transversal_lab::harness::{self, json as enc, render_svg, Instance, SvgOptions};
use transversal_lab::kernel::parse_rational;
use transversal_lab::lines3::{best_separating_plane, Candidates};
use transversal_lab::poly2::family_class2;
use transversal_lab::polytope3::polytopes_meet;
use transversal_lab::transversal::{best_line_in_plane, deepest_point2, run_pipeline, PipelineConfig};
use transversal_lab::{AnyLine3, Error, Plane3, Scalar};

#[derive(Parser)]
#[command(name = "tlab", version, about = "Exact experiments on line transversals of pairwise intersecting convex sets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Generator {
    Cap2,
    Flower2,
    Monotone3,
    Strict2_3d,
    Paraboloid,
}

#[derive(Clone, Copy, ValueEnum)]
enum CandidateSet {
    Pi,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a certified instance.
    Gen {
        generator: Generator,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Strip width for planar generators.
        #[arg(long, default_value = "1/10")]
        fatness: String,
        /// Box extension for strict2-3d.
        #[arg(long, default_value = "1")]
        height: String,
        /// Perturbation for paraboloid.
        #[arg(long, default_value = "0")]
        eps: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Load an instance, re-verify it and summarize its structure.
    Check { instance: PathBuf },
    /// Extract a realizable subfamily of the planar sets (or shadows).
    Realize {
        instance: PathBuf,
        #[arg(long)]
        target: usize,
    },
    /// Best candidate plane separating pairs of the instance lines.
    Separate {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "pi")]
        candidates: CandidateSet,
    },
    /// Deepest vertical line, or the best line inside a plane.
    Stab {
        instance: PathBuf,
        /// Plane `a,b,c,d` meaning `a·x + b·y + c·z = d`.
        #[arg(long, allow_hyphen_values = true)]
        plane: Option<String>,
    },
    /// Run the staged transversal search.
    Pipeline {
        instance: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run a property suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for counterexample instances.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Draw an instance as SVG.
    Render {
        instance: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Also draw the longest realization found (planar instances).
        #[arg(long)]
        realize: bool,
    },
}

/// Exit code 1: a property failed; 2: the input was unusable.
enum Fail {
    Property(String),
    Input(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Io(_) | Error::UnknownSuite(_) | Error::PreViolated(_) => Fail::Input(e.to_string()),
            _ => Fail::Property(e.to_string()),
        }
    }
}

type Run = Result<(), Fail>;

fn scalar(s: &str) -> Result<Scalar, Fail> {
    parse_rational(s).ok_or_else(|| Fail::Input(format!("bad rational `{s}`")))
}

fn load(path: &Path) -> Result<Instance, Fail> {
    Instance::load(path).map_err(|e| match e {
        Error::Parse(_) | Error::Io(_) => Fail::Input(format!("{}: {e}", path.display())),
        other => Fail::Property(format!("{}: {other}", path.display())),
    })
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn write(path: &Path, text: &str) -> Run {
    std::fs::write(path, text).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn gen(g: Generator, n: usize, seed: u64, fatness: &str, height: &str, eps: &str, out: Option<&Path>) -> Run {
    let inst = match g {
        Generator::Cap2 => harness::gen_cap_family2(n, &scalar(fatness)?, seed),
        Generator::Flower2 => harness::gen_flower2(n, &scalar(fatness)?, seed),
        Generator::Monotone3 => harness::gen_monotone_lines3(n, seed),
        Generator::Strict2_3d => harness::gen_strict2_family3(n, &scalar(height)?, seed),
        Generator::Paraboloid => harness::gen_paraboloid(n, &scalar(eps)?, seed),
    }?;
    let text = serde_json::to_string_pretty(&inst.to_json()).expect("json") + "\n";
    match out {
        Some(p) => write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check(path: &Path) -> Run {
    let inst = load(path)?;
    let mut out = json!({
        "dim": inst.dim(),
        "sets": inst.len(),
        "lines": inst.lines.len(),
        "generator": inst.generator(),
        "seed": inst.seed,
    });
    if !inst.is_empty() {
        out["shadow_class"] = json!(format!("{:?}", family_class2(&inst.shadows())));
    }
    let s = inst.polytopes();
    if !s.is_empty() {
        let pairwise = (0..s.len()).all(|i| (i + 1..s.len()).all(|j| polytopes_meet(&s[i], &s[j])));
        out["pairwise_intersecting"] = json!(pairwise);
    }
    if inst.lines.len() >= 3 {
        out["monotone"] = match transversal_lab::lines3::is_monotone(&inst.lines) {
            Ok(m) => json!(format!("{m:?}")),
            Err(e) => json!(e.to_string()),
        };
    }
    print(&out);
    Ok(())
}

fn realize(path: &Path, target: usize) -> Run {
    let inst = load(path)?;
    match extract_realizable(&inst.shadows(), target, harness::budget())? {
        Some(r) => {
            print(&enc::realization(&r, &inst.ids));
            Ok(())
        }
        None => Err(Fail::Property(format!("no realization of length {target}"))),
    }
}

fn separate(path: &Path, c: CandidateSet) -> Run {
    let inst = load(path)?;
    if inst.lines.len() < 2 {
        return Err(Fail::Input("instance has fewer than two lines".into()));
    }
    let c = match c {
        CandidateSet::Pi => Candidates::PiPlanes,
        CandidateSet::All => Candidates::PiPlusVertexTriples,
    };
    let sep = best_separating_plane(&inst.lines, c)?;
    print(&json!({"plane": enc::plane3(&sep.plane), "count": sep.count, "pairs": sep.pairs}));
    Ok(())
}

fn parse_plane(s: &str) -> Result<Plane3, Fail> {
    let c: Vec<Scalar> = s.split(',').map(|t| scalar(t.trim())).collect::<Result<_, _>>()?;
    let [a, b, cc, d]: [Scalar; 4] = c.try_into().map_err(|_| Fail::Input("plane needs four coefficients".into()))?;
    Plane3::new(a, b, cc, d).map_err(Fail::from)
}

fn ids_of(inst: &Instance, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&i| inst.ids[i].clone()).collect()
}

fn stab(path: &Path, plane: Option<&str>) -> Run {
    let inst = load(path)?;
    match plane {
        Some(p) => {
            let h = parse_plane(p)?;
            if inst.dim() != 3 {
                return Err(Fail::Input("--plane needs a spatial instance".into()));
            }
            let (line, count, ids) = best_line_in_plane(&h, inst.polytopes())?;
            print(&json!({"line": enc::any_line3(&line), "count": count, "crossed": ids_of(&inst, &ids)}));
        }
        None => {
            let (p, depth, ids) = deepest_point2(&inst.shadows())?;
            let line = AnyLine3::vertical(p.clone());
            print(&json!({"point": enc::point2(&p), "line": enc::any_line3(&line), "count": depth, "crossed": ids_of(&inst, &ids)}));
        }
    }
    Ok(())
}

fn pipeline(path: &Path, report: Option<&Path>) -> Run {
    let inst = load(path)?;
    if inst.dim() != 3 {
        return Err(Fail::Input("pipeline needs a spatial instance".into()));
    }
    let config = PipelineConfig::<Scalar> { budget: harness::budget(), ..PipelineConfig::default() };
    let r = run_pipeline(inst.polytopes(), &config)?;
    let out = json!({
        "line": enc::any_line3(&r.line),
        "crossed": ids_of(&inst, &r.crossed),
        "fraction": r.fraction.to_string(),
        "stage": r.stage,
        "diagnostics": r.diagnostics,
    });
    if let Some(p) = report {
        write(p, &(serde_json::to_string_pretty(&out).expect("json") + "\n"))?;
    }
    print(&out);
    Ok(())
}

fn verify(suite: &str, trials: usize, seed: u64, dir: &Path) -> Run {
    let rep = harness::verify_suite(suite, trials, seed)?;
    let mut shown = rep.to_json();
    for (k, f) in rep.failures.iter().enumerate() {
        if let Some(inst) = &f.instance {
            let p = dir.join(format!("{suite}-trial{}.json", f.trial));
            write(&p, &(serde_json::to_string_pretty(inst).expect("json") + "\n"))?;
            shown["failures"][k]["instance"] = json!(p.display().to_string());
        }
    }
    print(&shown);
    if rep.ok() {
        Ok(())
    } else {
        Err(Fail::Property(format!("{} of {} trials failed{}", rep.failures.len(), rep.trials, rep.aggregate_failure.map(|a| format!("; {a}")).unwrap_or_default())))
    }
}

fn render(path: &Path, svg: &Path, with_realization: bool) -> Run {
    let inst = load(path)?;
    let mut opts = SvgOptions { holes_up_to: 6, realization: None };
    if with_realization && inst.dim() == 2 {
        let sets = inst.polygons();
        for n in (3..=sets.len()).rev() {
            if let Ok(Some(r)) = extract_realizable(sets, n, harness::budget()) {
                opts.realization = Some(r);
                break;
            }
        }
    }
    write(svg, &render_svg(&inst, &opts))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Gen { generator, n, seed, fatness, height, eps, out } => {
            gen(*generator, *n, *seed, fatness, height, eps, out.as_deref())
        }
        Cmd::Check { instance } => check(instance),
        Cmd::Realize { instance, target } => realize(instance, *target),
        Cmd::Separate { instance, candidates } => separate(instance, *candidates),
        Cmd::Stab { instance, plane } => stab(instance, plane.as_deref()),
        Cmd::Pipeline { instance, report } => pipeline(instance, report.as_deref()),
        Cmd::Verify { suite, trials, seed, out_dir } => verify(suite, *trials, *seed, out_dir),
        Cmd::Render { instance, svg, realize } => render(instance, svg, *realize),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Property(m)) => {
            eprintln!("tlab: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Input(m)) => {
            eprintln!("tlab: {m}");
            ExitCode::from(2)
        }
    }
}
