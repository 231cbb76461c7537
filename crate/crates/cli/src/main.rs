mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use rootmonoid::actions::{ambient_torus_action, he_connected_pairs, ray_subtorus_action, root_subgroup_action};
use rootmonoid::arith::parse_rat;
use rootmonoid::center::{center_cross_validate, center_equations, default_center_bound, CenterLocus};
use rootmonoid::demazure::{
    compatible_pairs_with_differences, enumerate_roots, is_compatible_set, Violation, DEFAULT_ROOT_BOUND,
};
use rootmonoid::idempotents::{classify, classify_all, verify_orbit_structure, IdempotentLocus};
use rootmonoid::io::{cone_to_json, from_json, monoid_to_json, to_json, PointFile, RootPairsFile};
use rootmonoid::lattice_core::{hilbert_basis, is_regular_face, DEFAULT_BOX_BOUND};
use rootmonoid::monoid::{Point, RootMonoid};
use rootmonoid::presets::{affine_space_monoid, quadric_cylinder_monoid, CylinderParams};
use rootmonoid::sampling::{random_invertible_point, random_point, rng};
use rootmonoid::{Error, Result};

use input::{int_list, load_cone, load_monoid, load_point, rationals, ray_list, read_source, vector};
use report::{RunReport, Table};

#[derive(Parser)]
#[command(name = "rootmonoid", version, about = "Root monoids on affine toric varieties, in exact arithmetic")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every sampled check.
    #[arg(long, global = true, env = "ROOTMONOID_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cones, faces and semigroup generators.
    #[command(subcommand)]
    Cone(ConeCmd),
    /// Demazure roots and compatible root pairs.
    #[command(subcommand)]
    Roots(RootsCmd),
    /// Build a monoid and compute with its points.
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Torus, one-parameter and root subgroup actions.
    #[command(subcommand)]
    Act(ActCmd),
    /// Idempotents orbit by orbit.
    #[command(subcommand)]
    Idem(IdemCmd),
    /// Equations of the center.
    #[command(subcommand)]
    Center(CenterCmd),
    /// Built-in example monoids.
    #[command(subcommand)]
    Preset(PresetCmd),
}

#[derive(Args)]
struct ConeArg {
    /// Cone file; standard input when omitted.
    #[arg(long)]
    cone: Option<PathBuf>,
}

#[derive(Args)]
struct MonoidArg {
    /// Monoid file; standard input when omitted.
    #[arg(long)]
    monoid: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConeCmd {
    /// The dual cone.
    Dual(ConeArg),
    /// All faces with their regularity.
    Faces(ConeArg),
    /// Hilbert basis of the semigroup of the dual cone.
    Hilbert {
        #[command(flatten)]
        cone: ConeArg,
        #[arg(long, default_value_t = DEFAULT_BOX_BOUND)]
        box_bound: u64,
    },
}

#[derive(Subcommand)]
enum RootsCmd {
    /// Roots of one ray inside a max-norm box.
    Enumerate {
        #[command(flatten)]
        cone: ConeArg,
        #[arg(long)]
        ray: usize,
        #[arg(long, default_value_t = DEFAULT_ROOT_BOUND)]
        bound: u64,
    },
    /// Compatibility of a root pair file with a face.
    Check {
        #[command(flatten)]
        cone: ConeArg,
        /// Face ray indices, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        pairs: PathBuf,
    },
    /// Compatible pairs with prescribed differences `e1 - e2`.
    Construct {
        #[command(flatten)]
        cone: ConeArg,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        /// JSON list of difference vectors.
        #[arg(long)]
        differences: PathBuf,
    },
}

#[derive(Subcommand)]
enum MonoidCmd {
    /// Validate a cone, face and root pairs and emit the monoid file.
    Build {
        #[command(flatten)]
        cone: ConeArg,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        pairs: PathBuf,
    },
    /// Product of two points.
    Mul {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
    },
    /// Inverse of an invertible point.
    Inv {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long)]
        x: PathBuf,
    },
    /// Associativity, neutral element and inverses on random samples.
    Check {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum ActCmd {
    /// Ambient torus element given on the standard basis of M.
    Torus {
        #[command(flatten)]
        monoid: MonoidArg,
        /// Nonzero rationals, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        x: PathBuf,
    },
    /// One-parameter subgroup of a lattice vector of N.
    Ray {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        x: PathBuf,
    },
    /// Root subgroup of a Demazure root.
    Root {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        x: PathBuf,
    },
    /// Pairs of orbits connected by a root subgroup.
    Pairs {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
    },
}

#[derive(Subcommand)]
enum IdemCmd {
    /// Idempotent locus of one orbit, or of every orbit.
    Classify {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long, allow_hyphen_values = true)]
        face: Option<String>,
    },
    /// Sampled check of the idempotent locus and orbit closure of a face.
    Verify {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long, allow_hyphen_values = true)]
        face: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum CenterCmd {
    /// Vanishing conditions and equalities cutting out the center.
    Equations {
        #[command(flatten)]
        monoid: MonoidArg,
        /// l1 bound of the index search; defaults to twice the largest generator degree plus 2.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Cross-check the equations against sampled conjugation.
    Verify {
        #[command(flatten)]
        monoid: MonoidArg,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum PresetCmd {
    /// Monoid on affine n-space with k root pairs.
    Affine {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Exponent vector of `e1` for one pair, length n - k; repeat per pair.
        #[arg(long, allow_hyphen_values = true)]
        a: Vec<String>,
        /// Exponent vector of `e2` for one pair; repeat per pair.
        #[arg(long, allow_hyphen_values = true)]
        b: Vec<String>,
    },
    /// Monoid on the cylinder over the quadric cone.
    Cylinder {
        /// a1,b1,a2,b2,c1,d1,c2,d2
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
}

/// What a command produced.
enum Output {
    /// A file in one of the library formats; printed as is.
    Document(String),
    /// JSON value for `--json`, text otherwise.
    Data(serde_json::Value, String),
    Report(RunReport),
}

struct Ctx {
    json: bool,
    seed: u64,
    argv: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        argv: std::env::args().skip(1).collect(),
    };
    match run(&ctx, cli.command) {
        Ok(Output::Document(s)) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Data(v, text)) => {
            if ctx.json {
                println!("{}", pretty(&v));
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r)) => {
            if ctx.json {
                println!("{}", pretty(&r));
            } else {
                print!("{}", r.render_text());
            }
            if r.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    to_json(v)
}

fn run(ctx: &Ctx, cmd: Command) -> Result<Output> {
    match cmd {
        Command::Cone(c) => cone_cmd(c),
        Command::Roots(c) => roots_cmd(ctx, c),
        Command::Monoid(c) => monoid_cmd(ctx, c),
        Command::Act(c) => act_cmd(c),
        Command::Idem(c) => idem_cmd(ctx, c),
        Command::Center(c) => center_cmd(ctx, c),
        Command::Preset(c) => preset_cmd(c),
    }
}

fn point_doc(m: &RootMonoid, x: &Point) -> String {
    to_json(&PointFile::from_point(m.variety(), x))
}

fn point_line(m: &RootMonoid, x: &Point) -> String {
    serde_json::to_string(&PointFile::from_point(m.variety(), x)).expect("points serialize")
}

fn rays_text(r: &[usize]) -> String {
    format!("{r:?}")
}

fn cone_cmd(cmd: ConeCmd) -> Result<Output> {
    match cmd {
        ConeCmd::Dual(a) => {
            let c = load_cone(a.cone.as_deref())?;
            Ok(Output::Document(cone_to_json(&c.dual())))
        }
        ConeCmd::Faces(a) => {
            let c = load_cone(a.cone.as_deref())?;
            let mut rows = Vec::new();
            let mut t = Table::new(&["rays", "dim", "regular", "functional"]);
            for f in c.faces() {
                let regular = is_regular_face(&c, &f)?;
                t.row(vec![rays_text(&f.rays), f.dim.to_string(), regular.to_string(), f.functional.to_string()]);
                rows.push(json!({ "rays": f.rays, "dim": f.dim, "regular": regular, "functional": f.functional }));
            }
            Ok(Output::Data(json!(rows), t.render()))
        }
        ConeCmd::Hilbert { cone, box_bound } => {
            let c = load_cone(cone.cone.as_deref())?;
            let hb = hilbert_basis(&c.dual(), box_bound)?;
            let mut text = String::new();
            for g in &hb.generators {
                text.push_str(&format!("{g}\n"));
            }
            if !hb.certified {
                text.push_str("(not certified: box bound too small)\n");
            }
            Ok(Output::Data(json!(hb), text))
        }
    }
}

fn roots_cmd(ctx: &Ctx, cmd: RootsCmd) -> Result<Output> {
    match cmd {
        RootsCmd::Enumerate { cone, ray, bound } => {
            let c = load_cone(cone.cone.as_deref())?;
            let roots = enumerate_roots(&c, ray, bound)?;
            let text: String = roots.iter().map(|r| format!("{}\n", r.vector)).collect();
            Ok(Output::Data(json!(roots), text))
        }
        RootsCmd::Check { cone, tau, pairs } => {
            let c = load_cone(cone.cone.as_deref())?;
            let face = c.face(&ray_list(&tau)?)?;
            let set = from_json::<RootPairsFile>(&read_source(Some(&pairs))?)?.into_set();
            let rep = is_compatible_set(&c, &face, &set);
            let mut run = RunReport::new(ctx.argv.clone(), ctx.seed);
            let mut bad: Vec<Option<usize>> = rep
                .violations
                .iter()
                .map(|v| match v {
                    Violation::LengthMismatch { .. } => None,
                    Violation::Rank { r, .. } | Violation::Kronecker { r, .. } | Violation::NotARoot { r, .. } => {
                        Some(*r)
                    }
                })
                .collect();
            bad.sort();
            bad.dedup();
            let failed_pairs = bad.iter().flatten().count();
            let messages: Vec<String> = rep.violations.iter().map(violation_text).collect();
            run.absorb("compatibility", set.len().saturating_sub(failed_pairs), bad.len(), &messages);
            run.details = Some(json!(rep));
            Ok(Output::Report(run))
        }
        RootsCmd::Construct { cone, tau, differences } => {
            let c = load_cone(cone.cone.as_deref())?;
            let face = c.face(&ray_list(&tau)?)?;
            let text = read_source(Some(&differences))?;
            let diffs = rootmonoid::io::parse_vectors_json(&text, c.rank())?;
            let set = compatible_pairs_with_differences(&c, &face, &diffs)?;
            Ok(Output::Document(to_json(&RootPairsFile {
                tau_rays: set.tau_rays,
                pairs: set.pairs,
            })))
        }
    }
}

fn violation_text(v: &Violation) -> String {
    rootmonoid::demazure::CompatibilityReport {
        compatible: false,
        violations: vec![v.clone()],
    }
    .to_string()
}

fn monoid_cmd(ctx: &Ctx, cmd: MonoidCmd) -> Result<Output> {
    match cmd {
        MonoidCmd::Build { cone, tau, pairs } => {
            let c = load_cone(cone.cone.as_deref())?;
            let rays = ray_list(&tau)?;
            let set = from_json::<RootPairsFile>(&read_source(Some(&pairs))?)?.into_set();
            let face = c.face(&rays)?;
            let m = RootMonoid::build(c, &face, set)?;
            Ok(Output::Document(monoid_to_json(&m)))
        }
        MonoidCmd::Mul { monoid, x, y } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let x = load_point(&x, m.variety())?;
            let y = load_point(&y, m.variety())?;
            Ok(Output::Document(point_doc(&m, &m.multiply(&x, &y)?)))
        }
        MonoidCmd::Inv { monoid, x } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let x = load_point(&x, m.variety())?;
            Ok(Output::Document(point_doc(&m, &m.inverse(&x)?)))
        }
        MonoidCmd::Check { monoid, samples } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            Ok(Output::Report(monoid_check(ctx, &m, samples)?))
        }
    }
}

fn monoid_check(ctx: &Ctx, m: &RootMonoid, samples: usize) -> Result<RunReport> {
    let mut run = RunReport::new(ctx.argv.clone(), ctx.seed);
    let mut r = rng(ctx.seed);
    let v = m.variety();
    let e = m.neutral();
    let show = |x: &Point| point_line(m, x);
    for _ in 0..samples {
        let x = random_point(v, &mut r);
        let y = random_point(v, &mut r);
        let z = random_point(v, &mut r);
        let l = m.multiply(&m.multiply(&x, &y)?, &z)?;
        let rr = m.multiply(&x, &m.multiply(&y, &z)?)?;
        run.check_eq("associativity", || vec![show(&x), show(&y), show(&z)], show(&l), show(&rr));
        run.check_eq("left neutral", || vec![show(&x)], show(&m.multiply(&e, &x)?), show(&x));
        run.check_eq("right neutral", || vec![show(&x)], show(&m.multiply(&x, &e)?), show(&x));
    }
    for _ in 0..samples {
        let y = random_invertible_point(m, &mut r)?;
        let inv = m.inverse(&y)?;
        run.check_eq("right inverse", || vec![show(&y)], show(&m.multiply(&y, &inv)?), show(&e));
        run.check_eq("left inverse", || vec![show(&y)], show(&m.multiply(&inv, &y)?), show(&e));
    }
    run.details = Some(json!({
        "active": m.is_active(),
        "commutative": m.is_commutative(),
        "generators": v.generators(),
    }));
    Ok(run)
}

fn act_cmd(cmd: ActCmd) -> Result<Output> {
    match cmd {
        ActCmd::Torus { monoid, t, x } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let x = load_point(&x, m.variety())?;
            let t = rationals(&t)?;
            if t.len() != m.variety().rank() {
                return Err(Error::DimensionMismatch {
                    expected: m.variety().rank(),
                    found: t.len(),
                });
            }
            Ok(Output::Document(point_doc(&m, &ambient_torus_action(m.variety(), &t, &x)?)))
        }
        ActCmd::Ray { monoid, p, t, x } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let x = load_point(&x, m.variety())?;
            let p = vector(&p, m.variety().rank())?;
            let t = parse_rat(&t)?;
            Ok(Output::Document(point_doc(&m, &ray_subtorus_action(m.variety(), &p, &t, &x)?)))
        }
        ActCmd::Root { monoid, e, a, x } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let x = load_point(&x, m.variety())?;
            let e = vector(&e, m.variety().rank())?;
            let a = parse_rat(&a)?;
            Ok(Output::Document(point_doc(&m, &root_subgroup_action(m.variety(), &e, &a, &x)?)))
        }
        ActCmd::Pairs { monoid, e } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let e = vector(&e, m.variety().rank())?;
            let pairs = he_connected_pairs(m.cone(), &e)?;
            let mut t = Table::new(&["from", "to"]);
            for p in &pairs {
                t.row(vec![rays_text(&p.gamma1.rays), rays_text(&p.gamma2.rays)]);
            }
            let v: Vec<_> = pairs
                .iter()
                .map(|p| json!({ "gamma1": p.gamma1.rays, "gamma2": p.gamma2.rays }))
                .collect();
            Ok(Output::Data(json!(v), t.render()))
        }
    }
}

fn locus_json(m: &RootMonoid, l: &IdempotentLocus) -> serde_json::Value {
    json!({
        "face": l.gamma.rays,
        "case": l.case_tag,
        "equations": l.equations,
        "span_face": l.span_face.as_ref().map(|f| f.rays.clone()),
        "witness": l.witness.as_ref().map(|x| PointFile::from_point(m.variety(), x)),
        "certificate": l.certificate,
    })
}

fn idem_cmd(ctx: &Ctx, cmd: IdemCmd) -> Result<Output> {
    match cmd {
        IdemCmd::Classify { monoid, face } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let loci = match face {
                Some(f) => {
                    let id = m.variety().face_id(&ray_list(&f)?)?;
                    vec![classify(&m, m.variety().face(id))?]
                }
                None => classify_all(&m)?,
            };
            let mut t = Table::new(&["face", "case", "equations chi^u = 1"]);
            for l in &loci {
                let eqs: Vec<String> = l.equations.iter().map(|u| u.to_string()).collect();
                t.row(vec![
                    rays_text(&l.gamma.rays),
                    format!("{:?}", l.case_tag).to_lowercase(),
                    eqs.join(" "),
                ]);
            }
            let v: Vec<_> = loci.iter().map(|l| locus_json(&m, l)).collect();
            Ok(Output::Data(json!(v), t.render()))
        }
        IdemCmd::Verify { monoid, face, samples } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let id = m.variety().face_id(&ray_list(&face)?)?;
            let gamma = m.variety().face(id).clone();
            let locus = classify(&m, &gamma)?;
            let mut run = RunReport::new(ctx.argv.clone(), ctx.seed);
            let mut r = rng(ctx.seed);
            if locus.is_empty() {
                let v = m.variety();
                for _ in 0..samples {
                    let x = rootmonoid::sampling::point_on_face(v, id, &mut r);
                    let idem = m.is_idempotent(&x)?;
                    run.check_eq("no idempotent in orbit", || vec![point_line(&m, &x)], idem.to_string(), "false".into());
                }
                run.details = Some(locus_json(&m, &locus));
                return Ok(Output::Report(run));
            }
            for _ in 0..samples {
                let x = rootmonoid::idempotents::sample_locus_point(&m, &locus, &mut r)?;
                let idem = m.is_idempotent(&x)?;
                run.check_eq("locus point is idempotent", || vec![point_line(&m, &x)], idem.to_string(), "true".into());
            }
            let orbit = verify_orbit_structure(&m, &gamma, samples, ctx.seed)?;
            run.absorb("orbit structure", orbit.passed, orbit.failed, &orbit.counterexamples);
            let (mut reached, mut expected) = (orbit.reached.clone(), orbit.expected.clone());
            reached.sort();
            expected.sort();
            if reached == expected {
                run.pass();
            } else {
                run.fail(report::Counterexample {
                    check: "closure faces".into(),
                    inputs: vec![rays_text(&gamma.rays)],
                    lhs: Some(format!("{reached:?}")),
                    rhs: Some(format!("{expected:?}")),
                });
            }
            run.details = Some(json!({ "locus": locus_json(&m, &locus), "closure": expected }));
            Ok(Output::Report(run))
        }
    }
}

fn locus_text(l: &CenterLocus) -> String {
    let mut t = Table::new(&["condition", "character", "other side"]);
    for u in &l.vanishing {
        t.row(vec!["vanishes".into(), format!("chi^{u}"), "0".into()]);
    }
    for eq in &l.equalities {
        t.row(vec![format!("pair {}", eq.r), format!("chi^{}", eq.lhs), format!("chi^{}", eq.rhs)]);
    }
    t.render()
}

fn bound_for(m: &RootMonoid, bound: Option<u64>) -> u64 {
    bound.unwrap_or_else(|| default_center_bound(m))
}

fn center_cmd(ctx: &Ctx, cmd: CenterCmd) -> Result<Output> {
    match cmd {
        CenterCmd::Equations { monoid, bound } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let l = center_equations(&m, bound_for(&m, bound))?;
            Ok(Output::Data(json!(l), locus_text(&l)))
        }
        CenterCmd::Verify { monoid, bound, samples } => {
            let m = load_monoid(monoid.monoid.as_deref())?;
            let l = center_equations(&m, bound_for(&m, bound))?;
            let rep = center_cross_validate(&m, &l, samples, ctx.seed)?;
            let mut run = RunReport::new(ctx.argv.clone(), ctx.seed);
            let failed = rep.soundness_failed + rep.completeness_failed;
            let checked = rep.soundness_checked + rep.completeness_checked;
            run.absorb("center", checked - failed, failed, &rep.counterexamples);
            run.details = Some(json!({ "locus": l, "locus_faces": rep.locus_faces }));
            run.summary = Some(locus_text(&l));
            Ok(Output::Report(run))
        }
    }
}

fn preset_cmd(cmd: PresetCmd) -> Result<Output> {
    let m = match cmd {
        PresetCmd::Affine { n, k, a, b } => {
            let a: Vec<Vec<i64>> = a.iter().map(|s| int_list(s)).collect::<Result<_>>()?;
            let b: Vec<Vec<i64>> = b.iter().map(|s| int_list(s)).collect::<Result<_>>()?;
            affine_space_monoid(n, k, &a, &b)?
        }
        PresetCmd::Cylinder { params } => quadric_cylinder_monoid(CylinderParams::from_slice(&int_list(&params)?)?)?,
    };
    Ok(Output::Document(monoid_to_json(&m)))
}
