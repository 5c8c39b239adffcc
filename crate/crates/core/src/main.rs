use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use goodsg::duality::{check_duality, is_symmetric_complement};
use goodsg::ideal::GoodIdeal;
use goodsg::io::{emit_semigroup, load_semigroup};
use goodsg::levels::{apery_levels, format_levels, LevelPartition};
use goodsg::planecurve::{
    blowup_numerical, reconstruct_from_blowup, verify_apery_shift, verify_apery_shift_local, PlaneBranchProfile,
};
use goodsg::products::{invariants as product_invariants, ProductContext};
use goodsg::wellbehaved::{classify_level, d2_equivalences, is_well_behaved, well_behaved_violations};
use goodsg::{plot, GoodSemigroup, IndexSet, IoError, Membership, Point};

#[derive(Parser)]
#[command(name = "goodsg", version, about = "Good semigroups, Apéry sets and their levels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the good-semigroup axioms on [0, c + e + margin].
    Validate { file: PathBuf },
    /// Levels of Ap(S, ω).
    Apery {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        omega: Vec<i64>,
    },
    /// Duality of the levels of Ap(S, ω) (ω defaults to the multiplicity).
    Duality {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        omega: Option<Vec<i64>>,
    },
    /// Levels of a product of two semigroups with a product ideal.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_delimiter = ',')]
        omega1: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',')]
        omega2: Option<Vec<i64>>,
    },
    /// Well-behavedness of Ap(S, ω) and, in the plane, the shape of each level.
    Wellbehaved {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        omega: Option<Vec<i64>>,
    },
    /// Blowup of a plane branch, or the shift theorem for a plane curve.
    Blowup {
        file: PathBuf,
        /// Local blowup to compare against when the blowup does not split.
        #[arg(long)]
        local: Option<PathBuf>,
    },
    /// Rebuild a two-branch semigroup from its branches' generators.
    Reconstruct {
        /// Generators of the first branch, comma separated.
        #[arg(value_parser = parse_gens)]
        first: Gens,
        #[arg(value_parser = parse_gens)]
        second: Gens,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Picture of Ap(S, ω) in the plane.
    Plot {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        omega: Option<Vec<i64>>,
        /// Write SVG here; otherwise print ASCII.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

type Gens = Vec<i64>;

fn parse_gens(text: &str) -> Result<Gens, String> {
    text.split(',').map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"))).collect()
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

fn semantic(msg: impl ToString) -> Failure {
    Failure { code: 1, msg: msg.to_string() }
}

fn usage(msg: impl ToString) -> Failure {
    Failure { code: 2, msg: msg.to_string() }
}

type Outcome = Result<bool, Failure>;

fn load(path: &Path) -> Result<GoodSemigroup, Failure> {
    load_semigroup(path).map_err(|e| match e {
        IoError::Semigroup { .. } => semantic(e),
        _ => usage(e),
    })
}

fn box_margin() -> Result<i64, Failure> {
    match std::env::var("GOODSG_BOX_MARGIN") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("GOODSG_BOX_MARGIN must be an integer, got {v:?}"))),
        Err(_) => Ok(1),
    }
}

fn omega_or_multiplicity(s: &GoodSemigroup, omega: Option<Vec<i64>>) -> Result<Point, Failure> {
    let w = omega.map(Point::new).unwrap_or_else(|| s.multiplicity().clone());
    if w.dim() != s.dim() {
        return Err(usage(format!("ω = {w} has dimension {}, expected {}", w.dim(), s.dim())));
    }
    Ok(w)
}

fn levels(s: &GoodSemigroup, w: &Point) -> Result<(GoodIdeal, LevelPartition), Failure> {
    let p = apery_levels(s, w).map_err(semantic)?;
    let e = GoodIdeal::principal(s, w).map_err(semantic)?;
    Ok((e, p))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn validate(file: &Path) -> Outcome {
    let s = load(file)?;
    let report = s.validate(box_margin()?);
    println!("conductor {}  box [0, {}]", s.conductor(), report.box_hi);
    for v in &report.violations {
        println!("  {v}");
    }
    println!("{}", verdict(report.is_good()));
    Ok(report.is_good())
}

fn apery(file: &Path, omega: Vec<i64>) -> Outcome {
    let s = load(file)?;
    let w = omega_or_multiplicity(&s, Some(omega))?;
    let (_, p) = levels(&s, &w)?;
    print!("{}", format_levels(&p));
    Ok(true)
}

fn duality(file: &Path, omega: Option<Vec<i64>>) -> Outcome {
    let s = load(file)?;
    let w = omega_or_multiplicity(&s, omega)?;
    let (e, p) = levels(&s, &w)?;
    println!("symmetric semigroup: {}", s.is_symmetric());
    println!("symmetric complement: {}", is_symmetric_complement(&s, &e, &p));
    let report = check_duality(&s, &e, &p);
    print!("{report}");
    Ok(report.passes())
}

fn product(first: &Path, second: &Path, omega1: Option<Vec<i64>>, omega2: Option<Vec<i64>>) -> Outcome {
    let s1 = load(first)?;
    let s2 = load(second)?;
    let w1 = omega_or_multiplicity(&s1, omega1)?;
    let w2 = omega_or_multiplicity(&s2, omega2)?;
    let ctx = ProductContext::principal(&s1, &w1, &s2, &w2).map_err(semantic)?;
    print!("{}", format_levels(&ctx.p));
    let mut ok = true;
    for (name, v) in product_invariants::all(&ctx) {
        println!("{name}: {}", verdict(v.is_empty()));
        for line in v.iter().take(5) {
            println!("  {line}");
        }
        ok &= v.is_empty();
    }
    Ok(ok)
}

fn wellbehaved(file: &Path, omega: Option<Vec<i64>>) -> Outcome {
    let s = load(file)?;
    let w = omega_or_multiplicity(&s, omega)?;
    let (e, p) = levels(&s, &w)?;
    let wb = is_well_behaved(&s, &e, &p);
    println!("well-behaved: {wb}");
    for a in well_behaved_violations(&s, &e, &p.frame).iter().take(10) {
        println!("  complete infimum inside A: {a}");
    }
    if s.dim() <= 2 {
        let (a, b, c) = d2_equivalences(&s, &e, &p).map_err(semantic)?;
        println!("well-behaved {a}, same-level meets {b}, dominated by next level {c}");
    }
    if s.dim() == 2 && wb {
        for i in 1..=p.n() {
            print!("{}", classify_level(&s, &e, &p, i).map_err(semantic)?);
        }
    }
    Ok(wb)
}

fn blowup(file: &Path, local: Option<&Path>) -> Outcome {
    let s = load(file)?;
    match s.dim() {
        1 => {
            let n = s.to_numerical().ok_or_else(|| semantic("not a numerical semigroup"))?;
            let prof = PlaneBranchProfile::of(&n).map_err(semantic)?;
            let b = blowup_numerical(&prof).map_err(semantic)?;
            println!("generators {:?}  tau {:?}  apery {:?}", prof.generators, prof.tau, prof.apery);
            println!("blowup generators {:?}  apery {:?}", b.generators(), b.apery(prof.e()));
            Ok(true)
        }
        2 => {
            let report = match local {
                Some(path) => verify_apery_shift_local(&s, &load(path)?),
                None => verify_apery_shift(&s),
            }
            .map_err(semantic)?;
            print!("{report}");
            Ok(report.passes())
        }
        d => Err(semantic(format!("blowups are implemented for dimension 1 and 2, got {d}"))),
    }
}

fn reconstruct(first: &[i64], second: &[i64], out: Option<&Path>) -> Outcome {
    let p1 = PlaneBranchProfile::new(first).map_err(semantic)?;
    let p2 = PlaneBranchProfile::new(second).map_err(semantic)?;
    let r = reconstruct_from_blowup(&p1, &p2).map_err(semantic)?;
    let json = emit_semigroup(&r.s);
    match out {
        Some(path) => std::fs::write(path, format!("{json}\n")).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => println!("{json}"),
    }
    println!("conductor {}  gamma {}  e {}", r.s.conductor(), r.s.gamma(), r.e);
    print!("{}", r.shift);
    Ok(r.shift.passes())
}

fn plot_cmd(file: &Path, omega: Option<Vec<i64>>, out: Option<&Path>) -> Outcome {
    let s = load(file)?;
    if s.dim() != 2 {
        return Err(semantic(format!("plots are planar, got dimension {}", s.dim())));
    }
    let w = omega_or_multiplicity(&s, omega)?;
    let (e, p) = levels(&s, &w)?;
    match out {
        Some(path) => {
            let ticks: Vec<Vec<i64>> = (0..2)
                .map(|h| {
                    let n = s.projection(IndexSet::singleton(2, h)).ok().and_then(|t| t.to_numerical());
                    n.filter(|n| n.contains(w[h]) && w[h] > 0).map(|n| n.apery(w[h])).unwrap_or_default()
                })
                .collect();
            let text = plot::svg(&s, &e, &p, [&ticks[0], &ticks[1]]);
            std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        }
        None => print!("{}", plot::ascii(&s, &e, &p)),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Apery { file, omega } => apery(&file, omega),
        Command::Duality { file, omega } => duality(&file, omega),
        Command::Product { first, second, omega1, omega2 } => product(&first, &second, omega1, omega2),
        Command::Wellbehaved { file, omega } => wellbehaved(&file, omega),
        Command::Blowup { file, local } => blowup(&file, local.as_deref()),
        Command::Reconstruct { first, second, out } => reconstruct(&first, &second, out.as_deref()),
        Command::Plot { file, omega, out } => plot_cmd(&file, omega, out.as_deref()),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
