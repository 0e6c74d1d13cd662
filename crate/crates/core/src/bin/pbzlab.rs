use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pbzlab::algebra::{FiniteAlgebra, Flavor};
use pbzlab::constructions::{catalog, CatalogName};
use pbzlab::error::Result;
use pbzlab::{congruence, io, terms, verify};

#[derive(Parser)]
#[command(name = "pbzlab", about = "Finite BI/BZ/PBZ* lattice workbench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArg {
    /// Path to an algebra JSON file.
    path: Option<PathBuf>,
    /// Catalog name, e.g. D:4, MO:2, M3, GD:2, SANDWICH:M3.
    #[arg(long)]
    algebra: Option<String>,
}

impl AlgebraArg {
    fn load(&self) -> Result<FiniteAlgebra> {
        match (&self.path, &self.algebra) {
            (Some(p), None) => io::load(p),
            (None, Some(name)) => catalog(&name.parse::<CatalogName>()?),
            _ => Err(pbzlab::Error::InvalidFile(
                "give exactly one of a file path or --algebra NAME".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify an algebra and print its structural sets.
    Check {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        json: bool,
    },
    /// Test an identity on an algebra.
    Sat {
        /// A file path (unless --algebra is given) followed by an optional
        /// identity literal, e.g. "x ^ (y v z) = (x^y) v (x^z)".
        #[arg(num_args = 0..=2)]
        positional: Vec<String>,
        /// Catalog name, e.g. D:4, MO:2, M3, GD:2, SANDWICH:M3.
        #[arg(long)]
        algebra: Option<String>,
        /// Named identity: STAR, SDM, SK, J0, DIST, MOD, R, RV, O, C:n, D:n.
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// List the congruence lattice at a flavor.
    Con {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// LATTICE, BI or BZ.
        #[arg(long, default_value = "BI")]
        flavor: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suite.
    VerifyPaper {
        /// Only rows whose id contains this substring.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_flavor(s: &str) -> Result<Flavor> {
    match s.to_ascii_uppercase().as_str() {
        "LATTICE" => Ok(Flavor::Lattice),
        "BI" => Ok(Flavor::Bi),
        "BZ" => Ok(Flavor::Bz),
        other => Err(pbzlab::Error::UnknownName(other.to_string())),
    }
}

fn tri(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

fn labels_of(a: &FiniteAlgebra, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| a.label(x)).collect()
}

fn cmd_check(a: &FiniteAlgebra, json: bool) {
    let r = a.classify();
    let l = a.lattice();
    let flags: Vec<(&str, Option<bool>)> = vec![
        ("pseudo_kleene", r.pseudo_kleene),
        ("ortholattice", r.ortholattice),
        ("orthomodular", r.orthomodular),
        ("paraorthomodular", r.paraorthomodular),
        ("star", r.star),
        ("bz", r.bz),
        ("pbz", r.pbz),
        ("antiortholattice", r.antiortholattice),
        ("sdm", r.sdm),
        ("sk", r.sk),
        ("j0", r.j0),
        ("distributive", r.distributive),
        ("modular", r.modular),
        ("boolean_algebra", r.boolean_algebra),
        ("zero_meet_irreducible", r.zero_meet_irreducible),
        ("sandwich_shape", r.sandwich_shape),
    ];
    let sharp = if a.flavor() >= Flavor::Bi { Some(a.sharp_elements()) } else { None };
    let dense = if a.flavor() >= Flavor::Bz { Some(a.dense_and_t()) } else { None };
    if json {
        let mut obj = serde_json::Map::new();
        obj.insert("n".into(), a.n().into());
        obj.insert("flavor".into(), format!("{:?}", a.flavor()).into());
        for (k, v) in &flags {
            obj.insert((*k).to_string(), match v {
                Some(b) => serde_json::Value::Bool(*b),
                None => serde_json::Value::Null,
            });
        }
        if let Some(s) = &sharp {
            obj.insert("sharp".into(), labels_of(a, s).into());
        }
        if let Some(d) = &dense {
            obj.insert("dense".into(), labels_of(a, &d.dense).into());
            obj.insert("t".into(), labels_of(a, &d.t).into());
            obj.insert("t_length".into(), l.length_of(&d.t).unwrap().into());
        }
        obj.insert("complemented".into(), labels_of(a, &l.complemented_elements()).into());
        println!("{}", serde_json::Value::Object(obj));
        return;
    }
    println!("n = {}, flavor = {:?}", a.n(), a.flavor());
    for (k, v) in &flags {
        println!("  {k:<22} {}", tri(*v));
    }
    if let Some(s) = &sharp {
        println!("  S(L) = {:?}", labels_of(a, s));
    }
    if let Some(d) = &dense {
        println!("  D(L) = {:?}", labels_of(a, &d.dense));
        println!("  T(L) = {:?}  length {}", labels_of(a, &d.t), l.length_of(&d.t).unwrap());
    }
    println!("  complemented = {:?}", labels_of(a, &l.complemented_elements()));
}

fn cmd_sat(a: &FiniteAlgebra, literal: Option<&str>, id: Option<&str>, json: bool) -> Result<()> {
    let identity = match (literal, id) {
        (Some(text), None) => terms::parse_identity(text)?,
        (None, Some(name)) => {
            let (head, n) = match name.split_once(':') {
                Some((h, p)) => {
                    let n = p.parse::<usize>().map_err(|_| {
                        pbzlab::Error::MissingParam(format!("bad parameter in {name:?}"))
                    })?;
                    (h, Some(n))
                }
                None => (name, None),
            };
            terms::named_identity(head, n)?
        }
        _ => {
            return Err(pbzlab::Error::MissingParam(
                "give exactly one of an identity literal or --id NAME".into(),
            ))
        }
    };
    let sat = terms::satisfies(a, &identity)?;
    if json {
        let witness = sat.witness.as_ref().map(|w| labels_of(a, w));
        println!(
            "{}",
            serde_json::json!({
                "identity": format!("{identity}"),
                "holds": sat.holds,
                "vars": sat.vars,
                "witness": witness,
            })
        );
    } else if sat.holds {
        println!("{identity}  holds ({} variables swept)", sat.vars.len());
    } else {
        let w = sat.witness.as_ref().unwrap();
        let pairs: Vec<String> = sat
            .vars
            .iter()
            .zip(w.iter())
            .map(|(v, &x)| format!("{v} = {}", a.label(x)))
            .collect();
        println!("{identity}  fails at {}", pairs.join(", "));
    }
    Ok(())
}

fn cmd_con(a: &FiniteAlgebra, flavor: Flavor, json: bool) -> Result<()> {
    let (lat, cons) = congruence::congruence_lattice(a, flavor)?;
    if json {
        let list: Vec<serde_json::Value> = cons
            .iter()
            .map(|c| {
                serde_json::json!({
                    "blocks": c.blocks().iter().map(|b| labels_of(a, b)).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({ "count": cons.len(), "congruences": list })
        );
        return Ok(());
    }
    println!("{} congruences at {:?} flavor", cons.len(), flavor);
    for (i, c) in cons.iter().enumerate() {
        let blocks: Vec<String> = c
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", labels_of(a, b).join(",")))
            .collect();
        println!("  #{i}: {}", blocks.join(" "));
    }
    println!("congruence lattice: {} elements, covers {:?}", lat.n(), lat.covers());
    Ok(())
}

fn cmd_verify(filter: Option<&str>, json: bool) -> ExitCode {
    let rows = verify::run(filter);
    if rows.is_empty() {
        eprintln!("warning: no rows match filter {:?}", filter.unwrap_or(""));
        return ExitCode::SUCCESS;
    }
    let mut failures = 0usize;
    if json {
        let list: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "id": r.id, "reference": r.reference, "pass": r.pass, "detail": r.detail,
                })
            })
            .collect();
        failures = rows.iter().filter(|r| !r.pass).count();
        println!("{}", serde_json::json!({ "rows": list, "failures": failures }));
    } else {
        for r in &rows {
            if !r.pass {
                failures += 1;
            }
            println!(
                "{} {:<28} [{}] {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.id,
                r.reference,
                r.detail
            );
        }
        println!("{} rows, {} failures", rows.len(), failures);
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<ExitCode> = (|| match cli.command {
        Command::Check { algebra, json } => {
            cmd_check(&algebra.load()?, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sat { positional, algebra, id, json } => {
            let mut rest = positional.iter();
            let path = if algebra.is_none() { rest.next() } else { None };
            let literal = rest.next().map(String::as_str);
            if rest.next().is_some() {
                return Err(pbzlab::Error::InvalidFile("too many positional arguments".into()));
            }
            let arg = AlgebraArg { path: path.map(PathBuf::from), algebra };
            cmd_sat(&arg.load()?, literal, id.as_deref(), json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Con { algebra, flavor, json } => {
            cmd_con(&algebra.load()?, parse_flavor(&flavor)?, json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { filter, json } => Ok(cmd_verify(filter.as_deref(), json)),
    })();
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
