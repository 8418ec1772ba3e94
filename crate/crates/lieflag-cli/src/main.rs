use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use lieflag::classify::{emit_tables, Classifier, PairDescriptor};
use lieflag::linalg::Matrix;
use lieflag::matrix_reps::{sl_tautological, so_vector, sp_tautological, MatrixRep};
use lieflag::mult_lab::{
    build_a18, from_trilinear, sp_basis_names, subalgebra_from_mult, verify_compatible, Ambient, JsonQ,
    StructureTensor, TensorJson, TrilinearForm,
};
use lieflag::obstruction::obstruction_report;
use lieflag::rational::fmt_q;
use lieflag::tensor::{character_product_oracle, dual_tensor_adjoint, klimyk};
use lieflag::weights::{dual_weight, weyl_dimension_u64};
use lieflag::{LieType, RootDatum, WeightVector, Q};
use serde::Deserialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Largest product dimension for which `decompose` reruns the character oracle.
const ORACLE_CHECK_DIM: u64 = 20_000;

#[derive(Parser)]
#[command(name = "lieflag", version, about = "Exact root systems, modules and compatible multiplications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify (G, P) pairs; all nodes of the type when --node is omitted.
    Classify {
        #[arg(long)]
        family: char,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        node: Option<usize>,
    },
    /// Regenerate both classification tables and compare them with the fixtures.
    Tables {
        #[arg(long)]
        text: bool,
    },
    /// Run the weight-lattice exclusion test on a fundamental module.
    Obstruct {
        #[arg(long)]
        family: char,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        weight: usize,
    },
    /// Decompose V(λ) ⊗ V(µ), or V(λ)* ⊗ adjoint when --mu is omitted.
    Decompose {
        #[arg(long)]
        family: char,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Option<Vec<i64>>,
    },
    /// Check a structure tensor against a matrix representation.
    VerifyMult {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the multiplication on the symplectic tautological module from a symmetric trilinear form.
    SpFromForm {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the abelian subalgebra attached to a multiplication on the radical of (A_l, P_1).
    Subalgebra {
        #[arg(long)]
        input: PathBuf,
    },
    /// Rebuild and check the 18-dimensional example algebra.
    ExampleA18,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum ModuleSpec {
    Sl { n: usize },
    Sp { l: usize },
    So { n: usize },
}

#[derive(Deserialize)]
struct VerifyInput {
    module: ModuleSpec,
    tensor: TensorJson,
}

#[derive(Deserialize)]
struct FormInput {
    l: usize,
    entries: Vec<(usize, usize, usize, JsonQ)>,
}

#[derive(Deserialize)]
struct SubalgebraInput {
    ambient: Ambient,
    tensor: TensorJson,
}

fn lie_type(family: char, rank: usize) -> Result<LieType> {
    Ok(LieType::from_letter(family.to_ascii_uppercase(), rank)?)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let raw = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))
}

fn q_json(x: &Q) -> Value {
    Value::String(fmt_q(x))
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(q_json).collect())).collect())
}

fn module(spec: &ModuleSpec) -> Result<MatrixRep> {
    Ok(match *spec {
        ModuleSpec::Sl { n } => sl_tautological(n)?,
        ModuleSpec::Sp { l } => sp_tautological(l)?,
        ModuleSpec::So { n } => so_vector(n)?,
    })
}

fn compat_json(rep: &MatrixRep, t: &StructureTensor) -> Result<(Value, bool)> {
    let c = verify_compatible(rep, t)?;
    let ok = c.compatible();
    let v = json!({
        "commutative": c.commutative,
        "associative": c.associative,
        "all_nilpotent": c.all_nilpotent,
        "mu_in_image": c.mu_in_image,
        "compatible": ok,
        "failures": c.failures(),
        "phi": c.phi_matrix.as_ref().map(matrix_json),
    });
    Ok((v, ok))
}

/// Runs one subcommand; returns the JSON document and whether its self-checks passed.
fn run(cmd: Command) -> Result<(Value, bool)> {
    match cmd {
        Command::Classify { family, rank, node } => {
            let t = lie_type(family, rank)?;
            let nodes: Vec<usize> = match node {
                Some(i) => vec![i],
                None => (1..=rank).collect(),
            };
            let mut classifier = Classifier::new();
            let mut out = Vec::new();
            let mut ok = true;
            for i in nodes {
                let c = classifier.classify(PairDescriptor::new(t, i)?)?;
                ok &= c.cross_check_ok;
                out.push(serde_json::to_value(&c)?);
            }
            Ok((json!({ "lie_type": t, "alias": t.alias_warning(), "pairs": out }), ok))
        }
        Command::Tables { text } => {
            let rep = emit_tables()?;
            let ok = rep.all_ok();
            if text {
                Ok((Value::String(format!("{}\n{}", rep.intro.text, rep.levi.text)), ok))
            } else {
                Ok((serde_json::to_value(&rep)?, ok))
            }
        }
        Command::Obstruct { family, rank, weight } => {
            let rd = RootDatum::build(lie_type(family, rank)?)?;
            if weight == 0 || weight > rank {
                bail!("weight index {weight} outside 1..={rank}");
            }
            let rep = obstruction_report(&rd, &rd.fundamental(weight))?;
            let ok = rep.revalidate(&rd)?;
            Ok((json!({ "report": rep, "witnesses_revalidated": ok }), ok))
        }
        Command::Decompose { family, rank, lambda, mu } => {
            let rd = RootDatum::build(lie_type(family, rank)?)?;
            let lambda = WeightVector(lambda);
            rd.check_weight(&lambda)?;
            let (left, mu, dec) = match mu {
                Some(m) => {
                    let m = WeightVector(m);
                    rd.check_weight(&m)?;
                    let dec = klimyk(&rd, &lambda, &m)?;
                    (lambda, m, dec)
                }
                None => (dual_weight(&rd, &lambda), rd.adjoint_weight(), dual_tensor_adjoint(&rd, &lambda)?),
            };
            let total = weyl_dimension_u64(&rd, &left)? * weyl_dimension_u64(&rd, &mu)?;
            let oracle = if total <= ORACLE_CHECK_DIM { Some(character_product_oracle(&rd, &left, &mu)? == dec) } else { None };
            let summands: Vec<Value> = dec
                .summands
                .iter()
                .map(|(w, m)| Ok(json!({ "highest_weight": w.labels(), "multiplicity": m, "dimension": weyl_dimension_u64(&rd, w)? })))
                .collect::<Result<_>>()?;
            let ok = oracle.unwrap_or(true);
            Ok((
                json!({
                    "lie_type": rd.lie_type(),
                    "left": left.labels(),
                    "right": mu.labels(),
                    "dimension": total,
                    "summands": summands,
                    "oracle_agrees": oracle,
                }),
                ok,
            ))
        }
        Command::VerifyMult { input } => {
            let inp: VerifyInput = read_json(&input)?;
            let rep = module(&inp.module)?;
            let t = StructureTensor::from_json(&inp.tensor)?;
            if t.dim() != rep.module_dim {
                bail!("tensor dimension {} does not match module dimension {}", t.dim(), rep.module_dim);
            }
            let (v, ok) = compat_json(&rep, &t)?;
            Ok((json!({ "algebra": rep.algebra_type, "module_dim": rep.module_dim, "report": v }), ok))
        }
        Command::SpFromForm { input } => {
            let inp: FormInput = read_json(&input)?;
            let mut c = TrilinearForm::zero(inp.l);
            for (a, b, cc, v) in inp.entries {
                if a >= inp.l || b >= inp.l || cc >= inp.l {
                    bail!("form entry ({a},{b},{cc}) outside dimension {}", inp.l);
                }
                let cur = c.get(a, b, cc).clone();
                c.set_raw(a, b, cc, cur + v.0);
            }
            let t = from_trilinear(inp.l, &c)?;
            let (v, compatible) = compat_json(&sp_tautological(inp.l)?, &t)?;
            let triple = t.triple_products_vanish();
            Ok((
                json!({
                    "basis": sp_basis_names(inp.l),
                    "tensor": t.to_json(),
                    "report": v,
                    "triple_products_vanish": triple,
                }),
                compatible && triple,
            ))
        }
        Command::Subalgebra { input } => {
            let inp: SubalgebraInput = read_json(&input)?;
            let t = StructureTensor::from_json(&inp.tensor)?;
            let s = subalgebra_from_mult(inp.ambient, &t)?;
            let ok = s.all_ok();
            Ok((
                json!({
                    "ambient": s.ambient,
                    "basis": s.basis.iter().map(matrix_json).collect::<Vec<_>>(),
                    "abelian": s.abelian,
                    "complement_to_p": s.complement_to_p,
                    "all_nilpotent": s.all_nilpotent,
                    "dim_matches": s.dim_matches,
                }),
                ok,
            ))
        }
        Command::ExampleA18 => {
            let r = build_a18();
            let ok = r.all_ok();
            let names: Vec<String> = r.algebra.names.clone();
            Ok((
                json!({
                    "basis": names,
                    "tensor": r.algebra.tensor.to_json(),
                    "dimension": r.dimension,
                    "basis_matches": r.basis_matches,
                    "degree7_identities": r.degree7_identities,
                    "degree_at_least_7_vanish": r.degree_at_least_7_vanish,
                    "x5_nonzero": r.x5_nonzero,
                    "x6_zero": r.x6_zero,
                    "x7_zero": r.x7_zero,
                    "commutative": r.commutative,
                    "associative": r.associative,
                    "all_nilpotent": r.all_nilpotent,
                }),
                ok,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((Value::String(s), ok)) => {
            println!("{s}");
            if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Ok((v, ok)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
