use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use lieform::derivation::{derivation_algebra, extension_obstruction, inner_derivations, linear_obstruction};
use lieform::io::{self, matrix_repr, parse_algebra, parse_algebra_unchecked, subspace_repr, Counterexample};
use lieform::sweep::{self as sweeping, check_algebra, Property, SweepSummary};
use lieform::{analyze as analyze_algebra, f_normalisers, BuiltinFormation, EnumerationBudget, Error, FieldSpec, LieAlgebra};

use crate::exit;
use crate::Method;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> Result<LieAlgebra> {
    parse_algebra(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

/// Library errors that signal a property violation get their own codes.
pub fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::CriteriaDisagree { .. }) => exit::CRITERIA_DISAGREE,
        Some(Error::NoCriticalDescent) => exit::OTHER_PROPERTY,
        _ => 1,
    }
}

pub fn property_code(p: Property) -> u8 {
    match p {
        Property::Intravariance => exit::INTRAVARIANCE,
        Property::CoverAvoid => exit::COVER_AVOID,
        Property::CriteriaDisagree => exit::CRITERIA_DISAGREE,
        Property::IntravarianceCriteria | Property::NoCriticalDescent | Property::Other => exit::OTHER_PROPERTY,
    }
}

fn emit_counterexample(ce: &Counterexample, dump: Option<&Path>) -> Result<()> {
    eprintln!("counterexample ({}):\n{}", ce.property, ce.to_json());
    if let Some(path) = dump {
        fs::write(path, ce.to_json() + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

pub fn validate(path: &Path, json: bool) -> Result<u8> {
    let l = parse_algebra_unchecked(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    let report = l.validate();
    if json {
        print_json(&json!({
            "valid": report.is_valid(),
            "dim": l.dim(),
            "field": l.field().to_string(),
            "jacobi_violations": report.jacobi_violations.iter().map(|&(i, j, k)| [i, j, k]).collect::<Vec<_>>(),
            "soluble": report.soluble,
        }));
    } else {
        for &(i, j, k) in &report.jacobi_violations {
            println!("Jacobi identity fails on basis triple ({i}, {j}, {k})");
        }
        if report.jacobi_violations.is_empty() && !report.soluble {
            println!("algebra is not soluble");
        }
        if report.is_valid() {
            println!("valid: dimension {} over {}, soluble", l.dim(), l.field());
        }
    }
    Ok(if report.is_valid() { 0 } else { 1 })
}

pub fn analyze(path: &Path, formations: &[BuiltinFormation], dump: Option<&Path>, json: bool) -> Result<u8> {
    let l = load(path)?;
    let formations = if formations.is_empty() { BuiltinFormation::ALL.to_vec() } else { formations.to_vec() };
    let report = analyze_algebra(&l, &formations)?;
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    let failing = report.formations.iter().zip(&formations).find(|(r, _)| {
        r.normalisers.iter().flatten().any(|n| !(n.intravariant_linear && n.intravariant_extension && n.cover_avoid))
    });
    let Some((_, &f)) = failing else {
        return Ok(0);
    };
    // reproduce through the sweep checks to get a replayable record
    let check = check_algebra(&l, &f, &path.display().to_string());
    let first = check.violations.into_iter().min_by_key(|v| v.property).context("violation vanished on recheck")?;
    emit_counterexample(&first.counterexample, dump)?;
    Ok(property_code(first.property))
}

pub fn normalisers(path: &Path, formation: BuiltinFormation, json: bool) -> Result<u8> {
    let l = load(path)?;
    let list = f_normalisers(&l, &formation)?;
    if json {
        let v: Vec<Value> = list
            .iter()
            .map(|n| {
                json!({
                    "subalgebra": subspace_repr(&n.subalgebra),
                    "chain": n.chain.steps().iter().map(subspace_repr).collect::<Vec<_>>(),
                })
            })
            .collect();
        print_json(&json!({"formation": formation.to_string(), "normalisers": v}));
    } else {
        println!("{} {}-normalisers", list.len(), formation);
        for n in &list {
            println!("{}", n.subalgebra);
            for (i, step) in n.chain.steps().iter().enumerate() {
                println!("  M{} = {step}", i + 1);
            }
        }
    }
    Ok(0)
}

pub fn derivations(path: &Path, json: bool) -> Result<u8> {
    let l = load(path)?;
    let der = derivation_algebra(&l);
    let inner = inner_derivations(&l);
    let basis = der.basis();
    if json {
        print_json(&json!({
            "dim": der.dim(),
            "inner_dim": inner.dim(),
            "basis": basis.iter().map(matrix_repr).collect::<Vec<_>>(),
        }));
    } else {
        println!("Der: dimension {} (inner {}, outer {})", der.dim(), inner.dim(), der.dim() - inner.dim());
        for (i, d) in basis.iter().enumerate() {
            println!("d{} =\n{d}", i + 1);
        }
    }
    Ok(0)
}

pub fn check_intravariance(path: &Path, spec: Option<&str>, method: Method, json: bool) -> Result<u8> {
    let text = read(path)?;
    let is_dump = serde_json::from_str::<Value>(&text)
        .map(|v| v.get("algebra").is_some())
        .unwrap_or(false);
    let (l, recorded, u) = if is_dump {
        let ce = Counterexample::from_json(&text).with_context(|| format!("in {}", path.display()))?;
        let l = ce.algebra()?;
        let u = match spec {
            Some(s) => io::parse_basis_spec(s, l.field(), l.dim())?,
            None => ce.subalgebra(&l)?,
        };
        (l, ce.intravariant, u)
    } else {
        let l = parse_algebra(&text).with_context(|| format!("in {}", path.display()))?;
        let Some(s) = spec else {
            bail!("--subalgebra is required unless FILE is a counterexample dump");
        };
        let u = io::parse_basis_spec(s, l.field(), l.dim())?;
        (l, None, u)
    };
    if !l.is_subalgebra(&u) {
        return Err(Error::NotASubalgebra.into());
    }
    let linear = matches!(method, Method::Linear | Method::Both).then(|| linear_obstruction(&l, &u));
    let extension = match method {
        Method::Extension | Method::Both => Some(extension_obstruction(&l, &u)?),
        Method::Linear => None,
    };
    let verdict = |o: &Option<Option<_>>| o.as_ref().map(Option::is_none);
    let (lin, ext) = (verdict(&linear), verdict(&extension));
    let intravariant = lin.unwrap_or(true) && ext.unwrap_or(true);
    let reproduces = recorded.map(|(a, b)| lin.is_none_or(|x| x == a) && ext.is_none_or(|x| x == b));
    let witness = linear.iter().chain(&extension).flatten().next().map(matrix_repr);
    if json {
        print_json(&json!({
            "subalgebra": subspace_repr(&u),
            "linear": lin,
            "extension": ext,
            "intravariant": intravariant,
            "obstruction": witness,
            "reproduces_recorded": reproduces,
        }));
    } else {
        println!("subalgebra: {u}");
        if let Some(x) = lin {
            println!("linear test: {}", if x { "intravariant" } else { "not intravariant" });
        }
        if let Some(x) = ext {
            println!("extension test: {}", if x { "intravariant" } else { "not intravariant" });
        }
        if let Some(w) = linear.iter().chain(&extension).flatten().next() {
            println!("obstructing derivation:\n{w}");
        }
        if let Some(r) = reproduces {
            println!("recorded verdict reproduced: {}", if r { "yes" } else { "no" });
        }
    }
    if lin.is_some() && ext.is_some() && lin != ext {
        return Ok(exit::OTHER_PROPERTY);
    }
    Ok(if intravariant { 0 } else { exit::NEGATIVE })
}

pub fn verify_chain(path: &Path, chain_path: &Path, formation: BuiltinFormation, json: bool) -> Result<u8> {
    let l = load(path)?;
    let chain = io::parse_chain(&read(chain_path)?, &l).with_context(|| format!("in {}", chain_path.display()))?;
    let outcome = lieform::verify_chain(&l, &chain, &formation);
    let reason = match &outcome {
        Ok(()) => None,
        Err(Error::InvalidChain(msg)) => Some(msg.clone()),
        Err(e) => return Err(e.clone().into()),
    };
    if json {
        print_json(&json!({"valid": reason.is_none(), "steps": chain.len(), "reason": reason}));
    } else {
        match &reason {
            None => println!("valid {formation}-normaliser chain of length {}", chain.len()),
            Some(r) => println!("invalid chain: {r}"),
        }
    }
    Ok(if reason.is_none() { 0 } else { exit::NEGATIVE })
}

pub struct SweepArgs {
    pub fields: Vec<String>,
    pub max_dim: usize,
    pub formations: Vec<BuiltinFormation>,
    pub cap: Option<usize>,
    pub seed: u64,
    pub threads: Option<usize>,
}

fn sweep_text(s: &SweepSummary) -> String {
    let cap = s.per_step_cap.map_or("none".to_string(), |c| c.to_string());
    let mut out = format!(
        "sweep over {} up to dimension {}, formations {}, cap {cap}, seed {}\n",
        s.fields.join(", "),
        s.max_dim,
        s.formations.join(", "),
        s.seed
    );
    out += &format!("algebras: {}\n", s.algebras);
    out += &format!("maximal subalgebras classified: {}\n", s.maximal_classified);
    out += &format!("normalisers checked: {}\n", s.normalisers);
    out += &format!("violations: {}\n", s.violations.len());
    for v in &s.violations {
        out += &format!("  {} [{}] {}: {}\n", v.property, v.counterexample.formation, v.label, v.counterexample.detail);
    }
    out
}

pub fn sweep(args: &SweepArgs, dump: Option<&Path>, json: bool) -> Result<u8> {
    let fields = args
        .fields
        .iter()
        .map(|f| f.parse::<FieldSpec>())
        .collect::<lieform::Result<Vec<_>>>()?;
    let formations = if args.formations.is_empty() {
        vec![BuiltinFormation::Nilpotent, BuiltinFormation::AllSoluble]
    } else {
        args.formations.clone()
    };
    let budget = EnumerationBudget {
        max_dim: args.max_dim,
        fields,
        per_step_cap: args.cap,
        seed: args.seed,
    };
    let summary = sweeping::sweep(&budget, &formations, args.threads)?;
    if json {
        print_json(&serde_json::to_value(&summary)?);
    } else {
        print!("{}", sweep_text(&summary));
    }
    match summary.violations.iter().min_by_key(|v| v.property) {
        None => Ok(0),
        Some(v) => {
            emit_counterexample(&v.counterexample, dump)?;
            Ok(property_code(v.property))
        }
    }
}
