use num_bigint::BigInt;
use serde_json::{json, Value};
use weil_core::forms::dim_span;
use weil_core::hermitian::discriminant;
use weil_core::hodge::pfaffian;
use weil_core::linalg::rank;
use weil_core::weil::{
    self, cayley_pencil, classify, cubic_g, eigenforms, find_k, intersect_planes, markman_class,
    matrix_mg, membership, nu_prime_inverse, on_conic_ck, weil_space, StratumTag,
};
use weil_core::{elementary_divisors_symplectic, B1Class, B2Class, CartanForm, CartanKind};

use crate::args::{Cli, Command};
use crate::error::CliError;
use crate::output as out;
use crate::verify::{run_checklist, Hooks};

type CmdResult = Result<Value, CliError>;

fn parse<T: std::str::FromStr<Err = weil_core::Error>>(s: &str) -> Result<T, CliError> {
    s.parse::<T>().map_err(|e| match e {
        weil_core::Error::Parse(_) => CliError::Parse(format!("cannot parse '{s}'")),
        other => other.into(),
    })
}

fn check_n(n: usize) -> Result<(), CliError> {
    if (1..=3).contains(&n) {
        Ok(())
    } else {
        Err(CliError::Parse(format!("--n must be 1, 2 or 3, got {n}")))
    }
}

/// Runs a command; returns its JSON value and exit code.
pub fn dispatch(cli: &Cli) -> Result<(Value, i32), CliError> {
    let value = match &cli.command {
        Command::Classify { class } => cmd_classify(&parse(class)?),
        Command::FindK { class } => cmd_find_k(&parse(class)?),
        Command::Cayley { class } => cmd_cayley(&parse(class)?),
        Command::Eigenforms { cartan } => {
            check_n(cli.n)?;
            cmd_eigenforms(&parse(cartan)?, cli.n)
        }
        Command::Pfaffian { theta } => {
            check_n(cli.n)?;
            cmd_pfaffian(&parse(theta)?, cli.n)
        }
        Command::Membership { class, cartan } => cmd_membership(&parse(class)?, &parse(cartan)?),
        Command::Intersect { cartan1, cartan2 } => cmd_intersect(&parse(cartan1)?, &parse(cartan2)?),
        Command::Markman { index } => cmd_markman(*index),
        Command::Discriminant { cartan, theta } => cmd_discriminant(&parse(cartan)?, &parse(theta)?),
        Command::Eldiv { theta } => cmd_eldiv(&parse(theta)?),
        Command::VerifyPaper => {
            let report = run_checklist(&Hooks::default());
            let code = report.exit_code();
            return Ok((report.to_json(), code));
        }
    }?;
    Ok((value, 0))
}

pub fn cmd_classify(c: &B2Class) -> CmdResult {
    let m = matrix_mg(c);
    Ok(json!({
        "class": out::b2(c),
        "stratum": classify(c).as_str(),
        "G": out::r(&cubic_g(c)),
        "rank": rank(&m),
        "matrix": out::matrix(&m),
    }))
}

fn cartan_summary(f: &CartanForm) -> serde_json::Map<String, Value> {
    let m = f.embedding_matrix();
    let mut map = serde_json::Map::new();
    map.insert("cartan".into(), out::cartan(f));
    map.insert("delta".into(), out::r(&f.discriminant()));
    map.insert("kind".into(), json!(f.kind().as_str()));
    map.insert("field".into(), json!(f.field_name()));
    map.insert(
        "embedding_matrix".into(),
        Value::Array(m.iter().map(|row| out::ints(row)).collect()),
    );
    map
}

pub fn cmd_find_k(c: &B2Class) -> CmdResult {
    let found = find_k(c)?;
    let f = &found.cartan;
    let omega_k = eigenforms(f).omega_k;
    let mut map = cartan_summary(f);
    map.insert("class".into(), out::b2(c));
    map.insert("quartic".into(), json!(found.quartic.to_string()));
    map.insert("quartic_scale".into(), out::r(&found.k));
    map.insert("omega_k".into(), out::b1(&omega_k));
    map.insert("pfaffian_of_omegaK".into(), out::r(&pfaffian(&omega_k, 2)?));
    map.insert("polariz_divisors".into(), out::ints(&elementary_divisors_symplectic(&omega_k)?));
    map.insert("weil_family".into(), json!(f.kind() == CartanKind::Imaginary));
    Ok(Value::Object(map))
}

fn pencil_json(c: &B2Class) -> CmdResult {
    let pencil = cayley_pencil(c)?;
    let witness = pencil.imaginary_member();
    Ok(json!({
        "point": out::ints(&pencil.point),
        "pencil_constraint": pencil.constraint_string(),
        "has_imaginary": witness.is_some(),
        "witness": witness.as_ref().map_or(Value::Null, out::cartan),
    }))
}

pub fn cmd_cayley(c: &B2Class) -> CmdResult {
    let mut v = pencil_json(c)?;
    v["class"] = out::b2(c);
    Ok(v)
}

pub fn cmd_eigenforms(f: &CartanForm, n: usize) -> CmdResult {
    let e = eigenforms(f);
    let mut map = cartan_summary(f);
    map.insert("theta_squared".into(), out::r(&e.delta));
    map.insert("omega_plus".into(), out::b1_quad(&e.omega_plus));
    map.insert("omega_minus".into(), out::b1_quad(&e.omega_minus));
    map.insert("omega_k".into(), out::b1(&e.omega_k));
    map.insert("n".into(), json!(n));
    map.insert("weil_space_dim".into(), json!(dim_span(&weil_space(f, n)?)?));
    let plane: Vec<Value> = weil::weil_plane(f).iter().map(out::b2).collect();
    map.insert("weil_plane".into(), Value::Array(plane));
    Ok(Value::Object(map))
}

pub fn cmd_pfaffian(theta: &B1Class, n: usize) -> CmdResult {
    Ok(json!({
        "theta": out::b1(theta),
        "n": n,
        "pfaffian": out::r(&pfaffian(theta, n)?),
    }))
}

pub fn cmd_membership(c: &B2Class, f: &CartanForm) -> CmdResult {
    let on_conic = on_conic_ck(c, f);
    Ok(json!({
        "class": out::b2(c),
        "cartan": out::cartan(f),
        "member": membership(c, f),
        "stratum": classify(c).as_str(),
        "on_conic": on_conic.map_or(Value::Null, Value::Bool),
    }))
}

pub fn cmd_intersect(f1: &CartanForm, f2: &CartanForm) -> CmdResult {
    let c = intersect_planes(f1, f2)?;
    let point = nu_prime_inverse(&c)?;
    Ok(json!({
        "cartans": [out::cartan(f1), out::cartan(f2)],
        "class": out::b2(&c),
        "stratum": classify(&c).as_str(),
        "point": out::ints(&point),
    }))
}

pub fn cmd_markman(n: i64) -> CmdResult {
    let c = markman_class(n)?;
    let mut v = pencil_json(&c)?;
    v["n"] = json!(n);
    v["class"] = out::b2(&c);
    v["stratum"] = json!(classify(&c).as_str());
    debug_assert_eq!(classify(&c), StratumTag::OnS);
    Ok(v)
}

pub fn cmd_discriminant(f: &CartanForm, theta: &B1Class) -> CmdResult {
    let d = discriminant(f, theta)?;
    Ok(json!({
        "cartan": out::cartan(f),
        "theta": out::b1(theta),
        "detPsi": out::r(&d.det_psi),
        "trivial": d.trivial,
        "rep": out::int(&d.squarefree_rep),
        "d": out::int(&d.d),
    }))
}

pub fn cmd_eldiv(theta: &B1Class) -> CmdResult {
    let divisors: [BigInt; 4] = elementary_divisors_symplectic(theta)?;
    Ok(json!({
        "theta": out::b1(theta),
        "divisors": out::ints(&divisors),
        "pfaffian": out::r(&pfaffian(theta, 2)?),
    }))
}
