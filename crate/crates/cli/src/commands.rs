use std::collections::BTreeMap;
use std::str::FromStr;

use clap::{Args, CommandFactory, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crofton_core::crofton::{
    centroaffine_pairing, mu_c_vanishing_up_to, q2_report, restriction_table, universal_pairing, Angle,
    UniversalCase,
};
use crofton_core::grassmann::{
    angle_density, chamber_probability, ellipsoid_projection_gram, ellipsoid_projection_volume, haar_batch,
    haar_sample, lambda1_cdf_grid, projection_mc_oracle, SignatureTriple,
};
use crofton_core::matintegrals::{constantine_ratio, d_closed, d_mc_oracle_many, EpsilonKind};
use crofton_core::selberg::{
    f_closed, f_oracle, f_recursive, residue_identity_check, selberg_i, Domain, ExponentVector, SelbergValue, Shape,
};
use crofton_core::special::{gamma_n_kappa, u_eval, u_quadrature, u_reduce, GammaProduct, Partition};
use crofton_core::{ComplexRational, RatFun, Rational};

use crate::{Cli, CliError, Report};

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Closed form of the signed Vandermonde integral I_n(s).
    #[command(name = "selberg-I")]
    SelbergI(SelbergIArgs),
    /// f_n(e) by the closed form, optionally against the recursion.
    #[command(name = "f-eval")]
    FEval(FEvalArgs),
    /// f_n(e) by direct integration over the chain (n <= 6).
    #[command(name = "f-oracle")]
    FOracle(FOracleArgs),
    /// Exact check of the three residue identities.
    #[command(name = "residue-check")]
    ResidueCheck(ResidueArgs),
    /// Closed form of the matrix-ball integral D^eps_n(s).
    #[command(name = "D")]
    D(DArgs),
    /// Monte Carlo estimate of D^eps_n(s) against the closed form.
    #[command(name = "D-mc")]
    DMc(DMcArgs),
    /// Pole order and leading term of Gamma_N(x, kappa).
    #[command(name = "gamma-kappa")]
    GammaKappa(GammaKappaArgs),
    /// Constantine's beta integral as a Gamma product in s.
    #[command(name = "constantine")]
    Constantine(ConstantineArgs),
    /// Haar-random subspaces and their spectra.
    #[command(name = "sample-grassmann")]
    SampleGrassmann(SampleArgs),
    /// Density of the spectrum: point values, chamber probabilities, CDF grid.
    #[command(name = "angle-density")]
    AngleDensity(DensityArgs),
    /// Shadow volume of an ellipsoid on a random subspace, two closed routes.
    #[command(name = "project-ellipsoid")]
    ProjectEllipsoid(ProjectArgs),
    /// Shadow volume by Monte Carlo against the closed form.
    #[command(name = "project-mc")]
    ProjectMc(ProjectMcArgs),
    /// Ball pairing of a universal family.
    #[command(name = "universal-pairing")]
    UniversalPairing(UniversalArgs),
    /// Ball pairing behind the centro-affine surface area.
    #[command(name = "centroaffine")]
    Centroaffine(CentroArgs),
    /// Pole-order table showing that mu_c pairs to zero.
    #[command(name = "mu-c-vanishing")]
    MuCVanishing(MuCArgs),
    /// Basis certificate for O(p,2)-invariant valuations.
    #[command(name = "q2-certificate")]
    Q2Certificate(Q2Args),
    /// u(s, a, b) = int_0^1 x^s ((1+x)^a (1-x)^b + (1-x)^a (1+x)^b) dx, continued.
    #[command(name = "u-eval")]
    UEval(UArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct SelbergIArgs {
    #[arg(long)]
    n: usize,
    /// abs, sgn or mixed.
    #[arg(long, default_value = "abs")]
    shape: String,
    /// Rational point at which to evaluate.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct FEvalArgs {
    /// Exponents, comma-separated, integers or half-integers (`3/2`).
    #[arg(long, allow_hyphen_values = true)]
    e: String,
    /// Also evaluate the recursion and compare.
    #[arg(long)]
    recursive: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct FOracleArgs {
    #[arg(long, allow_hyphen_values = true)]
    e: String,
    /// Restrict to the chamber with this many nonnegative coordinates.
    #[arg(long)]
    positive: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
pub struct ResidueArgs {
    /// Identity 1, 2 or 3.
    #[arg(long)]
    identity: u8,
    /// Explicit vector; otherwise random vectors from `--seed`.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, default_value_t = 500)]
    count: u64,
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args, Serialize)]
pub struct DArgs {
    #[arg(long)]
    n: usize,
    /// abs, sgn, cos, sin or plus.
    #[arg(long)]
    kind: String,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct DMcArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated kinds; all from one sample stream.
    #[arg(long, default_value = "abs,sgn,cos,sin,plus")]
    kind: String,
    #[arg(long, allow_hyphen_values = true)]
    s: f64,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long)]
    seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct GammaKappaArgs {
    #[arg(long)]
    n: usize,
    /// Partition, comma-separated.
    #[arg(long, default_value = "")]
    kappa: String,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstantineArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, default_value = "")]
    kappa: String,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct SampleArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 10)]
    samples: u64,
    #[arg(long)]
    seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct DensityArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    k: usize,
    /// Spectrum at which to evaluate the density, comma-separated, decreasing.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Nodes of the CDF grid for lambda_1.
    #[arg(long, default_value_t = 0)]
    grid: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct ProjectArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    a: f64,
    #[arg(long)]
    b: f64,
    /// Seed of the Haar subspace.
    #[arg(long)]
    seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct ProjectMcArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    a: f64,
    #[arg(long)]
    b: f64,
    #[arg(long, default_value_t = 200_000)]
    samples: u64,
    #[arg(long)]
    seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct UniversalArgs {
    /// abs, sgn, cos or sin.
    #[arg(long)]
    family: String,
    /// `m` for abs/sgn, `p` for cos/sin.
    #[arg(long)]
    index: u32,
}

#[derive(Debug, Args, Serialize)]
pub struct CentroArgs {
    #[arg(long)]
    p: u32,
}

#[derive(Debug, Args, Serialize)]
pub struct MuCArgs {
    #[arg(long)]
    m: u32,
    /// Largest first part of kappa; defaults to 2m + 1.
    #[arg(long)]
    max_first: Option<u32>,
}

#[derive(Debug, Args, Serialize)]
pub struct Q2Args {
    #[arg(long)]
    p: u32,
    /// A single degree; all 2 <= k <= p when omitted.
    #[arg(long)]
    k: Option<u32>,
    /// Also print the restriction tables.
    #[arg(long)]
    tables: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct UArgs {
    #[arg(long, allow_hyphen_values = true)]
    s: f64,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    /// series, reduce or quadrature.
    #[arg(long, default_value = "series")]
    method: String,
}

type Res = Result<Report, CliError>;

fn ok(result: Value) -> Res {
    Ok(Report { result, failure: None })
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn rational(s: &str) -> Result<Rational, CliError> {
    Rational::from_str(s.trim()).map_err(|_| usage(format!("not a rational number: {s:?}")))
}

fn rationals(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').filter(|x| !x.trim().is_empty()).map(rational).collect()
}

fn floats(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse().map_err(|_| usage(format!("not a number: {x:?}"))))
        .collect()
}

fn partition(s: &str) -> Result<Partition, CliError> {
    let parts = s
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse().map_err(|_| usage(format!("not a part: {x:?}"))))
        .collect::<Result<Vec<u32>, _>>()?;
    Partition::new(parts).map_err(|e| usage(e.to_string()))
}

fn exponents(s: &str) -> Result<ExponentVector, CliError> {
    let doubled = rationals(s)?
        .into_iter()
        .map(|r| {
            let d = r * Rational::from_integer(2.into());
            if d.is_integer() && d > Rational::from_integer(0.into()) {
                Ok(d.to_integer().to_string().parse::<u32>().map_err(|e| usage(e.to_string()))?)
            } else {
                Err(usage(format!("exponents must be positive multiples of 1/2, got {s:?}")))
            }
        })
        .collect::<Result<Vec<u32>, _>>()?;
    ExponentVector::from_doubled(doubled).map_err(|e| usage(e.to_string()))
}

fn kind(s: &str) -> Result<EpsilonKind, CliError> {
    EpsilonKind::from_str(s).map_err(|e| usage(e.to_string()))
}

fn complex(z: &ComplexRational) -> Value {
    json!({ "re": z.re.to_string(), "im": z.im.to_string() })
}

fn ratfun(r: &RatFun) -> Value {
    json!({
        "ratfun": r.to_factored_string(),
        "identically_zero": r.is_zero(),
    })
}

fn ratfun_at(r: &RatFun, s: &Option<String>) -> Result<Value, CliError> {
    let Some(s) = s else { return Ok(Value::Null) };
    let s0 = rational(s)?;
    Ok(match r.eval(&s0) {
        Ok(v) => Value::String(v.to_string()),
        Err(_) => json!({ "pole_order": r.pole_order(&s0) }),
    })
}

fn gamma_product_string(g: &GammaProduct, var: &str) -> String {
    let mut parts = vec![g.prefactor.to_string()];
    if !num_traits::Zero::is_zero(&g.pi_power) {
        parts.push(format!("pi^({})", g.pi_power));
    }
    for f in &g.factors {
        let arg = if num_traits::Zero::is_zero(&f.scale) {
            f.shift.to_string()
        } else {
            let lin = if num_traits::One::is_one(&f.scale) {
                var.to_string()
            } else {
                format!("{}*{var}", f.scale)
            };
            if num_traits::Zero::is_zero(&f.shift) {
                lin
            } else if f.shift < num_traits::Zero::zero() {
                format!("{lin} - {}", -f.shift.clone())
            } else {
                format!("{lin} + {}", f.shift)
            }
        };
        parts.push(if f.exponent == 1 {
            format!("Gamma({arg})")
        } else {
            format!("Gamma({arg})^({})", f.exponent)
        });
    }
    parts.join(" * ")
}

fn signature(p: usize, q: usize, k: usize) -> Result<SignatureTriple, CliError> {
    SignatureTriple::new(p, q, k).map_err(|e| usage(e.to_string()))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::SelbergI(_) => "selberg-I",
            Command::FEval(_) => "f-eval",
            Command::FOracle(_) => "f-oracle",
            Command::ResidueCheck(_) => "residue-check",
            Command::D(_) => "D",
            Command::DMc(_) => "D-mc",
            Command::GammaKappa(_) => "gamma-kappa",
            Command::Constantine(_) => "constantine",
            Command::SampleGrassmann(_) => "sample-grassmann",
            Command::AngleDensity(_) => "angle-density",
            Command::ProjectEllipsoid(_) => "project-ellipsoid",
            Command::ProjectMc(_) => "project-mc",
            Command::UniversalPairing(_) => "universal-pairing",
            Command::Centroaffine(_) => "centroaffine",
            Command::MuCVanishing(_) => "mu-c-vanishing",
            Command::Q2Certificate(_) => "q2-certificate",
            Command::UEval(_) => "u-eval",
        }
    }

    pub(crate) fn parameters(&self) -> (String, BTreeMap<String, Value>) {
        let map = match to_value(self) {
            Value::Object(o) => o.into_iter().collect(),
            _ => BTreeMap::new(),
        };
        (self.name().to_string(), map)
    }

    /// Help text of the subcommand, printed on usage errors.
    pub(crate) fn schema(&self) -> String {
        let mut cmd = Cli::command();
        cmd.find_subcommand_mut(self.name())
            .map(|c| c.render_help().to_string())
            .unwrap_or_default()
    }

    pub(crate) fn execute(&self) -> Res {
        match self {
            Command::SelbergI(a) => selberg_i_cmd(a),
            Command::FEval(a) => f_eval(a),
            Command::FOracle(a) => f_oracle_cmd(a),
            Command::ResidueCheck(a) => residue_check(a),
            Command::D(a) => d_cmd(a),
            Command::DMc(a) => d_mc(a),
            Command::GammaKappa(a) => gamma_kappa(a),
            Command::Constantine(a) => constantine(a),
            Command::SampleGrassmann(a) => sample_grassmann(a),
            Command::AngleDensity(a) => density(a),
            Command::ProjectEllipsoid(a) => project(a),
            Command::ProjectMc(a) => project_mc(a),
            Command::UniversalPairing(a) => universal(a),
            Command::Centroaffine(a) => centro(a),
            Command::MuCVanishing(a) => mu_c(a),
            Command::Q2Certificate(a) => q2(a),
            Command::UEval(a) => u_cmd(a),
        }
    }
}

fn selberg_i_cmd(a: &SelbergIArgs) -> Res {
    if a.n == 0 {
        return Err(usage("n must be positive"));
    }
    let shape = match a.shape.as_str() {
        "abs" => Shape::Abs,
        "sgn" => Shape::Sgn,
        "mixed" => Shape::Mixed,
        other => return Err(usage(format!("unknown shape {other:?}"))),
    };
    match selberg_i(a.n, shape) {
        SelbergValue::Real(r) => {
            let mut v = ratfun(&r);
            v["n"] = json!(a.n);
            v["value"] = ratfun_at(&r, &a.s)?;
            ok(v)
        }
        SelbergValue::Complex { re, im } => ok(json!({
            "n": a.n,
            "re": ratfun(&re),
            "im": ratfun(&im),
            "value": { "re": ratfun_at(&re, &a.s)?, "im": ratfun_at(&im, &a.s)? },
        })),
    }
}

fn f_eval(a: &FEvalArgs) -> Res {
    let e = exponents(&a.e)?;
    let closed = f_closed(&e);
    let mut v = json!({ "doubled": e.doubled(), "closed": complex(&closed) });
    if a.recursive {
        let rec = f_recursive(&e);
        v["recursive"] = complex(&rec);
        v["agree"] = json!(rec == closed);
        if rec != closed {
            return Ok(Report {
                result: v,
                failure: Some("closed form and recursion differ".into()),
            });
        }
    }
    ok(v)
}

fn f_oracle_cmd(a: &FOracleArgs) -> Res {
    let e = exponents(&a.e)?;
    let n = e.len();
    let domain = match a.positive {
        None => Domain::Full,
        Some(p) if p <= n => Domain::Chamber {
            positive: p,
            negative: n - p,
        },
        Some(p) => return Err(usage(format!("positive = {p} exceeds n = {n}"))),
    };
    let v = f_oracle(&e, domain).map_err(|e| usage(e.to_string()))?;
    ok(json!({ "doubled": e.doubled(), "domain": to_value(&domain), "oracle": complex(&v) }))
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| {
            let num: i64 = rng.gen_range(-30..=30);
            let den: i64 = rng.gen_range(1..=7);
            Rational::new(num.into(), den.into())
        })
        .collect()
}

fn residue_check(a: &ResidueArgs) -> Res {
    if !(1..=3).contains(&a.identity) {
        return Err(usage("identity must be 1, 2 or 3"));
    }
    if let Some(list) = &a.a {
        let v = rationals(list)?;
        let (lhs, rhs) = residue_identity_check(&v, a.identity).map_err(|e| usage(e.to_string()))?;
        let result = json!({ "identity": a.identity, "lhs": lhs.to_string(), "rhs": rhs.to_string(), "holds": lhs == rhs });
        let failure = (lhs != rhs).then(|| format!("identity {} fails on {list}", a.identity));
        return Ok(Report { result, failure });
    }
    let seed = a.seed.ok_or_else(|| usage("random vectors need --seed"))?;
    if a.max_len == 0 {
        return Err(usage("max-len must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut checked, mut failures) = (0u64, Vec::new());
    while checked < a.count {
        let len = rng.gen_range(1..=a.max_len);
        let v = random_vector(&mut rng, len);
        match residue_identity_check(&v, a.identity) {
            Ok((lhs, rhs)) => {
                checked += 1;
                if lhs != rhs {
                    failures.push(v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
                }
            }
            Err(_) => continue,
        }
    }
    let result = json!({ "identity": a.identity, "checked": checked, "failures": failures });
    let failure = (!failures.is_empty()).then(|| format!("{} vectors violate identity {}", failures.len(), a.identity));
    Ok(Report { result, failure })
}

fn d_cmd(a: &DArgs) -> Res {
    let k = kind(&a.kind)?;
    let r = d_closed(a.n, k).map_err(|e| usage(e.to_string()))?;
    if r.is_identically_zero() {
        return ok(json!({ "n": a.n, "kind": k, "identically_zero": true }));
    }
    let mut v = json!({
        "n": a.n,
        "kind": k,
        "identically_zero": false,
        "ratfun": r.exact.to_factored_string(),
        "constant": gamma_product_string(&r.constant, "s"),
        "numerator_constant": r.exact.numerator_is_constant(),
    });
    if let Some(s) = &a.s {
        let s0 = rational(s)?;
        v["value"] = match r.eval_exact(&s0) {
            Some(x) => json!({ "exact": x.to_string(), "float": x.to_f64() }),
            None => json!({ "pole_order": r.exact.pole_order(&s0) }),
        };
    }
    ok(v)
}

fn d_mc(a: &DMcArgs) -> Res {
    let kinds = a.kind.split(',').map(kind).collect::<Result<Vec<_>, _>>()?;
    let est = d_mc_oracle_many(a.n, &kinds, a.s, a.samples, a.seed).map_err(CliError::compute)?;
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for e in &est {
        let closed = d_closed(a.n, e.kind).map_err(CliError::compute)?.eval(a.s);
        let z = if e.stderr > 0.0 {
            (e.mean - closed) / e.stderr
        } else if e.mean == closed {
            0.0
        } else {
            f64::INFINITY
        };
        if z.abs() > 4.0 {
            bad.push(e.kind.to_string());
        }
        rows.push(json!({
            "kind": e.kind,
            "mc": e.mean,
            "stderr": e.stderr,
            "closed": closed,
            "z": z,
            "acceptance": e.acceptance(),
        }));
    }
    let failure = (!bad.is_empty()).then(|| format!("|z| > 4 for {}", bad.join(",")));
    Ok(Report {
        result: json!({ "n": a.n, "s": a.s, "samples": a.samples, "rows": rows }),
        failure,
    })
}

fn gamma_kappa(a: &GammaKappaArgs) -> Res {
    let kappa = partition(&a.kappa)?;
    let x = rational(&a.x)?;
    let g = gamma_n_kappa(a.n, &kappa).map_err(|e| usage(e.to_string()))?;
    let lead = g.leading_term(&x).map_err(CliError::compute)?;
    ok(json!({
        "n": a.n,
        "kappa": kappa.to_string(),
        "x": x.to_string(),
        "product": gamma_product_string(&g, "x"),
        "pole_order": g.pole_order_at(&x),
        "leading_order": lead.order,
        "leading_coefficient": lead.coefficient,
    }))
}

fn constantine(a: &ConstantineArgs) -> Res {
    let kappa = partition(&a.kappa)?;
    let alpha = rational(&a.alpha)?;
    let g = constantine_ratio(a.n, &alpha, &kappa).map_err(|e| usage(e.to_string()))?;
    let mut v = json!({
        "n": a.n,
        "alpha": alpha.to_string(),
        "kappa": kappa.to_string(),
        "product": gamma_product_string(&g, "s"),
    });
    if let Some(s) = &a.s {
        let s0 = rational(s)?;
        let lead = g.leading_term(&s0).map_err(CliError::compute)?;
        v["s"] = json!(s0.to_string());
        v["pole_order"] = json!(g.pole_order_at(&s0));
        v["leading_coefficient"] = json!(lead.coefficient);
    }
    ok(v)
}

fn sample_grassmann(a: &SampleArgs) -> Res {
    let sig = signature(a.p, a.q, a.k)?;
    let batch = haar_batch(sig, a.samples as usize, a.seed);
    let rows: Vec<Value> = batch
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let mut row = serde_json::Map::new();
            row.insert("index".into(), json!(i));
            for (j, l) in s.spectrum().iter().enumerate() {
                row.insert(format!("lambda_{}", j + 1), json!(l));
            }
            let o = s.orbit_signature();
            row.insert("orbit_a".into(), json!(o.a));
            row.insert("orbit_b".into(), json!(o.b));
            row.insert("orthonormality_defect".into(), json!(s.orthonormality_defect()));
            Value::Object(row)
        })
        .collect();
    ok(json!({ "signature": sig, "big_n": sig.big_n(), "rows": rows }))
}

fn density(a: &DensityArgs) -> Res {
    let sig = signature(a.p, a.q, a.k)?;
    let mut v = json!({ "signature": sig, "big_n": sig.big_n() });
    if let Some(l) = &a.lambda {
        let lam = floats(l)?;
        v["density"] = json!(angle_density(&sig, &lam).map_err(|e| usage(e.to_string()))?);
    }
    let probs = (0..=sig.big_n())
        .map(|b| chamber_probability(&sig, b))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| usage(e.to_string()))?;
    v["chamber_probabilities"] = json!(probs);
    if a.grid > 0 {
        let grid = lambda1_cdf_grid(&sig, a.grid).map_err(|e| usage(e.to_string()))?;
        v["rows"] = json!(grid.iter().map(|(l, c)| json!({ "lambda_1": l, "cdf": c })).collect::<Vec<_>>());
    }
    ok(v)
}

fn project(a: &ProjectArgs) -> Res {
    let sig = signature(a.p, a.q, a.k)?;
    let e = haar_sample(sig, a.seed);
    let closed = ellipsoid_projection_volume(&e, a.a, a.b).map_err(|e| usage(e.to_string()))?;
    let gram = ellipsoid_projection_gram(&e, a.a, a.b).map_err(|e| usage(e.to_string()))?;
    ok(json!({
        "signature": sig,
        "spectrum": e.spectrum(),
        "closed": closed,
        "gram": gram,
        "rel_diff": (closed / gram - 1.0).abs(),
    }))
}

fn project_mc(a: &ProjectMcArgs) -> Res {
    let sig = signature(a.p, a.q, a.k)?;
    let e = haar_sample(sig, a.seed);
    let closed = ellipsoid_projection_volume(&e, a.a, a.b).map_err(|e| usage(e.to_string()))?;
    let (mc, se) = projection_mc_oracle(&e, a.a, a.b, a.samples, a.seed).map_err(|e| usage(e.to_string()))?;
    let rel = (mc / closed - 1.0).abs();
    let z = if se > 0.0 { (mc - closed) / se } else { 0.0 };
    let result = json!({
        "signature": sig,
        "spectrum": e.spectrum(),
        "closed": closed,
        "mc": mc,
        "stderr": se,
        "rel_err": rel,
        "z": z,
    });
    let failure = (rel > 0.01 || z.abs() > 4.0).then(|| format!("MC differs from closed form: rel {rel:e}, z {z}"));
    Ok(Report { result, failure })
}

fn universal(a: &UniversalArgs) -> Res {
    let case = match a.family.as_str() {
        "abs" => UniversalCase::Abs2m { m: a.index },
        "sgn" => UniversalCase::Sgn2m1 { m: a.index },
        "cos" => UniversalCase::CosPp { p: a.index },
        "sin" => UniversalCase::SinPp { p: a.index },
        other => return Err(usage(format!("unknown family {other:?}"))),
    };
    let r = universal_pairing(case).map_err(|e| usage(e.to_string()))?;
    let failure = (!r.certified).then(|| "pairing vanishes".to_string());
    Ok(Report {
        result: to_value(&r),
        failure,
    })
}

fn centro(a: &CentroArgs) -> Res {
    let r = centroaffine_pairing(a.p).map_err(|e| usage(e.to_string()))?;
    let failure = (!r.certified).then(|| "pairing vanishes".to_string());
    Ok(Report {
        result: to_value(&r),
        failure,
    })
}

fn mu_c(a: &MuCArgs) -> Res {
    let r = mu_c_vanishing_up_to(a.m, a.max_first.unwrap_or(2 * a.m + 1)).map_err(|e| usage(e.to_string()))?;
    let failure = (!r.certified).then(|| format!("net pole order {} is not below {}", r.max_net, r.m));
    let mut v = to_value(&r);
    let rows: Vec<Value> = r
        .pole_orders
        .iter()
        .map(|x| {
            json!({
                "kappa": x.kappa.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                "numerator": x.numerator,
                "denominator": x.denominator,
                "net": x.net,
            })
        })
        .collect();
    v["rows"] = json!(rows);
    Ok(Report { result: v, failure })
}

fn q2(a: &Q2Args) -> Res {
    let ks: Vec<u32> = match a.k {
        Some(k) => vec![k],
        None => (2..=a.p).collect(),
    };
    if ks.is_empty() {
        return Err(usage("need p >= 2"));
    }
    let mut certs = Vec::new();
    let mut failed = Vec::new();
    let mut tables = Vec::new();
    for &k in &ks {
        let c = q2_report(a.p, k).map_err(|e| usage(e.to_string()))?;
        if let Some(e) = c.failing_entry() {
            failed.push(format!("(p, k) = ({}, {k}): int_{{L^{}}} {} = {:e}", a.p, e.angle, e.functional, e.value));
        }
        if a.tables {
            for alpha in [Angle::Zero, Angle::HalfPi] {
                for row in restriction_table(a.p, k, alpha).map_err(|e| usage(e.to_string()))? {
                    tables.push(json!({ "k": k, "alpha": row.alpha, "b": row.b, "value": row.value.to_string() }));
                }
            }
        }
        certs.push(c);
    }
    let rows: Vec<Value> = certs
        .iter()
        .map(|c| {
            json!({
                "p": c.p,
                "k": c.k,
                "row": c.row,
                "strategy": to_value(&c.strategy)["type"],
                "determinant": c.determinant,
                "certified": c.certified,
            })
        })
        .collect();
    let mut result = json!({ "p": a.p, "certificates": to_value(&certs), "rows": rows });
    if a.tables {
        result["restriction_tables"] = json!(tables);
    }
    let failure = (!failed.is_empty()).then(|| failed.join("; "));
    Ok(Report { result, failure })
}

fn u_cmd(a: &UArgs) -> Res {
    let v = match a.method.as_str() {
        "series" => u_eval(a.s, a.a, a.b),
        "reduce" => u_reduce(a.s, a.a, a.b),
        "quadrature" => u_quadrature(a.s, a.a, a.b),
        other => return Err(usage(format!("unknown method {other:?}"))),
    }
    .map_err(|e| usage(e.to_string()))?;
    ok(json!({ "s": a.s, "a": a.a, "b": a.b, "method": a.method, "value": v }))
}
