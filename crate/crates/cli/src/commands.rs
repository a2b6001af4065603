//! Subcommand arguments and handlers.

use crate::parse::{self, Group, SuPoint};
use crate::{Cli, Command, Computed, Failure};
use beurling::emotion::{e2_radial_submult, e2_spectrum_member, e2_spectrum_sweep, E2CPoint};
use beurling::heis::{
    heis_fourier, heis_spectrum_member, rheis_central_weight_check, rheis_plancherel_atom, rheis_tensor, FourierMethod,
    HeisGrid, HeisPoint, RHeisLabel, TestFunction,
};
use beurling::numeric::geomspace;
use beurling::quadrature::QuadratureSpec;
use beurling::regularity::{quasianalytic_test, shilov_radius, torus_annulus_member, SeriesClass};
use beurling::repsu::{self, ComplexDiagonal, HighestWeight, NormMethod};
use beurling::speccompact::{spectrum_member_central_exp, spectrum_member_torus_extended, spectrum_sweep};
use beurling::weights::{
    check_submultiplicative_compact, exponential_growth_bound, AbelianWeight, Domain, SampleGrid, WeightDescriptor,
    WeightFunction,
};
use beurling::{Report, Status, Verdict};
use clap::{Args, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

fn group_arg(s: &str) -> Result<Group, String> {
    s.parse()
}

fn weight_arg(s: &str) -> Result<WeightDescriptor, String> {
    s.parse().map_err(|e: beurling::Error| e.to_string())
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn cjson(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn dimension_value(d: u128) -> Value {
    match u64::try_from(d) {
        Ok(v) => json!(v),
        Err(_) => json!(d.to_string()),
    }
}

fn weight_json(w: &HighestWeight) -> Value {
    json!({ "label": w.to_string(), "a": w.a(), "lambda": w.lambda(), "dimension": dimension_value(w.dimension()) })
}

/// Highest weight from exactly one of `--a` and `--lambda`.
#[derive(Args, Debug, Clone)]
pub struct WeightSpec {
    /// a-coordinates, e.g. `1,0`.
    #[arg(long)]
    pub a: Option<String>,
    /// Partition, e.g. `1,1,0`; a trailing zero may be omitted.
    #[arg(long)]
    pub lambda: Option<String>,
}

impl WeightSpec {
    fn resolve(&self, group: Group) -> Result<HighestWeight, Failure> {
        let Group::Su(n) = group else {
            return Err(Failure::Validation(format!("highest weights need an su<n> group, got {group}")));
        };
        match (&self.a, &self.lambda) {
            (Some(a), None) => Ok(HighestWeight::new(n, parse::u32_list(a)?)?),
            (None, Some(l)) => {
                let mut l = parse::u32_list(l)?;
                if l.len() + 1 == n {
                    l.push(0);
                }
                if l.len() != n {
                    return Err(Failure::Validation(format!("lambda needs {n} entries")));
                }
                Ok(HighestWeight::from_lambda(&l)?)
            }
            _ => Err(Failure::Validation("give exactly one of --a and --lambda".into())),
        }
    }
}

#[derive(Args, Debug)]
pub struct TableauxArgs {
    #[arg(value_parser = group_arg)]
    pub group: Group,
    #[command(flatten)]
    pub weight: WeightSpec,
    /// Largest number of tableaux to enumerate.
    #[arg(long, default_value_t = repsu::DEFAULT_TABLEAU_CAP)]
    pub cap: u128,
    /// Diagonal point `diag:x1,...,xn`; adds the torus eigenvalues.
    #[arg(long)]
    pub point: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormChoice {
    Closed,
    Brute,
    Both,
}

#[derive(Args, Debug)]
pub struct NormArgs {
    #[arg(value_parser = group_arg)]
    pub group: Group,
    #[command(flatten)]
    pub weight: WeightSpec,
    /// Diagonal point `diag:x1,...,xn`.
    #[arg(long)]
    pub point: String,
    #[arg(long, value_enum, default_value_t = NormChoice::Both)]
    pub method: NormChoice,
}

#[derive(Args, Debug)]
pub struct WeightCheckArgs {
    #[arg(value_parser = group_arg)]
    pub group: Group,
    /// Weight descriptor, e.g. `dim(alpha=1)`.
    #[arg(long, value_parser = weight_arg)]
    pub weight: WeightDescriptor,
    /// Window: largest length L on SU(n), grid radius elsewhere.
    #[arg(long, default_value_t = 8)]
    pub window: u32,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[arg(value_parser = group_arg)]
    pub group: Group,
    #[arg(long, value_parser = weight_arg)]
    pub weight: WeightDescriptor,
    /// `diag:...`/`mat:...` on su<n>; `y,z,x` on heis; `x,y,z` on e2;
    /// `z1,...,zk` on z<k>.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    /// Largest length in the SU(n) numeric sweep.
    #[arg(long, default_value_t = 200)]
    pub sweep_window: u32,
    /// Largest |n| in the E(2) numeric sweep.
    #[arg(long, default_value_t = 200)]
    pub e2_window: i64,
    /// Grid radius for the Heisenberg cross-check.
    #[arg(long, default_value_t = 50.0)]
    pub heis_radius: f64,
    /// Grid points per axis for the Heisenberg cross-check.
    #[arg(long, default_value_t = 201)]
    pub heis_steps: usize,
    /// Horizon K of the Shilov radius estimates on z<k>.
    #[arg(long, default_value_t = 1_000_000)]
    pub horizon: u64,
}

#[derive(Args, Debug)]
pub struct FusionArgs {
    #[arg(value_parser = group_arg)]
    pub group: Group,
    #[command(flatten)]
    pub weight: WeightSpec,
    /// Second SU(2) label for the Clebsch–Gordan rule.
    #[arg(long)]
    pub b: Option<u32>,
    /// Tensor with the k-th fundamental representation.
    #[arg(long)]
    pub fundamental: Option<usize>,
    /// Restrict to SU(n−1).
    #[arg(long)]
    pub branch: bool,
    /// Reduced Heisenberg labels `pi^n` or `chi(r,s)`.
    #[arg(long, allow_hyphen_values = true)]
    pub left: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub right: Option<String>,
    /// E(2) radii.
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub s: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Kernel,
    Direct,
    Both,
}

#[derive(Args, Debug)]
pub struct FourierArgs {
    #[arg(value_parser = group_arg)]
    pub group: Group,
    /// Representation parameter `a ≠ 0`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: f64,
    /// Gaussian exponents of the three factors.
    #[arg(long, default_value = "1,1,1")]
    pub alphas: String,
    #[arg(long, default_value_t = 8)]
    pub basis: usize,
    #[arg(long, default_value_t = 64)]
    pub nodes: usize,
    /// Largest accepted quadrature error estimate.
    #[arg(long, default_value_t = 1e-6)]
    pub quad_tol: f64,
    #[arg(long, value_enum, default_value_t = MethodChoice::Both)]
    pub method: MethodChoice,
}

#[derive(Args, Debug)]
pub struct RegularityArgs {
    #[arg(long, value_parser = weight_arg)]
    pub weight: WeightDescriptor,
    /// Direction x of the series Σ log w(nx)/(1+n²).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub direction: String,
    /// Series horizon N.
    #[arg(long, default_value_t = 10_000)]
    pub horizon: u64,
    /// Horizon K of the Shilov radius estimates.
    #[arg(long, default_value_t = 1_000_000)]
    pub radius_horizon: u64,
    /// Optional torus point `z1,...,zk` to test against the annulus.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
}

pub(crate) fn dispatch(cli: &Cli) -> Result<Computed, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Tableaux(a) => tableaux(a),
        Command::Norm(a) => norm(a),
        Command::WeightCheck(a) => weight_check(a),
        Command::Spectrum(a) => spectrum(a, g.det_tol, g.band),
        Command::Fusion(a) => fusion(a),
        Command::Fourier(a) => fourier(a),
        Command::Regularity(a) => regularity(a),
    }
}

fn done(inputs: Value, result: Value) -> Result<Computed, Failure> {
    Ok(Computed { inputs, result, inconclusive: false })
}

fn tableaux(a: &TableauxArgs) -> Result<Computed, Failure> {
    let w = a.weight.resolve(a.group)?;
    let list = repsu::enumerate_tableaux_capped(&w, a.cap)?;
    let mut inputs = json!({ "group": a.group.to_string(), "weight": weight_json(&w), "cap": a.cap.to_string() });
    let mut result = json!({
        "count": list.len(),
        "tableaux": list.iter().map(|t| json!({ "rows": t.rows, "content": t.content })).collect::<Vec<_>>(),
    });
    if let Some(p) = &a.point {
        let SuPoint::Diag(e) = SuPoint::parse(p, w.n())? else {
            return Err(Failure::Validation("torus eigenvalues need a diagonal point".into()));
        };
        let d = ComplexDiagonal::new(e.clone())?;
        let ev = repsu::torus_action(&w, &d)?;
        inputs["point"] = Value::Array(e.into_iter().map(cjson).collect());
        result["eigenvalues"] = Value::Array(ev.into_iter().map(cjson).collect());
    }
    done(inputs, result)
}

fn norm(a: &NormArgs) -> Result<Computed, Failure> {
    let w = a.weight.resolve(a.group)?;
    let SuPoint::Diag(e) = SuPoint::parse(&a.point, w.n())? else {
        return Err(Failure::Validation("norm needs a diagonal point".into()));
    };
    let d = ComplexDiagonal::new(e.clone())?;
    let mut result = json!({});
    let methods: &[(NormMethod, &str)] = match a.method {
        NormChoice::Closed => &[(NormMethod::Closed, "closed")],
        NormChoice::Brute => &[(NormMethod::Brute, "brute")],
        NormChoice::Both => &[(NormMethod::Closed, "closed"), (NormMethod::Brute, "brute")],
    };
    let mut logs = Vec::new();
    for (m, name) in methods {
        let l = repsu::log_complexified_norm(&w, &d, *m)?;
        logs.push(l);
        result[*name] = json!({ "log_norm": l, "norm": l.exp() });
    }
    if let [c, b] = logs[..] {
        result["relative_difference"] = json!(((b - c).exp() - 1.0).abs());
    }
    let inputs = json!({
        "group": a.group.to_string(),
        "weight": weight_json(&w),
        "point": e.into_iter().map(cjson).collect::<Vec<_>>(),
    });
    done(inputs, result)
}

fn abelian(d: &WeightDescriptor) -> Result<AbelianWeight, Failure> {
    Ok(AbelianWeight::from_descriptor(d)?)
}

/// `w(x + y) ≤ w(x) w(y)` for all `x, y` on an integer grid in dimension ≤ 2.
fn lattice_submult(w: &dyn WeightFunction, dim: usize, radius: i64) -> Report {
    let axis: Vec<i64> = (-radius..=radius).collect();
    let points: Vec<Vec<i64>> = match dim {
        1 => axis.iter().map(|&i| vec![i]).collect(),
        _ => axis.iter().flat_map(|&i| axis.iter().map(move |&j| vec![i, j])).collect(),
    };
    let f = |v: &[i64]| v.iter().map(|&c| c as f64).collect::<Vec<f64>>();
    let mut report = Report::new();
    for x in &points {
        for y in &points {
            let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
            if s.iter().any(|c| c.abs() > radius) {
                continue;
            }
            let lhs = w.log_value(&f(&s));
            let rhs = w.log_value(&f(x)) + w.log_value(&f(y));
            report.check(|| format!("x = {x:?}, y = {y:?}"), lhs, rhs, beurling::weights::LOG_TOL);
        }
    }
    report
}

fn weight_check(a: &WeightCheckArgs) -> Result<Computed, Failure> {
    let d = &a.weight;
    let inputs = json!({ "group": a.group.to_string(), "weight": d.to_string(), "window": a.window });
    let radius = a.window as i64;
    let result = match a.group {
        Group::Su(n) => {
            let report = check_submultiplicative_compact(d, n, a.window)?;
            json!({ "passed": report.passed, "submultiplicativity": to_value(&report) })
        }
        Group::Z(_) | Group::Heis => {
            let w = abelian(d)?;
            let (dim, grid) = match a.group {
                Group::Heis => (2, SampleGrid { dim: 2, domain: Domain::Real, radius: a.window as f64, step: 0.25 }),
                Group::Z(k) => (k, SampleGrid::integer(k, radius)),
                _ => unreachable!(),
            };
            let growth = match exponential_growth_bound(&w, &grid) {
                Ok(g) => json!({ "passed": true, "bound": to_value(&g) }),
                Err(beurling::Error::GrowthBoundViolated { point, log_value, log_bound }) => json!({
                    "passed": false, "point": point, "log_value": log_value, "log_bound": log_bound,
                }),
                Err(e) => return Err(e.into()),
            };
            let mut result = json!({ "growth": growth });
            let mut passed = growth["passed"] == json!(true);
            if dim <= 2 {
                let report = lattice_submult(&w, dim, radius);
                passed &= report.passed;
                result["submultiplicativity"] = to_value(&report);
            }
            result["passed"] = json!(passed);
            result
        }
        Group::E2 => match *d {
            WeightDescriptor::AbelRadial { beta } => {
                let samples: Vec<(f64, f64)> = (1..=a.window)
                    .flat_map(|i| (1..=a.window).map(move |j| (i as f64 * 0.5, j as f64 * 0.5)))
                    .collect();
                let report = e2_radial_submult(&|x: f64| beta.powf(x), &samples, 101);
                json!({ "passed": report.passed, "submultiplicativity": to_value(&report) })
            }
            WeightDescriptor::E2Lap { t } => {
                let mut report = Report::new();
                let rs: Vec<f64> = (0..=2 * a.window).map(|i| i as f64 * 0.5).collect();
                for m in -radius..=radius {
                    for n in -radius..=radius {
                        for &r in &rs {
                            for &s in &rs {
                                let (m, n) = (m as f64, n as f64);
                                let lhs = t * (m + n).hypot(r + s);
                                let rhs = t * (m.hypot(r) + n.hypot(s));
                                report.check(|| format!("(m, n, r, s) = ({m}, {n}, {r}, {s})"), lhs, rhs, 1e-12);
                            }
                        }
                    }
                }
                json!({ "passed": report.passed, "submultiplicativity": to_value(&report) })
            }
            _ => return Err(inapplicable(d, "e2")),
        },
        Group::RHeis => {
            let wz: Box<dyn Fn(i64) -> f64> = match *d {
                WeightDescriptor::LenExp { beta } => Box::new(move |n: i64| beta.powf(n.unsigned_abs() as f64)),
                WeightDescriptor::LenPoly { alpha } => Box::new(move |n: i64| (1.0 + n.unsigned_abs() as f64).powf(alpha)),
                _ => return Err(inapplicable(d, "rheis")),
            };
            let grid: Vec<(f64, f64)> =
                (-4..=4).flat_map(|i| (-4..=4).map(move |j| (i as f64 * 0.5, j as f64 * 0.5))).collect();
            let report = rheis_central_weight_check(&*wz, &|_, _| 1.0, radius, &grid);
            json!({ "passed": report.passed, "central_weight": to_value(&report) })
        }
    };
    done(inputs, result)
}

fn inapplicable(d: &WeightDescriptor, group: &str) -> Failure {
    Failure::Validation(
        beurling::Error::Inapplicable { family: d.family().into(), target: group.into() }.to_string(),
    )
}

fn triple(s: &str) -> Result<[Complex64; 3], Failure> {
    let v = parse::complex_list(s)?;
    v.try_into().map_err(|_| Failure::Validation(format!("point `{s}` needs three coordinates")))
}

fn spectrum(a: &SpectrumArgs, det_tol: f64, band: f64) -> Result<Computed, Failure> {
    let d = &a.weight;
    let mut inputs = json!({ "group": a.group.to_string(), "weight": d.to_string(), "point": a.point });
    let (headline, cross): (Verdict, Option<Verdict>) = match a.group {
        Group::Su(n) => {
            let p = SuPoint::parse(&a.point, n)?;
            inputs["det_tol"] = json!(det_tol);
            let sweep = |v: &[Complex64]| -> Result<Verdict, Failure> {
                Ok(spectrum_sweep(&ComplexDiagonal::new(v.to_vec())?, d, a.sweep_window, band)?)
            };
            match (d, &p) {
                (WeightDescriptor::LenExp { beta }, _) => {
                    let closed = spectrum_member_central_exp(&p.matrix(), *beta, det_tol)?;
                    let cross = match &p {
                        SuPoint::Diag(e) => Some(sweep(e)?),
                        SuPoint::Dense(_) => None,
                    };
                    (closed, cross)
                }
                (WeightDescriptor::Torus { betas }, _) => {
                    (spectrum_member_torus_extended(&p.matrix(), betas, det_tol)?, None)
                }
                (_, SuPoint::Diag(e)) if d.is_su_central() => (sweep(e)?, None),
                (_, SuPoint::Dense(_)) if d.is_su_central() => {
                    return Err(Failure::Validation("the numeric sweep needs a diagonal point".into()))
                }
                _ => return Err(inapplicable(d, &a.group.to_string())),
            }
        }
        Group::Heis => {
            let [y, z, x] = triple(&a.point)?;
            let grid = HeisGrid { radius: a.heis_radius, steps: a.heis_steps, band };
            (heis_spectrum_member(&HeisPoint::new(y, z, x), &abelian(d)?, &grid), None)
        }
        Group::E2 => {
            let [x, y, z] = triple(&a.point)?;
            let p = E2CPoint::new(x, y, z)?;
            let closed = e2_spectrum_member(&p, d)?;
            let cross = match *d {
                WeightDescriptor::E2Lap { t } => {
                    Some(e2_spectrum_sweep(&p, t, a.e2_window, &geomspace(0.01, 50.0, 50), band))
                }
                _ => None,
            };
            (closed, cross)
        }
        Group::Z(k) => {
            let z = parse::complex_list(&a.point)?;
            if z.len() != k {
                return Err(Failure::Validation(format!("point needs {k} coordinates")));
            }
            let mut dirs: Vec<Vec<f64>> = (0..k).map(|i| (0..k).map(|j| f64::from(i == j)).collect()).collect();
            if k > 1 {
                dirs.push(vec![1.0; k]);
            }
            inputs["horizon"] = json!(a.horizon);
            (torus_annulus_member(&z, &abelian(d)?, &dirs, a.horizon)?, None)
        }
        Group::RHeis => return Err(inapplicable(d, "rheis")),
    };
    let inconclusive = headline.status == Status::Inconclusive;
    let mut result = json!({ "verdict": to_value(&headline) });
    if let Some(c) = cross {
        result["cross_check"] = to_value(&c);
    }
    Ok(Computed { inputs, result, inconclusive })
}

fn fusion(a: &FusionArgs) -> Result<Computed, Failure> {
    let mut inputs = json!({ "group": a.group.to_string() });
    let result = match a.group {
        Group::Su(n) => {
            let w = a.weight.resolve(a.group)?;
            inputs["weight"] = weight_json(&w);
            let parts = match (a.b, a.fundamental, a.branch) {
                (Some(b), None, false) if n == 2 => {
                    inputs["b"] = json!(b);
                    repsu::tensor_decompose_su2(w.a()[0], b)
                        .into_iter()
                        .map(|c| HighestWeight::new(2, vec![c]))
                        .collect::<beurling::Result<Vec<_>>>()?
                }
                (None, Some(k), false) => {
                    inputs["fundamental"] = json!(k);
                    repsu::tensor_with_fundamental(&w, k)?
                }
                (None, None, true) => {
                    inputs["branch"] = json!(true);
                    repsu::branch_to_sun1(&w)?
                }
                _ => {
                    return Err(Failure::Validation(
                        "give one of --b (su2 only), --fundamental or --branch".into(),
                    ))
                }
            };
            let total: u128 = parts.iter().map(|p| p.dimension()).sum();
            json!({
                "components": parts.iter().map(weight_json).collect::<Vec<_>>(),
                "total_dimension": dimension_value(total),
            })
        }
        Group::RHeis => {
            let (Some(l), Some(r)) = (&a.left, &a.right) else {
                return Err(Failure::Validation("rheis fusion needs --left and --right".into()));
            };
            let (l, r) = (parse::rheis_label(l)?, parse::rheis_label(r)?);
            inputs["left"] = to_value(&l);
            inputs["right"] = to_value(&r);
            let out = rheis_tensor(&l, &r)?;
            let atom = |x: &RHeisLabel| match x {
                RHeisLabel::Discrete(n) => rheis_plancherel_atom(*n).ok(),
                _ => None,
            };
            json!({
                "product": to_value(&out),
                "label": out.to_string(),
                "plancherel_atom": atom(&out),
            })
        }
        Group::E2 => {
            let (Some(r), Some(s)) = (a.r, a.s) else {
                return Err(Failure::Validation("e2 fusion needs --r and --s".into()));
            };
            if !(r > 0.0 && s > 0.0 && r.is_finite() && s.is_finite()) {
                return Err(Failure::Validation("radii must be positive and finite".into()));
            }
            inputs["r"] = json!(r);
            inputs["s"] = json!(s);
            json!({ "direct_integral_over": [(r - s).abs(), r + s] })
        }
        g => return Err(Failure::Validation(format!("no fusion rules for {g}"))),
    };
    done(inputs, result)
}

fn fourier(a: &FourierArgs) -> Result<Computed, Failure> {
    if a.group != Group::Heis {
        return Err(Failure::Validation("fourier is only available on heis".into()));
    }
    if a.a == 0.0 || !a.a.is_finite() {
        return Err(Failure::Validation("a must be nonzero and finite".into()));
    }
    let alphas: [f64; 3] = parse::f64_list(&a.alphas)?
        .try_into()
        .map_err(|_| Failure::Validation("--alphas needs three values".into()))?;
    let f = TestFunction::gaussian(alphas);
    f.validate()?;
    let spec = QuadratureSpec { basis: a.basis, nodes: a.nodes, tolerance: a.quad_tol };
    let methods: &[(FourierMethod, &str)] = match a.method {
        MethodChoice::Kernel => &[(FourierMethod::Kernel, "kernel")],
        MethodChoice::Direct => &[(FourierMethod::Direct, "direct")],
        MethodChoice::Both => &[(FourierMethod::Kernel, "kernel"), (FourierMethod::Direct, "direct")],
    };
    let mut result = json!({});
    let mut mats = Vec::new();
    for (m, name) in methods {
        let op = heis_fourier(&f, a.a, &spec, *m)?;
        let rows: Vec<Vec<Value>> = (0..op.basis)
            .map(|i| (0..op.basis).map(|j| cjson(op.matrix[(i, j)])).collect())
            .collect();
        result[*name] = json!({ "matrix": rows, "error_estimate": op.error_estimate });
        mats.push(op.matrix);
    }
    if let [k, d] = &mats[..] {
        result["relative_frobenius_difference"] = json!((k - d).norm() / k.norm());
    }
    let inputs = json!({
        "group": "heis", "a": a.a, "alphas": alphas, "basis": a.basis, "nodes": a.nodes, "quad_tol": a.quad_tol,
    });
    done(inputs, result)
}

fn regularity(a: &RegularityArgs) -> Result<Computed, Failure> {
    let w = abelian(&a.weight)?;
    let x = parse::f64_list(&a.direction)?;
    if a.horizon < 1000 {
        return Err(Failure::Validation("--horizon must be at least 1000".into()));
    }
    let diag = quasianalytic_test(&w, &x, a.horizon);
    let neg: Vec<f64> = x.iter().map(|v| -v).collect();
    let plus = shilov_radius(&w, &x, a.radius_horizon);
    let minus = shilov_radius(&w, &neg, a.radius_horizon);
    let mut inconclusive = diag.classification == SeriesClass::Inconclusive;
    let mut result = json!({
        "series": to_value(&diag),
        "shilov_radius": { "plus": to_value(&plus), "minus": to_value(&minus), "product": plus.rho * minus.rho },
    });
    let mut inputs = json!({
        "weight": a.weight.to_string(), "direction": x, "horizon": a.horizon, "radius_horizon": a.radius_horizon,
    });
    if let Some(p) = &a.point {
        let z = parse::complex_list(p)?;
        let dirs: Vec<Vec<f64>> = (0..z.len()).map(|i| (0..z.len()).map(|j| f64::from(i == j)).collect()).collect();
        let v = torus_annulus_member(&z, &w, &dirs, a.radius_horizon)?;
        inconclusive |= v.status == Status::Inconclusive;
        inputs["point"] = Value::Array(z.into_iter().map(cjson).collect());
        result["annulus"] = to_value(&v);
    }
    Ok(Computed { inputs, result, inconclusive })
}
