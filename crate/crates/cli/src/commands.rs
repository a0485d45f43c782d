//! Single-point evaluators behind the subcommands. Each returns an ordered
//! artifact (CSV table or JSON string) for one parameter assignment; sweep
//! expansion happens in the dispatcher.

use crate::table::{format_float, Table, Value};
use crate::CliError;
use eps_graded::{
    cf_validate, eps_from_sigma, sigma_from_eps, CommutationFactor, ElementaryAlgebra,
    GradingGroup, Root,
};
use gauge_vacuum::{vacuum_sequence_2d, vacuum_sequence_4d, GaugeModel};
use gw_scalar::{scalar_eom_residual, scalar_vacuum, ScalarModel};
use moyal_core::MoyalParams;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use ribbon::RibbonGraph;

fn usize_param(name: &str, v: f64) -> Result<usize, CliError> {
    if v < 0.0 || v.fract() != 0.0 {
        return Err(CliError::Domain(format!(
            "parameter `{name}` must be a nonnegative integer, got {v}"
        )));
    }
    Ok(v as usize)
}

/// `vacuum-scalar`: the diagonal vacuum a_k of the broken-phase self-dual
/// scalar model; rows (k, a_k). The equation of motion is re-verified at
/// the requested truncation as an accuracy gate.
pub fn vacuum_scalar_table(
    theta: f64,
    mu2: f64,
    lambda: f64,
    dim: f64,
    trunc: f64,
) -> Result<Table, CliError> {
    let dim = usize_param("dim", dim)?;
    let trunc = usize_param("trunc", trunc)?.max(2);
    let params = MoyalParams::new(theta, dim)?;
    let model = ScalarModel::new(params, 1.0, mu2, lambda)?.broken();
    let v = scalar_vacuum(&model)?;
    let residual = scalar_eom_residual(&v.as_field(trunc), &model)?.norm_inf();
    if residual > 1e-10 {
        return Err(CliError::Accuracy(format!(
            "vacuum equation-of-motion residual {residual:.2e} exceeds 1e-10"
        )));
    }
    let mut t = Table::new(&["k", "a"]);
    for (k, a) in v.a.iter().enumerate() {
        t.push(vec![Value::Int(k as i64), Value::Float(*a)]);
    }
    Ok(t)
}

/// `vacuum-gauge`: the symmetric vacuum sequence u_m (2D) or v_m (4D);
/// rows (m, u). `alpha` scales the homogeneous part in 2D, `v1` is the 4D
/// boundary value.
pub fn vacuum_gauge_table(
    theta: f64,
    dim: f64,
    omega2: f64,
    kappa: f64,
    alpha: f64,
    v1: f64,
    mmax: f64,
) -> Result<Table, CliError> {
    let dim = usize_param("dim", dim)?;
    let mmax = usize_param("mmax", mmax)?;
    let params = MoyalParams::new(theta, dim)?;
    let model = GaugeModel::new(params, omega2, kappa)?;
    let seq = match dim {
        2 => vacuum_sequence_2d(&model, alpha, mmax)?,
        4 => vacuum_sequence_4d(&model, v1, mmax)?,
        other => {
            return Err(CliError::Domain(format!(
                "vacuum-gauge supports dim 2 or 4, got {other}"
            )))
        }
    };
    let mut t = Table::new(&["m", "u"]);
    for (m, u) in seq.u.iter().enumerate() {
        t.push(vec![Value::Int(m as i64), Value::Float(*u)]);
    }
    Ok(t)
}

/// `effective-action`: one row of one-loop divergent-sector data at Ω²:
/// the F⋆F and {𝒜,𝒜}² coefficients and the exact assembly defect.
pub fn effective_action_row(omega2: f64) -> Result<Table, CliError> {
    if !(0.0..=1.0).contains(&omega2) {
        return Err(CliError::Domain(format!(
            "effective-action needs 0 ≤ omega2 ≤ 1, got {omega2}"
        )));
    }
    let w = BigRational::from_float(omega2)
        .ok_or_else(|| CliError::Domain("omega2 must be finite".into()))?;
    let c_f = effective_action::fstarf_coefficient(&w);
    let c_a = effective_action::anticommutator_coefficient(&w);
    let defect = effective_action::max_assembly_defect(&w);
    let mut t = Table::new(&["omega2", "fstarf", "anticommutator", "assembly_defect"]);
    t.push(vec![
        Value::Float(omega2),
        Value::Float(c_f.to_f64().unwrap_or(f64::NAN)),
        Value::Float(c_a.to_f64().unwrap_or(f64::NAN)),
        Value::Float(defect),
    ]);
    Ok(t)
}

/// `ribbon`: topological data and divergence degrees of a parsed graph.
pub fn ribbon_json(text: &str, dim: f64) -> Result<String, CliError> {
    let dim = usize_param("dim", dim)?;
    let g = RibbonGraph::parse(text)?;
    let t = g.topology()?;
    let (d_c, d_nc) = g.degrees(dim)?;
    Ok(format!(
        "{{\"F\":{},\"B\":{},\"g\":{},\"d_c\":{},\"d_nc\":{}}}\n",
        t.faces, t.broken, t.genus, d_c, d_nc
    ))
}

/// Parse one entry of a JSON ε-table: a sign, "i"/"-i", or [num, den]
/// meaning e^{2πi·num/den}.
fn parse_root(v: &serde_json::Value) -> Result<Root, CliError> {
    let bad = || CliError::Domain(format!("invalid root-of-unity entry {v}"));
    match v {
        serde_json::Value::Number(n) => match n.as_i64() {
            Some(1) => Ok(Root::one()),
            Some(-1) => Ok(Root::minus_one()),
            _ => Err(bad()),
        },
        serde_json::Value::String(s) => match s.as_str() {
            "1" => Ok(Root::one()),
            "-1" => Ok(Root::minus_one()),
            "i" => Ok(Root::i_unit()),
            "-i" => Ok(Root::i_unit().inv()),
            _ => Err(bad()),
        },
        serde_json::Value::Array(a) if a.len() == 2 => {
            let num = a[0].as_i64().ok_or_else(bad)?;
            let den = a[1].as_i64().ok_or_else(bad)?;
            if den <= 0 {
                return Err(bad());
            }
            Ok(Root::new(num, den))
        }
        _ => Err(bad()),
    }
}

fn fmt_elem(e: &[i64]) -> String {
    let inner: Vec<String> = e.iter().map(|v| v.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn fmt_complex(c: num_complex::Complex64) -> String {
    format!("[{},{}]", format_float(c.re), format_float(c.im))
}

pub enum EpsMode {
    ReportOnly,
    Fine,
    Elementary(Vec<Vec<i64>>),
}

/// `eps-check`: validate a commutation factor given by its generator table
/// and report ε-structure data. With `--elementary` (a JSON list of degree
/// vectors φ(i)) it adds the ε-center basis and trace weights of the
/// elementary graded matrix algebra; with `--fine` it adds the degree
/// supports of the center and of the ε-trace functionals of the associated
/// crossed-product (fine) algebra.
pub fn eps_check_json(
    group: &str,
    table: &serde_json::Value,
    mode: EpsMode,
) -> Result<String, CliError> {
    let group: GradingGroup = group
        .parse()
        .map_err(|e: eps_graded::EpsError| CliError::Domain(e.to_string()))?;
    let rank = group.rank();
    let rows = table
        .as_array()
        .ok_or_else(|| CliError::Domain("eps table must be a JSON array of arrays".into()))?;
    if rows.len() != rank {
        return Err(CliError::Domain(format!(
            "eps table has {} rows, group rank is {rank}",
            rows.len()
        )));
    }
    let mut gen_table = Vec::new();
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| CliError::Domain("eps table row must be an array".into()))?;
        if row.len() != rank {
            return Err(CliError::Domain("eps table must be square".into()));
        }
        gen_table.push(row.iter().map(parse_root).collect::<Result<Vec<_>, _>>()?);
    }
    let cf = CommutationFactor::new(group.clone(), gen_table)?;
    let report = cf_validate(&cf);

    let mut out = String::from("{\n");
    out.push_str(&format!("  \"valid\": {},\n", report.valid()));
    out.push_str(&format!("  \"proper\": {},\n", report.proper));
    let viol: Vec<String> = report
        .violations
        .iter()
        .map(|v| serde_json::Value::String(v.clone()).to_string())
        .collect();
    out.push_str(&format!("  \"violations\": [{}]", viol.join(",")));

    match mode {
        EpsMode::ReportOnly => {}
        EpsMode::Fine => {
            if !report.valid() {
                return Err(CliError::Domain(
                    "fine-algebra analysis needs a valid commutation factor".into(),
                ));
            }
            let sigma = sigma_from_eps(&cf)?;
            let eps_sigma = eps_from_sigma(&sigma);
            let elems = group.elements()?;
            let gamma: Vec<&Vec<i64>> = elems
                .iter()
                .filter(|i| elems.iter().all(|j| cf.eval(i, j) == eps_sigma.eval(i, j)))
                .collect();
            let r: Vec<&Vec<i64>> = elems
                .iter()
                .filter(|i| {
                    elems.iter().all(|j| {
                        let d = group.sub(i, j);
                        cf.eval(&d, j) == eps_sigma.eval(&d, j)
                    })
                })
                .collect();
            let fmt_set = |s: &[&Vec<i64>]| {
                let inner: Vec<String> = s.iter().map(|e| fmt_elem(e)).collect();
                format!("[{}]", inner.join(","))
            };
            out.push_str(&format!(",\n  \"center_degrees\": {}", fmt_set(&gamma)));
            out.push_str(&format!(",\n  \"trace_degrees\": {}", fmt_set(&r)));
        }
        EpsMode::Elementary(phi) => {
            if !report.valid() {
                return Err(CliError::Domain(
                    "elementary-algebra analysis needs a valid commutation factor".into(),
                ));
            }
            let alg = ElementaryAlgebra::new(cf.clone(), phi.clone())?;
            let center = alg.center_basis()?;
            let basis: Vec<String> = center
                .iter()
                .map(|m| {
                    let rows: Vec<String> = (0..m.nrows())
                        .map(|i| {
                            let cells: Vec<String> =
                                (0..m.ncols()).map(|j| fmt_complex(m[(i, j)])).collect();
                            format!("[{}]", cells.join(","))
                        })
                        .collect();
                    format!("[{}]", rows.join(","))
                })
                .collect();
            out.push_str(&format!(",\n  \"center_dim\": {}", center.len()));
            out.push_str(&format!(",\n  \"center_basis\": [{}]", basis.join(",")));
            let weights: Vec<String> = phi
                .iter()
                .map(|d| fmt_complex(cf.psi(d).to_complex()))
                .collect();
            out.push_str(&format!(",\n  \"trace_weights\": [{}]", weights.join(",")));
        }
    }
    out.push_str("\n}\n");
    Ok(out)
}
