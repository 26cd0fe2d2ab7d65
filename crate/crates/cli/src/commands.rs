//! Command implementations. Each returns whether the result is certified.

use std::fmt::Write as _;
use std::fs;

use hch::hcomplex::check_h_axioms;
use hch::homology::band_homology::{band_rel_homology, StabilizationPolicy};
use hch::homology::relative::{ext_checked, relative_standard_complex, subpair_coinvariants};
use hch::homology::resolution::standard_resolution;
use hch::io::{parse, to_json, HComplexWire, PairWire, ReportWire, ScalarWire, SubpairWire};
use hch::report::Stabilization;
use hch::scalar::parse_rational;
use hch::sl2::branching::{sl2_sweep, BranchingRow};
use hch::{Error, Qi};
use serde::{Deserialize, Serialize};

use crate::input::{self, Module};
use crate::{CliError, Command, Format, Global};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomologyOut {
    #[serde(rename = "H")]
    pub h: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportWire>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtOut {
    #[serde(rename = "Ext")]
    pub ext: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EpOut {
    /// Absent when a band computation is not certified.
    #[serde(rename = "EP")]
    pub ep: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportWire>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoinvOut {
    pub dim: usize,
    pub representatives: Vec<Vec<ScalarWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilization: Option<Stabilization>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub object: String,
    pub ok: bool,
    pub condition: Option<String>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOut {
    pub ok: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HViolationOut {
    pub axiom: String,
    pub degree: i64,
    pub xi: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HcheckOut {
    pub ok: bool,
    pub lo: i64,
    pub dims: Vec<usize>,
    pub violations: Vec<HViolationOut>,
}

fn policy(g: &Global) -> Result<StabilizationPolicy, CliError> {
    let p = match &g.windows {
        Some(w) => StabilizationPolicy::new(w.clone())?,
        None => StabilizationPolicy::default(),
    };
    Ok(p.with_env_cap()?)
}

fn emit(g: &Global, default: Format, json: String, tsv: impl FnOnce() -> String) -> Result<(), CliError> {
    let text = match g.format.unwrap_or(default) {
        Format::Json => json,
        Format::Tsv => tsv(),
    };
    match &g.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn numbered(header: &str, values: &[usize]) -> String {
    let mut s = format!("n\t{header}\n");
    for (n, v) in values.iter().enumerate() {
        let _ = writeln!(s, "{n}\t{v}");
    }
    s
}

pub fn run(command: &Command, g: &Global) -> Result<bool, CliError> {
    match command {
        Command::Verify { pair, subpair, module } => verify(g, pair.as_deref(), subpair.as_deref(), module.as_deref()),
        Command::Homology(a) => homology(g, &a.subpair, &a.module),
        Command::Ext(a) => ext(g, &a.subpair, &a.module),
        Command::Ep(a) => ep(g, &a.subpair, &a.module),
        Command::Coinv(a) => coinv(g, &a.subpair, &a.module),
        Command::Hcheck {
            pair,
            hcomplex,
            resolution,
            save_hcomplex,
        } => hcheck(g, pair, hcomplex.as_deref(), *resolution, save_hcomplex.as_deref()),
        Command::Sl2Demo { lambda, epsilon, subpair } => sl2_demo(g, lambda, *epsilon, subpair),
    }
}

fn check(object: &str, r: Result<(), hch::lie::Violation>) -> Check {
    match r {
        Ok(()) => Check {
            object: object.to_string(),
            ok: true,
            condition: None,
            detail: None,
        },
        Err(v) => Check {
            object: object.to_string(),
            ok: false,
            condition: Some(v.condition),
            detail: Some(v.detail),
        },
    }
}

/// Schema errors abort; failed conditions are collected into the report and
/// give exit code 2 after it is written.
fn verify(g: &Global, pair: Option<&str>, subpair: Option<&str>, module: Option<&str>) -> Result<bool, CliError> {
    if pair.is_none() && subpair.is_none() {
        return Err(CliError::Input("verify needs --pair or --subpair".into()));
    }
    let mut checks = Vec::new();
    if let Some(arg) = pair {
        let (text, origin) = input::source(arg)?;
        let p = parse::<PairWire>(&text, &origin)?.into_pair::<Qi>(&origin)?;
        checks.push(check(&origin, p.validate()));
        checks.push(check(&format!("{origin} (Jacobi)"), jacobi(&p.g)));
    }
    if let Some(arg) = subpair {
        let (text, origin) = input::source(arg)?;
        let e = parse::<SubpairWire>(&text, &origin)?.into_subpair::<Qi>(&origin)?;
        checks.push(check(&format!("{origin} (small pair)"), e.small.validate()));
        checks.push(check(&format!("{origin} (big pair)"), e.big.validate()));
        checks.push(check(&origin, e.validate()));
        if let Some(arg) = module {
            let object = input::source(arg)?.1;
            let r = match input::module(arg, &e) {
                Ok(_) => Ok(()),
                Err(CliError::Validation(msg)) => Err(hch::lie::Violation {
                    condition: "module".into(),
                    detail: msg,
                }),
                Err(other) => return Err(other),
            };
            checks.push(check(&object, r));
        }
    }
    let out = VerifyOut {
        ok: checks.iter().all(|c| c.ok),
        checks,
    };
    emit(g, Format::Json, to_json(&out), || {
        let mut s = "object\tstatus\tcondition\tdetail\n".to_string();
        for c in &out.checks {
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}",
                c.object,
                if c.ok { "ok" } else { "violation" },
                c.condition.as_deref().unwrap_or("-"),
                c.detail.as_deref().unwrap_or("-")
            );
        }
        s
    })?;
    if out.ok {
        Ok(true)
    } else {
        Err(CliError::Validation("see the report".into()))
    }
}

fn jacobi(g: &hch::lie::LieAlgebra<Qi>) -> Result<(), hch::lie::Violation> {
    match g.check_jacobi().first() {
        None => Ok(()),
        Some((a, b, c)) => Err(hch::lie::Violation {
            condition: "Jacobi identity".into(),
            detail: format!("fails on ({}, {}, {})", g.label(*a), g.label(*b), g.label(*c)),
        }),
    }
}

fn homology(g: &Global, subpair: &str, module: &str) -> Result<bool, CliError> {
    let e = input::subpair(subpair)?;
    let out = match input::module(module, &e)? {
        Module::Finite(m) => HomologyOut {
            h: relative_standard_complex(&e, &m)?.homology_dims(),
            certified: None,
            report: None,
        },
        Module::Band(v, emb) => {
            let b = band_rel_homology(&emb, &v, &policy(g)?)?;
            HomologyOut {
                h: vec![b.h0.dim(), b.h1.dim()],
                certified: Some(b.certified()),
                report: Some(ReportWire::from_report(&b.report)),
            }
        }
    };
    emit(g, Format::Json, to_json(&out), || numbered("H_n", &out.h))?;
    Ok(out.certified.unwrap_or(true))
}

fn ext(g: &Global, subpair: &str, module: &str) -> Result<bool, CliError> {
    let e = input::subpair(subpair)?;
    let m = match input::module(module, &e)? {
        Module::Finite(m) => m,
        Module::Band(..) => return Err(Error::Unsupported("ext needs a finite-dimensional module".into()).into()),
    };
    let out = ExtOut { ext: ext_checked(&e, &m)? };
    emit(g, Format::Json, to_json(&out), || numbered("Ext^n", &out.ext))?;
    Ok(true)
}

fn ep(g: &Global, subpair: &str, module: &str) -> Result<bool, CliError> {
    let e = input::subpair(subpair)?;
    let out = match input::module(module, &e)? {
        Module::Finite(m) => EpOut {
            ep: Some(hch::homology::relative::euler_poincare(&e, &m)?),
            certified: None,
            report: None,
        },
        Module::Band(v, emb) => {
            let b = band_rel_homology(&emb, &v, &policy(g)?)?;
            EpOut {
                ep: b.euler_poincare(),
                certified: Some(b.certified()),
                report: Some(ReportWire::from_report(&b.report)),
            }
        }
    };
    let tsv = || format!("EP\n{}\n", out.ep.map_or("-".to_string(), |x| x.to_string()));
    emit(g, Format::Json, to_json(&out), tsv)?;
    Ok(out.certified.unwrap_or(true))
}

fn coinv(g: &Global, subpair: &str, module: &str) -> Result<bool, CliError> {
    let e = input::subpair(subpair)?;
    let out = match input::module(module, &e)? {
        Module::Finite(m) => {
            let c = subpair_coinvariants(&e, &m);
            CoinvOut {
                dim: c.dim,
                representatives: c.representatives.iter().map(|v| v.iter().map(ScalarWire::from_scalar).collect()).collect(),
                certified: None,
                stabilization: None,
            }
        }
        Module::Band(v, emb) => {
            let b = band_rel_homology(&emb, &v, &policy(g)?)?;
            let d = b.h0.degree_data();
            CoinvOut {
                dim: d.dim,
                representatives: d.representatives.iter().map(|v| v.iter().map(ScalarWire::from_scalar).collect()).collect(),
                certified: Some(b.h0.certified()),
                stabilization: d.stabilization.clone(),
            }
        }
    };
    emit(g, Format::Json, to_json(&out), || format!("dim\n{}\n", out.dim))?;
    Ok(out.certified.unwrap_or(true))
}

fn hcheck(
    g: &Global,
    pair: &str,
    hcomplex: Option<&str>,
    resolution: Option<u32>,
    save: Option<&std::path::Path>,
) -> Result<bool, CliError> {
    let p = input::pair(pair)?;
    let h = match (hcomplex, resolution) {
        (Some(arg), _) => input::hcomplex(arg, &p)?,
        (None, Some(n)) => standard_resolution(&p, n)?.h,
        (None, None) => return Err(CliError::Input("hcheck needs --hcomplex or --resolution".into())),
    };
    if let Some(path) = save {
        fs::write(path, to_json(&HComplexWire::from_hcomplex(&h)))
            .map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display())))?;
    }
    let violations: Vec<HViolationOut> = check_h_axioms(&h, &p)
        .into_iter()
        .map(|v| HViolationOut {
            axiom: v.axiom,
            degree: v.degree,
            xi: v.xi,
            detail: v.detail,
        })
        .collect();
    let out = HcheckOut {
        ok: violations.is_empty(),
        lo: h.complex.lo,
        dims: h.complex.dims.clone(),
        violations,
    };
    emit(g, Format::Json, to_json(&out), || {
        let mut s = "axiom\tdegree\txi\tdetail\n".to_string();
        for v in &out.violations {
            let xi = v.xi.map_or("-".to_string(), |t| t.to_string());
            let _ = writeln!(s, "{}\t{}\t{xi}\t{}", v.axiom, v.degree, v.detail);
        }
        s
    })?;
    if out.ok {
        Ok(true)
    } else {
        Err(CliError::Validation(format!("{} h-complex condition(s) fail", out.violations.len())))
    }
}

fn sl2_demo(g: &Global, lambda: &[String], epsilon: u8, subpair: &str) -> Result<bool, CliError> {
    if epsilon > 1 {
        return Err(CliError::Input("--epsilon must be 0 or 1".into()));
    }
    let lambdas = lambda
        .iter()
        .map(|s| parse_rational(s).ok_or_else(|| CliError::Input(format!("--lambda: {s:?} is not a rational"))))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<BranchingRow> = sl2_sweep(&lambdas, epsilon, subpair, &policy(g)?)?;
    emit(g, Format::Tsv, to_json(&rows), || {
        let mut s = format!("{}\n", BranchingRow::TSV_HEADER);
        for r in &rows {
            let _ = writeln!(s, "{}", r.tsv());
        }
        s
    })?;
    Ok(rows.iter().all(BranchingRow::certified))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hch::homology::band_homology::band_rel_homology;
    use hch::sl2::principal::principal_series;
    use hch::sl2::zoo::subpair;

    fn round_trip<T: Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug>(v: &T) {
        let text = to_json(v);
        assert_eq!(&parse::<T>(&text, "out").unwrap(), v);
    }

    #[test]
    fn outputs_reparse_to_equal_values() {
        let e = subpair::<Qi>("torus_normalizer").unwrap();
        let v = principal_series::<Qi>(parse_rational("2").unwrap(), 0).unwrap().module;
        let b = band_rel_homology(&e, &v, &StabilizationPolicy::default()).unwrap();
        round_trip(&HomologyOut {
            h: vec![b.h0.dim(), b.h1.dim()],
            certified: Some(b.certified()),
            report: Some(ReportWire::from_report(&b.report)),
        });
        round_trip(&EpOut {
            ep: b.euler_poincare(),
            certified: Some(true),
            report: None,
        });
        round_trip(&ExtOut { ext: vec![1, 0] });
        round_trip(&VerifyOut {
            ok: false,
            checks: vec![check("x", Err(hch::lie::Violation { condition: "c".into(), detail: "d".into() }))],
        });
        let report = ReportWire::from_report(&b.report);
        assert_eq!(report.into_report::<Qi>("r").unwrap(), b.report);
    }
}
