//! Loading and validating inputs.

use std::fs;

use hch::band::BandModule;
use hch::gk::FiniteModule;
use hch::io::{parse, BandModuleWire, FiniteModuleWire, HComplexWire, PairWire, SubpairWire};
use hch::lie::{Pair, SubpairEmbedding, Violation};
use hch::{Error, Qi};
use serde::de::DeserializeOwned;

use crate::CliError;

/// Reads a file, or takes the argument itself when it is inline JSON.
pub fn source(arg: &str) -> Result<(String, String), CliError> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok((arg.to_string(), "<inline>".to_string()));
    }
    fs::read_to_string(arg)
        .map(|text| (text, arg.to_string()))
        .map_err(|e| CliError::Input(format!("cannot read {arg}: {e}")))
}

fn load<T: DeserializeOwned>(arg: &str) -> Result<(T, String), CliError> {
    let (text, origin) = source(arg)?;
    Ok((parse(&text, &origin)?, origin))
}

fn check(object: &str, report: Result<(), Violation>) -> Result<(), CliError> {
    report.map_err(|v| CliError::Validation(format!("{object}: {v}")))
}

pub fn pair(arg: &str) -> Result<Pair<Qi>, CliError> {
    let (w, origin): (PairWire, _) = load(arg)?;
    let p = w.into_pair(&origin)?;
    check(&origin, p.validate())?;
    Ok(p)
}

pub fn subpair(arg: &str) -> Result<SubpairEmbedding<Qi>, CliError> {
    let (w, origin): (SubpairWire, _) = load(arg)?;
    let e = w.into_subpair(&origin)?;
    check(&format!("{origin} (small pair)"), e.small.validate())?;
    check(&format!("{origin} (big pair)"), e.big.validate())?;
    check(&origin, e.validate())?;
    Ok(e)
}

pub fn hcomplex(arg: &str, p: &Pair<Qi>) -> Result<hch::hcomplex::HComplex<Qi>, CliError> {
    let (w, origin): (HComplexWire, _) = load(arg)?;
    Ok(w.into_hcomplex(p, &origin)?)
}

/// A module over the small pair of a subpair. Band modules are kept over
/// whichever pair they were given for, with the matching embedding.
pub enum Module {
    Finite(FiniteModule<Qi>),
    Band(BandModule<Qi>, SubpairEmbedding<Qi>),
}

/// Detects the module kind by its keys (`action` or `ops`) and the pair it
/// lives over by the number of matrices or operators. A module over the big
/// pair is restricted.
pub fn module(arg: &str, e: &SubpairEmbedding<Qi>) -> Result<Module, CliError> {
    let (text, origin) = source(arg)?;
    let value: serde_json::Value = parse(&text, &origin)?;
    let (key, count) = ["action", "ops"]
        .iter()
        .find_map(|k| value.get(*k).and_then(|v| v.as_array()).map(|a| (*k, a.len())))
        .ok_or_else(|| {
            CliError::from(Error::Schema {
                location: origin.clone(),
                message: "a module needs an \"action\" list (finite) or an \"ops\" list (band)".into(),
            })
        })?;
    let over_big = if count == e.big.g.dim() {
        true
    } else if count == e.small.g.dim() {
        false
    } else {
        return Err(Error::Schema {
            location: format!("{origin}:{key}"),
            message: format!(
                "{count} entries fit neither the big algebra ({}) nor the small one ({})",
                e.big.g.dim(),
                e.small.g.dim()
            ),
        }
        .into());
    };
    let pair = if over_big { &e.big } else { &e.small };
    if key == "action" {
        let w: FiniteModuleWire = parse(&text, &origin)?;
        let m = w.into_module(pair, &origin)?;
        check(&origin, m.validate(pair))?;
        Ok(Module::Finite(if over_big { m.restrict(e) } else { m }))
    } else {
        let w: BandModuleWire = parse(&text, &origin)?;
        let v = w.into_module(pair, &origin)?;
        v.check_brackets(&pair.g)
            .map_err(|(x, what)| CliError::Validation(format!("{origin}: bracket relation fails at {x} ({what})")))?;
        if !v.check_equivariance(&pair.k, &pair.grading, &(-24..=24).collect::<Vec<_>>()) {
            return Err(CliError::Validation(format!("{origin}: operators do not shift K-types by their weights")));
        }
        let emb = if over_big { e.clone() } else { SubpairEmbedding::identity(e.small.clone()) };
        Ok(Module::Band(v, emb))
    }
}
