//! Input files, recognized by their keys.

use std::path::Path;

use deformkit::algebra::AlgebraFile;
use deformkit::deform::FamilyFile;
use deformkit::presentation::{BuiltAlgebra, PresentationFile};
use deformkit::{Scalar, StructureAlgebra};

use crate::CliError;

pub enum Loaded {
    Presentation(PresentationFile),
    Algebra(AlgebraFile),
    Family(FamilyFile),
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let src = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let bad = |e: serde_json::Error| CliError::Input(format!("{}: {e}", path.display()));
    let value: serde_json::Value = serde_json::from_str(&src).map_err(bad)?;
    let has = |key: &str| value.get(key).is_some();
    if has("kind") {
        Ok(Loaded::Family(serde_json::from_value(value).map_err(bad)?))
    } else if has("generators") {
        Ok(Loaded::Presentation(serde_json::from_value(value).map_err(bad)?))
    } else if has("table") {
        Ok(Loaded::Algebra(serde_json::from_value(value).map_err(bad)?))
    } else {
        Err(CliError::Input(format!(
            "{}: not a presentation, algebra or family file (no `generators`, `table` or `kind` key)",
            path.display()
        )))
    }
}

/// An algebra from either file type; presentations keep their builder output.
pub struct Resolved {
    pub algebra: StructureAlgebra,
    pub built: Option<BuiltAlgebra>,
}

pub fn build_presentation(file: PresentationFile, max_degree: Option<usize>) -> Result<BuiltAlgebra, CliError> {
    let mut p = file.into_presentation().map_err(CliError::input)?;
    if let Some(d) = max_degree {
        p = p.with_max_degree(d);
    }
    p.build().map_err(CliError::input)
}

pub fn load_algebra(path: &Path, max_degree: Option<usize>) -> Result<Resolved, CliError> {
    match load(path)? {
        Loaded::Presentation(file) => {
            let built = build_presentation(file, max_degree)?;
            Ok(Resolved { algebra: built.algebra.clone(), built: Some(built) })
        }
        Loaded::Algebra(file) => {
            let algebra = file.into_algebra().map_err(CliError::input)?;
            let report = algebra.validate();
            if !report.is_valid() {
                return Err(CliError::Input(format!("{}: not a unital associative algebra:\n{report}", path.display())));
            }
            Ok(Resolved { algebra, built: None })
        }
        Loaded::Family(_) => Err(CliError::Input(format!("{}: expected an algebra, found a family file", path.display()))),
    }
}

/// A named element (generator or basis label) or comma-separated coordinates.
pub fn resolve_element(spec: &str, r: &Resolved) -> Result<Vec<Scalar>, CliError> {
    if let Some(v) = r.built.as_ref().and_then(|b| b.generator_element(spec)) {
        return Ok(v);
    }
    if let Some(i) = r.algebra.labels().iter().position(|l| l == spec) {
        return Ok(r.algebra.basis_element(i));
    }
    let coords = spec
        .split(',')
        .map(|c| c.trim().parse::<Scalar>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("generator {spec:?} is neither a name nor a coordinate vector ({e})")))?;
    if coords.len() != r.algebra.dim() {
        return Err(CliError::Usage(format!(
            "generator {spec:?} has {} coordinates, algebra has dimension {}",
            coords.len(),
            r.algebra.dim()
        )));
    }
    Ok(coords)
}
