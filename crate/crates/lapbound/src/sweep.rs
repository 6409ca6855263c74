//! Catalog rows across a family range, one graph per expanded spec.

use lapbound_core::{evaluate_catalog, generate, EvalConfig, FamilySpec, Profile};

use crate::dsl::to_dsl;
use crate::error::HarnessError;
use crate::report::{rows, Row};

pub fn sweep(specs: &[FamilySpec], eval: &EvalConfig) -> Result<Vec<Row>, HarnessError> {
    let mut out = Vec::new();
    for spec in specs {
        let p = Profile::new(generate(spec)?)?;
        out.extend(rows(&to_dsl(spec), p.graph(), &evaluate_catalog(&p, eval)));
    }
    Ok(out)
}
