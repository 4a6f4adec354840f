use serde::Serialize;

use crate::cube::{CubeId, CubeName};
use crate::error::{Error, Result};
use crate::graph::TargetGraph;
use crate::oracle::{solution_number_permanent, solution_number_prime_scan};
use crate::set::Collection;

/// Solution number by graph classification.
pub fn solution_number(collection: Collection, target: CubeId) -> u32 {
    TargetGraph::for_target(target).solution_number(collection)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MethodResults {
    pub formula: u32,
    pub permanent: u64,
    pub prime_scan: u64,
}

/// All three methods; any disagreement is an error.
pub fn solve_checked(collection: Collection, target: CubeId) -> Result<MethodResults> {
    let r = MethodResults {
        formula: solution_number(collection, target),
        permanent: solution_number_permanent(collection, target),
        prime_scan: solution_number_prime_scan(collection, target),
    };
    if r.formula as u64 != r.permanent || r.permanent != r.prime_scan {
        return Err(Error::OracleMismatch(format!(
            "{collection} for {}: formula {}, permanent {}, prime scan {}",
            target.name(),
            r.formula,
            r.permanent,
            r.prime_scan
        )));
    }
    Ok(r)
}

/// JSON solution report.
#[derive(Debug, Clone, Serialize)]
pub struct SolutionReport {
    pub target: CubeName,
    pub collection: Vec<CubeName>,
    pub solution_number: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interior_matching_count: Option<usize>,
}
