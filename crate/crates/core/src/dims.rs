//! Degrees of Hall polynomials and automorphism groups, and the dimensions
//! of the varieties and strata they control.

use serde::{Deserialize, Serialize};

use crate::arcs::ArcDiagram;
use crate::error::Result;
use crate::partitions::Partition;
use crate::tableaux::{lr_coefficient, PartitionTriple};

/// `n(β) − n(α) − n(γ)`. Negative values mean no embedding exists.
pub fn hall_degree(triple: &PartitionTriple) -> i64 {
    triple.beta.moment() as i64 - triple.alpha.moment() as i64 - triple.gamma.moment() as i64
}

/// `|λ| + 2n(λ)`, the degree of `|Aut N_λ|` as a polynomial in `q`.
pub fn aut_degree(lambda: &Partition) -> u64 {
    lambda.size() as u64 + 2 * lambda.moment()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDim {
    pub diagram: ArcDiagram,
    pub crossings: usize,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub hall_degree: i64,
    pub aut_degree: u64,
    pub variety_dim: i64,
    pub component_count: usize,
    /// No LR-tableau exists, so the variety has no points.
    pub empty: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strata: Vec<StratumDim>,
}

impl DimensionReport {
    /// `dim V − x(Δ)`.
    pub fn stratum_dim(&self, crossings: usize) -> i64 {
        self.variety_dim - crossings as i64
    }
}

pub fn dimension_report(triple: &PartitionTriple, diagrams: Option<&[ArcDiagram]>) -> Result<DimensionReport> {
    let component_count = lr_coefficient(triple)?;
    let hall = hall_degree(triple);
    let aut = aut_degree(&triple.alpha);
    let mut report = DimensionReport {
        alpha: triple.alpha.clone(),
        beta: triple.beta.clone(),
        gamma: triple.gamma.clone(),
        hall_degree: hall,
        aut_degree: aut,
        variety_dim: hall + aut as i64,
        component_count,
        empty: component_count == 0,
        strata: Vec::new(),
    };
    for d in diagrams.unwrap_or_default() {
        let crossings = d.crossings();
        report.strata.push(StratumDim { diagram: d.clone(), crossings, dim: report.stratum_dim(crossings) });
    }
    Ok(report)
}
