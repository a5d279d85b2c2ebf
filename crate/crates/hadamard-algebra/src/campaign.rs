//! Seeded verification campaigns: run every structural check over many
//! random instances and aggregate violation totals into a JSON-ready
//! report. Same seed and config means a byte-identical report; trials
//! draw from independent sub-streams, so the outcome does not depend on
//! evaluation order.

use serde::{Deserialize, Serialize};

use crate::block::{self, BlockMatrix};
use crate::error::{Error, Result};
use crate::group_algebra::{self, GroupAlgebraElement};
use crate::json::MatrixJson;
use crate::ring::RingContext;
use crate::sample::SeedStream;

/// Evidence is capped so a pathological run cannot flood the report.
const MAX_EVIDENCE: usize = 8;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub ring: String,
    pub k: u32,
    pub s: usize,
    pub trials: u64,
    pub seed: u64,
}

impl CampaignConfig {
    fn validate(&self) -> Result<RingContext> {
        if self.trials < 1 {
            return Err(Error::Spec("trials must be at least 1".into()));
        }
        if self.s < 1 {
            return Err(Error::Spec("s must be at least 1".into()));
        }
        RingContext::parse(&self.ring)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CheckTotals {
    pub trials: u64,
    pub violations: u64,
}

impl CheckTotals {
    fn record(&mut self, ok: bool) -> bool {
        self.trials += 1;
        if !ok {
            self.violations += 1;
        }
        ok
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Evidence {
    pub trial: u64,
    pub check: String,
    pub residual: Option<MatrixJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub charpoly_square: CheckTotals,
    pub cayley_hamilton: CheckTotals,
    pub coefficient_match: CheckTotals,
    pub diagram: CheckTotals,
    pub kernel_nilpotency: CheckTotals,
    pub ideal_nilpotency: CheckTotals,
    pub violations_total: u64,
    pub evidence: Vec<Evidence>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violations_total == 0
    }
}

/// Run the full check suite over `trials` seeded instances.
pub fn run_verification(config: CampaignConfig) -> Result<CampaignReport> {
    let base = config.validate()?;
    let mut report = CampaignReport {
        config: config.clone(),
        charpoly_square: CheckTotals::default(),
        cayley_hamilton: CheckTotals::default(),
        coefficient_match: CheckTotals::default(),
        diagram: CheckTotals::default(),
        kernel_nilpotency: CheckTotals::default(),
        ideal_nilpotency: CheckTotals::default(),
        violations_total: 0,
        evidence: Vec::new(),
    };
    for trial in 0..config.trials {
        let mut rng = SeedStream::for_trial(config.seed, trial);

        let m = BlockMatrix::random(&base, config.k, config.s, &mut rng)?;
        let square = block::verify_charpoly_square(&m)?;
        if !report
            .charpoly_square
            .record(square.q_squared_zero && square.eval_paths_agree && square.frobenius_chain_ok)
        {
            push_evidence(
                &mut report,
                trial,
                "charpoly_square",
                square.q_squared_residual.as_ref(),
            );
        }
        if !report.cayley_hamilton.record(square.cayley_hamilton_zero) {
            push_evidence(
                &mut report,
                trial,
                "cayley_hamilton",
                square.cayley_hamilton_residual.as_ref(),
            );
        }
        if !report
            .coefficient_match
            .record(square.coefficients_match && square.coefficient_squares_scalar)
        {
            push_evidence(&mut report, trial, "coefficient_match", None);
        }

        if !report.diagram.record(block::det_diagrams_commute(&m)?) {
            push_evidence(&mut report, trial, "diagram", None);
        }

        let kernel = BlockMatrix::random_kernel(&base, config.k, config.s, &mut rng)?;
        let nil = block::kernel_nilpotency(&kernel)?;
        if !report.kernel_nilpotency.record(nil.is_ok()) {
            push_evidence(&mut report, trial, "kernel_nilpotency", None);
        }

        let ideal: Vec<GroupAlgebraElement> = (0..=config.k)
            .map(|_| GroupAlgebraElement::random_ideal(&base, config.k, &mut rng))
            .collect();
        let prod = group_algebra::ideal_product(&base, config.k, &ideal)?;
        if !report.ideal_nilpotency.record(prod.is_zero()) {
            push_evidence(&mut report, trial, "ideal_nilpotency", None);
        }
    }
    report.violations_total = report.charpoly_square.violations
        + report.cayley_hamilton.violations
        + report.coefficient_match.violations
        + report.diagram.violations
        + report.kernel_nilpotency.violations
        + report.ideal_nilpotency.violations;
    Ok(report)
}

fn push_evidence(
    report: &mut CampaignReport,
    trial: u64,
    check: &str,
    residual: Option<&crate::matrix::RingMatrix>,
) {
    if report.evidence.len() < MAX_EVIDENCE {
        report.evidence.push(Evidence {
            trial,
            check: check.to_string(),
            residual: residual.map(MatrixJson::from_matrix),
        });
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NilpotencyConfig {
    pub ring: String,
    pub k: u32,
    pub samples: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NilpotencyReport {
    pub config: NilpotencyConfig,
    /// Products of k+1 sampled augmentation-ideal elements.
    pub products: CheckTotals,
    /// The canonical k-fold basis product equals the sum over the whole
    /// group and is nonzero.
    pub canonical_product_ok: bool,
    pub violations_total: u64,
}

impl NilpotencyReport {
    pub fn passed(&self) -> bool {
        self.violations_total == 0
    }
}

/// Group-algebra nilpotency campaign at one level: k+1 sampled ideal
/// elements always multiply to zero, while the canonical k basis
/// involutions multiply to the full group sum.
pub fn run_nilpotency(config: NilpotencyConfig) -> Result<NilpotencyReport> {
    if config.samples < 1 {
        return Err(Error::Spec("samples must be at least 1".into()));
    }
    let base = RingContext::parse(&config.ring)?;
    let k = config.k;
    let mut products = CheckTotals::default();
    for trial in 0..config.samples {
        let mut rng = SeedStream::for_trial(config.seed, trial);
        let elems: Vec<GroupAlgebraElement> = (0..=k)
            .map(|_| GroupAlgebraElement::random_ideal(&base, k, &mut rng))
            .collect();
        let prod = group_algebra::ideal_product(&base, k, &elems)?;
        products.record(prod.is_zero());
    }

    let canonical_product_ok = if k == 0 {
        // no basis involutions at level 0; the empty product is e
        true
    } else {
        let e = GroupAlgebraElement::identity(base.clone(), k);
        let elems: Vec<GroupAlgebraElement> = (0..k)
            .map(|i| {
                GroupAlgebraElement::group_element(
                    base.clone(),
                    k,
                    group_algebra::standard_basis_index(k, i),
                )
                .expect("basis index in range")
                .add(&e)
                .expect("same context")
            })
            .collect();
        let prod = group_algebra::ideal_product(&base, k, &elems)?;
        !prod.is_zero() && prod.coeffs().iter().all(|c| c.is_one())
    };

    let violations_total = products.violations + u64::from(!canonical_product_ok);
    Ok(NilpotencyReport {
        config,
        products,
        canonical_product_ok,
        violations_total,
    })
}
