use crate::group::{GroupElement, GroupError, GroupId, HalfMax};

use super::{CheckConfig, CheckName, CheckReport, Evidence, Relation, Witness};

/// A strictly increasing sequence inside `S = {t : 0 ≤ 2t ≤ λ0}`,
/// certifying that `S` has no maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessChain {
    pub lambda0: GroupElement,
    pub elements: Vec<GroupElement>,
}

impl WitnessChain {
    /// Strict monotonicity and membership in `S`, evaluated exactly.
    pub fn verify(&self) -> bool {
        let in_s = |t: &GroupElement| {
            t.group() == self.lambda0.group() && !t.is_negative() && t.double() <= self.lambda0
        };
        self.elements.iter().all(in_s) && self.elements.windows(2).all(|w| w[0] < w[1])
    }
}

pub fn no_max_witness(group: GroupId, lambda0: &GroupElement, depth: usize) -> Result<WitnessChain, GroupError> {
    if lambda0.group() != group {
        return Err(GroupError::Mixed(group, lambda0.group()));
    }
    let elements = lambda0.half_chain(None, depth)?;
    Ok(WitnessChain { lambda0: lambda0.clone(), elements })
}

/// Samples positive `λ0` (starting with `1`) and asks for a half-maximum.
pub fn condition_a_probe(group: GroupId, cfg: &CheckConfig) -> CheckReport {
    let sampler = cfg.sampler(group);
    let mut report = CheckReport {
        name: CheckName::ConditionA,
        group,
        space: None,
        pass: true,
        samples: 0,
        seed: cfg.seed,
        evidence: Evidence::Sampled,
        note: None,
        stats: Default::default(),
        witness: None,
    };
    for i in 0..cfg.samples {
        let lambda0 = if i == 0 {
            GroupElement::one(group)
        } else {
            sampler.positive(group, &mut cfg.rng(CheckName::ConditionA, i))
        };
        report.samples += 1;
        if let HalfMax::None = lambda0.max_half().expect("λ0 > 0") {
            let chain = no_max_witness(group, &lambda0, cfg.chain_depth).expect("no maximum");
            let mut w = Witness::new(
                Relation::NoHalfMax,
                format!("{{t : 0 ≤ 2t ≤ {lambda0}}} has no maximum in {group}"),
            )
            .value("lambda0", &lambda0);
            w.chain = chain.elements.iter().map(ToString::to_string).collect();
            report.pass = false;
            report.evidence = Evidence::Certificate;
            report.witness = Some(w);
            break;
        }
    }
    report
}
