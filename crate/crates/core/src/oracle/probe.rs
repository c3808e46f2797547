//! Empirical boundedness test: does the largest weight multiplicity stop
//! growing as the truncation depth increases?

use serde::{Deserialize, Serialize};

use super::verma::truncated_character;
use crate::rootdata::{Algebra, Base, Weight};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ProbeStatus {
    OracleBounded,
    OracleUnboundedEvidence,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProbeReport {
    pub schema: String,
    pub algebra: String,
    pub base: String,
    pub lam: Weight,
    pub depths: Vec<usize>,
    /// Largest multiplicity among weights of height `≤ depths[i]`.
    pub max_mult: Vec<i64>,
    pub status: ProbeStatus,
}

pub fn status_of(max_mult: &[i64]) -> ProbeStatus {
    let tail = &max_mult[max_mult.len().saturating_sub(3)..];
    if tail.windows(2).all(|w| w[0] == w[1]) {
        ProbeStatus::OracleBounded
    } else if max_mult.windows(2).all(|w| w[0] < w[1]) {
        ProbeStatus::OracleUnboundedEvidence
    } else {
        ProbeStatus::Unknown
    }
}

pub fn boundedness_probe(
    alg: &Algebra,
    base: &Base,
    lam: &Weight,
    depths: &[usize],
) -> Result<ProbeReport> {
    if depths.len() < 3 || depths.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "probe needs an increasing schedule of at least 3 depths".into(),
        ));
    }
    let ch = truncated_character(alg, base, lam, *depths.last().expect("non-empty"))?;
    let max_mult: Vec<i64> = depths.iter().map(|&d| ch.max_mult_up_to(d)).collect();
    Ok(ProbeReport {
        schema: crate::SCHEMA.into(),
        algebra: alg.spec().to_string(),
        base: alg.fmt_base(base),
        lam: lam.clone(),
        depths: depths.to_vec(),
        status: status_of(&max_mult),
        max_mult,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_rules() {
        assert_eq!(status_of(&[1, 2, 2, 2]), ProbeStatus::OracleBounded);
        assert_eq!(status_of(&[1, 2, 3]), ProbeStatus::OracleUnboundedEvidence);
        assert_eq!(status_of(&[1, 2, 2]), ProbeStatus::Unknown);
    }
}
