//! Stable JSON schemas shared with the CLI. All integers serialize as
//! decimal strings so arbitrary precision survives shells and JSON
//! parsers.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::Int;
use crate::chain::{ChainError, ChainWindow, SystemLabel, Triple};
use crate::residues::ModulusReport;
use crate::search::SearchResult;
use crate::triples::{SiblingReport, ThirdChainCertificate};

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("invalid integer literal: {0:?}")]
    BadInteger(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

fn encode(i: &Int) -> String {
    i.to_string()
}

fn decode(s: &str) -> Result<Int, JsonError> {
    Int::from_str(s).map_err(|_| JsonError::BadInteger(s.to_string()))
}

fn system_tuple(s: SystemLabel) -> [u8; 2] {
    [s.lambda_a() as u8, s.lambda_b() as u8]
}

/// `{"first_system": [a, b], "terms": ["..."]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainJson {
    pub first_system: [u8; 2],
    pub terms: Vec<String>,
}

impl ChainJson {
    pub fn from_window(w: &ChainWindow) -> ChainJson {
        ChainJson {
            first_system: system_tuple(w.first_system()),
            terms: w.terms().iter().map(encode).collect(),
        }
    }

    /// Re-validates every chain invariant on the way in.
    pub fn to_window(&self) -> Result<ChainWindow, JsonError> {
        let system = SystemLabel::new(self.first_system[0], self.first_system[1])?;
        let terms = self
            .terms
            .iter()
            .map(|s| decode(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChainWindow::new(terms, system)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TripleJson {
    pub left: String,
    pub center: String,
    pub right: String,
    pub system: [u8; 2],
}

impl TripleJson {
    pub fn from_triple(t: &Triple) -> TripleJson {
        TripleJson {
            left: encode(t.left()),
            center: encode(t.center()),
            right: encode(t.right()),
            system: system_tuple(t.system()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub u: String,
    pub v: String,
    pub t: String,
    pub w: String,
    pub system: [u8; 2],
    pub first: TripleJson,
    pub second: TripleJson,
    pub third: TripleJson,
    pub hypothesis_prime: bool,
    pub hypothesis_nondiv: bool,
}

impl CertificateJson {
    pub fn from_certificate(c: &ThirdChainCertificate) -> CertificateJson {
        CertificateJson {
            u: encode(&c.u),
            v: encode(&c.v),
            t: encode(&c.t),
            w: encode(&c.w),
            system: system_tuple(c.system),
            first: TripleJson::from_triple(&c.first),
            second: TripleJson::from_triple(&c.second),
            third: TripleJson::from_triple(&c.third),
            hypothesis_prime: c.hypothesis_prime,
            hypothesis_nondiv: c.hypothesis_nondiv,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SiblingReportJson {
    pub sibling_value: String,
    pub sibling: TripleJson,
    pub via_corollary8: bool,
}

impl SiblingReportJson {
    pub fn from_report(r: &SiblingReport) -> SiblingReportJson {
        SiblingReportJson {
            sibling_value: encode(&r.sibling_value),
            sibling: TripleJson::from_triple(&r.sibling),
            via_corollary8: r.via_corollary8,
        }
    }
}

/// `{"box": N, "system": [a, b], "pairs": [["x", "y"], ...]}` -- one
/// object per searched system.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchResultJson {
    #[serde(rename = "box")]
    pub box_bound: i64,
    pub system: [u8; 2],
    pub pairs: Vec<[String; 2]>,
}

pub fn search_result_json(res: &SearchResult) -> Vec<SearchResultJson> {
    res.systems
        .iter()
        .map(|&s| SearchResultJson {
            box_bound: res.box_bound,
            system: system_tuple(s),
            pairs: res
                .pairs
                .iter()
                .filter(|p| p.system() == s)
                .map(|p| [encode(p.x()), encode(p.y())])
                .collect(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModulusReportJson {
    pub m: u64,
    pub roots_p1: Vec<u64>,
    pub roots_p2: Vec<u64>,
    pub forbidden: bool,
}

impl ModulusReportJson {
    pub fn from_report(r: &ModulusReport) -> ModulusReportJson {
        ModulusReportJson {
            m: r.m,
            roots_p1: r.roots_p1.clone(),
            roots_p2: r.roots_p2.clone(),
            forbidden: r.forbidden,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::SolutionPair;

    #[test]
    fn chain_round_trip() {
        let seed = SolutionPair::new(Int::from(-1), Int::from(-1), SystemLabel::S22).unwrap();
        let w = ChainWindow::generate(&seed, 5, 5);
        let json = serde_json::to_string(&ChainJson::from_window(&w)).unwrap();
        let parsed: ChainJson = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.to_window().unwrap(), w);
    }

    #[test]
    fn corrupted_chain_rejected() {
        let seed = SolutionPair::new(Int::from(-1), Int::from(-1), SystemLabel::S11).unwrap();
        let w = ChainWindow::generate(&seed, 2, 2);
        let mut dto = ChainJson::from_window(&w);
        dto.terms[0] = "12".into();
        assert!(dto.to_window().is_err());
        dto.terms[0] = "not-a-number".into();
        assert!(matches!(dto.to_window(), Err(JsonError::BadInteger(_))));
    }
}
