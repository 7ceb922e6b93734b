//! Check execution and machine-readable reports.
//!
//! A report bundles the outcome of a requested set of checks on one poset.
//! Field order and witness ordering are deterministic so that identical
//! inputs produce byte-identical JSON.

use crate::coxeter::{CoxeterError, CoxeterSystem, CoxeterType};
use crate::families::{
    boolean_lattice, noncrossing_partition_lattice, partition_lattice, subspace_poset, FamilyError,
};
use crate::poset::{Bowtie, Elem, GradedPoset, PosetError};
use crate::spindle::{
    cat0_verdict_rank_le4, enumerate_global_spindles, girth_cutoff, CurvatureVerdict, Spindle,
};
use serde::Serialize;
use thiserror::Error;

pub const SCHEMA: &str = "orthocurve/1";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unknown check {0:?} (expected validate, lattice, modular, spindles or cat0)")]
    UnknownCheck(String),
    #[error("unknown family {0:?} (expected boolean, partition, ncp, subspace or ncw)")]
    UnknownFamily(String),
    #[error("family {family} requires the {param} parameter")]
    MissingParameter { family: String, param: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// What to build, for the CLI and for batch reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Boolean { n: u32 },
    Partition { n: usize },
    Noncrossing { n: usize },
    Subspace { n: usize, q: u32 },
    CoxeterNoncrossing { ctype: CoxeterType },
}

impl FamilySpec {
    pub fn from_args(
        family: &str,
        n: Option<usize>,
        q: Option<u32>,
        ctype: Option<&str>,
    ) -> Result<FamilySpec, ReportError> {
        let need_n = || {
            n.ok_or_else(|| ReportError::MissingParameter {
                family: family.to_string(),
                param: "--n".to_string(),
            })
        };
        match family {
            "boolean" => Ok(FamilySpec::Boolean {
                n: need_n()? as u32,
            }),
            "partition" => Ok(FamilySpec::Partition { n: need_n()? }),
            "ncp" => Ok(FamilySpec::Noncrossing { n: need_n()? }),
            "subspace" => Ok(FamilySpec::Subspace {
                n: need_n()?,
                q: q.ok_or_else(|| ReportError::MissingParameter {
                    family: family.to_string(),
                    param: "--q".to_string(),
                })?,
            }),
            "ncw" => {
                let label = ctype.ok_or_else(|| ReportError::MissingParameter {
                    family: family.to_string(),
                    param: "--type".to_string(),
                })?;
                Ok(FamilySpec::CoxeterNoncrossing {
                    ctype: CoxeterType::parse(label)?,
                })
            }
            other => Err(ReportError::UnknownFamily(other.to_string())),
        }
    }

    pub fn build(&self) -> Result<GradedPoset, ReportError> {
        match *self {
            FamilySpec::Boolean { n } => Ok(boolean_lattice(n)?),
            FamilySpec::Partition { n } => Ok(partition_lattice(n)?),
            FamilySpec::Noncrossing { n } => Ok(noncrossing_partition_lattice(n)?),
            FamilySpec::Subspace { n, q } => Ok(subspace_poset(n, q)?),
            FamilySpec::CoxeterNoncrossing { ctype } => Ok(CoxeterSystem::build(ctype).build_ncw()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Validate,
    Lattice,
    Modular,
    Spindles,
    Cat0,
}

impl Check {
    pub fn parse(s: &str) -> Result<Check, ReportError> {
        match s {
            "validate" => Ok(Check::Validate),
            "lattice" => Ok(Check::Lattice),
            "modular" => Ok(Check::Modular),
            "spindles" => Ok(Check::Spindles),
            "cat0" => Ok(Check::Cat0),
            other => Err(ReportError::UnknownCheck(other.to_string())),
        }
    }

    pub fn parse_list(s: &str) -> Result<Vec<Check>, ReportError> {
        let mut checks: Vec<Check> = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(Check::parse)
            .collect::<Result<_, _>>()?;
        checks.sort();
        checks.dedup();
        Ok(checks)
    }
}

#[derive(Debug, Serialize)]
pub struct ValidateResult {
    pub ok: bool,
    pub elements: usize,
    pub rank: usize,
}

#[derive(Debug, Serialize)]
pub struct LatticeResult {
    pub is_lattice: bool,
    pub bowtie: Option<Bowtie>,
}

#[derive(Debug, Serialize)]
pub struct ModularResult {
    pub is_lattice: bool,
    pub is_modular: bool,
    /// (interval bottom, interval top, x, complement) with local ranks that
    /// fail to add up to the interval rank.
    pub witness: Option<(Elem, Elem, Elem, Elem)>,
}

#[derive(Debug, Serialize)]
pub struct SpindleSummary {
    pub max_girth: usize,
    pub total: usize,
    pub short: usize,
    pub boundary: usize,
    pub spindles: Vec<Spindle>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub poset: String,
    pub elements: usize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validate: Option<ValidateResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modular: Option<ModularResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spindles: Option<SpindleSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cat0: Option<CurvatureVerdict>,
}

/// Runs the requested checks. The poset has already survived `build`, so
/// the `validate` entry reports the structural facts rather than failing.
pub fn execute_checks(p: &GradedPoset, checks: &[Check], max_girth: Option<usize>) -> Report {
    let mut report = Report {
        schema: SCHEMA,
        poset: p.name().to_string(),
        elements: p.len(),
        rank: p.rank(),
        validate: None,
        lattice: None,
        modular: None,
        spindles: None,
        cat0: None,
    };
    for check in checks {
        match check {
            Check::Validate => {
                report.validate = Some(ValidateResult {
                    ok: true,
                    elements: p.len(),
                    rank: p.rank(),
                });
            }
            Check::Lattice => {
                let bowtie = p.find_bowtie();
                report.lattice = Some(LatticeResult {
                    is_lattice: bowtie.is_none(),
                    bowtie,
                });
            }
            Check::Modular => {
                let entry = match p.is_modular() {
                    Ok(None) => ModularResult {
                        is_lattice: true,
                        is_modular: true,
                        witness: None,
                    },
                    Ok(Some(w)) => ModularResult {
                        is_lattice: true,
                        is_modular: false,
                        witness: Some(w),
                    },
                    Err(_) => ModularResult {
                        is_lattice: false,
                        is_modular: false,
                        witness: None,
                    },
                };
                report.modular = Some(entry);
            }
            Check::Spindles => {
                let girth = max_girth.unwrap_or_else(|| girth_cutoff(p.rank()));
                let spindles = enumerate_global_spindles(p, girth);
                report.spindles = Some(SpindleSummary {
                    max_girth: girth,
                    total: spindles.len(),
                    short: spindles.iter().filter(|s| s.short).count(),
                    boundary: spindles.iter().filter(|s| s.boundary).count(),
                    spindles,
                });
            }
            Check::Cat0 => {
                report.cat0 = Some(cat0_verdict_rank_le4(p));
            }
        }
    }
    report
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One-line human summary per executed check.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut lines = vec![format!(
            "{}: {} elements, rank {}",
            self.poset, self.elements, self.rank
        )];
        if let Some(v) = &self.validate {
            lines.push(format!("  validate: bounded graded poset (ok={})", v.ok));
        }
        if let Some(l) = &self.lattice {
            match &l.bowtie {
                None => lines.push("  lattice: yes".to_string()),
                Some(bt) => lines.push(format!(
                    "  lattice: no (bowtie a={} b={} c={} d={})",
                    bt.a, bt.b, bt.c, bt.d
                )),
            }
        }
        if let Some(m) = &self.modular {
            lines.push(format!("  modular: {}", m.is_modular));
        }
        if let Some(s) = &self.spindles {
            lines.push(format!(
                "  spindles (girth <= {}): {} total, {} short, {} at the 2*pi boundary",
                s.max_girth, s.total, s.short, s.boundary
            ));
        }
        if let Some(c) = &self.cat0 {
            lines.push(format!("  cat0: {:?} ({})", c.status, c.notes));
        }
        lines
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::non_lattice_example;
    use crate::spindle::VerdictStatus;

    #[test]
    fn family_spec_parsing() {
        assert_eq!(
            FamilySpec::from_args("boolean", Some(3), None, None).unwrap(),
            FamilySpec::Boolean { n: 3 }
        );
        assert!(matches!(
            FamilySpec::from_args("subspace", Some(3), None, None),
            Err(ReportError::MissingParameter { .. })
        ));
        assert!(FamilySpec::from_args("simplex", Some(3), None, None).is_err());
        assert_eq!(
            FamilySpec::from_args("ncw", None, None, Some("A4")).unwrap(),
            FamilySpec::CoxeterNoncrossing {
                ctype: CoxeterType::A(4)
            }
        );
    }

    #[test]
    fn check_list_is_sorted_and_deduped() {
        let checks = Check::parse_list("cat0,validate,cat0, lattice").unwrap();
        assert_eq!(checks, vec![Check::Validate, Check::Lattice, Check::Cat0]);
        assert!(Check::parse_list("girth").is_err());
    }

    #[test]
    fn report_on_non_lattice() {
        let p = non_lattice_example();
        let checks = Check::parse_list("validate,lattice,modular,spindles,cat0").unwrap();
        let report = execute_checks(&p, &checks, None);
        assert!(!report.lattice.as_ref().unwrap().is_lattice);
        assert!(!report.modular.as_ref().unwrap().is_modular);
        assert_eq!(report.cat0.as_ref().unwrap().status, VerdictStatus::NotCat0);
        let json = report.to_json();
        assert!(json.contains("\"schema\": \"orthocurve/1\""));
        // deterministic output
        let again = execute_checks(&p, &checks, None).to_json();
        assert_eq!(json, again);
    }

    #[test]
    fn report_on_boolean_lattice() {
        let p = FamilySpec::Boolean { n: 3 }.build().unwrap();
        let checks = Check::parse_list("lattice,spindles,cat0").unwrap();
        let report = execute_checks(&p, &checks, None);
        assert!(report.lattice.as_ref().unwrap().is_lattice);
        let s = report.spindles.as_ref().unwrap();
        assert_eq!(s.short, 0);
        assert_eq!(report.cat0.as_ref().unwrap().status, VerdictStatus::Cat0);
    }
}
