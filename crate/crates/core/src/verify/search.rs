//! Bounded search for elements separating right and left Engel levels.

use std::str::FromStr;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::constructions::GroupSpec;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::verify::witness::{search_predicate_holds, Relation, Witness};
use crate::verify::{CheckResult, Outcome, Stats};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchPredicate {
    /// `a ∈ R₃` with `a⁻¹ ∉ R₃`.
    MacdonaldR3,
    /// `a ∈ Rₙ` with `a ∉ Lₙ` and `a⁻¹ ∉ Lₙ`, for some `2 ≤ n ≤ max_n`.
    MacdonaldRnLn,
}

impl SearchPredicate {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchPredicate::MacdonaldR3 => "macdonald_r3",
            SearchPredicate::MacdonaldRnLn => "macdonald_rn_ln",
        }
    }
}

impl FromStr for SearchPredicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "macdonald_r3" => Ok(SearchPredicate::MacdonaldR3),
            "macdonald_rn_ln" => Ok(SearchPredicate::MacdonaldRnLn),
            other => Err(Error::Usage(format!("unknown search predicate {other:?}"))),
        }
    }
}

/// Searches the groups in order and returns the first witness. `None`
/// means no witness in these groups, not that none exists.
pub fn search_witness(
    predicate: SearchPredicate,
    zoo: &[(GroupSpec, &FiniteGroup)],
    max_n: usize,
) -> Result<Option<CheckResult>> {
    let levels: Vec<usize> = match predicate {
        SearchPredicate::MacdonaldR3 => vec![3],
        SearchPredicate::MacdonaldRnLn => (2..=max_n.max(2)).collect(),
    };
    for (spec, g) in zoo {
        let analysis = Analysis::with_max_n(g, max_n);
        let mut examined = 0;
        for a in g.elements() {
            for &n in &levels {
                examined += 1;
                if search_predicate_holds(&analysis, predicate.as_str(), a, n)? {
                    return Ok(Some(CheckResult {
                        id: predicate.as_str().into(),
                        group: spec.to_string(),
                        outcome: Outcome::Pass,
                        reason: None,
                        witness: Some(Witness::new(
                            g,
                            Relation::SearchHit {
                                predicate: predicate.as_str().into(),
                                n,
                            },
                            &[a],
                        )),
                        stats: Stats {
                            examined,
                            exhaustive: true,
                            ..Stats::default()
                        },
                    }));
                }
            }
        }
    }
    Ok(None)
}
