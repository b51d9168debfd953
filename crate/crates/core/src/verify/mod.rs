//! Executable checks of the classical Engel-element theorems over finite
//! groups, a black-box check for the Gupta–Levin matrix groups, and a
//! bounded counterexample search.

mod finite;
mod gupta_levin;
mod search;
pub mod sets;
pub mod witness;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::constructions::{GroupInstance, GroupSpec, GuptaLevinGroup};
use crate::error::{Error, Result};
use crate::group::{Element, DEFAULT_SAMPLES, EXHAUSTIVE_LIMIT};

pub use search::{search_witness, SearchPredicate};
pub use sets::{set_members, SetName};
pub use witness::{replay, Relation, Witness};

/// The enumerable groups every check runs on by default.
pub const DEFAULT_ZOO: [&str; 17] = [
    "C2",
    "C6",
    "C2xC2",
    "D8",
    "D16",
    "Q8",
    "S3",
    "S4",
    "A4",
    "wreath(C2,C2)",
    "wreath(C2,C2xC2)",
    "wreath(C4,C2xC2)",
    "wreath(C3,C3)",
    "fnil(p=3,k=2)",
    "fnil(p=3,k=3)",
    "fnil4(k=2)",
    "fnil4(k=3)",
];

/// Black-box groups added to the default zoo for the full suite.
pub const BLACK_BOX_ZOO: [&str; 1] = ["gl(p=2,k=3)"];

macro_rules! check_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId { $($variant),* }

        impl CheckId {
            /// Every check, in catalog order.
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(CheckId::$variant => $name),* }
            }
        }

        impl FromStr for CheckId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(CheckId::$variant),)*
                    other => Err(Error::Usage(format!("unknown check id {other:?}"))),
                }
            }
        }
    };
}

check_ids! {
    HeinekenIdentity => "heineken_identity",
    HeinekenInclusions => "heineken_inclusions",
    BaerPlotkinL => "baer_plotkin_L",
    HeldLbar => "held_Lbar",
    PengR => "peng_R",
    L2Characterization => "l2_characterization",
    L3Characterization => "l3_characterization",
    InvolutionFormula => "involution_formula",
    KappeR2Subgroup => "kappe_r2_subgroup",
    LeviKappeIdentities => "levi_kappe_identities",
    NewellR3 => "newell_r3",
    AbdollahiL3Pair => "abdollahi_l3_pair",
    ProductL2Ln => "product_l2_ln",
    ProductR2R3 => "product_r2_r3",
    WreathSeparation => "wreath_separation",
    LemmaXY => "lemma_xy",
    PlotkinNormalizer => "plotkin_normalizer",
    GruenbergRhoChain => "gruenberg_rho_chain",
    GuptaLevin6Engel => "gupta_levin_6engel",
    HpInL => "hp_in_L",
    BaerInLbar => "baer_in_Lbar",
    ZomegaInRbar => "zomega_in_Rbar",
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl CheckId {
    pub fn is_black_box(self) -> bool {
        self == CheckId::GuptaLevin6Engel
    }

    /// Parses a suite name: `all` or a comma-separated list of check ids.
    pub fn parse_suite(suite: &str) -> Result<Vec<CheckId>> {
        if suite.trim() == "all" {
            return Ok(CheckId::ALL.to_vec());
        }
        let mut ids: Vec<CheckId> = suite.split(',').map(|s| s.trim().parse()).collect::<Result<_>>()?;
        ids.sort();
        ids.dedup();
        Ok(ids)
    }

    fn index(self) -> u64 {
        CheckId::ALL.iter().position(|&c| c == self).unwrap() as u64
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Elements, pairs or tuples examined.
    pub examined: u64,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub group: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub stats: Stats,
}

impl CheckResult {
    fn skipped(id: CheckId, group: &GroupSpec, reason: impl Into<String>) -> Self {
        CheckResult {
            id: id.as_str().into(),
            group: group.to_string(),
            outcome: Outcome::Skipped,
            reason: Some(reason.into()),
            witness: None,
            stats: Stats::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Sample count for quantifiers over groups above the exhaustive limit.
    pub samples: usize,
    pub exhaustive_limit: usize,
    pub max_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            samples: DEFAULT_SAMPLES,
            exhaustive_limit: EXHAUSTIVE_LIMIT,
            max_n: crate::engel::DEFAULT_MAX_N,
        }
    }
}

impl VerifyConfig {
    fn rng_for(&self, id: CheckId) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ (id.index() + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// Runs one check on a constructed group.
pub fn run_check(id: CheckId, spec: &GroupSpec, group: &GroupInstance, cfg: &VerifyConfig) -> Result<CheckResult> {
    match group {
        GroupInstance::Finite(g) => run_check_finite(id, spec, &Analysis::with_max_n(g, cfg.max_n), cfg),
        GroupInstance::BlackBox(m) => run_check_black_box(id, spec, m, cfg),
    }
}

/// Runs one check, sharing cached analysis with other checks on the same
/// group.
pub fn run_check_finite(id: CheckId, spec: &GroupSpec, analysis: &Analysis<'_>, cfg: &VerifyConfig) -> Result<CheckResult> {
    if id.is_black_box() {
        return Ok(CheckResult::skipped(id, spec, "needs a Gupta–Levin matrix group"));
    }
    let mut ctx = finite::Ctx::new(id, analysis, cfg);
    let skip = finite::run(&mut ctx, id, spec)?;
    Ok(match skip {
        Some(reason) => CheckResult::skipped(id, spec, reason),
        None => ctx.finish(spec),
    })
}

pub fn run_check_black_box(id: CheckId, spec: &GroupSpec, m: &GuptaLevinGroup, cfg: &VerifyConfig) -> Result<CheckResult> {
    if !id.is_black_box() {
        return Ok(CheckResult::skipped(id, spec, "needs an enumerable group"));
    }
    Ok(gupta_levin::run(m, spec, cfg))
}

/// Uniform draw or exhaustive enumeration of tuples from element pools.
pub(crate) enum Tuples {
    Exhaustive,
    Sampled(usize),
}

impl Tuples {
    /// Calls `f` on each tuple until it returns `false`. Returns the number
    /// of tuples visited.
    pub(crate) fn for_each(
        &self,
        pools: &[&[Element]],
        rng: &mut ChaCha8Rng,
        mut f: impl FnMut(&[Element]) -> bool,
    ) -> u64 {
        use rand::Rng;
        if pools.iter().any(|p| p.is_empty()) {
            return 0;
        }
        let mut tuple: Vec<Element> = pools.iter().map(|p| p[0]).collect();
        let mut count = 0;
        match self {
            Tuples::Sampled(k) => {
                for _ in 0..*k {
                    for (t, p) in tuple.iter_mut().zip(pools) {
                        *t = p[rng.gen_range(0..p.len())];
                    }
                    count += 1;
                    if !f(&tuple) {
                        break;
                    }
                }
            }
            Tuples::Exhaustive => {
                let mut idx = vec![0usize; pools.len()];
                loop {
                    for (i, t) in tuple.iter_mut().enumerate() {
                        *t = pools[i][idx[i]];
                    }
                    count += 1;
                    if !f(&tuple) {
                        break;
                    }
                    let mut pos = pools.len();
                    loop {
                        if pos == 0 {
                            return count;
                        }
                        pos -= 1;
                        idx[pos] += 1;
                        if idx[pos] < pools[pos].len() {
                            break;
                        }
                        idx[pos] = 0;
                    }
                }
            }
        }
        count
    }
}
