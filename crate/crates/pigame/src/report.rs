//! JSON report documents.
//!
//! Every number is an exact rational string (`"13/2"`, `"-4"`). Coalitions
//! carry both their bitmask (bit `i` is player `i + 1`) and the sorted
//! 1-based member list; player indices elsewhere are 1-based as well.

use pigame_core::geometry::{
    essential_players, fan_set, pair_set, CoreCheck, ExtremeWalk, VertexSet,
};
use pigame_core::rules::{
    AxiomReport, CoincidenceReport, ConcavityCheck, OmegaDecomposition, PsWitness,
    SolomonicConditions, TyrannyCheck,
};
use pigame_core::{Allocation, Coalition, CostGame, GameTable, Rational};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

pub fn num(x: &Rational) -> String {
    x.to_string()
}

pub fn nums<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Vec<String> {
    xs.into_iter().map(num).collect()
}

pub fn allocation(x: &Allocation) -> Vec<String> {
    nums(x.iter())
}

fn players(s: Coalition) -> Vec<usize> {
    s.members().map(|i| i + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoalitionJson {
    pub mask: u32,
    pub members: Vec<usize>,
}

impl From<Coalition> for CoalitionJson {
    fn from(s: Coalition) -> Self {
        CoalitionJson {
            mask: s.bits(),
            members: players(s),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub players: usize,
    pub periods: usize,
}

/// The document every subcommand prints.
#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T> {
    pub schema_version: u32,
    pub command: &'static str,
    pub instance: InstanceSummary,
    pub result: T,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableEntry {
    #[serde(flatten)]
    pub coalition: CoalitionJson,
    pub cost: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_prices: Option<Vec<String>>,
}

pub fn table(g: &GameTable, with_prices: bool) -> Vec<TableEntry> {
    Coalition::all(g.players())
        .skip(1)
        .map(|s| TableEntry {
            coalition: s.into(),
            cost: num(g.cost(s)),
            dual_prices: with_prices.then(|| nums(g.dual_prices(s).expect("nonempty").iter())),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct OmegaJson {
    pub omega: Vec<String>,
    /// `[t][i]`
    pub per_period: Vec<Vec<String>>,
    /// `[t][i][j]`
    pub q: Vec<Vec<Vec<String>>>,
    /// `[t][i]`
    pub q_per_period: Vec<Vec<String>>,
    pub q_total: Vec<String>,
}

impl From<&OmegaDecomposition> for OmegaJson {
    fn from(d: &OmegaDecomposition) -> Self {
        let grid = |m: &Vec<Vec<Rational>>| m.iter().map(nums).collect();
        OmegaJson {
            omega: allocation(&d.omega),
            per_period: grid(&d.per_period),
            q: d.q.iter().map(grid).collect(),
            q_per_period: grid(&d.q_per_period),
            q_total: nums(&d.q_total),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QpqEntry {
    pub lambda: String,
    pub allocation: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoreCheckJson {
    pub allocation: Vec<String>,
    pub member: bool,
    /// First violated coalition; the grand coalition signals inefficiency.
    pub violation: Option<CoalitionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation_kind: Option<&'static str>,
    /// Present for core members.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<bool>,
}

pub fn core_check(
    g: &GameTable,
    x: &Allocation,
    check: &CoreCheck,
    boundary: Option<bool>,
) -> CoreCheckJson {
    CoreCheckJson {
        allocation: allocation(x),
        member: check.member,
        violation: check.violation.map(Into::into),
        violation_kind: check.violation.map(|s| {
            if s == g.grand() {
                "efficiency"
            } else {
                "coalition"
            }
        }),
        boundary,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FanJson {
    pub player: usize,
    pub fans: Vec<usize>,
    /// `[t]`
    pub per_period: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureJson {
    pub essential: Vec<usize>,
    /// `[t]`
    pub essential_per_period: Vec<Vec<usize>>,
    pub fans: Vec<FanJson>,
    /// `[essential, fan]`
    pub pairs: Vec<[usize; 2]>,
}

pub fn structure(g: &GameTable) -> StructureJson {
    let inst = g.instance();
    let e = essential_players(inst);
    StructureJson {
        essential: players(e.overall),
        essential_per_period: e.per_period.iter().map(|&s| players(s)).collect(),
        fans: e
            .overall
            .members()
            .map(|i| {
                let f = fan_set(inst, i).expect("essential");
                FanJson {
                    player: i + 1,
                    fans: players(f.overall),
                    per_period: f.per_period.iter().map(|&s| players(s)).collect(),
                }
            })
            .collect(),
        pairs: pair_set(g)
            .iter()
            .map(|p| [p.essential() + 1, p.fan() + 1])
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremesJson {
    pub budget: usize,
    pub evaluations: usize,
    pub truncated: bool,
    pub points: Vec<Vec<String>>,
    /// Whether the points are exactly the enumerated core vertices, when
    /// those were enumerated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equals_vertex_set: Option<bool>,
}

fn points(set: &VertexSet) -> Vec<Vec<String>> {
    set.iter().map(allocation).collect()
}

pub fn extremes(walk: &ExtremeWalk, budget: usize, vertices: Option<&VertexSet>) -> ExtremesJson {
    ExtremesJson {
        budget,
        evaluations: walk.evaluations,
        truncated: walk.truncated,
        points: points(&walk.points),
        equals_vertex_set: vertices.map(|v| *v == walk.points),
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum VerticesJson {
    Enumerated {
        cap: usize,
        count: usize,
        points: Vec<Vec<String>>,
    },
    Skipped {
        cap: usize,
        reason: String,
    },
}

pub fn vertices(set: &VertexSet, cap: usize) -> VerticesJson {
    VerticesJson::Enumerated {
        cap,
        count: set.len(),
        points: points(set),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConcavityJson {
    pub concave: bool,
    /// `(i, S, T)` with `S ⊆ T` and `c(S) − c(S∖{i}) < c(T) − c(T∖{i})`.
    pub violation: Option<ConcavityViolationJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConcavityViolationJson {
    pub player: usize,
    pub smaller: CoalitionJson,
    pub larger: CoalitionJson,
}

impl From<&ConcavityCheck> for ConcavityJson {
    fn from(c: &ConcavityCheck) -> Self {
        ConcavityJson {
            concave: c.concave,
            violation: c.violation.map(|v| ConcavityViolationJson {
                player: v.player + 1,
                smaller: v.smaller.into(),
                larger: v.larger.into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PsJson {
    pub is_ps: bool,
    pub constants: Option<Vec<String>>,
    pub counterexample: Option<PsCounterexampleJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PsCounterexampleJson {
    pub player: usize,
    pub coalition: CoalitionJson,
}

impl From<&PsWitness> for PsJson {
    fn from(w: &PsWitness) -> Self {
        PsJson {
            is_ps: w.is_ps,
            constants: w.constants.as_ref().map(nums),
            counterexample: w.counterexample.map(|(i, s)| PsCounterexampleJson {
                player: i + 1,
                coalition: s.into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PeriodConditionsJson {
    pub period: usize,
    pub essential: Vec<usize>,
    pub at_most_one_essential: bool,
    pub essential_price_matches: bool,
    pub inessential_prices_match: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inessential_witness: Option<InessentialWitnessJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InessentialWitnessJson {
    pub player: usize,
    /// `y_t*(N∖𝓔^t)`
    pub inessential_price: String,
    /// `y_t*({player})`
    pub own_price: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionsJson {
    pub overall: bool,
    pub per_period: Vec<PeriodConditionsJson>,
}

impl From<&SolomonicConditions> for ConditionsJson {
    fn from(c: &SolomonicConditions) -> Self {
        ConditionsJson {
            overall: c.overall,
            per_period: c
                .per_period
                .iter()
                .enumerate()
                .map(|(t, p)| PeriodConditionsJson {
                    period: t + 1,
                    essential: players(p.essential),
                    at_most_one_essential: p.at_most_one_essential,
                    essential_price_matches: p.essential_price_matches,
                    inessential_prices_match: p.inessential_prices_match,
                    inessential_witness: p.inessential_witness.as_ref().map(|(i, r, o)| {
                        InessentialWitnessJson {
                            player: i + 1,
                            inessential_price: num(r),
                            own_price: num(o),
                        }
                    }),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PredicatesJson {
    pub concavity: ConcavityJson,
    pub ps_game: PsJson,
    pub solomonic_conditions: ConditionsJson,
    pub coincidence: CoincidenceJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoincidenceJson {
    pub solomonic: Vec<String>,
    pub shapley: Vec<String>,
    pub nucleolus: Vec<String>,
    pub solomonic_eq_shapley: bool,
    pub shapley_eq_nucleolus: bool,
    pub solomonic_eq_nucleolus: bool,
    /// False only when the sufficient conditions hold and the three differ.
    pub prediction_consistent: bool,
}

pub fn predicates(r: &CoincidenceReport) -> PredicatesJson {
    PredicatesJson {
        concavity: (&r.concavity).into(),
        ps_game: (&r.ps).into(),
        solomonic_conditions: (&r.conditions).into(),
        coincidence: CoincidenceJson {
            solomonic: allocation(&r.solomonic),
            shapley: allocation(&r.shapley),
            nucleolus: allocation(&r.nucleolus),
            solomonic_eq_shapley: r.solomonic_eq_shapley,
            shapley_eq_nucleolus: r.shapley_eq_nucleolus,
            solomonic_eq_nucleolus: r.solomonic_eq_nucleolus,
            prediction_consistent: r.prediction_consistent,
        },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IbcJson {
    pub player: usize,
    pub bound: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TyrannyJson {
    NotApplicable,
    Checked {
        essential: usize,
        rest_cost: String,
        rest_share: String,
        holds: bool,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct AcpJson {
    /// ACP is a property of allocation rules; it is checked for the Omega
    /// rule, whatever allocation was supplied.
    pub rule: &'static str,
    pub holds: bool,
    pub period_allocations: Vec<Vec<String>>,
    pub combined: Vec<String>,
    pub rule_value: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomsJson {
    pub allocation: Vec<String>,
    pub ef: bool,
    pub ne: bool,
    pub ibc: bool,
    pub ibc_bounds: Vec<IbcJson>,
    pub ti: TyrannyJson,
    pub acp: AcpJson,
    pub is_omega_point: bool,
    pub in_core: bool,
}

pub fn axioms(x: &Allocation, r: &AxiomReport) -> AxiomsJson {
    AxiomsJson {
        allocation: allocation(x),
        ef: r.ef,
        ne: r.ne,
        ibc: r.ibc,
        ibc_bounds: r
            .ibc_bounds
            .iter()
            .map(|b| IbcJson {
                player: b.player + 1,
                bound: num(&b.bound),
                holds: b.holds,
            })
            .collect(),
        ti: match &r.ti {
            TyrannyCheck::NotApplicable => TyrannyJson::NotApplicable,
            TyrannyCheck::Checked {
                essential,
                rest_cost,
                rest_share,
                holds,
            } => TyrannyJson::Checked {
                essential: essential + 1,
                rest_cost: num(rest_cost),
                rest_share: num(rest_share),
                holds: *holds,
            },
        },
        acp: AcpJson {
            rule: "omega",
            holds: r.acp.holds,
            period_allocations: r.acp.period_allocations.iter().map(allocation).collect(),
            combined: allocation(&r.acp.combined),
            rule_value: allocation(&r.acp.rule_value),
        },
        is_omega_point: r.is_omega_point,
        in_core: r.in_core,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomPair {
    pub omega: AxiomsJson,
    pub owen: AxiomsJson,
}

/// Everything `analyze` computes.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub table: Vec<TableEntry>,
    pub owen: Vec<String>,
    pub omega: OmegaJson,
    pub qpq: Vec<QpqEntry>,
    pub solomonic: Vec<String>,
    pub shapley: Vec<String>,
    pub nucleolus: Vec<String>,
    pub structure: StructureJson,
    pub extremes: ExtremesJson,
    pub vertices: VerticesJson,
    pub predicates: PredicatesJson,
    pub axioms: AxiomPair,
}
