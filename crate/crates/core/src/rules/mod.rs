//! Allocation rules and structural predicates.

mod axioms;
mod nucleolus;
mod omega;
mod predicates;
mod qpq;
mod shapley;

pub use axioms::{check_axioms, AcpCheck, AxiomReport, IbcBound, TyrannyCheck};
pub use nucleolus::nucleolus;
pub use omega::{cost_reduction_q, omega_point, omega_point_of_instance, OmegaDecomposition};
pub use predicates::{
    check_solomonic_conditions, coincidence_report, is_concave, is_ps_game, CoincidenceReport,
    ConcavityCheck, ConcavityViolation, PeriodConditions, PsWitness, SolomonicConditions,
};
pub use qpq::{qpq, solomonic};
pub use shapley::shapley;
