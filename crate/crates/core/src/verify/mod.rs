//! Re-derivation of the type D results: closed-form `sq` criteria, audits of
//! the explicit witness constructions, and the exhaustive class sweep.

pub mod criteria;
pub mod sweep;
pub mod witness;

pub use criteria::{commuting_sq_criterion, six_component_form, involution_sq_criterion, CriterionInput};
pub use sweep::{exception_predicate, recheck_exhausted, class_sweep, ExceptionKind, SweepOptions, SweepOutcome, SweepReport, SweepRow};
pub use witness::{audit, audit_witness, witness_construction, AuditContext, AuditReport, AuditRow, WitnessId, WitnessConstruction, SubrackReading};
