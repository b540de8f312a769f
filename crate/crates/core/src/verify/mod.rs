//! Relation suites as data, and the engine that checks them.

mod run;
pub mod spec;

pub use run::{
    all_pass, check_aux_identities, check_bqt_relations, check_compatibility, check_compatibility_with,
    check_daha_relations, check_theta_spectra, partitions, run_specs, sample_points, theta_check_count, CheckConfig,
    Counterexample, Mode, RelationReport, Status, Target,
};
pub use spec::{aux_identities, bqt_relations, compat_axioms, daha_relations, RelationSpec, Suite};
