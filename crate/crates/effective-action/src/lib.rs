//! One-loop effective action of the harmonically deformed gauge model:
//! the exact (rational-arithmetic) table of 1/ε and ln ε coefficients per
//! diagram and per field invariant, the assembly into the gauge-covariant
//! form built from covariant coordinates and the curvature, and a direct
//! numerical evaluation of the regulated tadpole against a Gaussian probe.

mod table;
mod tadpole;

pub use table::{
    anticommutator_coefficient, assembly_defect, diagram_table, effective_action_table,
    fstarf_coefficient, loop_sum, max_assembly_defect, Diagram, DivCoeff, Tag, ALL_DIAGRAMS,
    ALL_TAGS,
};
pub use tadpole::{tadpole_numeric, TadpoleFit};
