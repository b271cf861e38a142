use thiserror::Error;

use crate::families::FamilyInstance;
use crate::ladder::LadderKey;

#[derive(Debug, Error)]
pub enum Error {
    /// A table row expanded into something that is not a saturated run of
    /// valid points. This always indicates a defect in the encoded table,
    /// never a condition to skip past.
    #[error("table defect in {instance}: {detail}")]
    TableDefect {
        instance: FamilyInstance,
        detail: String,
    },

    #[error("ladder invariant violated for {key} at n={n}: {detail}")]
    LadderInvariant {
        key: LadderKey,
        n: u16,
        detail: String,
    },

    /// Perimeter peeling produced a non-saturated chain under every
    /// permitted orientation.
    #[error("peeling failed for {key} at n={n}: {detail}")]
    PeelFailed {
        key: LadderKey,
        n: u16,
        detail: String,
    },

    #[error("arithmetic overflow computing {what}")]
    Overflow { what: String },

    #[error("{0}")]
    InvalidArgument(String),
}
