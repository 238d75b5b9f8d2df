//! Gauss diagrams of welded string links and links: local moves, move macros,
//! linking-number invariants, the reduced free group action, and classifiers.

pub mod classify;
pub mod diagram;
pub mod invariants;
pub mod macros;
pub mod moves;
pub mod rfgroup;
pub mod toolkit;

#[cfg(test)]
mod testutil;

pub use diagram::{
    canonical, equal_raw, parse_gauss_code, serialize, Arrow, ArrowId, DiagramError, Endpoint,
    GaussDiagram, Kind, ParseError, Relabel, Role, Sign, Slot,
};
pub use moves::{
    apply, apply_sequence, enumerate, Direction, Gap, Insertion, MoveApplication, MoveError, MoveKind,
    MoveSequence, Portion,
};
