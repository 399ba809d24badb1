//! Finite partition relations on edge-colored complete graphs.
//!
//! Vertices are the initial segment `0..n` of the naturals and stand for
//! ordinals, so vertex order matters: well-connected paths from `a` may only
//! visit vertices `>= a`. The crate decides the classical, highly-connected
//! (`hc`) and well-connected (`wc`) relations with square-bracket palettes,
//! searches finite thresholds over canonical colorings, and models a coherent
//! indexed club system on ordinals below `w^d` in Cantor normal form.
//!
//! Everything here is pure and allocation-only; file formats, the certificate
//! verifier and the command-line tool live in the `partrel` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arrows;
pub mod certificate;
pub mod coloring;
pub mod connectivity;
pub mod error;
pub mod generators;
pub mod ordinals;
pub mod palette;
pub mod wellconn;

pub use certificate::{Certificate, HcCertificate, WcCertificate};
pub use coloring::Coloring;
pub use connectivity::Graph;
pub use error::{Error, Result};
pub use ordinals::CnfOrdinal;
pub use palette::{Budget, ColorSet, Mode, Palette, RelationQuery};
