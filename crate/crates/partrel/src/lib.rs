//! File formats, the independent certificate verifier, and the command-line
//! front end for `partrel-core`.

pub mod certfile;
pub mod cli;
pub mod formats;
pub mod verify;

pub use certfile::CertificateFile;
pub use formats::{read_coloring, read_graph, write_coloring, write_graph, FormatError};
pub use verify::{verify, Expectations, Violation};
