//! Loading real systems into [`crate::UnitGraph`] form.
//!
//! Two paths: a portable CSV manifest (`unit,region,violational`) and a
//! lexical scan of a Java source tree that maps packages to regions and
//! `public` top-level types to violational units.

mod manifest;
mod scan;

pub use manifest::{read_manifest, write_manifest, ManifestError, MANIFEST_HEADER};
pub use scan::{scan_java_tree, ScanDiagnostics, ScanError, UNNAMED_REGION};
