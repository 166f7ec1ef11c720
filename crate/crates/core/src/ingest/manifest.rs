//! CSV manifest format for unit graphs.
//!
//! UTF-8 with the exact header `unit,region,violational`, one unit per
//! data row. The writer emits LF line endings with rows sorted by
//! `(region, unit id)`; the reader tolerates CRLF. Round-tripping any
//! graph through write-then-read is the identity.

use std::collections::HashSet;
use std::io::{Read, Write};

use thiserror::Error;

use crate::graph::{Unit, UnitGraph};

/// The required manifest header fields.
pub const MANIFEST_HEADER: [&str; 3] = ["unit", "region", "violational"];

/// Why a manifest could not be read or written.
#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("empty manifest: missing header row")]
    MissingHeader,

    #[error("row 1: malformed header: expected `unit,region,violational`, found `{found}`")]
    BadHeader { found: String },

    #[error("row {row}: expected 3 fields `unit,region,violational`, found {found}")]
    WrongFieldCount { row: u64, found: usize },

    #[error("row {row}: unit id must not be empty")]
    EmptyUnitId { row: u64 },

    #[error("row {row}: region must not be empty")]
    EmptyRegion { row: u64 },

    #[error(
        "row {row}: field `violational` must be one of 0, 1, true, false \
         (case-insensitive), found `{found}`"
    )]
    BadBoolean { row: u64, found: String },

    #[error("row {row}: duplicate unit id `{id}`")]
    DuplicateUnit { row: u64, id: String },

    #[error("empty system: manifest contains a header but no data rows")]
    EmptySystem,

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Parses a manifest into a graph, preserving row order.
///
/// Every failure names the 1-based row it occurred on (the header is
/// row 1).
pub fn read_manifest<R: Read>(reader: R) -> Result<UnitGraph, ManifestError> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut records = csv_reader.records();

    let header = match records.next() {
        None => return Err(ManifestError::MissingHeader),
        Some(record) => record?,
    };
    if header.len() != MANIFEST_HEADER.len() || !header.iter().eq(MANIFEST_HEADER) {
        return Err(ManifestError::BadHeader {
            found: header.iter().collect::<Vec<_>>().join(","),
        });
    }

    let mut units = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    for (index, record) in records.enumerate() {
        let row = index as u64 + 2;
        let record = record?;
        if record.len() != MANIFEST_HEADER.len() {
            return Err(ManifestError::WrongFieldCount {
                row,
                found: record.len(),
            });
        }
        let id = &record[0];
        if id.is_empty() {
            return Err(ManifestError::EmptyUnitId { row });
        }
        let region = &record[1];
        if region.is_empty() {
            return Err(ManifestError::EmptyRegion { row });
        }
        let violational = parse_flag(&record[2]).ok_or_else(|| ManifestError::BadBoolean {
            row,
            found: record[2].to_string(),
        })?;
        if !seen.insert(id.to_string()) {
            return Err(ManifestError::DuplicateUnit {
                row,
                id: id.to_string(),
            });
        }
        units.push(Unit::new(id, region, violational));
    }

    if units.is_empty() {
        return Err(ManifestError::EmptySystem);
    }
    Ok(UnitGraph::new(units).expect("rows validated for uniqueness and non-emptiness"))
}

fn parse_flag(field: &str) -> Option<bool> {
    if field == "1" || field.eq_ignore_ascii_case("true") {
        Some(true)
    } else if field == "0" || field.eq_ignore_ascii_case("false") {
        Some(false)
    } else {
        None
    }
}

/// Writes a graph as a manifest, rows sorted by `(region, unit id)`.
pub fn write_manifest<W: Write>(graph: &UnitGraph, writer: W) -> Result<(), ManifestError> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record(MANIFEST_HEADER)?;
    let mut rows: Vec<&Unit> = graph.units().iter().collect();
    rows.sort_by(|a, b| (&a.region, &a.id).cmp(&(&b.region, &b.id)));
    for unit in rows {
        csv_writer.write_record([
            unit.id.as_str(),
            unit.region.as_str(),
            if unit.violational { "1" } else { "0" },
        ])?;
    }
    csv_writer.flush().map_err(csv::Error::from)?;
    Ok(())
}
