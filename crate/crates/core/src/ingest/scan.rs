//! Lexical scanner for Java source trees.
//!
//! Maps a tree of `.java` files onto a unit graph: the file's declared
//! package becomes the region (the unnamed package is [`UNNAMED_REGION`]),
//! each top-level `class`/`interface`/`enum` declaration becomes one unit
//! with id `package.TypeName`, and the `public` modifier sets the
//! violational flag. Scanning is lexical, not grammatical: comments and
//! string/char literals are stripped first, then declarations are picked
//! out by brace-depth tracking, so nested and local types never register.
//! Annotation types (`@interface`) are treated lexically and count as
//! interfaces; `package-info.java` is ignored.
//!
//! Files that cannot be read or whose braces do not balance are skipped
//! with a diagnostic while the scan continues.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;
use walkdir::WalkDir;

use crate::graph::{Unit, UnitGraph};

/// Region assigned to types declared without a `package` statement.
pub const UNNAMED_REGION: &str = "<default>";

/// What the scanner saw along the way.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanDiagnostics {
    /// Files successfully tokenised (skipped files excluded).
    pub files_scanned: u64,
    /// Units in the produced graph.
    pub units_found: u64,
    /// Files that could not be scanned, with reasons, sorted by path.
    pub files_skipped: Vec<(PathBuf, String)>,
    /// Non-fatal oddities, e.g. duplicate type ids across files.
    pub warnings: Vec<String>,
}

/// Why a tree could not be scanned at all.
#[derive(Debug, Error)]
pub enum ScanError {
    #[error("cannot scan `{}`: {reason}", path.display())]
    UnreadableRoot { path: PathBuf, reason: String },

    #[error("empty system: no program units found under `{}`", path.display())]
    EmptySystem { path: PathBuf },
}

/// Scans a directory tree of Java sources into a unit graph.
///
/// The resulting units are sorted by id, so the same tree scans to the
/// same graph regardless of filesystem enumeration order. When the same
/// fully qualified type appears in several files, the lexicographically
/// first file wins and the rest are reported as warnings.
pub fn scan_java_tree(root: &Path) -> Result<(UnitGraph, ScanDiagnostics), ScanError> {
    let metadata = fs::metadata(root).map_err(|e| ScanError::UnreadableRoot {
        path: root.to_path_buf(),
        reason: e.to_string(),
    })?;
    if !metadata.is_dir() {
        return Err(ScanError::UnreadableRoot {
            path: root.to_path_buf(),
            reason: "not a directory".to_string(),
        });
    }

    let mut diagnostics = ScanDiagnostics::default();
    let mut java_files = Vec::new();
    for entry in WalkDir::new(root).sort_by_file_name() {
        match entry {
            Err(e) => {
                let path = e
                    .path()
                    .map(Path::to_path_buf)
                    .unwrap_or_else(|| root.to_path_buf());
                diagnostics.files_skipped.push((path, e.to_string()));
            }
            Ok(entry) => {
                if !entry.file_type().is_file() {
                    continue;
                }
                let path = entry.into_path();
                if path.extension().and_then(|e| e.to_str()) != Some("java") {
                    continue;
                }
                if path.file_name().and_then(|n| n.to_str()) == Some("package-info.java") {
                    continue;
                }
                java_files.push(path);
            }
        }
    }
    java_files.sort();

    let mut by_id: BTreeMap<String, (Unit, PathBuf)> = BTreeMap::new();
    for path in &java_files {
        let source = match fs::read_to_string(path) {
            Ok(source) => source,
            Err(e) => {
                diagnostics.files_skipped.push((path.clone(), e.to_string()));
                continue;
            }
        };
        let scan = match scan_source(&source) {
            Ok(scan) => scan,
            Err(reason) => {
                diagnostics.files_skipped.push((path.clone(), reason));
                continue;
            }
        };
        diagnostics.files_scanned += 1;
        let region = scan
            .package
            .unwrap_or_else(|| UNNAMED_REGION.to_string());
        for declaration in scan.types {
            let id = if region == UNNAMED_REGION {
                declaration.name.clone()
            } else {
                format!("{region}.{}", declaration.name)
            };
            if let Some((_, first_path)) = by_id.get(&id) {
                diagnostics.warnings.push(format!(
                    "duplicate type `{id}` in {} ignored (first declared in {})",
                    path.display(),
                    first_path.display()
                ));
            } else {
                by_id.insert(
                    id.clone(),
                    (Unit::new(id, region.clone(), declaration.public), path.clone()),
                );
            }
        }
    }

    diagnostics.files_skipped.sort_by(|a, b| a.0.cmp(&b.0));
    let units: Vec<Unit> = by_id.into_values().map(|(unit, _)| unit).collect();
    if units.is_empty() {
        return Err(ScanError::EmptySystem {
            path: root.to_path_buf(),
        });
    }
    diagnostics.units_found = units.len() as u64;
    let graph = UnitGraph::new(units).expect("ids deduplicated by map");
    Ok((graph, diagnostics))
}

struct TypeDeclaration {
    name: String,
    public: bool,
}

struct FileScan {
    package: Option<String>,
    types: Vec<TypeDeclaration>,
}

/// Tokenises one stripped source file, tracking brace depth so only
/// top-level declarations register.
fn scan_source(source: &str) -> Result<FileScan, String> {
    let stripped = strip_comments_and_literals(source);
    let mut depth: u32 = 0;
    let mut package: Option<String> = None;
    let mut types = Vec::new();
    let mut modifiers: Vec<String> = Vec::new();
    let mut reading_package = false;
    let mut package_name = String::new();
    // Some(is_public) after a type keyword, waiting for the name.
    let mut pending_type: Option<bool> = None;
    let mut last_significant: Option<char> = None;

    let mut chars = stripped.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if is_identifier_start(c) {
            let preceded_by_dot = last_significant == Some('.');
            let mut token = String::new();
            while let Some(&c) = chars.peek() {
                if is_identifier_continue(c) {
                    token.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            last_significant = token.chars().last();
            if depth == 0 {
                if reading_package {
                    if !package_name.is_empty() {
                        package_name.push('.');
                    }
                    package_name.push_str(&token);
                } else if let Some(public) = pending_type {
                    types.push(TypeDeclaration {
                        name: token,
                        public,
                    });
                    pending_type = None;
                    modifiers.clear();
                } else if preceded_by_dot {
                    // qualified access such as `Foo.class`, never a keyword
                } else if token == "package" && package.is_none() {
                    reading_package = true;
                    package_name.clear();
                } else if token == "class" || token == "interface" || token == "enum" {
                    pending_type = Some(modifiers.iter().any(|m| m == "public"));
                } else {
                    modifiers.push(token);
                }
            }
            continue;
        }
        chars.next();
        last_significant = Some(c);
        match c {
            '{' => {
                depth += 1;
                if depth == 1 {
                    modifiers.clear();
                    pending_type = None;
                }
            }
            '}' => {
                if depth == 0 {
                    return Err("unbalanced braces".to_string());
                }
                depth -= 1;
                if depth == 0 {
                    modifiers.clear();
                }
            }
            ';' if depth == 0 => {
                if reading_package {
                    if package_name.is_empty() {
                        return Err("malformed package declaration".to_string());
                    }
                    package = Some(std::mem::take(&mut package_name));
                    reading_package = false;
                }
                modifiers.clear();
                pending_type = None;
            }
            _ => {}
        }
    }

    if depth != 0 {
        return Err("unbalanced braces".to_string());
    }
    if reading_package {
        return Err("malformed package declaration".to_string());
    }
    if pending_type.is_some() {
        return Err("malformed type declaration".to_string());
    }
    Ok(FileScan { package, types })
}

fn is_identifier_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_identifier_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// Blanks out comments and string/char literals, preserving newlines, so
/// the token scan never sees `public class` inside text.
fn strip_comments_and_literals(source: &str) -> String {
    enum State {
        Code,
        LineComment,
        BlockComment,
        StringLiteral,
        CharLiteral,
    }
    let mut out = String::with_capacity(source.len());
    let mut state = State::Code;
    let mut chars = source.chars().peekable();
    while let Some(c) = chars.next() {
        match state {
            State::Code => match c {
                '/' if chars.peek() == Some(&'/') => {
                    chars.next();
                    out.push_str("  ");
                    state = State::LineComment;
                }
                '/' if chars.peek() == Some(&'*') => {
                    chars.next();
                    out.push_str("  ");
                    state = State::BlockComment;
                }
                '"' => {
                    out.push(' ');
                    state = State::StringLiteral;
                }
                '\'' => {
                    out.push(' ');
                    state = State::CharLiteral;
                }
                _ => out.push(c),
            },
            State::LineComment => {
                if c == '\n' {
                    out.push('\n');
                    state = State::Code;
                } else {
                    out.push(' ');
                }
            }
            State::BlockComment => {
                if c == '*' && chars.peek() == Some(&'/') {
                    chars.next();
                    out.push_str("  ");
                    state = State::Code;
                } else if c == '\n' {
                    out.push('\n');
                } else {
                    out.push(' ');
                }
            }
            State::StringLiteral => {
                if c == '\\' {
                    if chars.next().is_some() {
                        out.push(' ');
                    }
                    out.push(' ');
                } else if c == '"' {
                    out.push(' ');
                    state = State::Code;
                } else if c == '\n' {
                    out.push('\n');
                } else {
                    out.push(' ');
                }
            }
            State::CharLiteral => {
                if c == '\\' {
                    if chars.next().is_some() {
                        out.push(' ');
                    }
                    out.push(' ');
                } else if c == '\'' {
                    out.push(' ');
                    state = State::Code;
                } else if c == '\n' {
                    out.push('\n');
                } else {
                    out.push(' ');
                }
            }
        }
    }
    out
}
