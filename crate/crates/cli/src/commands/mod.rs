//! One module per subcommand.

pub mod construct;
pub mod convert;
pub mod decode;
pub mod simulate;
pub mod survey;
pub mod verify;

use limag::lattice::sequence_from_lattice;
use limag::sequences::BhSequence;

use crate::format::{parse_code, parse_word, CodeFile};
use crate::{read_file, CliError};
use std::path::Path;

pub(crate) fn load_code(path: &Path) -> Result<CodeFile, CliError> {
    parse_code(&path.display().to_string(), &read_file(path)?)
}

/// The code as a sequence, taking the quotient of a lattice file.
pub(crate) fn load_sequence(path: &Path) -> Result<BhSequence, CliError> {
    Ok(match load_code(path)? {
        CodeFile::Sequence(s) => s,
        CodeFile::Lattice(l) => sequence_from_lattice(&l)?,
    })
}

pub(crate) fn offset_or_zero(offset: Option<&str>, n: usize) -> Result<Vec<u64>, CliError> {
    offset.map_or(Ok(vec![0; n]), parse_word)
}
