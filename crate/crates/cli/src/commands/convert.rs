use limag::lattice::{lattice_from_sequence, sequence_from_lattice};

use super::load_code;
use crate::format::{CodeFile, LatticeJson, SequenceJson};
use crate::{CliError, ConvertArgs, Output, Target};

pub fn run(a: &ConvertArgs) -> Result<Output, CliError> {
    match (load_code(&a.file)?, a.to) {
        (CodeFile::Sequence(seq), Target::Lattice) => {
            Output::json(&LatticeJson::from_lattice(&lattice_from_sequence(&seq)?), false)
        }
        (CodeFile::Lattice(lat), Target::Sequence) => {
            Output::json(&SequenceJson::from_seq(&sequence_from_lattice(&lat)?), false)
        }
        (CodeFile::Sequence(_), Target::Sequence) => Err(CliError::Usage("input is already a sequence file".into())),
        (CodeFile::Lattice(_), Target::Lattice) => Err(CliError::Usage("input is already a lattice file".into())),
    }
}
