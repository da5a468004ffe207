//! Which subcommand exposes each library operation.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry {
    pub op: &'static str,
    pub command: &'static str,
    /// `None` when the command calls the operation itself; otherwise the
    /// directly called operation that reaches it.
    pub via: Option<&'static str>,
}

const fn direct(op: &'static str, command: &'static str) -> Entry {
    Entry { op, command, via: None }
}

const fn via(op: &'static str, command: &'static str, through: &'static str) -> Entry {
    Entry { op, command, via: Some(through) }
}

pub const COMMANDS: [&str; 6] = ["construct", "verify", "decode", "simulate", "survey", "convert"];

pub const REGISTRY: &[Entry] = &[
    direct("construct_perfect_sequence", "construct"),
    direct("construct_trivial_full_cube", "construct"),
    direct("check_l_properties", "construct"),
    direct("mod_inverse", "construct"),
    direct("element_order", "construct"),
    direct("verify_bh", "verify"),
    direct("verify_packing", "verify"),
    direct("verify_perfect", "verify"),
    direct("volume", "verify"),
    direct("abs_det", "verify"),
    direct("sphere_size", "verify"),
    direct("is_in_sphere", "verify"),
    via("enumerate_sphere", "verify", "verify_bh"),
    direct("build_syndrome_table", "decode"),
    direct("decode", "decode"),
    direct("weighted_sum", "decode"),
    direct("extract_codebook", "simulate"),
    direct("simulate_channel", "simulate"),
    direct("survey", "survey"),
    direct("nonexistence_n_minus_2_ell1", "survey"),
    via("necessary_condition_n_minus_2", "survey", "survey"),
    via("search_bh", "survey", "survey"),
    direct("lattice_from_sequence", "convert"),
    direct("sequence_from_lattice", "convert"),
    via("hermite_normal_form", "convert", "lattice_from_sequence"),
    via("smith_normal_form", "convert", "sequence_from_lattice"),
];

pub fn command_for(op: &str) -> Option<&'static str> {
    REGISTRY.iter().find(|e| e.op == op).map(|e| e.command)
}
