use serde::Serialize;

use limag::codec::{build_syndrome_table, extract_codebook, simulate_channel, CODEBOOK_SCAN_CAP};

use super::{load_sequence, offset_or_zero};
use crate::format::U;
use crate::{CliError, Output, SimulateArgs};

#[derive(Serialize)]
struct Report {
    trials: u64,
    decode_successes: u64,
    failures: u64,
    seed: U,
    rng: &'static str,
    sigma: u64,
    codebook_size: usize,
    n: usize,
    t: usize,
    ell: u64,
}

pub fn run(a: &SimulateArgs) -> Result<Output, CliError> {
    let seq = load_sequence(&a.code)?;
    let offset = offset_or_zero(a.offset.as_deref(), seq.n())?;
    let table = build_syndrome_table(&seq)?;
    let book = extract_codebook(&seq, &offset, a.sigma, CODEBOOK_SCAN_CAP)?;
    let r = simulate_channel(&book, &table, a.trials, a.seed)?;
    let report = Report {
        trials: r.trials,
        decode_successes: r.decode_successes,
        failures: r.failures,
        seed: U(r.seed as u128),
        rng: r.rng,
        sigma: a.sigma,
        codebook_size: book.len(),
        n: seq.n(),
        t: seq.t(),
        ell: seq.ell(),
    };
    Output::json(&report, r.failures > 0)
}
