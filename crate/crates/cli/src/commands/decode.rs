use serde::Serialize;

use limag::codec::{build_syndrome_table, decode, Decoded};
use limag::sequences::weighted_sum;

use super::{load_sequence, offset_or_zero};
use crate::format::{parse_word, us, U};
use crate::{CliError, DecodeArgs, Output};

#[derive(Serialize)]
struct Decoding {
    status: &'static str,
    word: Vec<U>,
    /// `sum y_i b_i` minus the coset syndrome.
    syndrome: Vec<U>,
    #[serde(skip_serializing_if = "Option::is_none")]
    codeword: Option<Vec<U>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<Vec<U>>,
}

fn wide(v: &[u64]) -> Vec<U> {
    v.iter().map(|&x| U(x as u128)).collect()
}

pub fn run(a: &DecodeArgs) -> Result<Output, CliError> {
    let seq = load_sequence(&a.code)?;
    let y = parse_word(&a.word)?;
    let offset = offset_or_zero(a.offset.as_deref(), seq.n())?;
    let coset = weighted_sum(&seq, &offset)?;
    let table = build_syndrome_table(&seq)?;
    let out = match decode(&y, &table, &coset, a.sigma)? {
        Decoded::Corrected { codeword, error } => Decoding {
            status: "corrected",
            word: wide(&y),
            syndrome: us(weighted_sum(&seq, error.entries())?.coords()),
            codeword: Some(wide(&codeword)),
            error: Some(wide(error.entries())),
        },
        Decoded::Uncorrectable { syndrome } => Decoding {
            status: "uncorrectable",
            word: wide(&y),
            syndrome: us(syndrome.coords()),
            codeword: None,
            error: None,
        },
    };
    let negative = out.codeword.is_none();
    Output::json(&out, negative)
}
