use limag::analysis::{nonexistence_n_minus_2_ell1, survey, ExistenceVerdict, Status, SurveyOptions, Witness};
use limag::Error;

use crate::{CliError, Output, Payload, SurveyArgs};

pub const HEADER: [&str; 5] = ["n", "t", "ell", "status", "witness"];

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// `Z_7 {1,2,4}`; non-cyclic elements are parenthesized tuples.
fn witness_cell(v: &ExistenceVerdict) -> String {
    match &v.witness {
        Witness::Sequence(seq) => {
            let elems: Vec<String> = seq
                .elements()
                .iter()
                .map(|e| match e.coords() {
                    [c] => c.to_string(),
                    cs => format!("({})", list(cs)),
                })
                .collect();
            format!("{} {{{}}}", seq.group(), elems.join(","))
        }
        Witness::Alphas { tried, nonpositive } => {
            let mut s = format!("no alpha in [{}] divides", list(tried));
            if !nonpositive.is_empty() {
                s.push_str(&format!("; nonpositive factor at alpha {}", list(nonpositive)));
            }
            s
        }
        Witness::None => v.note.clone().unwrap_or_default(),
    }
}

pub fn run(a: &SurveyArgs) -> Result<Output, CliError> {
    let opts = SurveyOptions { group_cap: a.group_cap as u128, max_nodes: a.max_nodes, cross_check: false };
    let verdicts = survey(a.max_n, a.max_ell, &opts)?;
    // The survey and the dedicated (n, n-2, 1) sweep must agree.
    if a.max_ell >= 1 {
        for expected in nonexistence_n_minus_2_ell1(a.max_n)? {
            let row = verdicts.iter().find(|v| v.params == expected.params);
            if row.map(|v| v.status) != Some(Status::NecessaryConditionFails) {
                return Err(
                    Error::Inconsistency(format!("survey disagrees with the sweep at {}", expected.params)).into()
                );
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Inconsistency(format!("CSV encoding failed: {e}"));
    w.write_record(HEADER).map_err(csv_err)?;
    for v in &verdicts {
        let p = v.params;
        w.write_record([
            p.n().to_string(),
            p.t().to_string(),
            p.ell().to_string(),
            v.status.to_string(),
            witness_cell(v),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Inconsistency(e.to_string()))?;
    let text = String::from_utf8(bytes).map_err(|e| Error::Inconsistency(e.to_string()))?;
    Ok(Output { payload: Payload::Csv(text), negative: false })
}
