use serde::Serialize;

use limag::integers::{element_order, mod_inverse, mul_mod};
use limag::sequences::{check_l_properties, construct_perfect_sequence, construct_trivial_full_cube};

use crate::format::{SequenceJson, U};
use crate::{CliError, ConstructArgs, Output};

#[derive(Serialize)]
struct Multiplier {
    /// `x = (l+1) * l^{-1} mod m`.
    x: U,
    ell_inverse: U,
    order: U,
}

#[derive(Serialize)]
struct LProps {
    p1: bool,
    p2: bool,
    p3: bool,
}

#[derive(Serialize)]
struct Constructed {
    #[serde(flatten)]
    sequence: SequenceJson,
    construction: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplier: Option<Multiplier>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l_properties: Option<LProps>,
}

pub fn run(a: &ConstructArgs) -> Result<Output, CliError> {
    let t = a.t.unwrap_or(a.n.saturating_sub(1));
    if t == a.n {
        let seq = construct_trivial_full_cube(a.n, a.ell)?;
        let out = Constructed {
            sequence: SequenceJson::from_seq(&seq),
            construction: "full-cube",
            multiplier: None,
            l_properties: None,
        };
        return Output::json(&out, false);
    }
    if t + 1 != a.n || t == 0 {
        return Err(CliError::Usage(format!(
            "no construction for n = {}, t = {t}; use t = n - 1 (n >= 2) or t = n",
            a.n
        )));
    }
    let seq = construct_perfect_sequence(a.n, a.ell)?;
    let m = seq.group().order();
    let p = check_l_properties(a.n, a.ell)?;
    let inv = mod_inverse(a.ell as u128 % m, m).ok_or(limag::Error::NotCoprime { value: a.ell as u128, modulus: m })?;
    let x = mul_mod((a.ell as u128 + 1) % m, inv, m);
    let out = Constructed {
        sequence: SequenceJson::from_seq(&seq),
        construction: "power-sequence",
        multiplier: Some(Multiplier { x: U(x), ell_inverse: U(inv), order: U(element_order(x, m)?) }),
        l_properties: Some(LProps { p1: p.p1, p2: p.p2, p3: p.p3 }),
    };
    Output::json(&out, false)
}
