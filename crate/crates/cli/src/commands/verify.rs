use serde::Serialize;

use limag::integers::abs_det;
use limag::lattice::{verify_packing, verify_perfect, volume};
use limag::sequences::{verify_bh, Injectivity};
use limag::{is_in_sphere, sphere_size, CodeParams, Collision, Error};

use super::load_code;
use crate::format::{CodeFile, U};
use crate::{CliError, Output, VerifyArgs};

#[derive(Serialize)]
struct Verdict {
    kind: &'static str,
    verdict: &'static str,
    n: usize,
    t: usize,
    ell: u64,
    /// `|G|` for a sequence, `V(L)` for a lattice.
    order: U,
    sphere_size: U,
    /// The colliding pair `[found, prior]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<[Vec<U>; 2]>,
}

fn witness(c: &Collision, p: &CodeParams) -> Result<[Vec<U>; 2], CliError> {
    let pair = [&c.found, &c.prior];
    for e in pair {
        let v: Vec<i128> = e.entries().iter().map(|&x| x as i128).collect();
        if !is_in_sphere(&v, p)? {
            return Err(Error::Inconsistency(format!("witness {e:?} is outside the sphere {p}")).into());
        }
    }
    Ok(pair.map(|e| e.entries().iter().map(|&x| U(x as u128)).collect()))
}

pub fn run(a: &VerifyArgs) -> Result<Output, CliError> {
    let code = load_code(&a.file)?.with_params(a.t, a.ell)?;
    let verdict = match code {
        CodeFile::Sequence(seq) => {
            let p = seq.params();
            let size = sphere_size(&p)?;
            let (verdict, witness) = match verify_bh(&seq)? {
                Injectivity::Injective if seq.group().order() == size => ("perfect", None),
                Injectivity::Injective => ("bh", None),
                Injectivity::Collides(c) => ("not-bh", Some(witness(&c, &p)?)),
            };
            Verdict {
                kind: "sequence",
                verdict,
                n: p.n(),
                t: p.t(),
                ell: p.ell(),
                order: U(seq.group().order()),
                sphere_size: U(size),
                witness,
            }
        }
        CodeFile::Lattice(lat) => {
            let p = lat.params();
            let vol = volume(&lat);
            if abs_det(lat.generator())? != vol {
                return Err(Error::Inconsistency("volume differs from |det| of the generator".into()).into());
            }
            let (verdict, witness) = match verify_packing(&lat, &p)? {
                Injectivity::Collides(c) => ("not-packing", Some(witness(&c, &p)?)),
                Injectivity::Injective if verify_perfect(&lat, &p)? => ("perfect", None),
                Injectivity::Injective => ("packing", None),
            };
            Verdict {
                kind: "lattice",
                verdict,
                n: p.n(),
                t: p.t(),
                ell: p.ell(),
                order: U(vol),
                sphere_size: U(sphere_size(&p)?),
                witness,
            }
        }
    };
    let negative = verdict.witness.is_some();
    Output::json(&verdict, negative)
}
