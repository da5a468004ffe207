//! Existence landscape for perfect lattice codes: the divisibility
//! condition for `t = n - 2`, the nonexistence sweep for `(n, n-2, 1)`, and
//! a survey combining constructions, search and necessary conditions.

use std::fmt;

use crate::error::{Error, Result};
use crate::integers::bound;
use crate::sequences::{
    construct_perfect_sequence, construct_trivial_full_cube, search_bh, verify_bh, AbelianGroup, BhSequence,
    Injectivity, SearchLimits,
};
use crate::sphere::{sphere_size, CodeParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    PerfectConstructed,
    PerfectFoundBySearch,
    NecessaryConditionFails,
    UnknownWithinBounds,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::PerfectConstructed => "perfect-constructed",
            Status::PerfectFoundBySearch => "perfect-found-by-search",
            Status::NecessaryConditionFails => "necessary-condition-fails",
            Status::UnknownWithinBounds => "unknown-within-bounds",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Sequence(BhSequence),
    /// Every `alpha` tried by the divisibility test, and those for which the
    /// factor `l + 1 + alpha (n - 2 - l)` is not positive.
    Alphas {
        tried: Vec<u64>,
        nonpositive: Vec<u64>,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceVerdict {
    pub params: CodeParams,
    pub status: Status,
    pub witness: Witness,
    /// Free-form qualifier, e.g. which cap stopped the search.
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryCondition {
    pub holds: bool,
    /// The `alpha` values for which the divisibility holds.
    pub witnesses: Vec<u64>,
    pub tried: Vec<u64>,
    pub nonpositive: Vec<u64>,
}

/// For a perfect lattice code in `A(n, n-2, l)` to exist, `|S(n, n-2, l)|`
/// must divide `(l+1)^{n-2} * (l + 1 + alpha (n - 2 - l))` for some
/// `alpha` in `[0, l]`. The expression is taken as written; a nonpositive
/// factor counts as failing for that `alpha`.
pub fn necessary_condition_n_minus_2(n: usize, ell: u64) -> Result<NecessaryCondition> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("the t = n - 2 condition needs n >= 3, got {n}")));
    }
    let size = sphere_size(&CodeParams::new(n, n - 2, ell)?)? as i128;
    let lp1 = bound::check_i(ell as i128 + 1)?;
    let prefix = bound::upow(lp1 as u128, (n - 2) as u64)? as i128;
    let slope = bound::sub((n - 2) as i128, ell as i128)?;
    let mut out = NecessaryCondition { holds: false, witnesses: vec![], tried: vec![], nonpositive: vec![] };
    for alpha in 0..=ell {
        out.tried.push(alpha);
        let factor = bound::add(lp1, bound::mul(alpha as i128, slope)?)?;
        if factor <= 0 {
            out.nonpositive.push(alpha);
            continue;
        }
        if bound::mul(prefix, factor)? % size == 0 {
            out.witnesses.push(alpha);
        }
    }
    out.holds = !out.witnesses.is_empty();
    Ok(out)
}

/// Runs the divisibility test for `(n, n-2, 1)`, `4 <= n <= n_max`. Every
/// cell must fail; a passing cell is reported as an inconsistency.
pub fn nonexistence_n_minus_2_ell1(n_max: usize) -> Result<Vec<ExistenceVerdict>> {
    let mut out = Vec::new();
    for n in 4..=n_max {
        let cond = necessary_condition_n_minus_2(n, 1)?;
        if cond.holds {
            return Err(Error::Inconsistency(format!(
                "divisibility condition holds for (n={n}, t={}, l=1) with alpha in {:?}",
                n - 2,
                cond.witnesses
            )));
        }
        out.push(ExistenceVerdict {
            params: CodeParams::new(n, n - 2, 1)?,
            status: Status::NecessaryConditionFails,
            witness: Witness::Alphas { tried: cond.tried, nonpositive: cond.nonpositive },
            note: None,
        });
    }
    Ok(out)
}

fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Partitions of `a` into nonincreasing parts.
fn partitions(a: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, a, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `order`, in invariant-factor form, sorted by
/// rank and then by factor list (the cyclic group first).
pub fn abelian_groups_of_order(order: u128) -> Result<Vec<AbelianGroup>> {
    if order == 0 {
        return Err(Error::InvalidGroup("order must be positive".into()));
    }
    // Each entry: invariant factors, largest first.
    let mut combos: Vec<Vec<u128>> = vec![vec![]];
    for (p, e) in factorize(order) {
        let mut next = Vec::new();
        for combo in &combos {
            for lambda in partitions(e) {
                let len = combo.len().max(lambda.len());
                let mut merged = vec![1u128; len];
                for (i, m) in merged.iter_mut().enumerate() {
                    let a = combo.get(i).copied().unwrap_or(1);
                    let b = lambda.get(i).map_or(1, |&k| p.pow(k));
                    *m = a * b;
                }
                next.push(merged);
            }
        }
        combos = next;
    }
    let mut groups = combos
        .into_iter()
        .map(|mut f| {
            f.reverse();
            AbelianGroup::new(f)
        })
        .collect::<Result<Vec<_>>>()?;
    groups.sort_by(|a, b| (a.rank(), a.factors()).cmp(&(b.rank(), b.factors())));
    Ok(groups)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurveyOptions {
    /// Largest group order searched.
    pub group_cap: u128,
    /// Node budget per group search.
    pub max_nodes: u64,
    /// Also search cells the necessary condition rules out; any hit is an
    /// inconsistency.
    pub cross_check: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions { group_cap: 1 << 12, max_nodes: 5_000_000, cross_check: false }
    }
}

enum SearchOutcome {
    Found(BhSequence),
    Exhausted(usize),
    Capped(String),
}

fn search_all_groups(params: &CodeParams, opts: &SurveyOptions) -> Result<SearchOutcome> {
    let order = sphere_size(params)?;
    if order > opts.group_cap {
        return Ok(SearchOutcome::Capped(format!("group order {order} exceeds cap {}", opts.group_cap)));
    }
    let groups = abelian_groups_of_order(order)?;
    let limits = SearchLimits { max_group_order: opts.group_cap, max_nodes: opts.max_nodes };
    let mut capped = None;
    for g in &groups {
        match search_bh(g, params.n(), params.t(), params.ell(), limits) {
            Ok(Some(seq)) => return Ok(SearchOutcome::Found(seq)),
            Ok(None) => {}
            Err(Error::SearchCap { nodes }) => {
                capped.get_or_insert_with(|| format!("search in {g} stopped after {nodes} nodes"));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(match capped {
        Some(msg) => SearchOutcome::Capped(msg),
        None => SearchOutcome::Exhausted(groups.len()),
    })
}

/// Confirms a perfect witness; the enumeration cap downgrades to a note.
fn checked_perfect(seq: BhSequence, status: Status) -> Result<ExistenceVerdict> {
    let params = seq.params();
    let note = match verify_bh(&seq) {
        Ok(Injectivity::Injective) => None,
        Ok(Injectivity::Collides(c)) => {
            return Err(Error::Inconsistency(format!("witness for {params} is not B_t[l]: {c}")));
        }
        Err(Error::EnumerationCap { .. }) => Some("witness too large to re-verify".to_string()),
        Err(e) => return Err(e),
    };
    if !seq.has_perfect_order()? {
        return Err(Error::Inconsistency(format!("witness for {params} has the wrong group order")));
    }
    Ok(ExistenceVerdict { params, status, witness: Witness::Sequence(seq), note })
}

fn search_verdict(params: CodeParams, opts: &SurveyOptions) -> Result<ExistenceVerdict> {
    Ok(match search_all_groups(&params, opts)? {
        SearchOutcome::Found(seq) => checked_perfect(seq, Status::PerfectFoundBySearch)?,
        SearchOutcome::Exhausted(k) => ExistenceVerdict {
            params,
            status: Status::UnknownWithinBounds,
            witness: Witness::None,
            note: Some(format!("no sequence in any of the {k} groups of this order")),
        },
        SearchOutcome::Capped(msg) => {
            ExistenceVerdict { params, status: Status::UnknownWithinBounds, witness: Witness::None, note: Some(msg) }
        }
    })
}

pub fn survey_cell(params: CodeParams, opts: &SurveyOptions) -> Result<ExistenceVerdict> {
    params.require_correcting()?;
    let (n, t, ell) = (params.n(), params.t(), params.ell());
    if t == n {
        return checked_perfect(construct_trivial_full_cube(n, ell)?, Status::PerfectConstructed);
    }
    if t + 1 == n {
        return checked_perfect(construct_perfect_sequence(n, ell)?, Status::PerfectConstructed);
    }
    if t + 2 == n {
        let cond = necessary_condition_n_minus_2(n, ell)?;
        if !cond.holds {
            if opts.cross_check {
                if let SearchOutcome::Found(seq) = search_all_groups(&params, opts)? {
                    return Err(Error::Inconsistency(format!(
                        "search found {seq:?} for {params}, which the divisibility condition excludes"
                    )));
                }
            }
            let note = (!cond.nonpositive.is_empty()).then(|| "nonpositive factor for some alpha".to_string());
            return Ok(ExistenceVerdict {
                params,
                status: Status::NecessaryConditionFails,
                witness: Witness::Alphas { tried: cond.tried, nonpositive: cond.nonpositive },
                note,
            });
        }
    }
    search_verdict(params, opts)
}

/// All cells `n <= n_max`, `1 <= t <= n`, `l <= l_max`, ordered by `(n, t, l)`.
pub fn survey(n_max: usize, ell_max: u64, opts: &SurveyOptions) -> Result<Vec<ExistenceVerdict>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for t in 1..=n {
            for ell in 1..=ell_max {
                out.push(survey_cell(CodeParams::new(n, t, ell)?, opts)?);
            }
        }
    }
    Ok(out)
}
