//! The two finiteness conditions on toric mirror data, decided by witness
//! search, with a slice-by-slice scan of `C[K_N^v] / (C[K_N^v] ∩ Jac(W))`
//! and a cheap necessary condition reported alongside.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cone::{dot, shifted_slice_points, slice_points, Point};
use crate::error::Result;
use crate::linalg::sparse::SparseMatrix;
use crate::linalg::{denominator_lcm, rat_int, Rat};
use crate::status::Status;

use super::witness::{key_lemma_witness, MembershipWitness, WitnessProblem};
use super::ToricMirrorData;

/// Slices with more lattice points than this end the quotient scan.
pub const SCAN_POINT_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Rays of `K_N^v`, potential from `(Δ, f)`.
    Primal,
    /// Rays of `K_M^v`, potential from `(Δ^v, g)`.
    Dual,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Primal => "primal",
            Side::Dual => "dual",
        }
    }

    pub fn problem(self, data: &ToricMirrorData) -> WitnessProblem {
        match self {
            Side::Primal => WitnessProblem::primal(data),
            Side::Dual => WitnessProblem::dual(data),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayOutcome {
    pub ray: Point,
    pub witness: Option<MembershipWitness>,
}

/// Quotient dimensions by degree. `certified_from = Some(t)` means the
/// quotient vanishes in every degree `>= t`: it vanishes on a window
/// `[t, t + L)` with `L` the largest ray degree and `t + L` at least the
/// degree sum of the `rank` heaviest rays, so every higher point reaches the
/// window by subtracting ray generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientScan {
    pub dims: Vec<(Rat, usize)>,
    pub certified_from: Option<Rat>,
    /// Highest degree examined.
    pub reached: Rat,
    /// The scan stopped at a slice larger than the point cap.
    pub truncated: bool,
}

impl QuotientScan {
    pub fn total(&self) -> usize {
        self.dims.iter().map(|(_, n)| n).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub side: Side,
    /// `Pass` iff every ray has a re-verified witness within the bound.
    pub status: Status,
    pub degree_bound: Rat,
    pub rays: Vec<RayOutcome>,
    /// Per facet of the cone spanned by `Δ^v` (dual to the rays).
    pub necessary_condition: Vec<bool>,
    pub scan: QuotientScan,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnifiedReport {
    pub primal: ConditionReport,
    pub dual: ConditionReport,
    pub warnings: Vec<String>,
}

impl UnifiedReport {
    pub fn status(&self) -> Status {
        if self.primal.status.is_pass() && self.dual.status.is_pass() {
            Status::Pass
        } else {
            Status::FailUnknown
        }
    }

    /// One block per side: status, witnesses, necessary condition, scan.
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.status());
        for side in [&self.primal, &self.dual] {
            out.push_str(&format!(
                "{} condition: {} — {}\n",
                side.side.name(),
                side.status,
                side.message
            ));
            for (i, r) in side.rays.iter().enumerate() {
                match &r.witness {
                    Some(w) => out.push_str(&format!(
                        "  ray {i} {:?}: witness at {} x ray, degree {}, {} terms\n",
                        r.ray,
                        w.multiple,
                        w.degree,
                        w.size()
                    )),
                    None => out.push_str(&format!("  ray {i} {:?}: no witness\n", r.ray)),
                }
            }
            let nec = if side.necessary_condition.iter().all(|b| *b) {
                "pass"
            } else {
                "fail"
            };
            out.push_str(&format!("  necessary-condition: {nec}\n"));
            let dims: Vec<String> = side
                .scan
                .dims
                .iter()
                .map(|(t, n)| format!("{t}:{n}"))
                .collect();
            let cert = match &side.scan.certified_from {
                Some(t) => format!("vanishes from degree {t}"),
                None => format!("not certified up to degree {}", side.scan.reached),
            };
            out.push_str(&format!(
                "  quotient dims {{{}}}, {cert}\n",
                dims.join(", ")
            ));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": self.status().to_string(),
            "primal": self.primal.to_json(),
            "dual": self.dual.to_json(),
            "warnings": self.warnings,
        })
    }
}

/// `3 (max(ĉ, 0) + 1)`: three times the top degree of a quotient whose
/// generators have degree at most 1, and never below 3.
pub fn default_degree_bound(data: &ToricMirrorData) -> Rat {
    rat_int(3 * (data.central_charge().max(0) + 1))
}

/// For every facet `θ` of the cone spanned by `Δ^v`: some `m ∈ Δ` and
/// `n ∈ θ ∩ Δ^v` have `m·n <= 1` and `m·n' = 0` for the other `n' ∈ θ ∩ Δ^v`.
pub fn necessary_condition(problem: &WitnessProblem) -> Vec<bool> {
    problem
        .rays()
        .iter()
        .map(|v| {
            let theta: Vec<&Point> = problem
                .delta_dual()
                .iter()
                .filter(|n| dot(v, n) == 0)
                .collect();
            problem.delta().iter().any(|m| {
                theta.iter().enumerate().any(|(i, n)| {
                    dot(m, n) <= 1
                        && theta
                            .iter()
                            .enumerate()
                            .all(|(j, other)| j == i || dot(m, other) == 0)
                })
            })
        })
        .collect()
}

/// Dimension of the degree-`t` part of the quotient.
fn quotient_dim(problem: &WitnessProblem, shift: &[i64], t: &Rat) -> Result<Option<usize>> {
    let points = slice_points(problem.cone(), &phi(problem), t)?;
    if points.len() > SCAN_POINT_CAP {
        return Ok(None);
    }
    if points.is_empty() {
        return Ok(Some(0));
    }
    let index: HashMap<&Point, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let candidates = shifted_slice_points(problem.cone(), shift, &phi(problem), &(t - Rat::one()))?;
    let mut rows: Vec<Vec<(usize, Rat)>> = Vec::new();
    for j in 0..problem.delta_dual().len() {
        let gen = problem.generator(j);
        if gen.is_empty() {
            continue;
        }
        for w in candidates.iter().filter(|w| problem.admissible(j, w)) {
            let row = gen
                .iter()
                .map(|(m, e)| {
                    let p: Point = w.iter().zip(m).map(|(a, b)| a + b).collect();
                    (index[&p], e.clone())
                })
                .collect();
            rows.push(row);
        }
    }
    let mut mat = SparseMatrix::new(rows.len(), points.len());
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row {
            mat.add(r, c, v);
        }
    }
    Ok(Some(points.len() - mat.rank()))
}

fn phi(problem: &WitnessProblem) -> Vec<Rat> {
    let r = problem.cone().rank();
    (0..r)
        .map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            problem.degree(&e)
        })
        .collect()
}

/// Scans quotient degrees `0, 1/L, 2/L, ...` up to `bound`, stopping at the
/// first certified window.
pub fn quotient_scan(problem: &WitnessProblem, shift: &[i64], bound: &Rat) -> Result<QuotientScan> {
    let functional = phi(problem);
    let step = Rat::new(1.into(), denominator_lcm(&functional));
    let mut ray_degrees: Vec<Rat> = problem.rays().iter().map(|v| problem.degree(v)).collect();
    ray_degrees.sort();
    let window = ray_degrees.last().cloned().unwrap_or_else(Rat::zero);
    let reach: Rat = ray_degrees.iter().rev().take(problem.cone().rank()).sum();
    let mut scan = QuotientScan {
        dims: Vec::new(),
        certified_from: None,
        reached: -Rat::one(),
        truncated: false,
    };
    let mut zero_since: Option<Rat> = None;
    let mut t = Rat::zero();
    while &t <= bound {
        let Some(n) = quotient_dim(problem, shift, &t)? else {
            scan.truncated = true;
            break;
        };
        scan.reached = t.clone();
        if n > 0 {
            scan.dims.push((t.clone(), n));
            zero_since = None;
        } else if zero_since.is_none() {
            zero_since = Some(t.clone());
        }
        if let Some(start) = &zero_since {
            let covered = &t + &step - start;
            if !window.is_zero() && covered >= window && start + &window >= reach {
                scan.certified_from = Some(start.clone());
                break;
            }
        }
        t += &step;
    }
    Ok(scan)
}

/// Witness search on every ray of one side, plus the scan and the
/// necessary condition.
pub fn side_condition(
    data: &ToricMirrorData,
    side: Side,
    degree_bound: &Rat,
) -> Result<ConditionReport> {
    let problem = side.problem(data);
    let shift = match side {
        Side::Primal => data.deg().to_vec(),
        Side::Dual => data.deg_dual().to_vec(),
    };
    let rays: Vec<RayOutcome> = (0..problem.ray_count())
        .into_par_iter()
        .map(|r| {
            Ok(RayOutcome {
                ray: problem.rays()[r].clone(),
                witness: key_lemma_witness(&problem, r, degree_bound)?,
            })
        })
        .collect::<Result<_>>()?;
    let missing = rays.iter().filter(|r| r.witness.is_none()).count();
    let status = if missing == 0 {
        Status::Pass
    } else {
        Status::FailUnknown
    };
    let message = if !degree_bound.is_positive() {
        format!("degree bound {degree_bound} admits no target degree; the search is empty")
    } else if missing == 0 {
        format!(
            "witnesses found on all {} rays within degree {degree_bound}",
            rays.len()
        )
    } else {
        format!(
            "no witness on {missing} of {} rays up to degree {degree_bound}; not refuted",
            rays.len()
        )
    };
    let scan = quotient_scan(&problem, &shift, degree_bound)?;
    Ok(ConditionReport {
        side,
        status,
        degree_bound: degree_bound.clone(),
        rays,
        necessary_condition: necessary_condition(&problem),
        scan,
        message,
    })
}

/// Both conditions, with a note when coefficients are all 1.
pub fn unified_condition(data: &ToricMirrorData, degree_bound: &Rat) -> Result<UnifiedReport> {
    let (primal, dual) = rayon::join(
        || side_condition(data, Side::Primal, degree_bound),
        || side_condition(data, Side::Dual, degree_bound),
    );
    let mut warnings = Vec::new();
    for (name, c) in [("f", data.f()), ("g", data.g())] {
        if c.iter().all(|x| x.is_one()) {
            warnings.push(format!(
                "{name} is identically 1: PASS certifies the condition for these coefficients and hence for \
                 generic ones, while FAIL-UNKNOWN may be specific to them"
            ));
        }
    }
    Ok(UnifiedReport {
        primal: primal?,
        dual: dual?,
        warnings,
    })
}

fn witness_json(w: &MembershipWitness) -> Value {
    let terms: Vec<Value> = w
        .polys
        .iter()
        .flat_map(|(j, poly)| {
            poly.iter()
                .map(move |(m, c)| json!({"n": j, "monomial": m, "coefficient": c.to_string()}))
        })
        .collect();
    json!({
        "ray": w.ray,
        "multiple": w.multiple,
        "target": w.target,
        "degree": w.degree.to_string(),
        "terms": terms,
    })
}

impl ConditionReport {
    pub fn to_json(&self) -> Value {
        let rays: Vec<Value> = self
            .rays
            .iter()
            .map(|r| json!({"ray": r.ray, "witness": r.witness.as_ref().map(witness_json)}))
            .collect();
        let dims: Vec<Value> = self
            .scan
            .dims
            .iter()
            .map(|(t, n)| json!([t.to_string(), n]))
            .collect();
        json!({
            "side": self.side.name(),
            "status": self.status.to_string(),
            "degree_bound": self.degree_bound.to_string(),
            "message": self.message,
            "rays": rays,
            "necessary_condition": if self.necessary_condition.iter().all(|b| *b) { "pass" } else { "fail" },
            "quotient_scan": {
                "dims": dims,
                "certified_from": self.scan.certified_from.as_ref().map(|t| t.to_string()),
                "reached": self.scan.reached.to_string(),
                "truncated": self.scan.truncated,
            },
        })
    }
}
