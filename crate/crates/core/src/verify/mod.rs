//! Orchestration: the analyses behind every CLI subcommand and the duality
//! report with its verdicts.

mod input;
mod report;

pub use input::{
    BhDatum, BhInput, CoefficientsInput, Datum, Engine, GroupInput, InputSpec, Options, RatValue,
    UnifiedInput,
};
pub use report::{recompute_table_verdicts, DualityReport, Relation, TableCheck, Verdict};

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::complex::{bigraded_table, ComplexVariant};
use crate::error::Error;
use crate::linalg::{rat_int, Rat};
use crate::milnor::{is_nondegenerate, orbifold_a_table, orbifold_b_table};
use crate::model::{
    aut_group, cy_check, dual_group, exponential_grading_element, lattice_data, SymmetryGroup,
};
use crate::status::Status;
use crate::table::HodgeTable;
use crate::unified::{
    default_degree_bound, key_lemma_witness, unified_condition, UnifiedReport, WitnessProblem,
};

/// Default `[-margin, ĉ + margin]` window for the complex engine.
pub const DEFAULT_WINDOW_MARGIN: i64 = 1;

/// An error together with the stage that raised it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{stage}: {error}")]
pub struct Failure {
    pub stage: String,
    pub error: Error,
}

impl Failure {
    /// 2 for input errors, 3 for resource caps.
    pub fn exit_code(&self) -> i32 {
        match self.error {
            Error::ConeCapExceeded(_) | Error::GroupTooLarge(_) => 3,
            _ => 2,
        }
    }
}

trait Context<T> {
    fn stage(self, stage: &str) -> Result<T, Failure>;
}

impl<T> Context<T> for crate::Result<T> {
    fn stage(self, stage: &str) -> Result<T, Failure> {
        self.map_err(|error| Failure {
            stage: stage.to_string(),
            error,
        })
    }
}

/// Which ring a table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSide {
    A,
    B,
}

/// Settings after merging command-line overrides into the file's options.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub engine: Option<Engine>,
    pub window_margin: Option<i64>,
    pub degree_bound: Option<Rat>,
}

impl RunOptions {
    /// Command-line values win over those in the document.
    pub fn merged(&self, spec: &InputSpec) -> RunOptions {
        let file = spec.options();
        RunOptions {
            engine: self.engine.or(file.engine),
            window_margin: self.window_margin.or(file.window_margin),
            degree_bound: self
                .degree_bound
                .clone()
                .or_else(|| file.degree_bound.as_ref().map(|r| r.0.clone())),
        }
    }

    fn margin(&self) -> i64 {
        self.window_margin.unwrap_or(DEFAULT_WINDOW_MARGIN)
    }
}

fn resolve(spec: &InputSpec) -> Result<Datum, Failure> {
    spec.resolve().stage("input")
}

fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn group_json(g: &SymmetryGroup) -> Value {
    let gens: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
    let factors: Vec<String> = g
        .invariant_factors()
        .iter()
        .map(ToString::to_string)
        .collect();
    json!({"order": g.order(), "generators": gens, "invariant_factors": factors, "in_SL": g.in_sl()})
}

/// `3 (Σ(1 - 2 q_j) + max q_j)`.
pub fn bh_degree_bound(d: &BhDatum) -> Rat {
    let p = &d.potential;
    rat_int(3) * (p.socle_degree() + p.weights().max_weight())
}

fn bh_summary(d: &BhDatum) -> Result<Value, Failure> {
    let p = &d.potential;
    let cy = cy_check(p, &d.group);
    let lattice = lattice_data(p, &d.group);
    let aut = aut_group(p).stage("Aut(W)")?;
    let dual = dual_group(p, &d.group).stage("dual group")?;
    let j = exponential_grading_element(p);
    Ok(json!({
        "potential": p.describe(),
        "matrix": p.exponents(),
        "weights": rat_strings(p.q()),
        "weight_sum": cy.weight_sum.to_string(),
        "k": cy.k,
        "central_charge": cy.central_charge.to_string(),
        "calabi_yau": cy.is_calabi_yau_type(),
        "deg_in_M": cy.deg_in_m,
        "deg_dual_in_N": cy.deg_dual_in_n,
        "J_in_G": d.group.contains(&j),
        "det": p.det(),
        "milnor_number": p.milnor_number().to_string(),
        "aut": group_json(&aut),
        "group": group_json(&d.group),
        "dual_group": group_json(&dual),
        "index_N": lattice.index_n,
        "index_M": lattice.index_m,
        "nondegenerate": {"W": is_nondegenerate(p), "W_dual": is_nondegenerate(&d.dual_potential)},
        "notices": d.notices,
    }))
}

fn unified_summary(data: &crate::unified::ToricMirrorData) -> Value {
    json!({
        "rank": data.rank(),
        "Delta_size": data.delta().len(),
        "Delta_dual_size": data.delta_dual().len(),
        "k": data.index(),
        "central_charge": data.central_charge(),
        "rays_K_N_dual": data.cone_n_dual().generators().len(),
        "rays_K_M_dual": data.cone_m_dual().generators().len(),
    })
}

/// Weights, Calabi-Yau bookkeeping, groups, lattice indices, nondegeneracy.
pub fn run_analyze(spec: &InputSpec) -> Result<Value, Failure> {
    match resolve(spec)? {
        Datum::Bh(d) => bh_summary(&d),
        Datum::Unified(data) => Ok(unified_summary(&data)),
    }
}

fn complex_table(
    data: &crate::unified::ToricMirrorData,
    side: RingSide,
    margin: i64,
) -> crate::Result<HodgeTable> {
    let variant = match side {
        RingSide::A => ComplexVariant::A,
        RingSide::B => ComplexVariant::B,
    };
    bigraded_table(data, variant, margin)
}

/// One table from one engine (default: orbifold for BH data, complex for
/// unified data).
pub fn run_rings(
    spec: &InputSpec,
    side: RingSide,
    options: &RunOptions,
) -> Result<HodgeTable, Failure> {
    let options = options.merged(spec);
    match resolve(spec)? {
        Datum::Bh(d) => match options.engine.unwrap_or(Engine::Orbifold) {
            Engine::Orbifold => match side {
                RingSide::A => orbifold_a_table(&d.potential, &d.group).stage("orbifold A table"),
                RingSide::B => orbifold_b_table(&d.potential, &d.group).stage("orbifold B table"),
            },
            Engine::Complex => {
                let data = d.toric().stage("lattice data")?;
                complex_table(&data, side, options.margin()).stage("complex engine")
            }
            Engine::Both => Err(Failure {
                stage: "rings".into(),
                error: Error::Input(
                    "rings computes one table; choose --engine complex or orbifold".into(),
                ),
            }),
        },
        Datum::Unified(data) => match options.engine.unwrap_or(Engine::Complex) {
            Engine::Complex => complex_table(&data, side, options.margin()).stage("complex engine"),
            _ => Err(Failure {
                stage: "rings".into(),
                error: Error::Input("unified data support only the complex engine".into()),
            }),
        },
    }
}

/// The dual datum as an input document, with its summary.
pub fn run_dual(spec: &InputSpec) -> Result<Value, Failure> {
    match resolve(spec)? {
        Datum::Bh(d) => {
            let dual = d.dual().stage("dual group")?;
            Ok(json!({"input": dual.to_input_json(), "summary": bh_summary(&dual)?}))
        }
        Datum::Unified(data) => {
            let s = data.swap();
            let coeffs = |c: &[Rat]| rat_strings(c);
            Ok(json!({
                "input": {
                    "mode": "unified",
                    "rank": s.rank(),
                    "Delta": s.delta(),
                    "Delta_dual": s.delta_dual(),
                    "deg": s.deg(),
                    "deg_dual": s.deg_dual(),
                    "f": coeffs(s.f()),
                    "g": coeffs(s.g()),
                },
                "summary": unified_summary(&s),
            }))
        }
    }
}

fn anomalies_of(tables: &[(&'static str, HodgeTable)]) -> Vec<String> {
    let mut out = Vec::new();
    for (name, t) in tables {
        let outside = t.outside_square();
        if !outside.is_empty() {
            let keys: Vec<String> = outside.iter().map(|(a, b)| format!("({a}, {b})")).collect();
            out.push(format!(
                "table {name} has entries outside [0, ĉ]^2 at {}",
                keys.join(", ")
            ));
        }
        if !t.is_integral() {
            out.push(format!("table {name} has fractional bicharges"));
        }
    }
    out
}

fn check(left: &'static str, right: &'static str, relation: Relation) -> TableCheck {
    TableCheck {
        left,
        right,
        relation,
    }
}

fn table_verdict(
    name: &str,
    checks: Vec<TableCheck>,
    tables: &[(&'static str, HodgeTable)],
) -> Verdict {
    let get = |n: &str| {
        tables
            .iter()
            .find(|(k, _)| *k == n)
            .map(|(_, t)| t)
            .expect("table is present")
    };
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.relation.holds(get(c.left), get(c.right)))
        .map(|c| format!("{} vs {}", c.left, c.right))
        .collect();
    let compared: Vec<String> = checks
        .iter()
        .map(|c| format!("{} vs {}", c.left, c.right))
        .collect();
    let detail = if failed.is_empty() {
        format!("exact agreement: {}", compared.join("; "))
    } else {
        format!("mismatch: {}", failed.join("; "))
    };
    Verdict {
        name: name.to_string(),
        status: Status::from_bool(failed.is_empty()),
        checks,
        detail,
    }
}

fn witness_verdict(
    datum: &BhDatum,
    dual: &BhDatum,
    bound: Option<&Rat>,
) -> Result<Verdict, Failure> {
    let mut found = 0;
    let mut total = 0;
    let mut missing = Vec::new();
    for (label, d) in [("datum", datum), ("dual datum", dual)] {
        let problem = WitnessProblem::from_bh(&d.potential, &d.group).stage("key-lemma problem")?;
        let b = bound.cloned().unwrap_or_else(|| bh_degree_bound(d));
        let results: Vec<_> = (0..problem.ray_count())
            .into_par_iter()
            .map(|r| key_lemma_witness(&problem, r, &b))
            .collect::<crate::Result<_>>()
            .stage("key-lemma search")?;
        total += results.len();
        for (r, w) in results.iter().enumerate() {
            match w {
                Some(_) => found += 1,
                None => missing.push(format!("{label} ray {r} (bound {b})")),
            }
        }
    }
    let status = if missing.is_empty() {
        Status::Pass
    } else {
        Status::FailUnknown
    };
    let detail = if missing.is_empty() {
        format!("re-verified witnesses on all {total} rays")
    } else {
        format!(
            "{found}/{total} rays; none found for {}",
            missing.join(", ")
        )
    };
    Ok(Verdict {
        name: "(v) key-lemma witnesses on all rays".into(),
        status,
        checks: Vec::new(),
        detail,
    })
}

/// The duality report for a BH datum: tables from the requested engines and
/// verdicts (i)–(v).
pub fn run_verify(spec: &InputSpec, options: &RunOptions) -> Result<DualityReport, Failure> {
    let options = options.merged(spec);
    let Datum::Bh(datum) = resolve(spec)? else {
        return Err(Failure {
            stage: "verify".into(),
            error: Error::Input(
                "verify needs a bh-mode datum; use check-unified for unified data".into(),
            ),
        });
    };
    verify_datum(&datum, &options)
}

/// [`run_verify`] on an already validated datum.
pub fn verify_datum(datum: &BhDatum, options: &RunOptions) -> Result<DualityReport, Failure> {
    let engine = options.engine.unwrap_or(Engine::Both);
    let margin = options.margin();
    let mut timings = Vec::new();
    cy_check(&datum.potential, &datum.group)
        .require()
        .stage("datum")?;
    let dual = datum.dual().stage("dual group")?;
    let summary = json!({"datum": bh_summary(datum)?, "dual": bh_summary(&dual)?});

    let mut tables: Vec<(&'static str, HodgeTable)> = Vec::new();
    let use_complex = engine != Engine::Orbifold;
    let use_oracle = engine != Engine::Complex;
    if use_oracle {
        let t = Instant::now();
        let (b, b_dual) = rayon::join(
            || orbifold_b_table(&datum.potential, &datum.group),
            || orbifold_b_table(&dual.potential, &dual.group),
        );
        tables.push(("oracle_B", b.stage("orbifold B table")?));
        tables.push((
            "oracle_B_dual",
            b_dual.stage("orbifold B table of the dual")?,
        ));
        timings.push(("orbifold engine".to_string(), t.elapsed()));
    }
    if use_complex {
        let t = Instant::now();
        let data = datum.toric().stage("lattice data")?;
        let data_dual = dual.toric().stage("lattice data of the dual")?;
        let jobs = [
            (&data, RingSide::A),
            (&data, RingSide::B),
            (&data_dual, RingSide::A),
            (&data_dual, RingSide::B),
        ];
        let computed: Vec<HodgeTable> = jobs
            .par_iter()
            .map(|(d, s)| complex_table(d, *s, margin))
            .collect::<crate::Result<_>>()
            .stage("complex engine")?;
        let [a, b, a_dual, b_dual]: [HodgeTable; 4] = computed.try_into().expect("four tables");
        tables.splice(
            0..0,
            [("A", a), ("B", b), ("A_dual", a_dual), ("B_dual", b_dual)],
        );
        timings.push(("complex engine".to_string(), t.elapsed()));
    } else {
        let b = tables[0].1.clone();
        let b_dual = tables[1].1.clone();
        tables.splice(
            0..0,
            [
                ("A", b.reflect_minus()),
                ("B", b),
                ("A_dual", b_dual.reflect_minus()),
                ("B_dual", b_dual),
            ],
        );
    }

    let mut verdicts = Vec::new();
    if use_complex && use_oracle {
        verdicts.push(table_verdict(
            "(i) complex-engine B = orbifold B",
            vec![
                check("B", "oracle_B", Relation::Equal),
                check("B_dual", "oracle_B_dual", Relation::Equal),
            ],
            &tables,
        ));
    } else {
        verdicts.push(Verdict {
            name: "(i) complex-engine B = orbifold B".into(),
            status: Status::Skipped,
            checks: Vec::new(),
            detail: "needs both engines".into(),
        });
    }
    let (ii, iii) = if use_complex && use_oracle {
        (
            vec![
                check("A", "oracle_B_dual", Relation::Equal),
                check("A", "B_dual", Relation::Equal),
            ],
            vec![
                check("A_dual", "oracle_B", Relation::Equal),
                check("A_dual", "B", Relation::Equal),
            ],
        )
    } else if use_oracle {
        (
            vec![check("A", "oracle_B_dual", Relation::Equal)],
            vec![check("A_dual", "oracle_B", Relation::Equal)],
        )
    } else {
        (
            vec![check("A", "B_dual", Relation::Equal)],
            vec![check("A_dual", "B", Relation::Equal)],
        )
    };
    verdicts.push(table_verdict("(ii) A(W,G) = B(W^T,G^v)", ii, &tables));
    verdicts.push(table_verdict("(iii) B(W,G) = A(W^T,G^v)", iii, &tables));
    verdicts.push(table_verdict(
        "(iv) A = B reflected in Q-",
        vec![
            check("B", "A", Relation::ReflectMinus),
            check("B_dual", "A_dual", Relation::ReflectMinus),
        ],
        &tables,
    ));
    let t = Instant::now();
    verdicts.push(witness_verdict(
        datum,
        &dual,
        options.degree_bound.as_ref(),
    )?);
    timings.push(("key-lemma search".to_string(), t.elapsed()));

    let anomalies = anomalies_of(&tables);
    Ok(DualityReport {
        summary,
        tables,
        verdicts,
        anomalies,
        timings,
    })
}

/// Both conditions on unified data; BH documents are recast through their
/// lattice form.
pub fn run_check_unified(spec: &InputSpec, options: &RunOptions) -> Result<UnifiedReport, Failure> {
    let options = options.merged(spec);
    let data = match resolve(spec)? {
        Datum::Unified(data) => data,
        Datum::Bh(d) => d.toric().stage("lattice data")?,
    };
    let bound = options
        .degree_bound
        .clone()
        .unwrap_or_else(|| default_degree_bound(&data));
    unified_condition(&data, &bound).stage("unified condition")
}
