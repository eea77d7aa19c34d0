use std::collections::BTreeMap;

use matverify::augmented::{
    check_verifies, error_report, run_basis_prediction, run_weight_prediction, sanitize_basis,
    WeightPrediction,
};
use matverify::certificate::verifies_cuts;
use matverify::format::{
    emit_instance, parse_instance_file, parse_weight_predictions, InstanceFile,
};
use matverify::generate::{generate, AreaProfile, CostProfile, MatroidProfile, Profile};
use matverify::online::{run_promise, CompetitiveRow, QueryEnvironment};
use matverify::oracle::{gap_instance, min_cert_for_basis_limited, min_cost_certificate_limited};
use matverify::rational::{int, parse_rational};
use matverify::selection::run_algorithm1;
use matverify::synthesis::{algorithm2, build_auxiliary_graph, certify_given_basis};
use matverify::{ElementSet, UncertainInstance};
use serde_json::json;

use crate::output::{emit, names, rat, Failure, Outcome};
use crate::{AugmentArgs, CertifyArgs, GenArgs, OnlineArgs, OracleArgs, VerifyArgs};

fn load(path: &str) -> Result<InstanceFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?;
    parse_instance_file(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn element_set(inst: &UncertainInstance, ids: &[String]) -> Result<ElementSet, Failure> {
    let ids: Vec<&str> = ids
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .collect();
    Ok(inst.matroid().set_of(&ids)?)
}

fn unit_optimum(inst: &UncertainInstance) -> Result<usize, Failure> {
    Ok(algorithm2(&inst.with_unit_costs())?.query.elements.len())
}

pub fn certify(args: CertifyArgs) -> Outcome {
    let inst = load(&args.file)?.instance;
    let cert = match &args.basis {
        Some(ids) => certify_given_basis(&inst, &element_set(&inst, ids)?)?,
        None => {
            if args.trace {
                let (_, trace) = run_algorithm1(&inst)?;
                for (i, step) in trace.steps.iter().enumerate() {
                    emit(json!({
                        "record": "trace",
                        "step": i + 1,
                        "rule": step.rule.to_string(),
                        "contracted": names(&inst, &step.contracted),
                        "deleted": names(&inst, &step.deleted),
                        "justification": names(&inst, &step.justification),
                    }));
                }
            }
            algorithm2(&inst)?
        }
    };
    if args.dump_aux {
        let g = build_auxiliary_graph(&inst, &cert.basis)?;
        let edges: Vec<[&str; 2]> = g
            .edges
            .iter()
            .map(|&(u, v)| [inst.name(u), inst.name(v)])
            .collect();
        let weights: BTreeMap<&str, _> = g
            .vertex_weight
            .iter()
            .map(|(&e, w)| (inst.name(e), rat(w)))
            .collect();
        emit(json!({
            "record": "aux",
            "vertices": names(&inst, &g.vertices),
            "edges": edges,
            "loops": names(&inst, &g.loops()),
            "weights": weights,
        }));
    }
    emit(json!({
        "record": "certificate",
        "basis": names(&inst, &cert.basis),
        "query": names(&inst, &cert.query.elements),
        "cost": rat(&cert.query.total_cost),
    }));
    if args.check {
        if inst.len() > args.max_elements {
            emit(json!({
                "record": "check",
                "skipped": true,
                "reason": format!("{} elements exceed the limit {}", inst.len(), args.max_elements),
            }));
            return Ok(());
        }
        let oracle = match &args.basis {
            Some(_) => min_cert_for_basis_limited(&inst, &cert.basis, args.max_elements)?,
            None => min_cost_certificate_limited(&inst, args.max_elements)?,
        };
        let agrees = oracle.min_cost == cert.query.total_cost;
        emit(json!({
            "record": "check",
            "skipped": false,
            "oracle_cost": rat(&oracle.min_cost),
            "agrees": agrees,
        }));
        if !agrees {
            return Err(Failure::Internal(format!(
                "certificate cost {} differs from the oracle minimum {}",
                cert.query.total_cost, oracle.min_cost
            )));
        }
    }
    Ok(())
}

pub fn verify(args: VerifyArgs) -> Outcome {
    let inst = load(&args.file)?.instance;
    let b = element_set(&inst, &args.basis)?;
    let q = element_set(&inst, &args.query)?;
    let verdict = verifies_cuts(&inst, &q, &b)?;
    let witness = verdict.witness.map(|w| {
        let assignment: BTreeMap<&str, _> = w
            .assignment
            .iter()
            .map(|(&e, v)| (inst.name(e), rat(v)))
            .collect();
        json!({
            "pair": [inst.name(w.pair.0), inst.name(w.pair.1)],
            "assignment": assignment,
            "cheaper_basis": names(&inst, &w.cheaper_basis),
        })
    });
    emit(json!({
        "record": "verdict",
        "valid": verdict.valid,
        "basis": names(&inst, &b),
        "query": names(&inst, &q),
        "cost": rat(&inst.cost_of(&q)),
        "witness": witness,
    }));
    Ok(())
}

pub fn online(args: OnlineArgs) -> Outcome {
    let inst = load(&args.file)?.instance;
    let b = match &args.basis {
        Some(ids) => element_set(&inst, ids)?,
        None => run_algorithm1(&inst)?.0,
    };
    let mut env = QueryEnvironment::new(&inst);
    let (q, trace) = run_promise(&mut env, &b)?;
    for batch in &trace.batches {
        emit(json!({
            "record": "batch",
            "element": inst.name(batch.element),
            "queried": batch.queried.iter().map(|&e| inst.name(e)).collect::<Vec<_>>(),
        }));
    }
    check_verifies(&inst, &q.elements, &b)?;
    let row = CompetitiveRow::new(q.elements.len(), unit_optimum(&inst)?);
    emit(json!({
        "record": "online",
        "basis": names(&inst, &b),
        "query": names(&inst, &q.elements),
        "cost": rat(&q.total_cost),
        "queries": row.queries,
        "optimum": row.optimum,
        "ratio": rat(&row.ratio),
        "within_bound": row.within(int(2)),
    }));
    Ok(())
}

pub fn augment(args: AugmentArgs) -> Outcome {
    let file = load(&args.file)?;
    let inst = &file.instance;
    let embedded = file.predictions.unwrap_or_default();
    let n = inst.len();
    let optimum = unit_optimum(inst)?;
    if let Some(ids) = &args.predict_basis {
        return augment_basis(inst, element_set(inst, ids)?, optimum);
    }
    let raw = match &args.predict_weights {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?;
            parse_weight_predictions(inst, &text)?
        }
        None => match (embedded.weights, embedded.basis) {
            (Some(w), _) => w,
            (None, Some(b)) => return augment_basis(inst, b, optimum),
            (None, None) => {
                return Err(Failure::Input(
                    "no predictions: pass --predict-weights or --predict-basis".into(),
                ))
            }
        },
    };
    let pred = WeightPrediction::sanitize(inst, &raw)?;
    let mut env = QueryEnvironment::new(inst);
    let run = run_weight_prediction(&mut env, &pred)?;
    check_verifies(inst, &run.query.elements, &run.basis)?;
    let queries = run.query.elements.len();
    emit(json!({
        "record": "augment",
        "mode": "weights",
        "basis": names(inst, &run.basis),
        "query": names(inst, &run.query.elements),
        "cost": rat(&run.query.total_cost),
        "queries": queries,
        "optimum": optimum,
        "n": n,
        "fallback": run.fallback,
        "clamped": names(inst, &pred.clamped),
        "within_bound": queries <= n,
    }));
    if queries > n {
        return Err(Failure::Internal("more queries than elements".into()));
    }
    Ok(())
}

fn augment_basis(inst: &UncertainInstance, raw: ElementSet, optimum: usize) -> Outcome {
    let b_hat = sanitize_basis(inst, &raw)?;
    let report = error_report(inst, &b_hat)?;
    let mut env = QueryEnvironment::new(inst);
    let run = run_basis_prediction(&mut env, &b_hat)?;
    check_verifies(inst, &run.query.elements, &run.basis)?;
    let queries = run.query.elements.len();
    let bound = report.bound(optimum, inst.len());
    emit(json!({
        "record": "augment",
        "mode": "basis",
        "predicted_basis": names(inst, &b_hat),
        "sanitized": b_hat != raw,
        "basis": names(inst, &run.basis),
        "query": names(inst, &run.query.elements),
        "cost": rat(&run.query.total_cost),
        "queries": queries,
        "optimum": optimum,
        "n": inst.len(),
        "eta1": report.eta1,
        "eta2": report.eta2,
        "c_max": report.c_max,
        "bound": bound,
        "within_bound": queries <= bound,
    }));
    if queries > bound {
        return Err(Failure::Internal(format!(
            "{queries} queries exceed the prediction bound {bound}"
        )));
    }
    Ok(())
}

pub fn oracle(args: OracleArgs) -> Outcome {
    let inst = load(&args.file)?.instance;
    let result = min_cost_certificate_limited(&inst, args.max_elements)?;
    emit(json!({
        "record": "oracle",
        "min_cost": rat(&result.min_cost),
        "enumeration_size": result.enumeration_size,
        "certificates": result.optimal_certificates.len(),
    }));
    for (q, b) in &result.optimal_certificates {
        emit(json!({
            "record": "optimal_certificate",
            "query": names(&inst, &q.elements),
            "basis": names(&inst, b),
            "cost": rat(&q.total_cost),
        }));
    }
    Ok(())
}

pub fn gen(args: GenArgs) -> Outcome {
    let inst = match (&args.gap, &args.profile) {
        (Some(gap), _) => {
            let rho = parse_rational(&gap[0])?;
            let n: usize = gap[1]
                .parse()
                .map_err(|_| Failure::Input(format!("invalid element count {:?}", gap[1])))?;
            gap_instance(rho, n)?
        }
        (None, Some(profile)) => {
            let costs = match args.costs.as_str() {
                "unit" => CostProfile::Unit,
                "random" => CostProfile::Random,
                other => {
                    return Err(Failure::Input(format!(
                        "invalid cost profile {other:?}: expected unit or random"
                    )))
                }
            };
            let profile = Profile::new(MatroidProfile::parse(profile)?)
                .areas(AreaProfile::parse(&args.areas)?)
                .trivial_fraction(args.trivial_fraction)
                .costs(costs);
            generate(args.seed, &profile)?
        }
        (None, None) => return Err(Failure::Input("gen needs --profile or --gap".into())),
    };
    print!("{}", emit_instance(&inst));
    Ok(())
}
