//! Acceptance suite: one PASS/FAIL line per criterion.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use matverify::augmented::{
    compute_eta1, error_report, run_basis_prediction, run_weight_prediction, sanitize_basis,
    WeightPrediction,
};
use matverify::certificate::{
    exchange_rewrite, verifies_circuits, verifies_cuts, ExchangeDirection,
};
use matverify::format::parse_instance;
use matverify::generate::{corpus_profile, generate, AreaProfile, CostProfile};
use matverify::online::{run_promise, QueryEnvironment};
use matverify::oracle::{
    all_mwbs, is_universal_certificate, min_cert_for_basis, min_cost_certificate,
    verify_by_sampling,
};
use matverify::rational::{int, Rational};
use matverify::selection::run_algorithm1;
use matverify::synthesis::{algorithm2, build_auxiliary_graph, certify_given_basis};
use matverify::{ElementId, ElementSet, Error, IndependenceOracle, UncertainInstance};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    root.join(format!("{name}.json")).display().to_string()
}

/// Runs the binary and returns its exit code and JSON records.
fn cli(args: &[&str]) -> (i32, Vec<Value>) {
    let out = Command::new(env!("CARGO_BIN_EXE_matverify"))
        .args(args)
        .output()
        .expect("binary runs");
    let records = String::from_utf8(out.stdout)
        .expect("utf-8 output")
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON record per line"))
        .collect();
    (out.status.code().unwrap_or(-1), records)
}

fn cli_text(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_matverify"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{args:?} failed");
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn record<'a>(records: &'a [Value], kind: &str) -> &'a Value {
    records
        .iter()
        .find(|r| r["record"] == kind)
        .unwrap_or_else(|| panic!("no {kind} record"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus(seed: u64) -> UncertainInstance {
    generate(seed, &corpus_profile(seed, 7)).expect("corpus profiles are feasible")
}

fn subsets(ground: &ElementSet) -> Vec<ElementSet> {
    let g: Vec<ElementId> = ground.iter().copied().collect();
    (0..1u32 << g.len())
        .map(|mask| {
            g.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

fn random_subset(rng: &mut ChaCha8Rng, ground: &ElementSet) -> ElementSet {
    ground
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(0.5))
        .collect()
}

fn fig1() -> Check {
    let start = Instant::now();
    for (name, cost) in [
        ("fig1_open", "3"),
        ("fig1_closed", "2"),
        ("fig1_mixed", "0"),
    ] {
        let path = fixture(name);
        let (code, oracle) = cli(&["oracle", &path]);
        ensure(code == 0, || format!("oracle {name} exited {code}"))?;
        let (code, cert) = cli(&["certify", &path]);
        ensure(code == 0, || format!("certify {name} exited {code}"))?;
        let (o, c) = (
            &record(&oracle, "oracle")["min_cost"],
            &record(&cert, "certificate")["cost"],
        );
        ensure(o == cost && c == cost, || {
            format!("{name}: oracle {o}, certify {c}, expected {cost}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "costs 3/2/0 from oracle and certify in {elapsed:.2?}"
    ))
}

fn fig2() -> Check {
    let start = Instant::now();
    let path = fixture("fig2");
    let (code, out) = cli(&["certify", &path, "--check"]);
    ensure(code == 0, || format!("certify exited {code}"))?;
    let cert = record(&out, "certificate");
    ensure(
        cert["basis"] == serde_json::json!(["e1", "e2", "e5"]),
        || format!("basis {}", cert["basis"]),
    )?;
    ensure(cert["cost"] == "2", || format!("cost {}", cert["cost"]))?;
    ensure(record(&out, "check")["oracle_cost"] == "2", || {
        "oracle disagrees on T".into()
    })?;
    let (code, out) = cli(&["certify", &path, "--basis", "e2,e3,e5", "--check"]);
    ensure(code == 0, || format!("certify --basis exited {code}"))?;
    ensure(record(&out, "certificate")["cost"] == "3", || {
        "T' cost is not 3".into()
    })?;
    ensure(record(&out, "check")["oracle_cost"] == "3", || {
        "oracle disagrees on T'".into()
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "T costs 2, T' costs 3, oracle agrees, {elapsed:.2?}"
    ))
}

fn master() -> Check {
    let start = Instant::now();
    let (mut backends, mut shapes) = ([0usize; 3], [0usize; 5]);
    for seed in 0..500u64 {
        let inst = corpus(seed);
        backends[seed as usize % 3] += 1;
        for &e in inst.ground() {
            let a = inst.area(e);
            let p = a.pieces();
            shapes[0] += p.iter().any(|p| p.lo_open && p.hi_open) as usize;
            shapes[1] += p.iter().any(|p| !p.lo_open && !p.hi_open && !p.is_point()) as usize;
            shapes[2] += (p.len() == 2 && p.iter().all(|p| p.is_point())) as usize;
            shapes[3] += (p.len() > 1) as usize;
            shapes[4] += a.is_trivial() as usize;
        }
        let oracle = min_cost_certificate(&inst).map_err(|e| format!("seed {seed}: {e}"))?;
        let cert = algorithm2(&inst).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(cert.query.total_cost == oracle.min_cost, || {
            format!(
                "seed {seed}: algorithm {} vs oracle {}",
                cert.query.total_cost, oracle.min_cost
            )
        })?;
    }
    ensure(shapes.iter().all(|&s| s > 0), || {
        format!("area shape missing: {shapes:?}")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "500/500 exact; backends graphic/uniform/partition {backends:?}; open/closed/two-point/union/trivial {shapes:?}; {elapsed:.2?}"
    ))
}

fn characterizations() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut triples, mut valid, mut skipped) = (0, 0, 0);
    let mut seed = 10_000u64;
    while triples < 1000 {
        seed += 1;
        let inst = generate(seed, &corpus_profile(seed, 6)).expect("feasible");
        let mwbs = all_mwbs(&inst).map_err(|e| e.to_string())?;
        for _ in 0..3 {
            let b = mwbs.choose(&mut rng).expect("an MWB exists").clone();
            let q = match rng.gen_range(0..3) {
                0 => random_subset(&mut rng, inst.ground()),
                _ => {
                    let mut q = certify_given_basis(&inst, &b)
                        .map_err(|e| e.to_string())?
                        .query
                        .elements;
                    if let Some(&e) = q.iter().collect::<Vec<_>>().choose(&mut rng) {
                        let e = *e;
                        if rng.gen_bool(0.7) {
                            q.remove(&e);
                        }
                    }
                    q
                }
            };
            let cuts = verifies_cuts(&inst, &q, &b).map_err(|e| e.to_string())?;
            let circuits = verifies_circuits(&inst, &q, &b)
                .map_err(|e| e.to_string())?
                .valid;
            let sampled = match verify_by_sampling(&inst, &q, &b, 1) {
                Ok(v) => v,
                Err(Error::Guard { .. }) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(e.to_string()),
            };
            ensure(cuts.valid == circuits && cuts.valid == sampled, || {
                format!(
                    "seed {seed}: cuts {} circuits {circuits} sampling {sampled}",
                    cuts.valid
                )
            })?;
            if let Some(w) = &cuts.witness {
                let consistent = inst.ground().iter().all(|&g| {
                    let x = w.assignment[&g];
                    if q.contains(&g) {
                        x == inst.weight(g)
                    } else {
                        inst.area(g).contains(x)
                    }
                });
                let total = |s: &ElementSet| s.iter().map(|g| w.assignment[g]).sum::<Rational>();
                ensure(consistent && total(&w.cheaper_basis) < total(&b), || {
                    format!("seed {seed}: unsound witness")
                })?;
            }
            valid += cuts.valid as usize;
            triples += 1;
        }
    }
    Ok(format!(
        "{triples} triples, {valid} valid / {} invalid, 0 disagreements, {skipped} over the sampling guard",
        triples - valid
    ))
}

fn cover_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut triples, mut covers, mut non_covers) = (0, 0, 0);
    let mut seed = 20_000u64;
    while triples < 500 {
        seed += 1;
        let inst = corpus(seed);
        let mwbs = all_mwbs(&inst).map_err(|e| e.to_string())?;
        let b = mwbs.choose(&mut rng).expect("an MWB exists");
        let g = build_auxiliary_graph(&inst, b).map_err(|e| e.to_string())?;
        let best = certify_given_basis(&inst, b)
            .map_err(|e| e.to_string())?
            .query;
        let q = if rng.gen_bool(0.5) {
            random_subset(&mut rng, inst.ground())
        } else {
            let mut q = best.elements.clone();
            q.extend(random_subset(&mut rng, inst.ground()).into_iter().take(1));
            if rng.gen_bool(0.5) {
                if let Some(&e) = best.elements.iter().next() {
                    q.remove(&e);
                }
            }
            q
        };
        let cover = g.is_cover(&q);
        let cert = verifies_cuts(&inst, &q, b)
            .map_err(|e| e.to_string())?
            .valid;
        ensure(cover == cert, || {
            format!("seed {seed}: cover {cover}, certificate {cert}")
        })?;
        ensure(
            g.cover_weight(&best.elements) == best.total_cost && g.is_cover(&best.elements),
            || format!("seed {seed}: synthesized certificate is not a cover of its cost"),
        )?;
        if cover {
            covers += 1;
        } else {
            non_covers += 1;
        }
        triples += 1;
    }
    Ok(format!(
        "{triples} triples: {covers} cover&certificate, {non_covers} neither"
    ))
}

fn online_bound() -> Check {
    let mut worst = Rational::from_integer(0);
    for seed in 0..500u64 {
        let inst = corpus(seed).with_unit_costs();
        let optimum = algorithm2(&inst)
            .map_err(|e| e.to_string())?
            .query
            .elements
            .len();
        let (b, _) = run_algorithm1(&inst).map_err(|e| e.to_string())?;
        let mut env = QueryEnvironment::new(&inst);
        let (q, _) = run_promise(&mut env, &b).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(q.elements.len() <= 2 * optimum, || {
            format!(
                "seed {seed}: {} queries, optimum {optimum}",
                q.elements.len()
            )
        })?;
        ensure(
            verifies_cuts(&inst, &q.elements, &b)
                .map_err(|e| e.to_string())?
                .valid,
            || format!("seed {seed}: final query set does not verify B"),
        )?;
        if optimum > 0 {
            worst = worst.max(Rational::new(q.elements.len() as i128, optimum as i128));
        }
    }
    let fig2 =
        parse_instance(&std::fs::read_to_string(fixture("fig2")).expect("fixture")).expect("valid");
    let (b, _) = run_algorithm1(&fig2).map_err(|e| e.to_string())?;
    let mut env = QueryEnvironment::new(&fig2);
    let (q, _) = run_promise(&mut env, &b).map_err(|e| e.to_string())?;
    let optimum = algorithm2(&fig2)
        .map_err(|e| e.to_string())?
        .query
        .elements
        .len();
    ensure(q.elements.len() == 4 && optimum == 2, || {
        format!("fig2: {} vs {optimum}", q.elements.len())
    })?;
    Ok(format!(
        "500 instances within 2x (worst ratio {worst}); fig2 attains 4 vs 2"
    ))
}

/// Circuit of `e` in `b + e`, by enumerating subsets.
fn brute_circuit(inst: &UncertainInstance, b: &ElementSet, e: ElementId) -> ElementSet {
    let m = inst.matroid();
    subsets(b)
        .into_iter()
        .map(|mut s| {
            s.insert(e);
            s
        })
        .filter(|s| !m.independent(s))
        .min_by_key(|s| s.len())
        .expect("b + e is dependent")
}

fn brute_rank(inst: &UncertainInstance, s: &ElementSet) -> usize {
    subsets(s)
        .into_iter()
        .filter(|t| inst.matroid().independent(t))
        .map(|t| t.len())
        .max()
        .unwrap_or(0)
}

/// Incorrect circuits and trusted part of `b_hat`, from the definitions.
fn brute_prediction_errors(inst: &UncertainInstance, b_hat: &ElementSet) -> (usize, ElementSet) {
    let w = |e: ElementId| inst.weight(e);
    let mut incorrect = 0;
    let mut trusted = ElementSet::new();
    for &e in inst.ground().difference(b_hat) {
        let c = brute_circuit(inst, b_hat, e);
        let correct = c.iter().filter(|&&f| f != e).all(|&f| {
            let mut rest = b_hat.clone();
            rest.remove(&f);
            let r = brute_rank(inst, &rest);
            w(e) >= w(f)
                && inst.ground().iter().all(|&g| {
                    let mut with = rest.clone();
                    with.insert(g);
                    brute_rank(inst, &with) == r || w(f) <= w(g)
                })
        });
        if correct {
            trusted.extend(c.iter().copied().filter(|f| b_hat.contains(f)));
        } else {
            incorrect += 1;
        }
    }
    (incorrect, trusted)
}

fn learning_augmented() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut fallbacks = 0;
    for seed in 0..500u64 {
        let inst = corpus(seed).with_unit_costs();
        let n = inst.len();
        let optimum = algorithm2(&inst)
            .map_err(|e| e.to_string())?
            .query
            .elements
            .len();
        let mut env = QueryEnvironment::new(&inst);
        let run = run_weight_prediction(&mut env, &WeightPrediction::perfect(&inst))
            .map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(run.query.elements.len() == optimum, || {
            format!(
                "seed {seed}: perfect predictions used {} queries, optimum {optimum}",
                run.query.elements.len()
            )
        })?;
        let noisy = inst
            .ground()
            .iter()
            .map(|&e| (e, Rational::new(rng.gen_range(-2..16), 2)))
            .collect();
        let pred = WeightPrediction::sanitize(&inst, &noisy).map_err(|e| e.to_string())?;
        let mut env = QueryEnvironment::new(&inst);
        let run =
            run_weight_prediction(&mut env, &pred).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(run.query.elements.len() <= n, || {
            format!("seed {seed}: more than n queries")
        })?;
        ensure(
            verifies_cuts(&inst, &run.query.elements, &run.basis)
                .map_err(|e| e.to_string())?
                .valid,
            || format!("seed {seed}: weight-prediction result does not verify its basis"),
        )?;
        fallbacks += run.fallback as usize;
    }
    let (mut pairs, mut consistent) = (0, 0);
    let mut eta_totals = (0, 0);
    let mut seed = 30_000u64;
    while pairs < 500 {
        seed += 1;
        let inst = corpus(seed).with_unit_costs();
        let from_engine = rng.gen_bool(0.2);
        let b_hat = if from_engine {
            run_algorithm1(&inst).map_err(|e| e.to_string())?.0
        } else {
            sanitize_basis(&inst, &random_subset(&mut rng, inst.ground()))
                .map_err(|e| e.to_string())?
        };
        let report = error_report(&inst, &b_hat).map_err(|e| format!("seed {seed}: {e}"))?;
        let optimum = algorithm2(&inst)
            .map_err(|e| e.to_string())?
            .query
            .elements
            .len();
        let mut env = QueryEnvironment::new(&inst);
        let run =
            run_basis_prediction(&mut env, &b_hat).map_err(|e| format!("seed {seed}: {e}"))?;
        let bound = report.bound(optimum, inst.len());
        ensure(run.query.elements.len() <= bound, || {
            format!(
                "seed {seed}: {} queries exceed bound {bound}",
                run.query.elements.len()
            )
        })?;
        ensure(
            verifies_cuts(&inst, &run.query.elements, &run.basis)
                .map_err(|e| e.to_string())?
                .valid,
            || format!("seed {seed}: basis-prediction result does not verify its basis"),
        )?;

        if from_engine {
            ensure(
                run.query.elements.len() <= 2 * optimum && report.eta1 == 0,
                || format!("seed {seed}: engine basis is not 2-consistent"),
            )?;
            consistent += 1;
        }
        let (eta2, trusted) = brute_prediction_errors(&inst, &b_hat);
        ensure(eta2 == report.eta2, || {
            format!("seed {seed}: eta2 {} vs brute force {eta2}", report.eta2)
        })?;
        let detail = compute_eta1(&inst, &b_hat).map_err(|e| e.to_string())?;
        ensure(detail.trusted == trusted, || {
            format!("seed {seed}: trusted part differs")
        })?;
        let cheapest = all_mwbs(&inst)
            .map_err(|e| e.to_string())?
            .iter()
            .filter(|b| trusted.is_subset(b))
            .map(|b| min_cert_for_basis(&inst, b).map(|r| r.min_cost))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?
            .into_iter()
            .min()
            .ok_or_else(|| format!("seed {seed}: no MWB contains the trusted part"))?;
        let eta1 = cheapest - int(optimum as i64);
        ensure(eta1 == int(report.eta1 as i64), || {
            format!("seed {seed}: eta1 {} vs brute force {eta1}", report.eta1)
        })?;
        eta_totals.0 += report.eta1;
        eta_totals.1 += report.eta2;
        pairs += 1;
    }
    Ok(format!(
        "1-consistent on 500; n-robust ({fallbacks} fallbacks); {pairs} basis predictions within bound ({consistent} 2-consistent runs), eta1/eta2 match brute force (sums {}/{})",
        eta_totals.0, eta_totals.1
    ))
}

fn gap() -> Check {
    let dir = std::env::temp_dir().join(format!("matverify-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut lines = Vec::new();
    for n in [3usize, 5] {
        for rho in [int(2), int(4), int(n as i64)] {
            let text = cli_text(&["gen", "--gap", &rho.to_string(), &n.to_string()]);
            let path = dir.join(format!("gap_{rho}_{n}.json"));
            std::fs::write(&path, &text).map_err(|e| e.to_string())?;
            let inst = parse_instance(&text).map_err(|e| e.to_string())?;
            let (code, out) = cli(&["oracle", &path.display().to_string()]);
            ensure(code == 0, || format!("oracle exited {code}"))?;
            let adaptive = matverify::rational::parse_rational(
                record(&out, "oracle")["min_cost"].as_str().expect("string"),
            )
            .map_err(|e| e.to_string())?;
            let e1 = inst
                .matroid()
                .id(&inst.matroid().names()[0])
                .map_err(|e| e.to_string())?;
            ensure(adaptive == inst.cost(e1), || {
                format!("rho {rho} n {n}: adaptive cost {adaptive}")
            })?;
            let everything = inst.ground().clone();
            ensure(
                is_universal_certificate(&inst, &everything, 1).map_err(|e| e.to_string())?,
                || "E is not universal".into(),
            )?;
            for q in subsets(&everything) {
                if q.len() < n {
                    ensure(
                        !is_universal_certificate(&inst, &q, 1).map_err(|e| e.to_string())?,
                        || {
                            format!(
                                "rho {rho} n {n}: proper subset {:?} is universal",
                                inst.matroid().names_of(&q)
                            )
                        },
                    )?;
                }
            }
            let ratio = inst.cost_of(&everything) / adaptive;
            ensure(ratio == rho, || format!("rho {rho} n {n}: ratio {ratio}"))?;
            lines.push(format!("(rho={rho},n={n})"));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("ratio = rho exactly for {}", lines.join(" ")))
}

fn two_point() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut multi = 0;
    for seed in 0..200u64 {
        let lo = rng.gen_range(0..4);
        let hi = lo + rng.gen_range(1..4);
        let profile = corpus_profile(seed, 7)
            .areas(AreaProfile::TwoPoint {
                lo: int(lo),
                hi: int(hi),
            })
            .costs(CostProfile::Unit)
            .trivial_fraction(0.0);
        let inst = generate(seed, &profile).map_err(|e| e.to_string())?;
        let mwbs = all_mwbs(&inst).map_err(|e| e.to_string())?;
        let costs = mwbs
            .iter()
            .map(|b| min_cert_for_basis(&inst, b).map(|r| r.min_cost))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        ensure(costs.iter().all(|c| *c == costs[0]), || {
            format!("seed {seed}: costs {costs:?}")
        })?;
        multi += (mwbs.len() > 1) as usize;
    }
    Ok(format!(
        "200 instances, {multi} with several MWBs, all equal verification costs"
    ))
}

fn exchanges() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut counts = [0usize; 3];
    let directions = [
        ExchangeDirection::Upper,
        ExchangeDirection::Lower,
        ExchangeDirection::Trivial,
    ];
    let mut seed = 40_000u64;
    while counts.iter().any(|&c| c < 100) && seed < 60_000 {
        seed += 1;
        let mut profile = corpus_profile(seed, 6).trivial_fraction(0.3);
        if seed.is_multiple_of(2) {
            profile = profile.areas(AreaProfile::TwoPoint {
                lo: int(1),
                hi: int(2),
            });
        }
        let inst = generate(seed, &profile).map_err(|e| e.to_string())?;
        for b in all_mwbs(&inst).map_err(|e| e.to_string())? {
            let mut q = certify_given_basis(&inst, &b)
                .map_err(|e| e.to_string())?
                .query
                .elements;
            q.extend(random_subset(&mut rng, inst.ground()));
            for &e in inst.ground() {
                for &e2 in inst.ground() {
                    for (k, &dir) in directions.iter().enumerate() {
                        match exchange_rewrite(&inst, &q, &b, e, e2, dir) {
                            Ok((q2, b2)) => {
                                inst.require_mwb(&b2)
                                    .map_err(|err| format!("seed {seed}: {err}"))?;
                                ensure(
                                    verifies_cuts(&inst, &q2, &b2)
                                        .map_err(|e| e.to_string())?
                                        .valid,
                                    || format!("seed {seed}: {dir:?} rewrite lost validity"),
                                )?;
                                counts[k] += 1;
                            }
                            Err(Error::Contract(_)) => {}
                            Err(err) => return Err(format!("seed {seed}: {err}")),
                        }
                    }
                }
            }
        }
    }
    ensure(counts.iter().all(|&c| c >= 100), || {
        format!("too few configurations: {counts:?}")
    })?;
    Ok(format!(
        "upper/lower/trivial configurations {counts:?}, all remain valid"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 triangle fixtures", fig1),
        ("2 two-tree fixture", fig2),
        ("3 optimality vs brute force", master),
        ("4 characterization equivalence", characterizations),
        ("5 cover <=> certificate", cover_equivalence),
        ("6 online promise bound", online_bound),
        ("7 learning-augmented bounds", learning_augmented),
        ("8 adaptivity gap", gap),
        ("9 two-point equal costs", two_point),
        ("10 exchange rewrites", exchanges),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{:.2?}]", start.elapsed());
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
