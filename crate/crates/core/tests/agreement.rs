//! Algorithms against the exhaustive oracles on a small seeded corpus.

use matverify::augmented::{run_basis_prediction, run_weight_prediction, WeightPrediction};
use matverify::certificate::{verifies_circuits, verifies_cuts};
use matverify::generate::{corpus_profile, generate};
use matverify::online::{run_promise, QueryEnvironment};
use matverify::oracle::{all_mwbs, min_cert_for_basis, min_cost_certificate, verify_by_sampling};
use matverify::selection::run_algorithm1;
use matverify::synthesis::{algorithm2, certify_given_basis};
use matverify::{ElementSet, IndependenceOracle, UncertainInstance};

fn corpus(count: u64, max_elements: usize) -> impl Iterator<Item = (u64, UncertainInstance)> {
    (0..count).map(move |i| (i, generate(i, &corpus_profile(i, max_elements)).unwrap()))
}

fn subsets(inst: &UncertainInstance) -> Vec<ElementSet> {
    let ground: Vec<_> = inst.ground().iter().copied().collect();
    (0..1u32 << ground.len())
        .map(|mask| {
            ground
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

#[test]
fn algorithm2_matches_oracle() {
    for (seed, inst) in corpus(150, 6) {
        let oracle = min_cost_certificate(&inst).unwrap();
        let cert = algorithm2(&inst).unwrap();
        assert_eq!(cert.query.total_cost, oracle.min_cost, "seed {seed}");
        let (k, _) = run_algorithm1(&inst).unwrap();
        assert_eq!(k, cert.basis, "seed {seed}");
    }
}

#[test]
fn per_basis_costs_match_oracle() {
    for (seed, inst) in corpus(80, 5) {
        for b in all_mwbs(&inst).unwrap() {
            let oracle = min_cert_for_basis(&inst, &b).unwrap();
            let cert = certify_given_basis(&inst, &b).unwrap();
            assert_eq!(cert.query.total_cost, oracle.min_cost, "seed {seed}");
        }
    }
}

#[test]
fn characterizations_agree() {
    for (seed, inst) in corpus(40, 5) {
        let b = inst.greedy_mwb();
        for q in subsets(&inst) {
            let cuts = verifies_cuts(&inst, &q, &b).unwrap().valid;
            let circuits = verifies_circuits(&inst, &q, &b).unwrap().valid;
            let sampled = verify_by_sampling(&inst, &q, &b, 1).unwrap();
            assert_eq!(cuts, circuits, "seed {seed}");
            assert_eq!(cuts, sampled, "seed {seed}");
        }
    }
}

#[test]
fn adaptive_runs_stay_within_bounds() {
    for (seed, inst) in corpus(150, 7) {
        let unit = inst.with_unit_costs();
        let optimum = algorithm2(&unit).unwrap().query.elements.len();
        let (b, _) = run_algorithm1(&unit).unwrap();
        let mut env = QueryEnvironment::new(&unit);
        let (q, _) = run_promise(&mut env, &b).unwrap();
        assert!(q.elements.len() <= 2 * optimum, "seed {seed}");
        assert!(
            verifies_cuts(&unit, &q.elements, &b).unwrap().valid,
            "seed {seed}"
        );

        let mut env = QueryEnvironment::new(&unit);
        let run = run_weight_prediction(&mut env, &WeightPrediction::perfect(&unit)).unwrap();
        assert_eq!(run.query.elements.len(), optimum, "seed {seed}");

        let mut env = QueryEnvironment::new(&unit);
        let b_hat = unit.matroid().greedy_mwb(|e| -unit.weight(e));
        let run = run_basis_prediction(&mut env, &b_hat).unwrap();
        assert!(
            verifies_cuts(&unit, &run.query.elements, &run.basis)
                .unwrap()
                .valid,
            "seed {seed}"
        );
    }
}
