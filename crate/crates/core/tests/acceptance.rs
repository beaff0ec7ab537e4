//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use implbase::classes::acceptant::{acceptance_degree, random_two_acceptant};
use implbase::classes::acyclic::random_acyclic_base;
use implbase::classes::affine::{affine_base, random_collinear_points, random_points};
use implbase::classes::laws::{class_edge_law_check, EdgeLaw};
use implbase::classes::poset::{comparability_components, double_shelling_base, random_poset, Poset};
use implbase::classes::seeded;
use implbase::format::{parse_poset, print_poset};
use implbase::optimize::enumerate_optimum_bases;
use implbase::oracle::{oracle_optimum_cg, oracle_quasi_closed_direct, oracle_sigma};
use implbase::random::{random_base, random_set};
use implbase::{
    all_hypergraphs, canonical_base, close, enumerate_lattice, equivalent, fixtures,
    is_quasi_closed, left_reduce, minimize, optimize, right_reduce, saturate, verify_optimum,
    ElementSet, Implication, ImplicationalBase,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sets(base: &ImplicationalBase, names: &[&str]) -> HashSet<ElementSet> {
    names
        .iter()
        .map(|s| base.universe().parse_set(s).unwrap())
        .collect()
}

fn rules(base: &ImplicationalBase, rules: &[(&str, &str)]) -> HashSet<Implication> {
    let u = base.universe();
    rules
        .iter()
        .map(|(p, c)| Implication::new(u.parse_set(p).unwrap(), u.parse_set(c).unwrap()))
        .collect()
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    if spent < limit {
        Ok(())
    } else {
        Err(format!("took {spent:?}, limit {limit:?}"))
    }
}

fn six_element_reproduction() -> Outcome {
    let start = Instant::now();
    let canon = fixtures::six_element_canonical();
    let expect = rules(
        &canon,
        &[
            ("a", "b"),
            ("b", "a"),
            ("f", "c d e"),
            ("c e", "d f"),
            ("d e", "c f"),
            ("a b e", "c d f"),
            ("a b d", "c e f"),
        ],
    );
    let mut reversed = canon.implications().to_vec();
    reversed.reverse();
    let mut padded = fixtures::six_element_optimum().implications().to_vec();
    padded.extend(rules(&canon, &[("a c e", "b d f"), ("f", "d"), ("a b c d e", "f")]));
    let u = canon.shared_universe();
    let forms = [
        canon.clone(),
        fixtures::six_element_optimum(),
        ImplicationalBase::new(u.clone(), reversed).unwrap(),
        ImplicationalBase::new(u.clone(), padded).unwrap(),
        optimize(&canon).0,
    ];
    for (i, form) in forms.iter().enumerate() {
        ensure!(equivalent(form, &canon).unwrap(), "form {i} is not equivalent");
        let got = canonical_base(form).map_err(|e| e.to_string())?;
        ensure!(got.implication_set() == expect, "form {i}: {got}");
        ensure!(got.len() == 7, "form {i}: {} implications", got.len());
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("{} input forms", forms.len()))
}

fn hypergraph_reproduction() -> Outcome {
    let check = |base: &ImplicationalBase, c: &str, edges: &[&str], disjoint: bool| -> Result<(), String> {
        let view = enumerate_lattice(base).map_err(|e| e.to_string())?;
        let h = implbase::build_hqc(base, &view, base.universe().parse_set(c).unwrap())
            .map_err(|e| e.to_string())?;
        let got: HashSet<ElementSet> = h.edges.iter().copied().collect();
        ensure!(got.len() == h.edges.len(), "duplicate edges at {c}");
        ensure!(got == sets(base, edges), "HQC({c}) = {:?}", h.edges);
        ensure!(h.has_disjoint_edges() == disjoint, "HQC({c}) disjointness verdict");
        Ok(())
    };
    let six = fixtures::six_element_canonical();
    check(&six, "c d e f", &["f", "d", "c", "e"], true)?;
    check(&six, "a b c d e f", &["e f", "c d f"], false)?;
    check(&fixtures::non_disjoint_geometry(), "a b c d e", &["d e", "c e"], false)?;
    let mixed = fixtures::mixed_geometry();
    check(&mixed, "a b e", &["a", "b"], true)?;
    check(&mixed, "a b c", &["b"], true)?;
    check(&mixed, "b c d", &["c"], true)?;
    check(&mixed, "a b c d", &["b c"], true)?;
    let view = enumerate_lattice(&mixed).unwrap();
    ensure!(view.essential_sets().len() == 4, "mixed geometry essential sets");
    Ok("7 hypergraphs".to_string())
}

fn poset_pipeline() -> Outcome {
    let start = Instant::now();
    let poset = parse_poset(&print_poset(&fixtures::ten_element_poset())).map_err(|e| e.to_string())?;
    let generated = double_shelling_base(&poset);
    let canon = canonical_base(&generated).map_err(|e| e.to_string())?;
    let listed = fixtures::ten_element_poset_canonical();
    ensure!(canon.len() == 10, "{} implications", canon.len());
    ensure!(canon.implication_set() == listed.implication_set(), "canonical base {canon}");

    let (best, cert) = optimize(&generated);
    let listed_optimum = fixtures::ten_element_poset_optimum();
    let (_, oracle_sizes) = oracle_optimum_cg(&generated).map_err(|e| e.to_string())?;
    ensure!(best.len() == 10, "optimized count {}", best.len());
    ensure!(
        best.sizes().total == listed_optimum.sizes().total && best.sizes().total == oracle_sizes.total,
        "sizes {} vs listed {} vs oracle {}",
        best.sizes(),
        listed_optimum.sizes(),
        oracle_sizes
    );
    ensure!(cert.is_optimum, "certificate not optimum");
    ensure!(equivalent(&best, &generated).unwrap(), "optimized base not equivalent");

    let u = poset.universe();
    let (x, y) = (u.index_of("x").unwrap(), u.index_of("y").unwrap());
    let xy = ElementSet::from_indices([x, y]);
    let t = best
        .iter()
        .find(|imp| imp.premise() == xy)
        .ok_or("no xy implication")?
        .conclusion();
    let components = comparability_components(&poset, x, y).map_err(|e| e.to_string())?;
    ensure!(components.len() == 3, "{} components", components.len());
    ensure!(
        t.len() == 3 && components.iter().all(|c| c.intersects(t)),
        "xy conclusion {} is not a transversal",
        u.format_set(t)
    );
    within(start, Duration::from_secs(1))?;
    Ok(format!("s = {}", best.sizes().total))
}

struct Instance {
    label: String,
    base: ImplicationalBase,
    law: Law,
}

enum Law {
    Components(Poset),
    Singletons,
    ExtremeComplement,
    SingleEdge,
}

fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for seed in 0..200u64 {
        let n = 4 + (seed % 7) as usize;
        let p = random_poset(seed, n);
        out.push(Instance {
            label: format!("poset seed {seed} n {n}"),
            base: double_shelling_base(&p),
            law: Law::Components(p),
        });
    }
    for seed in 0..200u64 {
        let n = 4 + (seed % 5) as usize;
        out.push(Instance {
            label: format!("acyclic seed {seed} n {n}"),
            base: random_acyclic_base(seed, n),
            law: Law::Singletons,
        });
    }
    for seed in 0..200u64 {
        let n = 4 + (seed % 5) as usize;
        let d = 1 + (seed % 3) as usize;
        let pts = random_points(seed, n, d, 9);
        out.push(Instance {
            label: format!("affine seed {seed} n {n} d {d}"),
            base: affine_base(&pts).expect("affine base"),
            law: Law::ExtremeComplement,
        });
    }
    out
}

fn acceptant_corpus() -> Vec<Instance> {
    let mut out = vec![
        Instance {
            label: "acceptant left".to_string(),
            base: fixtures::acceptant_left(),
            law: Law::SingleEdge,
        },
        Instance {
            label: "acceptant right".to_string(),
            base: fixtures::acceptant_right(),
            law: Law::SingleEdge,
        },
    ];
    for seed in 0..20u64 {
        if let Some(base) = random_two_acceptant(seed, 4 + (seed % 2) as usize, 500) {
            out.push(Instance {
                label: format!("sampled acceptant seed {seed}"),
                base,
                law: Law::SingleEdge,
            });
        }
        let n = 4 + (seed % 5) as usize;
        let pts = random_collinear_points(seed, n, 1 + (seed % 3) as usize);
        out.push(Instance {
            label: format!("collinear seed {seed} n {n}"),
            base: affine_base(&pts).expect("affine base"),
            law: Law::SingleEdge,
        });
    }
    out
}

fn disjoint_edge_sweep(corpus: &[Instance]) -> Outcome {
    let start = Instant::now();
    for inst in corpus {
        let base = &inst.base;
        let view = enumerate_lattice(base).map_err(|e| format!("{}: {e}", inst.label))?;
        ensure!(view.is_convex_geometry(), "{}: not a convex geometry", inst.label);
        let hqcs = all_hypergraphs(base, &view).map_err(|e| format!("{}: {e}", inst.label))?;
        ensure!(
            hqcs.iter().all(|h| h.has_disjoint_edges()),
            "{}: overlapping edges",
            inst.label
        );
        let (best, cert) = optimize(base);
        ensure!(equivalent(&best, base).unwrap(), "{}: equivalence lost", inst.label);
        let (_, oracle) = oracle_optimum_cg(base).map_err(|e| format!("{}: {e}", inst.label))?;
        ensure!(
            best.sizes().total == oracle.total,
            "{}: optimized {} vs oracle {}",
            inst.label,
            best.sizes(),
            oracle
        );
        ensure!(cert.is_optimum, "{}: certificate not optimum", inst.label);
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("{} instances", corpus.len()))
}

fn edge_laws(corpus: &[Instance]) -> Outcome {
    for inst in corpus {
        let view = enumerate_lattice(&inst.base).map_err(|e| e.to_string())?;
        let hqcs = all_hypergraphs(&inst.base, &view).map_err(|e| e.to_string())?;
        let law = match &inst.law {
            Law::Components(p) => EdgeLaw::Components(p),
            Law::Singletons => EdgeLaw::Singletons,
            Law::ExtremeComplement => EdgeLaw::ExtremeComplement,
            Law::SingleEdge => EdgeLaw::SingleEdge,
        };
        let report = class_edge_law_check(&view, &hqcs, law);
        if let Some(v) = report.violations.first() {
            return Err(format!(
                "{}: {} at {}",
                inst.label,
                v.reason,
                inst.base.universe().format_set(v.essential_set)
            ));
        }
    }
    Ok(format!("{} instances", corpus.len()))
}

fn oracle_agreement() -> Outcome {
    let compare = |base: &ImplicationalBase, y: ElementSet| -> Result<(), String> {
        let sigma = oracle_sigma(base, y).map_err(|e| e.to_string())?;
        ensure!(saturate(base, y) == sigma, "saturate differs at {}", base.universe().format_set(y));
        let direct = oracle_quasi_closed_direct(base, y).map_err(|e| e.to_string())?;
        ensure!(
            is_quasi_closed(base, y) == direct,
            "quasi-closed verdict differs at {}",
            base.universe().format_set(y)
        );
        Ok(())
    };
    let mut checked = 0;
    for (name, base) in fixtures::all_bases() {
        for y in base.universe().full().subsets() {
            compare(&base, y).map_err(|e| format!("{name}: {e}"))?;
            checked += 1;
        }
    }
    let mut rng = seeded(6);
    for seed in 0..1000u64 {
        let n = 1 + (seed % 7) as usize;
        let base = random_base(seed, n);
        compare(&base, random_set(&mut rng, n)).map_err(|e| format!("random seed {seed}: {e}"))?;
        checked += 1;
    }
    Ok(format!("{checked} pairs"))
}

fn closure_properties() -> Outcome {
    let mut rng = seeded(7);
    for seed in 0..500u64 {
        let n = 1 + (seed % 7) as usize;
        let base = random_base(seed, n);
        let y = random_set(&mut rng, n);
        let z = y | random_set(&mut rng, n);
        let cy = close(&base, y);
        ensure!(y.is_subset(cy), "seed {seed}: not extensive");
        ensure!(cy.is_subset(close(&base, z)), "seed {seed}: not monotone");
        ensure!(close(&base, cy) == cy, "seed {seed}: not idempotent");

        let m = minimize(&base);
        let l = left_reduce(&m);
        let r = right_reduce(&l);
        for (stage, b) in [("minimize", &m), ("left_reduce", &l), ("right_reduce", &r)] {
            ensure!(equivalent(&base, b).unwrap(), "seed {seed}: {stage} changed the system");
        }
        let canon = canonical_base(&base).map_err(|e| e.to_string())?;
        ensure!(
            m.len() == canon.len(),
            "seed {seed}: minimize has {} implications, canonical base {}",
            m.len(),
            canon.len()
        );
    }
    Ok("500 random bases".to_string())
}

/// Premise and conclusion names of one expected implication.
type Expected<'a> = (&'a str, &'a [&'a str]);

fn acceptant_fixtures() -> Outcome {
    let left = fixtures::acceptant_left();
    let right = fixtures::acceptant_right();
    let expected: [(&ImplicationalBase, &[Expected]); 2] = [
        (&left, &[("a b c", &["c"]), ("a c d", &["c"]), ("a b c d", &["a"])]),
        (&right, &[("a b c", &["b"]), ("b c d", &["c"]), ("a b c d", &["b c"])]),
    ];
    let mut counts = Vec::new();
    for (base, hqc) in expected {
        let view = enumerate_lattice(base).map_err(|e| e.to_string())?;
        ensure!(acceptance_degree(&view) == Ok(Some(2)), "degree {:?}", acceptance_degree(&view));
        let hqcs = all_hypergraphs(base, &view).map_err(|e| e.to_string())?;
        ensure!(hqcs.len() == hqc.len(), "{} essential sets", hqcs.len());
        for (c, edges) in hqc {
            let c = base.universe().parse_set(c).unwrap();
            let h = hqcs.iter().find(|h| h.essential_set == c).ok_or("missing essential set")?;
            let got: HashSet<ElementSet> = h.edges.iter().copied().collect();
            ensure!(got == sets(base, edges), "HQC edges {:?}", h.edges);
        }
        let optima = enumerate_optimum_bases(&view, &hqcs).map_err(|e| e.to_string())?;
        for candidate in &optima {
            let cert = verify_optimum(base, candidate).map_err(|e| e.to_string())?;
            ensure!(cert.is_optimum, "enumerated base {candidate} not certified");
        }
        counts.push(optima);
    }
    ensure!(counts[0].len() == 1, "left geometry has {} optimum bases", counts[0].len());
    ensure!(counts[1].len() == 2, "right geometry has {} optimum bases", counts[1].len());
    let ad = right.universe().parse_set("a d").unwrap();
    let conclusions: Vec<ElementSet> = counts[1]
        .iter()
        .map(|b| b.iter().find(|imp| imp.premise() == ad).map(|imp| imp.conclusion()))
        .collect::<Option<_>>()
        .ok_or("no ad implication")?;
    ensure!(conclusions[0] != conclusions[1], "right optima share the ad conclusion");
    let differing = counts[1][0]
        .implication_set()
        .symmetric_difference(&counts[1][1].implication_set())
        .count();
    ensure!(differing == 2, "right optima differ in {differing} implications");
    Ok("1 and 2 optimum bases".to_string())
}

type Criterion = Box<dyn Fn() -> Outcome>;

fn main() -> ExitCode {
    let base_corpus = corpus();
    let mut law_corpus = corpus();
    law_corpus.extend(acceptant_corpus());
    let mut sweep_corpus = base_corpus;
    sweep_corpus.extend(acceptant_corpus());

    let criteria: Vec<(&str, Criterion)> = vec![
        ("canonical base from equivalent inputs", Box::new(six_element_reproduction)),
        ("hypergraph fixtures", Box::new(hypergraph_reproduction)),
        ("poset pipeline", Box::new(poset_pipeline)),
        ("disjoint-edge sweep", Box::new(move || disjoint_edge_sweep(&sweep_corpus))),
        ("class edge laws", Box::new(move || edge_laws(&law_corpus))),
        ("oracle agreement", Box::new(oracle_agreement)),
        ("closure and reduction properties", Box::new(closure_properties)),
        ("acceptant geometries", Box::new(acceptant_fixtures)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
