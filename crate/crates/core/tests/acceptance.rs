//! Acceptance run: ten exact criteria, one line each.
//!
//! `cargo test --test acceptance` prints `PASS`/`FAIL` per criterion and
//! exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use malcev_super::algebra::*;
use malcev_super::cli::{main_with_args, EXIT_DISAGREEMENT};
use malcev_super::fixtures::*;
use malcev_super::graded::{GradedLinearMap, SuperSpace};
use malcev_super::io::{builtin_fixtures, parse, serialize, Document};
use malcev_super::modules::*;
use malcev_super::operators::*;
use malcev_super::search::*;
use malcev_super::yangbaxter::*;
use malcev_super::{q, Superalgebra};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn alternative_implies_malcev() -> Outcome {
    let ((left, right, malcev), dt) = timed(|| {
        let o = split_octonions();
        let left = check_left_alternative(&o).unwrap();
        let right = check_right_alternative(&o).unwrap();
        let malcev = check_malcev(&commutator_superalgebra(&o, MUL).unwrap()).unwrap();
        (left, right, malcev)
    });
    ensure(left.holds() && right.holds(), "split octonions fail alternativity")?;
    ensure(malcev.holds(), format!("commutator fails Malcev: {malcev}"))?;
    ensure(malcev.checked == 4096, format!("checked {} quadruples", malcev.checked))?;
    ensure(dt < Duration::from_secs(2), format!("took {dt:?}"))?;
    Ok(format!("4096 quadruples in {} ms", dt.as_millis()))
}

/// Seeded actions of `a` on `v`: known representations, their conjugates,
/// random actions and one-entry perturbations.
fn seeded_actions(a: &Superalgebra, known: Vec<Representation>, v: &SuperSpace) -> Vec<Representation> {
    let mut out = known.clone();
    let mut g = rng(11);
    for r in &known {
        for _ in 0..2 {
            let phi = random_even_automorphism(r.space(), &mut g, 2);
            out.push(conjugate(r, &phi));
        }
        out.push(perturb(r, &mut g, &q(1)));
    }
    for seed in 0..8 {
        out.push(random_action(a, v, seed, 2));
    }
    out
}

fn sl2_actions() -> Vec<Representation> {
    let a = sl2();
    let ad = Representation::adjoint(&a).unwrap();
    let known = vec![
        ad.clone(),
        dual_representation(&ad),
        sl2_standard(),
        Representation::zero(a.clone(), SuperSpace::new(2, 0)),
    ];
    seeded_actions(&a, known, &SuperSpace::new(2, 0))
}

fn malcev_1_1_actions() -> Vec<Representation> {
    let a = malcev_1_1();
    let ad = Representation::adjoint(&a).unwrap();
    let known = vec![
        ad.clone(),
        dual_representation(&ad),
        malcev_1_1_module(),
        dual_representation(&malcev_1_1_module()),
        Representation::zero(a.clone(), SuperSpace::new(1, 1)),
    ];
    seeded_actions(&a, known, &SuperSpace::new(1, 1))
}

fn semidirect_biconditional() -> Outcome {
    let mut lines = Vec::new();
    for (name, actions) in [("sl2", sl2_actions()), ("malcev-1-1", malcev_1_1_actions())] {
        let (mut pos, mut neg) = (0, 0);
        for (k, r) in actions.iter().enumerate() {
            let rep = check_malcev_representation(r).unwrap().holds();
            let semi = check_malcev(&semidirect_malcev(r).unwrap()).unwrap().holds();
            ensure(rep == semi, format!("{name} action {k}: representation {rep}, semidirect {semi}"))?;
            if rep {
                pos += 1
            } else {
                neg += 1
            }
        }
        ensure(actions.len() >= 20, format!("{name}: only {} actions", actions.len()))?;
        ensure(pos >= 5 && neg >= 5, format!("{name}: {pos} positives, {neg} negatives"))?;
        lines.push(format!("{name} {}/{} agree ({pos}+ {neg}-)", actions.len(), actions.len()));
    }
    Ok(lines.join(", "))
}

fn representation_fixtures() -> Vec<Representation> {
    let mut reps = sl2_actions();
    reps.extend(malcev_1_1_actions());
    for p in [pre_malcev_1_1(), pre_malcev_1_1_b()] {
        reps.push(Representation::left_multiplication(&p).unwrap());
    }
    reps.push(Representation::adjoint(&commutator_superalgebra(&gl11_associative(), MUL).unwrap()).unwrap());
    reps.push(Representation::adjoint(&sagle()).unwrap());
    reps
}

fn dual_closure() -> Outcome {
    let mut passing = 0;
    for (k, r) in representation_fixtures().iter().enumerate() {
        if !check_malcev_representation(r).unwrap().holds() {
            continue;
        }
        passing += 1;
        let d = dual_representation(r);
        ensure(check_malcev_representation(&d).unwrap().holds(), format!("dual of fixture {k} fails"))?;
        let dd = dual_representation(&d);
        let phi = double_dual_identification(r.space());
        let inv = phi.inverse().unwrap();
        for (i, m) in r.actions().iter().enumerate() {
            let expected = phi.compose(m).unwrap().compose(&inv).unwrap();
            ensure(
                dd.action(i).matrix() == expected.matrix(),
                format!("fixture {k}: double dual differs at basis element {i}"),
            )?;
        }
    }
    ensure(passing >= 10, format!("only {passing} passing fixtures"))?;
    Ok(format!("{passing} representations, duals pass, double duals match"))
}

fn o_operator_fixtures() -> Vec<(&'static str, Representation, i64)> {
    vec![
        ("sl2 standard", sl2_standard(), 1),
        ("malcev-1-1 module", malcev_1_1_module(), 2),
        ("L pre-malcev-1-1", Representation::left_multiplication(&pre_malcev_1_1()).unwrap(), 2),
        ("ad gl(1|1)", Representation::adjoint(&commutator_superalgebra(&gl11_associative(), MUL).unwrap()).unwrap(), 1),
    ]
}

fn o_operator_gives_pre_malcev() -> Outcome {
    let mut found = 0;
    for (name, rep, range) in o_operator_fixtures() {
        for t in grid_o_operators(&rep, range).unwrap() {
            found += 1;
            let p = pre_malcev_from_o_operator(&t, &rep).unwrap();
            ensure(check_pre_malcev(&p).unwrap().holds(), format!("{name}: product fails pre-Malcev"))?;
            let c = commutator_superalgebra(&p, MUL).unwrap();
            ensure(check_malcev(&c).unwrap().holds(), format!("{name}: commutator fails Malcev"))?;
        }
    }
    ensure(found >= 10, format!("only {found} O-operators found"))?;
    Ok(format!("{found} O-operators, all products pre-Malcev"))
}

fn pre_alternative_fixtures() -> Vec<Superalgebra> {
    let mut out = vec![zero_pre_alternative(2, 1)];
    let o = split_octonions();
    let b = regular_bimodule(&o);
    for r in sparse_o_operators_alternative(&b, 2, &[-1, 1]).unwrap().iter().step_by(97).take(6) {
        out.push(pre_alternative_from_o_operator(r, &b).unwrap());
    }
    let env = grassmann_envelope(&o);
    out.push(pre_alternative_from_rota_baxter(&env, &envelope_operator(&split_octonion_rb(), &env)));
    let g = gl11_associative();
    let gb = regular_bimodule(&g);
    for t in sparse_o_operators_alternative(&gb, 3, &[-1, 1]).unwrap() {
        out.push(pre_alternative_from_o_operator(&t, &gb).unwrap());
    }
    out
}

fn diagram_commutes() -> Outcome {
    let fixtures = pre_alternative_fixtures();
    for (k, pa) in fixtures.iter().enumerate() {
        ensure(check_pre_alternative(pa).unwrap().holds(), format!("fixture {k} is not pre-alternative"))?;
        let via_sum = commutator_superalgebra(&sum_pre_alternative(pa).unwrap(), MUL).unwrap();
        let via_pm = commutator_superalgebra(&pre_malcev_from_pre_alternative(pa).unwrap(), MUL).unwrap();
        ensure(via_sum.product().unwrap() == via_pm.product().unwrap(), format!("fixture {k}: tables differ"))?;
    }
    let odd = fixtures.iter().filter(|a| a.space().odd_dim() > 0).count();
    Ok(format!("{} pre-alternative fixtures ({odd} with odd part), identical tables", fixtures.len()))
}

/// Grid solutions of each base algebra, plus each solution perturbed by one skew basis tensor.
fn tensor_candidates() -> Vec<(String, MybeCandidate)> {
    let gl = commutator_superalgebra(&gl11_associative(), MUL).unwrap();
    let mut out = Vec::new();
    for (name, a) in [("sl2", sl2()), ("malcev-1-1", malcev_1_1()), ("gl(1|1)", gl), ("sagle", sagle())] {
        let basis = skew_tensor_basis(a.space());
        let sols = grid_mybe_solutions(&a, 1).unwrap();
        for (k, r) in sols.iter().take(12).enumerate() {
            out.push((format!("{name} solution {k}"), MybeCandidate::new(a.clone(), r.clone()).unwrap()));
            let bump = &basis[k % basis.len()];
            let pr = r.add(bump).unwrap();
            out.push((format!("{name} perturbed {k}"), MybeCandidate::new(a.clone(), pr).unwrap()));
        }
    }
    out
}

fn write_doc(dir: &std::path::Path, name: &str, doc: &Document) -> PathBuf {
    let path = dir.join(format!("{}.json", name.replace([' ', '(', ')', '|'], "_")));
    std::fs::write(&path, serialize(doc)).unwrap();
    path
}

fn tensor_biconditional() -> Outcome {
    let cands = tensor_candidates();
    let dir = tempfile::tempdir().unwrap();
    let (mut pos, mut neg) = (0, 0);
    for (name, c) in &cands {
        ensure(c.is_skew_supersymmetric(), format!("{name} is not skew"))?;
        let tensor = mybe_lhs(c).is_zero();
        let op = check_operator_form(c).unwrap().holds();
        ensure(tensor == op, format!("{name}: tensor {tensor}, operator {op}"))?;
        let path = write_doc(dir.path(), name, &Document::new(c.algebra().clone()).with_tensor(c.r().clone()));
        let out = main_with_args(["malcev", "mybe-check", path.to_str().unwrap()]);
        ensure(out.code != EXIT_DISAGREEMENT, format!("{name}: exit status 3"))?;
        ensure(out.code == if tensor { 0 } else { 1 }, format!("{name}: exit status {}", out.code))?;
        if tensor {
            pos += 1
        } else {
            neg += 1
        }
    }
    ensure(cands.len() >= 50, format!("only {} tensors", cands.len()))?;
    ensure(pos > 0 && neg > 0, format!("{pos} solutions, {neg} non-solutions"))?;
    Ok(format!("{} tensors on 4 algebras ({pos}+ {neg}-), forms agree, no exit 3", cands.len()))
}

fn maps_for(rep: &Representation) -> Vec<GradedLinearMap> {
    let mut maps: Vec<_> = grid_o_operators(rep, 1).unwrap().into_iter().take(10).collect();
    let mut seed = 0;
    while maps.len() < 24 {
        maps.push(random_even_map(rep.space(), rep.algebra().space(), seed, 2));
        seed += 1;
    }
    maps
}

fn double_construction() -> Outcome {
    let mut reps = o_operator_fixtures();
    reps.push(("L pre-malcev-1-1-b", Representation::left_multiplication(&pre_malcev_1_1_b()).unwrap(), 1));
    reps.push(("ad sl2", Representation::adjoint(&sl2()).unwrap(), 1));
    let (mut total, mut pos) = (0, 0);
    for (name, rep, _) in &reps {
        for (k, t) in maps_for(rep).iter().enumerate() {
            let oop = check_o_operator_malcev(t, rep).unwrap().holds();
            let c = r_from_o_operator(t, rep).unwrap();
            ensure(c.is_skew_supersymmetric(), format!("{name} map {k}: r is not skew"))?;
            let tensor = mybe_lhs(&c).is_zero();
            ensure(oop == tensor, format!("{name} map {k}: O-operator {oop}, MYBE {tensor}"))?;
            total += 1;
            pos += oop as usize;
        }
    }
    Ok(format!("{total} maps over {} representations ({pos} O-operators), verdicts agree", reps.len()))
}

fn pre_malcev_fixtures() -> Vec<(&'static str, Superalgebra)> {
    let o = split_octonions();
    let pa = pre_alternative_from_rota_baxter(&o, &split_octonion_rb());
    vec![
        ("pre-malcev-1-1", pre_malcev_1_1()),
        ("pre-malcev-1-1-b", pre_malcev_1_1_b()),
        ("sl2 O-operator", pre_malcev_from_o_operator(&sl2_standard_oop(), &sl2_standard()).unwrap()),
        ("split octonions", pre_malcev_from_pre_alternative(&pa).unwrap()),
    ]
}

fn canonical_solution() -> Outcome {
    let (res, dt) = timed(|| -> Result<usize, String> {
        let mut largest = 0;
        for (name, p) in pre_malcev_fixtures() {
            ensure(check_pre_malcev(&p).unwrap().holds(), format!("{name} is not pre-Malcev"))?;
            let c = canonical_r(&p).map_err(|e| format!("{name}: {e}"))?;
            largest = largest.max(c.algebra().dim());
            ensure(mybe_lhs(&c).is_zero(), format!("{name}: tensor form fails"))?;
            ensure(check_operator_form(&c).unwrap().holds(), format!("{name}: operator form fails"))?;
        }
        Ok(largest)
    });
    let largest = res?;
    ensure(dt < Duration::from_secs(5), format!("took {dt:?}"))?;
    Ok(format!("4 pre-Malcev fixtures, doubles up to dimension {largest}, {} ms", dt.as_millis()))
}

fn invertible_candidates() -> Vec<(String, MybeCandidate)> {
    let mut out = Vec::new();
    for (name, p) in [("pre-malcev-1-1", pre_malcev_1_1()), ("pre-malcev-1-1-b", pre_malcev_1_1_b())] {
        out.push((format!("canonical {name}"), canonical_r(&p).unwrap()));
        let l = Representation::left_multiplication(&p).unwrap();
        for seed in 0..30 {
            let t = random_even_map(l.space(), l.algebra().space(), seed, 2);
            out.push((format!("{name} T{seed}"), r_from_o_operator(&t, &l).unwrap()));
        }
    }
    let gl = commutator_superalgebra(&gl11_associative(), MUL).unwrap();
    for (name, a) in [("gl(1|1)", gl), ("sagle", sagle())] {
        for r in grid_mybe_solutions(&a, 1).unwrap().into_iter().take(10) {
            out.push((format!("{name} solution"), MybeCandidate::new(a.clone(), r).unwrap()));
        }
        for seed in 0..20 {
            out.push((format!("{name} random {seed}"), MybeCandidate::new(a.clone(), random_skew_tensor(a.space(), seed, 2)).unwrap()));
        }
    }
    out.retain(|(_, c)| r_as_map(c).is_invertible());
    out
}

fn symplectic_biconditional() -> Outcome {
    let cands = invertible_candidates();
    let (mut pos, mut neg) = (0, 0);
    for (name, c) in &cands {
        let w = symplectic_from_r(c).map_err(|e| format!("{name}: {e}"))?;
        let symp = check_symplectic(&w, c.algebra()).unwrap().holds();
        let tensor = mybe_lhs(c).is_zero();
        ensure(symp == tensor, format!("{name}: symplectic {symp}, MYBE {tensor}"))?;
        if !symp {
            neg += 1;
            continue;
        }
        pos += 1;
        let p = pre_malcev_from_symplectic(&w, c.algebra()).unwrap();
        ensure(check_pre_malcev(&p).unwrap().holds(), format!("{name}: induced product fails pre-Malcev"))?;
        let bracket = commutator_superalgebra(&p, MUL).unwrap();
        ensure(
            bracket.product().unwrap() == c.algebra().product().unwrap(),
            format!("{name}: commutator differs from the base bracket"),
        )?;
    }
    ensure(pos >= 5 && neg >= 5, format!("{pos} solutions, {neg} non-solutions"))?;
    Ok(format!("{} invertible tensors ({pos}+ {neg}-), verdicts agree, round trips compatible", cands.len()))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// `(golden file, arguments)` for the frozen CLI reports.
pub fn golden_commands() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("check-sl2.txt", vec!["check", "fixture-sl2", "--identity", "malcev", "--identity", "representation"]),
        ("check-broken.json", vec!["--json", "check", "fixture-broken", "--identity", "pre-malcev"]),
        ("check-octonions.txt", vec!["check", "fixture-split-octonions", "--identity", "alternative", "--identity", "malcev"]),
        ("oop-sl2.json", vec!["--json", "oop-check", "fixture-sl2-oop"]),
        ("rb-octonions.txt", vec!["rb-check", "fixture-split-octonions-rb"]),
        ("mybe-canonical.json", vec!["--json", "mybe-check", "fixture-canonical-1-1"]),
        ("canonical-b.txt", vec!["canonical-r", "fixture-pre-malcev-1-1-b"]),
        ("report-gl11.txt", vec!["report", "fixture-gl11"]),
        ("construct-sl2.txt", vec!["construct", "fixture-sl2-oop", "--via", "oop"]),
    ]
}

fn serialization() -> Outcome {
    let fixtures = builtin_fixtures();
    for (name, doc) in &fixtures {
        let text = serialize(doc);
        let back = parse(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure(&back == doc, format!("{name}: parsed document differs"))?;
        ensure(serialize(&back) == text, format!("{name}: second serialization differs"))?;
    }
    let bless = std::env::var_os("MALCEV_BLESS").is_some();
    let commands = golden_commands();
    for (file, args) in &commands {
        let mut outputs = Vec::new();
        for threads in ["1", "4", "1", "4"] {
            let mut argv = vec!["malcev", "--threads", threads];
            argv.extend(args.iter().copied());
            let out = main_with_args(argv);
            ensure(out.stderr.is_empty(), format!("{file}: {}", out.stderr))?;
            outputs.push(out.stdout);
        }
        ensure(outputs.iter().all(|o| o == &outputs[0]), format!("{file}: output varies across runs or threads"))?;
        let path = golden_dir().join(file);
        if bless {
            std::fs::write(&path, &outputs[0]).unwrap();
        }
        let frozen = std::fs::read_to_string(&path).map_err(|e| format!("{file}: {e}"))?;
        ensure(frozen == outputs[0], format!("{file}: differs from the frozen report"))?;
    }
    Ok(format!("{} fixtures round-trip, {} golden reports stable over 1 and 4 threads", fixtures.len(), commands.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("alternative implies Malcev-admissible", alternative_implies_malcev),
        ("semidirect product biconditional", semidirect_biconditional),
        ("dual representation closure", dual_closure),
        ("O-operators give pre-Malcev products", o_operator_gives_pre_malcev),
        ("pre-alternative diagram commutes", diagram_commutes),
        ("MYBE tensor form iff operator form", tensor_biconditional),
        ("O-operator iff T - σ(T) solves MYBE", double_construction),
        ("canonical solution", canonical_solution),
        ("symplectic form iff MYBE", symplectic_biconditional),
        ("serialization and golden reports", serialization),
    ];
    let mut failed = 0;
    for (k, (title, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("[{:>2}] PASS {title}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("[{:>2}] FAIL {title}: {why}", k + 1)
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
