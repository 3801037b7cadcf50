//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::rc::Rc;
use std::time::Instant;

use collapsibility::homology::{
    is_k_vertex_decomposable, leray_number, reduced_betti, Decomposition,
};
use collapsibility::hypergraph::{gamma_e, gamma_i, gamma_tilde, RelabeledInstance};
use collapsibility::invariants::{collapsibility_number, d_of_ordering, m0, MkSolver};
use collapsibility::io::Instance;
use collapsibility::{named, Budget, CollapseCertificate, Field, SimplicialComplex};
use collapsibility_harness::generate::{generate, star_family, GeneratorSpec, Kind};
use collapsibility_harness::verify::{self, random_ordering, trial_seed, Summary, VerifyOptions};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;

#[derive(Default)]
struct Emitted {
    collapses: Vec<(SimplicialComplex, CollapseCertificate)>,
    sheddings: Vec<(SimplicialComplex, Rc<Decomposition>, usize)>,
}

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn budget() -> Budget {
    Budget::default()
}

fn criterion_1(out: &mut Emitted) -> Verdict {
    let x = named::v6f10_6();
    let (c, cert) = collapsibility_number(&x, 0, &mut budget()).unwrap();
    let m1 = MkSolver::new(&mut budget()).m(&x, 1).unwrap();
    let m_0 = m0(&x, &mut budget()).unwrap();
    let kvd1 = is_k_vertex_decomposable(&x, 1, &mut budget()).unwrap();
    let kvd0 = is_k_vertex_decomposable(&x, 0, &mut budget()).unwrap();
    let detail = format!(
        "C = {c}, M1 = {m1}, M0 = {m_0}, 1-vd = {}, 0-vd = {}",
        kvd1.is_some(),
        kvd0.is_some()
    );
    let pass = c == 2 && m1 == 2 && m_0 >= 3 && kvd1.is_some() && kvd0.is_none();
    out.collapses.push((x.clone(), cert));
    if let Some(d) = kvd1 {
        out.sheddings.push((x, d, 1));
    }
    verdict(pass, detail)
}

fn criterion_2() -> Verdict {
    let mut rows = Vec::new();
    let mut pass = true;
    for n in 2..=5usize {
        let h = star_family(&vec![1; n]).unwrap();
        let gi = gamma_i(&h).unwrap().value;
        let ge = gamma_e(&h).unwrap().value;
        let gt = gamma_tilde(&h).unwrap().value;
        let mut ok = gi >= n && ge == 1 && gt <= n;
        if n >= 3 {
            let gap = gi as i64 - gt.div_ceil(2).max(ge) as i64;
            ok &= gap >= (n - n.div_ceil(2)) as i64;
        }
        pass &= ok;
        rows.push(format!("n={n}: gamma_i={gi} gamma_E={ge} gamma_tilde={gt}"));
    }
    verdict(pass, rows.join("; "))
}

fn criterion_3(out: &mut Emitted) -> Verdict {
    let spec = GeneratorSpec {
        vertices: 7,
        ..GeneratorSpec::new(Kind::RandomHypergraph)
    };
    let mut violations = Vec::new();
    for i in 0..200 {
        let Instance::Hypergraph(h) = generate(&spec.with_seed(trial_seed(SEED, i)))
            .unwrap()
            .instance
        else {
            unreachable!()
        };
        assert!(h.isolated_vertices().is_empty() && h.n() <= 7);
        let gi = gamma_i(&h).unwrap();
        let inst = RelabeledInstance::new(&h, h.vertex_set().difference(gi.target)).unwrap();
        let nc = inst.complex;
        let (c, cert) = collapsibility_number(&nc, 0, &mut budget()).unwrap();
        let d = d_of_ordering(&nc, &inst.ordering);
        let gi = gi.value;
        if !(c <= d && (d as i64) < h.n() as i64 - gi as i64) {
            violations.push(format!("trial {i}: C={c} d={d} n={} gamma_i={gi}", h.n()));
        }
        out.collapses.push((nc, cert));
    }
    verdict(
        violations.is_empty(),
        format!(
            "200 hypergraphs, {} violations {violations:?}",
            violations.len()
        ),
    )
}

fn criterion_4(out: &mut Emitted) -> Verdict {
    let spec = GeneratorSpec {
        vertices: 7,
        count: 7,
        ..GeneratorSpec::new(Kind::RandomComplex)
    };
    let mut violations = Vec::new();
    for i in 0..100 {
        let seed = trial_seed(SEED, i);
        let Instance::Complex(x) = generate(&spec.with_seed(seed)).unwrap().instance else {
            unreachable!()
        };
        let l = leray_number(&x, Field::Rational).unwrap();
        let (c, cert) = collapsibility_number(&x, 0, &mut budget()).unwrap();
        let mut b = budget();
        let mut solver = MkSolver::new(&mut b);
        let (m2, m1, m_0) = (
            solver.m(&x, 2).unwrap(),
            solver.m(&x, 1).unwrap(),
            solver.m(&x, 0).unwrap(),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..3 {
            let d = d_of_ordering(&x, &random_ordering(&x, &mut rng));
            if !(l <= c && c <= m2 && m2 <= m1 && m1 <= m_0 && m_0 <= d) {
                violations.push(format!(
                    "trial {i}: L={l} C={c} M2={m2} M1={m1} M0={m_0} d={d}"
                ));
            }
        }
        out.collapses.push((x, cert));
    }
    verdict(
        violations.is_empty(),
        format!(
            "100 complexes x 3 orderings, {} violations {violations:?}",
            violations.len()
        ),
    )
}

fn criterion_5(out: &mut Emitted) -> Verdict {
    let spec = GeneratorSpec {
        vertices: 7,
        ..GeneratorSpec::new(Kind::RandomKvd)
    };
    let (mut c_eq_m1, mut c_eq_mp1) = (0, 0);
    let mut first_gap = None;
    for i in 0..50 {
        let Instance::Complex(x) = generate(&spec.with_seed(trial_seed(SEED, i)))
            .unwrap()
            .instance
        else {
            unreachable!()
        };
        let (c, cert) = collapsibility_number(&x, 0, &mut budget()).unwrap();
        let mut b = budget();
        let mut solver = MkSolver::new(&mut b);
        let (m1, mp1) = (solver.m(&x, 1).unwrap(), solver.m_prime(&x, 1).unwrap());
        c_eq_m1 += usize::from(c == m1);
        c_eq_mp1 += usize::from(c == mp1);
        if c != mp1 && first_gap.is_none() {
            first_gap = Some(format!("{x}: C={c} M1={m1} M'1={mp1}"));
        }
        let d = is_k_vertex_decomposable(&x, 1, &mut budget())
            .unwrap()
            .expect("generator accepts 1-vd only");
        out.sheddings.push((x.clone(), d, 1));
        out.collapses.push((x, cert));
    }
    verdict(
        c_eq_m1 == 50 && c_eq_mp1 == 50,
        format!(
            "50 complexes: C = M1 on {c_eq_m1}, C = M'1 on {c_eq_mp1}{}",
            first_gap
                .map(|g| format!("; first gap {g}"))
                .unwrap_or_default()
        ),
    )
}

/// Runs the sweep with enough trials that at least `min` are not skipped.
fn sweep(name: &str, min: usize, max_vertices: u32) -> Summary {
    let t = verify::theorem(name).unwrap();
    let mut trials = min;
    loop {
        let s = verify::run(
            t,
            &VerifyOptions {
                trials,
                seed: SEED,
                max_vertices,
                ..VerifyOptions::default()
            },
        );
        let checked = s.pass + s.fail + s.errors + s.budget_exhausted;
        if checked >= min || trials >= 50 * min {
            return s;
        }
        trials = trials * min / checked.max(1) + 16;
    }
}

fn sweep_ok(s: &Summary, min: usize) -> bool {
    s.fail == 0 && s.errors == 0 && s.budget_exhausted == 0 && s.pass >= min
}

fn criterion_6() -> Verdict {
    let s = sweep("gamma-si-eq", 200, 8);
    verdict(sweep_ok(&s, 200), s.line())
}

fn criterion_7() -> Verdict {
    let mut pass = true;
    let mut lines = Vec::new();
    for name in [
        "link-deletion",
        "open-faces-simplex",
        "neighbor-inequality",
        "mes-equal",
        "tancer",
        "claim",
    ] {
        let s = sweep(name, 200, 7);
        pass &= sweep_ok(&s, 200);
        lines.push(s.line());
    }
    verdict(pass, lines.join("; "))
}

fn criterion_8() -> Verdict {
    let q = Field::Rational;
    let c3 = reduced_betti(&named::cycle(3), q);
    let s2 = reduced_betti(&named::sphere(4), q);
    let fixed =
        c3.minus_one == 0 && c3.ranks == [0, 1] && s2.minus_one == 0 && s2.ranks == [0, 0, 1];
    let euler = sweep("euler", 200, 7);
    let leray = sweep("leray-methods", 100, 10);
    let cm = sweep("cm-agree", 100, 7);
    let parts = [
        (
            fixed,
            format!("fixed Betti vectors {:?} {:?}", c3.ranks, s2.ranks),
        ),
        (sweep_ok(&euler, 200), euler.line()),
        (sweep_ok(&leray, 100), leray.line()),
        (sweep_ok(&cm, 100), cm.line()),
    ];
    let pass = parts.iter().all(|(ok, _)| *ok);
    let detail = parts
        .iter()
        .map(|(ok, line)| format!("[{}] {line}", if *ok { "ok" } else { "violated" }))
        .collect::<Vec<_>>()
        .join("; ");
    verdict(pass, detail)
}

/// All faces of `x` as bit masks, including the empty face.
fn face_set(x: &SimplicialComplex) -> BTreeSet<u64> {
    let mut faces = BTreeSet::from([0u64]);
    for f in x.facets() {
        let bits = f.bits();
        let mut sub = bits;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & bits;
        }
    }
    faces
}

fn replay_collapse(x: &SimplicialComplex, cert: &CollapseCertificate) -> Result<(), String> {
    let mut faces = face_set(x);
    for (i, step) in cert.steps.iter().enumerate() {
        let (g, s) = (step.free_face.bits(), step.maximal_face.bits());
        if step.free_face.len() > cert.claimed_d
            || g & !s != 0
            || !faces.contains(&s)
            || !faces.contains(&g)
        {
            return Err(format!("step {i} is malformed"));
        }
        if faces.iter().any(|&t| t & g == g && t & !s != 0) {
            return Err(format!("step {i}: free face lies in a second facet"));
        }
        faces.retain(|&t| !(t & g == g && t & !s == 0));
    }
    if faces.iter().any(|&t| t != 0) {
        return Err("collapse does not reach the empty complex".to_string());
    }
    Ok(())
}

fn facets_of(faces: &BTreeSet<u64>) -> Vec<u64> {
    faces
        .iter()
        .copied()
        .filter(|&f| !faces.iter().any(|&t| t != f && t & f == f))
        .collect()
}

fn check_shedding(faces: &BTreeSet<u64>, d: &Decomposition, k: usize) -> Result<(), String> {
    let facets = facets_of(faces);
    let size = facets[0].count_ones();
    if facets.iter().any(|f| f.count_ones() != size) {
        return Err("not pure".to_string());
    }
    match d {
        Decomposition::Simplex => (facets.len() == 1)
            .then_some(())
            .ok_or_else(|| "not a simplex".to_string()),
        Decomposition::Shed {
            face,
            deletion,
            link,
        } => {
            let s = face.bits();
            if s == 0 || s.count_ones() as usize > k + 1 || !faces.contains(&s) {
                return Err(format!("{face} is not a face of dimension at most {k}"));
            }
            let del: BTreeSet<u64> = faces.iter().copied().filter(|&t| t & s != s).collect();
            let del_facets = facets_of(&del);
            if del_facets.iter().any(|f| f.count_ones() != size) {
                return Err(format!("deleting {face} breaks purity or dimension"));
            }
            let lk: BTreeSet<u64> = faces
                .iter()
                .copied()
                .filter(|&t| t & s == 0 && faces.contains(&(t | s)))
                .collect();
            check_shedding(&del, deletion, k)?;
            check_shedding(&lk, link, k)
        }
    }
}

fn criterion_9(emitted: &Emitted) -> Verdict {
    let mut errors = Vec::new();
    for (x, cert) in &emitted.collapses {
        if let Err(e) = replay_collapse(x, cert) {
            errors.push(format!("{x}: {e}"));
        }
    }
    let mut steps = 0;
    for (x, d, k) in &emitted.sheddings {
        steps += d.sequence(*k).len();
        if let Err(e) = check_shedding(&face_set(x), d, *k) {
            errors.push(format!("{x}: {e}"));
        }
    }
    verdict(
        errors.is_empty(),
        format!(
            "{} collapse certificates, {} decompositions ({steps} shedding steps), {} invalid {errors:?}",
            emitted.collapses.len(),
            emitted.sheddings.len(),
            errors.len()
        ),
    )
}

fn main() -> ExitCode {
    let mut emitted = Emitted::default();
    let mut failed = 0;
    let mut report = |n: usize, f: &mut dyn FnMut() -> Verdict| {
        let start = Instant::now();
        let v = f();
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {n} ({:.1}s): {}",
            start.elapsed().as_secs_f64(),
            v.detail
        );
        failed += usize::from(!v.pass);
    };
    report(1, &mut || criterion_1(&mut emitted));
    report(2, &mut criterion_2);
    report(3, &mut || criterion_3(&mut emitted));
    report(4, &mut || criterion_4(&mut emitted));
    report(5, &mut || criterion_5(&mut emitted));
    report(6, &mut criterion_6);
    report(7, &mut criterion_7);
    report(8, &mut criterion_8);
    report(9, &mut || criterion_9(&emitted));
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
