//! End-to-end acceptance: one pass/fail line per criterion.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

use qglue_core::gluing::induce;
use qglue_core::modules::{is_isomorphic, parse_qrep, simple};
use qglue_core::presentation::{glue, glued_ideal_check, Side};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.qalg"))
}

fn qglue(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qglue"))
        .args(args)
        .output()
        .expect("qglue runs");
    (out, start.elapsed())
}

fn json(out: &Output) -> Result<Value, String> {
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn dims(v: &Value) -> Vec<usize> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect()
}

fn report(dir: &Path, name: &str, extra: &[&str]) -> Result<Value, String> {
    let f = fixture(name);
    let mut args = vec!["report", path(&f), "-o", path(dir)];
    args.extend_from_slice(extra);
    json(&qglue(&args).0)
}

fn verdicts(r: &Value) -> Vec<String> {
    r["verdicts"]
        .as_object()
        .unwrap()
        .values()
        .map(|v| v.as_str().unwrap().to_string())
        .collect()
}

fn all_pass(r: &Value) -> Result<(), String> {
    let v = verdicts(r);
    ensure(v.len() == 6 && v.iter().all(|x| x == "pass"), || {
        format!("verdicts {}", r["verdicts"])
    })
}

fn dot_counts(file: &Path) -> (usize, usize) {
    let s = std::fs::read_to_string(file).unwrap();
    let edges = s.lines().filter(|l| l.contains("->")).count();
    let nodes = s.lines().filter(|l| l.contains("[label=")).count();
    (nodes, edges)
}

fn basis_dim(name: &str) -> Result<usize, String> {
    let f = fixture(name);
    let r = json(&qglue(&["oracle", "--mode", "basis", path(&f)]).0)?;
    Ok(r["cases"][0]["fast"].as_u64().unwrap() as usize)
}

fn criterion_1(dir: &Path) -> Result<(), String> {
    let f = fixture("ex3_15");
    let (out, t) = qglue(&["gproj", path(&f), "-o", path(dir)]);
    let summary = json(&out)?;
    let mods = summary["modules"].as_array().unwrap();
    ensure(mods.len() == 6, || format!("{} Gproj files", mods.len()))?;
    let mut nonproj: Vec<(Vec<usize>, String)> = mods
        .iter()
        .filter(|m| !m["projective"].as_bool().unwrap())
        .map(|m| (dims(&m["dims"]), m["file"].as_str().unwrap().to_string()))
        .collect();
    nonproj.sort();
    let found: Vec<_> = nonproj.iter().map(|(d, _)| d.clone()).collect();
    ensure(found == vec![vec![0, 1, 1, 0], vec![1, 0, 0, 0]], || {
        format!("nonprojective {found:?}")
    })?;

    // both are i_λ of the simples of the self-injective corner
    let lam = common::alg(&std::fs::read_to_string(&f).unwrap());
    let (a, b) = (
        common::alg(&std::fs::read_to_string(fixture("ex3_15_A")).unwrap()),
        common::alg(&std::fs::read_to_string(fixture("ex3_15_B")).unwrap()),
    );
    let spec = glue(
        &a,
        a.quiver().vertex_index("2").unwrap(),
        &b,
        b.quiver().vertex_index("2").unwrap(),
    )
    .map_err(|e| e.to_string())?;
    let iso = glued_ideal_check(&spec, &lam).ok_or("ex3_15 is not the gluing of its components")?;
    let spec = spec.transport(&lam, &iso);
    for (_, file) in &nonproj {
        let m = parse_qrep(&lam, &std::fs::read_to_string(dir.join(file)).unwrap()).map_err(|e| e.to_string())?;
        let hit =
            (0..spec.left.num_vertices()).any(|i| is_isomorphic(&induce(&spec, Side::A, &simple(&spec.left, i)), &m));
        ensure(hit, || format!("{file} is not the image of a simple"))?;
    }
    ensure(t < Duration::from_secs(10), || format!("runtime {t:?}"))
}

fn criterion_2(dir: &Path) -> Result<(), String> {
    let start = Instant::now();
    let r = report(dir, "ex4_10", &[])?;
    let t = start.elapsed();
    ensure(dot_counts(&dir.join("ex4_10.gproj_ar.dot")) == (7, 8), || {
        "Gproj AR quiver is not 7/8".into()
    })?;
    let aus = &r["algebra"]["aus"];
    let (q, e) = (aus["quotient_dim"].as_u64().unwrap(), aus["end_dim"].as_u64().unwrap());
    ensure(q == e, || format!("quotient {q} vs End {e}"))?;
    let stated = basis_dim("ex4_10_aus")? as u64;
    ensure(stated == q, || format!("stated ideal gives {stated}, emitted {q}"))?;
    ensure(
        r["verdicts"]["aus_quiver"] == "pass" && r["verdicts"]["aus_relations"] == "pass",
        || format!("{}", r["verdicts"]),
    )?;
    ensure(t < Duration::from_secs(30), || format!("runtime {t:?}"))
}

fn criterion_3(dir: &Path) -> Result<(), String> {
    let r = report(dir, "ex3_15", &[])?;
    let aus = &r["algebra"]["aus"];
    let (v, a) = (aus["vertices"].as_u64().unwrap(), aus["arrows"].as_u64().unwrap());
    ensure((v, a) == (6, 7), || format!("Aus quiver {v}/{a}"))?;
    let q = aus["quotient_dim"].as_u64().unwrap();
    let stated = basis_dim("ex3_15_aus")? as u64;
    ensure(q == stated, || format!("emitted {q}, stated ideal {stated}"))
}

fn criterion_4(dir: &Path) -> Result<(), String> {
    let r = report(dir, "ex3_13", &["--bound", "20"])?;
    let g = &r["algebra"]["gorenstein"];
    ensure(g["gorenstein"] == true && g["gd"] == 1, || format!("ex3_13: {g}"))?;
    let r = report(dir, "ex3_13_prime", &["--bound", "20"])?;
    let g = &r["algebra"]["gorenstein"];
    ensure(g["gorenstein"] == false, || format!("ex3_13_prime: {g}"))?;
    for name in ["ex3_13", "ex3_15", "ex4_10", "cluster_tube_n3"] {
        let r = report(dir, name, &["--bound", "20"])?;
        ensure(r["verdicts"]["gorenstein_transfer"] == "pass", || {
            format!("{name}: {}", r["verdicts"]["gorenstein_transfer"])
        })?;
    }
    Ok(())
}

fn criterion_5(dir: &Path) -> Result<(), String> {
    let f = fixture("cluster_tube_n3");
    let s = json(&qglue(&["gproj", path(&f), "-o", path(dir)]).0)?;
    let n = s["modules"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|m| m["projective"] == false)
        .count();
    ensure(n == 4, || format!("{n} nonprojective"))?;
    all_pass(&report(dir, "cluster_tube_n3", &[])?)
}

fn criterion_6() -> Result<(), String> {
    let suites: [(&str, fn(u64) -> Result<(), String>); 7] = [
        ("exactness", common::check_exactness),
        ("adjunctions", common::check_adjunctions),
        ("canonical sequence", common::check_canonical_ses),
        ("factoring", common::check_factoring),
        ("composite injectivity", common::check_composite_injectivity),
        ("ext agreement", common::check_ext_agreement),
        ("decompose seeds", common::check_decompose_seeds),
    ];
    for (name, check) in suites {
        for seed in 0..200 {
            check(seed).map_err(|w| format!("{name} seed {seed}: {w}"))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Result<(), String> {
    let mut all: Vec<PathBuf> = std::fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "qalg"))
        .collect();
    all.sort();
    let files: Vec<&str> = all.iter().map(|p| path(p)).collect();
    for mode in ["basis", "hom", "ext"] {
        let mut args = vec!["oracle", "--mode", mode];
        args.extend(&files);
        let r = json(&qglue(&args).0).map_err(|e| format!("{mode}: {e}"))?;
        ensure(r["divergent"] == 0, || format!("{mode}: {} divergent", r["divergent"]))?;
    }
    ensure(basis_dim("ex4_10")? == 10 && basis_dim("ex3_15")? == 11, || {
        "basis counts".into()
    })
}

fn criterion_8(dir: &Path) -> Result<(), String> {
    let gated = [("ex3_13_prime", "ex3_13_A", "ex3_13_B"), ("fig3", "fig3_A", "fig3_B")];
    for (l, a, b) in gated {
        let (fa, fb) = (fixture(a), fixture(b));
        for extra in [vec![], vec!["--components", path(&fa), path(&fb), "--at", "a=2,b=2"]] {
            let r = report(dir, l, &extra)?;
            let v = verdicts(&r);
            ensure(
                v.len() == 6 && v.iter().all(|x| x == "skipped: non-glued ideal"),
                || format!("{l}: {}", r["verdicts"]),
            )?;
        }
    }
    Ok(())
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let results: Vec<(&str, Result<(), String>)> = vec![
        ("1 corner gluing Gproj", criterion_1(&d.join("c1"))),
        ("2 cycle with loop Auslander algebra", criterion_2(&d.join("c2"))),
        ("3 corner gluing Auslander quiver", criterion_3(&d.join("c3"))),
        ("4 Gorenstein transfer", criterion_4(&d.join("c4"))),
        ("5 cluster tube count", criterion_5(&d.join("c5"))),
        ("6 property suites", criterion_6()),
        ("7 oracle equivalence", criterion_7()),
        ("8 negative gate", criterion_8(&d.join("c8"))),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(()) => println!("criterion {name}: pass"),
            Err(w) => {
                failed += 1;
                println!("criterion {name}: FAIL ({w})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
