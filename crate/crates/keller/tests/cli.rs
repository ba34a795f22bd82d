use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use keller::format::{parse_map, print_map};
use keller_core::PolyMap;

fn keller(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_keller"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const CLASSIC: &str = "nvars: 2\nF1: x1 + x2^3\nF2: x2\n";
const TIGHT: &str =
    "nvars: 3\nF1: x1 + x2^3 + 3*x2^2*x3 + 3*x2*x3^2 + x3^3\nF2: x2 + x3^3\nF3: x3\n";

#[test]
fn invert_prints_the_inverse_map_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.map", CLASSIC);
    let o = keller(&["invert", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "nvars: 2\nF1: -x2^3 + x1\nF2: x2\n");
    assert!(stderr(&o).contains("inverse_degree: 3\n"));
}

#[test]
fn inverse_of_inverse_is_the_original() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [("classic.map", CLASSIC), ("tight.map", TIGHT)] {
        let f = write(dir.path(), name, text);
        let first = keller(&["invert", f.to_str().unwrap()]);
        assert_eq!(first.status.code(), Some(0));
        let g = write(dir.path(), &format!("inv-{name}"), &stdout(&first));
        // the inverse of a degree-9 map has degree 3, far below the default bound
        let second = keller(&["invert", g.to_str().unwrap(), "--max-degree", "3"]);
        assert_eq!(second.status.code(), Some(0), "{}", stderr(&second));
        assert_eq!(
            parse_map(&stdout(&second)).unwrap(),
            parse_map(text).unwrap()
        );
    }
}

#[test]
fn invert_handles_affine_parts() {
    // F = (2 x1 + x2^2 + 1, x2 - 3)
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "a.map",
        "nvars: 2\nF1: 2*x1 + x2^2 + 1\nF2: x2 - 3\n",
    );
    let o = keller(&["invert", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let inv = parse_map(&stdout(&o)).unwrap();
    let fm = parse_map("nvars: 2\nF1: 2*x1 + x2^2 + 1\nF2: x2 - 3\n").unwrap();
    assert!(fm.compose(&inv).unwrap().is_identity());
    assert!(inv.compose(&fm).unwrap().is_identity());
}

#[test]
fn check_keller_reports_determinant() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "sq.map", "nvars: 2\nF1: x1^2\nF2: x2\n");
    let o = keller(&["check-keller", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "keller: false\ndet: 2*x1\n");
    let g = write(dir.path(), "c.map", CLASSIC);
    let o = keller(&["check-keller", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "keller: true\ndet: 1\n");
}

#[test]
fn no_inverse_within_bound_is_negative() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "q.map", "nvars: 2\nF1: x1 + x1^2\nF2: x2\n");
    let o = keller(&["invert", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no polynomial inverse"));
    assert!(stdout(&o).is_empty());
    let o = keller(&["invert-t3", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bound_and_invert_t3_golden() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t.map", TIGHT);
    let golden = "n: 3\nd: 3\nr: 2\nkernel_dim: 1\nbound: 9\nbcw_bound: 9\ninverse_degree: 9\nwithin_bound: true\nwithin_bcw_bound: true\n";
    let o = keller(&["bound", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden);
    let o = keller(&["invert-t3", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stderr(&o), golden);
    let inv = parse_map(&stdout(&o)).unwrap();
    assert!(parse_map(TIGHT)
        .unwrap()
        .compose(&inv)
        .unwrap()
        .is_identity());
}

#[test]
fn conjugate_golden() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c.map", CLASSIC);
    let o = keller(&["conjugate", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "nvars: 2\nF1: x1\nF2: x1^3 + x2\n");
    assert_eq!(
        stderr(&o),
        "rank: 1\nkernel_dim: 1\ntransform: 0 1; 1 0\ntransform_inverse: 0 1; 1 0\n"
    );
}

#[test]
fn line_certificate_golden() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c.map", CLASSIC);
    let o = keller(&["line-cert", f.to_str().unwrap(), "--point", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "point: 1,1\ndegree: 3\nnilpotency_index: 2\ndet_polynomial: 1\ndet_identity: true\n\
         line_gcd: t - 1\ngcd_roots: true\nvalid: true\nfailed_clause: none\n"
    );
    let o = keller(&["line-cert", f.to_str().unwrap(), "--point", "-1/2,3"]);
    assert_eq!(o.status.code(), Some(0));
    for bad in ["0,0", "1", "1,x"] {
        let o = keller(&["line-cert", f.to_str().unwrap(), "--point", bad]);
        assert_eq!(o.status.code(), Some(2), "point {bad}");
    }
    // not homogeneous
    let g = write(
        dir.path(),
        "g.map",
        "nvars: 2\nF1: x1 + x2^3 + x2^2\nF2: x2\n",
    );
    let o = keller(&["line-cert", g.to_str().unwrap(), "--point", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn expand_druzkowski_spec() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "a.spec", "d: 3\n0 1 1\n0 0 1\n0 0 0\n");
    let o = keller(&["expand-druzkowski", s.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse_map(&stdout(&o)).unwrap(), parse_map(TIGHT).unwrap());
    let bad = write(dir.path(), "b.spec", "d: 1\n0 1\n0 0\n");
    assert_eq!(
        keller(&["expand-druzkowski", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gen_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let o = keller(&[
            "gen",
            "--kind",
            "triangular-druzkowski",
            "--n",
            "3",
            "--d",
            "3",
            "--seed",
            "11",
            "--count",
            "5",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let mut names: Vec<String> = std::fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 5);
    assert_eq!(names[0], "triangular-druzkowski-n3-d3-s11-0.spec");
    for name in &names {
        let x = std::fs::read(a.path().join(name)).unwrap();
        let y = std::fs::read(b.path().join(name)).unwrap();
        assert_eq!(x, y, "{name}");
        let o = keller(&["expand-druzkowski", a.path().join(name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
}

#[test]
fn gen_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = keller(&[
        "gen",
        "--kind",
        "triangular-keller",
        "--n",
        "1",
        "--d",
        "2",
        "--count",
        "2",
        "--out",
        out,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text =
        std::fs::read_to_string(dir.path().join("triangular-keller-n1-d2-s0-0.map")).unwrap();
    assert_eq!(parse_map(&text).unwrap(), PolyMap::identity(1));

    let empty = tempfile::tempdir().unwrap();
    let o = keller(&[
        "gen",
        "--kind",
        "triangular-keller",
        "--n",
        "2",
        "--d",
        "2",
        "--count",
        "0",
        "--out",
        empty.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(empty.path()).unwrap().count(), 0);

    for args in [
        &["gen", "--kind", "cubic", "--n", "2", "--d", "3"][..],
        &[
            "gen",
            "--kind",
            "triangular-keller",
            "--n",
            "0",
            "--d",
            "3",
            "--out",
            out,
        ][..],
        &[
            "gen",
            "--kind",
            "triangular-keller",
            "--n",
            "2",
            "--d",
            "1",
            "--out",
            out,
        ][..],
        &[
            "gen",
            "--kind",
            "triangular-keller",
            "--n",
            "two",
            "--d",
            "3",
        ][..],
    ] {
        assert_eq!(keller(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(keller(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(keller(&[]).status.code(), Some(2));
    assert_eq!(
        keller(&["invert", "/nonexistent/f.map"]).status.code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.map", "nvars: 2\nF1: x1 + (x2)\nF2: x2\n");
    let o = keller(&["check-keller", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
    let g = write(dir.path(), "c.map", CLASSIC);
    assert_eq!(
        keller(&["invert", g.to_str().unwrap(), "--max-degree", "-1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_suite_small_run_passes() {
    let o = keller(&["verify-suite", "--seed", "3", "--count", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("contradictions: 0\n"));
    assert!(text.ends_with("status: 0\n"));
    // sorted, deterministic output
    assert_eq!(
        text,
        stdout(&keller(&["verify-suite", "--seed", "3", "--count", "6"]))
    );
}

#[test]
fn emitted_maps_reparse() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t.map", TIGHT);
    for verb in ["invert", "invert-t3", "conjugate"] {
        let o = keller(&[verb, f.to_str().unwrap()]);
        let g = parse_map(&stdout(&o)).unwrap();
        assert_eq!(print_map(&g), stdout(&o), "{verb}");
    }
}
