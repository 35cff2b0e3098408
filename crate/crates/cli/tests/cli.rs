use std::path::PathBuf;
use std::process::{Command, Output};

use ncr_cli::encode::decode_matrix;
use ncr_core::crossratio::{dv, tilde_dv, xi};
use ncr_core::{GaussianRational, Matrix, Rational};

fn ncr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncr")).args(args).output().expect("binary runs")
}

fn problem(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "problems", name].iter().collect();
    p.display().to_string()
}

fn doc(out: &Output) -> toml::Table {
    String::from_utf8(out.stdout.clone()).unwrap().parse().expect("output is a TOML document")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ncr-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn plane_example_is_admissible() {
    let out = ncr(&["admissible", "--input", &problem("plane.toml"), "--pair", "quarter_turn"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let d = doc(&out);
    assert_eq!(d["admissible"].as_bool(), Some(true));
    assert_eq!(d["failed_conditions"].as_array().unwrap().len(), 0);
}

#[test]
fn shared_subspace_fails_one_condition() {
    let out = ncr(&["admissible", "--input", &problem("plane.toml"), "--pair", "degenerate"]);
    assert_eq!(out.status.code(), Some(1));
    let d = doc(&out);
    assert_eq!(d["admissible"].as_bool(), Some(false));
    assert_eq!(d["failed_conditions"].as_array().unwrap()[0].as_str(), Some("V₂⊕W₁"));
    assert_eq!(d["failures"].as_array().unwrap().len(), 1);
}

#[test]
fn crossratio_requires_admissible_pair() {
    let out = ncr(&["crossratio", "--input", &problem("plane.toml"), "--pair", "degenerate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not admissible"));
    assert!(stderr(&out).contains("V₂⊕W₁"));
    assert!(out.stdout.is_empty());
}

#[test]
fn quarter_turn_tilde_is_exactly_twice_identity() {
    let out = ncr(&["crossratio", "--input", &problem("plane.toml"), "--pair", "quarter_turn", "--map", "tilde"]);
    assert_eq!(out.status.code(), Some(0));
    let d = doc(&out);
    let m = decode_matrix::<Rational>(&d["matrix"]).unwrap();
    assert_eq!(m, Matrix::identity(2).scale(&Rational::from(2)));
    assert_eq!(d["scalar"].as_str(), Some("2"));
}

#[test]
fn shared_complement_gives_identity() {
    let out = ncr(&["crossratio", "--input", &problem("shared_complement.toml")]);
    assert_eq!(out.status.code(), Some(0));
    let m = decode_matrix::<Rational>(&doc(&out)["matrix"]).unwrap();
    assert!(m.is_identity());
}

#[test]
fn emitted_matrices_round_trip() {
    let path = problem("plane.toml");
    let ncr_cli::AnyProblem::Rational(p) = ncr_cli::parse_problem(&std::fs::read_to_string(&path).unwrap(), &path).unwrap()
    else {
        panic!("rational file");
    };
    for pair in ["quarter_turn", "half"] {
        let spec = &p.pairs[pair];
        let sp = ncr_core::SplittingPair::from_subspaces(spec.v1.clone(), spec.w1.clone(), spec.v2.clone(), spec.w2.clone())
            .unwrap();
        let expected = [
            ("dv", dv(&sp).unwrap().matrix().clone()),
            ("tilde", tilde_dv(&sp).unwrap().into_matrix()),
            ("xi", xi(&sp).unwrap().into_matrix()),
        ];
        for (map, m) in expected {
            let out = ncr(&["crossratio", "--input", &path, "--pair", pair, "--map", map]);
            assert_eq!(decode_matrix::<Rational>(&doc(&out)["matrix"]).unwrap(), m, "{pair} {map}");
        }
    }
    let out = ncr(&["demo", "fourier", "--order", "2"]);
    let t = decode_matrix::<GaussianRational>(&doc(&out)["objects"]["tilde_dv"]).unwrap();
    assert!(t.is_identity());
}

#[test]
fn float_problem_and_tolerance_flag() {
    let out = ncr(&["crossratio", "--input", &problem("plane_float.toml"), "--tolerance", "1e-12"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let d = doc(&out);
    let m = decode_matrix::<ncr_core::ComplexFloat>(&d["matrix"]).unwrap();
    assert!((m[(0, 0)].re() - 2.0).abs() < 1e-12);
    let out = ncr(&["crossratio", "--input", &problem("plane.toml"), "--pair", "half", "--tolerance", "1e-12"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("complex-float"));
    let out = ncr(&["crossratio", "--input", &problem("plane_float.toml"), "--tolerance", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_fraction_is_a_located_parse_error() {
    let path = temp_file(
        "bad.toml",
        "field = \"rational\"\nambient_dim = 2\n[subspaces]\nV = [[\"1/0\", \"1\"]]\n",
    );
    let out = ncr(&["admissible", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("bad.toml:4:7: parse error"), "{err}");
}

#[test]
fn unknown_name_and_dimension_errors() {
    let path = temp_file(
        "names.toml",
        "field = \"rational\"\nambient_dim = 2\n[subspaces]\nV = [[\"1\", \"0\"]]\n[pairs.p]\nv1 = \"V\"\nw1 = \"X\"\nv2 = \"V\"\nw2 = \"V\"\n",
    );
    let out = ncr(&["admissible", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("names.toml:7:6: unknown name `X`"), "{}", stderr(&out));

    let path = temp_file("dims.toml", "field = \"rational\"\nambient_dim = 3\n[subspaces]\nV = [[\"1\", \"0\"]]\n");
    let out = ncr(&["admissible", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("dims.toml:4:6: dimension mismatch: expected 3 entries, found 2"), "{}", stderr(&out));
}

#[test]
fn size_limits() {
    for args in [
        &["demo", "fourier", "--order", "33"][..],
        &["demo", "symbols", "--d-min", "-5", "--d-max", "4"],
        &["demo", "symbols", "--modes", "9"],
        &["demo", "measures", "--points", "7"],
    ] {
        let out = ncr(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains("size limit exceeded"));
    }
}

#[test]
fn output_flag_writes_the_document() {
    let dir = std::env::temp_dir().join(format!("ncr-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("measures.toml");
    let out = ncr(&["demo", "measures", "--points", "2", "--output", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert!(written.contains("admissible ⇔ equal partitions over all pairs: pass"));
}

#[test]
fn demo_headlines() {
    let out = ncr(&["demo", "fourier", "--order", "4"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("tilde_dv = Id(9): pass"));
    let out = ncr(&["demo", "symbols", "--d-min", "-1", "--d-max", "1", "--modes", "1"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("tilde_dv = 2·Id(18): pass"));
    let out = ncr(&["demo", "measures", "--points", "3"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("admissible ⇔ equal partitions over all pairs: pass"));
}

#[test]
fn seeds_change_only_seeded_content() {
    let a = ncr(&["demo", "measures", "--seed", "1"]);
    let b = ncr(&["demo", "measures", "--seed", "1"]);
    let c = ncr(&["demo", "measures", "--seed", "2"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}
