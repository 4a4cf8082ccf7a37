use hirota::cli::{run, ReportJson, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use hirota::polyring::Poly;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hirota").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["generate", "--family", "p2", "--n", "4"], EXIT_OK),
        (
            &[
                "generate", "--family", "p3", "--c", "-3/2", "--n", "4", "--format", "csv",
            ],
            EXIT_OK,
        ),
        (
            &[
                "generate", "--family", "p5", "--v", "1/2", "--n", "3", "--format", "latex",
            ],
            EXIT_OK,
        ),
        (
            &[
                "generate", "--family", "custom", "--f", "x^2", "--g", "1", "--p", "x", "--n", "8",
            ],
            EXIT_FAILED,
        ),
        (&["generate", "--family", "p3", "--n", "3"], EXIT_USAGE),
        (
            &["generate", "--family", "p2", "--f", "1", "--n", "3"],
            EXIT_USAGE,
        ),
        (&["generate", "--family", "p9", "--n", "3"], EXIT_USAGE),
        (
            &["generate", "--family", "custom", "--f", "x", "--n", "3"],
            EXIT_USAGE,
        ),
        (
            &["somos", "--k", "5", "--n", "30", "--expect-integral"],
            EXIT_OK,
        ),
        (
            &["somos", "--k", "8", "--n", "30", "--expect-integral"],
            EXIT_FAILED,
        ),
        (&["somos", "--k", "8", "--n", "30"], EXIT_OK),
        (
            &["somos", "--k", "4", "--n", "8", "--seeds", "1,2,3"],
            EXIT_USAGE,
        ),
        (&["somos", "--k", "3", "--n", "8"], EXIT_USAGE),
        (&["check-star", "--f", "x^3", "--g", "x^2"], EXIT_OK),
        (&["check-star", "--f", "x^2", "--g", "1"], EXIT_FAILED),
        (
            &[
                "check-star",
                "--f",
                "(x^2-4)^2/4",
                "--g",
                "x(x^2-4)/4",
                "--beta",
                "1",
            ],
            EXIT_OK,
        ),
        (&["check-star", "--f", "x/y", "--g", "1"], EXIT_USAGE),
        (&["solve-g", "--f", "-x^4"], EXIT_OK),
        (&["solve-g", "--f", "x^2+3x-5", "--beta", "1"], EXIT_OK),
        (&["solve-g", "--f", "0"], EXIT_USAGE),
        (
            &[
                "search",
                "--deg-min",
                "1",
                "--deg-max",
                "2",
                "--trials",
                "3",
                "--rng-seed",
                "1",
            ],
            EXIT_OK,
        ),
        (
            &[
                "search",
                "--deg-min",
                "1",
                "--deg-max",
                "2",
                "--trials",
                "3",
            ],
            EXIT_USAGE,
        ),
        (
            &[
                "search",
                "--deg-min",
                "3",
                "--deg-max",
                "2",
                "--trials",
                "3",
                "--rng-seed",
                "1",
            ],
            EXIT_USAGE,
        ),
        (&["verify-p3", "--n", "2", "--c", "2,1/2,-3/2"], EXIT_OK),
        (&["verify-p3", "--n", "2", "--c", "x"], EXIT_USAGE),
        (&["certify", "--family", "p4b", "--n", "6"], EXIT_OK),
        (
            &[
                "certify", "--family", "custom", "--f", "x^2", "--g", "1", "--p", "x", "--n", "6",
            ],
            EXIT_FAILED,
        ),
        (&["certify", "--family", "p2", "--n", "1"], EXIT_USAGE),
        (&["frobnicate"], EXIT_USAGE),
        (&["--help"], EXIT_OK),
    ];
    for (args, want) in cases {
        let (code, _, err) = exec(args);
        assert_eq!(code, *want, "{args:?}: {err}");
    }
}

#[test]
fn somos_csv() {
    let (code, out, _) = exec(&["somos", "--k", "4", "--n", "8"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1,1,1,1,2,3,7,23,59\n");
    let (_, out, err) = exec(&["somos", "--k", "8", "--n", "17", "--expect-integral"]);
    assert!(out.trim_end().ends_with(",420514/7"));
    assert!(err.contains("a_17 = 420514/7"));
}

#[test]
fn check_star_text() {
    let (_, out, _) = exec(&["check-star", "--f", "x^3", "--g", "x^2"]);
    assert_eq!(out, "residual: 0\nsatisfied: true\n");
}

#[test]
fn generate_json_roundtrip() {
    let (code, out, _) = exec(&["generate", "--family", "p2", "--n", "3", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let parsed: ReportJson = serde_json::from_str(&out).unwrap();
    let report = parsed.to_report().unwrap();
    assert_eq!(
        report.entries.last().unwrap(),
        &Poly::from_ints(&[-80, 0, 0, 20, 0, 0, 1])
    );
    let again = serde_json::to_string_pretty(&ReportJson::new("p2", 3, &report)).unwrap() + "\n";
    assert_eq!(again, out);
}

#[test]
fn failed_generation_roundtrips_with_failure() {
    let args = [
        "generate", "--family", "custom", "--f", "x^2", "--g", "1", "--p", "x", "--n", "8",
    ];
    let (code, out, err) = exec(&args);
    assert_eq!(code, EXIT_FAILED);
    assert!(err.contains("does not divide"));
    let parsed: ReportJson = serde_json::from_str(&out).unwrap();
    assert!(parsed.failure.is_some());
    let again =
        serde_json::to_string_pretty(&ReportJson::new("custom", 8, &parsed.to_report().unwrap()))
            .unwrap();
    assert_eq!(again + "\n", out);
}

#[test]
fn solve_g_lists_both_families() {
    let (_, out, _) = exec(&["solve-g", "--f", "-2(3x+2)^5"]);
    assert!(out.contains("g: -1215*x^4-3240*x^3-3240*x^2-1440*x-240\n"));
    assert!(out.contains("g: -486*x^4-1296*x^3-1296*x^2-576*x-96\n"));
    assert!(out.contains("closed form agrees: true"));
}
