mod common;

use std::process::Command;

use fuzzyrel::cli::{run, Io};

const FIG4: &str =
    "SELECT cartulina.% FROM cartulina WHERE tono_cara FEQ $blanco THOLD 0.5 AND tono_reverso FEQ $blanco THOLD 0.5";

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], input: &str) -> Outcome {
    let mut argv = vec!["fuzzyrel"];
    argv.extend_from_slice(args);
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        argv,
        &mut Io {
            stdin: &mut stdin,
            stdout: &mut out,
            stderr: &mut err,
            prompt: false,
        },
    );
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn data_dir() -> String {
    common::casestudy_dir().to_string_lossy().into_owned()
}

fn data_lines(table_output: &str) -> Vec<&str> {
    table_output.lines().skip(2).collect()
}

#[test]
fn fig4_query_with_comma_locale() {
    let out = invoke(&["--data-dir", &data_dir(), "--locale", "comma", "query", FIG4], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stderr.is_empty());
    let rows = data_lines(&out.stdout);
    assert_eq!(rows.len(), 3);
    let expected = [
        ["1", "444", "30", "Offset", "0,5/BLANCO", "UNKNOWN", "0,5", "1"],
        ["2", "226", "45", "Offset", "0,5/BLANCO", "0,9/BLANCO", "0,5", "0,9"],
        ["3", "228", "10", "Offset", "1/BLANCO", "1/BLANCO", "1", "1"],
    ];
    for (line, want) in rows.iter().zip(expected) {
        let cells: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(cells, want);
    }
}

#[test]
fn parse_error_exits_1_with_position() {
    let out = invoke(
        &[
            "--data-dir",
            &data_dir(),
            "query",
            "SELECT % FROM cartulina WHERE tono_cara FEQ",
        ],
        "",
    );
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("syntax error at 1:"), "{}", out.stderr);

    let out = invoke(
        &[
            "--data-dir",
            &data_dir(),
            "query",
            "SELECT % FROM cartulina WHERE tono_cara FEQ $verde",
        ],
        "",
    );
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("verde"), "{}", out.stderr);
}

#[test]
fn missing_table_exits_2() {
    let out = invoke(&["--data-dir", &data_dir(), "query", "SELECT % FROM bobinas"], "");
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("bobinas"), "{}", out.stderr);
}

#[test]
fn bad_configuration_exits_2() {
    let out = invoke(
        &["--data-dir", &data_dir(), "--default-thold", "1.5", "query", FIG4],
        "",
    );
    assert_eq!(out.code, 2);
    let out = invoke(&["--data-dir", &data_dir(), "--format", "xml", "query", FIG4], "");
    assert_eq!(out.code, 2);
    let out = invoke(
        &[
            "--catalog",
            "/nonexistent/catalog",
            "--data-dir",
            &data_dir(),
            "query",
            FIG4,
        ],
        "",
    );
    assert_eq!(out.code, 2);
}

#[test]
fn explain_and_stats_streams() {
    let out = invoke(&["--data-dir", &data_dir(), "--explain", "--stats", "query", FIG4], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("query: "));
    assert_eq!(out.stdout.matches("THOLD 0.5").count(), 4);
    assert!(out.stderr.contains("28 FEQ evaluations"), "{}", out.stderr);
    assert!(!out.stdout.contains("FEQ evaluations"));
}

#[test]
fn catalog_management() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("catalog");
    let cat = cat.to_str().unwrap();
    let ok = |args: &[&str]| {
        let mut full = vec!["--catalog", cat];
        full.extend_from_slice(args);
        let out = invoke(&full, "");
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        out
    };
    ok(&["catalog", "add-attr", "personas", "edad", "2", "--units", "years"]);
    ok(&["catalog", "add-label", "edad", "joven", "15", "20", "25", "30"]);
    ok(&[
        "catalog",
        "add-attr",
        "rollos",
        "estado",
        "3",
        "--elements",
        "Sucio,Rayas,Curvas",
    ]);
    ok(&["catalog", "set-sim", "estado", "Sucio", "Rayas", "0.8"]);
    ok(&["catalog", "add-label", "rollos.estado", "Humedo"]);

    let out = invoke(
        &[
            "--catalog",
            cat,
            "catalog",
            "set-sim",
            "estado",
            "Sucio",
            "Sucio",
            "0.5",
        ],
        "",
    );
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("Sucio"), "{}", out.stderr);
    let out = invoke(
        &[
            "--catalog",
            cat,
            "catalog",
            "add-label",
            "edad",
            "viejo",
            "60",
            "50",
            "70",
            "80",
        ],
        "",
    );
    assert_eq!(out.code, 2);
    let out = invoke(&["--catalog", cat, "catalog", "add-attr", "rollos", "peso", "3"], "");
    assert_eq!(out.code, 2);

    let shown = ok(&["catalog", "show"]).stdout;
    assert!(shown.contains("personas.edad  Type 2  numeric (years)"), "{shown}");
    assert!(shown.contains("$joven = [15, 20, 25, 30]"), "{shown}");
    assert!(shown.contains("Humedo"), "{shown}");
    let sucio = shown
        .lines()
        .filter(|l| l.trim_start().starts_with("Sucio"))
        .nth(1)
        .unwrap();
    assert_eq!(
        sucio.split_whitespace().collect::<Vec<_>>(),
        ["Sucio", "1", "0.8", "0", "0"]
    );
}

#[test]
fn repl_sessions() {
    let dd = data_dir();
    let out = invoke(&["--data-dir", &dd, "repl"], "SELECT cod_carti FROM cartulina; .quit\n");
    assert_eq!(out.code, 0);
    assert_eq!(data_lines(&out.stdout).len(), 14);

    let script =
        ".thold 0.9\nSELECT cod_carti FROM cartulina\n WHERE tono_cara FEQ $blanco AND tono_reverso FEQ $blanco;\n";
    let out = invoke(&["--data-dir", &dd, "repl"], script);
    let rows = data_lines(&out.stdout);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].split_whitespace().collect::<Vec<_>>(), ["1", "228"]);

    let out = invoke(&["--data-dir", &dd, "repl"], ".quit\n");
    assert_eq!((out.code, out.stdout.as_str()), (0, ""));
}

#[test]
fn repl_survives_errors() {
    let script = "SELECT FROM;\n.nonsense\n.thold 7\nSELECT % FROM bobinas;\n.format csv\nSELECT cod_carti FROM cartulina WHERE cod_carti FEQ 228;\n";
    let out = invoke(&["--data-dir", &data_dir(), "repl"], script);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "COD_CARTI\n228\n");
    assert_eq!(out.stderr.matches("error:").count(), 4, "{}", out.stderr);
}

#[test]
fn batch_and_repl_print_the_same() {
    let dd = data_dir();
    for flags in [
        &["--locale", "comma"][..],
        &["--format", "csv"],
        &["--format", "json-lines", "--explain"],
    ] {
        let mut batch_args = vec!["--data-dir", dd.as_str()];
        batch_args.extend_from_slice(flags);
        let mut repl_args = batch_args.clone();
        batch_args.extend(["query", FIG4]);
        repl_args.push("repl");
        let batch = invoke(&batch_args, "");
        let repl = invoke(&repl_args, &format!("{FIG4};\n"));
        assert_eq!(batch.stdout, repl.stdout, "{flags:?}");
    }
}

#[test]
fn binary_exit_codes_and_environment() {
    let bin = env!("CARGO_BIN_EXE_fuzzyrel");
    let out = Command::new(bin)
        .args(["query", FIG4])
        .env("FUZZYREL_DATA_DIR", data_dir())
        .env("FUZZYREL_LOCALE", "comma")
        .env("FUZZYREL_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        stdout.lines().nth(2).unwrap(),
        "226,45,Offset,\"0,5/BLANCO\",\"0,9/BLANCO\",\"0,5\",\"0,9\""
    );

    let out = Command::new(bin)
        .args(["--data-dir", &data_dir(), "query", "SELEC"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());

    let out = Command::new(bin)
        .args(["--data-dir", "/nonexistent", "query", FIG4])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
