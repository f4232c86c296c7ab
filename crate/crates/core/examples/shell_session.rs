// Driving the command-line interface in-process: a scripted shell session
// and a batch query, with standard output and standard error captured.
//
// ```bash
// cargo run --example shell_session
// ```

use fuzzyrel::cli::{run, Io};

fn invoke(args: &[&str], input: &str) -> (i32, String, String) {
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        args,
        &mut Io {
            stdin: &mut stdin,
            stdout: &mut out,
            stderr: &mut err,
            prompt: false,
        },
    );
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

pub fn run_example() -> Result<(), String> {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/casestudy");
    let script = "\
.thold 0.9
SELECT cod_carti, tono_cara, tono_reverso, CDEG(tono_cara), CDEG(tono_reverso)
  FROM cartulina
 WHERE tono_cara FEQ $blanco AND tono_reverso FEQ $blanco;
SELECT cod_carti FROM cartulina WHERE tono_cara FEQ;
.locale comma
.format csv
SELECT cod_carti, CDEG(tono_cara) FROM cartulina WHERE tono_cara FEQ $manila THOLD 0.5;
.quit
";
    let (code, out, err) = invoke(&["fuzzyrel", "--data-dir", data, "repl"], script);
    println!("repl exit {code}\n--- stdout\n{out}--- stderr\n{err}");

    let (code, out, err) = invoke(
        &[
            "fuzzyrel",
            "--data-dir",
            data,
            "--explain",
            "query",
            "SELECT cod_carti FROM cartulina WHERE cod_capa FEQ 45",
        ],
        "",
    );
    println!("query exit {code}\n--- stdout\n{out}--- stderr\n{err}");
    if code != 0 {
        return Err(err);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
