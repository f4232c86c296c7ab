use super::{catalog_cmd, parse_degree, run_statement, Config, Io, EXIT_OK};
use crate::engine::Database;

const HELP: &str = "\
statements end with ';' and may span lines
.catalog [attr]      show the catalog
.format FORMAT       table, csv or json-lines
.locale LOCALE       dot or comma
.thold X             default threshold for conditions without THOLD
.explain on|off      print plans before results
.help                this text
.quit                leave the shell
";

enum Flow {
    Continue,
    Quit,
}

fn dot_command(line: &str, db: &Database, config: &mut Config, io: &mut Io<'_>) -> Flow {
    let mut parts = line.split_whitespace();
    let cmd = parts.next().unwrap_or("");
    let arg = parts.next();
    let result: Result<(), String> = match (cmd, arg) {
        (".quit" | ".exit", _) => return Flow::Quit,
        (".help", _) => {
            let _ = write!(io.stderr, "{HELP}");
            Ok(())
        }
        (".catalog", a) => catalog_cmd::show(db.catalog(), a, config.locale)
            .map(|text| {
                let _ = write!(io.stdout, "{text}");
            })
            .map_err(|e| e.to_string()),
        (".format", Some(f)) => f.parse().map(|f| config.format = f),
        (".locale", Some(l)) => l.parse().map(|l| config.locale = l),
        (".thold", Some(t)) => parse_degree(t).map(|t| config.default_thold = t),
        (".explain", Some("on")) => {
            config.explain = true;
            Ok(())
        }
        (".explain", Some("off")) => {
            config.explain = false;
            Ok(())
        }
        (".format" | ".locale" | ".thold" | ".explain", _) => Err(format!("{cmd} needs an argument (see .help)")),
        _ => Err(format!("unknown command {cmd} (see .help)")),
    };
    if let Err(e) = result {
        let _ = writeln!(io.stderr, "error: {e}");
    }
    Flow::Continue
}

/// Reads `;`-terminated statements and dot commands until `.quit` or end of input.
pub(super) fn run(mut db: Database, mut config: Config, io: &mut Io<'_>) -> i32 {
    let mut pending = String::new();
    let mut line = String::new();
    loop {
        if io.prompt {
            let _ = write!(io.stderr, "{}", if pending.is_empty() { "fsql> " } else { "  ... " });
            let _ = io.stderr.flush();
        }
        line.clear();
        match io.stdin.read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => {
                let _ = writeln!(io.stderr, "error: {e}");
                return super::EXIT_CONFIG;
            }
        }
        let mut rest = line.as_str();
        loop {
            let trimmed = rest.trim();
            if trimmed.is_empty() {
                break;
            }
            if pending.trim().is_empty() && trimmed.starts_with('.') {
                if let Flow::Quit = dot_command(trimmed, &db, &mut config, io) {
                    return EXIT_OK;
                }
                break;
            }
            match rest.find(';') {
                Some(end) => {
                    pending.push_str(&rest[..end]);
                    let statement = std::mem::take(&mut pending);
                    if !statement.trim().is_empty() {
                        run_statement(&mut db, statement.trim(), &config, io);
                    }
                    rest = &rest[end + 1..];
                }
                None => {
                    pending.push_str(rest);
                    break;
                }
            }
        }
    }
    if !pending.trim().is_empty() {
        let _ = writeln!(io.stderr, "error: statement not terminated by ';' at end of input");
    }
    EXIT_OK
}
