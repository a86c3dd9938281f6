use std::io::Read;
use std::process::ExitCode;

use clap::Parser;

use tcm::instance::RandomModelParams;
use tcm::report::Verdict;
use tcm::session::{execute, parse_session, Format};
use tcm::suite::{run_suite, summarize};

/// Exact commutative-algebra checker for tensor products of graded modules.
#[derive(Parser)]
#[command(name = "tcm", version, about)]
struct Cli {
    /// Session file to execute; reads stdin when omitted.
    input: Option<std::path::PathBuf>,

    /// Output format for check results.
    #[arg(long, default_value = "text", value_parser = ["text", "records"])]
    format: String,

    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Run a named suite instead of a session file.
    #[arg(long)]
    suite: Option<String>,

    /// Base field for randomized suites: QQ or FFp:<prime>.
    #[arg(long, default_value = "QQ")]
    field: String,

    /// Override the instance count of randomized suites.
    #[arg(long)]
    count: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.format == "records" {
        Format::Records
    } else {
        Format::Text
    };

    // The random model draws over the rationals by default; a prime field
    // request switches the scalar domain of every drawn instance.
    let field = match parse_field(&cli.field) {
        Ok(f) => f,
        Err(msg) => {
            eprintln!("error: {}", msg);
            return ExitCode::from(2);
        }
    };

    if let Some(id) = &cli.suite {
        let params = RandomModelParams {
            seed: cli.seed,
            field,
            ..Default::default()
        };
        let reports = match run_suite(id, &params, cli.count, false) {
            Ok(rs) => rs,
            Err(e) => {
                eprintln!("error: {}", e);
                return ExitCode::from(2);
            }
        };
        let mut failed = false;
        for r in &reports {
            if r.verdict == Verdict::Fail {
                failed = true;
            }
            match format {
                Format::Text => println!("{}", r.render_text()),
                Format::Records => println!("{}", r.render_record()),
            }
        }
        let (pass, fail, skip) = summarize(&reports);
        if format == Format::Text {
            println!(
                "suite {}: {} checks, {} pass, {} fail, {} skip",
                id,
                reports.len(),
                pass,
                fail,
                skip
            );
        }
        return if failed {
            ExitCode::from(1)
        } else {
            ExitCode::SUCCESS
        };
    }

    let text = match &cli.input {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {}", path.display(), e);
                return ExitCode::from(2);
            }
        },
        None => {
            let mut buf = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                eprintln!("error: cannot read stdin: {}", e);
                return ExitCode::from(2);
            }
            buf
        }
    };

    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(d) => {
            eprintln!("error: {}", d);
            return ExitCode::from(2);
        }
    };

    match execute(&session, format) {
        Ok(outcome) => {
            for line in &outcome.lines {
                println!("{}", line);
            }
            if outcome.check_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(d) => {
            eprintln!("error: {}", d);
            ExitCode::from(2)
        }
    }
}

fn parse_field(s: &str) -> Result<tcm_core::Field, String> {
    if s == "QQ" {
        return Ok(tcm_core::Field::Rationals);
    }
    if let Some(p) = s.strip_prefix("FFp:") {
        return p
            .parse::<u64>()
            .map(tcm_core::Field::Prime)
            .map_err(|_| format!("invalid prime in field spec '{}'", s));
    }
    Err(format!("invalid field spec '{}' (expected QQ or FFp:<p>)", s))
}
