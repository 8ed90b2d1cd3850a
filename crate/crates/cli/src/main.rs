mod args;
mod cache;
mod commands;
mod selftest;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use cache::{cache_key, Cache};

const EXIT_VALIDATION: u8 = 1;
const EXIT_CAPACITY: u8 = 2;
const EXIT_SELFTEST: u8 = 3;

fn fail(e: zonalkit::Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if e.is_capacity() {
        EXIT_CAPACITY
    } else {
        EXIT_VALIDATION
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_VALIDATION),
            };
        }
    };

    if let Some(n) = cli.global.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(EXIT_VALIDATION);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }

    if let Command::Selftest { level } = cli.command {
        return if selftest::run(level) {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(EXIT_SELFTEST)
        };
    }

    let job = match commands::build(cli.command, cli.global.format) {
        Ok(job) => job,
        Err(e) => return fail(e),
    };
    let cache = match (&cli.global.cache_dir, cli.global.no_cache) {
        (Some(dir), false) => Some(Cache::new(dir)),
        _ => None,
    };
    let mut args = job.args.clone();
    args["format"] = serde_json::json!(job.format.name());
    let key = cache_key(job.name, &args);

    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        println!("{hit}");
        return ExitCode::SUCCESS;
    }
    match job.run() {
        Ok(out) => {
            if let Some(c) = &cache {
                if let Err(e) = c.put(&key, &out) {
                    eprintln!("warning: could not write cache entry: {e}");
                }
            }
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(e),
    }
}
