//! `intmetric`: command-line access to every operation of the library.
//!
//! Every command prints one envelope `{command, params, payload, exit_code}`.
//! Exit codes: 0 ok, 2 domain error, 3 capacity or budget error, 4 a
//! counterexample or violated invariant, 64 usage error.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

pub const EXIT_USAGE: u8 = 64;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match build_pool(cli.global.threads) {
        Ok(pool) => run_in(pool, &cli),
        Err(msg) => Err(output::Failure::usage(msg)),
    };
    output::emit(&cli, outcome)
}

#[cfg(feature = "parallel")]
type Pool = rayon::ThreadPool;
#[cfg(not(feature = "parallel"))]
type Pool = ();

#[cfg(feature = "parallel")]
fn build_pool(threads: usize) -> Result<Pool, String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| format!("cannot start {threads} worker threads: {e}"))
}

#[cfg(not(feature = "parallel"))]
fn build_pool(_threads: usize) -> Result<Pool, String> {
    Ok(())
}

fn run_in(pool: Pool, cli: &Cli) -> Result<output::Output, output::Failure> {
    #[cfg(feature = "parallel")]
    return pool.install(|| commands::run(cli));
    #[cfg(not(feature = "parallel"))]
    {
        let () = pool;
        commands::run(cli)
    }
}
