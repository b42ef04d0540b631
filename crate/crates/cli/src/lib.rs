//! Command-line driver for the series engine.
//!
//! Every command returns an [`Output`] instead of printing, so the binary is
//! a thin shell and tests can inspect bytes and exit codes directly.

pub mod bench;
pub mod cli;
pub mod commands;
pub mod render;

pub use bench::{fit_growth_exponents, run_bench, BenchOptions, BenchRecord, BenchTask, GrowthFit};
pub use cli::{Cli, Command, ExpandMethod, Format};
pub use commands::{cmd_bench, cmd_expand, cmd_partition, cmd_verify, run};

/// Exit code for success or all checks passing.
pub const EXIT_OK: i32 = 0;
/// Exit code for a mathematical mismatch.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit code for usage or precondition errors.
pub const EXIT_USAGE: i32 = 2;

/// What a command wants written and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: EXIT_OK }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Output { stdout: String::new(), stderr, code: EXIT_USAGE }
    }
}
