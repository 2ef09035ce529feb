//! Front end for the `lur` binary. Every command writes to a caller-supplied
//! sink and returns an [`Exit`] code so it can be driven from tests.

pub mod commands;
pub mod format;
pub mod sweep;
pub mod verify;

pub use commands::{cmd_noise, cmd_optimize, cmd_state, cmd_sweep, cmd_verify, StateFormat};

/// Process exit codes. No others are used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    VerificationFailed = 1,
    UsageOrIo = 2,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}
