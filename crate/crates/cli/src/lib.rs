//! Bundle files, property suites, reports and the exit-code table of the
//! `veerlat` command.

pub mod bundle;
pub mod pocket;
pub mod report;
pub mod suites;

pub use bundle::{BundleError, BundleFile};
pub use report::CheckReport;
pub use suites::{run_suites, Suite, SuiteOptions};

pub mod exit {
    //! Process exit codes.

    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const NOT_PSEUDO_ANOSOV: i32 = 2;
    pub const UNVEERABLE: i32 = 3;
    pub const BAD_SCRIPT: i32 = 4;
    pub const HASH_MISMATCH: i32 = 5;
    pub const NOT_COMPATIBLE: i32 = 6;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
    pub const INTERNAL: i32 = 70;
    pub const IO: i32 = 74;
}

/// The exit code for an error raised by a command.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    use veerlat::Error as E;
    if let Some(e) = err.downcast_ref::<E>() {
        return match e {
            E::NotPseudoAnosov(_) => exit::NOT_PSEUDO_ANOSOV,
            E::Unveerable { .. } => exit::UNVEERABLE,
            E::BadScript(_) => exit::BAD_SCRIPT,
            E::NotCompatible { .. } => exit::NOT_COMPATIBLE,
            E::Inconsistent(_) | E::Overflow(_) => exit::INTERNAL,
            _ => exit::DATA,
        };
    }
    if let Some(e) = err.downcast_ref::<BundleError>() {
        return match e {
            BundleError::HashMismatch { .. } => exit::HASH_MISMATCH,
            BundleError::Io(_) => exit::IO,
            _ => exit::DATA,
        };
    }
    if err.downcast_ref::<std::io::Error>().is_some() {
        return exit::IO;
    }
    if err.downcast_ref::<serde_json::Error>().is_some() {
        return exit::DATA;
    }
    exit::INTERNAL
}
