//! Mapping failures to exit codes: 1 I/O, 2 usage, 3 parse, 4 resource limit.

use std::fmt;
use std::process::ExitCode;

use hadlab_core::Error;

#[derive(Debug)]
pub enum Failure {
    Io(anyhow::Error),
    Usage(String),
    Parse(String),
    Resource(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Parse(_) => 3,
            Failure::Resource(_) => 4,
        }
    }

    /// Ordering used to pick one exit code for a batch with several failures.
    pub fn severity(&self) -> u8 {
        match self {
            Failure::Usage(_) => 0,
            Failure::Parse(_) => 1,
            Failure::Resource(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io(e) => write!(f, "{e:#}"),
            Failure::Usage(m) | Failure::Parse(m) | Failure::Resource(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let msg = e.to_string();
        if e.is_resource_limit() {
            Failure::Resource(msg)
        } else if matches!(e, Error::Graph6 { .. } | Error::Store(_)) {
            Failure::Parse(msg)
        } else {
            Failure::Usage(msg)
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Io(e)
    }
}
