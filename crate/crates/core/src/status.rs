use std::fmt;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// A finite search ended without a certificate; nothing was refuted.
    FailUnknown,
    /// Not requested (e.g. the engine producing one side was not run).
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::FailUnknown => "FAIL-UNKNOWN",
            Status::Skipped => "SKIPPED",
        })
    }
}
