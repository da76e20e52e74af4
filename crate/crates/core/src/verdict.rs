//! Outcome of a mathematical check.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
    Uncertified,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Holds
        } else {
            Status::Fails
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::NotApplicable => "not-applicable",
            Status::Uncertified => "uncertified",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    pub fn new(status: Status, detail: impl Into<String>) -> Self {
        Verdict {
            status,
            detail: detail.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}
