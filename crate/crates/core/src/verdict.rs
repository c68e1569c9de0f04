use serde::{Deserialize, Serialize};

/// Outcome of one exact identity check, with both sides rendered as text.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub identity: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Verdict {
    pub fn compare<T: PartialEq + ToString>(identity: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        Verdict { identity: identity.into(), holds: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

/// True when every verdict holds.
pub fn all_hold(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(|v| v.holds)
}
