/// Outcome of an instance check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    /// The claimed conclusion holds on this instance.
    Verified,
    /// A premise of the statement is absent, so nothing was claimed.
    HypothesisFails,
    /// The premises hold and the conclusion does not. On hypothesis-checked
    /// input this indicates a bug.
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::HypothesisFails => "hypothesis_fails",
            Status::Failed => "failed",
        }
    }

    /// The worse of two outcomes (`Failed` beats `HypothesisFails` beats `Verified`).
    pub fn worst(self, other: Status) -> Status {
        self.max(other)
    }
}
