use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{MoveApplication, MoveError};

/// A replayable list of moves, tied to the fingerprint of its starting diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSequence {
    pub start: String,
    pub steps: Vec<MoveApplication>,
    /// Free-form header lines, written as `# ...` comments.
    pub notes: Vec<String>,
}

impl MoveSequence {
    pub fn new(start: String, steps: Vec<MoveApplication>) -> Self {
        MoveSequence { start, steps, notes: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.notes {
            writeln!(f, "# {n}")?;
        }
        writeln!(f, "start {}", self.start)?;
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for MoveSequence {
    type Err = MoveError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut seq = MoveSequence::default();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                seq.notes.push(c.trim().to_string());
            } else if let Some(fp) = line.strip_prefix("start") {
                seq.start = fp.trim().to_string();
            } else {
                seq.steps.push(line.parse()?);
            }
        }
        Ok(seq)
    }
}
