//! Working/cap precision pairs and the doubling escalation protocol.

use crate::error::Error;
use crate::Result;

/// Bit precision budget. Escalation doubles the working precision until the
/// cap; exactly decidable questions terminate below the cap, everything else
/// surfaces an undecided answer carrying the cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision {
    working: u32,
    cap: u32,
}

impl Precision {
    pub const DEFAULT_WORKING: u32 = 64;
    pub const DEFAULT_CAP: u32 = 4096;

    pub fn new(working: u32, cap: u32) -> Result<Self> {
        if working == 0 || working > cap {
            return Err(Error::InvalidPrecision { working, cap });
        }
        Ok(Precision { working, cap })
    }

    pub fn working(&self) -> u32 {
        self.working
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn with_cap(self, cap: u32) -> Result<Self> {
        Precision::new(self.working, cap)
    }

    /// Doubling schedule: working, 2*working, ..., clamped to end at cap.
    pub fn levels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut bits = self.working;
        loop {
            out.push(bits);
            if bits >= self.cap {
                break;
            }
            bits = bits.saturating_mul(2).min(self.cap);
        }
        out
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision { working: Self::DEFAULT_WORKING, cap: Self::DEFAULT_CAP }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels_double_and_clamp() {
        let p = Precision::new(64, 300).unwrap();
        assert_eq!(p.levels(), vec![64, 128, 256, 300]);
    }

    #[test]
    fn rejects_working_above_cap() {
        assert!(Precision::new(128, 64).is_err());
    }
}
