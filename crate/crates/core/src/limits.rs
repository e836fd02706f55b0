/// Enumeration bounds. Every enumerator checks its input against these
/// and fails with [`Error::LimitExceeded`](crate::Error::LimitExceeded)
/// instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of tiles in a diagram.
    pub max_area: usize,
    /// Maximum number of tilings visited by a flip-graph search.
    pub max_tilings: usize,
    /// Maximum number of fillings produced for a single tiling.
    pub max_fillings: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_area: 40,
            max_tilings: 200_000,
            max_fillings: 2_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_area(mut self, max_area: usize) -> Self {
        self.max_area = max_area;
        self
    }

    pub(crate) fn check_area(&self, area: usize) -> crate::Result<()> {
        if area > self.max_area {
            return Err(crate::Error::LimitExceeded {
                what: "area",
                limit: self.max_area,
                actual: area,
            });
        }
        Ok(())
    }
}
