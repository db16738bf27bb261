//! Mixed-radix indexing for joint states and actions.
//!
//! Joint indices enumerate per-agent digits with agent 0 most significant,
//! so for sizes `[3, 2]` the joint index of `[s0, s1]` is `s0 * 2 + s1`.
//! Every module and file format in this crate uses this ordering.

/// A mixed-radix code over per-agent sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedRadix {
    sizes: Vec<usize>,
    strides: Vec<usize>,
    total: usize,
}

impl MixedRadix {
    /// Build a code from per-agent sizes. Every size must be at least 1.
    pub fn new(sizes: &[usize]) -> Self {
        assert!(!sizes.is_empty(), "mixed-radix code needs at least one digit");
        assert!(sizes.iter().all(|&s| s >= 1), "digit sizes must be >= 1");
        let mut strides = vec![1usize; sizes.len()];
        for i in (0..sizes.len() - 1).rev() {
            strides[i] = strides[i + 1] * sizes[i + 1];
        }
        let total = strides[0] * sizes[0];
        Self { sizes: sizes.to_vec(), strides, total }
    }

    /// Number of digits (agents).
    pub fn num_digits(&self) -> usize {
        self.sizes.len()
    }

    /// Per-digit sizes.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Total number of joint indices.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Encode per-agent digits into a joint index.
    pub fn encode(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.sizes.len());
        let mut idx = 0;
        for (i, &d) in digits.iter().enumerate() {
            debug_assert!(d < self.sizes[i]);
            idx += d * self.strides[i];
        }
        idx
    }

    /// Decode a joint index into per-agent digits.
    pub fn decode(&self, idx: usize) -> Vec<usize> {
        debug_assert!(idx < self.total);
        self.strides
            .iter()
            .zip(&self.sizes)
            .map(|(&st, &sz)| (idx / st) % sz)
            .collect()
    }

    /// Extract a single agent's digit from a joint index.
    pub fn digit(&self, idx: usize, agent: usize) -> usize {
        (idx / self.strides[agent]) % self.sizes[agent]
    }
}

/// Index bridge between a joint code and the code with one agent removed.
///
/// Used throughout the dropout machinery to project pre-dropout joint
/// indices onto the remaining agents and to embed them back.
#[derive(Debug, Clone)]
pub struct DropIndex {
    full: MixedRadix,
    reduced: MixedRadix,
    dropped: usize,
}

impl DropIndex {
    pub fn new(sizes: &[usize], dropped: usize) -> Self {
        assert!(dropped < sizes.len());
        assert!(sizes.len() >= 2, "cannot drop the only agent");
        let reduced_sizes: Vec<usize> = sizes
            .iter()
            .enumerate()
            .filter(|(n, _)| *n != dropped)
            .map(|(_, &s)| s)
            .collect();
        Self {
            full: MixedRadix::new(sizes),
            reduced: MixedRadix::new(&reduced_sizes),
            dropped,
        }
    }

    pub fn full(&self) -> &MixedRadix {
        &self.full
    }

    pub fn reduced(&self) -> &MixedRadix {
        &self.reduced
    }

    pub fn dropped(&self) -> usize {
        self.dropped
    }

    /// Project a full joint index to (reduced index, dropped agent's digit).
    pub fn project(&self, idx: usize) -> (usize, usize) {
        let digits = self.full.decode(idx);
        let dropped_digit = digits[self.dropped];
        let reduced: Vec<usize> = digits
            .iter()
            .enumerate()
            .filter(|(n, _)| *n != self.dropped)
            .map(|(_, &d)| d)
            .collect();
        (self.reduced.encode(&reduced), dropped_digit)
    }

    /// Embed a reduced index plus a digit for the dropped agent.
    pub fn embed(&self, reduced_idx: usize, dropped_digit: usize) -> usize {
        let reduced = self.reduced.decode(reduced_idx);
        let mut digits = Vec::with_capacity(self.full.num_digits());
        let mut it = reduced.into_iter();
        for n in 0..self.full.num_digits() {
            if n == self.dropped {
                digits.push(dropped_digit);
            } else {
                digits.push(it.next().expect("reduced digit"));
            }
        }
        self.full.encode(&digits)
    }
}
