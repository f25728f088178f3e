//! Set partitions in restricted-growth-string order.
//!
//! A partition of `{0, .., n-1}` is encoded by the string `a` with `a[i]` the
//! block index of element `i`, subject to `a[0] = 0` and
//! `a[i] <= max(a[0..i]) + 1`. Successor computation scans for the rightmost
//! position that can still grow, increments it, and resets everything to its
//! right to zero, which enumerates the strings in lexicographic order starting
//! from the one-block partition.

/// Iterator over all restricted growth strings of length `n`.
///
/// For `n = 0` it yields the single empty partition.
pub struct RestrictedGrowthStrings {
    current: Vec<u8>,
    prefix_max: Vec<u8>,
    done: bool,
}

impl RestrictedGrowthStrings {
    pub fn new(n: usize) -> Self {
        RestrictedGrowthStrings {
            current: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowthStrings {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        // Find the rightmost position that can be incremented.
        let mut j = n;
        loop {
            if j <= 1 {
                self.done = true;
                return Some(out);
            }
            j -= 1;
            if self.current[j] <= self.prefix_max[j - 1] {
                break;
            }
        }
        self.current[j] += 1;
        self.prefix_max[j] = self.prefix_max[j - 1].max(self.current[j]);
        for i in (j + 1)..n {
            self.current[i] = 0;
            self.prefix_max[i] = self.prefix_max[i - 1];
        }
        Some(out)
    }
}

/// Groups `elements` into the blocks described by a restricted growth string
/// of the same length.
pub fn blocks_of(elements: &[u64], rgs: &[u8]) -> Vec<Vec<u64>> {
    let block_count = rgs.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut blocks = vec![Vec::new(); block_count];
    for (&e, &b) in elements.iter().zip(rgs) {
        blocks[b as usize].push(e);
    }
    blocks
}

/// The Bell numbers count set partitions; used to sanity-check enumeration.
pub fn bell_number(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("rows are nonempty"));
        for v in &row {
            next.push(next.last().expect("just pushed") + v);
        }
        row = next;
    }
    row[0]
}
