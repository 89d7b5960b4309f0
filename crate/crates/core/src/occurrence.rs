//! Occurrence search shared by every checker in the crate.
//!
//! A slot sequence is a list of distinct values interleaved with holes. An
//! occurrence of a pattern is a choice of increasing positions whose non-hole
//! entries are pairwise ordered exactly like the corresponding pattern
//! entries; holes match anything.

use crate::partial::Slot;

struct Search<'a> {
    slots: &'a [Slot],
    pattern: &'a [usize],
    /// (pattern value, slot value) of every non-hole entry chosen so far.
    chosen: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn compatible(&self, pv: usize, sv: usize) -> bool {
        self.chosen.iter().all(|&(q, w)| (q < pv) == (w < sv))
    }

    /// Assign pattern entries `t..last` to positions in `from..end`.
    fn go(&mut self, t: usize, last: usize, from: usize, end: usize) -> bool {
        if t == last {
            return true;
        }
        let need = last - t;
        if end < from + need {
            return false;
        }
        for pos in from..=end - need {
            match self.slots[pos] {
                Slot::Hole => {
                    if self.go(t + 1, last, pos + 1, end) {
                        return true;
                    }
                }
                Slot::Value(v) => {
                    let pv = self.pattern[t];
                    if self.compatible(pv, v) {
                        self.chosen.push((pv, v));
                        let found = self.go(t + 1, last, pos + 1, end);
                        self.chosen.pop();
                        if found {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

/// True when `slots` contains an occurrence of `pattern` (values 1..=l).
pub(crate) fn contains(slots: &[Slot], pattern: &[usize]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    let mut s = Search {
        slots,
        pattern,
        chosen: Vec::with_capacity(pattern.len()),
    };
    s.go(0, pattern.len(), 0, slots.len())
}

/// True when `slots` contains an occurrence of `pattern` that uses the final slot.
pub(crate) fn contains_ending_at_last(slots: &[Slot], pattern: &[usize]) -> bool {
    let Some((&last_slot, prefix)) = slots.split_last() else {
        return false;
    };
    let Some(&last_pv) = pattern.last() else {
        return false;
    };
    let mut s = Search {
        slots: prefix,
        pattern,
        chosen: Vec::with_capacity(pattern.len()),
    };
    if let Slot::Value(v) = last_slot {
        s.chosen.push((last_pv, v));
    }
    s.go(0, pattern.len() - 1, 0, prefix.len())
}

/// Classical containment for sequences of distinct values.
pub(crate) fn contains_values(values: &[usize], pattern: &[usize]) -> bool {
    let slots: Vec<Slot> = values.iter().map(|&v| Slot::Value(v)).collect();
    contains(&slots, pattern)
}
