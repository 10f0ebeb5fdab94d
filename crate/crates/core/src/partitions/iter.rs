use crate::partitions::{Partition, PartitionClass};

/// Enumerates the partitions of `n` in `class`, each exactly once, in
/// descending lexicographic order of part sequences — for `n = 5`:
/// `5; 4+1; 3+2; 3+1+1; 2+2+1; 2+1+1+1; 1+1+1+1+1`.
pub fn partitions_of(n: u32, class: PartitionClass) -> PartitionIter {
    PartitionIter {
        class,
        parts: Vec::new(),
        rems: Vec::new(),
        rem: n,
        state: State::Descend,
    }
}

/// Lazy depth-first generator behind [`partitions_of`].
///
/// The machine keeps the current prefix of parts plus, per level, the
/// remainder that was still unplaced when that level's part was chosen.
/// `Descend` extends the prefix greedily with the largest admissible part;
/// `Backtrack` pops a level and retries with the next smaller candidate.
/// Greedy-largest-first descent is exactly descending lexicographic order.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    class: PartitionClass,
    parts: Vec<u32>,
    rems: Vec<u32>,
    rem: u32,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Descend,
    Backtrack,
    Done,
}

impl PartitionIter {
    fn push_part(&mut self, p: u32) {
        self.rems.push(self.rem);
        self.parts.push(p);
        self.rem -= p;
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            match self.state {
                State::Done => return None,
                State::Descend => {
                    if self.rem == 0 {
                        self.state = State::Backtrack;
                        return Some(Partition::from_desc(self.parts.clone()));
                    }
                    let bound = match self.parts.last() {
                        Some(&prev) => self.class.next_bound(prev),
                        None => self.rem,
                    };
                    match self.class.largest_allowed(self.rem.min(bound)) {
                        Some(p) => self.push_part(p),
                        None => self.state = State::Backtrack,
                    }
                }
                State::Backtrack => match self.parts.pop() {
                    None => self.state = State::Done,
                    Some(p) => {
                        self.rem = self.rems.pop().expect("stacks stay in lockstep");
                        if let Some(next) = self.class.largest_allowed(p - 1) {
                            self.push_part(next);
                            self.state = State::Descend;
                        }
                    }
                },
            }
        }
    }
}
