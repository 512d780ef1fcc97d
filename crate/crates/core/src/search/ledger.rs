//! Per-vertex record of coloured inward darts, keyed by rotation position.
//!
//! Occupied positions live in a Fenwick tree so that cyclic predecessor and
//! successor queries, insertion and removal are all `O(log deg)`. The ledger
//! also tracks the number of colour changes between cyclically consecutive
//! occupied positions: a vertex whose coloured darts split into at most one
//! red and one blue block has at most two alternations.

use super::Color;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ledger {
    colors: Vec<Option<Color>>,
    tree: Vec<u32>,
    red_tree: Vec<u32>,
    counts: [u32; 2],
    alternations: u32,
}

impl Ledger {
    pub fn new(degree: usize) -> Self {
        Ledger {
            colors: vec![None; degree],
            tree: vec![0; degree + 1],
            red_tree: vec![0; degree + 1],
            counts: [0; 2],
            alternations: 0,
        }
    }

    pub fn len(&self) -> usize {
        (self.counts[0] + self.counts[1]) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn count(&self, c: Color) -> usize {
        self.counts[c as usize] as usize
    }

    pub fn alternations(&self) -> u32 {
        self.alternations
    }

    #[inline]
    pub fn color_at(&self, pos: usize) -> Option<Color> {
        self.colors[pos]
    }

    fn add(tree: &mut [u32], pos: usize, delta: i32) {
        let mut i = pos + 1;
        while i < tree.len() {
            tree[i] = (tree[i] as i32 + delta) as u32;
            i += i & i.wrapping_neg();
        }
    }

    fn prefix(tree: &[u32], pos: usize) -> u32 {
        let mut i = pos;
        let mut sum = 0;
        while i > 0 {
            sum += tree[i];
            i &= i - 1;
        }
        sum
    }

    /// Number of occupied positions in `[0, pos)`.
    fn rank(&self, pos: usize) -> u32 {
        Self::prefix(&self.tree, pos)
    }

    fn rank_of(&self, pos: usize, c: Color) -> u32 {
        let red = Self::prefix(&self.red_tree, pos);
        match c {
            Color::Red => red,
            Color::Blue => self.rank(pos) - red,
        }
    }

    /// Position of the `k`-th occupied slot, 1-based.
    fn select(&self, mut k: u32) -> usize {
        let mut pos = 0;
        let mut step = (self.tree.len() - 1).next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next < self.tree.len() && self.tree[next] < k {
                pos = next;
                k -= self.tree[next];
            }
            step >>= 1;
        }
        pos
    }

    /// Nearest occupied position strictly before `pos`, cyclically; may wrap
    /// around to `pos` itself only if `pos` is the single occupied slot.
    pub fn predecessor(&self, pos: usize) -> Option<usize> {
        let total = self.len() as u32;
        if total == 0 {
            return None;
        }
        let r = self.rank(pos);
        Some(if r > 0 { self.select(r) } else { self.select(total) })
    }

    /// Nearest occupied position strictly after `pos`, cyclically.
    pub fn successor(&self, pos: usize) -> Option<usize> {
        let total = self.len() as u32;
        if total == 0 {
            return None;
        }
        let r = self.rank(pos + 1);
        Some(if r < total { self.select(r + 1) } else { self.select(1) })
    }

    /// Occupied positions of colour `c` strictly inside the cyclic interval
    /// running counterclockwise from `from` to `to`.
    pub fn count_between(&self, from: usize, to: usize, c: Color) -> usize {
        let upto = |p: usize| self.rank_of(p, c) as usize;
        if from < to {
            upto(to) - upto(from + 1)
        } else {
            self.count(c) - upto(from + 1) + upto(to)
        }
    }

    fn pair_changes(&self, a: usize, b: usize) -> u32 {
        (self.colors[a] != self.colors[b]) as u32
    }

    pub fn insert(&mut self, pos: usize, c: Color) {
        debug_assert!(self.colors[pos].is_none());
        if !self.is_empty() {
            let p = self.predecessor(pos).unwrap();
            let s = self.successor(pos).unwrap();
            let before = if p == s { 0 } else { self.pair_changes(p, s) };
            self.colors[pos] = Some(c);
            let after = self.pair_changes(p, pos) + self.pair_changes(pos, s);
            self.alternations = self.alternations + after - before;
        } else {
            self.colors[pos] = Some(c);
        }
        Self::add(&mut self.tree, pos, 1);
        if c == Color::Red {
            Self::add(&mut self.red_tree, pos, 1);
        }
        self.counts[c as usize] += 1;
    }

    pub fn remove(&mut self, pos: usize) {
        let c = self.colors[pos].expect("removing an empty ledger slot");
        Self::add(&mut self.tree, pos, -1);
        if c == Color::Red {
            Self::add(&mut self.red_tree, pos, -1);
        }
        self.counts[c as usize] -= 1;
        if !self.is_empty() {
            let p = self.predecessor(pos).unwrap();
            let s = self.successor(pos).unwrap();
            let before = self.pair_changes(p, pos) + self.pair_changes(pos, s);
            self.colors[pos] = None;
            let after = if p == s { 0 } else { self.pair_changes(p, s) };
            self.alternations = self.alternations + after - before;
        } else {
            self.colors[pos] = None;
            self.alternations = 0;
        }
    }
}
