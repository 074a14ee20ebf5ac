//! Backtracking over fillings visited in a fixed reading order.
//!
//! Every tableau family in this crate (SSYT in row reading order, ASSYT in
//! column reading order, and ASSYT/SSYT pairs) reduces to: a list of cells,
//! and for each cell a set of order relations against cells read earlier.

use crate::partition::{Cell, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rel {
    /// new entry strictly greater than the earlier one
    Gt,
    /// new entry at most the earlier one
    Le,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Plan {
    pub cells: Vec<Cell>,
    constraints: Vec<Vec<(usize, Rel)>>,
}

impl Plan {
    /// Cells of an SSYT in reverse reading order: rows bottom to top, each
    /// right to left. Rows weakly increase, columns strictly increase upwards.
    pub fn ssyt(shape: &SkewShape) -> Plan {
        let mut plan = Plan::default();
        plan.append_ssyt(shape);
        plan
    }

    pub fn append_ssyt(&mut self, shape: &SkewShape) {
        let mut index = std::collections::HashMap::new();
        for r in 0..shape.rows() {
            for c in shape.row_range(r).rev() {
                let cell = Cell::new(r, c);
                let mut cons = Vec::new();
                if let Some(&i) = index.get(&Cell::new(r, c + 1)) {
                    cons.push((i, Rel::Le));
                }
                if r > 0 {
                    if let Some(&i) = index.get(&Cell::new(r - 1, c)) {
                        cons.push((i, Rel::Gt));
                    }
                }
                index.insert(cell, self.cells.len());
                self.cells.push(cell);
                self.constraints.push(cons);
            }
        }
    }

    /// Cells of an ASSYT in its reading order: columns right to left, each
    /// bottom to top. Rows strictly decrease, columns weakly decrease upwards.
    pub fn assyt(shape: &SkewShape) -> Plan {
        let mut plan = Plan::default();
        plan.append_assyt(shape);
        plan
    }

    pub fn append_assyt(&mut self, shape: &SkewShape) {
        let width = shape.outer().part(0);
        let mut index = std::collections::HashMap::new();
        for c in (0..width).rev() {
            for r in 0..shape.rows() {
                let cell = Cell::new(r, c);
                if !shape.contains_cell(cell) {
                    continue;
                }
                let mut cons = Vec::new();
                if let Some(&i) = index.get(&Cell::new(r, c + 1)) {
                    cons.push((i, Rel::Gt));
                }
                if r > 0 {
                    if let Some(&i) = index.get(&Cell::new(r - 1, c)) {
                        cons.push((i, Rel::Le));
                    }
                }
                index.insert(cell, self.cells.len());
                self.cells.push(cell);
                self.constraints.push(cons);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }
}

/// Search parameters shared by every enumeration.
#[derive(Debug, Clone)]
pub(crate) struct Search {
    pub max_entry: usize,
    /// exact content: `content[i]` copies of `i + 1`
    pub content: Option<Vec<usize>>,
    /// when set, the word must be a lattice word after prefixing these counts
    pub lattice_prefix: Option<Vec<usize>>,
}

impl Search {
    pub fn bounded(max_entry: usize) -> Self {
        Search { max_entry, content: None, lattice_prefix: None }
    }

    pub fn with_content(content: &[usize]) -> Self {
        let mut content = content.to_vec();
        while content.last() == Some(&0) {
            content.pop();
        }
        Search { max_entry: content.len(), content: Some(content), lattice_prefix: None }
    }

    pub fn lattice(mut self, prefix: &[usize]) -> Self {
        self.lattice_prefix = Some(prefix.to_vec());
        self
    }

    /// Visits every admissible word (entries listed in plan order).
    pub fn run(&self, plan: &Plan, mut visit: impl FnMut(&[usize])) {
        if let Some(content) = &self.content {
            if content.iter().sum::<usize>() != plan.len() {
                return;
            }
        }
        let slots = self.max_entry + 2;
        let mut counts = vec![0usize; slots];
        if let Some(prefix) = &self.lattice_prefix {
            if prefix.windows(2).any(|w| w[0] < w[1]) {
                return;
            }
            for (i, &m) in prefix.iter().enumerate() {
                if i + 1 < slots {
                    counts[i + 1] = m;
                }
            }
        }
        let base_counts = counts.clone();
        let mut word = vec![0usize; plan.len()];
        self.step(plan, 0, &mut word, &mut counts, &base_counts, &mut visit);
    }

    pub fn count(&self, plan: &Plan) -> u64 {
        let mut n = 0u64;
        self.run(plan, |_| n += 1);
        n
    }

    fn step(
        &self,
        plan: &Plan,
        pos: usize,
        word: &mut [usize],
        counts: &mut [usize],
        base: &[usize],
        visit: &mut impl FnMut(&[usize]),
    ) {
        if pos == plan.len() {
            visit(word);
            return;
        }
        let mut lo = 1;
        let mut hi = self.max_entry;
        for &(i, rel) in &plan.constraints[pos] {
            match rel {
                Rel::Gt => lo = lo.max(word[i] + 1),
                Rel::Le => hi = hi.min(word[i]),
            }
        }
        for v in lo..=hi {
            if let Some(content) = &self.content {
                if counts[v] - base[v] >= content[v - 1] {
                    continue;
                }
            }
            if self.lattice_prefix.is_some() && v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            counts[v] += 1;
            word[pos] = v;
            self.step(plan, pos + 1, word, counts, base, visit);
            counts[v] -= 1;
        }
    }
}
