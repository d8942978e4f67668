//! Dense linear algebra over `F_2` on packed `u64` rows.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        BitMatrix {
            cols,
            stride: cols.div_ceil(64).max(1),
            data: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.data.len() / self.stride
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Appends a row with ones at the given columns. Repeated columns cancel.
    pub fn push_row(&mut self, ones: impl IntoIterator<Item = usize>) {
        let start = self.data.len();
        self.data.resize(start + self.stride, 0);
        for c in ones {
            assert!(c < self.cols, "column {c} out of range");
            self.data[start + c / 64] ^= 1 << (c % 64);
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row(r)[c / 64] >> (c % 64) & 1 == 1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (s, st) = (self.stride, self.stride);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * s);
        head[lo * s..lo * s + st].swap_with_slice(&mut tail[..st]);
    }

    /// `row[dst] ^= row[src]`, starting at word `from`.
    fn add_row(&mut self, src: usize, dst: usize, from: usize) {
        let s = self.stride;
        let (src_start, dst_start) = (src * s, dst * s);
        for w in from..s {
            let v = self.data[src_start + w];
            self.data[dst_start + w] ^= v;
        }
    }

    /// Reduces to reduced row echelon form, choosing pivots only among the
    /// first `pivot_cols` columns. Returns the pivot column of each leading
    /// row; rows after the last pivot row have zeros in those columns.
    pub fn reduce(&mut self, pivot_cols: usize) -> Vec<usize> {
        let rows = self.rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols.min(self.cols) {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            let word = c / 64;
            for i in 0..rows {
                if i != r && self.get(i, c) {
                    self.add_row(r, i, word);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.reduce(self.cols).len()
    }

    /// Basis of `{x : M x = 0}` as packed vectors of length `cols`.
    pub fn null_space(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.reduce(self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let words = self.cols.div_ceil(64);
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u64; words];
                v[free / 64] |= 1 << (free % 64);
                for (r, &p) in pivots.iter().enumerate() {
                    if m.get(r, free) {
                        v[p / 64] |= 1 << (p % 64);
                    }
                }
                v
            })
            .collect()
    }

    /// `M v` for a packed vector `v`.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<bool> {
        (0..self.rows())
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
                    & 1
                    == 1
            })
            .collect()
    }
}

/// Solution of `A x = B p` for every parameter vector `p` at once.
///
/// The system is stored as `[A | B]` with `unknowns` columns for `A` and
/// `params` columns for `B`. After elimination each pivot unknown is an
/// affine function of the free unknowns and `p`; zero rows of `A` become
/// linear consistency conditions on `p`.
#[derive(Clone, Debug)]
pub struct ParametricSolution {
    unknowns: usize,
    params: usize,
    /// Pivot unknown and its parameter mask (free unknowns set to zero).
    assignments: Vec<(usize, u64)>,
    free: Vec<usize>,
    /// Each mask must have even overlap with `p`.
    conditions: Vec<u64>,
}

impl ParametricSolution {
    pub fn solve(system: &BitMatrix, unknowns: usize) -> Self {
        let params = system.cols() - unknowns;
        assert!(params <= 64, "at most 64 parameters are supported");
        let mut m = system.clone();
        let pivots = m.reduce(unknowns);
        let param_mask = |m: &BitMatrix, r: usize| -> u64 {
            (0..params).fold(0u64, |acc, k| acc | (m.get(r, unknowns + k) as u64) << k)
        };
        let assignments = pivots
            .iter()
            .enumerate()
            .map(|(r, &c)| (c, param_mask(&m, r)))
            .collect();
        let conditions = (pivots.len()..m.rows())
            .map(|r| param_mask(&m, r))
            .filter(|&mask| mask != 0)
            .collect();
        let mut is_pivot = vec![false; unknowns];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        ParametricSolution {
            unknowns,
            params,
            assignments,
            free: (0..unknowns).filter(|&c| !is_pivot[c]).collect(),
            conditions,
        }
    }

    pub fn params(&self) -> usize {
        self.params
    }

    /// Dimension of the solution set for a consistent `p`.
    pub fn nullity(&self) -> usize {
        self.free.len()
    }

    pub fn is_consistent(&self, p: u64) -> bool {
        self.conditions.iter().all(|&c| (c & p).count_ones().is_multiple_of(2))
    }

    /// A particular solution (free unknowns zero) as packed words, or `None`
    /// when `p` is inconsistent.
    pub fn evaluate(&self, p: u64) -> Option<Vec<u64>> {
        if !self.is_consistent(p) {
            return None;
        }
        let mut x = vec![0u64; self.unknowns.div_ceil(64)];
        for &(c, mask) in &self.assignments {
            if (mask & p).count_ones() % 2 == 1 {
                x[c / 64] |= 1 << (c % 64);
            }
        }
        Some(x)
    }
}
