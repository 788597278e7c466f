/// Calls `f` on every `k`-subset of `items`, in lexicographic order of
/// positions. Nothing is emitted when `k > items.len()`.
pub(crate) fn for_each_combination<T: Copy>(items: &[T], k: usize, mut f: impl FnMut(&[T])) {
    let n = items.len();
    if k > n {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<T> = idx.iter().map(|&i| items[i]).collect();
    loop {
        f(&buf);
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in pos..k {
            buf[j] = items[idx[j]];
        }
    }
}

/// Calls `f` on the bit mask of every vertex set of size `1..=max_size` that
/// induces a connected subgraph. `masks[v]` is the neighborhood of `v`. Each
/// set is reported once (ESU enumeration rooted at its smallest vertex).
pub(crate) fn for_each_connected_set(masks: &[u64], max_size: usize, mut f: impl FnMut(u64)) {
    fn extend(masks: &[u64], root: usize, sub: u64, closed: u64, ext: u64, left: usize, f: &mut dyn FnMut(u64)) {
        f(sub);
        if left == 0 {
            return;
        }
        let mut ext = ext;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let fresh = masks[w] & !closed & above(root);
            extend(masks, root, sub | 1 << w, closed | masks[w], ext | fresh, left - 1, f);
        }
    }
    fn above(v: usize) -> u64 {
        u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
    }
    if max_size == 0 {
        return;
    }
    for v in 0..masks.len() {
        let closed = masks[v] | 1 << v;
        extend(masks, v, 1 << v, closed, masks[v] & above(v), max_size - 1, &mut f);
    }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Makes `x` a singleton again. Only sound once every member of its old
    /// set is reset too.
    pub fn reset(&mut self, x: usize) {
        self.parent[x] = x;
    }
}
