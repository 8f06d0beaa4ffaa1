//! Bit-set rows and downward-closed selections of poset elements.

use std::sync::Arc;

use crate::poset::{ElementId, OgPoset, Sign};
use crate::Error;

/// A fixed-width set of indices backed by 64-bit blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    blocks: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow {
            blocks: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] &= !(1 << (i % 64));
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn union_with(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &BitRow) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    /// Indices present in the row, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(w, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let t = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(w * 64 + t)
                }
            })
        })
    }
}

impl std::fmt::Debug for BitRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A downward-closed subset of an oriented graded poset, one bit row per grade.
///
/// Closedness is an invariant: every constructor either computes a closure or
/// verifies that the given elements are already closed.
#[derive(Clone)]
pub struct ClosedSubset {
    poset: Arc<OgPoset>,
    rows: Vec<BitRow>,
}

impl PartialEq for ClosedSubset {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.poset, &other.poset) || self.poset == other.poset)
            && self.rows == other.rows
    }
}
impl Eq for ClosedSubset {}

impl std::fmt::Debug for ClosedSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl ClosedSubset {
    fn blank(poset: Arc<OgPoset>) -> Self {
        let rows = (0..poset.grade_total())
            .map(|n| BitRow::new(poset.grade_size(n)))
            .collect();
        ClosedSubset { poset, rows }
    }

    pub fn empty(poset: Arc<OgPoset>) -> Self {
        Self::blank(poset)
    }

    pub fn full(poset: Arc<OgPoset>) -> Self {
        let mut s = Self::blank(poset);
        for row in &mut s.rows {
            for i in 0..row.len() {
                row.insert(i);
            }
        }
        s
    }

    /// Smallest closed subset containing `seed`.
    pub fn closure(poset: Arc<OgPoset>, seed: &[ElementId]) -> Result<Self, Error> {
        let mut s = Self::blank(poset);
        for &x in seed {
            if !s.poset.contains(x) {
                return Err(Error::InvalidElement(x));
            }
            s.rows[x.grade].insert(x.index);
        }
        s.close_down();
        Ok(s)
    }

    /// Wraps an element selection that is already downward closed.
    pub fn from_closed_elements(
        poset: Arc<OgPoset>,
        elements: &[ElementId],
    ) -> Result<Self, Error> {
        let mut s = Self::blank(poset);
        for &x in elements {
            if !s.poset.contains(x) {
                return Err(Error::InvalidElement(x));
            }
            s.rows[x.grade].insert(x.index);
        }
        if !s.is_closed() {
            return Err(Error::NotClosed);
        }
        Ok(s)
    }

    fn close_down(&mut self) {
        for n in (1..self.rows.len()).rev() {
            let indices: Vec<usize> = self.rows[n].iter().collect();
            for i in indices {
                let x = ElementId { grade: n, index: i };
                for sign in [Sign::Minus, Sign::Plus] {
                    for &j in self.poset.faces(x, sign) {
                        self.rows[n - 1].insert(j as usize);
                    }
                }
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        for n in 1..self.rows.len() {
            for i in self.rows[n].iter() {
                let x = ElementId { grade: n, index: i };
                for sign in [Sign::Minus, Sign::Plus] {
                    for &j in self.poset.faces(x, sign) {
                        if !self.rows[n - 1].contains(j as usize) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn poset(&self) -> &Arc<OgPoset> {
        &self.poset
    }

    pub fn contains(&self, x: ElementId) -> bool {
        x.grade < self.rows.len() && x.index < self.rows[x.grade].len() && self.rows[x.grade].contains(x.index)
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(BitRow::count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(BitRow::is_empty)
    }

    /// Dimension of the subset; -1 when empty.
    pub fn dim(&self) -> isize {
        for n in (0..self.rows.len()).rev() {
            if !self.rows[n].is_empty() {
                return n as isize;
            }
        }
        -1
    }

    pub fn row(&self, n: usize) -> &BitRow {
        &self.rows[n]
    }

    /// Elements in canonical order (grade ascending, index ascending).
    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.rows.iter().enumerate().flat_map(|(n, row)| {
            row.iter().map(move |i| ElementId { grade: n, index: i })
        })
    }

    pub fn grade_elements(&self, n: usize) -> impl Iterator<Item = ElementId> + '_ {
        self.rows
            .get(n)
            .into_iter()
            .flat_map(move |row| row.iter().map(move |i| ElementId { grade: n, index: i }))
    }

    pub fn union(&self, other: &ClosedSubset) -> ClosedSubset {
        let mut s = self.clone();
        for (a, b) in s.rows.iter_mut().zip(&other.rows) {
            a.union_with(b);
        }
        s
    }

    pub fn intersection(&self, other: &ClosedSubset) -> ClosedSubset {
        let mut s = self.clone();
        for (a, b) in s.rows.iter_mut().zip(&other.rows) {
            a.intersect_with(b);
        }
        s
    }

    /// Set difference; the result need not be closed, so raw ids are returned.
    pub fn difference_elements(&self, other: &ClosedSubset) -> Vec<ElementId> {
        let mut out = Vec::new();
        for (n, row) in self.rows.iter().enumerate() {
            for i in row.iter() {
                if !other.rows[n].contains(i) {
                    out.push(ElementId { grade: n, index: i });
                }
            }
        }
        out
    }

    pub fn is_subset_of(&self, other: &ClosedSubset) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    /// Elements of the subset covered by no other element of the subset.
    pub fn maximal_elements(&self) -> Vec<ElementId> {
        let mut out = Vec::new();
        for x in self.iter() {
            let mut covered = false;
            for sign in [Sign::Minus, Sign::Plus] {
                for &j in self.poset.cofaces(x, sign) {
                    if self.rows[x.grade + 1].contains(j as usize) {
                        covered = true;
                        break;
                    }
                }
                if covered {
                    break;
                }
            }
            if !covered {
                out.push(x);
            }
        }
        out
    }

    /// The input/output `n`-boundary, or the union of both when `sign` is `None`.
    ///
    /// Defaults to `n = dim - 1`. Faces are counted relative to the subset
    /// itself: a generator is an `n`-element that is an opposite-sign face of
    /// no `(n+1)`-element *of the subset*.
    pub fn boundary(&self, sign: Option<Sign>, n: Option<isize>) -> ClosedSubset {
        match sign {
            Some(s) => self.half_boundary(s, n),
            None => {
                let minus = self.half_boundary(Sign::Minus, n);
                let plus = self.half_boundary(Sign::Plus, n);
                minus.union(&plus)
            }
        }
    }

    fn half_boundary(&self, sign: Sign, n: Option<isize>) -> ClosedSubset {
        let n = n.unwrap_or(self.dim() - 1);
        if n < 0 {
            return ClosedSubset::empty(self.poset.clone());
        }
        let n = n as usize;
        let mut seed: Vec<ElementId> = Vec::new();
        if n < self.rows.len() {
            for i in self.rows[n].iter() {
                let x = ElementId { grade: n, index: i };
                // keep x unless it is a (-sign)-face of some (n+1)-element of the subset
                let mut excluded = false;
                for &j in self.poset.cofaces(x, sign.flip()) {
                    if self.rows[n + 1].contains(j as usize) {
                        excluded = true;
                        break;
                    }
                }
                if !excluded {
                    seed.push(x);
                }
            }
        }
        for x in self.maximal_elements() {
            if (x.grade as isize) < n as isize {
                seed.push(x);
            }
        }
        let mut s = Self::blank(self.poset.clone());
        for x in seed {
            s.rows[x.grade].insert(x.index);
        }
        s.close_down();
        s
    }

    /// Copies the subset out as a standalone poset with canonically relabelled
    /// elements (grade-internal order preserved).
    pub fn extract(&self) -> (OgPoset, SubsetIndex) {
        let grades = (self.dim() + 1).max(0) as usize;
        let mut to_parent: Vec<Vec<u32>> = Vec::new();
        let mut to_sub: Vec<Vec<Option<u32>>> = self
            .rows
            .iter()
            .map(|row| vec![None; row.len()])
            .collect();
        for n in 0..grades {
            let mut parents = Vec::new();
            for (k, i) in self.rows[n].iter().enumerate() {
                to_sub[n][i] = Some(k as u32);
                parents.push(i as u32);
            }
            to_parent.push(parents);
        }
        let mut faces: Vec<Vec<(Vec<usize>, Vec<usize>)>> = Vec::new();
        for n in 0..to_parent.len() {
            let mut row = Vec::new();
            for &pi in &to_parent[n] {
                let x = ElementId { grade: n, index: pi as usize };
                let remap = |sign: Sign| -> Vec<usize> {
                    self.poset
                        .faces(x, sign)
                        .iter()
                        .map(|&j| to_sub[n - 1][j as usize].expect("closed subset") as usize)
                        .collect()
                };
                if n == 0 {
                    row.push((Vec::new(), Vec::new()));
                } else {
                    row.push((remap(Sign::Minus), remap(Sign::Plus)));
                }
            }
            faces.push(row);
        }
        let sub = OgPoset::from_faces(faces);
        (
            sub,
            SubsetIndex {
                to_parent,
                to_sub,
            },
        )
    }
}

/// Index translation produced by [`ClosedSubset::extract`].
pub struct SubsetIndex {
    /// `to_parent[n][k]` = index in the ambient poset of the extracted element `(n, k)`.
    pub to_parent: Vec<Vec<u32>>,
    /// `to_sub[n][i]` = extracted index of ambient element `(n, i)`, if selected.
    pub to_sub: Vec<Vec<Option<u32>>>,
}

impl SubsetIndex {
    pub fn parent_of(&self, x: ElementId) -> ElementId {
        ElementId {
            grade: x.grade,
            index: self.to_parent[x.grade][x.index] as usize,
        }
    }

    pub fn sub_of(&self, x: ElementId) -> Option<ElementId> {
        self.to_sub[x.grade][x.index].map(|k| ElementId {
            grade: x.grade,
            index: k as usize,
        })
    }
}
