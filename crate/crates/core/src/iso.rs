//! Orientation-preserving isomorphisms of oriented graded posets.
//!
//! Search is backtracking over grade-wise assignments, seeded by an iterated
//! signature refinement on (sign, direction)-typed adjacency. Molecules are
//! rigid, so searches on them terminate with at most one result; the general
//! search still works on arbitrary desk-scale posets.

use std::collections::HashMap;

use crate::poset::{ElementId, OgPoset, Sign};

/// A grade-indexed bijection between two posets preserving signed faces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OgIso {
    forward: Vec<Vec<u32>>,
}

impl OgIso {
    pub fn identity(p: &OgPoset) -> OgIso {
        OgIso {
            forward: p
                .grade_sizes()
                .iter()
                .map(|&k| (0..k as u32).collect())
                .collect(),
        }
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        ElementId {
            grade: x.grade,
            index: self.forward[x.grade][x.index] as usize,
        }
    }

    pub fn inverse(&self) -> OgIso {
        let mut forward: Vec<Vec<u32>> = self
            .forward
            .iter()
            .map(|row| vec![0; row.len()])
            .collect();
        for (n, row) in self.forward.iter().enumerate() {
            for (i, &j) in row.iter().enumerate() {
                forward[n][j as usize] = i as u32;
            }
        }
        OgIso { forward }
    }

    pub fn is_identity(&self) -> bool {
        self.forward
            .iter()
            .all(|row| row.iter().enumerate().all(|(i, &j)| i as u32 == j))
    }

    pub fn grade_rows(&self) -> &[Vec<u32>] {
        &self.forward
    }
}

/// All isomorphisms `p -> q`, up to `limit` of them, in lexicographic order of
/// their assignment vectors.
pub fn isomorphisms(p: &OgPoset, q: &OgPoset, limit: usize) -> Vec<OgIso> {
    if p.grade_sizes() != q.grade_sizes() || limit == 0 {
        return Vec::new();
    }
    if p.is_empty() {
        return vec![OgIso { forward: Vec::new() }];
    }
    let colors_p = refine(p);
    let colors_q = refine(q);
    {
        // color multisets must match grade-wise
        let mut mp: Vec<Vec<u64>> = colors_p.clone();
        let mut mq: Vec<Vec<u64>> = colors_q.clone();
        for (a, b) in mp.iter_mut().zip(mq.iter_mut()) {
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Vec::new();
            }
        }
    }

    // bucket q's elements by (grade, faces) for exact-match candidate lookup
    let mut buckets: Vec<HashMap<(Vec<u32>, Vec<u32>), Vec<u32>>> = Vec::new();
    for n in 0..q.grade_total() {
        let mut map: HashMap<(Vec<u32>, Vec<u32>), Vec<u32>> = HashMap::new();
        for i in 0..q.grade_size(n) {
            let y = ElementId::new(n, i);
            let key = (q.faces(y, Sign::Minus).to_vec(), q.faces(y, Sign::Plus).to_vec());
            map.entry(key).or_default().push(i as u32);
        }
        buckets.push(map);
    }

    let order: Vec<ElementId> = p.elements().collect();
    let mut assign: Vec<Vec<Option<u32>>> = p
        .grade_sizes()
        .iter()
        .map(|&k| vec![None; k])
        .collect();
    let mut used: Vec<Vec<bool>> = p
        .grade_sizes()
        .iter()
        .map(|&k| vec![false; k])
        .collect();
    let mut found = Vec::new();
    search(
        p,
        q,
        &colors_p,
        &colors_q,
        &buckets,
        &order,
        0,
        &mut assign,
        &mut used,
        &mut found,
        limit,
    );
    found
}

pub fn find_isomorphism(p: &OgPoset, q: &OgPoset) -> Option<OgIso> {
    isomorphisms(p, q, 1).pop()
}

#[allow(clippy::too_many_arguments)]
fn search(
    p: &OgPoset,
    q: &OgPoset,
    colors_p: &[Vec<u64>],
    colors_q: &[Vec<u64>],
    buckets: &[HashMap<(Vec<u32>, Vec<u32>), Vec<u32>>],
    order: &[ElementId],
    pos: usize,
    assign: &mut Vec<Vec<Option<u32>>>,
    used: &mut Vec<Vec<bool>>,
    found: &mut Vec<OgIso>,
    limit: usize,
) {
    if found.len() >= limit {
        return;
    }
    if pos == order.len() {
        found.push(OgIso {
            forward: assign
                .iter()
                .map(|row| row.iter().map(|v| v.unwrap()).collect())
                .collect(),
        });
        return;
    }
    let x = order[pos];
    let candidates: Vec<u32> = if x.grade == 0 {
        (0..q.grade_size(0) as u32).collect()
    } else {
        // faces of x are already assigned; require an exact face match
        let map_faces = |sign: Sign| -> Vec<u32> {
            let mut v: Vec<u32> = p
                .faces(x, sign)
                .iter()
                .map(|&j| assign[x.grade - 1][j as usize].unwrap())
                .collect();
            v.sort_unstable();
            v
        };
        let key = (map_faces(Sign::Minus), map_faces(Sign::Plus));
        buckets[x.grade].get(&key).cloned().unwrap_or_default()
    };
    for cand in candidates {
        let i = cand as usize;
        if used[x.grade][i] || colors_p[x.grade][x.index] != colors_q[x.grade][i] {
            continue;
        }
        assign[x.grade][x.index] = Some(cand);
        used[x.grade][i] = true;
        search(
            p, q, colors_p, colors_q, buckets, order, pos + 1, assign, used, found, limit,
        );
        used[x.grade][i] = false;
        assign[x.grade][x.index] = None;
        if found.len() >= limit {
            return;
        }
    }
}

/// Iterated signature refinement. Signatures of corresponding elements in
/// isomorphic posets coincide, so distinct signatures prune the search.
fn refine(p: &OgPoset) -> Vec<Vec<u64>> {
    let mut colors: Vec<Vec<u64>> = p
        .grade_sizes()
        .iter()
        .enumerate()
        .map(|(n, &k)| vec![n as u64; k])
        .collect();
    let rounds = p.grade_total().max(2);
    for _ in 0..rounds {
        let mut next: Vec<Vec<u64>> = Vec::with_capacity(colors.len());
        for n in 0..p.grade_total() {
            let mut row = Vec::with_capacity(p.grade_size(n));
            for i in 0..p.grade_size(n) {
                let x = ElementId::new(n, i);
                let mut sig: Vec<u64> = vec![colors[n][i]];
                for sign in [Sign::Minus, Sign::Plus] {
                    let mut below: Vec<u64> = p
                        .faces(x, sign)
                        .iter()
                        .map(|&j| colors[n - 1_usize.min(n)][j as usize])
                        .collect();
                    below.sort_unstable();
                    sig.push(u64::MAX); // separator
                    sig.extend(below);
                    let mut above: Vec<u64> = p
                        .cofaces(x, sign)
                        .iter()
                        .map(|&j| colors[n + 1][j as usize])
                        .collect();
                    above.sort_unstable();
                    sig.push(u64::MAX - 1);
                    sig.extend(above);
                }
                row.push(fnv(&sig));
            }
            next.push(row);
        }
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

fn fnv(values: &[u64]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &v in values {
        for byte in v.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}
