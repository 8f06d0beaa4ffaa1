//! Maps of regular directed complexes: validation, cartesianness,
//! collapse/inclusion factorisation, fibres, sections, and exhaustive
//! enumeration of the maps between two complexes.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::poset::{DownSets, ElementId, OgPoset, Sign};
use crate::subset::ClosedSubset;
use crate::Error;

/// A grade-indexed assignment between two posets, with lazily computed
/// validity flags. The assignment is dimension-non-increasing by construction;
/// the remaining map axioms are checked by [`RdcMap::validate`].
#[derive(Clone)]
pub struct RdcMap {
    source: Arc<OgPoset>,
    target: Arc<OgPoset>,
    assign: Vec<Vec<ElementId>>,
    flag_map: OnceLock<bool>,
    flag_cartesian: OnceLock<bool>,
}

impl PartialEq for RdcMap {
    fn eq(&self, other: &Self) -> bool {
        self.assign == other.assign
            && (Arc::ptr_eq(&self.source, &other.source) || self.source == other.source)
            && (Arc::ptr_eq(&self.target, &other.target) || self.target == other.target)
    }
}
impl Eq for RdcMap {}

impl std::fmt::Debug for RdcMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RdcMap{:?}", self.assign)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapIssue {
    DimensionRaising(ElementId),
    NotOrderPreserving { element: ElementId, face: ElementId },
    NotClosed { element: ElementId, missing: ElementId },
    BoundaryMismatch { element: ElementId, n: usize, sign: Sign },
    NotFinal { element: ElementId, n: usize, sign: Sign },
}

impl std::fmt::Display for MapIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MapIssue::DimensionRaising(x) => write!(f, "dimension raised at {x}"),
            MapIssue::NotOrderPreserving { element, face } => {
                write!(f, "order not preserved on {face} < {element}")
            }
            MapIssue::NotClosed { element, missing } => {
                write!(f, "image of closure of {element} misses {missing}")
            }
            MapIssue::BoundaryMismatch { element, n, sign } => {
                write!(f, "boundary preservation fails at {element} (n={n}, sign={sign})")
            }
            MapIssue::NotFinal { element, n, sign } => {
                write!(f, "finality fails within boundary of {element} (n={n}, sign={sign})")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct MapReport {
    pub issues: Vec<MapIssue>,
}

impl MapReport {
    pub fn is_map(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Outcome of the cartesian-lift check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartesianCheck {
    Cartesian,
    /// `below_image <= f(at)` has no cartesian lift under `at`.
    Failure { at: ElementId, below_image: ElementId },
}

impl CartesianCheck {
    pub fn holds(&self) -> bool {
        matches!(self, CartesianCheck::Cartesian)
    }
}

impl RdcMap {
    pub fn new(
        source: Arc<OgPoset>,
        target: Arc<OgPoset>,
        assign: Vec<Vec<ElementId>>,
    ) -> Result<RdcMap, Error> {
        if assign.len() != source.grade_total()
            || assign
                .iter()
                .enumerate()
                .any(|(n, row)| row.len() != source.grade_size(n))
        {
            return Err(Error::Precondition(
                "assignment shape does not match source".into(),
            ));
        }
        for (n, row) in assign.iter().enumerate() {
            for (i, &t) in row.iter().enumerate() {
                if !target.contains(t) {
                    return Err(Error::InvalidElement(t));
                }
                if t.grade > n {
                    return Err(Error::Precondition(format!(
                        "assignment raises dimension at {}",
                        ElementId::new(n, i)
                    )));
                }
            }
        }
        Ok(RdcMap {
            source,
            target,
            assign,
            flag_map: OnceLock::new(),
            flag_cartesian: OnceLock::new(),
        })
    }

    pub fn identity(p: Arc<OgPoset>) -> RdcMap {
        let assign = p
            .grade_sizes()
            .iter()
            .enumerate()
            .map(|(n, &k)| (0..k).map(|i| ElementId::new(n, i)).collect())
            .collect();
        RdcMap::new(p.clone(), p, assign).expect("identity is well-formed")
    }

    /// The inclusion of a closed subset into its ambient poset, with the
    /// subset extracted as a standalone source.
    pub fn inclusion_of(subset: &ClosedSubset) -> RdcMap {
        let (sub, index) = subset.extract();
        let assign = sub
            .grade_sizes()
            .iter()
            .enumerate()
            .map(|(n, &k)| {
                (0..k)
                    .map(|i| index.parent_of(ElementId::new(n, i)))
                    .collect()
            })
            .collect();
        RdcMap::new(Arc::new(sub), subset.poset().clone(), assign)
            .expect("subset inclusion is well-formed")
    }

    /// The unique assignment to the point.
    pub fn terminal(source: Arc<OgPoset>) -> RdcMap {
        let target = Arc::new(OgPoset::point());
        let assign = source
            .grade_sizes()
            .iter()
            .map(|&k| vec![ElementId::new(0, 0); k])
            .collect();
        RdcMap::new(source, target, assign).expect("terminal map is well-formed")
    }

    pub fn source(&self) -> &Arc<OgPoset> {
        &self.source
    }

    pub fn target(&self) -> &Arc<OgPoset> {
        &self.target
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.assign[x.grade][x.index]
    }

    pub fn assignment(&self) -> &[Vec<ElementId>] {
        &self.assign
    }

    pub fn compose(outer: &RdcMap, inner: &RdcMap) -> Result<RdcMap, Error> {
        if *inner.target != *outer.source {
            return Err(Error::Precondition(
                "composition targets do not match".into(),
            ));
        }
        let assign = inner
            .assign
            .iter()
            .map(|row| row.iter().map(|&t| outer.apply(t)).collect())
            .collect();
        RdcMap::new(inner.source.clone(), outer.target.clone(), assign)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<Vec<bool>> = self
            .target
            .grade_sizes()
            .iter()
            .map(|&k| vec![false; k])
            .collect();
        for row in &self.assign {
            for &t in row {
                if seen[t.grade][t.index] {
                    return false;
                }
                seen[t.grade][t.index] = true;
            }
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen: Vec<Vec<bool>> = self
            .target
            .grade_sizes()
            .iter()
            .map(|&k| vec![false; k])
            .collect();
        for row in &self.assign {
            for &t in row {
                seen[t.grade][t.index] = true;
            }
        }
        seen.iter().all(|row| row.iter().all(|&b| b))
    }

    /// Full check of the map axioms: closed order-preservation, boundary
    /// preservation on every lower set, and finality of each boundary
    /// restriction (zig-zag connectivity of fibres through elements whose
    /// image stays above the fibre value).
    pub fn validate(&self) -> MapReport {
        let mut issues = Vec::new();
        let down_t = DownSets::new(&self.target);

        for x in self.source.elements() {
            let fx = self.apply(x);
            if fx.grade > x.grade {
                issues.push(MapIssue::DimensionRaising(x));
                continue;
            }
            for face in self.source.all_faces(x) {
                if !down_t.leq(self.apply(face), fx) {
                    issues.push(MapIssue::NotOrderPreserving { element: x, face });
                }
            }
        }
        if !issues.is_empty() {
            self.flag_map.get_or_init(|| false);
            return MapReport { issues };
        }

        let down_s = DownSets::new(&self.source);
        for x in self.source.elements() {
            let fx = self.apply(x);
            let cl_x = ClosedSubset::closure(self.source.clone(), &[x]).expect("valid id");
            let cl_fx = ClosedSubset::closure(self.target.clone(), &[fx]).expect("valid id");

            // closedness: f(cl x) = cl f(x) as sets
            let mut image: Vec<ElementId> = cl_x.iter().map(|z| self.apply(z)).collect();
            image.sort_unstable();
            image.dedup();
            let expected: Vec<ElementId> = cl_fx.iter().collect();
            if image != expected {
                let missing = expected
                    .iter()
                    .find(|t| !image.contains(t))
                    .copied()
                    .unwrap_or(fx);
                issues.push(MapIssue::NotClosed { element: x, missing });
                continue;
            }

            for n in 0..=x.grade {
                for sign in [Sign::Minus, Sign::Plus] {
                    let src_bd = cl_x.boundary(Some(sign), Some(n as isize));
                    if n < x.grade {
                        let tgt_bd = cl_fx.boundary(Some(sign), Some(n as isize));
                        let mut img: Vec<ElementId> =
                            src_bd.iter().map(|z| self.apply(z)).collect();
                        img.sort_unstable();
                        img.dedup();
                        let want: Vec<ElementId> = tgt_bd.iter().collect();
                        if img != want {
                            issues.push(MapIssue::BoundaryMismatch { element: x, n, sign });
                            continue;
                        }
                    }
                    if !self.final_on(&src_bd, &down_s, &down_t) {
                        issues.push(MapIssue::NotFinal { element: x, n, sign });
                    }
                }
            }
        }
        let ok = issues.is_empty();
        self.flag_map.get_or_init(|| ok);
        MapReport { issues }
    }

    /// Zig-zag connectivity of the fibres of the restriction of `self` to
    /// `region`: elements with equal image must be joined by a chain of
    /// comparabilities through elements whose image lies above that value.
    fn final_on(&self, region: &ClosedSubset, down_s: &DownSets, down_t: &DownSets) -> bool {
        let elems: Vec<ElementId> = region.iter().collect();
        let mut by_value: HashMap<ElementId, Vec<usize>> = HashMap::new();
        for (k, &z) in elems.iter().enumerate() {
            by_value.entry(self.apply(z)).or_default().push(k);
        }
        for (&b, fibre) in &by_value {
            if fibre.len() < 2 {
                continue;
            }
            let vertices: Vec<usize> = (0..elems.len())
                .filter(|&k| down_t.leq(b, self.apply(elems[k])))
                .collect();
            // BFS from the first fibre element through comparability edges
            let mut component = vec![false; elems.len()];
            let mut queue = vec![fibre[0]];
            component[fibre[0]] = true;
            while let Some(k) = queue.pop() {
                for &m in &vertices {
                    if !component[m]
                        && (down_s.leq(elems[k], elems[m]) || down_s.leq(elems[m], elems[k]))
                    {
                        component[m] = true;
                        queue.push(m);
                    }
                }
            }
            if fibre.iter().any(|&k| !component[k]) {
                return false;
            }
        }
        true
    }

    /// Cached map validity.
    pub fn is_map(&self) -> bool {
        *self.flag_map.get_or_init(|| self.validate().is_map())
    }

    /// Grothendieck-fibration check on the underlying order map: every
    /// `y <= f(x)` must have a greatest lift below `x`.
    pub fn cartesian_check(&self) -> CartesianCheck {
        let down_s = DownSets::new(&self.source);
        let down_t = DownSets::new(&self.target);
        for x in self.source.elements() {
            let fx = self.apply(x);
            for y in self.target.elements() {
                if !down_t.leq(y, fx) {
                    continue;
                }
                let lifts: Vec<ElementId> = self
                    .source
                    .elements()
                    .filter(|&z| down_s.leq(z, x) && down_t.leq(self.apply(z), y))
                    .collect();
                let greatest = lifts
                    .iter()
                    .find(|&&w| lifts.iter().all(|&z| down_s.leq(z, w)));
                match greatest {
                    Some(&w) if self.apply(w) == y => {}
                    _ => {
                        self.flag_cartesian.get_or_init(|| false);
                        return CartesianCheck::Failure { at: x, below_image: y };
                    }
                }
            }
        }
        self.flag_cartesian.get_or_init(|| true);
        CartesianCheck::Cartesian
    }

    pub fn is_cartesian(&self) -> bool {
        *self
            .flag_cartesian
            .get_or_init(|| self.cartesian_check().holds())
    }

    pub fn is_inclusion(&self) -> bool {
        self.is_injective() && self.is_map()
    }

    /// Surjective cartesian map between posets with greatest elements.
    pub fn is_collapse(&self) -> bool {
        self.source.greatest().is_some()
            && self.target.greatest().is_some()
            && self.is_surjective()
            && self.is_map()
            && self.is_cartesian()
    }

    pub fn image(&self) -> ClosedSubset {
        let mut elements: Vec<ElementId> = self
            .assign
            .iter()
            .flat_map(|row| row.iter().copied())
            .collect();
        elements.sort_unstable();
        elements.dedup();
        ClosedSubset::from_closed_elements(self.target.clone(), &elements)
            .expect("image of a map is closed")
    }

    /// Factors the map as a surjection onto its image followed by the subset
    /// inclusion. The middle object is canonically relabelled, which pins the
    /// factorisation uniquely.
    pub fn factorize(&self) -> Result<(RdcMap, RdcMap), Error> {
        if !self.is_map() {
            return Err(Error::Precondition("factorize requires a valid map".into()));
        }
        if !self.is_cartesian() {
            return Err(Error::Precondition(
                "factorize requires a cartesian map".into(),
            ));
        }
        let image = self.image();
        let inclusion = RdcMap::inclusion_of(&image);
        let (_, index) = image.extract();
        let mid = inclusion.source().clone();
        let assign = self
            .assign
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&t| index.sub_of(t).expect("image element"))
                    .collect()
            })
            .collect();
        let surjection = RdcMap::new(self.source.clone(), mid, assign)?;
        Ok((surjection, inclusion))
    }

    /// Eilenberg--Zilber decomposition of a cell: collapse part followed by
    /// the non-degenerate part, which is the inclusion of the image.
    pub fn ez_decompose(&self) -> Result<(RdcMap, RdcMap), Error> {
        self.factorize()
    }

    pub fn fibre(&self, y: ElementId) -> Vec<ElementId> {
        self.source
            .elements()
            .filter(|&x| self.apply(x) == y)
            .collect()
    }

    /// Greatest element of a fibre of a collapse.
    pub fn fibre_greatest(&self, y: ElementId) -> Result<ElementId, Error> {
        let fibre = self.fibre(y);
        let down = DownSets::new(&self.source);
        fibre
            .iter()
            .find(|&&w| fibre.iter().all(|&z| down.leq(z, w)))
            .copied()
            .ok_or_else(|| Error::Precondition(format!("fibre of {y} has no greatest element")))
    }

    pub fn fibre_minimal(&self, y: ElementId) -> Vec<ElementId> {
        let fibre = self.fibre(y);
        let down = DownSets::new(&self.source);
        fibre
            .iter()
            .filter(|&&z| !fibre.iter().any(|&w| w != z && down.leq(w, z)))
            .copied()
            .collect()
    }

    /// One section per minimal element of the fibre of the greatest target
    /// element; each is the inclusion of that element's lower set transported
    /// along the collapse.
    pub fn sections(&self) -> Result<Vec<RdcMap>, Error> {
        if !self.is_collapse() {
            return Err(Error::Precondition(
                "sections require a collapse of atoms".into(),
            ));
        }
        let top = self
            .target
            .greatest()
            .ok_or_else(|| Error::Precondition("target has no greatest element".into()))?;
        let mut sections = Vec::new();
        for z in self.fibre_minimal(top) {
            let cl_z = ClosedSubset::closure(self.source.clone(), &[z])?;
            // the collapse restricts to a bijection cl z -> target
            let mut table: Vec<Vec<Option<ElementId>>> = self
                .target
                .grade_sizes()
                .iter()
                .map(|&k| vec![None; k])
                .collect();
            for w in cl_z.iter() {
                let t = self.apply(w);
                if table[t.grade][t.index].replace(w).is_some() {
                    return Err(Error::Precondition(format!(
                        "collapse is not injective on the lower set of {z}"
                    )));
                }
            }
            let assign: Vec<Vec<ElementId>> = table
                .into_iter()
                .enumerate()
                .map(|(n, row)| {
                    row.into_iter()
                        .enumerate()
                        .map(|(i, v)| {
                            v.ok_or_else(|| {
                                Error::Precondition(format!(
                                    "lower set of {z} misses a preimage of {}",
                                    ElementId::new(n, i)
                                ))
                            })
                        })
                        .collect::<Result<_, _>>()
                })
                .collect::<Result<_, _>>()?;
            let section = RdcMap::new(self.target.clone(), self.source.clone(), assign)?;
            debug_assert_eq!(
                RdcMap::compose(self, &section).unwrap(),
                RdcMap::identity(self.target.clone())
            );
            sections.push(section);
        }
        Ok(sections)
    }
}

/// Minimal upper bounds of `a` and `b`: upper bounds with no smaller upper
/// bound below them.
pub fn minimal_upper_bounds(p: &OgPoset, a: ElementId, b: ElementId) -> Vec<ElementId> {
    let down = DownSets::new(p);
    let uppers: Vec<ElementId> = p
        .elements()
        .filter(|&z| down.leq(a, z) && down.leq(b, z))
        .collect();
    uppers
        .iter()
        .filter(|&&z| !uppers.iter().any(|&w| w != z && down.leq(w, z)))
        .copied()
        .collect()
}

/// Exhaustive enumeration of the valid (optionally cartesian) maps `u -> p`,
/// in lexicographic order of their assignments.
///
/// Candidates are pruned through the boundary tables of the target: once the
/// image of a covering element is fixed, an element must land in the matching
/// boundary of that image's lower set.
pub fn enumerate_maps(u: &Arc<OgPoset>, p: &Arc<OgPoset>, cartesian_only: bool) -> Vec<RdcMap> {
    if u.is_empty() {
        let empty = RdcMap::new(u.clone(), p.clone(), Vec::new()).expect("empty map");
        return vec![empty];
    }
    if p.is_empty() {
        return Vec::new();
    }
    // order: grade descending so cofaces are assigned before their faces
    let mut order: Vec<ElementId> = u.elements().collect();
    order.sort_by(|a, b| b.grade.cmp(&a.grade).then(a.index.cmp(&b.index)));

    // boundary element sets of every lower set of the target
    let mut tgt_boundary: HashMap<(ElementId, usize, Sign), Vec<ElementId>> = HashMap::new();
    for t in p.elements() {
        let cl = ClosedSubset::closure(p.clone(), &[t]).expect("valid id");
        for n in 0..=t.grade {
            for sign in [Sign::Minus, Sign::Plus] {
                let bd = cl.boundary(Some(sign), Some(n as isize));
                tgt_boundary.insert((t, n, sign), bd.iter().collect());
            }
        }
    }

    let mut assign: Vec<Vec<Option<ElementId>>> = u
        .grade_sizes()
        .iter()
        .map(|&k| vec![None; k])
        .collect();
    let mut out = Vec::new();
    enumerate_rec(
        u,
        p,
        cartesian_only,
        &order,
        0,
        &tgt_boundary,
        &mut assign,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    u: &Arc<OgPoset>,
    p: &Arc<OgPoset>,
    cartesian_only: bool,
    order: &[ElementId],
    pos: usize,
    tgt_boundary: &HashMap<(ElementId, usize, Sign), Vec<ElementId>>,
    assign: &mut Vec<Vec<Option<ElementId>>>,
    out: &mut Vec<RdcMap>,
) {
    if pos == order.len() {
        let full: Vec<Vec<ElementId>> = assign
            .iter()
            .map(|row| row.iter().map(|v| v.unwrap()).collect())
            .collect();
        if let Ok(map) = RdcMap::new(u.clone(), p.clone(), full) {
            if map.is_map() && (!cartesian_only || map.is_cartesian()) {
                out.push(map);
            }
        }
        return;
    }
    let x = order[pos];
    let mut candidates: Option<Vec<ElementId>> = None;
    for sign in [Sign::Minus, Sign::Plus] {
        for y in u.coface_ids(x, sign) {
            // when x sits in the sign-boundary of y, its image must sit in
            // the same boundary of the image's lower set
            let fy = assign[y.grade][y.index].expect("cofaces assigned first");
            let allowed = &tgt_boundary[&(fy, x.grade, sign)];
            candidates = Some(match candidates {
                None => allowed.clone(),
                Some(prev) => prev.into_iter().filter(|t| allowed.contains(t)).collect(),
            });
        }
    }
    let candidates =
        candidates.unwrap_or_else(|| p.elements().filter(|t| t.grade <= x.grade).collect());
    for t in candidates {
        assign[x.grade][x.index] = Some(t);
        enumerate_rec(u, p, cartesian_only, order, pos + 1, tgt_boundary, assign, out);
        assign[x.grade][x.index] = None;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use itertools::Itertools;

    fn arrow() -> Arc<OgPoset> {
        Arc::new(fixtures::arrow_poset())
    }

    #[test]
    fn terminal_map_is_valid_and_cartesian() {
        let eps = RdcMap::terminal(arrow());
        assert!(eps.validate().is_map());
        assert!(eps.cartesian_check().holds());
        assert!(eps.is_collapse());
    }

    #[test]
    fn orientation_flip_fails_boundary_preservation() {
        let a = arrow();
        // swap the endpoints, keep the 1-cell: preserves order but not signs
        let flip = RdcMap::new(
            a.clone(),
            a.clone(),
            vec![
                vec![ElementId::new(0, 1), ElementId::new(0, 0)],
                vec![ElementId::new(1, 0)],
            ],
        )
        .unwrap();
        let report = flip.validate();
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, MapIssue::BoundaryMismatch { .. })));
    }

    #[test]
    fn identity_and_inclusions_are_cartesian() {
        let w = Arc::new(fixtures::whisker_poset());
        assert!(RdcMap::identity(w.clone()).is_cartesian());
        let sub = ClosedSubset::closure(w.clone(), &[ElementId::new(2, 0)]).unwrap();
        let inc = RdcMap::inclusion_of(&sub);
        assert!(inc.is_map());
        assert!(inc.is_cartesian());
        assert!(inc.is_inclusion());
    }

    #[test]
    fn epsilon_fibre_and_sections() {
        let eps = RdcMap::terminal(arrow());
        let pt = ElementId::new(0, 0);
        let fibre = eps.fibre(pt);
        assert_eq!(fibre.len(), 3);
        assert_eq!(eps.fibre_greatest(pt).unwrap(), ElementId::new(1, 0));
        assert_eq!(
            eps.fibre_minimal(pt),
            vec![ElementId::new(0, 0), ElementId::new(0, 1)]
        );
        let sections = eps.sections().unwrap();
        assert_eq!(sections.len(), 2);
        for s in &sections {
            assert_eq!(
                RdcMap::compose(&eps, s).unwrap(),
                RdcMap::identity(eps.target().clone())
            );
        }
    }

    #[test]
    fn identity_sections_are_identity() {
        let a = arrow();
        let id = RdcMap::identity(a.clone());
        let sections = id.sections().unwrap();
        assert_eq!(sections, vec![RdcMap::identity(a)]);
    }

    #[test]
    fn factorize_inclusion_and_surjection_edges() {
        let w = Arc::new(fixtures::whisker_poset());
        let sub = ClosedSubset::closure(w.clone(), &[ElementId::new(1, 2)]).unwrap();
        let inc = RdcMap::inclusion_of(&sub);
        let (p, i) = inc.factorize().unwrap();
        assert!(p.is_injective() && p.is_surjective());
        assert_eq!(RdcMap::compose(&i, &p).unwrap(), inc);

        let eps = RdcMap::terminal(arrow());
        let (p, i) = eps.factorize().unwrap();
        assert!(i.is_injective() && i.is_surjective());
        assert_eq!(RdcMap::compose(&i, &p).unwrap(), eps);
    }

    /// Oracle: all 27 assignments of the 3-element arrow into itself,
    /// filtered by the validity predicate, must agree with the pruned
    /// enumeration.
    #[test]
    fn enumerate_arrow_arrow_matches_brute_force() {
        let a = arrow();
        let ids: Vec<ElementId> = a.elements().collect();
        let mut brute = Vec::new();
        for combo in (0..3).map(|_| ids.clone()).multi_cartesian_product() {
            let assign = vec![vec![combo[0], combo[1]], vec![combo[2]]];
            if let Ok(m) = RdcMap::new(a.clone(), a.clone(), assign) {
                if m.validate().is_map() {
                    brute.push(m);
                }
            }
        }
        let fast = enumerate_maps(&a, &a, false);
        assert_eq!(fast.len(), brute.len());
        for m in &fast {
            assert!(brute.contains(m));
        }
        // identity plus the two point-degeneracies; all three are cartesian
        assert_eq!(fast.len(), 3);
        let cart = enumerate_maps(&a, &a, true);
        assert_eq!(cart.len(), 3);
    }

    #[test]
    fn maps_to_and_from_the_point() {
        let a = arrow();
        let pt = Arc::new(OgPoset::point());
        assert_eq!(enumerate_maps(&a, &pt, false).len(), 1);
        // maps out of the point hit exactly the minimal elements
        assert_eq!(enumerate_maps(&pt, &a, false).len(), 2);
        let w = Arc::new(fixtures::whisker_poset());
        assert_eq!(enumerate_maps(&pt, &w, false).len(), 3);
    }

    #[test]
    fn minimal_upper_bounds_in_whisker() {
        let w = fixtures::whisker_poset();
        let x = ElementId::new(0, 0);
        let y = ElementId::new(0, 1);
        // upper bounds of {x, y} are f, g, gamma; minimal ones are f and g
        assert_eq!(
            minimal_upper_bounds(&w, x, y),
            vec![ElementId::new(1, 0), ElementId::new(1, 1)]
        );
    }
}
