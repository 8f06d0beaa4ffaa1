//! Gray products, joins, cylinders, augmentation, and pushout-products of
//! inclusions.
//!
//! The Gray product twists the orientation of the second factor by the parity
//! of the first: a face `(x, y')` of `(x, y)` keeps the sign of `y'` when
//! `dim x` is even and flips it when odd. The join is augmentation, Gray
//! product, diminution.

use std::collections::HashMap;
use std::sync::Arc;

use crate::maps::RdcMap;
use crate::poset::{ElementId, OgPoset, Sign};
use crate::subset::ClosedSubset;
use crate::Error;

/// A Gray product together with the bijection between product elements and
/// pairs of factor elements.
pub struct GrayProduct {
    pub poset: Arc<OgPoset>,
    pairs: Vec<Vec<(ElementId, ElementId)>>,
    index: HashMap<(ElementId, ElementId), ElementId>,
}

impl GrayProduct {
    pub fn pair_of(&self, z: ElementId) -> (ElementId, ElementId) {
        self.pairs[z.grade][z.index]
    }

    pub fn id_of(&self, x: ElementId, y: ElementId) -> ElementId {
        self.index[&(x, y)]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ElementId, (ElementId, ElementId))> + '_ {
        self.pairs.iter().enumerate().flat_map(|(n, row)| {
            row.iter()
                .enumerate()
                .map(move |(i, &pair)| (ElementId::new(n, i), pair))
        })
    }
}

/// Gray product of two oriented graded posets.
///
/// Product elements are indexed row-major in (first, second) within each
/// grade, which fixes canonical labels for all product shapes.
pub fn gray(p: &OgPoset, q: &OgPoset) -> GrayProduct {
    let dim_total = (p.dim() + q.dim()).max(-1);
    let grades = (dim_total + 1).max(0) as usize;
    let mut pairs: Vec<Vec<(ElementId, ElementId)>> = vec![Vec::new(); grades];
    for x in p.elements() {
        for gy in 0..q.grade_total() {
            for y in q.grade_elements(gy) {
                pairs[x.grade + gy].push((x, y));
            }
        }
    }
    for row in &mut pairs {
        row.sort();
    }
    let mut index = HashMap::new();
    for (n, row) in pairs.iter().enumerate() {
        for (i, &(x, y)) in row.iter().enumerate() {
            index.insert((x, y), ElementId::new(n, i));
        }
    }
    let mut faces: Vec<Vec<(Vec<usize>, Vec<usize>)>> = Vec::with_capacity(grades);
    for row in &pairs {
        let mut grade_faces = Vec::with_capacity(row.len());
        for &(x, y) in row {
            let mut input = Vec::new();
            let mut output = Vec::new();
            for sign in [Sign::Minus, Sign::Plus] {
                let bucket: &mut Vec<usize> = match sign {
                    Sign::Minus => &mut input,
                    Sign::Plus => &mut output,
                };
                for xf in p.face_ids(x, sign) {
                    bucket.push(index[&(xf, y)].index);
                }
                for yf in q.face_ids(y, sign.twist(x.grade)) {
                    bucket.push(index[&(x, yf)].index);
                }
            }
            grade_faces.push((input, output));
        }
        faces.push(grade_faces);
    }
    GrayProduct {
        poset: Arc::new(OgPoset::from_faces(faces)),
        pairs,
        index,
    }
}

/// Gray product of two maps, acting coordinatewise.
pub fn gray_map(f: &RdcMap, g: &RdcMap) -> RdcMap {
    let src = gray(f.source(), g.source());
    let tgt = gray(f.target(), g.target());
    let assign = src
        .poset
        .grade_sizes()
        .iter()
        .enumerate()
        .map(|(n, &k)| {
            (0..k)
                .map(|i| {
                    let (x, y) = src.pair_of(ElementId::new(n, i));
                    tgt.id_of(f.apply(x), g.apply(y))
                })
                .collect()
        })
        .collect();
    RdcMap::new(src.poset.clone(), tgt.poset.clone(), assign)
        .expect("coordinatewise product assignment is well-formed")
}

/// A poset with a freely adjoined positive least element. Original elements
/// shift up one grade; the new bottom sits alone in grade 0 and is an output
/// face of every original grade-0 element.
pub struct Augmented {
    pub poset: Arc<OgPoset>,
}

impl Augmented {
    /// Image of an original element under the grade shift.
    pub fn lifted(&self, x: ElementId) -> ElementId {
        ElementId::new(x.grade + 1, x.index)
    }

    pub fn bottom(&self) -> ElementId {
        ElementId::new(0, 0)
    }
}

pub fn augment(p: &OgPoset) -> Augmented {
    let mut faces: Vec<Vec<(Vec<usize>, Vec<usize>)>> = vec![vec![(Vec::new(), Vec::new())]];
    for n in 0..p.grade_total() {
        let mut row = Vec::with_capacity(p.grade_size(n));
        for x in p.grade_elements(n) {
            if n == 0 {
                row.push((Vec::new(), vec![0]));
            } else {
                row.push((
                    p.faces(x, Sign::Minus).iter().map(|&j| j as usize).collect(),
                    p.faces(x, Sign::Plus).iter().map(|&j| j as usize).collect(),
                ));
            }
        }
        faces.push(row);
    }
    Augmented {
        poset: Arc::new(OgPoset::from_faces(faces)),
    }
}

/// Removes a least element, shifting grades down. Inverse to [`augment`] on
/// posets with a positive least element.
pub fn diminish(p: &OgPoset) -> Result<OgPoset, Error> {
    if p.grade_size(0) != 1 {
        return Err(Error::NoLeastElement);
    }
    let mut faces: Vec<Vec<(Vec<usize>, Vec<usize>)>> = Vec::new();
    for n in 1..p.grade_total() {
        let mut row = Vec::with_capacity(p.grade_size(n));
        for x in p.grade_elements(n) {
            if n == 1 {
                row.push((Vec::new(), Vec::new()));
            } else {
                row.push((
                    p.faces(x, Sign::Minus).iter().map(|&j| j as usize).collect(),
                    p.faces(x, Sign::Plus).iter().map(|&j| j as usize).collect(),
                ));
            }
        }
        faces.push(row);
    }
    Ok(OgPoset::from_faces(faces))
}

pub fn augment_map(f: &RdcMap) -> RdcMap {
    let src = augment(f.source()).poset;
    let tgt = augment(f.target()).poset;
    let mut assign: Vec<Vec<ElementId>> = vec![vec![ElementId::new(0, 0)]];
    for row in f.assignment() {
        assign.push(
            row.iter()
                .map(|t| ElementId::new(t.grade + 1, t.index))
                .collect(),
        );
    }
    RdcMap::new(src, tgt, assign).expect("augmented assignment is well-formed")
}

pub fn diminish_map(f: &RdcMap) -> Result<RdcMap, Error> {
    let src = Arc::new(diminish(f.source())?);
    let tgt = Arc::new(diminish(f.target())?);
    let mut assign: Vec<Vec<ElementId>> = Vec::new();
    for (n, row) in f.assignment().iter().enumerate().skip(1) {
        let mut shifted = Vec::with_capacity(row.len());
        for (i, t) in row.iter().enumerate() {
            if t.grade == 0 {
                return Err(Error::Precondition(format!(
                    "map does not reflect the least element at {}",
                    ElementId::new(n, i)
                )));
            }
            shifted.push(ElementId::new(t.grade - 1, t.index));
        }
        assign.push(shifted);
    }
    RdcMap::new(src, tgt, assign)
}

/// Join of two oriented graded posets: augment both, take the Gray product,
/// remove the least element.
pub fn join(p: &OgPoset, q: &OgPoset) -> OgPoset {
    let pa = augment(p);
    let qa = augment(q);
    let product = gray(&pa.poset, &qa.poset);
    diminish(&product.poset).expect("product of augmented posets has a least element")
}

/// Join of two maps, computed literally as diminish after Gray after augment.
pub fn join_map(f: &RdcMap, g: &RdcMap) -> RdcMap {
    let product = gray_map(&augment_map(f), &augment_map(g));
    diminish_map(&product).expect("join of maps reflects the least element")
}

/// The cylinder on a complex: the Gray product with the arrow, its two end
/// inclusions, and the projection collapsing the arrow coordinate.
pub struct Cylinder {
    pub poset: Arc<OgPoset>,
    pub iota_minus: RdcMap,
    pub iota_plus: RdcMap,
    pub sigma: RdcMap,
}

pub fn cylinder(u: &Arc<OgPoset>) -> Cylinder {
    let arrow = crate::fixtures::arrow_poset();
    let product = gray(&arrow, u);
    let end = |endpoint: usize| -> RdcMap {
        let assign = u
            .grade_sizes()
            .iter()
            .enumerate()
            .map(|(n, &k)| {
                (0..k)
                    .map(|i| product.id_of(ElementId::new(0, endpoint), ElementId::new(n, i)))
                    .collect()
            })
            .collect();
        RdcMap::new(u.clone(), product.poset.clone(), assign)
            .expect("cylinder end is well-formed")
    };
    let sigma_assign = product
        .poset
        .grade_sizes()
        .iter()
        .enumerate()
        .map(|(n, &k)| {
            (0..k)
                .map(|i| product.pair_of(ElementId::new(n, i)).1)
                .collect()
        })
        .collect();
    let sigma = RdcMap::new(product.poset.clone(), u.clone(), sigma_assign)
        .expect("cylinder projection is well-formed");
    Cylinder {
        poset: product.poset.clone(),
        iota_minus: end(0),
        iota_plus: end(1),
        sigma,
    }
}

/// The cubical coconnection: the square collapsing onto the arrow by taking
/// the minimum coordinate. A map of atoms that is not cartesian.
pub fn coconnection() -> RdcMap {
    let arrow = Arc::new(crate::fixtures::arrow_poset());
    let square = gray(&arrow, &arrow);
    let lo = ElementId::new(0, 0);
    let hi = ElementId::new(0, 1);
    let mid = ElementId::new(1, 0);
    let min = |a: ElementId, b: ElementId| -> ElementId {
        // linear order lo < mid < hi on the cells of the interval
        let rank = |e: ElementId| match (e.grade, e.index) {
            (0, 0) => 0,
            (1, 0) => 1,
            _ => 2,
        };
        match rank(a).min(rank(b)) {
            0 => lo,
            1 => mid,
            _ => hi,
        }
    };
    let assign = square
        .poset
        .grade_sizes()
        .iter()
        .enumerate()
        .map(|(n, &k)| {
            (0..k)
                .map(|i| {
                    let (x, y) = square.pair_of(ElementId::new(n, i));
                    min(x, y)
                })
                .collect()
        })
        .collect();
    RdcMap::new(square.poset.clone(), arrow, assign).expect("coconnection is well-formed")
}

/// Pushout-product of two inclusions: the inclusion of
/// `(im m ⊗ target m') ∪ (target m ⊗ im m')` into the product of the targets.
pub fn pushout_product(m: &RdcMap, m2: &RdcMap) -> Result<RdcMap, Error> {
    if !m.is_inclusion() || !m2.is_inclusion() {
        return Err(Error::Precondition(
            "pushout-product requires inclusions".into(),
        ));
    }
    let product = gray(m.target(), m2.target());
    let im1 = m.image();
    let im2 = m2.image();
    let mut elements = Vec::new();
    for (z, (x, y)) in product.pairs() {
        if im1.contains(x) || im2.contains(y) {
            elements.push(z);
        }
    }
    let subset = ClosedSubset::from_closed_elements(product.poset.clone(), &elements)?;
    Ok(RdcMap::inclusion_of(&subset))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::find_isomorphism;

    fn arrow() -> OgPoset {
        fixtures::arrow_poset()
    }

    #[test]
    fn square_orientation() {
        let square = gray(&arrow(), &arrow());
        assert_eq!(square.poset.grade_sizes(), vec![4, 4, 1]);
        let top = ElementId::new(2, 0);
        let minus: Vec<(ElementId, ElementId)> = square
            .poset
            .face_ids(top, Sign::Minus)
            .map(|f| square.pair_of(f))
            .collect();
        let plus: Vec<(ElementId, ElementId)> = square
            .poset
            .face_ids(top, Sign::Plus)
            .map(|f| square.pair_of(f))
            .collect();
        let v_lo = ElementId::new(0, 0);
        let v_hi = ElementId::new(0, 1);
        let e = ElementId::new(1, 0);
        // input faces (0^-, 1) and (1, 0^+); output faces (0^+, 1) and (1, 0^-)
        assert!(minus.contains(&(v_lo, e)) && minus.contains(&(e, v_hi)));
        assert!(plus.contains(&(v_hi, e)) && plus.contains(&(e, v_lo)));
    }

    #[test]
    fn point_is_gray_unit() {
        let pt = OgPoset::point();
        let w = fixtures::whisker_poset();
        assert_eq!(*gray(&pt, &w).poset, w);
        assert_eq!(*gray(&w, &pt).poset, w);
    }

    #[test]
    fn gray_associates_up_to_iso() {
        let a = arrow();
        let w = fixtures::whisker_poset();
        let left = gray(&gray(&a, &a).poset, &w).poset;
        let right = gray(&a, &gray(&a, &w).poset).poset;
        assert!(find_isomorphism(&left, &right).is_some());
    }

    #[test]
    fn augment_then_diminish_roundtrips() {
        for p in [OgPoset::empty(), OgPoset::point(), arrow(), fixtures::whisker_poset()] {
            let aug = augment(&p);
            assert_eq!(diminish(&aug.poset).unwrap(), p);
        }
        assert_eq!(*augment(&OgPoset::empty()).poset, OgPoset::point());
    }

    #[test]
    fn augmented_point_is_positive_chain() {
        let aug = augment(&OgPoset::point());
        assert_eq!(aug.poset.grade_sizes(), vec![1, 1]);
        let top = ElementId::new(1, 0);
        assert!(aug.poset.faces(top, Sign::Minus).is_empty());
        assert_eq!(aug.poset.faces(top, Sign::Plus), &[0]);
    }

    #[test]
    fn join_of_points_is_arrow() {
        let pt = OgPoset::point();
        let j = join(&pt, &pt);
        assert!(find_isomorphism(&j, &arrow()).is_some());
    }

    #[test]
    fn empty_is_join_unit() {
        let w = fixtures::whisker_poset();
        let e = OgPoset::empty();
        assert!(find_isomorphism(&join(&e, &w), &w).is_some());
        assert!(find_isomorphism(&join(&w, &e), &w).is_some());
    }

    #[test]
    fn join_cardinality() {
        let a = arrow();
        let w = fixtures::whisker_poset();
        assert_eq!(join(&a, &w).len(), 3 + 7 + 21);
    }

    #[test]
    fn cylinder_on_point_is_arrow() {
        let pt = Arc::new(OgPoset::point());
        let cyl = cylinder(&pt);
        assert_eq!(*cyl.poset, arrow());
        assert!(cyl.sigma.is_map());
        assert_eq!(
            RdcMap::compose(&cyl.sigma, &cyl.iota_minus).unwrap(),
            RdcMap::identity(pt.clone())
        );
    }

    #[test]
    fn cylinder_sections_and_projection() {
        let a = Arc::new(arrow());
        let cyl = cylinder(&a);
        assert!(cyl.iota_minus.is_inclusion());
        assert!(cyl.iota_plus.is_inclusion());
        assert!(cyl.sigma.is_map());
        assert!(cyl.sigma.is_cartesian());
        for end in [&cyl.iota_minus, &cyl.iota_plus] {
            assert_eq!(
                RdcMap::compose(&cyl.sigma, end).unwrap(),
                RdcMap::identity(a.clone())
            );
        }
    }

    #[test]
    fn coconnection_is_a_map_but_not_cartesian() {
        let c = coconnection();
        assert!(c.validate().is_map());
        let check = c.cartesian_check();
        assert!(!check.holds());
    }

    #[test]
    fn gray_map_of_cartesian_maps_is_cartesian() {
        let a = Arc::new(arrow());
        let eps = RdcMap::terminal(a.clone());
        let id = RdcMap::identity(a.clone());
        let prod = gray_map(&eps, &id);
        assert!(prod.is_map());
        assert!(prod.is_cartesian());
        assert!(prod.is_surjective());
    }

    #[test]
    fn pushout_product_counts() {
        // (1 -> arrow) x^ (1 -> arrow): image 1*3 + 3*1 - 1*1 = 5 elements
        let a = Arc::new(arrow());
        let end = ClosedSubset::closure(a.clone(), &[ElementId::new(0, 0)]).unwrap();
        let inc = RdcMap::inclusion_of(&end);
        let pp = pushout_product(&inc, &inc).unwrap();
        assert!(pp.is_inclusion());
        assert_eq!(pp.source().len(), 5);
        assert_eq!(pp.target().len(), 9);
    }

    #[test]
    fn pushout_product_of_empty_inclusions() {
        let pt = Arc::new(OgPoset::point());
        let empty = ClosedSubset::empty(pt.clone());
        let inc = RdcMap::inclusion_of(&empty);
        let pp = pushout_product(&inc, &inc).unwrap();
        assert!(pp.source().is_empty());
        assert_eq!(pp.target().len(), 1);
    }

    #[test]
    fn join_map_composes() {
        let a = Arc::new(arrow());
        let eps = RdcMap::terminal(a.clone());
        let id = RdcMap::identity(a.clone());
        let jm = join_map(&eps, &id);
        assert!(jm.is_map());
        assert_eq!(jm.source().len(), 3 + 3 + 9);
        assert_eq!(jm.target().len(), 1 + 3 + 3);
    }
}
