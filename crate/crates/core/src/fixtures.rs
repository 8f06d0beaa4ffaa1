//! Small hand-written complexes used as fixtures across the test suites.

use crate::poset::OgPoset;

/// The arrow: two endpoints and one 1-cell with input `0.0`, output `0.1`.
pub fn arrow_poset() -> OgPoset {
    OgPoset::from_faces(vec![
        vec![(vec![], vec![]), (vec![], vec![])],
        vec![(vec![0], vec![1])],
    ])
}

/// A 2-cell between parallel arrows, whiskered by a further arrow:
/// a 2-dimensional complex with elements x, y, z / f, g, h / gamma, where
/// gamma: f => g and h: y -> z.
///
/// Canonical ids: x=0.0, y=0.1, z=0.2, f=1.0, g=1.1, h=1.2, gamma=2.0.
pub fn whisker_poset() -> OgPoset {
    OgPoset::from_faces(vec![
        vec![(vec![], vec![]), (vec![], vec![]), (vec![], vec![])],
        vec![
            (vec![0], vec![1]), // f: x -> y
            (vec![0], vec![1]), // g: x -> y
            (vec![1], vec![2]), // h: y -> z
        ],
        vec![(vec![0], vec![1])], // gamma: f => g
    ])
}

/// Two disconnected points; not a molecule.
pub fn two_points() -> OgPoset {
    OgPoset::from_faces(vec![vec![(vec![], vec![]), (vec![], vec![])]])
}
