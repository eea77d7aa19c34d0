//! Small named instances used by tests, examples and the shipped fixture files.

use crate::matroid::Matroid;
use crate::oracle::gap_instance;
use crate::rational::{frac, int, Rational};
use crate::uncertainty::{ElementData, UncertainInstance, UncertaintyArea};

fn area(pieces: &[&str]) -> UncertaintyArea {
    UncertaintyArea::parse_pieces(pieces).expect("fixture areas are valid")
}

fn triangle(data: [(&str, UncertaintyArea, Rational); 3]) -> UncertainInstance {
    // Vertices A = 0, B = 1, C = 2.
    let m = Matroid::graphic(3, [("e1", 2, 1), ("e2", 0, 1), ("e3", 0, 2)])
        .expect("triangle is a valid graph");
    UncertainInstance::new(m, data.map(|(n, a, w)| (n, ElementData::new(a, w, int(1)))))
        .expect("fixture instance is valid")
}

/// Triangle with every area `(0,1)` and every weight `0.1`.
pub fn fig1_open() -> UncertainInstance {
    let w = frac(1, 10);
    triangle([
        ("e1", area(&["(0,1)"]), w),
        ("e2", area(&["(0,1)"]), w),
        ("e3", area(&["(0,1)"]), w),
    ])
}

/// Triangle with every area `[0,1]` and every weight `0`.
pub fn fig1_closed() -> UncertainInstance {
    triangle([
        ("e1", area(&["[0,1]"]), int(0)),
        ("e2", area(&["[0,1]"]), int(0)),
        ("e3", area(&["[0,1]"]), int(0)),
    ])
}

/// Triangle mixing a closed interval, a two-point set and a half-open interval.
pub fn fig1_mixed() -> UncertainInstance {
    triangle([
        ("e1", area(&["(1,2]"]), frac(11, 10)),
        ("e2", area(&["[0,1]"]), int(1)),
        ("e3", area(&["{0}", "{1}"]), int(0)),
    ])
}

/// Four vertices, five edges; two minimum spanning trees with different
/// verification costs.
pub fn fig2() -> UncertainInstance {
    // Vertices A = 0, B = 1, C = 2, D = 3.
    let m = Matroid::graphic(
        4,
        [
            ("e1", 0, 1),
            ("e2", 1, 2),
            ("e3", 1, 3),
            ("e4", 2, 3),
            ("e5", 0, 3),
        ],
    )
    .expect("valid graph");
    UncertainInstance::new(
        m,
        [
            ("e1", ElementData::new(area(&["[1,4]"]), int(4), int(1))),
            ("e2", ElementData::new(area(&["[1,3]"]), int(2), int(1))),
            ("e3", ElementData::new(area(&["[3,7]"]), int(4), int(1))),
            ("e4", ElementData::new(area(&["[1,5]"]), int(5), int(1))),
            ("e5", ElementData::new(area(&["[1,3]"]), int(2), int(1))),
        ],
    )
    .expect("fixture instance is valid")
}

/// Adaptivity-gap instance with `rho = 4`, `n = 4`.
pub fn gap_rho() -> UncertainInstance {
    gap_instance(int(4), 4).expect("valid parameters")
}

/// Every shipped fixture with its file stem.
pub fn all() -> Vec<(&'static str, UncertainInstance)> {
    vec![
        ("fig1_open", fig1_open()),
        ("fig1_closed", fig1_closed()),
        ("fig1_mixed", fig1_mixed()),
        ("fig2", fig2()),
        ("gap_rho", gap_rho()),
    ]
}
