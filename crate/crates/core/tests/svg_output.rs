//! SVG export checks: marked-crossing counts match the validated totals.

use crossings_core::constructions::{construct_family, zarankiewicz_drawing};
use crossings_core::geometry::{to_svg, SvgOptions};

fn crossing_marks(svg: &[u8]) -> usize {
    String::from_utf8_lossy(svg)
        .matches("class=\"crossing\"")
        .count()
}

#[test]
fn optimal_k5_has_one_marked_crossing() {
    let d = construct_family("K1111n", 1).unwrap(); // K_5
    let svg = to_svg(&d, &SvgOptions::default()).unwrap();
    assert_eq!(crossing_marks(&svg), 1);
}

#[test]
fn k144_has_twelve_marked_crossings() {
    let d = construct_family("K14n", 4).unwrap();
    let svg = to_svg(&d, &SvgOptions::default()).unwrap();
    assert_eq!(crossing_marks(&svg), 12);
}

#[test]
fn marks_can_be_disabled() {
    let d = zarankiewicz_drawing(4, 4).unwrap();
    let opts = SvgOptions {
        mark_crossings: false,
        ..Default::default()
    };
    let svg = to_svg(&d, &opts).unwrap();
    assert_eq!(crossing_marks(&svg), 0);
    // Deterministic output for identical input and options.
    assert_eq!(svg, to_svg(&d, &opts).unwrap());
}
