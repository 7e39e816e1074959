use super::diagram::LinkDiagram;

const RIGHT_TREFOIL: [[u32; 4]; 3] = [[4, 2, 5, 1], [6, 4, 1, 3], [2, 6, 3, 5]];
const LEFT_TREFOIL: [[u32; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
const FIGURE_EIGHT: [[u32; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];
const CINQUEFOIL: [[u32; 4]; 5] = [[1, 6, 2, 7], [3, 8, 4, 9], [5, 10, 6, 1], [7, 2, 8, 3], [9, 4, 10, 5]];
const THREE_TWIST: [[u32; 4]; 5] = [[1, 4, 2, 5], [3, 8, 4, 9], [5, 10, 6, 1], [9, 6, 10, 7], [7, 2, 8, 3]];

pub const CORPUS_NAMES: [&str; 8] = ["unknot", "trefoil-right", "trefoil-left", "figure-eight", "5_1", "5_2", "granny", "square"];

fn pd(x: &[[u32; 4]]) -> LinkDiagram {
    LinkDiagram::from_pd(x, 0).expect("built-in PD code is valid")
}

/// A built-in knot diagram by name.
pub fn corpus_knot(name: &str) -> Option<LinkDiagram> {
    Some(match name {
        "unknot" => LinkDiagram::unknot(),
        "trefoil-right" => pd(&RIGHT_TREFOIL),
        "trefoil-left" => pd(&LEFT_TREFOIL),
        "figure-eight" => pd(&FIGURE_EIGHT),
        "5_1" => pd(&CINQUEFOIL),
        "5_2" => pd(&THREE_TWIST),
        "granny" => pd(&RIGHT_TREFOIL).connected_sum_knots(&pd(&RIGHT_TREFOIL)).expect("knots"),
        "square" => pd(&RIGHT_TREFOIL).connected_sum_knots(&pd(&LEFT_TREFOIL)).expect("knots"),
        _ => return None,
    })
}

/// Every built-in knot, in the order of [`CORPUS_NAMES`].
pub fn corpus() -> Vec<(&'static str, LinkDiagram)> {
    CORPUS_NAMES.iter().map(|&n| (n, corpus_knot(n).expect("listed name"))).collect()
}

/// The Hopf link with two positive crossings.
pub fn positive_hopf() -> LinkDiagram {
    pd(&RIGHT_TREFOIL).smooth_oriented(0).expect("crossing exists")
}
