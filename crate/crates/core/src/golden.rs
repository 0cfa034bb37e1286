//! Reference table for `k = 9`, transcribed from the published matrix.

pub const C9: [[i64; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 15120, 40320, 24192, 4608, 255],
    [0, 0, 10080, 544320, 1958040, 1796760, 588168, 74124, 3025],
    [0, 0, 544320, 6108480, 12267360, 7988904, 2066232, 218484, 7770],
    [0, 15120, 1958040, 12267360, 18329850, 9874746, 2229402, 212436, 6951],
    [0, 40320, 1796760, 7988904, 9874746, 4690350, 965790, 85680, 2646],
    [0, 24192, 588168, 2066232, 2229402, 965790, 185766, 15624, 462],
    [0, 4608, 74124, 218484, 212436, 85680, 15624, 1260, 36],
    [1, 255, 3025, 7770, 6951, 2646, 462, 36, 1],
];

pub fn c9_rows() -> Vec<Vec<i64>> {
    C9.iter().map(|r| r.to_vec()).collect()
}

/// The reference table as a [`CoeffTable2D`](crate::engine::CoeffTable2D).
pub fn c9_table() -> crate::engine::CoeffTable2D {
    let rows = C9.iter().map(|r| r.iter().map(|&v| v.into()).collect()).collect();
    crate::engine::CoeffTable2D::from_rows(rows).expect("square reference table")
}
