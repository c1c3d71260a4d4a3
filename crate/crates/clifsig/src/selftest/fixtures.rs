//! Frozen inputs and baselines for the orientation-reconstruction check.

use crate::grid::FrequencyGrid;

/// Synthetic multi-cosine test image: three grid frequencies chosen to stay
/// clear of DC and Nyquist coordinates on every even grid of size >= 8.
pub fn orientation_input(grid: &FrequencyGrid) -> Vec<f64> {
    let waves: [([i64; 2], f64); 3] = [([1, 2], 1.0), ([3, -1], 0.7), ([2, 3], 0.4)];
    (0..grid.len())
        .map(|cell| {
            let x = grid.unflat(cell);
            waves
                .iter()
                .map(|&(w, amp)| {
                    let phase: f64 = x
                        .iter()
                        .zip(&w)
                        .zip(grid.shape())
                        .map(|((&xi, &wi), &n)| xi as f64 * wi as f64 / n as f64)
                        .sum();
                    amp * (std::f64::consts::TAU * phase).cos()
                })
                .sum()
        })
        .collect()
}

/// Scalar part of H[I_3 v-hat] for the 8x8 `orientation_input` under the
/// monogenic multiplier, computed once through the brute-force transform
/// pair and frozen. Regenerate with the `regenerate_orientation_baseline`
/// test below when the surrogate pipeline changes deliberately.
pub const ORIENTATION_BASELINE_8X8: [f64; 64] = [
    1.6833595792748761, 0.24625310624373173, -0.9646946609246879, -0.4298287955941588,
    -0.12112163612635501, -0.4298287955941599, -0.9646946609246889, 0.24625310624373212,
    0.02891852597690897, -1.1702865824278643, -0.08566489285646042, 1.5566306628684077,
    1.4304877145137085, -0.3823371144251881, -1.439677228980408, -0.06994284736160677,
    -0.4413316556857353, -1.350632992074411, -0.9829850158940782, 0.4755005004119655,
    0.633457420073527, -0.6258782779751716, 0.8702201073485518, 1.5803716254798883,
    -0.45253217317970457, 0.3027344503572129, 1.1999177700809305, 0.7532352483587215,
    -1.0511965083984771, -1.58932918412677, 0.36974679284350365, 0.5992953667570858,
    -1.6479235623089976, -0.8141913523243807, 1.121782010557774, 0.9184061858325372,
    -0.3872107917902381, 0.9184061858325387, 1.1217820105577745, -0.8141913523243821,
    -0.45253217317970573, 0.599295366757085, 0.3697467928435047, -1.58932918412677,
    -1.0511965083984776, 0.7532352483587222, 1.1999177700809336, 0.30273445035721525,
    -0.4413316556857373, 1.5803716254798876, 0.8702201073485537, -0.6258782779751729,
    0.6334574200735259, 0.47550050041196634, -0.9829850158940786, -1.3506329920744098,
    0.02891852597691032, -0.06994284736160539, -1.439677228980409, -0.38233711442518864,
    1.4304877145137103, 1.5566306628684095, -0.08566489285645823, -1.170286582427866,
];
