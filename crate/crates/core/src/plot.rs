//! Standalone SVG scatter-plus-curve rendering: one circle per data point,
//! one polyline for the fitted curve, plain axes with numeric tick labels.
//! Output is deterministic, textual, and checked structurally — never
//! pixel-wise.

use crate::dataset::DataSet;
use crate::linreg::{FittedModel, Link};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN_LEFT: f64 = 60.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 50.0;

/// Number of curve samples across the plotted x-range.
pub const CURVE_SAMPLES: usize = 201;

/// Fraction of the data's x-span added on each side, so extrapolation
/// behavior is visible.
pub const X_EXTENSION: f64 = 0.10;

/// Samples the model across the dataset's x-range extended by
/// [`X_EXTENSION`] on each side. Sigmoid-link models yield probabilities.
pub fn curve_points(model: &FittedModel, ds: &DataSet) -> Vec<(f64, f64)> {
    let lo = ds.xs().fold(f64::INFINITY, f64::min);
    let hi = ds.x_max();
    let span = hi - lo;
    let ext = if span > 0.0 { X_EXTENSION * span } else { 1.0 };
    let (lo, hi) = (lo - ext, hi + ext);
    let step = (hi - lo) / (CURVE_SAMPLES - 1) as f64;
    (0..CURVE_SAMPLES)
        .map(|i| {
            let x = lo + step * i as f64;
            let y = match model.link() {
                Link::Identity => model.response(x),
                Link::Sigmoid => crate::logreg::sigmoid(model.response(x)),
            };
            (x, y)
        })
        .collect()
}

fn fmt_tick(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// Renders the dataset and a sampled curve as a complete SVG document.
///
/// With `probability_band` the y-axis is pinned to [0, 1]; otherwise it
/// spans the data and curve extents with a small pad.
pub fn render(ds: &DataSet, curve: &[(f64, f64)], probability_band: bool) -> String {
    let xs = curve.iter().map(|&(x, _)| x).chain(ds.xs());
    let (mut xlo, mut xhi) = (f64::INFINITY, f64::NEG_INFINITY);
    for x in xs {
        xlo = xlo.min(x);
        xhi = xhi.max(x);
    }
    if xhi == xlo {
        xlo -= 1.0;
        xhi += 1.0;
    }

    let (ylo, yhi) = if probability_band {
        (0.0, 1.0)
    } else {
        let ys = curve.iter().map(|&(_, y)| y).chain(ds.ys());
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for y in ys {
            lo = lo.min(y);
            hi = hi.max(y);
        }
        let pad = if hi > lo { 0.05 * (hi - lo) } else { 1.0 };
        (lo - pad, hi + pad)
    };

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |x: f64| MARGIN_LEFT + (x - xlo) / (xhi - xlo) * plot_w;
    let py = |y: f64| MARGIN_TOP + (yhi - y) / (yhi - ylo) * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));

    // axes
    let x_axis_y = py(ylo);
    let y_axis_x = px(xlo);
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        px(xlo),
        x_axis_y,
        px(xhi),
        x_axis_y
    ));
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        y_axis_x,
        py(ylo),
        y_axis_x,
        py(yhi)
    ));

    // ticks and labels
    for i in 0..5 {
        let t = i as f64 / 4.0;
        let xv = xlo + t * (xhi - xlo);
        let yv = ylo + t * (yhi - ylo);
        svg.push_str(&format!(
            "  <line x1=\"{0:.2}\" y1=\"{1:.2}\" x2=\"{0:.2}\" y2=\"{2:.2}\" stroke=\"black\"/>\n",
            px(xv),
            x_axis_y,
            x_axis_y + 5.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
            px(xv),
            x_axis_y + 18.0,
            fmt_tick(xv)
        ));
        svg.push_str(&format!(
            "  <line x1=\"{1:.2}\" y1=\"{0:.2}\" x2=\"{2:.2}\" y2=\"{0:.2}\" stroke=\"black\"/>\n",
            py(yv),
            y_axis_x - 5.0,
            y_axis_x
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"end\">{}</text>\n",
            y_axis_x - 8.0,
            py(yv) + 4.0,
            fmt_tick(yv)
        ));
    }

    // fitted curve
    let pts: Vec<String> = curve
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
        .collect();
    svg.push_str(&format!(
        "  <polyline fill=\"none\" stroke=\"red\" stroke-width=\"1.5\" points=\"{}\"/>\n",
        pts.join(" ")
    ));

    // data markers
    for &(x, y) in ds.points() {
        svg.push_str(&format!(
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"blue\"/>\n",
            px(x),
            py(y)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}
