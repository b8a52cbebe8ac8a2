//! CSV and SVG rendering of sweep rows.

use std::fmt::Write as _;

use ptent::experiments::{Scenario, ScenarioResult};
use ptent::linalg::spectrum_entropy;

pub const CSV_HEADER: &str = "alpha,et,lambda_plus,lambda_minus,entropy_bits,trace_distance,k_closed,k_numeric";

/// One CSV line.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub alpha: f64,
    pub et: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    /// In the configured log base.
    pub entropy: f64,
    pub trace_distance: f64,
    pub k_closed: Option<f64>,
    pub k_numeric: Option<f64>,
}

impl Row {
    pub fn from_result(r: &ScenarioResult, log_base: f64) -> Self {
        let [lambda_plus, lambda_minus] = r.report.eigenvalues;
        Self {
            alpha: r.alpha,
            et: r.et,
            lambda_plus,
            lambda_minus,
            entropy: spectrum_entropy(&r.report.eigenvalues, log_base),
            trace_distance: r.report.trace_distance_to_mixed,
            k_closed: r.k_closed_form,
            k_numeric: r.k_numeric,
        }
    }
}

/// 12 significant digits in scientific notation; `-0` prints as `0`.
pub fn format_number(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

pub fn render_csv(rows: &[Row]) -> String {
    let mut out = String::with_capacity(128 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    let opt = |v: Option<f64>| v.map(format_number).unwrap_or_default();
    for r in rows {
        let fields = [
            format_number(r.alpha),
            format_number(r.et),
            format_number(r.lambda_plus),
            format_number(r.lambda_minus),
            format_number(r.entropy),
            format_number(r.trace_distance),
            opt(r.k_closed),
            opt(r.k_numeric),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

struct Series {
    label: String,
    points: Vec<(f64, f64)>,
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Line plot of the rows. When every row shares one `Et` the x axis is α
/// with entropy and trace distance as the two series; otherwise the x axis
/// is `Et` with one series per α (trace distance for the signaling
/// scenario, entropy for the others).
pub fn render_svg(scenario: Scenario, rows: &[Row], entropy_unit: &str) -> String {
    let single_et = rows.windows(2).all(|w| w[0].et == w[1].et);
    let (x_label, y_label, series) = if single_et {
        let series = vec![
            Series {
                label: format!("entropy ({entropy_unit})"),
                points: rows.iter().map(|r| (r.alpha, r.entropy)).collect(),
            },
            Series {
                label: "trace distance".into(),
                points: rows.iter().map(|r| (r.alpha, r.trace_distance)).collect(),
            },
        ];
        ("α (rad)", format!("entropy ({entropy_unit}) / trace distance"), series)
    } else {
        let signal = scenario == Scenario::Signaling;
        let mut series: Vec<Series> = Vec::new();
        for r in rows {
            let y = if signal { r.trace_distance } else { r.entropy };
            match series.last_mut() {
                Some(s) if s.label == alpha_label(r.alpha) => s.points.push((r.et, y)),
                _ => series.push(Series {
                    label: alpha_label(r.alpha),
                    points: vec![(r.et, y)],
                }),
            }
        }
        let y_label = if signal {
            "trace distance to I/2".to_string()
        } else {
            format!("entropy ({entropy_unit})")
        };
        ("Et (rad)", y_label, series)
    };

    let all = series.iter().flat_map(|s| s.points.iter());
    let (x_min, x_max) = padded_range(all.clone().map(|p| p.0));
    let (y_min, y_max) = padded_range(all.map(|p| p.1).chain([0.0]));
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w;
    let sy = |y: f64| MARGIN_TOP + plot_h - (y - y_min) / (y_max - y_min) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        escape(&format!("scenario: {scenario}"))
    );

    // Axes and ticks.
    let (x0, y0) = (MARGIN_LEFT, MARGIN_TOP + plot_h);
    let _ = writeln!(
        svg,
        r#"<path d="M{x0},{MARGIN_TOP} V{y0} H{}" fill="none" stroke="black"/>"#,
        MARGIN_LEFT + plot_w
    );
    for i in 0..=5 {
        let f = i as f64 / 5.0;
        let xv = x_min + f * (x_max - x_min);
        let yv = y_min + f * (y_max - y_min);
        let (px, py) = (sx(xv), sy(yv));
        let _ = writeln!(
            svg,
            r#"<line x1="{px:.2}" y1="{y0}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" text-anchor="middle">{xv:.3}</text>"#,
            y0 + 5.0,
            y0 + 20.0
        );
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{x0}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{yv:.3}</text>"#,
            x0 - 5.0,
            x0 - 8.0,
            py + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 15.0,
        escape(x_label)
    );
    let _ = writeln!(
        svg,
        r#"<text transform="translate(20,{:.2}) rotate(-90)" text-anchor="middle">{}</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        escape(&y_label)
    );

    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = s
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            points.join(" ")
        );
        let ly = MARGIN_TOP + 10.0 + 16.0 * i as f64;
        let lx = MARGIN_LEFT + plot_w + 12.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 18.0,
            lx + 24.0,
            ly + 4.0,
            escape(&s.label)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn alpha_label(alpha: f64) -> String {
    format!("α = {alpha:.4}")
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() || !hi.is_finite() {
        return (0.0, 1.0);
    }
    if hi - lo < 1e-12 {
        return (lo - 0.5, hi + 0.5);
    }
    (lo, hi)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
