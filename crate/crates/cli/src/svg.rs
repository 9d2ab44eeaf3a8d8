//! Static line charts as standalone SVG.

use std::fmt::Write;

use crate::format::format_sig;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 60.0;
const TICKS: usize = 6;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Chart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub description: String,
    pub series: Vec<Series>,
}

struct Axis {
    min: f64,
    max: f64,
    from: f64,
    to: f64,
}

impl Axis {
    fn new(values: impl Iterator<Item = f64>, from: f64, to: f64, pad: bool) -> Self {
        let (mut min, mut max) = values
            .filter(|v| v.is_finite())
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            });
        if !min.is_finite() {
            min = 0.0;
            max = 1.0;
        }
        if max - min <= f64::EPSILON * max.abs().max(1.0) {
            min -= 0.5;
            max += 0.5;
        } else if pad {
            let margin = 0.05 * (max - min);
            min -= margin;
            max += margin;
        }
        Self { min, max, from, to }
    }

    fn map(&self, v: f64) -> f64 {
        self.from + (v - self.min) / (self.max - self.min) * (self.to - self.from)
    }

    fn ticks(&self) -> impl Iterator<Item = f64> + '_ {
        (0..TICKS).map(move |i| self.min + (self.max - self.min) * i as f64 / (TICKS - 1) as f64)
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn coord(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

impl Chart {
    pub fn render(&self) -> String {
        let x_axis = Axis::new(
            self.series
                .iter()
                .flat_map(|s| s.points.iter().map(|p| p.0)),
            LEFT,
            WIDTH - RIGHT,
            false,
        );
        let y_axis = Axis::new(
            self.series
                .iter()
                .flat_map(|s| s.points.iter().map(|p| p.1)),
            HEIGHT - BOTTOM,
            TOP,
            true,
        );

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(svg, "<desc>{}</desc>", escape(&self.description));
        let _ = writeln!(
            svg,
            r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="25" text-anchor="middle" font-size="14">{}</text>"#,
            coord((LEFT + WIDTH - RIGHT) / 2.0),
            escape(&self.title)
        );

        // Frame and ticks.
        let (x0, x1) = (LEFT, WIDTH - RIGHT);
        let (y0, y1) = (HEIGHT - BOTTOM, TOP);
        let _ = writeln!(
            svg,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>"#,
            coord(x0),
            coord(y1),
            coord(x1 - x0),
            coord(y0 - y1)
        );
        for t in x_axis.ticks() {
            let x = coord(x_axis.map(t));
            let _ = writeln!(
                svg,
                r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="black"/><text x="{x}" y="{}" text-anchor="middle">{}</text>"#,
                coord(y0),
                coord(y0 + 5.0),
                coord(y0 + 20.0),
                format_sig(t, 3)
            );
        }
        for t in y_axis.ticks() {
            let y = coord(y_axis.map(t));
            let _ = writeln!(
                svg,
                r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black"/><text x="{}" y="{y}" text-anchor="end" dominant-baseline="middle">{}</text>"#,
                coord(x0 - 5.0),
                coord(x0),
                coord(x0 - 8.0),
                format_sig(t, 3)
            );
        }
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            coord((x0 + x1) / 2.0),
            coord(HEIGHT - 15.0),
            escape(&self.x_label)
        );
        let _ = writeln!(
            svg,
            r#"<text x="20" y="{}" text-anchor="middle" transform="rotate(-90 20 {})">{}</text>"#,
            coord((y0 + y1) / 2.0),
            coord((y0 + y1) / 2.0),
            escape(&self.y_label)
        );

        for (i, series) in self.series.iter().enumerate() {
            let colour = PALETTE[i % PALETTE.len()];
            let points = series
                .points
                .iter()
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|&(x, y)| format!("{},{}", coord(x_axis.map(x)), coord(y_axis.map(y))))
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(
                svg,
                r#"<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{points}"/>"#
            );
            let ly = TOP + 10.0 + 20.0 * i as f64;
            let lx = WIDTH - RIGHT + 15.0;
            let _ = writeln!(
                svg,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{colour}" stroke-width="2"/><text x="{}" y="{}" dominant-baseline="middle">{}</text>"#,
                coord(lx),
                coord(ly),
                coord(lx + 25.0),
                coord(ly),
                coord(lx + 32.0),
                coord(ly),
                escape(&series.label)
            );
        }
        svg.push_str("</svg>\n");
        svg
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart() -> Chart {
        Chart {
            title: "a < b & c".into(),
            x_label: "ka".into(),
            y_label: "Re(c/β)".into(),
            description: "test".into(),
            series: vec![
                Series {
                    label: "λ = 0.7".into(),
                    points: vec![(0.5, 1.0), (1.0, 2.0), (3.0, 1.5)],
                },
                Series {
                    label: "λ = 1".into(),
                    points: vec![(0.5, 0.5), (3.0, 0.7)],
                },
            ],
        }
    }

    #[test]
    fn renders_one_polyline_per_series() {
        let svg = chart().render();
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains(r#"viewBox="0 0 800 500""#));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("a &lt; b &amp; c"));
    }

    #[test]
    fn coordinates_have_three_decimals() {
        let svg = chart().render();
        let start = svg.find("points=\"").unwrap() + 8;
        let end = start + svg[start..].find('"').unwrap();
        for pair in svg[start..end].split(' ') {
            for c in pair.split(',') {
                let (_, frac) = c.split_once('.').unwrap();
                assert_eq!(frac.len(), 3, "{c}");
            }
        }
    }

    #[test]
    fn degenerate_ranges_do_not_divide_by_zero() {
        let flat = Chart {
            series: vec![Series {
                label: "flat".into(),
                points: vec![(1.0, 2.0), (1.0, 2.0)],
            }],
            ..Chart::default()
        };
        assert!(!flat.render().contains("NaN"));
        assert!(!Chart::default().render().contains("NaN"));
    }
}
