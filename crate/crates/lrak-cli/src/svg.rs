//! Minimal log-y line chart of a figure's series.

use std::fmt::Write as _;

use lrak::figures::{FigureData, Series};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 440.0;
const MARGIN: f64 = 60.0;

fn color(s: Series) -> &'static str {
    match s {
        Series::Best => "#000000",
        Series::Zolotarev => "#d62728",
        Series::Chebyshev => "#1f77b4",
        Series::Bound => "#2ca02c",
    }
}

pub fn render(data: &FigureData) -> String {
    let positive = data.rows.iter().filter(|r| r.value > 0.0 && r.value.is_finite());
    let (mut lo, mut hi, mut n_hi) = (f64::INFINITY, f64::NEG_INFINITY, 1usize);
    for r in positive {
        lo = lo.min(r.value.log10());
        hi = hi.max(r.value.log10());
        n_hi = n_hi.max(r.n);
    }
    if !lo.is_finite() {
        (lo, hi) = (-1.0, 0.0);
    }
    let (lo, hi) = (lo.floor(), hi.ceil().max(lo.floor() + 1.0));
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let px = |n: usize| MARGIN + plot_w * (n as f64 - 1.0) / ((n_hi as f64 - 1.0).max(1.0));
    let py = |v: f64| MARGIN + plot_h * (hi - v.log10()) / (hi - lo);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="11">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        MARGIN / 2.0,
        data.figure
    )
    .unwrap();
    let step = ((hi - lo) / 8.0).ceil().max(1.0);
    let mut e = lo;
    while e <= hi {
        let y = MARGIN + plot_h * (hi - e) / (hi - lo);
        writeln!(
            s,
            r#"<line x1="{MARGIN}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="gray" stroke-width="0.3"/>"#,
            MARGIN + plot_w
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">1e{}</text>"#,
            MARGIN - 4.0,
            y + 4.0,
            e as i64
        )
        .unwrap();
        e += step;
    }
    for n in [1, n_hi] {
        writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{n}</text>"#,
            px(n),
            MARGIN + plot_h + 16.0
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">n</text>"#,
        WIDTH / 2.0,
        HEIGHT - 16.0
    )
    .unwrap();

    let present: Vec<Series> = Series::ALL
        .into_iter()
        .filter(|&x| data.rows.iter().any(|r| r.series == x))
        .collect();
    for (k, &series) in present.iter().enumerate() {
        let pts: Vec<String> = data
            .series(series)
            .into_iter()
            .filter(|&(_, v)| v > 0.0 && v.is_finite())
            .map(|(n, v)| format!("{:.1},{:.1}", px(n), py(v)))
            .collect();
        writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
            pts.join(" "),
            color(series)
        )
        .unwrap();
        let ly = MARGIN + 14.0 + 14.0 * k as f64;
        let lx = MARGIN + plot_w - 90.0;
        writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{}" stroke-width="1.5"/>"#,
            lx + 18.0,
            color(series)
        )
        .unwrap();
        writeln!(s, r#"<text x="{}" y="{}">{series}</text>"#, lx + 22.0, ly + 4.0).unwrap();
    }
    s.push_str("</svg>\n");
    s
}
