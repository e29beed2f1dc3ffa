//! CSV tables and SVG line plots.
//!
//! Floats are written with 12 significant digits in `%g` style so that the
//! bytes do not depend on the platform's shortest-round-trip printer.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::chain::IonConfiguration;
use crate::error::{domain, Error, Result};
use crate::experiments::{DisorderRecord, MinimaRecord, SweepRecord, TransitionEstimate};
use crate::phonons::ModeLocalization;

pub const PHONON_HEADER: [&str; 6] = ["mode_index", "k_scaled", "omega", "participation_ratio", "centroid", "spread"];
pub const SWEEP_HEADER: [&str; 7] = ["K", "N", "omega_tr", "omega0", "energy", "n_minima", "converged"];
pub const TRANSITION_HEADER: [&str; 3] = ["method", "k_c", "detail_json"];
pub const DISORDER_HEADER: [&str; 6] = ["N", "seed", "min_omega", "pr_median", "pr_q25", "pr_q75"];
pub const CONFIGURATION_HEADER: [&str; 3] = ["index", "position", "spacing_to_next"];
pub const MAP_ORBIT_HEADER: [&str; 3] = ["step", "x", "y_or_p"];
pub const MINIMA_HEADER: [&str; 6] = ["K", "N", "n_minima", "first_gap", "median_gap", "ground_energy"];

/// `%.12g`.
pub fn fmt_g(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa), exp.abs())
    } else {
        strip_zeros(&format!("{:.*}", (11 - exp) as usize, v)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Header plus rows, with RFC 4180 quoting where needed.
pub fn csv_table<const C: usize>(header: [&str; C], rows: impl IntoIterator<Item = [String; C]>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn phonons_csv(modes: &[ModeLocalization]) -> String {
    csv_table(
        PHONON_HEADER,
        modes.iter().map(|m| {
            [
                m.mode_index.to_string(),
                fmt_g(m.k_scaled),
                fmt_g(m.omega),
                fmt_g(m.participation_ratio),
                fmt_g(m.centroid),
                fmt_g(m.spread),
            ]
        }),
    )
}

pub fn sweep_csv(records: &[SweepRecord]) -> String {
    csv_table(
        SWEEP_HEADER,
        records.iter().map(|r| {
            [
                fmt_g(r.k),
                r.n.to_string(),
                fmt_g(r.omega_tr),
                fmt_g(r.omega0),
                fmt_g(r.energy),
                r.n_distinct_minima.to_string(),
                r.converged.to_string(),
            ]
        }),
    )
}

pub fn transition_csv(estimates: &[TransitionEstimate]) -> String {
    csv_table(
        TRANSITION_HEADER,
        estimates.iter().map(|e| {
            let detail: Vec<serde_json::Value> = e
                .details
                .iter()
                .map(|p| {
                    serde_json::json!({
                        "K": fmt_g(p.k),
                        "spread": fmt_g(p.spread),
                        "min_omega0": fmt_g(p.min_omega0),
                        "collapsed": p.collapsed,
                    })
                })
                .collect();
            [
                e.method.name().to_string(),
                fmt_g(e.k_c_estimate),
                serde_json::Value::Array(detail).to_string(),
            ]
        }),
    )
}

pub fn disorder_csv(records: &[DisorderRecord]) -> String {
    csv_table(
        DISORDER_HEADER,
        records.iter().map(|r| {
            [
                r.n.to_string(),
                r.seed.to_string(),
                fmt_g(r.min_omega),
                fmt_g(r.pr_median),
                fmt_g(r.pr_q25),
                fmt_g(r.pr_q75),
            ]
        }),
    )
}

/// The last ion has an empty `spacing_to_next`.
pub fn configuration_csv(config: &IonConfiguration) -> String {
    let x = &config.positions;
    csv_table(
        CONFIGURATION_HEADER,
        x.iter().enumerate().map(|(i, p)| {
            let s = x.get(i + 1).map(|q| fmt_g(q - p)).unwrap_or_default();
            [i.to_string(), fmt_g(*p), s]
        }),
    )
}

pub fn map_orbit_csv(points: &[(f64, f64)]) -> String {
    csv_table(
        MAP_ORBIT_HEADER,
        points.iter().enumerate().map(|(i, (x, y))| [i.to_string(), fmt_g(*x), fmt_g(*y)]),
    )
}

pub fn minima_csv(records: &[MinimaRecord]) -> String {
    csv_table(
        MINIMA_HEADER,
        records.iter().map(|r| {
            [
                fmt_g(r.k),
                r.n.to_string(),
                r.n_distinct.to_string(),
                fmt_g(r.first_gap),
                fmt_g(r.median_gap),
                fmt_g(r.ground_energy),
            ]
        }),
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Self {
            label: label.into(),
            points,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PlotOptions {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub log_x: bool,
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 150.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 50.0;
const COLORS: [&str; 6] = ["#1f4e9c", "#c2185b", "#2e7d32", "#ef6c00", "#6a1b9a", "#00838f"];

/// Standalone SVG with one polyline per series and a legend.
pub fn svg_plot(series: &[Series], opts: &PlotOptions) -> Result<String> {
    if series.is_empty() || series.iter().any(|s| s.points.is_empty()) {
        return Err(domain("plot needs at least one non-empty series"));
    }
    let tx = |x: f64| if opts.log_x { x.log10() } else { x };
    let mut pts = series.iter().flat_map(|s| s.points.iter());
    if pts.any(|(x, y)| !tx(*x).is_finite() || !y.is_finite()) {
        return Err(domain("plot points must be finite (and x > 0 on a log axis)"));
    }
    let all = || series.iter().flat_map(|s| s.points.iter());
    let (mut x0, mut x1) = bounds(all().map(|p| tx(p.0)));
    let (mut y0, mut y1) = bounds(all().map(|p| p.1));
    widen(&mut x0, &mut x1);
    widen(&mut y0, &mut y1);
    let pw = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let ph = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (tx(x) - x0) / (x1 - x0) * pw;
    let sy = |y: f64| MARGIN_TOP + (y1 - y) / (y1 - y0) * ph;

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    s.push_str(&format!(
        "<rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{pw}\" height=\"{ph}\" fill=\"none\" stroke=\"black\"/>\n"
    ));
    for i in 0..=4 {
        let f = i as f64 / 4.0;
        let xv = x0 + f * (x1 - x0);
        let yv = y0 + f * (y1 - y0);
        let label = if opts.log_x { fmt_tick(10f64.powf(xv)) } else { fmt_tick(xv) };
        let px = MARGIN_LEFT + f * pw;
        let py = MARGIN_TOP + (1.0 - f) * ph;
        s.push_str(&format!(
            "<text x=\"{px:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\">{label}</text>\n",
            MARGIN_TOP + ph + 16.0
        ));
        s.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\">{}</text>\n",
            MARGIN_LEFT - 6.0,
            py + 4.0,
            fmt_tick(yv)
        ));
    }
    s.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"13\" text-anchor=\"middle\">{}</text>\n",
        MARGIN_LEFT + pw / 2.0,
        HEIGHT - 12.0,
        escape(&opts.x_label)
    ));
    s.push_str(&format!(
        "<text x=\"16\" y=\"{:.2}\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.2})\">{}</text>\n",
        MARGIN_TOP + ph / 2.0,
        MARGIN_TOP + ph / 2.0,
        escape(&opts.y_label)
    ));
    if !opts.title.is_empty() {
        s.push_str(&format!(
            "<text x=\"{:.2}\" y=\"24\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
            MARGIN_LEFT + pw / 2.0,
            escape(&opts.title)
        ));
    }
    for (i, ser) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let coords: Vec<String> = ser.points.iter().map(|(x, y)| format!("{:.2},{:.2}", sx(*x), sy(*y))).collect();
        s.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            coords.join(" ")
        ));
        let ly = MARGIN_TOP + 14.0 + 18.0 * i as f64;
        let lx = MARGIN_LEFT + pw + 12.0;
        s.push_str(&format!(
            "<line x1=\"{lx:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            lx + 20.0
        ));
        s.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\">{}</text>\n",
            lx + 26.0,
            ly + 4.0,
            escape(&ser.label)
        ));
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// [`svg_plot`] written to `path`.
pub fn write_svg_plot(series: &[Series], opts: &PlotOptions, path: &Path) -> Result<()> {
    let svg = svg_plot(series, opts)?;
    let mut f = fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    f.write_all(svg.as_bytes())?;
    Ok(())
}

fn bounds(v: impl Iterator<Item = f64>) -> (f64, f64) {
    v.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

fn widen(lo: &mut f64, hi: &mut f64) {
    if *hi - *lo <= f64::EPSILON * lo.abs().max(1.0) {
        *lo -= 0.5;
        *hi += 0.5;
    }
}

fn fmt_tick(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && !(1e-3..1e4).contains(&a) {
        format!("{v:.2e}")
    } else {
        strip_zeros(&format!("{v:.4}")).to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
