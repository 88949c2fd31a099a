//! Radar charts (SVG 1.1 or JSON series) and portfolio reports (Markdown,
//! CSV or JSON). Output is a pure function of the input, byte for byte.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;
use tod_core::{
    radar_pair, AnalysisError, GroupKind, Portfolio, PortfolioReport, RadarSeries, Thresholds,
    ValueType,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unsupported format `{0}`")]
pub struct UnsupportedFormat(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadarFormat {
    Svg,
    Json,
}

impl FromStr for RadarFormat {
    type Err = UnsupportedFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "svg" => Ok(RadarFormat::Svg),
            "json" => Ok(RadarFormat::Json),
            other => Err(UnsupportedFormat(other.into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = UnsupportedFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(UnsupportedFormat(other.into())),
        }
    }
}

pub fn export_radar(
    portfolio: &Portfolio,
    technology: &str,
    thresholds: Thresholds,
    format: RadarFormat,
) -> Result<String, AnalysisError> {
    let series = radar_pair(portfolio, technology, thresholds)?;
    let title = portfolio
        .technology(technology)
        .map(|t| t.name.as_str())
        .unwrap_or(technology);
    Ok(match format {
        RadarFormat::Svg => radar_svg(title, &series),
        RadarFormat::Json => {
            let mut out = serde_json::to_string_pretty(&series).expect("serializable");
            out.push('\n');
            out
        }
    })
}

const SIZE: f64 = 640.0;
const CENTER_X: f64 = 320.0;
const CENTER_Y: f64 = 340.0;
const RADIUS: f64 = 210.0;
const SCALE_MAX: f64 = 7.0;

fn series_color(group: GroupKind) -> &'static str {
    match group {
        GroupKind::TechnologyDeployment => "#1f77b4",
        GroupKind::GeneralConsumers => "#ff7f0e",
    }
}

fn point(axis: usize, axis_count: usize, value: f64) -> (f64, f64) {
    // Axis 0 at twelve o'clock, then clockwise.
    let angle = -PI / 2.0 + 2.0 * PI * axis as f64 / axis_count as f64;
    let r = RADIUS * value / SCALE_MAX;
    (CENTER_X + r * angle.cos(), CENTER_Y + r * angle.sin())
}

fn fmt_point((x, y): (f64, f64)) -> String {
    format!("{:.2},{:.2}", x + 0.0, y + 0.0)
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Renders both groups over shared axes. A group with nothing on an axis
/// leaves a gap in its outline instead of dropping to the centre.
pub fn radar_svg(title: &str, series: &[RadarSeries]) -> String {
    let axes = series
        .first()
        .map(|s| s.axes.as_slice())
        .unwrap_or_default();
    let n = axes.len();
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="sans-serif">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{CENTER_X}" y="28" text-anchor="middle" font-size="18">{}</text>"#,
        escape(title)
    );

    let _ = writeln!(
        svg,
        r##"<g class="grid" fill="none" stroke="#cccccc" stroke-width="1">"##
    );
    for level in 1..=7 {
        let r = RADIUS * level as f64 / SCALE_MAX;
        let _ = writeln!(
            svg,
            r#"<circle cx="{CENTER_X}" cy="{CENTER_Y}" r="{r:.2}"/>"#
        );
    }
    for i in 0..n {
        let end = fmt_point(point(i, n, SCALE_MAX)).replace(',', "\" y2=\"");
        let _ = writeln!(svg, r#"<line x1="{CENTER_X}" y1="{CENTER_Y}" x2="{end}"/>"#);
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r##"<g class="scale" font-size="10" fill="#888888">"##);
    for level in 0..=7 {
        let y = CENTER_Y - RADIUS * level as f64 / SCALE_MAX;
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{y:.2}">{level}</text>"#,
            CENTER_X + 3.0
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g class="labels" font-size="12">"#);
    for (i, axis) in axes.iter().enumerate() {
        let (x, y) = point(i, n, SCALE_MAX + 0.6);
        let anchor = if (x - CENTER_X).abs() < 1.0 {
            "middle"
        } else if x > CENTER_X {
            "start"
        } else {
            "end"
        };
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="{anchor}" dominant-baseline="middle">{}</text>"#,
            x + 0.0,
            y + 0.0,
            escape(axis.name())
        );
    }
    let _ = writeln!(svg, "</g>");

    for s in series.iter().filter(|s| !s.is_empty()) {
        write_series(&mut svg, s);
    }

    let _ = writeln!(svg, r#"<g class="legend" font-size="12">"#);
    for (row, group) in GroupKind::ALL.into_iter().enumerate() {
        let y = SIZE - 40.0 + 18.0 * row as f64;
        let _ = writeln!(
            svg,
            r#"<rect x="20" y="{:.2}" width="12" height="12" fill="{}"/>"#,
            y - 10.0,
            series_color(group)
        );
        let _ = writeln!(svg, r#"<text x="38" y="{y:.2}">{}</text>"#, group.label());
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    svg
}

fn write_series(svg: &mut String, s: &RadarSeries) {
    let n = s.axes.len();
    let color = series_color(s.group);
    let _ = writeln!(
        svg,
        r#"<g class="series" data-group="{}" fill="none" stroke="{color}" stroke-width="2">"#,
        s.group
    );
    let points: Vec<Option<String>> = s
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| v.map(|v| fmt_point(point(i, n, v as f64))))
        .collect();

    if n >= 3 && points.iter().all(Option::is_some) {
        let joined: Vec<&str> = points.iter().flatten().map(String::as_str).collect();
        let _ = writeln!(
            svg,
            r#"<polygon points="{}" fill="{color}" fill-opacity="0.15"/>"#,
            joined.join(" ")
        );
    } else {
        for run in present_runs(&s.values) {
            if run.len() < 2 {
                continue;
            }
            let joined: Vec<&str> = run
                .iter()
                .map(|&i| points[i].as_deref().expect("present"))
                .collect();
            let _ = writeln!(svg, r#"<polyline points="{}"/>"#, joined.join(" "));
        }
    }
    for (i, p) in points.iter().enumerate() {
        if let Some(p) = p {
            let (x, y) = p.split_once(',').expect("formatted pair");
            let _ = writeln!(
                svg,
                r#"<circle cx="{x}" cy="{y}" r="4" fill="{color}"><title>{}: {}</title></circle>"#,
                escape(s.axes[i].name()),
                s.values[i].expect("present")
            );
        }
    }
    let _ = writeln!(svg, "</g>");
}

/// Maximal runs of consecutive present indices, treating the axes as a
/// ring. A fully present series yields a single run closed on itself only
/// when it has at least three axes; that case is drawn as a polygon.
fn present_runs(values: &[Option<u8>]) -> Vec<Vec<usize>> {
    let n = values.len();
    let Some(start) = (0..n).find(|&i| values[i].is_none()) else {
        return vec![(0..n).collect()];
    };
    let mut runs = Vec::new();
    let mut current = Vec::new();
    for step in 1..=n {
        let i = (start + step) % n;
        if values[i].is_some() {
            current.push(i);
        } else if !current.is_empty() {
            runs.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        runs.push(current);
    }
    runs
}

fn type_list(types: &BTreeSet<ValueType>) -> String {
    if types.is_empty() {
        return "-".into();
    }
    types
        .iter()
        .map(|t| t.name())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn export_report(report: &PortfolioReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Markdown => report_markdown(report),
        ReportFormat::Csv => report_csv(report),
        ReportFormat::Json => {
            let mut out = serde_json::to_string_pretty(report).expect("serializable");
            out.push('\n');
            out
        }
    }
}

const MARKDOWN_HEADER: &str = "| Technology | Outcome | Value Types (Tech Deployment) | Value Types (Consumers) | Vision Gap | Value Breadth (Tech Deployment) | Value Breadth (Consumers) |\n|---|---|---|---|---|---|---|\n";

fn report_markdown(report: &PortfolioReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Technology opportunity report\n");
    let _ = writeln!(
        out,
        "Thresholds: market score >= {}, TRL >= {}\n",
        report.thresholds.market_min(),
        report.thresholds.trl_min()
    );
    out.push_str(MARKDOWN_HEADER);
    for t in &report.technologies {
        let gap = &t.vision_gap;
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {}{} | {} | {} |",
            t.name,
            t.outcome.as_str(),
            type_list(&gap.expert_types),
            type_list(&gap.consumer_types),
            gap.classification.label(),
            if gap.vacuous {
                " (no consumer types)"
            } else {
                ""
            },
            t.expert_breadth.breadth,
            t.consumer_breadth.breadth
        );
    }
    out
}

fn report_csv(report: &PortfolioReport) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "technology",
            "name",
            "outcome",
            "expert_types",
            "consumer_types",
            "vision_gap",
            "gap_types",
            "mismatch_types",
            "expert_breadth",
            "consumer_breadth",
        ])
        .expect("in-memory write");
    let join = |types: &BTreeSet<ValueType>| {
        types
            .iter()
            .map(|t| t.name())
            .collect::<Vec<_>>()
            .join("; ")
    };
    for t in &report.technologies {
        let gap = &t.vision_gap;
        writer
            .write_record([
                t.technology.as_str(),
                t.name.as_str(),
                t.outcome.as_str(),
                &join(&gap.expert_types),
                &join(&gap.consumer_types),
                gap.classification.label(),
                &join(&gap.gap_types),
                &join(&gap.mismatch_types),
                &t.expert_breadth.breadth.to_string(),
                &t.consumer_breadth.breadth.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8 input")
}
