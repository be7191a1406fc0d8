use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;

use super::projection::{ProjectionKind, ProjectionMatrix};
use super::rotation::{mat_mul, rotation_pairs, rotation_schedule, FloatMat};
use super::scene::{ElementClass, Scene};
use crate::exact::RatVec;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Svg,
    Obj,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Svg => "svg",
            OutputFormat::Obj => "obj",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(OutputFormat::Svg),
            "obj" => Ok(OutputFormat::Obj),
            _ => Err(Error::Invalid(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FrameSpec {
    pub t: f64,
    pub projection: ProjectionKind,
    pub format: OutputFormat,
    /// Canvas edge length in pixels (SVG only).
    pub size: u32,
    /// Frames per rotation plane; the frame label is
    /// `floor(t · C(m,2) · frames_per_interval)`.
    pub frames_per_interval: f64,
}

impl FrameSpec {
    pub fn new(t: f64, projection: ProjectionKind, format: OutputFormat) -> Self {
        FrameSpec {
            t,
            projection,
            format,
            size: 640,
            frames_per_interval: 80.0,
        }
    }

    pub fn label(&self, m: usize) -> u64 {
        let c = rotation_pairs(m).len() as f64;
        (self.t * c * self.frames_per_interval + 1e-9).floor() as u64
    }
}

/// Hex color of a fully saturated, full-value HSV hue in degrees.
pub fn hsv_hex(hue: f64) -> String {
    let h = hue.rem_euclid(360.0) / 60.0;
    let x = 1.0 - (h % 2.0 - 1.0).abs();
    let (r, g, b) = match h as u32 {
        0 => (1.0, x, 0.0),
        1 => (x, 1.0, 0.0),
        2 => (0.0, 1.0, x),
        3 => (0.0, x, 1.0),
        4 => (x, 0.0, 1.0),
        _ => (1.0, 0.0, x),
    };
    let q = |v: f64| (v * 255.0).round() as u8;
    format!("#{:02x}{:02x}{:02x}", q(r), q(g), q(b))
}

struct Style {
    color: String,
    width: f64,
}

fn style(class: ElementClass) -> Style {
    let (color, width) = match class {
        ElementClass::CubeEdge => ("#808080".to_string(), 1.0),
        ElementClass::BaseHighlight => ("#808080".to_string(), 2.0),
        ElementClass::ConeEdge => (hsv_hex(0.0), 2.0),
        ElementClass::SimplexEdge => (hsv_hex(180.0), 3.0),
        ElementClass::CuboidStick => (hsv_hex(252.0), 2.0),
        ElementClass::BarycenterDot => (hsv_hex(356.4), 0.005),
        ElementClass::OriginDot => ("#000000".to_string(), 0.01),
    };
    Style { color, width }
}

struct Frame {
    rotation: FloatMat,
    projection: ProjectionMatrix,
}

impl Frame {
    fn project(&self, x: &RatVec) -> Vec<f64> {
        let col: FloatMat = x.to_f64().into_iter().map(|v| vec![v]).collect();
        let rotated: Vec<f64> = mat_mul(&self.rotation, &col)
            .into_iter()
            .map(|r| r[0])
            .collect();
        self.projection.apply(&rotated)
    }
}

fn fmt_num(v: f64, places: usize) -> String {
    let s = format!("{v:.places$}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// Renders one frame: rotate by the schedule at `t`, then project.
pub fn render_frame(scene: &Scene, spec: &FrameSpec) -> Result<Vec<u8>> {
    let m = scene.ambient;
    let projection = spec.projection.matrix(m)?;
    let needed = match spec.format {
        OutputFormat::Svg => 2,
        OutputFormat::Obj => 3,
    };
    if projection.nrows() != needed {
        return Err(Error::Invalid(format!(
            "{} projection has {} rows but {} output needs {needed}",
            spec.projection,
            projection.nrows(),
            spec.format.extension()
        )));
    }
    let frame = Frame {
        rotation: rotation_schedule(m, spec.t)?,
        projection,
    };
    Ok(match spec.format {
        OutputFormat::Svg => svg(scene, spec, &frame),
        OutputFormat::Obj => obj(scene, spec, &frame),
    }
    .into_bytes())
}

fn svg(scene: &Scene, spec: &FrameSpec, frame: &Frame) -> String {
    let size = spec.size as f64;
    let radius = scene
        .points
        .iter()
        .map(|p| &p.0)
        .chain(scene.edges.iter().flat_map(|e| [&e.0, &e.1]))
        .map(|v| v.to_f64().iter().map(|x| x * x).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    let mut extent = frame.projection.operator_norm() * radius;
    if extent <= 0.0 {
        extent = 1.0;
    }
    let scale = 0.4 * size / extent;
    let to_px = |x: &RatVec| {
        let p = frame.project(x);
        (size / 2.0 + p[0] * scale, size / 2.0 - p[1] * scale)
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        spec.size
    );
    let _ = writeln!(out, r#"<g fill="none" stroke-linecap="round">"#);
    for (a, b, class) in &scene.edges {
        let s = style(*class);
        let (x1, y1) = to_px(a);
        let (x2, y2) = to_px(b);
        let _ = writeln!(
            out,
            r#"<line class="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="{}"/>"#,
            class.name(),
            fmt_num(x1, 3),
            fmt_num(y1, 3),
            fmt_num(x2, 3),
            fmt_num(y2, 3),
            s.color,
            s.width
        );
    }
    for (p, class) in &scene.points {
        let s = style(*class);
        let (cx, cy) = to_px(p);
        let _ = writeln!(
            out,
            r#"<circle class="{}" cx="{}" cy="{}" r="{}" fill="{}"/>"#,
            class.name(),
            fmt_num(cx, 3),
            fmt_num(cy, 3),
            fmt_num(s.width * size, 3),
            s.color
        );
    }
    let _ = writeln!(
        out,
        r##"<text x="{}" y="{}" font-family="sans-serif" font-size="{}" fill="#1a1a1a">{}</text>"##,
        fmt_num(size * 0.04, 3),
        fmt_num(size * 0.07, 3),
        fmt_num(size * 0.04, 3),
        spec.label(scene.ambient)
    );
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

fn obj(scene: &Scene, spec: &FrameSpec, frame: &Frame) -> String {
    let mut index: HashMap<&RatVec, usize> = HashMap::new();
    let mut order: Vec<&RatVec> = Vec::new();
    for v in scene
        .edges
        .iter()
        .flat_map(|e| [&e.0, &e.1])
        .chain(scene.points.iter().map(|p| &p.0))
    {
        if !index.contains_key(v) {
            order.push(v);
            index.insert(v, order.len());
        }
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# m={} projection={} t={} frame={}",
        scene.ambient,
        spec.projection,
        spec.t,
        spec.label(scene.ambient)
    );
    for v in &order {
        let p = frame.project(v);
        let _ = writeln!(
            out,
            "v {} {} {}",
            fmt_num(p[0], 6),
            fmt_num(p[1], 6),
            fmt_num(p[2], 6)
        );
    }
    for (a, b, _) in &scene.edges {
        let _ = writeln!(out, "l {} {}", index[a], index[b]);
    }
    for (p, _) in &scene.points {
        let _ = writeln!(out, "p {}", index[p]);
    }
    out
}

/// Renders `frames` frames at `t_k = k / (frames - 1)`, in parallel. Frame
/// `k` is labelled `k` and named `frame_%04d.<ext>`.
pub fn animate(
    scene: &Scene,
    projection: ProjectionKind,
    format: OutputFormat,
    frames: usize,
) -> Result<Vec<(String, Vec<u8>)>> {
    let c = rotation_pairs(scene.ambient).len().max(1) as f64;
    let steps = frames.saturating_sub(1).max(1) as f64;
    (0..frames)
        .into_par_iter()
        .map(|k| {
            let mut spec = FrameSpec::new(
                if frames <= 1 { 0.0 } else { k as f64 / steps },
                projection,
                format,
            );
            spec.frames_per_interval = steps / c;
            let bytes = render_frame(scene, &spec)?;
            Ok((format!("frame_{k:04}.{}", format.extension()), bytes))
        })
        .collect()
}
