//! Static SVG pictures of planar point sets, nets and ranges.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::exact::to_f64;
use crate::geom::PointSet;
use crate::net::{Members, Net};
use crate::oracle::Witness;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 0.08;
const PALETTE: [&str; 10] = [
    "#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#17becf", "#bcbd22", "#7f7f7f", "#e377c2",
    "#ff7f0e", "#393b79",
];

/// Maps layout coordinates to the picture, y up.
struct View {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
    scale: f64,
}

impl View {
    fn new(pts: &[(f64, f64)]) -> View {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in pts {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        let side = (x1 - x0).max(y1 - y0).max(1e-9);
        let pad = side * MARGIN;
        let (x0, y0) = (x0 - pad, y0 - pad);
        let side = side + 2.0 * pad;
        View {
            x0,
            y0,
            x1: x0 + side,
            y1: y0 + side,
            scale: SIZE / side,
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            (x - self.x0) * self.scale,
            SIZE - (y - self.y0) * self.scale,
        )
    }
}

/// The part of the view inside `a x + b y <= c`.
fn clip(v: &View, a: f64, b: f64, c: f64) -> Vec<(f64, f64)> {
    let corners = [(v.x0, v.y0), (v.x1, v.y0), (v.x1, v.y1), (v.x0, v.y1)];
    let f = |p: (f64, f64)| a * p.0 + b * p.1 - c;
    let mut out = Vec::new();
    for k in 0..4 {
        let (p, q) = (corners[k], corners[(k + 1) % 4]);
        let (fp, fq) = (f(p), f(q));
        if fp <= 0.0 {
            out.push(p);
        }
        if (fp < 0.0) != (fq < 0.0) && fp != fq {
            let t = fp / (fp - fq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

fn draw_witness(svg: &mut String, v: &View, name: &str, w: &Witness) {
    let style = r##"fill="#d62728" fill-opacity="0.08" stroke="#d62728" stroke-width="1.5""##;
    match w {
        Witness::Box { lo, hi } => {
            let (ax, ay) = v.map(to_f64(&lo[0]), to_f64(&hi[1]));
            let (bx, by) = v.map(to_f64(&hi[0]), to_f64(&lo[1]));
            let _ = writeln!(
                svg,
                r#"<rect x="{ax:.2}" y="{ay:.2}" width="{:.2}" height="{:.2}" {style}><title>{name}</title></rect>"#,
                bx - ax,
                by - ay
            );
        }
        Witness::Disk { center, radius_sq } => {
            let (cx, cy) = v.map(to_f64(center.x()), to_f64(center.y()));
            let r = to_f64(radius_sq).sqrt() * v.scale;
            let _ = writeln!(
                svg,
                r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" {style}><title>{name}</title></circle>"#
            );
        }
        Witness::Halfplane { a, b, c } => {
            let poly = clip(v, to_f64(a), to_f64(b), to_f64(c));
            let pts: Vec<String> = poly
                .iter()
                .map(|&(x, y)| {
                    let (px, py) = v.map(x, y);
                    format!("{px:.2},{py:.2}")
                })
                .collect();
            let _ = writeln!(
                svg,
                r#"<polygon points="{}" {style}><title>{name}</title></polygon>"#,
                pts.join(" ")
            );
        }
    }
}

/// SVG of a planar point set coloured by cluster, with an optional net
/// (red) and named ranges.
pub fn render_svg(
    ps: &PointSet,
    net: Option<&Net>,
    witnesses: &[(String, Witness)],
) -> Result<String> {
    if ps.dim() != 2 {
        return Err(Error::UnsupportedDimension(ps.dim()));
    }
    if ps.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let pts: Vec<(f64, f64)> = ps
        .points()
        .iter()
        .map(|p| (to_f64(p.x()), to_f64(p.y())))
        .collect();
    let v = View::new(&pts);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (name, w) in witnesses {
        draw_witness(&mut svg, &v, name, w);
    }
    for (k, &(x, y)) in pts.iter().enumerate() {
        let (px, py) = v.map(x, y);
        let colour = PALETTE[ps.labels().map_or(0, |l| l[k] as usize) % PALETTE.len()];
        let _ = writeln!(
            svg,
            r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="{colour}"/>"#
        );
    }
    if let Some(net) = net {
        match &net.members {
            Members::Strong(idx) => {
                for &k in idx {
                    let (px, py) = v.map(pts[k].0, pts[k].1);
                    let _ = writeln!(
                        svg,
                        r##"<circle cx="{px:.2}" cy="{py:.2}" r="7" fill="none" stroke="#d62728" stroke-width="2"/>"##
                    );
                }
            }
            Members::Weak(q) => {
                for p in q {
                    let (px, py) = v.map(to_f64(p.x()), to_f64(p.y()));
                    let _ = writeln!(
                        svg,
                        r##"<path d="M{:.2} {:.2}l12 12m0 -12l-12 12" stroke="#d62728" stroke-width="2"/>"##,
                        px - 6.0,
                        py - 6.0
                    );
                }
            }
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
