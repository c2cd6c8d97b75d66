//! The ample cone of `F_e` drawn in the `(F, C0)` coordinate plane: the two
//! boundary rays, one ray per wall, and a mark for each polarization.
//!
//! Output is byte-deterministic: fixed canvas, walls in canonical order,
//! coordinates printed with three decimals.

use crate::error::{Error, Result};
use crate::picard::{DivisorClass, Surface};
use crate::walls::enumerate_walls;

const CANVAS: f64 = 600.0;
const MARGIN: f64 = 50.0;

struct Frame {
    scale: f64,
    extent: f64,
}

impl Frame {
    /// Screen position of `aC0 + bF`; `F` runs right and `C0` runs up.
    fn point(&self, a: f64, b: f64) -> (f64, f64) {
        (MARGIN + b * self.scale, CANVAS - MARGIN - a * self.scale)
    }

    /// Endpoint of the ray through `(a, b)` on the boundary of the frame.
    fn ray_end(&self, a: f64, b: f64) -> (f64, f64) {
        let t = self.extent / a.max(b);
        self.point(a * t, b * t)
    }
}

fn num(x: f64) -> String {
    format!("{x:.3}")
}

pub fn cone_svg(
    s: &Surface,
    c1: &DivisorClass,
    c2: i64,
    polarizations: &[DivisorClass],
) -> Result<String> {
    let e = s.e().ok_or_else(|| {
        Error::invalid("the projective plane has no two-dimensional ample cone to draw")
    })?;
    for l in polarizations {
        s.require_ample(l, "polarization")?;
    }
    let walls = enumerate_walls(s, c1, c2)?;

    let largest = polarizations
        .iter()
        .flat_map(|l| l.coords().iter().copied())
        .chain([1, e])
        .max()
        .unwrap_or(1) as f64;
    let extent = largest * 1.25;
    let frame = Frame {
        scale: (CANVAS - 2.0 * MARGIN) / extent,
        extent,
    };

    let mut svg = String::new();
    let w = |svg: &mut String, line: String| {
        svg.push_str(&line);
        svg.push('\n');
    };
    w(
        &mut svg,
        format!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
            CANVAS
        ),
    );
    w(
        &mut svg,
        r#"<rect width="100%" height="100%" fill="white"/>"#.to_string(),
    );

    let (ox, oy) = frame.point(0.0, 0.0);
    let (fx, fy) = frame.ray_end(0.0, 1.0);
    let (kx, ky) = frame.ray_end(1.0, e as f64);
    let (cx, cy) = frame.point(frame.extent, frame.extent);
    w(
        &mut svg,
        format!(
            r##"<polygon class="ample-cone" points="{},{} {},{} {},{} {},{}" fill="#eef3fb" stroke="none"/>"##,
            num(ox),
            num(oy),
            num(fx),
            num(fy),
            num(cx),
            num(cy),
            num(kx),
            num(ky)
        ),
    );

    // Coordinate axes.
    let (ax, ay) = frame.point(frame.extent, 0.0);
    w(&mut svg, line("axis", (ox, oy), (ax, ay), "#999999", None));
    w(&mut svg, label((ax - 20.0, ay), "C0"));
    w(&mut svg, line("axis", (ox, oy), (fx, fy), "#999999", None));
    w(&mut svg, label((fx + 8.0, fy + 4.0), "F"));

    w(
        &mut svg,
        line("cone-boundary", (ox, oy), (fx, fy), "#1f4e99", None),
    );
    w(
        &mut svg,
        line("cone-boundary", (ox, oy), (kx, ky), "#1f4e99", None),
    );

    for wall in &walls {
        let (p, q) = wall.xi().pair().expect("hirzebruch class");
        // ξ·(aC0 + bF) = 0 along a = p, b = pe - q.
        let end = frame.ray_end(p as f64, (p * e - q) as f64);
        w(
            &mut svg,
            line("wall", (ox, oy), end, "#c0392b", Some(&wall.xi())),
        );
        w(
            &mut svg,
            label((end.0 + 4.0, end.1 - 4.0), &format!("W{}", wall.xi())),
        );
    }

    for (i, l) in polarizations.iter().enumerate() {
        let (a, b) = l.pair().expect("hirzebruch class");
        let (x, y) = frame.point(a as f64, b as f64);
        w(
            &mut svg,
            format!(
                r##"<circle class="polarization" cx="{}" cy="{}" r="4" fill="#222222"/>"##,
                num(x),
                num(y)
            ),
        );
        w(
            &mut svg,
            label((x + 6.0, y - 6.0), &format!("L{} {}", i + 1, l)),
        );
    }
    w(&mut svg, "</svg>".to_string());
    Ok(svg)
}

fn line(
    class: &str,
    from: (f64, f64),
    to: (f64, f64),
    stroke: &str,
    xi: Option<&DivisorClass>,
) -> String {
    let data = xi
        .map(|x| {
            let c = x.coords();
            format!(r#" data-xi="{},{}""#, c[0], c[1])
        })
        .unwrap_or_default();
    format!(
        r#"<line class="{class}"{data} x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="1.5"/>"#,
        num(from.0),
        num(from.1),
        num(to.0),
        num(to.1)
    )
}

fn label(at: (f64, f64), text: &str) -> String {
    format!(
        r#"<text x="{}" y="{}" font-family="monospace" font-size="12">{text}</text>"#,
        num(at.0),
        num(at.1)
    )
}
