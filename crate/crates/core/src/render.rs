//! Tile figures: point clouds of evaluated digit strings, fundamental
//! domain sweeps, and the rescaled sets that converge to the
//! self-similar tile of a system.
//!
//! Lattice coordinates are computed exactly and only converted to floats
//! at the very end; rasterization is a deterministic binning, so a rerun
//! with the same inputs produces byte-identical files.

use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::binding::QuadBinding;
use crate::digit::Digit;
use crate::error::{Error, Result};
use crate::QuadInt;

/// Cap on `(n+1)^(d+1)` point generation.
pub const POINT_GUARD: u128 = 1 << 24;

/// Complex rectangle `[x0, x1] x [y0, y1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Viewport {
    pub fn square(half: f64) -> Self {
        Viewport {
            x0: -half,
            x1: half,
            y0: -half,
            y1: half,
        }
    }
}

/// Occupancy raster plus provenance metadata.
#[derive(Clone, Debug)]
pub struct TileImage {
    pub width: u32,
    pub height: u32,
    pub viewport: Viewport,
    /// row-major occupancy, `width * height` entries
    pub pixels: Vec<bool>,
    pub system: String,
    pub degree: u32,
    pub points: u64,
    pub clipped: u64,
}

/// Every lattice point `sigma(s)` over strings of degree at most `d`,
/// exact in the `(1, w)` basis.
pub fn tile_points(bind: &QuadBinding, d: u32) -> Result<Vec<QuadInt>> {
    let n = bind.system().order();
    let count = (n as u128 + 1).pow(d + 1);
    if count > POINT_GUARD {
        return Err(Error::TooLarge {
            size: count,
            guard: POINT_GUARD,
        });
    }
    // points of degree <= k are iota(digit) + X * (points of degree <= k-1)
    let digits: Vec<QuadInt> = std::iter::once(QuadInt::zero())
        .chain((0..n).map(|e| bind.iota(Digit::Root(e))))
        .collect();
    let mut points = digits.clone();
    for _ in 0..d {
        let mut next = Vec::with_capacity(points.len() * digits.len());
        for p in &points {
            let shifted = bind.order_spec().mul(p, bind.x());
            for dig in &digits {
                next.push(shifted.add(dig));
            }
        }
        points = next;
    }
    Ok(points)
}

/// Lattice points as complex values under the order's embedding.
pub fn to_complex(bind: &QuadBinding, points: &[QuadInt]) -> Vec<Complex64> {
    points.iter().map(|p| bind.order_spec().embed(p)).collect()
}

/// The rescaled sweep `X^{-d} (sigma(strings of degree <= d) + F)` with
/// `F` the fundamental parallelogram spanned by 1 and `w`. Successive
/// degrees converge to the self-similar tile of the system.
#[derive(Clone, Debug)]
pub struct ZnSet {
    /// lattice corners of the swept cells
    pub cells: Vec<(i64, i64)>,
    /// complex scale factor `X^{-d}`
    pub scale: Complex64,
    /// complex value of `w` (0 for the rational case: cells are intervals)
    pub omega: Complex64,
    pub degree: u32,
}

pub fn z_n_set(bind: &QuadBinding, d: u32) -> Result<ZnSet> {
    let points = tile_points(bind, d)?;
    let cells = points
        .iter()
        .map(|p| {
            let a = p.a.to_i64().ok_or(Error::TooLarge {
                size: u128::MAX,
                guard: i64::MAX as u128,
            })?;
            let b = p.b.to_i64().ok_or(Error::TooLarge {
                size: u128::MAX,
                guard: i64::MAX as u128,
            })?;
            Ok((a, b))
        })
        .collect::<Result<Vec<_>>>()?;
    let x = bind.order_spec().embed(bind.x());
    let scale = Complex64::new(1.0, 0.0) / x.powi(d as i32);
    Ok(ZnSet {
        cells,
        scale,
        omega: bind.order_spec().omega_complex(),
        degree: d,
    })
}

/// Bounding box of a point set with a small margin; deterministic.
pub fn auto_viewport(points: &[Complex64]) -> Viewport {
    let mut x0 = f64::INFINITY;
    let mut x1 = f64::NEG_INFINITY;
    let mut y0 = f64::INFINITY;
    let mut y1 = f64::NEG_INFINITY;
    for p in points {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(p.im);
        y1 = y1.max(p.im);
    }
    if points.is_empty() {
        return Viewport::square(1.0);
    }
    let mx = ((x1 - x0) * 0.05).max(0.5);
    let my = ((y1 - y0) * 0.05).max(0.5);
    Viewport {
        x0: x0 - mx,
        x1: x1 + mx,
        y0: y0 - my,
        y1: y1 + my,
    }
}

/// Deterministic binning of points into an occupancy raster.
pub fn rasterize_points(
    points: &[Complex64],
    viewport: Viewport,
    width: u32,
    height: u32,
    system: &str,
    degree: u32,
) -> Result<TileImage> {
    if (width as u64) * (height as u64) > 8192 * 8192 {
        return Err(Error::TooLarge {
            size: (width as u128) * (height as u128),
            guard: 8192 * 8192,
        });
    }
    let mut pixels = vec![false; (width as usize) * (height as usize)];
    let mut clipped = 0u64;
    for p in points {
        let px = ((p.re - viewport.x0) / (viewport.x1 - viewport.x0) * width as f64).floor();
        let py = ((viewport.y1 - p.im) / (viewport.y1 - viewport.y0) * height as f64).floor();
        if px < 0.0 || py < 0.0 || px >= width as f64 || py >= height as f64 {
            clipped += 1;
            continue;
        }
        pixels[py as usize * width as usize + px as usize] = true;
    }
    Ok(TileImage {
        width,
        height,
        viewport,
        pixels,
        system: system.to_string(),
        degree,
        points: points.len() as u64,
        clipped,
    })
}

/// Rasterizes the swept cells of a rescaled set by membership testing
/// each pixel center: map the center back through `X^d`, locate its
/// lattice cell in the `(1, w)` basis, and look it up.
pub fn rasterize_cells(
    zn: &ZnSet,
    viewport: Viewport,
    width: u32,
    height: u32,
    system: &str,
) -> Result<TileImage> {
    if (width as u64) * (height as u64) > 8192 * 8192 {
        return Err(Error::TooLarge {
            size: (width as u128) * (height as u128),
            guard: 8192 * 8192,
        });
    }
    let members: std::collections::HashSet<(i64, i64)> = zn.cells.iter().copied().collect();
    let rational = zn.omega.im.abs() < 1e-12;
    let mut pixels = vec![false; (width as usize) * (height as usize)];
    for py in 0..height {
        for px in 0..width {
            let re = viewport.x0
                + (px as f64 + 0.5) / width as f64 * (viewport.x1 - viewport.x0);
            let im = viewport.y1
                - (py as f64 + 0.5) / height as f64 * (viewport.y1 - viewport.y0);
            let z = Complex64::new(re, im) / zn.scale;
            let (a, b) = if rational {
                if z.im.abs() > 0.5 {
                    continue;
                }
                (z.re.floor(), 0.0)
            } else {
                let b = z.im / zn.omega.im;
                let a = z.re - b * zn.omega.re;
                (a.floor(), b.floor())
            };
            if members.contains(&(a as i64, b as i64)) {
                pixels[py as usize * width as usize + px as usize] = true;
            }
        }
    }
    Ok(TileImage {
        width,
        height,
        viewport,
        pixels,
        system: system.to_string(),
        degree: zn.degree,
        points: zn.cells.len() as u64,
        clipped: 0,
    })
}

impl TileImage {
    /// Binary portable pixmap: white background, black occupancy.
    pub fn to_ppm_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.pixels.len() * 3 + 128);
        let header = format!(
            "P6\n# holdring system={} degree={} points={} clipped={}\n{} {}\n255\n",
            self.system, self.degree, self.points, self.clipped, self.width, self.height
        );
        out.extend_from_slice(header.as_bytes());
        for &p in &self.pixels {
            let v = if p { 0u8 } else { 255u8 };
            out.extend_from_slice(&[v, v, v]);
        }
        out
    }

    pub fn write_ppm(&self, path: &Path) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(&self.to_ppm_bytes())?;
        Ok(())
    }

    /// SVG with one unit rect per occupied pixel, in pixel coordinates.
    pub fn to_svg(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
             viewBox=\"0 0 {w} {h}\">\n<!-- holdring system={} degree={} points={} -->\n\
             <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            self.system,
            self.degree,
            self.points,
            w = self.width,
            h = self.height
        ));
        for py in 0..self.height {
            for px in 0..self.width {
                if self.pixels[py as usize * self.width as usize + px as usize] {
                    s.push_str(&format!(
                        "<rect x=\"{px}\" y=\"{py}\" width=\"1\" height=\"1\"/>\n"
                    ));
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }

    pub fn write_svg(&self, path: &Path) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_svg().as_bytes())?;
        Ok(())
    }

    pub fn occupied(&self) -> u64 {
        self.pixels.iter().filter(|&&p| p).count() as u64
    }
}

/// How a figure is drawn: raw evaluation points, unscaled fundamental
/// domain translates, or the rescaled converging set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureMode {
    Points,
    Cells,
    Rescaled,
}

/// One figure configuration of the source tables: system, degree, mode.
#[derive(Clone, Debug)]
pub struct FigureSpec {
    pub label: &'static str,
    pub system: &'static str,
    pub degree: u32,
    pub mode: FigureMode,
}

/// The tile figures reproduced by the acceptance suite.
pub fn paper_figures() -> Vec<FigureSpec> {
    use FigureMode::*;
    vec![
        FigureSpec { label: "gauss-deg12", system: "gauss", degree: 12, mode: Points },
        FigureSpec { label: "q7-deg11", system: "q7", degree: 11, mode: Cells },
        FigureSpec { label: "q11-deg0", system: "q11", degree: 0, mode: Cells },
        FigureSpec { label: "q11-deg1", system: "q11", degree: 1, mode: Cells },
        FigureSpec { label: "q11-deg2", system: "q11", degree: 2, mode: Cells },
        FigureSpec { label: "q11-deg3", system: "q11", degree: 3, mode: Cells },
        FigureSpec { label: "q11-deg4", system: "q11", degree: 4, mode: Cells },
        FigureSpec { label: "q11-deg7", system: "q11", degree: 7, mode: Cells },
        FigureSpec { label: "q2n2-deg9", system: "q2n2", degree: 9, mode: Points },
        FigureSpec { label: "mu3-deg7", system: "mu3", degree: 7, mode: Points },
        FigureSpec { label: "mu4-deg4", system: "mu4", degree: 4, mode: Points },
        FigureSpec { label: "mu6-deg2", system: "mu6", degree: 2, mode: Points },
    ]
}
