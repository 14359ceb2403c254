use std::f64::consts::TAU;

use super::QuadratureOptions;

/// Circle averages `∫ g dθ/2π` for each component of a vector integrand.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadrature {
    pub values: Vec<f64>,
    pub nodes: usize,
    pub converged: bool,
}

impl Quadrature {
    pub fn value(&self) -> f64 {
        self.values[0]
    }

    fn failed(dim: usize, nodes: usize) -> Self {
        Self {
            values: vec![f64::NAN; dim],
            nodes,
            converged: false,
        }
    }
}

/// Rotations of the node grid, as fractions of the initial step, tried in
/// turn when a node lands on a singularity.
const OFFSETS: [f64; 4] = [0.0, 0.5, 1.0 / 3.0, 0.618_033_988_749_895];

/// `∫₀^{2π} g(θ) dθ/2π` for a scalar integrand.
pub fn circle_integral(g: impl Fn(f64) -> f64, opts: &QuadratureOptions) -> Quadrature {
    circle_integral_vec(|t| vec![g(t)], 1, &[], opts)
}

/// Vector version. Without breakpoints the integrand is treated as smooth and
/// periodic (rectangle rule, doubling). With breakpoints each arc between
/// consecutive breakpoints is integrated by the composite midpoint rule with
/// one Richardson step, all arcs doubling together.
pub fn circle_integral_vec(
    g: impl Fn(f64) -> Vec<f64>,
    dim: usize,
    breakpoints: &[f64],
    opts: &QuadratureOptions,
) -> Quadrature {
    if breakpoints.is_empty() {
        periodic(&g, dim, opts)
    } else {
        piecewise(&g, dim, breakpoints, opts)
    }
}

fn max_change(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Adds `g` at `start + j·h` for `j < count` into `sums`; false on a
/// non-finite value.
fn accumulate(g: &impl Fn(f64) -> Vec<f64>, start: f64, h: f64, count: usize, sums: &mut [f64]) -> bool {
    for j in 0..count {
        let v = g(start + j as f64 * h);
        if v.iter().any(|x| !x.is_finite()) {
            return false;
        }
        for (s, x) in sums.iter_mut().zip(v) {
            *s += x;
        }
    }
    true
}

fn periodic(g: &impl Fn(f64) -> Vec<f64>, dim: usize, opts: &QuadratureOptions) -> Quadrature {
    let mut used = 0;
    'offsets: for frac in OFFSETS {
        let mut n = opts.initial_nodes.max(1);
        let offset = frac * TAU / n as f64;
        let mut sums = vec![0.0; dim];
        used += n;
        if !accumulate(g, offset, TAU / n as f64, n, &mut sums) {
            continue;
        }
        let mut prev: Vec<f64> = sums.iter().map(|s| s / n as f64).collect();
        loop {
            if 2 * n > opts.max_nodes {
                return Quadrature {
                    values: prev,
                    nodes: n,
                    converged: false,
                };
            }
            let h = TAU / n as f64;
            used += n;
            if !accumulate(g, offset + h / 2.0, h, n, &mut sums) {
                continue 'offsets;
            }
            n *= 2;
            let cur: Vec<f64> = sums.iter().map(|s| s / n as f64).collect();
            let delta = max_change(&cur, &prev);
            if delta < opts.tol {
                return Quadrature {
                    values: cur,
                    nodes: n,
                    converged: true,
                };
            }
            prev = cur;
        }
    }
    Quadrature::failed(dim, used)
}

struct Arc {
    start: f64,
    len: f64,
    nodes: usize,
}

fn midpoint_pass(g: &impl Fn(f64) -> Vec<f64>, arcs: &[Arc], scale: usize, dim: usize) -> Option<Vec<f64>> {
    let mut total = vec![0.0; dim];
    for arc in arcs {
        let m = arc.nodes * scale;
        let h = arc.len / m as f64;
        let mut sums = vec![0.0; dim];
        if !accumulate(g, arc.start + h / 2.0, h, m, &mut sums) {
            return None;
        }
        for (t, s) in total.iter_mut().zip(sums) {
            *t += s * h / TAU;
        }
    }
    Some(total)
}

fn piecewise(g: &impl Fn(f64) -> Vec<f64>, dim: usize, breakpoints: &[f64], opts: &QuadratureOptions) -> Quadrature {
    let mut cuts: Vec<f64> = breakpoints.iter().map(|b| b.rem_euclid(TAU)).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    let arcs: Vec<Arc> = (0..cuts.len())
        .map(|k| {
            let start = cuts[k];
            let end = if k + 1 < cuts.len() { cuts[k + 1] } else { cuts[0] + TAU };
            let len = end - start;
            let nodes = ((opts.initial_nodes as f64 * len / TAU).ceil() as usize).max(2);
            Arc { start, len, nodes }
        })
        .collect();
    let base: usize = arcs.iter().map(|a| a.nodes).sum();
    let mut scale = 1;
    let Some(mut coarse) = midpoint_pass(g, &arcs, scale, dim) else {
        return Quadrature::failed(dim, base);
    };
    let mut previous: Option<Vec<f64>> = None;
    loop {
        if base * scale * 2 > opts.max_nodes {
            return Quadrature {
                values: previous.unwrap_or(coarse),
                nodes: base * scale,
                converged: false,
            };
        }
        scale *= 2;
        let Some(fine) = midpoint_pass(g, &arcs, scale, dim) else {
            return Quadrature::failed(dim, base * scale);
        };
        let extrapolated: Vec<f64> = fine.iter().zip(&coarse).map(|(f, c)| (4.0 * f - c) / 3.0).collect();
        if let Some(prev) = &previous {
            if max_change(&extrapolated, prev) < opts.tol {
                return Quadrature {
                    values: extrapolated,
                    nodes: base * scale,
                    converged: true,
                };
            }
        }
        previous = Some(extrapolated);
        coarse = fine;
    }
}

/// Angles in `[0, 2π)` where `label` changes, located on a uniform scan and
/// refined by bisection.
pub fn find_breakpoints<L: PartialEq>(label: impl Fn(f64) -> L, scan_nodes: usize) -> Vec<f64> {
    let h = TAU / scan_nodes as f64;
    let labels: Vec<L> = (0..scan_nodes).map(|j| label((j as f64 + 0.5) * h)).collect();
    let mut out = Vec::new();
    for j in 0..scan_nodes {
        let next = (j + 1) % scan_nodes;
        if labels[j] == labels[next] {
            continue;
        }
        let (mut lo, mut hi) = ((j as f64 + 0.5) * h, (j as f64 + 1.5) * h);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if label(mid) == labels[j] {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push((0.5 * (lo + hi)).rem_euclid(TAU));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn constants_and_jensen() {
        let opts = QuadratureOptions::default();
        let q = circle_integral(|_| 2.5, &opts);
        assert!(q.converged && (q.value() - 2.5).abs() < 1e-12);
        let r: f64 = 3.0;
        let q = circle_integral(|t| Complex64::from_polar(r, t).norm().ln(), &opts);
        assert!((q.value() - r.ln()).abs() < 1e-10);
        let a = Complex64::new(1.2, -0.7);
        let q = circle_integral(|t| (Complex64::from_polar(r, t) - a).norm().ln(), &opts);
        assert!(q.converged && (q.value() - r.ln()).abs() < 1e-8);
    }

    #[test]
    fn singular_node_moves_grid() {
        // log|e^{iθ} − 1| has a singularity at θ = 0; its mean is 0.
        let opts = QuadratureOptions::default();
        let q = circle_integral(|t| (Complex64::from_polar(1.0, t) - 1.0).norm().ln(), &opts);
        assert!(q.value().is_finite());
        assert!(q.value().abs() < 1e-2);
    }

    #[test]
    fn piecewise_integrand() {
        // |sin θ| has kinks at 0 and π; mean 2/π.
        let opts = QuadratureOptions::default();
        let bps = find_breakpoints(|t: f64| t.sin() >= 0.0, 2048);
        assert_eq!(bps.len(), 2);
        let q = circle_integral_vec(|t| vec![t.sin().abs(), 1.0], 2, &bps, &opts);
        assert!(q.converged);
        assert!((q.values[0] - 2.0 / std::f64::consts::PI).abs() < 1e-8);
        assert!((q.values[1] - 1.0).abs() < 1e-12);
    }
}
