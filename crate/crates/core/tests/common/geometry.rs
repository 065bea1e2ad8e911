//! Planar convex-hull oracles: lattice counts by point-in-polygon over a
//! bounding box, and mixed volumes by shoelace areas.

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain; counter-clockwise, collinear points dropped.
pub fn hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn on_segment(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> bool {
    cross(a, b, p) == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

pub fn inside(h: &[(i64, i64)], p: (i64, i64)) -> bool {
    match h.len() {
        0 => false,
        1 => h[0] == p,
        2 => on_segment(h[0], h[1], p),
        n => (0..n).all(|i| cross(h[i], h[(i + 1) % n], p) >= 0),
    }
}

/// Lattice points of `conv(points)`.
pub fn lattice_count(points: &[(i64, i64)]) -> usize {
    let h = hull(points);
    let (x0, x1) = (points.iter().map(|p| p.0).min().unwrap(), points.iter().map(|p| p.0).max().unwrap());
    let (y0, y1) = (points.iter().map(|p| p.1).min().unwrap(), points.iter().map(|p| p.1).max().unwrap());
    (x0..=x1)
        .flat_map(|x| (y0..=y1).map(move |y| (x, y)))
        .filter(|&p| inside(&h, p))
        .count()
}

/// Vertex candidates of `Σ d_i P_i`: every sum picking one generator
/// (scaled by `d_i`) from each polytope.
pub fn weighted_sum_candidates(polys: &[Vec<(i64, i64)>], d: &[u32]) -> Vec<(i64, i64)> {
    let mut acc = vec![(0i64, 0i64)];
    for (p, &k) in polys.iter().zip(d) {
        if k == 0 {
            continue;
        }
        let k = k as i64;
        let mut next: Vec<(i64, i64)> = acc
            .iter()
            .flat_map(|a| p.iter().map(move |v| (a.0 + k * v.0, a.1 + k * v.1)))
            .collect();
        next.sort();
        next.dedup();
        acc = hull(&next);
    }
    acc
}

/// Twice the area of `conv(points)`.
pub fn double_area(points: &[(i64, i64)]) -> i64 {
    let h = hull(points);
    if h.len() < 3 {
        return 0;
    }
    (0..h.len())
        .map(|i| {
            let (a, b) = (h[i], h[(i + 1) % h.len()]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum::<i64>()
        .abs()
}

/// `MV(P, Q) = vol(P + Q) - vol(P) - vol(Q)` in the plane.
pub fn mixed_volume_2d(p: &[(i64, i64)], q: &[(i64, i64)]) -> i64 {
    let sum: Vec<(i64, i64)> = p.iter().flat_map(|a| q.iter().map(move |b| (a.0 + b.0, a.1 + b.1))).collect();
    let twice = double_area(&sum) - double_area(p) - double_area(q);
    assert_eq!(twice % 2, 0, "mixed volume of lattice polygons is an integer");
    twice / 2
}
