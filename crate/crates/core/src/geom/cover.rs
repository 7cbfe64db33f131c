//! Exact region-coverage decisions via an overlay scan.
//!
//! All boundary segments of the participating regions are overlaid; between
//! consecutive event abscissas no two segments cross and no endpoint occurs,
//! so the crossing segments are totally ordered and the cells between them
//! are faces of the full arrangement. Testing one interior sample per cell
//! decides closed-region containment exactly (closed regions are closures of
//! their cell interiors).

use super::point::{pt, Point, Segment};
use super::polygon::{AxisRectangle, ConvexPolygon, SimplePolygon};
use crate::num::{q, q_max, q_min, Q};

/// One overlaid region: a set of segments forming closed curves, with a
/// group id. A sample point's group count is the number of components of
/// that group containing it.
pub struct OverlayComponent {
    pub segs: Vec<Segment>,
    pub group: usize,
}

impl OverlayComponent {
    pub fn from_simple_polygon(p: &SimplePolygon, group: usize) -> OverlayComponent {
        OverlayComponent { segs: p.edges().collect(), group }
    }

    pub fn from_convex(p: &ConvexPolygon, group: usize) -> OverlayComponent {
        if p.is_degenerate() {
            // Zero-area pieces contribute splitting segments but never
            // contain a cell interior.
            return OverlayComponent {
                segs: vec![Segment { a: p.corners()[0].clone(), b: p.corners()[1].clone() }],
                group,
            };
        }
        OverlayComponent { segs: p.edges(), group }
    }

    pub fn from_rect(r: &AxisRectangle, group: usize) -> OverlayComponent {
        OverlayComponent { segs: r.edges(), group }
    }

    pub fn from_points_cycle(cycle: &[Point], group: usize) -> OverlayComponent {
        let n = cycle.len();
        let segs = (0..n)
            .filter(|&i| cycle[i] != cycle[(i + 1) % n])
            .map(|i| Segment { a: cycle[i].clone(), b: cycle[(i + 1) % n].clone() })
            .collect();
        OverlayComponent { segs, group }
    }
}

struct SegRec {
    a: Point,
    b: Point,
    comp: usize,
    min_x: Q,
    max_x: Q,
    min_y: Q,
    max_y: Q,
}

/// Scan all arrangement cells; `classify(counts, degenerate_hit)` is called
/// with the per-group containment counts of each cell. The first cell for
/// which it returns false produces a witness sample point.
pub fn overlay_scan(
    components: &[OverlayComponent],
    n_groups: usize,
    mut classify: impl FnMut(&[usize]) -> bool,
) -> Option<Point> {
    let comp_group: Vec<usize> = components.iter().map(|c| c.group).collect();
    let mut segs: Vec<SegRec> = Vec::new();
    for (ci, comp) in components.iter().enumerate() {
        for s in &comp.segs {
            segs.push(SegRec {
                min_x: q_min(s.a.x.clone(), s.b.x.clone()),
                max_x: q_max(s.a.x.clone(), s.b.x.clone()),
                min_y: q_min(s.a.y.clone(), s.b.y.clone()),
                max_y: q_max(s.a.y.clone(), s.b.y.clone()),
                a: s.a.clone(),
                b: s.b.clone(),
                comp: ci,
            });
        }
    }
    // Event abscissas: endpoints plus pairwise crossings.
    let mut xs: Vec<Q> = Vec::with_capacity(segs.len() * 2);
    for s in &segs {
        xs.push(s.a.x.clone());
        xs.push(s.b.x.clone());
    }
    let mut order: Vec<usize> = (0..segs.len()).collect();
    order.sort_by(|&i, &j| segs[i].min_x.cmp(&segs[j].min_x));
    for (k, &i) in order.iter().enumerate() {
        for &j in order.iter().skip(k + 1) {
            if segs[j].min_x > segs[i].max_x {
                break;
            }
            if segs[j].min_y > segs[i].max_y || segs[i].min_y > segs[j].max_y {
                continue;
            }
            let s1 = Segment { a: segs[i].a.clone(), b: segs[i].b.clone() };
            let s2 = Segment { a: segs[j].a.clone(), b: segs[j].b.clone() };
            for p in super::point::segment_intersections(&s1, &s2) {
                xs.push(p.x);
            }
        }
    }
    xs.sort();
    xs.dedup();

    // Sweep the slabs.
    let mut by_min: Vec<usize> = (0..segs.len()).collect();
    by_min.sort_by(|&i, &j| segs[i].min_x.cmp(&segs[j].min_x));
    let mut next_insert = 0usize;
    let mut active: Vec<usize> = Vec::new();
    let mut parity: Vec<bool> = vec![false; components.len()];
    let mut counts: Vec<usize> = vec![0; n_groups];

    for w in xs.windows(2) {
        let (x0, x1) = (&w[0], &w[1]);
        if x0 == x1 {
            continue;
        }
        while next_insert < by_min.len() && segs[by_min[next_insert]].min_x <= *x0 {
            active.push(by_min[next_insert]);
            next_insert += 1;
        }
        active.retain(|&i| segs[i].max_x >= *x1);
        let xm = (x0 + x1) / q(2, 1);
        // y of each spanning segment at xm.
        let mut hits: Vec<(Q, usize)> = Vec::with_capacity(active.len());
        for &i in &active {
            let s = &segs[i];
            if s.min_x >= xm || s.max_x <= xm {
                continue; // vertical or non-spanning
            }
            let t = (&xm - &s.a.x) / (&s.b.x - &s.a.x);
            let y = &s.a.y + &(&t * &(&s.b.y - &s.a.y));
            hits.push((y, s.comp));
        }
        hits.sort_by(|a, b| a.0.cmp(&b.0));
        // Walk cells bottom-to-top.
        for v in counts.iter_mut() {
            *v = 0;
        }
        for v in parity.iter_mut() {
            *v = false;
        }
        let mut idx = 0;
        while idx < hits.len() {
            let y_cur = hits[idx].0.clone();
            while idx < hits.len() && hits[idx].0 == y_cur {
                let comp = hits[idx].1;
                let g = comp_group[comp];
                if parity[comp] {
                    parity[comp] = false;
                    counts[g] -= 1;
                } else {
                    parity[comp] = true;
                    counts[g] += 1;
                }
                idx += 1;
            }
            if idx < hits.len() {
                let y_next = &hits[idx].0;
                if !classify(&counts) {
                    let ym = (&y_cur + y_next) / q(2, 1);
                    return Some(pt(xm, ym));
                }
            }
        }
    }
    None
}

/// Exact decision that `target` (closed union of the target components) is
/// contained in the union of the pieces. On failure returns a rational
/// witness point of the uncovered set.
pub fn covers_region(
    pieces: &[ConvexPolygon],
    target: &[SimplePolygon],
) -> Result<(), Point> {
    let mut comps: Vec<OverlayComponent> = Vec::new();
    for t in target {
        comps.push(OverlayComponent::from_simple_polygon(t, 0));
    }
    for p in pieces {
        comps.push(OverlayComponent::from_convex(p, 1));
    }
    match overlay_scan(&comps, 2, |counts| counts[0] == 0 || counts[1] > 0) {
        None => Ok(()),
        Some(w) => Err(w),
    }
}

/// Containment of one closed region in another, both given as polygon
/// unions.
pub fn region_subset(
    inner: &[SimplePolygon],
    outer: &[SimplePolygon],
) -> Result<(), Point> {
    let mut comps: Vec<OverlayComponent> = Vec::new();
    for t in inner {
        comps.push(OverlayComponent::from_simple_polygon(t, 0));
    }
    for p in outer {
        comps.push(OverlayComponent::from_simple_polygon(p, 1));
    }
    match overlay_scan(&comps, 2, |counts| counts[0] == 0 || counts[1] > 0) {
        None => Ok(()),
        Some(w) => Err(w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::point::pt;
    use crate::num::{q, qi};

    fn p(x: i64, y: i64) -> Point {
        pt(qi(x), qi(y))
    }

    fn square() -> SimplePolygon {
        SimplePolygon::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap()
    }

    #[test]
    fn square_covers_itself() {
        let sq = square();
        let piece = ConvexPolygon::new(sq.corners().to_vec()).unwrap();
        assert!(covers_region(&[piece], &[sq]).is_ok());
    }

    #[test]
    fn two_triangles_cover_square() {
        let sq = square();
        let t1 = ConvexPolygon::new(vec![p(0, 0), p(1, 0), p(1, 1)]).unwrap();
        let t2 = ConvexPolygon::new(vec![p(0, 0), p(1, 1), p(0, 1)]).unwrap();
        assert!(covers_region(&[t1, t2], &[sq]).is_ok());
    }

    #[test]
    fn shrunk_triangles_miss_diagonal() {
        // Each diagonal triangle shrunk toward its centroid by 1/100:
        // a strip along the diagonal is uncovered; witness near it.
        let sq = square();
        let shrink = |pts: [Point; 3]| -> ConvexPolygon {
            let cx = (&pts[0].x + &pts[1].x + &pts[2].x) / qi(3);
            let cy = (&pts[0].y + &pts[1].y + &pts[2].y) / qi(3);
            let f = q(99, 100);
            let corners = pts
                .iter()
                .map(|p| {
                    pt(
                        &cx + &(&f * &(&p.x - &cx)),
                        &cy + &(&f * &(&p.y - &cy)),
                    )
                })
                .collect();
            ConvexPolygon::new(corners).unwrap()
        };
        let t1 = shrink([p(0, 0), p(1, 0), p(1, 1)]);
        let t2 = shrink([p(0, 0), p(1, 1), p(0, 1)]);
        let err = covers_region(&[t1, t2], &[sq]).unwrap_err();
        // The witness must itself be an uncovered point of the square.
        assert!(square().contains(&err));
    }

    #[test]
    fn witness_is_exact_uncovered_point() {
        let sq = square();
        let half = ConvexPolygon::new(vec![p(0, 0), p(1, 0), p(1, 1)]).unwrap();
        let w = covers_region(&[half.clone()], &[sq]).unwrap_err();
        assert!(!half.contains(&w));
        assert!(square().contains(&w));
    }

    #[test]
    fn agrees_with_membership_oracle_on_grid() {
        // Brute-force oracle: sample a dense rational grid and compare the
        // overlay verdict with exact pointwise membership.
        let sq = square();
        let t1 = ConvexPolygon::new(vec![p(0, 0), p(1, 0), p(1, 1)]).unwrap();
        let verdict = covers_region(&[t1.clone()], &[sq.clone()]);
        assert!(verdict.is_err());
        let mut uncovered = 0usize;
        let n = 101i64; // ~10^4 samples
        for i in 0..=n {
            for j in 0..=n {
                let s = pt(q(i, n), q(j, n));
                if sq.contains(&s) && !t1.contains(&s) {
                    uncovered += 1;
                }
            }
        }
        assert!(uncovered > 0);
    }

    #[test]
    fn region_subset_basic() {
        let inner = SimplePolygon::new(vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)]).unwrap();
        let outer = SimplePolygon::new(vec![p(-1, -1), p(3, -1), p(3, 3), p(-1, 3)]).unwrap();
        assert!(region_subset(&[inner.clone()], &[outer.clone()]).is_ok());
        assert!(region_subset(&[outer], &[inner]).is_err());
    }
}
