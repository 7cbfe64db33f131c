//! Exact convex clipping (Sutherland-Hodgman on rationals).

use super::point::{line_through, Line, Point};
use crate::num::Q;
use num_traits::Zero;

/// Clip a convex polygon (as a counterclockwise point cycle) against the
/// closed half-plane on the left of the directed line. Returns the clipped
/// cycle, possibly empty or degenerate.
pub fn clip_halfplane(cycle: &[Point], line: &Line) -> Vec<Point> {
    if cycle.is_empty() {
        return vec![];
    }
    let n = cycle.len();
    let mut out: Vec<Point> = Vec::with_capacity(n + 2);
    for i in 0..n {
        let cur = &cycle[i];
        let nxt = &cycle[(i + 1) % n];
        let side_cur = line.side(cur);
        let side_nxt = line.side(nxt);
        if side_cur >= 0 {
            out.push(cur.clone());
        }
        if (side_cur > 0 && side_nxt < 0) || (side_cur < 0 && side_nxt > 0) {
            let seg_line = line_through(cur, nxt);
            let x = line
                .intersect(&seg_line)
                .expect("crossing edge cannot be parallel to the clip line");
            out.push(x);
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Intersection of two convex cycles (counterclockwise). May return fewer
/// than 3 points when the intersection is lower dimensional.
pub fn convex_intersection(a: &[Point], b: &[Point]) -> Vec<Point> {
    let mut cur: Vec<Point> = a.to_vec();
    let n = b.len();
    for i in 0..n {
        if cur.is_empty() {
            break;
        }
        let l = line_through(&b[i], &b[(i + 1) % n]);
        cur = clip_halfplane(&cur, &l);
    }
    cur
}

/// Twice the area of a point cycle.
pub fn cycle_area2(cycle: &[Point]) -> Q {
    let n = cycle.len();
    if n < 3 {
        return Q::zero();
    }
    let mut acc = Q::zero();
    for i in 0..n {
        let a = &cycle[i];
        let b = &cycle[(i + 1) % n];
        acc += &a.x * &b.y - &b.x * &a.y;
    }
    acc
}

/// Whether two convex cycles share interior area.
pub fn convex_overlap_area2(a: &[Point], b: &[Point]) -> Q {
    cycle_area2(&convex_intersection(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::point::pt;
    use crate::num::qi;

    fn p(x: i64, y: i64) -> Point {
        pt(qi(x), qi(y))
    }

    #[test]
    fn square_intersection() {
        let a = vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4)];
        let b = vec![p(2, 2), p(6, 2), p(6, 6), p(2, 6)];
        let x = convex_intersection(&a, &b);
        assert_eq!(cycle_area2(&x), qi(8)); // 2x2 square
    }

    #[test]
    fn disjoint_squares() {
        let a = vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        let b = vec![p(5, 5), p(6, 5), p(6, 6), p(5, 6)];
        assert!(convex_intersection(&a, &b).is_empty());
    }

    #[test]
    fn touching_squares_zero_area() {
        let a = vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        let b = vec![p(1, 0), p(2, 0), p(2, 1), p(1, 1)];
        let x = convex_intersection(&a, &b);
        assert_eq!(cycle_area2(&x), qi(0));
    }
}
