//! Points, segments, rays and the exact predicates on them.

use crate::num::{q_max, q_min, Q};
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", crate::num::fmt_q(&self.x), crate::num::fmt_q(&self.y))
    }
}

pub fn pt(x: Q, y: Q) -> Point {
    Point { x, y }
}

impl Point {
    pub fn add(&self, v: &Vec2) -> Point {
        pt(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn sub(&self, other: &Point) -> Vec2 {
        Vec2 { x: &self.x - &other.x, y: &self.y - &other.y }
    }

    /// Point between `self` and `other` at parameter t (t=0 gives self).
    pub fn lerp(&self, other: &Point, t: &Q) -> Point {
        pt(
            &self.x + &(t * (&other.x - &self.x)),
            &self.y + &(t * (&other.y - &self.y)),
        )
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        self.lerp(other, &crate::num::q(1, 2))
    }

    /// x - y; points on a common slope-one line share this value.
    pub fn alpha_score(&self) -> Q {
        &self.x - &self.y
    }

    /// x + y; points on a common slope-minus-one line share this value.
    pub fn beta_score(&self) -> Q {
        &self.x + &self.y
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vec2 {
    pub x: Q,
    pub y: Q,
}

impl Vec2 {
    pub fn new(x: Q, y: Q) -> Vec2 {
        Vec2 { x, y }
    }

    pub fn scale(&self, t: &Q) -> Vec2 {
        Vec2 { x: &self.x * t, y: &self.y * t }
    }

    pub fn cross(&self, other: &Vec2) -> Q {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vec2) -> Q {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn norm_sq(&self) -> Q {
        self.dot(self)
    }
}

/// Sign of the cross product (q-p) x (r-p): +1 for a counterclockwise turn,
/// 0 for collinear, -1 for clockwise.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> i32 {
    let v = q.sub(p).cross(&r.sub(p));
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// True iff r lies on the closed segment pq (collinear and within the box).
pub fn on_segment(p: &Point, q: &Point, r: &Point) -> bool {
    if orientation(p, q, r) != 0 {
        return false;
    }
    in_box(p, q, r)
}

fn in_box(p: &Point, q: &Point, r: &Point) -> bool {
    r.x >= q_min(p.x.clone(), q.x.clone())
        && r.x <= q_max(p.x.clone(), q.x.clone())
        && r.y >= q_min(p.y.clone(), q.y.clone())
        && r.y <= q_max(p.y.clone(), q.y.clone())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

pub fn seg(a: Point, b: Point) -> Segment {
    debug_assert!(a != b, "degenerate segment");
    Segment { a, b }
}

impl Segment {
    pub fn direction(&self) -> Vec2 {
        self.b.sub(&self.a)
    }

    pub fn midpoint(&self) -> Point {
        self.a.midpoint(&self.b)
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }

    pub fn length_sq(&self) -> Q {
        self.direction().norm_sq()
    }

    pub fn contains(&self, p: &Point) -> bool {
        on_segment(&self.a, &self.b, p)
    }
}

/// A ray from `origin` in direction `dir` (dir nonzero).
#[derive(Clone, Debug)]
pub struct Ray {
    pub origin: Point,
    pub dir: Vec2,
}

pub fn ray(origin: Point, dir: Vec2) -> Ray {
    debug_assert!(!dir.is_zero(), "zero ray direction");
    Ray { origin, dir }
}

pub fn ray_through(origin: Point, through: &Point) -> Ray {
    let dir = through.sub(&origin);
    ray(origin, dir)
}

impl Ray {
    pub fn at(&self, t: &Q) -> Point {
        self.origin.add(&self.dir.scale(t))
    }
}

/// A full line through two distinct points.
#[derive(Clone, Debug)]
pub struct Line {
    pub p: Point,
    pub dir: Vec2,
}

pub fn line_through(a: &Point, b: &Point) -> Line {
    Line { p: a.clone(), dir: b.sub(a) }
}

impl Line {
    pub fn from_ray(r: &Ray) -> Line {
        Line { p: r.origin.clone(), dir: r.dir.clone() }
    }

    /// Which side of the (directed) line the point lies on, as the sign of
    /// the cross product; left is +1.
    pub fn side(&self, q: &Point) -> i32 {
        let v = self.dir.cross(&q.sub(&self.p));
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Intersect two lines; `None` when parallel (including coincident).
    pub fn intersect(&self, other: &Line) -> Option<Point> {
        let denom = self.dir.cross(&other.dir);
        if denom.is_zero() {
            return None;
        }
        let t = other.p.sub(&self.p).cross(&other.dir) / denom;
        Some(self.p.add(&self.dir.scale(&t)))
    }

    /// Point at a given x (requires a non-vertical line).
    pub fn at_x(&self, x: &Q) -> Option<Point> {
        if self.dir.x.is_zero() {
            return None;
        }
        let t = (x - &self.p.x) / &self.dir.x;
        Some(self.p.add(&self.dir.scale(&t)))
    }

    /// Point at a given y (requires a non-horizontal line).
    pub fn at_y(&self, y: &Q) -> Option<Point> {
        if self.dir.y.is_zero() {
            return None;
        }
        let t = (y - &self.p.y) / &self.dir.y;
        Some(self.p.add(&self.dir.scale(&t)))
    }
}

/// Proper or improper intersection of two closed segments.
/// Returns intersection points; an overlap of collinear segments returns the
/// two extreme points of the shared subsegment (which may coincide).
pub fn segment_intersections(s1: &Segment, s2: &Segment) -> Vec<Point> {
    let d1 = s1.direction();
    let d2 = s2.direction();
    let denom = d1.cross(&d2);
    let start_diff = s2.a.sub(&s1.a);
    if denom.is_zero() {
        if !start_diff.cross(&d1).is_zero() {
            return vec![]; // parallel, distinct lines
        }
        // Collinear: project on s1's parameter.
        let len_sq = d1.norm_sq();
        let t_of = |p: &Point| p.sub(&s1.a).dot(&d1) / len_sq.clone();
        let (mut t0, mut t1) = (t_of(&s2.a), t_of(&s2.b));
        if t0 > t1 {
            std::mem::swap(&mut t0, &mut t1);
        }
        let lo = q_max(t0, Q::zero());
        let hi = q_min(t1, crate::num::q_one());
        if lo > hi {
            return vec![];
        }
        let p_lo = s1.a.lerp(&s1.b, &lo);
        let p_hi = s1.a.lerp(&s1.b, &hi);
        if p_lo == p_hi {
            vec![p_lo]
        } else {
            vec![p_lo, p_hi]
        }
    } else {
        let t = start_diff.cross(&d2) / denom.clone();
        let u = start_diff.cross(&d1) / denom;
        let zero = Q::zero();
        let one = crate::num::q_one();
        if t >= zero && t <= one && u >= zero && u <= one {
            vec![s1.a.lerp(&s1.b, &t)]
        } else {
            vec![]
        }
    }
}

/// True iff the closed segments share at least one point.
pub fn segments_touch(s1: &Segment, s2: &Segment) -> bool {
    !segment_intersections(s1, s2).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{q, qi};

    fn p(x: i64, y: i64) -> Point {
        pt(qi(x), qi(y))
    }

    #[test]
    fn orientation_basic() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), 1);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), 0);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), -1);
    }

    #[test]
    fn orientation_antisymmetry() {
        // Property from the kernel contract, spot-checked over a small grid;
        // the proptest version lives in the integration tests.
        let pts: Vec<Point> = (-2..3)
            .flat_map(|x| (-2..3).map(move |y| p(x, y)))
            .collect();
        for a in &pts {
            for b in &pts {
                for c in &pts {
                    assert_eq!(orientation(a, b, c), -orientation(a, c, b));
                }
            }
        }
    }

    #[test]
    fn segment_crossing() {
        let s1 = seg(p(0, 0), p(2, 2));
        let s2 = seg(p(0, 2), p(2, 0));
        assert_eq!(segment_intersections(&s1, &s2), vec![pt(qi(1), qi(1))]);
    }

    #[test]
    fn segment_touch_at_endpoint() {
        let s1 = seg(p(0, 0), p(1, 0));
        let s2 = seg(p(1, 0), p(1, 5));
        assert_eq!(segment_intersections(&s1, &s2).len(), 1);
    }

    #[test]
    fn segment_collinear_overlap() {
        let s1 = seg(p(0, 0), p(4, 0));
        let s2 = seg(p(2, 0), p(6, 0));
        let hits = segment_intersections(&s1, &s2);
        assert_eq!(hits, vec![p(2, 0), p(4, 0)]);
    }

    #[test]
    fn segment_disjoint() {
        let s1 = seg(p(0, 0), p(1, 0));
        let s2 = seg(p(0, 1), p(1, 1));
        assert!(segment_intersections(&s1, &s2).is_empty());
    }

    #[test]
    fn line_meet() {
        let l1 = line_through(&p(0, 0), &p(2, 2));
        let l2 = line_through(&p(0, 2), &p(2, 0));
        assert_eq!(l1.intersect(&l2).unwrap(), p(1, 1));
        let l3 = line_through(&p(0, 1), &p(2, 3));
        assert!(l1.intersect(&l3).is_none());
    }

    #[test]
    fn lerp_exact() {
        let a = p(0, 0);
        let b = p(3, 0);
        assert_eq!(a.lerp(&b, &q(1, 3)), p(1, 0));
    }
}
