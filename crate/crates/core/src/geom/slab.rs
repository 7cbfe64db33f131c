//! Diagonal slabs used to certify corridor visibilities.
//!
//! A slab S(q, v, r) is the set of points within distance r of the line
//! through q with direction v. Membership is decided with squared
//! distances so no square root is ever taken.

use super::point::{Point, Ray, Vec2};
use super::polygon::AxisRectangle;
use crate::num::{q, Q};
use num_traits::{Signed, Zero};

/// Slab directions used by the corridor grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlabDir {
    /// direction (1, 1)
    Alpha,
    /// direction (-1, 1)
    Beta,
}

impl SlabDir {
    pub fn vec(self) -> Vec2 {
        match self {
            SlabDir::Alpha => Vec2::new(crate::num::qi(1), crate::num::qi(1)),
            SlabDir::Beta => Vec2::new(crate::num::qi(-1), crate::num::qi(1)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Slab {
    pub anchor: Point,
    pub dir: SlabDir,
    pub half_width: Q,
}

impl Slab {
    pub fn new(anchor: Point, dir: SlabDir, half_width: Q) -> Slab {
        assert!(half_width.is_positive(), "slab half-width must be positive");
        Slab { anchor, dir, half_width }
    }

    /// Signed offset numerator: cross(v, p - anchor). The perpendicular
    /// distance is |offset| / |v| with |v|^2 = 2 for both directions.
    fn offset(&self, p: &Point) -> Q {
        self.dir.vec().cross(&p.sub(&self.anchor))
    }

    /// Closed membership: dist(p, center)^2 <= r^2, i.e.
    /// cross^2 / 2 <= r^2.
    pub fn contains(&self, p: &Point) -> bool {
        let c = self.offset(p);
        &c * &c <= q(2, 1) * &self.half_width * &self.half_width
    }

    /// Whether a closed segment lies in the slab (slabs are convex).
    pub fn contains_segment(&self, a: &Point, b: &Point) -> bool {
        self.contains(a) && self.contains(b)
    }
}

/// Clip a ray to an axis rectangle. Returns the clipped closed segment
/// endpoints, or None when the ray misses the rectangle.
pub fn clip_ray_to_rect(r: &Ray, rect: &AxisRectangle) -> Option<(Point, Point)> {
    let mut t_lo = Q::zero();
    let mut t_hi: Option<Q> = None; // unbounded until clipped
    let shrink = |p: Q, qv: Q, t_lo: &mut Q, t_hi: &mut Option<Q>| -> bool {
        // constraint p + t*qv within [handled by caller via two calls]
        // here: p + t*qv >= 0 form
        if qv.is_zero() {
            return !p.is_negative();
        }
        let bound = -p / qv.clone();
        if qv.is_positive() {
            if *t_lo < bound {
                // lower bound on t
            }
            if bound > *t_lo {
                *t_lo = bound;
            }
        } else {
            match t_hi {
                None => *t_hi = Some(bound),
                Some(h) => {
                    if bound < *h {
                        *t_hi = Some(bound);
                    }
                }
            }
        }
        true
    };
    // x >= lo.x : (origin.x - lo.x) + t*dir.x >= 0
    let checks: [(Q, Q); 4] = [
        (&r.origin.x - &rect.lo.x, r.dir.x.clone()),
        (&rect.hi.x - &r.origin.x, -r.dir.x.clone()),
        (&r.origin.y - &rect.lo.y, r.dir.y.clone()),
        (&rect.hi.y - &r.origin.y, -r.dir.y.clone()),
    ];
    for (p, qv) in checks {
        if !shrink(p, qv, &mut t_lo, &mut t_hi) {
            return None;
        }
    }
    match t_hi {
        None => None, // ray unbounded inside an axis rectangle cannot happen
        Some(h) => {
            if t_lo > h {
                None
            } else {
                Some((r.at(&t_lo), r.at(&h)))
            }
        }
    }
}

/// Exact check that the intersection of an alpha slab and a beta slab is
/// contained in an axis rectangle.
///
/// In rotated coordinates u = y - x, w = y + x the two slabs become the
/// square |u - cu| <= r_a*sqrt(2), |w - cw| <= r_b*sqrt(2), so the x and y
/// extents of the intersection are centred rationals offset by
/// (r_a + r_b)/sqrt(2) = (r_a + r_b)*sqrt(2)/2. The comparisons against the
/// rectangle are resolved exactly by squaring.
pub fn slab_pair_inside_rect(a: &Slab, b: &Slab, rect: &AxisRectangle) -> bool {
    assert_eq!(a.dir, SlabDir::Alpha);
    assert_eq!(b.dir, SlabDir::Beta);
    let cu = &a.anchor.y - &a.anchor.x; // u-center of alpha slab
    let cw = &b.anchor.y + &b.anchor.x; // w-center of beta slab
    let cx = (&cw - &cu) / q(2, 1);
    let cy = (&cw + &cu) / q(2, 1);
    // offset k*sqrt(2) with k = (r_a + r_b)/2 in both axes
    let k = (&a.half_width + &b.half_width) / q(2, 1);
    ge_plus_sqrt2(&cx, &k, &rect.lo.x)
        && le_minus_sqrt2(&cx, &k, &rect.hi.x)
        && ge_plus_sqrt2(&cy, &k, &rect.lo.y)
        && le_minus_sqrt2(&cy, &k, &rect.hi.y)
}

/// c - k*sqrt(2) >= bound, with k >= 0, decided exactly.
fn ge_plus_sqrt2(c: &Q, k: &Q, bound: &Q) -> bool {
    // c - bound >= k*sqrt(2)  <=>  d >= 0 and d^2 >= 2k^2
    let d = c - bound;
    if d.is_negative() {
        return false;
    }
    &d * &d >= q(2, 1) * k * k
}

/// c + k*sqrt(2) <= bound, with k >= 0, decided exactly.
fn le_minus_sqrt2(c: &Q, k: &Q, bound: &Q) -> bool {
    let d = bound - c;
    if d.is_negative() {
        return false;
    }
    &d * &d >= q(2, 1) * k * k
}
