//! The five gadget kinds: exact cores (projection algebra, published
//! inversion coordinates, the addition identity) and the concrete chamber
//! geometry each gadget contributes to the polygon.
//!
//! Chambers are designed in local units (the assembler scales them by
//! 1/(C N^2) and anchors them at the gadget origin on the door ray). The
//! local boundary runs counterclockwise from the lower funnel attach point
//! to the upper one.

use crate::geom::{line_through, pt, Line, Point, Segment};
use crate::layout::{GadgetKind, Slot};
use crate::model::{Orientation, ValueMap};
use crate::num::{q, qi, Q};

/// Central projection of a point from a pivot onto a target line.
pub fn project(p: &Point, pivot: &Point, target: &Line) -> Option<Point> {
    line_through(p, pivot).intersect(target)
}

/// Projection onto a segment's line, flagged when the image lies outside
/// the closed segment.
pub fn project_to_segment(p: &Point, pivot: &Point, target: &Segment) -> Option<(Point, bool)> {
    let l = line_through(&target.a, &target.b);
    let img = project(p, pivot, &l)?;
    let on = target.contains(&img);
    Some((img, on))
}

/// Published geometry of an inversion hand-off, in gadget-local units
/// (the paper's coordinates before the global 1/CN^2 scaling).
#[derive(Clone, Debug)]
pub struct InversionCore {
    /// first segment (r_i^2 for the >=-gadget, r_i for <=) with its map
    pub seg_a: ValueMap,
    /// second segment (r_j for >=, r_j^2 for <=)
    pub seg_b: ValueMap,
    pub xi_a: Point,
    pub xi_b: Point,
    pub f0: Point,
    pub f1: Point,
}

impl InversionCore {
    pub fn f_line(&self) -> Line {
        line_through(&self.f0, &self.f1)
    }

    /// Critical-segment point representing value v of the first variable.
    pub fn f_point_from_a(&self, v: &Q) -> Point {
        let p = self.seg_a.point_at(v).expect("value in range");
        project(&p, &self.xi_a, &self.f_line()).expect("projection defined")
    }

    /// Critical-segment point representing value w of the second variable.
    pub fn f_point_from_b(&self, w: &Q) -> Point {
        let p = self.seg_b.point_at(w).expect("value in range");
        project(&p, &self.xi_b, &self.f_line()).expect("projection defined")
    }

    /// Full composition seg_a -> f -> seg_b.
    pub fn compose(&self, p: &Point) -> Point {
        let mid = project(p, &self.xi_a, &self.f_line()).expect("first projection");
        project(&mid, &self.xi_b, &line_through(&self.seg_b.a, &self.seg_b.b))
            .expect("second projection")
    }
}

/// The >=-inversion core: r_i^2 from (5.5,3) length 3/2 right-oriented,
/// r_j from (14,0) length 3/2 left-oriented, pivots xi_i, xi_j chosen so
/// the critical segment has rational endpoints. Values: a point (5+x, 3)
/// on r_i^2 composes to (16 - 1/x, 0) on r_j.
pub fn ge_inv_core() -> InversionCore {
    let seg_a = ValueMap::new(pt(q(11, 2), qi(3)), pt(qi(7), qi(3)), Orientation::Right);
    let seg_b = ValueMap::new(pt(qi(14), qi(0)), pt(q(31, 2), qi(0)), Orientation::Left);
    let xi_a = pt(q(19, 2), q(345, 34));
    let xi_b = pt(q(23, 2), q(51405, 3842));
    let core = InversionCore {
        f0: recompute_f(&seg_a.b, &xi_a, &seg_b.b, &xi_b),
        f1: recompute_f(&seg_a.a, &xi_a, &seg_b.a, &xi_b),
        seg_a,
        seg_b,
        xi_a,
        xi_b,
    };
    debug_assert_eq!(core.f0, pt(q(15961, 1438), q(359835, 24446)));
    debug_assert_eq!(core.f1, pt(q(8635, 754), q(10281, 754)));
    core
}

/// The <=-inversion core: r_i from (1/2,0) right-oriented, r_j^2 from
/// (35/2,2) left-oriented.
pub fn le_inv_core() -> InversionCore {
    let seg_a = ValueMap::new(pt(q(1, 2), qi(0)), pt(qi(2), qi(0)), Orientation::Right);
    let seg_b = ValueMap::new(pt(q(35, 2), qi(2)), pt(qi(19), qi(2)), Orientation::Left);
    let xi_a = pt(qi(5), q(57, 16));
    let xi_b = pt(qi(7), q(1041, 208));
    let core = InversionCore {
        f0: recompute_f(&seg_a.b, &xi_a, &seg_b.b, &xi_b),
        f1: recompute_f(&seg_a.a, &xi_a, &seg_b.a, &xi_b),
        seg_a,
        seg_b,
        xi_a,
        xi_b,
    };
    debug_assert_eq!(core.f0, pt(q(235, 37), q(3059, 592)));
    debug_assert_eq!(core.f1, pt(q(735, 107), q(25897, 5136)));
    core
}

/// f-endpoint as the crossing of the two pivot rays from matching segment
/// endpoints.
pub fn recompute_f(p_a: &Point, xi_a: &Point, p_b: &Point, xi_b: &Point) -> Point {
    line_through(p_a, xi_a)
        .intersect(&line_through(p_b, xi_b))
        .expect("pivot rays are not parallel")
}

/// Addition-core constants in gadget-local units: e_i=(v,0), e_j=(-v,0),
/// e_l=(0,0) with segment carriers at depth h and 2h.
#[derive(Clone, Debug)]
pub struct AdditionCore {
    pub e_i: Point,
    pub e_j: Point,
    pub e_l: Point,
    pub h: Q,
    pub v: Q,
    pub w: Q,
    /// r_i^4, r_j^2, r_l with their value maps
    pub r_i4: ValueMap,
    pub r_j2: ValueMap,
    pub r_l: ValueMap,
}

pub fn addition_core(kind: GadgetKind) -> AdditionCore {
    let h = q(21, 2);
    let v = qi(5);
    let w = q(27, 2);
    let neg_h = -&h;
    let neg_2h = qi(-2) * &h;
    match kind {
        GadgetKind::GeAdd => AdditionCore {
            e_i: pt(v.clone(), qi(0)),
            e_j: pt(-&v, qi(0)),
            e_l: pt(qi(0), qi(0)),
            r_i4: ValueMap::new(pt(qi(12), neg_h.clone()), pt(w.clone(), neg_h.clone()), Orientation::Right),
            r_j2: ValueMap::new(pt(-&w, neg_h.clone()), pt(qi(-12), neg_h.clone()), Orientation::Right),
            r_l: ValueMap::new(pt(qi(-2), neg_2h.clone()), pt(q(-1, 2), neg_2h), Orientation::Right),
            h,
            v,
            w,
        },
        GadgetKind::LeAdd => AdditionCore {
            e_i: pt(v.clone(), qi(0)),
            e_j: pt(-&v, qi(0)),
            e_l: pt(qi(0), qi(0)),
            r_i4: ValueMap::new(pt(qi(12), neg_h.clone()), pt(w.clone(), neg_h.clone()), Orientation::Left),
            r_j2: ValueMap::new(pt(-&w, neg_h.clone()), pt(qi(-12), neg_h.clone()), Orientation::Left),
            r_l: ValueMap::new(pt(q(1, 2), neg_2h.clone()), pt(qi(2), neg_2h), Orientation::Left),
            h,
            v,
            w,
        },
        _ => panic!("addition core requested for a non-addition gadget"),
    }
}

/// The quadrilateral of points from which rays through e_i and e_j hit
/// prescribed subsegments of r_i^4 and r_j^2: corners are the pairwise
/// crossings of the four extreme rays.
pub fn gamma_region(
    core: &AdditionCore,
    i_range: (&Point, &Point),
    j_range: (&Point, &Point),
) -> Vec<Point> {
    let li0 = line_through(i_range.0, &core.e_i);
    let li1 = line_through(i_range.1, &core.e_i);
    let lj0 = line_through(j_range.0, &core.e_j);
    let lj1 = line_through(j_range.1, &core.e_j);
    let mut pts = Vec::new();
    for li in [&li0, &li1] {
        for lj in [&lj0, &lj1] {
            if let Some(x) = li.intersect(lj) {
                pts.push(x);
            }
        }
    }
    convex_hull(pts)
}

/// Exact convex hull (Andrew monotone chain), counterclockwise.
pub fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort_by(|a, b| a.x.cmp(&b.x).then(a.y.cmp(&b.y)));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && crate::geom::orientation(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && crate::geom::orientation(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{parse_q, q, qi};

    #[test]
    fn ge_inv_published_coordinates_reproduced() {
        let core = ge_inv_core();
        assert_eq!(core.f0, pt(parse_q("15961/1438").unwrap(), parse_q("359835/24446").unwrap()));
        assert_eq!(core.f1, pt(parse_q("8635/754").unwrap(), parse_q("10281/754").unwrap()));
    }

    #[test]
    fn le_inv_published_coordinates_reproduced() {
        let core = le_inv_core();
        assert_eq!(core.f0, pt(parse_q("235/37").unwrap(), parse_q("3059/592").unwrap()));
        assert_eq!(core.f1, pt(parse_q("735/107").unwrap(), parse_q("25897/5136").unwrap()));
    }

    #[test]
    fn ge_inv_composition_is_sixteen_minus_reciprocal() {
        let core = ge_inv_core();
        for num in 1..=20i64 {
            // x spread over [1/2, 2]
            let x = q(1, 2) + q(3, 2) * q(num, 21);
            let p = pt(qi(5) + &x, qi(3));
            let image = core.compose(&p);
            assert_eq!(image.y, qi(0));
            assert_eq!(image.x, qi(16) - x.recip());
        }
        // endpoint sanity: x = 1/2 maps to the left endpoint of r_j
        let img = core.compose(&pt(q(11, 2), qi(3)));
        assert_eq!(img, pt(qi(14), qi(0)));
    }

    #[test]
    fn le_inv_composition_inverts_exactly() {
        let core = le_inv_core();
        for num in 0..=24i64 {
            let x = q(1, 2) + q(3, 2) * q(num, 24);
            let p = core.seg_a.point_at(&x).unwrap();
            assert_eq!(core.seg_a.value_at(&p).unwrap(), x);
            let image = core.compose(&p);
            let x_tilde = core.seg_b.value_at(&image).unwrap();
            assert_eq!(&x * &x_tilde, qi(1), "x * x~ must be exactly 1");
        }
    }

    #[test]
    fn inversion_f_points_consistent_between_sides() {
        for core in [ge_inv_core(), le_inv_core()] {
            for num in 1..=7i64 {
                let v = q(1, 2) + q(3, 2) * q(num, 8);
                let w = v.recip();
                assert_eq!(core.f_point_from_a(&v), core.f_point_from_b(&w));
            }
        }
    }

    #[test]
    fn addition_identity() {
        // x(p'_l) = x(p_i) + x(p_j) for rays from a common apex through the
        // three marks; also the halving identity on the first carrier line.
        let core = addition_core(GadgetKind::GeAdd);
        let l_h = line_through(&pt(qi(0), -&core.h), &pt(qi(1), -&core.h));
        let l_2h = line_through(&pt(qi(0), qi(-2) * &core.h), &pt(qi(1), qi(-2) * &core.h));
        for gx in [-3i64, -1, 0, 2, 5] {
            for gy in [3i64, 7, 12] {
                let gamma = pt(qi(gx), qi(gy));
                let pi = project(&gamma, &core.e_i, &l_h).unwrap();
                let pj = project(&gamma, &core.e_j, &l_h).unwrap();
                let pl = project(&gamma, &core.e_l, &l_h).unwrap();
                let pl2 = project(&gamma, &core.e_l, &l_2h).unwrap();
                assert_eq!(pl.x, (&pi.x + &pj.x) / qi(2));
                assert_eq!(pl2.x, &pi.x + &pj.x);
            }
        }
    }

    #[test]
    fn addition_value_maps_encode_the_sum() {
        // Segment placements make value(p'_l) = value(p_i) + value(p_j)
        // under the raw coordinate identity, for both gadget variants.
        for kind in [GadgetKind::GeAdd, GadgetKind::LeAdd] {
            let core = addition_core(kind);
            for vi_num in [0i64, 3, 8] {
                for vj_num in [1i64, 4, 6] {
                    let vi = q(1, 2) + q(3, 4) * q(vi_num, 8);
                    let vj = q(1, 2) + q(3, 4) * q(vj_num, 8);
                    let vl = &vi + &vj; // in [1, 2.5...]; clamp to range
                    if vl > qi(2) || vl < q(1, 2) {
                        continue;
                    }
                    let xi = core.r_i4.point_at(&vi).unwrap().x;
                    let xj = core.r_j2.point_at(&vj).unwrap().x;
                    let xl = core.r_l.point_at(&vl).unwrap().x;
                    assert_eq!(xl, &xi + &xj);
                }
            }
        }
    }

    #[test]
    fn gamma_region_is_a_convex_quad() {
        let core = addition_core(GadgetKind::GeAdd);
        let full_i = (&core.r_i4.a, &core.r_i4.b);
        let full_j = (&core.r_j2.a, &core.r_j2.b);
        let g = gamma_region(&core, full_i, full_j);
        assert_eq!(g.len(), 4);
        // restricted region nested inside the full one
        let ia = core.r_i4.point_at(&qi(1)).unwrap();
        let ib = core.r_i4.point_at(&q(9, 8)).unwrap();
        let ja = core.r_j2.point_at(&qi(1)).unwrap();
        let jb = core.r_j2.point_at(&q(9, 8)).unwrap();
        let g2 = gamma_region(&core, (&ia, &ib), (&ja, &jb));
        assert!(!g2.is_empty());
        let hull_poly = crate::geom::SimplePolygon::new(g.clone()).unwrap();
        for p in &g2 {
            assert!(hull_poly.contains(p), "restricted gamma leaks out");
        }
        // shrinking the ranges shrinks gamma monotonically
        let ib2 = core.r_i4.point_at(&q(17, 16)).unwrap();
        let jb2 = core.r_j2.point_at(&q(17, 16)).unwrap();
        let g3 = gamma_region(&core, (&ia, &ib2), (&ja, &jb2));
        let hull2 = crate::geom::SimplePolygon::new(g2.clone()).unwrap();
        for p in &g3 {
            assert!(hull2.contains(p));
        }
    }
}
