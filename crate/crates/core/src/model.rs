//! Shared vocabulary of the compiled instances: value maps on variable
//! segments, marked corners and rectangles, and the annotated instance
//! records that the verifier and the witness generator consume.

use crate::geom::{AxisRectangle, Point, Segment, SimplePolygon};
use crate::num::{q, Q};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Right,
    Left,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Right => Orientation::Left,
            Orientation::Left => Orientation::Right,
        }
    }
}

/// Linear value map on a horizontal segment: the endpoints represent 1/2
/// and 2, with linear interpolation in between; which endpoint carries 1/2
/// depends on the orientation.
#[derive(Clone, Debug)]
pub struct ValueMap {
    /// left endpoint
    pub a: Point,
    /// right endpoint
    pub b: Point,
    pub orientation: Orientation,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValueError {
    #[error("point is not on the segment")]
    OffSegment,
    #[error("value outside [1/2, 2]")]
    OutOfRange,
}

impl ValueMap {
    pub fn new(a: Point, b: Point, orientation: Orientation) -> ValueMap {
        assert_eq!(a.y, b.y, "variable segments are horizontal");
        assert!(a.x < b.x, "a must be left of b");
        ValueMap { a, b, orientation }
    }

    pub fn segment(&self) -> Segment {
        Segment { a: self.a.clone(), b: self.b.clone() }
    }

    pub fn length(&self) -> Q {
        &self.b.x - &self.a.x
    }

    /// Exact value of a point on the segment.
    pub fn value_at(&self, p: &Point) -> Result<Q, ValueError> {
        if p.y != self.a.y || p.x < self.a.x || p.x > self.b.x {
            return Err(ValueError::OffSegment);
        }
        let len = self.length();
        let distance = match self.orientation {
            Orientation::Right => &p.x - &self.a.x,
            Orientation::Left => &self.b.x - &p.x,
        };
        Ok(q(1, 2) + q(3, 2) * distance / len)
    }

    /// Exact inverse of `value_at`.
    pub fn point_at(&self, v: &Q) -> Result<Point, ValueError> {
        if *v < q(1, 2) || *v > q(2, 1) {
            return Err(ValueError::OutOfRange);
        }
        let len = self.length();
        let distance = (v - q(1, 2)) * q(2, 3) * len;
        let x = match self.orientation {
            Orientation::Right => &self.a.x + &distance,
            Orientation::Left => &self.b.x - &distance,
        };
        Ok(Point { x, y: self.a.y.clone() })
    }

    /// Subsegment corresponding to a closed value interval.
    pub fn restricted(&self, lo: &Q, hi: &Q) -> (Point, Point) {
        let p = self.point_at(lo).expect("interval inside [1/2,2]");
        let r = self.point_at(hi).expect("interval inside [1/2,2]");
        if p.x <= r.x {
            (p, r)
        } else {
            (r, p)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CornerKind {
    /// Lever corner with its pivot (a polygon corner index).
    Lever { pivot: usize },
    Helper,
}

#[derive(Clone, Debug)]
pub struct MarkedCorner {
    /// index into the polygon corner list
    pub corner: usize,
    pub kind: CornerKind,
    /// diagnostic name, unique
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RectContent {
    /// holds the restricted range of a variable segment
    VarSeg(usize),
    /// holds the restricted part of a non-horizontal critical segment
    Critical(usize),
    /// introduced only to satisfy the bar intersection promise
    BarCompliance,
}

#[derive(Clone, Debug)]
pub struct MarkedRect {
    pub rect: AxisRectangle,
    pub content: RectContent,
    /// marked-corner indices whose pieces jointly cover the rectangle
    pub coverers: Vec<usize>,
}

/// A horizontal variable segment with its responsibilities.
#[derive(Clone, Debug)]
pub struct VarSegRecord {
    pub map: ValueMap,
    /// owning variable, 1-based in 1..=3n
    pub var: usize,
    /// restricted value interval (the variable's range)
    pub lo: Q,
    pub hi: Q,
    /// marked-corner index (into `marked`) of the left-responsible corner
    pub left_resp: usize,
    pub right_resp: usize,
    pub rect: usize,
    /// diagnostic name
    pub label: String,
    /// global base-pocket index when this is a pocket segment
    pub global_index: Option<usize>,
}

/// A non-horizontal critical segment (corridor hand-off or inversion
/// hand-off) with its responsibilities.
#[derive(Clone, Debug)]
pub struct CriticalRecord {
    pub seg: Segment,
    /// restricted part, endpoint order matching `seg`
    pub restricted: Segment,
    /// left-responsible marked corner (covers toward seg.a when rotating)
    pub left_resp: usize,
    pub right_resp: usize,
    pub helper: usize,
    pub rect: usize,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct InstanceMeta {
    /// number of original variables
    pub n: usize,
    /// slab-certification constant
    pub c_const: Q,
    /// maximum variable-segment index
    pub n_index: usize,
    pub delta: Q,
    /// global similarity scale applied to the whole instance
    pub scale: Q,
    /// pocket height in paper units before scaling
    pub pocket_height: Q,
    /// whether the generality perturbation pass has been applied
    pub perturbed: bool,
}

/// The compiled restricted-cover instance with all annotations.
#[derive(Clone, Debug)]
pub struct MrccInstance {
    pub polygon: SimplePolygon,
    pub marked: Vec<MarkedCorner>,
    pub rects: Vec<MarkedRect>,
    pub segments: Vec<VarSegRecord>,
    pub criticals: Vec<CriticalRecord>,
    /// per corridor: data needed by the slab-containment check
    pub corridors: Vec<crate::corridor::CorridorSpec>,
    pub meta: InstanceMeta,
}

impl MrccInstance {
    pub fn k(&self) -> usize {
        self.marked.len()
    }

    pub fn marked_point(&self, m: usize) -> &Point {
        self.polygon.corner(self.marked[m].corner)
    }

    pub fn pivot_point(&self, m: usize) -> Option<&Point> {
        match self.marked[m].kind {
            CornerKind::Lever { pivot } => Some(self.polygon.corner(pivot)),
            CornerKind::Helper => None,
        }
    }

    pub fn find_marked(&self, label: &str) -> Option<usize> {
        self.marked.iter().position(|m| m.label == label)
    }
}
