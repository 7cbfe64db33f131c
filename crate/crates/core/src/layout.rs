//! Bottom wall of the instance: base pockets, variable segments with
//! their orientations and propagation corners, pivots, scores and global
//! indices.

use crate::formula::{IneqConstraint, IneqFormula};
use crate::geom::{pt, Point};
use crate::model::{Orientation, ValueMap};
use crate::num::{q, qi, Q};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    I,
    J,
    L,
}

/// Gadget kinds, one per inequality form (Ge splits by index order).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    GeIneq,
    LeIneq,
    GeAdd,
    LeAdd,
    GeInv,
    LeInv,
}

impl GadgetKind {
    /// Gadget kind and its variable tuple (in slot order i < j < l) for a
    /// constraint. `Ge(a, b)` with a > b is realized as a Le gadget on the
    /// swapped pair.
    pub fn of(c: &IneqConstraint) -> (GadgetKind, Vec<usize>) {
        match *c {
            IneqConstraint::AddGe(i, j, l) => (GadgetKind::GeAdd, vec![i, j, l]),
            IneqConstraint::AddLe(i, j, l) => (GadgetKind::LeAdd, vec![i, j, l]),
            IneqConstraint::MulGe(i, j) => (GadgetKind::GeInv, vec![i, j]),
            IneqConstraint::MulLe(i, j) => (GadgetKind::LeInv, vec![i, j]),
            IneqConstraint::Ge(a, b) => {
                if a < b {
                    (GadgetKind::GeIneq, vec![a, b])
                } else {
                    (GadgetKind::LeIneq, vec![b, a])
                }
            }
        }
    }

    /// Orientation the gadget requires of the base-pocket partner segment
    /// in each slot.
    pub fn slot_orientation(self, slot: Slot) -> Orientation {
        use GadgetKind::*;
        use Orientation::*;
        match (self, slot) {
            (GeIneq, Slot::I) => Left,
            (GeIneq, Slot::J) => Right,
            (LeIneq, Slot::I) => Right,
            (LeIneq, Slot::J) => Left,
            (GeAdd, Slot::I) | (GeAdd, Slot::J) => Left,
            (GeAdd, Slot::L) => Right,
            (LeAdd, Slot::I) | (LeAdd, Slot::J) => Right,
            (LeAdd, Slot::L) => Left,
            (GeInv, _) => Left,
            (LeInv, _) => Right,
            (GeIneq, Slot::L) | (LeIneq, Slot::L) | (GeInv, Slot::L) | (LeInv, Slot::L) => {
                unreachable!("two-segment gadget has no l slot")
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LayoutError {
    #[error("degenerate instance: no constraints")]
    Empty,
    #[error("internal: {0}")]
    Internal(String),
}

/// One variable-segment occurrence: which constraint and slot consumes it.
#[derive(Clone, Debug)]
pub struct Occurrence {
    pub constraint: usize,
    pub slot: Slot,
    pub var: usize,
    pub orientation: Orientation,
    /// pinned position in the pocket per the consistency wiring
    pub pinned: Option<Pin>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pin {
    Topmost,
    Bottommost,
}

#[derive(Clone, Debug, Default)]
pub struct PocketPlan {
    /// right-oriented occurrences, topmost first
    pub top: Vec<Occurrence>,
    /// left-oriented occurrences, bottom-most first
    pub bottom: Vec<Occurrence>,
}

/// Assign every variable occurrence to a pocket slot with its required
/// orientation, pinning the consistency-cycle segments to the extremes of
/// their pockets.
pub fn plan_segments(f: &IneqFormula) -> Result<Vec<PocketPlan>, LayoutError> {
    if f.constraints.is_empty() {
        return Err(LayoutError::Empty);
    }
    let n = f.n_original;
    let mut plans: Vec<PocketPlan> = vec![PocketPlan::default(); 3 * n];
    for (ci, c) in f.constraints.iter().enumerate() {
        let (kind, vars) = GadgetKind::of(c);
        let slots = [Slot::I, Slot::J, Slot::L];
        for (si, &var) in vars.iter().enumerate() {
            let slot = slots[si];
            let orientation = kind.slot_orientation(slot);
            // consistency pins per the cycle wiring
            let pinned = match (kind, slot, c) {
                (GadgetKind::GeIneq, Slot::I, IneqConstraint::Ge(_, _)) => Some(Pin::Bottommost),
                (GadgetKind::GeIneq, Slot::J, IneqConstraint::Ge(_, _)) => Some(Pin::Topmost),
                (GadgetKind::LeIneq, Slot::I, IneqConstraint::Ge(_, _)) => Some(Pin::Topmost),
                (GadgetKind::LeIneq, Slot::J, IneqConstraint::Ge(_, _)) => Some(Pin::Bottommost),
                _ => None,
            };
            let occ = Occurrence { constraint: ci, slot, var, orientation, pinned };
            let plan = &mut plans[var - 1];
            match orientation {
                Orientation::Right => plan.top.push(occ),
                Orientation::Left => plan.bottom.push(occ),
            }
        }
    }
    // Move pinned occurrences to the front of their group.
    for plan in &mut plans {
        plan.top.sort_by_key(|o| (o.pinned != Some(Pin::Topmost), o.constraint));
        plan.bottom
            .sort_by_key(|o| (o.pinned != Some(Pin::Bottommost), o.constraint));
        debug_assert!(
            plan.top.iter().filter(|o| o.pinned == Some(Pin::Topmost)).count() <= 1
        );
        debug_assert!(
            plan.bottom.iter().filter(|o| o.pinned == Some(Pin::Bottommost)).count() <= 1
        );
    }
    Ok(plans)
}

#[derive(Clone, Debug)]
pub struct LayoutSeg {
    pub pocket: usize,
    pub map: ValueMap,
    pub var: usize,
    pub lo: Q,
    pub hi: Q,
    /// propagation corner c_i^s
    pub c_s: Point,
    /// global index, 1-based
    pub global_index: usize,
    pub mu: Q,
    pub occurrence: Occurrence,
    pub label: String,
}

impl LayoutSeg {
    pub fn midpoint(&self) -> Point {
        self.map.a.midpoint(&self.map.b)
    }
}

#[derive(Clone, Debug)]
pub struct Pocket {
    pub index: usize,
    pub center_x: Q,
    pub pivot: Point,
    /// nominal west wall abscissa (spike bases sit near it)
    pub x_west: Q,
    pub x_east: Q,
    /// base corner tip c_b
    pub base_corner: Point,
    /// segment indices into `BaseLayout::segs`, topmost first
    pub top: Vec<usize>,
    /// bottom-most first
    pub bottom: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct BaseLayout {
    pub eta: Q,
    pub k_max: usize,
    pub height: Q,
    pub y_pivot: Q,
    pub pitch: Q,
    pub pockets: Vec<Pocket>,
    pub segs: Vec<LayoutSeg>,
    pub n_index: usize,
    /// relative origin o = c_1^s
    pub origin: Point,
}

/// Build all pockets and variable segments. Everything is exact; the
/// invariants of the construction are asserted here.
pub fn build_pockets(f: &IneqFormula, plans: &[PocketPlan]) -> Result<BaseLayout, LayoutError> {
    let eta = q(1, 32);
    let k_max = plans
        .iter()
        .map(|p| p.top.len().max(p.bottom.len()))
        .max()
        .unwrap_or(0);
    if k_max == 0 {
        return Err(LayoutError::Empty);
    }
    // Pocket height 13.5*K/eta with K = 3*k_max - 2 so that both the exact
    // segment-length window and mu in [0, eta/2] hold.
    let kk = qi(3 * k_max as i64 - 2);
    let height = q(27, 2) * &kk / &eta; // 432*K
    let y_pivot = -&height / qi(2);
    let delta_top = -&y_pivot - q(27, 2);
    let pitch = &height + qi(54);
    let three_halves = q(3, 2);

    let mut segs: Vec<LayoutSeg> = Vec::new();
    let mut pockets: Vec<Pocket> = Vec::new();
    for (pi, plan) in plans.iter().enumerate() {
        let sigma = pi + 1;
        let center_x = qi(pi as i64) * &pitch;
        let pivot = pt(center_x.clone(), y_pivot.clone());
        let x_east = &center_x + &height - qi(10);
        let base_corner = pt(&x_east + &qi(1), -&height + q(25, 2));
        let mut top_idx = Vec::new();
        let mut bottom_idx = Vec::new();
        for (r, occ) in plan.top.iter().enumerate() {
            let y = q(-27, 2) * qi(r as i64 + 1); // -13.5 * (r+1)
            let seg = make_seg(f, sigma, occ, &center_x, y, &y_pivot, &delta_top, r, true);
            top_idx.push(segs.len());
            segs.push(seg);
        }
        for (r, occ) in plan.bottom.iter().enumerate() {
            let y = -&height + q(27, 2) * qi(r as i64 + 1);
            let seg = make_seg(f, sigma, occ, &center_x, y, &y_pivot, &delta_top, r, false);
            bottom_idx.push(segs.len());
            segs.push(seg);
        }
        pockets.push(Pocket {
            index: sigma,
            center_x: center_x.clone(),
            pivot,
            x_west: &center_x - &q(9, 4),
            x_east,
            base_corner,
            top: top_idx,
            bottom: bottom_idx,
        });
    }

    // Scores and global indices.
    let score = |s: &LayoutSeg| s.midpoint().alpha_score();
    let w_min = segs
        .iter()
        .map(score)
        .min()
        .ok_or(LayoutError::Empty)?;
    let w_max = segs.iter().map(score).max().unwrap();
    let step = q(27, 2);
    for s in segs.iter_mut() {
        let w = s.midpoint().alpha_score();
        let ratio = (&w - &w_min) / &step;
        if !ratio.is_integer() {
            return Err(LayoutError::Internal(format!(
                "score {} is not on the 13.5 grid",
                crate::num::fmt_q(&w)
            )));
        }
        let idx: i64 = num_traits::ToPrimitive::to_i64(&ratio.to_integer())
            .ok_or_else(|| LayoutError::Internal("index overflow".into()))?;
        s.global_index = idx as usize + 1;
    }
    let n_index_ratio = (&w_max - &w_min) / &step;
    let n_index = num_traits::ToPrimitive::to_i64(&n_index_ratio.to_integer()).unwrap() as usize + 1;

    // Uniqueness of scores.
    {
        let mut seen = std::collections::HashSet::new();
        for s in &segs {
            if !seen.insert(s.global_index) {
                return Err(LayoutError::Internal("duplicate segment score".into()));
            }
        }
    }

    // The relative origin o = c_1^s.
    let origin = segs
        .iter()
        .find(|s| s.global_index == 1)
        .expect("segment with index 1 exists")
        .c_s
        .clone();

    let layout = BaseLayout {
        eta: eta.clone(),
        k_max,
        height: height.clone(),
        y_pivot,
        pitch,
        pockets,
        segs,
        n_index,
        origin,
    };

    // Exact invariants.
    for s in &layout.segs {
        let len = s.map.length();
        assert!(len <= three_halves, "segment too long");
        assert!(len >= &three_halves * (qi(1) - &eta), "segment shorter than (1-eta)*3/2");
        assert!(len >= &three_halves - &eta, "segment violates the mu window");
        assert!(s.mu >= qi(0) && s.mu <= &eta / qi(2), "mu outside [0, eta/2]");
        // Observation on base pocket lines, relative to o = c_1^s.
        let i1 = qi(s.global_index as i64 - 1);
        let want_cs = layout.origin.alpha_score() + &step * &i1;
        assert_eq!(s.c_s.alpha_score(), want_cs, "propagation corner off its diagonal");
        let want_a = layout.origin.alpha_score() + &step * &i1 + q(3, 2) + &s.mu;
        assert_eq!(s.map.a.alpha_score(), want_a, "left endpoint off its diagonal");
        let want_b = layout.origin.alpha_score() + &step * &i1 + qi(3) - &s.mu;
        assert_eq!(s.map.b.alpha_score(), want_b, "right endpoint off its diagonal");
    }
    // Ray clearance: slope-one rays from every propagation corner and
    // segment endpoint leave the pocket before its east wall.
    for p in &layout.pockets {
        for &si in p.top.iter().chain(p.bottom.iter()) {
            let s = &layout.segs[si];
            for point in [&s.c_s, &s.map.a, &s.map.b] {
                assert!(
                    point.alpha_score() < &p.x_east - &qi(2),
                    "diagonal ray from pocket {} would hit its east wall",
                    p.index
                );
            }
        }
    }
    // Stacking order across pockets.
    for w in layout.pockets.windows(2) {
        let hi = w[0]
            .top
            .iter()
            .chain(w[0].bottom.iter())
            .map(|&si| layout.segs[si].midpoint().alpha_score())
            .max()
            .unwrap();
        let lo = w[1]
            .top
            .iter()
            .chain(w[1].bottom.iter())
            .map(|&si| layout.segs[si].midpoint().alpha_score())
            .min()
            .unwrap();
        assert!(hi < lo, "pocket score ranges overlap");
    }
    Ok(layout)
}

#[allow(clippy::too_many_arguments)]
fn make_seg(
    f: &IneqFormula,
    sigma: usize,
    occ: &Occurrence,
    center_x: &Q,
    y: Q,
    y_pivot: &Q,
    delta_top: &Q,
    rank: usize,
    is_top: bool,
) -> LayoutSeg {
    let delta = if is_top { &y - y_pivot } else { y_pivot - &y };
    let half = q(3, 4) * &delta / delta_top;
    let a = pt(center_x - &half, y.clone());
    let b = pt(center_x + &half, y.clone());
    let mu = (q(3, 2) - qi(2) * &half) / qi(2);
    let c_s = pt(center_x - &q(13, 4), &y - &qi(1));
    let (lo, hi) = f.intervals[occ.var - 1].clone();
    let map = ValueMap::new(a, b, occ.orientation);
    let side = if is_top { "t" } else { "b" };
    LayoutSeg {
        pocket: sigma,
        map,
        var: occ.var,
        lo,
        hi,
        c_s,
        global_index: 0,
        mu,
        occurrence: occ.clone(),
        label: format!("p{sigma}.{side}{}", rank + 1),
    }
}
