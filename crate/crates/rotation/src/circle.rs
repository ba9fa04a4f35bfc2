use std::cmp::Ordering;
use std::fmt;

use crate::quadratic::QuadraticReal;

/// A point of the unit circle: a [`QuadraticReal`] reduced into `[0, 1)` by
/// exact floor arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirclePoint {
    value: QuadraticReal,
}

impl CirclePoint {
    pub fn new(value: QuadraticReal) -> Self {
        CirclePoint {
            value: value.fract(),
        }
    }

    pub fn zero() -> Self {
        CirclePoint {
            value: QuadraticReal::zero(),
        }
    }

    pub fn value(&self) -> &QuadraticReal {
        &self.value
    }

    /// `(self + alpha) mod 1`, exact.
    pub fn rotate(&self, alpha: &QuadraticReal) -> Self {
        CirclePoint::new(&self.value + alpha)
    }

    /// `(self + delta) mod 1` for any (possibly negative) shift.
    pub fn shift(&self, delta: &QuadraticReal) -> Self {
        CirclePoint::new(&self.value + delta)
    }

    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        self.value.cmp_exact(&other.value)
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Half-open arc `[start, end)` running counterclockwise; it may wrap past 0.
/// `start == end` denotes the empty arc, so a full circle must be written as
/// a union of at least two arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    start: CirclePoint,
    end: CirclePoint,
}

impl Arc {
    pub fn new(start: CirclePoint, end: CirclePoint) -> Self {
        Arc { start, end }
    }

    pub fn start(&self) -> &CirclePoint {
        &self.start
    }

    pub fn end(&self) -> &CirclePoint {
        &self.end
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, x: &CirclePoint) -> bool {
        match self.start.cmp_exact(&self.end) {
            Ordering::Equal => false,
            Ordering::Less => {
                x.cmp_exact(&self.start) != Ordering::Less
                    && x.cmp_exact(&self.end) == Ordering::Less
            }
            Ordering::Greater => {
                x.cmp_exact(&self.start) != Ordering::Less
                    || x.cmp_exact(&self.end) == Ordering::Less
            }
        }
    }

    /// Arc length as an exact value in `[0, 1)`.
    pub fn length(&self) -> QuadraticReal {
        (self.end.value() - self.start.value()).fract()
    }

    /// The arc as non-wrapping segments of `[0, 1]` (zero, one or two).
    pub(crate) fn segments(&self) -> Vec<Segment> {
        match self.start.cmp_exact(&self.end) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => vec![Segment {
                start: self.start.value().clone(),
                end: self.end.value().clone(),
            }],
            Ordering::Greater => {
                let one = QuadraticReal::one();
                let mut out = vec![Segment {
                    start: self.start.value().clone(),
                    end: one,
                }];
                if self.end.value().signum() != Ordering::Equal {
                    out.push(Segment {
                        start: QuadraticReal::zero(),
                        end: self.end.value().clone(),
                    });
                }
                out
            }
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.start, self.end)
    }
}

/// Non-wrapping half-open interval `[start, end)` with
/// `0 <= start < end <= 1`. The working representation for exact partition
/// checks and interval intersections.
#[derive(Debug, Clone)]
pub(crate) struct Segment {
    pub start: QuadraticReal,
    pub end: QuadraticReal,
}

impl Segment {
    pub fn length(&self) -> QuadraticReal {
        &self.end - &self.start
    }
}

/// Sorts segments by start. Callers guarantee disjointness.
pub(crate) fn sort_segments(segs: &mut [Segment]) {
    segs.sort_by(|a, b| a.start.cmp_exact(&b.start));
}

/// Intersects two families of disjoint sorted segments.
pub(crate) fn intersect_segments(a: &[Segment], b: &[Segment]) -> Vec<Segment> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let lo = if a[i].start.cmp_exact(&b[j].start) == Ordering::Less {
            b[j].start.clone()
        } else {
            a[i].start.clone()
        };
        let (hi, advance_a) = if a[i].end.cmp_exact(&b[j].end) == Ordering::Less {
            (a[i].end.clone(), true)
        } else {
            (b[j].end.clone(), false)
        };
        if lo.cmp_exact(&hi) == Ordering::Less {
            out.push(Segment { start: lo, end: hi });
        }
        if advance_a {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

/// Shifts every segment by `delta` modulo 1, splitting at the wrap point.
pub(crate) fn shift_segments(segs: &[Segment], delta: &QuadraticReal) -> Vec<Segment> {
    let one = QuadraticReal::one();
    let mut out = Vec::new();
    for seg in segs {
        let s = (&seg.start + delta).fract();
        let span = seg.length();
        let e = &s + &span;
        if e.cmp_exact(&one) != Ordering::Greater {
            out.push(Segment { start: s, end: e });
        } else {
            out.push(Segment {
                start: s,
                end: one.clone(),
            });
            out.push(Segment {
                start: QuadraticReal::zero(),
                end: &e - &one,
            });
        }
    }
    sort_segments(&mut out);
    out
}

/// Rebuilds arcs from disjoint sorted segments, fusing a trailing segment
/// that ends at 1 with a leading one that starts at 0 into one wrapping arc.
pub(crate) fn segments_to_arcs(segs: &[Segment]) -> Vec<Arc> {
    if segs.is_empty() {
        return Vec::new();
    }
    // fuse runs of adjacent segments first
    let mut fused: Vec<Segment> = Vec::new();
    for seg in segs {
        if let Some(last) = fused.last_mut() {
            if last.end.cmp_exact(&seg.start) == Ordering::Equal {
                last.end = seg.end.clone();
                continue;
            }
        }
        fused.push(seg.clone());
    }
    let one = QuadraticReal::one();
    if fused.len() == 1
        && fused[0].start.signum() == Ordering::Equal
        && fused[0].end.cmp_exact(&one) == Ordering::Equal
    {
        // Full circle. A single arc cannot carry it (start == end is the
        // empty arc), so split at an interior boundary of the input.
        let cut = segs
            .iter()
            .map(|s| &s.end)
            .find(|e| e.signum() == Ordering::Greater && e.cmp_exact(&one) == Ordering::Less)
            .expect("a full cover assembled from proper arcs has an interior endpoint")
            .clone();
        return vec![
            Arc::new(CirclePoint::zero(), CirclePoint::new(cut.clone())),
            Arc::new(CirclePoint::new(cut), CirclePoint::zero()),
        ];
    }
    let wraps = fused.len() >= 2
        && fused[0].start.signum() == Ordering::Equal
        && fused.last().unwrap().end.cmp_exact(&one) == Ordering::Equal;
    let mut arcs: Vec<Arc> = Vec::new();
    if wraps {
        let first = fused.remove(0);
        let last = fused.pop().unwrap();
        for seg in &fused {
            arcs.push(Arc::new(
                CirclePoint::new(seg.start.clone()),
                CirclePoint::new(seg.end.clone()),
            ));
        }
        arcs.push(Arc::new(
            CirclePoint::new(last.start.clone()),
            CirclePoint::new(first.end.clone()),
        ));
    } else {
        for seg in &fused {
            arcs.push(Arc::new(
                CirclePoint::new(seg.start.clone()),
                CirclePoint::new(seg.end.clone()),
            ));
        }
    }
    arcs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(num: i64, den: i64) -> CirclePoint {
        CirclePoint::new(QuadraticReal::from_ratio(num, den).unwrap())
    }

    #[test]
    fn rotation_reduces_mod_one() {
        let alpha = QuadraticReal::golden();
        let x = CirclePoint::zero().rotate(&alpha).rotate(&alpha);
        // 2·(√5-1)/2 = √5 - 1 ≈ 1.236, reduced: √5 - 2
        assert_eq!(x.value(), &QuadraticReal::new(-2, 1, 1, 5).unwrap());
    }

    #[test]
    fn plain_arc_membership() {
        let arc = Arc::new(pt(1, 4), pt(3, 4));
        assert!(arc.contains(&pt(1, 4)));
        assert!(arc.contains(&pt(1, 2)));
        assert!(!arc.contains(&pt(3, 4)));
        assert!(!arc.contains(&pt(0, 1)));
    }

    #[test]
    fn wrapping_arc_membership() {
        let arc = Arc::new(pt(3, 4), pt(1, 4));
        assert!(arc.contains(&pt(3, 4)));
        assert!(arc.contains(&pt(0, 1)));
        assert!(!arc.contains(&pt(1, 4)));
        assert!(!arc.contains(&pt(1, 2)));
    }

    #[test]
    fn empty_arc_contains_nothing() {
        let arc = Arc::new(pt(1, 3), pt(1, 3));
        assert!(arc.is_empty());
        assert!(!arc.contains(&pt(1, 3)));
        assert!(arc.length().is_zero_value());
    }

    #[test]
    fn wrapping_arc_length() {
        let arc = Arc::new(pt(3, 4), pt(1, 4));
        assert_eq!(arc.length(), QuadraticReal::from_ratio(1, 2).unwrap());
    }

    #[test]
    fn shift_splits_at_wrap() {
        let segs = vec![Segment {
            start: QuadraticReal::from_ratio(1, 2).unwrap(),
            end: QuadraticReal::from_ratio(3, 4).unwrap(),
        }];
        let shifted = shift_segments(&segs, &QuadraticReal::from_ratio(3, 8).unwrap());
        assert_eq!(shifted.len(), 2);
        assert!(shifted[0].start.is_zero_value());
        assert_eq!(shifted[0].end, QuadraticReal::from_ratio(1, 8).unwrap());
        assert_eq!(shifted[1].start, QuadraticReal::from_ratio(7, 8).unwrap());
    }

    #[test]
    fn intersect_respects_boundaries() {
        let a = vec![Segment {
            start: QuadraticReal::zero(),
            end: QuadraticReal::from_ratio(1, 2).unwrap(),
        }];
        let b = vec![Segment {
            start: QuadraticReal::from_ratio(1, 4).unwrap(),
            end: QuadraticReal::from_ratio(3, 4).unwrap(),
        }];
        let out = intersect_segments(&a, &b);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].start, QuadraticReal::from_ratio(1, 4).unwrap());
        assert_eq!(out[0].end, QuadraticReal::from_ratio(1, 2).unwrap());
    }

    #[test]
    fn segments_to_arcs_fuses_wrap() {
        let segs = vec![
            Segment {
                start: QuadraticReal::zero(),
                end: QuadraticReal::from_ratio(1, 8).unwrap(),
            },
            Segment {
                start: QuadraticReal::from_ratio(7, 8).unwrap(),
                end: QuadraticReal::one(),
            },
        ];
        let arcs = segments_to_arcs(&segs);
        assert_eq!(arcs.len(), 1);
        assert_eq!(arcs[0].start(), &pt(7, 8));
        assert_eq!(arcs[0].end(), &pt(1, 8));
    }
}
