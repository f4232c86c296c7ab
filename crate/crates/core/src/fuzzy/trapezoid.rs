use std::fmt;

use super::{Degree, FuzzyError};

/// Trapezoidal possibility distribution `[a, b, c, d]` over an ordered domain.
///
/// Support is `[a, d]`, core is `[b, c]`. Coinciding parameters give
/// triangles (`b == c`), intervals (`a == b`, `c == d`) and points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trapezoid {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl Trapezoid {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self, FuzzyError> {
        let finite = [a, b, c, d].iter().all(|v| v.is_finite());
        if !finite || !(a <= b && b <= c && c <= d) {
            return Err(FuzzyError::InvalidTrapezoid([a, b, c, d]));
        }
        Ok(Trapezoid { a, b, c, d })
    }

    pub fn point(x: f64) -> Result<Self, FuzzyError> {
        Trapezoid::new(x, x, x, x)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn params(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Membership degree of `x`. Step edges (`a == b` or `c == d`) put the
    /// boundary point at degree 1.
    pub fn membership(&self, x: f64) -> Degree {
        if x < self.a || x > self.d {
            Degree::ZERO
        } else if x >= self.b && x <= self.c {
            Degree::ONE
        } else if x < self.b {
            Degree::saturating((x - self.a) / (self.b - self.a))
        } else {
            Degree::saturating((self.d - x) / (self.d - self.c))
        }
    }

    /// Closed interval of points whose membership is at least `level`.
    /// For `level == 0` this is the closed support.
    pub fn alpha_cut(&self, level: Degree) -> (f64, f64) {
        let t = level.value();
        (self.a + t * (self.b - self.a), self.d - t * (self.d - self.c))
    }
}

impl fmt::Display for Trapezoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.a, self.b, self.c, self.d)
    }
}

/// Possibility that two ordered fuzzy quantities are equal:
/// `sup_x min(mu1(x), mu2(x))`.
pub fn poss_eq_ordered(t1: &Trapezoid, t2: &Trapezoid) -> Degree {
    // cores overlap
    if t1.b.max(t2.b) <= t1.c.min(t2.c) {
        return Degree::ONE;
    }
    let (left, right) = if t1.c < t2.b { (t1, t2) } else { (t2, t1) };
    if left.d <= right.a {
        // touching supports only meet at a sloped (zero) boundary here
        return Degree::ZERO;
    }
    let falling = left.d - left.c;
    let rising = right.b - right.a;
    Degree::saturating((left.d - right.a) / (falling + rising))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: f64, b: f64, c: f64, d: f64) -> Trapezoid {
        Trapezoid::new(a, b, c, d).unwrap()
    }

    // Piecewise definition evaluated on a dense grid, independent of
    // `membership`'s branch structure.
    fn grid_membership(tr: &Trapezoid, x: f64) -> f64 {
        let [a, b, c, d] = tr.params();
        let rise = if b > a {
            (x - a) / (b - a)
        } else if x >= a {
            1.0
        } else {
            0.0
        };
        let fall = if d > c {
            (d - x) / (d - c)
        } else if x <= d {
            1.0
        } else {
            0.0
        };
        rise.min(fall).clamp(0.0, 1.0)
    }

    #[test]
    fn young_at_26_is_point_eight() {
        assert_eq!(t(15.0, 20.0, 25.0, 30.0).membership(26.0).value(), 0.8);
    }

    #[test]
    fn mature_core_and_edge() {
        let mature = t(25.0, 30.0, 40.0, 45.0);
        assert_eq!(mature.membership(35.0), Degree::ONE);
        assert_eq!(mature.membership(27.0).value(), 0.4);
        assert!((grid_membership(&mature, 27.0) - 0.4).abs() < 1e-12);
        let mut x = 20.0;
        while x <= 50.0 {
            let got = mature.membership(x).value();
            assert!((got - grid_membership(&mature, x)).abs() < 1e-9, "x={x}");
            x += 0.01;
        }
    }

    #[test]
    fn step_edges_include_boundary() {
        let interval = t(25.0, 25.0, 30.0, 30.0);
        assert_eq!(interval.membership(25.0), Degree::ONE);
        assert_eq!(interval.membership(30.0), Degree::ONE);
        assert_eq!(interval.membership(30.0001), Degree::ZERO);
        assert_eq!(interval.membership(24.9999), Degree::ZERO);
        let point = t(28.0, 28.0, 28.0, 28.0);
        assert_eq!(point.membership(28.0), Degree::ONE);
        assert_eq!(point.membership(28.5), Degree::ZERO);
    }

    #[test]
    fn rejects_unordered_parameters() {
        assert!(Trapezoid::new(1.0, 0.0, 2.0, 3.0).is_err());
        assert!(Trapezoid::new(0.0, 1.0, 3.0, 2.0).is_err());
        assert!(Trapezoid::new(0.0, f64::NAN, 1.0, 2.0).is_err());
    }

    #[test]
    fn poss_eq_examples() {
        let young = t(15.0, 20.0, 25.0, 30.0);
        let mature = t(25.0, 30.0, 40.0, 45.0);
        assert_eq!(poss_eq_ordered(&young, &young), Degree::ONE);
        assert_eq!(poss_eq_ordered(&young, &mature).value(), 0.5);
        assert_eq!(poss_eq_ordered(&mature, &young).value(), 0.5);
        assert_eq!(
            poss_eq_ordered(&t(0.0, 1.0, 2.0, 3.0), &t(10.0, 11.0, 12.0, 13.0)),
            Degree::ZERO
        );
    }

    #[test]
    fn poss_eq_degenerate_shapes() {
        let p28 = Trapezoid::point(28.0).unwrap();
        let p29 = Trapezoid::point(29.0).unwrap();
        assert_eq!(poss_eq_ordered(&p28, &p28), Degree::ONE);
        assert_eq!(poss_eq_ordered(&p28, &p29), Degree::ZERO);
        // point inside a rising edge
        let young = t(15.0, 20.0, 25.0, 30.0);
        assert_eq!(poss_eq_ordered(&p28, &young).value(), 0.4);
        // touching supports: interval ends where a sloped edge starts
        let iv = t(10.0, 10.0, 15.0, 15.0);
        assert_eq!(poss_eq_ordered(&iv, &young), Degree::ZERO);
        let iv2 = t(10.0, 10.0, 17.5, 17.5);
        assert_eq!(poss_eq_ordered(&iv2, &young).value(), 0.5);
    }

    #[test]
    fn brute_force_cross_check() {
        let young = t(15.0, 20.0, 25.0, 30.0);
        let mature = t(25.0, 30.0, 40.0, 45.0);
        let mut best: f64 = 0.0;
        let mut x = 15.0;
        while x <= 45.0 {
            best = best.max(grid_membership(&young, x).min(grid_membership(&mature, x)));
            x += 1e-4;
        }
        assert!((best - 0.5).abs() < 1e-3);
    }

    #[test]
    fn alpha_cut_of_mature() {
        let mature = t(25.0, 30.0, 40.0, 45.0);
        assert_eq!(mature.alpha_cut(Degree::new(0.4).unwrap()), (27.0, 43.0));
        assert_eq!(mature.alpha_cut(Degree::ZERO), (25.0, 45.0));
    }
}
