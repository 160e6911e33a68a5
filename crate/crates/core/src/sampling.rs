//! Deterministic random samplers for the verification layers.
//!
//! Everything here is seeded explicitly and draws from a counter-based
//! generator, so any reported witness can be regenerated from (seed, index).
//! The rational samplers produce small-denominator exact values; boundary
//! configurations (chain seams, the split line) are hit with sizable
//! probability on purpose, since that is where transcription mistakes in
//! piecewise definitions hide.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::metric::Point;
use crate::reduction::{branch_of, Branch};
use crate::scalar::{rat, Rat};
use crate::triangle::{CanonicalTriangle, CaseTag, Subcase, TriangleType};

/// Exact-rational sampler over triangle parameter chains.
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Positive rational with numerator up to 48 and denominator up to 12.
    pub fn positive(&mut self) -> Rat {
        let d = self.rng.gen_range(1..=12i64);
        let n = self.rng.gen_range(1..=48i64);
        rat(n, d)
    }

    /// Zero with probability 1/4, otherwise positive; used for chain gaps
    /// whose closed ends should be exercised.
    fn slack(&mut self) -> Rat {
        if self.rng.gen_range(0..4u8) == 0 {
            Rat::zero()
        } else {
            self.positive()
        }
    }

    /// Weight in (0, 6], biased toward the interesting band around 3/2 and 2.
    pub fn weight(&mut self) -> Rat {
        match self.rng.gen_range(0..4u8) {
            0 => rat(3, 2),
            1 => rat(2, 1),
            _ => {
                let d = self.rng.gen_range(1..=8i64);
                let n = self.rng.gen_range(1..=6 * d);
                rat(n, d)
            }
        }
    }

    /// Random parameters satisfying the chain of `tag`, closed boundaries
    /// included.
    pub fn triangle_in_chain(&mut self, tag: CaseTag) -> CanonicalTriangle<Rat> {
        let (p, q, r) = match (tag.triangle_type, tag.subcase) {
            (TriangleType::Type1, Subcase::A) => {
                // 0 < r <= p < q
                let r = self.positive();
                let p = r.clone() + self.slack();
                let q = p.clone() + self.positive();
                (p, q, r)
            }
            (TriangleType::Type1, Subcase::B) => {
                // 0 <= p < r <= q
                let p = self.slack();
                let r = p.clone() + self.positive();
                let q = r.clone() + self.slack();
                (p, q, r)
            }
            (TriangleType::Type1, Subcase::C) => {
                // 0 <= p < q < r
                let p = self.slack();
                let q = p.clone() + self.positive();
                let r = q.clone() + self.positive();
                (p, q, r)
            }
            (TriangleType::Type2, Subcase::A) => {
                // 0 < r <= -p <= q
                let r = self.positive();
                let mp = r.clone() + self.slack();
                let q = mp.clone() + self.slack();
                (-mp, q, r)
            }
            (TriangleType::Type2, Subcase::B) => {
                // 0 < -p <= r <= q
                let mp = self.positive();
                let r = mp.clone() + self.slack();
                let q = r.clone() + self.slack();
                (-mp, q, r)
            }
            (TriangleType::Type2, Subcase::C) => {
                // 0 < -p <= q < r
                let mp = self.positive();
                let q = mp.clone() + self.slack();
                let r = q.clone() + self.positive();
                (-mp, q, r)
            }
        };
        CanonicalTriangle::new(p, q, r).expect("chain construction keeps p < q and r > 0")
    }

    /// Strictly interior point, as a positive rational convex combination of
    /// the vertices.
    pub fn interior_point(&mut self, t: &CanonicalTriangle<Rat>) -> Point<Rat> {
        let u = self.positive();
        let v = self.positive();
        let s = self.positive();
        let total = u.clone() + v.clone() + s.clone();
        let [a, b, c] = t.vertices();
        let x = (u.clone() * a.x + v.clone() * b.x + s.clone() * c.x) / total.clone();
        let y = (u * a.y + v * b.y + s * c.y) / total;
        Point::new(x, y)
    }

    /// Triangle in the chain of `tag` plus an interior point lying in the
    /// requested branch. With probability 1/8 the point is snapped onto the
    /// split line itself (which belongs to the right branch).
    pub fn cell_sample(
        &mut self,
        tag: CaseTag,
        branch: Branch,
    ) -> (CanonicalTriangle<Rat>, Point<Rat>) {
        for _ in 0..100_000 {
            let t = self.triangle_in_chain(tag);
            let mut m = self.interior_point(&t);
            if branch == Branch::Right && self.rng.gen_range(0..8u8) == 0 {
                let split = match tag.triangle_type {
                    TriangleType::Type1 => t.p().clone(),
                    TriangleType::Type2 => Rat::zero(),
                };
                m = Point::new(split, m.y);
                if !t.contains_interior(&m, &Rat::zero()) {
                    continue;
                }
            }
            if branch_of(&t, &m.x).expect("chain triangles classify") == branch {
                return (t, m);
            }
        }
        unreachable!("branch region sampling failed to terminate");
    }
}

/// Float sampler producing dyadic coordinates (multiples of 1/64 of modest
/// magnitude). Sums and differences of such values are exact in f64, which
/// the isometry-invariance tests rely on.
pub struct FloatSampler {
    rng: ChaCha8Rng,
}

impl FloatSampler {
    pub fn new(seed: u64) -> Self {
        FloatSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Dyadic value in [-scale, scale] with step 1/64.
    pub fn dyadic(&mut self, scale: i64) -> f64 {
        self.rng.gen_range(-(scale * 64)..=scale * 64) as f64 / 64.0
    }

    /// Three dyadic vertices forming a triangle with twice-area at least 1.
    pub fn dyadic_triangle_vertices(&mut self, scale: i64) -> [Point<f64>; 3] {
        loop {
            let a = Point::new(self.dyadic(scale), self.dyadic(scale));
            let b = Point::new(self.dyadic(scale), self.dyadic(scale));
            let c = Point::new(self.dyadic(scale), self.dyadic(scale));
            let twice_area = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
            if twice_area.abs() >= 1.0 {
                return [a, b, c];
            }
        }
    }

    pub fn dyadic_shift(&mut self, scale: i64) -> (f64, f64) {
        (self.dyadic(scale), self.dyadic(scale))
    }
}
