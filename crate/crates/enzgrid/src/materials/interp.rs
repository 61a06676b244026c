//! Monotone cubic (Fritsch–Carlson / PCHIP) interpolation on a strictly
//! increasing grid. No overshoot: on each interval the interpolant stays
//! within the local data range, which preserves non-negativity of Im ε.

#[derive(Debug, Clone)]
pub struct MonotoneCubic {
    x: Vec<f64>,
    y: Vec<f64>,
    /// Endpoint-slope estimates at each node.
    d: Vec<f64>,
}

impl MonotoneCubic {
    pub fn new(x: &[f64], y: &[f64]) -> Result<Self, String> {
        if x.len() != y.len() {
            return Err("x and y lengths differ".into());
        }
        let n = x.len();
        if n < 2 {
            return Err("need at least two points".into());
        }
        for w in x.windows(2) {
            if !(w[1] > w[0]) {
                return Err("x must be strictly increasing".into());
            }
        }
        let h: Vec<f64> = (0..n - 1).map(|i| x[i + 1] - x[i]).collect();
        let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();

        let mut d = vec![0.0; n];
        if n == 2 {
            d[0] = delta[0];
            d[1] = delta[0];
        } else {
            // interior: weighted harmonic mean when slopes share a sign
            for i in 1..n - 1 {
                if delta[i - 1] * delta[i] > 0.0 {
                    let w1 = 2.0 * h[i] + h[i - 1];
                    let w2 = h[i] + 2.0 * h[i - 1];
                    d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
                }
            }
            d[0] = edge_slope(h[0], h[1], delta[0], delta[1]);
            d[n - 1] = edge_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
        }
        Ok(Self {
            x: x.to_vec(),
            y: y.to_vec(),
            d,
        })
    }

    /// Evaluates the interpolant. `x` must lie within the grid.
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.x.len();
        debug_assert!(x >= self.x[0] && x <= self.x[n - 1]);
        let i = match self.x.binary_search_by(|v| v.total_cmp(&x)) {
            Ok(i) => return self.y[i],
            Err(i) => (i.max(1) - 1).min(n - 2),
        };
        let h = self.x[i + 1] - self.x[i];
        let t = (x - self.x[i]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.y[i] + h10 * h * self.d[i] + h01 * self.y[i + 1] + h11 * h * self.d[i + 1]
    }
}

/// Three-point one-sided slope with the standard PCHIP clamps.
fn edge_slope(h0: f64, h1: f64, d0: f64, d1: f64) -> f64 {
    let mut slope = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if slope * d0 <= 0.0 {
        slope = 0.0;
    } else if d0 * d1 < 0.0 && slope.abs() > 3.0 * d0.abs() {
        slope = 3.0 * d0;
    }
    slope
}
