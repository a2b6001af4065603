//! Compensated summation and small least-squares fits.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Neumaier compensated sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Neumaier::default();
        iter.into_iter().for_each(|x| s.add(x));
        s
    }
}

/// Compensated complex sum (componentwise Neumaier).
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierC {
    re: Neumaier,
    im: Neumaier,
}

impl NeumaierC {
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

pub fn sum(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().collect::<Neumaier>().value()
}

/// Ordinary least squares `y ≈ X β` where the columns of `X` are `regressors`
/// plus an intercept column in position 0. Returns `β` (intercept first).
pub fn least_squares(regressors: &[Vec<f64>], y: &[f64]) -> Option<Vec<f64>> {
    let m = y.len();
    let k = regressors.len() + 1;
    if m < k {
        return None;
    }
    let x = DMatrix::from_fn(m, k, |i, j| if j == 0 { 1.0 } else { regressors[j - 1][i] });
    let yv = DVector::from_column_slice(y);
    let svd = x.svd(true, true);
    let beta = svd.solve(&yv, 1e-12).ok()?;
    Some(beta.iter().copied().collect())
}

/// Slope of the least-squares line through `(x_i, y_i)`.
pub fn slope(x: &[f64], y: &[f64]) -> Option<f64> {
    least_squares(&[x.to_vec()], y).map(|b| b[1])
}

/// `n` points geometrically spaced on `[lo, hi]`, both ends included.
pub fn geomspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// `n` points evenly spaced on `[lo, hi]`, both ends included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
