//! Representation combinatorics of SU(n).
//!
//! Irreducibles are labelled by a-coordinates `a ∈ ℤ₊^{n−1}`; the basis of
//! `π_λ` is indexed by semistandard Young tableaux of shape `λ`, on which the
//! diagonal torus acts by `∏ x_k^{t_k}`.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Default cap on the number of tableaux an enumeration may produce.
pub const DEFAULT_TABLEAU_CAP: u128 = 1_000_000;

/// Highest weight of an irreducible representation of SU(n).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HighestWeight {
    n: usize,
    a: Vec<u32>,
}

impl HighestWeight {
    /// From a-coordinates; `a.len()` must be `n − 1`.
    pub fn new(n: usize, a: Vec<u32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidWeight(format!("SU({n}) needs n >= 2")));
        }
        if a.len() != n - 1 {
            return Err(Error::InvalidWeight(format!(
                "SU({n}) needs {} a-coordinates, got {}",
                n - 1,
                a.len()
            )));
        }
        Ok(Self { n, a })
    }

    /// From a partition `λ` of length `n` with `λ_n = 0`.
    pub fn from_lambda(lambda: &[u32]) -> Result<Self> {
        let n = lambda.len();
        if n < 2 {
            return Err(Error::InvalidWeight("λ needs at least two entries".into()));
        }
        if lambda[n - 1] != 0 {
            return Err(Error::InvalidWeight(format!(
                "λ_n must be 0, got {}",
                lambda[n - 1]
            )));
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!("λ = {lambda:?} is not nonincreasing")));
        }
        Self::new(n, lambda.windows(2).map(|w| w[0] - w[1]).collect())
    }

    /// The trivial representation of SU(n).
    pub fn trivial(n: usize) -> Self {
        Self { n, a: vec![0; n - 1] }
    }

    /// The `k`-th fundamental representation `Λ^k ℂⁿ`, `1 ≤ k ≤ n−1`.
    pub fn fundamental(n: usize, k: usize) -> Self {
        assert!((1..n).contains(&k), "fundamental index out of range");
        let mut a = vec![0; n - 1];
        a[k - 1] = 1;
        Self { n, a }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    /// `λ_k = a_k + … + a_{n−1}`, `λ_n = 0`.
    pub fn lambda(&self) -> Vec<u32> {
        let mut lambda = vec![0u32; self.n];
        for k in (0..self.n - 1).rev() {
            lambda[k] = lambda[k + 1] + self.a[k];
        }
        lambda
    }

    /// Word length `λ₁ = a₁ + … + a_{n−1}`.
    pub fn length(&self) -> u32 {
        self.a.iter().sum()
    }

    /// Number of boxes `Σ λ_k`.
    pub fn boxes(&self) -> u32 {
        self.lambda().iter().sum()
    }

    /// Weyl dimension `∏_{i<j} (λ_i − λ_j + j − i)/(j − i)`, exact.
    pub fn dimension(&self) -> u128 {
        let lambda = self.lambda();
        let (mut num, mut den) = (1u128, 1u128);
        for i in 0..self.n {
            for j in i + 1..self.n {
                num *= (lambda[i] - lambda[j]) as u128 + (j - i) as u128;
                den *= (j - i) as u128;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
        debug_assert_eq!(den, 1);
        num
    }
}

impl std::fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.a.iter().map(u32::to_string).collect();
        write!(f, "SU({})[{}]", self.n, parts.join(","))
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A semistandard Young tableau with entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: HighestWeight,
    /// `content[k-1]` is the number of entries equal to `k`.
    pub content: Vec<u32>,
    pub rows: Vec<Vec<u32>>,
}

/// All semistandard tableaux of the given shape, in lexicographic order of the
/// row-major reading word. Fails if the count exceeds `cap`.
pub fn enumerate_tableaux_capped(w: &HighestWeight, cap: u128) -> Result<Vec<Tableau>> {
    let count = w.dimension();
    if count > cap {
        return Err(Error::TooLarge { count, cap });
    }
    let n = w.n;
    let lambda = w.lambda();
    let rows_used: Vec<usize> = lambda.iter().map(|&l| l as usize).filter(|&l| l > 0).collect();
    let cells: Vec<(usize, usize)> = rows_used
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    // Height of each column: entries at (r, c) are bounded by n − (h_c − 1 − r).
    let height = |c: usize| rows_used.iter().filter(|&&len| len > c).count();

    let mut grid: Vec<Vec<u32>> = rows_used.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::with_capacity(count as usize);

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        n: usize,
        height: &dyn Fn(usize) -> usize,
        shape: &HighestWeight,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            let mut content = vec![0u32; n];
            for row in grid.iter() {
                for &e in row {
                    content[e as usize - 1] += 1;
                }
            }
            out.push(Tableau {
                shape: shape.clone(),
                content,
                rows: grid.clone(),
            });
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1u32;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let hi = (n - (height(c) - 1 - r)) as u32;
        for v in lo..=hi {
            grid[r][c] = v;
            fill(idx + 1, cells, grid, n, height, shape, out);
        }
    }

    fill(0, &cells, &mut grid, n, &height, w, &mut out);
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

/// [`enumerate_tableaux_capped`] with the default cap of 10⁶.
pub fn enumerate_tableaux(w: &HighestWeight) -> Result<Vec<Tableau>> {
    enumerate_tableaux_capped(w, DEFAULT_TABLEAU_CAP)
}

/// A diagonal matrix `diag(x₁, …, x_n)` with nonzero complex entries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexDiagonal {
    entries: Vec<Complex64>,
}

impl ComplexDiagonal {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("empty diagonal".into()));
        }
        if let Some(k) = entries.iter().position(|x| x.norm() == 0.0 || !x.is_finite()) {
            return Err(Error::InvalidParameter(format!("diagonal entry {} is {}", k + 1, entries[k])));
        }
        Ok(Self { entries })
    }

    /// A point of `SL(n,ℂ)`: additionally requires `|∏ x_k − 1| ≤ tol`.
    pub fn sl(entries: Vec<Complex64>, tol: f64) -> Result<Self> {
        let d = Self::new(entries)?;
        let det: Complex64 = d.entries.iter().product();
        if (det - 1.0).norm() > tol {
            return Err(Error::Determinant(det.norm()));
        }
        Ok(d)
    }

    /// Real positive diagonal.
    pub fn real(entries: &[f64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Moduli sorted in descending order.
    pub fn sorted_moduli(&self) -> Vec<f64> {
        let mut m: Vec<f64> = self.entries.iter().map(|x| x.norm()).collect();
        m.sort_by(|a, b| b.total_cmp(a));
        m
    }
}

fn check_rank(w: &HighestWeight, d: &ComplexDiagonal) -> Result<()> {
    if w.n != d.n() {
        return Err(Error::Dimension(format!(
            "weight is for SU({}) but the diagonal has {} entries",
            w.n,
            d.n()
        )));
    }
    Ok(())
}

fn torus_eigenvalue(content: &[u32], d: &ComplexDiagonal) -> Complex64 {
    content
        .iter()
        .zip(d.entries())
        .map(|(&t, x)| x.powi(t as i32))
        .product()
}

/// Eigenvalues of `π_λ(D)` on the tableau basis, in enumeration order.
pub fn torus_action(w: &HighestWeight, d: &ComplexDiagonal) -> Result<Vec<Complex64>> {
    check_rank(w, d)?;
    Ok(enumerate_tableaux(w)?
        .iter()
        .map(|t| torus_eigenvalue(&t.content, d))
        .collect())
}

/// Diagonal of `∂π_λ(X_{jj})`: entry `i(t_j − t_n)` per tableau, `1 ≤ j ≤ n−1`.
pub fn lie_derivative_diag(w: &HighestWeight, j: usize) -> Result<Vec<Complex64>> {
    if !(1..w.n).contains(&j) {
        return Err(Error::InvalidParameter(format!("index j = {j} outside 1..{}", w.n - 1)));
    }
    Ok(enumerate_tableaux(w)?
        .iter()
        .map(|t| Complex64::new(0.0, t.content[j - 1] as f64 - t.content[w.n - 1] as f64))
        .collect())
}

/// How [`complexified_norm`] evaluates `‖π_ℂ(D)‖`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormMethod {
    /// Maximum over tableaux of `|∏ x_k^{t_k}|`.
    Brute,
    /// `∏_k (σ₁⋯σ_k)^{a_k}` with moduli sorted descending.
    Closed,
}

/// `log ‖π_λ,ℂ(D)‖`.
pub fn log_complexified_norm(w: &HighestWeight, d: &ComplexDiagonal, method: NormMethod) -> Result<f64> {
    check_rank(w, d)?;
    match method {
        NormMethod::Brute => {
            let logs: Vec<f64> = d.entries().iter().map(|x| x.norm().ln()).collect();
            Ok(enumerate_tableaux(w)?
                .iter()
                .map(|t| t.content.iter().zip(&logs).map(|(&c, l)| c as f64 * l).sum::<f64>())
                .fold(f64::NEG_INFINITY, f64::max))
        }
        NormMethod::Closed => {
            let sigma = d.sorted_moduli();
            let mut prefix = 0.0;
            let mut total = 0.0;
            for (k, &ak) in w.a.iter().enumerate() {
                prefix += sigma[k].ln();
                total += ak as f64 * prefix;
            }
            Ok(total)
        }
    }
}

/// `‖π_λ,ℂ(D)‖`.
pub fn complexified_norm(w: &HighestWeight, d: &ComplexDiagonal, method: NormMethod) -> Result<f64> {
    log_complexified_norm(w, d, method).map(f64::exp)
}

/// Pieri rule for `π_a ⊗ Λ^k`: one output per admissible `k`-subset `J`,
/// subsets visited in lexicographic order, multiplicities retained.
pub fn tensor_with_fundamental(w: &HighestWeight, k: usize) -> Result<Vec<HighestWeight>> {
    let n = w.n;
    if !(1..n).contains(&k) {
        return Err(Error::InvalidParameter(format!("fundamental index {k} outside 1..{}", n - 1)));
    }
    let mut out = Vec::new();
    for subset in k_subsets(n, k) {
        let mut in_j = vec![false; n + 1];
        for &i in &subset {
            in_j[i] = true;
        }
        let mut b = Vec::with_capacity(n - 1);
        let mut admissible = true;
        for i in 1..n {
            let ai = w.a[i - 1];
            let bi = match (in_j[i], in_j[i + 1]) {
                (false, true) => {
                    if ai == 0 {
                        admissible = false;
                        break;
                    }
                    ai - 1
                }
                (true, false) => ai + 1,
                _ => ai,
            };
            b.push(bi);
        }
        if admissible {
            out.push(HighestWeight { n, a: b });
        }
    }
    Ok(out)
}

/// `k`-element subsets of `{1, …, n}` in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Clebsch–Gordan decomposition of `π_a ⊗ π_b` on SU(2), sorted ascending.
///
/// Computed from `π_a ⊗ π_b ⊗ π_1 = π_a ⊗ (π_{b+1} ⊕ π_{b−1})` by iterating
/// the Pieri step and subtracting the previous level.
pub fn tensor_decompose_su2(a: u32, b: u32) -> Vec<u32> {
    let pieri = |m: &BTreeMap<u32, i64>| {
        let mut next = BTreeMap::new();
        for (&c, &mult) in m {
            let w = HighestWeight { n: 2, a: vec![c] };
            for out in tensor_with_fundamental(&w, 1).expect("k = 1 is valid for SU(2)") {
                *next.entry(out.a[0]).or_insert(0) += mult;
            }
        }
        next
    };
    let mut prev: BTreeMap<u32, i64> = BTreeMap::new();
    let mut cur: BTreeMap<u32, i64> = BTreeMap::from([(a, 1)]);
    for _ in 0..b {
        let mut next = pieri(&cur);
        for (c, mult) in &prev {
            *next.entry(*c).or_insert(0) -= mult;
        }
        next.retain(|_, m| *m != 0);
        prev = cur;
        cur = next;
    }
    cur.into_iter()
        .flat_map(|(c, m)| {
            assert!(m > 0, "negative multiplicity in CG recursion");
            std::iter::repeat_n(c, m as usize)
        })
        .collect()
}

/// Restriction of `π_λ` from SU(n) to SU(n−1), multiplicities retained.
///
/// Patterns `μ` interlace `λ` without constraining `μ_{n−1}`; each is then
/// shifted by `μ_{n−1}` to land in the label set of SU(n−1).
pub fn branch_to_sun1(w: &HighestWeight) -> Result<Vec<HighestWeight>> {
    let n = w.n;
    if n < 3 {
        return Err(Error::InvalidParameter("branching needs n >= 3".into()));
    }
    let lambda = w.lambda();
    let mut out = Vec::new();
    let mut mu = vec![0u32; n - 1];

    fn rec(i: usize, lambda: &[u32], mu: &mut Vec<u32>, out: &mut Vec<HighestWeight>) {
        let m = mu.len();
        if i == m {
            let shift = mu[m - 1];
            let shifted: Vec<u32> = mu.iter().map(|v| v - shift).collect();
            out.push(HighestWeight::from_lambda(&shifted).expect("interlacing pattern is a partition"));
            return;
        }
        for v in (lambda[i + 1]..=lambda[i]).rev() {
            mu[i] = v;
            rec(i + 1, lambda, mu, out);
        }
    }

    rec(0, &lambda, &mut mu, &mut out);
    Ok(out)
}

/// `χ_a(x) = Σ_{k=0}^{a} x^{a−2k}`.
pub fn su2_character(a: u32, x: Complex64) -> Complex64 {
    let mut acc = crate::numeric::NeumaierC::default();
    for k in 0..=a as i32 {
        acc.add(x.powi(a as i32 - 2 * k));
    }
    acc.value()
}
