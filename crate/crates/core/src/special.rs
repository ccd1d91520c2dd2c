//! Polylogarithms of order 2 and 3 on `[0, 1]` and the Lifshitz kernel `h(q)`.

use std::f64::consts::PI;

use crate::error::{check_non_negative, CasimirError, Result};

/// Apéry's constant ζ(3).
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

const ZETA2: f64 = PI * PI / 6.0;

/// Bernoulli numbers B₂, B₄, …, B₃₀.
const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// ζ(−m) for m ≥ 0, or `None` once the table is exhausted.
fn zeta_non_positive(m: usize) -> Option<f64> {
    match m {
        0 => Some(-0.5),
        m if m % 2 == 0 => Some(0.0),
        m => {
            let j = (m + 1) / 2;
            BERNOULLI_EVEN
                .get(j - 1)
                .map(|b| -b / (m as f64 + 1.0))
        }
    }
}

/// `Liₙ(z)` for `n ∈ {2, 3}` and `0 ≤ z ≤ 1`.
///
/// Uses the defining series for `z ≤ 1/2` and the expansion in `ln z` above
/// that, so the cost stays bounded as `z → 1`.
pub fn polylog(n: u32, z: f64) -> Result<f64> {
    if n != 2 && n != 3 {
        return Err(CasimirError::Domain {
            name: "n",
            value: n as f64,
            reason: "only orders 2 and 3 are supported",
        });
    }
    if !(0.0..=1.0).contains(&z) {
        return Err(CasimirError::Domain {
            name: "z",
            value: z,
            reason: "must lie in [0, 1]",
        });
    }
    if z <= 0.5 {
        Ok(direct_series(n, z))
    } else {
        Ok(log_expansion(n, z.ln()))
    }
}

/// `Liₙ(e^μ)` for `μ ≤ 0`, avoiding the round trip through `z = e^μ` near 1.
fn polylog_exp(n: u32, mu: f64) -> f64 {
    debug_assert!(mu <= 0.0);
    if mu < -std::f64::consts::LN_2 {
        direct_series(n, mu.exp())
    } else {
        log_expansion(n, mu)
    }
}

fn direct_series(n: u32, z: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0;
    for k in 1..200u32 {
        power *= z;
        let term = power / f64::from(k).powi(n as i32);
        sum += term;
        if term <= f64::EPSILON * 0.1 * sum {
            break;
        }
    }
    sum
}

/// Expansion of `Liₙ(e^μ)` about `μ = 0`:
///
/// `Liₙ(e^μ) = μⁿ⁻¹/(n−1)! (Hₙ₋₁ − ln(−μ)) + Σ_{k ≠ n−1} ζ(n − k) μᵏ/k!`
///
/// convergent for `|μ| < 2π`; callers keep `|μ| ≤ ln 2`.
fn log_expansion(n: u32, mu: f64) -> f64 {
    let log_term = if mu == 0.0 { 0.0 } else { (-mu).ln() };
    let (head, harmonic) = match n {
        2 => (ZETA2, 1.0),
        _ => (ZETA3 + ZETA2 * mu, 1.5),
    };
    let n = n as usize;
    // μ^{n−1}/(n−1)!
    let lead = if n == 2 { mu } else { mu * mu / 2.0 };
    let mut sum = head + lead * (harmonic - log_term);

    // k ≥ n: μᵏ/k! · ζ(n − k)
    let mut power = lead * mu / n as f64;
    let mut k = n;
    loop {
        let Some(zeta) = zeta_non_positive(k - n) else {
            break;
        };
        let term = zeta * power;
        sum += term;
        if zeta != 0.0 && term.abs() <= 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        k += 1;
        power *= mu / k as f64;
    }
    sum
}

/// Lifshitz kernel
/// `h(q) = ¼ Li₃(e^{−2q}) + (q/2) Li₂(e^{−2q}) − (q²/2) ln(1 − e^{−2q})`.
///
/// Equivalently `h(q) = ∫_q^∞ t²/(e^{2t} − 1) dt`, so `h(0) = ζ(3)/4` and
/// `∫₀^∞ h = π⁴/240`. Callers pass `|q|`.
pub fn kernel_h(q: f64) -> Result<f64> {
    check_non_negative("q", q)?;
    Ok(kernel_h_unchecked(q))
}

/// As [`kernel_h`], but accepts `q = +∞` (returning 0) and skips validation.
pub(crate) fn kernel_h_unchecked(q: f64) -> f64 {
    if q == 0.0 {
        return ZETA3 / 4.0;
    }
    if q.is_infinite() {
        return 0.0;
    }
    let mu = -2.0 * q;
    let li3 = polylog_exp(3, mu);
    let li2 = polylog_exp(2, mu);
    let log_one_minus = if q < 1e-4 {
        // ln(1 − e^{−2q}) = ln(2q) − q + q²/6 + O(q⁴)
        (2.0 * q).ln() - q + q * q / 6.0
    } else if mu > -std::f64::consts::LN_2 {
        (-(mu.exp_m1())).ln()
    } else {
        (-mu.exp()).ln_1p()
    };
    0.25 * li3 + 0.5 * q * li2 - 0.5 * q * q * log_one_minus
}

/// A sample `(q, h(q))` of the Lifshitz kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub q: f64,
    pub h: f64,
}

impl KernelValue {
    pub fn at(q: f64) -> Result<Self> {
        Ok(Self {
            q,
            h: kernel_h(q)?,
        })
    }
}
