//! Bessel/Hankel functions of the first kind for real positive argument.
//!
//! `J0, J1, Y0, Y1` are computed from their ascending power series for
//! z ≤ 12 and from Hankel's asymptotic expansion for z > 12. The crossover
//! keeps both branches below ~1e−10 relative error in f64: the series loses
//! ~5 digits to cancellation by z = 12, while the asymptotic remainder is
//! of the order of its smallest term ≈ e^{−2z} ≈ 4e−11 there.

use num_complex::Complex64;

/// Euler–Mascheroni constant.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// Series/asymptotic crossover point.
const CROSSOVER: f64 = 12.0;
/// Fixed term budget for the ascending series (converged well before this
/// at z ≤ 12; the largest index with a term above 1e−18 is ~45).
const SERIES_TERMS: usize = 60;

fn j0_series(z: f64) -> f64 {
    let q = -0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=SERIES_TERMS {
        term *= q / ((k * k) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

fn j1_series(z: f64) -> f64 {
    let q = -0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=SERIES_TERMS {
        term *= q / ((k * (k + 1)) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    0.5 * z * sum
}

fn y0_series(z: f64) -> f64 {
    let q = -0.25 * z * z;
    // sum_{k>=1} (-1)^{k+1} H_k (z^2/4)^k / (k!)^2
    let mut term = 1.0; // (z^2/4)^k/(k!)^2 with alternating sign folded in via q
    let mut harmonic = 0.0;
    let mut sum = 0.0;
    for k in 1..=SERIES_TERMS {
        term *= q / ((k * k) as f64);
        harmonic += 1.0 / k as f64;
        // (-1)^{k+1} (z^2/4)^k = -term  since term carries (-1)^k
        sum -= term * harmonic;
        if term.abs() * harmonic < 1e-18 {
            break;
        }
    }
    let ln_term = ((0.5 * z).ln() + EULER_GAMMA) * j0_series(z);
    (2.0 / std::f64::consts::PI) * (ln_term + sum)
}

fn y1_series(z: f64) -> f64 {
    let q = -0.25 * z * z;
    // sum_{k>=0} (-1)^k (H_k + H_{k+1}) (z^2/4)^k / (k!(k+1)!)
    let mut term = 1.0;
    let mut h_k = 0.0;
    let mut sum = 0.0;
    for k in 0..=SERIES_TERMS {
        let h_k1 = h_k + 1.0 / (k + 1) as f64;
        sum += term * (h_k + h_k1);
        term *= q / (((k + 1) * (k + 2)) as f64);
        h_k = h_k1;
        if term.abs() * (h_k + 1.0) < 1e-18 {
            break;
        }
    }
    let pi = std::f64::consts::PI;
    (2.0 / pi) * ((0.5 * z).ln() + EULER_GAMMA) * j1_series(z) - 2.0 / (pi * z)
        - (0.5 * z / pi) * 0.5 * sum
}

/// Hankel asymptotic amplitude/phase series: returns (P, Q) for order `nu`.
fn asymptotic_pq(nu: f64, z: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut p = 0.0;
    let mut q = 0.0;
    let mut t = 1.0; // t_m, starting with t_0 = 1
    let mut prev = f64::INFINITY;
    for m in 0..25 {
        if m % 2 == 0 {
            // contributes to P with sign (-1)^{m/2}
            p += if (m / 2) % 2 == 0 { t } else { -t };
        } else {
            q += if (m / 2) % 2 == 0 { t } else { -t };
        }
        let odd = (2 * m + 1) as f64;
        let next = t * (mu - odd * odd) / ((m + 1) as f64 * 8.0 * z);
        if next.abs() >= prev {
            break; // asymptotic series started diverging
        }
        prev = next.abs();
        t = next;
        if t.abs() < 1e-18 {
            if m % 2 == 0 {
                q += if (m / 2) % 2 == 0 { t } else { -t };
            }
            break;
        }
    }
    (p, q)
}

fn bessel_asymptotic(nu: f64, z: f64) -> (f64, f64) {
    let (p, q) = asymptotic_pq(nu, z);
    let chi = z - (0.5 * nu + 0.25) * std::f64::consts::PI;
    let amp = (2.0 / (std::f64::consts::PI * z)).sqrt();
    let j = amp * (p * chi.cos() - q * chi.sin());
    let y = amp * (p * chi.sin() + q * chi.cos());
    (j, y)
}

/// Bessel function of the first kind, order 0.
pub fn bessel_j0(z: f64) -> f64 {
    assert!(z >= 0.0, "bessel_j0 requires z >= 0");
    if z <= CROSSOVER {
        j0_series(z)
    } else {
        bessel_asymptotic(0.0, z).0
    }
}

/// Bessel function of the first kind, order 1.
pub fn bessel_j1(z: f64) -> f64 {
    assert!(z >= 0.0, "bessel_j1 requires z >= 0");
    if z <= CROSSOVER {
        j1_series(z)
    } else {
        bessel_asymptotic(1.0, z).0
    }
}

/// Bessel function of the second kind, order 0.
pub fn bessel_y0(z: f64) -> f64 {
    assert!(z > 0.0, "bessel_y0 requires z > 0");
    if z <= CROSSOVER {
        y0_series(z)
    } else {
        bessel_asymptotic(0.0, z).1
    }
}

/// Bessel function of the second kind, order 1.
pub fn bessel_y1(z: f64) -> f64 {
    assert!(z > 0.0, "bessel_y1 requires z > 0");
    if z <= CROSSOVER {
        y1_series(z)
    } else {
        bessel_asymptotic(1.0, z).1
    }
}

/// Hankel function of the first kind H_n^{(1)}(z) for n = 0, 1, 2 and real
/// z > 0. Orders above 1 use the upward recurrence H_{n+1} = (2n/z)H_n − H_{n−1}.
pub fn hankel1(n: u8, z: f64) -> Complex64 {
    assert!(z > 0.0, "hankel1 requires z > 0");
    let h0 = Complex64::new(bessel_j0(z), bessel_y0(z));
    let h1 = Complex64::new(bessel_j1(z), bessel_y1(z));
    match n {
        0 => h0,
        1 => h1,
        2 => (2.0 / z) * h1 - h0,
        _ => panic!("hankel1 supports orders 0..=2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Reference values computed with an independent arbitrary-precision
    // evaluation of the defining series/continuations.
    const REFERENCE: &[(f64, f64, f64, f64, f64)] = &[
        // (z, J0, Y0, J1, Y1)
        (0.05, 0.9993750976494685, -1.9793110008172097, 0.024992188313759704, -12.789855171174972),
        (0.1, 0.99750156206604, -1.5342386513503667, 0.049937526036242, -6.458951094702027),
        (0.5, 0.938469807240813, -0.4445187335067066, 0.24226845767487387, -1.4714723926702433),
        (1.0, 0.7651976865579665, 0.08825696421567697, 0.44005058574493355, -0.7812128213002888),
        (2.0, 0.22389077914123562, 0.5103756726497451, 0.5767248077568734, -0.10703243154093756),
        (3.7, -0.3992302033711912, 0.10607431532035433, 0.05383398774546181, 0.41667437268380775),
        (5.0, -0.1775967713143383, -0.30851762524903303, -0.3275791375914653, 0.14786314339122691),
        (8.0, 0.1716508071375539, 0.22352148938756622, 0.2346363468539146, -0.15806046173124746),
        (11.0, -0.17119030040719624, -0.16884732389207938, -0.17678529895672165, 0.16370553741494265),
        (11.9, 0.02504944169958986, -0.2298332139433751, -0.22898324966192404, -0.03471149833403043),
        (12.1, 0.06966677360680752, -0.21843838055092546, -0.21574897337692486, -0.07873693145139557),
        (15.0, -0.014224472826780597, 0.20546429603891825, 0.20510403861352278, 0.021073628036873716),
        (20.0, 0.16702466434058322, 0.06264059680938369, 0.0668331241758502, -0.1655116143625212),
        (50.0, 0.055812327669252086, -0.09806499547007692, -0.09751182812517509, -0.05679566856201487),
        (120.0, 0.07182341582915616, -0.012104365410016011, -0.011805211433002331, -0.07187447320914947),
    ];

    #[test]
    fn matches_reference_to_1e10() {
        for &(z, j0, y0, j1, y1) in REFERENCE {
            assert_relative_eq!(bessel_j0(z), j0, max_relative = 1e-10, epsilon = 1e-12);
            assert_relative_eq!(bessel_y0(z), y0, max_relative = 1e-10, epsilon = 1e-12);
            assert_relative_eq!(bessel_j1(z), j1, max_relative = 1e-10, epsilon = 1e-12);
            assert_relative_eq!(bessel_y1(z), y1, max_relative = 1e-10, epsilon = 1e-12);
        }
    }

    #[test]
    fn branches_agree_at_crossover() {
        // Both evaluation routes should coincide in a window around z = 12.
        for &z in &[11.5, 12.0, 12.5] {
            let (ja, ya) = (j0_series(z), y0_series(z));
            let (jb, yb) = bessel_asymptotic(0.0, z);
            assert_relative_eq!(ja, jb, max_relative = 2e-10, epsilon = 1e-11);
            assert_relative_eq!(ya, yb, max_relative = 2e-10, epsilon = 1e-11);
            let (ja1, ya1) = (j1_series(z), y1_series(z));
            let (jb1, yb1) = bessel_asymptotic(1.0, z);
            assert_relative_eq!(ja1, jb1, max_relative = 2e-10, epsilon = 1e-11);
            assert_relative_eq!(ya1, yb1, max_relative = 2e-10, epsilon = 1e-11);
        }
    }

    #[test]
    fn wronskian_identity() {
        // J_{1}(z) Y_0(z) - J_0(z) Y_1(z) = 2/(pi z)
        for &z in &[0.3, 1.0, 4.0, 9.0, 13.0, 40.0] {
            let w = bessel_j1(z) * bessel_y0(z) - bessel_j0(z) * bessel_y1(z);
            assert_relative_eq!(w, 2.0 / (std::f64::consts::PI * z), max_relative = 1e-9);
        }
    }

    #[test]
    fn hankel_recurrence() {
        let z = 3.0;
        let h2 = hankel1(2, z);
        let expect = (2.0 / z) * hankel1(1, z) - hankel1(0, z);
        assert_relative_eq!(h2.re, expect.re, max_relative = 1e-14);
        assert_relative_eq!(h2.im, expect.im, max_relative = 1e-14);
    }
}
