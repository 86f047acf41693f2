//! Closed-form upper bounds on how many vertices a graph of maximum degree
//! Δ and diameter k can have, under various structural restrictions.
//!
//! Everything is evaluated exactly: integers are unbounded, densities are
//! rationals, and the two bounds with a square root in them are rounded up
//! through an exact integer ceiling, never through floating point. An upper
//! bound may only ever be rounded up.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("maximum degree must be at least 3, got {0}")]
    DeltaTooSmall(u64),
    #[error("maximum degree must be at least 1")]
    DeltaZero,
    #[error("diameter must be at least 1")]
    KTooSmall,
    #[error("minimum degree {min_degree} must lie between 1 and the maximum degree {delta}")]
    MinDegreeRange { min_degree: u64, delta: u64 },
    #[error("average degree {0} must be positive and at most the maximum degree")]
    AvgDegreeRange(String),
    #[error("forest count must be at least 1")]
    BTooSmall,
    #[error("separation order must be at least 1")]
    STooSmall,
    #[error("epsilon must be positive, got {0}")]
    EpsNotPositive(String),
}

/// Largest conceivable order of a graph with maximum degree `delta` and
/// diameter `k`: the ball of radius k in the degree-delta tree.
pub fn moore_bound(delta: u64, k: u32) -> Result<BigInt, BoundError> {
    if delta < 3 {
        return Err(BoundError::DeltaTooSmall(delta));
    }
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    Ok(moore_closed(delta, k))
}

/// (Δ(Δ-1)^k - 2) / (Δ-2), the closed form of 1 + Δ Σ_{i<k} (Δ-1)^i.
/// Defined for all k ≥ 0; the value at k = 0 is 1, which the separation
/// bounds rely on.
fn moore_closed(delta: u64, k: u32) -> BigInt {
    let d = BigInt::from(delta);
    let num = &d * BigInt::from(delta - 1).pow(k) - 2;
    num / (d - 2)
}

/// A graph of minimum degree δ, maximum degree Δ, and diameter k has at
/// most 2δ(Δ-1)^{k-1} + 1 vertices.
pub fn min_degree_upper(min_degree: u64, delta: u64, k: u32) -> Result<BigInt, BoundError> {
    if min_degree < 1 || min_degree > delta {
        return Err(BoundError::MinDegreeRange { min_degree, delta });
    }
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    Ok(BigInt::from(2 * min_degree) * BigInt::from(delta - 1).pow(k - 1) + 1)
}

/// Same shape with the exact average degree in place of the minimum:
/// 2d(Δ-1)^{k-1} + 1, evaluated as a rational.
pub fn avg_degree_upper(d: &BigRational, delta: u64, k: u32) -> Result<BigRational, BoundError> {
    if !d.is_positive() || *d > BigRational::from(BigInt::from(delta)) {
        return Err(BoundError::AvgDegreeRange(format_rational(d)));
    }
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    let pow = BigRational::from(BigInt::from(delta - 1).pow(k - 1));
    Ok(BigRational::from(BigInt::from(2)) * d * pow + BigRational::one())
}

/// Graphs of arboricity at most b: at most 4k(2b)^k Δ^{floor(k/2)} + 1
/// vertices.
pub fn arboricity_upper(b: u64, k: u32, delta: u64) -> Result<BigInt, BoundError> {
    if b < 1 {
        return Err(BoundError::BTooSmall);
    }
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    if delta < 1 {
        return Err(BoundError::DeltaZero);
    }
    let value = BigInt::from(4 * k as u64)
        * BigInt::from(2 * b).pow(k)
        * BigInt::from(delta).pow(k / 2)
        + 1;
    Ok(value)
}

/// Graphs all of whose subgraphs admit balanced separations of order s:
/// odd k gives 3s M(Δ, (k-1)/2) exactly; even k gives
/// ceil((3/2) sqrt(s) Δ(Δ-1)^{k/2-1}) + 3s M(Δ, k/2-1).
pub fn separation_upper(s: u64, delta: u64, k: u32) -> Result<BigInt, BoundError> {
    if s < 1 {
        return Err(BoundError::STooSmall);
    }
    if delta < 3 {
        return Err(BoundError::DeltaTooSmall(delta));
    }
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    if k % 2 == 1 {
        Ok(BigInt::from(3 * s) * moore_closed(delta, (k - 1) / 2))
    } else {
        let q = BigRational::new(
            BigInt::from(3 * delta) * BigInt::from(delta - 1).pow(k / 2 - 1),
            BigInt::from(2),
        );
        Ok(ceil_mul_sqrt(&q, s) + BigInt::from(3 * s) * moore_closed(delta, k / 2 - 1))
    }
}

/// A bound whose validity depends on explicit parameter thresholds. The
/// value is always computed; `valid` says whether the thresholds hold, and
/// `unmet` lists the ones that do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsBound {
    pub value: BigInt,
    pub valid: bool,
    pub unmet: Vec<String>,
}

/// Sharper separation-based bound with an explicit epsilon slack:
/// (3+ε)s(Δ-1)^{(k-1)/2} for odd k, needing Δ ≥ 6/ε + 2; and
/// (3/2+ε)sqrt(s)(Δ-1)^{k/2} for even k, needing Δ ≥ 3/ε + 1 and
/// Δ ≥ 9 sqrt(s)/ε + 2. Values are exact ceilings.
pub fn separation_upper_eps(
    s: u64,
    delta: u64,
    k: u32,
    eps: &BigRational,
) -> Result<EpsBound, BoundError> {
    if !eps.is_positive() {
        return Err(BoundError::EpsNotPositive(format_rational(eps)));
    }
    if s < 1 {
        return Err(BoundError::STooSmall);
    }
    if delta < 3 {
        return Err(BoundError::DeltaTooSmall(delta));
    }
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    let d1 = BigInt::from(delta - 1);
    let mut unmet = Vec::new();
    let value = if k % 2 == 1 {
        // delta >= 6/eps + 2
        let threshold = ceil_rational(&(BigRational::from(BigInt::from(6)) / eps + BigInt::from(2)));
        if BigInt::from(delta) < threshold {
            unmet.push(format!(
                "maximum degree {delta} is below 6/eps + 2, first admissible value {threshold}"
            ));
        }
        let v = (BigRational::from(BigInt::from(3)) + eps)
            * BigRational::from(BigInt::from(s))
            * BigRational::from(d1.pow((k - 1) / 2));
        ceil_rational(&v)
    } else {
        let t1 = ceil_rational(&(BigRational::from(BigInt::from(3)) / eps + BigInt::one()));
        if BigInt::from(delta) < t1 {
            unmet.push(format!(
                "maximum degree {delta} is below 3/eps + 1, first admissible value {t1}"
            ));
        }
        // delta >= 9 sqrt(s)/eps + 2, an integer delta works iff
        // delta - 2 >= ceil(9 sqrt(s)/eps)
        let t2 = ceil_mul_sqrt(&(BigRational::from(BigInt::from(9)) / eps), s) + 2;
        if BigInt::from(delta) < t2 {
            unmet.push(format!(
                "maximum degree {delta} is below 9*sqrt(s)/eps + 2, first admissible value {t2}"
            ));
        }
        let q = (BigRational::new(BigInt::from(3), BigInt::from(2)) + eps)
            * BigRational::from(d1.pow(k / 2));
        ceil_mul_sqrt(&q, s)
    };
    Ok(EpsBound { valid: unmet.is_empty(), value, unmet })
}

/// Treewidth at most t: every such graph separates with order t + 1, so
/// this is the separation bound at s = t + 1.
pub fn treewidth_upper_eps(
    t: u64,
    delta: u64,
    k: u32,
    eps: &BigRational,
) -> Result<EpsBound, BoundError> {
    separation_upper_eps(t + 1, delta, k, eps)
}

/// Euler genus at most g: treewidth is at most (2g+3)k for these graphs,
/// so this is the treewidth bound at t = (2g+3)k.
pub fn genus_upper_eps(
    genus: u64,
    delta: u64,
    k: u32,
    eps: &BigRational,
) -> Result<EpsBound, BoundError> {
    if k < 1 {
        return Err(BoundError::KTooSmall);
    }
    treewidth_upper_eps((2 * genus + 3) * k as u64, delta, k, eps)
}

/// Smallest integer c with c ≥ q sqrt(s), for q ≥ 0. Squares the
/// comparison: c ≥ q sqrt(s) iff c^2 den^2 ≥ num^2 s.
pub fn ceil_mul_sqrt(q: &BigRational, s: u64) -> BigInt {
    assert!(!q.is_negative(), "only nonnegative multipliers make sense here");
    let num = q.numer();
    let den = q.denom();
    let n = num * num * BigInt::from(s);
    let d = den * den;
    if n.is_zero() {
        return BigInt::zero();
    }
    // start at floor sqrt of n/d and walk to the exact ceiling
    let mut c = (&n / &d).sqrt();
    while &c * &c * &d < n {
        c += 1;
    }
    while c > BigInt::zero() && {
        let down = &c - 1;
        &down * &down * &d >= n
    } {
        c -= 1;
    }
    c
}

/// Smallest integer ≥ q.
pub fn ceil_rational(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

/// Accepts "7", "3/2", and decimal forms like "0.25".
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty number".to_string());
    }
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| format!("bad numerator in {text:?}"))?;
        let d: BigInt = den.trim().parse().map_err(|_| format!("bad denominator in {text:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {text:?}"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let w: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| format!("bad number {text:?}"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad number {text:?}"));
        }
        let f: BigInt = frac.parse().map_err(|_| format!("bad number {text:?}"))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let abs = BigRational::new(w.abs() * &scale + f, scale);
        return Ok(if negative { -abs } else { abs });
    }
    let n: BigInt = text.parse().map_err(|_| format!("bad number {text:?}"))?;
    Ok(BigRational::from(n))
}

/// Renders a rational as "p/q", or plain "p" when it is an integer.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// JSON-facing record of one bound evaluation.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BoundReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub value: String,
    pub valid: bool,
    pub unmet: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn moore_values() {
        assert_eq!(moore_bound(3, 1).unwrap(), int(4));
        assert_eq!(moore_bound(3, 2).unwrap(), int(10));
        assert_eq!(moore_bound(4, 3).unwrap(), int(53));
        assert_eq!(moore_bound(7, 1).unwrap(), int(8));
        assert_eq!(moore_bound(2, 2).unwrap_err(), BoundError::DeltaTooSmall(2));
        assert_eq!(moore_bound(3, 0).unwrap_err(), BoundError::KTooSmall);
    }

    #[test]
    fn moore_closed_form_matches_the_sum() {
        for delta in 3u64..12 {
            for k in 0u32..8 {
                let mut sum = BigInt::from(1);
                let mut layer = BigInt::from(delta);
                for _ in 0..k {
                    sum += &layer;
                    layer *= delta - 1;
                }
                assert_eq!(moore_closed(delta, k), sum, "delta {delta} k {k}");
            }
        }
    }

    #[test]
    fn min_degree_values() {
        assert_eq!(min_degree_upper(3, 5, 2).unwrap(), int(25));
        assert_eq!(min_degree_upper(1, 7, 1).unwrap(), int(3));
        assert_eq!(min_degree_upper(4, 4, 3).unwrap(), int(73));
        assert_eq!(
            min_degree_upper(5, 4, 2).unwrap_err(),
            BoundError::MinDegreeRange { min_degree: 5, delta: 4 }
        );
        assert_eq!(
            min_degree_upper(0, 4, 2).unwrap_err(),
            BoundError::MinDegreeRange { min_degree: 0, delta: 4 }
        );
    }

    #[test]
    fn avg_degree_values() {
        assert_eq!(avg_degree_upper(&rat("4"), 8, 3).unwrap(), rat("393"));
        assert_eq!(avg_degree_upper(&rat("3/2"), 4, 2).unwrap(), rat("10"));
        assert_eq!(avg_degree_upper(&rat("5/2"), 6, 1).unwrap(), rat("6"));
        assert!(avg_degree_upper(&rat("0"), 4, 2).is_err());
        assert!(avg_degree_upper(&rat("9/2"), 4, 2).is_err());
    }

    #[test]
    fn arboricity_upper_values() {
        assert_eq!(arboricity_upper(1, 2, 5).unwrap(), int(161));
        assert_eq!(arboricity_upper(2, 3, 6).unwrap(), int(4609));
        assert_eq!(arboricity_upper(1, 1, 9).unwrap(), int(9));
        assert_eq!(arboricity_upper(1, 1, 2).unwrap(), int(9));
        assert_eq!(arboricity_upper(0, 1, 5).unwrap_err(), BoundError::BTooSmall);
    }

    #[test]
    fn separation_values() {
        assert_eq!(separation_upper(3, 4, 3).unwrap(), int(45));
        assert_eq!(separation_upper(4, 4, 4).unwrap(), int(96));
        assert_eq!(separation_upper(5, 7, 1).unwrap(), int(15));
        // odd case stays an exact integer identity
        for s in 1u64..5 {
            for delta in 3u64..7 {
                for half in 1u32..4 {
                    let k = 2 * half + 1;
                    assert_eq!(
                        separation_upper(s, delta, k).unwrap(),
                        int(3 * s as i64) * moore_bound(delta, half).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn separation_even_rounds_up_only() {
        // s = 2: sqrt irrational, the first term of (2, 3, 2) is
        // (3/2) sqrt(2) * 3 = 6.36..., so 7 plus 3s M(3,0) = 6 gives 13
        assert_eq!(separation_upper(2, 3, 2).unwrap(), int(13));
    }

    #[test]
    fn eps_separation_values() {
        let one = rat("1");
        let r = separation_upper_eps(4, 100, 3, &one).unwrap();
        assert_eq!(r.value, int(1584));
        assert!(r.valid);
        let r = separation_upper_eps(4, 10, 3, &one).unwrap();
        assert_eq!(r.value, int(144));
        assert!(r.valid);
        let r = separation_upper_eps(4, 5, 3, &rat("0.1")).unwrap();
        assert!(!r.valid);
        assert_eq!(r.unmet.len(), 1);
        assert!(r.unmet[0].contains("62"), "threshold 6/0.1 + 2 = 62: {}", r.unmet[0]);
        // value still reported: ceil((3.1) * 4 * 4) = 50
        assert_eq!(r.value, int(50));
    }

    #[test]
    fn eps_treewidth_values() {
        let one = rat("1");
        let r = treewidth_upper_eps(2, 100, 3, &one).unwrap();
        assert_eq!(r.value, int(1188));
        assert!(r.valid);
        let r = treewidth_upper_eps(2, 100, 4, &one).unwrap();
        // (5/2) sqrt(3) * 99^2 = 42439.57..
        assert_eq!(r.value, int(42440));
        assert!(r.valid);
        let r = treewidth_upper_eps(3, 5, 1, &rat("0.5")).unwrap();
        assert_eq!(r.value, int(14));
        assert!(!r.valid);
    }

    #[test]
    fn eps_genus_values() {
        let one = rat("1");
        let r = genus_upper_eps(0, 100, 3, &one).unwrap();
        assert_eq!(r.value, int(3960));
        assert!(r.valid);
        // (5/2) sqrt(29) * 9801 = 131950.0007.., a near miss that floating
        // point would round the wrong way
        let r = genus_upper_eps(2, 100, 4, &one).unwrap();
        assert_eq!(r.value, int(131951));
        let r = genus_upper_eps(1, 9, 1, &one).unwrap();
        assert_eq!(r.value, int(24));
        assert!(r.valid);
    }

    #[test]
    fn eps_must_be_positive() {
        assert!(matches!(
            separation_upper_eps(4, 10, 3, &rat("0")),
            Err(BoundError::EpsNotPositive(_))
        ));
        assert!(matches!(
            separation_upper_eps(4, 10, 3, &rat("-1/2")),
            Err(BoundError::EpsNotPositive(_))
        ));
    }

    #[test]
    fn exact_sqrt_ceiling() {
        // perfect squares stay exact
        assert_eq!(ceil_mul_sqrt(&rat("3/2"), 4), int(3));
        assert_eq!(ceil_mul_sqrt(&rat("1"), 9), int(3));
        assert_eq!(ceil_mul_sqrt(&rat("0"), 7), int(0));
        // sqrt(2) = 1.414..: ceil(5 sqrt 2) = 8, ceil((7/5) sqrt 2) = 2
        assert_eq!(ceil_mul_sqrt(&rat("5"), 2), int(8));
        assert_eq!(ceil_mul_sqrt(&rat("7/5"), 2), int(2));
        // huge values stay exact: ceil(10^15 sqrt(2))
        let big = ceil_mul_sqrt(&BigRational::from(BigInt::from(10u64.pow(15))), 2);
        assert_eq!(big, "1414213562373096".parse::<BigInt>().unwrap());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(rat("7"), BigRational::from(int(7)));
        assert_eq!(rat("3/2"), BigRational::new(int(3), int(2)));
        assert_eq!(rat("0.25"), BigRational::new(int(1), int(4)));
        assert_eq!(rat("2.5"), BigRational::new(int(5), int(2)));
        assert_eq!(rat("-0.5"), BigRational::new(int(-1), int(2)));
        assert_eq!(rat(" 10 "), BigRational::from(int(10)));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&rat("10/4")), "5/2");
        assert_eq!(format_rational(&rat("8/4")), "2");
    }

    #[test]
    fn monotone_in_every_parameter() {
        let grid_delta = [3u64, 4, 5, 8];
        let grid_k = [1u32, 2, 3, 4, 5];
        for w in grid_delta.windows(2) {
            for &k in &grid_k {
                assert!(moore_bound(w[0], k).unwrap() <= moore_bound(w[1], k).unwrap());
                assert!(
                    min_degree_upper(2, w[0], k).unwrap() <= min_degree_upper(2, w[1], k).unwrap()
                );
                assert!(
                    arboricity_upper(2, k, w[0]).unwrap() <= arboricity_upper(2, k, w[1]).unwrap()
                );
                assert!(
                    separation_upper(3, w[0], k).unwrap() <= separation_upper(3, w[1], k).unwrap()
                );
            }
        }
        for &delta in &grid_delta {
            for w in grid_k.windows(2) {
                assert!(moore_bound(delta, w[0]).unwrap() <= moore_bound(delta, w[1]).unwrap());
            }
            for s in 1u64..4 {
                assert!(
                    separation_upper(s, delta, 3).unwrap() <= separation_upper(s + 1, delta, 3).unwrap()
                );
            }
        }
        // the average-degree bound dominates the minimum-degree bound
        for &delta in &grid_delta {
            for &k in &grid_k {
                for min_degree in 1..=delta {
                    let lhs = BigRational::from(min_degree_upper(min_degree, delta, k).unwrap());
                    let d = BigRational::new(BigInt::from(2 * min_degree + 1), BigInt::from(2));
                    if d <= BigRational::from(BigInt::from(delta)) {
                        assert!(lhs <= avg_degree_upper(&d, delta, k).unwrap());
                    }
                }
            }
        }
    }
}
