//! Exact-rational helpers: decimal parsing and continued-fraction
//! reconstruction of rationals from float approximations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rug::Float;

/// Parse a plain decimal string ("-1/81", "0.125", "3") into an exact rational.
pub fn rat_from_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let neg = s.starts_with('-');
    let body = s.trim_start_matches(['-', '+']);
    let (int_part, frac_part) = match body.split_once('.') {
        Some((a, b)) => (a, b),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits = format!("{}{}", int_part, frac_part);
    let n: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let d = BigInt::from(10u32).pow(frac_part.len() as u32);
    let mut r = BigRational::new(n, d);
    if neg {
        r = -r;
    }
    Some(r)
}

/// Reconstruct a rational p/q with |q| <= max_den from a float approximation,
/// requiring the reconstruction to match x to within `tol`.
pub fn rat_reconstruct(x: &Float, max_den: &BigInt, tol: &Float) -> Option<BigRational> {
    // continued fraction on a high-precision decimal rendering
    let prec_digits = (x.prec() as f64 / 3.3219) as usize;
    let s = format!("{:.*e}", prec_digits.saturating_sub(2), x);
    let approx = parse_float_decimal(&s)?;
    let mut a = approx.clone();
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (a.to_integer(), BigInt::one());
    let mut frac = &a - BigRational::from_integer(p1.clone());
    if frac.is_negative() {
        frac += BigRational::one();
        p1 -= 1;
    }
    for _ in 0..200 {
        let cand = BigRational::new(p1.clone(), q1.clone());
        let err = (&cand - &approx).abs();
        let errf = Float::with_val(x.prec(), Float::parse(format!("{}", err.numer())).unwrap())
            / Float::with_val(x.prec(), Float::parse(format!("{}", err.denom())).unwrap());
        if q1.magnitude() <= max_den.magnitude() && errf < *tol {
            return Some(cand);
        }
        if frac.is_zero() || &q1 > max_den {
            break;
        }
        a = frac.recip();
        let ai = a.to_integer();
        frac = &a - BigRational::from_integer(ai.clone());
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    None
}

fn parse_float_decimal(s: &str) -> Option<BigRational> {
    // format "d.ddddde<exp>" or plain
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let base = rat_from_decimal(mant)?;
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut r = base;
    if exp >= 0 {
        for _ in 0..exp {
            r *= &ten;
        }
    } else {
        for _ in 0..(-exp) {
            r /= &ten;
        }
    }
    Some(r)
}
