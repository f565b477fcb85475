//! Dense univariate polynomials over exact rationals and over complex floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Cplx, Ctx};

/// Polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct RatPoly {
    pub c: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { c: vec![] }
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        RatPoly { c }
    }

    pub fn constant(v: BigRational) -> Self {
        RatPoly::from_coeffs(vec![v])
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.c.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &RatPoly) -> RatPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) + o.coeff(i));
        }
        RatPoly::from_coeffs(c)
    }

    pub fn scale(&self, s: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.c.iter().map(|x| x * s).collect())
    }

    pub fn mul(&self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.c.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::from_coeffs(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, a)| a * BigRational::from_integer(BigInt::from(i as i64 + 1)))
                .collect(),
        )
    }

    /// Taylor shift: p(x + a) computed exactly by repeated synthetic division.
    pub fn shift(&self, a: &BigRational) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let n = self.c.len();
        let mut work = self.c.clone();
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            // divide work by (x - a): remainder is next output coefficient
            let mut rem = BigRational::zero();
            for k in (0..work.len()).rev() {
                let t = work[k].clone() + &rem * a;
                rem = t.clone();
                work[k] = t;
            }
            out.push(work.remove(0));
        }
        RatPoly::from_coeffs(out)
    }

    /// Exact division by (x - r); panics if r is not a root.
    pub fn deflate(&self, r: &BigRational) -> RatPoly {
        let mut q = vec![BigRational::zero(); self.c.len().saturating_sub(1)];
        let mut carry = BigRational::zero();
        for k in (1..self.c.len()).rev() {
            carry = self.c[k].clone() + &carry * r;
            q[k - 1] = carry.clone();
        }
        let rem = self.c[0].clone() + carry * r;
        assert!(rem.is_zero(), "deflate: not a root");
        RatPoly::from_coeffs(q)
    }

    /// Clear denominators and content: primitive integer polynomial.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        use num_integer::Integer as _;
        let mut den = BigInt::one();
        for a in &self.c {
            den = den.lcm(a.denom());
        }
        let ints: Vec<BigInt> = self.c.iter().map(|a| (a * BigRational::from_integer(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|v| v / &g).collect()
    }

    pub fn to_cpoly(&self, ctx: &Ctx) -> CPoly {
        CPoly {
            c: self
                .c
                .iter()
                .map(|a| Cplx::from_real(ctx.from_rational(a)))
                .collect(),
        }
    }
}

/// Polynomial with complex float coefficients, lowest degree first.
#[derive(Clone, Debug)]
pub struct CPoly {
    pub c: Vec<Cplx>,
}

impl CPoly {
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &Cplx) -> Cplx {
        let ctx = Ctx { bits: x.prec() };
        let mut acc = Cplx::zero(&ctx);
        for a in self.c.iter().rev() {
            acc = acc.mul(x);
            acc.add_assign(a);
        }
        acc
    }

    pub fn derivative(&self) -> CPoly {
        if self.c.len() <= 1 {
            return CPoly { c: vec![] };
        }
        CPoly {
            c: self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, a)| a.mul_i64(i as i64 + 1))
                .collect(),
        }
    }

    /// p(x + a) by Horner-style synthetic division at complex a.
    pub fn shift(&self, a: &Cplx) -> CPoly {
        if self.c.is_empty() {
            return self.clone();
        }
        let n = self.c.len();
        let mut work = self.c.clone();
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let ctx = Ctx {
                bits: self.c[0].prec(),
            };
            let mut rem = Cplx::zero(&ctx);
            for k in (0..work.len()).rev() {
                let mut t = work[k].clone();
                t.add_mul(&rem, a);
                rem = t.clone();
                work[k] = t;
            }
            out.push(work.remove(0));
        }
        CPoly { c: out }
    }

    /// Deflate by a numeric root (synthetic division, remainder dropped).
    pub fn deflate(&self, r: &Cplx) -> CPoly {
        if self.c.len() <= 1 {
            return CPoly { c: vec![] };
        }
        let mut q = vec![Cplx::zero(&Ctx { bits: r.prec() }); self.c.len() - 1];
        let mut carry = Cplx::zero(&Ctx { bits: r.prec() });
        for k in (1..self.c.len()).rev() {
            let mut t = self.c[k].clone();
            t.add_mul(&carry, r);
            carry = t.clone();
            q[k - 1] = t;
        }
        CPoly { c: q }
    }
}

/// Falling-factorial polynomial x(x-1)...(x-j+1) as exact coefficients.
pub fn falling_factorial(j: usize) -> RatPoly {
    let mut p = RatPoly::constant(BigRational::one());
    for m in 0..j {
        let lin = RatPoly::from_coeffs(vec![
            BigRational::from_integer(BigInt::from(-(m as i64))),
            BigRational::one(),
        ]);
        p = p.mul(&lin);
    }
    p
}

/// Stirling numbers of the second kind S(n, k) for n <= 4 are all the
/// conversion needs, but the triangle is cheap to build for any n.
pub fn stirling2(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::one();
    for i in 1..=n {
        for k in 1..=i {
            let t = &s[i - 1][k] * BigInt::from(k as i64) + &s[i - 1][k - 1];
            s[i][k] = t;
        }
    }
    s
}
