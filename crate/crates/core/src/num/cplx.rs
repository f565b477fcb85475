//! Complex numbers over multiprecision floats.
//!
//! A thin pair type rather than MPC bindings: the hot paths here are series
//! recurrences and 4x4 matrix products, which only need ring operations plus
//! the occasional exp/log/sqrt, all expressible through `rug::Float`.

use rug::ops::{CompleteRound, Pow};
use rug::Float;

use super::Ctx;

#[derive(Clone, PartialEq)]
pub struct Cplx {
    pub re: Float,
    pub im: Float,
}

impl Cplx {
    pub fn new(re: Float, im: Float) -> Self {
        Cplx { re, im }
    }

    pub fn zero(ctx: &Ctx) -> Self {
        Cplx::new(ctx.zero(), ctx.zero())
    }

    pub fn one(ctx: &Ctx) -> Self {
        Cplx::new(ctx.one(), ctx.zero())
    }

    pub fn i(ctx: &Ctx) -> Self {
        Cplx::new(ctx.zero(), ctx.one())
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        Cplx { re, im }
    }

    pub fn from_f64(ctx: &Ctx, re: f64, im: f64) -> Self {
        Cplx::new(ctx.real(re), ctx.real(im))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cplx::new(self.re.clone(), (-&self.im).complete(self.im.prec()))
    }

    pub fn neg(&self) -> Self {
        Cplx::new(
            (-&self.re).complete(self.re.prec()),
            (-&self.im).complete(self.im.prec()),
        )
    }

    pub fn add(&self, o: &Cplx) -> Self {
        let p = self.prec().max(o.prec());
        Cplx::new((&self.re + &o.re).complete(p), (&self.im + &o.im).complete(p))
    }

    pub fn sub(&self, o: &Cplx) -> Self {
        let p = self.prec().max(o.prec());
        Cplx::new((&self.re - &o.re).complete(p), (&self.im - &o.im).complete(p))
    }

    pub fn mul(&self, o: &Cplx) -> Self {
        let p = self.prec().max(o.prec());
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Cplx::new(re, im)
    }

    pub fn mul_real(&self, r: &Float) -> Self {
        let p = self.prec();
        Cplx::new((&self.re * r).complete(p), (&self.im * r).complete(p))
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        let p = self.prec();
        Cplx::new((&self.re * k).complete(p), (&self.im * k).complete(p))
    }

    /// self += a * b, in place.
    pub fn add_mul(&mut self, a: &Cplx, b: &Cplx) {
        let p = self.prec();
        self.re += Float::with_val(p, &a.re * &b.re);
        self.re -= Float::with_val(p, &a.im * &b.im);
        self.im += Float::with_val(p, &a.re * &b.im);
        self.im += Float::with_val(p, &a.im * &b.re);
    }

    /// self -= a * b, in place.
    pub fn sub_mul(&mut self, a: &Cplx, b: &Cplx) {
        let p = self.prec();
        self.re -= Float::with_val(p, &a.re * &b.re);
        self.re += Float::with_val(p, &a.im * &b.im);
        self.im -= Float::with_val(p, &a.re * &b.im);
        self.im -= Float::with_val(p, &a.im * &b.re);
    }

    pub fn add_assign(&mut self, o: &Cplx) {
        self.re += &o.re;
        self.im += &o.im;
    }

    pub fn sub_assign(&mut self, o: &Cplx) {
        self.re -= &o.re;
        self.im -= &o.im;
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.clone().square() + self.im.clone().square())
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    pub fn arg(&self) -> Float {
        self.im.clone().atan2(&self.re)
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        let p = self.prec();
        Cplx::new(
            Float::with_val(p, &self.re / &n),
            -Float::with_val(p, &self.im / &n),
        )
    }

    pub fn div(&self, o: &Cplx) -> Self {
        self.mul(&o.inv())
    }

    /// exp(self) via exp(re)*(cos(im) + i sin(im)).
    pub fn exp(&self) -> Self {
        let r = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(self.prec()));
        Cplx::new(Float::with_val(self.prec(), &r * &c), r * s)
    }

    /// Principal branch logarithm: ln|z| + i arg(z).
    pub fn ln(&self) -> Self {
        Cplx::new(self.norm_sqr().ln() / 2u32, self.arg())
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        let r = self.abs();
        let half = Float::with_val(p, 0.5f64);
        let sr = r.sqrt();
        let th = self.arg() * &half;
        let (s, c) = th.sin_cos(Float::new(p));
        Cplx::new(Float::with_val(p, &sr * &c), sr * s)
    }

    pub fn powi(&self, n: i64) -> Self {
        let ctx = Ctx { bits: self.prec() };
        if n == 0 {
            return Cplx::one(&ctx);
        }
        let mut base = if n < 0 { self.inv() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Cplx::one(&ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Exponential of a purely imaginary angle, e^{i theta}.
    pub fn cis(ctx: &Ctx, theta: &Float) -> Self {
        let (s, c) = theta.clone().sin_cos(Float::new(ctx.bits));
        Cplx::new(c, s)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Round both parts to the context precision implied by `ctx`.
    pub fn with_ctx(&self, ctx: &Ctx) -> Self {
        Cplx::new(
            Float::with_val(ctx.bits, &self.re),
            Float::with_val(ctx.bits, &self.im),
        )
    }

    /// Raise a positive real to an integer power at the value's precision.
    pub fn real_powi(x: &Float, n: i32) -> Float {
        x.clone().pow(n)
    }
}

impl std::fmt::Debug for Cplx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:.20e} + {:.20e}i)", self.re.to_f64(), self.im.to_f64())
    }
}

impl std::fmt::Display for Cplx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}
