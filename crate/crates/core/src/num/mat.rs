//! Small dense complex matrices (4x4 in all uses here).

use super::{Cplx, Ctx};
use rug::Float;

#[derive(Clone, Debug)]
pub struct CMat {
    pub n: usize,
    pub a: Vec<Cplx>,
}

impl CMat {
    pub fn zeros(ctx: &Ctx, n: usize) -> Self {
        CMat {
            n,
            a: vec![Cplx::zero(ctx); n * n],
        }
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        let mut m = CMat::zeros(ctx, n);
        for i in 0..n {
            m[(i, i)] = Cplx::one(ctx);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cplx>>) -> Self {
        let n = rows.len();
        let a = rows.into_iter().flatten().collect::<Vec<_>>();
        assert_eq!(a.len(), n * n);
        CMat { n, a }
    }

    pub fn col(&self, j: usize) -> Vec<Cplx> {
        (0..self.n).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn mul(&self, o: &CMat) -> CMat {
        assert_eq!(self.n, o.n);
        let ctx = Ctx {
            bits: self.a[0].prec(),
        };
        let mut r = CMat::zeros(&ctx, self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let aik = &self[(i, k)];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let mut t = r[(i, j)].clone();
                    t.add_mul(aik, &o[(k, j)]);
                    r[(i, j)] = t;
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[Cplx]) -> Vec<Cplx> {
        assert_eq!(self.n, v.len());
        let ctx = Ctx {
            bits: self.a[0].prec(),
        };
        (0..self.n)
            .map(|i| {
                let mut s = Cplx::zero(&ctx);
                for j in 0..self.n {
                    s.add_mul(&self[(i, j)], &v[j]);
                }
                s
            })
            .collect()
    }

    pub fn sub(&self, o: &CMat) -> CMat {
        let mut r = self.clone();
        for (x, y) in r.a.iter_mut().zip(&o.a) {
            x.sub_assign(y);
        }
        r
    }

    pub fn add(&self, o: &CMat) -> CMat {
        let mut r = self.clone();
        for (x, y) in r.a.iter_mut().zip(&o.a) {
            x.add_assign(y);
        }
        r
    }

    /// Inverse by Gauss-Jordan with partial pivoting. Returns the inverse and
    /// an estimate of the smallest pivot magnitude (conditioning signal).
    pub fn inv(&self) -> (CMat, Float) {
        let n = self.n;
        let ctx = Ctx {
            bits: self.a[0].prec(),
        };
        let mut m = self.clone();
        let mut inv = CMat::identity(&ctx, n);
        let mut min_piv = ctx.real(f64::INFINITY);
        for col in 0..n {
            let mut best = col;
            let mut best_mag = m[(col, col)].abs();
            for r in col + 1..n {
                let mag = m[(r, col)].abs();
                if mag > best_mag {
                    best = r;
                    best_mag = mag;
                }
            }
            if best != col {
                for j in 0..n {
                    m.a.swap(col * n + j, best * n + j);
                    inv.a.swap(col * n + j, best * n + j);
                }
            }
            if best_mag < min_piv {
                min_piv = best_mag.clone();
            }
            let piv = m[(col, col)].inv();
            for j in 0..n {
                m[(col, j)] = m[(col, j)].mul(&piv);
                inv[(col, j)] = inv[(col, j)].mul(&piv);
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for j in 0..n {
                    let t = m[(col, j)].mul(&f);
                    m[(r, j)].sub_assign(&t);
                    let t = inv[(col, j)].mul(&f);
                    inv[(r, j)].sub_assign(&t);
                }
            }
        }
        (inv, min_piv)
    }

    /// Max-norm of the matrix entries.
    pub fn max_norm(&self) -> Float {
        let mut m = self.a[0].abs();
        for x in &self.a[1..] {
            let v = x.abs();
            if v > m {
                m = v;
            }
        }
        m
    }

    /// Matrix power for integer exponents (negative uses the inverse).
    pub fn powi(&self, k: i64) -> CMat {
        let ctx = Ctx {
            bits: self.a[0].prec(),
        };
        let mut base = if k < 0 { self.inv().0 } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CMat::identity(&ctx, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Cplx;
    fn index(&self, (i, j): (usize, usize)) -> &Cplx {
        &self.a[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cplx {
        &mut self.a[i * self.n + j]
    }
}
