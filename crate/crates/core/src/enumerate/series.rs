//! Truncated formal power series with exact integer coefficients.
//!
//! Every series carries the number of coefficients it knows; operations
//! combining two series keep the smaller order.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<i128>,
}

impl Series {
    /// Series known up to (not including) `x^order`, from the given leading coefficients.
    pub fn new(mut coeffs: Vec<i128>, order: usize) -> Self {
        coeffs.resize(order, 0);
        Series { coeffs }
    }

    pub fn constant(c: i128, order: usize) -> Self {
        Series::new(vec![c], order)
    }

    /// `x^j`.
    pub fn monomial(j: usize, order: usize) -> Self {
        let mut c = vec![0; order];
        if j < order {
            c[j] = 1;
        }
        Series { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> i128 {
        self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Catalan generating function `C(x)`, built from `C_{n+1} = sum C_i C_{n-i}`.
    pub fn catalan(order: usize) -> Result<Self> {
        let mut c: Vec<i128> = Vec::with_capacity(order);
        for n in 0..order {
            if n == 0 {
                c.push(1);
                continue;
            }
            let mut s: i128 = 0;
            for i in 0..n {
                s = c[i]
                    .checked_mul(c[n - 1 - i])
                    .and_then(|t| s.checked_add(t))
                    .ok_or(Error::Overflow("Catalan series"))?;
            }
            c.push(s);
        }
        Ok(Series { coeffs: c })
    }

    /// `1 / (1 - a x)`.
    pub fn geometric(a: i128, order: usize) -> Result<Self> {
        let mut c = Vec::with_capacity(order);
        let mut cur: i128 = 1;
        for i in 0..order {
            c.push(cur);
            if i + 1 < order {
                cur = cur.checked_mul(a).ok_or(Error::Overflow("geometric series"))?;
            }
        }
        Ok(Series { coeffs: c })
    }

    pub fn scale(&self, a: i128) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(a).ok_or(Error::Overflow("series scaling")))
            .collect::<Result<_>>()?;
        Ok(Series { coeffs })
    }

    /// Multiply by `x^j`, keeping the order.
    pub fn shift(&self, j: usize) -> Self {
        let mut c = vec![0; self.order()];
        if j < c.len() {
            let m = c.len() - j;
            c[j..].copy_from_slice(&self.coeffs[..m]);
        }
        Series { coeffs: c }
    }

    pub fn try_add(&self, o: &Series) -> Result<Self> {
        let m = self.order().min(o.order());
        let coeffs = (0..m)
            .map(|i| {
                self.coeffs[i]
                    .checked_add(o.coeffs[i])
                    .ok_or(Error::Overflow("series sum"))
            })
            .collect::<Result<_>>()?;
        Ok(Series { coeffs })
    }

    pub fn try_sub(&self, o: &Series) -> Result<Self> {
        self.try_add(&o.scale(-1)?)
    }

    pub fn try_mul(&self, o: &Series) -> Result<Self> {
        let m = self.order().min(o.order());
        let mut c = vec![0i128; m];
        for (i, &a) in self.coeffs.iter().enumerate().take(m) {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate().take(m - i) {
                c[i + j] = a
                    .checked_mul(b)
                    .and_then(|t| c[i + j].checked_add(t))
                    .ok_or(Error::Overflow("series product"))?;
            }
        }
        Ok(Series { coeffs: c })
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        self.try_add(o).expect("series coefficient overflow")
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        self.try_sub(o).expect("series coefficient overflow")
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        self.try_mul(o).expect("series coefficient overflow")
    }
}

/// `(C(x) - 1)(C(x)^2 - 2C(x) + 2)`, whose `x^n` coefficient is `s_n^1(1342)`.
pub fn single_hole_1342(order: usize) -> Result<Series> {
    let c = Series::catalan(order)?;
    let one = Series::constant(1, order);
    let two = Series::constant(2, order);
    let a = c.try_sub(&one)?;
    let b = c.try_mul(&c)?.try_sub(&c.scale(2)?)?.try_add(&two)?;
    a.try_mul(&b)
}

/// `2C(x) - x/(1-2x) - 2`, whose `x^n` coefficient is `s_n^1(2413)`.
pub fn single_hole_2413(order: usize) -> Result<Series> {
    let c = Series::catalan(order)?;
    let g = Series::geometric(2, order)?.shift(1);
    c.scale(2)?.try_sub(&g)?.try_sub(&Series::constant(2, order))
}
