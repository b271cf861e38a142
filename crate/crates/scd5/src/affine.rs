//! Affine integer forms in the chain-family parameters.
//!
//! The chain tables are 5-vectors of affine expressions in the family
//! parameters `i, j, k, u, w`, the row indices `p, q`, and the box height
//! `n`. Encoding them with ordinary operators (`1 + I + J + 2 * K`) keeps
//! the transcribed tables legible and auditable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficient slots: `[const, i, j, k, u, w, p, q, n]`.
const SLOTS: usize = 9;

const NAMES: [&str; SLOTS] = ["", "i", "j", "k", "u", "w", "p", "q", "n"];

/// An affine form `c0 + c1*i + c2*j + c3*k + c4*u + c5*w + c6*p + c7*q + c8*n`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    coeffs: [i32; SLOTS],
}

/// Values for the variables of an [`Affine`] form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Env {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub u: i64,
    pub w: i64,
    pub p: i64,
    pub q: i64,
    pub n: i64,
}

impl Affine {
    pub const fn constant(c: i32) -> Self {
        let mut coeffs = [0i32; SLOTS];
        coeffs[0] = c;
        Affine { coeffs }
    }

    const fn var(slot: usize) -> Self {
        let mut coeffs = [0i32; SLOTS];
        coeffs[slot] = 1;
        Affine { coeffs }
    }

    pub fn eval(&self, env: &Env) -> i64 {
        let vals = [
            1,
            env.i,
            env.j,
            env.k,
            env.u,
            env.w,
            env.p,
            env.q,
            env.n,
        ];
        self.coeffs
            .iter()
            .zip(vals)
            .map(|(&c, v)| i64::from(c) * v)
            .sum()
    }
}

pub const I: Affine = Affine::var(1);
pub const J: Affine = Affine::var(2);
pub const K: Affine = Affine::var(3);
pub const U: Affine = Affine::var(4);
pub const W: Affine = Affine::var(5);
pub const P: Affine = Affine::var(6);
pub const Q: Affine = Affine::var(7);
pub const N: Affine = Affine::var(8);

impl Add for Affine {
    type Output = Affine;
    fn add(mut self, rhs: Affine) -> Affine {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl Sub for Affine {
    type Output = Affine;
    fn sub(mut self, rhs: Affine) -> Affine {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl Neg for Affine {
    type Output = Affine;
    fn neg(mut self) -> Affine {
        for a in self.coeffs.iter_mut() {
            *a = -*a;
        }
        self
    }
}

impl Add<i32> for Affine {
    type Output = Affine;
    fn add(self, rhs: i32) -> Affine {
        self + Affine::constant(rhs)
    }
}

impl Sub<i32> for Affine {
    type Output = Affine;
    fn sub(self, rhs: i32) -> Affine {
        self - Affine::constant(rhs)
    }
}

impl Add<Affine> for i32 {
    type Output = Affine;
    fn add(self, rhs: Affine) -> Affine {
        Affine::constant(self) + rhs
    }
}

impl Sub<Affine> for i32 {
    type Output = Affine;
    fn sub(self, rhs: Affine) -> Affine {
        Affine::constant(self) - rhs
    }
}

impl Mul<Affine> for i32 {
    type Output = Affine;
    fn mul(self, mut rhs: Affine) -> Affine {
        for a in rhs.coeffs.iter_mut() {
            *a *= self;
        }
        rhs
    }
}

impl fmt::Debug for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (slot, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let mag = c.unsigned_abs();
            if slot == 0 {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", NAMES[slot])?;
            } else {
                write!(f, "{mag}{}", NAMES[slot])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_combines_terms() {
        let e = 1 + I + 2 * J - K + N - 3;
        let env = Env {
            i: 4,
            j: 5,
            k: 6,
            n: 10,
            ..Env::default()
        };
        assert_eq!(e.eval(&env), 1 + 4 + 10 - 6 + 10 - 3);
    }

    #[test]
    fn negation_and_scalar_prefix() {
        let e = -1 - I - 2 * J - 2 * K + N;
        let env = Env {
            i: 1,
            j: 2,
            k: 3,
            n: 20,
            ..Env::default()
        };
        assert_eq!(e.eval(&env), -1 - 1 - 4 - 6 + 20);
        assert_eq!((-K + N + P).eval(&env), -3 + 20);
    }

    #[test]
    fn debug_rendering() {
        assert_eq!(format!("{:?}", 1 + I + 2 * J), "1 + i + 2j");
        assert_eq!(format!("{:?}", -K + N + P), "-k + p + n");
        assert_eq!(format!("{:?}", Affine::constant(0)), "0");
    }
}
