//! Super linear algebra over exact rationals: parity formats, supermatrices,
//! and the sign-rule operations every other module is built on.

mod qmat;
mod sparse;
mod super_matrix;

pub use qmat::{QMat, RrefSieve, Solver};
pub use sparse::{sparse_kernel, sparse_rank, SparseVec};
pub use super_matrix::SuperMatrix;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Add;

/// Z/2 parity of a homogeneous element.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn from_usize(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The sign (-1)^{pq} of the Sign Rule.
    pub fn sign_with(self, other: Parity) -> i32 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.is_odd() { '1' } else { '0' })
    }
}

/// The ordered parity sequence of a homogeneous basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Format(pub Vec<Parity>);

impl Format {
    /// Standard format: all even basis vectors before all odd ones.
    pub fn standard(even: usize, odd: usize) -> Format {
        let mut v = vec![Parity::Even; even];
        v.extend(vec![Parity::Odd; odd]);
        Format(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.0[i]
    }

    /// (dim even, dim odd); independent of basis order.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.0.iter().filter(|p| p.is_odd()).count();
        (self.0.len() - odd, odd)
    }

    pub fn flip(&self) -> Format {
        Format(self.0.iter().map(|p| p.flip()).collect())
    }

    pub fn concat(&self, other: &Format) -> Format {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Format(v)
    }

    pub fn parse(s: &str) -> Result<Format> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(Parity::Even),
                '1' => Ok(Parity::Odd),
                _ => Err(Error::Parse(format!("bad parity char {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Format)
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A finite-dimensional superspace presented by a basis format.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperSpace {
    pub format: Format,
}

impl SuperSpace {
    pub fn new(format: Format) -> SuperSpace {
        SuperSpace { format }
    }

    pub fn standard(even: usize, odd: usize) -> SuperSpace {
        SuperSpace::new(Format::standard(even, odd))
    }

    pub fn dim(&self) -> usize {
        self.format.len()
    }

    pub fn sdim(&self) -> (usize, usize) {
        self.format.sdim()
    }

    /// Parity shift: same space, every parity flipped.
    pub fn pi(&self) -> SuperSpace {
        SuperSpace::new(self.format.flip())
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.sdim();
        write!(f, "{p}|{q}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_arithmetic() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Even + Parity::Odd, Parity::Odd);
        assert_eq!(Parity::Odd.sign_with(Parity::Odd), -1);
        assert_eq!(Parity::Odd.sign_with(Parity::Even), 1);
    }

    #[test]
    fn format_sdim_and_serialization() {
        let f = Format::standard(3, 2);
        assert_eq!(f.sdim(), (3, 2));
        assert_eq!(f.to_string(), "00011");
        assert_eq!(Format::parse("00011").unwrap(), f);
        assert_eq!(f.flip().sdim(), (2, 3));
    }

    #[test]
    fn pi_is_involutive_on_spaces() {
        let v = SuperSpace::standard(3, 2);
        assert_eq!(v.pi().sdim(), (2, 3));
        assert_eq!(v.pi().pi(), v);
    }
}
