//! Square supermatrices and the sign-rule operations on them.

use super::{Format, Parity, QMat};
use crate::error::{Error, Result};
use crate::rat::{rzero, Rat};
use num_traits::{One, Zero};

/// A square matrix in a fixed parity format. The entry at (i, j) carries
/// parity p_i + p_j; a matrix is homogeneous of parity r when every nonzero
/// entry has p_i + p_j = r.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperMatrix {
    pub format: Format,
    entries: Vec<Rat>,
}

impl SuperMatrix {
    pub fn zeros(format: Format) -> SuperMatrix {
        let n = format.len();
        SuperMatrix {
            format,
            entries: vec![rzero(); n * n],
        }
    }

    pub fn identity(format: Format) -> SuperMatrix {
        let n = format.len();
        let mut m = SuperMatrix::zeros(format);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Matrix unit E_ij, of parity p_i + p_j.
    pub fn unit(format: Format, i: usize, j: usize) -> SuperMatrix {
        let mut m = SuperMatrix::zeros(format);
        m.set(i, j, Rat::one());
        m
    }

    pub fn from_qmat(format: Format, m: &QMat) -> SuperMatrix {
        assert_eq!(m.rows, format.len());
        assert_eq!(m.cols, format.len());
        let mut s = SuperMatrix::zeros(format);
        for i in 0..m.rows {
            for j in 0..m.cols {
                s.set(i, j, m[(i, j)].clone());
            }
        }
        s
    }

    pub fn to_qmat(&self) -> QMat {
        let n = self.dim();
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.entry(i, j).clone();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.format.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        let n = self.dim();
        self.entries[i * n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn entry_parity(&self, i: usize, j: usize) -> Parity {
        self.format.parity(i) + self.format.parity(j)
    }

    /// Some(p) when all nonzero entries have parity p; None for the zero
    /// matrix (homogeneous of either parity); error when mixed.
    pub fn homogeneous_parity(&self) -> Result<Option<Parity>> {
        let mut seen: Option<Parity> = None;
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if !self.entry(i, j).is_zero() {
                    let p = self.entry_parity(i, j);
                    match seen {
                        None => seen = Some(p),
                        Some(q) if q != p => {
                            return Err(Error::NotHomogeneous(format!(
                                "entries at mixed parities (first clash at ({i},{j}))"
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(seen)
    }

    pub fn add(&self, other: &SuperMatrix) -> SuperMatrix {
        assert_eq!(self.format, other.format);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &SuperMatrix) -> SuperMatrix {
        assert_eq!(self.format, other.format);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a -= b;
        }
        out
    }

    pub fn neg(&self) -> SuperMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = -a.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> SuperMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn mul(&self, other: &SuperMatrix) -> SuperMatrix {
        assert_eq!(self.format, other.format, "format mismatch in mul");
        let n = self.dim();
        let mut out = SuperMatrix::zeros(self.format.clone());
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.entry(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn require_same_format(&self, other: &SuperMatrix) -> Result<()> {
        if self.format != other.format {
            return Err(Error::FormatMismatch(format!(
                "{} vs {}",
                self.format, other.format
            )));
        }
        Ok(())
    }

    /// [X, Y] = XY - (-1)^{p(X)p(Y)} YX on homogeneous matrices.
    pub fn supercommutator(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        self.require_same_format(other)?;
        let pa = self.homogeneous_parity()?.unwrap_or(Parity::Even);
        let pb = other.homogeneous_parity()?.unwrap_or(Parity::Even);
        let xy = self.mul(other);
        let yx = other.mul(self);
        Ok(if pa.sign_with(pb) < 0 {
            xy.add(&yx)
        } else {
            xy.sub(&yx)
        })
    }

    /// str A = sum_i (-1)^{p_i} A_ii.
    pub fn supertrace(&self) -> Rat {
        let mut s = rzero();
        for i in 0..self.dim() {
            if self.format.parity(i).is_odd() {
                s -= self.entry(i, i);
            } else {
                s += self.entry(i, i);
            }
        }
        s
    }

    /// (A^st)_{ij} = (-1)^{(p_i+p_j)(p_i+p(A))} A_{ji} on homogeneous matrices.
    pub fn supertranspose(&self) -> Result<SuperMatrix> {
        let pa = self.homogeneous_parity()?.unwrap_or(Parity::Even);
        let n = self.dim();
        let mut out = SuperMatrix::zeros(self.format.clone());
        for i in 0..n {
            for j in 0..n {
                let v = self.entry(j, i);
                if v.is_zero() {
                    continue;
                }
                let pi = self.format.parity(i);
                let pj = self.format.parity(j);
                let sign = (pi + pj).sign_with(pi + pa);
                out.set(i, j, if sign < 0 { -v.clone() } else { v.clone() });
            }
        }
        Ok(out)
    }

    /// Parity shift: format flipped, entries untouched.
    pub fn pi(&self) -> SuperMatrix {
        SuperMatrix {
            format: self.format.flip(),
            entries: self.entries.clone(),
        }
    }

    /// Splits into the (even part, odd part); the parts re-sum to the input.
    pub fn homogeneous_split(&self) -> (SuperMatrix, SuperMatrix) {
        let n = self.dim();
        let mut even = SuperMatrix::zeros(self.format.clone());
        let mut odd = SuperMatrix::zeros(self.format.clone());
        for i in 0..n {
            for j in 0..n {
                let v = self.entry(i, j).clone();
                if v.is_zero() {
                    continue;
                }
                if self.entry_parity(i, j).is_odd() {
                    odd.set(i, j, v);
                } else {
                    even.set(i, j, v);
                }
            }
        }
        (even, odd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};
    use rand::{Rng, SeedableRng};

    fn gl11() -> Format {
        Format::standard(1, 1)
    }

    fn x_plus() -> SuperMatrix {
        SuperMatrix::unit(gl11(), 0, 1)
    }

    fn x_minus() -> SuperMatrix {
        SuperMatrix::unit(gl11(), 1, 0)
    }

    fn random_homogeneous(rng: &mut impl Rng, fmt: &Format, p: Parity) -> SuperMatrix {
        let mut m = SuperMatrix::zeros(fmt.clone());
        for i in 0..fmt.len() {
            for j in 0..fmt.len() {
                if fmt.parity(i) + fmt.parity(j) == p {
                    m.set(i, j, rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
                }
            }
        }
        m
    }

    #[test]
    fn square_zero_odd_bracket() {
        // [X+, X+] = 2 X+^2 = 0
        let b = x_plus().supercommutator(&x_plus()).unwrap();
        assert!(b.is_zero());
    }

    #[test]
    fn odd_odd_bracket_is_anticommutator() {
        // [X+, X-] = X+X- + X-X+ = E11 + E22
        let b = x_plus().supercommutator(&x_minus()).unwrap();
        assert_eq!(b, SuperMatrix::identity(gl11()));
    }

    #[test]
    fn even_even_bracket_is_plain_commutator() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let fmt = Format::standard(2, 1);
        let a = random_homogeneous(&mut rng, &fmt, Parity::Even);
        let b = random_homogeneous(&mut rng, &fmt, Parity::Even);
        let br = a.supercommutator(&b).unwrap();
        assert_eq!(br, a.mul(&b).sub(&b.mul(&a)));
    }

    #[test]
    fn supertrace_examples() {
        let fmt = Format(vec![Parity::Even, Parity::Odd]);
        assert_eq!(SuperMatrix::identity(fmt.clone()).supertrace(), rint(0));
        assert_eq!(SuperMatrix::unit(fmt, 0, 0).supertrace(), rint(1));
    }

    #[test]
    fn supertrace_of_brackets_vanishes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let fmt = Format(vec![Parity::Even, Parity::Odd, Parity::Odd, Parity::Even]);
        for _ in 0..120 {
            let pa = if rng.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
            let pb = if rng.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
            let a = random_homogeneous(&mut rng, &fmt, pa);
            let b = random_homogeneous(&mut rng, &fmt, pb);
            assert!(a.supercommutator(&b).unwrap().supertrace().is_zero());
        }
    }

    #[test]
    fn supertranspose_examples() {
        // even diagonal fixed
        let fmt = Format::standard(1, 2);
        let mut d = SuperMatrix::zeros(fmt);
        d.set(0, 0, rint(2));
        d.set(1, 1, rint(-3));
        d.set(2, 2, rint(5));
        assert_eq!(d.supertranspose().unwrap(), d);
        // odd B in gl(1|1): (1,2) -> -c, (2,1) -> b
        let mut b = SuperMatrix::zeros(gl11());
        b.set(0, 1, rint(7)); // b
        b.set(1, 0, rint(11)); // c
        let st = b.supertranspose().unwrap();
        assert_eq!(st.entry(0, 1), &rint(-11));
        assert_eq!(st.entry(1, 0), &rint(7));
    }

    #[test]
    fn supertranspose_squared_is_parity_sign() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let fmt = Format(vec![Parity::Odd, Parity::Even, Parity::Odd]);
        for _ in 0..120 {
            let p = if rng.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
            let a = random_homogeneous(&mut rng, &fmt, p);
            let twice = a.supertranspose().unwrap().supertranspose().unwrap();
            if p.is_odd() {
                assert_eq!(twice, a.neg());
            } else {
                assert_eq!(twice, a);
            }
        }
    }

    #[test]
    fn parity_shift_negates_supertrace() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let fmt = Format::standard(2, 2);
        for _ in 0..100 {
            let a = random_homogeneous(&mut rng, &fmt, Parity::Even);
            assert_eq!(a.pi().supertrace(), -a.supertrace());
            assert_eq!(a.pi().pi(), a);
        }
    }

    #[test]
    fn homogeneous_split_block_shape() {
        // [[A,B],[C,D]] in standard format -> ([[A,0],[0,D]], [[0,B],[C,0]])
        let fmt = Format::standard(1, 1);
        let mut m = SuperMatrix::zeros(fmt);
        m.set(0, 0, rint(1));
        m.set(0, 1, rint(2));
        m.set(1, 0, rint(3));
        m.set(1, 1, rint(4));
        let (ev, od) = m.homogeneous_split();
        assert_eq!(ev.entry(0, 0), &rint(1));
        assert_eq!(ev.entry(1, 1), &rint(4));
        assert!(ev.entry(0, 1).is_zero() && ev.entry(1, 0).is_zero());
        assert_eq!(od.entry(0, 1), &rint(2));
        assert_eq!(od.entry(1, 0), &rint(3));
        assert_eq!(ev.add(&od), m);
        assert_eq!(ev.homogeneous_parity().unwrap(), Some(Parity::Even));
        assert_eq!(od.homogeneous_parity().unwrap(), Some(Parity::Odd));
    }

    #[test]
    fn super_antisymmetry_and_jacobi_on_random_triples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let fmt = Format::standard(2, 2);
        let parities = [Parity::Even, Parity::Odd];
        for _ in 0..60 {
            let px = parities[rng.gen_range(0..2)];
            let py = parities[rng.gen_range(0..2)];
            let pz = parities[rng.gen_range(0..2)];
            let x = random_homogeneous(&mut rng, &fmt, px);
            let y = random_homogeneous(&mut rng, &fmt, py);
            let z = random_homogeneous(&mut rng, &fmt, pz);
            // [X,Y] = -(-1)^{p(X)p(Y)}[Y,X]
            let xy = x.supercommutator(&y).unwrap();
            let yx = y.supercommutator(&x).unwrap();
            let rhs = if px.sign_with(py) < 0 { yx } else { yx.neg() };
            assert_eq!(xy, rhs);
            // [X,[Y,Z]] = [[X,Y],Z] + (-1)^{p(X)p(Y)}[Y,[X,Z]]
            let lhs = x.supercommutator(&y.supercommutator(&z).unwrap()).unwrap();
            let t1 = xy.supercommutator(&z).unwrap();
            let t2 = y.supercommutator(&x.supercommutator(&z).unwrap()).unwrap();
            let t2 = if px.sign_with(py) < 0 { t2.neg() } else { t2 };
            assert_eq!(lhs, t1.add(&t2));
        }
    }

    #[test]
    fn mixed_parity_input_is_rejected() {
        let fmt = Format::standard(1, 1);
        let mut m = SuperMatrix::zeros(fmt);
        m.set(0, 0, rint(1));
        m.set(0, 1, rint(1));
        assert!(m.supertranspose().is_err());
        assert!(m.supercommutator(&m).is_err());
    }
}
