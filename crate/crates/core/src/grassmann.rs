//! The Grassmann superalgebra on n odd generators, super vector fields on a
//! purely odd superspace, divergence, differential forms, the exterior
//! differential, and the Lie derivative.
//!
//! Monomials xi^S are kept with S in increasing index order; all signs are
//! normalized to that order.

use crate::error::{Error, Result};
use crate::linalg::Parity;
use crate::rat::{rat_from_str, rat_to_string, rone, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Sign of multiplying xi^S * xi^T into xi^{S union T}; None when S and T meet.
fn shuffle_sign(s: u32, t: u32) -> Option<i32> {
    if s & t != 0 {
        return None;
    }
    // count pairs (i in S, j in T) with i > j
    let mut inversions = 0u32;
    let mut rest = s;
    while rest != 0 {
        let i = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (t & ((1u32 << i) - 1)).count_ones();
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// An element of Lambda(n): a rational combination of monomials xi^S.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrassmannElement {
    pub n: usize,
    coeffs: BTreeMap<u32, Rat>,
}

impl GrassmannElement {
    pub fn zero(n: usize) -> GrassmannElement {
        GrassmannElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> GrassmannElement {
        GrassmannElement::monomial(n, 0, rone())
    }

    /// The generator xi_i (1-based index).
    pub fn xi(n: usize, i: usize) -> GrassmannElement {
        assert!(1 <= i && i <= n);
        GrassmannElement::monomial(n, 1 << (i - 1), rone())
    }

    /// The top element Theta = xi_1 ... xi_n.
    pub fn theta(n: usize) -> GrassmannElement {
        GrassmannElement::monomial(n, (1u32 << n) - 1, rone())
    }

    pub fn monomial(n: usize, mask: u32, c: Rat) -> GrassmannElement {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(mask, c);
        }
        GrassmannElement { n, coeffs }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &Rat)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, mask: u32) -> Rat {
        self.coeffs.get(&mask).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert(&mut self, mask: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mask).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn add(&self, other: &GrassmannElement) -> GrassmannElement {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.insert(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> GrassmannElement {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> GrassmannElement {
        let mut out = GrassmannElement::zero(self.n);
        for (m, c) in &self.coeffs {
            out.insert(*m, c * k);
        }
        out
    }

    /// Supercommutative associative product with the shuffle sign.
    pub fn mul(&self, other: &GrassmannElement) -> Result<GrassmannElement> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "Grassmann algebras on {} vs {} generators",
                self.n, other.n
            )));
        }
        let mut out = GrassmannElement::zero(self.n);
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                if let Some(sign) = shuffle_sign(*s, *t) {
                    let c = a * b;
                    out.insert(*s | *t, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// The odd derivation d/d xi_i (1-based).
    pub fn partial(&self, i: usize) -> Result<GrassmannElement> {
        if i < 1 || i > self.n {
            return Err(Error::IndexOutOfRange(format!(
                "partial {i} on Lambda({})",
                self.n
            )));
        }
        let bit = 1u32 << (i - 1);
        let mut out = GrassmannElement::zero(self.n);
        for (s, a) in &self.coeffs {
            if s & bit != 0 {
                let before = (s & (bit - 1)).count_ones();
                let c = if before % 2 == 0 { a.clone() } else { -a.clone() };
                out.insert(s & !bit, c);
            }
        }
        Ok(out)
    }

    /// Some(parity) when all monomials share |S| mod 2; None when mixed or zero.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut seen = None;
        for s in self.coeffs.keys() {
            let p = Parity::from_usize(s.count_ones() as usize);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        seen
    }
}

fn mask_to_string(mask: u32) -> String {
    if mask == 0 {
        return String::new();
    }
    let mut s = String::new();
    for i in 0..32 {
        if mask & (1 << i) != 0 {
            s.push('x');
            s.push_str(&(i + 1).to_string());
        }
    }
    s
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let xs = mask_to_string(*m);
            if xs.is_empty() {
                write!(f, "{}", rat_to_string(c))?;
            } else {
                write!(f, "{}*{}", rat_to_string(c), xs)?;
            }
        }
        Ok(())
    }
}

/// A super vector field D = sum_i f_i d/d xi_i on the (0|n)-dimensional
/// superspace; the f_i live in Lambda(n).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperVectorField {
    pub n: usize,
    pub comps: Vec<GrassmannElement>,
}

impl SuperVectorField {
    pub fn zero(n: usize) -> SuperVectorField {
        SuperVectorField {
            n,
            comps: vec![GrassmannElement::zero(n); n],
        }
    }

    /// The monomial field xi^S d/d xi_i (1-based i).
    pub fn monomial(n: usize, mask: u32, i: usize) -> SuperVectorField {
        let mut f = SuperVectorField::zero(n);
        f.comps[i - 1] = GrassmannElement::monomial(n, mask, rone());
        f
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &SuperVectorField) -> SuperVectorField {
        assert_eq!(self.n, other.n);
        SuperVectorField {
            n: self.n,
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> SuperVectorField {
        SuperVectorField {
            n: self.n,
            comps: self.comps.iter().map(|c| c.scale(k)).collect(),
        }
    }

    pub fn neg(&self) -> SuperVectorField {
        SuperVectorField {
            n: self.n,
            comps: self.comps.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Parity of the field: p(f_i) + 1 on homogeneous components.
    pub fn homogeneous_parity(&self) -> Result<Parity> {
        let mut seen = None;
        for c in &self.comps {
            if c.is_zero() {
                continue;
            }
            let p = c
                .homogeneous_parity()
                .ok_or_else(|| Error::NotHomogeneous("vector field component".into()))?
                .flip();
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => {
                    return Err(Error::NotHomogeneous("vector field components".into()))
                }
                _ => {}
            }
        }
        Ok(seen.unwrap_or(Parity::Even))
    }

    /// Applies the derivation to a Grassmann element.
    pub fn apply(&self, a: &GrassmannElement) -> Result<GrassmannElement> {
        let mut out = GrassmannElement::zero(self.n);
        for (i, f) in self.comps.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            out = out.add(&f.mul(&a.partial(i + 1)?)?);
        }
        Ok(out)
    }

    /// Supercommutator of derivations, expressed back in component form.
    pub fn bracket(&self, other: &SuperVectorField) -> Result<SuperVectorField> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch("vector field bracket".into()));
        }
        let pd = self.homogeneous_parity()?;
        let pe = other.homogeneous_parity()?;
        let sign = pd.sign_with(pe);
        let mut comps = Vec::with_capacity(self.n);
        for k in 0..self.n {
            // [D,E](xi_k) = D(E(xi_k)) - (-1)^{p(D)p(E)} E(D(xi_k))
            let de = self.apply(&other.comps[k])?;
            let ed = other.apply(&self.comps[k])?;
            comps.push(if sign < 0 { de.add(&ed) } else { de.add(&ed.neg()) });
        }
        Ok(SuperVectorField { n: self.n, comps })
    }

    /// Div D = sum_i (-1)^{p(f_i)} d f_i / d xi_i.
    pub fn divergence(&self) -> Result<GrassmannElement> {
        let mut out = GrassmannElement::zero(self.n);
        for (i, f) in self.comps.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let p = f
                .homogeneous_parity()
                .ok_or_else(|| Error::NotHomogeneous("divergence component".into()))?;
            let d = f.partial(i + 1)?;
            out = out.add(&if p.is_odd() { d.neg() } else { d });
        }
        Ok(out)
    }
}

impl fmt::Display for SuperVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*d{}", c, i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Monomial key of a form: the xi-subset mask and the dxi exponent vector.
pub type FormKey = (u32, Vec<u32>);

/// A polynomial in the xi_i and dxi_i with p(dxi_i) = p(xi_i) + 1 = even, so
/// the dxi commute and admit arbitrary powers while the xi anticommute.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormPolynomial {
    pub n: usize,
    coeffs: BTreeMap<FormKey, Rat>,
}

impl FormPolynomial {
    pub fn zero(n: usize) -> FormPolynomial {
        FormPolynomial {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> FormPolynomial {
        FormPolynomial::monomial(n, 0, vec![0; n], rone())
    }

    pub fn monomial(n: usize, mask: u32, alpha: Vec<u32>, c: Rat) -> FormPolynomial {
        assert_eq!(alpha.len(), n);
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((mask, alpha), c);
        }
        FormPolynomial { n, coeffs }
    }

    pub fn from_function(a: &GrassmannElement) -> FormPolynomial {
        let mut out = FormPolynomial::zero(a.n);
        for (m, c) in a.terms() {
            out.insert((*m, vec![0; a.n]), c.clone());
        }
        out
    }

    pub fn xi(n: usize, i: usize) -> FormPolynomial {
        FormPolynomial::monomial(n, 1 << (i - 1), vec![0; n], rone())
    }

    pub fn dxi(n: usize, i: usize) -> FormPolynomial {
        let mut alpha = vec![0; n];
        alpha[i - 1] = 1;
        FormPolynomial::monomial(n, 0, alpha, rone())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormKey, &Rat)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, key: &FormKey) -> Rat {
        self.coeffs.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert(&mut self, key: FormKey, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &FormPolynomial) -> FormPolynomial {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> FormPolynomial {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> FormPolynomial {
        let mut out = FormPolynomial::zero(self.n);
        for (key, c) in &self.coeffs {
            out.insert(key.clone(), c * k);
        }
        out
    }

    /// Product; only the xi parts contribute signs since the dxi are even.
    pub fn mul(&self, other: &FormPolynomial) -> Result<FormPolynomial> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch("form product".into()));
        }
        let mut out = FormPolynomial::zero(self.n);
        for ((s, al), a) in &self.coeffs {
            for ((t, be), b) in &other.coeffs {
                if let Some(sign) = shuffle_sign(*s, *t) {
                    let alpha: Vec<u32> = al.iter().zip(be).map(|(x, y)| x + y).collect();
                    let c = a * b;
                    out.insert((*s | *t, alpha), if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Parity of a monomial is |S| mod 2 (dxi are even).
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut seen = None;
        for (s, _) in self.coeffs.keys() {
            let p = Parity::from_usize(s.count_ones() as usize);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        seen
    }

    /// Exterior differential: raises dxi-degree by one, d o d = 0.
    pub fn exterior_d(&self) -> FormPolynomial {
        let mut out = FormPolynomial::zero(self.n);
        for ((s, alpha), c) in &self.coeffs {
            // d acts on the xi^S factor only and the new dxi_i commutes into alpha
            let mut rest = *s;
            while rest != 0 {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                let bit = 1u32 << i;
                let before = (s & (bit - 1)).count_ones();
                let sign = if before % 2 == 0 { 1 } else { -1 };
                let mut a2 = alpha.clone();
                a2[i as usize] += 1;
                let v = if sign < 0 { -c.clone() } else { c.clone() };
                out.insert((s & !bit, a2), v);
            }
        }
        out
    }

    /// Lie derivative along D: the derivation of parity p(D) acting as D on
    /// functions, with L_D(d xi_i) = (-1)^{p(D)} d(D xi_i) on differentials.
    pub fn lie_derivative(&self, field: &SuperVectorField) -> Result<FormPolynomial> {
        if field.n != self.n {
            return Err(Error::DimensionMismatch("Lie derivative".into()));
        }
        let pd = field.homogeneous_parity()?;
        let n = self.n;
        let im_xi: Vec<FormPolynomial> = (0..n)
            .map(|i| FormPolynomial::from_function(&field.comps[i]))
            .collect();
        let im_dxi: Vec<FormPolynomial> = (0..n)
            .map(|i| {
                let d = FormPolynomial::from_function(&field.comps[i]).exterior_d();
                if pd.is_odd() {
                    d.neg()
                } else {
                    d
                }
            })
            .collect();
        let mut out = FormPolynomial::zero(n);
        for ((s, alpha), c) in &self.coeffs {
            // canonical factor list: the xi's in increasing order, then the dxi's
            let mut factors: Vec<(bool, usize)> = Vec::new();
            for i in 0..n as u32 {
                if s & (1 << i) != 0 {
                    factors.push((false, i as usize));
                }
            }
            for (i, &e) in alpha.iter().enumerate() {
                for _ in 0..e {
                    factors.push((true, i));
                }
            }
            // Leibniz with the Sign Rule: D picks up -1 for each odd factor
            // it moves past (only the xi's are odd)
            for t in 0..factors.len() {
                let mut term = FormPolynomial::one(n);
                let mut sign = 1i32;
                for (pos, &(is_d, idx)) in factors.iter().enumerate() {
                    let piece = if pos == t {
                        if is_d {
                            im_dxi[idx].clone()
                        } else {
                            im_xi[idx].clone()
                        }
                    } else {
                        if pos < t && !is_d && pd.is_odd() {
                            sign = -sign;
                        }
                        if is_d {
                            FormPolynomial::dxi(n, idx + 1)
                        } else {
                            FormPolynomial::xi(n, idx + 1)
                        }
                    };
                    term = term.mul(&piece)?;
                }
                let coeff = if sign < 0 { -c.clone() } else { c.clone() };
                out = out.add(&term.scale(&coeff));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for FormPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((mask, alpha), c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", rat_to_string(c))?;
            let xs = mask_to_string(*mask);
            if !xs.is_empty() {
                write!(f, "*{xs}")?;
            }
            for (i, &e) in alpha.iter().enumerate() {
                if e == 1 {
                    write!(f, "*dx{}", i + 1)?;
                } else if e > 1 {
                    write!(f, "*dx{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the textual form, e.g. `3/2*x1x2 + 1*dx1^2*x2 - x1`.
pub fn parse_form(n: usize, input: &str) -> Result<FormPolynomial> {
    let mut out = FormPolynomial::zero(n);
    let s = input.replace('-', "+-");
    for raw in s.split('+') {
        let term = raw.trim();
        if term.is_empty() {
            continue;
        }
        let (neg, term) = match term.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, term),
        };
        let mut coeff = rone();
        let mut mask = 0u32;
        let mut alpha = vec![0u32; n];
        for factor in term.split('*') {
            let f = factor.trim();
            if f.is_empty() {
                continue;
            }
            if let Some(body) = f.strip_prefix("dx") {
                let (idx_str, exp) = match body.split_once('^') {
                    Some((a, b)) => (
                        a,
                        b.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {f:?}")))?,
                    ),
                    None => (body, 1),
                };
                let i: usize = idx_str
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad dxi index in {f:?}")))?;
                if i < 1 || i > n {
                    return Err(Error::IndexOutOfRange(format!("dx{i} with n={n}")));
                }
                alpha[i - 1] += exp;
            } else if f.starts_with('x') {
                for part in f.split('x').filter(|p| !p.is_empty()) {
                    let i: usize = part
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad xi factor in {f:?}")))?;
                    if i < 1 || i > n {
                        return Err(Error::IndexOutOfRange(format!("x{i} with n={n}")));
                    }
                    let bit = 1u32 << (i - 1);
                    if mask & bit != 0 {
                        coeff = Rat::zero();
                    }
                    // sign of moving xi_i from the right through the part of
                    // xi^mask that sits above index i
                    let above = (mask & !(bit | (bit - 1))).count_ones();
                    if above % 2 == 1 {
                        coeff = -coeff;
                    }
                    mask |= bit;
                }
            } else {
                coeff *= rat_from_str(f)?;
            }
        }
        if neg {
            coeff = -coeff;
        }
        out = out.add(&FormPolynomial::monomial(n, mask, alpha, coeff));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    #[test]
    fn grassmann_products() {
        let n = 2;
        let x1 = GrassmannElement::xi(n, 1);
        let x2 = GrassmannElement::xi(n, 2);
        assert_eq!(x1.mul(&x2).unwrap().coeff(0b11), rint(1));
        assert_eq!(x2.mul(&x1).unwrap().coeff(0b11), rint(-1));
        assert!(x1.mul(&x1).unwrap().is_zero());
        // (1 + xi1)(1 + xi2) = 1 + xi1 + xi2 + xi1 xi2
        let p = GrassmannElement::one(n)
            .add(&x1)
            .mul(&GrassmannElement::one(n).add(&x2))
            .unwrap();
        for mask in 0u32..4 {
            assert_eq!(p.coeff(mask), rint(1));
        }
    }

    #[test]
    fn partial_derivatives() {
        let n = 2;
        let x1 = GrassmannElement::xi(n, 1);
        assert_eq!(x1.partial(1).unwrap(), GrassmannElement::one(n));
        let x12 = x1.mul(&GrassmannElement::xi(n, 2)).unwrap();
        // d2(x1 x2) = -x1
        assert_eq!(x12.partial(2).unwrap(), GrassmannElement::xi(n, 1).neg());
        for mask in 0u32..4 {
            let m = GrassmannElement::monomial(n, mask, rint(1));
            for i in 1..=n {
                assert!(m.partial(i).unwrap().partial(i).unwrap().is_zero());
            }
        }
        assert!(x1.partial(3).is_err());
    }

    #[test]
    fn lambda_dimensions_and_theta() {
        for n in 1..=4usize {
            let odd = (0..(1u32 << n))
                .filter(|m| m.count_ones() % 2 == 1)
                .count();
            assert_eq!(odd, 1 << (n - 1));
            let theta = GrassmannElement::theta(n);
            assert!(theta.mul(&theta).unwrap().is_zero());
            for i in 1..=n {
                assert!(theta.mul(&GrassmannElement::xi(n, i)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn field_brackets() {
        let n = 2;
        let d1 = SuperVectorField::monomial(n, 0, 1);
        let d2 = SuperVectorField::monomial(n, 0, 2);
        assert!(d1.bracket(&d2).unwrap().is_zero());
        // [xi1 d1, d1] = -d1
        let e11 = SuperVectorField::monomial(n, 0b01, 1);
        assert_eq!(e11.bracket(&d1).unwrap(), d1.neg());
        // [xi1 d2, xi2 d1] = xi1 d1 - xi2 d2  (gl(2) commutator of E21, E12)
        let a = SuperVectorField::monomial(n, 0b01, 2);
        let b = SuperVectorField::monomial(n, 0b10, 1);
        let expected = SuperVectorField::monomial(n, 0b01, 1)
            .add(&SuperVectorField::monomial(n, 0b10, 2).neg());
        assert_eq!(a.bracket(&b).unwrap(), expected);
    }

    #[test]
    fn divergences() {
        let n = 2;
        assert!(SuperVectorField::monomial(n, 0, 1)
            .divergence()
            .unwrap()
            .is_zero());
        assert_eq!(
            SuperVectorField::monomial(n, 0b01, 1).divergence().unwrap(),
            GrassmannElement::one(n).neg()
        );
        assert_eq!(
            SuperVectorField::monomial(n, 0b11, 2).divergence().unwrap(),
            GrassmannElement::xi(n, 1).neg()
        );
    }

    #[test]
    fn exterior_differential() {
        let n = 2;
        let x1 = FormPolynomial::xi(n, 1);
        assert_eq!(x1.exterior_d(), FormPolynomial::dxi(n, 1));
        assert!(FormPolynomial::one(n).exterior_d().is_zero());
        // d(x1 x2): Leibniz oracle (dx1) x2 - x1 (dx2), normalized
        let x12 = x1.mul(&FormPolynomial::xi(n, 2)).unwrap();
        let oracle = FormPolynomial::dxi(n, 1)
            .mul(&FormPolynomial::xi(n, 2))
            .unwrap()
            .add(
                &FormPolynomial::xi(n, 1)
                    .mul(&FormPolynomial::dxi(n, 2))
                    .unwrap()
                    .neg(),
            );
        assert_eq!(x12.exterior_d(), oracle);
    }

    #[test]
    fn d_squared_vanishes_on_monomial_spans() {
        for n in 1..=4usize {
            for mask in 0..(1u32 << n) {
                for total in 0..=4u32 {
                    let mut alpha = vec![0u32; n];
                    alpha[0] = total / 2;
                    alpha[if n > 1 { 1 } else { 0 }] += total - total / 2;
                    let m = FormPolynomial::monomial(n, mask, alpha, rint(1));
                    assert!(m.exterior_d().exterior_d().is_zero());
                }
            }
        }
    }

    #[test]
    fn lie_derivative_on_generators() {
        let n = 2;
        let d1 = SuperVectorField::monomial(n, 0, 1);
        assert_eq!(
            FormPolynomial::xi(n, 1).lie_derivative(&d1).unwrap(),
            FormPolynomial::one(n)
        );
        assert!(FormPolynomial::dxi(n, 1)
            .lie_derivative(&d1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn lie_derivative_is_a_representation() {
        // L_[D,E] = L_D L_E - (-1)^{p(D)p(E)} L_E L_D on monomial bases
        for n in 2..=3usize {
            let mut fields = Vec::new();
            for i in 1..=n {
                fields.push(SuperVectorField::monomial(n, 0, i));
                fields.push(SuperVectorField::monomial(n, 0b01, i));
                fields.push(SuperVectorField::monomial(n, 0b11, i));
            }
            let mut basis = Vec::new();
            for mask in 0..(1u32 << n) {
                for d1 in 0..=1u32 {
                    let mut alpha = vec![0; n];
                    alpha[0] = d1;
                    basis.push(FormPolynomial::monomial(n, mask, alpha, rint(1)));
                }
            }
            for d in &fields {
                for e in &fields {
                    let bde = d.bracket(e).unwrap();
                    let sign = d
                        .homogeneous_parity()
                        .unwrap()
                        .sign_with(e.homogeneous_parity().unwrap());
                    for w in &basis {
                        let lhs = w.lie_derivative(&bde).unwrap();
                        let de = w.lie_derivative(e).unwrap().lie_derivative(d).unwrap();
                        let ed = w.lie_derivative(d).unwrap().lie_derivative(e).unwrap();
                        let rhs = if sign < 0 { de.add(&ed) } else { de.add(&ed.neg()) };
                        assert_eq!(lhs, rhs, "failed for D={d}, E={e}, w={w}");
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_print_round_trip() {
        let w = parse_form(2, "3/2*x1x2 + 1*dx1^2*x2 - x1").unwrap();
        assert_eq!(w.coeff(&(0b11, vec![0, 0])), rat(3, 2));
        assert_eq!(w.coeff(&(0b10, vec![2, 0])), rint(1));
        assert_eq!(w.coeff(&(0b01, vec![0, 0])), rint(-1));
        let back = parse_form(2, &w.to_string()).unwrap();
        assert_eq!(back, w);
        // anticommuted input normalizes with the sign
        let v = parse_form(2, "x2x1").unwrap();
        assert_eq!(v.coeff(&(0b11, vec![0, 0])), rint(-1));
    }
}
