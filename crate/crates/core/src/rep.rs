//! Representations of a Lie superalgebra by supermatrices, the functorial
//! constructions (direct sum, tensor, dual, parity shift, Hom, restriction),
//! induced and coinduced modules over graded algebras, and extensions glued
//! from 1-cocycles.

use crate::algebras::{graded_parts, LieSuperAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::linalg::{Format, Parity, SuperMatrix, SuperSpace};
use crate::rat::{rzero, Rat};
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::Arc;

/// A finite-dimensional module: one homogeneous action matrix per algebra
/// basis element, of the parity of that element.
#[derive(Clone, Debug)]
pub struct Representation {
    pub algebra: Arc<LieSuperAlgebra>,
    pub space: SuperSpace,
    pub action: Vec<SuperMatrix>,
    /// Optional weights of the basis vectors under the grading element of the
    /// algebra, when there is one. Functors keep them coherent so cohomology
    /// can restrict to the weight-zero subcomplex.
    pub weights: Option<Vec<i64>>,
}

impl Representation {
    pub fn new(
        algebra: Arc<LieSuperAlgebra>,
        space: SuperSpace,
        action: Vec<SuperMatrix>,
    ) -> Representation {
        Representation {
            algebra,
            space,
            action,
            weights: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn sdim(&self) -> (usize, usize) {
        self.space.sdim()
    }

    pub fn format(&self) -> &Format {
        &self.space.format
    }

    /// The action matrix of the algebra element with the given coordinates.
    pub fn action_of(&self, coords: &[Rat]) -> SuperMatrix {
        let mut m = SuperMatrix::zeros(self.space.format.clone());
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.action[i].scale(c));
            }
        }
        m
    }

    /// The trivial module 1 (or Pi(1) when `odd`).
    pub fn trivial(algebra: Arc<LieSuperAlgebra>, odd: bool) -> Representation {
        let fmt = if odd {
            Format::standard(0, 1)
        } else {
            Format::standard(1, 0)
        };
        let action = (0..algebra.dim())
            .map(|_| SuperMatrix::zeros(fmt.clone()))
            .collect();
        let mut r = Representation::new(algebra, SuperSpace::new(fmt), action);
        r.weights = Some(vec![0]);
        r
    }
}

/// The adjoint representation, read off the structure constants.
pub fn adjoint(algebra: &Arc<LieSuperAlgebra>) -> Representation {
    let n = algebra.dim();
    let fmt = algebra.parities.clone();
    let action = (0..n)
        .map(|i| {
            let mut m = SuperMatrix::zeros(fmt.clone());
            for j in 0..n {
                for (k, c) in algebra.bracket_basis(i, j) {
                    m.set(*k, j, c.clone());
                }
            }
            m
        })
        .collect();
    let mut r = Representation::new(algebra.clone(), SuperSpace::new(fmt), action);
    r.weights = algebra.grading.clone();
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepReport {
    pub pass: bool,
    pub failure: Option<String>,
}

/// Checks rho([x,y]) = rho(x)rho(y) - (-1)^{p(x)p(y)} rho(y)rho(x) on all
/// basis pairs, plus homogeneity and format coherence of the matrices.
pub fn verify_representation(v: &Representation) -> RepReport {
    let g = &v.algebra;
    let fail = |m: String| RepReport {
        pass: false,
        failure: Some(m),
    };
    if v.action.len() != g.dim() {
        return fail("one action matrix per basis element required".into());
    }
    for (i, m) in v.action.iter().enumerate() {
        if m.format != v.space.format {
            return fail(format!("action matrix {i} has the wrong format"));
        }
        match m.homogeneous_parity() {
            Ok(None) => {}
            Ok(Some(p)) if p == g.parity(i) => {}
            Ok(Some(_)) => {
                return fail(format!(
                    "action of {} has the wrong parity",
                    g.basis_labels[i]
                ))
            }
            Err(_) => {
                return fail(format!(
                    "action of {} is not homogeneous",
                    g.basis_labels[i]
                ))
            }
        }
    }
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let mut lhs = SuperMatrix::zeros(v.space.format.clone());
            for (k, c) in g.bracket_basis(i, j) {
                lhs = lhs.add(&v.action[*k].scale(c));
            }
            let xy = v.action[i].mul(&v.action[j]);
            let yx = v.action[j].mul(&v.action[i]);
            let rhs = if g.parity(i).sign_with(g.parity(j)) < 0 {
                xy.add(&yx)
            } else {
                xy.sub(&yx)
            };
            if lhs != rhs {
                return fail(format!(
                    "module axiom fails on ({}, {})",
                    g.basis_labels[i], g.basis_labels[j]
                ));
            }
        }
    }
    RepReport {
        pass: true,
        failure: None,
    }
}

fn same_algebra(v: &Representation, w: &Representation) -> Result<()> {
    if !Arc::ptr_eq(&v.algebra, &w.algebra) && *v.algebra != *w.algebra {
        return Err(Error::DimensionMismatch(
            "modules over different algebras".into(),
        ));
    }
    Ok(())
}

pub fn direct_sum(v: &Representation, w: &Representation) -> Result<Representation> {
    same_algebra(v, w)?;
    let fmt = v.space.format.concat(&w.space.format);
    let dv = v.dim();
    let action = v
        .action
        .iter()
        .zip(&w.action)
        .map(|(a, b)| {
            let mut m = SuperMatrix::zeros(fmt.clone());
            for i in 0..dv {
                for j in 0..dv {
                    m.set(i, j, a.entry(i, j).clone());
                }
            }
            for i in 0..w.dim() {
                for j in 0..w.dim() {
                    m.set(dv + i, dv + j, b.entry(i, j).clone());
                }
            }
            m
        })
        .collect();
    let mut r = Representation::new(v.algebra.clone(), SuperSpace::new(fmt), action);
    r.weights = match (&v.weights, &w.weights) {
        (Some(a), Some(b)) => Some(a.iter().chain(b.iter()).copied().collect()),
        _ => None,
    };
    Ok(r)
}

/// Tensor product with x(v (x) w) = xv (x) w + (-1)^{p(x)p(v)} v (x) xw.
pub fn tensor(v: &Representation, w: &Representation) -> Result<Representation> {
    same_algebra(v, w)?;
    let (dv, dw) = (v.dim(), w.dim());
    let fmt = Format(
        (0..dv * dw)
            .map(|t| v.format().parity(t / dw) + w.format().parity(t % dw))
            .collect(),
    );
    let action = (0..v.algebra.dim())
        .map(|x| {
            let px = v.algebra.parity(x);
            let mut m = SuperMatrix::zeros(fmt.clone());
            for a in 0..dv {
                for b in 0..dw {
                    let col = a * dw + b;
                    for c in 0..dv {
                        let e = v.action[x].entry(c, a);
                        if !e.is_zero() {
                            let row = c * dw + b;
                            let val = m.entry(row, col) + e;
                            m.set(row, col, val);
                        }
                    }
                    let sign = px.sign_with(v.format().parity(a));
                    for d in 0..dw {
                        let e = w.action[x].entry(d, b);
                        if !e.is_zero() {
                            let row = a * dw + d;
                            let add = if sign < 0 { -e.clone() } else { e.clone() };
                            let val = m.entry(row, col) + &add;
                            m.set(row, col, val);
                        }
                    }
                }
            }
            m
        })
        .collect();
    let mut r = Representation::new(v.algebra.clone(), SuperSpace::new(fmt), action);
    r.weights = match (&v.weights, &w.weights) {
        (Some(a), Some(b)) => Some((0..dv * dw).map(|t| a[t / dw] + b[t % dw]).collect()),
        _ => None,
    };
    Ok(r)
}

/// Dual module rho*(x) = -rho(x)^st; this is the normalization for which
/// <x phi, v> + (-1)^{p(x)p(phi)} <phi, x v> = 0 under the standard pairing.
pub fn dual(v: &Representation) -> Result<Representation> {
    let action = v
        .action
        .iter()
        .map(|m| Ok(m.supertranspose()?.neg()))
        .collect::<Result<Vec<_>>>()?;
    let mut r = Representation::new(v.algebra.clone(), v.space.clone(), action);
    r.weights = v.weights.as_ref().map(|ws| ws.iter().map(|w| -w).collect());
    Ok(r)
}

/// Parity shift: the format flips, the matrices are untouched.
pub fn pi(v: &Representation) -> Representation {
    let mut r = Representation::new(
        v.algebra.clone(),
        v.space.pi(),
        v.action.iter().map(|m| m.pi()).collect(),
    );
    r.weights = v.weights.clone();
    r
}

/// The module of linear maps V -> W with
/// x T = rho_W(x) T - (-1)^{p(x)p(T)} T rho_V(x).
/// Basis E_{ab} (a over W, b over V) at index a*dim(V)+b.
pub fn hom_module(v: &Representation, w: &Representation) -> Result<Representation> {
    same_algebra(v, w)?;
    let (dv, dw) = (v.dim(), w.dim());
    let fmt = Format(
        (0..dw * dv)
            .map(|t| w.format().parity(t / dv) + v.format().parity(t % dv))
            .collect(),
    );
    let action = (0..v.algebra.dim())
        .map(|x| {
            let px = v.algebra.parity(x);
            let mut m = SuperMatrix::zeros(fmt.clone());
            for a in 0..dw {
                for b in 0..dv {
                    let col = a * dv + b;
                    let pt = w.format().parity(a) + v.format().parity(b);
                    for c in 0..dw {
                        let e = w.action[x].entry(c, a);
                        if !e.is_zero() {
                            let row = c * dv + b;
                            let val = m.entry(row, col) + e;
                            m.set(row, col, val);
                        }
                    }
                    let sign = px.sign_with(pt);
                    for d in 0..dv {
                        let e = v.action[x].entry(b, d);
                        if !e.is_zero() {
                            let row = a * dv + d;
                            let sub = if sign < 0 { -e.clone() } else { e.clone() };
                            let val = m.entry(row, col) - &sub;
                            m.set(row, col, val);
                        }
                    }
                }
            }
            m
        })
        .collect();
    let mut r = Representation::new(v.algebra.clone(), SuperSpace::new(fmt), action);
    r.weights = match (&w.weights, &v.weights) {
        (Some(ww), Some(wv)) => Some((0..dw * dv).map(|t| ww[t / dv] - wv[t % dv]).collect()),
        _ => None,
    };
    Ok(r)
}

/// Restriction along an embedded subalgebra.
pub fn restrict(v: &Representation, sub: &Subalgebra) -> Representation {
    let action = sub.embed.iter().map(|coords| v.action_of(coords)).collect();
    let mut r = Representation::new(sub.algebra.clone(), v.space.clone(), action);
    r.weights = v.weights.clone();
    r
}

/// Which side of the grading provides the Grassmann factor.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
enum InductionSide {
    /// I(V) = U(L) (x)_{U(L_>=)} V, carrier Lambda(L_<) (x) V.
    Induced,
    /// J(V) = U(L) (x)_{U(L_<=)} V, carrier Lambda(L_>) (x) V.
    Coinduced,
}

struct Straightening<'a> {
    g: &'a Arc<LieSuperAlgebra>,
    v: &'a Representation,
    /// parent basis indices of the Grassmann generators
    gens: Vec<usize>,
    deg: Vec<i64>,
    side: InductionSide,
    /// parent basis index -> position in the L0-module's algebra basis
    l0_pos: HashMap<usize, usize>,
}

impl<'a> Straightening<'a> {
    fn carrier_dim(&self) -> usize {
        self.v.dim() << self.gens.len()
    }

    fn index(&self, mask: u32, b: usize) -> usize {
        (mask as usize) * self.v.dim() + b
    }

    /// out += coeff * theta_t . w (left Grassmann multiplication on the carrier)
    fn left_mul_generator(&self, t: usize, w: &[Rat], out: &mut [Rat]) {
        let bit = 1u32 << t;
        for (idx, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mask = (idx / self.v.dim()) as u32;
            let b = idx % self.v.dim();
            if mask & bit != 0 {
                continue;
            }
            let before = (mask & (bit - 1)).count_ones();
            let val = if before % 2 == 0 { c.clone() } else { -c.clone() };
            out[self.index(mask | bit, b)] += val;
        }
    }

    /// out += coeff * x . (theta^mask (x) v_b), straightening through the
    /// commutation relations. Terminates because the mask shrinks.
    fn act(&self, x: &[Rat], mask: u32, b: usize, coeff: &Rat, out: &mut [Rat]) {
        if coeff.is_zero() {
            return;
        }
        let first = (0..self.gens.len() as u32).find(|t| mask & (1 << t) != 0);
        match first {
            None => {
                for (i, c) in x.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let d = self.deg[i];
                    let annihilated = match self.side {
                        InductionSide::Induced => d > 0,
                        InductionSide::Coinduced => d < 0,
                    };
                    if annihilated {
                        continue;
                    }
                    if d == 0 {
                        let pos = self.l0_pos[&i];
                        let col = &self.v.action[pos];
                        for r in 0..self.v.dim() {
                            let e = col.entry(r, b);
                            if !e.is_zero() {
                                out[self.index(0, r)] += coeff * c * e;
                            }
                        }
                    } else {
                        let t = self
                            .gens
                            .iter()
                            .position(|&gi| gi == i)
                            .expect("generator-side element outside the Grassmann factor");
                        let before = 0u32; // inserting into the empty monomial
                        let _ = before;
                        out[self.index(1 << t, b)] += coeff * c;
                    }
                }
            }
            Some(t) => {
                let bit = 1u32 << t;
                let rest = mask & !bit;
                let gen_idx = self.gens[t as usize];
                // x theta = (-1)^{p(x)} theta x + [x, theta]
                let signed: Vec<Rat> = x
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        if self.g.parity(i).is_odd() {
                            -c.clone()
                        } else {
                            c.clone()
                        }
                    })
                    .collect();
                let mut tmp = vec![rzero(); self.carrier_dim()];
                self.act(&signed, rest, b, coeff, &mut tmp);
                self.left_mul_generator(t as usize, &tmp, out);
                let mut bracket = vec![rzero(); self.g.dim()];
                for (i, c) in x.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (k, s) in self.g.bracket_basis(i, gen_idx) {
                        bracket[*k] += c * s;
                    }
                }
                self.act(&bracket, rest, b, coeff, out);
            }
        }
    }
}

fn induction_common(
    g: &Arc<LieSuperAlgebra>,
    l0: &Subalgebra,
    v: &Representation,
    side: InductionSide,
) -> Result<Representation> {
    let parts = graded_parts(g)?;
    if *v.algebra != *l0.algebra {
        return Err(Error::DimensionMismatch(
            "module is not over the degree-zero part".into(),
        ));
    }
    let gens: Vec<usize> = match side {
        InductionSide::Induced => {
            let neg = parts.indices_where(|d| d < 0);
            if neg.iter().any(|&i| g.degree(i) != Some(-1)) {
                return Err(Error::Grading("induction needs depth-one grading".into()));
            }
            neg
        }
        InductionSide::Coinduced => {
            let pos = parts.indices_where(|d| d > 0);
            for &i in &pos {
                if !g.parity(i).is_odd() {
                    return Err(Error::InfiniteDimensional(format!(
                        "positive part contains the even element {}; the coinduced \
                         module has a polynomial (infinite) directions",
                        g.basis_labels[i]
                    )));
                }
                for &j in &pos {
                    if !g.bracket_basis(i, j).is_empty() {
                        return Err(Error::InfiniteDimensional(
                            "positive part is not abelian".into(),
                        ));
                    }
                }
            }
            pos
        }
    };
    // induced side check: L_{-1} odd abelian
    if side == InductionSide::Induced {
        for &i in &gens {
            if !g.parity(i).is_odd() {
                return Err(Error::Grading("L_{-1} must be purely odd".into()));
            }
            for &j in &gens {
                if !g.bracket_basis(i, j).is_empty() {
                    return Err(Error::Grading("L_{-1} must be abelian".into()));
                }
            }
        }
    }
    if gens.len() > 30 {
        return Err(Error::InvalidParameter("Grassmann factor too large".into()));
    }
    // map parent degree-0 indices to the extracted L0 basis positions: the
    // extraction is by index list, so each embed vector is a unit vector
    let mut l0_pos = HashMap::new();
    for (pos, coords) in l0.embed.iter().enumerate() {
        let nz: Vec<usize> = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect();
        if nz.len() != 1 {
            return Err(Error::Unsupported(
                "induction expects an index-extracted degree-zero part".into(),
            ));
        }
        l0_pos.insert(nz[0], pos);
    }
    for idx in parts.indices_where(|d| d == 0) {
        if !l0_pos.contains_key(&idx) {
            return Err(Error::Grading(
                "degree-zero part does not match the given subalgebra".into(),
            ));
        }
    }
    let ctx = Straightening {
        g,
        v,
        gens: gens.clone(),
        deg: g.grading.clone().unwrap(),
        side,
        l0_pos,
    };
    let dim = ctx.carrier_dim();
    let fmt = Format(
        (0..dim)
            .map(|idx| {
                let mask = (idx / v.dim()) as u32;
                let b = idx % v.dim();
                Parity::from_usize(mask.count_ones() as usize) + v.format().parity(b)
            })
            .collect(),
    );
    let mut action = Vec::with_capacity(g.dim());
    for i in 0..g.dim() {
        let mut coords = vec![rzero(); g.dim()];
        coords[i] = crate::rat::rone();
        let mut m = SuperMatrix::zeros(fmt.clone());
        for idx in 0..dim {
            let mask = (idx / v.dim()) as u32;
            let b = idx % v.dim();
            let mut col = vec![rzero(); dim];
            ctx.act(&coords, mask, b, &crate::rat::rone(), &mut col);
            for (r, val) in col.into_iter().enumerate() {
                if !val.is_zero() {
                    m.set(r, idx, val);
                }
            }
        }
        action.push(m);
    }
    let mut rep = Representation::new(g.clone(), SuperSpace::new(fmt), action);
    // weights relative to the grading element, when V carries weights
    if let Some(wv) = &v.weights {
        let deg = g.grading.as_ref().unwrap();
        rep.weights = Some(
            (0..dim)
                .map(|idx| {
                    let mask = (idx / v.dim()) as u32;
                    let b = idx % v.dim();
                    let gen_weight: i64 = gens
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| mask & (1 << t) != 0)
                        .map(|(_, &gi)| deg[gi])
                        .sum();
                    wv[b] + gen_weight
                })
                .collect(),
        );
    }
    Ok(rep)
}

/// Induced module I(V) = U(L) (x)_{U(L_>=)} V, realized on Lambda(L_{-1}) (x) V
/// by exact straightening. Requires a depth-one grading with odd abelian
/// L_{-1}; V is a module over the extracted degree-zero part, extended by
/// zero to the positive part.
pub fn induce(
    g: &Arc<LieSuperAlgebra>,
    l0: &Subalgebra,
    v: &Representation,
) -> Result<Representation> {
    induction_common(g, l0, v, InductionSide::Induced)
}

/// Coinduced module J(V) = U(L) (x)_{U(L_<=)} V on Lambda(L_>) (x) V.
/// Finite-dimensional exactly when L_> is purely odd and abelian; otherwise
/// an infinite-dimensional error is raised.
pub fn coinduce(
    g: &Arc<LieSuperAlgebra>,
    l0: &Subalgebra,
    v: &Representation,
) -> Result<Representation> {
    induction_common(g, l0, v, InductionSide::Coinduced)
}

/// A 1-cochain valued in Hom(W, V): one matrix block per algebra basis
/// element, mapping W into V with the parity of that element.
pub type Cochain1 = Vec<QMatBlock>;

/// A rectangular rational block (rows over V, cols over W).
pub type QMatBlock = crate::linalg::QMat;

/// The extension 0 -> V -> E -> W -> 0 glued along c: the action is the
/// block-triangular [[rho_V(x), c(x)], [0, rho_W(x)]]. The result satisfies
/// the module axiom exactly when c is a 1-cocycle; this is verified and a
/// non-cocycle is rejected.
pub fn extension_from_cocycle(
    v: &Representation,
    w: &Representation,
    c: &Cochain1,
) -> Result<Representation> {
    same_algebra(v, w)?;
    if c.len() != v.algebra.dim() {
        return Err(Error::DimensionMismatch("one block per basis element".into()));
    }
    let fmt = v.space.format.concat(&w.space.format);
    let dv = v.dim();
    let action: Vec<SuperMatrix> = v
        .action
        .iter()
        .zip(&w.action)
        .zip(c)
        .map(|((a, b), blk)| {
            let mut m = SuperMatrix::zeros(fmt.clone());
            for i in 0..dv {
                for j in 0..dv {
                    m.set(i, j, a.entry(i, j).clone());
                }
            }
            for i in 0..w.dim() {
                for j in 0..w.dim() {
                    m.set(dv + i, dv + j, b.entry(i, j).clone());
                }
            }
            for i in 0..dv {
                for j in 0..w.dim() {
                    m.set(i, dv + j, blk[(i, j)].clone());
                }
            }
            m
        })
        .collect();
    let mut rep = Representation::new(v.algebra.clone(), SuperSpace::new(fmt), action);
    rep.weights = match (&v.weights, &w.weights) {
        (Some(a), Some(b)) => Some(a.iter().chain(b.iter()).copied().collect()),
        _ => None,
    };
    let report = verify_representation(&rep);
    if !report.pass {
        return Err(Error::NotACocycle);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{build_gl, build_vect, extract_subalgebra, graded_parts, sl11};
    use crate::linalg::QMat;
    use crate::rat::rint;

    fn sl11_arc() -> Arc<LieSuperAlgebra> {
        Arc::new(sl11())
    }

    #[test]
    fn adjoint_representations_verify() {
        let g = sl11_arc();
        assert!(verify_representation(&adjoint(&g)).pass);
        let gl = Arc::new(build_gl(&Format::standard(1, 1)).unwrap());
        assert!(verify_representation(&adjoint(&gl)).pass);
    }

    #[test]
    fn corrupted_action_fails() {
        let g = sl11_arc();
        let mut v = adjoint(&g);
        // E acts by zero in the adjoint; forcing it nonzero breaks [X+,X-] = E
        v.action[0].set(0, 0, rint(1));
        assert!(!verify_representation(&v).pass);
    }

    #[test]
    fn functor_dimensions() {
        let g = sl11_arc();
        let a = adjoint(&g); // 1|2
        let t = Representation::trivial(g.clone(), false);
        let s = direct_sum(&a, &t).unwrap();
        assert_eq!(s.sdim(), (2, 2));
        assert!(verify_representation(&s).pass);
        // (1|1) tensor (1|1) = 2|2
        let v11 = {
            use crate::linalg::SuperMatrix;
            let fmt = Format::standard(1, 1);
            let mut e = SuperMatrix::identity(fmt.clone());
            e = e.scale(&rint(1));
            let xp = SuperMatrix::unit(fmt.clone(), 0, 1);
            let xm = SuperMatrix::unit(fmt.clone(), 1, 0);
            Representation::new(g.clone(), SuperSpace::new(fmt), vec![e, xp, xm])
        };
        assert!(verify_representation(&v11).pass);
        let tt = tensor(&v11, &v11).unwrap();
        assert_eq!(tt.sdim(), (2, 2));
        assert!(verify_representation(&tt).pass);
        // dual and hom verify; hom(V, W) has dim V * dim W
        let d = dual(&v11).unwrap();
        assert!(verify_representation(&d).pass);
        let h = hom_module(&v11, &a).unwrap();
        assert_eq!(h.dim(), 6);
        assert!(verify_representation(&h).pass);
        // Pi swaps the superdimension and is involutive
        assert_eq!(pi(&a).sdim(), (2, 1));
        assert!(verify_representation(&pi(&a)).pass);
    }

    #[test]
    fn induced_module_over_vect02() {
        let g = Arc::new(build_vect(2).unwrap());
        let parts = graded_parts(&g).unwrap();
        let l0 = extract_subalgebra(&g, &parts.indices_where(|d| d == 0)).unwrap();
        let triv = Representation::trivial(l0.algebra.clone(), false);
        let ind = induce(&g, &l0, &triv).unwrap();
        assert_eq!(ind.dim(), 4);
        assert!(verify_representation(&ind).pass, "{:?}", verify_representation(&ind).failure);
    }

    #[test]
    fn coinduced_module_finiteness() {
        let g = Arc::new(build_vect(2).unwrap());
        let parts = graded_parts(&g).unwrap();
        let l0 = extract_subalgebra(&g, &parts.indices_where(|d| d == 0)).unwrap();
        let triv = Representation::trivial(l0.algebra.clone(), false);
        let coind = coinduce(&g, &l0, &triv).unwrap();
        assert_eq!(coind.dim(), 4 * triv.dim());
        assert!(verify_representation(&coind).pass);
        // vect(0|3): the top degree is even, so the coinduced module is
        // infinite-dimensional and must be rejected
        let g3 = Arc::new(build_vect(3).unwrap());
        let parts3 = graded_parts(&g3).unwrap();
        let l03 = extract_subalgebra(&g3, &parts3.indices_where(|d| d == 0)).unwrap();
        let triv3 = Representation::trivial(l03.algebra.clone(), false);
        match coinduce(&g3, &l03, &triv3) {
            Err(Error::InfiniteDimensional(_)) => {}
            other => panic!("expected infinite-dimensional rejection, got {other:?}"),
        }
    }

    #[test]
    fn zero_cocycle_gives_direct_sum() {
        let g = sl11_arc();
        let a = adjoint(&g);
        let t = Representation::trivial(g.clone(), false);
        let c: Cochain1 = (0..g.dim()).map(|_| QMat::zeros(a.dim(), t.dim())).collect();
        let e = extension_from_cocycle(&a, &t, &c).unwrap();
        assert!(verify_representation(&e).pass);
        assert_eq!(e.sdim(), (2, 2));
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let g = sl11_arc();
        let t1 = Representation::trivial(g.clone(), false);
        let t2 = Representation::trivial(g.clone(), false);
        // c(E) = 1 is not a cocycle for the trivial pair ([X+,X-] = E forces
        // c(E) = 0 when the diagonal parts vanish)
        let mut c: Cochain1 = (0..g.dim()).map(|_| QMat::zeros(1, 1)).collect();
        c[0][(0, 0)] = rint(1);
        match extension_from_cocycle(&t1, &t2, &c) {
            Err(Error::NotACocycle) => {}
            other => panic!("expected cocycle rejection, got {other:?}"),
        }
    }
}
