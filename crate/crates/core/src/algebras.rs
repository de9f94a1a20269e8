//! Constructors and verifiers for the finite-dimensional Lie superalgebras
//! used throughout: gl, sl, the form-preserving algebras osp/pe/spe, and the
//! vectorial algebras vect, svect, svect~, h, sh on purely odd indeterminates.
//!
//! Every algebra is delivered as structure constants over a labeled
//! homogeneous basis, with the realization that produced it attached.

use crate::error::{Error, Result};
use crate::grassmann::SuperVectorField;
use crate::linalg::{Format, Parity, QMat, SuperMatrix};
use crate::rat::{rzero, Rat};
use num_traits::{One, Zero};
use std::sync::Arc;

/// Sparse bracket value: coefficients over the basis.
pub type BracketVec = Vec<(usize, Rat)>;

#[derive(Clone, Debug)]
pub enum Realization {
    None,
    Matrix(Vec<SuperMatrix>),
    VectorField(Vec<SuperVectorField>),
}

/// A finite-dimensional Lie superalgebra given by structure constants over a
/// homogeneous basis.
#[derive(Clone, Debug)]
pub struct LieSuperAlgebra {
    pub name: String,
    pub basis_labels: Vec<String>,
    pub parities: Format,
    /// brackets[i][j] = [e_i, e_j] as a sparse vector over the basis.
    pub brackets: Vec<Vec<BracketVec>>,
    pub realization: Realization,
    /// Optional Z-grading: degree of each basis element.
    pub grading: Option<Vec<i64>>,
}

impl PartialEq for LieSuperAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.basis_labels == other.basis_labels
            && self.parities == other.parities
            && self.brackets == other.brackets
    }
}

impl LieSuperAlgebra {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn sdim(&self) -> (usize, usize) {
        self.parities.sdim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities.parity(i)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &BracketVec {
        &self.brackets[i][j]
    }

    /// Bracket of two coefficient vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![rzero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (k, v) in &self.brackets[i][j] {
                    out[*k] += &c * v;
                }
            }
        }
        out
    }

    pub fn degree(&self, i: usize) -> Option<i64> {
        self.grading.as_ref().map(|g| g[i])
    }

    pub fn realization_fields(&self) -> &[SuperVectorField] {
        match &self.realization {
            Realization::VectorField(f) => f,
            _ => &[],
        }
    }

    pub fn realization_matrices(&self) -> &[SuperMatrix] {
        match &self.realization {
            Realization::Matrix(m) => m,
            _ => &[],
        }
    }
}

fn flatten_supermatrix(m: &SuperMatrix) -> Vec<Rat> {
    let n = m.dim();
    let mut v = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            v.push(m.entry(i, j).clone());
        }
    }
    v
}

fn flatten_field(f: &SuperVectorField) -> Vec<Rat> {
    let n = f.n;
    let mut v = Vec::with_capacity(n << n);
    for comp in &f.comps {
        for mask in 0..(1u32 << n) {
            v.push(comp.coeff(mask));
        }
    }
    v
}

/// Builds an algebra from a bracket-closed family of supermatrices. The
/// structure constants are solved for exactly; an error is returned when the
/// span is not closed under the supercommutator.
pub fn from_matrices(
    name: &str,
    labels: Vec<String>,
    mats: Vec<SuperMatrix>,
) -> Result<LieSuperAlgebra> {
    let n = mats.len();
    if n == 0 {
        return Err(Error::InvalidParameter("empty basis".into()));
    }
    let parities: Vec<Parity> = mats
        .iter()
        .map(|m| Ok(m.homogeneous_parity()?.unwrap_or(Parity::Even)))
        .collect::<Result<_>>()?;
    let span = QMat::from_cols(mats.iter().map(flatten_supermatrix).collect());
    let mut brackets = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let b = mats[i].supercommutator(&mats[j])?;
            let coords = span.solve(&flatten_supermatrix(&b)).ok_or_else(|| {
                Error::VerificationFailed(format!("span not closed under bracket at ({i},{j})"))
            })?;
            brackets[i][j] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
    }
    Ok(LieSuperAlgebra {
        name: name.to_string(),
        basis_labels: labels,
        parities: Format(parities),
        brackets,
        realization: Realization::Matrix(mats),
        grading: None,
    })
}

/// Same as `from_matrices` for super vector fields on (0|n).
pub fn from_fields(
    name: &str,
    labels: Vec<String>,
    fields: Vec<SuperVectorField>,
) -> Result<LieSuperAlgebra> {
    let m = fields.len();
    if m == 0 {
        return Err(Error::InvalidParameter("empty basis".into()));
    }
    let parities: Vec<Parity> = fields
        .iter()
        .map(|f| f.homogeneous_parity())
        .collect::<Result<_>>()?;
    let span = QMat::from_cols(fields.iter().map(flatten_field).collect());
    let mut brackets = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let b = fields[i].bracket(&fields[j])?;
            let coords = span.solve(&flatten_field(&b)).ok_or_else(|| {
                Error::VerificationFailed(format!(
                    "field span not closed under bracket at ({i},{j})"
                ))
            })?;
            brackets[i][j] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
        }
    }
    Ok(LieSuperAlgebra {
        name: name.to_string(),
        basis_labels: labels,
        parities: Format(parities),
        brackets,
        realization: Realization::VectorField(fields),
        grading: None,
    })
}

/// Report of the axiom checks on an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub pass: bool,
    pub failure: Option<String>,
}

/// Asserts super antisymmetry, the super Jacobi identity on all basis
/// triples, realization consistency, and grading compatibility when present.
/// Failures are reported with the first counterexample.
pub fn verify_algebra(g: &LieSuperAlgebra) -> AlgebraReport {
    let n = g.dim();
    let fail = |msg: String| AlgebraReport {
        pass: false,
        failure: Some(msg),
    };
    // super antisymmetry: [x,y] + (-1)^{p(x)p(y)}[y,x] = 0
    for i in 0..n {
        for j in 0..n {
            let mut acc = vec![rzero(); n];
            for (k, c) in &g.brackets[i][j] {
                acc[*k] += c;
            }
            let sign = g.parity(i).sign_with(g.parity(j));
            for (k, c) in &g.brackets[j][i] {
                if sign < 0 {
                    acc[*k] -= c;
                } else {
                    acc[*k] += c;
                }
            }
            if acc.iter().any(|c| !c.is_zero()) {
                return fail(format!(
                    "antisymmetry fails at ({}, {})",
                    g.basis_labels[i], g.basis_labels[j]
                ));
            }
        }
    }
    // super Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)}[y,[x,z]]
    let e = |i: usize| -> Vec<Rat> {
        let mut v = vec![rzero(); n];
        v[i] = Rat::one();
        v
    };
    for i in 0..n {
        let xi = e(i);
        for j in 0..n {
            let xj = e(j);
            let xij = g.bracket(&xi, &xj);
            let sign = g.parity(i).sign_with(g.parity(j));
            for k in 0..n {
                let xk = e(k);
                let lhs = g.bracket(&xi, &g.bracket(&xj, &xk));
                let t1 = g.bracket(&xij, &xk);
                let t2 = g.bracket(&xj, &g.bracket(&xi, &xk));
                let ok = lhs.iter().zip(t1.iter().zip(&t2)).all(|(l, (a, b))| {
                    let rhs = if sign < 0 { a - b } else { a + b };
                    *l == rhs
                });
                if !ok {
                    return fail(format!(
                        "super Jacobi fails at ({}, {}, {})",
                        g.basis_labels[i], g.basis_labels[j], g.basis_labels[k]
                    ));
                }
            }
        }
    }
    // realization consistency
    match &g.realization {
        Realization::Matrix(mats) => {
            for i in 0..n {
                for j in 0..n {
                    let Ok(b) = mats[i].supercommutator(&mats[j]) else {
                        return fail(format!("realization bracket errored at ({i},{j})"));
                    };
                    let mut expected = SuperMatrix::zeros(mats[0].format.clone());
                    for (k, c) in &g.brackets[i][j] {
                        expected = expected.add(&mats[*k].scale(c));
                    }
                    if b != expected {
                        return fail(format!(
                            "matrix realization disagrees with structure constants at ({i},{j})"
                        ));
                    }
                }
            }
        }
        Realization::VectorField(fields) => {
            for i in 0..n {
                for j in 0..n {
                    let Ok(b) = fields[i].bracket(&fields[j]) else {
                        return fail(format!("field bracket errored at ({i},{j})"));
                    };
                    let mut expected = SuperVectorField::zero(fields[0].n);
                    for (k, c) in &g.brackets[i][j] {
                        expected = expected.add(&fields[*k].scale(c));
                    }
                    if b != expected {
                        return fail(format!(
                            "field realization disagrees with structure constants at ({i},{j})"
                        ));
                    }
                }
            }
        }
        Realization::None => {}
    }
    // grading compatibility: [L_a, L_b] inside L_{a+b}
    if let Some(deg) = &g.grading {
        for i in 0..n {
            for j in 0..n {
                for (k, _) in &g.brackets[i][j] {
                    if deg[*k] != deg[i] + deg[j] {
                        return fail(format!(
                            "grading violated: [{}, {}] hits degree {}",
                            g.basis_labels[i], g.basis_labels[j], deg[*k]
                        ));
                    }
                }
            }
        }
    }
    AlgebraReport {
        pass: true,
        failure: None,
    }
}

fn matrix_unit_label(i: usize, j: usize) -> String {
    format!("E{}{}", i + 1, j + 1)
}

/// The general linear Lie superalgebra of the given format.
pub fn build_gl(format: &Format) -> Result<LieSuperAlgebra> {
    if format.is_empty() {
        return Err(Error::InvalidParameter("empty format".into()));
    }
    let n = format.len();
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mats.push(SuperMatrix::unit(format.clone(), i, j));
            labels.push(matrix_unit_label(i, j));
        }
    }
    let (p, q) = format.sdim();
    from_matrices(&format!("gl({p}|{q})"), labels, mats)
}

/// The supertraceless subalgebra sl(format), with the deterministic basis
/// E_ij (i != j) and h_i = E_ii - (-1)^{p_i+p_{i+1}} E_{i+1,i+1}.
pub fn build_sl(format: &Format) -> Result<LieSuperAlgebra> {
    if format.len() < 2 {
        return Err(Error::InvalidParameter("sl needs dimension >= 2".into()));
    }
    let n = format.len();
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mats.push(SuperMatrix::unit(format.clone(), i, j));
                labels.push(matrix_unit_label(i, j));
            }
        }
    }
    for i in 0..n - 1 {
        let sign = (format.parity(i) + format.parity(i + 1)).sign_with(Parity::Odd);
        let c = if sign < 0 { Rat::one() } else { -Rat::one() };
        let m = SuperMatrix::unit(format.clone(), i, i)
            .add(&SuperMatrix::unit(format.clone(), i + 1, i + 1).scale(&c));
        debug_assert!(m.supertrace().is_zero());
        mats.push(m);
        labels.push(format!("h{}", i + 1));
    }
    let (p, q) = format.sdim();
    from_matrices(&format!("sl({p}|{q})"), labels, mats)
}

/// sl(1|1) with the catalog basis order [E, X+, X-]; E is the even center.
pub fn sl11() -> LieSuperAlgebra {
    let fmt = Format::standard(1, 1);
    let e = SuperMatrix::identity(fmt.clone());
    let xp = SuperMatrix::unit(fmt.clone(), 0, 1);
    let xm = SuperMatrix::unit(fmt, 1, 0);
    from_matrices(
        "sl(1|1)",
        vec!["E".into(), "X+".into(), "X-".into()],
        vec![e, xp, xm],
    )
    .expect("sl(1|1) construction")
}

/// A homogeneous bilinear form with its declared symmetry type.
#[derive(Clone, Debug)]
pub struct BilinearFormSpec {
    pub matrix: SuperMatrix,
    pub supersymmetric: bool,
}

impl BilinearFormSpec {
    /// B^u per the upsetting formula on 2x2 block matrices.
    pub fn upset(&self) -> Result<SuperMatrix> {
        let b = &self.matrix;
        let pb = b.homogeneous_parity()?.unwrap_or(Parity::Even);
        let fmt = &b.format;
        let n = fmt.len();
        let mut out = SuperMatrix::zeros(fmt.clone());
        for i in 0..n {
            for j in 0..n {
                let v = b.entry(j, i);
                if v.is_zero() {
                    continue;
                }
                // blocks: (R^t, (-1)^{p(B)} T^t ; (-1)^{p(B)} S^t, -U^t)
                let (pi, pj) = (fmt.parity(i), fmt.parity(j));
                let sign: i32 = match (pi, pj) {
                    (Parity::Even, Parity::Even) => 1,
                    (Parity::Odd, Parity::Odd) => -1,
                    _ => {
                        if pb.is_odd() {
                            -1
                        } else {
                            1
                        }
                    }
                };
                out.set(i, j, if sign < 0 { -v.clone() } else { v.clone() });
            }
        }
        Ok(out)
    }

    pub fn check_symmetry(&self) -> Result<bool> {
        let u = self.upset()?;
        Ok(if self.supersymmetric {
            u == self.matrix
        } else {
            u == self.matrix.neg()
        })
    }
}

/// The canonical even supersymmetric form B_ev(m|2n) = diag(1_m, J_2n).
pub fn b_even(m: usize, two_n: usize) -> BilinearFormSpec {
    assert!(two_n % 2 == 0);
    let n = two_n / 2;
    let fmt = Format::standard(m, two_n);
    let mut b = SuperMatrix::zeros(fmt);
    for i in 0..m {
        b.set(i, i, Rat::one());
    }
    for i in 0..n {
        b.set(m + i, m + n + i, Rat::one());
        b.set(m + n + i, m + i, -Rat::one());
    }
    BilinearFormSpec {
        matrix: b,
        supersymmetric: true,
    }
}

/// The canonical odd supersymmetric form on (n|n): J_2n.
pub fn b_odd_symmetric(n: usize) -> BilinearFormSpec {
    let fmt = Format::standard(n, n);
    let mut b = SuperMatrix::zeros(fmt);
    for i in 0..n {
        b.set(i, n + i, Rat::one());
        b.set(n + i, i, -Rat::one());
    }
    BilinearFormSpec {
        matrix: b,
        supersymmetric: true,
    }
}

/// The canonical odd super skew-symmetric form on (n|n): Pi_2n.
pub fn b_odd_skew(n: usize) -> BilinearFormSpec {
    let fmt = Format::standard(n, n);
    let mut b = SuperMatrix::zeros(fmt);
    for i in 0..n {
        b.set(i, n + i, Rat::one());
        b.set(n + i, i, Rat::one());
    }
    BilinearFormSpec {
        matrix: b,
        supersymmetric: false,
    }
}

/// aut(B): all X with X^st B + (-1)^{p(X)p(B)} B X = 0, solved exactly per
/// parity of X.
pub fn build_aut_form(name: &str, spec: &BilinearFormSpec) -> Result<LieSuperAlgebra> {
    let b = &spec.matrix;
    let pb = b.homogeneous_parity()?.unwrap_or(Parity::Even);
    let fmt = &b.format;
    let n = fmt.len();
    if b.to_qmat().rank() != n {
        return Err(Error::DegenerateForm);
    }
    let mut mats: Vec<SuperMatrix> = Vec::new();
    for px in [Parity::Even, Parity::Odd] {
        let mut positions = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if fmt.parity(i) + fmt.parity(j) == px {
                    positions.push((i, j));
                }
            }
        }
        if positions.is_empty() {
            continue;
        }
        let sign = px.sign_with(pb);
        let mut sys = QMat::zeros(n * n, positions.len());
        for (col, &(i, j)) in positions.iter().enumerate() {
            let x = SuperMatrix::unit(fmt.clone(), i, j);
            let xst = x.supertranspose()?;
            let mut m = xst.mul(b);
            let bx = b.mul(&x);
            m = if sign < 0 { m.sub(&bx) } else { m.add(&bx) };
            for r in 0..n {
                for c in 0..n {
                    sys[(r * n + c, col)] = m.entry(r, c).clone();
                }
            }
        }
        for k in sys.kernel_basis() {
            let mut m = SuperMatrix::zeros(fmt.clone());
            for (col, &(i, j)) in positions.iter().enumerate() {
                if !k[col].is_zero() {
                    m.set(i, j, k[col].clone());
                }
            }
            mats.push(m);
        }
    }
    let labels = (0..mats.len()).map(|i| format!("b{i}")).collect();
    from_matrices(name, labels, mats)
}

/// osp(m|2n) = aut(B_ev(m|2n)).
pub fn build_osp(m: usize, two_n: usize) -> Result<LieSuperAlgebra> {
    build_aut_form(&format!("osp({m}|{two_n})"), &b_even(m, two_n))
}

/// pe(n): the periplectic algebra; `symmetric` picks pe^sy (form J_2n)
/// versus pe^sk (form Pi_2n).
pub fn build_pe(n: usize, symmetric: bool) -> Result<LieSuperAlgebra> {
    let spec = if symmetric {
        b_odd_symmetric(n)
    } else {
        b_odd_skew(n)
    };
    let tag = if symmetric { "sy" } else { "sk" };
    build_aut_form(&format!("pe^{tag}({n})"), &spec)
}

/// spe(n) = { X in pe(n) : str X = 0 }.
pub fn build_spe(n: usize) -> Result<LieSuperAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter("spe needs n >= 2".into()));
    }
    let pe = build_pe(n, true)?;
    let mats = pe.realization_matrices().to_vec();
    let traces: Vec<Rat> = mats.iter().map(|m| m.supertrace()).collect();
    let sys = QMat::from_rows(vec![traces]);
    let sub: Vec<SuperMatrix> = sys
        .kernel_basis()
        .iter()
        .map(|k| {
            let mut m = SuperMatrix::zeros(mats[0].format.clone());
            for (idx, c) in k.iter().enumerate() {
                if !c.is_zero() {
                    m = m.add(&mats[idx].scale(c));
                }
            }
            m
        })
        .collect();
    let labels = (0..sub.len()).map(|i| format!("s{i}")).collect();
    from_matrices(&format!("spe({n})"), labels, sub)
}

/// Monomial basis of vect(0|n) in the deterministic order (|S|, S, i); the
/// grading deg xi^S d_i = |S| - 1 comes with it.
fn vect_basis(n: usize) -> (Vec<SuperVectorField>, Vec<String>, Vec<i64>) {
    let mut fields = Vec::new();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        for i in 1..=n {
            fields.push(SuperVectorField::monomial(n, mask, i));
            let xs: String = (0..n)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| format!("x{}", b + 1))
                .collect();
            labels.push(format!("{xs}d{i}"));
            degrees.push(mask.count_ones() as i64 - 1);
        }
    }
    (fields, labels, degrees)
}

fn field_degree(f: &SuperVectorField) -> Option<i64> {
    let mut deg = None;
    for c in &f.comps {
        for (m, _) in c.terms() {
            let d = m.count_ones() as i64 - 1;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
    }
    deg
}

fn attach_field_grading(g: &mut LieSuperAlgebra) {
    let fields = g.realization_fields();
    if !fields.is_empty() && fields.iter().all(|f| field_degree(f).is_some()) {
        g.grading = Some(fields.iter().map(|f| field_degree(f).unwrap()).collect());
    }
}

/// vect(0|n): all super vector fields on the (0|n)-dimensional superspace.
pub fn build_vect(n: usize) -> Result<LieSuperAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter("vect needs n >= 2".into()));
    }
    let (fields, labels, degrees) = vect_basis(n);
    let mut g = from_fields(&format!("vect(0|{n})"), labels, fields)?;
    g.grading = Some(degrees);
    Ok(g)
}

/// Kernel of a linear condition on the monomial basis of vect(0|n).
fn vect_subalgebra_by_condition(
    name: &str,
    n: usize,
    condition: impl Fn(&SuperVectorField) -> Result<Vec<Rat>>,
) -> Result<LieSuperAlgebra> {
    let (fields, _, _) = vect_basis(n);
    let cols: Vec<Vec<Rat>> = fields.iter().map(&condition).collect::<Result<_>>()?;
    let sys = QMat::from_cols(cols);
    let mut sub = Vec::new();
    for k in sys.kernel_basis() {
        let mut f = SuperVectorField::zero(n);
        for (idx, c) in k.iter().enumerate() {
            if !c.is_zero() {
                f = f.add(&fields[idx].scale(c));
            }
        }
        sub.push(f);
    }
    let labels = (0..sub.len()).map(|i| format!("v{i}")).collect();
    let mut g = from_fields(name, labels, sub)?;
    attach_field_grading(&mut g);
    Ok(g)
}

/// svect(0|n): divergence-free fields.
pub fn build_svect(n: usize) -> Result<LieSuperAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter("svect needs n >= 2".into()));
    }
    vect_subalgebra_by_condition(&format!("svect(0|{n})"), n, |f| {
        let div = f.divergence()?;
        Ok((0..(1u32 << n)).map(|m| div.coeff(m)).collect())
    })
}

/// svect~(0|n) for even n: fields with Div((1 + t Theta) D) = 0. For odd n
/// the deforming parameter is odd, which is out of scope.
pub fn build_svect_tilde(n: usize, t: &Rat) -> Result<LieSuperAlgebra> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidParameter(
            "svect~ supported for even n >= 2 only (odd n needs an odd parameter)".into(),
        ));
    }
    let theta = crate::grassmann::GrassmannElement::theta(n);
    vect_subalgebra_by_condition(&format!("svect~(0|{n})"), n, |f| {
        let mut scaled = SuperVectorField::zero(n);
        for (i, c) in f.comps.iter().enumerate() {
            let tc = theta.scale(t).mul(c)?;
            let mut g = SuperVectorField::zero(n);
            g.comps[i] = c.add(&tc);
            scaled = scaled.add(&g);
        }
        let div = scaled.divergence()?;
        Ok((0..(1u32 << n)).map(|m| div.coeff(m)).collect())
    })
}

/// h(0|n): fields annihilating omega = sum (dxi_i)^2 under the Lie derivative.
pub fn build_h(n: usize) -> Result<LieSuperAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter("h needs n >= 2".into()));
    }
    use crate::grassmann::FormPolynomial;
    let mut omega = FormPolynomial::zero(n);
    for i in 1..=n {
        let d = FormPolynomial::dxi(n, i);
        omega = omega.add(&d.mul(&d)?);
    }
    vect_subalgebra_by_condition(&format!("h(0|{n})"), n, |f| {
        let l = omega.lie_derivative(f)?;
        let mut out = Vec::new();
        for mask in 0..(1u32 << n) {
            for i in 0..n {
                for j in i..n {
                    let mut alpha = vec![0u32; n];
                    alpha[i] += 1;
                    alpha[j] += 1;
                    out.push(l.coeff(&(mask, alpha)));
                }
            }
        }
        Ok(out)
    })
}

/// sh(0|n): the derived subalgebra [h, h] of h(0|n).
pub fn build_sh(n: usize) -> Result<LieSuperAlgebra> {
    let h = build_h(n)?;
    let fields = h.realization_fields().to_vec();
    let mut spanning = Vec::new();
    for i in 0..fields.len() {
        for j in 0..fields.len() {
            let b = fields[i].bracket(&fields[j])?;
            if !b.is_zero() {
                spanning.push(b);
            }
        }
    }
    if spanning.is_empty() {
        return Err(Error::VerificationFailed("derived subalgebra is zero".into()));
    }
    let mat = QMat::from_cols(spanning.iter().map(flatten_field).collect());
    let sub: Vec<SuperVectorField> = mat
        .image_basis()
        .iter()
        .map(|v| {
            let mut f = SuperVectorField::zero(n);
            for (idx, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let comp = idx / (1 << n);
                    let mask = (idx % (1 << n)) as u32;
                    let mut g = SuperVectorField::zero(n);
                    g.comps[comp] =
                        crate::grassmann::GrassmannElement::monomial(n, mask, c.clone());
                    f = f.add(&g);
                }
            }
            f
        })
        .collect();
    let labels = (0..sub.len()).map(|i| format!("s{i}")).collect();
    let mut g = from_fields(&format!("sh(0|{n})"), labels, sub)?;
    attach_field_grading(&mut g);
    Ok(g)
}

/// An embedded subalgebra: its own structure constants plus the coordinates
/// of its basis inside the parent.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: Arc<LieSuperAlgebra>,
    /// embed[i] = coordinates of sub basis element i in the parent basis.
    pub embed: Vec<Vec<Rat>>,
}

/// The graded pieces of an algebra with a Z-grading.
#[derive(Clone, Debug)]
pub struct GradedParts {
    pub degrees: Vec<i64>,
    /// Basis indices per degree, ascending by degree.
    pub components: Vec<(i64, Vec<usize>)>,
}

pub fn graded_parts(g: &LieSuperAlgebra) -> Result<GradedParts> {
    let deg = g
        .grading
        .as_ref()
        .ok_or_else(|| Error::Grading("algebra carries no grading".into()))?;
    let mut degrees: Vec<i64> = deg.clone();
    degrees.sort_unstable();
    degrees.dedup();
    let components = degrees
        .iter()
        .map(|d| {
            (
                *d,
                (0..g.dim()).filter(|i| deg[*i] == *d).collect::<Vec<_>>(),
            )
        })
        .collect();
    Ok(GradedParts {
        degrees,
        components,
    })
}

impl GradedParts {
    /// Basis indices of the aggregate selected by the degree predicate
    /// (L_>= is `|d| d >= 0`, L_> is `|d| d > 0`, and so on).
    pub fn indices_where(&self, pred: impl Fn(i64) -> bool) -> Vec<usize> {
        self.components
            .iter()
            .filter(|(d, _)| pred(*d))
            .flat_map(|(_, v)| v.iter().copied())
            .collect()
    }
}

/// Extracts the subalgebra spanned by the given parent basis indices; errors
/// when the span is not bracket-closed.
pub fn extract_subalgebra(g: &Arc<LieSuperAlgebra>, indices: &[usize]) -> Result<Subalgebra> {
    let m = indices.len();
    let pos: std::collections::HashMap<usize, usize> =
        indices.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    let mut brackets = vec![vec![Vec::new(); m]; m];
    for a in 0..m {
        for b in 0..m {
            for (k, c) in g.bracket_basis(indices[a], indices[b]) {
                match pos.get(k) {
                    Some(&t) => brackets[a][b].push((t, c.clone())),
                    None => {
                        return Err(Error::VerificationFailed(
                            "index set is not bracket-closed".into(),
                        ))
                    }
                }
            }
        }
    }
    let sub = LieSuperAlgebra {
        name: format!("{}[sub]", g.name),
        basis_labels: indices
            .iter()
            .map(|&i| g.basis_labels[i].clone())
            .collect(),
        parities: Format(indices.iter().map(|&i| g.parity(i)).collect()),
        brackets,
        realization: Realization::None,
        grading: g
            .grading
            .as_ref()
            .map(|d| indices.iter().map(|&i| d[i]).collect()),
    };
    let embed = indices
        .iter()
        .map(|&i| {
            let mut v = vec![rzero(); g.dim()];
            v[i] = Rat::one();
            v
        })
        .collect();
    Ok(Subalgebra {
        algebra: Arc::new(sub),
        embed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    #[test]
    fn gl_and_sl_dimensions() {
        let gl11 = build_gl(&Format::standard(1, 1)).unwrap();
        assert_eq!(gl11.sdim(), (2, 2));
        assert!(verify_algebra(&gl11).pass);
        let sl = build_sl(&Format::standard(1, 1)).unwrap();
        assert_eq!(sl.sdim(), (1, 2));
        // the even basis element is central
        let h_idx = sl.basis_labels.iter().position(|l| l == "h1").unwrap();
        for j in 0..sl.dim() {
            assert!(sl.bracket_basis(h_idx, j).is_empty());
        }
        let sl12 = build_sl(&Format::standard(1, 2)).unwrap();
        assert_eq!(sl12.sdim(), (4, 4));
        assert!(verify_algebra(&sl12).pass);
        for m in sl12.realization_matrices() {
            assert!(m.supertrace().is_zero());
        }
    }

    #[test]
    fn sl11_catalog_basis() {
        let g = sl11();
        assert!(verify_algebra(&g).pass);
        assert_eq!(g.sdim(), (1, 2));
        assert_eq!(g.bracket_basis(1, 2), &vec![(0, rint(1))]);
        assert!(g.bracket_basis(0, 1).is_empty());
        assert!(g.bracket_basis(1, 1).is_empty());
    }

    #[test]
    fn gl32_passes_verification() {
        assert!(verify_algebra(&build_gl(&Format::standard(3, 2)).unwrap()).pass);
    }

    #[test]
    fn corrupted_structure_constant_fails() {
        let mut g = sl11();
        g.brackets[1][2] = vec![(0, rint(2))];
        let rep = verify_algebra(&g);
        assert!(!rep.pass);
        assert!(rep.failure.unwrap().contains("antisymmetry"));
        // break Jacobi while keeping antisymmetry: [E, X+] = X-
        let mut g2 = sl11();
        g2.brackets[0][1] = vec![(2, rint(1))];
        g2.brackets[1][0] = vec![(2, rint(-1))];
        g2.realization = Realization::None;
        assert!(!verify_algebra(&g2).pass);
    }

    #[test]
    fn forms_have_declared_symmetry() {
        assert!(b_even(2, 2).check_symmetry().unwrap());
        assert!(b_odd_symmetric(2).check_symmetry().unwrap());
        assert!(b_odd_skew(2).check_symmetry().unwrap());
    }

    #[test]
    fn osp22_dimensions() {
        let g = build_osp(2, 2).unwrap();
        assert_eq!(g.sdim(), (4, 4));
        assert!(verify_algebra(&g).pass);
    }

    #[test]
    fn osp_block_shape_matches_canonical_form() {
        for (m, two_n) in [(2usize, 2usize), (2, 4)] {
            let g = build_osp(m, two_n).unwrap();
            let n = two_n / 2;
            for mat in g.realization_matrices() {
                // E block skew
                for i in 0..m {
                    for j in 0..m {
                        assert_eq!(mat.entry(i, j), &-mat.entry(j, i).clone());
                    }
                }
                // sp block [[A,B],[C,-A^t]] with B, C symmetric
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(
                            mat.entry(m + i, m + j),
                            &-mat.entry(m + n + j, m + n + i).clone()
                        );
                        assert_eq!(mat.entry(m + i, m + n + j), mat.entry(m + j, m + n + i));
                        assert_eq!(mat.entry(m + n + i, m + j), mat.entry(m + n + j, m + i));
                    }
                }
                // odd blocks: (E Y X^t / X A B / -Y^t C -A^t)
                for i in 0..m {
                    for j in 0..n {
                        assert_eq!(mat.entry(i, m + n + j), mat.entry(m + j, i));
                        assert_eq!(mat.entry(m + n + j, i), &-mat.entry(i, m + j).clone());
                    }
                }
            }
        }
    }

    #[test]
    fn pe_blocks() {
        let g = build_pe(2, true).unwrap();
        assert!(verify_algebra(&g).pass);
        assert_eq!(g.sdim(), (4, 4));
        for mat in g.realization_matrices() {
            // [[A, B], [C, -A^t]] with B = -B^t, C = C^t
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(mat.entry(i, j), &-mat.entry(2 + j, 2 + i).clone());
                    assert_eq!(mat.entry(i, 2 + j), &-mat.entry(j, 2 + i).clone());
                    assert_eq!(mat.entry(2 + i, j), mat.entry(2 + j, i));
                }
            }
        }
    }

    #[test]
    fn spe_dimensions_match_svect03() {
        let pe2 = build_pe(2, true).unwrap();
        let spe2 = build_spe(2).unwrap();
        assert_eq!(spe2.dim(), pe2.dim() - 1);
        for m in spe2.realization_matrices() {
            assert!(m.supertrace().is_zero());
        }
        let spe3 = build_spe(3).unwrap();
        let svect3 = build_svect(3).unwrap();
        assert!(verify_algebra(&spe3).pass);
        assert!(verify_algebra(&svect3).pass);
        assert_eq!(spe3.sdim(), svect3.sdim());
    }

    #[test]
    fn vect_dimensions_and_grading() {
        let v = build_vect(2).unwrap();
        assert_eq!(v.sdim(), (4, 4));
        assert!(verify_algebra(&v).pass);
        let parts = graded_parts(&v).unwrap();
        assert_eq!(parts.degrees, vec![-1, 0, 1]);
        let dims: Vec<usize> = parts.components.iter().map(|(_, v)| v.len()).collect();
        assert_eq!(dims, vec![2, 4, 2]);
        // L_{-1} is purely odd and abelian
        let lm1 = &parts.components[0].1;
        for &i in lm1 {
            assert!(v.parity(i).is_odd());
            for &j in lm1 {
                assert!(v.bracket_basis(i, j).is_empty());
            }
        }
        assert!(verify_algebra(&build_vect(3).unwrap()).pass);
    }

    #[test]
    fn svect_is_divergence_kernel_and_bracket_closed() {
        let s = build_svect(2).unwrap();
        assert!(verify_algebra(&s).pass);
        for f in s.realization_fields() {
            assert!(f.divergence().unwrap().is_zero());
            for g in s.realization_fields() {
                assert!(f.bracket(g).unwrap().divergence().unwrap().is_zero());
            }
        }
        let st = build_svect_tilde(2, &rat(1, 1)).unwrap();
        assert!(verify_algebra(&st).pass);
        assert!(build_svect_tilde(3, &rat(1, 1)).is_err());
    }

    #[test]
    fn hamiltonian_algebras() {
        let h4 = build_h(4).unwrap();
        assert!(verify_algebra(&h4).pass);
        let sh4 = build_sh(4).unwrap();
        assert!(verify_algebra(&sh4).pass);
        assert!(sh4.dim() < h4.dim());
    }

    #[test]
    fn aut_condition_closed_under_bracket() {
        let spec = b_even(2, 2);
        let g = build_osp(2, 2).unwrap();
        let b = &spec.matrix;
        for x in g.realization_matrices() {
            for y in g.realization_matrices() {
                let z = x.supercommutator(y).unwrap();
                let pz = z.homogeneous_parity().unwrap().unwrap_or(Parity::Even);
                let lhs = z.supertranspose().unwrap().mul(b);
                let rhs = b.mul(&z);
                let total = if pz.sign_with(Parity::Even) < 0 {
                    unreachable!()
                } else if pz.is_odd() {
                    // p(B) even: sign (+1) regardless of p(X)
                    lhs.add(&rhs)
                } else {
                    lhs.add(&rhs)
                };
                assert!(total.is_zero());
            }
        }
    }

    #[test]
    fn sl12_compatible_grading() {
        let mut g = build_sl(&Format::standard(1, 2)).unwrap();
        let deg_of = |label: &str| -> i64 {
            if label.starts_with('h') {
                return 0;
            }
            let b: Vec<u32> = label[1..].chars().map(|c| c.to_digit(10).unwrap()).collect();
            i64::from(b[1] > 1) - i64::from(b[0] > 1)
        };
        g.grading = Some(g.basis_labels.iter().map(|l| deg_of(l)).collect());
        let rep = verify_algebra(&g);
        assert!(rep.pass, "{:?}", rep.failure);
        assert_eq!(graded_parts(&g).unwrap().degrees, vec![-1, 0, 1]);
    }
}
