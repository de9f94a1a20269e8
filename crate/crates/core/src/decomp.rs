//! Intertwiner spaces, endomorphism algebras, Jacobson radicals,
//! indecomposability, Krull-Schmidt decomposition, and isomorphism testing.

use crate::error::{Error, Result};
use crate::linalg::{sparse_kernel, Format, Parity, QMat, RrefSieve, Solver, SparseVec, SuperSpace};
use crate::rat::{rone, rzero, Rat};
use crate::rep::{verify_representation, Representation};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Basis of the space of intertwiners V -> W, split by parity. An
/// intertwiner of parity s satisfies rho_W(x) T = (-1)^{p(x) s} T rho_V(x).
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub even: Vec<QMat>,
    pub odd: Vec<QMat>,
}

impl HomSpace {
    pub fn dims(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }
}

/// Solves the intertwiner equations exactly, one sparse kernel per parity.
pub fn hom_space(v: &Representation, w: &Representation) -> HomSpace {
    let (dv, dw) = (v.dim(), w.dim());
    let mut out = HomSpace {
        even: Vec::new(),
        odd: Vec::new(),
    };
    for t_parity in [Parity::Even, Parity::Odd] {
        // unknowns: entries T_{ij} (i over W, j over V) with the support of a
        // parity-homogeneous map: p^W_i + p^V_j = t_parity
        let mut cols = Vec::new();
        let mut col_of = vec![usize::MAX; dw * dv];
        for i in 0..dw {
            for j in 0..dv {
                if w.format().parity(i) + v.format().parity(j) == t_parity {
                    col_of[i * dv + j] = cols.len();
                    cols.push((i, j));
                }
            }
        }
        if cols.is_empty() {
            continue;
        }
        let mut rows: Vec<SparseVec> = Vec::new();
        for x in 0..v.algebra.dim() {
            let sign = v.algebra.parity(x).sign_with(t_parity);
            // rho_W(x) T - sign * T rho_V(x) = 0, entries over (r over W, c over V)
            for r in 0..dw {
                for c in 0..dv {
                    let mut row: Vec<(u32, Rat)> = Vec::new();
                    // sum_i rho_W(x)_{r i} T_{i c}
                    for i in 0..dw {
                        let e = w.action[x].entry(r, i);
                        if !e.is_zero() && col_of[i * dv + c] != usize::MAX {
                            row.push((col_of[i * dv + c] as u32, e.clone()));
                        }
                    }
                    // - sign * sum_j T_{r j} rho_V(x)_{j c}
                    for j in 0..dv {
                        let e = v.action[x].entry(j, c);
                        if !e.is_zero() && col_of[r * dv + j] != usize::MAX {
                            let val = if sign < 0 { e.clone() } else { -e.clone() };
                            row.push((col_of[r * dv + j] as u32, val));
                        }
                    }
                    if !row.is_empty() {
                        row.sort_by_key(|(c, _)| *c);
                        // merge duplicates
                        let mut merged: SparseVec = Vec::with_capacity(row.len());
                        for (c, val) in row {
                            match merged.last_mut() {
                                Some((lc, lv)) if *lc == c => *lv += val,
                                _ => merged.push((c, val)),
                            }
                        }
                        merged.retain(|(_, v)| !v.is_zero());
                        if !merged.is_empty() {
                            rows.push(merged);
                        }
                    }
                }
            }
        }
        let kernel = sparse_kernel(&rows, cols.len());
        let target = if t_parity.is_odd() {
            &mut out.odd
        } else {
            &mut out.even
        };
        for k in kernel {
            let mut t = QMat::zeros(dw, dv);
            for (idx, &(i, j)) in cols.iter().enumerate() {
                if !k[idx].is_zero() {
                    t[(i, j)] = k[idx].clone();
                }
            }
            target.push(t);
        }
    }
    out
}

/// A unital matrix algebra given by a basis of parity-even maps with its
/// derived multiplication table.
pub struct MatrixAlgebra {
    pub ambient_dim: usize,
    pub basis: Vec<QMat>,
    /// mult[i][j] = coordinates of basis[i] * basis[j]
    pub mult: Vec<Vec<Vec<Rat>>>,
    /// coordinates of the identity map
    pub one: Vec<Rat>,
}

impl MatrixAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Builds the algebra from a linearly independent, multiplicatively
    /// closed basis containing the identity in its span.
    pub fn from_basis(ambient_dim: usize, basis: Vec<QMat>) -> Result<MatrixAlgebra> {
        let e = basis.len();
        let flat = |m: &QMat| -> Vec<Rat> {
            let mut v = Vec::with_capacity(ambient_dim * ambient_dim);
            for i in 0..ambient_dim {
                v.extend(m.row(i).iter().cloned());
            }
            v
        };
        let span = QMat::from_cols(basis.iter().map(&flat).collect());
        let solver = Solver::new(&span);
        let mut mult = vec![vec![Vec::new(); e]; e];
        for i in 0..e {
            for j in 0..e {
                let p = basis[i].mul(&basis[j]);
                mult[i][j] = solver.solve(&flat(&p)).ok_or_else(|| {
                    Error::VerificationFailed("algebra basis not closed under product".into())
                })?;
            }
        }
        let one = solver
            .solve(&flat(&QMat::identity(ambient_dim)))
            .ok_or_else(|| Error::VerificationFailed("identity outside the algebra".into()))?;
        Ok(MatrixAlgebra {
            ambient_dim,
            basis,
            mult,
            one,
        })
    }

    pub fn multiply(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let e = self.dim();
        let mut out = vec![rzero(); e];
        for i in 0..e {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..e {
                if b[j].is_zero() {
                    continue;
                }
                let c = &a[i] * &b[j];
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &c * m;
                    }
                }
            }
        }
        out
    }

    pub fn element(&self, coords: &[Rat]) -> QMat {
        let mut m = QMat::zeros(self.ambient_dim, self.ambient_dim);
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for r in 0..self.ambient_dim {
                for s in 0..self.ambient_dim {
                    if !self.basis[i][(r, s)].is_zero() {
                        m[(r, s)] += c * &self.basis[i][(r, s)];
                    }
                }
            }
        }
        m
    }
}

/// The even endomorphism algebra of a module.
pub fn end_algebra(v: &Representation) -> MatrixAlgebra {
    let hom = hom_space(v, v);
    MatrixAlgebra::from_basis(v.dim(), hom.even)
        .expect("even intertwiners are closed under composition")
}

/// Jacobson radical as the null space of the trace form of the left-regular
/// representation (valid in characteristic zero).
pub fn radical(a: &MatrixAlgebra) -> Vec<Vec<Rat>> {
    let e = a.dim();
    // t[m] = trace of left multiplication by basis m
    let mut t = vec![rzero(); e];
    for m in 0..e {
        for k in 0..e {
            t[m] += &a.mult[m][k][k];
        }
    }
    let mut gram = QMat::zeros(e, e);
    for i in 0..e {
        for j in 0..e {
            let mut s = rzero();
            for (m, c) in a.mult[i][j].iter().enumerate() {
                if !c.is_zero() {
                    s += c * &t[m];
                }
            }
            gram[(i, j)] = s;
        }
    }
    gram.kernel_basis()
}

/// true iff the even endomorphism algebra is local.
pub fn is_indecomposable(v: &Representation) -> bool {
    let a = end_algebra(v);
    let r = radical(&a);
    a.dim() - r.len() == 1
}

// ---- polynomial helpers over Q (ascending coefficients) ----

fn poly_trim(p: &mut Vec<Rat>) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = rzero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return (vec![rzero()], rem);
    }
    let mut quot = vec![rzero(); rem.len() - dd];
    let lead = den[dd].clone();
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let sub = &c * d;
            rem[k + i] -= sub;
        }
    }
    poly_trim(&mut rem);
    (quot, rem)
}

/// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
fn poly_xgcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let (mut s0, mut s1) = (vec![rone()], vec![rzero()]);
    let (mut t0, mut t1) = (vec![rzero()], vec![rone()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
        let next_t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = next_s;
        t0 = t1;
        t1 = next_t;
    }
    // normalize monic
    let lead = r0.last().unwrap().clone();
    let scale = |p: &[Rat]| -> Vec<Rat> { p.iter().map(|c| c / &lead).collect() };
    (scale(&r0), scale(&s0), scale(&t0))
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![rzero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![rzero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n: i64 = n.abs().try_into().ok()?;
    if n == 0 {
        return Some(vec![]);
    }
    if n > 10_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots of a polynomial over Q, by the rational root theorem.
fn rational_roots(p: &[Rat]) -> Vec<Rat> {
    let mut p = p.to_vec();
    poly_trim(&mut p);
    let mut roots = Vec::new();
    // factor out x^k
    let mut q = p.clone();
    while q[0].is_zero() && q.len() > 1 {
        roots.push(rzero());
        q.remove(0);
    }
    if q.len() <= 1 {
        roots.dedup();
        return roots;
    }
    // clear denominators
    let mut lcm = BigInt::one();
    for c in &q {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let int_coeffs: Vec<BigInt> = q
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let (Some(p_divs), Some(q_divs)) = (
        small_divisors(&int_coeffs[0]),
        small_divisors(int_coeffs.last().unwrap()),
    ) else {
        return roots;
    };
    for pd in &p_divs {
        for qd in &q_divs {
            for sign in [1i64, -1] {
                let cand = Rat::new(BigInt::from(sign * pd), BigInt::from(*qd));
                if poly_eval(&q, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand.clone());
                }
            }
        }
    }
    roots
}

/// Arithmetic in the quotient A/rad via radical-pivot elimination.
struct Quotient<'a> {
    alg: &'a MatrixAlgebra,
    sieve_rows: Vec<(usize, Vec<Rat>)>,
}

impl<'a> Quotient<'a> {
    fn new(alg: &'a MatrixAlgebra, rad: &[Vec<Rat>]) -> Quotient<'a> {
        let mut sieve = RrefSieve::new();
        for r in rad {
            sieve.try_insert(r.clone());
        }
        Quotient {
            alg,
            sieve_rows: sieve.rows().to_vec(),
        }
    }

    fn reduce(&self, v: &mut Vec<Rat>) {
        for (p, row) in &self.sieve_rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
        }
    }

    fn mul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut p = self.alg.multiply(a, b);
        self.reduce(&mut p);
        p
    }

    /// Minimal polynomial of the class of x in A/rad.
    fn minpoly(&self, x: &[Rat]) -> Vec<Rat> {
        let e = self.alg.dim();
        let mut x = x.to_vec();
        self.reduce(&mut x);
        let mut sieve = RrefSieve::new();
        let mut powers: Vec<Vec<Rat>> = Vec::new();
        let mut cur = self.alg.one.clone();
        self.reduce(&mut cur);
        loop {
            if !sieve.try_insert(cur.clone()) {
                // cur is a combination of the earlier powers
                let mat = QMat::from_cols(powers.clone());
                let coeffs = Solver::new(&mat).solve(&cur).expect("dependence");
                let mut p: Vec<Rat> = coeffs.iter().map(|c| -c.clone()).collect();
                p.push(rone());
                return p;
            }
            powers.push(cur.clone());
            if powers.len() > e + 1 {
                unreachable!("minimal polynomial search exceeded the dimension");
            }
            cur = self.mul(&cur, &x);
        }
    }
}

/// A nontrivial idempotent of the even endomorphism algebra, found via
/// minimal-polynomial splitting in the semisimple quotient followed by the
/// cubic lifting iteration. Also returns the number of lifting steps taken.
fn find_idempotent(alg: &MatrixAlgebra, rad: &[Vec<Rat>]) -> Result<(Vec<Rat>, usize)> {
    let e = alg.dim();
    let quot = Quotient::new(alg, rad);
    let mut candidates: Vec<Vec<Rat>> = Vec::new();
    for i in 0..e {
        let mut v = vec![rzero(); e];
        v[i] = rone();
        candidates.push(v);
    }
    for i in 0..e {
        for j in (i + 1)..e {
            let mut v = vec![rzero(); e];
            v[i] = rone();
            v[j] = rone();
            candidates.push(v);
            let mut w = vec![rzero(); e];
            w[i] = rone();
            w[j] = -rone();
            candidates.push(w);
        }
    }
    for cand in candidates {
        let mut c = cand.clone();
        quot.reduce(&mut c);
        if c.iter().all(|x| x.is_zero()) {
            continue;
        }
        let m = quot.minpoly(&c);
        if m.len() <= 2 {
            continue; // scalar in the quotient
        }
        for root in rational_roots(&m) {
            // coprime split m = (x - r)^a * g
            let mut g = m.clone();
            let lin = vec![-root.clone(), rone()];
            let mut a_factor = vec![rone()];
            loop {
                let (q, r) = poly_divmod(&g, &lin);
                if r.len() == 1 && r[0].is_zero() {
                    g = q;
                    a_factor = poly_mul(&a_factor, &lin);
                } else {
                    break;
                }
            }
            if g.len() <= 1 {
                continue; // (x-r)^k: no split from this root
            }
            // Bezout: u*a_factor + v*g = 1; idempotent = (v*g)(x)
            let (gcd, u, v) = poly_xgcd(&a_factor, &g);
            debug_assert!(gcd.len() == 1);
            let _ = u;
            let vg = poly_mul(&v, &g);
            // evaluate vg at the candidate inside A (not the quotient):
            // the result is idempotent mod rad; then lift
            let mut acc = vec![rzero(); e];
            let mut pow = alg.one.clone();
            for coeff in &vg {
                if !coeff.is_zero() {
                    for (t, p) in pow.iter().enumerate() {
                        acc[t] += coeff * p;
                    }
                }
                pow = alg.multiply(&pow, &cand);
            }
            // cubic lifting: e <- 3e^2 - 2e^3 until exactly idempotent
            let mut steps = 0usize;
            let bound = (usize::BITS - (e.max(2) - 1).leading_zeros()) as usize + 2;
            loop {
                let sq = alg.multiply(&acc, &acc);
                if sq == acc {
                    break;
                }
                steps += 1;
                if steps > bound {
                    return Err(Error::VerificationFailed(
                        "idempotent lifting failed to converge".into(),
                    ));
                }
                let cube = alg.multiply(&sq, &acc);
                acc = acc
                    .iter()
                    .zip(sq.iter().zip(&cube))
                    .map(|(_, (s, c))| s * &crate::rat::rint(3) - c * &crate::rat::rint(2))
                    .collect();
            }
            // nontrivial?
            let zero = acc.iter().all(|x| x.is_zero());
            let one = acc
                .iter()
                .zip(&alg.one)
                .all(|(a, b)| a == b);
            if !zero && !one {
                return Ok((acc, steps));
            }
        }
    }
    Err(Error::FieldExtensionNeeded(
        "no rational splitting element in the endomorphism algebra".into(),
    ))
}

/// One indecomposable summand with its basis inside the parent module.
#[derive(Clone, Debug)]
pub struct Summand {
    pub rep: Representation,
    pub multiplicity: usize,
}

/// Result of a Krull-Schmidt decomposition: pairwise-grouped indecomposable
/// summands and the change-of-basis witness. Conjugating the original action
/// by the inverse witness produces the block-diagonal direct sum.
pub struct DecompositionReport {
    pub summands: Vec<Summand>,
    /// columns: the concatenated summand bases expressed in the parent basis
    pub witness: QMat,
    /// all indecomposable pieces in witness order (before grouping)
    pub pieces: Vec<Representation>,
    pub lifting_steps_max: usize,
}

fn parity_indices(fmt: &Format) -> (Vec<usize>, Vec<usize>) {
    let mut ev = Vec::new();
    let mut od = Vec::new();
    for i in 0..fmt.len() {
        if fmt.parity(i).is_odd() {
            od.push(i);
        } else {
            ev.push(i);
        }
    }
    (ev, od)
}

/// Extracts the submodule spanned by the (homogeneous) columns of `basis`.
fn restrict_to_basis(v: &Representation, basis: &QMat, parities: &[Parity]) -> Representation {
    let solver = Solver::new(basis);
    let action = v
        .action
        .iter()
        .map(|m| {
            let mut sub = crate::linalg::SuperMatrix::zeros(Format(parities.to_vec()));
            for col in 0..basis.cols {
                let img = m.to_qmat().mul_vec(&basis.col(col));
                let coords = solver
                    .solve(&img)
                    .expect("submodule not invariant under the action");
                for (r, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        sub.set(r, col, c.clone());
                    }
                }
            }
            sub
        })
        .collect();
    let mut rep = Representation::new(
        v.algebra.clone(),
        SuperSpace::new(Format(parities.to_vec())),
        action,
    );
    // weights restrict when the basis columns are weight-homogeneous
    if let Some(ws) = &v.weights {
        let mut sub_ws = Vec::with_capacity(basis.cols);
        let mut ok = true;
        'cols: for col in 0..basis.cols {
            let mut w: Option<i64> = None;
            for r in 0..basis.rows {
                if !basis[(r, col)].is_zero() {
                    match w {
                        None => w = Some(ws[r]),
                        Some(x) if x != ws[r] => {
                            ok = false;
                            break 'cols;
                        }
                        _ => {}
                    }
                }
            }
            sub_ws.push(w.unwrap_or(0));
        }
        if ok {
            rep.weights = Some(sub_ws);
        }
    }
    rep
}

/// Splits V along an idempotent even endomorphism into image and kernel
/// submodules; returns (sub-representation, basis) pairs.
fn split_by_idempotent(
    v: &Representation,
    e: &QMat,
) -> ((Representation, QMat), (Representation, QMat)) {
    let d = v.dim();
    let (ev_idx, od_idx) = parity_indices(v.format());
    let mut parts: Vec<(QMat, Vec<Parity>)> = Vec::new();
    for keep_image in [true, false] {
        let mut cols: Vec<Vec<Rat>> = Vec::new();
        let mut parities = Vec::new();
        for (idx_set, p) in [(&ev_idx, Parity::Even), (&od_idx, Parity::Odd)] {
            if idx_set.is_empty() {
                continue;
            }
            // block of e on this parity part
            let mut blk = QMat::zeros(idx_set.len(), idx_set.len());
            for (a, &i) in idx_set.iter().enumerate() {
                for (b, &j) in idx_set.iter().enumerate() {
                    blk[(a, b)] = e[(i, j)].clone();
                }
            }
            let vecs = if keep_image {
                blk.image_basis()
            } else {
                blk.kernel_basis()
            };
            for vsub in vecs {
                let mut full = vec![rzero(); d];
                for (a, &i) in idx_set.iter().enumerate() {
                    full[i] = vsub[a].clone();
                }
                cols.push(full);
                parities.push(p);
            }
        }
        let basis = QMat::from_cols(cols);
        parts.push((basis, parities));
    }
    let (b1, p1) = parts.remove(0);
    let (b2, p2) = parts.remove(0);
    let r1 = restrict_to_basis(v, &b1, &p1);
    let r2 = restrict_to_basis(v, &b2, &p2);
    ((r1, b1), (r2, b2))
}

fn decompose_rec(
    v: &Representation,
    pieces: &mut Vec<(Representation, QMat)>,
    basis_in_parent: QMat,
    max_steps: &mut usize,
) -> Result<()> {
    let alg = end_algebra(v);
    let rad = radical(&alg);
    if alg.dim() - rad.len() == 1 {
        pieces.push((v.clone(), basis_in_parent));
        return Ok(());
    }
    let (idem, steps) = find_idempotent(&alg, &rad)?;
    *max_steps = (*max_steps).max(steps);
    let e = alg.element(&idem);
    let ((r1, b1), (r2, b2)) = split_by_idempotent(v, &e);
    debug_assert!(r1.dim() > 0 && r2.dim() > 0);
    decompose_rec(&r1, pieces, basis_in_parent.mul(&b1), max_steps)?;
    decompose_rec(&r2, pieces, basis_in_parent.mul(&b2), max_steps)?;
    Ok(())
}

/// Krull-Schmidt decomposition into pairwise-indecomposable summands.
pub fn decompose(v: &Representation) -> Result<DecompositionReport> {
    debug_assert!(verify_representation(v).pass);
    let mut pieces = Vec::new();
    let mut max_steps = 0;
    decompose_rec(v, &mut pieces, QMat::identity(v.dim()), &mut max_steps)?;
    // group by isomorphism
    let mut summands: Vec<Summand> = Vec::new();
    for (rep, _) in &pieces {
        match summands
            .iter_mut()
            .find(|s| are_isomorphic(&s.rep, rep).is_some())
        {
            Some(s) => s.multiplicity += 1,
            None => summands.push(Summand {
                rep: rep.clone(),
                multiplicity: 1,
            }),
        }
    }
    let witness_cols: Vec<Vec<Rat>> = pieces
        .iter()
        .flat_map(|(_, b)| (0..b.cols).map(move |c| b.col(c)))
        .collect();
    Ok(DecompositionReport {
        summands,
        witness: QMat::from_cols(witness_cols),
        pieces: pieces.into_iter().map(|(r, _)| r).collect(),
        lifting_steps_max: max_steps,
    })
}

/// Isomorphism test for indecomposable modules via the Fitting pairing: f is
/// invertible exactly when some g has g f outside the radical of End(V).
fn indecomposable_iso(v: &Representation, w: &Representation) -> Option<QMat> {
    if v.sdim() != w.sdim() {
        return None;
    }
    let fwd = hom_space(v, w).even;
    if fwd.is_empty() {
        return None;
    }
    let back = hom_space(w, v).even;
    if back.is_empty() {
        return None;
    }
    let alg = end_algebra(v);
    let rad = radical(&alg);
    let mut sieve = RrefSieve::new();
    for r in &rad {
        sieve.try_insert(r.clone());
    }
    let flat = |m: &QMat| -> Vec<Rat> {
        let mut out = Vec::with_capacity(m.rows * m.cols);
        for i in 0..m.rows {
            out.extend(m.row(i).iter().cloned());
        }
        out
    };
    let span = QMat::from_cols(alg.basis.iter().map(&flat).collect());
    let solver = Solver::new(&span);
    for f in &fwd {
        for g in &back {
            let gf = g.mul(f);
            let coords = solver.solve(&flat(&gf)).expect("gf is an endomorphism");
            let mut c = coords;
            if !sieve.reduce(&mut c) {
                return Some(f.clone());
            }
        }
    }
    None
}

/// Deterministic fast path: looks for an invertible element among a fixed
/// schedule of combinations of the hom basis.
fn det_point_search(hom: &[QMat], dim: usize) -> Option<QMat> {
    if hom.is_empty() {
        return None;
    }
    let mut schedule: Vec<Vec<i64>> = Vec::new();
    for i in 0..hom.len() {
        let mut v = vec![0i64; hom.len()];
        v[i] = 1;
        schedule.push(v);
    }
    schedule.push(vec![1; hom.len()]);
    for t in 2..=(dim as i64 + 1).min(8) {
        let mut v = Vec::with_capacity(hom.len());
        let mut p = 1i64;
        for _ in 0..hom.len() {
            v.push(p);
            p = p.saturating_mul(t);
        }
        schedule.push(v);
    }
    for coeffs in schedule {
        let mut m = QMat::zeros(dim, dim);
        for (i, c) in coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let cr = crate::rat::rint(*c);
            for r in 0..dim {
                for s in 0..dim {
                    if !hom[i][(r, s)].is_zero() {
                        m[(r, s)] += &cr * &hom[i][(r, s)];
                    }
                }
            }
        }
        if m.inverse().is_some() {
            return Some(m);
        }
    }
    None
}

/// Tests for an even isomorphism and returns one as a witness. The fast path
/// evaluates the generic-element determinant at deterministic points; the
/// complete path decomposes both sides and matches indecomposable summands
/// with the radical pairing.
pub fn are_isomorphic(v: &Representation, w: &Representation) -> Option<QMat> {
    if v.sdim() != w.sdim() {
        return None;
    }
    if v.dim() == 0 {
        return Some(QMat::zeros(0, 0));
    }
    let hom = hom_space(v, w).even;
    if hom.is_empty() {
        return None;
    }
    if let Some(m) = det_point_search(&hom, v.dim()) {
        return Some(m);
    }
    // complete path
    let dv = decompose(v).ok()?;
    let dw = decompose(w).ok()?;
    if dv.pieces.len() != dw.pieces.len() {
        return None;
    }
    let mut used = vec![false; dw.pieces.len()];
    let mut blocks: Vec<(usize, usize, QMat)> = Vec::new(); // (v piece, w piece, iso)
    for (i, pv) in dv.pieces.iter().enumerate() {
        let mut found = None;
        for (j, pw) in dw.pieces.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(f) = indecomposable_iso(pv, pw) {
                found = Some((j, f));
                break;
            }
        }
        match found {
            Some((j, f)) => {
                used[j] = true;
                blocks.push((i, j, f));
            }
            None => return None,
        }
    }
    // assemble the global map: W-basis(Uw) o block-permuted isos o Uv^{-1}
    let dim = v.dim();
    let uv_inv = dv.witness.inverse()?;
    let mut offsets_v = vec![0usize; dv.pieces.len()];
    let mut acc = 0;
    for (i, p) in dv.pieces.iter().enumerate() {
        offsets_v[i] = acc;
        acc += p.dim();
    }
    let mut offsets_w = vec![0usize; dw.pieces.len()];
    acc = 0;
    for (j, p) in dw.pieces.iter().enumerate() {
        offsets_w[j] = acc;
        acc += p.dim();
    }
    let mut block_map = QMat::zeros(dim, dim);
    for (i, j, f) in &blocks {
        for r in 0..f.rows {
            for c in 0..f.cols {
                block_map[(offsets_w[*j] + r, offsets_v[*i] + c)] = f[(r, c)].clone();
            }
        }
    }
    let total = dw.witness.mul(&block_map).mul(&uv_inv);
    debug_assert!(total.inverse().is_some());
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::sl11;
    use crate::linalg::SuperMatrix;
    use crate::rat::{rat, rint};
    use crate::rep::{direct_sum, pi, Representation};
    use rand::{Rng, SeedableRng};
    use std::sync::Arc;

    fn sl11_arc() -> Arc<crate::algebras::LieSuperAlgebra> {
        Arc::new(sl11())
    }

    /// V^h: the irreducible 1|1 Clifford module, E = h.
    fn v_h(g: &Arc<crate::algebras::LieSuperAlgebra>, h: i64) -> Representation {
        let fmt = Format::standard(1, 1);
        let e = SuperMatrix::identity(fmt.clone()).scale(&rint(h));
        let xm = SuperMatrix::unit(fmt.clone(), 1, 0);
        let xp = SuperMatrix::unit(fmt.clone(), 0, 1).scale(&rint(h));
        let mut r = Representation::new(g.clone(), SuperSpace::new(fmt), vec![e, xp, xm]);
        r.weights = Some(vec![0, 0]);
        r
    }

    #[test]
    fn schur_for_irreducibles() {
        let g = sl11_arc();
        let v = v_h(&g, 1);
        assert!(verify_representation(&v).pass);
        let h = hom_space(&v, &v);
        assert_eq!(h.even.len(), 1);
        // hom to a different Clifford parameter vanishes
        let w = v_h(&g, 2);
        let hw = hom_space(&v, &w);
        assert_eq!(hw.dims(), (0, 0));
        // odd self-intertwiners exist: V ~ Pi(V) via an odd map
        let hp = hom_space(&v, &pi(&v));
        assert_eq!(hp.even.len(), 0);
        assert_eq!(hp.odd.len(), 1);
    }

    #[test]
    fn end_algebra_of_isotypic_square() {
        let g = sl11_arc();
        let v = v_h(&g, 1);
        let vv = direct_sum(&v, &v).unwrap();
        let a = end_algebra(&vv);
        assert_eq!(a.dim(), 4);
        assert!(radical(&a).is_empty());
    }

    #[test]
    fn radical_of_upper_triangular() {
        // plain associative algebra checks on explicit bases
        let full: Vec<QMat> = (0..2)
            .flat_map(|i| {
                (0..2).map(move |j| {
                    let mut m = QMat::zeros(2, 2);
                    m[(i, j)] = rint(1);
                    m
                })
            })
            .collect();
        let a = MatrixAlgebra::from_basis(2, full).unwrap();
        assert!(radical(&a).is_empty());
        let upper: Vec<QMat> = vec![(0, 0), (0, 1), (1, 1)]
            .into_iter()
            .map(|(i, j)| {
                let mut m = QMat::zeros(2, 2);
                m[(i, j)] = rint(1);
                m
            })
            .collect();
        let a = MatrixAlgebra::from_basis(2, upper).unwrap();
        let r = radical(&a);
        assert_eq!(r.len(), 1);
        // the radical is nilpotent and a two-sided ideal
        let rv = &r[0];
        let sq = a.multiply(rv, rv);
        assert!(sq.iter().all(|c| c.is_zero()));
        for i in 0..a.dim() {
            let mut e = vec![rzero(); a.dim()];
            e[i] = rone();
            for prod in [a.multiply(rv, &e), a.multiply(&e, rv)] {
                // reinsertion must not enlarge the radical span
                let mut sieve = RrefSieve::new();
                for v in &r {
                    sieve.try_insert(v.clone());
                }
                let mut p = prod.clone();
                assert!(sieve.reduce(&mut p), "radical is not an ideal");
            }
        }
    }

    #[test]
    fn indecomposable_detection() {
        let g = sl11_arc();
        let v = v_h(&g, 1);
        assert!(is_indecomposable(&v));
        let vv = direct_sum(&v, &v).unwrap();
        assert!(!is_indecomposable(&vv));
    }

    #[test]
    fn decompose_block_diagonal_and_shuffled() {
        let g = sl11_arc();
        let v1 = v_h(&g, 1);
        let v2 = v_h(&g, 2);
        let sum = direct_sum(&v1, &v2).unwrap();
        let rep = decompose(&sum).unwrap();
        assert_eq!(rep.pieces.len(), 2);
        assert_eq!(rep.summands.len(), 2);
        // conjugate by a random invertible even map and decompose again
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let shuffled = random_conjugate(&sum, &mut rng);
        assert!(verify_representation(&shuffled).pass);
        let rep2 = decompose(&shuffled).unwrap();
        assert_eq!(rep2.pieces.len(), 2);
        let dims: Vec<usize> = rep2.pieces.iter().map(|p| p.dim()).collect();
        assert_eq!(dims, vec![2, 2]);
        assert!(rep2.lifting_steps_max <= 3);
    }

    pub(crate) fn random_conjugate(
        v: &Representation,
        rng: &mut impl Rng,
    ) -> Representation {
        // random invertible even map: unit lower times unit upper within each
        // parity block
        let d = v.dim();
        let mut u = QMat::identity(d);
        for i in 0..d {
            for j in 0..d {
                if i != j && v.format().parity(i) == v.format().parity(j) && rng.gen_bool(0.4) {
                    u[(i, j)] = rat(rng.gen_range(-2..=2), 1);
                }
            }
        }
        // force invertibility: do an LU-style product of two unit-triangular
        let mut l = QMat::identity(d);
        for i in 0..d {
            for j in 0..i {
                if v.format().parity(i) == v.format().parity(j) && rng.gen_bool(0.4) {
                    l[(i, j)] = rat(rng.gen_range(-2..=2), 1);
                }
            }
        }
        let mut t = QMat::identity(d);
        for i in 0..d {
            for j in (i + 1)..d {
                if v.format().parity(i) == v.format().parity(j) && rng.gen_bool(0.4) {
                    t[(i, j)] = rat(rng.gen_range(-2..=2), 1);
                }
            }
        }
        let u = l.mul(&t);
        let u_inv = u.inverse().expect("unit triangular product is invertible");
        let action = v
            .action
            .iter()
            .map(|m| {
                let q = u_inv.mul(&m.to_qmat()).mul(&u);
                SuperMatrix::from_qmat(v.format().clone(), &q)
            })
            .collect();
        Representation::new(v.algebra.clone(), v.space.clone(), action)
    }

    #[test]
    fn isomorphism_roundtrip_and_separation() {
        let g = sl11_arc();
        let v = v_h(&g, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let w = random_conjugate(&v, &mut rng);
        let iso = are_isomorphic(&v, &w).expect("conjugates are isomorphic");
        // witness really intertwines: T rho_v = rho_w T
        for x in 0..3 {
            assert_eq!(
                iso.mul(&v.action[x].to_qmat()),
                w.action[x].to_qmat().mul(&iso)
            );
        }
        assert!(are_isomorphic(&v, &v_h(&g, 2)).is_none());
        assert!(are_isomorphic(&v, &pi(&v)).is_none());
    }
}
