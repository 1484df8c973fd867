//! Small dense linear-algebra helpers over `nalgebra`.

use nalgebra::{Complex, DMatrix, DVector};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;

pub fn c(re: f64) -> C64 {
    Complex::new(re, 0.0)
}

pub fn to_complex(m: &DMatrix<f64>) -> CMatrix {
    m.map(c)
}

/// Sum of singular values.
pub fn trace_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().singular_values().iter().sum()
}

pub fn operator_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().singular_values().iter().copied().fold(0.0, f64::max)
}

/// Unitary factor `U` of the polar decomposition `m = U |m|`.
pub fn polar_unitary(m: &CMatrix) -> CMatrix {
    let svd = m.clone().svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^T");
    u * v_t
}

pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).scale(0.5)
}

/// Eigenvalues (ascending) and eigenvectors of a hermitian matrix.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = hermitian_part(m).symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMatrix::from_columns(
        &order.iter().map(|&i| eig.eigenvectors.column(i).into_owned()).collect::<Vec<_>>(),
    );
    (values, vectors)
}

pub fn min_hermitian_eigenvalue(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return f64::INFINITY;
    }
    hermitian_eigen(m).0[0]
}

/// Column-major vectorization.
pub fn vec_of(m: &CMatrix) -> DVector<C64> {
    DVector::from_column_slice(m.as_slice())
}

pub fn unvec(v: &DVector<C64>, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_column_slice(rows, cols, v.as_slice())
}

/// Orthonormal basis (as columns) of the null space of `Σ_k A_kᴴ A_k`,
/// i.e. the common kernel of the given operators.
pub fn common_kernel(ops: &[CMatrix], dim: usize, tol: f64) -> Vec<DVector<C64>> {
    let mut gram = CMatrix::zeros(dim, dim);
    for a in ops {
        gram += a.adjoint() * a;
    }
    kernel_of_gram(&gram, tol)
}

fn kernel_of_gram(gram: &CMatrix, tol: f64) -> Vec<DVector<C64>> {
    let (values, vectors) = hermitian_eigen(gram);
    let scale = values.last().copied().unwrap_or(0.0).abs().max(1.0);
    values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v.abs() <= tol * scale)
        .map(|(i, _)| vectors.column(i).into_owned())
        .collect()
}

/// Commutant `{X : X A = A X for all A in ops}` of `d × d` operators,
/// returned as an orthonormal basis in the Hilbert–Schmidt inner product.
pub fn commutant(ops: &[CMatrix], d: usize, tol: f64) -> Vec<CMatrix> {
    // Gram of the stacked equations Aᵀ⊗I − I⊗A, assembled without forming them
    let id = CMatrix::identity(d, d);
    let mut left = CMatrix::zeros(d, d);
    let mut right = CMatrix::zeros(d, d);
    let mut gram = CMatrix::zeros(d * d, d * d);
    for a in ops {
        let bar = a.conjugate();
        left += &bar * a.transpose();
        right += a.adjoint() * a;
        gram -= bar.kronecker(a) + a.transpose().kronecker(&a.adjoint());
    }
    gram += left.kronecker(&id) + id.kronecker(&right);
    kernel_of_gram(&gram, tol)
        .iter()
        .map(|v| unvec(v, d, d))
        .collect()
}

/// Orthonormalizes matrices in the Hilbert–Schmidt inner product, dropping
/// dependent ones.
pub fn orthonormalize(mats: &[CMatrix], tol: f64) -> Vec<CMatrix> {
    let mut basis: Vec<CMatrix> = Vec::new();
    for m in mats {
        let mut r = m.clone();
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for b in &basis {
                let coeff = b.dotc(&r);
                r -= b * coeff;
            }
        }
        let norm = r.norm();
        if norm > tol {
            basis.push(r / c(norm));
        }
    }
    basis
}

/// Orthogonal projector onto the span of an orthonormal family of matrices,
/// acting on vectorized matrices.
pub fn span_projector(basis: &[CMatrix]) -> CMatrix {
    let dim = basis.first().map_or(0, |b| b.len());
    let mut p = CMatrix::zeros(dim, dim);
    for b in basis {
        let v = vec_of(b);
        p += &v * v.adjoint();
    }
    p
}

/// Operator-norm distance between the orthogonal projectors onto two spans;
/// zero iff the spans coincide.
pub fn subspace_distance(a: &[CMatrix], b: &[CMatrix]) -> f64 {
    let a = orthonormalize(a, 1e-10);
    let b = orthonormalize(b, 1e-10);
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    if a.is_empty() || b.is_empty() {
        return 1.0;
    }
    operator_norm(&(span_projector(&a) - span_projector(&b)))
}

/// Hilbert–Schmidt projection of `m` onto the span of an orthonormal basis.
pub fn project_onto(basis: &[CMatrix], m: &CMatrix) -> CMatrix {
    let mut out = CMatrix::zeros(m.nrows(), m.ncols());
    for b in basis {
        out += b * b.dotc(m);
    }
    out
}

/// `f(m)` for hermitian `m`, by spectral calculus.
pub fn hermitian_fn(m: &CMatrix, f: impl Fn(f64) -> f64) -> CMatrix {
    let (values, vectors) = hermitian_eigen(m);
    let diag = CMatrix::from_diagonal(&DVector::from_iterator(
        values.len(),
        values.iter().map(|&v| c(f(v))),
    ));
    &vectors * diag * vectors.adjoint()
}

/// Realification of a complex-linear map: coordinates `[Re z; Im z]`.
pub fn realify(m: &CMatrix) -> DMatrix<f64> {
    let (r, k) = m.shape();
    let mut out = DMatrix::zeros(2 * r, 2 * k);
    for i in 0..r {
        for j in 0..k {
            let z = m[(i, j)];
            out[(i, j)] = z.re;
            out[(i, j + k)] = -z.im;
            out[(i + r, j)] = z.im;
            out[(i + r, j + k)] = z.re;
        }
    }
    out
}

/// Inverse of [`realify`] for a real matrix commuting with multiplication
/// by `i`; returns the matrix and its deviation from complex-linearity.
pub fn complexify(m: &DMatrix<f64>) -> (CMatrix, f64) {
    let r = m.nrows() / 2;
    let k = m.ncols() / 2;
    let mut out = CMatrix::zeros(r, k);
    let mut defect: f64 = 0.0;
    for i in 0..r {
        for j in 0..k {
            let re = 0.5 * (m[(i, j)] + m[(i + r, j + k)]);
            let im = 0.5 * (m[(i + r, j)] - m[(i, j + k)]);
            defect = defect
                .max((m[(i, j)] - m[(i + r, j + k)]).abs())
                .max((m[(i + r, j)] + m[(i, j + k)]).abs());
            out[(i, j)] = Complex::new(re, im);
        }
    }
    (out, defect)
}
