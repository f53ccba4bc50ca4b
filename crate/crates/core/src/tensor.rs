//! Exact rational operators on tensor powers: the Yang R-matrix, embedded
//! two-site operators, Schur-Weyl images of group-algebra elements, and the
//! fused checks.
//!
//! Entries at rational spectral parameters are rational, so every identity
//! here is an equality test; no floats, no tolerances. Dense matrices are
//! fine at the supported scale (dimension capped at 4096 by default).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{rat, GroupAlgebraElement, Rational};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::units::{central_projector, matrix_unit_murphy, phi_scale};
use crate::verify::Check;
use crate::young::{partitions, Partition, StandardTableau};

/// Default cap on the dimension of a tensor power (memory guard).
pub const DEFAULT_TENSOR_DIM_CAP: usize = 4096;

/// A dense exact-rational operator on the k-th tensor power of a
/// `base_dim`-dimensional space.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorOperator {
    base_dim: usize,
    power: usize,
    entries: Vec<Rational>,
}

impl TensorOperator {
    pub fn zero(base_dim: usize, power: usize) -> Self {
        let dim = base_dim.pow(power as u32);
        TensorOperator {
            base_dim,
            power,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(base_dim: usize, power: usize) -> Self {
        let mut out = Self::zero(base_dim, power);
        let dim = out.dim();
        for i in 0..dim {
            out.entries[i * dim + i] = Rational::one();
        }
        out
    }

    /// Builds from explicit rows (used for restricted operators).
    pub fn from_rows(base_dim: usize, power: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = base_dim.pow(power as u32);
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Precondition(format!(
                "expected {dim}x{dim} rows for base {base_dim} power {power}"
            )));
        }
        Ok(TensorOperator {
            base_dim,
            power,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn dim(&self) -> usize {
        self.base_dim.pow(self.power as u32)
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim() + col]
    }

    fn set(&mut self, row: usize, col: usize, value: Rational) {
        let dim = self.dim();
        self.entries[row * dim + col] = value;
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.base_dim != other.base_dim || self.power != other.power {
            return Err(Error::DegreeMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TensorOperator {
            base_dim: self.base_dim,
            power: self.power,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        TensorOperator {
            base_dim: self.base_dim,
            power: self.power,
            entries: self.entries.iter().map(|x| x * r).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let dim = self.dim();
        let mut out = Self::zero(self.base_dim, self.power);
        for i in 0..dim {
            for k in 0..dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let dim = self.dim();
        assert_eq!(v.len(), dim);
        (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    /// Columns as vectors.
    pub fn columns(&self) -> Vec<Vec<Rational>> {
        let dim = self.dim();
        (0..dim)
            .map(|j| (0..dim).map(|i| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Rank over the rationals, by exact row reduction.
    pub fn rank(&self) -> usize {
        let dim = self.dim();
        let mut rows: Vec<Vec<Rational>> = (0..dim)
            .map(|i| self.entries[i * dim..(i + 1) * dim].to_vec())
            .collect();
        row_reduce(&mut rows)
    }

    /// Embeds a two-site operator into positions (a, b) of the k-th power:
    /// acts as `self` on factors a and b and as identity elsewhere. The
    /// first tensor factor of `self` goes to position a, the second to b.
    pub fn embed(&self, a: usize, b: usize, k: usize) -> Result<TensorOperator> {
        if self.power != 2 {
            return Err(Error::Precondition(
                "embed expects an operator on a tensor square".into(),
            ));
        }
        if a == b {
            return Err(Error::Precondition(format!("positions clash: ({a},{b})")));
        }
        for &pos in &[a, b] {
            if pos == 0 || pos > k {
                return Err(Error::IndexOutOfRange {
                    what: "embed position",
                    value: pos,
                    max: k,
                });
            }
        }
        let d = self.base_dim;
        let mut out = TensorOperator::zero(d, k);
        let dim = out.dim();
        let small = self.dim();
        for col in 0..dim {
            let digits = decode(col, d, k);
            let small_col = digits[a - 1] * d + digits[b - 1];
            for small_row in 0..small {
                let coeff = &self.entries[small_row * small + small_col];
                if coeff.is_zero() {
                    continue;
                }
                let mut target = digits.clone();
                target[a - 1] = small_row / d;
                target[b - 1] = small_row % d;
                let row = encode(&target, d);
                let cur = out.get(row, col) + coeff;
                out.set(row, col, cur);
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for TensorOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "TensorOperator {}^{} [", self.base_dim, self.power)?;
        let dim = self.dim();
        for i in 0..dim {
            let row: Vec<String> = (0..dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn decode(index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut digits = vec![0; len];
    let mut x = index;
    for slot in (0..len).rev() {
        digits[slot] = x % base;
        x /= base;
    }
    digits
}

fn encode(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

/// Gauss-Jordan reduction in place; returns the rank.
pub(crate) fn row_reduce(rows: &mut [Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rat(1) / rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// The permutation operator P: ξ⊗η ↦ η⊗ξ on V⊗V.
pub fn permutation_operator(n_dim: usize) -> TensorOperator {
    from_permutation(
        &Permutation::transposition(1, 2, 2).expect("valid transposition"),
        n_dim,
    )
}

/// The operator of a permutation on V^{⊗n}: factor k of the input moves to
/// factor s(k) of the output.
pub fn from_permutation(s: &Permutation, n_dim: usize) -> TensorOperator {
    let n = s.degree();
    let mut out = TensorOperator::zero(n_dim, n);
    let dim = out.dim();
    for col in 0..dim {
        let digits = decode(col, n_dim, n);
        let mut target = vec![0; n];
        for (k, &digit) in digits.iter().enumerate() {
            target[s.apply(k + 1) - 1] = digit;
        }
        let row = encode(&target, n_dim);
        out.set(row, col, Rational::one());
    }
    out
}

/// The Yang R-matrix R(u) = 1 − P/u on V⊗V; u = 0 is a pole.
pub fn yang_r(u: &Rational, n_dim: usize) -> Result<TensorOperator> {
    if u.is_zero() {
        return Err(Error::Precondition("yang_r is undefined at u = 0".into()));
    }
    TensorOperator::identity(n_dim, 2)
        .sub(&permutation_operator(n_dim).scale(&(rat(1) / u)))
}

/// Linear extension of the permutation action to a group-algebra element,
/// with the default dimension cap.
pub fn schur_weyl_image(a: &GroupAlgebraElement, n_dim: usize) -> Result<TensorOperator> {
    schur_weyl_image_capped(a, n_dim, DEFAULT_TENSOR_DIM_CAP)
}

pub fn schur_weyl_image_capped(
    a: &GroupAlgebraElement,
    n_dim: usize,
    cap: usize,
) -> Result<TensorOperator> {
    let n = a.degree();
    let dim = n_dim.checked_pow(n as u32).filter(|&d| d <= cap);
    let Some(dim) = dim else {
        return Err(Error::CapExceeded {
            what: "tensor dimension N^n",
            value: n_dim.pow(n as u32),
            cap,
        });
    };
    let mut out = TensorOperator::zero(n_dim, n);
    for (p, c) in a.terms() {
        for col in 0..dim {
            let digits = decode(col, n_dim, n);
            let mut target = vec![0; n];
            for (k, &digit) in digits.iter().enumerate() {
                target[p.apply(k + 1) - 1] = digit;
            }
            let row = encode(&target, n_dim);
            let cur = out.get(row, col) + c;
            out.set(row, col, cur);
        }
    }
    Ok(out)
}

/// Exact Yang-Baxter check R₁₂(u)R₁₃(u+v)R₂₃(v) = R₂₃(v)R₁₃(u+v)R₁₂(u)
/// on V^{⊗3}.
pub fn ybe_check(u: &Rational, v: &Rational, n_dim: usize) -> Result<Check> {
    let sum = u + v;
    if u.is_zero() || v.is_zero() || sum.is_zero() {
        return Err(Error::Precondition(
            "ybe_check needs u, v, u+v all nonzero".into(),
        ));
    }
    let r12 = yang_r(u, n_dim)?.embed(1, 2, 3)?;
    let r13 = yang_r(&sum, n_dim)?.embed(1, 3, 3)?;
    let r23 = yang_r(v, n_dim)?.embed(2, 3, 3)?;
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    let pass = lhs == rhs;
    Ok(Check::new(
        format!("Yang-Baxter at (u,v) = ({u},{v}), N = {n_dim}"),
        pass,
        if pass { "exact".into() } else { "sides differ".into() },
    ))
}

/// Basis of the symmetric square W ⊆ V⊗V: e_i⊗e_i and e_i⊗e_j + e_j⊗e_i.
pub fn symmetric_square_basis(n_dim: usize) -> Vec<Vec<Rational>> {
    let dim = n_dim * n_dim;
    let mut out = Vec::new();
    for i in 0..n_dim {
        let mut v = vec![Rational::zero(); dim];
        v[i * n_dim + i] = Rational::one();
        out.push(v);
    }
    for i in 0..n_dim {
        for j in i + 1..n_dim {
            let mut v = vec![Rational::zero(); dim];
            v[i * n_dim + j] = Rational::one();
            v[j * n_dim + i] = Rational::one();
            out.push(v);
        }
    }
    out
}

/// Kronecker product of two vector families (first factor most significant).
pub fn kron_basis(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let mut v = Vec::with_capacity(x.len() * y.len());
            for xi in x {
                for yj in y {
                    v.push(xi * yj);
                }
            }
            out.push(v);
        }
    }
    out
}

/// Expresses the image of every basis vector in the span of the basis.
/// Returns None when the image leaves the span; otherwise the restriction
/// matrix (coordinates, column per basis vector). The basis must be linearly
/// independent.
pub fn restrict_to_span(
    op: &TensorOperator,
    basis: &[Vec<Rational>],
) -> Option<Vec<Vec<Rational>>> {
    let m = basis.len();
    let dim = op.dim();
    assert!(basis.iter().all(|v| v.len() == dim), "basis length mismatch");
    let images: Vec<Vec<Rational>> = basis.iter().map(|v| op.apply(v)).collect();
    // augmented system [B | images], solved by full reduction
    let mut rows: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|v| v[i].clone()).collect();
            row.extend(images.iter().map(|v| v[i].clone()));
            row
        })
        .collect();
    let rank = row_reduce(&mut rows);
    // pivots must occupy exactly the basis columns
    let mut pivot_of_col = vec![None; m];
    for (r, row) in rows.iter().enumerate().take(rank) {
        let Some(col) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if col >= m {
            return None; // image has a component outside the span
        }
        pivot_of_col[col] = Some(r);
    }
    if pivot_of_col.iter().any(Option::is_none) {
        panic!("restrict_to_span requires a linearly independent basis");
    }
    for row in rows.iter().skip(rank) {
        if row[m..].iter().any(|x| !x.is_zero()) {
            return None;
        }
    }
    let mut restricted = vec![vec![Rational::zero(); m]; m];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        let r = pivot.expect("checked above");
        for t in 0..m {
            restricted[col][t] = rows[r][m + t].clone();
        }
    }
    Some(restricted)
}

/// The lexicographically ordered product of embedded R-matrices
/// ∏_{i<j} R_ij(c_i − c_j) for a tableau with pairwise distinct contents.
pub fn wim_lex_image(t: &StandardTableau, n_dim: usize) -> Result<TensorOperator> {
    let n = t.n();
    let contents = t.contents();
    let mut acc = TensorOperator::identity(n_dim, n);
    for i in 1..=n {
        for j in i + 1..=n {
            let diff = rat(contents[i - 1] - contents[j - 1]);
            if diff.is_zero() {
                return Err(Error::CoincidentPoints { i, j });
            }
            acc = acc.mul(&yang_r(&diff, n_dim)?.embed(i, j, n)?)?;
        }
    }
    Ok(acc)
}

/// Verifies that the Schur-Weyl image of the fusion value of T either equals
/// the lexicographic product of embedded R-matrices (distinct contents) or
/// squares to (n!/f_λ) times itself (general T).
pub fn fused_projector_check(t: &StandardTableau, n_dim: usize) -> Result<Check> {
    let phi = crate::fusion::evaluate_fusion(t)?;
    let image = schur_weyl_image(&phi, n_dim)?;
    let contents = t.contents();
    let distinct = {
        let mut sorted = contents.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    };
    let scale = phi_scale(&t.shape());
    let square_ok = image.mul(&image)? == image.scale(&scale);
    if distinct {
        let lex = wim_lex_image(t, n_dim)?;
        let pass = image == lex && square_ok;
        Ok(Check::new(
            format!("fused projector for {t}, N = {n_dim}"),
            pass,
            format!("distinct contents; R-matrix product match: {}, square relation: {square_ok}", image == lex),
        ))
    } else {
        Ok(Check::new(
            format!("fused projector for {t}, N = {n_dim}"),
            square_ok,
            format!("repeated contents; square = {scale}·image: {square_ok}"),
        ))
    }
}

/// The fused operator R_W(u) = R₁₂(u+1)R₁₃(u)R₀₂(u)R₀₃(u−1), realized on
/// V^{⊗4} with the copies (0,1,2,3) mapped to positions (1,2,3,4). This is
/// the only place that re-indexing happens.
pub fn fused_rw_operator(u: &Rational, n_dim: usize) -> Result<TensorOperator> {
    for (shift, label) in [(1i64, "u+1"), (0, "u"), (-1, "u-1")] {
        if (u + rat(shift)).is_zero() {
            return Err(Error::Precondition(format!(
                "fused operator needs {label} nonzero"
            )));
        }
    }
    let r = |shift: i64, a: usize, b: usize| -> Result<TensorOperator> {
        yang_r(&(u + rat(shift)), n_dim)?.embed(a, b, 4)
    };
    // copies: 0↦1, 1↦2, 2↦3, 3↦4
    r(1, 2, 3)?
        .mul(&r(0, 2, 4)?)?
        .mul(&r(0, 1, 3)?)?
        .mul(&r(-1, 1, 4)?)
}

/// Both fused checks: (a) V⊗W is preserved by R₁₂(u)R₁₃(u−1); (b) the
/// restriction of R_W to W⊗W satisfies the Yang-Baxter equation at (u, v).
/// W is the symmetric square of V.
pub fn fused_rw_check(u: &Rational, v: &Rational, n_dim: usize) -> Result<Vec<Check>> {
    for (point, label) in [(u.clone(), "u"), (v.clone(), "v"), (u + v, "u+v")] {
        for shift in [-1i64, 0, 1] {
            if (&point + rat(shift)).is_zero() {
                return Err(Error::Precondition(format!(
                    "fused check needs {label} away from 0 and ±1"
                )));
            }
        }
    }
    let mut checks = Vec::new();
    let w_basis = symmetric_square_basis(n_dim);

    // (a) invariance of V ⊗ W under R₁₂(u)·R₁₃(u−1)
    let mut unit = vec![Vec::new(); n_dim];
    for (i, slot) in unit.iter_mut().enumerate() {
        let mut e = vec![Rational::zero(); n_dim];
        e[i] = Rational::one();
        *slot = e;
    }
    let vw_basis = kron_basis(&unit, &w_basis);
    let m = yang_r(u, n_dim)?
        .embed(1, 2, 3)?
        .mul(&yang_r(&(u - rat(1)), n_dim)?.embed(1, 3, 3)?)?;
    let invariant = restrict_to_span(&m, &vw_basis).is_some();
    checks.push(Check::new(
        format!("V⊗W invariance under R12(u)R13(u-1) at u = {u}, N = {n_dim}"),
        invariant,
        if invariant { "subspace preserved exactly".into() } else { "image leaves V⊗W".into() },
    ));

    // (b) restriction of R_W to W⊗W and the fused Yang-Baxter equation
    let ww_basis = kron_basis(&w_basis, &w_basis);
    let w_dim = w_basis.len();
    let mut restricted = Vec::new();
    let mut all_restrict = true;
    for point in [u.clone(), u + v, v.clone()] {
        let big = fused_rw_operator(&point, n_dim)?;
        match restrict_to_span(&big, &ww_basis) {
            Some(matrix) => restricted.push(TensorOperator::from_rows(w_dim, 2, matrix)?),
            None => {
                all_restrict = false;
                break;
            }
        }
    }
    checks.push(Check::new(
        format!("R_W preserves W⊗W at u = {u}, v = {v}, N = {n_dim}"),
        all_restrict,
        if all_restrict { "restrictions computed exactly".into() } else { "image leaves W⊗W".into() },
    ));
    if all_restrict {
        let (ru, ruv, rv) = (&restricted[0], &restricted[1], &restricted[2]);
        let lhs = ru.embed(1, 2, 3)?.mul(&ruv.embed(1, 3, 3)?)?.mul(&rv.embed(2, 3, 3)?)?;
        let rhs = rv.embed(2, 3, 3)?.mul(&ruv.embed(1, 3, 3)?)?.mul(&ru.embed(1, 2, 3)?)?;
        let pass = lhs == rhs;
        checks.push(Check::new(
            format!("fused Yang-Baxter on W⊗W at (u,v) = ({u},{v}), N = {n_dim}"),
            pass,
            if pass { "exact".into() } else { "sides differ".into() },
        ));
    }
    Ok(checks)
}

/// Sum over all shapes of the images of the central projectors; must be the
/// identity on V^{⊗n} (Schur-Weyl completeness).
pub fn projector_completeness_check(n: usize, n_dim: usize) -> Result<Check> {
    let mut total = TensorOperator::zero(n_dim, n);
    for lam in partitions(n) {
        total = total.add(&schur_weyl_image(&central_projector(&lam), n_dim)?)?;
    }
    let pass = total == TensorOperator::identity(n_dim, n);
    Ok(Check::new(
        format!("projector completeness on V^(⊗{n}), N = {n_dim}"),
        pass,
        if pass { "sums to the identity".into() } else { "sum differs from identity".into() },
    ))
}

/// Dimension of the irreducible polynomial GL_N representation of highest
/// weight λ, by the Weyl dimension formula ∏_{i<j}(λ_i−λ_j+j−i)/(j−i);
/// zero when λ has more than N rows. Independent of the rank computations
/// it is checked against.
pub fn weyl_dimension(lambda: &Partition, n_dim: usize) -> BigInt {
    if lambda.rows() > n_dim {
        return BigInt::zero();
    }
    let mut padded: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    padded.resize(n_dim, 0);
    let mut value = Rational::one();
    for i in 0..n_dim {
        for j in i + 1..n_dim {
            value *= frac_i64(padded[i] - padded[j] + (j - i) as i64, (j - i) as i64);
        }
    }
    assert!(value.is_integer(), "Weyl dimension must be integral");
    value.to_integer()
}

fn frac_i64(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rank of the image of the matrix unit E_T on V^{⊗n}.
pub fn unit_image_rank(t: &StandardTableau, n_dim: usize) -> Result<usize> {
    Ok(schur_weyl_image(&matrix_unit_murphy(t), n_dim)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;
    use crate::young::standard_tableaux;

    #[test]
    fn permutation_operator_examples() {
        assert_eq!(permutation_operator(1), TensorOperator::identity(1, 2));
        let p = permutation_operator(2);
        // swaps e1⊗e2 ↔ e2⊗e1, fixes e_i⊗e_i
        assert_eq!(p.get(0, 0), &rat(1));
        assert_eq!(p.get(2, 1), &rat(1));
        assert_eq!(p.get(1, 2), &rat(1));
        assert_eq!(p.get(3, 3), &rat(1));
        assert_eq!(p.get(1, 1), &rat(0));
        let p3 = permutation_operator(3);
        assert_eq!(p3.mul(&p3).unwrap(), TensorOperator::identity(3, 2));
    }

    #[test]
    fn yang_r_ranks_and_poles() {
        let sym = yang_r(&rat(-1), 2).unwrap(); // 1 + P
        assert_eq!(sym.rank(), 3);
        let antisym = yang_r(&rat(1), 2).unwrap(); // 1 − P
        assert_eq!(antisym.rank(), 1);
        assert_eq!(yang_r(&rat(2), 2).unwrap().rank(), 4);
        assert!(yang_r(&rat(0), 2).is_err());
    }

    #[test]
    fn embed_examples() {
        let p = permutation_operator(2);
        let e = p.embed(1, 2, 3).unwrap();
        assert_eq!(e.mul(&e).unwrap(), TensorOperator::identity(2, 3));
        let id = TensorOperator::identity(2, 2).embed(1, 3, 4).unwrap();
        assert_eq!(id, TensorOperator::identity(2, 4));
        // e1⊗e2⊗e3 ↦ e3⊗e2⊗e1 under P at positions (1,3), N = 3
        let p3 = permutation_operator(3).embed(1, 3, 3).unwrap();
        let mut v = vec![Rational::zero(); 27];
        v[encode(&[0, 1, 2], 3)] = rat(1);
        let image = p3.apply(&v);
        assert_eq!(image[encode(&[2, 1, 0], 3)], rat(1));
        assert_eq!(image.iter().filter(|x| !x.is_zero()).count(), 1);
        assert!(p.embed(2, 2, 3).is_err());
        assert!(p.embed(1, 4, 3).is_err());
    }

    #[test]
    fn ybe_examples() {
        for (u, v, n_dim) in [
            (rat(1), rat(2), 2),
            (frac(3, 2), rat(-5), 3),
            (rat(1), rat(1), 2),
        ] {
            let check = ybe_check(&u, &v, n_dim).unwrap();
            assert!(check.pass, "{}", check.name);
        }
        assert!(ybe_check(&rat(1), &rat(-1), 2).is_err());
    }

    #[test]
    fn schur_weyl_examples() {
        let id = GroupAlgebraElement::one(2);
        assert_eq!(
            schur_weyl_image(&id, 2).unwrap(),
            TensorOperator::identity(2, 2)
        );
        let swap = GroupAlgebraElement::from_perm(Permutation::transposition(1, 2, 2).unwrap());
        assert_eq!(schur_weyl_image(&swap, 2).unwrap(), permutation_operator(2));
        let symmetrizer = id.add(&swap).unwrap().scale(&frac(1, 2));
        assert_eq!(schur_weyl_image(&symmetrizer, 2).unwrap().rank(), 3);
        // cap
        let big = GroupAlgebraElement::one(7);
        assert!(matches!(
            schur_weyl_image(&big, 4),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn ring_homomorphism_on_products() {
        let a = GroupAlgebraElement::from_perm(Permutation::parse_cycles("(1 2 3)", 3).unwrap())
            .scale(&frac(2, 3))
            .add(&GroupAlgebraElement::one(3))
            .unwrap();
        let b = GroupAlgebraElement::from_perm(Permutation::parse_cycles("(2 3)", 3).unwrap())
            .sub(&GroupAlgebraElement::one(3).scale(&rat(4)))
            .unwrap();
        let lhs = schur_weyl_image(&a.mul(&b).unwrap(), 2).unwrap();
        let rhs = schur_weyl_image(&a, 2)
            .unwrap()
            .mul(&schur_weyl_image(&b, 2).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fused_projector_examples() {
        // row tableau of (2): image of 1+(1 2) is R(−1) = 1 + P
        let row = StandardTableau::parse("1 2").unwrap();
        let image = schur_weyl_image(&crate::fusion::evaluate_fusion(&row).unwrap(), 2).unwrap();
        assert_eq!(image, yang_r(&rat(-1), 2).unwrap());
        let col = StandardTableau::parse("1/2").unwrap();
        let image = schur_weyl_image(&crate::fusion::evaluate_fusion(&col).unwrap(), 2).unwrap();
        assert_eq!(image, yang_r(&rat(1), 2).unwrap());
        for text in ["1 2", "1/2", "1 2/3", "1 2/3 4"] {
            let t = StandardTableau::parse(text).unwrap();
            let check = fused_projector_check(&t, 2).unwrap();
            assert!(check.pass, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn two_two_tableau_image_squares() {
        let t = StandardTableau::parse("1 2/3 4").unwrap();
        let image = schur_weyl_image(&crate::fusion::evaluate_fusion(&t).unwrap(), 2).unwrap();
        assert_eq!(image.mul(&image).unwrap(), image.scale(&rat(12)));
    }

    #[test]
    fn fused_rw_checks_pass() {
        let checks = fused_rw_check(&rat(3), &rat(5), 2).unwrap();
        assert_eq!(checks.len(), 3);
        for c in checks {
            assert!(c.pass, "{}: {}", c.name, c.detail);
        }
        // N = 1: everything scalar
        for c in fused_rw_check(&rat(3), &rat(5), 1).unwrap() {
            assert!(c.pass, "{}", c.name);
        }
        assert!(fused_rw_check(&rat(1), &rat(5), 2).is_err());
        assert!(fused_rw_check(&rat(3), &rat(-2), 2).is_err());
    }

    #[test]
    fn completeness_small() {
        for (n, n_dim) in [(2, 2), (3, 3), (3, 2)] {
            let check = projector_completeness_check(n, n_dim).unwrap();
            assert!(check.pass, "{}", check.name);
        }
    }

    #[test]
    fn ranks_match_weyl_dimension_small() {
        for n in 1..=3 {
            for lam in partitions(n) {
                for t in standard_tableaux(&lam) {
                    for n_dim in [2usize, 3] {
                        let rank = unit_image_rank(&t, n_dim).unwrap();
                        let want = weyl_dimension(&lam, n_dim);
                        assert_eq!(BigInt::from(rank), want, "λ = {lam}, N = {n_dim}");
                    }
                }
            }
        }
        assert_eq!(weyl_dimension(&Partition::parse("1,1,1").unwrap(), 2), BigInt::zero());
        assert_eq!(weyl_dimension(&Partition::parse("2,2").unwrap(), 3), BigInt::from(6));
    }
}
