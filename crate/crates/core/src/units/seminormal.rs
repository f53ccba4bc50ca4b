//! Floating-point oracle for the matrix elements Φ_T, via the orthonormal
//! Young basis action
//!
//!   s_i · v_T = d·v_T + √(1 − d²)·v_{s_iT},   d = (c_{i+1} − c_i)⁻¹,
//!
//! with v_{s_iT} = 0 when s_iT is not standard. √(1 − d²) is irrational, so
//! this side is floating point; exact coefficients always come from the
//! Murphy or fusion side, and the two are compared within a tolerance.

use std::collections::HashMap;

use crate::perm::{all_permutations, Permutation};
use crate::units::matrix_element_phi;
use crate::verify::Check;
use crate::young::{standard_tableaux, Partition, StandardTableau};

/// Default comparison tolerance, chosen against the conditioning of the
/// n ≤ 6 generator matrices.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// The seminormal representation of S_n attached to one shape: the list of
/// standard tableaux indexing the orthonormal basis, and the generator
/// matrices ρ(s_1),…,ρ(s_{n−1}).
pub struct SeminormalRep {
    pub tableaux: Vec<StandardTableau>,
    generators: Vec<Vec<Vec<f64>>>,
}

impl SeminormalRep {
    pub fn new(lambda: &Partition) -> Self {
        let tableaux = standard_tableaux(lambda);
        let index: HashMap<&StandardTableau, usize> =
            tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let f = tableaux.len();
        let n = lambda.n();
        let mut generators = Vec::new();
        for i in 1..n {
            let mut m = vec![vec![0.0; f]; f];
            for (col, t) in tableaux.iter().enumerate() {
                let contents = t.contents();
                let d = 1.0 / (contents[i] - contents[i - 1]) as f64;
                m[col][col] += d;
                if let Some(swapped) = t.swap_adjacent(i) {
                    m[index[&swapped]][col] += (1.0 - d * d).sqrt();
                }
            }
            generators.push(m);
        }
        SeminormalRep {
            tableaux,
            generators,
        }
    }

    fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// ρ(p), assembled from the generator matrices along a reduced word.
    pub fn matrix(&self, p: &Permutation) -> Vec<Vec<f64>> {
        let f = self.dim();
        let mut m: Vec<Vec<f64>> = (0..f)
            .map(|i| (0..f).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        // p = s_{w_m} ∘ … ∘ s_{w_1}, so ρ(p) = ρ(s_{w_m})·…·ρ(s_{w_1})
        for &i in p.reduced_word().iter().rev() {
            m = mat_mul(&m, &self.generators[i - 1]);
        }
        m
    }
}

fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Approximate coefficients of Φ_T = Σ_s (s·v_T, v_T)·s⁻¹ for every
/// standard tableau of the shape, keyed by permutation.
pub fn seminormal_phis(lambda: &Partition) -> Vec<(StandardTableau, HashMap<Permutation, f64>)> {
    let rep = SeminormalRep::new(lambda);
    let n = lambda.n();
    let mut out: Vec<(StandardTableau, HashMap<Permutation, f64>)> = rep
        .tableaux
        .iter()
        .map(|t| (t.clone(), HashMap::new()))
        .collect();
    for s in all_permutations(n).expect("degree within enumeration cap") {
        let m = rep.matrix(&s);
        let s_inv = s.inverse();
        for (idx, (_, coeffs)) in out.iter_mut().enumerate() {
            *coeffs.entry(s_inv.clone()).or_insert(0.0) += m[idx][idx];
        }
    }
    out
}

/// Compares the floating-point Φ_T against the exact construction for every
/// tableau of the shape; passes when the largest coefficient deviation is
/// within `tol`.
pub fn seminormal_check(lambda: &Partition, tol: f64) -> Check {
    let mut worst: f64 = 0.0;
    for (t, approx) in seminormal_phis(lambda) {
        let exact = matrix_element_phi(&t);
        for s in all_permutations(lambda.n()).expect("degree within enumeration cap") {
            let want = rational_to_f64(&exact.coeff(&s));
            let got = approx.get(&s).copied().unwrap_or(0.0);
            worst = worst.max((want - got).abs());
        }
    }
    Check::new(
        format!("seminormal oracle for {lambda}"),
        worst <= tol,
        format!("max |exact − float| = {worst:.3e} (tol {tol:.1e})"),
    )
}

pub(crate) fn rational_to_f64(r: &crate::algebra::Rational) -> f64 {
    let numer: f64 = r.numer().to_string().parse().expect("integer literal");
    let denom: f64 = r.denom().to_string().parse().expect("integer literal");
    numer / denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn single_cell_phi_is_one() {
        let phis = seminormal_phis(&Partition::parse("1").unwrap());
        assert_eq!(phis.len(), 1);
        let coeffs = &phis[0].1;
        assert!((coeffs[&Permutation::identity(1)] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn row_of_two_is_trivial_rep() {
        let phis = seminormal_phis(&Partition::parse("2").unwrap());
        let coeffs = &phis[0].1;
        for s in all_permutations(2).unwrap() {
            assert!((coeffs[&s] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn generators_are_involutions() {
        let rep = SeminormalRep::new(&Partition::parse("3,2").unwrap());
        for i in 1..5 {
            let s = Permutation::adjacent(i, 5).unwrap();
            let m = rep.matrix(&s);
            let sq = mat_mul(&m, &m);
            for (r, row) in sq.iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    let want = if r == c { 1.0 } else { 0.0 };
                    assert!((x - want).abs() < 1e-12, "s_{i}² at ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn matches_exact_for_two_one() {
        let check = seminormal_check(&Partition::parse("2,1").unwrap(), DEFAULT_TOLERANCE);
        assert!(check.pass, "{}", check.detail);
    }

    #[test]
    fn rational_conversion() {
        assert_eq!(rational_to_f64(&rat(3)), 3.0);
        assert_eq!(rational_to_f64(&crate::algebra::frac(-1, 2)), -0.5);
    }
}
