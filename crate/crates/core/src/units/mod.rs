//! Jucys–Murphy elements and the diagonal matrix units E_T.
//!
//! E_T is built by the recurrence E_T = E_U · ∏_j (X_n − a_j)/(c − a_j),
//! where U is T with the cell of n removed, the a_j run over the contents of
//! the addable cells of sh(U) other than that cell, and c is its content.
//! The denominators are nonzero because addable contents are pairwise
//! distinct. (u − X_n)⁻¹ is never formed; the polynomial product above is
//! the computational definition throughout.

pub mod characters;
pub mod seminormal;

use std::collections::BTreeMap;


use crate::algebra::{frac, rat, GroupAlgebraElement, Rational};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::verify::Check;
use crate::young::{standard_tableaux, partitions, Partition, StandardTableau};

/// The Jucys–Murphy element X_i = (1 i) + (2 i) + … + (i−1 i); X_1 = 0.
pub fn jm_element(i: usize, n: usize) -> Result<GroupAlgebraElement> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            what: "Jucys-Murphy index",
            value: i,
            max: n,
        });
    }
    let mut out = GroupAlgebraElement::zero(n);
    for j in 1..i {
        out = out.add(&GroupAlgebraElement::from_perm(Permutation::transposition(
            j, i, n,
        )?))?;
    }
    Ok(out)
}

/// The diagonal matrix unit E_T, an exact-rational idempotent.
pub fn matrix_unit_murphy(t: &StandardTableau) -> GroupAlgebraElement {
    let n = t.n();
    if n <= 1 {
        return GroupAlgebraElement::one(n);
    }
    let u = t.branch_down().expect("n >= 1");
    let e_u = matrix_unit_murphy(&u);
    murphy_step(&e_u, &u.shape(), t.content_of(n))
}

/// One recurrence step: extends a matrix unit of degree n−1 by the cell of
/// content `c` addable to `mu`. `e_u` has degree n−1 on entry.
fn murphy_step(e_u: &GroupAlgebraElement, mu: &Partition, c: i64) -> GroupAlgebraElement {
    let n = e_u.degree() + 1;
    let x_n = jm_element(n, n).expect("n >= 1");
    let mut prod = e_u.embed(n).expect("m >= degree");
    for cell in mu.addable_cells() {
        let a = cell.content();
        if a == c {
            continue;
        }
        let factor = x_n
            .sub(&GroupAlgebraElement::scalar(n, rat(a)))
            .expect("same degree");
        prod = prod.mul(&factor).expect("same degree").scale(&frac(1, c - a));
    }
    prod
}

/// The scale factor n!/f_λ relating Φ_T = (n!/f_λ)·E_T; equals the product
/// of the hooks of λ.
pub fn phi_scale(shape: &Partition) -> Rational {
    Rational::from_integer(shape.hook_product())
}

/// The diagonal matrix element Φ_T = (n!/f_λ)·E_T.
pub fn matrix_element_phi(t: &StandardTableau) -> GroupAlgebraElement {
    matrix_unit_murphy(t).scale(&phi_scale(&t.shape()))
}

/// All matrix units of degree n, computed level by level so each E_U is
/// built once. Order: partitions of n in enumeration order, then standard
/// tableaux in enumeration order.
pub fn all_matrix_units(n: usize) -> Vec<(StandardTableau, GroupAlgebraElement)> {
    let mut level: BTreeMap<StandardTableau, GroupAlgebraElement> = BTreeMap::new();
    level.insert(StandardTableau::empty(), GroupAlgebraElement::one(0));
    for k in 1..=n {
        let mut next = BTreeMap::new();
        for lam in partitions(k) {
            for t in standard_tableaux(&lam) {
                let u = t.branch_down().expect("k >= 1");
                let e = if k == 1 {
                    GroupAlgebraElement::one(1)
                } else {
                    murphy_step(&level[&u], &u.shape(), t.content_of(k))
                };
                next.insert(t, e);
            }
        }
        level = next;
    }
    let mut out = Vec::new();
    for lam in partitions(n) {
        for t in standard_tableaux(&lam) {
            let e = level.remove(&t).expect("level holds all tableaux of n");
            out.push((t, e));
        }
    }
    out
}

/// The hook ratio H_{λ,μ} for an edge μ → λ, computed from addable/removable
/// cell contents split around c so that every factor is positive:
/// ∏(a_i − c)·∏(c − a_j) over addable contents of μ other than c, divided by
/// the same split product over removable contents of λ other than c.
pub fn hook_ratio(lambda: &Partition, mu: &Partition) -> Result<Rational> {
    let cell = lambda.cell_added_from(mu).ok_or_else(|| Error::NotAnEdge {
        mu: mu.to_string(),
        lambda: lambda.to_string(),
    })?;
    let c = cell.content();
    let mut num = rat(1);
    for a in mu.addable_cells() {
        let a = a.content();
        if a != c {
            num *= rat(if a > c { a - c } else { c - a });
        }
    }
    let mut den = rat(1);
    for b in lambda.removable_cells() {
        let b = b.content();
        if b != c {
            den *= rat(if b > c { b - c } else { c - b });
        }
    }
    Ok(num / den)
}

/// Verifies X_n = Σ_λ Σ_T c_n(T)·E_T exactly. Failure is reported, not
/// raised; the report carries the discrepancy element.
pub fn spectral_identity_check(n: usize) -> Check {
    let x_n = jm_element(n, n).expect("n >= 1");
    let mut sum = GroupAlgebraElement::zero(n);
    for (t, e) in all_matrix_units(n) {
        sum = sum
            .add(&e.scale(&rat(t.content_of(n))))
            .expect("same degree");
    }
    let diff = sum.sub(&x_n).expect("same degree");
    Check::new(
        format!("spectral identity X_{n} = sum of c_n(T) E_T"),
        diff.is_zero(),
        if diff.is_zero() {
            format!("exact over {} tableaux", count_tableaux(n))
        } else {
            format!("discrepancy {diff}")
        },
    )
}

fn count_tableaux(n: usize) -> usize {
    partitions(n).iter().map(|l| standard_tableaux(l).len()).sum()
}

/// Sum of E_T over the standard tableaux of one shape; a central idempotent.
pub fn central_projector(lambda: &Partition) -> GroupAlgebraElement {
    let n = lambda.n();
    let mut sum = GroupAlgebraElement::zero(n);
    for t in standard_tableaux(lambda) {
        sum = sum.add(&matrix_unit_murphy(&t)).expect("same degree");
    }
    sum
}
