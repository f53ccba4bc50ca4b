//! The fusion procedure: ordered products of the factors
//! φ_ij(u,v) = 1 − (i j)/(u−v) and their consecutive evaluation at the
//! contents of a standard tableau.
//!
//! Limits are taken per variable by exact univariate polynomial division:
//! at step k the numerator A_{k−1}·∏_{i<k}((c_i − u)·1 − (i k)) is divided
//! by (u − c_k) once per coincidence c_i = c_k, with a hard failure on any
//! nonzero remainder, and the scalar denominator ∏_{i<k}(c_i − u) is kept in
//! factored form and cancelled against the same powers.

use crate::algebra::{rat, GAPolynomial, GroupAlgebraElement, Rational};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::units::{hook_ratio, matrix_element_phi};
use crate::verify::Check;
use crate::young::{Partition, StandardTableau};

use num_traits::Zero;

/// The rational function φ_ij(u,v) = 1 − (i j)/(u−v), i < j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FusionFactor {
    pub i: usize,
    pub j: usize,
}

impl FusionFactor {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::Precondition(format!(
                "fusion factor needs 1 ≤ i < j, got ({i},{j})"
            )));
        }
        Ok(FusionFactor { i, j })
    }

    /// Evaluates at numeric points; u = v is a genuine pole and errors.
    pub fn evaluate(&self, u: &Rational, v: &Rational, degree: usize) -> Result<GroupAlgebraElement> {
        if u == v {
            return Err(Error::CoincidentPoints {
                i: self.i,
                j: self.j,
            });
        }
        let swap = GroupAlgebraElement::from_perm(Permutation::transposition(
            self.i, self.j, degree,
        )?);
        GroupAlgebraElement::one(degree).sub(&swap.scale(&(rat(1) / (u - v))))
    }
}

/// Pairs (i,j), i < j ≤ n, in reverse lexicographic order: (i1,j1) precedes
/// (i2,j2) if j1 < j2, or j1 = j2 and i1 < i2.
pub fn pairs_reverse_lex(n: usize) -> Vec<FusionFactor> {
    let mut out = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            out.push(FusionFactor { i, j });
        }
    }
    out
}

/// Pairs (i,j), i < j ≤ n, in direct lexicographic order.
pub fn pairs_lex(n: usize) -> Vec<FusionFactor> {
    let mut out = pairs_reverse_lex(n);
    out.sort_by_key(|f| (f.i, f.j));
    out
}

fn product_over(
    factors: &[FusionFactor],
    assignments: &[Rational],
) -> Result<GroupAlgebraElement> {
    let n = assignments.len();
    for i in 0..n {
        for j in i + 1..n {
            if assignments[i] == assignments[j] {
                return Err(Error::CoincidentPoints { i: i + 1, j: j + 1 });
            }
        }
    }
    let mut acc = GroupAlgebraElement::one(n);
    for f in factors {
        let factor = f.evaluate(&assignments[f.i - 1], &assignments[f.j - 1], n)?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// The ordered product Φ(u_1,…,u_n) over all pairs in reverse lexicographic
/// order, at a non-singular assignment. Takes no limits: coincident values
/// error.
pub fn fusion_product_generic(assignments: &[Rational]) -> Result<GroupAlgebraElement> {
    product_over(&pairs_reverse_lex(assignments.len()), assignments)
}

/// The same product in direct lexicographic order.
pub fn fusion_product_generic_lex(assignments: &[Rational]) -> Result<GroupAlgebraElement> {
    product_over(&pairs_lex(assignments.len()), assignments)
}

/// Compares the two orderings for exact equality at a non-singular point.
pub fn ordering_invariance_check(assignments: &[Rational]) -> Result<Check> {
    let rev = fusion_product_generic(assignments)?;
    let lex = fusion_product_generic_lex(assignments)?;
    let pass = rev == lex;
    Ok(Check::new(
        format!("ordering invariance at {assignments:?}"),
        pass,
        if pass {
            format!("{} terms", rev.num_terms())
        } else {
            "reverse-lex and lex products differ".into()
        },
    ))
}

/// State after consecutively evaluating u_1,…,u_k: the accumulated value
/// (equal to Φ of the subtableau on the entries 1..k), the multiplicity of
/// the singular cancellation at this step, and the reduced scalar
/// denominator value.
#[derive(Clone, Debug)]
pub struct FusionState {
    pub step: usize,
    pub multiplicity: usize,
    pub denominator: Rational,
    pub accumulated: GroupAlgebraElement,
}

impl FusionState {
    pub fn term_count(&self) -> usize {
        self.accumulated.num_terms()
    }
}

/// Consecutive evaluation u_1 = c_1, …, u_n = c_n of Φ(u_1,…,u_n) at the
/// contents of a standard tableau. The result equals Φ_T = (n!/f_λ)·E_T.
pub fn evaluate_fusion(t: &StandardTableau) -> Result<GroupAlgebraElement> {
    Ok(evaluate_fusion_traced(t)?.0)
}

/// As [`evaluate_fusion`], also returning the per-step states.
pub fn evaluate_fusion_traced(
    t: &StandardTableau,
) -> Result<(GroupAlgebraElement, Vec<FusionState>)> {
    let n = t.n();
    let contents: Vec<Rational> = t.contents().iter().map(|&c| rat(c)).collect();
    let mut acc = GroupAlgebraElement::one(n);
    let mut states = vec![FusionState {
        step: 1.min(n),
        multiplicity: 0,
        denominator: rat(1),
        accumulated: acc.clone(),
    }];
    for k in 2..=n {
        let ck = contents[k - 1].clone();
        // numerator A_{k−1}·∏_{i<k}((c_i − u)·1 − (i k)), a polynomial in u
        let mut numerator = GAPolynomial::constant(acc);
        let minus_one = GroupAlgebraElement::scalar(n, rat(-1));
        for i in 1..k {
            let swap = GroupAlgebraElement::from_perm(Permutation::transposition(i, k, n)?);
            let constant = GroupAlgebraElement::scalar(n, contents[i - 1].clone()).sub(&swap)?;
            numerator = numerator.mul_linear(&constant, &minus_one)?;
        }
        // the scalar denominator ∏_{i<k}(c_i − u) has the root c_k with
        // multiplicity m; the numerator must carry the same power of (u − c_k)
        let m = contents[..k - 1].iter().filter(|c| **c == ck).count();
        for _ in 0..m {
            let (quotient, remainder) = numerator.divide_linear(&ck);
            if !remainder.is_zero() {
                return Err(Error::FusionSingularity { step: k });
            }
            numerator = quotient;
        }
        let mut denominator = if m % 2 == 1 { rat(-1) } else { rat(1) };
        for c in &contents[..k - 1] {
            if *c != ck {
                denominator *= c - &ck;
            }
        }
        acc = numerator.eval(&ck).scale(&(rat(1) / &denominator));
        states.push(FusionState {
            step: k,
            multiplicity: m,
            denominator,
            accumulated: acc.clone(),
        });
    }
    Ok((acc, states))
}

/// Verifies, in the cleared form that needs no inversion,
///
///   Φ_U·φ_{1n}(c_1,u0)…φ_{n−1,n}(c_{n−1},u0)·(1 − X_n/u0)
///     = ∏_{i<n}(1 − 1/(u0−c_i)²)·Φ_U,
///
/// where U has n−1 entries and the identity lives in degree n. Admissible
/// u0 avoid c_1,…,c_{n−1}, zero, and the contents of the cells addable to
/// sh(U).
pub fn phi_product_identity_check(u_tableau: &StandardTableau, u0: &Rational) -> Result<Check> {
    let n = u_tableau.n() + 1;
    let contents = u_tableau.contents();
    if u0.is_zero() {
        return Err(Error::Precondition("u0 must be nonzero".into()));
    }
    if contents.iter().any(|&c| rat(c) == *u0) {
        return Err(Error::Precondition(format!(
            "u0 = {u0} collides with a content of {u_tableau}"
        )));
    }
    if u_tableau
        .shape()
        .addable_cells()
        .iter()
        .any(|cell| rat(cell.content()) == *u0)
    {
        return Err(Error::Precondition(format!(
            "u0 = {u0} is an addable content for the shape of {u_tableau}"
        )));
    }
    let phi_u = matrix_element_phi(u_tableau).embed(n)?;
    let mut lhs = phi_u.clone();
    for (i, &c) in contents.iter().enumerate() {
        lhs = lhs.mul(&FusionFactor::new(i + 1, n)?.evaluate(&rat(c), u0, n)?)?;
    }
    let x_n = crate::units::jm_element(n, n)?;
    lhs = lhs.mul(&GroupAlgebraElement::one(n).sub(&x_n.scale(&(rat(1) / u0)))?)?;
    let mut scalar = rat(1);
    for &c in &contents {
        let d = u0 - rat(c);
        scalar *= rat(1) - rat(1) / (&d * &d);
    }
    let rhs = phi_u.scale(&scalar);
    let pass = lhs == rhs;
    Ok(Check::new(
        format!("phi-product identity for {u_tableau} at u0 = {u0}"),
        pass,
        if pass {
            format!("scalar factor {scalar}")
        } else {
            "sides differ".into()
        },
    ))
}

/// Removable-singularity value of ∏_{i<n}(1 − 1/(u−c_i)²)·u/(u−c_n) at
/// u = c_n, where the c_i are the contents of a standard μ-tableau and c_n
/// is the content of the cell λ∖μ. Equals the hook ratio H_{λ,μ}. Both
/// sides of the quotient are kept as factored linear forms; common powers
/// of (u − c_n) are cancelled before evaluating.
pub fn scalar_prefactor(mu: &Partition, lambda: &Partition, contents: &[i64]) -> Result<Rational> {
    let cell = lambda.cell_added_from(mu).ok_or_else(|| Error::NotAnEdge {
        mu: mu.to_string(),
        lambda: lambda.to_string(),
    })?;
    if contents.len() != mu.n() {
        return Err(Error::Precondition(format!(
            "expected {} contents for shape {mu}, got {}",
            mu.n(),
            contents.len()
        )));
    }
    let cn = cell.content();
    // 1 − 1/(u−c)² = (u−c−1)(u−c+1)/(u−c)², plus the factor u/(u−c_n)
    let mut numerator_roots: Vec<i64> = vec![0];
    let mut denominator_roots: Vec<i64> = vec![cn];
    for &c in contents {
        numerator_roots.push(c + 1);
        numerator_roots.push(c - 1);
        denominator_roots.push(c);
        denominator_roots.push(c);
    }
    let num_mult = numerator_roots.iter().filter(|&&r| r == cn).count();
    let den_mult = denominator_roots.iter().filter(|&&r| r == cn).count();
    if num_mult < den_mult {
        return Err(Error::Precondition(format!(
            "pole of order {} at u = {cn} is not removable",
            den_mult - num_mult
        )));
    }
    let mut value = rat(1);
    let mut cancel = den_mult;
    for &r in &numerator_roots {
        if r == cn && cancel > 0 {
            cancel -= 1;
            continue;
        }
        value *= rat(cn - r);
    }
    let mut cancel = den_mult;
    for &r in &denominator_roots {
        if r == cn && cancel > 0 {
            cancel -= 1;
            continue;
        }
        value /= rat(cn - r);
    }
    Ok(value)
}

/// Sanity check used by verification: the prefactor must agree with the
/// hook ratio for the same edge.
pub fn scalar_prefactor_check(
    mu: &Partition,
    lambda: &Partition,
    contents: &[i64],
) -> Result<Check> {
    let got = scalar_prefactor(mu, lambda, contents)?;
    let want = hook_ratio(lambda, mu)?;
    let pass = got == want;
    Ok(Check::new(
        format!("scalar prefactor for {mu} -> {lambda}"),
        pass,
        format!("prefactor {got}, hook ratio {want}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;
    use crate::units::matrix_unit_murphy;
    use crate::young::standard_tableaux;
    use num_traits::Signed;

    fn elem(terms: &[(&str, Rational)], n: usize) -> GroupAlgebraElement {
        GroupAlgebraElement::from_terms(
            n,
            terms
                .iter()
                .map(|(s, c)| (Permutation::parse_cycles(s, n).unwrap(), c.clone())),
        )
        .unwrap()
    }

    #[test]
    fn generic_two_point_products() {
        let plus = fusion_product_generic(&[rat(0), rat(1)]).unwrap();
        assert_eq!(plus, elem(&[("e", rat(1)), ("(1 2)", rat(1))], 2));
        let minus = fusion_product_generic(&[rat(0), rat(-1)]).unwrap();
        assert_eq!(minus, elem(&[("e", rat(1)), ("(1 2)", rat(-1))], 2));
        assert!(matches!(
            fusion_product_generic(&[rat(1), rat(1)]),
            Err(Error::CoincidentPoints { .. })
        ));
    }

    #[test]
    fn widely_separated_points_approach_identity() {
        // all pairwise differences are ≥ 10^6, so every non-identity
        // coefficient is O(10^-6); a crude exact bound, not an equality test
        let assignments: Vec<Rational> = (0..4).map(|k| rat(k * 1_000_000)).collect();
        let prod = fusion_product_generic(&assignments).unwrap();
        let bound = frac(1, 10_000);
        for (p, c) in prod.terms() {
            if p.is_identity() {
                assert!((c - rat(1)).abs() < bound);
            } else {
                assert!(c.abs() < bound, "{p} has large coefficient {c}");
            }
        }
    }

    #[test]
    fn ordering_invariance_examples() {
        for assignments in [
            vec![rat(0), rat(1), rat(-1)],
            vec![rat(0), rat(1), rat(-1), rat(5)],
            vec![rat(0), frac(7, 2)],
        ] {
            let check = ordering_invariance_check(&assignments).unwrap();
            assert!(check.pass, "{}", check.name);
        }
    }

    #[test]
    fn single_cell_and_row_of_two() {
        let single = StandardTableau::parse("1").unwrap();
        assert_eq!(evaluate_fusion(&single).unwrap(), GroupAlgebraElement::one(1));
        let row = StandardTableau::parse("1 2").unwrap();
        let phi = evaluate_fusion(&row).unwrap();
        assert_eq!(phi, elem(&[("e", rat(1)), ("(1 2)", rat(1))], 2));
        // consistent with E_T = (1 + (1 2))/2 and n!/f_λ = 2
        assert_eq!(phi, matrix_unit_murphy(&row).scale(&rat(2)));
    }

    #[test]
    fn two_two_tableau_evaluation() {
        let t = StandardTableau::parse("1 2/3 4").unwrap();
        let (phi, states) = evaluate_fusion_traced(&t).unwrap();
        // the only singular step is u_4 = 0 with multiplicity 1
        assert_eq!(
            states.iter().map(|s| s.multiplicity).collect::<Vec<_>>(),
            vec![0, 0, 0, 1]
        );
        // factored form: (1+(1 2))(1−(1 3))(1−(2 3)/2)(2−Σ(i 4))(2+Σ(i 4))
        let n = 4;
        let sum: GroupAlgebraElement = elem(
            &[("(1 4)", rat(1)), ("(2 4)", rat(1)), ("(3 4)", rat(1))],
            n,
        );
        let two = GroupAlgebraElement::scalar(n, rat(2));
        let factored = elem(&[("e", rat(1)), ("(1 2)", rat(1))], n)
            .mul(&elem(&[("e", rat(1)), ("(1 3)", rat(-1))], n))
            .unwrap()
            .mul(&elem(&[("e", rat(1)), ("(2 3)", frac(-1, 2))], n))
            .unwrap()
            .mul(&two.sub(&sum).unwrap())
            .unwrap()
            .mul(&two.add(&sum).unwrap())
            .unwrap();
        assert_eq!(phi, factored);
        assert_eq!(phi, matrix_unit_murphy(&t).scale(&rat(12)));
    }

    #[test]
    fn intermediate_states_match_subtableaux() {
        let t = StandardTableau::parse("1 2/3 4").unwrap();
        let (_, states) = evaluate_fusion_traced(&t).unwrap();
        for state in &states {
            let sub = t.restrict(state.step);
            let want = matrix_element_phi(&sub).embed(4).unwrap();
            assert_eq!(state.accumulated, want, "step {}", state.step);
        }
    }

    #[test]
    fn step_numerator_matches_generic_product() {
        // the step-4 numerator of the 2x2 tableau at u0 = 2 equals Φ(0,1,−1,2) times the scalar
        // denominator value (0−2)(1−2)(−1−2) = −6
        let t = StandardTableau::parse("1 2/3 4").unwrap();
        let (_, states) = evaluate_fusion_traced(&t).unwrap();
        let a3 = states[2].accumulated.clone();
        let n = 4;
        let mut numerator = GAPolynomial::constant(a3);
        let minus_one = GroupAlgebraElement::scalar(n, rat(-1));
        for (i, c) in [0i64, 1, -1].into_iter().enumerate() {
            let swap = GroupAlgebraElement::from_perm(
                Permutation::transposition(i + 1, 4, n).unwrap(),
            );
            let constant = GroupAlgebraElement::scalar(n, rat(c)).sub(&swap).unwrap();
            numerator = numerator.mul_linear(&constant, &minus_one).unwrap();
        }
        let direct = fusion_product_generic(&[rat(0), rat(1), rat(-1), rat(2)]).unwrap();
        assert_eq!(numerator.eval(&rat(2)), direct.scale(&rat(-6)));
        // regularity at u = 0: the same numerator is divisible by (u − 0)
        let (_, remainder) = numerator.divide_linear(&rat(0));
        assert!(remainder.is_zero());
    }

    #[test]
    fn theorem_equivalence_n3() {
        for lam in crate::young::partitions(3) {
            for t in standard_tableaux(&lam) {
                assert_eq!(
                    evaluate_fusion(&t).unwrap(),
                    matrix_element_phi(&t),
                    "tableau {t}"
                );
            }
        }
    }

    #[test]
    fn phi_product_identity_examples() {
        // n = 2, U the single cell: (1 + (1 2)/5)(1 − (1 2)/5) = 1 − 1/25
        let u = StandardTableau::parse("1").unwrap();
        let check = phi_product_identity_check(&u, &rat(5)).unwrap();
        assert!(check.pass, "{}", check.detail);
        let u = StandardTableau::parse("1 2/3").unwrap();
        let check = phi_product_identity_check(&u, &rat(7)).unwrap();
        assert!(check.pass, "{}", check.detail);
        // asymptotics: at huge u0 both sides are close to Φ_U itself
        let phi_u = matrix_element_phi(&u).embed(4).unwrap();
        let u0 = rat(1_000_000);
        let mut lhs = phi_u.clone();
        for (i, &c) in u.contents().iter().enumerate() {
            lhs = lhs
                .mul(&FusionFactor::new(i + 1, 4).unwrap().evaluate(&rat(c), &u0, 4).unwrap())
                .unwrap();
        }
        let bound = frac(1, 10_000);
        for (p, c) in lhs.sub(&phi_u).unwrap().terms() {
            assert!(c.abs() < bound, "{p}: {c}");
        }
        // precondition violations
        assert!(phi_product_identity_check(&u, &rat(0)).is_err());
        assert!(phi_product_identity_check(&u, &rat(1)).is_err());
        assert!(phi_product_identity_check(&u, &rat(2)).is_err());
    }

    #[test]
    fn scalar_prefactor_examples() {
        let p = |s: &str| Partition::parse(s).unwrap();
        assert_eq!(
            scalar_prefactor(&p("2,1"), &p("2,2"), &[0, 1, -1]).unwrap(),
            rat(4)
        );
        assert_eq!(scalar_prefactor(&p("1"), &p("2"), &[0]).unwrap(), rat(2));
        assert_eq!(scalar_prefactor(&p("1"), &p("1,1"), &[0]).unwrap(), rat(2));
        assert!(scalar_prefactor(&p("1,1"), &p("3"), &[0, -1]).is_err());
    }

    #[test]
    fn scalar_prefactor_tableau_independence() {
        for lam in crate::young::partitions(4) {
            for cell in lam.removable_cells() {
                let mu = lam.with_removed(cell).unwrap();
                let want = hook_ratio(&lam, &mu).unwrap();
                for u in standard_tableaux(&mu) {
                    assert_eq!(
                        scalar_prefactor(&mu, &lam, &u.contents()).unwrap(),
                        want,
                        "{mu} -> {lam} via {u}"
                    );
                }
            }
        }
    }
}
