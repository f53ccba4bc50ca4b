//! Irreducible characters of S_n as group-algebra elements.
//!
//! χ_λ = Σ_T Φ_T over the standard λ-tableaux; the coefficient of s is the
//! character value χ_λ(s). Characters are stored as full group-algebra
//! elements, not class-indexed vectors, so being a class function is a
//! checkable property rather than an assumption. The Murnaghan–Nakayama
//! rule below is an independent combinatorial oracle for the same values.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{rat, GroupAlgebraElement, Rational};
use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};
use crate::units::{jm_element, matrix_element_phi};
use crate::verify::Check;
use crate::young::{factorial, partitions, standard_tableaux, Partition};

/// χ_λ = Σ_T Φ_T, summed over all standard λ-tableaux.
pub fn character_element(lambda: &Partition) -> GroupAlgebraElement {
    let n = lambda.n();
    let mut sum = GroupAlgebraElement::zero(n);
    for t in standard_tableaux(lambda) {
        sum = sum.add(&matrix_element_phi(&t)).expect("same degree");
    }
    sum
}

/// χ̂_λ = (f_λ/n!)·χ_λ.
pub fn normalized_character(lambda: &Partition) -> GroupAlgebraElement {
    let scale = Rational::new(lambda.dimension(), factorial(lambda.n()));
    character_element(lambda).scale(&scale)
}

/// A canonical representative of the conjugacy class with the given cycle
/// type: the cycles (1 … ρ_1)(ρ_1+1 … ρ_1+ρ_2)….
pub fn class_representative(rho: &Partition) -> Permutation {
    let n = rho.n();
    let mut images: Vec<usize> = (1..=n).collect();
    let mut start = 1;
    for &len in rho.parts() {
        for k in 0..len {
            images[start + k - 1] = start + (k + 1) % len;
        }
        start += len;
    }
    Permutation::from_images(images).expect("cycle concatenation is a bijection")
}

/// Order of the centralizer z_ρ = ∏ k^{m_k}·m_k!; the class size is n!/z_ρ.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut run = 0usize;
    let parts = rho.parts();
    for i in 0..parts.len() {
        run += 1;
        z *= BigInt::from(parts[i]);
        if i + 1 == parts.len() || parts[i + 1] != parts[i] {
            z *= factorial(run);
            run = 0;
        }
    }
    z
}

pub fn class_size(rho: &Partition) -> BigInt {
    let (q, r) = num_integer::div_rem(factorial(rho.n()), centralizer_order(rho));
    assert!(r == BigInt::from(0));
    q
}

/// Checks that the coefficients of `elem` are constant on conjugacy classes.
pub fn is_class_function(elem: &GroupAlgebraElement) -> bool {
    let n = elem.degree();
    let perms = match all_permutations(n) {
        Ok(p) => p,
        Err(_) => return false,
    };
    perms.iter().all(|p| {
        elem.coeff(p) == elem.coeff(&class_representative(&p.cycle_type()))
    })
}

/// χ_λ(ρ) by the Murnaghan–Nakayama rule (border-strip recursion on first
/// column hook lengths). Independent of the matrix-unit construction.
pub fn murnaghan_nakayama(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.n() != rho.n() {
        return Err(Error::Precondition(format!(
            "|λ| = {} but |ρ| = {}",
            lambda.n(),
            rho.n()
        )));
    }
    fn rec(lam: &[usize], rho: &[usize]) -> i64 {
        let Some((&strip, rest)) = rho.split_first() else {
            return 1;
        };
        let l = lam.len();
        let beta: Vec<i64> = (0..l).map(|i| lam[i] as i64 + (l - 1 - i) as i64).collect();
        let mut total = 0;
        for i in 0..l {
            let b = beta[i] - strip as i64;
            if b < 0 || beta.contains(&b) {
                continue;
            }
            let height = beta.iter().filter(|&&x| b < x && x < beta[i]).count();
            let mut nb: Vec<i64> = beta.iter().copied().filter(|&x| x != beta[i]).collect();
            nb.push(b);
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let newlam: Vec<usize> = (0..l)
                .map(|j| nb[j] - (l - 1 - j) as i64)
                .take_while(|&x| x > 0)
                .map(|x| x as usize)
                .collect();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * rec(&newlam, rest);
        }
        total
    }
    Ok(rec(lambda.parts(), rho.parts()))
}

/// One row of the character table: the values of χ_λ on each class of S_n,
/// classes in partition enumeration order.
pub struct CharacterRow {
    pub lambda: Partition,
    pub values: Vec<(Partition, Rational)>,
}

/// Full character table of S_n from the matrix-element construction.
pub fn character_table(n: usize) -> Vec<CharacterRow> {
    let classes = partitions(n);
    partitions(n)
        .into_iter()
        .map(|lambda| {
            let chi = character_element(&lambda);
            let values = classes
                .iter()
                .map(|rho| (rho.clone(), chi.coeff(&class_representative(rho))))
                .collect();
            CharacterRow { lambda, values }
        })
        .collect()
}

/// Verifies the recurrence for normalized characters,
/// χ̂_λ = Σ_{μ→λ} χ̂_μ·∏_j (X_n − a_j)/(c − a_j),
/// and its un-normalized equivalent with numerator factors split around c
/// and the removable-content denominator.
pub fn character_recurrence_check(lambda: &Partition) -> Check {
    let n = lambda.n();
    let name = format!("character recurrence for {lambda}");
    if n < 2 {
        return Check::new(name, false, "requires |λ| ≥ 2".into());
    }
    let x_n = jm_element(n, n).expect("n >= 1");
    let mut normalized_sum = GroupAlgebraElement::zero(n);
    let mut plain_sum = GroupAlgebraElement::zero(n);
    for cell in lambda.removable_cells() {
        let mu = lambda.with_removed(cell).expect("removable");
        let c = cell.content();

        let mut term = normalized_character(&mu).embed(n).expect("m >= degree");
        for a in mu.addable_cells() {
            let a = a.content();
            if a == c {
                continue;
            }
            let factor = x_n
                .sub(&GroupAlgebraElement::scalar(n, rat(a)))
                .expect("same degree");
            term = term
                .mul(&factor)
                .expect("same degree")
                .scale(&(rat(1) / rat(c - a)));
        }
        normalized_sum = normalized_sum.add(&term).expect("same degree");

        let mut term = character_element(&mu).embed(n).expect("m >= degree");
        for a in mu.addable_cells() {
            let a = a.content();
            if a == c {
                continue;
            }
            // (a − X_n) for a > c, (X_n − a) for a < c
            let factor = if a > c {
                GroupAlgebraElement::scalar(n, rat(a)).sub(&x_n)
            } else {
                x_n.sub(&GroupAlgebraElement::scalar(n, rat(a)))
            }
            .expect("same degree");
            term = term.mul(&factor).expect("same degree");
        }
        let mut den = rat(1);
        for b in lambda.removable_cells() {
            let b = b.content();
            if b != c {
                den *= rat(if b > c { b - c } else { c - b });
            }
        }
        plain_sum = plain_sum
            .add(&term.scale(&(rat(1) / den)))
            .expect("same degree");
    }
    let normalized_ok = normalized_sum == normalized_character(lambda);
    let plain_ok = plain_sum == character_element(lambda);
    Check::new(
        name,
        normalized_ok && plain_ok,
        format!("normalized: {normalized_ok}, hook-split: {plain_ok}"),
    )
}

/// The trace-at-identity cross check: χ_λ(e) must equal f_λ.
pub fn identity_value(lambda: &Partition) -> Rational {
    character_element(lambda).coeff(&Permutation::identity(lambda.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;

    #[test]
    fn trivial_character_is_all_ones() {
        let chi = character_element(&Partition::parse("3").unwrap());
        for p in all_permutations(3).unwrap() {
            assert_eq!(chi.coeff(&p), rat(1));
        }
    }

    #[test]
    fn sign_character_alternates() {
        let chi = character_element(&Partition::parse("1,1,1").unwrap());
        assert_eq!(chi.coeff(&Permutation::identity(3)), rat(1));
        assert_eq!(
            chi.coeff(&Permutation::transposition(1, 2, 3).unwrap()),
            rat(-1)
        );
    }

    #[test]
    fn two_one_character_values() {
        let lam = Partition::parse("2,1").unwrap();
        let chi = character_element(&lam);
        let classes = [("1,1,1", 2), ("2,1", 0), ("3", -1)];
        for (rho_text, want) in classes {
            let rho = Partition::parse(rho_text).unwrap();
            assert_eq!(chi.coeff(&class_representative(&rho)), rat(want));
            assert_eq!(murnaghan_nakayama(&lam, &rho).unwrap(), want);
        }
        assert!(is_class_function(&chi));
    }

    #[test]
    fn identity_column_is_dimension() {
        for n in 1..=5 {
            for lam in partitions(n) {
                assert_eq!(
                    identity_value(&lam),
                    Rational::from_integer(lam.dimension()),
                    "λ = {lam}"
                );
            }
        }
        assert_eq!(identity_value(&Partition::parse("2,2").unwrap()), rat(2));
    }

    #[test]
    fn murnaghan_nakayama_matches_elements_small() {
        for n in 1..=4 {
            for lam in partitions(n) {
                let chi = character_element(&lam);
                for rho in partitions(n) {
                    assert_eq!(
                        chi.coeff(&class_representative(&rho)),
                        rat(murnaghan_nakayama(&lam, &rho).unwrap()),
                        "λ = {lam}, ρ = {rho}"
                    );
                }
            }
        }
    }

    #[test]
    fn murnaghan_nakayama_column_orthogonality() {
        for n in 1..=5 {
            let lams = partitions(n);
            for a in &lams {
                for b in &lams {
                    let mut total = BigInt::from(0);
                    for rho in partitions(n) {
                        let va = murnaghan_nakayama(a, &rho).unwrap();
                        let vb = murnaghan_nakayama(b, &rho).unwrap();
                        total += class_size(&rho) * BigInt::from(va * vb);
                    }
                    let want = if a == b { factorial(n) } else { BigInt::from(0) };
                    assert_eq!(total, want, "ortho({a}, {b})");
                }
            }
        }
    }

    #[test]
    fn recurrence_hand_cases() {
        // χ̂_(2) = χ̂_(1)·(X_2 + 1)/2 and χ̂_(1,1) = χ̂_(1)·(1 − X_2)/2
        let two = normalized_character(&Partition::parse("2").unwrap());
        let mut want = GroupAlgebraElement::one(2);
        want = want
            .add(&GroupAlgebraElement::from_perm(
                Permutation::transposition(1, 2, 2).unwrap(),
            ))
            .unwrap()
            .scale(&frac(1, 2));
        assert_eq!(two, want);
        for text in ["2", "1,1", "2,1", "2,2", "3,1"] {
            let check = character_recurrence_check(&Partition::parse(text).unwrap());
            assert!(check.pass, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn class_machinery() {
        let rho = Partition::parse("3,2").unwrap();
        let rep = class_representative(&rho);
        assert_eq!(rep.cycle_type(), rho);
        assert_eq!(class_size(&rho), BigInt::from(20));
        assert_eq!(centralizer_order(&Partition::parse("2,2,1").unwrap()), BigInt::from(8));
    }
}
