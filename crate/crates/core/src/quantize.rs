//! The associative superalgebra `P+_h(4)`: the Moyal-type product on the
//! `(t, tau)` factor tensored with the Clifford deformation
//! `eta_i xi_j = h delta_ij - xi_j eta_i` of the Grassmann algebra.
//!
//! Symbols are read as normal-ordered words: `t`-powers before `tau`-powers,
//! all `xi` before all `eta`. The representation is the one of
//! [`Symbol`](crate::symalg::Symbol), with `h` carried in the monomial.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cohomology::{BlockSpec, Cochain1};
use crate::error::{Error, Result};
use crate::gamma::{GammaImageBasis, NAMES};
use crate::scalar::{Rat, Scalar};
use crate::symalg::{Monomial, Parity, Symbol, ETA1, ETA2, TOP_MASK, XI1, XI2};

/// A normal-ordered Grassmann word with an `h`-power and integer coefficient.
type CliffordTerm = (u8, u32, i64);

/// Normal form of a word of generator indices (0..4 for xi1, xi2, eta1, eta2).
fn normal_order(word: &[u8]) -> Vec<CliffordTerm> {
    for i in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[i], word[i + 1]);
        if a == b {
            return Vec::new();
        }
        if a > b {
            let mut swapped = word.to_vec();
            swapped.swap(i, i + 1);
            let mut out: Vec<CliffordTerm> = normal_order(&swapped).into_iter().map(|(m, h, c)| (m, h, -c)).collect();
            if a >= 2 && b < 2 && a - 2 == b {
                let mut shorter = word[..i].to_vec();
                shorter.extend_from_slice(&word[i + 2..]);
                out.extend(normal_order(&shorter).into_iter().map(|(m, h, c)| (m, h + 1, c)));
            }
            return collect_terms(out);
        }
    }
    vec![(word.iter().fold(0u8, |m, g| m | (1 << g)), 0, 1)]
}

fn collect_terms(terms: Vec<CliffordTerm>) -> Vec<CliffordTerm> {
    let mut acc: std::collections::BTreeMap<(u8, u32), i64> = Default::default();
    for (m, h, c) in terms {
        *acc.entry((m, h)).or_default() += c;
    }
    acc.into_iter().filter(|(_, c)| *c != 0).map(|((m, h), c)| (m, h, c)).collect()
}

fn word(mask: u8) -> Vec<u8> {
    (0..4).filter(|i| mask & (1 << i) != 0).collect()
}

/// Products of normal-ordered Grassmann words, for all pairs of masks.
fn clifford_table() -> &'static Vec<Vec<Vec<CliffordTerm>>> {
    static TABLE: OnceLock<Vec<Vec<Vec<CliffordTerm>>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..16u8)
            .map(|m1| {
                (0..16u8)
                    .map(|m2| {
                        let mut w = word(m1);
                        w.extend(word(m2));
                        normal_order(&w)
                    })
                    .collect()
            })
            .collect()
    })
}

/// Normal form of the Grassmann word formed by the generators in `gens`, in
/// the given order.
pub fn normal_order_word(gens: &[u8]) -> Symbol {
    let idx: Vec<u8> = gens.iter().map(|g| g.trailing_zeros() as u8).collect();
    Symbol::from_terms(
        normal_order(&idx)
            .into_iter()
            .map(|(m, h, c)| (Monomial { mask: m, h, ..Monomial::ONE }, Scalar::from_int(c))),
    )
}

fn falling(x: i64, n: u32) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(x - i))
}

fn factorial(n: u32) -> BigInt {
    (1..=n as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `A o_h B = sum_n h^n/n! d_tau^n A d_t^n B`, with Grassmann words
/// multiplied in the Clifford algebra.
pub fn moyal_mul(a: &Symbol, b: &Symbol) -> Result<Symbol> {
    let table = clifford_table();
    let mut out = Symbol::zero();
    for (m1, c1) in a.terms() {
        if m1.tau < 0 {
            return Err(Error::Semantic(format!("negative tau power in {m1}: outside P+_h(4)")));
        }
        for (m2, c2) in b.terms() {
            let words = &table[m1.mask as usize][m2.mask as usize];
            if words.is_empty() {
                continue;
            }
            let c12 = c1 * c2;
            for n in 0..=(m1.tau as u32) {
                let w = falling(m1.tau as i64, n) * falling(m2.t as i64, n);
                if w.is_zero() {
                    continue;
                }
                let coef = Scalar::from_rat(Rat::new(w, factorial(n)));
                let base = &c12 * &coef;
                for &(mask, h, c) in words {
                    let m = Monomial {
                        beta: m1.beta + m2.beta,
                        h: m1.h + m2.h + n + h,
                        t: m1.t + m2.t - n as i32,
                        tau: m1.tau + m2.tau - n as i32,
                        mask,
                    };
                    out.add_term(m, &base * &Scalar::from_int(c));
                }
            }
        }
    }
    Ok(out)
}

/// `[A, B]_h = (A o B - (-1)^(p(A)p(B)) B o A) / h`, split by parity.
pub fn h_bracket(a: &Symbol, b: &Symbol) -> Result<Symbol> {
    let mut total = Symbol::zero();
    for (ap, pa) in [(a.even_part(), Parity::Even), (a.odd_part(), Parity::Odd)] {
        if ap.is_zero() {
            continue;
        }
        for (bp, pb) in [(b.even_part(), Parity::Even), (b.odd_part(), Parity::Odd)] {
            if bp.is_zero() {
                continue;
            }
            let ab = moyal_mul(&ap, &bp)?;
            let ba = moyal_mul(&bp, &ap)?;
            let comm = if pa.koszul(pb) < 0 { &ab + &ba } else { &ab - &ba };
            total = &total + &comm;
        }
    }
    if let Some((m, _)) = total.terms().find(|(m, _)| m.h == 0) {
        return Err(Error::Internal(format!("supercommutator not divisible by h at monomial {m}")));
    }
    Ok(total.map_monomials(|m| Some(Monomial { h: m.h - 1, ..*m })))
}

/// Set `h = 0`.
pub fn contract(a: &Symbol) -> Symbol {
    a.filter(|m| m.h == 0)
}

/// `contract([A, B]_h) = {contract A, contract B}`.
pub fn check_contraction(a: &Symbol, b: &Symbol) -> Result<bool> {
    Ok(contract(&h_bracket(a, b)?) == contract(a).poisson(&contract(b)))
}

/// Basis of `Gamma_{alpha,h}`, with symbolic `alpha` and `h`.
pub fn gamma_h_basis() -> GammaImageBasis {
    static BASIS: OnceLock<GammaImageBasis> = OnceLock::new();
    BASIS.get_or_init(build_gamma_h).clone()
}

fn build_gamma_h() -> GammaImageBasis {
    let al = Scalar::alpha;
    let one = Scalar::one;
    let half = Scalar::from_rat(crate::scalar::rat(1, 2));
    let hm = |c: Scalar, t: i32, tau: i32, mask: u8, h: u32| Symbol::term(c, Monomial::new(t, tau, mask).with_h(h));
    let mut syms = crate::gamma::rho_alpha().symbols();
    let idx = |n: &str| NAMES.iter().position(|x| *x == n).unwrap();
    syms[idx("H1")] = &hm(one(), 1, 1, 0, 0) + &hm(&(al() + one()) * &half, 0, 0, 0, 1);
    let correction = &(&hm(Scalar::from_int(2), -2, 0, TOP_MASK, 0) + &hm(one(), -2, 0, XI1 | ETA1, 1))
        + &(&hm(one(), -2, 0, XI2 | ETA2, 1) - &hm(one(), -1, 1, 0, 1));
    syms[idx("F1")] = &hm(one(), 0, 2, 0, 0) - &correction.scale(&al());
    syms[idx("H2")] = &(&hm(one(), 0, 0, XI1 | ETA1, 0) + &hm(one(), 0, 0, XI2 | ETA2, 0)) - &Symbol::hbar();
    let word = |gens: &[u8]| normal_order_word(gens);
    let t_inv = Symbol::mono(1, -1, 0, 0);
    syms[idx("D3")] = &Symbol::mono(1, 0, 1, ETA1) + &t_inv.mul(&word(&[ETA1, ETA2, XI2])).scale(&al());
    syms[idx("D4")] = &Symbol::mono(1, 0, 1, ETA2) - &t_inv.mul(&word(&[ETA1, ETA2, XI1])).scale(&al());
    GammaImageBasis::from_symbols(syms).expect("Gamma_h basis is homogeneous")
}

/// The block carrying the `h`-deformed embedding itself.
pub fn embedding_block() -> BlockSpec {
    BlockSpec::quantized(2, 0, 1)
}

/// `theta1` adapted to `Gamma_{alpha,h}`.
pub fn theta_bar1() -> Cochain1 {
    let mut c = crate::cohomology::named_cocycle("theta1").expect("theta1 is defined");
    c.block = BlockSpec::quantized(0, 0, 2);
    let f1 = &Symbol::mono(2, -1, 1, 0)
        + &Symbol::term(&Scalar::alpha() - &Scalar::one(), Monomial::new(-2, 0, 0).with_h(1));
    c.set("F1", f1).expect("F1 is a basis name");
    c
}
