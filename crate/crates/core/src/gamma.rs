//! The superalgebra `Gamma(sigma1, sigma2, sigma3)`, both as an abstract
//! structure-constant table and through its realization `Gamma_alpha` inside
//! `P(4)` for `sigma = (2, -1-alpha, alpha-1)`.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseMatrix};
use crate::scalar::{Rat, Scalar};
use crate::symalg::{Monomial, Parity, Symbol, ETA1, ETA2, TOP_MASK, XI1, XI2};

pub const DIM: usize = 17;
pub const N_EVEN: usize = 9;

/// Names of the image basis; the cochain file format keys on these.
pub const NAMES: [&str; DIM] =
    ["E1", "F1", "H1", "E2", "F2", "H2", "E3", "F3", "H3", "T1", "T2", "T3", "T4", "D1", "D2", "D3", "D4"];

/// Coordinates of an element in a 17-element basis.
pub type Coords = Vec<Scalar>;

pub fn index_of(name: &str) -> Result<usize> {
    NAMES.iter().position(|n| *n == name).ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn parity_of(i: usize) -> Parity {
    if i < N_EVEN {
        Parity::Even
    } else {
        Parity::Odd
    }
}

pub fn unit(i: usize) -> Coords {
    let mut v = vec![Scalar::zero(); DIM];
    v[i] = Scalar::one();
    v
}

fn zero_coords() -> Coords {
    vec![Scalar::zero(); DIM]
}

fn axpy(acc: &mut Coords, c: &Scalar, x: &Coords) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ImageElement {
    pub name: &'static str,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub symbol: Symbol,
    pub parity: Parity,
    pub n_deg: i32,
    pub weight: (i32, i32),
}

/// The seventeen named symbols spanning an image of `Gamma` in `P(4)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaImageBasis {
    pub elements: Vec<ImageElement>,
}

impl GammaImageBasis {
    pub fn from_symbols(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.len() != DIM {
            return Err(Error::Internal(format!("expected {DIM} basis symbols, got {}", symbols.len())));
        }
        let elements = symbols
            .into_iter()
            .enumerate()
            .map(|(i, symbol)| {
                let g = symbol.gradings();
                Ok(ImageElement {
                    name: NAMES[i],
                    parity: symbol.parity().definite()?,
                    n_deg: g.n.ok_or_else(|| Error::Internal(format!("{} is not n-homogeneous", NAMES[i])))?,
                    weight: g.weight.ok_or_else(|| Error::Internal(format!("{} has no single weight", NAMES[i])))?,
                    symbol,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GammaImageBasis { elements })
    }

    pub fn symbol(&self, i: usize) -> &Symbol {
        &self.elements[i].symbol
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        self.elements.iter().map(|e| e.symbol.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&Symbol> {
        Ok(self.symbol(index_of(name)?))
    }

    pub fn specialize(&self, alpha: &Rat) -> Result<Self> {
        Self::from_symbols(self.elements.iter().map(|e| e.symbol.specialize(alpha)).collect::<Result<_>>()?)
    }

    /// `sum_i c_i * basis_i`.
    pub fn combine(&self, coords: &[Scalar]) -> Symbol {
        let mut out = Symbol::zero();
        for (c, e) in coords.iter().zip(&self.elements) {
            if !c.is_zero() {
                out = &out + &e.symbol.scale(c);
            }
        }
        out
    }
}

fn m(c: Scalar, t: i32, tau: i32, mask: u8) -> Symbol {
    Symbol::mono(c, t, tau, mask)
}

/// The embedding of `Gamma(2, -1-alpha, alpha-1)` into `K'(4)` with
/// symbolic `alpha`.
pub fn rho_alpha() -> GammaImageBasis {
    let one = Scalar::one;
    let al = Scalar::alpha;
    let syms = vec![
        m(one(), 2, 0, 0),
        &m(one(), 0, 2, 0) + &m(Scalar::from_int(-2) * al(), -2, 0, TOP_MASK),
        m(one(), 1, 1, 0),
        m(one(), 0, 0, XI1 | XI2),
        m(one(), 0, 0, ETA1 | ETA2),
        &m(one(), 0, 0, XI1 | ETA1) + &m(one(), 0, 0, XI2 | ETA2),
        m(one(), 0, 0, XI1 | ETA2),
        m(one(), 0, 0, XI2 | ETA1),
        &m(one(), 0, 0, XI1 | ETA1) - &m(one(), 0, 0, XI2 | ETA2),
        m(one(), 1, 0, ETA1),
        m(one(), 1, 0, ETA2),
        m(one(), 1, 0, XI1),
        m(one(), 1, 0, XI2),
        &m(one(), 0, 1, XI1) + &m(al(), -1, 0, XI1 | XI2 | ETA2),
        &m(one(), 0, 1, XI2) - &m(al(), -1, 0, XI1 | XI2 | ETA1),
        &m(one(), 0, 1, ETA1) + &m(al(), -1, 0, XI2 | ETA1 | ETA2),
        &m(one(), 0, 1, ETA2) - &m(al(), -1, 0, XI1 | ETA1 | ETA2),
    ];
    GammaImageBasis::from_symbols(syms).expect("embedding basis is homogeneous")
}

/// Coordinates of `s` in the span of `basis`, if it lies there.
pub fn express(basis: &[Symbol], s: &Symbol) -> Option<Coords> {
    express_many(basis, std::slice::from_ref(s)).pop().flatten()
}

pub fn express_many(basis: &[Symbol], targets: &[Symbol]) -> Vec<Option<Coords>> {
    let cols: Vec<_> = basis.iter().map(symbol_column).collect();
    let mut keys: Vec<Monomial> = cols.iter().flat_map(|c| c.keys().copied()).collect();
    keys.sort();
    keys.dedup();
    let mut a = SparseMatrix::new(basis.len());
    a.rows = keys.iter().map(|_| Default::default()).collect();
    let mut rhs = Vec::new();
    let mut outside = vec![false; targets.len()];
    for (j, col) in cols.iter().enumerate() {
        for (k, v) in col {
            let i = keys.binary_search(k).unwrap();
            a.rows[i].insert(j, v.clone());
        }
    }
    for (t, s) in targets.iter().enumerate() {
        let mut b = std::collections::BTreeMap::new();
        for (k, v) in s.terms() {
            match keys.binary_search(k) {
                Ok(i) => {
                    b.insert(i, v.clone());
                }
                Err(_) => outside[t] = true,
            }
        }
        rhs.push(b);
    }
    linalg::solve(&a, &rhs)
        .into_iter()
        .zip(outside)
        .map(|(sol, out)| if out { None } else { sol })
        .collect()
}

fn symbol_column(s: &Symbol) -> std::collections::BTreeMap<Monomial, Scalar> {
    s.terms().map(|(m, c)| (*m, c.clone())).collect()
}

/// `[X_a, X_b] = sum_c table[a][b][c] X_c`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTable {
    table: Vec<Vec<Coords>>,
}

impl StructureTable {
    pub fn from_fn(f: impl Fn(usize, usize) -> Coords) -> Self {
        StructureTable { table: (0..DIM).map(|a| (0..DIM).map(|b| f(a, b)).collect()).collect() }
    }

    /// Expand every bracket of basis elements back into the basis.
    pub fn from_basis(basis: &[Symbol], bracket: impl Fn(&Symbol, &Symbol) -> Result<Symbol> + Sync) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (0..DIM).flat_map(|a| (0..DIM).map(move |b| (a, b))).collect();
        let brackets: Vec<Symbol> =
            pairs.par_iter().map(|&(a, b)| bracket(&basis[a], &basis[b])).collect::<Result<_>>()?;
        let coords = express_many(basis, &brackets);
        let mut table = vec![vec![zero_coords(); DIM]; DIM];
        for ((a, b), c) in pairs.into_iter().zip(coords) {
            table[a][b] =
                c.ok_or_else(|| Error::Internal(format!("[{}, {}] leaves the span of the basis", NAMES[a], NAMES[b])))?;
        }
        Ok(StructureTable { table })
    }

    pub fn get(&self, a: usize, b: usize) -> &Coords {
        &self.table[a][b]
    }

    pub fn bracket(&self, x: &Coords, y: &Coords) -> Coords {
        let mut out = zero_coords();
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                axpy(&mut out, &(xa * yb), &self.table[a][b]);
            }
        }
        out
    }

    pub fn specialize(&self, alpha: &Rat) -> Result<Self> {
        let mut table = self.table.clone();
        for row in table.iter_mut() {
            for c in row.iter_mut() {
                for v in c.iter_mut() {
                    *v = v.specialize(alpha)?;
                }
            }
        }
        Ok(StructureTable { table })
    }

    /// First ordered triple violating the graded Jacobi identity
    /// `[X,[Y,Z]] = [[X,Y],Z] + (-1)^(p(X)p(Y)) [Y,[X,Z]]`, with its residual.
    pub fn jacobi_violation(&self) -> Option<((usize, usize, usize), Coords)> {
        for a in 0..DIM {
            for b in 0..DIM {
                for c in 0..DIM {
                    let lhs = self.bracket(&unit(a), self.get(b, c));
                    let mut rhs = self.bracket(self.get(a, b), &unit(c));
                    let sign = Scalar::from_int(parity_of(a).koszul(parity_of(b)));
                    axpy(&mut rhs, &sign, &self.bracket(&unit(b), self.get(a, c)));
                    let res: Coords = lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect();
                    if res.iter().any(|v| !v.is_zero()) {
                        return Some(((a, b, c), res));
                    }
                }
            }
        }
        None
    }
}

/// Structure constants of `Gamma_alpha` computed from the Poisson brackets
/// of [`rho_alpha`]; computed once per process.
pub fn structure_table() -> &'static StructureTable {
    static TABLE: OnceLock<StructureTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        StructureTable::from_basis(&rho_alpha().symbols(), |a, b| Ok(a.poisson(b))).expect("Gamma_alpha is closed")
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiFailure {
    pub triple: (String, String, String),
    pub residual: String,
}

/// Exhaustive graded Jacobi check of an image basis under the Poisson bracket:
/// `(-1)^(p(A)p(C)) {A,{B,C}} + cyclic = 0`.
pub fn jacobi_check_image(basis: &GammaImageBasis) -> std::result::Result<(), JacobiFailure> {
    let syms = basis.symbols();
    let inner: Vec<Vec<Symbol>> = (0..DIM).map(|b| (0..DIM).map(|c| syms[b].poisson(&syms[c])).collect()).collect();
    let triples: Vec<(usize, usize, usize)> =
        (0..DIM).flat_map(|a| (0..DIM).flat_map(move |b| (0..DIM).map(move |c| (a, b, c)))).collect();
    let failure = triples.par_iter().find_first(|&&(a, b, c)| {
        let term = |x: usize, y: usize, z: usize| {
            let v = syms[x].poisson(&inner[y][z]);
            if parity_of(x).koszul(parity_of(z)) < 0 {
                -v
            } else {
                v
            }
        };
        let total = &(&term(a, b, c) + &term(b, c, a)) + &term(c, a, b);
        !total.is_zero()
    });
    match failure {
        None => Ok(()),
        Some(&(a, b, c)) => {
            let term = |x: usize, y: usize, z: usize| {
                let v = syms[x].poisson(&inner[y][z]);
                if parity_of(x).koszul(parity_of(z)) < 0 {
                    -v
                } else {
                    v
                }
            };
            let total = &(&term(a, b, c) + &term(b, c, a)) + &term(c, a, b);
            Err(JacobiFailure {
                triple: (NAMES[a].into(), NAMES[b].into(), NAMES[c].into()),
                residual: total.to_string(),
            })
        }
    }
}

// --- abstract Gamma(sigma) -------------------------------------------------

type Mat2 = [[i64; 2]; 2];

/// `Phi(e_a, e_b) z = psi(e_b, z) e_a - psi(z, e_a) e_b` in the basis
/// `Phi(e1,e1), Phi(e2,e2), Phi(e1,e2)`.
const PHI: [Mat2; 3] = [[[0, 2], [0, 0]], [[0, 0], [-2, 0]], [[-1, 0], [0, 1]]];

fn psi(a: usize, b: usize) -> i64 {
    match (a, b) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

fn phi_slot(a: usize, b: usize) -> usize {
    match (a, b) {
        (0, 0) => 0,
        (1, 1) => 1,
        _ => 2,
    }
}

fn mat_coords(m: &Mat2) -> [Rat; 3] {
    [crate::scalar::rat(m[0][1], 2), crate::scalar::rat(-m[1][0], 2), crate::scalar::rat_int(-m[0][0])]
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// Index of the odd abstract element `e_{a+1} (x) f_{b+1} (x) h_{c+1}`.
fn odd_index(v: [usize; 3]) -> usize {
    N_EVEN + 4 * v[0] + 2 * v[1] + v[2]
}

fn odd_factors(i: usize) -> [usize; 3] {
    let k = i - N_EVEN;
    [k / 4, (k / 2) % 2, k % 2]
}

pub fn abstract_names() -> Vec<String> {
    let letters = ['e', 'f', 'h'];
    let mut out = Vec::new();
    for (i, l) in letters.iter().enumerate() {
        for (a, b) in [(1, 1), (2, 2), (1, 2)] {
            out.push(format!("Phi{}({l}{a},{l}{b})", i + 1));
        }
    }
    for k in 0..8 {
        let [a, b, c] = odd_factors(N_EVEN + k);
        out.push(format!("e{}f{}h{}", a + 1, b + 1, c + 1));
    }
    out
}

#[derive(Clone, Debug)]
pub struct AbstractGamma {
    pub sigma: [Scalar; 3],
    /// `sigma1 + sigma2 + sigma3 = 0`, the Jacobi condition.
    pub sum_zero: bool,
    /// All `sigma_i` nonzero.
    pub simple: bool,
    pub table: StructureTable,
}

pub fn build_abstract(sigma: [Scalar; 3]) -> AbstractGamma {
    let sum = &(&sigma[0] + &sigma[1]) + &sigma[2];
    let table = StructureTable::from_fn(|x, y| abstract_bracket(&sigma, x, y));
    AbstractGamma { sum_zero: sum.is_zero(), simple: sigma.iter().all(|s| !s.is_zero()), sigma, table }
}

fn abstract_bracket(sigma: &[Scalar; 3], x: usize, y: usize) -> Coords {
    let mut out = zero_coords();
    match (x < N_EVEN, y < N_EVEN) {
        (true, true) => {
            let (i, j) = (x / 3, y / 3);
            if i == j {
                let (a, b) = (&PHI[x % 3], &PHI[y % 3]);
                let ab = mat_mul(a, b);
                let ba = mat_mul(b, a);
                let comm = [[ab[0][0] - ba[0][0], ab[0][1] - ba[0][1]], [ab[1][0] - ba[1][0], ab[1][1] - ba[1][1]]];
                for (k, c) in mat_coords(&comm).into_iter().enumerate() {
                    out[3 * i + k] = Scalar::from_rat(c);
                }
            }
        }
        (true, false) => {
            let i = x / 3;
            let a = &PHI[x % 3];
            let v = odd_factors(y);
            for r in 0..2 {
                let c = a[r][v[i]];
                if c != 0 {
                    let mut w = v;
                    w[i] = r;
                    out[odd_index(w)] = &out[odd_index(w)] + &Scalar::from_int(c);
                }
            }
        }
        (false, true) => {
            out = abstract_bracket(sigma, y, x).into_iter().map(|c| -c).collect();
        }
        (false, false) => {
            let (u, v) = (odd_factors(x), odd_factors(y));
            for i in 0..3 {
                let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
                let w = psi(u[others[0]], v[others[0]]) * psi(u[others[1]], v[others[1]]);
                if w != 0 {
                    let k = 3 * i + phi_slot(u[i], v[i]);
                    out[k] = &out[k] + &(&sigma[i] * &Scalar::from_int(w));
                }
            }
        }
    }
    out
}

impl AbstractGamma {
    pub fn jacobi_check(&self) -> std::result::Result<(), JacobiFailure> {
        match self.table.jacobi_violation() {
            None => Ok(()),
            Some(((a, b, c), res)) => {
                let names = abstract_names();
                let residual = res
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| format!("({v})*{}", names[i]))
                    .collect::<Vec<_>>()
                    .join(" + ");
                Err(JacobiFailure { triple: (names[a].clone(), names[b].clone(), names[c].clone()), residual })
            }
        }
    }
}

/// `sigma = (2, -1-alpha, alpha-1)`.
pub fn alpha_sigma() -> [Scalar; 3] {
    let a = Scalar::alpha();
    [Scalar::from_int(2), -(&a + &Scalar::one()), &a - &Scalar::one()]
}

/// Images of the abstract basis in the span of [`rho_alpha`], as coordinates.
pub fn iso_map() -> Vec<Coords> {
    let s = Scalar::s();
    let c = |i: usize, v: Scalar| {
        let mut x = zero_coords();
        x[i] = v;
        x
    };
    let n = |k: i64| Scalar::from_int(k);
    let idx = |name: &str| index_of(name).unwrap();
    let mut out = vec![
        c(idx("E1"), n(-1)),
        c(idx("F1"), n(-1)),
        c(idx("H1"), n(-1)),
        c(idx("F2"), n(-2)),
        c(idx("E2"), n(-2)),
        c(idx("H2"), n(1)),
        c(idx("F3"), n(-2)),
        c(idx("E3"), n(2)),
        c(idx("H3"), n(1)),
    ];
    let odd = [("T1", 1), ("T2", 1), ("T4", -1), ("T3", 1), ("D3", 1), ("D4", 1), ("D2", -1), ("D1", 1)];
    for (name, sign) in odd {
        out.push(c(idx(name), &s * &n(sign)));
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsoMismatch {
    pub pair: (String, String),
    pub abstract_side: String,
    pub poisson_side: String,
}

/// Check `rho([X,Y]) = {rho X, rho Y}` on all ordered pairs of the abstract
/// basis of `Gamma(2, -1-alpha, alpha-1)`.
pub fn verify_iso() -> std::result::Result<(), IsoMismatch> {
    let g = build_abstract(alpha_sigma());
    let image = rho_alpha();
    let map = iso_map();
    let rho = |x: &Coords| {
        let mut acc = zero_coords();
        for (i, c) in x.iter().enumerate() {
            axpy(&mut acc, c, &map[i]);
        }
        image.combine(&acc)
    };
    let images: Vec<Symbol> = (0..DIM).map(|i| rho(&unit(i))).collect();
    let pairs: Vec<(usize, usize)> = (0..DIM).flat_map(|a| (0..DIM).map(move |b| (a, b))).collect();
    let bad = pairs.par_iter().find_first(|&&(a, b)| rho(g.table.get(a, b)) != images[a].poisson(&images[b]));
    match bad {
        None => Ok(()),
        Some(&(a, b)) => {
            let names = abstract_names();
            Err(IsoMismatch {
                pair: (names[a].clone(), names[b].clone()),
                abstract_side: rho(g.table.get(a, b)).to_string(),
                poisson_side: images[a].poisson(&images[b]).to_string(),
            })
        }
    }
}

/// A scale `k` and permutation `pi` with `sigma'_i = k * sigma_{pi(i)}`.
pub fn gamma_equivalent(sigma: &[Scalar; 3], sigma_prime: &[Scalar; 3]) -> Option<(Scalar, [usize; 3])> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    'perm: for pi in PERMS {
        let mut k: Option<Scalar> = None;
        for i in 0..3 {
            let (src, dst) = (&sigma[pi[i]], &sigma_prime[i]);
            if src.is_zero() {
                if !dst.is_zero() {
                    continue 'perm;
                }
                continue;
            }
            let ratio = dst / src;
            match &k {
                None => k = Some(ratio),
                Some(k0) if *k0 != ratio => continue 'perm,
                _ => {}
            }
        }
        match k {
            Some(k) if !k.is_zero() => return Some((k, pi)),
            _ => continue,
        }
    }
    None
}

/// Dimension of the span of `{odd, odd}` brackets at a rational `alpha`.
pub fn derived_even_dim(alpha: &Rat) -> Result<usize> {
    let basis = rho_alpha().specialize(alpha)?;
    let cols: Vec<_> = (N_EVEN..DIM)
        .flat_map(|i| (i..DIM).map(move |j| (i, j)))
        .map(|(i, j)| symbol_column(&basis.symbol(i).poisson(basis.symbol(j))))
        .collect();
    Ok(linalg::rank(&SparseMatrix::from_columns(&cols)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use crate::symalg::Target;

    #[test]
    fn image_basis_metadata() {
        let b = rho_alpha();
        for e in &b.elements {
            assert_eq!(e.symbol.gradings().k, Some(2), "{}", e.name);
            assert!(e.symbol.is_member(Target::K4prime), "{}", e.name);
        }
        assert_eq!(b.get("H1").unwrap().to_string(), "t*tau");
        assert_eq!(b.get("D4").unwrap().to_string(), "-alpha*t^-1*xi1*eta1*eta2 + tau*eta2");
        assert_eq!(b.specialize(&rat_int(0)).unwrap().get("F1").unwrap().to_string(), "tau^2");
        assert_eq!(b.elements[index_of("T1").unwrap()].n_deg, 1);
        assert_eq!(b.elements[index_of("E3").unwrap()].weight, (1, -1));
    }

    #[test]
    fn structure_table_known_brackets() {
        let t = structure_table();
        let (f2, e2, h2) = (index_of("F2").unwrap(), index_of("E2").unwrap(), index_of("H2").unwrap());
        assert_eq!(t.get(f2, e2), &unit(h2));
        // the three sp(2) triples commute
        for a in 0..N_EVEN {
            for b in 0..N_EVEN {
                if a / 3 != b / 3 {
                    assert!(t.get(a, b).iter().all(Scalar::is_zero));
                }
            }
        }
        let (h1, e1) = (index_of("H1").unwrap(), index_of("E1").unwrap());
        let mut expect = zero_coords();
        expect[e1] = Scalar::from_int(2);
        assert_eq!(t.get(h1, e1), &expect);
    }

    #[test]
    fn abstract_jacobi_iff_sum_zero() {
        let g = build_abstract(alpha_sigma());
        assert!(g.sum_zero && g.simple);
        assert!(g.jacobi_check().is_ok());
        let g0 = build_abstract([Scalar::from_int(2), Scalar::from_int(-1), Scalar::from_int(-1)]);
        assert!(g0.jacobi_check().is_ok());
        let bad = build_abstract([Scalar::one(), Scalar::one(), Scalar::one()]);
        assert!(!bad.sum_zero);
        assert!(bad.jacobi_check().is_err());
        let degenerate = build_abstract([Scalar::one(), Scalar::from_int(-1), Scalar::zero()]);
        assert!(!degenerate.simple);
        assert!(degenerate.jacobi_check().is_ok());
    }

    #[test]
    fn image_jacobi_and_iso() {
        assert!(jacobi_check_image(&rho_alpha()).is_ok());
        assert_eq!(verify_iso(), Ok(()));
    }

    #[test]
    fn equivalence_witnesses() {
        let n = |k: i64| Scalar::from_int(k);
        let (k, pi) = gamma_equivalent(&[n(2), n(-1), n(-1)], &[n(-4), n(2), n(2)]).unwrap();
        assert_eq!((k, pi), (n(-2), [0, 1, 2]));
        let s = alpha_sigma();
        let (k, pi) = gamma_equivalent(&s, &[s[2].clone(), s[0].clone(), s[1].clone()]).unwrap();
        assert_eq!((k, pi), (n(1), [2, 0, 1]));
        let (k, pi) = gamma_equivalent(&[n(1), n(1), n(-2)], &[n(1), n(-2), n(1)]).unwrap();
        assert_eq!((k, pi), (n(1), [0, 2, 1]));
        assert!(gamma_equivalent(&[n(1), n(2), n(-3)], &[n(1), n(1), n(-2)]).is_none());
    }

    #[test]
    fn derived_even_dimension() {
        assert_eq!(derived_even_dim(&rat_int(2)).unwrap(), 9);
        assert_eq!(derived_even_dim(&rat(1, 2)).unwrap(), 9);
        assert_eq!(derived_even_dim(&rat_int(1)).unwrap(), 6);
        assert_eq!(derived_even_dim(&rat_int(-1)).unwrap(), 6);
    }

    #[test]
    fn express_outside_span() {
        let b = rho_alpha().symbols();
        assert!(express(&b, &Symbol::mono(1, 3, 0, 0)).is_none());
        let x = &b[0].scale(&Scalar::from_int(3)) - &b[16];
        let c = express(&b, &x).unwrap();
        assert_eq!(c[0], Scalar::from_int(3));
        assert_eq!(c[16], Scalar::from_int(-1));
    }
}
