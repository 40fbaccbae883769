//! Weight-zero bigraded blocks of the Chevalley-Eilenberg complex
//! `C^0 -> C^1 -> C^2` of `Gamma_alpha` with coefficients in `P(4)` and its
//! subalgebras, together with cup products and the linear solves built on
//! the differentials.
//!
//! Conventions: `(d0 m)(X) = {X, m}` and
//! `(d1 c)(X, Y) = {X, c(Y)} -/+ {Y, c(X)} - c([X, Y])`, with `+` exactly
//! when both arguments are odd.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{self, GammaImageBasis, StructureTable, DIM, NAMES};
use crate::linalg::{Elimination, SparseMatrix};
use crate::quantize;
use crate::scalar::{AlphaPoly, Rat, Scalar};
use crate::symalg::{k4_quotient_monomial, Monomial, Parity, Symbol, Target};

fn default_true() -> bool {
    true
}

/// A block `(k, n)` of cochains with values in `target`.
///
/// `k` is the k-degree of cochain values and `n` the shift of the n-degree.
/// A positive `h_depth` selects the quantized complex: values may carry
/// `h^q` for `q <= h_depth`, `h` counting 2 towards the k-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockSpec {
    pub k: i32,
    pub n: i32,
    pub target: Target,
    #[serde(default = "default_true")]
    pub weight_zero: bool,
    #[serde(default)]
    pub h_depth: u32,
}

impl BlockSpec {
    pub fn new(k: i32, n: i32, target: Target) -> Self {
        BlockSpec { k, n, target, weight_zero: true, h_depth: 0 }
    }

    pub fn quantized(k: i32, n: i32, h_depth: u32) -> Self {
        BlockSpec { k, n, target: Target::Pplus, weight_zero: true, h_depth }
    }

    pub fn is_quantized(&self) -> bool {
        self.h_depth > 0
    }

    pub fn engine(&self) -> Engine {
        if self.is_quantized() {
            Engine::Quantized
        } else {
            Engine::Poisson
        }
    }

    pub fn validate(&self) -> Result<()> {
        if matches!(self.target, Target::K4 | Target::K4prime) && self.k != 2 {
            return Err(Error::BlockViolation(format!("target {} requires k = 2, got k = {}", self.target, self.k)));
        }
        if self.is_quantized() && self.target != Target::Pplus {
            return Err(Error::BlockViolation("quantized blocks take values in P+".into()));
        }
        Ok(())
    }

    fn k_of(&self, m: &Monomial) -> i32 {
        m.k_degree() + 2 * m.h as i32
    }

    /// Why `m` cannot appear in a value of a cochain on an argument of the
    /// given parity, n-degree and weight, if it cannot.
    fn reject(&self, m: &Monomial, parity: Parity, n_arg: i32, weight: (i32, i32)) -> Option<String> {
        if m.beta != 0 {
            return Some(format!("{m} carries beta"));
        }
        if m.h > self.h_depth {
            return Some(format!("{m} exceeds h-depth {}", self.h_depth));
        }
        if m.parity() != parity {
            return Some(format!("{m} has the wrong parity"));
        }
        if self.k_of(m) != self.k {
            return Some(format!("{m} has k-degree {} instead of {}", self.k_of(m), self.k));
        }
        if m.n_degree() != n_arg + self.n {
            return Some(format!("{m} has n-degree {} instead of {}", m.n_degree(), n_arg + self.n));
        }
        if self.weight_zero && m.weight() != weight {
            return Some(format!("{m} has weight {:?} instead of {:?}", m.weight(), weight));
        }
        if !Symbol::term(Scalar::one(), *m).is_member(self.target) {
            return Some(format!("{m} is not in {}", self.target));
        }
        None
    }

    /// All monomials allowed as values on an argument of the given parity,
    /// n-degree and weight.
    pub fn monomials(&self, parity: Parity, n_arg: i32, weight: (i32, i32)) -> Vec<Monomial> {
        let mut out = Vec::new();
        for q in 0..=self.h_depth {
            for mask in 0u8..16 {
                let g = mask.count_ones() as i32;
                let s = self.k - 2 * q as i32 - g;
                let n = n_arg + self.n;
                if (s + n).rem_euclid(2) != 0 {
                    continue;
                }
                let m = Monomial { beta: 0, h: q, t: (s + n) / 2, tau: (s - n) / 2, mask };
                if self.reject(&m, parity, n_arg, weight).is_none() {
                    out.push(m);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, n={}, {}", self.k, self.n, self.target)?;
        if self.h_depth > 0 {
            write!(f, ", h-depth {}", self.h_depth)?;
        }
        if !self.weight_zero {
            write!(f, ", all weights")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Poisson,
    #[serde(alias = "h_bracket")]
    Quantized,
}

impl Engine {
    pub fn bracket(&self, a: &Symbol, b: &Symbol) -> Result<Symbol> {
        match self {
            Engine::Poisson => Ok(a.poisson(b)),
            Engine::Quantized => quantize::h_bracket(a, b),
        }
    }
}

/// The image basis, its structure table and the bracket acting on values.
#[derive(Clone, Debug)]
pub struct Complex {
    pub engine: Engine,
    pub basis: GammaImageBasis,
    pub table: StructureTable,
    pub alpha: Option<Rat>,
}

impl Complex {
    pub fn classical() -> &'static Complex {
        static CX: OnceLock<Complex> = OnceLock::new();
        CX.get_or_init(|| Complex {
            engine: Engine::Poisson,
            basis: gamma::rho_alpha(),
            table: gamma::structure_table().clone(),
            alpha: None,
        })
    }

    pub fn quantized() -> &'static Complex {
        static CX: OnceLock<Complex> = OnceLock::new();
        CX.get_or_init(|| Complex {
            engine: Engine::Quantized,
            basis: quantize::gamma_h_basis(),
            table: gamma::structure_table().clone(),
            alpha: None,
        })
    }

    pub fn for_engine(engine: Engine) -> &'static Complex {
        match engine {
            Engine::Poisson => Self::classical(),
            Engine::Quantized => Self::quantized(),
        }
    }

    pub fn for_block(block: &BlockSpec) -> &'static Complex {
        Self::for_engine(block.engine())
    }

    pub fn specialize(&self, alpha: &Rat) -> Result<Complex> {
        Ok(Complex {
            engine: self.engine,
            basis: self.basis.specialize(alpha)?,
            table: self.table.specialize(alpha)?,
            alpha: Some(alpha.clone()),
        })
    }

    fn rho(&self, i: usize) -> &Symbol {
        self.basis.symbol(i)
    }
}

/// An even linear map from `Gamma_alpha` to symbols, given on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1 {
    pub images: Vec<Symbol>,
    pub block: BlockSpec,
}

impl Cochain1 {
    pub fn zero(block: BlockSpec) -> Self {
        Cochain1 { images: vec![Symbol::zero(); DIM], block }
    }

    pub fn from_named(block: BlockSpec, values: &[(&str, Symbol)]) -> Result<Self> {
        let mut c = Self::zero(block);
        for (name, v) in values {
            c.set(name, v.clone())?;
        }
        Ok(c)
    }

    /// The cochain `X -> rho(X)` of an image basis.
    pub fn from_basis(basis: &GammaImageBasis, block: BlockSpec) -> Self {
        Cochain1 { images: basis.symbols(), block }
    }

    pub fn get(&self, name: &str) -> Result<&Symbol> {
        Ok(&self.images[gamma::index_of(name)?])
    }

    pub fn set(&mut self, name: &str, value: Symbol) -> Result<()> {
        self.images[gamma::index_of(name)?] = value;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Symbol::is_zero)
    }

    pub fn with_block(mut self, block: BlockSpec) -> Self {
        self.block = block;
        self
    }

    pub fn add(&self, other: &Cochain1) -> Cochain1 {
        Cochain1 { images: self.images.iter().zip(&other.images).map(|(a, b)| a + b).collect(), block: self.block }
    }

    pub fn sub(&self, other: &Cochain1) -> Cochain1 {
        Cochain1 { images: self.images.iter().zip(&other.images).map(|(a, b)| a - b).collect(), block: self.block }
    }

    pub fn scale(&self, c: &Scalar) -> Cochain1 {
        Cochain1 { images: self.images.iter().map(|a| a.scale(c)).collect(), block: self.block }
    }

    pub fn map(&self, f: impl Fn(&Symbol) -> Symbol) -> Cochain1 {
        Cochain1 { images: self.images.iter().map(f).collect(), block: self.block }
    }

    pub fn specialize(&self, alpha: &Rat) -> Result<Cochain1> {
        Ok(Cochain1 { images: self.images.iter().map(|s| s.specialize(alpha)).collect::<Result<_>>()?, block: self.block })
    }

    /// Check every value against the block's parity, grading, weight and
    /// target constraints.
    pub fn validate(&self, cx: &Complex) -> Result<()> {
        self.block.validate()?;
        for (i, img) in self.images.iter().enumerate() {
            let e = &cx.basis.elements[i];
            for (m, _) in img.terms() {
                if let Some(why) = self.block.reject(m, e.parity, e.n_deg, e.weight) {
                    return Err(Error::BlockViolation(format!("value on {}: {why}", NAMES[i])));
                }
            }
        }
        Ok(())
    }

    fn flatten(&self) -> BTreeMap<(usize, Monomial), Scalar> {
        let mut out = BTreeMap::new();
        for (i, img) in self.images.iter().enumerate() {
            for (m, c) in img.terms() {
                out.insert((i, *m), c.clone());
            }
        }
        out
    }

    fn from_coords(block: BlockSpec, basis: &[(usize, Monomial)], x: &[Scalar]) -> Cochain1 {
        let mut c = Cochain1::zero(block);
        for ((i, m), v) in basis.iter().zip(x) {
            c.images[*i].add_term(*m, v.clone());
        }
        c
    }

    /// Nonzero values as `(name, value)` pairs.
    pub fn nonzero(&self) -> impl Iterator<Item = (&'static str, &Symbol)> {
        self.images.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (NAMES[i], s))
    }
}

impl fmt::Display for Cochain1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (name, v) in self.nonzero() {
            writeln!(f, "  {name} -> {v}")?;
            any = true;
        }
        if !any {
            writeln!(f, "  0")?;
        }
        Ok(())
    }
}

/// A 2-cochain evaluated on unordered basis pairs `(a, b)`, `a <= b`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cochain2 {
    pub values: BTreeMap<(usize, usize), Symbol>,
}

impl Cochain2 {
    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, a: usize, b: usize) -> Symbol {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.values.get(&key).cloned().unwrap_or_else(Symbol::zero)
    }

    fn insert(&mut self, key: (usize, usize), v: Symbol) {
        if !v.is_zero() {
            self.values.insert(key, v);
        }
    }

    pub fn combine(&self, other: &Cochain2, c: &Scalar) -> Cochain2 {
        let mut out = self.clone();
        for (k, v) in &other.values {
            let s = &out.get(k.0, k.1) + &v.scale(c);
            out.values.remove(k);
            out.insert(*k, s);
        }
        out
    }

    fn flatten(&self) -> BTreeMap<(usize, usize, Monomial), Scalar> {
        let mut out = BTreeMap::new();
        for ((a, b), v) in &self.values {
            for (m, c) in v.terms() {
                out.insert((*a, *b, *m), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for Cochain2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return writeln!(f, "  0");
        }
        for ((a, b), v) in &self.values {
            writeln!(f, "  ({}, {}) -> {v}", NAMES[*a], NAMES[*b])?;
        }
        Ok(())
    }
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..DIM).flat_map(|a| (a..DIM).map(move |b| (a, b)))
}

/// Even 0-cochains of the block: monomials of weight zero.
pub fn enumerate_c0(block: &BlockSpec) -> Vec<Symbol> {
    block.monomials(Parity::Even, 0, (0, 0)).into_iter().map(|m| Symbol::term(Scalar::one(), m)).collect()
}

/// Coordinates of elementary 1-cochains `X_i -> m`.
pub fn c1_coordinates(cx: &Complex, block: &BlockSpec) -> Vec<(usize, Monomial)> {
    cx.basis
        .elements
        .iter()
        .enumerate()
        .flat_map(|(i, e)| block.monomials(e.parity, e.n_deg, e.weight).into_iter().map(move |m| (i, m)))
        .collect()
}

pub fn enumerate_c1(cx: &Complex, block: &BlockSpec) -> Vec<Cochain1> {
    c1_coordinates(cx, block)
        .into_iter()
        .map(|(i, m)| {
            let mut c = Cochain1::zero(*block);
            c.images[i] = Symbol::term(Scalar::one(), m);
            c
        })
        .collect()
}

/// `(d0 m)(X) = [rho(X), m]`.
pub fn d0(cx: &Complex, m: &Symbol, block: &BlockSpec) -> Result<Cochain1> {
    for (mono, _) in m.terms() {
        if let Some(why) = block.reject(mono, Parity::Even, 0, (0, 0)) {
            return Err(Error::BlockViolation(format!("0-cochain: {why}")));
        }
    }
    let images = (0..DIM).map(|i| cx.engine.bracket(cx.rho(i), m)).collect::<Result<_>>()?;
    Ok(Cochain1 { images, block: *block })
}

/// The Chevalley-Eilenberg differential of a 1-cochain.
pub fn d1(cx: &Complex, c: &Cochain1) -> Result<Cochain2> {
    let mut out = Cochain2::default();
    for (a, b) in pairs() {
        let mut v = cx.engine.bracket(cx.rho(a), &c.images[b])?;
        let other = cx.engine.bracket(cx.rho(b), &c.images[a])?;
        v = if gamma::parity_of(a) == Parity::Odd && gamma::parity_of(b) == Parity::Odd { &v + &other } else { &v - &other };
        for (z, coef) in cx.table.get(a, b).iter().enumerate() {
            if !coef.is_zero() && !c.images[z].is_zero() {
                v = &v - &c.images[z].scale(coef);
            }
        }
        out.insert((a, b), v);
    }
    Ok(out)
}

/// `[[phi, psi]](X, Y) = [phi(X), psi(Y)] + [psi(X), phi(Y)]`.
pub fn cup(cx: &Complex, phi: &Cochain1, psi: &Cochain1) -> Result<Cochain2> {
    let mut out = Cochain2::default();
    for (a, b) in pairs() {
        let v = &cx.engine.bracket(&phi.images[a], &psi.images[b])? + &cx.engine.bracket(&psi.images[a], &phi.images[b])?;
        out.insert((a, b), v);
    }
    Ok(out)
}

/// Named cochains: the cocycles `theta1`, `theta2`, `theta`, `thetabar1` and the
/// second-order terms `rho2`, `rho2h`.
pub fn named_cocycle(name: &str) -> Result<Cochain1> {
    let p = |s: &str| crate::parse::parse_symbol(s).expect("valid literal");
    let c = match name {
        "theta1" => Cochain1::from_named(
            BlockSpec::new(0, 0, Target::P),
            &[
                ("D1", p("t^-1*xi1")),
                ("D2", p("t^-1*xi2")),
                ("D3", p("t^-1*eta1")),
                ("D4", p("t^-1*eta2")),
                ("F1", p("2*t^-1*tau")),
                ("H1", p("1")),
            ],
        )?,
        "theta2" => Cochain1::from_named(
            BlockSpec::new(0, 0, Target::P),
            &[
                ("T3", p("tau^-1*xi1 - t^-1*tau^-2*xi1*xi2*eta2")),
                ("T4", p("tau^-1*xi2 + t^-1*tau^-2*xi1*xi2*eta1")),
                ("D1", p("t^-1*xi1")),
                ("D2", p("t^-1*xi2")),
                ("D3", p("-(1+alpha)*t^-2*tau^-1*xi2*eta1*eta2")),
                ("D4", p("(1+alpha)*t^-2*tau^-1*xi1*eta1*eta2")),
                ("E1", p("t*tau^-1 - tau^-2*xi1*eta1 - tau^-2*xi2*eta2 - 2*t^-1*tau^-3*xi1*xi2*eta1*eta2")),
                ("E2", p("t^-1*tau^-1*xi1*xi2")),
                ("F1", p("t^-1*tau + t^-2*xi1*eta1 + t^-2*xi2*eta2 + 2*(1+alpha)*t^-3*tau^-1*xi1*xi2*eta1*eta2")),
                ("F2", p("-t^-1*tau^-1*eta1*eta2")),
                ("H1", p("1")),
            ],
        )?,
        "theta" => Cochain1::from_named(
            BlockSpec::new(2, 0, Target::K4prime),
            &[
                ("T1", p("tau^-1*xi2*eta1*eta2")),
                ("T2", p("-tau^-1*xi1*eta1*eta2")),
                ("T3", p("tau^-1*xi1*xi2*eta2")),
                ("T4", p("-tau^-1*xi1*xi2*eta1")),
                ("D1", p("t^-1*xi1*xi2*eta2")),
                ("D2", p("-t^-1*xi1*xi2*eta1")),
                ("D3", p("t^-1*xi2*eta1*eta2")),
                ("D4", p("-t^-1*xi1*eta1*eta2")),
                ("E1", p("2*tau^-2*xi1*xi2*eta1*eta2")),
                ("F1", p("-2*t^-2*xi1*xi2*eta1*eta2")),
            ],
        )?,
        "rho2" => Cochain1::from_named(BlockSpec::new(-2, 0, Target::Pplus), &[("F1", p("t^-2"))])?,
        "thetabar1" => quantize::theta_bar1(),
        "rho2h" => Cochain1::from_named(BlockSpec::quantized(-2, 0, 2), &[("F1", p("t^-2"))])?,
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(c)
}

pub const NAMED_COCHAINS: [&str; 6] = ["theta1", "theta2", "theta", "rho2", "thetabar1", "rho2h"];

/// `c0 = t^-1 tau^-1 xi1 xi2 eta1 eta2`, the 0-cochain spanning `K(4)/K'(4)`.
pub fn c3() -> Symbol {
    Symbol::term(Scalar::one(), k4_quotient_monomial())
}

/// Cohomology of one block.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub block: BlockSpec,
    pub alpha: Option<Rat>,
    pub dim_c0: usize,
    pub dim_c1: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h1: usize,
    pub representatives: Vec<Cochain1>,
    pub pivot_polynomials: Vec<AlphaPoly>,
}

struct BlockMatrices {
    c1: Vec<(usize, Monomial)>,
    c0: Vec<Symbol>,
    d1_cols: Vec<BTreeMap<(usize, usize, Monomial), Scalar>>,
    d0_cols: Vec<BTreeMap<usize, Scalar>>,
}

fn block_matrices(cx: &Complex, block: &BlockSpec) -> Result<BlockMatrices> {
    block.validate()?;
    let c1 = c1_coordinates(cx, block);
    let c0 = enumerate_c0(block);
    let d1_cols = c1
        .iter()
        .map(|&(i, m)| {
            let mut c = Cochain1::zero(*block);
            c.images[i] = Symbol::term(Scalar::one(), m);
            Ok(d1(cx, &c)?.flatten())
        })
        .collect::<Result<Vec<_>>>()?;
    let index: BTreeMap<(usize, Monomial), usize> = c1.iter().enumerate().map(|(j, k)| (*k, j)).collect();
    let d0_cols = c0
        .iter()
        .map(|m| {
            let img = d0(cx, m, block)?;
            img.flatten()
                .into_iter()
                .map(|(k, v)| {
                    index.get(&k).map(|j| (*j, v)).ok_or_else(|| {
                        Error::Internal(format!("d0({m}) leaves the cochain block at {} -> {}", NAMES[k.0], k.1))
                    })
                })
                .collect::<Result<BTreeMap<_, _>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockMatrices { c1, c0, d1_cols, d0_cols })
}

fn index_columns(cols: &[BTreeMap<usize, Scalar>], nrows: usize) -> SparseMatrix {
    let mut m = SparseMatrix::new(cols.len());
    m.rows = vec![BTreeMap::new(); nrows];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col {
            m.rows[*i].insert(j, v.clone());
        }
    }
    m
}

/// First cohomology of a block, computed over `Q(alpha)` or at the complex's
/// specialization.
pub fn h1_block_with(cx: &Complex, block: &BlockSpec) -> Result<CohomologyReport> {
    let mats = block_matrices(cx, block)?;
    let n1 = mats.c1.len();
    let d1m = SparseMatrix::from_columns(&mats.d1_cols);
    let e1 = Elimination::new(&d1m, n1);
    let kernel = e1.kernel();
    let mut polys: Vec<AlphaPoly> = e1.pivot_polynomials().to_vec();

    // coboundaries first, then cocycles: the cocycle columns that become
    // pivots extend a basis of B^1 to one of Z^1
    let mut cols = mats.d0_cols.clone();
    let nb = cols.len();
    cols.extend(kernel.iter().map(|x| x.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect()));
    let e = Elimination::new(&index_columns(&cols, n1), cols.len());
    let e0 = Elimination::new(&index_columns(&mats.d0_cols, n1), nb);
    polys.extend(e0.pivot_polynomials().iter().cloned());
    polys.sort();
    polys.dedup();
    let pivots = e.pivot_columns();
    let representatives = pivots
        .iter()
        .filter(|&&j| j >= nb)
        .map(|&j| Cochain1::from_coords(*block, &mats.c1, &kernel[j - nb]))
        .collect::<Vec<_>>();
    let dim_b = e0.rank();
    let dim_z = kernel.len();
    if representatives.len() + dim_b != dim_z {
        return Err(Error::Internal(format!("block {block}: B^1 is not contained in Z^1")));
    }
    Ok(CohomologyReport {
        block: *block,
        alpha: cx.alpha.clone(),
        dim_c0: mats.c0.len(),
        dim_c1: n1,
        dim_cocycles: dim_z,
        dim_coboundaries: dim_b,
        dim_h1: dim_z - dim_b,
        representatives,
        pivot_polynomials: polys,
    })
}

pub fn h1_block(block: &BlockSpec) -> Result<CohomologyReport> {
    h1_block_with(Complex::for_block(block), block)
}

/// A basis of `Z^1` in the block.
pub fn cocycle_basis(cx: &Complex, block: &BlockSpec) -> Result<Vec<Cochain1>> {
    let mats = block_matrices(cx, block)?;
    let e = Elimination::new(&SparseMatrix::from_columns(&mats.d1_cols), mats.c1.len());
    Ok(e.kernel().iter().map(|x| Cochain1::from_coords(*block, &mats.c1, x)).collect())
}

/// `h1_block` over a rectangle of blocks; for `K4` targets only `k = 2`
/// is visited. Blocks are computed in parallel and returned in order.
pub fn h1_scan(
    cx: &Complex,
    ks: std::ops::RangeInclusive<i32>,
    ns: std::ops::RangeInclusive<i32>,
    target: Target,
    h_depth: u32,
) -> Result<Vec<CohomologyReport>> {
    let blocks: Vec<BlockSpec> = ks
        .filter(|k| !matches!(target, Target::K4 | Target::K4prime) || *k == 2)
        .flat_map(|k| ns.clone().map(move |n| BlockSpec { k, n, target, weight_zero: true, h_depth }))
        .collect();
    blocks.par_iter().map(|b| h1_block_with(cx, b)).collect()
}

/// Solve `d1(rho2) = -1/2 [[rho1, rho1]]` among cochains of `order_block`.
pub fn solve_obstruction(cx: &Complex, rho1: &Cochain1, order_block: &BlockSpec) -> Result<Option<Cochain1>> {
    let rhs = cup(cx, rho1, rho1)?;
    solve_d1(cx, &Cochain2::default().combine(&rhs, &Scalar::from_rat(crate::scalar::rat(-1, 2))), order_block)
}

/// Some `c` in the block with `d1(c) = target`, if one exists.
pub fn solve_d1(cx: &Complex, target: &Cochain2, block: &BlockSpec) -> Result<Option<Cochain1>> {
    let mats = block_matrices(cx, block)?;
    let mut cols = mats.d1_cols.clone();
    cols.push(target.flatten());
    let n = mats.c1.len();
    let m = SparseMatrix::from_columns(&cols);
    let e = Elimination::new(&m, n);
    Ok(e.solution(0).map(|x| Cochain1::from_coords(*block, &mats.c1, &x)))
}

/// A 0-cochain `m` of the cochain's block with `d0(m) = c`, certified by
/// recomputing `d0(m)`.
pub fn is_coboundary(cx: &Complex, c: &Cochain1) -> Result<Option<Symbol>> {
    Ok(class_in_span(cx, c, &[])?.map(|(_, m)| m))
}

/// Coefficients `x` and a 0-cochain `m` with `c = sum x_i reps_i + d0(m)`,
/// if they exist; the decomposition is verified before it is returned.
pub fn class_in_span(cx: &Complex, c: &Cochain1, reps: &[Cochain1]) -> Result<Option<(Vec<Scalar>, Symbol)>> {
    let block = c.block;
    c.validate(cx)?;
    let c0 = enumerate_c0(&block);
    let mut cols: Vec<BTreeMap<(usize, Monomial), Scalar>> = reps.iter().map(Cochain1::flatten).collect();
    for m in &c0 {
        cols.push(d0(cx, m, &block)?.flatten());
    }
    let ncols = cols.len();
    cols.push(c.flatten());
    let e = Elimination::new(&SparseMatrix::from_columns(&cols), ncols);
    let Some(x) = e.solution(0) else { return Ok(None) };
    let (xr, xm) = x.split_at(reps.len());
    let mut m = Symbol::zero();
    for (v, s) in xm.iter().zip(&c0) {
        m = &m + &s.scale(v);
    }
    let mut recon = d0(cx, &m, &block)?;
    for (v, r) in xr.iter().zip(reps) {
        recon = recon.add(&r.scale(v));
    }
    if recon.images != c.images {
        return Err(Error::Internal("class decomposition failed verification".into()));
    }
    Ok(Some((xr.to_vec(), m)))
}
