//! Virtual real representations of the cyclic group `C_n`.
//!
//! A virtual representation is stored as an integer combination of
//!
//! - the trivial real representation (dimension counted directly),
//! - the 2-dimensional real representations `λ^i` (rotation by `2πi/n`),
//!   with exponents reduced to `1..n-1`; `λ^0` is folded into two trivial
//!   dimensions,
//! - the sign representation `σ` (only available when `n` is even).
//!
//! All dimension counts are exact integers; fixed-point dimensions are
//! computed by character theory (`λ^i` is fixed by `C_d` exactly when
//! `d | i`, and `σ` is fixed by `C_d` exactly when `n/d` is even).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A cyclic group `C_n`, `n ≥ 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Group {
    pub n: u32,
}

impl Group {
    pub fn new(n: u32) -> Result<Group> {
        if n == 0 {
            return Err(Error::Domain("group order must be positive".into()));
        }
        Ok(Group { n })
    }

    /// All divisors of `n` in increasing order; these index the subgroups
    /// `C_d ⊆ C_n`.
    pub fn divisors(self) -> Vec<u32> {
        (1..=self.n).filter(|d| self.n % d == 0).collect()
    }
}

/// A virtual real representation of `C_n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VirtualRep {
    pub n: u32,
    /// Multiplicity of the 1-dimensional trivial representation.
    pub trivial: i64,
    /// Multiplicities of `λ^i` keyed by exponent `i ∈ 1..n-1`.
    lambda: BTreeMap<u32, i64>,
    /// Multiplicity of the sign representation (zero unless `n` is even).
    pub sigma: i64,
}

impl VirtualRep {
    pub fn zero(n: u32) -> VirtualRep {
        VirtualRep { n, trivial: 0, lambda: BTreeMap::new(), sigma: 0 }
    }

    pub fn trivial_rep(n: u32, dim: i64) -> VirtualRep {
        let mut v = VirtualRep::zero(n);
        v.trivial = dim;
        v
    }

    /// `mult` copies of `λ^exp` (any integer exponent; reduced mod `n`,
    /// with `λ^0` counting as two trivial dimensions).
    pub fn lambda_rep(n: u32, exp: i64, mult: i64) -> VirtualRep {
        let mut v = VirtualRep::zero(n);
        v.add_lambda(exp, mult);
        v
    }

    /// `mult` copies of the sign representation; requires `n` even.
    pub fn sigma_rep(n: u32, mult: i64) -> Result<VirtualRep> {
        if n % 2 != 0 && mult != 0 {
            return Err(Error::Domain(format!(
                "sign representation requires even group order, got n={n}"
            )));
        }
        let mut v = VirtualRep::zero(n);
        v.sigma = mult;
        Ok(v)
    }

    /// The realification of the complex regular representation:
    /// `λ^0 + λ^1 + … + λ^{n-1}` (real dimension `2n`).
    pub fn regular_complex(n: u32) -> VirtualRep {
        let mut v = VirtualRep::zero(n);
        for i in 0..n {
            v.add_lambda(i as i64, 1);
        }
        v
    }

    /// Add `mult` copies of `λ^exp` in place.
    pub fn add_lambda(&mut self, exp: i64, mult: i64) {
        let e = exp.rem_euclid(self.n as i64) as u32;
        if e == 0 {
            self.trivial += 2 * mult;
            return;
        }
        let entry = self.lambda.entry(e).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.lambda.remove(&e);
        }
    }

    pub fn lambda_mults(&self) -> &BTreeMap<u32, i64> {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.trivial == 0 && self.sigma == 0 && self.lambda.is_empty()
    }

    /// True when every multiplicity is non-negative, i.e. the virtual
    /// representation is an actual representation.
    pub fn is_actual(&self) -> bool {
        self.trivial >= 0 && self.sigma >= 0 && self.lambda.values().all(|&m| m >= 0)
    }

    fn check_same_group(&self, other: &VirtualRep) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Domain(format!(
                "mismatched group orders {} and {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.check_same_group(other)?;
        let mut out = self.clone();
        out.trivial += other.trivial;
        out.sigma += other.sigma;
        for (&e, &m) in &other.lambda {
            out.add_lambda(e as i64, m);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> VirtualRep {
        let mut out = VirtualRep::zero(self.n);
        out.trivial = c * self.trivial;
        out.sigma = c * self.sigma;
        for (&e, &m) in &self.lambda {
            if c * m != 0 {
                out.lambda.insert(e, c * m);
            }
        }
        out
    }

    /// Real dimension of the `C_d`-fixed subspace, `d | n`.
    ///
    /// `λ^i` contributes 2 when `d | i`; `σ` contributes 1 when `n/d` is
    /// even (the generator of `C_d` is `g^{n/d}` and `σ(g^{n/d}) =
    /// (-1)^{n/d}`).
    pub fn fixed_dim(&self, d: u32) -> Result<i64> {
        if d == 0 || self.n % d != 0 {
            return Err(Error::Domain(format!(
                "subgroup order {d} does not divide group order {}",
                self.n
            )));
        }
        let mut dim = self.trivial;
        for (&e, &m) in &self.lambda {
            if e % d == 0 {
                dim += 2 * m;
            }
        }
        if (self.n / d) % 2 == 0 {
            dim += self.sigma;
        }
        Ok(dim)
    }

    /// The underlying (non-equivariant) real dimension.
    pub fn underlying_dim(&self) -> i64 {
        self.fixed_dim(1).expect("1 divides every group order")
    }

    /// Fixed-point dimensions over all subgroups, indexed like
    /// `Group::divisors`.
    pub fn profile(&self) -> Vec<i64> {
        Group { n: self.n }
            .divisors()
            .into_iter()
            .map(|d| self.fixed_dim(d).unwrap())
            .collect()
    }

    /// Tensor with `λ^{-j}` on complex summands: each `λ^i` becomes
    /// `λ^{i-j}` and each complex trivial summand (two real dimensions)
    /// becomes `λ^{-j}`.  Requires no `σ` part and an even trivial part,
    /// so every summand carries a complex structure.
    pub fn twist(&self, j: i64) -> Result<VirtualRep> {
        if self.sigma != 0 {
            return Err(Error::Domain(
                "cannot twist a representation with a sign summand".into(),
            ));
        }
        if self.trivial % 2 != 0 {
            return Err(Error::Domain(
                "cannot twist an odd-dimensional trivial part".into(),
            ));
        }
        let mut out = VirtualRep::zero(self.n);
        out.add_lambda(-j, self.trivial / 2);
        for (&e, &m) in &self.lambda {
            out.add_lambda(e as i64 - j, m);
        }
        Ok(out)
    }

    /// Restriction along `C_m ⊆ C_n` (`m | n`): exponents reduce mod `m`,
    /// and `σ` restricts to `σ` when `n/m` is odd and to the trivial
    /// representation when `n/m` is even.
    pub fn restrict(&self, m: u32) -> Result<VirtualRep> {
        if m == 0 || self.n % m != 0 {
            return Err(Error::Domain(format!(
                "restriction target {m} does not divide group order {}",
                self.n
            )));
        }
        let mut out = VirtualRep::zero(m);
        out.trivial = self.trivial;
        for (&e, &mult) in &self.lambda {
            out.add_lambda(e as i64, mult);
        }
        if (self.n / m) % 2 == 0 {
            out.trivial += self.sigma;
        } else {
            out.sigma = self.sigma;
        }
        Ok(out)
    }
}

/// The summand `φ_ℓ = λ^{-ℓ}(λ^0 + λ + … + λ^{ℓ-1})`, i.e.
/// `λ^{-1} + λ^{-2} + … + λ^{-ℓ}` with exponents mod `n`.
pub fn phi(ell: u32, n: u32) -> VirtualRep {
    let mut v = VirtualRep::zero(n);
    for j in 1..=ell as i64 {
        v.add_lambda(-j, 1);
    }
    v
}

/// The quaternionic cell summand
/// `W_k = λ^{-k} Σ_{i=0}^{k-1} (λ^i + λ^{-i})`.
pub fn quat_w(k: u32, n: u32) -> VirtualRep {
    let mut v = VirtualRep::zero(n);
    for i in 0..k as i64 {
        v.add_lambda(i - k as i64, 1);
        v.add_lambda(-i - k as i64, 1);
    }
    v
}

/// The conjugation-action cell `i + iσ` over `C_2`.
pub fn conj_cell(i: u32) -> VirtualRep {
    let mut v = VirtualRep::zero(2);
    v.trivial = i as i64;
    v.sigma = i as i64;
    v
}

impl fmt::Display for VirtualRep {
    /// Prints in the degree-expression grammar understood by
    /// [`crate::degree::parse`], e.g. `2 - L2 - L3` or `1 + s`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(i64, String)> = Vec::new();
        if self.trivial != 0 {
            parts.push((self.trivial, String::new()));
        }
        for (&e, &m) in &self.lambda {
            parts.push((m, format!("L{e}")));
        }
        if self.sigma != 0 {
            parts.push((self.sigma, "s".into()));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coef, atom) in parts {
            let mag = coef.abs();
            let sign = coef < 0;
            if first {
                if sign {
                    // leading negative terms are printed as `0 - …` so the
                    // output stays inside the grammar
                    write!(f, "0 - ")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if atom.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{atom}")?;
            } else {
                write!(f, "{mag}{atom}")?;
            }
        }
        Ok(())
    }
}
