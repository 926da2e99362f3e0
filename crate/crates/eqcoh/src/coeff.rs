//! Coefficient groups of equivariant Eilenberg–MacLane spectra over `C_n`.
//!
//! Three layers:
//!
//! - [`vanishing_reason`]: general vanishing rules for `π_α(HZ̲)` driven by
//!   the fixed-point dimensions of `α`.
//! - [`pi_star_e`]: the sector `α = ℓ - Σ_d b_d λ^d` (`d | n`, `d < n`,
//!   `b_d ≥ 0`), where `π_α(HZ̲)(C_n/C_n)` is spanned by monomials in the
//!   Euler classes `a_{λ^d}` (degree `-λ^d`) and orientation classes
//!   `u_{λ^d}` (degree `2-λ^d`), subject to `(n/d)·a_{λ^d} = 0` and the
//!   cross relation `(d/g)·a_{λ^s}u_{λ^d} = (s/g)·a_{λ^d}u_{λ^s}`,
//!   `g = gcd(d,s)`.
//! - [`mackey_modp_table`]: the complete case analysis of `π_α(HZ/p̲)` as a
//!   Mackey functor for `C_p`, for odd `p` and for `p = 2` (where the
//!   exotic functor `⟨Λ⟩` appears).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::reps::{Group, VirtualRep};
use crate::{Error, Result};

/// Which general vanishing rule applies to `π_α(HZ̲)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum VanishingReason {
    /// Every fixed-point dimension of `α` is strictly positive.
    AllFixedPositive,
    /// Every fixed-point dimension of `α` is strictly negative.
    AllFixedNegative,
    /// All fixed-point dimensions even, `|α| > 0`, and `|α^K| ≥ 0` for all
    /// `K ≠ e` (an Anderson-duality argument).
    EvenPositiveNonNegFixed,
    /// All fixed-point dimensions odd, no sign summand, and whenever
    /// `|α^H| > -1` also `|α^K| ≥ -1` for every `K ⊇ H`.
    OddWithCondition,
}

/// Returns the first applicable vanishing rule for `π_α(HZ̲)`, if any.
///
/// The even rule is justified by a duality argument whose hypotheses only
/// involve fixed-point dimensions, so a sign summand is permitted there;
/// the odd rule requires the sign part to vanish.
pub fn vanishing_reason(alpha: &VirtualRep) -> Option<VanishingReason> {
    let divisors = Group { n: alpha.n }.divisors();
    let dims: Vec<(u32, i64)> = divisors
        .iter()
        .map(|&d| (d, alpha.fixed_dim(d).unwrap()))
        .collect();
    if dims.iter().all(|&(_, v)| v > 0) {
        return Some(VanishingReason::AllFixedPositive);
    }
    if dims.iter().all(|&(_, v)| v < 0) {
        return Some(VanishingReason::AllFixedNegative);
    }
    let dim_e = dims[0].1;
    if dims.iter().all(|&(_, v)| v % 2 == 0)
        && dim_e > 0
        && dims.iter().skip(1).all(|&(_, v)| v >= 0)
    {
        return Some(VanishingReason::EvenPositiveNonNegFixed);
    }
    if alpha.sigma == 0 && dims.iter().all(|&(_, v)| v.rem_euclid(2) == 1) {
        let cond = dims.iter().all(|&(h, vh)| {
            vh <= -1
                || dims
                    .iter()
                    .filter(|&&(k, _)| k % h == 0)
                    .all(|&(_, vk)| vk >= -1)
        });
        if cond {
            return Some(VanishingReason::OddWithCondition);
        }
    }
    None
}

/// A monomial `Π_d a_{λ^d}^{x_d} · Π_d u_{λ^d}^{y_d}` in the Euler and
/// orientation classes, keyed by divisor exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Monomial {
    pub a: BTreeMap<u32, u32>,
    pub u: BTreeMap<u32, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { a: BTreeMap::new(), u: BTreeMap::new() }
    }

    /// Additive order of the monomial in its degree: infinite (`None`) when
    /// no Euler class is present, otherwise `n / max{d : x_d > 0}`.
    pub fn order(&self, n: u32) -> Option<u64> {
        self.a.keys().max().map(|&d| (n / d) as u64)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_empty() && self.u.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (cls, map) in [("a", &self.a), ("u", &self.u)] {
            for (&d, &e) in map {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{cls}{{L{d}}}")?;
                } else {
                    write!(f, "{cls}{{L{d}}}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Additive structure of `π_α(HZ̲)(C_n/C_n)` in the monomial sector.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum CoeffGroup {
    Zero,
    /// Infinite cyclic, generated by the recorded `u`-monomial.
    FreeZ { generator: Monomial },
    /// Cyclic of the given finite order; the recorded generator is the
    /// lexicographically least monomial of maximal monomial order.
    Cyclic { order: u64, generator: Monomial },
}

impl fmt::Display for CoeffGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffGroup::Zero => write!(f, "0"),
            CoeffGroup::FreeZ { generator } => write!(f, "Z, generator {generator}"),
            CoeffGroup::Cyclic { order, generator } => {
                write!(f, "Z/{order}, generator {generator}-class")
            }
        }
    }
}

/// Enumerate the monomials of degree `α = ℓ - Σ b_d λ^d`: distributions of
/// `ℓ/2` orientation classes among the available `b_d` slots, the rest
/// being Euler classes.
fn monomials_for(bs: &[(u32, i64)], half_ell: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        bs: &[(u32, i64)],
        idx: usize,
        remaining: i64,
        current: &mut Vec<(u32, i64)>,
        out: &mut Vec<Monomial>,
    ) {
        if idx == bs.len() {
            if remaining == 0 {
                let mut m = Monomial::one();
                for &(d, y) in current.iter() {
                    let b = bs.iter().find(|&&(dd, _)| dd == d).unwrap().1;
                    if y > 0 {
                        m.u.insert(d, y as u32);
                    }
                    if b - y > 0 {
                        m.a.insert(d, (b - y) as u32);
                    }
                }
                out.push(m);
            }
            return;
        }
        let (d, b) = bs[idx];
        let top = b.min(remaining);
        for y in 0..=top {
            current.push((d, y));
            rec(bs, idx + 1, remaining - y, current, out);
            current.pop();
        }
    }
    rec(bs, 0, half_ell, &mut current, &mut out);
    out
}

/// Compute `π_α(HZ̲)(C_n/C_n)` for `α = ℓ - Σ_d b_d λ^d` with `b_d ≥ 0`,
/// `d | n`, `d < n` and no sign summand.
///
/// The group is zero when `ℓ` is odd or no monomial exists; infinite
/// cyclic when the unique monomial is a pure `u`-monomial; otherwise
/// cyclic of order the lcm of the monomial orders.
pub fn pi_star_e(alpha: &VirtualRep) -> Result<CoeffGroup> {
    if alpha.sigma != 0 {
        return Err(Error::Sector("degree has a sign summand".into()));
    }
    let n = alpha.n;
    let mut bs: Vec<(u32, i64)> = Vec::new();
    for (&e, &m) in alpha.lambda_mults() {
        if n % e != 0 {
            return Err(Error::Sector(format!(
                "exponent {e} is not a divisor of {n}"
            )));
        }
        if m > 0 {
            return Err(Error::Sector(format!(
                "positive multiplicity on L{e} lies outside the sector"
            )));
        }
        bs.push((e, -m));
    }
    let ell = alpha.trivial;
    if ell % 2 != 0 || ell < 0 {
        return Ok(CoeffGroup::Zero);
    }
    let monomials = monomials_for(&bs, ell / 2);
    if monomials.is_empty() {
        return Ok(CoeffGroup::Zero);
    }
    // The pure-u monomial exists exactly when ℓ/2 equals the total Euler
    // budget, and it is then the unique monomial.
    if monomials.len() == 1 && monomials[0].a.is_empty() {
        return Ok(CoeffGroup::FreeZ { generator: monomials[0].clone() });
    }
    let mut order: u64 = 1;
    for m in &monomials {
        let o = m.order(n).expect("non-free monomial has an Euler class");
        order = lcm(order, o);
    }
    let max_mon_order = monomials.iter().map(|m| m.order(n).unwrap()).max().unwrap();
    let generator = monomials
        .iter()
        .filter(|m| m.order(n).unwrap() == max_mon_order)
        .min()
        .unwrap()
        .clone();
    Ok(CoeffGroup::Cyclic { order, generator })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Smith-normal-form invariant factors (> 1) of the abelian group with
/// `gens` generators and the given relation rows.
pub fn invariant_factors(mut rows: Vec<Vec<i64>>, gens: usize) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut col_alive: Vec<usize> = (0..gens).collect();
    'outer: while !col_alive.is_empty() && !rows.is_empty() {
        // the smallest nonzero entry of the live submatrix is the pivot
        let mut pivot: Option<(usize, usize, i64)> = None;
        for (ri, row) in rows.iter().enumerate() {
            for (ci, &c) in col_alive.iter().enumerate() {
                let v = row[c];
                if v != 0 && pivot.map(|(_, _, pv)| v.abs() < pv.abs()).unwrap_or(true) {
                    pivot = Some((ri, ci, v));
                }
            }
        }
        let Some((pr, pc, pv)) = pivot else { break };
        let pcol = col_alive[pc];
        // clear the pivot column with row operations; a surviving
        // remainder is strictly smaller than the pivot, so restarting the
        // pivot search terminates
        let mut dirty = false;
        for ri in 0..rows.len() {
            if ri != pr && rows[ri][pcol] != 0 {
                let q = rows[ri][pcol].div_euclid(pv);
                if q != 0 {
                    for c in 0..gens {
                        rows[ri][c] -= q * rows[pr][c];
                    }
                }
                if rows[ri][pcol] != 0 {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue 'outer;
        }
        // clear the pivot row with column operations (only the pivot row
        // changes: the pivot column is zero elsewhere by now)
        for &c in &col_alive {
            if c != pcol && rows[pr][c] != 0 {
                let q = rows[pr][c].div_euclid(pv);
                if q != 0 {
                    for row in rows.iter_mut() {
                        let delta = q * row[pcol];
                        row[c] -= delta;
                    }
                }
                if rows[pr][c] != 0 {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue 'outer;
        }
        let pv = pv.unsigned_abs();
        if pv > 1 {
            factors.push(pv);
        }
        rows.remove(pr);
        col_alive.remove(pc);
    }
    combine_invariant_factors(factors)
}

/// Recombine elementary divisors into the invariant-factor chain
/// `d_1 | d_2 | …` (ascending), so a cyclic group reports a single factor.
fn combine_invariant_factors(divisors: Vec<u64>) -> Vec<u64> {
    use std::collections::HashMap;
    let mut by_prime: HashMap<u64, Vec<u32>> = HashMap::new();
    for mut d in divisors {
        let mut p = 2;
        while p * p <= d {
            if d % p == 0 {
                let mut e = 0;
                while d % p == 0 {
                    d /= p;
                    e += 1;
                }
                by_prime.entry(p).or_default().push(e);
            }
            p += 1;
        }
        if d > 1 {
            by_prime.entry(d).or_default().push(1);
        }
    }
    let depth = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; depth];
    for (p, mut exps) in by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        // largest prime power goes into the largest invariant factor
        for (i, e) in exps.into_iter().enumerate() {
            out[depth - 1 - i] *= p.pow(e);
        }
    }
    out
}

/// Independent oracle for [`pi_star_e`]: present the degree-`α` component
/// of the `a`/`u`-class ring by its monomials, the order relations
/// `(n/max d)·M = 0`, and the single-swap instances of the cross relation,
/// and return the invariant factors of that abelian group (empty for the
/// trivial group; `None` when the component is free of rank one).
pub fn presented_component(alpha: &VirtualRep) -> Result<Option<Vec<u64>>> {
    if alpha.sigma != 0 {
        return Err(Error::Sector("degree has a sign summand".into()));
    }
    let n = alpha.n;
    let mut bs: Vec<(u32, i64)> = Vec::new();
    for (&e, &m) in alpha.lambda_mults() {
        if n % e != 0 || m > 0 {
            return Err(Error::Sector("outside the monomial sector".into()));
        }
        bs.push((e, -m));
    }
    if alpha.trivial % 2 != 0 || alpha.trivial < 0 {
        return Ok(Some(Vec::new()));
    }
    let monomials = monomials_for(&bs, alpha.trivial / 2);
    if monomials.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if monomials.len() == 1 && monomials[0].a.is_empty() {
        return Ok(None); // free of rank one
    }
    let index: BTreeMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let gens = monomials.len();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, m) in monomials.iter().enumerate() {
        let o = m.order(n).unwrap() as i64;
        let mut row = vec![0i64; gens];
        row[i] = o;
        rows.push(row);
    }
    // single-swap instances of (d/g) a_s u_d = (s/g) a_d u_s
    for (i, m) in monomials.iter().enumerate() {
        for (&s, _) in &m.a {
            for (&d, _) in &m.u {
                if s == d {
                    continue;
                }
                let mut other = m.clone();
                let dec = |map: &mut BTreeMap<u32, u32>, k: u32| {
                    let v = map.get_mut(&k).unwrap();
                    *v -= 1;
                    if *v == 0 {
                        map.remove(&k);
                    }
                };
                dec(&mut other.a, s);
                dec(&mut other.u, d);
                *other.a.entry(d).or_insert(0) += 1;
                *other.u.entry(s).or_insert(0) += 1;
                let j = index[&other];
                let g = gcd(d as u64, s as u64) as i64;
                let mut row = vec![0i64; gens];
                row[i] += d as i64 / g;
                row[j] -= s as i64 / g;
                rows.push(row);
            }
        }
    }
    Ok(Some(invariant_factors(rows, gens)))
}

/// Names of the Mackey functors appearing in the mod-`p` coefficient
/// tables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum MackeyName {
    /// The constant Mackey functor `Z̲`.
    Z,
    /// Its dual `Z̲*`.
    ZDual,
    /// The constant Mackey functor `Z/p̲`.
    ZModP,
    /// Its dual `Z/p̲*`.
    ZModPDual,
    /// The functor `⟨Z/p⟩` concentrated at the fixed level.
    AngleZModP,
    /// The `p = 2` functor `⟨Λ⟩` concentrated at the free level.
    AngleLambda,
    Zero,
}

impl fmt::Display for MackeyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MackeyName::Z => "Z",
            MackeyName::ZDual => "Z*",
            MackeyName::ZModP => "Z/p",
            MackeyName::ZModPDual => "Z/p*",
            MackeyName::AngleZModP => "<Z/p>",
            MackeyName::AngleLambda => "<Lambda>",
            MackeyName::Zero => "0",
        };
        write!(f, "{s}")
    }
}

/// `π_α(HZ/p̲)` as a Mackey functor for `C_p`, from the fixed-point
/// dimensions `|α|` and `|α^{C_p}|`.
///
/// For odd `p` the nonzero cases are: `Z/p̲` at `|α| = 0, |α^{C_p}| ≥ 0`;
/// `Z/p̲*` at `|α| = 0, |α^{C_p}| < 0`; `⟨Z/p⟩` at `|α| < 0 even,
/// `|α^{C_p}| ≥ 0`, and at `|α| > 0` odd, `|α^{C_p}| < -1`.
///
/// For `p = 2` the middle line of `|α| = 0` refines: `⟨Λ⟩` appears at
/// `|α^{C_2}| = -1` and `Z/2̲*` only below it; the two `⟨Z/2⟩` cases carry
/// no parity constraint.
pub fn mackey_modp_table(p: u32, alpha: &VirtualRep) -> Result<MackeyName> {
    if alpha.n != p {
        return Err(Error::Domain(format!(
            "degree lives over C_{} but the table is for C_{p}",
            alpha.n
        )));
    }
    let de = alpha.underlying_dim();
    let df = alpha.fixed_dim(p)?;
    let name = if p == 2 {
        match (de, df) {
            (0, f) if f >= 0 => MackeyName::ZModP,
            (0, -1) => MackeyName::AngleLambda,
            (0, _) => MackeyName::ZModPDual,
            (e, f) if e < 0 && f >= 0 => MackeyName::AngleZModP,
            (e, f) if e > 0 && f < -1 => MackeyName::AngleZModP,
            _ => MackeyName::Zero,
        }
    } else {
        match (de, df) {
            (0, f) if f >= 0 => MackeyName::ZModP,
            (0, _) => MackeyName::ZModPDual,
            (e, f) if e < 0 && f >= 0 && e % 2 == 0 => MackeyName::AngleZModP,
            (e, f) if e > 0 && f < -1 && e.rem_euclid(2) == 1 => MackeyName::AngleZModP,
            _ => MackeyName::Zero,
        }
    };
    Ok(name)
}

/// The rewrite pair relating `u_{λ^k - λ^{dk}}`-multiplication to the
/// normalized classes, with a self-check against the additive orders
/// computed by [`pi_star_e`].
#[derive(Clone, Debug, Serialize)]
pub struct UaRelation {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    /// `u_{λ^k-λ^{dk}} · a_{λ^{dk}} = d · a_{λ^k}`
    pub a_rule: String,
    /// `u_{λ^k-λ^{dk}} · u_{λ^{dk}} = u_{λ^k}`
    pub u_rule: String,
    /// Orders of `a_{λ^{dk}}` and of `d·a_{λ^k}` agree.
    pub order_consistent: bool,
}

/// Check the invertible-orientation-class rewrite rules for the pair of
/// exponents `(k, dk)`; both must divide `n` properly.
pub fn u_a_relation_check(n: u32, k: u32, d: u32) -> Result<UaRelation> {
    if k == 0 || d == 0 || n % k != 0 || n % (d * k) != 0 {
        return Err(Error::Domain(format!(
            "exponents k={k}, dk={} must divide n={n}",
            d * k
        )));
    }
    let dk = d * k;
    let a_rule = format!("u{{L{k}-L{dk}}} a{{L{dk}}} = {d} a{{L{k}}}");
    let u_rule = format!("u{{L{k}-L{dk}}} u{{L{dk}}} = u{{L{k}}}");
    let order_consistent = if dk == n {
        // a_{λ^n} = 0 and d·a_{λ^k} has order (n/k)/gcd(d, n/k) = 1
        (n as u64 / k as u64) % d as u64 == 0
    } else {
        let lhs_order = (n / dk) as u64;
        let ok = (n / k) as u64;
        let rhs_order = ok / gcd(d as u64, ok);
        lhs_order == rhs_order
    };
    Ok(UaRelation { n, k, d, a_rule, u_rule, order_consistent })
}
