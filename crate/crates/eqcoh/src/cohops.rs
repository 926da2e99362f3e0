//! Obstructions to integer-degree lifts of mod-`p` cohomology operations.
//!
//! For an even degree `r`, the test space is a smash power of an
//! equivariant projective space carrying a canonical class in a twisted
//! degree `α`.  The wedge decomposition turns the cohomology of the smash
//! power in degrees `α` and `α + r` into a finite census of Mackey
//! functors.  If the source is the constant functor and the target census
//! contains no constant summand, no equivariant operation of degree `r`
//! can restrict to the given non-equivariant one, because a nonzero map
//! out of the constant functor needs a constant summand to land in.

use serde::Serialize;

use crate::coeff::{mackey_modp_table, MackeyName};
use crate::reps::{self, VirtualRep};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    LiftExcluded,
    Inconclusive,
}

/// Census outcome of a lift-obstruction computation.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub p: u32,
    pub r: i64,
    /// Number of smash factors of the test space.
    pub s: i64,
    /// Nonzero Mackey summands in the source degree, with multiplicity.
    pub source: Vec<(MackeyName, usize)>,
    /// Nonzero Mackey summands in the target degree, with multiplicity.
    pub target: Vec<(MackeyName, usize)>,
    pub verdict: Verdict,
}

fn add_census(census: &mut Vec<(MackeyName, usize)>, name: MackeyName) {
    if name == MackeyName::Zero {
        return;
    }
    if let Some(entry) = census.iter_mut().find(|(n, _)| *n == name) {
        entry.1 += 1;
    } else {
        census.push((name, 1));
    }
}

/// All tuples of `parts` integers `≥ 1` with sum `≤ cap`, fed to `f`.
fn compositions(parts: usize, cap: i64, f: &mut impl FnMut(&[i64])) {
    fn rec(buf: &mut Vec<i64>, parts: usize, left: i64, f: &mut impl FnMut(&[i64])) {
        if buf.len() == parts {
            f(buf);
            return;
        }
        let remaining_min = (parts - buf.len() - 1) as i64;
        for v in 1..=(left - remaining_min) {
            buf.push(v);
            rec(buf, parts, left - v, f);
            buf.pop();
        }
    }
    if parts == 0 {
        if cap >= 0 {
            f(&[]);
        }
        return;
    }
    rec(&mut Vec::new(), parts, cap, f);
}

fn excluded(source: &[(MackeyName, usize)], target: &[(MackeyName, usize)]) -> Verdict {
    let constant = MackeyName::ZModP;
    let src_ok = source == [(constant, 1)];
    let tgt_clear = target.iter().all(|(n, _)| *n != constant);
    if src_ok && tgt_clear {
        Verdict::LiftExcluded
    } else {
        Verdict::Inconclusive
    }
}

fn check_odd_with_cap(p: u32, r: i64, cap: i64) -> Result<ObstructionReport> {
    if p == 2 || !(2..p as i64).all(|d| p as i64 % d != 0) {
        return Err(Error::Domain(format!("{p} must be an odd prime")));
    }
    if r <= 0 || r % 2 != 0 || r % (p as i64 - 1) != 0 {
        return Err(Error::Domain(format!(
            "degree {r} must be positive, even, and divisible by p - 1 = {}",
            p - 1
        )));
    }
    let s = r / (p as i64 - 1);
    let base = VirtualRep::lambda_rep(p, 1, 1).scale(s);
    let mut source = Vec::new();
    let mut target = Vec::new();
    let mut err = None;
    compositions(s as usize, cap, &mut |ells| {
        let mut wedge = VirtualRep::zero(p);
        for &l in ells {
            wedge = wedge.add(&reps::phi(l as u32, p)).unwrap();
        }
        // homotopy degree of the contribution of this wedge summand
        let nu_src = wedge.sub(&base).unwrap();
        let nu_tgt = nu_src.sub(&VirtualRep::trivial_rep(p, r)).unwrap();
        match (mackey_modp_table(p, &nu_src), mackey_modp_table(p, &nu_tgt)) {
            (Ok(a), Ok(b)) => {
                add_census(&mut source, a);
                add_census(&mut target, b);
            }
            (Err(e), _) | (_, Err(e)) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let verdict = excluded(&source, &target);
    Ok(ObstructionReport { p, r, s, source, target, verdict })
}

/// Decide whether a degree-`r` operation over `C_p` (`p` odd) can have an
/// integer-degree equivariant lift, by the smash-power census of the
/// complex projective space.
pub fn obstruction_check(p: u32, r: i64) -> Result<ObstructionReport> {
    let s = r.checked_div(p as i64 - 1).unwrap_or(0);
    check_odd_with_cap(p, r, s + r)
}

fn check_c2_with_cap(r: i64, cap: i64) -> Result<ObstructionReport> {
    if r < 0 || r % 2 != 0 {
        return Err(Error::Domain(format!("degree {r} must be even and ≥ 0")));
    }
    if r == 0 {
        // the identity operation lifts; nothing to exclude
        return Ok(ObstructionReport {
            p: 2,
            r,
            s: 0,
            source: vec![(MackeyName::ZModP, 1)],
            target: vec![(MackeyName::ZModP, 1)],
            verdict: Verdict::Inconclusive,
        });
    }
    let w = r / 2;
    let base = reps::conj_cell(w as u32);
    let mut source = Vec::new();
    let mut target = Vec::new();
    let mut err = None;
    compositions(w as usize, cap, &mut |is| {
        let mut wedge = VirtualRep::zero(2);
        for &i in is {
            wedge = wedge.add(&reps::conj_cell(i as u32)).unwrap();
        }
        let nu_src = wedge.sub(&base).unwrap();
        let nu_tgt = nu_src.sub(&VirtualRep::trivial_rep(2, r)).unwrap();
        match (mackey_modp_table(2, &nu_src), mackey_modp_table(2, &nu_tgt)) {
            (Ok(a), Ok(b)) => {
                add_census(&mut source, a);
                add_census(&mut target, b);
            }
            (Err(e), _) | (_, Err(e)) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let verdict = excluded(&source, &target);
    Ok(ObstructionReport { p: 2, r, s: w, source, target, verdict })
}

/// The `C₂` variant: smash powers of the conjugation projective space
/// against the twisted degree `w·(1+σ)` with `w = r/2`.
pub fn obstruction_check_c2(r: i64) -> Result<ObstructionReport> {
    check_c2_with_cap(r, r / 2 + r)
}
