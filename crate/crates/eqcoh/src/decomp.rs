//! Stable wedge decompositions of equivariant projective spaces.
//!
//! After smashing with `HZ̲`, the cofibre sequences of the cell structure
//! of a projective space split whenever the connecting maps land in
//! vanishing homotopy groups.  This module builds the cell filtrations,
//! checks the freeness hypothesis that drives the splitting, produces the
//! resulting wedge summand lists, and certifies every splitting step by a
//! connecting-map obstruction verdict.

use serde::Serialize;

use crate::coeff::{self, CoeffGroup, MackeyName, VanishingReason};
use crate::reps::{self, Group, VirtualRep};
use crate::{Error, Result};

/// The cell filtration of `P(V)` induced by an ordering of the complex
/// lines of `V`: attaching the `(i+1)`-st line adds a cell
/// `S^{λ^{-e_{i+1}} ⊗ V_i}` where `V_i` is the sum of the first `i` lines.
#[derive(Clone, Debug, Serialize)]
pub struct CellFiltration {
    pub n: u32,
    /// Exponents of the lines, in attaching order.
    pub line_order: Vec<u32>,
    /// `cells[i]` is the twisted partial sum attached at step `i+1`
    /// (`cells[0]` is the zero representation).
    pub cells: Vec<VirtualRep>,
}

/// A witness that the freeness hypothesis fails: cells `i < j` (0-based)
/// with `dim W_i^{C_h} < dim W_j^{C_h}` but `dim W_i^{C_k} > dim W_j^{C_k}`
/// for some `C_h ⊆ C_k`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FreenessWitness {
    pub cell_w: usize,
    pub cell_v: usize,
    pub h: u32,
    pub k: u32,
}

impl CellFiltration {
    pub fn from_lines(n: u32, line_order: Vec<u32>) -> Result<CellFiltration> {
        let mut cells = Vec::with_capacity(line_order.len());
        let mut partial = VirtualRep::zero(n);
        for &e in &line_order {
            cells.push(partial.twist(e as i64)?);
            partial.add_lambda(e as i64, 1);
        }
        Ok(CellFiltration { n, line_order, cells })
    }

    /// The freeness hypothesis: for every pair of cells `W`, `V` and every
    /// pair of subgroups `H ⊆ K`, `dim W^H < dim V^H` implies
    /// `dim W^K ≤ dim V^K`.  Returns the first violating witness, if any.
    pub fn check_free_hypothesis(&self) -> Option<FreenessWitness> {
        let divisors = Group { n: self.n }.divisors();
        for (i, w) in self.cells.iter().enumerate() {
            for (j, v) in self.cells.iter().enumerate() {
                if i == j {
                    continue;
                }
                for &h in &divisors {
                    if w.fixed_dim(h).unwrap() >= v.fixed_dim(h).unwrap() {
                        continue;
                    }
                    for &k in &divisors {
                        if k % h == 0 && w.fixed_dim(k).unwrap() > v.fixed_dim(k).unwrap()
                        {
                            return Some(FreenessWitness { cell_w: i, cell_v: j, h, k });
                        }
                    }
                }
            }
        }
        None
    }
}

/// A wedge decomposition `X ∧ HZ̲ ≃ ⋁_s Σ^s HZ̲`, summands ordered by
/// underlying dimension and then by fixed-point profile.
#[derive(Clone, Debug, Serialize)]
pub struct WedgeDecomposition {
    pub n: u32,
    pub summands: Vec<VirtualRep>,
}

impl WedgeDecomposition {
    fn sort(&mut self) {
        self.summands
            .sort_by_key(|s| (s.underlying_dim(), s.profile()));
    }
}

/// Result of decomposing `P(V)` for a `C_p`-representation `V`.
#[derive(Clone, Debug, Serialize)]
pub struct CpDecomposition {
    pub p: u32,
    /// The rotation applied so the multiplicity of `λ^0` is maximal.
    pub twist: u32,
    /// Line ordering (in twisted coordinates) grouped into the blocks
    /// `A_t = Σ_{m_i ≥ t} λ^i`, exponents ascending within each block.
    pub line_order: Vec<u32>,
    pub wedge: WedgeDecomposition,
}

/// Decompose `P(V) ∧ HZ̲` for `V = Σ_i n_i λ^i` over `C_p`.
///
/// With `a_t = #{i : n_i ≥ t}` (after rotating so `n_0` is maximal), the
/// summands are `0` together with the blocks `iλ + 2(t-1)` for
/// `i = Σ_{j<t} a_j - (t-1), …, Σ_{j≤t} a_j - t`.
pub fn decompose_cp(p: u32, mults: &[i64]) -> Result<CpDecomposition> {
    if p < 2 {
        return Err(Error::Domain("group order must be at least 2".into()));
    }
    if mults.len() > p as usize {
        return Err(Error::Domain(format!(
            "got {} multiplicities for C_{p}",
            mults.len()
        )));
    }
    if mults.iter().any(|&m| m < 0) {
        return Err(Error::Domain("multiplicities must be non-negative".into()));
    }
    let mut m: Vec<i64> = mults.to_vec();
    m.resize(p as usize, 0);
    let total: i64 = m.iter().sum();
    if total == 0 {
        return Err(Error::Domain("representation must be nonzero".into()));
    }
    // rotate so the multiplicity at exponent 0 is maximal
    let twist = (0..p as usize).max_by_key(|&j| (m[j], std::cmp::Reverse(j))).unwrap();
    let rotated: Vec<i64> =
        (0..p as usize).map(|i| m[(i + twist) % p as usize]).collect();
    let n0 = rotated[0];

    let a: Vec<i64> = (1..=n0)
        .map(|t| rotated.iter().filter(|&&x| x >= t).count() as i64)
        .collect();

    let mut summands = vec![VirtualRep::zero(p)];
    let mut prefix = 0i64;
    for (tm1, &at) in a.iter().enumerate() {
        let t = tm1 as i64 + 1;
        // the first block starts at i = 1 (the zero summand is listed
        // separately); block t ≥ 2 starts at the previous block's endpoint
        let lo = if t == 1 { 1 } else { prefix - (t - 1) };
        prefix += at;
        let hi = prefix - t;
        for i in lo..=hi {
            let mut s = VirtualRep::trivial_rep(p, 2 * (t - 1));
            s.add_lambda(1, i);
            summands.push(s);
        }
    }
    let mut wedge = WedgeDecomposition { n: p, summands };
    wedge.sort();

    // line ordering by blocks, and the freeness hypothesis behind the
    // splitting
    let mut line_order = Vec::new();
    for t in 1..=n0 {
        for (i, &mi) in rotated.iter().enumerate() {
            if mi >= t {
                line_order.push(i as u32);
            }
        }
    }
    let filt = CellFiltration::from_lines(p, line_order.clone())?;
    if let Some(w) = filt.check_free_hypothesis() {
        return Err(Error::Domain(format!(
            "block ordering unexpectedly violates freeness at cells {}, {}",
            w.cell_w, w.cell_v
        )));
    }
    Ok(CpDecomposition { p, twist: twist as u32, line_order, wedge })
}

/// `P(C^m ⊗ regular) ∧ HZ̲ ≃ ⋁_{i<nm} S^{φ_i} ∧ HZ̲` over `C_n`; with
/// `count` summands this also models a truncation of `P(U)` for the
/// complete universe.
pub fn decompose_regular(n: u32, count: u32) -> WedgeDecomposition {
    let summands = (0..count).map(|i| reps::phi(i, n)).collect();
    WedgeDecomposition { n, summands }
}

/// Quaternionic projective space over the full quaternionic universe:
/// summands `W_0, …, W_{count-1}`.
pub fn decompose_quat(n: u32, count: u32) -> WedgeDecomposition {
    let summands = (0..count).map(|i| reps::quat_w(i, n)).collect();
    WedgeDecomposition { n, summands }
}

/// Complex projective space with the complex-conjugation `C_2`-action:
/// summands `i + iσ` for `i = 0, …, n_max`.
pub fn decompose_conj(n_max: u32) -> WedgeDecomposition {
    let summands = (0..=n_max).map(reps::conj_cell).collect();
    WedgeDecomposition { n: 2, summands }
}

/// Why a connecting map vanishes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ObstructionVerdict {
    /// One of the general vanishing rules applies to the homotopy degree.
    Vanishing(VanishingReason),
    /// The `C_2` special case `π_σ(HZ̲) = 0` (cellular computation on
    /// `S^σ`).
    SigmaSpherical,
}

/// The connecting map of the splitting step attaching `upper` over `lower`
/// lives in `π_α(HZ̲)` for `α = upper - lower - 1`; a verdict certifies
/// this group vanishes.
pub fn connecting_obstruction(
    upper: &VirtualRep,
    lower: &VirtualRep,
) -> Result<Option<ObstructionVerdict>> {
    let alpha = upper.sub(lower)?.sub(&VirtualRep::trivial_rep(upper.n, 1))?;
    if let Some(r) = coeff::vanishing_reason(&alpha) {
        return Ok(Some(ObstructionVerdict::Vanishing(r)));
    }
    let sigma_only = alpha.trivial == 0 && alpha.lambda_mults().is_empty() && alpha.sigma == 1;
    if sigma_only {
        return Ok(Some(ObstructionVerdict::SigmaSpherical));
    }
    Ok(None)
}

/// Check every splitting step of a wedge decomposition: for each summand
/// and each earlier summand the connecting obstruction must vanish.
pub fn certify_splitting(dec: &WedgeDecomposition) -> Result<bool> {
    for (j, upper) in dec.summands.iter().enumerate() {
        for lower in &dec.summands[..j] {
            if connecting_obstruction(upper, lower)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Coefficient system for a cohomology query.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CoeffMode {
    Integral,
    ModP,
}

/// Per-summand answer of a cohomology query.
#[derive(Clone, Debug, Serialize)]
pub enum QueryAnswer {
    /// Integral coefficients: contributions from each summand index.
    Integral(Vec<(usize, CoeffGroup)>),
    /// Mod-`p` coefficients: nonzero Mackey functors with multiplicity.
    ModP(Vec<(MackeyName, u32)>),
}

/// Evaluate `H^α_G(X)` through a wedge decomposition of `X ∧ HZ̲`:
/// the summand `S^s` contributes `π_{s-α}` of the coefficient spectrum.
pub fn cohomology_query(
    dec: &WedgeDecomposition,
    alpha: &VirtualRep,
    mode: CoeffMode,
) -> Result<QueryAnswer> {
    match mode {
        CoeffMode::Integral => {
            let mut out = Vec::new();
            for (i, s) in dec.summands.iter().enumerate() {
                let nu = s.sub(alpha)?;
                match coeff::pi_star_e(&nu) {
                    Ok(CoeffGroup::Zero) => {}
                    Ok(g) => out.push((i, g)),
                    Err(e) => {
                        // outside the monomial sector: accept if a general
                        // vanishing rule shows the contribution is zero
                        if coeff::vanishing_reason(&nu).is_none() {
                            return Err(e);
                        }
                    }
                }
            }
            Ok(QueryAnswer::Integral(out))
        }
        CoeffMode::ModP => {
            let p = dec.n;
            let mut counts: std::collections::BTreeMap<MackeyName, u32> =
                std::collections::BTreeMap::new();
            for s in &dec.summands {
                let nu = s.sub(alpha)?;
                let name = coeff::mackey_modp_table(p, &nu)?;
                if name != MackeyName::Zero {
                    *counts.entry(name).or_insert(0) += 1;
                }
            }
            Ok(QueryAnswer::ModP(counts.into_iter().collect()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn freeness_witness_for_bad_order() {
        // Over C_p with lines ordered λ^0, λ, λ, λ^2 the fourth cell has a
        // smaller fixed-point dimension than the third despite a larger
        // underlying dimension.
        let p = 5;
        let filt = CellFiltration::from_lines(p, vec![0, 1, 1, 2]).unwrap();
        let w = filt.check_free_hypothesis().expect("expected a violation");
        assert_eq!((w.cell_w, w.cell_v), (2, 3));
        assert_eq!(w.k, p);
    }

    fn summand_strings(dec: &WedgeDecomposition) -> Vec<String> {
        dec.summands.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn decompose_cp_small_example() {
        // mults of λ^0 + 2λ + λ^2: wedge {0, λ, 2λ, 2λ + 2}
        let d = decompose_cp(5, &[1, 2, 1]).unwrap();
        assert_eq!(d.twist, 1);
        assert_eq!(
            summand_strings(&d.wedge),
            vec!["0", "L1", "2L1", "2 + 2L1"]
        );
    }

    #[test]
    fn decompose_cp_larger_example() {
        // mults of 3λ^0 + 2λ + 4λ^2:
        // {0, λ, 2λ, 2λ+2, 3λ+2, 4λ+2, 4λ+4, 5λ+4, 5λ+6}
        let d = decompose_cp(5, &[3, 2, 4]).unwrap();
        assert_eq!(d.twist, 2);
        assert_eq!(
            summand_strings(&d.wedge),
            vec![
                "0", "L1", "2L1", "2 + 2L1", "2 + 3L1", "2 + 4L1", "4 + 4L1",
                "4 + 5L1", "6 + 5L1"
            ]
        );
    }

    #[test]
    fn decompose_cp_underlying_dims() {
        let d = decompose_cp(3, &[2, 1, 2]).unwrap();
        let dims: Vec<i64> =
            d.wedge.summands.iter().map(|s| s.underlying_dim()).collect();
        assert_eq!(dims, vec![0, 2, 4, 6, 8]);
    }

    #[test]
    fn decompose_cp_rotation_invariance() {
        let base = decompose_cp(5, &[3, 2, 4]).unwrap();
        for r in 0..5usize {
            let rotated: Vec<i64> =
                (0..5).map(|i| [3i64, 2, 4, 0, 0][(i + r) % 5]).collect();
            let d = decompose_cp(5, &rotated).unwrap();
            assert_eq!(summand_strings(&d.wedge), summand_strings(&base.wedge));
        }
    }

    #[test]
    fn splitting_certified_for_all_families() {
        let d = decompose_cp(5, &[3, 2, 4]).unwrap();
        assert!(certify_splitting(&d.wedge).unwrap());
        assert!(certify_splitting(&decompose_regular(6, 12)).unwrap());
        assert!(certify_splitting(&decompose_quat(4, 8)).unwrap());
        assert!(certify_splitting(&decompose_conj(6)).unwrap());
    }

    #[test]
    fn conj_consecutive_step_uses_sigma_case() {
        let v = connecting_obstruction(&reps::conj_cell(3), &reps::conj_cell(2)).unwrap();
        assert_eq!(v, Some(ObstructionVerdict::SigmaSpherical));
        let v = connecting_obstruction(&reps::conj_cell(3), &reps::conj_cell(1)).unwrap();
        assert_eq!(
            v,
            Some(ObstructionVerdict::Vanishing(VanishingReason::AllFixedPositive))
        );
    }

    #[test]
    fn regular_matches_cp_profiles() {
        // For mults (m, …, m) the C_p decomposition computes P(m·regular);
        // compare fixed-point profiles with the φ-summand description.
        for p in [2u32, 3, 5] {
            for m in 1..=3i64 {
                let cp = decompose_cp(p, &vec![m; p as usize]).unwrap();
                let reg = decompose_regular(p, (p as i64 * m) as u32);
                let mut a: Vec<Vec<i64>> =
                    cp.wedge.summands.iter().map(|s| s.profile()).collect();
                let mut b: Vec<Vec<i64>> =
                    reg.summands.iter().map(|s| s.profile()).collect();
                a.sort();
                b.sort();
                assert_eq!(a, b, "p={p} m={m}");
            }
        }
    }

    #[test]
    fn query_integral_at_zero() {
        // H^0 of P(U) is Z from the φ_0 summand.
        let dec = decompose_regular(3, 12);
        let ans =
            cohomology_query(&dec, &VirtualRep::zero(3), CoeffMode::Integral).unwrap();
        match ans {
            QueryAnswer::Integral(contribs) => {
                assert_eq!(contribs.len(), 1);
                assert_eq!(contribs[0].0, 0);
                assert!(matches!(contribs[0].1, CoeffGroup::FreeZ { .. }));
            }
            _ => panic!("wrong mode"),
        }
    }

    #[test]
    fn query_modp_dual_example() {
        // H^{λ + 2p - 2}(P(U); Z/p̲) = Z/p̲* for odd p.
        for p in [3u32, 5] {
            let dec = decompose_regular(p, 4 * p);
            let mut alpha = VirtualRep::trivial_rep(p, 2 * p as i64 - 2);
            alpha.add_lambda(1, 1);
            let ans = cohomology_query(&dec, &alpha, CoeffMode::ModP).unwrap();
            match ans {
                QueryAnswer::ModP(counts) => {
                    assert_eq!(counts, vec![(MackeyName::ZModPDual, 1)], "p={p}");
                }
                _ => panic!("wrong mode"),
            }
        }
    }

    #[test]
    fn query_modp_lambda_corner() {
        // H^{ρ+2} of the conjugation CP^2 with Z/2̲ coefficients is ⟨Λ⟩.
        let dec = decompose_conj(2);
        let mut alpha = VirtualRep::trivial_rep(2, 3);
        alpha.sigma = 1;
        let ans = cohomology_query(&dec, &alpha, CoeffMode::ModP).unwrap();
        match ans {
            QueryAnswer::ModP(counts) => {
                assert_eq!(counts, vec![(MackeyName::AngleLambda, 1)]);
            }
            _ => panic!("wrong mode"),
        }
    }
}
