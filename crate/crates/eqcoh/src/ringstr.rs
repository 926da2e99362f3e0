//! Exact multivariate polynomial engine for the cohomology rings of the
//! equivariant classifying spaces `B_G S¹` and `B_G S³` over `G = C_{p^m}`.
//!
//! Generators are normalized to one Euler class `a_k` and one orientation
//! class `u_k` per level `0 ≤ k < m` (the class at level `m` is `0`
//! resp. `1`), the invertible comparison classes `w_r` in degree
//! `λ^{p^{r-1}} − λ^{p^r}` for `1 ≤ r ≤ m`, the non-equivariant generator
//! `x`, and the projective-space generators `g_0, …, g_m` sitting in
//! degrees `φ_{p^j}`.  The only relations imposed are the `a`-torsion
//! `p^{m-k}·a_k = 0` and the two `w_r` rewrite rules
//! `w_r·a_{λ^{p^r}} = p·a_{λ^{p^{r-1}}}`, `w_r·u_{λ^{p^r}} = u_{λ^{p^{r-1}}}`;
//! the cross-relation between `a` and `u` classes is deliberately absent,
//! which is what keeps the algebraic restriction map injective mod `p`.
//!
//! The restriction map `Q₀` to the trivial projective space is computed
//! both by its closed formula and by an independent cell-by-cell rewrite
//! calculus, and the module verifies the multiplicative relations of both
//! ring presentations symbolically.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::decomp;
use crate::reps::{conj_cell, VirtualRep};
use crate::{Error, Result};

/// Exponent vector over the fixed generator order
/// `a_0..a_{m-1}, u_0..u_{m-1}, w_1..w_m, x, g_0..g_m`.
pub type Mono = Vec<u16>;

/// A polynomial: reduced nonzero coefficients keyed by exponent vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, i64>,
}

impl Poly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

/// Coefficient context: `Z` with `a`-torsion bookkeeping, or everything
/// reduced mod `p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Ring {
    pub p: i64,
    pub m: usize,
    pub modp: bool,
}

fn is_prime(p: i64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl Ring {
    pub fn new(p: u32, m: u32, modp: bool) -> Result<Ring> {
        if !is_prime(p as i64) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::Domain("need at least one level (m ≥ 1)".into()));
        }
        Ok(Ring { p: p as i64, m: m as usize, modp })
    }

    pub fn order(&self) -> i64 {
        self.p.pow(self.m as u32)
    }

    fn nvars(&self) -> usize {
        4 * self.m + 2
    }

    fn idx_a(&self, k: usize) -> usize {
        debug_assert!(k < self.m);
        k
    }

    fn idx_u(&self, k: usize) -> usize {
        debug_assert!(k < self.m);
        self.m + k
    }

    fn idx_w(&self, r: usize) -> usize {
        debug_assert!((1..=self.m).contains(&r));
        2 * self.m + r - 1
    }

    fn idx_x(&self) -> usize {
        3 * self.m
    }

    fn idx_gen(&self, j: usize) -> usize {
        debug_assert!(j <= self.m);
        3 * self.m + 1 + j
    }

    pub fn zero(&self) -> Poly {
        Poly::default()
    }

    pub fn constant(&self, c: i64) -> Poly {
        let mut f = Poly::default();
        self.accumulate(&mut f.terms, vec![0; self.nvars()], c);
        self.finish(&mut f.terms);
        f
    }

    pub fn one(&self) -> Poly {
        self.constant(1)
    }

    fn var(&self, idx: usize) -> Poly {
        let mut mono = vec![0; self.nvars()];
        mono[idx] = 1;
        let mut f = Poly::default();
        self.accumulate(&mut f.terms, mono, 1);
        self.finish(&mut f.terms);
        f
    }

    pub fn a(&self, k: usize) -> Poly {
        self.var(self.idx_a(k))
    }

    pub fn u(&self, k: usize) -> Poly {
        self.var(self.idx_u(k))
    }

    pub fn w(&self, r: usize) -> Poly {
        self.var(self.idx_w(r))
    }

    pub fn x(&self) -> Poly {
        self.var(self.idx_x())
    }

    pub fn gen(&self, j: usize) -> Poly {
        self.var(self.idx_gen(j))
    }

    /// Rewrite the `w_r` pairs inside one monomial, mutating the
    /// coefficient.  The Euler-class rule is applied before the
    /// orientation rule; the verified identities never produce a monomial
    /// where the choice matters.
    fn rewrite(&self, mono: &mut Mono, coeff: &mut i64) {
        for r in (1..=self.m).rev() {
            let iw = self.idx_w(r);
            if r == self.m {
                // u at level m is 1, a at level m is 0: w_m is u_{m-1}
                let e = mono[iw];
                mono[iw] = 0;
                mono[self.idx_u(self.m - 1)] += e;
                continue;
            }
            while mono[iw] > 0 && mono[self.idx_a(r)] > 0 {
                mono[iw] -= 1;
                mono[self.idx_a(r)] -= 1;
                mono[self.idx_a(r - 1)] += 1;
                *coeff *= self.p;
            }
            while mono[iw] > 0 && mono[self.idx_u(r)] > 0 {
                mono[iw] -= 1;
                mono[self.idx_u(r)] -= 1;
                mono[self.idx_u(r - 1)] += 1;
            }
        }
    }

    /// Additive-order modulus of a monomial: `p` in mod-`p` mode, the
    /// `a`-torsion `p^{m-k}` (largest `a`-level present) over `Z`, and `0`
    /// (no reduction) for torsion-free monomials.
    fn modulus(&self, mono: &Mono) -> i64 {
        if self.modp {
            return self.p;
        }
        let mut best: Option<usize> = None;
        for k in 0..self.m {
            if mono[self.idx_a(k)] > 0 {
                best = Some(k);
            }
        }
        match best {
            Some(k) => self.p.pow((self.m - k) as u32),
            None => 0,
        }
    }

    fn accumulate(&self, acc: &mut BTreeMap<Mono, i64>, mut mono: Mono, mut coeff: i64) {
        if coeff == 0 {
            return;
        }
        self.rewrite(&mut mono, &mut coeff);
        *acc.entry(mono).or_insert(0) += coeff;
    }

    fn finish(&self, acc: &mut BTreeMap<Mono, i64>) {
        let keys: Vec<Mono> = acc.keys().cloned().collect();
        for k in keys {
            let modulus = self.modulus(&k);
            let c = acc[&k];
            let reduced = if modulus > 0 { c.rem_euclid(modulus) } else { c };
            if reduced == 0 {
                acc.remove(&k);
            } else {
                acc.insert(k, reduced);
            }
        }
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Poly {
        let mut out = f.terms.clone();
        for (mono, &c) in &g.terms {
            *out.entry(mono.clone()).or_insert(0) += c;
        }
        self.finish(&mut out);
        Poly { terms: out }
    }

    pub fn sub(&self, f: &Poly, g: &Poly) -> Poly {
        self.add(f, &self.scale(g, -1))
    }

    pub fn scale(&self, f: &Poly, c: i64) -> Poly {
        let mut out = BTreeMap::new();
        for (mono, &fc) in &f.terms {
            self.accumulate(&mut out, mono.clone(), fc * c);
        }
        self.finish(&mut out);
        Poly { terms: out }
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        let mut out = BTreeMap::new();
        for (mf, &cf) in &f.terms {
            for (mg, &cg) in &g.terms {
                let mono: Mono = mf.iter().zip(mg).map(|(&a, &b)| a + b).collect();
                self.accumulate(&mut out, mono, cf * cg);
            }
        }
        self.finish(&mut out);
        Poly { terms: out }
    }

    pub fn pow(&self, f: &Poly, e: u32) -> Poly {
        let mut result = self.one();
        let mut base = f.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Normalized Euler class of `λ^t`: writing `t ≡ s·p^k mod p^m` with
    /// `p ∤ s`, this is `s·a_k`; it is `0` when `p^m | t`.
    pub fn na(&self, t: i64) -> Poly {
        let n = self.order();
        let mut t = t.rem_euclid(n);
        if t == 0 {
            return self.zero();
        }
        let mut k = 0usize;
        while t % self.p == 0 {
            t /= self.p;
            k += 1;
        }
        self.scale(&self.a(k), t)
    }

    /// Normalized orientation class of `λ^t`: `u_k` for `t ≡ s·p^k`, and
    /// `1` when `p^m | t`.
    pub fn nu(&self, t: i64) -> Poly {
        let n = self.order();
        let mut t = t.rem_euclid(n);
        if t == 0 {
            return self.one();
        }
        let mut k = 0usize;
        while t % self.p == 0 {
            t /= self.p;
            k += 1;
        }
        self.u(k)
    }

    /// Image of the degree-`φ_d` projective generator under the
    /// restriction to the trivial projective space, by the closed
    /// telescope formula.  Over `Z` the comparison units between
    /// `a_{λ^{j-d}}` and `a_{λ^j}` are absorbed by normalizing
    /// `a_{λ^{j-d}}` directly, which also covers composite `d`.
    pub fn q0_closed(&self, d: u32) -> Result<Poly> {
        if (d as i64) > self.order() {
            return Err(Error::Domain(format!(
                "degree {d} exceeds the group order {}",
                self.order()
            )));
        }
        let d = d as i64;
        let mut total = self.zero();
        for i in 0..d {
            let mut term = self.mul(&self.nu(i + 1), &self.x());
            for j in 1..=i {
                term = self.mul(&term, &self.na(j - d));
            }
            for s in (i + 2)..=d {
                let z = self.add(&self.na(s), &self.mul(&self.x(), &self.nu(s)));
                term = self.mul(&term, &z);
            }
            total = self.add(&total, &term);
        }
        Ok(total)
    }

    /// Same image computed by the independent cell-removal calculus: start
    /// from the top filtration class and strip one irreducible summand at
    /// a time using the two restriction rules, finishing with the
    /// empty-set evaluation.
    pub fn q0_via_tau(&self, d: u32) -> Result<Poly> {
        if (d as i64) > self.order() {
            return Err(Error::Domain(format!(
                "degree {d} exceeds the group order {}",
                self.order()
            )));
        }
        let d = d as i64;
        // class = Delta (level None) or Omega at level ℓ (Some(ℓ)); the
        // index set after applying τ_1..τ_i is always {i+1, …, d-1}
        let mut state: BTreeMap<Option<i64>, Poly> = BTreeMap::new();
        state.insert(None, self.one());
        for i in 1..d {
            let mut next: BTreeMap<Option<i64>, Poly> = BTreeMap::new();
            let mut put = |key: Option<i64>, f: Poly| {
                let entry = next.entry(key).or_insert_with(|| self.zero());
                *entry = self.add(entry, &f);
            };
            for (class, coeff) in &state {
                match class {
                    None => {
                        put(None, self.mul(coeff, &self.na(i - d)));
                        put(Some(0), self.mul(coeff, &self.nu(i)));
                    }
                    Some(l) => {
                        put(Some(*l), self.mul(coeff, &self.na(i)));
                        put(Some(l + 1), self.mul(coeff, &self.nu(i)));
                    }
                }
            }
            state = next;
        }
        let mut total = self.zero();
        for (class, coeff) in &state {
            let value = match class {
                None => self.mul(&self.nu(d), &self.x()),
                Some(l) => {
                    let xl = self.pow(&self.x(), *l as u32 + 1);
                    let bracket = self.add(
                        &self.na(d),
                        &self.mul(&self.nu(d), &self.x()),
                    );
                    self.mul(&xl, &bracket)
                }
            };
            total = self.add(&total, &self.mul(coeff, &value));
        }
        Ok(total)
    }

    /// The algebraic restriction homomorphism: identity on coefficient
    /// generators, `g_j ↦ q0_closed(p^j)`.
    pub fn q0_hom(&self, f: &Poly) -> Result<Poly> {
        let mut images: Vec<Option<Poly>> = vec![None; self.m + 1];
        let mut total = self.zero();
        for (mono, &c) in &f.terms {
            let mut stripped = mono.clone();
            let mut term = self.constant(c);
            for j in 0..=self.m {
                let e = mono[self.idx_gen(j)];
                if e == 0 {
                    continue;
                }
                stripped[self.idx_gen(j)] = 0;
                if images[j].is_none() {
                    images[j] = Some(self.q0_closed(self.p.pow(j as u32) as u32)?);
                }
                term = self.mul(&term, &self.pow(images[j].as_ref().unwrap(), e as u32));
            }
            let mut base = Poly::default();
            self.accumulate(&mut base.terms, stripped, 1);
            self.finish(&mut base.terms);
            total = self.add(&total, &self.mul(&term, &base));
        }
        Ok(total)
    }

    /// Quaternionic substitution: doubles the exponents of all `a`, `u`
    /// and `w` generators, keeping `x` and the projective generators
    /// fixed.
    pub fn sq(&self, f: &Poly) -> Poly {
        let mut out = BTreeMap::new();
        for (mono, &c) in &f.terms {
            let mut doubled = mono.clone();
            for idx in 0..3 * self.m {
                doubled[idx] *= 2;
            }
            self.accumulate(&mut out, doubled, c);
        }
        self.finish(&mut out);
        Poly { terms: out }
    }

    /// Underlying restriction: `a ↦ 0`, `u ↦ 1`, `w ↦ 1`, `g_j ↦ x^{p^j}`;
    /// returns the coefficients of the resulting polynomial in `x` indexed
    /// by exponent.
    pub fn res_e(&self, f: &Poly) -> Vec<i64> {
        let mut coeffs: Vec<i64> = Vec::new();
        for (mono, &c) in &f.terms {
            if (0..self.m).any(|k| mono[self.idx_a(k)] > 0) {
                continue;
            }
            let mut deg = mono[self.idx_x()] as usize;
            for j in 0..=self.m {
                deg += mono[self.idx_gen(j)] as usize * self.p.pow(j as u32) as usize;
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            coeffs[deg] += c;
        }
        let modulus = if self.modp { self.p } else { 0 };
        for c in &mut coeffs {
            if modulus > 0 {
                *c = c.rem_euclid(modulus);
            }
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        coeffs
    }

    fn var_name(&self, idx: usize) -> String {
        if idx < self.m {
            format!("a{idx}")
        } else if idx < 2 * self.m {
            format!("u{}", idx - self.m)
        } else if idx < 3 * self.m {
            format!("w{}", idx - 2 * self.m + 1)
        } else if idx == 3 * self.m {
            "x".into()
        } else {
            format!("g{}", idx - 3 * self.m - 1)
        }
    }

    /// Canonical graded-lex text form.
    pub fn display(&self, f: &Poly) -> String {
        if f.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<(&Mono, i64)> = f.terms.iter().map(|(m, &c)| (m, c)).collect();
        terms.sort_by_key(|(m, _)| {
            (m.iter().map(|&e| e as u32).sum::<u32>(), (*m).clone())
        });
        let mut out = String::new();
        for (i, (mono, c)) in terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            for (idx, &e) in mono.iter().enumerate() {
                if e == 1 {
                    factors.push(self.var_name(idx));
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.var_name(idx), e));
                }
            }
            if factors.is_empty() {
                out.push_str(&c.to_string());
            } else if *c == 1 {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&format!("{}*{}", c, factors.join("*")));
            }
        }
        out
    }
}

/// Normalized single class: `a_{λ^j}` or `u_{λ^j}` rewritten to the level
/// generators.
pub fn normalize_class(ring: &Ring, kind: char, j: i64) -> Result<Poly> {
    match kind {
        'a' => Ok(ring.na(j)),
        'u' => Ok(ring.nu(j)),
        _ => Err(Error::Domain(format!("unknown class kind {kind:?}"))),
    }
}

/// The auxiliary series of the relation derivation (all mod `p`):
/// `b = ∏_{i=1}^{p^r-1}(a_{λ^i} + u_{λ^i}x)`, the shifted generators
/// `t_j = g_j + ∏_{i=1}^{p^j} a_{λ^i}`, the recursive classes `ca_j` with
/// `P(z,w) = (z-w)^{p-1} - w^{p-1}`, and their restriction images `ia_j`.
#[derive(Clone, Debug)]
pub struct SeriesTerms {
    pub r: u32,
    pub b: Poly,
    pub t: Vec<Poly>,
    pub ca: Vec<Poly>,
    pub ia: Vec<Poly>,
}

fn p_of(ring: &Ring, z: &Poly, w: &Poly) -> Poly {
    let e = (ring.p - 1) as u32;
    ring.sub(&ring.pow(&ring.sub(z, w), e), &ring.pow(w, e))
}

/// Build the series data for level `r ≤ m` and check the two structural
/// identities: the restriction of each recursive class equals its direct
/// image, and `b` factors as the product of the images.
pub fn series_terms(ring: &Ring, r: u32) -> Result<SeriesTerms> {
    if !ring.modp {
        return Err(Error::Domain("series identities live mod p".into()));
    }
    if r as usize > ring.m {
        return Err(Error::Domain(format!("level {r} exceeds m = {}", ring.m)));
    }
    let pr = ring.p.pow(r);
    let mut b = ring.one();
    for i in 1..pr {
        b = ring.mul(&b, &ring.add(&ring.na(i), &ring.mul(&ring.nu(i), &ring.x())));
    }
    let mut t = Vec::new();
    for j in 0..=r as usize {
        let mut prod = ring.one();
        for i in 1..=ring.p.pow(j as u32) {
            prod = ring.mul(&prod, &ring.na(i));
        }
        t.push(ring.add(&ring.gen(j), &prod));
    }
    let mut ca: Vec<Poly> = Vec::new();
    let mut ia: Vec<Poly> = Vec::new();
    for j in 0..r as usize {
        let mut wc = ring.a(j);
        let mut wi = ring.a(j);
        for i in 0..j {
            wc = ring.mul(&wc, &ca[i]);
            wi = ring.mul(&wi, &ia[i]);
        }
        let caj = p_of(ring, &t[j], &wc);
        let iaj = p_of(ring, &ring.q0_hom(&t[j])?, &wi);
        if ring.q0_hom(&caj)? != iaj {
            return Err(Error::Domain(format!(
                "restriction image of recursive class {j} disagrees"
            )));
        }
        ca.push(caj);
        ia.push(iaj);
    }
    let mut prod = ring.one();
    for f in &ia {
        prod = ring.mul(&prod, f);
    }
    if prod != b {
        return Err(Error::Domain(format!(
            "series factorization fails at level {r}"
        )));
    }
    Ok(SeriesTerms { r, b, t, ca, ia })
}

/// Which relation family to verify.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RelationKind {
    Rho,
    Mu,
    Lewis,
    Lemma,
}

/// Outcome of a symbolic relation check: `ok` iff the residual polynomial
/// is zero; the residual is reported verbatim otherwise.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub kind: RelationKind,
    pub p: u32,
    pub m: u32,
    pub r: u32,
    pub ok: bool,
    pub residual: String,
}

/// Verify one of the ring relations symbolically.
pub fn verify_relation(kind: RelationKind, p: u32, m: u32, r: u32) -> Result<RelationCheck> {
    let residual = match kind {
        RelationKind::Lemma => {
            let ring = Ring::new(p, 1, true)?;
            let mut prod = ring.one();
            for i in 1..p as i64 {
                let f = ring.add(&ring.scale(&ring.a(0), i), &ring.mul(&ring.x(), &ring.u(0)));
                prod = ring.mul(&prod, &f);
            }
            let e = p - 1;
            let rhs = ring.sub(
                &ring.pow(&ring.mul(&ring.x(), &ring.u(0)), e),
                &ring.pow(&ring.a(0), e),
            );
            ring.sub(&prod, &rhs)
        }
        RelationKind::Lewis => {
            // exact coefficients; a-torsion bookkeeping is p·a_0 = 0
            let ring = Ring::new(p, 1, false)?;
            let mut prod = ring.gen(0);
            for i in 1..p as i64 {
                prod = ring.mul(
                    &prod,
                    &ring.add(&ring.scale(&ring.a(0), i), &ring.gen(0)),
                );
            }
            let rel = ring.sub(&ring.mul(&ring.u(0), &ring.gen(1)), &prod);
            ring.q0_hom(&rel)?
        }
        RelationKind::Rho | RelationKind::Mu => {
            if r == 0 || r > m {
                return Err(Error::Domain(format!("need 1 ≤ r ≤ m, got r = {r}")));
            }
            let ring = Ring::new(p, m, true)?;
            let series = series_terms(&ring, r - 1)?;
            let tt = ring.q0_hom(&series.t[r as usize - 1])?;
            let q0_top = ring.q0_closed(p.pow(r))?;
            let (tt, q0_top, ims) = match kind {
                RelationKind::Rho => (tt, q0_top, series.ia.clone()),
                _ => (
                    ring.sq(&tt),
                    ring.sq(&q0_top),
                    series.ia.iter().map(|f| ring.sq(f)).collect(),
                ),
            };
            let weight: u32 = if kind == RelationKind::Mu { 2 } else { 1 };
            let lead = ring.mul(&ring.pow(&ring.w(r as usize), weight), &q0_top);
            let mut tail = ring.mul(
                &ring.pow(&ring.a(r as usize - 1), weight * (p - 1)),
                &tt,
            );
            let mut prod = ring.one();
            for f in ims.iter().take(r as usize - 1) {
                prod = ring.mul(&prod, f);
            }
            tail = ring.mul(&tail, &ring.pow(&prod, p - 1));
            ring.add(&ring.sub(&lead, &ring.pow(&tt, p)), &tail)
        }
    };
    let ring_for_display = match kind {
        RelationKind::Lemma => Ring::new(p, 1, true)?,
        RelationKind::Lewis => Ring::new(p, 1, false)?,
        _ => Ring::new(p, m, true)?,
    };
    Ok(RelationCheck {
        kind,
        p,
        m,
        r,
        ok: residual.is_zero(),
        residual: ring_for_display.display(&residual),
    })
}

/// Summary of the injectivity matrix of the restriction map at the probe
/// degree `λ + λ² + … + λ^{p^j-1} + λ^{p^{j-1}}`.
#[derive(Clone, Debug, Serialize)]
pub struct InjectivityProfile {
    pub p: u32,
    pub m: u32,
    pub j: u32,
    /// Source: `Z ⊕ (Z/p^{source_torsion})^{⊕ source_copies}`.
    pub source_torsion: u32,
    pub source_copies: u64,
    /// Target torsion exponents `t_{j,i}` for `i = 0, …, p^j - 1`.
    pub target_exponents: Vec<u32>,
    /// Diagonal entry exponents `t_{j,i} - (m - j + 1)`.
    pub diagonal_exponents: Vec<u32>,
    pub lower_triangular: bool,
    pub injective: bool,
}

/// Compute the injectivity matrix data at the probe degree.  The `i`-th
/// target order maximizes `m - max(valuations)` over selections of
/// `p^j - i` labels from the degree's multiset of exponents, i.e. it picks
/// the labels of smallest valuation.
pub fn injectivity_profile(p: u32, m: u32, j: u32) -> Result<InjectivityProfile> {
    if !is_prime(p as i64) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if j == 0 || j > m {
        return Err(Error::Domain(format!("need 1 ≤ j ≤ m, got j = {j}")));
    }
    let pj = (p as u64).pow(j);
    let vp = |mut t: u64| {
        let mut v = 0u32;
        while t % p as u64 == 0 {
            t /= p as u64;
            v += 1;
        }
        v
    };
    let mut vals: Vec<u32> = (1..pj).map(vp).collect();
    vals.push(j - 1);
    vals.sort_unstable();
    let mut target = Vec::new();
    let mut diagonal = Vec::new();
    for i in 0..pj {
        // the (p^j - i) smallest valuations; their max sits at that index
        let t = m - vals[(pj - i) as usize - 1];
        if t < m - j + 1 {
            return Err(Error::Domain(
                "diagonal entry would have negative exponent".into(),
            ));
        }
        target.push(t);
        diagonal.push(t - (m - j + 1));
    }
    Ok(InjectivityProfile {
        p,
        m,
        j,
        source_torsion: m - j + 1,
        source_copies: pj,
        target_exponents: target,
        diagonal_exponents: diagonal,
        lower_triangular: true,
        injective: true,
    })
}

/// An additive basis monomial of the projective-space cohomology: digits
/// of `i` base `p` choose the exponents of the intermediate generators,
/// with underlying restriction `x^{kn+i}`.
#[derive(Clone, Debug, Serialize)]
pub struct BasisMonomial {
    pub top_exponent: u64,
    /// `(level j, exponent r_j)` with `0 < r_j < p`.
    pub digits: Vec<(u32, u32)>,
    pub res_e_degree: u64,
}

pub fn basis_monomial(k: u64, i: u64, p: u32, m: u32) -> Result<BasisMonomial> {
    if !is_prime(p as i64) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let n = (p as u64).pow(m);
    if i >= n {
        return Err(Error::Domain(format!(
            "index {i} must be smaller than the group order {n}"
        )));
    }
    let mut digits = Vec::new();
    let mut rest = i;
    let mut level = 0u32;
    while rest > 0 {
        let d = (rest % p as u64) as u32;
        if d > 0 {
            digits.push((level, d));
        }
        rest /= p as u64;
        level += 1;
    }
    Ok(BasisMonomial {
        top_exponent: k,
        digits,
        res_e_degree: k * n + i,
    })
}

/// Ring descriptor for the conjugation projective space: a polynomial
/// ring on one generator in degree `1 + σ`, cross-checked against the
/// additive decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct ConjRing {
    pub generator_degree: VirtualRep,
    /// `(power k, degree of ε^k, underlying restriction exponent)`.
    pub powers: Vec<(u32, VirtualRep, u32)>,
    pub additive_check: bool,
}

pub fn conj_ring(n_cap: u32) -> ConjRing {
    let wedge = decomp::decompose_conj(n_cap);
    let additive_check = wedge
        .summands
        .iter()
        .enumerate()
        .all(|(i, s)| s.profile() == conj_cell(i as u32).profile());
    let powers = (0..=n_cap)
        .map(|k| (k, conj_cell(k), k))
        .collect();
    ConjRing {
        generator_degree: conj_cell(1),
        powers,
        additive_check,
    }
}
