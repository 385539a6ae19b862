//! "Nice" modules over `M2`: finite direct sums of shifted free summands
//! `Σ^{p,q} M2` and shifted antipodal summands `Σ^{s,0} A_r`.
//!
//! The structure theorem guarantees the cohomology of every finite complex
//! has this shape, so the whole crate works with the summand data directly.
//! Ranks of the `ρ`- and `τ`-actions are computed per bidegree by enumerating
//! the monomial basis, never symbolically; the windows involved are tiny and
//! the enumeration doubles as an oracle for the closed-form answers.

use crate::coeff_ring::{self, LambdaElt, LambdaMonomial, M2Elt, M2Monomial};
use crate::f2::F2Matrix;
use crate::{Bidegree, Window, WindowError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The free summand `Σ^{p,q} M2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeSummand {
    pub p: i64,
    pub q: i64,
}

/// The antipodal summand `Σ^{s,0} A_r`: starts in topological dimension `s`,
/// ends in dimension `s + r`. Weight shifts are normalized away at
/// construction since `τ` acts invertibly on `A_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AntipodalSummand {
    pub s: i64,
    pub r: u32,
}

/// Stable identifier of a summand within one module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SummandId {
    Free(usize),
    Anti(usize),
}

/// A finite direct sum of free and antipodal summands.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NiceModule {
    free: Vec<FreeSummand>,
    antipodal: Vec<AntipodalSummand>,
}

/// One basis monomial inside a summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasisMonomial {
    Free(M2Monomial),
    Anti(LambdaMonomial),
}

/// Coefficient attached to a summand generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Free(M2Elt),
    Anti(LambdaElt),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Free(x) => x.is_zero(),
            Coeff::Anti(x) => x.is_zero(),
        }
    }

    pub fn bidegree(&self) -> Option<Bidegree> {
        match self {
            Coeff::Free(x) => x.bidegree(),
            Coeff::Anti(x) => x.bidegree(),
        }
    }
}

/// An element of a nice module: for each summand, a coefficient on its
/// generator. Elements only make sense relative to the module that produced
/// them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleElement {
    terms: BTreeMap<SummandId, Coeff>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("no summand {0:?} in this module")]
    NoSuchSummand(SummandId),
    #[error("coefficient kind does not match summand kind for {0:?}")]
    KindMismatch(SummandId),
    #[error("torsion bound mismatch on {id:?}: expected Λ_{expected}, got Λ_{got}")]
    TorsionMismatch { id: SummandId, expected: u32, got: u32 },
    #[error("negative τ-twist does not act on the top cone (summand {0:?})")]
    TwistUndefined(SummandId),
}

impl ModuleElement {
    pub fn zero() -> Self {
        ModuleElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Coeff::is_zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SummandId, &Coeff)> {
        self.terms.iter().filter(|(_, c)| !c.is_zero())
    }

    pub fn coeff(&self, id: SummandId) -> Option<&Coeff> {
        self.terms.get(&id).filter(|c| !c.is_zero())
    }

    fn toggle_free(&mut self, id: SummandId, m: M2Monomial) {
        let entry = self.terms.entry(id).or_insert_with(|| Coeff::Free(M2Elt::zero()));
        if let Coeff::Free(x) = entry {
            x.toggle(m);
        }
    }

    fn toggle_anti(&mut self, id: SummandId, r: u32, m: LambdaMonomial) {
        let entry = self.terms.entry(id).or_insert_with(|| Coeff::Anti(LambdaElt::zero(r)));
        if let Coeff::Anti(x) = entry {
            x.toggle(m);
        }
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        for (id, c) in other.terms() {
            match c {
                Coeff::Free(x) => {
                    for m in x.monomials() {
                        out.toggle_free(*id, *m);
                    }
                }
                Coeff::Anti(x) => {
                    for m in x.monomials() {
                        out.toggle_anti(*id, x.torsion_bound(), *m);
                    }
                }
            }
        }
        out
    }
}

impl NiceModule {
    pub fn new(free: Vec<FreeSummand>, antipodal: Vec<AntipodalSummand>) -> Self {
        NiceModule { free, antipodal }
    }

    /// Builds from raw antipodal shifts `Σ^{s,w} A_r`, normalizing the weight
    /// to zero (a τ-power is an isomorphism on `A_r`).
    pub fn with_shifted_antipodal(
        free: Vec<FreeSummand>,
        antipodal: Vec<(i64, i64, u32)>,
    ) -> Self {
        let antipodal = antipodal.into_iter().map(|(s, _w, r)| AntipodalSummand { s, r }).collect();
        NiceModule { free, antipodal }
    }

    pub fn free_summands(&self) -> &[FreeSummand] {
        &self.free
    }

    pub fn antipodal_summands(&self) -> &[AntipodalSummand] {
        &self.antipodal
    }

    pub fn summand_ids(&self) -> impl Iterator<Item = SummandId> + '_ {
        let frees = (0..self.free.len()).map(SummandId::Free);
        let antis = (0..self.antipodal.len()).map(SummandId::Anti);
        frees.chain(antis)
    }

    /// Bidegree of the generator of a summand.
    pub fn generator_bidegree(&self, id: SummandId) -> Option<Bidegree> {
        match id {
            SummandId::Free(i) => self.free.get(i).map(|s| Bidegree::new(s.p, s.q)),
            SummandId::Anti(i) => self.antipodal.get(i).map(|s| Bidegree::new(s.s, 0)),
        }
    }

    /// Total `Z/2`-dimension in bidegree `(p,q)`.
    pub fn dim_at(&self, p: i64, q: i64) -> usize {
        let free: usize =
            self.free.iter().map(|s| coeff_ring::m2_dim_at(p - s.p, q - s.q)).sum();
        let anti = self
            .antipodal
            .iter()
            .filter(|s| s.s <= p && p <= s.s + s.r as i64)
            .count();
        free + anti
    }

    /// The monomial basis in bidegree `(p,q)`: at most one monomial per
    /// summand.
    pub fn basis_at(&self, p: i64, q: i64) -> Vec<(SummandId, BasisMonomial)> {
        let mut out = Vec::new();
        for (i, s) in self.free.iter().enumerate() {
            if let Some(m) = M2Monomial::at_bidegree(p - s.p, q - s.q) {
                out.push((SummandId::Free(i), BasisMonomial::Free(m)));
            }
        }
        for (i, s) in self.antipodal.iter().enumerate() {
            let a = p - s.s;
            if 0 <= a && a <= s.r as i64 {
                let m = LambdaMonomial { rho: a as u32, tau: q - a };
                out.push((SummandId::Anti(i), BasisMonomial::Anti(m)));
            }
        }
        out
    }

    /// The element with a single monomial in one summand.
    pub fn element_from_basis(&self, id: SummandId, m: BasisMonomial) -> ModuleElement {
        let mut out = ModuleElement::zero();
        match (id, m) {
            (SummandId::Free(_), BasisMonomial::Free(mono)) => out.toggle_free(id, mono),
            (SummandId::Anti(i), BasisMonomial::Anti(mono)) => {
                out.toggle_anti(id, self.antipodal[i].r, mono)
            }
            _ => {}
        }
        out
    }

    /// The generator of a summand as an element.
    pub fn generator(&self, id: SummandId) -> ModuleElement {
        match id {
            SummandId::Free(_) => {
                self.element_from_basis(id, BasisMonomial::Free(M2Monomial::one()))
            }
            SummandId::Anti(_) => {
                self.element_from_basis(id, BasisMonomial::Anti(LambdaMonomial { rho: 0, tau: 0 }))
            }
        }
    }

    /// Scalar action of an `M2` monomial: `m2_mul` on free coefficients,
    /// the `Λ`-action on antipodal coefficients.
    pub fn act(&self, scalar: &M2Monomial, x: &ModuleElement) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (id, c) in x.terms() {
            match c {
                Coeff::Free(elt) => {
                    let product = &M2Elt::from(*scalar) * elt;
                    for m in product.monomials() {
                        out.toggle_free(*id, *m);
                    }
                }
                Coeff::Anti(elt) => {
                    let product = coeff_ring::m2_act_on_lambda(scalar, elt);
                    for m in product.monomials() {
                        out.toggle_anti(*id, elt.torsion_bound(), *m);
                    }
                }
            }
        }
        out
    }

    /// Action of the formal monomial `ρ^rho τ^tau` with `tau` of either sign.
    ///
    /// Negative τ-powers act on antipodal coefficients (τ is invertible
    /// there) and on bottom-cone free coefficients (which are infinitely
    /// τ-divisible); hitting a top-cone monomial with insufficient τ is an
    /// error rather than silently zero.
    pub fn act_twisted(
        &self,
        rho: u32,
        tau: i64,
        x: &ModuleElement,
    ) -> Result<ModuleElement, ModuleError> {
        if tau >= 0 {
            let scalar = M2Monomial::top(rho, tau as u32);
            return Ok(self.act(&scalar, x));
        }
        let mut out = ModuleElement::zero();
        for (id, c) in x.terms() {
            match c {
                Coeff::Free(elt) => {
                    for m in elt.monomials() {
                        match *m {
                            M2Monomial::Top { rho: a, tau: b } => {
                                let new_tau = b as i64 + tau;
                                if new_tau < 0 {
                                    return Err(ModuleError::TwistUndefined(*id));
                                }
                                out.toggle_free(*id, M2Monomial::top(a + rho, new_tau as u32));
                            }
                            M2Monomial::Bot { rho: a, tau: b } => {
                                // ρ^rho τ^tau · θ/(ρ^a τ^b): dividing by a
                                // negative τ-power raises the τ-divisor.
                                if a < rho {
                                    continue;
                                }
                                let new_tau_div = b as i64 - tau;
                                debug_assert!(new_tau_div >= 0);
                                out.toggle_free(
                                    *id,
                                    M2Monomial::bot(a - rho, new_tau_div as u32),
                                );
                            }
                        }
                    }
                }
                Coeff::Anti(elt) => {
                    let twisted = elt.twist(rho, tau);
                    for m in twisted.monomials() {
                        out.toggle_anti(*id, elt.torsion_bound(), *m);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Bidegree of a homogeneous element (shift plus coefficient bidegree).
    pub fn element_bidegree(&self, x: &ModuleElement) -> Option<Bidegree> {
        let mut result: Option<Bidegree> = None;
        for (id, c) in x.terms() {
            let shift = self.generator_bidegree(*id)?;
            let coeff_deg = c.bidegree()?;
            let total = shift + coeff_deg;
            match result {
                None => result = Some(total),
                Some(d) if d == total => {}
                Some(_) => return None,
            }
        }
        result
    }

    pub fn element_is_homogeneous(&self, x: &ModuleElement) -> bool {
        x.is_zero() || self.element_bidegree(x).is_some()
    }

    /// Rank of a scalar action from `(p,q)` to the stated target bidegree.
    fn action_rank(&self, scalar: &M2Monomial, p: i64, q: i64) -> usize {
        let target = Bidegree::new(p, q) + scalar.bidegree();
        let source_basis = self.basis_at(p, q);
        let target_basis = self.basis_at(target.p, target.q);
        let index: BTreeMap<(SummandId, BasisMonomial), usize> = target_basis
            .iter()
            .enumerate()
            .map(|(i, &(id, m))| ((id, m), i))
            .collect();
        let mut matrix = F2Matrix::zero(target_basis.len(), source_basis.len());
        for (col, &(id, m)) in source_basis.iter().enumerate() {
            let image = self.act(scalar, &self.element_from_basis(id, m));
            for (tid, c) in image.terms() {
                match c {
                    Coeff::Free(elt) => {
                        for mono in elt.monomials() {
                            if let Some(&row) = index.get(&(*tid, BasisMonomial::Free(*mono))) {
                                matrix.toggle(row, col);
                            }
                        }
                    }
                    Coeff::Anti(elt) => {
                        for mono in elt.monomials() {
                            if let Some(&row) = index.get(&(*tid, BasisMonomial::Anti(*mono))) {
                                matrix.toggle(row, col);
                            }
                        }
                    }
                }
            }
        }
        matrix.rank()
    }

    /// Rank of multiplication by `ρ` from `(p,q)` to `(p+1,q+1)`.
    pub fn rho_rank_at(&self, p: i64, q: i64) -> usize {
        self.action_rank(&coeff_ring::RHO, p, q)
    }

    /// Rank of multiplication by `τ` from `(p,q)` to `(p,q+1)`.
    pub fn tau_rank_at(&self, p: i64, q: i64) -> usize {
        self.action_rank(&coeff_ring::TAU, p, q)
    }

    /// Summand-data isomorphism test: equality of the two multisets.
    pub fn iso_equal(&self, other: &NiceModule) -> bool {
        let mut a = self.free.clone();
        let mut b = other.free.clone();
        a.sort();
        b.sort();
        let mut c = self.antipodal.clone();
        let mut d = other.antipodal.clone();
        c.sort();
        d.sort();
        a == b && c == d
    }

    pub fn direct_sum(&self, other: &NiceModule) -> NiceModule {
        let mut free = self.free.clone();
        free.extend(other.free.iter().copied());
        let mut antipodal = self.antipodal.clone();
        antipodal.extend(other.antipodal.iter().copied());
        NiceModule { free, antipodal }
    }

    /// Canonical one-line rendering of the summand list, sorted by
    /// (topological degree, weight), with multiplicities.
    pub fn summand_text(&self) -> String {
        #[derive(PartialEq, Eq, PartialOrd, Ord)]
        enum Key {
            Free(i64, i64),
            Anti(i64, u32),
        }
        let mut keys: Vec<(i64, i64, Key)> = Vec::new();
        for s in &self.free {
            keys.push((s.p, s.q, Key::Free(s.p, s.q)));
        }
        for s in &self.antipodal {
            keys.push((s.s, 0, Key::Anti(s.s, s.r)));
        }
        keys.sort();
        if keys.is_empty() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut iter = keys.into_iter().peekable();
        while let Some((_, _, key)) = iter.next() {
            let mut count = 1usize;
            while iter.peek().is_some_and(|(_, _, k)| *k == key) {
                iter.next();
                count += 1;
            }
            let name = match key {
                Key::Free(0, 0) => "M2".to_string(),
                Key::Free(p, q) => format!("S({p},{q})M2"),
                Key::Anti(0, r) => format!("A{r}"),
                Key::Anti(s, r) => format!("S({s},0)A{r}"),
            };
            if count == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{count}*{name}"));
            }
        }
        parts.join(" + ")
    }

    /// ASCII grid of per-cell dimensions over a window, with a legend.
    pub fn render_grid(&self, window: Window) -> Result<String, WindowError> {
        let window = Window::new(window.p_min, window.p_max, window.q_min, window.q_max)?;
        let mut out = String::new();
        out.push_str("  q\\p |");
        for p in window.p_min..=window.p_max {
            out.push_str(&format!("{p:>4}"));
        }
        out.push('\n');
        out.push_str("------+");
        for _ in window.p_min..=window.p_max {
            out.push_str("----");
        }
        out.push('\n');
        for q in (window.q_min..=window.q_max).rev() {
            out.push_str(&format!("{q:>5} |"));
            for p in window.p_min..=window.p_max {
                match self.dim_at(p, q) {
                    0 => out.push_str("   ."),
                    d => out.push_str(&format!("{d:>4}")),
                }
            }
            out.push('\n');
        }
        out.push('\n');
        out.push_str(&format!("H = {}\n", self.summand_text()));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff_ring::{RHO, TAU, THETA};

    fn free(p: i64, q: i64) -> FreeSummand {
        FreeSummand { p, q }
    }

    fn anti(s: i64, r: u32) -> AntipodalSummand {
        AntipodalSummand { s, r }
    }

    #[test]
    fn dims_of_a5() {
        let m = NiceModule::new(vec![], vec![anti(0, 5)]);
        assert_eq!(m.dim_at(3, -4), 1);
        assert_eq!(m.dim_at(6, 0), 0);
        assert_eq!(m.dim_at(5, 100), 1);
    }

    #[test]
    fn dims_of_shifted_free() {
        let m = NiceModule::new(vec![free(2, 2)], vec![]);
        assert_eq!(m.dim_at(2, 2), 1);
        assert_eq!(m.dim_at(3, 2), 0);
    }

    #[test]
    fn dims_of_genus_two_module() {
        let m = NiceModule::new(vec![free(0, 0), free(2, 2)], vec![anti(1, 0), anti(1, 0)]);
        assert_eq!(m.dim_at(1, 1), 3);
        assert_eq!(m.dim_at(0, 0), 1);
        assert_eq!(m.dim_at(2, 2), 2); // ρ² in M2 plus the generator of Σ^{2,2}M2
    }

    #[test]
    fn dim_matches_basis_enumeration() {
        let m = NiceModule::new(
            vec![free(0, 0), free(1, 1), free(2, 1)],
            vec![anti(1, 0), anti(0, 2)],
        );
        for p in -5..=6 {
            for q in -6..=6 {
                assert_eq!(m.dim_at(p, q), m.basis_at(p, q).len(), "at ({p},{q})");
            }
        }
    }

    #[test]
    fn tau_moves_antipodal_generator_up() {
        let m = NiceModule::new(vec![], vec![anti(1, 0)]);
        let gen = m.generator(SummandId::Anti(0));
        let up = m.act(&TAU, &gen);
        assert!(!up.is_zero());
        assert_eq!(m.element_bidegree(&up), Some(Bidegree::new(1, 1)));
    }

    #[test]
    fn rho_kills_a0_generator() {
        let m = NiceModule::new(vec![], vec![anti(0, 0)]);
        let gen = m.generator(SummandId::Anti(0));
        assert!(m.act(&RHO, &gen).is_zero());
    }

    #[test]
    fn theta_detects_free_summands() {
        let m = NiceModule::new(vec![free(1, 1)], vec![anti(0, 3)]);
        let free_gen = m.generator(SummandId::Free(0));
        let hit = m.act(&THETA, &free_gen);
        assert!(!hit.is_zero());
        assert_eq!(m.element_bidegree(&hit), Some(Bidegree::new(1, -1)));
        let anti_gen = m.generator(SummandId::Anti(0));
        assert!(m.act(&THETA, &anti_gen).is_zero());
    }

    #[test]
    fn iso_equal_is_order_independent() {
        let a = NiceModule::new(vec![free(0, 0), free(1, 1)], vec![]);
        let b = NiceModule::new(vec![free(1, 1), free(0, 0)], vec![]);
        assert!(a.iso_equal(&b));

        let a1 = NiceModule::new(vec![], vec![anti(0, 1)]);
        let a00 = NiceModule::new(vec![], vec![anti(0, 0), anti(0, 0)]);
        assert!(!a1.iso_equal(&a00));
        assert_eq!(a1.dim_at(1, 0), 1);
        assert_eq!(a00.dim_at(1, 0), 0);
    }

    #[test]
    fn weight_normalization_of_antipodal_shifts() {
        let a = NiceModule::with_shifted_antipodal(vec![], vec![(1, 0, 1)]);
        let b = NiceModule::with_shifted_antipodal(vec![], vec![(1, 1, 1)]);
        assert!(a.iso_equal(&b));
    }

    #[test]
    fn rho_ranks() {
        let m2 = NiceModule::new(vec![free(0, 0)], vec![]);
        assert_eq!(m2.rho_rank_at(0, 0), 1);

        let a0 = NiceModule::new(vec![], vec![anti(0, 0)]);
        for q in -3..=3 {
            assert_eq!(a0.rho_rank_at(0, q), 0);
        }

        let a2 = NiceModule::new(vec![], vec![anti(0, 2)]);
        for q in -3..=3 {
            assert_eq!(a2.rho_rank_at(1, q), 1);
        }
    }

    #[test]
    fn tau_ranks() {
        let m2 = NiceModule::new(vec![free(0, 0)], vec![]);
        assert_eq!(m2.tau_rank_at(0, 0), 1);
        assert_eq!(m2.tau_rank_at(0, -2), 0); // τθ = 0

        // τ is a bijection whenever q ≥ p.
        let m = NiceModule::new(vec![free(1, 1), free(2, 1)], vec![anti(1, 2)]);
        for p in -2..=5 {
            for q in p..=(p + 6) {
                let d = m.dim_at(p, q);
                assert_eq!(m.tau_rank_at(p, q), d, "τ not injective at ({p},{q})");
                assert_eq!(m.dim_at(p, q + 1), d, "τ not surjective at ({p},{q})");
            }
        }
    }

    #[test]
    fn antipodal_dimension_is_weight_independent() {
        let m = NiceModule::new(vec![], vec![anti(0, 1), anti(1, 0), anti(2, 3)]);
        for p in -2..=6 {
            for q in -4..=4 {
                assert_eq!(m.dim_at(p, q), m.dim_at(p, q + 17));
            }
        }
    }

    #[test]
    fn scalar_actions_commute() {
        let m = NiceModule::new(vec![free(1, 0)], vec![anti(0, 2)]);
        for p in -1..=3 {
            for q in -3..=3 {
                for (id, mono) in m.basis_at(p, q) {
                    let x = m.element_from_basis(id, mono);
                    let rt = m.act(&RHO, &m.act(&TAU, &x));
                    let tr = m.act(&TAU, &m.act(&RHO, &x));
                    assert_eq!(rt, tr);
                }
            }
        }
    }

    #[test]
    fn twisted_action_inverts_tau_on_antipodal_and_bottom() {
        let m = NiceModule::new(vec![free(0, 0)], vec![anti(0, 1)]);
        let anti_gen = m.generator(SummandId::Anti(0));
        let down = m.act_twisted(0, -3, &anti_gen).unwrap();
        assert_eq!(m.element_bidegree(&down), Some(Bidegree::new(0, -3)));

        let theta_elt = m.act(&THETA, &m.generator(SummandId::Free(0)));
        let divided = m.act_twisted(0, -2, &theta_elt).unwrap();
        assert_eq!(m.element_bidegree(&divided), Some(Bidegree::new(0, -4)));

        let top = m.generator(SummandId::Free(0));
        assert!(m.act_twisted(0, -1, &top).is_err());
    }

    #[test]
    fn summand_text_format() {
        let m = NiceModule::new(vec![free(0, 0), free(2, 2)], vec![anti(1, 0), anti(1, 0)]);
        assert_eq!(m.summand_text(), "M2 + 2*S(1,0)A0 + S(2,2)M2");
        let a2 = NiceModule::new(vec![], vec![anti(0, 2)]);
        assert_eq!(a2.summand_text(), "A2");
    }

    #[test]
    fn grid_rejects_inverted_window() {
        let m = NiceModule::new(vec![free(0, 0)], vec![]);
        assert!(Window::new(2, -2, 0, 1).is_err());
        let w = Window::new(-2, 2, -2, 2).unwrap();
        let grid = m.render_grid(w).unwrap();
        assert!(grid.contains("H = M2"));
    }

    #[test]
    fn a0_grid_is_a_column_of_ones() {
        let m = NiceModule::new(vec![], vec![anti(0, 0)]);
        for q in -3..=3 {
            assert_eq!(m.dim_at(0, q), 1);
            assert_eq!(m.dim_at(1, q), 0);
        }
    }

    #[test]
    fn json_shape() {
        let m = NiceModule::new(vec![free(1, 1)], vec![anti(1, 0)]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"free":[{"p":1,"q":1}],"antipodal":[{"s":1,"r":0}]}"#);
        let back: NiceModule = serde_json::from_str(&json).unwrap();
        assert!(back.iso_equal(&m));
    }
}
