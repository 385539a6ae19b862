//! Exact arithmetic in the coefficient ring `M2` and in the antipodal
//! coefficient rings `Λ_r`.
//!
//! `M2` is the bigraded cohomology of a point. It is a trivial square-zero
//! extension: a polynomial "top cone" `Z/2[ρ, τ]` with `|ρ| = (1,1)` and
//! `|τ| = (0,1)`, together with a "bottom cone" spanned by classes
//! `θ/(ρ^a τ^b)` sitting under bidegree `(0,-2)`. The element `θ` is divisible
//! by every nonzero element of the top cone, and any two bottom-cone elements
//! multiply to zero.
//!
//! `Λ_r = τ⁻¹M2/(ρ^{r+1})` is the coefficient ring acting on the generators of
//! an antipodal summand `A_r`: monomials `ρ^a τ^b` with `0 ≤ a ≤ r` and `b`
//! any integer.
//!
//! Elements are sets of monomials; coefficients live in `Z/2`, so addition is
//! symmetric difference and a monomial is present or absent.

use crate::Bidegree;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A monomial of `M2`.
///
/// `Top { rho, tau }` is `ρ^rho τ^tau` in the polynomial cone. `Bot { rho,
/// tau }` is the divided class `θ/(ρ^rho τ^tau)`; storing the divisor
/// exponents keeps the divisibility-gated multiplication rule explicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum M2Monomial {
    Top { rho: u32, tau: u32 },
    Bot { rho: u32, tau: u32 },
}

pub const RHO: M2Monomial = M2Monomial::Top { rho: 1, tau: 0 };
pub const TAU: M2Monomial = M2Monomial::Top { rho: 0, tau: 1 };
pub const THETA: M2Monomial = M2Monomial::Bot { rho: 0, tau: 0 };

impl M2Monomial {
    pub fn one() -> Self {
        M2Monomial::Top { rho: 0, tau: 0 }
    }

    pub fn top(rho: u32, tau: u32) -> Self {
        M2Monomial::Top { rho, tau }
    }

    pub fn bot(rho: u32, tau: u32) -> Self {
        M2Monomial::Bot { rho, tau }
    }

    pub fn bidegree(&self) -> Bidegree {
        match *self {
            M2Monomial::Top { rho, tau } => Bidegree::new(rho as i64, rho as i64 + tau as i64),
            M2Monomial::Bot { rho, tau } => {
                Bidegree::new(-(rho as i64), -2 - rho as i64 - tau as i64)
            }
        }
    }

    /// Product of two monomials; `None` is zero.
    ///
    /// Top cone times top cone adds exponents. A top monomial divides into a
    /// bottom monomial only when the divisor has room for it; everything else
    /// is zero, including all products of two bottom-cone classes.
    pub fn mul(&self, other: &M2Monomial) -> Option<M2Monomial> {
        use M2Monomial::*;
        match (*self, *other) {
            (Top { rho: a, tau: b }, Top { rho: c, tau: d }) => {
                Some(Top { rho: a + c, tau: b + d })
            }
            (Top { rho: c, tau: d }, Bot { rho: a, tau: b })
            | (Bot { rho: a, tau: b }, Top { rho: c, tau: d }) => {
                if a >= c && b >= d {
                    Some(Bot { rho: a - c, tau: b - d })
                } else {
                    None
                }
            }
            (Bot { .. }, Bot { .. }) => None,
        }
    }

    /// The image under the forgetful map to singular cohomology: `τ^b` maps
    /// to `1`, everything else to `0`.
    pub fn forgets_to_one(&self) -> bool {
        matches!(self, M2Monomial::Top { rho: 0, .. })
    }

    /// The unique monomial in bidegree `(p,q)` if the spot is nonzero.
    pub fn at_bidegree(p: i64, q: i64) -> Option<M2Monomial> {
        if p >= 0 && q >= p {
            Some(M2Monomial::top(p as u32, (q - p) as u32))
        } else if p <= 0 && q <= p - 2 {
            Some(M2Monomial::bot((-p) as u32, (p - q - 2) as u32))
        } else {
            None
        }
    }
}

/// Dimension of `M2` in bidegree `(p,q)`: 1 on the two cones, 0 elsewhere.
pub fn m2_dim_at(p: i64, q: i64) -> usize {
    usize::from((0 <= p && p <= q) || (p <= 0 && q <= p - 2))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("mismatched torsion bounds: Λ_{0} vs Λ_{1}")]
    TorsionMismatch(u32, u32),
}

/// A general element of `M2`: a finite `Z/2`-sum of monomials, possibly of
/// mixed bidegrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct M2Elt {
    monomials: BTreeSet<M2Monomial>,
}

impl M2Elt {
    pub fn zero() -> Self {
        M2Elt::default()
    }

    pub fn one() -> Self {
        M2Elt::from(M2Monomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M2Monomial> {
        self.monomials.iter()
    }

    pub fn toggle(&mut self, m: M2Monomial) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    /// Every monomial shares one bidegree (vacuously true for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.monomials.iter().map(|m| m.bidegree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Bidegree of a homogeneous nonzero element.
    pub fn bidegree(&self) -> Option<Bidegree> {
        if !self.is_homogeneous() {
            return None;
        }
        self.monomials.iter().next().map(|m| m.bidegree())
    }

    /// Image under the forgetful map, extended `Z/2`-linearly.
    pub fn forget(&self) -> Result<bool, CoeffError> {
        if !self.is_homogeneous() {
            return Err(CoeffError::NotHomogeneous);
        }
        let count = self.monomials.iter().filter(|m| m.forgets_to_one()).count();
        Ok(count % 2 == 1)
    }
}

impl From<M2Monomial> for M2Elt {
    fn from(m: M2Monomial) -> Self {
        M2Elt { monomials: [m].into_iter().collect() }
    }
}

impl FromIterator<M2Monomial> for M2Elt {
    fn from_iter<I: IntoIterator<Item = M2Monomial>>(iter: I) -> Self {
        let mut out = M2Elt::zero();
        for m in iter {
            out.toggle(m);
        }
        out
    }
}

impl std::ops::Add for &M2Elt {
    type Output = M2Elt;
    fn add(self, rhs: &M2Elt) -> M2Elt {
        let mut out = self.clone();
        for m in rhs.monomials() {
            out.toggle(*m);
        }
        out
    }
}

impl std::ops::Mul for &M2Elt {
    type Output = M2Elt;
    fn mul(self, rhs: &M2Elt) -> M2Elt {
        let mut out = M2Elt::zero();
        for a in self.monomials() {
            for b in rhs.monomials() {
                if let Some(c) = a.mul(b) {
                    out.toggle(c);
                }
            }
        }
        out
    }
}

/// Multiplication in `M2`.
pub fn m2_mul(x: &M2Elt, y: &M2Elt) -> M2Elt {
    x * y
}

/// A monomial `ρ^rho τ^tau` of `Λ_r`; the τ-exponent may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LambdaMonomial {
    pub rho: u32,
    pub tau: i64,
}

impl LambdaMonomial {
    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.rho as i64, self.rho as i64 + self.tau)
    }

    pub fn forgets_to_one(&self) -> bool {
        self.rho == 0
    }
}

/// An element of `Λ_r = τ⁻¹M2/(ρ^{r+1})`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambdaElt {
    r: u32,
    monomials: BTreeSet<LambdaMonomial>,
}

impl LambdaElt {
    pub fn zero(r: u32) -> Self {
        LambdaElt { r, monomials: BTreeSet::new() }
    }

    pub fn one(r: u32) -> Self {
        LambdaElt::monomial(r, 0, 0)
    }

    /// The single monomial `ρ^rho τ^tau`, truncated to zero when `rho > r`.
    pub fn monomial(r: u32, rho: u32, tau: i64) -> Self {
        let mut out = LambdaElt::zero(r);
        if rho <= r {
            out.monomials.insert(LambdaMonomial { rho, tau });
        }
        out
    }

    pub fn torsion_bound(&self) -> u32 {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &LambdaMonomial> {
        self.monomials.iter()
    }

    pub fn toggle(&mut self, m: LambdaMonomial) {
        if m.rho > self.r {
            return;
        }
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.monomials.iter().map(|m| m.bidegree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn bidegree(&self) -> Option<Bidegree> {
        if !self.is_homogeneous() {
            return None;
        }
        self.monomials.iter().next().map(|m| m.bidegree())
    }

    pub fn forget(&self) -> Result<bool, CoeffError> {
        if !self.is_homogeneous() {
            return Err(CoeffError::NotHomogeneous);
        }
        let count = self.monomials.iter().filter(|m| m.forgets_to_one()).count();
        Ok(count % 2 == 1)
    }

    /// Multiplication by the formal monomial `ρ^rho τ^tau` with `tau` of
    /// either sign (τ acts invertibly on `Λ_r`).
    pub fn twist(&self, rho: u32, tau: i64) -> LambdaElt {
        let mut out = LambdaElt::zero(self.r);
        for m in self.monomials() {
            out.toggle(LambdaMonomial { rho: m.rho + rho, tau: m.tau + tau });
        }
        out
    }
}

/// Multiplication in `Λ_r`; the torsion bounds must agree.
pub fn lambda_mul(x: &LambdaElt, y: &LambdaElt) -> Result<LambdaElt, CoeffError> {
    if x.r != y.r {
        return Err(CoeffError::TorsionMismatch(x.r, y.r));
    }
    let mut out = LambdaElt::zero(x.r);
    for a in x.monomials() {
        for b in y.monomials() {
            out.toggle(LambdaMonomial { rho: a.rho + b.rho, tau: a.tau + b.tau });
        }
    }
    Ok(out)
}

/// The action of an `M2` scalar on `Λ_r`: top-cone monomials multiply in,
/// the bottom cone acts as zero (θ only detects free summands).
pub fn m2_act_on_lambda(s: &M2Monomial, x: &LambdaElt) -> LambdaElt {
    match *s {
        M2Monomial::Top { rho, tau } => x.twist(rho, tau as i64),
        M2Monomial::Bot { .. } => LambdaElt::zero(x.r),
    }
}

/// Forgetful image of a homogeneous coefficient; `ψ(θ) = 0` is not stated
/// anywhere but is forced by exactness of the forgetful sequence, since
/// `θ = ρ·(θ/ρ)` lies in the image of `ρ`.
pub fn forget_scalar_m2(x: &M2Elt) -> Result<bool, CoeffError> {
    x.forget()
}

pub fn forget_scalar_lambda(x: &LambdaElt) -> Result<bool, CoeffError> {
    x.forget()
}

// ---------------------------------------------------------------------------
// Canonical text form: "rho^a tau^b", "theta/(rho^a tau^b)", "0", "1",
// sums joined by " + ". The same grammar parses back for test fixtures.
// ---------------------------------------------------------------------------

fn render_powers(rho: u32, tau: u32) -> String {
    let mut parts = Vec::new();
    match rho {
        0 => {}
        1 => parts.push("rho".to_string()),
        a => parts.push(format!("rho^{a}")),
    }
    match tau {
        0 => {}
        1 => parts.push("tau".to_string()),
        b => parts.push(format!("tau^{b}")),
    }
    parts.join(" ")
}

impl std::fmt::Display for M2Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            M2Monomial::Top { rho: 0, tau: 0 } => write!(f, "1"),
            M2Monomial::Top { rho, tau } => write!(f, "{}", render_powers(rho, tau)),
            M2Monomial::Bot { rho: 0, tau: 0 } => write!(f, "theta"),
            M2Monomial::Bot { rho, tau } => write!(f, "theta/({})", render_powers(rho, tau)),
        }
    }
}

impl std::fmt::Display for M2Elt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.monomials().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl std::fmt::Display for LambdaMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.rho {
            0 => {}
            1 => parts.push("rho".to_string()),
            a => parts.push(format!("rho^{a}")),
        }
        match self.tau {
            0 => {}
            1 => parts.push("tau".to_string()),
            b => parts.push(format!("tau^{b}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl std::fmt::Display for LambdaElt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.monomials().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("scalar parse error at byte {pos}: {message}")]
pub struct ScalarParseError {
    pub pos: usize,
    pub message: String,
}

/// Parses the canonical `M2` text form.
pub fn parse_m2(input: &str) -> Result<M2Elt, ScalarParseError> {
    let mut out = M2Elt::zero();
    let trimmed = input.trim();
    if trimmed == "0" {
        return Ok(out);
    }
    let mut offset = 0;
    for chunk in trimmed.split('+') {
        let m = parse_m2_monomial(chunk.trim(), offset)?;
        out.toggle(m);
        offset += chunk.len() + 1;
    }
    Ok(out)
}

fn parse_m2_monomial(text: &str, pos: usize) -> Result<M2Monomial, ScalarParseError> {
    let err = |message: &str| ScalarParseError { pos, message: message.to_string() };
    if text == "1" {
        return Ok(M2Monomial::one());
    }
    if text == "theta" {
        return Ok(THETA);
    }
    if let Some(rest) = text.strip_prefix("theta/(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| err("expected closing ')'"))?;
        let (rho, tau) = parse_power_product(inner, pos)?;
        return Ok(M2Monomial::bot(rho, tau));
    }
    let (rho, tau) = parse_power_product(text, pos)?;
    Ok(M2Monomial::top(rho, tau))
}

fn parse_power_product(text: &str, pos: usize) -> Result<(u32, u32), ScalarParseError> {
    let err = |message: String| ScalarParseError { pos, message };
    let mut rho = 0u32;
    let mut tau = 0u32;
    for factor in text.split_whitespace() {
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let exp: u32 = e
                    .parse()
                    .map_err(|_| err(format!("bad exponent {e:?} in {factor:?}")))?;
                (n, exp)
            }
            None => (factor, 1),
        };
        match name {
            "rho" => rho += exp,
            "tau" => tau += exp,
            other => return Err(err(format!("unknown factor {other:?}"))),
        }
    }
    Ok((rho, tau))
}
