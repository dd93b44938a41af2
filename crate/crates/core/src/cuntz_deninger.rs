//! Truncated Cuntz–Deninger objects.
//!
//! `X_n(A) ⊂ A^n` is the subgroup generated by `V^m(⟨a_1⟩⋯⟨a_r⟩)` where
//! `⟨a⟩ = (a, a^p, a^{p^2}, …)`, the product is coordinatewise and
//! `V(v_0, v_1, …) = p·(0, v_0, v_1, …)`. Elements are carried together
//! with the integer combination of generators that produced them, which
//! serves as a membership certificate.
//!
//! `E_n(A)` is modelled only through symbols over the monoid algebra `ℤA`
//! and their image under `η̄`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{CoefficientRing, FreePoly, GeneratorSet};
use crate::error::{Error, Result};
use crate::ghost::{ghost_components, GhostVector};
use crate::prime::Prime;

/// `(a, a^p, …, a^{p^{n-1}})`.
pub fn cd_teichmuller(a: &FreePoly, n: usize, p: Prime) -> Vec<FreePoly> {
    let mut out = Vec::with_capacity(n);
    let mut power = a.clone();
    for k in 0..n {
        if k > 0 {
            power = power.pow(p.get());
        }
        out.push(power.clone());
    }
    out
}

/// `V(v) = p·(0, v_0, …, v_{n-2})`, same length as `v`.
pub fn cd_verschiebung(v: &[FreePoly], p: Prime) -> Vec<FreePoly> {
    let Some(first) = v.first() else {
        return Vec::new();
    };
    let scalar = p.to_bigint();
    std::iter::once(FreePoly::zero(first.gens(), first.ring()))
        .chain(v[..v.len() - 1].iter().map(|a| a.scale(&scalar)))
        .collect()
}

fn mul_coordinatewise(a: &[FreePoly], b: &[FreePoly]) -> Result<Vec<FreePoly>> {
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

fn check_factors(factors: &[FreePoly]) -> Result<()> {
    let Some(first) = factors.first() else {
        return Err(Error::Invariant("a Teichmüller product needs at least one factor".into()));
    };
    for f in &factors[1..] {
        first.gens().check_same(f.gens())?;
        first.ring().check_same(f.ring())?;
    }
    Ok(())
}

/// The generator `V^m(⟨a_1⟩⋯⟨a_r⟩)` of `X(A)`, with `r ≥ 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TeichWitness {
    shift: usize,
    factors: Vec<FreePoly>,
}

impl TeichWitness {
    pub fn new(shift: usize, factors: Vec<FreePoly>) -> Result<Self> {
        check_factors(&factors)?;
        Ok(TeichWitness { shift, factors })
    }

    /// `⟨a⟩`.
    pub fn teichmuller(a: FreePoly) -> Self {
        TeichWitness { shift: 0, factors: vec![a] }
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn factors(&self) -> &[FreePoly] {
        &self.factors
    }

    pub fn verschiebung(&self) -> TeichWitness {
        TeichWitness { shift: self.shift + 1, factors: self.factors.clone() }
    }

    /// Coordinatewise product of two generators, rewritten as
    /// `p^{min(m,k)} · V^{max(m,k)}(…)`: the factors on the less shifted
    /// side are raised to `p^{|m-k|}`, left factors stay on the left.
    pub fn mul(&self, other: &TeichWitness, p: Prime) -> Result<(BigInt, TeichWitness)> {
        let (scalar, shift, factors) =
            multiply_witnesses(self.shift, &self.factors, other.shift, &other.factors, p, |a, e| {
                a.pow(e)
            });
        check_factors(&factors)?;
        Ok((scalar, TeichWitness { shift, factors }))
    }
}

fn multiply_witnesses<T: Clone>(
    m: usize,
    left: &[T],
    k: usize,
    right: &[T],
    p: Prime,
    pow: impl Fn(&T, u64) -> T,
) -> (BigInt, usize, Vec<T>) {
    let lift = |fs: &[T], e: usize| -> Vec<T> {
        if e == 0 {
            fs.to_vec()
        } else {
            fs.iter().map(|a| pow(a, p.pow_u64(e))).collect()
        }
    };
    let (low, high) = (m.min(k), m.max(k));
    let mut factors = lift(left, high - m);
    factors.extend(lift(right, high - k));
    (p.pow_big(low), high, factors)
}

impl fmt::Debug for TeichWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V^{}(", self.shift)?;
        for a in &self.factors {
            write!(f, "<{a}>")?;
        }
        write!(f, ")")
    }
}

/// Coordinates of `V^m(⟨a_1⟩⋯⟨a_r⟩)` in `A^n`: zero below `m`, and
/// `p^m · a_1^{p^{k-m}}⋯a_r^{p^{k-m}}` at `k ≥ m`.
pub fn realize(w: &TeichWitness, n: usize, p: Prime) -> Vec<FreePoly> {
    let first = &w.factors[0];
    let zero = FreePoly::zero(first.gens(), first.ring());
    let live = n.saturating_sub(w.shift);
    let mut product = cd_teichmuller(first, live, p);
    for a in &w.factors[1..] {
        product = mul_coordinatewise(&product, &cd_teichmuller(a, live, p))
            .expect("factors share ring and generators");
    }
    let scalar = p.pow_big(w.shift);
    let mut out = vec![zero; n - live];
    out.extend(product.iter().map(|c| c.scale(&scalar)));
    out
}

/// An element of `X_n(A)` with its certificate: an integer combination of
/// generators whose realizations sum to `realized`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XElement {
    prime: Prime,
    n: usize,
    combo: BTreeMap<TeichWitness, BigInt>,
    realized: Vec<FreePoly>,
}

impl XElement {
    pub fn zero(prime: Prime, n: usize, gens: &GeneratorSet, ring: &CoefficientRing) -> Self {
        XElement {
            prime,
            n,
            combo: BTreeMap::new(),
            realized: vec![FreePoly::zero(gens, ring); n],
        }
    }

    /// The realization of a single generator.
    pub fn generator(w: TeichWitness, n: usize, prime: Prime) -> Self {
        let first = &w.factors[0];
        let mut x = XElement::zero(prime, n, first.gens(), first.ring());
        x.realized = realize(&w, n, prime);
        x.combo.insert(w, BigInt::from(1));
        x
    }

    /// Sums `coeff · realize(witness)` over the combination.
    pub fn from_combo<I>(
        prime: Prime,
        n: usize,
        gens: &GeneratorSet,
        ring: &CoefficientRing,
        combo: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (TeichWitness, BigInt)>,
    {
        let mut x = XElement::zero(prime, n, gens, ring);
        for (w, c) in combo {
            let first = &w.factors[0];
            gens.check_same(first.gens())?;
            ring.check_same(first.ring())?;
            x.add_term(w, c)?;
        }
        Ok(x)
    }

    fn add_term(&mut self, w: TeichWitness, c: BigInt) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let coords = realize(&w, self.n, self.prime);
        for (slot, v) in self.realized.iter_mut().zip(&coords) {
            *slot = slot.add(&v.scale(&c))?;
        }
        let entry = self.combo.entry(w).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.combo.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn combo(&self) -> &BTreeMap<TeichWitness, BigInt> {
        &self.combo
    }

    pub fn realized(&self) -> &[FreePoly] {
        &self.realized
    }

    /// Recomputes the realization from the certificate.
    pub fn verify(&self) -> bool {
        let Some(first) = self.realized.first() else {
            return true;
        };
        match XElement::from_combo(
            self.prime,
            self.n,
            first.gens(),
            first.ring(),
            self.combo.iter().map(|(w, c)| (w.clone(), c.clone())),
        ) {
            Ok(x) => x.realized == self.realized,
            Err(_) => false,
        }
    }

    fn check_compatible(&self, other: &XElement) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch { left: self.prime.get(), right: other.prime.get() });
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &XElement) -> Result<XElement> {
        self.check_compatible(other)?;
        let mut x = self.clone();
        for (w, c) in &other.combo {
            x.add_term(w.clone(), c.clone())?;
        }
        Ok(x)
    }

    pub fn scale(&self, c: &BigInt) -> XElement {
        if c.is_zero() {
            let first = &self.realized;
            let mut x = self.clone();
            x.combo.clear();
            x.realized = first.iter().map(|v| FreePoly::zero(v.gens(), v.ring())).collect();
            return x;
        }
        XElement {
            prime: self.prime,
            n: self.n,
            combo: self.combo.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
            realized: self.realized.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Product in the ring `X_n(A)`; the certificate is rebuilt from
    /// pairwise generator products.
    pub fn mul(&self, other: &XElement) -> Result<XElement> {
        self.check_compatible(other)?;
        let first = &self.realized[0];
        let mut x = XElement::zero(self.prime, self.n, first.gens(), first.ring());
        for (u, a) in &self.combo {
            for (v, b) in &other.combo {
                let (s, w) = u.mul(v, self.prime)?;
                x.add_term(w, s * a * b)?;
            }
        }
        Ok(x)
    }

    pub fn verschiebung(&self) -> XElement {
        XElement {
            prime: self.prime,
            n: self.n,
            combo: self.combo.iter().map(|(w, c)| (w.verschiebung(), c.clone())).collect(),
            realized: cd_verschiebung(&self.realized, self.prime),
        }
    }

    /// `γ̄` of the realized vector.
    pub fn gamma_bar(&self) -> Result<GhostVector> {
        gamma_bar(&self.realized, self.prime)
    }
}

/// `Ω(a) = (ω_0(a), ω_1(a), …)` as an element of `X_n(A)`, certified by
/// `Σ_i V^i⟨a_i⟩`.
pub fn omega_embed(coords: &[FreePoly], p: Prime) -> Result<XElement> {
    let Some(first) = coords.first() else {
        return Err(Error::TruncationTooSmall { min: 1, got: 0 });
    };
    let combo = coords
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| (TeichWitness { shift: i, factors: vec![a.clone()] }, BigInt::from(1)));
    let x = XElement::from_combo(p, coords.len(), first.gens(), first.ring(), combo)?;
    let ghost = ghost_components(coords, p)?;
    if x.realized != ghost {
        return Err(Error::Invariant("Ω certificate does not realize the ghost components".into()));
    }
    Ok(x)
}

/// `γ̄`: project each coordinate to the commutator quotient.
pub fn gamma_bar(v: &[FreePoly], p: Prime) -> Result<GhostVector> {
    GhostVector::project(p, v)
}

/// A basis symbol `[r]` of the monoid algebra `ℤA`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bracket(FreePoly);

impl Bracket {
    pub fn new(r: FreePoly) -> Self {
        Bracket(r)
    }

    /// `π([r]) = r`.
    pub fn value(&self) -> &FreePoly {
        &self.0
    }

    /// `[r]^e = [r^e]` in `ℤA`.
    pub fn pow(&self, e: u64) -> Bracket {
        Bracket(self.0.pow(e))
    }
}

impl fmt::Debug for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

/// `V^m(⟨[r_1]⟩⋯⟨[r_k]⟩)` in `X(ℤA)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketWitness {
    shift: usize,
    brackets: Vec<Bracket>,
}

impl BracketWitness {
    pub fn new(shift: usize, brackets: Vec<Bracket>) -> Result<Self> {
        let values: Vec<FreePoly> = brackets.iter().map(|b| b.0.clone()).collect();
        check_factors(&values)?;
        Ok(BracketWitness { shift, brackets })
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn brackets(&self) -> &[Bracket] {
        &self.brackets
    }

    /// Image under `ℤA → A`, bracket by bracket.
    pub fn project_pi(&self) -> TeichWitness {
        TeichWitness {
            shift: self.shift,
            factors: self.brackets.iter().map(|b| b.0.clone()).collect(),
        }
    }
}

/// A symbol for an element of `E_n(A) = X_n(ℤA)/X_n(I)`: an integer
/// combination of bracket witnesses. Only its `η̄`-image is computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ESymbol {
    prime: Prime,
    n: usize,
    gens: GeneratorSet,
    ring: CoefficientRing,
    combo: BTreeMap<BracketWitness, BigInt>,
}

impl ESymbol {
    pub fn zero(prime: Prime, n: usize, gens: &GeneratorSet, ring: &CoefficientRing) -> Self {
        ESymbol { prime, n, gens: gens.clone(), ring: ring.clone(), combo: BTreeMap::new() }
    }

    /// `⟨[r]⟩`.
    pub fn teichmuller(r: &FreePoly, n: usize, prime: Prime) -> Self {
        Self::from_witness(BracketWitness { shift: 0, brackets: vec![Bracket(r.clone())] }, n, prime)
    }

    pub fn from_witness(w: BracketWitness, n: usize, prime: Prime) -> Self {
        let first = w.brackets[0].value();
        let mut e = ESymbol::zero(prime, n, first.gens(), first.ring());
        e.combo.insert(w, BigInt::from(1));
        e
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn combo(&self) -> &BTreeMap<BracketWitness, BigInt> {
        &self.combo
    }

    fn check_compatible(&self, other: &ESymbol) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch { left: self.prime.get(), right: other.prime.get() });
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        self.gens.check_same(&other.gens)?;
        self.ring.check_same(&other.ring)
    }

    fn insert(&mut self, w: BracketWitness, c: BigInt) {
        let entry = self.combo.entry(w).or_insert_with(BigInt::zero);
        *entry += c;
        self.combo.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &ESymbol) -> Result<ESymbol> {
        self.check_compatible(other)?;
        let mut e = self.clone();
        for (w, c) in &other.combo {
            e.insert(w.clone(), c.clone());
        }
        Ok(e)
    }

    pub fn scale(&self, c: &BigInt) -> ESymbol {
        let mut e = ESymbol::zero(self.prime, self.n, &self.gens, &self.ring);
        for (w, a) in &self.combo {
            e.insert(w.clone(), a * c);
        }
        e
    }

    /// Product at the witness level; `⟨[a]⟩⟨[b]⟩` keeps both brackets.
    pub fn mul(&self, other: &ESymbol) -> Result<ESymbol> {
        self.check_compatible(other)?;
        let mut e = ESymbol::zero(self.prime, self.n, &self.gens, &self.ring);
        for (u, a) in &self.combo {
            for (v, b) in &other.combo {
                let (s, shift, brackets) = multiply_witnesses(
                    u.shift,
                    &u.brackets,
                    v.shift,
                    &v.brackets,
                    self.prime,
                    Bracket::pow,
                );
                e.insert(BracketWitness { shift, brackets }, s * a * b);
            }
        }
        Ok(e)
    }

    pub fn verschiebung(&self) -> ESymbol {
        let mut e = ESymbol::zero(self.prime, self.n, &self.gens, &self.ring);
        for (w, c) in &self.combo {
            e.insert(BracketWitness { shift: w.shift + 1, brackets: w.brackets.clone() }, c.clone());
        }
        e
    }

    /// The `π`-image in `X_n(A)` with its certificate.
    pub fn project_pi(&self) -> Result<XElement> {
        XElement::from_combo(
            self.prime,
            self.n,
            &self.gens,
            &self.ring,
            self.combo.iter().map(|(w, c)| (w.project_pi(), c.clone())),
        )
    }
}

/// `η̄ = γ̄ ∘ π`.
pub fn eta_bar(e: &ESymbol) -> Result<GhostVector> {
    e.project_pi()?.gamma_bar()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse;
    use crate::ghost::ghost_map;

    fn z(text: &str) -> FreePoly {
        parse(text, &GeneratorSet::xy(), &CoefficientRing::Integers).unwrap()
    }

    fn zs(texts: &[&str]) -> Vec<FreePoly> {
        texts.iter().map(|t| z(t)).collect()
    }

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn necklaces(prime: u64, texts: &[&str]) -> GhostVector {
        GhostVector::project(p(prime), &zs(texts)).unwrap()
    }

    fn witness(shift: usize, factors: &[&str]) -> TeichWitness {
        TeichWitness::new(shift, zs(factors)).unwrap()
    }

    #[test]
    fn teichmuller_vectors() {
        assert_eq!(cd_teichmuller(&z("X"), 3, p(2)), zs(&["X", "X*X", "X*X*X*X"]));
        assert_eq!(cd_teichmuller(&z("1"), 4, p(5)), zs(&["1", "1", "1", "1"]));
        assert_eq!(
            cd_teichmuller(&z("X+Y"), 2, p(2)),
            zs(&["X+Y", "X*X + X*Y + Y*X + Y*Y"])
        );
    }

    #[test]
    fn verschiebung_vectors() {
        assert_eq!(cd_verschiebung(&zs(&["X", "Y", "X*Y"]), p(3)), zs(&["0", "3*X", "3*Y"]));
        assert_eq!(cd_verschiebung(&zs(&["0", "0"]), p(3)), zs(&["0", "0"]));
        let twice = cd_verschiebung(&cd_verschiebung(&zs(&["X", "0", "0"]), p(2)), p(2));
        assert_eq!(twice, zs(&["0", "0", "4*X"]));
        assert!(cd_verschiebung(&[], p(2)).is_empty());
    }

    #[test]
    fn realize_examples() {
        assert_eq!(realize(&witness(0, &["X", "Y"]), 2, p(2)), zs(&["X*Y", "X*X*Y*Y"]));
        assert_eq!(realize(&witness(1, &["X"]), 3, p(2)), zs(&["0", "2*X", "2*X*X"]));
        assert_eq!(realize(&witness(0, &["X"]), 3, p(3)), cd_teichmuller(&z("X"), 3, p(3)));
        assert_eq!(realize(&witness(5, &["X"]), 3, p(3)), zs(&["0", "0", "0"]));
    }

    #[test]
    fn realize_is_shift_of_product() {
        let w = witness(2, &["X+Y", "Y"]);
        let prime = p(2);
        let mut v = mul_coordinatewise(
            &cd_teichmuller(&z("X+Y"), 4, prime),
            &cd_teichmuller(&z("Y"), 4, prime),
        )
        .unwrap();
        for _ in 0..2 {
            v = cd_verschiebung(&v, prime);
        }
        assert_eq!(realize(&w, 4, prime), v);
    }

    #[test]
    fn omega_embed_examples() {
        let x = omega_embed(&zs(&["X"]), p(3)).unwrap();
        assert_eq!(x.realized(), zs(&["X"]).as_slice());
        assert_eq!(x.combo().len(), 1);

        let x = omega_embed(&zs(&["X", "Y"]), p(2)).unwrap();
        let want: BTreeMap<_, _> =
            [(witness(0, &["X"]), BigInt::from(1)), (witness(1, &["Y"]), BigInt::from(1))].into();
        assert_eq!(x.combo(), &want);
        assert_eq!(x.realized(), zs(&["X", "X*X + 2*Y"]).as_slice());
        assert!(x.verify());

        let x = omega_embed(&zs(&["0", "X*Y"]), p(5)).unwrap();
        assert_eq!(x.combo().keys().collect::<Vec<_>>(), vec![&witness(1, &["X*Y"])]);
        assert_eq!(x.realized(), zs(&["0", "5*X*Y"]).as_slice());
    }

    #[test]
    fn gamma_bar_examples() {
        let g = gamma_bar(&cd_teichmuller(&z("X*Y"), 2, p(2)), p(2)).unwrap();
        assert_eq!(g, necklaces(2, &["X*Y", "X*Y*X*Y"]));
        let g = gamma_bar(&realize(&witness(0, &["X", "Y"]), 2, p(2)), p(2)).unwrap();
        assert_eq!(g, necklaces(2, &["X*Y", "X*X*Y*Y"]));
        assert!(gamma_bar(&zs(&["0", "0"]), p(2)).unwrap().is_zero());
    }

    #[test]
    fn eta_bar_examples() {
        for prime in [2u64, 3, 5] {
            let pr = p(prime);
            let e = ESymbol::teichmuller(&z("X"), 3, pr)
                .mul(&ESymbol::teichmuller(&z("Y"), 3, pr))
                .unwrap();
            let q = prime * prime;
            let want = necklaces(
                prime,
                &["X*Y", &format!("X^{prime}*Y^{prime}"), &format!("X^{q}*Y^{q}")],
            );
            assert_eq!(eta_bar(&e).unwrap(), want);
        }
        let one = ESymbol::teichmuller(&z("1"), 3, p(3));
        assert_eq!(eta_bar(&one).unwrap(), necklaces(3, &["1", "1", "1"]));
        let vx = ESymbol::teichmuller(&z("X"), 2, p(2)).verschiebung();
        assert_eq!(eta_bar(&vx).unwrap(), necklaces(2, &["0", "2*X"]));
    }

    #[test]
    fn bracket_products_differ_from_product_brackets() {
        let pr = p(2);
        let sep = ESymbol::teichmuller(&z("X"), 2, pr).mul(&ESymbol::teichmuller(&z("Y"), 2, pr)).unwrap();
        let joint = ESymbol::teichmuller(&z("X*Y"), 2, pr);
        assert_ne!(eta_bar(&sep).unwrap(), eta_bar(&joint).unwrap());
        assert_eq!(eta_bar(&joint).unwrap(), ghost_map(&zs(&["X*Y", "0"]), pr).unwrap());
    }

    #[test]
    fn witness_products_match_coordinatewise_products() {
        let prime = p(2);
        let n = 4;
        let ws = [
            witness(0, &["X", "Y"]),
            witness(1, &["X+Y"]),
            witness(2, &["Y*X", "X"]),
            witness(0, &["2*X - Y"]),
        ];
        for u in &ws {
            for v in &ws {
                let (s, w) = u.mul(v, prime).unwrap();
                let direct = mul_coordinatewise(&realize(u, n, prime), &realize(v, n, prime)).unwrap();
                let via: Vec<FreePoly> = realize(&w, n, prime).iter().map(|c| c.scale(&s)).collect();
                assert_eq!(via, direct, "{u:?} * {v:?}");
            }
        }
    }

    #[test]
    fn x_element_ring_operations() {
        let prime = p(3);
        let a = XElement::generator(witness(0, &["X"]), 3, prime)
            .add(&XElement::generator(witness(1, &["Y"]), 3, prime))
            .unwrap();
        let b = XElement::generator(witness(0, &["Y", "X"]), 3, prime).scale(&BigInt::from(-2));
        let prod = a.mul(&b).unwrap();
        assert!(prod.verify());
        let direct = mul_coordinatewise(a.realized(), b.realized()).unwrap();
        assert_eq!(prod.realized(), direct.as_slice());

        let va = a.verschiebung();
        assert!(va.verify());
        assert_eq!(va.realized(), cd_verschiebung(a.realized(), prime).as_slice());

        let cancel = a.add(&a.scale(&BigInt::from(-1))).unwrap();
        assert!(cancel.combo().is_empty());
        assert!(cancel.realized().iter().all(FreePoly::is_zero));
    }

    #[test]
    fn witnesses_need_factors() {
        assert!(TeichWitness::new(0, vec![]).is_err());
        let x2 = z("X").reduce_mod(2).unwrap();
        assert!(TeichWitness::new(0, vec![z("X"), x2]).is_err());
        assert!(omega_embed(&[], p(2)).is_err());
    }

    #[test]
    fn gamma_of_verschiebung() {
        let prime = p(2);
        let v = realize(&witness(0, &["X", "Y+X"]), 3, prime);
        let g = gamma_bar(&v, prime).unwrap();
        let gv = gamma_bar(&cd_verschiebung(&v, prime), prime).unwrap();
        assert!(gv.coords()[0].is_zero());
        for k in 1..3 {
            assert_eq!(gv.coords()[k], g.coords()[k - 1].scale(&BigInt::from(2)));
        }
    }
}
