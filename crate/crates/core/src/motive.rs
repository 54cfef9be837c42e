//! Motives as formal sums over the basis `λ^b h¹(C) ⊗ 𝕃^c`.
//!
//! The λ-classes are treated as independent symbols. The only relations are
//! `λ^0 h¹ = 1` and `λ^b h¹ = 0` for `b > 2g`, since `h¹(C)` has rank `2g`.
//! Tensor products are only defined when one factor is a sum of Lefschetz
//! powers; that is all the decomposition formulas ever need.

use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::MotiveError;

/// Genus of the underlying curve, always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Genus(u32);

impl Genus {
    pub const MIN: u32 = 2;
    /// Keeps every exponent the formulas produce (at most `6g`) inside `u32`.
    pub const MAX: u32 = 1_000_000;

    pub fn new(g: u32) -> Result<Self, MotiveError> {
        if (Self::MIN..=Self::MAX).contains(&g) {
            Ok(Genus(g))
        } else {
            Err(MotiveError::InvalidGenus(g))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Rank of `h¹(C)`, i.e. `2g`. Exterior powers above it vanish.
    pub fn h1_rank(self) -> u32 {
        2 * self.0
    }
}

impl TryFrom<u32> for Genus {
    type Error = MotiveError;

    fn try_from(g: u32) -> Result<Self, Self::Error> {
        Genus::new(g)
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The basis class `λ^b h¹(C) ⊗ 𝕃^c`.
///
/// Ordering is lexicographic in `(lambda_index, lefschetz_power)`, which is
/// also the canonical iteration order of a [`MotiveClass`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    pub lambda_index: u32,
    pub lefschetz_power: u32,
}

impl BasisKey {
    /// The unit motive `1`.
    pub const UNIT: BasisKey = BasisKey::new(0, 0);

    pub const fn new(lambda_index: u32, lefschetz_power: u32) -> Self {
        BasisKey {
            lambda_index,
            lefschetz_power,
        }
    }

    pub const fn lefschetz(power: u32) -> Self {
        BasisKey::new(0, power)
    }

    pub fn is_tate(self) -> bool {
        self.lambda_index == 0
    }

    fn times(self, other: BasisKey) -> Result<BasisKey, MotiveError> {
        Ok(BasisKey {
            lambda_index: self.lambda_index + other.lambda_index,
            lefschetz_power: self
                .lefschetz_power
                .checked_add(other.lefschetz_power)
                .ok_or(MotiveError::ExponentOverflow)?,
        })
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (b, c) = (self.lambda_index, self.lefschetz_power);
        let lambda = match b {
            0 => None,
            1 => Some(alloc::string::String::from("h1")),
            _ => Some(alloc::format!("lam({b})")),
        };
        match (lambda, c) {
            (None, 0) => f.write_str("1"),
            (None, 1) => f.write_str("L"),
            (None, c) => write!(f, "L^{c}"),
            (Some(l), 0) => f.write_str(&l),
            (Some(l), 1) => write!(f, "{l}*L"),
            (Some(l), c) => write!(f, "{l}*L^{c}"),
        }
    }
}

/// A motive of genus `g`: a finite map from basis classes to positive
/// multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MotiveClass {
    genus: Genus,
    terms: BTreeMap<BasisKey, BigUint>,
}

impl MotiveClass {
    pub fn zero(genus: Genus) -> Self {
        MotiveClass {
            genus,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(genus: Genus) -> Self {
        Self::basis(genus, BasisKey::UNIT)
    }

    /// `𝕃^n`.
    pub fn lefschetz(genus: Genus, n: u32) -> Self {
        Self::basis(genus, BasisKey::lefschetz(n))
    }

    /// `λ^k h¹(C)`, which is zero for `k > 2g`.
    pub fn lambda_h1(genus: Genus, k: u32) -> Self {
        Self::basis(genus, BasisKey::new(k, 0))
    }

    /// A single basis class with multiplicity one (zero if it vanishes).
    pub fn basis(genus: Genus, key: BasisKey) -> Self {
        let mut m = Self::zero(genus);
        m.add_term(key, BigUint::one());
        m
    }

    /// Accumulates `terms` into a motive. Zero multiplicities and classes
    /// with `λ`-index above `2g` are dropped.
    pub fn from_terms<I>(genus: Genus, terms: I) -> Self
    where
        I: IntoIterator<Item = (BasisKey, BigUint)>,
    {
        let mut m = Self::zero(genus);
        for (key, mult) in terms {
            m.add_term(key, mult);
        }
        m
    }

    /// Builds a motive from terms that must already be in canonical form:
    /// no zeros, no duplicates, no vanishing classes. Order is irrelevant.
    pub fn try_from_canonical_terms<I>(genus: Genus, terms: I) -> Result<Self, MotiveError>
    where
        I: IntoIterator<Item = (BasisKey, BigUint)>,
    {
        let mut map = BTreeMap::new();
        for (key, mult) in terms {
            if mult.is_zero() {
                return Err(MotiveError::ZeroMultiplicity(key));
            }
            if key.lambda_index > genus.h1_rank() {
                return Err(MotiveError::LambdaOutOfRange {
                    key,
                    genus: genus.get(),
                });
            }
            if map.insert(key, mult).is_some() {
                return Err(MotiveError::DuplicateKey(key));
            }
        }
        Ok(MotiveClass { genus, terms: map })
    }

    fn add_term(&mut self, key: BasisKey, mult: BigUint) {
        if mult.is_zero() || key.lambda_index > self.genus.h1_rank() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
            btree_map::Entry::Occupied(mut e) => *e.get_mut() += mult,
        }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&BasisKey, &BigUint)> + '_ {
        self.terms.iter()
    }

    pub fn multiplicity(&self, key: BasisKey) -> Option<&BigUint> {
        self.terms.get(&key)
    }

    /// Number of distinct basis keys.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every class is a Lefschetz power (vacuously for zero).
    pub fn is_tate(&self) -> bool {
        self.terms.keys().all(|k| k.is_tate())
    }

    fn check_genus(&self, other: &MotiveClass) -> Result<(), MotiveError> {
        if self.genus == other.genus {
            Ok(())
        } else {
            Err(MotiveError::GenusMismatch {
                left: self.genus.get(),
                right: other.genus.get(),
            })
        }
    }

    /// `self ⊕ other`.
    pub fn direct_sum(&self, other: &MotiveClass) -> Result<MotiveClass, MotiveError> {
        let mut out = self.clone();
        out.accumulate(other)?;
        Ok(out)
    }

    /// In-place `self ⊕ other`.
    pub fn accumulate(&mut self, other: &MotiveClass) -> Result<(), MotiveError> {
        self.check_genus(other)?;
        for (key, mult) in &other.terms {
            self.add_term(*key, mult.clone());
        }
        Ok(())
    }

    /// `self ⊗ other`, defined when at least one side is a Tate polynomial.
    pub fn tensor(&self, other: &MotiveClass) -> Result<MotiveClass, MotiveError> {
        self.check_genus(other)?;
        if !self.is_tate() && !other.is_tate() {
            return Err(MotiveError::NonTateTensor);
        }
        let mut out = MotiveClass::zero(self.genus);
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                out.add_term(a.times(*b)?, ma * mb);
            }
        }
        Ok(out)
    }

    /// `self ⊗ 𝕃^c`.
    pub fn twist(&self, c: u32) -> Result<MotiveClass, MotiveError> {
        let mut terms = BTreeMap::new();
        for (key, mult) in &self.terms {
            terms.insert(key.times(BasisKey::lefschetz(c))?, mult.clone());
        }
        Ok(MotiveClass {
            genus: self.genus,
            terms,
        })
    }

    /// `self^{⊗n}`; `n = 0` gives the unit.
    pub fn tensor_power(&self, n: u32) -> Result<MotiveClass, MotiveError> {
        match n {
            0 => return Ok(MotiveClass::unit(self.genus)),
            1 => return Ok(self.clone()),
            _ if !self.is_tate() => return Err(MotiveError::NonTateTensor),
            _ => {}
        }
        let mut acc = MotiveClass::unit(self.genus);
        let mut base = self.clone();
        let mut n = n;
        loop {
            if n & 1 == 1 {
                acc = acc.tensor(&base)?;
            }
            n >>= 1;
            if n == 0 {
                return Ok(acc);
            }
            base = base.tensor(&base)?;
        }
    }

    /// Multiplicity-wise difference between two motives of the same genus,
    /// as `(key, left, right)` for every key where they disagree.
    pub fn diff<'a>(
        &'a self,
        other: &'a MotiveClass,
    ) -> impl Iterator<Item = (BasisKey, BigUint, BigUint)> + 'a {
        let keys: BTreeMap<BasisKey, ()> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .map(|k| (*k, ()))
            .collect();
        keys.into_keys().filter_map(move |k| {
            let l = self.terms.get(&k).cloned().unwrap_or_default();
            let r = other.terms.get(&k).cloned().unwrap_or_default();
            (l != r).then_some((k, l, r))
        })
    }
}

impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (key, mult)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            match (mult.is_one(), *key == BasisKey::UNIT) {
                (true, _) => write!(f, "{key}")?,
                (false, true) => write!(f, "{mult}")?,
                (false, false) => write!(f, "{mult}*{key}")?,
            }
        }
        Ok(())
    }
}

/// A motive made only of Lefschetz powers, `Σ m_c 𝕃^c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TatePolynomial(MotiveClass);

impl TatePolynomial {
    pub fn zero(genus: Genus) -> Self {
        TatePolynomial(MotiveClass::zero(genus))
    }

    /// `𝕃^0 ⊕ 𝕃^step ⊕ 𝕃^{2·step} ⊕ ⋯` up to and including `last`.
    /// A negative `last` is the empty sum, i.e. zero.
    pub fn geometric(genus: Genus, step: u32, last: i64) -> Result<Self, MotiveError> {
        debug_assert!(step > 0);
        if last < 0 {
            return Ok(Self::zero(genus));
        }
        let last = u32::try_from(last).map_err(|_| MotiveError::ExponentOverflow)?;
        Ok(Self::from_exponents(
            genus,
            (0..=last).step_by(step as usize),
        ))
    }

    /// `⊕ 𝕃^e` over the given exponents, with repetition counted.
    pub fn from_exponents<I: IntoIterator<Item = u32>>(genus: Genus, exponents: I) -> Self {
        TatePolynomial(MotiveClass::from_terms(
            genus,
            exponents
                .into_iter()
                .map(|e| (BasisKey::lefschetz(e), BigUint::one())),
        ))
    }

    pub fn as_motive(&self) -> &MotiveClass {
        &self.0
    }

    pub fn into_motive(self) -> MotiveClass {
        self.0
    }

    /// Multiplicity of `𝕃^c`.
    pub fn coefficient(&self, c: u32) -> BigUint {
        self.0
            .multiplicity(BasisKey::lefschetz(c))
            .cloned()
            .unwrap_or_default()
    }
}

impl TryFrom<MotiveClass> for TatePolynomial {
    type Error = MotiveError;

    fn try_from(m: MotiveClass) -> Result<Self, Self::Error> {
        match m.terms.keys().find(|k| !k.is_tate()) {
            Some(k) => Err(MotiveError::NotTate(*k)),
            None => Ok(TatePolynomial(m)),
        }
    }
}

impl From<TatePolynomial> for MotiveClass {
    fn from(t: TatePolynomial) -> Self {
        t.0
    }
}

impl fmt::Display for TatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
