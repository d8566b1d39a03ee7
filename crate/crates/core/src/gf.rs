//! Exact arithmetic in GF(p^e).
//!
//! Elements are stored as their polynomial-basis coefficient vector packed in
//! base `p`: the element `c_0 + c_1 z + ... + c_{e-1} z^{e-1}` has index
//! `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. Index 0 is zero and index 1 is one.
//! All printed output uses these indices.
//!
//! The modulus is the least monic irreducible polynomial of degree `e`,
//! ordering candidates by the packed index of their lower coefficients. This
//! makes every index (and hence every matrix the crate writes) reproducible.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order the crate will build tables for.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{e} exceeds the cap of {MAX_FIELD_ORDER}")]
    TooLarge { p: u64, e: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("element index {index} out of range for GF({order})")]
    OutOfRange { index: u64, order: u32 },
    #[error("cannot combine elements of GF({0}) and GF({1})")]
    FieldMismatch(u32, u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("modulus {0:?} is not the canonical one for this field")]
    NonCanonicalModulus(Vec<u32>),
    #[error("GF({order}) is not an extension of GF({sub})")]
    NotSubfield { order: u32, sub: u32 },
}

/// Raw element index. Only meaningful together with the field that made it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Elem,
    // exp has length 2(q-1) so that log a + log b never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
}

/// A finite field GF(p^e). Cheap to clone; the tables are shared.
#[derive(Clone)]
pub struct FiniteField {
    t: Arc<Tables>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.t.p, self.t.e)
    }
}

/// Two handles are the same field iff they have the same order: the modulus
/// is canonical.
impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.e == other.t.e
    }
}

impl Eq for FiniteField {}

/// Serializable `{p, e, modulus}` triple. The modulus lists coefficients from
/// the constant term up, including the leading 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, f)` with `q = p^f`, or `None` if `q` is not a prime
/// power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over GF(p), coefficient of z^i at position i.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let v = &mut r[i + shift];
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            *v = (*v + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

fn unpack(mut index: u32, p: u32, len: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    for c in v.iter_mut() {
        *c = index % p;
        index /= p;
    }
    v
}

fn pack(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Monic polynomial of degree `deg` whose lower coefficients pack to `low`.
fn monic(low: u32, p: u32, deg: usize) -> Vec<u32> {
    let mut v = unpack(low, p, deg);
    v.push(1);
    v
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let g = monic(low, p, d);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Builds GF(p^e).
pub fn make_field(p: u64, e: u32) -> Result<FiniteField, GfError> {
    FiniteField::new(p, e)
}

impl FiniteField {
    pub fn new(p: u64, e: u32) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if e == 0 {
            return Err(GfError::ZeroDegree);
        }
        let order = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(GfError::TooLarge { p, e });
        }
        let p = p as u32;
        let q = order as u32;
        let deg = e as usize;

        let modulus = (0..p.pow(e))
            .map(|low| monic(low, p, deg))
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");

        // Product of packed elements modulo the modulus; only used while
        // building the tables.
        let mul_poly = |a: u32, b: u32| -> u32 {
            let av = unpack(a, p, deg);
            let bv = unpack(b, p, deg);
            let mut prod = vec![0u32; 2 * deg];
            for (i, &x) in av.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in bv.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
                }
            }
            let mut r = poly_rem(&prod, &modulus, p);
            r.resize(deg, 0);
            pack(&r, p)
        };

        let group = q - 1;
        let factors = prime_factors(group as u64);
        let pow_poly = |a: u32, mut k: u64| -> u32 {
            let mut result = 1u32;
            let mut base = a;
            while k > 0 {
                if k & 1 == 1 {
                    result = mul_poly(result, base);
                }
                base = mul_poly(base, base);
                k >>= 1;
            }
            result
        };
        let generator = if q == 2 {
            1
        } else {
            (2..q)
                .find(|&g| factors.iter().all(|&f| pow_poly(g, group as u64 / f) != 1))
                .expect("the multiplicative group is cyclic")
        };

        let mut exp = vec![0u32; 2 * group as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..group {
            exp[i as usize] = x;
            log[x as usize] = i;
            x = mul_poly(x, generator);
        }
        assert_eq!(x, 1, "generator order must divide q-1");
        // every nonzero element must be reached exactly once
        let mut seen = vec![false; q as usize];
        for &v in &exp[..group as usize] {
            assert!(!seen[v as usize], "generator is not primitive");
            seen[v as usize] = true;
        }
        for i in 0..group as usize {
            exp[i + group as usize] = exp[i];
        }

        let digit_add = |a: u32, b: u32| -> u32 {
            let av = unpack(a, p, deg);
            let bv = unpack(b, p, deg);
            let s: Vec<u32> = av.iter().zip(&bv).map(|(x, y)| (x + y) % p).collect();
            pack(&s, p)
        };
        let neg = (0..q)
            .map(|a| {
                let v: Vec<u32> = unpack(a, p, deg).iter().map(|&c| (p - c) % p).collect();
                pack(&v, p)
            })
            .collect();
        let add = (p != 2 && q <= 256).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b);
                }
            }
            t
        });

        Ok(FiniteField {
            t: Arc::new(Tables {
                p,
                e,
                q,
                modulus,
                generator: Elem(generator),
                exp,
                log,
                add,
                neg,
            }),
        })
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self, GfError> {
        let f = Self::new(d.p as u64, d.e)?;
        if f.modulus() != d.modulus.as_slice() {
            return Err(GfError::NonCanonicalModulus(d.modulus.clone()));
        }
        Ok(f)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.t.p,
            e: self.t.e,
            modulus: self.t.modulus.clone(),
        }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.t.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.t.e
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.t.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// The primitive element used for the log tables.
    pub fn generator(&self) -> Elem {
        self.t.generator
    }

    pub fn elem(&self, index: u64) -> Result<Elem, GfError> {
        if index >= self.t.q as u64 {
            return Err(GfError::OutOfRange {
                index,
                order: self.t.q,
            });
        }
        Ok(Elem(index as u32))
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.t.q).map(Elem)
    }

    /// The prime-field element `c mod p`, embedded.
    pub fn from_int(&self, c: i64) -> Elem {
        Elem(c.rem_euclid(self.t.p as i64) as u32)
    }

    /// Polynomial-basis coefficients of an element, constant term first.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        unpack(a.0, self.t.p, self.t.e as usize)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.t;
        if t.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if let Some(tab) = &t.add {
            return Elem(tab[(a.0 * t.q + b.0) as usize]);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % t.p + y % t.p) % t.p) * place;
            x /= t.p;
            y /= t.p;
            place *= t.p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.t.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let t = &*self.t;
        Elem(t.exp[(t.log[a.index()] + t.log[b.index()]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, GfError> {
        if a.is_zero() {
            return Err(GfError::ZeroInverse);
        }
        let t = &*self.t;
        let l = t.log[a.index()];
        Ok(Elem(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` with the convention `0^0 = 1`.
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let t = &*self.t;
        let group = (t.q - 1) as u64;
        let l = (t.log[a.index()] as u64 * (k % group)) % group;
        Elem(t.exp[l as usize])
    }

    /// Discrete log base [`generator`](Self::generator).
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.t.log[a.index()])
    }

    pub fn sum(&self, it: impl IntoIterator<Item = Elem>) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    /// Subfield degree `u` with `order = sub^u`.
    fn subfield_degree(&self, sub: u64) -> Result<u32, GfError> {
        let err = GfError::NotSubfield {
            order: self.t.q,
            sub: sub as u32,
        };
        let (p, f) = prime_power(sub).ok_or(err.clone())?;
        if p != self.t.p as u64 || !self.t.e.is_multiple_of(f) {
            return Err(err);
        }
        Ok(self.t.e / f)
    }

    /// `x^((Q-1)/(q-1))` where `Q = q^u` is this field's order. The result
    /// lies in the subfield of order `sub` but is returned as an element of
    /// this field.
    pub fn norm_in_place(&self, x: Elem, sub: u64) -> Result<Elem, GfError> {
        self.subfield_degree(sub)?;
        let big = self.t.q as u64;
        Ok(self.pow(x, (big - 1) / (sub - 1)))
    }

    /// `x + x^q + ... + x^(q^(u-1))` as an element of this field.
    pub fn trace_in_place(&self, x: Elem, sub: u64) -> Result<Elem, GfError> {
        let u = self.subfield_degree(sub)?;
        let mut acc = Elem::ZERO;
        let mut conj = x;
        for _ in 0..u {
            acc = self.add(acc, conj);
            conj = self.pow(conj, sub);
        }
        Ok(acc)
    }

    pub fn embedding_from(&self, small: &FiniteField) -> Result<SubfieldEmbedding, GfError> {
        SubfieldEmbedding::new(small.clone(), self.clone())
    }
}

/// An element together with its field, for checked arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    repr: Elem,
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr)
    }
}

impl FieldElement {
    pub fn new(field: &FiniteField, index: u64) -> Result<Self, GfError> {
        Ok(Self {
            repr: field.elem(index)?,
            field: field.clone(),
        })
    }

    pub fn from_elem(field: &FiniteField, repr: Elem) -> Self {
        debug_assert!(repr.0 < field.order());
        Self {
            field: field.clone(),
            repr,
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn repr(&self) -> Elem {
        self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    fn same_field(&self, other: &Self) -> Result<(), GfError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch(self.field.order(), other.field.order()));
        }
        Ok(())
    }

    fn wrap(&self, repr: Elem) -> Self {
        Self {
            field: self.field.clone(),
            repr,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.repr, other.repr)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.repr, other.repr)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.repr, other.repr)))
    }

    pub fn inv(&self) -> Result<Self, GfError> {
        Ok(self.wrap(self.field.inv(self.repr)?))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.field.neg(self.repr))
    }

    pub fn pow(&self, k: u64) -> Self {
        self.wrap(self.field.pow(self.repr, k))
    }
}

/// The norm `x^(1+q+...+q^(u-1))` of `x` down to the subfield of order `sub`,
/// returned as an element of the separately built GF(sub).
pub fn norm_to_subfield(x: &FieldElement, sub: u64) -> Result<FieldElement, GfError> {
    let big = x.field();
    let small = subfield_for(big, sub)?;
    let image = big.norm_in_place(x.repr(), sub)?;
    let emb = big.embedding_from(&small)?;
    Ok(FieldElement::from_elem(&small, emb.pull_back(image).expect("norm lies in the subfield")))
}

/// The trace `x + x^q + ... + x^(q^(u-1))` down to the subfield of order `sub`.
pub fn trace_to_subfield(x: &FieldElement, sub: u64) -> Result<FieldElement, GfError> {
    let big = x.field();
    let small = subfield_for(big, sub)?;
    let image = big.trace_in_place(x.repr(), sub)?;
    let emb = big.embedding_from(&small)?;
    Ok(FieldElement::from_elem(&small, emb.pull_back(image).expect("trace lies in the subfield")))
}

fn subfield_for(big: &FiniteField, sub: u64) -> Result<FiniteField, GfError> {
    big.subfield_degree(sub)?;
    let (p, f) = prime_power(sub).expect("checked above");
    FiniteField::new(p, f)
}

/// Field embedding GF(q) -> GF(q^u), sending the class of `z` in the small
/// field to the least-index root of the small modulus in the big field.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    small: FiniteField,
    big: FiniteField,
    image: Vec<Elem>,
    preimage: Vec<Option<Elem>>,
}

impl SubfieldEmbedding {
    pub fn new(small: FiniteField, big: FiniteField) -> Result<Self, GfError> {
        big.subfield_degree(small.order() as u64)?;
        let poly = small.modulus();
        let eval = |x: Elem| {
            poly.iter()
                .rev()
                .fold(Elem::ZERO, |acc, &c| big.add(big.mul(acc, x), Elem(c)))
        };
        let root = big
            .elements()
            .find(|&x| eval(x).is_zero())
            .expect("the small modulus splits in the big field");
        let mut image = Vec::with_capacity(small.order() as usize);
        let mut preimage = vec![None; big.order() as usize];
        for s in small.elements() {
            let coeffs = small.coefficients(s);
            let v = coeffs
                .iter()
                .rev()
                .fold(Elem::ZERO, |acc, &c| big.add(big.mul(acc, root), Elem(c)));
            preimage[v.index()] = Some(s);
            image.push(v);
        }
        Ok(Self {
            small,
            big,
            image,
            preimage,
        })
    }

    pub fn push_forward(&self, s: Elem) -> Elem {
        self.image[s.index()]
    }

    pub fn pull_back(&self, b: Elem) -> Option<Elem> {
        self.preimage[b.index()]
    }

    pub fn small(&self) -> &FiniteField {
        &self.small
    }

    pub fn big(&self) -> &FiniteField {
        &self.big
    }
}
