use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Anything usable as a basis key of a free module.
pub trait BasisKey: Clone + Ord + Hash + fmt::Debug + Send + Sync {}
impl<T: Clone + Ord + Hash + fmt::Debug + Send + Sync> BasisKey for T {}

/// A finite formal sum of basis elements with exact rational coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal exactly when their term maps
/// are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: BasisKey> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, B, Rational> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (b, x) in other.iter() {
            self.add_term(b.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    /// Linear extension of a map defined on basis elements.
    pub fn map<C: BasisKey>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Relabels basis elements; colliding images are summed.
    pub fn map_basis<C: BasisKey>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear functional given on basis elements.
    pub fn eval(&self, mut f: impl FnMut(&B) -> Rational) -> Rational {
        let mut acc = Rational::zero();
        for (b, c) in self.iter() {
            acc += c * f(b);
        }
        acc
    }
}

/// Bilinear extension of `op`, defined on pairs of basis elements.
pub fn bilinear<A, B, C>(
    a: &LinComb<A>,
    b: &LinComb<B>,
    mut op: impl FnMut(&A, &B) -> LinComb<C>,
) -> LinComb<C>
where
    A: BasisKey,
    B: BasisKey,
    C: BasisKey,
{
    let mut out = LinComb::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_scaled(&op(x, y), &(cx * cy));
        }
    }
    out
}

impl<B: BasisKey> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: BasisKey> IntoIterator for LinComb<B> {
    type Item = (B, Rational);
    type IntoIter = btree_map::IntoIter<B, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, B: BasisKey> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: BasisKey> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: BasisKey> AddAssign for LinComb<B> {
    fn add_assign(&mut self, rhs: LinComb<B>) {
        for (b, c) in rhs {
            self.add_term(b, c);
        }
    }
}

impl<B: BasisKey> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), -c);
        }
    }
}

impl<B: BasisKey> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += rhs;
        self
    }
}

impl<B: BasisKey> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: BasisKey> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: BasisKey> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: BasisKey> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: BasisKey> Mul<&Rational> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &Rational) -> LinComb<B> {
        self.scale(rhs)
    }
}

impl<B: BasisKey + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{b}")?;
        }
        Ok(())
    }
}

impl<B: BasisKey + fmt::Display> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits `c1*B1 + c2*B2 + ...` into `(coefficient, basis text)` pairs.
///
/// Basis texts may themselves contain `+` inside brackets, so splitting only happens at nesting
/// depth zero. A bare basis text without `*` gets coefficient 1; `0` is the empty sum.
pub fn split_terms(s: &str) -> crate::Result<Vec<(Rational, String)>> {
    use crate::error::Error;
    let s = s.trim();
    if s == "0" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let bytes = s.as_bytes();
    for (i, &ch) in bytes.iter().enumerate() {
        match ch {
            b'{' | b'[' | b'(' | b'<' => depth += 1,
            b'}' | b']' | b')' | b'>' => depth -= 1,
            b'+' if depth == 0 => {
                parts.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &s[start..]));
    let mut out = Vec::new();
    for (pos, p) in parts {
        let p = p.trim();
        if p.is_empty() {
            return Err(Error::parse(pos, "empty term"));
        }
        let (coeff, body) = match top_level_star(p) {
            Some(i) => (super::rational::parse_rational(&p[..i])?, p[i + 1..].trim()),
            None => (Rational::one(), p),
        };
        out.push((coeff, body.to_string()));
    }
    Ok(out)
}

fn top_level_star(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.bytes().enumerate() {
        match ch {
            b'{' | b'[' | b'(' | b'<' => depth += 1,
            b'}' | b']' | b')' | b'>' => depth -= 1,
            b'*' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Parses a combination with a basis parser.
pub fn parse_lincomb<B: BasisKey>(
    s: &str,
    mut parse_basis: impl FnMut(&str) -> crate::Result<B>,
) -> crate::Result<LinComb<B>> {
    let mut out = LinComb::zero();
    for (c, body) in split_terms(s)? {
        out.add_term(parse_basis(&body)?, c);
    }
    Ok(out)
}

impl<B: BasisKey> LinComb<B> {
    /// The largest absolute coefficient numerator, for diagnostics.
    pub fn max_abs_numer(&self) -> num_bigint::BigInt {
        self.iter()
            .map(|(_, c)| c.numer().abs())
            .max()
            .unwrap_or_default()
    }
}
