//! Canonical multivariate polynomials over [`Rat`] in a declared symbol
//! list, plus derivations (symbol-wise differential operators extended by
//! linearity and the Leibniz rule).
//!
//! Canonical form: terms are kept in a `BTreeMap` under graded
//! lexicographic monomial order with no stored zero coefficients, so
//! structural equality is mathematical equality and printing is
//! deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Default bound on any single exponent. The expressions this engine
/// manipulates never exceed total degree 4 in the field components, so the
/// cap is a safety net against runaway products, not a working limit.
pub const DEFAULT_EXPONENT_CAP: u16 = 16;

/// A declared, ordered list of symbol names shared by a family of
/// polynomials.
#[derive(Debug, PartialEq, Eq)]
pub struct Symbols {
    names: Vec<String>,
    exponent_cap: u16,
}

impl Symbols {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Arc<Self> {
        Self::with_cap(names, DEFAULT_EXPONENT_CAP)
    }

    pub fn with_cap<S: Into<String>>(names: Vec<S>, exponent_cap: u16) -> Arc<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        debug_assert!(
            names
                .iter()
                .collect::<std::collections::BTreeSet<_>>()
                .len()
                == names.len(),
            "duplicate symbol names"
        );
        Arc::new(Symbols {
            names,
            exponent_cap,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn exponent_cap(&self) -> u16 {
        self.exponent_cap
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn compatible(&self, other: &Symbols) -> bool {
        std::ptr::eq(self, other) || self.names == other.names
    }
}

/// Exponent vector over a symbol list, ordered graded-lexicographically:
/// lower total degree first, ties broken by the exponent vector itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn constant(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn symbol(n: usize, index: usize) -> Self {
        let mut e = vec![0; n];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial, symbols: &Symbols) -> Result<Monomial> {
        let mut out = self.0.clone();
        for (i, &e) in other.0.iter().enumerate() {
            let sum = out[i] as u32 + e as u32;
            if sum > symbols.exponent_cap() as u32 {
                return Err(Error::ExponentOverflow {
                    symbol: symbols.name(i).to_string(),
                    cap: symbols.exponent_cap(),
                });
            }
            out[i] = sum as u16;
        }
        Ok(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial in canonical form.
#[derive(Debug, Clone)]
pub struct Poly {
    symbols: Arc<Symbols>,
    terms: BTreeMap<Monomial, Rat>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.symbols.compatible(&other.symbols) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(symbols: &Arc<Symbols>) -> Self {
        Poly {
            symbols: Arc::clone(symbols),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(symbols: &Arc<Symbols>, value: Rat) -> Self {
        let mut p = Poly::zero(symbols);
        if !value.is_zero() {
            p.terms.insert(Monomial::constant(symbols.len()), value);
        }
        p
    }

    pub fn one(symbols: &Arc<Symbols>) -> Self {
        Poly::constant(symbols, Rat::one())
    }

    pub fn symbol(symbols: &Arc<Symbols>, name: &str) -> Result<Self> {
        let index = symbols
            .index_of(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        Ok(Poly::symbol_at(symbols, index))
    }

    pub fn symbol_at(symbols: &Arc<Symbols>, index: usize) -> Self {
        let mut p = Poly::zero(symbols);
        p.terms
            .insert(Monomial::symbol(symbols.len(), index), Rat::one());
        p
    }

    pub fn symbols(&self) -> &Arc<Symbols> {
        &self.symbols
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_constant)
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Monomial::constant(self.symbols.len()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    fn check_compat(&self, other: &Poly) -> Result<()> {
        if self.symbols.compatible(&other.symbols) {
            Ok(())
        } else {
            Err(Error::SymbolMismatch)
        }
    }

    fn insert(&mut self, mono: Monomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.insert(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            symbols: Arc::clone(&self.symbols),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &Rat) -> Poly {
        if factor.is_zero() {
            return Poly::zero(&self.symbols);
        }
        Poly {
            symbols: Arc::clone(&self.symbols),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_compat(other)?;
        let mut out = Poly::zero(&self.symbols);
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                let m = ma.mul(mb, &self.symbols)?;
                out.insert(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<Poly> {
        let mut acc = Poly::one(&self.symbols);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact evaluation; the assignment must cover every symbol that
    /// actually occurs.
    pub fn substitute(&self, assignment: &BTreeMap<String, Rat>) -> Result<Rat> {
        let values: Vec<Option<&Rat>> = self
            .symbols
            .names()
            .iter()
            .map(|n| assignment.get(n))
            .collect();
        let mut total = Rat::zero();
        for (mono, coeff) in self.terms.iter() {
            let mut term = coeff.clone();
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values[i]
                    .ok_or_else(|| Error::MissingAssignment(self.symbols.name(i).to_string()))?;
                term = &term * &v.pow(e as u32);
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// Substitutes a subset of the symbols, leaving the rest untouched.
    /// The result stays over the same symbol list.
    pub fn substitute_partial(&self, assignment: &BTreeMap<String, Rat>) -> Poly {
        let values: Vec<Option<&Rat>> = self
            .symbols
            .names()
            .iter()
            .map(|n| assignment.get(n))
            .collect();
        let mut out = Poly::zero(&self.symbols);
        for (mono, coeff) in self.terms.iter() {
            let mut c = coeff.clone();
            let mut exps = mono.exponents().to_vec();
            for (i, e) in exps.iter_mut().enumerate() {
                if *e == 0 {
                    continue;
                }
                if let Some(v) = values[i] {
                    c = &c * &v.pow(*e as u32);
                    *e = 0;
                }
            }
            out.insert(Monomial(exps), c);
        }
        out
    }

    /// Floating-point evaluation with values indexed by symbol position.
    /// Used only by the variation test.
    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.symbols.len());
        let mut total = 0.0;
        for (mono, coeff) in self.terms.iter() {
            let mut term = coeff.to_f64();
            for (i, &e) in mono.exponents().iter().enumerate() {
                for _ in 0..e {
                    term *= values[i];
                }
            }
            total += term;
        }
        total
    }

    /// Factors out one power of the given symbol, if every term contains it.
    pub fn divide_by_symbol(&self, index: usize) -> Option<Poly> {
        if self.is_zero() {
            return None;
        }
        let mut out = Poly::zero(&self.symbols);
        for (mono, coeff) in self.terms.iter() {
            let mut exps = mono.exponents().to_vec();
            if exps[index] == 0 {
                return None;
            }
            exps[index] -= 1;
            out.insert(Monomial(exps), coeff.clone());
        }
        Some(out)
    }

    /// The set of symbol indices that occur with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.symbols.len()];
        for mono in self.terms.keys() {
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter_map(|(i, &s)| s.then_some(i))
            .collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // leading term first: descending graded-lex
        for (pos, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let neg = coeff.is_negative();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.symbols.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.symbols.name(i), e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == Rat::one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A derivation of the polynomial ring: an operator fixed by its action on
/// the symbols, extended to all of [`Poly`] by linearity and the Leibniz
/// rule. Symbols absent from the action map are outside the operator's
/// domain and differentiating them is a hard error (this is how the jet
/// ring enforces its truncation order).
#[derive(Debug, Clone)]
pub struct Derivation {
    action: BTreeMap<usize, Poly>,
}

impl Derivation {
    pub fn new(action: BTreeMap<usize, Poly>) -> Self {
        Derivation { action }
    }

    /// The zero derivation, defined on every declared symbol.
    pub fn zero(symbols: &Arc<Symbols>) -> Self {
        let action = (0..symbols.len())
            .map(|i| (i, Poly::zero(symbols)))
            .collect();
        Derivation { action }
    }

    pub fn is_zero(&self) -> bool {
        self.action.values().all(Poly::is_zero)
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let symbols = p.symbols();
        let mut out = Poly::zero(symbols);
        for (mono, coeff) in p.terms() {
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = self
                    .action
                    .get(&i)
                    .ok_or_else(|| Error::UnderivableSymbol(symbols.name(i).to_string()))?;
                if image.is_zero() {
                    continue;
                }
                // d(x^e) = e x^(e-1) dx, times the rest of the monomial
                let mut exps = mono.exponents().to_vec();
                exps[i] = e - 1;
                let mut rest = Poly::zero(symbols);
                rest.insert(Monomial(exps), coeff * &Rat::int(e as i64));
                out = out.add(&rest.mul(image)?)?;
            }
        }
        Ok(out)
    }
}
