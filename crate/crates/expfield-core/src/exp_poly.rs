//! The free exponential-polynomial ring B[X_1..X_n]^E.
//!
//! Canonical form: an exponential polynomial is a sum of terms
//! `c * M * exp(u)` where c is a nonzero rational, M is a monomial over
//! base atoms (coefficient symbols and indeterminates) and u is another
//! exponential polynomial (zero when the term has no exp factor).
//! Products of exp factors merge by adding exponents, so the
//! homomorphism laws exp(0) = 1 and exp(u+v) = exp(u)exp(v) hold
//! *structurally*: equal ring elements have identical trees.
//!
//! Trees are hash-consed in a global, internally synchronized,
//! append-only table, so structural equality is pointer equality.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::Result;
use crate::field::FieldElement;
use crate::linalg::Scalar;
use crate::poly::Poly;
use crate::rational::{rat_display, Rat};

/// A multiplicand that is not an exp factor: a named coefficient symbol
/// from the ambient presentation, or one of the indeterminates X_i.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseAtom {
    Sym(String),
    Var(usize),
}

/// Key of one canonical term: monomial over base atoms plus the
/// argument of its (single, merged) exp factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub monomial: BTreeMap<BaseAtom, u32>,
    pub exponent: ExpPoly,
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct ExpData {
    nvars: usize,
    terms: BTreeMap<TermKey, Rat>,
}

/// A hash-consed exponential polynomial over `nvars` indeterminates.
#[derive(Debug, Clone)]
pub struct ExpPoly(Arc<ExpData>);

static INTERN: Lazy<Mutex<HashSet<Arc<ExpData>>>> = Lazy::new(|| Mutex::new(HashSet::new()));

fn intern(data: ExpData) -> ExpPoly {
    let mut table = INTERN.lock().unwrap();
    if let Some(existing) = table.get(&data) {
        return ExpPoly(existing.clone());
    }
    let arc = Arc::new(data);
    table.insert(arc.clone());
    ExpPoly(arc)
}

impl PartialEq for ExpPoly {
    fn eq(&self, other: &Self) -> bool {
        // interning makes pointer equality complete; the structural
        // fallback covers values compared across intern generations
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for ExpPoly {}

impl PartialOrd for ExpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExpPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return std::cmp::Ordering::Equal;
        }
        self.0.cmp(&other.0)
    }
}

impl std::hash::Hash for ExpPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl ExpPoly {
    fn build(nvars: usize, terms: BTreeMap<TermKey, Rat>) -> Self {
        debug_assert!(terms.values().all(|c| !Zero::is_zero(c)));
        intern(ExpData { nvars, terms })
    }

    pub fn zero(nvars: usize) -> Self {
        Self::build(nvars, BTreeMap::new())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(
                TermKey {
                    monomial: BTreeMap::new(),
                    exponent: Self::zero(nvars),
                },
                c,
            );
        }
        Self::build(nvars, terms)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn atom(nvars: usize, a: BaseAtom) -> Self {
        if let BaseAtom::Var(i) = &a {
            assert!(*i < nvars);
        }
        let mut monomial = BTreeMap::new();
        monomial.insert(a, 1);
        let mut terms = BTreeMap::new();
        terms.insert(
            TermKey {
                monomial,
                exponent: Self::zero(nvars),
            },
            Rat::one(),
        );
        Self::build(nvars, terms)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::atom(nvars, BaseAtom::Var(i))
    }

    pub fn sym(nvars: usize, name: &str) -> Self {
        Self::atom(nvars, BaseAtom::Sym(name.to_string()))
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.0.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Rat)> {
        self.0.terms.iter()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.0.terms.len() == 1 {
            let (k, c) = self.0.terms.iter().next().unwrap();
            if k.monomial.is_empty() && k.exponent.is_zero() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.0.nvars, other.0.nvars);
        let mut terms = self.0.terms.clone();
        for (k, c) in &other.0.terms {
            match terms.entry(k.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = e.get() + c;
                    if Zero::is_zero(&s) {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        Self::build(self.0.nvars, terms)
    }

    pub fn neg(&self) -> Self {
        Self::build(
            self.0.nvars,
            self.0.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rat) -> Self {
        if Zero::is_zero(q) {
            return Self::zero(self.0.nvars);
        }
        Self::build(
            self.0.nvars,
            self.0.terms.iter().map(|(k, c)| (k.clone(), c * q)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.0.nvars, other.0.nvars);
        let mut acc: BTreeMap<TermKey, Rat> = BTreeMap::new();
        for (k1, c1) in &self.0.terms {
            for (k2, c2) in &other.0.terms {
                let mut monomial = k1.monomial.clone();
                for (a, e) in &k2.monomial {
                    *monomial.entry(a.clone()).or_insert(0) += e;
                }
                let exponent = k1.exponent.add(&k2.exponent);
                let key = TermKey { monomial, exponent };
                let c = c1 * c2;
                match acc.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get() + &c;
                        if Zero::is_zero(&s) {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        Self::build(self.0.nvars, acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.0.nvars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// exp of this element. exp(0) is 1 and exp(u+v) = exp(u)exp(v)
    /// hold at the level of canonical forms.
    pub fn exp(&self) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(
            TermKey {
                monomial: BTreeMap::new(),
                exponent: self.clone(),
            },
            Rat::one(),
        );
        Self::build(self.0.nvars, terms)
    }

    /// Formal partial derivative with respect to X_i, using
    /// d(exp(u)) = exp(u) du recursively.
    pub fn partial(&self, i: usize) -> Self {
        let nvars = self.0.nvars;
        let mut result = Self::zero(nvars);
        for (key, c) in &self.0.terms {
            // product rule over the monomial part
            for (atom, &e) in &key.monomial {
                if *atom != BaseAtom::Var(i) {
                    continue;
                }
                let mut monomial = key.monomial.clone();
                if e == 1 {
                    monomial.remove(atom);
                } else {
                    monomial.insert(atom.clone(), e - 1);
                }
                let mut terms = BTreeMap::new();
                terms.insert(
                    TermKey {
                        monomial,
                        exponent: key.exponent.clone(),
                    },
                    c * Rat::from_integer(e.into()),
                );
                result = result.add(&Self::build(nvars, terms));
            }
            // chain rule through the exp factor
            if !key.exponent.is_zero() {
                let du = key.exponent.partial(i);
                if !du.is_zero() {
                    let mut terms = BTreeMap::new();
                    terms.insert(key.clone(), c.clone());
                    result = result.add(&Self::build(nvars, terms).mul(&du));
                }
            }
        }
        result
    }

    /// Greatest nesting depth of exp factors.
    pub fn depth(&self) -> usize {
        self.0
            .terms
            .keys()
            .map(|k| {
                if k.exponent.is_zero() {
                    0
                } else {
                    1 + k.exponent.depth()
                }
            })
            .max()
            .unwrap_or(0)
    }

    /// Symbols occurring anywhere in the tree.
    pub fn symbols(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_symbols(&self, out: &mut Vec<String>) {
        for k in self.0.terms.keys() {
            for a in k.monomial.keys() {
                if let BaseAtom::Sym(s) = a {
                    out.push(s.clone());
                }
            }
            k.exponent.collect_symbols(out);
        }
    }

    /// Lift an ordinary polynomial into the E-ring, sending variable i
    /// of `p` to `images[i]`.
    pub fn from_poly(p: &Poly, nvars: usize, images: &[BaseAtomImage]) -> Self {
        assert_eq!(images.len(), p.nvars());
        let mut r = Self::zero(nvars);
        for (m, c) in p.terms() {
            let mut t = Self::constant(nvars, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let img = match &images[i] {
                        BaseAtomImage::Atom(a) => Self::atom(nvars, a.clone()),
                        BaseAtomImage::ExpOf(a) => Self::atom(nvars, a.clone()).exp(),
                    };
                    t = t.mul(&img.pow(e));
                }
            }
            r = r.add(&t);
        }
        r
    }

    /// Evaluate at a point in a presented field. `point[i]` gives X_i;
    /// `sym` resolves coefficient symbols; `exp_eval` evaluates the
    /// exponential map (erring where it is undefined).
    pub fn eval(
        &self,
        point: &[FieldElement],
        sym: &dyn Fn(&str) -> Result<FieldElement>,
        exp_eval: &dyn Fn(&FieldElement) -> Result<FieldElement>,
        zero: &FieldElement,
    ) -> Result<FieldElement> {
        assert_eq!(point.len(), self.0.nvars);
        let mut acc = zero.zero_like();
        for (key, c) in &self.0.terms {
            let mut t = zero.one_like().scale(c);
            for (atom, &e) in &key.monomial {
                let v = match atom {
                    BaseAtom::Sym(s) => sym(s)?,
                    BaseAtom::Var(i) => point[*i].clone(),
                };
                t = t.mul(&v.powi(e as i64)?);
            }
            if !key.exponent.is_zero() {
                let u = key.exponent.eval(point, sym, exp_eval, zero)?;
                t = t.mul(&exp_eval(&u)?);
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Render with the given indeterminate names.
    pub fn display(&self, var_names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut entries: Vec<(&TermKey, &Rat)> = self.0.terms.iter().collect();
        entries.reverse(); // larger keys first reads more naturally
        for (k, (key, c)) in entries.into_iter().enumerate() {
            let neg = c < &Rat::zero();
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (a, &e) in &key.monomial {
                let base = match a {
                    BaseAtom::Sym(s) => s.clone(),
                    BaseAtom::Var(i) => var_names[*i].clone(),
                };
                factors.push(if e == 1 {
                    base
                } else {
                    format!("{}^{}", base, e)
                });
            }
            if !key.exponent.is_zero() {
                factors.push(format!("exp({})", key.exponent.display(var_names)));
            }
            if factors.is_empty() {
                out.push_str(&rat_display(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&rat_display(&mag));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

/// Image of one polynomial variable when lifting into the E-ring.
#[derive(Debug, Clone)]
pub enum BaseAtomImage {
    Atom(BaseAtom),
    /// The variable maps to exp(atom) — used when rewriting a presented
    /// exp partner E_j as exp(a_j).
    ExpOf(BaseAtom),
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.0.nvars).map(|i| format!("X{}", i + 1)).collect();
        write!(f, "{}", self.display(&names))
    }
}
