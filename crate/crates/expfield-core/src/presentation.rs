//! Finitely presented partial E-fields.
//!
//! A presentation names generators, imposes a (declared prime) relation
//! ideal, and records the exponential graph as pairs exp(a) = E of
//! generators. The exponential domain A(F) is the Q-span of the graph's
//! left-hand elements; a base sub-presentation is a generator subset
//! closed under the graph. On top of this the module computes the exact
//! invariants td, ldim_Q, and the predimension δ = td − ldim_Q.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::ideal::{eliminate_from_gens, GroebnerConfig, Ideal};
use crate::linalg::Matrix;
use crate::poly::{MonomialOrder, Poly};
use crate::rational::{rat, to_primitive_integers, Rat};

/// A finitely presented partial E-field.
#[derive(Debug)]
pub struct EFieldPresentation {
    pub name: String,
    names: Vec<String>,
    relations: Ideal,
    ctx: Arc<FieldCtx>,
    /// pairs (a, E) of generator indices with exp(a) = E
    exp_graph: Vec<(usize, usize)>,
    /// generator indices of the base sub-presentation, sorted
    base_gens: Vec<usize>,
    egg: bool,
    config: GroebnerConfig,
}

/// Outcome of `validate`: every failed invariant with a witness.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The predimension of a tuple over a generator subset.
#[derive(Debug, Clone, Serialize)]
pub struct DeltaReport {
    pub td_value: usize,
    pub ldim_value: usize,
    pub delta: i64,
}

impl EFieldPresentation {
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        relations: Ideal,
        exp_graph: Vec<(usize, usize)>,
        base_gens: Vec<usize>,
        egg: bool,
        config: GroebnerConfig,
    ) -> Result<Arc<Self>> {
        let m = names.len();
        if relations.nvars != m {
            return Err(Error::Input(format!(
                "relation ideal has {} variables but {} generators are declared",
                relations.nvars, m
            )));
        }
        let mut seen = BTreeSet::new();
        for &(a, e) in &exp_graph {
            if a >= m || e >= m {
                return Err(Error::Input("exp pair index out of range".into()));
            }
            if !seen.insert(a) {
                return Err(Error::Input(format!(
                    "generator {} has two exp values",
                    names[a]
                )));
            }
        }
        let mut base_gens = base_gens;
        base_gens.sort_unstable();
        base_gens.dedup();
        if base_gens.iter().any(|&i| i >= m) {
            return Err(Error::Input("base generator index out of range".into()));
        }
        let ctx = FieldCtx::new(names.clone(), relations.clone(), config.clone())?;
        Ok(Arc::new(EFieldPresentation {
            name: name.into(),
            names,
            relations,
            ctx,
            exp_graph,
            base_gens,
            egg,
            config,
        }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn num_gens(&self) -> usize {
        self.names.len()
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn exp_graph(&self) -> &[(usize, usize)] {
        &self.exp_graph
    }

    pub fn base_gens(&self) -> &[usize] {
        &self.base_gens
    }

    pub fn egg(&self) -> bool {
        self.egg
    }

    pub fn config(&self) -> &GroebnerConfig {
        &self.config
    }

    pub fn generator(&self, i: usize) -> FieldElement {
        FieldElement::generator(self.ctx.clone(), i)
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Left-hand elements of the exponential graph, in declaration order.
    pub fn a_list(&self) -> Vec<usize> {
        self.exp_graph.iter().map(|&(a, _)| a).collect()
    }

    /// The exp-partner of a generator, if one is declared.
    pub fn partner_of(&self, a: usize) -> Option<usize> {
        self.exp_graph.iter().find(|&&(x, _)| x == a).map(|&(_, e)| e)
    }

    /// Graph elements not belonging to the base: the designated Q-basis
    /// of A(F) over the base.
    pub fn a_basis(&self) -> Vec<usize> {
        self.exp_graph
            .iter()
            .map(|&(a, _)| a)
            .filter(|a| !self.base_gens.contains(a))
            .collect()
    }

    /// Check every presentation invariant; failures carry witnesses.
    pub fn validate(&self) -> Result<ValidationReport> {
        let mut failures = Vec::new();
        let gb = &self.ctx.gb;
        if gb.is_unit_ideal() {
            failures.push("improper ideal: relation ideal contains 1".into());
            return Ok(ValidationReport { failures });
        }

        // base closed under the exponential graph
        for &(a, e) in &self.exp_graph {
            if self.base_gens.contains(&a) && !self.base_gens.contains(&e) {
                failures.push(format!(
                    "base not closed under exp: {} is in the base but its partner {} is not",
                    self.names[a], self.names[e]
                ));
            }
        }

        // each exp-partner is a unit in the quotient domain
        for &(a, e) in &self.exp_graph {
            let nf = gb.normal_form(&Poly::var(self.num_gens(), e));
            if nf.is_zero() {
                failures.push(format!(
                    "exp({}) = {} is zero modulo the relation ideal",
                    self.names[a], self.names[e]
                ));
            }
        }

        // Q-linear relations among graph elements and the homomorphism law
        let a_list = self.a_list();
        if !a_list.is_empty() {
            let kernel = self.a_relation_kernel(&a_list);
            for v in &kernel {
                let Some(q) = to_primitive_integers(v) else { continue };
                // Π E^{q+} − Π E^{q−} must lie in the ideal
                let mut pos = Poly::one(self.num_gens());
                let mut neg = Poly::one(self.num_gens());
                for (j, qj) in q.iter().enumerate() {
                    let e = self.partner_of(a_list[j]).unwrap();
                    let pw = qj.magnitude().to_u32().unwrap_or(u32::MAX);
                    if qj.is_positive() {
                        pos = pos.mul(&Poly::var(self.num_gens(), e).pow(pw));
                    } else if qj.is_negative() {
                        neg = neg.mul(&Poly::var(self.num_gens(), e).pow(pw));
                    }
                }
                let law = pos.sub(&neg);
                if !gb.contains(&law) {
                    let rel: Vec<String> = q
                        .iter()
                        .zip(&a_list)
                        .filter(|(qj, _)| !qj.is_zero())
                        .map(|(qj, &a)| format!("{}*{}", qj, self.names[a]))
                        .collect();
                    failures.push(format!(
                        "multiplicativity violated: {} = 0 but {} is not in the ideal",
                        rel.join(" + "),
                        law.display(&self.names)
                    ));
                }
            }
            // designated basis elements independent modulo the ideal
            let basis = self.a_basis();
            if !basis.is_empty() {
                let kern = self.a_relation_kernel(&basis);
                if !kern.is_empty() {
                    let v = to_primitive_integers(&kern[0]).unwrap();
                    let rel: Vec<String> = v
                        .iter()
                        .zip(&basis)
                        .filter(|(qj, _)| !qj.is_zero())
                        .map(|(qj, &a)| format!("{}*{}", qj, self.names[a]))
                        .collect();
                    failures.push(format!(
                        "designated basis is Q-linearly dependent: {} = 0",
                        rel.join(" + ")
                    ));
                }
            }
        }

        // exponential-graph-generated flag
        if self.egg {
            for i in 0..self.num_gens() {
                let in_graph = self.exp_graph.iter().any(|&(a, e)| a == i || e == i);
                if !in_graph && !self.base_gens.contains(&i) {
                    failures.push(format!(
                        "egg flag set but generator {} is neither in the graph nor in the base",
                        self.names[i]
                    ));
                }
            }
        }

        // reject visibly reducible univariate relation generators
        for g in &self.relations.gens {
            if let Some(msg) = visibly_reducible(g, &self.names) {
                failures.push(msg);
            }
        }

        Ok(ValidationReport { failures })
    }

    /// Kernel of the normal-form coefficient matrix of the given
    /// generators: every vector is a Q-linear relation Σ q_j g_j = 0
    /// modulo the ideal.
    fn a_relation_kernel(&self, gens: &[usize]) -> Vec<Vec<Rat>> {
        let nfs: Vec<Poly> = gens
            .iter()
            .map(|&a| self.ctx.gb.normal_form(&Poly::var(self.num_gens(), a)))
            .collect();
        let mut monomials = BTreeSet::new();
        for p in &nfs {
            for (m, _) in p.terms() {
                monomials.insert(m.clone());
            }
        }
        let monomials: Vec<_> = monomials.into_iter().collect();
        let mut mat = Matrix::new(0, gens.len(), Vec::new());
        for m in &monomials {
            mat.push_row(nfs.iter().map(|p| p.coeff(m)).collect());
        }
        mat.kernel_w(&rat(0))
    }

    /// Coordinates of a field element in the Q-span of the graph
    /// elements, or a not-in-A error.
    pub fn a_coordinates(&self, v: &FieldElement) -> Result<Vec<Rat>> {
        let a_list = self.a_list();
        if v.is_zero() {
            return Ok(vec![rat(0); a_list.len()]);
        }
        if a_list.is_empty() {
            return Err(Error::NotInA(format!("{}", v)));
        }
        // solve nf(num) = Σ q_j nf(den · a_j) coefficient-wise
        let gb = &self.ctx.gb;
        let target = v.numerator().clone();
        let cols: Vec<Poly> = a_list
            .iter()
            .map(|&a| gb.normal_form(&v.denominator().mul(&Poly::var(self.num_gens(), a))))
            .collect();
        let mut monomials = BTreeSet::new();
        for (m, _) in target.terms() {
            monomials.insert(m.clone());
        }
        for p in &cols {
            for (m, _) in p.terms() {
                monomials.insert(m.clone());
            }
        }
        let mut mat = Matrix::new(0, a_list.len(), Vec::new());
        let mut rhs = Vec::new();
        for m in &monomials {
            mat.push_row(cols.iter().map(|p| p.coeff(m)).collect());
            rhs.push(target.coeff(m));
        }
        mat.solve(&rhs).ok_or_else(|| Error::NotInA(format!("{}", v)))
    }

    /// exp of an A(F) element: exp(Σ q_j a_j) = Π E_j^{q_j}. The
    /// coordinates must be integers, since only integer powers of the
    /// presented partners exist.
    pub fn exp_of_element(&self, v: &FieldElement) -> Result<FieldElement> {
        let mut coords = self.a_coordinates(v)?;
        let a_list = self.a_list();
        // coordinates are only determined modulo the relation kernel, so
        // a fractional particular solution may still admit an integer
        // representative in the same affine class
        if coords.iter().any(|q| !num_traits::One::is_one(q.denom())) {
            let kernel = self.a_relation_kernel(&a_list);
            if let Some(z) = integer_representative(&coords, &kernel) {
                coords = z;
            }
        }
        let mut result = FieldElement::one(self.ctx.clone());
        for (j, q) in coords.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if !num_traits::One::is_one(q.denom()) {
                return Err(Error::ExpUndefined {
                    value: format!("{}", v),
                    reason: format!(
                        "coordinate {} of {} is not an integer; no presented root of {}",
                        q,
                        self.names[a_list[j]],
                        self.names[self.partner_of(a_list[j]).unwrap()]
                    ),
                });
            }
            let e = self.partner_of(a_list[j]).unwrap();
            let pw = q.numer().to_i64().ok_or_else(|| {
                Error::Input("exponent too large".into())
            })?;
            result = result.mul(&FieldElement::generator(self.ctx.clone(), e).powi(pw)?);
        }
        Ok(result)
    }

    /// Absolute transcendence degree of a list of field elements over Q,
    /// via the Krull dimension of their elimination ideal.
    pub fn td_elements(&self, elems: &[FieldElement]) -> Result<usize> {
        if elems.is_empty() {
            return Ok(0);
        }
        let m = self.num_gens();
        // fast path: plain generators go straight through the relation ideal
        let plain: Option<Vec<usize>> = elems
            .iter()
            .map(|v| {
                if !v.denominator().is_constant() {
                    return None;
                }
                (0..m).find(|&i| *v.numerator() == Poly::var(m, i))
            })
            .collect();
        if let Some(idx) = plain {
            let mut keep = vec![false; m];
            let mut distinct = BTreeSet::new();
            for &i in &idx {
                keep[i] = true;
                distinct.insert(i);
            }
            let elim = eliminate_from_gens(&self.relations.gens, m, &keep, &self.config)?;
            return restricted_dimension(&elim, &keep, distinct.len(), &self.config);
        }
        // general path: fresh variables z_i = elems[i], a Rabinowitsch
        // variable inverting the product of denominators, then eliminate
        let k = elems.len();
        let total = m + k + 1;
        let lift: Vec<usize> = (0..m).collect();
        let mut gens: Vec<Poly> = self
            .relations
            .gens
            .iter()
            .map(|g| g.map_vars(total, &lift))
            .collect();
        let mut den_prod = Poly::one(total);
        for (i, v) in elems.iter().enumerate() {
            let num = v.numerator().map_vars(total, &lift);
            let den = v.denominator().map_vars(total, &lift);
            gens.push(Poly::var(total, m + i).mul(&den).sub(&num));
            den_prod = den_prod.mul(&den);
        }
        gens.push(Poly::var(total, total - 1).mul(&den_prod).sub(&Poly::one(total)));
        let mut keep = vec![false; total];
        for i in 0..k {
            keep[m + i] = true;
        }
        let elim = eliminate_from_gens(&gens, total, &keep, &self.config)?;
        restricted_dimension(&elim, &keep, k, &self.config)
    }

    /// td(tuple / over) = td(tuple ∪ over) − td(over), with `over` a
    /// generator subset.
    pub fn td_over(&self, tuple: &[FieldElement], over: &[usize]) -> Result<usize> {
        let over_elems: Vec<FieldElement> = over.iter().map(|&i| self.generator(i)).collect();
        let mut all = tuple.to_vec();
        all.extend(over_elems.iter().cloned());
        let big = self.td_elements(&all)?;
        let small = self.td_elements(&over_elems)?;
        Ok(big - small)
    }

    /// ldim_Q of a tuple of A(F) elements over the Q-span of the
    /// A-part of a generator subset.
    pub fn ldim_q(&self, tuple: &[FieldElement], over: &[usize]) -> Result<usize> {
        let a_list = self.a_list();
        // coordinates are only defined modulo the Q-linear relations
        // among the graph elements, so quotient both ranks by the kernel
        let mut over_rows: Vec<Vec<Rat>> = self.a_relation_kernel(&a_list);
        for &i in over {
            if let Some(j) = a_list.iter().position(|&a| a == i) {
                let mut row = vec![rat(0); a_list.len()];
                row[j] = rat(1);
                over_rows.push(row);
            }
        }
        let mut all_rows = Vec::new();
        for v in tuple {
            all_rows.push(self.a_coordinates(v)?);
        }
        all_rows.extend(over_rows.iter().cloned());
        Ok(q_rank_of(all_rows, a_list.len()) - q_rank_of(over_rows, a_list.len()))
    }

    /// The predimension δ(tuple / over) = td(tuple, exp tuple / over,
    /// exp over) − ldim_Q(tuple / over).
    pub fn delta(&self, tuple: &[FieldElement], over: &[usize]) -> Result<DeltaReport> {
        let mut with_exps = tuple.to_vec();
        for v in tuple {
            with_exps.push(self.exp_of_element(v)?);
        }
        // enlarge `over` by the exp-partners of its graph elements
        let mut over_full: Vec<usize> = over.to_vec();
        for &i in over {
            if let Some(e) = self.partner_of(i) {
                if !over_full.contains(&e) {
                    over_full.push(e);
                }
            }
        }
        let td_value = self.td_over(&with_exps, &over_full)?;
        let ldim_value = self.ldim_q(tuple, over)?;
        Ok(DeltaReport {
            td_value,
            ldim_value,
            delta: td_value as i64 - ldim_value as i64,
        })
    }

    /// The sub-presentation on a generator subset: induced relation
    /// ideal by elimination, induced exponential graph and base.
    pub fn sub_presentation(&self, keep_gens: &[usize]) -> Result<Arc<EFieldPresentation>> {
        let m = self.num_gens();
        let mut sorted: Vec<usize> = keep_gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().any(|&i| i >= m) {
            return Err(Error::Input("sub-presentation index out of range".into()));
        }
        let mut keep = vec![false; m];
        for &i in &sorted {
            keep[i] = true;
        }
        let elim = eliminate_from_gens(&self.relations.gens, m, &keep, &self.config)?;
        // old index -> new index within the subset
        let pos = |i: usize| sorted.iter().position(|&j| j == i).unwrap();
        let mut down = vec![0usize; m];
        for &i in &sorted {
            down[i] = pos(i);
        }
        let sub_gens: Vec<Poly> = elim
            .gens
            .iter()
            .map(|g| g.map_vars(sorted.len(), &down))
            .collect();
        let names: Vec<String> = sorted.iter().map(|&i| self.names[i].clone()).collect();
        let exp_graph: Vec<(usize, usize)> = self
            .exp_graph
            .iter()
            .filter(|(a, e)| sorted.contains(a) && sorted.contains(e))
            .map(|&(a, e)| (pos(a), pos(e)))
            .collect();
        let base_gens: Vec<usize> = self
            .base_gens
            .iter()
            .filter(|b| sorted.contains(b))
            .map(|&b| pos(b))
            .collect();
        let egg = self.egg
            && (0..sorted.len()).all(|i| {
                exp_graph.iter().any(|&(a, e)| a == i || e == i) || base_gens.contains(&i)
            });
        EFieldPresentation::new(
            format!("{}_sub", self.name),
            names,
            Ideal::new(sorted.len(), sub_gens),
            exp_graph,
            base_gens,
            egg,
            self.config.clone(),
        )
    }
}

/// Rank over Q of a list of rational row vectors.
fn q_rank_of(rows: Vec<Vec<Rat>>, cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut mat = Matrix::new(0, cols, Vec::new());
    for r in rows {
        mat.push_row(r);
    }
    mat.q_rank()
}

/// Krull dimension of an ideal that mentions only the kept variables,
/// measured inside the polynomial ring on those variables alone.
fn restricted_dimension(
    elim: &Ideal,
    keep: &[bool],
    nkept: usize,
    config: &GroebnerConfig,
) -> Result<usize> {
    let mut down = vec![0usize; keep.len()];
    let mut next = 0;
    for (i, &k) in keep.iter().enumerate() {
        if k {
            down[i] = next;
            next += 1;
        }
    }
    let gens: Vec<Poly> = elim.gens.iter().map(|g| g.map_vars(nkept, &down)).collect();
    let gb = Ideal::new(nkept, gens).groebner(MonomialOrder::GrevLex, config)?;
    gb.krull_dimension()
}

/// Detect a univariate relation generator with a visible factorization:
/// degree ≥ 2 with a rational root (including 0). Returns a failure
/// message with the witness root.
fn visibly_reducible(g: &Poly, names: &[String]) -> Option<String> {
    let support = g.support();
    if support.len() != 1 || g.total_degree() < 2 {
        return None;
    }
    let v = support[0];
    let d = g.degree_in(v) as usize;
    // dense coefficient vector, cleared to primitive integers
    let mut coeffs = vec![rat(0); d + 1];
    for (m, c) in g.terms() {
        coeffs[m[v] as usize] = c.clone();
    }
    let ints = to_primitive_integers(&coeffs)?;
    if ints[0].is_zero() {
        return Some(format!(
            "visibly reducible relation {}: root 0",
            g.display(names)
        ));
    }
    let (a0, an) = (ints[0].magnitude().to_u64()?, ints[d].magnitude().to_u64()?);
    if a0 > 1_000_000 || an > 1_000_000 {
        return None; // divisor enumeration out of budget; accepted as declared
    }
    for p in divisors(a0) {
        for q in divisors(an) {
            for sign in [1i64, -1] {
                let root = crate::rational::rat_pq(sign * p as i64, q as i64);
                let mut val = Rat::zero();
                let mut pw = Rat::from_integer(BigInt::from(1));
                for c in &coeffs {
                    val += c * &pw;
                    pw *= &root;
                }
                if val.is_zero() {
                    return Some(format!(
                        "visibly reducible relation {}: rational root {}",
                        g.display(names),
                        crate::rational::rat_display(&root)
                    ));
                }
            }
        }
    }
    None
}

/// An integer point of the affine space coords + span_Q(kernel), if one
/// exists. The membership constraints are a·z = a·coords for a basis of
/// the annihilator of the kernel span; integer solvability is decided
/// by unimodular column elimination.
fn integer_representative(coords: &[Rat], kernel: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    if kernel.is_empty() {
        return None;
    }
    let n = coords.len();
    let mut km = Matrix::new(0, n, Vec::new());
    for k in kernel {
        km.push_row(k.clone());
    }
    let annihilator = km.kernel_w(&rat(0));
    // integer rows (a | a·coords), cleared of denominators
    let mut a_rows: Vec<Vec<BigInt>> = Vec::new();
    let mut b: Vec<BigInt> = Vec::new();
    for a in &annihilator {
        let mut full: Vec<Rat> = a.clone();
        let rhs: Rat = a
            .iter()
            .zip(coords)
            .map(|(ai, qi)| ai * qi)
            .fold(Rat::zero(), |acc, t| acc + t);
        full.push(rhs);
        let ints = to_primitive_integers(&full)?;
        b.push(ints[n].clone());
        a_rows.push(ints[..n].to_vec());
    }
    let z = solve_integer(a_rows, b, n)?;
    Some(z.into_iter().map(Rat::from_integer).collect())
}

/// Integer solutions of A·z = b via unimodular column operations: track
/// z = U·y, bring A into column echelon form row by row, and solve the
/// triangular system with divisibility checks.
fn solve_integer(a: Vec<Vec<BigInt>>, b: Vec<BigInt>, n: usize) -> Option<Vec<BigInt>> {
    use num_integer::Integer;
    let m = a.len();
    let mut h = a;
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from((i == j) as i64))
                .collect()
        })
        .collect();
    let col_op = |h: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, j: usize, k: usize, q: &BigInt| {
        // column j -= q · column k
        for row in h.iter_mut() {
            let t = &row[k] * q;
            row[j] -= t;
        }
        for row in u.iter_mut() {
            let t = &row[k] * q;
            row[j] -= t;
        }
    };
    let col_swap = |h: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, j: usize, k: usize| {
        for row in h.iter_mut() {
            row.swap(j, k);
        }
        for row in u.iter_mut() {
            row.swap(j, k);
        }
    };
    let mut y = vec![BigInt::from(0); n];
    let mut c = 0usize; // next pivot column
    for r in 0..m {
        // residual after the already-fixed pivot variables
        let mut residual = b[r].clone();
        for j in 0..c {
            residual -= &h[r][j] * &y[j];
        }
        // gcd-eliminate row r across the free columns
        loop {
            let nonzero: Vec<usize> = (c..n).filter(|&j| !h[r][j].is_zero()).collect();
            match nonzero.len() {
                0 => break,
                1 => {
                    col_swap(&mut h, &mut u, c, nonzero[0]);
                    break;
                }
                _ => {
                    let &jmin = nonzero
                        .iter()
                        .min_by_key(|&&j| h[r][j].abs())
                        .unwrap();
                    for &j in &nonzero {
                        if j != jmin {
                            let q = h[r][j].div_floor(&h[r][jmin]);
                            if !q.is_zero() {
                                col_op(&mut h, &mut u, j, jmin, &q);
                            }
                        }
                    }
                }
            }
        }
        if c < n && !h[r][c].is_zero() {
            let g = h[r][c].clone();
            let (q, rem) = residual.div_rem(&g);
            if !rem.is_zero() {
                return None;
            }
            y[c] = q;
            c += 1;
        } else if !residual.is_zero() {
            return None;
        }
    }
    let mut z = vec![BigInt::from(0); n];
    for (i, zi) in z.iter_mut().enumerate() {
        for j in 0..n {
            *zi += &u[i][j] * &y[j];
        }
    }
    Some(z)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            ds.push(i);
            if i != n / i {
                ds.push(n / i);
            }
        }
        i += 1;
    }
    ds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_pq;

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    /// gens x, ex with exp(x) = ex and no relations
    fn free_pres() -> Arc<EFieldPresentation> {
        EFieldPresentation::new(
            "free",
            vec!["x".into(), "ex".into()],
            Ideal::zero(2),
            vec![(0, 1)],
            vec![],
            true,
            cfg(),
        )
        .unwrap()
    }

    /// base {r, s} free; x with x² + 1 = 0; exp(x) = E with E² − r = 0
    fn anchor_pres() -> Arc<EFieldPresentation> {
        let n = 4; // r, s, x, E
        let x2p1 = Poly::var(n, 2).pow(2).add(&Poly::one(n));
        let e2mr = Poly::var(n, 3).pow(2).sub(&Poly::var(n, 0));
        EFieldPresentation::new(
            "analogue",
            vec!["r".into(), "s".into(), "x".into(), "E".into()],
            Ideal::new(n, vec![x2p1, e2mr]),
            vec![(2, 3)],
            vec![0, 1],
            true,
            cfg(),
        )
        .unwrap()
    }

    #[test]
    fn free_presentation_is_valid() {
        let p = free_pres();
        let report = p.validate().unwrap();
        assert!(report.is_valid(), "{:?}", report.failures);
    }

    #[test]
    fn unit_ideal_is_invalid() {
        let p = EFieldPresentation::new(
            "bad",
            vec!["x".into()],
            Ideal::new(1, vec![Poly::one(1)]),
            vec![],
            vec![],
            false,
            cfg(),
        )
        .unwrap();
        let report = p.validate().unwrap();
        assert!(!report.is_valid());
        assert!(report.failures[0].contains("improper ideal"));
    }

    #[test]
    fn multiplicativity_violation_detected() {
        // exp(a) = E, exp(b) = G, a − b in the ideal, E − G missing
        let n = 4; // a, E, b, G
        let amb = Poly::var(n, 0).sub(&Poly::var(n, 2));
        let mk = |gens: Vec<Poly>| {
            EFieldPresentation::new(
                "m",
                vec!["a".into(), "E".into(), "b".into(), "G".into()],
                Ideal::new(n, gens),
                vec![(0, 1), (2, 3)],
                vec![0, 1],
                true,
                cfg(),
            )
            .unwrap()
        };
        let bad = mk(vec![amb.clone()]);
        let report = bad.validate().unwrap();
        assert!(report
            .failures
            .iter()
            .any(|f| f.contains("multiplicativity")), "{:?}", report.failures);
        // adding E − G restores the homomorphism law
        let emg = Poly::var(n, 1).sub(&Poly::var(n, 3));
        let good = mk(vec![amb, emg]);
        assert!(good.validate().unwrap().is_valid());
    }

    #[test]
    fn dependent_basis_detected() {
        // a − b in the ideal with both a, b designated basis elements
        let n = 4;
        let amb = Poly::var(n, 0).sub(&Poly::var(n, 2));
        let emg = Poly::var(n, 1).sub(&Poly::var(n, 3));
        let p = EFieldPresentation::new(
            "dep",
            vec!["a".into(), "E".into(), "b".into(), "G".into()],
            Ideal::new(n, vec![amb, emg]),
            vec![(0, 1), (2, 3)],
            vec![],
            true,
            cfg(),
        )
        .unwrap();
        let report = p.validate().unwrap();
        assert!(report
            .failures
            .iter()
            .any(|f| f.contains("dependent")), "{:?}", report.failures);
    }

    #[test]
    fn visibly_reducible_rejected() {
        // x² − 1 has the rational root 1
        let g = Poly::var(1, 0).pow(2).sub(&Poly::one(1));
        let p = EFieldPresentation::new(
            "red",
            vec!["x".into()],
            Ideal::new(1, vec![g]),
            vec![],
            vec![],
            false,
            cfg(),
        )
        .unwrap();
        let report = p.validate().unwrap();
        assert!(report.failures.iter().any(|f| f.contains("reducible")));
        // x² − 2 has none and passes
        let g2 = Poly::var(1, 0).pow(2).sub(&Poly::constant(1, rat(2)));
        let q = EFieldPresentation::new(
            "irr",
            vec!["x".into()],
            Ideal::new(1, vec![g2]),
            vec![],
            vec![],
            false,
            cfg(),
        )
        .unwrap();
        assert!(q.validate().unwrap().is_valid());
    }

    #[test]
    fn td_free_pair_is_two() {
        let p = free_pres();
        let x = p.generator(0);
        let ex = p.generator(1);
        assert_eq!(p.td_elements(&[x, ex]).unwrap(), 2);
    }

    #[test]
    fn td_over_self_is_zero() {
        let p = free_pres();
        let x = p.generator(0);
        assert_eq!(p.td_over(&[x.clone()], &[0]).unwrap(), 0);
        // algebraic dependence: td(x² / {x}) = 0
        let xsq = x.mul(&x);
        assert_eq!(p.td_over(&[xsq], &[0]).unwrap(), 0);
    }

    #[test]
    fn td_general_path_rational_function() {
        // 1/x is interalgebraic with x: td = 1
        let p = free_pres();
        let x = p.generator(0);
        let inv = x.inv().unwrap();
        assert_eq!(p.td_elements(&[inv.clone()]).unwrap(), 1);
        assert_eq!(p.td_over(&[inv], &[0]).unwrap(), 0);
    }

    #[test]
    fn ldim_scaling_and_combination() {
        let n = 4; // x, ex, y, ey
        let p = EFieldPresentation::new(
            "free2",
            vec!["x".into(), "ex".into(), "y".into(), "ey".into()],
            Ideal::zero(n),
            vec![(0, 1), (2, 3)],
            vec![],
            true,
            cfg(),
        )
        .unwrap();
        let x = p.generator(0);
        let y = p.generator(2);
        assert_eq!(p.ldim_q(&[x.clone()], &[]).unwrap(), 1);
        assert_eq!(p.ldim_q(&[x.clone(), x.scale(&rat(2))], &[]).unwrap(), 1);
        // ldim_Q(x + y, x − y / {x}) = 1
        let s = x.add(&y);
        let d = x.sub(&y);
        assert_eq!(p.ldim_q(&[s, d], &[0]).unwrap(), 1);
    }

    #[test]
    fn not_in_a_detected() {
        let p = free_pres();
        let ex = p.generator(1);
        assert!(matches!(p.ldim_q(&[ex], &[]), Err(Error::NotInA(_))));
    }

    #[test]
    fn exp_of_element_integer_and_fractional() {
        let p = free_pres();
        let x = p.generator(0);
        let ex = p.generator(1);
        assert_eq!(p.exp_of_element(&x).unwrap(), ex);
        // exp(2x) = ex²
        assert_eq!(
            p.exp_of_element(&x.scale(&rat(2))).unwrap(),
            ex.mul(&ex)
        );
        // exp(x/2) needs a square root of ex that is not presented
        assert!(matches!(
            p.exp_of_element(&x.scale(&rat_pq(1, 2))),
            Err(Error::ExpUndefined { .. })
        ));
    }

    #[test]
    fn delta_empty_tuple_is_zero() {
        let p = free_pres();
        let r = p.delta(&[], &[]).unwrap();
        assert_eq!(r.delta, 0);
    }

    #[test]
    fn delta_free_generator_is_one() {
        let p = free_pres();
        let x = p.generator(0);
        let r = p.delta(&[x], &[]).unwrap();
        assert_eq!((r.td_value, r.ldim_value, r.delta), (2, 1, 1));
    }

    #[test]
    fn delta_analogue_is_minus_one() {
        // td(x, E / r, s) = 0 and ldim_Q(x) = 1, so δ = −1
        let p = anchor_pres();
        let x = p.generator(2);
        let r = p.delta(&[x], &[0, 1]).unwrap();
        assert_eq!((r.td_value, r.ldim_value, r.delta), (0, 1, -1));
    }

    #[test]
    fn delta_addition_formula_sample() {
        let n = 4;
        let p = EFieldPresentation::new(
            "free2",
            vec!["x".into(), "ex".into(), "y".into(), "ey".into()],
            Ideal::zero(n),
            vec![(0, 1), (2, 3)],
            vec![],
            true,
            cfg(),
        )
        .unwrap();
        let x = p.generator(0);
        let y = p.generator(2);
        let lhs = p.delta(&[x.clone()], &[2]).unwrap().delta;
        let joint = p.delta(&[x, y.clone()], &[]).unwrap().delta;
        let base = p.delta(&[y], &[]).unwrap().delta;
        assert_eq!(lhs, joint - base);
    }

    #[test]
    fn delta_invariant_under_recombination() {
        let n = 4;
        let p = EFieldPresentation::new(
            "free2",
            vec!["x".into(), "ex".into(), "y".into(), "ey".into()],
            Ideal::zero(n),
            vec![(0, 1), (2, 3)],
            vec![],
            true,
            cfg(),
        )
        .unwrap();
        let x = p.generator(0);
        let y = p.generator(2);
        let d1 = p.delta(&[x.clone(), y.clone()], &[]).unwrap().delta;
        // invertible recombination (x + y, x − y) spans the same space
        let d2 = p
            .delta(&[x.add(&y), x.sub(&y)], &[])
            .unwrap()
            .delta;
        assert_eq!(d1, d2);
    }

    #[test]
    fn sub_presentation_induces_relations() {
        let p = anchor_pres();
        // keep base {r, s} only: induced ideal is zero
        let sub = p.sub_presentation(&[0, 1]).unwrap();
        assert_eq!(sub.num_gens(), 2);
        assert!(sub.relations().gens.is_empty());
        // keep {r, s, E}: E² − r survives elimination of x
        let sub2 = p.sub_presentation(&[0, 1, 3]).unwrap();
        assert_eq!(sub2.relations().gens.len(), 1);
    }
}
