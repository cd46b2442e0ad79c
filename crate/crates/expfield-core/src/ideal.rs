//! Polynomial ideals, Buchberger's algorithm, ideal membership,
//! elimination and Krull dimension.
//!
//! The Gröbner engine is deliberately plain: normal selection strategy,
//! coprime-criterion pair skipping, full interreduction at the end, and
//! a hard S-pair budget so oversized instances fail loudly instead of
//! spinning.

use std::collections::BTreeSet;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{mono_div, mono_divides, mono_lcm, Monomial, MonomialOrder, Poly};
use crate::rational::Rat;

/// Runtime limits for the Gröbner engine.
#[derive(Debug, Clone, Copy)]
pub struct GroebnerConfig {
    pub spair_budget: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            spair_budget: 10_000,
        }
    }
}

impl GroebnerConfig {
    /// Default budget, overridable by EXPFIELD_SPAIR_BUDGET.
    pub fn from_env() -> Self {
        let mut cfg = GroebnerConfig::default();
        if let Ok(s) = std::env::var("EXPFIELD_SPAIR_BUDGET") {
            if let Ok(n) = s.trim().parse::<usize>() {
                cfg.spair_budget = n;
            }
        }
        cfg
    }
}

/// A finitely generated ideal in Q[x_0..x_{nvars-1}].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub nvars: usize,
    pub gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Poly>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator in wrong ambient ring");
        }
        Ideal { nvars, gens }
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn groebner(&self, order: MonomialOrder, config: &GroebnerConfig) -> Result<GroebnerBasis> {
        let basis = buchberger(&self.gens, self.nvars, order, config)?;
        Ok(GroebnerBasis {
            nvars: self.nvars,
            order,
            basis,
        })
    }
}

/// A reduced Gröbner basis (monic, interreduced, sorted by leading
/// monomial) for a fixed order; deterministic for fixed inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub nvars: usize,
    pub order: MonomialOrder,
    pub basis: Vec<Poly>,
}

/// Full multivariate division: returns the normal form and the cofactor
/// of each divisor, so that p = sum_i cofactor_i * divisor_i + nf.
pub fn normal_form_with_cofactors(
    p: &Poly,
    divisors: &[Poly],
    order: MonomialOrder,
) -> (Poly, Vec<Poly>) {
    let nvars = p.nvars();
    let mut rem = Poly::zero(nvars);
    let mut cof = vec![Poly::zero(nvars); divisors.len()];
    let mut work = p.clone();
    let leads: Vec<Option<(Monomial, Rat)>> = divisors
        .iter()
        .map(|d| d.leading_term(order).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    while let Some((lm, lc)) = work.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let mut reduced = false;
        for (i, d) in divisors.iter().enumerate() {
            if let Some((dm, dc)) = &leads[i] {
                if mono_divides(dm, &lm) {
                    let qm = mono_div(&lm, dm);
                    let qc = &lc / dc;
                    work = work.sub(&d.mul_term(&qm, &qc));
                    cof[i] = cof[i].add(&Poly::from_terms(nvars, [(qm, qc)]));
                    reduced = true;
                    break;
                }
            }
        }
        if !reduced {
            // move the leading term to the remainder
            let t = Poly::from_terms(nvars, [(lm, lc)]);
            rem = rem.add(&t);
            work = work.sub(&t);
        }
    }
    (rem, cof)
}

pub fn normal_form(p: &Poly, divisors: &[Poly], order: MonomialOrder) -> Poly {
    normal_form_with_cofactors(p, divisors, order).0
}

fn s_poly(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (fm, fc) = f.leading_term(order).expect("s_poly of zero");
    let (gm, gc) = g.leading_term(order).expect("s_poly of zero");
    let l = mono_lcm(fm, gm);
    let a = f.mul_term(&mono_div(&l, fm), &(Rat::one() / fc));
    let b = g.mul_term(&mono_div(&l, gm), &(Rat::one() / gc));
    a.sub(&b)
}

/// Buchberger with normal selection strategy. Returns the reduced basis.
pub fn buchberger(
    gens: &[Poly],
    nvars: usize,
    order: MonomialOrder,
    config: &GroebnerConfig,
) -> Result<Vec<Poly>> {
    debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
    let mut basis: Vec<Poly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(order))
        .collect();
    basis.sort();
    basis.dedup();
    // normal selection strategy: process pairs by (degree, monomial) of
    // the lcm of the leading terms, smallest first
    let mut pairs: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    let lcm_key = |basis: &[Poly], i: usize, j: usize| -> (u32, Monomial) {
        let (mi, _) = basis[i].leading_term(order).unwrap();
        let (mj, _) = basis[j].leading_term(order).unwrap();
        let l = mono_lcm(mi, mj);
        (l.iter().sum(), l)
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (d, l) = lcm_key(&basis, i, j);
            pairs.insert((d, l, i, j));
        }
    }
    let mut processed = 0usize;
    while let Some(entry) = pairs.iter().next().cloned() {
        pairs.remove(&entry);
        let (_, lcm, i, j) = entry;
        processed += 1;
        if processed > config.spair_budget {
            return Err(Error::ResourceLimit {
                budget: config.spair_budget,
            });
        }
        // coprime leading monomials: S-polynomial reduces to zero
        let (mi, _) = basis[i].leading_term(order).unwrap();
        let (mj, _) = basis[j].leading_term(order).unwrap();
        if lcm.iter().zip(mi.iter().zip(mj)).all(|(l, (a, b))| *l == a + b) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = r.monic(order);
            let k = basis.len();
            basis.push(r);
            for t in 0..k {
                let (d, l) = lcm_key(&basis, t, k);
                pairs.insert((d, l, t, k));
            }
        }
    }
    Ok(interreduce(basis, order))
}

/// Interreduce a basis: drop elements reducible to zero by the others
/// and fully reduce the survivors' tails.
fn interreduce(mut basis: Vec<Poly>, order: MonomialOrder) -> Vec<Poly> {
    // minimalize: remove any element whose lead is divisible by another's
    let mut keep: Vec<Poly> = Vec::new();
    basis.sort_by(|a, b| {
        let (ma, _) = a.leading_term(order).unwrap();
        let (mb, _) = b.leading_term(order).unwrap();
        order.cmp(ma, mb)
    });
    for (i, p) in basis.iter().enumerate() {
        let (lm, _) = p.leading_term(order).unwrap();
        let dominated = basis.iter().enumerate().any(|(j, q)| {
            if i == j {
                return false;
            }
            let (qm, _) = q.leading_term(order).unwrap();
            mono_divides(qm, lm) && (qm != lm || j < i)
        });
        if !dominated {
            keep.push(p.clone());
        }
    }
    // fully reduce each element modulo the others
    let reduced: Vec<Poly> = (0..keep.len())
        .map(|i| {
            let others: Vec<Poly> = keep
                .iter()
                .enumerate()
                .filter_map(|(j, q)| (j != i).then(|| q.clone()))
                .collect();
            normal_form(&keep[i], &others, order).monic(order)
        })
        .filter(|p| !p.is_zero())
        .collect();
    let mut reduced = reduced;
    // largest leading monomial first
    reduced.sort_by(|a, b| {
        let (ma, _) = a.leading_term(order).unwrap();
        let (mb, _) = b.leading_term(order).unwrap();
        order.cmp(mb, ma)
    });
    reduced
}

impl GroebnerBasis {
    pub fn normal_form(&self, p: &Poly) -> Poly {
        normal_form(p, &self.basis, self.order)
    }

    /// Ideal membership: true iff the normal form of p is zero.
    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// True iff 1 is in the ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|p| p.is_constant() && !p.is_zero())
    }

    /// Krull dimension of the quotient ring, computed as the maximum
    /// size of a variable subset meeting no leading-monomial support.
    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_unit_ideal() {
            return Err(Error::UnitIdeal);
        }
        let n = self.nvars;
        assert!(n <= 24, "krull_dimension subset enumeration capped at 24 variables");
        let lead_masks: Vec<u32> = self
            .basis
            .iter()
            .map(|p| {
                let (m, _) = p.leading_term(self.order).unwrap();
                let mut mask = 0u32;
                for (i, &e) in m.iter().enumerate() {
                    if e > 0 {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect();
        for size in (0..=n).rev() {
            if subset_exists(n, size, &lead_masks) {
                return Ok(size);
            }
        }
        unreachable!("empty set is always independent for a proper ideal")
    }

    /// Generators of the intersection with the subring in the kept
    /// variables, via a block elimination order. The result lives in the
    /// same ambient ring but mentions only kept variables.
    pub fn eliminate(&self, keep: &[bool], config: &GroebnerConfig) -> Result<Ideal> {
        assert_eq!(keep.len(), self.nvars);
        eliminate_from_gens(&self.basis, self.nvars, keep, config)
    }
}

/// Elimination from raw generators: permutes eliminated variables to the
/// front, runs Buchberger under the block order, and keeps the basis
/// elements free of eliminated variables.
pub fn eliminate_from_gens(
    gens: &[Poly],
    nvars: usize,
    keep: &[bool],
    config: &GroebnerConfig,
) -> Result<Ideal> {
    let elim: Vec<usize> = (0..nvars).filter(|&i| !keep[i]).collect();
    let kept: Vec<usize> = (0..nvars).filter(|&i| keep[i]).collect();
    let first = elim.len();
    // old index -> permuted index
    let mut map = vec![0usize; nvars];
    for (new, &old) in elim.iter().chain(kept.iter()).enumerate() {
        map[old] = new;
    }
    let permuted: Vec<Poly> = gens.iter().map(|g| g.map_vars(nvars, &map)).collect();
    let gb = buchberger(&permuted, nvars, MonomialOrder::Elim { first }, config)?;
    // invert the permutation and keep polynomials in the kept block only
    let mut inv = vec![0usize; nvars];
    for (old, &new) in map.iter().enumerate() {
        inv[new] = old;
    }
    let kept_polys: Vec<Poly> = gb
        .into_iter()
        .filter(|p| p.support().iter().all(|&v| v >= first))
        .map(|p| p.map_vars(nvars, &inv))
        .collect();
    Ok(Ideal::new(nvars, kept_polys))
}

fn subset_exists(n: usize, size: usize, lead_masks: &[u32]) -> bool {
    // iterate over all subsets of {0..n} of the given size
    fn rec(start: usize, n: usize, remaining: usize, acc: u32, lead_masks: &[u32]) -> bool {
        if remaining == 0 {
            return lead_masks.iter().all(|&lm| lm & !acc != 0);
        }
        for i in start..n {
            if n - i < remaining {
                break;
            }
            if rec(i + 1, n, remaining - 1, acc | (1 << i), lead_masks) {
                return true;
            }
        }
        false
    }
    rec(0, n, size, 0, lead_masks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    fn gb(nvars: usize, gens: Vec<Poly>, order: MonomialOrder) -> GroebnerBasis {
        Ideal::new(nvars, gens).groebner(order, &cfg()).unwrap()
    }

    #[test]
    fn univariate_already_reduced() {
        // <x^2 - 2> is its own reduced basis
        let p = Poly::var(1, 0).pow(2).sub(&Poly::constant(1, rat(2)));
        let g = gb(1, vec![p.clone()], MonomialOrder::GrevLex);
        assert_eq!(g.basis, vec![p]);
    }

    #[test]
    fn hand_buchberger_linear() {
        // <x - y, y - z> with x > y > z reduces to {x - z, y - z}
        let x = Poly::var(3, 0);
        let y = Poly::var(3, 1);
        let z = Poly::var(3, 2);
        let g = gb(3, vec![x.sub(&y), y.sub(&z)], MonomialOrder::GrevLex);
        assert_eq!(g.basis, vec![x.sub(&z), y.sub(&z)]);
    }

    #[test]
    fn unit_ideal() {
        let g = gb(2, vec![Poly::constant(2, rat(5))], MonomialOrder::GrevLex);
        assert_eq!(g.basis, vec![Poly::one(2)]);
        assert!(g.is_unit_ideal());
        assert!(matches!(g.krull_dimension(), Err(Error::UnitIdeal)));
    }

    #[test]
    fn membership() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let circle = x.pow(2).add(&y.pow(2)).sub(&Poly::one(2));
        let g = gb(2, vec![circle.clone()], MonomialOrder::GrevLex);
        assert!(g.contains(&circle));
        let g2 = gb(
            1,
            vec![Poly::var(1, 0).pow(2).sub(&Poly::constant(1, rat(2)))],
            MonomialOrder::GrevLex,
        );
        assert!(!g2.contains(&Poly::var(1, 0)));
        // x - z in <x - y, y - z>, by hand reduction
        let z = Poly::var(3, 2);
        let g3 = gb(
            3,
            vec![Poly::var(3, 0).sub(&Poly::var(3, 1)), Poly::var(3, 1).sub(&z)],
            MonomialOrder::GrevLex,
        );
        assert!(g3.contains(&Poly::var(3, 0).sub(&z)));
    }

    #[test]
    fn membership_matches_cofactor_reconstruction() {
        let x = Poly::var(3, 0);
        let y = Poly::var(3, 1);
        let z = Poly::var(3, 2);
        let gens = vec![x.sub(&y), y.sub(&z), x.pow(2).sub(&z.pow(2))];
        let g = gb(3, gens, MonomialOrder::GrevLex);
        let p = x.pow(2).sub(&y.mul(&z));
        let (nf, cof) = normal_form_with_cofactors(&p, &g.basis, g.order);
        let mut recon = nf.clone();
        for (c, d) in cof.iter().zip(&g.basis) {
            recon = recon.add(&c.mul(d));
        }
        assert_eq!(recon, p);
        assert_eq!(g.contains(&p), nf.is_zero());
    }

    #[test]
    fn krull_dimensions() {
        // zero ideal in Q[x,y] has dimension 2
        let g = gb(2, vec![], MonomialOrder::GrevLex);
        assert_eq!(g.krull_dimension().unwrap(), 2);
        // cusp curve y^2 = x^3 has dimension 1 (oracle: x alone satisfies
        // no univariate relation, y is algebraic over x via the relation)
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let g = gb(2, vec![y.pow(2).sub(&x.pow(3))], MonomialOrder::GrevLex);
        assert_eq!(g.krull_dimension().unwrap(), 1);
        // maximal ideal <x, y>
        let g = gb(2, vec![x.clone(), y.clone()], MonomialOrder::GrevLex);
        assert_eq!(g.krull_dimension().unwrap(), 0);
    }

    #[test]
    fn elimination() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        // <y - x^2> keep {y}: x free, so no univariate relation for y
        let g = gb(2, vec![y.sub(&x.pow(2))], MonomialOrder::GrevLex);
        let e = g.eliminate(&[false, true], &cfg()).unwrap();
        assert!(e.gens.is_empty());
        // <x - y> keep {y}: zero ideal
        let g = gb(2, vec![x.sub(&y)], MonomialOrder::GrevLex);
        assert!(g.eliminate(&[false, true], &cfg()).unwrap().gens.is_empty());
        // <x^2 - 2, y - x> keep {y}: substitution gives y^2 - 2
        let g = gb(
            2,
            vec![x.pow(2).sub(&Poly::constant(2, rat(2))), y.sub(&x)],
            MonomialOrder::GrevLex,
        );
        let e = g.eliminate(&[false, true], &cfg()).unwrap();
        assert_eq!(e.gens, vec![y.pow(2).sub(&Poly::constant(2, rat(2)))]);
    }

    #[test]
    fn budget_is_enforced() {
        let tight = GroebnerConfig { spair_budget: 0 };
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let r = buchberger(
            &[x.pow(2).sub(&y), x.mul(&y).sub(&Poly::one(2))],
            2,
            MonomialOrder::GrevLex,
            &tight,
        );
        assert!(matches!(r, Err(Error::ResourceLimit { .. })));
    }
}
