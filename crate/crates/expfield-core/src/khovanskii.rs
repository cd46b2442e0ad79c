//! Khovanskii systems: n exponential polynomials in n indeterminates
//! together with a witness and a nonsingular Jacobian. A verified
//! certificate proves its witness entries exponentially algebraic over
//! the designated coefficient subring, and the cross-check confirms
//! they are then also closed under the differential closure operator.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::differentials::DiffModule;
use crate::error::{Error, Result};
use crate::exp_poly::{BaseAtom, BaseAtomImage, ExpPoly};
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::presentation::EFieldPresentation;

/// A Khovanskii system with its claimed solution.
#[derive(Clone)]
pub struct KhovanskiiCertificate {
    /// n exponential polynomials in the indeterminates X_1…X_n;
    /// coefficient symbols name generators of the presentation
    pub system: Vec<ExpPoly>,
    pub witness: Vec<FieldElement>,
    /// generator indices of the coefficient subring B
    pub coeff_gens: Vec<usize>,
}

impl KhovanskiiCertificate {
    pub fn n(&self) -> usize {
        self.system.len()
    }
}

fn sym_resolver<'a>(
    f: &'a Arc<EFieldPresentation>,
) -> impl Fn(&str) -> Result<FieldElement> + 'a {
    move |name: &str| {
        f.gen_index(name)
            .map(|i| f.generator(i))
            .ok_or_else(|| Error::CoefficientScope(format!("unknown coefficient symbol {}", name)))
    }
}

/// The Jacobian matrix ∂f_i/∂X_j evaluated at the witness, with its
/// exact determinant.
pub fn jacobian(
    f: &Arc<EFieldPresentation>,
    system: &[ExpPoly],
    witness: &[FieldElement],
) -> Result<(Matrix<FieldElement>, FieldElement)> {
    let n = system.len();
    if n == 0 || witness.len() != n {
        return Err(Error::Input("Khovanskii system must be square and nonempty".into()));
    }
    let zero = FieldElement::zero(f.ctx().clone());
    let sym = sym_resolver(f);
    let exp_eval = |v: &FieldElement| f.exp_of_element(v);
    let mut m = Matrix::new(0, n, Vec::new());
    for fi in system {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(fi.partial(j).eval(witness, &sym, &exp_eval, &zero)?);
        }
        m.push_row(row);
    }
    let det = m.det();
    Ok((m, det))
}

/// Check coefficient scope, the n equations, and the Jacobian
/// inequation. A `true` verdict certifies every witness entry as
/// exponentially algebraic over the coefficient subring.
pub fn verify_witness(
    f: &Arc<EFieldPresentation>,
    cert: &KhovanskiiCertificate,
) -> Result<bool> {
    if cert.system.len() != cert.witness.len() || cert.system.is_empty() {
        return Err(Error::Input("system and witness lengths must agree and be ≥ 1".into()));
    }
    for fi in &cert.system {
        for s in fi.symbols() {
            let idx = f.gen_index(&s).ok_or_else(|| {
                Error::CoefficientScope(format!("coefficient {} is not a generator", s))
            })?;
            if !cert.coeff_gens.contains(&idx) {
                return Err(Error::CoefficientScope(format!(
                    "coefficient {} is outside the designated subring",
                    s
                )));
            }
        }
    }
    let zero = FieldElement::zero(f.ctx().clone());
    let sym = sym_resolver(f);
    let exp_eval = |v: &FieldElement| f.exp_of_element(v);
    for fi in &cert.system {
        if !fi.eval(&cert.witness, &sym, &exp_eval, &zero)?.is_zero() {
            return Ok(false);
        }
    }
    let (_, det) = jacobian(f, &cert.system, &cert.witness)?;
    Ok(!det.is_zero())
}

/// The ecl ⊆ cl cross-check: a verified certificate's witness entries
/// must all satisfy cl membership over the coefficient subring.
pub fn ecl_implies_cl_check(
    f: &Arc<EFieldPresentation>,
    c_gens: &[usize],
    cert: &KhovanskiiCertificate,
) -> Result<bool> {
    if !verify_witness(f, cert)? {
        return Err(Error::Input(
            "certificate does not verify; the inclusion check is not applicable".into(),
        ));
    }
    let xi = DiffModule::xi_presentation(f, c_gens)?;
    for a in &cert.witness {
        if !xi.cl_member(a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Construct a certificate for the graph elements outside C from a
/// zero-dimensional Ξ(F/C): pick relation generators whose differential
/// rows are independent and rewrite them in fresh indeterminates, one
/// per graph element. Returns None when the relation rows have rank
/// below n, so no nonsingular system exists among the generators.
pub fn certificate_from_xi(
    f: &Arc<EFieldPresentation>,
    c_gens: &[usize],
) -> Result<Option<KhovanskiiCertificate>> {
    let xi = DiffModule::xi_presentation(f, c_gens)?;
    let basis = xi.basis().to_vec();
    let n = basis.len();
    if n == 0 {
        return Ok(None);
    }
    // greedy selection of relation generators with independent rows;
    // only rows stemming from actual ideal generators are usable
    let gens = &f.relations().gens;
    let mut chosen: Vec<usize> = Vec::new();
    let mut acc = Matrix::new(0, n, Vec::new());
    for (gi, _) in gens.iter().enumerate() {
        if chosen.len() == n {
            break;
        }
        let row = xi.rows().row(gi).to_vec();
        let before = acc.rank();
        acc.push_row(row.clone());
        if acc.rank() == before + 1 {
            chosen.push(gi);
        } else {
            acc = {
                let mut m = Matrix::new(0, n, Vec::new());
                for &c in &chosen {
                    m.push_row(xi.rows().row(c).to_vec());
                }
                m
            };
        }
    }
    if chosen.len() < n {
        return Ok(None);
    }
    // rewrite each chosen generator in the indeterminates X_1…X_n:
    // basis element a_i → X_i, its partner → exp(X_i), everything else
    // stays as a coefficient symbol
    let m = f.num_gens();
    let mut images = Vec::with_capacity(m);
    for i in 0..m {
        if let Some(j) = basis.iter().position(|&a| a == i) {
            images.push(BaseAtomImage::Atom(BaseAtom::Var(j)));
        } else if let Some(&(a, _)) = f
            .exp_graph()
            .iter()
            .find(|&&(a, e)| e == i && a != e && basis.contains(&a))
        {
            let j = basis.iter().position(|&b| b == a).unwrap();
            images.push(BaseAtomImage::ExpOf(BaseAtom::Var(j)));
            let _ = a;
        } else {
            images.push(BaseAtomImage::Atom(BaseAtom::Sym(f.names()[i].clone())));
        }
    }
    let system: Vec<ExpPoly> = chosen
        .iter()
        .map(|&gi| ExpPoly::from_poly(&gens[gi], n, &images))
        .collect();
    let witness: Vec<FieldElement> = basis.iter().map(|&a| f.generator(a)).collect();
    // the coefficient subring is generated by every symbol we used plus C
    let mut coeff: BTreeSet<usize> = c_gens.iter().cloned().collect();
    for fi in &system {
        for s in fi.symbols() {
            if let Some(i) = f.gen_index(&s) {
                coeff.insert(i);
            }
        }
    }
    Ok(Some(KhovanskiiCertificate {
        system,
        witness,
        coeff_gens: coeff.into_iter().collect(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{GroebnerConfig, Ideal};
    use crate::poly::Poly;
    use crate::rational::rat;

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

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

    fn anchor_pres() -> Arc<EFieldPresentation> {
        let n = 4;
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
    fn jacobian_linear_and_singular() {
        let f = free_pres();
        // f = X − 3 at 3: matrix (1), det 1
        let sys = vec![ExpPoly::var(1, 0).sub(&ExpPoly::constant(1, rat(3)))];
        let w = vec![FieldElement::rational(f.ctx().clone(), rat(3))];
        let (m, det) = jacobian(&f, &sys, &w).unwrap();
        assert_eq!(m.rows, 1);
        assert_eq!(det, FieldElement::one(f.ctx().clone()));
        // f = X² at 0: det 0
        let sys2 = vec![ExpPoly::var(1, 0).pow(2)];
        let w2 = vec![FieldElement::zero(f.ctx().clone())];
        let (_, det2) = jacobian(&f, &sys2, &w2).unwrap();
        assert!(det2.is_zero());
    }

    #[test]
    fn jacobian_two_by_two() {
        // f₁ = exp(X₁) − E, f₂ = X₂² − r at (a, s): det = exp(a)·2s
        let n = 4; // a, E, r, s with s² − r = 0
        let s2mr = Poly::var(n, 3).pow(2).sub(&Poly::var(n, 2));
        let f = EFieldPresentation::new(
            "sq",
            vec!["a".into(), "E".into(), "r".into(), "s".into()],
            Ideal::new(n, vec![s2mr]),
            vec![(0, 1)],
            vec![],
            false,
            cfg(),
        )
        .unwrap();
        let f1 = ExpPoly::var(2, 0).exp().sub(&ExpPoly::sym(2, "E"));
        let f2 = ExpPoly::var(2, 1).pow(2).sub(&ExpPoly::sym(2, "r"));
        let w = vec![f.generator(0), f.generator(3)];
        let (_, det) = jacobian(&f, &[f1.clone(), f2.clone()], &w).unwrap();
        let expected = f.generator(1).mul(&f.generator(3)).scale(&rat(2));
        assert_eq!(det, expected);
        // permuting the equations flips only the sign
        let (_, det_swapped) = jacobian(&f, &[f2, f1], &w).unwrap();
        assert_eq!(det_swapped, expected.neg());
    }

    #[test]
    fn verify_linear_and_singular() {
        let f = free_pres();
        let cert = KhovanskiiCertificate {
            system: vec![ExpPoly::var(1, 0).sub(&ExpPoly::constant(1, rat(3)))],
            witness: vec![FieldElement::rational(f.ctx().clone(), rat(3))],
            coeff_gens: vec![],
        };
        assert!(verify_witness(&f, &cert).unwrap());
        let singular = KhovanskiiCertificate {
            system: vec![ExpPoly::var(1, 0).pow(2)],
            witness: vec![FieldElement::zero(f.ctx().clone())],
            coeff_gens: vec![],
        };
        assert!(!verify_witness(&f, &singular).unwrap());
    }

    #[test]
    fn verify_exponential_equation() {
        // f = exp(X) − E with declared exp(x) = E, witness x
        let f = free_pres();
        let cert = KhovanskiiCertificate {
            system: vec![ExpPoly::var(1, 0).exp().sub(&ExpPoly::sym(1, "ex"))],
            witness: vec![f.generator(0)],
            coeff_gens: vec![1],
        };
        assert!(verify_witness(&f, &cert).unwrap());
    }

    #[test]
    fn coefficient_scope_enforced() {
        let f = free_pres();
        let cert = KhovanskiiCertificate {
            system: vec![ExpPoly::var(1, 0).exp().sub(&ExpPoly::sym(1, "ex"))],
            witness: vec![f.generator(0)],
            coeff_gens: vec![], // "ex" used but not designated
        };
        assert!(matches!(
            verify_witness(&f, &cert),
            Err(Error::CoefficientScope(_))
        ));
    }

    #[test]
    fn redundant_equation_preserves_verification() {
        let f = free_pres();
        let base = KhovanskiiCertificate {
            system: vec![ExpPoly::var(1, 0).exp().sub(&ExpPoly::sym(1, "ex"))],
            witness: vec![f.generator(0)],
            coeff_gens: vec![1],
        };
        assert!(verify_witness(&f, &base).unwrap());
        // append f₂ = X₂ − 3 with witness 3: determinant gains a factor 1
        let f1 = ExpPoly::var(2, 0).exp().sub(&ExpPoly::sym(2, "ex"));
        let f2 = ExpPoly::var(2, 1).sub(&ExpPoly::constant(2, rat(3)));
        let extended = KhovanskiiCertificate {
            system: vec![f1, f2],
            witness: vec![f.generator(0), FieldElement::rational(f.ctx().clone(), rat(3))],
            coeff_gens: vec![1],
        };
        assert!(verify_witness(&f, &extended).unwrap());
    }

    #[test]
    fn ecl_implies_cl_on_analogue() {
        // f = X² + 1, witness x, det = 2x ≠ 0; then x ∈ cl(base)
        let f = anchor_pres();
        let cert = KhovanskiiCertificate {
            system: vec![ExpPoly::var(1, 0).pow(2).add(&ExpPoly::one(1))],
            witness: vec![f.generator(2)],
            coeff_gens: vec![0, 1],
        };
        assert!(verify_witness(&f, &cert).unwrap());
        assert!(ecl_implies_cl_check(&f, &[0, 1], &cert).unwrap());
    }

    #[test]
    fn ecl_check_rejects_unverified_cert() {
        let f = free_pres();
        let bad = KhovanskiiCertificate {
            system: vec![ExpPoly::var(1, 0).pow(2)],
            witness: vec![FieldElement::zero(f.ctx().clone())],
            coeff_gens: vec![],
        };
        assert!(ecl_implies_cl_check(&f, &[], &bad).is_err());
    }

    #[test]
    fn emitter_from_zero_dimensional_xi() {
        let f = anchor_pres();
        let cert = certificate_from_xi(&f, &[0, 1]).unwrap().unwrap();
        assert_eq!(cert.n(), 1);
        assert_eq!(cert.witness[0], f.generator(2));
        assert!(verify_witness(&f, &cert).unwrap());
        assert!(ecl_implies_cl_check(&f, &[0, 1], &cert).unwrap());
    }

    #[test]
    fn emitter_declines_free_presentation() {
        let f = free_pres();
        assert!(certificate_from_xi(&f, &[]).unwrap().is_none());
    }
}
