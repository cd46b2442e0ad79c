//! Strong-extension verdicts and predimension searches.
//!
//! The universally quantified definitions (strongness, essentiality,
//! the dimension as a minimum of δ) range over infinitely many tuples;
//! each operation here searches Q-subspaces presented by bounded integer
//! coordinate matrices, deduplicated by row-reduced echelon form, and
//! every verdict carries its bound.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::differentials::DiffModule;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::presentation::{DeltaReport, EFieldPresentation};
use crate::rational::{rat, rat_display, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StrengthVerdict {
    StrongUpToBound,
    NotStrong,
}

/// Verdict on whether the declared base sits strongly in the extension.
#[derive(Debug, Clone, Serialize)]
pub struct StrengthReport {
    pub bound: u32,
    pub verdict: StrengthVerdict,
    /// integer coordinates of the witness tuple over the new graph basis
    pub witness_coords: Option<Vec<Vec<i64>>>,
    pub witness_delta: Option<DeltaReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EssentialVerdict {
    EssentialUpToBound,
    NotEssential,
}

/// Verdict on whether a δ-negative tuple is minimal within its Q-span.
#[derive(Debug, Clone, Serialize)]
pub struct EssentialReport {
    pub bound: u32,
    pub delta_a: i64,
    pub verdict: EssentialVerdict,
    /// coordinates of a strictly smaller counterexample over the tuple
    pub counter_coords: Option<Vec<Vec<i64>>>,
    pub counter_delta: Option<i64>,
    /// when essential with δ < 0: do all entries lie in cl(∅)?
    pub closure_assertion: Option<bool>,
}

/// Result of the Ax-corollary inequality δ(x̄/C′) ≥ dim(x̄/C′), with the
/// closure of C recomputed first.
#[derive(Debug, Clone, Serialize)]
pub struct AxInequalityReport {
    /// generators of C′ = cl(C) as materialized generator indices
    pub closed_over: Vec<usize>,
    pub delta: i64,
    pub dim: usize,
    pub holds: bool,
}

/// All primitive integer vectors of dimension n with entries in
/// [−bound, bound], normalized (first nonzero entry positive) and in a
/// fixed deterministic order.
fn primitive_vectors(n: usize, bound: u32) -> Vec<Vec<i64>> {
    let b = bound as i64;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let width = (2 * b + 1) as usize;
    let total = width.pow(n as u32);
    for code in 0..total {
        let mut v = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            v.push((c % width) as i64 - b);
            c /= width;
        }
        v.reverse();
        let rats: Vec<Rat> = v.iter().map(|&x| rat(x)).collect();
        let Some(prim) = crate::rational::to_primitive_integers(&rats) else { continue };
        let prim: Vec<i64> = prim.iter().map(|x| x.try_into().unwrap()).collect();
        if prim.iter().any(|&x| x.abs() > b) {
            continue; // primitive form escapes the box; its representative comes later
        }
        if seen.insert(prim.clone()) {
            out.push(prim);
        }
    }
    out
}

/// Canonical key for the Q-span of integer coordinate rows: the RREF of
/// the matrix, rendered exactly.
fn span_key(rows: &[Vec<i64>]) -> String {
    let cols = rows[0].len();
    let mut m = Matrix::new(0, cols, Vec::new());
    for r in rows {
        m.push_row(r.iter().map(|&x| rat(x)).collect());
    }
    let (rref, _) = m.rref();
    let mut s = String::new();
    for i in 0..rref.rows {
        for j in 0..cols {
            s.push_str(&rat_display(rref.at(i, j)));
            s.push(',');
        }
        s.push(';');
    }
    s
}

/// Iterate the independent k-subsets of a vector list in lexicographic
/// index order, calling `visit` on each span not seen before. Stops
/// early when `visit` returns false.
fn for_each_subspace(
    vectors: &[Vec<i64>],
    max_k: usize,
    mut visit: impl FnMut(&[Vec<i64>]) -> Result<bool>,
) -> Result<()> {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let n = if vectors.is_empty() { 0 } else { vectors[0].len() };
    for k in 1..=max_k.min(vectors.len()).min(n) {
        if k == n {
            // a full-dimensional span is unique, so visit the standard
            // basis once instead of walking every independent n-subset
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect())
                .collect();
            if !visit(&rows)? {
                return Ok(());
            }
            continue;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let rows: Vec<Vec<i64>> = idx.iter().map(|&i| vectors[i].clone()).collect();
            // skip dependent selections: the span has lower dimension and
            // will be covered by a smaller k
            let rank = {
                let mut m = Matrix::new(0, rows[0].len(), Vec::new());
                for r in &rows {
                    m.push_row(r.iter().map(|&x| rat(x)).collect());
                }
                m.q_rank()
            };
            if rank == k && seen.insert(span_key(&rows)) && !visit(&rows)? {
                return Ok(());
            }
            // advance combination
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] + 1 <= vectors.len() - (k - i) {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    idx.clear();
                    break;
                }
            }
            if idx.is_empty() || idx[0] > vectors.len() - k {
                break;
            }
        }
    }
    Ok(())
}

/// Build the tuple Σ_j m_j·a_j for each coordinate row.
fn span_tuple(
    f: &Arc<EFieldPresentation>,
    basis: &[usize],
    rows: &[Vec<i64>],
) -> Vec<FieldElement> {
    rows.iter()
        .map(|row| {
            let mut acc = FieldElement::zero(f.ctx().clone());
            for (j, &mj) in row.iter().enumerate() {
                acc = acc.add(&f.generator(basis[j]).scale(&rat(mj)));
            }
            acc
        })
        .collect()
}

/// Is the declared base strong in the presentation? Searches every
/// Q-subspace of the new graph span with coordinate height ≤ bound for
/// a tuple of negative predimension.
pub fn is_strong(f: &Arc<EFieldPresentation>, bound: u32) -> Result<StrengthReport> {
    is_strong_over(f, f.base_gens(), bound)
}

/// The same search with an explicit generator subset as the base; the
/// candidate span is that of the graph elements outside the subset.
pub fn is_strong_over(
    f: &Arc<EFieldPresentation>,
    c_gens: &[usize],
    bound: u32,
) -> Result<StrengthReport> {
    let basis: Vec<usize> = f
        .a_list()
        .into_iter()
        .filter(|a| !c_gens.contains(a))
        .collect();
    let n = basis.len();
    let mut witness: Option<(Vec<Vec<i64>>, DeltaReport)> = None;
    if n > 0 {
        let vectors = primitive_vectors(n, bound);
        for_each_subspace(&vectors, n, |rows| {
            let tuple = span_tuple(f, &basis, rows);
            let report = f.delta(&tuple, c_gens)?;
            if report.delta < 0 {
                witness = Some((rows.to_vec(), report));
                return Ok(false);
            }
            Ok(true)
        })?;
    }
    Ok(match witness {
        Some((coords, report)) => StrengthReport {
            bound,
            verdict: StrengthVerdict::NotStrong,
            witness_coords: Some(coords),
            witness_delta: Some(report),
        },
        None => StrengthReport {
            bound,
            verdict: StrengthVerdict::StrongUpToBound,
            witness_coords: None,
            witness_delta: None,
        },
    })
}

/// Materialize cl(C) as a generator subset: every generator whose
/// differential vanishes in Ξ(F/C).
pub fn closure_generators(f: &Arc<EFieldPresentation>, c_gens: &[usize]) -> Result<Vec<usize>> {
    let xi = DiffModule::xi_presentation(f, c_gens)?;
    let mut closed = Vec::new();
    for i in 0..f.num_gens() {
        if c_gens.contains(&i) || xi.cl_member(&f.generator(i))? {
            closed.push(i);
        }
    }
    Ok(closed)
}

/// Rank of the tuple differentials in Ξ(F/C): the pregeometry dimension
/// dim(tuple/C).
pub fn xi_rank_dim(
    f: &Arc<EFieldPresentation>,
    c_gens: &[usize],
    tuple: &[FieldElement],
) -> Result<usize> {
    let xi = DiffModule::xi_presentation(f, c_gens)?;
    let mut m = xi.rows().clone();
    let base_rank = m.rank();
    for t in tuple {
        m.push_row(xi.differential_coords(t)?);
    }
    Ok(m.rank() - base_rank)
}

/// The Ax-corollary inequality δ(tuple/C′) ≥ dim(tuple/C′), with
/// C′ = cl(C) materialized first so the hypothesis of the corollary
/// holds.
pub fn ax_inequality_check(
    f: &Arc<EFieldPresentation>,
    c_gens: &[usize],
    tuple: &[FieldElement],
) -> Result<AxInequalityReport> {
    let closed = closure_generators(f, c_gens)?;
    let dim = xi_rank_dim(f, &closed, tuple)?;
    let delta = f.delta(tuple, &closed)?.delta;
    Ok(AxInequalityReport {
        closed_over: closed,
        delta,
        dim,
        holds: delta >= dim as i64,
    })
}

/// dim(tuple) as the minimum of δ(tuple·ȳ/cl(∅)) over bounded spans ȳ,
/// cross-checked against the Ξ-rank dimension. A disagreement means the
/// bound was too small and is reported as an error, never accepted.
pub fn dim_via_min_delta(
    f: &Arc<EFieldPresentation>,
    tuple: &[FieldElement],
    bound: u32,
) -> Result<usize> {
    let c0 = closure_generators(f, &[])?;
    let xi_dim = xi_rank_dim(f, &c0, tuple)?;
    let mut min = f.delta(tuple, &c0)?.delta;
    let basis: Vec<usize> = f
        .a_list()
        .into_iter()
        .filter(|a| !c0.contains(a))
        .collect();
    if !basis.is_empty() {
        let vectors = primitive_vectors(basis.len(), bound);
        for_each_subspace(&vectors, basis.len(), |rows| {
            let mut joint = tuple.to_vec();
            joint.extend(span_tuple(f, &basis, rows));
            let d = f.delta(&joint, &c0)?.delta;
            if d < min {
                min = d;
            }
            Ok(true)
        })?;
    }
    if min != xi_dim as i64 {
        return Err(Error::DimMismatch {
            min,
            xi: xi_dim,
        });
    }
    Ok(xi_dim)
}

/// Decompose a strong extension over its base into a finite chain, each
/// step adjoining one remaining graph element together with a
/// δ-minimizing companion set; every step is re-verified strong.
pub fn decompose_chain(
    f: &Arc<EFieldPresentation>,
    bound: u32,
) -> Result<Vec<Arc<EFieldPresentation>>> {
    let strength = is_strong(f, bound)?;
    if strength.verdict != StrengthVerdict::StrongUpToBound {
        return Err(Error::Input(
            "chain decomposition requires a strong extension".into(),
        ));
    }
    if !f.egg() {
        return Err(Error::EggRequired);
    }
    let mut current: Vec<usize> = f.base_gens().to_vec();
    let mut chain = vec![make_stage(f, &current, f.base_gens())?];
    let new_basis: Vec<usize> = f
        .a_list()
        .into_iter()
        .filter(|a| !current.contains(a))
        .collect();
    for &r in &new_basis {
        if current.contains(&r) {
            continue; // already swept in by an earlier companion set
        }
        let remaining: Vec<usize> = new_basis
            .iter()
            .cloned()
            .filter(|a| !current.contains(a) && *a != r)
            .collect();
        // choose the subset x̄ ∋ r of remaining graph elements with
        // minimal δ(x̄/current); ties go to the earliest (smallest,
        // lexicographically least) subset
        let mut best: Option<(i64, Vec<usize>)> = None;
        for mask in 0..(1u32 << remaining.len()) {
            let mut subset = vec![r];
            for (j, &a) in remaining.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    subset.push(a);
                }
            }
            subset.sort_unstable();
            let tuple: Vec<FieldElement> = subset.iter().map(|&a| f.generator(a)).collect();
            let d = f.delta(&tuple, &current)?.delta;
            let better = match &best {
                None => true,
                Some((bd, bs)) => d < *bd || (d == *bd && subset.len() < bs.len()),
            };
            if better {
                best = Some((d, subset));
            }
        }
        let (_, subset) = best.unwrap();
        let prev = current.clone();
        for &a in &subset {
            if !current.contains(&a) {
                current.push(a);
            }
            let e = f.partner_of(a).unwrap();
            if !current.contains(&e) {
                current.push(e);
            }
        }
        current.sort_unstable();
        let stage = make_stage(f, &current, &prev)?;
        // re-verify the step is strong inside the ambient presentation
        let step = is_strong_over_subset(f, &prev, &current, bound)?;
        if step != StrengthVerdict::StrongUpToBound {
            return Err(Error::Input(
                "chain step failed strength re-verification".into(),
            ));
        }
        chain.push(stage);
    }
    Ok(chain)
}

/// Strength of `upper` over `lower` measured inside the ambient
/// presentation: candidate spans range over the graph elements of
/// `upper` outside `lower`.
fn is_strong_over_subset(
    f: &Arc<EFieldPresentation>,
    lower: &[usize],
    upper: &[usize],
    bound: u32,
) -> Result<StrengthVerdict> {
    let basis: Vec<usize> = f
        .a_list()
        .into_iter()
        .filter(|a| upper.contains(a) && !lower.contains(a))
        .collect();
    if basis.is_empty() {
        return Ok(StrengthVerdict::StrongUpToBound);
    }
    let vectors = primitive_vectors(basis.len(), bound);
    let mut verdict = StrengthVerdict::StrongUpToBound;
    for_each_subspace(&vectors, basis.len(), |rows| {
        let tuple = span_tuple(f, &basis, rows);
        if f.delta(&tuple, lower)?.delta < 0 {
            verdict = StrengthVerdict::NotStrong;
            return Ok(false);
        }
        Ok(true)
    })?;
    Ok(verdict)
}

/// The sub-presentation on `gens` with its base re-pointed at `lower`.
fn make_stage(
    f: &Arc<EFieldPresentation>,
    gens: &[usize],
    lower: &[usize],
) -> Result<Arc<EFieldPresentation>> {
    let sub = f.sub_presentation(gens)?;
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let base: Vec<usize> = lower
        .iter()
        .filter_map(|l| sorted.iter().position(|g| g == l))
        .collect();
    EFieldPresentation::new(
        sub.name.clone(),
        sub.names().to_vec(),
        sub.relations().clone(),
        sub.exp_graph().to_vec(),
        base,
        sub.egg(),
        f.config().clone(),
    )
}

/// Is the tuple δ-minimal within its own Q-span? Predimensions are
/// taken over the declared base. When the tuple is essential with
/// δ < 0, additionally assert that every entry lies in cl(∅).
pub fn essential_check(
    f: &Arc<EFieldPresentation>,
    tuple: &[FieldElement],
    bound: u32,
) -> Result<EssentialReport> {
    let over = f.base_gens().to_vec();
    let delta_a = f.delta(tuple, &over)?.delta;
    let k = tuple.len();
    let full_rank = f.ldim_q(tuple, &[])?;
    let mut counter: Option<(Vec<Vec<i64>>, i64)> = None;
    if k > 0 && full_rank > 0 {
        let vectors = primitive_vectors(k, bound);
        for_each_subspace(&vectors, full_rank - 1, |rows| {
            // combine the tuple entries themselves
            let cs: Vec<FieldElement> = rows
                .iter()
                .map(|row| {
                    let mut acc = FieldElement::zero(f.ctx().clone());
                    for (j, &mj) in row.iter().enumerate() {
                        acc = acc.add(&tuple[j].scale(&rat(mj)));
                    }
                    acc
                })
                .collect();
            let d = f.delta(&cs, &over)?.delta;
            if d < delta_a {
                counter = Some((rows.to_vec(), d));
                return Ok(false);
            }
            Ok(true)
        })?;
    }
    Ok(match counter {
        Some((coords, d)) => EssentialReport {
            bound,
            delta_a,
            verdict: EssentialVerdict::NotEssential,
            counter_coords: Some(coords),
            counter_delta: Some(d),
            closure_assertion: None,
        },
        None => {
            let closure_assertion = if delta_a < 0 {
                let xi = DiffModule::xi_presentation(f, &[])?;
                let mut all = true;
                for t in tuple {
                    all &= xi.cl_member(t)?;
                }
                Some(all)
            } else {
                None
            };
            EssentialReport {
                bound,
                delta_a,
                verdict: EssentialVerdict::EssentialUpToBound,
                counter_coords: None,
                counter_delta: None,
                closure_assertion,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{GroebnerConfig, Ideal};
    use crate::poly::Poly;

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

    fn free2_pres() -> Arc<EFieldPresentation> {
        EFieldPresentation::new(
            "free2",
            vec!["x".into(), "ex".into(), "y".into(), "ey".into()],
            Ideal::zero(4),
            vec![(0, 1), (2, 3)],
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
    fn primitive_vector_enumeration() {
        let v = primitive_vectors(1, 2);
        assert_eq!(v, vec![vec![1]]);
        let v2 = primitive_vectors(2, 1);
        // (0,1), (1,−1), (1,0), (1,1) after normalization
        assert_eq!(v2.len(), 4);
    }

    #[test]
    fn analogue_is_not_strong() {
        let f = anchor_pres();
        let r = is_strong(&f, 3).unwrap();
        assert_eq!(r.verdict, StrengthVerdict::NotStrong);
        assert_eq!(r.witness_coords, Some(vec![vec![1]]));
        assert_eq!(r.witness_delta.unwrap().delta, -1);
    }

    #[test]
    fn free_is_strong() {
        let f = free_pres();
        let r = is_strong(&f, 3).unwrap();
        assert_eq!(r.verdict, StrengthVerdict::StrongUpToBound);
        // trivial extension: base = everything
        let sub = f.sub_presentation(&[0, 1]).unwrap();
        let trivial = EFieldPresentation::new(
            "triv",
            sub.names().to_vec(),
            sub.relations().clone(),
            sub.exp_graph().to_vec(),
            vec![0, 1],
            true,
            cfg(),
        )
        .unwrap();
        assert_eq!(
            is_strong(&trivial, 3).unwrap().verdict,
            StrengthVerdict::StrongUpToBound
        );
    }

    #[test]
    fn ax_inequality_free_and_analogue() {
        let f = free_pres();
        let r = ax_inequality_check(&f, &[], &[f.generator(0)]).unwrap();
        assert_eq!((r.delta, r.dim, r.holds), (1, 1, true));
        // analogue: cl(base) swallows x and E, so δ(x/C′) = 0 ≥ dim = 0
        let pa = anchor_pres();
        let r2 = ax_inequality_check(&pa, &[0, 1], &[pa.generator(2)]).unwrap();
        assert!(r2.closed_over.contains(&2));
        assert_eq!((r2.delta, r2.dim, r2.holds), (0, 0, true));
        // empty tuple
        let r3 = ax_inequality_check(&f, &[], &[]).unwrap();
        assert_eq!((r3.delta, r3.dim, r3.holds), (0, 0, true));
    }

    #[test]
    fn dim_free_generator_is_one() {
        let f = free_pres();
        assert_eq!(dim_via_min_delta(&f, &[f.generator(0)], 2).unwrap(), 1);
        assert_eq!(dim_via_min_delta(&f, &[], 2).unwrap(), 0);
    }

    #[test]
    fn dim_analogue_is_zero() {
        let f = anchor_pres();
        assert_eq!(dim_via_min_delta(&f, &[f.generator(2)], 2).unwrap(), 0);
    }

    #[test]
    fn chain_two_free_generators() {
        let f = free2_pres();
        let chain = decompose_chain(&f, 2).unwrap();
        // Q = G₀ ◁ G₁ ◁ G₂ with one exponential pair per step
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[0].num_gens(), 0);
        assert_eq!(chain[1].num_gens(), 2);
        assert_eq!(chain[2].num_gens(), 4);
    }

    #[test]
    fn chain_trivial_extension_is_base_only() {
        let f = free_pres();
        let sub = f.sub_presentation(&[0, 1]).unwrap();
        let trivial = EFieldPresentation::new(
            "triv",
            sub.names().to_vec(),
            sub.relations().clone(),
            sub.exp_graph().to_vec(),
            vec![0, 1],
            true,
            cfg(),
        )
        .unwrap();
        let chain = decompose_chain(&trivial, 2).unwrap();
        assert_eq!(chain.len(), 1);
    }

    #[test]
    fn chain_rejects_non_strong() {
        let f = anchor_pres();
        assert!(decompose_chain(&f, 2).is_err());
    }

    #[test]
    fn essential_analogue_negative_tuple() {
        let f = anchor_pres();
        let r = essential_check(&f, &[f.generator(2)], 2).unwrap();
        assert_eq!(r.delta_a, -1);
        assert_eq!(r.verdict, EssentialVerdict::EssentialUpToBound);
        assert_eq!(r.closure_assertion, Some(true));
    }

    #[test]
    fn essential_free_generator() {
        let f = free_pres();
        let r = essential_check(&f, &[f.generator(0)], 2).unwrap();
        assert_eq!(r.delta_a, 1);
        assert_eq!(r.verdict, EssentialVerdict::EssentialUpToBound);
        assert_eq!(r.closure_assertion, None);
    }

    #[test]
    fn non_essential_pair_detected() {
        // b free exponential, a with δ(a) = −1: δ(a, b) = 0 but the
        // sub-span (a) has δ = −1 < 0, so (a, b) is not essential
        let n = 6; // r, a, E, b, eb  -- with a² + 1 = 0, E² − r = 0
        let a2p1 = Poly::var(n, 1).pow(2).add(&Poly::one(n));
        let e2mr = Poly::var(n, 2).pow(2).sub(&Poly::var(n, 0));
        let f = EFieldPresentation::new(
            "pair",
            vec![
                "r".into(),
                "a".into(),
                "E".into(),
                "b".into(),
                "eb".into(),
                "s".into(),
            ],
            Ideal::new(n, vec![a2p1, e2mr]),
            vec![(1, 2), (3, 4)],
            vec![0, 5],
            true,
            cfg(),
        )
        .unwrap();
        let tuple = vec![f.generator(1), f.generator(3)];
        let r = essential_check(&f, &tuple, 2).unwrap();
        assert_eq!(r.verdict, EssentialVerdict::NotEssential);
        assert_eq!(r.counter_coords, Some(vec![vec![1, 0]]));
        assert!(r.counter_delta.unwrap() < r.delta_a);
    }

    #[test]
    fn strength_transitivity_on_chain() {
        // composite of the chain steps is strong: verify G₀ ◁ G₂ directly
        let f = free2_pres();
        let chain = decompose_chain(&f, 2).unwrap();
        let last = chain.last().unwrap();
        let r = is_strong_over(last, &[], 2).unwrap();
        assert_eq!(r.verdict, StrengthVerdict::StrongUpToBound);
    }
}
