//! Candidate enumeration, isomorphism deduplication and classification.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::Algebra;
use crate::envelopes::{injective_envelope, projective_cover, verify_envelope, AlgebraContext};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::invariance::{ModuleVerdicts, Verdict};
use crate::mat::{self, Mat};
use crate::modrep::{
    decompose, end_ring, goldie_dimension, is_isomorphic, radical_submodule, socle, submodules,
    ModuleRep,
};
use crate::oracle;
use crate::par;
use crate::subspace::Subspace;

/// Bound on `q^max_dim` for searches.
pub const SEARCH_CAP: u128 = 1 << 16;

/// A module produced by an enumeration, with a note on where it came from.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub origin: String,
    pub module: ModuleRep,
}

/// Matrix size and field order of one block of `End(M)/J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockShape {
    pub n: usize,
    pub q: u64,
}

/// A map refuting one of the four stability properties: an endomorphism (an
/// automorphism when `automorphism` is set) of `outer` that moves `subspace`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub property: String,
    pub automorphism: bool,
    pub outer: Vec<Vec<Vec<Scalar>>>,
    pub subspace: Vec<Vec<Scalar>>,
    pub map: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    /// SHA-256 of the module's action matrices.
    pub id: String,
    pub origin: String,
    pub dim: usize,
    pub action: Vec<Vec<Vec<Scalar>>>,
    pub indecomposable: bool,
    pub quasi_injective: bool,
    pub automorphism_invariant: bool,
    pub quasi_projective: bool,
    pub automorphism_coinvariant: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pseudo_injective: Option<bool>,
    pub end_dim: usize,
    pub end_blocks: Vec<BlockShape>,
    pub end_f2_quotients: usize,
    /// Dimensions of the simple summands of the socle, ascending.
    pub socle_dims: Vec<usize>,
    pub goldie_dimension: usize,
    pub envelope_dim: usize,
    pub envelope_summands: usize,
    pub cover_dim: usize,
    pub cover_summands: usize,
    pub witnesses: Vec<Witness>,
}

/// Property names used in witnesses.
pub const PROPERTIES: [&str; 4] = [
    "quasi_injective",
    "automorphism_invariant",
    "quasi_projective",
    "automorphism_coinvariant",
];

fn action_rows(m: &ModuleRep) -> Vec<Vec<Vec<Scalar>>> {
    m.action().iter().map(Mat::to_rows).collect()
}

fn module_from_rows(
    alg: &Arc<Algebra>,
    dim: usize,
    action: &[Vec<Vec<Scalar>>],
) -> Result<ModuleRep> {
    let mats = action
        .iter()
        .map(|rows| Mat::from_rows(dim, dim, rows))
        .collect::<Result<Vec<_>>>()?;
    ModuleRep::new(alg.clone(), mats)
}

/// Hex SHA-256 of `q`, the dimension and the action matrices.
pub fn canonical_hash(m: &ModuleRep) -> String {
    let mut h = Sha256::new();
    h.update(format!("q={};dim={};", m.field().q(), m.dim()));
    for a in m.action() {
        for r in 0..a.rows() {
            let row: Vec<String> = a.row(r).iter().map(|x| x.to_string()).collect();
            h.update(row.join(","));
            h.update(";");
        }
        h.update("|");
    }
    hex::encode(h.finalize())
}

impl Witness {
    fn new(
        property: &str,
        automorphism: bool,
        outer: &ModuleRep,
        subspace: &Subspace,
        map: &Mat,
    ) -> Self {
        Self {
            property: property.into(),
            automorphism,
            outer: action_rows(outer),
            subspace: subspace.basis().to_rows(),
            map: map.to_rows(),
        }
    }

    /// Re-check the witness by direct matrix arithmetic.
    pub fn verify(&self, alg: &Arc<Algebra>) -> Result<()> {
        let f = alg.field();
        let dim = self.map.len();
        let outer = module_from_rows(alg, dim, &self.outer)?;
        let map = Mat::from_rows(dim, dim, &self.map)?;
        let space = Subspace::from_vectors(dim, &self.subspace, f);
        let fail = |what: &str| {
            Err(Error::Invariant(format!(
                "{} witness: {what}",
                self.property
            )))
        };
        if !outer.is_hom_to(&outer, &map) {
            return fail("not an endomorphism");
        }
        if self.automorphism && !mat::is_invertible(&map, f) {
            return fail("not an automorphism");
        }
        let moved =
            (0..space.dim()).any(|r| !space.contains(&map.left_apply(space.basis().row(r), f), f));
        if !moved {
            return fail("does not move the subspace");
        }
        Ok(())
    }
}

impl ClassificationRecord {
    fn flag(&self, property: &str) -> bool {
        match property {
            "quasi_injective" => self.quasi_injective,
            "automorphism_invariant" => self.automorphism_invariant,
            "quasi_projective" => self.quasi_projective,
            _ => self.automorphism_coinvariant,
        }
    }

    /// Rebuild the module, check the hash and re-verify every witness; each
    /// negative flag must carry exactly one witness.
    pub fn audit(&self, alg: &Arc<Algebra>) -> Result<()> {
        let m = module_from_rows(alg, self.dim, &self.action)?;
        if canonical_hash(&m) != self.id {
            return Err(Error::Invariant(format!(
                "record {} does not match its hash",
                self.id
            )));
        }
        for property in PROPERTIES {
            let count = self
                .witnesses
                .iter()
                .filter(|w| w.property == property)
                .count();
            if count != usize::from(!self.flag(property)) {
                return Err(Error::Invariant(format!(
                    "record {}: {property} witness count is {count}",
                    self.id
                )));
            }
        }
        for w in &self.witnesses {
            w.verify(alg)?;
        }
        Ok(())
    }
}

/// Classify one module. Every envelope built along the way is re-verified.
pub fn classify(
    ctx: &AlgebraContext,
    origin: &str,
    m: &ModuleRep,
    run_oracle: bool,
) -> Result<ClassificationRecord> {
    let env = injective_envelope(ctx, m)?;
    verify_envelope(ctx, &env)?;
    let cover = projective_cover(ctx, m)?;
    let v = ModuleVerdicts::from_parts(m, &env, &cover)?;
    let end = end_ring(m)?;
    let soc = socle(m);
    let mut socle_dims: Vec<usize> = if soc.dim() == 0 {
        Vec::new()
    } else {
        decompose(&m.restrict(&soc))?
            .iter()
            .map(|s| s.module.dim())
            .collect()
    };
    socle_dims.sort_unstable();
    let pseudo_injective = if run_oracle
        && (m.field().q() as u128).saturating_pow(m.dim() as u32) <= oracle::MODULE_CAP
    {
        Some(oracle::is_pseudo_injective(m)?)
    } else {
        None
    };
    let image = env.image();
    let kernel = cover.kernel.space().clone();
    let mut witnesses = Vec::new();
    let mut push = |property: &str,
                    automorphism: bool,
                    outer: &ModuleRep,
                    space: &Subspace,
                    verdict: &Verdict| {
        if let Some(map) = &verdict.witness {
            witnesses.push(Witness::new(property, automorphism, outer, space, map));
        }
    };
    push(
        "quasi_injective",
        false,
        &env.outer,
        &image,
        &v.quasi_injective,
    );
    push(
        "automorphism_invariant",
        true,
        &env.outer,
        &image,
        &v.automorphism_invariant,
    );
    push(
        "quasi_projective",
        false,
        &cover.outer,
        &kernel,
        &v.quasi_projective,
    );
    push(
        "automorphism_coinvariant",
        true,
        &cover.outer,
        &kernel,
        &v.automorphism_coinvariant,
    );
    Ok(ClassificationRecord {
        id: canonical_hash(m),
        origin: origin.into(),
        dim: m.dim(),
        action: action_rows(m),
        indecomposable: v.indecomposable,
        quasi_injective: v.quasi_injective.holds,
        automorphism_invariant: v.automorphism_invariant.holds,
        quasi_projective: v.quasi_projective.holds,
        automorphism_coinvariant: v.automorphism_coinvariant.holds,
        pseudo_injective,
        end_dim: end.dim(),
        end_blocks: end
            .block_profile()
            .into_iter()
            .map(|(n, q)| BlockShape { n, q })
            .collect(),
        end_f2_quotients: v.end_f2_quotients,
        socle_dims,
        goldie_dimension: goldie_dimension(m),
        envelope_dim: env.outer.dim(),
        envelope_summands: v.envelope_summands,
        cover_dim: cover.outer.dim(),
        cover_summands: v.cover_summands,
        witnesses,
    })
}

fn check_search_size(ctx: &AlgebraContext, max_dim: usize) -> Result<()> {
    let size = (ctx.algebra().field().q() as u128).saturating_pow(max_dim as u32);
    if size > SEARCH_CAP {
        return Err(Error::SizeCap {
            what: "search dimension",
            size,
            cap: SEARCH_CAP,
        });
    }
    Ok(())
}

fn block_label(blocks: &[usize]) -> String {
    blocks
        .iter()
        .map(|b| format!("E{b}"))
        .collect::<Vec<_>>()
        .join("+")
}

fn sum_of_injectives(ctx: &AlgebraContext, blocks: &[usize]) -> Result<ModuleRep> {
    let parts: Vec<&ModuleRep> = blocks.iter().map(|&b| &ctx.blocks()[b].injective).collect();
    ModuleRep::direct_sum(&parts)
}

/// Nonzero submodules of dimension at most `max_dim` of every
/// multiplicity-free sum of indecomposable injectives, and every nonzero
/// quotient `eA/N` of dimension at most `max_dim`.
pub fn candidates(ctx: &AlgebraContext, max_dim: usize) -> Result<Vec<Candidate>> {
    check_search_size(ctx, max_dim)?;
    let nblocks = ctx.blocks().len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << nblocks) {
        let blocks: Vec<usize> = (0..nblocks).filter(|b| mask >> b & 1 == 1).collect();
        let e = sum_of_injectives(ctx, &blocks)?;
        let origin = format!("submodule of {}", block_label(&blocks));
        for sub in submodules(&e)? {
            if sub.dim() > 0 && sub.dim() <= max_dim {
                out.push(Candidate {
                    origin: origin.clone(),
                    module: e.restrict(&sub),
                });
            }
        }
    }
    for b in ctx.blocks() {
        let p = &b.projective;
        for sub in submodules(p)? {
            let quotient_dim = p.dim() - sub.dim();
            if quotient_dim > 0 && quotient_dim <= max_dim {
                out.push(Candidate {
                    origin: format!("quotient of P{}", b.block),
                    module: p.quotient(&sub).0,
                });
            }
        }
    }
    Ok(out)
}

/// Every module of dimension at most `max_dim`, up to isomorphism, as an
/// essential submodule of a sum of at most `max_dim` indecomposable
/// injectives (with repetition). Essential submodules of `E` are exactly the
/// preimages of submodules of `E / Soc(E)`.
pub fn all_modules(ctx: &AlgebraContext, max_dim: usize) -> Result<Vec<Candidate>> {
    check_search_size(ctx, max_dim)?;
    let simple_dims: Vec<usize> = ctx.blocks().iter().map(|b| b.simple.dim()).collect();
    let mut multisets: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((set, socle_dim)) = stack.pop() {
        let start = set.last().copied().unwrap_or(0);
        for (b, &sd) in simple_dims.iter().enumerate().skip(start) {
            let d = socle_dim + sd;
            if d <= max_dim {
                let mut next = set.clone();
                next.push(b);
                multisets.push(next.clone());
                stack.push((next, d));
            }
        }
    }
    multisets.sort();
    let mut out = Vec::new();
    for blocks in multisets {
        let e = sum_of_injectives(ctx, &blocks)?;
        let f = e.field();
        let soc = socle(&e);
        let (quotient, proj) = e.quotient(&soc);
        let origin = format!("essential in {}", block_label(&blocks));
        for sub in submodules(&quotient)? {
            if soc.dim() + sub.dim() > max_dim {
                continue;
            }
            // preimage: Soc(E) plus lifts of the quotient basis
            let lifts = mat::solve_left(&proj, sub.space().basis(), f)?
                .ok_or_else(|| Error::Invariant("quotient map is not onto".into()))?;
            let space = Subspace::from_rows(&Mat::vstack(&[soc.space().basis(), &lifts]), f);
            out.push(Candidate {
                origin: origin.clone(),
                module: e.restrict(&e.submodule(space)?),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CheapInvariants {
    dim: usize,
    socle: usize,
    radical: usize,
    end: usize,
}

/// Keep the first candidate of every isomorphism class, in input order.
pub fn dedupe(cands: Vec<Candidate>) -> Result<Vec<Candidate>> {
    let keys = par::map(&cands, |c| -> Result<CheapInvariants> {
        Ok(CheapInvariants {
            dim: c.module.dim(),
            socle: socle(&c.module).dim(),
            radical: radical_submodule(&c.module).dim(),
            end: end_ring(&c.module)?.dim(),
        })
    });
    let mut buckets: HashMap<CheapInvariants, Vec<usize>> = HashMap::new();
    let mut kept: Vec<Candidate> = Vec::new();
    for (c, key) in cands.into_iter().zip(keys) {
        let bucket = buckets.entry(key?).or_default();
        let mut duplicate = false;
        for &i in bucket.iter() {
            if is_isomorphic(&kept[i].module, &c.module)?.is_some() {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            bucket.push(kept.len());
            kept.push(c);
        }
    }
    Ok(kept)
}

/// Classified, deduplicated search results, sorted by id.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub records: Vec<ClassificationRecord>,
    pub modules: Vec<(String, ModuleRep)>,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.records).expect("records serialize");
        s.push('\n');
        s
    }

    /// Records that are automorphism-invariant but not quasi-injective.
    pub fn invariant_not_quasi_injective(&self) -> impl Iterator<Item = &ClassificationRecord> {
        self.records
            .iter()
            .filter(|r| r.automorphism_invariant && !r.quasi_injective)
    }
}

/// Classify a list of candidates after deduplication.
pub fn classify_all(
    ctx: &AlgebraContext,
    cands: Vec<Candidate>,
    run_oracle: bool,
) -> Result<SearchReport> {
    let kept = dedupe(cands)?;
    let records = par::map(&kept, |c| classify(ctx, &c.origin, &c.module, run_oracle));
    let mut paired: Vec<(ClassificationRecord, ModuleRep)> = records
        .into_iter()
        .zip(kept)
        .map(|(r, c)| r.map(|r| (r, c.module)))
        .collect::<Result<_>>()?;
    paired.sort_by(|a, b| a.0.id.cmp(&b.0.id));
    let modules = paired
        .iter()
        .map(|(r, m)| (r.id[..12].to_string(), m.clone()))
        .collect();
    Ok(SearchReport {
        records: paired.into_iter().map(|(r, _)| r).collect(),
        modules,
    })
}

/// The candidate search up to `max_dim`.
pub fn search(ctx: &AlgebraContext, max_dim: usize, run_oracle: bool) -> Result<SearchReport> {
    classify_all(ctx, candidates(ctx, max_dim)?, run_oracle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::corpus;

    #[test]
    fn first_example_search_finds_the_module() {
        let wb = corpus::ex_3_1();
        let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
        let report = search(&ctx, 5, false).unwrap();
        let m = wb.module("M").unwrap();
        let hits: Vec<_> = report
            .modules
            .iter()
            .zip(&report.records)
            .filter(|(_, r)| r.automorphism_invariant && !r.quasi_injective)
            .collect();
        assert!(!hits.is_empty());
        assert!(hits
            .iter()
            .any(|((_, x), _)| is_isomorphic(x, m).unwrap().is_some()));
        for r in &report.records {
            r.audit(&wb.algebra).unwrap();
        }
        for (i, (_, x)) in report.modules.iter().enumerate() {
            for (_, y) in &report.modules[i + 1..] {
                assert!(is_isomorphic(x, y).unwrap().is_none());
            }
        }
    }

    #[test]
    fn dual_numbers_have_no_gap() {
        let wb = corpus::load("f2_dual_numbers").unwrap();
        let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
        let report = search(&ctx, 5, true).unwrap();
        assert_eq!(report.invariant_not_quasi_injective().count(), 0);
        // k and R up to isomorphism
        let all = classify_all(&ctx, all_modules(&ctx, 3).unwrap(), true).unwrap();
        // k, R, k+k, k+R, k+k+k
        assert_eq!(all.records.len(), 5);
        assert!(all
            .records
            .iter()
            .all(|r| r.pseudo_injective == Some(r.automorphism_invariant)));
    }

    #[test]
    fn tampered_witness_fails_audit() {
        let wb = corpus::ex_3_1();
        let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
        let mut record = classify(&ctx, "M", wb.module("M").unwrap(), false).unwrap();
        record.audit(&wb.algebra).unwrap();
        let w = &mut record.witnesses[0];
        let n = w.map.len();
        w.map = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        assert!(record.audit(&wb.algebra).is_err());
    }
}
