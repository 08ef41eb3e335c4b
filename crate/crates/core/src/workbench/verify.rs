//! The reproduction suite: twelve criteria over the shipped corpus, each
//! returning a pass/fail line with a short deterministic detail string.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::corpus;
use super::format::Workbench;
use super::search::{all_modules, classify_all, search, SearchReport};
use crate::algebra::{self, boolean_two_good_split, unit_stable_subring_split, Algebra};
use crate::envelopes::{injective_envelope, projective_cover, verify_envelope, AlgebraContext};
use crate::error::{Error, Result};
use crate::field::{FiniteField, Kernel};
use crate::invariance::{
    dual_indecomposable_report, indecomposable_report, is_automorphism_coinvariant,
    is_automorphism_invariant, is_quasi_injective, is_quasi_projective, simple_summary,
    struct_decompose, theorem_suite,
};
use crate::mat::{self, Mat};
use crate::modrep::{goldie_dimension, is_essential, is_indecomposable, socle, ModuleRep};
use crate::oracle;
use crate::subspace::Subspace;

/// Largest module dimension used by the corpus searches.
pub const SEARCH_DIM: usize = 5;
/// Largest module dimension of the complete enumeration.
pub const COMPLETE_DIM: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {:>2}. {}: {}",
            self.id, self.name, self.detail
        )
    }
}

pub const CRITERIA: [&str; 12] = [
    "first example: automorphism-invariant, not quasi-injective",
    "first example: indecomposable structure",
    "second example: invariant, essential socle S1 + S2",
    "dual example: coinvariant, not quasi-projective",
    "Boolean x two-good split of semisimple rings",
    "unit-stable subring split",
    "N + L decomposition of invariant modules",
    "no F_2 quotient: invariance implies quasi-injectivity",
    "commutative algebras: invariance equals quasi-injectivity",
    "pseudo-injectivity equals invariance",
    "simple modules with End = F_2 have 2^n elements",
    "infrastructure properties",
];

/// One corpus file with its context and cached searches.
struct Entry {
    wb: Workbench,
    ctx: AlgebraContext,
    search: OnceLock<Result<SearchReport, String>>,
    complete: OnceLock<Result<SearchReport, String>>,
}

impl Entry {
    fn search(&self) -> Result<&SearchReport> {
        self.search
            .get_or_init(|| search(&self.ctx, SEARCH_DIM, false).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| Error::Invariant(e.clone()))
    }

    fn complete(&self) -> Result<&SearchReport> {
        self.complete
            .get_or_init(|| {
                all_modules(&self.ctx, COMPLETE_DIM)
                    .and_then(|c| classify_all(&self.ctx, c, true))
                    .map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(|e| Error::Invariant(e.clone()))
    }

    /// Search results followed by the complete enumeration.
    fn all_reports(&self) -> Result<[&SearchReport; 2]> {
        Ok([self.search()?, self.complete()?])
    }
}

/// Runs the criteria against the shipped corpus, sharing search results.
pub struct Verifier {
    kernel: Kernel,
    entries: BTreeMap<&'static str, Entry>,
}

fn module<'a>(wb: &'a Workbench, name: &str) -> Result<&'a ModuleRep> {
    wb.module(name)
        .ok_or_else(|| Error::Precondition(format!("{} has no module {name}", wb.name)))
}

fn check(ok: bool, what: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(what.into()))
    }
}

impl Verifier {
    pub fn new(kernel: Kernel) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for &name in corpus::NAMES {
            let wb = corpus::load(name)
                .ok_or_else(|| Error::Precondition(format!("missing corpus file {name}")))?
                .with_kernel(kernel);
            let ctx = AlgebraContext::new(wb.algebra.clone())?;
            entries.insert(
                name,
                Entry {
                    wb,
                    ctx,
                    search: OnceLock::new(),
                    complete: OnceLock::new(),
                },
            );
        }
        Ok(Self { kernel, entries })
    }

    fn entry(&self, name: &str) -> &Entry {
        &self.entries[name]
    }

    pub fn run(&self, id: usize) -> CriterionResult {
        let outcome = match id {
            1 => self.first_example(),
            2 => self.first_example_structure(),
            3 => self.second_example(),
            4 => self.dual_example(),
            5 => self.semisimple_split(),
            6 => self.unit_stable_split(),
            7 => self.struct_decomposition(),
            8 => self.no_f2_quotient(),
            9 => self.commutative(),
            10 => self.pseudo_injective(),
            11 => self.simple_cardinality(),
            12 => self.infrastructure(),
            _ => Err(Error::Precondition(format!("no criterion {id}"))),
        };
        let (passed, detail) = match outcome {
            Ok(detail) => (true, detail),
            Err(e) => (false, e.to_string()),
        };
        CriterionResult {
            id,
            name: CRITERIA
                .get(id.wrapping_sub(1))
                .copied()
                .unwrap_or("unknown"),
            passed,
            detail,
        }
    }

    pub fn run_all(&self) -> Vec<CriterionResult> {
        (1..=CRITERIA.len()).map(|id| self.run(id)).collect()
    }

    fn first_example(&self) -> Result<String> {
        let e = self.entry("ex_3_1");
        let m = module(&e.wb, "M")?;
        check(
            e.wb.algebra.dim() == 5 && m.dim() == 3,
            "unexpected dimensions",
        )?;
        let env = injective_envelope(&e.ctx, m)?;
        let ai = is_automorphism_invariant(&env)?;
        let qi = is_quasi_injective(&env)?;
        let indecomposable = is_indecomposable(m)?;
        let goldie = goldie_dimension(m);
        check(ai.holds, "M is not automorphism-invariant")?;
        check(!qi.holds && qi.witness.is_some(), "M is quasi-injective")?;
        check(indecomposable, "M decomposes")?;
        check(goldie == 2, format!("Goldie dimension {goldie}"))?;
        Ok(format!(
            "AI=true QI=false indecomposable=true goldie={goldie} dim E(M)={}",
            env.outer.dim()
        ))
    }

    fn first_example_structure(&self) -> Result<String> {
        let e = self.entry("ex_3_1");
        let env = injective_envelope(&e.ctx, module(&e.wb, "M")?)?;
        let r = indecomposable_report(&env)?;
        check(r.end_quotient_is_f2, "End(M)/J is not F_2")?;
        check(r.summands == 2, format!("E(M) has {} summands", r.summands))?;
        check(r.pairwise_non_isomorphic, "E_1 ~ E_2")?;
        check(
            r.summand_end_is_f2.iter().all(|&b| b),
            "some End(E_i)/J is not F_2",
        )?;
        check(r.passed(), format!("report fails: {r:?}"))?;
        Ok(format!(
            "End(M)/J=F_2, n={}, E_1 !~ E_2, End(E_i)/J=F_2, F_2 blocks of End(E)/J={}",
            r.summands, r.envelope_f2_blocks
        ))
    }

    fn second_example(&self) -> Result<String> {
        let e = self.entry("ex_3_2");
        let f = e.wb.field();
        let m = module(&e.wb, "M")?;
        check(
            e.wb.algebra.dim() == 4 && m.dim() == 3,
            "unexpected dimensions",
        )?;
        let env = injective_envelope(&e.ctx, m)?;
        check(
            is_automorphism_invariant(&env)?.holds,
            "M is not automorphism-invariant",
        )?;
        check(!is_quasi_injective(&env)?.holds, "M is quasi-injective")?;
        let named = |n: &str| -> Result<Subspace> {
            e.wb.submodules
                .iter()
                .find(|s| s.name == n)
                .map(|s| s.space.clone())
                .ok_or_else(|| Error::Precondition(format!("missing submodule {n}")))
        };
        let (s1, s2) = (named("S1")?, named("S2")?);
        for s in [&s1, &s2] {
            let c = m.restrict(&m.submodule(s.clone())?);
            check(c.dim() == 1 && is_indecomposable(&c)?, "S_i is not simple")?;
        }
        check(s1.intersect(&s2, f)?.is_zero(), "S1 and S2 intersect")?;
        let sum = s1.sum(&s2, f)?;
        let soc = socle(m);
        check(*soc.space() == sum, "Soc(M) != S1 + S2")?;
        check(is_essential(m, &soc), "socle is not essential")?;
        Ok("AI=true QI=false Soc(M)=S1+S2 (dim 2) essential".into())
    }

    fn dual_example(&self) -> Result<String> {
        let e = self.entry("ex_5_1");
        let cover = projective_cover(&e.ctx, module(&e.wb, "DM")?)?;
        check(
            is_automorphism_coinvariant(&cover)?.holds,
            "DM is not coinvariant",
        )?;
        check(
            !is_quasi_projective(&cover)?.holds,
            "DM is quasi-projective",
        )?;
        let r = dual_indecomposable_report(&cover)?;
        check(
            r.passed() && r.summands == 2,
            format!("report fails: {r:?}"),
        )?;
        Ok(format!(
            "coinvariant=true QP=false, n={}, P_1 !~ P_2, End(P_i)/J=F_2",
            r.summands
        ))
    }

    fn semisimple_split(&self) -> Result<String> {
        let mut elements = 0u128;
        let algebras = corpus::semisimple_algebras();
        for (name, a) in &algebras {
            let a = a.with_field(a.field().with_kernel(self.kernel));
            let dec =
                boolean_two_good_split(&a).map_err(|e| Error::Invariant(format!("{name}: {e}")))?;
            dec.verify(&a)?;
            elements += dec.boolean_part.element_count() + dec.two_good_certificate.len() as u128;
        }
        Ok(format!(
            "{} algebras, {elements} elements certified",
            algebras.len()
        ))
    }

    fn unit_stable_split(&self) -> Result<String> {
        let mut count = 0;
        for (name, s) in corpus::semisimple_algebras() {
            let s = s.with_field(s.field().with_kernel(self.kernel));
            let f = s.field().clone();
            let whole = boolean_two_good_split(&s)?;
            let s2 = Subspace::from_rows(&whole.two_good_inclusion, &f);
            if Algebra::is_zero_elem(&whole.e1) {
                continue;
            }
            // S_2 plus the diagonal of the Boolean factor, and S itself
            let diagonal = s2.sum(
                &Subspace::from_vectors(s.dim(), std::slice::from_ref(&whole.e1), &f),
                &f,
            )?;
            let mut subrings = vec![diagonal];
            if !subrings[0].is_full() {
                subrings.push(Subspace::full(s.dim()));
            }
            for t in subrings {
                let dec = unit_stable_subring_split(&s, &t)
                    .map_err(|e| Error::Invariant(format!("{name}: {e}")))?;
                dec.verify_in_subring(&s, &t)?;
                let t2 = Subspace::from_rows(&dec.two_good_inclusion, &f);
                check(t2 == s2, format!("{name}: T_2 != S_2"))?;
                count += 1;
            }
        }
        check(count >= 5, format!("only {count} subrings"))?;
        Ok(format!("{count} unit-stable subrings split with T_2 = S_2"))
    }

    fn struct_decomposition(&self) -> Result<String> {
        let mut invariant = 0;
        let mut proper_n = 0;
        for e in self.entries.values() {
            for report in e.all_reports()? {
                for ((name, m), r) in report.modules.iter().zip(&report.records) {
                    if !r.automorphism_invariant {
                        continue;
                    }
                    let env = injective_envelope(&e.ctx, m)?;
                    let dec = struct_decompose(&e.ctx, &env)?;
                    check(
                        dec.certified(),
                        format!("{}/{name}: certificates fail", e.wb.name),
                    )?;
                    invariant += 1;
                    proper_n += usize::from(!dec.n_space.is_zero());
                }
            }
        }
        Ok(format!(
            "{invariant} invariant modules split, {proper_n} with N != 0"
        ))
    }

    fn no_f2_quotient(&self) -> Result<String> {
        let mut checked = 0;
        for e in self.entries.values() {
            for report in e.all_reports()? {
                for r in &report.records {
                    if r.end_f2_quotients == 0 {
                        checked += 1;
                        check(
                            !r.automorphism_invariant || r.quasi_injective,
                            format!("{}: {} violates the implication", e.wb.name, r.id),
                        )?;
                    }
                }
                let suite = theorem_suite(&e.ctx, &report.modules)?;
                let first = suite
                    .violations()
                    .next()
                    .map(|(m, v)| format!("{}/{m}: {v}", e.wb.name));
                if let Some(msg) = first {
                    return Err(Error::Invariant(msg));
                }
            }
        }
        Ok(format!(
            "{checked} modules without F_2 quotients, 0 violations"
        ))
    }

    fn commutative(&self) -> Result<String> {
        let mut checked = 0;
        for &name in corpus::COMMUTATIVE {
            let e = self.entry(name);
            check(
                e.wb.algebra.is_commutative(),
                format!("{name} is not commutative"),
            )?;
            for report in e.all_reports()? {
                checked += report.records.len();
                if let Some(r) = report.invariant_not_quasi_injective().next() {
                    return Err(Error::Invariant(format!(
                        "{name}: {} is invariant, not quasi-injective",
                        r.id
                    )));
                }
                if let Some(r) = report
                    .records
                    .iter()
                    .find(|r| r.automorphism_coinvariant != r.quasi_projective)
                {
                    return Err(Error::Invariant(format!(
                        "{name}: {} breaks the dual statement",
                        r.id
                    )));
                }
            }
        }
        Ok(format!(
            "{} algebras, {checked} modules, 0 invariant non-quasi-injective",
            corpus::COMMUTATIVE.len()
        ))
    }

    fn pseudo_injective(&self) -> Result<String> {
        let mut checked = 0;
        let mut invariant = 0;
        for e in self.entries.values() {
            if e.wb.algebra.dim() > 5 {
                continue;
            }
            let report = e.complete()?;
            for r in &report.records {
                let oracle = r.pseudo_injective.ok_or_else(|| {
                    Error::Invariant(format!("{}: oracle skipped {}", e.wb.name, r.id))
                })?;
                check(
                    oracle == r.automorphism_invariant,
                    format!(
                        "{}: {} oracle={oracle} checker={}",
                        e.wb.name, r.id, r.automorphism_invariant
                    ),
                )?;
                checked += 1;
                invariant += usize::from(oracle);
            }
        }
        Ok(format!(
            "{checked} modules of dim <= {COMPLETE_DIM}, {invariant} invariant, all agree"
        ))
    }

    fn simple_cardinality(&self) -> Result<String> {
        let mut simples: Vec<ModuleRep> = Vec::new();
        for e in self.entries.values() {
            simples.extend(e.ctx.blocks().iter().map(|b| b.simple.clone()));
        }
        for (_, a) in corpus::semisimple_algebras() {
            let ctx = AlgebraContext::new(Arc::new(a))?;
            simples.extend(ctx.blocks().iter().map(|b| b.simple.clone()));
        }
        let mut with_f2 = 0;
        for c in &simples {
            let s = simple_summary(c)?;
            check(
                s.cardinality_matches,
                format!("simple of dim {} has the wrong size", s.dim),
            )?;
            with_f2 += usize::from(s.end_is_f2);
        }
        check(with_f2 > 0, "no simple module with End = F_2")?;
        Ok(format!(
            "{} simples, {with_f2} with End = F_2, all |C| = 2^n",
            simples.len()
        ))
    }

    fn infrastructure(&self) -> Result<String> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let fields = [
            FiniteField::gf2(),
            FiniteField::prime(3)?,
            FiniteField::new(2, 2)?,
            FiniteField::prime(5)?,
        ];
        for i in 0..200 {
            let f = &fields[i % fields.len()];
            let a = random_mat(&mut rng, f, 1..=8, 1..=8);
            let r = mat::rref(&a, f);
            check(mat::rref(&r.r, f).r == r.r, "rref is not idempotent")?;
            let b = random_mat(&mut rng, f, a.rows()..=a.rows(), a.cols()..=a.cols());
            let (u, v) = (Subspace::from_rows(&a, f), Subspace::from_rows(&b, f));
            check(
                u.sum(&v, f)?.dim() + u.intersect(&v, f)?.dim() == u.dim() + v.dim(),
                "dimension formula fails",
            )?;
        }
        let generic = FiniteField::gf2().with_kernel(Kernel::Generic);
        let packed = FiniteField::gf2().with_kernel(Kernel::BitPacked);
        for _ in 0..1000 {
            let a = random_mat(&mut rng, &generic, 1..=64, 1..=64);
            let b = random_mat(&mut rng, &generic, a.cols()..=a.cols(), 1..=64);
            let (rg, rp) = (mat::rref(&a, &generic), mat::rref(&a, &packed));
            check(
                rg.r == rp.r && rg.pivots == rp.pivots,
                "packed and generic rref differ",
            )?;
            check(
                a.mul(&b, &generic) == a.mul(&b, &packed),
                "packed and generic products differ",
            )?;
        }
        let mut algebras: Vec<Algebra> = self
            .entries
            .values()
            .map(|e| (*e.wb.algebra).clone())
            .collect();
        algebras.extend(corpus::semisimple_algebras().into_iter().map(|(_, a)| a));
        for a in &algebras {
            check(
                oracle::radical(a)? == *algebra::radical(a).space(),
                "radical disagrees with the brute-force oracle",
            )?;
        }
        let mut envelopes = 0;
        for e in self.entries.values() {
            for (_, m) in &e.wb.modules {
                verify_envelope(&e.ctx, &injective_envelope(&e.ctx, m)?)?;
                envelopes += 1;
            }
            // classification re-verifies every envelope it builds
            for report in e.all_reports()? {
                envelopes += report.records.len();
            }
        }
        Ok(format!(
            "200 rref/dimension cases, 1000 kernel cases, {} radicals, {envelopes} envelopes",
            algebras.len()
        ))
    }
}

fn random_mat(
    rng: &mut ChaCha8Rng,
    f: &FiniteField,
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
) -> Mat {
    let (r, c) = (rng.gen_range(rows), rng.gen_range(cols));
    let q = f.q();
    Mat::from_vec(r, c, (0..r * c).map(|_| rng.gen_range(0..q)).collect())
}
