//! Injective envelopes and projective covers over a finite-dimensional
//! algebra `A`.
//!
//! For each block of `A/J` pick a primitive idempotent `e`. Then `eA` is the
//! indecomposable projective with simple top `S = eA / eJ`, and the dual of
//! the left projective `Ae` is the indecomposable injective with socle `S`.

use std::sync::{Arc, OnceLock};

use crate::algebra::{
    lift_idempotent, primitive_below, semisimple_quotient, wedderburn_blocks, Algebra, Elem,
};
use crate::error::{Error, Result};
use crate::mat::{self, Mat};
use crate::modrep::{
    self, decompose, hom, is_isomorphic, radical_submodule, socle, submodules, top, ModuleRep,
    Submodule,
};
use crate::subspace::Subspace;

/// The projective, injective and simple module attached to one block of `A/J`.
#[derive(Clone, Debug)]
pub struct BlockModules {
    pub block: usize,
    pub idempotent: Elem,
    /// `eA`.
    pub projective: ModuleRep,
    /// `D(Ae)`.
    pub injective: ModuleRep,
    /// `top(eA) = Soc(D(Ae))`.
    pub simple: ModuleRep,
}

/// Per-algebra data shared by envelope and cover computations.
pub struct AlgebraContext {
    alg: Arc<Algebra>,
    op: Arc<Algebra>,
    blocks: Vec<BlockModules>,
    right_ideals: OnceLock<Result<Vec<(Submodule, ModuleRep)>, String>>,
}

impl std::fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraContext")
            .field("blocks", &self.blocks.len())
            .finish()
    }
}

impl AlgebraContext {
    pub fn new(alg: Arc<Algebra>) -> Result<Self> {
        let op = Arc::new(alg.opposite());
        Self::with_opposite(alg, op)
    }

    fn with_opposite(alg: Arc<Algebra>, op: Arc<Algebra>) -> Result<Self> {
        let quotient = semisimple_quotient(&alg);
        let blocks = wedderburn_blocks(&quotient.algebra)?;
        let regular = ModuleRep::regular(alg.clone());
        let regular_op = ModuleRep::regular(op.clone());
        let mut out = Vec::with_capacity(blocks.len());
        for (index, b) in blocks.iter().enumerate() {
            let bar = primitive_below(&quotient.algebra, &b.idempotent)?;
            let e = lift_idempotent(&alg, &quotient.lift(&bar))?;
            let projective = regular.restrict(&regular.generated(std::slice::from_ref(&e)));
            let left = regular_op.restrict(&regular_op.generated(std::slice::from_ref(&e)));
            let injective = left.dual_over(alg.clone());
            let (simple, _) = top(&projective);
            if simple.dim() != b.n * b.center_degree {
                return Err(Error::Invariant(
                    "top of an indecomposable projective is not simple".into(),
                ));
            }
            out.push(BlockModules {
                block: index,
                idempotent: e,
                projective,
                injective,
                simple,
            });
        }
        Ok(Self {
            alg,
            op,
            blocks: out,
            right_ideals: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn opposite_algebra(&self) -> &Arc<Algebra> {
        &self.op
    }

    /// The context of the opposite algebra, sharing both handles.
    pub fn opposite(&self) -> Result<AlgebraContext> {
        Self::with_opposite(self.op.clone(), self.alg.clone())
    }

    pub fn blocks(&self) -> &[BlockModules] {
        &self.blocks
    }

    /// `dual(M)` over the shared opposite handle.
    pub fn dual(&self, m: &ModuleRep) -> ModuleRep {
        m.dual_over(self.op.clone())
    }

    /// Which block's simple module is isomorphic to the simple `c`.
    pub fn simple_index(&self, c: &ModuleRep) -> Result<usize> {
        for b in &self.blocks {
            if b.simple.dim() == c.dim() && hom(c, &b.simple)?.dim() > 0 {
                return Ok(b.block);
            }
        }
        Err(Error::Invariant("simple module matches no block".into()))
    }

    fn right_ideals(&self) -> Result<&[(Submodule, ModuleRep)]> {
        let cached = self.right_ideals.get_or_init(|| {
            let regular = ModuleRep::regular(self.alg.clone());
            submodules(&regular)
                .map(|subs| {
                    subs.into_iter()
                        .map(|s| {
                            let m = regular.restrict(&s);
                            (s, m)
                        })
                        .collect()
                })
                .map_err(|e| e.to_string())
        });
        cached
            .as_deref()
            .map_err(|e| Error::Precondition(e.clone()))
    }
}

/// The indecomposable injectives, one per block of `A/J`.
pub fn indecomposable_injectives(ctx: &AlgebraContext) -> Vec<ModuleRep> {
    ctx.blocks.iter().map(|b| b.injective.clone()).collect()
}

/// Outcome of Baer's test, with a non-extending map when it fails.
#[derive(Clone, Debug)]
pub struct BaerCertificate {
    pub injective: bool,
    /// A right ideal `I` and a hom `I -> M` (in the ideal's basis) that does
    /// not extend to `A`.
    pub witness: Option<(Subspace, Mat)>,
}

/// Baer's criterion over the enumerated right ideals: restriction
/// `Hom(A, M) -> Hom(I, M)` must be onto for every right ideal `I`.
pub fn baer_test(ctx: &AlgebraContext, m: &ModuleRep) -> Result<BaerCertificate> {
    let f = m.field();
    let regular = ModuleRep::regular(ctx.alg.clone());
    let from_a = hom(&regular, m)?;
    for (ideal, ideal_module) in ctx.right_ideals()? {
        let target = hom(ideal_module, m)?;
        if target.dim() == 0 {
            continue;
        }
        let restricted: Vec<Vec<u32>> = from_a
            .basis()
            .iter()
            .map(|h| ideal.inclusion().mul(h, f).flatten())
            .collect();
        let image = Subspace::from_vectors(ideal_module.dim() * m.dim(), &restricted, f);
        if image.dim() < target.dim() {
            let missing = target
                .basis()
                .iter()
                .find(|g| !image.contains(&g.flatten(), f))
                .expect("a basis element lies outside a smaller image")
                .clone();
            return Ok(BaerCertificate {
                injective: false,
                witness: Some((ideal.space().clone(), missing)),
            });
        }
    }
    Ok(BaerCertificate {
        injective: true,
        witness: None,
    })
}

pub fn is_injective(ctx: &AlgebraContext, m: &ModuleRep) -> Result<bool> {
    Ok(baer_test(ctx, m)?.injective)
}

/// `u : M -> E` with `E` injective and `u(M)` essential.
#[derive(Clone, Debug)]
pub struct EmbeddedModule {
    pub inner: ModuleRep,
    pub outer: ModuleRep,
    pub embedding: Mat,
    /// Block index of each indecomposable summand of `outer`, in order.
    pub summand_blocks: Vec<usize>,
    /// The summands as subspaces of `outer`.
    pub summands: Vec<Submodule>,
}

impl EmbeddedModule {
    pub fn image(&self) -> Subspace {
        Subspace::from_rows(&self.embedding, self.inner.field())
    }

    /// The module viewed as its own envelope.
    pub fn identity(m: &ModuleRep) -> Self {
        Self {
            inner: m.clone(),
            outer: m.clone(),
            embedding: Mat::identity(m.dim()),
            summand_blocks: Vec::new(),
            summands: Vec::new(),
        }
    }

    pub fn summand_modules(&self) -> Vec<ModuleRep> {
        self.summands
            .iter()
            .map(|s| self.outer.restrict(s))
            .collect()
    }
}

fn block_offsets(dims: &[usize]) -> Vec<usize> {
    let mut offs = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for d in dims {
        offs.push(acc);
        acc += d;
    }
    offs
}

fn coordinate_block(total: usize, off: usize, len: usize) -> Submodule {
    let mut basis = Mat::zeros(len, total);
    for i in 0..len {
        basis.set(i, off + i, 1);
    }
    Submodule::from_canonical(Subspace::from_echelon(basis, (off..off + len).collect()))
}

/// `E(M) = (+) E(C_i)` over the simple summands `C_i` of the socle.
pub fn injective_envelope(ctx: &AlgebraContext, m: &ModuleRep) -> Result<EmbeddedModule> {
    let f = m.field();
    let soc = socle(m);
    let soc_module = m.restrict(&soc);
    let simples = if soc_module.dim() == 0 {
        Vec::new()
    } else {
        decompose(&soc_module)?
    };
    let mut blocks_used = Vec::with_capacity(simples.len());
    let mut pieces = Vec::with_capacity(simples.len());
    for c in &simples {
        let i = ctx.simple_index(&c.module)?;
        let injective = &ctx.blocks[i].injective;
        let maps = hom(&c.module, injective)?;
        let phi = maps
            .basis()
            .first()
            .ok_or_else(|| Error::Invariant("simple does not embed in its injective hull".into()))?
            .clone();
        blocks_used.push(i);
        pieces.push(phi);
    }
    let outers: Vec<&ModuleRep> = blocks_used
        .iter()
        .map(|&i| &ctx.blocks[i].injective)
        .collect();
    let outer = if outers.is_empty() {
        ModuleRep::zero(ctx.alg.clone())
    } else {
        ModuleRep::direct_sum(&outers)?
    };
    let dims: Vec<usize> = outers.iter().map(|e| e.dim()).collect();
    let offs = block_offsets(&dims);

    // socle coordinates -> summand coordinates -> E
    let q = Mat::vstack(
        &simples
            .iter()
            .map(|s| s.sub.inclusion())
            .collect::<Vec<_>>(),
    );
    let mut phi = Mat::zeros(soc.dim(), outer.dim());
    let mut row = 0;
    for (k, p) in pieces.iter().enumerate() {
        for r in 0..p.rows() {
            for c in 0..p.cols() {
                phi.set(row + r, offs[k] + c, p.get(r, c));
            }
        }
        row += p.rows();
    }
    let u_soc = if soc.dim() == 0 {
        Mat::zeros(0, outer.dim())
    } else {
        mat::inverse(&q, f)
            .ok_or_else(|| Error::Invariant("socle summands do not span".into()))?
            .mul(&phi, f)
    };

    // extend along Soc(M) -> M: find U in Hom(M, E) with B U = u_soc
    let maps = hom(m, &outer)?;
    let embedding = if maps.dim() == 0 {
        Mat::zeros(m.dim(), outer.dim())
    } else {
        let b = soc.inclusion();
        let rows: Vec<Vec<u32>> = maps.basis().iter().map(|h| b.mul(h, f).flatten()).collect();
        let system = Mat::from_rows(rows.len(), soc.dim() * outer.dim(), &rows)?;
        let coeffs =
            mat::solve_left(&system, &Mat::row_vector(&u_soc.flatten()), f)?.ok_or_else(|| {
                Error::Invariant("socle embedding does not extend to the module".into())
            })?;
        maps.combine(coeffs.row(0))
    };
    if mat::rank(&embedding, f) != m.dim() {
        return Err(Error::Invariant("envelope map is not injective".into()));
    }
    let summands = offs
        .iter()
        .zip(&dims)
        .map(|(&o, &d)| coordinate_block(outer.dim(), o, d))
        .collect();
    Ok(EmbeddedModule {
        inner: m.clone(),
        outer,
        embedding,
        summand_blocks: blocks_used,
        summands,
    })
}

/// `p : P -> M` onto, `P` projective, `ker p` superfluous.
#[derive(Clone, Debug)]
pub struct CoveredModule {
    pub inner: ModuleRep,
    pub outer: ModuleRep,
    pub projection: Mat,
    pub kernel: Submodule,
    pub summand_blocks: Vec<usize>,
    pub summands: Vec<Submodule>,
}

impl CoveredModule {
    pub fn summand_modules(&self) -> Vec<ModuleRep> {
        self.summands
            .iter()
            .map(|s| self.outer.restrict(s))
            .collect()
    }
}

/// `P = (+) e_i A` over the simple summands of `top(M)`.
pub fn projective_cover(ctx: &AlgebraContext, m: &ModuleRep) -> Result<CoveredModule> {
    let f = m.field();
    let (t, proj) = top(m);
    let simples = if t.dim() == 0 {
        Vec::new()
    } else {
        decompose(&t)?
    };
    let mut blocks_used = Vec::with_capacity(simples.len());
    let mut pieces = Vec::with_capacity(simples.len());
    for s in &simples {
        let i = ctx.simple_index(&s.module)?;
        let p = &ctx.blocks[i].projective;
        let g = hom(p, &s.module)?
            .basis()
            .first()
            .ok_or_else(|| Error::Invariant("projective does not map onto its top".into()))?
            .clone();
        // into top coordinates
        pieces.push(g.mul(s.sub.inclusion(), f));
        blocks_used.push(i);
    }
    let outers: Vec<&ModuleRep> = blocks_used
        .iter()
        .map(|&i| &ctx.blocks[i].projective)
        .collect();
    let outer = if outers.is_empty() {
        ModuleRep::zero(ctx.alg.clone())
    } else {
        ModuleRep::direct_sum(&outers)?
    };
    let psi = if pieces.is_empty() {
        Mat::zeros(0, t.dim())
    } else {
        Mat::vstack(&pieces.iter().collect::<Vec<_>>())
    };
    let maps = hom(&outer, m)?;
    let projection = if outer.dim() == 0 {
        Mat::zeros(0, m.dim())
    } else {
        let rows: Vec<Vec<u32>> = maps
            .basis()
            .iter()
            .map(|h| h.mul(&proj, f).flatten())
            .collect();
        let system = Mat::from_rows(rows.len(), outer.dim() * t.dim(), &rows)?;
        let coeffs = mat::solve_left(&system, &Mat::row_vector(&psi.flatten()), f)?
            .ok_or_else(|| Error::Invariant("top map does not lift to the module".into()))?;
        maps.combine(coeffs.row(0))
    };
    if mat::rank(&projection, f) != m.dim() {
        return Err(Error::Invariant("cover map is not onto".into()));
    }
    let kernel = outer.submodule(mat::left_nullspace(&projection, f))?;
    let pj = radical_submodule(&outer);
    if !pj.space().contains_subspace(kernel.space(), f)? {
        return Err(Error::Invariant(
            "cover kernel is not contained in PJ".into(),
        ));
    }
    let dims: Vec<usize> = outers.iter().map(|e| e.dim()).collect();
    let summands = block_offsets(&dims)
        .iter()
        .zip(&dims)
        .map(|(&o, &d)| coordinate_block(outer.dim(), o, d))
        .collect();
    Ok(CoveredModule {
        inner: m.clone(),
        outer,
        projection,
        kernel,
        summand_blocks: blocks_used,
        summands,
    })
}

/// `D(E(M)) ~ P(D(M))` over the opposite algebra.
#[derive(Clone, Debug)]
pub struct DualExchange {
    pub holds: bool,
    pub witness: Option<Mat>,
    pub envelope_dim: usize,
    pub cover_dim: usize,
}

pub fn dual_exchange_check(
    ctx: &AlgebraContext,
    op_ctx: &AlgebraContext,
    m: &ModuleRep,
) -> Result<DualExchange> {
    let env = injective_envelope(ctx, m)?;
    let dual_env = ctx.dual(&env.outer);
    let cover = projective_cover(op_ctx, &ctx.dual(m))?;
    let witness = is_isomorphic(&dual_env, &cover.outer)?;
    Ok(DualExchange {
        holds: witness.is_some(),
        witness,
        envelope_dim: env.outer.dim(),
        cover_dim: cover.outer.dim(),
    })
}

/// Re-verify the envelope invariants: `u` an injective intertwiner, `u(M)`
/// essential, `Soc(E) = u(Soc M)`, `E` injective by Baer's test.
pub fn verify_envelope(ctx: &AlgebraContext, env: &EmbeddedModule) -> Result<()> {
    let f = env.inner.field();
    let fail = |what: &str| Err(Error::Invariant(format!("envelope: {what}")));
    if !env.inner.is_hom_to(&env.outer, &env.embedding)
        || mat::rank(&env.embedding, f) != env.inner.dim()
    {
        return fail("embedding is not an injective homomorphism");
    }
    let image = env.image();
    let soc_e = socle(&env.outer);
    if !image.contains_subspace(soc_e.space(), f)? {
        return fail("image is not essential");
    }
    let soc_m = socle(&env.inner);
    if soc_m.space().image(&env.embedding, f) != *soc_e.space() {
        return fail("socle is not preserved");
    }
    if !is_injective(ctx, &env.outer)? {
        return fail("outer module fails Baer's test");
    }
    Ok(())
}

pub use modrep::goldie_dimension;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{end_ring, goldie_dimension, is_indecomposable};
    use crate::workbench::corpus;

    #[test]
    fn example_ring_has_three_injectives() {
        let wb = corpus::ex_3_1();
        let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
        let dims: Vec<usize> = ctx.blocks().iter().map(|b| b.injective.dim()).collect();
        assert_eq!(dims.len(), 3);
        for b in ctx.blocks() {
            assert!(is_injective(&ctx, &b.injective).unwrap());
            assert!(is_indecomposable(&b.injective).unwrap());
            assert_eq!(socle(&b.injective).dim(), b.simple.dim());
        }
        let m = wb.module("M").unwrap();
        let env = injective_envelope(&ctx, m).unwrap();
        assert_eq!(env.outer.dim(), 4);
        assert_eq!(env.summands.len(), 2);
        assert_eq!(goldie_dimension(m), 2);
        verify_envelope(&ctx, &env).unwrap();
        let baer = baer_test(&ctx, m).unwrap();
        assert!(!baer.injective);
        let e = end_ring(&env.outer).unwrap();
        assert_eq!(e.block_profile(), vec![(1, 2), (1, 2)]);
    }

    #[test]
    fn second_example_envelope() {
        let wb = corpus::ex_3_2();
        let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
        let m = wb.module("M").unwrap();
        let env = injective_envelope(&ctx, m).unwrap();
        verify_envelope(&ctx, &env).unwrap();
        assert_eq!(env.summands.len(), 2);
        assert!(
            is_isomorphic(&env.summand_modules()[0], &env.summand_modules()[1])
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn covers_and_dual_exchange() {
        let wb = corpus::ex_3_1();
        let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
        let op = ctx.opposite().unwrap();
        let m = wb.module("M").unwrap();
        let cover = projective_cover(&ctx, m).unwrap();
        assert_eq!(cover.outer.dim(), 3);
        assert!(cover.kernel.dim() == 0);
        let dm = ctx.dual(m);
        let dual_cover = projective_cover(&op, &dm).unwrap();
        assert_eq!(dual_cover.summands.len(), 2);
        let ex = dual_exchange_check(&ctx, &op, m).unwrap();
        assert!(ex.holds);
    }

    #[test]
    fn self_injective_local_algebra() {
        let a = Arc::new(
            Algebra::polynomial_quotient(crate::field::FiniteField::gf2(), &[0, 0, 1]).unwrap(),
        );
        let ctx = AlgebraContext::new(a.clone()).unwrap();
        let r = ModuleRep::regular(a);
        assert!(is_injective(&ctx, &r).unwrap());
        assert_eq!(ctx.blocks().len(), 1);
        assert!(is_isomorphic(&ctx.blocks()[0].injective, &r)
            .unwrap()
            .is_some());
    }
}
