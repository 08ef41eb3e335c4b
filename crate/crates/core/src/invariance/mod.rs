//! Invariance of a module inside its injective envelope (or of the kernel of
//! its projective cover) under endomorphisms and automorphisms.
//!
//! Both questions reduce to a distinguished subspace `U` of an outer module
//! `X` (the image of `M` in `E(M)`, or `ker(P -> M)`) and the stabilizer
//! ring `T = { f in End(X) : U f <= U }`, which is cut out by linear
//! conditions. Endomorphism-invariance is `T = End(X)`; automorphism
//! invariance is `units(End X) <= T`, decided by first checking `J <= T`
//! (the units `1 + j`) and then the units of `End(X)/J` through a section.

mod reports;

pub use reports::{
    dual_indecomposable_report, indecomposable_report, simple_summary, socle_report,
    struct_decompose, theorem_suite, DualIndecomposableReport, IndecomposableReport,
    ModuleVerdicts, SimpleSummand, SocleReport, StructDecomposition, SuiteEntry, SuiteReport,
};

use crate::algebra::{is_unit, units, Elem};
use crate::envelopes::{CoveredModule, EmbeddedModule};
use crate::error::{Error, Result};
use crate::mat::{self, Mat};
use crate::modrep::{end_ring, EndRing, ModuleRep};
use crate::par;
use crate::subspace::Subspace;

/// `T = { f in End(X) : U f <= U }` for an outer module `X` and subspace `U`.
#[derive(Clone, Debug)]
pub struct StabilizerRing {
    pub outer: ModuleRep,
    pub distinguished: Subspace,
    pub end: EndRing,
    /// `T` in the coordinates of `End(X)`.
    pub space: Subspace,
}

/// A decision with the map that refutes it when negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// An endomorphism (or automorphism) of the outer module that moves
    /// the distinguished subspace.
    pub witness: Option<Mat>,
}

impl Verdict {
    pub(crate) fn yes() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    fn no(witness: Mat) -> Self {
        Self {
            holds: false,
            witness: Some(witness),
        }
    }
}

fn moves(u: &Subspace, map: &Mat, f: &crate::field::FiniteField) -> bool {
    (0..u.dim()).any(|r| !u.contains(&map.left_apply(u.basis().row(r), f), f))
}

impl StabilizerRing {
    pub fn new(outer: &ModuleRep, distinguished: Subspace) -> Result<Self> {
        let end = end_ring(outer)?;
        Self::with_end(outer, distinguished, end)
    }

    pub fn with_end(outer: &ModuleRep, distinguished: Subspace, end: EndRing) -> Result<Self> {
        let f = outer.field();
        let n = end.dim();
        let u = &distinguished;
        let space = if u.is_zero() || u.is_full() {
            Subspace::full(n)
        } else {
            let ann = u.annihilator(f);
            let rows: Vec<Elem> = end
                .maps()
                .basis()
                .iter()
                .map(|fs| u.basis().mul(fs, f).mul(&ann, f).flatten())
                .collect();
            let width = u.dim() * ann.cols();
            mat::left_nullspace(&Mat::from_rows(n, width, &rows)?, f)
        };
        let ring = Self {
            outer: outer.clone(),
            distinguished,
            end,
            space,
        };
        ring.check_subring()?;
        Ok(ring)
    }

    pub fn check_subring(&self) -> Result<()> {
        let a = self.end.algebra();
        let f = a.field();
        if !self.space.contains(a.one(), f) || !a.is_multiplicatively_closed(&self.space) {
            return Err(Error::Invariant(
                "stabilizer is not a unital subring".into(),
            ));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_everything(&self) -> bool {
        self.space.is_full()
    }

    pub fn contains_radical(&self) -> bool {
        let f = self.end.algebra().field();
        self.end
            .radical()
            .basis_elements()
            .iter()
            .all(|j| self.space.contains(j, f))
    }

    /// Check that `g` is an endomorphism (an automorphism if `unit`) of the
    /// outer module that moves the distinguished subspace.
    pub fn verify_witness(&self, g: &Mat, unit: bool) -> Result<()> {
        let f = self.outer.field();
        if !self.outer.is_hom_to(&self.outer, g) {
            return Err(Error::Invariant("witness is not an endomorphism".into()));
        }
        if unit && !mat::is_invertible(g, f) {
            return Err(Error::Invariant("witness is not an automorphism".into()));
        }
        if !moves(&self.distinguished, g, f) {
            return Err(Error::Invariant(
                "witness does not move the subspace".into(),
            ));
        }
        Ok(())
    }

    /// `T = End(X)`.
    pub fn endomorphism_invariant(&self) -> Result<Verdict> {
        let f = self.end.algebra().field();
        let witness = (0..self.end.dim())
            .map(|i| self.end.algebra().basis_element(i))
            .find(|b| !self.space.contains(b, f));
        match witness {
            None => Ok(Verdict::yes()),
            Some(b) => {
                let g = self.end.to_matrix(&b);
                self.verify_witness(&g, false)?;
                Ok(Verdict::no(g))
            }
        }
    }

    /// Every unit of `End(X)` lies in `T`.
    pub fn automorphism_invariant(&self) -> Result<Verdict> {
        let a = self.end.algebra();
        let f = a.field();
        for j in self.end.radical().basis_elements() {
            if !self.space.contains(&j, f) {
                let g = self.end.to_matrix(&a.add(a.one(), &j));
                self.verify_witness(&g, true)?;
                return Ok(Verdict::no(g));
            }
        }
        // J <= T, so membership only depends on the class modulo J
        let quotient = self.end.quotient();
        let quotient_units = units(&quotient.algebra)?;
        let bad = par::find_first(&quotient_units, |u| {
            let lifted = quotient.lift(u);
            (!self.space.contains(&lifted, f)).then_some(lifted)
        });
        match bad {
            None => Ok(Verdict::yes()),
            Some(x) => {
                debug_assert!(is_unit(a, &x));
                let g = self.end.to_matrix(&x);
                self.verify_witness(&g, true)?;
                Ok(Verdict::no(g))
            }
        }
    }
}

/// The stabilizer of `u(M)` in `End(E(M))`.
pub fn stabilizer(env: &EmbeddedModule) -> Result<StabilizerRing> {
    StabilizerRing::new(&env.outer, env.image())
}

/// The stabilizer of `ker p` in `End(P)`.
pub fn cover_stabilizer(cover: &CoveredModule) -> Result<StabilizerRing> {
    StabilizerRing::new(&cover.outer, cover.kernel.space().clone())
}

pub fn is_quasi_injective(env: &EmbeddedModule) -> Result<Verdict> {
    if env.outer.dim() == 0 {
        return Ok(Verdict::yes());
    }
    stabilizer(env)?.endomorphism_invariant()
}

pub fn is_automorphism_invariant(env: &EmbeddedModule) -> Result<Verdict> {
    if env.outer.dim() == 0 {
        return Ok(Verdict::yes());
    }
    stabilizer(env)?.automorphism_invariant()
}

pub fn is_quasi_projective(cover: &CoveredModule) -> Result<Verdict> {
    if cover.outer.dim() == 0 {
        return Ok(Verdict::yes());
    }
    cover_stabilizer(cover)?.endomorphism_invariant()
}

pub fn is_automorphism_coinvariant(cover: &CoveredModule) -> Result<Verdict> {
    if cover.outer.dim() == 0 {
        return Ok(Verdict::yes());
    }
    cover_stabilizer(cover)?.automorphism_invariant()
}
