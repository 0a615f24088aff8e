use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::{Cell, RefCell};
use core::fmt;

use super::partition::{pi_f, Partition};
use super::SchurWeylError;
use crate::linalg::serial::{decode_subspace, encode_subspace};
use crate::linalg::{
    algebra_closure_sized, basis_matrices, common_annihilator, commutant, ideal_by_generators, intertwiners,
    largest_stable_subspace, orbit_span, Mat, SparseVec, Subspace,
};
use crate::rep::RepContext;
use crate::scalars::{Field, FieldSpec};

/// Identifies one cached subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub kind: &'static str,
    pub m: usize,
    pub n: usize,
    pub f: usize,
    pub field: FieldSpec,
}

impl fmt::Display for CacheKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}|{}|{}", self.kind, self.m, self.n, self.f, self.field)
    }
}

/// Storage for encoded subspaces. Payloads are the text produced by
/// [`encode_subspace`]; a payload that fails to decode is reported through
/// [`SubspaceCache::rejected`] and recomputed.
pub trait SubspaceCache: Sync {
    fn load(&self, key: &CacheKey) -> Option<String>;
    fn store(&self, key: &CacheKey, payload: &str);
    fn rejected(&self, _key: &CacheKey, _reason: &str) {}
}

/// A cache that never holds anything.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoCache;

impl SubspaceCache for NoCache {
    fn load(&self, _key: &CacheKey) -> Option<String> {
        None
    }

    fn store(&self, _key: &CacheKey, _payload: &str) {}
}

/// Which choice of permutation built a `z` vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZCandidate {
    /// `v_λ · Y_{λ'}` directly.
    Identity,
    /// `v_λ · T_w · Y_{λ'}` with `w` moving the row reading word of `λ` to its
    /// column reading word.
    ColumnReading,
}

impl ZCandidate {
    pub const ALL: [ZCandidate; 2] = [ZCandidate::Identity, ZCandidate::ColumnReading];
}

/// A nonzero maximal vector `α^{⊗f} ⊗ v_λ T_w Y_{λ'}` and the candidate that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct ZVector<E> {
    pub vector: SparseVec<E>,
    pub candidate: ZCandidate,
}

/// Dimensions and verdicts for one `(m, n, f, field)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub m: usize,
    pub n: usize,
    pub f: usize,
    pub field: FieldSpec,
    pub dim_total: usize,
    pub dim_algebra: usize,
    pub dim_ideal: usize,
    pub dim_w: usize,
    pub dim_quotient: usize,
    pub dim_ht: usize,
    pub dim_image_phi_f: usize,
    pub dim_commutant_quotient: usize,
    /// The induced map onto `End_U(V^{⊗n} / W_f)` is onto.
    pub surjective: bool,
    /// Truncating the whole space to `π_f` gives exactly `W_f`.
    pub truncation_match: bool,
    /// No nonzero module map `W_f → V^{⊗n} / W_f`.
    pub hom_vanishing: bool,
}

/// Computes and memoizes the algebra image, ideals `J_f` and submodules
/// `W_f = V^{⊗n} J_f` for one representation context.
pub struct Engine<'a, F: Field> {
    ctx: &'a RepContext<F>,
    cache: &'a dyn SubspaceCache,
    gens: Vec<Mat<F::Elem>>,
    algebra: RefCell<Option<Rc<Subspace<F::Elem>>>>,
    ideals: RefCell<BTreeMap<usize, Rc<Subspace<F::Elem>>>>,
    modules: RefCell<BTreeMap<usize, Rc<Subspace<F::Elem>>>>,
    hits: Cell<usize>,
}

impl<'a, F: Field> Engine<'a, F> {
    pub fn new(ctx: &'a RepContext<F>) -> Self {
        Self::with_cache(ctx, &NoCache)
    }

    pub fn with_cache(ctx: &'a RepContext<F>, cache: &'a dyn SubspaceCache) -> Self {
        Self {
            ctx,
            cache,
            gens: ctx.bmw_generator_list(),
            algebra: RefCell::new(None),
            ideals: RefCell::new(BTreeMap::new()),
            modules: RefCell::new(BTreeMap::new()),
            hits: Cell::new(0),
        }
    }

    pub fn ctx(&self) -> &RepContext<F> {
        self.ctx
    }

    /// Subspaces served from the cache so far.
    pub fn cache_hits(&self) -> usize {
        self.hits.get()
    }

    fn key(&self, kind: &'static str, f: usize) -> CacheKey {
        let ctx = self.ctx;
        CacheKey { kind, m: ctx.m(), n: ctx.n(), f, field: ctx.field().spec() }
    }

    fn cached(
        &self,
        key: CacheKey,
        ambient: usize,
        compute: impl FnOnce() -> Result<Subspace<F::Elem>, SchurWeylError>,
    ) -> Result<Rc<Subspace<F::Elem>>, SchurWeylError> {
        let field = self.ctx.field();
        if let Some(text) = self.cache.load(&key) {
            match decode_subspace(field, &text) {
                Ok(s) if s.ambient_dim() == ambient => {
                    self.hits.set(self.hits.get() + 1);
                    return Ok(Rc::new(s));
                }
                Ok(s) => self.cache.rejected(&key, &format!("ambient dimension {} instead of {ambient}", s.ambient_dim())),
                Err(e) => self.cache.rejected(&key, &format!("{e}")),
            }
        }
        let s = compute()?;
        self.cache.store(&key, &encode_subspace(field, &s));
        Ok(Rc::new(s))
    }

    fn layers(&self) -> usize {
        self.ctx.n() / 2
    }

    fn check_layer(&self, f: usize, max: usize) -> Result<(), SchurWeylError> {
        if f > max {
            return Err(SchurWeylError::LayerOutOfRange { f, max });
        }
        Ok(())
    }

    /// The image of the BMW algebra: the unital algebra generated by all
    /// `β'_i` and `γ'_i`, as flattened matrices.
    pub fn algebra(&self) -> Result<Rc<Subspace<F::Elem>>, SchurWeylError> {
        if let Some(a) = self.algebra.borrow().as_ref() {
            return Ok(a.clone());
        }
        let dim = self.ctx.dim();
        let a = self.cached(self.key("algebra", 0), dim * dim, || {
            Ok(algebra_closure_sized(self.ctx.field(), Some(dim), &self.gens, true)?)
        })?;
        *self.algebra.borrow_mut() = Some(a.clone());
        Ok(a)
    }

    /// `γ'_1 γ'_3 ⋯ γ'_{2f-1}`.
    pub fn ideal_generator(&self, f: usize) -> Mat<F::Elem> {
        let field = self.ctx.field();
        let mut g = Mat::identity(field, self.ctx.dim());
        for k in 0..f {
            g = g.mul(field, self.ctx.gamma_i(2 * k + 1));
        }
        g
    }

    /// `J_f`, the image of the ideal generated by `E_1 E_3 ⋯ E_{2f-1}`;
    /// the whole algebra for `f = 0` and zero for `f > ⌊n/2⌋`.
    pub fn ideal(&self, f: usize) -> Result<Rc<Subspace<F::Elem>>, SchurWeylError> {
        self.check_layer(f, self.layers() + 1)?;
        if f == 0 {
            return self.algebra();
        }
        if let Some(j) = self.ideals.borrow().get(&f) {
            return Ok(j.clone());
        }
        let dim = self.ctx.dim();
        let j = if f > self.layers() {
            Rc::new(Subspace::zero(dim * dim))
        } else {
            self.cached(self.key("ideal", f), dim * dim, || {
                Ok(ideal_by_generators(self.ctx.field(), &self.gens, &self.ideal_generator(f))?)
            })?
        };
        self.ideals.borrow_mut().insert(f, j.clone());
        Ok(j)
    }

    /// `W_f = V^{⊗n} J_f`.
    ///
    /// Since `J_f = A g A` with `A` unital, this is the row space of `g`
    /// saturated under the generators.
    pub fn bmw_module(&self, f: usize) -> Result<Rc<Subspace<F::Elem>>, SchurWeylError> {
        self.check_layer(f, self.layers() + 1)?;
        if let Some(w) = self.modules.borrow().get(&f) {
            return Ok(w.clone());
        }
        let field = self.ctx.field();
        let dim = self.ctx.dim();
        let w = if f == 0 {
            Rc::new(Subspace::full(field, dim))
        } else if f > self.layers() {
            Rc::new(Subspace::zero(dim))
        } else {
            self.cached(self.key("module", f), dim, || {
                let g = self.ideal_generator(f);
                let start = Subspace::span(field, dim, g.row_vecs());
                Ok(orbit_span(field, &start, &self.gens)?)
            })?
        };
        self.modules.borrow_mut().insert(f, w.clone());
        Ok(w)
    }

    /// `α^{⊗f}` as a vector of `V^{⊗2f}`.
    pub fn alpha_power(&self, f: usize) -> SparseVec<F::Elem> {
        let field = self.ctx.field();
        let d2 = self.ctx.d() * self.ctx.d();
        let mut v = SparseVec::unit(field, 0);
        for _ in 0..f {
            v = kron_vec(field, &v, self.ctx.alpha(), d2);
        }
        v
    }

    /// `x^{-f} α^{⊗f}`, the multiple of `α^{⊗f}` sent to 1 by `E^{⊗f}`.
    pub fn normalized_alpha_power(&self, f: usize) -> SparseVec<F::Elem> {
        let field = self.ctx.field();
        let x_inv = field.inv(&self.ctx.x()).expect("the loop value is nonzero");
        let c = (0..f).fold(field.one(), |acc, _| field.mul(&acc, &x_inv));
        self.alpha_power(f).scale(field, &c)
    }

    /// Compares `span{(α^{⊗f} ⊗ v) · b}` over all `v ∈ V^{⊗(n-2f)}` and
    /// `b` in the algebra image with `W_f`.
    pub fn image_sum_check(&self, f: usize) -> Result<bool, SchurWeylError> {
        self.check_layer(f, self.layers())?;
        let field = self.ctx.field();
        let dim = self.ctx.dim();
        let rest = self.ctx.d().pow((self.ctx.n() - 2 * f) as u32);
        let a = self.alpha_power(f);
        let seeds: Vec<SparseVec<F::Elem>> =
            (0..rest).map(|j| kron_vec(field, &a, &SparseVec::unit(field, j), rest)).collect();
        let start = Subspace::span(field, dim, &seeds);
        let lhs = orbit_span(field, &start, &self.gens)?;
        Ok(lhs == *self.bmw_module(f)?)
    }

    /// Maximal vectors of weight `lambda` in `V^{⊗n}`: the weight space
    /// intersected with the kernels of all `E_i`.
    pub fn maximal_vectors(&self, lambda: &[i64]) -> Result<Subspace<F::Elem>, SchurWeylError> {
        if lambda.len() != self.ctx.m() {
            return Err(SchurWeylError::WeightLength { found: lambda.len(), m: self.ctx.m() });
        }
        let ws = self.ctx.weight_space(lambda);
        Ok(common_annihilator(self.ctx.field(), &ws, &self.ctx.uq().e)?)
    }

    /// Maximal vectors of weight `lambda` lying in `space`.
    fn maximal_vectors_in(&self, space: &Subspace<F::Elem>, lambda: &[i64]) -> Result<Subspace<F::Elem>, SchurWeylError> {
        let field = self.ctx.field();
        let ws = self.ctx.weight_space(lambda).intersect(field, space)?;
        Ok(common_annihilator(field, &ws, &self.ctx.uq().e)?)
    }

    /// `dim` of the maximal vectors for every partition with at most `m`
    /// rows and size `n - 2r`, i.e. the multiplicities of the simple
    /// constituents of `V^{⊗n}`.
    pub fn multiplicities(&self) -> Result<Vec<(Partition, usize)>, SchurWeylError> {
        let mut out = Vec::new();
        for lambda in pi_f(self.ctx.n(), 0, self.ctx.m())?.members {
            let dim = self.maximal_vectors(&lambda.weight(self.ctx.m())?)?.dim();
            out.push((lambda, dim));
        }
        Ok(out)
    }

    /// The sum of all submodules of `space` whose composition factors have
    /// highest weights in `π_f`, computed as the span of the quantum group
    /// orbits of the maximal vectors of those weights.
    ///
    /// `space` must be stable under every quantum group generator.
    pub fn truncation(&self, f: usize, space: &Subspace<F::Elem>) -> Result<Subspace<F::Elem>, SchurWeylError> {
        self.check_layer(f, self.layers())?;
        let field = self.ctx.field();
        if space.ambient_dim() != self.ctx.dim() {
            return Err(SchurWeylError::Linalg(crate::linalg::LinalgError::AmbientMismatch(
                space.ambient_dim(),
                self.ctx.dim(),
            )));
        }
        let uq = self.ctx.uq();
        if !uq.all().iter().all(|g| space.is_stable_under(field, g)) {
            return Err(SchurWeylError::NotStable);
        }
        let mut seeds = Vec::new();
        for lambda in pi_f(self.ctx.n(), f, self.ctx.m())?.members {
            let max = self.maximal_vectors_in(space, &lambda.weight(self.ctx.m())?)?;
            seeds.extend(max.basis().iter().cloned());
        }
        let ops: Vec<Mat<F::Elem>> = uq.e.iter().chain(&uq.f).cloned().collect();
        let start = Subspace::span(field, self.ctx.dim(), &seeds);
        Ok(orbit_span(field, &start, &ops)?)
    }

    /// `α^{⊗f} ⊗ v_λ · T_w · Y_{λ'}` for the given candidate `w`, where
    /// `Y_{λ'} = Σ_{w ∈ S_{λ'}} (-q)^{-ℓ(w)} T_w` and `T_i` acts on the last
    /// `n - 2f` factors. May be zero or fail to be maximal.
    pub fn z_candidate(&self, f: usize, lambda: &Partition, w: ZCandidate) -> Result<SparseVec<F::Elem>, SchurWeylError> {
        let ctx = self.ctx;
        self.check_layer(f, self.layers())?;
        let k = ctx.n() - 2 * f;
        if lambda.size() != k {
            return Err(SchurWeylError::WrongSize { size: lambda.size(), expected: k });
        }
        lambda.weight(ctx.m())?;
        let field = ctx.field();
        let row_word: Vec<usize> = lambda.parts().iter().enumerate().flat_map(|(i, &p)| core::iter::repeat(i).take(p)).collect();
        let conj = lambda.conjugate();
        let col_word: Vec<usize> = conj.parts().iter().flat_map(|&c| 0..c).collect();
        let rest = ctx.d().pow(k as u32);
        let tail = SparseVec::unit(field, row_word.iter().fold(0, |acc, &a| acc * ctx.d() + a));
        let mut v = kron_vec(field, &self.alpha_power(f), &tail, rest);
        // T_i on the tail is β' at position 2f + i (both 1-based)
        let t = |v: &SparseVec<F::Elem>, i: usize| ctx.beta_i(2 * f + i).apply_row(field, v);
        if w == ZCandidate::ColumnReading {
            let mut cur = row_word.clone();
            for p in 0..k {
                let j = (p..k).find(|&j| cur[j] == col_word[p]).expect("same multiset of letters");
                for s in (p..j).rev() {
                    v = t(&v, s + 1);
                    cur.swap(s, s + 1);
                }
            }
        }
        let x = field.neg(&field.q_pow(-1));
        let mut start = 0;
        for &size in conj.parts() {
            // Σ over S_j factors as Σ over S_{j-1} times Σ_t x^t T_{j-1} ⋯ T_{j-t}
            for j in 2..=size {
                let mut acc = v.clone();
                let mut term = v.clone();
                let mut coeff = field.one();
                for step in 1..j {
                    term = t(&term, start + j - step);
                    coeff = field.mul(&coeff, &x);
                    acc = acc.axpy(field, &coeff, &term);
                }
                v = acc;
            }
            start += size;
        }
        Ok(v)
    }

    /// Nonzero, of weight `lambda`, killed by every `E_i`.
    pub fn is_maximal(&self, v: &SparseVec<F::Elem>, lambda: &[i64]) -> bool {
        let field = self.ctx.field();
        !v.is_zero()
            && v.iter().all(|(i, _)| self.ctx.weight(i) == lambda)
            && self.ctx.uq().e.iter().all(|e| e.apply_row(field, v).is_zero())
    }

    /// The first candidate (or the given one) producing a nonzero maximal
    /// vector of weight `λ`.
    pub fn z_vector(
        &self,
        f: usize,
        lambda: &Partition,
        w: Option<ZCandidate>,
    ) -> Result<ZVector<F::Elem>, SchurWeylError> {
        let weight = lambda.weight(self.ctx.m())?;
        let candidates: &[ZCandidate] = match &w {
            Some(c) => core::slice::from_ref(c),
            None => &ZCandidate::ALL,
        };
        for &c in candidates {
            let v = self.z_candidate(f, lambda, c)?;
            if self.is_maximal(&v, &weight) {
                return Ok(ZVector { vector: v, candidate: c });
            }
        }
        Err(SchurWeylError::NotConstructed)
    }

    /// `span{z · b}` over the algebra image.
    pub fn cyclic_bmw_span(&self, z: &SparseVec<F::Elem>) -> Result<Subspace<F::Elem>, SchurWeylError> {
        let field = self.ctx.field();
        let start = Subspace::span(field, self.ctx.dim(), core::slice::from_ref(z));
        Ok(orbit_span(field, &start, &self.gens)?)
    }

    /// `{v ∈ W_f : v · x = 0 for all x ∈ J_{f+1}}`.
    ///
    /// With `g` the generator of `J_{f+1}` and `A` the unital algebra image,
    /// `v · J_{f+1} = 0` exactly when `v · A ⊆ ker g`, so this is the
    /// largest `A`-stable subspace of `W_f ∩ ker g`. The ideal itself is
    /// never built.
    pub fn harmonic_tensors(&self, f: usize) -> Result<Subspace<F::Elem>, SchurWeylError> {
        self.check_layer(f, self.layers())?;
        let field = self.ctx.field();
        let w = self.bmw_module(f)?;
        if f + 1 > self.layers() {
            return Ok((*w).clone());
        }
        let g = self.ideal_generator(f + 1);
        let killed = common_annihilator(field, &w, core::slice::from_ref(&g))?;
        Ok(largest_stable_subspace(field, &killed, &self.gens)?)
    }

    /// [`Engine::harmonic_tensors`] straight from the definition, against a
    /// basis of `J_{f+1}`.
    pub fn harmonic_tensors_from_ideal(&self, f: usize) -> Result<Subspace<F::Elem>, SchurWeylError> {
        self.check_layer(f, self.layers())?;
        let w = self.bmw_module(f)?;
        let next = self.ideal(f + 1)?;
        let ops = basis_matrices(&next, self.ctx.dim());
        Ok(common_annihilator(self.ctx.field(), &w, &ops)?)
    }

    /// Surjectivity of the induced map from the algebra onto the
    /// endomorphisms of `V^{⊗n} / W_f` commuting with the quantum group,
    /// together with the dimension data around it.
    pub fn duality_report(&self, f: usize) -> Result<DualityReport, SchurWeylError> {
        if f == 0 {
            return Err(SchurWeylError::LayerOutOfRange { f, max: self.layers() });
        }
        self.check_layer(f, self.layers())?;
        let ctx = self.ctx;
        let field = ctx.field();
        let dim = ctx.dim();
        let algebra = self.algebra()?;
        let ideal = self.ideal(f)?;
        let w = self.bmw_module(f)?;
        let quotient = Quotient::new(&w);
        let dq = quotient.dim();

        let mut image = crate::linalg::EchelonBuilder::new(field, dq * dq);
        for b in basis_matrices(&algebra, dim) {
            image.insert(&quotient.induced(field, &b).flatten());
        }
        let image = image.finish();

        let uq = ctx.uq().all();
        let on_quotient: Vec<Mat<F::Elem>> = uq.iter().map(|g| quotient.induced(field, g)).collect();
        let comm = commutant(field, dq, &on_quotient)?;

        let hom_vanishing = if w.is_zero() || dq == 0 {
            true
        } else {
            let on_w: Vec<Mat<F::Elem>> = uq.iter().map(|g| restrict(field, &w, g)).collect();
            intertwiners(field, &on_w, &on_quotient)?.is_zero()
        };
        let truncated = self.truncation(f, &Subspace::full(field, dim))?;
        let ht = self.harmonic_tensors(f)?;
        Ok(DualityReport {
            m: ctx.m(),
            n: ctx.n(),
            f,
            field: field.spec(),
            dim_total: dim,
            dim_algebra: algebra.dim(),
            dim_ideal: ideal.dim(),
            dim_w: w.dim(),
            dim_quotient: dq,
            dim_ht: ht.dim(),
            dim_image_phi_f: image.dim(),
            dim_commutant_quotient: comm.dim(),
            surjective: image.dim() == comm.dim(),
            truncation_match: truncated == *w,
            hom_vanishing,
        })
    }

    /// The induced action of `m` on `V^{⊗n} / W_f`, in the basis of
    /// non-pivot coordinate vectors.
    pub fn induced_on_quotient(&self, f: usize, m: &Mat<F::Elem>) -> Result<Mat<F::Elem>, SchurWeylError> {
        let w = self.bmw_module(f)?;
        Ok(Quotient::new(&w).induced(self.ctx.field(), m))
    }
}

/// `V / W` with basis the unit vectors at the non-pivot columns of `W`.
struct Quotient<'s, E> {
    space: &'s Subspace<E>,
    free: Vec<usize>,
    slot: Vec<usize>,
}

impl<'s, E: Clone + PartialEq> Quotient<'s, E> {
    fn new(space: &'s Subspace<E>) -> Self {
        let free = space.free_columns();
        let mut slot = alloc::vec![usize::MAX; space.ambient_dim()];
        for (k, &j) in free.iter().enumerate() {
            slot[j] = k;
        }
        Self { space, free, slot }
    }

    fn dim(&self) -> usize {
        self.free.len()
    }

    fn induced<F: Field<Elem = E>>(&self, field: &F, m: &Mat<E>) -> Mat<E> {
        let rows = self
            .free
            .iter()
            .map(|&j| {
                let reduced = self.space.reduce(field, m.row(j));
                let entries = reduced.into_entries().into_iter().map(|(c, x)| (self.slot[c], x)).collect();
                SparseVec::from_entries(field, entries)
            })
            .collect();
        Mat::from_rows(self.dim(), rows)
    }
}

/// The action of `m` on a stable subspace, in coordinates of its basis.
fn restrict<F: Field>(field: &F, space: &Subspace<F::Elem>, m: &Mat<F::Elem>) -> Mat<F::Elem> {
    let rows = space
        .basis()
        .iter()
        .map(|v| space.coordinates(field, &m.apply_row(field, v)).expect("subspace is stable"))
        .collect();
    Mat::from_rows(space.dim(), rows)
}

/// `a ⊗ b` for vectors, `b` of length `len_b`.
fn kron_vec<F: Field>(field: &F, a: &SparseVec<F::Elem>, b: &SparseVec<F::Elem>, len_b: usize) -> SparseVec<F::Elem> {
    let mut entries = Vec::with_capacity(a.nnz() * b.nnz());
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            entries.push((i * len_b + j, field.mul(x, y)));
        }
    }
    SparseVec::from_entries(field, entries)
}
