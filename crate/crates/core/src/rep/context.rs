use alloc::vec::Vec;

use super::RepError;
use crate::linalg::{Mat, SparseVec, Subspace};
use crate::scalars::{bmw_r, loop_value, Field};

/// The symplectic representation data for fixed `(m, n)` over one field.
///
/// `V` has basis `v_0, …, v_{2m-1}` (0-based), with `i' = 2m-1-i`,
/// `ρ = (m, …, 1, -1, …, -m)` and `ε_i = sign ρ_i`. The symplectic form
/// pairs `v_i` with `v_{i'}`: `⟨v_i, v_{i'}⟩ = ε_i`.
///
/// A basis tensor `v_{a_1} ⊗ … ⊗ v_{a_n}` has index `Σ a_k d^{n-k}` (first
/// factor most significant). All operators are stored for row vectors:
/// `v ↦ v · M`, so "first `A`, then `B`" is the product `A · B`.
#[derive(Clone, Debug)]
pub struct RepContext<F: Field> {
    field: F,
    m: usize,
    n: usize,
    rho: Vec<i64>,
    eps: Vec<i64>,
    beta: Mat<F::Elem>,
    beta_inv: Mat<F::Elem>,
    gamma: Mat<F::Elem>,
    alpha: SparseVec<F::Elem>,
    cap: Mat<F::Elem>,
    cup: Mat<F::Elem>,
    betas: Vec<Mat<F::Elem>>,
    gammas: Vec<Mat<F::Elem>>,
    uq: UqAction<F::Elem>,
}

/// Chevalley generators acting on a tensor power, indexed `0..m`.
#[derive(Clone, Debug, PartialEq)]
pub struct UqAction<E> {
    pub e: Vec<Mat<E>>,
    pub f: Vec<Mat<E>>,
    pub k: Vec<Mat<E>>,
    pub k_inv: Vec<Mat<E>>,
}

impl<E: Clone + PartialEq> UqAction<E> {
    /// All generators, `E_i`, `F_i`, `K_i`, `K_i^{-1}` in that order.
    pub fn all(&self) -> Vec<Mat<E>> {
        self.e.iter().chain(&self.f).chain(&self.k).chain(&self.k_inv).cloned().collect()
    }
}

impl<F: Field> RepContext<F> {
    /// Builds all operators for `V^{⊗n}`, `dim V = 2m`, and checks the
    /// calibration invariants on `V ⊗ V`.
    pub fn new(field: &F, m: usize, n: usize) -> Result<Self, RepError> {
        if m == 0 {
            return Err(RepError::InvalidRank);
        }
        let d = 2 * m;
        let rho: Vec<i64> = (0..d).map(|i| if i < m { (m - i) as i64 } else { -((i - m + 1) as i64) }).collect();
        let eps: Vec<i64> = rho.iter().map(|r| r.signum()).collect();
        let mut ctx = Self {
            field: field.clone(),
            m,
            n,
            rho,
            eps,
            beta: Mat::zeros(0, 0),
            beta_inv: Mat::zeros(0, 0),
            gamma: Mat::zeros(0, 0),
            alpha: SparseVec::zero(),
            cap: Mat::zeros(0, 0),
            cup: Mat::zeros(0, 0),
            betas: Vec::new(),
            gammas: Vec::new(),
            uq: UqAction { e: Vec::new(), f: Vec::new(), k: Vec::new(), k_inv: Vec::new() },
        };
        ctx.build_beta_gamma();
        ctx.beta_inv = ctx.beta.inverse(field).ok_or(RepError::Calibration("the crossing is invertible"))?;
        ctx.calibrate()?;
        let id = |k: usize| Mat::identity(field, d.pow(k as u32));
        for i in 0..n.saturating_sub(1) {
            let (l, r) = (id(i), id(n - 2 - i));
            ctx.betas.push(l.kron(field, &ctx.beta).kron(field, &r));
            ctx.gammas.push(l.kron(field, &ctx.gamma).kron(field, &r));
        }
        ctx.uq = ctx.uq_action(n);
        Ok(ctx)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `dim V = 2m`.
    pub fn d(&self) -> usize {
        2 * self.m
    }

    /// `dim V^{⊗n}`.
    pub fn dim(&self) -> usize {
        self.d().pow(self.n as u32)
    }

    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    pub fn prime(&self, i: usize) -> usize {
        self.d() - 1 - i
    }

    /// `r = -q^{2m+1}`.
    pub fn r(&self) -> F::Elem {
        bmw_r(&self.field, self.m)
    }

    /// The loop value `x`.
    pub fn x(&self) -> F::Elem {
        loop_value(&self.field, self.m)
    }

    /// `⟨v_i, v_j⟩`.
    pub fn form(&self, i: usize, j: usize) -> i64 {
        if j == self.prime(i) {
            self.eps[i]
        } else {
            0
        }
    }

    /// `β'` on `V ⊗ V`.
    pub fn beta(&self) -> &Mat<F::Elem> {
        &self.beta
    }

    pub fn beta_inv(&self) -> &Mat<F::Elem> {
        &self.beta_inv
    }

    /// `γ'` on `V ⊗ V`.
    pub fn gamma(&self) -> &Mat<F::Elem> {
        &self.gamma
    }

    /// `α = Σ_k q^{-ρ_k} ε_k v_k ⊗ v_{k'}`.
    pub fn alpha(&self) -> &SparseVec<F::Elem> {
        &self.alpha
    }

    /// The functional `E : V ⊗ V → K` as a `d² × 1` matrix.
    pub fn cap(&self) -> &Mat<F::Elem> {
        &self.cap
    }

    /// The map `C : K → V ⊗ V`, `1 ↦ α`, as a `1 × d²` matrix.
    pub fn cup(&self) -> &Mat<F::Elem> {
        &self.cup
    }

    /// `β'_i` on `V^{⊗n}` for `i = 1..n-1`.
    pub fn beta_i(&self, i: usize) -> &Mat<F::Elem> {
        &self.betas[i - 1]
    }

    /// `γ'_i` on `V^{⊗n}` for `i = 1..n-1`.
    pub fn gamma_i(&self, i: usize) -> &Mat<F::Elem> {
        &self.gammas[i - 1]
    }

    /// `(β'_i, γ'_i)` for `i = 1..n-1`.
    pub fn bmw_generators(&self) -> Vec<(Mat<F::Elem>, Mat<F::Elem>)> {
        self.betas.iter().cloned().zip(self.gammas.iter().cloned()).collect()
    }

    /// `β'_1, …, β'_{n-1}, γ'_1, …, γ'_{n-1}`.
    pub fn bmw_generator_list(&self) -> Vec<Mat<F::Elem>> {
        self.betas.iter().chain(&self.gammas).cloned().collect()
    }

    /// The quantum group action on `V^{⊗n}`.
    pub fn uq(&self) -> &UqAction<F::Elem> {
        &self.uq
    }

    fn build_beta_gamma(&mut self) {
        let f = &self.field;
        let d = self.d();
        let p = |i: usize| d - 1 - i;
        // E_{i,j} ⊗ E_{k,l} sits at row (i, k), column (j, l)
        let at = |i: usize, j: usize, k: usize, l: usize| (i * d + k, j * d + l);
        let sign = |s: i64| f.from_i64(s);
        let mut beta = Vec::new();
        let mut gamma = Vec::new();
        let q_diff = f.sub(&f.q(), &f.q_pow(-1));
        for i in 0..d {
            let (r, c) = at(i, i, i, i);
            beta.push((r, c, f.q()));
            let (r, c) = at(i, p(i), p(i), i);
            beta.push((r, c, f.q_pow(-1)));
            for j in 0..d {
                if j != i && j != p(i) {
                    let (r, c) = at(i, j, j, i);
                    beta.push((r, c, f.one()));
                }
                let coeff = f.mul(&f.q_pow(self.rho[j] - self.rho[i]), &sign(self.eps[i] * self.eps[j]));
                let (r, c) = at(i, p(j), p(i), j);
                gamma.push((r, c, coeff.clone()));
                if i < j {
                    let (r, c) = at(i, i, j, j);
                    beta.push((r, c, q_diff.clone()));
                    let (r, c) = at(i, p(j), p(i), j);
                    beta.push((r, c, f.neg(&f.mul(&q_diff, &coeff))));
                }
            }
        }
        self.beta = Mat::from_triples(f, d * d, d * d, beta);
        self.gamma = Mat::from_triples(f, d * d, d * d, gamma);
        let alpha: Vec<(usize, F::Elem)> = (0..d)
            .map(|k| (k * d + p(k), f.mul(&f.q_pow(-self.rho[k]), &sign(self.eps[k]))))
            .collect();
        self.alpha = SparseVec::from_entries(f, alpha);
        self.cup = Mat::row_matrix(d * d, self.alpha.clone());
        // E(v_a ⊗ v_b) = δ_{b,a'} ε_b q^{-ρ_a}
        let cap = (0..d).map(|a| (a * d + p(a), 0, f.mul(&sign(self.eps[p(a)]), &f.q_pow(-self.rho[a]))));
        self.cap = Mat::from_triples(f, d * d, 1, cap);
    }

    /// The defining identities of the cap, cup and crossing, and the
    /// compatibility of the quantum group action with them, on `V ⊗ V`.
    fn calibrate(&self) -> Result<(), RepError> {
        let f = &self.field;
        let d2 = self.d() * self.d();
        let id = Mat::identity(f, d2);
        if self.cap.mul(f, &self.cup) != self.gamma {
            return Err(RepError::Calibration("gamma equals cap followed by cup"));
        }
        let x = self.x();
        if self.cup.mul(f, &self.cap) != Mat::diagonal(f, alloc::vec![x.clone()]) {
            return Err(RepError::Calibration("E(alpha) = x"));
        }
        if self.gamma.mul(f, &self.gamma) != self.gamma.scale(f, &x) {
            return Err(RepError::Calibration("gamma^2 = x gamma"));
        }
        let q_diff = f.sub(&f.q(), &f.q_pow(-1));
        if self.beta.sub(f, &self.beta_inv) != id.sub(f, &self.gamma).scale(f, &q_diff) {
            return Err(RepError::Calibration("beta - beta^-1 = (q - q^-1)(1 - gamma)"));
        }
        let two = self.uq_action(2);
        for g in two.all() {
            if g.mul(f, &self.beta) != self.beta.mul(f, &g) {
                return Err(RepError::Calibration("the quantum group action commutes with beta"));
            }
            if g.mul(f, &self.gamma) != self.gamma.mul(f, &g) {
                return Err(RepError::Calibration("the quantum group action commutes with gamma"));
            }
        }
        let trivial = two.e.iter().chain(&two.f).all(|g| g.apply_row(f, &self.alpha).is_zero())
            && two.k.iter().all(|g| g.apply_row(f, &self.alpha) == self.alpha);
        if !trivial {
            return Err(RepError::Calibration("alpha spans a trivial module"));
        }
        Ok(())
    }

    /// Weight of `v_a`: `+e_a` for `a < m`, `-e_{a'}` otherwise.
    pub fn basis_weight(&self, a: usize) -> Vec<i64> {
        let mut w = alloc::vec![0; self.m];
        if a < self.m {
            w[a] = 1;
        } else {
            w[self.prime(a)] = -1;
        }
        w
    }

    /// Digits `(a_1, …, a_n)` of a basis tensor index.
    pub fn digits(&self, index: usize) -> Vec<usize> {
        let d = self.d();
        let mut out = alloc::vec![0; self.n];
        let mut x = index;
        for k in (0..self.n).rev() {
            out[k] = x % d;
            x /= d;
        }
        out
    }

    pub fn index_of(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &a| acc * self.d() + a)
    }

    /// Weight of the basis tensor with the given index.
    pub fn weight(&self, index: usize) -> Vec<i64> {
        let mut w = alloc::vec![0; self.m];
        for a in self.digits(index) {
            if a < self.m {
                w[a] += 1;
            } else {
                w[self.prime(a)] -= 1;
            }
        }
        w
    }

    /// Span of the basis tensors of weight `lambda`.
    pub fn weight_space(&self, lambda: &[i64]) -> Subspace<F::Elem> {
        let idx: Vec<usize> = (0..self.dim()).filter(|&i| self.weight(i) == lambda).collect();
        Subspace::coordinate(&self.field, self.dim(), &idx)
    }

    /// `K_i` eigenvalue exponent on a weight: `⟨wt, α_i^∨⟩ d_i`, i.e.
    /// `wt_i - wt_{i+1}` for `i < m-1` and `2 wt_{m-1}` for the long root.
    fn k_exponent(&self, i: usize, wt: &[i64]) -> i64 {
        if i + 1 < self.m {
            wt[i] - wt[i + 1]
        } else {
            2 * wt[i]
        }
    }

    /// Raising and lowering operators on `V` for row vectors:
    /// entries `(a, b, sign)` meaning `v_a ↦ sign · v_b`.
    fn raising_on_v(&self, i: usize) -> Vec<(usize, usize, i64)> {
        let m = self.m;
        if i + 1 < m {
            // E_i: v_{i+1} ↦ v_i and v_{i'} ↦ -v_{(i+1)'}
            alloc::vec![(i + 1, i, 1), (self.prime(i), self.prime(i + 1), -1)]
        } else {
            // E_m: v_{m'} ↦ v_m
            alloc::vec![(m, m - 1, 1)]
        }
    }

    /// Action on `V^{⊗k}` through `Δ(E) = E ⊗ 1 + K ⊗ E`,
    /// `Δ(F) = F ⊗ K^{-1} + 1 ⊗ F`, `Δ(K) = K ⊗ K`.
    pub fn uq_action(&self, k: usize) -> UqAction<F::Elem> {
        let f = &self.field;
        let d = self.d();
        let dim = d.pow(k as u32);
        let mut out = UqAction { e: Vec::new(), f: Vec::new(), k: Vec::new(), k_inv: Vec::new() };
        let exps: Vec<Vec<i64>> = (0..self.m)
            .map(|i| (0..d).map(|a| self.k_exponent(i, &self.basis_weight(a))).collect())
            .collect();
        let digits = |mut x: usize| {
            let mut v = alloc::vec![0; k];
            for p in (0..k).rev() {
                v[p] = x % d;
                x /= d;
            }
            v
        };
        let place = |a: usize, pos: usize| a * d.pow((k - 1 - pos) as u32);
        for i in 0..self.m {
            let raise = self.raising_on_v(i);
            let mut e = Vec::new();
            let mut fl = Vec::new();
            let mut kd = Vec::new();
            let mut kinv = Vec::new();
            for idx in 0..dim {
                let ds = digits(idx);
                let total: i64 = ds.iter().map(|&a| exps[i][a]).sum();
                kd.push(f.q_pow(total));
                kinv.push(f.q_pow(-total));
                for pos in 0..k {
                    let before: i64 = ds[..pos].iter().map(|&a| exps[i][a]).sum();
                    let after: i64 = ds[pos + 1..].iter().map(|&a| exps[i][a]).sum();
                    for &(a, b, s) in &raise {
                        // E moves v_a to v_b, F moves v_b back to v_a
                        if ds[pos] == a {
                            let target = idx - place(a, pos) + place(b, pos);
                            e.push((idx, target, f.mul(&f.from_i64(s), &f.q_pow(before))));
                        }
                        if ds[pos] == b {
                            let target = idx - place(b, pos) + place(a, pos);
                            fl.push((idx, target, f.mul(&f.from_i64(s), &f.q_pow(-after))));
                        }
                    }
                }
            }
            out.e.push(Mat::from_triples(f, dim, dim, e));
            out.f.push(Mat::from_triples(f, dim, dim, fl));
            out.k.push(Mat::diagonal(f, kd));
            out.k_inv.push(Mat::diagonal(f, kinv));
        }
        out
    }
}
