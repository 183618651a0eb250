use std::sync::Arc;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::algebra::{catalog, Algebra};
use crate::bimodule::{Bimodule, BimoduleMorphism};
use crate::ccn::{fuse_defects, identity_defect, Defect, Intertwiner, Net, Sector};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;

const ATTEMPTS: usize = 64;

/// Random valid instances drawn from one splitmix64 stream.
///
/// Integers below `n` are drawn as `next_u64() % n`. Algebras come from the
/// catalog; bimodules are quotients of free bimodules by submodules
/// generated by random vectors with one or two entries `±1`.
pub struct InstanceGenerator {
    rng: SplitMix64,
    max_dim: usize,
}

fn fuse_all(ds: &[Defect]) -> Result<Defect> {
    let mut acc = ds[0].clone();
    for d in &ds[1..] {
        acc = fuse_defects(&acc, d)?;
    }
    Ok(acc)
}

/// Smallest dimension of a nonzero bimodule between two catalog algebras.
fn min_bimodule_dim(d: &Algebra, e: &Algebra) -> usize {
    let m = |a: &Algebra| if a.is_commutative() { 1 } else { a.matrix_size().unwrap_or(1) };
    m(d) * m(e)
}

/// The characters of a commutative catalog algebra, as values on its basis.
fn characters(a: &Algebra) -> Vec<Vec<Rational>> {
    let dual = catalog::dual_numbers();
    let z2 = catalog::z2_group_algebra();
    let q = Rational::from_int;
    if a == &z2 {
        vec![vec![q(1), q(1)], vec![q(1), q(-1)]]
    } else if a == &dual {
        vec![vec![q(1), q(0)]]
    } else {
        vec![a.unit().to_vec()]
    }
}

impl InstanceGenerator {
    pub fn new(seed: u64, max_dim: usize) -> Self {
        InstanceGenerator { rng: SplitMix64::seed_from_u64(seed), max_dim }
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.rng.next_u64() % n as u64) as usize
    }

    fn pick<T: Clone>(&mut self, items: &[T]) -> T {
        items[self.below(items.len())].clone()
    }

    /// Catalog algebras `a_0, …, a_n` admitting nonzero bimodules of
    /// dimension at most `max_dim` between neighbours.
    pub fn algebra_chain(&mut self, n: usize) -> Result<Vec<Arc<Algebra>>> {
        let all = catalog::all();
        for _ in 0..ATTEMPTS {
            let chain: Vec<_> = (0..=n).map(|_| self.pick(&all)).collect();
            if chain.windows(2).all(|w| min_bimodule_dim(&w[0], &w[1]) <= self.max_dim) {
                return Ok(chain);
            }
        }
        Err(Error::InvalidArgument(format!("no algebra chain fits max-dim {}", self.max_dim)))
    }

    fn sparse_vector(&mut self, n: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        for _ in 0..1 + self.below(2) {
            let i = self.below(n);
            v[i] = if self.below(2) == 0 { Rational::one() } else { -Rational::one() };
        }
        v
    }

    /// Quotients `m` by random cyclic submodules until its dimension is at
    /// most `max_dim`, never reaching zero.
    pub fn shrink(&mut self, mut m: Bimodule) -> Result<Bimodule> {
        let mut failures = 0;
        while m.dim() > self.max_dim {
            let v = self.sparse_vector(m.dim());
            let sub = m.generated_submodule(&[v]);
            if sub.dim() < m.dim() {
                m = m.quotient(&sub)?.0;
            } else {
                failures += 1;
                if failures == ATTEMPTS {
                    return Err(Error::InvalidArgument("could not shrink a random bimodule".into()));
                }
            }
        }
        Ok(m)
    }

    /// A random quotient of the free `d`–`e` bimodule.
    pub fn bimodule(&mut self, d: &Arc<Algebra>, e: &Arc<Algebra>) -> Result<Arc<Bimodule>> {
        Ok(Arc::new(self.shrink(Bimodule::free(d, e))?))
    }

    /// `n` composable random bimodules.
    pub fn bimodule_chain(&mut self, n: usize) -> Result<Vec<Arc<Bimodule>>> {
        let algs = self.algebra_chain(n)?;
        algs.windows(2).map(|w| self.bimodule(&w[0], &w[1])).collect()
    }

    pub fn net(&mut self) -> Net {
        let algs = catalog::commutative();
        Net::new(self.pick(&algs)).expect("catalog algebra is commutative")
    }

    pub fn nets(&mut self, n: usize) -> Vec<Net> {
        (0..n).map(|_| self.net()).collect()
    }

    /// A random defect between `a` and `b` whose algebra has dimension at
    /// most `cap`: an identity defect, the tensor product, a projection to
    /// one side through a character of the other, or scalars in a catalog
    /// algebra through a pair of characters.
    pub fn defect(&mut self, a: &Net, b: &Net, cap: usize) -> Defect {
        let (aa, ba) = (a.algebra(), b.algebra());
        let (da, db) = (aa.dim(), ba.dim());
        let mut candidates: Vec<Defect> = Vec::new();
        if a == b && da <= cap {
            candidates.push(identity_defect(a));
        }
        let mut push = |alg: Arc<Algebra>, cols: Vec<Vec<Rational>>| {
            if alg.dim() <= cap {
                let phi = Matrix::from_columns(alg.dim(), &cols);
                candidates.push(Defect::from_matrix(a.clone(), b.clone(), alg, phi).expect("central by construction"));
            }
        };
        let t = Arc::new(Algebra::tensor(aa, ba));
        push(t.clone(), (0..t.dim()).map(|k| t.basis_vector(k)).collect());
        let scale = |v: Vec<Rational>, s: &Rational| -> Vec<Rational> { v.iter().map(|x| x * s).collect() };
        for chi in characters(ba) {
            push(aa.clone(), (0..da * db).map(|k| scale(aa.basis_vector(k / db), &chi[k % db])).collect());
        }
        for chi in characters(aa) {
            push(ba.clone(), (0..da * db).map(|k| scale(ba.basis_vector(k % db), &chi[k / db])).collect());
        }
        for alg in catalog::all() {
            for ca in characters(aa) {
                for cb in characters(ba) {
                    let cols = (0..da * db).map(|k| scale(alg.unit().to_vec(), &(&ca[k / db] * &cb[k % db]))).collect();
                    push(alg.clone(), cols);
                }
            }
        }
        self.pick(&candidates)
    }

    /// `n + 1` random defects between `a` and `b`.
    pub fn defect_chain(&mut self, a: &Net, b: &Net, n: usize, cap: usize) -> Vec<Defect> {
        (0..=n).map(|_| self.defect(a, b, cap)).collect()
    }

    /// A random nonzero sector from `top` to `bottom`: the free bimodule,
    /// cut down so that the two net actions agree, then shrunk.
    pub fn sector(&mut self, top: &Defect, bottom: &Defect) -> Result<Option<Sector>> {
        let free = Bimodule::free(top.algebra(), bottom.algebra());
        let (da, db) = (top.left().algebra().dim(), top.right().algebra().dim());
        let mut gens = Vec::new();
        for a in 0..da {
            for b in 0..db {
                let diff = &free.act_left(&top.phi_basis(a, b)) - &free.act_right(&bottom.phi_basis(a, b));
                gens.extend((0..free.dim()).map(|v| diff.column(v)));
            }
        }
        let sub = free.generated_submodule(&gens);
        if sub.dim() == free.dim() {
            return Ok(None);
        }
        let m = self.shrink(free.quotient(&sub)?.0)?;
        Sector::new(top.clone(), bottom.clone(), Arc::new(m)).map(Some)
    }

    /// Defects `d_0, …, d_{k-1}` with `d_i` between `nets[i]` and
    /// `nets[i+1]`, redrawn until their fusion is nonzero.
    pub fn fusable_defects(&mut self, nets: &[Net], cap: usize) -> Result<Vec<Defect>> {
        for _ in 0..ATTEMPTS {
            let ds: Vec<Defect> = nets.windows(2).map(|w| self.defect(&w[0], &w[1], cap)).collect();
            if fuse_all(&ds).is_ok() {
                return Ok(ds);
            }
        }
        Err(Error::InvalidArgument("no fusable defect chain found".into()))
    }

    /// A grid of nonzero sectors: for each consecutive pair of nets a chain
    /// of `n` vertically composable sectors, such that the defects on each
    /// level fuse to a nonzero algebra. Entry `[c][r]` is the `r`-th sector
    /// of column `c`.
    pub fn sector_grid(&mut self, nets: &[Net], n: usize) -> Result<Vec<Vec<Sector>>> {
        'draw: for _ in 0..ATTEMPTS {
            let mut level = self.fusable_defects(nets, 2)?;
            let mut grid: Vec<Vec<Sector>> = vec![Vec::with_capacity(n); level.len()];
            for _ in 0..n {
                let Some((next, sectors)) = self.next_level(nets, &level)? else {
                    continue 'draw;
                };
                for (column, s) in grid.iter_mut().zip(sectors) {
                    column.push(s);
                }
                level = next;
            }
            return Ok(grid);
        }
        Err(Error::InvalidArgument("no nonzero sector grid found".into()))
    }

    /// A fusable row of defects below `level` with nonzero sectors from each
    /// defect of `level` to the one below it.
    fn next_level(&mut self, nets: &[Net], level: &[Defect]) -> Result<Option<(Vec<Defect>, Vec<Sector>)>> {
        'row: for _ in 0..ATTEMPTS {
            let next = self.fusable_defects(nets, 2)?;
            let mut sectors = Vec::with_capacity(next.len());
            for (top, bottom) in level.iter().zip(&next) {
                match self.sector(top, bottom)? {
                    Some(s) => sectors.push(s),
                    None => continue 'row,
                }
            }
            return Ok(Some((next, sectors)));
        }
        Ok(None)
    }

    fn coefficient(&mut self) -> Rational {
        Rational::from_int(self.below(4) as i64 - 1)
    }

    fn central_element(&mut self, a: &Arc<Algebra>) -> Vec<Rational> {
        let mut z = vec![Rational::zero(); a.dim()];
        for b in a.center().space().basis_vectors() {
            let c = self.coefficient();
            for (zi, bi) in z.iter_mut().zip(&b) {
                *zi += &(&c * bi);
            }
        }
        z
    }

    /// `x ↦ z·x + x·z′` for random central `z`, `z′`.
    pub fn endomorphism(&mut self, m: &Arc<Bimodule>) -> BimoduleMorphism {
        let z = self.central_element(m.left_alg());
        let z2 = self.central_element(m.right_alg());
        let matrix = &m.act_left(&z) + &m.act_right(&z2);
        BimoduleMorphism::new(m.clone(), m.clone(), matrix).expect("square matrix on the bimodule")
    }

    pub fn sector_endomorphism(&mut self, h: &Sector) -> Result<Intertwiner> {
        let f = self.endomorphism(h.bimodule());
        Intertwiner::new(h.clone(), h.clone(), f.matrix().clone())
    }
}
