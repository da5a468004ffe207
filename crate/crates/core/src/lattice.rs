//! Lattice codes in `Z^n` and their correspondence with `B_t[l]` sequences.
//!
//! A sequence `b_1..b_n` in `G` defines the kernel lattice
//! `L = { v : sum v_i b_i = 0 }`; conversely `Z^n / L` is a finite abelian
//! group (read off the Smith form of a basis) and the images of the unit
//! vectors form a sequence. `L` packs `S(n, t, l)` exactly when the syndrome
//! map is injective on the sphere, and tiles when additionally
//! `V(L) = |S(n, t, l)|`.

use crate::error::{Error, Result};
use crate::integers::{bound, hermite_normal_form, hnf_with_transform, smith_normal_form, IntMatrix};
use crate::sequences::{verify_bh, AbelianGroup, BhSequence, Injectivity};
use crate::sphere::{sphere_size, CodeParams};

/// Full-rank integer lattice, rows of `generator` are the basis.
#[derive(Debug, Clone)]
pub struct LatticeCode {
    generator: IntMatrix,
    hnf: IntMatrix,
    volume: u128,
    params: CodeParams,
}

impl PartialEq for LatticeCode {
    fn eq(&self, other: &Self) -> bool {
        self.hnf == other.hnf && self.params == other.params
    }
}

impl Eq for LatticeCode {}

impl LatticeCode {
    pub fn new(generator: IntMatrix, params: CodeParams) -> Result<Self> {
        if !generator.is_square() {
            return Err(Error::InvalidParams(format!(
                "generator must be square, got {}x{}",
                generator.rows(),
                generator.cols()
            )));
        }
        if generator.rows() != params.n() {
            return Err(Error::LengthMismatch { expected: params.n(), got: generator.rows() });
        }
        let volume = generator.abs_det()?;
        if volume == 0 {
            return Err(Error::Singular);
        }
        let hnf = hermite_normal_form(&generator)?.d;
        Ok(LatticeCode { generator, hnf, volume, params })
    }

    pub fn n(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &IntMatrix {
        &self.generator
    }

    /// Canonical basis; two lattices are equal iff these agree.
    pub fn hnf_basis(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn with_params(&self, params: CodeParams) -> Result<Self> {
        Self::new(self.generator.clone(), params)
    }

    /// Lattice membership by back-substitution against the Hermite basis.
    pub fn contains(&self, v: &[i128]) -> Result<bool> {
        let n = self.n();
        if v.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: v.len() });
        }
        let mut rest = v.to_vec();
        for i in 0..n {
            let pivot = self.hnf[(i, i)];
            if rest[i] % pivot != 0 {
                return Ok(false);
            }
            let q = rest[i] / pivot;
            for (j, r) in rest.iter_mut().enumerate().skip(i) {
                *r = bound::sub(*r, bound::mul(q, self.hnf[(i, j)])?)?;
            }
        }
        Ok(true)
    }
}

pub fn volume(lattice: &LatticeCode) -> u128 {
    lattice.volume
}

/// Kernel lattice of the syndrome map of `seq`, in Hermite form.
///
/// Computed as the projection onto `v` of the integer kernel of
/// `(v, w) -> v*B - w*diag(d)`, where the rows of `B` are the coordinates of
/// the `b_i` and `d` the invariant factors of `G`.
pub fn lattice_from_sequence(seq: &BhSequence) -> Result<LatticeCode> {
    let n = seq.n();
    let factors = seq.group().factors();
    let k = factors.len();
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(n + k);
    for b in seq.elements() {
        rows.push(b.coords().iter().map(|&c| c as i128).collect());
    }
    for (j, &d) in factors.iter().enumerate() {
        let mut r = vec![0i128; k];
        r[j] = -(d as i128);
        rows.push(r);
    }
    let map = IntMatrix::new(n + k, k, rows.into_iter().flatten().collect())?;
    let (u, _, rank) = hnf_with_transform(&map)?;
    if rank != k {
        return Err(Error::Inconsistency(format!("relation matrix has rank {rank}, expected {k}")));
    }
    let kernel: Vec<Vec<i128>> = (rank..n + k).map(|i| u.row(i)[..n].to_vec()).collect();
    let kernel = IntMatrix::from_rows(&kernel)?;
    let basis = hermite_normal_form(&kernel)?.d;
    LatticeCode::new(basis, seq.params())
}

/// `Z^n / L` and the images of the unit vectors, via the Smith form.
///
/// With `U*G*V = D`, a row vector `x` lies in `L` iff `(x*V)_j = 0 mod d_j`
/// for all `j`, so the projection is `x -> x*V` reduced coordinatewise.
/// Factors equal to one are dropped.
pub fn sequence_from_lattice(lattice: &LatticeCode) -> Result<BhSequence> {
    let snf = smith_normal_form(lattice.generator())?;
    let diag = snf.diagonal();
    let kept: Vec<usize> = (0..diag.len()).filter(|&j| diag[j] != 1).collect();
    let group = AbelianGroup::new(kept.iter().map(|&j| diag[j] as u128).collect())?;
    if group.order() != lattice.volume {
        return Err(Error::Inconsistency(format!(
            "quotient order {} differs from volume {}",
            group.order(),
            lattice.volume
        )));
    }
    let elements = (0..lattice.n())
        .map(|i| {
            let coords: Vec<i128> = kept.iter().map(|&j| snf.v[(i, j)]).collect();
            group.reduce(&coords)
        })
        .collect::<Result<Vec<_>>>()?;
    let p = lattice.params();
    BhSequence::new(group, elements, p.t(), p.ell())
}

/// Whether translates of `S(n, t, l)` by lattice points are disjoint. On
/// failure the witness is a pair of sphere vectors whose difference is a
/// lattice point.
pub fn verify_packing(lattice: &LatticeCode, p: &CodeParams) -> Result<Injectivity> {
    if p.n() != lattice.n() {
        return Err(Error::LengthMismatch { expected: lattice.n(), got: p.n() });
    }
    let seq = sequence_from_lattice(lattice)?.with_params(p.t(), p.ell())?;
    verify_bh(&seq)
}

/// Packing plus `V(L) = |S(n, t, l)|`, i.e. a tiling.
pub fn verify_perfect(lattice: &LatticeCode, p: &CodeParams) -> Result<bool> {
    if lattice.volume != sphere_size(p)? {
        return Ok(false);
    }
    Ok(verify_packing(lattice, p)?.is_injective())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{construct_perfect_sequence, GroupElement};

    fn p(n: usize, t: usize, ell: u64) -> CodeParams {
        CodeParams::new(n, t, ell).unwrap()
    }

    fn lat<const N: usize>(rows: [[i128; N]; N], params: CodeParams) -> LatticeCode {
        LatticeCode::new(IntMatrix::from_rows(&rows).unwrap(), params).unwrap()
    }

    fn cyclic_seq(m: u128, elems: &[u128], t: usize, ell: u64) -> BhSequence {
        let g = AbelianGroup::cyclic(m).unwrap();
        let es: Vec<GroupElement> = elems.iter().map(|&e| g.element(vec![e]).unwrap()).collect();
        BhSequence::new(g, es, t, ell).unwrap()
    }

    #[test]
    fn volume_examples() {
        assert_eq!(volume(&LatticeCode::new(IntMatrix::identity(3), p(3, 1, 1)).unwrap()), 1);
        assert_eq!(volume(&lat([[2, 0], [0, 2]], p(2, 2, 1))), 4);
        assert_eq!(volume(&lattice_from_sequence(&cyclic_seq(7, &[1, 2, 4], 2, 1)).unwrap()), 7);
    }

    #[test]
    fn singular_generator_rejected() {
        let g = IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(LatticeCode::new(g, p(2, 1, 1)), Err(Error::Singular));
    }

    #[test]
    fn kernel_lattice_examples() {
        let one = lattice_from_sequence(&cyclic_seq(2, &[1], 1, 1)).unwrap();
        assert_eq!(one.hnf_basis(), &IntMatrix::from_rows(&[[2]]).unwrap());

        let two = lattice_from_sequence(&cyclic_seq(3, &[1, 2], 1, 1)).unwrap();
        assert_eq!(two.hnf_basis(), &IntMatrix::from_rows(&[[1, 1], [0, 3]]).unwrap());
        assert_eq!(volume(&two), 3);
        // v1 + 2 v2 = 0 mod 3 over a window of Z^2.
        for a in -4..=4i128 {
            for b in -4..=4i128 {
                assert_eq!(two.contains(&[a, b]).unwrap(), (a + 2 * b).rem_euclid(3) == 0);
            }
        }

        let three = lattice_from_sequence(&cyclic_seq(7, &[1, 2, 4], 2, 1)).unwrap();
        assert_eq!(volume(&three), 7);
        for v in [[7, 0, 0], [-2, 1, 0], [-4, 0, 1]] {
            assert!(three.contains(&v).unwrap(), "{v:?}");
        }
        assert!(!three.contains(&[1, 0, 0]).unwrap());
        let by_hand = lat([[7, 0, 0], [-2, 1, 0], [-4, 0, 1]], p(3, 2, 1));
        assert_eq!(three, by_hand);
    }

    #[test]
    fn non_generating_sequence_has_smaller_volume() {
        // {2, 4} in Z_8 generates the index-2 subgroup.
        let l = lattice_from_sequence(&cyclic_seq(8, &[2, 4], 1, 1)).unwrap();
        assert_eq!(volume(&l), 4);
        let g = AbelianGroup::new(vec![2, 2]).unwrap();
        let s = BhSequence::new(g.clone(), vec![g.element(vec![1, 1]).unwrap()], 1, 1).unwrap();
        assert_eq!(volume(&lattice_from_sequence(&s).unwrap()), 2);
    }

    #[test]
    fn quotient_examples() {
        let s = sequence_from_lattice(&LatticeCode::new(IntMatrix::identity(2), p(2, 1, 1)).unwrap()).unwrap();
        assert_eq!(s.group(), &AbelianGroup::trivial());
        assert!(s.elements().iter().all(GroupElement::is_zero));

        let s = sequence_from_lattice(&lat([[2, 0], [0, 2]], p(2, 1, 1))).unwrap();
        assert_eq!(s.group().factors(), &[2, 2]);
        assert_eq!(s.elements()[0].coords(), &[1, 0]);
        assert_eq!(s.elements()[1].coords(), &[0, 1]);

        let l = lattice_from_sequence(&cyclic_seq(7, &[1, 2, 4], 2, 1)).unwrap();
        let back = sequence_from_lattice(&l).unwrap();
        assert_eq!(back.group().factors(), &[7]);
        assert!(verify_bh(&back).unwrap().is_injective());
    }

    #[test]
    fn quotient_projection_kills_lattice() {
        let l = lat([[4, 7, 1], [-2, 3, 5], [6, 0, 9]], p(3, 1, 1));
        let s = sequence_from_lattice(&l).unwrap();
        assert_eq!(s.group().order(), volume(&l));
        for i in 0..3 {
            let g = s.group();
            let mut acc = g.zero();
            for (j, b) in s.elements().iter().enumerate() {
                let c = l.generator()[(i, j)].rem_euclid(g.factors().last().copied().unwrap_or(1) as i128);
                acc = g.add(&acc, &g.scale(b, c as u128));
            }
            assert!(acc.is_zero(), "basis row {i} maps to {acc:?}");
        }
    }

    #[test]
    fn packing_examples() {
        let z3 = LatticeCode::new(IntMatrix::identity(3), p(3, 1, 1)).unwrap();
        match verify_packing(&z3, &p(3, 1, 1)).unwrap() {
            Injectivity::Collides(c) => {
                let d: Vec<i128> =
                    c.found.entries().iter().zip(c.prior.entries()).map(|(&a, &b)| a as i128 - b as i128).collect();
                assert!(z3.contains(&d).unwrap());
                assert!(c.prior.entries().iter().all(|&x| x == 0));
            }
            Injectivity::Injective => panic!("Z^n packs nothing"),
        }
        let l = lattice_from_sequence(&cyclic_seq(7, &[1, 2, 4], 2, 1)).unwrap();
        assert!(verify_packing(&l, &p(3, 2, 1)).unwrap().is_injective());
        // Differences of points of [0,2]^2 have entries in [-2,2], so none
        // is a nonzero point of 3Z^2: a packing, and a tiling by volume.
        let cube = lat([[3, 0], [0, 3]], p(2, 2, 2));
        assert!(verify_packing(&cube, &p(2, 2, 2)).unwrap().is_injective());
        assert!(verify_perfect(&cube, &p(2, 2, 2)).unwrap());
    }

    #[test]
    fn perfect_examples() {
        let l = lattice_from_sequence(&construct_perfect_sequence(3, 1).unwrap()).unwrap();
        assert!(verify_perfect(&l, &p(3, 2, 1)).unwrap());
        for n in 1..=3 {
            for ell in 1..=3i128 {
                let diag = vec![ell + 1; n];
                let cube = LatticeCode::new(IntMatrix::diagonal(&diag).unwrap(), p(n, n, ell as u64)).unwrap();
                assert!(verify_perfect(&cube, &p(n, n, ell as u64)).unwrap());
            }
            let zn = LatticeCode::new(IntMatrix::identity(n), p(n, 1, 1)).unwrap();
            assert!(!verify_perfect(&zn, &p(n, 1, 1)).unwrap());
        }
    }

    #[test]
    fn packing_rejects_dimension_mismatch() {
        let l = lat([[3, 0], [0, 3]], p(2, 2, 2));
        assert!(verify_packing(&l, &p(3, 1, 1)).is_err());
    }
}
