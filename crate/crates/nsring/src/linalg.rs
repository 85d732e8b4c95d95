//! Dense linear algebra over a prime field F_p, plus a weighted union-find
//! for spans of vectors with at most two nonzero entries.
//!
//! Everything here works on plain `u32` values reduced mod p; the modulus is
//! carried by the containing structure, matching the per-object `field_mod`
//! convention used throughout the crate.

pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + (p - b) as u64;
    (s % p as u64) as u32
}

pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r: u32 = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Multiplicative inverse mod a prime p; a must be nonzero mod p.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a % p, p as u64 - 2, p)
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    let n64 = n as u64;
    while d * d <= n64 {
        if n64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A subspace of F_p^width kept in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct RowSpace {
    pub p: u32,
    pub width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(p: u32, width: usize) -> Self {
        RowSpace {
            p,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_in_place(&self, v: &mut [u32]) {
        let p = self.p;
        for (row, &pc) in self.rows.iter().zip(self.pivots.iter()) {
            let c = v[pc];
            if c != 0 {
                for k in pc..self.width {
                    if row[k] != 0 {
                        v[k] = sub_mod(v[k], mul_mod(c, row[k], p), p);
                    }
                }
            }
        }
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.reduce_in_place(&mut v);
        let pivot = match v.iter().position(|&c| c != 0) {
            Some(j) => j,
            None => return false,
        };
        let inv = inv_mod(v[pivot], self.p);
        for c in v.iter_mut() {
            *c = mul_mod(*c, inv, self.p);
        }
        // back-substitute into existing rows to keep RREF
        let p = self.p;
        for row in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for k in pivot..self.width {
                    if v[k] != 0 {
                        row[k] = sub_mod(row[k], mul_mod(c, v[k], p), p);
                    }
                }
            }
        }
        let pos = self
            .pivots
            .iter()
            .position(|&q| q > pivot)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|&c| c == 0)
    }

    /// Basis of {x : M x = 0} for the matrix whose rows were inserted here.
    /// Free columns are taken in ascending order, so the output is
    /// deterministic.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let p = self.p;
        let mut basis = Vec::new();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.width];
            for &c in &self.pivots {
                s[c] = true;
            }
            s
        };
        for free in 0..self.width {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![0u32; self.width];
            v[free] = 1 % p;
            for (row, &pc) in self.rows.iter().zip(self.pivots.iter()) {
                if row[free] != 0 {
                    v[pc] = neg_mod(row[free], p);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Kernel basis of the matrix given by `rows` (each of length `width`).
pub fn kernel_basis(p: u32, rows: &[Vec<u32>], width: usize) -> Vec<Vec<u32>> {
    let mut rs = RowSpace::new(p, width);
    for r in rows {
        rs.insert(r.clone());
    }
    rs.nullspace()
}

/// Union-find over slot indices tracking spans of 1- and 2-sparse vectors.
///
/// Each node x carries a potential pot[x] with the invariant
/// e_x = pot[x] * e_root in the quotient by the span. Adding the vector
/// cu*e_u + cv*e_v identifies e_u with -(cv/cu) e_v; a contradiction marks
/// the component as grounded (the span contains its whole coordinate
/// subspace). A 1-sparse vector grounds its component directly.
#[derive(Debug, Clone)]
pub struct PotUf {
    p: u32,
    parent: Vec<usize>,
    pot: Vec<u32>,
    grounded: Vec<bool>,
}

impl PotUf {
    pub fn new(p: u32, n: usize) -> Self {
        PotUf {
            p,
            parent: (0..n).collect(),
            pot: vec![1 % p; n],
            grounded: vec![false; n],
        }
    }

    /// Returns (root, potential of x relative to root).
    pub fn find(&mut self, x: usize) -> (usize, u32) {
        if self.parent[x] == x {
            return (x, self.pot[x]);
        }
        let (root, pp) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.pot[x] = mul_mod(self.pot[x], pp, self.p);
        (root, self.pot[x])
    }

    pub fn ground(&mut self, x: usize) {
        let (r, _) = self.find(x);
        self.grounded[r] = true;
    }

    pub fn is_grounded(&mut self, x: usize) -> bool {
        let (r, _) = self.find(x);
        self.grounded[r]
    }

    /// Add the relation cu*e_u + cv*e_v = 0 (both coefficients nonzero).
    pub fn add_pair(&mut self, u: usize, cu: u32, v: usize, cv: u32) {
        debug_assert!(cu % self.p != 0 && cv % self.p != 0);
        let p = self.p;
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        // cu*pu*e_ru + cv*pv*e_rv = 0
        let a = mul_mod(cu, pu, p);
        let b = mul_mod(cv, pv, p);
        if ru == rv {
            if add_mod(a, b, p) != 0 {
                self.grounded[ru] = true;
            }
            return;
        }
        // e_ru = -(b/a) e_rv
        let w = neg_mod(mul_mod(b, inv_mod(a, p), p), p);
        self.parent[ru] = rv;
        self.pot[ru] = w;
        if self.grounded[ru] {
            self.grounded[rv] = true;
        }
    }

    /// Is the sparse vector sum(c_i e_{x_i}) in the span?
    pub fn in_span(&mut self, terms: &[(usize, u32)]) -> bool {
        let p = self.p;
        let mut sums: Vec<(usize, u32)> = Vec::with_capacity(terms.len());
        for &(x, c) in terms {
            let (r, px) = self.find(x);
            let add = mul_mod(c, px, p);
            match sums.iter_mut().find(|(root, _)| *root == r) {
                Some((_, s)) => *s = add_mod(*s, add, p),
                None => sums.push((r, add)),
            }
        }
        sums.into_iter().all(|(r, s)| s == 0 || self.grounded[r])
    }

    pub fn same_component(&mut self, u: usize, v: usize) -> bool {
        self.find(u).0 == self.find(v).0
    }

    /// Number of components among `verts`, and how many of them are grounded.
    pub fn component_stats(&mut self, verts: &[usize]) -> (usize, usize) {
        let mut roots: Vec<usize> = verts.iter().map(|&v| self.find(v).0).collect();
        roots.sort_unstable();
        roots.dedup();
        let grounded = roots.iter().filter(|&&r| self.grounded[r]).count();
        (roots.len(), grounded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rowspace_rank_and_membership() {
        let p = 101;
        let mut rs = RowSpace::new(p, 3);
        assert!(rs.insert(vec![1, 2, 3]));
        assert!(rs.insert(vec![0, 1, 1]));
        assert!(!rs.insert(vec![1, 3, 4]));
        assert_eq!(rs.rank(), 2);
        assert!(rs.contains(&[2, 4, 6]));
        assert!(!rs.contains(&[0, 0, 1]));
    }

    #[test]
    fn nullspace_of_ones_row_is_two_entry() {
        let mut rs = RowSpace::new(101, 4);
        rs.insert(vec![1, 1, 1, 1]);
        let ns = rs.nullspace();
        assert_eq!(ns.len(), 3);
        for v in &ns {
            assert_eq!(v.iter().filter(|&&c| c != 0).count(), 2);
        }
    }

    #[test]
    fn potuf_cycle_consistency() {
        // e1 - e2, e2 - e3 consistent; adding e1 + e3 grounds (char != 2).
        let p = 101;
        let mut uf = PotUf::new(p, 3);
        uf.add_pair(0, 1, 1, p - 1);
        uf.add_pair(1, 1, 2, p - 1);
        assert!(uf.in_span(&[(0, 1), (2, p - 1)]));
        assert!(!uf.in_span(&[(0, 1), (2, 1)]));
        uf.add_pair(0, 1, 2, 1);
        assert!(uf.in_span(&[(0, 1), (2, 1)]));
        assert!(uf.is_grounded(1));
    }

    #[test]
    fn potuf_char_two_sign_collapse() {
        // over F_2 the "inconsistent" cycle is consistent
        let p = 2;
        let mut uf = PotUf::new(p, 3);
        uf.add_pair(0, 1, 1, 1);
        uf.add_pair(1, 1, 2, 1);
        uf.add_pair(0, 1, 2, 1);
        assert!(!uf.is_grounded(0));
    }
}
