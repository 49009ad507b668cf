//! Full-rank sublattices of Z^n in Hermite normal form, used for ideals of
//! Z[θ] written on the power basis.

use num_integer::Integer;

/// Upper-triangular HNF basis: row `c` has its positive pivot in column `c`
/// and entries above each pivot are reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    rows: Vec<Vec<i128>>,
    /// A positive integer `m` with `m·Z^n` inside the lattice.
    modulus: i128,
}

impl Lattice {
    /// The lattice spanned by `gens` together with `m·Z^n`.
    pub fn from_generators(n: usize, gens: &[Vec<i128>], m: i128) -> Self {
        assert!(m > 0);
        let mut rows: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| if i == j { m } else { 0 }).collect()).collect();
        for g in gens {
            let mut v: Vec<i128> = g.iter().map(|x| x.rem_euclid(m)).collect();
            v.resize(n, 0);
            for c in 0..n {
                if v[c] == 0 {
                    continue;
                }
                let h = &rows[c];
                let e = h[c].extended_gcd(&v[c]);
                let (a, b) = (h[c] / e.gcd, v[c] / e.gcd);
                let new: Vec<i128> = (0..n).map(|k| e.x * h[k] + e.y * v[k]).collect();
                let rest: Vec<i128> = (0..n).map(|k| a * v[k] - b * h[k]).collect();
                rows[c] = new;
                v = rest;
            }
            Self::reduce_rows(&mut rows, m);
        }
        Lattice { rows, modulus: m }
    }

    fn reduce_rows(rows: &mut [Vec<i128>], m: i128) {
        let n = rows.len();
        for c in 0..n {
            // keep the pivot row small; m·e_k lies in the lattice
            for k in c + 1..n {
                rows[c][k] = rows[c][k].rem_euclid(m);
            }
        }
        for c in (0..n).rev() {
            for r in 0..c {
                let k = Integer::div_floor(&rows[r][c], &rows[c][c]);
                if k != 0 {
                    for j in c..n {
                        rows[r][j] -= k * rows[c][j];
                    }
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn modulus(&self) -> i128 {
        self.modulus
    }

    pub fn rows(&self) -> &[Vec<i128>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<i128> {
        (0..self.dim()).map(|c| self.rows[c][c]).collect()
    }

    /// Index in Z^n, the product of the pivots.
    pub fn index(&self) -> u128 {
        self.pivots().iter().map(|&d| d as u128).product()
    }

    /// Canonical representative with `0 ≤ v[c] < pivot_c`.
    pub fn reduce(&self, v: &[i128]) -> Vec<i128> {
        let n = self.dim();
        let mut v: Vec<i128> = v.to_vec();
        v.resize(n, 0);
        for c in 0..n {
            let k = Integer::div_floor(&v[c], &self.rows[c][c]);
            if k != 0 {
                for j in c..n {
                    v[j] -= k * self.rows[c][j];
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn encode(&self, canonical: &[i128]) -> usize {
        let mut idx = 0usize;
        for c in (0..self.dim()).rev() {
            idx = idx * self.rows[c][c] as usize + canonical[c] as usize;
        }
        idx
    }

    pub fn decode(&self, mut idx: usize) -> Vec<i128> {
        let mut v = Vec::with_capacity(self.dim());
        for c in 0..self.dim() {
            let d = self.rows[c][c] as usize;
            v.push((idx % d) as i128);
            idx /= d;
        }
        v
    }

    /// Whether `other` is contained in `self`.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_of_simple_lattices() {
        // span of (2, 1) and 4·Z², which also contains (0, 2)
        let l = Lattice::from_generators(2, &[vec![2, 1]], 4);
        assert_eq!(l.index(), 4);
        assert!(l.contains(&[0, 2]));
        assert!(!l.contains(&[0, 1]));
        assert!(l.contains(&[2, 1]));
        assert!(l.contains(&[0, 4]));
        assert!(!l.contains(&[1, 0]));
        assert!(l.contains(&[4, 2]));
        assert!(l.contains(&[0, 8]));
    }

    #[test]
    fn encode_round_trip() {
        let l = Lattice::from_generators(3, &[vec![1, 1, 0], vec![0, 2, 1]], 6);
        for idx in 0..l.index() as usize {
            let v = l.decode(idx);
            assert_eq!(l.reduce(&v), v);
            assert_eq!(l.encode(&v), idx);
        }
    }

    #[test]
    fn reduction_is_canonical() {
        let l = Lattice::from_generators(3, &[vec![3, 1, 2], vec![1, 0, 5]], 12);
        for a in -5i128..5 {
            for b in -5i128..5 {
                let v = vec![a, b, a * b];
                let shifted: Vec<i128> = v.iter().zip(&l.rows()[1]).map(|(x, y)| x + 3 * y).collect();
                assert_eq!(l.reduce(&v), l.reduce(&shifted));
            }
        }
    }
}
