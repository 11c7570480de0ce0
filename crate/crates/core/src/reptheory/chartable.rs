//! Character tables by the Dixon–Schneider method.
//!
//! Central characters are common eigenvectors of the class multiplication
//! matrices. They are found over a prime field F_p with p ≡ 1 mod exp(G),
//! then lifted to Q(ζ_e) through eigenvalue multiplicities along power maps.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{int, Cyclotomic, ExactRational};
use crate::error::{Error, Result};
use crate::group::{Classes, GroupTable};

pub const DEFAULT_ORDER_BOUND: usize = 2000;

/// Irreducible characters of a finite group, rows indexed by character and
/// columns by conjugacy class.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub order: usize,
    pub classes: Classes,
    /// Class of each element's inverse, indexed by class.
    pub inverse_class: Vec<usize>,
    /// Values live in Q(ζ_exponent).
    pub exponent: u32,
    pub characters: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes.size(c)
    }

    pub fn degree(&self, chi: usize) -> usize {
        self.characters[chi][0]
            .to_rational()
            .and_then(|r| r.to_integer().to_usize())
            .expect("degree is a positive integer")
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.characters[chi][class]
    }

    /// Value on a group element.
    pub fn value_at(&self, chi: usize, element: usize) -> &Cyclotomic {
        &self.characters[chi][self.classes.class_of[element]]
    }

    pub fn is_rational(&self) -> bool {
        self.characters.iter().flatten().all(Cyclotomic::is_rational)
    }

    /// Integer table, when every value is a rational integer.
    pub fn integer_values(&self) -> Option<Vec<Vec<i64>>> {
        self.characters
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_rational().filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_i64()))
                    .collect()
            })
            .collect()
    }

    /// Row and column orthogonality, exactly.
    pub fn check_orthogonality(&self) -> bool {
        let k = self.num_classes();
        let e = self.exponent;
        let g = int(self.order as i64);
        for a in 0..k {
            for b in a..k {
                let mut s = Cyclotomic::zero(e);
                for c in 0..k {
                    let t = &self.characters[a][c] * &self.characters[b][c].conj();
                    s = &s + &t.scale(&int(self.class_size(c) as i64));
                }
                let expected = if a == b { g.clone() } else { ExactRational::zero() };
                if s != Cyclotomic::from_rational(e, expected) {
                    return false;
                }
            }
        }
        for c in 0..k {
            for d in c..k {
                let mut s = Cyclotomic::zero(e);
                for row in &self.characters {
                    s = &s + &(&row[c] * &row[d].conj());
                }
                let expected = if c == d { g.clone() / int(self.class_size(c) as i64) } else { ExactRational::zero() };
                if s != Cyclotomic::from_rational(e, expected) {
                    return false;
                }
            }
        }
        true
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap()
}

/// Row-reduced basis of a subspace of F_p^k; `pivots[r]` is the leading
/// column of row r.
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn row_reduce(mut rows: Vec<Vec<u64>>, p: u64) -> Subspace {
    let k = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..k {
                    rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Subspace { rows, pivots }
}

/// Kernel of a square matrix over F_p.
fn kernel(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let red = row_reduce(a.to_vec(), p);
    let free: Vec<usize> = (0..n).filter(|c| !red.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in red.rows.iter().zip(&red.pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial over F_p, lowest degree first.
fn charpoly_mod(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mul = |x: &[Vec<u64>], y: &[Vec<u64>]| -> Vec<Vec<u64>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).fold(0u64, |s, k| (s + x[i][k] * y[k][j]) % p)).collect()).collect()
    };
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    let mut acc = vec![vec![0u64; n]; n];
    for k in 1..=n {
        let mut next = mul(a, &acc);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = (row[i] + coeffs[n - k + 1]) % p;
        }
        acc = next;
        let prod = mul(a, &acc);
        let t = (0..n).fold(0u64, |s, i| (s + prod[i][i]) % p);
        coeffs[n - k] = (p - t * inv_mod(k as u64, p) % p) % p;
    }
    coeffs
}

fn roots_mod(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| poly.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0).collect()
}

/// Compute the irreducible characters of `g`, refusing groups above `bound`.
pub fn character_table(g: &GroupTable, bound: usize) -> Result<CharacterTable> {
    let n = g.order();
    if n > bound {
        return Err(Error::TooLarge { order: n, bound });
    }
    let classes = g.classes();
    let k = classes.len();
    let exponent = g.exponent() as u64;
    let mut p = exponent + 1;
    while !(is_prime(p) && p > 4 * n as u64) {
        p += exponent;
    }
    let inverse_class: Vec<usize> = (0..k).map(|c| classes.class_of[g.inv(classes.representative(c))]).collect();

    // a[i][j][l] = #{x ∈ C_i : x⁻¹·g_l ∈ C_j}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k {
        for l in 0..k {
            let gl = classes.representative(l);
            for &x in &classes.members[i] {
                let j = classes.class_of[g.mul(g.inv(x), gl)];
                a[i][j][l] += 1;
            }
        }
    }

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect()];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let sub = row_reduce(space, p);
            let d = sub.rows.len();
            // restricted[r][s] = coordinate r of M_i·b_s
            let images: Vec<Vec<u64>> = sub
                .rows
                .iter()
                .map(|b| (0..k).map(|j| (0..k).fold(0u64, |s, l| (s + a[i][j][l] * b[l]) % p)).collect())
                .collect();
            let restricted: Vec<Vec<u64>> =
                (0..d).map(|r| (0..d).map(|s| images[s][sub.pivots[r]]).collect()).collect();
            let cp = charpoly_mod(&restricted, p);
            let mut total = 0;
            for lambda in roots_mod(&cp, p) {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|r| (0..d).map(|s| (restricted[r][s] + if r == s { p - lambda } else { 0 }) % p).collect())
                    .collect();
                let ker = kernel(&shifted, p);
                total += ker.len();
                let vecs: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|c| (0..k).map(|l| (0..d).fold(0u64, |s, r| (s + c[r] * sub.rows[r][l]) % p)).collect())
                    .collect();
                next.push(vecs);
            }
            if total != d {
                return Err(Error::LiftFailure("class matrix is not diagonalizable mod p".into()));
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::LiftFailure("class matrices do not separate characters".into()));
    }

    let z = primitive_root(p);
    let zeta_e = pow_mod(z, (p - 1) / exponent, p);
    let orders: Vec<u64> = (0..k).map(|c| g.element_order(classes.representative(c)) as u64).collect();
    let mut characters = Vec::with_capacity(k);
    for space in spaces {
        let v = &space[0];
        let v0inv = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * v0inv % p).collect();
        let s = (0..k)
            .fold(0u64, |s, c| (s + omega[c] * omega[inverse_class[c]] % p * inv_mod(classes.size(c) as u64, p)) % p);
        let d2 = n as u64 % p * inv_mod(s, p) % p;
        let d = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::LiftFailure("degree is not a square root".into()))?;
        let modvals: Vec<u64> = (0..k).map(|c| d * omega[c] % p * inv_mod(classes.size(c) as u64, p) % p).collect();
        let mut row = Vec::with_capacity(k);
        for c in 0..k {
            let o = orders[c];
            let gc = classes.representative(c);
            let zeta_o = pow_mod(zeta_e, exponent / o, p);
            let powers: Vec<u64> = (0..o).map(|t| modvals[classes.class_of[g.pow(gc, t as usize)]]).collect();
            let o_inv = inv_mod(o, p);
            let mut coeffs = vec![ExactRational::zero(); exponent as usize];
            let mut total = 0;
            for l in 0..o {
                let m = (0..o)
                    .fold(0u64, |s, t| (s + powers[t as usize] * pow_mod(zeta_o, (p - 1) - (l * t) % (p - 1), p)) % p)
                    * o_inv
                    % p;
                if m > d {
                    return Err(Error::LiftFailure(format!("eigenvalue multiplicity {m} exceeds degree {d}")));
                }
                total += m;
                coeffs[(l * (exponent / o)) as usize] += ExactRational::from_integer(BigInt::from(m));
            }
            if total != d {
                return Err(Error::LiftFailure("eigenvalue multiplicities do not sum to the degree".into()));
            }
            row.push(crate::algebra::cyclo_reduce(exponent as u32, &coeffs));
        }
        characters.push(row);
    }
    // degree ascending, then larger values first, so the trivial character leads
    characters.sort_by(|x, y| {
        let dx = x[0].coeffs()[0].clone();
        let dy = y[0].coeffs()[0].clone();
        dx.cmp(&dy).then_with(|| {
            let kx: Vec<&[ExactRational]> = x.iter().map(|v| v.coeffs()).collect();
            let ky: Vec<&[ExactRational]> = y.iter().map(|v| v.coeffs()).collect();
            ky.cmp(&kx)
        })
    });
    let table = CharacterTable { order: n, classes, inverse_class, exponent: exponent as u32, characters };
    if !table.check_orthogonality() {
        return Err(Error::LiftFailure("orthogonality check failed".into()));
    }
    Ok(table)
}
