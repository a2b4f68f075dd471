//! Independent oracles used by the integration and acceptance tests. None of
//! these go through the library's reflection closure, highest-root minuscule
//! test or polynomial division.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use vstab_core::{Coweight, Family, IntPoly, RootSystem, SimpleType};

pub fn rs(s: &str) -> RootSystem {
    RootSystem::build(&s.parse().unwrap()).unwrap()
}

pub fn cw(c: &[i64]) -> Coweight {
    Coweight::new(c.to_vec())
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Solves `m x = b` exactly; `None` when singular.
pub fn solve(m: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        for r in 0..n {
            if r != col {
                let f = &a[r][col] / &a[col][col];
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some((0..n).map(|i| &a[i][n] / &a[i][i]).collect())
}

/// Roots of a classical type or `G_2` in orthonormal `e_i` coordinates, with
/// the Bourbaki simple roots.
pub fn orthogonal_realization(t: SimpleType) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = t.rank();
    let e = |dim: usize, i: usize| -> Vec<i64> {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    };
    let add = |a: &[i64], b: &[i64], s: i64| -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + s * y).collect()
    };
    let mut roots = BTreeSet::new();
    let simple: Vec<Vec<i64>> = match t.family() {
        Family::A => {
            let d = n + 1;
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        roots.insert(add(&e(d, i), &e(d, j), -1));
                    }
                }
            }
            (0..n).map(|i| add(&e(d, i), &e(d, i + 1), -1)).collect()
        }
        Family::B | Family::C | Family::D => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        for s in [1, -1] {
                            for u in [1, -1] {
                                let v: Vec<i64> =
                                    add(&e(n, i), &e(n, j), u).iter().map(|x| s * x).collect();
                                roots.insert(v);
                            }
                        }
                    }
                }
                for s in [1, -1] {
                    match t.family() {
                        Family::B => {
                            roots.insert(e(n, i).iter().map(|x| s * x).collect());
                        }
                        Family::C => {
                            roots.insert(e(n, i).iter().map(|x| 2 * s * x).collect());
                        }
                        _ => {}
                    }
                }
            }
            let mut s: Vec<Vec<i64>> = (0..n - 1)
                .map(|i| add(&e(n, i), &e(n, i + 1), -1))
                .collect();
            s.push(match t.family() {
                Family::B => e(n, n - 1),
                Family::C => e(n, n - 1).iter().map(|x| 2 * x).collect(),
                _ => add(&e(n, n - 2), &e(n, n - 1), 1),
            });
            s
        }
        Family::G => {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.insert(add(&e(3, i), &e(3, j), -1));
                        let k = 3 - i - j;
                        let long: Vec<i64> = (0..3)
                            .map(|m| {
                                if m == i {
                                    2
                                } else if m == j || m == k {
                                    -1
                                } else {
                                    0
                                }
                            })
                            .collect();
                        roots.insert(long.clone());
                        roots.insert(long.iter().map(|x| -x).collect());
                    }
                }
            }
            vec![vec![1, -1, 0], vec![-2, 1, 1]]
        }
        _ => panic!("no orthogonal realization for {t}"),
    };
    (roots.into_iter().collect(), simple)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `(simple_coords, coroot coords in the coweight basis)` for every root,
/// computed from the orthogonal realization.
pub fn orthogonal_roots(t: SimpleType) -> BTreeSet<(Vec<i64>, Vec<i64>)> {
    let (roots, simple) = orthogonal_realization(t);
    let r = simple.len();
    let gram: Vec<Vec<BigRational>> = (0..r)
        .map(|i| (0..r).map(|j| q(dot(&simple[i], &simple[j]))).collect())
        .collect();
    roots
        .iter()
        .map(|v| {
            let b: Vec<BigRational> = simple.iter().map(|s| q(dot(s, v))).collect();
            let c = solve(&gram, &b).expect("simple roots are independent");
            let coords: Vec<i64> = c
                .iter()
                .map(|x| {
                    assert!(x.is_integer());
                    x.to_integer().try_into().unwrap()
                })
                .collect();
            let norm = dot(v, v);
            let coroot: Vec<i64> = simple
                .iter()
                .map(|s| {
                    let num = 2 * dot(s, v);
                    assert_eq!(num % norm, 0);
                    num / norm
                })
                .collect();
            (coords, coroot)
        })
        .collect()
}

/// Brute-force minimality: `mu` is minuscule iff no dominant `λ ≠ μ` has
/// `μ - λ` in the nonnegative integer span of the simple coroots.
///
/// Candidates are bounded by `<θ, λ> <= <θ, μ>`, which holds for every such
/// `λ` because `θ` pairs nonnegatively with all simple coroots.
pub fn minuscule_by_exhaustion(rs: &RootSystem, mu: &Coweight) -> bool {
    let r = rs.rank();
    let theta = rs.highest_root().unwrap().simple_coords().to_vec();
    let budget = dot(&theta, mu.coords());
    let cartan: Vec<Vec<BigRational>> = rs
        .cartan()
        .iter()
        .map(|row| row.iter().map(|&x| q(x)).collect())
        .collect();
    let mut lambda = vec![0i64; r];
    fn walk(
        k: usize,
        left: i64,
        lambda: &mut Vec<i64>,
        theta: &[i64],
        mu: &[i64],
        cartan: &[Vec<BigRational>],
    ) -> bool {
        if k == lambda.len() {
            if lambda.as_slice() == mu {
                return false;
            }
            let diff: Vec<BigRational> = mu
                .iter()
                .zip(lambda.iter())
                .map(|(a, b)| q(a - b))
                .collect();
            let x = solve(cartan, &diff).unwrap();
            return x.iter().all(|v| v.is_integer() && !v.is_negative());
        }
        let mut v = 0;
        while v * theta[k] <= left {
            lambda[k] = v;
            if walk(k + 1, left - v * theta[k], lambda, theta, mu, cartan) {
                return true;
            }
            v += 1;
        }
        lambda[k] = 0;
        false
    }
    !walk(0, budget, &mut lambda, &theta, mu.coords(), &cartan)
}

/// Classical closed forms for the exponents.
pub fn exponent_table(t: SimpleType) -> Vec<u32> {
    let n = t.rank() as u32;
    let mut e: Vec<u32> = match t.family() {
        Family::A => (1..=n).collect(),
        Family::B | Family::C => (1..=n).map(|i| 2 * i - 1).collect(),
        Family::D => (1..n).map(|i| 2 * i - 1).chain([n - 1]).collect(),
        Family::E => match n {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        Family::F => vec![1, 5, 7, 11],
        Family::G => vec![1, 5],
    };
    e.sort();
    e
}

pub fn weyl_group_order(t: SimpleType) -> u128 {
    let n = t.rank() as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match t.family() {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1_152,
        Family::G => 12,
    }
}

pub fn all_simple_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        for f in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            if let Ok(t) = SimpleType::new(f, rank) {
                out.push(t);
            }
        }
    }
    out
}

/// Every dominant coweight of the given rank with coordinates in `0..=max`.
pub fn dominant_box(rank: usize, max: i64) -> Vec<Coweight> {
    let mut out = Vec::new();
    let mut c = vec![0i64; rank];
    loop {
        out.push(Coweight::new(c.clone()));
        let mut k = 0;
        while k < rank {
            c[k] += 1;
            if c[k] <= max {
                break;
            }
            c[k] = 0;
            k += 1;
        }
        if k == rank {
            return out;
        }
    }
}

/// Polynomiality oracle via power series: `num / den` (with `den(0) = 1`) is a
/// polynomial iff its series has no terms past `deg num - deg den`.
pub fn series_is_polynomial(num: &IntPoly, den: &IntPoly) -> bool {
    let n = num.coeffs();
    let d = den.coeffs();
    assert!(d[0].is_one());
    let dn = n.len() as i64 - 1;
    let dd = d.len() as i64 - 1;
    let len = (dn + dd + 2).max(1) as usize;
    let mut s = vec![BigInt::zero(); len];
    for k in 0..len {
        let mut v = n.get(k).cloned().unwrap_or_default();
        for j in 1..d.len().min(k + 1) {
            v -= &d[j] * &s[k - j];
        }
        s[k] = v;
    }
    let first_tail = (dn - dd + 1).max(0) as usize;
    s[first_tail..].iter().all(Zero::is_zero)
}

/// Gaussian binomial `[n choose k]` by the q-Pascal rule.
pub fn gaussian_binomial(n: usize, k: usize) -> IntPoly {
    let mut table = vec![vec![IntPoly::zero(); k + 1]; n + 1];
    for m in 0..=n {
        table[m][0] = IntPoly::one();
        for j in 1..=k.min(m) {
            // [m, j] = [m-1, j-1] + t^j [m-1, j]
            let mut shifted = vec![BigInt::zero(); j];
            shifted.extend(table[m - 1][j].coeffs().iter().cloned());
            table[m][j] = &table[m - 1][j - 1] + &IntPoly::new(shifted);
        }
    }
    table[n][k].clone()
}
