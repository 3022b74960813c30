//! Shared helpers for the integration tests: small invertible potentials
//! built from Fermat, chain and loop blocks, and independent oracles.

#![allow(dead_code)]

pub mod props;

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use bhk_mirror::linalg::Rat;
use bhk_mirror::model::Potential;

/// One block of an invertible potential, with its exponents.
#[derive(Clone, Debug)]
pub enum Block {
    Fermat(i64),
    Chain(Vec<i64>),
    Loop(Vec<i64>),
}

impl Block {
    fn size(&self) -> usize {
        match self {
            Block::Fermat(_) => 1,
            Block::Chain(a) | Block::Loop(a) => a.len(),
        }
    }
}

/// Block-diagonal exponent matrix: chains `x_1^a_1 x_2 + ... + x_n^a_n`,
/// loops `x_1^a_1 x_2 + ... + x_n^a_n x_1`.
pub fn block_matrix(blocks: &[Block]) -> Vec<Vec<i64>> {
    let d: usize = blocks.iter().map(Block::size).sum();
    let mut rows = Vec::with_capacity(d);
    let mut at = 0;
    for b in blocks {
        let n = b.size();
        let exps: Vec<i64> = match b {
            Block::Fermat(a) => vec![*a],
            Block::Chain(a) | Block::Loop(a) => a.clone(),
        };
        for (i, &a) in exps.iter().enumerate() {
            let mut row = vec![0; d];
            row[at + i] = a;
            if i + 1 < n {
                row[at + i + 1] = 1;
            } else if matches!(b, Block::Loop(_)) {
                row[at] = 1;
            }
            rows.push(row);
        }
        at += n;
    }
    rows
}

/// Block layouts of total size `d`.
fn layouts(d: usize, exps: &[i64]) -> Vec<Vec<Block>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for size in 1..=d {
        let mut heads: Vec<Block> = Vec::new();
        if size == 1 {
            heads.extend(exps.iter().map(|&a| Block::Fermat(a)));
        } else {
            for tuple in tuples(size, exps) {
                heads.push(Block::Chain(tuple.clone()));
                heads.push(Block::Loop(tuple));
            }
        }
        for head in heads {
            for rest in layouts(d - size, exps) {
                let mut v = vec![head.clone()];
                v.extend(rest);
                out.push(v);
            }
        }
    }
    out
}

fn tuples(n: usize, exps: &[i64]) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for t in tuples(n - 1, exps) {
        for &a in exps {
            let mut v = t.clone();
            v.push(a);
            out.push(v);
        }
    }
    out
}

/// Every block potential with `2 <= d <= max_d`, exponents in `exps`,
/// integral weight sum (so `J` lies in `SL`) and `ĉ <= max_c_hat`,
/// deduplicated by exponent matrix.
pub fn cy_pool(max_d: usize, exps: &[i64], max_c_hat: i64) -> Vec<Potential> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for d in 2..=max_d {
        for layout in layouts(d, exps) {
            let m = block_matrix(&layout);
            if !seen.insert(m.clone()) {
                continue;
            }
            let Ok(p) = Potential::new(m, None) else {
                continue;
            };
            let sum: Rat = p.q().iter().sum();
            if !sum.is_integer() || sum.is_zero() {
                continue;
            }
            let c_hat = d as i64 - 2 * sum.to_integer().try_into().unwrap_or(0i64);
            if c_hat < 0 || c_hat > max_c_hat {
                continue;
            }
            out.push(p);
        }
    }
    out
}

/// Poincaré polynomial `Π (1 - t^{1-q_j}) / (1 - t^{q_j})` of the Milnor
/// ring, by weighted degree, from power-series arithmetic alone.
pub fn poincare_polynomial(q: &[Rat]) -> BTreeMap<Rat, i64> {
    let l = q
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let l: i64 = l.try_into().expect("small denominator");
    let w: Vec<i64> = q
        .iter()
        .map(|x| {
            (x * Rat::from_integer(l.into()))
                .to_integer()
                .try_into()
                .unwrap()
        })
        .collect();
    // numerator Π (1 - t^{l - w_j}) times the series Π 1/(1 - t^{w_j}),
    // truncated just past the socle degree Σ (l - 2 w_j)
    let top: i64 = w.iter().map(|wj| l - 2 * wj).sum();
    let len = (top + 1 + l) as usize;
    let mut series = vec![0i64; len];
    series[0] = 1;
    for &wj in &w {
        let (a, b) = ((l - wj) as usize, wj as usize);
        for i in (a..len).rev() {
            series[i] -= series[i - a];
        }
        for i in b..len {
            series[i] += series[i - b];
        }
    }
    assert!(
        series[(top + 1) as usize..].iter().all(|&c| c == 0),
        "Poincaré series is not a polynomial"
    );
    series
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (Rat::new((i as i64).into(), l.into()), c))
        .collect()
}

/// Every block potential with `1 <= d <= max_d` and exponents in `exps`.
pub fn block_pool(max_d: usize, exps: &[i64]) -> Vec<Potential> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for d in 1..=max_d {
        for layout in layouts(d, exps) {
            let m = block_matrix(&layout);
            if seen.insert(m.clone()) {
                if let Ok(p) = Potential::new(m, None) {
                    out.push(p);
                }
            }
        }
    }
    out
}
