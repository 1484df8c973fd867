#![allow(dead_code)]

use stablerep::thoma::ThomaParams;
use stablerep::stable::CanonicalStateSpec;
use stablerep::Partition;

pub fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

pub fn spec(n: usize, l: &[usize], a: &[f64], b: &[f64]) -> CanonicalStateSpec {
    CanonicalStateSpec::new(n, part(l), ThomaParams::new(a.to_vec(), b.to_vec()).unwrap()).unwrap()
}

/// Littlewood–Richardson coefficient `c^ν_{λμ}`: fillings of `ν/λ` that are
/// semistandard with content `μ` and whose reverse reading word is a
/// lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() + mu.weight() != nu.weight() || (0..lambda.len()).any(|i| lambda.row(i) > nu.row(i)) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.row(r)..nu.row(r)).map(move |c| (r, c)))
        .collect();
    let mut filling = vec![vec![0usize; nu.row(0)]; nu.len()];
    let mut count = vec![0usize; mu.len()];
    let mut total = 0;
    fill(0, &cells, lambda, mu, &mut filling, &mut count, &mut total);
    total
}

fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    filling: &mut Vec<Vec<usize>>,
    count: &mut Vec<usize>,
    total: &mut u64,
) {
    if idx == cells.len() {
        if is_lattice(cells, filling, mu.len()) {
            *total += 1;
        }
        return;
    }
    let (r, c) = cells[idx];
    for v in 1..=mu.len() {
        if count[v - 1] == mu.row(v - 1) {
            continue;
        }
        if c > lambda.row(r) && filling[r][c - 1] > v {
            continue;
        }
        if r > 0 && c >= lambda.row(r - 1) && filling[r - 1][c] >= v {
            continue;
        }
        filling[r][c] = v;
        count[v - 1] += 1;
        fill(idx + 1, cells, lambda, mu, filling, count, total);
        count[v - 1] -= 1;
        filling[r][c] = 0;
    }
}

fn is_lattice(cells: &[(usize, usize)], filling: &[Vec<usize>], letters: usize) -> bool {
    let mut seen = vec![0usize; letters + 1];
    for (r, cols) in filling.iter().enumerate() {
        let mut row: Vec<usize> = cells.iter().filter(|(rr, _)| *rr == r).map(|&(_, c)| c).collect();
        row.reverse();
        for c in row {
            let v = cols[c];
            seen[v] += 1;
            if v > 1 && seen[v] > seen[v - 1] {
                return false;
            }
        }
    }
    true
}
