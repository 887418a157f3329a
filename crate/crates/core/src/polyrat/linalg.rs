use crate::exactnum::Field;

/// One solution of `A x = b` by Gaussian elimination (free variables set to
/// zero), or `None` when the system is inconsistent.
pub fn solve_linear<F: Field>(a: &[Vec<F>], b: &[F], ncols: usize) -> Option<Vec<F>> {
    solve_affine(a, b, ncols).map(|(x, _)| x)
}

/// Solution set of `A x = b`: a particular solution and a basis of the kernel.
pub fn solve_affine<F: Field>(a: &[Vec<F>], b: &[F], ncols: usize) -> Option<(Vec<F>, Vec<Vec<F>>)> {
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.resize(ncols, F::zero());
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for v in m[row].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=ncols {
                    let d = f.clone() * m[row][j].clone();
                    m[i][j] = m[i][j].clone() - d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][ncols].clone();
    }
    let mut kernel = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -m[i][free].clone();
        }
        kernel.push(v);
    }
    Some((x, kernel))
}

/// Dimension of the solution space of the homogeneous system `A x = 0`.
pub fn nullity<F: Field>(a: &[Vec<F>], ncols: usize) -> usize {
    let mut m: Vec<Vec<F>> = a.to_vec();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone() * inv.clone();
            for j in col..ncols {
                let d = f.clone() * m[rank][j].clone();
                m[i][j] = m[i][j].clone() - d;
            }
        }
        rank += 1;
    }
    ncols - rank
}
