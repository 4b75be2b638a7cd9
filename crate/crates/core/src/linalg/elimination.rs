use crate::scalar::Field;

/// Reduced row echelon form and pivot columns.
///
/// Exact scalars pivot on the first non-zero entry of a column; float
/// scalars pivot on the entry of largest magnitude.
pub fn row_echelon<F: Field>(rows: &[Vec<F>]) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let candidates = (r..m.len()).filter(|&i| !m[i][col].is_zero());
        let pivot = if m[r][col].tolerance().is_some() {
            candidates.max_by(|&i, &j| {
                m[i][col].to_complex().norm().total_cmp(&m[j][col].to_complex().norm())
            })
        } else {
            candidates.min()
        };
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = F::one() / m[r][col].clone();
        m[r] = m[r].iter().map(|x| inv.clone() * x.clone()).collect();
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                m[i] = m[i]
                    .iter()
                    .zip(&m[r])
                    .map(|(x, y)| x.clone() - f.clone() * y.clone())
                    .collect();
            }
        }
        pivots.push(col);
        r += 1;
    }
    (m, pivots)
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    row_echelon(rows).1.len()
}

/// Basis of `{x : rows · x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let (m, pivots) = row_echelon(rows);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![F::zero(); ncols];
            x[free] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -m[row][free].clone();
            }
            x
        })
        .collect()
}
