use num_complex::Complex64;

/// Nullspace basis of a complex matrix given as rows, by Gaussian
/// elimination with partial pivoting. The systems solved here have root-of-
/// unity coefficients, so a fixed tolerance on pivot magnitude is safe.
pub fn nullspace(rows: &[Vec<Complex64>], ncols: usize, tol: f64) -> Vec<Vec<Complex64>> {
    let mut a: Vec<Vec<Complex64>> = rows.to_vec();
    let nrows = a.len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0usize;
    for col in 0..ncols {
        // find the largest pivot in this column
        let mut best = row;
        for r in row..nrows {
            if a[r][col].norm() > a[best][col].norm() {
                best = r;
            }
        }
        if row >= nrows || a[best][col].norm() <= tol {
            continue;
        }
        a.swap(row, best);
        let p = a[row][col];
        for c in col..ncols {
            a[row][c] /= p;
        }
        for r in 0..nrows {
            if r != row {
                let f = a[r][col];
                if f.norm() > 0.0 {
                    for c in col..ncols {
                        let v = a[row][c];
                        a[r][c] -= f * v;
                    }
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let pivot_cols: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Complex64::new(0.0, 0.0); ncols];
        v[free] = Complex64::new(1.0, 0.0);
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -a[r][free];
        }
        basis.push(v);
    }
    basis
}
