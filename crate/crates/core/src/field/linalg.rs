//! Small dense linear algebra over F_2 bit masks and over F_q.

use alloc::vec::Vec;

use super::base::FieldCtx;

/// Solves sum z_j * cols[j] = target over F_2, vectors packed as bit masks.
pub fn solve_gf2(cols: &[u32], target: u32) -> Option<u32> {
    // Each pivot stores a reduced vector and the set of columns summing to it,
    // kept in decreasing order of leading bit.
    let mut pivots: Vec<(u32, u32)> = Vec::new();
    for (j, &c) in cols.iter().enumerate() {
        let (v, combo) = reduce_gf2(&pivots, c, 1 << j);
        if v != 0 {
            let at = pivots.partition_point(|&(p, _)| p.leading_zeros() < v.leading_zeros());
            pivots.insert(at, (v, combo));
        }
    }
    let (rest, combo) = reduce_gf2(&pivots, target, 0);
    (rest == 0).then_some(combo)
}

fn reduce_gf2(pivots: &[(u32, u32)], mut v: u32, mut combo: u32) -> (u32, u32) {
    for &(p, pc) in pivots {
        let top = 31 - p.leading_zeros();
        if v >> top & 1 == 1 {
            v ^= p;
            combo ^= pc;
        }
    }
    (v, combo)
}

/// Rank of a matrix over F_q given as rows.
pub fn rank(f: &FieldCtx, mut rows: Vec<Vec<u32>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for k in c..cols {
            rows[r][k] = f.mul(rows[r][k], inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for k in c..cols {
                    let t = f.mul(factor, rows[r][k]);
                    rows[i][k] = f.sub(rows[i][k], t);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Solves the square system `rows · z = rhs` over F_q, or `None` if singular.
pub fn solve(f: &FieldCtx, rows: &[Vec<u32>], rhs: &[u32]) -> Option<Vec<u32>> {
    let n = rows.len();
    let mut m: Vec<Vec<u32>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut r = r.clone();
            r.push(b);
            r
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n).find(|&i| m[i][c] != 0)?;
        m.swap(c, pivot);
        let inv = f.inv(m[c][c]).expect("pivot is nonzero");
        for k in c..=n {
            m[c][k] = f.mul(m[c][k], inv);
        }
        for i in 0..n {
            if i != c && m[i][c] != 0 {
                let factor = m[i][c];
                for k in c..=n {
                    let t = f.mul(factor, m[c][k]);
                    m[i][k] = f.sub(m[i][k], t);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn gf2_solutions() {
        let cols = [0b011, 0b110, 0b101];
        // The columns span only the even-weight vectors.
        assert_eq!(solve_gf2(&cols, 0b001), None);
        let z = solve_gf2(&cols, 0b101).unwrap();
        let img = (0..3).filter(|j| z >> j & 1 == 1).fold(0, |a, j| a ^ cols[j]);
        assert_eq!(img, 0b101);
    }

    #[test]
    fn rank_over_f5() {
        let f = FieldCtx::new(5, 1, None).unwrap();
        assert_eq!(rank(&f, vec![vec![1, 2, 3], vec![2, 4, 1], vec![0, 1, 1]]), 2);
        assert_eq!(rank(&f, vec![vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank(&f, vec![vec![0, 0]]), 0);
    }

    #[test]
    fn solve_over_f7() {
        let f = FieldCtx::new(7, 1, None).unwrap();
        let rows = vec![vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]];
        let z = solve(&f, &rows, &[5, 6, 2]).unwrap();
        for (r, b) in rows.iter().zip([5, 6, 2]) {
            let lhs = r.iter().zip(&z).fold(0, |acc, (&a, &x)| f.add(acc, f.mul(a, x)));
            assert_eq!(lhs, b);
        }
        assert_eq!(solve(&f, &[vec![1, 2], vec![2, 4]], &[1, 1]), None);
    }
}
