//! Exchange-matrix isomorphism by backtracking search.

use crate::quiv::Quiver;
use num_bigint::BigInt;

/// Sorted row profile, a cheap invariant that prunes candidate images.
fn row_signature(q: &Quiver, i: usize) -> Vec<BigInt> {
    let mut sig: Vec<BigInt> = (0..q.vertex_count())
        .map(|j| q.entry(i, j).clone())
        .collect();
    sig.sort_unstable();
    sig
}

/// Find a vertex bijection carrying the matrix of `a` onto the matrix of `b`,
/// if one exists.  Returns `map` with `entry_b(map[i], map[j]) == entry_a(i, j)`.
/// Labels and markers are ignored; only the exchange data is compared.
pub fn is_isomorphic(a: &Quiver, b: &Quiver) -> Option<Vec<usize>> {
    let d = a.vertex_count();
    if b.vertex_count() != d {
        return None;
    }
    let sig_a: Vec<Vec<BigInt>> = (0..d).map(|i| row_signature(a, i)).collect();
    let sig_b: Vec<Vec<BigInt>> = (0..d).map(|i| row_signature(b, i)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }

    let mut map = vec![usize::MAX; d];
    let mut used = vec![false; d];
    fn assign(
        a: &Quiver,
        b: &Quiver,
        sig_a: &[Vec<BigInt>],
        sig_b: &[Vec<BigInt>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        let d = a.vertex_count();
        if i == d {
            return true;
        }
        for cand in 0..d {
            if used[cand] || sig_a[i] != sig_b[cand] {
                continue;
            }
            if (0..i).any(|p| {
                b.entry(map[p], cand) != a.entry(p, i) || b.entry(cand, map[p]) != a.entry(i, p)
            }) {
                continue;
            }
            map[i] = cand;
            used[cand] = true;
            if assign(a, b, sig_a, sig_b, map, used, i + 1) {
                return true;
            }
            used[cand] = false;
            map[i] = usize::MAX;
        }
        false
    }

    if assign(a, b, &sig_a, &sig_b, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}
