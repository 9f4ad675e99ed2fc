//! Permutation helpers.

/// All permutations of `0..n` with their signs (Heap's algorithm).
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![(a.clone(), 1)];
    let mut c = vec![0usize; n];
    let mut sign = 1;
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Sign of the permutation given as images of `0..n`.
pub fn sign_of(perm: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_signs_match_inversions() {
        for n in 1..=5 {
            let perms = permutations_with_sign(n);
            assert_eq!(perms.len(), (1..=n).product::<usize>());
            for (p, s) in perms {
                assert_eq!(sign_of(&p), s);
            }
        }
    }
}
