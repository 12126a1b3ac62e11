//! Closed-form values the computations are checked against.

/// `τ(T(p, q)) = (p − 1)(q − 1)/2`.
pub fn torus_tau(p: i64, q: i64) -> i64 {
    (p - 1) * (q - 1) / 2
}

/// d₁ of `K_p = T(2, p(p−1)+1) # −T(p, p+1)` for `p > 1`.
pub fn k_p_d1(p: i64) -> i64 {
    let h = (p - 1) / 2;
    match p.rem_euclid(4) {
        0 | 2 => -(p * p - 2 * p) / 4,
        1 => -h * h,
        _ => -h * h - 1,
    }
}

/// Representative staircase of `T(2, 8p+1) # T(4p, 4p+1)`: `2p² + 5p`
/// ones, then the odd numbers `3, 5, …, 4p − 1`, where the one after
/// `2i + 1` is preceded by `2p − 1 − i` ones.
pub fn j_p_plus_steps(p: u32) -> Vec<u32> {
    let mut out = vec![1; (2 * p * p + 5 * p) as usize];
    for i in 1..2 * p {
        out.push(2 * i + 1);
        out.extend(std::iter::repeat_n(1, (2 * p - 1 - i) as usize));
    }
    out
}

/// Levels `(A, M)` of `U^k x` along the tower of a staircase's reduced
/// complex: `A = τ − k − Σ_{j≤i}(α_j + α_{n+1−j})`,
/// `M = −2k − 2Σ_{j≤i} α_j`, for `0 ≤ k < α_{i+1}` and then linearly.
pub fn staircase_tower(steps: &[u32], len: usize) -> Vec<(i64, i64)> {
    let n = steps.len();
    let alpha = |j: usize| steps[j - 1] as i64;
    let tau: i64 = steps.iter().map(|&a| a as i64).sum();
    let mut out = Vec::with_capacity(len);
    for i in 0..=n {
        let prefix: i64 = (1..=i).map(alpha).sum();
        let both: i64 = (1..=i).map(|j| alpha(j) + alpha(n + 1 - j)).sum();
        let run = if i < n { alpha(i + 1) } else { i64::MAX };
        let mut k = 0;
        while k < run && out.len() < len {
            out.push((tau - k - both, -2 * (k + prefix)));
            k += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_p_values() {
        let v: Vec<i64> = (2..=7).map(k_p_d1).collect();
        assert_eq!(v, [0, -2, -2, -4, -6, -10]);
        assert!((2..40).all(|p| k_p_d1(p) % 2 == 0));
    }

    #[test]
    fn j_p_plus_shapes() {
        let mut two = vec![1; 18];
        two.extend([3, 1, 1, 5, 1, 7]);
        assert_eq!(j_p_plus_steps(2), two);
        let mut one = vec![1; 7];
        one.push(3);
        assert_eq!(j_p_plus_steps(1), one);
        // The genus is that of T(2, 8p+1) plus T(4p, 4p+1).
        for p in 1..6u32 {
            let g: u32 = j_p_plus_steps(p).iter().sum();
            assert_eq!(g as i64, torus_tau(2, 8 * p as i64 + 1) + torus_tau(4 * p as i64, 4 * p as i64 + 1));
        }
    }

    #[test]
    fn t27_tower() {
        assert_eq!(staircase_tower(&[1, 1, 1], 6), [(3, 0), (1, -2), (-1, -4), (-3, -6), (-4, -8), (-5, -10)]);
        assert_eq!(staircase_tower(&[], 3), [(0, 0), (-1, -2), (-2, -4)]);
    }
}
